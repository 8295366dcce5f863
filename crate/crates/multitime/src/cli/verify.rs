//! The residual verification suite driven by `multitime verify`: one
//! ResidualReport per check, every tolerance pinned here.

use crate::fields::{
    dirac_components, k_vector, ladder_decompose, KVectorConfig, PlaneWaveVector, ScalarWave,
    WaveForm,
};
use crate::geometry::{
    coulomb_check, interval, kg_residual, local_flat_transform, proca_residual, FdProbe, Metric6,
    ResidualReport,
};
use crate::num::{i as imag, re};
use crate::spacetime::Event6;
use crate::worldlines::{spinless_moving_sigma, Orientation, ParticleSpec};
use num_complex::Complex;

/// Check-group names accepted by `--checks`.
pub const GROUPS: [&str; 6] = ["kg", "proca", "coulomb", "interval", "ladder", "dirac"];

pub struct VerifySettings {
    pub step: f64,
    pub order: u8,
    /// Shell defect injected into the on-shell Klein-Gordon fixture; a
    /// nonzero value makes that check fail by construction.
    pub inject_offshell: f64,
    pub groups: Vec<String>,
}

impl Default for VerifySettings {
    fn default() -> Self {
        Self {
            step: 1e-3,
            order: 4,
            inject_offshell: 0.0,
            groups: GROUPS.iter().map(|s| s.to_string()).collect(),
        }
    }
}

fn deterministic_stream(seed: u64) -> impl FnMut() -> f64 {
    let mut state = seed;
    move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    }
}

pub fn run_suite(settings: &VerifySettings) -> Vec<ResidualReport<f64>> {
    let mut reports = Vec::new();
    let probe = |e: Event6<f64>| FdProbe {
        event: e,
        step: settings.step,
        order: settings.order,
    };

    for group in &settings.groups {
        match group.as_str() {
            "kg" => {
                let p = [0.5, -0.3, 0.2];
                let m0: f64 = 1.0;
                let p2 = p.iter().map(|v| v * v).sum::<f64>();
                let energy = (p2 + m0 * m0 + settings.inject_offshell).sqrt();
                let w = ScalarWave::new(energy, p, m0, WaveForm::Exponential);
                reports.push(kg_residual(
                    &w,
                    &probe(Event6::new(0.2, 0.4, -0.1, 0.7, 0.0, 0.3)),
                    1e-6,
                ));

                // off-shell defect 0.1: residual must equal it within 5%.
                let delta = 0.1;
                let off =
                    ScalarWave::new((p2 + m0 * m0 + delta).sqrt(), p, m0, WaveForm::Exponential);
                let raw = kg_residual(
                    &off,
                    &probe(Event6::new(0.3, 0.1, 0.0, 0.0, 0.0, 0.0)),
                    f64::INFINITY,
                );
                reports.push(ResidualReport::new(
                    "klein-gordon-off-shell-deviation",
                    (raw.value / delta - 1.0).abs(),
                    5e-2,
                    format!("raw residual {:.6e} vs defect {delta}", raw.value),
                ));
            }
            "proca" => {
                // Maxwell limit: massless transverse on-shell.
                let maxwell = PlaneWaveVector::new(
                    [re(0.0), re(1.0), re(0.0), re(0.0)],
                    1.0,
                    [0.0, 0.0, 1.0],
                );
                let out = proca_residual(
                    &maxwell,
                    0.0,
                    &probe(Event6::new(0.1, 0.2, 0.3, 0.4, 0.0, 0.0)),
                    1e-6,
                );
                reports.push(out.report);
                reports.push(ResidualReport::new(
                    "maxwell-invariant",
                    out.invariant.norm(),
                    1e-6,
                    "quarter F^2 of the free photon plane wave",
                ));

                // massive on-shell with the Lorenz condition.
                let m0: f64 = 0.8;
                let p3: f64 = 0.6;
                let massive = PlaneWaveVector::new(
                    [re(0.0), re(0.7), imag::<f64>() * re(0.2), re(0.0)],
                    (p3 * p3 + m0 * m0).sqrt(),
                    [0.0, 0.0, p3],
                );
                let out = proca_residual(
                    &massive,
                    m0,
                    &probe(Event6::new(0.4, -0.2, 0.1, 0.9, 0.0, 0.0)),
                    1e-6,
                );
                reports.push(out.report);

                // deliberately broken fixture: longitudinal polarization must
                // leave a residual above 0.1; report the shortfall.
                let broken = PlaneWaveVector::new(
                    [re(0.0), re(0.0), re(0.0), re(1.0)],
                    1.0,
                    [0.0, 0.0, 1.0],
                );
                let out = proca_residual(
                    &broken,
                    0.0,
                    &probe(Event6::new(0.1, 0.0, 0.0, 0.3, 0.0, 0.0)),
                    f64::INFINITY,
                );
                reports.push(ResidualReport::new(
                    "proca-longitudinal-violation-shortfall",
                    (0.1 - out.report.value).max(0.0),
                    0.0,
                    format!(
                        "broken-fixture residual {:.6e} must exceed 0.1",
                        out.report.value
                    ),
                ));
            }
            "coulomb" => {
                for r in [0.5, 1.0, 2.0] {
                    let rep =
                        coulomb_check(1.0, &probe(Event6::new(0.0, r, 0.0, 0.0, 0.0, 0.0)), 1e-5)
                            .expect("probe far from origin");
                    reports.push(ResidualReport::new(
                        format!("coulomb-r{r}"),
                        rep.value,
                        rep.tolerance,
                        rep.context,
                    ));
                }
            }
            "interval" => {
                let mut rnd = deterministic_stream(101);
                let pw = PlaneWaveVector::new(
                    [
                        Complex::new(0.4, -0.2),
                        Complex::new(0.1, 0.3),
                        Complex::new(-0.6, 0.0),
                        Complex::new(0.2, 0.5),
                    ],
                    1.1,
                    [0.2, 0.3, -0.1],
                );
                let fermion =
                    ParticleSpec::fermion(1.0, [0.2, -0.1, 0.4], Orientation::PlusX3).unwrap();
                let metrics: Vec<(&str, Metric6<f64>)> = vec![
                    ("interval-identity-vector", Metric6::vector_plane_wave(pw)),
                    (
                        "interval-identity-fermion",
                        Metric6::fermion_from_spec(fermion, KVectorConfig::default()),
                    ),
                ];
                for (name, m) in &metrics {
                    let mut worst = 0.0f64;
                    for _ in 0..100 {
                        let e = Event6::new(rnd(), rnd(), rnd(), rnd(), rnd(), rnd());
                        let d = [rnd(), rnd(), rnd(), rnd(), rnd(), rnd()];
                        let full = interval(m, d, &e);
                        let flat = local_flat_transform(m, d, &e).expect("supported kind");
                        worst = worst.max((full - flat).norm());
                    }
                    reports.push(ResidualReport::new(
                        *name,
                        worst,
                        1e-12,
                        "max |full - completed-square| over 100 random displacements",
                    ));
                }
            }
            "ladder" => {
                let mut rnd = deterministic_stream(733);
                let specs = [
                    ParticleSpec::spinless(1.0, [0.5, 0.0, 0.0]).unwrap(),
                    ParticleSpec::boson(1.3, 0.4).unwrap(),
                ];
                let mut worst = 0.0f64;
                for spec in &specs {
                    let p = spec.momentum();
                    for _ in 0..100 {
                        let t = 3.0 * rnd();
                        let x = [3.0 * rnd(), 3.0 * rnd(), 3.0 * rnd()];
                        let pair = ladder_decompose(spec, t).unwrap();
                        worst = worst
                            .max((pair.recompose(p, x) - spinless_moving_sigma(spec, t, x)).abs());
                    }
                }
                reports.push(ResidualReport::new(
                    "ladder-round-trip",
                    worst,
                    1e-12,
                    "decompose-recompose vs direct cosine, both classes",
                ));
            }
            "dirac" => {
                let mut rnd = deterministic_stream(947);
                let mut worst_ratio = 0.0f64;
                let mut worst_norm = 0.0f64;
                for _ in 0..100 {
                    let u = [0.4 * rnd(), 0.4 * rnd(), 0.4 * rnd() + 0.45];
                    let spec = ParticleSpec::fermion(1.0, u, Orientation::PlusX3).unwrap();
                    let e = Event6::new(rnd(), rnd(), rnd(), rnd(), 0.0, 0.0);
                    let d = dirac_components(&spec, &e).unwrap();
                    let p = spec.momentum();
                    let expected = Complex::new(p[0], p[1]) / p[2];
                    worst_ratio = worst_ratio.max((d.psi1 / d.psi2 - expected).norm());
                    worst_norm =
                        worst_norm.max((d.normalization() - spec.energy() / spec.m0).abs());
                    // K construction sanity rides along.
                    let k = k_vector(&spec, &e, &KVectorConfig::default()).unwrap();
                    worst_ratio = worst_ratio.max((k.k1 / k.k3 - d.psi1 / d.psi2).norm());
                }
                reports.push(ResidualReport::new(
                    "dirac-component-ratio",
                    worst_ratio,
                    1e-12,
                    "psi1/psi2 vs (p1 + i p2)/p3 over 100 random velocities",
                ));
                reports.push(ResidualReport::new(
                    "dirac-normalization",
                    worst_norm,
                    1e-12,
                    "|psi1|^2 + |psi2|^2 + cosh^2(a/2) vs E/m0",
                ));
            }
            other => {
                reports.push(ResidualReport::new(
                    format!("unknown-check-{other}"),
                    f64::INFINITY,
                    0.0,
                    "unrecognized check group",
                ));
            }
        }
    }
    reports
}
