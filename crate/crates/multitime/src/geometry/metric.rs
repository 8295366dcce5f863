//! The four 6D metric families and their interval forms.
//!
//! All four share the flat 4D block g_ab = diag(1,-1,-1,-1) and differ in how
//! the two extra time coordinates couple:
//!   scalar:          diag block, g44 = psi^2, g55 = -1
//!   vector:          g_ab + A_a A_b block, g_a4 = A_a, g44 = 1, g55 = -1
//!   electromagnetic: as vector plus g_a5 = A5 A_a, g45 = A5, g55 = -1 + A5^2
//!   fermion:         as electromagnetic with K_a, K5 in place of A_a, A5 and
//!                    the vector-style K_a K_b block
//! Complex field values make the matrix complex; the cosine wave form keeps
//! it real and is the default for curvature probes.

use super::matrix::Matrix6;
use super::GeometryError;
use crate::fields::{k_vector, KVectorConfig, PlaneWaveVector, ScalarWave};
use crate::num::{re, Real, C};
use crate::spacetime::Event6;
use crate::worldlines::ParticleSpec;
use num_complex::Complex;

pub type Field<T> = Box<dyn Fn(&Event6<T>) -> C<T> + Send + Sync>;
pub type VecField<T> = Box<dyn Fn(&Event6<T>) -> [C<T>; 4] + Send + Sync>;
pub type MatrixField<T> = Box<dyn Fn(&Event6<T>) -> Matrix6<T> + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricKind {
    Scalar,
    Vector,
    Electromagnetic,
    Fermion,
    Custom,
}

impl std::fmt::Display for MetricKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Self::Scalar => "scalar",
            Self::Vector => "vector",
            Self::Electromagnetic => "electromagnetic",
            Self::Fermion => "fermion",
            Self::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// Position-dependent symmetric 6x6 metric.
pub enum Metric6<T> {
    Scalar {
        psi: Field<T>,
    },
    Vector {
        a: VecField<T>,
    },
    Electromagnetic {
        a: VecField<T>,
        a5: Field<T>,
    },
    Fermion {
        k: VecField<T>,
        k5: Field<T>,
    },
    /// Arbitrary evaluator; used for numerical fixtures.
    Custom {
        eval: MatrixField<T>,
    },
}

const ETA4: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

impl<T: Real> Metric6<T> {
    pub fn kind(&self) -> MetricKind {
        match self {
            Self::Scalar { .. } => MetricKind::Scalar,
            Self::Vector { .. } => MetricKind::Vector,
            Self::Electromagnetic { .. } => MetricKind::Electromagnetic,
            Self::Fermion { .. } => MetricKind::Fermion,
            Self::Custom { .. } => MetricKind::Custom,
        }
    }

    /// Scalar-family metric from a plane wave psi.
    pub fn scalar_wave(w: ScalarWave<T>) -> Self {
        Self::Scalar {
            psi: Box::new(move |e| crate::fields::scalar_psi(&w, e)),
        }
    }

    /// Vector-family metric from a plane-wave potential.
    pub fn vector_plane_wave(a: PlaneWaveVector<T>) -> Self {
        Self::Vector {
            a: Box::new(move |e| a.evaluate(e)),
        }
    }

    /// Electromagnetic-family metric of a static Coulomb potential
    /// A5 = charge / r, A_a = 0.
    pub fn coulomb(charge: T) -> Self {
        Self::Electromagnetic {
            a: Box::new(|_| [Complex::new(T::zero(), T::zero()); 4]),
            a5: Box::new(move |e| {
                let r = crate::spacetime::dot3(e.spatial(), e.spatial()).sqrt();
                re(charge / r)
            }),
        }
    }

    /// Fermion-family metric built from the K construction of a fermion spec.
    pub fn fermion_from_spec(spec: ParticleSpec<T>, cfg: KVectorConfig<T>) -> Self {
        let spec2 = spec;
        let cfg2 = cfg;
        Self::Fermion {
            k: Box::new(move |e| {
                let k = k_vector(&spec, e, &cfg).expect("fermion spec");
                k.sector4()
            }),
            k5: Box::new(move |e| k_vector(&spec2, e, &cfg2).expect("fermion spec").k5),
        }
    }

    pub fn custom(eval: impl Fn(&Event6<T>) -> Matrix6<T> + Send + Sync + 'static) -> Self {
        Self::Custom {
            eval: Box::new(eval),
        }
    }

    /// Evaluate the full 6x6 matrix at an event.
    pub fn evaluate(&self, e: &Event6<T>) -> Matrix6<T> {
        let zero = Complex::new(T::zero(), T::zero());
        let eta = |a: usize| re(T::of(ETA4[a]));
        match self {
            Self::Scalar { psi } => {
                let p = psi(e);
                let mut m = Matrix6::flat();
                m.0[4][4] = p * p;
                m
            }
            Self::Vector { a } => {
                let av = a(e);
                Matrix6::from_fn(|r, c| match (r, c) {
                    (r, c) if r < 4 && c < 4 => {
                        let diag = if r == c { eta(r) } else { zero };
                        diag + av[r] * av[c]
                    }
                    (r, 4) if r < 4 => av[r],
                    (4, c) if c < 4 => av[c],
                    (4, 4) => re(T::one()),
                    (5, 5) => re(-T::one()),
                    _ => zero,
                })
            }
            Self::Electromagnetic { a, a5 } => {
                let av = a(e);
                let a5v = a5(e);
                Self::charged_block(&av, a5v)
            }
            Self::Fermion { k, k5 } => {
                let kv = k(e);
                let k5v = k5(e);
                Self::charged_block(&kv, k5v)
            }
            Self::Custom { eval } => eval(e),
        }
    }

    /// Shared block layout of the electromagnetic and fermion families.
    fn charged_block(av: &[C<T>; 4], a5: C<T>) -> Matrix6<T> {
        let zero = Complex::new(T::zero(), T::zero());
        Matrix6::from_fn(|r, c| match (r, c) {
            (r, c) if r < 4 && c < 4 => {
                let diag = if r == c { re(T::of(ETA4[r])) } else { zero };
                diag + av[r] * av[c]
            }
            (r, 4) if r < 4 => av[r],
            (4, c) if c < 4 => av[c],
            (r, 5) if r < 4 => a5 * av[r],
            (5, c) if c < 4 => a5 * av[c],
            (4, 4) => re(T::one()),
            (4, 5) | (5, 4) => a5,
            (5, 5) => re(-T::one()) + a5 * a5,
            _ => zero,
        })
    }
}

/// Interval ds^2 = g_AB dx^A dx^B at an event.
pub fn interval<T: Real>(m: &Metric6<T>, displacement: [T; 6], e: &Event6<T>) -> C<T> {
    let g = m.evaluate(e);
    let mut s = Complex::new(T::zero(), T::zero());
    for a in 0..6 {
        for b in 0..6 {
            s += g.0[a][b] * re(displacement[a] * displacement[b]);
        }
    }
    s
}

/// Bilinear product g_AB a^A b^B at an event: the metric-context extension of
/// the bare 4D Minkowski dot, where the (x4, x5) sector contributes through
/// the metric (e.g. +psi^2, -1 for the scalar family).
pub fn metric_dot<T: Real>(
    m: &Metric6<T>,
    a: &crate::spacetime::Tangent6<T>,
    b: &crate::spacetime::Tangent6<T>,
    e: &Event6<T>,
) -> C<T> {
    let g = m.evaluate(e);
    let mut s = Complex::new(T::zero(), T::zero());
    for r in 0..6 {
        for c in 0..6 {
            s += g.0[r][c] * re(a.components[r] * b.components[c]);
        }
    }
    s
}

/// Interval in the adapted coordinate that absorbs the off-diagonal blocks:
///   vector:  eta dx dx - dx5^2 + (A_a dx^a + dx4)^2
///   fermion: eta dx dx - dx5^2 + (K_a dx^a + K5 dx5 + dx4)^2
/// This must equal [`interval`] identically.
pub fn local_flat_transform<T: Real>(
    m: &Metric6<T>,
    displacement: [T; 6],
    e: &Event6<T>,
) -> Result<C<T>, GeometryError> {
    let d = displacement;
    let mut eta_part = Complex::new(T::zero(), T::zero());
    for a in 0..4 {
        eta_part += re(T::of(ETA4[a]) * d[a] * d[a]);
    }
    eta_part -= re(d[5] * d[5]);
    match m {
        Metric6::Vector { a } => {
            let av = a(e);
            let mut dx4_new = re(d[4]);
            for alpha in 0..4 {
                dx4_new += av[alpha] * re(d[alpha]);
            }
            Ok(eta_part + dx4_new * dx4_new)
        }
        Metric6::Fermion { k, k5 } => {
            let kv = k(e);
            let mut dx4_new = re(d[4]) + k5(e) * re(d[5]);
            for alpha in 0..4 {
                dx4_new += kv[alpha] * re(d[alpha]);
            }
            Ok(eta_part + dx4_new * dx4_new)
        }
        other => Err(GeometryError::UnsupportedKind(other.kind())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::WaveForm;
    use crate::worldlines::Orientation;

    fn rnd_stream(seed: u64) -> impl FnMut() -> f64 {
        let mut state = seed;
        move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
        }
    }

    #[test]
    fn scalar_metric_with_unit_psi_is_flat() {
        // psi = cos(0) = 1 identically: zero momentum, zero mass.
        let w = ScalarWave::new(0.0, [0.0; 3], 0.0, WaveForm::Cosine);
        let m = Metric6::scalar_wave(w);
        let g = m.evaluate(&Event6::new(0.3, -0.7, 0.2, 1.0, 0.4, -0.9));
        assert_eq!(g.sub(&Matrix6::flat()).max_norm(), 0.0);
    }

    #[test]
    fn vector_metric_with_zero_potential_is_flat() {
        let m = Metric6::Vector {
            a: Box::new(|_| [num_complex::Complex::new(0.0, 0.0); 4]),
        };
        let g = m.evaluate(&Event6::origin());
        assert_eq!(g.sub(&Matrix6::flat()).max_norm(), 0.0);
    }

    #[test]
    fn coulomb_entry_55_frozen() {
        // A5 = e/r at r = 2, e = 1: (5,5) = -1 + 0.25 (oracle).
        let m = Metric6::coulomb(1.0);
        let g = m.evaluate(&Event6::new(0.0f64, 2.0, 0.0, 0.0, 0.0, 0.0));
        assert!((g.get(5, 5).re - (-0.75)).abs() < 1e-12);
        assert_eq!(g.get(5, 5).im, 0.0);
        // off-diagonal x5 row couples through A5 * A_a = 0 here.
        assert_eq!(g.get(0, 5).norm(), 0.0);
        assert!((g.get(4, 5).re - 0.5).abs() < 1e-12);
    }

    #[test]
    fn vector_metric_entries_match_block_form_independently() {
        // expected entries computed straight from the polarization and the
        // plane-wave phase, not through the metric evaluator.
        let eps = [
            num_complex::Complex::new(0.3, 0.1),
            num_complex::Complex::new(-0.2, 0.4),
            num_complex::Complex::new(0.0, 0.7),
            num_complex::Complex::new(0.5, -0.3),
        ];
        let (energy, p) = (1.2f64, [0.3, -0.4, 0.5]);
        let m = Metric6::vector_plane_wave(PlaneWaveVector::new(eps, energy, p));
        let eta = [1.0, -1.0, -1.0, -1.0];
        let mut rnd = rnd_stream(31);
        for _ in 0..1000 {
            let e = Event6::new(rnd(), rnd(), rnd(), rnd(), rnd(), rnd());
            let g = m.evaluate(&e);
            let phase = num_complex::Complex::new(
                0.0,
                energy * e.x0 - p[0] * e.x1 - p[1] * e.x2 - p[2] * e.x3,
            )
            .exp();
            let a: Vec<num_complex::Complex<f64>> = eps.iter().map(|v| v * phase).collect();
            for r in 0..4 {
                for c in 0..4 {
                    let diag = if r == c { eta[r] } else { 0.0 };
                    let expect = num_complex::Complex::new(diag, 0.0) + a[r] * a[c];
                    assert!((g.get(r, c) - expect).norm() < 1e-13);
                }
                assert!((g.get(r, 4) - a[r]).norm() < 1e-13);
                assert_eq!(g.get(r, 5).norm(), 0.0);
            }
            assert_eq!(g.get(4, 4).re, 1.0);
            assert_eq!(g.get(5, 5).re, -1.0);
            assert_eq!(g.get(4, 5).norm(), 0.0);
            assert!(g.symmetry_defect() < 1e-13);
        }
    }

    #[test]
    fn metrics_are_symmetric_and_match_block_forms() {
        let mut rnd = rnd_stream(3);
        let pw = PlaneWaveVector::new(
            [
                num_complex::Complex::new(0.3, 0.1),
                num_complex::Complex::new(-0.2, 0.4),
                num_complex::Complex::new(0.0, 0.7),
                num_complex::Complex::new(0.5, -0.3),
            ],
            1.2,
            [0.3, -0.4, 0.5],
        );
        let metrics: Vec<Metric6<f64>> = vec![
            Metric6::scalar_wave(ScalarWave::new(
                1.0,
                [0.5, 0.0, 0.0],
                0.9,
                WaveForm::Exponential,
            )),
            Metric6::vector_plane_wave(pw),
            Metric6::coulomb(0.7),
        ];
        for m in &metrics {
            for _ in 0..250 {
                let e = Event6::new(rnd(), rnd() + 2.0, rnd(), rnd(), rnd(), rnd());
                let g = m.evaluate(&e);
                assert!(g.symmetry_defect() < 1e-13);
            }
        }
    }

    #[test]
    fn scalar_time_sector_determinant_is_minus_psi_squared() {
        let w = ScalarWave::new(1.0, [0.3, 0.0, 0.0], 0.8, WaveForm::Cosine);
        let psi = move |e: &Event6<f64>| crate::fields::scalar_psi(&w, e);
        let m = Metric6::scalar_wave(w);
        let mut rnd = rnd_stream(9);
        for _ in 0..100 {
            let e = Event6::new(rnd(), rnd(), rnd(), rnd(), rnd(), rnd());
            let g = m.evaluate(&e);
            let det = g.get(4, 4) * g.get(5, 5) - g.get(4, 5) * g.get(5, 4);
            let p = psi(&e);
            assert!((det + p * p).norm() < 1e-13);
        }
    }

    #[test]
    fn metric_dot_extends_minkowski_into_the_time_sector() {
        use crate::spacetime::{minkowski_dot, ProperTimeKind, Tangent6};
        let w = ScalarWave::new(1.0, [0.3, 0.0, 0.0], 0.8, WaveForm::Cosine);
        let psi = move |e: &Event6<f64>| crate::fields::scalar_psi(&w, e);
        let m = Metric6::scalar_wave(w);
        let e = Event6::new(0.4, 0.7, 0.0, 0.0, 0.1, -0.2);
        // pure x4 tangent picks up +psi^2, pure x5 picks up -1.
        let t4 = Tangent6::new([0.0, 0.0, 0.0, 0.0, 1.0, 0.0], ProperTimeKind::Sigma).unwrap();
        let t5 = Tangent6::new([0.0, 0.0, 0.0, 0.0, 0.0, 1.0], ProperTimeKind::Phi).unwrap();
        let p = psi(&e);
        assert!((metric_dot(&m, &t4, &t4, &e) - p * p).norm() < 1e-13);
        assert!((metric_dot(&m, &t5, &t5, &e).re - (-1.0)).abs() < 1e-13);
        // on the 4D sector it reduces to the bare Minkowski dot.
        let a = Tangent6::new([1.0, 0.5, -0.2, 0.3, 0.0, 0.0], ProperTimeKind::Tau).unwrap();
        let b = Tangent6::new([0.5, 1.0, 0.1, -0.4, 0.0, 0.0], ProperTimeKind::Sigma).unwrap();
        assert!((metric_dot(&m, &a, &b, &e).re - minkowski_dot(&a, &b)).abs() < 1e-13);
    }

    #[test]
    fn interval_flat_unit_displacement() {
        let w = ScalarWave::new(0.0, [0.0; 3], 0.0, WaveForm::Cosine);
        let m = Metric6::scalar_wave(w);
        let ds2 = interval(&m, [1.0, 0.0, 0.0, 0.0, 0.0, 0.0], &Event6::origin());
        assert_eq!(ds2.re, 1.0);
        assert_eq!(ds2.im, 0.0);
    }

    #[test]
    fn local_flat_identity_vector_and_fermion() {
        let mut rnd = rnd_stream(17);
        let pw = PlaneWaveVector::new(
            [
                num_complex::Complex::new(0.4, -0.2),
                num_complex::Complex::new(0.1, 0.3),
                num_complex::Complex::new(-0.6, 0.0),
                num_complex::Complex::new(0.2, 0.5),
            ],
            1.1,
            [0.2, 0.3, -0.1],
        );
        let spec = ParticleSpec::fermion(1.0, [0.2, -0.1, 0.4], Orientation::PlusX3).unwrap();
        let metrics = vec![
            Metric6::vector_plane_wave(pw),
            Metric6::fermion_from_spec(spec, KVectorConfig::default()),
        ];
        for m in &metrics {
            for _ in 0..100 {
                let e = Event6::new(rnd(), rnd(), rnd(), rnd(), rnd(), rnd());
                let d = [rnd(), rnd(), rnd(), rnd(), rnd(), rnd()];
                let full = interval(m, d, &e);
                let flat = local_flat_transform(m, d, &e).unwrap();
                assert!((full - flat).norm() < 1e-12, "kind {:?}", m.kind());
            }
        }
    }

    #[test]
    fn local_flat_rejects_scalar_kind() {
        let w = ScalarWave::new(0.0, [0.0; 3], 0.0, WaveForm::Cosine);
        let m = Metric6::scalar_wave(w);
        assert!(local_flat_transform(&m, [0.0; 6], &Event6::origin()).is_err());
    }

    #[test]
    fn zero_potential_local_flat_is_trivial() {
        let m = Metric6::Vector {
            a: Box::new(|_| [num_complex::Complex::new(0.0, 0.0); 4]),
        };
        let d = [0.3, 0.1, -0.2, 0.5, 0.7, -0.4];
        let flat = local_flat_transform(&m, d, &Event6::origin()).unwrap();
        let expect = 0.3f64 * 0.3 - 0.1 * 0.1 - 0.2 * 0.2 - 0.5 * 0.5 + 0.7 * 0.7 - 0.4 * 0.4;
        assert!((flat.re - expect).abs() < 1e-14);
    }
}
