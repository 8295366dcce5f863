//! Numerical connection and curvature of a 6D metric via central finite
//! differences of configurable order.

use super::matrix::{Matrix6, DIM};
use super::metric::Metric6;
use super::GeometryError;
use crate::num::{re, Real, C};
use crate::spacetime::Event6;
use num_complex::Complex;

/// Finite-difference probe: where and how to differentiate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdProbe<T> {
    pub event: Event6<T>,
    pub step: T,
    pub order: u8,
}

impl<T: Real> FdProbe<T> {
    pub fn new(event: Event6<T>, step: T, order: u8) -> Result<Self, GeometryError> {
        if step <= T::zero() || !step.is_finite() {
            return Err(GeometryError::BadProbe("step must be positive".into()));
        }
        if order != 2 && order != 4 {
            return Err(GeometryError::BadProbe(format!(
                "order {order} not in {{2, 4}}"
            )));
        }
        Ok(Self { event, step, order })
    }

    /// Default probe: order-4 stencil with step 1e-3 natural units.
    pub fn at(event: Event6<T>) -> Self {
        Self {
            event,
            step: T::of(1e-3),
            order: 4,
        }
    }

    pub fn with_step(mut self, step: T) -> Self {
        self.step = step;
        self
    }

    fn shifted(&self, dir: usize, offset: T) -> Event6<T> {
        let mut c = self.event.coords();
        c[dir] += offset;
        Event6::from_coords(c)
    }
}

/// First derivative of a complex-valued function along coordinate `dir`.
pub fn d1<T: Real, F>(f: F, probe: &FdProbe<T>, dir: usize) -> C<T>
where
    F: Fn(&Event6<T>) -> C<T>,
{
    let h = probe.step;
    match probe.order {
        2 => {
            let fp = f(&probe.shifted(dir, h));
            let fm = f(&probe.shifted(dir, -h));
            (fp - fm) / re(T::of(2.0) * h)
        }
        _ => {
            let f2p = f(&probe.shifted(dir, T::of(2.0) * h));
            let fp = f(&probe.shifted(dir, h));
            let fm = f(&probe.shifted(dir, -h));
            let f2m = f(&probe.shifted(dir, -T::of(2.0) * h));
            (-f2p + fp * re(T::of(8.0)) - fm * re(T::of(8.0)) + f2m) / re(T::of(12.0) * h)
        }
    }
}

/// Second derivative along a single coordinate direction.
pub fn d2<T: Real, F>(f: F, probe: &FdProbe<T>, dir: usize) -> C<T>
where
    F: Fn(&Event6<T>) -> C<T>,
{
    let h = probe.step;
    let h2 = h * h;
    match probe.order {
        2 => {
            let fp = f(&probe.shifted(dir, h));
            let f0 = f(&probe.event);
            let fm = f(&probe.shifted(dir, -h));
            (fp - f0 * re(T::of(2.0)) + fm) / re(h2)
        }
        _ => {
            let f2p = f(&probe.shifted(dir, T::of(2.0) * h));
            let fp = f(&probe.shifted(dir, h));
            let f0 = f(&probe.event);
            let fm = f(&probe.shifted(dir, -h));
            let f2m = f(&probe.shifted(dir, -T::of(2.0) * h));
            (-f2p + fp * re(T::of(16.0)) - f0 * re(T::of(30.0)) + fm * re(T::of(16.0)) - f2m)
                / re(T::of(12.0) * h2)
        }
    }
}

/// Mixed partial d_a d_b via nested first-derivative stencils.
pub fn d_mixed<T: Real, F>(f: F, probe: &FdProbe<T>, a: usize, b: usize) -> C<T>
where
    F: Fn(&Event6<T>) -> C<T>,
{
    if a == b {
        return d2(f, probe, a);
    }
    d1(
        |e: &Event6<T>| {
            let inner = FdProbe {
                event: *e,
                step: probe.step,
                order: probe.order,
            };
            d1(&f, &inner, b)
        },
        probe,
        a,
    )
}

/// Rank-3 array of connection coefficients Gamma^a_{bc}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Christoffel<T> {
    pub gamma: [[[C<T>; DIM]; DIM]; DIM],
    /// Infinity-norm condition estimate of the metric inverse at the probe.
    pub condition: T,
}

fn metric_derivatives<T: Real>(m: &Metric6<T>, probe: &FdProbe<T>) -> [Matrix6<T>; DIM] {
    let h = probe.step;
    let mut out = [Matrix6::zero(); DIM];
    for (dir, slot) in out.iter_mut().enumerate() {
        *slot = match probe.order {
            2 => {
                let gp = m.evaluate(&probe.shifted(dir, h));
                let gm = m.evaluate(&probe.shifted(dir, -h));
                Matrix6::from_fn(|a, b| (gp.0[a][b] - gm.0[a][b]) / re(T::of(2.0) * h))
            }
            _ => {
                let g2p = m.evaluate(&probe.shifted(dir, T::of(2.0) * h));
                let gp = m.evaluate(&probe.shifted(dir, h));
                let gm = m.evaluate(&probe.shifted(dir, -h));
                let g2m = m.evaluate(&probe.shifted(dir, -T::of(2.0) * h));
                Matrix6::from_fn(|a, b| {
                    (-g2p.0[a][b] + gp.0[a][b] * re(T::of(8.0)) - gm.0[a][b] * re(T::of(8.0))
                        + g2m.0[a][b])
                        / re(T::of(12.0) * h)
                })
            }
        };
    }
    out
}

/// Gamma^a_{bc} = 1/2 g^{ad} (d_b g_{dc} + d_c g_{db} - d_d g_{bc}).
pub fn christoffel<T: Real>(
    m: &Metric6<T>,
    probe: &FdProbe<T>,
) -> Result<Christoffel<T>, GeometryError> {
    let g = m.evaluate(&probe.event);
    let (ginv, condition) = g.inverse().map_err(|cond| GeometryError::SingularMetric {
        condition: cond.to_f64().unwrap_or(f64::INFINITY),
    })?;
    let dg = metric_derivatives(m, probe);

    let half = re(T::of(0.5));
    let mut gamma = [[[Complex::new(T::zero(), T::zero()); DIM]; DIM]; DIM];
    for a in 0..DIM {
        for b in 0..DIM {
            for c in b..DIM {
                let mut s = Complex::new(T::zero(), T::zero());
                for d in 0..DIM {
                    s += ginv.0[a][d] * (dg[b].0[d][c] + dg[c].0[d][b] - dg[d].0[b][c]);
                }
                let v = half * s;
                gamma[a][b][c] = v;
                gamma[a][c][b] = v;
            }
        }
    }
    Ok(Christoffel { gamma, condition })
}

/// Ricci tensor R_{bd} = d_a Gamma^a_{db} - d_d Gamma^a_{ab}
///                      + Gamma^a_{ae} Gamma^e_{db} - Gamma^a_{de} Gamma^e_{ab}.
pub fn ricci_tensor<T: Real>(
    m: &Metric6<T>,
    probe: &FdProbe<T>,
) -> Result<Matrix6<T>, GeometryError> {
    let center = christoffel(m, probe)?;

    // Gamma at the stencil offsets of every direction.
    let h = probe.step;
    let offsets: Vec<T> = match probe.order {
        2 => vec![h, -h],
        _ => vec![T::of(2.0) * h, h, -h, -T::of(2.0) * h],
    };
    // dgamma[dir][a][b][c] = d_dir Gamma^a_{bc}
    let mut dgamma = [[[[Complex::new(T::zero(), T::zero()); DIM]; DIM]; DIM]; DIM];
    for dir in 0..DIM {
        let mut gammas = Vec::with_capacity(offsets.len());
        for off in &offsets {
            let p = FdProbe {
                event: probe.shifted(dir, *off),
                step: probe.step,
                order: probe.order,
            };
            gammas.push(christoffel(m, &p)?);
        }
        for a in 0..DIM {
            for b in 0..DIM {
                for c in 0..DIM {
                    dgamma[dir][a][b][c] = match probe.order {
                        2 => {
                            (gammas[0].gamma[a][b][c] - gammas[1].gamma[a][b][c])
                                / re(T::of(2.0) * h)
                        }
                        _ => {
                            (-gammas[0].gamma[a][b][c] + gammas[1].gamma[a][b][c] * re(T::of(8.0))
                                - gammas[2].gamma[a][b][c] * re(T::of(8.0))
                                + gammas[3].gamma[a][b][c])
                                / re(T::of(12.0) * h)
                        }
                    };
                }
            }
        }
    }

    let gm = &center.gamma;
    Ok(Matrix6::from_fn(|b, d| {
        let mut s = Complex::new(T::zero(), T::zero());
        for a in 0..DIM {
            s += dgamma[a][a][d][b] - dgamma[d][a][a][b];
            for e in 0..DIM {
                s += gm[a][a][e] * gm[e][d][b] - gm[a][d][e] * gm[e][a][b];
            }
        }
        s
    }))
}

/// Einstein tensor with scalar curvature and a step-halving truncation
/// estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EinsteinTensor<T> {
    pub g: Matrix6<T>,
    pub ricci: Matrix6<T>,
    pub scalar: C<T>,
    /// max |G(h) - G(h/2)| / (2^order - 1), a truncation-error estimate for
    /// the returned (finer-step) tensor.
    pub truncation_estimate: T,
}

type CurvatureParts<T> = (Matrix6<T>, Matrix6<T>, C<T>);

fn einstein_at<T: Real>(
    m: &Metric6<T>,
    probe: &FdProbe<T>,
) -> Result<CurvatureParts<T>, GeometryError> {
    let ricci = ricci_tensor(m, probe)?;
    let g = m.evaluate(&probe.event);
    let (ginv, _) = g.inverse().map_err(|cond| GeometryError::SingularMetric {
        condition: cond.to_f64().unwrap_or(f64::INFINITY),
    })?;
    let mut scalar = Complex::new(T::zero(), T::zero());
    for b in 0..DIM {
        for d in 0..DIM {
            scalar += ginv.0[b][d] * ricci.0[b][d];
        }
    }
    let half = re(T::of(0.5));
    let gt = Matrix6::from_fn(|a, b| ricci.0[a][b] - half * g.0[a][b] * scalar);
    Ok((gt, ricci, scalar))
}

/// G_{AB} = R_{AB} - 1/2 g_{AB} R via the finite-difference connection.
pub fn einstein_tensor<T: Real>(
    m: &Metric6<T>,
    probe: &FdProbe<T>,
) -> Result<EinsteinTensor<T>, GeometryError> {
    let (coarse, _, _) = einstein_at(m, probe)?;
    let fine_probe = FdProbe {
        step: probe.step * T::of(0.5),
        ..*probe
    };
    let (fine, ricci, scalar) = einstein_at(m, &fine_probe)?;
    let denom = T::of(2.0).powi(probe.order as i32) - T::one();
    let truncation_estimate = coarse.sub(&fine).max_norm() / denom;
    Ok(EinsteinTensor {
        g: fine,
        ricci,
        scalar,
        truncation_estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::re;

    fn flat_metric() -> Metric6<f64> {
        Metric6::custom(|_| Matrix6::flat())
    }

    /// diag(1, -e^{2 x0}, -1, -1, 1, -1): Gamma^1_{01} = 1 exactly.
    fn exp_metric() -> Metric6<f64> {
        Metric6::custom(|e: &Event6<f64>| {
            let mut m = Matrix6::flat();
            m.0[1][1] = re(-(2.0 * e.x0).exp());
            m
        })
    }

    /// Unit 2-sphere in (x1, x2) = (theta, phi), flat elsewhere:
    /// Ricci_11 = 1, Ricci_22 = sin^2(x1).
    pub(crate) fn sphere_metric() -> Metric6<f64> {
        Metric6::custom(|e: &Event6<f64>| {
            let mut m = Matrix6::diagonal([1.0, 1.0, 1.0, -1.0, 1.0, -1.0]);
            m.0[2][2] = re(e.x1.sin().powi(2));
            m
        })
    }

    #[test]
    fn flat_metric_has_zero_connection_and_curvature() {
        let m = flat_metric();
        let probe = FdProbe::at(Event6::new(0.3, -0.2, 0.9, 0.1, 0.5, -0.7));
        let ch = christoffel(&m, &probe).unwrap();
        for a in 0..DIM {
            for b in 0..DIM {
                for c in 0..DIM {
                    assert!(ch.gamma[a][b][c].norm() < 1e-10);
                }
            }
        }
        let et = einstein_tensor(&m, &probe).unwrap();
        assert!(et.g.max_norm() < 1e-8);
    }

    #[test]
    fn christoffel_symmetry_in_lower_indices() {
        let m = exp_metric();
        let probe = FdProbe::at(Event6::new(0.1, 0.0, 0.0, 0.0, 0.0, 0.0));
        let ch = christoffel(&m, &probe).unwrap();
        for a in 0..DIM {
            for b in 0..DIM {
                for c in 0..DIM {
                    assert!((ch.gamma[a][b][c] - ch.gamma[a][c][b]).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn christoffel_exp_fixture_frozen_value() {
        // order-2, step 1e-3: Gamma^1_{01} = 1 within 2e-6 (symbolic oracle).
        let m = exp_metric();
        let probe = FdProbe::new(Event6::new(0.2, 0.0, 0.0, 0.0, 0.0, 0.0), 1e-3, 2).unwrap();
        let ch = christoffel(&m, &probe).unwrap();
        assert!((ch.gamma[1][0][1].re - 1.0).abs() < 2e-6);
        assert!(ch.gamma[1][0][1].im.abs() < 1e-12);
    }

    #[test]
    fn sphere_ricci_matches_symbolic() {
        let m = sphere_metric();
        let e = Event6::new(0.0, 0.7, 0.3, 0.0, 0.0, 0.0);
        let probe = FdProbe {
            event: e,
            step: 1e-2,
            order: 4,
        };
        let ricci = ricci_tensor(&m, &probe).unwrap();
        let g = m.evaluate(&e);
        // sphere block: Ricci = metric of the sphere factor.
        assert!((ricci.0[1][1] - g.0[1][1]).norm() < 1e-5);
        assert!((ricci.0[2][2] - g.0[2][2]).norm() < 1e-5);
        // flat directions stay flat.
        assert!(ricci.0[0][0].norm() < 1e-6);
        assert!(ricci.0[3][3].norm() < 1e-6);
    }

    #[test]
    fn einstein_tensor_symmetric() {
        let m = sphere_metric();
        let probe = FdProbe {
            event: Event6::new(0.0, 0.8, 0.1, 0.0, 0.0, 0.0),
            step: 1e-2,
            order: 4,
        };
        let et = einstein_tensor(&m, &probe).unwrap();
        assert!(et.g.symmetry_defect() < 1e-10);
        assert!(et.truncation_estimate < 1e-6);
    }

    #[test]
    fn stencil_convergence_on_curved_fixtures() {
        // halving the step reduces the christoffel and Ricci errors by at
        // least 2^(order-0.5).
        let m = sphere_metric();
        let e = Event6::new(0.0, 0.7, 0.0, 0.0, 0.0, 0.0);
        let exact = |x1: f64| (1.0, x1.sin().powi(2));
        for order in [2u8, 4u8] {
            let mut errs = Vec::new();
            for step in [0.08, 0.04] {
                let probe = FdProbe {
                    event: e,
                    step,
                    order,
                };
                let r = ricci_tensor(&m, &probe).unwrap();
                let (e11, e22) = exact(e.x1);
                let err = (r.0[1][1].re - e11).abs().max((r.0[2][2].re - e22).abs());
                errs.push(err);
            }
            let ratio = errs[0] / errs[1];
            let want = 2f64.powf(order as f64 - 0.5);
            assert!(ratio >= want, "ricci order {order}: ratio {ratio} < {want}");
        }

        // christoffel on the exponential fixture: Gamma^1_{01} = 1 exactly.
        let m = exp_metric();
        let e = Event6::new(0.3, 0.0, 0.0, 0.0, 0.0, 0.0);
        for order in [2u8, 4u8] {
            let gamma_err = |step: f64| {
                let ch = christoffel(
                    &m,
                    &FdProbe {
                        event: e,
                        step,
                        order,
                    },
                )
                .unwrap();
                (ch.gamma[1][0][1].re - 1.0).abs()
            };
            let ratio = gamma_err(0.08) / gamma_err(0.04);
            let want = 2f64.powf(order as f64 - 0.5);
            assert!(
                ratio >= want,
                "christoffel order {order}: ratio {ratio} < {want}"
            );
        }
    }

    #[test]
    fn singular_metric_rejected_with_condition() {
        let m = Metric6::custom(|_| {
            let mut g = Matrix6::flat();
            g.0[4][4] = re(0.0);
            g.0[4][5] = re(0.0);
            g.0[5][4] = re(0.0);
            g.0[5][5] = re(0.0);
            g
        });
        let probe = FdProbe::at(Event6::origin());
        match christoffel(&m, &probe) {
            Err(GeometryError::SingularMetric { condition }) => assert!(condition > 1e10),
            other => panic!("expected singular metric, got {other:?}"),
        }
    }

    #[test]
    fn probe_validation() {
        assert!(FdProbe::new(Event6::<f64>::origin(), 0.0, 4).is_err());
        assert!(FdProbe::new(Event6::<f64>::origin(), 1e-3, 3).is_err());
        assert!(FdProbe::new(Event6::<f64>::origin(), 1e-3, 2).is_ok());
    }
}
