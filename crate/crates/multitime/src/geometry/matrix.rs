//! Small dense 6x6 complex matrix support for the metric engine.

use crate::num::{re, Real, C};
use num_complex::Complex;

pub const DIM: usize = 6;

/// Symmetric-by-construction 6x6 matrix with complex entries. Real metrics
/// simply carry zero imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix6<T>(pub [[C<T>; DIM]; DIM]);

impl<T: Real> Matrix6<T> {
    pub fn zero() -> Self {
        Self([[Complex::new(T::zero(), T::zero()); DIM]; DIM])
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> C<T>) -> Self {
        let mut m = Self::zero();
        for a in 0..DIM {
            for b in 0..DIM {
                m.0[a][b] = f(a, b);
            }
        }
        m
    }

    pub fn diagonal(d: [T; DIM]) -> Self {
        let mut m = Self::zero();
        for (a, v) in d.into_iter().enumerate() {
            m.0[a][a] = re(v);
        }
        m
    }

    /// Flat 6D background diag(1, -1, -1, -1, 1, -1).
    pub fn flat() -> Self {
        Self::diagonal([
            T::one(),
            -T::one(),
            -T::one(),
            -T::one(),
            T::one(),
            -T::one(),
        ])
    }

    pub fn get(&self, a: usize, b: usize) -> C<T> {
        self.0[a][b]
    }

    /// Largest |m_ab - m_ba|.
    pub fn symmetry_defect(&self) -> T {
        let mut worst = T::zero();
        for a in 0..DIM {
            for b in (a + 1)..DIM {
                let d = (self.0[a][b] - self.0[b][a]).norm();
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> T {
        let mut worst = T::zero();
        for row in &self.0 {
            for v in row {
                if v.norm() > worst {
                    worst = v.norm();
                }
            }
        }
        worst
    }

    /// Max absolute row sum (infinity norm on moduli).
    pub fn inf_norm(&self) -> T {
        let mut worst = T::zero();
        for row in &self.0 {
            let mut s = T::zero();
            for v in row {
                s += v.norm();
            }
            if s > worst {
                worst = s;
            }
        }
        worst
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(|a, b| self.0[a][b] - other.0[a][b])
    }

    /// Gauss-Jordan inverse with partial pivoting on entry modulus. Returns
    /// the inverse and an infinity-norm condition estimate.
    #[allow(clippy::needless_range_loop)]
    pub fn inverse(&self) -> Result<(Self, T), T> {
        let mut a = self.0;
        #[allow(clippy::needless_range_loop)]
        let mut inv = Self::from_fn(|r, c| {
            if r == c {
                re(T::one())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        })
        .0;
        let scale = self.inf_norm().max(T::min_positive_value());

        for col in 0..DIM {
            let mut pivot_row = col;
            let mut best = a[col][col].norm();
            for r in (col + 1)..DIM {
                if a[r][col].norm() > best {
                    best = a[r][col].norm();
                    pivot_row = r;
                }
            }
            if best <= scale * T::of(1e-14) {
                // singular within working precision; report a pessimistic
                // condition estimate.
                return Err(scale / best.max(T::min_positive_value()));
            }
            a.swap(col, pivot_row);
            inv.swap(col, pivot_row);
            let pivot = a[col][col];
            for c in 0..DIM {
                a[col][c] /= pivot;
                inv[col][c] /= pivot;
            }
            for r in 0..DIM {
                if r != col {
                    let factor = a[r][col];
                    if factor.norm() > T::zero() {
                        for c in 0..DIM {
                            let (ac, ic) = (a[col][c], inv[col][c]);
                            a[r][c] -= factor * ac;
                            inv[r][c] -= factor * ic;
                        }
                    }
                }
            }
        }
        let inv = Self(inv);
        let condition = self.inf_norm() * inv.inf_norm();
        Ok((inv, condition))
    }
}
