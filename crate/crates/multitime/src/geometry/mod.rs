//! 6D metric families, numerical connection and curvature, and
//! field-equation residual checks.

#[allow(clippy::needless_range_loop)]
mod curvature;
mod matrix;
mod metric;
#[allow(clippy::needless_range_loop)]
mod residuals;

pub use curvature::{
    christoffel, d1, d2, d_mixed, einstein_tensor, ricci_tensor, Christoffel, EinsteinTensor,
    FdProbe,
};
pub use matrix::{Matrix6, DIM};
pub use metric::{
    interval, local_flat_transform, metric_dot, Field, MatrixField, Metric6, MetricKind, VecField,
};
pub use residuals::{
    coulomb_check, kg_residual, proca_residual, ProcaOutcome, ResidualReport, Verdict,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("metric singular at probe (condition estimate {condition:.3e})")]
    SingularMetric { condition: f64 },
    #[error("probe at r = {r} is within 10 steps ({step}) of the origin singularity")]
    SingularityProximity { r: f64, step: f64 },
    #[error("operation not defined for metric kind {0}")]
    UnsupportedKind(MetricKind),
    #[error("bad probe: {0}")]
    BadProbe(String),
}
