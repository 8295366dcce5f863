//! Classical world-line models of free particles carrying three independent
//! proper times, the wave functions and 6D metric geometry they induce, and
//! geometric occupancy statistics.
//!
//! The crate is generic over its floating-point scalar (see [`num::Real`]);
//! the `*F64`/`*F32` aliases below pin the common concrete choices. All
//! internal math uses natural units (hbar = c = 1).

pub mod cli;
pub mod fields;
pub mod geometry;
pub mod num;
pub mod spacetime;
pub mod statistics;
pub mod worldlines;

pub use num::Real;

/// Default-precision aliases.
pub type Event6F64 = spacetime::Event6<f64>;
pub type Tangent6F64 = spacetime::Tangent6<f64>;
pub type ParticleSpecF64 = worldlines::ParticleSpec<f64>;
pub type WorldlineSetF64 = worldlines::WorldlineSet<f64>;
pub type Metric6F64 = geometry::Metric6<f64>;
pub type ResidualReportF64 = geometry::ResidualReport<f64>;
pub type CellF64 = statistics::Cell<f64>;

/// Single-precision aliases.
pub type Event6F32 = spacetime::Event6<f32>;
pub type Tangent6F32 = spacetime::Tangent6<f32>;
pub type ParticleSpecF32 = worldlines::ParticleSpec<f32>;
