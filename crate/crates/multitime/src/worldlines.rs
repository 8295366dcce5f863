//! Sampled world lines for the four particle classes, the plane-wave proper
//! time fields they trace, and the de Broglie intersection lattice.
//!
//! All proper-time fields are cosine-valued with amplitude pi. A world line
//! sample stores a strictly increasing curve parameter `s` (the proper time
//! itself, or the rest-frame arc coordinate for spacelike lines) together
//! with the 6D event it lands on.

use crate::num::Real;
use crate::spacetime::{boost, lorentz_factor, Event6, KinematicsError, ProperTimeKind};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum WorldlineError {
    #[error("coordinate {value} outside the one-wavelength domain [0, {max})")]
    Domain { value: f64, max: f64 },
    #[error("zero wave number gives a degenerate wave")]
    DegenerateWave,
    #[error("lattice spacing undefined at zero group speed")]
    DegenerateLattice,
    #[error("operation not defined for particle class {0}")]
    UnsupportedClass(&'static str),
    #[error("invalid particle spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Kinematics(#[from] KinematicsError),
}

/// Spin orientation of a fermion: which half sphere the phi rotation fills.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    PlusX3,
    MinusX3,
}

impl Orientation {
    pub fn sign<T: Real>(self) -> T {
        match self {
            Self::PlusX3 => T::one(),
            Self::MinusX3 => -T::one(),
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Self::PlusX3 => Self::MinusX3,
            Self::MinusX3 => Self::PlusX3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParticleClass {
    Spinless,
    Photon,
    Boson,
    Fermion,
}

impl ParticleClass {
    pub fn name(self) -> &'static str {
        match self {
            Self::Spinless => "spinless",
            Self::Photon => "photon",
            Self::Boson => "boson",
            Self::Fermion => "fermion",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "spinless" => Some(Self::Spinless),
            "photon" => Some(Self::Photon),
            "boson" => Some(Self::Boson),
            "fermion" => Some(Self::Fermion),
            _ => None,
        }
    }
}

impl std::fmt::Display for ParticleClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Free-particle description: class, rest mass, frame velocity and the
/// class-specific magnitudes.
///
/// The field-magnitude coefficients (e0, b0, v10, v20) scale the transverse
/// extent of the oscillation lines; they default to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleSpec<T> {
    pub class: ParticleClass,
    pub m0: T,
    pub u: [T; 3],
    /// Photon wave number (k along x3).
    pub wave_number: T,
    /// Photon electric / magnetic magnitude coefficients.
    pub e0: T,
    pub b0: T,
    /// Boson vector-field magnitude coefficients.
    pub v10: T,
    pub v20: T,
    /// Fermion spin orientation.
    pub orientation: Orientation,
}

impl<T: Real> ParticleSpec<T> {
    pub fn spinless(m0: T, u: [T; 3]) -> Result<Self, WorldlineError> {
        Self::massive(ParticleClass::Spinless, m0, u)
    }

    /// Boson moving along x3, the canonical axis frame of the model.
    pub fn boson(m0: T, u3: T) -> Result<Self, WorldlineError> {
        Self::massive(ParticleClass::Boson, m0, [T::zero(), T::zero(), u3])
    }

    pub fn fermion(m0: T, u: [T; 3], orientation: Orientation) -> Result<Self, WorldlineError> {
        let mut s = Self::massive(ParticleClass::Fermion, m0, u)?;
        s.orientation = orientation;
        Ok(s)
    }

    /// Photon with wave vector k e3; it moves at c along x3 and is exactly
    /// massless.
    pub fn photon(wave_number: T) -> Result<Self, WorldlineError> {
        if wave_number <= T::zero() || !wave_number.is_finite() {
            return Err(WorldlineError::DegenerateWave);
        }
        Ok(Self {
            class: ParticleClass::Photon,
            m0: T::zero(),
            u: [T::zero(), T::zero(), T::one()],
            wave_number,
            e0: T::one(),
            b0: T::one(),
            v10: T::one(),
            v20: T::one(),
            orientation: Orientation::PlusX3,
        })
    }

    fn massive(class: ParticleClass, m0: T, u: [T; 3]) -> Result<Self, WorldlineError> {
        if m0 <= T::zero() || !m0.is_finite() {
            return Err(WorldlineError::InvalidSpec(format!(
                "rest mass must be positive for {class}"
            )));
        }
        lorentz_factor(u)?;
        Ok(Self {
            class,
            m0,
            u,
            wave_number: T::zero(),
            e0: T::one(),
            b0: T::one(),
            v10: T::one(),
            v20: T::one(),
            orientation: Orientation::PlusX3,
        })
    }

    pub fn with_photon_magnitudes(mut self, e0: T, b0: T) -> Self {
        self.e0 = e0;
        self.b0 = b0;
        self
    }

    pub fn with_boson_magnitudes(mut self, v10: T, v20: T) -> Self {
        self.v10 = v10;
        self.v20 = v20;
        self
    }

    pub fn speed(&self) -> T {
        crate::spacetime::dot3(self.u, self.u).sqrt()
    }

    pub fn gamma(&self) -> T {
        lorentz_factor(self.u).expect("validated at construction")
    }

    /// Energy in natural units: gamma*m0 for massive classes, omega = k for
    /// the photon.
    pub fn energy(&self) -> T {
        match self.class {
            ParticleClass::Photon => self.wave_number,
            _ => self.gamma() * self.m0,
        }
    }

    /// 3-momentum: gamma*m0*u for massive classes, k e3 for the photon.
    pub fn momentum(&self) -> [T; 3] {
        match self.class {
            ParticleClass::Photon => [T::zero(), T::zero(), self.wave_number],
            _ => {
                let gm = self.gamma() * self.m0;
                [gm * self.u[0], gm * self.u[1], gm * self.u[2]]
            }
        }
    }

    /// Compton wavelength h/(m0 c) = 2*pi/m0, the one-wavelength domain of
    /// the rest oscillation.
    pub fn compton_wavelength(&self) -> T {
        T::two_pi() / self.m0
    }

    /// Fermion rotation radius r0 = h/(2 m0 c) = pi/m0.
    pub fn fermion_radius(&self) -> T {
        T::PI() / self.m0
    }
}

// ---------------------------------------------------------------------------
// proper-time fields
// ---------------------------------------------------------------------------

/// 4D plane-wave phase (E t - p.x)/hbar.
pub fn plane_phase<T: Real>(energy: T, p: [T; 3], t: T, x: [T; 3]) -> T {
    energy * t - crate::spacetime::dot3(p, x)
}

/// pi * cos of the 4D plane-wave phase, the common cosine form of all
/// oscillation proper times.
pub fn plane_sigma<T: Real>(energy: T, p: [T; 3], t: T, x: [T; 3]) -> T {
    T::PI() * plane_phase(energy, p, t, x).cos()
}

/// Rest-frame oscillation of the spinless particle: sigma = pi cos(m0 x1),
/// restricted to one wavelength 0 <= x1 < h/(m0 c).
pub fn spinless_rest_sigma<T: Real>(x1: T, m0: T) -> Result<T, WorldlineError> {
    let max = T::two_pi() / m0;
    if x1 < T::zero() || x1 >= max || !x1.is_finite() {
        return Err(WorldlineError::Domain {
            value: x1.to_f64().unwrap_or(f64::NAN),
            max: max.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(T::PI() * (m0 * x1).cos())
}

/// Full 6D event on the rest-frame sigma world line: x1 = x5, x0 = x2 = x3 = 0,
/// x4 = sigma.
pub fn spinless_rest_event<T: Real>(x1: T, m0: T) -> Result<Event6<T>, WorldlineError> {
    let sigma = spinless_rest_sigma(x1, m0)?;
    Ok(Event6::new(T::zero(), x1, T::zero(), T::zero(), sigma, x1))
}

/// Moving-frame sigma of the spinless particle as a function of lab (t, x):
/// sigma = pi cos(E t - p.x) with relativistic E, p.
pub fn spinless_moving_sigma<T: Real>(spec: &ParticleSpec<T>, t: T, x: [T; 3]) -> T {
    plane_sigma(spec.energy(), spec.momentum(), t, x)
}

/// Sigma evaluated on a full 6D event: pi cos(E x0 - p.x - m0 x5).
///
/// The x5 term is what carries the rest-frame spatial oscillation into a
/// moving frame: on the rest sigma world line (x0 = 0, x5 = x1) this reduces
/// to the rest form, and the phase is invariant under a 4D-sector boost.
pub fn sigma_at_event<T: Real>(spec: &ParticleSpec<T>, e: &Event6<T>) -> T {
    let phase = plane_phase(spec.energy(), spec.momentum(), e.x0, e.spatial()) - spec.m0 * e.x5;
    T::PI() * phase.cos()
}

/// Photon sigma (and phi: they share one phase): pi cos(omega t - k x3) with
/// omega = c k.
pub fn photon_sigma<T: Real>(spec: &ParticleSpec<T>, t: T, x3: T) -> Result<T, WorldlineError> {
    if spec.class != ParticleClass::Photon {
        return Err(WorldlineError::UnsupportedClass(spec.class.name()));
    }
    let k = spec.wave_number;
    if k == T::zero() {
        return Err(WorldlineError::DegenerateWave);
    }
    Ok(T::PI() * (k * t - k * x3).cos())
}

/// Boson sigma = phi = tau: all three proper times share the plane-wave
/// cosine pi cos(E t - p.x).
pub fn boson_sigma<T: Real>(spec: &ParticleSpec<T>, t: T, x: [T; 3]) -> T {
    plane_sigma(spec.energy(), spec.momentum(), t, x)
}

/// Spatial support direction of each boson world line: sigma along e1, phi
/// along e2, tau along e3 (the direction of motion).
pub fn boson_support<T: Real>(kind: ProperTimeKind) -> [T; 3] {
    match kind {
        ProperTimeKind::Sigma => [T::one(), T::zero(), T::zero()],
        ProperTimeKind::Phi => [T::zero(), T::one(), T::zero()],
        ProperTimeKind::Tau => [T::zero(), T::zero(), T::one()],
    }
}

/// Principal-branch arccos of sigma/pi, the inverse accessor of the cosine
/// world lines; result in [0, pi].
pub fn principal_arc<T: Real>(sigma: T) -> T {
    (sigma / T::PI()).max(-T::one()).min(T::one()).acos()
}

// ---------------------------------------------------------------------------
// fermion circle geometry
// ---------------------------------------------------------------------------

/// Point of the fermion sigma circle: x1 = r0 cos(m0 sigma), x2 = +-r0 sin(m0 sigma)
/// in the x1-x2 plane; the rotation sense follows the orientation.
pub fn fermion_sigma_point<T: Real>(spec: &ParticleSpec<T>, sigma: T) -> Event6<T> {
    let r0 = spec.fermion_radius();
    let a = spec.m0 * sigma;
    let sense: T = spec.orientation.sign();
    Event6::new(
        T::zero(),
        r0 * a.cos(),
        sense * r0 * a.sin(),
        T::zero(),
        T::zero(),
        T::zero(),
    )
}

/// Point of the fermion phi arc: arc angle m0 phi / 4 runs over [0, pi/2) as
/// phi runs over its one-period domain, rotating from the +-x3 pole towards
/// the s direction (taken along x1).
pub fn fermion_phi_point<T: Real>(spec: &ParticleSpec<T>, phi: T) -> Event6<T> {
    let r0 = spec.fermion_radius();
    let quarter = T::of(0.25);
    let a = spec.m0 * phi * quarter;
    let sign: T = spec.orientation.sign();
    Event6::new(
        T::zero(),
        r0 * a.sin(),
        T::zero(),
        sign * r0 * a.cos(),
        T::zero(),
        T::zero(),
    )
}

/// Point of the fermion tau world line: x0 = tau (1 + cos(m0 tau)),
/// x5 = tau sin(m0 tau).
pub fn fermion_tau_point<T: Real>(spec: &ParticleSpec<T>, tau: T) -> Event6<T> {
    let a = spec.m0 * tau;
    Event6::new(
        tau * (T::one() + a.cos()),
        T::zero(),
        T::zero(),
        T::zero(),
        T::zero(),
        tau * a.sin(),
    )
}

// ---------------------------------------------------------------------------
// sampled world-line sets
// ---------------------------------------------------------------------------

/// Uniform sampling request: `samples_per_period` points over each of
/// `periods` periods, endpoint exclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleGrid {
    pub samples_per_period: usize,
    pub periods: usize,
}

impl Default for SampleGrid {
    /// 256 samples per period: enough for the 4th-order stencils downstream.
    fn default() -> Self {
        Self {
            samples_per_period: 256,
            periods: 1,
        }
    }
}

impl SampleGrid {
    pub fn total(&self) -> usize {
        self.samples_per_period * self.periods
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorldlineSample<T> {
    /// Strictly increasing curve parameter.
    pub s: T,
    pub event: Event6<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Worldline<T> {
    pub kind: ProperTimeKind,
    pub samples: Vec<WorldlineSample<T>>,
}

/// Period and wavelength metadata of a sampled set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodInfo<T> {
    /// Temporal period of the oscillation (h/(m c^2), or 2 pi / omega for the
    /// photon).
    pub period: T,
    /// De Broglie wavelength h/p where the particle moves; None at rest.
    pub wavelength: Option<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WorldlineSet<T> {
    pub lines: Vec<Worldline<T>>,
    pub period: PeriodInfo<T>,
}

impl<T: Real> WorldlineSet<T> {
    pub fn line(&self, kind: ProperTimeKind) -> Option<&Worldline<T>> {
        self.lines.iter().find(|l| l.kind == kind)
    }
}

fn sample_range<T: Real>(start: T, len: T, n: usize) -> impl Iterator<Item = T> {
    let step = len / T::of(n as f64);
    (0..n).map(move |j| start + step * T::of(j as f64))
}

/// World-line set dispatcher for all four classes.
pub fn worldline_set<T: Real>(
    spec: &ParticleSpec<T>,
    grid: SampleGrid,
) -> Result<WorldlineSet<T>, WorldlineError> {
    match spec.class {
        ParticleClass::Spinless => spinless_worldlines(spec, grid),
        ParticleClass::Photon => photon_worldlines(spec, grid),
        ParticleClass::Boson => boson_worldlines(spec, grid),
        ParticleClass::Fermion => fermion_worldlines(spec, grid),
    }
}

/// Spinless set: tau line = the classical world line carrying the rest-energy
/// oscillation in x4; sigma line = the boosted rest-frame oscillator
/// (x1 = x5, x4 = sigma at u = 0); phi line coincides with tau in projection
/// and carries its value in x5.
pub fn spinless_worldlines<T: Real>(
    spec: &ParticleSpec<T>,
    grid: SampleGrid,
) -> Result<WorldlineSet<T>, WorldlineError> {
    if spec.class != ParticleClass::Spinless {
        return Err(WorldlineError::UnsupportedClass(spec.class.name()));
    }
    let m = spec.m0;
    let period = T::two_pi() / m;
    let gamma = spec.gamma();
    let minus_u = [-spec.u[0], -spec.u[1], -spec.u[2]];
    let n = grid.total();
    let span = period * T::of(grid.periods as f64);

    // tau: lab events (gamma tau, u gamma tau); phase along it is m0 tau.
    let mut tau = Vec::with_capacity(n);
    let mut phi = Vec::with_capacity(n);
    for s in sample_range(T::zero(), span, n) {
        let t = gamma * s;
        let ev4 = [spec.u[0] * t, spec.u[1] * t, spec.u[2] * t];
        let value = T::PI() * (m * s).cos();
        tau.push(WorldlineSample {
            s,
            event: Event6::new(t, ev4[0], ev4[1], ev4[2], value, T::zero()),
        });
        phi.push(WorldlineSample {
            s,
            event: Event6::new(t, ev4[0], ev4[1], ev4[2], T::zero(), value),
        });
    }

    // sigma: rest line (0, X, 0, 0, pi cos(m X), X) boosted into the lab.
    let mut sigma = Vec::with_capacity(n);
    for s in sample_range(T::zero(), span, n) {
        let rest = Event6::new(
            T::zero(),
            s,
            T::zero(),
            T::zero(),
            T::PI() * (m * s).cos(),
            s,
        );
        sigma.push(WorldlineSample {
            s,
            event: boost(&rest, minus_u)?,
        });
    }

    let p = spec.momentum();
    let p_norm = crate::spacetime::dot3(p, p).sqrt();
    Ok(WorldlineSet {
        lines: vec![
            Worldline {
                kind: ProperTimeKind::Tau,
                samples: tau,
            },
            Worldline {
                kind: ProperTimeKind::Sigma,
                samples: sigma,
            },
            Worldline {
                kind: ProperTimeKind::Phi,
                samples: phi,
            },
        ],
        period: PeriodInfo {
            period,
            wavelength: (p_norm > T::zero()).then(|| T::two_pi() / p_norm),
        },
    })
}

/// Photon set at t = 0: sigma sweeps x1 (electric direction) and x3, phi
/// sweeps x2 (magnetic direction) and x3, both with the shared phase
/// pi cos(k x3); tau is the light ray along x3.
pub fn photon_worldlines<T: Real>(
    spec: &ParticleSpec<T>,
    grid: SampleGrid,
) -> Result<WorldlineSet<T>, WorldlineError> {
    if spec.class != ParticleClass::Photon {
        return Err(WorldlineError::UnsupportedClass(spec.class.name()));
    }
    let k = spec.wave_number;
    if k == T::zero() {
        return Err(WorldlineError::DegenerateWave);
    }
    let lambda = T::two_pi() / k;
    let n = grid.total();
    let span = lambda * T::of(grid.periods as f64);

    let mut sigma = Vec::with_capacity(n);
    let mut phi = Vec::with_capacity(n);
    let mut tau = Vec::with_capacity(n);
    for s in sample_range(T::zero(), span, n) {
        let value = T::PI() * (k * s).cos();
        let arc = principal_arc(value);
        sigma.push(WorldlineSample {
            s,
            event: Event6::new(T::zero(), spec.e0 * arc, T::zero(), s, value, T::zero()),
        });
        phi.push(WorldlineSample {
            s,
            event: Event6::new(T::zero(), T::zero(), spec.b0 * arc, s, T::zero(), value),
        });
        // light ray: x3 = t, constant phase.
        tau.push(WorldlineSample {
            s,
            event: Event6::new(s, T::zero(), T::zero(), s, T::PI(), T::zero()),
        });
    }
    Ok(WorldlineSet {
        lines: vec![
            Worldline {
                kind: ProperTimeKind::Tau,
                samples: tau,
            },
            Worldline {
                kind: ProperTimeKind::Sigma,
                samples: sigma,
            },
            Worldline {
                kind: ProperTimeKind::Phi,
                samples: phi,
            },
        ],
        period: PeriodInfo {
            period: lambda,
            wavelength: Some(lambda),
        },
    })
}

/// Boson set: three rest-frame cosine oscillations along x3 with mutually
/// perpendicular transverse supports (x1 for sigma, x2 for phi, none for
/// tau), boosted along x3.
pub fn boson_worldlines<T: Real>(
    spec: &ParticleSpec<T>,
    grid: SampleGrid,
) -> Result<WorldlineSet<T>, WorldlineError> {
    if spec.class != ParticleClass::Boson {
        return Err(WorldlineError::UnsupportedClass(spec.class.name()));
    }
    if spec.u[0] != T::zero() || spec.u[1] != T::zero() {
        return Err(WorldlineError::InvalidSpec(
            "boson frame velocity must point along x3".into(),
        ));
    }
    let m = spec.m0;
    let lambda = T::two_pi() / m;
    let minus_u = [T::zero(), T::zero(), -spec.u[2]];
    let n = grid.total();
    let span = lambda * T::of(grid.periods as f64);

    let mut sigma = Vec::with_capacity(n);
    let mut phi = Vec::with_capacity(n);
    let mut tau = Vec::with_capacity(n);
    for s in sample_range(T::zero(), span, n) {
        let value = T::PI() * (m * s).cos();
        let arc = principal_arc(value);
        let rest_sigma = Event6::new(T::zero(), spec.v10 * arc, T::zero(), s, value, T::zero());
        let rest_phi = Event6::new(T::zero(), T::zero(), spec.v20 * arc, s, T::zero(), value);
        // tau oscillates around the classical rest world line x3 = 0.
        let rest_tau = Event6::new(s, T::zero(), T::zero(), arc / m, T::zero(), T::zero());
        sigma.push(WorldlineSample {
            s,
            event: boost(&rest_sigma, minus_u)?,
        });
        phi.push(WorldlineSample {
            s,
            event: boost(&rest_phi, minus_u)?,
        });
        tau.push(WorldlineSample {
            s,
            event: boost(&rest_tau, minus_u)?,
        });
    }
    let p = spec.momentum();
    let p_norm = crate::spacetime::dot3(p, p).sqrt();
    Ok(WorldlineSet {
        lines: vec![
            Worldline {
                kind: ProperTimeKind::Tau,
                samples: tau,
            },
            Worldline {
                kind: ProperTimeKind::Sigma,
                samples: sigma,
            },
            Worldline {
                kind: ProperTimeKind::Phi,
                samples: phi,
            },
        ],
        period: PeriodInfo {
            period: lambda,
            wavelength: (p_norm > T::zero()).then(|| T::two_pi() / p_norm),
        },
    })
}

/// Fermion set in the rest frame: the sigma circle of radius r0 = h/(2 m0 c)
/// in the x1-x2 plane, the quarter phi arc from the oriented pole towards the
/// s direction, and the tau line x0 = tau (1 + cos(m0 tau)), x5 = tau sin(m0 tau).
///
/// The moving-frame fermion is reached through the Dirac components in the
/// fields module, not by boosting these lines.
pub fn fermion_worldlines<T: Real>(
    spec: &ParticleSpec<T>,
    grid: SampleGrid,
) -> Result<WorldlineSet<T>, WorldlineError> {
    if spec.class != ParticleClass::Fermion {
        return Err(WorldlineError::UnsupportedClass(spec.class.name()));
    }
    let m = spec.m0;
    let circle = T::two_pi() / m;
    let n = grid.total();

    // sigma: one full circle per period, sampled symmetrically about 0.
    let mut sigma = Vec::with_capacity(n);
    let span = circle * T::of(grid.periods as f64);
    for s in sample_range(-span * T::of(0.5), span, n) {
        sigma.push(WorldlineSample {
            s,
            event: fermion_sigma_point(spec, s),
        });
    }

    // phi: one period [0, 2 pi / m0) maps to arc angle [0, pi/2).
    let mut phi = Vec::with_capacity(n);
    for s in sample_range(T::zero(), span, n) {
        phi.push(WorldlineSample {
            s,
            event: fermion_phi_point(spec, s),
        });
    }

    // tau: two oscillation periods by default.
    let mut tau = Vec::with_capacity(n);
    let tau_span = T::two_pi() / m * T::of(2.0 * grid.periods as f64);
    for s in sample_range(T::zero(), tau_span, n) {
        tau.push(WorldlineSample {
            s,
            event: fermion_tau_point(spec, s),
        });
    }

    Ok(WorldlineSet {
        lines: vec![
            Worldline {
                kind: ProperTimeKind::Tau,
                samples: tau,
            },
            Worldline {
                kind: ProperTimeKind::Sigma,
                samples: sigma,
            },
            Worldline {
                kind: ProperTimeKind::Phi,
                samples: phi,
            },
        ],
        period: PeriodInfo {
            period: circle,
            wavelength: None,
        },
    })
}

// ---------------------------------------------------------------------------
// de Broglie lattice
// ---------------------------------------------------------------------------

/// De Broglie ladder spacings: dx = h/(m u), dt = h/(m c^2); both derive from
/// the same h/m, so dx u = dt c^2 by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeSpec<T> {
    pub dx: T,
    pub dt: T,
    pub n: usize,
}

/// Lattice point (t, x1) on the x0-x1 plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticePoint<T> {
    pub t: T,
    pub x1: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Lattice<T> {
    pub spec: LatticeSpec<T>,
    /// Positions x_j = j dx occupied at t = 0.
    pub at_t0: Vec<LatticePoint<T>>,
    /// Times t_j = j dt occupied at x = 0.
    pub at_x0: Vec<LatticePoint<T>>,
}

/// The ladder of world-line intersection loci: n positions at t = 0 spaced by
/// h/(m u) and n times at x = 0 spaced by h/(m c^2).
pub fn debroglie_lattice<T: Real>(
    spec: &ParticleSpec<T>,
    n: usize,
) -> Result<Lattice<T>, WorldlineError> {
    if spec.class == ParticleClass::Photon {
        return Err(WorldlineError::UnsupportedClass("photon"));
    }
    let u = spec.speed();
    if u == T::zero() {
        return Err(WorldlineError::DegenerateLattice);
    }
    let h = T::two_pi();
    let dx = h / (spec.m0 * u);
    let dt = h / spec.m0;
    let at_t0 = (0..n)
        .map(|j| LatticePoint {
            t: T::zero(),
            x1: dx * T::of(j as f64),
        })
        .collect();
    let at_x0 = (0..n)
        .map(|j| LatticePoint {
            t: dt * T::of(j as f64),
            x1: T::zero(),
        })
        .collect();
    Ok(Lattice {
        spec: LatticeSpec { dx, dt, n },
        at_t0,
        at_x0,
    })
}
