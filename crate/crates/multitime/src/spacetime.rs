//! 6D coordinates, unit conventions, Lorentz boosts, rapidity and Minkowski
//! inner products.
//!
//! Internally everything is in natural units (hbar = c = 1); [`UnitSystem`]
//! only converts for presentation. The 4D sector (x0..x3) carries the
//! (+,-,-,-) signature; the two extra time coordinates x4, x5 never mix with
//! it under a boost.

use crate::num::Real;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum KinematicsError {
    /// Speeds at or above c are outside every massive-particle formula here.
    #[error("invalid velocity: |u| = {speed} must be < c = 1 (natural units)")]
    InvalidVelocity { speed: f64 },
    /// Negative speeds are a caller bug, not a frame choice.
    #[error("negative speed {speed} passed where a magnitude was expected")]
    NegativeSpeed { speed: f64 },
    /// A tangent vector must not vanish.
    #[error("zero tangent vector")]
    ZeroTangent,
    /// hbar and c must be positive.
    #[error("non-positive unit constant")]
    InvalidUnits,
}

/// Which of the three proper times a world line or tangent belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProperTimeKind {
    Tau,
    Sigma,
    Phi,
}

impl ProperTimeKind {
    pub const ALL: [ProperTimeKind; 3] = [Self::Tau, Self::Sigma, Self::Phi];

    /// ASCII name used in CSV output.
    pub fn name(self) -> &'static str {
        match self {
            Self::Tau => "tau",
            Self::Sigma => "sigma",
            Self::Phi => "phi",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "tau" => Some(Self::Tau),
            "sigma" => Some(Self::Sigma),
            "phi" => Some(Self::Phi),
            _ => None,
        }
    }
}

impl std::fmt::Display for ProperTimeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A point in 6-dimensional time-space: one ordinary time coordinate, three
/// spatial coordinates and two extra angle-valued time coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Event6<T> {
    pub x0: T,
    pub x1: T,
    pub x2: T,
    pub x3: T,
    pub x4: T,
    pub x5: T,
}

impl<T: Real> Event6<T> {
    pub fn new(x0: T, x1: T, x2: T, x3: T, x4: T, x5: T) -> Self {
        Self {
            x0,
            x1,
            x2,
            x3,
            x4,
            x5,
        }
    }

    pub fn origin() -> Self {
        Self::default()
    }

    pub fn coords(&self) -> [T; 6] {
        [self.x0, self.x1, self.x2, self.x3, self.x4, self.x5]
    }

    pub fn from_coords(c: [T; 6]) -> Self {
        Self::new(c[0], c[1], c[2], c[3], c[4], c[5])
    }

    /// Spatial part (x1, x2, x3).
    pub fn spatial(&self) -> [T; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn is_finite(&self) -> bool {
        self.coords().iter().all(|c| c.is_finite())
    }

    /// Cylinder condition: reduce x4 modulo 2*pi into [0, 2*pi).
    pub fn wrap_x4(mut self) -> Self {
        self.x4 = wrap_angle(self.x4);
        self
    }
}

/// Reduce an angle into [0, 2*pi).
pub fn wrap_angle<T: Real>(a: T) -> T {
    let tp = T::two_pi();
    let mut w = a % tp;
    if w < T::zero() {
        w += tp;
    }
    // `%` can round to exactly 2*pi for inputs just below a multiple.
    if w >= tp {
        w -= tp;
    }
    w
}

/// Unit convention. Natural units are the internal representation; SI exists
/// for presentation only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSystem<T> {
    pub hbar: T,
    pub c: T,
    pub mode: UnitMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitMode {
    Natural,
    Si,
}

impl<T: Real> UnitSystem<T> {
    pub fn natural() -> Self {
        Self {
            hbar: T::one(),
            c: T::one(),
            mode: UnitMode::Natural,
        }
    }

    /// CODATA values; used only when converting results out of natural units.
    pub fn si() -> Self {
        Self {
            hbar: T::of(1.054_571_817e-34),
            c: T::of(299_792_458.0),
            mode: UnitMode::Si,
        }
    }

    pub fn validated(self) -> Result<Self, KinematicsError> {
        if self.hbar > T::zero() && self.c > T::zero() {
            Ok(self)
        } else {
            Err(KinematicsError::InvalidUnits)
        }
    }

    /// Planck constant h = 2*pi*hbar.
    pub fn h(&self) -> T {
        T::two_pi() * self.hbar
    }

    /// Compton wavelength h/(m c) of a mass given in these units.
    pub fn compton_wavelength(&self, mass: T) -> T {
        self.h() / (mass * self.c)
    }

    /// A length in natural units (1/mass) expressed in these units.
    pub fn length_from_natural(&self, l: T) -> T {
        l * self.hbar / self.c
    }

    /// A time in natural units (1/energy) expressed in these units.
    pub fn time_from_natural(&self, t: T) -> T {
        t * self.hbar
    }
}

/// Rapidity data: full and half hyperbolic angle of a boost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicAngle<T> {
    pub cosh_a: T,
    pub sinh_a: T,
    pub cosh_half: T,
    pub sinh_half: T,
}

/// Hyperbolic angle of a subluminal speed: cosh a = gamma, sinh a = gamma*u,
/// plus the half-angle values entering the half-spin wave components.
pub fn rapidity<T: Real>(u: T) -> Result<HyperbolicAngle<T>, KinematicsError> {
    if u < T::zero() {
        return Err(KinematicsError::NegativeSpeed {
            speed: u.to_f64().unwrap_or(f64::NAN),
        });
    }
    if u >= T::one() || !u.is_finite() {
        return Err(KinematicsError::InvalidVelocity {
            speed: u.to_f64().unwrap_or(f64::NAN),
        });
    }
    let gamma = T::one() / (T::one() - u * u).sqrt();
    let half = T::of(0.5);
    Ok(HyperbolicAngle {
        cosh_a: gamma,
        sinh_a: gamma * u,
        cosh_half: ((gamma + T::one()) * half).sqrt(),
        sinh_half: ((gamma - T::one()) * half).sqrt(),
    })
}

/// Lorentz factor gamma = 1/sqrt(1 - |u|^2).
pub fn lorentz_factor<T: Real>(u: [T; 3]) -> Result<T, KinematicsError> {
    let s2 = dot3(u, u);
    if s2 >= T::one() || !s2.is_finite() {
        return Err(KinematicsError::InvalidVelocity {
            speed: s2.sqrt().to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(T::one() / (T::one() - s2).sqrt())
}

pub fn dot3<T: Real>(a: [T; 3], b: [T; 3]) -> T {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Boost an event into the frame moving with velocity `u`.
///
/// Only the 4D sector transforms; x4 and x5 are returned unchanged. Standard
/// passive boost: t' = gamma (t - u.x), x' = x + ((gamma-1)(u.x)/u^2 - gamma t) u.
pub fn boost<T: Real>(e: &Event6<T>, u: [T; 3]) -> Result<Event6<T>, KinematicsError> {
    let gamma = lorentz_factor(u)?;
    let u2 = dot3(u, u);
    if u2 == T::zero() {
        return Ok(*e);
    }
    let x = e.spatial();
    let ux = dot3(u, x);
    let t = e.x0;
    let tp = gamma * (t - ux);
    let k = (gamma - T::one()) * ux / u2 - gamma * t;
    Ok(Event6::new(
        tp,
        x[0] + k * u[0],
        x[1] + k * u[1],
        x[2] + k * u[2],
        e.x4,
        e.x5,
    ))
}

/// Boost along the x1 axis with scalar speed `u` (convenience wrapper).
pub fn boost_x1<T: Real>(e: &Event6<T>, u: T) -> Result<Event6<T>, KinematicsError> {
    boost(e, [u, T::zero(), T::zero()])
}

/// Tangent vector along a world line, labelled by its proper-time kind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tangent6<T> {
    pub components: [T; 6],
    pub kind: ProperTimeKind,
}

impl<T: Real> Tangent6<T> {
    pub fn new(components: [T; 6], kind: ProperTimeKind) -> Result<Self, KinematicsError> {
        if components.iter().all(|c| *c == T::zero()) {
            return Err(KinematicsError::ZeroTangent);
        }
        Ok(Self { components, kind })
    }

    /// 4D sector (dx0, dx1, dx2, dx3).
    pub fn sector4(&self) -> [T; 4] {
        [
            self.components[0],
            self.components[1],
            self.components[2],
            self.components[3],
        ]
    }
}

/// Boost a tangent vector's 4D sector; the x4, x5 rates are untouched.
pub fn boost_tangent<T: Real>(t: &Tangent6<T>, u: [T; 3]) -> Result<Tangent6<T>, KinematicsError> {
    let as_event = Event6::from_coords(t.components);
    let b = boost(&as_event, u)?;
    Ok(Tangent6 {
        components: b.coords(),
        kind: t.kind,
    })
}

/// Bare Minkowski product on the 4D sector with signature (+,-,-,-).
///
/// The (x4, x5) sector contributes only when a metric context is supplied
/// (see the geometry module); the bare form ignores it.
pub fn minkowski_dot<T: Real>(a: &Tangent6<T>, b: &Tangent6<T>) -> T {
    let p = a.sector4();
    let q = b.sector4();
    p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3]
}

/// Minkowski interval s^2 of an event's 4D sector.
pub fn interval4<T: Real>(e: &Event6<T>) -> T {
    e.x0 * e.x0 - e.x1 * e.x1 - e.x2 * e.x2 - e.x3 * e.x3
}

/// Phase speed of the de Broglie wave for group speed `u`: v = c^2/u.
///
/// At u = 0 the phase velocity diverges; that case is a distinguished value,
/// never a floating-point infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhaseVelocity<T> {
    Finite(T),
    Infinite,
}

impl<T: Real> PhaseVelocity<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            Self::Finite(v) => Some(v),
            Self::Infinite => None,
        }
    }
}

pub fn phase_velocity<T: Real>(u: T) -> Result<PhaseVelocity<T>, KinematicsError> {
    if u < T::zero() {
        return Err(KinematicsError::NegativeSpeed {
            speed: u.to_f64().unwrap_or(f64::NAN),
        });
    }
    if u > T::one() || !u.is_finite() {
        return Err(KinematicsError::InvalidVelocity {
            speed: u.to_f64().unwrap_or(f64::NAN),
        });
    }
    if u == T::zero() {
        return Ok(PhaseVelocity::Infinite);
    }
    Ok(PhaseVelocity::Finite(T::one() / u))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    #[test]
    fn boost_at_zero_velocity_is_identity() {
        let e = Event6::new(1.0, 2.0, 3.0, -4.0, 0.5, 0.25);
        let b = boost(&e, [0.0, 0.0, 0.0]).unwrap();
        assert_eq!(e, b);
    }

    #[test]
    fn boost_frozen_example() {
        // u = 0.6 e1, e = (1, 0, 0, 0, 0.3, 0.7): gamma = 1.25 (oracle).
        let e = Event6::new(1.0f64, 0.0, 0.0, 0.0, 0.3, 0.7);
        let b = boost(&e, [0.6, 0.0, 0.0]).unwrap();
        assert!((b.x0 - 1.25).abs() < TOL);
        assert!((b.x1 - (-0.75)).abs() < TOL);
        assert_eq!(b.x4, 0.3);
        assert_eq!(b.x5, 0.7);
    }

    #[test]
    fn boost_inverse_composition() {
        let e = Event6::new(0.7f64, -1.1, 0.4, 2.2, 0.9, -0.3);
        let u = [0.2, -0.3, 0.4];
        let back = boost(&boost(&e, u).unwrap(), [-u[0], -u[1], -u[2]]).unwrap();
        for (a, b) in e.coords().iter().zip(back.coords()) {
            assert!((a - b).abs() < TOL);
        }
    }

    #[test]
    fn boost_rejects_superluminal() {
        let e = Event6::<f64>::origin();
        assert!(matches!(
            boost(&e, [1.0, 0.0, 0.0]),
            Err(KinematicsError::InvalidVelocity { .. })
        ));
    }

    #[test]
    fn rapidity_frozen_values() {
        let r = rapidity(0.0f64).unwrap();
        assert_eq!(r.cosh_a, 1.0);
        assert_eq!(r.sinh_a, 0.0);
        assert_eq!(r.cosh_half, 1.0);
        assert_eq!(r.sinh_half, 0.0);

        // u = 0.6: cosh = 1.25, sinh = 0.75 (oracle).
        let r = rapidity(0.6f64).unwrap();
        assert!((r.cosh_a - 1.25).abs() < TOL);
        assert!((r.sinh_a - 0.75).abs() < TOL);
        assert!((r.cosh_half - 1.0606601717798212).abs() < TOL);
        assert!((r.sinh_half - 0.3535533905932738).abs() < TOL);
    }

    #[test]
    fn rapidity_rejects_lightspeed() {
        assert!(rapidity(1.0f64).is_err());
        assert!(rapidity(-0.1f64).is_err());
    }

    #[test]
    fn phase_velocity_cases() {
        // fixed point u = c.
        assert_eq!(phase_velocity(1.0f64).unwrap(), PhaseVelocity::Finite(1.0));
        // u = 0.5c -> 2c (oracle).
        assert_eq!(phase_velocity(0.5f64).unwrap(), PhaseVelocity::Finite(2.0));
        // rest frame: distinguished signal.
        assert_eq!(phase_velocity(0.0f64).unwrap(), PhaseVelocity::Infinite);
        assert!(phase_velocity(-0.5f64).is_err());
    }

    #[test]
    fn phase_velocity_times_group_speed_is_c2_on_dyadic_speeds() {
        for u in [0.5f64, 0.25, 0.125, 1.0] {
            let v = phase_velocity(u).unwrap().finite().unwrap();
            assert_eq!(v * u, 1.0);
        }
    }

    #[test]
    fn sigma_tau_tangents_are_orthogonal() {
        // tau tangent (c, u, 0, 0) vs sigma tangent (u, c, 0, 0).
        let u = 0.37f64;
        let tau = Tangent6::new([1.0, u, 0.0, 0.0, 0.0, 0.0], ProperTimeKind::Tau).unwrap();
        let sig = Tangent6::new([u, 1.0, 0.0, 0.0, 0.0, 0.0], ProperTimeKind::Sigma).unwrap();
        assert_eq!(minkowski_dot(&tau, &sig), 0.0);
    }

    #[test]
    fn timelike_unit_norm() {
        let a = Tangent6::new([1.0f64, 0.0, 0.0, 0.0, 0.0, 0.0], ProperTimeKind::Tau).unwrap();
        assert_eq!(minkowski_dot(&a, &a), 1.0);
    }

    #[test]
    fn boosted_rest_sigma_tangent_stays_orthogonal_to_tau() {
        // rest tau tangent (1, 0), rest sigma tangent (0, n): after any boost
        // their Minkowski product stays zero.
        let u = [0.3f64, -0.5, 0.2];
        let tau = Tangent6::new([1.0, 0.0, 0.0, 0.0, 0.0, 0.0], ProperTimeKind::Tau).unwrap();
        let sig = Tangent6::new([0.0, 0.6, -0.8, 0.0, 0.0, 0.0], ProperTimeKind::Sigma).unwrap();
        let bt = boost_tangent(&tau, u).unwrap();
        let bs = boost_tangent(&sig, u).unwrap();
        assert!(minkowski_dot(&bt, &bs).abs() < 1e-10);
    }

    #[test]
    fn zero_tangent_rejected() {
        assert!(Tangent6::new([0.0f64; 6], ProperTimeKind::Tau).is_err());
    }

    #[test]
    fn wrap_angle_range() {
        let tau = std::f64::consts::TAU;
        for a in [
            -7.0f64,
            -0.1,
            0.0,
            3.0,
            tau * (1.0 - 1e-14),
            tau,
            tau + 1e-9,
            100.0,
        ] {
            let w = wrap_angle(a);
            assert!((0.0..std::f64::consts::TAU).contains(&w), "{a} -> {w}");
        }
    }

    #[test]
    fn units_natural_and_si() {
        let n = UnitSystem::<f64>::natural().validated().unwrap();
        assert_eq!(n.hbar, 1.0);
        assert_eq!(n.c, 1.0);
        assert!((n.h() - std::f64::consts::TAU).abs() < TOL);
        let si = UnitSystem::<f64>::si().validated().unwrap();
        // Compton wavelength of the electron, a familiar sanity anchor.
        let lam = si.compton_wavelength(9.1093837015e-31);
        assert!((lam - 2.4263102386e-12).abs() < 1e-16);
    }

    #[test]
    fn works_in_f32() {
        let e = Event6::<f32>::new(1.0, 0.0, 0.0, 0.0, 0.3, 0.7);
        let b = boost(&e, [0.6f32, 0.0, 0.0]).unwrap();
        assert!((b.x0 - 1.25).abs() < 1e-6);
        assert!((b.x1 + 0.75).abs() < 1e-6);
    }
}
