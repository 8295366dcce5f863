//! Geometric occupancy of world-line families in a Compton cell
//! (Bose-Einstein vs Fermi-Dirac behavior) and the triple-time-coincidence
//! measurement Monte Carlo.

use crate::num::Real;
use crate::spacetime::wrap_angle;
use crate::worldlines::{
    debroglie_lattice, LatticePoint, Orientation, ParticleClass, ParticleSpec, WorldlineError,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum StatisticsError {
    #[error("operation not defined for particle class {0}")]
    UnsupportedClass(&'static str),
    #[error("cell side {side} smaller than the world-line diameter {needed}")]
    CellTooSmall { side: f64, needed: f64 },
    #[error("invalid cell: {0}")]
    InvalidCell(String),
    #[error("coincidence window must lie in (0, 2*pi); every trial would detect at {window}")]
    BadWindow { window: f64 },
    #[error("trial count must be positive")]
    NoTrials,
    #[error("offset must exceed the intersection tolerance")]
    OffsetTooSmall,
    #[error(transparent)]
    Worldline(#[from] WorldlineError),
}

/// Cubic spatial cell of one Compton wavelength, with the intersection
/// tolerance used to call two world lines crossing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell<T> {
    pub side: T,
    pub tolerance: T,
}

impl<T: Real> Cell<T> {
    pub fn new(side: T, tolerance: T) -> Result<Self, StatisticsError> {
        if side <= T::zero() || !side.is_finite() {
            return Err(StatisticsError::InvalidCell("side must be positive".into()));
        }
        if tolerance <= T::zero() || tolerance > side * T::of(0.01) {
            return Err(StatisticsError::InvalidCell(
                "tolerance must be positive and much smaller than the side".into(),
            ));
        }
        Ok(Self { side, tolerance })
    }

    /// Cell of one Compton wavelength h/(m0 c) with the default tolerance
    /// side/10^6.
    pub fn compton(spec: &ParticleSpec<T>) -> Result<Self, StatisticsError> {
        let side = spec.compton_wavelength();
        Self::new(side, side * T::of(1e-6))
    }
}

/// A pair of placed particles whose world lines approach within tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Intersection<T> {
    pub pair: (usize, usize),
    pub min_distance: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OccupancyResult<T> {
    pub placed: usize,
    pub intersections: Vec<Intersection<T>>,
    pub capacity_reached: bool,
    /// Min world-line distance of every placed pair, intersecting or not.
    pub pair_distances: Vec<((usize, usize), T)>,
    /// Third-placement search bookkeeping (fermion capacity only).
    pub attempts: usize,
    pub blocked_attempts: usize,
}

// ---------------------------------------------------------------------------
// boson packing: parallel straight-line families
// ---------------------------------------------------------------------------

/// A straight line in 6D: anchor + t * direction.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Line6<T> {
    anchor: [T; 6],
    direction: [T; 6],
}

fn norm6<T: Real>(v: [T; 6]) -> T {
    v.iter().fold(T::zero(), |s, c| s + *c * *c).sqrt()
}

fn dot6<T: Real>(a: [T; 6], b: [T; 6]) -> T {
    let mut s = T::zero();
    for k in 0..6 {
        s += a[k] * b[k];
    }
    s
}

/// Euclidean min distance between two straight lines in 6D.
fn line_distance<T: Real>(p: &Line6<T>, q: &Line6<T>) -> T {
    let mut w = [T::zero(); 6];
    for ((slot, pa), qa) in w.iter_mut().zip(p.anchor).zip(q.anchor) {
        *slot = pa - qa;
    }
    let a = dot6(p.direction, p.direction);
    let b = dot6(p.direction, q.direction);
    let c = dot6(q.direction, q.direction);
    let d = dot6(p.direction, w);
    let e = dot6(q.direction, w);
    let denom = a * c - b * b;
    let closest = if denom.abs() <= a * c * T::of(1e-12) {
        // parallel: distance of w perpendicular to the shared direction.
        let t = -d / a;
        let mut v = [T::zero(); 6];
        for k in 0..6 {
            v[k] = w[k] + t * p.direction[k];
        }
        v
    } else {
        let t = (b * e - c * d) / denom;
        let s = (a * e - b * d) / denom;
        let mut v = [T::zero(); 6];
        for k in 0..6 {
            v[k] = w[k] + t * p.direction[k] - s * q.direction[k];
        }
        v
    };
    norm6(closest)
}

/// The three straight world lines of one packed particle. All live at the
/// particle's own x4 level, so lines of distinct particles never share the
/// unsynchronizable second time.
fn packed_lines<T: Real>(spec: &ParticleSpec<T>, x4_offset: T) -> Vec<Line6<T>> {
    let u = spec.u;
    let speed = spec.speed();
    let motion = if speed > T::zero() {
        [u[0] / speed, u[1] / speed, u[2] / speed]
    } else {
        [T::one(), T::zero(), T::zero()]
    };
    // transverse partner of the motion direction, deterministic.
    let seed = if motion[0].abs() < T::of(0.9) {
        [T::one(), T::zero(), T::zero()]
    } else {
        [T::zero(), T::one(), T::zero()]
    };
    let proj = crate::spacetime::dot3(seed, motion);
    let mut trans = [T::zero(); 3];
    for k in 0..3 {
        trans[k] = seed[k] - proj * motion[k];
    }
    let tn = crate::spacetime::dot3(trans, trans).sqrt();
    for t in &mut trans {
        *t /= tn;
    }

    let anchor = [
        T::zero(),
        T::zero(),
        T::zero(),
        T::zero(),
        x4_offset,
        T::zero(),
    ];
    // tau: timelike, slope u; sigma: spacelike partner, slope c/u along the
    // motion; phi: the transverse analogue.
    let tau = [T::one(), u[0], u[1], u[2], T::zero(), T::zero()];
    let sigma = [speed, motion[0], motion[1], motion[2], T::zero(), T::zero()];
    let phi = [speed, trans[0], trans[1], trans[2], T::zero(), T::zero()];
    [tau, sigma, phi]
        .into_iter()
        .map(|direction| Line6 { anchor, direction })
        .collect()
}

/// Pack n identical bosons into the cell, each displaced from the previous
/// one by `offset` along the second time coordinate (the "slightly later"
/// phase no apparatus can synchronize). Parallel families never meet: the
/// result records zero intersections for any n.
pub fn boson_packing<T: Real>(
    n: usize,
    cell: &Cell<T>,
    spec: &ParticleSpec<T>,
    offset: T,
) -> Result<OccupancyResult<T>, StatisticsError> {
    if !matches!(spec.class, ParticleClass::Spinless | ParticleClass::Boson) {
        return Err(StatisticsError::UnsupportedClass(spec.class.name()));
    }
    if offset <= cell.tolerance {
        return Err(StatisticsError::OffsetTooSmall);
    }
    let families: Vec<Vec<Line6<T>>> = (0..n)
        .map(|i| packed_lines(spec, offset * T::of(i as f64)))
        .collect();

    let mut intersections = Vec::new();
    let mut pair_distances = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut min_d = T::infinity();
            for li in &families[i] {
                for lj in &families[j] {
                    let d = line_distance(li, lj);
                    if d < min_d {
                        min_d = d;
                    }
                }
            }
            pair_distances.push(((i, j), min_d));
            if min_d < cell.tolerance {
                intersections.push(Intersection {
                    pair: (i, j),
                    min_distance: min_d,
                });
            }
        }
    }
    Ok(OccupancyResult {
        placed: n,
        intersections,
        capacity_reached: false,
        pair_distances,
        attempts: 0,
        blocked_attempts: 0,
    })
}

// ---------------------------------------------------------------------------
// fermion capacity: hemisphere surfaces
// ---------------------------------------------------------------------------

/// Half spherical world-line surface of one fermion: sphere of radius r
/// around `center`, polar angles in [0, pi/2) from the oriented pole. The
/// equator is approached but never reached (the quarter arc domain is
/// half-open), so two opposite hemispheres of one sphere share no point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hemisphere<T> {
    pub center: [T; 3],
    pub radius: T,
    pub orientation: Orientation,
}

impl<T: Real> Hemisphere<T> {
    fn axis(&self) -> [T; 3] {
        [T::zero(), T::zero(), self.orientation.sign::<T>()]
    }

    /// Sampled latitude-band point set; `phase` rotates the azimuth start
    /// (the sigma rotation offset).
    fn sample(&self, n_lat: usize, n_lon: usize, phase: T) -> Vec<[T; 3]> {
        let mut points = Vec::with_capacity(n_lat * n_lon);
        let half_pi = T::PI() * T::of(0.5);
        let sign = self.orientation.sign::<T>();
        for i in 0..n_lat {
            // band centres strictly inside [0, pi/2).
            let polar = half_pi * (T::of(i as f64) + T::of(0.5)) / T::of(n_lat as f64);
            for j in 0..n_lon {
                let az = T::two_pi() * T::of(j as f64) / T::of(n_lon as f64) + phase;
                points.push([
                    self.center[0] + self.radius * polar.sin() * az.cos(),
                    self.center[1] + self.radius * polar.sin() * az.sin(),
                    self.center[2] + sign * self.radius * polar.cos(),
                ]);
            }
        }
        points
    }
}

fn sub3<T: Real>(a: [T; 3], b: [T; 3]) -> [T; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Does a shared surface point of the two hemispheres exist? Decided through
/// the sphere-sphere crossing circle: a point of the circle strictly inside
/// both open hemisphere caps certifies an intersection.
pub fn hemispheres_intersect<T: Real>(a: &Hemisphere<T>, b: &Hemisphere<T>, slack: T) -> bool {
    let d_vec = sub3(b.center, a.center);
    let d = crate::spacetime::dot3(d_vec, d_vec).sqrt();
    let (ra, rb) = (a.radius, b.radius);
    if d <= slack {
        // same sphere: identical caps share everything, opposite caps are the
        // two open halves and share nothing.
        return a.orientation == b.orientation;
    }
    if d >= ra + rb || d <= (ra - rb).abs() {
        return false;
    }
    // crossing circle: plane at distance da from a.center along d_vec.
    let da = (d * d + ra * ra - rb * rb) / (T::of(2.0) * d);
    let rho2 = ra * ra - da * da;
    if rho2 <= T::zero() {
        return false;
    }
    let rho = rho2.sqrt();
    let n = [d_vec[0] / d, d_vec[1] / d, d_vec[2] / d];
    let seed = if n[0].abs() < T::of(0.9) {
        [T::one(), T::zero(), T::zero()]
    } else {
        [T::zero(), T::one(), T::zero()]
    };
    let pn = crate::spacetime::dot3(seed, n);
    let mut e1 = [T::zero(); 3];
    for k in 0..3 {
        e1[k] = seed[k] - pn * n[k];
    }
    let e1n = crate::spacetime::dot3(e1, e1).sqrt();
    for v in &mut e1 {
        *v /= e1n;
    }
    let e2 = [
        n[1] * e1[2] - n[2] * e1[1],
        n[2] * e1[0] - n[0] * e1[2],
        n[0] * e1[1] - n[1] * e1[0],
    ];
    let circle_center = [
        a.center[0] + da * n[0],
        a.center[1] + da * n[1],
        a.center[2] + da * n[2],
    ];
    let steps = 2048;
    let axis_a = a.axis();
    let axis_b = b.axis();
    for s in 0..steps {
        let th = T::two_pi() * T::of(s as f64) / T::of(steps as f64);
        let p = [
            circle_center[0] + rho * (th.cos() * e1[0] + th.sin() * e2[0]),
            circle_center[1] + rho * (th.cos() * e1[1] + th.sin() * e2[1]),
            circle_center[2] + rho * (th.cos() * e1[2] + th.sin() * e2[2]),
        ];
        let depth_a = crate::spacetime::dot3(sub3(p, a.center), axis_a);
        let depth_b = crate::spacetime::dot3(sub3(p, b.center), axis_b);
        if depth_a > slack && depth_b > slack {
            return true;
        }
    }
    false
}

/// Min distance between the sampled point sets of two hemispheres;
/// resolution-limited, used for reporting non-crossing pairs.
pub fn hemisphere_sampled_distance<T: Real>(a: &Hemisphere<T>, b: &Hemisphere<T>, phase: T) -> T {
    let (n_lat, n_lon) = (48, 96);
    let pa = a.sample(n_lat, n_lon, phase);
    let pb = b.sample(n_lat, n_lon, phase);
    let mut best = T::infinity();
    for p in &pa {
        for q in &pb {
            let d = crate::spacetime::dot3(sub3(*p, *q), sub3(*p, *q));
            if d < best {
                best = d;
            }
        }
    }
    best.sqrt()
}

/// Try to place up to `n` fermions in the cell and certify its two-particle
/// capacity.
///
/// The first two placements are the opposite-orientation hemispheres at the
/// cell center. Once a pair is placed, the third-placement search sweeps
/// every position where a hemisphere of diameter h/(m0 c) still fits inside
/// the cell (a thousand candidates) and records whether each crosses an
/// already-placed surface; capacity is reached iff all of them do.
pub fn fermion_capacity<T: Real>(
    cell: &Cell<T>,
    spec: &ParticleSpec<T>,
    n: usize,
) -> Result<OccupancyResult<T>, StatisticsError> {
    if spec.class != ParticleClass::Fermion {
        return Err(StatisticsError::UnsupportedClass(spec.class.name()));
    }
    let r0 = spec.fermion_radius();
    let diameter = T::of(2.0) * r0;
    // one ulp of slack so the canonical side == diameter cell passes.
    if cell.side < diameter * (T::one() - T::of(1e-12)) {
        return Err(StatisticsError::CellTooSmall {
            side: cell.side.to_f64().unwrap_or(f64::NAN),
            needed: diameter.to_f64().unwrap_or(f64::NAN),
        });
    }

    let mut placed_hemis: Vec<Hemisphere<T>> = Vec::new();
    let center = [T::zero(); 3];
    let first = spec.orientation;
    if n >= 1 {
        placed_hemis.push(Hemisphere {
            center,
            radius: r0,
            orientation: first,
        });
    }
    if n >= 2 {
        placed_hemis.push(Hemisphere {
            center,
            radius: r0,
            orientation: first.flipped(),
        });
    }

    let mut intersections = Vec::new();
    let mut pair_distances = Vec::new();
    if placed_hemis.len() == 2 {
        let d = hemisphere_sampled_distance(&placed_hemis[0], &placed_hemis[1], T::zero());
        pair_distances.push(((0, 1), d));
        if hemispheres_intersect(&placed_hemis[0], &placed_hemis[1], cell.tolerance) {
            intersections.push(Intersection {
                pair: (0, 1),
                min_distance: T::zero(),
            });
        }
    }

    // third-placement sweep over the feasible region; this is what certifies
    // capacity_reached, it is never asserted without the search.
    let (mut attempts, mut blocked) = (0usize, 0usize);
    if placed_hemis.len() == 2 {
        let half = cell.side * T::of(0.5);
        let wiggle = half - r0; // transverse freedom of a fitting hemisphere
        let per_orientation = 500usize;
        for orientation in [Orientation::PlusX3, Orientation::MinusX3] {
            // cap spans [c3, c3 + r0] (up) or [c3 - r0, c3] (down).
            let (z_lo, z_hi) = match orientation {
                Orientation::PlusX3 => (-half, half - r0),
                Orientation::MinusX3 => (-half + r0, half),
            };
            for k in 0..per_orientation {
                let f = T::of((k as f64 + 0.5) / per_orientation as f64);
                let z = z_lo + (z_hi - z_lo) * f;
                // transverse offsets only exist when the cell is larger than
                // the diameter; fold them in deterministically.
                let tx = if wiggle > T::zero() {
                    wiggle * (T::of(2.0) * f - T::one())
                } else {
                    T::zero()
                };
                let cand = Hemisphere {
                    center: [tx, T::zero(), z],
                    radius: r0,
                    orientation,
                };
                attempts += 1;
                let hit = placed_hemis
                    .iter()
                    .any(|h| hemispheres_intersect(h, &cand, cell.tolerance));
                if hit {
                    blocked += 1;
                }
            }
        }
    }

    Ok(OccupancyResult {
        placed: placed_hemis.len(),
        intersections,
        capacity_reached: attempts > 0 && blocked == attempts,
        pair_distances,
        attempts,
        blocked_attempts: blocked,
    })
}

// ---------------------------------------------------------------------------
// measurement Monte Carlo
// ---------------------------------------------------------------------------

/// One coincidence trial: the apparatus meets the particle at a lattice
/// position iff both unsynchronized phase differences fall inside the window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoincidenceTrial<T> {
    pub apparatus_phase: (T, T),
    pub particle_phase: (T, T),
    pub window: T,
    pub detected: bool,
}

impl<T: Real> CoincidenceTrial<T> {
    pub fn evaluate(apparatus_phase: (T, T), particle_phase: (T, T), window: T) -> Self {
        let d_sigma = wrap_angle(apparatus_phase.0 - particle_phase.0);
        let d_phi = wrap_angle(apparatus_phase.1 - particle_phase.1);
        Self {
            apparatus_phase,
            particle_phase,
            window,
            detected: d_sigma < window && d_phi < window,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementReport<T> {
    pub positions: Vec<LatticePoint<T>>,
    pub counts: Vec<u64>,
    pub frequencies: Vec<T>,
    pub trials: u64,
    pub window: T,
    /// Sum of the per-position frequencies.
    pub total_rate: T,
}

/// Draw apparatus phases uniformly over [0, 2*pi)^2 and test coincidence with
/// the particle phase at each de Broglie lattice position. Counter-based
/// seeding (one RNG stream per trial) keeps the result reproducible
/// regardless of execution order.
pub fn measurement_mc<T: Real>(
    spec: &ParticleSpec<T>,
    positions: usize,
    trials: u64,
    window: T,
    seed: u64,
) -> Result<MeasurementReport<T>, StatisticsError> {
    if trials == 0 {
        return Err(StatisticsError::NoTrials);
    }
    if window <= T::zero() || window >= T::two_pi() {
        return Err(StatisticsError::BadWindow {
            window: window.to_f64().unwrap_or(f64::NAN),
        });
    }
    let lattice = debroglie_lattice(spec, positions)?;
    let energy = spec.energy();
    let p = spec.momentum();
    // the ladder coordinate runs along the direction of motion, so the
    // plane-wave phase at site j uses the momentum magnitude.
    let p_norm = crate::spacetime::dot3(p, p).sqrt();
    let particle: Vec<(T, T)> = lattice
        .at_t0
        .iter()
        .map(|pt| {
            let phase = wrap_angle(energy * pt.t - p_norm * pt.x1);
            (phase, phase) // sigma and phi share the plane-wave phase
        })
        .collect();

    let mut counts = vec![0u64; particle.len()];
    let two_pi = T::two_pi();
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let a_sigma = two_pi * T::of(rng.gen::<f64>());
        let a_phi = two_pi * T::of(rng.gen::<f64>());
        for (slot, ph) in counts.iter_mut().zip(&particle) {
            if CoincidenceTrial::evaluate((a_sigma, a_phi), *ph, window).detected {
                *slot += 1;
            }
        }
    }
    let frequencies: Vec<T> = counts
        .iter()
        .map(|c| T::of(*c as f64) / T::of(trials as f64))
        .collect();
    let total_rate = frequencies.iter().fold(T::zero(), |s, f| s + *f);
    Ok(MeasurementReport {
        positions: lattice.at_t0,
        counts,
        frequencies,
        trials,
        window,
        total_rate,
    })
}
