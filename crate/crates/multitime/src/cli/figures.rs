//! Figure data: the de Broglie line picture, the fermion world lines, and
//! the parallel boson pair.

use super::csv::{fmt_f64, Table};
use crate::spacetime::ProperTimeKind;
use crate::statistics::{boson_packing, Cell};
use crate::worldlines::{
    debroglie_lattice, fermion_worldlines, ParticleSpec, SampleGrid, WorldlineError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
}

impl Figure {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "fig1" => Some(Self::Fig1),
            "fig2" => Some(Self::Fig2),
            "fig3" => Some(Self::Fig3),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Fig1 => "fig1",
            Self::Fig2 => "fig2",
            Self::Fig3 => "fig3",
        }
    }
}

/// A polyline to draw, in data coordinates.
#[derive(Debug, Clone)]
pub struct Polyline {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone)]
pub struct FigureData {
    pub table: Table,
    pub polylines: Vec<Polyline>,
    /// Isolated points (the intersection lattice).
    pub markers: Vec<(f64, f64)>,
}

/// Fig. 1: tau-line family (slope u), sigma-line family (slope c^2/u) and the
/// de Broglie ladder on the x0-x1 plane. Lines are anchored at the ladder
/// points.
pub fn fig1(spec: &ParticleSpec<f64>, n: usize) -> Result<FigureData, WorldlineError> {
    let u = spec.speed();
    let lat = debroglie_lattice(spec, n)?;
    let v = 1.0 / u; // phase velocity in natural units
    let t_max = lat.spec.dt * n as f64;

    let mut table = Table::new("element,index,x0,x1");
    let mut polylines = Vec::new();
    let mut markers = Vec::new();

    for (j, p) in lat.at_t0.iter().enumerate() {
        // world line through (0, x_j) with slope u.
        let pts = vec![(-t_max, p.x1 - u * t_max), (t_max, p.x1 + u * t_max)];
        for (t, x) in &pts {
            table
                .rows
                .push(format!("tau_line,{j},{},{}", fmt_f64(*t), fmt_f64(*x)));
        }
        polylines.push(Polyline {
            label: format!("tau_{j}"),
            points: pts,
        });
    }
    for (k, p) in lat.at_x0.iter().enumerate() {
        // sigma line through (t_k, 0) with slope v = c^2/u.
        let pts = vec![(p.t - t_max, -v * t_max), (p.t + t_max, v * t_max)];
        for (t, x) in &pts {
            table
                .rows
                .push(format!("sigma_line,{k},{},{}", fmt_f64(*t), fmt_f64(*x)));
        }
        polylines.push(Polyline {
            label: format!("sigma_{k}"),
            points: pts,
        });
    }
    for (j, p) in lat.at_t0.iter().enumerate() {
        table
            .rows
            .push(format!("lattice,{j},{},{}", fmt_f64(p.t), fmt_f64(p.x1)));
        markers.push((p.t, p.x1));
    }
    for (j, p) in lat.at_x0.iter().enumerate() {
        table
            .rows
            .push(format!("lattice_x0,{j},{},{}", fmt_f64(p.t), fmt_f64(p.x1)));
        markers.push((p.t, p.x1));
    }
    Ok(FigureData {
        table,
        polylines,
        markers,
    })
}

/// Fig. 2: fermion world lines projected to (x0, x3, xs); xs is the x1 slot
/// of the generated events.
pub fn fig2(spec: &ParticleSpec<f64>, grid: SampleGrid) -> Result<FigureData, WorldlineError> {
    let set = fermion_worldlines(spec, grid)?;
    let mut table = Table::new("kind,proper_time,x0,x3,xs");
    let mut polylines = Vec::new();
    for line in &set.lines {
        let mut pts = Vec::with_capacity(line.samples.len());
        for s in &line.samples {
            table.rows.push(format!(
                "{},{},{},{},{}",
                line.kind.name(),
                fmt_f64(s.s),
                fmt_f64(s.event.x0),
                fmt_f64(s.event.x3),
                fmt_f64(s.event.x1),
            ));
            // draw in the (x3, xs) plane for sigma/phi, (x0, x5)-style for tau.
            let p = match line.kind {
                ProperTimeKind::Tau => (s.event.x0, s.event.x5),
                _ => (s.event.x3, s.event.x1),
            };
            pts.push(p);
        }
        polylines.push(Polyline {
            label: line.kind.name().to_string(),
            points: pts,
        });
    }
    Ok(FigureData {
        table,
        polylines,
        markers: Vec::new(),
    })
}

/// Fig. 3: the three world lines of two packed bosons, parallel pair by pair,
/// with the constant pair separation in the last column.
pub fn fig3(
    spec: &ParticleSpec<f64>,
    offset: f64,
) -> Result<FigureData, crate::statistics::StatisticsError> {
    let cell = Cell::compton(spec)?;
    let packing = boson_packing(2, &cell, spec, offset)?;
    let min_distance = packing.pair_distances[0].1;

    // draw in the (x0, xi) plane, xi = coordinate along the motion; the three
    // kinds get the slopes u, c^2/u and the transverse cartoon line.
    let mut table = Table::new("particle,kind,param,x0,x_motion,x4,min_distance");
    let mut polylines = Vec::new();
    let speed = spec.speed();
    let span = cell.side;
    for particle in 0..2usize {
        let x4 = offset * particle as f64;
        let draw_shift = 0.15 * span * particle as f64;
        for kind in ProperTimeKind::ALL {
            let (dt, dxi) = match kind {
                ProperTimeKind::Tau => (1.0, speed),
                ProperTimeKind::Sigma => (speed, 1.0),
                ProperTimeKind::Phi => (speed, -1.0),
            };
            let mut pts = Vec::new();
            for step in 0..17 {
                let s = span * (step as f64 / 16.0 - 0.5);
                let (x0, xi) = (dt * s + draw_shift, dxi * s + draw_shift);
                table.rows.push(format!(
                    "{particle},{},{},{},{},{},{}",
                    kind.name(),
                    fmt_f64(s),
                    fmt_f64(x0),
                    fmt_f64(xi),
                    fmt_f64(x4),
                    fmt_f64(min_distance),
                ));
                pts.push((x0, xi));
            }
            polylines.push(Polyline {
                label: format!("p{particle}_{}", kind.name()),
                points: pts,
            });
        }
    }
    Ok(FigureData {
        table,
        polylines,
        markers: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn fig1_lattice_points_lie_on_family_intersections() {
        // every t = 0 ladder point is the crossing of tau-line j with
        // sigma-line k = -j of the drawn families.
        let spec = ParticleSpec::spinless(1.0f64, [0.5, 0.0, 0.0]).unwrap();
        let n = 5;
        let lat = debroglie_lattice(&spec, n).unwrap();
        let (u, v) = (0.5, 2.0);
        for j in 0..n {
            let anchor_tau = lat.at_t0[j].x1; // tau line: x = u t + anchor
                                              // the sigma line through t_k = -anchor/v: x = v (t - t_k). This
                                              // is the drawn family member k = -j since v dt = dx.
            let t_k = -anchor_tau / v;
            assert!((t_k - -(j as f64) * lat.spec.dt).abs() < 1e-9);
            // crossing: u t + anchor = v t - v t_k.
            let t_cross = (anchor_tau + v * t_k) / (v - u);
            let x_cross = u * t_cross + anchor_tau;
            assert!(t_cross.abs() < 1e-9);
            assert!((x_cross - lat.at_t0[j].x1).abs() < 1e-9);
        }
    }

    #[test]
    fn fig1_table_has_all_elements() {
        let spec = ParticleSpec::spinless(1.0f64, [0.5, 0.0, 0.0]).unwrap();
        let data = fig1(&spec, 3).unwrap();
        let csv = data.table.to_csv();
        for tag in ["tau_line", "sigma_line", "lattice,", "lattice_x0"] {
            assert!(csv.contains(tag), "missing {tag}");
        }
        assert_eq!(data.markers.len(), 6);
    }

    #[test]
    fn fig2_contains_quarter_arc() {
        let spec = ParticleSpec::fermion(1.0f64, [0.0; 3], crate::worldlines::Orientation::PlusX3)
            .unwrap();
        let data = fig2(
            &spec,
            SampleGrid {
                samples_per_period: 64,
                periods: 1,
            },
        )
        .unwrap();
        // phi polyline spans x3 from r0 down toward 0.
        let phi = data
            .polylines
            .iter()
            .find(|p| p.label == "phi")
            .expect("phi line present");
        let first = phi.points.first().unwrap();
        let last = phi.points.last().unwrap();
        assert!((first.0 - PI).abs() < 1e-12); // x3 = r0 at the pole
        assert!(last.0 < 0.1); // approaches the equator
    }

    #[test]
    fn fig3_distance_column_equals_offset() {
        let spec = ParticleSpec::boson(1.0f64, 0.5).unwrap();
        let offset = spec.compton_wavelength() * 1e-3;
        let data = fig3(&spec, offset).unwrap();
        for row in &data.table.rows {
            let d: f64 = row.rsplit(',').next().unwrap().parse().unwrap();
            assert!((d - offset).abs() < 1e-12);
        }
    }
}
