//! Deterministic SVG rendering of figure data: fixed viewBox, fixed palette,
//! no external assets, numbers formatted to 6 decimals so identical data
//! yields identical bytes.

use super::figures::FigureData;
use std::fmt::Write as _;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 40.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

fn bounds(data: &FigureData) -> (f64, f64, f64, f64) {
    let mut pts = data
        .polylines
        .iter()
        .flat_map(|p| p.points.iter())
        .chain(data.markers.iter());
    let first = pts.next().copied().unwrap_or((0.0, 0.0));
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (first.0, first.0, first.1, first.1);
    for (x, y) in pts {
        min_x = min_x.min(*x);
        max_x = max_x.max(*x);
        min_y = min_y.min(*y);
        max_y = max_y.max(*y);
    }
    if max_x - min_x < 1e-12 {
        max_x = min_x + 1.0;
    }
    if max_y - min_y < 1e-12 {
        max_y = min_y + 1.0;
    }
    (min_x, max_x, min_y, max_y)
}

pub fn render(data: &FigureData, title: &str) -> String {
    let (min_x, max_x, min_y, max_y) = bounds(data);
    let sx = (WIDTH - 2.0 * MARGIN) / (max_x - min_x);
    let sy = (HEIGHT - 2.0 * MARGIN) / (max_y - min_y);
    let map = |x: f64, y: f64| {
        (
            MARGIN + (x - min_x) * sx,
            HEIGHT - MARGIN - (y - min_y) * sy,
        )
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(
        out,
        "<title>{title}</title><rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>"
    );
    for (idx, line) in data.polylines.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let mut attr = String::new();
        for (x, y) in &line.points {
            let (px, py) = map(*x, *y);
            let _ = write!(attr, "{px:.6},{py:.6} ");
        }
        let _ = writeln!(
            out,
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1\" points=\"{}\"/>",
            attr.trim_end()
        );
    }
    for (x, y) in &data.markers {
        let (px, py) = map(*x, *y);
        let _ = writeln!(
            out,
            "<circle cx=\"{px:.6}\" cy=\"{py:.6}\" r=\"3\" fill=\"black\"/>"
        );
    }
    out.push_str("</svg>\n");
    out
}
