//! CSV serialization: the world-line schema plus the figure and statistics
//! tables. Numbers are written with 17 significant digits so re-reading a
//! file reproduces the doubles bit-exactly.

use crate::spacetime::{Event6, ProperTimeKind};
use crate::worldlines::WorldlineSet;
use std::fmt::Write as _;

pub const WORLDLINE_HEADER: &str = "kind,proper_time,x0,x1,x2,x3,x4,x5";

/// 17-significant-digit scientific notation; round-trip exact for f64.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn worldlines_to_csv(set: &WorldlineSet<f64>) -> String {
    let mut out = String::new();
    out.push_str(WORLDLINE_HEADER);
    out.push('\n');
    for line in &set.lines {
        for s in &line.samples {
            let c = s.event.coords();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                line.kind.name(),
                fmt_f64(s.s),
                fmt_f64(c[0]),
                fmt_f64(c[1]),
                fmt_f64(c[2]),
                fmt_f64(c[3]),
                fmt_f64(c[4]),
                fmt_f64(c[5]),
            );
        }
    }
    out
}

/// Parse a world-line CSV back into (kind, proper_time, event) rows.
pub fn parse_worldline_csv(text: &str) -> Result<Vec<(ProperTimeKind, f64, Event6<f64>)>, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == WORLDLINE_HEADER => {}
        other => return Err(format!("bad header: {other:?}")),
    }
    let mut rows = Vec::new();
    for (idx, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 8 {
            return Err(format!(
                "row {idx}: expected 8 columns, got {}",
                fields.len()
            ));
        }
        let kind = ProperTimeKind::parse(fields[0])
            .ok_or_else(|| format!("row {idx}: unknown kind {}", fields[0]))?;
        let mut vals = [0.0f64; 7];
        for (slot, f) in vals.iter_mut().zip(&fields[1..]) {
            *slot = f.parse::<f64>().map_err(|e| format!("row {idx}: {e}"))?;
        }
        rows.push((
            kind,
            vals[0],
            Event6::new(vals[1], vals[2], vals[3], vals[4], vals[5], vals[6]),
        ));
    }
    Ok(rows)
}

/// Generic small table: header + stringly rows, every float already
/// formatted by the caller.
#[derive(Debug, Clone)]
pub struct Table {
    pub header: String,
    pub rows: Vec<String>,
}

impl Table {
    pub fn new(header: &str) -> Self {
        Self {
            header: header.to_string(),
            rows: Vec::new(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.rows.len() * 32 + self.header.len() + 1);
        out.push_str(&self.header);
        out.push('\n');
        for r in &self.rows {
            out.push_str(r);
            out.push('\n');
        }
        out
    }
}
