//! Run configuration: command-line flags merged over an optional key=value
//! config file; flags win.

use crate::worldlines::{Orientation, ParticleClass, ParticleSpec, WorldlineError};
use clap::{Args, Parser, Subcommand};
use std::collections::BTreeMap;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "multitime", disable_help_subcommand = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sample world lines and write them as CSV.
    Generate(Flags),
    /// Run the residual verification suite.
    Verify(Flags),
    /// Occupancy and measurement statistics.
    Stats(Flags),
    /// Emit figure data as CSV plus a deterministic SVG.
    Figure {
        /// fig1 | fig2 | fig3
        which: String,
        #[command(flatten)]
        flags: Flags,
    },
}

#[derive(Args, Debug, Default, Clone)]
pub struct Flags {
    /// spinless | photon | boson | fermion
    #[arg(long)]
    pub class: Option<String>,
    #[arg(long)]
    pub mass: Option<f64>,
    /// Frame speed (along x1 for spinless/fermion, x3 for boson).
    #[arg(long)]
    pub speed: Option<f64>,
    /// Photon wave number.
    #[arg(long)]
    pub wavenumber: Option<f64>,
    /// plus | minus (fermion spin orientation)
    #[arg(long)]
    pub orientation: Option<String>,
    /// Samples per period.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub periods: Option<usize>,
    /// Finite-difference step.
    #[arg(long)]
    pub step: Option<f64>,
    /// Stencil order (2 or 4).
    #[arg(long)]
    pub order: Option<u8>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Monte Carlo trial count.
    #[arg(long)]
    pub trials: Option<u64>,
    /// Coincidence window in radians.
    #[arg(long)]
    pub window: Option<f64>,
    /// Particle / lattice-point count.
    #[arg(long)]
    pub count: Option<usize>,
    /// packing | capacity | coincidence (stats; defaults from class)
    #[arg(long)]
    pub mode: Option<String>,
    /// Comma-separated verify groups (kg,proca,coulomb,interval,ladder,dirac).
    #[arg(long)]
    pub checks: Option<String>,
    /// Shell defect injected into the on-shell Klein-Gordon fixture.
    #[arg(long = "inject-offshell")]
    pub inject_offshell: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// key=value config file; flags override file entries.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Fully resolved run parameters.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub class: ParticleClass,
    pub mass: f64,
    pub speed: f64,
    pub wavenumber: f64,
    pub orientation: Orientation,
    pub samples: usize,
    pub periods: usize,
    pub step: f64,
    pub order: u8,
    pub seed: u64,
    pub trials: u64,
    pub window: f64,
    pub count: usize,
    pub mode: Option<String>,
    pub checks: Option<Vec<String>>,
    pub inject_offshell: f64,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            class: ParticleClass::Spinless,
            mass: 1.0,
            speed: 0.5,
            wavenumber: 1.0,
            orientation: Orientation::PlusX3,
            samples: 256,
            periods: 1,
            step: 1e-3,
            order: 4,
            seed: 0,
            trials: 100_000,
            window: std::f64::consts::PI / 8.0,
            count: 8,
            mode: None,
            checks: None,
            inject_offshell: 0.0,
            out: None,
        }
    }
}

fn parse_config_file(path: &PathBuf) -> Result<BTreeMap<String, String>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
    let mut map = BTreeMap::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("config line {}: expected key=value, got {line:?}", ln + 1))?;
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn parsed<T: std::str::FromStr>(
    map: &BTreeMap<String, String>,
    key: &str,
) -> Result<Option<T>, String>
where
    T::Err: std::fmt::Display,
{
    match map.get(key) {
        None => Ok(None),
        Some(v) => v
            .parse::<T>()
            .map(Some)
            .map_err(|e| format!("config key {key}: {e}")),
    }
}

impl RunConfig {
    /// Defaults, overlaid by the config file, overlaid by flags.
    pub fn resolve(flags: &Flags) -> Result<Self, String> {
        let mut cfg = Self::default();
        if let Some(path) = &flags.config {
            let map = parse_config_file(path)?;
            for key in map.keys() {
                const KNOWN: [&str; 16] = [
                    "class",
                    "mass",
                    "speed",
                    "wavenumber",
                    "orientation",
                    "samples",
                    "periods",
                    "step",
                    "order",
                    "seed",
                    "trials",
                    "window",
                    "count",
                    "mode",
                    "checks",
                    "inject-offshell",
                ];
                if !KNOWN.contains(&key.as_str()) && key != "out" {
                    return Err(format!("config key {key} does not match any flag"));
                }
            }
            if let Some(c) = map.get("class") {
                cfg.class = ParticleClass::parse(c).ok_or_else(|| format!("unknown class {c}"))?;
            }
            if let Some(v) = parsed::<f64>(&map, "mass")? {
                cfg.mass = v;
            }
            if let Some(v) = parsed::<f64>(&map, "speed")? {
                cfg.speed = v;
            }
            if let Some(v) = parsed::<f64>(&map, "wavenumber")? {
                cfg.wavenumber = v;
            }
            if let Some(o) = map.get("orientation") {
                cfg.orientation = parse_orientation(o)?;
            }
            if let Some(v) = parsed::<usize>(&map, "samples")? {
                cfg.samples = v;
            }
            if let Some(v) = parsed::<usize>(&map, "periods")? {
                cfg.periods = v;
            }
            if let Some(v) = parsed::<f64>(&map, "step")? {
                cfg.step = v;
            }
            if let Some(v) = parsed::<u8>(&map, "order")? {
                cfg.order = v;
            }
            if let Some(v) = parsed::<u64>(&map, "seed")? {
                cfg.seed = v;
            }
            if let Some(v) = parsed::<u64>(&map, "trials")? {
                cfg.trials = v;
            }
            if let Some(v) = parsed::<f64>(&map, "window")? {
                cfg.window = v;
            }
            if let Some(v) = parsed::<usize>(&map, "count")? {
                cfg.count = v;
            }
            if let Some(v) = map.get("mode") {
                cfg.mode = Some(v.clone());
            }
            if let Some(v) = map.get("checks") {
                cfg.checks = Some(split_checks(v));
            }
            if let Some(v) = parsed::<f64>(&map, "inject-offshell")? {
                cfg.inject_offshell = v;
            }
            if let Some(v) = map.get("out") {
                cfg.out = Some(PathBuf::from(v));
            }
        }

        if let Some(c) = &flags.class {
            cfg.class = ParticleClass::parse(c).ok_or_else(|| format!("unknown class {c}"))?;
        }
        if let Some(v) = flags.mass {
            cfg.mass = v;
        }
        if let Some(v) = flags.speed {
            cfg.speed = v;
        }
        if let Some(v) = flags.wavenumber {
            cfg.wavenumber = v;
        }
        if let Some(o) = &flags.orientation {
            cfg.orientation = parse_orientation(o)?;
        }
        if let Some(v) = flags.samples {
            cfg.samples = v;
        }
        if let Some(v) = flags.periods {
            cfg.periods = v;
        }
        if let Some(v) = flags.step {
            cfg.step = v;
        }
        if let Some(v) = flags.order {
            cfg.order = v;
        }
        if let Some(v) = flags.seed {
            cfg.seed = v;
        }
        if let Some(v) = flags.trials {
            cfg.trials = v;
        }
        if let Some(v) = flags.window {
            cfg.window = v;
        }
        if let Some(v) = flags.count {
            cfg.count = v;
        }
        if let Some(v) = &flags.mode {
            cfg.mode = Some(v.clone());
        }
        if let Some(v) = &flags.checks {
            cfg.checks = Some(split_checks(v));
        }
        if let Some(v) = flags.inject_offshell {
            cfg.inject_offshell = v;
        }
        if let Some(v) = &flags.out {
            cfg.out = Some(v.clone());
        }

        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), String> {
        if self.mass <= 0.0 && self.class != ParticleClass::Photon {
            return Err("mass must be positive".into());
        }
        if !(0.0..1.0).contains(&self.speed) && self.class != ParticleClass::Photon {
            return Err("speed must lie in [0, 1)".into());
        }
        if self.samples == 0 || self.periods == 0 {
            return Err("samples and periods must be positive".into());
        }
        if self.step <= 0.0 {
            return Err("step must be positive".into());
        }
        if self.order != 2 && self.order != 4 {
            return Err("order must be 2 or 4".into());
        }
        if self.wavenumber <= 0.0 {
            return Err("wavenumber must be positive".into());
        }
        Ok(())
    }

    /// Velocity vector implied by the class conventions.
    pub fn velocity(&self) -> [f64; 3] {
        match self.class {
            ParticleClass::Boson => [0.0, 0.0, self.speed],
            _ => [self.speed, 0.0, 0.0],
        }
    }

    pub fn particle_spec(&self) -> Result<ParticleSpec<f64>, WorldlineError> {
        match self.class {
            ParticleClass::Spinless => ParticleSpec::spinless(self.mass, self.velocity()),
            ParticleClass::Photon => ParticleSpec::photon(self.wavenumber),
            ParticleClass::Boson => ParticleSpec::boson(self.mass, self.speed),
            ParticleClass::Fermion => {
                ParticleSpec::fermion(self.mass, self.velocity(), self.orientation)
            }
        }
    }
}

fn parse_orientation(s: &str) -> Result<Orientation, String> {
    match s {
        "plus" | "+x3" => Ok(Orientation::PlusX3),
        "minus" | "-x3" => Ok(Orientation::MinusX3),
        other => Err(format!("unknown orientation {other} (use plus|minus)")),
    }
}

fn split_checks(v: &str) -> Vec<String> {
    v.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let dir = std::env::temp_dir().join(format!("mt-cfg-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.cfg");
        std::fs::write(&path, "# comment\nmass = 2.5\nspeed=0.25\nseed=9\n").unwrap();
        let flags = Flags {
            config: Some(path.clone()),
            mass: Some(3.5),
            ..Default::default()
        };
        let cfg = RunConfig::resolve(&flags).unwrap();
        assert_eq!(cfg.mass, 3.5); // flag wins
        assert_eq!(cfg.speed, 0.25); // file value
        assert_eq!(cfg.seed, 9);
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn unknown_config_key_rejected() {
        let dir = std::env::temp_dir().join(format!("mt-cfg2-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.cfg");
        std::fs::write(&path, "masss=1\n").unwrap();
        let flags = Flags {
            config: Some(path),
            ..Default::default()
        };
        assert!(RunConfig::resolve(&flags).is_err());
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn validation_catches_bad_numbers() {
        let flags = Flags {
            order: Some(3),
            ..Default::default()
        };
        assert!(RunConfig::resolve(&flags).is_err());
        let flags = Flags {
            speed: Some(1.0),
            ..Default::default()
        };
        assert!(RunConfig::resolve(&flags).is_err());
    }

    #[test]
    fn empty_checks_list_is_empty() {
        let flags = Flags {
            checks: Some("".into()),
            ..Default::default()
        };
        let cfg = RunConfig::resolve(&flags).unwrap();
        assert_eq!(cfg.checks.as_deref(), Some(&[][..]));
    }
}
