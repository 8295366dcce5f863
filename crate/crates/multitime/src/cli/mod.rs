//! Command-line surface: generate world lines, run the verification suite,
//! run statistics simulations, and emit figure data as CSV and SVG.
//!
//! Exit codes: 0 all pass, 1 verification failure, 2 I/O error,
//! 3 configuration error. No other codes are produced.

pub mod config;
pub mod csv;
pub mod figures;
pub mod svg;
pub mod verify;

pub use config::{Cli, Command, Flags, RunConfig};
pub use figures::Figure;

use crate::statistics::{boson_packing, fermion_capacity, measurement_mc, Cell};
use crate::worldlines::{debroglie_lattice, worldline_set, ParticleClass, SampleGrid};
use clap::Parser;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

enum CliError {
    Config(String),
    Io(String),
    VerifyFailed,
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            Self::Config(_) => EXIT_CONFIG,
            Self::Io(_) => EXIT_IO,
            Self::VerifyFailed => EXIT_VERIFY_FAILED,
        }
    }
}

/// Parse arguments, run one command, and return the process exit code.
pub fn run<I, A>(args: I) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not configuration errors.
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return EXIT_OK;
            }
            eprintln!("{e}");
            return EXIT_CONFIG;
        }
    };
    let outcome = match &cli.command {
        Command::Generate(flags) => resolved(flags).and_then(cmd_generate),
        Command::Verify(flags) => resolved(flags).and_then(cmd_verify),
        Command::Stats(flags) => resolved(flags).and_then(cmd_stats),
        Command::Figure { which, flags } => resolved(flags).and_then(|cfg| {
            let fig = Figure::parse(which)
                .ok_or_else(|| CliError::Config(format!("unknown figure {which}")))?;
            cmd_figure(fig, cfg)
        }),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            match &e {
                CliError::Config(msg) => eprintln!("configuration error: {msg}"),
                CliError::Io(msg) => eprintln!("I/O error: {msg}"),
                CliError::VerifyFailed => {}
            }
            e.code()
        }
    }
}

fn resolved(flags: &Flags) -> Result<RunConfig, CliError> {
    RunConfig::resolve(flags).map_err(CliError::Config)
}

/// Write-then-rename so output files appear atomically.
fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let tmp = path.with_extension(format!(
        "{}.tmp",
        path.extension().and_then(|e| e.to_str()).unwrap_or("out")
    ));
    std::fs::write(&tmp, contents)
        .and_then(|()| std::fs::rename(&tmp, path))
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn out_path(cfg: &RunConfig, default_name: &str) -> PathBuf {
    match &cfg.out {
        Some(p) if p.extension().is_some() => p.clone(),
        Some(p) => p.join(default_name),
        None => PathBuf::from(default_name),
    }
}

fn cmd_generate(cfg: RunConfig) -> Result<(), CliError> {
    let spec = cfg
        .particle_spec()
        .map_err(|e| CliError::Config(e.to_string()))?;
    let grid = SampleGrid {
        samples_per_period: cfg.samples,
        periods: cfg.periods,
    };
    let set = worldline_set(&spec, grid).map_err(|e| CliError::Config(e.to_string()))?;
    let path = out_path(&cfg, "worldlines.csv");
    write_atomic(&path, &csv::worldlines_to_csv(&set))?;

    println!("class={} m0={} speed={}", spec.class, spec.m0, spec.speed());
    println!("period={:.12e}", set.period.period);
    match set.period.wavelength {
        Some(w) => println!("wavelength={w:.12e}"),
        None => println!("wavelength=none"),
    }
    if spec.class != ParticleClass::Photon && spec.speed() > 0.0 {
        let lat = debroglie_lattice(&spec, 2).map_err(|e| CliError::Config(e.to_string()))?;
        println!(
            "lattice_dx={:.12e} lattice_dt={:.12e}",
            lat.spec.dx, lat.spec.dt
        );
    }
    println!("rows_per_kind={} file={}", grid.total(), path.display());
    Ok(())
}

fn cmd_verify(cfg: RunConfig) -> Result<(), CliError> {
    let groups = match &cfg.checks {
        None => verify::GROUPS.iter().map(|s| s.to_string()).collect(),
        Some(list) if list.is_empty() => {
            return Err(CliError::Config(
                "empty check selection: nothing to verify".into(),
            ))
        }
        Some(list) => {
            for g in list {
                if !verify::GROUPS.contains(&g.as_str()) {
                    return Err(CliError::Config(format!(
                        "unknown check group {g} (available: {})",
                        verify::GROUPS.join(",")
                    )));
                }
            }
            list.clone()
        }
    };
    let settings = verify::VerifySettings {
        step: cfg.step,
        order: cfg.order,
        inject_offshell: cfg.inject_offshell,
        groups,
    };
    let reports = verify::run_suite(&settings);
    let mut all_pass = true;
    for r in &reports {
        println!("{r}");
        all_pass &= r.passed();
    }
    if all_pass {
        Ok(())
    } else {
        Err(CliError::VerifyFailed)
    }
}

fn cmd_stats(cfg: RunConfig) -> Result<(), CliError> {
    let spec = cfg
        .particle_spec()
        .map_err(|e| CliError::Config(e.to_string()))?;
    let mode = cfg.mode.clone().unwrap_or_else(|| match spec.class {
        ParticleClass::Fermion => "capacity".to_string(),
        _ => "packing".to_string(),
    });
    match mode.as_str() {
        "packing" => {
            let cell = Cell::compton(&spec).map_err(|e| CliError::Config(e.to_string()))?;
            let offset = cell.side * 1e-3;
            let r = boson_packing(cfg.count, &cell, &spec, offset)
                .map_err(|e| CliError::Config(e.to_string()))?;
            println!(
                "placed={} intersections={} capacity_reached={}",
                r.placed,
                r.intersections.len(),
                r.capacity_reached
            );
            let mut table = csv::Table::new("i,j,min_distance");
            for ((i, j), d) in &r.pair_distances {
                table.rows.push(format!("{i},{j},{}", csv::fmt_f64(*d)));
            }
            write_atomic(&out_path(&cfg, "packing.csv"), &table.to_csv())?;
        }
        "capacity" => {
            let cell = Cell::compton(&spec).map_err(|e| CliError::Config(e.to_string()))?;
            let r = fermion_capacity(&cell, &spec, cfg.count.max(3))
                .map_err(|e| CliError::Config(e.to_string()))?;
            println!(
                "placed={} capacity_reached={}",
                r.placed, r.capacity_reached
            );
            println!(
                "attempts={} blocked={} intersections={}",
                r.attempts,
                r.blocked_attempts,
                r.intersections.len()
            );
            let mut table = csv::Table::new("i,j,min_distance");
            for ((i, j), d) in &r.pair_distances {
                table.rows.push(format!("{i},{j},{}", csv::fmt_f64(*d)));
            }
            write_atomic(&out_path(&cfg, "capacity.csv"), &table.to_csv())?;
        }
        "coincidence" => {
            let r = measurement_mc(&spec, cfg.count, cfg.trials, cfg.window, cfg.seed)
                .map_err(|e| CliError::Config(e.to_string()))?;
            println!(
                "trials={} window={:.6e} total_rate={:.6e}",
                r.trials, r.window, r.total_rate
            );
            let mut table = csv::Table::new("position,t,x1,count,frequency");
            for (idx, pos) in r.positions.iter().enumerate() {
                table.rows.push(format!(
                    "{idx},{},{},{},{}",
                    csv::fmt_f64(pos.t),
                    csv::fmt_f64(pos.x1),
                    r.counts[idx],
                    csv::fmt_f64(r.frequencies[idx]),
                ));
            }
            write_atomic(&out_path(&cfg, "coincidence.csv"), &table.to_csv())?;
        }
        other => {
            return Err(CliError::Config(format!(
                "unknown stats mode {other} (packing|capacity|coincidence)"
            )))
        }
    }
    Ok(())
}

fn cmd_figure(which: Figure, cfg: RunConfig) -> Result<(), CliError> {
    let spec = cfg
        .particle_spec()
        .map_err(|e| CliError::Config(e.to_string()))?;
    let data = match which {
        Figure::Fig1 => {
            figures::fig1(&spec, cfg.count).map_err(|e| CliError::Config(e.to_string()))?
        }
        Figure::Fig2 => {
            let fspec = if spec.class == ParticleClass::Fermion {
                spec
            } else {
                crate::worldlines::ParticleSpec::fermion(cfg.mass, [0.0; 3], cfg.orientation)
                    .map_err(|e| CliError::Config(e.to_string()))?
            };
            let grid = SampleGrid {
                samples_per_period: cfg.samples,
                periods: cfg.periods,
            };
            figures::fig2(&fspec, grid).map_err(|e| CliError::Config(e.to_string()))?
        }
        Figure::Fig3 => {
            let bspec = if matches!(spec.class, ParticleClass::Boson | ParticleClass::Spinless) {
                spec
            } else {
                crate::worldlines::ParticleSpec::boson(cfg.mass, cfg.speed)
                    .map_err(|e| CliError::Config(e.to_string()))?
            };
            let offset = bspec.compton_wavelength() * 1e-3;
            figures::fig3(&bspec, offset).map_err(|e| CliError::Config(e.to_string()))?
        }
    };
    let csv_path = out_path(&cfg, &format!("{}.csv", which.name()));
    write_atomic(&csv_path, &data.table.to_csv())?;
    let svg_path = csv_path.with_extension("svg");
    write_atomic(&svg_path, &svg::render(&data, which.name()))?;
    println!("csv={} svg={}", csv_path.display(), svg_path.display());
    Ok(())
}
