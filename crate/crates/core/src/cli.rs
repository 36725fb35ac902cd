//! Command-line front end.
//!
//! Exit codes: 0 success, 1 negative result (invalid code, no code found,
//! table mismatch), 2 usage or parse error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::code::MajoranaCode;
use crate::constructions::{
    extend_by_pair, hamming_majorana, map_qubit_code, parse_pauli_file, strip_weight2_pairs,
};
use crate::distance::{brute_force_distance, DistanceResult};
use crate::error::Error;
use crate::mcode::{write_mcode, write_mcode_with_comments, McodeFile};
use crate::search::{run_campaign, CampaignOptions, WalkParams};
use crate::tables::{self, nd_upper_bound_d4, upper_bound_d4, TableId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mcode",
    version,
    about = "Small Majorana fermion stabilizer codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a code file and report N_stab, K, degeneracy and distance.
    Verify {
        path: PathBuf,
        /// Largest operator weight enumerated when computing the distance.
        #[arg(long, default_value_t = 8)]
        max_weight: u32,
        #[arg(long)]
        json: bool,
    },
    /// Emit the Hamming Majorana code on 2^m modes.
    Hamming { m: u32 },
    /// Map a qubit stabilizer code (one Pauli string per line) to a Majorana code.
    MapQubit {
        path: PathBuf,
        /// Number of qubits; required when the file lists no stabilizers.
        #[arg(long)]
        nqub: Option<usize>,
    },
    /// Add two modes and the stabilizer on them.
    Extend { path: PathBuf },
    /// Remove pairs of modes whose product is a stabilizer.
    Strip { path: PathBuf },
    /// Print a shipped fixture (d4/nmaj20, d4/nmaj24, d4/nmaj28, d4/nmaj30, d6/nmaj28, d6/nmaj30).
    Fixture { name: String },
    /// Run a random-walk search campaign.
    Search {
        #[arg(long)]
        nmaj: usize,
        #[arg(long)]
        nstab: usize,
        #[arg(long, default_value_t = 4)]
        distance: u32,
        #[arg(long, default_value = "1")]
        runs: String,
        #[arg(long, default_value = "1e6")]
        steps: String,
        /// Master seed; drawn from entropy (and printed) when absent.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        threads: Option<usize>,
        /// Directory for report.json and found codes.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Stop reporting after the first successful run.
        #[arg(long)]
        stop_early: bool,
        #[arg(long)]
        json: bool,
    },
    /// Rebuild a table (1, 2, 3, A or B) and compare with the stored values.
    Reproduce {
        table: TableId,
        #[arg(long)]
        json: bool,
    },
}

/// Parses counts like `1000000`, `1e6` or `2.5e3`.
pub fn parse_count(s: &str) -> Result<u64, String> {
    let s = s.trim().replace('_', "");
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    match s.parse::<f64>() {
        Ok(f) if f >= 0.0 && f.fract() == 0.0 && f <= u64::MAX as f64 => Ok(f as u64),
        _ => Err(format!("not a nonnegative integer: {s:?}")),
    }
}

/// Parses arguments and runs a command, writing to the given streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(err, "{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn read_code_file(path: &Path) -> Result<McodeFile, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    McodeFile::parse(&text)
}

fn read_valid_code(path: &Path) -> Result<MajoranaCode, Error> {
    read_code_file(path)?.validated()
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse {
        line: 0,
        msg: e.to_string(),
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    match cmd {
        Command::Verify {
            path,
            max_weight,
            json,
        } => verify(&path, max_weight, json, out),
        Command::Hamming { m } => emit(out, &hamming_majorana(m)?),
        Command::MapQubit { path, nqub } => {
            let text = fs::read_to_string(&path).map_err(io_err)?;
            let stabs = parse_pauli_file(&text)?;
            let n = match (nqub, stabs.first()) {
                (Some(n), _) => n,
                (None, Some(s)) => s.nqub(),
                (None, None) => {
                    return Err(Error::BadPauli("empty file needs --nqub".into()));
                }
            };
            emit(out, &map_qubit_code(n, &stabs)?)
        }
        Command::Extend { path } => emit(out, &extend_by_pair(&read_valid_code(&path)?)?),
        Command::Strip { path } => emit(out, &strip_weight2_pairs(&read_valid_code(&path)?)?),
        Command::Fixture { name } => {
            out.write_all(tables::fixture(&name)?.text.as_bytes())
                .map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Search {
            nmaj,
            nstab,
            distance,
            runs,
            steps,
            seed,
            threads,
            out: out_dir,
            stop_early,
            json,
        } => {
            let runs = parse_count(&runs).map_err(Error::WalkParams)? as usize;
            let steps = parse_count(&steps).map_err(Error::WalkParams)?;
            if runs == 0 {
                return Err(Error::WalkParams("runs must be positive".into()));
            }
            let master_seed = seed.unwrap_or_else(|| {
                let s: u64 = rand::random();
                let _ = writeln!(err, "master seed: {s}");
                s
            });
            let params = WalkParams::new(nmaj, nstab, distance, steps, master_seed);
            let report = run_campaign(
                &params,
                runs,
                master_seed,
                CampaignOptions {
                    threads,
                    stop_early,
                },
            )?;
            let doc = report.to_json();
            if let Some(dir) = out_dir {
                fs::create_dir_all(&dir).map_err(io_err)?;
                fs::write(dir.join("report.json"), &doc).map_err(io_err)?;
                for (run, code) in &report.found_codes {
                    let text = write_mcode_with_comments(
                        code,
                        &[format!(
                            "found by run {run} (seed {}) target distance {distance}",
                            report.outcomes[*run].seed
                        )],
                    );
                    fs::write(dir.join(format!("found_run{run:05}.mcode")), text)
                        .map_err(io_err)?;
                }
            }
            if json {
                out.write_all(doc.as_bytes()).map_err(io_err)?;
            } else {
                writeln!(
                    out,
                    "nmaj={} nstab={} K={} d={} runs={} steps/run={} master_seed={}",
                    nmaj,
                    nstab,
                    params.k(),
                    distance,
                    report.outcomes.len(),
                    steps,
                    master_seed
                )
                .map_err(io_err)?;
                writeln!(
                    out,
                    "successes={} total_steps={}",
                    report.successes, report.total_steps
                )
                .map_err(io_err)?;
                for (run, code) in &report.found_codes {
                    writeln!(out, "run {run}: found").map_err(io_err)?;
                    for g in code.stored() {
                        writeln!(out, "  {g}").map_err(io_err)?;
                    }
                }
            }
            let _ = writeln!(err, "wall time {:.2}s", report.wall_time.as_secs_f64());
            Ok(if report.successes > 0 {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Reproduce { table, json } => {
            let rep = tables::reproduce(table)?;
            if json {
                let doc = serde_json::to_string_pretty(&rep).expect("serializable");
                writeln!(out, "{doc}").map_err(io_err)?;
            } else {
                out.write_all(render_reproduction(&rep).as_bytes())
                    .map_err(io_err)?;
            }
            Ok(if rep.all_ok() { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

fn emit(out: &mut dyn Write, code: &MajoranaCode) -> Result<i32, Error> {
    out.write_all(write_mcode(code).as_bytes())
        .map_err(io_err)?;
    Ok(EXIT_OK)
}

#[derive(serde::Serialize)]
struct VerifyReport {
    valid: bool,
    violations: Vec<String>,
    nmaj: usize,
    nstab: usize,
    k: usize,
    distance: Option<DistanceResult>,
    min_stabilizer_weight: Option<u32>,
    degenerate: Option<bool>,
    upper_bound_d4: Option<usize>,
    summary: String,
}

fn verify(path: &Path, max_weight: u32, json: bool, out: &mut dyn Write) -> Result<i32, Error> {
    let file = read_code_file(path)?;
    let code = &file.code;
    let mut report = VerifyReport {
        valid: true,
        violations: Vec::new(),
        nmaj: code.nmaj(),
        nstab: code.nstab(),
        k: code.num_logical_qubits(),
        distance: None,
        min_stabilizer_weight: None,
        degenerate: None,
        upper_bound_d4: None,
        summary: String::new(),
    };
    if let Err(vs) = code.validate() {
        report.valid = false;
        report.violations = vs
            .iter()
            .map(|v| match file.line_of(v) {
                Some(l) => format!("line {l}: {v}"),
                None => v.to_string(),
            })
            .collect();
        report.summary = format!("N={} invalid", code.nmaj());
    } else {
        let distance = match brute_force_distance(code, max_weight) {
            Ok(d) => Some(d),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let msw = code.min_stabilizer_weight().ok();
        let threshold = match distance {
            Some(DistanceResult::Exact(d)) | Some(DistanceResult::AtLeast(d)) => Some(d),
            _ => None,
        };
        let degenerate = match (msw, threshold) {
            (Some(m), Some(d)) => Some(m < d),
            _ => None,
        };
        let mut s = format!(
            "N={} N_stab={} K={} distance={}",
            code.nmaj(),
            code.nstab(),
            code.num_logical_qubits(),
            distance.map_or("unknown(enumeration cap)".to_string(), |d| d.to_string())
        );
        match degenerate {
            Some(true) => {
                let _ = write!(s, " degenerate(min stabilizer weight {})", msw.unwrap_or(0));
            }
            Some(false) => s.push_str(" non-degenerate"),
            None => {}
        }
        if threshold.is_some_and(|d| d >= 4) {
            report.upper_bound_d4 = Some(upper_bound_d4(code.nmaj()));
        }
        report.distance = distance;
        report.min_stabilizer_weight = msw;
        report.degenerate = degenerate;
        report.summary = s;
    }

    if json {
        let doc = serde_json::to_string_pretty(&report).expect("serializable");
        writeln!(out, "{doc}").map_err(io_err)?;
    } else {
        writeln!(out, "{}", report.summary).map_err(io_err)?;
        for v in &report.violations {
            writeln!(out, "violation: {v}").map_err(io_err)?;
        }
        if let Some(m) = report.min_stabilizer_weight {
            writeln!(out, "min stabilizer weight: {m}").map_err(io_err)?;
        }
        if let Some(b) = report.upper_bound_d4 {
            let status = if report.k <= b { "ok" } else { "VIOLATED" };
            writeln!(
                out,
                "d=4 bound: K <= {b} (non-degenerate bound {}) {status}",
                nd_upper_bound_d4(code.nmaj())
            )
            .map_err(io_err)?;
        }
    }
    Ok(if report.valid { EXIT_OK } else { EXIT_NEGATIVE })
}

/// Plain-text rendering of a reproduced table.
pub fn render_reproduction(rep: &tables::Reproduction) -> String {
    let mut s = format!("{}\n", rep.title);
    let _ = writeln!(
        s,
        "{:>5} {:>6} {:>3} | {:>6} {:>3} {:>9} {:>7} | {:<8} note",
        "N_maj", "N_stab", "K", "N_stab", "K", "distance", "min_wt", "status"
    );
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    for r in &rep.rows {
        let status = match (r.ok, r.verified) {
            (false, _) => "MISMATCH",
            (true, true) => "ok",
            (true, false) => "stored",
        };
        let _ = writeln!(
            s,
            "{:>5} {:>6} {:>3} | {:>6} {:>3} {:>9} {:>7} | {:<8} {}",
            r.nmaj,
            r.expected_nstab,
            r.expected_k,
            opt(r.computed_nstab),
            opt(r.computed_k),
            r.distance.map_or("-".to_string(), |d| d.to_string()),
            r.min_stabilizer_weight
                .map_or("-".to_string(), |d| d.to_string()),
            status,
            r.note
        );
    }
    let _ = writeln!(
        s,
        "{}",
        if rep.all_ok() {
            "all rows match"
        } else {
            "MISMATCH against stored values"
        }
    );
    s
}
