//! Command-line front end. The binary only forwards `std::env::args` here.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::ass::{ass_primes, gamma_set};
use crate::betti::betti_table;
use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::parse::parse_ideal_file;
use crate::report::depth_report;
use crate::selftest::run_selftest;
use crate::synth::{
    synthesize_outcome, verify, SynthesisCertificate, SynthesisOutcome, TargetFunction,
};

/// Default seed of the randomized self-test checks.
pub const DEFAULT_SEED: u64 = 20_260_114;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct CommandConfig {
    /// Prime characteristic of the coefficient field; repeat to compare several.
    #[arg(long = "char", value_name = "P", global = true, default_values_t = [2u64])]
    pub characteristic: Vec<u64>,
    /// Largest power n to compute.
    #[arg(long, value_name = "N", global = true, default_value_t = 5)]
    pub max_n: u32,
    /// Worker threads (default: all cores).
    #[arg(long, value_name = "K", global = true)]
    pub threads: Option<usize>,
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Maximum lcm-lattice grid candidates.
    #[arg(
        long,
        value_name = "COUNT",
        global = true,
        default_value_t = 10_000_000
    )]
    pub budget_grid: u128,
    /// Maximum vertices of a simplicial complex.
    #[arg(long, value_name = "COUNT", global = true, default_value_t = 20)]
    pub budget_vertices: usize,
    /// Maximum local-cohomology degree cells.
    #[arg(
        long,
        value_name = "COUNT",
        global = true,
        default_value_t = 50_000_000
    )]
    pub budget_cells: u128,
}

impl CommandConfig {
    fn engine(&self, p: u64) -> Result<EngineConfig> {
        let cfg = EngineConfig {
            characteristic: p,
            grid_budget: self.budget_grid,
            vertex_budget: self.budget_vertices,
            cell_budget: self.budget_cells,
            ..EngineConfig::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        if self.max_n == 0 {
            return Err(Error::InvalidArgument("--max-n must be at least 1".into()));
        }
        if self.threads == Some(0) {
            return Err(Error::InvalidArgument("--threads must be positive".into()));
        }
        for &p in &self.characteristic {
            self.engine(p)?;
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "monodepth",
    version,
    about = "Depth functions, Betti numbers and associated primes of monomial ideals"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: CommandConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// depth S/I^n and pd I^n for n up to --max-n.
    Depth { file: PathBuf },
    /// Multigraded Betti numbers of S/I.
    Betti { file: PathBuf },
    /// Associated primes of I^n and the powers where the maximal ideal is associated.
    Ass { file: PathBuf },
    /// Build an ideal with the given depth function, e.g. `0,2,1,1*`.
    Synth {
        target: String,
        /// Where to write the certificate.
        #[arg(long, short, default_value = "certificate.json")]
        out: PathBuf,
    },
    /// Replay a certificate and recheck its depth function up to --max-n.
    Verify { cert: PathBuf },
    /// Calibration, oracle agreement and regression checks.
    Selftest,
}

fn read_ideal(path: &PathBuf) -> Result<MonomialIdeal> {
    let src =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let ideal = parse_ideal_file(&src)?;
    if !ideal.is_proper_nonzero() {
        return Err(Error::Precondition(
            "the ideal must be nonzero and proper".into(),
        ));
    }
    Ok(ideal)
}

fn fmt_list<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn json_line(out: &mut dyn Write, v: &serde_json::Value) -> Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("json values serialize")
    )?;
    Ok(())
}

fn run_depth(file: &PathBuf, c: &CommandConfig, out: &mut dyn Write) -> Result<i32> {
    let ideal = read_ideal(file)?;
    let mut all = Vec::new();
    for &p in &c.characteristic {
        let report = depth_report(&ideal, c.max_n, &c.engine(p)?)?;
        if c.format == Format::Table {
            writeln!(
                out,
                "char {p}, {} variables, {} generators",
                ideal.nvars(),
                ideal.len()
            )?;
            writeln!(
                out,
                "{:>4} {:>6} {:>9} {:>8} {:>8}",
                "n", "depth", "pd(I^n)", "lattice", "ms"
            )?;
            for e in &report {
                writeln!(
                    out,
                    "{:>4} {:>6} {:>9} {:>8} {:>8}",
                    e.n, e.depth, e.pd_ideal, e.lattice_size, e.wall_ms
                )?;
            }
        }
        all.extend(report);
    }
    if c.format == Format::Json {
        json_line(out, &serde_json::to_value(&all).expect("report serializes"))?;
    }
    Ok(0)
}

fn run_betti(file: &PathBuf, c: &CommandConfig, out: &mut dyn Write) -> Result<i32> {
    let ideal = read_ideal(file)?;
    let mut json = Vec::new();
    for &p in &c.characteristic {
        let t = betti_table(&ideal, &c.engine(p)?)?;
        match c.format {
            Format::Table => {
                writeln!(
                    out,
                    "char {p}: pd S/I = {}, totals {}",
                    t.projective_dimension(),
                    fmt_list(&t.totals())
                )?;
                for ((i, a), b) in &t.entries {
                    writeln!(out, "  beta_{i} at {:<24} {b}", format!("{a:?}"))?;
                }
            }
            Format::Json => {
                let entries: Vec<serde_json::Value> = t
                    .entries
                    .iter()
                    .map(|((i, a), b)| serde_json::json!({ "i": i, "a": a, "beta": b }))
                    .collect();
                json.push(serde_json::json!({
                    "char": p,
                    "pd": t.projective_dimension(),
                    "totals": t.totals(),
                    "lattice_size": t.lattice_size,
                    "entries": entries,
                }));
            }
        }
    }
    if c.format == Format::Json {
        json_line(out, &serde_json::Value::Array(json))?;
    }
    Ok(0)
}

fn run_ass(file: &PathBuf, c: &CommandConfig, out: &mut dyn Write) -> Result<i32> {
    let ideal = read_ideal(file)?;
    let cfg = c.engine(c.characteristic[0])?;
    let gamma = gamma_set(&ideal, c.max_n)?;
    let mut powers = Vec::new();
    let mut q = ideal.clone();
    for n in 1..=c.max_n {
        if n > 1 {
            q = q.product(&ideal)?;
        }
        let r = ass_primes(&q, &cfg).map_err(|e| e.at_power(n))?;
        if c.format == Format::Table {
            let primes: Vec<String> = r.primes.iter().map(ToString::to_string).collect();
            writeln!(out, "Ass(S/I^{n}) = {{{}}}", primes.join(", "))?;
        }
        powers.push(r);
    }
    match c.format {
        Format::Table => writeln!(
            out,
            "Gamma up to N = {}: {{{}}}",
            gamma.bound,
            fmt_list(&gamma.members)
        )?,
        Format::Json => {
            let mut v = powers[0].to_json(Some(&gamma));
            v["powers"] = powers
                .iter()
                .zip(1..)
                .map(|(r, n)| {
                    let mut e = r.to_json(None);
                    e["n"] = n.into();
                    e
                })
                .collect();
            json_line(out, &v)?;
        }
    }
    Ok(0)
}

fn print_certificate(cert: &SynthesisCertificate, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "target {}", cert.target)?;
    for a in &cert.atoms {
        let tag = if a.empirical {
            " (engine-verified candidate)"
        } else {
            ""
        };
        writeln!(
            out,
            "  atom {:?} d = {} x{}{tag}",
            a.spec.kind, a.spec.d, a.spec.multiplicity
        )?;
    }
    writeln!(
        out,
        "ring of {} variables, pd constant {}",
        cert.variables, cert.pd_constant
    )?;
    writeln!(out, "{:>4} {:>6} {:>6}", "n", "depth", "Gamma")?;
    for (i, d) in cert.depths.iter().enumerate() {
        let n = i as u32 + 1;
        writeln!(
            out,
            "{n:>4} {d:>6} {:>6}",
            if cert.gamma.contains(&n) { "yes" } else { "" }
        )?;
    }
    Ok(())
}

fn run_synth(target: &str, path: &PathBuf, c: &CommandConfig, out: &mut dyn Write) -> Result<i32> {
    let f: TargetFunction = target.parse()?;
    let cfg = c.engine(c.characteristic[0])?;
    let n = c.max_n.max(f.stable_from());
    let (cert, error) = match synthesize_outcome(&f, n, &cfg)? {
        SynthesisOutcome::Verified(cert) => (cert, None),
        SynthesisOutcome::Partial { certificate, error } => (certificate, Some(error)),
    };
    std::fs::write(path, cert.to_json())
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    match c.format {
        Format::Table => {
            print_certificate(&cert, out)?;
            writeln!(out, "certificate written to {}", path.display())?;
        }
        Format::Json => json_line(
            out,
            &serde_json::to_value(&cert).expect("certificate serializes"),
        )?,
    }
    match error {
        Some(e) => Err(e),
        None => Ok(0),
    }
}

fn run_verify(path: &PathBuf, c: &CommandConfig, out: &mut dyn Write) -> Result<i32> {
    let src =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let cert = SynthesisCertificate::from_json(&src)?;
    let mut ok = true;
    let mut reports = Vec::new();
    for &p in &c.characteristic {
        let r = verify(&cert, c.max_n, &c.engine(p)?)?;
        ok &= r.all_pass;
        if c.format == Format::Table {
            writeln!(out, "char {p}: target {}", r.target)?;
            writeln!(
                out,
                "{:>4} {:>8} {:>8} {:>6} {:>6} {:>8}",
                "n", "expected", "computed", "pass", "Gamma", "ms"
            )?;
            for row in &r.rows {
                writeln!(
                    out,
                    "{:>4} {:>8} {:>8} {:>6} {:>6} {:>8}{}",
                    row.n,
                    row.expected,
                    row.computed,
                    if row.pass { "ok" } else { "FAIL" },
                    if row.in_gamma { "yes" } else { "" },
                    row.entry.wall_ms,
                    if row.fresh {
                        "  (beyond certificate)"
                    } else {
                        ""
                    }
                )?;
            }
        }
        reports.push(r);
    }
    if c.format == Format::Json {
        json_line(
            out,
            &serde_json::to_value(&reports).expect("report serializes"),
        )?;
    }
    Ok(if ok { 0 } else { 1 })
}

fn run_selftest_cmd(c: &CommandConfig, out: &mut dyn Write) -> Result<i32> {
    let mut code = 0;
    let mut reports = Vec::new();
    for &p in &c.characteristic {
        let r = run_selftest(&c.engine(p)?, c.seed)?;
        if c.format == Format::Table {
            for check in &r.checks {
                writeln!(
                    out,
                    "[{}] char {p} {}: {}",
                    if check.pass { "pass" } else { "FAIL" },
                    check.name,
                    check.detail
                )?;
            }
        }
        if code == 0 {
            code = r.exit_code();
        }
        reports.push(r);
    }
    if c.format == Format::Json {
        json_line(
            out,
            &serde_json::to_value(&reports).expect("report serializes"),
        )?;
    }
    Ok(code)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let c = &cli.config;
    c.validate()?;
    if let Some(k) = c.threads {
        // Fails only if a pool already exists, in which case the existing one is used.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global();
    }
    match &cli.command {
        Command::Depth { file } => run_depth(file, c, out),
        Command::Betti { file } => run_betti(file, c, out),
        Command::Ass { file } => run_ass(file, c, out),
        Command::Synth { target, out: path } => run_synth(target, path, c, out),
        Command::Verify { cert } => run_verify(cert, c, out),
        Command::Selftest => run_selftest_cmd(c, out),
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
