use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use wzcheck::checks::{self, CheckKind, Disposition};
use wzcheck::combinatorics::Context;
use wzcheck::exact::int;
use wzcheck::primes::is_prime;
use wzcheck::scan::{scan, OutputFormat, ScanConfig, Selector};
use wzcheck::theorems::{self, TheoremId};
use wzcheck::wz::{self, WzPairId};

/// Exact-arithmetic verification of truncated Ramanujan-type supercongruences,
/// their WZ certificates, and the harmonic-number lemmas behind them.
#[derive(Parser)]
#[command(name = "wzcheck", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a batch of checks over a prime range.
    Scan(ScanArgs),
    /// WZ-pair verification (residual grids, telescoping, closed forms).
    Wz {
        #[command(subcommand)]
        command: WzCommand,
    },
    /// Run a single check at a single prime.
    Check(CheckArgs),
    /// Print the check table (or the display coverage table).
    Manifest {
        /// Print the display-to-check coverage table instead.
        #[arg(long)]
        coverage: bool,
    },
}

#[derive(Args)]
struct ScanArgs {
    /// Inclusive prime range LO..HI.
    #[arg(long, default_value = "3..499", value_parser = parse_range)]
    primes: (u64, u64),
    /// all | theorems | lemmas | wz | comma-separated ids (suffix `.*` globs).
    #[arg(long, default_value = "theorems")]
    checks: String,
    /// Worker count (defaults to WZCHECK_JOBS or the number of cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Write one record per (check, prime) to this path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format for --out.
    #[arg(long, default_value = "json-lines", value_parser = parse_format)]
    format: OutputFormat,
    /// Stop scheduling new work after the first failure.
    #[arg(long)]
    fail_fast: bool,
    /// Verify theorems by exact rational summation instead of the modular route.
    #[arg(long)]
    oracle: bool,
}

#[derive(Subcommand)]
enum WzCommand {
    /// Check the WZ equation on a grid, telescoping sums, and closed forms.
    Verify {
        /// Which pair: A (quartic series) or B (cubic series).
        #[arg(long, value_parser = parse_pair)]
        pair: WzPairId,
        /// Grid bound for n and k.
        #[arg(long, default_value_t = 40)]
        nmax: i64,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// Check id (see `wzcheck manifest`) or theorem id (T1.1..T1.4, GZ.10, GZ.12).
    #[arg(long)]
    id: String,
    /// The odd prime to check at.
    #[arg(long)]
    prime: u64,
    /// For family checks: run a single k instead of the whole range.
    #[arg(long)]
    k: Option<i64>,
    /// Theorems only: verify at this exponent instead of the declared one.
    #[arg(long)]
    exponent: Option<u32>,
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s}"))?;
    let lo = lo.parse().map_err(|e| format!("bad LO: {e}"))?;
    let hi = hi.parse().map_err(|e| format!("bad HI: {e}"))?;
    if lo < 3 || lo > hi {
        return Err(format!("invalid prime range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    match s {
        "json-lines" => Ok(OutputFormat::JsonLines),
        "csv" => Ok(OutputFormat::Csv),
        other => Err(format!("unknown format {other} (json-lines | csv)")),
    }
}

fn parse_pair(s: &str) -> Result<WzPairId, String> {
    match s {
        "A" | "a" => Ok(WzPairId::PairA),
        "B" | "b" => Ok(WzPairId::PairB),
        other => Err(format!("unknown pair {other} (A | B)")),
    }
}

fn default_jobs() -> usize {
    std::env::var("WZCHECK_JOBS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

fn ok_str(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Scan(args) => cmd_scan(args),
        Command::Wz {
            command: WzCommand::Verify { pair, nmax },
        } => cmd_wz_verify(pair, nmax),
        Command::Check(args) => cmd_check(args),
        Command::Manifest { coverage } => cmd_manifest(coverage),
    }
}

fn cmd_scan(args: ScanArgs) -> ExitCode {
    let config = ScanConfig {
        lo: args.primes.0,
        hi: args.primes.1,
        selector: Selector::parse(&args.checks),
        jobs: args.jobs.unwrap_or_else(default_jobs),
        out: args.out,
        format: args.format,
        fail_fast: args.fail_fast,
        oracle: args.oracle,
    };
    let report = match scan(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    for s in &report.summaries {
        let range = match (s.min_prime, s.max_prime) {
            (Some(lo), Some(hi)) => format!("p={lo}..{hi}"),
            _ => "no admissible prime".to_string(),
        };
        println!(
            "{:<28} {:>5} runs  {:>5} pass  {:>3} fail  {}",
            s.check_id, s.runs, s.passes, s.failures, range
        );
    }
    println!(
        "{} records, {} failures, {:.2?} elapsed",
        report.runs(),
        report.failures.len(),
        report.elapsed
    );
    for f in report.failures.iter().take(20) {
        println!(
            "FAIL {} p={} k={:?} lhs={} rhs={}",
            f.check_id, f.prime, f.k, f.lhs, f.rhs
        );
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_wz_verify(pair: WzPairId, nmax: i64) -> ExitCode {
    let memo = &mut Context::new();
    let mut grid_ok = true;
    let mut checked = 0usize;
    for n in 0..=nmax {
        for k in 0..=nmax {
            match wz::wz_residual(memo, pair, n, k) {
                Ok(r) if r == int(0) => checked += 1,
                Ok(r) => {
                    grid_ok = false;
                    println!("FAIL wz-equation ({n},{k}): residual {r}");
                }
                // points masked by the pair-B plain-factor guard are skipped
                Err(wz::WzError::PoleAtArgument { .. }) => continue,
                Err(e) => {
                    grid_ok = false;
                    println!("FAIL wz-equation ({n},{k}): {e}");
                }
            }
        }
    }
    println!(
        "wz-equation: {checked} grid points on [0,{nmax}]^2 ({})",
        ok_str(grid_ok)
    );

    let tmax = nmax.min(30);
    let m0 = match pair {
        WzPairId::PairA => 1,
        WzPairId::PairB => 2,
    };
    let mut tele_ok = true;
    for m in m0..=tmax.max(m0) {
        for n_up in 1..=tmax.max(1) {
            let r = wz::check_telescope(memo, pair, m, n_up).expect("telescoping in domain");
            if r != int(0) {
                tele_ok = false;
                println!("FAIL telescope (m={m}, N={n_up}): residual {r}");
            }
        }
    }
    println!(
        "telescoping: rectangles up to ({tmax},{tmax}) ({})",
        ok_str(tele_ok)
    );

    let mut closed_ok = true;
    match pair {
        WzPairId::PairA => {
            for n in 0..=nmax {
                if wz::g_closed_form_residual(memo, n) != int(0) {
                    closed_ok = false;
                    println!("FAIL g-closed-form at n={n}");
                }
            }
            println!("G(n,0) closed form: n <= {nmax} ({})", ok_str(closed_ok));
        }
        WzPairId::PairB => {
            for n in 2..=nmax.max(2) {
                if wz::gb_difference_residual(memo, n) != int(0) {
                    closed_ok = false;
                    println!("FAIL forward-difference identity at n={n}");
                }
            }
            println!(
                "g_n - 48 G'(n,0) forward difference: n <= {} ({})",
                nmax.max(2),
                ok_str(closed_ok)
            );
        }
    }

    let family = match pair {
        WzPairId::PairA => wz::SummandFamily::Quartic,
        WzPairId::PairB => wz::SummandFamily::Cubic,
    };
    let mut summand_ok = true;
    for n in 0..=nmax {
        if wz::summand_identity_residual(memo, family, n) != int(0) {
            summand_ok = false;
            println!("FAIL summand identity at n={n}");
        }
    }
    println!("summand identity: n <= {nmax} ({})", ok_str(summand_ok));

    if grid_ok && tele_ok && closed_ok && summand_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_check(args: CheckArgs) -> ExitCode {
    let memo = &mut Context::new();

    if let Ok(id) = args.id.parse::<TheoremId>() {
        if args.prime < 3 || !is_prime(args.prime) {
            eprintln!("error: {} is not an odd prime", args.prime);
            return ExitCode::from(2);
        }
        let r = args.exponent.unwrap_or_else(|| id.exponent());
        let v = theorems::verify_at(memo, id, args.prime, r);
        let label = if r > id.exponent() {
            "  [exploratory: beyond the verified exponent]"
        } else {
            ""
        };
        println!(
            "{} p={} mod {}: lhs={} rhs={} {}{}",
            id,
            args.prime,
            v.modulus,
            v.lhs_residue,
            v.rhs_residue,
            ok_str(v.pass),
            label
        );
        return if v.pass {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        };
    }

    if args.exponent.is_some() {
        eprintln!("error: --exponent applies to theorem ids only");
        return ExitCode::from(2);
    }
    match checks::run_check(memo, &args.id, args.prime, args.k) {
        Ok(res) => {
            println!(
                "{} p={} mod {}: lhs={} rhs={} {}",
                res.check_id,
                res.prime,
                res.modulus,
                res.lhs,
                res.rhs,
                ok_str(res.pass)
            );
            if let Some(k) = res.k {
                println!("  k = {k}");
            }
            if !res.failing_k.is_empty() {
                println!("  failing k: {:?}", res.failing_k);
            }
            if let Some(note) = &res.note {
                println!("  note: {note}");
            }
            if res.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn cmd_manifest(coverage: bool) -> ExitCode {
    if coverage {
        for row in checks::coverage_table() {
            let disposition = match &row.disposition {
                Disposition::Checks(ids) => format!("checks: {}", ids.join(", ")),
                Disposition::OutOfScope(reason) => format!("out-of-scope: {reason}"),
                Disposition::Definition(reason) => format!("definition: {reason}"),
            };
            println!("{}\t{}", row.display, disposition);
        }
        return ExitCode::SUCCESS;
    }
    for id in TheoremId::ALL {
        println!(
            "{}\tp^{}\tmin_prime=3\t{}",
            id,
            id.exponent(),
            id.statement()
        );
    }
    for c in checks::manifest() {
        let modulus = match c.kind {
            CheckKind::Congruence(r) => format!("p^{r}"),
            CheckKind::Identity => "exact".to_string(),
        };
        let family = if c.family.is_some() { "  [family]" } else { "" };
        println!(
            "{}\t{}\tmin_prime={}\t{}{}",
            c.id, modulus, c.min_prime, c.statement, family
        );
    }
    ExitCode::SUCCESS
}
