use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use normgram::normord::normal_order_power;
use normgram::oracle::{ObjectKind, Oracle, Stat};
use normgram::series::{bessel_polynomial, catalan_series, verify_catalan_egf};
use normgram::triangles::{format_index, triangle_rows, Family};
use normgram::verify::{self, CheckResult, Profile, REGISTRY};
use normgram::{parse, Grammar, Polynomial, Symbol};
use serde_json::json;

#[derive(Parser)]
#[command(name = "normgram", version, about = "Normal ordering of grammar-induced derivations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum Identity {
    CatalanEgf,
    Catalan,
    Bessel,
}

#[derive(Subcommand)]
enum Command {
    /// Expand (w·D_G)^n into normal form.
    Expand {
        /// The multiplier w.
        #[arg(long)]
        w: String,
        /// Rules such as "x -> y; y -> y", or a preset name.
        #[arg(long)]
        grammar: String,
        #[arg(long)]
        n: usize,
        /// Substitute this polynomial for D_G and print the result.
        #[arg(long)]
        at_d: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the rows of a coefficient triangle.
    Triangle {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate combinatorial objects with their statistics.
    Enumerate {
        #[arg(long)]
        objects: ObjectKind,
        #[arg(long)]
        n: usize,
        /// Statistics to report; all of the kind's statistics by default.
        #[arg(long, value_delimiter = ',')]
        stats: Vec<Stat>,
        /// Print Σ Π symbol^stat instead of the objects, e.g. "asc=x,des=y".
        #[arg(long, value_delimiter = ',')]
        tally: Vec<String>,
    },
    /// Run the identity suite.
    Verify {
        /// Run only this check.
        #[arg(long)]
        check: Option<String>,
        #[arg(long, value_enum, default_value = "quick")]
        profile: ProfileArg,
        /// Largest n for --check (clamped to the check's cap).
        #[arg(long, requires = "check")]
        n: Option<usize>,
        /// List the registered checks and exit.
        #[arg(long, conflicts_with_all = ["check", "n"])]
        list: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print a series identity.
    Series {
        #[arg(long, value_enum)]
        identity: Identity,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn only(format: Format, allowed: &[Format], command: &str) -> Result<()> {
    if !allowed.contains(&format) {
        let name = format.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default();
        bail!("{command} does not support --format {name}");
    }
    Ok(())
}

fn poly_arg(flag: &str, text: &str) -> Result<Polynomial> {
    parse(text).with_context(|| format!("--{flag} {text:?}"))
}

fn expand(out: &mut impl Write, w: &str, grammar: &str, n: usize, at_d: Option<&str>, format: Format) -> Result<()> {
    only(format, &[Format::Text, Format::Json], "expand")?;
    let w = poly_arg("w", w)?;
    let g = Grammar::resolve(grammar).with_context(|| format!("--grammar {grammar:?}"))?;
    let nf = normal_order_power(&w, &g, n);
    match (at_d, format) {
        (None, Format::Text) => writeln!(out, "{nf}")?,
        (None, _) => writeln!(out, "{}", serde_json::to_string(&nf)?)?,
        (Some(d), fmt) => {
            let d = poly_arg("at-d", d)?;
            let value = nf.specialize_d(&d);
            if fmt == Format::Text {
                writeln!(out, "{value}")?;
            } else {
                writeln!(out, "{}", json!({ "n": n, "d": d, "value": value }))?;
            }
        }
    }
    Ok(())
}

fn triangle(out: &mut impl Write, family: Family, n: usize, format: Format) -> Result<()> {
    let name = family.name();
    if format == Format::Csv {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["family", "n", "k", "l", "j", "entry"])?;
        for (m, row) in triangle_rows(family, n) {
            for (&(k, l, j), e) in &row {
                w.write_record([
                    name.to_owned(),
                    m.to_string(),
                    k.to_string(),
                    l.to_string(),
                    j.to_string(),
                    e.to_string(),
                ])?;
            }
            w.flush()?;
        }
        return Ok(());
    }
    for (m, row) in triangle_rows(family, n) {
        if format == Format::Json {
            for (&(k, l, j), e) in &row {
                let line = json!({ "family": name, "n": m, "k": k, "l": l, "j": j, "entry": e.to_string() });
                writeln!(out, "{line}")?;
            }
        } else {
            let cells: Vec<String> =
                row.iter().map(|(&(k, l, j), e)| format!("{}={e}", format_index(family, m, k, l, j))).collect();
            writeln!(out, "{}", cells.join(", "))?;
        }
        out.flush()?;
    }
    Ok(())
}

fn parse_assignment(text: &str) -> Result<(Stat, Symbol)> {
    let (stat, symbol) =
        text.split_once('=').with_context(|| format!("--tally entry {text:?}: expected stat=symbol"))?;
    let stat: Stat = stat.trim().parse()?;
    let symbol = symbol.trim();
    if !Symbol::is_valid_name(symbol) {
        bail!("--tally entry {text:?}: `{symbol}` is not a symbol");
    }
    Ok((stat, Symbol::new(symbol)))
}

fn enumerate(out: &mut impl Write, kind: ObjectKind, n: usize, stats: &[Stat], tally: &[String]) -> Result<()> {
    let oracle = Oracle::default();
    if !tally.is_empty() {
        let assignment = tally.iter().map(|t| parse_assignment(t)).collect::<Result<Vec<_>>>()?;
        writeln!(out, "{}", oracle.tally(kind, n, &assignment)?)?;
        return Ok(());
    }
    if let Some(s) = stats.iter().find(|s| !kind.stats().contains(s)) {
        bail!("{kind} has no statistic {s}");
    }
    for mut record in oracle.enumerate(kind, n)? {
        if !stats.is_empty() {
            record.stats.retain(|s, _| stats.contains(s));
        }
        writeln!(out, "{}", serde_json::to_string(&record)?)?;
    }
    Ok(())
}

fn report(out: &mut impl Write, results: &[CheckResult], format: Format) -> Result<bool> {
    only(format, &[Format::Text, Format::Json], "verify")?;
    if format == Format::Json {
        writeln!(out, "{}", verify::report_json(results))?;
    } else {
        for r in results {
            writeln!(out, "{r}")?;
        }
        let passed = results.iter().filter(|r| r.passed()).count();
        writeln!(out, "{passed}/{} checks passed", results.len())?;
    }
    Ok(results.iter().all(CheckResult::passed))
}

fn run_verify(
    out: &mut impl Write,
    check: Option<&str>,
    profile: Profile,
    n: Option<usize>,
    list: bool,
    format: Format,
) -> Result<bool> {
    if list {
        for c in REGISTRY {
            writeln!(out, "{}\tn={}..={} (quick {})\t{}", c.id, c.min_n, c.full, c.quick, c.claim)?;
        }
        return Ok(true);
    }
    let results = match check {
        Some(id) => {
            let c = verify::find_check(id)?;
            vec![verify::run_check(id, n.unwrap_or(c.cap(profile)))?]
        }
        None => verify::run_all(profile),
    };
    report(out, &results, format)
}

fn series(out: &mut impl Write, identity: Identity, order: usize, format: Format) -> Result<bool> {
    only(format, &[Format::Text, Format::Json], "series")?;
    match identity {
        Identity::CatalanEgf => {
            let r = verify_catalan_egf(order);
            if format == Format::Json {
                writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
            } else {
                write!(out, "{r}")?;
            }
            Ok(r.matched)
        }
        Identity::Catalan => {
            let s = catalan_series(order);
            if format == Format::Json {
                let coeffs: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
                writeln!(out, "{}", json!({ "kind": s.kind(), "order": order, "coeffs": coeffs }))?;
            } else {
                write!(out, "{s}")?;
            }
            Ok(true)
        }
        Identity::Bessel => {
            for n in 0..=order {
                let p = bessel_polynomial(n);
                if format == Format::Json {
                    writeln!(out, "{}", json!({ "n": n, "polynomial": p.to_string() }))?;
                } else {
                    writeln!(out, "y_{n}: {p}")?;
                }
            }
            Ok(true)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let ok = match cli.command {
        Command::Expand { w, grammar, n, at_d, format } => {
            expand(&mut out, &w, &grammar, n, at_d.as_deref(), format)?;
            true
        }
        Command::Triangle { family, n, format } => {
            triangle(&mut out, family, n, format)?;
            true
        }
        Command::Enumerate { objects, n, stats, tally } => {
            enumerate(&mut out, objects, n, &stats, &tally)?;
            true
        }
        Command::Verify { check, profile, n, list, format } => {
            let profile = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            run_verify(&mut out, check.as_deref(), profile, n, list, format)?
        }
        Command::Series { identity, order, format } => series(&mut out, identity, order, format)?,
    };
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
