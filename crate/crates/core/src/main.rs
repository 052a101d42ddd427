//! Command-line front end: enumeration, eigenvalue tables, relation
//! verification, character and conjecture checks, Gelfand-Zetlin
//! operations, and limit reports.  Every command is a thin wrapper around
//! the library; output is deterministic given the full flag set.
//!
//! Exit codes: 0 = success, 1 = a mathematical check failed, 2 = usage or
//! precondition error.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use toroidal::characters::{
    conjecture1, conjecture2, gz_character, macmahon_series, module_character,
    tensor_factorization_check, theorem_character, IntegerSeries,
};
use toroidal::glinf_gz::check_glinf_relations;
use toroidal::macmahonrep::{
    cartan_theta, limit_coefficients, psi_shell, MacmahonModule,
};
use toroidal::partitions::Partition;
use toroidal::planepartitions::{enumerate_pp, resonance_box, BoundaryTriple};
use toroidal::psi::PsiFunction;
use toroidal::scalars::{make_generic_params, ParamSpec};
use toroidal::verify::{run_suite_range, Rep};

#[derive(Parser)]
#[command(name = "toroidal", version, about = "Exact computations in plane-partition modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<String>,
    /// PRNG seed for the generic parameter values.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Genericity bound for the parameter search.
    #[arg(long, global = true, default_value_t = 6)]
    bound: i64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// List plane partitions (or their counts) by degree.
    Enumerate {
        /// Boundary triple, e.g. "(3,1);(3,2,1,1);(3,2,1,1)".
        #[arg(long, default_value = "();();()")]
        boundary: String,
        #[arg(long, default_value_t = 4)]
        max_degree: i64,
        /// Print only the count at each degree.
        #[arg(long)]
        counts: bool,
        /// Apply the forbidden box of the resonance "m,n".
        #[arg(long, value_name = "M,N")]
        forbidden_from_resonance: Option<String>,
    },
    /// Print the psi-eigenvalue factor tables of the basis vectors.
    Eigenvalues {
        #[arg(long, default_value = "();();()")]
        boundary: String,
        #[arg(long, default_value_t = 1)]
        max_degree: i64,
    },
    /// Run the relation suite on a module.
    Verify {
        #[arg(long, default_value = "();();()")]
        boundary: String,
        /// "generic" or a resonance "m,n" (the latter builds the quotient).
        #[arg(long, default_value = "generic")]
        level: String,
        #[arg(long, default_value_t = 2)]
        max_degree: i64,
        /// Mode window "a..b" for the generator modes r, s.
        #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
        modes: String,
        /// Which module family to verify.
        #[arg(long, value_enum, default_value_t = Family::Macmahon)]
        module: Family,
        /// Hidden test hook: corrupt one coefficient so the suite fails.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Character series: MacMahon, the character theorem, or a module.
    Character {
        /// Evaluate the S_n character theorem for this alpha (e.g. "1,0").
        #[arg(long, value_name = "A1,A2,...", conflicts_with = "boundary")]
        alpha: Option<String>,
        /// Width n for the theorem (defaults to the length of alpha).
        #[arg(long)]
        n: Option<usize>,
        /// Compare the theorem against hook-pattern enumeration.
        #[arg(long, requires = "alpha")]
        theorem: bool,
        /// Graded dimensions of the module with this boundary.
        #[arg(long)]
        boundary: Option<String>,
        /// "generic" or a resonance "m,n" (quotient character).
        #[arg(long, default_value = "generic")]
        level: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Check a conjectural character formula against enumeration.
    Conjecture {
        /// Conjecture id: 1 or 2.
        #[arg(long)]
        id: u8,
        #[arg(long)]
        m: i64,
        /// Second parameter for conjecture 2 (n >= m).
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Gelfand-Zetlin relation checks on hook patterns.
    Gz {
        #[arg(long)]
        n: usize,
        /// Row limits alpha, e.g. "1,0" (length n).
        #[arg(long, default_value = "")]
        alpha: String,
        /// Column limit c (gamma = c, ..., c).
        #[arg(long, default_value_t = 0)]
        c: i64,
        #[arg(long, default_value_t = 2)]
        max_degree: i64,
        #[arg(long, default_value_t = 2)]
        window: i64,
    },
    /// q1 -> 1 limit report and Cartan eigenvalues at a diagonal resonance.
    Limit {
        #[arg(long, default_value = "();();()")]
        boundary: String,
        /// Resonance exponent: K = (q2 q3)^n.
        #[arg(long, default_value_t = 1)]
        n: i64,
        #[arg(long, default_value_t = 2)]
        max_degree: i64,
    },
    /// Character-level tensor factorization check for a split boundary.
    Tensor {
        #[arg(long, default_value = "();();()")]
        boundary: String,
        /// The forbidden box "a,b,c".
        #[arg(long, value_name = "A,B,C")]
        abc: String,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    Vector,
    Fock,
    Macmahon,
}

/// A usage-level error (exit code 2).
struct UsageError(String);

fn usage<T>(msg: impl Into<String>) -> Result<T, UsageError> {
    Err(UsageError(msg.into()))
}

fn parse_boundary(s: &str) -> Result<BoundaryTriple, UsageError> {
    BoundaryTriple::parse(s).map_err(|e| UsageError(format!("bad boundary {s:?}: {e}")))
}

fn parse_int_list(s: &str) -> Result<Vec<i64>, UsageError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| UsageError(format!("bad integer list {s:?}: {e}")))
}

fn parse_level(s: &str) -> Result<Option<(i64, i64)>, UsageError> {
    if s == "generic" {
        return Ok(None);
    }
    let v = parse_int_list(s)?;
    if v.len() != 2 {
        return usage(format!("level must be \"generic\" or \"m,n\", got {s:?}"));
    }
    Ok(Some((v[0], v[1])))
}

fn parse_modes(s: &str) -> Result<(i64, i64), UsageError> {
    let parts: Vec<&str> = s.split("..").collect();
    let bad = || UsageError(format!("mode window must look like \"-2..2\", got {s:?}"));
    if parts.len() != 2 {
        return Err(bad());
    }
    let lo = parts[0].trim().parse::<i64>().map_err(|_| bad())?;
    let hi = parts[1].trim().parse::<i64>().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn generic_params(common: &Common) -> Result<ParamSpec, UsageError> {
    make_generic_params(common.seed, common.bound)
        .map_err(|e| UsageError(format!("no generic parameters found: {e}")))
}

fn psi_text(f: &PsiFunction) -> String {
    let mut out = String::new();
    if f.level() != 0 {
        let _ = write!(out, "(1 - K x)^{} ", f.level());
    }
    for (t, mult) in f.factors() {
        let _ = write!(out, "(1 - q1^{} q2^{} q3^{} x)^{} ", t.j, t.k, t.i, mult);
    }
    out.trim_end().to_string()
}

fn psi_json(f: &PsiFunction) -> serde_json::Value {
    json!({
        "level": f.level(),
        "factors": f
            .factors()
            .iter()
            .map(|(t, m)| json!({"q1": t.j, "q2": t.k, "q3": t.i, "mult": m}))
            .collect::<Vec<_>>(),
    })
}

fn series_output(s: &IntegerSeries, fmt: Format) -> String {
    match fmt {
        Format::Json => serde_json::to_string_pretty(s).unwrap(),
        Format::Csv => s.to_csv(),
        Format::Text => format!("{s}"),
    }
}

fn emit(common: &Common, text: String) -> Result<(), UsageError> {
    match &common.output {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| UsageError(format!("cannot write output file: {e}"))),
    }
}

/// Runs a command; Ok(true) = all checks passed, Ok(false) = a
/// mathematical check failed.
fn run(cli: &Cli) -> Result<bool, UsageError> {
    let common = &cli.common;
    match &cli.command {
        Command::Enumerate { boundary, max_degree, counts, forbidden_from_resonance } => {
            let b = parse_boundary(boundary)?;
            let forbidden = match forbidden_from_resonance {
                Some(s) => {
                    let v = parse_int_list(s)?;
                    if v.len() != 2 {
                        return usage("resonance must be \"m,n\"");
                    }
                    Some(
                        resonance_box(&b, v[0], v[1])
                            .map_err(|e| UsageError(format!("no forbidden box: {e}")))?,
                    )
                }
                None => None,
            };
            let mut rows = Vec::new();
            for d in 0..=*max_degree {
                let pps = enumerate_pp(&b, d, forbidden);
                rows.push((d, pps));
            }
            let text = match (common.format, counts) {
                (Format::Json, true) => serde_json::to_string_pretty(&json!({
                    "boundary": boundary,
                    "forbidden": forbidden,
                    "counts": rows.iter().map(|(d, v)| json!([d, v.len()])).collect::<Vec<_>>(),
                }))
                .unwrap(),
                (Format::Json, false) => serde_json::to_string_pretty(&json!({
                    "boundary": boundary,
                    "forbidden": forbidden,
                    "partitions": rows
                        .iter()
                        .map(|(d, v)| {
                            json!([d, v.iter().map(|p| p.to_string()).collect::<Vec<_>>()])
                        })
                        .collect::<Vec<_>>(),
                }))
                .unwrap(),
                (Format::Csv, _) => {
                    let mut t = String::from("degree,count\n");
                    for (d, v) in &rows {
                        let _ = writeln!(t, "{d},{}", v.len());
                    }
                    t
                }
                (Format::Text, true) => rows
                    .iter()
                    .map(|(d, v)| format!("degree {d}: {}", v.len()))
                    .collect::<Vec<_>>()
                    .join("\n"),
                (Format::Text, false) => {
                    let mut t = String::new();
                    for (d, v) in &rows {
                        let _ = writeln!(t, "degree {d} ({} elements):", v.len());
                        for pp in v {
                            let _ = writeln!(t, "  {pp}");
                        }
                    }
                    t.trim_end().to_string()
                }
            };
            emit(common, text)?;
            Ok(true)
        }
        Command::Eigenvalues { boundary, max_degree } => {
            let b = parse_boundary(boundary)?;
            let mut rows = Vec::new();
            for d in 0..=*max_degree {
                for pp in enumerate_pp(&b, d, None) {
                    let f = psi_shell(&pp);
                    rows.push((d, pp, f));
                }
            }
            let text = match common.format {
                Format::Json => serde_json::to_string_pretty(
                    &rows
                        .iter()
                        .map(|(d, pp, f)| {
                            json!({"degree": d, "label": pp.to_string(), "psi": psi_json(f)})
                        })
                        .collect::<Vec<_>>(),
                )
                .unwrap(),
                _ => rows
                    .iter()
                    .map(|(d, pp, f)| format!("degree {d}  {pp}: {}", psi_text(f)))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(common, text)?;
            Ok(true)
        }
        Command::Verify { boundary, level, max_degree, modes, module, inject_fault } => {
            let (lo, hi) = parse_modes(modes)?;
            let mut p = generic_params(common)?;
            let resonance = parse_level(level)?;
            if let Some((m, n)) = resonance {
                p = p.with_resonance(m, n);
            }
            let rep = match module {
                Family::Vector => Rep::Vector(p),
                Family::Fock => Rep::Fock(p),
                Family::Macmahon => {
                    let b = parse_boundary(boundary)?;
                    let md = if resonance.is_some() {
                        MacmahonModule::quotient(b, p)
                    } else {
                        MacmahonModule::new(b, p)
                    };
                    Rep::Macmahon(md)
                }
            };
            let rep = if *inject_fault { Rep::Corrupted(Box::new(rep)) } else { rep };
            let reports = run_suite_range(&rep, *max_degree, lo, hi);
            let pass = reports.iter().all(|r| r.pass);
            let text = match common.format {
                Format::Json => serde_json::to_string_pretty(&reports).unwrap(),
                Format::Csv => {
                    let mut t = String::from("relation,degree,r,s,pass\n");
                    for r in &reports {
                        let _ = writeln!(
                            t,
                            "{},{},{},{},{}",
                            r.relation, r.degree, r.modes.0, r.modes.1, r.pass
                        );
                    }
                    t
                }
                Format::Text => {
                    let failures: Vec<String> = reports
                        .iter()
                        .filter(|r| !r.pass)
                        .map(|r| {
                            format!(
                                "FAIL {} d={} modes={:?}: {}",
                                r.relation,
                                r.degree,
                                r.modes,
                                r.counterexample.as_deref().unwrap_or("")
                            )
                        })
                        .collect();
                    if failures.is_empty() {
                        format!("all {} checks passed on {}", reports.len(), rep.descriptor())
                    } else {
                        failures.join("\n")
                    }
                }
            };
            emit(common, text)?;
            Ok(pass)
        }
        Command::Character { alpha, n, theorem, boundary, level, order } => {
            let series = match (alpha, boundary) {
                (Some(alpha), None) => {
                    let a = parse_int_list(alpha)?;
                    let n = n.unwrap_or(a.len());
                    if a.len() != n {
                        return usage("alpha must have length n");
                    }
                    if a.windows(2).any(|w| w[0] < w[1]) {
                        return usage("alpha must be weakly decreasing");
                    }
                    let t = theorem_character(&a, n, *order)
                        .map_err(|e| UsageError(format!("character theorem: {e}")))?;
                    if *theorem {
                        let gz = gz_character(&a, n, *order);
                        if let Some(d) = t.first_difference(&gz) {
                            emit(
                                common,
                                format!(
                                    "DISAGREE at q^{d}: theorem {} vs enumeration {}",
                                    t.coeff(d),
                                    gz.coeff(d)
                                ),
                            )?;
                            return Ok(false);
                        }
                    }
                    t
                }
                (None, Some(boundary)) => {
                    let b = parse_boundary(boundary)?;
                    module_character(&b, parse_level(level)?, *order)
                        .map_err(|e| UsageError(format!("module character: {e}")))?
                }
                (None, None) => macmahon_series(*order),
                (Some(_), Some(_)) => return usage("give either --alpha or --boundary"),
            };
            emit(common, series_output(&series, common.format))?;
            Ok(true)
        }
        Command::Conjecture { id, m, n, order } => {
            let (closed, resonance, name) = match id {
                1 => (conjecture1(*m, *order), (1, *m), format!("conjecture 1, m={m}")),
                2 => {
                    let n = n.ok_or_else(|| UsageError("conjecture 2 needs --n".into()))?;
                    if n < *m {
                        return usage("conjecture 2 requires n >= m");
                    }
                    (conjecture2(n, *m, *order), (n, *m), format!("conjecture 2, (n,m)=({n},{m})"))
                }
                _ => return usage("conjecture id must be 1 or 2"),
            };
            let counted = module_character(&BoundaryTriple::vacuum(), Some(resonance), *order)
                .map_err(|e| UsageError(format!("enumeration failed: {e}")))?;
            let diff = closed.first_difference(&counted);
            let text = match common.format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "conjecture": name,
                    "closed_form": closed,
                    "enumeration": counted,
                    "agree": diff.is_none(),
                    "first_difference": diff,
                }))
                .unwrap(),
                _ => match diff {
                    None => format!("{name}: agreement to q^{order}\n  {closed}"),
                    Some(d) => format!(
                        "{name}: DISAGREE at q^{d}: closed form {} vs enumeration {}",
                        closed.coeff(d),
                        counted.coeff(d)
                    ),
                },
            };
            emit(common, text)?;
            Ok(diff.is_none())
        }
        Command::Gz { n, alpha, c, max_degree, window } => {
            let a = parse_int_list(alpha)?;
            if a.iter().any(|&x| x < *c) {
                return usage("every alpha_i must be >= c for the hook module");
            }
            let ap = Partition::new(a);
            let report = check_glinf_relations(*n, &ap, *c, *window, *max_degree);
            let text = match common.format {
                Format::Json => serde_json::to_string_pretty(&report).unwrap(),
                _ => format!(
                    "patterns {}, commutators {}, serre {}, failures {:?}",
                    report.patterns_checked,
                    report.commutators_checked,
                    report.serre_checked,
                    report.failures
                ),
            };
            let ok = report.ok();
            emit(common, text)?;
            Ok(ok)
        }
        Command::Limit { boundary, n, max_degree } => {
            let b = parse_boundary(boundary)?;
            let p = generic_params(common)?.with_resonance(*n, *n);
            let md = MacmahonModule::new(b.clone(), p);
            let report = limit_coefficients(&md, *max_degree)
                .map_err(|e| UsageError(format!("limit preconditions: {e}")))?;
            let window = (b.alpha.len() + b.gamma.len()) as i64 + n + 3;
            let theta = cartan_theta(&md, window)
                .map_err(|e| UsageError(format!("cartan extraction: {e}")))?;
            let all_finite = report.entries.iter().all(|e| e.order >= 0);
            let text = match common.format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "limit": report,
                    "theta": theta
                        .iter()
                        .map(|(i, v)| json!([i, v.to_string()]))
                        .collect::<Vec<_>>(),
                    "all_finite": all_finite,
                }))
                .unwrap(),
                _ => {
                    let mut t = String::new();
                    for e in &report.entries {
                        let _ = writeln!(
                            t,
                            "{} mode {}: {} -> {}: order {}, limit {}",
                            e.generator, e.mode, e.source, e.target, e.order, e.limit
                        );
                    }
                    let _ = writeln!(
                        t,
                        "theta: {}",
                        theta
                            .iter()
                            .map(|(i, v)| format!("theta_{i} = {v}"))
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                    let _ = write!(t, "all entries finite at q1 = 1: {all_finite}");
                    t
                }
            };
            emit(common, text)?;
            Ok(all_finite)
        }
        Command::Tensor { boundary, abc, order } => {
            let b = parse_boundary(boundary)?;
            let v = parse_int_list(abc)?;
            if v.len() != 3 {
                return usage("--abc must be \"a,b,c\"");
            }
            let report = tensor_factorization_check(&b, (v[0], v[1], v[2]), *order)
                .map_err(|e| UsageError(format!("tensor check: {e}")))?;
            let text = match common.format {
                Format::Json => serde_json::to_string_pretty(&report).unwrap(),
                _ => format!(
                    "module:  {}\nproduct: {}\nagree: {}{}",
                    report.module,
                    report.product,
                    report.agree,
                    report
                        .first_difference
                        .map(|d| format!(" (first difference at q^{d})"))
                        .unwrap_or_default()
                ),
            };
            let ok = report.agree;
            emit(common, text)?;
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
