use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use milag::darboux::export::{poly_json, ratfunc_json};
use milag::darboux::{
    catalog, deformed_potential, predicted_norm, search_multiple_zeros, summary_table,
    transformed_solution, weight_text, wronskian_text, CaseName, CaseSpec, SearchHit,
};
use milag::exact::rational::to_json;
use milag::quasi::{wronskian, SeedKind};
use milag::verify::{apply_override, gamma_numeric, run_suite_on, Override, SuiteReport};
use milag::Error;

#[derive(Parser)]
#[command(name = "milag", version, about = "Exceptional Laguerre families from multi-step Darboux transformations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Show one case: seeds, Wronskian, potential, members, weight and norms.
    Case {
        #[arg(value_parser = parse_case)]
        name: CaseName,
        /// Inclusive index range, e.g. `0..3` or `-3..2`.
        #[arg(long, default_value = "0..3", value_parser = parse_range, allow_hyphen_values = true)]
        n_range: (i64, i64),
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the catalogued cases.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Scan seed tuples for couplings where the Wronskian has a zero of order m.
    Search {
        /// Comma-separated seed kinds, e.g. `I,II`.
        #[arg(long, value_parser = parse_kinds)]
        kinds: Kinds,
        #[arg(long, default_value_t = 3)]
        vmax: usize,
        #[arg(long, default_value_t = 6)]
        vmax_bound: usize,
        #[arg(long, default_value_t = 3)]
        target_m: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the identity checks and print a JSON report.
    Verify {
        /// `all` or a case name.
        #[arg(long, default_value = "all")]
        case: String,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// JSON file with one override or a list of them, each
        /// `{"case": .., "n": .., "poly": [..]}`.
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Summary table for the cases with closed-form families.
    Table {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone)]
struct Kinds(Vec<SeedKind>);

fn parse_case(s: &str) -> Result<CaseName, String> {
    CaseName::from_str(s).map_err(|e| e.to_string())
}

fn parse_kinds(s: &str) -> Result<Kinds, String> {
    let kinds = s.split(',').map(SeedKind::from_str).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
    if kinds.is_empty() {
        return Err("no seed kinds given".into());
    }
    Ok(Kinds(kinds))
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: i64 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

/// Failure classes, mapped onto the exit status.
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, format!("{body}\n")).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{body}").map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

fn member_json(case: &CaseSpec, n: i64) -> Value {
    match transformed_solution(case, n) {
        Ok(sol) => {
            let norm = match predicted_norm(case, n) {
                Ok(rec) => {
                    let value = rec.value_f64(|z| gamma_numeric(z).unwrap_or(f64::NAN));
                    json!({ "record": rec, "value": value.filter(|v| v.is_finite()) })
                }
                Err(e) => json!({ "unavailable": e.to_string() }),
            };
            json!({
                "n": n,
                "status": "member",
                "energy": to_json(&sol.energy),
                "degree": sol.degree(),
                "poly": poly_json(&sol.numer),
                "scale": to_json(&sol.scale),
                "norm": norm,
            })
        }
        Err(Error::IndexMissing { .. }) => json!({ "n": n, "status": "missing" }),
        Err(Error::InvalidIndex { .. }) => json!({ "n": n, "status": "invalid" }),
        Err(e) => json!({ "n": n, "status": "error", "message": e.to_string() }),
    }
}

fn case_report(case: &CaseSpec, (lo, hi): (i64, i64)) -> Result<Value, Failure> {
    let w = wronskian(&case.seed_functions());
    let u = deformed_potential(&case.g, &case.seeds)?;
    let parts = u.parts()?;
    let family = match &case.family {
        Some(f) => {
            let members: Vec<Value> = (lo..=hi).map(|n| member_json(case, n)).collect();
            let extras: Vec<Value> = f.extras.iter().map(|e| member_json(case, e.n)).collect();
            let weight = match &f.weight {
                Some(w) => json!({
                    "eta_exponent": to_json(&w.exponent),
                    "denominator": poly_json(&w.denominator),
                    "constant": to_json(&w.constant),
                    "text": weight_text(w)?,
                }),
                None => Value::Null,
            };
            json!({
                "eta_power": to_json(&f.eta_power),
                "denominator": poly_json(&f.denominator),
                "degree_offset": f.degree_offset,
                "missing_indices": f.missing,
                "members": members,
                "extra_members": extras,
                "weight": weight,
            })
        }
        None => Value::Null,
    };
    Ok(json!({
        "case": case.name,
        "seeds": case.seeds.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "g": to_json(&case.g),
        "wronskian": { "quasi": w, "text": w.to_string(), "factored": wronskian_text(&w)? },
        "potential": {
            "rational": ratfunc_json(&u.rational),
            "deformation": parts.render_deformation(),
            "constant": to_json(&parts.constant()),
        },
        "family": family,
    }))
}

fn member_line(m: &Value) -> String {
    let n = &m["n"];
    match m["status"].as_str() {
        Some("member") => {
            let norm = match m["norm"]["value"].as_f64() {
                Some(h) => format!("h = {h:.12e}"),
                None => match m["norm"]["unavailable"].as_str() {
                    Some(why) => format!("norm n.a. ({why})"),
                    None => "norm n.a. (no closed form)".into(),
                },
            };
            format!(
                "  n = {n}: E = {}, degree {}, {}\n      {norm}",
                m["energy"].as_str().unwrap_or("?"),
                m["degree"],
                m["poly"]["text"].as_str().unwrap_or("?")
            )
        }
        Some("missing") => format!("  n = {n}: missing from the family"),
        Some("invalid") => format!("  n = {n}: not a member"),
        _ => format!("  n = {n}: {}", m["message"].as_str().unwrap_or("error")),
    }
}

fn case_text(r: &Value) -> String {
    let s = |v: &Value| v.as_str().unwrap_or("").to_string();
    let seeds: Vec<String> = r["seeds"].as_array().into_iter().flatten().map(s).collect();
    let mut out = vec![
        format!("case {}", s(&r["case"])),
        format!("seeds      {}", seeds.join(", ")),
        format!("g          {}", s(&r["g"])),
        format!("wronskian  {}", s(&r["wronskian"]["factored"])),
        format!("potential  U_g + {} (constant shift {})", s(&r["potential"]["deformation"]), s(&r["potential"]["constant"])),
    ];
    let f = &r["family"];
    if f.is_null() {
        out.push("no polynomial family".into());
        return out.join("\n");
    }
    out.push(format!("weight     {}", if f["weight"].is_null() { "n.a.".into() } else { s(&f["weight"]["text"]) }));
    let missing: Vec<String> = f["missing_indices"].as_array().into_iter().flatten().map(|v| v.to_string()).collect();
    out.push(format!("missing    {}", if missing.is_empty() { "none".into() } else { missing.join(", ") }));
    out.push("members".into());
    out.extend(f["members"].as_array().into_iter().flatten().map(member_line));
    let extras = f["extra_members"].as_array().cloned().unwrap_or_default();
    if !extras.is_empty() {
        out.push("extra members".into());
        out.extend(extras.iter().map(member_line));
    }
    out.join("\n")
}

fn hit_line(h: &SearchHit) -> String {
    let seeds: Vec<String> = h.seeds.iter().map(|s| s.to_string()).collect();
    format!("{}  g = {}  η0 = {}  m = {}", seeds.join(" "), h.g, h.eta0, h.m)
}

fn load_overrides(path: &PathBuf) -> Result<Vec<Override>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let parsed = match v {
        Value::Array(_) => serde_json::from_value(v),
        other => serde_json::from_value(other).map(|o| vec![o]),
    };
    parsed.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn verify_text(r: &SuiteReport) -> String {
    let mut out = vec![format!("{}/{} checks passed (tolerance {:e})", r.total - r.failed, r.total, r.tolerance)];
    for c in r.checks.iter().filter(|c| !c.passed) {
        out.push(failure_line(c));
    }
    out.join("\n")
}

fn failure_line(c: &milag::verify::CheckEntry) -> String {
    let case = c.case.map(|n| n.to_string()).unwrap_or_default();
    let msg = c.message.as_deref().unwrap_or("nonzero residual");
    format!("FAILED {} {case} {:?}: {msg}", c.identity, c.indices)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Case { name, n_range, format, out } => {
            let report = case_report(&name.spec(), n_range)?;
            let body = match format {
                Format::Json => pretty(&report),
                Format::Text => case_text(&report),
            };
            emit(&out, &body)
        }
        Command::List { format } => {
            let cases = catalog();
            let body = match format {
                Format::Json => pretty(&Value::Array(
                    cases
                        .iter()
                        .map(|c| {
                            json!({
                                "case": c.name,
                                "seeds": c.seeds.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                                "g": to_json(&c.g),
                                "family": c.family.is_some(),
                            })
                        })
                        .collect(),
                )),
                Format::Text => cases
                    .iter()
                    .map(|c| {
                        let seeds: Vec<String> = c.seeds.iter().map(|s| s.to_string()).collect();
                        let fam = if c.family.is_some() { "" } else { "  (no family)" };
                        format!("{}  {}  g = {}{fam}", c.name, seeds.join(", "), c.g)
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(&None, &body)
        }
        Command::Search { kinds, vmax, vmax_bound, target_m, format, out } => {
            if vmax == 0 || vmax > vmax_bound {
                return Err(Failure::Usage(format!("--vmax must be in 1..={vmax_bound}")));
            }
            if target_m < 2 {
                return Err(Failure::Usage("--target-m must be at least 2".into()));
            }
            let hits = search_multiple_zeros(&kinds.0, vmax, target_m);
            let body = match format {
                Format::Json => pretty(&json!(hits)),
                Format::Text if hits.is_empty() => "no hits".into(),
                Format::Text => hits.iter().map(hit_line).collect::<Vec<_>>().join("\n"),
            };
            emit(&out, &body)
        }
        Command::Verify { case, tol, fixture, format, out } => {
            let only = if case.eq_ignore_ascii_case("all") { None } else { Some(parse_case(&case).map_err(Failure::Usage)?) };
            if !(tol.is_finite() && tol > 0.0) {
                return Err(Failure::Usage(format!("tolerance must be positive, got {tol}")));
            }
            let mut cases = catalog();
            if let Some(path) = &fixture {
                for o in load_overrides(path)? {
                    apply_override(&mut cases, &o);
                }
            }
            let report = run_suite_on(cases, only, tol);
            let body = match format {
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
                Format::Text => verify_text(&report),
            };
            emit(&out, &body)?;
            if report.passed {
                Ok(())
            } else {
                for c in report.checks.iter().filter(|c| !c.passed) {
                    eprintln!("{}", failure_line(c));
                }
                Err(Failure::Verification)
            }
        }
        Command::Table { format, out } => {
            let rows = summary_table()?;
            let body = match format {
                Format::Json => pretty(&Value::Array(
                    rows.iter()
                        .map(|r| {
                            json!({
                                "case": r.case,
                                "seed": r.seed,
                                "potential": r.potential,
                                "weight": r.weight,
                                "extra": r.extra,
                            })
                        })
                        .collect(),
                )),
                Format::Text => {
                    let header = ["case", "seed Wronskian", "potential deformation", "weight", "extra n"];
                    let cells: Vec<[String; 5]> = rows
                        .iter()
                        .map(|r| [r.case.to_string(), r.seed.clone(), r.potential.clone(), r.weight.clone(), r.extra.clone()])
                        .collect();
                    let width = |i: usize| {
                        cells.iter().map(|c| c[i].chars().count()).chain([header[i].len()]).max().unwrap_or(0)
                    };
                    let widths: Vec<usize> = (0..5).map(width).collect();
                    let line = |c: &[String]| {
                        c.iter()
                            .zip(&widths)
                            .map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                            .collect::<Vec<_>>()
                            .join("  ")
                            .trim_end()
                            .to_string()
                    };
                    let head: Vec<String> = header.iter().map(|s| s.to_string()).collect();
                    std::iter::once(line(&head)).chain(cells.iter().map(|c| line(c))).collect::<Vec<_>>().join("\n")
                }
            };
            emit(&out, &body)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
