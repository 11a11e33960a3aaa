//! Command-line front end: every computation behind one binary with
//! reproducible text or JSON output.
//!
//! Exit codes: 0 success, 2 usage or parse failure, 3 degree cap exceeded,
//! 4 built-in self-check mismatch.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use steenrod::adem::adem_normalize_with_cap;
use steenrod::ideal::ideal_member_with_cap;
use steenrod::secondary::{lower_bound_with_jobs, theorem_one_bounds_with_jobs};
use steenrod::{
    catalog, catalog_for_sphere, catalog_relation, distinguish, f_bound, family_case1,
    family_case2, AdemCache, BoundReport, DistinguishReport, Error, Factorization,
    SteenrodElement, DEFAULT_DEGREE_CAP,
};

const DEGREE_CAP_ENV: &str = "STEENROD_DEGREE_CAP";
const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "steenrod",
    version,
    about = "Mod-2 Steenrod algebra workbench",
    after_help = "Environment:\n  STEENROD_DEGREE_CAP  degree cap when no --degree-cap is given (default 512)"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Degree cap for user-supplied elements; overrides STEENROD_DEGREE_CAP
    #[arg(long, global = true)]
    degree_cap: Option<u32>,

    /// Worker threads for per-k scans
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite an element into admissible normal form
    Adem {
        /// Element text, e.g. "Sq2 Sq4 + Sq5 Sq1 + Sq6"
        expr: String,
    },
    /// Parity of the pair coefficient (a, b) = (a+b)!/(a! b!)
    Binom { a: u64, b: u64 },
    /// The dyadic lower-bound function F(n)
    Ffunc { n: u64 },
    /// Whether Sq^d lies in the left ideal L(k)
    Ideal { d: u32, k: u32 },
    /// Lower bound for the loop count on S^{2n+1} from one factorization
    Bound {
        /// Odd sphere dimension 2n+1
        sphere_dim: u32,
        /// Catalog relation name (sq6, sq10, sq18, sq12, sq14)
        #[arg(long, conflicts_with = "expr")]
        relation: Option<String>,
        /// Flat factorization text; each monomial splits at its last square
        #[arg(long)]
        expr: Option<String>,
    },
    /// The five catalog rows with their lower bounds (self-checked)
    Table1 {
        /// Restrict to one sphere, e.g. S5 or S17
        #[arg(long)]
        only: Option<String>,
    },
    /// Compare the two fiber modules over S^{q 2^{n+2} + 1}
    Distinguish { n: u32, q: u64 },
    /// Both parametric-family bounds at parameter t
    Theorem1 { t: u32 },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn selfcheck(message: impl Into<String>) -> Self {
        Failure { code: 4, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegreeCapExceeded { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn degree_cap(cli: &Cli) -> Result<u32, Failure> {
    if let Some(cap) = cli.degree_cap {
        return Ok(cap);
    }
    match std::env::var(DEGREE_CAP_ENV) {
        Ok(text) => text
            .parse()
            .map_err(|_| Failure::usage(format!("{DEGREE_CAP_ENV}={text:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_DEGREE_CAP),
    }
}

fn emit(format: Format, text: String, value: Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
    }
}

fn bound_to_json(report: &BoundReport) -> Value {
    json!({
        "sphere": format!("S^{}", report.sphere_dim),
        "relation": report.relation,
        "per_k": report
            .verdicts
            .iter()
            .map(|v| {
                json!({
                    "k": v.k,
                    "indeterminacy_zero": v.indeterminacy_zero,
                    "witness": v.witness.as_ref().map(|w| {
                        json!({
                            "term": w.term.to_string(),
                            "t": w.t,
                            "class": w.class_name,
                            "image": w.image,
                        })
                    }),
                })
            })
            .collect::<Vec<_>>(),
        "max_vanishing_k": report.max_vanishing_k,
        "lower_bound": report.lower_bound,
        "contiguous": report.contiguous,
    })
}

fn distinguish_to_json(r: &DistinguishReport) -> Value {
    json!({
        "n": r.n,
        "q": r.q,
        "loops": r.loop_count,
        "sphere_dim": r.sphere_dim,
        "degree": r.degree,
        "operation": format!("Sq{}_*", r.operation),
        "deg2_primitive": r.deg2_primitive.to_string(),
        "deg2_action": r.deg2_action.to_string(),
        "psi_primitive": r.psi_primitive.to_string(),
        "gamma_image": r.gamma_image.to_string(),
        "qpsi_action": r.qpsi_action.to_string(),
        "modules_differ": r.modules_differ,
        "note": r.assumption,
    })
}

/// Accepts "S5", "S^5" or "5".
fn parse_sphere(text: &str) -> Result<u32, Failure> {
    let trimmed = text.trim().trim_start_matches('S').trim_start_matches('^');
    trimmed
        .parse()
        .map_err(|_| Failure::usage(format!("cannot read a sphere name from {text:?}")))
}

fn factorization_for(
    sphere_dim: u32,
    relation: Option<&str>,
    expr: Option<&str>,
) -> Result<Factorization, Failure> {
    if sphere_dim.is_multiple_of(2) {
        return Err(Failure::usage(format!(
            "bound expects an odd sphere dimension 2n+1, got {sphere_dim}"
        )));
    }
    let target = sphere_dim
        .checked_add(1)
        .ok_or_else(|| Failure::usage(format!("sphere dimension {sphere_dim} is out of range")))?;
    if let Some(text) = expr {
        let element: SteenrodElement = text.parse().map_err(Failure::from)?;
        let f = Factorization::from_element(&element)?;
        if f.target_degree() != target {
            return Err(Failure::usage(format!(
                "expression has degree {}, expected {} for S^{}",
                f.target_degree(),
                target,
                sphere_dim
            )));
        }
        return Ok(f);
    }
    if let Some(name) = relation {
        let entry = catalog_relation(name)
            .ok_or_else(|| Failure::usage(format!("unknown relation {name:?}; try sq6, sq10, sq18, sq12 or sq14")))?;
        if entry.factorization.target_degree() != target {
            return Err(Failure::usage(format!(
                "relation {name} targets Sq{}, but S^{} needs Sq{}",
                entry.factorization.target_degree(),
                sphere_dim,
                target
            )));
        }
        return Ok(entry.factorization);
    }
    if let Some(entry) = catalog_for_sphere(sphere_dim) {
        return Ok(entry.factorization);
    }
    // 2n+2 = 3 * 2^t or 2n+2 = 2 + 2^{t+1} come from the parametric families.
    if target.is_multiple_of(3) && (target / 3).is_power_of_two() && target / 3 >= 2 {
        return Ok(family_case1((target / 3).trailing_zeros())?);
    }
    if target >= 6 && (target - 2).is_power_of_two() {
        return Ok(family_case2((target - 2).trailing_zeros() - 1)?);
    }
    Err(Failure::usage(format!(
        "no catalog relation for S^{sphere_dim}; pass --expr with a factorization of Sq{target}"
    )))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cap = degree_cap(&cli)?;
    let jobs = cli.jobs.max(1);
    match &cli.command {
        Command::Adem { expr } => {
            let element: SteenrodElement = expr.parse().map_err(Failure::from)?;
            let normal = adem_normalize_with_cap(&element, cap)?;
            let text = normal.to_string();
            emit(
                cli.format,
                text.clone(),
                json!({
                    "schema": SCHEMA,
                    "command": "adem",
                    "input": expr,
                    "normal_form": text,
                }),
            );
        }
        Command::Binom { a, b } => {
            if a.checked_add(*b).is_none() {
                return Err(Failure::usage(format!("{a} + {b} overflows the pair convention")));
            }
            let parity = u8::from(steenrod::binom_pair_mod2(*a, *b));
            emit(
                cli.format,
                parity.to_string(),
                json!({
                    "schema": SCHEMA,
                    "command": "binom",
                    "a": a,
                    "b": b,
                    "parity": parity,
                }),
            );
        }
        Command::Ffunc { n } => {
            if *n == 0 {
                return Err(Failure::usage("ffunc expects n >= 1"));
            }
            let f = f_bound(*n)?;
            emit(
                cli.format,
                f.to_string(),
                json!({
                    "schema": SCHEMA,
                    "command": "ffunc",
                    "n": n,
                    "f": f,
                }),
            );
        }
        Command::Ideal { d, k } => {
            if *d == 0 {
                return Err(Failure::usage("ideal expects d >= 1"));
            }
            if *d > cap {
                return Err(Failure::from(Error::DegreeCapExceeded { degree: *d, cap }));
            }
            let member =
                ideal_member_with_cap(&SteenrodElement::sq(*d), *k, cap, &mut AdemCache::new())?;
            emit(
                cli.format,
                member.to_string(),
                json!({
                    "schema": SCHEMA,
                    "command": "ideal",
                    "d": d,
                    "k": k,
                    "member": member,
                }),
            );
        }
        Command::Bound { sphere_dim, relation, expr } => {
            let f = factorization_for(*sphere_dim, relation.as_deref(), expr.as_deref())?;
            if f.target_degree() > cap {
                return Err(Failure::from(Error::DegreeCapExceeded {
                    degree: f.target_degree(),
                    cap,
                }));
            }
            let report = lower_bound_with_jobs((sphere_dim - 1) / 2, &f, jobs)?;
            emit(
                cli.format,
                report.to_string(),
                json!({
                    "schema": SCHEMA,
                    "command": "bound",
                    "report": bound_to_json(&report),
                }),
            );
        }
        Command::Table1 { only } => {
            let filter = only.as_deref().map(parse_sphere).transpose()?;
            let mut rows = Vec::new();
            for entry in catalog() {
                if filter.is_some_and(|s| s != entry.sphere_dim) {
                    continue;
                }
                let report =
                    lower_bound_with_jobs((entry.sphere_dim - 1) / 2, &entry.factorization, jobs)?;
                rows.push(report);
            }
            if rows.is_empty() {
                return Err(Failure::usage(
                    "--only matched no table row; the spheres are S5, S9, S17, S11, S13",
                ));
            }
            let expected = [(5u32, 3u32), (9, 7), (17, 15), (11, 5), (13, 7)];
            for row in &rows {
                let want = expected
                    .iter()
                    .find(|(s, _)| *s == row.sphere_dim)
                    .map(|(_, b)| *b)
                    .expect("catalog spheres are fixed");
                if row.lower_bound != want {
                    return Err(Failure::selfcheck(format!(
                        "table self-check: S^{} produced k >= {}, expected k >= {}",
                        row.sphere_dim, row.lower_bound, want
                    )));
                }
            }
            let text = rows
                .iter()
                .map(|r| format!("S^{}: k >= {}   [{}]", r.sphere_dim, r.lower_bound, r.relation))
                .collect::<Vec<_>>()
                .join("\n");
            emit(
                cli.format,
                text,
                json!({
                    "schema": SCHEMA,
                    "command": "table1",
                    "rows": rows
                        .iter()
                        .map(|r| {
                            json!({
                                "sphere": format!("S^{}", r.sphere_dim),
                                "relation": r.relation,
                                "max_vanishing_k": r.max_vanishing_k,
                                "lower_bound": r.lower_bound,
                            })
                        })
                        .collect::<Vec<_>>(),
                }),
            );
        }
        Command::Distinguish { n, q } => {
            let report = distinguish(*n, *q)?;
            emit(
                cli.format,
                report.to_string(),
                json!({
                    "schema": SCHEMA,
                    "command": "distinguish",
                    "report": distinguish_to_json(&report),
                }),
            );
        }
        Command::Theorem1 { t } => {
            let bounds = theorem_one_bounds_with_jobs(*t, jobs)?;
            let summary = |label: &str, r: &BoundReport| {
                format!(
                    "{label}: S^{} gives k >= {} (required {})",
                    r.sphere_dim, r.lower_bound, bounds.required
                )
            };
            let text = format!(
                "{}\n{}\n\n{}\n\n{}",
                summary("part 1", &bounds.part1),
                summary("part 2", &bounds.part2),
                bounds.part1,
                bounds.part2
            );
            emit(
                cli.format,
                text,
                json!({
                    "schema": SCHEMA,
                    "command": "theorem1",
                    "t": t,
                    "required": bounds.required,
                    "part1": bound_to_json(&bounds.part1),
                    "part2": bound_to_json(&bounds.part2),
                }),
            );
        }
    }
    Ok(())
}
