//! Command-line front end of the `nilorbit` library.
//!
//! [`dispatch`] parses an argument vector, runs one query and returns the exit
//! code with the text destined for stdout and stderr. Exit code 0 means
//! success, 1 a domain error reported by the library and 2 a usage error.

pub mod config;
pub mod export;
pub mod suites;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use nilorbit::complex_orbits::{
    bv_dual, enumerate_nil_p, enumerate_orbits, induce_complex, infinitesimal_character,
    theta_lift_complex, ComplexOrbit,
};
use nilorbit::diagrams::{EpsSign, Partition};
use nilorbit::isotropy::component_group;
use nilorbit::oracle::OracleConfig;
use nilorbit::real_orbits::{
    enumerate_k_orbits, gen_descent_signed, induce_real, KOrbit, RealForm, Signature,
    SignedDiagram,
};
use nilorbit::unipotent::{classify, count_unipotent};

pub use config::{Config, Format, CONFIG_ENV};
use export::{rows_rendered, Rendered};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "nilorbit", version, about = "Nilpotent orbits and unipotent counts for real classical groups")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Output format (overrides `output_format` in the config file).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Configuration file; defaults to the path in $NILORBIT_CONFIG.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed of the matrix oracle.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest space dimension accepted by enumerating commands.
    #[arg(long, global = true)]
    max_dim: Option<usize>,
    /// Random samples per grading in the lift oracle.
    #[arg(long, global = true)]
    trials: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Orbits of type eps in dimension n, optionally only the preferred ones.
    #[command(allow_negative_numbers = true)]
    Orbits {
        eps: String,
        n: usize,
        #[arg(long)]
        nilp: Option<String>,
    },
    /// Infinitesimal character attached to an orbit.
    #[command(allow_negative_numbers = true)]
    Infchar { eps: String, columns: String },
    /// Barbasch-Vogan dual and half its neutral element.
    #[command(allow_negative_numbers = true)]
    Bvdual { eps: String, columns: String },
    /// K-orbits of a real form inside a complex orbit.
    Korbits { form: String, columns: String },
    /// Descent of a K-orbit.
    Descend { form: String, diagram: String },
    /// Generalized descent of a K-orbit to a space of the given signature.
    Gendescend {
        form: String,
        diagram: String,
        #[arg(long)]
        target_sig: String,
    },
    /// Theta lift of a complex orbit of type eps' to dimension n.
    #[command(allow_negative_numbers = true)]
    Lift {
        eps: String,
        columns: String,
        #[arg(long)]
        dim: usize,
    },
    /// Induction of a K-orbit from the Levi factor GL(l) x G.
    Induce {
        form: String,
        diagram: String,
        #[arg(long)]
        l: usize,
    },
    /// Unipotent count over one preferred orbit.
    Count {
        form: String,
        columns: String,
        #[arg(long)]
        parity: Option<String>,
    },
    /// Unipotent counts over all preferred orbits of a form.
    Classify {
        form: Option<String>,
        #[arg(long)]
        parity: Option<String>,
    },
    /// Runs a consistency suite, or `all` of them.
    OracleCheck { suite: String },
}

/// Error carrying the exit code it maps to.
struct Failure {
    code: i32,
    msg: String,
}

impl From<nilorbit::Error> for Failure {
    fn from(e: nilorbit::Error) -> Self {
        Failure { code: 1, msg: e.to_string() }
    }
}

impl From<config::ConfigError> for Failure {
    fn from(e: config::ConfigError) -> Self {
        Failure { code: 2, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

pub fn dispatch<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.exit_code() {
                0 => Outcome::ok(text),
                code => Outcome::fail(code, text),
            };
        }
    };
    match run(cli) {
        Ok(out) => out,
        Err(f) => Outcome::fail(f.code, format!("error: {}\n", f.msg)),
    }
}

fn resolve_config(g: &GlobalArgs) -> Result<Config, Failure> {
    let path = g.config.clone().or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    let mut cfg = match path {
        Some(p) => Config::load(&p)?,
        None => Config::default(),
    };
    if let Some(f) = g.format {
        cfg.output_format = f;
    }
    if let Some(s) = g.seed {
        cfg.seed = s;
    }
    if let Some(m) = g.max_dim {
        cfg.max_dim = m;
    }
    if let Some(t) = g.trials {
        cfg.trials = t;
    }
    Ok(cfg)
}

fn parse_eps(s: &str) -> Result<EpsSign, Failure> {
    s.trim()
        .parse::<i64>()
        .ok()
        .and_then(EpsSign::from_int)
        .ok_or_else(|| usage(format!("eps must be 1 or -1, got `{s}`")))
}

/// Accepts `4,2,2`, `[4,2,2]` and the empty string or `[]`.
fn parse_columns(s: &str) -> Result<Partition, Failure> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if inner.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = inner
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| usage(format!("columns must be comma-separated integers, got `{s}`")))?;
    Ok(Partition::new(parts)?)
}

fn parse_form(s: &str) -> Result<RealForm, Failure> {
    Ok(s.parse::<RealForm>()?)
}

fn parse_diagram(s: &str) -> Result<SignedDiagram, Failure> {
    Ok(s.parse::<SignedDiagram>()?)
}

fn parse_signature(s: &str) -> Result<Signature, Failure> {
    let bad = || usage(format!("signature must be p,q, got `{s}`"));
    let (p, q) = s.split_once(',').ok_or_else(bad)?;
    Ok(Signature::new(
        p.trim().parse().map_err(|_| bad())?,
        q.trim().parse().map_err(|_| bad())?,
    ))
}

fn parse_parity_opt(s: Option<&str>, fallback: u8) -> Result<u8, Failure> {
    match s {
        Some(s) => config::parse_parity(s).map_err(usage),
        None => Ok(fallback),
    }
}

fn check_dim(n: usize, cfg: &Config) -> Result<(), Failure> {
    if n > cfg.max_dim {
        return Err(usage(format!("dimension {n} exceeds max_dim {}", cfg.max_dim)));
    }
    Ok(())
}

fn orbit(eps: EpsSign, cols: Partition) -> Result<ComplexOrbit, Failure> {
    Ok(ComplexOrbit::new(eps, cols)?)
}

fn orbit_json(o: &ComplexOrbit) -> Value {
    serde_json::to_value(o).expect("orbits serialize")
}

fn korbit_cells(k: &KOrbit) -> Vec<String> {
    vec![
        k.form.to_string(),
        k.diagram.to_string(),
        k.diagram.underlying_partition().to_string(),
        component_group(k).order().to_string(),
    ]
}

fn korbit_json(k: &KOrbit) -> Value {
    json!({
        "form": k.form,
        "diagram": k.diagram,
        "columns": k.diagram.underlying_partition(),
        "component_group_order": component_group(k).order(),
    })
}

const KORBIT_HEADER: [&str; 4] = ["form", "diagram", "columns", "|A_X|"];

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let cfg = resolve_config(&cli.global)?;
    let rendered = match cli.command {
        Command::Orbits { eps, n, nilp } => {
            let eps = parse_eps(&eps)?;
            check_dim(n, &cfg)?;
            let list = match nilp {
                Some(p) => enumerate_nil_p(eps, n, config::parse_parity(&p).map_err(usage)?),
                None => enumerate_orbits(eps, n),
            };
            Rendered::new(
                Value::Array(list.iter().map(orbit_json).collect()),
                &["eps", "dim", "columns"],
                list.iter()
                    .map(|o| vec![o.eps.to_string(), o.dim_v.to_string(), o.columns.to_string()])
                    .collect(),
            )
        }
        Command::Infchar { eps, columns } => {
            let o = orbit(parse_eps(&eps)?, parse_columns(&columns)?)?;
            let lambda = infinitesimal_character(&o);
            Rendered::new(
                json!({ "orbit": o, "inf_char": lambda }),
                &["columns", "inf_char"],
                vec![vec![o.columns.to_string(), lambda.to_string()]],
            )
        }
        Command::Bvdual { eps, columns } => {
            let o = orbit(parse_eps(&eps)?, parse_columns(&columns)?)?;
            let d = bv_dual(&o)?;
            let lambda = infinitesimal_character(&o);
            let agrees = d.half_h.equivalent(&lambda);
            Rendered::new(
                json!({
                    "orbit": o,
                    "dual": d.dual,
                    "half_h": d.half_h,
                    "inf_char": lambda,
                    "checked": d.checked,
                    "agrees": agrees,
                }),
                &["columns", "dual_columns", "half_h", "inf_char", "checked", "agrees"],
                vec![vec![
                    o.columns.to_string(),
                    d.dual.columns.to_string(),
                    d.half_h.to_string(),
                    lambda.to_string(),
                    d.checked.to_string(),
                    agrees.to_string(),
                ]],
            )
        }
        Command::Korbits { form, columns } => {
            let form = parse_form(&form)?;
            let o = orbit(form.kind.eps, parse_columns(&columns)?)?;
            let list = enumerate_k_orbits(&form, &o)?;
            Rendered::new(
                Value::Array(list.iter().map(korbit_json).collect()),
                &KORBIT_HEADER,
                list.iter().map(korbit_cells).collect(),
            )
        }
        Command::Descend { form, diagram } => {
            let ko = KOrbit::new(parse_form(&form)?, parse_diagram(&diagram)?)?;
            let d = ko.descent();
            Rendered::new(korbit_json(&d), &KORBIT_HEADER, vec![korbit_cells(&d)])
        }
        Command::Gendescend {
            form,
            diagram,
            target_sig,
        } => {
            let ko = KOrbit::new(parse_form(&form)?, parse_diagram(&diagram)?)?;
            let sig = parse_signature(&target_sig)?;
            let target = RealForm::new(ko.form.kind.opposite(), sig)?;
            let d = KOrbit::new(target, gen_descent_signed(&ko.diagram, sig)?)?;
            Rendered::new(korbit_json(&d), &KORBIT_HEADER, vec![korbit_cells(&d)])
        }
        Command::Lift { eps, columns, dim } => {
            let o = orbit(parse_eps(&eps)?, parse_columns(&columns)?)?;
            let lifted = theta_lift_complex(&o, dim)?;
            Rendered::new(
                json!({ "source": o, "lift": lifted }),
                &["source", "dim", "lift"],
                vec![vec![o.columns.to_string(), dim.to_string(), lifted.columns.to_string()]],
            )
        }
        Command::Induce { form, diagram, l } => {
            let ko = KOrbit::new(parse_form(&form)?, parse_diagram(&diagram)?)?;
            let big = induce_complex(&ko.complex_orbit(), l, ko.form.kind)?;
            let target = RealForm::new(ko.form.kind, ko.form.signature + Signature::new(l, l))?;
            let list = induce_real(&ko.diagram, l, ko.form.kind)?;
            Rendered::new(
                json!({
                    "form": target,
                    "complex": big,
                    "induced": list
                        .iter()
                        .map(|(d, i)| json!({ "diagram": d, "index": i }))
                        .collect::<Vec<_>>(),
                }),
                &["form", "diagram", "columns", "index"],
                list.iter()
                    .map(|(d, i)| {
                        vec![
                            target.to_string(),
                            d.to_string(),
                            d.underlying_partition().to_string(),
                            i.to_string(),
                        ]
                    })
                    .collect(),
            )
        }
        Command::Count {
            form,
            columns,
            parity,
        } => {
            let form = parse_form(&form)?;
            let parity = parse_parity_opt(parity.as_deref(), cfg.parity)?;
            let o = orbit(form.kind.eps, parse_columns(&columns)?)?;
            let row = count_unipotent(&form, &o, parity)?;
            let mut r = rows_rendered(std::slice::from_ref(&row));
            r.json = serde_json::to_value(&row).expect("rows serialize");
            r
        }
        Command::Classify { form, parity } => {
            let form = match (form, cfg.form) {
                (Some(s), _) => parse_form(&s)?,
                (None, Some(f)) => f,
                (None, None) => return Err(usage("classify needs a form argument or `form` in the config")),
            };
            check_dim(form.dim(), &cfg)?;
            let parity = parse_parity_opt(parity.as_deref(), cfg.parity)?;
            rows_rendered(&classify(&form, parity))
        }
        Command::OracleCheck { suite } => return oracle_check(&suite, &cfg),
    };
    Ok(Outcome::ok(rendered.render(cfg.output_format)))
}

fn oracle_check(suite: &str, cfg: &Config) -> Result<Outcome, Failure> {
    let names: Vec<&str> = if suite == "all" {
        suites::SUITE_NAMES.to_vec()
    } else if suites::SUITE_NAMES.contains(&suite) {
        vec![suite]
    } else {
        return Err(usage(format!(
            "unknown suite `{suite}`; expected all or one of {}",
            suites::SUITE_NAMES.join(", ")
        )));
    };
    let ocfg = OracleConfig {
        bound: cfg.bound,
        seed: cfg.seed,
    };
    let reports: Vec<suites::SuiteReport> = names
        .iter()
        .filter_map(|n| suites::run_suite(n, &ocfg, cfg.trials))
        .collect();
    let all_pass = reports.iter().all(|r| r.passed());
    let text = match cfg.output_format {
        Format::Json => {
            let v: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "criterion": r.id,
                        "name": r.name,
                        "passed": r.passed(),
                        "checked": r.checked,
                        "mismatches": r.failures,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&v).expect("values serialize") + "\n"
        }
        _ => reports.iter().map(|r| r.line() + "\n").collect(),
    };
    Ok(Outcome {
        code: if all_pass { 0 } else { 1 },
        stdout: text,
        stderr: String::new(),
    })
}
