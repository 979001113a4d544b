//! The `tan` command-line tool.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::ainfty::spec::{load_category, load_functor};
use crate::ainfty::{check_functor, check_relations, check_units, AInftyCategory};
use crate::exactlin::{Field, SignConvention};
use crate::io::{element_to_json, envelope, error_envelope, horn_to_json, parse_horn, residual_to_json};
use crate::necklace::Necklace;
use crate::nerve::Nerve;
use crate::quasicat::{horn_compatible, horn_fill, verify_filler, HornData};
use crate::selftest;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "tan", version, about = "Templicial A∞-nerve computations and checks")]
pub struct Cli {
    /// `Q` or `Fp:<p>`; overrides the field named in the spec.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// `koszul` or `plain`.
    #[arg(long = "sign-convention", global = true, default_value = "koszul")]
    pub sign_convention: String,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// A∞ relations, units and functor relations.
    Check {
        spec: PathBuf,
        #[arg(long)]
        functor: Vec<PathBuf>,
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Dimension and basis of a nerve component.
    Nerve {
        spec: PathBuf,
        /// Comma-separated bead lengths; empty for Δ⁰.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        beads: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Comma-separated object per vertex; restricts to that labelling.
        #[arg(long)]
        vertices: Option<String>,
    },
    /// Fills an inner horn read from a file or restricted from a random simplex.
    Horn {
        spec: PathBuf,
        horn: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Every property suite on the shipped fixtures.
    Selftest,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Nerve { .. } => "nerve",
            Command::Horn { .. } => "horn",
            Command::Selftest => "selftest",
        }
    }
}

/// Validated global settings.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub field: Option<Field>,
    pub convention: SignConvention,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, String> {
        let field = cli
            .field
            .as_deref()
            .map(|f| f.parse::<Field>().map_err(|e| e.to_string()))
            .transpose()?;
        Ok(RunConfig {
            field,
            convention: cli.sign_convention.parse()?,
            out: cli.out.clone(),
        })
    }
}

struct Outcome {
    passed: bool,
    details: Value,
}

fn load(cfg: &RunConfig, spec: &PathBuf) -> Result<AInftyCategory, String> {
    load_category(spec, cfg.field).map_err(|e| e.to_string())
}

fn object(a: &AInftyCategory, name: &str) -> Result<usize, String> {
    a.object(name).ok_or_else(|| format!("unknown object {name:?}"))
}

fn cmd_check(cfg: &RunConfig, spec: &PathBuf, functors: &[PathBuf], kmax: Option<usize>) -> Result<Outcome, String> {
    let a = load(cfg, spec)?;
    let k = kmax.unwrap_or(a.max_degree() + 3);
    let relations = check_relations(&a, k);
    let units = check_units(&a);
    let mut passed = relations.passed() && units.passed();
    let mut reports = Vec::new();
    for path in functors {
        let f = load_functor(path, cfg.field).map_err(|e| e.to_string())?;
        let r = check_functor(&f, kmax.unwrap_or((f.source().max_degree() + 2).max(f.max_arity() + 1)));
        passed &= r.passed();
        reports.push(r);
    }
    Ok(Outcome {
        passed,
        details: json!({
            "category": a.name(),
            "field": a.field().to_string(),
            "kmax": k,
            "first_failing_arity": relations.first_failing_arity(),
            "relations": relations,
            "units": units,
            "functors": reports,
        }),
    })
}

fn cmd_nerve(
    cfg: &RunConfig,
    spec: &PathBuf,
    beads: &str,
    from: &str,
    to: &str,
    vertices: Option<&str>,
) -> Result<Outcome, String> {
    let a = load(cfg, spec)?;
    let t = Necklace::parse(beads).map_err(|e| e.to_string())?;
    let (x, y) = (object(&a, from)?, object(&a, to)?);
    let nerve = Nerve::new(&a, cfg.convention);
    let space = match vertices {
        None => nerve.space(&t, x, y),
        Some(list) => {
            let vs = list
                .split(',')
                .map(|v| object(&a, v.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            if vs.len() != t.spine() + 1 || vs[0] != x || vs[t.spine()] != y {
                return Err(format!("--vertices needs {} objects from {from} to {to}", t.spine() + 1));
            }
            nerve.labelled_space(&t, &vs)
        }
    };
    let mut residuals = Vec::new();
    for b in &space.basis {
        for r in nerve.tan_residuals(b).map_err(|e| e.to_string())? {
            residuals.push(residual_to_json(&a, &r));
        }
    }
    Ok(Outcome {
        passed: residuals.is_empty(),
        details: json!({
            "category": a.name(),
            "necklace": t.encode(),
            "from": from,
            "to": to,
            "vertices": vertices,
            "sign_convention": cfg.convention.to_string(),
            "dimension": space.dim(),
            "ambient_dimension": space.ambient_dim(),
            "basis": space.basis.iter().map(|b| element_to_json(&a, b)).collect::<Vec<_>>(),
            "residuals": residuals,
        }),
    })
}

fn random_horn(
    nerve: &Nerve,
    a: &AInftyCategory,
    n: usize,
    j: usize,
    from: usize,
    to: usize,
    seed: u64,
) -> Result<HornData, String> {
    if n < 2 || j == 0 || j >= n {
        return Err(format!("Λ^{n}_{j} is not an inner horn"));
    }
    let space = nerve.space(&Necklace::simplex(n), from, to);
    if space.dim() == 0 {
        return Err(format!("N_Δ{n}({},{}) is zero", a.object_name(from), a.object_name(to)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut z = space.random_element(&mut rng, a.field());
    while z.is_zero() {
        let i = rng.gen_range(0..space.dim());
        z = space.basis[i].clone();
    }
    HornData::restrict(nerve, &z, j).map_err(|e| e.to_string())
}

#[allow(clippy::too_many_arguments)]
fn cmd_horn(
    cfg: &RunConfig,
    spec: &PathBuf,
    horn: Option<&PathBuf>,
    n: Option<usize>,
    j: Option<usize>,
    from: Option<&str>,
    to: Option<&str>,
    seed: u64,
) -> Result<Outcome, String> {
    let a = load(cfg, spec)?;
    let nerve = Nerve::new(&a, cfg.convention);
    let h = match horn {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_horn(&a, &text).map_err(|e| e.to_string())?
        }
        None => {
            let (n, j) = (n.ok_or("--n is required without a horn file")?, j.ok_or("--j is required without a horn file")?);
            let from = object(&a, from.ok_or("--from is required without a horn file")?)?;
            let to = object(&a, to.ok_or("--to is required without a horn file")?)?;
            random_horn(&nerve, &a, n, j, from, to, seed)?
        }
    };
    let compat = horn_compatible(&nerve, &h).map_err(|e| e.to_string())?;
    if !compat.passed() {
        return Ok(Outcome {
            passed: false,
            details: json!({ "horn": horn_to_json(&a, &h), "compatibility": compat }),
        });
    }
    let z = horn_fill(&nerve, &h).map_err(|e| e.to_string())?;
    let verdict = verify_filler(&nerve, &h, &z).map_err(|e| e.to_string())?;
    Ok(Outcome {
        passed: verdict.passed(),
        details: json!({
            "horn": horn_to_json(&a, &h),
            "compatibility": compat,
            "filler": element_to_json(&a, &z),
            "verification": verdict,
        }),
    })
}

fn cmd_selftest(cfg: &RunConfig) -> Outcome {
    let (pinned, suites) = selftest::run_all(cfg.field.unwrap_or(Field::Rational));
    for s in &suites {
        eprintln!("{}", s.line());
    }
    let required = suites.iter().filter(|s| !s.name.contains("(plain)")).all(|s| s.passed());
    Outcome {
        passed: required && pinned.is_some(),
        details: json!({
            "pinned_sign_convention": pinned.map(|c| c.to_string()),
            "suites": suites.iter().map(|s| json!({
                "name": s.name,
                "status": if s.passed() { "pass" } else { "fail" },
                "checked": s.checked,
                "failure_count": s.failure_count,
                "failures": s.failures,
                "notes": s.notes,
            })).collect::<Vec<_>>(),
        }),
    }
}

fn emit(out: Option<&PathBuf>, report: &Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(report).expect("reports serialize") + "\n";
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Runs a parsed command line and returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    let command = cli.command.name();
    let cfg = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(e) => return fail_input(command, &e, cli.out.as_ref()),
    };
    let result = match &cli.command {
        Command::Check { spec, functor, kmax } => cmd_check(&cfg, spec, functor, *kmax),
        Command::Nerve { spec, beads, from, to, vertices } => {
            cmd_nerve(&cfg, spec, beads, from, to, vertices.as_deref())
        }
        Command::Horn { spec, horn, n, j, from, to, seed } => {
            cmd_horn(&cfg, spec, horn.as_ref(), *n, *j, from.as_deref(), to.as_deref(), *seed)
        }
        Command::Selftest => Ok(cmd_selftest(&cfg)),
    };
    match result {
        Ok(o) => match emit(cfg.out.as_ref(), &envelope(command, o.passed, o.details)) {
            Ok(()) if o.passed => EXIT_PASS,
            Ok(()) => EXIT_FAIL,
            Err(e) => fail_input(command, &e, None),
        },
        Err(e) => fail_input(command, &e, cfg.out.as_ref()),
    }
}

fn fail_input(command: &str, message: &str, out: Option<&PathBuf>) -> i32 {
    eprintln!("error: {message}");
    let _ = emit(out, &error_envelope(command, message));
    EXIT_INPUT
}

/// Parses `args` and runs; clap usage errors exit with 2.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let _ = e.print();
            code
        }
    }
}
