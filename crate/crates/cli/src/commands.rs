//! Subcommand bodies. Each returns the text to print and whether every
//! requested check passed.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use drinfeld_core::charpoly::{
    charpoly_endomorphism, charpoly_linear_system_oracle, degree_bounds, verify_charpoly, PrecisionPlan,
};
use drinfeld_core::random::{field_of_order, random_module};
use drinfeld_core::{Algorithm, CharPolyOptions, CharPolyResult, DrinfeldModule, SkewPoly};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bench::{run_bench, to_csv, BenchConfig};
use crate::instance::{endo_from_spec, parse_instance, to_instance_file, to_json, EndoSpec, Instance};
use crate::report::{render_text, CharPolyJson, VerificationJson};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, success: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Which endomorphism a command acts on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EndoChoice {
    /// The file's `endo`, or τ^n when absent.
    FromInstance,
    Frobenius,
    /// Inline JSON (`"frobenius"` or a coefficient list) or a path to a file holding it.
    Given(String),
}

pub fn resolve_endo(instance: &Instance, choice: &EndoChoice) -> Result<SkewPoly> {
    match choice {
        EndoChoice::FromInstance => Ok(instance.endo_or_frobenius()),
        EndoChoice::Frobenius => Ok(instance.module.frobenius_endo()),
        EndoChoice::Given(text) => {
            let trimmed = text.trim();
            let json = if trimmed.starts_with('[') || trimmed.starts_with('"') {
                trimmed.to_string()
            } else if trimmed == "frobenius" {
                "\"frobenius\"".to_string()
            } else {
                fs::read_to_string(trimmed).with_context(|| format!("reading endomorphism file `{trimmed}`"))?
            };
            let spec: EndoSpec = serde_json::from_str(&json).context("parsing --endo")?;
            Ok(endo_from_spec(&instance.module, &spec)?)
        }
    }
}

/// Gaussian elimination on more entries than this is skipped by `--verify`.
pub const ORACLE_ENTRY_LIMIT: usize = 4_000_000;

fn oracle_size(module: &DrinfeldModule, u: &SkewPoly) -> usize {
    let d = u.degree().unwrap_or(0);
    let r = module.rank();
    let unknowns: usize = degree_bounds(d, r).iter().map(|b| b + 1).sum();
    (r * d + 1) * module.tower().n() * unknowns
}

fn run_checks(module: &DrinfeldModule, u: &SkewPoly, result: &CharPolyResult) -> Result<VerificationJson> {
    let annihilates = verify_charpoly(module, u, result);
    let linear_system = if oracle_size(module, u) > ORACLE_ENTRY_LIMIT {
        None
    } else {
        Some(match charpoly_linear_system_oracle(module, u)? {
            Some(sol) if &sol == result => "agrees".to_string(),
            Some(_) => "disagrees".to_string(),
            None => "not unique".to_string(),
        })
    };
    Ok(VerificationJson {
        annihilates,
        linear_system,
    })
}

fn checks_pass(v: &VerificationJson) -> bool {
    v.annihilates && v.linear_system.as_deref() != Some("disagrees")
}

pub struct CharpolyArgs {
    pub module: PathBuf,
    pub endo: EndoChoice,
    pub algorithm: Algorithm,
    pub k: Option<usize>,
    pub verify: bool,
    pub format: Format,
}

pub fn cmd_charpoly(args: &CharpolyArgs) -> Result<Outcome> {
    let instance = parse_instance(&args.module)?;
    let module = &instance.module;
    let u = resolve_endo(&instance, &args.endo)?;
    let fq = module.tower().fq();
    let opts = CharPolyOptions {
        k: args.k,
        check_endomorphism: true,
    };
    let result = charpoly_endomorphism(module, &u, args.algorithm, opts)?;
    let k = args.k.unwrap_or(PrecisionPlan::new(module, &u)?.k);
    let used = match (args.algorithm, module.is_frobenius(&u)) {
        (Algorithm::Auto, true) => Algorithm::Bsgs,
        (Algorithm::Auto, false) => Algorithm::Recurrence,
        (a, _) => a,
    };
    let verification = if args.verify {
        Some(run_checks(module, &u, &result)?)
    } else {
        None
    };
    let success = verification.as_ref().is_none_or(checks_pass);
    let stdout = match args.format {
        Format::Text => {
            let mut s = render_text(fq, &result);
            if let Some(v) = &verification {
                s.push_str(&format!(
                    "annihilation: {}\nlinear system: {}\n",
                    if v.annihilates { "ok" } else { "FAILED" },
                    v.linear_system.as_deref().unwrap_or("skipped")
                ));
            }
            s
        }
        Format::Json => {
            let mut json = CharPolyJson::new(fq, &result, used.name(), k);
            json.verification = verification;
            let mut s = serde_json::to_string_pretty(&json)?;
            s.push('\n');
            s
        }
    };
    Ok(Outcome { stdout, success })
}

pub struct VerifyArgs {
    pub module: PathBuf,
    pub endo: EndoChoice,
    /// JSON output of `charpoly` to check instead of recomputing.
    pub claimed: Option<PathBuf>,
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome> {
    let instance = parse_instance(&args.module)?;
    let module = &instance.module;
    let u = resolve_endo(&instance, &args.endo)?;
    let fq = module.tower().fq();
    let mut out = String::new();
    let mut success = true;

    if let Some(path) = &args.claimed {
        let text = fs::read_to_string(path).with_context(|| format!("reading `{}`", path.display()))?;
        let claimed: CharPolyJson = serde_json::from_str(&text).context("parsing claimed characteristic polynomial")?;
        let result = claimed.to_result(fq)?;
        if result.rank() != module.rank() {
            bail!("claimed polynomial has rank {}, module has rank {}", result.rank(), module.rank());
        }
        let ok = verify_charpoly(module, &u, &result);
        out.push_str(&format!(
            "{}\nannihilation: {}\n",
            result.display(fq),
            if ok { "ok" } else { "FAILED" }
        ));
        return Ok(Outcome { stdout: out, success: ok });
    }

    let opts = CharPolyOptions::default();
    let mut algorithms = vec![Algorithm::Recurrence, Algorithm::Euclidean];
    if module.is_frobenius(&u) {
        algorithms.push(Algorithm::Bsgs);
    }
    let mut results = Vec::new();
    for alg in algorithms {
        let res = charpoly_endomorphism(module, &u, alg, opts)?;
        out.push_str(&format!("{alg}: {}\n", res.display(fq)));
        results.push(res);
    }
    let agree = results.windows(2).all(|w| w[0] == w[1]);
    out.push_str(&format!("methods agree: {}\n", if agree { "ok" } else { "FAILED" }));
    success &= agree;
    let v = run_checks(module, &u, &results[0])?;
    let bounds = results[0].degree_bounds_hold(u.degree().unwrap_or(0));
    out.push_str(&format!(
        "annihilation: {}\ndegree bounds: {}\nlinear system: {}\n",
        if v.annihilates { "ok" } else { "FAILED" },
        if bounds { "ok" } else { "FAILED" },
        v.linear_system.as_deref().unwrap_or("skipped")
    ));
    success &= checks_pass(&v) && bounds;
    Ok(Outcome { stdout: out, success })
}

pub struct RandomArgs {
    pub seed: u64,
    pub q: u32,
    pub n: usize,
    pub r: usize,
    pub m: Option<usize>,
    pub out: Option<PathBuf>,
}

pub fn random_instance_json(seed: u64, q: u32, n: usize, r: usize, m: Option<usize>) -> Result<String> {
    if n == 0 {
        bail!("n must be positive");
    }
    let fq = field_of_order(q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let module = random_module(&fq, n, r, m.unwrap_or(n), &mut rng)?;
    let u = module.frobenius_endo();
    Ok(to_json(&to_instance_file(&module, Some(&u))))
}

pub fn cmd_random(args: &RandomArgs) -> Result<Outcome> {
    let json = random_instance_json(args.seed, args.q, args.n, args.r, args.m)?;
    match &args.out {
        Some(path) => {
            write_file(path, &json)?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(json)),
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing `{}`", path.display()))
}

pub fn cmd_bench(cfg: &BenchConfig) -> Result<Outcome> {
    let rows = run_bench(cfg)?;
    Ok(Outcome::ok(to_csv(&rows)))
}
