//! `askeyver`: runs the verification suites over the polynomial family
//! catalog and prints a report.
//!
//! Exit codes: 0 when every executed check passes, 1 when any check fails,
//! 2 on configuration errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use askey_core::config::binding_from_entries;
use askey_core::error::Error;
use askey_core::families::{Binding, FamilyId};
use askey_core::numeric::NumericConfig;
use askey_core::suite::{run, SuiteKind, SuiteSpec};

#[derive(Parser, Debug)]
#[command(
    name = "askeyver",
    about = "Exact verification of difference/differential relations for Askey-scheme orthogonal polynomials"
)]
struct Args {
    /// Comma-separated family tags (cH, MP, W, cdH, AW, cdqH, ASC, cbqHe,
    /// cqHe, cqJ, cqL, cqH, qMP, He, L, J, B, pJ) or "all".
    #[arg(long, default_value = "all")]
    families: String,

    /// Comma-separated suites: basic, christoffel, single-shift, operators,
    /// theorem4, theorem8, numeric, or "all".
    #[arg(long, default_value = "all")]
    suites: String,

    /// Verification depth (checks run for n = 0..n_max).
    #[arg(long = "n-max")]
    n_max: Option<i64>,

    /// Parameter/suites configuration file (TOML).
    #[arg(long)]
    config: Option<PathBuf>,

    /// Write the report here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,

    /// Output format.
    #[arg(long, default_value = "text", value_parser = ["text", "structured"])]
    format: String,

    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,

    /// Seed for the rational perturbation used on zero-denominator retries.
    #[arg(long)]
    seed: Option<u64>,
}

fn parse_families(list: &str) -> Result<Vec<FamilyId>, Error> {
    if list.trim() == "all" {
        return Ok(FamilyId::ALL.to_vec());
    }
    list.split(',')
        .map(|tag| {
            FamilyId::from_tag(tag.trim()).ok_or(Error::Config {
                message: format!("unknown family tag `{}`", tag.trim()),
            })
        })
        .collect()
}

fn parse_suites(list: &str) -> Result<Vec<SuiteKind>, Error> {
    if list.trim() == "all" {
        return Ok(SuiteKind::ALL.to_vec());
    }
    list.split(',')
        .map(|name| {
            SuiteKind::from_name(name.trim()).ok_or(Error::Config {
                message: format!("unknown suite `{}`", name.trim()),
            })
        })
        .collect()
}

fn toml_i64(value: &toml::Value, what: &str) -> Result<i64, Error> {
    value.as_integer().ok_or(Error::Config { message: format!("{what} must be an integer") })
}

fn toml_f64(value: &toml::Value, what: &str) -> Result<f64, Error> {
    value
        .as_float()
        .or_else(|| value.as_integer().map(|i| i as f64))
        .ok_or(Error::Config { message: format!("{what} must be a number") })
}

/// Applies a TOML configuration file on top of the default specification.
fn apply_config(spec: &mut SuiteSpec, path: &PathBuf) -> Result<(), Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Config {
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    let doc: toml::Value = text.parse().map_err(|e| Error::Config {
        message: format!("{}: {e}", path.display()),
    })?;

    if let Some(suite) = doc.get("suite") {
        if let Some(v) = suite.get("families") {
            let list = v.as_array().ok_or(Error::Config {
                message: "suite.families must be an array of tags".into(),
            })?;
            let mut families = Vec::new();
            for item in list {
                let tag = item.as_str().ok_or(Error::Config {
                    message: "suite.families entries must be strings".into(),
                })?;
                families.extend(parse_families(tag)?);
            }
            spec.families = families;
        }
        if let Some(v) = suite.get("suites") {
            let list = v.as_array().ok_or(Error::Config {
                message: "suite.suites must be an array of names".into(),
            })?;
            let mut suites = Vec::new();
            for item in list {
                let name = item.as_str().ok_or(Error::Config {
                    message: "suite.suites entries must be strings".into(),
                })?;
                suites.extend(parse_suites(name)?);
            }
            spec.suites = suites;
        }
        if let Some(v) = suite.get("n-max") {
            spec.n_max = toml_i64(v, "suite.n-max")?;
        }
        if let Some(v) = suite.get("seed") {
            spec.seed = toml_i64(v, "suite.seed")? as u64;
        }
        if let Some(v) = suite.get("jobs") {
            spec.jobs = Some(toml_i64(v, "suite.jobs")? as usize);
        }
    }

    if let Some(numeric) = doc.get("numeric") {
        let mut truncation = spec.numeric.qpoch_truncation;
        let mut points = spec.numeric.quad_points;
        let mut tol = spec.numeric.tol_rel;
        if let Some(v) = numeric.get("qpoch-truncation") {
            truncation = toml_i64(v, "numeric.qpoch-truncation")? as u32;
        }
        if let Some(v) = numeric.get("quad-points") {
            points = toml_i64(v, "numeric.quad-points")? as usize;
        }
        if let Some(v) = numeric.get("tol-rel") {
            tol = toml_f64(v, "numeric.tol-rel")?;
        }
        spec.numeric = NumericConfig::new(truncation, points, tol)?;
    }

    if let Some(families) = doc.get("family") {
        let table = families.as_table().ok_or(Error::Config {
            message: "family must be a table of family tags".into(),
        })?;
        for (tag, value) in table {
            let id = FamilyId::from_tag(tag).ok_or(Error::Config {
                message: format!("unknown family tag `{tag}` in config"),
            })?;
            let tables: Vec<&toml::value::Table> = match value {
                toml::Value::Table(t) => vec![t],
                toml::Value::Array(items) => items
                    .iter()
                    .map(|item| {
                        item.as_table().ok_or(Error::Config {
                            message: format!("family.{tag} entries must be tables"),
                        })
                    })
                    .collect::<Result<_, _>>()?,
                _ => {
                    return Err(Error::Config {
                        message: format!("family.{tag} must be a table or array of tables"),
                    })
                }
            };
            let mut bindings: Vec<Binding> = Vec::new();
            for t in tables {
                let entries: Vec<(String, String)> = t
                    .iter()
                    .map(|(k, v)| {
                        let s = v.as_str().ok_or(Error::Config {
                            message: format!(
                                "family.{tag}.{k} must be a string (exact values only)"
                            ),
                        })?;
                        Ok((k.clone(), s.to_string()))
                    })
                    .collect::<Result<_, Error>>()?;
                bindings.push(binding_from_entries(id, &entries)?);
            }
            spec.bindings.insert(id, bindings);
        }
    }
    Ok(())
}

fn build_spec(args: &Args) -> Result<SuiteSpec, Error> {
    let mut spec = SuiteSpec::with_defaults();
    if let Some(path) = &args.config {
        apply_config(&mut spec, path)?;
    }
    if args.families != "all" {
        spec.families = parse_families(&args.families)?;
    }
    if args.suites != "all" {
        spec.suites = parse_suites(&args.suites)?;
    }
    if let Some(n) = args.n_max {
        spec.n_max = n;
    }
    if let Some(jobs) = args.jobs {
        spec.jobs = Some(jobs);
    }
    if let Some(seed) = args.seed {
        spec.seed = seed;
    }
    spec.validate()?;
    Ok(spec)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let spec = match build_spec(&args) {
        Ok(spec) => spec,
        Err(e) => {
            eprintln!("askeyver: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match run(&spec) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("askeyver: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = match args.format.as_str() {
        "structured" => report.to_structured(),
        _ => report.to_text(),
    };
    if let Some(path) = &args.report {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("askeyver: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{rendered}");
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
