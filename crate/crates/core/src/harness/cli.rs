use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::basis::{nb_robust, nb_strong, removable_elements, BasisContext};
use crate::canonical::canonical_form;
use crate::connectivity::{cyclic_3_separations, is_3_connected, vertical_3_separations, VerticalSep3};
use crate::constructions::family;
use crate::elasticity::analyze;
use crate::error::{Error, Result};
use crate::harness::catalog::{encode, gen_catalog, load_catalog, resolve_catalog, write_catalog, CatalogEntry, CatalogFormat, Source};
use crate::harness::checks::CheckContext;
use crate::harness::report::{to_json, to_text};
use crate::harness::verify::{select_checks, verify, VerifyOptions};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;
use crate::structures::{maximal_fans, theta_separators};

#[derive(Parser, Debug)]
#[command(name = "elastic", version, about = "Elastic elements, 3-separations and structural checks for small matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Writes a named matroid, or a generated catalog, as catalog lines.
    Construct(ConstructArgs),
    /// Reports elastic, N-elastic and N-revealing elements and the structures around them.
    Analyze(AnalyzeArgs),
    /// Runs registered checks over a catalog.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct ConstructArgs {
    /// `uniform`, `wheel`, `whirl`, `theta`, `theta-minus`, `pg`, `gen`, or a family string such as `U(2,4)` or `L8`.
    family: String,
    /// Number of elements (`uniform`, `gen`) or the order of the family.
    #[arg(long)]
    n: Option<usize>,
    /// Rank (`uniform`, `wheel`, `whirl`, `pg`).
    #[arg(long)]
    r: Option<usize>,
    /// Field size for `pg` and `gen`.
    #[arg(long)]
    p: Option<u32>,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// `lex01` or `revlex_star`.
    #[arg(long, default_value = "lex01")]
    format: CatalogFormat,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// Catalog file to read the matroid from.
    #[arg(long, requires = "index", conflicts_with = "family")]
    file: Option<PathBuf>,
    /// Zero-based position of the entry in `--file`.
    #[arg(long, requires = "file")]
    index: Option<usize>,
    /// Family string such as `U(2,4)`, `THETA(4)` or `L8`.
    #[arg(long, required_unless_present = "file")]
    family: Option<String>,
    /// Family string of the minor `N` for N-elastic and N-revealing elements.
    #[arg(long)]
    minor: Option<String>,
    /// Comma-separated element indices or names.
    #[arg(long)]
    basis: Option<String>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    report: ReportFormat,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// A check id, or `all`.
    #[arg(long)]
    check: String,
    /// Comma-separated list of files and `gen:gfP:N` generators.
    #[arg(long)]
    catalog: String,
    /// Drops catalog entries with more elements.
    #[arg(long)]
    max_n: Option<usize>,
    /// `all`, or a comma-separated list of family strings.
    #[arg(long, default_value = "all")]
    minors: String,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    report: ReportFormat,
    /// Stops at the first violation.
    #[arg(long)]
    fail_fast: bool,
    /// Adds `elapsed_ms` to each report.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

/// Runs the command line and returns the process exit code: 0 when every
/// check passes, 1 when violations were found, 2 on usage or input errors.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Construct(a) => construct(a, out),
        Command::Analyze(a) => analyze_cmd(a, out),
        Command::Verify(a) => verify_cmd(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn need<T>(value: Option<T>, flag: &str, family: &str) -> Result<T> {
    value.ok_or_else(|| Error::InvalidParameter(format!("`{family}` needs --{flag}")))
}

fn construct(a: ConstructArgs, out: &mut dyn Write) -> Result<i32> {
    let name = a.family.to_lowercase();
    let entries = if name == "gen" {
        gen_catalog(need(a.p, "p", "gen")?, need(a.n, "n", "gen")?)?
    } else {
        let spec = match name.as_str() {
            "uniform" => format!("U({},{})", need(a.r, "r", "uniform")?, need(a.n, "n", "uniform")?),
            "wheel" => format!("W({})", need(a.r, "r", "wheel")?),
            "whirl" => format!("WHIRL({})", need(a.r, "r", "whirl")?),
            "theta" => format!("THETA({})", need(a.n, "n", "theta")?),
            "theta-minus" => format!("THETA-({})", need(a.n, "n", "theta-minus")?),
            "pg" => format!("PG({},{})", need(a.r, "r", "pg")?.saturating_sub(1), need(a.p, "p", "pg")?),
            _ => a.family.clone(),
        };
        let m = family(&spec)?;
        vec![CatalogEntry { matroid: m, source: Source::Generator(spec.clone()), id: spec }]
    };
    let text = write_catalog(&entries, a.format);
    match a.out {
        Some(path) => fs::write(path, text)?,
        None => emit(out, &text)?,
    }
    Ok(0)
}

fn load_subject(a: &AnalyzeArgs) -> Result<(String, Matroid)> {
    match (&a.file, a.index, &a.family) {
        (Some(path), Some(i), _) => {
            let entries = load_catalog(path, None)?;
            let count = entries.len();
            let entry = entries
                .into_iter()
                .nth(i)
                .ok_or_else(|| Error::InvalidParameter(format!("index {i} out of range for {count} entries")))?;
            Ok((entry.id, entry.matroid))
        }
        (_, _, Some(spec)) => Ok((spec.clone(), family(spec)?)),
        _ => Err(Error::InvalidParameter("give --family or --file with --index".into())),
    }
}

fn parse_elements(m: &Matroid, list: &str) -> Result<SubsetMask> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            m.element_by_name(s)
                .or_else(|| s.parse().ok())
                .filter(|&e| e < m.size())
                .ok_or_else(|| Error::InvalidParameter(format!("unknown element `{s}`")))
        })
        .collect()
}

fn names(m: &Matroid, x: SubsetMask) -> Value {
    json!(x.iter().map(|e| m.element_name(e)).collect::<Vec<_>>())
}

fn sep_names(m: &Matroid, s: &VerticalSep3) -> Value {
    json!({ "x": names(m, s.x), "e": m.element_name(s.e), "y": names(m, s.y) })
}

fn basis_json(m: &Matroid, n: Option<&Matroid>, b: SubsetMask) -> Result<Value> {
    let ctx = BasisContext::new(m, b)?;
    let mut v = json!({ "basis": names(m, b), "removable": names(m, removable_elements(m, &ctx)) });
    if let Some(n) = n {
        v["robust"] = names(m, nb_robust(m, n, &ctx));
        v["strong"] = names(m, nb_strong(m, n, &ctx));
    }
    Ok(v)
}

fn analyze_cmd(a: AnalyzeArgs, out: &mut dyn Write) -> Result<i32> {
    let (id, m) = load_subject(&a)?;
    let n = a.minor.as_deref().map(family).transpose()?;
    let report = analyze(&m, n.as_ref());
    let elements: Vec<Value> = report
        .details
        .iter()
        .enumerate()
        .map(|(e, d)| {
            let mut v = json!({
                "index": e,
                "name": m.element_name(e),
                "elastic": d.is_elastic(),
                "si_3connected": d.si_3conn,
                "co_3connected": d.co_3conn,
            });
            if n.is_some() {
                v["n_elastic"] = json!(d.is_n_elastic());
                v["n_revealing"] = json!(d.is_n_revealing());
            }
            v
        })
        .collect();
    let bases: Vec<SubsetMask> = match &a.basis {
        Some(list) => vec![parse_elements(&m, list)?],
        None => m.bases(),
    };
    let removal = bases.into_iter().map(|b| basis_json(&m, n.as_ref(), b)).collect::<Result<Vec<_>>>()?;
    let thetas: Vec<Value> = theta_separators(&m)
        .iter()
        .map(|s| json!({ "w": names(&m, s.w), "z": names(&m, s.z), "n": s.n, "variant": s.variant, "orientation": s.orientation }))
        .collect();
    let connected = is_3_connected(&m);
    let (vertical, cyclic) = if connected {
        (vertical_3_separations(&m)?, cyclic_3_separations(&m)?)
    } else {
        (Vec::new(), Vec::new())
    };
    let mut doc = json!({
        "matroid": {
            "id": id,
            "lex01": encode(&m, CatalogFormat::Lex01),
            "size": m.size(),
            "rank": m.full_rank(),
            "three_connected": connected,
        },
        "elements": elements,
        "elastic": names(&m, report.elastic),
        "fans": maximal_fans(&m).iter().map(|f| f.elements.iter().map(|&e| m.element_name(e)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "theta_separators": thetas,
        "vertical_3_separations": vertical.iter().map(|s| sep_names(&m, s)).collect::<Vec<_>>(),
        "cyclic_3_separations": cyclic.iter().map(|s| sep_names(&m, s)).collect::<Vec<_>>(),
        "removable": removal,
    });
    if let Some(n) = &n {
        doc["minor"] = json!(encode(n, CatalogFormat::Lex01));
        doc["n_elastic"] = names(&m, report.n_elastic);
        doc["n_revealing"] = names(&m, report.n_revealing);
    }
    let text = match a.report {
        ReportFormat::Json => serde_json::to_string_pretty(&doc).expect("json value") + "\n",
        ReportFormat::Text => analysis_text(&doc),
    };
    emit(out, &text)?;
    Ok(0)
}

fn analysis_text(doc: &Value) -> String {
    let mut s = String::new();
    let m = &doc["matroid"];
    s += &format!("{} n={} r={} 3-connected={}\n", m["id"].as_str().unwrap_or(""), m["size"], m["rank"], m["three_connected"]);
    for key in ["elastic", "n_elastic", "n_revealing", "fans", "theta_separators", "vertical_3_separations", "cyclic_3_separations"] {
        if let Some(v) = doc.get(key) {
            s += &format!("{key}: {v}\n");
        }
    }
    for b in doc["removable"].as_array().into_iter().flatten() {
        s += &format!("basis {} removable {}\n", b["basis"], b["removable"]);
    }
    s
}

fn minor_context(spec: &str) -> Result<CheckContext> {
    if spec.eq_ignore_ascii_case("all") {
        return Ok(CheckContext::default());
    }
    let forms = split_specs(spec).iter().map(|s| family(s.trim()).map(|n| canonical_form(&n))).collect::<Result<Vec<_>>>()?;
    Ok(CheckContext { minors: Some(forms) })
}

/// Splits at commas outside parentheses, so `U(2,4),F7` gives two specs.
fn split_specs(spec: &str) -> Vec<String> {
    let mut parts = vec![String::new()];
    let mut depth = 0usize;
    for c in spec.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(String::new());
                continue;
            }
            _ => {}
        }
        parts.last_mut().expect("nonempty").push(c);
    }
    parts
}

fn verify_cmd(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let checks = select_checks(&a.check)?;
    let catalog = resolve_catalog(&a.catalog, a.max_n)?;
    let context = minor_context(&a.minors)?;
    let options = VerifyOptions { context, jobs: a.jobs, fail_fast: a.fail_fast, timing: a.timing };
    let reports = verify(&checks, &catalog, &options)?;
    let text = match a.report {
        ReportFormat::Json => to_json(&reports),
        ReportFormat::Text => to_text(&reports),
    };
    emit(out, &text)?;
    Ok(if reports.iter().all(|r| r.passed()) { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("elastic").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn splits_specs_outside_parentheses() {
        assert_eq!(split_specs("U(2,4),F7"), vec!["U(2,4)", "F7"]);
        assert_eq!(split_specs("MK4"), vec!["MK4"]);
    }

    #[test]
    fn construct_uniform() {
        let (code, out, _) = call(&["construct", "uniform", "--r", "2", "--n", "4"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "4 2 111111"));
    }

    #[test]
    fn missing_parameter_is_an_input_error() {
        let (code, _, err) = call(&["construct", "wheel"]);
        assert_eq!(code, 2);
        assert!(err.contains("--r"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["verify", "--check", "NOPE", "--catalog", "gen:gf2:5"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["analyze"]).0, 2);
    }
}
