//! Command-line front end.
//!
//! Exit codes: 0 success (or "yes"), 1 "no", 2 parse failure, 3 invariant
//! failure, 4 undecided.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::bocs::{decide_bocs_existence, BocsVerdict};
use crate::corpus;
use crate::error::{Error, Result};
use crate::gendo::{classify, minimal_faithful_idempotent, GendoReport, Verdict};
use crate::json::{parse_value, verify_report, AlgebraJson};
use crate::module::{dominant_dimension, dominant_dimension_via_ext, is_injective, simple_representatives, Module};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "bocs", version, about = "Exact rational workbench for gendo-symmetric algebras and their bocses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for randomized isomorphism searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of resolution terms computed before giving up.
    #[arg(long, global = true, default_value_t = 8)]
    cap: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimensions, radical, center, projective/injective table, dominant dimension.
    Analyze { input: String },
    /// Morita and gendo-symmetric classification with witnesses.
    Gendo { input: String },
    /// Coring on (A, D(A)) and the bocs classification of the module catalog.
    Bocs { input: String },
    /// Dominant dimensions of catalog modules, by resolutions and by Ext.
    Domdim {
        input: String,
        #[arg(long)]
        module: Option<String>,
    },
    /// Built-in algebras.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Re-check the witnesses embedded in a JSON report.
    Verify { report: PathBuf },
}

#[derive(Debug, Subcommand)]
enum CorpusAction {
    List,
}

/// A finished command: its text and JSON renderings and exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::UnknownCorpus(_) | Error::UnknownModule(_) | Error::Inadmissible(_) => 2,
        Error::Undecided { .. } => 4,
        _ => 3,
    }
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Yes => 0,
        Verdict::No => 1,
        Verdict::Undecided => 4,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// A corpus name, or a path to an algebra JSON file.
pub fn load_algebra(input: &str) -> Result<Algebra> {
    let path = Path::new(input);
    let a = if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{input}: {e}")))?;
        crate::json::parse_algebra(&text)?
    } else {
        corpus::parse(input)?
    };
    let report = a.check_presentation();
    if !report.is_valid() {
        return Err(Error::InvalidPresentation(format!("{:?}", report.issues)));
    }
    Ok(a)
}

fn header(command: &str, input: &str, seed: u64, cap: usize) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m.insert("input".into(), json!(input));
    m.insert("seed".into(), json!(seed));
    m.insert("cap".into(), json!(cap));
    m
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

fn analyze(input: &str, seed: u64, cap: usize) -> Result<Outcome> {
    let a = load_algebra(input)?;
    let reps = simple_representatives(&a);
    let dd = dominant_dimension(&Module::regular(&a), cap);
    let mut rows = Vec::new();
    let mut text = format!(
        "algebra {input}\ndimension {}, radical {}, center {}, simples {}\nvertex  dim P  dim I  P injective\n",
        a.dim(),
        a.radical().dim(),
        a.center().dim(),
        reps.len()
    );
    for &s in &reps {
        let p = Module::projective(&a, s);
        let i = Module::injective(&a, s);
        let pi = is_injective(&p);
        let _ = writeln!(text, "{s:<7} {:<6} {:<6} {}", p.dim(), i.dim(), yes_no(pi));
        rows.push(json!({"vertex": s, "projective_dim": p.dim(), "injective_dim": i.dim(), "projective_injective": pi}));
    }
    let _ = writeln!(text, "dominant dimension {dd}");
    let mut m = header("analyze", input, seed, cap);
    m.insert("algebra".into(), to_value(&AlgebraJson::from_algebra(&a)));
    m.insert("dim".into(), json!(a.dim()));
    m.insert("radical_dim".into(), json!(a.radical().dim()));
    m.insert("center_dim".into(), json!(a.center().dim()));
    m.insert("simples".into(), json!(reps.len()));
    m.insert("nakayama".into(), json!(corpus::is_nakayama(&a)));
    m.insert("vertices".into(), Value::Array(rows));
    m.insert("dominant_dimension".into(), to_value(&dd));
    Ok(Outcome { text, json: Value::Object(m), code: 0 })
}

fn gendo_text(r: &GendoReport) -> String {
    let mut t = String::new();
    let idem = r.minimal_faithful.as_ref().map(|f| format!("{:?}", f.indices)).unwrap_or_else(|| "none".into());
    let _ = writeln!(t, "dominant dimension {}", r.dominant_dimension);
    let _ = writeln!(t, "projective-injective vertices {:?}", r.projective_injective);
    let _ = writeln!(t, "minimal faithful idempotent {idem}");
    let _ = writeln!(t, "morita algebra {:?}", r.is_morita);
    let _ = writeln!(t, "gendo-symmetric {:?} (corner route {:?}, tensor route {:?})", r.is_gendo_symmetric, r.corner_route, r.tensor_route);
    let _ = writeln!(t, "dim D(A) ⊗_A D(A) = {}", r.tensor_dim);
    for e in &r.evidence {
        let _ = writeln!(t, "evidence: {e}");
    }
    t
}

fn gendo(input: &str, seed: u64, cap: usize) -> Result<Outcome> {
    let a = load_algebra(input)?;
    let r = classify(&a, seed, cap)?;
    let mut m = header("gendo", input, seed, cap);
    m.insert("algebra".into(), to_value(&AlgebraJson::from_algebra(&a)));
    m.insert("gendo".into(), to_value(&r));
    let text = format!("algebra {input}\n{}", gendo_text(&r));
    Ok(Outcome { text, json: Value::Object(m), code: verdict_code(r.is_gendo_symmetric) })
}

fn bocs(input: &str, seed: u64, cap: usize) -> Result<Outcome> {
    let a = load_algebra(input)?;
    let verdict = decide_bocs_existence(&a, seed, cap)?;
    let report = verdict.report().clone();
    let mut m = header("bocs", input, seed, cap);
    m.insert("algebra".into(), to_value(&AlgebraJson::from_algebra(&a)));
    m.insert("gendo".into(), to_value(&report));
    let mut text = format!("algebra {input}\n{}", gendo_text(&report));
    let b = match &verdict {
        BocsVerdict::Exists { bocs, .. } => bocs,
        BocsVerdict::Absent { .. } => {
            m.insert("verdict".into(), json!("absent"));
            m.insert("coring".into(), Value::Null);
            text.push_str("no coring on D(A): the algebra is not gendo-symmetric\n");
            return Ok(Outcome { text, json: Value::Object(m), code: 1 });
        }
        BocsVerdict::Undecided { .. } => {
            m.insert("verdict".into(), json!("undecided"));
            m.insert("coring".into(), Value::Null);
            text.push_str("coring existence undecided\n");
            return Ok(Outcome { text, json: Value::Object(m), code: 4 });
        }
    };
    m.insert("verdict".into(), json!("exists"));
    m.insert("coring".into(), to_value(&b.certificate()));
    let ax = &b.axioms;
    let _ = writeln!(
        text,
        "coring on D(A): bimodule maps {}, left counit {}, right counit {}, coassociative {}",
        yes_no(ax.bimodule_maps),
        yes_no(ax.left_counit),
        yes_no(ax.right_counit),
        yes_no(ax.coassociative)
    );

    let catalog = corpus::module_catalog(&a)?;
    let names: Vec<&str> = catalog.names().collect();
    let modules: Vec<Module> = catalog.modules().cloned().collect();
    let _ = writeln!(text, "catalog ({}): {}", if catalog.complete { "complete" } else { "partial" }, names.join(", "));
    let mut im_rows = Vec::new();
    text.push_str("module  dim  domdim  I_M injective  I_M bijective\n");
    for (name, md) in catalog.entries() {
        let r = b.map_im(md)?;
        let dd = dominant_dimension(md, cap);
        let _ = writeln!(text, "{name:<7} {:<4} {:<7} {:<14} {}", md.dim(), dd.to_string(), yes_no(r.injective), yes_no(r.bijective));
        im_rows.push(json!({"module": name, "dim": md.dim(), "dominant_dimension": dd, "injective": r.injective, "bijective": r.bijective}));
    }
    let p = b.partition(&modules, seed)?;
    let zero: Vec<&str> = p.zero.iter().map(|&i| names[i]).collect();
    let classes: Vec<Vec<&str>> = p.classes.iter().map(|c| c.iter().map(|&i| names[i]).collect()).collect();
    let _ = writeln!(text, "zero objects: {}", if zero.is_empty() { "none".into() } else { zero.join(", ") });
    for (k, c) in classes.iter().enumerate() {
        let _ = writeln!(text, "class {k}: {}", c.join(", "));
    }
    let eae = b.eae_check(&modules)?;
    let _ = writeln!(text, "Hom dimensions agree with mod-eAe: {}", yes_no(eae.agree));
    m.insert("catalog".into(), json!({"complete": catalog.complete, "modules": names}));
    m.insert("im_table".into(), Value::Array(im_rows));
    m.insert("partition".into(), json!({"zero": zero, "classes": classes}));
    m.insert("eae".into(), to_value(&eae));
    let code = if eae.agree && ax.passed() { 0 } else { 3 };
    Ok(Outcome { text, json: Value::Object(m), code })
}

fn domdim(input: &str, module: Option<&str>, seed: u64, cap: usize) -> Result<Outcome> {
    let a = load_algebra(input)?;
    let catalog = corpus::module_catalog(&a)?;
    let mut targets: Vec<(String, Module)> = Vec::new();
    match module {
        Some("A") => targets.push(("A".into(), Module::regular(&a))),
        Some(name) => {
            let md = catalog.get(name).ok_or_else(|| Error::UnknownModule(name.into()))?;
            targets.push((name.into(), md.clone()));
        }
        None => {
            targets.push(("A".into(), Module::regular(&a)));
            targets.extend(catalog.entries().iter().cloned());
        }
    }
    let e = minimal_faithful_idempotent(&a).map(|f| f.element);
    let mut rows = Vec::new();
    let mut text = format!("algebra {input}\nmodule  resolution  ext\n");
    let mut agree = true;
    for (name, md) in &targets {
        let dd = dominant_dimension(md, cap);
        let via_ext = match &e {
            Some(e) => Some(dominant_dimension_via_ext(md, e, cap)?),
            None => None,
        };
        if let Some(x) = &via_ext {
            agree &= dd.compatible(x);
        }
        let ext_s = via_ext.as_ref().map(|x| x.to_string()).unwrap_or_else(|| "-".into());
        let _ = writeln!(text, "{name:<7} {:<11} {ext_s}", dd.to_string());
        rows.push(json!({"module": name, "resolution": dd, "ext": via_ext}));
    }
    let mut m = header("domdim", input, seed, cap);
    m.insert("modules".into(), Value::Array(rows));
    m.insert("agree".into(), json!(agree));
    Ok(Outcome { text, json: Value::Object(m), code: if agree { 0 } else { 3 } })
}

fn corpus_list(seed: u64, cap: usize) -> Outcome {
    let text = corpus::NAMES.iter().map(|n| format!("{n}\n")).collect();
    let mut m = header("corpus list", "", seed, cap);
    m.insert("corpora".into(), json!(corpus::NAMES));
    Outcome { text, json: Value::Object(m), code: 0 }
}

fn verify(path: &Path, seed: u64, cap: usize) -> Result<Outcome> {
    let raw = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let checks = verify_report(&parse_value(&raw)?)?;
    let ok = checks.iter().all(|c| c.valid);
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(text, "{:<16} {}", c.name, if c.valid { "valid" } else { "INVALID" });
    }
    let _ = writeln!(text, "{} witnesses checked", checks.len());
    let mut m = header("verify", &path.display().to_string(), seed, cap);
    m.insert("checks".into(), to_value(&checks));
    m.insert("valid".into(), json!(ok));
    Ok(Outcome { text, json: Value::Object(m), code: if ok { 0 } else { 3 } })
}

/// Parses arguments (without writing anything) and runs the command.
pub fn execute<I: IntoIterator<Item = OsString>>(args: I) -> std::result::Result<(Outcome, bool, Option<PathBuf>), clap::Error> {
    let cli = Cli::try_parse_from(args)?;
    let (seed, cap) = (cli.seed, cli.cap);
    let result = match &cli.command {
        Command::Analyze { input } => analyze(input, seed, cap),
        Command::Gendo { input } => gendo(input, seed, cap),
        Command::Bocs { input } => bocs(input, seed, cap),
        Command::Domdim { input, module } => domdim(input, module.as_deref(), seed, cap),
        Command::Corpus { action: CorpusAction::List } => Ok(corpus_list(seed, cap)),
        Command::Verify { report } => verify(report, seed, cap),
    };
    let outcome = result.unwrap_or_else(|e| {
        let mut m = header("error", "", seed, cap);
        m.insert("error".into(), json!(e.to_string()));
        Outcome { text: format!("error: {e}\n"), json: Value::Object(m), code: exit_code(&e) }
    });
    Ok((outcome, cli.json, cli.out))
}

impl Outcome {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("report serializes");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let (outcome, as_json, out) = match execute(args) {
        Ok(x) => x,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let rendered = outcome.render(as_json);
    let failed = outcome.code >= 2;
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 3;
            }
        }
        None if failed && !as_json => eprint!("{rendered}"),
        None => print!("{rendered}"),
    }
    outcome.code
}
