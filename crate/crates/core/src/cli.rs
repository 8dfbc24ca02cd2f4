//! Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
//! 2 usage or input error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::corpus::{self, corpus_entry, corpus_loop};
use crate::error::{Error, Result};
use crate::gfpn::{FieldSpec, FiniteField};
use crate::loopalg::{
    lemma11_check, lemma12_check, lemma13_chain_check, prop4_suite, LoopAlgebra, PowerChain,
};
use crate::loopcore::{parse_table, write_table, FiniteLoop, Sampling, SeriesMode, DEFAULT_SEED};
use crate::paige::{build_m, build_unit_loop, classify_embeddability};
use crate::report::CheckList;
use crate::suite::{self, SuiteConfig};
use crate::zorn::MAX_ENUMERATION_Q;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default guard on the order of constructed loops.
pub const DEFAULT_MAX_ORDER: usize = 4096;

#[derive(Parser, Debug)]
#[command(
    name = "moufang",
    version,
    about = "Finite Moufang loops, Zorn matrices and loop algebras"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Emit a JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Refuse to build loops above this order.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Check every triple instead of sampling.
    #[arg(long, global = true)]
    full: bool,
    /// Include elapsed time in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Write the report (or table) here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe GF(p^n).
    Field {
        #[arg(long)]
        field: FieldSpec,
    },
    /// Build Paige loops and classify fields.
    #[command(subcommand)]
    Paige(PaigeCmd),
    /// Laws and central series of a Cayley table.
    #[command(subcommand)]
    Loop(LoopCmd),
    /// Loop algebra FQ and its augmentation ideal.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Built-in example loops.
    #[command(subcommand)]
    Corpus(CorpusCmd),
    /// Run the acceptance suite.
    VerifyAll {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum PaigeCmd {
    /// Build M0(F) and M(F) = M0(F)/Z and emit the table of M(F).
    Build {
        #[arg(long)]
        field: FieldSpec,
        /// Also build the unit loop U(F).
        #[arg(long)]
        with_units: bool,
    },
    /// Square-root closure of F and the resulting classification.
    Classify {
        #[arg(long)]
        field: FieldSpec,
    },
}

#[derive(Subcommand, Debug)]
enum LoopCmd {
    /// Check laws on a Cayley table. With no law flags, checks Moufang and IP.
    Check {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        moufang: bool,
        #[arg(long)]
        ip: bool,
        #[arg(long)]
        associative: bool,
        #[arg(long)]
        commutative: bool,
        #[arg(long)]
        simple: bool,
    },
    /// Upper and lower central series.
    Series {
        #[arg(long)]
        table: PathBuf,
        /// Compute the lower series from Moufang-type brackets.
        #[arg(long)]
        moufang_mode: bool,
    },
}

#[derive(Subcommand, Debug)]
enum AlgebraCmd {
    /// Powers of the augmentation ideal and the lemma checks.
    Omega {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        field: FieldSpec,
        /// Comma-separated members of a normal subloop H for the ωH checks.
        #[arg(long, value_delimiter = ',')]
        subloop: Option<Vec<usize>>,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusCmd {
    /// Names, orders and tags.
    List,
    /// Write one corpus table.
    Emit {
        #[arg(long)]
        name: String,
    },
}

struct Report {
    command: Vec<String>,
    inputs: BTreeMap<String, String>,
    values: Map<String, Value>,
    checks: CheckList,
    /// Text written instead of the report body in non-JSON mode, or to `--out`.
    artifact: Option<String>,
    report_path: Option<PathBuf>,
}

impl Report {
    fn new(command: Vec<String>) -> Self {
        Report {
            command,
            inputs: BTreeMap::new(),
            values: Map::new(),
            checks: CheckList::new(),
            artifact: None,
            report_path: None,
        }
    }

    fn value(&mut self, key: &str, v: impl Into<Value>) {
        self.values.insert(key.to_string(), v.into());
    }

    fn to_json(&self, elapsed_ms: Option<u128>) -> Value {
        let mut v = json!({
            "schema": 1,
            "command": self.command,
            "inputs": self.inputs,
            "values": self.values,
            "checks": self.checks.items,
            "passed": self.checks.all_passed(),
        });
        if let Some(ms) = elapsed_ms {
            v["elapsed_ms"] = json!(ms as u64);
        }
        v
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.values {
            s.push_str(&format!("{k}: {}\n", compact(v)));
        }
        for item in &self.checks.items {
            let mark = if item.passed { "PASS" } else { "FAIL" };
            if item.detail.is_empty() {
                s.push_str(&format!("{mark} {}\n", item.name));
            } else {
                s.push_str(&format!("{mark} {} ({})\n", item.name, item.detail));
            }
        }
        s
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn digest(bytes: &[u8]) -> String {
    let h = Sha256::digest(bytes);
    let hex: String = h.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

fn read_table(path: &Path, report: &mut Report) -> Result<FiniteLoop> {
    let bytes =
        std::fs::read(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    report.inputs.insert("table".into(), digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|_| Error::Parse("table is not UTF-8".into()))?;
    parse_table(&text)
}

fn field_input(spec: FieldSpec, report: &mut Report) -> Result<FiniteField> {
    report.inputs.insert("field".into(), spec.to_string());
    spec.build()
}

fn sampling(common: &Common, order: usize) -> Sampling {
    if common.full {
        Sampling::Exhaustive
    } else {
        match Sampling::auto(order) {
            Sampling::Random { samples, .. } => Sampling::Random {
                samples,
                seed: common.seed,
            },
            s => s,
        }
    }
}

fn guard_order(order: usize, common: &Common) -> Result<()> {
    if order > common.max_order {
        return Err(Error::OrderTooLarge {
            order,
            limit: common.max_order,
        });
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let started = Instant::now();
    let mut report = Report::new(echo);
    if let Err(e) = dispatch(&cli, &mut report, stderr) {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    let elapsed = cli.common.timing.then(|| started.elapsed().as_millis());
    match emit(&cli.common, &report, elapsed, stdout) {
        Ok(()) => {}
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    }
    if report.checks.all_passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn emit(
    common: &Common,
    report: &Report,
    elapsed: Option<u128>,
    stdout: &mut dyn Write,
) -> std::io::Result<()> {
    let json = serde_json::to_string_pretty(&report.to_json(elapsed)).expect("serializable") + "\n";
    if let Some(path) = &report.report_path {
        std::fs::write(path, &json)?;
    }
    match (&report.artifact, &common.out) {
        (Some(artifact), Some(path)) => {
            std::fs::write(path, artifact)?;
            let body = if common.json { json } else { report.to_text() };
            stdout.write_all(body.as_bytes())
        }
        (Some(artifact), None) if !common.json => stdout.write_all(artifact.as_bytes()),
        (_, Some(path)) => {
            let body = if common.json { json } else { report.to_text() };
            std::fs::write(path, body)
        }
        (_, None) => {
            let body = if common.json { json } else { report.to_text() };
            stdout.write_all(body.as_bytes())
        }
    }
}

fn dispatch(cli: &Cli, report: &mut Report, stderr: &mut dyn Write) -> Result<()> {
    let common = &cli.common;
    match &cli.command {
        Command::Field { field } => cmd_field(*field, report),
        Command::Paige(PaigeCmd::Build { field, with_units }) => {
            cmd_paige_build(*field, *with_units, common, report, stderr)
        }
        Command::Paige(PaigeCmd::Classify { field }) => {
            report.inputs.insert("field".into(), field.to_string());
            let r = classify_embeddability(field.p, field.n)?;
            let v = serde_json::to_value(&r).expect("serializable");
            if let Value::Object(m) = v {
                report.values.extend(m);
            }
            Ok(())
        }
        Command::Loop(LoopCmd::Check {
            table,
            moufang,
            ip,
            associative,
            commutative,
            simple,
        }) => {
            let q = read_table(table, report)?;
            guard_order(q.order(), common)?;
            report.value("order", q.order());
            let none = !(*moufang || *ip || *associative || *commutative || *simple);
            let s = sampling(common, q.order());
            if *moufang || none {
                let v = q.moufang_violation(s);
                report.checks.push(
                    "moufang",
                    v.is_none(),
                    v.map(|t| format!("violated at {t:?}")).unwrap_or_default(),
                );
            }
            if *ip || none {
                report.checks.check("inverse property", q.is_ip_loop());
            }
            if *associative {
                let v = q.nonassociative_triple(s);
                report.checks.push(
                    "associative",
                    v.is_none(),
                    v.map(|t| format!("violated at {t:?}")).unwrap_or_default(),
                );
            }
            if *commutative {
                report.checks.check("commutative", q.is_commutative());
            }
            if *simple {
                let _ = writeln!(stderr, "computing {} normal closures", q.order() - 1);
                report.checks.check("simple", q.is_simple());
            }
            Ok(())
        }
        Command::Loop(LoopCmd::Series {
            table,
            moufang_mode,
        }) => {
            let q = read_table(table, report)?;
            guard_order(q.order(), common)?;
            let mode = if *moufang_mode {
                SeriesMode::Moufang
            } else {
                SeriesMode::General
            };
            let upper = q.upper_central_series();
            let lower = q.lower_central_series(mode)?;
            report.value("order", q.order());
            report.value("upper", upper.to_json());
            report.value("lower", lower.to_json());
            let agree = upper.class == lower.class;
            report.checks.push(
                "series terminate together",
                agree,
                format!("upper {:?}, lower {:?}", upper.class, lower.class),
            );
            report.value("class", json!(upper.class.filter(|_| agree)));
            Ok(())
        }
        Command::Algebra(AlgebraCmd::Omega {
            table,
            field,
            subloop,
            report: path,
        }) => cmd_omega(
            table,
            *field,
            subloop.as_deref(),
            path.clone(),
            common,
            report,
        ),
        Command::Corpus(CorpusCmd::List) => {
            let mut entries = Vec::new();
            for name in corpus::CORPUS_NAMES {
                let e = corpus_entry(name)?;
                entries.push(json!({
                    "name": e.name,
                    "order": e.loop_.order(),
                    "tags": e.tags.iter().map(|t| format!("{t:?}").to_lowercase()).collect::<Vec<_>>(),
                }));
            }
            let text: String = entries
                .iter()
                .map(|e| {
                    format!(
                        "{} {} {}\n",
                        e["name"].as_str().unwrap(),
                        e["order"],
                        compact(&e["tags"])
                    )
                })
                .collect();
            report.value("entries", entries);
            if !common.json {
                report.artifact = Some(text);
            }
            Ok(())
        }
        Command::Corpus(CorpusCmd::Emit { name }) => {
            let q = corpus_loop(name)?;
            report.inputs.insert("name".into(), name.clone());
            report.value("order", q.order());
            report.artifact = Some(write_table(&q));
            Ok(())
        }
        Command::VerifyAll { only } => cmd_verify_all(only, common, report, stderr),
    }
}

fn cmd_field(spec: FieldSpec, report: &mut Report) -> Result<()> {
    let f = field_input(spec, report)?;
    report.value("p", f.characteristic());
    report.value("n", f.degree());
    report.value("q", f.order());
    report.value("modulus", f.modulus());
    report.value("generator", f.render(f.generator()));
    report.value("closed_under_sqrt", f.is_closed_under_sqrt());
    if f.order() <= 256 {
        let agree = f
            .elements()
            .all(|a| f.elements().all(|b| f.mul(a, b) == f.mul_schoolbook(a, b)));
        report
            .checks
            .check("table product matches polynomial product", agree);
    }
    Ok(())
}

fn cmd_paige_build(
    spec: FieldSpec,
    with_units: bool,
    common: &Common,
    report: &mut Report,
    stderr: &mut dyn Write,
) -> Result<()> {
    let f = field_input(spec, report)?;
    let q = f.order() as usize;
    let m0_order = q.pow(3) * (q.pow(4) - 1);
    guard_order(m0_order, common)?;
    let _ = writeln!(stderr, "enumerating M0({f:?}), {m0_order} elements");
    let b = build_m(&f, MAX_ENUMERATION_Q)?;
    report.value("m0_order", b.m0.loop_.order());
    report.value("center_order", b.center.len());
    report.value("m_order", b.m.order());
    report.checks.push(
        "|M0| = q^3(q^4-1)",
        b.m0.loop_.order() == m0_order,
        format!("{}", b.m0.loop_.order()),
    );
    let s = sampling(common, b.m.order());
    let _ = writeln!(stderr, "checking laws on M, order {}", b.m.order());
    report
        .checks
        .check("M moufang", b.m.moufang_violation(s).is_none());
    report
        .checks
        .check("M nonassociative", b.m.nonassociative_triple(s).is_some());
    if with_units {
        let units = (q - 1) * m0_order;
        guard_order(units, common)?;
        let _ = writeln!(stderr, "enumerating U({f:?}), {units} elements");
        let u = build_unit_loop(&f, MAX_ENUMERATION_Q)?;
        report.value("units_order", u.loop_.order());
        report.checks.check(
            "U moufang",
            u.loop_
                .moufang_violation(sampling(common, u.loop_.order()))
                .is_none(),
        );
        report
            .checks
            .check("norm multiplicative on U", u.norm_is_homomorphism());
    }
    report.artifact = Some(write_table(&b.m));
    Ok(())
}

fn cmd_omega(
    table: &Path,
    spec: FieldSpec,
    subloop: Option<&[usize]>,
    path: Option<PathBuf>,
    common: &Common,
    report: &mut Report,
) -> Result<()> {
    let q = read_table(table, report)?;
    let f = field_input(spec, report)?;
    let alg = LoopAlgebra::new(q.clone(), f.clone())?;
    let omega = alg.omega();
    let mut chain = PowerChain::new(omega.space.clone());
    let index = chain.nilpotency_index(&alg, 4 * q.order() + 4);
    report.value("order", q.order());
    report.value("power_dims", chain.dims());
    report.value(
        "nilpotency_index",
        index.map_or(json!("none"), |k| json!(k)),
    );

    let p = f.characteristic();
    if q.is_moufang() && crate::corpus::p_loop_prime(&q) == Some(p) {
        let l11 = lemma11_check(&q, p)?;
        report.checks.push(
            "lemma11",
            l11.holds(),
            format!("index {:?}", l11.nilpotency_index),
        );
    }
    if let Some(m) = index {
        let mut rng = ChaCha8Rng::seed_from_u64(common.seed);
        let samples = if common.full { 1000 } else { 100 };
        let mut bad = 0;
        for _ in 0..samples {
            let u = alg.random_in(&omega.space, &mut rng);
            let v = alg.random_in(&omega.space, &mut rng);
            let w = alg.random_in(&omega.space, &mut rng);
            bad += !lemma12_check(&alg, &u, &v, &w, m)?.holds() as usize;
        }
        report.checks.push(
            "lemma12",
            bad == 0,
            format!("{bad} of {samples} triples violate"),
        );
        let l13 = lemma13_chain_check(&q, &f)?;
        report.checks.push(
            "lemma13",
            l13.holds(),
            format!(
                "class {:?}, bound {:?}",
                l13.nilpotency_class, l13.class_bound
            ),
        );
    }
    if let Some(members) = subloop {
        let h = q.subloop(members)?;
        let r = prop4_suite(&alg, &h, &q.whole())?;
        report.value("omega_h_dim", r.omega_h1_dim);
        report.checks.extend("prop4.", r.checks);
    }
    report.report_path = path;
    Ok(())
}

fn cmd_verify_all(
    only: &[usize],
    common: &Common,
    report: &mut Report,
    stderr: &mut dyn Write,
) -> Result<()> {
    let cfg = SuiteConfig {
        seed: common.seed,
        full: common.full,
        ..SuiteConfig::default()
    };
    let ids: Vec<usize> = if only.is_empty() {
        (1..=suite::CRITERIA).collect()
    } else {
        only.to_vec()
    };
    let mut details = Vec::new();
    let mut lines = String::new();
    for id in ids {
        let _ = writeln!(stderr, "criterion {id}: {}", suite::title(id));
        let r = suite::run_criterion(id, &cfg);
        let failing: Vec<String> = r.checks.failures().map(|i| i.name.clone()).collect();
        report
            .checks
            .push(format!("criterion {id}"), r.passed, failing.join(", "));
        lines.push_str(&format!(
            "{} criterion {id}: {}\n",
            if r.passed { "PASS" } else { "FAIL" },
            r.title
        ));
        details.push(serde_json::to_value(&r).expect("serializable"));
    }
    report.value("criteria", details);
    if !common.json {
        report.artifact = Some(lines);
    }
    Ok(())
}
