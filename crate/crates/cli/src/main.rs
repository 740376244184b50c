//! `qshift`: command-line front end for the qshift library.
//!
//! Exit codes: 0 success or accepted, 1 rejected or invalid input, 2 usage
//! error, 3 resource cap reached.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qshift::calculus::{check, check_qfs, hypothesis_kinds, Proof, System};
use qshift::cd5::{crosscheck_parallel_with_budget, eval, valid_bounded_with_budget, Cd5Error, DEFAULT_CD5_BUDGET};
use qshift::corpus::{verify_dir, CorpusError};
use qshift::gen::{random_formula, random_model, seeded, Signature};
use qshift::kripke::{
    axiom_valid_on_frame_with_budget, check_incompleteness_witness, classify_frame, forces, frame_properties,
    KripkeError, Model, DEFAULT_MODEL_BUDGET,
};
use qshift::parser::{
    parse_formula_file, parse_interpretation, parse_model, parse_proof, parse_sequent_file, print_formula,
    print_interpretation, print_model, print_proof, print_sequent,
};
use qshift::shift::ShiftKind;
use qshift::skolem::{skolemize, skolemize_sequent, SkolemMode};
use qshift::transform::{correct_ljpp, deskolemize_traced, prenexify_traced, CorrectionError};
use qshift::Formula;

#[derive(Parser, Debug)]
#[command(name = "qshift", version, about = "Skolemization, LJ++ proofs and quantifier shifts")]
struct Cli {
    /// Print a JSON report on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for commands that generate random objects.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Refuse Kripke models with more worlds than this.
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
    max_worlds: u64,
    /// Refuse domains (Kripke or CD5) larger than this.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    max_domain: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Structural,
    Andrews,
    Parallel,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SystemArg {
    Lk,
    Lj,
    Lkpp,
    Ljpp,
    Qfs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKind {
    Formula,
    Model,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a file (.fml, .seq, .prf, .krp, .cd5) and print it back.
    Parse { file: PathBuf },
    /// Skolemize each formula of a .fml file, or the sequent of a .seq file.
    Skolemize {
        #[arg(long, value_enum, default_value = "structural")]
        mode: Mode,
        /// Branching degree for parallel Skolemization.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        file: PathBuf,
    },
    /// Check a proof in LK, LJ, LK++, LJ++ or QFS.
    Check {
        #[arg(long, value_enum, default_value = "ljpp")]
        system: SystemArg,
        /// Shift hypotheses for `--system qfs`; defaults to the proof file's
        /// `# hypothesis:` lines.
        #[arg(long)]
        hypotheses: Option<PathBuf>,
        file: PathBuf,
    },
    /// DeSkolemize a cut-free proof of a Skolemized sequent.
    Deskolemize {
        #[arg(long)]
        target: PathBuf,
        file: PathBuf,
    },
    /// Turn an LJ++ proof into an LJ proof from shift hypotheses.
    Correct { file: PathBuf },
    /// Prenex normal forms, with the shifts each one needs.
    Prenex { file: PathBuf },
    /// Evaluate formulas at a world of a Kripke model.
    ModelCheck {
        #[arg(long)]
        world: String,
        model: PathBuf,
        formulas: PathBuf,
    },
    /// Frame properties and class membership of a model's frame.
    FrameClassify {
        /// Also decide CD, ED and SW by enumerating valuations.
        #[arg(long)]
        verify: bool,
        model: PathBuf,
    },
    /// Check the three-world frame-incompleteness witness.
    WitnessIncompleteness {
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// The five-valued lattice logic CD5.
    Cd5 {
        #[command(subcommand)]
        command: Cd5Command,
    },
    /// Fixture corpus.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
    /// Print seeded random formulas or models.
    Generate {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Cd5Command {
    /// Evaluate formulas in an interpretation.
    Eval { interpretation: PathBuf, formulas: PathBuf },
    /// Bounded validity by exhaustive enumeration.
    Valid {
        #[arg(long, default_value_t = 2)]
        bound: u64,
        formulas: PathBuf,
    },
    /// Compare bounded validity of each formula and its parallel Skolem form.
    Crosscheck {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        #[arg(long, default_value_t = 2)]
        bound: u64,
        formulas: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusCommand {
    /// Run every fixture against its expected outcome.
    Verify {
        #[arg(default_value = "corpus")]
        dir: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Invalid(String),
    Resource(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Resource(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Invalid(m) | Failure::Resource(m) => m,
        }
    }
}

impl From<KripkeError> for Failure {
    fn from(e: KripkeError) -> Self {
        match e {
            KripkeError::Budget { .. } => Failure::Resource(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<Cd5Error> for Failure {
    fn from(e: Cd5Error) -> Self {
        match e {
            Cd5Error::Budget { .. } => Failure::Resource(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

/// A finished command: `accepted` selects exit code 0 or 1.
struct Done {
    accepted: bool,
    text: String,
    json: Value,
}

impl Done {
    fn ok(text: String, json: Value) -> Done {
        Done { accepted: true, text, json }
    }
}

struct Ctx {
    seed: u64,
    max_worlds: usize,
    max_domain: usize,
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn invalid(path: &Path) -> impl Fn(String) -> Failure + '_ {
    move |e| Failure::Invalid(format!("{}: {e}", path.display()))
}

fn formulas(path: &Path) -> Result<Vec<Formula>, Failure> {
    parse_formula_file(&read(path)?).map_err(|e| invalid(path)(e.to_string()))
}

fn proof(path: &Path) -> Result<(Proof, String), Failure> {
    let src = read(path)?;
    let p = parse_proof(&src).map_err(|e| invalid(path)(e.to_string()))?;
    Ok((p, src))
}

fn model(path: &Path, ctx: &Ctx) -> Result<Model, Failure> {
    let m = parse_model(&read(path)?).map_err(|e| invalid(path)(e.to_string()))?;
    if m.frame.len() > ctx.max_worlds {
        return Err(Failure::Resource(format!("{} worlds exceed --max-worlds {}", m.frame.len(), ctx.max_worlds)));
    }
    if m.frame.elements.len() > ctx.max_domain {
        return Err(Failure::Resource(format!(
            "{} domain elements exceed --max-domain {}",
            m.frame.elements.len(),
            ctx.max_domain
        )));
    }
    Ok(m)
}

fn bound(b: u64, ctx: &Ctx) -> Result<usize, Failure> {
    let b = b as usize;
    if b == 0 {
        return Err(Failure::Usage("--bound must be at least 1".into()));
    }
    if b > ctx.max_domain {
        return Err(Failure::Resource(format!("--bound {b} exceeds --max-domain {}", ctx.max_domain)));
    }
    Ok(b)
}

fn hypotheses_from_header(src: &str) -> Result<Vec<Formula>, Failure> {
    let lines: Vec<&str> = src
        .lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .filter_map(|l| l.trim().strip_prefix("hypothesis:"))
        .collect();
    parse_formula_file(&lines.join("\n")).map_err(|e| Failure::Invalid(format!("bad hypothesis: {e}")))
}

fn run(cmd: Command, ctx: &Ctx) -> Result<Done, Failure> {
    match cmd {
        Command::Parse { file } => {
            let src = read(&file)?;
            let inv = invalid(&file);
            let ext = file.extension().and_then(|e| e.to_str()).unwrap_or("");
            let (kind, text) = match ext {
                "fml" => {
                    let fs = parse_formula_file(&src).map_err(|e| inv(e.to_string()))?;
                    ("formulas", fs.iter().map(print_formula).collect::<Vec<_>>().join("\n") + "\n")
                }
                "seq" => ("sequent", print_sequent(&parse_sequent_file(&src).map_err(|e| inv(e.to_string()))?) + "\n"),
                "prf" => ("proof", print_proof(&parse_proof(&src).map_err(|e| inv(e.to_string()))?)),
                "krp" => ("model", print_model(&parse_model(&src).map_err(|e| inv(e.to_string()))?)),
                "cd5" => ("interpretation", print_interpretation(&parse_interpretation(&src).map_err(|e| inv(e.to_string()))?)),
                _ => return Err(Failure::Usage(format!("unknown file type `.{ext}`"))),
            };
            Ok(Done::ok(text.clone(), json!({ "kind": kind, "printed": text })))
        }
        Command::Skolemize { mode, degree, file } => {
            let mode = match mode {
                Mode::Structural => SkolemMode::Structural,
                Mode::Andrews => SkolemMode::Andrews,
                Mode::Parallel => SkolemMode::Parallel(degree as usize),
            };
            let skolem_err = |e: qshift::skolem::SkolemError| Failure::Invalid(e.to_string());
            if file.extension().is_some_and(|e| e == "seq") {
                let s = parse_sequent_file(&read(&file)?).map_err(|e| invalid(&file)(e.to_string()))?;
                let (sk, sig) = skolemize_sequent(&s, mode).map_err(skolem_err)?;
                let text = print_sequent(&sk);
                return Ok(Done::ok(format!("{text}\n"), json!({ "mode": mode.to_string(), "skolemized": [text], "symbols": sig })));
            }
            let mut out = Vec::new();
            let mut sigs = Vec::new();
            for f in formulas(&file)? {
                let (sk, sig) = skolemize(&f, mode).map_err(skolem_err)?;
                out.push(print_formula(&sk));
                sigs.push(sig);
            }
            let text = out.iter().map(|l| format!("{l}\n")).collect();
            Ok(Done::ok(text, json!({ "mode": mode.to_string(), "skolemized": out, "symbols": sigs })))
        }
        Command::Check { system, hypotheses, file } => {
            let (p, src) = proof(&file)?;
            let report = match system {
                SystemArg::Qfs => {
                    let hyps = match hypotheses {
                        Some(h) => formulas(&h)?,
                        None => hypotheses_from_header(&src)?,
                    };
                    let mut r = check_qfs(&p, &hyps);
                    let kinds: Vec<String> =
                        hypothesis_kinds(&hyps).into_iter().map(|k| k.map_or("none".into(), |k| k.name().to_string())).collect();
                    r.system = format!("qfs [{}]", kinds.join(", "));
                    r
                }
                other => {
                    let s = match other {
                        SystemArg::Lk => System::LK,
                        SystemArg::Lj => System::LJ,
                        SystemArg::Lkpp => System::LKpp,
                        _ => System::LJpp,
                    };
                    check(&p, s)
                }
            };
            let mut text = format!("{}: {}\n", report.system, if report.accepted() { "accepted" } else { "rejected" });
            for v in &report.violations {
                text.push_str(&format!("  {} at {}: {}\n", v.condition, v.node, v.message));
            }
            Ok(Done { accepted: report.accepted(), text, json: serde_json::to_value(&report).unwrap() })
        }
        Command::Deskolemize { target, file } => {
            let (p, _) = proof(&file)?;
            let t = parse_sequent_file(&read(&target)?).map_err(|e| invalid(&target)(e.to_string()))?;
            let trace = deskolemize_traced(&p, &t).map_err(|e| Failure::Invalid(e.to_string()))?;
            let printed = print_proof(&trace.proof);
            let vars: Vec<Value> = trace.variables.iter().map(|(t, v)| json!({ "term": t, "variable": v })).collect();
            Ok(Done::ok(printed.clone(), json!({ "proof": printed, "variables": vars, "insertions": trace.insertions })))
        }
        Command::Correct { file } => {
            let (p, _) = proof(&file)?;
            let r = match correct_ljpp(&p) {
                Ok(r) => r,
                Err(CorrectionError::NotLjpp(report)) => {
                    let text = format!("not an LJ++ proof: {}\n", CorrectionError::NotLjpp(report.clone()));
                    return Ok(Done { accepted: false, text, json: json!({ "ljpp": *report }) });
                }
                Err(e) => return Err(Failure::Invalid(e.to_string())),
            };
            let printed = print_proof(&r.proof);
            let hyps: Vec<String> = r.closed_hypotheses.iter().map(print_formula).collect();
            let mut text = printed.clone();
            for h in &hyps {
                text.push_str(&format!("# hypothesis: {h}\n"));
            }
            Ok(Done::ok(
                text,
                json!({
                    "proof": printed,
                    "end_sequent": print_sequent(&r.proof.conclusion),
                    "hypotheses": hyps,
                    "alpha": r.alpha_hypotheses.iter().map(print_formula).collect::<Vec<_>>(),
                    "beta": r.beta_hypotheses.iter().map(print_formula).collect::<Vec<_>>(),
                }),
            ))
        }
        Command::Prenex { file } => {
            let mut text = String::new();
            let mut items = Vec::new();
            for f in formulas(&file)? {
                let r = prenexify_traced(&f);
                let shifts: Vec<&str> = r.shifts_used.iter().map(|k| k.name()).collect();
                text.push_str(&format!("{}\n", print_formula(&r.formula)));
                for s in &r.steps {
                    let law = s.shift.map_or("IQC", ShiftKind::name);
                    text.push_str(&format!("  {law}: {}  ~>  {}\n", print_formula(&s.before), print_formula(&s.after)));
                }
                items.push(json!({
                    "input": print_formula(&f),
                    "prenex": print_formula(&r.formula),
                    "shifts_used": shifts,
                    "steps": r.steps.iter().map(|s| json!({
                        "shift": s.shift.map_or("IQC", ShiftKind::name),
                        "before": print_formula(&s.before),
                        "after": print_formula(&s.after),
                    })).collect::<Vec<_>>(),
                }));
            }
            Ok(Done::ok(text, json!({ "formulas": items })))
        }
        Command::ModelCheck { world, model: mpath, formulas: fpath } => {
            let m = model(&mpath, ctx)?;
            let w = m.frame.world(&world).ok_or_else(|| Failure::Usage(format!("no world `{world}` in {}", mpath.display())))?;
            let mut text = String::new();
            let mut items = Vec::new();
            let mut all = true;
            for f in formulas(&fpath)? {
                let v = forces(&m, w, &f)?;
                all &= v;
                text.push_str(&format!("{world} {} {}\n", if v { "forces" } else { "does not force" }, print_formula(&f)));
                items.push(json!({ "formula": print_formula(&f), "forced": v }));
            }
            Ok(Done { accepted: all, text, json: json!({ "world": world, "results": items }) })
        }
        Command::FrameClassify { verify, model: mpath } => {
            let m = model(&mpath, ctx)?;
            let report = frame_properties(&m.frame);
            let class = classify_frame(&m.frame);
            let mut text = format!(
                "constant domain: {}\nlinear: {}\nFDS: {}\nWF: {}\ncWF: {}\nclassification: {}\n",
                report.constant_domain,
                report.linear,
                report.fds,
                report.wf,
                report.cwf,
                serde_json::to_value(class).unwrap().as_str().unwrap_or("?")
            );
            let mut json = json!({ "report": report });
            let mut agree = true;
            if verify {
                let mut checks = Vec::new();
                for kind in ShiftKind::ALL {
                    let v = axiom_valid_on_frame_with_budget(&m.frame, kind, DEFAULT_MODEL_BUDGET)?;
                    text.push_str(&format!("{}: {}\n", kind.name(), if v.valid { "valid" } else { "not valid" }));
                    checks.push(json!({ "kind": kind.name(), "valid": v.valid, "failing_world": v.failing_world }));
                }
                let valid = |k: usize| checks[k]["valid"].as_bool().unwrap();
                let all_valid = (0..3).all(valid);
                agree = all_valid == (class == qshift::kripke::Classification::InF);
                json["brute_force"] = Value::Array(checks);
                json["agree"] = Value::Bool(agree);
            }
            Ok(Done { accepted: agree, text, json })
        }
        Command::WitnessIncompleteness { depth } => {
            let r = check_incompleteness_witness(depth);
            let text = format!(
                "Lin | OEP refuted at w1: {}\natomic shift instances failing: {} of {}\nclaim at depth {}: {} ({} classes)\n",
                r.lin_oep_refuted_at_w1,
                r.failing_instances.len(),
                r.atomic_instances_checked,
                depth,
                if r.claim.holds() { "holds" } else { "fails" },
                r.claim.classes
            );
            Ok(Done { accepted: r.passed(), text, json: serde_json::to_value(&r).unwrap() })
        }
        Command::Cd5 { command } => cd5(command, ctx),
        Command::Corpus { command: CorpusCommand::Verify { dir } } => {
            let report = verify_dir(&dir).map_err(|e| match e {
                CorpusError::Empty(_) | CorpusError::Io { .. } => Failure::Usage(e.to_string()),
            })?;
            let mut text = String::new();
            for f in &report.fixtures {
                text.push_str(&format!("{} {}\n", if f.passed() { "ok  " } else { "FAIL" }, f.file));
            }
            for (file, directive, detail) in report.failures() {
                text.push_str(&format!("mismatch in {file}: `{directive}`: {detail}\n"));
            }
            Ok(Done { accepted: report.passed(), text, json: serde_json::to_value(&report).unwrap() })
        }
        Command::Generate { kind, count, depth } => {
            let mut rng = seeded(ctx.seed);
            let mut items = Vec::new();
            match kind {
                GenKind::Formula => {
                    let sig = Signature::default();
                    for _ in 0..count {
                        items.push(print_formula(&random_formula(&mut rng, &sig, depth)));
                    }
                }
                GenKind::Model => {
                    let sig = Signature::relational();
                    for _ in 0..count {
                        items.push(print_model(&random_model(&mut rng, &sig, ctx.max_worlds.min(6), ctx.max_domain)?));
                    }
                }
            }
            let text = match kind {
                GenKind::Formula => items.iter().map(|i| format!("{i}\n")).collect(),
                GenKind::Model => items.join("\n"),
            };
            Ok(Done::ok(text, json!({ "seed": ctx.seed, "items": items })))
        }
    }
}

fn cd5(cmd: Cd5Command, ctx: &Ctx) -> Result<Done, Failure> {
    match cmd {
        Cd5Command::Eval { interpretation, formulas: fpath } => {
            let i = parse_interpretation(&read(&interpretation)?).map_err(|e| invalid(&interpretation)(e.to_string()))?;
            if i.domain.len() > ctx.max_domain {
                return Err(Failure::Resource(format!("domain size {} exceeds --max-domain {}", i.domain.len(), ctx.max_domain)));
            }
            let mut text = String::new();
            let mut items = Vec::new();
            for f in formulas(&fpath)? {
                let v = eval(&i, &f)?;
                text.push_str(&format!("{} = {v}\n", print_formula(&f)));
                items.push(json!({ "formula": print_formula(&f), "value": v, "designated": v.is_designated() }));
            }
            Ok(Done::ok(text, json!({ "results": items })))
        }
        Cd5Command::Valid { bound: b, formulas: fpath } => {
            let b = bound(b, ctx)?;
            let mut text = String::new();
            let mut items = Vec::new();
            let mut all = true;
            for f in formulas(&fpath)? {
                let v = valid_bounded_with_budget(&f, b, DEFAULT_CD5_BUDGET)?;
                all &= v.valid;
                text.push_str(&format!("{}: {} (domains up to {b})\n", print_formula(&f), if v.valid { "valid" } else { "not valid" }));
                if let Some(m) = &v.countermodel {
                    let value = v.countervalue.map(|x| x.to_string()).unwrap_or_default();
                    text.push_str(&format!("  countermodel, value {value}:\n"));
                    for line in print_interpretation(m).lines() {
                        text.push_str(&format!("    {line}\n"));
                    }
                }
                items.push(json!({ "formula": print_formula(&f), "verdict": v }));
            }
            Ok(Done { accepted: all, text, json: json!({ "bound": b, "results": items }) })
        }
        Cd5Command::Crosscheck { degree, bound: b, formulas: fpath } => {
            let b = bound(b, ctx)?;
            let mut text = String::new();
            let mut items = Vec::new();
            let mut all = true;
            for f in formulas(&fpath)? {
                let r = crosscheck_parallel_with_budget(&f, degree as usize, b, DEFAULT_CD5_BUDGET)?;
                all &= r.agree;
                text.push_str(&format!(
                    "{}: {} / parallel: {} -> {}\n",
                    r.formula,
                    if r.original.valid { "valid" } else { "not valid" },
                    if r.parallel.valid { "valid" } else { "not valid" },
                    if r.agree { "agree" } else { "DISAGREE" }
                ));
                items.push(serde_json::to_value(&r).unwrap());
            }
            Ok(Done { accepted: all, text, json: json!({ "degree": degree, "bound": b, "results": items }) })
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Parse { .. } => "parse",
        Command::Skolemize { .. } => "skolemize",
        Command::Check { .. } => "check",
        Command::Deskolemize { .. } => "deskolemize",
        Command::Correct { .. } => "correct",
        Command::Prenex { .. } => "prenex",
        Command::ModelCheck { .. } => "model-check",
        Command::FrameClassify { .. } => "frame-classify",
        Command::WitnessIncompleteness { .. } => "witness-incompleteness",
        Command::Cd5 { command: Cd5Command::Eval { .. } } => "cd5 eval",
        Command::Cd5 { command: Cd5Command::Valid { .. } } => "cd5 valid",
        Command::Cd5 { command: Cd5Command::Crosscheck { .. } } => "cd5 crosscheck",
        Command::Corpus { .. } => "corpus verify",
        Command::Generate { .. } => "generate",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            if std::env::args().any(|a| a == "--json") {
                let msg = e.kind().to_string();
                let report = json!({ "command": "qshift", "status": "usage-error", "exit_code": 2, "error": msg });
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            }
            return ExitCode::from(2);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let ctx = Ctx { seed: cli.seed, max_worlds: cli.max_worlds as usize, max_domain: cli.max_domain as usize };
    let name = command_name(&cli.command);
    let (code, report) = match run(cli.command, &ctx) {
        Ok(done) => {
            let code = if done.accepted { 0 } else { 1 };
            if !cli.json {
                print!("{}", done.text);
            }
            let status = if done.accepted { "ok" } else { "rejected" };
            (code, json!({ "command": name, "status": status, "exit_code": code, "result": done.json }))
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            let status = match f {
                Failure::Usage(_) => "usage-error",
                Failure::Invalid(_) => "invalid",
                Failure::Resource(_) => "resource-cap",
            };
            (f.code(), json!({ "command": name, "status": status, "exit_code": f.code(), "error": f.message() }))
        }
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    }
    ExitCode::from(code)
}
