use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use aspalg::compose::{
    compose, cup, kleene_star, negate_program, omega, ominus, oplus, or_transform, rename, serialize_ext_program,
    serialize_or_program, tf_transform,
};
use aspalg::lawcheck::{self, ExhaustiveBounds, GeneratorConfig, LawResult};
use aspalg::semantics::{
    self, answer_sets_with, gl_reduct, least_model, left_reduct, right_reduct, tp_direct, Limits, Verdict,
    VerdictRecord, Witness, DEFAULT_MAX_ATOMS,
};
use aspalg::textio::{
    interpretation_names, literal_names, parse_cycle_names, parse_interpretation, parse_literals, parse_permutation,
    serialize_interpretation,
};
use aspalg::{parse_program, serialize_program, Alphabet, Error, Interpretation, Program, SourceProgram};

/// Sequential composition algebra of propositional answer set programs.
#[derive(Debug, Parser)]
#[command(name = "aspalg", version)]
struct Cli {
    /// Atoms added to the alphabet inferred from the inputs, e.g. `a,b,c`.
    #[arg(long, global = true, value_delimiter = ',')]
    alphabet: Vec<String>,

    /// Refuse to enumerate interpretations over larger alphabets.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ATOMS)]
    max_atoms: usize,

    /// Print machine-readable JSON instead of program text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sequential composition P ∘ R.
    Compose { p: PathBuf, r: PathBuf },
    /// Cup P ⊔ R.
    Cup { p: PathBuf, r: PathBuf },
    /// Negation `not P`.
    Not { p: PathBuf },
    /// The tf-normal form of P, or its ∨-form with `--or`.
    Tf {
        p: PathBuf,
        #[arg(long)]
        or: bool,
    },
    /// Dual of a Horn program.
    Dual { h: PathBuf },
    /// A reduct of P with respect to an interpretation.
    Reduct {
        #[arg(long, value_enum)]
        kind: ReductKind,
        /// Interpretation as a comma-separated atom list.
        #[arg(short, long, allow_hyphen_values = true)]
        interpretation: String,
        p: PathBuf,
    },
    /// Immediate consequences T_P(I).
    Tp {
        #[arg(short, long, allow_hyphen_values = true)]
        interpretation: String,
        p: PathBuf,
    },
    /// Least model of a Horn program.
    Lm { h: PathBuf },
    /// Kleene star P*.
    Star { p: PathBuf },
    /// P^ω, the facts of P+ ∘ ∅.
    Omega { p: PathBuf },
    /// All answer sets, one per line.
    AnswerSets { p: PathBuf },
    /// Decide an equivalence between two programs.
    Equiv {
        #[arg(long, value_enum, default_value_t = EquivMode::As)]
        mode: EquivMode,
        p: PathBuf,
        r: PathBuf,
    },
    /// Check the registered algebraic laws.
    Laws {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        atoms: usize,
        #[arg(long, default_value_t = 5)]
        max_rules: usize,
        #[arg(long, default_value_t = 3)]
        max_body: usize,
        #[arg(long, default_value_t = 0.3)]
        negative_probability: f64,
        /// Restrict to these law ids (repeatable).
        #[arg(long = "law")]
        laws: Vec<String>,
        /// Also run every law over all small programs on two atoms.
        #[arg(long)]
        exhaustive: bool,
        /// Write each refutation as one `.lp` file per law variable.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
        /// List the registered laws and exit.
        #[arg(long)]
        list: bool,
    },
    /// Body-removal program I⊖.
    Ominus {
        #[arg(short, long, allow_hyphen_values = true)]
        interpretation: String,
    },
    /// Body-addition program B⊕.
    Oplus {
        /// Literals as a comma-separated list, e.g. `b, not c`.
        #[arg(short, long, allow_hyphen_values = true)]
        literals: String,
    },
    /// Rename the atoms of P by a permutation in cycle notation.
    Rename {
        #[arg(long)]
        perm: String,
        p: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReductKind {
    Gl,
    Left,
    Right,
    Flp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EquivMode {
    As,
    Subsumption,
    Uniform,
    Strong,
}

/// Outcome of a command that decides a question.
enum Status {
    Ok,
    No,
}

fn read_source(path: &Path) -> Result<SourceProgram> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).context("reading standard input")?;
        return Ok(SourceProgram::new(text, "<stdin>"));
    }
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(SourceProgram::new(text, path.display().to_string()))
}

struct Session {
    extra: Alphabet,
    limits: Limits,
    json: bool,
}

impl Session {
    /// Parses the inputs and re-homes them to one joint alphabet.
    fn load(&self, paths: &[&Path]) -> Result<(Alphabet, Vec<Program>)> {
        let programs = paths
            .iter()
            .map(|path| Ok(parse_program(&read_source(path)?)?))
            .collect::<Result<Vec<_>>>()?;
        let joint = programs.iter().fold(self.extra.clone(), |acc, p| acc.union(p.alphabet()));
        let declared: Vec<&Alphabet> = programs.iter().map(Program::alphabet).collect();
        if declared.windows(2).any(|w| w[0] != w[1]) {
            eprintln!("notice: input alphabets differ; using {{{}}}", joint.names().join(", "));
        }
        let programs = programs
            .into_iter()
            .map(|p| Ok(p.rehome(&joint)?))
            .collect::<Result<Vec<_>>>()?;
        Ok((joint, programs))
    }

    fn one(&self, path: &Path) -> Result<Program> {
        Ok(self.load(&[path])?.1.remove(0))
    }

    fn two(&self, p: &Path, r: &Path) -> Result<(Program, Program)> {
        let mut programs = self.load(&[p, r])?.1;
        let r = programs.pop().expect("two programs");
        let p = programs.pop().expect("two programs");
        Ok((p, r))
    }

    fn print_program(&self, p: &Program) {
        if self.json {
            println!("{}", program_json(p));
        } else {
            print!("{}", serialize_program(p));
        }
    }

    fn print_interpretation(&self, i: &Interpretation) {
        if self.json {
            println!("{}", json!({ "atoms": atom_names(i) }));
        } else {
            println!("{}", serialize_interpretation(i));
        }
    }
}

fn atom_names(i: &Interpretation) -> Vec<&str> {
    i.atoms().iter().map(|&a| i.alphabet().name(a)).collect()
}

fn program_json(p: &Program) -> Value {
    let rules: Vec<String> = serialize_program(p)
        .lines()
        .filter(|l| !l.starts_with("#alphabet"))
        .map(str::to_string)
        .collect();
    json!({ "alphabet": p.alphabet().names(), "rules": rules })
}

fn alphabet_of(names: &[String]) -> Result<Alphabet> {
    Ok(Alphabet::new(names.iter().map(|n| n.trim()).filter(|n| !n.is_empty()))?)
}

fn witness_lines(witness: &Witness) -> Vec<String> {
    let side = |left: bool| if left { "left" } else { "right" };
    match witness {
        Witness::AnswerSet { answer_set, of_left } => vec![format!(
            "answer set {{{answer_set}}} of the {} program only",
            side(*of_left)
        )],
        Witness::Consequences { input, left, right } => {
            vec![format!("T_P({{{input}}}) = {{{left}}} but T_R({{{input}}}) = {{{right}}}")]
        }
        Witness::Context {
            context,
            answer_set,
            of_left,
        } => vec![
            format!("context: {}", aspalg::textio::inline_program(context)),
            format!(
                "answer set {{{answer_set}}} of the {} program plus context only",
                side(*of_left)
            ),
        ],
    }
}

fn equiv(session: &Session, mode: EquivMode, p: &Path, r: &Path) -> Result<Status> {
    let (p, r) = session.two(p, r)?;
    let limits = &session.limits;
    let (name, verdict): (&str, Verdict) = match mode {
        EquivMode::As => ("equivalent", semantics::equivalent(&p, &r, limits)?),
        EquivMode::Subsumption => ("subsumption equivalent", semantics::subsumption_equivalent(&p, &r, limits)?),
        EquivMode::Uniform => ("uniformly equivalent", semantics::uniformly_equivalent(&p, &r, limits)?),
        EquivMode::Strong => ("strongly equivalent", semantics::strongly_equivalent(&p, &r, limits)?),
    };
    if session.json {
        let record = VerdictRecord::from(&verdict);
        println!("{}", json!({ "relation": name, "verdict": record }));
    } else if verdict.equivalent {
        println!("{name}");
    } else {
        println!("not {name}");
        for line in verdict.witness.iter().flat_map(witness_lines) {
            println!("{line}");
        }
    }
    Ok(if verdict.equivalent { Status::Ok } else { Status::No })
}

fn write_witnesses(dir: &Path, result: &LawResult) -> Result<Vec<String>> {
    let mut paths = Vec::new();
    for slot in result.witness.iter().flatten() {
        let path = dir.join(format!("{}.{}.lp", result.law_id, slot.variable));
        fs::write(&path, &slot.program).with_context(|| format!("writing {}", path.display()))?;
        paths.push(path.display().to_string());
    }
    Ok(paths)
}

#[allow(clippy::too_many_arguments)]
fn laws(
    session: &Session,
    cfg: GeneratorConfig,
    trials: usize,
    ids: &[String],
    exhaustive: bool,
    witness_dir: Option<&Path>,
    list: bool,
) -> Result<Status> {
    let suite: Vec<&str> = ids.iter().map(String::as_str).collect();
    let selected = lawcheck::select(&suite)?;
    if list {
        for law in selected {
            let tag = match law.expected {
                lawcheck::Expected::Law => "law",
                lawcheck::Expected::NonLaw => "non-law",
            };
            println!("{:<32} {tag:<7} {}", law.id, law.statement);
        }
        return Ok(Status::Ok);
    }
    let mut results = lawcheck::run_laws(&suite, &cfg, trials)?;
    if exhaustive {
        results.extend(lawcheck::run_exhaustive(&suite, &ExhaustiveBounds::default())?);
    }
    let mut files = Vec::new();
    for result in &results {
        files.push(match witness_dir {
            Some(dir) if result.verdict == lawcheck::LawVerdict::Refuted => {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                write_witnesses(dir, result)?
            }
            _ => Vec::new(),
        });
    }
    if session.json {
        let records: Vec<Value> = results
            .iter()
            .zip(&files)
            .map(|(r, f)| {
                let mut v = serde_json::to_value(r).expect("serializable result");
                v["passed"] = json!(r.passed());
                v["witness_files"] = json!(f);
                v
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&records)?);
    } else {
        print!("{}", lawcheck::text_report(&results));
    }
    Ok(if results.iter().all(LawResult::passed) {
        Status::Ok
    } else {
        Status::No
    })
}

fn run(cli: Cli) -> Result<Status> {
    let session = Session {
        extra: alphabet_of(&cli.alphabet)?,
        limits: Limits {
            max_atoms: cli.max_atoms,
            ..Limits::default()
        },
        json: cli.json,
    };
    match cli.command {
        Command::Compose { p, r } => {
            let (p, r) = session.two(&p, &r)?;
            session.print_program(&compose(&p, &r)?);
        }
        Command::Cup { p, r } => {
            let (p, r) = session.two(&p, &r)?;
            session.print_program(&cup(&p, &r)?);
        }
        Command::Not { p } => session.print_program(&negate_program(&session.one(&p)?)),
        Command::Tf { p, or } => {
            let tf = tf_transform(&session.one(&p)?);
            let text = if or {
                serialize_or_program(&or_transform(&tf))
            } else {
                serialize_ext_program(&tf)
            };
            if session.json {
                println!("{}", json!({ "rules": text.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>() }));
            } else {
                print!("{text}");
            }
        }
        Command::Dual { h } => session.print_program(&session.one(&h)?.dual_of()?),
        Command::Reduct {
            kind,
            interpretation,
            p,
        } => {
            let p = session.one(&p)?;
            let i = parse_interpretation(&interpretation, p.alphabet())?;
            let reduct = match kind {
                ReductKind::Gl => gl_reduct(&p, &i)?,
                ReductKind::Left => left_reduct(&p, &i)?,
                ReductKind::Right | ReductKind::Flp => right_reduct(&p, &i)?,
            };
            session.print_program(&reduct);
        }
        Command::Tp { interpretation, p } => {
            let p = session.one(&p)?;
            let i = parse_interpretation(&interpretation, p.alphabet())?;
            session.print_interpretation(&tp_direct(&p, &i)?);
        }
        Command::Lm { h } => session.print_interpretation(&least_model(&session.one(&h)?)?),
        Command::Star { p } => session.print_program(&kleene_star(&session.one(&p)?)),
        Command::Omega { p } => session.print_interpretation(&omega(&session.one(&p)?)),
        Command::AnswerSets { p } => {
            let sets = answer_sets_with(&session.one(&p)?, &session.limits)?;
            if session.json {
                let sets: Vec<Vec<&str>> = sets.iter().map(atom_names).collect();
                println!("{}", json!({ "answer_sets": sets }));
            } else {
                for i in &sets {
                    println!("{}", serialize_interpretation(i));
                }
            }
        }
        Command::Equiv { mode, p, r } => return equiv(&session, mode, &p, &r),
        Command::Laws {
            seed,
            trials,
            atoms,
            max_rules,
            max_body,
            negative_probability,
            laws: ids,
            exhaustive,
            witness_dir,
            list,
        } => {
            let cfg = GeneratorConfig {
                alphabet_size: atoms,
                max_rules,
                max_body,
                negative_literal_probability: negative_probability,
                seed,
            };
            return laws(&session, cfg, trials, &ids, exhaustive, witness_dir.as_deref(), list);
        }
        Command::Ominus { interpretation } => {
            let alphabet = session.extra.union(&alphabet_of(&interpretation_names(&interpretation)?)?);
            let i = parse_interpretation(&interpretation, &alphabet)?;
            session.print_program(&ominus(&i));
        }
        Command::Oplus { literals } => {
            let names: Vec<String> = literal_names(&literals)?.into_iter().map(|(n, _)| n).collect();
            let alphabet = session.extra.union(&alphabet_of(&names)?);
            let body = parse_literals(&literals, &alphabet)?;
            session.print_program(&oplus(&body, &alphabet)?);
        }
        Command::Rename { perm, p } => {
            let cycle_atoms: Vec<String> = parse_cycle_names(&perm)?.into_iter().flatten().collect();
            let session = Session {
                extra: session.extra.union(&alphabet_of(&cycle_atoms)?),
                ..session
            };
            let p = session.one(&p)?;
            let pi = Program::permutation(p.alphabet(), &parse_permutation(&perm, p.alphabet())?)?;
            session.print_program(&rename(&pi, &p)?);
        }
    }
    Ok(Status::Ok)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::AlphabetTooLarge { .. }) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::No) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
