//! Random program generation and law checking.
//!
//! [`run_laws`] samples every selected law on random instances; expected
//! non-laws are first evaluated on their stored witness. [`run_exhaustive`]
//! enumerates every instance over a two-atom alphabet instead. Refutations
//! are greedily shrunk by rule removal and always replay.

mod generate;
mod registry;

use std::collections::BTreeSet;

use serde::Serialize;

pub use generate::{generate_program, standard_alphabet, GeneratorConfig, ProgramGenerator, ATOM_NAMES};
pub use registry::{law, Expected, Instance, Kind, Law, LAWS};

use crate::error::{Error, Result};
use crate::program::{Alphabet, Atom, Interpretation, Program, Rule};
use crate::textio::{parse_str, serialize_program};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawVerdict {
    HoldsOnSample,
    Refuted,
}

/// One variable of a witness, as canonical program text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessSlot {
    pub variable: String,
    pub program: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawResult {
    pub law_id: String,
    pub statement: String,
    pub trials: usize,
    pub verdict: LawVerdict,
    pub expected: Expected,
    pub witness: Option<Vec<WitnessSlot>>,
    /// Set when the check itself failed on the witness.
    pub error: Option<String>,
}

impl LawResult {
    /// Laws must hold, non-laws must be refuted.
    pub fn passed(&self) -> bool {
        match self.expected {
            Expected::Law => self.verdict == LawVerdict::HoldsOnSample,
            Expected::NonLaw => self.verdict == LawVerdict::Refuted,
        }
    }

    pub fn report_line(&self) -> String {
        let verdict = match self.verdict {
            LawVerdict::HoldsOnSample => "holds",
            LawVerdict::Refuted => "refuted",
        };
        let expected = match self.expected {
            Expected::Law => "law",
            Expected::NonLaw => "non-law",
        };
        let status = if self.passed() { "ok" } else { "FAIL" };
        format!(
            "{status:<4} {:<32} {verdict:<8} expected {expected:<7} trials {}",
            self.law_id, self.trials
        )
    }
}

/// Laws selected by id; an empty suite selects every law.
pub fn select(suite: &[&str]) -> Result<Vec<&'static Law>> {
    if suite.is_empty() {
        return Ok(LAWS.iter().collect());
    }
    let wanted: BTreeSet<&str> = suite.iter().copied().collect();
    for id in &wanted {
        if law(id).is_none() {
            return Err(Error::UnknownLaw(id.to_string()));
        }
    }
    Ok(LAWS.iter().filter(|l| wanted.contains(l.id)).collect())
}

fn refutes(law: &Law, instance: &Instance) -> Option<Option<String>> {
    match (law.check)(instance) {
        Ok(true) => None,
        Ok(false) => Some(None),
        Err(e) => Some(Some(e.to_string())),
    }
}

fn witness_slots(instance: &Instance) -> Vec<WitnessSlot> {
    instance
        .slots()
        .map(|(name, p)| WitnessSlot {
            variable: name.to_string(),
            program: serialize_program(p),
        })
        .collect()
}

/// Parses a witness given as source text per variable, over the union of
/// the alphabets involved.
pub fn parse_witness(slots: &[(&str, &str)]) -> Result<Instance> {
    let parsed: Vec<(String, Program)> = slots
        .iter()
        .map(|(name, text)| Ok((name.to_string(), parse_str(text)?)))
        .collect::<Result<_>>()?;
    let alphabet = parsed
        .iter()
        .fold(Alphabet::empty(), |acc, (_, p)| acc.union(p.alphabet()));
    let rehomed = parsed
        .into_iter()
        .map(|(name, p)| Ok((name, p.rehome(&alphabet)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Instance::new(rehomed))
}

/// Re-evaluates `law` on a witness; `Ok(true)` when it is still refuted.
pub fn replay(law: &Law, witness: &[WitnessSlot]) -> Result<bool> {
    let slots: Vec<(&str, &str)> = witness
        .iter()
        .map(|s| (s.variable.as_str(), s.program.as_str()))
        .collect();
    let instance = parse_witness(&slots)?;
    Ok(refutes(law, &instance).is_some())
}

/// Greedy rule removal keeping the instance a refutation.
fn shrink(law: &Law, mut instance: Instance) -> Instance {
    loop {
        let mut changed = false;
        for &(name, kind) in law.variables {
            if matches!(kind, Kind::Permutation | Kind::Rule) {
                continue;
            }
            let rules: Vec<Rule> = instance.get(name).iter().cloned().collect();
            for rule in rules {
                let current = instance.get(name).clone();
                let smaller = current.with_rules(current.iter().filter(|r| **r != rule).cloned());
                let mut candidate = instance.clone();
                candidate.set(name, smaller);
                if refutes(law, &candidate).is_some() {
                    instance = candidate;
                    changed = true;
                }
            }
        }
        if !changed {
            return instance;
        }
    }
}

fn law_stream_base(id: &str) -> u64 {
    // FNV-1a, stable across runs and platforms
    id.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

fn sample(kind: Kind, gen: &mut ProgramGenerator) -> Program {
    match kind {
        Kind::Program => gen.program(),
        Kind::Horn => gen.horn(),
        Kind::Negative => gen.negative(),
        Kind::KromHorn => gen.krom_horn(),
        Kind::Interpretation => gen.interpretation().to_program(),
        Kind::Permutation => gen.permutation(),
        Kind::Rule => gen.single_rule(),
    }
}

fn refuted(law: &Law, trials: usize, instance: Instance, error: Option<String>) -> LawResult {
    let instance = if error.is_none() { shrink(law, instance) } else { instance };
    LawResult {
        law_id: law.id.to_string(),
        statement: law.statement.to_string(),
        trials,
        verdict: LawVerdict::Refuted,
        expected: law.expected,
        witness: Some(witness_slots(&instance)),
        error,
    }
}

fn holds(law: &Law, trials: usize) -> LawResult {
    LawResult {
        law_id: law.id.to_string(),
        statement: law.statement.to_string(),
        trials,
        verdict: LawVerdict::HoldsOnSample,
        expected: law.expected,
        witness: None,
        error: None,
    }
}

/// Evaluates one law on `trials` random instances. Trial `t` draws from
/// stream `t` of a generator seeded by `cfg.seed` and the law id, so
/// results do not depend on which other laws run.
pub fn run_law(law: &Law, cfg: &GeneratorConfig, trials: usize) -> Result<LawResult> {
    let alphabet = cfg.alphabet()?;
    if law.expected == Expected::NonLaw {
        let instance = parse_witness(law.witness)?;
        if let Some(error) = refutes(law, &instance) {
            let mut result = refuted(law, 1, instance, error);
            // stored witnesses are reported verbatim
            result.witness = Some(witness_slots(&parse_witness(law.witness)?));
            return Ok(result);
        }
    }
    let seeded = GeneratorConfig {
        seed: cfg.seed ^ law_stream_base(law.id),
        ..cfg.clone()
    };
    for t in 0..trials {
        let mut gen = ProgramGenerator::with_stream(alphabet.clone(), &seeded, t as u64);
        let instance = Instance::new(
            law.variables
                .iter()
                .map(|&(name, kind)| (name.to_string(), sample(kind, &mut gen))),
        );
        if let Some(error) = refutes(law, &instance) {
            return Ok(refuted(law, t + 1, instance, error));
        }
    }
    Ok(holds(law, trials))
}

/// Runs the selected laws (all when `suite` is empty) in registry order.
pub fn run_laws(suite: &[&str], cfg: &GeneratorConfig, trials: usize) -> Result<Vec<LawResult>> {
    cfg.validate()?;
    select(suite)?
        .into_iter()
        .map(|law| run_law(law, cfg, trials))
        .collect()
}

/// Bounds of the exhaustive mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExhaustiveBounds {
    pub atoms: usize,
    pub max_rules: usize,
    pub max_body: usize,
    /// Instance budget per law, divided by the law's cost. Program
    /// variables are narrowed to single-rule programs, last variable first,
    /// until the product of the domain sizes fits.
    pub max_instances: usize,
}

impl Default for ExhaustiveBounds {
    fn default() -> Self {
        ExhaustiveBounds {
            atoms: 2,
            max_rules: 2,
            max_body: 2,
            max_instances: 1 << 20,
        }
    }
}

fn all_rules(alphabet: &Alphabet, max_body: usize) -> Vec<Rule> {
    let atoms: Vec<Atom> = alphabet.atoms().collect();
    let n = atoms.len();
    let mut rules = Vec::new();
    for &head in &atoms {
        for pos_mask in 0u32..(1 << n) {
            for neg_mask in 0u32..(1 << n) {
                if (pos_mask.count_ones() + neg_mask.count_ones()) as usize > max_body {
                    continue;
                }
                let pick = |mask: u32| atoms.iter().enumerate().filter(move |(k, _)| mask >> k & 1 == 1).map(|(_, &a)| a);
                rules.push(Rule::new(head, pick(pos_mask), pick(neg_mask)));
            }
        }
    }
    rules.sort();
    rules
}

fn programs_up_to(alphabet: &Alphabet, rules: &[Rule], max_rules: usize) -> Vec<Program> {
    let mut out = vec![Program::empty(alphabet.clone())];
    let mut frontier: Vec<(usize, Vec<Rule>)> = vec![(0, Vec::new())];
    for _ in 0..max_rules {
        let mut next = Vec::new();
        for (start, chosen) in &frontier {
            for (k, rule) in rules.iter().enumerate().skip(*start) {
                let mut more = chosen.clone();
                more.push(rule.clone());
                out.push(Program::new(alphabet.clone(), more.iter().cloned()).expect("rules over the alphabet"));
                next.push((k + 1, more));
            }
        }
        frontier = next;
    }
    out
}

/// Every value of `kind` within the bounds.
pub fn domain(kind: Kind, alphabet: &Alphabet, max_rules: usize, max_body: usize) -> Vec<Program> {
    match kind {
        Kind::Interpretation => Interpretation::all(alphabet).iter().map(Interpretation::to_program).collect(),
        Kind::Permutation => {
            let atoms: Vec<Atom> = alphabet.atoms().collect();
            permutations(&atoms)
                .into_iter()
                .map(|image| generate::permutation_from_images(alphabet, &image))
                .collect()
        }
        Kind::Rule => all_rules(alphabet, max_body)
            .into_iter()
            .map(|r| Program::new(alphabet.clone(), [r]).expect("rule over the alphabet"))
            .collect(),
        _ => {
            let rules: Vec<Rule> = all_rules(alphabet, max_body)
                .into_iter()
                .filter(|r| kind.admits(&Program::new(alphabet.clone(), [r.clone()]).expect("rule over the alphabet")))
                .collect();
            programs_up_to(alphabet, &rules, max_rules)
        }
    }
}

fn permutations(atoms: &[Atom]) -> Vec<Vec<Atom>> {
    if atoms.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 0..atoms.len() {
        let mut rest = atoms.to_vec();
        let first = rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Domains of the law variables, narrowed to fit `bounds.max_instances`.
pub fn exhaustive_domains(law: &Law, bounds: &ExhaustiveBounds) -> Result<Vec<Vec<Program>>> {
    let alphabet = standard_alphabet(bounds.atoms)?;
    let mut domains: Vec<Vec<Program>> = law
        .variables
        .iter()
        .map(|&(_, kind)| domain(kind, &alphabet, bounds.max_rules, bounds.max_body))
        .collect();
    let size = |d: &[Vec<Program>]| d.iter().fold(1usize, |acc, v| acc.saturating_mul(v.len()));
    for k in (0..domains.len()).rev() {
        if size(&domains) <= bounds.max_instances / law.cost.max(1) {
            break;
        }
        let kind = law.variables[k].1;
        if !matches!(kind, Kind::Interpretation | Kind::Permutation | Kind::Rule) {
            domains[k] = domain(kind, &alphabet, bounds.max_rules.min(1), bounds.max_body);
        }
    }
    Ok(domains)
}

/// Evaluates one law on every instance of its exhaustive domains.
pub fn run_law_exhaustive(law: &Law, bounds: &ExhaustiveBounds) -> Result<LawResult> {
    let domains = exhaustive_domains(law, bounds)?;
    if domains.iter().any(Vec::is_empty) {
        return Ok(holds(law, 0));
    }
    let mut index = vec![0usize; domains.len()];
    let mut count = 0;
    loop {
        count += 1;
        let instance = Instance::new(
            law.variables
                .iter()
                .zip(&index)
                .zip(&domains)
                .map(|((&(name, _), &k), d)| (name.to_string(), d[k].clone())),
        );
        if let Some(error) = refutes(law, &instance) {
            return Ok(refuted(law, count, instance, error));
        }
        // odometer, last variable fastest
        let mut pos = domains.len();
        loop {
            if pos == 0 {
                return Ok(holds(law, count));
            }
            pos -= 1;
            index[pos] += 1;
            if index[pos] < domains[pos].len() {
                break;
            }
            index[pos] = 0;
        }
    }
}

/// Exhaustive mode over the expected laws of the suite.
pub fn run_exhaustive(suite: &[&str], bounds: &ExhaustiveBounds) -> Result<Vec<LawResult>> {
    select(suite)?
        .into_iter()
        .filter(|l| l.expected == Expected::Law)
        .map(|law| run_law_exhaustive(law, bounds))
        .collect()
}

/// Line-oriented report, one line per law followed by a summary.
pub fn text_report(results: &[LawResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&r.report_line());
        out.push('\n');
        if !r.passed() {
            if let Some(error) = &r.error {
                out.push_str(&format!("     error: {error}\n"));
            }
            for slot in r.witness.iter().flatten() {
                let body = slot.program.trim_end().replace('\n', " ");
                out.push_str(&format!("     {} = {body}\n", slot.variable));
            }
        }
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!("{} laws, {} failed\n", results.len(), failed));
    out
}
