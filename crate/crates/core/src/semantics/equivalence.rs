//! Ordinary, subsumption, uniform and strong equivalence.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{
    add_facts, answer_sets_with, gl_reduct, is_answer_set, is_answer_set_algebraic, Limits,
};
use crate::compose::{compose, omega};
use crate::error::{Error, Result};
use crate::lawcheck::{GeneratorConfig, ProgramGenerator};
use crate::program::{Interpretation, Program, Rule};
use crate::semantics::entails_program;

/// Why two programs are not equivalent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// An answer set of exactly one of the programs.
    AnswerSet {
        answer_set: Interpretation,
        of_left: bool,
    },
    /// An interpretation on which the immediate consequences differ.
    Consequences {
        input: Interpretation,
        left: Interpretation,
        right: Interpretation,
    },
    /// A context program after whose addition `answer_set` is an answer
    /// set of exactly one side.
    Context {
        context: Program,
        answer_set: Interpretation,
        of_left: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub equivalent: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn holds() -> Self {
        Verdict {
            equivalent: true,
            witness: None,
        }
    }

    fn refuted(witness: Witness) -> Self {
        Verdict {
            equivalent: false,
            witness: Some(witness),
        }
    }
}

/// Flat, serializable view of a verdict.
#[derive(Debug, Clone, Serialize)]
pub struct VerdictRecord {
    pub equivalent: bool,
    pub witness_kind: Option<&'static str>,
    pub context: Option<String>,
    pub interpretation: Option<String>,
    pub of_left: Option<bool>,
}

impl From<&Verdict> for VerdictRecord {
    fn from(v: &Verdict) -> Self {
        let mut rec = VerdictRecord {
            equivalent: v.equivalent,
            witness_kind: None,
            context: None,
            interpretation: None,
            of_left: None,
        };
        match &v.witness {
            None => {}
            Some(Witness::AnswerSet { answer_set, of_left }) => {
                rec.witness_kind = Some("answer-set");
                rec.interpretation = Some(answer_set.to_string());
                rec.of_left = Some(*of_left);
            }
            Some(Witness::Consequences { input, .. }) => {
                rec.witness_kind = Some("consequences");
                rec.interpretation = Some(input.to_string());
            }
            Some(Witness::Context {
                context,
                answer_set,
                of_left,
            }) => {
                rec.witness_kind = Some("context");
                rec.context = Some(context.to_string());
                rec.interpretation = Some(answer_set.to_string());
                rec.of_left = Some(*of_left);
            }
        }
        rec
    }
}

fn first_difference(left: &[Interpretation], right: &[Interpretation]) -> Option<(Interpretation, bool)> {
    let l: BTreeSet<_> = left.iter().collect();
    let r: BTreeSet<_> = right.iter().collect();
    l.symmetric_difference(&r)
        .min()
        .map(|i| ((*i).clone(), l.contains(i)))
}

fn prepare(p: &Program, r: &Program, limits: &Limits) -> Result<()> {
    p.alphabet().check_same(r.alphabet())?;
    limits.check(p.alphabet())
}

/// Same answer sets.
pub fn equivalent(p: &Program, r: &Program, limits: &Limits) -> Result<Verdict> {
    prepare(p, r, limits)?;
    let left = answer_sets_with(p, limits)?;
    let right = answer_sets_with(r, limits)?;
    Ok(match first_difference(&left, &right) {
        None => Verdict::holds(),
        Some((answer_set, of_left)) => Verdict::refuted(Witness::AnswerSet { answer_set, of_left }),
    })
}

/// `P ∘ I = R ∘ I` for every interpretation `I`, i.e. `T_P = T_R`.
pub fn subsumption_equivalent(p: &Program, r: &Program, limits: &Limits) -> Result<Verdict> {
    prepare(p, r, limits)?;
    for i in Interpretation::all(p.alphabet()) {
        let facts = i.to_program();
        let left = compose(p, &facts)?;
        let right = compose(r, &facts)?;
        if left != right {
            return Ok(Verdict::refuted(Witness::Consequences {
                input: i,
                left: left.as_interpretation().expect("facts"),
                right: right.as_interpretation().expect("facts"),
            }));
        }
    }
    Ok(Verdict::holds())
}

/// Uniform equivalence by the characterization
/// `I = (g(J^* ∘ P)^I)^ω ⇔ I = (g(J^* ∘ R)^I)^ω` for all `I`, `J`,
/// cross-checked against [`uniformly_equivalent_definitional`].
pub fn uniformly_equivalent(p: &Program, r: &Program, limits: &Limits) -> Result<Verdict> {
    prepare(p, r, limits)?;
    let all = Interpretation::all(p.alphabet());
    let mut verdict = Verdict::holds();
    'contexts: for j in &all {
        let pj = add_facts(p, j)?;
        let rj = add_facts(r, j)?;
        for i in &all {
            let left = &omega(&gl_reduct(&pj, i)?) == i;
            let right = &omega(&gl_reduct(&rj, i)?) == i;
            if left != right {
                verdict = Verdict::refuted(Witness::Context {
                    context: j.to_program(),
                    answer_set: i.clone(),
                    of_left: left,
                });
                break 'contexts;
            }
        }
    }
    if verdict.equivalent != uniformly_equivalent_definitional(p, r, limits)?.equivalent {
        return Err(Error::InternalMismatch(
            "J^* ∘ P characterization disagrees with P ∪ J".into(),
        ));
    }
    Ok(verdict)
}

/// Uniform equivalence by definition: `P ∪ J` and `R ∪ J` have the same
/// answer sets for every interpretation `J`.
pub fn uniformly_equivalent_definitional(p: &Program, r: &Program, limits: &Limits) -> Result<Verdict> {
    prepare(p, r, limits)?;
    for j in Interpretation::all(p.alphabet()) {
        let facts = j.to_program();
        let left = answer_sets_with(&p.union(&facts)?, limits)?;
        let right = answer_sets_with(&r.union(&facts)?, limits)?;
        if let Some((answer_set, of_left)) = first_difference(&left, &right) {
            return Ok(Verdict::refuted(Witness::Context {
                context: facts,
                answer_set,
                of_left,
            }));
        }
    }
    Ok(Verdict::holds())
}

/// SE-models `(X, Y)` with `X ⊆ Y`, `Y ⊨ P` and `X ⊨ gP^Y`.
pub fn se_models(p: &Program, limits: &Limits) -> Result<BTreeSet<(Interpretation, Interpretation)>> {
    limits.check(p.alphabet())?;
    let all = Interpretation::all(p.alphabet());
    let mut out = BTreeSet::new();
    for y in &all {
        if !entails_program(y, p)? {
            continue;
        }
        let reduct = gl_reduct(p, y)?;
        for x in all.iter().filter(|x| x.is_subset(y)) {
            if entails_program(x, &reduct)? {
                out.insert((x.clone(), y.clone()));
            }
        }
    }
    Ok(out)
}

/// Whether adding `q` separates `p` and `r`, using
/// `I = (gP^I ∪ gQ^I)^ω`. Returns the first separating interpretation and
/// whether it is an answer set of the left side.
pub fn context_distinguishes(
    p: &Program,
    r: &Program,
    q: &Program,
) -> Result<Option<(Interpretation, bool)>> {
    p.alphabet().check_same(r.alphabet())?;
    p.alphabet().check_same(q.alphabet())?;
    for i in Interpretation::all(p.alphabet()) {
        let gq = gl_reduct(q, &i)?;
        let left = omega(&gl_reduct(p, &i)?.union(&gq)?) == i;
        let right = omega(&gl_reduct(r, &i)?.union(&gq)?) == i;
        if left != right {
            return Ok(Some((i, left)));
        }
    }
    Ok(None)
}

/// A context separating programs with different SE-models.
///
/// If `Y` is a model of one program only, `Q = Y` makes `Y` an answer set
/// of that program alone. Otherwise some `(X, Y)` with `X ⊂ Y` belongs to
/// one side only and `Q = X ∪ {a <- b | a ≠ b ∈ Y - X}` makes `Y` an answer
/// set of the other side alone.
fn separating_context(
    p: &Program,
    left: &BTreeSet<(Interpretation, Interpretation)>,
    right: &BTreeSet<(Interpretation, Interpretation)>,
) -> Program {
    let totals = |s: &BTreeSet<(Interpretation, Interpretation)>| -> BTreeSet<Interpretation> {
        s.iter().filter(|(x, y)| x == y).map(|(_, y)| y.clone()).collect()
    };
    let (lt, rt) = (totals(left), totals(right));
    if let Some(y) = lt.symmetric_difference(&rt).min() {
        return y.to_program();
    }
    let (x, y) = left
        .symmetric_difference(right)
        .min()
        .expect("SE-model sets differ");
    let gap: Vec<_> = y.atoms().difference(x.atoms()).copied().collect();
    let mut rules: BTreeSet<Rule> = x.atoms().iter().map(|&a| Rule::fact(a)).collect();
    for &a in &gap {
        for &b in &gap {
            if a != b {
                rules.insert(Rule::new(a, [b], []));
            }
        }
    }
    p.with_rules(rules)
}

/// Strong equivalence by SE-model equality.
///
/// A negative verdict carries a context program `Q` that provably separates
/// the two programs; it is replayed before being returned. A positive
/// verdict is probed with `limits.context_samples` random contexts, none of
/// which may separate the programs.
pub fn strongly_equivalent(p: &Program, r: &Program, limits: &Limits) -> Result<Verdict> {
    prepare(p, r, limits)?;
    let left = se_models(p, limits)?;
    let right = se_models(r, limits)?;
    if left != right {
        let context = separating_context(p, &left, &right);
        let pq = p.union(&context)?;
        let rq = r.union(&context)?;
        let left_sets = answer_sets_with(&pq, limits)?;
        let right_sets = answer_sets_with(&rq, limits)?;
        let (answer_set, of_left) = first_difference(&left_sets, &right_sets).ok_or_else(|| {
            Error::InternalMismatch("SE-model witness context does not separate the programs".into())
        })?;
        if context_distinguishes(p, r, &context)?.is_none() {
            return Err(Error::InternalMismatch(
                "reduct-union characterization misses the SE-model witness".into(),
            ));
        }
        debug_assert_eq!(is_answer_set(&pq, &answer_set), Ok(of_left));
        return Ok(Verdict::refuted(Witness::Context {
            context,
            answer_set,
            of_left,
        }));
    }

    let cfg = GeneratorConfig {
        alphabet_size: p.alphabet().len().clamp(1, 6),
        max_rules: 4,
        max_body: 2,
        negative_literal_probability: 0.3,
        seed: limits.seed,
    };
    let mut gen = ProgramGenerator::over(p.alphabet().clone(), &cfg);
    for _ in 0..limits.context_samples {
        let q = gen.program();
        if let Some((i, of_left)) = context_distinguishes(p, r, &q)? {
            // unreachable for programs with equal SE-models
            debug_assert!(is_answer_set_algebraic(&p.union(&q)?, &i)? == of_left);
            return Err(Error::InternalMismatch(format!(
                "sampled context separates programs with equal SE-models at {{{i}}}"
            )));
        }
    }
    Ok(Verdict::holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_str;

    fn pair(left: &str, right: &str) -> (Program, Program) {
        let p = parse_str(left).unwrap();
        let r = parse_str(right).unwrap();
        let a = p.alphabet().union(r.alphabet());
        (p.rehome(&a).unwrap(), r.rehome(&a).unwrap())
    }

    #[test]
    fn fact_versus_default() {
        let (p, r) = pair("a.", "a :- not b.");
        let limits = Limits::default();
        assert!(equivalent(&p, &r, &limits).unwrap().equivalent);
        let strong = strongly_equivalent(&p, &r, &limits).unwrap();
        assert!(!strong.equivalent);
        let Some(Witness::Context {
            context,
            answer_set,
            of_left,
        }) = strong.witness
        else {
            panic!("expected a context witness");
        };
        assert_eq!(context.to_string(), "#alphabet a, b.\nb.\n");
        assert_eq!(answer_set.to_string(), "a, b");
        assert!(of_left);
        let uniform = uniformly_equivalent(&p, &r, &limits).unwrap();
        assert!(!uniform.equivalent);
    }

    #[test]
    fn identical_programs() {
        let (p, _) = pair("a :- not b. b :- not a. c :- a.", "");
        let limits = Limits::default();
        assert!(equivalent(&p, &p, &limits).unwrap().equivalent);
        assert!(subsumption_equivalent(&p, &p, &limits).unwrap().equivalent);
        assert!(uniformly_equivalent(&p, &p, &limits).unwrap().equivalent);
        assert!(strongly_equivalent(&p, &p, &limits).unwrap().equivalent);
    }

    #[test]
    fn subsumed_rule() {
        let (p, r) = pair("a :- b.", "a :- b. a :- a, b.");
        let limits = Limits::default();
        assert!(subsumption_equivalent(&p, &r, &limits).unwrap().equivalent);
        assert!(strongly_equivalent(&p, &r, &limits).unwrap().equivalent);
    }

    #[test]
    fn subsumption_witness() {
        let (p, r) = pair("a :- b.", "a.");
        let v = subsumption_equivalent(&p, &r, &Limits::default()).unwrap();
        assert!(matches!(v.witness, Some(Witness::Consequences { ref input, .. }) if input.is_empty()));
    }

    #[test]
    fn proper_subset_witness() {
        // same classical models, different SE-models: (∅, {a, b}) only for the left side
        let (p, r) = pair("a :- not b. b :- not a.", "a :- not b. b :- not a. a :- b. b :- a.");
        let limits = Limits::default();
        let v = strongly_equivalent(&p, &r, &limits).unwrap();
        assert!(!v.equivalent);
        let Some(Witness::Context { context, .. }) = v.witness else {
            panic!()
        };
        assert!(context_distinguishes(&p, &r, &context).unwrap().is_some());
    }
}
