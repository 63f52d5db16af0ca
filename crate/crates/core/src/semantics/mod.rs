//! Entailment, reducts, the immediate consequence operator, least models
//! and answer sets.
//!
//! The direct, operator-based definitions are the ground truth. Their
//! algebraic counterparts (built from composition, cup and union) are
//! computed alongside and any disagreement is reported as
//! [`Error::InternalMismatch`].

mod equivalence;

pub use equivalence::{
    equivalent, se_models, strongly_equivalent, subsumption_equivalent, uniformly_equivalent,
    uniformly_equivalent_definitional, context_distinguishes, Verdict, VerdictRecord, Witness,
};

use crate::compose::{compose, cup, kleene_star, ominus, omega};
use crate::error::{Error, Result};
use crate::program::{Alphabet, AtomSet, Interpretation, Program, Rule};

/// Answer-set enumeration refuses alphabets larger than this by default.
pub const DEFAULT_MAX_ATOMS: usize = 20;

/// Bounds for the enumerating procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_atoms: usize,
    /// Random context programs tried against every strong-equivalence verdict.
    pub context_samples: usize,
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_atoms: DEFAULT_MAX_ATOMS,
            context_samples: 16,
            seed: 0x5eed,
        }
    }
}

impl Limits {
    pub fn check(&self, alphabet: &Alphabet) -> Result<()> {
        if alphabet.len() > self.max_atoms || alphabet.len() >= 64 {
            Err(Error::AlphabetTooLarge {
                size: alphabet.len(),
                bound: self.max_atoms.min(63),
            })
        } else {
            Ok(())
        }
    }
}

fn mismatch(what: &str) -> Error {
    Error::InternalMismatch(what.to_string())
}

/// `I ⊨ body(r)`: every positive body atom is in `I`, no negated one is.
pub fn body_holds(i: &AtomSet, rule: &Rule) -> bool {
    rule.pos.is_subset(i) && rule.neg.is_disjoint(i)
}

/// `I ⊨ r`.
pub fn entails(i: &Interpretation, rule: &Rule) -> bool {
    i.contains(rule.head) || !body_holds(i.atoms(), rule)
}

/// `I ⊨ P`, i.e. `I` is a model of `P`.
pub fn entails_program(i: &Interpretation, p: &Program) -> Result<bool> {
    i.alphabet().check_same(p.alphabet())?;
    Ok(p.iter().all(|r| entails(i, r)))
}

/// Gelfond-Lifschitz reduct `gP^I`.
pub fn gl_reduct(p: &Program, i: &Interpretation) -> Result<Program> {
    p.alphabet().check_same(i.alphabet())?;
    Ok(p.with_rules(
        p.iter()
            .filter(|r| r.neg.is_disjoint(i.atoms()))
            .map(Rule::pos_part),
    ))
}

/// Left reduct `^I P`: rules whose head is in `I`.
pub fn left_reduct(p: &Program, i: &Interpretation) -> Result<Program> {
    p.alphabet().check_same(i.alphabet())?;
    Ok(p.with_rules(p.iter().filter(|r| i.contains(r.head)).cloned()))
}

/// Right (Faber-Leone-Pfeifer) reduct `P^I`: rules whose body `I` entails.
pub fn right_reduct(p: &Program, i: &Interpretation) -> Result<Program> {
    p.alphabet().check_same(i.alphabet())?;
    Ok(p.with_rules(p.iter().filter(|r| body_holds(i.atoms(), r)).cloned()))
}

/// `1^I`.
pub fn unit_on(i: &Interpretation) -> Program {
    Program::unit_on(i.alphabet(), i.atoms().iter().copied())
}

/// Reduction of a Horn program to the atoms of `I`, computed as
/// `1^I ∘ (H ∘ 1^I)` and `(1^I ∘ H) ∘ 1^I`.
pub fn restrict(h: &Program, i: &Interpretation) -> Result<Program> {
    h.alphabet().check_same(i.alphabet())?;
    h.require_horn("restriction is defined for Horn programs only")?;
    let unit = unit_on(i);
    let left_first = compose(&unit, &compose(h, &unit)?)?;
    let right_first = compose(&compose(&unit, h)?, &unit)?;
    if left_first != right_first {
        return Err(mismatch("restriction orders disagree"));
    }
    if left_first != left_reduct(&right_reduct(h, i)?, i)? {
        return Err(mismatch("restriction disagrees with the direct reducts"));
    }
    Ok(left_first)
}

/// Van Emden-Kowalski operator `T_P(I)`.
pub fn tp_direct(p: &Program, i: &Interpretation) -> Result<Interpretation> {
    p.alphabet().check_same(i.alphabet())?;
    Ok(Interpretation::from_parts(
        i.alphabet().clone(),
        p.iter()
            .filter(|r| body_holds(i.atoms(), r))
            .map(|r| r.head)
            .collect(),
    ))
}

/// `P ∘ I`, which coincides with `T_P(I)`.
pub fn tp_algebraic(p: &Program, i: &Interpretation) -> Result<Interpretation> {
    compose(p, &i.to_program())?
        .as_interpretation()
        .ok_or_else(|| mismatch("composition with an interpretation produced a proper rule"))
}

fn tp_checked(p: &Program, i: &Interpretation) -> Result<Interpretation> {
    let direct = tp_direct(p, i)?;
    if tp_algebraic(p, i)? != direct {
        return Err(mismatch("P ∘ I differs from T_P(I)"));
    }
    Ok(direct)
}

/// `P ∘ I ⊆ I`.
pub fn is_model(p: &Program, i: &Interpretation) -> Result<bool> {
    let image = tp_checked(p, i)?;
    let model = image.is_subset(i);
    if model != entails_program(i, p)? {
        return Err(mismatch("prefixed point test disagrees with entailment"));
    }
    Ok(model)
}

/// `P ∘ I = I`.
pub fn is_supported_model(p: &Program, i: &Interpretation) -> Result<bool> {
    Ok(&tp_checked(p, i)? == i)
}

/// Least fixed point of `T_H` by iteration from the empty set.
pub fn least_fixpoint(h: &Program) -> Result<Interpretation> {
    h.require_horn("least fixpoint iteration needs a Horn program")?;
    let mut current = Interpretation::empty(h.alphabet().clone());
    loop {
        let next = tp_direct(h, &current)?;
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// Least model of a Horn program, as `H^ω` checked against `T_H` iteration.
pub fn least_model(h: &Program) -> Result<Interpretation> {
    let fixpoint = least_fixpoint(h)?;
    if omega(h) != fixpoint {
        return Err(mismatch("H^ω differs from the least fixpoint of T_H"));
    }
    Ok(fixpoint)
}

/// `I = (gP^I)^ω`.
pub fn is_answer_set_algebraic(p: &Program, i: &Interpretation) -> Result<bool> {
    Ok(&omega(&gl_reduct(p, i)?) == i)
}

/// `I` is the least model of `gP^I`, by fixpoint iteration.
pub fn is_answer_set_definitional(p: &Program, i: &Interpretation) -> Result<bool> {
    Ok(&least_fixpoint(&gl_reduct(p, i)?)? == i)
}

/// `I` is a subset-minimal model of the right reduct `P^I`.
pub fn is_minimal_model_of_right_reduct(p: &Program, i: &Interpretation) -> Result<bool> {
    let reduct = right_reduct(p, i)?;
    if !entails_program(i, &reduct)? {
        return Ok(false);
    }
    let atoms: Vec<_> = i.atoms().iter().copied().collect();
    if atoms.len() >= 64 {
        return Err(Error::AlphabetTooLarge {
            size: atoms.len(),
            bound: 63,
        });
    }
    for mask in 0..(1u64 << atoms.len()) - 1 {
        let sub = Interpretation::from_parts(
            i.alphabet().clone(),
            atoms
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &a)| a)
                .collect(),
        );
        if entails_program(&sub, &reduct)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Answer-set test via `I = (gP^I)^ω`, cross-checked against the
/// least-model definition.
pub fn is_answer_set(p: &Program, i: &Interpretation) -> Result<bool> {
    let algebraic = is_answer_set_algebraic(p, i)?;
    if algebraic != is_answer_set_definitional(p, i)? {
        return Err(mismatch("(gP^I)^ω test disagrees with the least model of gP^I"));
    }
    Ok(algebraic)
}

/// All answer sets, in canonical order.
pub fn answer_sets(p: &Program) -> Result<Vec<Interpretation>> {
    answer_sets_with(p, &Limits::default())
}

pub fn answer_sets_with(p: &Program, limits: &Limits) -> Result<Vec<Interpretation>> {
    limits.check(p.alphabet())?;
    let mut out = Vec::new();
    for i in Interpretation::all(p.alphabet()) {
        if is_answer_set(p, &i)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// `⋃_{r∈P} [{pos(r)} ⊔ {neg(r)} ∘ I]`.
pub fn gl_reduct_by_composition(p: &Program, i: &Interpretation) -> Result<Program> {
    p.alphabet().check_same(i.alphabet())?;
    let facts = i.to_program();
    let mut out = Program::empty(p.alphabet().clone());
    for r in p.iter() {
        let pos = p.with_rules([r.pos_part()]);
        let neg = compose(&p.with_rules([r.neg_part()]), &facts)?;
        out = out.union(&cup(&pos, &neg)?)?;
    }
    Ok(out)
}

/// Gelfond-Lifschitz reduct via composition and cup, checked against
/// [`gl_reduct`].
pub fn gl_reduct_algebraic(p: &Program, i: &Interpretation) -> Result<Program> {
    let algebraic = gl_reduct_by_composition(p, i)?;
    if algebraic != gl_reduct(p, i)? {
        return Err(mismatch("algebraic Gelfond-Lifschitz reduct differs"));
    }
    Ok(algebraic)
}

/// `⋃_{r∈P} [{pos(r)} ∘ 1^I ⊔ {neg(r)} ∘ I^⊖]`.
///
/// The negative part keeps `neg(r)` exactly when none of its atoms is in
/// `I`, because `not I^⊖ = {c <- not c | c ∉ I}`.
pub fn flp_reduct_by_composition(p: &Program, i: &Interpretation) -> Result<Program> {
    p.alphabet().check_same(i.alphabet())?;
    let unit = unit_on(i);
    let filter = ominus(i);
    let mut out = Program::empty(p.alphabet().clone());
    for r in p.iter() {
        let pos = compose(&p.with_rules([r.pos_part()]), &unit)?;
        let neg = compose(&p.with_rules([r.neg_part()]), &filter)?;
        out = out.union(&cup(&pos, &neg)?)?;
    }
    Ok(out)
}

/// `⋃_{r∈P} [{pos(r)} ∘ 1^I ⊔ {horn(neg(r))} ∘ 1^{A-I}]`, which is the
/// hornification of the right reduct.
pub fn flp_reduct_hornified(p: &Program, i: &Interpretation) -> Result<Program> {
    p.alphabet().check_same(i.alphabet())?;
    let unit = unit_on(i);
    let co_unit = unit_on(&i.complement());
    let mut out = Program::empty(p.alphabet().clone());
    for r in p.iter() {
        let pos = compose(&p.with_rules([r.pos_part()]), &unit)?;
        let neg = compose(&p.with_rules([r.neg_part().hornify()]), &co_unit)?;
        out = out.union(&cup(&pos, &neg)?)?;
    }
    Ok(out)
}

/// Right reduct via composition and cup, checked against [`right_reduct`].
pub fn flp_reduct_algebraic(p: &Program, i: &Interpretation) -> Result<Program> {
    let algebraic = flp_reduct_by_composition(p, i)?;
    if algebraic != right_reduct(p, i)? {
        return Err(mismatch("algebraic Faber-Leone-Pfeifer reduct differs"));
    }
    Ok(algebraic)
}

/// `J^* ∘ P`, which equals `P ∪ J`.
pub fn add_facts(p: &Program, j: &Interpretation) -> Result<Program> {
    compose(&kleene_star(&j.to_program()), p)
}
