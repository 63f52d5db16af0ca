//! Sequential composition, cup and the operators derived from them.
//!
//! `P ∘ R` resolves every positive body atom `b` of a rule of `P` against a
//! rule of `R` with head `b`, and every negated body atom `not c` against a
//! rule of `not R` with head `c`; the new body is the union of the chosen
//! bodies. Composition is a unital magma (unit `1 = {a <- a}`) but it is not
//! associative and only right-distributes over union.

mod closure;
mod negation;

use std::collections::BTreeSet;

pub use closure::{kleene_plus, kleene_star, omega, power};
pub use negation::{
    negate_or_rule, negate_program, or_transform, overline, serialize_ext_program, serialize_or_program,
    tf_transform, ExtLiteral, ExtProgram, ExtRule, OrProgram, OrRule,
};

use crate::error::{Error, Result};
use crate::program::{Alphabet, Atom, AtomSet, Interpretation, Literal, Program, Rule};

/// Rules of a program grouped by head atom.
struct HeadIndex<'a>(Vec<Vec<&'a Rule>>);

impl<'a> HeadIndex<'a> {
    fn new(p: &'a Program) -> Self {
        let mut groups = vec![Vec::new(); p.alphabet().len()];
        for rule in p.iter() {
            groups[rule.head.index()].push(rule);
        }
        HeadIndex(groups)
    }

    fn with_head(&self, atom: Atom) -> &[&'a Rule] {
        &self.0[atom.index()]
    }
}

/// Extends every partial body with the body of one rule from `candidates`.
fn extend_bodies(partial: BTreeSet<(AtomSet, AtomSet)>, candidates: &[&Rule]) -> BTreeSet<(AtomSet, AtomSet)> {
    let mut next = BTreeSet::new();
    for (pos, neg) in &partial {
        for cand in candidates {
            next.insert((
                pos.union(&cand.pos).copied().collect(),
                neg.union(&cand.neg).copied().collect(),
            ));
        }
    }
    next
}

/// Sequential composition `p ∘ r`.
///
/// Exactly one rule per body atom is selected, so the subsets of the
/// defining formula are enumerated as a product over body atoms of the
/// rules with that head.
pub fn compose(p: &Program, r: &Program) -> Result<Program> {
    p.alphabet().check_same(r.alphabet())?;
    let pos_index = HeadIndex::new(r);
    let negated = p.iter().any(|q| !q.neg.is_empty()).then(|| negate_program(r));
    let neg_index = negated.as_ref().map(HeadIndex::new);

    let mut out = BTreeSet::new();
    for q in p.iter() {
        let mut partial = BTreeSet::from([(AtomSet::new(), AtomSet::new())]);
        for &b in &q.pos {
            partial = extend_bodies(partial, pos_index.with_head(b));
            if partial.is_empty() {
                break;
            }
        }
        if let Some(neg_index) = &neg_index {
            for &c in &q.neg {
                if partial.is_empty() {
                    break;
                }
                partial = extend_bodies(partial, neg_index.with_head(c));
            }
        }
        out.extend(partial.into_iter().map(|(pos, neg)| Rule { head: q.head, pos, neg }));
    }
    Ok(p.with_rules(out))
}

/// All `k`-element subsets of `items`, in index order.
fn subsets<'a, T>(items: &'a [T], k: usize) -> Vec<Vec<&'a T>> {
    fn go<'a, T>(items: &'a [T], k: usize, start: usize, cur: &mut Vec<&'a T>, out: &mut Vec<Vec<&'a T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(&items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Composition by literal enumeration of every `|pos_body|`-subset of `r`
/// and every `|neg_body|`-subset of `not r`, filtered by head equality.
///
/// Exponential; meant as an independent check of [`compose`] on small
/// inputs.
pub fn compose_oracle(p: &Program, r: &Program) -> Result<Program> {
    p.alphabet().check_same(r.alphabet())?;
    let r_rules: Vec<Rule> = r.iter().cloned().collect();
    let not_r_rules: Vec<Rule> = negate_program(r).iter().cloned().collect();
    let heads = |s: &[&Rule]| s.iter().map(|r| r.head).collect::<AtomSet>();

    let mut out = BTreeSet::new();
    for q in p.iter() {
        let pos_choices: Vec<Vec<&Rule>> = subsets(&r_rules, q.pos.len())
            .into_iter()
            .filter(|s| heads(s) == q.pos)
            .collect();
        let neg_choices: Vec<Vec<&Rule>> = subsets(&not_r_rules, q.neg.len())
            .into_iter()
            .filter(|n| heads(n) == q.neg)
            .collect();
        for s in &pos_choices {
            for n in &neg_choices {
                let body = s.iter().chain(n.iter()).flat_map(|r| r.body());
                out.insert(Rule::from_literals(q.head, body));
            }
        }
    }
    Ok(p.with_rules(out))
}

/// `k ∘ r` for Krom-Horn `k`: the facts of `k` plus `a <- B` for every
/// `a <- b` in `k` and `b <- B` in `r`.
pub fn compose_krom_horn(k: &Program, r: &Program) -> Result<Program> {
    k.alphabet().check_same(r.alphabet())?;
    if !k.is_krom_horn() {
        return Err(Error::NotHorn("left operand must be Krom-Horn".into()));
    }
    let mut out: BTreeSet<Rule> = k.facts_of().rules().clone();
    for q in k.iter() {
        if let Some(&b) = q.pos.first() {
            for s in r.iter().filter(|s| s.head == b) {
                out.insert(Rule {
                    head: q.head,
                    pos: s.pos.clone(),
                    neg: s.neg.clone(),
                });
            }
        }
    }
    Ok(k.with_rules(out))
}

/// `h ∘ r` for Horn `h`: the negation of `r` is never consulted.
pub fn compose_horn(h: &Program, r: &Program) -> Result<Program> {
    h.alphabet().check_same(r.alphabet())?;
    h.require_horn("left operand must be Horn")?;
    let mut out = BTreeSet::new();
    for q in h.iter() {
        let groups: Vec<Vec<&Rule>> = q
            .pos
            .iter()
            .map(|&b| r.iter().filter(|s| s.head == b).collect())
            .collect();
        if groups.iter().any(Vec::is_empty) {
            continue;
        }
        let mut idx = vec![0usize; groups.len()];
        loop {
            let body = groups.iter().zip(&idx).flat_map(|(g, &i)| g[i].body());
            out.insert(Rule::from_literals(q.head, body));
            let mut d = 0;
            while d < idx.len() {
                idx[d] += 1;
                if idx[d] < groups[d].len() {
                    break;
                }
                idx[d] = 0;
                d += 1;
            }
            if d == idx.len() {
                break;
            }
        }
    }
    Ok(h.with_rules(out))
}

/// `p ⊔ r`: one merged rule per pair of rules with the same head.
pub fn cup(p: &Program, r: &Program) -> Result<Program> {
    p.alphabet().check_same(r.alphabet())?;
    let index = HeadIndex::new(r);
    let mut out = BTreeSet::new();
    for q in p.iter() {
        for s in index.with_head(q.head) {
            out.insert(Rule {
                head: q.head,
                pos: q.pos.union(&s.pos).copied().collect(),
                neg: q.neg.union(&s.neg).copied().collect(),
            });
        }
    }
    Ok(p.with_rules(out))
}

/// `I^⊖ = 1^{A-I} ∪ I`; composing a Horn program with it on the right
/// deletes the atoms of `I` from rule bodies.
pub fn ominus(i: &Interpretation) -> Program {
    let alphabet = i.alphabet();
    let mut rules: BTreeSet<Rule> = Program::unit_on(alphabet, i.complement().atoms().iter().copied())
        .rules()
        .clone();
    rules.extend(i.atoms().iter().map(|&a| Rule::fact(a)));
    Program::empty(alphabet.clone()).with_rules(rules)
}

/// `B^⊕ = {a <- {a} ∪ B | a in A}`; composing a Horn program with it on the
/// right adds `B` to every proper rule body.
pub fn oplus(body: &BTreeSet<Literal>, alphabet: &Alphabet) -> Result<Program> {
    if body.iter().any(|l| !alphabet.contains(l.atom)) {
        return Err(Error::AlphabetMismatch);
    }
    let rules = alphabet.atoms().map(|a| {
        let mut rule = Rule::from_literals(a, body.iter().copied());
        rule.pos.insert(a);
        rule
    });
    Ok(Program::empty(alphabet.clone()).with_rules(rules))
}

/// `(π ∘ p) ∘ π^d`, which applies the permutation `π` to every atom of `p`.
pub fn rename(perm: &Program, p: &Program) -> Result<Program> {
    let left = compose(perm, p)?;
    compose(&left, &perm.dual_of()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_str;

    fn prog(src: &str) -> Program {
        parse_str(src).unwrap()
    }

    const ABCD: &str = "#alphabet a, b, c, d.\n";

    #[test]
    fn composition_example_with_negative_rule() {
        let r = prog(&format!("{ABCD}a :- not b."));
        let big_r = prog(&format!("{ABCD}b :- not c, not d.\nb :- c, d."));
        let expected = prog(&format!(
            "{ABCD}a :- c, not c.\na :- d, not c.\na :- c, not d.\na :- d, not d."
        ));
        assert_eq!(compose(&r, &big_r).unwrap(), expected);
        assert_eq!(compose_oracle(&r, &big_r).unwrap(), expected);
    }

    #[test]
    fn unit_is_neutral() {
        let p = prog("a :- b, not c. b. c :- not a, not b.");
        let one = Program::unit(p.alphabet());
        assert_eq!(compose(&p, &one).unwrap(), p);
        assert_eq!(compose(&one, &p).unwrap(), p);
        assert_eq!(compose_oracle(&one, &p).unwrap(), p);
    }

    #[test]
    fn non_associativity_example() {
        const ABF: &str = "#alphabet a, b, c, d, e, g.\n";
        let r = prog(&format!("{ABF}a :- b, c."));
        let p = prog(&format!("{ABF}b :- b.\nc :- b, c."));
        let q = prog(&format!("{ABF}b :- d.\nb :- e.\nc :- g."));
        let left = compose(&r, &compose(&p, &q).unwrap()).unwrap();
        let right = compose(&compose(&r, &p).unwrap(), &q).unwrap();
        assert_eq!(left, prog(&format!("{ABF}a :- d, g.\na :- e, g.\na :- d, e, g.")));
        assert_eq!(right, prog(&format!("{ABF}a :- d, g.\na :- e, g.")));
    }

    #[test]
    fn interpretation_is_left_zero() {
        let i = prog("#alphabet a, b, c.\na. c.");
        let p = prog("#alphabet a, b, c.\nb :- a, not c. c :- not b.");
        assert_eq!(compose(&i, &p).unwrap(), i);
    }

    #[test]
    fn negative_rule_against_empty_program() {
        let p = prog("a :- not b.");
        let empty = Program::empty(p.alphabet().clone());
        assert_eq!(compose(&p, &empty).unwrap(), prog("#alphabet a, b.\na."));
    }

    #[test]
    fn alphabet_mismatch() {
        let p = prog("a :- b.");
        let r = prog("c.");
        assert_eq!(compose(&p, &r), Err(Error::AlphabetMismatch));
        assert_eq!(cup(&p, &r), Err(Error::AlphabetMismatch));
        assert_eq!(compose_oracle(&p, &r), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn cup_is_not_idempotent() {
        let p = prog("a :- b. a :- c.");
        assert_eq!(cup(&p, &p).unwrap(), prog("a :- b. a :- c. a :- b, c."));
    }

    #[test]
    fn cup_unit_and_body_split() {
        let p = prog("a :- b, not c. b. c :- a.");
        let facts = Program::from_facts(p.alphabet().clone(), p.alphabet().atoms());
        assert_eq!(cup(&p, &facts).unwrap(), p);
        for rule in p.iter() {
            let pos = p.with_rules([rule.pos_part()]);
            let neg = p.with_rules([rule.neg_part()]);
            assert_eq!(cup(&pos, &neg).unwrap(), p.with_rules([rule.clone()]));
        }
    }

    #[test]
    fn body_removal_and_addition() {
        let abc = Alphabet::new(["a", "b", "c"]).unwrap();
        let c = abc.atom("c").unwrap();
        let empty = Interpretation::empty(abc.clone());
        assert_eq!(ominus(&empty), Program::unit(&abc));
        let full = Interpretation::full(abc.clone());
        assert_eq!(ominus(&full), full.to_program());
        let ic = Interpretation::new(abc.clone(), [c]).unwrap();
        assert_eq!(ominus(&ic), prog("#alphabet a, b, c.\na :- a. b :- b. c."));
        let h = prog("a :- b, c.");
        assert_eq!(compose(&h, &ominus(&ic)).unwrap(), prog("#alphabet a, b, c.\na :- b."));

        assert_eq!(oplus(&BTreeSet::new(), &abc).unwrap(), Program::unit(&abc));
        let not_c = BTreeSet::from([Literal::neg(c)]);
        let plus = oplus(&not_c, &abc).unwrap();
        // the definition yields c <- c, not c
        assert_eq!(
            plus,
            prog("#alphabet a, b, c.\na :- a, not c. b :- b, not c. c :- c, not c.")
        );
        let h = prog("#alphabet a, b, c.\na :- b.");
        assert_eq!(compose(&h, &plus).unwrap(), prog("#alphabet a, b, c.\na :- b, not c."));
        let z = Alphabet::new(["z"]).unwrap();
        assert_eq!(oplus(&not_c, &z), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn negative_program_body_removal() {
        let n = prog("#alphabet a, b, c.\na :- not b, not c.");
        let abc = n.alphabet().clone();
        let unit_ab = Program::unit_on(&abc, [abc.atom("a").unwrap(), abc.atom("b").unwrap()]);
        assert_eq!(compose(&n, &unit_ab).unwrap(), prog("#alphabet a, b, c.\na :- not b."));
    }

    #[test]
    fn negative_rule_against_horn_rule() {
        let p = prog("#alphabet a, b, c.\na :- not b.");
        let r = prog("#alphabet a, b, c.\nb :- b, c.");
        assert_eq!(
            compose(&p, &r).unwrap(),
            prog("#alphabet a, b, c.\na :- not b. a :- not c.")
        );
    }

    #[test]
    fn krom_and_horn_simplifications() {
        let k = prog("#alphabet a, b, c.\na. b :- a. c :- c.");
        let r = prog("#alphabet a, b, c.\na :- not b, c. c. c :- a, b.");
        assert_eq!(compose_krom_horn(&k, &r).unwrap(), compose(&k, &r).unwrap());
        let h = prog("#alphabet a, b, c.\na :- b, c. b. c :- a, c.");
        assert_eq!(compose_horn(&h, &r).unwrap(), compose(&h, &r).unwrap());
        assert!(compose_horn(&r, &h).is_err());
        assert!(compose_krom_horn(&h, &r).is_err());
    }

    #[test]
    fn renaming_via_permutation() {
        let abc = Alphabet::new(["a", "b", "c"]).unwrap();
        let (a, b) = (abc.atom("a").unwrap(), abc.atom("b").unwrap());
        let pi = Program::permutation(&abc, &[vec![a, b]]).unwrap();
        let p = prog("#alphabet a, b, c.\na :- b, not c. c :- not a.");
        assert_eq!(
            rename(&pi, &p).unwrap(),
            prog("#alphabet a, b, c.\nb :- a, not c. c :- not b.")
        );
        assert_eq!(compose(&pi, &pi.dual_of().unwrap()).unwrap(), Program::unit(&abc));
    }

    #[test]
    fn subsets_enumerates_combinations() {
        let items = [1, 2, 3, 4];
        assert_eq!(subsets(&items, 2).len(), 6);
        assert_eq!(subsets(&items, 0), vec![Vec::<&i32>::new()]);
        assert!(subsets(&items, 5).is_empty());
    }
}
