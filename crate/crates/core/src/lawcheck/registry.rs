//! The law registry.
//!
//! Every entry states an identity over named variables. Expected laws must
//! hold on every sampled instance; expected non-laws carry a fixed witness
//! that refutes them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::compose::{
    compose, compose_horn, compose_krom_horn, compose_oracle, cup, kleene_plus, kleene_star,
    negate_program, omega, ominus, oplus, rename, power,
};
use crate::error::Result;
use crate::program::{Alphabet, Atom, Interpretation, Literal, Program, Rule};
use crate::semantics::{
    answer_sets, context_distinguishes, entails_program, equivalent, flp_reduct_by_composition,
    flp_reduct_hornified, gl_reduct, gl_reduct_by_composition, is_answer_set_algebraic,
    is_answer_set_definitional, is_minimal_model_of_right_reduct, is_model, is_supported_model,
    least_fixpoint, least_model, left_reduct, restrict, right_reduct, strongly_equivalent,
    subsumption_equivalent, tp_direct, uniformly_equivalent, uniformly_equivalent_definitional,
    unit_on, Limits,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expected {
    Law,
    NonLaw,
}

/// The class a law variable ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Program,
    Horn,
    Negative,
    KromHorn,
    Interpretation,
    Permutation,
    /// A program with exactly one rule.
    Rule,
}

impl Kind {
    pub fn admits(self, p: &Program) -> bool {
        match self {
            Kind::Program => true,
            Kind::Horn => p.is_horn(),
            Kind::Negative => p.is_negative(),
            Kind::KromHorn => p.is_krom_horn(),
            Kind::Interpretation => p.as_interpretation().is_some(),
            Kind::Permutation => {
                p.len() == p.alphabet().len()
                    && p.head_of() == p.alphabet().all_atoms()
                    && p.iter().all(|r| r.neg.is_empty() && r.pos.len() == 1)
                    && p.iter().flat_map(|r| r.pos.iter()).collect::<std::collections::BTreeSet<_>>().len()
                        == p.alphabet().len()
            }
            Kind::Rule => p.len() == 1,
        }
    }
}

/// An assignment of programs to the variables of a law, over one alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    slots: BTreeMap<String, Program>,
}

impl Instance {
    pub fn new(slots: impl IntoIterator<Item = (String, Program)>) -> Self {
        Instance {
            slots: slots.into_iter().collect(),
        }
    }

    pub fn slots(&self) -> impl Iterator<Item = (&str, &Program)> {
        self.slots.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn set(&mut self, name: &str, p: Program) {
        self.slots.insert(name.to_string(), p);
    }

    pub fn get(&self, name: &str) -> &Program {
        self.slots
            .get(name)
            .unwrap_or_else(|| panic!("law variable `{name}` is not bound"))
    }

    pub fn interp(&self, name: &str) -> Interpretation {
        self.get(name)
            .as_interpretation()
            .unwrap_or_else(|| panic!("law variable `{name}` is not an interpretation"))
    }

    pub fn rule(&self, name: &str) -> &Rule {
        self.get(name)
            .iter()
            .next()
            .unwrap_or_else(|| panic!("law variable `{name}` holds no rule"))
    }

    pub fn alphabet(&self) -> Alphabet {
        self.slots
            .values()
            .next()
            .map(|p| p.alphabet().clone())
            .unwrap_or_else(Alphabet::empty)
    }
}

pub type Check = fn(&Instance) -> Result<bool>;

pub struct Law {
    pub id: &'static str,
    pub statement: &'static str,
    pub expected: Expected,
    pub variables: &'static [(&'static str, Kind)],
    pub check: Check,
    /// Refuting instance of an expected non-law, one source text per variable.
    pub witness: &'static [(&'static str, &'static str)],
    /// Relative cost of one evaluation; divides the exhaustive-mode budget.
    pub cost: usize,
}

impl std::fmt::Debug for Law {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Law")
            .field("id", &self.id)
            .field("expected", &self.expected)
            .finish()
    }
}

use Kind::*;

const P: (&str, Kind) = ("p", Program);
const Q: (&str, Kind) = ("q", Program);
const R: (&str, Kind) = ("r", Program);
const H: (&str, Kind) = ("h", Horn);
const G: (&str, Kind) = ("g", Horn);
const N: (&str, Kind) = ("n", Negative);
const M: (&str, Kind) = ("m", Negative);
const K: (&str, Kind) = ("k", KromHorn);
const K2: (&str, Kind) = ("l", KromHorn);
const I: (&str, Kind) = ("i", Interpretation);
const J: (&str, Kind) = ("j", Interpretation);
const PI: (&str, Kind) = ("pi", Permutation);
const RULE_R: (&str, Kind) = ("r", Rule);
const RULE_S: (&str, Kind) = ("s", Rule);

fn c(p: &Program, r: &Program) -> Result<Program> {
    compose(p, r)
}

fn u(p: &Program, r: &Program) -> Result<Program> {
    p.union(r)
}

fn one(x: &Instance) -> Program {
    Program::unit(&x.alphabet())
}

fn empty(x: &Instance) -> Program {
    Program::empty(x.alphabet())
}

fn all_facts(x: &Instance) -> Program {
    Program::from_facts(x.alphabet(), x.alphabet().atoms())
}

fn single(p: &Program, rule: Rule) -> Program {
    p.with_rules([rule])
}

fn facts(i: &Interpretation) -> Program {
    i.to_program()
}

fn not_one(x: &Instance) -> Program {
    negate_program(&one(x))
}

/// Equivalence checks inside laws use few sampled contexts to keep trials cheap.
fn limits() -> Limits {
    Limits {
        context_samples: 4,
        ..Limits::default()
    }
}

fn permutation_map(pi: &Program) -> BTreeMap<Atom, Atom> {
    pi.iter()
        .map(|r| (*r.pos.iter().next().expect("permutation rule"), r.head))
        .collect()
}

pub static LAWS: &[Law] = &[
    // composition
    Law {
        id: "compose.unit",
        statement: "p ∘ 1 = 1 ∘ p = p",
        expected: Expected::Law,
        variables: &[P],
        check: |x| {
            let p = x.get("p");
            Ok(&c(p, &one(x))? == p && &c(&one(x), p)? == p)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "compose.empty-left-zero",
        statement: "∅ ∘ p = ∅",
        expected: Expected::Law,
        variables: &[P],
        check: |x| Ok(c(&empty(x), x.get("p"))?.is_empty()),
        witness: &[],
        cost: 1,
    },
    Law {
        id: "compose.right-distributivity",
        statement: "(p ∪ r) ∘ q = (p ∘ q) ∪ (r ∘ q)",
        expected: Expected::Law,
        variables: &[P, R, Q],
        check: |x| {
            let (p, q, r) = (x.get("p"), x.get("q"), x.get("r"));
            Ok(c(&u(p, r)?, q)? == u(&c(p, q)?, &c(r, q)?)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "compose.rule-wise",
        statement: "p ∘ r = ⋃ {s} ∘ r over s ∈ p",
        expected: Expected::Law,
        variables: &[P, R],
        check: |x| {
            let (p, r) = (x.get("p"), x.get("r"));
            let mut acc = empty(x);
            for s in p.iter() {
                acc = u(&acc, &c(&single(p, s.clone()), r)?)?;
            }
            Ok(acc == c(p, r)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "compose.facts",
        statement: "facts(p) ⊆ facts(p ∘ r) and p ∘ r = facts(p) ∪ proper(p) ∘ r",
        expected: Expected::Law,
        variables: &[P, R],
        check: |x| {
            let (p, r) = (x.get("p"), x.get("r"));
            let pr = c(p, r)?;
            Ok(p.facts_of().is_subset(&pr.facts_of()) && pr == u(&p.facts_of(), &c(&p.proper_of(), r)?)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "compose.oracle",
        statement: "compose agrees with subset enumeration",
        expected: Expected::Law,
        variables: &[P, R],
        check: |x| Ok(c(x.get("p"), x.get("r"))? == compose_oracle(x.get("p"), x.get("r"))?),
        witness: &[],
        cost: 1,
    },
    Law {
        id: "compose.body-split",
        statement: "p ∘ r = ⋃ {pos(s)} ∘ r ⊔ {horn(neg(s))} ∘ not r over s ∈ p",
        expected: Expected::Law,
        variables: &[P, R],
        check: |x| {
            let (p, r) = (x.get("p"), x.get("r"));
            let not_r = negate_program(r);
            let mut acc = empty(x);
            for s in p.iter() {
                let pos = c(&single(p, s.pos_part()), r)?;
                let neg = c(&single(p, s.neg_part().hornify()), &not_r)?;
                acc = u(&acc, &cup(&pos, &neg)?)?;
            }
            Ok(acc == c(p, r)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "compose.interpretation-left-zero",
        statement: "i ∘ p = i",
        expected: Expected::Law,
        variables: &[I, P],
        check: |x| Ok(&c(x.get("i"), x.get("p"))? == x.get("i")),
        witness: &[],
        cost: 1,
    },
    Law {
        id: "compose.horn-closed",
        statement: "h ∘ g is Horn",
        expected: Expected::Law,
        variables: &[H, G],
        check: |x| Ok(c(x.get("h"), x.get("g"))?.is_horn()),
        witness: &[],
        cost: 1,
    },
    Law {
        id: "compose.associativity",
        statement: "p ∘ (q ∘ r) = (p ∘ q) ∘ r",
        expected: Expected::NonLaw,
        variables: &[P, Q, R],
        check: |x| {
            let (p, q, r) = (x.get("p"), x.get("q"), x.get("r"));
            Ok(c(p, &c(q, r)?)? == c(&c(p, q)?, r)?)
        },
        witness: &[
            ("p", "a :- b, c."),
            ("q", "b :- b. c :- b, c."),
            ("r", "b :- d. b :- e. c :- g."),
        ],
        cost: 1,
    },
    Law {
        id: "compose.left-distributivity",
        statement: "p ∘ (q ∪ r) = (p ∘ q) ∪ (p ∘ r)",
        expected: Expected::NonLaw,
        variables: &[P, Q, R],
        check: |x| {
            let (p, q, r) = (x.get("p"), x.get("q"), x.get("r"));
            Ok(c(p, &u(q, r)?)? == u(&c(p, q)?, &c(p, r)?)?)
        },
        witness: &[("p", "a :- b, c."), ("q", "b."), ("r", "c.")],
        cost: 1,
    },
    // restricted classes
    Law {
        id: "krom.left-distributivity",
        statement: "k ∘ (p ∪ r) = (k ∘ p) ∪ (k ∘ r)",
        expected: Expected::Law,
        variables: &[K, P, R],
        check: |x| {
            let (k, p, r) = (x.get("k"), x.get("p"), x.get("r"));
            Ok(c(k, &u(p, r)?)? == u(&c(k, p)?, &c(k, r)?)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "krom.associativity",
        statement: "k ∘ (p ∘ r) = (k ∘ p) ∘ r",
        expected: Expected::Law,
        variables: &[K, P, R],
        check: |x| {
            let (k, p, r) = (x.get("k"), x.get("p"), x.get("r"));
            Ok(c(k, &c(p, r)?)? == c(&c(k, p)?, r)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "krom.closed",
        statement: "k ∘ l is Krom-Horn",
        expected: Expected::Law,
        variables: &[K, K2],
        check: |x| Ok(c(x.get("k"), x.get("l"))?.is_krom_horn()),
        witness: &[],
        cost: 1,
    },
    Law {
        id: "krom.simplification",
        statement: "Krom-Horn composition formula agrees with compose",
        expected: Expected::Law,
        variables: &[K, R],
        check: |x| Ok(compose_krom_horn(x.get("k"), x.get("r"))? == c(x.get("k"), x.get("r"))?),
        witness: &[],
        cost: 1,
    },
    Law {
        id: "horn.simplification",
        statement: "Horn composition formula agrees with compose",
        expected: Expected::Law,
        variables: &[H, R],
        check: |x| Ok(compose_horn(x.get("h"), x.get("r"))? == c(x.get("h"), x.get("r"))?),
        witness: &[],
        cost: 1,
    },
    Law {
        id: "negative.reduction",
        statement: "n ∘ r = horn(n) ∘ not r",
        expected: Expected::Law,
        variables: &[N, R],
        check: |x| {
            let (n, r) = (x.get("n"), x.get("r"));
            Ok(c(n, r)? == c(&n.hornify(), &negate_program(r))?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "negative.closed",
        statement: "n ∘ m is negative",
        expected: Expected::NonLaw,
        variables: &[N, M],
        check: |x| Ok(c(x.get("n"), x.get("m"))?.is_negative()),
        witness: &[("n", "a :- not a."), ("m", "a :- not a.")],
        cost: 1,
    },
    Law {
        id: "negation.unit",
        statement: "not p = (not 1) ∘ p",
        expected: Expected::Law,
        variables: &[P],
        check: |x| Ok(negate_program(x.get("p")) == c(&not_one(x), x.get("p"))?),
        witness: &[],
        cost: 1,
    },
    Law {
        id: "negation.compose",
        statement: "not (p ∘ r) = (not p) ∘ r",
        expected: Expected::NonLaw,
        variables: &[P, R],
        check: |x| {
            let (p, r) = (x.get("p"), x.get("r"));
            Ok(negate_program(&c(p, r)?) == c(&negate_program(p), r)?)
        },
        witness: &[("p", "a :- not b."), ("r", "b. b :- a.")],
        cost: 1,
    },
    Law {
        id: "permutation.inverse",
        statement: "pi ∘ dual(pi) = dual(pi) ∘ pi = 1",
        expected: Expected::Law,
        variables: &[PI],
        check: |x| {
            let pi = x.get("pi");
            let d = pi.dual_of()?;
            Ok(c(pi, &d)? == one(x) && c(&d, pi)? == one(x))
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "permutation.renaming",
        statement: "(pi ∘ p) ∘ dual(pi) renames every atom of p by pi",
        expected: Expected::Law,
        variables: &[PI, P],
        check: |x| {
            let map = permutation_map(x.get("pi"));
            let p = x.get("p");
            Ok(rename(x.get("pi"), p)? == p.rename(|a| map[&a]))
        },
        witness: &[],
        cost: 1,
    },
    // cup
    Law {
        id: "cup.associativity",
        statement: "p ⊔ (q ⊔ r) = (p ⊔ q) ⊔ r",
        expected: Expected::Law,
        variables: &[P, Q, R],
        check: |x| {
            let (p, q, r) = (x.get("p"), x.get("q"), x.get("r"));
            Ok(cup(p, &cup(q, r)?)? == cup(&cup(p, q)?, r)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "cup.commutativity",
        statement: "p ⊔ r = r ⊔ p",
        expected: Expected::Law,
        variables: &[P, R],
        check: |x| Ok(cup(x.get("p"), x.get("r"))? == cup(x.get("r"), x.get("p"))?),
        witness: &[],
        cost: 1,
    },
    Law {
        id: "cup.unit",
        statement: "p ⊔ A = A ⊔ p = p",
        expected: Expected::Law,
        variables: &[P],
        check: |x| {
            let p = x.get("p");
            Ok(&cup(p, &all_facts(x))? == p && &cup(&all_facts(x), p)? == p)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "cup.zero",
        statement: "∅ ⊔ p = p ⊔ ∅ = ∅",
        expected: Expected::Law,
        variables: &[P],
        check: |x| Ok(cup(&empty(x), x.get("p"))?.is_empty() && cup(x.get("p"), &empty(x))?.is_empty()),
        witness: &[],
        cost: 1,
    },
    Law {
        id: "cup.right-distributivity",
        statement: "(p ∪ r) ⊔ q = (p ⊔ q) ∪ (r ⊔ q)",
        expected: Expected::Law,
        variables: &[P, R, Q],
        check: |x| {
            let (p, q, r) = (x.get("p"), x.get("q"), x.get("r"));
            Ok(cup(&u(p, r)?, q)? == u(&cup(p, q)?, &cup(r, q)?)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "cup.left-distributivity",
        statement: "q ⊔ (p ∪ r) = (q ⊔ p) ∪ (q ⊔ r)",
        expected: Expected::Law,
        variables: &[Q, P, R],
        check: |x| {
            let (p, q, r) = (x.get("p"), x.get("q"), x.get("r"));
            Ok(cup(q, &u(p, r)?)? == u(&cup(q, p)?, &cup(q, r)?)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "cup.rule-wise",
        statement: "p ⊔ r = ⋃ {s} ⊔ {t} over s ∈ p, t ∈ r",
        expected: Expected::Law,
        variables: &[P, R],
        check: |x| {
            let (p, r) = (x.get("p"), x.get("r"));
            let mut acc = empty(x);
            for s in p.iter() {
                for t in r.iter() {
                    acc = u(&acc, &cup(&single(p, s.clone()), &single(r, t.clone()))?)?;
                }
            }
            Ok(acc == cup(p, r)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "cup.rule-decomposition",
        statement: "{r} = {pos(r)} ⊔ {neg(r)} = ⊔ of its single-literal rules",
        expected: Expected::Law,
        variables: &[RULE_R],
        check: |x| {
            let p = x.get("r");
            let r = x.rule("r");
            let split = cup(&single(p, r.pos_part()), &single(p, r.neg_part()))?;
            let mut pieces = r.body().into_iter().map(|l| single(p, Rule::from_literals(r.head, [l])));
            let folded = match pieces.next() {
                None => p.clone(),
                Some(first) => pieces.try_fold(first, |acc, s| cup(&acc, &s))?,
            };
            Ok(&split == p && &folded == p)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "cup.factoring-disjoint",
        statement: "({r} ⊔ {s}) ∘ q = {r} ∘ q ⊔ {s} ∘ q when body(r) ∩ body(s) = ∅",
        expected: Expected::Law,
        variables: &[RULE_R, RULE_S, Q],
        check: |x| {
            let (rp, q) = (x.get("r"), x.get("q"));
            let r = x.rule("r");
            let s = x.rule("s");
            let r_body = r.body();
            let s = Rule::from_literals(s.head, s.body().into_iter().filter(|l| !r_body.contains(l)));
            let sp = single(rp, s);
            Ok(c(&cup(rp, &sp)?, q)? == cup(&c(rp, q)?, &c(&sp, q)?)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "cup.factoring",
        statement: "({r} ⊔ {s}) ∘ q = {r} ∘ q ⊔ {s} ∘ q",
        expected: Expected::NonLaw,
        variables: &[RULE_R, RULE_S, Q],
        check: |x| {
            let (r, s, q) = (x.get("r"), x.get("s"), x.get("q"));
            Ok(c(&cup(r, s)?, q)? == cup(&c(r, q)?, &c(s, q)?)?)
        },
        witness: &[("r", "a :- b."), ("s", "a :- b, c."), ("q", "b :- d. b :- e. c :- g.")],
        cost: 1,
    },
    Law {
        id: "cup.idempotence",
        statement: "p ⊔ p = p",
        expected: Expected::NonLaw,
        variables: &[P],
        check: |x| Ok(&cup(x.get("p"), x.get("p"))? == x.get("p")),
        witness: &[("p", "a :- b. a :- c.")],
        cost: 1,
    },
    // body editing
    Law {
        id: "bodyedit.identities",
        statement: "i⊖ ∘ i = i, i⊕ ∘ i⊖ = i⊖, i⊕ ∘ i = i",
        expected: Expected::Law,
        variables: &[I],
        check: |x| {
            let i = x.interp("i");
            let minus = ominus(&i);
            let plus = oplus(&i.atoms().iter().map(|&a| Literal::pos(a)).collect(), i.alphabet())?;
            Ok(c(&minus, &facts(&i))? == facts(&i) && c(&plus, &minus)? == minus && c(&plus, &facts(&i))? == facts(&i))
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "bodyedit.removal",
        statement: "h ∘ i⊖ deletes the atoms of i from every body of Horn h",
        expected: Expected::Law,
        variables: &[H, I],
        check: |x| {
            let (h, i) = (x.get("h"), x.interp("i"));
            let expected = h.with_rules(
                h.iter()
                    .map(|r| Rule::new(r.head, r.pos.difference(i.atoms()).copied(), [])),
            );
            Ok(c(h, &ominus(&i))? == expected)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "bodyedit.addition",
        statement: "h ∘ B⊕ adds B to every proper rule body of Horn h",
        expected: Expected::Law,
        variables: &[H, RULE_R],
        check: |x| {
            let h = x.get("h");
            let b = x.rule("r").body();
            let expected = h.with_rules(h.iter().map(|r| {
                if r.is_fact() {
                    r.clone()
                } else {
                    Rule::from_literals(r.head, r.body().into_iter().chain(b.iter().copied()))
                }
            }));
            Ok(c(h, &oplus(&b, &h.alphabet().clone())?)? == expected)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "bodyedit.negative-removal",
        statement: "n ∘ 1^(A-i) deletes the negated atoms of i from every body of negative n",
        expected: Expected::Law,
        variables: &[N, I],
        check: |x| {
            let (n, i) = (x.get("n"), x.interp("i"));
            let expected = n.with_rules(
                n.iter()
                    .map(|r| Rule::new(r.head, [], r.neg.difference(i.atoms()).copied())),
            );
            Ok(c(n, &unit_on(&i.complement()))? == expected)
        },
        witness: &[],
        cost: 1,
    },
    // closures
    Law {
        id: "closure.interpretation",
        statement: "i* = 1 ∪ i, i+ = i, i^ω = i",
        expected: Expected::Law,
        variables: &[I],
        check: |x| {
            let i = x.get("i");
            Ok(kleene_star(i) == u(&one(x), i)? && &kleene_plus(i) == i && omega(i) == x.interp("i"))
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "closure.power",
        statement: "p^0 = 1, p^1 = p, p^(n+1) = p^n ∘ p",
        expected: Expected::Law,
        variables: &[P],
        check: |x| {
            let p = x.get("p");
            Ok(power(p, 0) == one(x) && &power(p, 1) == p && power(p, 3) == c(&power(p, 2), p)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "closure.fact-separation",
        statement: "p = facts(p)* ∘ proper(p)",
        expected: Expected::Law,
        variables: &[P],
        check: |x| {
            let p = x.get("p");
            Ok(&c(&kleene_star(&p.facts_of()), &p.proper_of())? == p)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "closure.add-facts",
        statement: "p ∪ i = i* ∘ p",
        expected: Expected::Law,
        variables: &[P, I],
        check: |x| {
            let (p, i) = (x.get("p"), x.get("i"));
            Ok(u(p, i)? == c(&kleene_star(i), p)?)
        },
        witness: &[],
        cost: 1,
    },
    // semantics
    Law {
        id: "tp.composition",
        statement: "T_p(i) = p ∘ i",
        expected: Expected::Law,
        variables: &[P, I],
        check: |x| {
            let (p, i) = (x.get("p"), x.interp("i"));
            Ok(c(p, &facts(&i))?.as_interpretation() == Some(tp_direct(p, &i)?))
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "tp.models",
        statement: "i ⊨ p iff p ∘ i ⊆ i",
        expected: Expected::Law,
        variables: &[P, I],
        check: |x| {
            let (p, i) = (x.get("p"), x.interp("i"));
            let prefixed = c(p, &facts(&i))?.is_subset(&facts(&i));
            Ok(prefixed == entails_program(&i, p)? && prefixed == is_model(p, &i)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "tp.supported-models",
        statement: "p ∘ i = i iff p ∘ i = i ∘ p",
        expected: Expected::Law,
        variables: &[P, I],
        check: |x| {
            let (p, i) = (x.get("p"), x.get("i"));
            let pi = c(p, i)?;
            let supported = &pi == i;
            Ok(supported == (pi == c(i, p)?) && supported == is_supported_model(p, &x.interp("i"))?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "lm.omega",
        statement: "h^ω is the least fixpoint of T_h",
        expected: Expected::Law,
        variables: &[H],
        check: |x| {
            let h = x.get("h");
            Ok(omega(h) == least_fixpoint(h)? && least_model(h).is_ok())
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "as.horn",
        statement: "a Horn program has its least model as unique answer set",
        expected: Expected::Law,
        variables: &[H],
        check: |x| {
            let h = x.get("h");
            Ok(answer_sets(h)? == vec![least_model(h)?])
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "as.characterization",
        statement: "i = (gp^i)^ω iff i = LM(gp^i) iff i is a minimal model of p^i",
        expected: Expected::Law,
        variables: &[P, I],
        check: |x| {
            let (p, i) = (x.get("p"), x.interp("i"));
            let algebraic = is_answer_set_algebraic(p, &i)?;
            Ok(algebraic == is_answer_set_definitional(p, &i)? && algebraic == is_minimal_model_of_right_reduct(p, &i)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "reduct.left",
        statement: "^i p = 1^i ∘ p",
        expected: Expected::Law,
        variables: &[P, I],
        check: |x| {
            let (p, i) = (x.get("p"), x.interp("i"));
            Ok(left_reduct(p, &i)? == c(&unit_on(&i), p)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "reduct.gl-horn",
        statement: "gh^i = h",
        expected: Expected::Law,
        variables: &[H, I],
        check: |x| Ok(&gl_reduct(x.get("h"), &x.interp("i"))? == x.get("h")),
        witness: &[],
        cost: 1,
    },
    Law {
        id: "reduct.gl-negative",
        statement: "gn^i = n ∘ i",
        expected: Expected::Law,
        variables: &[N, I],
        check: |x| {
            let (n, i) = (x.get("n"), x.get("i"));
            Ok(gl_reduct(n, &x.interp("i"))? == c(n, i)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "reduct.flp-horn",
        statement: "h^i = h ∘ 1^i",
        expected: Expected::Law,
        variables: &[H, I],
        check: |x| {
            let (h, i) = (x.get("h"), x.interp("i"));
            Ok(right_reduct(h, &i)? == c(h, &unit_on(&i))?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "reduct.gl-algebraic",
        statement: "gp^i = ⋃ {pos(r)} ⊔ ({neg(r)} ∘ i) over r ∈ p",
        expected: Expected::Law,
        variables: &[P, I],
        check: |x| {
            let (p, i) = (x.get("p"), x.interp("i"));
            Ok(gl_reduct_by_composition(p, &i)? == gl_reduct(p, &i)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "reduct.flp-algebraic",
        statement: "p^i = ⋃ {pos(r)} ∘ 1^i ⊔ {neg(r)} ∘ i⊖ over r ∈ p",
        expected: Expected::Law,
        variables: &[P, I],
        check: |x| {
            let (p, i) = (x.get("p"), x.interp("i"));
            Ok(flp_reduct_by_composition(p, &i)? == right_reduct(p, &i)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "reduct.flp-hornified",
        statement: "⋃ {pos(r)} ∘ 1^i ⊔ {horn(neg(r))} ∘ 1^(A-i) over r ∈ p = horn(p^i)",
        expected: Expected::Law,
        variables: &[P, I],
        check: |x| {
            let (p, i) = (x.get("p"), x.interp("i"));
            Ok(flp_reduct_hornified(p, &i)? == right_reduct(p, &i)?.hornify())
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "reduct.flp-hornified-exact",
        statement: "⋃ {pos(r)} ∘ 1^i ⊔ {horn(neg(r))} ∘ 1^(A-i) over r ∈ p = p^i",
        expected: Expected::NonLaw,
        variables: &[P, I],
        check: |x| {
            let (p, i) = (x.get("p"), x.interp("i"));
            Ok(flp_reduct_hornified(p, &i)? == right_reduct(p, &i)?)
        },
        witness: &[("p", "a :- not b."), ("i", "#alphabet a, b.")],
        cost: 1,
    },
    Law {
        id: "reduct.distributes-union",
        statement: "left, right and GL reducts distribute over ∪",
        expected: Expected::Law,
        variables: &[P, R, I],
        check: |x| {
            let (p, r, i) = (x.get("p"), x.get("r"), x.interp("i"));
            let pr = u(p, r)?;
            Ok(left_reduct(&pr, &i)? == u(&left_reduct(p, &i)?, &left_reduct(r, &i)?)?
                && right_reduct(&pr, &i)? == u(&right_reduct(p, &i)?, &right_reduct(r, &i)?)?
                && gl_reduct(&pr, &i)? == u(&gl_reduct(p, &i)?, &gl_reduct(r, &i)?)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "reduct.distributes-cup",
        statement: "left, right and GL reducts distribute over ⊔",
        expected: Expected::Law,
        variables: &[P, R, I],
        check: |x| {
            let (p, r, i) = (x.get("p"), x.get("r"), x.interp("i"));
            let pr = cup(p, r)?;
            Ok(left_reduct(&pr, &i)? == cup(&left_reduct(p, &i)?, &left_reduct(r, &i)?)?
                && right_reduct(&pr, &i)? == cup(&right_reduct(p, &i)?, &right_reduct(r, &i)?)?
                && gl_reduct(&pr, &i)? == cup(&gl_reduct(p, &i)?, &gl_reduct(r, &i)?)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "reduct.horn-composition",
        statement: "^i(h ∘ g) = (^i h) ∘ g and (h ∘ g)^i = h ∘ g^i",
        expected: Expected::Law,
        variables: &[H, G, I],
        check: |x| {
            let (h, g, i) = (x.get("h"), x.get("g"), x.interp("i"));
            let hg = c(h, g)?;
            Ok(left_reduct(&hg, &i)? == c(&left_reduct(h, &i)?, g)?
                && right_reduct(&hg, &i)? == c(h, &right_reduct(g, &i)?)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "reduct.restriction",
        statement: "^i(h^i) = (^i h)^i",
        expected: Expected::Law,
        variables: &[H, I],
        check: |x| {
            let (h, i) = (x.get("h"), x.interp("i"));
            Ok(restrict(h, &i)? == right_reduct(&left_reduct(h, &i)?, &i)?)
        },
        witness: &[],
        cost: 1,
    },
    Law {
        id: "reduct.interpretation",
        statement: "^j i = i ∩ j and i^j = i",
        expected: Expected::Law,
        variables: &[I, J],
        check: |x| {
            let (i, j) = (x.interp("i"), x.interp("j"));
            Ok(left_reduct(&facts(&i), &j)? == facts(&i.intersection(&j)) && right_reduct(&facts(&i), &j)? == facts(&i))
        },
        witness: &[],
        cost: 1,
    },
    // equivalence
    Law {
        id: "equiv.hierarchy",
        statement: "strong ⇒ uniform ⇒ ordinary equivalence, on (p, r) and (p, p ∪ r)",
        expected: Expected::Law,
        variables: &[P, R],
        check: |x| {
            let p = x.get("p");
            for r in [x.get("r").clone(), u(p, x.get("r"))?] {
                let strong = strongly_equivalent(p, &r, &limits())?.equivalent;
                let uniform = uniformly_equivalent(p, &r, &limits())?.equivalent;
                let ordinary = equivalent(p, &r, &limits())?.equivalent;
                if (strong && !uniform) || (uniform && !ordinary) {
                    return Ok(false);
                }
            }
            Ok(true)
        },
        witness: &[],
        cost: 64,
    },
    Law {
        id: "equiv.uniform-contexts",
        statement: "uniform equivalence via i* ∘ p agrees with p ∪ i",
        expected: Expected::Law,
        variables: &[P, R],
        check: |x| {
            let (p, r) = (x.get("p"), x.get("r"));
            Ok(uniformly_equivalent(p, r, &limits())?.equivalent
                == uniformly_equivalent_definitional(p, r, &limits())?.equivalent)
        },
        witness: &[],
        cost: 64,
    },
    Law {
        id: "equiv.strong-contexts",
        statement: "q separates p and r via (gp^i ∪ gq^i)^ω iff p ∪ q and r ∪ q differ in answer sets; then p, r are not strongly equivalent",
        expected: Expected::Law,
        variables: &[P, R, Q],
        check: |x| {
            let (p, r, q) = (x.get("p"), x.get("r"), x.get("q"));
            let separated = context_distinguishes(p, r, q)?.is_some();
            let differ = !equivalent(&u(p, q)?, &u(r, q)?, &limits())?.equivalent;
            let strong = strongly_equivalent(p, r, &limits())?.equivalent;
            Ok(separated == differ && !(separated && strong))
        },
        witness: &[],
        cost: 64,
    },
    Law {
        id: "equiv.subsumption-ordinary",
        statement: "subsumption equivalence implies ordinary equivalence",
        expected: Expected::NonLaw,
        variables: &[P, R],
        check: |x| {
            let (p, r) = (x.get("p"), x.get("r"));
            Ok(!subsumption_equivalent(p, r, &limits())?.equivalent || equivalent(p, r, &limits())?.equivalent)
        },
        witness: &[("p", "a :- not a. a :- a."), ("r", "a.")],
        cost: 1,
    },
];

/// Looks up a law by id.
pub fn law(id: &str) -> Option<&'static Law> {
    LAWS.iter().find(|l| l.id == id)
}
