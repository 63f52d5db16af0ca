//! Program negation: the `tf`, disjunction and overline stages.
//!
//! `not P` is computed by making truth values explicit (`tf`), merging all
//! bodies of each head into one disjunctive rule, negating every disjunct
//! into a disjunction of complemented literals, distributing the resulting
//! conjunction of disjunctions back into plain rules and finally removing
//! the truth constants again (overline).

use std::collections::{BTreeMap, BTreeSet};

use crate::program::{Alphabet, Atom, AtomSet, Literal, Program, Rule};

/// A body element of an intermediate rule: a literal or a truth constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtLiteral {
    True,
    False,
    Lit(Literal),
}

impl ExtLiteral {
    /// `not t = f`, `not f = t`, `not a = not a`, `not not a = a`.
    pub fn negate(self) -> ExtLiteral {
        match self {
            ExtLiteral::True => ExtLiteral::False,
            ExtLiteral::False => ExtLiteral::True,
            ExtLiteral::Lit(l) => ExtLiteral::Lit(Literal {
                atom: l.atom,
                negated: !l.negated,
            }),
        }
    }
}

/// A rule whose body may contain truth constants.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtRule {
    pub head: Atom,
    pub body: BTreeSet<ExtLiteral>,
}

impl ExtRule {
    pub fn new(head: Atom, body: impl IntoIterator<Item = ExtLiteral>) -> Self {
        ExtRule {
            head,
            body: body.into_iter().collect(),
        }
    }

    fn from_rule(rule: &Rule) -> Self {
        ExtRule::new(rule.head, rule.body().into_iter().map(ExtLiteral::Lit))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtProgram {
    pub alphabet: Alphabet,
    pub rules: BTreeSet<ExtRule>,
}

impl ExtProgram {
    pub fn from_program(p: &Program) -> Self {
        ExtProgram {
            alphabet: p.alphabet().clone(),
            rules: p.iter().map(ExtRule::from_rule).collect(),
        }
    }
}

/// `head <- B_1 v ... v B_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrRule {
    pub head: Atom,
    pub disjuncts: Vec<BTreeSet<ExtLiteral>>,
}

/// One disjunctive rule per head atom, in head order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrProgram {
    pub alphabet: Alphabet,
    pub rules: Vec<OrRule>,
}

/// Replaces every fact `a` by `a <- t` and adds `a <- f` for every atom
/// that heads no rule.
pub fn tf_transform(p: &Program) -> ExtProgram {
    let heads = p.head_of();
    let mut rules = BTreeSet::new();
    for rule in p.iter() {
        if rule.is_fact() {
            rules.insert(ExtRule::new(rule.head, [ExtLiteral::True]));
        } else {
            rules.insert(ExtRule::from_rule(rule));
        }
    }
    for a in p.alphabet().atoms().filter(|a| !heads.contains(a)) {
        rules.insert(ExtRule::new(a, [ExtLiteral::False]));
    }
    ExtProgram {
        alphabet: p.alphabet().clone(),
        rules,
    }
}

/// Collects the bodies of all rules sharing a head into one disjunction.
pub fn or_transform(p: &ExtProgram) -> OrProgram {
    let mut by_head: BTreeMap<Atom, Vec<BTreeSet<ExtLiteral>>> = BTreeMap::new();
    for rule in &p.rules {
        by_head.entry(rule.head).or_default().push(rule.body.clone());
    }
    OrProgram {
        alphabet: p.alphabet.clone(),
        rules: by_head
            .into_iter()
            .map(|(head, disjuncts)| OrRule { head, disjuncts })
            .collect(),
    }
}

/// Deletes `t` from every body and drops every rule whose body contains `f`.
pub fn overline(p: &ExtProgram) -> Program {
    let rules = p
        .rules
        .iter()
        .filter(|r| !r.body.contains(&ExtLiteral::False))
        .map(|r| {
            Rule::from_literals(
                r.head,
                r.body.iter().filter_map(|l| match l {
                    ExtLiteral::Lit(l) => Some(*l),
                    _ => None,
                }),
            )
        });
    p_with(&p.alphabet, rules)
}

fn p_with(alphabet: &Alphabet, rules: impl IntoIterator<Item = Rule>) -> Program {
    Program::empty(alphabet.clone()).with_rules(rules)
}

/// Negation of one disjunctive rule by De Morgan and distribution, keeping
/// truth constants. Every result body picks one complemented literal from
/// each disjunct.
pub fn negate_or_rule(rule: &OrRule) -> BTreeSet<ExtRule> {
    let mut partial: BTreeSet<BTreeSet<ExtLiteral>> = BTreeSet::from([BTreeSet::new()]);
    for disjunct in &rule.disjuncts {
        let mut next = BTreeSet::new();
        for body in &partial {
            for lit in disjunct {
                let mut extended = body.clone();
                extended.insert(lit.negate());
                next.insert(extended);
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|body| ExtRule { head: rule.head, body })
        .collect()
}

/// Negation of one disjunctive rule with overline applied while
/// distributing: branches that pick `f` are pruned, `t` is dropped.
fn negate_or_rule_reduced(rule: &OrRule, out: &mut BTreeSet<Rule>) {
    let mut partial: BTreeSet<(AtomSet, AtomSet)> = BTreeSet::from([(AtomSet::new(), AtomSet::new())]);
    for disjunct in &rule.disjuncts {
        let mut next = BTreeSet::new();
        for (pos, neg) in &partial {
            for lit in disjunct {
                match lit.negate() {
                    ExtLiteral::False => {}
                    ExtLiteral::True => {
                        next.insert((pos.clone(), neg.clone()));
                    }
                    ExtLiteral::Lit(l) => {
                        let (mut pos, mut neg) = (pos.clone(), neg.clone());
                        if l.negated {
                            neg.insert(l.atom);
                        } else {
                            pos.insert(l.atom);
                        }
                        next.insert((pos, neg));
                    }
                }
            }
        }
        if next.is_empty() {
            return;
        }
        partial = next;
    }
    out.extend(partial.into_iter().map(|(pos, neg)| Rule {
        head: rule.head,
        pos,
        neg,
    }));
}

/// `not P`: overline of the negation of every rule of `tf(P)` in
/// disjunctive form. Depends on the alphabet of `p`.
pub fn negate_program(p: &Program) -> Program {
    let or = or_transform(&tf_transform(p));
    let mut rules = BTreeSet::new();
    for rule in &or.rules {
        negate_or_rule_reduced(rule, &mut rules);
    }
    p_with(p.alphabet(), rules)
}

fn format_body(alphabet: &Alphabet, body: &BTreeSet<ExtLiteral>) -> String {
    // positive literals first, then negated ones, then constants
    let mut lits: Vec<&ExtLiteral> = body.iter().collect();
    lits.sort_by_key(|l| match l {
        ExtLiteral::Lit(l) => (l.negated as u8, Some(l.atom)),
        ExtLiteral::True => (2, None),
        ExtLiteral::False => (3, None),
    });
    lits.into_iter()
        .map(|l| match l {
            ExtLiteral::True => "t".to_string(),
            ExtLiteral::False => "f".to_string(),
            ExtLiteral::Lit(l) if l.negated => format!("not {}", alphabet.name(l.atom)),
            ExtLiteral::Lit(l) => alphabet.name(l.atom).to_string(),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Canonical text of an intermediate program, with `t` and `f` for the
/// truth constants.
pub fn serialize_ext_program(p: &ExtProgram) -> String {
    let mut out = String::new();
    if !p.alphabet.is_empty() {
        out.push_str(&format!("#alphabet {}.\n", p.alphabet.names().join(", ")));
    }
    for r in &p.rules {
        out.push_str(p.alphabet.name(r.head));
        if !r.body.is_empty() {
            out.push_str(" :- ");
            out.push_str(&format_body(&p.alphabet, &r.body));
        }
        out.push_str(".\n");
    }
    out
}

/// Canonical text of a disjunctive program, e.g. `b :- {c, d} | {not c, not d}.`
pub fn serialize_or_program(p: &OrProgram) -> String {
    let mut out = String::new();
    for r in &p.rules {
        let bodies: Vec<String> = r
            .disjuncts
            .iter()
            .map(|b| format!("{{{}}}", format_body(&p.alphabet, b)))
            .collect();
        out.push_str(&format!("{} :- {}.\n", p.alphabet.name(r.head), bodies.join(" | ")));
    }
    out
}
