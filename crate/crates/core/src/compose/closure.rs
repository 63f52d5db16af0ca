//! Powers and Kleene closures of composition.

use std::collections::{BTreeSet, HashSet};

use super::compose;
use crate::program::{Interpretation, Program, Rule};

/// Left-associated power `(((h h) h) ... ) h`; `power(h, 0)` is the unit.
pub fn power(h: &Program, n: usize) -> Program {
    let mut acc = Program::unit(h.alphabet());
    for _ in 0..n {
        acc = compose(&acc, h).expect("operands share an alphabet");
    }
    acc
}

/// Union of all distinct powers of `h`.
///
/// The power sequence is determined by its previous element and ranges
/// over a finite space, so it eventually revisits a program; at that point
/// every power has been seen.
pub fn kleene_star(h: &Program) -> Program {
    let mut seen: HashSet<BTreeSet<Rule>> = HashSet::new();
    let mut star: BTreeSet<Rule> = BTreeSet::new();
    let mut current = Program::unit(h.alphabet());
    while seen.insert(current.rules().clone()) {
        star.extend(current.rules().iter().cloned());
        current = compose(&current, h).expect("operands share an alphabet");
    }
    h.with_rules(star)
}

/// `h^+ = h^* ∘ h`.
pub fn kleene_plus(h: &Program) -> Program {
    compose(&kleene_star(h), h).expect("operands share an alphabet")
}

/// `h^ω = h^+ ∘ ∅`. For Horn `h` these are exactly the facts of `h^+`.
pub fn omega(h: &Program) -> Interpretation {
    let empty = Program::empty(h.alphabet().clone());
    compose(&kleene_plus(h), &empty)
        .expect("operands share an alphabet")
        .as_interpretation()
        .expect("composition with an interpretation yields facts")
}
