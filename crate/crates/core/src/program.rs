//! Atoms, literals, rules, programs and interpretations over a finite alphabet.
//!
//! Atoms are indices into an [`Alphabet`], whose names are kept sorted so
//! that index order coincides with lexicographic name order. Every program
//! and interpretation carries its alphabet; binary operations on values
//! over different alphabets fail with [`Error::AlphabetMismatch`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// An atom, identified by its position in the governing alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(pub(crate) u32);

impl Atom {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

pub type AtomSet = BTreeSet<Atom>;

/// Returns whether `name` matches `[a-z][a-zA-Z0-9_]*`.
pub fn is_valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn is_reserved(name: &str) -> bool {
    name == "t" || name == "f"
}

/// A finite, lexicographically ordered set of atom names.
#[derive(Clone)]
pub struct Alphabet(Arc<[String]>);

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut set = BTreeSet::new();
        for name in names {
            let name = name.into();
            if is_reserved(&name) {
                return Err(Error::ReservedAtom(name));
            }
            if !is_valid_atom_name(&name) {
                return Err(Error::InvalidAtom(name));
            }
            set.insert(name);
        }
        Ok(Alphabet(set.into_iter().collect::<Vec<_>>().into()))
    }

    pub fn empty() -> Self {
        Alphabet(Vec::new().into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        (0..self.0.len() as u32).map(Atom)
    }

    pub fn all_atoms(&self) -> AtomSet {
        self.atoms().collect()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    /// Name of `atom`. Panics if the atom does not belong to this alphabet.
    pub fn name(&self, atom: Atom) -> &str {
        &self.0[atom.index()]
    }

    pub fn lookup(&self, name: &str) -> Option<Atom> {
        self.0
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
            .map(|i| Atom(i as u32))
    }

    pub fn atom(&self, name: &str) -> Result<Atom> {
        self.lookup(name)
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }

    pub fn contains(&self, atom: Atom) -> bool {
        atom.index() < self.0.len()
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        if self == other {
            return self.clone();
        }
        let set: BTreeSet<&String> = self.0.iter().chain(other.0.iter()).collect();
        Alphabet(set.into_iter().cloned().collect::<Vec<_>>().into())
    }

    /// Whether every name of `other` also occurs in `self`.
    pub fn includes(&self, other: &Alphabet) -> bool {
        other.0.iter().all(|n| self.lookup(n).is_some())
    }

    pub(crate) fn check_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// Index map from atoms of `self` into `target`, which must include `self`.
    fn embedding(&self, target: &Alphabet) -> Result<Vec<Atom>> {
        self.0
            .iter()
            .map(|n| target.atom(n).map_err(|_| Error::AlphabetMismatch))
            .collect()
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Alphabet {}

impl Hash for Alphabet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// `a` or `not a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub negated: bool,
}

impl Literal {
    pub fn pos(atom: Atom) -> Self {
        Literal {
            atom,
            negated: false,
        }
    }

    pub fn neg(atom: Atom) -> Self {
        Literal {
            atom,
            negated: true,
        }
    }
}

/// `head <- pos_body, not neg_body`.
///
/// Bodies are sets. A rule may mention the same atom positively and
/// negatively; such a rule never fires but is kept verbatim.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    pub head: Atom,
    pub pos: AtomSet,
    pub neg: AtomSet,
}

impl Rule {
    pub fn new(head: Atom, pos: impl IntoIterator<Item = Atom>, neg: impl IntoIterator<Item = Atom>) -> Self {
        Rule {
            head,
            pos: pos.into_iter().collect(),
            neg: neg.into_iter().collect(),
        }
    }

    pub fn fact(head: Atom) -> Self {
        Rule {
            head,
            pos: AtomSet::new(),
            neg: AtomSet::new(),
        }
    }

    pub fn from_literals(head: Atom, body: impl IntoIterator<Item = Literal>) -> Self {
        let mut rule = Rule::fact(head);
        for lit in body {
            if lit.negated {
                rule.neg.insert(lit.atom);
            } else {
                rule.pos.insert(lit.atom);
            }
        }
        rule
    }

    pub fn is_fact(&self) -> bool {
        self.pos.is_empty() && self.neg.is_empty()
    }

    /// Number of body literals.
    pub fn size(&self) -> usize {
        self.pos.len() + self.neg.len()
    }

    pub fn is_horn(&self) -> bool {
        self.neg.is_empty()
    }

    pub fn is_negative(&self) -> bool {
        self.pos.is_empty()
    }

    pub fn is_krom_horn(&self) -> bool {
        self.neg.is_empty() && self.pos.len() <= 1
    }

    pub fn body(&self) -> BTreeSet<Literal> {
        self.pos
            .iter()
            .map(|&a| Literal::pos(a))
            .chain(self.neg.iter().map(|&a| Literal::neg(a)))
            .collect()
    }

    pub fn pos_part(&self) -> Rule {
        Rule {
            head: self.head,
            pos: self.pos.clone(),
            neg: AtomSet::new(),
        }
    }

    pub fn neg_part(&self) -> Rule {
        Rule {
            head: self.head,
            pos: AtomSet::new(),
            neg: self.neg.clone(),
        }
    }

    /// All body atoms made positive.
    pub fn hornify(&self) -> Rule {
        Rule {
            head: self.head,
            pos: self.pos.union(&self.neg).copied().collect(),
            neg: AtomSet::new(),
        }
    }

    fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        std::iter::once(self.head)
            .chain(self.pos.iter().copied())
            .chain(self.neg.iter().copied())
    }

    fn map_atoms(&self, f: impl Fn(Atom) -> Atom) -> Rule {
        Rule {
            head: f(self.head),
            pos: self.pos.iter().map(|&a| f(a)).collect(),
            neg: self.neg.iter().map(|&a| f(a)).collect(),
        }
    }
}

/// Syntactic class flags of a program.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub horn: bool,
    pub negative: bool,
    pub krom_horn: bool,
    pub minimalistic: bool,
}

/// A finite set of rules over an alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Program {
    alphabet: Alphabet,
    rules: BTreeSet<Rule>,
}

impl Program {
    pub fn new(alphabet: Alphabet, rules: impl IntoIterator<Item = Rule>) -> Result<Self> {
        let rules: BTreeSet<Rule> = rules.into_iter().collect();
        for rule in &rules {
            if let Some(bad) = rule.atoms().find(|&a| !alphabet.contains(a)) {
                return Err(Error::UnknownAtom(format!("#{}", bad.0)));
            }
        }
        Ok(Program { alphabet, rules })
    }

    /// Builds a program whose rules are known to range over `alphabet`.
    pub(crate) fn from_parts(alphabet: Alphabet, rules: BTreeSet<Rule>) -> Self {
        debug_assert!(rules
            .iter()
            .all(|r| r.atoms().all(|a| alphabet.contains(a))));
        Program { alphabet, rules }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Program {
            alphabet,
            rules: BTreeSet::new(),
        }
    }

    /// The fact program `{a | a in atoms}`.
    pub fn from_facts(alphabet: Alphabet, atoms: impl IntoIterator<Item = Atom>) -> Self {
        let rules = atoms.into_iter().map(Rule::fact).collect();
        Program::from_parts(alphabet, rules)
    }

    /// The unit program `{a <- a | a in A}`.
    pub fn unit(alphabet: &Alphabet) -> Self {
        Program::unit_on(alphabet, alphabet.atoms())
    }

    /// The unit program restricted to `atoms`.
    pub fn unit_on(alphabet: &Alphabet, atoms: impl IntoIterator<Item = Atom>) -> Self {
        let rules = atoms.into_iter().map(|a| Rule::new(a, [a], [])).collect();
        Program::from_parts(alphabet.clone(), rules)
    }

    /// The program `{pi(a) <- a | a in A}` for a permutation given in cycle
    /// notation. Atoms not mentioned in any cycle are fixed points.
    pub fn permutation(alphabet: &Alphabet, cycles: &[Vec<Atom>]) -> Result<Self> {
        let mut image: BTreeMap<Atom, Atom> = BTreeMap::new();
        let mut seen = AtomSet::new();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if !alphabet.contains(a) {
                    return Err(Error::NotBijective(format!("atom #{} outside alphabet", a.0)));
                }
                if !seen.insert(a) {
                    return Err(Error::NotBijective(format!(
                        "`{}` occurs more than once",
                        alphabet.name(a)
                    )));
                }
                image.insert(a, cycle[(i + 1) % cycle.len()]);
            }
        }
        let rules = alphabet
            .atoms()
            .map(|a| {
                let pa = image.get(&a).copied().unwrap_or(a);
                Rule::new(pa, [a], [])
            })
            .collect();
        Ok(Program::from_parts(alphabet.clone(), rules))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &BTreeSet<Rule> {
        &self.rules
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn contains(&self, rule: &Rule) -> bool {
        self.rules.contains(rule)
    }

    pub fn is_subset(&self, other: &Program) -> bool {
        self.rules.is_subset(&other.rules)
    }

    pub fn with_rules(&self, rules: impl IntoIterator<Item = Rule>) -> Program {
        Program::from_parts(self.alphabet.clone(), rules.into_iter().collect())
    }

    fn map_rules(&self, f: impl Fn(&Rule) -> Rule) -> Program {
        self.with_rules(self.rules.iter().map(f))
    }

    pub fn head_of(&self) -> AtomSet {
        self.rules.iter().map(|r| r.head).collect()
    }

    pub fn body_of(&self) -> BTreeSet<Literal> {
        self.rules.iter().flat_map(|r| r.body()).collect()
    }

    pub fn pos_part(&self) -> Program {
        self.map_rules(Rule::pos_part)
    }

    pub fn neg_part(&self) -> Program {
        self.map_rules(Rule::neg_part)
    }

    pub fn hornify(&self) -> Program {
        self.map_rules(Rule::hornify)
    }

    pub fn facts_of(&self) -> Program {
        self.with_rules(self.rules.iter().filter(|r| r.is_fact()).cloned())
    }

    pub fn proper_of(&self) -> Program {
        self.with_rules(self.rules.iter().filter(|r| !r.is_fact()).cloned())
    }

    pub fn is_horn(&self) -> bool {
        self.rules.iter().all(Rule::is_horn)
    }

    pub fn is_negative(&self) -> bool {
        self.rules.iter().all(Rule::is_negative)
    }

    pub fn is_krom_horn(&self) -> bool {
        self.rules.iter().all(Rule::is_krom_horn)
    }

    pub fn is_minimalistic(&self) -> bool {
        self.head_of().len() == self.rules.len()
    }

    pub fn classify(&self) -> Classification {
        Classification {
            horn: self.is_horn(),
            negative: self.is_negative(),
            krom_horn: self.is_krom_horn(),
            minimalistic: self.is_minimalistic(),
        }
    }

    pub(crate) fn require_horn(&self, what: &str) -> Result<()> {
        if self.is_horn() {
            Ok(())
        } else {
            Err(Error::NotHorn(what.to_string()))
        }
    }

    /// Reverses the arrows of the proper rules of a Horn program.
    pub fn dual_of(&self) -> Result<Program> {
        self.require_horn("dual is defined for Horn programs only")?;
        let mut rules: BTreeSet<Rule> = self.facts_of().rules;
        for r in self.rules.iter().filter(|r| !r.is_fact()) {
            for &b in &r.pos {
                rules.insert(Rule::new(b, [r.head], []));
            }
        }
        Ok(Program::from_parts(self.alphabet.clone(), rules))
    }

    pub fn union(&self, other: &Program) -> Result<Program> {
        self.alphabet.check_same(&other.alphabet)?;
        Ok(self.with_rules(self.rules.union(&other.rules).cloned()))
    }

    /// Applies an atom mapping (typically a permutation) to every head and body atom.
    pub fn rename(&self, f: impl Fn(Atom) -> Atom) -> Program {
        self.map_rules(|r| r.map_atoms(&f))
    }

    /// Re-expresses the program over a larger alphabet with the same atom names.
    pub fn rehome(&self, target: &Alphabet) -> Result<Program> {
        if &self.alphabet == target {
            return Ok(self.clone());
        }
        let map = self.alphabet.embedding(target)?;
        let rules = self
            .rules
            .iter()
            .map(|r| r.map_atoms(|a| map[a.index()]))
            .collect();
        Ok(Program::from_parts(target.clone(), rules))
    }

    /// The interpretation this program denotes, if it consists of facts only.
    pub fn as_interpretation(&self) -> Option<Interpretation> {
        if self.rules.iter().all(Rule::is_fact) {
            Some(Interpretation {
                alphabet: self.alphabet.clone(),
                atoms: self.head_of(),
            })
        } else {
            None
        }
    }
}

impl fmt::Debug for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Program {{ {} }}", crate::textio::inline_program(self))
    }
}

/// A subset of the alphabet; doubles as the program of its facts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interpretation {
    alphabet: Alphabet,
    atoms: AtomSet,
}

impl Interpretation {
    pub fn new(alphabet: Alphabet, atoms: impl IntoIterator<Item = Atom>) -> Result<Self> {
        let atoms: AtomSet = atoms.into_iter().collect();
        if let Some(bad) = atoms.iter().find(|a| !alphabet.contains(**a)) {
            return Err(Error::UnknownAtom(format!("#{}", bad.0)));
        }
        Ok(Interpretation { alphabet, atoms })
    }

    pub(crate) fn from_parts(alphabet: Alphabet, atoms: AtomSet) -> Self {
        Interpretation { alphabet, atoms }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Interpretation {
            alphabet,
            atoms: AtomSet::new(),
        }
    }

    pub fn full(alphabet: Alphabet) -> Self {
        let atoms = alphabet.all_atoms();
        Interpretation { alphabet, atoms }
    }

    /// The interpretation whose atoms are the set bits of `mask`.
    pub fn from_mask(alphabet: &Alphabet, mask: u64) -> Self {
        let atoms = alphabet
            .atoms()
            .filter(|a| a.index() < 64 && mask & (1 << a.index()) != 0)
            .collect();
        Interpretation {
            alphabet: alphabet.clone(),
            atoms,
        }
    }

    /// Every subset of the alphabet, in canonical (lexicographic) order.
    pub fn all(alphabet: &Alphabet) -> Vec<Interpretation> {
        assert!(alphabet.len() < 64, "alphabet too large to enumerate");
        let mut all: Vec<_> = (0..1u64 << alphabet.len())
            .map(|m| Interpretation::from_mask(alphabet, m))
            .collect();
        all.sort();
        all
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn atoms(&self) -> &AtomSet {
        &self.atoms
    }

    pub fn contains(&self, atom: Atom) -> bool {
        self.atoms.contains(&atom)
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.atoms.is_subset(&other.atoms)
    }

    /// `A - I`.
    pub fn complement(&self) -> Interpretation {
        let atoms = self
            .alphabet
            .atoms()
            .filter(|a| !self.atoms.contains(a))
            .collect();
        Interpretation {
            alphabet: self.alphabet.clone(),
            atoms,
        }
    }

    pub fn intersection(&self, other: &Interpretation) -> Interpretation {
        Interpretation {
            alphabet: self.alphabet.clone(),
            atoms: self.atoms.intersection(&other.atoms).copied().collect(),
        }
    }

    pub fn union(&self, other: &Interpretation) -> Interpretation {
        Interpretation {
            alphabet: self.alphabet.clone(),
            atoms: self.atoms.union(&other.atoms).copied().collect(),
        }
    }

    pub fn to_program(&self) -> Program {
        Program::from_facts(self.alphabet.clone(), self.atoms.iter().copied())
    }

    pub fn rehome(&self, target: &Alphabet) -> Result<Interpretation> {
        let map = self.alphabet.embedding(target)?;
        Ok(Interpretation {
            alphabet: target.clone(),
            atoms: self.atoms.iter().map(|a| map[a.index()]).collect(),
        })
    }
}

impl PartialOrd for Interpretation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Interpretation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.atoms.cmp(&other.atoms)
    }
}

impl fmt::Debug for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", crate::textio::serialize_interpretation(self))
    }
}

impl From<&Interpretation> for Program {
    fn from(i: &Interpretation) -> Program {
        i.to_program()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_str;

    fn prog(src: &str) -> Program {
        parse_str(src).unwrap()
    }

    fn example_r() -> Program {
        prog("#alphabet a, b, c, d.\nb :- not c, not d.\nb :- c, d.\n")
    }

    #[test]
    fn alphabet_is_sorted_and_deduplicated() {
        let a = Alphabet::new(["c", "a", "b", "a"]).unwrap();
        assert_eq!(a.names(), ["a", "b", "c"]);
        assert_eq!(a.lookup("b"), Some(Atom(1)));
        assert!(matches!(Alphabet::new(["t"]), Err(Error::ReservedAtom(_))));
        assert!(matches!(Alphabet::new(["f"]), Err(Error::ReservedAtom(_))));
        assert!(matches!(Alphabet::new(["Xy"]), Err(Error::InvalidAtom(_))));
    }

    #[test]
    fn heads_and_bodies() {
        let p = prog("a :- b.\nb :- not c.");
        let a = p.alphabet().clone();
        assert_eq!(p.head_of(), [a.atom("a").unwrap(), a.atom("b").unwrap()].into());
        assert!(Program::empty(a.clone()).head_of().is_empty());

        let r = example_r();
        let ra = r.alphabet().clone();
        let at = |n| ra.atom(n).unwrap();
        assert_eq!(r.head_of(), [at("b")].into());
        let body: BTreeSet<Literal> = [
            Literal::neg(at("c")),
            Literal::neg(at("d")),
            Literal::pos(at("c")),
            Literal::pos(at("d")),
        ]
        .into();
        assert_eq!(r.body_of(), body);

        let p = prog("a :- b, not c.");
        let at = |n| p.alphabet().atom(n).unwrap();
        assert_eq!(p.body_of(), [Literal::pos(at("b")), Literal::neg(at("c"))].into());
        assert!(prog("a. b.").body_of().is_empty());
    }

    #[test]
    fn parts_and_hornification() {
        let p = prog("#alphabet a, b, c.\na :- b, not c.");
        assert_eq!(p.pos_part(), prog("#alphabet a, b, c.\na :- b."));
        assert_eq!(p.neg_part(), prog("#alphabet a, b, c.\na :- not c."));
        assert_eq!(p.hornify(), prog("#alphabet a, b, c.\na :- b, c."));
    }

    #[test]
    fn facts_and_proper_partition() {
        let p = prog("a.\nb :- a.");
        assert_eq!(p.facts_of(), prog("#alphabet a, b.\na."));
        assert_eq!(p.proper_of(), prog("b :- a."));
        let facts = prog("a. b.");
        assert_eq!(facts.facts_of(), facts);
        assert!(facts.proper_of().is_empty());
        let empty = Program::empty(Alphabet::empty());
        assert!(empty.facts_of().is_empty() && empty.proper_of().is_empty());
    }

    #[test]
    fn rule_size_counts_distinct_literals() {
        let p = prog("a :- b, not c.\nd.\ne :- b, c, not b.");
        let sizes: Vec<usize> = p.iter().map(Rule::size).collect();
        // rules sorted by head: a, d, e
        assert_eq!(sizes, vec![2, 0, 3]);
    }

    #[test]
    fn dual_reverses_proper_rules() {
        let h = prog("a :- b, c.");
        assert_eq!(h.dual_of().unwrap(), prog("#alphabet a, b, c.\nb :- a.\nc :- a."));
        let h = prog("a.\nb :- a.");
        assert_eq!(h.dual_of().unwrap(), prog("a.\na :- b."));
        assert!(matches!(prog("a :- not b.").dual_of(), Err(Error::NotHorn(_))));
    }

    #[test]
    fn dual_of_transposition_is_itself() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let pi = Program::permutation(&a, &[vec![Atom(0), Atom(1)]]).unwrap();
        let inv = Program::permutation(&a, &[vec![Atom(1), Atom(0)]]).unwrap();
        assert_eq!(pi.dual_of().unwrap(), inv);
    }

    #[test]
    fn classification() {
        let c = prog("a :- b.").classify();
        assert!(c.horn && c.krom_horn && c.minimalistic && !c.negative);
        let c = prog("a :- not b.").classify();
        assert!(c.negative && c.minimalistic && !c.horn && !c.krom_horn);
        let c = example_r().classify();
        assert!(!c.horn && !c.negative && !c.minimalistic);
        let c = prog("a.").classify();
        assert!(c.horn && c.negative);
    }

    #[test]
    fn unit_programs() {
        let a = Alphabet::new(["a"]).unwrap();
        assert_eq!(Program::unit(&a), prog("a :- a."));
        let ab = Alphabet::new(["a", "b"]).unwrap();
        assert_eq!(Program::unit(&ab), prog("a :- a.\nb :- b."));
        assert!(Program::unit(&Alphabet::empty()).is_empty());
        assert!(Program::unit(&ab).classify().krom_horn);
    }

    #[test]
    fn permutation_programs() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let pi = Program::permutation(&ab, &[vec![Atom(0), Atom(1)]]).unwrap();
        assert_eq!(pi, prog("a :- b.\nb :- a."));
        let abc = Alphabet::new(["a", "b", "c"]).unwrap();
        let pi = Program::permutation(&abc, &[vec![Atom(0), Atom(1)], vec![Atom(2)]]).unwrap();
        assert_eq!(pi, prog("a :- b.\nb :- a.\nc :- c."));
        assert_eq!(Program::permutation(&abc, &[]).unwrap(), Program::unit(&abc));
        assert!(matches!(
            Program::permutation(&abc, &[vec![Atom(0), Atom(1)], vec![Atom(1)]]),
            Err(Error::NotBijective(_))
        ));
    }

    #[test]
    fn rehome_preserves_names() {
        let p = prog("a :- not c.");
        let big = Alphabet::new(["a", "b", "c"]).unwrap();
        let q = p.rehome(&big).unwrap();
        assert_eq!(q, prog("#alphabet a, b, c.\na :- not c."));
        assert_eq!(
            prog("a :- b.").rehome(&Alphabet::new(["a"]).unwrap()),
            Err(Error::AlphabetMismatch)
        );
    }
}
