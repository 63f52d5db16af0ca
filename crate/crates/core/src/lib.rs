//! The sequential-composition algebra of propositional answer set programs.
//!
//! Programs are finite sets of normal rules over a fixed finite alphabet.
//! [`compose`] provides composition, cup, negation and the Kleene
//! closures; [`semantics`] expresses reducts, least models, answer sets and
//! program equivalences both directly and through the algebra; [`lawcheck`]
//! tests the algebraic identities on random and exhaustively enumerated
//! programs.

pub mod compose;
pub mod error;
pub mod lawcheck;
pub mod program;
pub mod semantics;
pub mod textio;

pub use error::{Error, Position, Result};
pub use program::{Alphabet, Atom, AtomSet, Classification, Interpretation, Literal, Program, Rule};
pub use textio::{parse_program, parse_str, serialize_program, SourceProgram};
