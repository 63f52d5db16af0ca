//! Concrete syntax for programs, interpretations, literal sets and
//! permutations.
//!
//! ```text
//! program   := (directive | rule)*
//! directive := "#alphabet" atom ("," atom)* "."
//! rule      := atom ( ":-" literal ("," literal)* )? "."
//! literal   := ["not"] atom
//! atom      := [a-z][a-zA-Z0-9_]*
//! ```
//!
//! `%` starts a comment running to the end of the line and `←` is accepted
//! in place of `:-`. The canonical serialization always starts with an
//! `#alphabet` directive (omitted only for the empty alphabet), lists rules
//! in `(head, positive body, negative body)` order and prints positive body
//! literals before negated ones.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Position, Result};
use crate::program::{is_reserved, is_valid_atom_name, Alphabet, Atom, Interpretation, Literal, Program, Rule};

/// Program text together with where it came from.
#[derive(Debug, Clone)]
pub struct SourceProgram {
    pub text: String,
    pub origin: String,
}

impl SourceProgram {
    pub fn new(text: impl Into<String>, origin: impl Into<String>) -> Self {
        SourceProgram {
            text: text.into(),
            origin: origin.into(),
        }
    }

    pub fn inline(text: impl Into<String>) -> Self {
        SourceProgram::new(text, "<inline>")
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Directive(String),
    Arrow,
    Comma,
    Dot,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Directive(s) => format!("`#{s}`"),
            Tok::Arrow => "`:-`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Span {
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    origin: &'a str,
    toks: Vec<(Tok, Span)>,
    pos: usize,
    end: Span,
}

impl<'a> Lexer<'a> {
    fn new(text: &str, origin: &'a str) -> Result<Self> {
        let mut toks = Vec::new();
        let mut chars = text.chars().peekable();
        let (mut line, mut column) = (1, 1);
        let at = |line, column| Position {
            origin: origin.to_string(),
            line,
            column,
        };
        while let Some(&c) = chars.peek() {
            let span = Span { line, column };
            let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
                let c = chars.next();
                if c == Some('\n') {
                    line += 1;
                    column = 1;
                } else {
                    column += 1;
                }
                c
            };
            match c {
                '%' => {
                    while let Some(&c) = chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        bump(&mut chars);
                    }
                }
                c if c.is_whitespace() => {
                    bump(&mut chars);
                }
                ',' | '.' | '(' | ')' | '←' => {
                    bump(&mut chars);
                    let tok = match c {
                        ',' => Tok::Comma,
                        '.' => Tok::Dot,
                        '(' => Tok::LParen,
                        ')' => Tok::RParen,
                        _ => Tok::Arrow,
                    };
                    toks.push((tok, span));
                }
                ':' => {
                    bump(&mut chars);
                    if bump(&mut chars) != Some('-') {
                        return Err(Error::Syntax {
                            at: at(span.line, span.column),
                            message: "expected `:-`".into(),
                        });
                    }
                    toks.push((Tok::Arrow, span));
                }
                '#' => {
                    bump(&mut chars);
                    let mut word = String::new();
                    while let Some(&c) = chars.peek() {
                        if !(c.is_ascii_alphanumeric() || c == '_') {
                            break;
                        }
                        word.push(c);
                        bump(&mut chars);
                    }
                    toks.push((Tok::Directive(word), span));
                }
                c if c.is_ascii_alphanumeric() || c == '_' => {
                    let mut word = String::new();
                    while let Some(&c) = chars.peek() {
                        if !(c.is_ascii_alphanumeric() || c == '_') {
                            break;
                        }
                        word.push(c);
                        bump(&mut chars);
                    }
                    toks.push((Tok::Ident(word), span));
                }
                other => {
                    return Err(Error::Syntax {
                        at: at(span.line, span.column),
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        }
        Ok(Lexer {
            origin,
            toks,
            pos: 0,
            end: Span { line, column },
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.toks.get(self.pos + offset).map(|(t, _)| t)
    }

    fn span(&self) -> Span {
        self.toks.get(self.pos).map(|(_, s)| *s).unwrap_or(self.end)
    }

    fn position(&self, span: Span) -> Position {
        Position {
            origin: self.origin.to_string(),
            line: span.line,
            column: span.column,
        }
    }

    fn next(&mut self) -> Option<(Tok, Span)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> Error {
        let found = self
            .peek()
            .map(Tok::describe)
            .unwrap_or_else(|| "end of input".to_string());
        Error::Syntax {
            at: self.position(self.span()),
            message: format!("expected {expected}, found {found}"),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn atom(&mut self) -> Result<(String, Span)> {
        match self.peek() {
            Some(Tok::Ident(name)) => {
                let name = name.clone();
                let span = self.span();
                if is_reserved(&name) {
                    return Err(Error::ReservedAtomAt {
                        at: self.position(span),
                        atom: name,
                    });
                }
                if !is_valid_atom_name(&name) {
                    return Err(Error::Syntax {
                        at: self.position(span),
                        message: format!("`{name}` is not a valid atom name"),
                    });
                }
                self.pos += 1;
                Ok((name, span))
            }
            _ => Err(self.error("an atom")),
        }
    }

    fn literal(&mut self) -> Result<(String, bool, Span)> {
        let is_not = matches!(self.peek(), Some(Tok::Ident(w)) if w == "not")
            && matches!(self.peek_at(1), Some(Tok::Ident(_)));
        if is_not {
            self.pos += 1;
            let (name, span) = self.atom()?;
            Ok((name, true, span))
        } else {
            let (name, span) = self.atom()?;
            Ok((name, false, span))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }
}

struct RawRule {
    head: (String, Span),
    body: Vec<(String, bool, Span)>,
}

/// Parses a program. The alphabet is given by the `#alphabet` directives if
/// any are present, otherwise by the atoms occurring in the text.
pub fn parse_program(src: &SourceProgram) -> Result<Program> {
    let mut lx = Lexer::new(&src.text, &src.origin)?;
    let mut declared: Option<BTreeSet<String>> = None;
    let mut raw = Vec::new();
    while !lx.at_end() {
        if let Some(Tok::Directive(name)) = lx.peek() {
            if name != "alphabet" {
                return Err(Error::Syntax {
                    at: lx.position(lx.span()),
                    message: format!("unknown directive `#{name}`"),
                });
            }
            lx.next();
            let set = declared.get_or_insert_with(BTreeSet::new);
            loop {
                set.insert(lx.atom()?.0);
                if lx.peek() == Some(&Tok::Comma) {
                    lx.next();
                } else {
                    break;
                }
            }
            lx.expect(Tok::Dot, "`,` or `.`")?;
            continue;
        }
        let head = lx.atom()?;
        let mut body = Vec::new();
        if lx.peek() == Some(&Tok::Arrow) {
            lx.next();
            loop {
                body.push(lx.literal()?);
                if lx.peek() == Some(&Tok::Comma) {
                    lx.next();
                } else {
                    break;
                }
            }
            lx.expect(Tok::Dot, "`,` or `.`")?;
        } else {
            lx.expect(Tok::Dot, "`:-` or `.`")?;
        }
        raw.push(RawRule { head, body });
    }

    let alphabet = match &declared {
        Some(set) => Alphabet::new(set.iter().cloned())?,
        None => Alphabet::new(
            raw.iter()
                .flat_map(|r| std::iter::once(r.head.0.clone()).chain(r.body.iter().map(|l| l.0.clone()))),
        )?,
    };
    let resolve = |name: &str, span: Span| {
        alphabet.lookup(name).ok_or_else(|| Error::UndeclaredAtom {
            at: lx.position(span),
            atom: name.to_string(),
        })
    };
    let mut rules = BTreeSet::new();
    for r in &raw {
        let head = resolve(&r.head.0, r.head.1)?;
        let mut body = Vec::with_capacity(r.body.len());
        for (name, negated, span) in &r.body {
            body.push(Literal {
                atom: resolve(name, *span)?,
                negated: *negated,
            });
        }
        rules.insert(Rule::from_literals(head, body));
    }
    Program::new(alphabet, rules)
}

/// Parses inline program text.
pub fn parse_str(text: &str) -> Result<Program> {
    parse_program(&SourceProgram::inline(text))
}

fn write_rule(out: &mut String, alphabet: &Alphabet, rule: &Rule) {
    out.push_str(alphabet.name(rule.head));
    if !rule.is_fact() {
        out.push_str(" :- ");
        let lits = rule
            .pos
            .iter()
            .map(|&a| alphabet.name(a).to_string())
            .chain(rule.neg.iter().map(|&a| format!("not {}", alphabet.name(a))));
        out.push_str(&lits.collect::<Vec<_>>().join(", "));
    }
    out.push('.');
}

pub fn serialize_rule(alphabet: &Alphabet, rule: &Rule) -> String {
    let mut s = String::new();
    write_rule(&mut s, alphabet, rule);
    s
}

/// Canonical text of a program; `parse_program` inverts it exactly.
pub fn serialize_program(p: &Program) -> String {
    let mut out = String::new();
    let alphabet = p.alphabet();
    if !alphabet.is_empty() {
        let _ = writeln!(out, "#alphabet {}.", alphabet.names().join(", "));
    }
    for rule in p.iter() {
        write_rule(&mut out, alphabet, rule);
        out.push('\n');
    }
    out
}

/// Rules on one line, without the alphabet directive.
pub fn inline_program(p: &Program) -> String {
    p.iter()
        .map(|r| serialize_rule(p.alphabet(), r))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Comma-separated atom names, e.g. `a, c`; empty for the empty set.
pub fn serialize_interpretation(i: &Interpretation) -> String {
    i.atoms()
        .iter()
        .map(|&a| i.alphabet().name(a))
        .collect::<Vec<_>>()
        .join(", ")
}

fn inline_lexer<'a>(text: &str, origin: &'a str) -> Result<Lexer<'a>> {
    Lexer::new(text, origin)
}

fn lookup_declared(lx: &Lexer, alphabet: &Alphabet, name: &str, span: Span) -> Result<Atom> {
    alphabet.lookup(name).ok_or_else(|| Error::UndeclaredAtom {
        at: lx.position(span),
        atom: name.to_string(),
    })
}

/// Parses a comma-separated (possibly empty) atom list over `alphabet`.
pub fn parse_interpretation(text: &str, alphabet: &Alphabet) -> Result<Interpretation> {
    let mut lx = inline_lexer(text, "<interpretation>")?;
    let mut atoms = BTreeSet::new();
    if !lx.at_end() {
        loop {
            let (name, span) = lx.atom()?;
            atoms.insert(lookup_declared(&lx, alphabet, &name, span)?);
            if lx.at_end() {
                break;
            }
            lx.expect(Tok::Comma, "`,`")?;
        }
    }
    Interpretation::new(alphabet.clone(), atoms)
}

/// Atom names listed in an interpretation text, without resolving them
/// against an alphabet.
pub fn interpretation_names(text: &str) -> Result<Vec<String>> {
    let mut lx = inline_lexer(text, "<interpretation>")?;
    let mut names = Vec::new();
    if !lx.at_end() {
        loop {
            names.push(lx.atom()?.0);
            if lx.at_end() {
                break;
            }
            lx.expect(Tok::Comma, "`,`")?;
        }
    }
    Ok(names)
}

/// Parses a comma-separated literal list such as `a, not c`.
pub fn parse_literals(text: &str, alphabet: &Alphabet) -> Result<BTreeSet<Literal>> {
    let mut lx = inline_lexer(text, "<literals>")?;
    let mut lits = BTreeSet::new();
    if !lx.at_end() {
        loop {
            let (name, negated, span) = lx.literal()?;
            lits.insert(Literal {
                atom: lookup_declared(&lx, alphabet, &name, span)?,
                negated,
            });
            if lx.at_end() {
                break;
            }
            lx.expect(Tok::Comma, "`,`")?;
        }
    }
    Ok(lits)
}

/// Literal names (with negation flags) in a literal list, unresolved.
pub fn literal_names(text: &str) -> Result<Vec<(String, bool)>> {
    let mut lx = inline_lexer(text, "<literals>")?;
    let mut out = Vec::new();
    if !lx.at_end() {
        loop {
            let (name, negated, _) = lx.literal()?;
            out.push((name, negated));
            if lx.at_end() {
                break;
            }
            lx.expect(Tok::Comma, "`,`")?;
        }
    }
    Ok(out)
}

/// Parses cycle notation such as `(a b)(c)` into cycles of atom names.
pub fn parse_cycle_names(text: &str) -> Result<Vec<Vec<String>>> {
    let mut lx = inline_lexer(text, "<permutation>")?;
    let mut cycles = Vec::new();
    while !lx.at_end() {
        lx.expect(Tok::LParen, "`(`")?;
        let mut cycle = Vec::new();
        while lx.peek() != Some(&Tok::RParen) {
            cycle.push(lx.atom()?.0);
            if lx.peek() == Some(&Tok::Comma) {
                lx.next();
            }
        }
        lx.expect(Tok::RParen, "`)`")?;
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Parses cycle notation over `alphabet`.
pub fn parse_permutation(text: &str, alphabet: &Alphabet) -> Result<Vec<Vec<Atom>>> {
    parse_cycle_names(text)?
        .into_iter()
        .map(|cycle| cycle.iter().map(|n| alphabet.atom(n)).collect())
        .collect()
}

impl std::fmt::Display for Program {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&serialize_program(self))
    }
}

impl std::fmt::Display for Interpretation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&serialize_interpretation(self))
    }
}
