use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::program::{Alphabet, Atom, Interpretation, Literal, Program, Rule};

/// Atom names used for generated alphabets, skipping the reserved `f`.
pub const ATOM_NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "g"];

/// The first `n` names of [`ATOM_NAMES`].
pub fn standard_alphabet(n: usize) -> Result<Alphabet> {
    if n > ATOM_NAMES.len() {
        return Err(Error::InvalidConfig(format!(
            "alphabet size {n} exceeds {}",
            ATOM_NAMES.len()
        )));
    }
    Alphabet::new(ATOM_NAMES[..n].iter().copied())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub alphabet_size: usize,
    pub max_rules: usize,
    pub max_body: usize,
    pub negative_literal_probability: f64,
    pub seed: u64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            alphabet_size: 3,
            max_rules: 5,
            max_body: 3,
            negative_literal_probability: 0.3,
            seed: 0,
        }
    }
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1..=ATOM_NAMES.len()).contains(&self.alphabet_size) {
            return Err(Error::InvalidConfig(format!(
                "alphabet size must be in 1..={}, got {}",
                ATOM_NAMES.len(),
                self.alphabet_size
            )));
        }
        if !(0.0..=1.0).contains(&self.negative_literal_probability) {
            return Err(Error::InvalidConfig(format!(
                "negative literal probability {} is outside [0, 1]",
                self.negative_literal_probability
            )));
        }
        Ok(())
    }

    pub fn alphabet(&self) -> Result<Alphabet> {
        self.validate()?;
        standard_alphabet(self.alphabet_size)
    }
}

/// Deterministic generator of random programs and interpretations.
pub struct ProgramGenerator {
    alphabet: Alphabet,
    cfg: GeneratorConfig,
    rng: ChaCha8Rng,
}

impl ProgramGenerator {
    pub fn new(cfg: &GeneratorConfig) -> Result<Self> {
        Ok(Self::over(cfg.alphabet()?, cfg))
    }

    /// A generator over an arbitrary alphabet; `cfg.alphabet_size` is ignored.
    pub fn over(alphabet: Alphabet, cfg: &GeneratorConfig) -> Self {
        ProgramGenerator {
            alphabet,
            cfg: cfg.clone(),
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        }
    }

    /// Independent stream `stream` derived from the configured seed.
    pub fn with_stream(alphabet: Alphabet, cfg: &GeneratorConfig, stream: u64) -> Self {
        let mut gen = Self::over(alphabet, cfg);
        gen.rng.set_stream(stream);
        gen
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn atom(&mut self) -> Atom {
        let all: Vec<Atom> = self.alphabet.atoms().collect();
        *all.choose(&mut self.rng).expect("nonempty alphabet")
    }

    fn rule_with(&mut self, max_body: usize, negative: f64) -> Rule {
        let head = self.atom();
        let size = self.rng.gen_range(0..=max_body);
        let body: Vec<Literal> = (0..size)
            .map(|_| {
                let atom = self.atom();
                if self.rng.gen_bool(negative) {
                    Literal::neg(atom)
                } else {
                    Literal::pos(atom)
                }
            })
            .collect();
        Rule::from_literals(head, body)
    }

    fn program_with(&mut self, max_body: usize, negative: f64) -> Program {
        if self.alphabet.is_empty() {
            return Program::empty(self.alphabet.clone());
        }
        let count = self.rng.gen_range(0..=self.cfg.max_rules);
        let rules: Vec<Rule> = (0..count).map(|_| self.rule_with(max_body, negative)).collect();
        Program::new(self.alphabet.clone(), rules).expect("atoms drawn from the alphabet")
    }

    pub fn rule(&mut self) -> Rule {
        self.rule_with(self.cfg.max_body, self.cfg.negative_literal_probability)
    }

    /// A program holding a single random rule.
    pub fn single_rule(&mut self) -> Program {
        let rule = self.rule();
        Program::new(self.alphabet.clone(), [rule]).expect("atoms drawn from the alphabet")
    }

    pub fn program(&mut self) -> Program {
        self.program_with(self.cfg.max_body, self.cfg.negative_literal_probability)
    }

    pub fn horn(&mut self) -> Program {
        self.program_with(self.cfg.max_body, 0.0)
    }

    pub fn negative(&mut self) -> Program {
        self.program_with(self.cfg.max_body, 1.0)
    }

    pub fn krom_horn(&mut self) -> Program {
        self.program_with(self.cfg.max_body.min(1), 0.0)
    }

    pub fn interpretation(&mut self) -> Interpretation {
        let atoms: Vec<Atom> = self
            .alphabet
            .atoms()
            .filter(|_| self.rng.gen_bool(0.5))
            .collect();
        Interpretation::new(self.alphabet.clone(), atoms).expect("atoms drawn from the alphabet")
    }

    /// A uniformly random permutation program `{pi(a) <- a}`.
    pub fn permutation(&mut self) -> Program {
        let mut image: Vec<Atom> = self.alphabet.atoms().collect();
        image.shuffle(&mut self.rng);
        permutation_from_images(&self.alphabet, &image)
    }
}

/// The permutation program mapping the `k`-th atom to `image[k]`.
pub(crate) fn permutation_from_images(alphabet: &Alphabet, image: &[Atom]) -> Program {
    let rules = alphabet.atoms().zip(image).map(|(a, &pa)| Rule::new(pa, [a], []));
    Program::new(alphabet.clone(), rules).expect("atoms drawn from the alphabet")
}

/// One random program for `cfg`.
pub fn generate_program(cfg: &GeneratorConfig) -> Result<Program> {
    Ok(ProgramGenerator::new(cfg)?.program())
}
