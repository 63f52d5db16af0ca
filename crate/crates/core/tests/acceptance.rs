//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use aspalg::compose::{
    compose, compose_oracle, cup, negate_program, omega, ominus, oplus, or_transform, serialize_or_program,
    tf_transform,
};
use aspalg::lawcheck::{run_exhaustive, run_laws, text_report, ExhaustiveBounds, GeneratorConfig, ProgramGenerator};
use aspalg::semantics::{
    answer_sets, equivalent, flp_reduct_algebraic, gl_reduct, gl_reduct_algebraic, is_answer_set_algebraic,
    is_answer_set_definitional, least_fixpoint, right_reduct, strongly_equivalent, subsumption_equivalent,
    tp_direct, uniformly_equivalent, uniformly_equivalent_definitional, unit_on, Limits,
};
use aspalg::{parse_str, serialize_program, Alphabet, Interpretation, Literal, Program};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn prog(src: &str) -> Program {
    parse_str(src).unwrap_or_else(|e| panic!("golden source does not parse: {e}"))
}

fn over(alphabet: &str, rules: &str) -> Program {
    prog(&format!("#alphabet {alphabet}.\n{rules}"))
}

fn c(p: &Program, r: &Program) -> Program {
    compose(p, r).expect("shared alphabet")
}

fn generator(atoms: usize, seed: u64) -> ProgramGenerator {
    let cfg = GeneratorConfig {
        alphabet_size: atoms,
        max_rules: 5,
        max_body: 3,
        negative_literal_probability: 0.3,
        seed,
    };
    ProgramGenerator::new(&cfg).expect("valid configuration")
}

fn within(elapsed: Duration, bound: Duration) -> Result<(), String> {
    ensure!(elapsed < bound, "took {elapsed:?}, bound {bound:?}");
    Ok(())
}

fn goldens() -> Outcome {
    let start = Instant::now();
    let abcd = "a, b, c, d";
    let big_r = over(abcd, "b :- not c, not d. b :- c, d.");
    let r = over(abcd, "a :- not b.");

    let or = serialize_or_program(&or_transform(&tf_transform(&big_r)));
    ensure!(
        or == "a :- {f}.\nb :- {c, d} | {not c, not d}.\nc :- {f}.\nd :- {f}.\n",
        "tf(R)∨ is {or:?}"
    );
    let not_r = negate_program(&big_r);
    ensure!(
        not_r == over(abcd, "a. b :- c, not c. b :- d, not c. b :- c, not d. b :- d, not d. c. d.") && not_r.len() == 7,
        "not R is {not_r}"
    );
    let composed = c(&r, &big_r);
    ensure!(
        serialize_program(&composed)
            == "#alphabet a, b, c, d.\na :- c, not c.\na :- c, not d.\na :- d, not c.\na :- d, not d.\n",
        "{{r}} ∘ R is {composed}"
    );

    let six = "a, b, c, d, e, g";
    let (x, y, z) = (
        over(six, "a :- b, c."),
        over(six, "b :- b. c :- b, c."),
        over(six, "b :- d. b :- e. c :- g."),
    );
    let left = c(&x, &c(&y, &z));
    let right = c(&c(&x, &y), &z);
    ensure!(left == over(six, "a :- d, g. a :- e, g. a :- d, e, g."), "r(PQ) is {left}");
    ensure!(right == over(six, "a :- d, g. a :- e, g."), "(rP)Q is {right}");

    let p = prog("a :- b. a :- c.");
    let pp = cup(&p, &p).unwrap();
    ensure!(pp == prog("a :- b. a :- c. a :- b, c."), "P ⊔ P is {pp}");

    let abc = "a, b, c";
    let (x, b, cc) = (over(abc, "a :- b, c."), over(abc, "b."), over(abc, "c."));
    ensure!(c(&x, &b.union(&cc).unwrap()) == over(abc, "a."), "left distributivity, union side");
    ensure!(c(&x, &b).union(&c(&x, &cc)).unwrap().is_empty(), "left distributivity, split side");

    let q = over(six, "b :- d. b :- e. c :- g.");
    let (r1, s1) = (over(six, "a :- b."), over(six, "a :- b, c."));
    let merged = c(&cup(&r1, &s1).unwrap(), &q);
    let split = cup(&c(&r1, &q), &c(&s1, &q)).unwrap();
    ensure!(merged == over(six, "a :- d, g. a :- e, g."), "({{r}} ⊔ {{s}})Q is {merged}");
    ensure!(split == over(six, "a :- d, g. a :- e, g. a :- d, e, g."), "{{r}}Q ⊔ {{s}}Q is {split}");

    let alpha = Alphabet::new(["a", "b", "c"]).unwrap();
    let atom = |n: &str| alpha.atom(n).unwrap();
    let ic = Interpretation::new(alpha.clone(), [atom("c")]).unwrap();
    let full = Interpretation::full(alpha.clone());
    let none = Interpretation::empty(alpha.clone());
    ensure!(ominus(&ic) == over(abc, "a :- a. b :- b. c."), "{{c}}⊖ is {}", ominus(&ic));
    ensure!(c(&x, &ominus(&ic)) == over(abc, "a :- b."), "{{a ← b, c}} ∘ {{c}}⊖");
    ensure!(ominus(&full) == full.to_program(), "A⊖ = A");
    ensure!(ominus(&none) == Program::unit(&alpha), "∅⊖ = 1");
    let pos = |i: &Interpretation| i.atoms().iter().map(|&a| Literal::pos(a)).collect::<BTreeSet<_>>();
    let a_plus = oplus(&pos(&full), &alpha).unwrap();
    ensure!(a_plus == over(abc, "a :- a, b, c. b :- a, b, c. c :- a, b, c."), "A⊕ is {a_plus}");
    ensure!(oplus(&BTreeSet::new(), &alpha).unwrap() == Program::unit(&alpha), "∅⊕ = 1");
    for i in Interpretation::all(&alpha) {
        let plus = oplus(&pos(&i), &alpha).unwrap();
        ensure!(c(&plus, &ominus(&i)) == ominus(&i), "I⊕ I⊖ = I⊖ fails at {{{i}}}");
        ensure!(c(&plus, &i.to_program()) == i.to_program(), "I⊕ I = I fails at {{{i}}}");
    }
    let not_c = oplus(&[Literal::neg(atom("c"))].into(), &alpha).unwrap();
    ensure!(
        c(&over(abc, "a :- b."), &not_c) == over(abc, "a :- b, not c."),
        "{{a ← b}} ∘ {{not c}}⊕"
    );
    let h = over(abc, "c. a :- b, c. b :- a, c.");
    let pi = over(abc, "a :- b. b :- a.");
    let c_star = Program::unit(&alpha).union(&ic.to_program()).unwrap();
    let c_plus = oplus(&pos(&ic), &alpha).unwrap();
    ensure!(c(&c(&c_star, &pi), &c_plus) == h, "H = ({{c}}* π) {{c}}⊕");
    let ab = Interpretation::new(alpha.clone(), [atom("a"), atom("b")]).unwrap();
    ensure!(c(&c(&unit_on(&ab), &h), &ominus(&ic)) == pi, "π = (1^{{a,b}} H) {{c}}⊖");

    let n = over(abc, "a :- not b, not c.");
    ensure!(c(&n, &unit_on(&ab)) == over(abc, "a :- not b."), "negative body removal");
    ensure!(
        c(&over(abc, "a :- not b."), &over(abc, "b :- b, c.")) == over(abc, "a :- not b. a :- not c."),
        "{{a ← not b}} ∘ {{b ← b, c}}"
    );
    let not_one = negate_program(&Program::unit(&alpha));
    ensure!(not_one == over(abc, "a :- not a. b :- not b. c :- not c."), "not 1 is {not_one}");
    ensure!(c(&not_one, &not_one) == Program::unit(&alpha), "(not 1)(not 1) = 1");

    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("in {:?}", start.elapsed()))
}

fn law_suite() -> Outcome {
    let start = Instant::now();
    let cfg = GeneratorConfig {
        alphabet_size: 3,
        max_rules: 5,
        max_body: 3,
        negative_literal_probability: 0.3,
        seed: 2024,
    };
    let random = run_laws(&[], &cfg, 1000).map_err(|e| e.to_string())?;
    let exhaustive = run_exhaustive(&[], &ExhaustiveBounds::default()).map_err(|e| e.to_string())?;
    let failed: Vec<_> = random.iter().chain(&exhaustive).filter(|r| !r.passed()).cloned().collect();
    ensure!(failed.is_empty(), "\n{}", text_report(&failed));
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!(
        "{} laws at 1000 trials, {} exhaustively, in {:?}",
        random.len(),
        exhaustive.len(),
        start.elapsed()
    ))
}

fn oracle() -> Outcome {
    let mut gen = generator(3, 3);
    for k in 0..500 {
        let (p, r) = (gen.program(), gen.program());
        let fast = c(&p, &r);
        let slow = compose_oracle(&p, &r).unwrap();
        ensure!(fast == slow, "pair {k}: P = {p} R = {r}\ncompose {fast}\noracle {slow}");
    }
    Ok("500 pairs, 0 mismatches".into())
}

fn tp_bridge() -> Outcome {
    let mut gen = generator(4, 4);
    for k in 0..200 {
        let p = gen.program();
        for i in Interpretation::all(p.alphabet()) {
            let direct = tp_direct(&p, &i).unwrap();
            let algebraic = c(&p, &i.to_program()).as_interpretation();
            ensure!(algebraic.as_ref() == Some(&direct), "program {k}: P = {p} I = {{{i}}}");
        }
    }
    Ok("200 programs × 16 interpretations, 0 mismatches".into())
}

fn least_models() -> Outcome {
    let mut gen = generator(5, 5);
    for k in 0..500 {
        let h = gen.horn();
        let fixpoint = least_fixpoint(&h).unwrap();
        ensure!(omega(&h) == fixpoint, "program {k}: H = {h}");
    }
    Ok("500 Horn programs, 0 mismatches".into())
}

fn answer_set_agreement() -> Outcome {
    let mut gen = generator(5, 6);
    for k in 0..500 {
        let p = gen.program();
        let all = Interpretation::all(p.alphabet());
        ensure!(all.len() == 32, "alphabet of program {k} has {} interpretations", all.len());
        for i in &all {
            let algebraic = is_answer_set_algebraic(&p, i).unwrap();
            ensure!(algebraic == is_answer_set_definitional(&p, i).unwrap(), "program {k}: P = {p} I = {{{i}}}");
        }
    }
    let choice = answer_sets(&prog("a :- not b. b :- not a.")).unwrap();
    let names: Vec<String> = choice.iter().map(ToString::to_string).collect();
    ensure!(names == ["a", "b"], "answer sets of the choice pair are {names:?}");
    ensure!(answer_sets(&prog("a :- not a.")).unwrap().is_empty(), "{{a ← not a}} has an answer set");
    Ok("500 programs × 32 interpretations, 0 mismatches".into())
}

fn hierarchy() -> Outcome {
    let mut gen = generator(3, 7);
    let limits = Limits::default();
    let mut counts = [0usize; 4];
    for k in 0..300 {
        let (p, r) = (gen.program(), gen.program());
        let strong = strongly_equivalent(&p, &r, &limits).map_err(|e| e.to_string())?.equivalent;
        let uniform = uniformly_equivalent(&p, &r, &limits).map_err(|e| e.to_string())?.equivalent;
        let definitional = uniformly_equivalent_definitional(&p, &r, &limits).unwrap().equivalent;
        let ordinary = equivalent(&p, &r, &limits).unwrap().equivalent;
        let subsumption = subsumption_equivalent(&p, &r, &limits).unwrap().equivalent;
        let pair = format!("pair {k}: P = {p} R = {r}");
        ensure!(!strong || uniform, "strong without uniform, {pair}");
        ensure!(!uniform || ordinary, "uniform without ordinary, {pair}");
        ensure!(!subsumption || ordinary, "subsumption without ordinary, {pair}");
        ensure!(uniform == definitional, "uniform characterizations disagree, {pair}");
        for (n, holds) in counts.iter_mut().zip([strong, uniform, ordinary, subsumption]) {
            *n += usize::from(holds);
        }
    }
    Ok(format!(
        "300 pairs, 0 violations (strong {}, uniform {}, ordinary {}, subsumption {})",
        counts[0], counts[1], counts[2], counts[3]
    ))
}

fn reducts() -> Outcome {
    let mut gen = generator(4, 8);
    for k in 0..500 {
        let (p, i) = (gen.program(), gen.interpretation());
        let gl = gl_reduct_algebraic(&p, &i).map_err(|e| format!("instance {k}: {e}"))?;
        ensure!(gl == gl_reduct(&p, &i).unwrap(), "GL, instance {k}: P = {p} I = {{{i}}}");
        let flp = flp_reduct_algebraic(&p, &i).map_err(|e| format!("instance {k}: {e}"))?;
        ensure!(flp == right_reduct(&p, &i).unwrap(), "FLP, instance {k}: P = {p} I = {{{i}}}");
    }
    Ok("500 (P, I) pairs, 0 mismatches".into())
}

fn round_trip() -> Outcome {
    let mut gen = generator(6, 9);
    for k in 0..1000 {
        let p = gen.program();
        let text = serialize_program(&p);
        let back = parse_str(&text).map_err(|e| format!("program {k}: {e}\n{text}"))?;
        let back = back.rehome(p.alphabet()).map_err(|e| e.to_string())?;
        ensure!(back == p, "program {k} changed:\n{text}");
        ensure!(serialize_program(&back) == text, "program {k} is not a fixpoint:\n{text}");
    }
    Ok("1000 programs, bit-exact".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("worked-example goldens", goldens),
        ("law suite", law_suite),
        ("compose = compose_oracle", oracle),
        ("T_P(I) = P ∘ I", tp_bridge),
        ("H^ω = least fixpoint", least_models),
        ("answer-set characterization", answer_set_agreement),
        ("equivalence hierarchy", hierarchy),
        ("algebraic reducts", reducts),
        ("parse/serialize round-trip", round_trip),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", k + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {} {name}: {why}", k + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
