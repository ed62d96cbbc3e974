//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; exits non-zero if any criterion fails.

mod common;

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reynolds::algebra::ReynoldsOperator;
use reynolds::enumeration::{
    enumerate_reynolds_words, enumerate_words, oracle_p, random_reynolds_word, standard_alphabet,
};
use reynolds::forests::{forest_to_word, has_super_crown, word_to_forest};
use reynolds::models::{
    averaging_model, binomial_identity_check, differential_model, star_checks, universal_map,
    universal_map_word, weighted_residual, ScaledModel,
};
use reynolds::{
    rational, Combination, Letter, LinComb, Rational, RationalPolynomial, ReynoldsModel, Scalar,
    Word,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("worked example via apply-p", worked_example),
        ("two-variable identity", reynolds_identity),
        ("multi-variable identity", multivariant_identity),
        ("closure of P on Reynolds words", closure),
        ("oracle equivalence", oracle_equivalence),
        ("forest bijection and crowns", forest_bijection),
        ("averaging model", averaging),
        ("differential model and binomial grid", differential),
        ("replicated star structure", replication),
        ("universal map", universal),
        ("truncated series", truncated_series),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name} ({detail}; {elapsed:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({elapsed:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lc(s: &str) -> Combination {
    Combination::parse(s).unwrap_or_else(|e| panic!("{s:?}: {e}"))
}

fn single(w: &Word) -> Combination {
    Combination::from_word(w.clone())
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let out = reynolds_cli::run(["reyn", "apply-p", "[[x]] [y] [z]"]);
    let elapsed = start.elapsed();
    ensure(out.code == 0, || {
        format!("exit {}: {}", out.code, out.stderr)
    })?;
    let got = lc(out.stdout.trim());
    let expected = lc(
        "1/4 * [x [y] [z]] + 1/4 * [[x] y [z]] + 1/4 * [[x] [y] z] - 1/4 * [x] [y] [z] \
         + 1/2 * [[[x]] y [z]] + 1/2 * [[[x]] [y] z] - 1/2 * [[x]] [y] [z]",
    );
    ensure(got == expected, || format!("got {got}"))?;
    ensure(got.len() == 7, || format!("{} terms", got.len()))?;
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("7 terms in {:.1} ms", elapsed.as_secs_f64() * 1e3))
}

fn reynolds_identity() -> Outcome {
    let start = Instant::now();
    let mut op = ReynoldsOperator::<Rational>::new();
    let words = enumerate_reynolds_words(&standard_alphabet(2), 4);
    for r in &words {
        let pr = single(r);
        for s in &words {
            let res = op
                .reynolds_residual(&pr, &single(s))
                .map_err(|e| e.to_string())?;
            ensure(res.is_zero(), || format!("({r}, {s}) leaves {res}"))?;
        }
    }
    let exhaustive = words.len() * words.len();
    let alphabet = standard_alphabet(3);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..500 {
        let r = random_reynolds_word(&mut rng, &alphabet, 8);
        let s = random_reynolds_word(&mut rng, &alphabet, 8);
        let res = op
            .reynolds_residual(&single(&r), &single(&s))
            .map_err(|e| e.to_string())?;
        ensure(res.is_zero(), || format!("random ({r}, {s}) leaves {res}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{exhaustive} exhaustive pairs + 500 random pairs"))
}

fn multivariant_identity() -> Outcome {
    let mut op = ReynoldsOperator::<Rational>::new();
    // Instances written out in the source example, with u = x, y, z.
    let cases = [
        (
            "[[x] [y] [z]]",
            "1/2 * [x [y] [z]] + 1/2 * [[x] y [z]] + 1/2 * [[x] [y] z] - 1/2 * [x] [y] [z]",
        ),
        (
            "[[[x]] [y] [z]]",
            "1/4 * [x [y] [z]] + 1/4 * [[x] y [z]] + 1/4 * [[x] [y] z] - 1/4 * [x] [y] [z] \
             + 1/2 * [[[x]] y [z]] + 1/2 * [[[x]] [y] z] - 1/2 * [[x]] [y] [z]",
        ),
    ];
    for (lhs, rhs) in cases {
        let inner = Word::parse(&lhs[1..lhs.len() - 1]).map_err(|e| e.to_string())?;
        let got = op.apply_word(&inner).map_err(|e| e.to_string())?;
        ensure(got == lc(rhs), || format!("P({inner}) = {got}"))?;
    }
    for args in [["x", "y", "z"], ["[x]", "y", "z"]] {
        let us: Vec<_> = args.iter().map(|a| lc(a)).collect();
        let res = op.multivariant_residual(&us).map_err(|e| e.to_string())?;
        ensure(res.is_zero(), || format!("{args:?} leaves {res}"))?;
    }

    let words = enumerate_reynolds_words(&standard_alphabet(1), 3);
    let mut tuples = multivariant_grid::<Rational>(&words, 2..=3)?;
    // The m = 4 grid is the bulk of the work. Machine-word rationals are
    // exact here as long as overflow traps, which the probe confirms.
    tuples += if overflow_traps() {
        multivariant_grid::<Rational64>(&words, 4..=4)?
    } else {
        multivariant_grid::<Rational>(&words, 4..=4)?
    };
    Ok(format!(
        "2 source instances + {tuples} tuples over {} words",
        words.len()
    ))
}

fn overflow_traps() -> bool {
    let previous = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));
    let trapped =
        std::panic::catch_unwind(|| std::hint::black_box(i64::MAX) + std::hint::black_box(1))
            .is_err();
    std::panic::set_hook(previous);
    trapped
}

/// Checks every tuple of `words` of each length in `arities`; returns how
/// many tuples were checked.
fn multivariant_grid<S: Scalar>(
    words: &[Word],
    arities: std::ops::RangeInclusive<usize>,
) -> Result<usize, String> {
    let basis: Vec<LinComb<S>> = words
        .iter()
        .map(|w| LinComb::from_word(w.clone()))
        .collect();
    let mut op = ReynoldsOperator::<S>::new();
    let mut tuples = 0usize;
    for m in arities {
        let mut idx = vec![0usize; m];
        loop {
            let us: Vec<LinComb<S>> = idx.iter().map(|&i| basis[i].clone()).collect();
            let res = op.multivariant_residual(&us).map_err(|e| e.to_string())?;
            ensure(res.is_zero(), || {
                let names: Vec<String> = idx.iter().map(|&i| words[i].to_string()).collect();
                format!("{names:?} leaves {res}")
            })?;
            tuples += 1;
            if op.memo_len() > MEMO_LIMIT {
                op = ReynoldsOperator::new();
            }
            if !advance(&mut idx, basis.len()) {
                break;
            }
        }
    }
    Ok(tuples)
}

/// Memo entries kept before an operator is replaced by a fresh one.
const MEMO_LIMIT: usize = 200_000;

/// Odometer step over `0..n` in every position; false once it wraps.
fn advance(idx: &mut [usize], n: usize) -> bool {
    for slot in idx.iter_mut().rev() {
        *slot += 1;
        if *slot < n {
            return true;
        }
        *slot = 0;
    }
    false
}

fn closure() -> Outcome {
    let mut op = ReynoldsOperator::<Rational>::new();
    let words = enumerate_reynolds_words(&standard_alphabet(2), 6);
    let mut support = 0usize;
    for w in &words {
        let image = op.apply_word(w).map_err(|e| e.to_string())?;
        for t in image.words() {
            support += 1;
            ensure(t.is_reynolds(), || format!("P({w}) contains {t}"))?;
        }
    }
    Ok(format!("{} words, {support} support words", words.len()))
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0usize;
    for letters in 1..=2 {
        let mut op = ReynoldsOperator::<Rational>::new();
        for w in enumerate_reynolds_words(&standard_alphabet(letters), 5) {
            let fast = op.apply_word(&w).map_err(|e| e.to_string())?;
            let slow = oracle_p::<Rational>(&w).map_err(|e| e.to_string())?;
            ensure(fast == slow, || format!("{w}: {fast} vs {slow}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} words"))
}

fn forest_bijection() -> Outcome {
    let words = enumerate_words(&standard_alphabet(1), 6);
    let mut reynolds = 0usize;
    for w in &words {
        let forest = word_to_forest(w);
        let back = forest_to_word(&forest).map_err(|e| e.to_string())?;
        ensure(&back == w, || format!("{w} came back as {back}"))?;
        ensure(word_to_forest(&back) == forest, || {
            format!("forest of {w} not stable")
        })?;
        ensure(has_super_crown(&forest) != w.is_reynolds(), || {
            format!("crown test disagrees on {w}")
        })?;
        reynolds += usize::from(w.is_reynolds());
    }
    Ok(format!("{} words, {reynolds} Reynolds", words.len()))
}

fn x_pow(n: u32) -> RationalPolynomial {
    RationalPolynomial::monomial(rational(1, 1), n)
}

fn averaging() -> Outcome {
    let model = averaging_model().map_err(|e| e.to_string())?;
    let lambda = rational(-1, 1);
    for n in 0..=10u32 {
        for m in 0..=10u32 {
            let (u, v) = (x_pow(n), x_pow(m));
            let q = |p: &RationalPolynomial| model.operator(p);
            let got = q(&q(&u).mul(&q(&v)));
            let denom = i64::from((n + 1) * (m + 1) * (n + m + 1));
            let want = RationalPolynomial::monomial(rational(1, denom), n + m);
            ensure(got == want, || format!("n={n}, m={m}: {got}"))?;
            let res = weighted_residual(&model, &lambda, &u, &v);
            ensure(res.is_zero(), || format!("residual at n={n}, m={m}: {res}"))?;
        }
    }
    Ok("121 monomial pairs".into())
}

fn differential() -> Outcome {
    let model = differential_model().map_err(|e| e.to_string())?;
    let lambda = rational(-1, 1);
    for n in 0..=6 {
        for m in 0..=6 {
            let res = weighted_residual(&model, &lambda, &x_pow(n), &x_pow(m));
            ensure(res.is_zero(), || format!("residual at n={n}, m={m}: {res}"))?;
        }
    }
    let mut grid = 0;
    for p in 1..=20 {
        for q in 1..=20 {
            for r in 1..=q {
                let ok = binomial_identity_check(p, q, r).map_err(|e| e.to_string())?;
                ensure(ok, || {
                    format!("binomial identity fails at p={p}, q={q}, r={r}")
                })?;
                grid += 1;
            }
        }
    }
    Ok(format!("49 monomial pairs, {grid} binomial cases"))
}

fn random_polynomial(rng: &mut ChaCha8Rng, max_degree: u32) -> RationalPolynomial {
    let degree = rng.gen_range(0..=max_degree);
    let mut p = RationalPolynomial::zero();
    for n in 0..=degree {
        let num = rng.gen_range(-5i64..=5);
        let den = rng.gen_range(1i64..=4);
        p.add_term(n, rational(num, den));
    }
    p
}

fn replication() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let triples: Vec<_> = (0..100)
        .map(|_| {
            (
                random_polynomial(&mut rng, 4),
                random_polynomial(&mut rng, 4),
                random_polynomial(&mut rng, 4),
            )
        })
        .collect();
    let weights = [
        rational(-1, 1),
        rational(0, 1),
        rational(1, 1),
        rational(2, 3),
    ];
    let models = [
        ("averaging", averaging_model().map_err(|e| e.to_string())?),
        (
            "differential",
            differential_model().map_err(|e| e.to_string())?,
        ),
    ];
    for (label, base) in &models {
        for lambda in &weights {
            let model = ScaledModel::with_weight(base.clone(), lambda.clone());
            ensure(&model.weight() == lambda, || {
                format!("{label}: weight {}", model.weight())
            })?;
            let report = star_checks(&model, lambda, &triples);
            ensure(report.passed(), || {
                format!("{label} at weight {lambda}: {report:?}")
            })?;
        }
    }
    Ok("2 models x 4 weights x 100 triples".into())
}

fn universal() -> Outcome {
    let alphabet = standard_alphabet(2);
    let words = enumerate_reynolds_words(&alphabet, 5);
    let mut op = ReynoldsOperator::<Rational>::new();
    let images: Vec<Combination> = words
        .iter()
        .map(|w| op.apply_word(w))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let models = [
        ("averaging", averaging_model().map_err(|e| e.to_string())?),
        (
            "differential",
            differential_model().map_err(|e| e.to_string())?,
        ),
    ];
    let assignment: HashMap<Letter, RationalPolynomial> = [
        (alphabet[0].clone(), x_pow(1)),
        (alphabet[1].clone(), x_pow(2)),
    ]
    .into_iter()
    .collect();
    let mut products = 0usize;
    for (label, model) in &models {
        let f = |w: &Word| universal_map_word(model, &assignment, w).map_err(|e| e.to_string());
        for (w, pw) in words.iter().zip(&images) {
            let lhs = universal_map(model, &assignment, pw).map_err(|e| e.to_string())?;
            let rhs = model.operator(&f(w)?);
            ensure(lhs == rhs, || {
                format!("{label}: f(P({w})) = {lhs}, Q(f({w})) = {rhs}")
            })?;
        }
        let values: Vec<RationalPolynomial> = words.iter().map(&f).collect::<Result<_, _>>()?;
        for (u, fu) in words.iter().zip(&values) {
            for (v, fv) in words.iter().zip(&values) {
                let uv = u.concat(v);
                ensure(uv.is_reynolds(), || format!("{u} . {v} is not Reynolds"))?;
                products += 1;
                let lhs = f(&uv)?;
                let rhs = model.mul(fu, fv);
                ensure(lhs == rhs, || {
                    format!("{label}: f({u} . {v}) = {lhs}, expected {rhs}")
                })?;
            }
        }
    }
    Ok(format!("{} words, {products} products", words.len()))
}

fn truncated_series() -> Outcome {
    let alphabet = standard_alphabet(2);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0011);
    let mut op = ReynoldsOperator::<Rational>::new();
    for _ in 0..50 {
        let u = random_reynolds_word(&mut rng, &alphabet, 4);
        let v = random_reynolds_word(&mut rng, &alphabet, 4);
        for k in 0..=3 {
            let res = op
                .truncated_series_residual(&single(&u), &single(&v), k)
                .map_err(|e| e.to_string())?;
            ensure(res.is_zero(), || format!("k={k}, ({u}, {v}) leaves {res}"))?;
        }
    }
    Ok("50 pairs x 4 orders".into())
}

fn determinism() -> Outcome {
    for (name, args) in common::GOLDEN_CASES {
        let first = common::transcript(args);
        let second = common::transcript(args);
        ensure(first == second, || {
            format!("case {name} differs between runs")
        })?;
    }
    Ok(format!("{} invocations", common::GOLDEN_CASES.len()))
}
