//! Brute-force generation of bracketed words, graded by size (letters plus
//! bracket pairs), and a second evaluation of `P` written independently of
//! [`crate::algebra::ReynoldsOperator`].

use rand::Rng;

use crate::algebra::{AlgebraError, LinComb};
use crate::scalar::Scalar;
use crate::words::{Atom, Letter, Word};

/// All bracketed words of each size `0..=max_size`, one level per size, each
/// level sorted by canonical rendering.
pub fn words_by_size(alphabet: &[Letter], max_size: usize) -> Vec<Vec<Word>> {
    // atoms[k]: atoms of size k; levels[n]: words of size n.
    let mut atoms: Vec<Vec<Atom>> = vec![Vec::new()];
    let mut levels: Vec<Vec<Word>> = vec![vec![Word::identity()]];
    for n in 1..=max_size {
        let new_atoms: Vec<Atom> = if n == 1 {
            alphabet
                .iter()
                .cloned()
                .map(Atom::Letter)
                .chain(std::iter::once(Atom::Bracket(Word::identity())))
                .collect()
        } else {
            levels[n - 1].iter().cloned().map(Atom::Bracket).collect()
        };
        atoms.push(new_atoms);

        let mut level = Vec::new();
        for first_size in 1..=n {
            for first in &atoms[first_size] {
                for rest in &levels[n - first_size] {
                    let mut seq = Vec::with_capacity(rest.len() + 1);
                    seq.push(first.clone());
                    seq.extend_from_slice(rest.atoms());
                    level.push(Word::from_atoms(seq));
                }
            }
        }
        sort_canonical(&mut level);
        levels.push(level);
    }
    levels
}

fn sort_canonical(words: &mut Vec<Word>) {
    let mut keyed: Vec<(String, Word)> = words.drain(..).map(|w| (w.to_string(), w)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    words.extend(keyed.into_iter().map(|(_, w)| w));
}

/// Every bracketed word of size at most `max_size`, in (size, rendering) order.
pub fn enumerate_words(alphabet: &[Letter], max_size: usize) -> Vec<Word> {
    words_by_size(alphabet, max_size)
        .into_iter()
        .flatten()
        .collect()
}

/// The Reynolds words among [`enumerate_words`].
pub fn enumerate_reynolds_words(alphabet: &[Letter], max_size: usize) -> Vec<Word> {
    enumerate_words(alphabet, max_size)
        .into_iter()
        .filter(Word::is_reynolds)
        .collect()
}

/// Number of words of each size `0..=max_size` in `words`.
pub fn size_counts(words: &[Word], max_size: usize) -> Vec<usize> {
    let mut counts = vec![0; max_size + 1];
    for w in words {
        if let Some(c) = counts.get_mut(w.size()) {
            *c += 1;
        }
    }
    counts
}

/// Number of bracketed words of each size over an alphabet of `letters`
/// symbols, from the recurrence on the first atom.
pub fn count_words(letters: usize, max_size: usize) -> Vec<u128> {
    let mut words = vec![1u128];
    let mut atoms = vec![0u128];
    for n in 1..=max_size {
        atoms.push(if n == 1 {
            letters as u128 + 1
        } else {
            words[n - 1]
        });
        let total = (1..=n).map(|k| atoms[k] * words[n - k]).sum();
        words.push(total);
    }
    words
}

/// Cross-check evaluation of `P` with no memo table and no tower
/// factorization. On a product of `m >= 2` brackets `[s_1] ... [s_m]` it uses
///
/// ```text
/// P(r) = 1/(m-1) * ( sum_i P([s_1] .. s_i .. [s_m]) - r )
/// ```
///
/// stripping one bracket at a time; any other Reynolds word `r` maps to `[r]`.
pub fn oracle_p<S: Scalar>(word: &Word) -> Result<LinComb<S>, AlgebraError> {
    if !word.is_reynolds() {
        return Err(AlgebraError::NotReynolds(word.to_string()));
    }
    Ok(oracle_eval(word))
}

fn oracle_eval<S: Scalar>(word: &Word) -> LinComb<S> {
    let atoms = word.atoms();
    let all_brackets = atoms.len() >= 2 && atoms.iter().all(|a| matches!(a, Atom::Bracket(_)));
    if !all_brackets {
        return LinComb::monomial(
            S::one(),
            Word::from_atoms(vec![Atom::Bracket(word.clone())]),
        );
    }
    let m = atoms.len();
    let mut total = LinComb::monomial(-S::one(), word.clone());
    for i in 0..m {
        let mut stripped = Vec::new();
        for (j, atom) in atoms.iter().enumerate() {
            match atom {
                Atom::Bracket(inner) if j == i => stripped.extend(inner.atoms().iter().cloned()),
                other => stripped.push(other.clone()),
            }
        }
        total = total.add(&oracle_eval(&Word::from_atoms(stripped)));
    }
    let divisor = S::from_count(m - 1);
    total.scale(&(S::one() / divisor))
}

/// A random bracketed word of size exactly `size`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &[Letter], size: usize) -> Word {
    let mut atoms = Vec::new();
    let mut remaining = size;
    while remaining > 0 {
        let k = rng.gen_range(1..=remaining);
        let atom = if k == 1 {
            let pick = rng.gen_range(0..=alphabet.len());
            match alphabet.get(pick) {
                Some(l) => Atom::Letter(l.clone()),
                None => Atom::Bracket(Word::identity()),
            }
        } else {
            Atom::Bracket(random_word(rng, alphabet, k - 1))
        };
        atoms.push(atom);
        remaining -= k;
    }
    Word::from_atoms(atoms)
}

/// A random Reynolds word of size at most `max_size`, by rejection.
pub fn random_reynolds_word<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &[Letter],
    max_size: usize,
) -> Word {
    loop {
        let size = rng.gen_range(0..=max_size);
        let w = random_word(rng, alphabet, size);
        if w.is_reynolds() {
            return w;
        }
    }
}

/// Letters `x`, `y`, `z`, ... (then `a1`, `a2`, ...).
pub fn standard_alphabet(n: usize) -> Vec<Letter> {
    const NAMES: [&str; 3] = ["x", "y", "z"];
    (0..n)
        .map(|i| {
            let name = match NAMES.get(i) {
                Some(s) => s.to_string(),
                None => format!("a{}", i - NAMES.len() + 1),
            };
            Letter::new(&name).expect("valid letter")
        })
        .collect()
}
