use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::{PatternAutomaton, RationalSeries};
use crate::algebra::Word;

/// Two-sided monomial ideal of the free monoid algebra, by minimal generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdealFree {
    n: usize,
    /// Antichain under subword divisibility, sorted by degree then letters.
    gens: Vec<Word>,
}

impl MonomialIdealFree {
    pub fn zero(n: usize) -> Self {
        MonomialIdealFree {
            n,
            gens: Vec::new(),
        }
    }

    pub fn new(n: usize, gens: impl IntoIterator<Item = Word>) -> Self {
        let mut all: Vec<Word> = gens.into_iter().collect();
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut minimal: Vec<Word> = Vec::with_capacity(all.len());
        for w in all {
            if !minimal.iter().any(|g| w.contains_subword(g)) {
                minimal.push(w);
            }
        }
        MonomialIdealFree { n, gens: minimal }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Word] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.gens.iter().any(|g| w.contains_subword(g))
    }

    pub fn automaton(&self) -> PatternAutomaton {
        PatternAutomaton::new(self.n, &self.gens)
    }

    pub fn generators_of_degree(&self, d: usize) -> impl Iterator<Item = &Word> {
        self.gens.iter().filter(move |g| g.degree() == d)
    }

    pub fn max_generator_degree(&self) -> usize {
        self.gens.iter().map(Word::degree).max().unwrap_or(0)
    }
}

impl fmt::Debug for MonomialIdealFree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MonomialIdealFree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Number of words of degree `0..=max_degree` avoiding every generator.
pub fn normal_word_counts(ideal: &MonomialIdealFree, max_degree: usize) -> Vec<BigUint> {
    let aut = ideal.automaton();
    let live = aut.live_states();
    let mut out = Vec::with_capacity(max_degree + 1);
    if live.is_empty() {
        out.resize(max_degree + 1, BigUint::zero());
        return out;
    }
    let mut pos = vec![usize::MAX; aut.num_states()];
    for (k, &s) in live.iter().enumerate() {
        pos[s] = k;
    }
    let mut counts = vec![BigUint::zero(); live.len()];
    counts[0] = BigUint::from(1u32);
    for d in 0..=max_degree {
        out.push(counts.iter().sum());
        if d == max_degree {
            break;
        }
        let mut next = vec![BigUint::zero(); live.len()];
        for (k, &s) in live.iter().enumerate() {
            if counts[k].is_zero() {
                continue;
            }
            for l in 1..=aut.n() as u8 {
                let t = aut.step(s, l);
                if !aut.is_dead(t) {
                    next[pos[t]] += &counts[k];
                }
            }
        }
        counts = next;
    }
    out
}

/// Number of degree-`d` words containing no generator as a contiguous
/// subword: walk counting on the live part of the pattern automaton.
pub fn normal_word_count(ideal: &MonomialIdealFree, d: usize) -> BigUint {
    normal_word_counts(ideal, d).pop().unwrap()
}

/// Hilbert series of the quotient by a finitely generated monomial ideal,
/// as a reduced rational function `P(t) / Q(t)` with `Q(0) = 1`.
///
/// With transfer matrix `A` on the live states, the series is
/// `e_root^T (I - tA)^{-1} 1`; its denominator divides `det(I - tA)`, which
/// is the reversed characteristic polynomial of `A`.
pub fn hilbert_rational(ideal: &MonomialIdealFree) -> RationalSeries {
    let aut = ideal.automaton();
    let live = aut.live_states();
    let s = live.len();
    if s == 0 {
        return RationalSeries::new(vec![], vec![BigInt::from(1)]);
    }
    let mut pos = vec![usize::MAX; aut.num_states()];
    for (k, &st) in live.iter().enumerate() {
        pos[st] = k;
    }
    let mut a = vec![vec![BigInt::zero(); s]; s];
    for (k, &st) in live.iter().enumerate() {
        for l in 1..=aut.n() as u8 {
            let t = aut.step(st, l);
            if !aut.is_dead(t) {
                a[k][pos[t]] += 1;
            }
        }
    }
    let charpoly = characteristic_polynomial(&a);
    // det(I - tA) = t^s p(1/t): coefficient of t^k is the coefficient of
    // lambda^(s-k) in p
    let denominator: Vec<BigInt> = (0..=s).map(|k| charpoly[s - k].clone()).collect();
    let series: Vec<BigInt> = normal_word_counts(ideal, s)
        .into_iter()
        .map(BigInt::from)
        .collect();
    let mut numerator = vec![BigInt::zero(); s];
    for (i, h) in series.iter().enumerate().take(s) {
        for (j, q) in denominator.iter().enumerate() {
            if i + j < s {
                numerator[i + j] += h * q;
            }
        }
    }
    RationalSeries::new(numerator, denominator).reduced()
}

/// Coefficients `c_0..c_s` of `det(lambda I - A)` by Faddeev-LeVerrier; all
/// divisions are exact over the integers.
fn characteristic_polynomial(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let s = a.len();
    let mut coeffs = vec![BigInt::zero(); s + 1];
    coeffs[s] = BigInt::from(1);
    let mut m = vec![vec![BigInt::zero(); s]; s];
    for k in 1..=s {
        // M_k = A M_{k-1} + c_{s-k+1} I
        let mut next = vec![vec![BigInt::zero(); s]; s];
        for i in 0..s {
            for (l, a_il) in a[i].iter().enumerate() {
                if a_il.is_zero() {
                    continue;
                }
                for j in 0..s {
                    if !m[l][j].is_zero() {
                        next[i][j] += a_il * &m[l][j];
                    }
                }
            }
            next[i][i] += &coeffs[s - k + 1];
        }
        m = next;
        // c_{s-k} = -tr(A M_k) / k
        let mut trace = BigInt::zero();
        for i in 0..s {
            for l in 0..s {
                if !a[i][l].is_zero() && !m[l][i].is_zero() {
                    trace += &a[i][l] * &m[l][i];
                }
            }
        }
        coeffs[s - k] = -(trace / BigInt::from(k));
    }
    coeffs
}
