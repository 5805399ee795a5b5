//! Term orders.
//!
//! [`ExtOrderSpec`] is a commutative degree-compatible order (deglex or
//! degrevlex under a chosen ranking of the variables); restricted to
//! square-free monomials it is the order used for exterior Gröbner bases.
//!
//! [`FreeOrderSpec`] lifts it to words: degree first, then the commutative
//! order on the commutative images, then the lexicographic order with
//! `X1 < X2 < ... < Xn`. On words with distinct letters this compares the
//! `pi`-images first and breaks ties lexicographically, so increasing words
//! inherit the exterior order and `X_j X_i` leads `X_i X_j + X_j X_i` for
//! `i <= j`.

use std::cmp::Ordering;

use crate::algebra::{AlgebraContext, ExtMonomial, ExtPolynomial, FreePolynomial, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OrderKind {
    #[default]
    Deglex,
    Degrevlex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Deglex => "deglex",
            OrderKind::Degrevlex => "degrevlex",
        }
    }
}

impl std::str::FromStr for OrderKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "deglex" => Ok(OrderKind::Deglex),
            "degrevlex" => Ok(OrderKind::Degrevlex),
            other => Err(format!(
                "unknown order '{other}' (expected deglex or degrevlex)"
            )),
        }
    }
}

/// Commutative term order on `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtOrderSpec {
    kind: OrderKind,
    /// Variables from smallest to largest.
    ascending: Vec<u8>,
    /// `rank[v - 1]` is the position of `x_v` in `ascending`.
    rank: Vec<u8>,
    natural: bool,
}

impl ExtOrderSpec {
    /// Natural ranking `x1 < x2 < ... < xn`.
    pub fn new(kind: OrderKind, n: usize) -> Self {
        let ascending: Vec<u8> = (1..=n as u8).collect();
        let rank = (0..n as u8).collect();
        ExtOrderSpec {
            kind,
            ascending,
            rank,
            natural: true,
        }
    }

    pub fn deglex(n: usize) -> Self {
        Self::new(OrderKind::Deglex, n)
    }

    pub fn degrevlex(n: usize) -> Self {
        Self::new(OrderKind::Degrevlex, n)
    }

    /// `ascending` lists the variables from smallest to largest.
    pub fn with_ranking(kind: OrderKind, ascending: &[usize]) -> Result<Self> {
        let n = ascending.len();
        AlgebraContext::new(n)?;
        let mut rank = vec![u8::MAX; n];
        for (r, &v) in ascending.iter().enumerate() {
            if v == 0 || v > n || rank[v - 1] != u8::MAX {
                return Err(Error::BadRanking { n });
            }
            rank[v - 1] = r as u8;
        }
        let natural = ascending.iter().enumerate().all(|(r, &v)| v == r + 1);
        Ok(ExtOrderSpec {
            kind,
            ascending: ascending.iter().map(|&v| v as u8).collect(),
            rank,
            natural,
        })
    }

    pub fn n(&self) -> usize {
        self.ascending.len()
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn ascending_vars(&self) -> Vec<usize> {
        self.ascending.iter().map(|&v| v as usize).collect()
    }

    pub fn is_natural(&self) -> bool {
        self.natural
    }

    /// Position of `x_var` from the bottom.
    pub fn rank_of(&self, var: usize) -> usize {
        self.rank[var - 1] as usize
    }

    fn ranked_bits(&self, m: ExtMonomial) -> u64 {
        if self.natural {
            return m.bits();
        }
        m.vars().fold(0u64, |acc, v| acc | 1 << self.rank[v - 1])
    }

    pub fn cmp(&self, a: ExtMonomial, b: ExtMonomial) -> Ordering {
        let by_degree = a.degree().cmp(&b.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let (ra, rb) = (self.ranked_bits(a), self.ranked_bits(b));
        match self.kind {
            OrderKind::Deglex => ra.cmp(&rb),
            OrderKind::Degrevlex => {
                let diff = ra ^ rb;
                if diff == 0 {
                    Ordering::Equal
                } else if ra & diff & diff.wrapping_neg() != 0 {
                    // `a` holds the smallest variable where they differ
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    /// Lexicographically comparable encoding of a commutative monomial of
    /// known total degree.
    fn push_commutative_key(&self, exponents: &[u16], out: &mut Vec<u16>) {
        match self.kind {
            OrderKind::Deglex => {
                out.extend(
                    self.ascending
                        .iter()
                        .rev()
                        .map(|&v| exponents[v as usize - 1]),
                );
            }
            OrderKind::Degrevlex => {
                out.extend(
                    self.ascending
                        .iter()
                        .map(|&v| u16::MAX - exponents[v as usize - 1]),
                );
            }
        }
    }

    /// The order on arbitrary commutative monomials (exponent vectors).
    pub fn cmp_exponents(&self, a: &[u16], b: &[u16]) -> Ordering {
        let da: u32 = a.iter().map(|&e| e as u32).sum();
        let db: u32 = b.iter().map(|&e| e as u32).sum();
        da.cmp(&db).then_with(|| {
            let (mut ka, mut kb) = (Vec::new(), Vec::new());
            self.push_commutative_key(a, &mut ka);
            self.push_commutative_key(b, &mut kb);
            ka.cmp(&kb)
        })
    }

    /// Variables ordered from largest to smallest.
    pub fn descending_vars(&self) -> Vec<usize> {
        self.ascending.iter().rev().map(|&v| v as usize).collect()
    }
}

/// Sort key realizing the word order as plain lexicographic comparison.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WordKey(Vec<u16>);

/// Word order lifted from an [`ExtOrderSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeOrderSpec {
    ext: ExtOrderSpec,
}

impl FreeOrderSpec {
    pub fn new(ext: ExtOrderSpec) -> Self {
        FreeOrderSpec { ext }
    }

    pub fn deglex(n: usize) -> Self {
        Self::new(ExtOrderSpec::deglex(n))
    }

    pub fn degrevlex(n: usize) -> Self {
        Self::new(ExtOrderSpec::degrevlex(n))
    }

    pub fn ext(&self) -> &ExtOrderSpec {
        &self.ext
    }

    pub fn n(&self) -> usize {
        self.ext.n()
    }

    pub fn key(&self, w: &Word) -> WordKey {
        let n = self.ext.n();
        let mut k = Vec::with_capacity(1 + n + w.degree());
        k.push(w.degree() as u16);
        self.ext.push_commutative_key(&w.exponents(n), &mut k);
        k.extend(w.letters().iter().map(|&l| l as u16));
        WordKey(k)
    }

    pub fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        self.key(a).cmp(&self.key(b))
    }
}

impl From<ExtOrderSpec> for FreeOrderSpec {
    fn from(ext: ExtOrderSpec) -> Self {
        FreeOrderSpec::new(ext)
    }
}

/// Lexicographic comparison of two words of equal degree.
pub fn cmp_lex(a: &Word, b: &Word) -> Result<Ordering> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(a.letters().cmp(b.letters()))
}

pub fn cmp_ext(a: ExtMonomial, b: ExtMonomial, spec: &ExtOrderSpec) -> Ordering {
    spec.cmp(a, b)
}

pub fn cmp_t(a: &Word, b: &Word, spec: &FreeOrderSpec) -> Ordering {
    spec.cmp(a, b)
}

pub fn leading_term_ext(f: &ExtPolynomial, spec: &ExtOrderSpec) -> Result<(ExtMonomial, Scalar)> {
    f.terms()
        .max_by(|a, b| spec.cmp(*a.0, *b.0))
        .map(|(m, c)| (*m, c.clone()))
        .ok_or(Error::ZeroPolynomial)
}

pub fn leading_term_free(f: &FreePolynomial, spec: &FreeOrderSpec) -> Result<(Word, Scalar)> {
    f.terms()
        .map(|(w, c)| (spec.key(w), w, c))
        .max_by(|a, b| a.0.cmp(&b.0))
        .map(|(_, w, c)| (w.clone(), c.clone()))
        .ok_or(Error::ZeroPolynomial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use proptest::prelude::*;

    fn w(v: &[usize]) -> Word {
        Word::from_vars(v)
    }

    fn xm(v: &[usize]) -> ExtMonomial {
        ExtMonomial::from_vars(v)
    }

    /// Deglex on 0/1 exponent vectors, written out directly.
    fn deglex_oracle(a: ExtMonomial, b: ExtMonomial, n: usize) -> Ordering {
        let ea: Vec<u8> = (1..=n).map(|v| a.contains_var(v) as u8).collect();
        let eb: Vec<u8> = (1..=n).map(|v| b.contains_var(v) as u8).collect();
        let (da, db) = (a.degree(), b.degree());
        if da != db {
            return da.cmp(&db);
        }
        for v in (0..n).rev() {
            if ea[v] != eb[v] {
                return ea[v].cmp(&eb[v]);
            }
        }
        Ordering::Equal
    }

    fn degrevlex_oracle(a: ExtMonomial, b: ExtMonomial, n: usize) -> Ordering {
        let (da, db) = (a.degree(), b.degree());
        if da != db {
            return da.cmp(&db);
        }
        for v in 1..=n {
            let (ia, ib) = (a.contains_var(v), b.contains_var(v));
            if ia != ib {
                return if ia {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }

    /// The three-case word comparison taken literally, with plain lex in the
    /// vanishing case.
    fn literal_three_case(a: &Word, b: &Word, spec: &ExtOrderSpec) -> Ordering {
        match (a.project(), b.project()) {
            (Some((_, ma)), Some((_, mb))) => {
                spec.cmp(ma, mb).then_with(|| a.letters().cmp(b.letters()))
            }
            _ => a.letters().cmp(b.letters()),
        }
    }

    #[test]
    fn lex_examples() {
        assert_eq!(cmp_lex(&w(&[1, 2]), &w(&[2, 1])).unwrap(), Ordering::Less);
        assert_eq!(cmp_lex(&w(&[2, 1]), &w(&[2, 1])).unwrap(), Ordering::Equal);
        assert_eq!(
            cmp_lex(&w(&[1, 3]), &w(&[1, 2])).unwrap(),
            Ordering::Greater
        );
        assert!(cmp_lex(&w(&[1]), &w(&[1, 2])).is_err());
    }

    #[test]
    fn ext_examples() {
        let spec = ExtOrderSpec::deglex(3);
        assert_eq!(cmp_ext(xm(&[2, 3]), xm(&[1, 2]), &spec), Ordering::Greater);
        assert_eq!(
            deglex_oracle(xm(&[2, 3]), xm(&[1, 2]), 3),
            Ordering::Greater
        );
        assert_eq!(cmp_ext(xm(&[1, 3]), xm(&[1, 3]), &spec), Ordering::Equal);
        assert_eq!(cmp_ext(ExtMonomial::ONE, xm(&[1]), &spec), Ordering::Less);
    }

    #[test]
    fn ext_orders_match_oracles() {
        for n in 1..=5 {
            let (dl, drl) = (ExtOrderSpec::deglex(n), ExtOrderSpec::degrevlex(n));
            for a in 0..1u64 << n {
                for b in 0..1u64 << n {
                    let (a, b) = (ExtMonomial::from_bits(a), ExtMonomial::from_bits(b));
                    assert_eq!(dl.cmp(a, b), deglex_oracle(a, b, n));
                    assert_eq!(drl.cmp(a, b), degrevlex_oracle(a, b, n));
                }
            }
        }
    }

    #[test]
    fn ranking_relabels_variables() {
        // x3 < x1 < x2
        let spec = ExtOrderSpec::with_ranking(OrderKind::Deglex, &[3, 1, 2]).unwrap();
        assert_eq!(spec.cmp(xm(&[1]), xm(&[3])), Ordering::Greater);
        assert_eq!(spec.cmp(xm(&[1, 2]), xm(&[2, 3])), Ordering::Greater);
        assert!(ExtOrderSpec::with_ranking(OrderKind::Deglex, &[1, 1, 2]).is_err());
    }

    #[test]
    fn word_order_examples() {
        let spec = FreeOrderSpec::deglex(3);
        assert_eq!(cmp_t(&w(&[1, 2]), &w(&[2, 1]), &spec), Ordering::Less);
        assert_eq!(cmp_t(&w(&[1, 1]), &w(&[2, 1]), &spec), Ordering::Less);
        assert_eq!(
            literal_three_case(&w(&[1, 1]), &w(&[2, 1]), spec.ext()),
            Ordering::Less
        );
        assert_eq!(cmp_t(&w(&[3]), &w(&[1, 2]), &spec), Ordering::Less);
    }

    #[test]
    fn literal_three_case_is_not_transitive() {
        // X4X1 < X2X4 (by pi-images), X2X4 < X3X3 < X4X1 (lex)
        let spec = ExtOrderSpec::deglex(4);
        let (a, b, c) = (w(&[4, 1]), w(&[2, 4]), w(&[3, 3]));
        assert_eq!(literal_three_case(&a, &b, &spec), Ordering::Less);
        assert_eq!(literal_three_case(&b, &c, &spec), Ordering::Less);
        assert_eq!(literal_three_case(&c, &a, &spec), Ordering::Less);
        // the implemented order is a genuine total order on these
        let t = FreeOrderSpec::new(spec);
        assert_eq!(t.cmp(&c, &a), Ordering::Less);
        assert_eq!(t.cmp(&a, &b), Ordering::Less);
        assert_eq!(t.cmp(&c, &b), Ordering::Less);
    }

    fn all_words(n: usize, d: usize) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        for _ in 0..d {
            out = out
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    (1..=n).map(move |l| {
                        let mut q = p.clone();
                        q.push(l);
                        q
                    })
                })
                .collect();
        }
        out.iter().map(|v| w(v)).collect()
    }

    #[test]
    fn agrees_with_literal_cases_when_images_are_nonzero() {
        for kind in [OrderKind::Deglex, OrderKind::Degrevlex] {
            let spec = FreeOrderSpec::new(ExtOrderSpec::new(kind, 4));
            for d in 1..=4 {
                let words = all_words(4, d);
                for a in &words {
                    for b in &words {
                        if a.project().is_some() && b.project().is_some() {
                            assert_eq!(spec.cmp(a, b), literal_three_case(a, b, spec.ext()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn exterior_order_is_multiplicative() {
        for n in 1..=5 {
            for spec in [ExtOrderSpec::deglex(n), ExtOrderSpec::degrevlex(n)] {
                let all: Vec<_> = (0..1u64 << n).map(ExtMonomial::from_bits).collect();
                for &m in &all {
                    for &u in &all {
                        if spec.cmp(m, u) != Ordering::Less {
                            continue;
                        }
                        for &t in &all {
                            if m.is_disjoint(t) && u.is_disjoint(t) {
                                assert_eq!(spec.cmp(m.union(t), u.union(t)), Ordering::Less);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn word_order_restricts_to_exterior_order_on_increasing_words() {
        for n in 1..=5 {
            let spec = FreeOrderSpec::degrevlex(n);
            let all: Vec<_> = (0..1u64 << n).map(ExtMonomial::from_bits).collect();
            for &m in &all {
                for &u in all.iter().filter(|u| u.degree() == m.degree()) {
                    assert_eq!(
                        spec.ext().cmp(m, u),
                        spec.cmp(&Word::from(m), &Word::from(u))
                    );
                }
            }
        }
    }

    #[test]
    fn anti_commutator_leading_words() {
        let spec = FreeOrderSpec::deglex(2);
        let f = &FreePolynomial::word(2, &[1, 2]) + &FreePolynomial::word(2, &[2, 1]);
        assert_eq!(leading_term_free(&f, &spec).unwrap(), (w(&[2, 1]), int(1)));
    }

    #[test]
    fn leading_term_of_quadric() {
        let spec = ExtOrderSpec::deglex(3);
        let f = ExtPolynomial::from_terms(3, [(xm(&[1, 2]), int(1)), (xm(&[2, 3]), int(1))]);
        assert_eq!(leading_term_ext(&f, &spec).unwrap(), (xm(&[2, 3]), int(1)));
        let single = ExtPolynomial::monomial(3, xm(&[1]), int(5));
        assert_eq!(
            leading_term_ext(&single, &spec).unwrap(),
            (xm(&[1]), int(5))
        );
        assert_eq!(
            leading_term_ext(&ExtPolynomial::zero(3), &spec),
            Err(Error::ZeroPolynomial)
        );
    }

    fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(1..=n, 0..=max_len).prop_map(|v| Word::from_vars(&v))
    }

    fn sample() -> impl Strategy<Value = (FreeOrderSpec, Vec<Word>)> {
        (1usize..=4, any::<bool>()).prop_flat_map(|(n, rev)| {
            let spec = if rev {
                FreeOrderSpec::degrevlex(n)
            } else {
                FreeOrderSpec::deglex(n)
            };
            (Just(spec), prop::collection::vec(word_strategy(n, 5), 5))
        })
    }

    proptest! {
        #[test]
        fn word_order_is_total_and_multiplicative((spec, s) in sample()) {
            let (m, u, a, b, c) = (&s[0], &s[1], &s[2], &s[3], &s[4]);
            prop_assert_eq!(spec.cmp(m, u), spec.cmp(u, m).reverse());
            prop_assert_eq!(spec.cmp(m, u) == Ordering::Equal, m == u);
            if spec.cmp(m, u) == Ordering::Less && spec.cmp(u, a) == Ordering::Less {
                prop_assert_eq!(spec.cmp(m, a), Ordering::Less);
            }
            if spec.cmp(m, u) == Ordering::Less {
                let (l, r) = (b.letters(), c.letters());
                prop_assert_eq!(spec.cmp(&m.sandwich(l, r), &u.sandwich(l, r)), Ordering::Less);
            }
        }
    }
}
