use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ext::write_terms;
use super::{same_context, ExtPolynomial, Word};
use crate::error::Result;
use crate::order::FreeOrderSpec;
use crate::scalar::Scalar;

/// Element of `K<X1, ..., Xn>`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreePolynomial {
    n: usize,
    terms: BTreeMap<Word, Scalar>,
}

impl FreePolynomial {
    pub fn zero(n: usize) -> Self {
        FreePolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(n: usize, w: Word, c: Scalar) -> Self {
        let mut p = Self::zero(n);
        p.add_term(w, c);
        p
    }

    pub fn word(n: usize, vars: &[usize]) -> Self {
        Self::monomial(n, Word::from_vars(vars), Scalar::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = Self::zero(n);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms_descending(&self, order: &FreeOrderSpec) -> Vec<(Word, Scalar)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(w, c)| (order.key(w), w.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        v.into_iter().map(|(_, w, c)| (w, c)).collect()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Word::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        FreePolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    pub fn monic(&self, order: &FreeOrderSpec) -> Self {
        match crate::order::leading_term_free(self, order) {
            Ok((_, c)) => self.scale(&c.recip()),
            Err(_) => self.clone(),
        }
    }

    /// `A * self * B` for words `A`, `B`.
    pub fn sandwich(&self, left: &[u8], right: &[u8]) -> Self {
        FreePolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.sandwich(left, right), c.clone()))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &FreePolynomial) -> Result<FreePolynomial> {
        same_context(self.n, other.n)?;
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &FreePolynomial) -> Result<FreePolynomial> {
        same_context(self.n, other.n)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }
}

/// The projection `K<X> -> E(V)`, `X_i -> x_i`.
pub fn pi(f: &FreePolynomial) -> ExtPolynomial {
    let mut out = ExtPolynomial::zero(f.n);
    for (w, c) in &f.terms {
        if let Some((neg, m)) = w.project() {
            out.add_term(m, if neg { -c.clone() } else { c.clone() });
        }
    }
    out
}

/// The linear section of `pi` sending `x_{i1}...x_{ir}` (`i1 < ... < ir`) to
/// the increasing word `X_{i1}...X_{ir}`.
pub fn delta(f: &ExtPolynomial) -> FreePolynomial {
    FreePolynomial::from_terms(f.n(), f.terms().map(|(m, c)| (Word::from(*m), c.clone())))
}

impl fmt::Debug for FreePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FreePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = FreeOrderSpec::deglex(self.n.max(1));
        let terms = self.terms_descending(&order);
        write_terms(f, terms.iter().map(|(w, c)| (w.to_string(), c)))
    }
}

impl Add for &FreePolynomial {
    type Output = FreePolynomial;
    fn add(self, rhs: &FreePolynomial) -> FreePolynomial {
        self.checked_add(rhs)
            .expect("free polynomials from different algebras")
    }
}

impl Sub for &FreePolynomial {
    type Output = FreePolynomial;
    fn sub(self, rhs: &FreePolynomial) -> FreePolynomial {
        self + &(-rhs)
    }
}

impl Neg for &FreePolynomial {
    type Output = FreePolynomial;
    fn neg(self) -> FreePolynomial {
        FreePolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &FreePolynomial {
    type Output = FreePolynomial;
    fn mul(self, rhs: &FreePolynomial) -> FreePolynomial {
        self.checked_mul(rhs)
            .expect("free polynomials from different algebras")
    }
}
