use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::same_context;
use crate::error::Result;
use crate::order::ExtOrderSpec;
use crate::scalar::Scalar;

/// Square-free monomial `x_I`, stored as a bit set (bit `i - 1` is `x_i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExtMonomial(u64);

impl ExtMonomial {
    pub const ONE: ExtMonomial = ExtMonomial(0);

    pub fn from_bits(bits: u64) -> Self {
        ExtMonomial(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The variable `x_var`.
    pub fn var(var: usize) -> Self {
        assert!((1..=64).contains(&var), "variable index {var} out of range");
        ExtMonomial(1 << (var - 1))
    }

    /// `x_I` for a set of distinct variable numbers, in any order.
    ///
    /// Panics on repeated or out-of-range indices.
    pub fn from_vars(vars: &[usize]) -> Self {
        let mut bits = 0u64;
        for &v in vars {
            let b = ExtMonomial::var(v).0;
            assert!(
                bits & b == 0,
                "repeated variable x{v} in square-free monomial"
            );
            bits |= b;
        }
        ExtMonomial(bits)
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Variable numbers in increasing order.
    pub fn vars(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v + 1)
            }
        })
    }

    pub fn contains_var(self, var: usize) -> bool {
        self.0 & (1 << (var - 1)) != 0
    }

    /// `x_I / x_var`; panics if `x_var` does not divide.
    pub fn without_var(self, var: usize) -> Self {
        assert!(self.contains_var(var));
        ExtMonomial(self.0 & !(1 << (var - 1)))
    }

    pub fn min_var(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_var(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Exterior divisibility: `self | other` iff `self` is a subset.
    pub fn divides(self, other: ExtMonomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ExtMonomial) -> bool {
        self.0 & other.0 == 0
    }

    /// Set union, ignoring signs.
    pub fn union(self, other: ExtMonomial) -> Self {
        ExtMonomial(self.0 | other.0)
    }

    /// Set difference `self \ other`, ignoring signs.
    pub fn difference(self, other: ExtMonomial) -> Self {
        ExtMonomial(self.0 & !other.0)
    }

    /// `x_I * x_J`: `None` when `I` and `J` meet, otherwise the sign
    /// (`true` for `-1`) and `x_{I u J}`. The sign is the parity of
    /// `#{(i, j) in I x J : i > j}`.
    pub fn mul(self, other: ExtMonomial) -> Option<(bool, ExtMonomial)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inversions = 0u32;
        let mut rest = other.0;
        while rest != 0 {
            let j = rest.trailing_zeros();
            rest &= rest - 1;
            // bits of `self` strictly above position j
            let above = if j == 63 { 0 } else { self.0 >> (j + 1) };
            inversions += above.count_ones();
        }
        Some((inversions % 2 == 1, ExtMonomial(self.0 | other.0)))
    }
}

impl fmt::Debug for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for v in self.vars() {
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

/// Element of `E(V)`: a finite map from square-free monomials to nonzero
/// rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtPolynomial {
    n: usize,
    terms: BTreeMap<ExtMonomial, Scalar>,
}

impl ExtPolynomial {
    pub fn zero(n: usize) -> Self {
        ExtPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, ExtMonomial::ONE, Scalar::one())
    }

    pub fn monomial(n: usize, m: ExtMonomial, c: Scalar) -> Self {
        let mut p = Self::zero(n);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (ExtMonomial, Scalar)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
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

    /// Terms in the canonical (bit set) order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExtMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: ExtMonomial) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn monomials(&self) -> impl Iterator<Item = ExtMonomial> + '_ {
        self.terms.keys().copied()
    }

    /// Terms sorted descending in the given order.
    pub fn terms_descending(&self, order: &ExtOrderSpec) -> Vec<(ExtMonomial, Scalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn add_term(&mut self, m: ExtMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    /// Degree of the homogeneous polynomial, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.degree());
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
        ExtPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Divide by the leading coefficient in `order`.
    pub fn monic(&self, order: &ExtOrderSpec) -> Self {
        match crate::order::leading_term_ext(self, order) {
            Ok((_, c)) => self.scale(&c.recip()),
            Err(_) => self.clone(),
        }
    }

    /// `x_m * self` with signs.
    pub fn left_mul_monomial(&self, m: ExtMonomial) -> Self {
        let mut out = Self::zero(self.n);
        for (t, c) in &self.terms {
            if let Some((neg, prod)) = m.mul(*t) {
                out.add_term(prod, if neg { -c.clone() } else { c.clone() });
            }
        }
        out
    }

    /// `self * x_m` with signs.
    pub fn right_mul_monomial(&self, m: ExtMonomial) -> Self {
        let mut out = Self::zero(self.n);
        for (t, c) in &self.terms {
            if let Some((neg, prod)) = t.mul(m) {
                out.add_term(prod, if neg { -c.clone() } else { c.clone() });
            }
        }
        out
    }

    pub fn checked_mul(&self, other: &ExtPolynomial) -> Result<ExtPolynomial> {
        same_context(self.n, other.n)?;
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((neg, prod)) = a.mul(*b) {
                    let c = ca * cb;
                    out.add_term(prod, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &ExtPolynomial) -> Result<ExtPolynomial> {
        same_context(self.n, other.n)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }
}

/// Product in `E(V)`.
pub fn mul_ext(a: &ExtPolynomial, b: &ExtPolynomial) -> Result<ExtPolynomial> {
    a.checked_mul(b)
}

impl fmt::Debug for ExtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = ExtOrderSpec::deglex(self.n.max(1));
        write_terms(
            f,
            self.terms_descending(&order)
                .iter()
                .map(|(m, c)| (m.to_string(), c)),
        )
    }
}

pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Scalar)>,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in terms {
        let neg = c < &Scalar::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        if m == "1" {
            write!(f, "{}", crate::scalar::to_display_string(&abs))?;
        } else if abs.is_one() {
            f.write_str(&m)?;
        } else {
            write!(f, "{}*{}", crate::scalar::to_display_string(&abs), m)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl Add for &ExtPolynomial {
    type Output = ExtPolynomial;
    fn add(self, rhs: &ExtPolynomial) -> ExtPolynomial {
        self.checked_add(rhs)
            .expect("exterior polynomials from different algebras")
    }
}

impl Sub for &ExtPolynomial {
    type Output = ExtPolynomial;
    fn sub(self, rhs: &ExtPolynomial) -> ExtPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &ExtPolynomial {
    type Output = ExtPolynomial;
    fn neg(self) -> ExtPolynomial {
        ExtPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &ExtPolynomial {
    type Output = ExtPolynomial;
    /// Panics if the operands come from different algebras; see [`mul_ext`].
    fn mul(self, rhs: &ExtPolynomial) -> ExtPolynomial {
        self.checked_mul(rhs)
            .expect("exterior polynomials from different algebras")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn x(vars: &[usize]) -> ExtPolynomial {
        ExtPolynomial::monomial(4, ExtMonomial::from_vars(vars), int(1))
    }

    /// Sign of sorting a list by adjacent transpositions.
    fn bubble_sign(mut v: Vec<usize>) -> Option<bool> {
        let mut swaps = 0;
        for i in 0..v.len() {
            for j in 0..v.len() - 1 - i {
                if v[j] == v[j + 1] {
                    return None;
                }
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    swaps += 1;
                }
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(swaps % 2 == 1)
    }

    #[test]
    fn sorted_product_keeps_sign() {
        assert_eq!(&x(&[1]) * &x(&[2]), x(&[1, 2]));
    }

    #[test]
    fn transposition_flips_sign() {
        assert_eq!(&x(&[2]) * &x(&[1]), -&x(&[1, 2]));
    }

    #[test]
    fn inversion_count_matches_bubble_sort() {
        // x1x3 * x2: one inversion
        assert_eq!(bubble_sign(vec![1, 3, 2]), Some(true));
        assert_eq!(&x(&[1, 3]) * &x(&[2]), -&x(&[1, 2, 3]));
        for a in 0u64..16 {
            for b in 0u64..16 {
                let (ma, mb) = (ExtMonomial::from_bits(a), ExtMonomial::from_bits(b));
                let concat: Vec<usize> = ma.vars().chain(mb.vars()).collect();
                let expected = bubble_sign(concat);
                let got = ma.mul(mb).map(|(s, _)| s);
                assert_eq!(got, expected, "{ma} * {mb}");
            }
        }
    }

    #[test]
    fn repeated_variable_vanishes() {
        assert!((&x(&[1, 2]) * &x(&[2, 3])).is_zero());
    }

    #[test]
    fn context_mismatch_is_rejected() {
        let a = ExtPolynomial::one(3);
        let b = ExtPolynomial::one(4);
        assert!(mul_ext(&a, &b).is_err());
    }

    #[test]
    fn display_uses_deglex_descending() {
        let p = &x(&[1, 2]).scale(&int(3)) - &x(&[3, 4]);
        assert_eq!(p.to_string(), "-x3x4 + 3*x1x2");
    }
}
