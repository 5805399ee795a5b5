use std::fmt;

use crate::algebra::ExtMonomial;

/// Monomial ideal of `E(V)` given by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdealExt {
    n: usize,
    /// Antichain under divisibility, sorted by degree then bit pattern.
    gens: Vec<ExtMonomial>,
}

impl MonomialIdealExt {
    pub fn zero(n: usize) -> Self {
        MonomialIdealExt {
            n,
            gens: Vec::new(),
        }
    }

    /// Ideal generated by arbitrary monomials; non-minimal ones are dropped.
    pub fn new(n: usize, gens: impl IntoIterator<Item = ExtMonomial>) -> Self {
        let mut all: Vec<ExtMonomial> = gens.into_iter().collect();
        all.sort_by_key(|m| (m.degree(), m.bits()));
        all.dedup();
        let mut minimal: Vec<ExtMonomial> = Vec::with_capacity(all.len());
        for m in all {
            if !minimal.iter().any(|g| g.divides(m)) {
                minimal.push(m);
            }
        }
        MonomialIdealExt { n, gens: minimal }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExtMonomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: ExtMonomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_minimal_generator(&self, m: ExtMonomial) -> bool {
        self.gens.contains(&m)
    }

    /// Every square-free monomial in the ideal; exponential in `n`.
    pub fn members(&self) -> Vec<ExtMonomial> {
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut out = std::collections::BTreeSet::new();
        for g in &self.gens {
            let free = full & !g.bits();
            // enumerate subsets of `free`
            let mut s = free;
            loop {
                out.insert(ExtMonomial::from_bits(g.bits() | s));
                if s == 0 {
                    break;
                }
                s = (s - 1) & free;
            }
        }
        out.into_iter().collect()
    }

    /// Number of degree-`d` monomials in the ideal.
    pub fn count_in_degree(&self, d: usize) -> u128 {
        self.members()
            .into_iter()
            .filter(|m| m.degree() == d)
            .count() as u128
    }
}

impl fmt::Debug for MonomialIdealExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MonomialIdealExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

pub fn divides_ext(a: ExtMonomial, b: ExtMonomial) -> bool {
    a.divides(b)
}

pub fn member_monomial(l: &MonomialIdealExt, m: ExtMonomial) -> bool {
    l.contains(m)
}
