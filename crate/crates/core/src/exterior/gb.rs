use std::fmt;

use num_traits::One;

use super::MonomialIdealExt;
use crate::algebra::{binomial, ExtMonomial, ExtPolynomial};
use crate::error::{Error, Result};
use crate::linalg::reduced_basis;
use crate::order::{leading_term_ext, ExtOrderSpec};

/// Homogeneous ideal of `E(V)` with a fixed term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtIdeal {
    generators: Vec<ExtPolynomial>,
    order: ExtOrderSpec,
}

impl ExtIdeal {
    /// Zero generators are discarded; others must be homogeneous of degree
    /// at least one.
    pub fn new(order: ExtOrderSpec, generators: Vec<ExtPolynomial>) -> Result<Self> {
        let n = order.n();
        let mut kept = Vec::with_capacity(generators.len());
        for (index, g) in generators.into_iter().enumerate() {
            crate::algebra::AlgebraContext::new(g.n())?;
            if g.n() != n {
                return Err(Error::ContextMismatch {
                    left: n,
                    right: g.n(),
                });
            }
            if g.is_zero() {
                continue;
            }
            let degree = g
                .homogeneous_degree()
                .ok_or(Error::NotHomogeneous { index })?;
            if degree == 0 {
                return Err(Error::DegreeTooLow {
                    index,
                    degree,
                    min: 1,
                });
            }
            kept.push(g);
        }
        Ok(ExtIdeal {
            generators: kept,
            order,
        })
    }

    pub fn n(&self) -> usize {
        self.order.n()
    }

    pub fn order(&self) -> &ExtOrderSpec {
        &self.order
    }

    pub fn generators(&self) -> &[ExtPolynomial] {
        &self.generators
    }

    pub fn min_generator_degree(&self) -> Option<usize> {
        self.generators
            .iter()
            .filter_map(|g| g.homogeneous_degree())
            .min()
    }

    /// Reduced bases of the slices `I_0, ..., I_max_degree`.
    ///
    /// `I_d` is spanned by `x_i * I_{d-1}` and the degree-`d` generators:
    /// homogeneous elements commute up to sign, so left multiples already
    /// span the two-sided ideal.
    pub fn slices(&self, max_degree: usize) -> Vec<Vec<ExtPolynomial>> {
        let n = self.n();
        let top = max_degree.min(n);
        let mut out: Vec<Vec<ExtPolynomial>> = Vec::with_capacity(max_degree + 1);
        for d in 0..=top {
            let mut rows: Vec<Vec<(ExtMonomial, crate::Scalar)>> = Vec::new();
            if d > 0 {
                for b in &out[d - 1] {
                    for v in 1..=n {
                        let p = b.left_mul_monomial(ExtMonomial::var(v));
                        if !p.is_zero() {
                            rows.push(p.terms().map(|(m, c)| (*m, c.clone())).collect());
                        }
                    }
                }
            }
            for g in self
                .generators
                .iter()
                .filter(|g| g.homogeneous_degree() == Some(d))
            {
                rows.push(g.terms().map(|(m, c)| (*m, c.clone())).collect());
            }
            let basis = reduced_basis(rows, |a, b| self.order.cmp(*a, *b));
            out.push(
                basis
                    .into_iter()
                    .map(|r| ExtPolynomial::from_terms(n, r))
                    .collect(),
            );
        }
        // E(V) vanishes above degree n
        out.resize(max_degree + 1, Vec::new());
        out
    }

    pub fn slice_dimensions(&self) -> Vec<usize> {
        self.slices(self.n()).iter().map(Vec::len).collect()
    }
}

/// Gröbner basis of an exterior ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtGroebnerBasis {
    n: usize,
    elements: Vec<ExtPolynomial>,
    order: ExtOrderSpec,
    minimal: bool,
    reduced: bool,
}

impl ExtGroebnerBasis {
    /// Wrap a basis computed elsewhere. Elements are made monic; the
    /// minimality flag is derived from the leading monomials, the reduced
    /// flag is taken on trust.
    pub fn from_elements(
        order: ExtOrderSpec,
        elements: Vec<ExtPolynomial>,
        reduced: bool,
    ) -> Result<Self> {
        let n = order.n();
        let mut monic = Vec::with_capacity(elements.len());
        for (index, f) in elements.into_iter().enumerate() {
            if f.n() != n {
                return Err(Error::ContextMismatch {
                    left: n,
                    right: f.n(),
                });
            }
            if f.homogeneous_degree().is_none() {
                return Err(Error::NotHomogeneous { index });
            }
            monic.push(f.monic(&order));
        }
        let leads: Vec<ExtMonomial> = monic
            .iter()
            .map(|f| leading_term_ext(f, &order).unwrap().0)
            .collect();
        let minimal = leads.iter().enumerate().all(|(i, a)| {
            leads
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.divides(*b))
        });
        Ok(ExtGroebnerBasis {
            n,
            elements: monic,
            order,
            minimal,
            reduced,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[ExtPolynomial] {
        &self.elements
    }

    pub fn order(&self) -> &ExtOrderSpec {
        &self.order
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<ExtMonomial> {
        self.elements
            .iter()
            .map(|f| leading_term_ext(f, &self.order).unwrap().0)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl fmt::Display for ExtGroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.elements {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Reduced row echelon basis of `I_d`, rows sorted by leading monomial
/// (descending).
pub fn ideal_degree_basis(ideal: &ExtIdeal, d: usize) -> Vec<ExtPolynomial> {
    ideal.slices(d).pop().unwrap_or_default()
}

/// Reduced minimal Gröbner basis, by row reduction of every slice.
pub fn groebner_ext(ideal: &ExtIdeal) -> ExtGroebnerBasis {
    let n = ideal.n();
    let order = ideal.order().clone();
    let mut leads = MonomialIdealExt::zero(n);
    let mut elements = Vec::new();
    for slice in ideal.slices(n) {
        let mut fresh = Vec::new();
        for row in slice {
            let (lead, c) = leading_term_ext(&row, &order).expect("echelon rows are nonzero");
            debug_assert!(c.is_one());
            if !leads.contains(lead) {
                fresh.push(lead);
                elements.push(row);
            }
        }
        if !fresh.is_empty() {
            leads = MonomialIdealExt::new(n, leads.generators().iter().copied().chain(fresh));
        }
    }
    ExtGroebnerBasis {
        n,
        elements,
        order,
        minimal: true,
        reduced: true,
    }
}

pub fn initial_ideal_ext(gb: &ExtGroebnerBasis) -> MonomialIdealExt {
    MonomialIdealExt::new(gb.n(), gb.leading_monomials())
}

/// `dim (E/I)_d` for `d = 0..=n`.
pub fn hilbert_ext(ideal: &ExtIdeal) -> Vec<u128> {
    let n = ideal.n();
    ideal
        .slice_dimensions()
        .into_iter()
        .enumerate()
        .map(|(d, dim)| binomial(n, d) - dim as u128)
        .collect()
}
