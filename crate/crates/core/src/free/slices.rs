use std::collections::HashMap;

use num_traits::One;

use super::{normal_word_count, FreeGroebnerCandidate, MonomialIdealFree};
use crate::algebra::{AlgebraContext, FreePolynomial, Word};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::order::FreeOrderSpec;

/// All words of degree `d` over `n` letters, sorted descending in `order`.
fn words_descending(n: usize, d: usize, order: &FreeOrderSpec) -> Vec<Word> {
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..d {
        words = words
            .into_iter()
            .flat_map(|w| {
                (1..=n as u8).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    let mut keyed: Vec<_> = words
        .into_iter()
        .map(Word::from_letters)
        .map(|w| (order.key(&w), w))
        .collect();
    keyed.sort_by(|a, b| b.0.cmp(&a.0));
    keyed.into_iter().map(|(_, w)| w).collect()
}

#[derive(Debug, Clone)]
struct Slice {
    /// Reduced echelon rows, monic, sorted by leading word descending. Empty
    /// for a slice marked full without elimination.
    rows: Vec<FreePolynomial>,
    leads: Vec<Word>,
    dimension: usize,
    full: bool,
}

/// Homogeneous slices `a_0, ..., a_D` of a two-sided ideal of the free
/// algebra, each in reduced row echelon form.
///
/// `a_d` is spanned by `X_l a_{d-1}`, `a_{d-1} X_l` and the degree-`d`
/// generators. When the leading words of lower slices already divide every
/// word of degree `d`, the slice is the whole space and is not eliminated.
#[derive(Debug, Clone)]
pub struct FreeSlices {
    n: usize,
    order: FreeOrderSpec,
    slices: Vec<Slice>,
    new_leads: Vec<Vec<Word>>,
}

impl FreeSlices {
    pub fn new(
        order: FreeOrderSpec,
        generators: &[FreePolynomial],
        max_degree: usize,
    ) -> Result<Self> {
        let n = order.n();
        AlgebraContext::new(n)?;
        for (index, g) in generators.iter().enumerate() {
            if g.n() != n {
                return Err(Error::ContextMismatch {
                    left: n,
                    right: g.n(),
                });
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous { index });
            }
        }
        let mut slices: Vec<Slice> = Vec::with_capacity(max_degree + 1);
        let mut new_leads: Vec<Vec<Word>> = Vec::with_capacity(max_degree + 1);
        let mut cone = MonomialIdealFree::zero(n);
        for d in 0..=max_degree {
            let total = (n as u128).checked_pow(d as u32);
            if d > 0 && normal_word_count(&cone, d) == 0u32.into() {
                let dimension =
                    usize::try_from(total.expect("full slice size")).expect("full slice size");
                slices.push(Slice {
                    rows: Vec::new(),
                    leads: Vec::new(),
                    dimension,
                    full: true,
                });
                new_leads.push(Vec::new());
                continue;
            }
            let columns = words_descending(n, d, &order);
            let index: HashMap<&Word, usize> =
                columns.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let to_row = |f: &FreePolynomial| -> SparseRow {
                let mut row: SparseRow = f.terms().map(|(w, c)| (index[w], c.clone())).collect();
                row.sort_by_key(|e| e.0);
                row
            };
            let mut ech = Echelon::new();
            let mut candidates: Vec<FreePolynomial> = Vec::new();
            if d > 0 {
                for row in &slices[d - 1].rows {
                    for l in 1..=n as u8 {
                        candidates.push(row.sandwich(&[l], &[]));
                        candidates.push(row.sandwich(&[], &[l]));
                    }
                }
            }
            candidates.extend(
                generators
                    .iter()
                    .filter(|g| !g.is_zero() && g.homogeneous_degree() == Some(d))
                    .cloned(),
            );
            for f in &candidates {
                if ech.rank() == columns.len() {
                    break;
                }
                ech.insert(to_row(f));
            }
            let rows: Vec<FreePolynomial> = ech
                .into_reduced()
                .into_iter()
                .map(|r| {
                    FreePolynomial::from_terms(
                        n,
                        r.into_iter().map(|(c, v)| (columns[c].clone(), v)),
                    )
                })
                .collect();
            let leads: Vec<Word> = rows
                .iter()
                .map(|r| {
                    let (w, c) = r
                        .terms_descending(&order)
                        .into_iter()
                        .next()
                        .expect("nonzero row");
                    debug_assert!(c.is_one());
                    w
                })
                .collect();
            let fresh: Vec<Word> = leads
                .iter()
                .filter(|w| !cone.contains(w))
                .cloned()
                .collect();
            if !fresh.is_empty() {
                cone = MonomialIdealFree::new(
                    n,
                    cone.generators()
                        .iter()
                        .cloned()
                        .chain(fresh.iter().cloned()),
                );
            }
            let full = rows.len() == columns.len();
            slices.push(Slice {
                dimension: rows.len(),
                rows,
                leads,
                full,
            });
            new_leads.push(fresh);
        }
        Ok(FreeSlices {
            n,
            order,
            slices,
            new_leads,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &FreeOrderSpec {
        &self.order
    }

    pub fn max_degree(&self) -> usize {
        self.slices.len() - 1
    }

    /// `dim a_d`.
    pub fn dimension(&self, d: usize) -> usize {
        self.slices[d].dimension
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.slices.iter().map(|s| s.dimension).collect()
    }

    /// Whether `a_d` contains every word of degree `d`.
    pub fn is_full(&self, d: usize) -> bool {
        self.slices[d].full
    }

    /// Echelon basis of `a_d`; a slice that is full by the divisibility
    /// shortcut is returned as the list of all words.
    pub fn basis(&self, d: usize) -> Vec<FreePolynomial> {
        let s = &self.slices[d];
        if s.full && s.rows.is_empty() && s.dimension > 0 {
            return words_descending(self.n, d, &self.order)
                .into_iter()
                .map(|w| FreePolynomial::monomial(self.n, w, crate::scalar::int(1)))
                .collect();
        }
        s.rows.clone()
    }

    /// Leading words of degree `d` not divisible by a lower leading word:
    /// the degree-`d` minimal generators of the initial ideal.
    pub fn new_leading_words(&self, d: usize) -> &[Word] {
        &self.new_leads[d]
    }

    /// Minimal generators of the initial ideal up to the degree cap.
    pub fn initial_ideal(&self) -> MonomialIdealFree {
        MonomialIdealFree::new(self.n, self.new_leads.iter().flatten().cloned())
    }

    /// Reduced Gröbner basis elements of degree at most the cap.
    pub fn groebner_elements(&self) -> Vec<FreePolynomial> {
        let mut out = Vec::new();
        for (d, s) in self.slices.iter().enumerate() {
            for w in &self.new_leads[d] {
                let k = s
                    .leads
                    .iter()
                    .position(|l| l == w)
                    .expect("new lead comes from a row");
                out.push(s.rows[k].clone());
            }
        }
        out
    }
}

/// Gröbner basis of the ideal generated by `generators`, complete in degrees
/// up to `max_degree`. The returned candidate carries that degree cap.
pub fn truncated_groebner_free(
    order: FreeOrderSpec,
    generators: &[FreePolynomial],
    max_degree: usize,
) -> Result<FreeGroebnerCandidate> {
    let slices = FreeSlices::new(order.clone(), generators, max_degree)?;
    Ok(
        FreeGroebnerCandidate::new(order, slices.groebner_elements())?
            .with_degree_cap(Some(max_degree)),
    )
}
