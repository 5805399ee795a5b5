use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use super::automaton::{find_first_linear, PatternAutomaton};
use super::MonomialIdealFree;
use crate::algebra::{AlgebraContext, FreePolynomial, Word};
use crate::error::{Error, Result};
use crate::order::{leading_term_free, FreeOrderSpec, WordKey};
use crate::scalar::Scalar;

/// Offsets at which `a` occurs in `b` as a contiguous factor; nonempty iff
/// `a` divides `b`.
pub fn subword_divides(a: &Word, b: &Word) -> Vec<usize> {
    b.occurrences(a)
}

/// Monic homogeneous polynomials proposed as a Gröbner basis.
#[derive(Debug, Clone)]
pub struct FreeGroebnerCandidate {
    n: usize,
    elements: Vec<FreePolynomial>,
    leads: Vec<Word>,
    order: FreeOrderSpec,
    degree_cap: Option<usize>,
    automaton: PatternAutomaton,
}

impl FreeGroebnerCandidate {
    pub fn new(order: FreeOrderSpec, elements: Vec<FreePolynomial>) -> Result<Self> {
        let n = order.n();
        AlgebraContext::new(n)?;
        let mut monic = Vec::with_capacity(elements.len());
        let mut leads = Vec::with_capacity(elements.len());
        for (index, f) in elements.into_iter().enumerate() {
            if f.n() != n {
                return Err(Error::ContextMismatch {
                    left: n,
                    right: f.n(),
                });
            }
            if !f.is_homogeneous() {
                return Err(Error::NotHomogeneous { index });
            }
            let (lead, c) = leading_term_free(&f, &order)?;
            monic.push(f.scale(&c.recip()));
            leads.push(lead);
        }
        let automaton = PatternAutomaton::new(n, &leads);
        Ok(FreeGroebnerCandidate {
            n,
            elements: monic,
            leads,
            order,
            degree_cap: None,
            automaton,
        })
    }

    /// Skip obstructions whose overlap word is longer than `cap`.
    pub fn with_degree_cap(mut self, cap: Option<usize>) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[FreePolynomial] {
        &self.elements
    }

    pub fn leading_words(&self) -> &[Word] {
        &self.leads
    }

    pub fn order(&self) -> &FreeOrderSpec {
        &self.order
    }

    pub fn degree_cap(&self) -> Option<usize> {
        self.degree_cap
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// No leading word is a contiguous subword of another (nor repeated).
    pub fn is_minimal(&self) -> bool {
        self.leads.iter().enumerate().all(|(i, a)| {
            self.leads
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !b.contains_subword(a))
        })
    }
}

fn reduce_with<M>(f: &FreePolynomial, g: &FreeGroebnerCandidate, find: M) -> FreePolynomial
where
    M: Fn(&Word) -> Option<(usize, usize)>,
{
    let order = &g.order;
    let mut todo: BTreeMap<WordKey, (Word, Scalar)> = f
        .terms()
        .map(|(w, c)| (order.key(w), (w.clone(), c.clone())))
        .collect();
    let mut out = FreePolynomial::zero(f.n());
    while let Some((_, (w, c))) = todo.pop_last() {
        let Some((idx, off)) = find(&w) else {
            out.add_term(w, c);
            continue;
        };
        let lead = &g.leads[idx];
        let (left, right) = (&w.letters()[..off], &w.letters()[off + lead.degree()..]);
        for (t, a) in g.elements[idx].terms() {
            if t == lead {
                continue;
            }
            let word = t.sandwich(left, right);
            let delta = -(&c * a);
            match todo.entry(order.key(&word)) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert((word, delta));
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    e.get_mut().1 += delta;
                    if num_traits::Zero::is_zero(&e.get().1) {
                        e.remove();
                    }
                }
            }
        }
    }
    out
}

/// Fully reduce `f`: rewrite the largest reducible word `A in(g) B` to
/// `A (in(g) - g) B` until no word contains a leading word of `g`.
pub fn normal_form(f: &FreePolynomial, g: &FreeGroebnerCandidate) -> FreePolynomial {
    reduce_with(f, g, |w| g.automaton.find_first(w))
}

/// [`normal_form`] with leading words located by scanning every pattern.
pub fn normal_form_linear_scan(f: &FreePolynomial, g: &FreeGroebnerCandidate) -> FreePolynomial {
    reduce_with(f, g, |w| find_first_linear(&g.leads, w))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionKind {
    /// A proper suffix of the first leading word is a prefix of the second.
    Overlap,
    /// The second leading word occurs inside the first.
    Inclusion,
}

/// An ambiguity between two leading words and the normal form of its
/// S-polynomial.
#[derive(Debug, Clone)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub first: usize,
    pub second: usize,
    /// Overlap length, or offset of the included word.
    pub position: usize,
    pub word: Word,
    pub remainder: FreePolynomial,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ObstructionKind::Overlap => "overlap",
            ObstructionKind::Inclusion => "inclusion",
        };
        write!(
            f,
            "{kind} of #{} and #{} on {}: remainder {}",
            self.first, self.second, self.word, self.remainder
        )
    }
}

#[derive(Debug, Clone)]
pub struct ObstructionReport {
    pub checked: usize,
    pub skipped_above_cap: usize,
    pub failures: Vec<Obstruction>,
}

impl ObstructionReport {
    pub fn resolves(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Ambiguity {
    kind: ObstructionKind,
    first: usize,
    second: usize,
    position: usize,
    word: Word,
}

fn ambiguities(leads: &[Word]) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    for (i, a) in leads.iter().enumerate() {
        for (j, b) in leads.iter().enumerate() {
            let (la, lb) = (a.letters(), b.letters());
            for k in 1..la.len().min(lb.len()) {
                if la[la.len() - k..] == lb[..k] {
                    out.push(Ambiguity {
                        kind: ObstructionKind::Overlap,
                        first: i,
                        second: j,
                        position: k,
                        word: a.concat(&b.subword(k, lb.len())),
                    });
                }
            }
            let include = i != j && (lb.len() < la.len() || (a == b && j < i));
            if include {
                for off in a.occurrences(b) {
                    out.push(Ambiguity {
                        kind: ObstructionKind::Inclusion,
                        first: i,
                        second: j,
                        position: off,
                        word: a.clone(),
                    });
                }
            }
        }
    }
    out.sort_by_key(|a| a.word.degree());
    out
}

fn s_polynomial(g: &FreeGroebnerCandidate, amb: &Ambiguity) -> FreePolynomial {
    let (f1, f2) = (&g.elements[amb.first], &g.elements[amb.second]);
    let (a, b) = (g.leads[amb.first].letters(), g.leads[amb.second].letters());
    match amb.kind {
        ObstructionKind::Overlap => {
            let k = amb.position;
            &f1.sandwich(&[], &b[k..]) - &f2.sandwich(&a[..a.len() - k], &[])
        }
        ObstructionKind::Inclusion => {
            let off = amb.position;
            f1 - &f2.sandwich(&a[..off], &a[off + b.len()..])
        }
    }
}

/// Resolve every overlap and inclusion ambiguity among the leading words,
/// in increasing degree, up to the candidate's degree cap.
pub fn obstructions_resolve(g: &FreeGroebnerCandidate) -> ObstructionReport {
    let all = ambiguities(&g.leads);
    let (kept, skipped): (Vec<_>, Vec<_>) = all
        .into_iter()
        .partition(|a| g.degree_cap.is_none_or(|cap| a.word.degree() <= cap));
    let failures: Vec<Obstruction> = kept
        .par_iter()
        .filter_map(|amb| {
            let remainder = normal_form(&s_polynomial(g, amb), g);
            (!remainder.is_zero()).then(|| Obstruction {
                kind: amb.kind,
                first: amb.first,
                second: amb.second,
                position: amb.position,
                word: amb.word.clone(),
                remainder,
            })
        })
        .collect();
    ObstructionReport {
        checked: kept.len(),
        skipped_above_cap: skipped.len(),
        failures,
    }
}

/// Minimal generators of the initial ideal of a certified Gröbner basis.
pub fn initial_ideal_free(g: &FreeGroebnerCandidate) -> Result<MonomialIdealFree> {
    let report = obstructions_resolve(g);
    if !report.resolves() {
        return Err(Error::NotGroebner(report.failures.len()));
    }
    Ok(MonomialIdealFree::new(g.n, g.leads.iter().cloned()))
}
