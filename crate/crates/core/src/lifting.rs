//! Lifting exterior Gröbner bases to the free algebra, and the combinatorial
//! predicates on square-free monomial ideals that govern the lift.

use std::fmt;

use crate::algebra::{delta, ExtMonomial, ExtPolynomial, FreePolynomial, Word};
use crate::error::{Error, Result};
use crate::exterior::{initial_ideal_ext, ExtGroebnerBasis, MonomialIdealExt};
use crate::free::{FreeGroebnerCandidate, MonomialIdealFree};
use crate::order::{leading_term_ext, ExtOrderSpec, FreeOrderSpec};
use crate::scalar::int;

/// Generators `X_iX_j + X_jX_i` (`i < j`) and `X_i^2` of the anti-commutator
/// ideal, ordered by leading word `X_jX_i`.
pub fn anti_commutators(n: usize) -> Vec<FreePolynomial> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for j in 1..=n {
        for i in 1..=j {
            let f = if i == j {
                FreePolynomial::word(n, &[i, i])
            } else {
                FreePolynomial::from_terms(
                    n,
                    [
                        (Word::from_vars(&[i, j]), int(1)),
                        (Word::from_vars(&[j, i]), int(1)),
                    ],
                )
            };
            out.push(f);
        }
    }
    out
}

/// Leading words `X_jX_i`, `i <= j`, of the anti-commutators.
pub fn anti_commutator_leads(n: usize) -> Vec<Word> {
    (1..=n)
        .flat_map(|j| (1..=j).map(move |i| Word::from_vars(&[j, i])))
        .collect()
}

/// The multipliers `u` attached to `m` in `L`: square-free monomials in the
/// variables strictly between the extreme indices of `m`, disjoint from
/// `m`, with neither `u * m / x_first` nor `u * m / x_last` in `L`.
///
/// Returned in ascending degree-lexicographic order, so `1` comes first when
/// present.
pub fn compute_u(l: &MonomialIdealExt, m: ExtMonomial) -> Result<Vec<ExtMonomial>> {
    if !l.contains(m) {
        return Err(Error::NotInIdeal(m.to_string()));
    }
    let (Some(first), Some(last)) = (m.min_var(), m.max_var()) else {
        return Ok(vec![ExtMonomial::ONE]);
    };
    let free: Vec<usize> = (first + 1..last).filter(|&v| !m.contains_var(v)).collect();
    let head = m.without_var(last);
    let tail = m.without_var(first);
    let mut out = Vec::new();
    for mask in 0u64..1 << free.len() {
        let u = ExtMonomial::from_bits(
            free.iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .fold(0, |b, (_, &v)| b | 1 << (v - 1)),
        );
        if !l.contains(u.union(tail)) && !l.contains(u.union(head)) {
            out.push(u);
        }
    }
    out.sort_by_key(|u| (u.degree(), u.bits()));
    Ok(out)
}

fn reject_linear(l: &MonomialIdealExt) -> Result<()> {
    match l.generators().iter().find(|g| g.degree() < 2) {
        Some(g) => Err(Error::LinearGenerator(g.to_string())),
        None => Ok(()),
    }
}

/// A minimal generator `m` and a multiplier `u != 1` in its `U`-set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SqueezeWitness {
    pub generator: ExtMonomial,
    pub multiplier: ExtMonomial,
}

/// First obstruction to squeezedness, scanning generators in order.
pub fn squeeze_witness(l: &MonomialIdealExt) -> Result<Option<SqueezeWitness>> {
    reject_linear(l)?;
    for &m in l.generators() {
        if let Some(&u) = compute_u(l, m)?.iter().find(|u| !u.is_one()) {
            return Ok(Some(SqueezeWitness {
                generator: m,
                multiplier: u,
            }));
        }
    }
    Ok(None)
}

/// `U(m) = {1}` for every minimal generator `m`.
pub fn is_squeezed(l: &MonomialIdealExt) -> Result<bool> {
    Ok(squeeze_witness(l)?.is_none())
}

/// Preference order on the variables for the exchange `m -> x_i m / x_j`:
/// a variable may replace any variable it precedes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeOrder {
    /// Variables, most preferred first.
    preferred: Vec<usize>,
    /// `position[v - 1]` is the index of `v` in `preferred`.
    position: Vec<usize>,
}

impl ExchangeOrder {
    fn from_preferred(preferred: Vec<usize>) -> Self {
        let mut position = vec![0; preferred.len()];
        for (k, &v) in preferred.iter().enumerate() {
            position[v - 1] = k;
        }
        ExchangeOrder {
            preferred,
            position,
        }
    }

    /// `x_1` preferred over `x_2` over ... : the textbook convention, where a
    /// stable ideal is closed under `x_i m / x_j` for `i <= j`.
    pub fn index_ascending(n: usize) -> Self {
        Self::from_preferred((1..=n).collect())
    }

    /// Larger variables under the term order are preferred: the orientation
    /// in which generic initial ideals for `spec` are strongly stable.
    pub fn for_term_order(spec: &ExtOrderSpec) -> Self {
        Self::from_preferred(spec.descending_vars())
    }

    pub fn n(&self) -> usize {
        self.preferred.len()
    }

    pub fn preferred(&self) -> &[usize] {
        &self.preferred
    }

    fn pos(&self, v: usize) -> usize {
        self.position[v - 1]
    }

    /// Variables at least as preferred as `v`.
    fn at_least(&self, v: usize) -> &[usize] {
        &self.preferred[..=self.pos(v)]
    }

    /// The least preferred variable of `m`.
    fn weakest(&self, m: ExtMonomial) -> Option<usize> {
        m.vars().max_by_key(|&v| self.pos(v))
    }
}

/// A member `m` with `x_j | m` whose exchange `x_i m / x_j` is nonzero and
/// outside the ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilityWitness {
    pub monomial: ExtMonomial,
    pub removed: usize,
    pub inserted: usize,
    pub image: ExtMonomial,
}

impl fmt::Display for StabilityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x{} * {} / x{} = {} is not in the ideal",
            self.inserted, self.monomial, self.removed, self.image
        )
    }
}

fn exchange_failure(
    l: &MonomialIdealExt,
    m: ExtMonomial,
    j: usize,
    order: &ExchangeOrder,
) -> Option<StabilityWitness> {
    let rest = m.without_var(j);
    order.at_least(j).iter().find_map(|&i| {
        if rest.contains_var(i) {
            return None;
        }
        let image = rest.union(ExtMonomial::var(i));
        (!l.contains(image)).then_some(StabilityWitness {
            monomial: m,
            removed: j,
            inserted: i,
            image,
        })
    })
}

/// Checks the exchange condition on minimal generators, which is
/// equivalent to checking every member: for `m = g w`, an exchange at a
/// variable of `w` stays a multiple of `g`, and an exchange at a variable of
/// `g` is a multiple of the corresponding exchange of `g` (or zero).
pub fn stability_witness(
    l: &MonomialIdealExt,
    order: &ExchangeOrder,
    strong: bool,
) -> Option<StabilityWitness> {
    for &g in l.generators() {
        if strong {
            for j in g.vars() {
                if let Some(w) = exchange_failure(l, g, j, order) {
                    return Some(w);
                }
            }
        } else if let Some(j) = order.weakest(g) {
            if let Some(w) = exchange_failure(l, g, j, order) {
                return Some(w);
            }
        }
    }
    None
}

/// Stable in the index-ascending convention.
pub fn is_stable(l: &MonomialIdealExt) -> bool {
    is_stable_with(l, &ExchangeOrder::index_ascending(l.n()))
}

/// Strongly stable in the index-ascending convention.
pub fn is_strongly_stable(l: &MonomialIdealExt) -> bool {
    is_strongly_stable_with(l, &ExchangeOrder::index_ascending(l.n()))
}

pub fn is_stable_with(l: &MonomialIdealExt, order: &ExchangeOrder) -> bool {
    stability_witness(l, order, false).is_none()
}

pub fn is_strongly_stable_with(l: &MonomialIdealExt, order: &ExchangeOrder) -> bool {
    stability_witness(l, order, true).is_none()
}

/// Smallest (strongly) stable ideal containing `l` for the given exchange
/// order, by adding failing exchange images until none remain.
pub fn stable_closure(
    l: &MonomialIdealExt,
    order: &ExchangeOrder,
    strong: bool,
) -> MonomialIdealExt {
    let mut current = l.clone();
    while let Some(w) = stability_witness(&current, order, strong) {
        current =
            MonomialIdealExt::new(l.n(), current.generators().iter().copied().chain([w.image]));
    }
    current
}

/// Minimal generators of the initial ideal of the preimage of any ideal
/// with initial ideal `l`: `delta(u m)` for each minimal generator `m` and
/// `u` in `U(m)`, together with `X_jX_i` for `i <= j`.
pub fn lift_initial_ideal(l: &MonomialIdealExt) -> Result<MonomialIdealFree> {
    reject_linear(l)?;
    let mut gens = Vec::new();
    for &m in l.generators() {
        for u in compute_u(l, m)? {
            gens.push(Word::from(u.union(m)));
        }
    }
    gens.extend(anti_commutator_leads(l.n()));
    Ok(MonomialIdealFree::new(l.n(), gens))
}

/// `delta(u * f)` for one element `f` of the exterior basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedElement {
    pub source: ExtPolynomial,
    pub multiplier: ExtMonomial,
    pub element: FreePolynomial,
}

/// Anti-commutators plus the lifted elements: a minimal Gröbner basis of the
/// preimage of the ideal in the free algebra.
#[derive(Debug, Clone)]
pub struct LiftedBasis {
    n: usize,
    anti_commutators: Vec<FreePolynomial>,
    lifted: Vec<LiftedElement>,
    initial_generators: Vec<Word>,
    order: FreeOrderSpec,
}

impl LiftedBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn anti_commutators(&self) -> &[FreePolynomial] {
        &self.anti_commutators
    }

    pub fn lifted_elements(&self) -> &[LiftedElement] {
        &self.lifted
    }

    pub fn order(&self) -> &FreeOrderSpec {
        &self.order
    }

    /// Lifted elements first, then the anti-commutators.
    pub fn elements(&self) -> Vec<FreePolynomial> {
        self.lifted
            .iter()
            .map(|e| e.element.clone())
            .chain(self.anti_commutators.iter().cloned())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.lifted.len() + self.anti_commutators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Minimal generators of the initial ideal predicted by the lift:
    /// `delta(u m)` for the initial generators `m`, and `X_jX_i` for `i <= j`.
    pub fn initial_generators(&self) -> &[Word] {
        &self.initial_generators
    }

    pub fn initial_ideal(&self) -> MonomialIdealFree {
        MonomialIdealFree::new(self.n, self.initial_generators.iter().cloned())
    }

    /// The basis as a candidate for independent verification, with the
    /// degree cap `n + 1` beyond which every word is reducible.
    pub fn candidate(&self) -> FreeGroebnerCandidate {
        FreeGroebnerCandidate::new(self.order.clone(), self.elements())
            .expect("lifted elements are homogeneous and nonzero")
            .with_degree_cap(Some(self.n + 1))
    }
}

fn check_liftable(g: &ExtGroebnerBasis) -> Result<MonomialIdealExt> {
    if !g.is_minimal() {
        return Err(Error::InvalidRequest(
            "the exterior Groebner basis is not minimal".into(),
        ));
    }
    if let Some(f) = g
        .elements()
        .iter()
        .find(|f| f.homogeneous_degree().is_some_and(|d| d < 2))
    {
        return Err(Error::LinearGenerator(f.to_string()));
    }
    Ok(initial_ideal_ext(g))
}

/// Lift a minimal exterior Gröbner basis with no linear elements.
pub fn lift_groebner(g: &ExtGroebnerBasis) -> Result<LiftedBasis> {
    let n = g.n();
    let l = check_liftable(g)?;
    let order = FreeOrderSpec::new(g.order().clone());
    let mut lifted = Vec::new();
    let mut initial_generators = Vec::new();
    for f in g.elements() {
        let (m, _) = leading_term_ext(f, g.order())?;
        for u in compute_u(&l, m)? {
            let element = delta(&f.left_mul_monomial(u)).monic(&order);
            lifted.push(LiftedElement {
                source: f.clone(),
                multiplier: u,
                element,
            });
            initial_generators.push(Word::from(u.union(m)));
        }
    }
    initial_generators.extend(anti_commutator_leads(n));
    Ok(LiftedBasis {
        n,
        anti_commutators: anti_commutators(n),
        lifted,
        initial_generators,
        order,
    })
}

/// `delta(G)` together with the anti-commutators, without the extra
/// multipliers. A Gröbner basis exactly when the initial ideal is squeezed.
pub fn naive_lift(g: &ExtGroebnerBasis) -> Result<FreeGroebnerCandidate> {
    check_liftable(g)?;
    let order = FreeOrderSpec::new(g.order().clone());
    let elements: Vec<FreePolynomial> = g
        .elements()
        .iter()
        .map(delta)
        .chain(anti_commutators(g.n()))
        .collect();
    Ok(FreeGroebnerCandidate::new(order, elements)?.with_degree_cap(Some(g.n() + 1)))
}
