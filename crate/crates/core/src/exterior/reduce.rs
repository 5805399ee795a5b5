//! Reduction-based verification in `E(V)`, independent of the slice
//! elimination used to build bases.

use super::ExtGroebnerBasis;
use crate::algebra::{ExtMonomial, ExtPolynomial};
use crate::order::leading_term_ext;
use crate::scalar::Scalar;

/// Full normal form of `f` by repeated leading-term rewriting.
pub fn normal_form_ext(f: &ExtPolynomial, gb: &ExtGroebnerBasis) -> ExtPolynomial {
    let order = gb.order();
    let leads: Vec<(ExtMonomial, &ExtPolynomial)> = gb
        .leading_monomials()
        .into_iter()
        .zip(gb.elements())
        .collect();
    let mut rest = f.clone();
    let mut out = ExtPolynomial::zero(f.n());
    while let Ok((m, c)) = leading_term_ext(&rest, order) {
        match leads.iter().find(|(l, _)| l.divides(m)) {
            Some((l, g)) => {
                let multiple = g.left_mul_monomial(m.difference(*l));
                let lc = multiple.coefficient(m);
                rest = &rest - &multiple.scale(&(&c / &lc));
            }
            None => {
                out.add_term(m, c.clone());
                rest.add_term(m, -c);
            }
        }
    }
    out
}

/// Pair obstructions `lcm/in(f) * f - lcm/in(g) * g` and annihilator
/// obstructions `x_i * g` for `x_i | in(g)` all reduce to zero.
pub fn ext_obstructions_resolve(gb: &ExtGroebnerBasis) -> bool {
    let order = gb.order();
    let elems = gb.elements();
    let leads = gb.leading_monomials();
    for (k, g) in elems.iter().enumerate() {
        for v in leads[k].vars() {
            let p = g.left_mul_monomial(ExtMonomial::var(v));
            if !normal_form_ext(&p, gb).is_zero() {
                return false;
            }
        }
        for j in 0..k {
            let lcm = leads[k].union(leads[j]);
            let a = g.left_mul_monomial(lcm.difference(leads[k]));
            let b = elems[j].left_mul_monomial(lcm.difference(leads[j]));
            let (ca, cb) = (a.coefficient(lcm), b.coefficient(lcm));
            let s = &a.scale(&Scalar::from(ca.recip())) - &b.scale(&cb.recip());
            debug_assert!(s.is_zero() || leading_term_ext(&s, order).unwrap().0 != lcm);
            if !normal_form_ext(&s, gb).is_zero() {
                return false;
            }
        }
    }
    true
}
