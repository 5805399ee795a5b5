//! Exact computations with homogeneous ideals of the exterior algebra `E(V)`
//! and of the free associative algebra `K<X1,...,Xn>` over the rationals.
//!
//! The crate covers:
//!
//! * exterior and non-commutative polynomial arithmetic, the projection `pi`
//!   onto the exterior algebra and its section `delta`, and the `GL(V)` action
//!   ([`algebra`]);
//! * the term orders on square-free monomials and on words ([`order`]);
//! * Gröbner bases of exterior ideals by degree-wise elimination
//!   ([`exterior`]);
//! * lifting a minimal exterior Gröbner basis to a minimal Gröbner basis of the
//!   preimage ideal, together with the squeezed / stable / strongly stable
//!   predicates ([`lifting`]);
//! * an independent non-commutative Gröbner toolkit used to certify lifts:
//!   subword reduction, overlap obstructions, normal-word counting and
//!   rational Hilbert series ([`free`]);
//! * randomized generic initial ideals in both algebras ([`gin`]);
//! * the ideal-file grammar used by the command line tool ([`parse`]).

pub mod algebra;
pub mod error;
pub mod exterior;
pub mod free;
pub mod gin;
pub mod lifting;
pub mod linalg;
pub mod order;
pub mod parse;
pub mod scalar;

pub use algebra::{
    apply_gl, apply_gl_ext, delta, mul_ext, pi, AlgebraContext, ExtMonomial, ExtPolynomial,
    FreePolynomial, GLMatrix, Word, MAX_VARS,
};
pub use error::{Error, Result};
pub use exterior::{
    divides_ext, groebner_ext, hilbert_ext, ideal_degree_basis, initial_ideal_ext, member_monomial,
    ExtGroebnerBasis, ExtIdeal, MonomialIdealExt,
};
pub use free::{
    hilbert_rational, initial_ideal_free, normal_form, normal_word_count, obstructions_resolve,
    subword_divides, FreeGroebnerCandidate, MonomialIdealFree, RationalSeries,
};
pub use gin::{GinRequest, GinResult};
pub use lifting::{
    anti_commutators, compute_u, is_squeezed, is_stable, is_strongly_stable, lift_groebner,
    ExchangeOrder, LiftedBasis,
};
pub use num_bigint::BigInt;
pub use order::{
    cmp_ext, cmp_lex, cmp_t, leading_term_ext, leading_term_free, ExtOrderSpec, FreeOrderSpec,
    OrderKind,
};
pub use scalar::Scalar;
