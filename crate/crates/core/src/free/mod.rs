//! Non-commutative Gröbner machinery over `K<X1, ..., Xn>`.
//!
//! Everything here is independent of the exterior algebra: leading words are
//! matched with a multi-pattern automaton, polynomials are reduced by
//! rewriting, candidate bases are certified by resolving every overlap and
//! inclusion ambiguity, and quotient dimensions are counted on the same
//! automaton.

mod automaton;
mod monomial_ideal;
mod reduce;
mod series;
mod slices;

pub use automaton::PatternAutomaton;
pub use monomial_ideal::{
    hilbert_rational, normal_word_count, normal_word_counts, MonomialIdealFree,
};
pub use reduce::{
    initial_ideal_free, normal_form, normal_form_linear_scan, obstructions_resolve,
    subword_divides, FreeGroebnerCandidate, Obstruction, ObstructionKind, ObstructionReport,
};
pub use series::RationalSeries;
pub use slices::{truncated_groebner_free, FreeSlices};
