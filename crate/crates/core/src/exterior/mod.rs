//! Homogeneous ideals of the exterior algebra.

pub(crate) mod gb;
mod monomial_ideal;
mod reduce;

pub use gb::{
    groebner_ext, hilbert_ext, ideal_degree_basis, initial_ideal_ext, ExtGroebnerBasis, ExtIdeal,
};
pub use monomial_ideal::{divides_ext, member_monomial, MonomialIdealExt};
pub use reduce::{ext_obstructions_resolve, normal_form_ext};
