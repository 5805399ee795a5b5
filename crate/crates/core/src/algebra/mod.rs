//! Scalars, words, exterior monomials and the polynomials of both algebras.
//!
//! Variables are numbered `1..=n` in every public constructor and accessor.
//! Exterior monomials never carry a sign: they are canonical index sets, and
//! every sign produced by reordering is folded into a coefficient.

mod ext;
mod free_poly;
mod gl;
mod word;

pub use ext::{mul_ext, ExtMonomial, ExtPolynomial};
pub use free_poly::{delta, pi, FreePolynomial};
pub use gl::{apply_gl, apply_gl_ext, GLMatrix};
pub use word::Word;

use crate::error::{Error, Result};

/// Exterior monomials are stored as 64-bit sets.
pub const MAX_VARS: usize = 64;

/// Dimension of `V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraContext {
    n: usize,
}

impl AlgebraContext {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::BadDimension {
                got: n,
                max: MAX_VARS,
            });
        }
        Ok(AlgebraContext { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn check_var(&self, var: usize) -> Result<()> {
        if var == 0 || var > self.n {
            Err(Error::VariableOutOfRange { var, n: self.n })
        } else {
            Ok(())
        }
    }
}

pub(crate) fn same_context(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::ContextMismatch { left, right })
    }
}

/// Binomial coefficient as `u128`; exact for all `n <= 64`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
