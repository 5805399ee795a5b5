//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;

/// Coefficient field: arbitrary precision rationals, always in lowest terms.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// `p/q` form with a positive denominator; integers keep the `/1`.
pub fn to_fraction_string(c: &Scalar) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Compact human form: `3`, `-3/2`.
pub fn to_display_string(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}
