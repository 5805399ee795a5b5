use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `numerator(t) / denominator(t)` with integer coefficients (index = power
/// of `t`) and `denominator(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<BigInt>,
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

type QPoly = Vec<BigRational>;

fn trim_q(mut v: QPoly) -> QPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_rem(a: &QPoly, b: &QPoly) -> QPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let f = r.last().unwrap() / &lb;
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        r = trim_q(r);
    }
    r
}

fn poly_div_exact(a: &QPoly, b: &QPoly) -> QPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let f = r.last().unwrap() / &lb;
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        q[shift] = f;
        r = trim_q(r);
    }
    debug_assert!(r.is_empty());
    trim_q(q)
}

fn to_q(v: &[BigInt]) -> QPoly {
    v.iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

impl RationalSeries {
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<BigInt>) -> Self {
        RationalSeries {
            numerator: trim(numerator),
            denominator: trim(denominator),
        }
    }

    /// Cancel the polynomial gcd and normalize `denominator(0) = 1`.
    pub fn reduced(&self) -> Self {
        let num = trim_q(to_q(&self.numerator));
        let den = trim_q(to_q(&self.denominator));
        if num.is_empty() {
            return RationalSeries::new(vec![], vec![BigInt::one()]);
        }
        let (mut a, mut b) = (num.clone(), den.clone());
        while !b.is_empty() {
            let r = poly_rem(&a, &b);
            a = b;
            b = r;
        }
        let mut g = a;
        let g0 = g[0].clone();
        for c in g.iter_mut() {
            *c /= &g0;
        }
        let mut num = poly_div_exact(&num, &g);
        let mut den = poly_div_exact(&den, &g);
        let d0 = den[0].clone();
        for c in num.iter_mut().chain(den.iter_mut()) {
            *c /= &d0;
        }
        let as_int = |v: QPoly| -> Vec<BigInt> {
            v.into_iter()
                .map(|c| {
                    debug_assert!(c.is_integer());
                    c.to_integer()
                })
                .collect()
        };
        RationalSeries::new(as_int(num), as_int(den))
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.len() == 1
    }

    /// Power series coefficients of degree `0..=max_degree`.
    pub fn expand(&self, max_degree: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = Vec::with_capacity(max_degree + 1);
        for d in 0..=max_degree {
            let mut c = self.numerator.get(d).cloned().unwrap_or_default();
            for k in 1..self.denominator.len().min(d + 1) {
                c -= &self.denominator[k] * &out[d - k];
            }
            // denominator(0) == 1
            out.push(c);
        }
        out
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &[BigInt]) -> fmt::Result {
    let mut first = true;
    for (k, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        match (k, abs.is_one()) {
            (0, _) => write!(f, "{abs}")?,
            (1, true) => f.write_str("t")?,
            (1, false) => write!(f, "{abs}t")?,
            (_, true) => write!(f, "t^{k}")?,
            (_, false) => write!(f, "{abs}t^{k}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() && self.denominator[0].is_one() {
            return write_poly(f, &self.numerator);
        }
        f.write_str("(")?;
        write_poly(f, &self.numerator)?;
        f.write_str(") / (")?;
        write_poly(f, &self.denominator)?;
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cancels_common_factor() {
        // (1 - t^2) / (1 - t) = 1 + t
        let r = RationalSeries::new(ints(&[1, 0, -1]), ints(&[1, -1])).reduced();
        assert_eq!(r, RationalSeries::new(ints(&[1, 1]), ints(&[1])));
        assert_eq!(r.to_string(), "1 + t");
    }

    #[test]
    fn display_rational() {
        let r = RationalSeries::new(ints(&[1]), ints(&[1, -2]));
        assert_eq!(r.to_string(), "(1) / (1 - 2t)");
    }
}
