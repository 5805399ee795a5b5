use std::fmt;

use num_traits::{One, Zero};

use super::{same_context, AlgebraContext, ExtMonomial, ExtPolynomial, FreePolynomial, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Invertible `n x n` rational matrix acting on the variables by
/// `X_i -> sum_l g[l][i] X_l`.
#[derive(Clone, PartialEq, Eq)]
pub struct GLMatrix {
    n: usize,
    /// Row-major, `rows[l][i] = g_{l+1, i+1}`.
    rows: Vec<Vec<Scalar>>,
}

impl GLMatrix {
    pub fn new(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        AlgebraContext::new(n)?;
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::MatrixShape { n });
        }
        let g = GLMatrix { n, rows };
        if g.determinant().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(g)
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::scalar::int(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|l| {
                (0..n)
                    .map(|i| {
                        if l == i {
                            Scalar::one()
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        GLMatrix { n, rows }
    }

    /// `X_from -> X_from + c X_to`, all other variables fixed.
    pub fn elementary(n: usize, from: usize, to: usize, c: Scalar) -> Self {
        assert!(from != to && (1..=n).contains(&from) && (1..=n).contains(&to));
        let mut g = Self::identity(n);
        g.rows[to - 1][from - 1] = c;
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `g_{l,i}` with 1-based indices.
    pub fn entry(&self, l: usize, i: usize) -> &Scalar {
        &self.rows[l - 1][i - 1]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn determinant(&self) -> Scalar {
        let mut a = self.rows.clone();
        let n = self.n;
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &pivot;
                for c in col..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
        det
    }

    /// Matrix product; acting by `g * h` is acting by `h` first.
    pub fn compose(&self, other: &GLMatrix) -> Result<GLMatrix> {
        same_context(self.n, other.n)?;
        let n = self.n;
        let rows = (0..n)
            .map(|l| {
                (0..n)
                    .map(|i| {
                        (0..n).fold(Scalar::zero(), |acc, k| {
                            acc + &self.rows[l][k] * &other.rows[k][i]
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(GLMatrix { n, rows })
    }

    /// Image of `X_i` as `(l, g_{l,i})` pairs with nonzero coefficient.
    fn column(&self, i: usize) -> Vec<(usize, Scalar)> {
        (0..self.n)
            .filter(|&l| !self.rows[l][i - 1].is_zero())
            .map(|l| (l + 1, self.rows[l][i - 1].clone()))
            .collect()
    }

    pub fn apply_free(&self, f: &FreePolynomial) -> Result<FreePolynomial> {
        same_context(self.n, f.n())?;
        let columns: Vec<_> = (1..=self.n).map(|i| self.column(i)).collect();
        let mut out = FreePolynomial::zero(self.n);
        for (w, c) in f.terms() {
            let mut partial: Vec<(Vec<u8>, Scalar)> = vec![(Vec::new(), c.clone())];
            for &letter in w.letters() {
                let col = &columns[letter as usize - 1];
                let mut next = Vec::with_capacity(partial.len() * col.len());
                for (prefix, a) in &partial {
                    for (l, g) in col {
                        let mut p = prefix.clone();
                        p.push(*l as u8);
                        next.push((p, a * g));
                    }
                }
                partial = next;
            }
            for (letters, a) in partial {
                out.add_term(Word::from_letters(letters), a);
            }
        }
        Ok(out)
    }

    pub fn apply_ext(&self, f: &ExtPolynomial) -> Result<ExtPolynomial> {
        same_context(self.n, f.n())?;
        let columns: Vec<_> = (1..=self.n).map(|i| self.column(i)).collect();
        let mut out = ExtPolynomial::zero(self.n);
        for (m, c) in f.terms() {
            let mut partial = ExtPolynomial::monomial(self.n, ExtMonomial::ONE, c.clone());
            for v in m.vars() {
                let mut next = ExtPolynomial::zero(self.n);
                for (l, g) in &columns[v - 1] {
                    let shifted = partial.right_mul_monomial(ExtMonomial::var(*l));
                    for (t, a) in shifted.terms() {
                        next.add_term(*t, a * g);
                    }
                }
                partial = next;
            }
            for (t, a) in partial.terms() {
                out.add_term(*t, a.clone());
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for GLMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            let cells: Vec<String> = r.iter().map(crate::scalar::to_display_string).collect();
            f.write_str(&cells.join(" "))?;
        }
        f.write_str("]")
    }
}

/// `g(X_{i1} ... X_{ir}) = g(X_{i1}) ... g(X_{ir})`, extended linearly.
pub fn apply_gl(g: &GLMatrix, f: &FreePolynomial) -> Result<FreePolynomial> {
    g.apply_free(f)
}

/// The induced action on `E(V)`.
pub fn apply_gl_ext(g: &GLMatrix, f: &ExtPolynomial) -> Result<ExtPolynomial> {
    g.apply_ext(f)
}
