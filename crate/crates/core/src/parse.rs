//! Ideal files.
//!
//! ```text
//! file       = { line } ;
//! line       = blank | comment | header | generator ;
//! comment    = "#" { any } ;
//! header     = key ":" value ;            (* before the first generator *)
//! key        = "vars" | "algebra" | "order" | "varorder" ;
//! generator  = [ sign ] term { sign term } ;
//! sign       = "+" | "-" ;
//! term       = coefficient [ [ "*" ] monomial ] | monomial ;
//! monomial   = factor { [ "*" ] factor } ;
//! factor     = variable [ "^" digits ] ;
//! variable   = ( "x" | "X" ) digits ;     (* lowercase: exterior, uppercase: free *)
//! coefficient = digits [ "/" digits ] ;
//! ```
//!
//! `vars` is required. `algebra` is `exterior` or `free` and defaults to the
//! case of the variables used. `order` is `deglex` (default) or `degrevlex`.
//! `varorder` lists the variables from smallest to largest, e.g.
//! `x3 < x1 < x2`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{ExtMonomial, ExtPolynomial, FreePolynomial, Word, MAX_VARS};
use crate::error::Result;
use crate::exterior::ExtIdeal;
use crate::order::{ExtOrderSpec, FreeOrderSpec, OrderKind};
use crate::scalar::{to_display_string, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        column,
        message: message.into(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    Exterior,
    Free,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Exterior => "exterior",
            AlgebraKind::Free => "free",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generators {
    Exterior(Vec<ExtPolynomial>),
    Free(Vec<FreePolynomial>),
}

/// A parsed ideal file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub n: usize,
    pub order: ExtOrderSpec,
    pub generators: Generators,
}

impl IdealFile {
    pub fn algebra(&self) -> AlgebraKind {
        match self.generators {
            Generators::Exterior(_) => AlgebraKind::Exterior,
            Generators::Free(_) => AlgebraKind::Free,
        }
    }

    pub fn free_order(&self) -> FreeOrderSpec {
        FreeOrderSpec::new(self.order.clone())
    }

    pub fn ext_ideal(&self) -> Result<ExtIdeal> {
        match &self.generators {
            Generators::Exterior(g) => ExtIdeal::new(self.order.clone(), g.clone()),
            Generators::Free(_) => Err(crate::Error::InvalidRequest(
                "expected an exterior ideal (algebra: exterior)".into(),
            )),
        }
    }

    /// Free generators; for an exterior file, `delta` of the generators.
    pub fn free_generators(&self) -> Vec<FreePolynomial> {
        match &self.generators {
            Generators::Exterior(g) => g.iter().map(crate::algebra::delta).collect(),
            Generators::Free(g) => g.clone(),
        }
    }

    /// Text that parses back to an equal value.
    pub fn serialize(&self) -> String {
        let mut out = format!(
            "vars: {}\nalgebra: {}\norder: {}\n",
            self.n,
            self.algebra().name(),
            self.order.kind().name()
        );
        let letter = if self.algebra() == AlgebraKind::Exterior {
            'x'
        } else {
            'X'
        };
        if !self.order.is_natural() {
            let vars: Vec<String> = self
                .order
                .ascending_vars()
                .iter()
                .map(|v| format!("{letter}{v}"))
                .collect();
            out.push_str(&format!("varorder: {}\n", vars.join(" < ")));
        }
        let lines: Vec<String> = match &self.generators {
            Generators::Exterior(gens) => gens
                .iter()
                .map(|g| {
                    let terms = g.terms_descending(&self.order);
                    serialize_terms(terms.iter().map(|(m, c)| (m.vars().collect(), c)), 'x')
                })
                .collect(),
            Generators::Free(gens) => gens
                .iter()
                .map(|g| {
                    let terms = g.terms_descending(&self.free_order());
                    serialize_terms(
                        terms
                            .iter()
                            .map(|(w, c)| (w.letters().iter().map(|&l| l as usize).collect(), c)),
                        'X',
                    )
                })
                .collect(),
        };
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
        out
    }
}

fn serialize_terms<'a>(
    terms: impl Iterator<Item = (Vec<usize>, &'a Scalar)>,
    letter: char,
) -> String {
    let mut s = String::new();
    for (k, (vars, c)) in terms.enumerate() {
        let neg = c < &Scalar::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        match (k, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let mono: Vec<String> = vars.iter().map(|v| format!("{letter}{v}")).collect();
        if mono.is_empty() {
            s.push_str(&to_display_string(&abs));
        } else {
            if abs != Scalar::from_integer(1.into()) {
                s.push_str(&to_display_string(&abs));
                s.push('*');
            }
            s.push_str(&mono.join("*"));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[derive(Debug, Clone, PartialEq)]
struct RawTerm {
    column: usize,
    coefficient: Scalar,
    vars: Vec<usize>,
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    _text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line,
            _text: text,
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn coefficient(&mut self) -> Result<Scalar, ParseError> {
        let column = self.column();
        let num = self.digits().expect("caller checked for a digit");
        let num: BigInt = num.parse().expect("digits");
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&'/') {
            self.pos += 1;
            self.skip_ws();
            let Some(den) = self.digits() else {
                return err(
                    self.line,
                    self.column(),
                    "malformed rational: expected a denominator",
                );
            };
            let den: BigInt = den.parse().expect("digits");
            if den.is_zero() {
                return err(self.line, column, "malformed rational: zero denominator");
            }
            return Ok(Scalar::new(num, den));
        }
        Ok(Scalar::from_integer(num))
    }

    /// `x<k>` or `X<k>` with an optional power; returns the letter case.
    fn factor(&mut self, n: usize, vars: &mut Vec<usize>) -> Result<char, ParseError> {
        let column = self.column();
        let letter = self.chars[self.pos];
        self.pos += 1;
        let Some(index) = self.digits() else {
            return err(
                self.line,
                column,
                format!("expected a variable index after '{letter}'"),
            );
        };
        let var: usize = index.parse().unwrap_or(usize::MAX);
        if var == 0 || var > n {
            return err(
                self.line,
                column,
                format!("unknown variable {letter}{index} (vars: {n})"),
            );
        }
        let mut power = 1usize;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let col = self.column();
            power = match self.digits().and_then(|d| d.parse().ok()) {
                Some(p) if p <= 4 * MAX_VARS => p,
                _ => return err(self.line, col, "malformed exponent"),
            };
        }
        vars.extend(std::iter::repeat_n(var, power));
        Ok(letter)
    }

    fn term(&mut self, n: usize, case: &mut Option<char>) -> Result<RawTerm, ParseError> {
        let column = self.column();
        let mut coefficient = Scalar::from_integer(1.into());
        let mut vars = Vec::new();
        let mut expect_factor = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coefficient = self.coefficient()?;
            if self.peek() == Some('*') {
                self.pos += 1;
                expect_factor = true;
            }
        } else {
            expect_factor = true;
        }
        loop {
            match self.peek() {
                Some(c @ ('x' | 'X')) => {
                    let col = self.column();
                    self.factor(n, &mut vars)?;
                    match case {
                        None => *case = Some(c),
                        Some(prev) if *prev != c => {
                            return err(
                                self.line,
                                col,
                                "mixed exterior (x) and free (X) variables",
                            );
                        }
                        _ => {}
                    }
                    expect_factor = false;
                    if self.peek() == Some('*') {
                        self.pos += 1;
                        expect_factor = true;
                    }
                }
                other => {
                    if expect_factor {
                        let msg = match other {
                            Some(c) => format!("expected a variable, found '{c}'"),
                            None => "expected a variable at end of line".to_string(),
                        };
                        return err(self.line, self.column(), msg);
                    }
                    break;
                }
            }
        }
        Ok(RawTerm {
            column,
            coefficient,
            vars,
        })
    }

    fn polynomial(
        &mut self,
        n: usize,
        case: &mut Option<char>,
    ) -> Result<Vec<RawTerm>, ParseError> {
        let mut terms = Vec::new();
        let mut negative = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            negative = c == '-';
            self.pos += 1;
        }
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() || c == 'x' || c == 'X' => {}
                Some(c) => return err(self.line, self.column(), format!("unexpected '{c}'")),
                None => return err(self.line, self.column(), "expected a term at end of line"),
            }
            let mut t = self.term(n, case)?;
            if negative {
                t.coefficient = -t.coefficient;
            }
            terms.push(t);
            match self.peek() {
                None => return Ok(terms),
                Some(c @ ('+' | '-')) => {
                    negative = c == '-';
                    self.pos += 1;
                }
                Some(c) => return err(self.line, self.column(), format!("unexpected '{c}'")),
            }
        }
    }
}

fn parse_varorder(
    value: &str,
    n: usize,
    line: usize,
    column: usize,
) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    for tok in value
        .split(|c: char| c == '<' || c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        let digits = tok.trim_start_matches(['x', 'X']);
        match digits.parse::<usize>() {
            Ok(v) if (1..=n).contains(&v) && !out.contains(&v) => out.push(v),
            _ => return err(line, column, format!("bad variable '{tok}' in varorder")),
        }
    }
    if out.len() != n {
        return err(
            line,
            column,
            format!("varorder must list all {n} variables"),
        );
    }
    Ok(out)
}

/// Parse an ideal file.
pub fn parse_ideal(text: &str) -> Result<IdealFile, ParseError> {
    let mut n: Option<usize> = None;
    let mut algebra: Option<AlgebraKind> = None;
    let mut kind = OrderKind::Deglex;
    let mut varorder: Option<(Vec<String>, usize, usize)> = None;
    let mut raw: Vec<(usize, Vec<RawTerm>)> = Vec::new();
    let mut case: Option<char> = None;
    for (k, full_line) in text.lines().enumerate() {
        let line = k + 1;
        let content = full_line.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        if let Some((key, value)) = content.split_once(':') {
            let key_trim = key.trim();
            let value_col = key.len() + 2 + (value.len() - value.trim_start().len());
            let value = value.trim();
            if !raw.is_empty() {
                return err(line, 1, "header lines must precede the generators");
            }
            match key_trim {
                "vars" => match value.parse::<usize>() {
                    Ok(v) if (1..=MAX_VARS).contains(&v) => n = Some(v),
                    _ => {
                        return err(
                            line,
                            value_col,
                            format!("vars must be an integer in 1..={MAX_VARS}"),
                        )
                    }
                },
                "algebra" => {
                    algebra = Some(match value {
                        "exterior" => AlgebraKind::Exterior,
                        "free" => AlgebraKind::Free,
                        _ => return err(line, value_col, "algebra must be 'exterior' or 'free'"),
                    })
                }
                "order" => match value.parse::<OrderKind>() {
                    Ok(o) => kind = o,
                    Err(e) => return err(line, value_col, e),
                },
                "varorder" => varorder = Some((vec![value.to_string()], line, value_col)),
                other => {
                    let col = key.len() - key.trim_start().len() + 1;
                    return err(line, col, format!("unknown header '{other}'"));
                }
            }
            continue;
        }
        let Some(n) = n else {
            return err(line, 1, "the 'vars' header must come before the generators");
        };
        let mut cur = Cursor::new(content, line);
        raw.push((line, cur.polynomial(n, &mut case)?));
    }
    let Some(n) = n else {
        return err(text.lines().count().max(1), 1, "missing 'vars' header");
    };
    let algebra = match (algebra, case) {
        (Some(a), Some(c)) => {
            let expected = if a == AlgebraKind::Exterior { 'x' } else { 'X' };
            if c != expected {
                let line = raw
                    .iter()
                    .find(|(_, t)| t.iter().any(|t| !t.vars.is_empty()))
                    .map_or(1, |r| r.0);
                return err(
                    line,
                    1,
                    format!("{} ideal written with '{c}' variables", a.name()),
                );
            }
            a
        }
        (Some(a), None) => a,
        (None, Some('X')) => AlgebraKind::Free,
        (None, _) => AlgebraKind::Exterior,
    };
    let order = match varorder {
        None => ExtOrderSpec::new(kind, n),
        Some((v, line, col)) => {
            let ascending = parse_varorder(&v[0], n, line, col)?;
            ExtOrderSpec::with_ranking(kind, &ascending).expect("validated ranking")
        }
    };
    // homogeneity, reported at the first term of the wrong degree
    for (line, terms) in &raw {
        let nonzero: Vec<&RawTerm> = terms.iter().filter(|t| !t.coefficient.is_zero()).collect();
        if let Some(first) = nonzero.first() {
            if let Some(bad) = nonzero.iter().find(|t| t.vars.len() != first.vars.len()) {
                return err(
                    *line,
                    bad.column,
                    format!(
                        "generator is not homogeneous (degree {} vs {})",
                        bad.vars.len(),
                        first.vars.len()
                    ),
                );
            }
        }
    }
    let generators = match algebra {
        AlgebraKind::Exterior => Generators::Exterior(
            raw.iter()
                .map(|(_, terms)| {
                    let mut p = ExtPolynomial::zero(n);
                    for t in terms {
                        if let Some((neg, m)) = sorted_sign(&t.vars) {
                            p.add_term(
                                m,
                                if neg {
                                    -t.coefficient.clone()
                                } else {
                                    t.coefficient.clone()
                                },
                            );
                        }
                    }
                    p
                })
                .collect(),
        ),
        AlgebraKind::Free => Generators::Free(
            raw.iter()
                .map(|(_, terms)| {
                    let mut p = FreePolynomial::zero(n);
                    for t in terms {
                        p.add_term(Word::from_vars(&t.vars), t.coefficient.clone());
                    }
                    p
                })
                .collect(),
        ),
    };
    Ok(IdealFile {
        n,
        order,
        generators,
    })
}

/// Sign and monomial of the product `x_{v1} * ... * x_{vk}` in `E(V)`.
fn sorted_sign(vars: &[usize]) -> Option<(bool, ExtMonomial)> {
    Word::from_vars(vars).project()
}

impl fmt::Display for IdealFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use proptest::prelude::*;

    fn xm(v: &[usize]) -> ExtMonomial {
        ExtMonomial::from_vars(v)
    }

    fn ext_gens(f: &IdealFile) -> &[ExtPolynomial] {
        match &f.generators {
            Generators::Exterior(g) => g,
            _ => panic!("expected exterior"),
        }
    }

    #[test]
    fn exterior_signs() {
        let f = parse_ideal("vars: 3\nx2*x3\nx3*x2\n").unwrap();
        assert_eq!(
            ext_gens(&f)[0],
            ExtPolynomial::monomial(3, xm(&[2, 3]), int(1))
        );
        assert_eq!(
            ext_gens(&f)[1],
            ExtPolynomial::monomial(3, xm(&[2, 3]), int(-1))
        );
        assert_eq!(f.algebra(), AlgebraKind::Exterior);
    }

    #[test]
    fn free_and_rationals() {
        let f = parse_ideal("vars: 2\nX1*X2 + X2*X1\n").unwrap();
        assert_eq!(
            f.generators,
            Generators::Free(crate::lifting::anti_commutators(2)[1..2].to_vec())
        );
        let g = parse_ideal("# quadric\nvars: 4\norder: degrevlex\n3/2*x1*x3 - x2x4 # trailing\n")
            .unwrap();
        assert_eq!(
            ext_gens(&g)[0],
            ExtPolynomial::from_terms(4, [(xm(&[1, 3]), ratio(3, 2)), (xm(&[2, 4]), int(-1))])
        );
        assert_eq!(g.order.kind(), OrderKind::Degrevlex);
        let h = parse_ideal("vars: 2\nalgebra: free\nX1^2 - 2 X2^2\n").unwrap();
        assert_eq!(
            h.generators,
            Generators::Free(vec![FreePolynomial::from_terms(
                2,
                [
                    (Word::from_vars(&[1, 1]), int(1)),
                    (Word::from_vars(&[2, 2]), int(-2))
                ]
            )])
        );
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_ideal("vars: 3\nx1*x2 + x3\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 9));
        let e = parse_ideal("vars: 3\nx1*x4\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 4));
        let e = parse_ideal("vars: 3\n3/0*x1x2\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        assert!(e.message.contains("malformed rational"));
        let e = parse_ideal("vars: 3\n3/*x1x2\n").unwrap_err();
        assert!(e.message.contains("malformed rational"));
        assert!(parse_ideal("x1x2\n").is_err());
        assert!(parse_ideal("vars: 2\nx1*X2\n").is_err());
        assert!(parse_ideal("vars: 2\nalgebra: free\nx1*x2\n").is_err());
        assert!(parse_ideal("vars: 2\nx1 x2 +\n").is_err());
    }

    #[test]
    fn varorder_header() {
        let f = parse_ideal("vars: 3\nvarorder: x3 < x1 < x2\nx1x3\n").unwrap();
        assert_eq!(f.order.ascending_vars(), vec![3, 1, 2]);
        assert_eq!(parse_ideal(&f.serialize()).unwrap(), f);
        assert!(parse_ideal("vars: 3\nvarorder: x1 < x1 < x2\n").is_err());
    }

    fn term_strategy(letter: char) -> impl Strategy<Value = String> {
        (1i64..20, 1i64..5, proptest::collection::vec(1usize..=4, 2)).prop_map(
            move |(p, q, vars)| {
                let mono: Vec<String> = vars.iter().map(|v| format!("{letter}{v}")).collect();
                format!("{p}/{q}*{}", mono.join("*"))
            },
        )
    }

    proptest! {
        #[test]
        fn round_trip(terms in proptest::collection::vec((term_strategy('x'), any::<bool>()), 1..5),
                      free in any::<bool>()) {
            let letter = if free { 'X' } else { 'x' };
            let body: Vec<String> = terms
                .iter()
                .enumerate()
                .map(|(k, (t, neg))| {
                    let t = t.replace('x', &letter.to_string());
                    match (k, neg) { (0, true) => format!("-{t}"), (0, false) => t, (_, true) => format!(" - {t}"), (_, false) => format!(" + {t}") }
                })
                .collect();
            let text = format!("vars: 4\n{}\n", body.concat());
            let parsed = parse_ideal(&text).unwrap();
            let again = parse_ideal(&parsed.serialize()).unwrap();
            prop_assert_eq!(again, parsed);
        }
    }
}
