use std::fmt;

use super::ExtMonomial;

/// Element of the free monoid `<X1, ..., Xn>`; letters are variable numbers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Panics on letters outside `1..=64`.
    pub fn from_vars(vars: &[usize]) -> Self {
        Word(
            vars.iter()
                .map(|&v| {
                    assert!((1..=64).contains(&v), "variable index {v} out of range");
                    v as u8
                })
                .collect(),
        )
    }

    pub(crate) fn from_letters(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left * self * right`.
    pub fn sandwich(&self, left: &[u8], right: &[u8]) -> Word {
        let mut v = Vec::with_capacity(left.len() + self.0.len() + right.len());
        v.extend_from_slice(left);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(right);
        Word(v)
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Strictly increasing letters: the image of `delta`.
    pub fn is_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    /// All offsets at which `pattern` occurs as a contiguous factor.
    pub fn occurrences(&self, pattern: &Word) -> Vec<usize> {
        let (p, t) = (&pattern.0, &self.0);
        if p.len() > t.len() {
            return Vec::new();
        }
        (0..=t.len() - p.len())
            .filter(|&i| &t[i..i + p.len()] == p.as_slice())
            .collect()
    }

    pub fn contains_subword(&self, pattern: &Word) -> bool {
        pattern.0.is_empty()
            || self
                .0
                .windows(pattern.0.len())
                .any(|w| w == pattern.0.as_slice())
    }

    /// `pi` of the word: `None` if a letter repeats, else the sign of the
    /// sorting permutation (`true` for `-1`) and the square-free monomial.
    pub fn project(&self) -> Option<(bool, ExtMonomial)> {
        let mut bits = 0u64;
        let mut inversions = 0u32;
        for &l in &self.0 {
            let b = 1u64 << (l - 1);
            if bits & b != 0 {
                return None;
            }
            // earlier letters larger than l
            inversions += (bits >> l).count_ones();
            bits |= b;
        }
        Some((inversions % 2 == 1, ExtMonomial::from_bits(bits)))
    }

    /// Exponent vector of the commutative image, indexed by `var - 1`.
    pub fn exponents(&self, n: usize) -> Vec<u16> {
        let mut e = vec![0u16; n];
        for &l in &self.0 {
            e[l as usize - 1] += 1;
        }
        e
    }
}

impl From<ExtMonomial> for Word {
    /// `delta` on a single monomial: the increasing word.
    fn from(m: ExtMonomial) -> Word {
        Word(m.vars().map(|v| v as u8).collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "X{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn project_signs() {
        assert_eq!(
            Word::from_vars(&[1, 2]).project(),
            Some((false, ExtMonomial::from_vars(&[1, 2])))
        );
        assert_eq!(
            Word::from_vars(&[2, 1]).project(),
            Some((true, ExtMonomial::from_vars(&[1, 2])))
        );
        assert_eq!(
            Word::from_vars(&[3, 1, 2]).project(),
            Some((false, ExtMonomial::from_vars(&[1, 2, 3])))
        );
        assert_eq!(Word::from_vars(&[1, 1]).project(), None);
    }

    #[test]
    fn occurrences_are_contiguous() {
        let w = Word::from_vars(&[1, 2, 4]);
        assert!(w.occurrences(&Word::from_vars(&[1, 4])).is_empty());
        assert_eq!(
            Word::from_vars(&[3, 2, 1]).occurrences(&Word::from_vars(&[2, 1])),
            vec![1]
        );
        assert_eq!(
            Word::from_vars(&[1, 1, 1]).occurrences(&Word::from_vars(&[1, 1])),
            vec![0, 1]
        );
        assert!(w.contains_subword(&Word::empty()));
    }
}
