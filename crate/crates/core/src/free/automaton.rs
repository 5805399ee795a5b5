use std::collections::VecDeque;

use crate::algebra::Word;

/// Aho-Corasick automaton over the alphabet `X1..Xn` with a complete
/// transition table.
///
/// States are prefixes of the patterns. A state is *dead* when some pattern
/// is a suffix of its prefix; the live states and their transitions form the
/// Ufnarovski-style graph whose walks from the root are exactly the words
/// avoiding every pattern.
#[derive(Debug, Clone)]
pub struct PatternAutomaton {
    n: usize,
    /// `delta[state * n + (letter - 1)]`.
    delta: Vec<u32>,
    /// Longest pattern that is a suffix of the state's prefix.
    output: Vec<Option<u32>>,
    patterns: Vec<Word>,
}

impl PatternAutomaton {
    pub fn new(n: usize, patterns: &[Word]) -> Self {
        let mut delta: Vec<u32> = vec![u32::MAX; n];
        let mut terminal: Vec<Option<u32>> = vec![None];
        let mut depth: Vec<usize> = vec![0];
        for (idx, p) in patterns.iter().enumerate() {
            let mut s = 0usize;
            for &l in p.letters() {
                let slot = s * n + (l as usize - 1);
                if delta[slot] == u32::MAX {
                    let fresh = terminal.len();
                    delta[slot] = fresh as u32;
                    delta.extend(std::iter::repeat_n(u32::MAX, n));
                    terminal.push(None);
                    depth.push(depth[s] + 1);
                }
                s = delta[slot] as usize;
            }
            if terminal[s].is_none() {
                terminal[s] = Some(idx as u32);
            }
        }
        let states = terminal.len();
        let mut fail = vec![0u32; states];
        let mut output = terminal.clone();
        let mut queue = VecDeque::new();
        for l in 0..n {
            let t = delta[l];
            if t == u32::MAX {
                delta[l] = 0;
            } else {
                fail[t as usize] = 0;
                queue.push_back(t as usize);
            }
        }
        while let Some(s) = queue.pop_front() {
            if output[s].is_none() {
                output[s] = output[fail[s] as usize];
            }
            for l in 0..n {
                let slot = s * n + l;
                let t = delta[slot];
                let via_fail = delta[fail[s] as usize * n + l];
                if t == u32::MAX {
                    delta[slot] = via_fail;
                } else {
                    fail[t as usize] = via_fail;
                    queue.push_back(t as usize);
                }
            }
        }
        PatternAutomaton {
            n,
            delta,
            output,
            patterns: patterns.to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_states(&self) -> usize {
        self.output.len()
    }

    pub fn patterns(&self) -> &[Word] {
        &self.patterns
    }

    pub fn step(&self, state: usize, letter: u8) -> usize {
        self.delta[state * self.n + (letter as usize - 1)] as usize
    }

    pub fn is_dead(&self, state: usize) -> bool {
        self.output[state].is_some()
    }

    /// First occurrence by end position; among patterns ending there, the
    /// longest. Returns `(pattern index, offset)`.
    pub fn find_first(&self, w: &Word) -> Option<(usize, usize)> {
        if let Some(p) = self.output[0] {
            return Some((p as usize, 0));
        }
        let mut s = 0;
        for (i, &l) in w.letters().iter().enumerate() {
            s = self.step(s, l);
            if let Some(p) = self.output[s] {
                let p = p as usize;
                return Some((p, i + 1 - self.patterns[p].degree()));
            }
        }
        None
    }

    /// Live states reachable from the root, root first.
    pub fn live_states(&self) -> Vec<usize> {
        if self.is_dead(0) {
            return Vec::new();
        }
        let mut seen = vec![false; self.num_states()];
        let mut order = vec![0];
        seen[0] = true;
        let mut k = 0;
        while k < order.len() {
            let s = order[k];
            k += 1;
            for l in 1..=self.n as u8 {
                let t = self.step(s, l);
                if !seen[t] && !self.is_dead(t) {
                    seen[t] = true;
                    order.push(t);
                }
            }
        }
        order
    }
}

/// Reference matcher with the same tie-breaking as the automaton.
pub(crate) fn find_first_linear(patterns: &[Word], w: &Word) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None; // (end, -len, idx)
    for (idx, p) in patterns.iter().enumerate() {
        if let Some(&off) = w.occurrences(p).first() {
            let end = off + p.degree();
            let better = match best {
                None => true,
                Some((e, len, i)) => {
                    end < e || (end == e && (p.degree() > len || (p.degree() == len && idx < i)))
                }
            };
            if better {
                best = Some((end, p.degree(), idx));
            }
        }
    }
    best.map(|(end, len, idx)| (idx, end - len))
}
