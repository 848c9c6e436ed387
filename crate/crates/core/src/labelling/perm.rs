use std::fmt;
use std::str::FromStr;

use super::{LabelError, Labelling};

/// A bijection on label values `0..n`, stored as an image array.
///
/// Displayed in disjoint cycle notation with fixed points as singletons and
/// cycles ordered by their smallest element, e.g. `(0 3)(1 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelPermutation {
    map: Vec<usize>,
}

impl LabelPermutation {
    pub fn new(map: Vec<usize>) -> Result<Self, LabelError> {
        // Same bijection check as a labelling.
        Labelling::new(map).map(|l| LabelPermutation { map: l.values })
    }

    pub fn identity(n: usize) -> Self {
        LabelPermutation { map: (0..n).collect() }
    }

    /// `b -> n - 1 - b`.
    pub fn complement(n: usize) -> Self {
        LabelPermutation { map: (0..n).rev().collect() }
    }

    /// `(0 1)(2 3)...(n-2 n-1)`: even labels move up by one, odd labels down by one.
    pub fn pair_swap(n: usize) -> Result<Self, LabelError> {
        if n % 2 == 1 {
            return Err(LabelError::OddSize(n));
        }
        Ok(LabelPermutation { map: (0..n).map(|b| b ^ 1).collect() })
    }

    /// The complement composed with [`pair_swap`](Self::pair_swap):
    /// even `b -> n - 2 - b`, odd `b -> n - b`.
    pub fn complement_pair_swap(n: usize) -> Result<Self, LabelError> {
        if n % 2 == 1 {
            return Err(LabelError::OddSize(n));
        }
        Ok(LabelPermutation { map: (0..n).map(|b| if b % 2 == 0 { n - 2 - b } else { n - b }).collect() })
    }

    /// The four permutations `[e, r, g1, g2]` for even `n`.
    pub fn klein_four(n: usize) -> Result<[Self; 4], LabelError> {
        Ok([Self::identity(n), Self::complement(n), Self::pair_swap(n)?, Self::complement_pair_swap(n)?])
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn image(&self, b: usize) -> usize {
        self.map[b]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &b)| i == b)
    }

    /// `x -> self(other(x))`.
    pub fn compose(&self, other: &LabelPermutation) -> Result<Self, LabelError> {
        if self.len() != other.len() {
            return Err(LabelError::SizeMismatch { expected: self.len(), found: other.len() });
        }
        Ok(LabelPermutation { map: other.map.iter().map(|&b| self.map[b]).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (b, &img) in self.map.iter().enumerate() {
            inv[img] = b;
        }
        LabelPermutation { map: inv }
    }

    /// `g[f]`: relabels every vertex `v` with `g(f(v))`.
    pub fn apply(&self, f: &Labelling) -> Result<Labelling, LabelError> {
        if self.len() != f.len() {
            return Err(LabelError::SizeMismatch { expected: self.len(), found: f.len() });
        }
        Ok(Labelling::from_bijection(f.values().iter().map(|&b| self.map[b]).collect()))
    }

    /// Disjoint cycles, each starting at its minimum, ordered by that minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut cycles = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut b = start;
            while !seen[b] {
                seen[b] = true;
                cycle.push(b);
                b = self.map[b];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Builds a permutation on `0..n` from cycle notation; unlisted labels are fixed.
    pub fn from_cycles(n: usize, text: &str) -> Result<Self, LabelError> {
        let malformed = |msg: &str| LabelError::Malformed { line: 1, msg: msg.to_string() };
        let mut map: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| malformed("expected '('"))?;
            let close = body.find(')').ok_or_else(|| malformed("unclosed cycle"))?;
            let cycle = body[..close]
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| malformed("invalid label")))
                .collect::<Result<Vec<_>, _>>()?;
            for (i, &b) in cycle.iter().enumerate() {
                if b >= n || std::mem::replace(&mut seen[b], true) {
                    return Err(LabelError::NotBijection { n });
                }
                map[b] = cycle[(i + 1) % cycle.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(LabelPermutation { map })
    }
}

impl fmt::Display for LabelPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            f.write_str("(")?;
            for (i, b) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{b}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for LabelPermutation {
    type Err = LabelError;

    /// Parses cycle notation in which every label appears (fixed points as singletons).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let n = s.split(|c: char| !c.is_ascii_digit()).filter(|t| !t.is_empty()).count();
        Self::from_cycles(n, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_examples() {
        assert_eq!(LabelPermutation::complement(4).to_string(), "(0 3)(1 2)");
        let r5 = LabelPermutation::complement(5);
        assert_eq!(r5.image(2), 2);
        assert_eq!(r5.to_string(), "(0 4)(1 3)(2)");
        assert!(LabelPermutation::complement(1).is_identity());
    }

    #[test]
    fn pair_swap_examples() {
        assert_eq!(LabelPermutation::pair_swap(12).unwrap().to_string(), "(0 1)(2 3)(4 5)(6 7)(8 9)(10 11)");
        assert_eq!(LabelPermutation::pair_swap(2).unwrap().to_string(), "(0 1)");
        assert_eq!(LabelPermutation::pair_swap(7), Err(LabelError::OddSize(7)));
    }

    #[test]
    fn complement_pair_swap_examples() {
        assert_eq!(LabelPermutation::complement_pair_swap(12).unwrap().to_string(), "(0 10)(1 11)(2 8)(3 9)(4 6)(5 7)");
        assert!(LabelPermutation::complement_pair_swap(2).unwrap().is_identity());
        let g6 = LabelPermutation::complement_pair_swap(6).unwrap();
        assert_eq!((g6.image(2), g6.image(3)), (2, 3));
        assert_eq!(g6.to_string(), "(0 4)(1 5)(2)(3)");
        assert_eq!(LabelPermutation::complement_pair_swap(3), Err(LabelError::OddSize(3)));
    }

    #[test]
    fn composition() {
        let [e, r, g1, g2] = LabelPermutation::klein_four(12).unwrap();
        assert_eq!(r.compose(&g1).unwrap(), g2);
        assert_eq!(g1.compose(&g1).unwrap(), e);
        let [_, r8, g1_8, g2_8] = LabelPermutation::klein_four(8).unwrap();
        assert_eq!(g1_8.compose(&g2_8).unwrap(), r8);
        assert_eq!(r.compose(&LabelPermutation::identity(4)), Err(LabelError::SizeMismatch { expected: 12, found: 4 }));
    }

    #[test]
    fn compose_is_right_to_left() {
        let a = LabelPermutation::new(vec![1, 2, 0]).unwrap();
        let b = LabelPermutation::new(vec![0, 2, 1]).unwrap();
        // a(b(1)) = a(2) = 0
        assert_eq!(a.compose(&b).unwrap().image(1), 0);
        assert_eq!(a.compose(&a.inverse()).unwrap(), LabelPermutation::identity(3));
    }

    #[test]
    fn apply_examples() {
        let f = Labelling::new(vec![0, 3, 1, 2]).unwrap();
        assert_eq!(LabelPermutation::identity(4).apply(&f).unwrap(), f);
        assert_eq!(LabelPermutation::pair_swap(4).unwrap().apply(&f).unwrap().values(), &[1, 2, 0, 3]);
        assert_eq!(LabelPermutation::complement(4).apply(&f).unwrap().values(), &[3, 0, 2, 1]);
        assert_eq!(LabelPermutation::identity(3).apply(&f), Err(LabelError::SizeMismatch { expected: 3, found: 4 }));
    }

    #[test]
    fn cycle_notation_parsing() {
        let g = LabelPermutation::from_cycles(6, "(0 4 1 5)(2 3)").unwrap();
        assert_eq!(g.as_slice(), &[4, 5, 3, 2, 1, 0]);
        assert_eq!(g.to_string(), "(0 4 1 5)(2 3)");
        assert_eq!("(0 4)(1 3)(2)".parse::<LabelPermutation>().unwrap(), LabelPermutation::complement(5));
        assert!(LabelPermutation::from_cycles(4, "(0 1)(1 2)").is_err());
        assert!(LabelPermutation::from_cycles(4, "(0 5)").is_err());
        assert!(LabelPermutation::from_cycles(4, "0 1").is_err());
    }
}
