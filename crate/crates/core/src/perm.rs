//! Permutations in one-line notation, their cycle structure and the
//! elementary statistics built on it.
//!
//! All externally visible positions and values are 1-based: a permutation of
//! length `n` is a word containing each of `1..=n` exactly once. The empty
//! word is the unique permutation of length 0.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

/// The three basic symmetries of the permutation diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// Flip positions: `π(1)…π(n)` becomes `π(n)…π(1)`.
    Reverse,
    /// Functional inverse; transposes the diagram.
    Inverse,
    /// Flip values: `π(i)` becomes `n + 1 − π(i)`.
    Complement,
}

impl Symmetry {
    pub const ALL: [Symmetry; 3] = [Symmetry::Reverse, Symmetry::Inverse, Symmetry::Complement];
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reverse" => Ok(Symmetry::Reverse),
            "inverse" => Ok(Symmetry::Inverse),
            "complement" => Ok(Symmetry::Complement),
            _ => Err(Error::PermutationSyntax {
                text: s.to_string(),
                reason: "expected one of reverse, inverse, complement".to_string(),
            }),
        }
    }
}

impl Permutation {
    /// Validates a one-line word over `1..=n`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 {
                return Err(Error::ZeroValue);
            }
            if v > n {
                return Err(Error::ValueOutOfRange { value: v, len: n });
            }
            if seen[v] {
                return Err(Error::DuplicateValue(v));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    /// Caller guarantees `values` is a rearrangement of `1..=values.len()`.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// The decreasing word `n (n-1) … 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            values: (1..=n).rev().collect(),
        }
    }

    /// Every permutation of length `n`, in lexicographic order.
    pub fn all(n: usize) -> Permutations {
        Permutations {
            next: Some((1..=n).collect()),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    /// The value at 1-based `position`.
    pub fn at(&self, position: usize) -> usize {
        self.values[position - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    pub fn reverse(&self) -> Permutation {
        Permutation {
            values: self.values.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len();
        Permutation {
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn apply_symmetry(&self, op: Symmetry) -> Permutation {
        match op {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Inverse => self.inverse(),
            Symmetry::Complement => self.complement(),
        }
    }

    /// `self ⊕ other`: `self` followed by `other` shifted up by `self.len()`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.len();
        let values = self
            .values
            .iter()
            .copied()
            .chain(other.values.iter().map(|&v| v + shift))
            .collect();
        Permutation { values }
    }

    /// Cycles written smallest element first, sorted by first element in
    /// descending order.
    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.len();
        let mut visited = vec![false; n + 1];
        let mut cycles = Vec::new();
        // Scanning upwards, the first unvisited element of a cycle is its minimum.
        for start in 1..=n {
            if visited[start] {
                continue;
            }
            let mut cycle = vec![start];
            visited[start] = true;
            let mut next = self.values[start - 1];
            while next != start {
                visited[next] = true;
                cycle.push(next);
                next = self.values[next - 1];
            }
            cycles.push(cycle);
        }
        cycles.reverse();
        CycleDecomposition { cycles }
    }

    pub fn num_cycles(&self) -> usize {
        let n = self.len();
        let mut visited = vec![false; n + 1];
        let mut count = 0;
        for start in 1..=n {
            if visited[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                x = self.values[x - 1];
            }
        }
        count
    }

    /// Number of cycles of the form `(i, i+1, …, i+q−1)`.
    ///
    /// `q` larger than the length is legal and yields 0.
    pub fn adjacent_q_cycle_count(&self, q: usize) -> Result<usize> {
        if q == 0 {
            return Err(Error::ZeroCycleLength);
        }
        Ok(self
            .cycle_decomposition()
            .cycles()
            .iter()
            .filter(|c| c.len() == q && is_adjacent_cycle(c))
            .count())
    }

    pub fn q_cycle_profile(&self) -> QCycleProfile {
        let n = self.len();
        let mut counts: BTreeMap<usize, usize> = (1..=n).map(|q| (q, 0)).collect();
        for cycle in self.cycle_decomposition().cycles() {
            if is_adjacent_cycle(cycle) {
                *counts
                    .get_mut(&cycle.len())
                    .expect("cycle length within 1..=n") += 1;
            }
        }
        QCycleProfile { n, counts }
    }

    /// 1-based positions of the left-to-right minima.
    pub fn left_to_right_minima(&self) -> Vec<usize> {
        let mut running = usize::MAX;
        let mut out = Vec::new();
        for (i, &v) in self.values.iter().enumerate() {
            if v < running {
                running = v;
                out.push(i + 1);
            }
        }
        out
    }

    /// 1-based positions `i` with `π(i) = i`, everything to the left smaller
    /// and everything to the right larger.
    pub fn strong_fixed_points(&self) -> Vec<usize> {
        // A fixed point i is strong exactly when the prefix of length i is a
        // rearrangement of 1..=i, i.e. the prefix maximum equals i, and the
        // value there is i itself.
        let mut prefix_max = 0;
        let mut out = Vec::new();
        for (i, &v) in self.values.iter().enumerate() {
            prefix_max = prefix_max.max(v);
            if v == i + 1 && prefix_max == i + 1 {
                out.push(i + 1);
            }
        }
        out
    }
}

/// `cycle` is in canonical form (minimum first), so cyclic equality with
/// `(i, i+1, …)` is plain equality.
fn is_adjacent_cycle(cycle: &[usize]) -> bool {
    let first = cycle[0];
    cycle.iter().enumerate().all(|(j, &x)| x == first + j)
}

impl fmt::Display for Permutation {
    /// Bare digits for length up to 9, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.values.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"213967548"`, `"2,1,3,9,6,7,5,4,8"`, or `""`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let syntax = |reason: &str| Error::PermutationSyntax {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Ok(Permutation::default());
        }
        let values = if s.contains(',') {
            s.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| syntax("expected a comma-separated list of integers"))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| syntax("expected a digit string"))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Permutation::new(values)
    }
}

/// Lexicographic enumeration of `S_n`.
#[derive(Clone, Debug)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { values: current })
    }
}

fn next_lexicographic(word: &mut [usize]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Disjoint cycles of a permutation in canonical form: each cycle starts at
/// its minimum and cycles are sorted by that minimum, largest first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    /// Canonicalizes an arbitrary list of disjoint cycles covering `1..=n`.
    pub fn from_cycles(cycles: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = cycles.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for cycle in &cycles {
            if cycle.is_empty() {
                return Err(Error::PermutationSyntax {
                    text: String::new(),
                    reason: "empty cycle".to_string(),
                });
            }
            for &x in cycle {
                if x == 0 {
                    return Err(Error::ZeroValue);
                }
                if x > n {
                    return Err(Error::ValueOutOfRange { value: x, len: n });
                }
                if seen[x] {
                    return Err(Error::DuplicateValue(x));
                }
                seen[x] = true;
            }
        }
        let mut canonical: Vec<Vec<usize>> = cycles
            .into_iter()
            .map(|mut c| {
                let min_at = c
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, &x)| x)
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                c.rotate_left(min_at);
                c
            })
            .collect();
        canonical.sort_by(|a, b| b[0].cmp(&a[0]));
        Ok(CycleDecomposition { cycles: canonical })
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Number of points moved or fixed, i.e. `n`.
    pub fn degree(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    /// Rebuilds the permutation the cycles describe.
    pub fn to_permutation(&self) -> Permutation {
        let mut values = vec![0; self.degree()];
        for cycle in &self.cycles {
            for (j, &x) in cycle.iter().enumerate() {
                values[x - 1] = cycle[(j + 1) % cycle.len()];
            }
        }
        Permutation::from_vec_unchecked(values)
    }

    /// The cycles read left to right as a single word.
    pub fn flatten(&self) -> Vec<usize> {
        self.cycles.iter().flatten().copied().collect()
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for CycleDecomposition {
    type Err = Error;

    /// Parses `"(5,6,7)(4,9,8)(3)(1,2)"`; the empty string is the empty
    /// decomposition.
    fn from_str(s: &str) -> Result<Self> {
        let syntax = |reason: &str| Error::PermutationSyntax {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let mut rest = s.trim();
        let mut cycles = Vec::new();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| syntax("expected '('"))?;
            let close = body
                .find(')')
                .ok_or_else(|| syntax("unbalanced parenthesis"))?;
            let cycle = body[..close]
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| syntax("expected integers inside a cycle"))
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        CycleDecomposition::from_cycles(cycles)
    }
}

/// Number of adjacent q-cycles for every `1 ≤ q ≤ n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QCycleProfile {
    n: usize,
    counts: BTreeMap<usize, usize>,
}

impl QCycleProfile {
    /// Count for cycle length `q`; zero for `q = 0` or `q > n`.
    pub fn get(&self, q: usize) -> usize {
        self.counts.get(&q).copied().unwrap_or(0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(q, count)` for every `1 ≤ q ≤ n`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&q, &c)| (q, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn make_permutation() {
        let p = Permutation::new(vec![2, 1, 3, 9, 6, 7, 5, 4, 8]).unwrap();
        assert_eq!(p.to_string(), "213967548");
        assert!(Permutation::new(vec![]).unwrap().is_empty());
        assert_eq!(Permutation::new(vec![1, 1]), Err(Error::DuplicateValue(1)));
        assert_eq!(Permutation::new(vec![0, 1]), Err(Error::ZeroValue));
        assert_eq!(
            Permutation::new(vec![1, 3]),
            Err(Error::ValueOutOfRange { value: 3, len: 2 })
        );
    }

    #[test]
    fn text_forms() {
        assert_eq!(perm("2,1,3,9,6,7,5,4,8"), perm("213967548"));
        assert_eq!(perm(""), Permutation::identity(0));
        let long = Permutation::decreasing(10);
        assert_eq!(long.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
        assert!("12a".parse::<Permutation>().is_err());
        assert!("1,,2".parse::<Permutation>().is_err());
        assert!("0".parse::<Permutation>().is_err());
    }

    #[test]
    fn cycle_decomposition_examples() {
        assert_eq!(
            perm("213967548").cycle_decomposition().to_string(),
            "(5,6,7)(4,9,8)(3)(1,2)"
        );
        assert_eq!(perm("123").cycle_decomposition().to_string(), "(3)(2)(1)");
        assert_eq!(perm("321").cycle_decomposition().to_string(), "(2)(1,3)");
        assert!(perm("").cycle_decomposition().is_empty());
    }

    #[test]
    fn cycle_text_round_trip() {
        let c: CycleDecomposition = "(1,2)(3)(8,4,9)(7,5,6)".parse().unwrap();
        assert_eq!(c.to_string(), "(5,6,7)(4,9,8)(3)(1,2)");
        assert_eq!(c.to_permutation(), perm("213967548"));
        assert!("(1,2)(2)".parse::<CycleDecomposition>().is_err());
        assert!("(1,3)".parse::<CycleDecomposition>().is_err());
        assert!("(1,2".parse::<CycleDecomposition>().is_err());
    }

    #[test]
    fn cycle_round_trip_exhaustive() {
        for n in 0..=8 {
            for p in Permutation::all(n) {
                let c = p.cycle_decomposition();
                assert_eq!(c.to_permutation(), p);
                assert_eq!(c.len(), p.num_cycles());
                for w in c.cycles().windows(2) {
                    assert!(w[0][0] > w[1][0]);
                }
                for cycle in c.cycles() {
                    assert_eq!(cycle[0], *cycle.iter().min().unwrap());
                }
            }
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        assert_eq!(Permutation::all(0).count(), 1);
        let s3: Vec<String> = Permutation::all(3).map(|p| p.to_string()).collect();
        assert_eq!(s3, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(Permutation::all(6).count(), 720);
    }

    #[test]
    fn adjacent_cycles() {
        let p = perm("213967548");
        assert_eq!(p.adjacent_q_cycle_count(1), Ok(1));
        assert_eq!(p.adjacent_q_cycle_count(2), Ok(1));
        assert_eq!(p.adjacent_q_cycle_count(3), Ok(1));
        assert_eq!(p.adjacent_q_cycle_count(4), Ok(0));
        assert_eq!(p.adjacent_q_cycle_count(40), Ok(0));
        assert_eq!(p.adjacent_q_cycle_count(0), Err(Error::ZeroCycleLength));
        assert_eq!(Permutation::identity(4).adjacent_q_cycle_count(1), Ok(4));
        // (4,6,5) covers an interval but runs the wrong way round.
        let twisted: CycleDecomposition = "(1)(2)(3)(4,6,5)".parse().unwrap();
        assert_eq!(twisted.to_permutation().adjacent_q_cycle_count(3), Ok(0));
        let straight: CycleDecomposition = "(1)(2)(3)(4,5,6)".parse().unwrap();
        assert_eq!(straight.to_permutation().adjacent_q_cycle_count(3), Ok(1));
    }

    #[test]
    fn profiles() {
        let prof = perm("213967548").q_cycle_profile();
        let got: Vec<_> = prof.iter().collect();
        assert_eq!(
            got,
            [
                (1, 1),
                (2, 1),
                (3, 1),
                (4, 0),
                (5, 0),
                (6, 0),
                (7, 0),
                (8, 0),
                (9, 0)
            ]
        );
        assert_eq!(perm("").q_cycle_profile().iter().count(), 0);
        assert_eq!(perm("").q_cycle_profile().get(1), 0);
        let p21 = perm("21").q_cycle_profile();
        assert_eq!((p21.get(1), p21.get(2)), (0, 1));
    }

    #[test]
    fn minima_and_strong_fixed_points() {
        assert_eq!(perm("567498312").left_to_right_minima(), [1, 4, 7, 8]);
        assert_eq!(perm("4321").left_to_right_minima(), [1, 2, 3, 4]);
        assert_eq!(perm("1234").left_to_right_minima(), [1]);
        assert!(perm("").left_to_right_minima().is_empty());

        assert_eq!(perm("123").strong_fixed_points(), [1, 2, 3]);
        assert_eq!(perm("213").strong_fixed_points(), [3]);
        assert!(perm("321").strong_fixed_points().is_empty());
    }

    #[test]
    fn strong_fixed_points_match_definition() {
        for n in 0..=7 {
            for p in Permutation::all(n) {
                let v = p.values();
                let naive: Vec<usize> = (1..=n)
                    .filter(|&i| {
                        v[i - 1] == i
                            && (1..i).all(|j| v[j - 1] < i)
                            && (i + 1..=n).all(|j| v[j - 1] > i)
                    })
                    .collect();
                assert_eq!(p.strong_fixed_points(), naive, "{p}");
                assert!(p.adjacent_q_cycle_count(1).unwrap() >= naive.len());
            }
        }
    }

    #[test]
    fn symmetries() {
        assert_eq!(perm("213").reverse(), perm("312"));
        assert_eq!(perm("231").inverse(), perm("312"));
        assert_eq!(perm("213").complement(), perm("231"));
        for p in Permutation::all(5) {
            for op in Symmetry::ALL {
                assert_eq!(p.apply_symmetry(op).apply_symmetry(op), p);
            }
        }
    }

    #[test]
    fn direct_sums() {
        assert_eq!(perm("21").direct_sum(&perm("1")), perm("213"));
        assert_eq!(perm("21").direct_sum(&perm("")), perm("21"));
        assert_eq!(perm("21").direct_sum(&perm("312")), perm("21534"));
    }
}
