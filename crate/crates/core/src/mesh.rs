//! Mesh patterns and their occurrences in permutations.
//!
//! A mesh pattern of length `k` is a classical pattern (a permutation of
//! `1..=k`) together with a set of shaded cells `(a, b)`, `0 ≤ a, b ≤ k`.
//! Column `a` is the gap between the `a`-th and `(a+1)`-th pattern points
//! and row `b` the gap between the `b`-th and `(b+1)`-th smallest values,
//! with virtual boundaries on all four sides.
//!
//! In a host permutation `σ` of length `n`, an occurrence is a set of
//! positions `i₁ < … < i_k` whose values are order-isomorphic to the word,
//! such that for each shaded cell the corresponding open rectangle of the
//! host diagram contains no point. With `i₀ = 0`, `i_{k+1} = n + 1` and
//! `v₀ < v₁ < … < v_{k+1}` the selected values padded with `0` and `n + 1`,
//! cell `(a, b)` is the rectangle `(i_a, i_{a+1}) × (v_b, v_{b+1})`.
//!
//! Textual form:
//!
//! ```text
//! pattern := builtin | word "|" cells
//! builtin := "r:" INT | "s:" INT | "p" | "r2'" | "s2'" | "lrmin" | "sfp" | "ssfp"
//! cells   := ( a "," b ) separated by spaces, possibly empty
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Symmetry};

/// A shaded cell `(column, row)`.
pub type Cell = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MeshPattern {
    word: Permutation,
    shaded: BTreeSet<Cell>,
}

/// Strictly increasing 1-based positions in the host.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occurrence {
    pub positions: Vec<usize>,
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.positions.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl MeshPattern {
    /// Duplicate cells collapse; cells outside the grid are rejected.
    pub fn new(word: Permutation, cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let k = word.len();
        let mut shaded = BTreeSet::new();
        for (column, row) in cells {
            if column > k || row > k {
                return Err(Error::CellOutOfRange {
                    column,
                    row,
                    len: k,
                });
            }
            shaded.insert((column, row));
        }
        Ok(MeshPattern { word, shaded })
    }

    /// No shading.
    pub fn classical(word: Permutation) -> Self {
        MeshPattern {
            word,
            shaded: BTreeSet::new(),
        }
    }

    pub fn word(&self) -> &Permutation {
        &self.word
    }

    pub fn shaded(&self) -> &BTreeSet<Cell> {
        &self.shaded
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_shaded(&self, cell: Cell) -> bool {
        self.shaded.contains(&cell)
    }

    /// Cells of the `(k+1) × (k+1)` grid that are not shaded.
    pub fn unshaded(&self) -> BTreeSet<Cell> {
        let k = self.len();
        (0..=k)
            .flat_map(|a| (0..=k).map(move |b| (a, b)))
            .filter(|c| !self.shaded.contains(c))
            .collect()
    }

    pub fn transform(&self, op: Symmetry) -> MeshPattern {
        let k = self.len();
        let (word, shaded) = match op {
            Symmetry::Reverse => (
                self.word.reverse(),
                self.shaded.iter().map(|&(a, b)| (k - a, b)).collect(),
            ),
            Symmetry::Complement => (
                self.word.complement(),
                self.shaded.iter().map(|&(a, b)| (a, k - b)).collect(),
            ),
            Symmetry::Inverse => (
                self.word.inverse(),
                self.shaded.iter().map(|&(a, b)| (b, a)).collect(),
            ),
        };
        MeshPattern { word, shaded }
    }

    /// All occurrences in `host`, in lexicographic order of positions.
    pub fn occurrences(&self, host: &Permutation) -> Vec<Occurrence> {
        let mut out = Vec::new();
        self.search(host, &mut |positions| {
            out.push(Occurrence {
                positions: positions.to_vec(),
            });
            true
        });
        out
    }

    pub fn count_occurrences(&self, host: &Permutation) -> usize {
        let mut count = 0;
        self.search(host, &mut |_| {
            count += 1;
            true
        });
        count
    }

    pub fn contains_in(&self, host: &Permutation) -> bool {
        let mut found = false;
        self.search(host, &mut |_| {
            found = true;
            false
        });
        found
    }

    pub fn avoided_by(&self, host: &Permutation) -> bool {
        !self.contains_in(host)
    }

    /// Depth-first over increasing positions, pruned by order isomorphism
    /// with the word prefix; shading is tested once all `k` points are
    /// placed. `visit` returns `false` to stop the search.
    fn search(&self, host: &Permutation, visit: &mut dyn FnMut(&[usize]) -> bool) {
        let k = self.len();
        let n = host.len();
        if k > n {
            return;
        }
        let mut chosen: Vec<usize> = Vec::with_capacity(k);
        // Host positions of the pattern values 1..=k, filled once complete.
        let mut by_rank = vec![0usize; k];
        self.extend(host, &mut chosen, &mut by_rank, visit);
    }

    fn extend(
        &self,
        host: &Permutation,
        chosen: &mut Vec<usize>,
        by_rank: &mut [usize],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let k = self.len();
        let n = host.len();
        let depth = chosen.len();
        if depth == k {
            if self.shading_holds(host, chosen, by_rank) {
                return visit(chosen);
            }
            return true;
        }
        let start = chosen.last().map_or(1, |&p| p + 1);
        // Leave room for the remaining k - depth - 1 points.
        let end = n - (k - depth - 1);
        let word = self.word.values();
        for pos in start..=end {
            let v = host.at(pos);
            let consistent = chosen
                .iter()
                .zip(word)
                .all(|(&p, &w)| (host.at(p) < v) == (w < word[depth]));
            if !consistent {
                continue;
            }
            chosen.push(pos);
            let keep_going = self.extend(host, chosen, by_rank, visit);
            chosen.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn shading_holds(&self, host: &Permutation, chosen: &[usize], by_rank: &mut [usize]) -> bool {
        if self.shaded.is_empty() {
            return true;
        }
        let n = host.len();
        for (i, &w) in self.word.values().iter().enumerate() {
            by_rank[w - 1] = chosen[i];
        }
        let column_bound = |a: usize| -> usize {
            match a {
                0 => 0,
                a if a > chosen.len() => n + 1,
                a => chosen[a - 1],
            }
        };
        let row_bound = |b: usize| -> usize {
            match b {
                0 => 0,
                b if b > by_rank.len() => n + 1,
                b => host.at(by_rank[b - 1]),
            }
        };
        self.shaded.iter().all(|&(a, b)| {
            let (lo_v, hi_v) = (row_bound(b), row_bound(b + 1));
            (column_bound(a) + 1..column_bound(a + 1)).all(|p| {
                let v = host.at(p);
                v <= lo_v || v >= hi_v
            })
        })
    }
}

impl fmt::Display for MeshPattern {
    /// Canonical textual form with cells in sorted order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|", self.word)?;
        for (i, (a, b)) in self.shaded.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a},{b}")?;
        }
        Ok(())
    }
}

impl FromStr for MeshPattern {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_pattern(text)
    }
}

pub fn parse_pattern(text: &str) -> Result<MeshPattern> {
    let text = text.trim();
    let syntax = |reason: String| Error::PatternSyntax {
        text: text.to_string(),
        reason,
    };
    let Some((word, cells)) = text.split_once('|') else {
        return builtin(text);
    };
    let word: Permutation = word
        .parse()
        .map_err(|e: Error| syntax(format!("bad word: {e}")))?;
    let cells = cells
        .split_whitespace()
        .map(|tok| {
            let (a, b) = tok
                .split_once(',')
                .ok_or_else(|| syntax(format!("cell {tok:?} is not of the form a,b")))?;
            let a = a
                .parse::<usize>()
                .map_err(|_| syntax(format!("bad column in cell {tok:?}")))?;
            let b = b
                .parse::<usize>()
                .map_err(|_| syntax(format!("bad row in cell {tok:?}")))?;
            Ok((a, b))
        })
        .collect::<Result<Vec<Cell>>>()?;
    MeshPattern::new(word, cells)
}

fn builtin(name: &str) -> Result<MeshPattern> {
    let family = |arg: &str| -> Result<usize> {
        arg.parse::<usize>().map_err(|_| Error::PatternSyntax {
            text: name.to_string(),
            reason: "expected a positive integer after the colon".to_string(),
        })
    };
    if let Some(q) = name.strip_prefix("r:") {
        return r_pattern(family(q)?);
    }
    if let Some(q) = name.strip_prefix("s:") {
        return s_pattern(family(q)?);
    }
    Ok(named_pattern(name.parse()?))
}

/// `12…q` at the very end of the host, occupying the `q` smallest values:
/// every cell shaded except the top-left one.
pub fn r_pattern(q: usize) -> Result<MeshPattern> {
    if q == 0 {
        return Err(Error::ZeroCycleLength);
    }
    let word = Permutation::identity(q);
    let cells = (0..=q)
        .flat_map(|a| (0..=q).map(move |b| (a, b)))
        .filter(|&c| c != (0, q));
    MeshPattern::new(word, cells)
}

/// `2 3 … (q+1) 1`: a run of `q` consecutive values that starts at a
/// left-to-right minimum and is immediately followed by the next
/// left-to-right minimum.
pub fn s_pattern(q: usize) -> Result<MeshPattern> {
    if q == 0 {
        return Err(Error::ZeroCycleLength);
    }
    let k = q + 1;
    let word = Permutation::from_vec_unchecked((2..=k).chain(std::iter::once(1)).collect());
    let open = [(0, k), (k, 0), (k, 1), (k, k)];
    let cells = (0..=k)
        .flat_map(|a| (0..=k).map(move |b| (a, b)))
        .filter(|c| !open.contains(c));
    MeshPattern::new(word, cells)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedPattern {
    /// `132` whose avoiders are counted by `Σ m!·(x/(1+x²))^m`.
    P,
    /// `r₂` after reverse then inverse.
    R2Prime,
    /// `s₂` after reverse then inverse.
    S2Prime,
    /// Left-to-right minimum.
    LrMin,
    /// Strong fixed point.
    StrongFixedPoint,
    /// Skew strong fixed point.
    SkewStrongFixedPoint,
}

impl NamedPattern {
    pub const ALL: [NamedPattern; 6] = [
        NamedPattern::P,
        NamedPattern::R2Prime,
        NamedPattern::S2Prime,
        NamedPattern::LrMin,
        NamedPattern::StrongFixedPoint,
        NamedPattern::SkewStrongFixedPoint,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedPattern::P => "p",
            NamedPattern::R2Prime => "r2'",
            NamedPattern::S2Prime => "s2'",
            NamedPattern::LrMin => "lrmin",
            NamedPattern::StrongFixedPoint => "sfp",
            NamedPattern::SkewStrongFixedPoint => "ssfp",
        }
    }
}

impl FromStr for NamedPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedPattern::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPattern(s.to_string()))
    }
}

pub fn named_pattern(name: NamedPattern) -> MeshPattern {
    let (word, cells): (&[usize], &[Cell]) = match name {
        NamedPattern::P => (
            &[1, 3, 2],
            &[
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 0),
                (2, 1),
                (2, 2),
                (2, 3),
                (3, 1),
                (3, 2),
            ],
        ),
        NamedPattern::R2Prime => (
            &[2, 1],
            &[
                (0, 0),
                (0, 1),
                (0, 2),
                (1, 0),
                (1, 1),
                (1, 2),
                (2, 0),
                (2, 1),
            ],
        ),
        NamedPattern::S2Prime => (
            &[1, 3, 2],
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 1),
                (1, 2),
                (1, 3),
                (2, 0),
                (2, 1),
                (2, 2),
                (2, 3),
                (3, 1),
                (3, 2),
            ],
        ),
        NamedPattern::LrMin => (&[1], &[(0, 0)]),
        NamedPattern::StrongFixedPoint => (&[1], &[(1, 0), (0, 1)]),
        NamedPattern::SkewStrongFixedPoint => (&[1], &[(0, 0), (1, 1)]),
    };
    MeshPattern::new(
        Permutation::from_vec_unchecked(word.to_vec()),
        cells.iter().copied(),
    )
    .expect("built-in cells lie inside their grids")
}
