//! Exact counting of adjacent q-cycles and of mesh-pattern avoiders, plus
//! the drivers that check the cycle/pattern correspondence and the avoider
//! generating function exhaustively.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::foata::foata_forward;
use crate::mesh::{named_pattern, r_pattern, s_pattern, MeshPattern, NamedPattern};
use crate::perm::Permutation;
use crate::series::CoefficientSeries;

/// Largest `n` swept exhaustively unless configured otherwise.
pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 9;

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Number of permutations of `[n]` with exactly `k` adjacent q-cycles:
///
/// `Σ_{j=k}^{⌊n/q⌋} (−1)^{k+j} C(j,k) (n−(q−1)j)! / j!`
pub fn a_formula(q: usize, n: usize, k: usize) -> Result<BigInt> {
    if q == 0 {
        return Err(Error::ZeroCycleLength);
    }
    let mut total = BigInt::zero();
    for j in k..=n / q {
        // (n-(q-1)j)!/j! as the product (j+1)…(n-(q-1)j); j ≤ n-(q-1)j here.
        let top = n - (q - 1) * j;
        let ratio = (j + 1..=top).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
        let term = binomial(j, k) * ratio;
        if (k + j).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Brute-force distribution of adjacent q-cycles over `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    n: usize,
    rows: BTreeMap<(usize, usize), u64>,
}

impl CensusTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Permutations of `S_n` with exactly `k` adjacent q-cycles.
    pub fn get(&self, q: usize, k: usize) -> u64 {
        if let Some(&c) = self.rows.get(&(q, k)) {
            return c;
        }
        if q > self.n && k == 0 {
            return (1..=self.n as u64).product();
        }
        0
    }

    /// `((q, k), count)` for `1 ≤ q ≤ max(n, 1)` and `0 ≤ k ≤ ⌊n/q⌋`.
    pub fn rows(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.rows
    }

    /// Total number of adjacent q-cycles over all of `S_n`.
    pub fn total_cycles(&self, q: usize) -> u64 {
        self.rows
            .iter()
            .filter(|((qq, _), _)| *qq == q)
            .map(|((_, k), c)| *k as u64 * c)
            .sum()
    }
}

/// Per-check outcome of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// Individual comparisons performed.
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// A permutation `π` and cycle length `q` where the adjacent q-cycle count
/// of `π` differs from `occ(r_q, σ) + occ(s_q, σ)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Theorem1Counterexample {
    pub pi: Permutation,
    pub q: usize,
    pub sigma: Permutation,
    pub adjacent_cycles: usize,
    pub r_occurrences: usize,
    pub s_occurrences: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub title: String,
    pub permutations_scanned: u64,
    pub checks: Vec<Check>,
    pub counterexamples: Vec<Theorem1Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.checks.iter().all(Check::passed)
    }
}

/// Exhaustive sweeps over `S_n` for `n` up to a configurable bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForce {
    bound: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            bound: DEFAULT_BRUTE_FORCE_BOUND,
        }
    }
}

impl BruteForce {
    pub fn with_bound(bound: usize) -> Self {
        BruteForce { bound }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check_bound(&self, n: usize) -> Result<()> {
        if n > self.bound {
            return Err(Error::BoundExceeded {
                n,
                bound: self.bound,
            });
        }
        Ok(())
    }

    pub fn census(&self, n: usize) -> Result<CensusTable> {
        self.check_bound(n)?;
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let q_max = n.max(1);
        // counts[q][k]
        let empty = || {
            (0..=q_max)
                .map(|q| vec![0u64; n.checked_div(q).map_or(0, |m| m + 1)])
                .collect::<Vec<_>>()
        };
        let counts = perms
            .par_iter()
            .fold(empty, |mut acc, p| {
                let profile = p.q_cycle_profile();
                for (q, row) in acc.iter_mut().enumerate().skip(1) {
                    row[profile.get(q)] += 1;
                }
                acc
            })
            .reduce(empty, |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(b) {
                    for (x, y) in ra.iter_mut().zip(rb) {
                        *x += y;
                    }
                }
                a
            });
        let rows = counts
            .into_iter()
            .enumerate()
            .skip(1)
            .flat_map(|(q, row)| row.into_iter().enumerate().map(move |(k, c)| ((q, k), c)))
            .collect();
        Ok(CensusTable { n, rows })
    }

    /// Coefficient `n` is the number of permutations of length `n` avoiding `t`.
    pub fn avoider_series(&self, t: &MeshPattern, order: usize) -> Result<CoefficientSeries> {
        self.check_bound(order)?;
        let counts = (0..=order).map(|n| {
            let perms: Vec<Permutation> = Permutation::all(n).collect();
            perms.par_iter().filter(|s| t.avoided_by(s)).count()
        });
        Ok(CoefficientSeries::from_coeffs(
            counts.collect::<Vec<_>>(),
            order,
        ))
    }

    /// Permutations of length `n` avoiding every pattern in `ts`, sorted
    /// lexicographically.
    pub fn avoiders(&self, ts: &[MeshPattern], n: usize) -> Result<Vec<Permutation>> {
        self.check_bound(n)?;
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        // `all` is lexicographic and par_iter().filter().collect() keeps order.
        Ok(perms
            .into_par_iter()
            .filter(|s| ts.iter().all(|t| t.avoided_by(s)))
            .collect())
    }

    /// Checks, for every `π ∈ S_n` with `n ≤ n_max` and every `1 ≤ q ≤ n`,
    /// that the adjacent q-cycles of `π` are counted by the occurrences of
    /// `r_q` and `s_q` in the Foata image of `π`.
    pub fn verify_theorem1(&self, n_max: usize) -> Result<VerificationReport> {
        self.check_bound(n_max)?;
        let families: Vec<(MeshPattern, MeshPattern)> = (1..=n_max)
            .map(|q| (r_pattern(q).expect("q ≥ 1"), s_pattern(q).expect("q ≥ 1")))
            .collect();
        let mut report = VerificationReport {
            title: format!("adjacent q-cycles vs occ(r_q) + occ(s_q) under Foata, n <= {n_max}"),
            permutations_scanned: 0,
            checks: Vec::new(),
            counterexamples: Vec::new(),
        };
        for n in 0..=n_max {
            let perms: Vec<Permutation> = Permutation::all(n).collect();
            let mut bad: Vec<Theorem1Counterexample> = perms
                .par_iter()
                .flat_map_iter(|pi| {
                    let sigma = foata_forward(pi);
                    let profile = pi.q_cycle_profile();
                    let families = &families;
                    (1..=n).filter_map(move |q| {
                        let (r, s) = &families[q - 1];
                        let (r_occ, s_occ) =
                            (r.count_occurrences(&sigma), s.count_occurrences(&sigma));
                        let adjacent = profile.get(q);
                        (adjacent != r_occ + s_occ).then(|| Theorem1Counterexample {
                            pi: pi.clone(),
                            q,
                            sigma: sigma.clone(),
                            adjacent_cycles: adjacent,
                            r_occurrences: r_occ,
                            s_occurrences: s_occ,
                        })
                    })
                })
                .collect();
            bad.sort();
            let mut check = Check::new(format!("n = {n}"));
            check.cases = perms.len() as u64 * n as u64;
            check.failures = bad.len() as u64;
            check.first_failure = bad.first().map(render_counterexample);
            report.permutations_scanned += perms.len() as u64;
            report.checks.push(check);
            report.counterexamples.extend(bad);
        }
        Ok(report)
    }

    /// Five checks on the avoiders of `p`:
    /// 1. brute-force avoider counts match the coefficients of `F(x)`;
    /// 2. `|S_n(p)| = a_2(n,0) + a_2(n−2,0)` for `2 ≤ n ≤ n_max`;
    /// 3. `F(x) = (1+x²)·A(x)` through `series_terms`;
    /// 4. `A(x)` solves its differential equation through `series_terms`;
    /// 5. `p` and `s₂′` have the same avoiders for `n ≤ n_max`.
    pub fn verify_conjecture(
        &self,
        n_max: usize,
        series_terms: usize,
    ) -> Result<VerificationReport> {
        self.check_bound(n_max)?;
        let p = named_pattern(NamedPattern::P);
        let s2p = named_pattern(NamedPattern::S2Prime);
        let avoiders = self.avoider_series(&p, n_max)?;
        let f_small = f_series(n_max);

        let mut avoid_vs_f = Check::new("avoiders of p match F(x) coefficients");
        for n in 0..=n_max {
            let (got, want) = (avoiders.coeff(n), f_small.coeff(n));
            avoid_vs_f.record(got == want, || {
                format!("n = {n}: |S_n(p)| = {got}, [x^n]F = {want}")
            });
        }

        let mut recurrence = Check::new("|S_n(p)| = a_2(n,0) + a_2(n-2,0)");
        for n in 2..=n_max {
            let want = a_formula(2, n, 0)? + a_formula(2, n - 2, 0)?;
            let got = avoiders.coeff(n);
            recurrence.record(*got == want, || {
                format!("n = {n}: |S_n(p)| = {got}, a_2(n,0) + a_2(n-2,0) = {want}")
            });
        }

        let a = a2_series(series_terms);
        let f = f_series(series_terms);
        let lifted = &one_plus_x_squared(series_terms) * &a;
        let mut gf = Check::new("F(x) = (1+x^2) A(x)");
        for n in 0..=series_terms {
            let (got, want) = (f.coeff(n), lifted.coeff(n));
            gf.record(got == want, || {
                format!("x^{n}: F has {got}, (1+x^2)A has {want}")
            });
        }

        let residual = ode_residual(&a);
        let mut ode = Check::new("A(x) satisfies its differential equation");
        for (n, c) in residual.coeffs().iter().enumerate() {
            ode.record(c.is_zero(), || {
                format!("residual coefficient of x^{n} is {c}")
            });
        }

        let mut coincide = Check::new("S_n(p) = S_n(s2') as sets");
        let mut scanned = 0;
        for n in 0..=n_max {
            let perms: Vec<Permutation> = Permutation::all(n).collect();
            scanned += perms.len() as u64;
            let bad: Vec<&Permutation> = perms
                .par_iter()
                .filter(|s| p.avoided_by(s) != s2p.avoided_by(s))
                .collect();
            coincide.cases += perms.len() as u64;
            coincide.failures += bad.len() as u64;
            if coincide.first_failure.is_none() {
                coincide.first_failure = bad.first().map(|s| {
                    format!(
                        "{s}: avoids p = {}, avoids s2' = {}",
                        p.avoided_by(s),
                        s2p.avoided_by(s)
                    )
                });
            }
        }

        Ok(VerificationReport {
            title: format!("avoiders of p vs F(x), n <= {n_max}, series through x^{series_terms}"),
            permutations_scanned: scanned,
            checks: vec![avoid_vs_f, recurrence, gf, ode, coincide],
            counterexamples: Vec::new(),
        })
    }

    /// For every `n ≤ n_max`: a permutation contains `r₂′` and avoids `s₂′`
    /// exactly when it is `21 ⊕ τ` with `τ` avoiding both.
    pub fn check_direct_sum_structure(&self, n_max: usize) -> Result<Check> {
        self.check_bound(n_max)?;
        let r2p = named_pattern(NamedPattern::R2Prime);
        let s2p = named_pattern(NamedPattern::S2Prime);
        let head: Permutation = Permutation::decreasing(2);
        let mut check = Check::new("Co_n(r2') ∩ S_n(s2') = 21 ⊕ S_{n-2}(r2', s2')");
        for n in 0..=n_max {
            let lhs: BTreeSet<Permutation> = Permutation::all(n)
                .filter(|s| r2p.contains_in(s) && s2p.avoided_by(s))
                .collect();
            let rhs: BTreeSet<Permutation> = if n >= 2 {
                self.avoiders(&[r2p.clone(), s2p.clone()], n - 2)?
                    .iter()
                    .map(|tau| head.direct_sum(tau))
                    .collect()
            } else {
                BTreeSet::new()
            };
            let diff: Vec<&Permutation> = lhs.symmetric_difference(&rhs).collect();
            check.record(diff.is_empty(), || {
                format!(
                    "n = {n}: {} permutations differ, first {}",
                    diff.len(),
                    diff[0]
                )
            });
        }
        Ok(check)
    }
}

fn render_counterexample(c: &Theorem1Counterexample) -> String {
    format!(
        "pi = {}, q = {}, sigma = {}: {} adjacent q-cycles but occ(r_q) = {}, occ(s_q) = {}",
        c.pi, c.q, c.sigma, c.adjacent_cycles, c.r_occurrences, c.s_occurrences
    )
}

impl std::fmt::Display for Theorem1Counterexample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render_counterexample(self))
    }
}

pub fn census(n: usize) -> Result<CensusTable> {
    BruteForce::default().census(n)
}

pub fn avoider_series(t: &MeshPattern, order: usize) -> Result<CoefficientSeries> {
    BruteForce::default().avoider_series(t, order)
}

pub fn verify_theorem1(n_max: usize) -> Result<VerificationReport> {
    BruteForce::default().verify_theorem1(n_max)
}

pub fn verify_conjecture(n_max: usize, series_terms: usize) -> Result<VerificationReport> {
    BruteForce::default().verify_conjecture(n_max, series_terms)
}

/// Coefficients `a_2(n,0)` of `A(x)` through `x^order`.
///
/// Matching `x^n` in `x²(1+x²)A′ − (1+x²)(1−x−x²)A + 1 − x² = 0`, where
/// `(1+x²)(1−x−x²) = 1 − x − x³ − x⁴`, gives
/// `a_n = n·a_{n−1} + (n−2)·a_{n−3} + a_{n−4} + [n=0] − [n=2]`.
pub fn a2_series(order: usize) -> CoefficientSeries {
    let mut a: Vec<BigInt> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let back =
            |d: usize| -> BigInt { n.checked_sub(d).map_or_else(BigInt::zero, |i| a[i].clone()) };
        let mut an = back(1) * BigInt::from(n) + back(4);
        if n >= 3 {
            an += back(3) * BigInt::from(n - 2);
        }
        match n {
            0 => an += 1,
            2 => an -= 1,
            _ => {}
        }
        a.push(an);
    }
    CoefficientSeries::from_coeffs(a, order)
}

/// `F(x) = Σ_{m≥0} m!·(x/(1+x²))^m` through `x^order`, using
/// `[x^n](x/(1+x²))^m = (−1)^k C(m+k−1, k)` when `n = m + 2k`.
pub fn f_series(order: usize) -> CoefficientSeries {
    let coeffs = (0..=order).map(|n| {
        let mut total = BigInt::zero();
        for k in 0..=n / 2 {
            let m = n - 2 * k;
            // m = 0 contributes only to n = 0.
            let c = match (m, k) {
                (_, 0) => BigInt::one(),
                (0, _) => BigInt::zero(),
                _ => binomial(m + k - 1, k),
            };
            let term = factorial(m) * c;
            if k.is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    });
    CoefficientSeries::from_coeffs(coeffs.collect::<Vec<_>>(), order)
}

fn one_plus_x_squared(order: usize) -> CoefficientSeries {
    CoefficientSeries::from_coeffs([1, 0, 1], order)
}

/// `x²(1+x²)A′ − (1+x²)(1−x−x²)A + 1 − x²` through the order of `a`.
pub fn ode_residual(a: &CoefficientSeries) -> CoefficientSeries {
    let order = a.order();
    // Degree n of x²·A′ only needs A′ through degree n − 2, so padding A′
    // back up to `order` loses nothing.
    let da = CoefficientSeries::from_coeffs(a.derivative().coeffs().to_vec(), order);
    let x2_plus_x4 = CoefficientSeries::from_coeffs([0, 0, 1, 0, 1], order);
    let poly = &CoefficientSeries::from_coeffs([1, 0, 1], order)
        * &CoefficientSeries::from_coeffs([1, -1, -1], order);
    let constant = CoefficientSeries::from_coeffs([1, 0, -1], order);
    &(&(&x2_plus_x4 * &da) - &(&poly * a)) + &constant
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(21).to_string(), "51090942171709440000");
    }

    #[test]
    fn formula_examples() {
        assert_eq!(a_formula(2, 3, 0).unwrap(), BigInt::from(4));
        assert_eq!(a_formula(1, 3, 0).unwrap(), BigInt::from(2));
        assert_eq!(a_formula(5, 4, 0).unwrap(), BigInt::from(24));
        assert_eq!(a_formula(2, 3, 5).unwrap(), BigInt::zero());
        assert_eq!(a_formula(0, 3, 0), Err(Error::ZeroCycleLength));
    }

    #[test]
    fn census_examples() {
        let c3 = census(3).unwrap();
        assert_eq!(c3.get(2, 0), 4);
        assert_eq!(c3.get(1, 3), 1);
        assert_eq!(c3.get(7, 0), 6);
        let c0 = census(0).unwrap();
        assert_eq!(c0.get(1, 0), 1);
        assert_eq!(c0.get(4, 0), 1);
        assert_eq!(c0.rows().len(), 1);
        assert_eq!(
            BruteForce::with_bound(4).census(5),
            Err(Error::BoundExceeded { n: 5, bound: 4 })
        );
    }

    #[test]
    fn census_totals_match_direct_sums() {
        for n in 0..=7 {
            let table = census(n).unwrap();
            for q in 1..=n {
                let direct: u64 = Permutation::all(n)
                    .map(|p| p.adjacent_q_cycle_count(q).unwrap() as u64)
                    .sum();
                assert_eq!(table.total_cycles(q), direct);
                let row_sum: u64 = (0..=n / q).map(|k| table.get(q, k)).sum();
                assert_eq!(row_sum, (1..=n as u64).product::<u64>());
            }
        }
    }

    #[test]
    fn a2_first_terms() {
        let a = a2_series(4);
        assert_eq!(a.coeffs(), ints(&[1, 1, 1, 4, 19]).as_slice());
        assert_eq!(a2_series(0).coeffs(), ints(&[1]).as_slice());
    }

    #[test]
    fn f_first_terms() {
        assert_eq!(f_series(4).coeffs(), ints(&[1, 1, 2, 5, 20]).as_slice());
        assert_eq!(f_series(0).coeffs(), ints(&[1]).as_slice());
    }

    #[test]
    fn residual_vanishes_and_detects_perturbation() {
        let a = a2_series(30);
        assert!(ode_residual(&a).is_zero());
        let mut bumped = a.coeffs().to_vec();
        bumped[7] += 1;
        let residual = ode_residual(&CoefficientSeries::from_coeffs(bumped, 30));
        assert!(!residual.is_zero());
        assert!(residual.coeffs()[..7].iter().all(Zero::is_zero));
    }

    #[test]
    fn avoider_series_of_p_small() {
        let p = named_pattern(NamedPattern::P);
        let s = avoider_series(&p, 4).unwrap();
        assert_eq!(s.coeffs(), ints(&[1, 1, 2, 5, 20]).as_slice());
        assert!(BruteForce::with_bound(3).avoider_series(&p, 4).is_err());
    }

    #[test]
    fn theorem1_small() {
        let r = verify_theorem1(5).unwrap();
        assert!(r.passed());
        assert_eq!(r.permutations_scanned, 154);
        assert!(r.counterexamples.is_empty());
        let r0 = verify_theorem1(0).unwrap();
        assert!(r0.passed());
        assert_eq!(r0.permutations_scanned, 1);
        assert!(BruteForce::with_bound(3).verify_theorem1(4).is_err());
    }

    #[test]
    fn conjecture_small() {
        assert!(verify_conjecture(2, 10).unwrap().passed());
        let r = verify_conjecture(0, 0).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks.len(), 5);
        assert_eq!(r.checks[1].cases, 0);
    }

    #[test]
    fn direct_sum_structure_small() {
        assert!(BruteForce::default()
            .check_direct_sum_structure(6)
            .unwrap()
            .passed());
    }
}
