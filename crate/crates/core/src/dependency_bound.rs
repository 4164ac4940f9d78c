//! The Janson–Suen bound `Pr[Σ I_i = 0] ≤ exp(−μ + Δ e^{2δ})` for the
//! translate family of a 4-set under the random covering pattern.
//!
//! `I_i` indicates that `A + i` (for `i ∈ {0, …, K−1}`) is fully defined and
//! balanced. Entries of the pattern are independent, so `i ∼ j` iff `i ≠ j`
//! and the translates intersect is a valid dependency graph.

use std::thread;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rng::substream;
use crate::upper_bound::{sample_window, CoveringPatternSpec, FourSet, MIN_K};
use crate::pattern::Symbol;

#[derive(Debug, Clone, PartialEq)]
pub struct TranslateFamily {
    k: usize,
    elems: [usize; 4],
    rho: f64,
    /// Nonzero differences `a − b` over `A`, as signed offsets.
    overlaps: Vec<isize>,
}

impl TranslateFamily {
    /// The family used by the covering-pattern construction: `A` inside the
    /// window `{0, …, K−1}` and `ρ = (ln K / K)^{1/4}`.
    pub fn new(k: usize, a: &FourSet) -> Result<Self> {
        let spec = CoveringPatternSpec::new(k)?;
        let a = FourSet::in_window(a.elements(), k)?;
        Ok(Self::with_elements(k, a.elements(), spec.rho))
    }

    /// Any four distinct offsets and per-value probability; no window check.
    pub fn with_elements(k: usize, elems: [usize; 4], rho: f64) -> Self {
        let mut overlaps: Vec<isize> = Vec::new();
        for &x in &elems {
            for &y in &elems {
                if x != y {
                    overlaps.push(x as isize - y as isize);
                }
            }
        }
        overlaps.sort_unstable();
        overlaps.dedup();
        TranslateFamily { k, elems, rho, overlaps }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn elements(&self) -> [usize; 4] {
        self.elems
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// `(A + i) ∩ (A + j) ≠ ∅` and `i ≠ j`.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.overlaps.binary_search(&(j as isize - i as isize)).is_ok()
    }

    /// Neighbours of `i` in ascending order.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.overlaps.iter().filter_map(move |&d| {
            let j = i as isize + d;
            (j >= 0 && (j as usize) < self.k).then_some(j as usize)
        })
    }

    /// `E[I_i] = 6ρ⁴`: one of the `C(4,2)` balanced colorings, each with
    /// probability `ρ⁴`.
    pub fn q(&self) -> f64 {
        6.0 * self.rho.powi(4)
    }

    fn translate(&self, i: usize) -> [usize; 4] {
        self.elems.map(|a| a + i)
    }
}

/// `(m, |U|)`: the number of 0/1 assignments of `U = (A+i) ∪ (A+j)` that
/// balance both translates, by enumeration over all `2^|U|` assignments.
pub fn joint_colorings(fam: &TranslateFamily, i: usize, j: usize) -> (u32, usize) {
    let (ti, tj) = (fam.translate(i), fam.translate(j));
    let mut union: Vec<usize> = ti.iter().chain(&tj).copied().collect();
    union.sort_unstable();
    union.dedup();
    let pos = |e: usize| union.binary_search(&e).expect("member of union");
    let (mi, mj) = (ti.map(pos), tj.map(pos));
    let m = (0u32..1 << union.len())
        .filter(|&bits| {
            let ones = |idx: &[usize; 4]| idx.iter().filter(|&&b| bits >> b & 1 == 1).count();
            ones(&mi) == 2 && ones(&mj) == 2
        })
        .count() as u32;
    (m, union.len())
}

/// Exact `E[I_i I_j] = m · ρ^{|U|}` for adjacent `i, j`.
pub fn pairwise_joint_expectation(fam: &TranslateFamily, i: usize, j: usize) -> Result<f64> {
    if !fam.adjacent(i, j) {
        return Err(Error::invalid(format!("indices {i} and {j} are not adjacent")));
    }
    let (m, u) = joint_colorings(fam, i, j);
    Ok(m as f64 * fam.rho.powi(u as i32))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JansonStats {
    pub k: usize,
    pub a: [usize; 4],
    pub rho: f64,
    pub q: f64,
    pub mu: f64,
    /// `δ = max_i Σ_{j∼i} q_j`
    pub delta_max: f64,
    /// `Δ = Σ_{{i,j}: i∼j} E[I_i I_j]`
    pub big_delta: f64,
    /// `−μ + Δ e^{2δ}`
    pub log_bound: f64,
    pub bound: f64,
}

pub fn janson_stats(k: usize, a: &FourSet) -> Result<JansonStats> {
    Ok(family_stats(&TranslateFamily::new(k, a)?))
}

pub fn family_stats(fam: &TranslateFamily) -> JansonStats {
    let q = fam.q();
    let mu = fam.k as f64 * q;
    let delta_max = (0..fam.k).map(|i| fam.neighbors(i).count() as f64 * q).fold(0.0, f64::max);
    let big_delta: f64 = (0..fam.k)
        .flat_map(|i| fam.neighbors(i).filter(move |&j| j > i).map(move |j| (i, j)))
        .map(|(i, j)| pairwise_joint_expectation(fam, i, j).expect("neighbors are adjacent"))
        .sum();
    let log_bound = -mu + big_delta * (2.0 * delta_max).exp();
    JansonStats {
        k: fam.k,
        a: fam.elems,
        rho: fam.rho,
        q,
        mu,
        delta_max,
        big_delta,
        log_bound,
        bound: log_bound.exp(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub trials: u64,
    pub zero_trials: u64,
    pub estimate: f64,
    pub standard_error: f64,
    pub bound: f64,
    pub verdict: bool,
    pub seed: u64,
    pub workers: usize,
}

/// Fraction of sampled window patterns in which no translate `A + i` is
/// balanced. Trials are split into contiguous runs over `workers`, worker
/// `w` drawing from sub-stream `w`; the result is a function of
/// `(seed, trials, workers)` alone.
pub fn monte_carlo_zero_probability(
    k: usize,
    a: &FourSet,
    trials: u64,
    seed: u64,
    workers: usize,
) -> Result<MonteCarloEstimate> {
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    if k < MIN_K {
        return Err(Error::invalid(format!("k below minimum {MIN_K} (got {k})")));
    }
    let spec = CoveringPatternSpec::new(k)?;
    let stats = janson_stats(k, a)?;
    let elems = a.elements();
    let workers = workers.clamp(1, 64);
    let per = trials.div_ceil(workers as u64);
    let zero_trials: u64 = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers as u64)
            .map(|w| {
                let spec = &spec;
                let count = per.min(trials.saturating_sub(w * per));
                scope.spawn(move || {
                    let mut rng = substream(seed, w);
                    (0..count)
                        .filter(|_| {
                            let window = sample_window(spec, &mut rng);
                            !(0..k).any(|i| balanced(&window, &elems, i))
                        })
                        .count() as u64
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("monte carlo worker panicked")).sum()
    });
    let estimate = zero_trials as f64 / trials as f64;
    let standard_error = (estimate * (1.0 - estimate) / trials as f64).sqrt();
    Ok(MonteCarloEstimate {
        trials,
        zero_trials,
        estimate,
        standard_error,
        bound: stats.bound,
        verdict: estimate <= stats.bound + 3.0 * standard_error,
        seed,
        workers,
    })
}

fn balanced(window: &[Symbol], a: &[usize; 4], i: usize) -> bool {
    let mut zeros = 0;
    for &e in a {
        match window[e + i] {
            Symbol::Star => return false,
            Symbol::Zero => zeros += 1,
            Symbol::One => {}
        }
    }
    zeros == 2
}

/// Flat serialized form combining [`JansonStats`] and a Monte Carlo run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JansonRecord {
    pub k: usize,
    pub a: String,
    pub mu: f64,
    pub delta: f64,
    pub big_delta: f64,
    pub log_bound: f64,
    pub bound: f64,
    pub estimate: f64,
    pub stderr: f64,
    pub trials: u64,
    pub seed: u64,
    pub verdict: bool,
}

impl JansonRecord {
    pub fn new(stats: &JansonStats, mc: &MonteCarloEstimate) -> Self {
        let [a1, a2, a3, a4] = stats.a;
        JansonRecord {
            k: stats.k,
            a: format!("{a1},{a2},{a3},{a4}"),
            mu: stats.mu,
            delta: stats.delta_max,
            big_delta: stats.big_delta,
            log_bound: stats.log_bound,
            bound: stats.bound,
            estimate: mc.estimate,
            stderr: mc.standard_error,
            trials: mc.trials,
            seed: mc.seed,
            verdict: mc.verdict,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a0123() -> FourSet {
        FourSet::new([0, 1, 2, 3]).unwrap()
    }

    #[test]
    fn mu_is_six_ln_k() {
        let s = janson_stats(128, &a0123()).unwrap();
        assert!((s.mu - 6.0 * 128f64.ln()).abs() / s.mu < 1e-12);
        assert!((s.mu - 29.112).abs() < 1e-3);
    }

    #[test]
    fn consecutive_set_has_six_neighbours() {
        let fam = TranslateFamily::new(128, &a0123()).unwrap();
        assert_eq!(fam.neighbors(50).collect::<Vec<_>>(), vec![47, 48, 49, 51, 52, 53]);
        assert_eq!(fam.neighbors(0).count(), 3);
        let s = family_stats(&fam);
        let expected = 36.0 * 128f64.ln() / 128.0;
        assert!((s.delta_max - expected).abs() < 1e-12);
    }

    #[test]
    fn edgeless_family() {
        let k = 100;
        let fam = TranslateFamily::with_elements(k, [0, k, 2 * k, 3 * k], 0.3);
        assert!((0..k).all(|i| fam.neighbors(i).next().is_none()));
        let s = family_stats(&fam);
        assert_eq!(s.big_delta, 0.0);
        assert_eq!(s.delta_max, 0.0);
        assert!((s.bound - (-s.mu).exp()).abs() < 1e-300);
    }

    #[test]
    fn joint_expectation_examples() {
        let fam = TranslateFamily::new(128, &a0123()).unwrap();
        // union {i, …, i+6}; the shared position i+3 must carry one of the two
        // values of each side: 2 · 3 · 3 assignments
        assert_eq!(joint_colorings(&fam, 10, 13), (18, 7));
        // shift by one: x_4 must equal x_0, then 3 ways for the middle three
        assert_eq!(joint_colorings(&fam, 10, 11), (6, 5));
        assert!(pairwise_joint_expectation(&fam, 10, 10).is_err());
        assert!(pairwise_joint_expectation(&fam, 10, 20).is_err());
        let rho5 = fam.rho().powi(5);
        for i in 0..fam.k() {
            for j in fam.neighbors(i) {
                let (m, u) = joint_colorings(&fam, i, j);
                assert!(m <= 18 && u >= 5);
                assert!(pairwise_joint_expectation(&fam, i, j).unwrap() <= 18.0 * rho5);
            }
        }
    }

    #[test]
    fn trials_zero_rejected() {
        assert!(matches!(monte_carlo_zero_probability(128, &a0123(), 0, 1, 1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn seeded_estimate_is_reproducible() {
        let a = monte_carlo_zero_probability(68, &a0123(), 2000, 17, 1).unwrap();
        let b = monte_carlo_zero_probability(68, &a0123(), 2000, 17, 1).unwrap();
        assert_eq!(a, b);
        let c = monte_carlo_zero_probability(68, &a0123(), 2000, 17, 3).unwrap();
        assert_eq!(c.trials, 2000);
    }
}
