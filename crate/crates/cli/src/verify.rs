//! Oracle-equivalence and structural checks over exhaustive and seeded
//! random grids.

use clap::ValueEnum;
use mtbs::rng::substream;
use mtbs::sensitivity::{bs_at, global_measures};
use mtbs::upper_bound::{full_coverage_check, witness_to_shift_set, CoverageAlgorithm, DEFAULT_SHIFT_SET_CAP};
use mtbs::{BitString, BsMode, Limits, MintermFunction, Pattern, Result};
use rand::Rng;
use serde::Serialize;

use crate::workloads::{all_patterns, random_pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub cases: u64,
    pub failures: u64,
    pub passed: bool,
    pub first_failure: Option<String>,
}

#[derive(Debug)]
struct Tally {
    check: String,
    cases: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn new(check: impl Into<String>) -> Self {
        Tally { check: check.into(), cases: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: Result<bool>, context: impl FnOnce() -> String) {
        self.cases += 1;
        let problem = match ok {
            Ok(true) => return,
            Ok(false) => context(),
            Err(e) => format!("{}: {e}", context()),
        };
        self.failures += 1;
        self.first_failure.get_or_insert(problem);
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            passed: self.failures == 0,
            check: self.check,
            cases: self.cases,
            failures: self.failures,
            first_failure: self.first_failure,
        }
    }
}

fn inputs(n: usize) -> impl Iterator<Item = BitString> {
    (0..1u64 << n).map(move |m| BitString::from_mask(m, n).expect("small n"))
}

/// Structured and brute-force `bs(f; x)` agree exactly, witness included,
/// at every 0-input of every pattern of each length.
pub fn zero_input_oracle(ns: &[usize]) -> CheckResult {
    let lim = Limits::default();
    let mut t = Tally::new(format!("zero-input oracle n={ns:?}"));
    for &n in ns {
        for p in all_patterns(n) {
            let f = MintermFunction::cyclic(p.clone()).expect("valid pattern");
            for x in inputs(n).filter(|x| !f.eval_bits(x.bits())) {
                let ok = bs_at(&f, &x, BsMode::StructuredZero, &lim)
                    .and_then(|a| Ok(a == bs_at(&f, &x, BsMode::BruteForce, &lim)?));
                t.record(ok, || format!("p={p} x={x}"));
            }
        }
    }
    t.finish()
}

/// `bs(f; x) ≤ |dom(p)|` at every 1-input.
pub fn one_input_domain_bound(ns: &[usize]) -> CheckResult {
    let lim = Limits::default();
    let mut t = Tally::new(format!("one-input domain bound n={ns:?}"));
    for &n in ns {
        for p in all_patterns(n) {
            let f = MintermFunction::cyclic(p.clone()).expect("valid pattern");
            let dom = p.domain().len();
            for x in inputs(n).filter(|x| f.eval_bits(x.bits())) {
                let ok = bs_at(&f, &x, BsMode::BruteForce, &lim).map(|w| w.count() <= dom);
                t.record(ok, || format!("p={p} x={x}"));
            }
        }
    }
    t.finish()
}

/// Every brute-force witness at a 0-input yields a shift set with no
/// 4-subset that has a balanced cyclic copy.
pub fn shift_sets(ns: &[usize], per_n: usize, seed: u64) -> CheckResult {
    let lim = Limits::default();
    let mut t = Tally::new(format!("shift sets n={ns:?} patterns={per_n}"));
    for (stream, &n) in ns.iter().enumerate() {
        let mut rng = substream(seed, stream as u64);
        for _ in 0..per_n {
            let p = random_pattern(n, &mut rng).expect("n >= 1");
            let f = MintermFunction::cyclic(p.clone()).expect("valid pattern");
            for x in inputs(n).filter(|x| !f.eval_bits(x.bits())) {
                let ok = bs_at(&f, &x, BsMode::BruteForce, &lim)
                    .and_then(|w| witness_to_shift_set(&f, &x, w.blocks(), DEFAULT_SHIFT_SET_CAP))
                    .map(|_| true);
                t.record(ok, || format!("p={p} x={x}"));
            }
        }
    }
    t.finish()
}

/// `s = bs = N` for the OR function `1*…*`.
pub fn or_functions(ns: impl IntoIterator<Item = usize>, jobs: usize) -> CheckResult {
    let mut t = Tally::new("or function s = bs = n");
    for n in ns {
        let p: Pattern = format!("1{}", "*".repeat(n - 1)).parse().expect("valid text");
        let f = MintermFunction::cyclic(p).expect("valid pattern");
        let ok = global_measures(&f, &Limits::default(), jobs).map(|r| r.s == n && r.bs == n);
        t.record(ok, || format!("n={n}"));
    }
    t.finish()
}

/// Naive and indexed coverage checks return the same verdict and the same
/// least uncovered 4-set.
pub fn coverage_checkers(instances: usize, seed: u64) -> CheckResult {
    let mut t = Tally::new(format!("coverage checkers instances={instances}"));
    let mut rng = substream(seed, 1 << 20);
    for _ in 0..instances {
        let k = rng.gen_range(4..=12);
        let len = rng.gen_range(k..=3 * k);
        let p = random_pattern(len, &mut rng).expect("len >= 4");
        let ok = full_coverage_check(&p, k, CoverageAlgorithm::Naive)
            .and_then(|a| Ok(a == full_coverage_check(&p, k, CoverageAlgorithm::Indexed)?));
        t.record(ok, || format!("k={k} p={p}"));
    }
    t.finish()
}

pub fn suite(level: Level, seed: u64, jobs: usize) -> Vec<CheckResult> {
    match level {
        Level::Quick => vec![
            zero_input_oracle(&[4, 5]),
            one_input_domain_bound(&[4, 5]),
            shift_sets(&[8, 10], 10, seed),
            or_functions(4..=10, jobs),
            coverage_checkers(100, seed),
        ],
        Level::Full => vec![
            zero_input_oracle(&[4, 5, 6]),
            one_input_domain_bound(&[4, 5, 6]),
            shift_sets(&[10, 12], 100, seed),
            or_functions(4..=14, jobs),
            coverage_checkers(1000, seed),
        ],
    }
}
