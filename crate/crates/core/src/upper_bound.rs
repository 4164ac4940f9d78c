//! Low-block-sensitivity minterm-cyclic functions.
//!
//! A random pattern on the window `{0, …, 2K−2}` takes each value `b ∈ {0,1}`
//! with probability `ρ = (ln K / K)^{1/4}` per position. It is accepted once
//! its domain is small and every 4-set inside `{0, …, K−1}` has a
//! *balanced* translate (two 0s and two 1s) within the pattern's domain.
//! With `K = ⌈N^{4/7} / ln^{1/7} N⌉` the function `f^{𝒯,p}` has
//! `bs_1 ≤ |dom(p)|`, and any `4N/K` shift indices contain a 4-set that
//! falls inside one length-`K` window, which bounds `bs_0`.
//!
//! Window coverage ignores wraparound: a 4-set is covered by an integer
//! offset `u` with `A + u` inside `[0, len)`. That makes coverage invariant
//! under translating `A`, which the indexed checker relies on.

use std::fmt;

use rand::Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, FailureStats, Result};
use crate::functions::MintermFunction;
use crate::pattern::{BitString, Block, Pattern, Symbol};
use crate::rng::substream;
use crate::sensitivity::BlockSensitivityWitness;

/// Smallest `K` with `2(ln K / K)^{1/4} ≤ 1`.
pub const MIN_K: usize = 68;
pub const DEFAULT_DOMAIN_CONSTANT: f64 = 4.5;
pub const DEFAULT_INDEXED_CAP: u64 = 4_000_000_000;
pub const DEFAULT_SHIFT_SET_CAP: usize = 48;

/// `(ln K / K)^{1/4}`.
pub fn per_value_probability(k: usize) -> f64 {
    let k = k as f64;
    (k.ln() / k).powf(0.25)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoveringPatternSpec {
    pub k: usize,
    pub rho: f64,
    pub domain_constant: f64,
}

impl CoveringPatternSpec {
    pub fn new(k: usize) -> Result<Self> {
        Self::with_domain_constant(k, DEFAULT_DOMAIN_CONSTANT)
    }

    pub fn with_domain_constant(k: usize, domain_constant: f64) -> Result<Self> {
        let rho = per_value_probability(k);
        if k < MIN_K || 2.0 * rho > 1.0 {
            return Err(Error::invalid(format!("k below minimum {MIN_K} (got {k})")));
        }
        if domain_constant.is_nan() || domain_constant <= 0.0 {
            return Err(Error::invalid("domain constant must be positive"));
        }
        Ok(CoveringPatternSpec { k, rho, domain_constant })
    }

    pub fn window_len(&self) -> usize {
        2 * self.k - 1
    }

    /// `c · K^{3/4} (ln K)^{1/4}`.
    pub fn domain_bound(&self) -> f64 {
        let k = self.k as f64;
        self.domain_constant * k.powf(0.75) * k.ln().powf(0.25)
    }

    /// `(2K−1) · 2ρ`.
    pub fn expected_domain_size(&self) -> f64 {
        self.window_len() as f64 * 2.0 * self.rho
    }
}

/// Four distinct indices, ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FourSet([usize; 4]);

impl FourSet {
    pub fn new(mut elems: [usize; 4]) -> Result<Self> {
        elems.sort_unstable();
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("4-set needs distinct elements: {elems:?}")));
        }
        Ok(FourSet(elems))
    }

    /// A 4-set that must lie inside `{0, …, k−1}`.
    pub fn in_window(elems: [usize; 4], k: usize) -> Result<Self> {
        let a = Self::new(elems)?;
        if a.0[3] >= k {
            return Err(Error::invalid(format!("4-set {a} not inside 0..{k}")));
        }
        Ok(a)
    }

    pub fn elements(&self) -> [usize; 4] {
        self.0
    }

    pub fn span(&self) -> usize {
        self.0[3] - self.0[0]
    }

    pub fn to_block(&self) -> Block {
        Block::new(self.0)
    }
}

impl fmt::Display for FourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl std::str::FromStr for FourSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let b: Block = s.parse()?;
        let v = b.indices();
        if v.len() != 4 {
            return Err(Error::invalid(format!("4-set needs exactly 4 indices, got {}", v.len())));
        }
        FourSet::new([v[0], v[1], v[2], v[3]])
    }
}

impl Serialize for FourSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub(crate) fn sample_window(spec: &CoveringPatternSpec, rng: &mut impl Rng) -> Vec<Symbol> {
    (0..spec.window_len())
        .map(|_| {
            let u: f64 = rng.gen();
            if u < spec.rho {
                Symbol::Zero
            } else if u < 2.0 * spec.rho {
                Symbol::One
            } else {
                Symbol::Star
            }
        })
        .collect()
}

/// Random pattern of length `n ≥ 2K−1`, entries outside the window `*`.
pub fn sample_pattern(spec: &CoveringPatternSpec, n: usize, seed: u64) -> Result<Pattern> {
    sample_attempt(spec, seed, 0)?.embed(n)
}

fn sample_attempt(spec: &CoveringPatternSpec, seed: u64, attempt: u64) -> Result<Pattern> {
    Pattern::new(sample_window(spec, &mut substream(seed, attempt)))
}

#[inline]
fn balanced_at(sym: &[Symbol], a: &[usize; 4], u: usize) -> bool {
    let mut zeros = 0;
    for &e in a {
        match sym[e + u] {
            Symbol::Star => return false,
            Symbol::Zero => zeros += 1,
            Symbol::One => {}
        }
    }
    zeros == 2
}

/// Smallest integer offset `u` with `A + u ⊆ dom(p)` and exactly two zeros
/// on `A + u`, with no wraparound.
pub fn has_balanced_copy(p: &Pattern, a: &FourSet) -> Option<isize> {
    let sym = p.symbols();
    let [a1, .., a4] = a.0;
    if a4 - a1 >= sym.len() {
        return None;
    }
    let base = [0, a.0[1] - a1, a.0[2] - a1, a4 - a1];
    (0..sym.len() - (a4 - a1)).find(|&s| balanced_at(sym, &base, s)).map(|s| s as isize - a1 as isize)
}

/// Cyclic variant over `Z_N`: smallest `j` such that `t_j(p)` is defined on
/// all of `A` and equals 0 on exactly two of its elements.
pub fn has_balanced_cyclic_copy(p: &Pattern, a: &FourSet) -> Option<usize> {
    let n = p.len();
    if a.0[3] >= n {
        return None;
    }
    (0..n).find(|&j| {
        let mut zeros = 0;
        for &e in &a.0 {
            // t_j(p)_e = p_{e − j}
            match p.get((e + n - j) % n) {
                Symbol::Star => return false,
                Symbol::Zero => zeros += 1,
                Symbol::One => {}
            }
        }
        zeros == 2
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverageAlgorithm {
    Naive,
    Indexed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    Complete,
    /// The lexicographically least uncovered 4-set.
    Uncovered(FourSet),
}

impl Coverage {
    pub fn is_complete(&self) -> bool {
        matches!(self, Coverage::Complete)
    }
}

/// Does every 4-set of `{0, …, K−1}` have a balanced copy in `p`?
pub fn full_coverage_check(p: &Pattern, k: usize, algorithm: CoverageAlgorithm) -> Result<Coverage> {
    full_coverage_check_with_cap(p, k, algorithm, DEFAULT_INDEXED_CAP)
}

/// As [`full_coverage_check`], failing with a resource-limit error when the
/// indexed enumeration would visit more than `cap` 4-subsets of `dom(p)`.
pub fn full_coverage_check_with_cap(p: &Pattern, k: usize, algorithm: CoverageAlgorithm, cap: u64) -> Result<Coverage> {
    match algorithm {
        CoverageAlgorithm::Naive => Ok(naive_coverage(p, k)),
        CoverageAlgorithm::Indexed => indexed_coverage(p, k, cap),
    }
}

fn naive_coverage(p: &Pattern, k: usize) -> Coverage {
    for a1 in 0..k {
        for a2 in a1 + 1..k {
            for a3 in a2 + 1..k {
                for a4 in a3 + 1..k {
                    let a = FourSet([a1, a2, a3, a4]);
                    if has_balanced_copy(p, &a).is_none() {
                        return Coverage::Uncovered(a);
                    }
                }
            }
        }
    }
    Coverage::Complete
}

/// Records the difference triple of every balanced 4-subset of `dom(p)` with
/// span below `K`, then looks for the least unrecorded triple. Every
/// uncovered 4-set translates to an uncovered one starting at 0, so the
/// least uncovered 4-set overall has the form `{0, t1, t2, t3}`.
fn indexed_coverage(p: &Pattern, k: usize, cap: u64) -> Result<Coverage> {
    if k < 4 {
        return Ok(Coverage::Complete);
    }
    let dom: Vec<(usize, bool)> = p.defined().collect();
    let mut work: u64 = 0;
    for (i, &(d1, _)) in dom.iter().enumerate() {
        let m = dom[i + 1..].iter().take_while(|(d, _)| d - d1 < k).count() as u64;
        work += m * m.saturating_sub(1) * m.saturating_sub(2) / 6;
    }
    if work > cap {
        return Err(Error::limit(format!("indexed coverage would visit {work} 4-subsets (cap {cap})")));
    }

    let idx = |t1: usize, t2: usize, t3: usize| (t1 * k + t2) * k + t3;
    let mut seen = vec![0u64; (k * k * k).div_ceil(64)];
    for i1 in 0..dom.len() {
        let (d1, v1) = dom[i1];
        let z1 = !v1 as u8;
        let end = i1 + 1 + dom[i1 + 1..].iter().take_while(|(d, _)| d - d1 < k).count();
        for i2 in i1 + 1..end {
            let (d2, v2) = dom[i2];
            let z2 = z1 + !v2 as u8;
            for i3 in i2 + 1..end {
                let (d3, v3) = dom[i3];
                let z3 = z2 + !v3 as u8;
                if z3 == 0 || z3 == 3 {
                    continue;
                }
                // need exactly one more zero iff z3 == 1
                let want_zero = z3 == 1;
                for &(d4, v4) in &dom[i3 + 1..end] {
                    if v4 != want_zero {
                        let b = idx(d2 - d1, d3 - d1, d4 - d1);
                        seen[b / 64] |= 1 << (b % 64);
                    }
                }
            }
        }
    }
    for t1 in 1..k {
        for t2 in t1 + 1..k {
            for t3 in t2 + 1..k {
                let b = idx(t1, t2, t3);
                if seen[b / 64] >> (b % 64) & 1 == 0 {
                    return Ok(Coverage::Uncovered(FourSet([0, t1, t2, t3])));
                }
            }
        }
    }
    Ok(Coverage::Complete)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatternConstructionReport {
    pub pattern: Pattern,
    pub k: usize,
    pub rho: f64,
    pub attempts: usize,
    pub dom_size: usize,
    pub bound: f64,
    pub coverage_verified: bool,
    pub failing_4set: Option<FourSet>,
    pub seed: u64,
}

/// Flat serialized form of a [`PatternConstructionReport`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatternConstructionRecord {
    pub k: usize,
    pub rho: f64,
    pub attempts: usize,
    pub dom_size: usize,
    pub bound: f64,
    pub coverage_verified: bool,
    pub seed: u64,
    pub pattern: String,
}

impl PatternConstructionReport {
    pub fn to_record(&self) -> PatternConstructionRecord {
        PatternConstructionRecord {
            k: self.k,
            rho: self.rho,
            attempts: self.attempts,
            dom_size: self.dom_size,
            bound: self.bound,
            coverage_verified: self.coverage_verified,
            seed: self.seed,
            pattern: self.pattern.to_string(),
        }
    }
}

/// Rejection sampling on attempt sub-streams `0, 1, …`; the first attempt
/// meeting the domain bound and full coverage wins.
pub fn construct_covering_pattern(
    spec: &CoveringPatternSpec,
    seed: u64,
    max_attempts: usize,
) -> Result<PatternConstructionReport> {
    let bound = spec.domain_bound();
    let mut stats = FailureStats::new(format!("covering pattern for k = {}", spec.k));
    for attempt in 0..max_attempts {
        stats.attempts = attempt + 1;
        let pattern = sample_attempt(spec, seed, attempt as u64)?;
        let dom_size = pattern.domain().len();
        if dom_size as f64 > bound {
            stats.reject("domain_too_large");
            continue;
        }
        match full_coverage_check(&pattern, spec.k, CoverageAlgorithm::Indexed)? {
            Coverage::Uncovered(_) => {
                stats.reject("coverage_incomplete");
                continue;
            }
            Coverage::Complete => {
                return Ok(PatternConstructionReport {
                    pattern,
                    k: spec.k,
                    rho: spec.rho,
                    attempts: attempt + 1,
                    dom_size,
                    bound,
                    coverage_verified: true,
                    failing_4set: None,
                    seed,
                })
            }
        }
    }
    Err(Error::ConstructionFailure(stats))
}

/// `⌈N^{4/7} / ln^{1/7} N⌉`.
pub fn k_for_n(n: usize) -> usize {
    let nf = n as f64;
    (nf.powf(4.0 / 7.0) / nf.ln().powf(1.0 / 7.0)).ceil() as usize
}

/// Smallest `N` whose window parameter reaches [`MIN_K`].
pub fn min_n_for_low_bs() -> usize {
    (2..).find(|&n| k_for_n(n) >= MIN_K && n >= 2 * MIN_K - 1).expect("k_for_n is unbounded")
}

#[derive(Debug, Clone)]
pub struct LowBsConstruction {
    pub n: usize,
    pub k: usize,
    pub function: MintermFunction,
    pub report: PatternConstructionReport,
}

impl LowBsConstruction {
    /// `|dom(p)|`, an upper bound on `bs_1`.
    pub fn bs1_bound(&self) -> usize {
        self.function.pattern().domain().len()
    }

    /// `4 N^{3/7} ln^{1/7} N`, above which no set of shift indices avoids
    /// every covered 4-set, bounding `bs_0`.
    pub fn bs0_bound(&self) -> f64 {
        let n = self.n as f64;
        4.0 * n.powf(3.0 / 7.0) * n.ln().powf(1.0 / 7.0)
    }
}

pub fn build_low_bs_function(n: usize, seed: u64, max_attempts: usize) -> Result<LowBsConstruction> {
    let k = k_for_n(n);
    if n < 2 || k < MIN_K {
        return Err(Error::invalid(format!(
            "n = {n} gives k = {k}, below minimum {MIN_K}; need n >= {}",
            min_n_for_low_bs()
        )));
    }
    build_with_k(n, k, seed, max_attempts)
}

/// As [`build_low_bs_function`] with an explicit window parameter.
pub fn build_with_k(n: usize, k: usize, seed: u64, max_attempts: usize) -> Result<LowBsConstruction> {
    let spec = CoveringPatternSpec::new(k)?;
    if n < spec.window_len() {
        return Err(Error::invalid(format!("n = {n} shorter than the window 2k-1 = {}", spec.window_len())));
    }
    let report = construct_covering_pattern(&spec, seed, max_attempts)?;
    let function = MintermFunction::cyclic(report.pattern.embed(n)?)?;
    Ok(LowBsConstruction { n, k, function, report })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WindowFourSet {
    /// Elements of `S` minus `offset`, mod `N`; all below `K`.
    pub set: FourSet,
    pub offset: usize,
}

/// First offset `a` whose cyclic interval `[a, a+K−1]` holds four elements
/// of `S`. When `|S| ≥ 4N/K` the intervals hold `K|S| ≥ 4N` elements in
/// total over the `N` offsets, so one of them holds four.
pub fn dense_interval_4set(s: &Block, k: usize, n: usize) -> Result<WindowFourSet> {
    s.check_range(n)?;
    if k == 0 || k > n {
        return Err(Error::invalid(format!("window length {k} must be in 1..={n}")));
    }
    if (s.len() as f64) < 4.0 * n as f64 / k as f64 {
        return Err(Error::invalid(format!("|S| = {} below 4N/K = {:.3}", s.len(), 4.0 * n as f64 / k as f64)));
    }
    let mut member = vec![false; n];
    s.indices().iter().for_each(|&i| member[i] = true);
    let mut count = (0..k).filter(|&t| member[t]).count();
    for a in 0..n {
        if a > 0 {
            count = count - member[a - 1] as usize + member[(a + k - 1) % n] as usize;
        }
        if count >= 4 {
            let picked: Vec<usize> = (0..k).filter(|&t| member[(a + t) % n]).take(4).collect();
            let set = FourSet::in_window([picked[0], picked[1], picked[2], picked[3]], k)?;
            return Ok(WindowFourSet { set, offset: a });
        }
    }
    Err(Error::logic("averaging guarantees a dense window but none was found"))
}

/// Maps a 0-input witness of a minterm-cyclic function to its shift-index
/// set `S = {−j(k)}` and checks that no 4-subset of `S` has a balanced
/// cyclic copy in `p` (exhaustively when `|S| ≤ cap`).
pub fn witness_to_shift_set(f: &MintermFunction, x: &BitString, blocks: &[Block], cap: usize) -> Result<Block> {
    if !f.is_cyclic() {
        return Err(Error::invalid("shift sets are defined for minterm-cyclic functions"));
    }
    if f.eval(x)? {
        return Err(Error::invalid("witness input must be a 0-input"));
    }
    BlockSensitivityWitness::new(f, x.clone(), blocks.to_vec()).map_err(|e| Error::invalid(e.to_string()))?;
    let n = f.n();
    let mut js = Vec::with_capacity(blocks.len());
    for b in blocks {
        let matches = f.matching_shifts(&x.flip(b)?)?;
        let j = matches
            .first()
            .and_then(|m| m.as_shift())
            .ok_or_else(|| Error::logic("sensitive block produced no matching shift"))?;
        if js.contains(&j) {
            return Err(Error::logic(format!("two disjoint blocks share matching shift t{j}")));
        }
        js.push(j);
    }
    let s = Block::new(js.iter().map(|&j| (n - j) % n));
    if s.len() <= cap {
        let v = s.indices();
        for i1 in 0..v.len() {
            for i2 in i1 + 1..v.len() {
                for i3 in i2 + 1..v.len() {
                    for i4 in i3 + 1..v.len() {
                        let a = FourSet([v[i1], v[i2], v[i3], v[i4]]);
                        if let Some(j) = has_balanced_cyclic_copy(f.pattern(), &a) {
                            return Err(Error::logic(format!("shift set contains {a}, balanced in t{j}(p)")));
                        }
                    }
                }
            }
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn minimum_k() {
        assert!(CoveringPatternSpec::new(4).is_err());
        assert!(CoveringPatternSpec::new(67).is_err());
        let s = CoveringPatternSpec::new(68).unwrap();
        assert!(2.0 * s.rho <= 1.0);
        assert!(2.0 * per_value_probability(67) > 1.0);
    }

    #[test]
    fn balanced_copy_examples() {
        let a = FourSet::new([0, 1, 2, 3]).unwrap();
        assert_eq!(has_balanced_copy(&p("0011").embed(135).unwrap(), &a), Some(0));
        assert_eq!(has_balanced_copy(&p("0001"), &a), None);
        assert_eq!(has_balanced_copy(&p("**0101"), &a), Some(2));
        // offsets may be negative when A starts above 0
        let b = FourSet::new([3, 4, 5, 6]).unwrap();
        assert_eq!(has_balanced_copy(&p("1100***"), &b), Some(-3));
    }

    #[test]
    fn cyclic_copy_wraps() {
        let pat = p("01**10");
        let a = FourSet::new([0, 1, 2, 3]).unwrap();
        // t_j(p)_i = p_{i-j}, so t_2(p) = "1001**"
        assert_eq!(has_balanced_cyclic_copy(&pat, &a), Some(2));
        assert_eq!(has_balanced_copy(&pat, &a), None);
    }

    #[test]
    fn coverage_examples() {
        let stars = Pattern::stars(135).unwrap();
        for alg in [CoverageAlgorithm::Naive, CoverageAlgorithm::Indexed] {
            assert_eq!(
                full_coverage_check(&stars, 68, alg).unwrap(),
                Coverage::Uncovered(FourSet::new([0, 1, 2, 3]).unwrap())
            );
        }
        let q = p("0011").embed(135).unwrap();
        assert!(has_balanced_copy(&q, &FourSet::new([0, 1, 2, 3]).unwrap()).is_some());
        assert!(has_balanced_copy(&q, &FourSet::new([0, 1, 2, 4]).unwrap()).is_none());
        for alg in [CoverageAlgorithm::Naive, CoverageAlgorithm::Indexed] {
            assert_eq!(
                full_coverage_check(&q, 68, alg).unwrap(),
                Coverage::Uncovered(FourSet::new([0, 1, 2, 4]).unwrap())
            );
        }
    }

    #[test]
    fn indexed_cap() {
        let q = p("0011").embed(135).unwrap();
        assert!(matches!(
            full_coverage_check_with_cap(&q, 68, CoverageAlgorithm::Indexed, 0),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn zero_attempts_fail() {
        let spec = CoveringPatternSpec::new(68).unwrap();
        assert!(matches!(construct_covering_pattern(&spec, 1, 0), Err(Error::ConstructionFailure(_))));
    }

    #[test]
    fn k_formula() {
        assert_eq!(k_for_n(4096), 86);
        assert!(k_for_n(1000) < MIN_K);
        let m = min_n_for_low_bs();
        assert!(k_for_n(m) >= MIN_K && k_for_n(m - 1) < MIN_K);
        let err = build_low_bs_function(1000, 0, 10).unwrap_err();
        assert!(err.to_string().contains(&m.to_string()));
    }

    #[test]
    fn sampled_pattern_confined_to_window() {
        let spec = CoveringPatternSpec::new(68).unwrap();
        let q = sample_pattern(&spec, 300, 5).unwrap();
        assert_eq!(q.len(), 300);
        assert!(q.domain().iter().all(|&i| i < spec.window_len()));
        assert_eq!(q, sample_pattern(&spec, 300, 5).unwrap());
    }

    #[test]
    fn dense_interval_examples() {
        let w = dense_interval_4set(&Block::new([0, 1, 2, 3]), 10, 10).unwrap();
        assert_eq!((w.set.elements(), w.offset), ([0, 1, 2, 3], 0));
        // 40 evenly spaced points, K = N/10: every window of 10 holds exactly 4
        let s = Block::new((0..40).map(|i| i * 10 + 7));
        let w = dense_interval_4set(&s, 40, 400).unwrap();
        assert_eq!(w.offset, 0);
        assert_eq!(w.set.elements(), [7, 17, 27, 37]);
        assert!(dense_interval_4set(&Block::new([0, 1, 2]), 10, 10).is_err());
        assert!(dense_interval_4set(&Block::new([0, 1, 2, 3]), 10, 100).is_err());
        // windows at 0, 1, 2 hold three points; the one at 3 wraps to catch 0
        let w = dense_interval_4set(&Block::new([0, 1, 5, 8, 9]), 8, 10).unwrap();
        assert_eq!((w.offset, w.set.elements()), (3, [2, 5, 6, 7]));
    }

    #[test]
    fn shift_set_examples() {
        let f = MintermFunction::cyclic(p("11****")).unwrap();
        let x: BitString = "000000".parse().unwrap();
        let blocks = [Block::new([0, 1]), Block::new([2, 3]), Block::new([4, 5])];
        let s = witness_to_shift_set(&f, &x, &blocks, DEFAULT_SHIFT_SET_CAP).unwrap();
        assert_eq!(s, Block::new([0, 2, 4]));
        let s = witness_to_shift_set(&f, &x, &blocks[..1], DEFAULT_SHIFT_SET_CAP).unwrap();
        assert_eq!(s, Block::new([0]));
        assert!(witness_to_shift_set(&f, &"110000".parse().unwrap(), &[], 8).is_err());
    }
}
