//! Witness extraction for the `Ω(N^{3/7})` lower bound.
//!
//! Pipeline for `f = f^{Γ,p}` with `B = dom(p)`:
//!
//! 1. If `|B| > N^{3/7}`, the majority value of `p` already gives
//!    `⌈|B|/2⌉` sensitive singletons ([`heavy_pattern_witness`]).
//! 2. Otherwise sample `T_0 = ⌈N^{3/7}⌉` uniform group elements, reject the
//!    sample if any index is covered 7+ times ("terrible") or too many are
//!    covered 4+ times ("bad"), then delete every element whose shifted
//!    block touches a bad index ([`select_low_overlap_shifts`]).
//! 3. Fix a majority value `v_i` on every multiply covered index
//!    ([`consensus_values`]) and greedily walk a 0-input towards it while
//!    staying a 0-input ([`greedy_flip_witness`]). At the halt either the
//!    stubborn indices are sensitive singletons, or the disagreement sets
//!    of stubborn-free shifted blocks are pairwise disjoint.

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, FailureStats, Result};
use crate::functions::MintermFunction;
use crate::group::{GroupElements, GroupSpec, Permutation, Permute};
use crate::pattern::{BitString, Block, Pattern};
use crate::rng::substream;
use crate::sensitivity::BlockSensitivityWitness;

/// Coverage at which an index is bad.
pub const BAD_COVERAGE: usize = 4;
/// Coverage at which an index is terrible.
pub const TERRIBLE_COVERAGE: usize = 7;

/// `N^{3/7}`.
pub fn n_pow_3_7(n: usize) -> f64 {
    (n as f64).powf(3.0 / 7.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NicepackConfig {
    pub max_retries: usize,
    /// Loosens the asymptotic thresholds for small `N`: the bad-index limit
    /// becomes `slack·N^{3/7}/12` and the size target `N^{3/7}/(2·slack)`.
    pub slack: f64,
}

impl Default for NicepackConfig {
    fn default() -> Self {
        NicepackConfig { max_retries: 50, slack: 1.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShiftSelection {
    pub elements: Vec<Permutation>,
    pub base_block: Block,
    /// Nonzero multiplicities of `i ∈ σ_j(B)` over the kept elements.
    pub coverage: BTreeMap<usize, usize>,
    pub attempts_used: usize,
    pub t0_sampled: usize,
    pub bad_indices: usize,
    /// Kept fewer than the size target; reported rather than treated as failure.
    pub degraded: bool,
}

impl ShiftSelection {
    pub fn max_coverage(&self) -> usize {
        self.coverage.values().copied().max().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Multiset count of memberships `i ∈ σ(B)`, as a dense vector.
pub fn coverage_counts(n: usize, block: &Block, elements: &[Permutation]) -> Vec<usize> {
    let mut cov = vec![0usize; n];
    for s in elements {
        for &b in block.indices() {
            cov[s.image(b)] += 1;
        }
    }
    cov
}

fn sparse(cov: &[usize]) -> BTreeMap<usize, usize> {
    cov.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, &c)| (i, c)).collect()
}

/// `t` independent uniform draws from the group on sub-stream `stream`.
pub fn sample_elements(elements: &GroupElements, t: usize, seed: u64, stream: u64) -> Vec<Permutation> {
    let mut rng = substream(seed, stream);
    (0..t).map(|_| elements.get(rng.gen_range(0..elements.len()))).collect()
}

pub fn select_low_overlap_shifts(
    group: &GroupSpec,
    block: &Block,
    seed: u64,
    cfg: &NicepackConfig,
) -> Result<ShiftSelection> {
    let n = group.degree();
    block.check_range(n)?;
    if block.is_empty() {
        return Err(Error::invalid("base block must be nonempty"));
    }
    let n37 = n_pow_3_7(n);
    if block.len() as f64 > n37 {
        return Err(Error::invalid(format!(
            "|B| = {} exceeds N^(3/7) = {n37:.3}; use the heavy-pattern witness",
            block.len()
        )));
    }
    let elements = group.elements()?;
    if !elements.is_transitive() {
        return Err(Error::invalid("group is not transitive"));
    }
    let t0 = n37.ceil() as usize;
    let bad_limit = cfg.slack * n37 / 12.0;
    let target = (n37 / (2.0 * cfg.slack)).ceil() as usize;

    let mut stats = FailureStats::new("low-overlap shift selection");
    for attempt in 0..cfg.max_retries {
        stats.attempts = attempt + 1;
        let sample = sample_elements(&elements, t0, seed, attempt as u64);
        let cov = coverage_counts(n, block, &sample);
        if cov.iter().any(|&c| c >= TERRIBLE_COVERAGE) {
            stats.reject("terrible_index");
            continue;
        }
        let bad: Vec<bool> = cov.iter().map(|&c| c >= BAD_COVERAGE).collect();
        let bad_count = bad.iter().filter(|&&b| b).count();
        if bad_count as f64 >= bad_limit {
            stats.reject("too_many_bad");
            continue;
        }
        let kept: Vec<Permutation> = sample
            .into_iter()
            .filter(|s| block.indices().iter().all(|&b| !bad[s.image(b)]))
            .collect();
        let cov = coverage_counts(n, block, &kept);
        if let Some(i) = cov.iter().position(|&c| c >= BAD_COVERAGE) {
            return Err(Error::logic(format!("index {i} still over-covered after deletion")));
        }
        return Ok(ShiftSelection {
            degraded: kept.len() < target,
            elements: kept,
            base_block: block.clone(),
            coverage: sparse(&cov),
            attempts_used: attempt + 1,
            t0_sampled: t0,
            bad_indices: bad_count,
        });
    }
    Err(Error::ConstructionFailure(stats))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsensusAssignment {
    /// `v_i` for each `i ∈ U`.
    pub assigned: BTreeMap<usize, bool>,
    /// `U`: indices covered at least twice.
    pub multi_covered: Block,
}

/// Majority vote of the shifted patterns at every multiply covered index,
/// ties going to 0.
pub fn consensus_values(sel: &ShiftSelection, pattern: &Pattern) -> Result<ConsensusAssignment> {
    if sel.base_block != pattern.domain_block() {
        return Err(Error::invalid("selection was not built for this pattern's domain"));
    }
    let mut votes: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for s in &sel.elements {
        for (d, v) in pattern.defined() {
            let e = votes.entry(s.image(d)).or_default();
            if v {
                e.1 += 1;
            } else {
                e.0 += 1;
            }
        }
    }
    let assigned: BTreeMap<usize, bool> = votes
        .into_iter()
        .filter(|(_, (z, o))| z + o >= 2)
        .map(|(i, (z, o))| (i, o > z))
        .collect();
    let multi_covered = Block::new(assigned.keys().copied());
    Ok(ConsensusAssignment { assigned, multi_covered })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    StubbornSingletons,
    StubbornFreeDisagreements,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GreedyOutcome {
    pub witness: BlockSensitivityWitness,
    pub source: WitnessSource,
    /// Indices of `U` still disagreeing with `v` at the halt.
    pub stubborn: Vec<usize>,
    /// Number of kept elements whose shifted block avoids every stubborn index.
    pub stubborn_free: usize,
    /// Disagreement count with `v` before each step and at the halt.
    pub disagreement_trace: Vec<usize>,
}

pub fn greedy_flip_witness(
    f: &MintermFunction,
    sel: &ShiftSelection,
    cons: &ConsensusAssignment,
    x0: &BitString,
) -> Result<GreedyOutcome> {
    if f.eval(x0)? {
        return Err(Error::invalid("greedy walk must start from a 0-input"));
    }
    let disagreeing = |x: &BitString| cons.assigned.iter().filter(|(&i, &v)| x.get(i) != v).count();
    let mut x = x0.clone();
    let mut trace = vec![disagreeing(&x)];
    loop {
        let mut step = None;
        for (&i, &v) in &cons.assigned {
            if x.get(i) == v {
                continue;
            }
            x.toggle(i);
            let stays_zero = !f.eval_bits(x.bits());
            x.toggle(i);
            if stays_zero {
                step = Some(i);
                break;
            }
        }
        let Some(i) = step else { break };
        x.toggle(i);
        trace.push(disagreeing(&x));
    }

    let stubborn: Vec<usize> = cons.assigned.iter().filter(|(&i, &v)| x.get(i) != v).map(|(&i, _)| i).collect();
    let singles = BlockSensitivityWitness::new(f, x.clone(), stubborn.iter().map(|&i| Block::new([i])).collect())?;

    let is_stubborn = {
        let mut m = vec![false; f.n()];
        stubborn.iter().for_each(|&i| m[i] = true);
        m
    };
    let mut disagreements = Vec::new();
    for s in &sel.elements {
        let shifted = sel.base_block.permuted(s)?;
        if shifted.indices().iter().any(|&i| is_stubborn[i]) {
            continue;
        }
        disagreements.push(f.disagreement_set(&x, s)?);
    }
    let stubborn_free = disagreements.len();
    let spread = BlockSensitivityWitness::new(f, x, disagreements)
        .map_err(|e| Error::logic(format!("stubborn-free disagreement sets failed verification: {e}")))?;

    let (witness, source) = if singles.count() > spread.count() {
        (singles, WitnessSource::StubbornSingletons)
    } else {
        (spread, WitnessSource::StubbornFreeDisagreements)
    };
    Ok(GreedyOutcome { witness, source, stubborn, stubborn_free, disagreement_trace: trace })
}

/// Input agreeing with `p`, undefined positions set against the majority
/// value `b` (ties: `b = 1`), with one singleton block per `b`-valued
/// position. Every shifted copy of `p` needs as many `b`-bits as `p` has,
/// so dropping any one of them leaves no match.
pub fn heavy_pattern_witness(f: &MintermFunction) -> Result<BlockSensitivityWitness> {
    let p = f.pattern();
    let b = p.count_value(true) >= p.count_value(false);
    let x = BitString::new(p.symbols().iter().map(|s| s.value().unwrap_or(!b)).collect())?;
    let blocks = p.defined().filter(|&(_, v)| v == b).map(|(i, _)| Block::new([i])).collect();
    BlockSensitivityWitness::new(f, x, blocks)
        .map_err(|e| Error::logic(format!("heavy-pattern witness failed verification: {e}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Heavy,
    Nicepack,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Thresholds {
    /// `⌈|dom(p)|/2⌉`
    pub heavy: usize,
    /// `⌈N^{3/7}/12⌉`
    pub twelfth: usize,
    /// `⌈N^{3/7}/4⌉`
    pub quarter: usize,
}

impl Thresholds {
    pub fn new(n: usize, dom_size: usize) -> Self {
        let n37 = n_pow_3_7(n);
        Thresholds { heavy: dom_size.div_ceil(2), twelfth: (n37 / 12.0).ceil() as usize, quarter: (n37 / 4.0).ceil() as usize }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerBoundReport {
    pub n: usize,
    pub dom_size: usize,
    pub branch: Branch,
    pub t0: Option<usize>,
    pub t_final: Option<usize>,
    pub witness: BlockSensitivityWitness,
    pub witness_count: usize,
    pub thresholds: Thresholds,
    pub seed: u64,
    pub retries: usize,
    pub degraded: bool,
}

/// Flat serialized form of a [`LowerBoundReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBoundRecord {
    pub n: usize,
    pub dom_size: usize,
    pub branch: Branch,
    pub t0: Option<usize>,
    pub t_final: Option<usize>,
    pub witness_count: usize,
    pub threshold_heavy: usize,
    pub threshold_twelfth: usize,
    pub threshold_quarter: usize,
    pub seed: u64,
    pub retries: usize,
    pub degraded: bool,
    pub witness_input: String,
    pub witness_blocks: String,
}

impl LowerBoundReport {
    pub fn to_record(&self) -> LowerBoundRecord {
        LowerBoundRecord {
            n: self.n,
            dom_size: self.dom_size,
            branch: self.branch,
            t0: self.t0,
            t_final: self.t_final,
            witness_count: self.witness_count,
            threshold_heavy: self.thresholds.heavy,
            threshold_twelfth: self.thresholds.twelfth,
            threshold_quarter: self.thresholds.quarter,
            seed: self.seed,
            retries: self.retries,
            degraded: self.degraded,
            witness_input: self.witness.input().to_string(),
            witness_blocks: self.witness.blocks_text(),
        }
    }
}

pub fn lower_bound_pipeline(f: &MintermFunction, seed: u64, cfg: &NicepackConfig) -> Result<LowerBoundReport> {
    let n = f.n();
    let p = f.pattern();
    let dom_size = p.domain().len();
    let thresholds = Thresholds::new(n, dom_size);
    if dom_size as f64 > n_pow_3_7(n) {
        let witness = heavy_pattern_witness(f)?;
        return Ok(LowerBoundReport {
            n,
            dom_size,
            branch: Branch::Heavy,
            t0: None,
            t_final: None,
            witness_count: witness.count(),
            witness,
            thresholds,
            seed,
            retries: 0,
            degraded: false,
        });
    }
    let sel = select_low_overlap_shifts(f.group(), &p.domain_block(), seed, cfg)?;
    let cons = consensus_values(&sel, p)?;
    let x0 = if p.count_value(true) > 0 { BitString::zeros(n)? } else { BitString::ones(n)? };
    let outcome = greedy_flip_witness(f, &sel, &cons, &x0)?;
    Ok(LowerBoundReport {
        n,
        dom_size,
        branch: Branch::Nicepack,
        t0: Some(sel.t0_sampled),
        t_final: Some(sel.len()),
        witness_count: outcome.witness.count(),
        witness: outcome.witness,
        thresholds,
        seed,
        retries: sel.attempts_used,
        degraded: sel.degraded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(p: &str) -> MintermFunction {
        MintermFunction::cyclic(p.parse().unwrap()).unwrap()
    }

    fn selection(n: usize, block: Block, offsets: &[usize]) -> ShiftSelection {
        let elements: Vec<Permutation> = offsets.iter().map(|&j| Permutation::shift(n, j)).collect();
        let cov = coverage_counts(n, &block, &elements);
        ShiftSelection {
            elements,
            base_block: block,
            coverage: sparse(&cov),
            attempts_used: 1,
            t0_sampled: offsets.len(),
            bad_indices: 0,
            degraded: false,
        }
    }

    #[test]
    fn singleton_block_selection() {
        let g = GroupSpec::cyclic(2000).unwrap();
        let sel = select_low_overlap_shifts(&g, &Block::new([0]), 9, &NicepackConfig::default()).unwrap();
        assert_eq!(sel.attempts_used, 1);
        assert!(sel.max_coverage() <= 3);
        assert_eq!(sel.t0_sampled, n_pow_3_7(2000).ceil() as usize);
    }

    #[test]
    fn oversized_block_rejected() {
        let g = GroupSpec::cyclic(100).unwrap();
        let err = select_low_overlap_shifts(&g, &Block::new(0..60), 1, &NicepackConfig::default());
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn non_transitive_group_rejected() {
        let g = GroupSpec::explicit(vec![Permutation::shift(40, 2)]).unwrap();
        let err = select_low_overlap_shifts(&g, &Block::new([0]), 1, &NicepackConfig::default());
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn zero_retries_is_construction_failure() {
        let g = GroupSpec::cyclic(500).unwrap();
        let cfg = NicepackConfig { max_retries: 0, ..Default::default() };
        assert!(matches!(select_low_overlap_shifts(&g, &Block::new([0, 1]), 1, &cfg), Err(Error::ConstructionFailure(_))));
    }

    #[test]
    fn consensus_majority_and_tie_break() {
        // index 2 is covered by t_0 (p_2 = 1), t_1 (p_1 = 1), t_2 (p_0 = 0)
        let p: Pattern = "011*****".parse().unwrap();
        let sel = selection(8, p.domain_block(), &[0, 1, 2]);
        let cons = consensus_values(&sel, &p).unwrap();
        assert!(cons.assigned[&2]);
        // index 1: t_0 gives p_1 = 1, t_1 gives p_0 = 0: tie goes to 0
        assert!(!cons.assigned[&1]);
        assert_eq!(cons.multi_covered, Block::new([1, 2, 3]));

        let p: Pattern = "1*******".parse().unwrap();
        let sel = selection(8, p.domain_block(), &[0, 3]);
        assert!(consensus_values(&sel, &p).unwrap().assigned.is_empty());
    }

    #[test]
    fn greedy_examples() {
        let or = cyc("1***");
        let sel = selection(4, or.pattern().domain_block(), &[0, 1, 2, 3]);
        let cons = consensus_values(&sel, or.pattern()).unwrap();
        let out = greedy_flip_witness(&or, &sel, &cons, &"0000".parse().unwrap()).unwrap();
        assert_eq!(out.witness.count(), 4);

        let f = cyc("11****");
        let sel = selection(6, f.pattern().domain_block(), &[0, 2, 4]);
        let cons = consensus_values(&sel, f.pattern()).unwrap();
        assert!(cons.multi_covered.is_empty());
        let out = greedy_flip_witness(&f, &sel, &cons, &"000000".parse().unwrap()).unwrap();
        assert_eq!(out.witness.blocks(), &[Block::new([0, 1]), Block::new([2, 3]), Block::new([4, 5])]);
        assert_eq!(out.source, WitnessSource::StubbornFreeDisagreements);

        assert!(greedy_flip_witness(&f, &sel, &cons, &"110000".parse().unwrap()).is_err());
    }

    #[test]
    fn greedy_trace_strictly_decreases() {
        let f = cyc("1*0**1**********");
        let sel = selection(16, f.pattern().domain_block(), &[0, 1, 2, 3, 5, 8]);
        let cons = consensus_values(&sel, f.pattern()).unwrap();
        let out = greedy_flip_witness(&f, &sel, &cons, &BitString::zeros(16).unwrap()).unwrap();
        assert!(out.disagreement_trace.windows(2).all(|w| w[1] < w[0]));
        assert_eq!(*out.disagreement_trace.last().unwrap(), out.stubborn.len());
        out.witness.verify(&f).unwrap();
    }

    #[test]
    fn heavy_examples() {
        let w = heavy_pattern_witness(&cyc("1***")).unwrap();
        assert_eq!(w.input().to_string(), "1000");
        assert_eq!(w.count(), 1);
        let w = heavy_pattern_witness(&cyc("110***")).unwrap();
        assert_eq!(w.input().to_string(), "110000");
        assert_eq!(w.blocks(), &[Block::new([0]), Block::new([1])]);
        let w = heavy_pattern_witness(&cyc("00***")).unwrap();
        assert_eq!(w.input().to_string(), "00111");
        assert_eq!(w.blocks(), &[Block::new([0]), Block::new([1])]);
    }

    #[test]
    fn pipeline_small_or() {
        // |dom| = 1 <= 4^(3/7), so the sampling branch runs
        let r = lower_bound_pipeline(&cyc("1***"), 0, &NicepackConfig::default()).unwrap();
        assert_eq!(r.branch, Branch::Nicepack);
        assert!(r.witness_count >= 1);
        let r = lower_bound_pipeline(&cyc("10*"), 0, &NicepackConfig::default()).unwrap();
        assert_eq!(r.branch, Branch::Heavy);
        assert_eq!(r.witness_count, 1);
    }

    #[test]
    fn pipeline_on_explicit_group() {
        // dihedral group of the 9-cycle
        let g: GroupSpec = "1,2,3,4,5,6,7,8,0;0,8,7,6,5,4,3,2,1".parse().unwrap();
        let f = MintermFunction::new(g, "1*0******".parse().unwrap()).unwrap();
        let cfg = NicepackConfig { slack: 20.0, ..Default::default() };
        let r = lower_bound_pipeline(&f, 3, &cfg).unwrap();
        assert_eq!(r.branch, Branch::Nicepack);
        r.witness.verify(&f).unwrap();
    }

    #[test]
    fn uniform_images_pass_chi_square() {
        let n = 50;
        let elements = GroupSpec::cyclic(n).unwrap().elements().unwrap();
        let sample = sample_elements(&elements, 100_000, 2024, 0);
        let mut counts = vec![0f64; n];
        sample.iter().for_each(|s| counts[s.image(0)] += 1.0);
        let expected = 100_000.0 / n as f64;
        let chi2: f64 = counts.iter().map(|c| (c - expected).powi(2) / expected).sum();
        // 0.999 quantile of chi-square with 49 degrees of freedom
        assert!(chi2 < 85.3506, "chi2 = {chi2}");
    }
}
