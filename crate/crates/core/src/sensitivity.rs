//! Exact sensitivity and block sensitivity.
//!
//! `bs(f; x)` is computed as a maximum disjoint packing over the
//! *inclusion-minimal* sensitive blocks at `x`. This loses nothing: if
//! `B_1, …, B_d` are disjoint sensitive blocks, shrinking each `B_k` to a
//! minimal sensitive subset keeps them disjoint and sensitive.
//!
//! For a 0-input there is a structured shortcut. If `f(x^B) = 1` then `x^B`
//! agrees with some `σ(p)`, which forces `D_σ ⊆ B`, and flipping `D_σ`
//! alone already yields agreement with `σ(p)`. So the minimal sensitive
//! blocks at a 0-input are exactly the inclusion-minimal disagreement sets.

use std::collections::HashMap;
use std::thread;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::functions::MintermFunction;
use crate::packing::max_disjoint_packing;
use crate::pattern::{check_len, BitString, Block};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `N` for exhaustive per-input block enumeration.
    pub block_enum_n: usize,
    /// Largest number of inputs a global sweep may visit.
    pub global_inputs: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { block_enum_n: 18, global_inputs: 1 << 20 }
    }
}

/// An input together with verified, pairwise disjoint sensitive blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockSensitivityWitness {
    input: BitString,
    blocks: Vec<Block>,
    value_at_input: bool,
}

impl BlockSensitivityWitness {
    /// Verifies every invariant against `f` before returning.
    pub fn new(f: &MintermFunction, input: BitString, blocks: Vec<Block>) -> Result<Self> {
        let value_at_input = f.eval(&input)?;
        let w = BlockSensitivityWitness { input, blocks, value_at_input };
        w.verify(f)?;
        Ok(w)
    }

    /// Re-checks disjointness and sensitivity using only `f.eval`.
    pub fn verify(&self, f: &MintermFunction) -> Result<()> {
        if f.eval(&self.input)? != self.value_at_input {
            return Err(Error::logic("witness value does not match f at its input"));
        }
        let mut seen = vec![false; self.input.len()];
        for b in &self.blocks {
            if b.is_empty() {
                return Err(Error::logic("witness contains an empty block"));
            }
            b.check_range(self.input.len()).map_err(|e| Error::logic(e.to_string()))?;
            for &i in b.indices() {
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::logic(format!("witness blocks overlap at index {i}")));
                }
            }
            if f.eval(&self.input.flip(b)?)? == self.value_at_input {
                return Err(Error::logic(format!("block {{{b}}} is not sensitive")));
            }
        }
        Ok(())
    }

    pub fn input(&self) -> &BitString {
        &self.input
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn value_at_input(&self) -> bool {
        self.value_at_input
    }

    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks as `0,1;2,3`.
    pub fn blocks_text(&self) -> String {
        self.blocks.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(";")
    }
}

pub fn sensitivity_at(f: &MintermFunction, x: &BitString) -> Result<usize> {
    let v = f.eval(x)?;
    let mut y = x.clone();
    let mut s = 0;
    for i in 0..x.len() {
        y.toggle(i);
        if f.eval_bits(y.bits()) != v {
            s += 1;
        }
        y.toggle(i);
    }
    Ok(s)
}

/// All inclusion-minimal sensitive blocks of size at most `size_cap`,
/// ordered by size and then lexicographically.
pub fn minimal_sensitive_blocks(
    f: &MintermFunction,
    x: &BitString,
    size_cap: usize,
    limits: &Limits,
) -> Result<Vec<Block>> {
    let n = f.n();
    check_len(n, x.len())?;
    check_enum_limit(n, limits)?;
    let v = f.eval(x)?;
    let base = x.to_mask().expect("n within enumeration limit");
    let mut y = vec![false; n];
    let masks = minimal_block_masks(n, size_cap, |b| {
        let m = base ^ b;
        for (i, bit) in y.iter_mut().enumerate() {
            *bit = m >> i & 1 == 1;
        }
        f.eval_bits(&y) != v
    });
    Ok(sorted_blocks(masks.into_iter().map(Block::from_mask).collect()))
}

fn check_enum_limit(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.block_enum_n || n > 63 {
        return Err(Error::limit(format!(
            "block enumeration needs n <= {}, got {n}",
            limits.block_enum_n.min(63)
        )));
    }
    Ok(())
}

/// Subsets in size order (Gosper's hack within a size), skipping supersets
/// of blocks already found. Anything reached that is sensitive has no
/// sensitive proper subset, since every sensitive set contains a minimal one.
fn minimal_block_masks(n: usize, size_cap: usize, mut sensitive: impl FnMut(u64) -> bool) -> Vec<u64> {
    let mut found: Vec<u64> = Vec::new();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for k in 1..=size_cap.min(n) {
        let mut b: u64 = (1u64 << k) - 1;
        while b <= full {
            if found.iter().all(|&m| m & !b != 0) && sensitive(b) {
                found.push(b);
            }
            // next mask with the same popcount
            let c = b & b.wrapping_neg();
            let r = b + c;
            b = (((r ^ b) >> 2) / c) | r;
            if r == 0 {
                break;
            }
        }
    }
    found
}

fn sorted_blocks(mut blocks: Vec<Block>) -> Vec<Block> {
    blocks.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    blocks
}

pub use crate::packing::Packing;

pub fn packing(sets: &[Block]) -> Packing {
    max_disjoint_packing(sets)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BsMode {
    /// Exhaustive minimal-block enumeration; any input, `N` within limits.
    BruteForce,
    /// Packing over disagreement sets; 0-inputs only, any `N`.
    StructuredZero,
}

/// Inclusion-minimal nonempty disagreement sets at a 0-input, in the same
/// order [`minimal_sensitive_blocks`] uses.
pub fn minimal_disagreement_sets(f: &MintermFunction, x: &BitString) -> Result<Vec<Block>> {
    if f.eval(x)? {
        return Err(Error::invalid("disagreement sets characterize sensitivity only at 0-inputs"));
    }
    let mut sets: Vec<Block> = f.disagreement_sets(x)?.into_iter().map(|(_, d)| d).collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    // keep a set unless an already kept (no larger) set is inside it
    let mut kept: Vec<Block> = Vec::new();
    let mut by_elem: HashMap<usize, Vec<usize>> = HashMap::new();
    for d in sets {
        if d.is_empty() {
            return Err(Error::logic("empty disagreement set at a 0-input"));
        }
        let dominated = d
            .indices()
            .iter()
            .filter_map(|e| by_elem.get(e))
            .flatten()
            .any(|&k| kept[k].is_subset(&d));
        if !dominated {
            for &e in d.indices() {
                by_elem.entry(e).or_default().push(kept.len());
            }
            kept.push(d);
        }
    }
    Ok(kept)
}

pub fn bs_at(f: &MintermFunction, x: &BitString, mode: BsMode, limits: &Limits) -> Result<BlockSensitivityWitness> {
    let family = match mode {
        BsMode::BruteForce => minimal_sensitive_blocks(f, x, f.n(), limits)?,
        BsMode::StructuredZero => minimal_disagreement_sets(f, x)?,
    };
    let pack = max_disjoint_packing(&family);
    let blocks = pack.selection.iter().map(|&k| family[k].clone()).collect();
    BlockSensitivityWitness::new(f, x.clone(), blocks)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SensitivityReport {
    pub n: usize,
    pub s: usize,
    pub bs0: usize,
    pub bs1: usize,
    pub bs: usize,
    /// Witnesses attaining `bs0` and `bs1`, in that order.
    pub witnesses: Vec<BlockSensitivityWitness>,
    pub explored_inputs: u64,
}

/// The flat serialized form of a [`SensitivityReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SensitivityRecord {
    pub n: usize,
    pub s: usize,
    pub bs0: usize,
    pub bs1: usize,
    pub bs: usize,
    pub witness_input: String,
    pub witness_blocks: String,
}

impl SensitivityReport {
    /// Witness attaining `bs` (the `bs0` one on ties).
    pub fn bs_witness(&self) -> &BlockSensitivityWitness {
        if self.bs0 >= self.bs1 {
            &self.witnesses[0]
        } else {
            &self.witnesses[1]
        }
    }

    pub fn to_record(&self) -> SensitivityRecord {
        let w = self.bs_witness();
        SensitivityRecord {
            n: self.n,
            s: self.s,
            bs0: self.bs0,
            bs1: self.bs1,
            bs: self.bs,
            witness_input: w.input().to_string(),
            witness_blocks: w.blocks_text(),
        }
    }
}

/// Best value seen so far with the lexicographically smallest input attaining it.
#[derive(Debug, Clone, Default)]
struct Best {
    value: usize,
    rank: Option<u64>,
    blocks: Vec<Block>,
}

impl Best {
    fn offer(&mut self, value: usize, rank: u64, blocks: impl FnOnce() -> Vec<Block>) {
        if self.rank.is_none() || value > self.value {
            *self = Best { value, rank: Some(rank), blocks: blocks() };
        }
    }

    fn merge(self, other: Best) -> Best {
        match (self.rank, other.rank) {
            (None, _) => other,
            (_, None) => self,
            (Some(a), Some(b)) => {
                if other.value > self.value || (other.value == self.value && b < a) {
                    other
                } else {
                    self
                }
            }
        }
    }
}

#[derive(Debug, Clone, Default)]
struct Sweep {
    s: usize,
    zero: Best,
    one: Best,
}

/// Exact `s`, `bs0`, `bs1`, `bs` over all `2^N` inputs.
///
/// Inputs are visited in lexicographic order of their text form; among
/// inputs attaining a maximum the first one supplies the witness. Work is
/// split over `jobs` threads and merged with the same tie-break, so the
/// report does not depend on `jobs`.
pub fn global_measures(f: &MintermFunction, limits: &Limits, jobs: usize) -> Result<SensitivityReport> {
    let n = f.n();
    if n > 63 || (1u64 << n) > limits.global_inputs {
        return Err(Error::limit(format!(
            "global sweep needs 2^n <= {}, got n = {n}",
            limits.global_inputs
        )));
    }
    check_enum_limit(n, limits)?;
    let total = 1u64 << n;
    let table: Vec<bool> = (0..total)
        .map(|m| {
            let bits: Vec<bool> = (0..n).map(|i| m >> i & 1 == 1).collect();
            f.eval_bits(&bits)
        })
        .collect();

    let jobs = jobs.clamp(1, 64) as u64;
    let chunk = total.div_ceil(jobs);
    let sweep = thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                let table = &table;
                let (lo, hi) = ((w * chunk).min(total), ((w + 1) * chunk).min(total));
                scope.spawn(move || sweep_range(n, table, lo, hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .fold(Sweep::default(), |acc, s| Sweep { s: acc.s.max(s.s), zero: acc.zero.merge(s.zero), one: acc.one.merge(s.one) })
    });

    let witness = |best: &Best| -> Result<BlockSensitivityWitness> {
        let rank = best.rank.ok_or_else(|| Error::logic("nonconstant function lacks an input value"))?;
        BlockSensitivityWitness::new(f, rank_to_input(rank, n), best.blocks.clone())
    };
    let witnesses = vec![witness(&sweep.zero)?, witness(&sweep.one)?];
    let (bs0, bs1) = (sweep.zero.value, sweep.one.value);
    Ok(SensitivityReport { n, s: sweep.s, bs0, bs1, bs: bs0.max(bs1), witnesses, explored_inputs: total })
}

/// Rank `r` in lexicographic order: `x_i` is bit `n − 1 − i` of `r`.
fn rank_to_mask(r: u64, n: usize) -> u64 {
    (0..n).fold(0, |m, i| m | ((r >> (n - 1 - i)) & 1) << i)
}

fn rank_to_input(r: u64, n: usize) -> BitString {
    BitString::from_mask(rank_to_mask(r, n), n).expect("n <= 63")
}

fn sweep_range(n: usize, table: &[bool], lo: u64, hi: u64) -> Sweep {
    let mut out = Sweep::default();
    for r in lo..hi {
        let x = rank_to_mask(r, n);
        let v = table[x as usize];
        let s = (0..n).filter(|i| table[(x ^ 1 << i) as usize] != v).count();
        out.s = out.s.max(s);
        let family: Vec<Block> = sorted_blocks(
            minimal_block_masks(n, n, |b| table[(x ^ b) as usize] != v).into_iter().map(Block::from_mask).collect(),
        );
        let pack = max_disjoint_packing(&family);
        let chosen = || pack.selection.iter().map(|&k| family[k].clone()).collect();
        if v {
            out.one.offer(pack.count, r, chosen);
        } else {
            out.zero.offer(pack.count, r, chosen);
        }
    }
    out
}
