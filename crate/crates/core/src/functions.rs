//! The pattern-matching function `f^{Γ,p}(x) = 1 ⇔ ∃σ ∈ Γ: x agrees with σ(p)`.

use crate::error::{Error, Result};
use crate::group::{GroupElements, GroupSpec, Permutation, Permute};
use crate::pattern::{check_len, BitString, Block, Pattern};

#[derive(Debug, Clone)]
pub struct MintermFunction {
    group: GroupSpec,
    pattern: Pattern,
    elements: GroupElements,
    /// `(position, value)` over `dom(p)`, anchor first.
    defined: Vec<(usize, bool)>,
}

impl MintermFunction {
    /// Rejects length mismatches and empty-domain (constant) patterns.
    pub fn new(group: GroupSpec, pattern: Pattern) -> Result<Self> {
        check_len(group.degree(), pattern.len())?;
        if pattern.domain().is_empty() {
            return Err(Error::invalid("pattern has empty domain; the function would be constant"));
        }
        let elements = group.elements()?;
        let defined = pattern.defined().collect();
        Ok(MintermFunction { group, pattern, elements, defined })
    }

    pub fn cyclic(pattern: Pattern) -> Result<Self> {
        Self::new(GroupSpec::cyclic(pattern.len())?, pattern)
    }

    pub fn n(&self) -> usize {
        self.pattern.len()
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn elements(&self) -> &GroupElements {
        &self.elements
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self.elements, GroupElements::Cyclic(_))
    }

    pub fn eval(&self, x: &BitString) -> Result<bool> {
        check_len(self.n(), x.len())?;
        Ok(self.eval_bits(x.bits()))
    }

    /// `eval` without the length check; `x.len()` must equal `n`.
    pub fn eval_bits(&self, x: &[bool]) -> bool {
        match &self.elements {
            GroupElements::Cyclic(n) => (0..*n).any(|j| self.shift_matches(x, j)),
            GroupElements::Listed(elems) => elems.iter().any(|s| self.element_matches(x, s)),
        }
    }

    /// Reference evaluation that tests every shifted pattern in full with no
    /// anchor filtering.
    pub fn eval_exhaustive(&self, x: &BitString) -> Result<bool> {
        check_len(self.n(), x.len())?;
        for sigma in self.elements.iter() {
            if self.pattern.permuted(&sigma)?.matches(x)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Does `x` agree with `t_j(p)`? The anchor entry is tested first so
    /// that most shifts are rejected after a single lookup.
    #[inline]
    fn shift_matches(&self, x: &[bool], j: usize) -> bool {
        let n = x.len();
        self.defined.iter().all(|&(d, v)| {
            let k = d + j;
            x[if k >= n { k - n } else { k }] == v
        })
    }

    #[inline]
    fn element_matches(&self, x: &[bool], sigma: &Permutation) -> bool {
        // σ(p)_{σ(d)} = p_d
        self.defined.iter().all(|&(d, v)| x[sigma.image(d)] == v)
    }

    /// Group elements `σ` with `x` agreeing with `σ(p)`, in group order.
    pub fn matching_shifts(&self, x: &BitString) -> Result<Vec<Permutation>> {
        check_len(self.n(), x.len())?;
        let bits = x.bits();
        Ok(match &self.elements {
            GroupElements::Cyclic(n) => (0..*n)
                .filter(|&j| self.shift_matches(bits, j))
                .map(|j| Permutation::shift(*n, j))
                .collect(),
            GroupElements::Listed(elems) => {
                elems.iter().filter(|s| self.element_matches(bits, s)).cloned().collect()
            }
        })
    }

    /// `D_σ = {i ∈ dom(σ(p)) : x_i ≠ σ(p)_i}`.
    pub fn disagreement_set(&self, x: &BitString, sigma: &Permutation) -> Result<Block> {
        check_len(self.n(), x.len())?;
        check_len(self.n(), sigma.len())?;
        Ok(Block::new(
            self.defined.iter().map(|&(d, v)| (sigma.image(d), v)).filter(|&(i, v)| x.get(i) != v).map(|(i, _)| i),
        ))
    }

    /// `(σ, D_σ)` for every group element, in group order.
    pub fn disagreement_sets(&self, x: &BitString) -> Result<Vec<(Permutation, Block)>> {
        check_len(self.n(), x.len())?;
        self.elements.iter().map(|s| self.disagreement_set(x, &s).map(|d| (s, d))).collect()
    }
}
