//! Permutations of `Z_N` and the (small) permutation groups they generate.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pattern::{check_len, BitString, Block, Pattern};

pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// A bijection on `Z_N`.
///
/// Cyclic shifts `t_j(i) = i + j mod N` are stored as an offset; everything
/// else as an explicit image table. Construction normalizes, so two equal
/// permutations always have the same representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    n: usize,
    repr: Repr,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Shift(usize),
    Table { images: Vec<usize>, inverse: Vec<usize> },
}

impl Permutation {
    pub fn shift(n: usize, offset: usize) -> Self {
        assert!(n > 0, "permutation degree must be positive");
        Permutation { n, repr: Repr::Shift(offset % n) }
    }

    pub fn identity(n: usize) -> Self {
        Self::shift(n, 0)
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::invalid("permutation degree must be positive"));
        }
        let mut inverse = vec![usize::MAX; n];
        for (i, &img) in images.iter().enumerate() {
            if img >= n || inverse[img] != usize::MAX {
                return Err(Error::invalid(format!("not a permutation of 0..{n}: {images:?}")));
            }
            inverse[img] = i;
        }
        let offset = images[0];
        if images.iter().enumerate().all(|(i, &img)| img == (i + offset) % n) {
            return Ok(Self::shift(n, offset));
        }
        Ok(Permutation { n, repr: Repr::Table { images, inverse } })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        match &self.repr {
            Repr::Shift(j) => {
                let k = i + j;
                if k >= self.n {
                    k - self.n
                } else {
                    k
                }
            }
            Repr::Table { images, .. } => images[i],
        }
    }

    #[inline]
    pub fn preimage(&self, i: usize) -> usize {
        match &self.repr {
            Repr::Shift(j) => (i + self.n - j) % self.n,
            Repr::Table { inverse, .. } => inverse[i],
        }
    }

    /// The offset `j` when this is the cyclic shift `t_j`.
    pub fn as_shift(&self) -> Option<usize> {
        match self.repr {
            Repr::Shift(j) => Some(j),
            Repr::Table { .. } => None,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.as_shift() == Some(0)
    }

    pub fn images(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.image(i)).collect()
    }

    /// `self ∘ inner`, i.e. `i ↦ self(inner(i))`.
    pub fn compose(&self, inner: &Permutation) -> Result<Permutation> {
        check_len(self.n, inner.n)?;
        if let (Some(a), Some(b)) = (self.as_shift(), inner.as_shift()) {
            return Ok(Self::shift(self.n, a + b));
        }
        Self::from_images((0..self.n).map(|i| self.image(inner.image(i))).collect())
    }

    pub fn inverse(&self) -> Permutation {
        match &self.repr {
            Repr::Shift(j) => Self::shift(self.n, self.n - j),
            Repr::Table { images, inverse } => Permutation {
                n: self.n,
                repr: Repr::Table { images: inverse.clone(), inverse: images.clone() },
            },
        }
    }
}

impl Ord for Permutation {
    /// Lexicographic on image tables (for shifts: by offset).
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| match (self.as_shift(), other.as_shift()) {
            (Some(a), Some(b)) => a.cmp(&b),
            _ => (0..self.n)
                .map(|i| self.image(i).cmp(&other.image(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal),
        })
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Shift(j) => write!(f, "t{j}"),
            Repr::Table { images, .. } => {
                let parts: Vec<String> = images.iter().map(|i| i.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Comma-separated image table, optionally bracketed: `1,2,0` or `[1,2,0]`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')).unwrap_or(body);
        let images = body
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|e| Error::invalid(format!("bad image {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

/// Objects that can be relabelled by a permutation of their coordinates.
pub trait Permute: Sized {
    /// `σ(p)_i = p_{σ⁻¹(i)}` for sequences, `σ(B) = {σ(b)}` for blocks.
    fn permuted(&self, sigma: &Permutation) -> Result<Self>;
}

impl Permute for Pattern {
    fn permuted(&self, sigma: &Permutation) -> Result<Self> {
        check_len(self.len(), sigma.len())?;
        Pattern::new((0..self.len()).map(|i| self.get(sigma.preimage(i))).collect())
    }
}

impl Permute for BitString {
    fn permuted(&self, sigma: &Permutation) -> Result<Self> {
        check_len(self.len(), sigma.len())?;
        BitString::new((0..self.len()).map(|i| self.get(sigma.preimage(i))).collect())
    }
}

impl Permute for Block {
    fn permuted(&self, sigma: &Permutation) -> Result<Self> {
        self.check_range(sigma.len())?;
        Ok(Block::new(self.indices().iter().map(|&b| sigma.image(b))))
    }
}

/// Description of a permutation group `Γ ≤ S_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// The cyclic shifts `{t_0, …, t_{N−1}}`.
    Cyclic(usize),
    /// The group generated by `generators`; enumeration stops past `cap` elements.
    Explicit { generators: Vec<Permutation>, cap: usize },
}

impl GroupSpec {
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("group degree must be positive"));
        }
        Ok(GroupSpec::Cyclic(n))
    }

    pub fn explicit(generators: Vec<Permutation>) -> Result<Self> {
        Self::explicit_with_cap(generators, DEFAULT_ELEMENT_CAP)
    }

    pub fn explicit_with_cap(generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::invalid("explicit group needs at least one generator"));
        };
        let n = first.len();
        if generators.iter().any(|g| g.len() != n) {
            return Err(Error::invalid("generators act on different degrees"));
        }
        if cap == 0 {
            return Err(Error::invalid("element cap must be positive"));
        }
        Ok(GroupSpec::Explicit { generators, cap })
    }

    pub fn degree(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Explicit { generators, .. } => generators[0].len(),
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, GroupSpec::Cyclic(_))
    }

    /// Every group element, deduplicated, in ascending [`Permutation`] order.
    pub fn enumerate(&self) -> Result<Vec<Permutation>> {
        match self {
            GroupSpec::Cyclic(n) => Ok((0..*n).map(|j| Permutation::shift(*n, j)).collect()),
            GroupSpec::Explicit { generators, cap } => closure(generators, *cap),
        }
    }

    /// Element access without materializing cyclic groups.
    pub fn elements(&self) -> Result<GroupElements> {
        match self {
            GroupSpec::Cyclic(n) => Ok(GroupElements::Cyclic(*n)),
            GroupSpec::Explicit { .. } => Ok(GroupElements::Listed(self.enumerate()?)),
        }
    }

    pub fn is_transitive(&self) -> Result<bool> {
        self.elements().map(|e| e.is_transitive())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupSpec::Explicit { generators, .. } => {
                let parts: Vec<String> = generators
                    .iter()
                    .map(|g| g.images().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
                    .collect();
                f.write_str(&parts.join(";"))
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// `cyclic(N)`, or `;`-separated generator image tables such as `1,2,0;0,2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("cyclic(").and_then(|r| r.strip_suffix(')')) {
            let n = inner
                .trim()
                .parse::<usize>()
                .map_err(|e| Error::invalid(format!("bad cyclic degree {inner:?}: {e}")))?;
            return GroupSpec::cyclic(n);
        }
        let generators = s.split(';').map(str::parse).collect::<Result<Vec<Permutation>>>()?;
        GroupSpec::explicit(generators)
    }
}

fn closure(generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let n = generators[0].len();
    let mut gens: Vec<Permutation> = Vec::with_capacity(2 * generators.len());
    for g in generators {
        gens.push(g.clone());
        gens.push(g.inverse());
    }
    let identity = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(cur) = queue.pop_front() {
        for g in &gens {
            let next = g.compose(&cur)?;
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::limit(format!("group closure exceeds element cap {cap}")));
                }
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Indexed view of a group's elements in the same order as [`GroupSpec::enumerate`].
#[derive(Debug, Clone)]
pub enum GroupElements {
    Cyclic(usize),
    Listed(Vec<Permutation>),
}

impl GroupElements {
    pub fn len(&self) -> usize {
        match self {
            GroupElements::Cyclic(n) => *n,
            GroupElements::Listed(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn degree(&self) -> usize {
        match self {
            GroupElements::Cyclic(n) => *n,
            GroupElements::Listed(v) => v[0].len(),
        }
    }

    pub fn get(&self, k: usize) -> Permutation {
        match self {
            GroupElements::Cyclic(n) => Permutation::shift(*n, k),
            GroupElements::Listed(v) => v[k].clone(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.len()).map(move |k| self.get(k))
    }

    /// Orbit of `i` under the group, ascending.
    pub fn orbit(&self, i: usize) -> Vec<usize> {
        match self {
            GroupElements::Cyclic(n) => (0..*n).collect(),
            GroupElements::Listed(v) => {
                let mut o: Vec<usize> = v.iter().map(|s| s.image(i)).collect();
                o.sort_unstable();
                o.dedup();
                o
            }
        }
    }

    /// For a group the orbit of 0 is everything iff the action is transitive.
    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree()
    }
}
