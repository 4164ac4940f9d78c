//! Patterns over `{0, 1, *}`, bit strings and blocks of coordinates in `Z_N`.
//!
//! Text forms: one character per entry (`0`, `1`, `*`), index 0 leftmost.
//! Blocks are written as sorted comma-separated indices, the empty block as
//! the empty string.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Zero,
    One,
    Star,
}

impl Symbol {
    pub fn from_bit(b: bool) -> Self {
        if b {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    /// The defined value, or `None` for `*`.
    pub fn value(self) -> Option<bool> {
        match self {
            Symbol::Zero => Some(false),
            Symbol::One => Some(true),
            Symbol::Star => None,
        }
    }

    pub fn is_defined(self) -> bool {
        self != Symbol::Star
    }

    fn to_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Star => '*',
        }
    }
}

/// A partial assignment `p ∈ {0,1,*}^N`.
///
/// The domain (defined positions, ascending) is cached alongside the symbols
/// and rebuilt by every constructor, so the two never drift apart.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    symbols: Vec<Symbol>,
    domain: Vec<usize>,
}

impl Pattern {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::invalid("pattern length must be at least 1"));
        }
        let domain = symbols
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_defined())
            .map(|(i, _)| i)
            .collect();
        Ok(Pattern { symbols, domain })
    }

    /// The all-`*` pattern of length `n`.
    pub fn stars(n: usize) -> Result<Self> {
        Self::new(vec![Symbol::Star; n])
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn get(&self, i: usize) -> Symbol {
        self.symbols[i]
    }

    /// Defined positions, ascending.
    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn domain_block(&self) -> Block {
        Block::from_sorted_unchecked(self.domain.clone())
    }

    /// `(position, value)` for each defined position, ascending.
    pub fn defined(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.domain.iter().map(move |&i| (i, self.symbols[i] == Symbol::One))
    }

    pub fn count_value(&self, v: bool) -> usize {
        self.defined().filter(|&(_, b)| b == v).count()
    }

    /// True iff no position carries conflicting defined values. Symmetric.
    pub fn agrees(&self, other: &Pattern) -> Result<bool> {
        check_len(self.len(), other.len())?;
        Ok(self
            .symbols
            .iter()
            .zip(&other.symbols)
            .all(|(&a, &b)| !(a.is_defined() && b.is_defined() && a != b)))
    }

    /// True iff the bit string agrees with every defined entry.
    pub fn matches(&self, x: &BitString) -> Result<bool> {
        check_len(self.len(), x.len())?;
        Ok(self.defined().all(|(i, v)| x.get(i) == v))
    }

    /// Copy of `self` placed at offset 0 of an all-`*` pattern of length `n`.
    pub fn embed(&self, n: usize) -> Result<Pattern> {
        if n < self.len() {
            return Err(Error::invalid(format!(
                "cannot embed a pattern of length {} into length {n}",
                self.len()
            )));
        }
        let mut symbols = self.symbols.clone();
        symbols.resize(n, Symbol::Star);
        Pattern::new(symbols)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(Symbol::Zero),
                '1' => Ok(Symbol::One),
                '*' => Ok(Symbol::Star),
                other => Err(Error::invalid(format!("bad pattern symbol {other:?} at {i}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Pattern::new(symbols)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|s| write!(f, "{}", s.to_char()))
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An input `x ∈ {0,1}^N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::invalid("bit string length must be at least 1"));
        }
        Ok(BitString { bits })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![false; n])
    }

    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![true; n])
    }

    /// Bit `i` of `mask` becomes `x_i`.
    pub fn from_mask(mask: u64, n: usize) -> Result<Self> {
        if n > 64 {
            return Err(Error::invalid("mask form supports at most 64 bits"));
        }
        Self::new((0..n).map(|i| mask >> i & 1 == 1).collect())
    }

    /// Inverse of [`BitString::from_mask`]; `None` above 64 bits.
    pub fn to_mask(&self) -> Option<u64> {
        if self.len() > 64 {
            return None;
        }
        Some(self.bits.iter().enumerate().fold(0, |m, (i, &b)| m | (b as u64) << i))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn toggle(&mut self, i: usize) {
        self.bits[i] = !self.bits[i];
    }

    /// `x^B`: every coordinate in `block` complemented.
    pub fn flip(&self, block: &Block) -> Result<BitString> {
        block.check_range(self.len())?;
        let mut out = self.clone();
        for &i in block.indices() {
            out.bits[i] = !out.bits[i];
        }
        Ok(out)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// The bit string viewed as a fully defined pattern.
    pub fn to_pattern(&self) -> Pattern {
        Pattern::new(self.bits.iter().map(|&b| Symbol::from_bit(b)).collect())
            .expect("bit strings are nonempty")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::invalid(format!("bad bit {other:?} at {i}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        BitString::new(bits)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.bits.iter().try_for_each(|&b| write!(f, "{}", if b { '1' } else { '0' }))
    }
}

impl Serialize for BitString {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A set of coordinates, stored sorted and deduplicated.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    indices: Vec<usize>,
}

impl Block {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        indices.dedup();
        Block { indices }
    }

    pub fn empty() -> Self {
        Block::default()
    }

    pub(crate) fn from_sorted_unchecked(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Block { indices }
    }

    /// Block whose members are the set bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        Block { indices: (0..64).filter(|i| mask >> i & 1 == 1).collect() }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_disjoint(&self, other: &Block) -> bool {
        let (mut a, mut b) = (self.indices.iter().peekable(), other.indices.iter().peekable());
        while let (Some(&&x), Some(&&y)) = (a.peek(), b.peek()) {
            match x.cmp(&y) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn is_subset(&self, other: &Block) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.indices.last() {
            Some(&max) if max >= n => {
                Err(Error::invalid(format!("block index {max} out of range for length {n}")))
            }
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for Block {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Block::new(iter)
    }
}

impl FromStr for Block {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Block::empty());
        }
        let parsed = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|e| Error::invalid(format!("bad block index {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let block = Block::new(parsed.iter().copied());
        if block.len() != parsed.len() {
            return Err(Error::invalid("duplicate index in block"));
        }
        Ok(block)
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl Serialize for Block {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub(crate) fn check_len(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::invalid(format!("length mismatch: {a} vs {b}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn agreement_examples() {
        assert!(p("110*").agrees(&p("110*")).unwrap());
        assert!(!p("10**").agrees(&p("11**")).unwrap());
        // entrywise: (1,1) (*,0) (0,*) (*,*)
        assert!(p("1*0*").agrees(&p("10**")).unwrap());
        assert!(p("10**").agrees(&p("1*0*")).unwrap());
        assert!(p("1*").agrees(&p("1**")).is_err());
    }

    #[test]
    fn flip_examples() {
        let x: BitString = "0000".parse().unwrap();
        assert_eq!(x.flip(&Block::empty()).unwrap().to_string(), "0000");
        assert_eq!(x.flip(&Block::new(0..4)).unwrap().to_string(), "1111");
        let y: BitString = "0110".parse().unwrap();
        assert_eq!(y.flip(&Block::new([1, 3])).unwrap().to_string(), "0011");
        assert!(y.flip(&Block::new([4])).is_err());
    }

    #[test]
    fn domain_is_cached_consistently() {
        let q = p("*1*0**1");
        assert_eq!(q.domain(), &[1, 3, 6]);
        assert_eq!(q.count_value(true), 2);
        assert_eq!(q.embed(9).unwrap().to_string(), "*1*0**1**");
        assert!(q.embed(3).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<Pattern>().is_err());
        assert!("01x".parse::<Pattern>().is_err());
        assert!("01*".parse::<BitString>().is_err());
        assert!("1,1".parse::<Block>().is_err());
        assert!("1,-2".parse::<Block>().is_err());
        assert_eq!("".parse::<Block>().unwrap(), Block::empty());
        assert_eq!(" 3, 1 ,2".parse::<Block>().unwrap().to_string(), "1,2,3");
    }

    #[test]
    fn block_set_ops() {
        let a = Block::new([1, 4, 7]);
        assert!(a.is_disjoint(&Block::new([0, 2, 8])));
        assert!(!a.is_disjoint(&Block::new([7])));
        assert!(Block::new([4, 7]).is_subset(&a));
        assert_eq!(Block::from_mask(0b1010), Block::new([1, 3]));
    }
}
