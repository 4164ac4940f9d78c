//! Seeded random inputs shared by the CLI, the verification suites and the
//! acceptance run.

use mtbs::{Block, Pattern, Result, Symbol};
use rand::seq::index::sample;
use rand::Rng;

/// Uniform over `{0,1,*}^n`, redrawn until the domain is nonempty.
pub fn random_pattern(n: usize, rng: &mut impl Rng) -> Result<Pattern> {
    loop {
        let symbols: Vec<Symbol> = (0..n)
            .map(|_| match rng.gen_range(0..3) {
                0 => Symbol::Zero,
                1 => Symbol::One,
                _ => Symbol::Star,
            })
            .collect();
        if n == 0 || symbols.iter().any(|s| s.is_defined()) {
            return Pattern::new(symbols);
        }
    }
}

/// `d` uniformly placed defined positions with uniform values.
pub fn random_pattern_with_domain(n: usize, d: usize, rng: &mut impl Rng) -> Result<Pattern> {
    if d > n {
        return Err(mtbs::Error::InvalidArgument(format!("domain size {d} exceeds n = {n}")));
    }
    let mut symbols = vec![Symbol::Star; n];
    for i in sample(rng, n, d) {
        symbols[i] = Symbol::from_bit(rng.gen());
    }
    Pattern::new(symbols)
}

pub fn random_block(n: usize, size: usize, rng: &mut impl Rng) -> Block {
    Block::new(sample(rng, n, size.min(n)))
}

/// Every pattern of length `n` with a nonempty domain, in base-3 order.
pub fn all_patterns(n: usize) -> impl Iterator<Item = Pattern> {
    let total = 3usize.pow(n as u32);
    (0..total).filter_map(move |mut code| {
        let symbols: Vec<Symbol> = (0..n)
            .map(|_| {
                let s = [Symbol::Zero, Symbol::One, Symbol::Star][code % 3];
                code /= 3;
                s
            })
            .collect();
        symbols.iter().any(|s| s.is_defined()).then(|| Pattern::new(symbols).expect("nonempty"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use mtbs::rng::substream;

    #[test]
    fn pattern_grid_sizes() {
        assert_eq!(all_patterns(4).count(), 80);
        assert_eq!(all_patterns(6).count(), 728);
    }

    #[test]
    fn domain_size_is_exact() {
        let mut rng = substream(1, 0);
        let p = random_pattern_with_domain(10_000, 20, &mut rng).unwrap();
        assert_eq!(p.domain().len(), 20);
        assert!(random_pattern_with_domain(5, 6, &mut rng).is_err());
    }
}
