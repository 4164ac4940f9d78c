use mtbs::sensitivity::{bs_at, global_measures, minimal_sensitive_blocks, sensitivity_at};
use mtbs::{BitString, Block, BsMode, GroupSpec, Limits, MintermFunction, Pattern, Permutation, Permute};
use proptest::prelude::*;

fn pattern_strategy(min: usize, max: usize) -> impl Strategy<Value = Pattern> {
    prop::collection::vec(prop::sample::select(vec!['0', '1', '*']), min..=max)
        .prop_filter("needs a defined position", |v| v.iter().any(|&c| c != '*'))
        .prop_map(|v| v.into_iter().collect::<String>().parse().unwrap())
}

fn bits_strategy(n: usize) -> impl Strategy<Value = BitString> {
    prop::collection::vec(any::<bool>(), n).prop_map(|v| BitString::new(v).unwrap())
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

fn pattern_of_len(n: usize) -> impl Strategy<Value = Pattern> {
    pattern_strategy(n, n)
}

proptest! {
    #[test]
    fn agreement_is_symmetric((p, q) in (1usize..12).prop_flat_map(|n| (pattern_of_len(n), pattern_of_len(n)))) {
        prop_assert_eq!(p.agrees(&q).unwrap(), q.agrees(&p).unwrap());
    }

    #[test]
    fn composition_acts_like_sequential_application(
        (s, t, p) in (1usize..10).prop_flat_map(|n| (perm_strategy(n), perm_strategy(n), pattern_of_len(n)))
    ) {
        let st = s.compose(&t).unwrap();
        prop_assert_eq!(p.permuted(&st).unwrap(), p.permuted(&t).unwrap().permuted(&s).unwrap());
        prop_assert!(s.compose(&s.inverse()).unwrap().is_identity());
    }

    #[test]
    fn flip_is_an_involution(
        (x, b) in (1usize..20).prop_flat_map(|n| (bits_strategy(n), prop::collection::btree_set(0..n, 0..n)))
    ) {
        let b = Block::new(b);
        prop_assert_eq!(x.flip(&b).unwrap().flip(&b).unwrap(), x);
    }

    #[test]
    fn cyclic_groups_are_transitive(n in 1usize..200) {
        prop_assert!(GroupSpec::cyclic(n).unwrap().is_transitive().unwrap());
    }

    #[test]
    fn eval_is_group_invariant((p, x, seeds) in (2usize..40).prop_flat_map(|n| {
        (pattern_of_len(n), bits_strategy(n), prop::collection::vec(0usize..n, 100))
    })) {
        let f = MintermFunction::cyclic(p).unwrap();
        let v = f.eval(&x).unwrap();
        for j in seeds {
            let g = Permutation::shift(f.n(), j);
            prop_assert_eq!(f.eval(&x.permuted(&g).unwrap()).unwrap(), v);
        }
    }

    #[test]
    fn eval_invariant_under_dihedral_group((p, x) in (3usize..12).prop_flat_map(|n| (pattern_of_len(n), bits_strategy(n)))) {
        let n = p.len();
        let rot = Permutation::shift(n, 1);
        let refl = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
        let f = MintermFunction::new(GroupSpec::explicit(vec![rot, refl]).unwrap(), p).unwrap();
        let v = f.eval(&x).unwrap();
        prop_assert_eq!(v, f.eval_exhaustive(&x).unwrap());
        for g in f.elements().iter() {
            prop_assert_eq!(f.eval(&x.permuted(&g).unwrap()).unwrap(), v);
        }
    }

    #[test]
    fn anchored_eval_matches_exhaustive_sampled((p, x) in (9usize..=10).prop_flat_map(|n| (pattern_of_len(n), bits_strategy(n)))) {
        let f = MintermFunction::cyclic(p).unwrap();
        prop_assert_eq!(f.eval(&x).unwrap(), f.eval_exhaustive(&x).unwrap());
    }

    #[test]
    fn sensitivity_at_most_block_sensitivity((p, x) in (2usize..9).prop_flat_map(|n| (pattern_of_len(n), bits_strategy(n)))) {
        let f = MintermFunction::cyclic(p).unwrap();
        let s = sensitivity_at(&f, &x).unwrap();
        let w = bs_at(&f, &x, BsMode::BruteForce, &Limits::default()).unwrap();
        prop_assert!(s <= w.count());
        // singletons among the minimal blocks are exactly the sensitive indices
        let minimal = minimal_sensitive_blocks(&f, &x, 1, &Limits::default()).unwrap();
        prop_assert_eq!(minimal.len(), s);
    }

    #[test]
    fn bs1_bounded_by_domain(p in pattern_strategy(2, 9)) {
        let f = MintermFunction::cyclic(p).unwrap();
        let r = global_measures(&f, &Limits::default(), 2).unwrap();
        prop_assert!(r.bs1 <= f.pattern().domain().len());
        prop_assert!(r.s <= r.bs);
        for w in &r.witnesses {
            w.verify(&f).unwrap();
        }
    }

    #[test]
    fn structured_matches_bruteforce_at_zero_inputs((p, x) in (2usize..11).prop_flat_map(|n| (pattern_of_len(n), bits_strategy(n)))) {
        let f = MintermFunction::cyclic(p).unwrap();
        prop_assume!(!f.eval(&x).unwrap());
        let lim = Limits::default();
        let a = bs_at(&f, &x, BsMode::BruteForce, &lim).unwrap();
        let b = bs_at(&f, &x, BsMode::StructuredZero, &lim).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn text_forms_round_trip(p in pattern_strategy(1, 30), x in bits_strategy(17)) {
        prop_assert_eq!(p.to_string().parse::<Pattern>().unwrap(), p);
        prop_assert_eq!(x.to_string().parse::<BitString>().unwrap(), x);
    }
}

#[test]
fn anchored_eval_matches_exhaustive_small_n() {
    for n in 1..=8usize {
        // every pattern over {0,1,*}^n with a nonempty domain
        for code in 0..3usize.pow(n as u32) {
            let text: String = (0..n).map(|i| ['0', '1', '*'][code / 3usize.pow(i as u32) % 3]).collect();
            if !text.contains(['0', '1']) {
                continue;
            }
            let f = MintermFunction::cyclic(text.parse().unwrap()).unwrap();
            if n > 6 && code % 7 != 0 {
                continue;
            }
            for m in 0..1u64 << n {
                let x = BitString::from_mask(m, n).unwrap();
                assert_eq!(f.eval(&x).unwrap(), f.eval_exhaustive(&x).unwrap(), "{text} at {x}");
            }
        }
    }
}

/// A failing property must shrink to a small input that still fails.
#[test]
fn shrinking_reports_minimal_counterexample() {
    use proptest::test_runner::{Config, TestError, TestRunner};
    let mut runner = TestRunner::new(Config { failure_persistence: None, ..Config::default() });
    // false once the pattern is long and holds a 0
    let result = runner.run(&pattern_strategy(1, 20), |p| {
        prop_assert!(p.len() < 5 || p.count_value(false) == 0);
        Ok(())
    });
    match result {
        Err(TestError::Fail(_, p)) => {
            assert_eq!(p.len(), 5, "shrunk to {p}");
            assert!(p.count_value(false) > 0);
        }
        other => panic!("expected a failure, got {other:?}"),
    }
}
