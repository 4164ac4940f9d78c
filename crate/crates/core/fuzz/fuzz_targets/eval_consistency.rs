#![no_main]
use libfuzzer_sys::fuzz_target;
use mtbs::{BitString, MintermFunction, Pattern};

// "<pattern> <input>": the anchored evaluator must match the exhaustive one.
fuzz_target!(|data: &str| {
    let Some((p, x)) = data.split_once(' ') else { return };
    let (Ok(p), Ok(x)) = (p.parse::<Pattern>(), x.parse::<BitString>()) else { return };
    if p.len() != x.len() || p.len() > 256 {
        return;
    }
    if let Ok(f) = MintermFunction::cyclic(p) {
        assert_eq!(f.eval(&x).unwrap(), f.eval_exhaustive(&x).unwrap());
    }
});
