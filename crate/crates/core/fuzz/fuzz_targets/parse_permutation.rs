#![no_main]
use libfuzzer_sys::fuzz_target;
use mtbs::Permutation;

fuzz_target!(|data: &str| {
    if let Ok(p) = data.parse::<Permutation>() {
        let inv = p.inverse();
        for i in 0..p.len() {
            assert_eq!(inv.image(p.image(i)), i);
        }
        let images = p.images().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        assert_eq!(images.parse::<Permutation>().unwrap(), p);
    }
});
