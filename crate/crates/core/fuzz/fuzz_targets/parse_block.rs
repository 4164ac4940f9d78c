#![no_main]
use libfuzzer_sys::fuzz_target;
use mtbs::Block;

fuzz_target!(|data: &str| {
    if let Ok(b) = data.parse::<Block>() {
        assert!(b.indices().windows(2).all(|w| w[0] < w[1]));
        assert_eq!(b.to_string().parse::<Block>().unwrap(), b);
    }
});
