#![no_main]
use libfuzzer_sys::fuzz_target;
use mtbs::Pattern;

fuzz_target!(|data: &str| {
    if let Ok(p) = data.parse::<Pattern>() {
        let text = p.to_string();
        assert_eq!(text.parse::<Pattern>().unwrap(), p);
        assert!(p.domain().iter().all(|&i| i < p.len()));
    }
});
