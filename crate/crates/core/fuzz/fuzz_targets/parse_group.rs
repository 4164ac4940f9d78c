#![no_main]
use libfuzzer_sys::fuzz_target;
use mtbs::GroupSpec;

fuzz_target!(|data: &str| {
    // degrees stay small so closure enumeration is cheap
    if data.len() > 64 {
        return;
    }
    if let Ok(g) = data.parse::<GroupSpec>() {
        if g.degree() > 12 {
            return;
        }
        if let Ok(elements) = g.elements() {
            assert!(elements.iter().any(|e| e.is_identity()));
            assert_eq!(elements.degree(), g.degree());
        }
    }
});
