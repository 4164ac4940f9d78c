#![no_main]
use libfuzzer_sys::fuzz_target;
use mtbs::BitString;

fuzz_target!(|data: &str| {
    if let Ok(x) = data.parse::<BitString>() {
        assert_eq!(x.to_string().parse::<BitString>().unwrap(), x);
        assert_eq!(x.to_pattern().domain().len(), x.len());
    }
});
