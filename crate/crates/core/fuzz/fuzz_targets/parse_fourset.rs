#![no_main]
use libfuzzer_sys::fuzz_target;
use mtbs::FourSet;

fuzz_target!(|data: &str| {
    if let Ok(a) = data.parse::<FourSet>() {
        let e = a.elements();
        assert!(e.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(a.to_string().parse::<FourSet>().unwrap(), a);
    }
});
