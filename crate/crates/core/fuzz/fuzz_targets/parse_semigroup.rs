#![no_main]

use libfuzzer_sys::fuzz_target;
use sgatoms::NumericalSemigroup;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = text.parse::<NumericalSemigroup>() {
        let again: NumericalSemigroup = s.to_string().parse().unwrap();
        assert_eq!(again, s);
        assert!(s.frobenius() < 0 || !s.contains(s.frobenius() as u64));
    }
});
