#![no_main]

use libfuzzer_sys::fuzz_target;
use sgatoms::ffpoly::{format_bitmask, parse_bitmask};
use sgatoms::Polynomial;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(mask) = parse_bitmask(text) {
        let shown = format_bitmask(&Polynomial::from_bitmask(mask)).unwrap();
        assert_eq!(parse_bitmask(&shown[2..]).unwrap(), mask);
    }
});
