#![no_main]

use libfuzzer_sys::fuzz_target;
use sgatoms::ffpoly::parse_poly;
use sgatoms::FieldSpec;

const PRIMES: [u32; 5] = [2, 3, 5, 7, 251];

// first byte picks the field, the rest is the text
fuzz_target!(|data: &[u8]| {
    let Some((&selector, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let field = FieldSpec::new(PRIMES[selector as usize % PRIMES.len()]).unwrap();
    if let Ok(f) = parse_poly(text, field) {
        assert_eq!(parse_poly(&f.to_string(), field).unwrap(), f);
    }
});
