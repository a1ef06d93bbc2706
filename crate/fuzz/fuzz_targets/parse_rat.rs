#![no_main]

use aztec20v_core::exactcore::Rat;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = s.parse::<Rat>() {
        // Printed form is reduced with a positive denominator.
        let printed = r.to_string();
        let back: Rat = printed.parse().expect("printed rationals parse");
        assert_eq!(back, r);
        assert_eq!(back.to_string(), printed);
    }
});
