#![no_main]

use aztec20v_core::oracles::{count_20v_with, BoundarySpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = BoundarySpec::from_json(s) {
        let back = BoundarySpec::from_json(&spec.to_json()).expect("validated specs round-trip");
        assert_eq!(back, spec);
        // Small domains are cheap enough to sweep on every input.
        if spec.n <= 3 {
            let c = count_20v_with(&spec, true).expect("validated specs are countable");
            assert!(c.is_consistent());
        }
    }
});
