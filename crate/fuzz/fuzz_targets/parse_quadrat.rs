#![no_main]

use aztec20v_core::exactcore::{Field, QuadRat, Ring};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(q) = s.parse::<QuadRat>() {
        let back: QuadRat = q.to_string().parse().expect("printed values parse");
        assert_eq!(back, q);
        if !q.is_zero() {
            let inv = q.inverse().expect("nonzero elements are invertible");
            assert!(q.times(&inv).is_one());
        }
    }
});
