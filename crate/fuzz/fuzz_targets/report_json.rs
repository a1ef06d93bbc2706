#![no_main]

use aztec20v_core::report::Report;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = Report::from_json(s) {
        let back = Report::from_json(&r.to_json()).expect("own output parses");
        assert_eq!(back, r);
    }
});
