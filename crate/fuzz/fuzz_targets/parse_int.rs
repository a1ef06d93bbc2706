#![no_main]

use aztec20v_core::exactcore::parse_int;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_int(s) {
        let printed = v.to_string();
        assert_eq!(parse_int(&printed).expect("printed integers parse"), v);
    }
});
