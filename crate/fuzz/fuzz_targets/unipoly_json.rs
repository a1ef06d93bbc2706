#![no_main]

use aztec20v_core::exactcore::{Rat, Ring, UniPoly};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(p) = serde_json::from_slice::<UniPoly<Rat>>(data) {
        let text = serde_json::to_string(&p).expect("polynomials serialize");
        let back: UniPoly<Rat> = serde_json::from_str(&text).expect("own output parses");
        assert_eq!(back, p);
        if let Some(d) = p.degree() {
            assert!(!p.leading().is_some_and(|c| c.is_zero()));
            assert_eq!(p.coeffs().len(), d + 1);
        }
    }
});
