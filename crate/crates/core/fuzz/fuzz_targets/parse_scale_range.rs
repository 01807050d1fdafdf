#![no_main]

use libfuzzer_sys::fuzz_target;
use vrhom::io::parse_scale_range;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(scales) = parse_scale_range(text) {
        assert!(!scales.is_empty());
        assert!(scales.windows(2).all(|w| w[0].1 < w[1].1));
    }
});
