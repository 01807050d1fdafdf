#![no_main]

use libfuzzer_sys::fuzz_target;
use vrhom::field::Coefficients;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = text.parse::<Coefficients>() {
        assert_eq!(c.to_string().parse::<Coefficients>().expect("re-parse"), c);
    }
});
