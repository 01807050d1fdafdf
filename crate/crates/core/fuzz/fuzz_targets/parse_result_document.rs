#![no_main]

use libfuzzer_sys::fuzz_target;
use vrhom::io::parse_result_document;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = parse_result_document(text) {
        assert_eq!(parse_result_document(&doc.to_json()).expect("re-parse"), doc);
    }
});
