#![no_main]

use libfuzzer_sys::fuzz_target;
use vrhom::io::{parse_space, serialize_space, SpaceFormat};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = parse_space(text, SpaceFormat::CsvDist) {
        // Whatever parses must survive a round trip.
        let out = serialize_space(&doc, SpaceFormat::Json).expect("every document has a JSON form");
        assert_eq!(parse_space(&out, SpaceFormat::Json).expect("re-parse"), doc);
    }
});
