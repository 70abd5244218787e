#![no_main]

use flowroots::graph::format::{detect, parse, parse_all};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let format = detect(data);
    let single = parse(data, None);
    let explicit = parse(data, Some(format));
    assert_eq!(single.is_ok(), explicit.is_ok());
    for record in parse_all(data, None) {
        assert!(record.line >= 1);
    }
});
