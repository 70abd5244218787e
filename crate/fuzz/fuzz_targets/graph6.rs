#![no_main]

use flowroots::graph::format::{parse_graph6, to_graph6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_graph6(data) {
        let text = to_graph6(&g).expect("parsed graph6 is simple");
        let back = parse_graph6(text.as_bytes()).expect("re-encoded graph6 parses");
        assert_eq!(back.n(), g.n());
        assert_eq!(back.simple_pairs(), g.simple_pairs());
    }
});
