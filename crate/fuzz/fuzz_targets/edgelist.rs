#![no_main]

use flowroots::graph::format::{parse_edge_list, to_edge_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_edge_list(data) {
        let back = parse_edge_list(to_edge_list(&g).as_bytes()).expect("re-encoded edge list parses");
        assert_eq!((back.n(), back.m()), (g.n(), g.m()));
    }
});
