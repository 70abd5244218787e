#![no_main]

use flowroots::graph::format::{parse_sparse6, to_sparse6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_sparse6(data) {
        let back = parse_sparse6(to_sparse6(&g).as_bytes()).expect("re-encoded sparse6 parses");
        assert_eq!(back.n(), g.n());
        assert_eq!(back.m(), g.m());
        if g.n() <= 64 {
            assert_eq!(back.multiplicity_matrix(), g.multiplicity_matrix());
        }
    }
});
