#![no_main]

use flowroots::planar::{emit_script, gen_chordal_planar, is_chordal, is_planar, parse_script, GenSpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(steps) = parse_script(text) else { return };
    assert_eq!(parse_script(&emit_script(&steps)).ok(), Some(steps.clone()));
    if steps.len() > 64 {
        return;
    }
    if let Ok(built) = gen_chordal_planar(&GenSpec::Script(text.to_string())) {
        assert!(is_chordal(&built.graph).chordal);
        assert!(is_planar(&built.graph));
    }
});
