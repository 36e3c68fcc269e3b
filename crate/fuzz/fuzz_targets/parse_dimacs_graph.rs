#![no_main]
use labelcut::instances::format::{parse_dimacs_graph, write_dimacs_graph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(value) = parse_dimacs_graph(text) {
        let canonical = write_dimacs_graph(&value);
        let again = parse_dimacs_graph(&canonical).expect("canonical output must re-parse");
        assert_eq!(write_dimacs_graph(&again), canonical);
    }
});
