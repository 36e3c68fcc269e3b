#![no_main]
use labelcut::instances::format::{parse_cnf, write_cnf};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(value) = parse_cnf(text) {
        let canonical = write_cnf(&value);
        let again = parse_cnf(&canonical).expect("canonical output must re-parse");
        assert_eq!(write_cnf(&again), canonical);
    }
});
