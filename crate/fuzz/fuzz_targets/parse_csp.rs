#![no_main]
use labelcut::instances::format::{parse_csp, write_csp};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(value) = parse_csp(text) {
        let canonical = write_csp(&value);
        let again = parse_csp(&canonical).expect("canonical output must re-parse");
        assert_eq!(write_csp(&again), canonical);
    }
});
