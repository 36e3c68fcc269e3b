#![no_main]
use labelcut::instances::format::{parse_psi, write_psi};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(value) = parse_psi(text) {
        let canonical = write_psi(&value);
        let again = parse_psi(&canonical).expect("canonical output must re-parse");
        assert_eq!(write_psi(&again), canonical);
    }
});
