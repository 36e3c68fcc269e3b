#![no_main]
use labelcut::instances::format::{parse_dcmc, write_dcmc};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(value) = parse_dcmc(text) {
        let canonical = write_dcmc(&value);
        let again = parse_dcmc(&canonical).expect("canonical output must re-parse");
        assert_eq!(write_dcmc(&again), canonical);
    }
});
