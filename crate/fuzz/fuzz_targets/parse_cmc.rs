#![no_main]
use labelcut::instances::format::{parse_cmc, write_cmc};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(value) = parse_cmc(text) {
        let canonical = write_cmc(&value);
        let again = parse_cmc(&canonical).expect("canonical output must re-parse");
        assert_eq!(write_cmc(&again), canonical);
    }
});
