#![no_main]
use labelcut::embedding::format::{parse_embedding, write_embedding};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(value) = parse_embedding(text) {
        let canonical = write_embedding(&value);
        let again = parse_embedding(&canonical).expect("canonical output must re-parse");
        assert_eq!(write_embedding(&again), canonical);
    }
});
