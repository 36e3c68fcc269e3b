#![no_main]
use labelcut::gadgets::{parse_gadget_map, write_gadget_map};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(value) = parse_gadget_map(text) {
        let canonical = write_gadget_map(&value);
        let again = parse_gadget_map(&canonical).expect("canonical output must re-parse");
        assert_eq!(write_gadget_map(&again), canonical);
    }
});
