#![no_main]

use libfuzzer_sys::fuzz_target;
use phylocount::bigcount::{parse_cache, write_cache};

// Accepted files re-serialize byte for byte.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(records) = parse_cache(text) {
        assert_eq!(write_cache(&records), text);
    }
});
