#![no_main]

use libfuzzer_sys::fuzz_target;
use phylocount::bigcount::{format_record, parse_record};

fuzz_target!(|data: &[u8]| {
    let Ok(line) = std::str::from_utf8(data) else { return };
    if let Ok(record) = parse_record(line, 1) {
        assert_eq!(format_record(record.family, &record.row), line);
    }
});
