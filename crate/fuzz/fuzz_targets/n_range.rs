#![no_main]

use libfuzzer_sys::fuzz_target;
use phylocount::config::NRange;

fuzz_target!(|s: &str| {
    if let Ok(range) = s.parse::<NRange>() {
        assert!(range.lo <= range.hi);
        assert_eq!(range.to_string().parse::<NRange>().unwrap(), range);
    }
});
