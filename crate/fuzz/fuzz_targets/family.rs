#![no_main]

use libfuzzer_sys::fuzz_target;
use phylocount::config::OutputFormat;
use phylocount::dist_stats::Family;

fuzz_target!(|s: &str| {
    if let Ok(f) = s.parse::<Family>() {
        assert_eq!(f.tag().parse::<Family>().unwrap(), f);
    }
    if let Ok(fmt) = s.parse::<OutputFormat>() {
        assert_eq!(fmt.to_string().parse::<OutputFormat>().unwrap(), fmt);
    }
});
