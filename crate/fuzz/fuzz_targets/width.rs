#![no_main]

use libfuzzer_sys::fuzz_target;
use num_traits::Signed;
use phylocount::config::Width;

fuzz_target!(|s: &str| {
    if let Ok(w) = s.parse::<Width>() {
        assert!(w.value().is_positive());
        assert_eq!(w.to_string().parse::<Width>().unwrap(), w);
    }
});
