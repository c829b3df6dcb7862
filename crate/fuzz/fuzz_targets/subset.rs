#![no_main]

use libfuzzer_sys::fuzz_target;
use stokes_grassmann::io::parse_subset;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(k) = parse_subset(s) {
        assert!(k.indices().windows(2).all(|w| w[0] < w[1]));
        assert_eq!(parse_subset(&k.to_string()).ok(), Some(k));
    }
});
