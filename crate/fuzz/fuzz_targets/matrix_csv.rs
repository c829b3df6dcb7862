#![no_main]

use libfuzzer_sys::fuzz_target;
use stokes_grassmann::io::MatrixDocument;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = MatrixDocument::from_csv(s) {
        assert_eq!(MatrixDocument::from_csv(&doc.to_csv()).ok(), Some(doc));
    }
});
