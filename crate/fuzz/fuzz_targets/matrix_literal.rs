#![no_main]

use libfuzzer_sys::fuzz_target;
use stokes_grassmann::io::parse_matrix_literal;
use stokes_grassmann::matrix::det_exact;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(m) = parse_matrix_literal(s) else { return };
    assert_eq!(parse_matrix_literal(&m.to_string()).ok(), Some(m.clone()));
    if m.is_square() && m.rows() <= 8 {
        let _ = det_exact(&m);
    }
});
