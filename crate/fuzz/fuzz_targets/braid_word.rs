#![no_main]

use libfuzzer_sys::fuzz_target;
use stokes_grassmann::io::parse_matrix_literal;
use stokes_grassmann::mutations::{BraidWord, UnipotentMatrix};

// Input: first line is a matrix literal, the rest a braid word.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let (matrix, word) = s.split_once('\n').unwrap_or(("1,1;0,1", s));
    let Ok(word) = word.parse::<BraidWord>() else { return };
    if word.len() > 16 {
        return;
    }
    let Ok(g) = parse_matrix_literal(matrix).and_then(UnipotentMatrix::new) else { return };
    if g.size() > 6 || g.as_matrix().iter_rows().flatten().any(|x| x.bits() > 32) {
        return;
    }
    if let Ok(h) = word.apply(&g) {
        assert_eq!(word.inverse().apply(&h).ok(), Some(g));
    }
});
