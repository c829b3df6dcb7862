#![no_main]

use libfuzzer_sys::fuzz_target;
use stokes_grassmann::io::parse_partition;
use stokes_grassmann::partitions::{partition_to_subset, subset_to_partition};
use stokes_grassmann::BoxContext;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(lambda) = parse_partition(s) else { return };
    // Parsed partitions must print back to something that parses the same.
    assert_eq!(parse_partition(&lambda.to_string()).ok(), Some(lambda.clone()));
    if !lambda.is_empty() && lambda.len() < 12 && lambda.first() < 12 {
        let ctx = BoxContext::new(lambda.len(), lambda.len() + lambda.first() as usize + 1).unwrap();
        let k = partition_to_subset(&lambda, ctx).unwrap();
        assert_eq!(subset_to_partition(&k, ctx), lambda);
    }
});
