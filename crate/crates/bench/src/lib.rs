//! Shared fixtures for the criterion benchmarks.

use shifted_core::{Partition, ShiftedDiagram};

/// Shapes used across benchmark groups, from trivial to the largest `n = 4` case
/// checked by the test suites.
pub fn shapes() -> Vec<(&'static str, Partition)> {
    [
        ("staircase-4", vec![], 4),
        ("example-4210", vec![4, 2, 1], 4),
        ("rect-3333", vec![3, 3, 3, 3], 4),
        ("staircase-6", vec![], 6),
    ]
    .into_iter()
    .map(|(name, parts, n)| (name, Partition::new(parts, n).expect("valid partition")))
    .collect()
}

pub fn diagram(lambda: &Partition) -> ShiftedDiagram {
    ShiftedDiagram::new(lambda.clone())
}
