//! Shared fixtures for the benchmarks.

use matdegen::{catalog, Matroid};

/// Catalog matroids small enough for repeated timing, with short labels.
pub fn fixtures() -> Vec<(&'static str, Matroid)> {
    vec![
        ("fano", catalog::fano()),
        ("qs", catalog::qs()),
        ("sixpoint", catalog::six_point()),
        ("fanodual", catalog::fano_dual()),
        ("steiner348", catalog::steiner348()),
        ("k33dual", catalog::k33_dual()),
    ]
}
