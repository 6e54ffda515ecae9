//! Fixed inputs shared by the benchmarks.

use palette_core::graph::{gen_complete_bipartite, gen_grid, gen_random_biregular, gen_random_even_bipartite};
use palette_core::Graph;

/// Small graphs for the exact solver, each within a few milliseconds.
pub fn exact_inputs() -> Vec<(&'static str, Graph)> {
    vec![
        ("grid-3x3", gen_grid(3, 3).unwrap()),
        ("grid-2x5", gen_grid(2, 5).unwrap()),
        ("k2-4", gen_complete_bipartite(2, 4).unwrap()),
        ("k3-4", gen_complete_bipartite(3, 4).unwrap()),
    ]
}

/// Larger biregular graphs for the constructions.
pub fn biregular_inputs() -> Vec<(&'static str, Graph)> {
    vec![
        ("2-7", gen_random_biregular(2, 7, 4, 1).unwrap()),
        ("3-9", gen_random_biregular(3, 9, 4, 1).unwrap()),
        ("4-8", gen_random_biregular(4, 8, 4, 1).unwrap()),
        ("5-10", gen_random_biregular(5, 10, 4, 1).unwrap()),
        ("6-12", gen_random_biregular(6, 12, 4, 1).unwrap()),
    ]
}

pub fn even_inputs() -> Vec<(&'static str, Graph)> {
    vec![
        ("delta-6", gen_random_even_bipartite(6, 3).unwrap()),
        ("delta-10", gen_random_even_bipartite(10, 3).unwrap()),
    ]
}
