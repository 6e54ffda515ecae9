use crate::coloring::{Color, EdgeColoring};
use crate::error::ConstructionError;
use crate::graph::gen_complete_bipartite;

use super::{finish, Construction, ConstructionResult};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Latin-square coloring of `K_{d,d}` with colors `1..=d`, 1-based indices.
fn base_color(d: usize, i: usize, j: usize) -> Color {
    let cyclic = 1 + (i + j - 2) % d;
    if i + j == d + 1 {
        debug_assert_eq!(cyclic, d);
        d as Color
    } else {
        cyclic as Color
    }
}

/// Proper `b`-coloring of `K_{a,b}` (labeled as by [`gen_complete_bipartite`])
/// with `1 + b / gcd(a, b)` palettes: blocks of `d = gcd(a, b)` consecutive
/// vertices on either side receive a shifted copy of a `K_{d,d}` Latin
/// square, the shift `d * h` depending on the block pair.
pub fn color_complete_bipartite(a: usize, b: usize) -> Result<ConstructionResult, ConstructionError> {
    if a == 0 || a >= b {
        return Err(ConstructionError::InvalidParameter(format!(
            "need 1 <= a < b, got ({a}, {b})"
        )));
    }
    let g = gen_complete_bipartite(a, b)?;
    let d = gcd(a, b);
    let blocks = b / d;
    let fold = |i: usize| 1 + (i - 1) % d;
    let mut coloring = EdgeColoring::uncolored(g.edge_count());
    for i in 1..=a {
        for j in 1..=b {
            let h = ((i - 1) / d + (j - 1) / d) % blocks;
            let color = base_color(d, fold(i), fold(j)) + (d * h) as Color;
            coloring.set((i - 1) * b + (j - 1), color);
        }
    }
    finish(&g, coloring, 1 + blocks as u64, Construction::CompleteBipartite)
}
