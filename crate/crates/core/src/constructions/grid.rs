//! Palette-optimal colorings of the grids `G(m, n)`.
//!
//! Cells are 1-based `(row, column)` pairs. Two rule sets are used: the
//! four-color scheme for grids with an even number of rows, and a five-palette
//! scheme for 3-row grids. Odd-by-odd grids with at least five rows stack the
//! even scheme on `m-3` rows over the 3-row scheme and join them with color 4.

use crate::coloring::{Color, EdgeColoring};
use crate::error::ConstructionError;
use crate::graph::gen_grid;

use super::{finish, Construction, ConstructionResult};

type Cell = (usize, usize);
type Rule = (Cell, Cell, Color);

/// Palette index of `G(m, n)` for `m, n >= 2`.
pub fn grid_palette_index(m: usize, n: usize) -> u64 {
    match (m.min(n), m.max(n)) {
        (2, 2) => 1,
        (2, _) => 2,
        _ if (m * n).is_multiple_of(2) => 3,
        _ => 5,
    }
}

// Four-color scheme; requires an even number of rows.
fn even_rows(rows: usize, n: usize) -> Vec<Rule> {
    debug_assert!(rows.is_multiple_of(2));
    let mut rules = Vec::new();
    for i in 1..=rows {
        for j in 1..n {
            rules.push(((i, j), (i, j + 1), if j % 2 == 1 { 2 } else { 1 }));
        }
    }
    for i in 1..=rows / 2 {
        for j in 1..n {
            rules.push(((2 * i - 1, j), (2 * i, j), if j == 1 { 1 } else { 3 }));
        }
        rules.push(((2 * i - 1, n), (2 * i, n), if n % 2 == 1 { 2 } else { 1 }));
    }
    for i in 1..rows / 2 {
        for j in 1..=n {
            rules.push(((2 * i, j), (2 * i + 1, j), if j == 1 || j == n { 3 } else { 4 }));
        }
    }
    rules
}

// Five-palette scheme on three rows.
fn three_rows(n: usize) -> Vec<Rule> {
    let mut rules = Vec::new();
    for j in 1..n {
        let odd = j % 2 == 1;
        rules.push(((1, j), (1, j + 1), if odd { 2 } else { 1 }));
        rules.push(((2, j), (2, j + 1), if odd { 2 } else { 4 }));
        rules.push(((3, j), (3, j + 1), if odd { 4 } else { 2 }));
    }
    for j in 2..n {
        rules.push(((1, j), (2, j), 3));
        rules.push(((2, j), (3, j), 1));
    }
    rules.push(((1, 1), (2, 1), 1));
    rules.push(((2, n), (3, n), 1));
    rules.push(((1, n), (2, n), 2));
    rules.push(((2, 1), (3, 1), 3));
    rules
}

fn transpose(rules: Vec<Rule>) -> Vec<Rule> {
    rules
        .into_iter()
        .map(|((a, b), (c, d), col)| ((b, a), (d, c), col))
        .collect()
}

fn odd_by_odd(m: usize, n: usize) -> Vec<Rule> {
    if m == 3 {
        return three_rows(n);
    }
    let top = m - 3;
    let mut rules = even_rows(top, n);
    rules.extend(
        three_rows(n)
            .into_iter()
            .map(|((a, b), (c, d), col)| ((a + top, b), (c + top, d), col)),
    );
    rules.extend((1..=n).map(|j| ((top, j), (top + 1, j), 4)));
    rules
}

fn grid_rules(m: usize, n: usize) -> Vec<Rule> {
    if m.is_multiple_of(2) {
        even_rows(m, n)
    } else if n.is_multiple_of(2) {
        transpose(even_rows(n, m))
    } else if m <= n {
        odd_by_odd(m, n)
    } else {
        transpose(odd_by_odd(n, m))
    }
}

/// Coloring of `G(m, n)` (as labeled by [`gen_grid`]) attaining its palette
/// index exactly.
pub fn color_grid(m: usize, n: usize) -> Result<ConstructionResult, ConstructionError> {
    let g = gen_grid(m, n)?;
    let mut coloring = EdgeColoring::uncolored(g.edge_count());
    for (p, q, color) in grid_rules(m, n) {
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        let e = if p.0 == q.0 {
            debug_assert_eq!(p.1 + 1, q.1);
            (p.0 - 1) * (n - 1) + (p.1 - 1)
        } else {
            debug_assert_eq!((p.0 + 1, p.1), q);
            m * (n - 1) + (p.0 - 1) * n + (p.1 - 1)
        };
        if coloring.get(e).is_some() {
            return Err(ConstructionError::Internal(format!("grid edge {e} colored twice")));
        }
        coloring.set(e, color);
    }
    finish(&g, coloring, grid_palette_index(m, n), Construction::Grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::palette_summary;
    use crate::graph::gen_grid;

    #[test]
    fn grid_values_exact_up_to_eight() {
        for m in 2..=8 {
            for n in 2..=8 {
                let r = color_grid(m, n).unwrap();
                let g = gen_grid(m, n).unwrap();
                let s = palette_summary(&g, &r.coloring).unwrap();
                assert_eq!(s.distinct_palettes as u64, grid_palette_index(m, n), "G({m},{n})");
                assert!(r.colors_used <= 4);
            }
        }
    }

    #[test]
    fn even_scheme_palettes_are_nested() {
        let g = gen_grid(4, 5).unwrap();
        let r = color_grid(4, 5).unwrap();
        let s = palette_summary(&g, &r.coloring).unwrap();
        let allowed = [vec![1, 2], vec![1, 2, 3], vec![1, 2, 3, 4]];
        for p in s.palette_multiplicity.keys() {
            assert!(allowed.contains(&p.colors().to_vec()));
        }
    }
}
