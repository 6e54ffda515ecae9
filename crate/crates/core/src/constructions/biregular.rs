//! Colorings of `(a, b)`-biregular families.
//!
//! Throughout, X is the side of degree `a` and Y the side of degree `b`
//! (see [`biregular_bipartition`]). Most constructions follow one pattern:
//! split vertices so the graph becomes regular, take a perfect matching,
//! pull it back to a subgraph `F`, color `G - F` with an even scheme and give
//! the edges of `F` fresh colors.

use crate::coloring::{Color, EdgeColoring};
use crate::decompose::{
    konig_coloring, maximum_matching, parity_split, peel_perfect_matchings, split_part_vertices, Matching,
};
use crate::error::ConstructionError;
use crate::graph::{biregular_bipartition, Bipartition, BiregularProfile, EdgeId, Graph, Side, VertexId};

use super::even::{doubling_coloring, even_coloring};
use super::{finish, profile_mismatch, Construction, ConstructionResult};

/// Default node budget for the interval-coloring search behind
/// [`color_2_odd`].
pub const DEFAULT_INTERVAL_BUDGET: u64 = 10_000_000;

fn oriented(g: &Graph, expected: &str) -> Result<(BiregularProfile, Bipartition), ConstructionError> {
    biregular_bipartition(g).ok_or_else(|| profile_mismatch(expected, g))
}

fn perfect_matching(g: &Graph, bip: &Bipartition) -> Result<Matching, ConstructionError> {
    let m = maximum_matching(g, bip);
    let covered = m.covered(g);
    match (0..g.vertex_count()).find(|&v| g.degree(v) > 0 && !covered[v]) {
        Some(v) => Err(ConstructionError::Internal(format!(
            "regular bipartite graph without perfect matching (vertex {v})"
        ))),
        None => Ok(m),
    }
}

fn complement(g: &Graph, m: &Matching) -> Vec<EdgeId> {
    (0..g.edge_count()).filter(|&e| !m.contains(e)).collect()
}

/// Give the `f` edges at each Y vertex the colors `first, first+1, ...` in
/// edge-index order.
fn color_at_y(g: &Graph, bip: &Bipartition, f: &Matching, first: Color, coloring: &mut EdgeColoring) {
    for y in bip.vertices_on(Side::Y) {
        for (color, &e) in (first..).zip(g.incident(y).iter().filter(|&&e| f.contains(e))) {
            coloring.set(e, color);
        }
    }
}

/// Color the even graph `g` by red/blue halves, blue shifted past red.
fn red_blue_coloring(g: &Graph) -> Result<EdgeColoring, ConstructionError> {
    let (red, blue) = parity_split(g)?;
    let shift = (g.max_degree() / 2) as Color;
    let mut coloring = EdgeColoring::uncolored(g.edge_count());
    coloring.absorb(&even_coloring(&g.edge_subgraph(&red))?, &red, 0);
    coloring.absorb(&even_coloring(&g.edge_subgraph(&blue))?, &blue, shift);
    Ok(coloring)
}

/// Split every vertex into copies of degree `target` on both sides and
/// return the resulting regular split graph's perfect matching, as edge ids
/// of `g`.
fn split_both_and_match(
    g: &Graph,
    bip: &Bipartition,
    x_target: usize,
    y_target: usize,
) -> Result<Matching, ConstructionError> {
    let once = split_part_vertices(g, bip, Side::X, x_target)?;
    let twice = split_part_vertices(&once.graph, &once.bipartition, Side::Y, y_target)?;
    perfect_matching(&twice.graph, &twice.bipartition)
}

/// `(3, 3r)` or `(3r-3, 3r)`-biregular, `r >= 2`: at most `r^2 + 1`
/// palettes.
pub fn color_3_3r(g: &Graph) -> Result<ConstructionResult, ConstructionError> {
    const EXPECTED: &str = "(3, 3r) or (3r-3, 3r)-biregular with r >= 2";
    let (p, bip) = oriented(g, EXPECTED)?;
    if p.b % 3 != 0 || p.b < 6 || !(p.a == 3 || p.a + 3 == p.b) {
        return Err(profile_mismatch(EXPECTED, g));
    }
    let r = p.b / 3;
    let mut coloring = EdgeColoring::uncolored(g.edge_count());
    let f = split_both_and_match(g, &bip, 3, 3)?;
    let rest = complement(g, &f);
    coloring.absorb(&even_coloring(&g.edge_subgraph(&rest))?, &rest, 0);
    let shift = 2 * r as Color;
    let construction = if p.a == 3 {
        color_at_y(g, &bip, &f, shift + 1, &mut coloring);
        Construction::ThreeByThreeR
    } else {
        let f_edges = f.edges().to_vec();
        let sub = konig_coloring(&g.edge_subgraph(&f_edges), &bip)?;
        coloring.absorb(&sub, &f_edges, shift);
        Construction::ThreeRMinusThree
    };
    finish(g, coloring, (r * r) as u64 + 1, construction)
}

/// `(4, 4r)` or `(4r-4, 4r)`-biregular, `r >= 2`: at most `r^2 + 1`
/// palettes.
pub fn color_4_4r(g: &Graph) -> Result<ConstructionResult, ConstructionError> {
    const EXPECTED: &str = "(4, 4r) or (4r-4, 4r)-biregular with r >= 2";
    let (p, _) = oriented(g, EXPECTED)?;
    if p.b % 4 != 0 || p.b < 8 || !(p.a == 4 || p.a + 4 == p.b) {
        return Err(profile_mismatch(EXPECTED, g));
    }
    let r = p.b / 4;
    let construction = if p.a == 4 {
        Construction::FourByFourR
    } else {
        Construction::FourRMinusFour
    };
    finish(g, red_blue_coloring(g)?, (r * r) as u64 + 1, construction)
}

/// `(5, 5r)`-biregular, `r >= 2`: at most `r^3 + 1` palettes.
pub fn color_5_5r(g: &Graph) -> Result<ConstructionResult, ConstructionError> {
    const EXPECTED: &str = "(5, 5r)-biregular with r >= 2";
    let (p, bip) = oriented(g, EXPECTED)?;
    if p.a != 5 || p.b % 5 != 0 || p.b < 10 {
        return Err(profile_mismatch(EXPECTED, g));
    }
    let r = p.b / 5;
    let f = split_both_and_match(g, &bip, 5, 5)?;
    let rest = complement(g, &f);
    let mut coloring = EdgeColoring::uncolored(g.edge_count());
    coloring.absorb(&red_blue_coloring(&g.edge_subgraph(&rest))?, &rest, 0);
    color_at_y(g, &bip, &f, 4 * r as Color + 1, &mut coloring);
    finish(g, coloring, (r * r * r) as u64 + 1, Construction::FiveByFiveR)
}

// (2k, 4k)-biregular: k edge-disjoint (2,4)-biregular layers, layer i
// colored with 4i+1..=4i+4.
fn layered_coloring(g: &Graph, bip: &Bipartition, k: usize) -> Result<EdgeColoring, ConstructionError> {
    let once = split_part_vertices(g, bip, Side::X, k)?;
    let twice = split_part_vertices(&once.graph, &once.bipartition, Side::Y, k)?;
    let layers = peel_perfect_matchings(&twice.graph, &twice.bipartition, k)?;
    let mut coloring = EdgeColoring::uncolored(g.edge_count());
    for (i, layer) in layers.iter().enumerate() {
        coloring.absorb(&even_coloring(&g.edge_subgraph(layer))?, layer, 4 * i as Color);
    }
    Ok(coloring)
}

/// `(r, 2r)`-biregular, `r >= 2`: at most `2^⌈r/2⌉ + 1` palettes.
pub fn color_r_2r(g: &Graph) -> Result<ConstructionResult, ConstructionError> {
    const EXPECTED: &str = "(r, 2r)-biregular with r >= 2";
    let (p, bip) = oriented(g, EXPECTED)?;
    if p.a < 2 || p.b != 2 * p.a {
        return Err(profile_mismatch(EXPECTED, g));
    }
    let r = p.a;
    let k = r / 2;
    let bound = (1u64 << r.div_ceil(2)) + 1;
    let coloring = if r % 2 == 0 {
        layered_coloring(g, &bip, k)?
    } else {
        let once = split_part_vertices(g, &bip, Side::Y, r)?;
        let f = perfect_matching(&once.graph, &once.bipartition)?;
        let rest = complement(g, &f);
        let mut coloring = EdgeColoring::uncolored(g.edge_count());
        coloring.absorb(&layered_coloring(&g.edge_subgraph(&rest), &bip, k)?, &rest, 0);
        color_at_y(g, &bip, &f, 4 * k as Color + 1, &mut coloring);
        coloring
    };
    finish(g, coloring, bound, Construction::RByTwoR)
}

/// `(3, 5)`-biregular: at most 7 palettes. A matching saturating the
/// degree-5 side gets color 5; the rest (maximum degree 4) is colored by
/// doubling.
pub fn color_3_5(g: &Graph) -> Result<ConstructionResult, ConstructionError> {
    const EXPECTED: &str = "(3, 5)-biregular";
    let (p, bip) = oriented(g, EXPECTED)?;
    if (p.a, p.b) != (3, 5) {
        return Err(profile_mismatch(EXPECTED, g));
    }
    let m = maximum_matching(g, &bip);
    let covered = m.covered(g);
    if let Some(y) = bip.vertices_on(Side::Y).into_iter().find(|&y| !covered[y]) {
        return Err(ConstructionError::Internal(format!(
            "maximum matching misses degree-5 vertex {y}"
        )));
    }
    let rest = complement(g, &m);
    let mut coloring = EdgeColoring::uncolored(g.edge_count());
    coloring.absorb(&doubling_coloring(&g.edge_subgraph(&rest))?, &rest, 0);
    for &e in m.edges() {
        coloring.set(e, 5);
    }
    finish(g, coloring, 7, Construction::ThreeByFive)
}

/// `(2, 2r+1)`-biregular: at most `2r + 2` palettes, with the default
/// search budget.
pub fn color_2_odd(g: &Graph) -> Result<ConstructionResult, ConstructionError> {
    color_2_odd_with_budget(g, DEFAULT_INTERVAL_BUDGET)
}

/// Search an interval `(2r+2)`-coloring, then reduce colors modulo `2r+1`.
/// The result is a cyclic interval coloring: every Y vertex sees all
/// `2r+1` colors and every X vertex a cyclically consecutive pair.
pub fn color_2_odd_with_budget(g: &Graph, budget: u64) -> Result<ConstructionResult, ConstructionError> {
    const EXPECTED: &str = "(2, 2r+1)-biregular with r >= 1";
    let (p, bip) = oriented(g, EXPECTED)?;
    if p.a != 2 || p.b % 2 == 0 || p.b < 3 || p.b + 1 > 64 {
        return Err(profile_mismatch(EXPECTED, g));
    }
    let interval = IntervalSearch::new(g, &bip, p.b as Color + 1, budget).run()?;
    let modulus = p.b as Color;
    let reduced = interval.as_slice().iter().map(|&c| (c - 1) % modulus + 1).collect();
    finish(
        g,
        EdgeColoring::from_colors(reduced),
        p.b as u64 + 1,
        Construction::TwoByOdd,
    )
}

struct IntervalSearch<'a> {
    g: &'a Graph,
    top: Color,
    // per X vertex: its two edges with their Y endpoints
    pairs: Vec<[(EdgeId, VertexId); 2]>,
    used: Vec<u64>,
    chosen: Vec<Option<(Color, Color)>>,
    nodes: u64,
    budget: u64,
}

impl<'a> IntervalSearch<'a> {
    fn new(g: &'a Graph, bip: &Bipartition, top: Color, budget: u64) -> Self {
        let pairs: Vec<_> = bip
            .vertices_on(Side::X)
            .into_iter()
            .map(|x| {
                let inc = g.incident(x);
                [(inc[0], g.other_end(inc[0], x)), (inc[1], g.other_end(inc[1], x))]
            })
            .collect();
        IntervalSearch {
            g,
            top,
            chosen: vec![None; pairs.len()],
            pairs,
            used: vec![0; g.vertex_count()],
            nodes: 0,
            budget,
        }
    }

    fn window_ok(&self, mask: u64) -> bool {
        let low = 1u64 << 1;
        let high = 1u64 << self.top;
        mask & low == 0 || mask & high == 0
    }

    fn options(&self, x: usize) -> Vec<(Color, Color)> {
        let [(_, y1), (_, y2)] = self.pairs[x];
        let mut out = Vec::new();
        for c1 in 1..=self.top {
            for c2 in [c1.wrapping_sub(1), c1 + 1] {
                if c2 == 0 || c2 > self.top {
                    continue;
                }
                let (b1, b2) = (1u64 << c1, 1u64 << c2);
                if self.used[y1] & b1 != 0 || self.used[y2] & b2 != 0 {
                    continue;
                }
                let ok = if y1 == y2 {
                    self.window_ok(self.used[y1] | b1 | b2)
                } else {
                    self.window_ok(self.used[y1] | b1) && self.window_ok(self.used[y2] | b2)
                };
                if ok {
                    out.push((c1, c2));
                }
            }
        }
        out
    }

    fn run(mut self) -> Result<EdgeColoring, ConstructionError> {
        if !self.search()? {
            return Err(ConstructionError::Internal(
                "no interval coloring exists for this graph".into(),
            ));
        }
        let mut coloring = EdgeColoring::uncolored(self.g.edge_count());
        for (pair, choice) in self.pairs.iter().zip(&self.chosen) {
            let (c1, c2) = choice.expect("search completed");
            coloring.set(pair[0].0, c1);
            coloring.set(pair[1].0, c2);
        }
        Ok(coloring)
    }

    fn search(&mut self) -> Result<bool, ConstructionError> {
        let mut best: Option<(usize, Vec<(Color, Color)>)> = None;
        for x in (0..self.pairs.len()).filter(|&x| self.chosen[x].is_none()) {
            let opts = self.options(x);
            if best.as_ref().is_none_or(|(_, b)| opts.len() < b.len()) {
                let empty = opts.is_empty();
                best = Some((x, opts));
                if empty {
                    break;
                }
            }
        }
        let Some((x, opts)) = best else {
            return Ok(true);
        };
        let [(_, y1), (_, y2)] = self.pairs[x];
        for (c1, c2) in opts {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(ConstructionError::SearchBudgetExhausted { nodes: self.budget });
            }
            self.used[y1] |= 1 << c1;
            self.used[y2] |= 1 << c2;
            self.chosen[x] = Some((c1, c2));
            if self.search()? {
                return Ok(true);
            }
            self.chosen[x] = None;
            self.used[y1] &= !(1u64 << c1);
            self.used[y2] &= !(1u64 << c2);
        }
        Ok(false)
    }
}
