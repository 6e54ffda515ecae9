use crate::coloring::{Color, EdgeColoring};
use crate::decompose::{matching_covering_max_degree, maximum_matching, two_factorization};
use crate::error::ConstructionError;
use crate::graph::{bipartition, even_closure, EdgeId, Graph};

use super::{binomial, finish, first_isolated, Construction, ConstructionResult};

/// `sum over d in D(G) of C(Δ/2, d/2)`.
pub fn even_bipartite_bound(g: &Graph) -> u64 {
    let half = (g.max_degree() / 2) as u64;
    g.degree_set()
        .into_iter()
        .map(|d| binomial(half, d as u64 / 2))
        .fold(0, u64::saturating_add)
}

/// Palette bound of the doubling construction: odd degrees contribute
/// `C(⌈Δ/2⌉, (d+1)/2) * (d+1)`, even degrees `C(⌈Δ/2⌉, d/2)`.
pub fn doubling_bound(g: &Graph) -> u64 {
    let half = g.max_degree().div_ceil(2) as u64;
    g.degree_set()
        .into_iter()
        .map(|d| {
            let d = d as u64;
            if d % 2 == 1 {
                binomial(half, d.div_ceil(2)).saturating_mul(d + 1)
            } else {
                binomial(half, d / 2)
            }
        })
        .fold(0, u64::saturating_add)
}

/// Proper `Δ`-coloring of an even bipartite graph in which every palette is
/// a union of pairs `{2i-1, 2i}`.
///
/// Each vertex of degree `2k` gets `Δ/2 - k` loops, the padded graph is split
/// into 2-factors, and after dropping the loops factor `i` is a union of even
/// cycles colored alternately `2i-1`, `2i`. Each cycle starts with `2i-1` at
/// its smallest vertex, on the smaller of that vertex's two cycle edges.
/// Isolated vertices are tolerated here.
pub(crate) fn even_coloring(g: &Graph) -> Result<EdgeColoring, ConstructionError> {
    let m = g.edge_count();
    let mut coloring = EdgeColoring::uncolored(m);
    if m == 0 {
        return Ok(coloring);
    }
    let delta = g.max_degree();
    let mut edges = g.edges().to_vec();
    for v in 0..g.vertex_count() {
        for _ in 0..(delta - g.degree(v)) / 2 {
            edges.push((v, v));
        }
    }
    let padded = Graph::with_loops(g.vertex_count(), edges)?;
    let factors = two_factorization(&padded)?;
    let mut at: Vec<Vec<EdgeId>> = vec![Vec::new(); g.vertex_count()];
    for (i, factor) in factors.factors.iter().enumerate() {
        let low = 2 * i as Color + 1;
        at.iter_mut().for_each(Vec::clear);
        for &e in factor.iter().filter(|&&e| e < m) {
            let (u, v) = g.endpoints(e);
            at[u].push(e);
            at[v].push(e);
        }
        for start in 0..g.vertex_count() {
            let Some(&first) = at[start].iter().min() else {
                continue;
            };
            if coloring.get(first).is_some() {
                continue;
            }
            let (mut cur, mut e, mut color) = (start, first, low);
            while coloring.get(e).is_none() {
                coloring.set(e, color);
                color = if color == low { low + 1 } else { low };
                cur = g.other_end(e, cur);
                e = *at[cur]
                    .iter()
                    .find(|&&f| f != e)
                    .ok_or_else(|| ConstructionError::Internal("factor is not 2-regular".into()))?;
            }
        }
    }
    Ok(coloring)
}

/// Doubling coloring restricted back to `g`; tolerates isolated vertices.
pub(crate) fn doubling_coloring(g: &Graph) -> Result<EdgeColoring, ConstructionError> {
    let closure = even_closure(g)?;
    let big = even_coloring(&closure.graph)?;
    let mut coloring = EdgeColoring::uncolored(g.edge_count());
    for (e, src) in closure.source_of.iter().enumerate() {
        if let (Some(src), Some(c)) = (src, big.get(e)) {
            coloring.set(*src, c);
        }
    }
    Ok(coloring)
}

fn check_bipartite_no_isolated(g: &Graph) -> Result<(), ConstructionError> {
    if g.has_loops() || bipartition(g).is_none() {
        return Err(ConstructionError::NotBipartite);
    }
    if let Some(v) = first_isolated(g) {
        return Err(ConstructionError::IsolatedVertex { vertex: v });
    }
    Ok(())
}

/// Coloring of an even bipartite graph with at most
/// [`even_bipartite_bound`] palettes.
pub fn color_even_bipartite(g: &Graph) -> Result<ConstructionResult, ConstructionError> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) % 2 == 1) {
        return Err(ConstructionError::OddDegree { vertex: v });
    }
    check_bipartite_no_isolated(g)?;
    let coloring = even_coloring(g)?;
    finish(g, coloring, even_bipartite_bound(g), Construction::EvenBipartite)
}

/// Coloring of any bipartite graph through its even closure, with at most
/// [`doubling_bound`] palettes (at most 11 when `Δ = 4`, at most 7 when in
/// addition there are no pendant vertices).
pub fn color_via_doubling(g: &Graph) -> Result<ConstructionResult, ConstructionError> {
    check_bipartite_no_isolated(g)?;
    let bound = doubling_bound(g);
    if g.max_degree() == 4 {
        debug_assert!(bound <= 11);
        debug_assert!(g.min_degree() < 2 || bound <= 7);
    }
    let coloring = doubling_coloring(g)?;
    finish(g, coloring, bound, Construction::Doubling)
}

/// Coloring of a bipartite graph with `Δ = 5`: a matching covering the
/// degree-5 vertices gets color 5 and the rest is colored by doubling with
/// colors `1..=4`. At most 23 palettes, or 12 when the graph has a perfect
/// matching (which is then used as the matching).
pub fn color_deg5(g: &Graph) -> Result<ConstructionResult, ConstructionError> {
    check_bipartite_no_isolated(g)?;
    if g.max_degree() != 5 {
        return Err(ConstructionError::InvalidParameter(format!(
            "maximum degree must be 5, got {}",
            g.max_degree()
        )));
    }
    let bip = bipartition(g).ok_or(ConstructionError::NotBipartite)?;
    let maximum = maximum_matching(g, &bip);
    let (matching, bound) = if 2 * maximum.len() == g.vertex_count() {
        (maximum, 12)
    } else {
        (matching_covering_max_degree(g, &bip)?, 23)
    };
    let rest: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| !matching.contains(e)).collect();
    let sub = doubling_coloring(&g.edge_subgraph(&rest))?;
    let mut coloring = EdgeColoring::uncolored(g.edge_count());
    coloring.absorb(&sub, &rest, 0);
    for &e in matching.edges() {
        coloring.set(e, 5);
    }
    finish(g, coloring, bound, Construction::Degree5Matching)
}
