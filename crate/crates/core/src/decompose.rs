//! Decomposition toolbox: Eulerian circuits, 2-factorizations of even
//! regular multigraphs, bipartite matchings, König edge coloring, vertex
//! splitting and red/blue parity splits.
//!
//! Every routine breaks ties by the smallest vertex or edge index, so the
//! output is a pure function of the input graph.

use crate::coloring::{Color, EdgeColoring};
use crate::error::DecomposeError;
use crate::graph::{build_graph, components, Bipartition, EdgeId, Graph, Side, VertexId};

/// A set of pairwise non-adjacent edges of some host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<EdgeId>,
}

impl Matching {
    pub fn from_edges(mut edges: Vec<EdgeId>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Whether no two member edges of `g` share an endpoint.
    pub fn is_matching_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.vertex_count()];
        for &e in &self.edges {
            let (u, v) = g.endpoints(e);
            if u == v || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }

    pub fn covered(&self, g: &Graph) -> Vec<bool> {
        let mut covered = vec![false; g.vertex_count()];
        for &e in &self.edges {
            let (u, v) = g.endpoints(e);
            covered[u] = true;
            covered[v] = true;
        }
        covered
    }
}

/// Edge-disjoint factors that together cover every edge of the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSet {
    pub factors: Vec<Vec<EdgeId>>,
}

/// A closed trail, given by its start vertex and its edges in walking order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    pub start: VertexId,
    pub edges: Vec<EdgeId>,
}

impl Circuit {
    /// The trail as `(edge, tail, head)` steps.
    pub fn steps(&self, g: &Graph) -> Vec<(EdgeId, VertexId, VertexId)> {
        let mut cur = self.start;
        self.edges
            .iter()
            .map(|&e| {
                let next = g.other_end(e, cur);
                let step = (e, cur, next);
                cur = next;
                step
            })
            .collect()
    }
}

fn check_even(g: &Graph) -> Result<(), DecomposeError> {
    match (0..g.vertex_count()).find(|&v| g.degree(v) % 2 == 1) {
        Some(v) => Err(DecomposeError::OddDegree {
            vertex: v,
            degree: g.degree(v),
        }),
        None => Ok(()),
    }
}

/// One closed Eulerian trail per component that has edges, each starting at
/// the component's smallest vertex. Hierholzer's algorithm, always leaving a
/// vertex through its smallest unused edge.
pub fn eulerian_circuit(g: &Graph) -> Result<Vec<Circuit>, DecomposeError> {
    check_even(g)?;
    let mut used = vec![false; g.edge_count()];
    let mut cursor = vec![0usize; g.vertex_count()];
    let mut circuits = Vec::new();
    for comp in components(g) {
        if comp.edges.is_empty() {
            continue;
        }
        let start = comp.vertices[0];
        let mut stack: Vec<(VertexId, Option<EdgeId>)> = vec![(start, None)];
        let mut reversed = Vec::with_capacity(comp.edges.len());
        while let Some(&(v, via)) = stack.last() {
            let inc = g.incident(v);
            while cursor[v] < inc.len() && used[inc[cursor[v]]] {
                cursor[v] += 1;
            }
            if let Some(&e) = inc.get(cursor[v]) {
                used[e] = true;
                stack.push((g.other_end(e, v), Some(e)));
            } else {
                stack.pop();
                if let Some(e) = via {
                    reversed.push(e);
                }
            }
        }
        reversed.reverse();
        circuits.push(Circuit { start, edges: reversed });
    }
    Ok(circuits)
}

/// Maximum-cardinality matching by augmenting paths (Kuhn), scanning X
/// vertices and their incident edges in index order.
pub fn maximum_matching(g: &Graph, bip: &Bipartition) -> Matching {
    let n = g.vertex_count();
    let mut mate_edge: Vec<Option<EdgeId>> = vec![None; n];
    let mut visited = vec![false; n];
    for x in bip.vertices_on(Side::X) {
        visited.iter_mut().for_each(|f| *f = false);
        augment(g, x, &mut mate_edge, &mut visited);
    }
    Matching::from_edges(
        bip.vertices_on(Side::Y)
            .into_iter()
            .filter_map(|y| mate_edge[y])
            .collect(),
    )
}

// mate_edge is indexed by Y vertex
fn augment(g: &Graph, x: VertexId, mate_edge: &mut [Option<EdgeId>], visited: &mut [bool]) -> bool {
    for &e in g.incident(x) {
        let y = g.other_end(e, x);
        if visited[y] {
            continue;
        }
        visited[y] = true;
        let free = match mate_edge[y] {
            None => true,
            Some(m) => augment(g, g.other_end(m, y), mate_edge, visited),
        };
        if free {
            mate_edge[y] = Some(e);
            return true;
        }
    }
    false
}

/// Remove `k` perfect matchings in turn from a `k`-regular bipartite
/// multigraph. Each returned matching lists edge ids of `g`.
pub fn peel_perfect_matchings(g: &Graph, bip: &Bipartition, k: usize) -> Result<Vec<Vec<EdgeId>>, DecomposeError> {
    let mut remaining: Vec<EdgeId> = (0..g.edge_count()).collect();
    let mut peeled = Vec::with_capacity(k);
    for round in 0..k {
        let sub = g.edge_subgraph(&remaining);
        let m = maximum_matching(&sub, bip);
        let covered = m.covered(&sub);
        if let Some(v) = (0..g.vertex_count()).find(|&v| !covered[v] && g.degree(v) > 0) {
            return Err(DecomposeError::NotRegular {
                expected: format!("{k}-regular (round {round}, vertex {v} unmatched)"),
            });
        }
        let taken: Vec<EdgeId> = m.edges().iter().map(|&i| remaining[i]).collect();
        let mut keep = vec![true; remaining.len()];
        for &i in m.edges() {
            keep[i] = false;
        }
        remaining = remaining
            .into_iter()
            .zip(keep)
            .filter_map(|(e, k)| k.then_some(e))
            .collect();
        peeled.push(taken);
    }
    Ok(peeled)
}

/// Split a `2r`-regular multigraph (loops count twice) into `r` 2-factors.
///
/// Each component's Eulerian circuit orients the edges so every vertex has
/// `r` outgoing and `r` incoming edges. The out/in split graph is then
/// `r`-regular bipartite, and each of its perfect matchings gives every
/// vertex one outgoing and one incoming edge, i.e. a 2-factor.
pub fn two_factorization(g: &Graph) -> Result<FactorSet, DecomposeError> {
    let degree = g.max_degree();
    if degree != g.min_degree() || degree % 2 == 1 {
        return Err(DecomposeError::NotRegular {
            expected: "even".into(),
        });
    }
    let n = g.vertex_count();
    let r = degree / 2;
    let mut arcs = vec![(0, 0); g.edge_count()];
    for circuit in eulerian_circuit(g)? {
        for (e, tail, head) in circuit.steps(g) {
            arcs[e] = (tail, n + head);
        }
    }
    let split = build_graph(2 * n, arcs, false).expect("out/in split is loop-free");
    let sides = (0..2 * n).map(|v| if v < n { Side::X } else { Side::Y }).collect();
    let factors = peel_perfect_matchings(&split, &Bipartition::from_sides(sides), r)?;
    Ok(FactorSet {
        factors: factors
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f
            })
            .collect(),
    })
}

/// Proper edge coloring of a bipartite multigraph with exactly `Δ` colors.
///
/// The graph is padded with dummy vertices and edges to a `Δ`-regular
/// bipartite multigraph; its `Δ` perfect matchings, peeled in order, become
/// color classes `1..=Δ`. Every vertex of degree `Δ` therefore sees every
/// color, and class 1 covers all of them.
pub fn konig_coloring(g: &Graph, bip: &Bipartition) -> Result<EdgeColoring, DecomposeError> {
    if g.has_loops() || !bip.is_valid_for(g) {
        return Err(DecomposeError::NotBipartite);
    }
    let delta = g.max_degree();
    let mut coloring = EdgeColoring::uncolored(g.edge_count());
    if delta == 0 {
        return Ok(coloring);
    }
    let n = g.vertex_count();
    let xs = bip.vertices_on(Side::X);
    let ys = bip.vertices_on(Side::Y);
    let size = xs.len().max(ys.len());
    let mut sides = bip.sides().to_vec();
    let mut padded_x = xs.clone();
    let mut padded_y = ys.clone();
    let mut next = n;
    while padded_x.len() < size {
        padded_x.push(next);
        sides.push(Side::X);
        next += 1;
    }
    while padded_y.len() < size {
        padded_y.push(next);
        sides.push(Side::Y);
        next += 1;
    }
    let deficit = |v: VertexId| if v < n { delta - g.degree(v) } else { delta };
    let mut edges = g.edges().to_vec();
    let mut dx: Vec<(VertexId, usize)> = padded_x.iter().map(|&v| (v, deficit(v))).collect();
    let mut dy: Vec<(VertexId, usize)> = padded_y.iter().map(|&v| (v, deficit(v))).collect();
    let (mut i, mut j) = (0, 0);
    while i < dx.len() && j < dy.len() {
        if dx[i].1 == 0 {
            i += 1;
            continue;
        }
        if dy[j].1 == 0 {
            j += 1;
            continue;
        }
        let k = dx[i].1.min(dy[j].1);
        for _ in 0..k {
            edges.push((dx[i].0, dy[j].0));
        }
        dx[i].1 -= k;
        dy[j].1 -= k;
    }
    let padded = build_graph(next, edges, false).expect("padding keeps endpoints in range");
    let classes = peel_perfect_matchings(&padded, &Bipartition::from_sides(sides), delta)?;
    for (c, class) in classes.iter().enumerate() {
        for &e in class.iter().filter(|&&e| e < g.edge_count()) {
            coloring.set(e, c as Color + 1);
        }
    }
    Ok(coloring)
}

/// An inclusion-minimal matching covering every vertex of maximum degree:
/// color class 1 of [`konig_coloring`] with the edges that touch no
/// maximum-degree vertex removed.
pub fn matching_covering_max_degree(g: &Graph, bip: &Bipartition) -> Result<Matching, DecomposeError> {
    let coloring = konig_coloring(g, bip)?;
    let delta = g.max_degree();
    Ok(Matching::from_edges(
        (0..g.edge_count())
            .filter(|&e| coloring.get(e) == Some(1))
            .filter(|&e| {
                let (u, v) = g.endpoints(e);
                g.degree(u) == delta || g.degree(v) == delta
            })
            .collect(),
    ))
}

/// Result of [`split_part_vertices`].
#[derive(Clone, Debug)]
pub struct SplitGraph {
    pub graph: Graph,
    /// Original vertex of every new vertex.
    pub back_map: Vec<VertexId>,
    pub bipartition: Bipartition,
}

/// Replace every `side` vertex of degree `k * target` by `k` vertices of
/// degree `target`. Copy `i` receives the incident edges at positions
/// `i*target .. (i+1)*target` in edge-index order. Edge ids are unchanged.
pub fn split_part_vertices(
    g: &Graph,
    bip: &Bipartition,
    side: Side,
    target: usize,
) -> Result<SplitGraph, DecomposeError> {
    if target == 0 {
        return Err(DecomposeError::Indivisible {
            vertex: 0,
            degree: 0,
            target,
        });
    }
    let mut first_copy = vec![0usize; g.vertex_count()];
    let mut back_map = Vec::new();
    let mut sides = Vec::new();
    for (v, slot) in first_copy.iter_mut().enumerate() {
        let d = g.degree(v);
        let copies = if bip.side(v) == side && d > 0 {
            if !d.is_multiple_of(target) {
                return Err(DecomposeError::Indivisible {
                    vertex: v,
                    degree: d,
                    target,
                });
            }
            d / target
        } else {
            1
        };
        *slot = back_map.len();
        for _ in 0..copies {
            back_map.push(v);
            sides.push(bip.side(v));
        }
    }
    let split_end = |e: EdgeId, v: VertexId| -> VertexId {
        if bip.side(v) != side {
            return first_copy[v];
        }
        let pos = g.incident(v).iter().position(|&f| f == e).expect("incident");
        first_copy[v] + pos / target
    };
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| (split_end(e, u), split_end(e, v)))
        .collect();
    Ok(SplitGraph {
        graph: build_graph(back_map.len(), edges, false).map_err(|_| DecomposeError::NotBipartite)?,
        back_map,
        bipartition: Bipartition::from_sides(sides),
    })
}

/// Color edges alternately red and blue along each component's Eulerian
/// circuit, the first edge red. Every vertex ends up with exactly half of
/// its edges in each class.
pub fn parity_split(g: &Graph) -> Result<(Vec<EdgeId>, Vec<EdgeId>), DecomposeError> {
    check_even(g)?;
    let circuits = eulerian_circuit(g)?;
    if let Some(c) = circuits.iter().find(|c| c.edges.len() % 2 == 1) {
        return Err(DecomposeError::OddComponent { vertex: c.start });
    }
    let mut red = Vec::with_capacity(g.edge_count() / 2);
    let mut blue = Vec::with_capacity(g.edge_count() / 2);
    for circuit in &circuits {
        for (i, &e) in circuit.edges.iter().enumerate() {
            if i % 2 == 0 {
                red.push(e);
            } else {
                blue.push(e);
            }
        }
    }
    red.sort_unstable();
    blue.sort_unstable();
    Ok((red, blue))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition, gen_complete, gen_complete_bipartite, gen_cycle, gen_star};

    fn is_two_factor(g: &Graph, factor: &[EdgeId]) -> bool {
        let mut deg = vec![0; g.vertex_count()];
        for &e in factor {
            let (u, v) = g.endpoints(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.iter().all(|&d| d == 2)
    }

    fn check_circuit(g: &Graph, c: &Circuit) {
        let steps = c.steps(g);
        assert_eq!(steps.first().unwrap().1, c.start);
        assert_eq!(steps.last().unwrap().2, c.start);
        for w in steps.windows(2) {
            assert_eq!(w[0].2, w[1].1);
        }
    }

    #[test]
    fn eulerian_circuits() {
        let c4 = gen_cycle(4).unwrap();
        let cs = eulerian_circuit(&c4).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].edges.len(), 4);
        check_circuit(&c4, &cs[0]);
        let k24 = gen_complete_bipartite(2, 4).unwrap();
        let cs = eulerian_circuit(&k24).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].edges.len(), 8);
        check_circuit(&k24, &cs[0]);
        let p3 = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(matches!(eulerian_circuit(&p3), Err(DecomposeError::OddDegree { .. })));
    }

    #[test]
    fn eulerian_circuit_with_loops() {
        let g = Graph::with_loops(2, vec![(0, 1), (1, 1), (0, 1), (0, 0)]).unwrap();
        let cs = eulerian_circuit(&g).unwrap();
        assert_eq!(cs[0].edges.len(), 4);
        check_circuit(&g, &cs[0]);
    }

    #[test]
    fn two_factorizations() {
        let c6 = gen_cycle(6).unwrap();
        let f = two_factorization(&c6).unwrap();
        assert_eq!(f.factors, vec![(0..6).collect::<Vec<_>>()]);
        for g in [gen_complete_bipartite(4, 4).unwrap(), gen_complete(5)] {
            let f = two_factorization(&g).unwrap();
            assert_eq!(f.factors.len(), 2);
            for factor in &f.factors {
                assert!(is_two_factor(&g, factor));
            }
            let mut all: Vec<_> = f.factors.concat();
            all.sort_unstable();
            assert_eq!(all, (0..g.edge_count()).collect::<Vec<_>>());
        }
        assert!(two_factorization(&gen_complete(4)).is_err());
    }

    #[test]
    fn two_factorization_with_loops() {
        // degree-2 vertices padded with one loop each, as in even colorings
        let g = Graph::with_loops(
            6,
            vec![
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (4, 0),
                (4, 1),
                (5, 0),
                (5, 1),
                (2, 2),
                (3, 3),
                (4, 4),
                (5, 5),
            ],
        )
        .unwrap();
        let f = two_factorization(&g).unwrap();
        assert_eq!(f.factors.len(), 2);
        for factor in &f.factors {
            assert!(is_two_factor(&g, factor));
        }
    }

    #[test]
    fn matchings() {
        let k33 = gen_complete_bipartite(3, 3).unwrap();
        assert_eq!(maximum_matching(&k33, &bipartition(&k33).unwrap()).len(), 3);
        let k13 = gen_star(3).unwrap();
        assert_eq!(maximum_matching(&k13, &bipartition(&k13).unwrap()).len(), 1);
        let c6 = gen_cycle(6).unwrap();
        let m = maximum_matching(&c6, &bipartition(&c6).unwrap());
        assert_eq!(m.len(), 3);
        assert!(m.is_matching_in(&c6));
    }

    fn assert_konig(g: &Graph) {
        let bip = bipartition(g).unwrap();
        let c = konig_coloring(g, &bip).unwrap();
        let delta = g.max_degree();
        assert!(c.is_total());
        assert_eq!(c.colors_used(), delta);
        for v in 0..g.vertex_count() {
            let mut seen: Vec<_> = g.incident(v).iter().map(|&e| c.get(e).unwrap()).collect();
            seen.sort_unstable();
            let before = seen.len();
            seen.dedup();
            assert_eq!(seen.len(), before, "improper at {v}");
            if g.degree(v) == delta {
                assert_eq!(seen, (1..=delta as u32).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn konig_colorings() {
        assert_konig(&gen_complete_bipartite(3, 3).unwrap());
        assert_konig(&gen_complete_bipartite(2, 3).unwrap());
        let single = Graph::new(2, vec![(0, 1)]).unwrap();
        let c = konig_coloring(&single, &bipartition(&single).unwrap()).unwrap();
        assert_eq!(c.as_slice(), &[1]);
        let multi = Graph::new(4, vec![(0, 1), (0, 1), (0, 3), (2, 1), (2, 3)]).unwrap();
        assert_konig(&multi);
    }

    #[test]
    fn covering_matchings() {
        let k23 = gen_complete_bipartite(2, 3).unwrap();
        let bip = bipartition(&k23).unwrap();
        let m = matching_covering_max_degree(&k23, &bip).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.is_matching_in(&k23));
        let covered = m.covered(&k23);
        assert!(covered[0] && covered[1]);
        let k33 = gen_complete_bipartite(3, 3).unwrap();
        assert_eq!(
            matching_covering_max_degree(&k33, &bipartition(&k33).unwrap())
                .unwrap()
                .len(),
            3
        );
        let k13 = gen_star(3).unwrap();
        let m = matching_covering_max_degree(&k13, &bipartition(&k13).unwrap()).unwrap();
        assert_eq!(m.len(), 1);
        assert!(m.covered(&k13)[0]);
    }

    #[test]
    fn vertex_splitting() {
        let k24 = gen_complete_bipartite(2, 4).unwrap();
        let bip = bipartition(&k24).unwrap();
        // vertices 0,1 have degree 4 and sit on side X
        let s = split_part_vertices(&k24, &bip, Side::X, 2).unwrap();
        assert!(s.graph.is_regular() && s.graph.max_degree() == 2);
        assert_eq!(s.back_map, vec![0, 0, 1, 1, 2, 3, 4, 5]);
        let same = split_part_vertices(&k24, &bip, Side::X, 4).unwrap();
        assert_eq!(same.graph, k24);
        let k36 = gen_complete_bipartite(3, 6).unwrap();
        let s = split_part_vertices(&k36, &bipartition(&k36).unwrap(), Side::X, 3).unwrap();
        assert!(s.graph.is_regular() && s.graph.max_degree() == 3);
        assert!(s.bipartition.is_valid_for(&s.graph));
        assert!(split_part_vertices(&k36, &bipartition(&k36).unwrap(), Side::X, 4).is_err());
    }

    #[test]
    fn parity_splits() {
        let c4 = gen_cycle(4).unwrap();
        let (r, b) = parity_split(&c4).unwrap();
        assert_eq!((r, b), (vec![0, 2], vec![1, 3]));
        let k24 = gen_complete_bipartite(2, 4).unwrap();
        let (r, b) = parity_split(&k24).unwrap();
        for half in [&r, &b] {
            let sub = k24.edge_subgraph(half);
            for v in 0..k24.vertex_count() {
                assert_eq!(sub.degree(v) * 2, k24.degree(v));
            }
        }
        let c3 = gen_cycle(3).unwrap();
        assert!(matches!(parity_split(&c3), Err(DecomposeError::OddComponent { .. })));
    }
}
