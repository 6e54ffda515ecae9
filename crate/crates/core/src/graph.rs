//! Undirected multigraphs with stable edge indices, plus the generators for
//! every graph family the constructions work on.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;

pub type VertexId = usize;
pub type EdgeId = usize;

/// A finite undirected multigraph.
///
/// Edge `i` is the `i`-th pair handed to the constructor for the whole
/// lifetime of the value. Loops are only representable when the graph was
/// built with [`Graph::with_loops`]; a loop adds 2 to its vertex's degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    loop_allowed: bool,
    // incident edge ids per vertex in ascending order, loops listed twice
    incidence: Vec<Vec<EdgeId>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self, GraphError> {
        build_graph(vertex_count, edges, false)
    }

    pub fn with_loops(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self, GraphError> {
        build_graph(vertex_count, edges, true)
    }

    /// Graph with `vertex_count` vertices and no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: Vec::new(),
            loop_allowed: false,
            incidence: vec![Vec::new(); vertex_count],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn loop_allowed(&self) -> bool {
        self.loop_allowed
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    /// Endpoint of `e` opposite to `v`; a loop returns `v` itself.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v, "edge {e} is not incident with {v}");
            a
        }
    }

    /// Incident edge ids of `v`, ascending; a loop appears twice.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// The set of degrees occurring in the graph.
    pub fn degree_set(&self) -> BTreeSet<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.incidence.iter().any(Vec::is_empty)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn is_even(&self) -> bool {
        self.incidence.iter().all(|inc| inc.len() % 2 == 0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incidence[v].iter().map(move |&e| self.other_end(e, v))
    }

    /// Subgraph on all vertices that keeps only `edge_ids`, in the given
    /// order. Edge `i` of the result is `edge_ids[i]` of `self`.
    pub fn edge_subgraph(&self, edge_ids: &[EdgeId]) -> Graph {
        let edges = edge_ids.iter().map(|&e| self.edges[e]).collect();
        build_graph(self.vertex_count, edges, self.loop_allowed).expect("subgraph of a valid graph is valid")
    }

    /// Disjoint union; vertices and edges of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        build_graph(
            self.vertex_count + other.vertex_count,
            edges,
            self.loop_allowed || other.loop_allowed,
        )
        .expect("union of valid graphs is valid")
    }

    /// Connected when every vertex is reachable from vertex 0, ignoring
    /// isolated vertices.
    pub fn is_connected_ignoring_isolated(&self) -> bool {
        components(self).iter().filter(|c| c.graph.edge_count() > 0).count() <= 1
    }
}

/// Build a graph, rejecting out-of-range endpoints and, unless
/// `loop_allowed`, loops.
pub fn build_graph(
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    loop_allowed: bool,
) -> Result<Graph, GraphError> {
    let mut incidence = vec![Vec::new(); vertex_count];
    for (e, &(u, v)) in edges.iter().enumerate() {
        if u >= vertex_count || v >= vertex_count {
            return Err(GraphError::EndpointOutOfRange {
                edge: e,
                vertex: u.max(v),
                vertex_count,
            });
        }
        if u == v && !loop_allowed {
            return Err(GraphError::ForbiddenLoop { edge: e, vertex: u });
        }
        incidence[u].push(e);
        incidence[v].push(e);
    }
    Ok(Graph {
        vertex_count,
        edges,
        loop_allowed,
        incidence,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// A two-coloring of the vertices in which every edge joins X to Y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    pub fn from_sides(side: Vec<Side>) -> Self {
        Bipartition { side }
    }

    pub fn side(&self, v: VertexId) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn vertices_on(&self, side: Side) -> Vec<VertexId> {
        (0..self.side.len()).filter(|&v| self.side[v] == side).collect()
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side.len() == g.vertex_count() && g.edges().iter().all(|&(u, v)| self.side[u] != self.side[v])
    }
}

/// Breadth-first 2-coloring. The lowest vertex of each component goes to X.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let n = g.vertex_count();
    let mut side: Vec<Option<Side>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(Side::X);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].expect("queued vertices are colored");
            for &e in g.incident(v) {
                let w = g.other_end(e, v);
                match side[w] {
                    None => {
                        side[w] = Some(sv.flip());
                        queue.push_back(w);
                    }
                    Some(sw) if sw == sv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Bipartition {
        side: side.into_iter().map(|s| s.expect("all visited")).collect(),
    })
}

/// Degrees and part sizes of an `(a, b)`-biregular graph, with `a <= b`.
/// X is the side of degree `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BiregularProfile {
    pub a: usize,
    pub b: usize,
    pub x_count: usize,
    pub y_count: usize,
}

impl BiregularProfile {
    pub fn is_regular(&self) -> bool {
        self.a == self.b
    }
}

/// Profile of `g` if it is biregular. See [`biregular_bipartition`].
pub fn biregular_profile(g: &Graph) -> Option<BiregularProfile> {
    biregular_bipartition(g).map(|(p, _)| p)
}

/// Profile together with a bipartition whose X side carries degree `a`.
///
/// Each component is oriented independently, so disconnected graphs whose
/// components all have the same pair of side degrees are accepted.
pub fn biregular_bipartition(g: &Graph) -> Option<(BiregularProfile, Bipartition)> {
    if g.edge_count() == 0 || g.has_isolated_vertex() {
        return None;
    }
    let bip = bipartition(g)?;
    let mut sides = bip.sides().to_vec();
    let mut pair: Option<(usize, usize)> = None;
    for comp in components(g) {
        let mut deg = [None::<usize>, None::<usize>];
        for &v in &comp.vertices {
            let slot = &mut deg[(sides[v] == Side::Y) as usize];
            match *slot {
                None => *slot = Some(g.degree(v)),
                Some(d) if d == g.degree(v) => {}
                Some(_) => return None,
            }
        }
        let (dx, dy) = (deg[0]?, deg[1]?);
        let (lo, hi) = (dx.min(dy), dx.max(dy));
        match pair {
            None => pair = Some((lo, hi)),
            Some(p) if p == (lo, hi) => {}
            Some(_) => return None,
        }
        if dx > dy {
            for &v in &comp.vertices {
                sides[v] = sides[v].flip();
            }
        }
    }
    let (a, b) = pair?;
    let x_count = sides.iter().filter(|&&s| s == Side::X).count();
    let y_count = sides.len() - x_count;
    Some((
        BiregularProfile { a, b, x_count, y_count },
        Bipartition::from_sides(sides),
    ))
}

/// `K_{a,b}`: vertices `u_1..u_a` are ids `0..a`, `v_1..v_b` are `a..a+b`;
/// edges in `(i, j)` lexicographic order.
pub fn gen_complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(GraphError::InvalidParameter(format!(
            "complete bipartite dimensions must be positive, got ({a}, {b})"
        )));
    }
    let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
    Graph::new(a + b, edges)
}

/// Vertex id of `v_j^{(i)}` in `G(m, n)`, 1-based coordinates.
pub fn grid_vertex(n: usize, i: usize, j: usize) -> VertexId {
    (i - 1) * n + (j - 1)
}

/// The `m x n` grid: all horizontal edges row by row, then all vertical
/// edges row pair by row pair.
pub fn gen_grid(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m < 2 || n < 2 {
        return Err(GraphError::InvalidParameter(format!(
            "grid dimensions must be at least 2, got ({m}, {n})"
        )));
    }
    let mut edges = Vec::with_capacity(m * (n - 1) + n * (m - 1));
    for i in 1..=m {
        for j in 1..n {
            edges.push((grid_vertex(n, i, j), grid_vertex(n, i, j + 1)));
        }
    }
    for i in 1..m {
        for j in 1..=n {
            edges.push((grid_vertex(n, i, j), grid_vertex(n, i + 1, j)));
        }
    }
    Graph::new(m * n, edges)
}

/// `K_{1,j}` with the center at vertex 0.
pub fn gen_star(leaves: usize) -> Result<Graph, GraphError> {
    if leaves == 0 {
        return Err(GraphError::InvalidParameter("a star needs at least one leaf".into()));
    }
    Graph::new(leaves + 1, (1..=leaves).map(|l| (0, l)).collect())
}

/// Cycle on `n >= 3` vertices, edges `(i, i+1)` then `(n-1, 0)`.
pub fn gen_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!("cycle needs 3 vertices, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// Complete graph on `n` vertices, edges in lexicographic order.
pub fn gen_complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::new(n, edges).expect("complete graph is valid")
}

/// A random simple `(a, b)`-biregular graph with `|X| = scale * b` and
/// `|Y| = scale * a`.
///
/// Half-edges of the Y vertices are paired one vertex at a time with X
/// half-edges drawn uniformly from those not already adjacent; a dead end
/// restarts the whole pairing. X vertices come first in the vertex order.
pub fn gen_random_biregular(a: usize, b: usize, scale: usize, seed: u64) -> Result<Graph, GraphError> {
    if a == 0 || a > b || scale == 0 {
        return Err(GraphError::InvalidParameter(format!(
            "biregular generator needs 1 <= a <= b and scale >= 1, got a={a} b={b} scale={scale}"
        )));
    }
    let x_count = scale * b;
    let y_count = scale * a;
    let budget = 10 * scale * b;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..budget {
        let mut remaining = vec![a; x_count];
        let mut edges = Vec::with_capacity(x_count * a);
        for y in 0..y_count {
            let mut chosen: Vec<VertexId> = Vec::with_capacity(b);
            for _ in 0..b {
                let total: usize = (0..x_count).filter(|x| !chosen.contains(x)).map(|x| remaining[x]).sum();
                if total == 0 {
                    continue 'attempt;
                }
                let mut pick = rng.gen_range(0..total);
                let x = (0..x_count)
                    .filter(|x| !chosen.contains(x))
                    .find(|&x| {
                        if pick < remaining[x] {
                            true
                        } else {
                            pick -= remaining[x];
                            false
                        }
                    })
                    .expect("pick lies within total");
                remaining[x] -= 1;
                chosen.push(x);
            }
            chosen.shuffle(&mut rng);
            edges.extend(chosen.into_iter().map(|x| (x, x_count + y)));
        }
        return Graph::new(x_count + y_count, edges);
    }
    Err(GraphError::GenerationFailed { attempts: budget })
}

/// A random simple bipartite graph whose degrees are even, lie in
/// `2..=max_degree`, and include `max_degree` itself.
///
/// Part sizes and degree sequences are drawn first; each Y vertex then takes
/// its neighbors among non-adjacent X vertices weighted by remaining degree,
/// restarting on a dead end.
pub fn gen_random_even_bipartite(max_degree: usize, seed: u64) -> Result<Graph, GraphError> {
    if max_degree < 2 || max_degree % 2 == 1 {
        return Err(GraphError::InvalidParameter(format!(
            "maximum degree must be even and at least 2, got {max_degree}"
        )));
    }
    let budget = 1000;
    let half = max_degree / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..budget {
        let x_count = rng.gen_range(max_degree..=max_degree + 6);
        let y_count = rng.gen_range(max_degree..=max_degree + 6);
        let mut x_deg: Vec<usize> = (0..x_count).map(|_| 2 * rng.gen_range(1..=half)).collect();
        x_deg[0] = max_degree;
        let total: usize = x_deg.iter().sum();
        if total < 2 * y_count || total > max_degree * y_count {
            continue;
        }
        let mut y_deg = vec![2; y_count];
        let mut spare = (total - 2 * y_count) / 2;
        while spare > 0 {
            let y = rng.gen_range(0..y_count);
            if y_deg[y] < max_degree {
                y_deg[y] += 2;
                spare -= 1;
            }
        }
        let mut remaining = x_deg;
        let mut edges = Vec::with_capacity(total);
        for (y, &d) in y_deg.iter().enumerate() {
            let mut chosen: Vec<VertexId> = Vec::with_capacity(d);
            for _ in 0..d {
                let open: Vec<VertexId> = (0..x_count)
                    .filter(|x| !chosen.contains(x) && remaining[*x] > 0)
                    .collect();
                let weight: usize = open.iter().map(|&x| remaining[x]).sum();
                if weight == 0 {
                    continue 'attempt;
                }
                let mut pick = rng.gen_range(0..weight);
                let x = *open
                    .iter()
                    .find(|&&x| {
                        if pick < remaining[x] {
                            true
                        } else {
                            pick -= remaining[x];
                            false
                        }
                    })
                    .expect("pick lies within weight");
                remaining[x] -= 1;
                chosen.push(x);
            }
            edges.extend(chosen.into_iter().map(|x| (x, x_count + y)));
        }
        return Graph::new(x_count + y_count, edges);
    }
    Err(GraphError::GenerationFailed { attempts: budget })
}

/// A uniformly random simple graph with `n` vertices and `m` edges.
pub fn gen_random_graph(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    let mut pairs: Vec<(VertexId, VertexId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    if m > pairs.len() {
        return Err(GraphError::InvalidParameter(format!(
            "{m} edges do not fit in a simple graph on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    pairs.truncate(m);
    pairs.sort_unstable();
    Graph::new(n, pairs)
}

/// Two disjoint copies of a bipartite graph plus, for every odd-degree
/// vertex, an edge joining its two copies.
#[derive(Clone, Debug)]
pub struct EvenClosure {
    pub graph: Graph,
    /// Source edge of every closure edge lying in the first copy.
    pub source_of: Vec<Option<EdgeId>>,
}

/// Copy one uses vertex ids `0..n` and edge ids `0..m` (identical to the
/// source); copy two uses `n..2n` and `m..2m`; join edges follow in vertex
/// order.
pub fn even_closure(g: &Graph) -> Result<EvenClosure, GraphError> {
    if g.has_loops() || bipartition(g).is_none() {
        return Err(GraphError::NotBipartite);
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(2 * m + n);
    edges.extend_from_slice(g.edges());
    edges.extend(g.edges().iter().map(|&(u, v)| (u + n, v + n)));
    edges.extend((0..n).filter(|&v| g.degree(v) % 2 == 1).map(|v| (v, v + n)));
    let mut source_of = vec![None; edges.len()];
    for (e, slot) in source_of.iter_mut().enumerate().take(m) {
        *slot = Some(e);
    }
    Ok(EvenClosure {
        graph: Graph::new(2 * n, edges)?,
        source_of,
    })
}

/// A connected component with maps back into the parent graph.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: Graph,
    /// Parent vertex of each component vertex, ascending.
    pub vertices: Vec<VertexId>,
    /// Parent edge of each component edge, ascending.
    pub edges: Vec<EdgeId>,
}

/// Connected components ordered by their smallest vertex id.
pub fn components(g: &Graph) -> Vec<Component> {
    let n = g.vertex_count();
    let mut comp_of = vec![usize::MAX; n];
    let mut groups: Vec<Vec<VertexId>> = Vec::new();
    for root in 0..n {
        if comp_of[root] != usize::MAX {
            continue;
        }
        let id = groups.len();
        let mut members = vec![root];
        comp_of[root] = id;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if comp_of[w] == usize::MAX {
                    comp_of[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        groups.push(members);
    }
    let mut local = vec![0usize; n];
    for members in &groups {
        for (i, &v) in members.iter().enumerate() {
            local[v] = i;
        }
    }
    let mut comp_edges: Vec<Vec<EdgeId>> = vec![Vec::new(); groups.len()];
    for (e, &(u, _)) in g.edges().iter().enumerate() {
        comp_edges[comp_of[u]].push(e);
    }
    groups
        .into_iter()
        .zip(comp_edges)
        .map(|(vertices, edges)| {
            let local_edges = edges
                .iter()
                .map(|&e| {
                    let (u, v) = g.endpoints(e);
                    (local[u], local[v])
                })
                .collect();
            Component {
                graph: build_graph(vertices.len(), local_edges, g.loop_allowed()).expect("component of a valid graph"),
                vertices,
                edges,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn build_rejects_loops_and_bad_endpoints() {
        assert_eq!(k3().edge_count(), 3);
        assert_eq!(Graph::new(1, vec![]).unwrap().vertex_count(), 1);
        assert!(matches!(
            Graph::new(2, vec![(0, 0)]),
            Err(GraphError::ForbiddenLoop { .. })
        ));
        assert!(matches!(
            Graph::new(2, vec![(0, 2)]),
            Err(GraphError::EndpointOutOfRange { .. })
        ));
        let looped = Graph::with_loops(2, vec![(0, 0), (0, 1)]).unwrap();
        assert_eq!(looped.degree(0), 3);
    }

    #[test]
    fn bipartition_cases() {
        let c4 = gen_cycle(4).unwrap();
        let bip = bipartition(&c4).unwrap();
        assert_eq!(bip.sides(), &[Side::X, Side::Y, Side::X, Side::Y]);
        assert!(bipartition(&k3()).is_none());
        let k23 = gen_complete_bipartite(2, 3).unwrap();
        let bip = bipartition(&k23).unwrap();
        assert_eq!(bip.vertices_on(Side::X), vec![0, 1]);
        assert_eq!(bip.vertices_on(Side::Y).len(), 3);
    }

    #[test]
    fn biregular_profiles() {
        let p = biregular_profile(&gen_complete_bipartite(2, 4).unwrap()).unwrap();
        assert_eq!((p.a, p.b, p.x_count, p.y_count), (2, 4, 4, 2));
        let p3 = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let p = biregular_profile(&p3).unwrap();
        assert_eq!((p.a, p.b), (1, 2));
        assert!(biregular_profile(&k3()).is_none());
        let p = biregular_profile(&gen_complete_bipartite(4, 6).unwrap()).unwrap();
        assert_eq!((p.a, p.b), (4, 6));
    }

    #[test]
    fn biregular_profile_orients_each_component() {
        // second component starts at a degree-4 vertex
        let k42 = gen_complete_bipartite(4, 2).unwrap();
        let g = gen_complete_bipartite(2, 4).unwrap().disjoint_union(&k42);
        let (p, bip) = biregular_bipartition(&g).unwrap();
        assert_eq!((p.a, p.b, p.x_count, p.y_count), (2, 4, 8, 4));
        assert!(bip.is_valid_for(&g));
        let mixed = gen_complete_bipartite(2, 4)
            .unwrap()
            .disjoint_union(&gen_complete_bipartite(2, 3).unwrap());
        assert!(biregular_profile(&mixed).is_none());
    }

    #[test]
    fn complete_bipartite_generator() {
        let g = gen_complete_bipartite(2, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 6));
        assert_eq!(gen_complete_bipartite(1, 1).unwrap().edges(), &[(0, 1)]);
        assert_eq!(gen_complete_bipartite(4, 6).unwrap().edge_count(), 24);
        assert!(gen_complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn random_even_bipartite() {
        for seed in 0..20 {
            let g = gen_random_even_bipartite(6, seed).unwrap();
            assert!(g.is_even() && g.is_simple() && bipartition(&g).is_some());
            assert_eq!(g.max_degree(), 6);
            assert!(g.min_degree() >= 2);
        }
        assert_eq!(
            gen_random_even_bipartite(4, 3).unwrap(),
            gen_random_even_bipartite(4, 3).unwrap()
        );
        assert!(gen_random_even_bipartite(5, 0).is_err());
    }

    #[test]
    fn random_simple_graph() {
        let g = gen_random_graph(5, 7, 11).unwrap();
        assert_eq!(g.edge_count(), 7);
        assert!(g.is_simple());
        assert!(gen_random_graph(3, 4, 0).is_err());
    }

    #[test]
    fn grid_generator() {
        let g = gen_grid(2, 2).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!(g.is_regular() && g.max_degree() == 2);
        let g = gen_grid(2, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 7));
        assert_eq!(gen_grid(3, 3).unwrap().degree_set(), BTreeSet::from([2, 3, 4]));
        assert_eq!(gen_grid(2, 5).unwrap().degree_set(), BTreeSet::from([2, 3]));
        assert!(gen_grid(1, 4).is_err());
    }

    #[test]
    fn random_biregular_small_cases() {
        let g = gen_random_biregular(2, 4, 1, 7).unwrap();
        let p = biregular_profile(&g).unwrap();
        assert_eq!((p.a, p.b), (2, 4));
        assert!(g.is_simple());
        let g = gen_random_biregular(3, 5, 1, 0).unwrap();
        let p = biregular_profile(&g).unwrap();
        assert_eq!((p.a, p.b, p.x_count, p.y_count), (3, 5, 5, 3));
        let star = gen_random_biregular(1, 3, 1, 0).unwrap();
        assert_eq!(star.edge_count(), 3);
        assert_eq!(star.degree_set(), BTreeSet::from([1, 3]));
        assert_eq!(
            gen_random_biregular(2, 4, 2, 11).unwrap(),
            gen_random_biregular(2, 4, 2, 11).unwrap()
        );
    }

    #[test]
    fn even_closure_counts() {
        let c6 = gen_cycle(6).unwrap();
        let cl = even_closure(&c6).unwrap();
        assert_eq!(cl.graph.edge_count(), 12);
        let k13 = gen_star(3).unwrap();
        let cl = even_closure(&k13).unwrap();
        assert_eq!(cl.graph.edge_count(), 10);
        assert!(cl.graph.is_even());
        assert!(bipartition(&cl.graph).is_some());
        let p3 = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(even_closure(&p3).unwrap().graph.edge_count(), 6);
        assert!(even_closure(&k3()).is_err());
    }

    #[test]
    fn component_split() {
        let g = k3().disjoint_union(&gen_star(3).unwrap());
        let comps = components(&g);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1].vertices, vec![3, 4, 5, 6]);
        assert_eq!(comps[1].edges, vec![3, 4, 5]);
        assert_eq!(components(&gen_grid(3, 3).unwrap()).len(), 1);
        assert!(components(&Graph::empty(0)).is_empty());
    }
}
