//! Exact palette index and chromatic index for small graphs, plus a
//! Misra–Gries `Δ+1` edge coloring.
//!
//! The palette solver walks partitions of the edge set into matchings as
//! restricted-growth strings: edge `i` (in search order) may take any color
//! already opened or open exactly one new color. Every partition is visited
//! once, so color permutations are never explored twice.

use std::collections::HashMap;
use std::time::Instant;

use crate::coloring::{Color, EdgeColoring};
use crate::error::ExactError;
use crate::graph::{bipartition, EdgeId, Graph, VertexId};

/// Budgets for the exact searches.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchLimits {
    pub max_nodes: u64,
    pub max_seconds: f64,
    /// Optional cap on the number of colors. A capped search only proves the
    /// minimum over colorings within the cap.
    pub max_colors: Option<usize>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_nodes: 200_000_000,
            max_seconds: 300.0,
            max_colors: None,
        }
    }
}

impl SearchLimits {
    pub fn with_nodes(max_nodes: u64) -> Self {
        SearchLimits {
            max_nodes,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactOutcome {
    pub value: usize,
    pub witness: EdgeColoring,
    /// False when a budget ran out; `value` is then only an upper bound.
    pub proved: bool,
    /// True when `max_colors` (or the 64-color word width) restricted the
    /// search.
    pub conditional: bool,
    pub nodes: u64,
}

const MAX_COLORS: usize = 64;

fn search_order(g: &Graph) -> Vec<EdgeId> {
    let mut order: Vec<EdgeId> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.endpoints(e);
        (std::cmp::Reverse(g.degree(u) + g.degree(v)), e)
    });
    order
}

fn greedy(g: &Graph, order: &[EdgeId]) -> EdgeColoring {
    let mut mask = vec![0u128; g.vertex_count()];
    let mut coloring = EdgeColoring::uncolored(g.edge_count());
    for &e in order {
        let (u, v) = g.endpoints(e);
        let c = (!(mask[u] | mask[v])).trailing_zeros();
        mask[u] |= 1 << c;
        mask[v] |= 1 << c;
        coloring.set(e, c + 1);
    }
    coloring
}

fn distinct_palettes(g: &Graph, c: &EdgeColoring) -> usize {
    let mut seen = std::collections::HashSet::new();
    for v in 0..g.vertex_count() {
        let mut p: Vec<Color> = g.incident(v).iter().map(|&e| c.get(e).unwrap_or(0)).collect();
        p.sort_unstable();
        seen.insert(p);
    }
    seen.len()
}

struct Solver<'a> {
    g: &'a Graph,
    order: Vec<EdgeId>,
    ends: Vec<(VertexId, VertexId)>,
    cap: usize,
    prune: bool,
    mask: Vec<u64>,
    remaining: Vec<usize>,
    // frozen palette -> number of vertices holding it
    frozen: HashMap<u64, usize>,
    frozen_by_size: Vec<Vec<u64>>,
    degree_classes: Vec<(usize, Vec<VertexId>)>,
    assigned: Vec<u8>,
    best: usize,
    best_colors: Option<Vec<u8>>,
    floor: usize,
    nodes: u64,
    leaves: u64,
    limits: SearchLimits,
    start: Instant,
    aborted: bool,
    done: bool,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, order: Vec<EdgeId>, limits: SearchLimits, prune: bool) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        let cap = limits.max_colors.unwrap_or(m).min(m).min(MAX_COLORS);
        let mut classes: HashMap<usize, Vec<VertexId>> = HashMap::new();
        for v in 0..n {
            classes.entry(g.degree(v)).or_default().push(v);
        }
        let mut degree_classes: Vec<_> = classes.into_iter().collect();
        degree_classes.sort();
        let mut frozen = HashMap::new();
        let max_deg = g.max_degree();
        let mut frozen_by_size = vec![Vec::new(); max_deg + 1];
        if let Some((_, iso)) = degree_classes.iter().find(|(d, _)| *d == 0) {
            frozen.insert(0u64, iso.len());
            frozen_by_size[0].push(0);
        }
        Solver {
            g,
            ends: order.iter().map(|&e| g.endpoints(e)).collect(),
            order,
            cap,
            prune,
            mask: vec![0; n],
            remaining: (0..n).map(|v| g.degree(v)).collect(),
            frozen,
            frozen_by_size,
            floor: degree_classes.len(),
            degree_classes,
            assigned: vec![0; m],
            best: usize::MAX,
            best_colors: None,
            nodes: 0,
            leaves: 0,
            limits,
            start: Instant::now(),
            aborted: false,
            done: false,
        }
    }

    fn freeze(&mut self, v: VertexId) {
        let p = self.mask[v];
        let count = self.frozen.entry(p).or_insert(0);
        *count += 1;
        if *count == 1 {
            self.frozen_by_size[p.count_ones() as usize].push(p);
        }
    }

    fn thaw(&mut self, v: VertexId) {
        let p = self.mask[v];
        let count = self.frozen.get_mut(&p).expect("frozen");
        *count -= 1;
        if *count == 0 {
            self.frozen.remove(&p);
            let list = &mut self.frozen_by_size[p.count_ones() as usize];
            let at = list.iter().position(|&q| q == p).expect("listed");
            list.swap_remove(at);
        }
    }

    // Frozen palettes per degree plus a greedy clique of open vertices that
    // fit no frozen palette and pairwise cannot end with the same palette.
    fn lower_bound(&self) -> usize {
        let mut total = 0;
        let mut clique: Vec<u64> = Vec::new();
        for (d, vs) in &self.degree_classes {
            let frozen = &self.frozen_by_size[*d];
            clique.clear();
            for &v in vs {
                if self.remaining[v] == 0 {
                    continue;
                }
                let m = self.mask[v];
                if frozen.iter().any(|&p| m & !p == 0) {
                    continue;
                }
                if clique.iter().all(|&q| (q | m).count_ones() as usize > *d) {
                    clique.push(m);
                }
            }
            total += (frozen.len() + clique.len()).max(1);
        }
        total
    }

    fn out_of_budget(&mut self) -> bool {
        let timed_out = || self.start.elapsed().as_secs_f64() > self.limits.max_seconds;
        if self.nodes >= self.limits.max_nodes || (self.nodes.is_multiple_of(4096) && timed_out()) {
            self.aborted = true;
        }
        self.aborted
    }

    fn run(&mut self, i: usize, open: usize) {
        if i == self.order.len() {
            self.leaves += 1;
            let value = self.frozen.len();
            if value < self.best {
                self.best = value;
                self.best_colors = Some(self.assigned.clone());
                if self.prune && value <= self.floor {
                    self.done = true;
                }
            }
            return;
        }
        let (u, v) = self.ends[i];
        let used = self.mask[u] | self.mask[v];
        let top = (open + 1).min(self.cap);
        for c in 0..top {
            if used >> c & 1 == 1 {
                continue;
            }
            self.nodes += 1;
            if self.out_of_budget() {
                return;
            }
            let bit = 1u64 << c;
            self.mask[u] |= bit;
            self.mask[v] |= bit;
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;
            self.assigned[i] = c as u8;
            if self.remaining[u] == 0 {
                self.freeze(u);
            }
            if v != u && self.remaining[v] == 0 {
                self.freeze(v);
            }
            if !self.prune || self.lower_bound() < self.best {
                self.run(i + 1, open.max(c + 1));
            }
            if v != u && self.remaining[v] == 0 {
                self.thaw(v);
            }
            if self.remaining[u] == 0 {
                self.thaw(u);
            }
            self.remaining[u] += 1;
            self.remaining[v] += 1;
            self.mask[u] &= !bit;
            self.mask[v] &= !bit;
            if self.done || self.aborted {
                return;
            }
        }
    }

    fn coloring(&self, assigned: &[u8]) -> EdgeColoring {
        let mut c = EdgeColoring::uncolored(self.g.edge_count());
        for (i, &e) in self.order.iter().enumerate() {
            c.set(e, assigned[i] as Color + 1);
        }
        c
    }
}

/// Minimum number of distinct palettes over all proper edge colorings.
///
/// Isolated vertices count as one shared empty palette. The search stops as
/// soon as it reaches the number of distinct degrees, which no coloring can
/// beat. When a budget runs out the best coloring found so far is returned
/// with `proved = false`; it is never worse than a greedy coloring.
pub fn palette_index_exact(g: &Graph, limits: &SearchLimits) -> Result<ExactOutcome, ExactError> {
    if g.has_loops() {
        return Err(ExactError::Loops);
    }
    let order = search_order(g);
    let m = g.edge_count();
    let mut solver = Solver::new(g, order.clone(), *limits, true);
    let conditional = solver.cap < m && m > 0;
    let greedy_coloring = greedy(g, &order);
    let greedy_value = distinct_palettes(g, &greedy_coloring);
    if conditional && greedy_coloring.colors_used() > solver.cap {
        solver.best = usize::MAX;
    } else {
        solver.best = greedy_value;
    }
    if m > 0 && solver.best > solver.floor {
        solver.run(0, 0);
    }
    let (value, witness) = match &solver.best_colors {
        Some(a) => (solver.best, solver.coloring(a)),
        None => (greedy_value, greedy_coloring),
    };
    Ok(ExactOutcome {
        value: if g.vertex_count() == 0 { 0 } else { value },
        witness,
        proved: !solver.aborted,
        conditional,
        nodes: solver.nodes,
    })
}

/// Number of partitions of the edge set into matchings, counted by the
/// solver's enumeration with all pruning disabled.
pub fn count_matching_partitions(g: &Graph) -> Result<u64, ExactError> {
    if g.has_loops() {
        return Err(ExactError::Loops);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let limits = SearchLimits {
        max_nodes: u64::MAX,
        max_seconds: f64::INFINITY,
        max_colors: None,
    };
    let mut solver = Solver::new(g, search_order(g), limits, false);
    solver.run(0, 0);
    Ok(solver.leaves)
}

/// Reference minimum by plain enumeration of all matching partitions in
/// edge-index order, with no bounds of any kind. Exponential; meant for
/// graphs with a handful of edges.
pub fn naive_palette_index(g: &Graph) -> Result<usize, ExactError> {
    fn walk(g: &Graph, e: usize, open: Color, c: &mut EdgeColoring, best: &mut usize) {
        if e == g.edge_count() {
            *best = (*best).min(distinct_palettes(g, c));
            return;
        }
        let (u, v) = g.endpoints(e);
        for color in 1..=open + 1 {
            let clash = g
                .incident(u)
                .iter()
                .chain(g.incident(v))
                .any(|&f| f != e && c.get(f) == Some(color));
            if !clash {
                c.set(e, color);
                walk(g, e + 1, open.max(color), c, best);
            }
        }
        c.set_uncolored(e);
    }
    if g.has_loops() {
        return Err(ExactError::Loops);
    }
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    let mut best = usize::MAX;
    walk(g, 0, 0, &mut EdgeColoring::uncolored(g.edge_count()), &mut best);
    Ok(best)
}

/// `χ'(g)`: `Δ` for bipartite graphs, otherwise the least `k >= Δ` for which
/// a backtracking search finds a proper `k`-coloring.
pub fn chromatic_index_exact(g: &Graph, limits: &SearchLimits) -> Result<usize, ExactError> {
    if g.has_loops() {
        return Err(ExactError::Loops);
    }
    let delta = g.max_degree();
    if g.edge_count() == 0 || bipartition(g).is_some() {
        return Ok(delta);
    }
    let order = search_order(g);
    let ends: Vec<_> = order.iter().map(|&e| g.endpoints(e)).collect();
    let start = Instant::now();
    let mut nodes = 0u64;
    for k in delta.. {
        let mut mask = vec![0u128; g.vertex_count()];
        if colorable(&ends, 0, 0, k, &mut mask, &mut nodes, limits, start)? {
            return Ok(k);
        }
    }
    unreachable!("some k admits a proper coloring")
}

#[allow(clippy::too_many_arguments)]
fn colorable(
    ends: &[(VertexId, VertexId)],
    i: usize,
    open: usize,
    k: usize,
    mask: &mut [u128],
    nodes: &mut u64,
    limits: &SearchLimits,
    start: Instant,
) -> Result<bool, ExactError> {
    if i == ends.len() {
        return Ok(true);
    }
    let (u, v) = ends[i];
    for c in 0..(open + 1).min(k) {
        let bit = 1u128 << c;
        if (mask[u] | mask[v]) & bit != 0 {
            continue;
        }
        *nodes += 1;
        if *nodes > limits.max_nodes
            || ((*nodes).is_multiple_of(4096) && start.elapsed().as_secs_f64() > limits.max_seconds)
        {
            return Err(ExactError::BudgetExhausted { nodes: *nodes });
        }
        mask[u] |= bit;
        mask[v] |= bit;
        let found = colorable(ends, i + 1, open.max(c + 1), k, mask, nodes, limits, start)?;
        mask[u] &= !bit;
        mask[v] &= !bit;
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

struct Vizing<'a> {
    g: &'a Graph,
    color: Vec<Color>,
    at: Vec<Vec<Option<EdgeId>>>,
}

impl Vizing<'_> {
    fn assign(&mut self, e: EdgeId, c: Color) {
        let (u, v) = self.g.endpoints(e);
        self.color[e] = c;
        self.at[u][c as usize] = Some(e);
        self.at[v][c as usize] = Some(e);
    }

    fn clear(&mut self, e: EdgeId) {
        let (u, v) = self.g.endpoints(e);
        let c = self.color[e] as usize;
        self.at[u][c] = None;
        self.at[v][c] = None;
        self.color[e] = 0;
    }

    fn is_free(&self, v: VertexId, c: Color) -> bool {
        self.at[v][c as usize].is_none()
    }

    fn first_free(&self, v: VertexId) -> Color {
        (1..self.at[v].len() as Color)
            .find(|&c| self.is_free(v, c))
            .expect("Δ+1 colors")
    }

    fn invert_path(&mut self, from: VertexId, c: Color, d: Color) {
        let mut path = Vec::new();
        let (mut cur, mut want) = (from, d);
        while let Some(e) = self.at[cur][want as usize] {
            path.push(e);
            cur = self.g.other_end(e, cur);
            want = if want == d { c } else { d };
        }
        let old: Vec<Color> = path.iter().map(|&e| self.color[e]).collect();
        for &e in &path {
            self.clear(e);
        }
        for (&e, &o) in path.iter().zip(&old) {
            self.assign(e, if o == c { d } else { c });
        }
    }

    fn color_edge(&mut self, e: EdgeId, edge_at: &HashMap<(VertexId, VertexId), EdgeId>) {
        let (u, v) = self.g.endpoints(e);
        let key = |x: VertexId| edge_at[&(u.min(x), u.max(x))];
        let mut fan = vec![v];
        loop {
            let last = *fan.last().expect("nonempty");
            let next = self.g.incident(u).iter().find_map(|&f| {
                let x = self.g.other_end(f, u);
                let cf = self.color[f];
                (cf != 0 && !fan.contains(&x) && self.is_free(last, cf)).then_some(x)
            });
            match next {
                Some(x) => fan.push(x),
                None => break,
            }
        }
        let c = self.first_free(u);
        let d = self.first_free(*fan.last().expect("nonempty"));
        if c != d {
            self.invert_path(u, c, d);
        }
        let w = (0..fan.len())
            .find(|&i| {
                self.is_free(fan[i], d)
                    && (1..=i).all(|j| {
                        let cj = self.color[key(fan[j])];
                        cj != 0 && self.is_free(fan[j - 1], cj)
                    })
            })
            .expect("a fan prefix ends at a vertex missing d");
        for j in 0..w {
            let next = key(fan[j + 1]);
            let cc = self.color[next];
            self.clear(next);
            self.assign(key(fan[j]), cc);
        }
        self.assign(key(fan[w]), d);
    }
}

/// Proper edge coloring of a simple graph with at most `Δ+1` colors by fan
/// rotation and alternating-path inversion, edges processed in index order.
///
/// # Panics
/// If `g` has loops or parallel edges.
pub fn vizing_coloring(g: &Graph) -> EdgeColoring {
    assert!(g.is_simple(), "vizing_coloring needs a simple graph");
    let k = g.max_degree() + 1;
    let mut edge_at = HashMap::with_capacity(g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edge_at.insert((u.min(v), u.max(v)), e);
    }
    let mut state = Vizing {
        g,
        color: vec![0; g.edge_count()],
        at: vec![vec![None; k + 1]; g.vertex_count()],
    };
    for e in 0..g.edge_count() {
        state.color_edge(e, &edge_at);
    }
    EdgeColoring::from_colors(state.color)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::verify_proper;
    use crate::graph::{gen_complete, gen_complete_bipartite, gen_cycle, gen_star};

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::new(10, edges).unwrap()
    }

    fn exact(g: &Graph) -> ExactOutcome {
        palette_index_exact(g, &SearchLimits::default()).unwrap()
    }

    #[test]
    fn small_palette_indices() {
        assert_eq!(exact(&gen_complete_bipartite(2, 3).unwrap()).value, 4);
        assert_eq!(exact(&gen_cycle(5).unwrap()).value, 3);
        assert_eq!(exact(&gen_complete(4)).value, 1);
        assert_eq!(exact(&gen_complete_bipartite(2, 4).unwrap()).value, 3);
        assert_eq!(exact(&gen_star(3).unwrap()).value, 4);
        let out = exact(&gen_complete(5));
        assert!(out.proved);
        assert_eq!(out.value, 4);
    }

    #[test]
    fn witnesses_are_proper_and_attain_value() {
        for g in [
            gen_cycle(7).unwrap(),
            gen_complete(5),
            gen_complete_bipartite(3, 4).unwrap(),
        ] {
            let out = exact(&g);
            assert!(verify_proper(&g, &out.witness).unwrap().is_empty());
            assert_eq!(distinct_palettes(&g, &out.witness), out.value);
        }
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let g = petersen();
        let out = palette_index_exact(&g, &SearchLimits::with_nodes(10)).unwrap();
        assert!(!out.proved);
        assert!(verify_proper(&g, &out.witness).unwrap().is_empty());
        assert_eq!(distinct_palettes(&g, &out.witness), out.value);
    }

    #[test]
    fn isolated_vertices_share_the_empty_palette() {
        let g = gen_cycle(4).unwrap().disjoint_union(&Graph::empty(2));
        assert_eq!(exact(&g).value, 2);
        assert_eq!(naive_palette_index(&g).unwrap(), 2);
    }

    #[test]
    fn naive_agrees_on_small_graphs() {
        for g in [gen_cycle(5).unwrap(), gen_star(3).unwrap(), gen_complete(4)] {
            assert_eq!(naive_palette_index(&g).unwrap(), exact(&g).value);
        }
    }

    #[test]
    fn partition_counts() {
        // K3: every partition into matchings is into singletons.
        assert_eq!(count_matching_partitions(&gen_complete(3)).unwrap(), 1);
        // P4 = a-b-c-d: {ab, cd} may merge, the middle edge is alone.
        let p4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(count_matching_partitions(&p4).unwrap(), 2);
        // C4: opposite pairs merge or not, independently.
        assert_eq!(count_matching_partitions(&gen_cycle(4).unwrap()).unwrap(), 4);
    }

    #[test]
    fn chromatic_indices() {
        let lim = SearchLimits::default();
        assert_eq!(chromatic_index_exact(&gen_cycle(5).unwrap(), &lim).unwrap(), 3);
        assert_eq!(
            chromatic_index_exact(&gen_complete_bipartite(3, 3).unwrap(), &lim).unwrap(),
            3
        );
        assert_eq!(chromatic_index_exact(&petersen(), &lim).unwrap(), 4);
        assert_eq!(chromatic_index_exact(&gen_complete(4), &lim).unwrap(), 3);
        assert_eq!(chromatic_index_exact(&gen_complete(5), &lim).unwrap(), 5);
    }

    #[test]
    fn vizing_small() {
        for g in [
            gen_cycle(5).unwrap(),
            gen_complete(4),
            gen_complete_bipartite(3, 3).unwrap(),
            gen_complete(7),
            petersen(),
        ] {
            let c = vizing_coloring(&g);
            assert!(verify_proper(&g, &c).unwrap().is_empty());
            assert!(c.colors_used() <= g.max_degree() + 1);
        }
        assert_eq!(vizing_coloring(&gen_cycle(5).unwrap()).colors_used(), 3);
    }
}
