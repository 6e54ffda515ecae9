//! Test-side reference implementations, written without the library's
//! search code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use palette_core::{EdgeColoring, Graph};

/// Palette index from the closed form for grids `G(m, n)`, `m, n >= 2`.
pub fn grid_value(m: usize, n: usize) -> u64 {
    match (m.min(n), m.max(n)) {
        (2, 2) => 1,
        (2, _) => 2,
        _ if (m * n).is_multiple_of(2) => 3,
        _ => 5,
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `sum over distinct degrees d of C(Δ/2, d/2)`.
pub fn even_bound(g: &Graph) -> u64 {
    let degrees: BTreeSet<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).filter(|&d| d > 0).collect();
    let half = g.max_degree() as u64 / 2;
    degrees.iter().map(|&d| binomial(half, d as u64 / 2)).sum()
}

/// Whether adjacent edges always differ in color.
pub fn is_proper(g: &Graph, c: &EdgeColoring) -> bool {
    let edges = g.edges();
    if c.len() != edges.len() {
        return false;
    }
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (x, y) = edges[j];
            let touch = a == x || a == y || b == x || b == y;
            if touch && c.get(i) == c.get(j) {
                return false;
            }
        }
    }
    c.is_total()
}

/// Number of distinct vertex palettes, counting isolated vertices' empty set.
pub fn count_palettes(g: &Graph, colors: &[u32]) -> usize {
    let mut palettes: BTreeSet<Vec<u32>> = BTreeSet::new();
    for v in 0..g.vertex_count() {
        let mut p: Vec<u32> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(e, _)| colors[e])
            .collect();
        p.sort_unstable();
        palettes.insert(p);
    }
    palettes.len()
}

/// Every partition of the edge set into matchings, each given as a color
/// vector with colors numbered by first appearance.
pub fn matching_partitions(g: &Graph) -> Vec<Vec<u32>> {
    fn go(g: &Graph, e: usize, colors: &mut Vec<u32>, used: u32, out: &mut Vec<Vec<u32>>) {
        let edges = g.edges();
        if e == edges.len() {
            out.push(colors.clone());
            return;
        }
        for c in 1..=used + 1 {
            let (a, b) = edges[e];
            let clash = (0..e).any(|f| {
                let (x, y) = edges[f];
                colors[f] == c && (a == x || a == y || b == x || b == y)
            });
            if !clash {
                colors.push(c);
                go(g, e + 1, colors, used.max(c), out);
                colors.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, 0, &mut Vec::new(), 0, &mut out);
    out
}

/// Palette index by trying every matching partition.
pub fn brute_palette_index(g: &Graph) -> usize {
    matching_partitions(g)
        .iter()
        .map(|c| count_palettes(g, c))
        .min()
        .unwrap_or(1)
}

/// All labeled simple graphs on `n` vertices without isolated vertices.
pub fn labeled_graphs_without_isolated(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (1u64..1 << pairs.len())
        .filter_map(|mask| {
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let mut covered = vec![false; n];
            for &(u, v) in &edges {
                covered[u] = true;
                covered[v] = true;
            }
            covered.iter().all(|&c| c).then(|| Graph::new(n, edges).unwrap())
        })
        .collect()
}
