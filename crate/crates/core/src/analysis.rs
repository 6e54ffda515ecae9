//! Palettes, properness, bounds on the palette index, and recognition of the
//! graphs whose palette index equals their order or equals two.

use std::collections::BTreeMap;
use std::fmt;

use crate::coloring::{Color, EdgeColoring};
use crate::constructions::{
    binomial, color_biregular_auto, color_deg5, color_even_bipartite, color_grid, color_via_doubling, doubling_bound,
    even_bipartite_bound, grid_palette_index,
};
use crate::decompose::{konig_coloring, maximum_matching};
use crate::error::AnalysisError;
use crate::exact::{palette_index_exact, vizing_coloring, SearchLimits};
use crate::graph::{bipartition, biregular_bipartition, components, gen_grid, EdgeId, Graph, VertexId};

/// The set of colors at a vertex, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Palette(Vec<Color>);

impl Palette {
    pub fn new(mut colors: Vec<Color>) -> Self {
        colors.sort_unstable();
        colors.dedup();
        Palette(colors)
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: Color) -> bool {
        self.0.binary_search(&c).is_ok()
    }
}

impl fmt::Display for Palette {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

/// Two edges of the same color meeting at a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: VertexId,
    pub edges: (EdgeId, EdgeId),
    pub color: Color,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaletteSummary {
    pub palette_of: Vec<Palette>,
    pub distinct_palettes: usize,
    pub palette_multiplicity: BTreeMap<Palette, usize>,
}

fn check_total(g: &Graph, c: &EdgeColoring) -> Result<(), AnalysisError> {
    if c.len() != g.edge_count() {
        return Err(AnalysisError::LengthMismatch {
            expected: g.edge_count(),
            found: c.len(),
        });
    }
    match c.first_uncolored() {
        Some(edge) => Err(AnalysisError::PartialColoring { edge }),
        None => Ok(()),
    }
}

/// Every pair of same-colored edges at a vertex, in vertex order. A loop is
/// one edge and never conflicts with itself.
pub fn verify_proper(g: &Graph, c: &EdgeColoring) -> Result<Vec<Violation>, AnalysisError> {
    check_total(g, c)?;
    let mut out = Vec::new();
    let mut seen: BTreeMap<Color, EdgeId> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        seen.clear();
        for &e in g.incident(v) {
            let color = c.get(e).expect("total");
            match seen.get(&color) {
                Some(&first) if first != e => out.push(Violation {
                    vertex: v,
                    edges: (first, e),
                    color,
                }),
                Some(_) => {}
                None => {
                    seen.insert(color, e);
                }
            }
        }
    }
    Ok(out)
}

/// Palettes of a proper coloring. Isolated vertices get the empty palette.
pub fn palette_summary(g: &Graph, c: &EdgeColoring) -> Result<PaletteSummary, AnalysisError> {
    if let Some(v) = verify_proper(g, c)?.first() {
        return Err(AnalysisError::ImproperColoring { vertex: v.vertex });
    }
    let palette_of: Vec<Palette> = (0..g.vertex_count())
        .map(|v| Palette::new(g.incident(v).iter().map(|&e| c.get(e).expect("total")).collect()))
        .collect();
    let mut palette_multiplicity = BTreeMap::new();
    for p in &palette_of {
        *palette_multiplicity.entry(p.clone()).or_insert(0) += 1;
    }
    Ok(PaletteSummary {
        distinct_palettes: palette_multiplicity.len(),
        palette_of,
        palette_multiplicity,
    })
}

fn require_no_isolated(g: &Graph) -> Result<(), AnalysisError> {
    match (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        Some(vertex) => Err(AnalysisError::IsolatedVertex { vertex }),
        None => Ok(()),
    }
}

/// `(m, n)` when `g` is exactly `gen_grid(m, n)`, edge order included.
pub fn recognize_grid(g: &Graph) -> Option<(usize, usize)> {
    let n_vertices = g.vertex_count();
    (2..=n_vertices / 2)
        .filter(|m| n_vertices.is_multiple_of(*m) && n_vertices / m >= 2)
        .map(|m| (m, n_vertices / m))
        .find(|&(m, n)| {
            m * (n - 1) + n * (m - 1) == g.edge_count() && gen_grid(m, n).is_ok_and(|grid| grid.edges() == g.edges())
        })
}

/// Lower bound on the palette index with the rule that attains it.
///
/// Rules: the number of distinct degrees; `1 + ⌈b/a⌉` for `(a, b)`-biregular
/// graphs with `a < b`; 5 for `(3, 5)`; `r + 2` for `(2, 2r+1)`; for regular
/// graphs with a known chromatic index, 1 when it equals `Δ` and 3 otherwise;
/// the exact value for grids labeled as by [`gen_grid`].
pub fn palette_lower_bound(g: &Graph, chi_prime: Option<usize>) -> Result<(u64, &'static str), AnalysisError> {
    require_no_isolated(g)?;
    let mut best = (g.degree_set().len() as u64, "degree-count");
    let mut offer = |value: u64, tag: &'static str| {
        if value > best.0 {
            best = (value, tag);
        }
    };
    if let Some((p, _)) = biregular_bipartition(g) {
        if p.a < p.b {
            offer(1 + p.b.div_ceil(p.a) as u64, "biregular-ratio");
        }
        if (p.a, p.b) == (3, 5) {
            offer(5, "biregular-3-5");
        }
        if p.a == 2 && p.b % 2 == 1 {
            offer((p.b as u64 - 1) / 2 + 2, "biregular-2-odd");
        }
    }
    if g.is_regular() && g.edge_count() > 0 {
        match chi_prime {
            Some(chi) if chi == g.max_degree() => offer(1, "regular-class-1"),
            Some(_) => offer(3, "regular-class-2"),
            None => {}
        }
    }
    if let Some((m, n)) = recognize_grid(g) {
        offer(grid_palette_index(m, n), "grid");
    }
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub value: u64,
    pub direction: Direction,
    pub tag: &'static str,
    pub note: String,
    /// Whether this library can produce a coloring meeting the bound.
    pub constructed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub coloring: EdgeColoring,
    pub tag: &'static str,
    pub palettes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub lower: (u64, &'static str),
    pub upper: (u64, &'static str),
    pub entries: Vec<BoundEntry>,
    /// Coloring for the smallest constructed upper bound.
    pub witness: Option<Witness>,
}

impl BoundReport {
    pub fn upper_entries(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.direction == Direction::Upper)
    }
}

fn pow2_minus(exp: usize, minus: u64) -> u64 {
    if exp >= 64 {
        u64::MAX
    } else {
        (1u64 << exp).saturating_sub(minus)
    }
}

/// Every applicable upper bound, the best lower bound, and a witness coloring
/// for the best upper bound this library can construct.
pub fn upper_bound_catalog(g: &Graph) -> Result<BoundReport, AnalysisError> {
    require_no_isolated(g)?;
    let lower = palette_lower_bound(g, None)?;
    let delta = g.max_degree();
    let mut entries = Vec::new();
    let mut add = |value: u64, tag: &'static str, note: String, constructed: bool| {
        entries.push(BoundEntry {
            value,
            direction: Direction::Upper,
            tag,
            note,
            constructed,
        })
    };
    add(pow2_minus(delta + 1, 2), "general", format!("Δ = {delta}"), false);
    add(
        g.vertex_count() as u64,
        "vertex-count",
        "one palette per vertex".into(),
        g.is_simple(),
    );
    if g.is_regular() {
        add(
            delta as u64 + 1,
            "regular-vizing",
            "regular, Δ+1 colors".into(),
            g.is_simple(),
        );
    }
    if delta >= g.min_degree() && delta - g.min_degree() <= 2 {
        add(
            (delta * delta + delta + 1) as u64,
            "near-regular",
            "Δ - δ <= 2; stated, not constructed".into(),
            false,
        );
    }
    let bip = if g.has_loops() { None } else { bipartition(g) };
    if let Some(bip) = &bip {
        add(pow2_minus(delta, 1), "bipartite", "bipartite".into(), false);
        add(doubling_bound(g), "doubling", "even closure".into(), true);
        let half = delta.div_ceil(2);
        let closed = (delta as u64 + 2).saturating_mul(pow2_minus(half, 0));
        add(closed, "doubling-closed-form", "bipartite, (Δ+2)·2^⌈Δ/2⌉".into(), false);
        let even = g.is_even();
        if even {
            add(
                even_bipartite_bound(g),
                "even-bipartite",
                "all degrees even".into(),
                true,
            );
        }
        match delta {
            4 if even => add(3, "even-bipartite-deg4", "even, Δ = 4".into(), true),
            4 => {
                add(11, "bipartite-deg4", "Δ = 4".into(), true);
                if g.min_degree() >= 2 {
                    add(7, "bipartite-deg4-no-pendant", "Δ = 4, no pendant vertex".into(), true);
                }
            }
            5 => {
                add(23, "bipartite-deg5", "Δ = 5".into(), true);
                if 2 * maximum_matching(g, bip).len() == g.vertex_count() {
                    add(
                        12,
                        "bipartite-deg5-perfect-matching",
                        "Δ = 5 with a perfect matching".into(),
                        true,
                    );
                }
            }
            6 if even => add(7, "even-bipartite-deg6", "even, Δ = 6".into(), true),
            8 if even => add(
                13,
                "even-bipartite-deg8",
                "even, Δ = 8; stated, not constructed".into(),
                false,
            ),
            _ => {}
        }
        if g.is_regular() {
            add(1, "regular-bipartite", "regular bipartite".into(), true);
        }
    }
    if let Some((p, _)) = biregular_bipartition(g) {
        if p.a < p.b {
            add(
                binomial(p.b as u64, p.a as u64).saturating_add(1),
                "biregular-konig",
                format!("({}, {})-biregular", p.a, p.b),
                true,
            );
            if let Ok(r) = color_biregular_auto(g) {
                add(
                    r.claimed_palette_bound,
                    r.construction.tag(),
                    format!("({}, {})-biregular", p.a, p.b),
                    true,
                );
            }
        }
    }
    if let Some((m, n)) = recognize_grid(g) {
        add(grid_palette_index(m, n), "grid", format!("G({m}, {n})"), true);
    }
    entries.sort_by(|x, y| x.value.cmp(&y.value).then(x.tag.cmp(y.tag)));
    let best = entries.first().expect("general bound always applies");
    let upper = (best.value, best.tag);
    let witness = entries
        .iter()
        .filter(|e| e.constructed)
        .find_map(|e| build_witness(g, e.tag).map(|c| (e.tag, c)))
        .and_then(|(tag, coloring)| {
            let palettes = palette_summary(g, &coloring).ok()?.distinct_palettes;
            Some(Witness {
                coloring,
                tag,
                palettes,
            })
        });
    Ok(BoundReport {
        lower,
        upper,
        entries,
        witness,
    })
}

fn build_witness(g: &Graph, tag: &str) -> Option<EdgeColoring> {
    let bip = || bipartition(g);
    match tag {
        "vertex-count" | "regular-vizing" => g.is_simple().then(|| vizing_coloring(g)),
        "doubling" | "bipartite-deg4" | "bipartite-deg4-no-pendant" => color_via_doubling(g).ok().map(|r| r.coloring),
        "even-bipartite" | "even-bipartite-deg4" | "even-bipartite-deg6" => {
            color_even_bipartite(g).ok().map(|r| r.coloring)
        }
        "bipartite-deg5" | "bipartite-deg5-perfect-matching" => color_deg5(g).ok().map(|r| r.coloring),
        "regular-bipartite" | "biregular-konig" => konig_coloring(g, &bip()?).ok(),
        "grid" => {
            let (m, n) = recognize_grid(g)?;
            color_grid(m, n).ok().map(|r| r.coloring)
        }
        _ => color_biregular_auto(g).ok().map(|r| r.coloring),
    }
}

/// Graph families whose palette index equals their number of vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FullPaletteFamily {
    Triangle,
    /// `K_{1,j}`, `j >= 2`.
    Star(usize),
    /// A triangle with `j >= 1` pendant edges at one vertex.
    TrianglePendants(usize),
    /// A triangle joined by an edge to the center of `K_{1,j}`, `j >= 3`.
    TriangleStar(usize),
    /// Disjoint union of a triangle and `K_{1,j}`, `j >= 3`.
    TriangleAndStar(usize),
}

impl fmt::Display for FullPaletteFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FullPaletteFamily::Triangle => write!(f, "K3"),
            FullPaletteFamily::Star(j) => write!(f, "K1,{j}"),
            FullPaletteFamily::TrianglePendants(j) => write!(f, "K3-pendants-{j}"),
            FullPaletteFamily::TriangleStar(j) => write!(f, "K3-star-{j}"),
            FullPaletteFamily::TriangleAndStar(j) => write!(f, "K3+K1,{j}"),
        }
    }
}

/// Family membership for a graph with at most one isolated vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FullPaletteClass {
    pub family: FullPaletteFamily,
    pub with_isolated_vertex: bool,
}

impl fmt::Display for FullPaletteClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if self.with_isolated_vertex {
            f.write_str("+K1")?;
        }
        Ok(())
    }
}

// Star among `vs` inside `g`: (center, leaves).
fn as_star(g: &Graph, vs: &[VertexId]) -> Option<(VertexId, usize)> {
    let n = vs.len();
    if n < 2 {
        return None;
    }
    let center = *vs.iter().max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))?;
    let ok = g.degree(center) == n - 1 && vs.iter().all(|&v| v == center || g.degree(v) == 1);
    ok.then_some((center, n - 1))
}

// Triangle on a connected component with as many edges as vertices.
fn classify_unicyclic(g: &Graph, vs: &[VertexId]) -> Option<FullPaletteFamily> {
    let deg = |v: VertexId| g.degree(v);
    let heavy: Vec<VertexId> = vs.iter().copied().filter(|&v| deg(v) >= 3).collect();
    if vs.len() == 3 {
        return vs.iter().all(|&v| deg(v) == 2).then_some(FullPaletteFamily::Triangle);
    }
    let (c, a, b) = heavy.into_iter().find_map(|c| {
        let twos: Vec<VertexId> = g.neighbors(c).filter(|&v| deg(v) == 2).collect();
        match twos.as_slice() {
            &[a, b] if g.neighbors(a).any(|w| w == b) => Some((c, a, b)),
            _ => None,
        }
    })?;
    let others: Vec<VertexId> = g.neighbors(c).filter(|&v| v != a && v != b).collect();
    if others.iter().all(|&v| deg(v) == 1) {
        return Some(FullPaletteFamily::TrianglePendants(others.len()));
    }
    match others.as_slice() {
        &[s] if deg(c) == 3 => {
            let j = deg(s) - 1;
            let leaves = g.neighbors(s).filter(|&v| v != c).all(|v| deg(v) == 1);
            (leaves && j >= 3 && vs.len() == 4 + j).then_some(FullPaletteFamily::TriangleStar(j))
        }
        _ => None,
    }
}

/// Whether the palette index of `g` equals its number of vertices, decided
/// structurally. At most one isolated vertex is allowed beside the family
/// member.
pub fn classify_full_palette(g: &Graph) -> Result<Option<FullPaletteClass>, AnalysisError> {
    if !g.is_simple() {
        return Err(AnalysisError::NotSimple);
    }
    let isolated = (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).count();
    if isolated > 1 {
        return Ok(None);
    }
    let parts: Vec<_> = components(g).into_iter().filter(|c| !c.edges.is_empty()).collect();
    let sizes = |i: usize| (parts[i].vertices.len(), parts[i].edges.len());
    let family = match parts.len() {
        1 => {
            let (n, m) = sizes(0);
            let vs = &parts[0].vertices;
            if m + 1 == n {
                as_star(g, vs)
                    .filter(|&(_, j)| j >= 2)
                    .map(|(_, j)| FullPaletteFamily::Star(j))
            } else if m == n {
                classify_unicyclic(g, vs)
            } else {
                None
            }
        }
        2 => {
            let (tri, star) = if sizes(0) == (3, 3) { (0, 1) } else { (1, 0) };
            let triangle = sizes(tri) == (3, 3);
            let star = as_star(g, &parts[star].vertices).filter(|&(_, j)| j >= 3 && sizes(star).1 == j);
            match (triangle, star) {
                (true, Some((_, j))) => Some(FullPaletteFamily::TriangleAndStar(j)),
                _ => None,
            }
        }
        _ => None,
    };
    Ok(family.map(|family| FullPaletteClass {
        family,
        with_isolated_vertex: isolated == 1,
    }))
}

/// Split of a palette-index-two graph into two edge-disjoint regular
/// graphs, each colored with as many colors as its degree, where every
/// vertex touched by `h1` is touched by `h2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaletteTwoCertificate {
    pub h1: Vec<EdgeId>,
    pub h2: Vec<EdgeId>,
    pub coloring: EdgeColoring,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaletteTwoDecision {
    pub holds: bool,
    pub certificate: Option<PaletteTwoCertificate>,
}

/// Decide whether the palette index is exactly 2 with the exact solver and,
/// if so, extract the two regular layers from the optimal coloring.
pub fn decide_palette_two(g: &Graph, limits: &SearchLimits) -> Result<PaletteTwoDecision, AnalysisError> {
    let no = PaletteTwoDecision {
        holds: false,
        certificate: None,
    };
    if g.edge_count() == 0 || g.degree_set().len() > 2 {
        return Ok(no);
    }
    let outcome = palette_index_exact(g, limits)?;
    if !outcome.proved {
        return Err(AnalysisError::BudgetExhausted { nodes: outcome.nodes });
    }
    if outcome.value != 2 {
        return Ok(no);
    }
    let certificate = extract_certificate(g, outcome.witness)?;
    Ok(PaletteTwoDecision {
        holds: true,
        certificate: Some(certificate),
    })
}

fn extract_certificate(g: &Graph, mut coloring: EdgeColoring) -> Result<PaletteTwoCertificate, AnalysisError> {
    let fail = |msg: &str| AnalysisError::Certificate(msg.to_string());
    let summary = palette_summary(g, &coloring)?;
    let mut pals: Vec<Palette> = summary.palette_multiplicity.keys().cloned().collect();
    if pals.len() != 2 {
        return Err(fail("witness does not have two palettes"));
    }
    pals.sort_by_key(|p| std::cmp::Reverse(p.len()));
    let (c1, mut c2) = (pals[0].clone(), pals[1].clone());
    loop {
        let j = c2.colors().iter().copied().find(|&c| !c1.contains(c));
        let k = c1.colors().iter().copied().find(|&c| !c2.contains(c));
        match (j, k) {
            (None, _) => break,
            (Some(j), Some(k)) => {
                for e in 0..coloring.len() {
                    if coloring.get(e) == Some(j) {
                        coloring.set(e, k);
                    }
                }
                let mut next: Vec<Color> = c2.colors().iter().copied().filter(|&c| c != j).collect();
                next.push(k);
                c2 = Palette::new(next);
            }
            (Some(_), None) => return Err(fail("smaller palette not reducible")),
        }
    }
    if c1 == c2 {
        return Err(fail("palettes merged; witness was not optimal"));
    }
    let (mut h1, mut h2) = (Vec::new(), Vec::new());
    for e in 0..coloring.len() {
        let c = coloring.get(e).expect("total");
        if c2.contains(c) {
            h2.push(e);
        } else {
            h1.push(e);
        }
    }
    let cert = PaletteTwoCertificate { h1, h2, coloring };
    check_certificate(g, &cert)?;
    Ok(cert)
}

/// Check the layer conditions of a palette-two certificate.
pub fn check_certificate(g: &Graph, cert: &PaletteTwoCertificate) -> Result<(), AnalysisError> {
    let fail = |msg: &str| Err(AnalysisError::Certificate(msg.to_string()));
    let mut owner = vec![0u8; g.edge_count()];
    for &e in &cert.h1 {
        owner[e] += 1;
    }
    for &e in &cert.h2 {
        owner[e] += 2;
    }
    if owner.iter().any(|&o| o != 1 && o != 2) {
        return fail("layers must partition the edges");
    }
    if !verify_proper(g, &cert.coloring)?.is_empty() {
        return fail("certificate coloring is improper");
    }
    let mut h1_vertices = Vec::new();
    let mut h2_vertices = Vec::new();
    for (layer, touched) in [(&cert.h1, &mut h1_vertices), (&cert.h2, &mut h2_vertices)] {
        let sub = g.edge_subgraph(layer);
        let degrees: Vec<usize> = (0..sub.vertex_count())
            .map(|v| sub.degree(v))
            .filter(|&d| d > 0)
            .collect();
        if degrees.windows(2).any(|w| w[0] != w[1]) {
            return fail("layer is not regular");
        }
        let colors: std::collections::BTreeSet<Color> =
            layer.iter().map(|&e| cert.coloring.get(e).expect("total")).collect();
        if colors.len() != sub.max_degree() {
            return fail("layer is not colored with its degree");
        }
        touched.extend((0..sub.vertex_count()).filter(|&v| sub.degree(v) > 0));
    }
    if !h1_vertices.iter().all(|v| h2_vertices.binary_search(v).is_ok()) {
        return fail("first layer leaves the second layer's vertices");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_complete_bipartite, gen_cycle, gen_star};

    fn colored(values: &[Color]) -> EdgeColoring {
        EdgeColoring::from_colors(values.to_vec())
    }

    #[test]
    fn verify_small_cycles() {
        let c4 = gen_cycle(4).unwrap();
        assert!(verify_proper(&c4, &colored(&[1, 2, 1, 2])).unwrap().is_empty());
        assert_eq!(verify_proper(&c4, &colored(&[1, 1, 2, 2])).unwrap().len(), 2);
        let k3 = gen_complete(3);
        assert!(verify_proper(&k3, &colored(&[1, 2, 3])).unwrap().is_empty());
        assert!(matches!(
            verify_proper(&k3, &EdgeColoring::uncolored(3)),
            Err(AnalysisError::PartialColoring { edge: 0 })
        ));
    }

    #[test]
    fn summaries() {
        let c5 = gen_cycle(5).unwrap();
        let s = palette_summary(&c5, &colored(&[1, 2, 1, 2, 3])).unwrap();
        assert_eq!(s.distinct_palettes, 3);
        assert_eq!(s.palette_multiplicity.values().sum::<usize>(), 5);
        let star = gen_star(3).unwrap();
        assert_eq!(
            palette_summary(&star, &colored(&[1, 2, 3])).unwrap().distinct_palettes,
            4
        );
        assert!(palette_summary(&c5, &colored(&[1, 1, 2, 1, 2])).is_err());
        assert_eq!(Palette::new(vec![3, 1, 3]).to_string(), "{1,3}");
    }

    #[test]
    fn lower_bounds() {
        let k35 = gen_complete_bipartite(3, 5).unwrap();
        assert_eq!(palette_lower_bound(&k35, None).unwrap().0, 5);
        let k24 = gen_complete_bipartite(2, 4).unwrap();
        assert_eq!(palette_lower_bound(&k24, None).unwrap(), (3, "biregular-ratio"));
        let grid = gen_grid(3, 4).unwrap();
        assert_eq!(palette_lower_bound(&grid, None).unwrap().0, 3);
        assert_eq!(
            palette_lower_bound(&gen_grid(3, 3).unwrap(), None).unwrap(),
            (5, "grid")
        );
        let c5 = gen_cycle(5).unwrap();
        assert_eq!(palette_lower_bound(&c5, Some(3)).unwrap().0, 3);
        assert_eq!(palette_lower_bound(&gen_cycle(6).unwrap(), Some(2)).unwrap().0, 1);
        assert!(palette_lower_bound(&Graph::empty(2), None).is_err());
    }

    #[test]
    fn catalog_entries() {
        let k24 = gen_complete_bipartite(2, 4).unwrap();
        let report = upper_bound_catalog(&k24).unwrap();
        assert!(report
            .upper_entries()
            .any(|e| e.tag == "even-bipartite-deg4" && e.value == 3));
        assert_eq!(report.upper.0, 3);
        assert_eq!(report.witness.as_ref().unwrap().palettes, 3);
        let k15 = gen_complete_bipartite(1, 5).unwrap();
        let report = upper_bound_catalog(&k15).unwrap();
        assert!(report.upper_entries().any(|e| e.value == 23));
        let c5 = gen_cycle(5).unwrap();
        let report = upper_bound_catalog(&c5).unwrap();
        assert!(report.upper_entries().all(|e| !e.tag.starts_with("bipartite")));
        assert!(report.witness.unwrap().palettes <= 3);
    }

    #[test]
    fn full_palette_families() {
        let tag = |g: &Graph| classify_full_palette(g).unwrap().map(|c| c.to_string());
        assert_eq!(tag(&gen_star(4).unwrap()).as_deref(), Some("K1,4"));
        assert_eq!(tag(&gen_cycle(4).unwrap()), None);
        assert_eq!(tag(&gen_complete(3)).as_deref(), Some("K3"));
        let k3_k12 = gen_complete(3).disjoint_union(&gen_star(2).unwrap());
        assert_eq!(tag(&k3_k12), None);
        let k3_k13 = gen_complete(3).disjoint_union(&gen_star(3).unwrap());
        assert_eq!(tag(&k3_k13).as_deref(), Some("K3+K1,3"));
        let pendants = Graph::new(5, vec![(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(tag(&pendants).as_deref(), Some("K3-pendants-2"));
        let joined = Graph::new(7, vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (3, 5), (3, 6)]).unwrap();
        assert_eq!(tag(&joined).as_deref(), Some("K3-star-3"));
        let with_k1 = gen_star(2).unwrap().disjoint_union(&Graph::empty(1));
        assert_eq!(tag(&with_k1).as_deref(), Some("K1,2+K1"));
        let multi = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(classify_full_palette(&multi).is_err());
    }

    #[test]
    fn palette_two_on_cycle_with_chord() {
        let g = Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let d = decide_palette_two(&g, &SearchLimits::default()).unwrap();
        assert!(d.holds);
        let cert = d.certificate.unwrap();
        assert_eq!(cert.h1, vec![6]);
        assert_eq!(cert.h2, (0..6).collect::<Vec<_>>());
        assert!(
            !decide_palette_two(&gen_star(2).unwrap(), &SearchLimits::default())
                .unwrap()
                .holds
        );
        assert!(
            !decide_palette_two(&gen_cycle(5).unwrap(), &SearchLimits::default())
                .unwrap()
                .holds
        );
    }
}
