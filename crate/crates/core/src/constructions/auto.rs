use std::collections::HashMap;

use crate::coloring::EdgeColoring;
use crate::decompose::konig_coloring;
use crate::error::ConstructionError;
use crate::graph::{bipartition, biregular_bipartition, Bipartition, BiregularProfile, Graph, Side};

use super::{
    binomial, color_2_odd, color_3_3r, color_3_5, color_4_4r, color_5_5r, color_complete_bipartite,
    color_even_bipartite, color_r_2r, finish, profile_mismatch, Construction, ConstructionResult,
};

#[derive(Clone, Copy, Debug)]
enum Route {
    Regular,
    Star,
    Complete,
    Even,
    TwoOdd,
    ThreeThreeR,
    FourFourR,
    FiveFiveR,
    RTwoR,
    ThreeFive,
    Konig,
}

fn candidates(g: &Graph, p: &BiregularProfile) -> Vec<(u64, Route)> {
    let (a, b) = (p.a, p.b);
    if a == b {
        return vec![(1, Route::Regular)];
    }
    let mut out = Vec::new();
    if a == 1 {
        out.push((b as u64 + 1, Route::Star));
    }
    let complete = g.is_simple() && g.edge_count() == p.x_count * p.y_count;
    if complete {
        let d = gcd(a, b);
        out.push((1 + (b / d) as u64, Route::Complete));
    }
    if a % 2 == 0 && b % 2 == 0 {
        out.push((1 + binomial(b as u64 / 2, a as u64 / 2), Route::Even));
    }
    if a == 2 && b % 2 == 1 && b < 64 {
        out.push((b as u64 + 1, Route::TwoOdd));
    }
    if b % 3 == 0 && b >= 6 && (a == 3 || a + 3 == b) {
        let r = (b / 3) as u64;
        out.push((r * r + 1, Route::ThreeThreeR));
    }
    if b % 4 == 0 && b >= 8 && (a == 4 || a + 4 == b) {
        let r = (b / 4) as u64;
        out.push((r * r + 1, Route::FourFourR));
    }
    if a == 5 && b % 5 == 0 && b >= 10 {
        let r = (b / 5) as u64;
        out.push((r.saturating_pow(3) + 1, Route::FiveFiveR));
    }
    if a >= 2 && b == 2 * a && a < 64 {
        out.push(((1u64 << a.div_ceil(2)) + 1, Route::RTwoR));
    }
    if (a, b) == (3, 5) {
        out.push((7, Route::ThreeFive));
    }
    out.push((binomial(b as u64, a as u64).saturating_add(1), Route::Konig));
    // stable: specific constructions win ties against generic ones
    out.sort_by_key(|&(bound, _)| bound);
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn konig(
    g: &Graph,
    bip: &Bipartition,
    bound: u64,
    construction: Construction,
) -> Result<ConstructionResult, ConstructionError> {
    let coloring = konig_coloring(g, bip)?;
    finish(g, coloring, bound, construction)
}

// Transfer the labeled K_{a,b} coloring: generated u_i (degree b) go to the
// Y vertices in ascending order, generated v_j to the X vertices.
fn complete(
    g: &Graph,
    bip: &Bipartition,
    p: &BiregularProfile,
    bound: u64,
) -> Result<ConstructionResult, ConstructionError> {
    let template = color_complete_bipartite(p.a, p.b)?;
    let ys = bip.vertices_on(Side::Y);
    let xs = bip.vertices_on(Side::X);
    let mut edge_of = HashMap::with_capacity(g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edge_of.insert((u.min(v), u.max(v)), e);
    }
    let mut coloring = EdgeColoring::uncolored(g.edge_count());
    for (i, &y) in ys.iter().enumerate() {
        for (j, &x) in xs.iter().enumerate() {
            let e = edge_of[&(x.min(y), x.max(y))];
            let c = template.coloring.get(i * p.b + j).expect("template is total");
            coloring.set(e, c);
        }
    }
    finish(g, coloring, bound, Construction::CompleteBipartite)
}

/// Color a biregular bipartite graph with the construction carrying the
/// smallest palette bound among those that apply.
///
/// Regular bipartite graphs get a König coloring with a single palette.
/// Every other profile has at least the generic König fallback with
/// `1 + C(b, a)` palettes. A construction that fails at runtime (for
/// example an exhausted interval search) is skipped in favour of the next
/// best. Even bipartite graphs that are not biregular but whose degree set is
/// `{2, 2r}` or `{2r-2, 2r}` are routed to the even construction.
pub fn color_biregular_auto(g: &Graph) -> Result<ConstructionResult, ConstructionError> {
    const EXPECTED: &str = "a biregular bipartite graph";
    let Some((p, bip)) = biregular_bipartition(g) else {
        let degrees: Vec<usize> = g.degree_set().into_iter().collect();
        let two_even = matches!(degrees.as_slice(), &[lo, hi] if lo > 0 && hi % 2 == 0 && (lo == 2 || lo + 2 == hi));
        if two_even && g.is_even() && bipartition(g).is_some() {
            return color_even_bipartite(g);
        }
        return Err(profile_mismatch(EXPECTED, g));
    };
    let mut last_err = None;
    for (bound, route) in candidates(g, &p) {
        let attempt = match route {
            Route::Regular => konig(g, &bip, bound, Construction::RegularKonig),
            Route::Star => konig(g, &bip, bound, Construction::Star),
            Route::Konig => konig(g, &bip, bound, Construction::BiregularKonig),
            Route::Complete => complete(g, &bip, &p, bound),
            Route::Even => color_even_bipartite(g),
            Route::TwoOdd => color_2_odd(g),
            Route::ThreeThreeR => color_3_3r(g),
            Route::FourFourR => color_4_4r(g),
            Route::FiveFiveR => color_5_5r(g),
            Route::RTwoR => color_r_2r(g),
            Route::ThreeFive => color_3_5(g),
        };
        match attempt {
            Ok(result) => return Ok(result),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or_else(|| profile_mismatch(EXPECTED, g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::palette_summary;
    use crate::graph::{gen_complete_bipartite, gen_cycle, gen_random_biregular, gen_star};

    #[test]
    fn picks_smallest_bound() {
        let cases = [
            (gen_complete_bipartite(3, 3).unwrap(), 1, Construction::RegularKonig),
            (gen_star(4).unwrap(), 5, Construction::Star),
            (
                gen_complete_bipartite(2, 4).unwrap(),
                3,
                Construction::CompleteBipartite,
            ),
            (
                gen_random_biregular(2, 6, 2, 1).unwrap(),
                4,
                Construction::EvenBipartite,
            ),
            (gen_random_biregular(2, 5, 2, 1).unwrap(), 6, Construction::TwoByOdd),
            (gen_random_biregular(3, 5, 2, 1).unwrap(), 7, Construction::ThreeByFive),
            (
                gen_random_biregular(3, 9, 2, 1).unwrap(),
                10,
                Construction::ThreeByThreeR,
            ),
            (gen_random_biregular(5, 10, 2, 1).unwrap(), 9, Construction::FiveByFiveR),
            (gen_random_biregular(4, 8, 2, 1).unwrap(), 5, Construction::FourByFourR),
            (
                gen_random_biregular(3, 4, 2, 1).unwrap(),
                5,
                Construction::BiregularKonig,
            ),
        ];
        for (g, bound, construction) in cases {
            let r = color_biregular_auto(&g).unwrap();
            assert_eq!((r.claimed_palette_bound, r.construction), (bound, construction));
            let s = palette_summary(&g, &r.coloring).unwrap();
            assert!(s.distinct_palettes as u64 <= bound);
        }
    }

    #[test]
    fn complete_template_on_relabeled_graph() {
        let g = gen_complete_bipartite(4, 6).unwrap();
        let flipped = Graph::new(10, g.edges().iter().map(|&(u, v)| (9 - u, 9 - v)).collect()).unwrap();
        let r = color_biregular_auto(&flipped).unwrap();
        assert_eq!(r.construction, Construction::CompleteBipartite);
        assert_eq!(palette_summary(&flipped, &r.coloring).unwrap().distinct_palettes, 4);
    }

    #[test]
    fn non_biregular_inputs() {
        assert!(color_biregular_auto(&gen_cycle(5).unwrap()).is_err());
        let mixed = gen_cycle(4)
            .unwrap()
            .disjoint_union(&gen_complete_bipartite(2, 4).unwrap());
        let r = color_biregular_auto(&mixed).unwrap();
        assert_eq!(r.construction, Construction::EvenBipartite);
    }
}
