//! Reproduction suite: every desk-scale value the library claims, recomputed
//! and compared against its expected value.
//!
//! Cases run in parallel on a rayon pool; the report is sorted by case id,
//! and its machine-readable form carries no timing, so it is byte-identical
//! across runs and worker counts.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::analysis::{
    check_certificate, classify_full_palette, decide_palette_two, palette_lower_bound, palette_summary,
};
use crate::coloring::EdgeColoring;
use crate::constructions::{
    color_biregular_auto, color_complete_bipartite, color_even_bipartite, color_grid, even_bipartite_bound,
    grid_palette_index,
};
use crate::exact::{chromatic_index_exact, naive_palette_index, palette_index_exact, SearchLimits};
use crate::graph::{
    gen_complete, gen_complete_bipartite, gen_cycle, gen_grid, gen_random_biregular, gen_random_even_bipartite,
    gen_random_graph, Graph,
};

/// Environment variable read for the worker count when none is given.
pub const THREADS_ENV: &str = "PALETTE_SUITE_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    AtMost,
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// A published value or bound.
    Stated,
    /// A closed-form bound evaluated on the instance.
    Formula,
    /// Agreement between two independent computations (expected 0
    /// mismatches) or an exhaustively known value.
    Exhaustive,
}

impl Basis {
    fn tag(self) -> &'static str {
        match self {
            Basis::Stated => "stated",
            Basis::Formula => "formula",
            Basis::Exhaustive => "exhaustive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRecord {
    pub id: String,
    pub expected: u64,
    pub comparison: Comparison,
    pub basis: Basis,
    pub computed: Option<u64>,
    /// Whether `computed` is exact rather than a bound.
    pub proved: bool,
    pub passed: bool,
    pub note: String,
    pub runtime: Duration,
}

impl CaseRecord {
    /// Stable one-line form, free of timing.
    pub fn machine_line(&self) -> String {
        let op = match self.comparison {
            Comparison::Equal => "=",
            Comparison::AtMost => "<=",
        };
        let computed = self.computed.map_or("error".to_string(), |v| v.to_string());
        format!(
            "case={} expected={op}{} basis={} computed={computed} status={} result={}",
            self.id,
            self.expected,
            self.basis.tag(),
            if self.proved { "proved" } else { "bounded" },
            if self.passed { "pass" } else { "fail" },
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub records: Vec<CaseRecord>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn machine(&self) -> String {
        self.records.iter().map(|r| r.machine_line() + "\n").collect()
    }

    pub fn human_summary(&self) -> String {
        let passed = self.records.iter().filter(|r| r.passed).count();
        let total: Duration = self.records.iter().map(|r| r.runtime).sum();
        let mut out = format!(
            "{passed}/{} cases passed, {:.2}s of case time\n",
            self.records.len(),
            total.as_secs_f64()
        );
        for r in self.records.iter().filter(|r| !r.passed) {
            writeln!(out, "FAILED {}: {}", r.id, r.note).expect("string write");
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Keep only cases whose id contains this substring.
    pub filter: Option<String>,
    /// Also run the seven-vertex full-palette enumeration (minutes).
    pub slow: bool,
    /// Worker count; falls back to [`THREADS_ENV`], then to rayon's default.
    pub threads: Option<usize>,
}

struct Outcome {
    computed: Option<u64>,
    proved: bool,
    ok: bool,
    note: String,
}

impl Outcome {
    fn value(v: u64, proved: bool) -> Self {
        Outcome {
            computed: Some(v),
            proved,
            ok: true,
            note: String::new(),
        }
    }

    fn require(mut self, ok: bool, why: &str) -> Self {
        if !ok {
            self.ok = false;
            if !self.note.is_empty() {
                self.note.push_str("; ");
            }
            self.note.push_str(why);
        }
        self
    }

    fn error(note: impl std::fmt::Display) -> Self {
        Outcome {
            computed: None,
            proved: false,
            ok: false,
            note: note.to_string(),
        }
    }
}

type Runner = Box<dyn Fn() -> Outcome + Send + Sync>;

struct Case {
    id: String,
    expected: u64,
    comparison: Comparison,
    basis: Basis,
    run: Runner,
}

fn case(
    id: impl Into<String>,
    expected: u64,
    comparison: Comparison,
    basis: Basis,
    run: impl Fn() -> Outcome + Send + Sync + 'static,
) -> Case {
    Case {
        id: id.into(),
        expected,
        comparison,
        basis,
        run: Box::new(run),
    }
}

fn palettes(g: &Graph, c: &EdgeColoring) -> Result<u64, String> {
    palette_summary(g, c)
        .map(|s| s.distinct_palettes as u64)
        .map_err(|e| e.to_string())
}

fn exact_outcome(g: &Graph) -> Outcome {
    match palette_index_exact(g, &SearchLimits::default()) {
        Ok(out) => {
            let witness_ok = palettes(g, &out.witness) == Ok(out.value as u64);
            Outcome::value(out.value as u64, out.proved)
                .require(out.proved, "search budget exhausted")
                .require(witness_ok, "witness does not attain the value")
        }
        Err(e) => Outcome::error(e),
    }
}

fn grid_cases(out: &mut Vec<Case>) {
    for m in 2..=5 {
        for n in 2..=5 {
            if m * (n - 1) + n * (m - 1) > 14 {
                continue;
            }
            out.push(case(
                format!("grid/exact/{m}x{n}"),
                grid_palette_index(m, n),
                Comparison::Equal,
                Basis::Stated,
                move || match gen_grid(m, n) {
                    Ok(g) => exact_outcome(&g),
                    Err(e) => Outcome::error(e),
                },
            ));
        }
    }
    for m in 2..=8 {
        for n in 2..=8 {
            out.push(case(
                format!("grid/construct/{m}x{n}"),
                grid_palette_index(m, n),
                Comparison::Equal,
                Basis::Stated,
                move || {
                    let (g, r) = match (gen_grid(m, n), color_grid(m, n)) {
                        (Ok(g), Ok(r)) => (g, r),
                        (Err(e), _) => return Outcome::error(e),
                        (_, Err(e)) => return Outcome::error(e),
                    };
                    let value = match palettes(&g, &r.coloring) {
                        Ok(v) => v,
                        Err(e) => return Outcome::error(e),
                    };
                    let even = (m * n) % 2 == 0;
                    let lower = palette_lower_bound(&g, None).map_or((0, ""), |b| b);
                    Outcome::value(value, even || (m, n) == (3, 3))
                        .require(r.colors_used <= 4, "more than four colors")
                        .require(
                            !even || lower == (grid_palette_index(m, n), "degree-count"),
                            "degree count does not certify the value",
                        )
                },
            ));
        }
    }
}

fn complete_bipartite_cases(out: &mut Vec<Case>) {
    let stated = [(2, 3, 4), (2, 4, 3), (1, 2, 3), (1, 3, 4), (1, 4, 5)];
    for (a, b, value) in stated {
        out.push(case(
            format!("kab/exact/{a}x{b}"),
            value,
            Comparison::Equal,
            Basis::Stated,
            move || match gen_complete_bipartite(a, b) {
                Ok(g) => exact_outcome(&g),
                Err(e) => Outcome::error(e),
            },
        ));
    }
    for a in 1..=8usize {
        for b in a + 1..=8 {
            let d = num_gcd(a, b);
            out.push(case(
                format!("kab/formula/{a}x{b}"),
                1 + (b / d) as u64,
                Comparison::Equal,
                Basis::Formula,
                move || {
                    let g = gen_complete_bipartite(a, b).expect("valid sizes");
                    match color_complete_bipartite(a, b)
                        .map_err(|e| e.to_string())
                        .and_then(|r| palettes(&g, &r.coloring))
                    {
                        Ok(v) => Outcome::value(v, false),
                        Err(e) => Outcome::error(e),
                    }
                },
            ));
        }
    }
}

fn num_gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn even_bipartite_cases(out: &mut Vec<Case>) {
    for seed in 0..50u64 {
        let delta = if seed % 2 == 0 { 4 } else { 6 };
        let g = match gen_random_even_bipartite(delta, seed) {
            Ok(g) => g,
            Err(e) => {
                let note = e.to_string();
                out.push(case(
                    format!("even/random/{seed:02}"),
                    0,
                    Comparison::AtMost,
                    Basis::Formula,
                    move || Outcome::error(&note),
                ));
                continue;
            }
        };
        let bound = even_bipartite_bound(&g);
        out.push(case(
            format!("even/random/{seed:02}"),
            bound,
            Comparison::AtMost,
            Basis::Formula,
            move || match color_even_bipartite(&g)
                .map_err(|e| e.to_string())
                .and_then(|r| palettes(&g, &r.coloring))
            {
                Ok(v) => Outcome::value(v, false),
                Err(e) => Outcome::error(e),
            },
        ));
    }
}

fn routed_outcome(g: &Graph, expected_bound: u64) -> Outcome {
    let r = match color_biregular_auto(g) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let value = match palettes(g, &r.coloring) {
        Ok(v) => v,
        Err(e) => return Outcome::error(e),
    };
    let lower = palette_lower_bound(g, None).map(|(v, _)| v).unwrap_or(u64::MAX);
    Outcome::value(value, false)
        .require(
            r.claimed_palette_bound <= expected_bound,
            "claimed bound above the family bound",
        )
        .require(value <= r.claimed_palette_bound, "palettes above the claimed bound")
        .require(lower <= r.claimed_palette_bound, "lower bound above the claimed bound")
}

fn biregular_cases(out: &mut Vec<Case>) {
    // (a, b, bound, exact)
    let profiles: [(usize, usize, u64, bool); 10] = [
        (2, 4, 3, true),
        (2, 6, 4, true),
        (3, 6, 5, false),
        (3, 9, 10, false),
        (4, 8, 5, false),
        (4, 12, 10, false),
        (5, 10, 9, false),
        (6, 12, 9, false),
        (3, 5, 7, false),
        (2, 3, 4, false),
    ];
    for (a, b, bound, exact) in profiles {
        for (scale, seed) in [(1, 1), (2, 1), (3, 2)] {
            out.push(case(
                format!("biregular/{a}-{b}/s{scale}-{seed}"),
                bound,
                if exact { Comparison::Equal } else { Comparison::AtMost },
                Basis::Stated,
                move || match gen_random_biregular(a, b, scale, seed) {
                    Ok(g) => {
                        let o = routed_outcome(&g, bound);
                        Outcome { proved: exact, ..o }
                    }
                    Err(e) => Outcome::error(e),
                },
            ));
        }
    }
}

fn max_degree_plus_one_cases(out: &mut Vec<Case>) {
    let profiles = [
        (2, 4),
        (2, 6),
        (2, 8),
        (4, 6),
        (6, 8),
        (8, 10),
        (3, 6),
        (3, 9),
        (4, 8),
        (4, 12),
        (4, 16),
        (5, 10),
        (6, 9),
        (6, 12),
        (8, 12),
        (8, 16),
        (12, 16),
    ];
    for (a, b) in profiles {
        out.push(case(
            format!("bplus1/{a}-{b}/s2"),
            1 + b as u64,
            Comparison::AtMost,
            Basis::Stated,
            move || match gen_random_biregular(a, b, 2, 7) {
                Ok(g) => routed_outcome(&g, u64::MAX),
                Err(e) => Outcome::error(e),
            },
        ));
    }
}

/// Smallest edge bitmask over all relabelings of a graph on `n` vertices.
fn canonical_mask(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>], index: &[Vec<usize>]) -> u32 {
    perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u32, |acc, &(u, v)| acc | 1 << index[p[u].min(p[v])][p[u].max(p[v])])
        })
        .min()
        .unwrap_or(0)
        & if n > 0 { u32::MAX } else { 0 }
}

/// Mismatches between the structural full-palette test and the exact
/// solver over all graphs on `n` vertices without isolated vertices, and
/// whether every exact value was proved.
pub fn full_palette_mismatches(n: usize) -> (u64, bool) {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut index = vec![vec![0; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
    }
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut exact_by_class: HashMap<u32, (usize, bool)> = HashMap::new();
    let mut mismatches = 0;
    let mut all_proved = true;
    for mask in 1u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let mut covered = vec![false; n];
        for &(u, v) in &edges {
            covered[u] = true;
            covered[v] = true;
        }
        if covered.contains(&false) {
            continue;
        }
        let g = Graph::new(n, edges.clone()).expect("simple graph");
        let key = canonical_mask(n, &edges, &perms, &index);
        let (value, proved) = *exact_by_class.entry(key).or_insert_with(|| {
            let out = palette_index_exact(&g, &SearchLimits::default()).expect("loopless");
            (out.value, out.proved)
        });
        all_proved &= proved;
        let full = classify_full_palette(&g).expect("simple").is_some();
        if full != (value == n) {
            mismatches += 1;
        }
    }
    (mismatches, all_proved)
}

fn full_palette_cases(out: &mut Vec<Case>, slow: bool) {
    let top = if slow { 7 } else { 6 };
    for n in 2..=top {
        out.push(case(
            format!("full-palette/n{n}"),
            0,
            Comparison::Equal,
            Basis::Exhaustive,
            move || {
                let (mismatches, proved) = full_palette_mismatches(n);
                Outcome::value(mismatches, proved).require(proved, "search budget exhausted")
            },
        ));
    }
}

/// Union of a spanning regular Class 1 graph and a matching on a proper
/// subset of its vertices, avoiding its edges.
pub fn palette_two_instance(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prism = Graph::new(
        6,
        vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .expect("prism");
    let cube = Graph::new(
        8,
        (0..8usize)
            .flat_map(|v| [1, 2, 4].into_iter().map(move |bit| (v, v ^ bit)))
            .filter(|&(u, v)| u < v)
            .collect(),
    )
    .expect("cube");
    let base = match rng.gen_range(0..6) {
        0 => gen_cycle(6).expect("cycle"),
        1 => gen_cycle(8).expect("cycle"),
        2 => gen_cycle(10).expect("cycle"),
        3 => gen_complete_bipartite(3, 3).expect("K33"),
        4 => prism,
        _ => cube,
    };
    let n = base.vertex_count();
    let mut free: Vec<(usize, usize)> = (0..n)
        .tuple_combinations()
        .filter(|&(u, v)| !base.neighbors(u).any(|w| w == v))
        .collect();
    let wanted = rng.gen_range(1..=2usize.min((n - 1) / 2));
    let mut edges = base.edges().to_vec();
    let mut used = vec![false; n];
    let mut taken = 0;
    while taken < wanted && !free.is_empty() {
        let (u, v) = free.swap_remove(rng.gen_range(0..free.len()));
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            edges.push((u, v));
            taken += 1;
        }
    }
    Graph::new(n, edges).expect("simple union")
}

/// Regular simple graphs with at most eight edges, one per isomorphism
/// class: matchings, disjoint unions of cycles, and `K4`.
pub fn small_regular_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for m in 1..=8 {
        let edges = (0..m).map(|i| (2 * i, 2 * i + 1)).collect();
        out.push((format!("{m}K2"), Graph::new(2 * m, edges).expect("matching")));
    }
    fn parts(left: usize, min: usize, acc: &mut Vec<usize>, all: &mut Vec<Vec<usize>>) {
        if !acc.is_empty() {
            all.push(acc.clone());
        }
        for p in min..=left {
            acc.push(p);
            parts(left - p, p, acc, all);
            acc.pop();
        }
    }
    let mut all = Vec::new();
    parts(8, 3, &mut Vec::new(), &mut all);
    for cycles in all {
        let g = cycles
            .iter()
            .map(|&len| gen_cycle(len).expect("cycle"))
            .reduce(|a, b| a.disjoint_union(&b))
            .expect("nonempty");
        let name = cycles.iter().map(|len| format!("C{len}")).join("+");
        out.push((name, g));
    }
    out.push(("K4".to_string(), gen_complete(4)));
    out
}

fn palette_two_cases(out: &mut Vec<Case>) {
    for seed in 0..20u64 {
        out.push(case(
            format!("palette-two/union/{seed:02}"),
            2,
            Comparison::Equal,
            Basis::Exhaustive,
            move || {
                let g = palette_two_instance(seed);
                let limits = SearchLimits::default();
                let decision = match decide_palette_two(&g, &limits) {
                    Ok(d) => d,
                    Err(e) => return Outcome::error(e),
                };
                let Some(cert) = decision.certificate.filter(|_| decision.holds) else {
                    return Outcome::value(0, true).require(false, "not recognized as palette index two");
                };
                let class_one = [&cert.h1, &cert.h2].into_iter().all(|layer| {
                    let h = g.edge_subgraph(layer);
                    chromatic_index_exact(&h, &limits) == Ok(h.max_degree())
                });
                Outcome::value(2, true)
                    .require(check_certificate(&g, &cert).is_ok(), "certificate invalid")
                    .require(class_one, "a layer is not Class 1")
                    .require(
                        cert.h1.len() + cert.h2.len() == g.edge_count(),
                        "layers do not cover the graph",
                    )
            },
        ));
    }
    for (name, g) in small_regular_graphs() {
        // Class 2 exactly when some cycle is odd; matchings and K4 are Class 1.
        let odd_cycle = name.split('+').any(|part| {
            part.strip_prefix('C')
                .is_some_and(|len| len.parse::<usize>().is_ok_and(|l| l % 2 == 1))
        });
        let expected = if odd_cycle { 3 } else { 1 };
        out.push(case(
            format!("palette-two/regular/{name}"),
            expected,
            Comparison::Equal,
            Basis::Exhaustive,
            move || {
                let decision = decide_palette_two(&g, &SearchLimits::default());
                exact_outcome(&g).require(matches!(decision, Ok(ref d) if !d.holds), "reported palette index two")
            },
        ));
    }
}

fn oracle_cases(out: &mut Vec<Case>) {
    for batch in 0..8u64 {
        out.push(case(
            format!("oracle/batch-{batch}"),
            0,
            Comparison::Equal,
            Basis::Exhaustive,
            move || {
                let mut mismatches = 0;
                for i in 0..25 {
                    let g = oracle_graph(batch * 25 + i);
                    let pruned = palette_index_exact(&g, &SearchLimits::default()).map(|o| o.value);
                    let naive = naive_palette_index(&g);
                    if pruned.is_err() || pruned != naive {
                        mismatches += 1;
                    }
                }
                Outcome::value(mismatches, true)
            },
        ));
    }
}

/// The `index`-th graph of the fixed oracle corpus: at most seven vertices
/// and seven edges.
pub fn oracle_graph(index: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + index);
    let n = rng.gen_range(2..=7usize);
    let m = rng.gen_range(1..=7usize.min(n * (n - 1) / 2));
    gen_random_graph(n, m, rng.gen()).expect("edge count fits")
}

fn all_cases(slow: bool) -> Vec<Case> {
    let mut out = Vec::new();
    grid_cases(&mut out);
    complete_bipartite_cases(&mut out);
    even_bipartite_cases(&mut out);
    biregular_cases(&mut out);
    max_degree_plus_one_cases(&mut out);
    full_palette_cases(&mut out, slow);
    palette_two_cases(&mut out);
    oracle_cases(&mut out);
    out
}

fn selected(options: &SuiteOptions) -> Vec<Case> {
    let mut cases: Vec<Case> = all_cases(options.slow)
        .into_iter()
        .filter(|c| options.filter.as_deref().is_none_or(|f| c.id.contains(f)))
        .collect();
    cases.sort_by(|a, b| a.id.cmp(&b.id));
    cases
}

/// Ids of the cases a run with these options would execute, in report order.
pub fn case_ids(options: &SuiteOptions) -> Vec<String> {
    selected(options).into_iter().map(|c| c.id).collect()
}

fn worker_count(options: &SuiteOptions) -> Option<usize> {
    options.threads.or_else(|| {
        std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&n: &usize| n > 0)
    })
}

fn execute(c: &Case) -> CaseRecord {
    let start = Instant::now();
    let outcome = (c.run)();
    let runtime = start.elapsed();
    let compared = outcome.computed.is_some_and(|v| match c.comparison {
        Comparison::Equal => v == c.expected,
        Comparison::AtMost => v <= c.expected,
    });
    let mut note = outcome.note;
    if !compared && outcome.computed.is_some() {
        if !note.is_empty() {
            note.push_str("; ");
        }
        note.push_str("computed value fails the comparison");
    }
    CaseRecord {
        id: c.id.clone(),
        expected: c.expected,
        comparison: c.comparison,
        basis: c.basis,
        computed: outcome.computed,
        proved: outcome.proved,
        passed: compared && outcome.ok,
        note,
        runtime,
    }
}

pub fn run_suite(options: &SuiteOptions) -> SuiteReport {
    let cases = selected(options);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = worker_count(options) {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().expect("thread pool");
    let records = pool.install(|| cases.par_iter().map(execute).collect());
    SuiteReport { records }
}
