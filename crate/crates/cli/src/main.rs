//! `palette`: generate graphs, build and check edge colorings, compute palette
//! indices and bounds, and run the reproduction suite.
//!
//! Exit codes: 0 success, 1 a negative answer (improper coloring, failing
//! suite), 2 usage or input errors, 3 an exact search that ran out of budget.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use palette_core::analysis::{classify_full_palette, recognize_grid, upper_bound_catalog};
use palette_core::constructions::{
    color_biregular_auto, color_deg5, color_even_bipartite, color_grid, color_via_doubling,
};
use palette_core::exact::palette_index_exact;
use palette_core::graph::{biregular_bipartition, gen_complete_bipartite, gen_grid, gen_random_biregular, gen_star};
use palette_core::io::{parse_coloring, parse_graph, serialize_coloring, serialize_graph};
use palette_core::suite::{run_suite, SuiteOptions};
use palette_core::{palette_summary, verify_proper, EdgeColoring, Graph, SearchLimits};

#[derive(Parser)]
#[command(name = "palette", version, about = "Palette index toolkit for proper edge colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Grid,
    Kab,
    Biregular,
    Star,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Auto,
    Even,
    Doubling,
    Deg5,
    Grid,
    Kab,
    Biregular,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph file to standard output.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Grid rows.
        #[arg(long)]
        m: Option<usize>,
        /// Grid columns.
        #[arg(long)]
        n: Option<usize>,
        /// Smaller degree (kab, biregular).
        #[arg(long)]
        a: Option<usize>,
        /// Larger degree (kab, biregular).
        #[arg(long)]
        b: Option<usize>,
        /// Size multiplier for random biregular graphs.
        #[arg(long, default_value_t = 1)]
        scale: usize,
        /// Number of star leaves.
        #[arg(long)]
        leaves: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Color a graph with an explicit construction.
    Color {
        #[arg(long, value_enum, default_value = "auto")]
        strategy: Strategy,
        /// Graph file; standard input when omitted or `-`.
        graph: Option<PathBuf>,
        /// Write the coloring file here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute the palette index by exhaustive search.
    Exact {
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long)]
        max_seconds: Option<f64>,
        graph: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List lower and upper palette bounds.
    Bounds { graph: Option<PathBuf> },
    /// Check that a coloring is proper for a graph.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Name the family of a graph whose palette index equals its order.
    Classify { graph: Option<PathBuf> },
    /// Run the reproduction suite.
    Suite {
        /// Run only cases whose id contains this text.
        #[arg(long)]
        filter: Option<String>,
        /// Also run the seven-vertex full-palette enumeration (minutes).
        #[arg(long)]
        slow: bool,
        /// Worker threads (default: PALETTE_SUITE_THREADS or all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<Graph> {
    let text = read_text(path)?;
    let name = path.map_or("standard input".into(), |p| p.display().to_string());
    parse_graph(&text).with_context(|| format!("parsing graph from {name}"))
}

fn need(value: Option<usize>, flag: &str) -> Result<usize> {
    value.with_context(|| format!("--{flag} is required for this family"))
}

// The coloring file, then the summary as a comment so the output stays a
// valid coloring file.
fn emit_coloring(out: &mut String, output: Option<&Path>, body: String, summary: String) -> Result<()> {
    match output {
        Some(p) => {
            fs::write(p, &body).with_context(|| format!("writing {}", p.display()))?;
            out.push_str(&summary);
        }
        None => {
            out.push_str(&body);
            out.push_str("# ");
            out.push_str(&summary);
        }
    }
    out.push('\n');
    Ok(())
}

fn colored(strategy: Strategy, g: &Graph) -> Result<(EdgeColoring, u64, String)> {
    let result = match strategy {
        Strategy::Auto => {
            let report = upper_bound_catalog(g)?;
            let bound_for = |tag: &str| report.upper_entries().filter(|e| e.tag == tag).map(|e| e.value).min();
            let w = report
                .witness
                .clone()
                .context("no construction applies to this graph")?;
            let bound = bound_for(w.tag).unwrap_or(w.palettes as u64);
            return Ok((w.coloring, bound, w.tag.to_string()));
        }
        Strategy::Even => color_even_bipartite(g)?,
        Strategy::Doubling => color_via_doubling(g)?,
        Strategy::Deg5 => color_deg5(g)?,
        Strategy::Grid => {
            let (m, n) = recognize_grid(g).context("input is not a grid as written by `gen --family grid`")?;
            color_grid(m, n)?
        }
        Strategy::Kab => {
            let (p, _) = biregular_bipartition(g).context("input is not complete bipartite")?;
            if !g.is_simple() || g.edge_count() != p.x_count * p.y_count {
                bail!("input is not complete bipartite");
            }
            color_biregular_auto(g)?
        }
        Strategy::Biregular => color_biregular_auto(g)?,
    };
    Ok((
        result.coloring,
        result.claimed_palette_bound,
        result.construction.tag().to_string(),
    ))
}

fn run(cli: Cli, out: &mut String) -> Result<u8> {
    match cli.command {
        Command::Gen {
            family,
            m,
            n,
            a,
            b,
            scale,
            leaves,
            seed,
        } => {
            let g = match family {
                Family::Grid => gen_grid(need(m, "m")?, need(n, "n")?)?,
                Family::Kab => gen_complete_bipartite(need(a, "a")?, need(b, "b")?)?,
                Family::Biregular => gen_random_biregular(need(a, "a")?, need(b, "b")?, scale, seed)?,
                Family::Star => gen_star(need(leaves, "leaves")?)?,
            };
            out.push_str(&serialize_graph(&g));
            Ok(0)
        }
        Command::Color {
            strategy,
            graph,
            output,
        } => {
            let g = read_graph(graph.as_deref())?;
            let (coloring, bound, tag) = colored(strategy, &g)?;
            let k = palette_summary(&g, &coloring)?.distinct_palettes;
            let summary = format!("palettes={k} bound={bound} theorem={tag}");
            emit_coloring(out, output.as_deref(), serialize_coloring(&coloring, k), summary)?;
            Ok(0)
        }
        Command::Exact {
            max_nodes,
            max_seconds,
            graph,
            output,
        } => {
            let g = read_graph(graph.as_deref())?;
            let mut limits = SearchLimits::default();
            if let Some(n) = max_nodes {
                limits.max_nodes = n;
            }
            if let Some(s) = max_seconds {
                limits.max_seconds = s;
            }
            let result = palette_index_exact(&g, &limits)?;
            let summary = format!("palette_index={} proved={}", result.value, result.proved);
            let body = serialize_coloring(&result.witness, result.value);
            emit_coloring(out, output.as_deref(), body, summary)?;
            if !result.proved {
                eprintln!(
                    "search budget exhausted after {} nodes; value is an upper bound",
                    result.nodes
                );
                return Ok(3);
            }
            Ok(0)
        }
        Command::Bounds { graph } => {
            let g = read_graph(graph.as_deref())?;
            let report = upper_bound_catalog(&g)?;
            out.push_str(&format!("lower {} {}\n", report.lower.0, report.lower.1));
            for e in report.upper_entries() {
                out.push_str(&format!("upper {} {}\n", e.value, e.tag));
            }
            Ok(0)
        }
        Command::Verify { graph, coloring } => {
            let g = read_graph(Some(&graph))?;
            let file = parse_coloring(&read_text(Some(&coloring))?)
                .with_context(|| format!("parsing coloring from {}", coloring.display()))?;
            if file.coloring.len() != g.edge_count() {
                bail!(
                    "coloring lists {} edges but the graph has {}",
                    file.coloring.len(),
                    g.edge_count()
                );
            }
            let violations = verify_proper(&g, &file.coloring)?;
            if violations.is_empty() {
                let k = palette_summary(&g, &file.coloring)?.distinct_palettes;
                out.push_str(&format!("proper palettes={k} colors={}\n", file.coloring.colors_used()));
                if k != file.distinct_palettes || file.coloring.colors_used() != file.colors_used {
                    eprintln!(
                        "header says {} colors and {} palettes",
                        file.colors_used, file.distinct_palettes
                    );
                }
                return Ok(0);
            }
            for v in violations {
                out.push_str(&format!(
                    "violation vertex={} edges={},{} color={}\n",
                    v.vertex + 1,
                    v.edges.0 + 1,
                    v.edges.1 + 1,
                    v.color
                ));
            }
            Ok(1)
        }
        Command::Classify { graph } => {
            let g = read_graph(graph.as_deref())?;
            match classify_full_palette(&g)? {
                Some(class) => out.push_str(&format!("{class}\n")),
                None => out.push_str("none\n"),
            }
            Ok(0)
        }
        Command::Suite { filter, slow, threads } => {
            let report = run_suite(&SuiteOptions { filter, slow, threads });
            out.push_str(&report.machine());
            eprint!("{}", report.human_summary());
            Ok(if report.all_passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = String::new();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    let mut stdout = io::stdout().lock();
    if stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
