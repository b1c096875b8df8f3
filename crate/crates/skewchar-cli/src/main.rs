//! skewchar: compute skew characteristic polynomials of graphs, chord diagrams,
//! ribbon graphs, antisymmetric matrices and delta-matroids, and run the
//! structural verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use skewchar::chord::ChordDiagram;
use skewchar::dmatroid::{recognize_binary, DeltaMatroid, SetSystem};
use skewchar::error::Error;
use skewchar::fourterm::{parse_reduction_script, run_reduction_script};
use skewchar::graph::{parse_int_matrix, Graph, IntSkewMatrix};
use skewchar::hopf::{graph_sum_to_json, format_rational, primitive_projection, q_on_primitive_projection};
use skewchar::polynomial::Polynomial;
use skewchar::ribbon::RibbonGraph;
use skewchar::verify;

#[derive(Parser)]
#[command(name = "skewchar", version, about = "Skew characteristic polynomial toolkit")]
struct Cli {
    /// Worker threads for the parallel subset scans (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoFlags {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Skew characteristic polynomial of a simple graph (edge-list input).
    Graph {
        /// Inline edge list, a file path, or "-" for stdin.
        input: String,
        /// Compute the refined two-variable polynomial instead.
        #[arg(long)]
        refined: bool,
        /// Cap on the 2^n subset enumeration.
        #[arg(long, default_value_t = skewchar::graph::DEFAULT_SUBSET_CAP)]
        cap: usize,
        #[command(flatten)]
        io: IoFlags,
    },
    /// Skew characteristic polynomial of a chord diagram (double-occurrence word).
    Chord {
        /// Inline word, a file path, or "-" for stdin.
        input: String,
        /// Refined polynomial of the intersection graph instead.
        #[arg(long)]
        refined: bool,
        #[arg(long, default_value_t = skewchar::graph::DEFAULT_SUBSET_CAP)]
        cap: usize,
        #[command(flatten)]
        io: IoFlags,
    },
    /// Boundary components, quasi-trees and delta-matroid of a ribbon graph
    /// (rotation-system JSON).
    Ribbon {
        /// File path or "-" for stdin.
        input: String,
        #[arg(long, default_value_t = skewchar::ribbon::DEFAULT_EDGE_CAP)]
        cap: usize,
        #[command(flatten)]
        io: IoFlags,
    },
    /// Validate a set system and compute the delta-matroid polynomial
    /// (set-system JSON).
    Dmatroid {
        /// File path or "-" for stdin.
        input: String,
        #[command(flatten)]
        io: IoFlags,
    },
    /// Characteristic polynomial of an antisymmetric integer matrix
    /// (whitespace-separated rows).
    Matrix {
        /// File path or "-" for stdin.
        input: String,
        #[command(flatten)]
        io: IoFlags,
    },
    /// Projection of a graph to the subspace of primitives, and Q evaluated on it.
    Project {
        /// Inline edge list, a file path, or "-" for stdin.
        input: String,
        #[command(flatten)]
        io: IoFlags,
    },
    /// Polynomial tables for graph series.
    Series {
        /// Series name: kn (complete graphs) or kmn (complete bipartite).
        kind: String,
        /// Largest size to tabulate.
        #[arg(long, default_value_t = 6)]
        max: usize,
        /// Tabulate refined polynomials.
        #[arg(long)]
        refined: bool,
        #[command(flatten)]
        io: IoFlags,
    },
    /// Structural verification suites.
    Check {
        /// One of: graph-4t, matrix-4t, two-term, cut-point, constancy,
        /// lemma-7-1-2, boundary-corank, dm-multiplicativity,
        /// graphic-dm-equality, hamiltonian, reduction.
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[arg(long, default_value_t = 5)]
        max_chords: usize,
        /// Exhaustive corpus instead of a random one, where applicable.
        #[arg(long)]
        exhaustive: bool,
        /// Seed of the ChaCha8 corpus stream.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random trials.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Reduction-script JSON file (for the reduction suite).
        #[arg(long)]
        script: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads(cli.threads);
    match run(cli.command) {
        Ok(verified) => {
            if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_threads(threads: Option<usize>) {
    if let Some(n) = threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_threads(_threads: Option<usize>) {}

/// Ok(true) = success, Ok(false) = a verification suite failed.
fn run(command: Command) -> Result<bool, Error> {
    match command {
        Command::Graph {
            input,
            refined,
            cap,
            io,
        } => {
            let g = Graph::parse_edge_list(&read_input(&input)?)?;
            let p = if refined {
                g.refined_poly_capped(cap)?
            } else {
                g.skew_char_poly_capped(cap)?
            };
            print_poly(&p, io.json)?;
            Ok(true)
        }
        Command::Chord {
            input,
            refined,
            cap,
            io,
        } => {
            let text = read_input(&input)?;
            // Files may carry one word per line; a single word computes one value.
            let words: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
            let mut outputs = Vec::new();
            for word in if words.len() > 1 { words } else { vec![text.trim()] } {
                let c = ChordDiagram::parse(word)?;
                let p = if refined {
                    c.intersection_graph().refined_poly_capped(cap)?
                } else {
                    c.skew_char_poly_capped(cap)?
                };
                outputs.push(p);
            }
            if io.json {
                if outputs.len() == 1 {
                    println!("{}", outputs[0].to_json()?);
                } else {
                    let items: Result<Vec<serde_json::Value>, Error> =
                        outputs.iter().map(|p| p.to_json()).collect();
                    println!("{}", serde_json::Value::Array(items?));
                }
            } else {
                for p in outputs {
                    println!("{p}");
                }
            }
            Ok(true)
        }
        Command::Ribbon { input, cap, io } => {
            let value: serde_json::Value = serde_json::from_str(&read_file(&input)?)
                .map_err(|e| Error::parse("ribbon json", e.to_string()))?;
            let r = RibbonGraph::from_json(&value)?;
            let quasi_trees = r.spanning_quasi_trees_capped(cap)?;
            let dm = r.delta_matroid()?;
            let poly = dm.skew_poly()?;
            if io.json {
                let out = serde_json::json!({
                    "vertices": r.n_vertices(),
                    "edges": r.n_edges(),
                    "boundary_components": r.boundary_components_full(),
                    "quasi_trees": quasi_trees.len(),
                    "delta_matroid": dm.as_set_system().to_json(),
                    "polynomial": poly.to_json()?,
                });
                println!("{out}");
            } else {
                println!("vertices: {}", r.n_vertices());
                println!("edges: {}", r.n_edges());
                println!("boundary components: {}", r.boundary_components_full());
                println!("spanning quasi-trees: {}", quasi_trees.len());
                println!("delta-matroid: {}", dm.as_set_system().to_json());
                println!("Q = {poly}");
            }
            Ok(true)
        }
        Command::Dmatroid { input, io } => {
            let value: serde_json::Value = serde_json::from_str(&read_file(&input)?)
                .map_err(|e| Error::parse("set-system json", e.to_string()))?;
            let system = SetSystem::from_json(&value)?;
            let sea = system.is_delta_matroid();
            let even = system.is_even();
            let binary = recognize_binary(&system)?.is_some();
            let poly = if sea && even && binary {
                Some(DeltaMatroid::try_new(system.clone())?.skew_poly()?)
            } else {
                None
            };
            if io.json {
                let out = serde_json::json!({
                    "delta_matroid": sea,
                    "even": even,
                    "binary": binary,
                    "polynomial": poly.as_ref().map(|p| p.to_json()).transpose()?,
                });
                println!("{out}");
            } else {
                println!("delta-matroid: {sea}");
                println!("even: {even}");
                println!("binary: {binary}");
                match poly {
                    Some(p) => println!("Q = {p}"),
                    None => println!("Q = (undefined: needs an even binary delta-matroid)"),
                }
            }
            Ok(true)
        }
        Command::Matrix { input, io } => {
            let (n, entries) = parse_int_matrix(&read_file(&input)?)?;
            let m = IntSkewMatrix::new(n, entries)?;
            print_poly(&m.char_poly(), io.json)?;
            Ok(true)
        }
        Command::Project { input, io } => {
            let g = Graph::parse_edge_list(&read_input(&input)?)?;
            let pi = primitive_projection(&g)?;
            let value = q_on_primitive_projection(&g)?;
            if io.json {
                let out = serde_json::json!({
                    "projection": graph_sum_to_json(&pi),
                    "q_value": value.to_json()?,
                });
                println!("{out}");
            } else {
                for (_, graph, coeff) in pi.terms() {
                    let edges: Vec<String> = graph
                        .edges()
                        .iter()
                        .map(|(a, b)| format!("{a}-{b}"))
                        .collect();
                    println!(
                        "{:>6}  n={} [{}]",
                        format_rational(coeff),
                        graph.n(),
                        edges.join(" ")
                    );
                }
                println!("Q(pi(G)) = {value}");
            }
            Ok(true)
        }
        Command::Series {
            kind,
            max,
            refined,
            io,
        } => {
            let mut rows: Vec<(String, Polynomial)> = Vec::new();
            match kind.as_str() {
                "kn" => {
                    for n in 0..=max {
                        let g = Graph::complete(n);
                        let p = if refined {
                            g.refined_poly()?
                        } else {
                            g.skew_char_poly()?
                        };
                        rows.push((format!("K_{n}"), p));
                    }
                }
                "kmn" => {
                    for m in 1..=max {
                        for n in m..=max {
                            let g = Graph::complete_bipartite(m, n);
                            let p = if refined {
                                g.refined_poly()?
                            } else {
                                g.skew_char_poly()?
                            };
                            rows.push((format!("K_{{{m},{n}}}"), p));
                        }
                    }
                }
                other => {
                    return Err(Error::invalid(format!(
                        "unknown series {other:?}; expected kn or kmn"
                    )))
                }
            }
            if io.json {
                let items: Result<Vec<serde_json::Value>, Error> = rows
                    .iter()
                    .map(|(name, p)| Ok(serde_json::json!({"name": name, "polynomial": p.to_json()?})))
                    .collect();
                println!("{}", serde_json::Value::Array(items?));
            } else {
                for (name, p) in rows {
                    println!("{name}: {p}");
                }
            }
            Ok(true)
        }
        Command::Check {
            suite,
            max_vertices,
            max_chords,
            exhaustive,
            seed,
            trials,
            script,
        } => run_check(
            &suite,
            max_vertices,
            max_chords,
            exhaustive,
            seed,
            trials,
            script.as_deref(),
        ),
    }
}

fn run_check(
    suite: &str,
    max_vertices: usize,
    max_chords: usize,
    exhaustive: bool,
    seed: u64,
    trials: usize,
    script: Option<&str>,
) -> Result<bool, Error> {
    if suite == "reduction" {
        let path = script.ok_or_else(|| Error::invalid("the reduction suite needs --script"))?;
        let text = read_file(path)?;
        let parsed = parse_reduction_script(&text)?;
        let start = parsed
            .first()
            .map(|(step, _)| step.graph.clone())
            .ok_or_else(|| Error::invalid("empty reduction script"))?;
        let (sum, reports) = run_reduction_script(&start, &parsed)?;
        for (i, report) in reports.iter().enumerate() {
            let line: Vec<String> = report
                .role_values
                .iter()
                .map(|(role, p)| format!("{role}: {p}"))
                .collect();
            println!("step {}: {}", i + 1, line.join(" | "));
        }
        println!("final sum has {} term(s)", sum.num_terms());
        println!("check reduction: PASS ({} step(s))", reports.len());
        return Ok(true);
    }
    let report = match suite {
        "graph-4t" => verify::check_graph_four_term(max_vertices, exhaustive, seed, trials)?,
        "two-term" => verify::check_two_term(max_vertices, exhaustive, seed, trials)?,
        "matrix-4t" => verify::check_matrix_four_term(8, seed, trials)?,
        "cut-point" => verify::check_cut_point(max_chords)?,
        "constancy" => verify::check_constancy(max_vertices, seed, trials)?,
        "lemma-7-1-2" => verify::check_lemma_7_1_2(max_chords)?,
        "boundary-corank" => verify::check_boundary_corank(max_chords)?,
        "dm-multiplicativity" => verify::check_dm_multiplicativity(seed, trials)?,
        "graphic-dm-equality" => {
            verify::check_graphic_dm_equality(max_vertices.min(8), seed, trials)?
        }
        "hamiltonian" => verify::check_hamiltonian(if max_chords % 2 == 0 {
            max_chords
        } else {
            max_chords - 1
        })?,
        other => return Err(Error::invalid(format!("unknown check suite {other:?}"))),
    };
    for note in &report.notes {
        println!("note: {note}");
    }
    if report.passed() {
        println!("check {}: PASS ({} cases)", report.name, report.cases);
        Ok(true)
    } else {
        for failure in &report.failures {
            println!("failure: {failure}");
        }
        println!(
            "check {}: FAIL ({} failure(s) in {} cases)",
            report.name,
            report.failures.len(),
            report.cases
        );
        Ok(false)
    }
}

fn print_poly(p: &Polynomial, json: bool) -> Result<(), Error> {
    if json {
        println!("{}", p.to_json()?);
    } else {
        println!("{p}");
    }
    Ok(())
}

/// Inline content, a file path, or "-" for stdin.
fn read_input(input: &str) -> Result<String, Error> {
    if input == "-" {
        return read_stdin();
    }
    if std::path::Path::new(input).exists() {
        return read_file(input);
    }
    Ok(input.to_string())
}

/// A file path or "-" for stdin (for formats that are never inline).
fn read_file(input: &str) -> Result<String, Error> {
    if input == "-" {
        return read_stdin();
    }
    std::fs::read_to_string(input)
        .map_err(|e| Error::parse(input.to_string(), format!("cannot read file: {e}")))
}

fn read_stdin() -> Result<String, Error> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Error::parse("stdin", e.to_string()))?;
    Ok(buf)
}
