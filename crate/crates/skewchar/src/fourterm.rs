//! Vassiliev moves and 4-term/2-term relation checkers, for graphs and for
//! antisymmetric integer matrices, plus replayable reduction scripts that rewrite
//! a graph into a combination of other graphs by recorded 4-term moves.
//!
//! Graph moves on a pair (a, b): the first move toggles the edge ab; the second
//! move toggles the adjacency of a with every neighbor of b (other than a, b).
//! Matrix moves on (i, j): prime zeroes the entries (i,j), (j,i); tilde is the
//! congruence B^t A B whose effect is row i += row j and column i += column j.
//! The two moves commute in both worlds.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, IntSkewMatrix};
use crate::hopf::{GraphSum, HopfSum};
use crate::polynomial::Polynomial;

fn check_pair(n: usize, a: usize, b: usize) -> Result<()> {
    if a >= n || b >= n {
        return Err(Error::VertexOutOfRange { index: a.max(b), n });
    }
    if a == b {
        return Err(Error::invalid("move requires two distinct indices"));
    }
    Ok(())
}

/// First Vassiliev move: toggle the edge (a, b).
pub fn first_move_graph(g: &Graph, a: usize, b: usize) -> Result<Graph> {
    check_pair(g.n(), a, b)?;
    let mut out = g.clone();
    out.toggle_edge(a, b)?;
    Ok(out)
}

/// Second Vassiliev move: for every c adjacent to b (c distinct from a, b),
/// toggle the adjacency (a, c).
pub fn second_move_graph(g: &Graph, a: usize, b: usize) -> Result<Graph> {
    check_pair(g.n(), a, b)?;
    let mut out = g.clone();
    let mut bits = g.neighbors_mask(b) & !(1 << a) & !(1 << b);
    while bits != 0 {
        let c = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out.toggle_edge(a, c)?;
    }
    Ok(out)
}

/// The four graphs of one 4-term instance: (G, G', Gt, Gt').
pub fn four_term_orbit(g: &Graph, a: usize, b: usize) -> Result<[Graph; 4]> {
    let prime = first_move_graph(g, a, b)?;
    let tilde = second_move_graph(g, a, b)?;
    let both = first_move_graph(&tilde, a, b)?;
    Ok([g.clone(), prime, tilde, both])
}

/// Residual of the 4-term relation for a polynomial-valued graph invariant:
/// inv(G) - inv(G') - inv(Gt) + inv(Gt'). Zero iff the relation holds here.
pub fn check_four_term_graph(
    mut invariant: impl FnMut(&Graph) -> Result<Polynomial>,
    g: &Graph,
    a: usize,
    b: usize,
) -> Result<Polynomial> {
    let [g0, g1, g2, g3] = four_term_orbit(g, a, b)?;
    Ok(invariant(&g0)?
        .sub(&invariant(&g1)?)
        .sub(&invariant(&g2)?)
        .add(&invariant(&g3)?))
}

/// Prime move: zero the entries (i, j) and (j, i).
pub fn matrix_prime(m: &IntSkewMatrix, i: usize, j: usize) -> Result<IntSkewMatrix> {
    check_pair(m.n(), i, j)?;
    let n = m.n();
    let mut entries = m.entries().to_vec();
    entries[i * n + j] = 0;
    entries[j * n + i] = 0;
    IntSkewMatrix::new(n, entries)
}

/// Tilde move: the congruence with the unipotent block at (i, j); adds row j into
/// row i and column j into column i, leaving (i,j), (j,i) unchanged. Equivalent to
/// conjugating the (1,2) move by the transposition relabeling.
pub fn matrix_tilde(m: &IntSkewMatrix, i: usize, j: usize) -> Result<IntSkewMatrix> {
    check_pair(m.n(), i, j)?;
    let n = m.n();
    let mut entries = m.entries().to_vec();
    for col in 0..n {
        entries[i * n + col] += m.get(j, col);
    }
    for row in 0..n {
        entries[row * n + i] += entries[row * n + j];
    }
    IntSkewMatrix::new(n, entries)
}

/// General-matrix variants used to probe the symmetric counterexample; no
/// antisymmetry is assumed.
pub fn raw_prime(n: usize, entries: &[i64], i: usize, j: usize) -> Vec<i64> {
    let mut out = entries.to_vec();
    out[i * n + j] = 0;
    out[j * n + i] = 0;
    out
}

pub fn raw_tilde(n: usize, entries: &[i64], i: usize, j: usize) -> Vec<i64> {
    let mut out = entries.to_vec();
    for col in 0..n {
        out[i * n + col] += entries[j * n + col];
    }
    for row in 0..n {
        out[row * n + i] += out[row * n + j];
    }
    out
}

/// Residual of the matrix 4-term relation under the characteristic polynomial.
pub fn check_four_term_matrix(m: &IntSkewMatrix, i: usize, j: usize) -> Result<Polynomial> {
    check_pair(m.n(), i, j)?;
    Ok(raw_four_term_residual(m.n(), m.entries(), i, j))
}

/// The same residual for an arbitrary square matrix (where it can be nonzero).
pub fn raw_four_term_residual(n: usize, entries: &[i64], i: usize, j: usize) -> Polynomial {
    let chi = |e: &[i64]| crate::graph::char_poly_int(n, e);
    let prime = raw_prime(n, entries, i, j);
    let tilde = raw_tilde(n, entries, i, j);
    let both = raw_prime(n, &tilde, i, j);
    chi(entries)
        .sub(&chi(&prime))
        .sub(&chi(&tilde))
        .add(&chi(&both))
}

/// One step of a reduction script: rewrite the term isomorphic to `graph` using
/// the 4-term relation at the pair (a, b), i.e. G -> G' + Gt - Gt'.
#[derive(Debug, Clone)]
pub struct ReductionStep {
    pub graph: Graph,
    pub a: usize,
    pub b: usize,
}

/// Per-step report: the four graphs with their Q values.
#[derive(Debug, Clone)]
pub struct ReductionStepReport {
    pub role_values: Vec<(&'static str, Polynomial)>,
}

/// Apply recorded 4-term rewrites to `g`, returning the resulting sum and a
/// per-step report of Q values. The invariant evaluation of the running sum is
/// preserved at every step, which is verified and reported as an error if broken.
pub fn intersection_graph_reduction(
    g: &Graph,
    steps: &[ReductionStep],
) -> Result<(GraphSum, Vec<ReductionStepReport>)> {
    let mut sum: GraphSum = HopfSum::single(g.clone())?;
    let mut reports = Vec::with_capacity(steps.len());
    let q = |g: &Graph| g.skew_char_poly();
    let mut expected = crate::hopf::evaluate(q, &sum)?;
    for (idx, step) in steps.iter().enumerate() {
        let key = step.graph.canonical_form()?;
        let coeff = sum.coefficient(&key);
        if num_traits::Zero::is_zero(&coeff) {
            return Err(Error::invalid(format!(
                "step {}: the sum has no term isomorphic to the given graph",
                idx + 1
            )));
        }
        let [g0, g1, g2, g3] = four_term_orbit(&step.graph, step.a, step.b)?;
        let mut report = Vec::with_capacity(4);
        for (role, graph) in [("G", &g0), ("G'", &g1), ("Gt", &g2), ("Gt'", &g3)] {
            report.push((role, graph.skew_char_poly()?));
        }
        reports.push(ReductionStepReport {
            role_values: report,
        });
        sum.add_keyed(key, g0, -coeff.clone());
        sum.add_atom(g1, coeff.clone())?;
        sum.add_atom(g2, coeff.clone())?;
        sum.add_atom(g3, -coeff)?;
        let now = crate::hopf::evaluate(q, &sum)?;
        if now != expected {
            return Err(Error::invalid(format!(
                "step {}: Q evaluation changed from {} to {}",
                idx + 1,
                expected,
                now
            )));
        }
        expected = now;
    }
    Ok((sum, reports))
}

#[derive(Deserialize)]
struct ScriptEntry {
    graph: String,
    #[serde(default)]
    a: Option<usize>,
    #[serde(default)]
    b: Option<usize>,
    #[serde(default)]
    role: Option<String>,
}

/// Parse a reduction script: a JSON list of {graph, a, b, role} entries. Entries
/// with role "G" (or no role) start a step; entries with roles "G'", "Gt", "Gt'"
/// pin the expected images of the preceding step, which are verified up to
/// isomorphism.
pub fn parse_reduction_script(text: &str) -> Result<Vec<(ReductionStep, Vec<(String, Graph)>)>> {
    let entries: Vec<ScriptEntry> = serde_json::from_str(text)
        .map_err(|e| Error::parse("reduction script", e.to_string()))?;
    let mut out: Vec<(ReductionStep, Vec<(String, Graph)>)> = Vec::new();
    for (i, entry) in entries.into_iter().enumerate() {
        let graph = Graph::parse_edge_list(&entry.graph)?;
        let role = entry.role.unwrap_or_else(|| "G".to_string());
        if role == "G" {
            let (a, b) = match (entry.a, entry.b) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(Error::parse(
                        format!("entry {}", i + 1),
                        "a step entry needs both vertex indices a and b",
                    ))
                }
            };
            out.push((ReductionStep { graph, a, b }, Vec::new()));
        } else {
            let last = out.last_mut().ok_or_else(|| {
                Error::parse(
                    format!("entry {}", i + 1),
                    "expected-image entry before any step entry",
                )
            })?;
            last.1.push((role, graph));
        }
    }
    Ok(out)
}

/// Run a parsed script: apply each step, verify any pinned expected images up to
/// isomorphism, and return the final sum plus per-step reports.
pub fn run_reduction_script(
    g: &Graph,
    script: &[(ReductionStep, Vec<(String, Graph)>)],
) -> Result<(GraphSum, Vec<ReductionStepReport>)> {
    for (step, expectations) in script {
        let [_, g1, g2, g3] = four_term_orbit(&step.graph, step.a, step.b)?;
        for (role, expected) in expectations {
            let actual = match role.as_str() {
                "G'" => &g1,
                "Gt" => &g2,
                "Gt'" => &g3,
                other => {
                    return Err(Error::invalid(format!(
                        "unknown role {other:?}; expected G, G', Gt or Gt'"
                    )))
                }
            };
            if expected.canonical_form()? != actual.canonical_form()? {
                return Err(Error::invalid(format!(
                    "pinned {role} image is not isomorphic to the move result"
                )));
            }
        }
    }
    let steps: Vec<ReductionStep> = script.iter().map(|(s, _)| s.clone()).collect();
    intersection_graph_reduction(g, &steps)
}
