//! Oriented ribbon graphs as rotation systems: a permutation sigma whose cycles are
//! the vertices (cyclic order of half-edges around each vertex) and a fixed-point
//! free involution alpha pairing half-edges into edges. Rotation systems encode
//! exactly the oriented case.
//!
//! Boundary components of a spanning ribbon subgraph are the cycles of sigma
//! composed with alpha, restricted to the surviving half-edges; vertices that lose
//! all their half-edges contribute one boundary circle each.

use serde::{Deserialize, Serialize};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::chord::ChordDiagram;
use crate::dmatroid::{DeltaMatroid, SetSystem};
use crate::error::{Error, Result};

/// Default cap on edge count for the 2^m quasi-tree enumeration.
pub const DEFAULT_EDGE_CAP: usize = 20;

#[cfg(feature = "parallel")]
const PARALLEL_EDGE_THRESHOLD: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonGraph {
    /// Cyclic order of half-edges around each vertex; a vertex may have none.
    vertex_cycles: Vec<Vec<usize>>,
    /// alpha[h] is the half-edge paired with h.
    alpha: Vec<usize>,
    /// Edge index of each half-edge.
    edge_of: Vec<usize>,
    /// Half-edge pairs by edge index.
    edge_pairs: Vec<(usize, usize)>,
    /// Ground-set labels used for the delta-matroid.
    edge_labels: Vec<String>,
}

/// Serde mirror of the JSON wire format.
#[derive(Serialize, Deserialize)]
struct RibbonJson {
    sigma: Vec<Vec<usize>>,
    alpha: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_labels: Option<Vec<String>>,
}

impl RibbonGraph {
    pub fn new(
        vertex_cycles: Vec<Vec<usize>>,
        alpha_pairs: Vec<(usize, usize)>,
        edge_labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let m = alpha_pairs.len();
        let half_edges = 2 * m;
        let mut seen = vec![false; half_edges];
        let mut mark = |h: usize, what: &str| -> Result<()> {
            if h >= half_edges {
                return Err(Error::invalid(format!(
                    "half-edge {h} out of range 0..{half_edges} in {what}"
                )));
            }
            if seen[h] {
                return Err(Error::invalid(format!(
                    "half-edge {h} appears twice in {what}"
                )));
            }
            seen[h] = true;
            Ok(())
        };
        for cycle in &vertex_cycles {
            for &h in cycle {
                mark(h, "sigma")?;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::invalid("sigma does not cover every half-edge"));
        }
        let mut alpha = vec![usize::MAX; half_edges];
        for &(a, b) in &alpha_pairs {
            if a >= half_edges || b >= half_edges {
                return Err(Error::invalid("alpha pair out of range"));
            }
            if a == b {
                return Err(Error::invalid(format!("alpha has a fixed point at {a}")));
            }
            if alpha[a] != usize::MAX || alpha[b] != usize::MAX {
                return Err(Error::invalid("alpha is not an involution: reused half-edge"));
            }
            alpha[a] = b;
            alpha[b] = a;
        }
        let mut edge_of = vec![0; half_edges];
        for (e, &(a, b)) in alpha_pairs.iter().enumerate() {
            edge_of[a] = e;
            edge_of[b] = e;
        }
        let labels = match edge_labels {
            Some(labels) => {
                if labels.len() != m {
                    return Err(Error::invalid(format!(
                        "expected {m} edge labels, got {}",
                        labels.len()
                    )));
                }
                labels
            }
            None => (1..=m).map(|e| e.to_string()).collect(),
        };
        Ok(RibbonGraph {
            vertex_cycles,
            alpha,
            edge_of,
            edge_pairs: alpha_pairs,
            edge_labels: labels,
        })
    }

    /// The one-vertex ribbon graph of a chord diagram: sigma is the diagram word
    /// read around the circle, alpha pairs the two occurrences of each label.
    pub fn from_chord_diagram(c: &ChordDiagram) -> RibbonGraph {
        let word = c.word();
        let n = c.n_chords();
        let mut first = vec![usize::MAX; n];
        let mut pairs = vec![(0, 0); n];
        for (pos, &label) in word.iter().enumerate() {
            let e = label as usize - 1;
            if first[e] == usize::MAX {
                first[e] = pos;
            } else {
                pairs[e] = (first[e], pos);
            }
        }
        let labels = (1..=n).map(|e| e.to_string()).collect();
        RibbonGraph::new(vec![(0..2 * n).collect()], pairs, Some(labels))
            .expect("diagram word is a valid rotation system")
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_cycles.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edge_pairs.len()
    }

    pub fn edge_labels(&self) -> &[String] {
        &self.edge_labels
    }

    pub fn vertex_cycles(&self) -> &[Vec<usize>] {
        &self.vertex_cycles
    }

    fn check_edges(&self, edges: &[usize]) -> Result<u64> {
        let mut mask = 0u64;
        for &e in edges {
            if e >= self.n_edges() {
                return Err(Error::invalid(format!(
                    "edge index {e} out of range 0..{}",
                    self.n_edges()
                )));
            }
            mask |= 1 << e;
        }
        Ok(mask)
    }

    /// Boundary components of the spanning ribbon subgraph keeping only `edges`.
    pub fn boundary_components(&self, edges: &[usize]) -> Result<usize> {
        Ok(self.boundary_components_mask(self.check_edges(edges)?))
    }

    pub fn boundary_components_full(&self) -> usize {
        let all: Vec<usize> = (0..self.n_edges()).collect();
        self.boundary_components(&all).expect("all edges in range")
    }

    pub(crate) fn boundary_components_mask(&self, edge_mask: u64) -> usize {
        let total = 2 * self.n_edges();
        let keep = |h: usize| edge_mask & (1 << self.edge_of[h]) != 0;
        // sigma restricted to surviving half-edges: skip removed ones within each
        // vertex cycle.
        let mut next = vec![usize::MAX; total];
        let mut isolated = 0usize;
        for cycle in &self.vertex_cycles {
            let alive: Vec<usize> = cycle.iter().copied().filter(|&h| keep(h)).collect();
            if alive.is_empty() {
                isolated += 1;
                continue;
            }
            for (i, &h) in alive.iter().enumerate() {
                next[h] = alive[(i + 1) % alive.len()];
            }
        }
        let mut seen = vec![false; total];
        let mut components = isolated;
        for start in 0..total {
            if !keep(start) || seen[start] {
                continue;
            }
            components += 1;
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                h = next[self.alpha[h]];
            }
        }
        components
    }

    /// Same count following the opposite composition order; boundary walks come in
    /// mirror pairs, so the two conventions agree. Used as a consistency check.
    #[cfg(test)]
    pub(crate) fn boundary_components_mask_alpha_sigma(&self, edge_mask: u64) -> usize {
        let total = 2 * self.n_edges();
        let keep = |h: usize| edge_mask & (1 << self.edge_of[h]) != 0;
        let mut next = vec![usize::MAX; total];
        let mut isolated = 0usize;
        for cycle in &self.vertex_cycles {
            let alive: Vec<usize> = cycle.iter().copied().filter(|&h| keep(h)).collect();
            if alive.is_empty() {
                isolated += 1;
                continue;
            }
            for (i, &h) in alive.iter().enumerate() {
                next[h] = alive[(i + 1) % alive.len()];
            }
        }
        let mut seen = vec![false; total];
        let mut components = isolated;
        for start in 0..total {
            if !keep(start) || seen[start] {
                continue;
            }
            components += 1;
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                h = self.alpha[next[h]];
            }
        }
        components
    }

    /// Is the underlying graph connected (vertices joined through edges)?
    pub fn is_connected(&self) -> bool {
        let v = self.n_vertices();
        if v <= 1 {
            return true;
        }
        let mut vertex_of = vec![0usize; 2 * self.n_edges()];
        for (vi, cycle) in self.vertex_cycles.iter().enumerate() {
            for &h in cycle {
                vertex_of[h] = vi;
            }
        }
        let mut seen = vec![false; v];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(vi) = stack.pop() {
            for &h in &self.vertex_cycles[vi] {
                let other = vertex_of[self.alpha[h]];
                if !seen[other] {
                    seen[other] = true;
                    reached += 1;
                    stack.push(other);
                }
            }
        }
        reached == v
    }

    /// All edge subsets whose spanning ribbon subgraph has exactly one boundary
    /// component. Requires a connected ribbon graph.
    pub fn spanning_quasi_trees(&self) -> Result<Vec<Vec<usize>>> {
        self.spanning_quasi_trees_capped(DEFAULT_EDGE_CAP)
    }

    pub fn spanning_quasi_trees_capped(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        Ok(self
            .quasi_tree_masks(cap)?
            .into_iter()
            .map(|mask| (0..self.n_edges()).filter(|&e| mask & (1 << e) != 0).collect())
            .collect())
    }

    fn quasi_tree_masks(&self, cap: usize) -> Result<Vec<u64>> {
        let m = self.n_edges();
        if m > cap {
            return Err(Error::CapExceeded {
                what: "edge count for quasi-tree enumeration",
                value: m,
                cap,
            });
        }
        if !self.is_connected() {
            return Err(Error::invalid(
                "spanning quasi-trees require a connected ribbon graph",
            ));
        }
        Ok(self.quasi_tree_masks_dispatch(m))
    }

    /// Single-threaded subset scan; the benchmark suite compares this against the
    /// parallel path, and it is the fallback without the `parallel` feature.
    pub fn quasi_tree_masks_sequential(&self) -> Vec<u64> {
        let m = self.n_edges();
        (0..(1u64 << m))
            .filter(|&mask| self.boundary_components_mask(mask) == 1)
            .collect()
    }

    #[cfg(feature = "parallel")]
    fn quasi_tree_masks_dispatch(&self, m: usize) -> Vec<u64> {
        if m < PARALLEL_EDGE_THRESHOLD {
            return self.quasi_tree_masks_sequential();
        }
        (0..(1u64 << m))
            .into_par_iter()
            .filter(|&mask| self.boundary_components_mask(mask) == 1)
            .collect()
    }

    #[cfg(not(feature = "parallel"))]
    fn quasi_tree_masks_dispatch(&self, _m: usize) -> Vec<u64> {
        self.quasi_tree_masks_sequential()
    }

    /// The delta-matroid of the ribbon graph: ground set = edges, feasible sets =
    /// spanning quasi-tree edge sets. Always even for rotation systems (they are
    /// orientable), which is asserted.
    pub fn delta_matroid(&self) -> Result<DeltaMatroid> {
        let masks = self.quasi_tree_masks(DEFAULT_EDGE_CAP)?;
        let masks: Vec<u32> = masks.into_iter().map(|m| m as u32).collect();
        let system = SetSystem::from_masks(self.edge_labels.to_vec(), masks)?;
        let dm = DeltaMatroid::try_new(system)?;
        debug_assert!(dm.is_even(), "orientable ribbon graph must give an even delta-matroid");
        Ok(dm)
    }

    /// The spanning ribbon subgraph keeping only `edges`, with half-edges
    /// renumbered; edge labels are inherited.
    pub fn spanning_subgraph(&self, edges: &[usize]) -> Result<RibbonGraph> {
        let mask = self.check_edges(edges)?;
        let kept: Vec<usize> = (0..self.n_edges()).filter(|&e| mask & (1 << e) != 0).collect();
        let mut new_index = vec![usize::MAX; 2 * self.n_edges()];
        let mut pairs = Vec::with_capacity(kept.len());
        for (new_e, &e) in kept.iter().enumerate() {
            let (a, b) = self.edge_pairs[e];
            new_index[a] = 2 * new_e;
            new_index[b] = 2 * new_e + 1;
            pairs.push((2 * new_e, 2 * new_e + 1));
        }
        let cycles: Vec<Vec<usize>> = self
            .vertex_cycles
            .iter()
            .map(|cycle| {
                cycle
                    .iter()
                    .filter(|&&h| new_index[h] != usize::MAX)
                    .map(|&h| new_index[h])
                    .collect()
            })
            .collect();
        let labels = kept.iter().map(|&e| self.edge_labels[e].clone()).collect();
        RibbonGraph::new(cycles, pairs, Some(labels))
    }

    /// Glue vertex `v1` of `self` to vertex `v2` of `other` by splicing the two
    /// rotation cycles. `corner1`/`corner2` choose where each cycle is opened; the
    /// delta-matroid of the result does not depend on the choice.
    pub fn glue_vertices(
        &self,
        v1: usize,
        corner1: usize,
        other: &RibbonGraph,
        v2: usize,
        corner2: usize,
    ) -> Result<RibbonGraph> {
        if v1 >= self.n_vertices() || v2 >= other.n_vertices() {
            return Err(Error::invalid("glue vertex out of range"));
        }
        let offset = 2 * self.n_edges();
        let rotate = |cycle: &[usize], corner: usize| -> Result<Vec<usize>> {
            if cycle.is_empty() {
                if corner != 0 {
                    return Err(Error::invalid("corner out of range for an isolated vertex"));
                }
                return Ok(Vec::new());
            }
            if corner >= cycle.len() {
                return Err(Error::invalid(format!(
                    "corner {corner} out of range for a vertex of degree {}",
                    cycle.len()
                )));
            }
            Ok(cycle[corner..]
                .iter()
                .chain(cycle[..corner].iter())
                .copied()
                .collect())
        };
        let mut merged = rotate(&self.vertex_cycles[v1], corner1)?;
        merged.extend(rotate(&other.vertex_cycles[v2], corner2)?.iter().map(|&h| h + offset));
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for (vi, cycle) in self.vertex_cycles.iter().enumerate() {
            if vi != v1 {
                cycles.push(cycle.clone());
            }
        }
        for (vi, cycle) in other.vertex_cycles.iter().enumerate() {
            if vi != v2 {
                cycles.push(cycle.iter().map(|&h| h + offset).collect());
            }
        }
        cycles.push(merged);
        let mut pairs = self.edge_pairs.clone();
        pairs.extend(
            other
                .edge_pairs
                .iter()
                .map(|&(a, b)| (a + offset, b + offset)),
        );
        // Disambiguate colliding labels from the right factor.
        let mut labels: Vec<String> = self.edge_labels.clone();
        for label in &other.edge_labels {
            let mut candidate = label.clone();
            while labels.contains(&candidate) {
                candidate.push('\'');
            }
            labels.push(candidate);
        }
        RibbonGraph::new(cycles, pairs, Some(labels))
    }

    /// Two vertices joined by n parallel ribbons in the plane (genus 0).
    pub fn theta_planar(n: usize) -> RibbonGraph {
        assert!(n >= 1);
        let top: Vec<usize> = (0..n).map(|e| 2 * e).collect();
        // Planarity: the second vertex sees the ribbons in the reverse order.
        let bottom: Vec<usize> = (0..n).rev().map(|e| 2 * e + 1).collect();
        let pairs: Vec<(usize, usize)> = (0..n).map(|e| (2 * e, 2 * e + 1)).collect();
        RibbonGraph::new(vec![top, bottom], pairs, None).expect("valid rotation system")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mirror = RibbonJson {
            sigma: self.vertex_cycles.clone(),
            alpha: self.edge_pairs.iter().map(|&(a, b)| [a, b]).collect(),
            edge_labels: Some(self.edge_labels.clone()),
        };
        serde_json::to_value(mirror).expect("plain data serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<RibbonGraph> {
        let mirror: RibbonJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::parse("ribbon json", e.to_string()))?;
        RibbonGraph::new(
            mirror.sigma,
            mirror.alpha.iter().map(|&[a, b]| (a, b)).collect(),
            mirror.edge_labels,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(s: &str) -> ChordDiagram {
        ChordDiagram::parse(s).unwrap()
    }

    #[test]
    fn from_chord_diagram_examples() {
        let r = RibbonGraph::from_chord_diagram(&diagram("1212"));
        assert_eq!(r.n_vertices(), 1);
        assert_eq!(r.vertex_cycles()[0], vec![0, 1, 2, 3]);
        assert_eq!(r.edge_pairs, vec![(0, 2), (1, 3)]);
        let r = RibbonGraph::from_chord_diagram(&diagram("1122"));
        assert_eq!(r.edge_pairs, vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn boundary_component_examples() {
        let vertex_only = RibbonGraph::new(vec![vec![]], vec![], None).unwrap();
        assert_eq!(vertex_only.boundary_components(&[]).unwrap(), 1);

        let crossed = RibbonGraph::from_chord_diagram(&diagram("1212"));
        assert_eq!(crossed.boundary_components(&[0, 1]).unwrap(), 1);
        assert_eq!(crossed.boundary_components(&[0]).unwrap(), 2);
        assert_eq!(crossed.boundary_components(&[]).unwrap(), 1);

        for n in 1..=6 {
            let theta = RibbonGraph::theta_planar(n);
            // Genus 0: the full subgraph has n boundary circles; any single edge
            // gives a quasi-tree.
            assert_eq!(theta.boundary_components_full(), n);
            for e in 0..n {
                assert_eq!(theta.boundary_components(&[e]).unwrap(), 1);
            }
        }
        assert!(crossed.boundary_components(&[7]).is_err());
    }

    #[test]
    fn both_walk_conventions_agree() {
        for word in ["1212", "1122", "123123", "12132434", "12314234"] {
            let r = RibbonGraph::from_chord_diagram(&diagram(word));
            for mask in 0..(1u64 << r.n_edges()) {
                assert_eq!(
                    r.boundary_components_mask(mask),
                    r.boundary_components_mask_alpha_sigma(mask),
                    "word {word}, mask {mask:b}"
                );
            }
        }
        let theta = RibbonGraph::theta_planar(4);
        for mask in 0..(1u64 << 4) {
            assert_eq!(
                theta.boundary_components_mask(mask),
                theta.boundary_components_mask_alpha_sigma(mask)
            );
        }
    }

    #[test]
    fn quasi_tree_examples() {
        let vertex_only = RibbonGraph::new(vec![vec![]], vec![], None).unwrap();
        assert_eq!(vertex_only.spanning_quasi_trees().unwrap(), vec![Vec::<usize>::new()]);

        let crossed = RibbonGraph::from_chord_diagram(&diagram("1212"));
        assert_eq!(
            crossed.spanning_quasi_trees().unwrap(),
            vec![vec![], vec![0, 1]]
        );

        let theta = RibbonGraph::theta_planar(2);
        assert_eq!(theta.spanning_quasi_trees().unwrap(), vec![vec![0], vec![1]]);

        let disconnected = RibbonGraph::new(
            vec![vec![0, 1], vec![2, 3]],
            vec![(0, 1), (2, 3)],
            None,
        )
        .unwrap();
        assert!(disconnected.spanning_quasi_trees().is_err());
    }

    #[test]
    fn delta_matroid_examples() {
        let crossed = RibbonGraph::from_chord_diagram(&diagram("1212"));
        let dm = crossed.delta_matroid().unwrap();
        assert_eq!(
            dm.feasible_label_sets(),
            vec![Vec::<String>::new(), vec!["1".to_string(), "2".to_string()]]
        );

        let theta = RibbonGraph::theta_planar(2);
        let dm = theta.delta_matroid().unwrap();
        assert_eq!(
            dm.feasible_label_sets(),
            vec![vec!["1".to_string()], vec!["2".to_string()]]
        );

        // Orientable loop on one vertex: delta-matroid ({1}; {Ø}).
        let loop_graph = RibbonGraph::from_chord_diagram(&diagram("11"));
        let dm = loop_graph.delta_matroid().unwrap();
        assert_eq!(dm.feasible_label_sets(), vec![Vec::<String>::new()]);
    }

    #[test]
    fn delta_matroids_are_even() {
        for word in ["1212", "1122", "123123", "12132434", "12314234", "123231"] {
            let dm = RibbonGraph::from_chord_diagram(&diagram(word))
                .delta_matroid()
                .unwrap();
            assert!(dm.is_even(), "word {word}");
        }
    }

    #[test]
    fn gluing_multiplies_delta_matroids() {
        let a = RibbonGraph::from_chord_diagram(&diagram("1212"));
        let b = RibbonGraph::theta_planar(2);
        for corner1 in 0..4 {
            for (v2, corner2) in [(0, 0), (0, 1), (1, 0)] {
                let glued = a.glue_vertices(0, corner1, &b, v2, corner2).unwrap();
                let dm = glued.delta_matroid().unwrap();
                let product = a
                    .delta_matroid()
                    .unwrap()
                    .product(&b.delta_matroid().unwrap());
                assert!(
                    dm.is_isomorphic(&product).unwrap(),
                    "corner1={corner1} v2={v2} corner2={corner2}"
                );
            }
        }
    }

    #[test]
    fn restriction_matches_spanning_subgraph() {
        // 2 vertices: a planar double ribbon plus a loop on the first vertex.
        let r = RibbonGraph::new(
            vec![vec![0, 4, 2, 5], vec![3, 1]],
            vec![(0, 1), (2, 3), (4, 5)],
            None,
        )
        .unwrap();
        let dm = r.delta_matroid().unwrap();
        for keep in [vec![0usize, 1], vec![0, 2], vec![0], vec![0, 1, 2]] {
            let sub = r.spanning_subgraph(&keep).unwrap();
            if !sub.is_connected() {
                continue;
            }
            let direct = sub.delta_matroid().unwrap();
            let restricted = dm
                .restrict_by_labels(&keep.iter().map(|&e| (e + 1).to_string()).collect::<Vec<_>>())
                .unwrap();
            assert_eq!(direct.feasible_label_sets(), restricted.feasible_label_sets());
        }
    }

    #[test]
    fn json_round_trip() {
        let r = RibbonGraph::from_chord_diagram(&diagram("123123"));
        let json = r.to_json();
        assert_eq!(RibbonGraph::from_json(&json).unwrap(), r);
        let bad = serde_json::json!({"sigma": [[0, 1]], "alpha": [[0, 0]]});
        assert!(RibbonGraph::from_json(&bad).is_err());
    }
}
