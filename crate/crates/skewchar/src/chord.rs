//! Chord diagrams as double-occurrence words: intersection graphs, cut-point
//! orientations, boundary components of the thickened diagram, and the signed
//! Hamiltonian-cycle count.
//!
//! A diagram is a cyclic word in which each of n labels occurs exactly twice;
//! equality is up to rotation and relabeling (the circle is oriented, so there is
//! no reflection).

use crate::error::{Error, Result};
use crate::graph::{Graph, OrientedGraph, DEFAULT_SUBSET_CAP};
use crate::polynomial::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    /// Normalized double-occurrence word; labels are 1..=n by first occurrence.
    word: Vec<u32>,
}

impl ChordDiagram {
    /// Parse a double-occurrence word. Tokens are whitespace/comma separated when
    /// separators are present, otherwise each character is a token.
    pub fn parse(text: &str) -> Result<ChordDiagram> {
        let trimmed = text.trim();
        let tokens: Vec<String> = if trimmed.contains(|c: char| c.is_whitespace() || c == ',') {
            trimmed
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(str::to_owned)
                .collect()
        } else {
            trimmed.chars().map(|c| c.to_string()).collect()
        };
        ChordDiagram::from_tokens(&tokens)
    }

    fn from_tokens<T: AsRef<str>>(tokens: &[T]) -> Result<ChordDiagram> {
        let mut order: Vec<&str> = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        let mut word = Vec::with_capacity(tokens.len());
        for t in tokens {
            let t = t.as_ref();
            let idx = match order.iter().position(|&o| o == t) {
                Some(i) => i,
                None => {
                    order.push(t);
                    counts.push(0);
                    order.len() - 1
                }
            };
            counts[idx] += 1;
            word.push(idx as u32 + 1);
        }
        for (i, &c) in counts.iter().enumerate() {
            if c != 2 {
                return Err(Error::parse(
                    "double-occurrence word",
                    format!("token {:?} occurs {c} times, expected 2", order[i]),
                ));
            }
        }
        Ok(ChordDiagram { word })
    }

    pub fn from_word(labels: &[u32]) -> Result<ChordDiagram> {
        let tokens: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        ChordDiagram::from_tokens(&tokens)
    }

    pub fn empty() -> ChordDiagram {
        ChordDiagram { word: Vec::new() }
    }

    pub fn n_chords(&self) -> usize {
        self.word.len() / 2
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// The two word positions of each chord, by chord index 0..n-1 (chord k has
    /// label k+1).
    fn chord_ends(&self) -> Vec<(usize, usize)> {
        let n = self.n_chords();
        let mut first = vec![usize::MAX; n];
        let mut ends = vec![(0, 0); n];
        for (pos, &label) in self.word.iter().enumerate() {
            let c = label as usize - 1;
            if first[c] == usize::MAX {
                first[c] = pos;
            } else {
                ends[c] = (first[c], pos);
            }
        }
        ends
    }

    /// Minimal word over all rotations (labels renamed by first occurrence).
    /// Equal canonical words iff the diagrams are equal as chord diagrams.
    pub fn canonical(&self) -> ChordDiagram {
        let m = self.word.len();
        if m == 0 {
            return ChordDiagram::empty();
        }
        let mut best: Option<Vec<u32>> = None;
        for r in 0..m {
            let mut rename: Vec<u32> = vec![0; self.n_chords() + 1];
            let mut next = 1u32;
            let mut cand = Vec::with_capacity(m);
            for k in 0..m {
                let label = self.word[(r + k) % m] as usize;
                if rename[label] == 0 {
                    rename[label] = next;
                    next += 1;
                }
                cand.push(rename[label]);
            }
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
        ChordDiagram {
            word: best.unwrap(),
        }
    }

    /// Restriction to a subset of chords (by chord index mask), renormalized.
    pub fn subdiagram(&self, chord_mask: u64) -> ChordDiagram {
        let word: Vec<u32> = self
            .word
            .iter()
            .filter(|&&label| chord_mask & (1 << (label - 1)) != 0)
            .copied()
            .collect();
        let tokens: Vec<String> = word.iter().map(|l| l.to_string()).collect();
        ChordDiagram::from_tokens(&tokens).expect("subword of a DOW is a DOW")
    }

    /// Intersection graph: one vertex per chord, an edge when chord ends
    /// interleave around the circle.
    pub fn intersection_graph(&self) -> Graph {
        let n = self.n_chords();
        let ends = self.chord_ends();
        let mut g = Graph::empty(n).expect("chord count within bit width");
        for i in 0..n {
            for j in (i + 1)..n {
                if interleaved(ends[i], ends[j]) {
                    g.add_edge(i, j).expect("in range");
                }
            }
        }
        g
    }

    /// Cut the circle at gap `cut` (before word position `cut`), number the chords
    /// by the order of their left ends on the resulting line, and orient every
    /// intersection edge from the smaller to the greater number. Vertex k of the
    /// result is the (k+1)-st chord in left-end order.
    pub fn orient_from_cut(&self, cut: usize) -> Result<OrientedGraph> {
        let m = self.word.len();
        if m == 0 {
            return Ok(OrientedGraph::new(0));
        }
        if cut >= m {
            return Err(Error::invalid(format!(
                "cut position {cut} out of range 0..{m}"
            )));
        }
        let n = self.n_chords();
        let mut first_seen = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut line_ends = vec![(0usize, 0usize); n];
        for k in 0..m {
            let c = self.word[(cut + k) % m] as usize - 1;
            if first_seen[c] == usize::MAX {
                first_seen[c] = order.len();
                order.push(c);
                line_ends[c].0 = k;
            } else {
                line_ends[c].1 = k;
            }
        }
        let mut g = OrientedGraph::new(n);
        for i in 0..n {
            for j in (i + 1)..n {
                // i < j in left-end order; chords order[i], order[j].
                if interleaved(line_ends[order[i]], line_ends[order[j]]) {
                    g.add_arc(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// The skew characteristic polynomial of the diagram: char poly of the
    /// oriented intersection graph. Debug builds verify all 2n cuts agree.
    pub fn skew_char_poly(&self) -> Result<Polynomial> {
        self.skew_char_poly_capped(DEFAULT_SUBSET_CAP)
    }

    pub fn skew_char_poly_capped(&self, cap: usize) -> Result<Polynomial> {
        let n = self.n_chords();
        if n > cap {
            return Err(Error::CapExceeded {
                what: "chord count",
                value: n,
                cap,
            });
        }
        let p = self.orient_from_cut(0)?.char_poly();
        debug_assert!(
            self.cut_point_independent()?,
            "cut point changed the characteristic polynomial"
        );
        Ok(p)
    }

    /// Check that every cut point yields the same characteristic polynomial.
    pub fn cut_point_independent(&self) -> Result<bool> {
        let m = self.word.len();
        if m == 0 {
            return Ok(true);
        }
        let reference = self.orient_from_cut(0)?.char_poly();
        for cut in 1..m {
            if self.orient_from_cut(cut)?.char_poly() != reference {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Number of boundary components of the thickened diagram, by tracing the
    /// boundary curve directly: walking along the arc that ends at position p, the
    /// curve crosses the band there and continues along the arc starting at the
    /// partner of p. This is independent of the GF(2) route (corank + 1), which is
    /// what makes that identity a real test.
    pub fn boundary_components(&self) -> usize {
        let m = self.word.len();
        if m == 0 {
            return 1;
        }
        let ends = self.chord_ends();
        let mut partner = vec![0usize; m];
        for &(a, b) in &ends {
            partner[a] = b;
            partner[b] = a;
        }
        // Arc g_i runs from position i to position i+1 (mod m).
        let mut seen = vec![false; m];
        let mut components = 0;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut arc = start;
            while !seen[arc] {
                seen[arc] = true;
                arc = partner[(arc + 1) % m];
            }
        }
        components
    }

    /// Refined polynomial computed from boundary components of subdiagrams:
    /// sum over chord subsets S of u^(n-|S|) * v^(boundary components of S - 1).
    /// Cross-checks the corank route through the intersection graph.
    pub fn refined_poly_by_boundary(&self) -> Result<Polynomial> {
        use crate::polynomial::Monomial;
        use num_bigint::BigInt;
        use num_traits::One;
        let n = self.n_chords();
        if n > DEFAULT_SUBSET_CAP {
            return Err(Error::CapExceeded {
                what: "chord count",
                value: n,
                cap: DEFAULT_SUBSET_CAP,
            });
        }
        let mut p = Polynomial::zero();
        for mask in 0..(1u64 << n) {
            let sub = self.subdiagram(mask);
            let k = sub.n_chords();
            let bc = sub.boundary_components();
            p.add_term(
                Monomial::new((n - k) as u32, (bc - 1) as u32, 0),
                BigInt::one(),
            );
        }
        Ok(p)
    }
}

fn interleaved(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a1, a2) = a;
    let (b1, b2) = b;
    (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2)
}

/// Signed count of undirected Hamiltonian cycles of an oriented graph. Each cycle
/// is counted once (the traversal fixes the smallest vertex first and the reversal
/// is identified); its sign is +1 exactly when the number of arcs agreeing with
/// the traversal direction is odd. For an even vertex count the parity of the
/// agreeing arcs does not depend on the traversal direction, which is why the
/// count requires an even n; n >= 4 is required because the 2-vertex convention
/// is not settled (a simple graph has no 2-cycle).
pub fn signed_hamiltonian_count(g: &OrientedGraph) -> Result<i64> {
    let n = g.n();
    if n % 2 != 0 || n < 4 {
        return Err(Error::HamiltonianArity(n));
    }
    let mut rest: Vec<usize> = (1..n).collect();
    let mut total = 0i64;
    permute(&mut rest, 0, &mut |perm| {
        // Identify reversals: require the neighbor after 0 to be smaller than the
        // neighbor before 0.
        if perm[0] > perm[n - 2] {
            return;
        }
        let mut prev = 0usize;
        let mut agree = 0u32;
        for &v in perm.iter() {
            match g.get(prev, v) {
                0 => return,
                1 => agree += 1,
                _ => {}
            }
            prev = v;
        }
        match g.get(prev, 0) {
            0 => return,
            1 => agree += 1,
            _ => {}
        }
        total += if agree % 2 == 1 { 1 } else { -1 };
    });
    Ok(total)
}

fn permute(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}
