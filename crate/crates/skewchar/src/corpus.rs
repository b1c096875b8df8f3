//! Deterministic test corpora: exhaustive enumerations of small graphs and chord
//! diagrams, and seeded random generators.
//!
//! The random stream is ChaCha8 keyed by a 64-bit seed (`seed_from_u64`); every
//! draw below is phrased in terms of `next_u32` so that a reimplementation from
//! this description reproduces the corpora bit for bit:
//!   - a random graph on n vertices takes one u32 per pair (i, j), i < j, in
//!     lexicographic order, and inserts the edge when the low bit is set;
//!   - a random antisymmetric matrix draws `next_u32 % span` per pair (i, j),
//!     i < j, in lexicographic order, mapped to [lo, hi] (entry (j, i) is the
//!     negation); symmetric matrices draw pairs the same way plus one draw per
//!     diagonal entry;
//!   - a random index in 0..k is `next_u32 % k`.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::chord::ChordDiagram;
use crate::graph::{Graph, IntSkewMatrix};

/// Seeded corpus generator.
pub struct CorpusRng {
    rng: ChaCha8Rng,
}

impl CorpusRng {
    pub fn new(seed: u64) -> Self {
        CorpusRng {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn bit(&mut self) -> bool {
        self.rng.next_u32() & 1 == 1
    }

    pub fn index(&mut self, k: usize) -> usize {
        debug_assert!(k > 0);
        (self.rng.next_u32() as usize) % k
    }

    /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here and keeps
    /// the stream description one line).
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u32;
        lo + (self.rng.next_u32() % span) as i64
    }

    /// G(n, 1/2): one bit per vertex pair in lexicographic order.
    pub fn graph(&mut self, n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("cap");
        for i in 0..n {
            for j in (i + 1)..n {
                if self.bit() {
                    g.add_edge(i, j).expect("in range");
                }
            }
        }
        g
    }

    pub fn antisymmetric_matrix(&mut self, n: usize, lo: i64, hi: i64) -> IntSkewMatrix {
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let x = self.int_in(lo, hi);
                entries[i * n + j] = x;
                entries[j * n + i] = -x;
            }
        }
        IntSkewMatrix::new(n, entries).expect("antisymmetric by construction")
    }

    /// Symmetric matrix with the same pair scheme plus diagonal draws.
    pub fn symmetric_matrix(&mut self, n: usize, lo: i64, hi: i64) -> Vec<i64> {
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let x = self.int_in(lo, hi);
                entries[i * n + j] = x;
                entries[j * n + i] = x;
            }
        }
        for i in 0..n {
            entries[i * n + i] = self.int_in(lo, hi);
        }
        entries
    }

    /// A distinct ordered pair of indices in 0..n.
    pub fn index_pair(&mut self, n: usize) -> (usize, usize) {
        let a = self.index(n);
        let mut b = self.index(n);
        while b == a {
            b = self.index(n);
        }
        (a, b)
    }
}

/// All graphs on exactly n vertices, one per isomorphism class.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "exhaustive enumeration is meant for tiny n");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for bits in 0u64..(1 << pairs.len()) {
        let mut g = Graph::empty(n).expect("cap");
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if bits & (1 << k) != 0 {
                g.add_edge(i, j).expect("in range");
            }
        }
        if seen.insert(g.canonical_form().expect("small")) {
            out.push(g);
        }
    }
    out
}

/// All chord diagrams with exactly n chords, one per equivalence class
/// (rotation + relabeling), enumerated through perfect matchings of 2n points.
pub fn chord_diagrams(n: usize) -> Vec<ChordDiagram> {
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut word = vec![0u32; 2 * n];
    fn rec(
        word: &mut Vec<u32>,
        next_label: u32,
        seen: &mut std::collections::HashSet<Vec<u32>>,
        out: &mut Vec<ChordDiagram>,
    ) {
        let first_free = match word.iter().position(|&x| x == 0) {
            None => {
                let diagram = ChordDiagram::from_word(word).expect("matching is a DOW");
                let canon = diagram.canonical();
                if seen.insert(canon.word().to_vec()) {
                    out.push(canon);
                }
                return;
            }
            Some(p) => p,
        };
        word[first_free] = next_label;
        for second in (first_free + 1)..word.len() {
            if word[second] != 0 {
                continue;
            }
            word[second] = next_label;
            rec(word, next_label + 1, seen, out);
            word[second] = 0;
        }
        word[first_free] = 0;
    }
    if n == 0 {
        out.push(ChordDiagram::empty());
        return out;
    }
    rec(&mut word, 1, &mut seen, &mut out);
    out
}

/// All chord diagrams with at most `max` chords.
pub fn chord_diagrams_up_to(max: usize) -> Vec<ChordDiagram> {
    (0..=max).flat_map(chord_diagrams).collect()
}
