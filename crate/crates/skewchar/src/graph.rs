//! Simple and oriented graphs, the skew characteristic polynomial Q_G, the refined
//! polynomial in (u, v), and exact characteristic polynomials of antisymmetric
//! integer matrices.
//!
//! Q_G is a subset sum: the coefficient of `u^(n-k)` counts the k-vertex induced
//! subgraphs whose GF(2) adjacency matrix is nondegenerate. The empty subgraph
//! counts as nondegenerate inside these sums, which is what makes Q_G monic.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::{self, Gf2Matrix};
use crate::polynomial::{Monomial, Polynomial};

/// Default cap on vertex count for the 2^n subset enumerations.
pub const DEFAULT_SUBSET_CAP: usize = 20;
/// Cap for brute-force canonical labeling.
pub const CANONICAL_CAP: usize = 12;

#[cfg(feature = "parallel")]
const PARALLEL_SUBSET_THRESHOLD: usize = 14;

/// Simple undirected graph with bit-packed symmetric adjacency, no loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > gf2::MAX_DIM {
            return Err(Error::CapExceeded {
                what: "vertex count",
                value: n,
                cap: gf2::MAX_DIM,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("cap");
        for i in 0..n {
            for j in (i + 1)..n {
                g.add_edge(i, j).expect("in range");
            }
        }
        g
    }

    /// Complete bipartite graph K_{m,n}; part one is vertices 0..m.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let mut g = Graph::empty(m + n).expect("cap");
        for i in 0..m {
            for j in 0..n {
                g.add_edge(i, m + j).expect("in range");
            }
        }
        g
    }

    /// Path on n vertices: 0 - 1 - ... - (n-1).
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("cap");
        for i in 1..n {
            g.add_edge(i - 1, i).expect("in range");
        }
        g
    }

    /// Cycle on n vertices.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n > 2 {
            g.add_edge(n - 1, 0).expect("in range");
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                index: v,
                n: self.n,
            });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::invalid(format!("loop at vertex {a}")));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    pub fn toggle_edge(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::invalid(format!("loop at vertex {a}")));
        }
        self.adj[a] ^= 1 << b;
        self.adj[b] ^= 1 << a;
        Ok(())
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && (self.adj[a] >> b) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let mut bits = self.adj[a] >> (a + 1).min(63);
            if a + 1 >= 64 {
                bits = 0;
            }
            let mut shifted = bits;
            let mut base = a + 1;
            while shifted != 0 {
                let t = shifted.trailing_zeros() as usize;
                out.push((a, base + t));
                base += t + 1;
                shifted >>= t + 1;
            }
        }
        out
    }

    /// Neighborhood of `v` as a bit mask.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn gf2_adjacency(&self) -> Gf2Matrix {
        Gf2Matrix::new(self.n, self.adj.clone()).expect("graph invariants")
    }

    /// Induced subgraph on the given vertices, relabeled 0..k-1 in ambient order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut mask = 0u64;
        for &v in vertices {
            self.check_vertex(v)?;
            mask |= 1 << v;
        }
        Ok(self.induced_by_mask(mask))
    }

    /// Induced subgraph on the vertices selected by `mask`.
    pub fn induced_by_mask(&self, mask: u64) -> Graph {
        let k = mask.count_ones() as usize;
        let mut adj = Vec::with_capacity(k);
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let mut row = self.adj[i] & mask;
            let mut packed = 0u64;
            while row != 0 {
                let j = row.trailing_zeros() as u64;
                row &= row - 1;
                let pos = (mask & ((1u64 << j) - 1)).count_ones();
                packed |= 1 << pos;
            }
            adj.push(packed);
        }
        Graph { n: k, adj }
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        assert!(n <= gf2::MAX_DIM, "disjoint union exceeds bit width");
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Graph { n, adj }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Masks of connected components.
    pub fn component_masks(&self) -> Vec<u64> {
        let full: u64 = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut unvisited = full;
        let mut out = Vec::new();
        while unvisited != 0 {
            let start = unvisited.trailing_zeros() as usize;
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0u64;
                let mut bits = frontier;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next |= self.adj[v];
                }
                frontier = next & !seen;
                seen |= next;
            }
            out.push(seen);
            unvisited &= !seen;
        }
        out
    }

    /// Nondegeneracy: 1 iff the GF(2) adjacency matrix is invertible.
    pub fn nu(&self) -> u8 {
        let mut scratch = vec![0u64; self.n];
        let full: u64 = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        if gf2::induced_rank(&self.adj, full, &mut scratch) == self.n {
            1
        } else {
            0
        }
    }

    pub fn corank(&self) -> usize {
        self.gf2_adjacency().corank()
    }

    fn check_subset_cap(&self, cap: usize) -> Result<()> {
        if self.n > cap {
            return Err(Error::CapExceeded {
                what: "vertex count for subset enumeration",
                value: self.n,
                cap,
            });
        }
        Ok(())
    }

    /// The skew characteristic polynomial Q_G(u).
    pub fn skew_char_poly(&self) -> Result<Polynomial> {
        self.skew_char_poly_capped(DEFAULT_SUBSET_CAP)
    }

    pub fn skew_char_poly_capped(&self, cap: usize) -> Result<Polynomial> {
        self.check_subset_cap(cap)?;
        let counts = self.subset_profile();
        // counts[(k, corank)] with corank = 0 are the nondegenerate subsets.
        let mut p = Polynomial::zero();
        for ((size, corank), count) in counts {
            if corank == 0 {
                p.add_term(
                    Monomial::new((self.n - size) as u32, 0, 0),
                    BigInt::from(count),
                );
            }
        }
        Ok(p)
    }

    /// The refined polynomial: sum over vertex subsets of
    /// `u^(n-|U|) * v^corank(A_{G(U)})`.
    pub fn refined_poly(&self) -> Result<Polynomial> {
        self.refined_poly_capped(DEFAULT_SUBSET_CAP)
    }

    pub fn refined_poly_capped(&self, cap: usize) -> Result<Polynomial> {
        self.check_subset_cap(cap)?;
        let counts = self.subset_profile();
        let mut p = Polynomial::zero();
        for ((size, corank), count) in counts {
            p.add_term(
                Monomial::new((self.n - size) as u32, corank as u32, 0),
                BigInt::from(count),
            );
        }
        Ok(p)
    }

    /// Single-threaded subset scan. Public so the benchmark suite can compare it
    /// against the parallel path; it is also the fallback when the `parallel`
    /// feature is disabled.
    pub fn subset_profile_sequential(&self) -> Vec<((usize, usize), u64)> {
        let total: u64 = 1u64 << self.n;
        let mut table = vec![0u64; (self.n + 1) * (self.n + 1)];
        let mut scratch = vec![0u64; self.n.max(1)];
        for mask in 0..total {
            let size = mask.count_ones() as usize;
            let rank = gf2::induced_rank(&self.adj, mask, &mut scratch);
            table[size * (self.n + 1) + (size - rank)] += 1;
        }
        collect_profile(table, self.n)
    }

    #[cfg(feature = "parallel")]
    fn subset_profile_parallel(&self) -> Vec<((usize, usize), u64)> {
        let total: u64 = 1u64 << self.n;
        let chunks: u64 = (rayon::current_num_threads() as u64 * 8).max(1);
        let chunk_len = total.div_ceil(chunks);
        let table = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut local = vec![0u64; (self.n + 1) * (self.n + 1)];
                let mut scratch = vec![0u64; self.n.max(1)];
                let lo = c * chunk_len;
                let hi = ((c + 1) * chunk_len).min(total);
                for mask in lo..hi {
                    let size = mask.count_ones() as usize;
                    let rank = gf2::induced_rank(&self.adj, mask, &mut scratch);
                    local[size * (self.n + 1) + (size - rank)] += 1;
                }
                local
            })
            .reduce(
                || vec![0u64; (self.n + 1) * (self.n + 1)],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            );
        collect_profile(table, self.n)
    }

    /// Count vertex subsets by (size, corank of induced adjacency).
    pub fn subset_profile(&self) -> Vec<((usize, usize), u64)> {
        #[cfg(feature = "parallel")]
        {
            if self.n >= PARALLEL_SUBSET_THRESHOLD {
                return self.subset_profile_parallel();
            }
        }
        self.subset_profile_sequential()
    }

    /// Canonical label sequence: the lexicographically minimal adjacency encoding
    /// over all vertex permutations. Equal outputs iff the graphs are isomorphic.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        if self.n > CANONICAL_CAP {
            return Err(Error::CapExceeded {
                what: "vertex count for canonical labeling",
                value: self.n,
                cap: CANONICAL_CAP,
            });
        }
        Ok(canonicalize(self))
    }

    /// Edge-list text format: first line `n=<count>`, then one `a b` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n={}", self.n).unwrap();
        for (a, b) in self.edges() {
            writeln!(out, "{a} {b}").unwrap();
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut graph: Option<Graph> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let loc = || format!("line {}", lineno + 1);
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("n=") {
                if graph.is_some() {
                    return Err(Error::parse(loc(), "duplicate n= header"));
                }
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(loc(), format!("bad vertex count {rest:?}")))?;
                graph = Some(Graph::empty(n)?);
                continue;
            }
            let g = graph
                .as_mut()
                .ok_or_else(|| Error::parse(loc(), "edge line before n= header"))?;
            let mut it = line.split_whitespace();
            let (a, b) = match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(Error::parse(loc(), "expected two vertex indices")),
            };
            let a: usize = a
                .parse()
                .map_err(|_| Error::parse(loc(), format!("bad vertex index {a:?}")))?;
            let b: usize = b
                .parse()
                .map_err(|_| Error::parse(loc(), format!("bad vertex index {b:?}")))?;
            g.add_edge(a, b)
                .map_err(|e| Error::parse(loc(), e.to_string()))?;
        }
        graph.ok_or_else(|| Error::parse("input", "missing n= header"))
    }
}

fn collect_profile(table: Vec<u64>, n: usize) -> Vec<((usize, usize), u64)> {
    let mut out = Vec::new();
    for size in 0..=n {
        for corank in 0..=n {
            let c = table[size * (n + 1) + corank];
            if c != 0 {
                out.push(((size, corank), c));
            }
        }
    }
    out
}

/// Canonical form of a graph: vertex count plus the minimal upper-triangle bit
/// encoding. Bits are laid out column by column (pairs (0,1), (0,2), (1,2),
/// (0,3), ...), most significant first, so prefixes of a partial labeling are
/// prefixes of the encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u128,
}

impl CanonicalForm {
    /// The encoding as a 0/1 string in the column-major pair order.
    pub fn bit_string(&self) -> String {
        let total = self.n * (self.n - 1) / 2;
        (0..total)
            .map(|i| {
                if (self.bits >> (total - 1 - i)) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: u32,
    perm: Vec<usize>,
    used: u64,
    best: Option<u128>,
}

impl CanonSearch<'_> {
    fn run(mut self) -> u128 {
        self.dfs(0, 0, 0);
        self.best.unwrap_or(0)
    }

    /// `prefix` holds `nbits` encoded bits for positions 0..depth.
    fn dfs(&mut self, depth: usize, prefix: u128, nbits: u32) {
        if depth == self.n {
            if self.best.map_or(true, |b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let mut candidates: Vec<usize> = (0..self.n).filter(|v| self.used & (1 << v) == 0).collect();
        // Interchangeable vertices (swapping them is an automorphism) give identical
        // subtrees; keep one representative.
        let mut kept: Vec<usize> = Vec::with_capacity(candidates.len());
        'cand: for &v in &candidates {
            for &u in &kept {
                let m = !((1u64 << u) | (1u64 << v));
                if self.g.adj[u] & m == self.g.adj[v] & m {
                    continue 'cand;
                }
            }
            kept.push(v);
        }
        candidates = kept;
        // Try low column bits first so the first leaf is already a good bound.
        candidates.sort_by_key(|&v| self.column_bits(depth, v));
        for v in candidates {
            let col = self.column_bits(depth, v);
            let new_prefix = (prefix << depth) | col as u128;
            let new_bits = nbits + depth as u32;
            if let Some(best) = self.best {
                let best_prefix = best >> (self.total_bits - new_bits);
                if new_prefix > best_prefix {
                    continue;
                }
            }
            self.perm[depth] = v;
            self.used |= 1 << v;
            self.dfs(depth + 1, new_prefix, new_bits);
            self.used &= !(1u64 << v);
        }
    }

    /// Bits of adjacency between candidate `v` (at position `depth`) and the
    /// already-placed vertices, earlier positions more significant.
    fn column_bits(&self, depth: usize, v: usize) -> u64 {
        let mut col = 0u64;
        for (i, &p) in self.perm[..depth].iter().enumerate() {
            if self.g.has_edge(p, v) {
                col |= 1 << (depth - 1 - i);
            }
        }
        col
    }
}

fn canonicalize(g: &Graph) -> CanonicalForm {
    let n = g.n();
    if n < 2 {
        return CanonicalForm { n, bits: 0 };
    }
    let search = CanonSearch {
        g,
        n,
        total_bits: (n * (n - 1) / 2) as u32,
        perm: vec![0; n],
        used: 0,
        best: None,
    };
    CanonicalForm {
        n,
        bits: search.run(),
    }
}

/// Oriented simple graph: antisymmetric adjacency with entries in {-1, 0, 1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    entries: Vec<i8>,
}

impl OrientedGraph {
    pub fn new(n: usize) -> Self {
        OrientedGraph {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut g = OrientedGraph::new(n);
        for &(a, b) in arcs {
            g.add_arc(a, b)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    /// Orient the edge a -> b (entry +1 at (a,b), -1 at (b,a)).
    pub fn add_arc(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.n || b >= self.n {
            return Err(Error::VertexOutOfRange {
                index: a.max(b),
                n: self.n,
            });
        }
        if a == b {
            return Err(Error::invalid(format!("loop at vertex {a}")));
        }
        self.entries[a * self.n + b] = 1;
        self.entries[b * self.n + a] = -1;
        Ok(())
    }

    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("cap");
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j) != 0 {
                    g.add_edge(i, j).expect("in range");
                }
            }
        }
        g
    }

    pub fn skew_adjacency(&self) -> IntSkewMatrix {
        IntSkewMatrix::new(
            self.n,
            self.entries.iter().map(|&e| e as i64).collect(),
        )
        .expect("antisymmetric by construction")
    }

    pub fn char_poly(&self) -> Polynomial {
        self.skew_adjacency().char_poly()
    }
}

/// Antisymmetric integer matrix, the domain of the matrix-level identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSkewMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntSkewMatrix {
    pub fn new(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::invalid(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        for i in 0..n {
            for j in i..n {
                if entries[i * n + j] != -entries[j * n + i] {
                    return Err(Error::NotAntisymmetric { i, j });
                }
            }
        }
        Ok(IntSkewMatrix { n, entries })
    }

    pub fn zero(n: usize) -> Self {
        IntSkewMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Exact characteristic polynomial det(uI - A).
    pub fn char_poly(&self) -> Polynomial {
        char_poly_int(self.n, &self.entries)
    }
}

/// det(uI - A) for any square integer matrix, by the Faddeev-LeVerrier recurrence.
/// The division by the step index is exact over the integers. Runs in i128 with
/// checked arithmetic and falls back to BigInt on overflow.
pub fn char_poly_int(n: usize, entries: &[i64]) -> Polynomial {
    assert_eq!(entries.len(), n * n);
    if let Some(cs) = char_poly_i128(n, entries) {
        return Polynomial::from_terms(
            cs.into_iter()
                .enumerate()
                .map(|(deg, c)| (Monomial::new(deg as u32, 0, 0), BigInt::from(c))),
        );
    }
    char_poly_bigint(n, entries)
}

fn char_poly_i128(n: usize, entries: &[i64]) -> Option<Vec<i128>> {
    let a: Vec<i128> = entries.iter().map(|&x| x as i128).collect();
    let mut m: Vec<i128> = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    // cs[k] is the coefficient of u^(n-k).
    let mut cs = vec![0i128; n + 1];
    cs[0] = 1;
    let mut am = vec![0i128; n * n];
    for k in 1..=n {
        for i in 0..n {
            for j in 0..n {
                let mut acc: i128 = 0;
                for l in 0..n {
                    acc = acc.checked_add(a[i * n + l].checked_mul(m[l * n + j])?)?;
                }
                am[i * n + j] = acc;
            }
        }
        let mut tr: i128 = 0;
        for i in 0..n {
            tr = tr.checked_add(am[i * n + i])?;
        }
        debug_assert_eq!(tr % k as i128, 0);
        let ck = -(tr / k as i128);
        cs[k] = ck;
        m.copy_from_slice(&am);
        for i in 0..n {
            m[i * n + i] = m[i * n + i].checked_add(ck)?;
        }
    }
    // Reverse: coefficient of u^deg.
    let mut out = vec![0i128; n + 1];
    for (k, c) in cs.into_iter().enumerate() {
        out[n - k] = c;
    }
    Some(out)
}

fn char_poly_bigint(n: usize, entries: &[i64]) -> Polynomial {
    let a: Vec<BigInt> = entries.iter().map(|&x| BigInt::from(x)).collect();
    let mut m: Vec<BigInt> = vec![BigInt::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = BigInt::one();
    }
    let mut cs = vec![BigInt::zero(); n + 1];
    cs[0] = BigInt::one();
    for k in 1..=n {
        let mut am = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for l in 0..n {
                    acc += &a[i * n + l] * &m[l * n + j];
                }
                am[i * n + j] = acc;
            }
        }
        let mut tr = BigInt::zero();
        for i in 0..n {
            tr += &am[i * n + i];
        }
        let ck = -(tr / k);
        cs[k] = ck.clone();
        m = am;
        for i in 0..n {
            m[i * n + i] += &ck;
        }
    }
    Polynomial::from_terms(
        cs.into_iter()
            .enumerate()
            .map(|(k, c)| (Monomial::new((n - k) as u32, 0, 0), c)),
    )
}

/// Parse a whitespace-separated square integer matrix (one row per line).
pub fn parse_int_matrix(text: &str) -> Result<(usize, Vec<i64>)> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for tok in line.split_whitespace() {
            let x: i64 = tok.parse().map_err(|_| {
                Error::parse(
                    format!("line {}", lineno + 1),
                    format!("bad integer {tok:?}"),
                )
            })?;
            row.push(x);
        }
        rows.push(row);
    }
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::parse(
                format!("row {}", i + 1),
                format!("expected {n} entries, got {}", row.len()),
            ));
        }
    }
    Ok((n, rows.into_iter().flatten().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::Var;
    use proptest::prelude::*;

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    pub(crate) fn wheel5() -> Graph {
        // Hub 0; rim cycle 1-2-4-5-3-1.
        Graph::with_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 3),
                (2, 4),
                (3, 5),
                (4, 5),
            ],
        )
        .unwrap()
    }

    pub(crate) fn prism3() -> Graph {
        // Triangles (0,2,3) and (1,4,5); rungs 0-1, 2-4, 3-5.
        Graph::with_edges(
            6,
            &[
                (2, 3),
                (0, 2),
                (0, 3),
                (4, 5),
                (1, 4),
                (1, 5),
                (0, 1),
                (2, 4),
                (3, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.induced_subgraph(&[1, 3]).unwrap(), Graph::complete(2));
        let p3 = Graph::path(3);
        let ends = p3.induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(ends.edge_count(), 0);
        assert_eq!(ends.n(), 2);
        // The 5 rim vertices of the wheel induce a 5-cycle.
        let rim = wheel5().induced_subgraph(&[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(rim.n(), 5);
        assert_eq!(rim.edge_count(), 5);
        assert!((0..5).all(|v| rim.degree(v) == 2));
        assert!(rim.is_connected());
        let bad = p3.induced_subgraph(&[0, 7]);
        assert!(matches!(bad, Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn nu_examples() {
        assert_eq!(Graph::complete(2).nu(), 1);
        assert_eq!(Graph::complete(3).nu(), 0);
        assert_eq!(Graph::cycle(4).nu(), 0);
    }

    #[test]
    fn skew_char_poly_examples() {
        assert_eq!(
            Graph::complete(4).skew_char_poly().unwrap(),
            poly("u^4 + 6*u^2 + 1")
        );
        assert_eq!(
            wheel5().skew_char_poly().unwrap(),
            poly("u^6 + 10*u^4 + 10*u^2 + 1")
        );
        assert_eq!(
            prism3().skew_char_poly().unwrap(),
            poly("u^6 + 9*u^4 + 12*u^2")
        );
        assert_eq!(Graph::path(3).skew_char_poly().unwrap(), poly("u^3 + 2*u"));
    }

    #[test]
    fn refined_poly_examples() {
        assert_eq!(
            Graph::complete(3).refined_poly().unwrap(),
            poly("u^3 + 3*u^2*v + 3*u + v")
        );
        assert_eq!(
            Graph::empty(1).unwrap().refined_poly().unwrap(),
            poly("u + v")
        );
        assert_eq!(
            Graph::complete(2).refined_poly().unwrap(),
            poly("u^2 + 2*u*v + 1")
        );
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(IntSkewMatrix::zero(3).char_poly(), poly("u^3"));
        let k3 = OrientedGraph::from_arcs(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3.char_poly(), poly("u^3 + 3*u"));
        // Oriented K_{2,2}, all edges from one part to the other.
        let k22 = OrientedGraph::from_arcs(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(k22.char_poly(), poly("u^4 + 4*u^2"));
        let bad = IntSkewMatrix::new(2, vec![0, 1, 1, 0]);
        assert!(matches!(bad, Err(Error::NotAntisymmetric { .. })));
    }

    #[test]
    fn char_poly_bigint_fallback_agrees() {
        let entries = vec![0, 3, -1, -3, 0, 5, 1, -5, 0];
        assert_eq!(char_poly_bigint(3, &entries), char_poly_int(3, &entries));
    }

    #[test]
    fn canonical_form_examples() {
        let p3 = Graph::path(3);
        let p3_relabeled = Graph::with_edges(3, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(
            p3.canonical_form().unwrap(),
            p3_relabeled.canonical_form().unwrap()
        );
        assert_eq!(
            Graph::complete(3).canonical_form().unwrap(),
            Graph::cycle(3).canonical_form().unwrap()
        );
        assert_ne!(
            p3.canonical_form().unwrap(),
            Graph::complete(3).canonical_form().unwrap()
        );
    }

    #[test]
    fn edge_list_round_trip() {
        let g = prism3();
        let text = g.to_edge_list();
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
        let with_noise = format!("# prism\n\n{text}");
        assert_eq!(Graph::parse_edge_list(&with_noise).unwrap(), g);
        assert!(Graph::parse_edge_list("0 1\n").is_err());
        assert!(Graph::parse_edge_list("n=2\n0 2\n").is_err());
    }

    #[test]
    fn subset_cap_is_enforced() {
        let g = Graph::empty(21).unwrap();
        assert!(matches!(
            g.skew_char_poly(),
            Err(Error::CapExceeded { .. })
        ));
        assert!(g.skew_char_poly_capped(21).is_ok());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1usize..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for i in 0..n {
                    for j in (i + 1)..n {
                        if bits[k] {
                            g.add_edge(i, j).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn q_structural_properties(g in arb_graph(8)) {
            let q = g.skew_char_poly().unwrap();
            let n = g.n() as u32;
            prop_assert_eq!(q.degree_in(Var::U), n);
            prop_assert_eq!(q.coefficient(Monomial::new(n, 0, 0)), BigInt::one());
            if n >= 2 {
                prop_assert_eq!(
                    q.coefficient(Monomial::new(n - 2, 0, 0)),
                    BigInt::from(g.edge_count())
                );
            }
            // Parity: only degrees congruent to n mod 2 appear, and all
            // coefficients are positive.
            for (m, c) in q.terms() {
                prop_assert_eq!(m.u % 2, n % 2);
                prop_assert!(c > &BigInt::zero());
            }
            prop_assert_eq!(q.free_term(), BigInt::from(g.nu()));
        }

        #[test]
        fn q_is_multiplicative(a in arb_graph(5), b in arb_graph(5)) {
            let union = a.disjoint_union(&b);
            prop_assert_eq!(
                union.skew_char_poly().unwrap(),
                a.skew_char_poly().unwrap().mul(&b.skew_char_poly().unwrap())
            );
        }

        #[test]
        fn refined_specializes_to_q(g in arb_graph(8)) {
            let refined = g.refined_poly().unwrap();
            prop_assert_eq!(refined.eval_at_zero(Var::V), g.skew_char_poly().unwrap());
        }

        #[test]
        fn canonical_form_is_isomorphism_invariant(g in arb_graph(7), seed in any::<u64>()) {
            let n = g.n();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut state = seed | 1;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                let j = (state >> 33) as usize % (i + 1);
                perm.swap(i, j);
            }
            let mut h = Graph::empty(n).unwrap();
            for (a, b) in g.edges() {
                h.add_edge(perm[a], perm[b]).unwrap();
            }
            prop_assert_eq!(g.canonical_form().unwrap(), h.canonical_form().unwrap());
        }
    }
}
