//! Set systems and delta-matroids: the Symmetric Exchange Axiom, twist, deletion,
//! contraction, restriction, products, graphic delta-matroids, binary recognition,
//! and the constructive two-variable skew characteristic polynomial Q_D(u, w).
//!
//! Feasible sets are bit masks over the ordered ground set. Q_D is computed by a
//! recursion on the ground size: the value of Q on the projection of D to the
//! primitives of the delta-matroid Hopf algebra is a constant c_D, and the
//! reconstruction identity D = pi(D) + sum over multi-block partitions of the
//! products of projected restrictions turns the axioms into an algorithm. The
//! free-term axiom (free term of Q_D equals nu(D)) pins each constant.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partitions::for_each_set_partition;
use crate::polynomial::{Monomial, Polynomial};

/// Cap for the partition recursion behind Q_D (Bell(12) is about 4.2M).
pub const POLY_CAP: usize = 12;
/// Cap for binary recognition.
pub const BINARY_CAP: usize = 12;
/// Cap for isomorphism search.
pub const ISO_CAP: usize = 10;
/// Cap on ground-set size imposed by the u32 feasible masks.
pub const GROUND_CAP: usize = 32;

/// A ground set with a family of feasible subsets, in canonical order
/// (feasible masks sorted ascending, deduplicated).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    ground: Vec<String>,
    feasible: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct SetSystemJson {
    ground: Vec<String>,
    feasible: Vec<Vec<String>>,
}

impl SetSystem {
    pub fn from_masks(ground: Vec<String>, mut feasible: Vec<u32>) -> Result<Self> {
        let n = ground.len();
        if n > GROUND_CAP {
            return Err(Error::CapExceeded {
                what: "ground set size",
                value: n,
                cap: GROUND_CAP,
            });
        }
        for (i, a) in ground.iter().enumerate() {
            if ground[..i].contains(a) {
                return Err(Error::invalid(format!("duplicate ground label {a:?}")));
            }
        }
        let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        if feasible.iter().any(|&m| m & !full != 0) {
            return Err(Error::invalid("feasible mask outside the ground set"));
        }
        feasible.sort_unstable();
        feasible.dedup();
        Ok(SetSystem { ground, feasible })
    }

    /// Build from label sets, e.g. `(["1","2"], [["1"],["2"]])`.
    pub fn from_label_sets<S: AsRef<str>>(
        ground: Vec<String>,
        feasible: &[Vec<S>],
    ) -> Result<Self> {
        let mut masks = Vec::with_capacity(feasible.len());
        let index = |label: &str| -> Result<usize> {
            ground
                .iter()
                .position(|g| g == label)
                .ok_or_else(|| Error::invalid(format!("label {label:?} not in the ground set")))
        };
        for set in feasible {
            let mut mask = 0u32;
            for label in set {
                mask |= 1 << index(label.as_ref())?;
            }
            masks.push(mask);
        }
        SetSystem::from_masks(ground, masks)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    pub fn feasible_masks(&self) -> &[u32] {
        &self.feasible
    }

    pub fn full_mask(&self) -> u32 {
        let n = self.ground.len();
        if n == 32 {
            u32::MAX
        } else {
            (1u32 << n) - 1
        }
    }

    pub fn contains_mask(&self, mask: u32) -> bool {
        self.feasible.binary_search(&mask).is_ok()
    }

    pub fn is_proper(&self) -> bool {
        !self.feasible.is_empty()
    }

    /// Feasible sets as label vectors (each in ground order), in mask order.
    pub fn feasible_label_sets(&self) -> Vec<Vec<String>> {
        self.feasible
            .iter()
            .map(|&mask| {
                (0..self.ground.len())
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| self.ground[i].clone())
                    .collect()
            })
            .collect()
    }

    /// The Symmetric Exchange Axiom: for all feasible X, Y and a in X^Y there is a
    /// b in X^Y (b = a allowed) with X^{a,b} feasible.
    pub fn is_delta_matroid(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        for &x in &self.feasible {
            for &y in &self.feasible {
                let diff = x ^ y;
                let mut bits = diff;
                'outer: while bits != 0 {
                    let a = bits.trailing_zeros();
                    bits &= bits - 1;
                    let mut bbits = diff;
                    while bbits != 0 {
                        let b = bbits.trailing_zeros();
                        bbits &= bbits - 1;
                        let swap = (1u32 << a) | (1u32 << b);
                        if self.contains_mask(x ^ swap) {
                            continue 'outer;
                        }
                    }
                    return false;
                }
            }
        }
        true
    }

    /// All feasible sets share one size parity.
    pub fn is_even(&self) -> bool {
        let mut parity = None;
        for &m in &self.feasible {
            let p = m.count_ones() % 2;
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => return false,
                _ => {}
            }
        }
        true
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mirror = SetSystemJson {
            ground: self.ground.clone(),
            feasible: self.feasible_label_sets(),
        };
        serde_json::to_value(mirror).expect("plain data serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<SetSystem> {
        let mirror: SetSystemJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::parse("set-system json", e.to_string()))?;
        SetSystem::from_label_sets(mirror.ground, &mirror.feasible)
    }
}

/// A proper set system satisfying the Symmetric Exchange Axiom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeltaMatroid {
    system: SetSystem,
}

impl std::ops::Deref for DeltaMatroid {
    type Target = SetSystem;

    fn deref(&self) -> &SetSystem {
        &self.system
    }
}

/// Deletion on raw mask families, masks staying in the ambient index space.
fn delete_masks(feasible: &[u32], e: usize) -> Vec<u32> {
    let bit = 1u32 << e;
    let coloop = feasible.iter().all(|&x| x & bit != 0);
    let mut out: Vec<u32> = if coloop {
        feasible.iter().map(|&x| x & !bit).collect()
    } else {
        feasible.iter().copied().filter(|&x| x & bit == 0).collect()
    };
    out.sort_unstable();
    out.dedup();
    out
}

impl DeltaMatroid {
    pub fn try_new(system: SetSystem) -> Result<Self> {
        if !system.is_proper() {
            return Err(Error::NotDeltaMatroid("no feasible sets".into()));
        }
        if !system.is_delta_matroid() {
            return Err(Error::NotDeltaMatroid(
                "Symmetric Exchange Axiom fails".into(),
            ));
        }
        Ok(DeltaMatroid { system })
    }

    /// Wrap a system produced by an operation that preserves the SEA; validated
    /// only in debug builds.
    fn trusted(system: SetSystem) -> Self {
        debug_assert!(
            system.is_proper() && system.is_delta_matroid(),
            "operation broke the Symmetric Exchange Axiom"
        );
        DeltaMatroid { system }
    }

    pub fn as_set_system(&self) -> &SetSystem {
        &self.system
    }

    /// The unit delta-matroid (empty ground set, only the empty set feasible).
    pub fn unit() -> Self {
        DeltaMatroid {
            system: SetSystem::from_masks(Vec::new(), vec![0]).expect("tiny"),
        }
    }

    /// Nondegeneracy: 1 iff the whole ground set is feasible.
    pub fn nu(&self) -> u8 {
        if self.contains_mask(self.full_mask()) {
            1
        } else {
            0
        }
    }

    /// Twist (partial dual): symmetric difference of every feasible set with `a`.
    pub fn twist_mask(&self, a: u32) -> Result<DeltaMatroid> {
        if a & !self.full_mask() != 0 {
            return Err(Error::invalid("twist set outside the ground set"));
        }
        let mut feasible: Vec<u32> = self.feasible.iter().map(|&x| x ^ a).collect();
        feasible.sort_unstable();
        Ok(DeltaMatroid::trusted(SetSystem {
            ground: self.ground.clone(),
            feasible,
        }))
    }

    pub fn twist(&self, labels: &[impl AsRef<str>]) -> Result<DeltaMatroid> {
        self.twist_mask(self.mask_of(labels)?)
    }

    fn mask_of(&self, labels: &[impl AsRef<str>]) -> Result<u32> {
        let mut mask = 0u32;
        for l in labels {
            let l = l.as_ref();
            let i = self
                .ground
                .iter()
                .position(|g| g == l)
                .ok_or_else(|| Error::invalid(format!("label {l:?} not in the ground set")))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    fn element_index(&self, label: &str) -> Result<usize> {
        self.ground
            .iter()
            .position(|g| g == label)
            .ok_or_else(|| Error::invalid(format!("label {label:?} not in the ground set")))
    }

    /// Delete element `e` (by position). If `e` is a coloop it is removed from
    /// every feasible set instead of dropping the sets containing it.
    pub fn delete_at(&self, e: usize) -> Result<DeltaMatroid> {
        if e >= self.ground.len() {
            return Err(Error::invalid(format!("element index {e} out of range")));
        }
        let masks = delete_masks(&self.feasible, e);
        let compacted = compact_masks(&masks, e);
        let mut ground = self.ground.clone();
        ground.remove(e);
        Ok(DeltaMatroid::trusted(SetSystem {
            ground,
            feasible: compacted,
        }))
    }

    pub fn delete(&self, label: &str) -> Result<DeltaMatroid> {
        self.delete_at(self.element_index(label)?)
    }

    /// Contract element `e`: keep the sets containing it (dropping `e`), or leave
    /// the family unchanged when `e` is a loop. Equals twist-then-delete.
    pub fn contract_at(&self, e: usize) -> Result<DeltaMatroid> {
        if e >= self.ground.len() {
            return Err(Error::invalid(format!("element index {e} out of range")));
        }
        let bit = 1u32 << e;
        let is_loop = self.feasible.iter().all(|&x| x & bit == 0);
        let mut masks: Vec<u32> = if is_loop {
            self.feasible.clone()
        } else {
            self.feasible
                .iter()
                .copied()
                .filter(|&x| x & bit != 0)
                .map(|x| x & !bit)
                .collect()
        };
        masks.sort_unstable();
        masks.dedup();
        let compacted = compact_masks(&masks, e);
        let mut ground = self.ground.clone();
        ground.remove(e);
        Ok(DeltaMatroid::trusted(SetSystem {
            ground,
            feasible: compacted,
        }))
    }

    pub fn contract(&self, label: &str) -> Result<DeltaMatroid> {
        self.contract_at(self.element_index(label)?)
    }

    /// Restriction to the elements selected by `keep` (a mask over positions):
    /// delete everything else. Deletion order does not matter.
    pub fn restrict_by_mask(&self, keep: u32) -> Result<DeltaMatroid> {
        if keep & !self.full_mask() != 0 {
            return Err(Error::invalid("restriction set outside the ground set"));
        }
        let mut masks = self.feasible.clone();
        let mut drop = self.full_mask() & !keep;
        while drop != 0 {
            let e = drop.trailing_zeros() as usize;
            drop &= drop - 1;
            masks = delete_masks(&masks, e);
        }
        // Compact the kept positions down to 0..k.
        let mut compacted: Vec<u32> = masks
            .iter()
            .map(|&m| {
                let mut out = 0u32;
                let mut bits = m;
                while bits != 0 {
                    let i = bits.trailing_zeros();
                    bits &= bits - 1;
                    let pos = (keep & ((1u32 << i) - 1)).count_ones();
                    out |= 1 << pos;
                }
                out
            })
            .collect();
        compacted.sort_unstable();
        compacted.dedup();
        let ground = (0..self.ground.len())
            .filter(|&i| keep & (1 << i) != 0)
            .map(|i| self.ground[i].clone())
            .collect();
        Ok(DeltaMatroid::trusted(SetSystem {
            ground,
            feasible: compacted,
        }))
    }

    pub fn restrict_by_labels(&self, labels: &[impl AsRef<str>]) -> Result<DeltaMatroid> {
        self.restrict_by_mask(self.mask_of(labels)?)
    }

    /// Product: disjoint union of ground sets, feasible sets are unions of one
    /// feasible set from each factor. Colliding labels from the right factor are
    /// primed until unique.
    pub fn product(&self, other: &DeltaMatroid) -> DeltaMatroid {
        let shift = self.ground.len();
        assert!(
            shift + other.ground.len() <= GROUND_CAP,
            "product exceeds the ground cap"
        );
        let mut ground = self.ground.clone();
        for label in &other.ground {
            let mut candidate = label.clone();
            while ground.contains(&candidate) {
                candidate.push('\'');
            }
            ground.push(candidate);
        }
        let mut feasible = Vec::with_capacity(self.feasible.len() * other.feasible.len());
        for &x in &self.feasible {
            for &y in &other.feasible {
                feasible.push(x | (y << shift));
            }
        }
        feasible.sort_unstable();
        feasible.dedup();
        DeltaMatroid::trusted(SetSystem { ground, feasible })
    }

    /// Isomorphism of set systems: some ground bijection carries one feasible
    /// family onto the other.
    pub fn is_isomorphic(&self, other: &DeltaMatroid) -> Result<bool> {
        let n = self.ground_size();
        if n != other.ground_size() {
            return Ok(false);
        }
        if n > ISO_CAP {
            return Err(Error::CapExceeded {
                what: "ground size for isomorphism search",
                value: n,
                cap: ISO_CAP,
            });
        }
        if self.feasible.len() != other.feasible.len() {
            return Ok(false);
        }
        Ok(self.canonical_key() == other.canonical_key())
    }

    /// Minimal relabeled feasible family over all ground bijections. Equal keys
    /// iff isomorphic.
    pub fn canonical_key(&self) -> DmCanonKey {
        let n = self.ground_size();
        let profiles: Vec<Vec<u32>> = (0..n).map(|e| self.element_profile(e)).collect();
        let mut best: Option<Vec<u32>> = None;
        let mut perm = vec![usize::MAX; n];
        let mut used = 0u32;
        self.canon_search(&profiles, 0, &mut perm, &mut used, &mut best);
        DmCanonKey {
            n,
            feasible: best.unwrap_or_default(),
        }
    }

    /// Count of feasible sets of each size containing the element; relabelings
    /// can only map elements with equal profiles onto each other.
    fn element_profile(&self, e: usize) -> Vec<u32> {
        let mut profile = vec![0u32; self.ground_size() + 1];
        for &m in &self.feasible {
            if m & (1 << e) != 0 {
                profile[m.count_ones() as usize] += 1;
            }
        }
        profile
    }

    fn canon_search(
        &self,
        profiles: &[Vec<u32>],
        depth: usize,
        perm: &mut [usize],
        used: &mut u32,
        best: &mut Option<Vec<u32>>,
    ) {
        let n = self.ground_size();
        if depth == n {
            let mut relabeled: Vec<u32> = self
                .feasible
                .iter()
                .map(|&m| {
                    let mut out = 0u32;
                    let mut bits = m;
                    while bits != 0 {
                        let e = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        out |= 1 << perm[e];
                    }
                    out
                })
                .collect();
            relabeled.sort_unstable();
            if best.as_ref().map_or(true, |b| relabeled < *b) {
                *best = Some(relabeled);
            }
            return;
        }
        let mut kept: Vec<usize> = Vec::new();
        'cand: for e in 0..n {
            if *used & (1 << e) != 0 {
                continue;
            }
            for &f in &kept {
                if profiles[e] == profiles[f] && self.swap_is_automorphism(e, f) {
                    continue 'cand;
                }
            }
            kept.push(e);
        }
        for e in kept {
            perm[e] = depth;
            *used |= 1 << e;
            self.canon_search(profiles, depth + 1, perm, used, best);
            *used &= !(1u32 << e);
            perm[e] = usize::MAX;
        }
    }

    fn swap_is_automorphism(&self, e: usize, f: usize) -> bool {
        let be = 1u32 << e;
        let bf = 1u32 << f;
        self.feasible.iter().all(|&m| {
            let swapped = if ((m & be != 0) as u8) != ((m & bf != 0) as u8) {
                m ^ be ^ bf
            } else {
                m
            };
            self.contains_mask(swapped)
        })
    }

    /// The two-variable skew characteristic polynomial Q_D(u, w) of an even
    /// binary delta-matroid.
    pub fn skew_poly(&self) -> Result<Polynomial> {
        let n = self.ground_size();
        if n > POLY_CAP {
            return Err(Error::CapExceeded {
                what: "ground size for the partition recursion",
                value: n,
                cap: POLY_CAP,
            });
        }
        self.check_even()?;
        if recognize_binary(&self.system)?.is_none() {
            return Err(Error::NotBinary);
        }
        if n == 0 {
            return Ok(Polynomial::one());
        }

        // Restrictions of every subset of the ground set, feasible masks kept in
        // the ambient index space. Children are derived from any parent; deletion
        // order does not matter.
        let full = self.full_mask();
        let mut restr: Vec<Option<Vec<u32>>> = vec![None; 1 << n];
        restr[full as usize] = Some(self.feasible.clone());
        for mask in (0..=full).rev() {
            if restr[mask as usize].is_none() {
                continue;
            }
            let parent = restr[mask as usize].clone().unwrap();
            let mut bits = mask;
            while bits != 0 {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let child = mask & !(1u32 << e);
                if restr[child as usize].is_none() {
                    restr[child as usize] = Some(delete_masks(&parent, e));
                }
            }
        }

        // Singleton restrictions decide the variable: ({e}; {Ø}) -> u,
        // ({e}; {{e}}) -> w + 1.
        let mut singleton_is_w = vec![false; n];
        for e in 0..n {
            let fam = restr[1usize << e].as_ref().unwrap();
            singleton_is_w[e] = match fam.as_slice() {
                [0] => false,
                [m] if *m == 1u32 << e => true,
                _ => {
                    return Err(Error::NotDeltaMatroid(format!(
                        "singleton restriction of element {e} is not proper"
                    )))
                }
            };
        }
        if n == 1 {
            // Grading-1 elements are their own projection; no constant correction.
            return Ok(if singleton_is_w[0] {
                "w + 1".parse().expect("literal")
            } else {
                Polynomial::var(crate::polynomial::Var::U)
            });
        }

        // Constants c_S = Q(pi(D|S)) for |S| >= 2, in ascending popcount order so
        // every block constant is ready when needed.
        let mut constants: Vec<Option<BigInt>> = vec![None; 1 << n];
        let mut layers: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
        for mask in 1..=full {
            layers[mask.count_ones() as usize].push(mask);
        }
        for k in 2..=n {
            let layer = std::mem::take(&mut layers[k]);
            let results = compute_layer(
                &layer,
                &restr,
                &constants,
                &singleton_is_w,
            );
            for (mask, c) in layer.into_iter().zip(results) {
                constants[mask as usize] = Some(c);
            }
        }

        // Assemble Q_D from the full partition sum.
        let buckets = partition_buckets(full, &constants, &singleton_is_w);
        let nu_full = BigInt::from(self.nu());
        let mut free_sum = BigInt::zero();
        for (&(a, _), coeff) in &buckets {
            if a == 0 {
                free_sum += coeff;
            }
        }
        let c_full = &nu_full - &free_sum;
        let mut q = Polynomial::constant(c_full);
        let w_plus_1: Polynomial = "w + 1".parse().expect("literal");
        let mut w_powers: Vec<Polynomial> = vec![Polynomial::one()];
        for b in 1..=n {
            w_powers.push(w_powers[b - 1].mul(&w_plus_1));
        }
        for ((a, b), coeff) in buckets {
            let term = Polynomial::term(Monomial::new(a as u32, 0, 0), coeff);
            q = q.add(&term.mul(&w_powers[b]));
        }
        debug_assert_eq!(q.free_term(), nu_full, "free-term axiom must hold");
        Ok(q)
    }

    fn check_even(&self) -> Result<()> {
        let mut sizes = self.feasible.iter().map(|m| m.count_ones() as usize);
        if let Some(first) = sizes.next() {
            for s in sizes {
                if s % 2 != first % 2 {
                    return Err(Error::NotEven(first, s));
                }
            }
        }
        Ok(())
    }
}

fn compact_masks(masks: &[u32], removed: usize) -> Vec<u32> {
    let low = (1u32 << removed) - 1;
    let mut out: Vec<u32> = masks
        .iter()
        .map(|&m| (m & low) | ((m >> (removed + 1)) << removed))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn compute_layer(
    layer: &[u32],
    restr: &[Option<Vec<u32>>],
    constants: &[Option<BigInt>],
    singleton_is_w: &[bool],
) -> Vec<BigInt> {
    let run = |&mask: &u32| -> BigInt {
        let fam = restr[mask as usize].as_ref().unwrap();
        let nu = BigInt::from(fam.binary_search(&mask).is_ok() as u8);
        let buckets = partition_buckets(mask, constants, singleton_is_w);
        let mut free_sum = BigInt::zero();
        for (&(a, _), coeff) in &buckets {
            if a == 0 {
                free_sum += coeff;
            }
        }
        nu - free_sum
    };
    #[cfg(feature = "parallel")]
    {
        if layer.len() >= 16 {
            return layer.par_iter().map(run).collect();
        }
    }
    layer.iter().map(run).collect()
}

/// Sum over all multi-block partitions of the elements of `mask`: each singleton
/// block contributes a factor u or (w+1); each larger block its constant. Bucketed
/// by (#u-singletons, #w-singletons) with the product of block constants summed.
fn partition_buckets(
    mask: u32,
    constants: &[Option<BigInt>],
    singleton_is_w: &[bool],
) -> HashMap<(usize, usize), BigInt> {
    let elements: Vec<usize> = (0..32).filter(|&i| mask & (1 << i) != 0).collect();
    let k = elements.len();
    let mut buckets: HashMap<(usize, usize), BigInt> = HashMap::new();
    let mut block_masks = vec![0u32; k];
    for_each_set_partition(k, |assignment| {
        let blocks = crate::partitions::block_count(assignment);
        if blocks < 2 {
            return;
        }
        for b in block_masks.iter_mut().take(blocks) {
            *b = 0;
        }
        for (i, &b) in assignment.iter().enumerate() {
            block_masks[b as usize] |= 1 << elements[i];
        }
        let mut u_count = 0usize;
        let mut w_count = 0usize;
        let mut coeff = BigInt::one();
        for &bm in &block_masks[..blocks] {
            if bm.count_ones() == 1 {
                let e = bm.trailing_zeros() as usize;
                if singleton_is_w[e] {
                    w_count += 1;
                } else {
                    u_count += 1;
                }
            } else {
                coeff *= constants[bm as usize].as_ref().expect("lower layer ready");
            }
        }
        *buckets.entry((u_count, w_count)).or_insert_with(BigInt::zero) += coeff;
    });
    buckets
}

/// The nondegeneracy delta-matroid of a simple graph: ground set = vertices,
/// feasible sets = vertex subsets inducing a GF(2)-nondegenerate subgraph.
pub fn graphic_delta_matroid(g: &Graph) -> Result<DeltaMatroid> {
    let n = g.n();
    if n > crate::graph::DEFAULT_SUBSET_CAP {
        return Err(Error::CapExceeded {
            what: "vertex count for the graphic delta-matroid",
            value: n,
            cap: crate::graph::DEFAULT_SUBSET_CAP,
        });
    }
    let mut feasible = Vec::new();
    let mut scratch = vec![0u64; n.max(1)];
    for mask in 0..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if crate::gf2::induced_rank(g.adjacency_rows(), mask, &mut scratch) == size {
            feasible.push(mask as u32);
        }
    }
    let ground = (0..n).map(|v| v.to_string()).collect();
    let system = SetSystem::from_masks(ground, feasible)?;
    Ok(DeltaMatroid::trusted(system))
}

/// Binary recognition: search for a twist set A and graph G such that twisting by
/// A gives the graphic delta-matroid of G. Twisting by any feasible set puts the
/// empty set into the family, and the candidate graph is read off the feasible
/// pairs; every feasible set is tried. Accepts any set system: one violating the
/// SEA can never twist to a graphic delta-matroid.
pub fn recognize_binary(s: &SetSystem) -> Result<Option<(Vec<String>, Graph)>> {
    let n = s.ground_size();
    if n > BINARY_CAP {
        return Err(Error::CapExceeded {
            what: "ground size for binary recognition",
            value: n,
            cap: BINARY_CAP,
        });
    }
    for &witness in s.feasible_masks() {
        let mut twisted: Vec<u32> = s.feasible_masks().iter().map(|&m| m ^ witness).collect();
        twisted.sort_unstable();
        let mut graph = Graph::empty(n)?;
        for i in 0..n {
            for j in (i + 1)..n {
                if twisted.binary_search(&((1u32 << i) | (1u32 << j))).is_ok() {
                    graph.add_edge(i, j)?;
                }
            }
        }
        let graphic = graphic_delta_matroid(&graph)?;
        if graphic.feasible_masks() == twisted.as_slice() {
            let labels = (0..n)
                .filter(|&i| witness & (1 << i) != 0)
                .map(|i| s.ground()[i].clone())
                .collect();
            return Ok(Some((labels, graph)));
        }
    }
    Ok(None)
}

/// Canonical key of a set system under ground relabeling.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DmCanonKey {
    pub n: usize,
    pub feasible: Vec<u32>,
}
