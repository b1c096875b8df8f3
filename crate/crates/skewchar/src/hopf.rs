//! The graded Hopf algebra engine shared by graphs and even binary delta-matroids:
//! formal rational linear combinations of isomorphism classes, disjoint-union
//! products, the subset coproduct, the projection to primitives
//!
//!   pi(G) = sum over set partitions I of (-1)^(|I|-1) (|I|-1)! prod_i G(i),
//!
//! the reconstruction identity G = pi(G) + sum over multi-block partitions of the
//! products of projected restrictions, and exact linear evaluation of invariants.
//!
//! Sums are keyed by canonical forms, so coefficients merge by isomorphism class.
//! Coefficients are rational: the partition formula is integral, but alternative
//! log-series evaluations need not be, and exactness is the point.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dmatroid::{DeltaMatroid, DmCanonKey};
use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph};
use crate::partitions::{block_count, for_each_set_partition};
use crate::polynomial::Polynomial;

/// Cap for the partition-sum operations (Bell-number bounded).
pub const PROJECTION_CAP: usize = 10;
/// Cap for the subset coproduct.
pub const COPRODUCT_CAP: usize = 12;

/// An element type that generates a graded commutative cocommutative Hopf algebra:
/// graphs under disjoint union and induced subgraphs, delta-matroids under product
/// and restriction.
pub trait HopfAtom: Clone {
    type Key: Ord + std::hash::Hash + Clone + std::fmt::Debug;

    fn size(&self) -> usize;
    /// The substructure induced by the ground elements selected by `mask`.
    fn restrict_to(&self, mask: u64) -> Self;
    /// Disjoint union / product of two atoms.
    fn product(&self, other: &Self) -> Self;
    /// The grading-0 unit.
    fn unit() -> Self;
    /// Canonical key: equal keys iff isomorphic.
    fn canon_key(&self) -> Result<Self::Key>;
}

impl HopfAtom for Graph {
    type Key = CanonicalForm;

    fn size(&self) -> usize {
        self.n()
    }

    fn restrict_to(&self, mask: u64) -> Self {
        self.induced_by_mask(mask)
    }

    fn product(&self, other: &Self) -> Self {
        self.disjoint_union(other)
    }

    fn unit() -> Self {
        Graph::empty(0).expect("empty graph")
    }

    fn canon_key(&self) -> Result<CanonicalForm> {
        self.canonical_form()
    }
}

impl HopfAtom for DeltaMatroid {
    type Key = DmCanonKey;

    fn size(&self) -> usize {
        self.ground_size()
    }

    fn restrict_to(&self, mask: u64) -> Self {
        self.restrict_by_mask(mask as u32)
            .expect("mask within the ground set")
    }

    fn product(&self, other: &Self) -> Self {
        DeltaMatroid::product(self, other)
    }

    fn unit() -> Self {
        DeltaMatroid::unit()
    }

    fn canon_key(&self) -> Result<DmCanonKey> {
        Ok(self.canonical_key())
    }
}

/// A formal rational linear combination of isomorphism classes.
#[derive(Debug, Clone)]
pub struct HopfSum<A: HopfAtom> {
    terms: BTreeMap<A::Key, (A, BigRational)>,
}

pub type GraphSum = HopfSum<Graph>;
pub type DmSum = HopfSum<DeltaMatroid>;

impl<A: HopfAtom> PartialEq for HopfSum<A> {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(other.terms.iter())
                .all(|((k1, (_, c1)), (k2, (_, c2)))| k1 == k2 && c1 == c2)
    }
}

impl<A: HopfAtom> Eq for HopfSum<A> {}

impl<A: HopfAtom> Default for HopfSum<A> {
    fn default() -> Self {
        HopfSum {
            terms: BTreeMap::new(),
        }
    }
}

impl<A: HopfAtom> HopfSum<A> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(atom: A) -> Result<Self> {
        let mut sum = Self::zero();
        sum.add_atom(atom, BigRational::one())?;
        Ok(sum)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&A::Key, &A, &BigRational)> {
        self.terms.iter().map(|(k, (a, c))| (k, a, c))
    }

    pub fn coefficient(&self, key: &A::Key) -> BigRational {
        self.terms
            .get(key)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_atom(&mut self, atom: A, coeff: BigRational) -> Result<()> {
        let key = atom.canon_key()?;
        self.add_keyed(key, atom, coeff);
        Ok(())
    }

    pub fn add_keyed(&mut self, key: A::Key, atom: A, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert((atom, coeff));
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().1 += coeff;
                if e.get().1.is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, (a, c)) in &other.terms {
            out.add_keyed(k.clone(), a.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HopfSum {
            terms: self
                .terms
                .iter()
                .map(|(k, (a, x))| (k.clone(), (a.clone(), x * c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    /// Bilinear product: every pair of terms multiplies to the product atom.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (_, (a, ca)) in &self.terms {
            for (_, (b, cb)) in &other.terms {
                out.add_atom(a.product(b), ca * cb)?;
            }
        }
        Ok(out)
    }
}

/// Precomputed restriction atoms and keys for every subset mask of one atom.
struct SubsetTable<A: HopfAtom> {
    atoms: Vec<A>,
    keys: Vec<A::Key>,
}

impl<A: HopfAtom> SubsetTable<A> {
    fn build(atom: &A) -> Result<Self> {
        let n = atom.size();
        let total = 1usize << n;
        let mut atoms = Vec::with_capacity(total);
        let mut keys = Vec::with_capacity(total);
        for mask in 0..total {
            let a = atom.restrict_to(mask as u64);
            keys.push(a.canon_key()?);
            atoms.push(a);
        }
        Ok(SubsetTable { atoms, keys })
    }
}

/// Products of canonical representatives, memoized by the sorted multiset of
/// block keys. Building the product from representatives keeps the key honest:
/// isomorphic block multisets give the identical assembled atom.
struct ProductCache<A: HopfAtom> {
    cache: HashMap<Vec<A::Key>, (A, A::Key)>,
}

impl<A: HopfAtom> ProductCache<A> {
    fn new() -> Self {
        ProductCache {
            cache: HashMap::new(),
        }
    }

    fn product(
        &mut self,
        table: &SubsetTable<A>,
        block_masks: &[u64],
    ) -> Result<(A, A::Key)> {
        let mut key_multiset: Vec<A::Key> = block_masks
            .iter()
            .map(|&m| table.keys[m as usize].clone())
            .collect();
        key_multiset.sort();
        if let Some(hit) = self.cache.get(&key_multiset) {
            return Ok(hit.clone());
        }
        let mut atom = A::unit();
        for &m in block_masks {
            atom = atom.product(&table.atoms[m as usize]);
        }
        let key = atom.canon_key()?;
        self.cache
            .insert(key_multiset, (atom.clone(), key.clone()));
        Ok((atom, key))
    }
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded {
            what,
            value: n,
            cap,
        });
    }
    Ok(())
}

/// Projection to the subspace of primitives along decomposable elements.
pub fn primitive_projection<A: HopfAtom>(atom: &A) -> Result<HopfSum<A>> {
    let n = atom.size();
    check_cap("grading for the primitive projection", n, PROJECTION_CAP)?;
    if n == 0 {
        // The projection vanishes in grading 0.
        return Ok(HopfSum::zero());
    }
    let table = SubsetTable::build(atom)?;
    let mut products = ProductCache::new();
    let mut out = HopfSum::zero();
    let mut factorials: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=n.max(1) {
        let next = &factorials[k - 1] * BigInt::from(k);
        factorials.push(next);
    }
    let mut block_masks: Vec<u64> = Vec::with_capacity(n);
    let mut first_error: Option<Error> = None;
    for_each_set_partition(n, |assignment| {
        if first_error.is_some() {
            return;
        }
        let blocks = block_count(assignment);
        block_masks.clear();
        block_masks.resize(blocks, 0);
        for (i, &b) in assignment.iter().enumerate() {
            block_masks[b as usize] |= 1 << i;
        }
        match products.product(&table, &block_masks) {
            Ok((prod_atom, key)) => {
                let mut coeff = BigRational::from_integer(factorials[blocks - 1].clone());
                if blocks % 2 == 0 {
                    coeff = -coeff;
                }
                out.add_keyed(key, prod_atom, coeff);
            }
            Err(e) => first_error = Some(e),
        }
    });
    if let Some(e) = first_error {
        return Err(e);
    }
    Ok(out)
}

/// The right-hand side of the reconstruction identity:
/// pi(G) + sum over partitions with more than one block of prod_i pi(G(i)).
/// Must equal the single-term sum {G: 1}.
pub fn reconstruct<A: HopfAtom>(atom: &A) -> Result<HopfSum<A>> {
    let n = atom.size();
    check_cap("grading for reconstruction", n, PROJECTION_CAP)?;
    let table = SubsetTable::build(atom)?;
    // pi of every restriction, by mask.
    let mut projections: Vec<Option<HopfSum<A>>> = vec![None; 1 << n];
    for mask in 0..(1u64 << n) {
        projections[mask as usize] = Some(primitive_projection(&table.atoms[mask as usize])?);
    }
    let mut out = HopfSum::zero();
    let mut block_masks: Vec<u64> = Vec::with_capacity(n);
    let mut first_error: Option<Error> = None;
    for_each_set_partition(n, |assignment| {
        if first_error.is_some() {
            return;
        }
        let blocks = block_count(assignment);
        block_masks.clear();
        block_masks.resize(blocks, 0);
        for (i, &b) in assignment.iter().enumerate() {
            block_masks[b as usize] |= 1 << i;
        }
        let mut term = match HopfSum::single(A::unit()) {
            Ok(t) => t,
            Err(e) => {
                first_error = Some(e);
                return;
            }
        };
        for &m in &block_masks {
            match term.mul(projections[m as usize].as_ref().expect("filled")) {
                Ok(t) => term = t,
                Err(e) => {
                    first_error = Some(e);
                    return;
                }
            }
        }
        out = out.add(&term);
    });
    if let Some(e) = first_error {
        return Err(e);
    }
    Ok(out)
}

/// A formal sum of tensor pairs; the coproduct lives here.
#[derive(Debug, Clone)]
pub struct TensorSum<A: HopfAtom> {
    terms: BTreeMap<(A::Key, A::Key), (A, A, BigRational)>,
}

impl<A: HopfAtom> Default for TensorSum<A> {
    fn default() -> Self {
        TensorSum {
            terms: BTreeMap::new(),
        }
    }
}

impl<A: HopfAtom> PartialEq for TensorSum<A> {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(other.terms.iter())
                .all(|((k1, (_, _, c1)), (k2, (_, _, c2)))| k1 == k2 && c1 == c2)
    }
}

impl<A: HopfAtom> Eq for TensorSum<A> {}

impl<A: HopfAtom> TensorSum<A> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(A::Key, A::Key), &A, &A, &BigRational)> {
        self.terms.iter().map(|(k, (a, b, c))| (k, a, b, c))
    }

    pub fn coefficient(&self, key: &(A::Key, A::Key)) -> BigRational {
        self.terms
            .get(key)
            .map(|(_, _, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_keyed(&mut self, key: (A::Key, A::Key), left: A, right: A, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert((left, right, coeff));
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().2 += coeff;
                if e.get().2.is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, (a, b, c)) in &other.terms {
            out.add_keyed(k.clone(), a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TensorSum {
            terms: self
                .terms
                .iter()
                .map(|(k, (a, b, x))| (k.clone(), (a.clone(), b.clone(), x * c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    /// Is the sum symmetric under swapping the tensor factors?
    pub fn is_cocommutative(&self) -> bool {
        self.terms.iter().all(|((k1, k2), (_, _, c))| {
            self.coefficient(&(k2.clone(), k1.clone())) == *c
        })
    }

    /// Componentwise product (a x b)(c x d) = ac x bd, extended bilinearly.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (_, (a1, b1, c1)) in &self.terms {
            for (_, (a2, b2, c2)) in &other.terms {
                let left = a1.product(a2);
                let right = b1.product(b2);
                let key = (left.canon_key()?, right.canon_key()?);
                out.add_keyed(key, left, right, c1 * c2);
            }
        }
        Ok(out)
    }
}

/// The subset coproduct of a single atom.
pub fn coproduct<A: HopfAtom>(atom: &A) -> Result<TensorSum<A>> {
    let n = atom.size();
    check_cap("grading for the coproduct", n, COPRODUCT_CAP)?;
    let full: u64 = (1u64 << n) - 1;
    let mut out = TensorSum::zero();
    // Cache restriction keys per mask; each mask appears twice (once per side).
    let mut cache: HashMap<u64, (A, A::Key)> = HashMap::new();
    let mut lookup = |mask: u64| -> Result<(A, A::Key)> {
        if let Some(hit) = cache.get(&mask) {
            return Ok(hit.clone());
        }
        let a = atom.restrict_to(mask);
        let k = a.canon_key()?;
        cache.insert(mask, (a.clone(), k.clone()));
        Ok((a, k))
    };
    for mask in 0..=full {
        let (left, lk) = lookup(mask)?;
        let (right, rk) = lookup(full & !mask)?;
        out.add_keyed((lk, rk), left, right, BigRational::one());
    }
    Ok(out)
}

/// Coproduct extended linearly to sums.
pub fn coproduct_sum<A: HopfAtom>(sum: &HopfSum<A>) -> Result<TensorSum<A>> {
    let mut out = TensorSum::zero();
    for (_, atom, coeff) in sum.terms() {
        out = out.add(&coproduct(atom)?.scale(coeff));
    }
    Ok(out)
}

/// mu(p) = 1 (x) p + p (x) 1.
pub fn is_primitive<A: HopfAtom>(sum: &HopfSum<A>) -> Result<bool> {
    let mu = coproduct_sum(sum)?;
    let unit = A::unit();
    let unit_key = unit.canon_key()?;
    let mut expected = TensorSum::zero();
    for (k, a, c) in sum.terms() {
        expected.add_keyed((unit_key.clone(), k.clone()), unit.clone(), a.clone(), c.clone());
        expected.add_keyed((k.clone(), unit_key.clone()), a.clone(), unit.clone(), c.clone());
    }
    Ok(mu == expected)
}

/// Linear evaluation of a polynomial-valued invariant over a sum. The rational
/// bookkeeping is exact; a non-integral final coefficient is an error.
pub fn evaluate<A: HopfAtom>(
    mut invariant: impl FnMut(&A) -> Result<Polynomial>,
    sum: &HopfSum<A>,
) -> Result<Polynomial> {
    let mut acc: BTreeMap<crate::polynomial::Monomial, BigRational> = BTreeMap::new();
    for (_, atom, coeff) in sum.terms() {
        let p = invariant(atom)?;
        for (m, c) in p.terms() {
            let entry = acc.entry(*m).or_insert_with(BigRational::zero);
            *entry += coeff * BigRational::from_integer(c.clone());
        }
    }
    let mut out = Polynomial::zero();
    for (m, c) in acc {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::NonIntegral(c.to_string()));
        }
        out.add_term(m, c.to_integer());
    }
    Ok(out)
}

/// GraphSum wire format: a JSON list of [edge-list text, "p/q"] pairs.
pub fn graph_sum_to_json(sum: &GraphSum) -> serde_json::Value {
    let items: Vec<serde_json::Value> = sum
        .terms()
        .map(|(_, g, c)| {
            serde_json::json!([g.to_edge_list(), format_rational(c)])
        })
        .collect();
    serde_json::Value::Array(items)
}

pub fn format_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn q_invariant(g: &Graph) -> Result<Polynomial> {
    g.skew_char_poly()
}

/// Convenience: Q evaluated on the projection of a graph to primitives.
pub fn q_on_primitive_projection(g: &Graph) -> Result<Polynomial> {
    evaluate(q_invariant, &primitive_projection(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn key(g: &Graph) -> CanonicalForm {
        g.canonical_form().unwrap()
    }

    #[test]
    fn product_of_sums() {
        let k1 = Graph::complete(1);
        let x = HopfSum::single(k1.clone()).unwrap();
        let product = x.mul(&x).unwrap();
        assert_eq!(product.num_terms(), 1);
        let two_isolated = Graph::empty(2).unwrap();
        assert_eq!(product.coefficient(&key(&two_isolated)), rat(1));
        // Unit acts as identity.
        let unit = HopfSum::single(Graph::unit()).unwrap();
        assert_eq!(unit.mul(&x).unwrap(), x);
    }

    #[test]
    fn coproduct_of_k2() {
        let mu = coproduct(&Graph::complete(2)).unwrap();
        let empty = Graph::unit();
        let k1 = Graph::complete(1);
        let k2 = Graph::complete(2);
        assert_eq!(mu.coefficient(&(key(&empty), key(&k2))), rat(1));
        assert_eq!(mu.coefficient(&(key(&k1), key(&k1))), rat(2));
        assert_eq!(mu.coefficient(&(key(&k2), key(&empty))), rat(1));
        assert_eq!(mu.num_terms(), 3);
        assert!(mu.is_cocommutative());
    }

    #[test]
    fn coproduct_is_multiplicative_on_small_sums() {
        let a = HopfSum::single(Graph::complete(2)).unwrap();
        let b = HopfSum::single(Graph::path(3)).unwrap();
        let lhs = coproduct_sum(&a.mul(&b).unwrap()).unwrap();
        let rhs = coproduct_sum(&a)
            .unwrap()
            .mul(&coproduct_sum(&b).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn projection_of_k1_and_k2() {
        let k1 = Graph::complete(1);
        let pi = primitive_projection(&k1).unwrap();
        assert_eq!(pi, HopfSum::single(k1.clone()).unwrap());

        let k2 = Graph::complete(2);
        let pi = primitive_projection(&k2).unwrap();
        assert_eq!(pi.coefficient(&key(&k2)), rat(1));
        assert_eq!(pi.coefficient(&key(&Graph::empty(2).unwrap())), rat(-1));
        assert_eq!(pi.num_terms(), 2);
        assert!(is_primitive(&pi).unwrap());
    }

    #[test]
    fn projection_of_p3() {
        // pi(P3) = P3 - 2 (K2 u K1) - (E2 u K1) + 2 (K1 u K1 u K1).
        let p3 = Graph::path(3);
        let pi = primitive_projection(&p3).unwrap();
        let k2k1 = Graph::complete(2).disjoint_union(&Graph::complete(1));
        let e2k1 = Graph::empty(3).unwrap();
        assert_eq!(pi.coefficient(&key(&p3)), rat(1));
        assert_eq!(pi.coefficient(&key(&k2k1)), rat(-2));
        // E2 u K1 and K1^3 share the canonical class of the empty 3-vertex graph:
        // -1 + 2 = 1.
        assert_eq!(pi.coefficient(&key(&e2k1)), rat(1));
        assert_eq!(pi.num_terms(), 3);
        assert!(is_primitive(&pi).unwrap());
    }

    #[test]
    fn projection_kills_products() {
        let product = Graph::complete(2).disjoint_union(&Graph::complete(1));
        assert!(primitive_projection(&product).unwrap().is_zero());
        let bigger = Graph::complete(2).disjoint_union(&Graph::path(2));
        assert!(primitive_projection(&bigger).unwrap().is_zero());
    }

    #[test]
    fn evaluate_q_on_projections() {
        assert_eq!(
            q_on_primitive_projection(&Graph::complete(2)).unwrap(),
            poly("1")
        );
        assert_eq!(
            q_on_primitive_projection(&Graph::path(3)).unwrap(),
            Polynomial::zero()
        );
        // Single graphs evaluate to their own polynomial.
        let g = Graph::cycle(5);
        assert_eq!(
            evaluate(|g: &Graph| g.skew_char_poly(), &HopfSum::single(g.clone()).unwrap())
                .unwrap(),
            g.skew_char_poly().unwrap()
        );
    }

    #[test]
    fn constancy_on_small_graphs() {
        for g in [
            Graph::complete(4),
            Graph::cycle(5),
            Graph::path(4),
            Graph::complete_bipartite(2, 2),
        ] {
            let value = q_on_primitive_projection(&g).unwrap();
            assert!(value.is_constant(), "graph K/C/P value {value}");
        }
        // Frozen constants for the two 6-vertex non-intersection graphs.
        let wheel = Graph::with_edges(
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
        .unwrap();
        assert_eq!(
            q_on_primitive_projection(&wheel).unwrap(),
            Polynomial::constant(6)
        );
    }

    #[test]
    fn reconstruction_identity() {
        for g in [
            Graph::complete(1),
            Graph::complete(2),
            Graph::path(3),
            Graph::cycle(4),
            Graph::complete(4),
        ] {
            let rhs = reconstruct(&g).unwrap();
            assert_eq!(rhs, HopfSum::single(g).unwrap());
        }
    }

    #[test]
    fn dm_hopf_analogues() {
        let theta2 = crate::ribbon::RibbonGraph::theta_planar(2)
            .delta_matroid()
            .unwrap();
        // pi((E;{{1},{2}})) = D - ({e};{{e}})^2; Q on it is the constant -1.
        let pi = primitive_projection(&theta2).unwrap();
        assert_eq!(pi.num_terms(), 2);
        assert!(is_primitive(&pi).unwrap());
        let value = evaluate(|d: &DeltaMatroid| d.skew_poly(), &pi).unwrap();
        assert_eq!(value, Polynomial::constant(-1));

        // Reconstruction for delta-matroids.
        assert_eq!(
            reconstruct(&theta2).unwrap(),
            HopfSum::single(theta2.clone()).unwrap()
        );

        // Constancy on a few larger even binary delta-matroids.
        for n in 3..=4 {
            let dm = crate::ribbon::RibbonGraph::theta_planar(n)
                .delta_matroid()
                .unwrap();
            let value =
                evaluate(|d: &DeltaMatroid| d.skew_poly(), &primitive_projection(&dm).unwrap())
                    .unwrap();
            assert!(
                value.is_constant(),
                "theta({n}) projection value {value} must be constant"
            );
        }
    }

    #[test]
    fn graph_sum_serialization() {
        let pi = primitive_projection(&Graph::complete(2)).unwrap();
        let json = graph_sum_to_json(&pi);
        let arr = json.as_array().unwrap();
        assert_eq!(arr.len(), 2);
        for item in arr {
            let pair = item.as_array().unwrap();
            assert!(pair[0].as_str().unwrap().starts_with("n=2"));
            let c = pair[1].as_str().unwrap();
            assert!(c == "1" || c == "-1");
        }
        let half = rat(1) / rat(2);
        assert_eq!(format_rational(&half), "1/2");
        assert!(half.to_f64().is_some());
    }
}
