//! Quotient rings F2[G]/I and finite F2-algebras given by structure
//! constants, with unit enumeration.
//!
//! Elements of a [`F2AlgebraTable`] of dimension `d` are `u64` bit masks
//! over its basis. A quotient's basis is the set of free (non-pivot)
//! columns of the ideal's echelon basis, so the coordinates of a canonical
//! coset representative are just its bits at those columns.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2la::{word_rank, BitVector};
use crate::findex::{IndexedGroup, DEFAULT_TABLE_BOUND};
use crate::galg::AlgebraElement;
use crate::ideal::Ideal;
use crate::perm::Permutation;

/// Largest algebra dimension whose elements are enumerated.
pub const DEFAULT_ENUMERATION_DIM: usize = 24;

/// A unital F2-algebra with basis `b_0 .. b_{d-1}`; `structure[i * d + j]`
/// is `b_i * b_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct F2AlgebraTable {
    dim: usize,
    unity: u64,
    structure: Vec<u64>,
}

impl F2AlgebraTable {
    pub fn new(dim: usize, unity: u64, structure: Vec<u64>) -> Result<Self> {
        if dim > DEFAULT_ENUMERATION_DIM {
            return Err(Error::DimensionBound { dim, bound: DEFAULT_ENUMERATION_DIM });
        }
        if structure.len() != dim * dim {
            return Err(Error::InvalidTable(format!("expected {} products, got {}", dim * dim, structure.len())));
        }
        let mask = Self::mask(dim);
        if unity & !mask != 0 || structure.iter().any(|&v| v & !mask != 0) {
            return Err(Error::InvalidTable("coordinates beyond the dimension".into()));
        }
        let table = F2AlgebraTable { dim, unity, structure };
        if (0..dim).any(|i| table.mul(unity, 1 << i) != 1 << i || table.mul(1 << i, unity) != 1 << i) {
            return Err(Error::InvalidTable("unity is not a two-sided identity".into()));
        }
        Ok(table)
    }

    fn mask(dim: usize) -> u64 {
        if dim == 64 {
            u64::MAX
        } else {
            (1u64 << dim) - 1
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unity(&self) -> u64 {
        self.unity
    }

    pub fn size(&self) -> u64 {
        1u64 << self.dim
    }

    pub fn structure(&self) -> &[u64] {
        &self.structure
    }

    pub fn basis_product(&self, i: usize, j: usize) -> u64 {
        self.structure[i * self.dim + j]
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let mut out = 0;
        let mut x = a;
        while x != 0 {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            let row = &self.structure[i * self.dim..(i + 1) * self.dim];
            let mut y = b;
            while y != 0 {
                let j = y.trailing_zeros() as usize;
                y &= y - 1;
                out ^= row[j];
            }
        }
        out
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = self.unity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Columns of the matrix of `x -> a * x`.
    pub fn left_matrix(&self, a: u64) -> Vec<u64> {
        (0..self.dim).map(|j| self.mul(a, 1 << j)).collect()
    }

    /// Columns of the matrix of `x -> x * a`.
    pub fn right_matrix(&self, a: u64) -> Vec<u64> {
        (0..self.dim).map(|j| self.mul(1 << j, a)).collect()
    }

    /// Left multiplication by `a` is invertible; in a finite-dimensional
    /// algebra this already makes `a` a two-sided unit.
    pub fn is_unit(&self, a: u64) -> bool {
        word_rank(&self.left_matrix(a)) == self.dim
    }

    pub fn is_right_unit(&self, a: u64) -> bool {
        word_rank(&self.right_matrix(a)) == self.dim
    }

    pub fn is_associative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d).all(|k| {
                    let (a, b, c) = (1u64 << i, 1u64 << j, 1u64 << k);
                    self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
                })
            })
        })
    }

    /// Same elements, reversed multiplication.
    pub fn opposite(&self) -> F2AlgebraTable {
        let d = self.dim;
        let structure = (0..d * d).map(|k| self.structure[(k % d) * d + k / d]).collect();
        F2AlgebraTable { dim: d, unity: self.unity, structure }
    }

    /// All units in increasing order.
    pub fn units(&self) -> Vec<u64> {
        let all = 0..self.size();
        #[cfg(feature = "parallel")]
        {
            all.into_par_iter().filter(|&a| self.is_unit(a)).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            all.filter(|&a| self.is_unit(a)).collect()
        }
    }

    pub fn unit_group(&self) -> Result<UnitGroup> {
        let units = self.units();
        let materialize = units.len() <= DEFAULT_TABLE_BOUND;
        let table = Arc::new(self.clone());
        let group = IndexedGroup::from_elements(units, move |a: &u64, b: &u64| table.mul(*a, *b), materialize)?;
        Ok(UnitGroup { ring_size: self.size(), group })
    }
}

impl fmt::Debug for F2AlgebraTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("F2AlgebraTable").field("dim", &self.dim).field("unity", &self.unity).finish()
    }
}

/// The unit group of a finite algebra, labelled by coordinate masks.
#[derive(Clone, Debug)]
pub struct UnitGroup {
    pub ring_size: u64,
    pub group: IndexedGroup<u64>,
}

impl UnitGroup {
    pub fn count(&self) -> usize {
        self.group.size()
    }

    pub fn spectrum(&self) -> BTreeMap<u64, usize> {
        self.group.order_spectrum()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct UnitGroupReport {
    pub ring_size: u64,
    pub unit_count: usize,
    pub identity_criterion: bool,
    pub spectrum: BTreeMap<u64, usize>,
    pub ideal_dim: usize,
    pub generators: Vec<String>,
    #[serde(skip)]
    pub units: Option<UnitGroup>,
}

/// F2[G]/I with `I` a closed two-sided ideal.
#[derive(Clone)]
pub struct QuotientRing {
    ideal: Ideal,
    free_cols: Vec<usize>,
    // coordinates of the coset g + I for every group element g
    images: Vec<u64>,
    table: F2AlgebraTable,
}

impl QuotientRing {
    pub fn build(ideal: &Ideal) -> Result<QuotientRing> {
        if !ideal.is_closed() {
            return Err(Error::Precondition("ideal is not closed".into()));
        }
        let d = ideal.codim();
        if d > DEFAULT_ENUMERATION_DIM {
            return Err(Error::DimensionBound { dim: d, bound: DEFAULT_ENUMERATION_DIM });
        }
        let group = ideal.group();
        let free_cols = ideal.basis().free_columns();
        let coords = |v: &BitVector| -> u64 {
            free_cols.iter().enumerate().filter(|(_, &c)| v.get(c)).fold(0, |acc, (k, _)| acc | 1 << k)
        };
        let images: Vec<u64> = (0..group.size()).map(|g| coords(&ideal.basis().reduce_unit(g))).collect();
        let structure = free_cols
            .iter()
            .flat_map(|&a| free_cols.iter().map(move |&b| (a, b)))
            .map(|(a, b)| images[group.mul(a, b)])
            .collect();
        let table = F2AlgebraTable::new(d, images[group.identity()], structure)?;
        Ok(QuotientRing { ideal: ideal.clone(), free_cols, images, table })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn dim(&self) -> usize {
        self.free_cols.len()
    }

    pub fn size(&self) -> u64 {
        self.table.size()
    }

    pub fn free_columns(&self) -> &[usize] {
        &self.free_cols
    }

    /// Coordinates of the coset `g + I`.
    pub fn image_of_index(&self, g: usize) -> u64 {
        self.images[g]
    }

    pub fn image_of(&self, p: &Permutation) -> Result<u64> {
        Ok(self.images[self.ideal.group().index_of_perm(p)?])
    }

    /// Coordinates of `x + I`.
    pub fn canonicalize(&self, x: &AlgebraElement) -> Result<u64> {
        if !Arc::ptr_eq(x.group(), self.ideal.group()) {
            return Err(Error::GroupMismatch);
        }
        Ok(x.support().fold(0, |acc, g| acc ^ self.images[g]))
    }

    /// The canonical representative with the given coordinates.
    pub fn lift(&self, coords: u64) -> AlgebraElement {
        let cols = self.free_cols.iter().enumerate().filter(|(k, _)| coords >> k & 1 == 1).map(|(_, &c)| c);
        AlgebraElement::from_subset(self.ideal.group(), cols).expect("free columns are in range")
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.table.mul(a, b)
    }

    pub fn to_table(&self) -> F2AlgebraTable {
        self.table.clone()
    }

    /// The cosets `g + I` are pairwise distinct.
    pub fn cosets_distinct(&self) -> bool {
        let mut seen = self.images.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn unit_report(&self) -> Result<UnitGroupReport> {
        let units = self.table.unit_group()?;
        let unit_count = units.count();
        let identity_criterion = self.cosets_distinct() && unit_count == self.ideal.group().size();
        Ok(UnitGroupReport {
            ring_size: self.size(),
            unit_count,
            identity_criterion,
            spectrum: units.spectrum(),
            ideal_dim: self.ideal.dim(),
            generators: self.ideal.generators().iter().map(ToString::to_string).collect(),
            units: Some(units),
        })
    }

    /// `g -> g + I` is an isomorphism from G onto the unit group: the cosets
    /// are distinct and there are no other units.
    pub fn identity_criterion(&self) -> Result<bool> {
        Ok(self.unit_report()?.identity_criterion)
    }

    /// Largest unit count of `R/(x)` over nonzero `x` in `R`, with the first
    /// `x` (in coordinate order) attaining it.
    pub fn max_units_over_principal_quotients(&self) -> Result<PrincipalQuotientMax> {
        let mut best: Option<(usize, u64)> = None;
        let mut counts = BTreeMap::new();
        for x in 1..self.size() {
            let sub = QuotientRing::build(&self.ideal.extend(&[self.lift(x)])?)?;
            let units = sub.table.units().len();
            *counts.entry(units).or_insert(0usize) += 1;
            if best.is_none_or(|(b, _)| units > b) {
                best = Some((units, x));
            }
        }
        Ok(match best {
            Some((max_units, x)) => PrincipalQuotientMax {
                max_units,
                witness: Some(self.lift(x).to_string()),
                unit_count_histogram: counts,
            },
            None => PrincipalQuotientMax { max_units: 0, witness: None, unit_count_histogram: counts },
        })
    }
}

impl fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuotientRing").field("ideal", &self.ideal).field("dim", &self.dim()).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalQuotientMax {
    pub max_units: usize,
    /// Representative of an `x` attaining the maximum.
    pub witness: Option<String>,
    /// How many nonzero `x` give each unit count.
    pub unit_count_histogram: BTreeMap<usize, usize>,
}

pub fn build(ideal: &Ideal) -> Result<QuotientRing> {
    QuotientRing::build(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findex::{index_group, PermGroup};
    use crate::perm::{alternating_generators, alternating_group, symmetric_generators, symmetric_group};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn sym(n: usize) -> Arc<PermGroup> {
        Arc::new(index_group(&symmetric_group(n).unwrap(), false).unwrap())
    }

    fn quotient(g: &Arc<PermGroup>, gens: &[&str]) -> QuotientRing {
        let gens: Vec<AlgebraElement> = gens.iter().map(|s| AlgebraElement::parse(g, s).unwrap()).collect();
        let n = g.degree();
        let group_gens =
            if g.size() == (1..=n).product::<usize>() { symmetric_generators(n) } else { alternating_generators(n) };
        QuotientRing::build(&Ideal::close(g, &group_gens, &gens).unwrap()).unwrap()
    }

    const H1: &str = "e + (1,2) + (1,3) + (2,3) + (1,2,3) + (1,3,2)";
    const H2: &str = "e + (1,2,3) + (1,3,2)";
    const J1: [&str; 2] = ["e + (2,4) + (1,2)(3,4) + (1,2,3,4)", H1];

    /// Units found by searching for a two-sided inverse among all elements.
    fn brute_force_units(t: &F2AlgebraTable) -> Vec<u64> {
        (0..t.size()).filter(|&a| (0..t.size()).any(|b| t.mul(a, b) == t.unity() && t.mul(b, a) == t.unity())).collect()
    }

    #[test]
    fn s3_quotients() {
        let g = sym(3);
        let r1 = quotient(&g, &[H1]);
        assert_eq!(r1.size(), 32);
        let rep = r1.unit_report().unwrap();
        assert_eq!(rep.unit_count, 6);
        assert!(rep.identity_criterion);
        let r2 = quotient(&g, &[H2]);
        assert_eq!(r2.size(), 16);
        assert!(r2.identity_criterion().unwrap());
        assert_eq!(r2.to_table().dim(), 4);
    }

    #[test]
    fn zero_ideal_gives_group_algebra() {
        let g = sym(3);
        let r = quotient(&g, &[]);
        assert_eq!(r.size(), 64);
        let t = r.to_table();
        // basis b_i is the group element with index i
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(t.basis_product(a, b), 1 << g.mul(a, b));
            }
        }
    }

    #[test]
    fn unit_ideal_collapses() {
        let g = sym(3);
        let r = quotient(&g, &["e"]);
        assert_eq!(r.size(), 1);
        let rep = r.unit_report().unwrap();
        assert_eq!(rep.unit_count, 1);
        assert!(!rep.identity_criterion);

        let trivial = Arc::new(index_group(&symmetric_group(1).unwrap(), false).unwrap());
        let r = quotient(&trivial, &["e"]);
        assert!(r.identity_criterion().unwrap());
    }

    #[test]
    fn r1_has_24_units() {
        let g = sym(4);
        let r1 = quotient(&g, &J1);
        assert_eq!(r1.size(), 128);
        let rep = r1.unit_report().unwrap();
        assert_eq!(rep.unit_count, 24);
        assert!(rep.identity_criterion);
        assert_eq!(rep.ideal_dim, 17);
        assert!(r1.to_table().is_associative());
        // the criterion forces the S4 spectrum
        assert_eq!(rep.spectrum, BTreeMap::from([(1, 1), (2, 9), (3, 8), (4, 6)]));
    }

    #[test]
    fn a4_quotient() {
        let g = Arc::new(index_group(&alternating_group(4).unwrap(), false).unwrap());
        let r = quotient(&g, &["e + (1,2)(3,4) + (1,3)(2,4) + (1,4)(2,3)", "e + (1,3,2) + (1,2)(3,4) + (1,4,3)"]);
        assert_eq!(r.size(), 32);
        let rep = r.unit_report().unwrap();
        assert_eq!(rep.unit_count, 12);
        assert!(rep.identity_criterion);
    }

    #[test]
    fn unit_tests_agree_with_bruteforce() {
        let g3 = sym(3);
        let g4 = sym(4);
        let rings = [quotient(&g3, &[H1]), quotient(&g3, &[H2]), quotient(&g3, &[]), quotient(&g4, &J1)];
        for r in &rings {
            let t = r.to_table();
            let units = t.units();
            assert_eq!(units, brute_force_units(&t));
            for a in 0..t.size() {
                assert_eq!(t.is_unit(a), t.is_right_unit(a));
            }
        }
    }

    #[test]
    fn canonicalize_is_a_ring_homomorphism() {
        let g = sym(4);
        let r = quotient(&g, &J1);
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..1000 {
            let x = AlgebraElement::from_subset(&g, (0..24).filter(|_| rng.gen_bool(0.5))).unwrap();
            let y = AlgebraElement::from_subset(&g, (0..24).filter(|_| rng.gen_bool(0.5))).unwrap();
            let lhs = r.canonicalize(&(&x * &y)).unwrap();
            let rhs = r.mul(r.canonicalize(&x).unwrap(), r.canonicalize(&y).unwrap());
            assert_eq!(lhs, rhs);
            assert_eq!(r.canonicalize(&r.lift(lhs)).unwrap(), lhs);
        }
    }

    #[test]
    fn principal_quotients() {
        let g = sym(4);
        let r1 = quotient(&g, &J1);
        let m = r1.max_units_over_principal_quotients().unwrap();
        assert_eq!(m.max_units, 6);
        assert_eq!(m.unit_count_histogram.values().sum::<usize>(), 127);

        let trivial = Arc::new(index_group(&symmetric_group(1).unwrap(), false).unwrap());
        let f2 = quotient(&trivial, &[]);
        assert_eq!(f2.size(), 2);
        assert_eq!(f2.max_units_over_principal_quotients().unwrap().max_units, 1);

        let g3 = sym(3);
        let m2 = quotient(&g3, &[H2]);
        let res = m2.max_units_over_principal_quotients().unwrap();
        assert_eq!(res.max_units, 1);
        assert_eq!(res.unit_count_histogram, BTreeMap::from([(1, 15)]));
    }

    #[test]
    fn table_validation() {
        assert!(F2AlgebraTable::new(2, 0b01, vec![0b01, 0b10, 0b10]).is_err());
        assert!(F2AlgebraTable::new(1, 0b0, vec![0b0]).is_err());
        assert!(F2AlgebraTable::new(1, 0b1, vec![0b11]).is_err());
        let f2 = F2AlgebraTable::new(1, 1, vec![1]).unwrap();
        assert_eq!(f2.units(), vec![1]);
        let zero = F2AlgebraTable::new(0, 0, vec![]).unwrap();
        assert_eq!(zero.units(), vec![0]);
    }

    #[test]
    fn opposite_reverses_products() {
        let g = sym(3);
        let t = quotient(&g, &[]).to_table();
        let op = t.opposite();
        for a in 0..64 {
            for b in 0..64 {
                assert_eq!(op.mul(a, b), t.mul(b, a));
            }
        }
    }
}
