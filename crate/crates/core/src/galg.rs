//! Elements of the group algebra F2[G] for a permutation group G.
//!
//! An element is the indicator vector of its support: coordinate `g` is the
//! coefficient of the group element with canonical index `g`. Text form
//! lists the support in canonical order, e.g. `e + (2,4) + (1,2)(3,4)`,
//! with `0` for the zero element.

use std::fmt;
use std::ops::{Add, Mul};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::f2la::{BitMatrix, BitVector};
use crate::findex::{PermGroup, DEFAULT_TABLE_BOUND};
use crate::perm::{parse_cycles, Permutation};

/// Largest group whose left-regular matrix [`AlgebraElement::inverse`] builds.
pub const DEFAULT_ALGEBRA_BOUND: usize = DEFAULT_TABLE_BOUND;

#[derive(Clone)]
pub struct AlgebraElement {
    group: Arc<PermGroup>,
    coeffs: BitVector,
}

impl AlgebraElement {
    pub fn zero(group: &Arc<PermGroup>) -> Self {
        AlgebraElement { group: Arc::clone(group), coeffs: BitVector::zeros(group.size()) }
    }

    pub fn one(group: &Arc<PermGroup>) -> Self {
        Self::basis(group, group.identity())
    }

    /// The group element with canonical index `g`.
    pub fn basis(group: &Arc<PermGroup>, g: usize) -> Self {
        AlgebraElement { group: Arc::clone(group), coeffs: BitVector::unit(group.size(), g) }
    }

    pub fn from_coeffs(group: &Arc<PermGroup>, coeffs: BitVector) -> Result<Self> {
        if coeffs.len() != group.size() {
            return Err(Error::LengthMismatch(group.size(), coeffs.len()));
        }
        Ok(AlgebraElement { group: Arc::clone(group), coeffs })
    }

    /// Sum of the group elements with the given indices; repeated indices cancel.
    pub fn from_subset(group: &Arc<PermGroup>, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let coeffs = BitVector::from_indices(group.size(), indices)?;
        Ok(AlgebraElement { group: Arc::clone(group), coeffs })
    }

    /// Sum of the given permutations; repeated terms cancel.
    pub fn from_perms<'a>(group: &Arc<PermGroup>, perms: impl IntoIterator<Item = &'a Permutation>) -> Result<Self> {
        let mut out = Self::zero(group);
        for p in perms {
            out.coeffs.flip(group.index_of_perm(p)?);
        }
        Ok(out)
    }

    pub fn parse(group: &Arc<PermGroup>, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed == "0" {
            return Ok(Self::zero(group));
        }
        let mut terms = Vec::new();
        for term in trimmed.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Malformed(text.to_string()));
            }
            terms.push(parse_cycles(term, group.degree())?);
        }
        Self::from_perms(group, &terms)
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn coeffs(&self) -> &BitVector {
        &self.coeffs
    }

    /// Canonical indices of the support.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.ones()
    }

    pub fn terms(&self) -> Vec<Permutation> {
        self.support().map(|g| *self.group.element(g)).collect()
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn same_group(&self, other: &AlgebraElement) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
    }

    fn check_group(&self, other: &AlgebraElement) -> Result<()> {
        if self.same_group(other) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn try_add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_group(other)?;
        let mut out = self.clone();
        out.coeffs.xor_assign(&other.coeffs);
        Ok(out)
    }

    pub fn try_mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_group(other)?;
        let mut out = BitVector::zeros(self.group.size());
        let rhs: Vec<usize> = other.support().collect();
        for g in self.support() {
            for &h in &rhs {
                out.flip(self.group.mul(g, h));
            }
        }
        Ok(AlgebraElement { group: Arc::clone(&self.group), coeffs: out })
    }

    /// `s * self` for the group element with index `s`.
    pub fn left_translate(&self, s: usize) -> AlgebraElement {
        let mut out = BitVector::zeros(self.group.size());
        for g in self.support() {
            out.set(self.group.mul(s, g), true);
        }
        AlgebraElement { group: Arc::clone(&self.group), coeffs: out }
    }

    /// `self * s` for the group element with index `s`.
    pub fn right_translate(&self, s: usize) -> AlgebraElement {
        let mut out = BitVector::zeros(self.group.size());
        for g in self.support() {
            out.set(self.group.mul(g, s), true);
        }
        AlgebraElement { group: Arc::clone(&self.group), coeffs: out }
    }

    /// `self^e` by repeated squaring; `self^0` is the identity.
    pub fn power(&self, mut e: u64) -> AlgebraElement {
        let mut base = self.clone();
        let mut acc = Self::one(&self.group);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Two-sided inverse, if this element is a unit.
    ///
    /// Solves `self * y = e` through the left-regular matrix; in a finite
    /// dimensional algebra a right inverse is two-sided.
    pub fn inverse(&self) -> Result<Option<AlgebraElement>> {
        self.inverse_bounded(DEFAULT_ALGEBRA_BOUND)
    }

    pub fn inverse_bounded(&self, bound: usize) -> Result<Option<AlgebraElement>> {
        let n = self.group.size();
        if n > bound {
            return Err(Error::DimensionBound { dim: n, bound });
        }
        // row i of L_x: coordinates h with g h = i for some g in the support
        let support: Vec<usize> = self.support().collect();
        let rows = (0..n)
            .map(|i| {
                let mut r = BitVector::zeros(n);
                for &g in &support {
                    r.flip(self.group.mul(self.group.inv(g), i));
                }
                r
            })
            .collect();
        let m = BitMatrix::from_rows(n, rows)?;
        let rhs = BitVector::unit(n, self.group.identity());
        Ok(m.solve(&rhs)?.map(|coeffs| AlgebraElement { group: Arc::clone(&self.group), coeffs }))
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.inverse()?.is_some())
    }

    /// Image under the anti-automorphism `g -> g^-1`.
    pub fn antipode(&self) -> AlgebraElement {
        let mut out = BitVector::zeros(self.group.size());
        for g in self.support() {
            out.set(self.group.inv(g), true);
        }
        AlgebraElement { group: Arc::clone(&self.group), coeffs: out }
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other) && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement {}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;

    /// Panics if the operands live in different group algebras.
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("group mismatch")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;

    /// Panics if the operands live in different group algebras.
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_mul(rhs).expect("group mismatch")
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, g) in self.support().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", self.group.element(g))?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({self})")
    }
}

/// `(g_1 + .. + g_m)^(2^k)` for pairwise commuting `g_i`, computed as
/// `g_1^(2^k) + .. + g_m^(2^k)` without touching the group algebra.
///
/// The result lists the terms with odd multiplicity, sorted canonically.
pub fn frobenius_power_of_commuting_sum(terms: &[Permutation], k: u32) -> Result<Vec<Permutation>> {
    for (i, a) in terms.iter().enumerate() {
        for b in &terms[i + 1..] {
            if a.degree() != b.degree() {
                return Err(Error::DegreeMismatch(a.degree(), b.degree()));
            }
            if !a.commutes_with(b) {
                return Err(Error::NonCommuting);
            }
        }
    }
    let mut powered: Vec<Permutation> = terms
        .iter()
        .map(|t| {
            // t^(2^k) by k squarings
            (0..k).fold(*t, |acc, _| acc * acc)
        })
        .collect();
    powered.sort_unstable();
    let mut out: Vec<Permutation> = Vec::with_capacity(powered.len());
    for p in powered {
        if out.last() == Some(&p) {
            out.pop();
        } else {
            out.push(p);
        }
    }
    Ok(out)
}
