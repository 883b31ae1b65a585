//! Rings built outside group algebras (matrix rings, the Hurwitz order mod
//! 2, small fields) and isomorphism tests for finite F2-algebras.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2la::{word_apply, word_invert, word_rank};
use crate::findex::{index_group, IndexedGroup, DEFAULT_CLASS_BOUND};
use crate::ideal::Ideal;
use crate::perm::{alternating_group, Permutation};
use crate::quotient::{F2AlgebraTable, QuotientRing};

const HURWITZ_FIXTURE: &str = include_str!("../fixtures/hurwitz_mod2.txt");

/// Basis labels of [`hurwitz_mod2`], in coordinate order.
pub const HURWITZ_LABELS: [&str; 4] = ["1", "i", "j", "w"];

/// Largest number of generator-image assignments [`unit_spanned_iso`] tries.
pub const DEFAULT_ASSIGNMENT_BOUND: usize = 1_000_000;

/// `M_k(F2)` on the matrix units; basis index `a * k + b` holds `e_ab`.
pub fn matrix_ring(k: usize) -> Result<F2AlgebraTable> {
    if !(1..=4).contains(&k) {
        return Err(Error::Precondition(format!("matrix size {k} is outside 1..=4")));
    }
    let d = k * k;
    let mut structure = vec![0u64; d * d];
    for a in 0..k {
        for b in 0..k {
            // e_ab * e_bc = e_ac, every other product of matrix units is 0
            for c in 0..k {
                structure[(a * k + b) * d + (b * k + c)] = 1 << (a * k + c);
            }
        }
    }
    let unity = (0..k).fold(0, |acc, a| acc | 1 << (a * k + a));
    F2AlgebraTable::new(d, unity, structure)
}

/// `|GL_k(F2)| = prod_{i<k} (2^k - 2^i)`.
pub fn general_linear_order(k: u32) -> u64 {
    (0..k).map(|i| (1u64 << k) - (1u64 << i)).product()
}

/// The Hurwitz quaternions modulo 2 on the basis `1, i, j, w` with
/// `w = (1 + i + j + k) / 2`, read from the committed fixture.
pub fn hurwitz_mod2() -> F2AlgebraTable {
    parse_product_table(HURWITZ_FIXTURE, &HURWITZ_LABELS).expect("hurwitz fixture is well formed")
}

/// Parses lines `a * b = bits`, with `bits[k]` the coordinate on `labels[k]`;
/// `#` starts a comment. The first label is the unity.
pub fn parse_product_table(text: &str, labels: &[&str]) -> Result<F2AlgebraTable> {
    let d = labels.len();
    let position = |s: &str| {
        labels.iter().position(|l| *l == s).ok_or_else(|| Error::InvalidTable(format!("unknown basis label {s:?}")))
    };
    let mut structure = vec![None; d * d];
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let malformed = || Error::InvalidTable(format!("malformed line {line:?}"));
        let (lhs, bits) = line.split_once('=').ok_or_else(malformed)?;
        let (a, b) = lhs.split_once('*').ok_or_else(malformed)?;
        let (a, b, bits) = (position(a.trim())?, position(b.trim())?, bits.trim());
        if bits.len() != d || !bits.chars().all(|c| c == '0' || c == '1') {
            return Err(malformed());
        }
        let v = bits.chars().enumerate().filter(|(_, c)| *c == '1').fold(0u64, |acc, (k, _)| acc | 1 << k);
        if structure[a * d + b].replace(v).is_some() {
            return Err(Error::InvalidTable(format!("product {} * {} given twice", labels[a], labels[b])));
        }
    }
    let structure = structure
        .into_iter()
        .collect::<Option<Vec<u64>>>()
        .ok_or_else(|| Error::InvalidTable("missing products".into()))?;
    F2AlgebraTable::new(d, 1, structure)
}

/// The prime field F2.
pub fn f2() -> F2AlgebraTable {
    F2AlgebraTable::new(1, 1, vec![1]).expect("valid table")
}

/// F4 = F2[x]/(x^2 + x + 1) on the basis `1, x`.
pub fn f4() -> F2AlgebraTable {
    F2AlgebraTable::new(2, 0b01, vec![0b01, 0b10, 0b10, 0b11]).expect("valid table")
}

/// An F2-linear map given by the images of the basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearIso {
    pub columns: Vec<u64>,
}

impl LinearIso {
    pub fn apply(&self, v: u64) -> u64 {
        word_apply(&self.columns, v)
    }

    pub fn inverse(&self) -> Option<LinearIso> {
        word_invert(&self.columns).map(|columns| LinearIso { columns })
    }

    /// Whether this is a unital ring isomorphism `a -> b`.
    pub fn is_ring_iso(&self, a: &F2AlgebraTable, b: &F2AlgebraTable) -> bool {
        let d = a.dim();
        self.columns.len() == d
            && b.dim() == d
            && word_rank(&self.columns) == d
            && self.apply(a.unity()) == b.unity()
            && (0..d)
                .all(|i| (0..d).all(|j| self.apply(a.basis_product(i, j)) == b.mul(self.columns[i], self.columns[j])))
    }
}

/// Searches for a ring isomorphism `a -> b`, assuming the units of `a` span
/// it.
///
/// A ring isomorphism restricts to a unit-group isomorphism, and when the
/// units span, it is the unique linear extension of that restriction. So
/// every isomorphism of unit groups is tried (by generator images checked
/// on all Cayley edges), extended linearly from a spanning set of units, and
/// kept if it is well defined and multiplicative. `None` is conclusive.
pub fn unit_spanned_iso(a: &F2AlgebraTable, b: &F2AlgebraTable) -> Result<Option<LinearIso>> {
    let d = a.dim();
    let ua = a.unit_group()?.group;
    let span = word_rank(ua.elements());
    if span != d {
        return Err(Error::UnitsDoNotSpan { span, dim: d });
    }
    if b.dim() != d {
        return Ok(None);
    }
    let ub = b.unit_group()?.group;
    if ua.size() != ub.size() || ua.order_spectrum() != ub.order_spectrum() {
        return Ok(None);
    }

    // units of `a` forming a basis, and the inverse of that basis matrix
    let mut spanning = Vec::with_capacity(d);
    for (i, &u) in ua.elements().iter().enumerate() {
        let mut trial: Vec<u64> = spanning.iter().map(|&k| ua.elements()[k]).collect();
        trial.push(u);
        if word_rank(&trial) == trial.len() {
            spanning.push(i);
        }
        if spanning.len() == d {
            break;
        }
    }
    let basis: Vec<u64> = spanning.iter().map(|&k| ua.elements()[k]).collect();
    let basis_inv = word_invert(&basis).expect("spanning units are independent");

    let gens = ua.generators().to_vec();
    let candidates: Vec<Vec<usize>> =
        gens.iter().map(|&g| (0..ub.size()).filter(|&h| ub.order_of(h) == ua.order_of(g)).collect()).collect();
    let total = candidates.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
    if total.is_none_or(|t| t > DEFAULT_ASSIGNMENT_BOUND) {
        return Err(Error::Precondition("too many generator images to enumerate".into()));
    }

    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, cand)| cand[c]).collect();
        if let Some(hom) = extend_hom(&ua, &ub, &gens, &images) {
            // L = F * U^-1 where U holds the spanning units and F their images
            let f: Vec<u64> = spanning.iter().map(|&k| ub.elements()[hom[k]]).collect();
            let columns: Vec<u64> = (0..d).map(|j| word_apply(&f, basis_inv[j])).collect();
            let iso = LinearIso { columns };
            let respects_units = (0..ua.size()).all(|k| iso.apply(ua.elements()[k]) == ub.elements()[hom[k]]);
            if respects_units && iso.is_ring_iso(a, b) {
                return Ok(Some(iso));
            }
        }
        // odometer step
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return Ok(None);
            }
            choice[pos] += 1;
            if choice[pos] < candidates[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// The bijective homomorphism sending `gens[i]` to `images[i]`, if the
/// assignment extends to one.
fn extend_hom(ga: &IndexedGroup<u64>, gb: &IndexedGroup<u64>, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = ga.size();
    let mut map = vec![usize::MAX; n];
    map[ga.identity()] = gb.identity();
    let mut queue = vec![ga.identity()];
    let mut head = 0;
    while head < queue.len() {
        let h = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let x = ga.mul(h, s);
            let y = gb.mul(map[h], t);
            if map[x] == usize::MAX {
                map[x] = y;
                queue.push(x);
            } else if map[x] != y {
                return None;
            }
        }
    }
    let mut seen = vec![false; gb.size()];
    for &y in &map {
        if y == usize::MAX || std::mem::replace(&mut seen[y], true) {
            return None;
        }
    }
    Some(map)
}

/// A permutation `t` with `t J_a t^-1 = J_b`, if one exists.
///
/// When both quotients pass the identity criterion their unit groups are the
/// group cosets, so a ring isomorphism restricts to an automorphism of `G`.
/// If every automorphism of `G` is inner (the caller asserts this through
/// `all_automorphisms_inner`), conjugation is the only candidate and `None`
/// is conclusive.
pub fn quotient_iso_by_conjugacy(ja: &Ideal, jb: &Ideal, all_automorphisms_inner: bool) -> Result<Option<Permutation>> {
    if !Arc::ptr_eq(ja.group(), jb.group()) {
        return Err(Error::GroupMismatch);
    }
    if !all_automorphisms_inner {
        return Err(Error::Precondition("the scan needs every automorphism of the group to be inner".into()));
    }
    for j in [ja, jb] {
        if !QuotientRing::build(j)?.identity_criterion()? {
            return Err(Error::Precondition("a quotient fails the identity criterion".into()));
        }
    }
    for t in ja.group().elements() {
        if ja.conjugate(t)?.same_span(jb) {
            return Ok(Some(*t));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupProfile {
    pub order: usize,
    pub spectrum: BTreeMap<u64, usize>,
    pub has_order_15: bool,
    pub simple: bool,
    pub class_count: usize,
}

impl GroupProfile {
    pub fn of<E: Clone + Ord>(g: &IndexedGroup<E>) -> Result<GroupProfile> {
        let spectrum = g.order_spectrum();
        Ok(GroupProfile {
            order: g.size(),
            has_order_15: spectrum.contains_key(&15),
            simple: g.is_simple(DEFAULT_CLASS_BOUND)?.is_simple(),
            class_count: g.conjugacy_classes().len(),
            spectrum,
        })
    }
}

/// Invariants of `GL_4(F2)` (the units of `M_4(F2)`) next to those of `A_8`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct A8Identification {
    pub gl4: GroupProfile,
    pub a8: GroupProfile,
    pub orders_equal: bool,
    pub spectra_equal: bool,
    pub caveat: String,
}

impl A8Identification {
    pub fn matches(&self) -> bool {
        self.orders_equal && self.spectra_equal && self.gl4.simple && self.a8.simple
    }
}

pub const A8_CAVEAT: &str = "Order, element-order spectrum and simplicity agree. Of the two simple groups of order \
     20160, only A8 has elements of order 15 (PSL(3,4) has none), so these invariants pin down the isomorphism \
     type; no explicit isomorphism is constructed.";

pub fn a8_identification() -> Result<A8Identification> {
    let gl4 = matrix_ring(4)?.unit_group()?.group;
    a8_identification_from(&gl4)
}

/// Compares a given unit group of `M_4(F2)` against `A_8`.
pub fn a8_identification_from(units_of_m4: &IndexedGroup<u64>) -> Result<A8Identification> {
    let a8 = index_group(&alternating_group(8)?, true)?;
    let gl4 = GroupProfile::of(units_of_m4)?;
    let a8 = GroupProfile::of(&a8)?;
    Ok(A8Identification {
        orders_equal: gl4.order == a8.order,
        spectra_equal: gl4.spectrum == a8.spectrum,
        gl4,
        a8,
        caveat: A8_CAVEAT.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findex::PermGroup;
    use crate::galg::AlgebraElement;
    use crate::perm::{alternating_generators, symmetric_generators, symmetric_group};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Quaternion with coordinates doubled, so `w` is integral.
    type Q = [i64; 4];

    fn qmul(x: Q, y: Q) -> Q {
        let [a1, b1, c1, d1] = x;
        let [a2, b2, c2, d2] = y;
        [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ]
    }

    /// Mod-2 coordinates over `1, i, j, w` of a product of doubled quaternions
    /// (so the input is four times the true product).
    fn hurwitz_coords(p: Q) -> u64 {
        let [a, b, c, d] = p;
        // true value (a + bi + cj + dk) / 4 = alpha + beta i + gamma j + delta w
        // with alpha = (a - d) / 4, beta = (b - d) / 4, gamma = (c - d) / 4, delta = d / 2
        [a - d, b - d, c - d, 2 * d].iter().enumerate().fold(0, |acc, (k, &x)| {
            assert_eq!(x % 4, 0);
            acc | (((x / 4).rem_euclid(2) as u64) << k)
        })
    }

    #[test]
    fn hurwitz_fixture_matches_integer_quaternions() {
        let basis: [Q; 4] = [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [1, 1, 1, 1]];
        let t = hurwitz_mod2();
        for (x, qx) in basis.iter().enumerate() {
            for (y, qy) in basis.iter().enumerate() {
                assert_eq!(t.basis_product(x, y), hurwitz_coords(qmul(*qx, *qy)), "{x} * {y}");
            }
        }
    }

    #[test]
    fn hurwitz_units() {
        let t = hurwitz_mod2();
        assert_eq!(t.size(), 16);
        assert!(t.is_associative());
        assert!((0..16).all(|x| t.mul(1, x) == x && t.mul(x, 1) == x));
        let units = t.unit_group().unwrap();
        assert_eq!(units.count(), 12);
        assert_eq!(units.spectrum(), BTreeMap::from([(1, 1), (2, 3), (3, 8)]));
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..100 {
            let (x, y) = (rng.gen_range(0..16), rng.gen_range(0..16));
            let lhs = t.mul(x ^ y, x ^ y);
            assert_eq!(lhs, t.mul(x, x) ^ t.mul(y, y) ^ t.mul(x, y) ^ t.mul(y, x));
        }
    }

    #[test]
    fn fixture_parser_rejects_bad_input() {
        let labels = ["1", "x"];
        assert!(parse_product_table("1 * 1 = 10\n1 * x = 01\nx * 1 = 01", &labels).is_err());
        assert!(parse_product_table("1 * 1 = 10\n1 * x = 01\nx * 1 = 01\nx * x = 2", &labels).is_err());
        assert!(parse_product_table("1 * 1 = 10\n1 * 1 = 10", &labels).is_err());
        let f4 = parse_product_table("# F4\n1 * 1 = 10\n1 * x = 01\nx * 1 = 01\nx * x = 11", &labels).unwrap();
        assert_eq!(f4, super::f4());
    }

    #[test]
    fn matrix_ring_unit_counts() {
        assert!(matrix_ring(0).is_err() && matrix_ring(5).is_err());
        for k in 1..=3u32 {
            let m = matrix_ring(k as usize).unwrap();
            assert!(m.is_associative());
            assert_eq!(m.units().len() as u64, general_linear_order(k));
        }
        assert_eq!(matrix_ring(1).unwrap(), f2());
        assert_eq!(matrix_ring(2).unwrap().size(), 16);
        assert_eq!(matrix_ring(2).unwrap().units().len(), 6);
    }

    #[test]
    fn gl4_by_enumeration() {
        let m = matrix_ring(4).unwrap();
        assert_eq!(m.size(), 65536);
        assert_eq!(m.units().len() as u64, general_linear_order(4));
        assert_eq!(general_linear_order(4), 20160);
    }

    #[test]
    fn small_fields() {
        assert_eq!(f2().units().len(), 1);
        assert_eq!(f4().units().len(), 3);
        assert!(f4().is_associative());
    }

    fn quotient_table(g: &Arc<PermGroup>, group_gens: &[Permutation], gens: &[&str]) -> F2AlgebraTable {
        let gens: Vec<AlgebraElement> = gens.iter().map(|s| AlgebraElement::parse(g, s).unwrap()).collect();
        QuotientRing::build(&Ideal::close(g, group_gens, &gens).unwrap()).unwrap().to_table()
    }

    #[test]
    fn isomorphism_examples() {
        let m2 = matrix_ring(2).unwrap();
        let id = unit_spanned_iso(&m2, &m2).unwrap().unwrap();
        assert!(id.is_ring_iso(&m2, &m2));

        let s3 = Arc::new(index_group(&symmetric_group(3).unwrap(), false).unwrap());
        let r = quotient_table(&s3, &symmetric_generators(3), &["e + (1,2,3) + (1,3,2)"]);
        let iso = unit_spanned_iso(&r, &m2).unwrap().expect("F2[S3]/(H2) is M2(F2)");
        assert!(iso.is_ring_iso(&r, &m2));
        let back = iso.inverse().unwrap();
        assert!(back.is_ring_iso(&m2, &r));

        let a4 = Arc::new(index_group(&alternating_group(4).unwrap(), false).unwrap());
        let q = quotient_table(&a4, &alternating_generators(4), &["e + (1,2,3) + (1,3,2)"]);
        let h = hurwitz_mod2();
        let iso = unit_spanned_iso(&h, &q).unwrap().expect("Hurwitz mod 2 is a quotient of F2[A4]");
        assert!(iso.inverse().unwrap().is_ring_iso(&q, &h));

        // same size and unit count, different rings
        assert_eq!(unit_spanned_iso(&m2, &h).unwrap(), None);
        // F2 x F2 has the single unit (1, 1)
        let split = F2AlgebraTable::new(2, 0b11, vec![0b01, 0, 0, 0b10]).unwrap();
        assert_eq!(unit_spanned_iso(&split, &split), Err(Error::UnitsDoNotSpan { span: 1, dim: 2 }));
    }

    #[test]
    fn conjugacy_scan() {
        let s4 = Arc::new(index_group(&symmetric_group(4).unwrap(), false).unwrap());
        let gens = symmetric_generators(4);
        let h1 = "e + (1,2) + (1,3) + (2,3) + (1,2,3) + (1,3,2)";
        let close = |x: &str| {
            let els = [AlgebraElement::parse(&s4, x).unwrap(), AlgebraElement::parse(&s4, h1).unwrap()];
            Ideal::close(&s4, &gens, &els).unwrap()
        };
        let j1 = close("e + (2,4) + (1,2)(3,4) + (1,2,3,4)");
        let j2 = close("e + (2,4) + (1,2)(3,4) + (1,4,3,2)");
        assert_eq!(quotient_iso_by_conjugacy(&j1, &j1, true).unwrap(), Some(Permutation::identity(4)));
        assert_eq!(quotient_iso_by_conjugacy(&j1, &j2, true).unwrap(), None);
        assert!(quotient_iso_by_conjugacy(&j1, &j2, false).is_err());
        let op = j1.antipode().unwrap();
        assert!(quotient_iso_by_conjugacy(&op, &j2, true).unwrap().is_some());

        let r1 = QuotientRing::build(&j1).unwrap().to_table();
        let r2 = QuotientRing::build(&j2).unwrap().to_table();
        assert!(unit_spanned_iso(&r1.opposite(), &r2).unwrap().is_some());
        assert_eq!(unit_spanned_iso(&r1, &r2).unwrap(), None);
    }

    #[test]
    fn a8_invariants() {
        let report = a8_identification().unwrap();
        assert!(report.matches());
        assert_eq!(report.gl4.order, 20160);
        assert!(report.gl4.has_order_15 && report.a8.has_order_15);
        assert_eq!(report.gl4.class_count, 14);
    }
}
