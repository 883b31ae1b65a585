//! Finite groups indexed by a canonical element list.
//!
//! An [`IndexedGroup`] stores its elements sorted, so element `i` is the
//! `i`-th smallest under the element type's `Ord`. Products are read from a
//! materialized Cayley table when the group is small enough, otherwise they
//! are computed on demand and looked up by binary search. Callers never see
//! which mode is active.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::perm::{PermSet, Permutation};

/// Largest group whose Cayley table is materialized.
pub const DEFAULT_TABLE_BOUND: usize = 5040;

/// Largest number of conjugacy classes the subset scan in
/// [`IndexedGroup::is_simple`] accepts.
pub const DEFAULT_CLASS_BOUND: usize = 24;

type Op<E> = Arc<dyn Fn(&E, &E) -> E + Send + Sync>;

pub type PermGroup = IndexedGroup<Permutation>;

#[derive(Clone)]
pub struct IndexedGroup<E> {
    elements: Vec<E>,
    table: Option<Vec<u16>>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    id: usize,
    op: Op<E>,
    generators: OnceLock<Vec<usize>>,
}

/// Outcome of [`IndexedGroup::is_simple`]; the witness lists the element
/// indices of a proper nontrivial normal subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    Simple,
    NotSimple(Vec<usize>),
}

impl Simplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, Simplicity::Simple)
    }
}

impl<E: Clone + Ord> IndexedGroup<E> {
    /// Indexes a finite group given by its elements and binary operation.
    ///
    /// The table is materialized when `materialize` is set; this fails for
    /// groups above [`DEFAULT_TABLE_BOUND`].
    pub fn from_elements<F>(mut elements: Vec<E>, op: F, materialize: bool) -> Result<Self>
    where
        F: Fn(&E, &E) -> E + Send + Sync + 'static,
    {
        elements.sort();
        elements.dedup();
        let n = elements.len();
        if n == 0 {
            return Err(Error::Precondition("a group has at least one element".into()));
        }
        if materialize && n > DEFAULT_TABLE_BOUND {
            return Err(Error::TableBound { order: n, bound: DEFAULT_TABLE_BOUND });
        }
        let op: Op<E> = Arc::new(op);
        let id = (0..n)
            .find(|&i| op(&elements[i], &elements[i]) == elements[i])
            .ok_or_else(|| Error::Precondition("no identity element".into()))?;
        let mut group = IndexedGroup {
            elements,
            table: None,
            inv: Vec::new(),
            orders: Vec::new(),
            id,
            op,
            generators: OnceLock::new(),
        };
        if materialize {
            let mut table = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    let p = (group.op)(&group.elements[a], &group.elements[b]);
                    let idx = group.index_of(&p).ok_or_else(|| Error::Precondition("set is not closed".into()))?;
                    table.push(idx as u16);
                }
            }
            group.table = Some(table);
        }
        group.fill_orders()?;
        Ok(group)
    }

    fn fill_orders(&mut self) -> Result<()> {
        let n = self.size();
        let mut inv = vec![0u32; n];
        let mut orders = vec![0u32; n];
        for a in 0..n {
            let mut prev = self.id;
            let mut x = a;
            let mut k = 1u32;
            while x != self.id {
                prev = x;
                x = self.try_mul(x, a)?;
                k += 1;
                if k as usize > n + 1 {
                    return Err(Error::Precondition("not a group".into()));
                }
            }
            // x = a^k = id and prev = a^(k-1)
            let (order, inverse) = if a == self.id { (1, self.id) } else { (k, prev) };
            inv[a] = inverse as u32;
            orders[a] = order;
        }
        self.inv = inv;
        self.orders = orders;
        Ok(())
    }

    fn try_mul(&self, a: usize, b: usize) -> Result<usize> {
        match &self.table {
            Some(t) => Ok(t[a * self.size() + b] as usize),
            None => {
                let p = (self.op)(&self.elements[a], &self.elements[b]);
                self.index_of(&p).ok_or_else(|| Error::Precondition("set is not closed".into()))
            }
        }
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.elements.binary_search(e).ok()
    }

    pub fn identity(&self) -> usize {
        self.id
    }

    pub fn is_materialized(&self) -> bool {
        self.table.is_some()
    }

    /// Index of `elements[a] * elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.try_mul(a, b).expect("product outside the group")
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn order_of(&self, a: usize) -> u64 {
        self.orders[a] as u64
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = self.id;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g x g^-1`.
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `[s * g for every g]`, the coordinate permutation of left multiplication by `s`.
    pub fn left_translation(&self, s: usize) -> Vec<u32> {
        (0..self.size()).map(|g| self.mul(s, g) as u32).collect()
    }

    /// `[g * s for every g]`.
    pub fn right_translation(&self, s: usize) -> Vec<u32> {
        (0..self.size()).map(|g| self.mul(g, s) as u32).collect()
    }

    /// Every row and column of the Cayley table is a permutation of the elements.
    pub fn check_latin_square(&self) -> bool {
        let n = self.size();
        let mut seen = vec![0usize; n];
        for a in 0..n {
            for b in 0..n {
                let p = self.mul(a, b);
                if seen[p] == 2 * a + 1 {
                    return false;
                }
                seen[p] = 2 * a + 1;
            }
            for b in 0..n {
                let p = self.mul(b, a);
                if seen[p] == 2 * a + 2 {
                    return false;
                }
                seen[p] = 2 * a + 2;
            }
        }
        true
    }

    pub fn check_identity_and_inverses(&self) -> bool {
        (0..self.size()).all(|x| {
            self.mul(self.id, x) == x
                && self.mul(x, self.id) == x
                && self.mul(x, self.inv(x)) == self.id
                && self.mul(self.inv(x), x) == self.id
        })
    }

    pub fn is_associative_on(&self, triples: impl IntoIterator<Item = (usize, usize, usize)>) -> bool {
        triples.into_iter().all(|(a, b, c)| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))
    }

    pub fn check_associativity_exhaustive(&self) -> bool {
        let n = self.size();
        self.is_associative_on((0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))))
    }

    /// Subgroup generated by the given element indices, sorted.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.size()];
        member[self.id] = true;
        let mut out = vec![self.id];
        let mut queue = VecDeque::from([self.id]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// A generating set chosen greedily in canonical order.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut member = vec![false; self.size()];
            member[self.id] = true;
            let mut gens = Vec::new();
            for x in 0..self.size() {
                if member[x] {
                    continue;
                }
                gens.push(x);
                for y in self.generated_subgroup(&gens) {
                    member[y] = true;
                }
            }
            gens
        })
    }

    pub fn center(&self) -> Vec<usize> {
        let gens = self.generators().to_vec();
        (0..self.size()).filter(|&z| gens.iter().all(|&g| self.mul(z, g) == self.mul(g, z))).collect()
    }

    pub fn has_trivial_center(&self) -> bool {
        self.center().len() == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.size()
    }

    /// Conjugacy classes as sorted index lists, ordered by (size, smallest index).
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let gens = self.generators().to_vec();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut class = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(y) = queue.pop_front() {
                for &s in &gens {
                    let z = self.conj(s, y);
                    if !assigned[z] {
                        assigned[z] = true;
                        class.push(z);
                        queue.push_back(z);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by_key(|c| (c.len(), c[0]));
        classes
    }

    pub fn order_spectrum(&self) -> BTreeMap<u64, usize> {
        let mut out = BTreeMap::new();
        for a in 0..self.size() {
            *out.entry(self.order_of(a)).or_insert(0) += 1;
        }
        out
    }

    /// Searches unions of conjugacy classes (always including the identity
    /// class) whose size is a proper nontrivial divisor of the group order
    /// for one that is closed under multiplication.
    pub fn is_simple(&self, class_bound: usize) -> Result<Simplicity> {
        let n = self.size();
        if n < 2 {
            return Err(Error::Precondition("simplicity needs a nontrivial group".into()));
        }
        let classes = self.conjugacy_classes();
        if classes.len() > class_bound {
            return Err(Error::ClassBound { classes: classes.len(), bound: class_bound });
        }
        // classes[0] is the identity class
        let others = &classes[1..];
        for mask in 1u64..(1u64 << others.len()) {
            let size: usize =
                1 + others.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| c.len()).sum::<usize>();
            if size >= n || !n.is_multiple_of(size) {
                continue;
            }
            let mut union: Vec<usize> = vec![self.id];
            for (i, c) in others.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    union.extend_from_slice(c);
                }
            }
            if self.is_closed_subset(&union) {
                union.sort_unstable();
                return Ok(Simplicity::NotSimple(union));
            }
        }
        Ok(Simplicity::Simple)
    }

    /// Whether the subgroup generated by `subset` stays inside it.
    fn is_closed_subset(&self, subset: &[usize]) -> bool {
        let n = self.size();
        let mut allowed = vec![false; n];
        for &x in subset {
            allowed[x] = true;
        }
        let mut member = vec![false; n];
        member[self.id] = true;
        let mut list = vec![self.id];
        let mut gens: Vec<usize> = Vec::new();
        for &x in subset {
            if member[x] {
                continue;
            }
            gens.push(x);
            let mut queue: VecDeque<usize> = list.iter().copied().collect();
            while let Some(h) = queue.pop_front() {
                for &s in &gens {
                    let y = self.mul(h, s);
                    if member[y] {
                        continue;
                    }
                    if !allowed[y] {
                        return false;
                    }
                    member[y] = true;
                    list.push(y);
                    queue.push_back(y);
                }
            }
        }
        true
    }
}

impl IndexedGroup<Permutation> {
    /// Indexes a permutation group; with `on_the_fly` unset the Cayley table is
    /// materialized and groups above [`DEFAULT_TABLE_BOUND`] are rejected.
    pub fn from_perm_set(g: &PermSet, on_the_fly: bool) -> Result<Self> {
        if !g.is_group() {
            return Err(Error::Precondition("set is not flagged as a group".into()));
        }
        IndexedGroup::from_elements(g.members().to_vec(), |a: &Permutation, b: &Permutation| a * b, !on_the_fly)
    }

    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }

    pub fn index_of_perm(&self, p: &Permutation) -> Result<usize> {
        self.index_of(p).ok_or(Error::NotMember)
    }

    pub fn to_perm_set(&self) -> PermSet {
        PermSet::new(self.degree(), self.elements.iter().copied()).expect("uniform degree")
    }
}

/// Indexes a permutation group, materializing the table unless `on_the_fly`.
pub fn index_group(g: &PermSet, on_the_fly: bool) -> Result<PermGroup> {
    IndexedGroup::from_perm_set(g, on_the_fly)
}

pub fn has_trivial_center<E: Clone + Ord>(g: &IndexedGroup<E>) -> bool {
    g.has_trivial_center()
}

impl<E: fmt::Debug> fmt::Debug for IndexedGroup<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IndexedGroup")
            .field("size", &self.elements.len())
            .field("materialized", &self.table.is_some())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{alternating_group, generated_subgroup, parse_cycles, symmetric_group};

    #[test]
    fn s3_table_matches_independent_composition() {
        let g = index_group(&symmetric_group(3).unwrap(), false).unwrap();
        assert_eq!(g.size(), 6);
        assert!(g.element(g.identity()).is_identity());
        assert!(g.is_materialized());
        // second composition routine: i -> a[b[i]] straight on image arrays
        for a in 0..6 {
            for b in 0..6 {
                let ia = g.element(a).images();
                let ib = g.element(b).images();
                let expected: Vec<usize> = (0..3).map(|i| ia[ib[i] as usize] as usize).collect();
                let got = g.element(g.mul(a, b)).images().iter().map(|&x| x as usize).collect::<Vec<_>>();
                assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn s4_invariants() {
        let g = index_group(&symmetric_group(4).unwrap(), false).unwrap();
        assert!(g.check_latin_square());
        assert!(g.check_identity_and_inverses());
        assert!(g.check_associativity_exhaustive());
    }

    #[test]
    fn a8_on_the_fly() {
        let a8 = alternating_group(8).unwrap();
        assert!(matches!(index_group(&a8, false), Err(Error::TableBound { .. })));
        let g = index_group(&a8, true).unwrap();
        assert_eq!(g.size(), 20160);
        assert!(!g.is_materialized());
        let x = g.index_of_perm(&parse_cycles("(1,2,3,4,5)(6,7,8)", 8).unwrap()).unwrap();
        assert_eq!(g.order_of(x), 15);
        assert_eq!(g.mul(x, g.inv(x)), g.identity());
    }

    #[test]
    fn centers() {
        let s3 = index_group(&symmetric_group(3).unwrap(), false).unwrap();
        assert!(has_trivial_center(&s3));
        let a3 = index_group(&alternating_group(3).unwrap(), false).unwrap();
        assert!(!has_trivial_center(&a3));
        assert!(a3.is_abelian());
        let s4 = index_group(&symmetric_group(4).unwrap(), false).unwrap();
        assert!(has_trivial_center(&s4));
        let d4 =
            generated_subgroup(&[parse_cycles("(1,2,3,4)", 4).unwrap(), parse_cycles("(1,3)", 4).unwrap()]).unwrap();
        let d4 = index_group(&d4, false).unwrap();
        assert_eq!(d4.center().len(), 2);
    }

    #[test]
    fn generators_generate() {
        let g = index_group(&symmetric_group(5).unwrap(), false).unwrap();
        assert_eq!(g.generated_subgroup(g.generators()).len(), 120);
    }

    #[test]
    fn abstract_group_from_labels() {
        // Z/6 under addition, labelled by residues
        let g = IndexedGroup::from_elements((0u64..6).collect(), |a, b| (a + b) % 6, true).unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.order_spectrum(), BTreeMap::from([(1, 1), (2, 1), (3, 2), (6, 2)]));
        assert!(g.check_latin_square());
        assert!(IndexedGroup::from_elements(vec![1u64, 2], |a, b| a * b, true).is_err());
    }

    #[test]
    fn latin_square_detects_broken_table() {
        let g = IndexedGroup::from_elements((0u64..4).collect(), |a, b| (a + b) % 4, true).unwrap();
        assert!(g.check_latin_square());
        let mut broken = g.clone();
        if let Some(t) = broken.table.as_mut() {
            t[1] = 0;
        }
        assert!(!broken.check_latin_square());
    }
}
