//! Permutations of `{0, .., n-1}` and brute-force permutation-group
//! computations (subgroup closure, setwise normalizers, centralizers,
//! conjugacy classes, order spectra, simplicity).
//!
//! Points are 0-based internally and 1-based in text. The cycle grammar is:
//!
//! ```text
//! perm   := "e" | "" | cycle+
//! cycle  := "(" points ")"
//! points := point ("," point)*      -- comma separated, any number of digits
//!         | digit digit*            -- no commas: every digit is one point
//! ```
//!
//! Whitespace is ignored. A product of cycles is read left to right as a
//! composition, so `(1,2)(2,3)` is `(1,2) * (2,3)` and applies `(2,3)` first.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::findex::{IndexedGroup, Simplicity};

/// Largest supported degree.
pub const MAX_DEGREE: usize = 12;

/// Default degree bound for enumerating a full symmetric or alternating group.
pub const DEFAULT_ENUMERATION_BOUND: usize = 9;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    degree: u8,
    image: [u8; MAX_DEGREE],
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        let mut image = [0u8; MAX_DEGREE];
        for (i, slot) in image.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Permutation { degree: degree as u8, image }
    }

    /// Builds a permutation from its 0-based image array.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::DegreeBound { degree: n, bound: MAX_DEGREE });
        }
        let mut seen = [false; MAX_DEGREE];
        let mut p = Permutation::identity(n);
        for (i, &x) in images.iter().enumerate() {
            if x >= n {
                return Err(Error::PointOutOfRange { point: x + 1, degree: n });
            }
            if seen[x] {
                return Err(Error::Malformed(format!("image {} repeated", x + 1)));
            }
            seen[x] = true;
            p.image[i] = x as u8;
        }
        Ok(p)
    }

    /// The cycle `(c0, c1, ..)` on 0-based points.
    pub fn cycle(degree: usize, points: &[usize]) -> Result<Self> {
        let mut p = Permutation::identity(degree);
        let mut seen = [false; MAX_DEGREE];
        for &x in points {
            if x >= degree {
                return Err(Error::PointOutOfRange { point: x + 1, degree });
            }
            if seen[x] {
                return Err(Error::RepeatedPoint(x + 1));
            }
            seen[x] = true;
        }
        for (k, &x) in points.iter().enumerate() {
            p.image[x] = points[(k + 1) % points.len()] as u8;
        }
        Ok(p)
    }

    /// Transposition of two 0-based points.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self> {
        Permutation::cycle(degree, &[a, b])
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    pub fn apply(&self, point: usize) -> usize {
        self.image[point] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.image[..self.degree()]
    }

    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self * rhs`, i.e. `i -> self(rhs(i))`.
    pub fn compose(&self, rhs: &Permutation) -> Result<Permutation> {
        if self.degree != rhs.degree {
            return Err(Error::DegreeMismatch(self.degree(), rhs.degree()));
        }
        Ok(self.compose_unchecked(rhs))
    }

    fn compose_unchecked(&self, rhs: &Permutation) -> Permutation {
        let mut out = *self;
        for i in 0..self.degree() {
            out.image[i] = self.image[rhs.image[i] as usize];
        }
        out
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = *self;
        for i in 0..self.degree() {
            out.image[self.image[i] as usize] = i as u8;
        }
        out
    }

    /// `self * x * self^-1`.
    pub fn conjugate(&self, x: &Permutation) -> Result<Permutation> {
        if self.degree != x.degree {
            return Err(Error::DegreeMismatch(self.degree(), x.degree()));
        }
        // (g x g^-1)(g(i)) = g(x(i))
        let mut out = *x;
        for i in 0..self.degree() {
            out.image[self.image[i] as usize] = self.image[x.image[i] as usize];
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = *self;
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Sorted cycle lengths including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.extend(std::iter::repeat_n(1, self.degree() - moved));
        t.sort_unstable();
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.degree == other.degree && self.compose_unchecked(other) == other.compose_unchecked(self)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl Mul for Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: Permutation) -> Permutation {
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        self.compose_unchecked(&rhs)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        *self * *rhs
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses cycle notation over 1-based points into a permutation of degree `n`.
pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeBound { degree: n, bound: MAX_DEGREE });
    }
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut acc = Permutation::identity(n);
    if compact.is_empty() || compact == "e" {
        return Ok(acc);
    }
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body_end = match (rest.strip_prefix('('), rest.find(')')) {
            (Some(_), Some(end)) => end,
            _ => return Err(Error::Malformed(text.to_string())),
        };
        let body = &rest[1..body_end];
        rest = &rest[body_end + 1..];
        if body.is_empty() {
            return Err(Error::Malformed(text.to_string()));
        }
        let tokens: Vec<&str> = if body.contains(',') {
            body.split(',').collect()
        } else {
            body.char_indices().map(|(i, c)| &body[i..i + c.len_utf8()]).collect()
        };
        let mut points = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let p: usize = tok.parse().map_err(|_| Error::Malformed(format!("bad point '{tok}' in {text}")))?;
            if p == 0 || p > n {
                return Err(Error::PointOutOfRange { point: p, degree: n });
            }
            points.push(p - 1);
        }
        acc = acc * Permutation::cycle(n, &points)?;
    }
    Ok(acc)
}

pub fn print_cycles(p: &Permutation) -> String {
    p.to_string()
}

pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    a.compose(b)
}

pub fn conjugate(g: &Permutation, x: &Permutation) -> Result<Permutation> {
    g.conjugate(x)
}

/// A canonically sorted, duplicate-free set of permutations of one degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PermSet {
    degree: usize,
    members: Vec<Permutation>,
    is_group: bool,
}

impl PermSet {
    pub fn new(degree: usize, perms: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let mut members: Vec<Permutation> = perms.into_iter().collect();
        if let Some(p) = members.iter().find(|p| p.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, p.degree()));
        }
        members.sort_unstable();
        members.dedup();
        Ok(PermSet { degree, members, is_group: false })
    }

    fn group_from_sorted(degree: usize, members: Vec<Permutation>) -> Self {
        PermSet { degree, members, is_group: true }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_group(&self) -> bool {
        self.is_group
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.members.iter()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.binary_search(p).is_ok()
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.members.binary_search(p).ok()
    }

    pub fn is_subset_of(&self, other: &PermSet) -> bool {
        self.members.iter().all(|p| other.contains(p))
    }

    /// Checks closure under composition and inverses by brute force.
    pub fn verify_group(&self) -> bool {
        !self.members.is_empty()
            && self.contains(&Permutation::identity(self.degree))
            && self.members.iter().all(|a| self.contains(&a.inverse()))
            && self.members.iter().all(|a| self.members.iter().all(|b| self.contains(&(a * b))))
    }
}

impl fmt::Debug for PermSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a PermSet {
    type Item = &'a Permutation;
    type IntoIter = std::slice::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// All permutations of `0..n` in lexicographic order.
fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation::from_images(&current).expect("valid"));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("pivot");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

pub fn symmetric_group(n: usize) -> Result<PermSet> {
    symmetric_group_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn symmetric_group_bounded(n: usize, bound: usize) -> Result<PermSet> {
    if n == 0 || n > bound.min(MAX_DEGREE) {
        return Err(Error::DegreeBound { degree: n, bound: bound.min(MAX_DEGREE) });
    }
    Ok(PermSet::group_from_sorted(n, all_permutations(n)))
}

pub fn alternating_group(n: usize) -> Result<PermSet> {
    alternating_group_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn alternating_group_bounded(n: usize, bound: usize) -> Result<PermSet> {
    let s = symmetric_group_bounded(n, bound)?;
    let members = s.members.into_iter().filter(Permutation::is_even).collect();
    Ok(PermSet::group_from_sorted(n, members))
}

/// The standard two-element generating set `{(1,2), (1,2,..,n)}` of `S_n`.
pub fn symmetric_generators(n: usize) -> Vec<Permutation> {
    match n {
        0 | 1 => vec![Permutation::identity(n.max(1))],
        2 => vec![Permutation::transposition(2, 0, 1).unwrap()],
        _ => vec![
            Permutation::transposition(n, 0, 1).unwrap(),
            Permutation::cycle(n, &(0..n).collect::<Vec<_>>()).unwrap(),
        ],
    }
}

/// `{(1,2,3), (1,2,..,n)}` for odd `n`, `{(1,2,3), (2,3,..,n)}` for even `n`.
pub fn alternating_generators(n: usize) -> Vec<Permutation> {
    match n {
        0..=2 => vec![Permutation::identity(n.max(1))],
        3 => vec![Permutation::cycle(3, &[0, 1, 2]).unwrap()],
        _ => {
            let long: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
            vec![Permutation::cycle(n, &[0, 1, 2]).unwrap(), Permutation::cycle(n, &long).unwrap()]
        }
    }
}

/// The subgroup generated by `gens`, by breadth-first closure.
pub fn generated_subgroup(gens: &[Permutation]) -> Result<PermSet> {
    let Some(first) = gens.first() else {
        return Err(Error::Precondition("empty generator list".into()));
    };
    let n = first.degree();
    if let Some(g) = gens.iter().find(|g| g.degree() != n) {
        return Err(Error::DegreeMismatch(n, g.degree()));
    }
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x * *g;
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    let mut members: Vec<Permutation> = seen.into_iter().collect();
    members.sort_unstable();
    Ok(PermSet::group_from_sorted(n, members))
}

fn scan<F>(g: &PermSet, keep: F) -> Vec<Permutation>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    #[cfg(feature = "parallel")]
    {
        g.members.par_iter().filter(|x| keep(x)).copied().collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        g.members.iter().filter(|x| keep(x)).copied().collect()
    }
}

/// `{g in G : g T g^-1 = T}` with `T` treated as a set, not as the group it
/// generates.
pub fn normalizer_of_set(g: &PermSet, t: &PermSet) -> Result<PermSet> {
    if g.degree != t.degree {
        return Err(Error::DegreeMismatch(g.degree, t.degree));
    }
    if !t.is_subset_of(g) {
        return Err(Error::NotSubset);
    }
    // conjugation is injective, so gTg^-1 ⊆ T already forces equality
    let members = scan(g, |x| t.iter().all(|s| t.contains(&x.conjugate(s).unwrap())));
    Ok(PermSet::group_from_sorted(g.degree, members))
}

/// `{g in G : gs = sg for all s in S}`.
pub fn centralizer_of_set(g: &PermSet, s: &PermSet) -> Result<PermSet> {
    if g.degree != s.degree {
        return Err(Error::DegreeMismatch(g.degree, s.degree));
    }
    let members = scan(g, |x| s.iter().all(|y| x.commutes_with(y)));
    Ok(PermSet::group_from_sorted(g.degree, members))
}

fn require_group(g: &PermSet) -> Result<()> {
    if g.is_group {
        Ok(())
    } else {
        Err(Error::Precondition("set is not flagged as a group".into()))
    }
}

/// Conjugacy classes sorted by (size, smallest member).
pub fn conjugacy_classes(g: &PermSet) -> Result<Vec<PermSet>> {
    require_group(g)?;
    let indexed = IndexedGroup::from_perm_set(g, false)?;
    Ok(indexed
        .conjugacy_classes()
        .into_iter()
        .map(|class| PermSet {
            degree: g.degree,
            members: class.into_iter().map(|i| *indexed.element(i)).collect(),
            is_group: false,
        })
        .collect())
}

/// Number of elements of each order.
pub fn order_spectrum(g: &PermSet) -> Result<BTreeMap<u64, usize>> {
    require_group(g)?;
    let mut out = BTreeMap::new();
    for p in g {
        *out.entry(p.order()).or_insert(0) += 1;
    }
    Ok(out)
}

/// Outcome of a simplicity test on a permutation group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermSimplicity {
    Simple,
    NotSimple { normal_subgroup: PermSet },
}

impl PermSimplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, PermSimplicity::Simple)
    }
}

pub fn is_simple(g: &PermSet) -> Result<PermSimplicity> {
    is_simple_bounded(g, crate::findex::DEFAULT_CLASS_BOUND)
}

pub fn is_simple_bounded(g: &PermSet, class_bound: usize) -> Result<PermSimplicity> {
    require_group(g)?;
    let indexed = IndexedGroup::from_perm_set(g, false)?;
    Ok(match indexed.is_simple(class_bound)? {
        Simplicity::Simple => PermSimplicity::Simple,
        Simplicity::NotSimple(witness) => PermSimplicity::NotSimple {
            normal_subgroup: PermSet::group_from_sorted(
                g.degree,
                witness.into_iter().map(|i| *indexed.element(i)).collect(),
            ),
        },
    })
}
