//! Linear algebra over F2 on word-packed bit vectors.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A vector in `F2^len`, packed little-endian into `u64` words. Padding bits
/// past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector { len, words: vec![0; len.div_ceil(WORD)] }
    }

    /// The standard basis vector `e_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = BitVector::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v = BitVector::zeros(len);
        for i in indices {
            if i >= len {
                return Err(Error::IndexOutOfRange { index: i, size: len });
            }
            v.flip(i);
        }
        Ok(v)
    }

    /// Low `len` bits of `bits`.
    pub fn from_word(len: usize, bits: u64) -> Self {
        assert!(len <= WORD);
        let mut v = BitVector::zeros(len);
        if len > 0 {
            v.words[0] = if len == WORD { bits } else { bits & ((1u64 << len) - 1) };
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> Result<BitVector> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len, other.len));
        }
        let mut out = self.clone();
        out.xor_assign(other);
        Ok(out)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn lowest_set_bit(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    /// Indices of set bits in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD + t)
            })
        })
    }

    /// Moves coordinate `i` to `map[i]`. `map` must be a permutation.
    pub fn permuted(&self, map: &[u32]) -> BitVector {
        debug_assert_eq!(map.len(), self.len);
        let mut out = BitVector::zeros(self.len);
        for i in self.ones() {
            out.set(map[i] as usize, true);
        }
        out
    }

    /// Inner product over F2.
    pub fn dot(&self, other: &BitVector) -> bool {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "BitVector({s})")
    }
}

/// A fully reduced row-echelon basis of a subspace of `F2^len`. Each row's
/// pivot is its lowest set bit, pivots increase, and every pivot column is
/// zero in all other rows, so the basis of a subspace is unique.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EchelonBasis {
    len: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
    // row index by pivot column, usize::MAX when the column is free
    pivot_row: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis { len, rows: Vec::new(), pivots: Vec::new(), pivot_row: vec![usize::MAX; len] }
    }

    pub fn from_vectors<'a>(len: usize, vectors: impl IntoIterator<Item = &'a BitVector>) -> Result<Self> {
        let mut b = EchelonBasis::new(len);
        for v in vectors {
            b.insert(v)?;
        }
        Ok(b)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != usize::MAX
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.len).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// Canonical representative of `v + span`: zero in every pivot column.
    pub fn reduce(&self, v: &BitVector) -> Result<BitVector> {
        self.check_len(v)?;
        let mut out = v.clone();
        self.reduce_in_place(&mut out);
        Ok(out)
    }

    pub(crate) fn reduce_in_place(&self, v: &mut BitVector) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    /// Canonical form of the basis vector `e_col`, without a full pass.
    pub fn reduce_unit(&self, col: usize) -> BitVector {
        match self.pivot_row[col] {
            usize::MAX => BitVector::unit(self.len, col),
            r => {
                let mut v = self.rows[r].clone();
                v.flip(col);
                v
            }
        }
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Adds `v` to the span; returns whether the span grew.
    pub fn insert(&mut self, v: &BitVector) -> Result<bool> {
        self.check_len(v)?;
        let mut r = v.clone();
        self.reduce_in_place(&mut r);
        Ok(self.insert_reduced(r))
    }

    /// Inserts a vector already reduced against this basis.
    pub(crate) fn insert_reduced(&mut self, r: BitVector) -> bool {
        let Some(p) = r.lowest_set_bit() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        for (k, &q) in self.pivots.iter().enumerate().skip(at) {
            self.pivot_row[q] = k;
        }
        true
    }

    fn check_len(&self, v: &BitVector) -> Result<()> {
        if v.len() != self.len {
            Err(Error::LengthMismatch(self.len, v.len()))
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for EchelonBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EchelonBasis")
            .field("len", &self.len)
            .field("rank", &self.rows.len())
            .field("pivots", &self.pivots)
            .finish()
    }
}

/// A dense matrix over F2 stored as rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    ncols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        BitMatrix { ncols, rows: vec![BitVector::zeros(ncols); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        BitMatrix { ncols: n, rows: (0..n).map(|i| BitVector::unit(n, i)).collect() }
    }

    pub fn from_rows(ncols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::LengthMismatch(ncols, r.len()));
        }
        Ok(BitMatrix { ncols, rows })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn rank(&self) -> usize {
        EchelonBasis::from_vectors(self.ncols, &self.rows).expect("uniform rows").rank()
    }

    pub fn is_invertible(&self) -> Result<bool> {
        if self.nrows() != self.ncols {
            return Err(Error::NotSquare { rows: self.nrows(), cols: self.ncols });
        }
        Ok(self.rank() == self.ncols)
    }

    /// The unique `x` with `M x = b` for square invertible `M`, else `None`.
    pub fn solve(&self, b: &BitVector) -> Result<Option<BitVector>> {
        let n = self.ncols;
        if self.nrows() != n {
            return Err(Error::NotSquare { rows: self.nrows(), cols: n });
        }
        if b.len() != n {
            return Err(Error::LengthMismatch(n, b.len()));
        }
        // Gauss-Jordan on [M | b]; column n holds the right-hand side
        let mut rows: Vec<BitVector> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut a = BitVector::zeros(n + 1);
                for c in r.ones() {
                    a.set(c, true);
                }
                a.set(n, b.get(i));
                a
            })
            .collect();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| rows[r].get(col)) else {
                return Ok(None);
            };
            rows.swap(col, p);
            let pivot = rows[col].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != col && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
        }
        let mut x = BitVector::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            x.set(i, row.get(n));
        }
        Ok(Some(x))
    }

    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.ncols {
            return Err(Error::LengthMismatch(self.ncols, v.len()));
        }
        let mut out = BitVector::zeros(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            out.set(i, r.dot(v));
        }
        Ok(out)
    }
}

pub fn is_invertible(m: &BitMatrix) -> Result<bool> {
    m.is_invertible()
}

// Small dense helpers for dimensions up to 64, one `u64` per vector.

/// Rank of a list of vectors in `F2^d`, `d <= 64`.
pub fn word_rank(vectors: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &v in vectors {
        let mut r = v;
        for &b in &basis {
            // each basis word has a distinct top bit, kept in decreasing order
            r = r.min(r ^ b);
        }
        if r != 0 {
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// `M v` where `columns[i]` is the image of `e_i`.
pub fn word_apply(columns: &[u64], v: u64) -> u64 {
    let mut out = 0;
    let mut bits = v;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        out ^= columns[i];
        bits &= bits - 1;
    }
    out
}

/// Inverse of the `d x d` matrix given by its columns, if it exists.
pub fn word_invert(columns: &[u64]) -> Option<Vec<u64>> {
    let d = columns.len();
    // rows of [M | I]: row r holds M[r][*] in bits 0..d and I[r][*] in bits d..2d
    let mut rows: Vec<u128> = (0..d)
        .map(|r| {
            let mut w = 0u128;
            for (c, col) in columns.iter().enumerate() {
                if col >> r & 1 == 1 {
                    w |= 1 << c;
                }
            }
            w | 1u128 << (d + r)
        })
        .collect();
    for col in 0..d {
        let p = (col..d).find(|&r| rows[r] >> col & 1 == 1)?;
        rows.swap(col, p);
        let pivot = rows[col];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && *row >> col & 1 == 1 {
                *row ^= pivot;
            }
        }
    }
    // row r of the inverse is rows[r] >> d; transpose back to columns
    let mut inv = vec![0u64; d];
    for (r, row) in rows.iter().enumerate() {
        for (c, slot) in inv.iter_mut().enumerate() {
            if row >> (d + c) & 1 == 1 {
                *slot |= 1 << r;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_vec(rng: &mut StdRng, len: usize) -> BitVector {
        BitVector::from_indices(len, (0..len).filter(|_| rng.gen_bool(0.5))).unwrap()
    }

    /// All vectors in the span of `gens`, by enumerating coefficient choices.
    fn span_oracle(len: usize, gens: &[BitVector]) -> Vec<BitVector> {
        let mut out: Vec<BitVector> = (0u32..1 << gens.len())
            .map(|mask| {
                let mut v = BitVector::zeros(len);
                for (i, g) in gens.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        v.xor_assign(g);
                    }
                }
                v
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn reduce_basics() {
        let v = BitVector::from_indices(7, [1, 4]).unwrap();
        assert_eq!(EchelonBasis::new(7).reduce(&v).unwrap(), v);
        let mut rng = StdRng::seed_from_u64(1);
        let mut b = EchelonBasis::new(70);
        for _ in 0..20 {
            b.insert(&random_vec(&mut rng, 70)).unwrap();
        }
        for r in b.rows() {
            assert!(b.reduce(r).unwrap().is_zero());
        }
        for _ in 0..50 {
            let u = random_vec(&mut rng, 70);
            let w = random_vec(&mut rng, 70);
            let lhs = b.reduce(&u.xor(&w).unwrap()).unwrap();
            let rhs = b.reduce(&u).unwrap().xor(&b.reduce(&w).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
        assert!(matches!(b.reduce(&BitVector::zeros(3)), Err(Error::LengthMismatch(70, 3))));
    }

    #[test]
    fn insert_examples() {
        let mut b = EchelonBasis::new(6);
        assert!(!b.insert(&BitVector::zeros(6)).unwrap());
        assert_eq!(b.rank(), 0);

        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let gens: Vec<BitVector> = (0..3).map(|_| random_vec(&mut rng, 6)).collect();
            let basis = EchelonBasis::from_vectors(6, &gens).unwrap();
            let span = span_oracle(6, &gens);
            assert_eq!(1usize << basis.rank(), span.len());
        }

        let mut b = EchelonBasis::new(6);
        for i in 0..6 {
            assert!(b.insert(&BitVector::unit(6, i)).unwrap());
        }
        assert_eq!(b.rank(), 6);
    }

    #[test]
    fn fully_reduced_invariant() {
        let mut rng = StdRng::seed_from_u64(3);
        let mut b = EchelonBasis::new(130);
        for _ in 0..40 {
            b.insert(&random_vec(&mut rng, 130)).unwrap();
            for (i, (row, &p)) in b.rows().iter().zip(b.pivots()).enumerate() {
                assert_eq!(row.lowest_set_bit(), Some(p));
                for (j, other) in b.rows().iter().enumerate() {
                    if i != j {
                        assert!(!other.get(p));
                    }
                }
            }
            assert!(b.pivots().windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn reduce_unit_matches_reduce() {
        let mut rng = StdRng::seed_from_u64(11);
        let mut b = EchelonBasis::new(90);
        for _ in 0..30 {
            b.insert(&random_vec(&mut rng, 90)).unwrap();
        }
        for c in 0..90 {
            assert_eq!(b.reduce_unit(c), b.reduce(&BitVector::unit(90, c)).unwrap());
        }
    }

    #[test]
    fn invertibility() {
        assert!(BitMatrix::identity(5).is_invertible().unwrap());
        assert!(!BitMatrix::zeros(3, 3).is_invertible().unwrap());
        assert!(matches!(BitMatrix::zeros(2, 3).is_invertible(), Err(Error::NotSquare { .. })));
        // GL_4(F2) by enumerating all 2^16 matrices
        let count = (0u32..1 << 16)
            .filter(|&m| {
                let rows = (0..4).map(|r| BitVector::from_word(4, (m >> (4 * r) & 0xf) as u64)).collect();
                is_invertible(&BitMatrix::from_rows(4, rows).unwrap()).unwrap()
            })
            .count();
        assert_eq!(count, (16 - 1) * (16 - 2) * (16 - 4) * (16 - 8));
        assert_eq!(count, 20160);
    }

    #[test]
    fn solve_recovers_solution() {
        let mut rng = StdRng::seed_from_u64(5);
        let mut solved = 0;
        for _ in 0..50 {
            let rows = (0..8).map(|_| random_vec(&mut rng, 8)).collect();
            let m = BitMatrix::from_rows(8, rows).unwrap();
            let x = random_vec(&mut rng, 8);
            let b = m.mul_vec(&x).unwrap();
            match m.solve(&b).unwrap() {
                Some(y) => {
                    assert!(m.is_invertible().unwrap());
                    assert_eq!(y, x);
                    solved += 1;
                }
                None => assert!(!m.is_invertible().unwrap()),
            }
        }
        assert!(solved > 0);
    }

    #[test]
    fn word_helpers() {
        assert_eq!(word_rank(&[0b011, 0b110, 0b101]), 2);
        assert_eq!(word_rank(&[1, 2, 4, 8]), 4);
        let m = [0b01u64, 0b11];
        let inv = word_invert(&m).unwrap();
        for v in 0..4 {
            assert_eq!(word_apply(&inv, word_apply(&m, v)), v);
        }
        assert!(word_invert(&[0b11, 0b11]).is_none());
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..100 {
            let cols: Vec<u64> = (0..6).map(|_| rng.gen_range(0..64)).collect();
            match word_invert(&cols) {
                Some(inv) => {
                    assert_eq!(word_rank(&cols), 6);
                    for v in 0..64 {
                        assert_eq!(word_apply(&cols, word_apply(&inv, v)), v);
                    }
                }
                None => assert!(word_rank(&cols) < 6),
            }
        }
    }

    #[test]
    fn coset_classification_small_dimension() {
        // reduce(u) = reduce(w) iff u + w in span, checked over all of F2^6
        let mut rng = StdRng::seed_from_u64(13);
        for _ in 0..5 {
            let gens: Vec<BitVector> = (0..3).map(|_| random_vec(&mut rng, 6)).collect();
            let b = EchelonBasis::from_vectors(6, &gens).unwrap();
            let span = span_oracle(6, &gens);
            for u in 0u64..64 {
                for w in 0u64..64 {
                    let (u, w) = (BitVector::from_word(6, u), BitVector::from_word(6, w));
                    let same = b.reduce(&u).unwrap() == b.reduce(&w).unwrap();
                    assert_eq!(same, span.contains(&u.xor(&w).unwrap()));
                }
            }
        }
    }
}
