//! Dense linear algebra over prime fields F_p.
//!
//! Entries are stored as `u32` residues in `0..p`. All routines are exact.

use std::fmt;

/// Multiplicative inverse of `a` modulo the prime `p`. Panics on zero.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    let a = a % p;
    assert!(a != 0, "zero has no inverse mod {p}");
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let p64 = p as u64;
    let mut acc: u64 = 1 % p64;
    let mut b = (base % p) as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p64;
        }
        b = b * b % p64;
        exp >>= 1;
    }
    acc as u32
}

#[inline]
pub fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub fn neg_mod(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

/// Reduce a signed integer into `0..p`.
#[inline]
pub fn reduce_i64(a: i64, p: u32) -> u32 {
    a.rem_euclid(p as i64) as u32
}

/// A dense matrix over F_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix(p={}, {}x{})", self.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Build from signed integer rows, reducing mod `p`.
    pub fn from_i64_rows(p: u32, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * c + j] = reduce_i64(v, p);
            }
        }
        m
    }

    pub fn from_rows(p: u32, rows: &[Vec<u32>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * c + j] = v % p;
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(p: u32, nrows: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(p, nrows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), nrows);
            for (i, &v) in col.iter().enumerate() {
                m.data[i * cols.len() + j] = v % p;
            }
        }
        m
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }
    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.p;
    }
    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }
    pub fn rows_vec(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.p, self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p, "field mismatch");
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let p = self.p as u64;
        let mut out = Self::zeros(self.p, self.rows, rhs.cols);
        let mut acc = vec![0u64; rhs.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let rrow = rhs.row(k);
                for (x, &b) in acc.iter_mut().zip(rrow) {
                    *x += a * b as u64;
                }
                // keep accumulators bounded
                if k % 1024 == 1023 {
                    acc.iter_mut().for_each(|x| *x %= p);
                }
            }
            for (j, x) in acc.iter().enumerate() {
                out.data[i * rhs.cols + j] = (x % p) as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.p as u64;
        (0..self.rows)
            .map(|i| {
                let s: u64 = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                (s % p) as u32
            })
            .collect()
    }

    /// Row vector times matrix: `v * self`.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let p = self.p as u64;
        let mut acc = vec![0u64; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (x, &b) in acc.iter_mut().zip(self.row(i)) {
                *x += a as u64 * b as u64;
            }
        }
        acc.into_iter().map(|x| (x % p) as u32).collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let p = self.p;
        FpMatrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| add_mod(a, b, p))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let p = self.p;
        FpMatrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| sub_mod(a, b, p))
                .collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.p;
        FpMatrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| mul_mod(a, c, p)).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.p, self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// Kronecker product; index `(i, k)` of the result is `i * rhs.dim + k`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let p = self.p;
        let (r1, c1, r2, c2) = (self.rows, self.cols, rhs.rows, rhs.cols);
        let mut out = Self::zeros(p, r1 * r2, c1 * c2);
        for i in 0..r1 {
            for j in 0..c1 {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        out.data[(i * r2 + k) * (c1 * c2) + j * c2 + l] =
                            mul_mod(a, rhs.get(k, l), p);
                    }
                }
            }
        }
        out
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.p, self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out.set(self.rows + i, self.cols + j, rhs.get(i, j));
            }
        }
        out
    }

    /// Stack rows of `rhs` below `self`.
    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        FpMatrix {
            p: self.p,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows);
        let mut out = Self::zeros(self.p, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            out.row_mut(i)[..self.cols].copy_from_slice(self.row(i));
            out.row_mut(i)[self.cols..].copy_from_slice(rhs.row(i));
        }
        out
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let mut out = Self::zeros(self.p, rows.len(), cols.len());
        for (oi, i) in rows.clone().enumerate() {
            for (oj, j) in cols.clone().enumerate() {
                out.data[oi * cols.len() + oj] = self.get(i, j);
            }
        }
        out
    }

    /// In-place reduced row echelon form. Returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..self.cols {
                    self.data.swap(piv * self.cols + j, r * self.cols + j);
                }
            }
            let inv = inv_mod(self.get(r, c), p);
            for j in c..self.cols {
                let v = mul_mod(self.get(r, j), inv, p);
                self.data[r * self.cols + j] = v;
            }
            let pivot_row: Vec<u32> = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c);
                if f == 0 {
                    continue;
                }
                let nf = neg_mod(f, p);
                let row = self.row_mut(i);
                for (x, &pv) in row[c..].iter_mut().zip(&pivot_row) {
                    *x = add_mod(*x, mul_mod(nf, pv, p), p);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place();
        (m, piv)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut e = RowEchelon::new(self.p, self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i).to_vec());
        }
        e.rank()
    }

    /// Basis of the right null space `{x : self * x = 0}`, one vector per entry.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let p = self.p;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1 % p;
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = neg_mod(r.get(ri, free), p);
            }
            basis.push(v);
        }
        basis
    }

    /// Left null space `{y : y * self = 0}`.
    pub fn left_nullspace(&self) -> Vec<Vec<u32>> {
        self.transpose().nullspace()
    }

    pub fn determinant(&self) -> u32 {
        assert!(self.is_square());
        let p = self.p;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1u32 % p;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&i| m.get(i, c) != 0) else {
                return 0;
            };
            if piv != c {
                for j in 0..n {
                    m.data.swap(piv * n + j, c * n + j);
                }
                det = neg_mod(det, p);
            }
            let d = m.get(c, c);
            det = mul_mod(det, d, p);
            let inv = inv_mod(d, p);
            for i in c + 1..n {
                let f = mul_mod(m.get(i, c), inv, p);
                if f == 0 {
                    continue;
                }
                for j in c..n {
                    let v = sub_mod(m.get(i, j), mul_mod(f, m.get(c, j), p), p);
                    m.data[i * n + j] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = self.hstack(&Self::identity(self.p, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.submatrix(0..n, n..2 * n))
    }

    /// Solve `self * X = rhs`. Returns one solution, or `None` if inconsistent.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows);
        let n = self.cols;
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = Self::zeros(self.p, n, rhs.cols);
        for (ri, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.get(ri, n + j));
            }
        }
        Some(x)
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> u32 {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| add_mod(acc, self.get(i, i), self.p))
    }
}

/// Streaming row echelon form: rows are inserted one at a time and reduced
/// against the pivots discovered so far. Pivot columns are assigned in order
/// of first touch.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    p: u32,
    ncols: usize,
    /// column -> index into `rows`
    pivot_of: Vec<Option<u32>>,
    /// (pivot column, normalized row tail starting at the pivot column)
    rows: Vec<(usize, Vec<u32>)>,
    scratch: Vec<u32>,
    lazy_limit: u32,
}

impl RowEchelon {
    pub fn new(p: u32, ncols: usize) -> Self {
        let sq = ((p - 1) as u64) * ((p - 1) as u64);
        let lazy_limit = if sq == 0 {
            u32::MAX
        } else {
            ((u32::MAX as u64 - p as u64) / sq.max(1)).min(u32::MAX as u64) as u32
        };
        RowEchelon {
            p,
            ncols,
            pivot_of: vec![None; ncols],
            rows: Vec::new(),
            scratch: vec![0; ncols],
            lazy_limit: lazy_limit.max(1),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Reduce `row` against the current pivots; the result is left in the
    /// internal scratch buffer. Returns the first nonzero column, if any.
    fn reduce_into_scratch(&mut self, row: &[u32]) -> Option<usize> {
        let p = self.p;
        assert_eq!(row.len(), self.ncols);
        self.scratch.copy_from_slice(row);
        let mut pending = 0u32;
        let mut c = 0;
        while c < self.ncols {
            let v = self.scratch[c] % p;
            self.scratch[c] = v;
            if v != 0 {
                match self.pivot_of[c] {
                    Some(ri) => {
                        let (_, tail) = &self.rows[ri as usize];
                        let f = p - v;
                        if pending >= self.lazy_limit {
                            for x in self.scratch[c..].iter_mut() {
                                *x %= p;
                            }
                            pending = 0;
                        }
                        for (x, &t) in self.scratch[c..].iter_mut().zip(tail.iter()) {
                            *x += f * t;
                        }
                        pending += 1;
                        self.scratch[c] %= p;
                        debug_assert_eq!(self.scratch[c], 0);
                    }
                    None => {
                        for x in self.scratch[c..].iter_mut() {
                            *x %= p;
                        }
                        return Some(c);
                    }
                }
            }
            c += 1;
        }
        None
    }

    /// Insert a row; returns `true` if it was independent of the current span.
    pub fn insert(&mut self, row: Vec<u32>) -> bool {
        match self.reduce_into_scratch(&row) {
            None => false,
            Some(c) => {
                let p = self.p;
                let inv = inv_mod(self.scratch[c], p);
                let tail: Vec<u32> = self.scratch[c..]
                    .iter()
                    .map(|&x| mul_mod(x, inv, p))
                    .collect();
                self.pivot_of[c] = Some(self.rows.len() as u32);
                self.rows.push((c, tail));
                true
            }
        }
    }

    /// Whether `row` lies in the current row span.
    pub fn contains(&mut self, row: &[u32]) -> bool {
        self.reduce_into_scratch(row).is_none()
    }

    /// Reduced form of `row` modulo the span (canonical only up to the pivot
    /// order, which is fixed for a given insertion history).
    pub fn reduce(&mut self, row: &[u32]) -> Vec<u32> {
        self.reduce_into_scratch(row);
        let p = self.p;
        self.scratch.iter().map(|&x| x % p).collect()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|(c, _)| *c).collect()
    }

    /// The stored basis as full-length rows.
    pub fn basis(&self) -> Vec<Vec<u32>> {
        self.rows
            .iter()
            .map(|(c, tail)| {
                let mut v = vec![0u32; self.ncols];
                v[*c..].copy_from_slice(tail);
                v
            })
            .collect()
    }
}

/// Basis of the span of `vectors` (rows), in echelon form.
pub fn span_basis(p: u32, dim: usize, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut e = RowEchelon::new(p, dim);
    for v in vectors {
        e.insert(v.clone());
    }
    e.basis()
}

/// Extend a basis of a subspace to a basis of F_p^dim by adding standard
/// vectors. Returns the added vectors.
pub fn complement_basis(p: u32, dim: usize, sub: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut e = RowEchelon::new(p, dim);
    for v in sub {
        e.insert(v.clone());
    }
    let mut extra = Vec::new();
    for i in 0..dim {
        if e.is_full() {
            break;
        }
        let mut v = vec![0u32; dim];
        v[i] = 1 % p;
        if e.insert(v.clone()) {
            extra.push(v);
        }
    }
    extra
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let m = FpMatrix::from_i64_rows(7, &[vec![1, 2, 3], vec![0, 1, 4], vec![5, 6, 0]]);
        let inv = m.inverse().expect("invertible");
        assert!(m.mul(&inv).is_identity());
        assert_eq!(m.determinant(), inv_mod(inv.determinant(), 7));
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = FpMatrix::from_i64_rows(5, &[vec![1, 2], vec![2, 4]]);
        assert!(m.inverse().is_none());
        assert_eq!(m.rank(), 1);
        assert_eq!(m.determinant(), 0);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(|&x| x == 0));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = FpMatrix::from_i64_rows(3, &[vec![1, 1], vec![1, 1]]);
        let b = FpMatrix::from_i64_rows(3, &[vec![1], vec![2]]);
        assert!(a.solve(&b).is_none());
        let b2 = FpMatrix::from_i64_rows(3, &[vec![2], vec![2]]);
        let x = a.solve(&b2).unwrap();
        assert_eq!(a.mul(&x), b2);
    }

    #[test]
    fn streaming_echelon_matches_rref_rank() {
        let p = 5;
        let rows: Vec<Vec<u32>> = (0..12u32)
            .map(|i| (0..9u32).map(|j| (i * i + 3 * j + i * j) % p).collect())
            .collect();
        let m = FpMatrix::from_rows(p, &rows);
        let (_, piv) = m.rref();
        assert_eq!(m.rank(), piv.len());
        let mut e = RowEchelon::new(p, 9);
        for r in &rows {
            e.insert(r.clone());
        }
        for r in &rows {
            assert!(e.contains(r));
        }
    }

    #[test]
    fn kron_mixed_product() {
        let p = 11;
        let a = FpMatrix::from_i64_rows(p, &[vec![1, 2], vec![3, 4]]);
        let b = FpMatrix::from_i64_rows(p, &[vec![0, 1, 2], vec![1, 0, 1], vec![5, 5, 1]]);
        let c = FpMatrix::from_i64_rows(p, &[vec![2, 7], vec![1, 1]]);
        let d = FpMatrix::from_i64_rows(p, &[vec![1, 1, 0], vec![0, 3, 1], vec![2, 0, 1]]);
        assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn complement_extends_to_full_basis() {
        let p = 3;
        let sub = vec![vec![1, 1, 0, 0], vec![0, 1, 1, 0]];
        let extra = complement_basis(p, 4, &sub);
        assert_eq!(extra.len(), 2);
        let mut all = sub.clone();
        all.extend(extra);
        assert_eq!(FpMatrix::from_rows(p, &all).rank(), 4);
    }
}
