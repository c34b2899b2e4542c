//! Commutative rings used as matrix entries when building tensor, symmetric
//! and exterior powers: F_p itself and the polynomial ring F_p[t].

use std::collections::HashMap;

use crate::fp::{add_mod, mul_mod, neg_mod, sub_mod, FpMatrix};
use crate::fppoly::FpPoly;

pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    /// Zero of the ring `self` lives in.
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub v: u32,
    pub p: u32,
}

impl Ring for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp {
            v: 1 % self.p,
            p: self.p,
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        Fp {
            v: add_mod(self.v, rhs.v, self.p),
            p: self.p,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Fp {
            v: sub_mod(self.v, rhs.v, self.p),
            p: self.p,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp {
            v: mul_mod(self.v, rhs.v, self.p),
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        Fp {
            v: neg_mod(self.v, self.p),
            p: self.p,
        }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
}

impl Ring for FpPoly {
    fn zero_like(&self) -> Self {
        FpPoly::zero(self.p())
    }
    fn one_like(&self) -> Self {
        FpPoly::one(self.p())
    }
    fn add(&self, rhs: &Self) -> Self {
        FpPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        FpPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        FpPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        FpPoly::neg(self)
    }
    fn is_zero(&self) -> bool {
        FpPoly::is_zero(self)
    }
}

/// Dense square-or-not matrix over a ring, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RMat<R> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<R>,
}

impl<R: Ring> RMat<R> {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RMat { rows, cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn identity(n: usize, like: &R) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                like.one_like()
            } else {
                like.zero_like()
            }
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = self.get(i, 0).zero_like();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(rhs.get(k, j)));
            }
            acc
        })
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols)
                .mul(rhs.get(i % rhs.rows, j % rhs.cols))
        })
    }

    pub fn direct_sum(&self, rhs: &Self) -> Self {
        let z = self
            .data
            .first()
            .or(rhs.data.first())
            .expect("nonempty")
            .zero_like();
        Self::from_fn(self.rows + rhs.rows, self.cols + rhs.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => rhs.get(i - self.rows, j - self.cols).clone(),
                _ => z.clone(),
            }
        })
    }
}

impl RMat<Fp> {
    pub fn from_fp(m: &FpMatrix) -> Self {
        let p = m.p();
        Self::from_fn(m.nrows(), m.ncols(), |i, j| Fp { v: m.get(i, j), p })
    }

    pub fn to_fp(&self, p: u32) -> FpMatrix {
        FpMatrix::from_rows(
            p,
            &(0..self.rows)
                .map(|i| (0..self.cols).map(|j| self.get(i, j).v).collect())
                .collect::<Vec<_>>(),
        )
    }
}

impl RMat<FpPoly> {
    /// Largest degree of an entry (0 for the zero matrix).
    pub fn max_degree(&self) -> usize {
        self.data
            .iter()
            .filter_map(|e| e.degree())
            .max()
            .unwrap_or(0)
    }
}

/// Exponent vectors of degree `n` in `d` variables, in decreasing lex order
/// (for `d = 2`: `x^n, x^{n-1} y, ..., y^n`).
pub fn monomials(d: usize, n: usize) -> Vec<Vec<u32>> {
    fn rec(d: usize, n: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if d == 1 {
            prefix.push(n as u32);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=n).rev() {
            prefix.push(a as u32);
            rec(d - 1, n - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(d, n, &mut Vec::new(), &mut out);
    out
}

/// Matrix of `g` on `Sym^n` of its module, in the monomial basis of
/// [`monomials`]: `x_j -> sum_i g[i][j] x_i`, extended multiplicatively.
pub fn sym_power_matrix<R: Ring>(g: &RMat<R>, n: usize, like: &R) -> RMat<R> {
    let d = g.rows;
    let basis = monomials(d, n);
    let index: HashMap<&[u32], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    let mut cols: Vec<Vec<R>> = Vec::with_capacity(basis.len());
    for mono in &basis {
        // product of the images of the variables, expanded
        let mut poly: HashMap<Vec<u32>, R> = HashMap::new();
        poly.insert(vec![0; d], like.one_like());
        for (j, &a) in mono.iter().enumerate() {
            for _ in 0..a {
                let mut next: HashMap<Vec<u32>, R> = HashMap::new();
                for (m, c) in &poly {
                    for i in 0..d {
                        let gij = g.get(i, j);
                        if gij.is_zero() {
                            continue;
                        }
                        let mut m2 = m.clone();
                        m2[i] += 1;
                        let term = c.mul(gij);
                        let e = next.entry(m2).or_insert_with(|| like.zero_like());
                        *e = e.add(&term);
                    }
                }
                poly = next;
            }
        }
        let mut col = vec![like.zero_like(); basis.len()];
        for (m, c) in poly {
            col[index[m.as_slice()]] = c;
        }
        cols.push(col);
    }
    RMat::from_fn(basis.len(), basis.len(), |i, j| cols[j][i].clone())
}

/// `i`-subsets of `0..d` as bitmasks, in lexicographic order of sorted tuples.
pub fn subsets(d: usize, i: usize) -> Vec<u64> {
    fn rec(start: usize, d: usize, left: usize, acc: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for s in start..d {
            if d - s < left {
                break;
            }
            rec(s + 1, d, left - 1, acc | 1 << s, out);
        }
    }
    assert!(d <= 64);
    let mut out = Vec::new();
    rec(0, d, i, 0, &mut out);
    out
}

/// Matrix of `g` on `Wedge^i`, basis `e_S` for sorted subsets `S`.
pub fn wedge_power_matrix<R: Ring>(g: &RMat<R>, i: usize, like: &R) -> RMat<R> {
    let d = g.rows;
    let basis = subsets(d, i);
    let index: HashMap<u64, usize> = basis.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let mut cols: Vec<Vec<R>> = Vec::with_capacity(basis.len());
    for &s in &basis {
        // g e_{s_1} ^ ... ^ g e_{s_i}, appended left to right
        let mut acc: HashMap<u64, R> = HashMap::new();
        acc.insert(0, like.one_like());
        for col in (0..d).filter(|c| s >> c & 1 == 1) {
            let mut next: HashMap<u64, R> = HashMap::new();
            for (&set, c) in &acc {
                for row in 0..d {
                    if set >> row & 1 == 1 {
                        continue;
                    }
                    let v = g.get(row, col);
                    if v.is_zero() {
                        continue;
                    }
                    // moving e_row into sorted position passes the larger elements
                    let larger = (set >> (row + 1)).count_ones();
                    let mut term = c.mul(v);
                    if larger % 2 == 1 {
                        term = term.neg();
                    }
                    let e = next
                        .entry(set | 1 << row)
                        .or_insert_with(|| like.zero_like());
                    *e = e.add(&term);
                }
            }
            acc = next;
        }
        let mut colv = vec![like.zero_like(); basis.len()];
        for (set, c) in acc {
            colv[index[&set]] = c;
        }
        cols.push(colv);
    }
    RMat::from_fn(basis.len(), basis.len(), |a, b| cols[b][a].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fpm(p: u32, rows: &[Vec<i64>]) -> RMat<Fp> {
        RMat::from_fp(&FpMatrix::from_i64_rows(p, rows))
    }

    #[test]
    fn monomial_and_subset_counts() {
        assert_eq!(
            monomials(2, 3),
            vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]
        );
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(4, 0), vec![0]);
    }

    #[test]
    fn sym_is_multiplicative() {
        let p = 7;
        let one = Fp { v: 1, p };
        let a = fpm(p, &[vec![1, 2], vec![3, 4]]);
        let b = fpm(p, &[vec![0, 5], vec![1, 6]]);
        for n in 0..5 {
            let lhs = sym_power_matrix(&a.mul(&b), n, &one);
            let rhs = sym_power_matrix(&a, n, &one).mul(&sym_power_matrix(&b, n, &one));
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn wedge_is_multiplicative_and_top_is_det() {
        let p = 5;
        let one = Fp { v: 1, p };
        let a = fpm(p, &[vec![1, 2, 0], vec![3, 4, 1], vec![0, 1, 1]]);
        let b = fpm(p, &[vec![2, 0, 1], vec![1, 1, 0], vec![4, 0, 3]]);
        for i in 0..=3 {
            let lhs = wedge_power_matrix(&a.mul(&b), i, &one);
            let rhs = wedge_power_matrix(&a, i, &one).mul(&wedge_power_matrix(&b, i, &one));
            assert_eq!(lhs, rhs, "i={i}");
        }
        let top = wedge_power_matrix(&a, 3, &one);
        assert_eq!(top.get(0, 0).v, a.to_fp(p).determinant());
    }
}
