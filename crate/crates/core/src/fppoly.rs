//! Univariate polynomials over F_p: arithmetic, characteristic polynomials
//! and factorization into distinct irreducibles (DDF + equal-degree splitting).

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;

use crate::fp::{add_mod, inv_mod, mul_mod, neg_mod, sub_mod, FpMatrix};

/// Coefficients in increasing degree, no trailing zeros (zero is `[]`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u32,
    c: Vec<u32>,
}

impl FpPoly {
    pub fn new(p: u32, mut c: Vec<u32>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    pub fn zero(p: u32) -> Self {
        FpPoly { p, c: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u32) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn constant(p: u32, a: u32) -> Self {
        Self::new(p, vec![a])
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> u32 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lead(), self.p))
    }

    pub fn scale(&self, a: u32) -> Self {
        Self::new(
            self.p,
            self.c.iter().map(|&x| mul_mod(x, a, self.p)).collect(),
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| add_mod(self.coeff(i), rhs.coeff(i), self.p))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| sub_mod(self.coeff(i), rhs.coeff(i), self.p))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.p, self.c.iter().map(|&x| neg_mod(x, self.p)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u64;
        let mut out = vec![0u64; self.c.len() + rhs.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.c.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        Self::new(self.p, out.into_iter().map(|x| x as u32).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let p = self.p;
        if self.c.len() < d.c.len() {
            return (Self::zero(p), self.clone());
        }
        let dd = d.c.len() - 1;
        let inv = inv_mod(d.lead(), p);
        let mut r = self.c.clone();
        let mut q = vec![0u32; self.c.len() - dd];
        for k in (0..q.len()).rev() {
            let f = mul_mod(r[k + dd], inv, p);
            q[k] = f;
            if f != 0 {
                for (j, &b) in d.c.iter().enumerate() {
                    r[k + j] = sub_mod(r[k + j], mul_mod(f, b, p), p);
                }
            }
        }
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| mul_mod(a, (i as u32) % p, p))
                .collect(),
        )
    }

    pub fn mul_mod_poly(&self, rhs: &Self, m: &Self) -> Self {
        self.mul(rhs).rem(m)
    }

    pub fn pow_mod_poly(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod_poly(&acc, m);
            if e.bit(i) {
                acc = acc.mul_mod_poly(&base, m);
            }
        }
        acc
    }

    pub fn eval(&self, x: u32) -> u32 {
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &a| add_mod(mul_mod(acc, x, self.p), a, self.p))
    }

    /// `f(M)` by Horner's rule.
    pub fn eval_matrix(&self, m: &FpMatrix) -> FpMatrix {
        let n = m.nrows();
        let mut acc = FpMatrix::zeros(self.p, n, n);
        let id = FpMatrix::identity(self.p, n);
        for &a in self.c.iter().rev() {
            acc = acc.mul(m).add(&id.scale(a));
        }
        acc
    }

    /// For `f(x) = g(x^p)` returns `h` with `h^p = f` (coefficients are fixed
    /// by Frobenius on F_p).
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        Self::new(self.p, self.c.iter().step_by(p).copied().collect())
    }
}

/// Characteristic polynomial `det(x I - M)` via reduction to upper Hessenberg
/// form followed by the standard recurrence.
pub fn charpoly(m: &FpMatrix) -> FpPoly {
    assert!(m.is_square());
    let p = m.p();
    let n = m.nrows();
    let mut h = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h.get(i, j) != 0) else {
            continue;
        };
        if piv != j + 1 {
            swap_rows(&mut h, piv, j + 1);
            swap_cols(&mut h, piv, j + 1);
        }
        let inv = inv_mod(h.get(j + 1, j), p);
        for i in j + 2..n {
            let f = mul_mod(h.get(i, j), inv, p);
            if f == 0 {
                continue;
            }
            // row_i -= f row_{j+1}; col_{j+1} += f col_i
            for c in 0..n {
                let v = sub_mod(h.get(i, c), mul_mod(f, h.get(j + 1, c), p), p);
                h.set(i, c, v);
            }
            for r in 0..n {
                let v = add_mod(h.get(r, j + 1), mul_mod(f, h.get(r, i), p), p);
                h.set(r, j + 1, v);
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik * prod_{m=i+1}^{k} h_{m,m-1} * p_{i-1}
    let mut polys: Vec<FpPoly> = vec![FpPoly::one(p)];
    for k in 0..n {
        let mut pk = FpPoly::new(p, vec![neg_mod(h.get(k, k), p), 1]).mul(&polys[k]);
        let mut prod = 1u32;
        for i in (0..k).rev() {
            prod = mul_mod(prod, h.get(i + 1, i), p);
            if prod == 0 {
                break;
            }
            let coef = mul_mod(h.get(i, k), prod, p);
            if coef != 0 {
                pk = pk.sub(&polys[i].scale(coef));
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

fn swap_rows(m: &mut FpMatrix, a: usize, b: usize) {
    for c in 0..m.ncols() {
        let (x, y) = (m.get(a, c), m.get(b, c));
        m.set(a, c, y);
        m.set(b, c, x);
    }
}

fn swap_cols(m: &mut FpMatrix, a: usize, b: usize) {
    for r in 0..m.nrows() {
        let (x, y) = (m.get(r, a), m.get(r, b));
        m.set(r, a, y);
        m.set(r, b, x);
    }
}

/// Distinct monic irreducible factors of `f`, sorted by (degree, coefficients).
pub fn distinct_irreducible_factors<R: Rng>(f: &FpPoly, rng: &mut R) -> Vec<FpPoly> {
    let mut out = Vec::new();
    collect_factors(&f.monic(), rng, &mut out);
    out.sort_by(|a, b| (a.c.len(), &a.c).cmp(&(b.c.len(), &b.c)));
    out.dedup();
    out
}

fn collect_factors<R: Rng>(f: &FpPoly, rng: &mut R, out: &mut Vec<FpPoly>) {
    if f.deg_or_zero() == 0 {
        return;
    }
    let df = f.derivative();
    if df.is_zero() {
        collect_factors(&f.pth_root().monic(), rng, out);
        return;
    }
    let g = f.gcd(&df);
    let w = f.div_rem(&g).0.monic();
    split_squarefree(&w, rng, out);
    collect_factors(&g, rng, out);
}

fn split_squarefree<R: Rng>(f: &FpPoly, rng: &mut R, out: &mut Vec<FpPoly>) {
    let p = f.p;
    let mut w = f.clone();
    let x = FpPoly::x(p);
    let mut h = x.rem(&w);
    let mut d = 1;
    while w.deg_or_zero() >= 2 * d {
        h = h.pow_mod_poly(&BigUint::from(p), &w);
        let g = w.gcd(&h.sub(&x));
        if g.deg_or_zero() > 0 {
            equal_degree_split(&g, d, rng, out);
            w = w.div_rem(&g).0.monic();
            h = h.rem(&w);
        }
        d += 1;
    }
    if w.deg_or_zero() > 0 {
        out.push(w.monic());
    }
}

fn equal_degree_split<R: Rng>(f: &FpPoly, d: usize, rng: &mut R, out: &mut Vec<FpPoly>) {
    let p = f.p;
    let n = f.deg_or_zero();
    if n == d {
        out.push(f.monic());
        return;
    }
    let exp: BigUint = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1usize;
    loop {
        let a = FpPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.deg_or_zero() == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul_mod_poly(&t, f);
                acc = acc.add(&t);
            }
            acc
        } else {
            debug_assert!(!exp.is_zero());
            a.pow_mod_poly(&exp, f).sub(&FpPoly::one(p))
        };
        let g = f.gcd(&b);
        let dg = g.deg_or_zero();
        if dg > 0 && dg < n {
            let q = f.div_rem(&g).0.monic();
            equal_degree_split(&g, d, rng, out);
            equal_degree_split(&q, d, rng, out);
            return;
        }
    }
}
