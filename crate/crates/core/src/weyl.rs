//! Weyl groups as integer matrix groups on the simple-root lattice.
//!
//! Elements are enumerated along the canonical tree of the orbit of `rho`
//! (weight coordinates `(1, ..., 1)`): the parent of `w != 1` is `s_i w`
//! for the least `i` with `(w rho)_i < 0`. The tree is walked depth first
//! and the matrix of each node is obtained from its parent by a single row
//! update, so no group multiplication or membership test is ever needed.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::intpoly::{cyclotomic_factorization, poincare_product, IntPoly};
use crate::rootsys::RootSystem;

pub const MAX_RANK: usize = 8;
pub const DEFAULT_BUDGET: u64 = 5_000_000;
pub const BUDGET_ENV: &str = "FINSUB_BUDGET";

/// Element budget from the environment, falling back to [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Row-major `r x r` integer matrix acting on column vectors of simple-root
/// coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylElement {
    r: usize,
    m: [i32; MAX_RANK * MAX_RANK],
}

impl std::fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl WeylElement {
    pub fn identity(r: usize) -> Self {
        assert!(r <= MAX_RANK);
        let mut m = [0; MAX_RANK * MAX_RANK];
        for i in 0..r {
            m[i * r + i] = 1;
        }
        WeylElement { r, m }
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.m[i * self.r + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.r)
            .map(|i| (0..self.r).map(|j| self.get(i, j) as i64).collect())
            .collect()
    }

    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        Self::identity(rs.rank()).left_mul_simple(rs, i)
    }

    /// Reflection in an arbitrary root `beta` (simple-root coordinates).
    pub fn root_reflection(rs: &RootSystem, beta: &[i64]) -> Self {
        let r = rs.rank();
        let neg: Vec<i64> = beta.iter().map(|x| -x).collect();
        let k = rs
            .positive_roots
            .iter()
            .position(|b| b.as_slice() == beta || *b == neg)
            .expect("not a root");
        let cor = &rs.positive_coroots[k];
        let mut m = [0; MAX_RANK * MAX_RANK];
        // s(gamma) = gamma - <gamma, beta^vee> beta, <alpha_j, beta^vee> = sum_l A[j][l] cor_l
        for j in 0..r {
            let pair: i64 = (0..r).map(|l| rs.cartan_matrix[j][l] * cor[l]).sum();
            for i in 0..r {
                let delta = if i == j { 1 } else { 0 };
                m[i * r + j] = (delta - pair * beta[i]) as i32;
            }
        }
        WeylElement { r, m }
    }

    /// `s_i * self`: only row `i` changes, `row_i -= sum_j A[j][i] row_j`.
    #[inline]
    pub fn left_mul_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let r = self.r;
        let mut out = *self;
        for j in 0..r {
            let a = rs.cartan_matrix[j][i] as i32;
            if a == 0 {
                continue;
            }
            for c in 0..r {
                out.m[i * r + c] -= a * self.m[j * r + c];
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let r = self.r;
        let mut m = [0; MAX_RANK * MAX_RANK];
        for i in 0..r {
            for k in 0..r {
                let a = self.m[i * r + k];
                if a == 0 {
                    continue;
                }
                for j in 0..r {
                    m[i * r + j] += a * rhs.m[k * r + j];
                }
            }
        }
        WeylElement { r, m }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.r)
            .map(|i| (0..self.r).map(|j| self.get(i, j) as i64 * v[j]).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.r)
    }

    /// `det(x I - w)` by Faddeev-LeVerrier in exact integers.
    pub fn charpoly(&self) -> IntPoly {
        let r = self.r;
        let mut c = [0i64; MAX_RANK + 1];
        c[0] = 1;
        let mut mk = [0i64; MAX_RANK * MAX_RANK];
        let mut wm = [0i64; MAX_RANK * MAX_RANK];
        for k in 1..=r {
            // M_k = W M_{k-1} + c_{k-1} I, with M_0 = 0
            for i in 0..r {
                for j in 0..r {
                    let mut s = 0i64;
                    for l in 0..r {
                        s += self.m[i * r + l] as i64 * mk[l * r + j];
                    }
                    wm[i * r + j] = s;
                }
            }
            for i in 0..r {
                wm[i * r + i] += c[k - 1];
            }
            mk = wm;
            // c_k = -tr(W M_k) / k
            let mut tr = 0i64;
            for i in 0..r {
                for l in 0..r {
                    tr += self.m[i * r + l] as i64 * mk[l * r + i];
                }
            }
            debug_assert_eq!(tr % k as i64, 0);
            c[k] = -tr / k as i64;
        }
        IntPoly::new((0..=r).map(|k| c[r - k]).collect())
    }

    pub fn determinant(&self) -> i64 {
        let cp = self.charpoly();
        let c0 = cp.coeffs()[0];
        if self.r % 2 == 0 {
            c0
        } else {
            -c0
        }
    }

    /// Multiplicative order, found by repeated multiplication.
    pub fn order(&self) -> u64 {
        let mut x = *self;
        let mut n = 1;
        while !x.is_identity() {
            x = x.mul(self);
            n += 1;
        }
        n
    }
}

/// Orders of the eigenvalues of `w`: the `m` with `Phi_m | det(x - w)`.
pub fn eigenvalue_orders(w: &WeylElement) -> Result<BTreeSet<u64>> {
    orders_of_charpoly(&w.charpoly())
}

pub fn orders_of_charpoly(f: &IntPoly) -> Result<BTreeSet<u64>> {
    let (mult, rest) = cyclotomic_factorization(f);
    if !rest.is_one() {
        return Err(Error::Internal(format!(
            "characteristic polynomial {:?} is not a product of cyclotomics",
            f.coeffs()
        )));
    }
    Ok(mult.keys().copied().collect())
}

fn check_budget(rs: &RootSystem, budget: u64) -> Result<()> {
    if rs.weyl_order > BigUint::from(budget) {
        return Err(Error::Budget {
            what: format!("W({})", rs.cartan_type),
            needed: rs.weyl_order.to_string(),
            budget: budget.to_string(),
        });
    }
    Ok(())
}

#[derive(Clone, Copy)]
struct Node {
    mu: [i32; MAX_RANK],
    w: WeylElement,
}

impl Node {
    fn root(r: usize) -> Self {
        let mut mu = [0; MAX_RANK];
        mu[..r].fill(1);
        Node {
            mu,
            w: WeylElement::identity(r),
        }
    }

    /// Canonical children `s_i w` for `mu_i > 0`.
    fn for_each_child(&self, rs: &RootSystem, mut f: impl FnMut(Node)) {
        let r = rs.rank();
        for i in 0..r {
            let mi = self.mu[i];
            if mi <= 0 {
                continue;
            }
            let mut nu = self.mu;
            for j in 0..r {
                nu[j] -= mi * rs.cartan_matrix[i][j] as i32;
            }
            if (0..i).any(|j| nu[j] < 0) {
                continue;
            }
            f(Node {
                mu: nu,
                w: self.w.left_mul_simple(rs, i),
            });
        }
    }

    fn walk(&self, rs: &RootSystem, f: &mut impl FnMut(&WeylElement)) {
        f(&self.w);
        self.for_each_child(rs, |c| c.walk(rs, f));
    }
}

/// Sequential stream over all elements, in canonical depth-first order.
pub struct WeylIter<'a> {
    rs: &'a RootSystem,
    stack: Vec<Node>,
}

impl Iterator for WeylIter<'_> {
    type Item = WeylElement;

    fn next(&mut self) -> Option<WeylElement> {
        let node = self.stack.pop()?;
        let mut kids = Vec::new();
        node.for_each_child(self.rs, |c| kids.push(c));
        self.stack.extend(kids.into_iter().rev());
        Some(node.w)
    }
}

pub fn enumerate_weyl(rs: &RootSystem, budget: u64) -> Result<WeylIter<'_>> {
    check_budget(rs, budget)?;
    Ok(WeylIter {
        rs,
        stack: vec![Node::root(rs.rank())],
    })
}

/// Parallel fold over all elements. `fold` and `merge` must form a
/// commutative monoid action for the result to be schedule independent.
pub fn fold_weyl<T, I, F, M>(rs: &RootSystem, budget: u64, init: I, fold: F, merge: M) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &WeylElement) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    check_budget(rs, budget)?;
    let mut shallow = init();
    let mut frontier = vec![Node::root(rs.rank())];
    while !frontier.is_empty() && frontier.len() < 256 {
        let mut next = Vec::new();
        for n in &frontier {
            fold(&mut shallow, &n.w);
            n.for_each_child(rs, |c| next.push(c));
        }
        frontier = next;
    }
    let deep = frontier
        .par_iter()
        .map(|n| {
            let mut acc = init();
            n.walk(rs, &mut |w| fold(&mut acc, w));
            acc
        })
        .reduce(&init, &merge);
    Ok(merge(shallow, deep))
}

/// Element counts grouped by characteristic polynomial.
pub fn charpoly_classes(rs: &RootSystem, budget: u64) -> Result<BTreeMap<IntPoly, u64>> {
    let counts = fold_weyl(
        rs,
        budget,
        HashMap::<IntPoly, u64>::new,
        |acc, w| *acc.entry(w.charpoly()).or_insert(0) += 1,
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    )?;
    let total: u64 = counts.values().sum();
    if BigUint::from(total) != rs.weyl_order {
        return Err(Error::Internal(format!(
            "enumerated {total} elements of W({}), expected {}",
            rs.cartan_type, rs.weyl_order
        )));
    }
    Ok(counts.into_iter().collect())
}

pub fn degree_divisors(degrees: &[u32]) -> BTreeSet<u64> {
    degrees.iter().flat_map(|&d| divisors(d as u64)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SpringerReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub orders_found: Vec<u64>,
    pub degrees: Vec<u32>,
    pub degree_divisors: Vec<u64>,
    pub equal: bool,
    /// False when only the degrees-to-orders direction was checked, by witnesses.
    pub authoritative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<BTreeMap<u64, String>>,
}

/// Both directions of Springer's criterion by exhaustive enumeration.
pub fn springer_check(rs: &RootSystem, budget: u64) -> Result<SpringerReport> {
    let classes = charpoly_classes(rs, budget)?;
    let mut found = BTreeSet::new();
    for f in classes.keys() {
        found.extend(orders_of_charpoly(f)?);
    }
    let divs = degree_divisors(&rs.degrees);
    Ok(SpringerReport {
        cartan_type: rs.cartan_type.to_string(),
        rank: rs.rank(),
        equal: found == divs,
        orders_found: found.into_iter().collect(),
        degrees: rs.degrees.clone(),
        degree_divisors: divs.into_iter().collect(),
        authoritative: true,
        witnesses: None,
    })
}

/// Product `s_{i_1} ... s_{i_k}` of simple reflections.
pub fn word(rs: &RootSystem, letters: &[usize]) -> WeylElement {
    letters
        .iter()
        .rev()
        .fold(WeylElement::identity(rs.rank()), |acc, &i| {
            acc.left_mul_simple(rs, i)
        })
}

pub fn coxeter_element(rs: &RootSystem) -> WeylElement {
    word(rs, &(0..rs.rank()).collect::<Vec<_>>())
}

/// Springer's criterion in the degrees-to-orders direction only: for every
/// divisor `m` of a degree, find some element with an eigenvalue of order
/// `m`. Candidates are powers of Coxeter elements of the subsystems spanned
/// by subsets of the extended simple roots, then seeded random words.
pub fn springer_witnesses(
    rs: &RootSystem,
    seed: u64,
    random_tries: usize,
) -> Result<SpringerReport> {
    let divs = degree_divisors(&rs.degrees);
    let mut witnesses: BTreeMap<u64, String> = BTreeMap::new();
    let record =
        |w: &WeylElement, label: String, witnesses: &mut BTreeMap<u64, String>| -> Result<()> {
            for m in eigenvalue_orders(w)? {
                witnesses.entry(m).or_insert_with(|| label.clone());
            }
            Ok(())
        };

    let r = rs.rank();
    let theta_reflection = WeylElement::root_reflection(rs, &rs.highest_root);
    let mut gens: Vec<(String, WeylElement)> = (0..r)
        .map(|i| (format!("s{}", i + 1), WeylElement::simple_reflection(rs, i)))
        .collect();
    gens.push(("s_theta".to_string(), theta_reflection));
    let n = gens.len();
    for mask in 1u32..(1 << n) {
        if mask.count_ones() as usize > r {
            continue;
        }
        let picked: Vec<&(String, WeylElement)> = (0..n)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| &gens[k])
            .collect();
        let c = picked
            .iter()
            .fold(WeylElement::identity(r), |acc, (_, g)| acc.mul(g));
        let name: Vec<&str> = picked.iter().map(|(s, _)| s.as_str()).collect();
        let ord = c.order();
        let mut x = c;
        for k in 1..=ord {
            record(&x, format!("({})^{k}", name.join("*")), &mut witnesses)?;
            x = x.mul(&c);
        }
        if divs.iter().all(|m| witnesses.contains_key(m)) {
            break;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..random_tries {
        if divs.iter().all(|m| witnesses.contains_key(m)) {
            break;
        }
        let len = rng.gen_range(1..=4 * r);
        let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(0..r)).collect();
        let w = word(rs, &letters);
        let label = format!(
            "random word #{t} s[{}]",
            letters
                .iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        record(&w, label, &mut witnesses)?;
    }

    let found: BTreeSet<u64> = witnesses.keys().copied().collect();
    if let Some(bad) = found.iter().find(|m| !divs.contains(m)) {
        return Err(Error::Internal(format!(
            "witness eigenvalue order {bad} divides no degree of {}",
            rs.cartan_type
        )));
    }
    Ok(SpringerReport {
        cartan_type: rs.cartan_type.to_string(),
        rank: r,
        equal: found == divs,
        orders_found: found.into_iter().collect(),
        degrees: rs.degrees.clone(),
        degree_divisors: divs.into_iter().collect(),
        authoritative: false,
        witnesses: Some(witnesses),
    })
}

/// Invariant degrees via the Molien series `|W|^{-1} sum_w 1/det(1 - T w)`.
pub fn molien_degrees(rs: &RootSystem, budget: u64) -> Result<Vec<u32>> {
    let classes = charpoly_classes(rs, budget)?;
    let r = rs.rank();
    let n = rs.num_positive_roots() + r;
    let mut sum = vec![BigInt::zero(); n + 1];
    for (f, &count) in &classes {
        // det(1 - T w) = T^r f(1/T)
        let rev: Vec<BigInt> = f
            .reversed(r)
            .coeffs()
            .iter()
            .map(|&c| BigInt::from(c))
            .collect();
        let inv = series_inverse(&rev, n);
        for (s, c) in sum.iter_mut().zip(inv) {
            *s += c * count;
        }
    }
    let order = BigInt::from(rs.weyl_order.clone());
    let mut poincare = Vec::with_capacity(n + 1);
    for s in sum {
        let (q, rem) = s.div_rem(&order);
        if !rem.is_zero() {
            return Err(Error::Internal("Molien coefficient is not integral".into()));
        }
        poincare.push(q);
    }
    // 1/P(T) = prod (1 - T^{d_i}), a polynomial of degree n
    let mut q: Vec<BigInt> = series_inverse(&poincare, n);
    let mut degrees = Vec::new();
    while let Some(d) = (1..q.len()).find(|&k| !q[k].is_zero()) {
        if degrees.len() > r {
            break;
        }
        q = divide_one_minus_t_pow(&q, d)
            .ok_or_else(|| Error::Internal(format!("Molien peeling failed at degree {d}")))?;
        degrees.push(d as u32);
    }
    let prod: BigUint = degrees.iter().fold(BigUint::one(), |a, &d| a * d);
    let sum: usize = degrees.iter().map(|&d| d as usize - 1).sum();
    if degrees.len() != r || prod != rs.weyl_order || sum != rs.num_positive_roots() {
        return Err(Error::Internal(format!(
            "Molien degrees {degrees:?} inconsistent with W({})",
            rs.cartan_type
        )));
    }
    Ok(degrees)
}

/// Inverse of a power series with constant term 1, truncated at degree `n`.
fn series_inverse(a: &[BigInt], n: usize) -> Vec<BigInt> {
    assert!(a[0].is_one(), "series must have constant term 1");
    let mut b = vec![BigInt::zero(); n + 1];
    b[0] = BigInt::one();
    for k in 1..=n {
        let mut s = BigInt::zero();
        for j in 1..=k.min(a.len() - 1) {
            if !a[j].is_zero() {
                s += &a[j] * &b[k - j];
            }
        }
        b[k] = -s;
    }
    b
}

/// Exact division of a polynomial by `1 - T^d`.
fn divide_one_minus_t_pow(q: &[BigInt], d: usize) -> Option<Vec<BigInt>> {
    // q = (1 - T^d) s  =>  s_k = q_k + s_{k-d}
    let mut s = vec![BigInt::zero(); q.len()];
    for k in 0..q.len() {
        s[k] = q[k].clone()
            + if k >= d {
                s[k - d].clone()
            } else {
                BigInt::zero()
            };
    }
    let keep = q.len().checked_sub(d)?;
    if s[keep..].iter().any(|c| !c.is_zero()) {
        return None;
    }
    s.truncate(keep.max(1));
    while s.len() > 1 && s.last().map(|c| c.is_zero()).unwrap_or(false) {
        s.pop();
    }
    Some(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct DivisibilityReport {
    pub divides: bool,
    /// Every degree of the subgroup divides some degree of the group.
    pub degree_corollary: bool,
}

/// Whether `prod (1 - T^{d_i,H})` divides `prod (1 - T^{d_j,G})`.
pub fn poincare_divisibility(h: &RootSystem, g: &RootSystem) -> DivisibilityReport {
    let ph = poincare_product(&h.degrees);
    let pg = poincare_product(&g.degrees);
    DivisibilityReport {
        divides: ph.divides(&pg),
        degree_corollary: h
            .degrees
            .iter()
            .all(|dh| g.degrees.iter().any(|dg| dg % dh == 0)),
    }
}

/// Numeric value of `|W|` if it fits in `u64`.
pub fn weyl_order_u64(rs: &RootSystem) -> Option<u64> {
    rs.weyl_order.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::table_types;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn counts_match_product_of_degrees() {
        for (t, n) in [("A2", 6usize), ("G2", 12), ("B3", 48), ("F4", 1152)] {
            let r = rs(t);
            assert_eq!(
                enumerate_weyl(&r, DEFAULT_BUDGET).unwrap().count(),
                n,
                "{t}"
            );
        }
    }

    #[test]
    fn enumeration_is_duplicate_free_and_permutes_roots() {
        let r = rs("B3");
        let roots = r.root_set();
        let all: Vec<WeylElement> = enumerate_weyl(&r, 100).unwrap().collect();
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        for w in &all {
            let img: std::collections::HashSet<Vec<i64>> =
                roots.iter().map(|b| w.apply(b)).collect();
            assert_eq!(img, roots);
            assert_eq!(w.determinant().abs(), 1);
        }
    }

    #[test]
    fn e8_is_refused_by_default() {
        let e8 = rs("E8");
        match enumerate_weyl(&e8, DEFAULT_BUDGET) {
            Err(Error::Budget { needed, .. }) => assert_eq!(needed, "696729600"),
            other => panic!("expected refusal, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn eigenvalue_orders_basic() {
        let a1 = rs("A1");
        assert_eq!(
            eigenvalue_orders(&WeylElement::identity(1)).unwrap(),
            BTreeSet::from([1])
        );
        let s = WeylElement::simple_reflection(&a1, 0);
        assert_eq!(eigenvalue_orders(&s).unwrap(), BTreeSet::from([2]));
        for t in table_types() {
            let r = RootSystem::new(t).unwrap();
            let c = coxeter_element(&r);
            assert!(
                eigenvalue_orders(&c)
                    .unwrap()
                    .contains(&(r.coxeter_number as u64)),
                "{t}"
            );
            assert_eq!(c.order(), r.coxeter_number as u64, "{t}");
        }
    }

    #[test]
    fn root_reflection_matches_simple() {
        let r = rs("F4");
        for i in 0..4 {
            let mut a = vec![0i64; 4];
            a[i] = 1;
            assert_eq!(
                WeylElement::root_reflection(&r, &a),
                WeylElement::simple_reflection(&r, i)
            );
        }
        let st = WeylElement::root_reflection(&r, &r.highest_root);
        assert!(st.mul(&st).is_identity());
        let img = st.apply(&r.highest_root);
        assert_eq!(img, r.highest_root.iter().map(|x| -x).collect::<Vec<_>>());
    }

    #[test]
    fn springer_small() {
        let g2 = springer_check(&rs("G2"), DEFAULT_BUDGET).unwrap();
        assert!(g2.equal);
        assert_eq!(g2.orders_found, vec![1, 2, 3, 6]);
        let a1 = springer_check(&rs("A1"), DEFAULT_BUDGET).unwrap();
        assert_eq!(a1.orders_found, vec![1, 2]);
    }

    #[test]
    fn molien_small() {
        assert_eq!(
            molien_degrees(&rs("A2"), DEFAULT_BUDGET).unwrap(),
            vec![2, 3]
        );
        assert_eq!(
            molien_degrees(&rs("B3"), DEFAULT_BUDGET).unwrap(),
            vec![2, 4, 6]
        );
        assert_eq!(
            molien_degrees(&rs("D4"), DEFAULT_BUDGET).unwrap(),
            vec![2, 4, 4, 6]
        );
        assert_eq!(
            molien_degrees(&rs("G2"), DEFAULT_BUDGET).unwrap(),
            vec![2, 6]
        );
    }

    #[test]
    fn parallel_fold_matches_sequential_stream() {
        let r = rs("C3");
        let key = |w: &WeylElement| (w.get(0, 0) as i64 + 7) * (w.get(2, 1) as i64 - 3);
        let seq: i64 = enumerate_weyl(&r, 1000).unwrap().map(|w| key(&w)).sum();
        let par = fold_weyl(&r, 1000, || 0i64, |a, w| *a += key(w), |a, b| a + b).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn divisibility() {
        let rep = poincare_divisibility(&rs("A2"), &rs("G2"));
        assert!(rep.divides && rep.degree_corollary);
        let rep = poincare_divisibility(&rs("G2"), &rs("F4"));
        assert!(rep.divides && rep.degree_corollary);
        let f4 = rs("F4");
        assert!(poincare_divisibility(&f4, &f4).divides);
        assert!(!poincare_divisibility(&rs("B2"), &rs("G2")).divides);
    }
}
