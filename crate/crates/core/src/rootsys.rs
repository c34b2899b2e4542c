//! Root data for the simple Cartan types.
//!
//! Conventions follow Bourbaki numbering. `cartan[i][j] = <alpha_i, alpha_j^vee>`,
//! so the reflection `s_i` sends a root `beta` (simple-root coordinates) to
//! `beta - <beta, alpha_i^vee> alpha_i` with `<beta, alpha_i^vee> = sum_j beta_j cartan[j][i]`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::prime_divisors;
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            invalid(format!("no Cartan type {family:?}{rank}"))
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.family, Family::E | Family::F | Family::G)
    }

    /// Invariant degrees, ascending (a multiset: `D_r` with even `r` repeats `r`).
    pub fn degrees(&self) -> Vec<u32> {
        let r = self.rank as u32;
        let mut d: Vec<u32> = match self.family {
            Family::A => (2..=r + 1).collect(),
            Family::B | Family::C => (1..=r).map(|k| 2 * k).collect(),
            Family::D => (1..r).map(|k| 2 * k).chain([r]).collect(),
            Family::G => vec![2, 6],
            Family::F => vec![2, 6, 8, 12],
            Family::E => match r {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
        };
        d.sort_unstable();
        d
    }

    /// Tabulated dimension of the group.
    pub fn table_dim(&self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => (r + 1) * (r + 1) - 1,
            Family::B | Family::C => 2 * r * r + r,
            Family::D => 2 * r * r - r,
            Family::G => 14,
            Family::F => 52,
            Family::E => match r {
                6 => 78,
                7 => 133,
                _ => 248,
            },
        }
    }

    /// Tabulated torsion primes of the simply connected group.
    pub fn table_torsion_primes(&self) -> BTreeSet<u64> {
        let v: &[u64] = match self.family {
            Family::A | Family::C => &[],
            Family::B => {
                if self.rank >= 3 {
                    &[2]
                } else {
                    &[]
                }
            }
            Family::D => {
                if self.rank >= 4 {
                    &[2]
                } else {
                    &[]
                }
            }
            Family::G => &[2],
            Family::F | Family::E if self.rank < 8 => &[2, 3],
            Family::F | Family::E => &[2, 3, 5],
        };
        v.iter().copied().collect()
    }

    /// Simple roots in an integral ambient lattice; half-integral
    /// realizations are doubled.
    fn ambient_simple_roots(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let e = |n: usize, i: usize, c: i64| {
            let mut v = vec![0i64; n];
            v[i] = c;
            v
        };
        let diff = |n: usize, i: usize, j: usize| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v[j] = -1;
            v
        };
        match self.family {
            Family::A => (0..r).map(|i| diff(r + 1, i, i + 1)).collect(),
            Family::B | Family::C | Family::D => {
                let mut s: Vec<Vec<i64>> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
                s.push(match self.family {
                    Family::B => e(r, r - 1, 1),
                    Family::C => e(r, r - 1, 2),
                    _ => {
                        let mut v = vec![0i64; r];
                        v[r - 2] = 1;
                        v[r - 1] = 1;
                        v
                    }
                });
                s
            }
            Family::G => vec![vec![1, -1, 0], vec![-2, 1, 1]],
            Family::F => vec![
                vec![0, 2, -2, 0],
                vec![0, 0, 2, -2],
                vec![0, 0, 0, 2],
                vec![1, -1, -1, -1],
            ],
            Family::E => {
                let mut s = vec![
                    vec![1, -1, -1, -1, -1, -1, -1, 1],
                    vec![2, 2, 0, 0, 0, 0, 0, 0],
                    vec![-2, 2, 0, 0, 0, 0, 0, 0],
                ];
                for i in 1..6 {
                    let mut v = vec![0i64; 8];
                    v[i + 1] = 2;
                    v[i] = -2;
                    s.push(v);
                }
                s.truncate(r);
                s
            }
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Accepts `E8`, `e8`, `A_4`, `G2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let Some(head) = chars.next() else {
            return invalid("empty Cartan type");
        };
        let family = match head.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return invalid(format!("unknown Cartan family in {s:?}")),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest
            .parse::<usize>()
            .map_err(|_| Error::Invalid(format!("bad rank in {s:?}")))?;
        CartanType::new(family, rank)
    }
}

/// The sixteen ranks exercised by the degree table.
pub fn table_types() -> Vec<CartanType> {
    use Family::*;
    [
        (A, 1),
        (A, 2),
        (A, 3),
        (A, 4),
        (B, 2),
        (B, 3),
        (B, 4),
        (C, 2),
        (C, 3),
        (C, 4),
        (D, 4),
        (G, 2),
        (F, 4),
        (E, 6),
        (E, 7),
        (E, 8),
    ]
    .into_iter()
    .map(|(f, r)| CartanType::new(f, r).expect("table types are valid"))
    .collect()
}

/// Weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    /// Ambient coordinates of the simple roots, multiplied by `ambient_scale`.
    pub simple_roots: Vec<Vec<i64>>,
    pub ambient_scale: i64,
    pub cartan_matrix: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_i) / 2` normalized so short roots have 1.
    pub symmetrizer: Vec<i64>,
    /// Simple-root coordinates, sorted by height then lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
    /// `positive_coroots[k]` is the coroot of `positive_roots[k]` in simple-coroot coordinates.
    pub positive_coroots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    pub highest_coroot: Vec<i64>,
    /// Sum of the positive coroots (`2 rho^vee`) in simple-coroot coordinates.
    pub rho_check: Vec<i64>,
    pub dim_g: usize,
    pub coxeter_number: usize,
    pub degrees: Vec<u32>,
    #[serde(serialize_with = "crate::error::ser_display")]
    pub weyl_order: BigUint,
    pub torsion_primes: BTreeSet<u64>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let simple = cartan_type.ambient_simple_roots();
        let r = cartan_type.rank;
        let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let num = 2 * dot(&simple[i], &simple[j]);
                let den = dot(&simple[j], &simple[j]);
                if num % den != 0 {
                    return Err(Error::Internal(format!(
                        "non-integral Cartan entry for {cartan_type}"
                    )));
                }
                cartan[i][j] = num / den;
            }
        }
        let norms: Vec<i64> = simple.iter().map(|s| dot(s, s)).collect();
        let short = *norms.iter().min().unwrap();
        let symmetrizer: Vec<i64> = norms.iter().map(|&n| n / short).collect();

        let all = close_under_reflections(&cartan);
        let mut positive: Vec<Vec<i64>> = all
            .into_iter()
            .filter(|b| b.iter().all(|&c| c >= 0))
            .collect();
        positive.sort_by(|a, b| (height(a), a).cmp(&(height(b), b)));

        let positive_coroots: Vec<Vec<i64>> = positive
            .iter()
            .map(|b| coroot_of(&cartan, &symmetrizer, b))
            .collect();
        let highest_root = positive.last().cloned().unwrap();
        let highest_coroot = positive_coroots
            .iter()
            .max_by(|a, b| (height(a), *a).cmp(&(height(b), *b)))
            .cloned()
            .unwrap();
        let mut rho_check = vec![0i64; r];
        for c in &positive_coroots {
            for (acc, x) in rho_check.iter_mut().zip(c) {
                *acc += x;
            }
        }

        let dim_g = r + 2 * positive.len();
        if dim_g % r != 0 {
            return Err(Error::Internal(format!(
                "{cartan_type}: rank does not divide dim"
            )));
        }
        let coxeter_number = dim_g / r - 1;
        let degrees = cartan_type.degrees();
        let weyl_order = degrees.iter().fold(BigUint::one(), |acc, &d| acc * d);

        let rs = RootSystem {
            cartan_type,
            simple_roots: simple,
            ambient_scale: if matches!(cartan_type.family, Family::E | Family::F) {
                2
            } else {
                1
            },
            cartan_matrix: cartan,
            symmetrizer,
            positive_roots: positive,
            positive_coroots,
            highest_root,
            highest_coroot,
            rho_check,
            dim_g,
            coxeter_number,
            degrees,
            weyl_order,
            torsion_primes: cartan_type.table_torsion_primes(),
        };
        rs.validate()?;
        Ok(rs)
    }

    pub fn build(family: Family, rank: usize) -> Result<Self> {
        Self::new(CartanType::new(family, rank)?)
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    fn validate(&self) -> Result<()> {
        let t = self.cartan_type;
        let fail = |m: String| Err(Error::Internal(format!("{t}: {m}")));
        let npos = self.positive_roots.len();
        if (self.dim_g - self.rank()) / 2 != npos {
            return fail("positive root count".into());
        }
        if self.dim_g != t.table_dim() {
            return fail(format!(
                "dim {} differs from table {}",
                self.dim_g,
                t.table_dim()
            ));
        }
        let sum: u32 = self.degrees.iter().map(|d| d - 1).sum();
        if sum as usize != npos {
            return fail("sum of (d_i - 1) differs from #positive roots".into());
        }
        if self.degrees.first() != Some(&2)
            || *self.degrees.last().unwrap() as usize != self.coxeter_number
        {
            return fail("degree range".into());
        }
        if self.highest_root.iter().any(|&c| c < 1) {
            return fail("highest root has a zero coefficient".into());
        }
        if height(&self.highest_coroot) + 1 != self.coxeter_number as i64 {
            return fail("<rho, highest coroot> != h - 1".into());
        }
        Ok(())
    }

    /// `<beta, alpha_i^vee>` for `beta` in simple-root coordinates.
    pub fn pairing(&self, beta: &[i64], i: usize) -> i64 {
        (0..self.rank())
            .map(|j| beta[j] * self.cartan_matrix[j][i])
            .sum()
    }

    /// Simple-root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight(&self, beta: &[i64]) -> Weight {
        Weight((0..self.rank()).map(|i| self.pairing(beta, i)).collect())
    }

    /// Fundamental-weight coordinates to simple-root coordinates, over Q.
    pub fn weight_to_root(&self, w: &Weight) -> Vec<BigRational> {
        // solve x^T A = w^T, i.e. A^T x = w
        let r = self.rank();
        let mut m: Vec<Vec<BigRational>> = (0..r)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..r)
                    .map(|j| BigRational::from_integer(BigInt::from(self.cartan_matrix[j][i])))
                    .collect();
                row.push(BigRational::from_integer(BigInt::from(w.0[i])));
                row
            })
            .collect();
        for c in 0..r {
            let piv = (c..r)
                .find(|&i| !m[i][c].is_zero())
                .expect("Cartan matrix is invertible");
            m.swap(c, piv);
            let inv = m[c][c].recip();
            for x in m[c].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..r {
                if i != c && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in 0..=r {
                        let t = &m[c][j] * &f;
                        m[i][j] = &m[i][j] - t;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[r].clone()).collect()
    }

    /// Integral conversion; fails if the weight is not in the root lattice.
    pub fn weight_to_root_integral(&self, w: &Weight) -> Result<Vec<i64>> {
        self.weight_to_root(w)
            .into_iter()
            .map(|q| {
                if q.is_integer() {
                    Ok(q.to_integer().to_i64().unwrap())
                } else {
                    invalid("weight is not in the root lattice")
                }
            })
            .collect()
    }

    /// `det(cartan_matrix)`, the order of the center of the simply connected group.
    pub fn cartan_determinant(&self) -> i64 {
        let r = self.rank();
        let m: Vec<Vec<BigRational>> = self
            .cartan_matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect();
        let mut m = m;
        let mut det = BigRational::one();
        for c in 0..r {
            let Some(piv) = (c..r).find(|&i| !m[i][c].is_zero()) else {
                return 0;
            };
            if piv != c {
                m.swap(c, piv);
                det = -det;
            }
            det = &det * &m[c][c];
            for i in c + 1..r {
                let f = &m[i][c] / &m[c][c];
                for j in c..r {
                    let t = &m[c][j] * &f;
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
        det.to_integer().to_i64().unwrap()
    }

    /// Torsion primes. For the adjoint form the primes dividing the order
    /// of the fundamental group are added.
    pub fn torsion_primes(&self, simply_connected: bool) -> BTreeSet<u64> {
        let mut s = self.torsion_primes.clone();
        if !simply_connected {
            s.extend(prime_divisors(self.cartan_determinant().unsigned_abs()));
        }
        s
    }

    /// Primes dividing some coefficient of the highest root.
    pub fn highest_root_primes(&self) -> BTreeSet<u64> {
        self.highest_root
            .iter()
            .flat_map(|&c| prime_divisors(c as u64))
            .collect()
    }

    pub fn highest_root_coefficients(&self) -> Vec<i64> {
        self.highest_root.clone()
    }

    /// `n(lambda) = sum over positive roots of <lambda, alpha^vee> = <lambda, 2 rho^vee>`.
    pub fn n_of_weight(&self, lambda: &Weight) -> i64 {
        assert_eq!(lambda.0.len(), self.rank(), "weight has wrong length");
        lambda
            .0
            .iter()
            .zip(&self.rho_check)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `n(V)` for a module with the given highest weights.
    ///
    /// `n` is a linear functional taking nonnegative values on positive
    /// roots, and every weight of a module with highest weight `lambda` is
    /// `lambda` minus a nonnegative combination of positive roots, so the
    /// supremum over all weights is attained at a highest weight.
    pub fn n_of_module(&self, highest_weights: &[Weight]) -> Result<i64> {
        if highest_weights.is_empty() {
            return invalid("n(V) of an empty list of highest weights");
        }
        if let Some(w) = highest_weights.iter().find(|w| !w.is_dominant()) {
            return invalid(format!("weight {:?} is not dominant", w.0));
        }
        Ok(highest_weights
            .iter()
            .map(|w| self.n_of_weight(w))
            .max()
            .unwrap())
    }

    /// `<lambda, beta^vee>` where `coroot` is in simple-coroot coordinates.
    pub fn pair_weight_coroot(&self, lambda: &Weight, coroot: &[i64]) -> i64 {
        lambda.0.iter().zip(coroot).map(|(a, b)| a * b).sum()
    }

    /// All roots (positive then negative) in simple-root coordinates.
    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let mut v = self.positive_roots.clone();
        v.extend(
            self.positive_roots
                .iter()
                .map(|b| b.iter().map(|x| -x).collect::<Vec<_>>()),
        );
        v
    }

    pub fn root_set(&self) -> HashSet<Vec<i64>> {
        self.all_roots().into_iter().collect()
    }

    /// Gram matrix of the simple roots in the ambient realization.
    pub fn ambient_gram(&self) -> Vec<Vec<i64>> {
        let s = &self.simple_roots;
        s.iter()
            .map(|a| {
                s.iter()
                    .map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum())
                    .collect()
            })
            .collect()
    }

    /// `B[i][j] = cartan[i][j] * symmetrizer[j]`, symmetric.
    pub fn symmetrized_cartan(&self) -> Vec<Vec<i64>> {
        let r = self.rank();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| self.cartan_matrix[i][j] * self.symmetrizer[j])
                    .collect()
            })
            .collect()
    }
}

pub fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

fn close_under_reflections(cartan: &[Vec<i64>]) -> HashSet<Vec<i64>> {
    let r = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..r {
        let mut v = vec![0i64; r];
        v[i] = 1;
        seen.insert(v.clone());
        queue.push_back(v);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..r {
            let k: i64 = (0..r).map(|j| b[j] * cartan[j][i]).sum();
            if k == 0 {
                continue;
            }
            let mut c = b.clone();
            c[i] -= k;
            if seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    seen
}

fn coroot_of(cartan: &[Vec<i64>], d: &[i64], beta: &[i64]) -> Vec<i64> {
    let r = cartan.len();
    // (beta, beta) with (alpha_i, alpha_j) = cartan[i][j] * d[j]
    let mut norm = 0i64;
    for i in 0..r {
        for j in 0..r {
            norm += beta[i] * beta[j] * cartan[i][j] * d[j];
        }
    }
    (0..r)
        .map(|i| {
            let num = 2 * beta[i] * d[i];
            assert_eq!(num % norm, 0, "coroot is not integral");
            num / norm
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn cartan_matrices_match_bourbaki() {
        // alpha_3 short in B3: <alpha_2, alpha_3^vee> = -2
        assert_eq!(
            rs("B3").cartan_matrix,
            vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );
        assert_eq!(
            rs("C3").cartan_matrix,
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
        assert_eq!(rs("G2").cartan_matrix, vec![vec![2, -1], vec![-3, 2]]);
        assert_eq!(
            rs("F4").cartan_matrix,
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
        let e8 = rs("E8");
        // node 2 hangs off node 4; chain 1-3-4-5-6-7-8
        let edges: Vec<(usize, usize)> = (0..8)
            .flat_map(|i| (i + 1..8).map(move |j| (i, j)))
            .filter(|&(i, j)| e8.cartan_matrix[i][j] != 0)
            .map(|(i, j)| (i + 1, j + 1))
            .collect();
        assert_eq!(
            edges,
            vec![(1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
        );
    }

    #[test]
    fn gram_is_proportional_to_symmetrized_cartan() {
        for t in table_types() {
            let r = RootSystem::new(t).unwrap();
            let g = r.ambient_gram();
            let b = r.symmetrized_cartan();
            // g = c * b for one rational c
            let (gn, bn) = (g[0][0], b[0][0]);
            for i in 0..t.rank {
                for j in 0..t.rank {
                    assert_eq!(g[i][j] * bn, b[i][j] * gn, "{t} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn small_cases() {
        let a1 = rs("A1");
        assert_eq!(a1.all_roots().len(), 2);
        assert_eq!(a1.coxeter_number, 2);
        let g2 = rs("G2");
        assert_eq!(g2.dim_g, 14);
        assert_eq!(g2.coxeter_number, 6);
        assert_eq!(*g2.highest_root.iter().max().unwrap(), 3);
        assert_eq!(rs("A2").highest_root, vec![1, 1]);
        assert_eq!(rs("D4").highest_root, vec![1, 2, 1, 1]);
        let e8 = rs("E8");
        assert_eq!(e8.highest_root, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(e8.degrees, vec![2, 8, 12, 14, 18, 20, 24, 30]);
        assert_eq!(e8.weyl_order, BigUint::from(696_729_600u64));
    }

    #[test]
    fn highest_coroot_is_coroot_of_highest_short_root() {
        let b3 = rs("B3");
        // highest short root of B3 is e1 = a1 + a2 + a3; its coroot 2e1 = 2a1v + 2a2v + a3v
        assert_eq!(b3.highest_coroot, vec![2, 2, 1]);
        let g2 = rs("G2");
        // in the dual system the highest root has height h - 1 = 5
        assert_eq!(height(&g2.highest_coroot), 5);
    }

    #[test]
    fn torsion_tables() {
        assert_eq!(rs("E8").torsion_primes(true), BTreeSet::from([2, 3, 5]));
        assert!(rs("A4").torsion_primes(true).is_empty());
        assert_eq!(rs("A4").torsion_primes(false), BTreeSet::from([5]));
        assert_eq!(rs("D4").torsion_primes(true), BTreeSet::from([2]));
        assert_eq!(rs("D4").highest_root_primes(), BTreeSet::from([2]));
        assert_eq!(rs("E6").cartan_determinant(), 3);
        assert_eq!(rs("E7").cartan_determinant(), 2);
        assert_eq!(rs("E8").cartan_determinant(), 1);
    }

    #[test]
    fn n_invariant_examples() {
        for m in 2..6 {
            let a = RootSystem::build(Family::A, m - 1).unwrap();
            assert_eq!(
                a.n_of_weight(&Weight::fundamental(m - 1, 0)),
                (m - 1) as i64
            );
            for i in 1..m {
                let w = Weight::fundamental(m - 1, i - 1);
                assert_eq!(a.n_of_module(&[w]).unwrap(), (i * (m - i)) as i64);
            }
        }
        for t in table_types() {
            let r = RootSystem::new(t).unwrap();
            let theta = r.root_to_weight(&r.highest_root);
            assert_eq!(
                r.n_of_weight(&theta),
                2 * r.coxeter_number as i64 - 2,
                "{t}"
            );
            assert_eq!(r.n_of_weight(&Weight::zero(t.rank)), 0);
        }
        assert!(rs("A2").n_of_module(&[]).is_err());
    }

    #[test]
    fn weight_root_roundtrip() {
        let e8 = rs("E8");
        let theta = e8.root_to_weight(&e8.highest_root);
        assert_eq!(e8.weight_to_root_integral(&theta).unwrap(), e8.highest_root);
        let a2 = rs("A2");
        assert!(a2
            .weight_to_root_integral(&Weight::fundamental(2, 0))
            .is_err());
    }

    #[test]
    fn parse_and_reject() {
        assert!("E9".parse::<CartanType>().is_err());
        assert!("B1".parse::<CartanType>().is_err());
        assert!("F3".parse::<CartanType>().is_err());
        assert_eq!("a_4".parse::<CartanType>().unwrap().to_string(), "A4");
    }
}
