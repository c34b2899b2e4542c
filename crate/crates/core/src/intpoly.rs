//! Integer polynomials: exact division, cyclotomic polynomials and
//! cyclotomic factorization of characteristic polynomials.

use serde::Serialize;
use std::collections::BTreeMap;

use crate::arith::euler_phi;

/// Dense integer polynomial, coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntPoly(pub Vec<i64>);

impl IntPoly {
    pub fn new(mut c: Vec<i64>) -> Self {
        while c.len() > 1 && *c.last().unwrap() == 0 {
            c.pop();
        }
        if c.is_empty() {
            c.push(0);
        }
        IntPoly(c)
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.0 == [1]
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// `1 - T^d`.
    pub fn one_minus_t_pow(d: usize) -> Self {
        let mut c = vec![0; d + 1];
        c[0] = 1;
        c[d] -= 1;
        IntPoly::new(c)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = vec![0i64; self.0.len() + rhs.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Division by a polynomial whose leading coefficient is ±1.
    /// Returns `(quotient, remainder)`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let lead = *d.0.last().unwrap();
        assert!(
            lead == 1 || lead == -1,
            "divisor must have unit leading coefficient"
        );
        let mut r = self.0.clone();
        let dd = d.degree();
        if self.degree() < dd || self.is_zero() {
            return (IntPoly::new(vec![0]), self.clone());
        }
        let mut q = vec![0i64; self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let c = r[k + dd] * lead; // divide by ±1
            q[k] = c;
            if c != 0 {
                for (j, &b) in d.0.iter().enumerate() {
                    r[k + j] -= c * b;
                }
            }
        }
        (IntPoly::new(q), IntPoly::new(r))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Reverse coefficients as a degree-`n` polynomial: `T^n f(1/T)`.
    pub fn reversed(&self, n: usize) -> Self {
        let mut c = vec![0i64; n + 1];
        for (i, &a) in self.0.iter().enumerate() {
            c[n - i] = a;
        }
        IntPoly::new(c)
    }
}

/// The m-th cyclotomic polynomial, built as `(T^m - 1) / prod_{d | m, d < m} Phi_d`.
pub fn cyclotomic(m: u64) -> IntPoly {
    assert!(m >= 1);
    let mut cache: BTreeMap<u64, IntPoly> = BTreeMap::new();
    cyclotomic_cached(m, &mut cache)
}

fn cyclotomic_cached(m: u64, cache: &mut BTreeMap<u64, IntPoly>) -> IntPoly {
    if let Some(p) = cache.get(&m) {
        return p.clone();
    }
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    let mut acc = IntPoly::new(num);
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_cached(d, cache);
            let (q, r) = acc.div_rem(&phi_d);
            debug_assert!(r.is_zero());
            acc = q;
        }
    }
    cache.insert(m, acc.clone());
    acc
}

/// Orders `m` with `phi(m) <= r`, ascending.
pub fn candidate_orders(r: usize) -> Vec<u64> {
    let bound = 2 * (r as u64) * (r as u64) + 2;
    (1..=bound)
        .filter(|&m| euler_phi(m) as usize <= r)
        .collect()
}

/// Factor a monic integer polynomial into cyclotomic factors by trial
/// division. Returns the multiplicities and the cofactor left over (which is
/// `1` exactly when the polynomial is a product of cyclotomics).
pub fn cyclotomic_factorization(f: &IntPoly) -> (BTreeMap<u64, u32>, IntPoly) {
    let mut rest = f.clone();
    let mut mult = BTreeMap::new();
    for m in candidate_orders(f.degree()) {
        if rest.degree() == 0 {
            break;
        }
        let phi = cyclotomic(m);
        if phi.degree() > rest.degree() {
            continue;
        }
        loop {
            let (q, r) = rest.div_rem(&phi);
            if !r.is_zero() {
                break;
            }
            *mult.entry(m).or_insert(0) += 1;
            rest = q;
            if rest.degree() < phi.degree() {
                break;
            }
        }
    }
    (mult, rest)
}

/// `prod (1 - T^{d_i})`.
pub fn poincare_product(degrees: &[u32]) -> IntPoly {
    degrees.iter().fold(IntPoly::one(), |acc, &d| {
        acc.mul(&IntPoly::one_minus_t_pow(d as usize))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).0, vec![-1, 1]);
        assert_eq!(cyclotomic(2).0, vec![1, 1]);
        assert_eq!(cyclotomic(3).0, vec![1, 1, 1]);
        assert_eq!(cyclotomic(4).0, vec![1, 0, 1]);
        assert_eq!(cyclotomic(6).0, vec![1, -1, 1]);
        assert_eq!(cyclotomic(30).degree(), 8);
    }

    #[test]
    fn t_pow_minus_one_factors() {
        // T^12 - 1 = prod over divisors
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let (mult, rest) = cyclotomic_factorization(&IntPoly::new(c));
        assert!(rest.is_one());
        let keys: Vec<u64> = mult.keys().copied().collect();
        assert_eq!(keys, vec![1, 2, 3, 4, 6, 12]);
        assert!(mult.values().all(|&v| v == 1));
    }

    #[test]
    fn non_cyclotomic_leaves_cofactor() {
        // T^2 - 3T + 1 has real roots off the unit circle
        let (_, rest) = cyclotomic_factorization(&IntPoly::new(vec![1, -3, 1]));
        assert_eq!(rest.degree(), 2);
    }

    #[test]
    fn poincare_division() {
        let a2 = poincare_product(&[2, 3]);
        let g2 = poincare_product(&[2, 6]);
        assert!(a2.divides(&g2));
        assert!(!poincare_product(&[2, 4]).divides(&g2));
    }
}
