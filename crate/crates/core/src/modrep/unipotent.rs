//! One-parameter subgroups `t -> x^t` through unipotent elements, and the
//! degree in `t` of their images in a module.

use serde::Serialize;

use crate::arith::binomial_mod;
use crate::error::{invalid, Result};
use crate::fp::{inv_mod, FpMatrix};
use crate::fppoly::FpPoly;
use crate::ring::{Fp, RMat};

use super::ModExpr;

fn nilpotent_part(x: &FpMatrix) -> Result<FpMatrix> {
    if !x.is_square() {
        return invalid("unipotent element must be square");
    }
    let p = x.p();
    let eps = x.sub(&FpMatrix::identity(p, x.nrows()));
    if !eps.pow(p as u64).is_zero() {
        return invalid("matrix is not unipotent of exponent p: (x - 1)^p != 0");
    }
    Ok(eps)
}

/// `x^t = sum_{k<p} C(t,k) (x-1)^k` for `t` in F_p.
pub fn unipotent_power(x: &FpMatrix, t: u32) -> Result<FpMatrix> {
    let eps = nilpotent_part(x)?;
    let p = x.p();
    let n = x.nrows();
    let mut acc = FpMatrix::zeros(p, n, n);
    let mut e = FpMatrix::identity(p, n);
    for k in 0..p {
        acc = acc.add(&e.scale(binomial_mod(t % p, k, p)));
        e = e.mul(&eps);
        if e.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// `C(t, k)` as a polynomial in `t` over F_p, `k < p`.
fn binomial_poly(p: u32, k: u32, sign: bool) -> FpPoly {
    let mut acc = FpPoly::one(p);
    let t = if sign {
        FpPoly::x(p).neg()
    } else {
        FpPoly::x(p)
    };
    for i in 0..k {
        acc = acc.mul(&t.sub(&FpPoly::constant(p, i % p)));
    }
    let fact = (1..=k).fold(1u32, |a, i| crate::fp::mul_mod(a, i, p));
    acc.scale(inv_mod(fact, p))
}

/// `x^{t}` (or `x^{-t}`) with `t` a formal parameter.
fn formal_power(eps: &FpMatrix, negate: bool) -> RMat<FpPoly> {
    let p = eps.p();
    let n = eps.nrows();
    let zero = FpPoly::zero(p);
    let mut acc = RMat::from_fn(n, n, |_, _| zero.clone());
    let mut e = FpMatrix::identity(p, n);
    for k in 0..p {
        let c = binomial_poly(p, k, negate);
        acc = RMat::from_fn(n, n, |i, j| acc.get(i, j).add(&c.scale(e.get(i, j))));
        e = e.mul(eps);
        if e.is_zero() {
            break;
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpDegree {
    pub module: String,
    pub p: u32,
    /// Degree in `t` of the entries of `rho(u^t)`.
    pub degree: usize,
    pub n_invariant: i64,
    /// `degree <= n_invariant`.
    pub bound_holds: bool,
}

/// `d_u(V)`: the largest degree in `t` of an entry of `rho_V(u^t)`, where
/// `u` is a unipotent element in the natural representation.
pub fn exp_degree(module: &ModExpr, u: &FpMatrix) -> Result<ExpDegree> {
    let eps = nilpotent_part(u)?;
    let p = u.p();
    let ut = formal_power(&eps, false);
    let ut_inv = formal_power(&eps, true);
    let (rho, _) = module.eval_pair(&ut, &ut_inv, &FpPoly::one(p));
    let degree = rho.max_degree();
    let n_invariant = module.n_invariant();
    Ok(ExpDegree {
        module: module.to_string(),
        p,
        degree,
        n_invariant,
        bound_holds: degree as i64 <= n_invariant,
    })
}

/// Check `x^s x^t = x^{s+t}` for all `s, t` in F_p.
pub fn one_parameter_law(x: &FpMatrix) -> Result<bool> {
    let p = x.p();
    let powers: Vec<FpMatrix> = (0..p)
        .map(|t| unipotent_power(x, t))
        .collect::<Result<_>>()?;
    Ok((0..p as usize).all(|s| {
        (0..p as usize).all(|t| powers[s].mul(&powers[t]) == powers[(s + t) % p as usize])
    }))
}

/// Substituting `t = s` into the formal matrix agrees with the module image
/// of `u^s` for every `s` in F_p.
pub fn formal_matches(module: &ModExpr, u: &FpMatrix) -> Result<bool> {
    let eps = nilpotent_part(u)?;
    let p = u.p();
    let (rho, _) = module.eval_pair(
        &formal_power(&eps, false),
        &formal_power(&eps, true),
        &FpPoly::one(p),
    );
    let one = Fp { v: 1, p };
    for s in 0..p {
        let us = unipotent_power(u, s)?;
        let usinv = us.inverse().expect("unipotent is invertible");
        let (direct, _) = module.eval_pair(&RMat::from_fp(&us), &RMat::from_fp(&usinv), &one);
        let subst = RMat::from_fn(rho.rows, rho.cols, |i, j| Fp {
            v: rho.get(i, j).eval(s),
            p,
        });
        if subst != direct {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(p: u32) -> FpMatrix {
        FpMatrix::from_i64_rows(p, &[vec![1, 1], vec![0, 1]])
    }

    #[test]
    fn power_endpoints() {
        let x = u(5);
        assert!(unipotent_power(&x, 0).unwrap().is_identity());
        assert_eq!(unipotent_power(&x, 1).unwrap(), x);
        let bad = FpMatrix::from_i64_rows(5, &[vec![2, 0], vec![0, 3]]);
        assert!(unipotent_power(&bad, 1).is_err());
    }

    #[test]
    fn law_on_sym3_over_f5() {
        let one = Fp { v: 1, p: 5 };
        let x = u(5);
        let s3 = crate::ring::sym_power_matrix(&RMat::from_fp(&x), 3, &one).to_fp(5);
        assert!(one_parameter_law(&s3).unwrap());
    }

    #[test]
    fn degrees_on_small_modules() {
        let p = 7;
        assert_eq!(exp_degree(&ModExpr::Trivial, &u(p)).unwrap().degree, 0);
        for n in 0..p as usize {
            let d = exp_degree(&ModExpr::l(n), &u(p)).unwrap();
            assert_eq!(d.degree, n);
            assert!(d.bound_holds);
        }
        let e: ModExpr = "tensor(sym:2,sym:3)".parse().unwrap();
        assert_eq!(exp_degree(&e, &u(p)).unwrap().degree, 5);
        assert!(formal_matches(&e, &u(p)).unwrap());
    }

    #[test]
    fn dual_uses_inverse_parameter() {
        let e: ModExpr = "dual(sym:3)".parse().unwrap();
        let d = exp_degree(&e, &u(5)).unwrap();
        assert_eq!(d.degree, 3);
        assert!(formal_matches(&e, &u(5)).unwrap());
    }
}
