//! Embedding criteria for PSL2(q)/PGL2(q) in simple groups, SL2 weightings of
//! the adjoint representation, and the Minkowski bound.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::arith::{is_prime, prime_power, primes_up_to, valuation};
use crate::error::{invalid, Error, Result};
use crate::rootsys::{CartanType, Family, RootSystem};

fn check_q(q: u64) -> Result<()> {
    if q < 5 {
        return invalid(format!("q = {q}: the criterion assumes q >= 5"));
    }
    if prime_power(q).is_none() {
        return invalid(format!("q = {q} is not a prime power"));
    }
    Ok(())
}

/// `(q - 1) | 2d` for some degree `d`.
pub fn toral_criterion_sl2(rs: &RootSystem, q: u64) -> Result<bool> {
    check_q(q)?;
    Ok(rs.degrees.iter().any(|&d| (2 * d as u64) % (q - 1) == 0))
}

/// `(q - 1) | d` for some degree `d`.
pub fn toral_criterion_gl2(rs: &RootSystem, q: u64) -> Result<bool> {
    check_q(q)?;
    Ok(rs.degrees.iter().any(|&d| d as u64 % (q - 1) == 0))
}

/// Every `q` passing the SL2 criterion satisfies `q - 1 <= 2h`.
fn criterion_candidates(rs: &RootSystem) -> Vec<u64> {
    let bound = 2 * rs.coxeter_number as u64 + 1;
    (5..=bound)
        .filter(|&q| toral_criterion_sl2(rs, q).unwrap_or(false))
        .collect()
}

/// How a type's list of new `q` is cut down from its criterion set.
enum Exclusion {
    /// Keep `q` with `q - 1 > 2d` for every degree `d` of a subgroup.
    SubgroupDegrees(CartanType),
    /// Keep `q` where the criterion fails for the preceding group of the chain.
    FailsFor(CartanType),
}

fn exclusion_for(t: CartanType) -> Option<Exclusion> {
    let ct = |f, r| CartanType::new(f, r).expect("valid");
    match (t.family, t.rank) {
        (Family::G, 2) => Some(Exclusion::SubgroupDegrees(ct(Family::A, 2))),
        (Family::F, 4) => Some(Exclusion::SubgroupDegrees(ct(Family::G, 2))),
        (Family::E, 6) => Some(Exclusion::FailsFor(ct(Family::F, 4))),
        (Family::E, 7) => Some(Exclusion::FailsFor(ct(Family::E, 6))),
        (Family::E, 8) => Some(Exclusion::FailsFor(ct(Family::E, 7))),
        _ => None,
    }
}

/// Odd `q` for which the SL2 criterion holds for the exceptional group but
/// is not already accounted for by a smaller group of the chain
/// `A2 < G2 < F4 < E6 < E7 < E8`.
pub fn new_case_report(rs: &RootSystem) -> Result<Vec<u64>> {
    let Some(rule) = exclusion_for(rs.cartan_type) else {
        return invalid(format!("{} is not exceptional", rs.cartan_type));
    };
    let keep: Box<dyn Fn(u64) -> bool> = match rule {
        Exclusion::SubgroupDegrees(h) => {
            let hd = h.degrees();
            Box::new(move |q| hd.iter().all(|&d| q - 1 > 2 * d as u64))
        }
        Exclusion::FailsFor(h) => {
            let hrs = RootSystem::new(h)?;
            Box::new(move |q| !toral_criterion_sl2(&hrs, q).unwrap_or(false))
        }
    };
    Ok(criterion_candidates(rs)
        .into_iter()
        .filter(|&q| q % 2 == 1 && keep(q))
        .collect())
}

/// `PSL2(h+1)`, `PGL2(h+1)` when `h + 1` is prime; `PSL2(2h+1)` when `2h + 1` is.
pub fn coxeter_prime_subgroups(rs: &RootSystem) -> Vec<String> {
    let h = rs.coxeter_number as u64;
    let mut out = Vec::new();
    if is_prime(h + 1) {
        out.push(format!("PSL2({})", h + 1));
        out.push(format!("PGL2({})", h + 1));
    }
    if is_prime(2 * h + 1) {
        out.push(format!("PSL2({})", 2 * h + 1));
    }
    out
}

/// Multiset of highest weights `n_i` of the SL2-summands `L(n_i)` of the
/// adjoint representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjointDecomposition {
    /// Ascending.
    pub parts: Vec<u32>,
}

impl AdjointDecomposition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable();
        AdjointDecomposition { parts }
    }

    pub fn total_dim(&self) -> usize {
        self.parts.iter().map(|&n| n as usize + 1).sum()
    }

    pub fn max_part(&self) -> u32 {
        self.parts.last().copied().unwrap_or(0)
    }
}

pub fn principal_labels(rs: &RootSystem) -> AdjointDecomposition {
    let d = AdjointDecomposition::new(rs.degrees.iter().map(|&d| 2 * d - 2).collect());
    debug_assert_eq!(d.total_dim(), rs.dim_g);
    d
}

/// Decompose the adjoint representation under the SL2 with the given
/// Dynkin labels: the torus weight on the root `alpha` is
/// `sum_i c_i(alpha) label_i`, the Cartan contributes `rank` zeros, and the
/// weight multiset is peeled into symmetric strings from the top.
pub fn labeled_adjoint_decomposition(
    rs: &RootSystem,
    labels: &[i64],
) -> Result<AdjointDecomposition> {
    if labels.len() != rs.rank() {
        return invalid(format!(
            "expected {} labels, got {}",
            rs.rank(),
            labels.len()
        ));
    }
    if labels.iter().any(|&l| l < 0) {
        return invalid("labels must be nonnegative");
    }
    let mut mult: BTreeMap<i64, i64> = BTreeMap::new();
    *mult.entry(0).or_insert(0) += rs.rank() as i64;
    for beta in &rs.positive_roots {
        let w: i64 = beta.iter().zip(labels).map(|(c, l)| c * l).sum();
        *mult.entry(w).or_insert(0) += 1;
        *mult.entry(-w).or_insert(0) += 1;
    }
    let mut parts = Vec::new();
    while let Some((&top, _)) = mult.iter().next_back() {
        if top < 0 {
            return Err(Error::Invalid(format!(
                "labels {labels:?}: weights left over after peeling"
            )));
        }
        let mut k = top;
        while k >= -top {
            let e = mult.get_mut(&k).filter(|c| **c > 0).ok_or_else(|| {
                Error::Invalid(format!(
                    "labels {labels:?}: string of length {} broken at {k}",
                    top + 1
                ))
            })?;
            *e -= 1;
            if *e == 0 {
                mult.remove(&k);
            }
            k -= 2;
        }
        parts.push(top as u32);
    }
    let d = AdjointDecomposition::new(parts);
    if d.total_dim() != rs.dim_g {
        return Err(Error::Internal(
            "decomposition does not exhaust the adjoint".into(),
        ));
    }
    Ok(d)
}

/// All `n_i < p`, exactly one `n_i = 2`, exactly one `n_i = p - 3`, and `p > h`.
pub fn lifting_condition_check(rs: &RootSystem, d: &AdjointDecomposition, p: u64) -> bool {
    let p32 = p as u32;
    p >= 3
        && d.parts.iter().all(|&n| (n as u64) < p)
        && d.parts.iter().filter(|&&n| n == 2).count() == 1
        && d.parts.iter().filter(|&&n| n + 3 == p32).count() == 1
        && p > rs.coxeter_number as u64
}

/// Reading orders for a written E8 diagram: position `k` of the written
/// label list is placed on node `order[k]` (0-based Bourbaki numbering).
pub fn e8_reading_orders() -> Vec<(&'static str, [usize; 8])> {
    vec![
        ("bourbaki", [0, 1, 2, 3, 4, 5, 6, 7]),
        ("chain-then-branch", [0, 2, 3, 4, 5, 6, 7, 1]),
        ("reversed-chain-then-branch", [7, 6, 5, 4, 3, 2, 0, 1]),
        ("reversed-bourbaki", [7, 6, 5, 4, 3, 2, 1, 0]),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelCheck {
    pub reading: String,
    pub labels: Vec<i64>,
    pub decomposition: AdjointDecomposition,
    pub passes: bool,
}

/// Try each reading order of an E8 label list; the first order giving a
/// valid decomposition that passes the lifting conditions at `p` wins.
pub fn check_e8_labels(rs: &RootSystem, written: &[i64], p: u64) -> Result<Option<LabelCheck>> {
    if rs.cartan_type.family != Family::E || rs.rank() != 8 || written.len() != 8 {
        return invalid("E8 label check needs E8 and eight labels");
    }
    for (name, order) in e8_reading_orders() {
        let mut labels = vec![0i64; 8];
        for (k, &node) in order.iter().enumerate() {
            labels[node] = written[k];
        }
        let Ok(d) = labeled_adjoint_decomposition(rs, &labels) else {
            continue;
        };
        if lifting_condition_check(rs, &d, p) {
            return Ok(Some(LabelCheck {
                reading: name.to_string(),
                labels,
                decomposition: d,
                passes: true,
            }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinkowskiBound {
    pub n: u64,
    pub l: u64,
    pub bound: u64,
    /// Set for `l = 2`, where the formula is not the true bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
}

/// `sum_{k >= 0} floor(n / (l^k (l - 1)))`.
pub fn minkowski_bound(n: u64, l: u64) -> Result<MinkowskiBound> {
    if n < 1 {
        return invalid("n must be >= 1");
    }
    if !is_prime(l) {
        return invalid(format!("{l} is not prime"));
    }
    let mut bound = 0;
    let mut den = l - 1;
    loop {
        let term = n / den;
        if term == 0 {
            break;
        }
        bound += term;
        den *= l;
    }
    Ok(MinkowskiBound {
        n,
        l,
        bound,
        caveat: (l == 2).then(|| "formula valid only for l > 2".to_string()),
    })
}

/// `|GL_n(F_p)| = prod_{i<n} (p^n - p^i)`.
pub fn gl_order(n: u32, p: u64) -> BigUint {
    let pn = BigUint::from(p).pow(n);
    (0..n).fold(BigUint::one(), |acc, i| {
        acc * (&pn - BigUint::from(p).pow(i))
    })
}

/// `min v_l(|GL_n(F_p)|)` over primes `3 <= p <= pmax`, `p != l`.
pub fn min_gl_valuation(n: u32, l: u64, pmax: u64) -> u32 {
    primes_up_to(pmax)
        .into_iter()
        .filter(|&p| p >= 3 && p != l)
        .map(|p| valuation(&gl_order(n, p), l))
        .min()
        .expect("at least one prime in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn criteria() {
        assert!(toral_criterion_sl2(&rs("E8"), 61).unwrap());
        assert!(!toral_criterion_sl2(&rs("E8"), 43).unwrap());
        assert!(toral_criterion_sl2(&rs("A1"), 5).unwrap());
        assert!(toral_criterion_gl2(&rs("E8"), 31).unwrap());
        assert!(!toral_criterion_gl2(&rs("A1"), 5).unwrap());
        assert!(toral_criterion_gl2(&rs("G2"), 7).unwrap());
        assert!(toral_criterion_sl2(&rs("G2"), 4).is_err());
        assert!(toral_criterion_sl2(&rs("G2"), 15).is_err());
    }

    #[test]
    fn new_cases() {
        assert_eq!(new_case_report(&rs("G2")).unwrap(), vec![13]);
        assert_eq!(new_case_report(&rs("F4")).unwrap(), vec![17, 25]);
        assert_eq!(new_case_report(&rs("E6")).unwrap(), vec![11, 19]);
        assert_eq!(new_case_report(&rs("E7")).unwrap(), vec![29, 37]);
        assert_eq!(new_case_report(&rs("E8")).unwrap(), vec![31, 41, 49, 61]);
        assert!(new_case_report(&rs("B3")).is_err());
    }

    #[test]
    fn coxeter_primes() {
        assert_eq!(
            coxeter_prime_subgroups(&rs("E8")),
            ["PSL2(31)", "PGL2(31)", "PSL2(61)"]
        );
        assert_eq!(
            coxeter_prime_subgroups(&rs("A1")),
            ["PSL2(3)", "PGL2(3)", "PSL2(5)"]
        );
        assert_eq!(coxeter_prime_subgroups(&rs("E6")), ["PSL2(13)", "PGL2(13)"]);
    }

    #[test]
    fn principal() {
        assert_eq!(principal_labels(&rs("A1")).parts, vec![2]);
        let e8 = principal_labels(&rs("E8"));
        assert_eq!(e8.parts, vec![2, 14, 22, 26, 34, 38, 46, 58]);
        assert_eq!(e8.total_dim(), 248);
        assert_eq!(principal_labels(&rs("A4")).parts, vec![2, 4, 6, 8]);
    }

    #[test]
    fn labeled_all_two_is_principal() {
        for t in crate::rootsys::table_types() {
            let r = RootSystem::new(t).unwrap();
            let d = labeled_adjoint_decomposition(&r, &vec![2; t.rank]).unwrap();
            assert_eq!(d, principal_labels(&r), "{t}");
        }
    }

    #[test]
    fn odd_labels_can_fail_peeling_or_pass() {
        // label 1 on A1: weights {1, 0, -1} peel as L(1) + L(0)
        let a1 = rs("A1");
        let d = labeled_adjoint_decomposition(&a1, &[1]).unwrap();
        assert_eq!(d.parts, vec![0, 1]);
        // zero labels: trivial SL2, all parts 0
        let d = labeled_adjoint_decomposition(&rs("G2"), &[0, 0]).unwrap();
        assert_eq!(d.parts, vec![0; 14]);
    }

    #[test]
    fn lifting_conditions() {
        let e8 = rs("E8");
        let p = principal_labels(&e8);
        assert!(lifting_condition_check(&e8, &p, 61));
        assert!(!lifting_condition_check(&e8, &p, 31));
        let a4 = rs("A4");
        assert!(lifting_condition_check(&a4, &principal_labels(&a4), 11));
    }

    #[test]
    fn e8_label_sets() {
        let e8 = rs("E8");
        let a = check_e8_labels(&e8, &[2, 2, 2, 0, 2, 0, 2, 2], 41)
            .unwrap()
            .unwrap();
        assert_eq!(a.decomposition.max_part(), 38);
        let b = check_e8_labels(&e8, &[2, 0, 0, 2, 0, 2, 0, 2], 31)
            .unwrap()
            .unwrap();
        assert_eq!(b.decomposition.max_part(), 28);
    }

    #[test]
    fn minkowski() {
        assert_eq!(minkowski_bound(1, 5).unwrap().bound, 0);
        assert_eq!(minkowski_bound(4, 3).unwrap().bound, 2);
        assert!(minkowski_bound(4, 2).unwrap().caveat.is_some());
        assert!(minkowski_bound(4, 3).unwrap().caveat.is_none());
        assert_eq!(gl_order(1, 3), BigUint::from(2u32));
        assert_eq!(gl_order(2, 3), BigUint::from(48u32));
        assert_eq!(gl_order(2, 5), BigUint::from(480u32));
    }
}
