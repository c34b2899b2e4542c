//! The numbered verification criteria, grouped into a quick and a long tier,
//! and the reference tables.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cohom::{
    brute_h1, brute_h2_direct, cyclic_cohomology, cyclic_cohomology_from_profile, h2_by_shift_with,
    jordan_profile, random_order_p, Hull,
};
use crate::embed::{
    check_e8_labels, coxeter_prime_subgroups, lifting_condition_check, min_gl_valuation,
    minkowski_bound, new_case_report, principal_labels, toral_criterion_sl2,
};
use crate::error::{invalid, Result};
use crate::fp::{span_basis, FpMatrix};
use crate::group::FiniteGroup;
use crate::modrep::{
    exp_degree, hom_dim, is_semisimple, threshold_survey, Family as ModFamily, FpModule, ModExpr,
};
use crate::obstruction::{
    check_lie_structure, named_tower, verify_cup_symmetry, verify_prop1, verify_prop2, Sweep,
};
use crate::rootsys::{table_types, CartanType, Family, RootSystem};
use crate::weyl::{molien_degrees, springer_check};

pub const CRITERIA: std::ops::RangeInclusive<u32> = 1..=11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Quick,
    Long,
}

impl std::str::FromStr for Tier {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Tier::Quick),
            "long" => Ok(Tier::Long),
            _ => invalid(format!("unknown tier '{s}' (quick, long)")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub criterion: u32,
    pub title: &'static str,
    pub tier: Tier,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn rs(t: &str) -> Result<RootSystem> {
    RootSystem::new(t.parse()?)
}

pub fn title(n: u32) -> &'static str {
    match n {
        1 => "invariant degree table",
        2 => "Molien series degrees",
        3 => "eigenvalue orders versus degree divisors",
        4 => "toral criterion for SL2(q)",
        5 => "Coxeter-prime subgroups",
        6 => "principal and labelled decompositions",
        7 => "semisimplicity",
        8 => "cohomology dimensions",
        9 => "obstruction calculus",
        10 => "degree of one-parameter subgroups",
        11 => "Minkowski bound",
        _ => "unknown",
    }
}

pub fn run_criterion(n: u32, tier: Tier, seed: u64) -> Result<CriterionReport> {
    let checks = match n {
        1 => degrees()?,
        2 => molien(tier)?,
        3 => springer(tier)?,
        4 => toral()?,
        5 => coxeter_primes()?,
        6 => decompositions()?,
        7 => semisimplicity(seed)?,
        8 => cohomology(tier, seed)?,
        9 => obstruction(seed)?,
        10 => exp_degrees()?,
        11 => minkowski()?,
        _ => return invalid(format!("criteria are numbered 1 to 11, got {n}")),
    };
    Ok(CriterionReport {
        criterion: n,
        title: title(n),
        tier,
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

pub fn verify_all(tier: Tier, seed: u64) -> Result<Vec<CriterionReport>> {
    CRITERIA.map(|n| run_criterion(n, tier, seed)).collect()
}

fn degrees() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for t in table_types() {
        let r = RootSystem::new(t)?;
        let d = &r.degrees;
        let sum: usize = d.iter().map(|&x| x as usize - 1).sum();
        let prod: BigUint = d.iter().map(|&x| BigUint::from(x)).product();
        let h = r.dim_g / r.rank() - 1;
        let ok = sum == r.num_positive_roots()
            && prod == r.weyl_order
            && h == r.coxeter_number
            && h as u32 == *d.last().expect("nonempty")
            && r.dim_g == t.table_dim()
            && *d == t.degrees();
        out.push(check(
            t.to_string(),
            ok,
            format!(
                "degrees {d:?}, dim {}, h {}, |W| {}",
                r.dim_g, r.coxeter_number, r.weyl_order
            ),
        ));
    }
    Ok(out)
}

fn molien(tier: Tier) -> Result<Vec<Check>> {
    let cap: u64 = match tier {
        Tier::Quick => 1152,
        Tier::Long => 51_840,
    };
    let mut out = Vec::new();
    for t in table_types() {
        let r = RootSystem::new(t)?;
        if r.weyl_order > BigUint::from(cap) {
            continue;
        }
        let m = molien_degrees(&r, u64::MAX)?;
        out.push(check(t.to_string(), m == t.degrees(), format!("{m:?}")));
    }
    Ok(out)
}

fn springer(tier: Tier) -> Result<Vec<Check>> {
    let mut types = vec!["A1", "A2", "A3", "B2", "B3", "G2", "F4"];
    if tier == Tier::Long {
        types.extend(["E6", "E7"]);
    }
    let mut out = Vec::new();
    for t in types {
        let s = springer_check(&rs(t)?, u64::MAX)?;
        out.push(check(t, s.equal, format!("orders {:?}", s.orders_found)));
    }
    Ok(out)
}

/// Pairs `(type, q)` where the toral criterion holds, and the one where it fails.
pub const TORAL_POSITIVE: [(&str, u64); 11] = [
    ("G2", 13),
    ("F4", 17),
    ("F4", 25),
    ("E6", 11),
    ("E6", 19),
    ("E7", 29),
    ("E7", 37),
    ("E8", 31),
    ("E8", 41),
    ("E8", 49),
    ("E8", 61),
];
pub const TORAL_NEGATIVE: (&str, u64) = ("E8", 43);

fn toral() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (t, q) in TORAL_POSITIVE {
        let v = toral_criterion_sl2(&rs(t)?, q)?;
        out.push(check(format!("{t} q={q}"), v, v.to_string()));
    }
    let (t, q) = TORAL_NEGATIVE;
    let v = toral_criterion_sl2(&rs(t)?, q)?;
    out.push(check(format!("{t} q={q}"), !v, v.to_string()));
    Ok(out)
}

fn coxeter_primes() -> Result<Vec<Check>> {
    let e8 = coxeter_prime_subgroups(&rs("E8")?);
    let a1 = coxeter_prime_subgroups(&rs("A1")?);
    Ok(vec![
        check(
            "E8",
            e8 == ["PSL2(31)", "PGL2(31)", "PSL2(61)"],
            e8.join(", "),
        ),
        check("A1", a1 == ["PSL2(3)", "PGL2(3)", "PSL2(5)"], a1.join(", ")),
    ])
}

fn decompositions() -> Result<Vec<Check>> {
    let e8 = rs("E8")?;
    let a4 = rs("A4")?;
    let pe = principal_labels(&e8);
    let pa = principal_labels(&a4);
    let mut out = vec![check(
        "E8 principal",
        pe.parts == [2, 14, 22, 26, 34, 38, 46, 58] && pe.total_dim() == 248,
        format!("{:?}, total {}", pe.parts, pe.total_dim()),
    )];
    out.push(check(
        "E8 principal p=61",
        lifting_condition_check(&e8, &pe, 61),
        "",
    ));
    out.push(check(
        "A4 principal p=11",
        lifting_condition_check(&a4, &pa, 11),
        "",
    ));
    out.push(check(
        "E8 principal p=31 fails",
        !lifting_condition_check(&e8, &pe, 31),
        "",
    ));
    for (labels, p) in [
        ([2, 2, 2, 0, 2, 0, 2, 2], 41),
        ([2, 0, 0, 2, 0, 2, 0, 2], 31),
    ] {
        let found = check_e8_labels(&e8, &labels, p)?;
        let detail = match &found {
            Some(c) => format!("{} reading, parts {:?}", c.reading, c.decomposition.parts),
            None => "no reading order passes".into(),
        };
        out.push(check(
            format!("E8 labels {labels:?} p={p}"),
            found.is_some(),
            detail,
        ));
    }
    Ok(out)
}

/// Whether the witness of a non-split `Sym^p` is the span of `x^p` and `y^p`,
/// and is isomorphic to the natural module.
fn frobenius_witness(m: &FpModule, g: &FiniteGroup, sub: &[Vec<u32>]) -> Result<bool> {
    let (p, d) = (m.p(), m.dim());
    let ends: Vec<Vec<u32>> = [0, d - 1]
        .iter()
        .map(|&i| (0..d).map(|j| u32::from(i == j)).collect())
        .collect();
    let joint: Vec<Vec<u32>> = sub.iter().chain(&ends).cloned().collect();
    if sub.len() != 2 || span_basis(p, d, &joint).len() != 2 {
        return Ok(false);
    }
    let s = m.split(sub)?.sub;
    Ok(hom_dim(&s, &FpModule::natural(g)) == 1)
}

fn semisimplicity(seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for p in [5u32, 7] {
        let g = FiniteGroup::sl2(p)?;
        let m = ModExpr::l(p as usize).eval(&g)?;
        let v = is_semisimple(&m, seed)?;
        let witness_ok = match &v.witness {
            Some(w) => w.rechecked && frobenius_witness(&m, &g, &w.submodule)?,
            None => false,
        };
        out.push(check(
            format!("sym:{p} over F_{p} non-split"),
            !v.semisimple && witness_ok,
            format!(
                "witness {:?}",
                v.witness.as_ref().map(|w| w.submodule.clone())
            ),
        ));
    }
    let g2 = FiniteGroup::sl2(2)?;
    let v = is_semisimple(&ModExpr::l(2).eval(&g2)?, seed)?;
    out.push(check(
        "sym:2 over F_2 splits",
        v.semisimple,
        format!("{:?}", v.decomposition),
    ));
    for p in [5u32, 7] {
        let s = threshold_survey(p, ModFamily::Tensor, seed)?;
        let below: Vec<_> = s
            .instances
            .iter()
            .filter(|i| i.threshold_satisfied)
            .collect();
        let bad: Vec<&str> = below
            .iter()
            .filter(|i| !i.semisimple)
            .map(|i| i.module.as_str())
            .collect();
        out.push(check(
            format!("tensor L(a)(x)L(b), a+b<{p}"),
            bad.is_empty() && !below.is_empty(),
            format!(
                "{} instances below threshold, failures {bad:?}",
                below.len()
            ),
        ));
    }
    let g5 = FiniteGroup::sl2(5)?;
    let v = is_semisimple(&"tpow(nat,5)".parse::<ModExpr>()?.eval(&g5)?, seed)?;
    out.push(check(
        "tpow(nat,5) over F_5 not semisimple",
        !v.semisimple,
        "",
    ));
    Ok(out)
}

fn cohomology(tier: Tier, seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let primes: &[u32] = match tier {
        Tier::Quick => &[5, 7],
        Tier::Long => &[5, 7, 11],
    };
    for &p in primes {
        let g = FiniteGroup::sl2(p)?;
        let mut dims = Vec::new();
        for n in 0..p as usize {
            dims.push(brute_h1(&g, &ModExpr::l(n).eval(&g)?)?.h_dim);
        }
        let want: Vec<usize> = (0..p as usize)
            .map(|n| usize::from(n + 3 == p as usize))
            .collect();
        out.push(check(
            format!("H1 SL2({p}) L(n)"),
            dims == want,
            format!("{dims:?}"),
        ));
    }
    let h2_cases: &[(u32, usize)] = match tier {
        Tier::Quick => &[(5, 4)],
        Tier::Long => &[(5, 4), (7, 7)],
    };
    for &(p, top) in h2_cases {
        let g = FiniteGroup::sl2(p)?;
        let mut dims = Vec::new();
        let mut agree = true;
        for n in 0..top {
            let m = ModExpr::l(n).eval(&g)?;
            let a = h2_by_shift_with(&g, &m, Hull::Steinberg)?.h_dim;
            let b = h2_by_shift_with(&g, &m, Hull::SteinbergSquare)?.h_dim;
            agree &= a == b;
            dims.push(a);
        }
        let want: Vec<usize> = (0..top).map(|n| usize::from(n == 2)).collect();
        out.push(check(
            format!("H2 SL2({p}) L(n), n<{top}"),
            dims == want && agree,
            format!("{dims:?}, two projective hulls agree: {agree}"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for p in [3u32, 5] {
        let u = FpMatrix::from_i64_rows(p, &[vec![1, 1], vec![0, 1]]);
        let c = FiniteGroup::cyclic(p, u, format!("C{p}"))?;
        let mut ok = true;
        let mut seen = Vec::new();
        for _ in 0..8 {
            let d = rng.gen_range(1..=6);
            let sigma = random_order_p(p, d, &mut rng);
            let m = FpModule::new(p, vec![sigma.clone()], "random")?;
            let prof = jordan_profile(&sigma)?;
            let h1 = brute_h1(&c, &m)?.h_dim;
            let h2 = brute_h2_direct(&c, &m)?.h_dim;
            ok &= h1 == cyclic_cohomology(&sigma, p as u64, 1)?
                && h2 == cyclic_cohomology(&sigma, p as u64, 2)?
                && h1 == cyclic_cohomology_from_profile(&prof, p as usize, 1)
                && h2 == cyclic_cohomology_from_profile(&prof, p as usize, 2);
            seen.push((prof.partition.clone(), h1, h2));
        }
        out.push(check(
            format!("cyclic closed forms C{p}"),
            ok,
            format!("{seen:?}"),
        ));
    }
    Ok(out)
}

fn obstruction(seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for p in [3u32, 5] {
        let r = check_lie_structure(&named_tower(p, "trivial")?);
        out.push(check(
            format!("Lie structure p={p}"),
            r.abelian_group && r.bilinear && r.alternating && r.jacobi,
            "",
        ));
    }
    let c2 = named_tower(3, "c2")?;
    for (name, r) in [
        ("prop 1", verify_prop1(&c2, Sweep::Auto, seed)?),
        ("prop 2", verify_prop2(&c2, Sweep::Auto, seed)?),
        ("symmetry", verify_cup_symmetry(&c2, Sweep::Auto, seed)?),
    ] {
        out.push(check(
            format!("{name} {} exhaustive", r.tower),
            r.exhaustive && r.failures == 0 && r.checked > 0,
            format!("{} checked, {} skipped", r.checked, r.skipped),
        ));
    }
    for t in ["c4", "c5"] {
        let tw = named_tower(5, t)?;
        for (name, r) in [
            ("prop 1", verify_prop1(&tw, Sweep::Sampled(100), seed)?),
            ("prop 2", verify_prop2(&tw, Sweep::Sampled(100), seed)?),
            (
                "symmetry",
                verify_cup_symmetry(&tw, Sweep::Sampled(100), seed)?,
            ),
        ] {
            out.push(check(
                format!("{name} {} sampled", r.tower),
                r.failures == 0 && r.checked >= 100,
                format!(
                    "{} checked, {} nonzero classes",
                    r.checked, r.nonzero_classes
                ),
            ));
        }
    }
    Ok(out)
}

fn exp_degrees() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for p in [5u32, 7] {
        let u = FpMatrix::from_i64_rows(p, &[vec![1, 1], vec![0, 1]]);
        let degs: Vec<usize> = (0..p as usize)
            .map(|n| exp_degree(&ModExpr::l(n), &u).map(|d| d.degree))
            .collect::<Result<_>>()?;
        let want: Vec<usize> = (0..p as usize).collect();
        out.push(check(
            format!("d_u(L(n)) over F_{p}"),
            degs == want,
            format!("{degs:?}"),
        ));
        let mut failures = Vec::new();
        let mut count = 0;
        for fam in [ModFamily::Tensor, ModFamily::Wedge, ModFamily::TensorPower] {
            for (e, _) in fam.instances(p) {
                count += 1;
                let d = exp_degree(&e, &u)?;
                if !d.bound_holds {
                    failures.push(d.module);
                }
            }
        }
        out.push(check(
            format!("d_u(V) <= n(V) over F_{p}"),
            failures.is_empty(),
            format!("{count} modules, failures {failures:?}"),
        ));
    }
    Ok(out)
}

pub const MINKOWSKI_CASES: [(u64, u64); 5] = [(2, 3), (3, 3), (4, 3), (2, 5), (4, 5)];

fn minkowski() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (n, l) in MINKOWSKI_CASES {
        let b = minkowski_bound(n, l)?.bound;
        let v = min_gl_valuation(n as u32, l, 100) as u64;
        out.push(check(
            format!("n={n} l={l}"),
            b == v,
            format!("bound {b}, min valuation {v}"),
        ));
    }
    let two = minkowski_bound(4, 2)?;
    out.push(check(
        "l=2 caveat",
        two.caveat.is_some(),
        two.caveat.unwrap_or_default(),
    ));
    Ok(out)
}

// ---------------------------------------------------------------------------
// tables

#[derive(Clone, Debug, Serialize)]
pub struct DegreeRow {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub degrees: Vec<u32>,
    pub dim: usize,
    pub coxeter_number: usize,
    pub positive_roots: usize,
    #[serde(serialize_with = "crate::error::ser_display")]
    pub weyl_order: BigUint,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionRow {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub simply_connected: Vec<u64>,
    pub adjoint: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseRow {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub new_q: Vec<u64>,
}

/// One representative rank per family.
fn family_representatives() -> Vec<CartanType> {
    ["A4", "B4", "C4", "D4", "G2", "F4", "E6", "E7", "E8"]
        .iter()
        .map(|s| s.parse().expect("valid type"))
        .collect()
}

pub fn degree_table() -> Result<Vec<DegreeRow>> {
    family_representatives()
        .into_iter()
        .map(|t| {
            let r = RootSystem::new(t)?;
            Ok(DegreeRow {
                cartan_type: t.to_string(),
                positive_roots: r.num_positive_roots(),
                degrees: r.degrees,
                dim: r.dim_g,
                coxeter_number: r.coxeter_number,
                weyl_order: r.weyl_order,
            })
        })
        .collect()
}

pub fn torsion_table() -> Result<Vec<TorsionRow>> {
    family_representatives()
        .into_iter()
        .map(|t| {
            let r = RootSystem::new(t)?;
            Ok(TorsionRow {
                cartan_type: t.to_string(),
                simply_connected: r.torsion_primes(true).into_iter().collect(),
                adjoint: r.torsion_primes(false).into_iter().collect(),
            })
        })
        .collect()
}

pub fn case_table() -> Result<Vec<CaseRow>> {
    [
        (Family::G, 2),
        (Family::F, 4),
        (Family::E, 6),
        (Family::E, 7),
        (Family::E, 8),
    ]
    .into_iter()
    .map(|(f, r)| {
        let t = CartanType::new(f, r)?;
        Ok(CaseRow {
            cartan_type: t.to_string(),
            new_q: new_case_report(&RootSystem::new(t)?)?,
        })
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_criteria_pass() {
        for n in [1, 4, 5, 6, 11] {
            let r = run_criterion(n, Tier::Quick, 0).unwrap();
            assert!(r.passed, "{r:#?}");
        }
        assert!(run_criterion(12, Tier::Quick, 0).is_err());
    }

    #[test]
    fn tables() {
        let d = degree_table().unwrap();
        assert_eq!(d.len(), 9);
        let e8 = torsion_table()
            .unwrap()
            .into_iter()
            .find(|r| r.cartan_type == "E8")
            .unwrap();
        assert_eq!(e8.simply_connected, vec![2, 3, 5]);
        let e7 = case_table()
            .unwrap()
            .into_iter()
            .find(|r| r.cartan_type == "E7")
            .unwrap();
        assert_eq!(e7.new_q, vec![29, 37]);
    }
}
