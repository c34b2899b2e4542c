//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//!
//! Each criterion runs the library's own check (quick tier) and then compares
//! against values frozen here or recomputed by a naive independent method.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use finsub_core::cohom::brute_h1;
use finsub_core::embed::{
    coxeter_prime_subgroups, minkowski_bound, principal_labels, toral_criterion_sl2,
};
use finsub_core::group::FiniteGroup;
use finsub_core::modrep::{exp_degree, ModExpr};
use finsub_core::obstruction::named_tower;
use finsub_core::report::{run_criterion, Tier};
use finsub_core::rootsys::RootSystem;
use finsub_core::weyl::{molien_degrees, springer_check};

const SEED: u64 = 20_240_601;

/// Type, invariant degrees, dimension.
const TABLE: [(&str, &[u32], usize); 16] = [
    ("A1", &[2], 3),
    ("A2", &[2, 3], 8),
    ("A3", &[2, 3, 4], 15),
    ("A4", &[2, 3, 4, 5], 24),
    ("B2", &[2, 4], 10),
    ("B3", &[2, 4, 6], 21),
    ("B4", &[2, 4, 6, 8], 36),
    ("C2", &[2, 4], 10),
    ("C3", &[2, 4, 6], 21),
    ("C4", &[2, 4, 6, 8], 36),
    ("D4", &[2, 4, 4, 6], 28),
    ("G2", &[2, 6], 14),
    ("F4", &[2, 6, 8, 12], 52),
    ("E6", &[2, 5, 6, 8, 9, 12], 78),
    ("E7", &[2, 6, 8, 10, 12, 14, 18], 133),
    ("E8", &[2, 8, 12, 14, 18, 20, 24, 30], 248),
];

fn frozen(t: &str) -> (&'static [u32], usize) {
    let (_, d, dim) = TABLE
        .iter()
        .find(|(n, _, _)| *n == t)
        .expect("type in table");
    (d, *dim)
}

fn rs(t: &str) -> RootSystem {
    RootSystem::new(t.parse().unwrap()).unwrap()
}

fn divisors_of_degrees(d: &[u32]) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=*d.iter().max().unwrap() as u64)
        .filter(|m| d.iter().any(|&x| x as u64 % m == 0))
        .collect();
    out.dedup();
    out
}

/// Independent checks; `Err` names the first disagreement.
fn oracle(n: u32) -> Result<(), String> {
    let fail = |msg: String| Err(msg);
    match n {
        1 => {
            for (t, d, dim) in TABLE {
                let r = rs(t);
                let npos: u32 = d.iter().map(|x| x - 1).sum();
                let h = *d.last().unwrap() as usize;
                if r.degrees != d || r.dim_g != dim || r.num_positive_roots() != npos as usize {
                    return fail(format!("{t}: degrees {:?} dim {}", r.degrees, r.dim_g));
                }
                if r.coxeter_number != h || dim / d.len() - 1 != h {
                    return fail(format!("{t}: Coxeter number {}", r.coxeter_number));
                }
                let prod: u128 = d.iter().map(|&x| x as u128).product();
                if r.weyl_order.to_string() != prod.to_string() {
                    return fail(format!("{t}: |W| = {}", r.weyl_order));
                }
            }
        }
        2 => {
            for t in [
                "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4",
            ] {
                let m = molien_degrees(&rs(t), u64::MAX).unwrap();
                if m != frozen(t).0 {
                    return fail(format!("{t}: Molien degrees {m:?}"));
                }
            }
        }
        3 => {
            for t in ["A1", "A2", "A3", "B2", "B3", "G2", "F4"] {
                let s = springer_check(&rs(t), u64::MAX).unwrap();
                if s.orders_found != divisors_of_degrees(frozen(t).0) {
                    return fail(format!("{t}: orders {:?}", s.orders_found));
                }
            }
        }
        4 => {
            let cases = [
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
                ("E8", 43),
            ];
            for (t, q) in cases {
                let naive = frozen(t).0.iter().any(|&d| (2 * d as u64) % (q - 1) == 0);
                let got = toral_criterion_sl2(&rs(t), q).unwrap();
                if got != naive || got != (q != 43) {
                    return fail(format!("{t} q={q}: {got}"));
                }
            }
        }
        5 => {
            let e8 = coxeter_prime_subgroups(&rs("E8"));
            let a1 = coxeter_prime_subgroups(&rs("A1"));
            if e8 != ["PSL2(31)", "PGL2(31)", "PSL2(61)"] || a1 != ["PSL2(3)", "PGL2(3)", "PSL2(5)"]
            {
                return fail(format!("{e8:?} {a1:?}"));
            }
        }
        6 => {
            let p = principal_labels(&rs("E8"));
            let naive: Vec<u32> = frozen("E8").0.iter().map(|d| 2 * d - 2).collect();
            if p.parts != naive || p.parts.iter().map(|n| n + 1).sum::<u32>() != 248 {
                return fail(format!("{:?}", p.parts));
            }
        }
        7 => {
            // x^5 and y^5 span the Frobenius twist of the natural module
            let g = FiniteGroup::sl2(5).unwrap();
            let m = ModExpr::l(5).eval(&g).unwrap();
            let twist = vec![vec![1, 0, 0, 0, 0, 0], vec![0, 0, 0, 0, 0, 1]];
            if !m.is_invariant(&twist) {
                return fail("span of x^5, y^5 is not invariant".into());
            }
        }
        8 => {
            for p in [5u32, 7] {
                let g = FiniteGroup::sl2(p).unwrap();
                for k in 0..p as usize {
                    let h = brute_h1(&g, &ModExpr::l(k).eval(&g).unwrap())
                        .unwrap()
                        .h_dim;
                    if h != usize::from(k + 3 == p as usize) {
                        return fail(format!("H1(SL2({p}), L({k})) = {h}"));
                    }
                }
            }
        }
        9 => {
            // the tower groups act on the center through det = 1, so H^2 is that of a cyclic group
            for (p, t, h2) in [(3, "c2", 0), (3, "c3", 1), (5, "c5", 1)] {
                let got = named_tower(p, t).unwrap().h2_dim().unwrap();
                if got != h2 {
                    return fail(format!("H2 for {t}@{p} = {got}"));
                }
            }
        }
        10 => {
            let e: ModExpr = "tensor(sym:2,sym:3)".parse().unwrap();
            for p in [5u32, 7] {
                let u = finsub_core::fp::FpMatrix::from_i64_rows(p, &[vec![1, 1], vec![0, 1]]);
                let d = exp_degree(&e, &u).unwrap();
                if d.degree != 5 || d.n_invariant != 5 {
                    return fail(format!("p={p}: {d:?}"));
                }
            }
        }
        11 => {
            for (n, l) in [(2u64, 3u64), (3, 3), (4, 3), (2, 5), (4, 5)] {
                let mut formula = 0;
                let mut den = l - 1;
                while den <= n {
                    formula += n / den;
                    den *= l;
                }
                // v_l(|GL_n(F_p)|) = sum_{1 <= k <= n} v_l(p^k - 1) for p != l
                let naive = (3..=100u64)
                    .filter(|&p| p != l && (2..p).all(|a| p % a != 0))
                    .map(|p| {
                        (1..=n as u32)
                            .map(|k| {
                                let mut x = p.pow(k) - 1;
                                let mut v = 0;
                                while x % l == 0 {
                                    x /= l;
                                    v += 1;
                                }
                                v
                            })
                            .sum::<u64>()
                    })
                    .min()
                    .unwrap();
                let b = minkowski_bound(n, l).unwrap();
                if b.bound != formula || b.bound != naive || b.caveat.is_some() {
                    return fail(format!("n={n} l={l}: {} vs {formula}, {naive}", b.bound));
                }
            }
            if minkowski_bound(3, 2).unwrap().caveat.is_none() {
                return fail("missing caveat for l = 2".into());
            }
        }
        _ => unreachable!(),
    }
    Ok(())
}

fn limit(n: u32) -> Duration {
    Duration::from_secs(match n {
        1 | 4 | 5 => 1,
        6 | 11 => 5,
        2 | 3 | 10 => 30,
        7 | 9 => 60,
        8 => 120,
        _ => unreachable!(),
    })
}

fn main() -> ExitCode {
    let mut failed = 0;
    for n in 1..=11 {
        let t0 = Instant::now();
        let report = run_criterion(n, Tier::Quick, SEED);
        let elapsed = t0.elapsed();
        let verdict = match &report {
            Err(e) => Err(format!("error: {e}")),
            Ok(r) if !r.passed => {
                let bad: Vec<&str> = r
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name.as_str())
                    .collect();
                Err(format!("failed checks {bad:?}"))
            }
            Ok(_) if elapsed > limit(n) => Err(format!("took {elapsed:.2?}, limit {:?}", limit(n))),
            Ok(_) => oracle(n).map_err(|e| format!("oracle mismatch: {e}")),
        };
        let title = finsub_core::report::title(n);
        match verdict {
            Ok(()) => println!(
                "criterion {n:>2} PASS  {title} ({elapsed:.2?}, limit {:?})",
                limit(n)
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {title}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
