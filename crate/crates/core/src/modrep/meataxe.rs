//! Submodule search by the Holt–Rees form of the MeatAxe, with an exhaustive
//! vector scan for small modules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::fp::{FpMatrix, RowEchelon};
use crate::fppoly::{charpoly, distinct_irreducible_factors};

use super::{FpModule, Split};

/// Random algebra elements tried before giving up.
pub const MEATAXE_TRIES: usize = 64;
/// Largest `p^dim` for which every vector is spun as a fallback.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 18;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubmoduleSearch {
    /// Basis (rows) of a proper nonzero invariant subspace.
    Found {
        basis: Vec<Vec<u32>>,
        method: String,
    },
    Irreducible(IrreducibleCertificate),
    Inconclusive {
        tries: usize,
    },
}

/// Transcript of an irreducibility proof. For the Norton test: an algebra
/// element `theta`, an irreducible factor `q` of its characteristic
/// polynomial with `dim ker q(theta) = deg q`, and the dimensions reached by
/// spinning a kernel vector of `q(theta)` and of `q(theta)^T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibleCertificate {
    pub method: String,
    pub seed: u64,
    pub attempt: usize,
    pub factor: Vec<u32>,
    pub nullity: usize,
    pub spin_dim: usize,
    pub dual_spin_dim: usize,
}

impl SubmoduleSearch {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, SubmoduleSearch::Irreducible(_))
    }

    pub fn submodule(&self) -> Option<&[Vec<u32>]> {
        match self {
            SubmoduleSearch::Found { basis, .. } => Some(basis),
            _ => None,
        }
    }
}

/// Echelon basis of the smallest subspace containing `seeds` and stable
/// under `gens` (acting on columns).
pub fn spin(p: u32, dim: usize, gens: &[FpMatrix], seeds: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut e = RowEchelon::new(p, dim);
    let mut queue: Vec<Vec<u32>> = Vec::new();
    for v in seeds {
        if e.insert(v.clone()) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if e.is_full() {
            break;
        }
        for g in gens {
            let w = g.mul_vec(&v);
            if e.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    e.basis()
}

/// Find a proper submodule or prove irreducibility, seeded for
/// reproducibility.
pub fn find_submodule(m: &FpModule, seed: u64) -> SubmoduleSearch {
    match holt_rees(m, seed, MEATAXE_TRIES) {
        SubmoduleSearch::Inconclusive { tries } => {
            exhaustive(m).unwrap_or(SubmoduleSearch::Inconclusive { tries })
        }
        r => r,
    }
}

pub fn holt_rees(m: &FpModule, seed: u64, tries: usize) -> SubmoduleSearch {
    let (p, d) = (m.p(), m.dim());
    if d <= 1 {
        return SubmoduleSearch::Irreducible(IrreducibleCertificate {
            method: "dimension".into(),
            seed,
            attempt: 0,
            factor: vec![],
            nullity: d,
            spin_dim: d,
            dual_spin_dim: d,
        });
    }
    let gens = m.action();
    let gens_t: Vec<FpMatrix> = gens.iter().map(FpMatrix::transpose).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut words: Vec<FpMatrix> = gens.to_vec();
    for attempt in 0..tries {
        let a = words[rng.gen_range(0..words.len())].clone();
        let b = &words[rng.gen_range(0..words.len())];
        words.push(a.mul(b));
        let mut theta = FpMatrix::zeros(p, d, d);
        for w in words.iter().rev().take(6) {
            theta = theta.add(&w.scale(rng.gen_range(0..p)));
        }
        let chi = charpoly(&theta);
        for q in distinct_irreducible_factors(&chi, &mut rng) {
            let qdeg = q.degree().unwrap_or(0);
            let n = q.eval_matrix(&theta);
            let ker = n.nullspace();
            let Some(v) = ker.first() else { continue };
            let s = spin(p, d, gens, std::slice::from_ref(v));
            if s.len() < d {
                return SubmoduleSearch::Found {
                    basis: s,
                    method: "spin".into(),
                };
            }
            if ker.len() != qdeg {
                continue;
            }
            let ker_t = n.transpose().nullspace();
            let s_t = spin(p, d, &gens_t, &ker_t[..1]);
            if s_t.len() < d {
                return SubmoduleSearch::Found {
                    basis: annihilator(p, d, &s_t),
                    method: "norton".into(),
                };
            }
            return SubmoduleSearch::Irreducible(IrreducibleCertificate {
                method: "norton".into(),
                seed,
                attempt,
                factor: q.coeffs().to_vec(),
                nullity: ker.len(),
                spin_dim: s.len(),
                dual_spin_dim: s_t.len(),
            });
        }
    }
    SubmoduleSearch::Inconclusive { tries }
}

/// `{x : w . x = 0 for all w in ws}`; invariant under `rho` when `ws` spans
/// a subspace invariant under the transposes.
fn annihilator(p: u32, d: usize, ws: &[Vec<u32>]) -> Vec<Vec<u32>> {
    debug_assert!(ws.iter().all(|w| w.len() == d));
    FpMatrix::from_rows(p, ws).nullspace()
}

/// Spin every vector up to scalars. `None` when `p^dim` is over the limit.
pub fn exhaustive(m: &FpModule) -> Option<SubmoduleSearch> {
    let (p, d) = (m.p(), m.dim());
    let total = (p as u64).checked_pow(d as u32)?;
    if total > EXHAUSTIVE_LIMIT {
        return None;
    }
    let mut v = vec![0u32; d];
    // normalized vectors: leading nonzero entry 1
    for lead in 0..d {
        let tail = d - lead - 1;
        for code in 0..(p as u64).pow(tail as u32) {
            v.iter_mut().for_each(|x| *x = 0);
            v[lead] = 1;
            let mut c = code;
            for x in v[lead + 1..].iter_mut() {
                *x = (c % p as u64) as u32;
                c /= p as u64;
            }
            let s = spin(p, d, m.action(), std::slice::from_ref(&v));
            if s.len() < d {
                return Some(SubmoduleSearch::Found {
                    basis: s,
                    method: "exhaustive".into(),
                });
            }
        }
    }
    Some(SubmoduleSearch::Irreducible(IrreducibleCertificate {
        method: "exhaustive".into(),
        seed: 0,
        attempt: 0,
        factor: vec![],
        nullity: 0,
        spin_dim: d,
        dual_spin_dim: d,
    }))
}

/// Composition factors, bottom of a composition series first.
pub fn composition_factors(m: &FpModule, seed: u64) -> crate::Result<Vec<FpModule>> {
    match find_submodule(m, seed) {
        SubmoduleSearch::Irreducible(_) => Ok(vec![m.clone()]),
        SubmoduleSearch::Found { basis, .. } => {
            let sp = Split::new(m, &basis)?;
            let mut out = composition_factors(&sp.sub, seed.wrapping_add(1))?;
            out.extend(composition_factors(&sp.quotient, seed.wrapping_add(2))?);
            Ok(out)
        }
        SubmoduleSearch::Inconclusive { tries } => Err(crate::Error::Budget {
            what: format!("submodule search for {}", m.label),
            needed: format!("more than {tries} random elements"),
            budget: tries.to_string(),
        }),
    }
}

/// Whether two composition-factor lists agree up to isomorphism and order.
pub fn same_factors(a: &[FpModule], b: &[FpModule]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for x in a {
        for (j, y) in b.iter().enumerate() {
            // for simple modules a nonzero hom is an isomorphism
            if !used[j] && x.dim() == y.dim() && super::hom_dim(x, y) > 0 {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::modrep::ModExpr;

    fn module(p: u32, s: &str) -> FpModule {
        let g = FiniteGroup::sl2(p).unwrap();
        s.parse::<ModExpr>().unwrap().eval(&g).unwrap()
    }

    #[test]
    fn sym_below_p_is_irreducible() {
        for n in 0..7 {
            let m = module(7, &format!("sym:{n}"));
            assert!(find_submodule(&m, 1).is_irreducible(), "n={n}");
            assert!(exhaustive(&m).map_or(true, |r| r.is_irreducible()));
        }
    }

    #[test]
    fn sym_p_has_frobenius_twist() {
        let m = module(5, "sym:5");
        let r = find_submodule(&m, 3);
        let s = r.submodule().expect("reducible");
        assert!(m.is_invariant(s));
        let cf = composition_factors(&m, 3).unwrap();
        let mut dims: Vec<usize> = cf.iter().map(FpModule::dim).collect();
        dims.sort();
        assert_eq!(dims, vec![2, 4]);
    }

    #[test]
    fn clebsch_gordan_at_seven() {
        let m = module(7, "tensor(sym:2,sym:2)");
        let s = find_submodule(&m, 9);
        assert!(m.is_invariant(s.submodule().unwrap()));
        let mut dims: Vec<usize> = composition_factors(&m, 9)
            .unwrap()
            .iter()
            .map(FpModule::dim)
            .collect();
        dims.sort();
        assert_eq!(dims, vec![1, 3, 5]);
    }

    #[test]
    fn norton_agrees_with_exhaustive_on_small_modules() {
        for s in ["sym:2", "sym:3", "tensor(nat,nat)", "wedge(sym:3,2)"] {
            let m = module(3, s);
            let hr = holt_rees(&m, 5, MEATAXE_TRIES);
            let ex = exhaustive(&m).unwrap();
            assert_eq!(hr.is_irreducible(), ex.is_irreducible(), "{s}");
        }
    }
}
