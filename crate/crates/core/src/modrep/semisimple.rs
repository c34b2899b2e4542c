//! Semisimplicity by splitting: find a submodule `S`, then solve for an
//! invariant complement. If none exists the module is not semisimple, since
//! in a semisimple module every submodule is a direct summand.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::{add_mod, neg_mod, sub_mod, FpMatrix};

use super::meataxe::{find_submodule, SubmoduleSearch};
use super::{FpModule, Split};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimplicityVerdict {
    pub module: String,
    pub p: u32,
    pub dim: usize,
    pub semisimple: bool,
    /// Dimensions of the simple summands, sorted (when semisimple).
    pub decomposition: Vec<usize>,
    pub witness: Option<NonSplitWitness>,
    pub seed: u64,
}

/// A proper invariant subspace with no invariant complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonSplitWitness {
    /// Basis (rows) of the submodule, in the module's own coordinates.
    pub submodule: Vec<Vec<u32>>,
    /// Rank of the splitting system and of its augmented matrix; the system
    /// is inconsistent exactly when these differ.
    pub rank: usize,
    pub augmented_rank: usize,
    /// Result of the independent projection-system check.
    pub rechecked: bool,
}

pub fn is_semisimple(m: &FpModule, seed: u64) -> Result<SemisimplicityVerdict> {
    let embed = FpMatrix::identity(m.p(), m.dim());
    let mut decomposition = Vec::new();
    let mut witness = None;
    decide(m, &embed, seed, &mut decomposition, &mut witness)?;
    if let Some(w) = witness.as_mut() {
        w.rechecked = !has_equivariant_projection(m, &w.submodule);
    }
    decomposition.sort_unstable();
    let semisimple = witness.is_none();
    Ok(SemisimplicityVerdict {
        module: m.label.clone(),
        p: m.p(),
        dim: m.dim(),
        semisimple,
        decomposition: if semisimple {
            decomposition
        } else {
            Vec::new()
        },
        witness,
        seed,
    })
}

/// `embed` has as columns the images in the top module of this piece's basis.
fn decide(
    m: &FpModule,
    embed: &FpMatrix,
    seed: u64,
    factors: &mut Vec<usize>,
    witness: &mut Option<NonSplitWitness>,
) -> Result<()> {
    if m.dim() == 0 {
        return Ok(());
    }
    let basis = match find_submodule(m, seed) {
        SubmoduleSearch::Irreducible(_) => {
            factors.push(m.dim());
            return Ok(());
        }
        SubmoduleSearch::Found { basis, .. } => basis,
        SubmoduleSearch::Inconclusive { tries } => {
            return Err(Error::Budget {
                what: format!("submodule search for {}", m.label),
                needed: format!("more than {tries} random elements"),
                budget: tries.to_string(),
            })
        }
    };
    let sp = Split::new(m, &basis)?;
    match solve_complement(&sp) {
        Err((rank, augmented_rank)) => {
            let sub = (0..sp.k).map(|j| embed.mul_vec(&sp.q.column(j))).collect();
            *witness = Some(NonSplitWitness {
                submodule: sub,
                rank,
                augmented_rank,
                rechecked: false,
            });
        }
        Ok(x) => {
            let (k, d) = (sp.k, m.dim());
            let sub_embed = embed.mul(&sp.q.submatrix(0..d, 0..k));
            // complement spanned by the columns of Q [X; I]
            let lift = x.vstack(&FpMatrix::identity(m.p(), d - k));
            let comp_embed = embed.mul(&sp.q.mul(&lift));
            decide(&sp.sub, &sub_embed, seed.wrapping_add(1), factors, witness)?;
            if witness.is_none() {
                decide(
                    &sp.quotient,
                    &comp_embed,
                    seed.wrapping_add(2),
                    factors,
                    witness,
                )?;
            }
        }
    }
    Ok(())
}

/// Solve `A_g X - X C_g = -B_g` for all generators. On failure returns the
/// ranks of the coefficient and augmented matrices.
fn solve_complement(sp: &Split) -> std::result::Result<FpMatrix, (usize, usize)> {
    let p = sp.sub.p();
    let k = sp.k;
    let c = sp.quotient.dim();
    let n = k * c;
    // unknown X[r][s] at r * c + s
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for ((a, cg), b) in sp
        .sub
        .action()
        .iter()
        .zip(sp.quotient.action())
        .zip(&sp.off)
    {
        for r in 0..k {
            for s in 0..c {
                let mut row = vec![0u32; n + 1];
                for l in 0..k {
                    row[l * c + s] = add_mod(row[l * c + s], a.get(r, l), p);
                }
                for l in 0..c {
                    row[r * c + l] = sub_mod(row[r * c + l], cg.get(l, s), p);
                }
                row[n] = neg_mod(b.get(r, s), p);
                rows.push(row);
            }
        }
    }
    let aug = FpMatrix::from_rows(p, &rows);
    let coef = aug.submatrix(0..rows.len(), 0..n);
    let rhs = aug.submatrix(0..rows.len(), n..n + 1);
    match coef.solve(&rhs) {
        Some(x) => Ok(FpMatrix::from_rows(
            p,
            &(0..k)
                .map(|r| (0..c).map(|s| x.get(r * c + s, 0)).collect())
                .collect::<Vec<_>>(),
        )),
        None => Err((coef.rank(), aug.rank())),
    }
}

/// Independent check: does an equivariant `pi: M -> S` with `pi|_S = id`
/// exist? Unknowns are the entries of `pi` as a `k x d` matrix in the
/// coordinates of the given basis of `S`.
pub fn has_equivariant_projection(m: &FpModule, sub: &[Vec<u32>]) -> bool {
    let (p, d) = (m.p(), m.dim());
    let k = sub.len();
    let s = FpMatrix::from_columns(p, d, sub);
    // action on S: g s_j = sum_i A[i][j] s_i
    let a_mats: Vec<FpMatrix> = m
        .action()
        .iter()
        .map(|g| s.solve(&g.mul(&s)).expect("subspace is invariant"))
        .collect();
    let n = k * d;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    // pi g - A_g pi = 0
    for (g, a) in m.action().iter().zip(&a_mats) {
        for r in 0..k {
            for col in 0..d {
                let mut row = vec![0u32; n + 1];
                for l in 0..d {
                    row[r * d + l] = add_mod(row[r * d + l], g.get(l, col), p);
                }
                for l in 0..k {
                    row[l * d + col] = sub_mod(row[l * d + col], a.get(r, l), p);
                }
                rows.push(row);
            }
        }
    }
    // pi s_j = e_j
    for j in 0..k {
        for r in 0..k {
            let mut row = vec![0u32; n + 1];
            for l in 0..d {
                row[r * d + l] = s.get(l, j);
            }
            row[n] = u32::from(r == j);
            rows.push(row);
        }
    }
    let aug = FpMatrix::from_rows(p, &rows);
    aug.submatrix(0..rows.len(), 0..n).rank() == aug.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::modrep::ModExpr;

    fn verdict(p: u32, s: &str, seed: u64) -> SemisimplicityVerdict {
        let g = FiniteGroup::sl2(p).unwrap();
        is_semisimple(&s.parse::<ModExpr>().unwrap().eval(&g).unwrap(), seed).unwrap()
    }

    #[test]
    fn irreducible_is_one_factor() {
        let v = verdict(7, "sym:4", 0);
        assert!(v.semisimple);
        assert_eq!(v.decomposition, vec![5]);
    }

    #[test]
    fn tensor_below_threshold_splits() {
        let v = verdict(5, "tensor(sym:2,sym:2)", 0);
        assert!(v.semisimple);
        assert_eq!(v.decomposition, vec![1, 3, 5]);
    }

    #[test]
    fn sym_p_does_not_split() {
        let v = verdict(5, "sym:5", 0);
        assert!(!v.semisimple);
        let w = v.witness.unwrap();
        assert_eq!(w.submodule.len(), 2);
        assert!(w.augmented_rank > w.rank);
        assert!(w.rechecked);
    }

    #[test]
    fn verdict_is_seed_independent() {
        for s in ["tpow(nat,3)", "sym:5", "tensor(sym:3,sym:3)"] {
            let vs: Vec<_> = (0..3).map(|seed| verdict(5, s, seed)).collect();
            for v in &vs[1..] {
                assert_eq!(v.semisimple, vs[0].semisimple, "{s}");
                assert_eq!(v.decomposition, vs[0].decomposition, "{s}");
            }
        }
    }

    #[test]
    fn direct_sum_of_simples_is_semisimple() {
        let v = verdict(7, "sum(sym:1,sym:3,sym:3)", 4);
        assert!(v.semisimple);
        assert_eq!(v.decomposition, vec![2, 4, 4]);
    }
}
