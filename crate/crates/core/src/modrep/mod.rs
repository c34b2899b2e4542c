//! Finite-dimensional modules over F_p for finite matrix groups, given by
//! the matrices of the group generators.

pub mod expr;
pub mod meataxe;
pub mod semisimple;
pub mod survey;
pub mod unipotent;

use crate::error::{invalid, Result};
use crate::fp::FpMatrix;
use crate::group::FiniteGroup;
use crate::ring::{sym_power_matrix, wedge_power_matrix, Fp, RMat};

pub use expr::ModExpr;
pub use meataxe::{find_submodule, SubmoduleSearch};
pub use semisimple::{is_semisimple, SemisimplicityVerdict};
pub use survey::{threshold_survey, Family, SurveyReport};
pub use unipotent::{exp_degree, ExpDegree};

/// Module for a group with `k` generators: `action[i]` is the matrix of
/// generator `i` acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpModule {
    p: u32,
    dim: usize,
    action: Vec<FpMatrix>,
    /// Torus weights of the underlying SL2 module, when known.
    weights: Option<Vec<i64>>,
    pub label: String,
}

impl FpModule {
    pub fn new(p: u32, action: Vec<FpMatrix>, label: impl Into<String>) -> Result<Self> {
        let Some(first) = action.first() else {
            return invalid("module needs at least one generator matrix");
        };
        let dim = first.nrows();
        if action
            .iter()
            .any(|m| m.nrows() != dim || m.ncols() != dim || m.p() != p)
        {
            return invalid("action matrices must be square of one size over F_p");
        }
        Ok(FpModule {
            p,
            dim,
            action,
            weights: None,
            label: label.into(),
        })
    }

    pub fn with_weights(mut self, weights: Vec<i64>) -> Self {
        assert_eq!(weights.len(), self.dim, "one weight per basis vector");
        self.weights = Some(weights);
        self
    }

    pub fn natural(group: &FiniteGroup) -> Self {
        let m = Self::new(group.p(), group.generators().to_vec(), "nat").expect("group generators");
        if group.degree() == 2 {
            m.with_weights(vec![1, -1])
        } else {
            m
        }
    }

    pub fn trivial(p: u32, ngens: usize, dim: usize) -> Self {
        let m =
            Self::new(p, vec![FpMatrix::identity(p, dim); ngens.max(1)], "triv").expect("identity");
        m.with_weights(vec![0; dim])
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[FpMatrix] {
        &self.action
    }

    pub fn num_generators(&self) -> usize {
        self.action.len()
    }

    pub fn weights(&self) -> Option<&[i64]> {
        self.weights.as_deref()
    }

    /// `n(V)`: the largest torus weight, when weights are known.
    pub fn n_invariant(&self) -> Option<i64> {
        self.weights
            .as_ref()
            .map(|w| w.iter().copied().max().unwrap_or(0))
    }

    /// Whether the generator matrices define a representation of `group`.
    pub fn respects(&self, group: &FiniteGroup) -> bool {
        group.num_generators() == self.action.len()
            && group.extend_to_elements(&self.action).is_some()
    }

    fn map_gens(&self, label: String, f: impl Fn(&RMat<Fp>) -> RMat<Fp>) -> Self {
        let action = self
            .action
            .iter()
            .map(|m| f(&RMat::from_fp(m)).to_fp(self.p))
            .collect();
        FpModule::new(self.p, action, label).expect("constructed action")
    }

    fn check_same(&self, rhs: &Self) -> Result<()> {
        if self.p != rhs.p || self.action.len() != rhs.action.len() {
            return invalid(format!(
                "modules {} and {} have different parents",
                self.label, rhs.label
            ));
        }
        Ok(())
    }

    pub fn tensor(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let action = self
            .action
            .iter()
            .zip(&rhs.action)
            .map(|(a, b)| a.kron(b))
            .collect();
        let mut m = FpModule::new(
            self.p,
            action,
            format!("tensor({},{})", self.label, rhs.label),
        )?;
        if let (Some(a), Some(b)) = (&self.weights, &rhs.weights) {
            m.weights = Some(
                a.iter()
                    .flat_map(|x| b.iter().map(move |y| x + y))
                    .collect(),
            );
        }
        Ok(m)
    }

    pub fn direct_sum(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let action = self
            .action
            .iter()
            .zip(&rhs.action)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        let mut m = FpModule::new(self.p, action, format!("sum({},{})", self.label, rhs.label))?;
        if let (Some(a), Some(b)) = (&self.weights, &rhs.weights) {
            m.weights = Some(a.iter().chain(b).copied().collect());
        }
        Ok(m)
    }

    /// Contragredient: `g -> rho(g^{-1})^T`.
    pub fn dual(&self) -> Self {
        let action = self
            .action
            .iter()
            .map(|m| {
                m.inverse()
                    .expect("action matrices are invertible")
                    .transpose()
            })
            .collect();
        let mut m = FpModule::new(self.p, action, format!("dual({})", self.label)).expect("dual");
        m.weights = self
            .weights
            .as_ref()
            .map(|w| w.iter().map(|x| -x).collect());
        m
    }

    pub fn sym_power(&self, n: usize) -> Self {
        let one = Fp { v: 1, p: self.p };
        let mut m = self.map_gens(format!("sym({},{n})", self.label), |g| {
            sym_power_matrix(g, n, &one)
        });
        m.weights = self.weights.as_ref().map(|w| expr::sym_weights(w, n));
        m
    }

    pub fn wedge(&self, i: usize) -> Self {
        let one = Fp { v: 1, p: self.p };
        let mut m = self.map_gens(format!("wedge({},{i})", self.label), |g| {
            wedge_power_matrix(g, i, &one)
        });
        m.weights = self.weights.as_ref().map(|w| expr::wedge_weights(w, i));
        m
    }

    pub fn tensor_power(&self, k: usize) -> Result<Self> {
        let mut acc = FpModule::trivial(self.p, self.action.len(), 1);
        for _ in 0..k {
            acc = acc.tensor(self)?;
        }
        acc.label = format!("tpow({},{k})", self.label);
        Ok(acc)
    }

    /// The module structure on an invariant subspace spanned by the columns
    /// of `basis` (given as rows here), together with the quotient.
    pub fn split(&self, sub_basis: &[Vec<u32>]) -> Result<Split> {
        Split::new(self, sub_basis)
    }

    /// Whether the span of `vectors` is invariant.
    pub fn is_invariant(&self, vectors: &[Vec<u32>]) -> bool {
        let mut e = crate::fp::RowEchelon::new(self.p, self.dim);
        for v in vectors {
            e.insert(v.clone());
        }
        vectors
            .iter()
            .all(|v| self.action.iter().all(|g| e.contains(&g.mul_vec(v))))
    }

    /// Matrix of the sum `sum_k c_k g_k` of generator actions.
    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

/// Adapted basis for an invariant subspace `S`: with `Q` the matrix whose
/// columns are a basis of `S` followed by a complement,
/// `Q^{-1} rho(g) Q = [[A_g, B_g], [0, C_g]]`.
#[derive(Clone, Debug)]
pub struct Split {
    pub k: usize,
    pub q: FpMatrix,
    pub q_inv: FpMatrix,
    pub sub: FpModule,
    pub quotient: FpModule,
    /// Off-diagonal blocks `B_g`, one per generator.
    pub off: Vec<FpMatrix>,
}

impl Split {
    fn new(m: &FpModule, sub_basis: &[Vec<u32>]) -> Result<Self> {
        let p = m.p;
        let d = m.dim;
        let sub = crate::fp::span_basis(p, d, sub_basis);
        let k = sub.len();
        if k == 0 || k == d {
            return invalid("subspace must be proper and nonzero");
        }
        if !m.is_invariant(&sub) {
            return invalid("subspace is not invariant");
        }
        let comp = crate::fp::complement_basis(p, d, &sub);
        let cols: Vec<Vec<u32>> = sub.iter().chain(&comp).cloned().collect();
        let q = FpMatrix::from_columns(p, d, &cols);
        let q_inv = q.inverse().expect("adapted basis is a basis");
        let mut a = Vec::new();
        let mut c = Vec::new();
        let mut off = Vec::new();
        for g in &m.action {
            let t = q_inv.mul(g).mul(&q);
            if !t.submatrix(k..d, 0..k).is_zero() {
                return invalid("adapted form is not block triangular");
            }
            a.push(t.submatrix(0..k, 0..k));
            off.push(t.submatrix(0..k, k..d));
            c.push(t.submatrix(k..d, k..d));
        }
        Ok(Split {
            k,
            q,
            q_inv,
            sub: FpModule::new(p, a, format!("sub({})", m.label))?,
            quotient: FpModule::new(p, c, format!("quot({})", m.label))?,
            off,
        })
    }
}

/// Dimension of `Hom_G(V, W)`: solutions of `rho_W(g) X = X rho_V(g)`.
pub fn hom_dim(v: &FpModule, w: &FpModule) -> usize {
    hom_space(v, w).len()
}

/// Basis of `Hom_G(V, W)`, each element a `dim W x dim V` matrix.
pub fn hom_space(v: &FpModule, w: &FpModule) -> Vec<FpMatrix> {
    let p = v.p;
    let (dv, dw) = (v.dim, w.dim);
    let n = dv * dw;
    // unknown X[r][c] at r * dv + c
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (a, b) in w.action.iter().zip(&v.action) {
        for r in 0..dw {
            for c in 0..dv {
                let mut row = vec![0u32; n];
                for l in 0..dw {
                    let x = a.get(r, l);
                    if x != 0 {
                        row[l * dv + c] = crate::fp::add_mod(row[l * dv + c], x, p);
                    }
                }
                for l in 0..dv {
                    let x = b.get(l, c);
                    if x != 0 {
                        row[r * dv + l] = crate::fp::sub_mod(row[r * dv + l], x, p);
                    }
                }
                rows.push(row);
            }
        }
    }
    let sys = FpMatrix::from_rows(p, &rows);
    sys.nullspace()
        .into_iter()
        .map(|x| FpMatrix::from_rows(p, &x.chunks(dv).map(|c| c.to_vec()).collect::<Vec<_>>()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_is_an_involution() {
        let g = FiniteGroup::sl2(5).unwrap();
        let v = FpModule::natural(&g).sym_power(3);
        assert_eq!(v.dual().dual().action(), v.action());
        assert!(v.dual().respects(&g));
    }

    #[test]
    fn constructions_respect_relations() {
        let g = FiniteGroup::sl2(5).unwrap();
        let v = FpModule::natural(&g);
        assert!(v.sym_power(4).respects(&g));
        assert!(v.sym_power(2).wedge(2).respects(&g));
        assert!(v.tensor(&v.sym_power(2)).unwrap().respects(&g));
        let det = v.wedge(2);
        assert_eq!(det.dim(), 1);
        assert!(det.action().iter().all(|m| m.is_identity()));
        let triv = FpModule::trivial(5, 2, 1);
        let vt = v.tensor(&triv).unwrap();
        assert_eq!(vt.action(), v.action());
    }

    #[test]
    fn hom_between_sym_and_its_dual() {
        // L(n) is self-dual for SL2
        let g = FiniteGroup::sl2(7).unwrap();
        let l3 = FpModule::natural(&g).sym_power(3);
        assert_eq!(hom_dim(&l3, &l3.dual()), 1);
        assert_eq!(hom_dim(&l3, &FpModule::natural(&g).sym_power(2)), 0);
    }

    #[test]
    fn split_on_invariant_line() {
        let g = FiniteGroup::sl2(5).unwrap();
        let s5 = FpModule::natural(&g).sym_power(5);
        // x^5 and y^5 span an invariant plane
        let mut e0 = vec![0u32; 6];
        e0[0] = 1;
        let mut e5 = vec![0u32; 6];
        e5[5] = 1;
        let sp = s5.split(&[e0, e5]).unwrap();
        assert_eq!(sp.k, 2);
        assert!(sp.sub.respects(&g) && sp.quotient.respects(&g));
    }
}
