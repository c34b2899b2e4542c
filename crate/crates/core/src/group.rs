//! Finite matrix groups over F_p, enumerated by breadth-first closure.

use std::collections::HashMap;

use serde::Serialize;

use crate::arith::is_prime;
use crate::error::{invalid, Error, Result};
use crate::fp::FpMatrix;

/// Default cap on enumerated group orders.
pub const GROUP_LIMIT: usize = 20_000;

/// A subgroup of `GL_n(F_p)` given by generators, with every element listed.
///
/// Element 0 is the identity. `tree[g] = Some((h, k))` records the BFS
/// spanning tree of the right Cayley graph: `g = h * gens[k]`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    p: u32,
    n: usize,
    name: String,
    gens: Vec<FpMatrix>,
    elements: Vec<FpMatrix>,
    index: HashMap<Vec<u32>, usize>,
    right: Vec<Vec<usize>>,
    tree: Vec<Option<(usize, usize)>>,
    inverse: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub name: String,
    pub p: u32,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<Vec<Vec<u32>>>,
}

impl FiniteGroup {
    pub fn generate(
        p: u32,
        gens: Vec<FpMatrix>,
        name: impl Into<String>,
        limit: usize,
    ) -> Result<Self> {
        let name: String = name.into();
        if !is_prime(p as u64) {
            return invalid(format!("{p} is not prime"));
        }
        let Some(first) = gens.first() else {
            return invalid("a group needs at least one generator");
        };
        let n = first.nrows();
        for g in &gens {
            if g.nrows() != n || !g.is_square() || g.p() != p {
                return invalid("generators must be square matrices of one size over one field");
            }
            if g.determinant() == 0 {
                return invalid("generator is singular");
            }
        }
        let id = FpMatrix::identity(p, n);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id.rows_vec().concat(), 0usize);
        let mut tree = vec![None];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            let g = elements[head].clone();
            let mut row = Vec::with_capacity(gens.len());
            for (k, s) in gens.iter().enumerate() {
                let h = g.mul(s);
                let key = h.rows_vec().concat();
                let idx = match index.get(&key) {
                    Some(&i) => i,
                    None => {
                        if elements.len() >= limit {
                            return Err(Error::Budget {
                                what: format!("group {name}"),
                                needed: format!("more than {limit} elements"),
                                budget: limit.to_string(),
                            });
                        }
                        let i = elements.len();
                        index.insert(key, i);
                        elements.push(h);
                        tree.push(Some((head, k)));
                        i
                    }
                };
                row.push(idx);
            }
            right.push(row);
            head += 1;
        }
        let mut grp = FiniteGroup {
            p,
            n,
            name,
            gens,
            elements,
            index,
            right,
            tree,
            inverse: Vec::new(),
        };
        grp.inverse = (0..grp.order())
            .map(|g| {
                let inv = grp.elements[g]
                    .inverse()
                    .expect("group elements are invertible");
                grp.index_of(&inv).expect("closed under inverses")
            })
            .collect();
        Ok(grp)
    }

    /// `SL_2(F_p)` generated by `[[1,1],[0,1]]` and `[[0,-1],[1,0]]`.
    pub fn sl2(p: u32) -> Result<Self> {
        if p > 13 {
            return Err(Error::Budget {
                what: format!("SL2(F_{p})"),
                needed: (p as u64 * (p as u64 * p as u64 - 1)).to_string(),
                budget: "p <= 13".into(),
            });
        }
        let g = Self::generate(p, sl2_generators(p), format!("SL2({p})"), GROUP_LIMIT)?;
        let expect = (p * (p * p - 1)) as usize;
        if g.order() != expect {
            return Err(Error::Internal(format!(
                "|SL2({p})| = {} != {expect}",
                g.order()
            )));
        }
        Ok(g)
    }

    /// `SL_2(F_p)` from the two unipotent generators `[[1,1],[0,1]]`, `[[1,0],[1,1]]`.
    pub fn sl2_alt(p: u32) -> Result<Self> {
        let u = FpMatrix::from_i64_rows(p, &[vec![1, 1], vec![0, 1]]);
        let l = FpMatrix::from_i64_rows(p, &[vec![1, 0], vec![1, 1]]);
        Self::generate(p, vec![u, l], format!("SL2({p})"), GROUP_LIMIT)
    }

    /// Cyclic group generated by one matrix.
    pub fn cyclic(p: u32, g: FpMatrix, name: impl Into<String>) -> Result<Self> {
        Self::generate(p, vec![g], name, GROUP_LIMIT)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Size of the matrices.
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[FpMatrix] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn element(&self, i: usize) -> &FpMatrix {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[FpMatrix] {
        &self.elements
    }

    pub fn index_of(&self, m: &FpMatrix) -> Option<usize> {
        self.index.get(&m.rows_vec().concat()).copied()
    }

    /// Index of `g * gens[k]`.
    pub fn right_mul_gen(&self, g: usize, k: usize) -> usize {
        self.right[g][k]
    }

    pub fn tree_parent(&self, g: usize) -> Option<(usize, usize)> {
        self.tree[g]
    }

    pub fn inverse_of(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index_of(&self.elements[a].mul(&self.elements[b]))
            .expect("group is closed under multiplication")
    }

    /// Indices ordered so that every element comes after its tree parent.
    pub fn bfs_order(&self) -> impl Iterator<Item = usize> {
        0..self.order()
    }

    /// Images of all elements under a representation given on generators,
    /// built along the spanning tree. Returns `None` if some Cayley edge is
    /// violated, i.e. the generator images do not define a homomorphism.
    pub fn extend_to_elements(&self, images: &[FpMatrix]) -> Option<Vec<FpMatrix>> {
        assert_eq!(images.len(), self.gens.len());
        let d = images[0].nrows();
        let mut out: Vec<FpMatrix> = Vec::with_capacity(self.order());
        out.push(FpMatrix::identity(images[0].p(), d));
        for g in 1..self.order() {
            let (h, k) = self.tree[g].expect("non-identity has a parent");
            let m = out[h].mul(&images[k]);
            out.push(m);
        }
        for g in 0..self.order() {
            for (k, img) in images.iter().enumerate() {
                if out[g].mul(img) != out[self.right[g][k]] {
                    return None;
                }
            }
        }
        Some(out)
    }

    /// Subgroup generated by some elements of this group.
    pub fn subgroup(&self, gens: &[usize], name: impl Into<String>) -> Result<Self> {
        let mats = gens.iter().map(|&g| self.elements[g].clone()).collect();
        Self::generate(self.p, mats, name, self.order())
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    pub fn summary(&self) -> GroupSummary {
        GroupSummary {
            name: self.name.clone(),
            p: self.p,
            degree: self.n,
            order: self.order(),
            generators: self.gens.iter().map(|g| g.rows_vec()).collect(),
        }
    }
}

pub fn sl2_generators(p: u32) -> Vec<FpMatrix> {
    vec![
        FpMatrix::from_i64_rows(p, &[vec![1, 1], vec![0, 1]]),
        FpMatrix::from_i64_rows(p, &[vec![0, -1], vec![1, 0]]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_orders() {
        assert_eq!(FiniteGroup::sl2(2).unwrap().order(), 6);
        assert_eq!(FiniteGroup::sl2(5).unwrap().order(), 120);
        assert_eq!(FiniteGroup::sl2(7).unwrap().order(), 336);
        assert_eq!(FiniteGroup::sl2_alt(5).unwrap().order(), 120);
        assert!(FiniteGroup::sl2(17).is_err());
    }

    #[test]
    fn tree_and_inverses_are_consistent() {
        let g = FiniteGroup::sl2(5).unwrap();
        for x in 0..g.order() {
            assert_eq!(g.mul(x, g.inverse_of(x)), 0);
            if let Some((h, k)) = g.tree_parent(x) {
                assert_eq!(g.element(h).mul(&g.generators()[k]), *g.element(x));
            }
        }
    }

    #[test]
    fn natural_representation_extends() {
        let g = FiniteGroup::sl2(3).unwrap();
        let imgs = g.extend_to_elements(g.generators()).unwrap();
        assert_eq!(imgs, g.elements());
        // swapping the generator images breaks the relations
        let bad = vec![g.generators()[1].clone(), g.generators()[0].clone()];
        assert!(g.extend_to_elements(&bad).is_none());
    }

    #[test]
    fn unipotent_subgroup_has_order_p() {
        let g = FiniteGroup::sl2(7).unwrap();
        let u = g.index_of(&g.generators()[0]).unwrap();
        assert_eq!(g.element_order(u), 7);
        assert_eq!(g.subgroup(&[u], "U").unwrap().order(), 7);
    }
}
