//! Nonabelian obstruction calculus on Heisenberg towers, and lifting of
//! matrix group homomorphisms from `Z/p^k` to `Z/p^{k+1}`.
//!
//! The tower: `M2` is the Heisenberg group of triples `(a, b, c)` over F_p
//! with `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`, `M1` its center, `M3 =
//! M2/M1 = F_p^2`. A group `A` of 2x2 matrices acts on `M2` through the
//! coordinates `(v, z) = ((a, b), c - ab/2)`, by `(v, z) -> (g v, det(g) z)`.
//! Then `E3 = M2 x| A`, `E2 = M3 x| A`, `E1 = A`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cohom::{brute_h2_direct, TreeCochains};
use crate::error::{invalid, Error, Result};
use crate::fp::{add_mod, inv_mod, mul_mod, neg_mod, sub_mod, FpMatrix, RowEchelon};
use crate::group::FiniteGroup;
use crate::modrep::FpModule;

/// Exhaustive sweeps when the cocycle space has at most this many elements.
pub const EXHAUSTIVE_LIMIT: usize = 10_000;
/// Minimum seeded sample size otherwise.
pub const SAMPLE_SIZE: usize = 100;

pub type Heis = [u32; 3];
pub type V2 = [u32; 2];

/// A Heisenberg tower over F_p with `A` a finite subgroup of `GL_2(F_p)`.
#[derive(Clone, Debug)]
pub struct Tower {
    pub p: u32,
    pub name: String,
    a: FiniteGroup,
    det: Vec<u32>,
    half: u32,
    /// `M1` as an `A`-module, for the cohomology of `A`.
    m1: FpModule,
    /// basis of 2-coboundaries `A x A -> M1`
    b2: Vec<Vec<u32>>,
}

/// A set-theoretic section `M3 -> M2`: `(a, b) -> (a, b, f(a, b))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub table: Vec<u32>,
}

impl Section {
    pub fn zero(p: u32) -> Self {
        Section {
            table: vec![0; (p * p) as usize],
        }
    }

    /// A seeded pseudo-random section.
    pub fn random(p: u32, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Section {
            table: (0..p * p).map(|_| rng.gen_range(0..p)).collect(),
        }
    }

    pub fn lift(&self, p: u32, v: V2) -> Heis {
        [v[0], v[1], self.table[(v[0] * p + v[1]) as usize]]
    }
}

/// Normalized 2-cochain `A x A -> M1`, indexed `s * |A| + t`.
pub type Cochain2 = Vec<u32>;

impl Tower {
    pub fn new(p: u32, a: FiniteGroup, name: impl Into<String>) -> Result<Self> {
        if p == 2 || a.p() != p || a.degree() != 2 {
            return invalid("Heisenberg towers need odd p and A inside GL_2(F_p)");
        }
        let det: Vec<u32> = a.elements().iter().map(FpMatrix::determinant).collect();
        let gens_det: Vec<FpMatrix> = a
            .generators()
            .iter()
            .map(|g| FpMatrix::from_rows(p, &[vec![g.determinant()]]))
            .collect();
        let m1 = FpModule::new(p, gens_det, "M1")?;
        let n = a.order();
        let mut b2 = Vec::with_capacity(n);
        for r in 0..n {
            // d(e_r)(s, t) = s.f(t) - f(st) + f(s)
            let mut c = vec![0u32; n * n];
            for s in 0..n {
                for t in 0..n {
                    let mut v = 0;
                    if t == r {
                        v = add_mod(v, det[s], p);
                    }
                    if a.mul(s, t) == r {
                        v = sub_mod(v, 1, p);
                    }
                    if s == r {
                        v = add_mod(v, 1, p);
                    }
                    c[s * n + t] = v;
                }
            }
            b2.push(c);
        }
        let tower = Tower {
            p,
            name: name.into(),
            a,
            det,
            half: inv_mod(2, p),
            m1,
            b2: crate::fp::span_basis(p, n * n, &b2),
        };
        tower.check_assumptions()?;
        Ok(tower)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.a
    }

    pub fn order(&self) -> usize {
        self.a.order()
    }

    // --- M2 ---

    pub fn mul(&self, x: Heis, y: Heis) -> Heis {
        let p = self.p;
        [
            add_mod(x[0], y[0], p),
            add_mod(x[1], y[1], p),
            add_mod(add_mod(x[2], y[2], p), mul_mod(x[0], y[1], p), p),
        ]
    }

    pub fn inv(&self, x: Heis) -> Heis {
        let p = self.p;
        [
            neg_mod(x[0], p),
            neg_mod(x[1], p),
            sub_mod(mul_mod(x[0], x[1], p), x[2], p),
        ]
    }

    /// `(x, y) = x y x^{-1} y^{-1}`.
    pub fn comm(&self, x: Heis, y: Heis) -> Heis {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    /// `x + y = x y (x,y)^{-1/2}`.
    pub fn lie_add(&self, x: Heis, y: Heis) -> Heis {
        let c = self.comm(x, y)[2];
        self.mul(
            self.mul(x, y),
            [0, 0, neg_mod(mul_mod(c, self.half, self.p), self.p)],
        )
    }

    pub fn elements(&self) -> impl Iterator<Item = Heis> + '_ {
        let p = self.p;
        (0..p * p * p).map(move |i| [i / (p * p), (i / p) % p, i % p])
    }

    /// Action of `A` element `s` on `M2`.
    pub fn act(&self, s: usize, x: Heis) -> Heis {
        let p = self.p;
        let g = self.a.element(s);
        let z = sub_mod(x[2], mul_mod(mul_mod(x[0], x[1], p), self.half, p), p);
        let a = add_mod(
            mul_mod(g.get(0, 0), x[0], p),
            mul_mod(g.get(0, 1), x[1], p),
            p,
        );
        let b = add_mod(
            mul_mod(g.get(1, 0), x[0], p),
            mul_mod(g.get(1, 1), x[1], p),
            p,
        );
        let z2 = mul_mod(self.det[s], z, p);
        [
            a,
            b,
            add_mod(z2, mul_mod(mul_mod(a, b, p), self.half, p), p),
        ]
    }

    /// Action on `M3`.
    pub fn act3(&self, s: usize, v: V2) -> V2 {
        let x = self.act(s, [v[0], v[1], 0]);
        [x[0], x[1]]
    }

    pub fn add3(&self, v: V2, w: V2) -> V2 {
        [add_mod(v[0], w[0], self.p), add_mod(v[1], w[1], self.p)]
    }

    /// Bracket `M3 x M3 -> M1` induced by commutators of lifts.
    pub fn bracket3(&self, v: V2, w: V2) -> u32 {
        self.comm([v[0], v[1], 0], [w[0], w[1], 0])[2]
    }

    // --- E3 = M2 x| A ---

    pub fn e3_mul(&self, x: (Heis, usize), y: (Heis, usize)) -> (Heis, usize) {
        (self.mul(x.0, self.act(x.1, y.0)), self.a.mul(x.1, y.1))
    }

    pub fn e3_inv(&self, x: (Heis, usize)) -> (Heis, usize) {
        let si = self.a.inverse_of(x.1);
        (self.act(si, self.inv(x.0)), si)
    }

    fn check_assumptions(&self) -> Result<()> {
        let p = self.p;
        let fail = |m: &str| Err(Error::Internal(format!("tower {}: {m}", self.name)));
        let elems: Vec<Heis> = self.elements().collect();
        // A: commutators land in M1 (so M3 is abelian) and M1 is central
        for &x in &elems {
            for &y in &elems {
                let c = self.comm(x, y);
                if c[0] != 0 || c[1] != 0 {
                    return fail("M3 is not abelian");
                }
                if (x[0], x[1]) == (0, 0) && c[2] != 0 {
                    return fail("M1 is not central");
                }
            }
        }
        // exactness of 1 -> M1 -> M2 -> M3 -> 1
        let kernel = elems.iter().filter(|x| x[0] == 0 && x[1] == 0).count();
        if kernel != p as usize || elems.len() != kernel * (p * p) as usize {
            return fail("kernel sequence is not exact");
        }
        // B: squaring on M1 is a bijection
        let mut seen = vec![false; p as usize];
        for c in 0..p {
            seen[self.mul([0, 0, c], [0, 0, c])[2] as usize] = true;
        }
        if seen.iter().any(|s| !s) {
            return fail("squaring is not bijective on M1");
        }
        // A acts by automorphisms
        for g in self.a.generators() {
            let s = self.a.index_of(g).expect("generator is an element");
            for &x in &elems {
                for &y in &elems {
                    if self.act(s, self.mul(x, y)) != self.mul(self.act(s, x), self.act(s, y)) {
                        return fail("A does not act by automorphisms");
                    }
                }
            }
        }
        Ok(())
    }

    // --- cohomology of A ---

    /// Whether `c` is a normalized-or-not 2-cocycle `A x A -> M1`.
    pub fn is_2_cocycle(&self, c: &Cochain2) -> bool {
        let n = self.order();
        let p = self.p;
        (0..n).all(|s| {
            (0..n).all(|t| {
                let st = self.a.mul(s, t);
                (0..n).all(|u| {
                    let tu = self.a.mul(t, u);
                    add_mod(c[s * n + t], c[st * n + u], p)
                        == add_mod(mul_mod(self.det[s], c[t * n + u], p), c[s * n + tu], p)
                })
            })
        })
    }

    /// Whether `c1` and `c2` define the same class in `H^2(A, M1)`.
    pub fn same_class(&self, c1: &Cochain2, c2: &Cochain2) -> bool {
        let diff: Vec<u32> = c1
            .iter()
            .zip(c2)
            .map(|(&x, &y)| sub_mod(x, y, self.p))
            .collect();
        self.is_coboundary(&diff)
    }

    pub fn is_coboundary(&self, c: &Cochain2) -> bool {
        let mut e = RowEchelon::new(self.p, c.len());
        for b in &self.b2 {
            e.insert(b.clone());
        }
        e.contains(c)
    }

    pub fn h2_dim(&self) -> Result<usize> {
        Ok(brute_h2_direct(&self.a, &self.m1)?.h_dim)
    }

    /// All 1-cocycles `A -> M3` (exhaustive when small, else a seeded
    /// sample), each as its list of values.
    pub fn cocycles(&self, seed: u64) -> Result<(Vec<Vec<V2>>, bool)> {
        let gens: Vec<FpMatrix> = self.a.generators().to_vec();
        let rho = self
            .a
            .extend_to_elements(&gens)
            .expect("natural representation");
        let tc = TreeCochains::new(&self.a, rho)?;
        let basis = tc.cocycle_basis(&self.a);
        let dim = basis.len();
        let total = (self.p as usize)
            .checked_pow(dim as u32)
            .unwrap_or(usize::MAX);
        let eval = |coeffs: &[u32]| -> Vec<V2> {
            let mut x = vec![0u32; tc.unknowns()];
            for (c, b) in coeffs.iter().zip(&basis) {
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi = add_mod(*xi, mul_mod(*c, *bi, self.p), self.p);
                }
            }
            (0..self.order())
                .map(|g| {
                    let v = tc.value(g, &x);
                    [v[0], v[1]]
                })
                .collect()
        };
        if total <= EXHAUSTIVE_LIMIT {
            let all = (0..total)
                .map(|mut code| {
                    let coeffs: Vec<u32> = (0..dim)
                        .map(|_| {
                            let c = (code % self.p as usize) as u32;
                            code /= self.p as usize;
                            c
                        })
                        .collect();
                    eval(&coeffs)
                })
                .collect();
            Ok((all, true))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let sample = (0..SAMPLE_SIZE)
                .map(|_| {
                    let coeffs: Vec<u32> = (0..dim).map(|_| rng.gen_range(0..self.p)).collect();
                    eval(&coeffs)
                })
                .collect();
            Ok((sample, false))
        }
    }

    pub fn is_1_cocycle(&self, x: &[V2]) -> bool {
        let n = self.order();
        (0..n).all(|s| (0..n).all(|t| x[self.a.mul(s, t)] == self.add3(x[s], self.act3(s, x[t]))))
    }

    // --- obstruction calculus ---

    /// `obs(phi)` for `phi(s) = (v_s, s)`, from the lifts `z_s = (sigma(v_s), s)`
    /// and `z_s z_t = o(s,t) z_{st}`.
    pub fn obs(&self, phi: &[V2], section: &Section) -> Result<Cochain2> {
        if !self.is_1_cocycle(phi) {
            return invalid("phi is not a homomorphism A -> E2");
        }
        let n = self.order();
        let z: Vec<(Heis, usize)> = (0..n).map(|s| (section.lift(self.p, phi[s]), s)).collect();
        let mut o = vec![0u32; n * n];
        for s in 0..n {
            for t in 0..n {
                let st = self.a.mul(s, t);
                let (m, e) = self.e3_mul(self.e3_mul(z[s], z[t]), self.e3_inv(z[st]));
                if e != 0 || m[0] != 0 || m[1] != 0 {
                    return Err(Error::Internal("obstruction value outside M1".into()));
                }
                o[s * n + t] = m[2];
            }
        }
        Ok(o)
    }

    /// `^s b = z_s b z_s^{-1}` for `z_s` over `phi(s)`.
    fn conj(&self, phi: &[V2], s: usize, b: Heis) -> Heis {
        let zs = ([phi[s][0], phi[s][1], 0], s);
        self.e3_mul(self.e3_mul(zs, (b, 0)), self.e3_inv(zs)).0
    }

    /// Nonabelian coboundary `Delta(s,t) = b_s . ^s b_t . b_{st}^{-1}` with
    /// `b_s = lift(x_s)`.
    pub fn delta_nonabelian(&self, phi: &[V2], x: &[V2], lift: &Section) -> Result<Cochain2> {
        if !self.is_1_cocycle(x) {
            return invalid("x is not a 1-cocycle");
        }
        let n = self.order();
        let b: Vec<Heis> = x.iter().map(|&v| lift.lift(self.p, v)).collect();
        let mut out = vec![0u32; n * n];
        for s in 0..n {
            for t in 0..n {
                let st = self.a.mul(s, t);
                let m = self.mul(self.mul(b[s], self.conj(phi, s, b[t])), self.inv(b[st]));
                if m[0] != 0 || m[1] != 0 {
                    return Err(Error::Internal("Delta value outside M1".into()));
                }
                out[s * n + t] = m[2];
            }
        }
        Ok(out)
    }

    /// Abelian coboundary for `0 -> M1 -> M2^ab -> M3 -> 0`, computed with
    /// the Lie addition.
    pub fn delta_abelian(&self, phi: &[V2], x: &[V2], lift: &Section) -> Result<Cochain2> {
        let n = self.order();
        let b: Vec<Heis> = x.iter().map(|&v| lift.lift(self.p, v)).collect();
        let mut out = vec![0u32; n * n];
        for s in 0..n {
            for t in 0..n {
                let st = self.a.mul(s, t);
                // the Lie negative of y is its group inverse
                let m = self.lie_add(self.lie_add(b[s], self.conj(phi, s, b[t])), self.inv(b[st]));
                if m[0] != 0 || m[1] != 0 {
                    return Err(Error::Internal("delta value outside M1".into()));
                }
                out[s * n + t] = m[2];
            }
        }
        Ok(out)
    }

    /// Cup product `[x.y](s,t) = [x_s, ^s y_t]`.
    pub fn cup(&self, x: &[V2], y: &[V2]) -> Cochain2 {
        let n = self.order();
        let mut out = vec![0u32; n * n];
        for s in 0..n {
            for t in 0..n {
                out[s * n + t] = self.bracket3(x[s], self.act3(s, y[t]));
            }
        }
        out
    }

    fn add2(&self, a: &Cochain2, b: &Cochain2) -> Cochain2 {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| add_mod(x, y, self.p))
            .collect()
    }

    fn scale2(&self, a: &Cochain2, c: u32) -> Cochain2 {
        a.iter().map(|&x| mul_mod(x, c, self.p)).collect()
    }

    /// Whether `phi` lifts to a homomorphism `A -> E3`, by trying every
    /// choice of lifts of the generators.
    pub fn liftable(&self, phi: &[V2]) -> bool {
        let k = self.a.num_generators();
        let p = self.p as usize;
        let gen_idx: Vec<usize> = self
            .a
            .generators()
            .iter()
            .map(|g| self.a.index_of(g).expect("generator"))
            .collect();
        (0..p.pow(k as u32)).any(|mut code| {
            let lifts: Vec<(Heis, usize)> = gen_idx
                .iter()
                .map(|&s| {
                    let c = (code % p) as u32;
                    code /= p;
                    ([phi[s][0], phi[s][1], c], s)
                })
                .collect();
            self.extends_to_hom(&lifts)
        })
    }

    fn extends_to_hom(&self, lifts: &[(Heis, usize)]) -> bool {
        let n = self.order();
        let mut img: Vec<(Heis, usize)> = vec![([0, 0, 0], 0); n];
        for g in 1..n {
            let (h, s) = self.a.tree_parent(g).expect("parent");
            img[g] = self.e3_mul(img[h], lifts[s]);
        }
        (0..n).all(|g| {
            (0..lifts.len())
                .all(|s| self.e3_mul(img[g], lifts[s]) == img[self.a.right_mul_gen(g, s)])
        })
    }
}

/// A 2-cocycle representing an obstruction, with whether its class vanishes.
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionClass {
    pub cocycle: Cochain2,
    pub zero: bool,
    /// Recomputing with another section gave the same class.
    pub section_invariant: bool,
}

/// `obs(phi)` from the zero section, checked against a second section.
pub fn obs_of_hom(t: &Tower, phi: &[V2], seed: u64) -> Result<ObstructionClass> {
    let o = t.obs(phi, &Section::zero(t.p))?;
    if !t.is_2_cocycle(&o) {
        return Err(Error::Internal("obstruction is not a 2-cocycle".into()));
    }
    let alt = t.obs(phi, &Section::random(t.p, seed))?;
    Ok(ObstructionClass {
        zero: t.is_coboundary(&o),
        section_invariant: t.same_class(&o, &alt),
        cocycle: o,
    })
}

/// `Delta(x)` for `phi` trivial, checked against a second choice of lifts.
pub fn nonabelian_coboundary(t: &Tower, x: &[V2], seed: u64) -> Result<ObstructionClass> {
    let phi0 = vec![[0, 0]; t.order()];
    let d = t.delta_nonabelian(&phi0, x, &Section::zero(t.p))?;
    let alt = t.delta_nonabelian(&phi0, x, &Section::random(t.p, seed))?;
    Ok(ObstructionClass {
        zero: t.is_coboundary(&d),
        section_invariant: t.same_class(&d, &alt),
        cocycle: d,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LieReport {
    pub p: u32,
    pub abelian_group: bool,
    pub bilinear: bool,
    pub alternating: bool,
    pub jacobi: bool,
}

/// Exhaustive checks of the Lie ring structure on `M2`.
pub fn check_lie_structure(t: &Tower) -> LieReport {
    let e: Vec<Heis> = t.elements().collect();
    let zero = [0, 0, 0];
    let abelian_group = e.iter().all(|&x| {
        t.lie_add(x, zero) == x
            && t.lie_add(x, t.inv(x)) == zero
            && e.iter().all(|&y| t.lie_add(x, y) == t.lie_add(y, x))
    }) && e.par_iter().all(|&x| {
        e.iter().all(|&y| {
            e.iter()
                .all(|&z| t.lie_add(t.lie_add(x, y), z) == t.lie_add(x, t.lie_add(y, z)))
        })
    });
    let bilinear = e.par_iter().all(|&x| {
        e.iter().all(|&y| {
            e.iter()
                .all(|&z| t.comm(t.lie_add(x, y), z) == t.lie_add(t.comm(x, z), t.comm(y, z)))
        })
    });
    let alternating = e.iter().all(|&x| t.comm(x, x) == zero);
    // brackets are central, so iterated brackets vanish
    let jacobi = e.par_iter().all(|&x| {
        e.iter()
            .all(|&y| e.iter().all(|&z| t.comm(t.comm(x, y), z) == zero))
    });
    LieReport {
        p: t.p,
        abelian_group,
        bilinear,
        alternating,
        jacobi,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropReport {
    pub tower: String,
    pub p: u32,
    pub group_order: usize,
    pub h2_dim: usize,
    pub exhaustive: bool,
    pub checked: usize,
    pub skipped: usize,
    pub failures: usize,
    /// Samples whose class was nonzero, i.e. where the identity had content.
    pub nonzero_classes: usize,
    pub seed: u64,
}

/// How a verification chooses its inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sweep {
    /// Everything when small enough, else [`SAMPLE_SIZE`] seeded draws.
    Auto,
    /// Exactly this many seeded draws, with replacement.
    Sampled(usize),
}

fn pick(n: usize, pairs: bool, sweep: Sweep, seed: u64) -> (Vec<(usize, usize)>, bool) {
    let total = if pairs { n * n } else { n };
    let draws = match sweep {
        Sweep::Auto if total <= EXHAUSTIVE_LIMIT => {
            let all = (0..total)
                .map(|k| if pairs { (k / n, k % n) } else { (k, 0) })
                .collect();
            return (all, true);
        }
        Sweep::Auto => SAMPLE_SIZE,
        Sweep::Sampled(k) => k,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let out = (0..draws)
        .map(|_| {
            (
                rng.gen_range(0..n),
                if pairs { rng.gen_range(0..n) } else { 0 },
            )
        })
        .collect();
    (out, false)
}

/// `obs(phi_x) = obs(phi) + Delta(x)` in `H^2(A, M1)`, over pairs
/// `(phi, x)` of 1-cocycles. The obstruction of `phi_x` uses the alternative
/// section, so the check also covers change of section.
pub fn verify_prop1(t: &Tower, sweep: Sweep, seed: u64) -> Result<PropReport> {
    let (cocycles, all) = t.cocycles(seed)?;
    let (pairs, exhaustive) = pick(cocycles.len(), true, sweep, seed ^ 0x5eed);
    let zero = Section::zero(t.p);
    let alt = Section::random(t.p, seed.wrapping_add(17));
    let results: Vec<Result<Option<(bool, bool)>>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let phi = &cocycles[i];
            let x = &cocycles[j];
            let phi_x: Vec<V2> = phi.iter().zip(x).map(|(&a, &b)| t.add3(a, b)).collect();
            if !t.is_1_cocycle(&phi_x) {
                return Ok(None);
            }
            let lhs = t.obs(&phi_x, &alt)?;
            let rhs = t.add2(&t.obs(phi, &zero)?, &t.delta_nonabelian(phi, x, &zero)?);
            Ok(Some((t.same_class(&lhs, &rhs), !t.is_coboundary(&lhs))))
        })
        .collect();
    tally(t, seed, all && exhaustive, results)
}

/// `Delta(a) = delta(a) + 1/2 [a.a]` in `H^2(A, M1)`, with `phi` trivial.
/// Also checks that `Delta` does not depend on the lifts `b_s`.
pub fn verify_prop2(t: &Tower, sweep: Sweep, seed: u64) -> Result<PropReport> {
    let (cocycles, all) = t.cocycles(seed)?;
    let (samples, exhaustive) = pick(cocycles.len(), false, sweep, seed ^ 0xa1fa);
    let phi0 = vec![[0, 0]; t.order()];
    let zero = Section::zero(t.p);
    let alt = Section::random(t.p, seed.wrapping_add(29));
    let results: Vec<Result<Option<(bool, bool)>>> = samples
        .par_iter()
        .map(|&(i, _)| {
            let a = &cocycles[i];
            let big = t.delta_nonabelian(&phi0, a, &zero)?;
            let big_alt = t.delta_nonabelian(&phi0, a, &alt)?;
            let small = t.delta_abelian(&phi0, a, &alt)?;
            let rhs = t.add2(&small, &t.scale2(&t.cup(a, a), t.half));
            let ok =
                t.same_class(&big, &rhs) && t.same_class(&big, &big_alt) && t.is_2_cocycle(&big);
            Ok(Some((ok, !t.is_coboundary(&big))))
        })
        .collect();
    tally(t, seed, all && exhaustive, results)
}

/// `[a.b] = [b.a]` as classes, over pairs of cocycles.
pub fn verify_cup_symmetry(t: &Tower, sweep: Sweep, seed: u64) -> Result<PropReport> {
    let (cocycles, all) = t.cocycles(seed)?;
    let (pairs, exhaustive) = pick(cocycles.len(), true, sweep, seed ^ 0xc0c0);
    let results = pairs
        .par_iter()
        .map(|&(i, j)| {
            let ab = t.cup(&cocycles[i], &cocycles[j]);
            let ba = t.cup(&cocycles[j], &cocycles[i]);
            Ok(Some((t.same_class(&ab, &ba), !t.is_coboundary(&ab))))
        })
        .collect();
    tally(t, seed, all && exhaustive, results)
}

fn tally(
    t: &Tower,
    seed: u64,
    exhaustive: bool,
    results: Vec<Result<Option<(bool, bool)>>>,
) -> Result<PropReport> {
    let mut r = PropReport {
        tower: t.name.clone(),
        p: t.p,
        group_order: t.order(),
        h2_dim: t.h2_dim()?,
        exhaustive,
        checked: 0,
        skipped: 0,
        failures: 0,
        nonzero_classes: 0,
        seed,
    };
    for x in results {
        match x? {
            None => r.skipped += 1,
            Some((ok, nonzero)) => {
                r.checked += 1;
                r.failures += usize::from(!ok);
                r.nonzero_classes += usize::from(nonzero);
            }
        }
    }
    Ok(r)
}

/// Named subgroups of `GL_2(F_p)`: `trivial`, `c2` (`-1`), `s3` (permutation
/// action on the sum-zero plane), `unipotent` or `c<p>` (a unipotent), `c4`
/// (a diagonal element of order 4).
pub fn named_group(p: u32, name: &str) -> Result<FiniteGroup> {
    let m = |rows: &[Vec<i64>]| FpMatrix::from_i64_rows(p, rows);
    let gens = match name {
        "trivial" => vec![m(&[vec![1, 0], vec![0, 1]])],
        "c2" => vec![m(&[vec![-1, 0], vec![0, -1]])],
        "s3" => vec![m(&[vec![0, -1], vec![1, -1]]), m(&[vec![0, 1], vec![1, 0]])],
        _ if name == "unipotent" || name == format!("c{p}") => vec![m(&[vec![1, 1], vec![0, 1]])],
        "c4" => {
            // an element of order 4 in F_p^*, when p = 1 mod 4
            let Some(i) = (2..p as i64).find(|&x| x * x % p as i64 == p as i64 - 1) else {
                return invalid(format!("F_{p} has no element of order 4"));
            };
            vec![m(&[vec![i, 0], vec![0, 1]])]
        }
        _ => {
            return invalid(format!(
                "unknown group '{name}' (trivial, c2, c4, s3, unipotent, c{p})"
            ))
        }
    };
    FiniteGroup::generate(p, gens, name.to_string(), 10_000)
}

pub fn named_tower(p: u32, name: &str) -> Result<Tower> {
    Tower::new(p, named_group(p, name)?, format!("{name}@{p}"))
}

// ---------------------------------------------------------------------------
// lifting over Z/p^k

/// Square matrix over `Z/m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMat {
    pub n: usize,
    pub m: u64,
    pub a: Vec<u64>,
}

impl ZMat {
    pub fn identity(n: usize, m: u64) -> Self {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1 % m;
        }
        ZMat { n, m, a }
    }

    pub fn from_fp(x: &FpMatrix, m: u64) -> Self {
        let n = x.nrows();
        ZMat {
            n,
            m,
            a: (0..n * n).map(|i| x.get(i / n, i % n) as u64 % m).collect(),
        }
    }

    pub fn reduce(&self, m: u64) -> Self {
        ZMat {
            n: self.n,
            m,
            a: self.a.iter().map(|x| x % m).collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.a[i * self.n + j]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.n;
        let m = self.m;
        let mut a = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    a[i * n + j] = (a[i * n + j] + x * rhs.a[k * n + j]) % m;
                }
            }
        }
        ZMat { n, m, a }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n, self.m)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n, self.m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Inverse modulo `m = p^k` by Newton iteration from the inverse mod `p`.
    pub fn inverse(&self, p: u32) -> Option<Self> {
        let x0 = FpMatrix::from_rows(
            p,
            &(0..self.n)
                .map(|i| {
                    (0..self.n)
                        .map(|j| (self.get(i, j) % p as u64) as u32)
                        .collect()
                })
                .collect::<Vec<_>>(),
        )
        .inverse()?;
        let mut x = ZMat::from_fp(&x0, self.m);
        let two = {
            let mut t = Self::identity(self.n, self.m);
            t.a.iter_mut().for_each(|v| *v = (*v * 2) % self.m);
            t
        };
        let mut prec = p as u64;
        while prec < self.m {
            let ax = self.mul(&x);
            let mut r = two.clone();
            for (ri, ai) in r.a.iter_mut().zip(&ax.a) {
                *ri = (*ri + self.m - ai) % self.m;
            }
            x = x.mul(&r);
            prec = prec.saturating_mul(prec);
        }
        debug_assert!(self.mul(&x).is_identity());
        Some(x)
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.a.chunks(self.n).map(<[u64]>::to_vec).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftLevel {
    pub modulus: u64,
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    /// The relation defects were corrected by a 1-cochain.
    pub solvable: bool,
    /// Whether the defects were already zero before correction.
    pub defect_zero: bool,
    /// Dimension of the kernel of reduction, checked elementary abelian.
    pub kernel_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftReport {
    pub group: String,
    pub p: u32,
    pub k_target: u32,
    pub k_reached: u32,
    pub levels: Vec<LiftLevel>,
    /// Generator matrices over `Z/p^{k_reached}`.
    pub generators: Vec<Vec<Vec<u64>>>,
    /// Relation defects `(edge, matrix mod p)` of the failing step.
    pub obstruction: Option<Vec<((usize, usize), Vec<Vec<u32>>)>>,
    pub success: bool,
}

/// Adjoint action `X -> g X g^{-1}` on `n x n` matrices, as an `n^2 x n^2`
/// matrix in the row-major basis.
fn adjoint(g: &FpMatrix) -> FpMatrix {
    let gi = g.inverse().expect("invertible");
    g.kron(&gi.transpose())
}

fn tree_images(group: &FiniteGroup, gens: &[ZMat]) -> Vec<ZMat> {
    let n = gens[0].n;
    let m = gens[0].m;
    let mut img = vec![ZMat::identity(n, m); group.order()];
    for g in 1..group.order() {
        let (h, s) = group.tree_parent(g).expect("parent");
        img[g] = img[h].mul(&gens[s]);
    }
    img
}

fn relations_hold(group: &FiniteGroup, gens: &[ZMat]) -> bool {
    let img = tree_images(group, gens);
    (0..group.order())
        .all(|g| (0..gens.len()).all(|s| img[g].mul(&gens[s]) == img[group.right_mul_gen(g, s)]))
}

/// Kernel of `GL_n(Z/p^{k+1}) -> GL_n(Z/p^k)`: `1 + p^k X` is additive in
/// `X` and has exponent `p`, checked on a basis; returns its dimension.
fn check_kernel(n: usize, p: u32, k: u32) -> Result<usize> {
    let pk = (p as u64).pow(k);
    let m = pk * p as u64;
    let unit = |i: usize| {
        let mut x = ZMat::identity(n, m);
        x.a[i] = (x.a[i] + pk) % m;
        x
    };
    for i in 0..n * n {
        let ui = unit(i);
        if !ui.pow(p as u64).is_identity() {
            return Err(Error::Internal("kernel element of order > p".into()));
        }
        for j in 0..n * n {
            let mut sum = ZMat::identity(n, m);
            sum.a[i] = (sum.a[i] + pk) % m;
            sum.a[j] = (sum.a[j] + pk) % m;
            if ui.mul(&unit(j)) != sum {
                return Err(Error::Internal("kernel is not elementary abelian".into()));
            }
        }
    }
    Ok(n * n)
}

/// Lift the inclusion of `group` (matrices over F_p) to `GL_n(Z/p^k)` one
/// level at a time. At each level the generators are lifted arbitrarily,
/// the relation defects are read as a 2-cochain in the Lie kernel, and a
/// correction `g_s -> (1 + p^k X_s) g_s` is solved for.
pub fn lifting_loop(group: &FiniteGroup, k_max: u32) -> Result<LiftReport> {
    let p = group.p();
    let n = group.degree();
    let adj: Vec<FpMatrix> = group.generators().iter().map(adjoint).collect();
    let rho = group
        .extend_to_elements(&adj)
        .ok_or_else(|| Error::Internal("adjoint action is not a representation".into()))?;
    let tc = TreeCochains::new(group, rho)?;
    let mut gens: Vec<ZMat> = group
        .generators()
        .iter()
        .map(|g| ZMat::from_fp(g, p as u64))
        .collect();
    let mut report = LiftReport {
        group: group.name().to_string(),
        p,
        k_target: k_max,
        k_reached: 1,
        levels: Vec::new(),
        generators: gens.iter().map(ZMat::rows).collect(),
        obstruction: None,
        success: true,
    };
    for k in 1..k_max {
        let pk = (p as u64).pow(k);
        let m = pk * p as u64;
        let kernel_dim = check_kernel(n, p, k)?;
        let lifted: Vec<ZMat> = gens.iter().map(|g| ZMat { m, ..g.clone() }).collect();
        let img = tree_images(group, &lifted);
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut rhs: Vec<u32> = Vec::new();
        let mut defects = Vec::new();
        for (g, s) in TreeCochains::edges(group) {
            let t = group.right_mul_gen(g, s);
            let ti = img[t].inverse(p).expect("invertible");
            let d = img[g].mul(&lifted[s]).mul(&ti);
            // D = 1 + p^k E
            let mut e = vec![0u32; n * n];
            for (i, x) in d.a.iter().enumerate() {
                let v = (*x + m - u64::from(i % (n + 1) == 0)) % m;
                if v % pk != 0 {
                    return Err(Error::Internal(
                        "previous level does not satisfy the relations".into(),
                    ));
                }
                e[i] = (v / pk) as u32;
            }
            // (L_t - L_g - Ad(g) E_s) x = E
            for (r, row) in tc.edge_rows(group, g, s).into_iter().enumerate() {
                rows.push(row);
                rhs.push(e[r]);
            }
            defects.push(((g, s), e.chunks(n).map(<[u32]>::to_vec).collect::<Vec<_>>()));
        }
        let defect_zero = rhs.iter().all(|&x| x == 0);
        let unknowns = tc.unknowns();
        let (solution, rank) = if rows.is_empty() {
            (Some(vec![0u32; unknowns]), 0)
        } else {
            let a = FpMatrix::from_rows(p, &rows);
            let b = FpMatrix::from_rows(p, &rhs.iter().map(|&x| vec![x]).collect::<Vec<_>>());
            (a.solve(&b).map(|x| x.column(0)), a.rank())
        };
        let level = LiftLevel {
            modulus: m,
            unknowns,
            equations: rows.len(),
            rank,
            solvable: solution.is_some(),
            defect_zero,
            kernel_dim,
        };
        report.levels.push(level);
        let Some(x) = solution else {
            report.obstruction = Some(defects);
            report.success = false;
            return Ok(report);
        };
        gens = lifted
            .iter()
            .enumerate()
            .map(|(s, g)| {
                let mut c = ZMat::identity(n, m);
                for i in 0..n * n {
                    c.a[i] = (c.a[i] + pk * x[s * n * n + i] as u64) % m;
                }
                c.mul(g)
            })
            .collect();
        if !relations_hold(group, &gens) {
            return Err(Error::Internal(format!(
                "corrected lift fails the relations mod {m}"
            )));
        }
        report.k_reached = k + 1;
        report.generators = gens.iter().map(ZMat::rows).collect();
    }
    Ok(report)
}

/// All lifts of `u` to `GL_n(Z/p^2)` of order `p`, by exhaustion over `u (1 + p X)`.
pub fn order_p_lifts(u: &FpMatrix) -> Vec<ZMat> {
    let p = u.p();
    let n = u.nrows();
    let m = (p as u64) * (p as u64);
    let base = ZMat::from_fp(u, m);
    let total = (p as u64).pow((n * n) as u32);
    (0..total)
        .filter_map(|mut code| {
            let mut c = ZMat::identity(n, m);
            for i in 0..n * n {
                c.a[i] = (c.a[i] + p as u64 * (code % p as u64)) % m;
                code /= p as u64;
            }
            let x = base.mul(&c);
            x.pow(p as u64).is_identity().then_some(x)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tower_orders_and_assumptions() {
        let t = named_tower(3, "trivial").unwrap();
        assert_eq!(t.elements().count(), 27);
        assert_eq!(t.elements().filter(|x| x[0] == 0 && x[1] == 0).count(), 3);
        named_tower(5, "c4").unwrap();
        let s3 = named_tower(3, "s3").unwrap();
        assert_eq!(s3.order(), 6);
        assert!(named_tower(3, "c4").is_err());
    }

    #[test]
    fn lie_structure() {
        for p in [3, 5] {
            let r = check_lie_structure(&named_tower(p, "trivial").unwrap());
            assert!(
                r.abelian_group && r.bilinear && r.alternating && r.jacobi,
                "p={p}"
            );
        }
    }

    #[test]
    fn obs_basics() {
        let t = named_tower(3, "c2").unwrap();
        let phi0 = vec![[0, 0]; t.order()];
        assert!(t
            .obs(&phi0, &Section::zero(3))
            .unwrap()
            .iter()
            .all(|&c| c == 0));
        let tt = named_tower(3, "trivial").unwrap();
        let o = tt.obs(&[[0, 0]], &Section::random(3, 1)).unwrap();
        assert!(tt.is_coboundary(&o));
    }

    #[test]
    fn obs_vanishes_iff_liftable() {
        for (p, name) in [(3, "c3"), (3, "s3"), (5, "c5")] {
            let t = named_tower(p, name).unwrap();
            let (cs, exhaustive) = t.cocycles(0).unwrap();
            assert!(exhaustive);
            let mut nonliftable = 0;
            for x in &cs {
                let o = t.obs(x, &Section::zero(p)).unwrap();
                assert!(t.is_2_cocycle(&o));
                let lift = t.liftable(x);
                assert_eq!(lift, t.is_coboundary(&o), "{name}");
                nonliftable += usize::from(!lift);
            }
            if name == "c3" {
                assert!(nonliftable > 0, "expected a non-liftable phi");
            }
        }
    }

    #[test]
    fn classes_do_not_depend_on_sections() {
        let t = named_tower(3, "c3").unwrap();
        let (cs, _) = t.cocycles(0).unwrap();
        for (i, x) in cs.iter().enumerate() {
            assert!(obs_of_hom(&t, x, i as u64).unwrap().section_invariant);
            assert!(
                nonabelian_coboundary(&t, x, i as u64)
                    .unwrap()
                    .section_invariant
            );
        }
        assert!(nonabelian_coboundary(&t, &cs[0], 3).unwrap().zero);
    }

    #[test]
    fn props_on_small_towers() {
        for (p, name) in [(3, "c2"), (3, "c3"), (3, "s3")] {
            let t = named_tower(p, name).unwrap();
            for r in [
                verify_prop1(&t, Sweep::Auto, 1).unwrap(),
                verify_prop2(&t, Sweep::Auto, 1).unwrap(),
                verify_cup_symmetry(&t, Sweep::Auto, 1).unwrap(),
                verify_prop2(&t, Sweep::Sampled(120), 2).unwrap(),
            ] {
                assert_eq!(r.failures, 0, "{name}: {r:?}");
                assert!(r.checked > 0);
            }
        }
    }

    #[test]
    fn s3_lifts_mod_343() {
        let g = named_group(7, "s3").unwrap();
        let r = lifting_loop(&g, 3).unwrap();
        assert!(r.success);
        assert_eq!(r.k_reached, 3);
        let m = 343;
        let gens: Vec<ZMat> = r
            .generators
            .iter()
            .map(|rows| ZMat {
                n: 2,
                m,
                a: rows.concat(),
            })
            .collect();
        assert!(gens[0].pow(3).is_identity());
        assert!(gens[1].pow(2).is_identity());
        assert!(gens[1].mul(&gens[0]).pow(2).is_identity());
        assert!(r.levels.iter().all(|l| l.kernel_dim == 4));
    }

    #[test]
    fn trivial_group_lifts_to_identity() {
        let g = FiniteGroup::generate(5, vec![FpMatrix::identity(5, 2)], "1", 10).unwrap();
        let r = lifting_loop(&g, 3).unwrap();
        assert!(r.success);
        assert!(r.generators[0] == ZMat::identity(2, 125).rows());
    }

    #[test]
    fn unipotent_lift_agrees_with_exhaustive_search() {
        let u = FpMatrix::from_i64_rows(5, &[vec![1, 1], vec![0, 1]]);
        let naive = ZMat::from_fp(&u, 25);
        assert!(!naive.pow(5).is_identity());
        let g = FiniteGroup::cyclic(5, u.clone(), "C5").unwrap();
        let r = lifting_loop(&g, 2).unwrap();
        let exists = !order_p_lifts(&u).is_empty();
        assert_eq!(r.success, exists);
        // the norm of Ad(u) on gl_2(F_5) vanishes, so no lift of order 5 exists
        assert!(!exists);
        assert!(r.obstruction.is_some());
        // and the loop agrees with exhaustion at p = 3
        let u3 = FpMatrix::from_i64_rows(3, &[vec![1, 1], vec![0, 1]]);
        let g3 = FiniteGroup::cyclic(3, u3.clone(), "C3").unwrap();
        assert_eq!(lifting_loop(&g3, 2).unwrap().success, !order_p_lifts(&u3).is_empty());
    }
}
