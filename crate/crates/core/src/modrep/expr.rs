//! Module expressions: a small language for naming modules built from the
//! natural representation.
//!
//! ```text
//! expr := "sym:" INT | "L(" INT ")" | "nat" | "V" | "triv" | "det"
//!       | "sym(" expr "," INT ")" | "wedge(" expr "," INT ")"
//!       | "tpow(" expr "," INT ")" | "dual(" expr ")"
//!       | "tensor(" expr ("," expr)+ ")" | "sum(" expr ("," expr)+ ")"
//! ```

use std::fmt;
use std::str::FromStr;

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ring::{monomials, subsets, sym_power_matrix, wedge_power_matrix, Fp, RMat, Ring};

use super::FpModule;

/// Largest dimension an expression may evaluate to.
pub const MAX_DIM: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModExpr {
    Natural,
    Trivial,
    Det,
    Sym(Box<ModExpr>, usize),
    Wedge(Box<ModExpr>, usize),
    TensorPower(Box<ModExpr>, usize),
    Dual(Box<ModExpr>),
    Tensor(Vec<ModExpr>),
    Sum(Vec<ModExpr>),
}

impl ModExpr {
    /// `L(n) = Sym^n(V)`.
    pub fn l(n: usize) -> Self {
        ModExpr::Sym(Box::new(ModExpr::Natural), n)
    }

    pub fn tensor(parts: Vec<ModExpr>) -> Self {
        ModExpr::Tensor(parts)
    }

    pub fn wedge(self, i: usize) -> Self {
        ModExpr::Wedge(Box::new(self), i)
    }

    /// Dimension when the natural module has dimension `n`.
    pub fn dim(&self, n: usize) -> u64 {
        match self {
            ModExpr::Natural => n as u64,
            ModExpr::Trivial | ModExpr::Det => 1,
            ModExpr::Sym(m, k) => {
                if *k == 0 {
                    1
                } else {
                    binomial(m.dim(n) + *k as u64 - 1, *k as u64)
                }
            }
            ModExpr::Wedge(m, i) => binomial(m.dim(n), *i as u64),
            ModExpr::TensorPower(m, k) => m.dim(n).saturating_pow(*k as u32),
            ModExpr::Dual(m) => m.dim(n),
            ModExpr::Tensor(ms) => ms
                .iter()
                .map(|m| m.dim(n))
                .fold(1u64, |a, b| a.saturating_mul(b)),
            ModExpr::Sum(ms) => ms.iter().map(|m| m.dim(n)).sum(),
        }
    }

    /// Torus weights when the natural module is `SL_2` with weights `1, -1`,
    /// listed in the basis order used by [`ModExpr::eval_pair`].
    pub fn weights(&self) -> Vec<i64> {
        match self {
            ModExpr::Natural => vec![1, -1],
            ModExpr::Trivial | ModExpr::Det => vec![0],
            ModExpr::Sym(m, k) => sym_weights(&m.weights(), *k),
            ModExpr::Wedge(m, i) => wedge_weights(&m.weights(), *i),
            ModExpr::TensorPower(m, k) => {
                let w = m.weights();
                (0..*k).fold(vec![0], |acc, _| tensor_weights(&acc, &w))
            }
            ModExpr::Dual(m) => m.weights().into_iter().map(|x| -x).collect(),
            ModExpr::Tensor(ms) => ms
                .iter()
                .fold(vec![0], |acc, m| tensor_weights(&acc, &m.weights())),
            ModExpr::Sum(ms) => ms.iter().flat_map(|m| m.weights()).collect(),
        }
    }

    /// `n(V)` for the `SL_2` module: its largest weight.
    pub fn n_invariant(&self) -> i64 {
        self.weights().into_iter().max().unwrap_or(0)
    }

    /// `(rho(g), rho(g^{-1}))` given the natural matrices of `g` and `g^{-1}`.
    /// Works over any commutative ring, so `g` may carry a formal parameter.
    pub fn eval_pair<R: Ring>(&self, g: &RMat<R>, ginv: &RMat<R>, like: &R) -> (RMat<R>, RMat<R>) {
        match self {
            ModExpr::Natural => (g.clone(), ginv.clone()),
            ModExpr::Trivial => (RMat::identity(1, like), RMat::identity(1, like)),
            ModExpr::Det => (
                wedge_power_matrix(g, g.rows, like),
                wedge_power_matrix(ginv, ginv.rows, like),
            ),
            ModExpr::Sym(m, k) => {
                let (a, b) = m.eval_pair(g, ginv, like);
                (
                    sym_power_matrix(&a, *k, like),
                    sym_power_matrix(&b, *k, like),
                )
            }
            ModExpr::Wedge(m, i) => {
                let (a, b) = m.eval_pair(g, ginv, like);
                (
                    wedge_power_matrix(&a, *i, like),
                    wedge_power_matrix(&b, *i, like),
                )
            }
            ModExpr::TensorPower(m, k) => {
                let (a, b) = m.eval_pair(g, ginv, like);
                let mut acc = (RMat::identity(1, like), RMat::identity(1, like));
                for _ in 0..*k {
                    acc = (acc.0.kron(&a), acc.1.kron(&b));
                }
                acc
            }
            ModExpr::Dual(m) => {
                let (a, b) = m.eval_pair(g, ginv, like);
                (b.transpose(), a.transpose())
            }
            ModExpr::Tensor(ms) => {
                let mut acc = (RMat::identity(1, like), RMat::identity(1, like));
                for m in ms {
                    let (a, b) = m.eval_pair(g, ginv, like);
                    acc = (acc.0.kron(&a), acc.1.kron(&b));
                }
                acc
            }
            ModExpr::Sum(ms) => {
                let mut it = ms.iter().map(|m| m.eval_pair(g, ginv, like));
                let first = it.next().expect("sum has at least one part");
                it.fold(first, |acc, (a, b)| {
                    (acc.0.direct_sum(&a), acc.1.direct_sum(&b))
                })
            }
        }
    }

    /// The module over `group`, action evaluated on each generator.
    pub fn eval(&self, group: &FiniteGroup) -> Result<FpModule> {
        let n = group.degree();
        let d = self.dim(n);
        if d > MAX_DIM as u64 {
            return Err(Error::Budget {
                what: format!("module {self}"),
                needed: format!("dimension {d}"),
                budget: MAX_DIM.to_string(),
            });
        }
        let p = group.p();
        let one = Fp { v: 1, p };
        let action = group
            .generators()
            .iter()
            .map(|g| {
                let ginv = g.inverse().expect("generators are invertible");
                self.eval_pair(&RMat::from_fp(g), &RMat::from_fp(&ginv), &one)
                    .0
                    .to_fp(p)
            })
            .collect();
        let m = FpModule::new(p, action, self.to_string())?;
        Ok(if n == 2 {
            m.with_weights(self.weights())
        } else {
            m
        })
    }
}

pub(crate) fn sym_weights(w: &[i64], n: usize) -> Vec<i64> {
    monomials(w.len(), n)
        .iter()
        .map(|e| e.iter().zip(w).map(|(&a, &x)| a as i64 * x).sum())
        .collect()
}

pub(crate) fn wedge_weights(w: &[i64], i: usize) -> Vec<i64> {
    subsets(w.len(), i)
        .iter()
        .map(|&s| (0..w.len()).filter(|c| s >> c & 1 == 1).map(|c| w[c]).sum())
        .collect()
}

fn tensor_weights(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x + y))
        .collect()
}

impl fmt::Display for ModExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, name: &str, ms: &[ModExpr]| {
            write!(f, "{name}(")?;
            for (i, m) in ms.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{m}")?;
            }
            write!(f, ")")
        };
        match self {
            ModExpr::Natural => write!(f, "nat"),
            ModExpr::Trivial => write!(f, "triv"),
            ModExpr::Det => write!(f, "det"),
            ModExpr::Sym(m, k) if **m == ModExpr::Natural => write!(f, "sym:{k}"),
            ModExpr::Sym(m, k) => write!(f, "sym({m},{k})"),
            ModExpr::Wedge(m, i) => write!(f, "wedge({m},{i})"),
            ModExpr::TensorPower(m, k) => write!(f, "tpow({m},{k})"),
            ModExpr::Dual(m) => write!(f, "dual({m})"),
            ModExpr::Tensor(ms) => list(f, "tensor", ms),
            ModExpr::Sum(ms) => list(f, "sum", ms),
        }
    }
}

impl FromStr for ModExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            s: s.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .s
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .s
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a module name"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse {
                pos: start,
                msg: "expected a nonnegative integer".into(),
            })
    }

    fn expr(&mut self) -> Result<ModExpr> {
        let at = self.pos;
        let name = self.ident()?;
        match name.as_str() {
            "nat" | "V" => Ok(ModExpr::Natural),
            "triv" => Ok(ModExpr::Trivial),
            "det" => Ok(ModExpr::Det),
            "L" => {
                self.expect(b'(')?;
                let n = self.int()?;
                self.expect(b')')?;
                Ok(ModExpr::l(n))
            }
            "sym" if self.eat(b':') => Ok(ModExpr::l(self.int()?)),
            "sym" | "wedge" | "tpow" => {
                self.expect(b'(')?;
                let m = Box::new(self.expr()?);
                self.expect(b',')?;
                let k = self.int()?;
                self.expect(b')')?;
                Ok(match name.as_str() {
                    "sym" => ModExpr::Sym(m, k),
                    "wedge" => ModExpr::Wedge(m, k),
                    _ => ModExpr::TensorPower(m, k),
                })
            }
            "dual" => {
                self.expect(b'(')?;
                let m = self.expr()?;
                self.expect(b')')?;
                Ok(ModExpr::Dual(Box::new(m)))
            }
            "tensor" | "sum" => {
                self.expect(b'(')?;
                let mut parts = vec![self.expr()?];
                while self.eat(b',') {
                    parts.push(self.expr()?);
                }
                self.expect(b')')?;
                Ok(if name == "tensor" {
                    ModExpr::Tensor(parts)
                } else {
                    ModExpr::Sum(parts)
                })
            }
            _ => Err(Error::Parse {
                pos: at,
                msg: format!("unknown module '{name}'"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in [
            "sym:5",
            "tensor(sym:2,sym:2)",
            "wedge(sym:3,2)",
            "dual(tpow(nat,3))",
            "sum(triv,det,nat)",
        ] {
            let e: ModExpr = s.parse().unwrap();
            assert_eq!(e.to_string(), s);
        }
        assert_eq!("L(3)".parse::<ModExpr>().unwrap(), ModExpr::l(3));
        assert_eq!("sym(V, 2)".parse::<ModExpr>().unwrap(), ModExpr::l(2));
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!(
            "sym:".parse::<ModExpr>(),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            "tensor(nat".parse::<ModExpr>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "foo".parse::<ModExpr>(),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            "nat)".parse::<ModExpr>(),
            Err(Error::Parse { pos: 3, .. })
        ));
    }

    #[test]
    fn dims_and_weights() {
        let e: ModExpr = "tensor(sym:2,sym:3)".parse().unwrap();
        assert_eq!(e.dim(2), 12);
        assert_eq!(e.weights().len(), 12);
        assert_eq!(e.n_invariant(), 5);
        assert_eq!(ModExpr::l(0).dim(2), 1);
        let w: ModExpr = "wedge(sym:3,2)".parse().unwrap();
        assert_eq!(w.n_invariant(), 4);
        assert_eq!(ModExpr::l(4).weights(), vec![4, 2, 0, -2, -4]);
    }

    #[test]
    fn eval_matches_module_ops() {
        let g = FiniteGroup::sl2(5).unwrap();
        let nat = FpModule::natural(&g);
        let e: ModExpr = "tensor(sym:2,dual(sym:1))".parse().unwrap();
        let m = e.eval(&g).unwrap();
        let direct = nat.sym_power(2).tensor(&nat.dual()).unwrap();
        assert_eq!(m.action(), direct.action());
        assert_eq!(m.weights(), direct.weights());
        assert!(m.respects(&g));
        let l0 = ModExpr::l(0).eval(&g).unwrap();
        assert_eq!(l0.dim(), 1);
        assert_eq!(ModExpr::l(1).eval(&g).unwrap().action(), nat.action());
    }
}
