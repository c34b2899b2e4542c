//! Semisimplicity against the dimension thresholds, over families of
//! `SL_2(F_p)` modules.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::group::FiniteGroup;

use super::{is_semisimple, ModExpr};

/// Largest tensor power of the natural module surveyed.
pub const TPOW_CAP: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `L(a) (x) L(b)`, `1 <= a <= b <= p - 1`; threshold `a + b < p`.
    Tensor,
    /// `Wedge^i L(m)`, `1 <= i <= m <= p - 1`; threshold `i (m + 1 - i) < p`.
    Wedge,
    /// `L(1)^{(x) k}`, `1 <= k <= min(p, 5)`; threshold `k < p`.
    TensorPower,
    /// `L(n)`, `0 <= n <= p`; threshold `n < p`.
    Sym,
}

impl std::str::FromStr for Family {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tensor" => Ok(Family::Tensor),
            "wedge" => Ok(Family::Wedge),
            "tpow" => Ok(Family::TensorPower),
            "sym" => Ok(Family::Sym),
            _ => invalid(format!("unknown family '{s}' (tensor, wedge, tpow, sym)")),
        }
    }
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Tensor => "tensor",
            Family::Wedge => "wedge",
            Family::TensorPower => "tpow",
            Family::Sym => "sym",
        }
    }

    /// Instances with their threshold quantity.
    pub fn instances(self, p: u32) -> Vec<(ModExpr, u64)> {
        let top = p as usize - 1;
        match self {
            Family::Tensor => (1..=top)
                .flat_map(|a| {
                    (a..=top).map(move |b| {
                        (
                            ModExpr::tensor(vec![ModExpr::l(a), ModExpr::l(b)]),
                            (a + b) as u64,
                        )
                    })
                })
                .collect(),
            Family::Wedge => (1..=top)
                .flat_map(|m| {
                    (1..=m).map(move |i| (ModExpr::l(m).wedge(i), (i * (m + 1 - i)) as u64))
                })
                .collect(),
            Family::TensorPower => (1..=(p as usize).min(TPOW_CAP))
                .map(|k| {
                    (
                        ModExpr::TensorPower(Box::new(ModExpr::Natural), k),
                        k as u64,
                    )
                })
                .collect(),
            Family::Sym => (0..=p as usize)
                .map(|n| (ModExpr::l(n), n as u64))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyInstance {
    pub module: String,
    pub dim: usize,
    pub threshold: u64,
    pub threshold_satisfied: bool,
    pub semisimple: bool,
    pub decomposition: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyReport {
    pub p: u32,
    pub family: String,
    pub instances: Vec<SurveyInstance>,
    /// No instance under the threshold failed to be semisimple.
    pub consistent: bool,
    pub seed: u64,
}

pub fn threshold_survey(p: u32, family: Family, seed: u64) -> Result<SurveyReport> {
    let g = FiniteGroup::sl2(p)?;
    let instances: Vec<SurveyInstance> = family
        .instances(p)
        .into_par_iter()
        .map(|(e, threshold)| {
            let m = e.eval(&g)?;
            let v = is_semisimple(&m, seed)?;
            Ok(SurveyInstance {
                module: e.to_string(),
                dim: m.dim(),
                threshold,
                threshold_satisfied: threshold < p as u64,
                semisimple: v.semisimple,
                decomposition: v.decomposition,
            })
        })
        .collect::<Result<_>>()?;
    let consistent = instances
        .iter()
        .all(|i| !i.threshold_satisfied || i.semisimple);
    Ok(SurveyReport {
        p,
        family: family.name().into(),
        instances,
        consistent,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_family_at_five() {
        let r = threshold_survey(5, Family::Tensor, 0).unwrap();
        assert!(r.consistent);
        assert_eq!(r.instances.len(), 10);
    }

    #[test]
    fn tensor_power_boundary() {
        let r = threshold_survey(5, Family::TensorPower, 0).unwrap();
        assert!(r.consistent);
        let last = r.instances.last().unwrap();
        assert_eq!(last.module, "tpow(nat,5)");
        assert!(!last.threshold_satisfied && !last.semisimple);
    }
}
