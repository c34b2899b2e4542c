//! `finsub`: queries and verification suites, as JSON lines with a final
//! summary object. Exit status 0 when every assertion passed, 1 when one
//! failed or a computation could not finish, 2 on a usage error.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use finsub_core::cohom::{brute_h1, brute_h2};
use finsub_core::embed::{
    check_e8_labels, labeled_adjoint_decomposition, lifting_condition_check, min_gl_valuation,
    minkowski_bound, new_case_report, principal_labels, toral_criterion_gl2, toral_criterion_sl2,
};
use finsub_core::group::FiniteGroup;
use finsub_core::modrep::{exp_degree, is_semisimple, threshold_survey, Family, ModExpr};
use finsub_core::obstruction::{
    lifting_loop, named_group, named_tower, obs_of_hom, verify_cup_symmetry, verify_prop1,
    verify_prop2, Sweep,
};
use finsub_core::report::{case_table, degree_table, torsion_table, verify_all, Tier};
use finsub_core::rootsys::{CartanType, Family as RootFamily, RootSystem};
use finsub_core::weyl::{budget_from_env, molien_degrees, springer_check, springer_witnesses};
use finsub_core::{fp::FpMatrix, Error};

#[derive(Parser)]
#[command(
    name = "finsub",
    version,
    about = "Finite subgroups of Lie groups: invariants, modular representations, cohomology"
)]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Element budget for Weyl group enumeration (default from FINSUB_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Add wall-clock time to the summary (the output is then not byte-stable).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reference tables: degrees, torsion, cases.
    Table {
        name: String,
        /// Aligned text instead of JSON lines.
        #[arg(long)]
        text: bool,
    },
    /// Root-system data as JSON.
    Export {
        #[arg(long = "type")]
        ty: CartanType,
    },
    /// Toral criterion for SL2(q) (or GL2(q) with --gl2).
    Criterion {
        #[arg(long = "type")]
        ty: CartanType,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        gl2: bool,
    },
    /// Values of q new for an exceptional type.
    NewCases {
        #[arg(long = "type")]
        ty: CartanType,
    },
    /// Adjoint decomposition under the principal SL2.
    Principal {
        #[arg(long = "type")]
        ty: CartanType,
        /// Also check the lifting conditions at this prime.
        #[arg(long)]
        p: Option<u64>,
    },
    /// Adjoint decomposition for a labelled diagram.
    Labels {
        #[arg(long = "type")]
        ty: CartanType,
        /// Comma-separated node labels.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        labels: Vec<i64>,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Eigenvalue orders of Weyl group elements against divisors of degrees.
    Springer {
        #[arg(long = "type")]
        ty: CartanType,
    },
    /// Invariant degrees from the Molien series.
    Molien {
        #[arg(long = "type")]
        ty: CartanType,
    },
    /// Minkowski bound against valuations of |GL_n(F_p)|.
    Minkowski {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        l: u64,
    },
    /// Semisimplicity verdict for an SL2(F_p) module.
    Semisimple {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        module: ModExpr,
    },
    /// Semisimplicity against thresholds over a module family.
    Survey {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        family: Family,
    },
    /// Degree in t of a one-parameter unipotent subgroup in a module.
    Expdeg {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        module: ModExpr,
    },
    /// dim H^1(SL2(F_p), M).
    H1 {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        module: ModExpr,
    },
    /// dim H^2(SL2(F_p), M).
    H2 {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        module: ModExpr,
    },
    /// Obstruction identities on a Heisenberg tower.
    VerifyProps {
        #[arg(long)]
        p: u32,
        #[arg(long = "A", alias = "a", default_value = "c2")]
        group: String,
        /// Force this many seeded samples instead of an exhaustive sweep.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Lift a subgroup of GL2(F_p) to GL2(Z/p^k).
    Lift {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value = "s3")]
        group: String,
        #[arg(long, default_value_t = 3)]
        k: u32,
    },
    /// Every numbered criterion.
    VerifyAll {
        #[arg(long, default_value = "quick")]
        tier: Tier,
    },
}

/// Collected output of one command.
struct Out {
    records: Vec<Value>,
    failed: Vec<String>,
    assertions: usize,
}

impl Out {
    fn new() -> Self {
        Out {
            records: Vec::new(),
            failed: Vec::new(),
            assertions: 0,
        }
    }

    fn emit<T: Serialize>(&mut self, v: &T) {
        self.records
            .push(serde_json::to_value(v).expect("serializable"));
    }

    fn assert(&mut self, name: impl Into<String>, ok: bool) {
        self.assertions += 1;
        if !ok {
            self.failed.push(name.into());
        }
    }
}

fn sl2_module(
    p: u32,
    e: &ModExpr,
) -> finsub_core::Result<(FiniteGroup, finsub_core::modrep::FpModule)> {
    let g = FiniteGroup::sl2(p)?;
    let m = e.eval(&g)?;
    Ok((g, m))
}

fn run(cmd: &Cmd, seed: u64, budget: u64, out: &mut Out) -> finsub_core::Result<()> {
    match cmd {
        Cmd::Table { name, text } => {
            let rows: Vec<Value> = match name.as_str() {
                "degrees" => degree_table()?
                    .iter()
                    .map(|r| serde_json::to_value(r).unwrap())
                    .collect(),
                "torsion" => torsion_table()?
                    .iter()
                    .map(|r| serde_json::to_value(r).unwrap())
                    .collect(),
                "cases" => case_table()?
                    .iter()
                    .map(|r| serde_json::to_value(r).unwrap())
                    .collect(),
                _ => {
                    return Err(Error::Invalid(format!(
                        "unknown table '{name}' (degrees, torsion, cases)"
                    )))
                }
            };
            if *text {
                print_text(&rows);
            } else {
                out.records.extend(rows);
            }
        }
        Cmd::Export { ty } => out.emit(&RootSystem::new(*ty)?),
        Cmd::Criterion { ty, q, gl2 } => {
            let rs = RootSystem::new(*ty)?;
            let holds = if *gl2 {
                toral_criterion_gl2(&rs, *q)?
            } else {
                toral_criterion_sl2(&rs, *q)?
            };
            out.emit(&json!({"type": ty.to_string(), "q": q, "group": if *gl2 { "GL2" } else { "SL2" }, "degrees": rs.degrees, "holds": holds}));
        }
        Cmd::NewCases { ty } => {
            let rs = RootSystem::new(*ty)?;
            out.emit(&json!({"type": ty.to_string(), "new_q": new_case_report(&rs)?}));
        }
        Cmd::Principal { ty, p } => {
            let rs = RootSystem::new(*ty)?;
            let d = principal_labels(&rs);
            out.assert("dimension", d.total_dim() == rs.dim_g);
            let lifting = p.map(|p| lifting_condition_check(&rs, &d, p));
            out.emit(&json!({"type": ty.to_string(), "parts": d.parts, "total_dim": d.total_dim(), "p": p, "lifting_conditions": lifting}));
        }
        Cmd::Labels { ty, labels, p } => {
            let rs = RootSystem::new(*ty)?;
            match (ty.family, ty.rank, p) {
                (RootFamily::E, 8, Some(p)) => {
                    let found = check_e8_labels(&rs, labels, *p)?;
                    out.emit(&json!({"type": ty.to_string(), "written": labels, "p": p, "passes": found.is_some(), "match": found}));
                }
                _ => {
                    let d = labeled_adjoint_decomposition(&rs, labels)?;
                    let lifting = p.map(|p| lifting_condition_check(&rs, &d, p));
                    out.emit(&json!({"type": ty.to_string(), "labels": labels, "parts": d.parts, "p": p, "lifting_conditions": lifting}));
                }
            }
        }
        Cmd::Springer { ty } => {
            let rs = RootSystem::new(*ty)?;
            let report = match springer_check(&rs, budget) {
                Err(Error::Budget { .. }) => springer_witnesses(&rs, seed, 100_000)?,
                r => r?,
            };
            out.assert(format!("springer {ty}"), report.equal);
            out.emit(&report);
        }
        Cmd::Molien { ty } => {
            let rs = RootSystem::new(*ty)?;
            let d = molien_degrees(&rs, budget)?;
            out.assert(format!("molien {ty}"), d == ty.degrees());
            out.emit(&json!({"type": ty.to_string(), "degrees": d, "table": ty.degrees()}));
        }
        Cmd::Minkowski { n, l } => {
            let b = minkowski_bound(*n, *l)?;
            let v = min_gl_valuation(*n as u32, *l, 100);
            if b.caveat.is_none() {
                out.assert("bound equals minimal valuation", b.bound == v as u64);
            }
            out.emit(&json!({"bound": b, "min_valuation_p_le_100": v}));
        }
        Cmd::Semisimple { p, module } => {
            let (_, m) = sl2_module(*p, module)?;
            out.emit(&is_semisimple(&m, seed)?);
        }
        Cmd::Survey { p, family } => {
            let r = threshold_survey(*p, *family, seed)?;
            out.assert("below-threshold instances are semisimple", r.consistent);
            for i in &r.instances {
                out.emit(i);
            }
            out.emit(&json!({"p": r.p, "family": r.family, "consistent": r.consistent}));
        }
        Cmd::Expdeg { p, module } => {
            let u = FpMatrix::from_i64_rows(*p, &[vec![1, 1], vec![0, 1]]);
            let d = exp_degree(module, &u)?;
            out.assert("degree <= n(V)", d.bound_holds);
            out.emit(&d);
        }
        Cmd::H1 { p, module } => {
            let (g, m) = sl2_module(*p, module)?;
            let h = brute_h1(&g, &m)?;
            out.emit(&json!({"p": p, "module": module.to_string(), "degree": 1, "dim": h.h_dim, "detail": h}));
        }
        Cmd::H2 { p, module } => {
            let (g, m) = sl2_module(*p, module)?;
            let h = brute_h2(&g, &m)?;
            out.emit(&json!({"p": p, "module": module.to_string(), "degree": 2, "dim": h.h_dim, "detail": h}));
        }
        Cmd::VerifyProps { p, group, samples } => {
            let t = named_tower(*p, group)?;
            let sweep = samples.map_or(Sweep::Auto, Sweep::Sampled);
            let (cocycles, _) = t.cocycles(seed)?;
            let reps: Vec<Value> = cocycles
                .iter()
                .filter(|x| x.iter().any(|v| *v != [0, 0]))
                .take(3)
                .map(|x| Ok(json!({"cocycle": x, "obs": obs_of_hom(&t, x, seed)?})))
                .collect::<finsub_core::Result<_>>()?;
            out.emit(&json!({"tower": t.name, "group_order": t.order(), "h2_dim": t.h2_dim()?, "representatives": reps}));
            for (name, r) in [
                ("prop1", verify_prop1(&t, sweep, seed)?),
                ("prop2", verify_prop2(&t, sweep, seed)?),
                ("symmetry", verify_cup_symmetry(&t, sweep, seed)?),
            ] {
                out.assert(name, r.failures == 0);
                out.emit(&json!({"identity": name, "report": r}));
            }
        }
        Cmd::Lift { p, group, k } => {
            let g = named_group(*p, group)?;
            let r = lifting_loop(&g, *k)?;
            out.assert(format!("lift to Z/{p}^{k}"), r.success);
            out.emit(&r);
        }
        Cmd::VerifyAll { tier } => {
            for r in verify_all(*tier, seed)? {
                out.assert(format!("criterion {}", r.criterion), r.passed);
                out.emit(&r);
            }
        }
    }
    Ok(())
}

/// Rows as an aligned text table, one column per field.
fn print_text(rows: &[Value]) {
    let Some(first) = rows.first().and_then(Value::as_object) else {
        return;
    };
    let mut keys: Vec<&String> = first.keys().collect();
    keys.sort_by_key(|k| *k != "type");
    let cell = |v: &Value| match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => a
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(","),
        v => v.to_string(),
    };
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|r| keys.iter().map(|k| cell(&r[k.as_str()])).collect())
        .collect();
    let widths: Vec<usize> = (0..keys.len())
        .map(|j| {
            table
                .iter()
                .map(|r| r[j].len())
                .chain([keys[j].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        println!("{}", padded.join("  ").trim_end());
    };
    line(keys.iter().map(|k| k.as_str()).collect());
    for r in &table {
        line(r.iter().map(String::as_str).collect());
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Table { .. } => "table",
        Cmd::Export { .. } => "export",
        Cmd::Criterion { .. } => "criterion",
        Cmd::NewCases { .. } => "new-cases",
        Cmd::Principal { .. } => "principal",
        Cmd::Labels { .. } => "labels",
        Cmd::Springer { .. } => "springer",
        Cmd::Molien { .. } => "molien",
        Cmd::Minkowski { .. } => "minkowski",
        Cmd::Semisimple { .. } => "semisimple",
        Cmd::Survey { .. } => "survey",
        Cmd::Expdeg { .. } => "expdeg",
        Cmd::H1 { .. } => "h1",
        Cmd::H2 { .. } => "h2",
        Cmd::VerifyProps { .. } => "verify-props",
        Cmd::Lift { .. } => "lift",
        Cmd::VerifyAll { .. } => "verify-all",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = cli.budget.unwrap_or_else(budget_from_env);
    let t0 = Instant::now();
    let mut out = Out::new();
    let result = run(&cli.cmd, cli.seed, budget, &mut out);
    for r in &out.records {
        println!("{r}");
    }
    let (code, error) = match &result {
        Ok(()) if out.failed.is_empty() => (0u8, None),
        Ok(()) => (1, None),
        Err(e @ (Error::Invalid(_) | Error::Parse { .. })) => (2, Some(e.to_string())),
        Err(e) => (1, Some(e.to_string())),
    };
    let mut summary = json!({
        "summary": {
            "command": command_name(&cli.cmd),
            "args": std::env::args().skip(1).collect::<Vec<_>>(),
            "seed": cli.seed,
            "budget": budget,
            "assertions": out.assertions,
            "failed": out.failed,
            "error": error,
            "passed": code == 0,
        }
    });
    if cli.timing {
        summary["summary"]["elapsed_ms"] = json!(t0.elapsed().as_millis() as u64);
    }
    println!("{summary}");
    ExitCode::from(code)
}
