//! Command implementations behind the `ibx` binary: check profiles,
//! construction dispatch, the Yang-Baxter grid solver, and extension
//! classification, all over the shared structure-file format.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use ibx_core::bialgebra::{
    check_associativity, check_bialgebra, check_coassociativity, check_weighted_compatibility,
};
use ibx_core::error::CoreError;
use ibx_core::extending::{
    classify_extensions, unified_bialgebra_i, unified_bialgebra_ii, unified_bialgebra_special,
    unified_coproduct_c1, unified_coproduct_c2, unified_product_a1, unified_product_a2,
    ClassifyBase, EnumeratedDatum,
};
use ibx_core::format::{parse_json, to_json, write_structure, FormatError, Structure, StructureFile};
use ibx_core::hopf::{check_braided, check_hopf_bimodule, verify_bosonisation, biproduct};
use ibx_core::products::{
    bicrossed_product, check_cocycle_braided, check_cocycle_cross_system,
    check_cocycle_double_matched_pair, check_cocycles, check_cycle_cross_cosystem, check_cycles,
    check_double_matched_pair, check_matched_pair_alg, check_matched_pair_coalg,
    cocycle_bicrossproduct, double_cross_biproduct,
};
use ibx_core::qt::{
    check_coassociativity_criterion, check_qt_identities, check_zero_braiding, is_wayb_solution,
    solve_wayb_grid, RMatrix,
};
use ibx_core::report::CheckReport;
use ibx_core::scalar::Rat;
use ibx_core::tensor::Tensor;

pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// Process exit codes: the check itself failing is 1, unreadable input is 2,
/// a command applied to the wrong kind of file is 3, anything else is 4.
#[derive(Debug)]
pub enum CmdError {
    CheckFailed,
    Parse(String),
    KindMismatch(String),
    Other(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::CheckFailed => 1,
            CmdError::Parse(_) => 2,
            CmdError::KindMismatch(_) => 3,
            CmdError::Other(_) => 4,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CmdError::CheckFailed => "check failed".to_string(),
            CmdError::Parse(m) => format!("parse error: {m}"),
            CmdError::KindMismatch(m) => format!("kind mismatch: {m}"),
            CmdError::Other(m) => m.clone(),
        }
    }
}

impl From<FormatError> for CmdError {
    fn from(e: FormatError) -> Self {
        CmdError::Parse(e.to_string())
    }
}

impl From<CoreError> for CmdError {
    fn from(e: CoreError) -> Self {
        CmdError::Other(e.to_string())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct ViolationDoc {
    condition: String,
    indices: Vec<usize>,
    residual: Vec<Vec<serde_json::Value>>,
}

#[derive(Serialize)]
struct CheckDoc {
    ok: bool,
    violations: Vec<ViolationDoc>,
}

#[derive(Serialize)]
pub struct ReportDocument {
    report_version: String,
    command: String,
    profile: String,
    input_digest: String,
    ok: bool,
    checks: BTreeMap<String, CheckDoc>,
    timing_ms: u128,
}

fn residual_records(t: &Tensor) -> Vec<Vec<serde_json::Value>> {
    t.entries()
        .map(|(idx, val)| {
            let mut rec: Vec<serde_json::Value> =
                idx.iter().map(|&i| serde_json::Value::from(i as u64)).collect();
            rec.push(serde_json::Value::from(val.to_string()));
            rec
        })
        .collect()
}

fn check_doc(report: &CheckReport) -> CheckDoc {
    CheckDoc {
        ok: report.ok(),
        violations: report
            .violations()
            .iter()
            .map(|v| ViolationDoc {
                condition: v.condition.clone(),
                indices: v.indices.clone(),
                residual: residual_records(&v.residual),
            })
            .collect(),
    }
}

fn digest_of(file: &StructureFile) -> String {
    let canon = to_json(file);
    let mut hasher = Sha256::new();
    hasher.update(canon.as_bytes());
    format!("sha256:{}", hex::encode(hasher.finalize()))
}

fn read_file(path: &Path) -> Result<(StructureFile, Structure), CmdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::Parse(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_json(&text)?)
}

fn budget_from_env() -> u128 {
    std::env::var("IBX_BUDGET")
        .ok()
        .and_then(|s| s.parse::<u128>().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Runs a named check profile against a structure file.
pub fn cmd_check(
    path: &Path,
    profile: Option<&str>,
    format: OutputFormat,
) -> Result<(String, bool), CmdError> {
    let start = Instant::now();
    let (file, structure) = read_file(path)?;
    let profile_name = profile.unwrap_or(default_profile(&structure)).to_string();
    let checks = run_checks(&structure, &profile_name)?;
    let ok = checks.values().all(|c| c.ok());
    let doc = ReportDocument {
        report_version: "1".to_string(),
        command: "check".to_string(),
        profile: profile_name.clone(),
        input_digest: digest_of(&file),
        ok,
        checks: checks.iter().map(|(k, v)| (k.clone(), check_doc(v))).collect(),
        timing_ms: start.elapsed().as_millis(),
    };
    let rendered = match format {
        OutputFormat::Json => serde_json::to_string_pretty(&doc).expect("serializable"),
        OutputFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "{} [{}] {}\n",
                file.kind,
                profile_name,
                if ok { "ok" } else { "FAILED" }
            ));
            for (name, report) in &checks {
                out.push_str(&format!(
                    "  {name}: {}\n",
                    if report.ok() { "ok" } else { "FAILED" }
                ));
                for v in report.violations() {
                    out.push_str(&format!(
                        "    {} at {:?}: {:?}\n",
                        v.condition, v.indices, v.residual
                    ));
                }
            }
            out
        }
    };
    Ok((rendered, ok))
}

fn default_profile(s: &Structure) -> &'static str {
    match s {
        Structure::Algebra(_) => "associativity",
        Structure::Coalgebra(_) => "coassociativity",
        Structure::Bialgebra(_) => "bialgebra",
        Structure::RMatrix(_) => "quasitriangular",
        Structure::Braided(_) => "braided",
        Structure::MatchedPair { .. } => "double-matched-pair",
        Structure::CocycleSystem(_) => "cocycle-cross",
        Structure::CycleCosystem(_) => "cycle-cross",
        Structure::CocycleBraidedPair(_) => "cocycle-bicross",
        Structure::ExtendingDatum(_) => "validity",
    }
}

fn run_checks(
    structure: &Structure,
    profile: &str,
) -> Result<BTreeMap<String, CheckReport>, CmdError> {
    let mut out: BTreeMap<String, CheckReport> = BTreeMap::new();
    let mut put = |name: &str, r: CheckReport| {
        out.insert(name.to_string(), r);
    };
    let bad_profile = || {
        Err(CmdError::KindMismatch(format!(
            "profile `{profile}` does not apply to this kind"
        )))
    };
    match structure {
        Structure::Algebra(a) => match profile {
            "associativity" => put("associativity", check_associativity(a)),
            _ => return bad_profile(),
        },
        Structure::Coalgebra(c) => match profile {
            "coassociativity" => put("coassociativity", check_coassociativity(c)),
            _ => return bad_profile(),
        },
        Structure::Bialgebra(b) => match profile {
            "bialgebra" => {
                put("associativity", check_associativity(b.alg()));
                put("coassociativity", check_coassociativity(b.coalg()));
                put("compatibility", check_weighted_compatibility(b));
            }
            "associativity" => put("associativity", check_associativity(b.alg())),
            "coassociativity" => put("coassociativity", check_coassociativity(b.coalg())),
            "compatibility" => put("compatibility", check_weighted_compatibility(b)),
            _ => return bad_profile(),
        },
        Structure::RMatrix(rm) => match profile {
            "wayb" => put("wayb", wayb_report(rm)?),
            "coassoc-criterion" => {
                let crit = check_coassociativity_criterion(rm)?;
                put("derived-coassociative", crit.derived_coassociative);
                put("residual-invariant", crit.residual_invariant);
            }
            "quasitriangular" => {
                let solves = is_wayb_solution(rm)?;
                put("wayb", wayb_report(rm)?);
                if solves {
                    let ids = check_qt_identities(rm)?;
                    put("qt-first", ids.first);
                    put("qt-second-minus-sum", ids.second_minus_sum);
                    put("qt-second-plus-diff", ids.second_plus_diff);
                    put("zero-braiding", check_zero_braiding(rm)?);
                }
                let crit = check_coassociativity_criterion(rm)?;
                put("derived-coassociative", crit.derived_coassociative);
                put("residual-invariant", crit.residual_invariant);
            }
            "zero-braiding" => put("zero-braiding", check_zero_braiding(rm)?),
            _ => return bad_profile(),
        },
        Structure::Braided(obj) => match profile {
            "braided" => put("braided", check_braided(obj)?),
            "hopf-bimodule" => put("hopf-bimodule", check_hopf_bimodule(&obj.hopf_data())?),
            "bosonisation" => {
                let rep = verify_bosonisation(obj)?;
                put("forward", rep.forward);
                put("backward", rep.backward);
            }
            _ => return bad_profile(),
        },
        Structure::MatchedPair { alg, coalg, lambda } => match profile {
            "matched-pair-algebras" => put("matched-pair-algebras", check_matched_pair_alg(alg)?),
            "matched-pair-coalgebras" => {
                put("matched-pair-coalgebras", check_matched_pair_coalg(coalg)?)
            }
            "double-matched-pair" => {
                put("matched-pair-algebras", check_matched_pair_alg(alg)?);
                put("matched-pair-coalgebras", check_matched_pair_coalg(coalg)?);
                put(
                    "double-matched-pair",
                    check_double_matched_pair(alg, coalg, lambda)?,
                );
            }
            _ => return bad_profile(),
        },
        Structure::CocycleSystem(d) => match profile {
            "cocycles" => put("cocycles", check_cocycles(d)?),
            "cocycle-cross" => {
                put("cocycles", check_cocycles(d)?);
                put("cross-relations", check_cocycle_cross_system(d)?);
            }
            _ => return bad_profile(),
        },
        Structure::CycleCosystem(d) => match profile {
            "cycles" => put("cycles", check_cycles(d)?),
            "cycle-cross" => {
                put("cycles", check_cycles(d)?);
                put("cross-relations", check_cycle_cross_cosystem(d)?);
            }
            _ => return bad_profile(),
        },
        Structure::CocycleBraidedPair(p) => match profile {
            "cocycle-braided" => put("cocycle-braided", check_cocycle_braided(p)?),
            "cocycle-dmp" => put("cocycle-dmp", check_cocycle_double_matched_pair(p)?),
            "cocycle-bicross" => {
                put("cocycles", check_cocycles(&p.system)?);
                put("cross-relations", check_cocycle_cross_system(&p.system)?);
                put("cycles", check_cycles(&p.cosystem)?);
                put("cycle-cross-relations", check_cycle_cross_cosystem(&p.cosystem)?);
                put("cocycle-braided", check_cocycle_braided(p)?);
                put("cocycle-dmp", check_cocycle_double_matched_pair(p)?);
            }
            _ => return bad_profile(),
        },
        Structure::ExtendingDatum(d) => match profile {
            "validity" => {
                let report = match d {
                    EnumeratedDatum::A1(d) => unified_product_a1(d)?.1,
                    EnumeratedDatum::A2(d) => unified_product_a2(d)?.1,
                    EnumeratedDatum::C1(d) => unified_coproduct_c1(d)?.1,
                    EnumeratedDatum::C2(d) => unified_coproduct_c2(d)?.1,
                    EnumeratedDatum::I(d) => unified_bialgebra_i(d)?.1,
                    EnumeratedDatum::II(d) => unified_bialgebra_ii(d)?.1,
                };
                put("validity", report);
            }
            "special" => match d {
                EnumeratedDatum::II(d) => put("validity", unified_bialgebra_special(d)?.1),
                _ => return bad_profile(),
            },
            _ => return bad_profile(),
        },
    }
    Ok(out)
}

fn wayb_report(rm: &RMatrix) -> Result<CheckReport, CmdError> {
    let residual = ibx_core::qt::wayb_residual(rm)?;
    let mut report = CheckReport::ok_report();
    if !residual.is_zero() {
        ibx_core::report::push_whole(&mut report, "WAYB", residual);
    }
    Ok(report)
}

/// Builds the structure a `--product` name requests from an input file.
pub fn cmd_construct(
    path: &Path,
    product: &str,
    out_path: Option<&Path>,
) -> Result<(String, bool), CmdError> {
    let (_, structure) = read_file(path)?;
    let mismatch = |need: &str| {
        Err(CmdError::KindMismatch(format!(
            "product `{product}` needs a {need} file"
        )))
    };
    let (built, report): (Structure, CheckReport) = match product {
        "biproduct" => match &structure {
            Structure::Braided(obj) => {
                let e = biproduct(obj)?;
                (Structure::Bialgebra(e.clone()), check_bialgebra(&e))
            }
            _ => return mismatch("braided"),
        },
        "bicrossed" => match &structure {
            Structure::MatchedPair { alg, .. } => {
                let e = bicrossed_product(alg)?;
                (Structure::Algebra(e.clone()), check_associativity(&e))
            }
            _ => return mismatch("matched-pair"),
        },
        "double-cross" => match &structure {
            Structure::MatchedPair { alg, coalg, lambda } => {
                let e = double_cross_biproduct(alg, coalg, lambda)?;
                (Structure::Bialgebra(e.clone()), check_bialgebra(&e))
            }
            _ => return mismatch("matched-pair"),
        },
        "cocycle-bicross" => match &structure {
            Structure::CocycleBraidedPair(p) => {
                let e = cocycle_bicrossproduct(p)?;
                (Structure::Bialgebra(e.clone()), check_bialgebra(&e))
            }
            _ => return mismatch("cocycle-braided-pair"),
        },
        "unified-a1" => match &structure {
            Structure::ExtendingDatum(EnumeratedDatum::A1(d)) => {
                let (e, r) = unified_product_a1(d)?;
                (Structure::Algebra(e), r)
            }
            _ => return mismatch("extending-datum (a1)"),
        },
        "unified-a2" => match &structure {
            Structure::ExtendingDatum(EnumeratedDatum::A2(d)) => {
                let (e, r) = unified_product_a2(d)?;
                (Structure::Algebra(e), r)
            }
            _ => return mismatch("extending-datum (a2)"),
        },
        "unified-c1" => match &structure {
            Structure::ExtendingDatum(EnumeratedDatum::C1(d)) => {
                let (e, r) = unified_coproduct_c1(d)?;
                (Structure::Coalgebra(e), r)
            }
            _ => return mismatch("extending-datum (c1)"),
        },
        "unified-c2" => match &structure {
            Structure::ExtendingDatum(EnumeratedDatum::C2(d)) => {
                let (e, r) = unified_coproduct_c2(d)?;
                (Structure::Coalgebra(e), r)
            }
            _ => return mismatch("extending-datum (c2)"),
        },
        "unified-I" => match &structure {
            Structure::ExtendingDatum(EnumeratedDatum::I(d)) => {
                let (e, r) = unified_bialgebra_i(d)?;
                (Structure::Bialgebra(e), r)
            }
            _ => return mismatch("extending-datum (I)"),
        },
        "unified-II" => match &structure {
            Structure::ExtendingDatum(EnumeratedDatum::II(d)) => {
                let (e, r) = unified_bialgebra_ii(d)?;
                (Structure::Bialgebra(e), r)
            }
            _ => return mismatch("extending-datum (II)"),
        },
        "special" => match &structure {
            Structure::ExtendingDatum(EnumeratedDatum::II(d)) => {
                let (e, r) = unified_bialgebra_special(d)?;
                (Structure::Bialgebra(e), r)
            }
            _ => return mismatch("extending-datum (special)"),
        },
        other => {
            return Err(CmdError::Other(format!("unknown product `{other}`")));
        }
    };
    let mut out_file = write_structure(&built);
    out_file.report = Some(ibx_core::format::ReportSummary {
        ok: report.ok(),
        failed_conditions: report.failed_conditions(),
    });
    let text = to_json(&out_file);
    if let Some(p) = out_path {
        std::fs::write(p, &text)
            .map_err(|e| CmdError::Other(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok((text, report.ok()))
}

#[derive(Serialize)]
struct SolveDocument {
    report_version: String,
    command: String,
    input_digest: String,
    lambda: String,
    coeffs: Vec<String>,
    support: Option<Vec<(usize, usize)>>,
    solutions: Vec<Vec<Vec<serde_json::Value>>>,
}

/// Exhaustive Yang-Baxter grid search over an algebra file.
pub fn cmd_solve_wayb(
    path: &Path,
    lambda: Option<&str>,
    coeffs: &str,
    support: Option<&str>,
    out_path: Option<&Path>,
) -> Result<String, CmdError> {
    let (file, structure) = read_file(path)?;
    let (alg, file_lambda) = match &structure {
        Structure::Algebra(a) => (a.clone(), Rat::zero()),
        Structure::RMatrix(rm) => (rm.alg().clone(), rm.lambda().clone()),
        _ => {
            return Err(CmdError::KindMismatch(
                "solve-wayb needs an algebra or rmatrix file".into(),
            ))
        }
    };
    if alg.unit().is_none() {
        return Err(CmdError::Other(CoreError::MissingUnit.to_string()));
    }
    let lambda = match lambda {
        Some(s) => s
            .parse::<Rat>()
            .map_err(|e| CmdError::Parse(e.to_string()))?,
        None => file_lambda,
    };
    let coeffs: Vec<Rat> = coeffs
        .split(',')
        .map(|s| s.trim().parse::<Rat>())
        .collect::<Result<_, _>>()
        .map_err(|e| CmdError::Parse(e.to_string()))?;
    let support_vec: Option<Vec<(usize, usize)>> = match support {
        Some(s) => Some(
            s.split(',')
                .map(|pair| {
                    let (i, j) = pair
                        .split_once(':')
                        .ok_or_else(|| CmdError::Parse(format!("bad support entry `{pair}`")))?;
                    let i = i.trim().parse::<usize>().map_err(|e| CmdError::Parse(e.to_string()))?;
                    let j = j.trim().parse::<usize>().map_err(|e| CmdError::Parse(e.to_string()))?;
                    Ok((i, j))
                })
                .collect::<Result<Vec<_>, CmdError>>()?,
        ),
        None => None,
    };
    let solutions = solve_wayb_grid(
        &alg,
        &lambda,
        &coeffs,
        support_vec.as_deref(),
        budget_from_env(),
    )?;
    let doc = SolveDocument {
        report_version: "1".to_string(),
        command: "solve-wayb".to_string(),
        input_digest: digest_of(&file),
        lambda: lambda.to_string(),
        coeffs: coeffs.iter().map(|c| c.to_string()).collect(),
        support: support_vec,
        solutions: solutions.iter().map(residual_records).collect(),
    };
    let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
    if let Some(p) = out_path {
        std::fs::write(p, &text)
            .map_err(|e| CmdError::Other(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(text)
}

#[derive(Serialize)]
struct ClassDocument {
    report_version: String,
    command: String,
    input_digest: String,
    kind: String,
    v_dim: usize,
    grid: Vec<String>,
    total_valid: usize,
    equivalence_complete: bool,
    classes: Vec<ClassEntry>,
}

#[derive(Serialize)]
struct ClassEntry {
    representative: StructureFile,
    size_over_grid: usize,
}

/// Bounded classification of extensions of the base structure in the file.
pub fn cmd_classify(
    path: &Path,
    v_dim: usize,
    grid: &str,
    kind: Option<&str>,
    out_path: Option<&Path>,
) -> Result<String, CmdError> {
    let (file, structure) = read_file(path)?;
    let base = match (&structure, kind) {
        (Structure::Algebra(a), None | Some("algebra")) => ClassifyBase::Algebra(a.clone()),
        (Structure::Coalgebra(c), None | Some("coalgebra")) => ClassifyBase::Coalgebra(c.clone()),
        (Structure::Bialgebra(b), None | Some("bialgebra")) => ClassifyBase::Bialgebra(b.clone()),
        (Structure::Bialgebra(b), Some("algebra")) => ClassifyBase::Algebra(b.alg().clone()),
        (Structure::Bialgebra(b), Some("coalgebra")) => ClassifyBase::Coalgebra(b.coalg().clone()),
        _ => {
            return Err(CmdError::KindMismatch(
                "classify needs an algebra, coalgebra, or bialgebra file matching --kind".into(),
            ))
        }
    };
    let grid_vals: Vec<Rat> = grid
        .split(',')
        .map(|s| s.trim().parse::<Rat>())
        .collect::<Result<_, _>>()
        .map_err(|e| CmdError::Parse(e.to_string()))?;
    let classification = classify_extensions(&base, v_dim, &grid_vals, budget_from_env())?;
    let doc = ClassDocument {
        report_version: "1".to_string(),
        command: "classify".to_string(),
        input_digest: digest_of(&file),
        kind: format!("{:?}", classification.kind).to_lowercase(),
        v_dim,
        grid: grid_vals.iter().map(|g| g.to_string()).collect(),
        total_valid: classification.total_valid,
        equivalence_complete: classification.equivalence_complete,
        classes: classification
            .classes
            .iter()
            .map(|c| ClassEntry {
                representative: write_structure(&Structure::ExtendingDatum(
                    c.representative.clone(),
                )),
                size_over_grid: c.size_over_grid,
            })
            .collect(),
    };
    let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
    if let Some(p) = out_path {
        std::fs::write(p, &text)
            .map_err(|e| CmdError::Other(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(text)
}
