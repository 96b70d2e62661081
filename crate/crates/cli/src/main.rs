//! Command-line surface: JSON reports for representation checks,
//! boundary-link torsion, Alexander polynomials, satellite factors, and
//! norm-class tests.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use slicetor_core::normtest::DEFAULT_FACTOR_BUDGET;
use slicetor_core::monomial::DEFAULT_CLOSURE_BUDGET;
use slicetor_core::satellite::{
    alexander_from_seifert, bing_double_obstruction, builtin_knot, satellite_factor,
    AlexanderPoly, BingVerdict, KnotSeifertMatrix,
};
use slicetor_core::torsion::{
    boundary_torsion, build_twisted_matrix, rank_of_link, slice_consequence_check,
    unlink_torsion, BoundarySeifertMatrix, PsiMap, SliceCheckVerdict, TorsionClass,
};
use slicetor_core::{
    rational_norm_class, Error, FreeWord, MonomialRep, NormVerdict, RealUnits,
};

#[derive(Parser)]
#[command(name = "slicetor", version, about = "Twisted torsion sliceness obstructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Monomial representation checks
    Rep {
        #[command(subcommand)]
        command: RepCommand,
    },
    /// Boundary-link twisted torsion
    Torsion {
        #[command(subcommand)]
        command: TorsionCommand,
    },
    /// Alexander polynomials
    Alexander {
        #[command(subcommand)]
        command: AlexanderCommand,
    },
    /// Satellite factor and Bing-double obstruction
    Satellite {
        #[command(subcommand)]
        command: SatelliteCommand,
    },
    /// Hermitian norm-class membership in Q(zeta_8)
    Norm {
        #[command(subcommand)]
        command: NormCommand,
    },
}

#[derive(Subcommand)]
enum RepCommand {
    /// Verify the image is a p-group and report the det group
    Verify {
        #[command(flatten)]
        rep: RepArg,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_BUDGET)]
        closure_budget: usize,
    },
    /// Eigenvalues of the image of a word
    Eigenvalues {
        #[command(flatten)]
        rep: RepArg,
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand)]
enum TorsionCommand {
    /// Torsion from a boundary link Seifert matrix
    Boundary {
        #[arg(long)]
        seifert: String,
        #[command(flatten)]
        rep: RepArg,
        #[arg(long)]
        psi: String,
    },
    /// Closed-form unlink torsion
    Unlink {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        rep: RepArg,
        #[arg(long)]
        psi: String,
    },
    /// Torsion plus the norm-class consequence of sliceness
    SliceCheck {
        #[arg(long)]
        seifert: String,
        #[command(flatten)]
        rep: RepArg,
        #[arg(long)]
        psi: String,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Subcommand)]
enum AlexanderCommand {
    /// det(B^t - Bt) from a knot Seifert matrix
    FromSeifert {
        #[command(flatten)]
        knot: KnotArg,
    },
}

#[derive(Subcommand)]
enum SatelliteCommand {
    /// Eigenvalue product of the companion Alexander polynomial
    Factor {
        #[command(flatten)]
        rep: RepArg,
        #[arg(long)]
        axis: String,
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long)]
        psi: Option<String>,
    },
    /// Sliceness obstruction for the Bing double of a knot
    Bing {
        #[command(flatten)]
        rep: RepArg,
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_BUDGET)]
        closure_budget: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Subcommand)]
enum NormCommand {
    /// Membership of a rational in +-(units) * q * conj(q)
    Test {
        #[arg(allow_hyphen_values = true)]
        value: String,
        #[arg(long, default_value = "pm1")]
        real_units: String,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args)]
struct RepArg {
    /// Representation file, or `trivial1` for the trivial 1-dim rep
    #[arg(long)]
    rep: String,
    /// Generator count for built-in representation names
    #[arg(long)]
    generators: Option<usize>,
}

#[derive(Args)]
struct KnotArg {
    /// Built-in name (unknot, trefoil, fig8) or a JSON file with
    /// {"alexander": [...]} or {"seifert": [[...]]}
    #[arg(long)]
    knot: String,
}

impl RepArg {
    fn resolve(&self, default_m: usize) -> Result<MonomialRep, Error> {
        if self.rep == "trivial1" {
            return Ok(MonomialRep::trivial(self.generators.unwrap_or(default_m), 1));
        }
        let s = std::fs::read_to_string(&self.rep)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", self.rep)))?;
        MonomialRep::from_json(&s)
    }
}

impl KnotArg {
    fn resolve(&self) -> Result<(Option<KnotSeifertMatrix>, AlexanderPoly), Error> {
        if let Some((b, d)) = builtin_knot(&self.knot) {
            let b = if b.size() > 0 { Some(b) } else { None };
            return Ok((b, d));
        }
        let s = std::fs::read_to_string(&self.knot)
            .map_err(|e| Error::Parse(format!("unknown knot {}: {e}", self.knot)))?;
        let v: Value =
            serde_json::from_str(&s).map_err(|e| Error::Parse(format!("bad knot file: {e}")))?;
        if let Some(a) = v.get("alexander") {
            let delta: AlexanderPoly = serde_json::from_value(a.clone())
                .map_err(|e| Error::Parse(format!("bad alexander field: {e}")))?;
            return Ok((None, delta));
        }
        if let Some(m) = v.get("seifert") {
            let rows: Vec<Vec<i64>> = serde_json::from_value(m.clone())
                .map_err(|e| Error::Parse(format!("bad seifert field: {e}")))?;
            let b = KnotSeifertMatrix::new(rows)?;
            let delta = alexander_from_seifert(&b)?;
            return Ok((Some(b), delta));
        }
        Err(Error::Parse(
            "knot file needs an \"alexander\" or \"seifert\" field".into(),
        ))
    }
}

fn resolve_psi(spec: &str, m: usize) -> Result<PsiMap, Error> {
    if let Some(n) = spec.strip_prefix("id") {
        if let Ok(n) = n.parse::<usize>() {
            let psi = PsiMap::identity(n);
            if n != m {
                return Err(Error::DimensionMismatch(format!(
                    "psi {spec} has {n} columns, link has {m} components"
                )));
            }
            return Ok(psi);
        }
    }
    let s = std::fs::read_to_string(spec)
        .map_err(|e| Error::Parse(format!("cannot read {spec}: {e}")))?;
    let psi: PsiMap =
        serde_json::from_str(&s).map_err(|e| Error::Parse(format!("bad psi file: {e}")))?;
    psi.validate()?;
    Ok(psi)
}

fn resolve_seifert(spec: &str) -> Result<BoundarySeifertMatrix, Error> {
    match spec {
        "unknot" => return Ok(BoundarySeifertMatrix::empty(1)),
        "trefoil" => return BoundarySeifertMatrix::knot(vec![vec![-1, 1], vec![0, -1]]),
        "fig8" => return BoundarySeifertMatrix::knot(vec![vec![1, 1], vec![0, -1]]),
        _ => {}
    }
    let s = std::fs::read_to_string(spec)
        .map_err(|e| Error::Parse(format!("cannot read {spec}: {e}")))?;
    let m: BoundarySeifertMatrix =
        serde_json::from_str(&s).map_err(|e| Error::Parse(format!("bad seifert file: {e}")))?;
    BoundarySeifertMatrix::new(m.m, m.blocks)
}

fn search_budget(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("TORSION_SEARCH_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_FACTOR_BUDGET)
}

fn root_json(z: &slicetor_core::RootOfUnity) -> Value {
    json!({"num": z.numerator(), "den": z.denominator()})
}

fn torsion_json(t: &TorsionClass) -> Value {
    json!({
        "value": t.value,
        "ambiguity": t.ambiguity,
    })
}

fn norm_verdict_json(v: &NormVerdict) -> Value {
    serde_json::to_value(v).unwrap()
}

/// Independent spot check of a torsion value: recompute the twisted
/// determinant at an exact rational point and compare with the report's
/// numerator evaluated there.
fn recheck_torsion(
    seifert: &BoundarySeifertMatrix,
    rep: &MonomialRep,
    psi: &PsiMap,
    t: &TorsionClass,
) -> Result<bool, Error> {
    let twisted = build_twisted_matrix(seifert, rep, psi)?;
    let primes: Vec<i64> = [2, 3, 5, 7, 11, 13][..psi.rank.min(6)].to_vec();
    if primes.len() < psi.rank {
        return Ok(true);
    }
    let point: Vec<num_rational::BigRational> =
        primes.iter().map(|&p| slicetor_core::rat::rat(p)).collect();
    let dense = twisted.evaluate(&point);
    let det = slicetor_core::dense_det(&dense, rep.conductor());
    let num = t.value.numerator().evaluate(&point);
    if det.is_zero() {
        return Ok(num.is_zero());
    }
    // the canonical numerator is +-(monomial) * det, so the ratio at the
    // point is +- a product of powers of the point coordinates
    let Ok(inv) = det.inv() else {
        return Ok(false);
    };
    let Ok(prod) = num.checked_mul(&inv) else {
        return Ok(false);
    };
    let Some(ratio) = prod.as_rational() else {
        return Ok(false);
    };
    let mut n = ratio.numer().abs() * ratio.denom().abs();
    for p in primes {
        let p = num_bigint::BigInt::from(p);
        while (&n % &p).is_zero() {
            n /= &p;
        }
    }
    Ok(n == num_bigint::BigInt::from(1))
}

fn emit(report: Value) {
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}

fn run() -> Result<(), Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Rep { command } => match command {
            RepCommand::Verify {
                rep,
                p,
                closure_budget,
            } => {
                let r = rep.resolve(2)?;
                let cert = r.verify_p_group(p, closure_budget)?;
                let det_group = r.det_group();
                emit(json!({
                    "schema": 1,
                    "command": "rep verify",
                    "input": {"rep": rep.rep, "p": p, "closure_budget": closure_budget},
                    "certificate": cert,
                    "det_group": det_group,
                    "real_intersection": det_group.real_intersection(),
                    "is_p_group": cert.holds(),
                }));
            }
            RepCommand::Eigenvalues { rep, word } => {
                let w = FreeWord::parse(&word)?;
                let r = rep.resolve(w.max_generator().max(1))?;
                let m = r.evaluate_word(&w)?;
                let eig: Vec<Value> = m.eigenvalues().iter().map(root_json).collect();
                emit(json!({
                    "schema": 1,
                    "command": "rep eigenvalues",
                    "input": {"rep": rep.rep, "word": word},
                    "eigenvalues": eig,
                    "det": root_json(&m.det()),
                }));
            }
        },
        Command::Torsion { command } => match command {
            TorsionCommand::Boundary { seifert, rep, psi } => {
                let a = resolve_seifert(&seifert)?;
                let r = rep.resolve(a.m)?;
                let p = resolve_psi(&psi, a.m)?;
                let t = boundary_torsion(&a, &r, &p)?;
                let rank = rank_of_link(&a, &r, &p)?;
                let rechecked = recheck_torsion(&a, &r, &p, &t)?;
                emit(json!({
                    "schema": 1,
                    "command": "torsion boundary",
                    "input": {"seifert": a, "rep": rep.rep, "psi": p},
                    "torsion": torsion_json(&t),
                    "rank": rank,
                    "evaluation_recheck": rechecked,
                }));
            }
            TorsionCommand::Unlink { m, rep, psi } => {
                let r = rep.resolve(m)?;
                let p = resolve_psi(&psi, m)?;
                let t = unlink_torsion(m, &r, &p)?;
                emit(json!({
                    "schema": 1,
                    "command": "torsion unlink",
                    "input": {"m": m, "rep": rep.rep, "psi": p},
                    "torsion": torsion_json(&t),
                }));
            }
            TorsionCommand::SliceCheck {
                seifert,
                rep,
                psi,
                budget,
            } => {
                let a = resolve_seifert(&seifert)?;
                let r = rep.resolve(a.m)?;
                let p = resolve_psi(&psi, a.m)?;
                let t = boundary_torsion(&a, &r, &p)?;
                let verdict =
                    slice_consequence_check(&t, &r, &p, a.m, search_budget(budget))?;
                let (label, detail) = match &verdict {
                    SliceCheckVerdict::Member {
                        reason,
                        norm_verdict,
                    } => (
                        "MEMBER",
                        json!({"reason": reason, "norm_verdict": norm_verdict.as_ref().map(norm_verdict_json)}),
                    ),
                    SliceCheckVerdict::NotMember {
                        reason,
                        norm_verdict,
                    } => (
                        "NOT_MEMBER",
                        json!({"reason": reason, "norm_verdict": norm_verdict.as_ref().map(norm_verdict_json)}),
                    ),
                    SliceCheckVerdict::Undecided { reason, ratio } => {
                        ("UNDECIDED", json!({"reason": reason, "ratio": ratio}))
                    }
                };
                emit(json!({
                    "schema": 1,
                    "command": "torsion slice-check",
                    "input": {"seifert": a, "rep": rep.rep, "psi": p},
                    "torsion": torsion_json(&t),
                    "verdict": label,
                    "certificate": detail,
                }));
            }
        },
        Command::Alexander { command } => match command {
            AlexanderCommand::FromSeifert { knot } => {
                let (b, delta) = knot.resolve()?;
                emit(json!({
                    "schema": 1,
                    "command": "alexander from-seifert",
                    "input": {"knot": knot.knot, "seifert": b.map(|b| b.matrix)},
                    "alexander": delta,
                    "display": delta.to_string(),
                }));
            }
        },
        Command::Satellite { command } => match command {
            SatelliteCommand::Factor {
                rep,
                axis,
                knot,
                psi,
            } => {
                let w = FreeWord::parse(&axis)?;
                let r = rep.resolve(w.max_generator().max(1))?;
                let (_, delta) = knot.resolve()?;
                let p = match &psi {
                    Some(spec) => Some(resolve_psi(spec, r.generator_count())?),
                    None => None,
                };
                match satellite_factor(&r, &w, &delta, p.as_ref()) {
                    Ok(f) => {
                        let eig: Vec<Value> = f.eigenvalues.iter().map(root_json).collect();
                        emit(json!({
                            "schema": 1,
                            "command": "satellite factor",
                            "input": {"rep": rep.rep, "axis": axis, "knot": knot.knot, "alexander": delta},
                            "eigenvalues": eig,
                            "conductor": f.conductor,
                            "product": f.product,
                            "product_rational": f.product.as_rational().map(|r| slicetor_core::rat::format_rational(&r)),
                            "rank_verdict": "RANK_PRESERVED",
                        }));
                    }
                    Err(Error::RankJumps) => {
                        emit(json!({
                            "schema": 1,
                            "command": "satellite factor",
                            "input": {"rep": rep.rep, "axis": axis, "knot": knot.knot, "alexander": delta},
                            "rank_verdict": "RANK_JUMPS",
                        }));
                    }
                    Err(e) => return Err(e),
                }
            }
            SatelliteCommand::Bing {
                rep,
                knot,
                p,
                closure_budget,
                budget,
            } => {
                let r = rep.resolve(2)?;
                let (_, delta) = knot.resolve()?;
                let verdict = bing_double_obstruction(
                    &delta,
                    &r,
                    p,
                    closure_budget,
                    search_budget(budget),
                )?;
                let cert = verdict.certificate();
                let mut cert_json = json!({
                    "p_group": cert.p_group,
                    "real_units": cert.real_units,
                });
                if let Some(f) = &cert.factor {
                    let eig: Vec<Value> = f.eigenvalues.iter().map(root_json).collect();
                    cert_json["eigenvalues"] = Value::Array(eig);
                    cert_json["conductor"] = json!(f.conductor);
                    cert_json["product"] = serde_json::to_value(&f.product).unwrap();
                    cert_json["product_rational"] = json!(f
                        .product
                        .as_rational()
                        .map(|r| slicetor_core::rat::format_rational(&r)));
                }
                let mut obstruction_prime = None;
                if let Some(nv) = &cert.norm_verdict {
                    // reverify the embedded certificate before reporting
                    if let NormVerdict::Member { witness, denominator_cleared } = nv {
                        let sq = witness.hermitian_square();
                        let d: num_bigint::BigInt = denominator_cleared
                            .parse()
                            .map_err(|_| Error::Parse("bad denominator scaling".into()))?;
                        let scaled = cert
                            .factor
                            .as_ref()
                            .and_then(|f| f.product.as_rational())
                            .map(|r| r.abs() * num_rational::BigRational::from(&d * &d));
                        if scaled.map(|s| sq.as_rational() != Some(s)).unwrap_or(true) {
                            return Err(Error::CrossCheckMismatch(
                                "norm witness failed re-verification".into(),
                            ));
                        }
                    }
                    if let NormVerdict::NotMember {
                        obstruction_prime: q,
                        ..
                    } = nv
                    {
                        obstruction_prime = Some(*q);
                    }
                    cert_json["norm_verdict"] = norm_verdict_json(nv);
                }
                let reason = match &verdict {
                    BingVerdict::NotSlice { reason, .. }
                    | BingVerdict::Inconclusive { reason, .. }
                    | BingVerdict::Unsupported { reason, .. } => reason.clone(),
                };
                emit(json!({
                    "schema": 1,
                    "command": "satellite bing",
                    "input": {"rep": rep.rep, "knot": knot.knot, "p": p, "alexander": delta},
                    "verdict": verdict.label(),
                    "reason": reason,
                    "obstruction_prime": obstruction_prime,
                    "certificate": cert_json,
                }));
            }
        },
        Command::Norm { command } => match command {
            NormCommand::Test {
                value,
                real_units,
                budget,
            } => {
                let x = slicetor_core::rat::parse_rational(&value)?;
                let units = match real_units.as_str() {
                    "pm1" | "+-1" | "pm" => RealUnits::PlusMinusOne,
                    "1" | "one" => RealUnits::One,
                    other => {
                        return Err(Error::Parse(format!(
                            "real-units must be pm1 or 1, got {other}"
                        )))
                    }
                };
                let verdict = rational_norm_class(&x, units, search_budget(budget))?;
                emit(json!({
                    "schema": 1,
                    "command": "norm test",
                    "input": {"value": value, "real_units": units},
                    "verdict": norm_verdict_json(&verdict),
                    "member": verdict.is_member(),
                }));
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let report = json!({
                "schema": 1,
                "error": {"code": e.code(), "message": e.to_string()},
            });
            eprintln!("{}", serde_json::to_string_pretty(&report).unwrap());
            ExitCode::from(1)
        }
    }
}
