//! One runner per subcommand. Each turns validated parameters into a report
//! entry; schema and parse problems surface as [`JobError::Usage`].

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use equicurve_core::arith::cyclotomic::{omega_field, real_cyclotomic};
use equicurve_core::arith::rational::{format_rational, parse_rational};
use equicurve_core::arith::tower::{poly_from_strings, poly_serial, FieldTower, TowerFunc};
use equicurve_core::arith::{Field, NfElem, Poly, Rational};
use equicurve_core::brauer::{is_split_kx, ConstField};
use equicurve_core::curves::{
    all_passed, even_cyclic_curve, even_dihedral_curve, first_admissible_a, klein_construction_polys, klein_curve, Check,
    CurveError,
};
use equicurve_core::forms::{formal_image, serre_invariant, EtaleAlgebra};
use equicurve_core::projective::{
    conjugated_compression, embedding_catalog, equivariant_check, verify_relations, BinaryForm, EmbeddingInstance,
    EmbeddingSpec, GroupId, ProjectiveMap,
};
use equicurve_core::ramify::{self, RamificationCondition, RamificationSpec, RamifyError};

use crate::config::RunConfig;
use crate::report::{Entry, Status};

#[derive(Debug, Error)]
pub enum JobError {
    #[error("usage: {0}")]
    Usage(String),
}

fn usage(e: impl std::fmt::Display) -> JobError {
    JobError::Usage(e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JobKind {
    Split,
    Invariant,
    Compress,
    BuildCurve,
    Ramify,
    SmCover,
    PaperCheck,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationJob {
    pub id: String,
    pub kind: JobKind,
    #[serde(default)]
    pub params: Value,
}

/// What every runner sees: the run configuration and the `--field` tower.
#[derive(Clone, Debug, Default)]
pub struct Context {
    pub cfg: RunConfig,
    pub tower: Option<FieldTower>,
}

impl Context {
    pub fn new(cfg: RunConfig) -> Self {
        Context { cfg, tower: None }
    }

    fn constants(&self) -> Option<ConstField> {
        self.tower.as_ref().map(|t| ConstField::from_option(t.number_field()))
    }

    /// The tower with a function-field variable, adding `var` if it has none.
    fn function_tower(&self, var: &str) -> Result<FieldTower, JobError> {
        match &self.tower {
            Some(t) if t.variable().is_some() => Ok(t.clone()),
            Some(t) => FieldTower::new(t.number_field().cloned(), Some(var), None, &self.cfg.square).map_err(usage),
            None => FieldTower::new(None, Some(var), None, &self.cfg.square).map_err(usage),
        }
    }
}

fn params<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T, JobError> {
    let v = if v.is_null() { Value::Object(Default::default()) } else { v.clone() };
    serde_json::from_value(v).map_err(|e| usage(format!("bad parameters: {e}")))
}

fn check_lines(checks: &[Check]) -> Vec<String> {
    checks.iter().map(|c| format!("{} {} {}", c.name, if c.passed { "PASS" } else { "FAIL" }, c.detail)).collect()
}

/// A coefficient list (lowest degree first) or an expression in `x`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyParam {
    Coeffs(Vec<String>),
    Expr(String),
}

impl PolyParam {
    pub fn to_poly(&self, cfg: &RunConfig) -> Result<Poly<Rational>, JobError> {
        match self {
            PolyParam::Coeffs(c) => poly_from_strings(c).map_err(usage),
            PolyParam::Expr(s) => {
                let t = FieldTower::new(None, Some("x"), None, &cfg.square).map_err(usage)?;
                let p = t.parse_poly(s).map_err(usage)?;
                p.to_rational_poly().ok_or_else(|| usage(format!("{s:?} has irrational coefficients")))
            }
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitParams {
    pub f: String,
    pub g: String,
}

/// Decides `(f, g)` over `K(x)`; the proof object is returned alongside.
pub fn split(ctx: &Context, p: &SplitParams) -> Result<(Entry, Value), JobError> {
    let tower = ctx.function_tower("x")?;
    let var = tower.variable().expect("function tower").to_string();
    let k = ConstField::from_option(tower.number_field());
    let f = tower.parse_poly(&p.f).map_err(usage)?;
    let g = tower.parse_poly(&p.g).map_err(usage)?;
    let d = match is_split_kx(&k, &f, &g, &ctx.cfg.square) {
        Ok(d) => d,
        Err(e) => return Ok((Entry::new("split", Status::Fail, vec![format!("ERROR {e}")]), Value::Null)),
    };
    let status = match d.is_split() {
        Some(true) => Status::Pass,
        Some(false) => Status::Fail,
        None => Status::Inconclusive,
    };
    let verified = d.verify(&k, &[(f, g)], &ctx.cfg.square);
    let mut lines = vec![d.line(&var)];
    lines.push(format!("PROOF {}", if verified { "verified" } else { "unverified" }));
    let status = if verified || status == Status::Inconclusive { status } else { Status::Inconclusive };
    Ok((Entry::new("split", status, lines), d.to_json(&var)))
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EtaleParams {
    /// Coefficients of the defining polynomial in `Y`, lowest first, each an
    /// element of `K(t)`.
    pub coefficients: Vec<String>,
}

pub fn invariant(ctx: &Context, p: &EtaleParams) -> Result<Entry, JobError> {
    let tower = ctx.function_tower("t")?;
    let var = tower.variable().expect("function tower").to_string();
    let c: Vec<TowerFunc> = p.coefficients.iter().map(|s| tower.parse_function(s)).collect::<Result<_, _>>().map_err(usage)?;
    let e = EtaleAlgebra::new(Poly::from_coeffs(c)).map_err(usage)?;
    let s = match serre_invariant(&e) {
        Ok(s) => s,
        Err(e) => return Ok(Entry::new("invariant", Status::Fail, vec![format!("ERROR {e}")])),
    };
    let show = |v: &[(TowerFunc, TowerFunc)]| -> String {
        if v.is_empty() {
            return "0".into();
        }
        v.iter().map(|(a, b)| format!("({}, {})", a.to_string_var(&var), b.to_string_var(&var))).collect::<Vec<_>>().join(" + ")
    };
    let diag: Vec<String> = s.form.diagonal.iter().map(|a| a.to_string_var(&var)).collect();
    let mut lines = vec![
        format!("FORM <{}>", diag.join(", ")),
        format!("DISC {}", s.disc.to_string_var(&var)),
        format!("W2 {}", show(&s.w2)),
        format!("SERRE {}", show(&s.serre)),
    ];
    if let (Ok(w), Ok(d)) = (formal_image(&s.w2, &var), formal_image(&s.serre, &var)) {
        lines.push(format!("W2-CLASS {w}"));
        lines.push(format!("SERRE-CLASS {d}"));
    }
    Ok(Entry::new("invariant", Status::Pass, lines))
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompressParams {
    /// `cyclic`, `dihedral`, `klein`, `a4`, `s4`, `a5`, or `dihedral:<n>` style ids.
    pub group: String,
    #[serde(default)]
    pub n: Option<u32>,
    #[serde(default)]
    pub verify_only: bool,
}

fn forms_from(c0: &[(usize, i64)], c1: &[(usize, i64)], deg: usize) -> ProjectiveMap<NfElem> {
    let dense = |c: &[(usize, i64)]| {
        let mut v = vec![0i64; deg + 1];
        for (i, a) in c {
            v[*i] = *a;
        }
        BinaryForm::from_i64s(&v)
    };
    ProjectiveMap::new(dense(c0), dense(c1)).expect("nonzero forms")
}

/// `(7x^4y^3 + y^7 : -x^7 - 7x^3y^4)`, coefficients indexed by the power of `x`.
pub fn octahedral_map() -> ProjectiveMap<NfElem> {
    forms_from(&[(0, 1), (4, 7)], &[(3, -7), (7, -1)], 7)
}

/// `(x^11 + 66x^6y^5 - 11xy^10 : -11x^10y - 66x^5y^6 + y^11)`.
pub fn icosahedral_map() -> ProjectiveMap<NfElem> {
    forms_from(&[(11, 1), (6, 66), (1, -11)], &[(10, -11), (5, -66), (0, 1)], 11)
}

fn real_field(n: u32) -> ConstField {
    ConstField::from_option(real_cyclotomic(n as usize).field.as_ref())
}

fn omega_const_field(n: usize) -> ConstField {
    ConstField::number_field(&omega_field(n).0)
}

/// The map and embedding that `compress` reports on for a group.
pub fn compression_for(
    group: GroupId,
    k: Option<ConstField>,
    cfg: &RunConfig,
) -> Result<(ProjectiveMap<NfElem>, EmbeddingInstance), String> {
    let sq = &cfg.square;
    let e = |spec: EmbeddingSpec, default: ConstField| embedding_catalog(&spec, k.as_ref().unwrap_or(&default), sq);
    Ok(match group {
        GroupId::Dihedral(n) => {
            let c = conjugated_compression(n, k.as_ref().unwrap_or(&real_field(n)), sq).map_err(|e| e.to_string())?;
            (c.map, c.embedding)
        }
        GroupId::Cyclic(n) => {
            let emb = e(EmbeddingSpec::DiagonalCyclic { n }, omega_const_field(n as usize)).map_err(|e| e.to_string())?;
            (ProjectiveMap::power_map(n as usize + 1), emb)
        }
        GroupId::Klein => {
            let emb = e(EmbeddingSpec::Klein { a: NfElem::one(), b: NfElem::one() }, ConstField::rationals()).map_err(|e| e.to_string())?;
            (ProjectiveMap::power_map(3), emb)
        }
        GroupId::A4 => (octahedral_map(), e(EmbeddingSpec::A4, omega_const_field(4)).map_err(|e| e.to_string())?),
        GroupId::S4 => (octahedral_map(), e(EmbeddingSpec::S4, omega_const_field(4)).map_err(|e| e.to_string())?),
        GroupId::A5 => (icosahedral_map(), e(EmbeddingSpec::A5, omega_const_field(5)).map_err(|e| e.to_string())?),
    })
}

fn parse_group(p: &CompressParams) -> Result<GroupId, JobError> {
    let id = match (p.group.contains(':'), p.n) {
        (false, Some(n)) if matches!(p.group.as_str(), "cyclic" | "dihedral") => format!("{}:{n}", p.group),
        (false, None) if matches!(p.group.as_str(), "cyclic" | "dihedral") => {
            return Err(usage(format!("group {} needs --n", p.group)))
        }
        _ => p.group.clone(),
    };
    GroupId::parse(&id).map_err(usage)
}

pub fn compress(ctx: &Context, p: &CompressParams) -> Result<Entry, JobError> {
    let group = parse_group(p)?;
    let (map, emb) = match compression_for(group, ctx.constants(), &ctx.cfg) {
        Ok(x) => x,
        Err(e) => return Ok(Entry::new("compress", Status::Fail, vec![format!("ERROR {e}")])),
    };
    let rel = verify_relations(&emb);
    let eq = equivariant_check(&map, &emb);
    let mut lines = Vec::new();
    if !p.verify_only {
        let (f0, f1) = map.forms();
        let show = |f: &BinaryForm<NfElem>| format!("[{}]", f.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
        lines.push(format!("EMBEDDING {} over {}", emb.label, emb.field.name()));
        lines.push(format!("F0 {}", show(f0)));
        lines.push(format!("F1 {}", show(f1)));
        lines.push(format!(
            "RELATIONS {} ORDER {}",
            rel.failing.clone().unwrap_or_else(|| "ok".into()),
            rel.order.map_or("?".into(), |o| o.to_string())
        ));
    }
    lines.push(format!("EQUIVARIANT {} DEGREE {}", if eq { "yes" } else { "no" }, map.degree()));
    Ok(Entry::new("compress", Status::from_bool(eq && rel.passed()), lines))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurveKind {
    EvenCyclic,
    Klein,
    EvenDihedral,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveParams {
    #[serde(default)]
    pub n: Option<u32>,
    /// Rational constant for the cyclic construction; searched when absent.
    #[serde(default)]
    pub a: Option<String>,
    /// Minimal polynomial of the non-square `xi`.
    #[serde(default)]
    pub h: Option<PolyParam>,
}

fn curve_failure(e: CurveError) -> Entry {
    let status = if matches!(e, CurveError::Inconclusive(_)) { Status::Inconclusive } else { Status::Fail };
    Entry::new("build-curve", status, vec![format!("ERROR {e}")])
}

pub fn build_curve(ctx: &Context, kind: CurveKind, p: &CurveParams) -> Result<Entry, JobError> {
    let sq = &ctx.cfg.square;
    let need_n = || p.n.ok_or_else(|| usage("parameter n is required"));
    let need_h = || p.h.as_ref().ok_or_else(|| usage("parameter h is required"))?.to_poly(&ctx.cfg);
    match kind {
        CurveKind::EvenCyclic => {
            let n = need_n()?;
            let k = ctx.constants().unwrap_or_else(|| real_field(n));
            let r = match &p.a {
                Some(a) => {
                    let a = match &ctx.tower {
                        Some(t) => t.parse_constant(a).map_err(usage)?,
                        None => NfElem::from_rational(&parse_rational(a).map_err(usage)?),
                    };
                    even_cyclic_curve(n, &a, &k, sq)
                }
                None => first_admissible_a(n, &k, sq),
            };
            let c = match r {
                Ok(c) => c,
                Err(e) => return Ok(curve_failure(e)),
            };
            let mut lines = vec![format!("CURVE {}", c.model.equation()), format!("PARAM a = {}", c.a)];
            if let Ok(g) = c.model.genus() {
                lines.push(format!("GENUS {g}"));
            }
            lines.extend(c.model.action.iter().map(|m| format!("ACTION {}", m.describe())));
            lines.extend(check_lines(&c.checks));
            Ok(Entry::new("build-curve", Status::from_bool(all_passed(&c.checks)), lines))
        }
        CurveKind::Klein => {
            let h = need_h()?;
            let r = klein_construction_polys(&h, sq).and_then(|kp| Ok((klein_curve(&kp.p, &kp.q, sq)?, kp)));
            let (c, kp) = match r {
                Ok(x) => x,
                Err(e) => return Ok(curve_failure(e)),
            };
            let [e1, e2] = c.equations();
            let mut lines = vec![
                format!("POLY P {}", poly_serial(&kp.p)),
                format!("POLY Q {}", poly_serial(&kp.q)),
                format!("CURVE {e1}"),
                format!("CURVE {e2}"),
                "ACTION e1: (x, y, z) -> (x, -y, z)".into(),
                "ACTION e2: (x, y, z) -> (x, y, -z)".into(),
            ];
            lines.extend(c.chart.describe().into_iter().map(|g| format!("CHART {g}")));
            let mut checks = kp.checks.clone();
            checks.extend(c.checks.iter().cloned());
            lines.extend(check_lines(&checks));
            Ok(Entry::new("build-curve", Status::from_bool(all_passed(&checks)), lines))
        }
        CurveKind::EvenDihedral => {
            let n = need_n()?;
            let h = need_h()?;
            let k = ctx.constants().unwrap_or_else(|| omega_const_field(n as usize));
            let c = match even_dihedral_curve(n, &k, &h, sq) {
                Ok(c) => c,
                Err(e) => return Ok(curve_failure(e)),
            };
            let mut lines = vec![
                format!("CURVE {}", c.model.equation()),
                format!("POLY f {}", poly_serial(&c.f)),
                format!("POLY T {}", poly_serial(&c.chebyshev)),
            ];
            lines.extend(c.model.action.iter().map(|m| format!("ACTION {}", m.describe())));
            lines.push(format!("BRAUER {}", c.delta_eta));
            lines.extend(check_lines(&c.checks));
            Ok(Entry::new("build-curve", Status::from_bool(all_passed(&c.checks)), lines))
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchParam {
    pub beta: String,
    pub parts: Vec<u32>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RamifyParams {
    pub conditions: Vec<BranchParam>,
    #[serde(default)]
    pub degree: Option<usize>,
}

fn pattern_string(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn ramify_failure(id: &str, e: RamifyError) -> Result<Entry, JobError> {
    match e {
        RamifyError::Invalid(_) => Err(usage(e)),
        e => Ok(Entry::new(id, Status::Fail, vec![format!("ERROR {e}")])),
    }
}

pub fn ramify(_ctx: &Context, p: &RamifyParams) -> Result<Entry, JobError> {
    let mut entries = Vec::new();
    for b in &p.conditions {
        let beta = parse_rational(&b.beta).map_err(usage)?;
        entries.push((RamificationCondition::new(b.parts.clone()).map_err(usage)?, beta));
    }
    let spec = RamificationSpec::new(entries, p.degree).map_err(usage)?;
    let r = match ramify::build_ramified_poly(&spec) {
        Ok(r) => r,
        Err(e) => return ramify_failure("ramify", e),
    };
    let mut lines = vec![format!("POLY P {}", poly_serial(&r.p)), format!("PARAM c = {}", format_rational(&r.c))];
    for ((_, beta), pts) in spec.entries.iter().zip(&r.base_points) {
        let shifted = &r.p - &Poly::constant(beta.clone());
        lines.push(format!("BRANCH {} PATTERN {}", format_rational(beta), pattern_string(&ramify::multiplicity_pattern(&shifted))));
        let shown: Vec<String> = pts.iter().map(format_rational).collect();
        lines.push(format!("BASE {} AT {}", format_rational(beta), shown.join(",")));
    }
    Ok(Entry::new("ramify", Status::Pass, lines))
}

pub fn sm_cover(_ctx: &Context, m: u32) -> Result<Entry, JobError> {
    if m < 2 {
        return Err(usage(format!("m = {m} must be at least 2")));
    }
    let r = match ramify::sm_cover(m) {
        Ok(r) => r,
        Err(e) => return ramify_failure("sm-cover", e),
    };
    let mut lines = vec![format!("DEGREE {}", r.p), format!("POLY P {}", poly_serial(&r.poly.p))];
    for b in &r.branches {
        lines.push(format!(
            "BRANCH {} PATTERN {} PARTITION {} {}",
            format_rational(&b.beta),
            pattern_string(&b.pattern),
            pattern_string(&b.partition),
            if b.matches { "match" } else { "MISMATCH" }
        ));
    }
    lines.push(format!("TRANSPOSITION {}", if r.transposition_present { "present" } else { "absent" }));
    lines.extend(r.notes.iter().map(|n| format!("NOTE {n}")));
    Ok(Entry::new("sm-cover", Status::from_bool(r.passed()), lines))
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveJobParams {
    kind: CurveKind,
    #[serde(default)]
    n: Option<u32>,
    #[serde(default)]
    a: Option<String>,
    #[serde(default)]
    h: Option<PolyParam>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SmCoverParams {
    m: u32,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SuiteParams {
    check: String,
}

/// Runs a job and stamps its id and wall time on the entry.
pub fn run_job(ctx: &Context, job: &VerificationJob) -> Result<Entry, JobError> {
    let start = Instant::now();
    let mut entry = match job.kind {
        JobKind::Split => split(ctx, &params(&job.params)?)?.0,
        JobKind::Invariant => invariant(ctx, &params(&job.params)?)?,
        JobKind::Compress => compress(ctx, &params(&job.params)?)?,
        JobKind::BuildCurve => {
            let p: CurveJobParams = params(&job.params)?;
            let rest = CurveParams { n: p.n, a: p.a, h: p.h };
            build_curve(ctx, p.kind, &rest)?
        }
        JobKind::Ramify => ramify(ctx, &params(&job.params)?)?,
        JobKind::SmCover => sm_cover(ctx, params::<SmCoverParams>(&job.params)?.m)?,
        JobKind::PaperCheck => {
            let p: SuiteParams = params(&job.params)?;
            crate::suite::run_check(&p.check, &ctx.cfg).ok_or_else(|| usage(format!("unknown suite check {:?}", p.check)))?
        }
    };
    entry.id = job.id.clone();
    entry.wall_ms = start.elapsed().as_millis() as u64;
    Ok(entry)
}

/// Runs jobs on up to `ctx.cfg.jobs` threads; entries come back in
/// submission order. Ids must be unique.
pub fn run_jobs(ctx: &Context, jobs: &[VerificationJob]) -> Result<Vec<Entry>, JobError> {
    for (i, j) in jobs.iter().enumerate() {
        if jobs[..i].iter().any(|o| o.id == j.id) {
            return Err(usage(format!("job id {:?} repeated", j.id)));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(ctx.cfg.jobs.max(1)).build().map_err(usage)?;
    pool.install(|| {
        use rayon::prelude::*;
        jobs.par_iter().map(|j| run_job(ctx, j)).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Context {
        Context::new(RunConfig::default())
    }

    #[test]
    fn split_job_for_the_octahedral_symbol() {
        let (e, proof) = split(&ctx(), &SplitParams { f: "-3*x".into(), g: "x*(x+27)".into() }).unwrap_or_else(|e| panic!("{e}"));
        // the default variable is x
        assert_eq!(e.status, Status::Pass);
        assert_eq!(e.detail[0], "SPLIT CERT 3 1 x");
        assert_eq!(proof["decision"], "split");
    }

    #[test]
    fn cyclic_curve_job() {
        let job = VerificationJob {
            id: "c".into(),
            kind: JobKind::BuildCurve,
            params: serde_json::json!({"kind": "even-cyclic", "n": 4, "a": "1"}),
        };
        let e = run_job(&ctx(), &job).unwrap();
        assert_eq!(e.status, Status::Pass, "{:#?}", e.detail);
        assert!(e.detail.contains(&"CURVE y^2 = x^5 - x".to_string()));
    }

    #[test]
    fn schema_violations_are_usage_errors() {
        let bad = VerificationJob { id: "x".into(), kind: JobKind::SmCover, params: serde_json::json!({"m": 3, "extra": 1}) };
        assert!(matches!(run_job(&ctx(), &bad), Err(JobError::Usage(_))));
        let p = CompressParams { group: "dihedral".into(), n: None, verify_only: false };
        assert!(compress(&ctx(), &p).is_err());
        let dup = VerificationJob { id: "x".into(), kind: JobKind::SmCover, params: serde_json::json!({"m": 2}) };
        assert!(run_jobs(&ctx(), &[dup.clone(), dup]).is_err());
    }

    #[test]
    fn compress_reports_degree() {
        let p = CompressParams { group: "dihedral".into(), n: Some(4), verify_only: true };
        let e = compress(&ctx(), &p).unwrap();
        assert_eq!(e.detail, vec!["EQUIVARIANT yes DEGREE 5".to_string()]);
        let p = CompressParams { group: "klein".into(), n: None, verify_only: true };
        assert_eq!(compress(&ctx(), &p).unwrap().status, Status::Pass);
    }

    #[test]
    fn ramify_job_prints_branch_patterns() {
        let p = RamifyParams { conditions: vec![BranchParam { beta: "0".into(), parts: vec![2] }], degree: None };
        let e = ramify(&ctx(), &p).unwrap();
        assert!(e.detail.contains(&"POLY P [0,0,1,1]".to_string()), "{:?}", e.detail);
        assert!(e.detail.contains(&"BRANCH 0 PATTERN 2,1".to_string()));
        let bad = RamifyParams { conditions: vec![BranchParam { beta: "0".into(), parts: vec![1] }], degree: None };
        assert!(ramify(&ctx(), &bad).is_err());
    }
}
