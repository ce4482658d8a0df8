//! Declarative registry of two-sided inequalities between Bessel functions,
//! their integrals and the Struve–Bessel combinations.
//!
//! Every case is stored oriented as `lhs < rhs` (or `≤` for non-strict
//! cases), so a single margin convention serves them all:
//! `margin = rhs − lhs`, `rel_margin = margin / max(|lhs|, |rhs|)`.
//!
//! Parameters are `{nu, beta, n, x}`. `beta` is always the drift in the
//! weight e^{βt}; an inequality written with e^{−γt}, γ > 0, is registered
//! with `beta = −γ`.

mod cases;
mod stein;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integrals::{i_nu_beta, int_lower_i, int_upper_k};
use crate::scaled::ScaledReal;
use crate::sharp::{estimate_a, estimate_b};

pub use stein::{stein_expression, uniform_bound, SteinExpression, SteinId};

/// Default tolerance for strict and non-strict cases: a record is a
/// violation when `rel_margin < −tol`.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Two-sided tolerance for records inside a case's equality set.
pub const EQUALITY_TOL: f64 = 1e-8;
/// Largest x accepted by [`eval_case`].
pub const CASE_X_MAX: f64 = 1e3;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Params {
    pub nu: f64,
    /// Drift in e^{βt}.
    pub beta: f64,
    /// Order shift.
    pub n: f64,
    pub x: f64,
}

impl Params {
    pub fn new(nu: f64, beta: f64, n: f64, x: f64) -> Self {
        Params { nu, beta, n, x }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strictness {
    Strict,
    NonStrict,
}

/// Which parameters a case depends on (ν always).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Uses {
    pub beta: bool,
    pub n: bool,
    pub x: bool,
}

/// Limits in which a case is claimed to be tight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Limit {
    XTo0,
    XToInf,
    NuToInf,
}

impl Limit {
    pub fn as_str(self) -> &'static str {
        match self {
            Limit::XTo0 => "x_to_0",
            Limit::XToInf => "x_to_inf",
            Limit::NuToInf => "nu_to_inf",
        }
    }

    /// The refinement sequence used by [`sharpness_probe`].
    pub fn sequence(self) -> [f64; 4] {
        match self {
            Limit::XTo0 => [1e-1, 1e-2, 1e-3, 1e-4],
            Limit::XToInf => [10.0, 20.0, 50.0, 100.0],
            Limit::NuToInf => [5.0, 10.0, 20.0, 40.0],
        }
    }
}

impl std::str::FromStr for Limit {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x_to_0" => Ok(Limit::XTo0),
            "x_to_inf" => Ok(Limit::XToInf),
            "nu_to_inf" => Ok(Limit::NuToInf),
            _ => Err(Error::OutOfDomain(format!("unknown limit `{s}`"))),
        }
    }
}

type EvalFn = fn(&mut Ctx, &Params) -> Result<(ScaledReal, ScaledReal)>;
type PredFn = fn(&Params) -> bool;

/// One registered inequality `lhs < rhs` (or `≤`).
#[derive(Clone, Copy)]
pub struct InequalityCase {
    pub id: &'static str,
    /// The inequality, oriented lhs < rhs.
    pub statement: &'static str,
    /// Hypotheses on the parameters.
    pub hypotheses: &'static str,
    pub strictness: Strictness,
    /// Where equality holds, if anywhere.
    pub equality_set: Option<&'static str>,
    pub uses: Uses,
    pub sharp: &'static [Limit],
    domain: PredFn,
    equality: PredFn,
    eval: EvalFn,
    inverted: bool,
}

impl std::fmt::Debug for InequalityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("InequalityCase")
            .field("id", &self.name())
            .field("statement", &self.statement)
            .field("hypotheses", &self.hypotheses)
            .finish()
    }
}

impl InequalityCase {
    /// The id, with an `.inverted` suffix for harness self-test copies.
    pub fn name(&self) -> String {
        if self.inverted {
            format!("{}.inverted", self.id)
        } else {
            self.id.to_string()
        }
    }

    /// Whether `p` satisfies the case's hypotheses.
    pub fn in_domain(&self, p: &Params) -> bool {
        p.nu.is_finite()
            && p.beta.is_finite()
            && p.n.is_finite()
            && (!self.uses.x || (p.x > 0.0 && p.x <= CASE_X_MAX))
            && (self.domain)(p)
    }

    /// Whether `p` lies in the equality set.
    pub fn in_equality_set(&self, p: &Params) -> bool {
        self.equality_set.is_some() && (self.equality)(p)
    }

    /// Zeroes the parameters the case does not depend on.
    pub fn canonical(&self, p: &Params) -> Params {
        Params {
            nu: p.nu,
            beta: if self.uses.beta { p.beta } else { 0.0 },
            n: if self.uses.n { p.n } else { 0.0 },
            x: if self.uses.x { p.x } else { 0.0 },
        }
    }

    /// A copy with both sides swapped, so that every point is a violation.
    /// Used to test the verification harness itself.
    pub fn inverted(mut self) -> Self {
        self.inverted = !self.inverted;
        self
    }

    fn sides(&self, ctx: &mut Ctx, p: &Params) -> Result<(ScaledReal, ScaledReal)> {
        let (l, r) = (self.eval)(ctx, p)?;
        Ok(if self.inverted { (r, l) } else { (l, r) })
    }
}

/// One evaluated instance of a case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarginRecord {
    pub id: String,
    pub nu: f64,
    pub beta: f64,
    pub n: f64,
    pub x: f64,
    /// Sides as f64; they saturate to ±inf beyond the f64 range, while
    /// `rel_margin` is always computed in extended range.
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub rel_margin: f64,
    pub in_equality_set: bool,
}

impl MarginRecord {
    fn new(case: &InequalityCase, p: &Params, lhs: ScaledReal, rhs: ScaledReal) -> Self {
        let margin = rhs - lhs;
        let denom = if lhs.abs() >= rhs.abs() { lhs.abs() } else { rhs.abs() };
        let rel_margin = if denom.is_zero() { 0.0 } else { (margin / denom).to_f64() };
        MarginRecord {
            id: case.name(),
            nu: p.nu,
            beta: p.beta,
            n: p.n,
            x: p.x,
            lhs: lhs.to_f64(),
            rhs: rhs.to_f64(),
            margin: margin.to_f64(),
            rel_margin,
            in_equality_set: case.in_equality_set(p),
        }
    }

    pub fn params(&self) -> Params {
        Params::new(self.nu, self.beta, self.n, self.x)
    }
}

/// Per-point memo of quadrature results, shared by all cases evaluated at
/// the same parameters.
#[derive(Default)]
pub(crate) struct Ctx {
    cache: HashMap<(u8, [u64; 4]), ScaledReal>,
}

impl Ctx {
    /// ∫₀ˣ e^{βt} t^p I_order(t) dt
    pub(crate) fn lower(&mut self, order: f64, beta: f64, p: f64, x: f64) -> Result<ScaledReal> {
        let key = (0, [order.to_bits(), beta.to_bits(), p.to_bits(), x.to_bits()]);
        if let Some(v) = self.cache.get(&key) {
            return Ok(*v);
        }
        let v = int_lower_i(order, beta, p, x)?.value;
        self.cache.insert(key, v);
        Ok(v)
    }

    /// ∫ₓ^∞ e^{βt} t^p K_order(t) dt
    pub(crate) fn upper(&mut self, order: f64, beta: f64, p: f64, x: f64) -> Result<ScaledReal> {
        let key = (1, [order.to_bits(), beta.to_bits(), p.to_bits(), x.to_bits()]);
        if let Some(v) = self.cache.get(&key) {
            return Ok(*v);
        }
        let v = int_upper_k(order, beta, p, x)?.value;
        self.cache.insert(key, v);
        Ok(v)
    }
}

type ConstCache = Mutex<HashMap<(u64, u64), f64>>;

fn cached(cache: &'static OnceLock<ConstCache>, key: (u64, u64), f: impl FnOnce() -> Result<f64>) -> Result<f64> {
    let m = cache.get_or_init(Default::default);
    if let Some(v) = m.lock().expect("cache lock").get(&key) {
        return Ok(*v);
    }
    // computed outside the lock; concurrent duplicates produce identical values
    let v = f()?;
    m.lock().expect("cache lock").insert(key, v);
    Ok(v)
}

/// I_{ν,β}, memoised across threads.
pub(crate) fn inb(nu: f64, beta: f64) -> Result<ScaledReal> {
    static C: OnceLock<ConstCache> = OnceLock::new();
    cached(&C, (nu.to_bits(), beta.to_bits()), || Ok(i_nu_beta(nu, beta)?.to_f64())).map(ScaledReal::from_f64)
}

/// Lower end of the a_ν bracket, memoised.
pub(crate) fn a_lo(nu: f64) -> Result<f64> {
    static C: OnceLock<ConstCache> = OnceLock::new();
    cached(&C, (nu.to_bits(), 0), || Ok(estimate_a(nu)?.bracket[0]))
}

/// Upper end of the a_ν bracket, memoised.
pub(crate) fn a_hi(nu: f64) -> Result<f64> {
    static C: OnceLock<ConstCache> = OnceLock::new();
    cached(&C, (nu.to_bits(), 1), || Ok(estimate_a(nu)?.bracket[1]))
}

/// Lower end of the b_ν bracket, memoised.
pub(crate) fn b_lo(nu: f64) -> Result<f64> {
    static C: OnceLock<ConstCache> = OnceLock::new();
    cached(&C, (nu.to_bits(), 0), || Ok(estimate_b(nu)?.bracket[0]))
}

/// All registered cases, in a fixed order.
pub fn list_cases() -> Vec<InequalityCase> {
    cases::CASES.to_vec()
}

/// Looks a case up by id.
pub fn find_case(id: &str) -> Result<InequalityCase> {
    cases::CASES.iter().find(|c| c.id == id).copied().ok_or_else(|| Error::UnknownCase(id.to_string()))
}

fn eval_with(case: &InequalityCase, ctx: &mut Ctx, p: &Params) -> Result<MarginRecord> {
    let p = case.canonical(p);
    if !case.in_domain(&p) {
        return Err(Error::OutOfDomain(format!(
            "{} requires {} (got nu={}, beta={}, n={}, x={})",
            case.id, case.hypotheses, p.nu, p.beta, p.n, p.x
        )));
    }
    let (l, r) = case.sides(ctx, &p)?;
    Ok(MarginRecord::new(case, &p, l, r))
}

/// Evaluates one case at `p`. Parameters the case does not use are ignored
/// and recorded as 0.
pub fn eval_case(id: &str, p: &Params) -> Result<MarginRecord> {
    let case = find_case(id)?;
    eval_with(&case, &mut Ctx::default(), p)
}

/// Evaluates a (possibly inverted) case value at `p`.
pub fn eval_case_def(case: &InequalityCase, p: &Params) -> Result<MarginRecord> {
    eval_with(case, &mut Ctx::default(), p)
}

/// Explicit parameter lists; the grid is their Cartesian product.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub nu: Vec<f64>,
    pub beta: Vec<f64>,
    pub n: Vec<f64>,
    pub x: Vec<f64>,
}

impl Default for GridSpec {
    /// ν ∈ {−0.45, −0.25, 0, 0.5, 1, 2.5, 5, 10}, β ∈ {−0.9, −0.5, 0, 0.5, 0.9},
    /// n ∈ {−0.5, 0, 1}, and 25 log-spaced x in [1e-3, 100].
    fn default() -> Self {
        GridSpec {
            nu: vec![-0.45, -0.25, 0.0, 0.5, 1.0, 2.5, 5.0, 10.0],
            beta: vec![-0.9, -0.5, 0.0, 0.5, 0.9],
            n: vec![-0.5, 0.0, 1.0],
            x: log_space(1e-3, 100.0, 25),
        }
    }
}

/// `count` points log-spaced from `a` to `b` inclusive.
pub fn log_space(a: f64, b: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![a];
    }
    let (la, lb) = (a.log10(), b.log10());
    (0..count).map(|i| 10f64.powf(la + (lb - la) * i as f64 / (count - 1) as f64)).collect()
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.nu.is_empty() || self.beta.is_empty() || self.n.is_empty() || self.x.is_empty() {
            return Err(Error::OutOfDomain("grid lists must be nonempty".into()));
        }
        let all = self.nu.iter().chain(&self.beta).chain(&self.n).chain(&self.x);
        if all.clone().any(|v| !v.is_finite()) {
            return Err(Error::OutOfDomain("grid values must be finite".into()));
        }
        if self.x.iter().any(|&x| !(x > 0.0 && x <= CASE_X_MAX)) {
            return Err(Error::OutOfDomain(format!("grid x values must lie in (0, {CASE_X_MAX}]")));
        }
        Ok(())
    }

    /// In-domain canonical points of `case`, without duplicates.
    pub fn points_for(&self, case: &InequalityCase) -> Vec<Params> {
        let one = [0.0];
        let betas: &[f64] = if case.uses.beta { &self.beta } else { &one };
        let ns: &[f64] = if case.uses.n { &self.n } else { &one };
        let xs: &[f64] = if case.uses.x { &self.x } else { &one };
        let mut out = Vec::new();
        for &nu in &self.nu {
            for &beta in betas {
                for &n in ns {
                    for &x in xs {
                        let p = Params::new(nu, beta, n, if case.uses.x { x } else { 0.0 });
                        if case.in_domain(&p) && !out.contains(&p) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }
}

/// A case evaluation that failed (e.g. a quadrature did not converge).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalFailure {
    pub id: String,
    pub params: Params,
    pub message: String,
}

/// Outcome of a grid verification.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub tol: f64,
    /// All records, sorted by id then parameters.
    pub records: Vec<MarginRecord>,
    /// Records with `rel_margin < −tol`.
    pub violations: Vec<MarginRecord>,
    /// Equality-set records with `|rel_margin| > EQUALITY_TOL`.
    pub equality_breaks: Vec<MarginRecord>,
    pub failures: Vec<EvalFailure>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.equality_breaks.is_empty() && self.failures.is_empty()
    }
}

fn key_of(p: &Params) -> [u64; 4] {
    [p.nu.to_bits(), p.beta.to_bits(), p.n.to_bits(), p.x.to_bits()]
}

/// Evaluates `cases` at every in-domain grid point.
///
/// Points are evaluated independently (in parallel with the `parallel`
/// feature); cases sharing a point share quadrature results. The report is
/// sorted by id, then (ν, β, n, x), whatever the evaluation order.
pub fn verify_cases(cases: &[InequalityCase], grid: &GridSpec, tol: f64) -> Result<VerifyReport> {
    grid.validate()?;
    if !(tol > 0.0) {
        return Err(Error::OutOfDomain(format!("tolerance must be positive, got {tol}")));
    }
    let mut by_point: BTreeMap<[u64; 4], (Params, Vec<usize>)> = BTreeMap::new();
    for (ci, case) in cases.iter().enumerate() {
        for p in grid.points_for(case) {
            by_point.entry(key_of(&p)).or_insert((p, Vec::new())).1.push(ci);
        }
    }
    let jobs: Vec<(Params, Vec<usize>)> = by_point.into_values().collect();
    let results = crate::par_map(&jobs, |(p, idx)| {
        let mut ctx = Ctx::default();
        idx.iter()
            .map(|&ci| {
                let case = &cases[ci];
                case.sides(&mut ctx, p).map(|(l, r)| MarginRecord::new(case, p, l, r)).map_err(|e| EvalFailure {
                    id: case.name(),
                    params: *p,
                    message: e.to_string(),
                })
            })
            .collect::<Vec<_>>()
    });
    let mut records = Vec::new();
    let mut failures = Vec::new();
    for r in results.into_iter().flatten() {
        match r {
            Ok(m) => records.push(m),
            Err(f) => failures.push(f),
        }
    }
    let order = |a: &Params, b: &Params| {
        a.nu.total_cmp(&b.nu).then(a.beta.total_cmp(&b.beta)).then(a.n.total_cmp(&b.n)).then(a.x.total_cmp(&b.x))
    };
    records.sort_by(|a, b| a.id.cmp(&b.id).then_with(|| order(&a.params(), &b.params())));
    failures.sort_by(|a, b| a.id.cmp(&b.id).then_with(|| order(&a.params, &b.params)));
    let violations = records.iter().filter(|r| r.rel_margin < -tol).cloned().collect();
    let equality_breaks =
        records.iter().filter(|r| r.in_equality_set && r.rel_margin.abs() > EQUALITY_TOL).cloned().collect();
    Ok(VerifyReport { tol, records, violations, equality_breaks, failures })
}

/// [`verify_cases`] over every registered case.
pub fn verify_suite(grid: &GridSpec, tol: f64) -> Result<VerifyReport> {
    verify_cases(&list_cases(), grid, tol)
}

/// One step of a sharpness probe.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbePoint {
    /// The refined parameter (x or ν).
    pub at: f64,
    /// lhs / rhs.
    pub ratio: f64,
}

/// lhs/rhs along the refinement sequence of `limit`, other parameters taken
/// from `base`. Only (case, limit) pairs with a registered tightness claim
/// are accepted.
pub fn sharpness_probe(id: &str, limit: Limit, base: &Params) -> Result<Vec<ProbePoint>> {
    let case = find_case(id)?;
    if !case.sharp.contains(&limit) {
        return Err(Error::NoSharpnessClaim { id: id.to_string(), limit: limit.as_str().to_string() });
    }
    limit
        .sequence()
        .iter()
        .map(|&v| {
            let mut p = *base;
            match limit {
                Limit::XTo0 | Limit::XToInf => p.x = v,
                Limit::NuToInf => p.nu = v,
            }
            let p = case.canonical(&p);
            if !case.in_domain(&p) {
                return Err(Error::OutOfDomain(format!("{id} requires {}", case.hypotheses)));
            }
            let (l, r) = case.sides(&mut Ctx::default(), &p)?;
            Ok(ProbePoint { at: v, ratio: (l / r).to_f64() })
        })
        .collect()
}
