//! Worker-level CES production, automation adoption, the two-worker skill
//! scenarios, and inequality measures.
//!
//! Output for a worker with task skills `L_t` and task shares `α_t` is
//! `(Σ α_t L_t^ρ)^{1/ρ}` with the geometric-mean branch at ρ = 0. A task is
//! delegated to the technology iff its capability strictly exceeds the
//! worker's own skill, so effective inputs are `max(L_t, A_t)` element-wise.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// |ρ| below this evaluates the exact geometric-mean formula instead of the
/// CES power form, which suffers catastrophic cancellation in `(·)^{1/ρ}`.
pub const COBB_DOUGLAS_EPS: f64 = 1e-9;

/// Tolerance on `Σ α_t = 1`.
pub const SHARE_SUM_TOL: f64 = 1e-12;

/// Which of the two tasks a scenario operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    One,
    Two,
}

impl Task {
    pub fn index(self) -> usize {
        match self {
            Task::One => 0,
            Task::Two => 1,
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index() + 1)
    }
}

impl FromStr for Task {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "1" => Ok(Task::One),
            "2" => Ok(Task::Two),
            other => Err(format!("task must be 1 or 2, got `{other}`")),
        }
    }
}

/// Sign of the cross-worker skill correlation in the two-type scenarios.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Correlation {
    Positive,
    Negative,
}

impl fmt::Display for Correlation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Correlation::Positive => write!(f, "positive"),
            Correlation::Negative => write!(f, "negative"),
        }
    }
}

impl FromStr for Correlation {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "positive" | "pos" | "+" => Ok(Correlation::Positive),
            "negative" | "neg" | "-" => Ok(Correlation::Negative),
            other => Err(format!(
                "correlation must be `positive` or `negative`, got `{other}`"
            )),
        }
    }
}

/// CES production specification: substitution parameter ρ ≤ 1 and positive
/// task shares summing to 1. σ = 1/(1−ρ) where defined.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductionSpec {
    rho: f64,
    shares: Vec<f64>,
}

impl ProductionSpec {
    pub fn new(rho: f64, shares: Vec<f64>) -> Result<Self> {
        validate_rho(rho)?;
        if shares.is_empty() {
            return Err(Error::invalid("shares", "at least one task is required"));
        }
        for (t, &a) in shares.iter().enumerate() {
            if !a.is_finite() || a <= 0.0 {
                return Err(Error::invalid(
                    "shares",
                    format!("share for task {} must be positive and finite, got {a}", t + 1),
                ));
            }
        }
        let sum: f64 = shares.iter().sum();
        if (sum - 1.0).abs() > SHARE_SUM_TOL {
            return Err(Error::invalid(
                "shares",
                format!("shares must sum to 1 within {SHARE_SUM_TOL:e}, got {sum}"),
            ));
        }
        Ok(ProductionSpec { rho, shares })
    }

    /// Equal shares over `task_count` tasks.
    pub fn equal_shares(task_count: usize, rho: f64) -> Result<Self> {
        if task_count == 0 {
            return Err(Error::invalid("task_count", "must be positive"));
        }
        let share = 1.0 / task_count as f64;
        // Build shares that sum to exactly 1.0 in floating point.
        let mut shares = vec![share; task_count];
        let sum: f64 = shares.iter().sum();
        shares[task_count - 1] += 1.0 - sum;
        ProductionSpec::new(rho, shares)
    }

    /// The paper's focal case: two tasks with equal shares.
    pub fn two_task(rho: f64) -> Result<Self> {
        ProductionSpec::equal_shares(2, rho)
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn shares(&self) -> &[f64] {
        &self.shares
    }

    pub fn task_count(&self) -> usize {
        self.shares.len()
    }

    /// True when ρ is within [`COBB_DOUGLAS_EPS`] of zero.
    pub fn is_cobb_douglas(&self) -> bool {
        self.rho.abs() < COBB_DOUGLAS_EPS
    }

    /// Elasticity of substitution σ = 1/(1−ρ); `None` at ρ = 1 (σ → ∞).
    pub fn elasticity(&self) -> Option<f64> {
        if self.rho == 1.0 {
            None
        } else {
            Some(1.0 / (1.0 - self.rho))
        }
    }

    fn two_task_equal_shares_checked(&self, name: &'static str) -> Result<()> {
        if self.task_count() != 2 {
            return Err(Error::invalid(
                name,
                format!("requires a two-task spec, got {} tasks", self.task_count()),
            ));
        }
        if (self.shares[0] - 0.5).abs() > SHARE_SUM_TOL {
            return Err(Error::invalid(name, "requires equal task shares (1/2, 1/2)"));
        }
        Ok(())
    }
}

/// ρ must be finite and ≤ 1. σ = 0 (ρ → −∞, Leontief) is outside the
/// supported range.
pub(crate) fn validate_rho(rho: f64) -> Result<()> {
    if !rho.is_finite() {
        return Err(Error::invalid("rho", format!("must be finite, got {rho}")));
    }
    if rho > 1.0 {
        return Err(Error::invalid("rho", format!("must be ≤ 1, got {rho}")));
    }
    Ok(())
}

/// Per-task worker skills, all strictly positive.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SkillVector {
    skills: Vec<f64>,
}

impl SkillVector {
    pub fn new(skills: Vec<f64>) -> Result<Self> {
        if skills.is_empty() {
            return Err(Error::invalid("skills", "at least one task is required"));
        }
        for (t, &l) in skills.iter().enumerate() {
            if !l.is_finite() || l <= 0.0 {
                return Err(Error::invalid(
                    "skills",
                    format!("skill for task {} must be positive and finite, got {l}", t + 1),
                ));
            }
        }
        Ok(SkillVector { skills })
    }

    pub fn pair(l1: f64, l2: f64) -> Result<Self> {
        SkillVector::new(vec![l1, l2])
    }

    pub(crate) fn from_validated(skills: Vec<f64>) -> Self {
        debug_assert!(skills.iter().all(|l| l.is_finite() && *l > 0.0));
        SkillVector { skills }
    }

    pub fn len(&self) -> usize {
        self.skills.len()
    }

    pub fn is_empty(&self) -> bool {
        self.skills.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.skills
    }

    pub fn get(&self, task: usize) -> Option<f64> {
        self.skills.get(task).copied()
    }
}

/// Per-task technology capabilities; 0 means the technology is absent.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AutomationState {
    capabilities: Vec<f64>,
}

impl AutomationState {
    pub fn new(capabilities: Vec<f64>) -> Result<Self> {
        if capabilities.is_empty() {
            return Err(Error::invalid("capabilities", "at least one task is required"));
        }
        for (t, &a) in capabilities.iter().enumerate() {
            if !a.is_finite() || a < 0.0 {
                return Err(Error::invalid(
                    "capabilities",
                    format!(
                        "capability for task {} must be non-negative and finite, got {a}",
                        t + 1
                    ),
                ));
            }
        }
        Ok(AutomationState { capabilities })
    }

    /// No technology on any of `task_count` tasks.
    pub fn absent(task_count: usize) -> Result<Self> {
        AutomationState::new(vec![0.0; task_count])
    }

    /// Capability `a` on one task of a two-task job, absent on the other.
    pub fn single_task(task: Task, a: f64) -> Result<Self> {
        let mut caps = vec![0.0, 0.0];
        caps[task.index()] = a;
        AutomationState::new(caps)
    }

    /// Capabilities (a1, a2) on both tasks of a two-task job.
    pub fn both_tasks(a1: f64, a2: f64) -> Result<Self> {
        AutomationState::new(vec![a1, a2])
    }

    pub fn len(&self) -> usize {
        self.capabilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.capabilities.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.capabilities
    }
}

/// The two-worker-type scenario parameters: 1 < C < B, plus the sign of the
/// cross-worker skill correlation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScenarioParams {
    b: f64,
    c: f64,
    correlation: Correlation,
}

impl ScenarioParams {
    pub fn new(b: f64, c: f64, correlation: Correlation) -> Result<Self> {
        if !b.is_finite() || !c.is_finite() || !(1.0 < c && c < b) {
            return Err(Error::invalid(
                "scenario",
                format!("requires 1 < C < B, got B = {b}, C = {c}"),
            ));
        }
        Ok(ScenarioParams { b, c, correlation })
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn correlation(&self) -> Correlation {
        self.correlation
    }
}

/// Inequality measures for one high/low worker pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InequalityReading {
    /// Output of the ex-ante high type.
    pub y_high: f64,
    /// Output of the ex-ante low type.
    pub y_low: f64,
    /// Directional gap Y_H − Y_L.
    pub delta: f64,
    pub abs_delta: f64,
    /// Coefficient of variation |Δ|/(Y_H + Y_L).
    pub cv: f64,
    /// Gini coefficient, cv/2 for two workers.
    pub gini: f64,
}

/// Worker output `(Σ α_t L_t^ρ)^{1/ρ}`, or `Π L_t^{α_t}` on the
/// Cobb-Douglas branch. Homogeneous of degree 1 in skills.
///
/// The CES branch factors out the dominant skill so intermediate powers stay
/// in [0, 1]; the result is a weighted mean and cannot leave
/// `[min L, max L]` except by rounding.
pub fn output(spec: &ProductionSpec, skills: &SkillVector) -> Result<f64> {
    if skills.len() != spec.task_count() {
        return Err(Error::invalid(
            "skills",
            format!(
                "length {} does not match task count {}",
                skills.len(),
                spec.task_count()
            ),
        ));
    }
    let l = skills.as_slice();
    let shares = spec.shares();
    let y = if spec.is_cobb_douglas() {
        let log_mean: f64 = shares.iter().zip(l).map(|(a, x)| a * x.ln()).sum();
        log_mean.exp()
    } else {
        let rho = spec.rho();
        let m = if rho > 0.0 {
            l.iter().copied().fold(f64::MIN, f64::max)
        } else {
            l.iter().copied().fold(f64::MAX, f64::min)
        };
        let s: f64 = shares.iter().zip(l).map(|(a, x)| a * (x / m).powf(rho)).sum();
        m * s.powf(1.0 / rho)
    };
    if !y.is_finite() || y <= 0.0 {
        return Err(Error::NonFinite {
            quantity: "production output",
            parameter: "rho",
            value: spec.rho(),
        });
    }
    Ok(y)
}

/// Element-wise `max(L_t, A_t)`: the inputs a rational worker actually uses.
/// At an exact tie the worker's own skill is kept (adoption is strict).
pub fn effective_inputs(skills: &SkillVector, automation: &AutomationState) -> Result<SkillVector> {
    if skills.len() != automation.len() {
        return Err(Error::invalid(
            "automation",
            format!(
                "capability length {} does not match skill length {}",
                automation.len(),
                skills.len()
            ),
        ));
    }
    let merged = skills
        .as_slice()
        .iter()
        .zip(automation.as_slice())
        .map(|(&l, &a)| if a > l { a } else { l })
        .collect();
    Ok(SkillVector::from_validated(merged))
}

/// Adoption flags per task: true iff `A_t > L_t` strictly.
pub fn adoption(skills: &SkillVector, automation: &AutomationState) -> Result<Vec<bool>> {
    if skills.len() != automation.len() {
        return Err(Error::invalid(
            "automation",
            format!(
                "capability length {} does not match skill length {}",
                automation.len(),
                skills.len()
            ),
        ));
    }
    Ok(skills
        .as_slice()
        .iter()
        .zip(automation.as_slice())
        .map(|(&l, &a)| a > l)
        .collect())
}

/// The two worker types' skill endowments; the high type first.
///
/// Positive correlation: H = (B, BC), L = (1, C).
/// Negative correlation: H = (B, 1),  L = (1, C).
pub fn scenario_workers(params: &ScenarioParams) -> (SkillVector, SkillVector) {
    let (b, c) = (params.b(), params.c());
    let high = match params.correlation() {
        Correlation::Positive => SkillVector::from_validated(vec![b, b * c]),
        Correlation::Negative => SkillVector::from_validated(vec![b, 1.0]),
    };
    let low = SkillVector::from_validated(vec![1.0, c]);
    (high, low)
}

/// Evaluate both worker types under `automation` and summarize inequality.
/// Requires the paper's two-task equal-share production.
pub fn inequality(
    spec: &ProductionSpec,
    params: &ScenarioParams,
    automation: &AutomationState,
) -> Result<InequalityReading> {
    spec.two_task_equal_shares_checked("inequality")?;
    if automation.len() != 2 {
        return Err(Error::invalid(
            "capabilities",
            format!("two-task scenario needs 2 capabilities, got {}", automation.len()),
        ));
    }
    let (high, low) = scenario_workers(params);
    let y_high = output(spec, &effective_inputs(&high, automation)?)?;
    let y_low = output(spec, &effective_inputs(&low, automation)?)?;
    let delta = y_high - y_low;
    let abs_delta = delta.abs();
    let cv = abs_delta / (y_high + y_low);
    Ok(InequalityReading {
        y_high,
        y_low,
        delta,
        abs_delta,
        cv,
        gini: cv / 2.0,
    })
}
