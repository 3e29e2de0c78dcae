//! Differential calculus on intuitionistic fuzzy functions: derivatives,
//! mean value points, and the Lagrange/Cauchy/Rolle identity checks.
//!
//! For `φ(X) = (f(μ), g(v))` the two derivative forms are
//!
//! ```text
//! d⊕φ(X) = ( (1-μ)/(1-f(μ)) · f'(μ),  1 - v/g(v) · g'(v) )
//! d⊗φ(X) = ( 1 - μ/f(μ) · f'(μ),  (1-v)/(1-g(v)) · g'(v) )
//! ```
//!
//! and the secant variants replace `f'(μ)` and `g'(v)` with the difference
//! quotients over an interval `[X, Y]`. Under that secant realization the
//! mean value identities hold exactly:
//!
//! ```text
//! φ(Y) ⊖ φ(X) = d⊕φ(X) ⊗ (Y ⊖ X)                        (addition form)
//! (φ(Y) ⊖ φ(X)) ⊗ d⊕γ(X) = (γ(Y) ⊖ γ(X)) ⊗ d⊕φ(X)      (Cauchy, addition)
//! φ(Y) ⊘ φ(X) = d⊗φ(X) ⊕ (Y ⊘ X)                        (multiplication form)
//! ```
//!
//! Derivative values may leave the IFN triangle (for example `d⊗(X²)` at
//! `(0.5, 0.5)` is `(-1, 2)`), so they are carried as raw [`Pair`]s tagged
//! with a validity flag, and the identity checks combine them with formal
//! pair arithmetic that never clamps. The mean value point itself is found
//! by bisection on each component residual; a bracket without a sign change
//! is reported as an error, never guessed around.

use crate::iff::{Iff, IffError, Orientation};
use crate::ifn::{Ifn, IfnError};
use serde::Serialize;
use thiserror::Error;

/// Default residual and identity-gap tolerance.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
/// Derivative denominators smaller than this raise a singularity error.
pub const SINGULARITY_GUARD: f64 = 1e-12;
/// Bisection gives up after this many iterations per component.
pub const MAX_BISECTION_ITERATIONS: u32 = 200;

/// A raw `(u, v)` pair: IFN-shaped but not constrained to the triangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Pair {
    pub u: f64,
    pub v: f64,
}

impl Pair {
    /// Formal `⊕`: the addition formula applied without validation.
    pub fn formal_add(self, rhs: Pair) -> Pair {
        Pair {
            u: self.u + rhs.u - self.u * rhs.u,
            v: self.v * rhs.v,
        }
    }

    /// Formal `⊗`: the multiplication formula applied without validation.
    pub fn formal_mul(self, rhs: Pair) -> Pair {
        Pair {
            u: self.u * rhs.u,
            v: self.v + rhs.v - self.v * rhs.v,
        }
    }

    /// Whether the pair lies in the IFN triangle (within the constructor
    /// tolerance).
    pub fn is_valid_ifn(self) -> bool {
        Ifn::new(self.u, self.v).is_ok()
    }

    /// Largest componentwise distance to `other`.
    pub fn max_component_gap(self, other: Pair) -> f64 {
        (self.u - other.u).abs().max((self.v - other.v).abs())
    }
}

impl From<Ifn> for Pair {
    fn from(x: Ifn) -> Pair {
        Pair { u: x.u(), v: x.v() }
    }
}

/// Which derivative formula produced a [`DerivativeValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DerivativeKind {
    Addition,
    Multiplication,
    SecantAddition,
    SecantMultiplication,
}

/// A derivative result: the raw pair, whether it happens to be a valid IFN,
/// and which formula produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivativeValue {
    pub value: Pair,
    pub is_valid_ifn: bool,
    pub kind: DerivativeKind,
}

impl DerivativeValue {
    fn new(value: Pair, kind: DerivativeKind) -> Self {
        DerivativeValue {
            value,
            is_valid_ifn: value.is_valid_ifn(),
            kind,
        }
    }
}

/// A solved mean value point with per-component residuals and iteration
/// counts from the bisection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeanValueResult {
    pub point: Ifn,
    pub residual_mu: f64,
    pub residual_v: f64,
    pub iterations_mu: u32,
    pub iterations_v: u32,
}

/// Outcome of an identity check: both sides as raw pairs, their largest
/// componentwise gap, and whether the gap is inside the tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CmvtReport {
    pub lhs: Pair,
    pub rhs: Pair,
    pub max_component_gap: f64,
    pub passed: bool,
}

impl CmvtReport {
    fn compare(lhs: Pair, rhs: Pair, tol: f64) -> Self {
        let max_component_gap = lhs.max_component_gap(rhs);
        CmvtReport {
            lhs,
            rhs,
            max_component_gap,
            passed: max_component_gap <= tol,
        }
    }
}

/// Errors raised by the calculus operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CalculusError {
    #[error("the function is not monotone increasing")]
    NotMonotone,
    #[error("no witness: {0}")]
    NotComparable(&'static str),
    #[error("degenerate interval: the {axis} endpoints coincide at {value}")]
    DegenerateInterval { axis: &'static str, value: f64 },
    #[error("{orientation} component denominator {denominator} is inside the singularity guard")]
    Singularity {
        orientation: Orientation,
        denominator: f64,
    },
    #[error("no sign change for the {orientation} residual on [{lo}, {hi}] (r(lo) = {r_lo}, r(hi) = {r_hi})")]
    NoSignChange {
        orientation: Orientation,
        lo: f64,
        hi: f64,
        r_lo: f64,
        r_hi: f64,
    },
    #[error("bisection on the {orientation} residual did not converge within {iterations} iterations")]
    DidNotConverge {
        orientation: Orientation,
        iterations: u32,
    },
    #[error("derivative value ({u}, {v}) is not a valid IFN", u = .0.u, v = .0.v)]
    InvalidDerivative(Pair),
    #[error("Rolle needs equal endpoint values, got {lhs} and {rhs}")]
    EndpointsDiffer { lhs: Ifn, rhs: Ifn },
    #[error(transparent)]
    Function(#[from] IffError),
    #[error(transparent)]
    Value(#[from] IfnError),
}

fn guard(denominator: f64, orientation: Orientation) -> Result<f64, CalculusError> {
    if denominator.abs() < SINGULARITY_GUARD {
        Err(CalculusError::Singularity { orientation, denominator })
    } else {
        Ok(denominator)
    }
}

/// Addition-form derivative `d⊕φ(X)`.
pub fn add_derivative(phi: &Iff, x: Ifn) -> Result<DerivativeValue, CalculusError> {
    let f = phi.f().eval(x.u());
    let g = phi.g().eval(x.v());
    let f_denom = guard(1.0 - f, Orientation::Membership)?;
    let g_denom = guard(g, Orientation::NonMembership)?;
    let value = Pair {
        u: (1.0 - x.u()) / f_denom * phi.f().derivative(x.u()),
        v: 1.0 - x.v() / g_denom * phi.g().derivative(x.v()),
    };
    Ok(DerivativeValue::new(value, DerivativeKind::Addition))
}

/// Multiplication-form derivative `d⊗φ(X)`.
pub fn mul_derivative(phi: &Iff, x: Ifn) -> Result<DerivativeValue, CalculusError> {
    let f = phi.f().eval(x.u());
    let g = phi.g().eval(x.v());
    let f_denom = guard(f, Orientation::Membership)?;
    let g_denom = guard(1.0 - g, Orientation::NonMembership)?;
    let value = Pair {
        u: 1.0 - x.u() / f_denom * phi.f().derivative(x.u()),
        v: (1.0 - x.v()) / g_denom * phi.g().derivative(x.v()),
    };
    Ok(DerivativeValue::new(value, DerivativeKind::Multiplication))
}

/// The endpoints must be strictly separated in both components, with `y`
/// above `x` in the additive order.
fn strict_add_interval(x: Ifn, y: Ifn) -> Result<(), CalculusError> {
    if !x.leq_add(y) {
        return Err(CalculusError::NotComparable("Y is not additively reachable from X"));
    }
    if y.u() <= x.u() {
        return Err(CalculusError::DegenerateInterval { axis: "membership", value: x.u() });
    }
    if y.v() >= x.v() {
        return Err(CalculusError::DegenerateInterval { axis: "non-membership", value: x.v() });
    }
    Ok(())
}

/// Secant form of `d⊕φ` over `[X, Y]`: difference quotients in place of the
/// component derivatives. Exact partner of the mean value identities.
pub fn secant_add_derivative(phi: &Iff, x: Ifn, y: Ifn) -> Result<DerivativeValue, CalculusError> {
    strict_add_interval(x, y)?;
    let f_x = phi.f().eval(x.u());
    let g_x = phi.g().eval(x.v());
    let f_denom = guard(1.0 - f_x, Orientation::Membership)?;
    let g_denom = guard(g_x, Orientation::NonMembership)?;
    let qf = (phi.f().eval(y.u()) - f_x) / (y.u() - x.u());
    let qg = (phi.g().eval(y.v()) - g_x) / (y.v() - x.v());
    let value = Pair {
        u: (1.0 - x.u()) / f_denom * qf,
        v: 1.0 - x.v() / g_denom * qg,
    };
    Ok(DerivativeValue::new(value, DerivativeKind::SecantAddition))
}

/// Secant form of `d⊗φ` over `[X, Y]`. Here `Y` sits below `X` in the
/// multiplicative direction (`Y ⊘ X` valid: `μ' <= μ`, `v' >= v`).
pub fn secant_mul_derivative(phi: &Iff, x: Ifn, y: Ifn) -> Result<DerivativeValue, CalculusError> {
    if y.div(x).fallback_used {
        return Err(CalculusError::NotComparable("Y is not multiplicatively reachable from X"));
    }
    if y.u() >= x.u() {
        return Err(CalculusError::DegenerateInterval { axis: "membership", value: x.u() });
    }
    if y.v() <= x.v() {
        return Err(CalculusError::DegenerateInterval { axis: "non-membership", value: x.v() });
    }
    let f_x = phi.f().eval(x.u());
    let g_x = phi.g().eval(x.v());
    let f_denom = guard(f_x, Orientation::Membership)?;
    let g_denom = guard(1.0 - g_x, Orientation::NonMembership)?;
    let qf = (phi.f().eval(y.u()) - f_x) / (y.u() - x.u());
    let qg = (phi.g().eval(y.v()) - g_x) / (y.v() - x.v());
    let value = Pair {
        u: 1.0 - x.u() / f_denom * qf,
        v: (1.0 - x.v()) / g_denom * qg,
    };
    Ok(DerivativeValue::new(value, DerivativeKind::SecantMultiplication))
}

/// The differential `d⊕φ(X) ⊗ ΔX`. The derivative must be a valid IFN here;
/// formal pairs are for the identity checks, not for IFN-valued estimates.
pub fn differential(phi: &Iff, x: Ifn, dx: Ifn) -> Result<Ifn, CalculusError> {
    let d = add_derivative(phi, x)?;
    if !d.is_valid_ifn {
        return Err(CalculusError::InvalidDerivative(d.value));
    }
    let d_ifn = Ifn::new(d.value.u, d.value.v)?;
    Ok(d_ifn.mul(dx))
}

/// First order estimate `φ(X) ⊕ d⊕φ(X) ⊗ (Y ⊖ X)` of `φ(Y)`.
pub fn first_order_estimate(phi: &Iff, x: Ifn, y: Ifn) -> Result<Ifn, CalculusError> {
    let delta = y.sub(x);
    if delta.fallback_used {
        return Err(CalculusError::NotComparable("Y is not additively reachable from X"));
    }
    let base = phi.eval(x)?;
    Ok(base.add(differential(phi, x, delta.value)?))
}

struct Bisection {
    root: f64,
    residual: f64,
    iterations: u32,
}

/// Bisection on `r` over `[lo, hi]` until `|r| <= tol`. Both endpoints
/// already inside the tolerance means the residual is identically met and
/// the bracket midpoint is returned with zero iterations.
fn bisect(
    r: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    tol: f64,
    orientation: Orientation,
) -> Result<Bisection, CalculusError> {
    let r_lo = r(lo);
    let r_hi = r(hi);
    if r_lo.abs() <= tol && r_hi.abs() <= tol {
        let root = 0.5 * (lo + hi);
        return Ok(Bisection { root, residual: r(root), iterations: 0 });
    }
    if r_lo.signum() == r_hi.signum() {
        return Err(CalculusError::NoSignChange { orientation, lo, hi, r_lo, r_hi });
    }
    let (mut lo, mut hi, mut r_lo) = (lo, hi, r_lo);
    for iteration in 1..=MAX_BISECTION_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        let r_mid = r(mid);
        if r_mid.abs() <= tol {
            return Ok(Bisection { root: mid, residual: r_mid, iterations: iteration });
        }
        if r_mid.signum() == r_lo.signum() {
            lo = mid;
            r_lo = r_mid;
        } else {
            hi = mid;
        }
    }
    Err(CalculusError::DidNotConverge { orientation, iterations: MAX_BISECTION_ITERATIONS })
}

/// Solves for the addition-form mean value point `X₀` strictly between `X`
/// and `Y`: the point where each component derivative equals its difference
/// quotient. `φ` must be monotone increasing and the pair strictly
/// comparable.
pub fn add_mvt_solve(phi: &Iff, x: Ifn, y: Ifn, tol: f64) -> Result<MeanValueResult, CalculusError> {
    if !phi.is_monotone_increasing() {
        return Err(CalculusError::NotMonotone);
    }
    strict_add_interval(x, y)?;
    let qf = (phi.f().eval(y.u()) - phi.f().eval(x.u())) / (y.u() - x.u());
    let qg = (phi.g().eval(y.v()) - phi.g().eval(x.v())) / (y.v() - x.v());
    let mu = bisect(
        |t| phi.f().derivative(t) - qf,
        x.u(),
        y.u(),
        tol,
        Orientation::Membership,
    )?;
    // The non-membership interval runs downward from x.v() to y.v().
    let v = bisect(
        |t| phi.g().derivative(t) - qg,
        y.v(),
        x.v(),
        tol,
        Orientation::NonMembership,
    )?;
    Ok(MeanValueResult {
        point: Ifn::new(mu.root, v.root)?,
        residual_mu: mu.residual,
        residual_v: v.residual,
        iterations_mu: mu.iterations,
        iterations_v: v.iterations,
    })
}

/// Checks the addition-form mean value identity in secant form:
/// `φ(Y) ⊖ φ(X) = d⊕φ(X) ⊗ (Y ⊖ X)` with the secant derivative.
pub fn add_mvt_check(phi: &Iff, x: Ifn, y: Ifn, tol: f64) -> Result<CmvtReport, CalculusError> {
    let secant = secant_add_derivative(phi, x, y)?;
    let delta = y.sub(x);
    debug_assert!(!delta.fallback_used, "comparability was checked by the secant");
    let phi_delta = phi.eval(y)?.sub(phi.eval(x)?);
    if phi_delta.fallback_used {
        return Err(CalculusError::NotComparable("φ(Y) is not additively reachable from φ(X)"));
    }
    let lhs = Pair::from(phi_delta.value);
    let rhs = secant.value.formal_mul(Pair::from(delta.value));
    Ok(CmvtReport::compare(lhs, rhs, tol))
}

/// Checks the addition-form Cauchy identity in secant form:
/// `(φ(Y) ⊖ φ(X)) ⊗ d⊕γ(X) = (γ(Y) ⊖ γ(X)) ⊗ d⊕φ(X)`.
pub fn add_cmvt_check(
    phi: &Iff,
    gamma: &Iff,
    x: Ifn,
    y: Ifn,
    tol: f64,
) -> Result<CmvtReport, CalculusError> {
    let secant_phi = secant_add_derivative(phi, x, y)?;
    let secant_gamma = secant_add_derivative(gamma, x, y)?;
    let phi_delta = phi.eval(y)?.sub(phi.eval(x)?);
    if phi_delta.fallback_used {
        return Err(CalculusError::NotComparable("φ(Y) is not additively reachable from φ(X)"));
    }
    let gamma_delta = gamma.eval(y)?.sub(gamma.eval(x)?);
    if gamma_delta.fallback_used {
        return Err(CalculusError::NotComparable("γ(Y) is not additively reachable from γ(X)"));
    }
    let lhs = Pair::from(phi_delta.value).formal_mul(secant_gamma.value);
    let rhs = Pair::from(gamma_delta.value).formal_mul(secant_phi.value);
    Ok(CmvtReport::compare(lhs, rhs, tol))
}

/// Checks the multiplication-form mean value identity in secant form:
/// `φ(Y) ⊘ φ(X) = d⊗φ(X) ⊕ (Y ⊘ X)`.
pub fn mul_mvt_check(phi: &Iff, x: Ifn, y: Ifn, tol: f64) -> Result<CmvtReport, CalculusError> {
    let secant = secant_mul_derivative(phi, x, y)?;
    let delta = y.div(x);
    debug_assert!(!delta.fallback_used, "comparability was checked by the secant");
    let phi_ratio = phi.eval(y)?.div(phi.eval(x)?);
    if phi_ratio.fallback_used {
        return Err(CalculusError::NotComparable("φ(Y) is not multiplicatively reachable from φ(X)"));
    }
    let lhs = Pair::from(phi_ratio.value);
    let rhs = secant.value.formal_add(Pair::from(delta.value));
    Ok(CmvtReport::compare(lhs, rhs, tol))
}

/// Checks the multiplication-form Cauchy identity in secant form:
/// `(φ(Y) ⊘ φ(X)) ⊕ d⊗γ(X) = (γ(Y) ⊘ γ(X)) ⊕ d⊗φ(X)`.
pub fn mul_cmvt_check(
    phi: &Iff,
    gamma: &Iff,
    x: Ifn,
    y: Ifn,
    tol: f64,
) -> Result<CmvtReport, CalculusError> {
    let secant_phi = secant_mul_derivative(phi, x, y)?;
    let secant_gamma = secant_mul_derivative(gamma, x, y)?;
    let phi_ratio = phi.eval(y)?.div(phi.eval(x)?);
    if phi_ratio.fallback_used {
        return Err(CalculusError::NotComparable("φ(Y) is not multiplicatively reachable from φ(X)"));
    }
    let gamma_ratio = gamma.eval(y)?.div(gamma.eval(x)?);
    if gamma_ratio.fallback_used {
        return Err(CalculusError::NotComparable("γ(Y) is not multiplicatively reachable from γ(X)"));
    }
    let lhs = Pair::from(phi_ratio.value).formal_add(secant_gamma.value);
    let rhs = Pair::from(gamma_ratio.value).formal_add(secant_phi.value);
    Ok(CmvtReport::compare(lhs, rhs, tol))
}

/// Rolle form: over a strictly comparable pair with equal endpoint values,
/// the secant derivative is exactly `(0, 1)`, not merely within tolerance.
pub fn rolle_check(phi: &Iff, x: Ifn, y: Ifn) -> Result<CmvtReport, CalculusError> {
    let at_x = phi.eval(x)?;
    let at_y = phi.eval(y)?;
    if at_x != at_y {
        return Err(CalculusError::EndpointsDiffer { lhs: at_x, rhs: at_y });
    }
    let secant = secant_add_derivative(phi, x, y)?;
    let zero = Pair { u: 0.0, v: 1.0 };
    let gap = secant.value.max_component_gap(zero);
    Ok(CmvtReport {
        lhs: secant.value,
        rhs: zero,
        max_component_gap: gap,
        passed: gap == 0.0,
    })
}

/// Checks `d⊕(λ·φ)(X) = (λ, 1-λ) ⊗ d⊕φ(X)` with formal arithmetic; the
/// factor `(λ, 1-λ)` is allowed to leave the triangle for `λ > 1`.
pub fn scalar_mul_derivative_identity(
    lambda: f64,
    phi: &Iff,
    x: Ifn,
    tol: f64,
) -> Result<CmvtReport, CalculusError> {
    let scaled = phi.scalar_mul(lambda)?;
    let lhs = add_derivative(&scaled, x)?.value;
    let factor = Pair { u: lambda, v: 1.0 - lambda };
    let rhs = factor.formal_mul(add_derivative(phi, x)?.value);
    Ok(CmvtReport::compare(lhs, rhs, tol))
}

/// Checks `d⊕(α ⊕ φ)(X) = d⊕φ(X)`: shifts do not move the addition
/// derivative. A shift with `v_α = 0` zeroes the shifted non-membership
/// component and surfaces as a singularity error here.
pub fn shift_derivative_invariance(
    alpha: Ifn,
    phi: &Iff,
    x: Ifn,
    tol: f64,
) -> Result<CmvtReport, CalculusError> {
    let shifted = phi.shift(alpha);
    let lhs = add_derivative(&shifted, x)?.value;
    let rhs = add_derivative(phi, x)?.value;
    Ok(CmvtReport::compare(lhs, rhs, tol))
}
