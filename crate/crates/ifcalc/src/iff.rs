//! Intuitionistic fuzzy functions `φ(X) = (f(μ), g(v))`.
//!
//! A function acts on an IFN componentwise: a membership component `f`
//! applied to `μ` and a non-membership component `g` applied to `v`. Both
//! components come from a small closed algebra of component functions. The
//! same construction (power, scalar multiple, shift) takes a different
//! concrete form on each side, so every node carries its [`Orientation`]:
//!
//! | node              | membership side            | non-membership side |
//! |-------------------|----------------------------|---------------------|
//! | power `λ`         | `t^λ`                      | `1 - (1-t)^λ`       |
//! | scalar image `λ`  | `1 - (1 - w(t))^λ`         | `w(t)^λ`            |
//! | shift by `c`      | `c + w(t) - c·w(t)`        | `c·w(t)`            |
//!
//! so that `X^λ`, `λ·φ` and `α ⊕ φ` evaluate to `power`, `scalar_mul` and
//! `add` of the evaluated IFN, formula for formula.
//!
//! Validity (`f(μ) + g(v) <= 1` wherever `μ + v <= 1`) is checked on a fixed
//! grid at construction, not proven symbolically. [`Iff::new_unchecked`]
//! skips the check; it exists so tests and examples can build deliberately
//! broken functions (the [`ComponentFn::Reversed`] node serves the same
//! purpose for monotonicity counterexamples).

use crate::ifn::{Ifn, IfnError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use thiserror::Error;

/// Number of grid points used by the construction-time validity check.
pub const VALIDATION_GRID_POINTS: usize = 100;
/// Number of grid points used by the monotonicity check, per component.
pub const MONOTONE_GRID_POINTS: usize = 200;
/// Number of ordered random pairs sampled by the monotonicity check.
pub const MONOTONE_SAMPLE_PAIRS: usize = 1000;

/// Which component position a node's formula is written for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Membership,
    NonMembership,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::Membership => write!(f, "membership"),
            Orientation::NonMembership => write!(f, "non-membership"),
        }
    }
}

/// Errors raised by function construction and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum IffError {
    #[error("{orientation} component value {value} at t = {at} is outside [0, 1]")]
    ComponentOutOfRange {
        orientation: Orientation,
        at: f64,
        value: f64,
    },
    #[error("components sum to {sum} > 1 at (μ, v) = ({mu}, {v}): f = {f_value}, g = {g_value}")]
    SumExceedsOne {
        mu: f64,
        v: f64,
        f_value: f64,
        g_value: f64,
        sum: f64,
    },
    #[error("scalar factor {0} must be positive")]
    NonPositiveScalar(f64),
    #[error("exponent {0} must be positive")]
    NonPositiveExponent(f64),
}

/// One component of an intuitionistic fuzzy function: a real function on
/// `[0, 1]` drawn from the closed node algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum ComponentFn {
    /// `t`.
    Identity,
    /// A constant in `[0, 1]`.
    Constant(f64),
    /// `t^λ` (membership) or `1 - (1-t)^λ` (non-membership).
    Power { exponent: f64, orientation: Orientation },
    /// The component of `λ · φ`: `1 - (1 - w)^λ` (membership) or `w^λ`
    /// (non-membership), where `w` is the inner component.
    ScalarMulImage {
        lambda: f64,
        orientation: Orientation,
        inner: Box<ComponentFn>,
    },
    /// The component of `α ⊕ φ`: `c + w - c·w` (membership) or `c·w`
    /// (non-membership), where `c` is the matching degree of `α`.
    ShiftImage {
        constant: f64,
        orientation: Orientation,
        inner: Box<ComponentFn>,
    },
    /// `1 - w(t)`: deliberately decreasing, for monotonicity
    /// counterexamples. Never produced by the public builders.
    Reversed(Box<ComponentFn>),
}

impl ComponentFn {
    /// Evaluates the component at `t`.
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            ComponentFn::Identity => t,
            ComponentFn::Constant(c) => *c,
            ComponentFn::Power { exponent, orientation } => match orientation {
                Orientation::Membership => t.powf(*exponent),
                Orientation::NonMembership => 1.0 - (1.0 - t).powf(*exponent),
            },
            ComponentFn::ScalarMulImage { lambda, orientation, inner } => {
                let w = inner.eval(t);
                match orientation {
                    Orientation::Membership => 1.0 - (1.0 - w).powf(*lambda),
                    Orientation::NonMembership => w.powf(*lambda),
                }
            }
            ComponentFn::ShiftImage { constant, orientation, inner } => {
                let w = inner.eval(t);
                match orientation {
                    Orientation::Membership => constant + w - constant * w,
                    Orientation::NonMembership => constant * w,
                }
            }
            ComponentFn::Reversed(inner) => 1.0 - inner.eval(t),
        }
    }

    /// Derivative of the component at `t`.
    ///
    /// May be unbounded at the interval endpoints (fractional exponents);
    /// callers guard where it matters.
    pub fn derivative(&self, t: f64) -> f64 {
        match self {
            ComponentFn::Identity => 1.0,
            ComponentFn::Constant(_) => 0.0,
            ComponentFn::Power { exponent, orientation } => match orientation {
                Orientation::Membership => exponent * t.powf(exponent - 1.0),
                Orientation::NonMembership => exponent * (1.0 - t).powf(exponent - 1.0),
            },
            ComponentFn::ScalarMulImage { lambda, orientation, inner } => {
                let w = inner.eval(t);
                let dw = inner.derivative(t);
                match orientation {
                    Orientation::Membership => lambda * (1.0 - w).powf(lambda - 1.0) * dw,
                    Orientation::NonMembership => lambda * w.powf(lambda - 1.0) * dw,
                }
            }
            ComponentFn::ShiftImage { constant, orientation, inner } => {
                let dw = inner.derivative(t);
                match orientation {
                    Orientation::Membership => (1.0 - constant) * dw,
                    Orientation::NonMembership => constant * dw,
                }
            }
            ComponentFn::Reversed(inner) => -inner.derivative(t),
        }
    }

    /// Text form with `t` as the free variable, used in error context and
    /// the function display.
    fn text(&self) -> String {
        match self {
            ComponentFn::Identity => "t".to_string(),
            ComponentFn::Constant(c) => format!("{c}"),
            ComponentFn::Power { exponent, orientation } => match orientation {
                Orientation::Membership => format!("t^{exponent}"),
                Orientation::NonMembership => format!("1-(1-t)^{exponent}"),
            },
            ComponentFn::ScalarMulImage { lambda, orientation, inner } => match orientation {
                Orientation::Membership => format!("1-(1-{})^{lambda}", inner.text()),
                Orientation::NonMembership => format!("({})^{lambda}", inner.text()),
            },
            ComponentFn::ShiftImage { constant, orientation, inner } => match orientation {
                Orientation::Membership => format!("{constant}+(1-{constant})*({})", inner.text()),
                Orientation::NonMembership => format!("{constant}*({})", inner.text()),
            },
            ComponentFn::Reversed(inner) => format!("1-({})", inner.text()),
        }
    }
}

/// An intuitionistic fuzzy function: a membership component `f` and a
/// non-membership component `g`, acting as `φ(X) = (f(μ), g(v))`.
#[derive(Debug, Clone, PartialEq)]
pub struct Iff {
    f: ComponentFn,
    g: ComponentFn,
}

impl Iff {
    /// Builds a function after checking validity on a fixed grid: both
    /// components map `[0, 1]` into `[0, 1]`, and `f(μ) + g(v) <= 1` along
    /// the boundary `μ + v = 1` (the interior follows for nondecreasing
    /// components).
    pub fn new(f: ComponentFn, g: ComponentFn) -> Result<Self, IffError> {
        let n = VALIDATION_GRID_POINTS;
        let tol = crate::ifn::SUM_TOLERANCE;
        for k in 0..n {
            let t = k as f64 / (n - 1) as f64;
            let fv = f.eval(t);
            if !fv.is_finite() || !(-tol..=1.0 + tol).contains(&fv) {
                return Err(IffError::ComponentOutOfRange {
                    orientation: Orientation::Membership,
                    at: t,
                    value: fv,
                });
            }
            let gv = g.eval(t);
            if !gv.is_finite() || !(-tol..=1.0 + tol).contains(&gv) {
                return Err(IffError::ComponentOutOfRange {
                    orientation: Orientation::NonMembership,
                    at: t,
                    value: gv,
                });
            }
            let f_at = fv;
            let g_opposite = g.eval(1.0 - t);
            let sum = f_at + g_opposite;
            if sum > 1.0 + tol {
                return Err(IffError::SumExceedsOne {
                    mu: t,
                    v: 1.0 - t,
                    f_value: f_at,
                    g_value: g_opposite,
                    sum,
                });
            }
        }
        Ok(Iff { f, g })
    }

    /// Builds a function without the validity grid check. Escape hatch for
    /// counterexample construction; evaluation still validates pointwise.
    pub fn new_unchecked(f: ComponentFn, g: ComponentFn) -> Self {
        Iff { f, g }
    }

    /// The identity function `X`.
    pub fn identity() -> Self {
        Iff { f: ComponentFn::Identity, g: ComponentFn::Identity }
    }

    /// The constant function `φ ≡ α`.
    pub fn constant(alpha: Ifn) -> Self {
        Iff {
            f: ComponentFn::Constant(alpha.u()),
            g: ComponentFn::Constant(alpha.v()),
        }
    }

    /// The power function `X^λ = (μ^λ, 1 - (1-v)^λ)` for `λ > 0`.
    pub fn power(exponent: f64) -> Result<Self, IffError> {
        if !exponent.is_finite() || exponent <= 0.0 {
            return Err(IffError::NonPositiveExponent(exponent));
        }
        Ok(Iff {
            f: ComponentFn::Power { exponent, orientation: Orientation::Membership },
            g: ComponentFn::Power { exponent, orientation: Orientation::NonMembership },
        })
    }

    /// Membership component.
    pub fn f(&self) -> &ComponentFn {
        &self.f
    }

    /// Non-membership component.
    pub fn g(&self) -> &ComponentFn {
        &self.g
    }

    /// Evaluates `φ(X) = (f(μ), g(v))`, validating the result pointwise.
    pub fn eval(&self, x: Ifn) -> Result<Ifn, IffError> {
        let fv = self.f.eval(x.u());
        let gv = self.g.eval(x.v());
        Ifn::new(fv, gv).map_err(|e| match e {
            IfnError::MembershipOutOfRange(_) | IfnError::NotFinite { name: "u", .. } => {
                IffError::ComponentOutOfRange {
                    orientation: Orientation::Membership,
                    at: x.u(),
                    value: fv,
                }
            }
            IfnError::NonMembershipOutOfRange(_) | IfnError::NotFinite { .. } => {
                IffError::ComponentOutOfRange {
                    orientation: Orientation::NonMembership,
                    at: x.v(),
                    value: gv,
                }
            }
            _ => IffError::SumExceedsOne {
                mu: x.u(),
                v: x.v(),
                f_value: fv,
                g_value: gv,
                sum: fv + gv,
            },
        })
    }

    /// The scalar multiple `λ · φ` for `λ > 0`, built by wrapping both
    /// components so that `(λ·φ)(X) = λ · (φ(X))` formula for formula.
    pub fn scalar_mul(&self, lambda: f64) -> Result<Self, IffError> {
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(IffError::NonPositiveScalar(lambda));
        }
        Ok(Iff {
            f: ComponentFn::ScalarMulImage {
                lambda,
                orientation: Orientation::Membership,
                inner: Box::new(self.f.clone()),
            },
            g: ComponentFn::ScalarMulImage {
                lambda,
                orientation: Orientation::NonMembership,
                inner: Box::new(self.g.clone()),
            },
        })
    }

    /// The shift `α ⊕ φ`, built by wrapping both components so that
    /// `(α ⊕ φ)(X) = α ⊕ φ(X)` formula for formula.
    pub fn shift(&self, alpha: Ifn) -> Self {
        Iff {
            f: ComponentFn::ShiftImage {
                constant: alpha.u(),
                orientation: Orientation::Membership,
                inner: Box::new(self.f.clone()),
            },
            g: ComponentFn::ShiftImage {
                constant: alpha.v(),
                orientation: Orientation::NonMembership,
                inner: Box::new(self.g.clone()),
            },
        }
    }

    /// Checks that the function preserves the additive order: both
    /// components nondecreasing on a fixed grid, and `φ(X) ⪯ φ(Y)` for a
    /// deterministic sample of ordered pairs `X ⪯ Y`. A grid check, not a
    /// proof; evaluation failures count as non-monotone.
    pub fn is_monotone_increasing(&self) -> bool {
        let n = MONOTONE_GRID_POINTS;
        let slack = crate::ifn::SUM_TOLERANCE;
        for component in [&self.f, &self.g] {
            let mut prev = component.eval(0.0);
            if !prev.is_finite() {
                return false;
            }
            for k in 1..n {
                let t = k as f64 / (n - 1) as f64;
                let cur = component.eval(t);
                if !cur.is_finite() || cur < prev - slack {
                    return false;
                }
                prev = cur;
            }
        }
        // Ordered pairs are built as X ⊕ ε with ε kept off the boundary so
        // the comparability of the inputs is never in numeric doubt.
        let mut rng = ChaCha8Rng::seed_from_u64(0x1f2e_3d4c_5b6a_7988);
        let mut checked = 0usize;
        while checked < MONOTONE_SAMPLE_PAIRS {
            let xu: f64 = rng.gen_range(0.0..0.95);
            let xv: f64 = rng.gen_range(0.0..=(1.0 - xu).min(0.95));
            let eu: f64 = rng.gen_range(0.0..0.9);
            let ev: f64 = rng.gen_range(0.0..(0.95 - eu));
            let (Ok(x), Ok(step)) = (Ifn::new(xu, xv), Ifn::new(eu, ev)) else {
                continue;
            };
            let y = x.add(step);
            if !x.leq_add(y) {
                continue;
            }
            let (Ok(fx), Ok(fy)) = (self.eval(x), self.eval(y)) else {
                return false;
            };
            if !fx.leq_add(fy) {
                return false;
            }
            checked += 1;
        }
        true
    }

    /// Reads the function back as a pure power `X^λ` if its shape allows:
    /// the identity is `X^1`, and matching power components give `λ`.
    pub(crate) fn as_power(&self) -> Option<f64> {
        match (&self.f, &self.g) {
            (ComponentFn::Identity, ComponentFn::Identity) => Some(1.0),
            (
                ComponentFn::Power { exponent: a, orientation: Orientation::Membership },
                ComponentFn::Power { exponent: b, orientation: Orientation::NonMembership },
            ) if a == b => Some(*a),
            _ => None,
        }
    }

    /// Expression text for functions whose shape matches the input grammar
    /// (`X`, `X^2`, `2*X^2`, `(0.2,0.4)+X^2`, constants).
    fn expr_text(&self) -> Option<String> {
        match (&self.f, &self.g) {
            (ComponentFn::Identity, ComponentFn::Identity) => Some("X".to_string()),
            (ComponentFn::Constant(a), ComponentFn::Constant(b)) => Some(format!("({a},{b})")),
            (
                ComponentFn::Power { exponent: a, orientation: Orientation::Membership },
                ComponentFn::Power { exponent: b, orientation: Orientation::NonMembership },
            ) if a == b => Some(format!("X^{a}")),
            (
                ComponentFn::ScalarMulImage { lambda: a, orientation: Orientation::Membership, inner: fi },
                ComponentFn::ScalarMulImage { lambda: b, orientation: Orientation::NonMembership, inner: gi },
            ) if a == b => {
                let inner = Iff { f: (**fi).clone(), g: (**gi).clone() };
                inner.expr_text().map(|s| format!("{a}*{s}"))
            }
            (
                ComponentFn::ShiftImage { constant: cu, orientation: Orientation::Membership, inner: fi },
                ComponentFn::ShiftImage { constant: cv, orientation: Orientation::NonMembership, inner: gi },
            ) => {
                let inner = Iff { f: (**fi).clone(), g: (**gi).clone() };
                inner.expr_text().map(|s| format!("({cu},{cv})+{s}"))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Iff {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.expr_text() {
            Some(s) => write!(out, "{s}"),
            None => write!(out, "(f: {}, g: {})", self.f.text(), self.g.text()),
        }
    }
}
