//! Exact arithmetic and differential calculus for intuitionistic fuzzy numbers.
//!
//! An intuitionistic fuzzy number (IFN) is a pair `(u, v)` of a membership
//! degree and a non-membership degree with `u, v ∈ [0, 1]` and `u + v <= 1`.
//! This crate implements the algebra of such pairs (addition, subtraction,
//! multiplication, division, scalar multiples, powers, the induced partial
//! orders and reachability regions), a small family of intuitionistic fuzzy
//! functions `φ(X) = (f(μ), g(v))` built from component functions, and the
//! differential calculus on top of them: addition- and multiplication-form
//! derivatives, mean value point solving, and Lagrange/Cauchy/Rolle style
//! identity checks carried out in exact secant form.
//!
//! Subtraction and division are partial: when no valid witness exists the
//! operation falls back to the respective identity and reports it through
//! [`OpOutcome::fallback_used`] instead of failing. Derivative values may
//! leave the IFN triangle; they are reported as raw pairs tagged with
//! [`DerivativeValue::is_valid_ifn`] and combined with formal (unclamped)
//! pair arithmetic inside the identity checks.
//!
//! The `examples/` directory is the guided tour: one runnable example per
//! capability. A thin batch CLI (`ifcalc`) exposes the same operations as
//! JSON-emitting subcommands.

pub mod calculus;
pub mod cli;
pub mod expr;
pub mod iff;
pub mod ifn;

pub use calculus::{
    add_cmvt_check, add_derivative, add_mvt_check, add_mvt_solve, differential,
    first_order_estimate, mul_cmvt_check, mul_derivative, mul_mvt_check, rolle_check,
    scalar_mul_derivative_identity, secant_add_derivative, secant_mul_derivative,
    shift_derivative_invariance, CalculusError, CmvtReport, DerivativeKind, DerivativeValue,
    MeanValueResult, Pair, DEFAULT_TOLERANCE,
};
pub use expr::{evaluate, parse, BinOp, EvalError, Evaluated, ParseError, ParsedExpr};
pub use iff::{ComponentFn, Iff, IffError, Orientation};
pub use ifn::{lambda_curve, lambda_curve_at, region_membership, Ifn, IfnError, OpOutcome, RegionKind};
