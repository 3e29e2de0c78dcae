//! The intuitionistic fuzzy number (IFN) value type and its algebra.
//!
//! An IFN is a pair `(u, v)` with `u, v ∈ [0, 1]` and `u + v <= 1`. The
//! additive identity is `O = (0, 1)` and the multiplicative identity is
//! `E = (1, 0)`. Addition and multiplication are total:
//!
//! ```text
//! α ⊕ β = (u_α + u_β - u_α u_β,  v_α v_β)
//! α ⊗ β = (u_α u_β,  v_α + v_β - v_α v_β)
//! ```
//!
//! Subtraction and division are exact inverses where a witness exists and
//! fall back to their identity otherwise (reported, never silent):
//!
//! ```text
//! α ⊖ β = ((u_α - u_β)/(1 - u_β),  v_α / v_β)      if 0 <= v_α/v_β <= (1-u_α)/(1-u_β) <= 1
//! α ⊘ β = (u_α / u_β,  (v_α - v_β)/(1 - v_β))      if 0 <= u_α/u_β <= (1-v_α)/(1-v_β) <= 1
//! ```
//!
//! `leq_add` and `leq_mul` are the partial orders induced by witness
//! existence, and the reachability regions `S⊕`/`S⊖` of an anchor are their
//! upper and lower sets. Scalar multiples of an anchor sweep a one-parameter
//! curve through the IFN triangle; `lambda_curve` samples it in closed form.

use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Absolute slack accepted on the `u + v <= 1` constraint before rejection.
///
/// Sums in `(1, 1 + SUM_TOLERANCE]` are renormalized by reducing `v` to
/// `1 - u`; anything further out is rejected. Component ranges get the same
/// slack (clamped back into `[0, 1]`).
pub const SUM_TOLERANCE: f64 = 1e-12;

/// Validation errors raised by [`Ifn`] constructors and scalar operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum IfnError {
    #[error("membership degree {0} is outside [0, 1]")]
    MembershipOutOfRange(f64),
    #[error("non-membership degree {0} is outside [0, 1]")]
    NonMembershipOutOfRange(f64),
    #[error("degrees u = {u}, v = {v} sum to {sum} > 1")]
    SumExceedsOne { u: f64, v: f64, sum: f64 },
    #[error("{name} is not a finite number: {value}")]
    NotFinite { name: &'static str, value: f64 },
    #[error("scalar factor {0} must be positive")]
    NonPositiveScalar(f64),
    #[error("curve anchor ({u}, {v}) must lie strictly inside the triangle")]
    DegenerateAnchor { u: f64, v: f64 },
    #[error("curve needs at least 2 samples, got {0}")]
    TooFewSamples(usize),
    #[error("malformed IFN literal {0:?}, expected \"(u,v)\"")]
    MalformedLiteral(String),
}

/// An intuitionistic fuzzy number: membership `u` and non-membership `v`
/// with `u, v ∈ [0, 1]` and `u + v <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Ifn {
    u: f64,
    v: f64,
}

/// Result of a partial operation (`⊖`, `⊘`): the value together with a flag
/// telling whether the identity fallback was taken instead of a true inverse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpOutcome {
    pub value: Ifn,
    pub fallback_used: bool,
}

impl Ifn {
    /// Additive identity `O = (0, 1)`.
    pub const ZERO: Ifn = Ifn { u: 0.0, v: 1.0 };
    /// Multiplicative identity `E = (1, 0)`.
    pub const ONE: Ifn = Ifn { u: 1.0, v: 0.0 };

    /// Validates and builds an IFN.
    ///
    /// Components may miss `[0, 1]` and the sum may exceed 1 by at most
    /// [`SUM_TOLERANCE`]; such values are renormalized (clamped, `v`
    /// reduced). Boundary values are accepted exactly.
    pub fn new(u: f64, v: f64) -> Result<Self, IfnError> {
        if !u.is_finite() {
            return Err(IfnError::NotFinite { name: "u", value: u });
        }
        if !v.is_finite() {
            return Err(IfnError::NotFinite { name: "v", value: v });
        }
        if !(-SUM_TOLERANCE..=1.0 + SUM_TOLERANCE).contains(&u) {
            return Err(IfnError::MembershipOutOfRange(u));
        }
        if !(-SUM_TOLERANCE..=1.0 + SUM_TOLERANCE).contains(&v) {
            return Err(IfnError::NonMembershipOutOfRange(v));
        }
        let u = u.clamp(0.0, 1.0);
        let mut v = v.clamp(0.0, 1.0);
        let sum = u + v;
        if sum > 1.0 + SUM_TOLERANCE {
            return Err(IfnError::SumExceedsOne { u, v, sum });
        }
        if sum > 1.0 {
            // 1 - u rounds to within half an ulp of the exact complement, so
            // the renormalized pair satisfies u + v <= 1 in floating point.
            v = 1.0 - u;
        }
        Ok(Ifn { u, v })
    }

    /// Membership degree.
    pub fn u(&self) -> f64 {
        self.u
    }

    /// Non-membership degree.
    pub fn v(&self) -> f64 {
        self.v
    }

    /// Hesitancy margin `1 - u - v`.
    pub fn hesitancy(&self) -> f64 {
        1.0 - self.u - self.v
    }

    /// Addition `α ⊕ β = (u_α + u_β - u_α u_β, v_α v_β)`. Total.
    pub fn add(&self, rhs: Ifn) -> Ifn {
        Ifn::new(self.u + rhs.u - self.u * rhs.u, self.v * rhs.v).expect("addition is closed")
    }

    /// Multiplication `α ⊗ β = (u_α u_β, v_α + v_β - v_α v_β)`. Total.
    pub fn mul(&self, rhs: Ifn) -> Ifn {
        Ifn::new(self.u * rhs.u, self.v + rhs.v - self.v * rhs.v).expect("multiplication is closed")
    }

    /// Subtraction `α ⊖ β`, the exact inverse of `⊕` where a witness exists.
    ///
    /// Defined as `((u_α - u_β)/(1 - u_β), v_α / v_β)` when
    /// `0 <= v_α/v_β <= (1-u_α)/(1-u_β) <= 1`; otherwise the outcome is the
    /// additive identity `(0, 1)` with `fallback_used` set. Boundary
    /// denominators (`u_β = 1` or `v_β = 0`) take the fallback rather than
    /// producing non-finite values.
    pub fn sub(&self, rhs: Ifn) -> OpOutcome {
        if rhs.u >= 1.0 || rhs.v <= 0.0 {
            return OpOutcome { value: Ifn::ZERO, fallback_used: true };
        }
        let v_ratio = self.v / rhs.v;
        let complement_ratio = (1.0 - self.u) / (1.0 - rhs.u);
        if 0.0 <= v_ratio && v_ratio <= complement_ratio && complement_ratio <= 1.0 {
            let u = (self.u - rhs.u) / (1.0 - rhs.u);
            OpOutcome { value: Ifn::new(u, v_ratio).expect("difference is a valid IFN"), fallback_used: false }
        } else {
            OpOutcome { value: Ifn::ZERO, fallback_used: true }
        }
    }

    /// Division `α ⊘ β`, the exact inverse of `⊗` where a witness exists.
    ///
    /// Defined as `(u_α / u_β, (v_α - v_β)/(1 - v_β))` when
    /// `0 <= u_α/u_β <= (1-v_α)/(1-v_β) <= 1`; otherwise the outcome is the
    /// multiplicative identity `(1, 0)` with `fallback_used` set. Boundary
    /// denominators (`u_β = 0` or `v_β = 1`) take the fallback.
    pub fn div(&self, rhs: Ifn) -> OpOutcome {
        if rhs.u <= 0.0 || rhs.v >= 1.0 {
            return OpOutcome { value: Ifn::ONE, fallback_used: true };
        }
        let u_ratio = self.u / rhs.u;
        let complement_ratio = (1.0 - self.v) / (1.0 - rhs.v);
        if 0.0 <= u_ratio && u_ratio <= complement_ratio && complement_ratio <= 1.0 {
            let v = (self.v - rhs.v) / (1.0 - rhs.v);
            OpOutcome { value: Ifn::new(u_ratio, v).expect("quotient is a valid IFN"), fallback_used: false }
        } else {
            OpOutcome { value: Ifn::ONE, fallback_used: true }
        }
    }

    /// Scalar multiple `λ · α = (1 - (1-u)^λ, v^λ)` for `λ > 0`.
    ///
    /// `λ = 1` returns `α` unchanged; integer `λ = n` agrees with n-fold `⊕`.
    pub fn scalar_mul(&self, lambda: f64) -> Result<Ifn, IfnError> {
        if !lambda.is_finite() {
            return Err(IfnError::NotFinite { name: "lambda", value: lambda });
        }
        if lambda <= 0.0 {
            return Err(IfnError::NonPositiveScalar(lambda));
        }
        if lambda == 1.0 {
            return Ok(*self);
        }
        Ifn::new(1.0 - (1.0 - self.u).powf(lambda), self.v.powf(lambda))
    }

    /// Power `α^λ = (u^λ, 1 - (1-v)^λ)` for `λ > 0`.
    ///
    /// `λ = 1` returns `α` unchanged; integer `λ = n` agrees with n-fold `⊗`.
    pub fn power(&self, lambda: f64) -> Result<Ifn, IfnError> {
        if !lambda.is_finite() {
            return Err(IfnError::NotFinite { name: "lambda", value: lambda });
        }
        if lambda <= 0.0 {
            return Err(IfnError::NonPositiveScalar(lambda));
        }
        if lambda == 1.0 {
            return Ok(*self);
        }
        Ifn::new(self.u.powf(lambda), 1.0 - (1.0 - self.v).powf(lambda))
    }

    /// Additive order `α ⪯ β`: true when `β ⊖ α` succeeds without fallback
    /// (the witness `γ` with `α ⊕ γ = β` exists) or when `α = β`.
    pub fn leq_add(&self, other: Ifn) -> bool {
        *self == other || !other.sub(*self).fallback_used
    }

    /// Multiplicative order: true when `β ⊘ α` succeeds without fallback
    /// (the witness `γ` with `α ⊗ γ = β` exists) or when `α = β`.
    pub fn leq_mul(&self, other: Ifn) -> bool {
        *self == other || !other.div(*self).fallback_used
    }
}

impl fmt::Display for Ifn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

impl FromStr for Ifn {
    type Err = IfnError;

    /// Parses the `(u,v)` literal form, whitespace tolerant.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || IfnError::MalformedLiteral(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (u_text, v_text) = inner.split_once(',').ok_or_else(bad)?;
        let u: f64 = u_text.trim().parse().map_err(|_| bad())?;
        let v: f64 = v_text.trim().parse().map_err(|_| bad())?;
        Ifn::new(u, v)
    }
}

/// Which reachability region of an anchor a query refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionKind {
    /// `S⊕(α)`: everything reachable from the anchor by adding some IFN.
    AddReachable,
    /// `S⊖(α)`: everything from which the anchor is reachable by addition,
    /// equivalently everything obtainable from the anchor by subtraction.
    SubReachable,
}

/// Membership test for the reachability regions.
///
/// `x ∈ S⊕(α)` iff `α ⪯ x`, and `x ∈ S⊖(α)` iff `x ⪯ α`. The subtraction
/// fallback target `O = (0, 1)` is in every `S⊖(α)` and the anchor belongs
/// to both of its own regions.
pub fn region_membership(kind: RegionKind, anchor: Ifn, candidate: Ifn) -> bool {
    match kind {
        RegionKind::AddReachable => anchor.leq_add(candidate),
        RegionKind::SubReachable => candidate.leq_add(anchor),
    }
}

/// Closed form of the scalar-multiple curve through `anchor`: the `v`
/// coordinate at membership `u` is `v_0 ^ (ln(1-u) / ln(1-u_0))`.
///
/// Every scalar multiple `λ · anchor` lies on this curve. The anchor must be
/// strictly interior (`0 < u_0 < 1`, `v_0 > 0`).
pub fn lambda_curve_at(anchor: Ifn, u: f64) -> Result<f64, IfnError> {
    if anchor.u <= 0.0 || anchor.u >= 1.0 || anchor.v <= 0.0 {
        return Err(IfnError::DegenerateAnchor { u: anchor.u, v: anchor.v });
    }
    if !(0.0..1.0).contains(&u) {
        return Err(IfnError::MembershipOutOfRange(u));
    }
    Ok(anchor.v.powf((1.0 - u).ln() / (1.0 - anchor.u).ln()))
}

// Curve samples stop this far short of the (0,1) and (1,0) corners, where
// the exponent degenerates.
const CURVE_MARGIN: f64 = 1e-6;

/// Samples the scalar-multiple curve of `anchor` from near `(0, 1)` to near
/// `(1, 0)`, including the anchor itself. Every sample is a valid IFN and
/// the list is ordered by increasing `u`.
pub fn lambda_curve(anchor: Ifn, samples: usize) -> Result<Vec<Ifn>, IfnError> {
    if anchor.u <= 0.0 || anchor.u >= 1.0 || anchor.v <= 0.0 {
        return Err(IfnError::DegenerateAnchor { u: anchor.u, v: anchor.v });
    }
    if samples < 2 {
        return Err(IfnError::TooFewSamples(samples));
    }
    let lo = CURVE_MARGIN;
    let hi = 1.0 - CURVE_MARGIN;
    let mut us: Vec<f64> = (0..samples)
        .map(|i| lo + (hi - lo) * i as f64 / (samples - 1) as f64)
        .collect();
    // Pin the sample nearest the anchor to the anchor itself so the curve
    // passes through it exactly.
    let nearest = us
        .iter()
        .enumerate()
        .min_by(|a, b| {
            let da = (a.1 - anchor.u).abs();
            let db = (b.1 - anchor.u).abs();
            da.partial_cmp(&db).expect("grid values are finite")
        })
        .map(|(i, _)| i)
        .expect("grid is non-empty");
    us[nearest] = anchor.u;
    us.sort_by(|a, b| a.partial_cmp(b).expect("grid values are finite"));
    us.iter()
        .map(|&u| Ifn::new(u, lambda_curve_at(anchor, u)?))
        .collect()
}
