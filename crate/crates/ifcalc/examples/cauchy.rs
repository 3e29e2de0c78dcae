//! The Cauchy (two-function) mean value identity and the laws that fall
//! out of it: reduction to the plain identity, exact zero derivatives
//! for constants, the scalar factor law, and shift invariance.
//!
//! Run with `cargo run --example cauchy`.

use ifcalc::{
    add_cmvt_check, add_mvt_check, mul_cmvt_check, rolle_check,
    scalar_mul_derivative_identity, shift_derivative_invariance, Iff, Ifn,
};

fn main() {
    let x = Ifn::new(0.1, 0.7).expect("valid pair");
    let y = Ifn::new(0.6, 0.3).expect("valid pair");
    let square = Iff::power(2.0).expect("positive exponent");
    let cube = Iff::power(3.0).expect("positive exponent");

    // Addition form: (φ(Y) ⊖ φ(X)) ⊗ d⊕γ = (γ(Y) ⊖ γ(X)) ⊗ d⊕φ, exact
    // in secant form. Both sides land on the same pair.
    let report = add_cmvt_check(&square, &cube, x, y, 1e-12).expect("comparable pair");
    println!("Cauchy identity, addition form, φ=X^2, γ=X^3:");
    println!("  lhs = ({:.16}, {:.16})", report.lhs.u, report.lhs.v);
    println!("  rhs = ({:.16}, {:.16})", report.rhs.u, report.rhs.v);
    println!("  gap = {:.2e}, passed = {}", report.max_component_gap, report.passed);
    println!();

    // Multiplication form over a divisible pair (note the direction).
    let report = mul_cmvt_check(&square, &cube, y, x, 1e-12).expect("divisible pair");
    println!("Cauchy identity, multiplication form, over [{y}, {x}]:");
    println!("  gap = {:.2e}, passed = {}", report.max_component_gap, report.passed);
    println!();

    // With γ = X the Cauchy identity degenerates to the plain mean value
    // identity, side for side, bitwise.
    let reduced = add_cmvt_check(&square, &Iff::identity(), x, y, 1e-12).expect("comparable");
    let direct = add_mvt_check(&square, x, y, 1e-12).expect("comparable");
    println!(
        "γ = X reduces to the plain identity bitwise: {}",
        reduced.lhs == direct.lhs && reduced.rhs == direct.rhs
    );
    println!();

    // Constant functions have derivative exactly (0, 1); with equal
    // endpoint values the secant form is exact, not just within
    // tolerance (gap is literally 0.0).
    let constant = Iff::constant(Ifn::new(0.5, 0.3).expect("valid pair"));
    let rolle = rolle_check(&constant, x, y).expect("comparable with equal values");
    println!(
        "Rolle form for a constant: secant = ({}, {}), gap = {}, passed = {}",
        rolle.lhs.u, rolle.lhs.v, rolle.max_component_gap, rolle.passed
    );
    println!();

    // Scalar factors move through d⊕ as the pair (λ, 1-λ). For λ > 1
    // that factor leaves the triangle; the identity still holds in
    // formal pair arithmetic.
    for lambda in [0.5, 2.0] {
        let check = scalar_mul_derivative_identity(lambda, &square, x, 1e-12)
            .expect("interior point");
        println!(
            "d⊕({lambda}·X^2) = ({lambda}, 1-{lambda}) ⊗ d⊕X^2: gap = {:.2e}, passed = {}, \
             valid IFN = {}",
            check.max_component_gap,
            check.passed,
            check.lhs.is_valid_ifn()
        );
    }
    println!();

    // Shifting by a constant does not move the addition derivative.
    let alpha = Ifn::new(0.2, 0.5).expect("valid pair");
    let check = shift_derivative_invariance(alpha, &square, x, 1e-12).expect("interior point");
    println!(
        "d⊕({alpha} ⊕ X^2) = d⊕X^2: gap = {:.2e}, passed = {}",
        check.max_component_gap, check.passed
    );
}
