//! Mean value points: inside a comparable interval [X, Y] there is a
//! point whose componentwise derivatives equal the interval's difference
//! quotients. The solver brackets each component with bisection.
//!
//! Run with `cargo run --example mean_value`.

use ifcalc::{add_mvt_check, add_mvt_solve, Iff, Ifn};

fn main() {
    let x = Ifn::new(0.1, 0.7).expect("valid pair");
    let y = Ifn::new(0.6, 0.3).expect("valid pair");

    // For X^2 the point comes out at (0.35, 0.5) on the nose.
    let square = Iff::power(2.0).expect("positive exponent");
    let result = add_mvt_solve(&square, x, y, 1e-12).expect("monotone over a comparable pair");
    println!("φ = X^2 over [{x}, {y}]");
    println!("  X₀ = {}", result.point);
    println!(
        "  residuals ({:.2e}, {:.2e}) in {} + {} bisection steps",
        result.residual_mu, result.residual_v, result.iterations_mu, result.iterations_v
    );
    println!();

    // For X^3 the components land on sqrt(0.43/3) and 1 - sqrt(0.79/3).
    let cube = Iff::power(3.0).expect("positive exponent");
    let result = add_mvt_solve(&cube, x, y, 1e-12).expect("monotone over a comparable pair");
    println!("φ = X^3 over the same interval");
    println!("  X₀ = {}", result.point);
    println!(
        "  closed forms: ({:.16}, {:.16})",
        (0.43f64 / 3.0).sqrt(),
        1.0 - (0.79f64 / 3.0).sqrt()
    );
    println!();

    // The identity function needs no search at all: every interior point
    // satisfies the condition, and the solver reports the midpoint with
    // residual exactly zero.
    let result = add_mvt_solve(&Iff::identity(), x, y, 1e-12).expect("identity is monotone");
    println!("φ = X: X₀ = {} with residuals ({}, {})", result.point, result.residual_mu, result.residual_v);
    println!();

    // In secant form the mean value identity is exact:
    // φ(Y) ⊖ φ(X) = d⊕φ(X) ⊗ (Y ⊖ X).
    let report = add_mvt_check(&square, x, y, 1e-12).expect("comparable pair");
    println!("secant identity for X^2:");
    println!("  lhs = ({:.16}, {:.16})", report.lhs.u, report.lhs.v);
    println!("  rhs = ({:.16}, {:.16})", report.rhs.u, report.rhs.v);
    println!(
        "  gap = {:.2e}, passed = {}",
        report.max_component_gap, report.passed
    );
}
