//! Scalar multiples λ·α and the curve they trace through the triangle.
//!
//! All scalar multiples of a fixed anchor lie on one curve
//! v(u) = v₀^(ln(1-u)/ln(1-u₀)); sampling it gives plot-ready points.
//!
//! Run with `cargo run --example scalar_curve`.

use ifcalc::{lambda_curve, lambda_curve_at, Ifn};

fn main() {
    let alpha = Ifn::new(0.35, 0.5).expect("valid pair");
    println!("anchor α = {alpha}");
    println!();

    // λ < 1 contracts toward (0, 1), λ > 1 stretches toward (1, 0).
    for lambda in [0.25, 0.5, 1.0, 2.0, 4.0] {
        let scaled = alpha.scalar_mul(lambda).expect("positive factor");
        let on_curve = lambda_curve_at(alpha, scaled.u()).expect("non-degenerate anchor");
        println!(
            "{lambda:>5} · α = {scaled}   curve v({:.4}) = {on_curve:.16}",
            scaled.u()
        );
    }
    println!();

    // A uniform sample of the same curve; the anchor itself is pinned
    // onto the grid bitwise.
    let samples = lambda_curve(alpha, 9).expect("non-degenerate anchor");
    println!("9-point sample of the curve through α:");
    for point in &samples {
        let marker = if *point == alpha { "  <- anchor" } else { "" };
        println!("  {point}{marker}");
    }
}
