//! Derivatives of intuitionistic fuzzy functions in both forms.
//!
//! The addition form d⊕ comes from ⊖/⊘ increments, the multiplication
//! form d⊗ from ⊗/⊘ increments. Either may produce a pair outside the
//! IFN triangle; the value is reported raw with a validity flag rather
//! than rejected. Secant variants replace pointwise derivatives with
//! difference quotients over an interval.
//!
//! Run with `cargo run --example derivatives`.

use ifcalc::{
    add_derivative, mul_derivative, secant_add_derivative, secant_mul_derivative, Iff, Ifn,
};

fn main() {
    let square = Iff::power(2.0).expect("positive exponent");
    let x = Ifn::new(0.35, 0.5).expect("valid pair");

    let d = add_derivative(&square, x).expect("interior point");
    println!("d⊕ X^2 at {x} = ({:.16}, {:.16})", d.value.u, d.value.v);
    println!("   valid IFN: {}", d.is_valid_ifn);
    println!();

    // The multiplication form of the same function at (0.5, 0.5) leaves
    // the triangle: (-1, 2). That is a feature of the calculus, flagged
    // instead of failed.
    let x_mid = Ifn::new(0.5, 0.5).expect("valid pair");
    let d = mul_derivative(&square, x_mid).expect("interior point");
    println!("d⊗ X^2 at {x_mid} = ({}, {})", d.value.u, d.value.v);
    println!("   valid IFN: {}", d.is_valid_ifn);

    // A gentler function keeps the multiplication form inside.
    let root = Iff::power(0.5).expect("positive exponent");
    let d = mul_derivative(&root, x_mid).expect("interior point");
    println!("d⊗ X^0.5 at {x_mid} = ({}, {})", d.value.u, d.value.v);
    println!("   valid IFN: {}", d.is_valid_ifn);
    println!();

    // Secant forms over an interval: these are the derivatives under
    // which the mean value identities hold exactly.
    let y = Ifn::new(0.6, 0.3).expect("valid pair");
    let x0 = Ifn::new(0.1, 0.7).expect("valid pair");
    let s = secant_add_derivative(&square, x0, y).expect("comparable pair");
    println!(
        "secant d⊕ X^2 over [{x0}, {y}] = ({:.16}, {:.16})",
        s.value.u, s.value.v
    );
    let s = secant_mul_derivative(&square, y, x0).expect("divisible pair");
    println!(
        "secant d⊗ X^2 over [{y}, {x0}] = ({:.16}, {:.16})",
        s.value.u, s.value.v
    );
    println!("   valid IFN: {}  (reported, not rejected)", s.is_valid_ifn);
    println!();

    // Derivatives of constants vanish to the additive identity exactly.
    let constant = Iff::constant(Ifn::new(0.5, 0.3).expect("valid pair"));
    let d = add_derivative(&constant, x).expect("interior point");
    println!("d⊕ of a constant = ({}, {})  (exact)", d.value.u, d.value.v);
}
