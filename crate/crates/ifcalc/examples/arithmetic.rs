//! Exact IFN arithmetic: the two total operations, the two partial ones
//! with their fallback flags, and integer powers.
//!
//! Run with `cargo run --example arithmetic`.

use ifcalc::Ifn;

fn main() {
    let x = Ifn::new(0.1, 0.7).expect("valid pair");
    let y = Ifn::new(0.6, 0.3).expect("valid pair");

    println!("X = {x}  (hesitancy {:.2})", x.hesitancy());
    println!("Y = {y}  (hesitancy {:.2})", y.hesitancy());
    println!();

    // Addition and multiplication are total and closed.
    println!("X + Y = {}", x.add(y));
    println!("X * Y = {}", x.mul(y));
    println!();

    // Subtraction is partial: Y - X exists here and equals (5/9, 3/7).
    let diff = y.sub(x);
    println!("Y - X = {}  (fallback: {})", diff.value, diff.fallback_used);
    println!("        5/9 = {:.16}, 3/7 = {:.16}", 5.0 / 9.0, 3.0 / 7.0);

    // X - Y has no witness: no ε satisfies X = Y + ε, so the result
    // falls back to the additive identity (0, 1) and says so.
    let fallback = x.sub(y);
    println!(
        "X - Y = {}  (fallback: {})",
        fallback.value, fallback.fallback_used
    );
    println!();

    // Division behaves the same way around the multiplicative identity.
    let quotient = x.div(y);
    println!("X / Y = {}  (fallback: {})", quotient.value, quotient.fallback_used);
    let fallback = y.div(x);
    println!(
        "Y / X = {}  (fallback: {})",
        fallback.value, fallback.fallback_used
    );
    println!();

    // Integer powers agree with repeated multiplication.
    println!("X^2 = {}", x.power(2.0).expect("positive exponent"));
    println!("X^3 = {}", x.power(3.0).expect("positive exponent"));
    println!("Y^2 = {}", y.power(2.0).expect("positive exponent"));
    println!("Y^3 = {}", y.power(3.0).expect("positive exponent"));
}
