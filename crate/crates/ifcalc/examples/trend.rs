//! Trend classification of an IFN-valued time series: each step is the
//! difference α(t+1) ⊖ α(t) plus an order classification, and a model
//! function adds its secant derivative over the step.
//!
//! The `ifcalc trend` subcommand runs the same pipeline over a CSV file;
//! this example drives the library directly.
//!
//! Run with `cargo run --example trend`.

use ifcalc::{secant_add_derivative, Iff, Ifn};

fn main() {
    let series = [
        ("mon", Ifn::new(0.10, 0.70).expect("valid pair")),
        ("tue", Ifn::new(0.35, 0.50).expect("valid pair")),
        ("wed", Ifn::new(0.60, 0.30).expect("valid pair")),
        ("thu", Ifn::new(0.20, 0.60).expect("valid pair")),
        ("fri", Ifn::new(0.50, 0.30).expect("valid pair")),
    ];
    let model = Iff::power(2.0).expect("positive exponent");

    println!("series:");
    for (t, value) in &series {
        println!("  {t}: {value}");
    }
    println!();

    let mut increasing = 0;
    let mut not_comparable = 0;
    for window in series.windows(2) {
        let (from_t, from) = window[0];
        let (to_t, to) = window[1];
        let difference = to.sub(from);
        if from.leq_add(to) {
            increasing += 1;
            let rate = secant_add_derivative(&model, from, to).expect("comparable step");
            println!(
                "{from_t} -> {to_t}: increasing by {}, model secant d⊕ = ({:.6}, {:.6})",
                difference.value, rate.value.u, rate.value.v
            );
        } else {
            not_comparable += 1;
            println!(
                "{from_t} -> {to_t}: not comparable (difference falls back to {})",
                difference.value
            );
        }
    }
    println!();
    println!("summary: {increasing} increasing, {not_comparable} not comparable");
}
