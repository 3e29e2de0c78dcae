//! The expression language: IFN literals, fractions, the function
//! variable X, operator precedence, fallback surfacing, and positioned
//! parse errors.
//!
//! Run with `cargo run --example expressions`.

use ifcalc::{evaluate, parse, Evaluated};

fn show(source: &str) {
    print!("{source:28} => ");
    let tree = match parse(source) {
        Ok(tree) => tree,
        Err(e) => {
            println!("parse error at {e}");
            return;
        }
    };
    match evaluate(&tree) {
        Ok(Evaluated::Ifn { value, fallback_used }) => {
            if fallback_used {
                println!("{value}  [fallback]");
            } else {
                println!("{value}");
            }
        }
        Ok(Evaluated::Iff(function)) => println!("function {function}"),
        Err(e) => println!("evaluation error: {e}"),
    }
}

fn main() {
    // Values: literals fold left to right, * and / bind tighter than
    // + and -. There is no grouping; "(" always opens a literal.
    show("(0.6,0.3)-(0.1,0.7)");
    show("(5/9,3/7)+(0,1)");
    show("(0.1,0.7)+(0.2,0.5)*(0.9,0.05)");
    show("(0.1,0.7)^3");
    show("2*(0.1,0.7)^2");

    // Partial operations surface their fallback instead of failing.
    show("(0.6,0.3)/(0.1,0.7)");
    show("(0.1,0.7)-(0.6,0.3)");

    // Function expressions stay symbolic until used by a calculus
    // operation; chained powers fold.
    show("X");
    show("2*X^2");
    show("X^2^3");
    show("(0.2,0.4)+X^2");

    // Errors carry 1-based line:column positions.
    show("(0.1 0.7)");
    show("(0.1,0.7)+");
    show("(1/0,0.5)");

    // Printing a parsed tree is a stable round trip.
    let tree = parse("2*X^2+(0.2,0.4)").expect("well-formed");
    let printed = tree.to_string();
    println!();
    println!("printed tree: {printed}");
    println!(
        "reparses identically: {}",
        parse(&printed).expect("prints are parseable") == tree
    );
}
