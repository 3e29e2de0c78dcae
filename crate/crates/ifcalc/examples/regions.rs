//! Reachability regions of an anchor: S⊕(α) collects everything α can
//! reach by addition, S⊖(α) everything that reaches α.
//!
//! Renders both regions of one anchor as ASCII art over the u-v triangle.
//!
//! Run with `cargo run --example regions`.

use ifcalc::{region_membership, Ifn, RegionKind};

fn main() {
    let alpha = Ifn::new(0.3, 0.4).expect("valid pair");
    println!("anchor α = {alpha}");
    println!();
    println!("rows: v from 1 down to 0; columns: u from 0 to 1");
    println!("'+' in S⊕(α), '-' in S⊖(α), 'a' the anchor cell, '.' neither");
    println!();

    let n = 30usize;
    for row in (0..=n).rev() {
        let v = row as f64 / n as f64;
        let mut line = String::new();
        for col in 0..=n {
            let u = col as f64 / n as f64;
            let symbol = match Ifn::new(u, v) {
                Err(_) => ' ',
                Ok(point) => {
                    let anchor_cell = (point.u() - alpha.u()).abs() < 0.5 / n as f64
                        && (point.v() - alpha.v()).abs() < 0.5 / n as f64;
                    if anchor_cell {
                        'a'
                    } else if region_membership(RegionKind::AddReachable, alpha, point) {
                        '+'
                    } else if region_membership(RegionKind::SubReachable, alpha, point) {
                        '-'
                    } else {
                        '.'
                    }
                }
            };
            line.push(symbol);
        }
        println!("{line}");
    }
    println!();

    // Membership is exactly the partial order: x is in S⊕(α) when the
    // difference x ⊖ α exists, and that difference is the witness.
    let member = Ifn::new(0.6, 0.2).expect("valid pair");
    println!(
        "{member} in S⊕(α): {}",
        region_membership(RegionKind::AddReachable, alpha, member)
    );
    let witness = member.sub(alpha);
    println!("witness ε = x ⊖ α = {}", witness.value);
    println!("α ⊕ ε = {}  (reconstructs x)", alpha.add(witness.value));

    // Raising v past the margin ratio makes the witness disappear.
    let outside = Ifn::new(0.6, 0.3).expect("valid pair");
    println!(
        "{outside} in S⊕(α): {}  (v ratio 0.75 exceeds the margin ratio 4/7)",
        region_membership(RegionKind::AddReachable, alpha, outside)
    );
}
