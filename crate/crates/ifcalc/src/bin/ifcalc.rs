use std::process;

fn main() {
    process::exit(ifcalc::cli::main_with_args(std::env::args()));
}
