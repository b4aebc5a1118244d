//! Falling-factorial positivity of α^{|μ|-μ1}·J*_μ and Ko_μ for small μ.

use jackff::cli::conjecture_rows;

fn main() {
    let d = 2;
    for row in conjecture_rows(4, d).unwrap() {
        println!("μ = {:<10} J* {}  Ko {}", row.mu.to_string(), row.jstar, row.ko);
    }
}
