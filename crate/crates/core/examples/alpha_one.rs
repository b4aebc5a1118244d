//! α = 1: Stanley's character formula, shifted Schur functions and the
//! B-coefficients behind the falling-factorial positivity.

use jackff::partitions::Partition;
use jackff::stanley;

fn main() {
    let mu: Partition = "2,1".parse().unwrap();
    let ch = stanley::ch1_multirect(&mu, 2).unwrap();
    println!("Ch_{mu}(r^p), d = 2: {ch}");
    println!("sign pattern in Stanley coordinates holds: {}", stanley::stanley_sign_pattern_holds(&mu, 2).unwrap());
    println!("rectangle formula: {}", stanley::rectangle_formula(&mu).unwrap());

    let s = stanley::shifted_schur_multirect(&mu, 1).unwrap();
    println!("S*_{mu}(r^p), d = 1: {s}");

    for k in 1..=4 {
        let r = stanley::verify_b(k).unwrap();
        println!("k = {k}: {} (μ, S, T) cases, {} negative B", r.cases, r.negative.len());
    }
}
