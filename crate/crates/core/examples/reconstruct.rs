//! A shifted symmetric function as a polynomial in multirectangular
//! coordinates, then in the α-falling-factorial basis.

use jackff::exact::to_falling_factorial;
use jackff::partitions::{MultiRect, Partition};
use jackff::shifted::{eval_on, expand_in_pstar, reconstruct_multirect, AlphaMode, DiagramFunction};

fn main() {
    let mu: Partition = "2,1".parse().unwrap();
    let f = DiagramFunction::jstar_normalized(&mu);

    let e = expand_in_pstar(&f, mu.size(), &AlphaMode::Symbolic).unwrap();
    println!("{} in the p* basis:", f.name);
    for (nu, c) in &e.coeffs {
        println!("  p*_{nu}: {c}");
    }

    let poly = reconstruct_multirect(&f, 1, &AlphaMode::Symbolic).unwrap();
    println!("on a p x r rectangle: {poly}");
    let ff = to_falling_factorial(&poly).unwrap();
    println!("falling-factorial basis: {}", ff.to_text());
    println!("nonnegative: {}", ff.is_nonnegative());

    let rect = MultiRect::new(vec![2], vec![3]);
    println!("value on {}: {} (direct {})", rect.to_partition(), eval_on(&poly, &rect), f.eval(&rect.to_partition()));
}
