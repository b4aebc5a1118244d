//! α = 2: pair-partition formulas for the zonal characters and polynomials.

use jackff::partitions::{partitions_of, Partition};
use jackff::zonal;

fn main() {
    let mu: Partition = "2".parse().unwrap();
    println!("Ch^(2)_{mu}(r^p): {}", zonal::ch2_multirect(&mu, 1).unwrap());
    println!("Z*_{mu}(r^p): {}", zonal::zstar_multirect(&mu, 1, false).unwrap());
    println!("Ko^(2)_{mu}(r^p): {}", zonal::ko2_multirect(&mu, 1, false).unwrap());

    let census = zonal::type_census(3).unwrap();
    for nu in partitions_of(3) {
        println!("type {nu}: {} pairs (formula {})", census[&nu], zonal::type_census_formula(&nu));
    }
}
