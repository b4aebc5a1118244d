//! Jack polynomials and the characters Ch and Ko evaluated on diagrams.

use jackff::jack;
use jackff::partitions::Partition;

fn main() {
    let lambda: Partition = "3,1".parse().unwrap();
    let m = jack::monomial_expansion(&lambda);
    println!("J_{lambda} in the monomial basis:");
    for (nu, c) in &m.coeffs {
        println!("  m_{nu}: {c}");
    }
    println!("J_{lambda} in the power-sum basis:");
    for (nu, c) in &jack::powersum_expansion(&lambda).coeffs {
        println!("  p_{nu}: {c}");
    }
    let mu: Partition = "2".parse().unwrap();
    for shape in ["2", "2,1", "3,1", "2,2"] {
        let l: Partition = shape.parse().unwrap();
        println!("Ch_{mu}({l}) = {}   Ko_{mu}({l}) = {}", jack::ch(&mu, &l), jack::ko(&mu, &l));
    }
}
