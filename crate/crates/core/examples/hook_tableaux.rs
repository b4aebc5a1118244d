//! Hook tableaux, permuted tableaux, the bijection between them, and the
//! skeleton expansion of the one-part Jack character.

use jackff::hooktab::{self, Family, HookTableau};
use jackff::partitions::Partition;

fn main() {
    let t: HookTableau = "* *_1 *^1 . . / . . . . *".parse().unwrap();
    let (p, steps) = hooktab::psi_trace(&t);
    println!("Ψ on {t} (weight {})", t.weight());
    for s in &steps {
        println!("  ({}) {}", s.rule, s.state);
    }
    println!("  = {p} (weight {})", p.weight());
    println!("Φ gives back {}", hooktab::phi(&p));

    let lambda: Partition = "3,2".parse().unwrap();
    for k in 1..=3 {
        println!(
            "Ko_({k})({lambda}): hook {}, permuted {}, subsets {}",
            hooktab::ko_onepart_tableaux(k, &lambda, Family::Hook),
            hooktab::ko_onepart_tableaux(k, &lambda, Family::Permuted),
            hooktab::ko_onepart_subsets(k, &lambda),
        );
    }

    let ff = hooktab::ko_onepart_ff(3, 1);
    println!("Ko_(3)(r^p) = {}", ff.to_text());
    println!("{} skeletons for k = 3, d = 2", hooktab::skeletons(3, 2).len());
}
