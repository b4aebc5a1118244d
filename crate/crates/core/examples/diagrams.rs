//! Partitions, multirectangular coordinates, set-partitions and characters.

use jackff::combinatorics::{lrmin, set_partitions, Permutation};
use jackff::partitions::{MultiRect, Partition};
use jackff::symfun::{character, kostka};

fn main() {
    let lambda: Partition = "4,4,2".parse().unwrap();
    let m = MultiRect::from_partition(&lambda, 2).unwrap();
    println!("{lambda} = r^p with p = {:?}, r = {:?}, q = {:?}", m.p, m.r, m.q());
    println!("conjugate {}, z = {}", lambda.conjugate(), lambda.z());

    let three: Partition = "3".parse().unwrap();
    let mu: Partition = "2,1".parse().unwrap();
    println!("χ^(2,1)((3)) = {}", character(&mu, &three).unwrap());
    println!("K_(2,1),(1,1,1) = {}", kostka(&mu, &"1,1,1".parse().unwrap()).unwrap());

    println!("{} set-partitions of [4]", set_partitions(4).unwrap().len());
    let p = Permutation::from_word(&[4, 2, 5, 1, 3]);
    println!("{p}: cycle type {}, lrmin {}", p.cycle_type(), lrmin(&[4, 2, 5, 1, 3]));
}
