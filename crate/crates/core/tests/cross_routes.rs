//! The combinatorial multirectangular formulas against the p*-basis reconstruction.

use jackff::exact::rational::int;
use jackff::partitions::{partitions_of, Partition};
use jackff::shifted::{reconstruct_multirect, AlphaMode, DiagramFunction};
use jackff::{stanley, zonal};

fn sizes(max: usize) -> impl Iterator<Item = Partition> {
    (1..=max).flat_map(partitions_of)
}

#[test]
fn stanley_ch_matches_reconstruction() {
    for mu in sizes(5) {
        for d in 1..=2 {
            let rec = reconstruct_multirect(&DiagramFunction::ch(&mu), d, &AlphaMode::one()).unwrap();
            assert_eq!(stanley::ch1_multirect(&mu, d).unwrap(), rec, "{mu} d={d}");
        }
    }
}

#[test]
fn stanley_ko_matches_reconstruction() {
    for mu in sizes(4) {
        for d in 1..=2 {
            let rec = reconstruct_multirect(&DiagramFunction::ko(&mu), d, &AlphaMode::one()).unwrap();
            assert_eq!(stanley::ko_multirect_sym(&mu, d).unwrap(), rec, "{mu} d={d}");
        }
    }
}

#[test]
fn zonal_formulas_match_reconstruction() {
    let two = AlphaMode::Value(int(2));
    for mu in sizes(3) {
        for d in 1..=2 {
            let ch = reconstruct_multirect(&DiagramFunction::ch(&mu), d, &two).unwrap();
            assert_eq!(zonal::ch2_multirect(&mu, d).unwrap(), ch, "Ch {mu} d={d}");
            let js = reconstruct_multirect(&DiagramFunction::jstar(&mu), d, &two).unwrap();
            assert_eq!(zonal::zstar_multirect(&mu, d, false).unwrap(), js, "Z* {mu} d={d}");
            let ko = reconstruct_multirect(&DiagramFunction::ko(&mu), d, &two).unwrap();
            assert_eq!(zonal::ko2_multirect(&mu, d, false).unwrap(), ko, "Ko {mu} d={d}");
        }
    }
}
