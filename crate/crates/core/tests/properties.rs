use jackff::exact::{from_falling_factorial, to_falling_factorial};
use jackff::hooktab::{hook_tableaux, permuted_tableaux, phi, psi};
use jackff::partitions::Partition;
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=4, 1..=3).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn psi_phi_round_trip(lambda in partition(), k in 1usize..=3, pick in any::<prop::sample::Index>()) {
        let hts = hook_tableaux(&lambda, k);
        prop_assume!(!hts.is_empty());
        let ht = &hts[pick.index(hts.len())];
        let pt = psi(ht);
        prop_assert_eq!(pt.weight(), ht.weight());
        prop_assert_eq!(&phi(&pt), ht);
    }

    #[test]
    fn phi_psi_round_trip(lambda in partition(), k in 1usize..=3, pick in any::<prop::sample::Index>()) {
        let pts = permuted_tableaux(&lambda, k);
        prop_assume!(!pts.is_empty());
        let pt = &pts[pick.index(pts.len())];
        prop_assert_eq!(&psi(&phi(pt)), pt);
    }

    #[test]
    fn tableau_text_round_trip(lambda in partition(), k in 1usize..=3, pick in any::<prop::sample::Index>()) {
        let hts = hook_tableaux(&lambda, k);
        prop_assume!(!hts.is_empty());
        let ht = &hts[pick.index(hts.len())];
        let parsed: jackff::hooktab::HookTableau = ht.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, ht);
    }

    #[test]
    fn falling_factorial_round_trip(k in 1usize..=4, d in 1usize..=2) {
        let ff = jackff::hooktab::ko_onepart_ff(k, d);
        let poly = from_falling_factorial(&ff);
        prop_assert_eq!(from_falling_factorial(&to_falling_factorial(&poly).unwrap()), poly);
    }
}
