use std::collections::BTreeSet;

use proptest::prelude::*;

use rpl::cores::{
    five_core_crank, littlewood_compose, littlewood_decompose, orbit_of, phi2, phi2_inverse,
    OrbitVariant,
};
use rpl::qseries::Series;
use rpl::stanley::{
    bijection1, bijection1_inverse, bijection2, bijection2_inverse, classify, TypeClass,
};
use rpl::Partition;

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len)
        .prop_map(|parts| Partition::from_unsorted(parts).unwrap())
}

fn series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec((0..order, -3i32..=3, -2i32..=2, -5i64..=5), 0..12).prop_map(
        move |terms| {
            let mut s = Series::zero(order);
            for (k, ex, ey, c) in terms {
                s.add_term(k, ex, ey, c);
            }
            s
        },
    )
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(pi in partition(12, 12)) {
        let conj = pi.conjugate();
        prop_assert_eq!(conj.weight(), pi.weight());
        prop_assert_eq!(conj.srank(), -pi.srank());
        prop_assert_eq!(conj.conjugate(), pi);
    }

    #[test]
    fn display_parses_back(pi in partition(15, 12)) {
        prop_assert_eq!(pi.to_string().parse::<Partition>().unwrap(), pi.clone());
        prop_assert_eq!(pi.to_token().parse::<Partition>().unwrap(), pi);
    }

    #[test]
    fn even_extraction_round_trips(pi in partition(10, 14)) {
        let image = bijection1(&pi);
        prop_assert_eq!(4 * image.pi1.weight() + image.pi2.weight(), pi.weight());
        prop_assert!(image.pi2.frequency_pairs().all(|(p, f)| p % 2 == 1 || f == 1));
        prop_assert_eq!(image.pi2.srank(), pi.srank());
        prop_assert_eq!(bijection1_inverse(&image).unwrap(), pi);
    }

    #[test]
    fn type_swap_round_trips(pi in partition(9, 12)) {
        // Bias towards type A by adding two parts equal to 2.
        let mut parts = pi.into_parts();
        parts.extend([2, 2]);
        let pi = Partition::from_unsorted(parts).unwrap();
        if classify(&pi) == TypeClass::TypeA {
            let b = bijection2(&pi).unwrap();
            prop_assert_eq!(classify(&b), TypeClass::TypeB);
            prop_assert_eq!(b.weight(), pi.weight());
            prop_assert_eq!(b.srank(), pi.srank());
            prop_assert_eq!(bijection2_inverse(&b).unwrap(), pi);
        } else {
            prop_assert!(bijection2(&pi).is_err());
        }
    }

    #[test]
    fn core_and_quotient_round_trip(pi in partition(12, 12), t in 2u32..=7) {
        let cq = littlewood_decompose(&pi, t).unwrap();
        prop_assert_eq!(cq.quotient.len(), t as usize);
        prop_assert_eq!(cq.weight(), pi.weight());
        prop_assert_eq!(littlewood_compose(&cq).unwrap(), pi);
    }

    #[test]
    fn nvector_round_trip(pi in partition(12, 12), t in 2u32..=7) {
        let core = littlewood_decompose(&pi, t).unwrap().core;
        let n = phi2(&core, t).unwrap();
        prop_assert_eq!(n.coords().iter().sum::<i64>(), 0);
        prop_assert_eq!(n.weight(), core.weight() as i64);
        prop_assert_eq!(phi2_inverse(&n), core);
    }

    #[test]
    fn srank_orbits_cover_every_residue(pi in partition(8, 10)) {
        let r = pi.weight() % 5;
        let mut parts = pi.into_parts();
        // Pad with ones so the weight is 4 mod 5.
        parts.extend(std::iter::repeat_n(1, ((9 - r) % 5) as usize));
        let pi = Partition::from_unsorted(parts).unwrap();
        let orbit = orbit_of(&pi, OrbitVariant::SrankPreserving).unwrap();
        prop_assert_eq!(orbit.members.len(), 5);
        prop_assert!(orbit.members.iter().all(|m| m.weight() == pi.weight()));
        prop_assert!(orbit.members.iter().all(|m| (m.srank() - pi.srank()).rem_euclid(4) == 0));
        let residues: BTreeSet<u32> = orbit.members.iter().map(|m| five_core_crank(m).unwrap()).collect();
        prop_assert_eq!(residues.len(), 5);
    }

    #[test]
    fn series_multiplication_is_a_commutative_ring(a in series(8), b in series(8), c in series(8)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Series::one(8), a.clone());
        prop_assert!((&a - &a).is_zero());
    }
}
