//! Property tests for the structural invariants: involutions, round trips,
//! algebraic laws, and agreement between the multiplicity test and the
//! diagram oracle.

use num_bigint::BigInt;
use proptest::prelude::*;

use partition_lab::enumeration::partitions_of;
use partition_lab::selfconjugate::{remove_outer_frame, ShapeClass};
use partition_lab::series::TruncatedSeries;
use partition_lab::{
    area_balance, check_size_equality, classify_shape, decompose_nest_egg,
    is_self_conjugate_theorem, EggShape, NestEggDecomposition, Partition,
};

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u64..=12, 0..=12)
        .prop_map(|parts| Partition::from_unordered(parts).expect("positive parts"))
}

fn arb_egg() -> impl Strategy<Value = EggShape> {
    prop_oneof![
        Just(EggShape::Empty),
        (1u64..=4).prop_map(EggShape::DurfeeSquare),
        (2u64..=4).prop_map(EggShape::FancyTriangle),
    ]
}

/// Self-conjugate partitions, built by wrapping a symmetric egg in strictly
/// widening L frames (the composition direction of the nest-and-egg view).
fn arb_self_conjugate() -> impl Strategy<Value = Partition> {
    (arb_egg(), prop::collection::vec(1u64..=3, 0..=5)).prop_map(|(egg, gaps)| {
        let mut extent = egg.extent();
        let mut arms = Vec::with_capacity(gaps.len());
        for gap in gaps {
            extent += gap;
            arms.push(extent);
        }
        arms.reverse();
        NestEggDecomposition::new(arms, egg)
            .recompose()
            .expect("widening arms always wrap")
    })
}

proptest! {
    #[test]
    fn conjugation_is_a_size_preserving_involution(p in arb_partition()) {
        let conjugate = p.conjugate();
        prop_assert_eq!(conjugate.size(), p.size());
        prop_assert_eq!(conjugate.conjugate(), p.clone());
        if !p.is_empty() {
            prop_assert_eq!(conjugate.first_part().unwrap(), p.len() as u64);
            prop_assert_eq!(conjugate.len() as u64, p.first_part().unwrap());
        }
    }

    #[test]
    fn addition_is_commutative_and_associative(
        a in arb_partition(),
        b in arb_partition(),
        c in arb_partition(),
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&Partition::empty()), a.clone());
    }

    #[test]
    fn multiplicity_form_round_trips(p in arb_partition()) {
        prop_assert_eq!(p.to_multiplicities().expand(), p);
    }

    #[test]
    fn split_then_fold_is_identity(
        (p, cuts) in arb_partition()
            .prop_filter("need at least two parts", |p| p.len() >= 2)
            .prop_flat_map(|p| {
                let len = p.len();
                (Just(p), prop::collection::btree_set(1..len, 0..len))
            })
    ) {
        let cuts: Vec<usize> = cuts.into_iter().collect();
        let pieces = p.split_contiguous(&cuts).unwrap();
        let folded = pieces
            .iter()
            .fold(Partition::empty(), |acc, piece| acc.add(piece));
        prop_assert_eq!(folded, p);
    }

    #[test]
    fn theorem_agrees_with_oracle(p in arb_partition()) {
        prop_assert_eq!(
            is_self_conjugate_theorem(&p.to_multiplicities()),
            p.is_self_conjugate_oracle()
        );
    }

    #[test]
    fn theorem_implies_size_equality(p in arb_partition()) {
        if !p.is_empty() && is_self_conjugate_theorem(&p.to_multiplicities()) {
            prop_assert!(check_size_equality(&p).unwrap());
        }
    }

    #[test]
    fn composed_nests_are_self_conjugate_and_round_trip(p in arb_self_conjugate()) {
        prop_assert!(p.is_self_conjugate_oracle());
        prop_assert!(is_self_conjugate_theorem(&p.to_multiplicities()));

        let decomposition = decompose_nest_egg(&p);
        prop_assert!(decomposition.residual.is_none());
        prop_assert_eq!(decomposition.recompose().unwrap(), p.clone());

        if !p.is_empty() {
            let balance = area_balance(&p).unwrap();
            prop_assert!(balance.is_balanced());
        }
    }

    #[test]
    fn peeling_a_frame_preserves_symmetry(p in arb_self_conjugate()) {
        if !p.is_empty() {
            let peeled = remove_outer_frame(&p, 1).unwrap();
            prop_assert!(peeled.is_self_conjugate_oracle());
        }
    }

    #[test]
    fn special_shapes_pass_the_oracle(d in 1u64..=50) {
        let square = Partition::from_parts(vec![d; d as usize]).unwrap();
        prop_assert!(square.is_self_conjugate_oracle());
        prop_assert_eq!(classify_shape(&square), ShapeClass::PureDurfeeSquare(d));

        let triangle = Partition::from_parts((1..=d).rev().collect()).unwrap();
        prop_assert!(triangle.is_self_conjugate_oracle());

        if d >= 2 {
            let mut arms = vec![d];
            arms.extend(std::iter::repeat_n(1, d as usize - 1));
            let fancy_l = Partition::from_parts(arms).unwrap();
            prop_assert!(fancy_l.is_self_conjugate_oracle());
            // [2,1] is claimed by the triangle tie-break
            let expected = if d == 2 {
                ShapeClass::FancyTriangle(2)
            } else {
                ShapeClass::FancyL(d)
            };
            prop_assert_eq!(classify_shape(&fancy_l), expected);
        }
    }

    #[test]
    fn series_multiplication_laws(
        a in prop::collection::vec(-50i64..=50, 65),
        b in prop::collection::vec(-50i64..=50, 65),
        c in prop::collection::vec(-50i64..=50, 65),
    ) {
        let wrap = |v: Vec<i64>| {
            TruncatedSeries::from_coeffs(v.into_iter().map(BigInt::from).collect())
        };
        let (a, b, c) = (wrap(a), wrap(b), wrap(c));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn streams_are_duplicate_free_and_ordered(n in 0u64..=16) {
        let all: Vec<Partition> = partitions_of(n).collect();
        for window in all.windows(2) {
            prop_assert!(window[0].parts() > window[1].parts());
        }
        for p in &all {
            prop_assert_eq!(p.size(), n);
        }
    }
}
