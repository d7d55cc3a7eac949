//! Oracle tests for the permutation kernel: algebra conventions, parsing,
//! ranking, and partition combinatorics, checked against independently
//! computed values.

use immersions_core::{
    centralizer_order, class_size, factorial, partitions_of, perm_rank, perm_unrank, CycleType,
    Perm,
};
use num_bigint::BigUint;

fn p(images: &[usize]) -> Perm {
    Perm::from_one_line(images).unwrap()
}

#[test]
fn composition_is_right_to_left() {
    // compose(p, q) applies q first.
    let a = p(&[2, 3, 1]); // (1,2,3)
    let b = p(&[2, 1, 3]); // (1,2)
    let ab = a.compose(&b);
    for i in 1..=3 {
        assert_eq!(ab.apply(i), a.apply(b.apply(i)));
    }
    assert_eq!(ab.one_line(), vec![3, 2, 1]);
    let ba = b.compose(&a);
    assert_eq!(ba.one_line(), vec![1, 3, 2]);
    assert_ne!(ab, ba);
}

#[test]
fn inverse_and_power() {
    let a = p(&[3, 5, 1, 2, 4]);
    assert!(a.compose(&a.inverse()).is_identity());
    assert!(a.inverse().compose(&a).is_identity());
    assert_eq!(a.pow(0), Perm::identity(5));
    assert_eq!(a.pow(1), a);
    assert_eq!(a.pow(-1), a.inverse());
    assert_eq!(a.pow(3), a.compose(&a).compose(&a));
    // Order of this permutation: cycles (1,3)(2,5,4) → lcm(2,3) = 6.
    assert_eq!(a.pow(6), Perm::identity(5));
    assert_ne!(a.pow(3), Perm::identity(5));
}

#[test]
fn conjugation_convention() {
    // conjugate_by(g) = g · p · g⁻¹: relabels points by g.
    let x = p(&[2, 1, 3]); // (1,2)
    let g = p(&[2, 3, 1]); // (1,2,3): sends 1↦2, 2↦3
    let y = x.conjugate_by(&g);
    // (1,2) relabelled by 1↦2, 2↦3 is (2,3).
    assert_eq!(y, p(&[1, 3, 2]));
    assert_eq!(y, g.compose(&x).compose(&g.inverse()));
    // Conjugation preserves cycle type.
    assert_eq!(x.cycle_type(), y.cycle_type());
}

#[test]
fn cycle_structure() {
    let a = p(&[3, 5, 1, 2, 4]);
    assert_eq!(a.cycles(), vec![vec![1, 3], vec![2, 5, 4]]);
    assert_eq!(a.cycle_count(), 2);
    assert_eq!(a.cycle_type(), CycleType::new(vec![2, 3]));
    assert_eq!(a.to_cycle_string(), "(1,3)(2,5,4)");
    assert_eq!(Perm::identity(4).to_cycle_string(), "()");
    assert_eq!(Perm::identity(4).cycle_count(), 4);
    // Singletons appear in cycles() but not in the string.
    let b = p(&[2, 1, 3]);
    assert_eq!(b.cycles(), vec![vec![1, 2], vec![3]]);
    assert_eq!(b.to_cycle_string(), "(1,2)");
}

#[test]
fn parsing_round_trips() {
    let a = p(&[3, 5, 7, 1, 2, 6, 4, 8]);
    assert_eq!(Perm::parse("[3,5,7,1,2,6,4,8]", 8).unwrap(), a);
    assert_eq!(Perm::parse(&a.to_cycle_string(), 8).unwrap(), a);
    assert_eq!(Perm::parse(&a.to_one_line_string(), 8).unwrap(), a);
    assert_eq!(Perm::parse("e", 5).unwrap(), Perm::identity(5));
    assert_eq!(Perm::parse("id", 3).unwrap(), Perm::identity(3));
    assert_eq!(Perm::parse("()", 3).unwrap(), Perm::identity(3));
    assert_eq!(
        Perm::parse("(1,13)(2,5)(3,6)(4,16)(7,8)(9,12)(10,15)(11,14)", 16)
            .unwrap()
            .cycle_type(),
        CycleType::new(vec![2; 8])
    );
    // Errors: wrong degree, duplicate point, out of range.
    assert!(Perm::parse("[2,1]", 3).is_err());
    assert!(Perm::parse("[1,1,3]", 3).is_err());
    assert!(Perm::parse("(1,4)", 3).is_err());
    assert!(Perm::from_one_line(&[1, 1]).is_err());
    assert!(Perm::from_one_line(&[0, 1]).is_err());
}

#[test]
fn serde_uses_one_line_form() {
    let a = p(&[3, 1, 2]);
    let json = serde_json::to_string(&a).unwrap();
    assert_eq!(json, "\"[3,1,2]\"");
    let back: Perm = serde_json::from_str(&json).unwrap();
    assert_eq!(back, a);
}

#[test]
fn rank_matches_lexicographic_enumeration() {
    // Oracle: enumerate all of S4 in lexicographic one-line order by
    // construction, independent of the Lehmer implementation.
    let mut all: Vec<Vec<usize>> = Vec::new();
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                for d in 1..=4 {
                    let v = vec![a, b, c, d];
                    let mut sorted = v.clone();
                    sorted.sort_unstable();
                    if sorted == vec![1, 2, 3, 4] {
                        all.push(v);
                    }
                }
            }
        }
    }
    assert_eq!(all.len(), 24);
    assert!(all.windows(2).all(|w| w[0] < w[1]));
    for (rank, images) in all.iter().enumerate() {
        let perm = p(images);
        assert_eq!(perm_rank(&perm), BigUint::from(rank));
        assert_eq!(perm_unrank(&BigUint::from(rank), 4).unwrap(), perm);
    }
    assert!(perm_unrank(&BigUint::from(24u32), 4).is_err());
}

#[test]
fn rank_round_trip_large_degree() {
    let images: Vec<usize> = vec![
        7, 11, 1, 13, 9, 15, 3, 17, 4, 19, 5, 12, 8, 10, 14, 16, 2, 18, 6, 20,
    ];
    let perm = p(&images);
    let rank = perm_rank(&perm);
    assert_eq!(perm_unrank(&rank, 20).unwrap(), perm);
    assert_eq!(perm_rank(&Perm::identity(20)), BigUint::from(0u32));
    let last = perm_unrank(&(factorial(20) - 1u32), 20).unwrap();
    assert_eq!(
        last.one_line(),
        (1..=20).rev().collect::<Vec<_>>()
    );
}

#[test]
#[allow(clippy::needless_range_loop)] // DP recurrences read best with indices
fn partition_dp_oracle() {
    // Independent oracle: Euler's pentagonal-free DP for the partition
    // counts p(m).
    let max = 40usize;
    let mut table = vec![vec![0u64; max + 1]; max + 1];
    for k in 0..=max {
        table[k][0] = 1;
    }
    for k in 1..=max {
        for m in 1..=max {
            table[k][m] = table[k - 1][m] + if m >= k { table[k][m - k] } else { 0 };
        }
    }
    let expected: Vec<u64> = (0..=max).map(|m| table[max][m]).collect();
    assert_eq!(expected[40], 37338);
    for m in 0..=12 {
        assert_eq!(partitions_of(m).len() as u64, expected[m], "p({m})");
    }
    assert_eq!(partitions_of(40).len() as u64, expected[40]);
}

#[test]
fn partitions_are_descending_lexicographic() {
    let parts = partitions_of(6);
    assert_eq!(parts.first().unwrap().parts(), vec![6]);
    assert_eq!(parts.last().unwrap().parts(), vec![1; 6]);
    for t in &parts {
        assert_eq!(t.degree(), 6);
        let v = t.parts();
        assert!(v.windows(2).all(|w| w[0] >= w[1]), "parts descend: {v:?}");
    }
    // Strictly decreasing in descending lexicographic order.
    let as_vecs: Vec<Vec<usize>> = parts.iter().map(|t| t.parts()).collect();
    assert!(as_vecs.windows(2).all(|w| w[0] > w[1]));
}

#[test]
fn class_sizes_partition_the_symmetric_group() {
    for m in 1..=8 {
        let total: BigUint = partitions_of(m).iter().map(class_size).sum();
        assert_eq!(total, factorial(m), "classes partition S_{m}");
    }
    // Hand values in S4: type [2,2] has centralizer 2²·2! = 8, class size 3.
    let t = CycleType::new(vec![2, 2]);
    assert_eq!(centralizer_order(&t), BigUint::from(8u32));
    assert_eq!(class_size(&t), BigUint::from(3u32));
    // Type [4]: centralizer 4, class size 6.
    let t4 = CycleType::new(vec![4]);
    assert_eq!(centralizer_order(&t4), BigUint::from(4u32));
    assert_eq!(class_size(&t4), BigUint::from(6u32));
}

#[test]
fn cycle_type_display_and_union() {
    let t = CycleType::new(vec![1, 4, 2, 1]);
    assert_eq!(t.parts(), vec![4, 2, 1, 1]);
    assert_eq!(format!("{t}"), "[4,2,1,1]");
    assert_eq!(t.count_of(1), 2);
    assert_eq!(t.count_of(4), 1);
    assert_eq!(t.num_parts(), 4);
    let u = t.union(&CycleType::new(vec![3]));
    assert_eq!(u.parts(), vec![4, 3, 2, 1, 1]);
    // Multiplicities follow the stored descending part order.
    assert_eq!(t.multiplicities(), vec![(4, 1), (2, 1), (1, 2)]);
}

#[test]
fn factorials() {
    assert_eq!(factorial(0), BigUint::from(1u32));
    assert_eq!(factorial(1), BigUint::from(1u32));
    assert_eq!(factorial(5), BigUint::from(120u32));
    assert_eq!(
        factorial(20),
        BigUint::parse_bytes(b"2432902008176640000", 10).unwrap()
    );
}
