//! Oracle tests for the symmetry groups: fixed permutations, exact orders,
//! materialised element lists, and degenerate small cases.

use immersions_core::groups::{
    closure_of, edge_rotation, full_reversal, gauge_rotation, is_trivial, make_group,
    passage_pairing, quad_rotation, reversal_fixing_one, GroupName,
};
use immersions_core::{factorial, Perm};
use num_bigint::BigUint;

#[test]
fn fixed_permutations_by_hand() {
    assert_eq!(quad_rotation(2).to_cycle_string(), "(1,2,3,4)(5,6,7,8)");
    assert_eq!(passage_pairing(3).to_cycle_string(), "(1,2)(3,4)(5,6)");
    assert_eq!(edge_rotation(2).one_line(), vec![2, 3, 4, 1]);
    assert_eq!(full_reversal(2).one_line(), vec![4, 3, 2, 1]);
    assert_eq!(reversal_fixing_one(2).one_line(), vec![1, 4, 3, 2]);
    assert_eq!(reversal_fixing_one(3).one_line(), vec![1, 6, 5, 4, 3, 2]);
    // The gauge rotation shifts even positions forward and odd positions
    // backward by one crossing (1-based: odd points are even 0-based slots).
    assert_eq!(gauge_rotation(2).to_cycle_string(), "(1,3)(2,4)");
    assert_eq!(gauge_rotation(3).one_line(), vec![3, 6, 5, 2, 1, 4]);
    // Degenerate n = 1: the reversal fixing one point is the identity.
    assert!(reversal_fixing_one(1).is_identity());
}

#[test]
fn group_orders_match_formulas() {
    for n in 1..=4usize {
        let two_n = BigUint::from(2u32).pow(n as u32);
        let four_n = BigUint::from(4u32).pow(n as u32);
        assert_eq!(
            make_group(GroupName::CSigma, n).unwrap().order,
            four_n * factorial(n)
        );
        assert_eq!(
            make_group(GroupName::CRho, n).unwrap().order,
            two_n * factorial(n)
        );
        assert_eq!(make_group(GroupName::CRhoPrime, n).unwrap().order, factorial(n));
        assert_eq!(
            make_group(GroupName::CRhoPrimeExt, n).unwrap().order,
            factorial(n) * 2u32
        );
        assert_eq!(make_group(GroupName::Zn, n).unwrap().order, BigUint::from(n));
        assert_eq!(
            make_group(GroupName::Dn, n).unwrap().order,
            BigUint::from(2 * n)
        );
        assert_eq!(
            make_group(GroupName::CyclicOnPoints, n).unwrap().order,
            BigUint::from(2 * n)
        );
        let dihedral = make_group(GroupName::DihedralOnPoints, n).unwrap();
        let expected = if n == 1 { 2usize } else { 4 * n };
        assert_eq!(dihedral.order, BigUint::from(expected));
    }
    assert!(is_trivial(&make_group(GroupName::Zn, 1).unwrap()));
    assert!(is_trivial(&make_group(GroupName::CRhoPrime, 1).unwrap()));
    assert!(make_group(GroupName::CSigma, 0).is_err());
}

#[test]
fn degrees_are_consistent() {
    for n in 1..=5usize {
        assert_eq!(make_group(GroupName::CSigma, n).unwrap().degree, 4 * n);
        for name in [
            GroupName::CRho,
            GroupName::CRhoPrime,
            GroupName::CRhoPrimeExt,
            GroupName::Dn,
            GroupName::Zn,
            GroupName::CyclicOnPoints,
            GroupName::DihedralOnPoints,
        ] {
            assert_eq!(make_group(name, n).unwrap().degree, 2 * n);
        }
    }
}

#[test]
fn materialised_elements_match_order() {
    for n in 1..=3usize {
        for name in [
            GroupName::CSigma,
            GroupName::CRho,
            GroupName::CRhoPrime,
            GroupName::CRhoPrimeExt,
            GroupName::Dn,
            GroupName::Zn,
            GroupName::CyclicOnPoints,
            GroupName::DihedralOnPoints,
        ] {
            let g = make_group(name, n).unwrap();
            let count = g.materialised_order().unwrap();
            assert_eq!(BigUint::from(count), g.order, "{name:?} at n={n}");
        }
    }
}

#[test]
fn generators_are_members_and_closure_is_group() {
    // The closure of S3 transpositions is all 6 permutations.
    let t1 = Perm::from_cycles(&[vec![1, 2]], 3).unwrap();
    let t2 = Perm::from_cycles(&[vec![2, 3]], 3).unwrap();
    let s3 = closure_of(&[t1, t2]);
    assert_eq!(s3.len(), 6);
    // Closure contains the identity and is closed under composition.
    assert!(s3.iter().any(Perm::is_identity));
    for a in &s3 {
        for b in &s3 {
            assert!(s3.contains(&a.compose(b)));
        }
    }
}

#[test]
fn wreath_group_membership_spot_checks() {
    // The pairing-preserving group contains the pairing itself and every
    // block permutation, but not the edge rotation (which breaks pairs).
    let crho = make_group(GroupName::CRho, 2).unwrap();
    let elements = closure_of(&crho.generators);
    assert_eq!(elements.len(), 8);
    assert!(elements.contains(&passage_pairing(2)));
    assert!(!elements.contains(&edge_rotation(2)));
    // The quadruple-preserving group contains the quarter turn.
    let csigma = make_group(GroupName::CSigma, 2).unwrap();
    let elements = closure_of(&csigma.generators);
    assert_eq!(elements.len(), 32);
    assert!(elements.contains(&quad_rotation(2)));
    // The dihedral gauge group contains the double rotation and the
    // reversal, and they generate exactly 2n elements.
    let dn = make_group(GroupName::Dn, 3).unwrap();
    let elements = closure_of(&dn.generators);
    assert_eq!(elements.len(), 6);
    let beta2 = edge_rotation(3).compose(&edge_rotation(3));
    assert!(elements.contains(&beta2));
    assert!(elements.contains(&full_reversal(3)));
}

#[test]
fn materialisation_cap_is_enforced() {
    // 4^10 · 10! far exceeds the cap; the order is still exact.
    let g = make_group(GroupName::CSigma, 10).unwrap();
    assert_eq!(g.order, BigUint::from(4u32).pow(10) * factorial(10));
    assert!(g.materialised_order().is_err());
    // Degree beyond the kernel maximum cannot be materialised either.
    let wide = make_group(GroupName::CRhoPrime, 11).unwrap();
    assert_eq!(wide.degree, 22);
    assert!(wide.materialised_order().is_err());
    // Within both caps, materialisation succeeds.
    let ok = make_group(GroupName::CRhoPrime, 9).unwrap();
    assert_eq!(ok.materialised_order().unwrap(), 362880);
}
