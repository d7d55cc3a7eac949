//! Oracle tests for conjugacy-class profiles, the exact double-coset
//! counting formula, and double-coset representative listings.
//!
//! Profile oracles are computed by brute-force element enumeration of the
//! materialised groups, entirely independent of the closed-form profile
//! construction.

use immersions_core::cosets::{
    count_quad_map_classes, count_total_immersions, double_coset_representatives, frobenius_count,
    is_prime, prime_n_orbit_formula, profile_of, BaseKind, ClassProfile,
};
use immersions_core::groups::{closure_of, make_group, GroupName};
use immersions_core::{factorial, CycleType, Perm};
use num_bigint::BigUint;
use std::collections::BTreeMap;

fn enumerated_profile(name: GroupName, n: usize) -> ClassProfile {
    let g = make_group(name, n).unwrap();
    let mut p = ClassProfile::new(g.degree);
    for e in closure_of(&g.generators) {
        p.add(e.cycle_type(), BigUint::from(1u32));
    }
    p
}

fn profiles_equal(a: &ClassProfile, b: &ClassProfile) -> bool {
    let to_map = |p: &ClassProfile| -> BTreeMap<CycleType, BigUint> {
        p.iter().map(|(t, c)| (t.clone(), c.clone())).collect()
    };
    to_map(a) == to_map(b)
}

#[test]
fn closed_form_profiles_match_enumeration() {
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
            let computed = profile_of(&make_group(name, n).unwrap()).unwrap();
            let brute = enumerated_profile(name, n);
            assert!(
                profiles_equal(&computed, &brute),
                "profile mismatch for {name:?} at n={n}"
            );
        }
    }
    // One deeper case for each wreath-style construction.
    for name in [GroupName::CSigma, GroupName::CRho, GroupName::CRhoPrimeExt] {
        let computed = profile_of(&make_group(name, 4).unwrap()).unwrap();
        let brute = enumerated_profile(name, 4);
        assert!(profiles_equal(&computed, &brute), "{name:?} at n=4");
    }
}

#[test]
fn profile_totals_equal_group_orders() {
    for n in 1..=6usize {
        for name in [
            GroupName::CSigma,
            GroupName::CRho,
            GroupName::CRhoPrime,
            GroupName::CRhoPrimeExt,
            GroupName::Dn,
            GroupName::Zn,
        ] {
            let g = make_group(name, n).unwrap();
            assert_eq!(profile_of(&g).unwrap().total(), g.order, "{name:?} n={n}");
        }
    }
}

#[test]
fn hand_checked_small_profiles() {
    // Pairing-preserving group at n=1: {identity, the pairing}.
    let p = profile_of(&make_group(GroupName::CRho, 1).unwrap()).unwrap();
    assert_eq!(p.get(&CycleType::new(vec![1, 1])), BigUint::from(1u32));
    assert_eq!(p.get(&CycleType::new(vec![2])), BigUint::from(1u32));
    // Block-diagonal group at n=2 acting on 4 points: identity and the
    // double transposition (1,3)(2,4).
    let p = profile_of(&make_group(GroupName::CRhoPrime, 2).unwrap()).unwrap();
    assert_eq!(p.get(&CycleType::new(vec![1; 4])), BigUint::from(1u32));
    assert_eq!(p.get(&CycleType::new(vec![2, 2])), BigUint::from(1u32));
    // Its extension adds the pairing (1,2)(3,4) and the swap-then-pair
    // element (1,4)(2,3), completing a Klein four-group: three double
    // transpositions, no 4-cycles.
    let p = profile_of(&make_group(GroupName::CRhoPrimeExt, 2).unwrap()).unwrap();
    assert_eq!(p.get(&CycleType::new(vec![2, 2])), BigUint::from(3u32));
    assert_eq!(p.get(&CycleType::new(vec![4])), BigUint::from(0u32));
    assert_eq!(p.total(), BigUint::from(4u32));
}

#[test]
fn frobenius_hand_values() {
    // Totals for two crossings, all four kinds, against hand computation.
    let expect = |kind: BaseKind, n: usize, v: u64| {
        assert_eq!(
            count_total_immersions(kind, n).unwrap(),
            BigUint::from(v),
            "{} at n={n}",
            kind.as_str()
        );
    };
    expect(BaseKind::OO, 1, 1);
    expect(BaseKind::UO, 1, 1);
    expect(BaseKind::OU, 1, 1);
    expect(BaseKind::UU, 1, 1);
    expect(BaseKind::OO, 2, 4);
    expect(BaseKind::UO, 2, 3);
    expect(BaseKind::OU, 2, 3);
    expect(BaseKind::UU, 2, 3);
    expect(BaseKind::OO, 3, 22);
    expect(BaseKind::OO, 4, 218);
    expect(BaseKind::OO, 5, 3028);
}

#[test]
fn quad_map_class_counts() {
    let expected: [u64; 6] = [2, 10, 54, 491, 6430, 119475];
    for (i, &v) in expected.iter().enumerate() {
        assert_eq!(
            count_quad_map_classes(i + 1).unwrap(),
            BigUint::from(v),
            "n={}",
            i + 1
        );
    }
}

#[test]
fn frobenius_is_symmetric_and_exact() {
    // |H\G/K| = |K\G/H| (inversion bijection); the formula must give the
    // same integer with the arguments swapped.
    for n in 1..=5usize {
        let h = profile_of(&make_group(GroupName::CyclicOnPoints, n).unwrap()).unwrap();
        let k = profile_of(&make_group(GroupName::CRhoPrime, n).unwrap()).unwrap();
        assert_eq!(
            frobenius_count(&h, &k).unwrap(),
            frobenius_count(&k, &h).unwrap()
        );
    }
}

#[test]
fn frobenius_against_brute_force_double_cosets() {
    // Independent oracle: enumerate double cosets H\S_m/K by marking.
    for n in [1usize, 2] {
        let h_group = make_group(GroupName::CyclicOnPoints, n).unwrap();
        let k_group = make_group(GroupName::CRhoPrime, n).unwrap();
        let h_elems = closure_of(&h_group.generators);
        let k_elems = closure_of(&k_group.generators);
        let m = 2 * n;
        // All permutations of degree m via repeated next-permutation.
        let mut all: Vec<Perm> = Vec::new();
        let mut images: Vec<usize> = (1..=m).collect();
        loop {
            all.push(Perm::from_one_line(&images).unwrap());
            // next lexicographic permutation
            let Some(i) = (0..m - 1).rev().find(|&i| images[i] < images[i + 1]) else {
                break;
            };
            let j = (i + 1..m).rev().find(|&j| images[j] > images[i]).unwrap();
            images.swap(i, j);
            images[i + 1..].reverse();
        }
        let mut seen: std::collections::HashSet<Perm> = std::collections::HashSet::new();
        let mut cosets = 0u64;
        for g in &all {
            if seen.contains(g) {
                continue;
            }
            cosets += 1;
            for h in &h_elems {
                let hg = h.compose(g);
                for k in &k_elems {
                    seen.insert(hg.compose(k));
                }
            }
        }
        let h = profile_of(&h_group).unwrap();
        let k = profile_of(&k_group).unwrap();
        assert_eq!(frobenius_count(&h, &k).unwrap(), BigUint::from(cosets));
    }
}

#[test]
fn double_coset_representatives_cover_everything() {
    // Representatives are canonical (lex-least in their double coset),
    // distinct, and as many as the formula says.
    for n in [1usize, 2] {
        let h = make_group(GroupName::CyclicOnPoints, n).unwrap();
        let k = make_group(GroupName::CRhoPrime, n).unwrap();
        let reps = double_coset_representatives(&h, &k).unwrap();
        let expected = frobenius_count(
            &profile_of(&h).unwrap(),
            &profile_of(&k).unwrap(),
        )
        .unwrap();
        assert_eq!(BigUint::from(reps.len()), expected);
        // Sorted and unique.
        for w in reps.windows(2) {
            assert!(w[0] < w[1] || w[0].one_line() < w[1].one_line());
        }
    }
    // Degree beyond the dense limit is refused.
    let h = make_group(GroupName::CyclicOnPoints, 5).unwrap();
    let k = make_group(GroupName::CRhoPrime, 5).unwrap();
    assert!(double_coset_representatives(&h, &k).is_err());
}

#[test]
fn primality_and_closed_form() {
    let primes: Vec<usize> = (0..=25).filter(|&n| is_prime(n)).collect();
    assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23]);
    assert!(prime_n_orbit_formula(4).is_err());
    // (n−1) + (2n−1)!/n! equals the total count at prime n.
    for n in [2usize, 3, 5, 7, 11, 13] {
        assert_eq!(
            prime_n_orbit_formula(n).unwrap(),
            count_total_immersions(BaseKind::OO, n).unwrap(),
            "n={n}"
        );
    }
    // Explicit value at n=5: 4 + 9!/120 = 4 + 3024 = 3028.
    assert_eq!(prime_n_orbit_formula(5).unwrap(), BigUint::from(3028u32));
}

#[test]
fn totals_table_spot_checks() {
    // Larger totals, including one needing big integers.
    assert_eq!(
        count_total_immersions(BaseKind::OO, 10).unwrap(),
        BigUint::from(33522177088u64)
    );
    assert_eq!(
        count_total_immersions(BaseKind::OO, 20).unwrap(),
        BigUint::parse_bytes(b"8384177419658944198600637096", 10).unwrap()
    );
    // At prime n=19 the closed form gives the same value from pure
    // factorial arithmetic: 18 + 37!/19!.
    assert_eq!(
        count_total_immersions(BaseKind::OO, 19).unwrap(),
        BigUint::from(18u32) + factorial(37) / factorial(19)
    );
}
