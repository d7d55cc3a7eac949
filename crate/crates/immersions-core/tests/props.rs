//! Randomized invariants: permutation algebra, rank/unrank bijections,
//! genus bounds and conversion consistency on random codes, orbit-stabilizer
//! arithmetic, and involution behaviour at code level.

use std::sync::OnceLock;

use immersions_core::census::{
    bicolourable_genus_table, involution_image, CensusConfig, Involution, Method,
};
use immersions_core::encodings::{
    convert_u_to_y, convert_x_to_y, psi_of, u_enumerate, x_classify, y_classify, z_genus,
    CodeError, UCode, XCode, YCode, ZCode,
};
use immersions_core::groups::{make_group, GroupName};
use immersions_core::orbits::orbit_of;
use immersions_core::{centralizer_order, class_size, factorial, perm_rank, perm_unrank, Perm};
use num_bigint::BigUint;
use proptest::prelude::*;

fn fact_u64(d: usize) -> u64 {
    (1..=d as u64).product()
}

/// Uniform permutation of the given degree via its lexicographic rank.
fn perm_of_rank(d: usize, r: u64) -> Perm {
    perm_unrank(&BigUint::from(r), d).unwrap()
}

/// Uniform fixed-point-free involution on `m` points (m even), built by
/// pairing the smallest unmatched point with a random other.
fn arb_pairing(m: usize) -> impl Strategy<Value = Perm> {
    proptest::collection::vec(any::<prop::sample::Index>(), m / 2).prop_map(move |choices| {
        let mut remaining: Vec<usize> = (1..=m).collect();
        let mut cycles = Vec::with_capacity(m / 2);
        for pick in choices {
            let a = remaining.remove(0);
            let b = remaining.remove(pick.index(remaining.len()));
            cycles.push(vec![a, b]);
        }
        Perm::from_cycles(&cycles, m).unwrap()
    })
}

/// Uniform full cycle on `1..=m` written with 1 first.
fn arb_full_cycle(m: usize) -> impl Strategy<Value = Perm> {
    Just((2..=m).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(move |rest| {
            let mut cycle = vec![1];
            cycle.extend(rest);
            Perm::from_cycles(&[cycle], m).unwrap()
        })
}

fn gauge_codes(n: usize) -> &'static [UCode] {
    static CACHE: OnceLock<Vec<Vec<UCode>>> = OnceLock::new();
    &CACHE.get_or_init(|| {
        (0..=5)
            .map(|k| if k == 0 { Vec::new() } else { u_enumerate(k).unwrap() })
            .collect()
    })[n]
}

fn arb_gauge() -> impl Strategy<Value = &'static UCode> {
    (1usize..=5).prop_flat_map(|n| {
        let codes = gauge_codes(n);
        (0..codes.len()).prop_map(move |i| &codes[i])
    })
}

proptest! {
    #[test]
    fn perm_algebra(
        (d, rp, rq, rr) in (1usize..=9).prop_flat_map(|d| {
            let f = fact_u64(d);
            (Just(d), 0..f, 0..f, 0..f)
        })
    ) {
        let p = perm_of_rank(d, rp);
        let q = perm_of_rank(d, rq);
        let r = perm_of_rank(d, rr);
        let id = Perm::identity(d);

        prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
        prop_assert_eq!(p.compose(&p.inverse()), id.clone());
        prop_assert_eq!(p.inverse().compose(&p), id.clone());
        prop_assert_eq!(p.compose(&q).inverse(), q.inverse().compose(&p.inverse()));
        prop_assert_eq!(p.compose(&id), p.clone());

        prop_assert_eq!(p.pow(3), p.compose(&p).compose(&p));
        prop_assert_eq!(p.pow(-2), p.compose(&p).inverse());
        prop_assert_eq!(p.pow(0), id);

        // Conjugation: cycle type is invariant and the maps chain together.
        prop_assert_eq!(p.conjugate_by(&q).cycle_type(), p.cycle_type());
        prop_assert_eq!(
            p.conjugate_by(&q).conjugate_by(&r),
            p.conjugate_by(&r.compose(&q))
        );

        // One-line form is a bijection onto 1..=d and round-trips.
        let mut images = p.one_line();
        prop_assert_eq!(Perm::from_one_line(&images).unwrap(), p.clone());
        images.sort_unstable();
        prop_assert_eq!(images, (1..=d).collect::<Vec<_>>());
    }

    #[test]
    fn rank_unrank_bijection(
        (d, r) in (1usize..=9).prop_flat_map(|d| (Just(d), 0..fact_u64(d)))
    ) {
        let p = perm_of_rank(d, r);
        prop_assert_eq!(perm_rank(&p), BigUint::from(r));
        // Ranks only cover 0..d!.
        prop_assert!(BigUint::from(r) < factorial(d));
    }

    #[test]
    fn cycle_type_arithmetic(
        (d, r) in (1usize..=9).prop_flat_map(|d| (Just(d), 0..fact_u64(d)))
    ) {
        let p = perm_of_rank(d, r);
        let t = p.cycle_type();
        prop_assert_eq!(t.degree(), d);
        prop_assert_eq!(t.num_parts(), p.cycle_count());
        prop_assert_eq!(t.num_parts(), p.cycles().len());
        prop_assert_eq!(p.inverse().cycle_type(), t.clone());
        // Orbit-stabilizer inside the full symmetric group.
        prop_assert_eq!(class_size(&t) * centralizer_order(&t), factorial(d));
    }

    #[test]
    fn pairing_codes_classify_and_convert(
        (n, tau) in (1usize..=5).prop_flat_map(|n| (Just(n), arb_pairing(4 * n)))
    ) {
        let code = XCode::new(n, tau).unwrap();
        match x_classify(&code) {
            None => {} // more than one curve component
            Some(g) => {
                prop_assert!(2 * g <= n + 1, "genus {g} too large for n={n}");
                match convert_x_to_y(&code) {
                    Ok(y) => prop_assert_eq!(y_classify(&y), Some(g)),
                    Err(e) => {
                        prop_assert!(g >= 1, "planar single curves always convert");
                        prop_assert!(matches!(e, CodeError::NotBicolourable));
                    }
                }
            }
        }
    }

    #[test]
    fn visit_orders_classify(
        (n, pi) in (1usize..=6).prop_flat_map(|n| (Just(n), arb_full_cycle(2 * n)))
    ) {
        let code = ZCode::new(n, pi.clone()).unwrap();
        let g = z_genus(&code);
        prop_assert!(2 * g <= n + 1, "genus {g} too large for n={n}");
        prop_assert_eq!(psi_of(&code).cycle_count(), n + 2 - 2 * g);

        // Both involutions produce valid same-genus codes and settle back
        // to the original after two applications.
        for inv in [Involution::Mirror, Involution::Reverse] {
            let img = involution_image(Method::Z, inv, n, &pi).unwrap();
            let img_code = ZCode::new(n, img.clone()).unwrap();
            prop_assert_eq!(z_genus(&img_code), g);
            let back = involution_image(Method::Z, inv, n, &img).unwrap();
            prop_assert_eq!(back, pi.clone());
        }
    }

    #[test]
    fn gauge_codes_convert_and_act(u in arb_gauge()) {
        let n = u.n;
        let sigma = u.sigma();

        // The gauge code is itself a valid white-face code of equal genus,
        // and σ determines the code.
        let g = u.genus();
        prop_assert_eq!(y_classify(&YCode::new(n, sigma.clone()).unwrap()), Some(g));
        prop_assert_eq!(y_classify(&convert_u_to_y(u)), Some(g));
        prop_assert_eq!(&UCode::from_sigma(n, &sigma).unwrap(), u);

        // Code-level involutions stay inside the gauge slice and preserve
        // genus; the mirror is an exact element-level involution.
        for inv in [Involution::Swap, Involution::Mirror, Involution::Reverse] {
            let img = involution_image(Method::UCyclic, inv, n, &sigma).unwrap();
            let img_code = UCode::from_sigma(n, &img).unwrap();
            prop_assert_eq!(img_code.genus(), g, "{:?} changed genus", inv);
        }
        let mirrored = involution_image(Method::UCyclic, Involution::Mirror, n, &sigma).unwrap();
        prop_assert_eq!(
            involution_image(Method::UCyclic, Involution::Mirror, n, &mirrored).unwrap(),
            sigma.clone()
        );

        // White-face involutions applied to σ give valid same-genus codes.
        for inv in [Involution::Swap, Involution::Mirror] {
            let img = involution_image(Method::Y, inv, n, &sigma).unwrap();
            prop_assert_eq!(y_classify(&YCode::new(n, img).unwrap()), Some(g));
        }
    }

    #[test]
    fn orbit_stabilizer_arithmetic(
        (u, dihedral) in (arb_gauge(), any::<bool>())
    ) {
        let n = u.n;
        let sigma = u.sigma();
        let name = if dihedral { GroupName::Dn } else { GroupName::Zn };
        let group = make_group(name, n).unwrap();
        let orbit = orbit_of(&sigma, &group).unwrap();

        prop_assert!(orbit.members.contains(&sigma));
        prop_assert_eq!(orbit.members.len() as u64, orbit.summary.len);
        prop_assert_eq!(&orbit.summary.canonical, &orbit.members[0]);
        let order = group.order_u64().unwrap();
        prop_assert_eq!(orbit.summary.len * orbit.summary.stabilizer_order, order);

        // Every member generates the same orbit.
        let last = orbit.members.last().unwrap();
        let again = orbit_of(last, &group).unwrap();
        prop_assert_eq!(again.members, orbit.members);
    }
}

#[test]
fn coloured_count_identities() {
    // Colour-swap structure forces exact 2:1 or 1:1 relations between the
    // coloured and colourable columns, with the pattern set by the parity
    // of the crossing count. Checked row by row.
    let cfg = CensusConfig::default();
    for n in 1..=6usize {
        let table = bicolourable_genus_table(n, None, &cfg).unwrap();
        for (g, r) in &table {
            assert_eq!(r.ooc, 2 * r.oob, "ooc/oob at n={n} g={g}");
            if n % 2 == 0 {
                assert_eq!(r.uoc, r.oob, "uoc/oob at n={n} g={g}");
                assert_eq!(r.ouc, 2 * r.oub, "ouc/oub at n={n} g={g}");
                assert_eq!(r.uuc, r.oub, "uuc/oub at n={n} g={g}");
            } else {
                assert_eq!(r.uoc, 2 * r.uob, "uoc/uob at n={n} g={g}");
                assert_eq!(r.ouc, r.oob, "ouc/oob at n={n} g={g}");
                assert_eq!(r.uuc, r.uob, "uuc/uob at n={n} g={g}");
            }
        }
    }
}
