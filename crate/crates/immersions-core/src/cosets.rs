//! Exact class counting without enumeration: cycle-type profiles of the
//! acting groups and double-coset arithmetic over them.
//!
//! The number of equivalence classes of curves (all genera together) equals
//! the number of `(H, K)` double cosets in a symmetric group, which by a
//! classical counting identity is
//!
//! ```text
//!   |H\G/K| = Σ_μ  |H ∩ class μ| · |K ∩ class μ| · z_μ  / (|H|·|K|)
//! ```
//!
//! summed over cycle types `μ` of the common degree, where `z_μ` is the
//! centralizer order of the class. The sum is exact big-integer arithmetic;
//! the division always leaves remainder zero (asserted).

use crate::groups::{make_group, GroupError, GroupName, GroupSpec};
use crate::perm::{
    centralizer_order, class_size, factorial, partitions_of, CycleType, Perm,
};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Errors from profile construction and double-coset operations.
#[derive(Debug, thiserror::Error)]
pub enum CosetError {
    #[error("profiles have different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("{0} is not a prime number")]
    NotPrime(usize),
    #[error("dense double-coset listing only supported up to degree {max}, got {got}")]
    DegreeTooLargeForDense { got: usize, max: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// How many elements of a group fall in each cycle type of the symmetric
/// group it sits in. The multiset is exact (big integers) and sums to the
/// group order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassProfile {
    degree: usize,
    counts: BTreeMap<CycleType, BigUint>,
}

impl ClassProfile {
    pub fn new(degree: usize) -> ClassProfile {
        ClassProfile {
            degree,
            counts: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add(&mut self, t: CycleType, count: BigUint) {
        debug_assert_eq!(t.degree(), self.degree);
        if count.is_zero() {
            return;
        }
        *self.counts.entry(t).or_insert_with(BigUint::zero) += count;
    }

    pub fn get(&self, t: &CycleType) -> BigUint {
        self.counts.get(t).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Sum of all counts (the order of the profiled group).
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CycleType, &BigUint)> {
        self.counts.iter()
    }
}

/// Cycle-type profile of the group, as a subgroup of the symmetric group on
/// its degree.
///
/// Wreath-structured groups (`CSigma`, `CRho`) and the diagonal groups
/// (`CRhoPrime`, `CRhoPrimeExt`) use closed-form lifts over partitions, so
/// profiles stay exact far beyond materialisable sizes. The small groups on
/// points are profiled by direct enumeration. Note `make_group(CRho, 2n)` at
/// degree `4n` profiles the centralizer of a fixed-point-free involution on
/// `4n` points.
pub fn profile_of(g: &GroupSpec) -> Result<ClassProfile, CosetError> {
    let profile = match g.name {
        GroupName::CSigma => wreath_profile(g.n, 4, &|l| {
            // One block cycle of length l lifts, over the 4 rotations of the
            // block fibre, to these cycle structures on 4l points:
            let w = BigUint::from(4u32).pow((l - 1) as u32);
            vec![
                (vec![l, l, l, l], w.clone()),
                (vec![4 * l], &w * 2u32),
                (vec![2 * l, 2 * l], w),
            ]
        }),
        GroupName::CRho => wreath_profile(g.n, 2, &|l| {
            let w = BigUint::from(2u32).pow((l - 1) as u32);
            vec![(vec![l, l], w.clone()), (vec![2 * l], w)]
        }),
        GroupName::CRhoPrime => diagonal_profile(g.n, false),
        GroupName::CRhoPrimeExt => diagonal_profile(g.n, true),
        // Cyclic and dihedral groups on the 2n symbols have textbook
        // cycle-type distributions, so no materialisation is needed at any n.
        GroupName::CyclicOnPoints => {
            let mut p = ClassProfile::new(g.degree);
            add_rotation_types(&mut p, 2 * g.n, 1);
            p
        }
        GroupName::Zn => {
            // Generated by the square of the full rotation: two parallel
            // n-cycles, so each power doubles its cycle multiset.
            let mut p = ClassProfile::new(g.degree);
            add_rotation_types(&mut p, g.n, 2);
            p
        }
        GroupName::Dn => {
            // Rotation part as in `Zn`; the n reflections in this group all
            // displace every symbol (they conjugate the rotation coset), so
            // each is a product of n transpositions.
            let mut p = ClassProfile::new(g.degree);
            add_rotation_types(&mut p, g.n, 2);
            p.add(CycleType::new(vec![2; g.n]), BigUint::from(g.n as u64));
            p
        }
        GroupName::DihedralOnPoints => {
            let mut p = ClassProfile::new(g.degree);
            if g.n == 1 {
                // Degenerate: the reversal fixing symbol 1 is the identity,
                // leaving only the order-2 rotation group.
                p.add(CycleType::new(vec![1, 1]), BigUint::one());
                p.add(CycleType::new(vec![2]), BigUint::one());
            } else {
                add_rotation_types(&mut p, 2 * g.n, 1);
                // Axes through two opposite symbols (n of them) fix those two;
                // axes through gaps (the other n) fix nothing.
                let mut through = vec![2; g.n - 1];
                through.extend_from_slice(&[1, 1]);
                p.add(CycleType::new(through), BigUint::from(g.n as u64));
                p.add(CycleType::new(vec![2; g.n]), BigUint::from(g.n as u64));
            }
            p
        }
    };
    assert_eq!(
        profile.total(),
        g.order,
        "profile of {:?} does not sum to the group order",
        g.name
    );
    Ok(profile)
}

/// Profile of a wreath-type centralizer: elements are a base permutation `u`
/// of the `n` blocks together with a fibre rotation over each point; a
/// `u`-cycle of length `l` contributes, independently of the rest, one of the
/// cycle structures returned by `branch(l)`, weighted by how many fibre
/// choices produce it.
fn wreath_profile(
    n: usize,
    fibre: usize,
    branch: &dyn Fn(usize) -> Vec<(Vec<usize>, BigUint)>,
) -> ClassProfile {
    let degree = fibre * n;
    let mut profile = ClassProfile::new(degree);
    for lambda in partitions_of(n) {
        let weight = class_size(&lambda); // number of base permutations of this type
        // Convolve the per-cycle branch distributions over all parts.
        let mut acc: BTreeMap<Vec<usize>, BigUint> = BTreeMap::new();
        acc.insert(Vec::new(), weight);
        for part in lambda.parts() {
            let options = branch(part);
            let mut next: BTreeMap<Vec<usize>, BigUint> = BTreeMap::new();
            for (parts_so_far, count) in &acc {
                for (added, mult) in &options {
                    let mut merged = parts_so_far.clone();
                    merged.extend_from_slice(added);
                    merged.sort_unstable_by(|a, b| b.cmp(a));
                    *next.entry(merged).or_insert_with(BigUint::zero) += count * mult;
                }
            }
            acc = next;
        }
        for (parts, count) in acc {
            profile.add(CycleType::new(parts), count);
        }
    }
    profile
}

/// Add the cycle types of the powers of an `m`-cycle, each repeated `copies`
/// times in parallel: for every divisor `d` of `m` there are φ(m/d) powers
/// whose type is `d·copies` cycles of length `m/d`.
fn add_rotation_types(profile: &mut ClassProfile, m: usize, copies: usize) {
    for d in 1..=m {
        if !m.is_multiple_of(d) {
            continue;
        }
        let count = euler_phi((m / d) as u64);
        profile.add(
            CycleType::new(vec![m / d; d * copies]),
            BigUint::from(count),
        );
    }
}

/// Euler's totient by trial division; inputs here are tiny.
fn euler_phi(mut m: u64) -> u64 {
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut pk = 1u64;
            while m.is_multiple_of(p) {
                m /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if m > 1 {
        phi *= m - 1;
    }
    phi
}

/// Profile of the diagonal group (pairs moved rigidly, no flips): an element
/// built from `u ∈ Sₙ` of type `λ` has type `λ ∪ λ` on the `2n` points. With
/// `extended`, the coset obtained by post-composing with the pair swap is
/// included: there a `u`-cycle of odd length `l` yields one `2l`-cycle, and a
/// `u`-cycle of even length `l` yields two `l`-cycles.
fn diagonal_profile(n: usize, extended: bool) -> ClassProfile {
    let degree = 2 * n;
    let mut profile = ClassProfile::new(degree);
    for lambda in partitions_of(n) {
        let weight = class_size(&lambda);
        profile.add(lambda.union(&lambda), weight.clone());
        if extended {
            let mut parts = Vec::new();
            for l in lambda.parts() {
                if l % 2 == 1 {
                    parts.push(2 * l);
                } else {
                    parts.push(l);
                    parts.push(l);
                }
            }
            profile.add(CycleType::new(parts), weight);
        }
    }
    profile
}

/// Number of `(H, K)` double cosets in the symmetric group of the common
/// degree, from the two cycle-type profiles. Exact; panics if the final
/// division is not exact (which would indicate an invalid profile).
pub fn frobenius_count(h: &ClassProfile, k: &ClassProfile) -> Result<BigUint, CosetError> {
    if h.degree() != k.degree() {
        return Err(CosetError::DegreeMismatch(h.degree(), k.degree()));
    }
    let mut numerator = BigUint::zero();
    for (t, hc) in h.iter() {
        let kc = k.get(t);
        if kc.is_zero() {
            continue;
        }
        numerator += hc * kc * centralizer_order(t);
    }
    let denominator = h.total() * k.total();
    let (q, r) = num_integer::Integer::div_rem(&numerator, &denominator);
    assert!(
        r.is_zero(),
        "double-coset count is not an integer; a profile is inconsistent"
    );
    Ok(q)
}

/// The four base equivalence kinds: the first letter says whether the curve
/// keeps its orientation (`O`) or forgets it (`U`), the second says the same
/// for the ambient surface.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseKind {
    OO,
    UO,
    OU,
    UU,
}

impl BaseKind {
    pub const ALL: [BaseKind; 4] = [BaseKind::OO, BaseKind::UO, BaseKind::OU, BaseKind::UU];

    pub fn as_str(&self) -> &'static str {
        match self {
            BaseKind::OO => "oo",
            BaseKind::UO => "uo",
            BaseKind::OU => "ou",
            BaseKind::UU => "uu",
        }
    }
}

impl std::fmt::Display for BaseKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Total number of equivalence classes of closed curves with `n` double
/// points over all genera, for the given kind. Pure profile arithmetic:
/// the acting pair is (rotations of the parametrisation, rigid pair moves),
/// extended by reversal for an unoriented curve and by the pair swap for an
/// unoriented surface.
pub fn count_total_immersions(kind: BaseKind, n: usize) -> Result<BigUint, CosetError> {
    let h_name = match kind {
        BaseKind::OO | BaseKind::OU => GroupName::CyclicOnPoints,
        BaseKind::UO | BaseKind::UU => GroupName::DihedralOnPoints,
    };
    let k_name = match kind {
        BaseKind::OO | BaseKind::UO => GroupName::CRhoPrime,
        BaseKind::OU | BaseKind::UU => GroupName::CRhoPrimeExt,
    };
    let h = profile_of(&make_group(h_name, n)?)?;
    let k = profile_of(&make_group(k_name, n)?)?;
    frobenius_count(&h, &k)
}

/// Total number of classes of `n`-vertex four-valent maps (any number of
/// curve components) on oriented surfaces, up to map isomorphism forgetting
/// the curve orientations: double cosets of the half-edge rotation group
/// against the centralizer of an edge pairing on `4n` points.
pub fn count_quad_map_classes(n: usize) -> Result<BigUint, CosetError> {
    let h = profile_of(&make_group(GroupName::CSigma, n)?)?;
    let k = profile_of(&make_group(GroupName::CRho, 2 * n)?)?;
    frobenius_count(&h, &k)
}

/// Maximum degree for the dense double-coset listing.
pub const DENSE_DOUBLE_COSET_MAX_DEGREE: usize = 8;

/// One representative per `(H, K)` double coset of the symmetric group on
/// the common degree: the lexicographically smallest element of each coset,
/// listed in increasing order. Dense scan, so limited to degree ≤ 8.
pub fn double_coset_representatives(
    h: &GroupSpec,
    k: &GroupSpec,
) -> Result<Vec<Perm>, CosetError> {
    if h.degree != k.degree {
        return Err(CosetError::DegreeMismatch(h.degree, k.degree));
    }
    let d = h.degree;
    if d > DENSE_DOUBLE_COSET_MAX_DEGREE {
        return Err(CosetError::DegreeTooLargeForDense {
            got: d,
            max: DENSE_DOUBLE_COSET_MAX_DEGREE,
        });
    }
    let size: u64 = crate::perm::factorial_u64(d);
    let h_elems = h.elements()?;
    let k_elems = k.elements()?;
    let mut seen = vec![false; size as usize];
    let mut reps = Vec::new();
    for rank in 0..size {
        if seen[rank as usize] {
            continue;
        }
        let g = perm_unrank_u64(rank, d);
        reps.push(g.clone());
        let g_sp = crate::small::SPerm::from_perm(&g);
        let mut hg = crate::small::SPerm::identity(d);
        let mut hgk = crate::small::SPerm::identity(d);
        for he in h_elems {
            he.compose_into(&g_sp, &mut hg);
            for ke in k_elems {
                hg.compose_into(ke, &mut hgk);
                let r = crate::small::lehmer_rank(&hgk.a[..d]);
                seen[r as usize] = true;
            }
        }
    }
    Ok(reps)
}

fn perm_unrank_u64(rank: u64, degree: usize) -> Perm {
    let mut word = [0u8; crate::small::SP_MAX];
    crate::small::lehmer_unrank(rank, degree, &mut word);
    Perm::from_image_table(word[..degree].to_vec())
}

/// Trial-division primality for the tiny range this crate works in.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Closed form for the total number of orientation-preserving classes (all
/// genera) when `n` is prime: `(n − 1) + (2n − 1)!/n!`. Errors on composite
/// `n`, where the closed form does not apply.
pub fn prime_n_orbit_formula(n: usize) -> Result<BigUint, CosetError> {
    if !is_prime(n) {
        return Err(CosetError::NotPrime(n));
    }
    let (q, r) = num_integer::Integer::div_rem(&factorial(2 * n - 1), &factorial(n));
    debug_assert!(r.is_zero());
    Ok(BigUint::from(n - 1) + q)
}
