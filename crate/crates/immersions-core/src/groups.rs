//! The finite groups whose conjugation actions define curve equivalence,
//! given as generator sets with exact orders, plus the fixed permutations
//! (rotations, pairings, reversals) every encoding is built from.
//!
//! Degrees follow the encodings: a curve with `n` crossings is encoded either
//! on `4n` points (four half-edges per crossing) or on `2n` points (two
//! passages per crossing, or the `2n` edges walked in parametrisation order).

use crate::perm::{factorial, Perm};
use crate::small::SPerm;
use num_bigint::BigUint;
use num_traits::One;
use std::sync::OnceLock;

/// Errors from group construction and materialisation.
#[derive(Debug, thiserror::Error)]
pub enum GroupError {
    #[error("group of order {order} exceeds the materialisation cap {cap}")]
    TooLargeToMaterialise { order: BigUint, cap: u64 },
    #[error("group parameter n must be at least 1")]
    EmptyGroup,
    #[error("degree {degree} exceeds the kernel maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },
}

/// Elements beyond this are never materialised as an explicit list.
pub const MATERIALISE_CAP: u64 = 2_000_000;

// ---------------------------------------------------------------------------
// Fixed permutations used throughout the encodings.
// ---------------------------------------------------------------------------

/// The half-edge rotation on `4n` points: the four half-edges of crossing
/// `a` are `4a−3, …, 4a` (1-based) in clockwise order, and this permutation
/// rotates each quadruple one step: `(1,2,3,4)(5,6,7,8)…`.
pub fn quad_rotation(n: usize) -> Perm {
    let mut img: Vec<u8> = Vec::with_capacity(4 * n);
    for a in 0..n {
        for j in 0..4 {
            img.push((4 * a + (j + 1) % 4) as u8);
        }
    }
    Perm::from_image_table(img)
}

/// The passage pairing on `2n` points: `(1,2)(3,4)…` pairs the two passages
/// of each crossing.
pub fn passage_pairing(n: usize) -> Perm {
    let mut img: Vec<u8> = Vec::with_capacity(2 * n);
    for a in 0..n {
        img.push((2 * a + 1) as u8);
        img.push((2 * a) as u8);
    }
    Perm::from_image_table(img)
}

/// The edge rotation on `2n` points: the full cycle `(1,2,…,2n)` advancing
/// each edge to the next one along the curve's parametrisation.
pub fn edge_rotation(n: usize) -> Perm {
    let m = 2 * n;
    Perm::from_image_table((0..m).map(|i| ((i + 1) % m) as u8).collect())
}

/// The reversal `i ↦ 2n+1−i` on `2n` points (runs the parametrisation
/// backwards).
pub fn full_reversal(n: usize) -> Perm {
    let m = 2 * n;
    Perm::from_image_table((0..m).map(|i| (m - 1 - i) as u8).collect())
}

/// The reversal fixing point 1: `(2,2n)(3,2n−1)…` on `2n` points.
pub fn reversal_fixing_one(n: usize) -> Perm {
    let m = 2 * n;
    Perm::from_image_table((0..m).map(|i| if i == 0 { 0 } else { (m - i) as u8 }).collect())
}

/// The gauge cycle pair on `2n` points: `(1,3,5,…,2n−1)(2,2n,2n−2,…,4)`.
/// Odd points advance by two; even points recede by two.
pub fn gauge_rotation(n: usize) -> Perm {
    let m = 2 * n;
    // 0-based: even slots are the odd points 1,3,…; odd slots even points.
    let img = (0..m)
        .map(|i| {
            if i % 2 == 0 {
                ((i + 2) % m) as u8
            } else {
                ((i + m - 2) % m) as u8
            }
        })
        .collect();
    Perm::from_image_table(img)
}

// ---------------------------------------------------------------------------
// Group specifications.
// ---------------------------------------------------------------------------

/// Names for the acting groups.
///
/// With `β` the edge rotation, `ρ` the passage pairing, `σ₄` the half-edge
/// rotation and `r` the full reversal:
///
/// * `CSigma(n)` — centralizer of `σ₄` in `S₄ₙ`: all relabelings preserving
///   the clockwise half-edge structure (wreath of the cyclic group of order 4
///   by `Sₙ`, order `4ⁿ·n!`).
/// * `CRho(n)` — centralizer of `ρ` in `S₂ₙ` (hyperoctahedral: wreath of
///   `S₂` by `Sₙ`, order `2ⁿ·n!`). At parameter `2n` this is also the
///   centralizer of any fixed-point-free involution on `4n` points.
/// * `CRhoPrime(n)` — permutations moving the pairs `{1,2},{3,4},…` rigidly
///   without flips (diagonal `Sₙ`, order `n!`).
/// * `CRhoPrimeExt(n)` — `CRhoPrime(n)` extended by `ρ` (order `2·n!`).
/// * `Dn(n)` — the intersection `CRho ∩ β·CRho·β⁻¹`: generated by `β²` and
///   `r` (order `2n`); the reparametrisations that respect passage pairs.
/// * `Zn(n)` — the cyclic half: generated by `β²` (order `n`).
/// * `CyclicOnPoints(n)` — generated by `β` (order `2n`); rotations of the
///   parametrisation base point.
/// * `DihedralOnPoints(n)` — generated by `β` and the reversal fixing 1
///   (order `4n`, degenerating to order 2 at `n = 1`).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupName {
    CSigma,
    CRho,
    CRhoPrime,
    CRhoPrimeExt,
    Dn,
    Zn,
    CyclicOnPoints,
    DihedralOnPoints,
}

impl GroupName {
    pub fn as_str(&self) -> &'static str {
        match self {
            GroupName::CSigma => "c-sigma",
            GroupName::CRho => "c-rho",
            GroupName::CRhoPrime => "c-rho-prime",
            GroupName::CRhoPrimeExt => "c-rho-prime-ext",
            GroupName::Dn => "dn",
            GroupName::Zn => "zn",
            GroupName::CyclicOnPoints => "cyclic",
            GroupName::DihedralOnPoints => "dihedral",
        }
    }
}

/// A concrete finite permutation group: name, parameter, degree, exact
/// order, generators, and (on demand, when small enough) its element list.
pub struct GroupSpec {
    pub name: GroupName,
    pub n: usize,
    pub degree: usize,
    pub order: BigUint,
    pub generators: Vec<Perm>,
    elements: OnceLock<Result<Vec<SPerm>, String>>,
}

impl GroupSpec {
    /// Group order as `u64` when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(&self.order).ok()
    }

    /// Element list (computed once by closure from the generators). Errors if
    /// the order exceeds [`MATERIALISE_CAP`] or the degree exceeds the kernel
    /// maximum.
    pub(crate) fn elements(&self) -> Result<&[SPerm], GroupError> {
        let slot = self.elements.get_or_init(|| {
            let cap_ok = self
                .order_u64()
                .map(|o| o <= MATERIALISE_CAP)
                .unwrap_or(false);
            if !cap_ok {
                return Err(format!(
                    "order {} exceeds materialisation cap {MATERIALISE_CAP}",
                    self.order
                ));
            }
            if self.degree > crate::small::SP_MAX {
                return Err(format!(
                    "degree {} exceeds kernel maximum {}",
                    self.degree,
                    crate::small::SP_MAX
                ));
            }
            let elems = close_under_generators(&self.generators, self.degree);
            if BigUint::from(elems.len() as u64) != self.order {
                return Err(format!(
                    "internal error: closure produced {} elements, order says {}",
                    elems.len(),
                    self.order
                ));
            }
            Ok(elems)
        });
        match slot {
            Ok(v) => Ok(v),
            Err(msg) => {
                if msg.contains("materialisation cap") {
                    Err(GroupError::TooLargeToMaterialise {
                        order: self.order.clone(),
                        cap: MATERIALISE_CAP,
                    })
                } else {
                    Err(GroupError::DegreeTooLarge {
                        degree: self.degree,
                        max: crate::small::SP_MAX,
                    })
                }
            }
        }
    }

    /// Number of elements materialised so far (testing aid).
    pub fn materialised_order(&self) -> Result<usize, GroupError> {
        Ok(self.elements()?.len())
    }
}

impl std::fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupSpec({} n={} degree={} order={})",
            self.name.as_str(),
            self.n,
            self.degree,
            self.order
        )
    }
}

/// Builds the group `name` at parameter `n`.
pub fn make_group(name: GroupName, n: usize) -> Result<GroupSpec, GroupError> {
    if n == 0 {
        return Err(GroupError::EmptyGroup);
    }
    let (degree, order, generators): (usize, BigUint, Vec<Perm>) = match name {
        GroupName::CSigma => {
            let deg = 4 * n;
            let mut gens = Vec::new();
            // Per-crossing quarter turns.
            for a in 0..n {
                let c: Vec<usize> = (1..=4).map(|j| 4 * a + j).collect();
                gens.push(Perm::from_cycles(&[c], deg).unwrap());
            }
            // Adjacent crossing swaps (move quadruples rigidly).
            for a in 0..n.saturating_sub(1) {
                let cycles: Vec<Vec<usize>> = (1..=4)
                    .map(|j| vec![4 * a + j, 4 * (a + 1) + j])
                    .collect();
                gens.push(Perm::from_cycles(&cycles, deg).unwrap());
            }
            let order = BigUint::from(4u32).pow(n as u32) * factorial(n);
            (deg, order, gens)
        }
        GroupName::CRho => {
            let deg = 2 * n;
            let mut gens = Vec::new();
            for a in 0..n {
                gens.push(Perm::from_cycles(&[vec![2 * a + 1, 2 * a + 2]], deg).unwrap());
            }
            for a in 0..n.saturating_sub(1) {
                gens.push(
                    Perm::from_cycles(
                        &[
                            vec![2 * a + 1, 2 * a + 3],
                            vec![2 * a + 2, 2 * a + 4],
                        ],
                        deg,
                    )
                    .unwrap(),
                );
            }
            let order = BigUint::from(2u32).pow(n as u32) * factorial(n);
            (deg, order, gens)
        }
        GroupName::CRhoPrime | GroupName::CRhoPrimeExt => {
            let deg = 2 * n;
            let mut gens = Vec::new();
            for a in 0..n.saturating_sub(1) {
                gens.push(
                    Perm::from_cycles(
                        &[
                            vec![2 * a + 1, 2 * a + 3],
                            vec![2 * a + 2, 2 * a + 4],
                        ],
                        deg,
                    )
                    .unwrap(),
                );
            }
            let mut order = factorial(n);
            if name == GroupName::CRhoPrimeExt {
                gens.push(passage_pairing(n));
                order *= BigUint::from(2u32);
            }
            if gens.is_empty() {
                gens.push(Perm::identity(deg));
            }
            (deg, order, gens)
        }
        GroupName::Dn | GroupName::Zn | GroupName::CyclicOnPoints | GroupName::DihedralOnPoints => {
            let deg = 2 * n;
            let gens: Vec<Perm> = match name {
                GroupName::Dn => vec![
                    edge_rotation(n).compose(&edge_rotation(n)),
                    full_reversal(n),
                ],
                GroupName::Zn => vec![edge_rotation(n).compose(&edge_rotation(n))],
                GroupName::CyclicOnPoints => vec![edge_rotation(n)],
                GroupName::DihedralOnPoints => {
                    vec![edge_rotation(n), reversal_fixing_one(n)]
                }
                _ => unreachable!("outer match narrows to point groups"),
            };
            // Orders in closed form; the dihedral group on points degenerates
            // at n = 1, where the reversal fixing 1 is the identity.
            let order: u64 = match name {
                GroupName::Dn => 2 * n as u64,
                GroupName::Zn => n as u64,
                GroupName::CyclicOnPoints => 2 * n as u64,
                GroupName::DihedralOnPoints if n == 1 => 2,
                GroupName::DihedralOnPoints => 4 * n as u64,
                _ => unreachable!("outer match narrows to point groups"),
            };
            (deg, BigUint::from(order), gens)
        }
    };
    Ok(GroupSpec {
        name,
        n,
        degree,
        order,
        generators,
        elements: OnceLock::new(),
    })
}

/// Breadth-first closure of a generator set; result is sorted and unique.
fn close_under_generators(generators: &[Perm], degree: usize) -> Vec<SPerm> {
    assert!(degree <= crate::small::SP_MAX);
    let gens: Vec<SPerm> = generators.iter().map(SPerm::from_perm).collect();
    let mut seen = std::collections::HashSet::new();
    let mut frontier = vec![SPerm::identity(degree)];
    seen.insert(frontier[0]);
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let mut y = SPerm::identity(degree);
            g.compose_into(&x, &mut y);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<SPerm> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Closure of arbitrary permutations (public testing/inspection helper).
pub fn closure_of(generators: &[Perm]) -> Vec<Perm> {
    if generators.is_empty() {
        return vec![];
    }
    let degree = generators[0].degree();
    close_under_generators(generators, degree)
        .into_iter()
        .map(SPerm::to_perm)
        .collect()
}

/// `true` when the order is one (used by callers to skip trivial actions).
pub fn is_trivial(g: &GroupSpec) -> bool {
    g.order == BigUint::one()
}
