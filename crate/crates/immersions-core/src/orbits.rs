//! Orbit enumeration: ranked universes of curve codes and a shard-based
//! transversal sweep.
//!
//! A universe is a finite set of permutations with a perfect rank/unrank
//! bijection onto `0..size`, closed under conjugation by the acting group.
//! The sweep walks ranks in order, expands the full orbit of every rank not
//! yet visited, marks all members in a shared bitmap, and reports one
//! [`OrbitSummary`] per orbit. Shards are a fixed function of the universe
//! size, so results are independent of thread count; duplicate discoveries
//! across shards are merged by canonical representative.

use crate::exec::map_shards;
pub use crate::exec::Parallelism;
use crate::groups::{GroupError, GroupSpec};
use crate::perm::Perm;
use crate::small::{lehmer_rank, lehmer_unrank, nth_set_bit, SPerm, SP_MAX};
use num_bigint::BigUint;
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

/// Errors from universe construction and sweeps.
#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("universe degree {0} does not match group degree {1}")]
    DegreeMismatch(usize, usize),
    #[error("universe parameter out of the supported range: {0}")]
    UnsupportedParameter(String),
    #[error("sweep needs about {required_mb} MB but the budget is {budget_mb} MB")]
    MemoryBudgetExceeded { required_mb: u64, budget_mb: u64 },
    #[error("group action left the universe (the explicit set is not closed under conjugation)")]
    ActionLeftUniverse,
    #[error("orbit sizes disagree across shards; sweep state is inconsistent")]
    Inconsistent,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A swept set of codes with a perfect rank/unrank bijection.
///
/// * `XPrime { n }` — all one-curve pairing codes on `4n` half-edges
///   (fixed-point-free involutions `τ` whose double-rotation product is a
///   pair of `2n`-cycles); size `(4n−2)!!`; supported for `n ≤ 5`.
/// * `UCoset { n }` — the gauge-fixed edge-successor codes `β·ξ` with `ξ`
///   preserving the passage pairing; size `2ⁿ·n!`; supported for `n ≤ 10`.
/// * `ZPrime { n }` — full `2n`-cycles (visit orders of the `2n` edges);
///   size `(2n−1)!`; supported for `n ≤ 10`.
/// * `Explicit` — any caller-supplied set closed under the group action
///   (used for genus strata and tests).
#[derive(Clone, Debug)]
pub enum UniverseSpec {
    XPrime { n: usize },
    UCoset { n: usize },
    ZPrime { n: usize },
    Explicit { degree: usize, perms: Vec<Perm> },
}

impl UniverseSpec {
    pub fn degree(&self) -> usize {
        match self {
            UniverseSpec::XPrime { n } => 4 * n,
            UniverseSpec::UCoset { n } | UniverseSpec::ZPrime { n } => 2 * n,
            UniverseSpec::Explicit { degree, .. } => *degree,
        }
    }

    pub fn size(&self) -> Result<u64, SweepError> {
        Ok(self.build()?.size_u64())
    }

    /// True when the permutation belongs to this universe.
    pub fn contains(&self, p: &Perm) -> Result<bool, SweepError> {
        if p.degree() != self.degree() {
            return Ok(false);
        }
        let sp = SPerm::from_perm(p);
        Ok(self.build()?.contains(&sp))
    }

    pub(crate) fn build(&self) -> Result<UniImpl, SweepError> {
        match self {
            UniverseSpec::XPrime { n } => Ok(UniImpl::X(XPrimeUniverse::new(*n)?)),
            UniverseSpec::UCoset { n } => Ok(UniImpl::U(UCosetUniverse::new(*n)?)),
            UniverseSpec::ZPrime { n } => Ok(UniImpl::Z(ZPrimeUniverse::new(*n)?)),
            UniverseSpec::Explicit { degree, perms } => {
                Ok(UniImpl::E(ExplicitUniverse::from_perms(*degree, perms)?))
            }
        }
    }
}

/// One conjugation orbit: lexicographically smallest member (by one-line
/// form), orbit length, and the order of the stabilizer in the acting group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSummary {
    pub canonical: Perm,
    pub len: u64,
    pub stabilizer_order: u64,
}

/// Controls for a sweep: parallelism and an optional memory ceiling for the
/// visited bitmap (the sweep refuses to start if it would exceed it).
#[derive(Clone, Debug, Default)]
pub struct SweepConfig {
    pub parallelism: Parallelism,
    pub memory_budget_mb: Option<u64>,
}

/// Enumerates one summary per orbit of the group's conjugation action on the
/// universe, sorted by canonical representative. Deterministic: the result
/// (and its order) does not depend on the parallelism setting.
pub fn transversal_sweep(
    universe: &UniverseSpec,
    group: &GroupSpec,
    cfg: &SweepConfig,
) -> Result<Vec<OrbitSummary>, SweepError> {
    match universe.build()? {
        UniImpl::X(u) => sweep_impl(&u, group, cfg),
        UniImpl::U(u) => sweep_impl(&u, group, cfg),
        UniImpl::Z(u) => sweep_impl(&u, group, cfg),
        UniImpl::E(u) => sweep_impl(&u, group, cfg),
    }
}

/// A single orbit with its members (sorted), for small-scale inspection.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub summary: OrbitSummary,
    pub members: Vec<Perm>,
}

/// Expands the orbit of `x` under the group's conjugation action. The group
/// must be materialisable (see [`crate::groups::MATERIALISE_CAP`]).
pub fn orbit_of(x: &Perm, group: &GroupSpec) -> Result<Orbit, SweepError> {
    if x.degree() != group.degree {
        return Err(SweepError::DegreeMismatch(x.degree(), group.degree));
    }
    let elems = group.elements()?;
    let xs = SPerm::from_perm(x);
    let mut out = SPerm::identity(x.degree());
    let mut members: Vec<SPerm> = Vec::new();
    for g in elems {
        g.conjugate_into(&xs, &mut out);
        members.push(out);
    }
    members.sort_unstable();
    members.dedup();
    let len = members.len() as u64;
    let order = group
        .order_u64()
        .expect("materialisable group order fits u64");
    debug_assert_eq!(order % len, 0);
    Ok(Orbit {
        summary: OrbitSummary {
            canonical: members[0].to_perm(),
            len,
            stabilizer_order: order / len,
        },
        members: members.into_iter().map(SPerm::to_perm).collect(),
    })
}

/// Order of the stabilizer of `x` in the group (exact).
pub fn stabilizer_order(x: &Perm, group: &GroupSpec) -> Result<BigUint, SweepError> {
    let orbit = orbit_of(x, group)?;
    let (q, r) = num_integer::Integer::div_rem(&group.order, &BigUint::from(orbit.summary.len));
    debug_assert!(r.is_zero());
    Ok(q)
}

// ---------------------------------------------------------------------------
// Sweep internals.
// ---------------------------------------------------------------------------

pub(crate) trait RankedUniverse: Sync {
    fn degree(&self) -> usize;
    fn size_u64(&self) -> u64;
    fn unrank(&self, r: u64, out: &mut SPerm);
    /// Rank of a member; `None` if `x` is not in the universe. Members fed
    /// by the sweep are conjugates of members, so for the structured
    /// universes (closed under the action) this never returns `None`.
    fn try_rank(&self, x: &SPerm) -> Option<u64>;
    fn contains(&self, x: &SPerm) -> bool {
        self.try_rank(x).is_some()
    }
}

pub(crate) enum UniImpl {
    X(XPrimeUniverse),
    U(UCosetUniverse),
    Z(ZPrimeUniverse),
    E(ExplicitUniverse),
}

impl UniImpl {
    pub(crate) fn size_u64(&self) -> u64 {
        match self {
            UniImpl::X(u) => u.size_u64(),
            UniImpl::U(u) => u.size_u64(),
            UniImpl::Z(u) => u.size_u64(),
            UniImpl::E(u) => u.size_u64(),
        }
    }
    pub(crate) fn contains(&self, x: &SPerm) -> bool {
        match self {
            UniImpl::X(u) => u.contains(x),
            UniImpl::U(u) => u.contains(x),
            UniImpl::Z(u) => u.contains(x),
            UniImpl::E(u) => u.contains(x),
        }
    }
}

fn sweep_impl<U: RankedUniverse>(
    universe: &U,
    group: &GroupSpec,
    cfg: &SweepConfig,
) -> Result<Vec<OrbitSummary>, SweepError> {
    if universe.degree() != group.degree {
        return Err(SweepError::DegreeMismatch(universe.degree(), group.degree));
    }
    let elems = group.elements()?;
    let group_order = group
        .order_u64()
        .expect("materialisable group order fits u64");
    let size = universe.size_u64();
    let words = (size as usize).div_ceil(64);
    let bitmap_mb = (words as u64 * 8).div_ceil(1024 * 1024);
    if let Some(budget) = cfg.memory_budget_mb {
        if bitmap_mb > budget {
            return Err(SweepError::MemoryBudgetExceeded {
                required_mb: bitmap_mb,
                budget_mb: budget,
            });
        }
    }
    let visited: Vec<AtomicU64> = (0..words).map(|_| AtomicU64::new(0)).collect();

    // Fixed shard decomposition: a function of the size only, so output and
    // intermediate discoveries are independent of the thread count.
    let shard_len = (size / 256).clamp(1 << 16, 1 << 24).next_multiple_of(64);
    let num_shards = size.div_ceil(shard_len).max(1) as usize;

    let per_shard: Vec<Result<Vec<(SPerm, u64)>, SweepError>> =
        map_shards(cfg.parallelism, num_shards, |s| {
            scan_shard(
                universe,
                elems,
                &visited,
                s as u64 * shard_len,
                ((s as u64 + 1) * shard_len).min(size),
            )
        });

    let mut candidates: Vec<(SPerm, u64)> = Vec::new();
    for r in per_shard {
        candidates.extend(r?);
    }
    candidates.sort_unstable();
    candidates.dedup();
    let mut out = Vec::with_capacity(candidates.len());
    for (i, (canon, len)) in candidates.iter().enumerate() {
        if i > 0 && candidates[i - 1].0 == *canon {
            // Same canonical with different length: impossible state.
            return Err(SweepError::Inconsistent);
        }
        if !group_order.is_multiple_of(*len) {
            return Err(SweepError::Inconsistent);
        }
        out.push(OrbitSummary {
            canonical: canon.to_perm(),
            len: *len,
            stabilizer_order: group_order / *len,
        });
    }
    Ok(out)
}

fn scan_shard<U: RankedUniverse>(
    universe: &U,
    elems: &[SPerm],
    visited: &[AtomicU64],
    start: u64,
    end: u64,
) -> Result<Vec<(SPerm, u64)>, SweepError> {
    let deg = universe.degree();
    let mut found = Vec::new();
    let mut x = SPerm::identity(deg);
    let mut y = SPerm::identity(deg);
    let mut member_ranks: Vec<u64> = Vec::new();
    let mut r = start;
    while r < end {
        // Skip whole words of already-visited ranks.
        if r.is_multiple_of(64) {
            while r < end && visited[(r / 64) as usize].load(Ordering::Relaxed) == u64::MAX {
                r += 64;
            }
            if r >= end {
                break;
            }
        }
        let seen = visited[(r / 64) as usize].load(Ordering::Relaxed) >> (r % 64) & 1;
        if seen == 1 {
            r += 1;
            continue;
        }
        universe.unrank(r, &mut x);
        let mut canon = x;
        member_ranks.clear();
        for g in elems {
            g.conjugate_into(&x, &mut y);
            if y < canon {
                canon = y;
            }
            member_ranks.push(universe.try_rank(&y).ok_or(SweepError::ActionLeftUniverse)?);
        }
        member_ranks.sort_unstable();
        member_ranks.dedup();
        for &mr in &member_ranks {
            visited[(mr / 64) as usize].fetch_or(1 << (mr % 64), Ordering::Relaxed);
        }
        found.push((canon, member_ranks.len() as u64));
        r += 1;
    }
    Ok(found)
}

// ---------------------------------------------------------------------------
// The pairing-code universe on 4n half-edges.
// ---------------------------------------------------------------------------

/// All fixed-point-free involutions `τ` on `4n` half-edges that close into a
/// single curve: with `σ` the quadruple rotation and `ι = σ²` the
/// opposite-half-edge map, `σ²τ` must be a pair of `2n`-cycles. Codes are in
/// bijection with chains `i₀, i₁, …` where each step picks the next half-edge
/// from the shrinking free set, giving the perfect mixed-radix rank with
/// place values `(4n−2)·(4n−4)⋯`; size `(4n−2)!!`.
pub(crate) struct XPrimeUniverse {
    n: usize,
    size: u64,
    /// `weight[r]` = product of the choice counts after step `r` (1-based).
    weights: Vec<u64>,
}

impl XPrimeUniverse {
    pub(crate) fn new(n: usize) -> Result<XPrimeUniverse, SweepError> {
        if n == 0 || 4 * n > SP_MAX {
            return Err(SweepError::UnsupportedParameter(format!(
                "pairing-code universe needs 1 ≤ n ≤ {}, got {n}",
                SP_MAX / 4
            )));
        }
        let steps = 2 * n - 1;
        let mut weights = vec![0u64; steps + 1];
        weights[steps] = 1;
        for r in (1..steps).rev() {
            let choices = (4 * n - 2 * (r + 1)) as u64;
            weights[r] = weights[r + 1] * choices;
        }
        let size = weights[1] * (4 * n - 2) as u64;
        Ok(XPrimeUniverse { n, size, weights })
    }
}

#[inline]
fn nth_set_bit64(mask: u64, k: u32) -> u32 {
    let mut m = mask;
    for _ in 0..k {
        m &= m - 1;
    }
    m.trailing_zeros()
}

impl RankedUniverse for XPrimeUniverse {
    fn degree(&self) -> usize {
        4 * self.n
    }
    fn size_u64(&self) -> u64 {
        self.size
    }

    fn unrank(&self, mut r: u64, out: &mut SPerm) {
        let deg = 4 * self.n;
        *out = SPerm::identity(deg);
        let full = if deg == 64 { u64::MAX } else { (1u64 << deg) - 1 };
        // Opposite half-edge: within each block of four, i ↦ i xor 2.
        let mut prev: u32 = 2; // ι(0)
        let mut blocked: u64 = 0b101; // {0, 2}
        for step in 1..2 * self.n {
            let w = self.weights[step];
            let digit = (r / w) as u32;
            r %= w;
            let free = full & !blocked;
            let ir = nth_set_bit64(free, digit);
            let anchor = prev ^ 2;
            out.a[anchor as usize] = ir as u8;
            out.a[ir as usize] = anchor as u8;
            blocked |= (1 << ir) | (1 << (ir ^ 2));
            prev = ir;
        }
        // Forced closing pair back to ι(0) = 2.
        let anchor = prev ^ 2;
        out.a[anchor as usize] = 2;
        out.a[2] = anchor as u8;
        debug_assert!(self.contains(out));
    }

    fn try_rank(&self, x: &SPerm) -> Option<u64> {
        let deg = 4 * self.n;
        if x.len() != deg {
            return None;
        }
        let mut rank = 0u64;
        let full = if deg == 64 { u64::MAX } else { (1u64 << deg) - 1 };
        let mut prev: u32 = 2;
        let mut blocked: u64 = 0b101;
        for step in 1..2 * self.n {
            let anchor = prev ^ 2;
            let ir = x.a[anchor as usize] as u32;
            let free = full & !blocked;
            if free & (1 << ir) == 0 {
                return None;
            }
            let below = (free & ((1u64 << ir) - 1)).count_ones() as u64;
            rank += below * self.weights[step];
            blocked |= (1 << ir) | (1 << (ir ^ 2));
            prev = ir;
        }
        if x.a[(prev ^ 2) as usize] != 2 {
            return None;
        }
        Some(rank)
    }
}

// ---------------------------------------------------------------------------
// The gauge-fixed edge-successor universe on 2n points.
// ---------------------------------------------------------------------------

/// Edge-successor codes `σ = β·ξ` where `β` is the full edge rotation and
/// `ξ` preserves the passage pairing `(1,2)(3,4)…` (a signed permutation of
/// the `n` pairs). Rank = (Lehmer rank of the pair permutation) · 2ⁿ + flip
/// bits; size `2ⁿ·n!`.
pub(crate) struct UCosetUniverse {
    n: usize,
    size: u64,
}

impl UCosetUniverse {
    pub(crate) fn new(n: usize) -> Result<UCosetUniverse, SweepError> {
        if n == 0 || 2 * n > SP_MAX {
            return Err(SweepError::UnsupportedParameter(format!(
                "edge-successor universe needs 1 ≤ n ≤ {}, got {n}",
                SP_MAX / 2
            )));
        }
        let size = crate::perm::factorial_u64(n) << n;
        Ok(UCosetUniverse { n, size })
    }
}

impl RankedUniverse for UCosetUniverse {
    fn degree(&self) -> usize {
        2 * self.n
    }
    fn size_u64(&self) -> u64 {
        self.size
    }

    fn unrank(&self, r: u64, out: &mut SPerm) {
        let n = self.n;
        let m = 2 * n;
        *out = SPerm::identity(m);
        let bits = r & ((1 << n) - 1);
        let mut w = [0u8; SP_MAX];
        lehmer_unrank(r >> n, n, &mut w);
        for (a, pair) in out.a[..m].chunks_exact_mut(2).enumerate() {
            let b = (bits >> a & 1) as usize;
            let base = 2 * w[a] as usize;
            pair[0] = ((base + b + 1) % m) as u8;
            pair[1] = ((base + (1 - b) + 1) % m) as u8;
        }
    }

    fn try_rank(&self, x: &SPerm) -> Option<u64> {
        let n = self.n;
        let m = 2 * n;
        if x.len() != m {
            return None;
        }
        let mut w = [0u8; SP_MAX];
        let mut bits = 0u64;
        for (a, pair) in x.a[..m].chunks_exact(2).enumerate() {
            let x0 = (pair[0] as usize + m - 1) % m;
            let x1 = (pair[1] as usize + m - 1) % m;
            if x0 ^ 1 != x1 {
                return None;
            }
            w[a] = (x0 / 2) as u8;
            bits |= ((x0 & 1) as u64) << a;
        }
        // w must be a permutation of 0..n; the pair structure guarantees it
        // whenever all pair indices are distinct, which lehmer_rank assumes.
        let mut seen = 0u32;
        for &v in &w[..n] {
            if seen >> v & 1 == 1 {
                return None;
            }
            seen |= 1 << v;
        }
        Some(lehmer_rank(&w[..n]) << n | bits)
    }
}

// ---------------------------------------------------------------------------
// The visit-order universe on 2n points.
// ---------------------------------------------------------------------------

/// All full `2n`-cycles, ranked by the Lehmer code of the cycle word read
/// from point 1; size `(2n−1)!`.
pub(crate) struct ZPrimeUniverse {
    n: usize,
    size: u64,
}

impl ZPrimeUniverse {
    pub(crate) fn new(n: usize) -> Result<ZPrimeUniverse, SweepError> {
        if n == 0 || 2 * n > SP_MAX {
            return Err(SweepError::UnsupportedParameter(format!(
                "visit-order universe needs 1 ≤ n ≤ {}, got {n}",
                SP_MAX / 2
            )));
        }
        let size = crate::perm::factorial_u64(2 * n - 1);
        Ok(ZPrimeUniverse { n, size })
    }
}

impl RankedUniverse for ZPrimeUniverse {
    fn degree(&self) -> usize {
        2 * self.n
    }
    fn size_u64(&self) -> u64 {
        self.size
    }

    fn unrank(&self, mut r: u64, out: &mut SPerm) {
        let m = 2 * self.n;
        *out = SPerm::identity(m);
        // Decode the word over the alphabet {1,…,2n−1} (values are
        // bit-indexed 0..m−2 as value−1).
        let mut avail: u32 = (1u32 << (m - 1)) - 1;
        let mut fact = crate::perm::factorial_u64(m - 1);
        let mut cur = 0u8;
        for i in 0..m - 1 {
            fact /= (m - 1 - i) as u64;
            let digit = (r / fact) as u32;
            r %= fact;
            let v = nth_set_bit(avail, digit) as u8 + 1;
            avail &= !(1 << (v - 1));
            out.a[cur as usize] = v;
            cur = v;
        }
        out.a[cur as usize] = 0;
    }

    fn try_rank(&self, x: &SPerm) -> Option<u64> {
        let m = 2 * self.n;
        if x.len() != m {
            return None;
        }
        let mut rank = 0u64;
        let mut avail: u32 = (1u32 << (m - 1)) - 1;
        let mut fact = crate::perm::factorial_u64(m - 1);
        let mut cur = 0u8;
        for i in 0..m - 1 {
            fact /= (m - 1 - i) as u64;
            let v = x.a[cur as usize];
            if v == 0 {
                return None; // cycle closed early: not a full cycle
            }
            let bit = 1u32 << (v - 1);
            if avail & bit == 0 {
                return None;
            }
            let below = (avail & (bit - 1)).count_ones() as u64;
            rank += below * fact;
            avail &= !bit;
            cur = v;
        }
        if x.a[cur as usize] != 0 {
            return None;
        }
        Some(rank)
    }
}

// ---------------------------------------------------------------------------
// Explicit universes (strata, tests).
// ---------------------------------------------------------------------------

pub(crate) struct ExplicitUniverse {
    degree: usize,
    perms: Vec<SPerm>,
    index: HashMap<SPerm, u64>,
}

impl ExplicitUniverse {
    pub(crate) fn from_perms(degree: usize, perms: &[Perm]) -> Result<ExplicitUniverse, SweepError> {
        if degree > SP_MAX {
            return Err(SweepError::UnsupportedParameter(format!(
                "degree {degree} exceeds kernel maximum {SP_MAX}"
            )));
        }
        let mut sp: Vec<SPerm> = Vec::with_capacity(perms.len());
        for p in perms {
            if p.degree() != degree {
                return Err(SweepError::DegreeMismatch(p.degree(), degree));
            }
            sp.push(SPerm::from_perm(p));
        }
        Ok(Self::from_sperms(degree, sp))
    }

    pub(crate) fn from_sperms(degree: usize, mut sp: Vec<SPerm>) -> ExplicitUniverse {
        sp.sort_unstable();
        sp.dedup();
        let index = sp
            .iter()
            .enumerate()
            .map(|(i, p)| (*p, i as u64))
            .collect();
        ExplicitUniverse {
            degree,
            perms: sp,
            index,
        }
    }
}

impl RankedUniverse for ExplicitUniverse {
    fn degree(&self) -> usize {
        self.degree
    }
    fn size_u64(&self) -> u64 {
        self.perms.len() as u64
    }
    fn unrank(&self, r: u64, out: &mut SPerm) {
        *out = self.perms[r as usize];
    }
    fn try_rank(&self, x: &SPerm) -> Option<u64> {
        self.index.get(x).copied()
    }
}

/// Sweep over an explicit list of codes already in kernel form (internal
/// fast path used by the census pipeline).
pub(crate) fn sweep_explicit_sperms(
    degree: usize,
    codes: Vec<SPerm>,
    group: &GroupSpec,
    cfg: &SweepConfig,
) -> Result<Vec<OrbitSummary>, SweepError> {
    let u = ExplicitUniverse::from_sperms(degree, codes);
    sweep_impl(&u, group, cfg)
}
