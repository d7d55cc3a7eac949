//! Count-table builders: genus histograms of the gauge universe, per-genus
//! class tables for every equivalence kind, the genus-0 census with quality
//! filters, and total counts through the exact character formula.
//!
//! The internal engine enumerates rotation-orbit representatives of gauge
//! codes once, resolves the index of each representative's image under the
//! three class involutions (swap `s`, reversal `r`, mirror `m`), and then
//! derives every table by five-shape bookkeeping over plain integer indices:
//!
//! * rotation classes with (s, r) — coloured tables, oriented curve;
//! * rotation classes with (s, m) — coloured tables, mirror quotients;
//! * dihedral units `{i, r(i)}` with (s, m) — coloured tables, unoriented;
//! * swap pairs `{i, s(i)}` with (r, m) — plain-curve tables at genus 0.
//!
//! Plain-curve tables at arbitrary genus come from the analogous engine on
//! visit-order codes with (r, m).

use super::five_way::{classify, FiveWay};
use super::flags::{u_flags, z_flags, ClassFlags, FlagFilter};
use super::{check_envelope, CensusConfig, CensusError, ColourMode, Fixtures, Kind, Method};
use crate::cosets::{count_total_immersions, BaseKind};
use crate::encodings::{y_genus_table, z_genus_table};
use crate::exec::map_shards;
use crate::groups::{make_group, GroupName};
use crate::orbits::{
    sweep_explicit_sperms, transversal_sweep, RankedUniverse, SweepError, UniImpl, UniverseSpec,
};
use crate::small::SPerm;
use num_bigint::BigUint;
use std::collections::BTreeMap;

/// Genus histograms and stratum extraction scan the full gauge universe;
/// they stay single-pass and are practical up to this crossing count.
const SCAN_LIMIT: usize = 9;

/// Ceiling for exact total counts via the character formula (partition
/// bookkeeping only; far beyond any table the sweeps can reach).
const TOTALS_LIMIT: usize = 32;

// ---------------------------------------------------------------------------
// Universe scans.
// ---------------------------------------------------------------------------

fn u_universe(n: usize) -> Result<impl RankedUniverse, SweepError> {
    match (UniverseSpec::UCoset { n }).build()? {
        UniImpl::U(u) => Ok(u),
        _ => unreachable!("gauge spec builds the gauge universe"),
    }
}

/// Number of gauge codes (equivalently, pointed curves) per genus for one
/// crossing count. Row sums equal `2^n · n!`.
pub fn long_curve_genus_histogram(n: usize, cfg: &CensusConfig) -> Result<Vec<u64>, CensusError> {
    if n == 0 {
        // The crossingless closed curve: one class, genus 0.
        return Ok(vec![1]);
    }
    if n > SCAN_LIMIT {
        return Err(CensusError::OutOfEnvelope {
            operation: "gauge-universe genus histogram",
            n,
            limit: SCAN_LIMIT,
            hint: "beyond the supported range",
        });
    }
    let uni = u_universe(n)?;
    let size = uni.size_u64();
    let shard_len = (size / 128).clamp(1 << 12, 1 << 22);
    let shards = usize::try_from(size.div_ceil(shard_len)).expect("shard count fits usize");
    let bins = n / 2 + 2;
    let parts = map_shards(cfg.sweep.parallelism, shards, |s| {
        let lo = s as u64 * shard_len;
        let hi = (lo + shard_len).min(size);
        let mut counts = vec![0u64; bins];
        let mut sp = SPerm::identity(2 * n);
        for rank in lo..hi {
            uni.unrank(rank, &mut sp);
            counts[y_genus_table(&sp)] += 1;
        }
        counts
    });
    let mut total = vec![0u64; bins];
    for part in parts {
        for (slot, v) in total.iter_mut().zip(part) {
            *slot += v;
        }
    }
    while total.last() == Some(&0) {
        total.pop();
    }
    Ok(total)
}

/// All gauge codes of one genus, in rank order.
fn u_stratum(n: usize, genus: usize, cfg: &CensusConfig) -> Result<Vec<SPerm>, CensusError> {
    if n == 0 || n > SCAN_LIMIT {
        return Err(CensusError::OutOfEnvelope {
            operation: "gauge-universe stratum extraction",
            n,
            limit: SCAN_LIMIT,
            hint: "beyond the supported range",
        });
    }
    let uni = u_universe(n)?;
    let size = uni.size_u64();
    let shard_len = (size / 128).clamp(1 << 12, 1 << 22);
    let shards = usize::try_from(size.div_ceil(shard_len)).expect("shard count fits usize");
    let parts = map_shards(cfg.sweep.parallelism, shards, |s| {
        let lo = s as u64 * shard_len;
        let hi = (lo + shard_len).min(size);
        let mut out = Vec::new();
        let mut sp = SPerm::identity(2 * n);
        for rank in lo..hi {
            uni.unrank(rank, &mut sp);
            if y_genus_table(&sp) == genus {
                out.push(sp);
            }
        }
        out
    });
    Ok(parts.concat())
}

// ---------------------------------------------------------------------------
// Gauge-side engine: rotation classes with involution images as indices.
// ---------------------------------------------------------------------------

struct USide {
    n: usize,
    /// Sorted canonical rotation-orbit representatives.
    reps: Vec<SPerm>,
    /// Index of the canonical representative of each rep's swap image.
    s: Vec<u32>,
    /// ... reversal image.
    r: Vec<u32>,
    /// ... mirror image.
    m: Vec<u32>,
    genus: Vec<u8>,
    flags: Option<Vec<ClassFlags>>,
}

fn idx_of(reps: &[SPerm], x: &SPerm) -> u32 {
    reps.binary_search(x)
        .expect("involution image must be an enumerated representative") as u32
}

fn u_side(
    n: usize,
    stratum_genus: Option<usize>,
    want_flags: bool,
    cfg: &CensusConfig,
) -> Result<USide, CensusError> {
    let zn = make_group(GroupName::Zn, n)?;
    let summaries = match stratum_genus {
        Some(g) => sweep_explicit_sperms(2 * n, u_stratum(n, g, cfg)?, &zn, &cfg.sweep)?,
        None => transversal_sweep(&UniverseSpec::UCoset { n }, &zn, &cfg.sweep)?,
    };
    let reps: Vec<SPerm> = summaries
        .iter()
        .map(|o| SPerm::from_perm(&o.canonical))
        .collect();
    drop(summaries);
    debug_assert!(reps.windows(2).all(|w| w[0] < w[1]));
    let zn_elems = zn.elements()?;
    let fx = Fixtures::new(n);
    let len = reps.len();
    const CHUNK: usize = 4096;
    let chunks = len.div_ceil(CHUNK).max(1);
    let parts = map_shards(cfg.sweep.parallelism, chunks, |c| {
        let lo = c * CHUNK;
        let hi = ((c + 1) * CHUNK).min(len);
        let mut s = Vec::with_capacity(hi.saturating_sub(lo));
        let mut r = Vec::with_capacity(hi.saturating_sub(lo));
        let mut m = Vec::with_capacity(hi.saturating_sub(lo));
        let mut genus = Vec::with_capacity(hi.saturating_sub(lo));
        let mut flags = Vec::new();
        let mut img = SPerm::identity(2 * n);
        for rep in &reps[lo..hi] {
            fx.u_swap(rep, &mut img);
            s.push(idx_of(&reps, &super::canon_in(zn_elems, &img)));
            fx.u_reverse(rep, &mut img);
            r.push(idx_of(&reps, &super::canon_in(zn_elems, &img)));
            fx.u_mirror(rep, &mut img);
            m.push(idx_of(&reps, &super::canon_in(zn_elems, &img)));
            genus.push(y_genus_table(rep) as u8);
            if want_flags {
                flags.push(u_flags(n, rep));
            }
        }
        (s, r, m, genus, flags)
    });
    let mut s = Vec::with_capacity(len);
    let mut r = Vec::with_capacity(len);
    let mut m = Vec::with_capacity(len);
    let mut genus = Vec::with_capacity(len);
    let mut flags = Vec::with_capacity(if want_flags { len } else { 0 });
    for part in parts {
        s.extend(part.0);
        r.extend(part.1);
        m.extend(part.2);
        genus.extend(part.3);
        flags.extend(part.4);
    }
    let side = USide {
        n,
        reps,
        s,
        r,
        m,
        genus,
        flags: want_flags.then_some(flags),
    };
    side.validate();
    Ok(side)
}

impl USide {
    /// Involutivity, commutation, and invariance checks over all indices.
    fn validate(&self) {
        let len = self.reps.len() as u32;
        let at = |v: &Vec<u32>, i: u32| v[i as usize];
        for i in 0..len {
            debug_assert_eq!(at(&self.s, at(&self.s, i)), i, "swap is involutive");
            debug_assert_eq!(at(&self.r, at(&self.r, i)), i, "reversal is involutive");
            debug_assert_eq!(at(&self.m, at(&self.m, i)), i, "mirror is involutive");
            debug_assert_eq!(
                at(&self.m, at(&self.r, i)),
                at(&self.r, at(&self.m, i)),
                "reversal and mirror commute on classes"
            );
            debug_assert_eq!(
                self.genus[at(&self.s, i) as usize],
                self.genus[i as usize],
                "swap preserves genus"
            );
            if let Some(flags) = &self.flags {
                debug_assert_eq!(
                    flags[at(&self.s, i) as usize],
                    flags[i as usize],
                    "swap preserves quality flags"
                );
                debug_assert_eq!(
                    flags[at(&self.r, i) as usize],
                    flags[i as usize],
                    "reversal preserves quality flags"
                );
                debug_assert_eq!(
                    flags[at(&self.m, i) as usize],
                    flags[i as usize],
                    "mirror preserves quality flags"
                );
            }
        }
    }

    fn passes(&self, filter: Option<FlagFilter>, i: u32) -> bool {
        match filter {
            None => true,
            Some(f) => f.passes(
                &self.flags.as_ref().expect("flags computed when filtering")[i as usize],
            ),
        }
    }

    /// Rotation-class indices passing the filter.
    fn cyclic_units(&self, filter: Option<FlagFilter>) -> Vec<u32> {
        (0..self.reps.len() as u32)
            .filter(|&i| self.passes(filter, i))
            .collect()
    }

    /// Dihedral units: least index of each reversal pair `{i, r(i)}`.
    fn dihedral_units(&self, filter: Option<FlagFilter>) -> Vec<u32> {
        (0..self.reps.len() as u32)
            .filter(|&i| i <= self.r[i as usize] && self.passes(filter, i))
            .collect()
    }

    /// Dihedral image maps: the least index of the image pair.
    fn dihedral_swap(&self, u: u32) -> u32 {
        let j = self.s[u as usize];
        j.min(self.r[j as usize])
    }
    fn dihedral_mirror(&self, u: u32) -> u32 {
        let j = self.m[u as usize];
        j.min(self.r[j as usize])
    }

    /// Swap-pair units: least index of each pair `{i, s(i)}`. The swap
    /// involution is free on coloured classes, which this asserts.
    fn pair_units(&self, filter: Option<FlagFilter>) -> Vec<u32> {
        for i in 0..self.reps.len() as u32 {
            assert_ne!(
                self.s[i as usize], i,
                "no coloured class is fixed by the colour swap"
            );
        }
        (0..self.reps.len() as u32)
            .filter(|&i| i < self.s[i as usize] && self.passes(filter, i))
            .collect()
    }

    fn pair_reverse(&self, u: u32) -> u32 {
        let a = self.r[u as usize];
        let b = self.r[self.s[u as usize] as usize];
        a.min(b)
    }
    fn pair_mirror(&self, u: u32) -> u32 {
        let a = self.m[u as usize];
        let b = self.m[self.s[u as usize] as usize];
        a.min(b)
    }

    fn genus_key(&self, u: u32) -> usize {
        self.genus[u as usize] as usize
    }
}

// ---------------------------------------------------------------------------
// Coloured-class profiles and tables.
// ---------------------------------------------------------------------------

/// The three five-shape profiles of coloured classes, per genus.
#[derive(Clone, Debug)]
pub struct SystemProfiles {
    pub n: usize,
    /// (swap, mirror) acting on dihedral (unoriented-curve) classes.
    pub dihedral_swap_mirror: BTreeMap<usize, FiveWay>,
    /// (swap, reversal) acting on rotation (oriented-curve) classes.
    pub cyclic_swap_reversal: BTreeMap<usize, FiveWay>,
    /// (swap, mirror) acting on rotation classes.
    pub cyclic_swap_mirror: BTreeMap<usize, FiveWay>,
}

fn profiles_from_side(side: &USide, filter: Option<FlagFilter>) -> SystemProfiles {
    let cyc = side.cyclic_units(filter);
    let dih = side.dihedral_units(filter);
    let b2 = classify(
        cyc.iter().copied(),
        |i| side.s[i as usize],
        |i| side.r[i as usize],
        |i| side.genus_key(i),
    );
    let b3 = classify(
        cyc.iter().copied(),
        |i| side.s[i as usize],
        |i| side.m[i as usize],
        |i| side.genus_key(i),
    );
    let b1 = classify(
        dih.iter().copied(),
        |u| side.dihedral_swap(u),
        |u| side.dihedral_mirror(u),
        |u| side.genus_key(u),
    );
    // Unit counts must be reproduced by the shape totals.
    let mut cyc_per_genus: BTreeMap<usize, u64> = BTreeMap::new();
    for &i in &cyc {
        *cyc_per_genus.entry(side.genus_key(i)).or_insert(0) += 1;
    }
    for (g, fw) in &b2 {
        assert_eq!(fw.total(), cyc_per_genus[g], "shape totals cover all units");
    }
    for (g, fw) in &b3 {
        assert_eq!(fw.total(), cyc_per_genus[g], "shape totals cover all units");
    }
    let mut dih_per_genus: BTreeMap<usize, u64> = BTreeMap::new();
    for &u in &dih {
        *dih_per_genus.entry(side.genus_key(u)).or_insert(0) += 1;
    }
    for (g, fw) in &b1 {
        assert_eq!(fw.total(), dih_per_genus[g], "shape totals cover all units");
    }
    SystemProfiles {
        n: side.n,
        dihedral_swap_mirror: b1,
        cyclic_swap_reversal: b2,
        cyclic_swap_mirror: b3,
    }
}

/// Five-shape profiles of coloured classes over the whole genus range.
pub fn system_profiles(
    n: usize,
    filter: Option<FlagFilter>,
    cfg: &CensusConfig,
) -> Result<SystemProfiles, CensusError> {
    check_envelope("coloured-class profiles", Method::UCyclic, n, cfg)?;
    let side = u_side(n, None, filter.is_some(), cfg)?;
    Ok(profiles_from_side(&side, filter))
}

/// One genus row of coloured-class counts, all eight colour kinds.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct BicolourableRow {
    pub ooc: u64,
    pub oob: u64,
    pub uoc: u64,
    pub uob: u64,
    pub ouc: u64,
    pub oub: u64,
    pub uuc: u64,
    pub uub: u64,
}

fn bicolourable_rows(profiles: &SystemProfiles) -> BTreeMap<usize, BicolourableRow> {
    let mut genera: Vec<usize> = profiles.cyclic_swap_reversal.keys().copied().collect();
    genera.extend(profiles.cyclic_swap_mirror.keys());
    genera.extend(profiles.dihedral_swap_mirror.keys());
    genera.sort_unstable();
    genera.dedup();
    let mut out = BTreeMap::new();
    for g in genera {
        let d = FiveWay::default();
        let b1 = profiles.dihedral_swap_mirror.get(&g).unwrap_or(&d);
        let b2 = profiles.cyclic_swap_reversal.get(&g).unwrap_or(&d);
        let b3 = profiles.cyclic_swap_mirror.get(&g).unwrap_or(&d);
        assert_eq!(b2.total(), b3.total(), "rotation-class totals agree");
        assert_eq!(
            b2.quotient_by_i(),
            b3.quotient_by_i(),
            "swap quotients agree between the two rotation profiles"
        );
        assert_eq!(
            b2.quotient_by_j(),
            b1.total(),
            "reversal quotient equals the dihedral unit count"
        );
        assert_eq!(
            b2.quotient_by_both(),
            b1.quotient_by_i(),
            "swap+reversal quotient agrees between the two systems"
        );
        out.insert(
            g,
            BicolourableRow {
                ooc: b2.total(),
                oob: b2.quotient_by_i(),
                uoc: b2.quotient_by_j(),
                uob: b2.quotient_by_both(),
                ouc: b3.quotient_by_j(),
                oub: b3.quotient_by_both(),
                uuc: b1.quotient_by_j(),
                uub: b1.quotient_by_both(),
            },
        );
    }
    out
}

/// Per-genus class counts of all eight coloured kinds.
pub fn bicolourable_genus_table(
    n: usize,
    filter: Option<FlagFilter>,
    cfg: &CensusConfig,
) -> Result<BTreeMap<usize, BicolourableRow>, CensusError> {
    Ok(bicolourable_rows(&system_profiles(n, filter, cfg)?))
}

// ---------------------------------------------------------------------------
// Visit-order engine: plain-curve tables at every genus.
// ---------------------------------------------------------------------------

struct ZSide {
    reps: Vec<SPerm>,
    r: Vec<u32>,
    m: Vec<u32>,
    genus: Vec<u8>,
    flags: Option<Vec<ClassFlags>>,
}

fn z_side(n: usize, want_flags: bool, cfg: &CensusConfig) -> Result<ZSide, CensusError> {
    let group = make_group(GroupName::CRhoPrime, n)?;
    let summaries = transversal_sweep(&UniverseSpec::ZPrime { n }, &group, &cfg.sweep)?;
    let reps: Vec<SPerm> = summaries
        .iter()
        .map(|o| SPerm::from_perm(&o.canonical))
        .collect();
    drop(summaries);
    let elems = group.elements()?;
    let fx = Fixtures::new(n);
    let len = reps.len();
    const CHUNK: usize = 1024;
    let chunks = len.div_ceil(CHUNK).max(1);
    let parts = map_shards(cfg.sweep.parallelism, chunks, |c| {
        let lo = c * CHUNK;
        let hi = ((c + 1) * CHUNK).min(len);
        let mut r = Vec::with_capacity(hi.saturating_sub(lo));
        let mut m = Vec::with_capacity(hi.saturating_sub(lo));
        let mut genus = Vec::with_capacity(hi.saturating_sub(lo));
        let mut flags = Vec::new();
        let mut img = SPerm::identity(2 * n);
        for rep in &reps[lo..hi] {
            fx.z_reverse(rep, &mut img);
            r.push(idx_of(&reps, &super::canon_in(elems, &img)));
            fx.z_mirror(rep, &mut img);
            m.push(idx_of(&reps, &super::canon_in(elems, &img)));
            genus.push(z_genus_table(&rep.a[..2 * n]) as u8);
            if want_flags {
                flags.push(z_flags(n, rep));
            }
        }
        (r, m, genus, flags)
    });
    let mut r = Vec::with_capacity(len);
    let mut m = Vec::with_capacity(len);
    let mut genus = Vec::with_capacity(len);
    let mut flags = Vec::with_capacity(if want_flags { len } else { 0 });
    for part in parts {
        r.extend(part.0);
        m.extend(part.1);
        genus.extend(part.2);
        flags.extend(part.3);
    }
    Ok(ZSide {
        reps,
        r,
        m,
        genus,
        flags: want_flags.then_some(flags),
    })
}

/// Five-shape profile of plain oriented classes under (reversal, mirror),
/// per genus.
pub fn z_system_profile(
    n: usize,
    filter: Option<FlagFilter>,
    cfg: &CensusConfig,
) -> Result<BTreeMap<usize, FiveWay>, CensusError> {
    check_envelope("plain-class profile", Method::Z, n, cfg)?;
    let side = z_side(n, filter.is_some(), cfg)?;
    let units: Vec<u32> = (0..side.reps.len() as u32)
        .filter(|&i| match (filter, &side.flags) {
            (None, _) => true,
            (Some(f), Some(flags)) => f.passes(&flags[i as usize]),
            (Some(_), None) => unreachable!("flags computed when filtering"),
        })
        .collect();
    let profile = classify(
        units.iter().copied(),
        |i| side.r[i as usize],
        |i| side.m[i as usize],
        |i| side.genus[i as usize] as usize,
    );
    let mut per_genus: BTreeMap<usize, u64> = BTreeMap::new();
    for &i in &units {
        *per_genus.entry(side.genus[i as usize] as usize).or_insert(0) += 1;
    }
    for (g, fw) in &profile {
        assert_eq!(fw.total(), per_genus[g], "shape totals cover all units");
    }
    Ok(profile)
}

/// One genus row of plain-curve class counts.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneralRow {
    pub oo: u64,
    pub uo: u64,
    pub ou: u64,
    pub uu: u64,
}

impl GeneralRow {
    fn from_fiveway(fw: &FiveWay) -> GeneralRow {
        GeneralRow {
            oo: fw.total(),
            uo: fw.quotient_by_i(),
            ou: fw.quotient_by_j(),
            uu: fw.quotient_by_both(),
        }
    }

    pub fn get(&self, base: BaseKind) -> u64 {
        match base {
            BaseKind::OO => self.oo,
            BaseKind::UO => self.uo,
            BaseKind::OU => self.ou,
            BaseKind::UU => self.uu,
        }
    }
}

/// Per-genus class counts of the four plain kinds.
pub fn general_genus_table(
    n: usize,
    filter: Option<FlagFilter>,
    cfg: &CensusConfig,
) -> Result<BTreeMap<usize, GeneralRow>, CensusError> {
    Ok(z_system_profile(n, filter, cfg)?
        .iter()
        .map(|(g, fw)| (*g, GeneralRow::from_fiveway(fw)))
        .collect())
}

// ---------------------------------------------------------------------------
// Genus-0 census.
// ---------------------------------------------------------------------------

/// Genus-0 class counts of all twelve kinds.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct SphericalKindCounts {
    pub oo: u64,
    pub uo: u64,
    pub ou: u64,
    pub uu: u64,
    pub ooc: u64,
    pub oob: u64,
    pub uoc: u64,
    pub uob: u64,
    pub ouc: u64,
    pub oub: u64,
    pub uuc: u64,
    pub uub: u64,
}

impl SphericalKindCounts {
    pub fn get(&self, kind: Kind) -> u64 {
        match (kind.base, kind.colour) {
            (BaseKind::OO, ColourMode::Plain) => self.oo,
            (BaseKind::UO, ColourMode::Plain) => self.uo,
            (BaseKind::OU, ColourMode::Plain) => self.ou,
            (BaseKind::UU, ColourMode::Plain) => self.uu,
            (BaseKind::OO, ColourMode::Coloured) => self.ooc,
            (BaseKind::OO, ColourMode::Colourable) => self.oob,
            (BaseKind::UO, ColourMode::Coloured) => self.uoc,
            (BaseKind::UO, ColourMode::Colourable) => self.uob,
            (BaseKind::OU, ColourMode::Coloured) => self.ouc,
            (BaseKind::OU, ColourMode::Colourable) => self.oub,
            (BaseKind::UU, ColourMode::Coloured) => self.uuc,
            (BaseKind::UU, ColourMode::Colourable) => self.uub,
        }
    }
}

/// Genus-0 counts with each quality filter, along with the five-shape
/// profile of the plain classes under (reversal, mirror) for each filter.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct SphericalCounts {
    pub n: usize,
    pub all: SphericalKindCounts,
    pub kink_free: SphericalKindCounts,
    pub prime: SphericalKindCounts,
    pub all_profile: FiveWay,
    pub kink_free_profile: FiveWay,
    pub prime_profile: FiveWay,
}

fn spherical_kind_counts(
    side: &USide,
    filter: Option<FlagFilter>,
) -> (SphericalKindCounts, FiveWay) {
    let profiles = profiles_from_side(side, filter);
    let rows = bicolourable_rows(&profiles);
    let d = BicolourableRow::default();
    let row = rows.get(&0).unwrap_or(&d);
    assert!(
        rows.keys().all(|&g| g == 0),
        "genus-0 stratum contains only genus-0 classes"
    );
    let pairs = side.pair_units(filter);
    let pair_fw = classify(
        pairs.iter().copied(),
        |u| side.pair_reverse(u),
        |u| side.pair_mirror(u),
        |_| 0usize,
    );
    let fw = pair_fw.get(&0).copied().unwrap_or_default();
    assert_eq!(fw.total(), pairs.len() as u64, "shape totals cover all pairs");
    let general = GeneralRow::from_fiveway(&fw);
    // On the sphere every class is colourable, so the plain counts from the
    // swap-pair engine must equal the colourable counts from the coloured
    // engine — two independent pipelines agreeing.
    assert_eq!(general.oo, row.oob, "plain equals colourable on the sphere");
    assert_eq!(general.uo, row.uob, "plain equals colourable on the sphere");
    assert_eq!(general.ou, row.oub, "plain equals colourable on the sphere");
    assert_eq!(general.uu, row.uub, "plain equals colourable on the sphere");
    let counts = SphericalKindCounts {
        oo: general.oo,
        uo: general.uo,
        ou: general.ou,
        uu: general.uu,
        ooc: row.ooc,
        oob: row.oob,
        uoc: row.uoc,
        uob: row.uob,
        ouc: row.ouc,
        oub: row.oub,
        uuc: row.uuc,
        uub: row.uub,
    };
    (counts, fw)
}

/// The genus-0 census for one crossing count: all twelve kinds, unfiltered
/// and under both quality filters.
pub fn spherical_counts(n: usize, cfg: &CensusConfig) -> Result<SphericalCounts, CensusError> {
    if n == 0 || n > SCAN_LIMIT {
        return Err(CensusError::OutOfEnvelope {
            operation: "genus-0 census",
            n,
            limit: SCAN_LIMIT,
            hint: "beyond the supported range",
        });
    }
    let side = u_side(n, Some(0), true, cfg)?;
    let (all, all_profile) = spherical_kind_counts(&side, None);
    let (kink_free, kink_free_profile) = spherical_kind_counts(&side, Some(FlagFilter::KinkFree));
    let (prime, prime_profile) = spherical_kind_counts(&side, Some(FlagFilter::Prime));
    Ok(SphericalCounts {
        n,
        all,
        kink_free,
        prime,
        all_profile,
        kink_free_profile,
        prime_profile,
    })
}

// ---------------------------------------------------------------------------
// Count assembly.
// ---------------------------------------------------------------------------

/// One row of a count table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    /// `None` means the count is a total over all genera.
    pub genus: Option<usize>,
    pub count: BigUint,
}

/// A count table for one kind and crossing count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub kind: Kind,
    pub n: usize,
    pub filter: Option<FlagFilter>,
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn total(&self) -> BigUint {
        self.rows.iter().map(|r| &r.count).sum()
    }
}

/// Counts classes of one kind.
///
/// Routing:
/// * plain kinds with `totals_only` (or with neither genus nor filter given
///   when the crossing count exceeds the per-genus envelope) — exact totals
///   through the character formula, one `genus: None` row;
/// * genus 0 — the genus-0 census (filterable);
/// * plain kinds at other genera — the visit-order engine;
/// * coloured kinds — the gauge engine.
pub fn count_classes(
    kind: Kind,
    n: usize,
    genus: Option<usize>,
    totals_only: bool,
    filter: Option<FlagFilter>,
    cfg: &CensusConfig,
) -> Result<CountTable, CensusError> {
    if n == 0 {
        return Err(CensusError::Unsupported(
            "counts start at one crossing".to_string(),
        ));
    }
    let table = |rows| CountTable {
        kind,
        n,
        filter,
        rows,
    };
    let pick = |rows: BTreeMap<usize, u64>| -> Vec<CountRow> {
        match genus {
            Some(g) => vec![CountRow {
                genus: Some(g),
                count: BigUint::from(rows.get(&g).copied().unwrap_or(0)),
            }],
            None => rows
                .into_iter()
                .map(|(g, c)| CountRow {
                    genus: Some(g),
                    count: BigUint::from(c),
                })
                .collect(),
        }
    };

    if kind.colour == ColourMode::Plain {
        let z_limit = super::sweep_envelope(Method::Z, cfg.allow_slow);
        let totals_route =
            totals_only || (genus.is_none() && filter.is_none() && n > z_limit);
        if totals_route {
            if filter.is_some() {
                return Err(CensusError::Unsupported(
                    "filtered counts need per-class tables, not character-formula totals"
                        .to_string(),
                ));
            }
            if genus.is_some() {
                return Err(CensusError::Unsupported(
                    "character-formula totals cover all genera; drop the genus restriction"
                        .to_string(),
                ));
            }
            if n > TOTALS_LIMIT {
                return Err(CensusError::OutOfEnvelope {
                    operation: "character-formula totals",
                    n,
                    limit: TOTALS_LIMIT,
                    hint: "beyond the supported range",
                });
            }
            let count = count_total_immersions(kind.base, n)?;
            return Ok(table(vec![CountRow { genus: None, count }]));
        }
        if genus == Some(0) && n <= SCAN_LIMIT {
            let counts = spherical_counts(n, cfg)?;
            let picked = match filter {
                None => counts.all,
                Some(FlagFilter::KinkFree) => counts.kink_free,
                Some(FlagFilter::Prime) => counts.prime,
            };
            return Ok(table(vec![CountRow {
                genus: Some(0),
                count: BigUint::from(picked.get(kind)),
            }]));
        }
        let rows = general_genus_table(n, filter, cfg)?;
        return Ok(table(pick(
            rows.into_iter().map(|(g, r)| (g, r.get(kind.base))).collect(),
        )));
    }

    // Coloured kinds.
    if totals_only {
        return Err(CensusError::Unsupported(
            "character-formula totals exist for the plain kinds only".to_string(),
        ));
    }
    if genus == Some(0) && n <= SCAN_LIMIT {
        let counts = spherical_counts(n, cfg)?;
        let picked = match filter {
            None => counts.all,
            Some(FlagFilter::KinkFree) => counts.kink_free,
            Some(FlagFilter::Prime) => counts.prime,
        };
        return Ok(table(vec![CountRow {
            genus: Some(0),
            count: BigUint::from(picked.get(kind)),
        }]));
    }
    let rows = bicolourable_genus_table(n, filter, cfg)?;
    let col = |row: &BicolourableRow| -> u64 {
        match (kind.base, kind.colour) {
            (BaseKind::OO, ColourMode::Coloured) => row.ooc,
            (BaseKind::OO, ColourMode::Colourable) => row.oob,
            (BaseKind::UO, ColourMode::Coloured) => row.uoc,
            (BaseKind::UO, ColourMode::Colourable) => row.uob,
            (BaseKind::OU, ColourMode::Coloured) => row.ouc,
            (BaseKind::OU, ColourMode::Colourable) => row.oub,
            (BaseKind::UU, ColourMode::Coloured) => row.uuc,
            (BaseKind::UU, ColourMode::Colourable) => row.uub,
            (_, ColourMode::Plain) => unreachable!("plain kinds handled above"),
        }
    };
    Ok(table(pick(
        rows.iter().map(|(g, r)| (*g, col(r))).collect(),
    )))
}
