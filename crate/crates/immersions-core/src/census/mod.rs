//! The classification pipeline: enumerating equivalence classes of curves
//! for each encoding, acting on them with the three class involutions
//! (colour swap, mirror, reversal), deriving count tables for every
//! equivalence kind, and filtering by diagram quality (kink-free, prime).
//!
//! Equivalence kinds are named by two letters — curve then surface, `O`
//! oriented, `U` unoriented — optionally suffixed `c` (checkerboard
//! colouring fixed) or `b` (colourable, colouring forgotten).

mod five_way;
mod flags;
mod spectrum;
mod tables;
pub mod verify;

pub use five_way::{classify, FiveWay};
pub use flags::{class_flags, ClassFlags, FlagFilter};
pub use spectrum::{y_orbit_spectrum, SpectrumRow};
pub use tables::{
    bicolourable_genus_table, count_classes, general_genus_table, long_curve_genus_histogram,
    spherical_counts, system_profiles, z_system_profile, BicolourableRow, CountRow, CountTable,
    GeneralRow, SphericalCounts, SphericalKindCounts, SystemProfiles,
};

use crate::cosets::BaseKind;
use crate::encodings::{x_classify, y_genus_table, z_genus_table, XCode};
use crate::groups::{
    edge_rotation, full_reversal, make_group, passage_pairing, GroupError, GroupName, GroupSpec,
};
use crate::orbits::{transversal_sweep, SweepConfig, SweepError, UniverseSpec};
use crate::perm::Perm;
use crate::small::SPerm;

/// Errors from the census pipeline.
#[derive(Debug, thiserror::Error)]
pub enum CensusError {
    #[error("{operation} is out of the default envelope at n={n} (limit {limit}); {hint}")]
    OutOfEnvelope {
        operation: &'static str,
        n: usize,
        limit: usize,
        hint: &'static str,
    },
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Sweep(#[from] SweepError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Code(#[from] crate::encodings::CodeError),
    #[error(transparent)]
    Coset(#[from] crate::cosets::CosetError),
}

/// Which encoding and acting group a class lives in.
///
/// * `X` — pairing codes modulo half-edge relabelings: classes of curves
///   with unoriented parametrisation on oriented surfaces.
/// * `Y` — white-face codes modulo pairing-preserving relabelings: classes
///   of coloured diagrams with unoriented parametrisation.
/// * `UDihedral` — gauge codes modulo dihedral reparametrisation: the same
///   classes as `Y`, one gauge representative each.
/// * `UCyclic` — gauge codes modulo rotation only: coloured classes with
///   oriented parametrisation.
/// * `Z` — visit-order codes modulo crossing relabelings: classes of curves
///   with oriented parametrisation on oriented surfaces (no colour).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    X,
    Y,
    UDihedral,
    UCyclic,
    Z,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::X,
        Method::Y,
        Method::UDihedral,
        Method::UCyclic,
        Method::Z,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::X => "x",
            Method::Y => "y",
            Method::UDihedral => "u-dihedral",
            Method::UCyclic => "u-cyclic",
            Method::Z => "z",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        match s.to_ascii_lowercase().as_str() {
            "x" => Some(Method::X),
            "y" => Some(Method::Y),
            "u-dihedral" | "u" => Some(Method::UDihedral),
            "u-cyclic" | "uc" => Some(Method::UCyclic),
            "z" => Some(Method::Z),
            _ => None,
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Colour handling for a kind: plain curves, colourable curves with the
/// colouring forgotten (`b`), or coloured curves (`c`).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColourMode {
    Plain,
    Colourable,
    Coloured,
}

/// A full equivalence kind: base orientation pair plus colour mode.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Kind {
    pub base: BaseKind,
    pub colour: ColourMode,
}

impl Kind {
    pub fn new(base: BaseKind, colour: ColourMode) -> Kind {
        Kind { base, colour }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        let s = s.to_ascii_lowercase();
        let (base_str, colour) = match s.len() {
            2 => (&s[..], ColourMode::Plain),
            3 if s.ends_with('b') => (&s[..2], ColourMode::Colourable),
            3 if s.ends_with('c') => (&s[..2], ColourMode::Coloured),
            _ => return None,
        };
        let base = match base_str {
            "oo" => BaseKind::OO,
            "uo" => BaseKind::UO,
            "ou" => BaseKind::OU,
            "uu" => BaseKind::UU,
            _ => return None,
        };
        Some(Kind { base, colour })
    }

    pub fn to_string_code(&self) -> String {
        let suffix = match self.colour {
            ColourMode::Plain => "",
            ColourMode::Colourable => "b",
            ColourMode::Coloured => "c",
        };
        format!("{}{}", self.base.as_str(), suffix)
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_string_code())
    }
}

/// One equivalence class: the method it was enumerated under, its canonical
/// representative, genus, orbit size and stabilizer order in the acting
/// group.
#[derive(Clone, Debug)]
pub struct ImmersionClass {
    pub method: Method,
    pub n: usize,
    pub genus: usize,
    pub rep: Perm,
    pub orbit_len: u64,
    pub stabilizer_order: u64,
}

/// Execution controls for census operations.
#[derive(Clone, Debug, Default)]
pub struct CensusConfig {
    pub sweep: SweepConfig,
    /// Unlocks operations beyond the default envelope (large single-core
    /// sweeps: pairing codes at n = 5, visit orders at n = 7, gauge codes at
    /// n ≥ 9).
    pub allow_slow: bool,
}

impl CensusConfig {
    pub fn with_sweep(sweep: SweepConfig) -> CensusConfig {
        CensusConfig {
            sweep,
            allow_slow: false,
        }
    }
}

/// Default (and `allow_slow`) upper bounds on `n` for full-universe orbit
/// sweeps per method, sized for a single desk-scale core.
pub fn sweep_envelope(method: Method, allow_slow: bool) -> usize {
    match (method, allow_slow) {
        (Method::X, false) => 4,
        (Method::X, true) => 5,
        (Method::Y | Method::UDihedral | Method::UCyclic, false) => 8,
        (Method::Y | Method::UDihedral | Method::UCyclic, true) => 9,
        (Method::Z, false) => 6,
        (Method::Z, true) => 7,
    }
}

pub(crate) fn check_envelope(
    operation: &'static str,
    method: Method,
    n: usize,
    cfg: &CensusConfig,
) -> Result<(), CensusError> {
    let limit = sweep_envelope(method, cfg.allow_slow);
    if n == 0 || n > limit {
        return Err(CensusError::OutOfEnvelope {
            operation,
            n,
            limit,
            hint: if cfg.allow_slow {
                "beyond the supported range"
            } else {
                "rerun with the slow-operations flag to extend the envelope"
            },
        });
    }
    Ok(())
}

/// The acting group of each method.
pub fn acting_group(method: Method, n: usize) -> Result<GroupSpec, GroupError> {
    let name = match method {
        Method::X => GroupName::CSigma,
        Method::Y => GroupName::CRho,
        Method::UDihedral => GroupName::Dn,
        Method::UCyclic => GroupName::Zn,
        Method::Z => GroupName::CRhoPrime,
    };
    make_group(name, n)
}

/// Enumerates all classes for a method, sorted by (genus, representative).
///
/// For `Y` the classes are enumerated through their gauge representatives
/// (every white-face class contains exactly one dihedral gauge orbit); the
/// reported representative is the dihedral-canonical gauge code and the
/// orbit length refers to the full pairing-preserving group.
pub fn enumerate_classes(
    method: Method,
    n: usize,
    cfg: &CensusConfig,
) -> Result<Vec<ImmersionClass>, CensusError> {
    check_envelope("class enumeration", method, n, cfg)?;
    let mut classes = match method {
        Method::X => {
            let group = make_group(GroupName::CSigma, n)?;
            let orbits = transversal_sweep(&UniverseSpec::XPrime { n }, &group, &cfg.sweep)?;
            orbits
                .into_iter()
                .map(|o| {
                    let code = XCode {
                        n,
                        tau: o.canonical.clone(),
                    };
                    let genus = x_classify(&code)
                        .expect("swept pairing codes are single curves");
                    ImmersionClass {
                        method,
                        n,
                        genus,
                        rep: o.canonical,
                        orbit_len: o.len,
                        stabilizer_order: o.stabilizer_order,
                    }
                })
                .collect::<Vec<_>>()
        }
        Method::UDihedral | Method::UCyclic | Method::Y => {
            let group_name = if method == Method::UCyclic {
                GroupName::Zn
            } else {
                GroupName::Dn
            };
            let group = make_group(group_name, n)?;
            let orbits = transversal_sweep(&UniverseSpec::UCoset { n }, &group, &cfg.sweep)?;
            let full_order = if method == Method::Y {
                make_group(GroupName::CRho, n)?
                    .order_u64()
                    .expect("fits u64 in envelope")
            } else {
                0
            };
            orbits
                .into_iter()
                .map(|o| {
                    let genus = y_genus_table(&SPerm::from_perm(&o.canonical));
                    let (orbit_len, stab) = if method == Method::Y {
                        (full_order / o.stabilizer_order, o.stabilizer_order)
                    } else {
                        (o.len, o.stabilizer_order)
                    };
                    ImmersionClass {
                        method,
                        n,
                        genus,
                        rep: o.canonical,
                        orbit_len,
                        stabilizer_order: stab,
                    }
                })
                .collect()
        }
        Method::Z => {
            let group = make_group(GroupName::CRhoPrime, n)?;
            let orbits = transversal_sweep(&UniverseSpec::ZPrime { n }, &group, &cfg.sweep)?;
            orbits
                .into_iter()
                .map(|o| {
                    let genus = z_genus_table(SPerm::from_perm(&o.canonical).a[..2 * n].as_ref());
                    ImmersionClass {
                        method,
                        n,
                        genus,
                        rep: o.canonical,
                        orbit_len: o.len,
                        stabilizer_order: o.stabilizer_order,
                    }
                })
                .collect()
        }
    };
    classes.sort_by(|a, b| (a.genus, &a.rep).cmp(&(b.genus, &b.rep)));
    Ok(classes)
}

/// The three class involutions.
///
/// * `Swap` — exchange the two checkerboard colours (coloured methods only).
/// * `Mirror` — reverse the surface orientation.
/// * `Reverse` — reverse the curve's parametrisation (only meaningful where
///   the acting group does not already contain it).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Involution {
    Swap,
    Mirror,
    Reverse,
}

impl Involution {
    pub fn as_str(&self) -> &'static str {
        match self {
            Involution::Swap => "swap",
            Involution::Mirror => "mirror",
            Involution::Reverse => "reverse",
        }
    }
}

/// Involutions available per method (at class level).
pub fn available_involutions(method: Method) -> &'static [Involution] {
    match method {
        Method::X => &[],
        Method::Y | Method::UDihedral => &[Involution::Swap, Involution::Mirror],
        Method::UCyclic => &[Involution::Swap, Involution::Mirror, Involution::Reverse],
        Method::Z => &[Involution::Mirror, Involution::Reverse],
    }
}

/// Image of a code under a class involution. The image is a valid code of
/// the same method whose class does not depend on which class member was
/// supplied.
pub fn involution_image(
    method: Method,
    inv: Involution,
    n: usize,
    rep: &Perm,
) -> Result<Perm, CensusError> {
    if !available_involutions(method).contains(&inv) {
        return Err(CensusError::Unsupported(format!(
            "involution {} is not defined for method {}",
            inv.as_str(),
            method.as_str()
        )));
    }
    if rep.degree() != 2 * n {
        return Err(CensusError::Unsupported(format!(
            "representative degree {} does not match n={n}",
            rep.degree()
        )));
    }
    let rho = passage_pairing(n);
    Ok(match (method, inv) {
        (Method::Y, Involution::Swap) => rep.inverse().compose(&rho),
        (Method::Y, Involution::Mirror) => rep.compose(&rho),
        (Method::UDihedral | Method::UCyclic, Involution::Swap) => {
            let beta = edge_rotation(n);
            beta.inverse()
                .compose(&rho)
                .compose(&rep.inverse())
                .compose(&beta)
        }
        (Method::UDihedral | Method::UCyclic, Involution::Mirror) => rep.compose(&rho),
        (Method::UCyclic, Involution::Reverse) => {
            let r = full_reversal(n);
            r.compose(rep).compose(&r)
        }
        (Method::Z, Involution::Mirror) => rho.compose(rep).compose(&rho),
        (Method::Z, Involution::Reverse) => rep.inverse(),
        _ => unreachable!("availability checked above"),
    })
}

// ---------------------------------------------------------------------------
// Kernel-level involution helpers shared by the table builders.
// ---------------------------------------------------------------------------

/// Fixed permutations of one parameter, in kernel form.
pub(crate) struct Fixtures {
    pub rho: SPerm,
    pub beta_inv_rho: SPerm, // β⁻¹ρ (left factor of the gauge swap)
    pub beta: SPerm,
    pub rev: SPerm,
}

impl Fixtures {
    pub fn new(n: usize) -> Fixtures {
        let beta = SPerm::from_perm(&edge_rotation(n));
        let rho = SPerm::from_perm(&passage_pairing(n));
        let beta_inv = SPerm::from_perm(&edge_rotation(n).inverse());
        let mut beta_inv_rho = SPerm::identity(2 * n);
        beta_inv.compose_into(&rho, &mut beta_inv_rho);
        Fixtures {
            rho,
            beta_inv_rho,
            beta,
            rev: SPerm::from_perm(&full_reversal(n)),
        }
    }

    /// Gauge swap: `β⁻¹ρ σ⁻¹ β`.
    #[inline]
    pub fn u_swap(&self, sigma: &SPerm, out: &mut SPerm) {
        let mut inv = SPerm::identity(sigma.len());
        sigma.inverse_into(&mut inv);
        let mut t = SPerm::identity(sigma.len());
        self.beta_inv_rho.compose_into(&inv, &mut t);
        t.compose_into(&self.beta, out);
    }

    /// Mirror: `σρ`.
    #[inline]
    pub fn u_mirror(&self, sigma: &SPerm, out: &mut SPerm) {
        sigma.compose_into(&self.rho, out);
    }

    /// Reversal: `rσr`.
    #[inline]
    pub fn u_reverse(&self, sigma: &SPerm, out: &mut SPerm) {
        let mut t = SPerm::identity(sigma.len());
        self.rev.compose_into(sigma, &mut t);
        t.compose_into(&self.rev, out);
    }

    /// Visit-order mirror: `ρπρ`.
    #[inline]
    pub fn z_mirror(&self, pi: &SPerm, out: &mut SPerm) {
        let mut t = SPerm::identity(pi.len());
        self.rho.compose_into(pi, &mut t);
        t.compose_into(&self.rho, out);
    }

    /// Visit-order reversal: `π⁻¹`.
    #[inline]
    pub fn z_reverse(&self, pi: &SPerm, out: &mut SPerm) {
        pi.inverse_into(out);
    }
}

/// Lexicographically smallest conjugate under a materialised group.
pub(crate) fn canon_in(elems: &[SPerm], x: &SPerm) -> SPerm {
    let mut best = *x;
    let mut y = *x;
    for g in elems {
        g.conjugate_into(x, &mut y);
        if y < best {
            best = y;
        }
    }
    best
}
