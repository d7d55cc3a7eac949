//! Diagram-quality flags of a class: kinks, cut vertices, and two-edge
//! cuts of the underlying 4-valent multigraph. All three are invariant
//! under the acting group and under the class involutions, so they may be
//! computed from any representative.

use super::{CensusError, Method};
use crate::groups::passage_pairing;
use crate::maps::MultiGraph;
use crate::perm::Perm;
use crate::small::SPerm;

/// Quality flags of one class.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct ClassFlags {
    /// No crossing is a kink (a loop returning immediately to its crossing).
    pub kink_free: bool,
    /// The underlying multigraph has no cut vertex.
    pub irreducible: bool,
    /// The underlying multigraph has no two-edge cut.
    pub indecomposable: bool,
}

impl ClassFlags {
    /// The strongest filter: kink-free, irreducible and indecomposable.
    pub fn is_prime(&self) -> bool {
        self.kink_free && self.irreducible && self.indecomposable
    }
}

/// A class filter for count tables and listings.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FlagFilter {
    /// Keep classes with no kink.
    KinkFree,
    /// Keep kink-free, irreducible, indecomposable classes.
    Prime,
}

impl FlagFilter {
    pub fn passes(&self, flags: &ClassFlags) -> bool {
        match self {
            FlagFilter::KinkFree => flags.kink_free,
            FlagFilter::Prime => flags.is_prime(),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            FlagFilter::KinkFree => "kink-free",
            FlagFilter::Prime => "prime",
        }
    }
}

/// Computes the flags of a class from any representative.
pub fn class_flags(method: Method, n: usize, rep: &Perm) -> Result<ClassFlags, CensusError> {
    let expected_degree = match method {
        Method::X => 4 * n,
        _ => 2 * n,
    };
    if rep.degree() != expected_degree {
        return Err(CensusError::Unsupported(format!(
            "representative degree {} does not match n={n} for method {}",
            rep.degree(),
            method.as_str()
        )));
    }
    let code = SPerm::from_perm(rep);
    Ok(match method {
        Method::X => x_flags(n, rep),
        Method::Y | Method::UDihedral | Method::UCyclic => u_flags(n, &code),
        Method::Z => z_flags(n, &code),
    })
}

fn graph_flags(n: usize, kink_free: bool, edges: Vec<(usize, usize)>) -> ClassFlags {
    let graph = MultiGraph::new(n, edges);
    ClassFlags {
        kink_free,
        irreducible: !graph.has_cut_vertex(),
        indecomposable: !graph.has_two_edge_cut(),
    }
}

/// Gauge / white-face codes: crossing of edge e is `⌊e/2⌋` (0-based); edge
/// e joins its own crossing to the crossing of `σ⁻¹(e)`. A kink shows up as
/// a fixed point of `σ` or of `σρ`.
pub(crate) fn u_flags(n: usize, sigma: &SPerm) -> ClassFlags {
    let m = 2 * n;
    debug_assert_eq!(sigma.len(), m);
    let mut sigma_inv = SPerm::identity(m);
    sigma.inverse_into(&mut sigma_inv);
    let mut kink = false;
    for i in 0..m {
        // fixed point of σ, or of σρ (σ maps the pair partner back to i)
        if sigma.a[i] as usize == i || sigma.a[i ^ 1] as usize == i {
            kink = true;
            break;
        }
    }
    let edges = (0..m)
        .map(|e| (e >> 1, (sigma_inv.a[e] as usize) >> 1))
        .collect();
    graph_flags(n, !kink, edges)
}

/// Visit orders: edge e runs from the crossing of `π⁻¹(e)` to the crossing
/// of e. A kink is a passage pair traversed back-to-back: `π(ρ(i)) = i`.
pub(crate) fn z_flags(n: usize, pi: &SPerm) -> ClassFlags {
    let m = 2 * n;
    debug_assert_eq!(pi.len(), m);
    let mut pi_inv = SPerm::identity(m);
    pi.inverse_into(&mut pi_inv);
    let kink = (0..m).any(|i| pi.a[i ^ 1] as usize == i);
    let edges = (0..m)
        .map(|e| ((pi_inv.a[e] as usize) >> 1, e >> 1))
        .collect();
    graph_flags(n, !kink, edges)
}

/// Pairing codes: crossings are the quadruples, edges are the τ-pairs, and
/// a kink is a fixed point of στ.
fn x_flags(n: usize, tau: &Perm) -> ClassFlags {
    let m = 4 * n;
    let sigma = crate::groups::quad_rotation(n);
    let st = sigma.compose(tau);
    let kink = (1..=m).any(|i| st.apply(i) == i);
    let mut edges = Vec::with_capacity(2 * n);
    for i in 1..=m {
        let j = tau.apply(i);
        if i < j {
            edges.push(((i - 1) / 4, (j - 1) / 4));
        }
    }
    graph_flags(n, !kink, edges)
}

/// Verifies on materialised group elements that flags are class invariants:
/// used by tests.
#[allow(dead_code)]
pub(crate) fn flags_invariant_under(
    method: Method,
    n: usize,
    rep: &Perm,
    elems: &[SPerm],
) -> Result<bool, CensusError> {
    let base = class_flags(method, n, rep)?;
    let code = SPerm::from_perm(rep);
    let mut img = code;
    for g in elems {
        g.conjugate_into(&code, &mut img);
        if class_flags(method, n, &img.to_perm())? != base {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The passage pairing in kernel form (degree 2n), shared helper.
#[allow(dead_code)]
pub(crate) fn rho_sperm(n: usize) -> SPerm {
    SPerm::from_perm(&passage_pairing(n))
}
