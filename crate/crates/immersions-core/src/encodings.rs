//! The four permutation encodings of a closed curve with `n` double points
//! on a closed oriented surface, with validity tests, genus computation,
//! exhaustive generation, and conversions between encodings.
//!
//! * [`XCode`] — on `4n` half-edges: the fixed clockwise rotation `σ` turns
//!   the four half-edges of each crossing, and the code's pairing `τ` glues
//!   half-edges into edges. Faces are the cycles of `στ`; the curve is one
//!   component iff `σ²τ` (the edge-to-opposite-edge walk) is a pair of
//!   `2n`-cycles.
//! * [`YCode`] — on `2n` points carrying the pairing `ρ = (1,2)(3,4)…`; the
//!   code is a single permutation `σ` whose cycles walk the white faces of a
//!   checkerboard colouring, while `σρ` walks the shaded faces. Only
//!   checkerboard-colourable curve diagrams have such codes.
//! * [`UCode`] — the gauge-fixed form of a `YCode`: `σ = β·ξ` with `β` the
//!   full rotation `(1,2,…,2n)` and `ξ` preserving `ρ`. Every `YCode` class
//!   contains such representatives; the curve traverses edges `1,…,2n` in
//!   order.
//! * [`ZCode`] — on `2n` edges: a single `2n`-cycle `π` giving the order in
//!   which the curve's edges are visited (`π` maps each edge to the next
//!   edge entering the same crossing from the opposite branch). Works for
//!   every curve diagram, colourable or not.

use crate::groups::{edge_rotation, passage_pairing, quad_rotation};
use crate::orbits::{RankedUniverse, XPrimeUniverse};
use crate::perm::Perm;
use crate::small::{cycle_count_table, SPerm};
use serde::Serialize;

/// Errors from code validation and conversion.
#[derive(Debug, thiserror::Error)]
pub enum CodeError {
    #[error("expected a permutation of degree {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("the pairing must be an involution without fixed points")]
    NotAPairing,
    #[error("the gauge factor does not preserve the passage pairing")]
    NotAGaugeCode,
    #[error("the visit order must be a single cycle through all 2n edges")]
    NotAFullCycle,
    #[error("the code describes more than one curve component")]
    NotOneCurve,
    #[error("the diagram is not checkerboard-colourable")]
    NotBicolourable,
    #[error("crossing count {0} outside the supported range for this operation")]
    BadCrossingCount(usize),
}

// ---------------------------------------------------------------------------
// X: pairing codes on 4n half-edges.
// ---------------------------------------------------------------------------

/// Pairing code: `n` crossings, half-edges `1..=4n` (crossing `a` owns
/// `4a−3..=4a` in clockwise order), and a fixed-point-free involution `tau`
/// gluing half-edges into `2n` edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XCode {
    pub n: usize,
    pub tau: Perm,
}

impl XCode {
    pub fn new(n: usize, tau: Perm) -> Result<XCode, CodeError> {
        if n == 0 {
            return Err(CodeError::BadCrossingCount(n));
        }
        if tau.degree() != 4 * n {
            return Err(CodeError::WrongDegree {
                expected: 4 * n,
                got: tau.degree(),
            });
        }
        let ok = (1..=4 * n).all(|i| {
            let j = tau.apply(i);
            j != i && tau.apply(j) == i
        });
        if !ok {
            return Err(CodeError::NotAPairing);
        }
        Ok(XCode { n, tau })
    }
}

/// Classification of a pairing code: genus of the cellular surface if the
/// code is a single closed curve, `None` if it has several components.
pub fn x_classify(code: &XCode) -> Option<usize> {
    let n = code.n;
    let sigma = SPerm::from_perm(&quad_rotation(n));
    let tau = SPerm::from_perm(&code.tau);
    let mut sigma2 = SPerm::identity(4 * n);
    sigma.compose_into(&sigma, &mut sigma2);
    let mut walk = SPerm::identity(4 * n);
    sigma2.compose_into(&tau, &mut walk);
    if !walk.is_two_equal_cycles() {
        return None;
    }
    let mut faces = SPerm::identity(4 * n);
    sigma.compose_into(&tau, &mut faces);
    let f = faces.cycle_count() as usize;
    assert!(
        n + 2 >= f && (n + 2 - f).is_multiple_of(2),
        "face count {f} impossible for a one-curve code with n={n}"
    );
    Some((n + 2 - f) / 2)
}

/// Generates every valid one-curve pairing code with `n` crossings, in rank
/// order; there are exactly `(4n−2)!!` of them. Supported for `n ≤ 5`
/// (`n = 4` already yields 645 120 codes).
pub fn x_prime_generate(n: usize) -> Result<Vec<XCode>, CodeError> {
    let u = XPrimeUniverse::new(n).map_err(|_| CodeError::BadCrossingCount(n))?;
    let mut out = Vec::with_capacity(u.size_u64() as usize);
    let mut sp = SPerm::identity(4 * n);
    for r in 0..u.size_u64() {
        u.unrank(r, &mut sp);
        out.push(XCode {
            n,
            tau: sp.to_perm(),
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Y: white-face codes on 2n points.
// ---------------------------------------------------------------------------

/// White-face code: a permutation `σ` of the `2n` edge labels of a
/// checkerboard-coloured curve diagram; `σ` walks white faces clockwise,
/// `σ·ρ` walks shaded faces, where `ρ = (1,2)(3,4)…` pairs the two edge
/// labels at each crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YCode {
    pub n: usize,
    pub sigma: Perm,
}

impl YCode {
    pub fn new(n: usize, sigma: Perm) -> Result<YCode, CodeError> {
        if n == 0 {
            return Err(CodeError::BadCrossingCount(n));
        }
        if sigma.degree() != 2 * n {
            return Err(CodeError::WrongDegree {
                expected: 2 * n,
                got: sigma.degree(),
            });
        }
        Ok(YCode { n, sigma })
    }
}

/// Classification of a white-face code: `Some(genus)` if it describes a
/// single closed curve (the test is that `ρ·σρσ⁻¹` is a pair of `n`-cycles),
/// otherwise `None`. The genus satisfies `c(σ) + c(σρ) = n + 2 − 2g`.
pub fn y_classify(code: &YCode) -> Option<usize> {
    let n = code.n;
    let rho = SPerm::from_perm(&passage_pairing(n));
    let s = SPerm::from_perm(&code.sigma);
    let mut inv = SPerm::identity(2 * n);
    s.inverse_into(&mut inv);
    let mut t1 = SPerm::identity(2 * n);
    let mut t2 = SPerm::identity(2 * n);
    // ρ · σ ρ σ⁻¹
    s.compose_into(&rho, &mut t1); // σρ
    t1.compose_into(&inv, &mut t2); // σρσ⁻¹
    let mut test = SPerm::identity(2 * n);
    rho.compose_into(&t2, &mut test);
    if !test.is_two_equal_cycles() {
        return None;
    }
    let mut srho = SPerm::identity(2 * n);
    s.compose_into(&rho, &mut srho);
    let c = (s.cycle_count() + srho.cycle_count()) as usize;
    assert!(
        n + 2 >= c && (n + 2 - c).is_multiple_of(2),
        "cycle counts impossible for a one-curve code with n={n}"
    );
    Some((n + 2 - c) / 2)
}

// ---------------------------------------------------------------------------
// U: gauge-fixed white-face codes.
// ---------------------------------------------------------------------------

/// Gauge-fixed white-face code `σ = β·ξ`: the curve walks edges `1,…,2n` in
/// order, so only the pairing-preserving factor `ξ` varies. There are
/// exactly `2ⁿ·n!` such codes and every one is a valid single-curve
/// [`YCode`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UCode {
    pub n: usize,
    pub xi: Perm,
}

impl UCode {
    pub fn new(n: usize, xi: Perm) -> Result<UCode, CodeError> {
        if n == 0 {
            return Err(CodeError::BadCrossingCount(n));
        }
        if xi.degree() != 2 * n {
            return Err(CodeError::WrongDegree {
                expected: 2 * n,
                got: xi.degree(),
            });
        }
        let rho = passage_pairing(n);
        if xi.compose(&rho) != rho.compose(&xi) {
            return Err(CodeError::NotAGaugeCode);
        }
        Ok(UCode { n, xi })
    }

    /// The full white-face permutation `σ = β·ξ`.
    pub fn sigma(&self) -> Perm {
        edge_rotation(self.n).compose(&self.xi)
    }

    /// Splits a white-face permutation into gauge form; errors if `β⁻¹σ`
    /// does not preserve the pairing.
    pub fn from_sigma(n: usize, sigma: &Perm) -> Result<UCode, CodeError> {
        if sigma.degree() != 2 * n {
            return Err(CodeError::WrongDegree {
                expected: 2 * n,
                got: sigma.degree(),
            });
        }
        let xi = edge_rotation(n).inverse().compose(sigma);
        UCode::new(n, xi)
    }

    /// Genus of the surface (gauge codes are always single curves).
    pub fn genus(&self) -> usize {
        y_classify(&YCode {
            n: self.n,
            sigma: self.sigma(),
        })
        .expect("gauge codes always describe a single curve")
    }
}

/// Generates every gauge code with `n` crossings in rank order (`2ⁿ·n!` of
/// them). Supported for `n ≤ 9` at reasonable sizes.
pub fn u_enumerate(n: usize) -> Result<Vec<UCode>, CodeError> {
    let u = crate::orbits::UCosetUniverse::new(n).map_err(|_| CodeError::BadCrossingCount(n))?;
    let beta_inv = SPerm::from_perm(&edge_rotation(n).inverse());
    let mut out = Vec::with_capacity(u.size_u64() as usize);
    let mut sp = SPerm::identity(2 * n);
    let mut xi = SPerm::identity(2 * n);
    for r in 0..u.size_u64() {
        u.unrank(r, &mut sp);
        beta_inv.compose_into(&sp, &mut xi);
        out.push(UCode {
            n,
            xi: xi.to_perm(),
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Z: visit-order codes on 2n edges.
// ---------------------------------------------------------------------------

/// Visit-order code: `π` is the full `2n`-cycle mapping each edge of the
/// curve to the edge on the opposite branch of the crossing it enters, i.e.
/// the order in which edges are traversed. Edges are pre-labelled so that
/// edges `2a−1, 2a` enter crossing `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZCode {
    pub n: usize,
    pub pi: Perm,
}

impl ZCode {
    pub fn new(n: usize, pi: Perm) -> Result<ZCode, CodeError> {
        if n == 0 {
            return Err(CodeError::BadCrossingCount(n));
        }
        if pi.degree() != 2 * n {
            return Err(CodeError::WrongDegree {
                expected: 2 * n,
                got: pi.degree(),
            });
        }
        if pi.cycle_count() != 1 {
            return Err(CodeError::NotAFullCycle);
        }
        Ok(ZCode { n, pi })
    }
}

/// The boundary walk of a visit-order code: a permutation of `4n` symbols
/// (the `2n` edges, each with a left and a right side) whose cycles are the
/// faces of the diagram. Genus then follows from the face count.
pub fn psi_of(code: &ZCode) -> Perm {
    let n = code.n;
    let m = 2 * n;
    let pi = &code.pi;
    let pi_inv = pi.inverse();
    let mut img = vec![0u8; 2 * m];
    // 1-based formulas; `i` runs over 1..=2n, second block is offset by 2n.
    for i in 1..=m {
        let fwd = if i % 2 == 1 {
            pi.apply(i + 1)
        } else {
            i - 1 + m
        };
        img[i - 1] = (fwd - 1) as u8;
        let j = pi_inv.apply(i);
        let bwd = if j % 2 == 1 {
            j + 1 + m
        } else {
            pi.apply(j - 1)
        };
        img[i + m - 1] = (bwd - 1) as u8;
    }
    Perm::from_image_table(img)
}

/// Genus of the cellular surface of a visit-order code:
/// `faces = cycles of the boundary walk` and `n + 2 − faces = 2·genus`.
pub fn z_genus(code: &ZCode) -> usize {
    let f = psi_of(code).cycle_count();
    let n = code.n;
    assert!(
        n + 2 >= f && (n + 2 - f).is_multiple_of(2),
        "face count {f} impossible for a one-curve code with n={n}"
    );
    (n + 2 - f) / 2
}

/// Fast genus kernel for 0-based visit-order tables (census hot path).
pub(crate) fn z_genus_table(pi: &[u8]) -> usize {
    let m = pi.len();
    let n = m / 2;
    debug_assert!(m <= 32);
    let mut pi_inv = [0u8; 32];
    for (i, &v) in pi.iter().enumerate() {
        pi_inv[v as usize] = i as u8;
    }
    let mut walk = [0u8; 64];
    // 0-based translation: point p (0-based) is odd-labelled iff p % 2 == 0.
    for p in 0..m {
        walk[p] = if p % 2 == 0 {
            pi[p + 1]
        } else {
            (p - 1 + m) as u8
        };
        let j = pi_inv[p] as usize;
        walk[p + m] = if j.is_multiple_of(2) {
            (j + 1 + m) as u8
        } else {
            pi[j - 1]
        };
    }
    let f = cycle_count_table(&walk[..2 * m]) as usize;
    debug_assert!(n + 2 >= f && (n + 2 - f).is_multiple_of(2));
    (n + 2 - f) / 2
}

/// Fast genus kernel for 0-based gauge/white-face tables: counts cycles of
/// `σ` and `σρ`.
pub(crate) fn y_genus_table(sigma: &SPerm) -> usize {
    let m = sigma.len();
    let n = m / 2;
    let mut srho = [0u8; crate::small::SP_MAX];
    for (i, s) in srho[..m].iter_mut().enumerate() {
        *s = sigma.a[i ^ 1];
    }
    let c = cycle_count_table(&sigma.a[..m]) as usize + cycle_count_table(&srho[..m]) as usize;
    debug_assert!(n + 2 >= c && (n + 2 - c).is_multiple_of(2));
    (n + 2 - c) / 2
}

// ---------------------------------------------------------------------------
// Conversions.
// ---------------------------------------------------------------------------

/// Converts a gauge code to its white-face form (always possible).
pub fn convert_u_to_y(code: &UCode) -> YCode {
    YCode {
        n: code.n,
        sigma: code.sigma(),
    }
}

/// Converts a pairing code describing a single checkerboard-colourable curve
/// into a white-face code on the `2n` edges.
///
/// Faces (cycles of `στ`) are two-coloured so that the two sides of every
/// edge get different colours; the face containing half-edge 1 is declared
/// white. Each edge has exactly one half-edge on a white face; following the
/// white walks induces the white-face permutation `σ` on edges. The shaded
/// boundary walks run in the rotational sense opposite to the white ones, so
/// the shaded-face permutation is the *inverse* of the walk the face cycles
/// give directly; the quotient `σ⁻¹·(σρ)` then recovers the crossing
/// pairing, which a final relabelling normalises to `ρ = (1,2)(3,4)…`.
pub fn convert_x_to_y(code: &XCode) -> Result<YCode, CodeError> {
    let n = code.n;
    let deg = 4 * n;
    if x_classify(code).is_none() {
        return Err(CodeError::NotOneCurve);
    }
    let sigma = quad_rotation(n);
    let tau = &code.tau;
    let face_walk = sigma.compose(tau); // στ

    // Identify faces and their members.
    let faces = face_walk.cycles();
    let mut face_of = vec![usize::MAX; deg];
    for (fi, f) in faces.iter().enumerate() {
        for &h in f {
            face_of[h - 1] = fi;
        }
    }

    // Two-colour faces: the two sides of the edge {h, τh} must differ.
    let mut colour = vec![u8::MAX; faces.len()];
    let mut queue = std::collections::VecDeque::new();
    colour[face_of[0]] = 0; // face of half-edge 1 is white
    queue.push_back(face_of[0]);
    let mut coloured = 1;
    while let Some(fi) = queue.pop_front() {
        for &h in &faces[fi] {
            let other = face_of[tau.apply(h) - 1];
            if colour[other] == u8::MAX {
                colour[other] = 1 - colour[fi];
                coloured += 1;
                queue.push_back(other);
            } else if colour[other] == colour[fi] {
                return Err(CodeError::NotBicolourable);
            }
        }
    }
    if coloured != faces.len() {
        // A one-curve diagram is connected, so its face-adjacency graph is
        // too; unreached faces cannot happen.
        return Err(CodeError::NotBicolourable);
    }

    // Label edges 1..2n by their smaller half-edge.
    let mut edge_id = vec![usize::MAX; deg];
    let mut next_edge = 0usize;
    for h in 1..=deg {
        let t = tau.apply(h);
        if h < t {
            edge_id[h - 1] = next_edge;
            edge_id[t - 1] = next_edge;
            next_edge += 1;
        }
    }
    debug_assert_eq!(next_edge, 2 * n);

    // White walks → σ on edges; shaded walks → its partner.
    let mut sigma_raw = vec![usize::MAX; 2 * n];
    let mut partner_raw = vec![usize::MAX; 2 * n];
    for h in 1..=deg {
        let e = edge_id[h - 1];
        let target = edge_id[face_walk.apply(h) - 1];
        if colour[face_of[h - 1]] == 0 {
            debug_assert_eq!(sigma_raw[e], usize::MAX);
            sigma_raw[e] = target;
        } else {
            debug_assert_eq!(partner_raw[e], usize::MAX);
            partner_raw[e] = target;
        }
    }
    let sigma_raw = Perm::from_image_table(sigma_raw.iter().map(|&v| v as u8).collect());
    let partner_raw = Perm::from_image_table(partner_raw.iter().map(|&v| v as u8).collect());

    // The shaded-face permutation is the inverse of the traced shaded walk,
    // so the crossing pairing on edges is σ⁻¹ · (traced shaded walk)⁻¹.
    let rho_cand = sigma_raw.inverse().compose(&partner_raw.inverse());
    assert!(
        (1..=2 * n).all(|e| {
            let p = rho_cand.apply(e);
            p != e && rho_cand.apply(p) == e
        }),
        "recovered crossing pairing must be a fixed-point-free involution"
    );

    // Relabel so the pairing becomes (1,2)(3,4)…, pairing edges in order of
    // smaller member (deterministic; any choice gives the same class).
    let mut relabel = vec![0u8; 2 * n];
    let mut next = 0u8;
    for e in 1..=2 * n {
        let p = rho_cand.apply(e);
        if e < p {
            relabel[e - 1] = next;
            relabel[p - 1] = next + 1;
            next += 2;
        }
    }
    let lambda = Perm::from_image_table(relabel);
    let sigma_final = sigma_raw.conjugate_by(&lambda);
    debug_assert_eq!(
        rho_cand.conjugate_by(&lambda),
        passage_pairing(n),
        "relabelling must normalise the crossing pairing"
    );
    let y = YCode {
        n,
        sigma: sigma_final,
    };
    debug_assert_eq!(y_classify(&y), x_classify(code));
    Ok(y)
}

// ---------------------------------------------------------------------------
// Diagram records.
// ---------------------------------------------------------------------------

/// A drawing-ready record of a curve diagram derived from a visit-order
/// code: per-crossing clockwise half-edge labels and the closure (the edge
/// sequence along the curve). The two extra fields are computed metadata and
/// are not part of the serialised schema.
#[derive(Clone, Debug, Serialize)]
pub struct DiagramCode {
    pub n: usize,
    /// Crossing `a` (0-indexed entry `a−1`) lists `[2a−1, 2a, π(2a−1),
    /// π(2a)]`: its two incoming edges then its two outgoing edges, in
    /// clockwise order.
    pub vertices: Vec<[usize; 4]>,
    /// Edge labels in traversal order, starting from edge 1.
    pub closure: Vec<usize>,
    /// Minimal planarising virtual-crossing count (`Some(0)` iff genus 0;
    /// bounded search, `None` if more than 2 would be needed).
    #[serde(skip)]
    pub virtual_crossings: Option<usize>,
    /// Always true for codes built from a single closed curve.
    #[serde(skip)]
    pub connected: bool,
}

/// Builds the rotation system of a visit-order code (vertex `a` has its two
/// incoming edges `2a−1, 2a` and its two outgoing edges `π(2a−1), π(2a)` in
/// clockwise order).
pub fn rotation_map_from_z(code: &ZCode) -> crate::maps::RotationMap {
    let n = code.n;
    let m = 2 * n;
    // Darts: for edge e (0-based), dart 2e = head (into crossing e>>1),
    // dart 2e+1 = tail (out of the crossing it leaves).
    let mut vertices: Vec<Vec<u32>> = Vec::with_capacity(n);
    for a in 0..n {
        let in1 = 2 * a; // edge index, 0-based
        let in2 = 2 * a + 1;
        let out1 = code.pi.apply(2 * a + 1) - 1;
        let out2 = code.pi.apply(2 * a + 2) - 1;
        vertices.push(vec![
            2 * in1 as u32,
            2 * in2 as u32,
            2 * out1 as u32 + 1,
            2 * out2 as u32 + 1,
        ]);
    }
    let mut twin = vec![0u32; 2 * m];
    for e in 0..m {
        twin[2 * e] = 2 * e as u32 + 1;
        twin[2 * e + 1] = 2 * e as u32;
    }
    let map = crate::maps::RotationMap::new(vertices, twin);
    debug_assert_eq!(map.genus(), z_genus(code));
    map
}

/// Builds the rotation system of a pairing code (darts are the half-edges
/// themselves, rotation is the clockwise quadruple turn, twin is `τ`).
pub fn rotation_map_from_x(code: &XCode) -> crate::maps::RotationMap {
    let n = code.n;
    let vertices: Vec<Vec<u32>> = (0..n)
        .map(|a| (0..4).map(|j| (4 * a + j) as u32).collect())
        .collect();
    let twin: Vec<u32> = (1..=4 * n)
        .map(|h| (code.tau.apply(h) - 1) as u32)
        .collect();
    crate::maps::RotationMap::new(vertices, twin)
}

/// Produces the drawing record of a visit-order code, including the bounded
/// virtual-crossing search for positive-genus diagrams.
pub fn diagram_from_z(code: &ZCode) -> DiagramCode {
    let n = code.n;
    let mut vertices = Vec::with_capacity(n);
    for a in 1..=n {
        vertices.push([
            2 * a - 1,
            2 * a,
            code.pi.apply(2 * a - 1),
            code.pi.apply(2 * a),
        ]);
    }
    let mut closure = Vec::with_capacity(2 * n);
    let mut cur = 1usize;
    for _ in 0..2 * n {
        closure.push(cur);
        cur = code.pi.apply(cur);
    }
    let virtual_crossings = rotation_map_from_z(code).min_virtual_crossings(2);
    DiagramCode {
        n,
        vertices,
        closure,
        virtual_crossings,
        connected: true,
    }
}
