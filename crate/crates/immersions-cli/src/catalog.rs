//! Catalog records: building class listings per method or per kind,
//! including quotients of a method's classes by class involutions.

use immersions_core::census::{
    acting_group, available_involutions, class_flags, enumerate_classes, involution_image,
    CensusConfig, CensusError, ColourMode, FlagFilter, Involution, Kind, Method,
};
use immersions_core::cosets::BaseKind;
use immersions_core::groups::{make_group, GroupName, GroupSpec};
use immersions_core::orbits::orbit_of;
use immersions_core::Perm;
use serde::{Deserialize, Serialize};

/// One enumerated class with everything the catalog may need, independent
/// of how the listing quotients or filters it. This is the unit the cache
/// stores, keyed by (method, n).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RawClassRecord {
    pub g: usize,
    /// One-line form of the canonical representative.
    pub rep: Vec<usize>,
    pub orbit_len: u64,
    pub stab_order: u64,
    pub kink_free: bool,
    pub irreducible: bool,
    pub indecomposable: bool,
    /// Class-level fixedness under each involution the method supports;
    /// `None` where the method has no such involution.
    pub swap_fixed: Option<bool>,
    pub mirror_fixed: Option<bool>,
    pub reverse_fixed: Option<bool>,
}

/// Symmetry and quality flags of one catalog record. The involution flags
/// are `null` when the operation is not expressible in the record's method
/// or is already quotiented out by the listed kind.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RecordFlags {
    pub kink_free: bool,
    pub irreducible: bool,
    pub indecomposable: bool,
    pub self_swap: Option<bool>,
    pub achiral: Option<bool>,
    pub reversible: Option<bool>,
}

/// One catalog line.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub method: String,
    pub n: usize,
    pub g: usize,
    pub rep: Vec<usize>,
    pub orbit_len: u64,
    pub stab_order: u64,
    pub flags: RecordFlags,
}

/// How a listing is produced: enumerate `method`'s classes, then identify
/// classes along the class involutions in `quotient`.
#[derive(Copy, Clone, Debug)]
pub struct Route {
    pub method: Method,
    pub quotient: &'static [Involution],
}

/// The enumeration route for a kind.
///
/// Coloured and colourable kinds come from the gauge engines. Plain kinds
/// come from the visit-order engine in general; on the sphere (genus 0)
/// every class is colourable, so the gauge engines serve them too and reach
/// higher crossing counts.
pub fn route_for_kind(kind: Kind, genus: Option<usize>) -> Route {
    use BaseKind::*;
    use Involution::*;
    let route = |method, quotient| Route { method, quotient };
    match kind.colour {
        ColourMode::Coloured | ColourMode::Colourable => {
            let method = match kind.base {
                OO | OU => Method::UCyclic,
                UO | UU => Method::UDihedral,
            };
            let swap = kind.colour == ColourMode::Colourable;
            let mirror = matches!(kind.base, OU | UU);
            match (swap, mirror) {
                (false, false) => route(method, &[]),
                (true, false) => route(method, &[Swap]),
                (false, true) => route(method, &[Mirror]),
                (true, true) => route(method, &[Swap, Mirror]),
            }
        }
        ColourMode::Plain if genus == Some(0) => match kind.base {
            OO => route(Method::UCyclic, &[Swap]),
            UO => route(Method::UDihedral, &[Swap]),
            OU => route(Method::UCyclic, &[Swap, Mirror]),
            UU => route(Method::UDihedral, &[Swap, Mirror]),
        },
        ColourMode::Plain => match kind.base {
            OO => route(Method::Z, &[]),
            UO => route(Method::Z, &[Reverse]),
            OU => route(Method::Z, &[Mirror]),
            UU => route(Method::Z, &[Reverse, Mirror]),
        },
    }
}

/// The group under which a method's class representatives are canonical.
fn canon_group(method: Method, n: usize) -> Result<GroupSpec, CensusError> {
    match method {
        // Y representatives are dihedral-canonical gauge codes.
        Method::Y => Ok(make_group(GroupName::Dn, n)?),
        _ => Ok(acting_group(method, n)?),
    }
}

/// The method whose involution formulas act on this method's
/// representatives. Y shares its gauge representatives with the dihedral
/// engine, whose images stay inside the gauge slice.
fn image_method(method: Method) -> Method {
    match method {
        Method::Y => Method::UDihedral,
        m => m,
    }
}

fn canonical(p: &Perm, group: &GroupSpec) -> Result<Perm, CensusError> {
    Ok(orbit_of(p, group)?.summary.canonical)
}

/// Enumerates every class of a method and computes its flags and
/// involution fixedness. The expensive, cache-worthy step.
pub fn raw_records(
    method: Method,
    n: usize,
    cfg: &CensusConfig,
) -> Result<Vec<RawClassRecord>, CensusError> {
    let classes = enumerate_classes(method, n, cfg)?;
    let group = canon_group(method, n)?;
    let img_method = image_method(method);
    let invs = available_involutions(img_method);
    let mut out = Vec::with_capacity(classes.len());
    for c in &classes {
        let flags = class_flags(method, n, &c.rep)?;
        let mut fixed = [None, None, None];
        for inv in invs {
            let img = involution_image(img_method, *inv, n, &c.rep)?;
            let is_fixed = canonical(&img, &group)? == c.rep;
            fixed[*inv as usize] = Some(is_fixed);
        }
        out.push(RawClassRecord {
            g: c.genus,
            rep: c.rep.one_line(),
            orbit_len: c.orbit_len,
            stab_order: c.stabilizer_order,
            kink_free: flags.kink_free,
            irreducible: flags.irreducible,
            indecomposable: flags.indecomposable,
            swap_fixed: fixed[Involution::Swap as usize],
            mirror_fixed: fixed[Involution::Mirror as usize],
            reverse_fixed: fixed[Involution::Reverse as usize],
        });
    }
    Ok(out)
}

fn passes(raw: &RawClassRecord, genus: Option<usize>, filter: Option<FlagFilter>) -> bool {
    if let Some(g) = genus {
        if raw.g != g {
            return false;
        }
    }
    match filter {
        None => true,
        Some(FlagFilter::KinkFree) => raw.kink_free,
        Some(FlagFilter::Prime) => raw.kink_free && raw.irreducible && raw.indecomposable,
    }
}

/// Applies the genus/quality filters and the route's involution quotient,
/// returning one catalog record per listed class, sorted by (genus, rep).
pub fn assemble(
    route: Route,
    n: usize,
    raws: &[RawClassRecord],
    genus: Option<usize>,
    filter: Option<FlagFilter>,
) -> Result<Vec<CatalogRecord>, CensusError> {
    let selected: Vec<&RawClassRecord> = raws
        .iter()
        .filter(|r| passes(r, genus, filter))
        .collect();

    let survivors: Vec<&RawClassRecord> = if route.quotient.is_empty() {
        selected
    } else {
        let group = canon_group(route.method, n)?;
        let img_method = image_method(route.method);
        // Class-level closure of the quotient involutions: applying each
        // subset of them in sequence.
        let mut chains: Vec<Vec<Involution>> = vec![vec![]];
        for &inv in route.quotient {
            let mut doubled = chains.clone();
            for c in &mut doubled {
                c.push(inv);
            }
            chains.extend(doubled);
        }
        let mut keep = Vec::new();
        for raw in &selected {
            let rep = Perm::from_one_line(&raw.rep).expect("stored reps are permutations");
            let mut key: Option<Vec<usize>> = None;
            for chain in &chains {
                let mut img = rep.clone();
                for &inv in chain {
                    img = involution_image(img_method, inv, n, &img)?;
                }
                let c = canonical(&img, &group)?.one_line();
                if key.as_ref().is_none_or(|k| c < *k) {
                    key = Some(c);
                }
            }
            if key.as_deref() == Some(raw.rep.as_slice()) {
                keep.push(*raw);
            }
        }
        keep
    };

    let method_invs = available_involutions(image_method(route.method));
    let visible = |inv: Involution, value: Option<bool>| -> Option<bool> {
        if method_invs.contains(&inv) && !route.quotient.contains(&inv) {
            value
        } else {
            None
        }
    };

    let mut records: Vec<CatalogRecord> = survivors
        .into_iter()
        .map(|raw| CatalogRecord {
            method: route.method.as_str().to_string(),
            n,
            g: raw.g,
            rep: raw.rep.clone(),
            orbit_len: raw.orbit_len,
            stab_order: raw.stab_order,
            flags: RecordFlags {
                kink_free: raw.kink_free,
                irreducible: raw.irreducible,
                indecomposable: raw.indecomposable,
                self_swap: visible(Involution::Swap, raw.swap_fixed),
                achiral: visible(Involution::Mirror, raw.mirror_fixed),
                reversible: visible(Involution::Reverse, raw.reverse_fixed),
            },
        })
        .collect();
    records.sort_by(|a, b| (a.g, &a.rep).cmp(&(b.g, &b.rep)));
    Ok(records)
}

