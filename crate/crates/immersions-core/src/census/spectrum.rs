//! Orbit-length spectrum of white-face codes under the full
//! pairing-preserving group, computed through gauge representatives: a
//! dihedral gauge orbit whose stabilizer has order k corresponds to exactly
//! one full-group class of size |group|/k.

use super::{check_envelope, CensusConfig, CensusError, Method};
use crate::encodings::y_genus_table;
use crate::groups::{make_group, GroupName};
use crate::orbits::{transversal_sweep, UniverseSpec};
use crate::small::SPerm;
use num_bigint::BigUint;
use std::collections::BTreeMap;

/// One spectrum line: `orbit_count` classes whose gauge stabilizer has
/// order `stabilizer_order`, each a full-group orbit of `class_size`
/// white-face codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumRow {
    pub stabilizer_order: u64,
    pub orbit_count: u64,
    pub class_size: BigUint,
}

/// Spectrum of white-face classes for one crossing count, optionally
/// restricted to a single genus. Rows are sorted by stabilizer order.
pub fn y_orbit_spectrum(
    n: usize,
    genus: Option<usize>,
    cfg: &CensusConfig,
) -> Result<Vec<SpectrumRow>, CensusError> {
    check_envelope("white-face spectrum", Method::Y, n, cfg)?;
    let dn = make_group(GroupName::Dn, n)?;
    let full_order = make_group(GroupName::CRho, n)?.order;
    let orbits = transversal_sweep(&UniverseSpec::UCoset { n }, &dn, &cfg.sweep)?;
    let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
    for o in &orbits {
        if let Some(g) = genus {
            if y_genus_table(&SPerm::from_perm(&o.canonical)) != g {
                continue;
            }
        }
        *hist.entry(o.stabilizer_order).or_insert(0) += 1;
    }
    Ok(hist
        .into_iter()
        .map(|(k, count)| SpectrumRow {
            stabilizer_order: k,
            orbit_count: count,
            class_size: &full_order / k,
        })
        .collect())
}
