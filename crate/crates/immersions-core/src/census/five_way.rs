//! Symmetry bookkeeping for a pair of commuting class involutions (I, J)
//! acting on a set of orbit units.
//!
//! Each Klein four-group orbit {u, I(u), J(u), IJ(u)} falls into one of
//! five shapes, counted once each:
//!
//! * `x` — u fixed by both I and J (orbit size 1);
//! * `y` — u fixed by I only (pair {u, J(u)});
//! * `z` — u fixed by J only (pair {u, I(u)});
//! * `v` — u fixed by the product IJ only (pair {u, I(u)});
//! * `w` — free orbit of four distinct units.
//!
//! Every count table over these involutions is a linear combination of the
//! five shapes.

use std::collections::BTreeMap;

/// Counts of the five symmetry shapes.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct FiveWay {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub v: u64,
    pub w: u64,
}

impl FiveWay {
    /// Number of underlying units: `x + 2y + 2z + 2v + 4w`.
    pub fn total(&self) -> u64 {
        self.x + 2 * self.y + 2 * self.z + 2 * self.v + 4 * self.w
    }

    /// Units after additionally quotienting by I: `x + 2y + z + v + 2w`.
    pub fn quotient_by_i(&self) -> u64 {
        self.x + 2 * self.y + self.z + self.v + 2 * self.w
    }

    /// Units after additionally quotienting by J: `x + y + 2z + v + 2w`.
    pub fn quotient_by_j(&self) -> u64 {
        self.x + self.y + 2 * self.z + self.v + 2 * self.w
    }

    /// Units after quotienting by both: `x + y + z + v + w`.
    pub fn quotient_by_both(&self) -> u64 {
        self.x + self.y + self.z + self.v + self.w
    }

    pub fn add(&mut self, other: &FiveWay) {
        self.x += other.x;
        self.y += other.y;
        self.z += other.z;
        self.v += other.v;
        self.w += other.w;
    }

    pub fn as_tuple(&self) -> (u64, u64, u64, u64, u64) {
        (self.x, self.y, self.z, self.v, self.w)
    }
}

impl std::fmt::Display for FiveWay {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(x={}, y={}, z={}, v={}, w={})",
            self.x, self.y, self.z, self.v, self.w
        )
    }
}

/// Classifies a family of units under two commuting class involutions,
/// grouped by an integer key (typically genus).
///
/// The unit family must be closed under both involutions, `image_i` /
/// `image_j` must be involutive class maps, and `key_of` must be constant
/// on involution orbits. Orbit shapes are counted at their least member
/// (units are `Ord`), so the result does not depend on iteration order.
pub fn classify<T, K, FI, FJ, FK>(
    units: impl IntoIterator<Item = T>,
    mut image_i: FI,
    mut image_j: FJ,
    mut key_of: FK,
) -> BTreeMap<K, FiveWay>
where
    T: Copy + Ord,
    K: Ord + Copy,
    FI: FnMut(T) -> T,
    FJ: FnMut(T) -> T,
    FK: FnMut(T) -> K,
{
    let mut out: BTreeMap<K, FiveWay> = BTreeMap::new();
    for u in units {
        let ui = image_i(u);
        let uj = image_j(u);
        let eq_i = ui == u;
        let eq_j = uj == u;
        let cell = out.entry(key_of(u)).or_default();
        if eq_i && eq_j {
            cell.x += 1;
        } else if eq_i {
            // Orbit {u, J(u)}: the partner must also be I-fixed.
            debug_assert!(image_i(uj) == uj, "J-partner of an I-fixed unit is I-fixed");
            if u < uj {
                cell.y += 1;
            }
        } else if eq_j {
            debug_assert!(image_j(ui) == ui, "I-partner of a J-fixed unit is J-fixed");
            if u < ui {
                cell.z += 1;
            }
        } else {
            let uij = image_j(ui);
            debug_assert!(uij == image_i(uj), "involutions must commute on units");
            if uij == u {
                // Orbit {u, I(u)} swapped by both involutions at once.
                debug_assert!(ui == uj, "an IJ-fixed free pair has matching images");
                if u < ui {
                    cell.v += 1;
                }
            } else if u < ui && u < uj && u < uij {
                cell.w += 1;
            }
        }
    }
    out
}
