//! Named internal-consistency checks. Each check recomputes related
//! quantities along independent routes and compares them; together they
//! exercise every pipeline in the crate.

use super::{
    bicolourable_genus_table, enumerate_classes, general_genus_table, long_curve_genus_histogram,
    spherical_counts, sweep_envelope, system_profiles, y_orbit_spectrum, CensusConfig,
    CensusError, Method,
};
use crate::cosets::{count_total_immersions, is_prime, prime_n_orbit_formula, BaseKind};
use crate::perm::factorial;
use num_bigint::BigUint;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Passed,
    Failed,
    Skipped,
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

fn outcome(name: &'static str, result: Result<String, String>) -> CheckOutcome {
    match result {
        Ok(detail) => CheckOutcome {
            name,
            status: CheckStatus::Passed,
            detail,
        },
        Err(detail) => CheckOutcome {
            name,
            status: CheckStatus::Failed,
            detail,
        },
    }
}

fn skipped(name: &'static str, why: &str) -> CheckOutcome {
    CheckOutcome {
        name,
        status: CheckStatus::Skipped,
        detail: why.to_string(),
    }
}

fn census_err(e: CensusError) -> String {
    format!("pipeline error: {e}")
}

/// Runs every check for crossing counts `1..=max_n` (each check clamps to
/// its own envelope). Returns one outcome per check.
pub fn run_checks(max_n: usize, cfg: &CensusConfig) -> Vec<CheckOutcome> {
    CHECK_NAMES
        .iter()
        .map(|name| run_check(name, max_n, cfg).expect("listed name"))
        .collect()
}

/// Names of every check, in the order `run_checks` runs them.
pub const CHECK_NAMES: [&str; 9] = [
    "totals-match-orbit-sums",
    "universe-partition",
    "histogram-row-sums",
    "coloured-rotation-halving",
    "parity-identities",
    "shape-vanishing",
    "spherical-consistency",
    "spectrum-totals",
    "prime-crossing-formula",
];

/// Runs one check by name; `None` for an unknown name.
pub fn run_check(name: &str, max_n: usize, cfg: &CensusConfig) -> Option<CheckOutcome> {
    Some(match name {
        "totals-match-orbit-sums" => check_totals_match_orbit_sums(max_n, cfg),
        "universe-partition" => check_universe_partition(max_n, cfg),
        "histogram-row-sums" => check_histogram_row_sums(max_n, cfg),
        "coloured-rotation-halving" => check_coloured_rotation_halving(max_n, cfg),
        "parity-identities" => check_parity_identities(max_n, cfg),
        "shape-vanishing" => check_shape_vanishing(max_n, cfg),
        "spherical-consistency" => check_spherical_consistency(max_n, cfg),
        "spectrum-totals" => check_spectrum_totals(max_n, cfg),
        "prime-crossing-formula" => check_prime_crossing_formula(max_n),
        _ => return None,
    })
}

/// Per-genus tables summed over genus must reproduce the exact
/// character-formula totals, for all four plain kinds.
fn check_totals_match_orbit_sums(max_n: usize, cfg: &CensusConfig) -> CheckOutcome {
    const NAME: &str = "totals-match-orbit-sums";
    let limit = sweep_envelope(Method::Z, cfg.allow_slow).min(max_n);
    if limit == 0 {
        return skipped(NAME, "no crossing count in range");
    }
    let run = || -> Result<String, String> {
        for n in 1..=limit {
            let rows = general_genus_table(n, None, cfg).map_err(census_err)?;
            for kind in BaseKind::ALL {
                let summed: BigUint = rows.values().map(|r| BigUint::from(r.get(kind))).sum();
                let formula = count_total_immersions(kind, n)
                    .map_err(|e| format!("character formula failed: {e}"))?;
                if summed != formula {
                    return Err(format!(
                        "kind {} at n={n}: table sum {summed} != formula total {formula}",
                        kind.as_str()
                    ));
                }
            }
        }
        Ok(format!(
            "all four plain kinds agree with formula totals for n ≤ {limit}"
        ))
    };
    outcome(NAME, run())
}

/// Orbit lengths of every enumeration partition their universe.
fn check_universe_partition(max_n: usize, cfg: &CensusConfig) -> CheckOutcome {
    const NAME: &str = "universe-partition";
    let run = || -> Result<String, String> {
        let mut covered = Vec::new();
        for method in Method::ALL {
            let limit = sweep_envelope(method, cfg.allow_slow).min(max_n).min(
                // Keep the slowest sweeps out of the routine check run.
                match method {
                    Method::X => 4,
                    Method::Z => 5,
                    _ => 7,
                },
            );
            if limit == 0 {
                continue;
            }
            for n in 1..=limit {
                let classes = enumerate_classes(method, n, cfg).map_err(census_err)?;
                let summed: BigUint = classes.iter().map(|c| BigUint::from(c.orbit_len)).sum();
                let expected: BigUint = match method {
                    Method::X => (1..=2 * n - 1)
                        .map(|k| BigUint::from(2 * k))
                        .product::<BigUint>(),
                    Method::UDihedral | Method::UCyclic => {
                        factorial(n) << n
                    }
                    Method::Y => {
                        (factorial(n) * factorial(n - 1)) << (2 * n - 1)
                    }
                    Method::Z => factorial(2 * n - 1),
                };
                if summed != expected {
                    return Err(format!(
                        "method {} at n={n}: orbit lengths sum to {summed}, universe has {expected}",
                        method.as_str()
                    ));
                }
            }
            covered.push(format!("{}≤{limit}", method.as_str()));
        }
        Ok(format!("orbit lengths partition each universe ({})", covered.join(", ")))
    };
    outcome(NAME, run())
}

/// The pointed-curve genus histogram sums to the universe size `2^n · n!`.
fn check_histogram_row_sums(max_n: usize, cfg: &CensusConfig) -> CheckOutcome {
    const NAME: &str = "histogram-row-sums";
    let limit = max_n.min(8);
    let run = || -> Result<String, String> {
        for n in 1..=limit {
            let row = long_curve_genus_histogram(n, cfg).map_err(census_err)?;
            let summed: u64 = row.iter().sum();
            let expected = crate::perm::factorial_u64(n) << n;
            if summed != expected {
                return Err(format!(
                    "n={n}: histogram sums to {summed}, universe has {expected}"
                ));
            }
        }
        Ok(format!("histogram row sums equal 2^n·n! for n ≤ {limit}"))
    };
    outcome(NAME, run())
}

/// Coloured rotation classes come in swap pairs: `ooc = 2·oob` per genus.
fn check_coloured_rotation_halving(max_n: usize, cfg: &CensusConfig) -> CheckOutcome {
    const NAME: &str = "coloured-rotation-halving";
    let limit = sweep_envelope(Method::UCyclic, cfg.allow_slow).min(max_n).min(7);
    if limit == 0 {
        return skipped(NAME, "no crossing count in range");
    }
    let run = || -> Result<String, String> {
        for n in 1..=limit {
            let rows = bicolourable_genus_table(n, None, cfg).map_err(census_err)?;
            for (g, row) in rows {
                if row.ooc != 2 * row.oob {
                    return Err(format!(
                        "n={n} genus {g}: ooc={} is not twice oob={}",
                        row.ooc, row.oob
                    ));
                }
            }
        }
        Ok(format!("ooc = 2·oob at every genus for n ≤ {limit}"))
    };
    outcome(NAME, run())
}

/// Parity identities between coloured kinds, per genus.
fn check_parity_identities(max_n: usize, cfg: &CensusConfig) -> CheckOutcome {
    const NAME: &str = "parity-identities";
    let limit = sweep_envelope(Method::UCyclic, cfg.allow_slow).min(max_n).min(7);
    if limit == 0 {
        return skipped(NAME, "no crossing count in range");
    }
    let run = || -> Result<String, String> {
        for n in 1..=limit {
            let rows = bicolourable_genus_table(n, None, cfg).map_err(census_err)?;
            for (g, row) in rows {
                let ok = if n % 2 == 0 {
                    row.uoc == row.oob && row.ouc == 2 * row.oub && row.uuc == row.oub
                } else {
                    row.uoc == 2 * row.uob && row.ouc == row.oob && row.uuc == row.uob
                };
                if !ok {
                    return Err(format!("n={n} genus {g}: parity identities violated: {row:?}"));
                }
            }
        }
        Ok(format!("parity identities hold at every genus for n ≤ {limit}"))
    };
    outcome(NAME, run())
}

/// Forced vanishings among the five symmetry shapes.
fn check_shape_vanishing(max_n: usize, cfg: &CensusConfig) -> CheckOutcome {
    const NAME: &str = "shape-vanishing";
    let limit = sweep_envelope(Method::UCyclic, cfg.allow_slow).min(max_n).min(7);
    if limit == 0 {
        return skipped(NAME, "no crossing count in range");
    }
    let run = || -> Result<String, String> {
        for n in 1..=limit {
            let p = system_profiles(n, None, cfg).map_err(census_err)?;
            for (g, fw) in &p.cyclic_swap_reversal {
                let forced = fw.x == 0
                    && fw.y == 0
                    && (n % 2 == 1 || fw.z == 0)
                    && (n % 2 == 0 || fw.v == 0);
                if !forced {
                    return Err(format!("swap-reversal profile n={n} genus {g}: {fw}"));
                }
            }
            for (g, fw) in &p.cyclic_swap_mirror {
                let forced = fw.x == 0
                    && fw.y == 0
                    && (n % 2 == 0 || fw.z == 0)
                    && (n % 2 == 1 || fw.v == 0);
                if !forced {
                    return Err(format!("swap-mirror profile n={n} genus {g}: {fw}"));
                }
            }
            if n % 2 == 1 {
                for (g, fw) in &p.dihedral_swap_mirror {
                    if fw.x != 0 || fw.y != 0 || fw.z != 0 {
                        return Err(format!("dihedral profile n={n} genus {g}: {fw}"));
                    }
                }
            }
        }
        Ok(format!("forced shape vanishings hold for n ≤ {limit}"))
    };
    outcome(NAME, run())
}

/// The genus-0 census runs its two independent engines and their built-in
/// agreement assertions.
fn check_spherical_consistency(max_n: usize, cfg: &CensusConfig) -> CheckOutcome {
    const NAME: &str = "spherical-consistency";
    let limit = max_n.min(7);
    let run = || -> Result<String, String> {
        let mut last = String::new();
        for n in 1..=limit {
            let c = spherical_counts(n, cfg).map_err(census_err)?;
            last = format!(
                "n={n}: oo={} uo={} ou={} uu={} (prime: oo={})",
                c.all.oo, c.all.uo, c.all.ou, c.all.uu, c.prime.oo
            );
        }
        Ok(format!("genus-0 engines agree for n ≤ {limit}; last row {last}"))
    };
    outcome(NAME, run())
}

/// Spectrum totals equal the number of dihedral gauge classes.
fn check_spectrum_totals(max_n: usize, cfg: &CensusConfig) -> CheckOutcome {
    const NAME: &str = "spectrum-totals";
    let limit = sweep_envelope(Method::UDihedral, cfg.allow_slow).min(max_n).min(6);
    if limit == 0 {
        return skipped(NAME, "no crossing count in range");
    }
    let run = || -> Result<String, String> {
        for n in 1..=limit {
            let spectrum = y_orbit_spectrum(n, None, cfg).map_err(census_err)?;
            let total: u64 = spectrum.iter().map(|row| row.orbit_count).sum();
            let classes = enumerate_classes(Method::UDihedral, n, cfg)
                .map_err(census_err)?
                .len() as u64;
            if total != classes {
                return Err(format!(
                    "n={n}: spectrum counts {total} classes, enumeration finds {classes}"
                ));
            }
        }
        Ok(format!("spectrum totals match class counts for n ≤ {limit}"))
    };
    outcome(NAME, run())
}

/// For prime crossing counts, the closed-form class count matches the
/// character-formula total.
fn check_prime_crossing_formula(max_n: usize) -> CheckOutcome {
    const NAME: &str = "prime-crossing-formula";
    let limit = max_n.min(19);
    let run = || -> Result<String, String> {
        let mut checked = Vec::new();
        for n in (2..=limit).filter(|&n| is_prime(n)) {
            let formula = prime_n_orbit_formula(n)
                .map_err(|e| format!("closed form failed at n={n}: {e}"))?;
            let frobenius = count_total_immersions(BaseKind::OO, n)
                .map_err(|e| format!("character formula failed at n={n}: {e}"))?;
            if formula != frobenius {
                return Err(format!(
                    "n={n}: closed form {formula} != character formula {frobenius}"
                ));
            }
            checked.push(n.to_string());
        }
        if checked.is_empty() {
            return Ok("no prime crossing counts in range".to_string());
        }
        Ok(format!("closed form matches totals at n = {}", checked.join(", ")))
    };
    outcome(NAME, run())
}
