//! Permutations of small degree: composition, conjugation, cycle structure,
//! lexicographic ranking, and integer partitions with exact class sizes.
//!
//! A [`Perm`] is stored as a 0-based image table, but every public interface
//! (constructors, `apply`, text forms) speaks 1-based, so the permutation
//! printed `(1,3,7,4)(2,5)` maps 1 to 3, 3 to 7, 7 to 4, 4 to 1, and swaps
//! 2 and 5. Products compose right to left: `p.compose(&q)` maps `i` to
//! `p(q(i))`, and `x.conjugate_by(&g)` is `g · x · g⁻¹`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest degree this crate works with. Curve codes on up to 10 crossings
/// need at most 40 points; the cap keeps image entries in `u8`.
pub const MAX_DEGREE: usize = 64;

/// Errors from permutation construction, parsing and ranking.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PermError {
    #[error("degree {0} exceeds the supported maximum {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    DuplicatePoint(usize),
    #[error("expected degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("cannot parse permutation from {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("rank {rank} out of range for degree {degree} (must be < {degree}!)")]
    RankOutOfRange { rank: BigUint, degree: usize },
}

/// A permutation of `{1, …, m}`, stored as a 0-based image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    /// The identity permutation of the given degree.
    pub fn identity(degree: usize) -> Perm {
        assert!(degree <= MAX_DEGREE, "degree {degree} too large");
        Perm {
            img: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from its 1-based one-line form: `images[i]` is the
    /// image of point `i + 1`.
    pub fn from_one_line(images: &[usize]) -> Result<Perm, PermError> {
        let m = images.len();
        if m > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(m));
        }
        let mut img = vec![0u8; m];
        let mut seen = vec![false; m];
        for (i, &v) in images.iter().enumerate() {
            if v < 1 || v > m {
                return Err(PermError::PointOutOfRange { point: v, degree: m });
            }
            if seen[v - 1] {
                return Err(PermError::DuplicatePoint(v));
            }
            seen[v - 1] = true;
            img[i] = (v - 1) as u8;
        }
        Ok(Perm { img })
    }

    /// Builds a permutation of the given degree from disjoint cycles of
    /// 1-based points. Points not mentioned are fixed; singleton cycles are
    /// allowed and ignored.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Perm, PermError> {
        if degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(degree));
        }
        let mut img: Vec<u8> = (0..degree as u8).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p < 1 || p > degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if seen[p - 1] {
                    return Err(PermError::DuplicatePoint(p));
                }
                seen[p - 1] = true;
            }
            for k in 0..cycle.len() {
                let from = cycle[k] - 1;
                let to = cycle[(k + 1) % cycle.len()] - 1;
                img[from] = to as u8;
            }
        }
        Ok(Perm { img })
    }

    /// Parses either one-line form `[3,5,1,2,4]` (degree must match) or cycle
    /// form `(1,3)(2,5,4)` / `()` (unmentioned points are fixed).
    pub fn parse(text: &str, degree: usize) -> Result<Perm, PermError> {
        let t = text.trim();
        let err = |reason: &str| PermError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if t.starts_with('[') {
            if !t.ends_with(']') {
                return Err(err("missing closing bracket"));
            }
            let inner = &t[1..t.len() - 1];
            let images = parse_number_list(inner)
                .map_err(|reason| err(&reason))?;
            if images.len() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    got: images.len(),
                });
            }
            Perm::from_one_line(&images)
        } else if t.starts_with('(') {
            if !t.ends_with(')') {
                return Err(err("missing closing parenthesis"));
            }
            let mut cycles = Vec::new();
            for chunk in t[1..t.len() - 1].split(")(") {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue; // "()" denotes the identity
                }
                cycles.push(parse_number_list(chunk).map_err(|reason| err(&reason))?);
            }
            Perm::from_cycles(&cycles, degree)
        } else if t == "e" || t == "id" {
            Ok(Perm::identity(degree))
        } else {
            Err(err("expected one-line form [..] or cycle form (..)(..)"))
        }
    }

    /// Number of points the permutation acts on.
    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1] as usize + 1
    }

    /// 1-based one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Right-to-left composition: the result maps `i` to `self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(
            self.degree(),
            other.degree(),
            "composing permutations of different degrees"
        );
        Perm {
            img: other.img.iter().map(|&v| self.img[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u8; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v as usize] = i as u8;
        }
        Perm { img }
    }

    /// Conjugation `g · self · g⁻¹` (relabels points through `g`).
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        assert_eq!(
            self.degree(),
            g.degree(),
            "conjugating by a permutation of different degree"
        );
        let mut img = vec![0u8; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[g.img[i] as usize] = g.img[v as usize];
        }
        Perm { img }
    }

    /// `self` raised to an integer power (negative powers use the inverse).
    pub fn pow(&self, e: i64) -> Perm {
        let m = self.degree();
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Perm::identity(m);
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = sq.compose(&acc);
            }
            sq = sq.compose(&sq);
            k >>= 1;
        }
        acc
    }

    /// All cycles, including singletons. Each cycle starts at its smallest
    /// point; cycles are ordered by smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            loop {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.img[cur] as usize;
                if cur == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    /// Number of cycles, counting fixed points.
    pub fn cycle_count(&self) -> usize {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut count = 0;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.img[cur] as usize;
            }
        }
        count
    }

    /// Cycle type as a partition of the degree (fixed points contribute 1s).
    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(|c| c.len()).collect())
    }

    /// Cycle-form string omitting singleton cycles; identity prints `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&p.to_string());
            }
            s.push(')');
        }
        s
    }

    /// One-line string `[3,5,1,2,4]`.
    pub fn to_one_line_string(&self) -> String {
        let mut s = String::from("[");
        for (k, p) in self.one_line().iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&p.to_string());
        }
        s.push(']');
        s
    }

    pub(crate) fn image_table(&self) -> &[u8] {
        &self.img
    }

    pub(crate) fn from_image_table(img: Vec<u8>) -> Perm {
        debug_assert!({
            let mut seen = vec![false; img.len()];
            img.iter().all(|&v| {
                let ok = (v as usize) < img.len() && !seen[v as usize];
                if ok {
                    seen[v as usize] = true;
                }
                ok
            })
        });
        Perm { img }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({})", self.to_cycle_string())
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_one_line_string())
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Perm, D::Error> {
        let text = String::deserialize(d)?;
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| serde::de::Error::custom("expected one-line form [..]"))?;
        let images = parse_number_list(inner).map_err(serde::de::Error::custom)?;
        Perm::from_one_line(&images).map_err(serde::de::Error::custom)
    }
}

fn parse_number_list(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split([',', ' '])
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid number {tok:?}"))
        })
        .collect()
}

/// A partition (weakly decreasing positive parts), used as a cycle type.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    /// Parts in weakly decreasing order.
    parts: Vec<u8>,
}

impl CycleType {
    /// Builds a cycle type from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> CycleType {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        assert!(parts.iter().sum::<usize>() <= MAX_DEGREE, "degree too large");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType {
            parts: parts.into_iter().map(|p| p as u8).collect(),
        }
    }

    /// Parts in weakly decreasing order.
    pub fn parts(&self) -> Vec<usize> {
        self.parts.iter().map(|&p| p as usize).collect()
    }

    /// Sum of the parts (the degree of the permutations of this type).
    pub fn degree(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Multiplicity of parts equal to `k`.
    pub fn count_of(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p as usize == k).count()
    }

    /// Concatenation of two partitions (multiset union of parts).
    pub fn union(&self, other: &CycleType) -> CycleType {
        let mut parts = self.parts();
        parts.extend(other.parts());
        CycleType::new(parts)
    }

    /// `(part, multiplicity)` pairs, parts decreasing.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            let p = p as usize;
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType{self}")
    }
}

/// `n!` as an exact big integer.
pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// `n!` in `u64`; valid for `n ≤ 20`.
pub(crate) fn factorial_u64(n: usize) -> u64 {
    debug_assert!(n <= 20);
    (2..=n as u64).product::<u64>().max(1)
}

/// All partitions of `m`, in decreasing lexicographic order, starting with
/// `[m]` and ending with `[1,1,…,1]`. `partitions_of(0)` is the single empty
/// partition.
pub fn partitions_of(m: usize) -> Vec<CycleType> {
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<CycleType>) {
        if remaining == 0 {
            out.push(CycleType::new(current.clone()));
            return;
        }
        let top = max_part.min(remaining);
        for part in (1..=top).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// Order of the centralizer in the symmetric group of an element with this
/// cycle type: `∏ kᵐᵏ · mₖ!` over parts `k` with multiplicity `mₖ`.
pub fn centralizer_order(t: &CycleType) -> BigUint {
    let mut z = BigUint::one();
    for (part, mult) in t.multiplicities() {
        z *= BigUint::from(part).pow(mult as u32);
        z *= factorial(mult);
    }
    z
}

/// Number of permutations in the symmetric group with this cycle type:
/// `m! / ∏ kᵐᵏ mₖ!`.
pub fn class_size(t: &CycleType) -> BigUint {
    let m = t.degree();
    let num = factorial(m);
    let den = centralizer_order(t);
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero());
    q
}

/// Lexicographic rank of the permutation among all permutations of its
/// degree, ordered by one-line form; the identity has rank 0.
pub fn perm_rank(p: &Perm) -> BigUint {
    let m = p.degree();
    let img = p.image_table();
    let mut rank = BigUint::zero();
    let mut used = 0u64;
    for (i, &v) in img.iter().enumerate() {
        let below = (used & ((1u64 << v) - 1)).count_ones() as u64;
        let smaller = v as u64 - below;
        rank += BigUint::from(smaller) * factorial(m - 1 - i);
        used |= 1u64 << v;
    }
    rank
}

/// Inverse of [`perm_rank`]: the permutation of the given degree at this
/// lexicographic rank.
pub fn perm_unrank(rank: &BigUint, degree: usize) -> Result<Perm, PermError> {
    if degree > MAX_DEGREE {
        return Err(PermError::DegreeTooLarge(degree));
    }
    if *rank >= factorial(degree) {
        return Err(PermError::RankOutOfRange {
            rank: rank.clone(),
            degree,
        });
    }
    let mut img = vec![0u8; degree];
    let mut avail: Vec<u8> = (0..degree as u8).collect();
    let mut r = rank.clone();
    for (i, slot) in img.iter_mut().enumerate() {
        let f = factorial(degree - 1 - i);
        let (q, rem) = num_integer::Integer::div_rem(&r, &f);
        let qi: usize = q.try_into().expect("digit fits usize");
        *slot = avail.remove(qi);
        r = rem;
    }
    Ok(Perm::from_image_table(img))
}
