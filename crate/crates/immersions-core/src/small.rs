//! Fixed-size permutation kernels for hot loops.
//!
//! [`SPerm`] is a copyable image table for degrees up to 20 (enough for every
//! swept universe: codes on up to 5 crossings in the four-points-per-crossing
//! encoding, up to 10 in the two-point encodings). All tables are 0-based.

use crate::perm::Perm;

pub(crate) const SP_MAX: usize = 20;

/// Copyable 0-based permutation of degree ≤ 20. Unused slots hold `i` so
/// equality and ordering can compare the whole array.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct SPerm {
    pub a: [u8; SP_MAX],
    pub len: u8,
}

impl SPerm {
    #[inline]
    pub fn identity(len: usize) -> SPerm {
        debug_assert!(len <= SP_MAX);
        let mut a = [0u8; SP_MAX];
        for (i, slot) in a.iter_mut().enumerate() {
            *slot = i as u8;
        }
        SPerm { a, len: len as u8 }
    }

    pub fn from_perm(p: &Perm) -> SPerm {
        let img = p.image_table();
        assert!(img.len() <= SP_MAX, "degree {} too large for SPerm", img.len());
        let mut s = SPerm::identity(img.len());
        s.a[..img.len()].copy_from_slice(img);
        s
    }

    pub fn to_perm(self) -> Perm {
        Perm::from_image_table(self.a[..self.len as usize].to_vec())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// `self(other(i))` written into `out`.
    #[inline]
    pub fn compose_into(&self, other: &SPerm, out: &mut SPerm) {
        debug_assert_eq!(self.len, other.len);
        out.len = self.len;
        for i in 0..self.len() {
            out.a[i] = self.a[other.a[i] as usize];
        }
    }

    #[inline]
    pub fn inverse_into(&self, out: &mut SPerm) {
        out.len = self.len;
        for i in 0..self.len() {
            out.a[self.a[i] as usize] = i as u8;
        }
    }

    /// Conjugation `g · x · g⁻¹` written into `out` (`self` is `g`).
    #[inline]
    pub fn conjugate_into(&self, x: &SPerm, out: &mut SPerm) {
        debug_assert_eq!(self.len, x.len);
        out.len = self.len;
        for i in 0..self.len() {
            out.a[self.a[i] as usize] = self.a[x.a[i] as usize];
        }
    }

    /// Number of cycles, counting fixed points.
    #[inline]
    pub fn cycle_count(&self) -> u32 {
        cycle_count_table(&self.a[..self.len()])
    }

    /// True if the cycle structure is exactly two cycles of length `len/2`.
    #[inline]
    pub fn is_two_equal_cycles(&self) -> bool {
        let half = self.len() / 2;
        if !self.len().is_multiple_of(2) || half == 0 {
            return false;
        }
        let mut cur = 0u8;
        let mut steps = 0usize;
        loop {
            cur = self.a[cur as usize];
            steps += 1;
            if cur == 0 {
                break;
            }
            if steps > half {
                return false;
            }
        }
        steps == half && self.cycle_count() == 2
    }
}

impl std::fmt::Debug for SPerm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SPerm{:?}", &self.a[..self.len()])
    }
}

/// Number of cycles of an image table of length ≤ 64.
#[inline]
pub(crate) fn cycle_count_table(a: &[u8]) -> u32 {
    debug_assert!(a.len() <= 64);
    let mut seen = 0u64;
    let mut count = 0u32;
    for start in 0..a.len() {
        if seen & (1 << start) != 0 {
            continue;
        }
        count += 1;
        let mut cur = start as u8;
        while seen & (1 << cur) == 0 {
            seen |= 1 << cur;
            cur = a[cur as usize];
        }
    }
    count
}

/// Lexicographic rank of `word` among permutations of `{0,…,len−1}`; `u64`
/// arithmetic, valid for `len ≤ 20`.
#[inline]
pub(crate) fn lehmer_rank(word: &[u8]) -> u64 {
    let m = word.len();
    debug_assert!(m <= 20);
    let mut rank = 0u64;
    let mut used = 0u32;
    let mut fact = crate::perm::factorial_u64(m);
    for (i, &v) in word.iter().enumerate() {
        fact /= (m - i) as u64;
        let below = (used & ((1u32 << v) - 1)).count_ones() as u64;
        rank += (v as u64 - below) * fact;
        used |= 1 << v;
    }
    rank
}

/// Inverse of [`lehmer_rank`]: writes the permutation word of length `len`.
#[inline]
pub(crate) fn lehmer_unrank(mut rank: u64, len: usize, out: &mut [u8]) {
    debug_assert!(len <= 20);
    let mut avail = (1u32 << len) - 1;
    let mut fact = crate::perm::factorial_u64(len);
    for (i, slot) in out[..len].iter_mut().enumerate() {
        fact /= (len - i) as u64;
        let digit = (rank / fact) as u32;
        rank %= fact;
        let v = nth_set_bit(avail, digit);
        *slot = v as u8;
        avail &= !(1 << v);
    }
}

/// Index of the `k`-th (0-based) set bit of `mask`.
#[inline]
pub(crate) fn nth_set_bit(mask: u32, k: u32) -> u32 {
    let mut m = mask;
    for _ in 0..k {
        m &= m - 1;
    }
    m.trailing_zeros()
}
