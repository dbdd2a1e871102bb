//! Minimum-weight engines for binary linear codes given by generator rows.
//!
//! Three routes with different cost/guarantee trade-offs:
//! - [`min_weight_exhaustive`]: Gray-code sweep over all 2^k - 1 nonzero
//!   codewords. Exact. The index range is split into fixed-size chunks that can
//!   run on a worker pool; the result is a min-reduction, so it is identical
//!   for any worker count.
//! - [`cyclic_weight_at_most`]: for cyclic codes, finds the true minimum weight
//!   whenever it does not exceed a small cap, by scanning codewords of weight
//!   <= cap with a fixed coordinate. Exact up to the cap, cheap at any dimension.
//! - [`min_weight_sampled`]: upper bound from seeded random and structured
//!   samples. Never better than the truth, deterministic for a fixed seed.

use crate::bits::BitVec;
use crate::poly::BinPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

trait Word: Copy + Send + Sync {
    fn zero() -> Self;
    fn xor(self, other: Self) -> Self;
    fn ones(self) -> u32;
}

impl Word for u64 {
    fn zero() -> Self {
        0
    }
    fn xor(self, other: Self) -> Self {
        self ^ other
    }
    fn ones(self) -> u32 {
        self.count_ones()
    }
}

impl Word for u128 {
    fn zero() -> Self {
        0
    }
    fn xor(self, other: Self) -> Self {
        self ^ other
    }
    fn ones(self) -> u32 {
        self.count_ones()
    }
}

impl Word for [u64; 4] {
    fn zero() -> Self {
        [0; 4]
    }
    fn xor(self, o: Self) -> Self {
        [self[0] ^ o[0], self[1] ^ o[1], self[2] ^ o[2], self[3] ^ o[3]]
    }
    fn ones(self) -> u32 {
        self.iter().map(|l| l.count_ones()).sum()
    }
}

fn pack<W: Word + From4>(v: &BitVec) -> W {
    W::from_limbs(v.limbs())
}

trait From4 {
    fn from_limbs(limbs: &[u64]) -> Self;
}

impl From4 for u64 {
    fn from_limbs(l: &[u64]) -> Self {
        l.first().copied().unwrap_or(0)
    }
}

impl From4 for u128 {
    fn from_limbs(l: &[u64]) -> Self {
        let lo = l.first().copied().unwrap_or(0) as u128;
        let hi = l.get(1).copied().unwrap_or(0) as u128;
        lo | (hi << 64)
    }
}

impl From4 for [u64; 4] {
    fn from_limbs(l: &[u64]) -> Self {
        let mut w = [0u64; 4];
        for (i, &x) in l.iter().take(4).enumerate() {
            w[i] = x;
        }
        w
    }
}

/// Gray-code sweep of one index chunk [start, start+len). The codeword at
/// index i is the combination given by the Gray code of i.
fn chunk_min<W: Word>(rows: &[W], start: u64, len: u64) -> u32 {
    let gray = start ^ (start >> 1);
    let mut acc = W::zero();
    for (j, row) in rows.iter().enumerate() {
        if (gray >> j) & 1 == 1 {
            acc = acc.xor(*row);
        }
    }
    let mut best = if start == 0 { u32::MAX } else { acc.ones() };
    for i in start + 1..start + len {
        acc = acc.xor(rows[i.trailing_zeros() as usize]);
        let w = acc.ones();
        if w < best {
            best = w;
        }
    }
    best
}

fn sweep<W: Word + From4>(rows: &[BitVec]) -> usize {
    let packed: Vec<W> = rows.iter().map(pack).collect();
    let k = packed.len() as u32;
    let total = 1u64 << k;
    // chunks of at most 2^22 indices keep the pool busy without bookkeeping cost
    let lo_bits = k.min(22);
    let chunks = total >> lo_bits;
    let chunk_len = 1u64 << lo_bits;
    (0..chunks)
        .into_par_iter()
        .map(|c| chunk_min(&packed, c * chunk_len, chunk_len))
        .min()
        .expect("at least one chunk") as usize
}

/// Exact minimum weight over the nonzero span of `rows`. Returns `None` for an
/// empty generator set (the zero code has no nonzero codeword). The caller is
/// responsible for keeping the row count enumerable; rows longer than 256 bits
/// are not supported.
pub fn min_weight_exhaustive(rows: &[BitVec]) -> Option<usize> {
    if rows.is_empty() {
        return None;
    }
    let len = rows[0].len();
    assert!(rows.len() < 63, "dimension {} not enumerable", rows.len());
    assert!(len <= 256, "codeword length {len} exceeds 256 bits");
    Some(match len {
        0..=64 => sweep::<u64>(rows),
        65..=128 => sweep::<u128>(rows),
        _ => sweep::<[u64; 4]>(rows),
    })
}

/// Exact minimum weight of the cyclic code `<g>` of length n, provided it is at
/// most `cap` (cap <= 5). Returns `None` when every nonzero codeword weighs
/// more than the cap. Scans codewords with coordinate 0 set: every nonzero
/// codeword of a cyclic code has a cyclic shift of the same weight with that
/// property, and membership in `<g>` is a residue test mod g.
pub fn cyclic_weight_at_most(g: &BinPoly, n: usize, cap: usize) -> Option<usize> {
    let Some(dg) = g.degree() else {
        return None; // zero polynomial generates nothing usable
    };
    assert!(cap <= 5, "low-weight search is meant for small caps");
    if dg >= n {
        return None; // zero code
    }
    if g.is_one() {
        return Some(1); // full space contains weight-1 words
    }
    // residues x^e mod g, packed into u64 when they fit
    if dg <= 63 {
        // low part of g: x^dg = gl (mod g)
        let gl: u64 = (0..dg).fold(0, |m, i| m | ((g.coeff(i) as u64) << i));
        let top = 1u64 << (dg - 1);
        let mut res = Vec::with_capacity(n);
        let mut cur = 1u64; // x^0 mod g
        for _ in 0..n {
            res.push(cur);
            cur = if cur & top != 0 {
                ((cur ^ top) << 1) ^ gl
            } else {
                cur << 1
            };
        }
        let one = res[0];
        // weight 2: 1 + x^e
        if cap >= 2 && res[1..].contains(&one) {
            return Some(2);
        }
        // weight 3: 1 + x^e1 + x^e2
        if cap >= 3 {
            for e1 in 1..n {
                if res[e1 + 1..].iter().any(|&r| r ^ res[e1] == one) {
                    return Some(3);
                }
            }
        }
        // weight 4
        if cap >= 4 {
            for e1 in 1..n {
                for e2 in e1 + 1..n {
                    let partial = one ^ res[e1] ^ res[e2];
                    if res[e2 + 1..].contains(&partial) {
                        return Some(4);
                    }
                }
            }
        }
        // weight 5
        if cap >= 5 {
            for e1 in 1..n {
                for e2 in e1 + 1..n {
                    for e3 in e2 + 1..n {
                        let partial = one ^ res[e1] ^ res[e2] ^ res[e3];
                        if res[e3 + 1..].contains(&partial) {
                            return Some(5);
                        }
                    }
                }
            }
        }
        None
    } else {
        // wide generators: same scan on BinPoly residues (rare path, small caps)
        let mut res = Vec::with_capacity(n);
        for e in 0..n {
            res.push(BinPoly::monomial(e).rem(g).expect("g nonzero"));
        }
        for w in 2..=cap {
            if scan_wide(&res, 1, w - 1, &res[0]) {
                return Some(w);
            }
        }
        None
    }
}

fn scan_wide(res: &[BinPoly], from: usize, left: usize, acc: &BinPoly) -> bool {
    if left == 0 {
        return acc.is_zero();
    }
    for e in from..res.len() {
        if scan_wide(res, e + 1, left - 1, &(acc + &res[e])) {
            return true;
        }
    }
    false
}

/// Deterministic sampled upper bound on the minimum weight: all sums of up to
/// three generator rows plus `samples` uniform random combinations from a
/// fixed-seed generator. Returns `None` for the zero code.
pub fn min_weight_sampled(rows: &[BitVec], samples: u64, seed: u64) -> Option<usize> {
    if rows.is_empty() {
        return None;
    }
    let len = rows[0].len();
    let k = rows.len();
    let mut best = usize::MAX;
    // structured part: single rows, pairs, triples of rows
    let mut acc = BitVec::zero(len);
    for i in 0..k {
        let wi = rows[i].weight();
        best = best.min(wi);
        for j in i + 1..k {
            acc.clone_from(&rows[i]);
            acc.xor_assign(&rows[j]);
            let wij = acc.weight();
            best = best.min(wij);
            if k <= 128 {
                for third in rows.iter().skip(j + 1) {
                    let mut a3 = acc.clone();
                    a3.xor_assign(third);
                    best = best.min(a3.weight());
                }
            }
        }
    }
    // random part
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut word = BitVec::zero(len);
    let mask_words = k.div_ceil(64);
    let last_mask = if k % 64 == 0 { u64::MAX } else { (1u64 << (k % 64)) - 1 };
    let mut mask = vec![0u64; mask_words];
    for _ in 0..samples {
        loop {
            for m in mask.iter_mut() {
                *m = rng.gen();
            }
            mask[mask_words - 1] &= last_mask;
            if mask.iter().any(|&m| m != 0) {
                break;
            }
        }
        for limb in word.limbs_mut() {
            *limb = 0;
        }
        for (j, row) in rows.iter().enumerate() {
            if (mask[j / 64] >> (j % 64)) & 1 == 1 {
                word.xor_assign(row);
            }
        }
        best = best.min(word.weight());
    }
    Some(best)
}
