//! Fixed-length binary vectors packed into 64-bit limbs.
//!
//! Bit `i` lives in limb `i / 64` at position `i % 64`. Unlike [`crate::poly::BinPoly`],
//! a `BitVec` has an explicit length and keeps trailing zeros, so it can represent
//! coordinates of codewords rather than polynomial coefficients.

/// A binary vector of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    limbs: Vec<u64>,
}

fn limbs_for(len: usize) -> usize {
    len.div_ceil(64)
}

impl BitVec {
    /// All-zero vector of the given length.
    pub fn zero(len: usize) -> Self {
        BitVec {
            len,
            limbs: vec![0; limbs_for(len)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVec::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {} out of range {}", i, self.len);
        (self.limbs[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {} out of range {}", i, self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.limbs[i / 64] |= mask;
        } else {
            self.limbs[i / 64] &= !mask;
        }
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    /// In-place XOR with another vector of the same length.
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.limbs.iter_mut().zip(&other.limbs) {
            *a ^= b;
        }
    }

    /// Dot product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        self.limbs
            .iter()
            .zip(&other.limbs)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Cyclic right shift by one position: (v_0, ..., v_{len-1}) -> (v_{len-1}, v_0, ...).
    pub fn cyclic_shift(&self) -> BitVec {
        let mut out = BitVec::zero(self.len);
        if self.len == 0 {
            return out;
        }
        for i in 0..self.len {
            out.set((i + 1) % self.len, self.get(i));
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub(crate) fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    pub(crate) fn limbs_mut(&mut self) -> &mut [u64] {
        &mut self.limbs
    }
}

impl std::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in self.iter() {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_weight() {
        let mut v = BitVec::zero(70);
        v.set(0, true);
        v.set(63, true);
        v.set(64, true);
        v.set(69, true);
        assert_eq!(v.weight(), 4);
        assert!(v.get(63) && v.get(64));
        v.set(63, false);
        assert_eq!(v.weight(), 3);
    }

    #[test]
    fn cyclic_shift_wraps() {
        let v = BitVec::from_bools(&[true, false, false, true]);
        let s = v.cyclic_shift();
        assert_eq!(
            s.iter().collect::<Vec<_>>(),
            vec![true, true, false, false]
        );
    }

    #[test]
    fn dot_parity() {
        let a = BitVec::from_bools(&[true, true, false]);
        let b = BitVec::from_bools(&[true, true, true]);
        assert!(!a.dot(&b));
        let c = BitVec::from_bools(&[true, false, true]);
        assert!(a.dot(&c));
    }
}
