//! GF(4) = {0, 1, w, W} with W = w^2 = 1+w, where w is a root of x^2+x+1.
//!
//! An element a+bw is packed into two bits. Conjugation is the Frobenius map
//! x -> x^2, which fixes the subfield {0,1} and swaps w and W; the trace
//! Tr(x) = x + conj(x) lands in GF(2).

use crate::{Error, Result};

/// An element of GF(4), stored as a + b*w with a in bit 0 and b in bit 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct F4(u8);

pub const ZERO: F4 = F4(0b00);
pub const ONE: F4 = F4(0b01);
pub const OMEGA: F4 = F4(0b10);
pub const OMEGA2: F4 = F4(0b11);

impl F4 {
    pub fn new(a: bool, b: bool) -> F4 {
        F4((a as u8) | ((b as u8) << 1))
    }

    /// Coefficient of 1.
    pub fn a(self) -> bool {
        self.0 & 1 == 1
    }

    /// Coefficient of w.
    pub fn b(self) -> bool {
        self.0 & 2 == 2
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Frobenius conjugate x^2: fixes 0 and 1, swaps w and w^2.
    pub fn conj(self) -> F4 {
        F4::new(self.a() ^ self.b(), self.b())
    }

    /// Tr(x) = x + x^2, as a bit of GF(2).
    pub fn trace(self) -> bool {
        self.b()
    }

    /// Gray weight: 0 -> 0, w -> 1, w^2 -> 1, 1 -> 2.
    pub fn gray_weight(self) -> usize {
        match self.0 {
            0b00 => 0,
            0b01 => 2,
            _ => 1,
        }
    }

    pub fn symbol(self) -> char {
        match self.0 {
            0b00 => '0',
            0b01 => '1',
            0b10 => 'w',
            _ => 'W',
        }
    }

    pub fn from_symbol(c: char) -> Option<F4> {
        match c {
            '0' => Some(ZERO),
            '1' => Some(ONE),
            'w' => Some(OMEGA),
            'W' => Some(OMEGA2),
            _ => None,
        }
    }

    pub fn all() -> [F4; 4] {
        [ZERO, ONE, OMEGA, OMEGA2]
    }
}

impl std::ops::Add for F4 {
    type Output = F4;
    /// Characteristic-2 addition is coefficientwise XOR.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

impl std::ops::Mul for F4 {
    type Output = F4;
    /// Field multiplication under w^2 = w+1 (so w^3 = 1).
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: F4) -> F4 {
        let (a1, b1) = (self.0 & 1, self.0 >> 1);
        let (a2, b2) = (rhs.0 & 1, rhs.0 >> 1);
        let a = (a1 & a2) ^ (b1 & b2);
        let b = (a1 & b2) ^ (a2 & b1) ^ (b1 & b2);
        F4(a | (b << 1))
    }
}

impl std::fmt::Debug for F4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl std::fmt::Display for F4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A vector over GF(4). Additive codes only ever scale these by GF(2), so the
/// type offers componentwise addition but no GF(4) scalar action.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F4Vector {
    entries: Vec<F4>,
}

impl F4Vector {
    pub fn new(entries: Vec<F4>) -> Self {
        F4Vector { entries }
    }

    pub fn zero(n: usize) -> Self {
        F4Vector {
            entries: vec![ZERO; n],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn get(&self, i: usize) -> F4 {
        self.entries[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, F4> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[F4] {
        &self.entries
    }

    pub fn add(&self, other: &F4Vector) -> Result<F4Vector> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len().to_string(),
                right: other.len().to_string(),
            });
        }
        Ok(F4Vector::new(
            self.iter().zip(other.iter()).map(|(&a, &b)| a + b).collect(),
        ))
    }
}

impl std::fmt::Display for F4Vector {
    /// Comma-separated symbols, e.g. `W,w,0`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for e in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", e.symbol())?;
            first = false;
        }
        Ok(())
    }
}

impl std::fmt::Debug for F4Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({self})")
    }
}

impl std::str::FromStr for F4Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<F4Vector> {
        let mut entries = Vec::new();
        let mut pos = 0;
        for part in s.split(',') {
            let t = part.trim();
            let mut chars = t.chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(Error::Parse {
                    pos,
                    msg: format!("expected one of 0,1,w,W, got {t:?}"),
                });
            };
            entries.push(F4::from_symbol(c).ok_or(Error::Parse {
                pos,
                msg: format!("unknown GF(4) symbol {c:?}"),
            })?);
            pos += part.len() + 1;
        }
        Ok(F4Vector::new(entries))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_table_from_minimal_polynomial() {
        // oracle: build the table by reducing (a1+b1 w)(a2+b2 w) with w^2 = w+1
        assert_eq!(OMEGA * OMEGA2, ONE); // w^3 = 1
        assert_eq!(ZERO * OMEGA, ZERO);
        assert_eq!(OMEGA * OMEGA, OMEGA2);
        for x in F4::all() {
            assert_eq!(x * ONE, x);
            assert_eq!(x * ZERO, ZERO);
        }
        // associativity and commutativity, exhaustively
        for x in F4::all() {
            for y in F4::all() {
                assert_eq!(x * y, y * x);
                for z in F4::all() {
                    assert_eq!((x * y) * z, x * (y * z));
                }
            }
        }
    }

    #[test]
    fn conjugation_swaps_omegas() {
        assert_eq!(OMEGA.conj(), OMEGA2);
        assert_eq!(ZERO.conj(), ZERO);
        assert_eq!(ONE.conj(), ONE);
        assert_eq!(OMEGA2.conj().conj(), OMEGA2);
        // conj(x) = x^2, exhaustively
        for x in F4::all() {
            assert_eq!(x.conj(), x * x);
        }
    }

    #[test]
    fn trace_values() {
        assert!(!ZERO.trace());
        assert!(!ONE.trace());
        assert!(OMEGA.trace());
        assert!(OMEGA2.trace());
        // Tr(x) = x + x^2 lands in {0,1}
        for x in F4::all() {
            let t = x + x * x;
            assert_eq!(t != ZERO, x.trace());
            assert!(t == ZERO || t == ONE);
        }
    }

    #[test]
    fn field_identities_exhaustive() {
        for x in F4::all() {
            for y in F4::all() {
                assert_eq!((x + y).trace(), x.trace() ^ y.trace());
                assert_eq!((x * y).conj(), x.conj() * y.conj());
                assert_eq!(x.conj().conj(), x);
            }
        }
    }

    #[test]
    fn vector_text_round_trip() {
        let v: F4Vector = "W,w,0".parse().unwrap();
        assert_eq!(v.entries(), &[OMEGA2, OMEGA, ZERO]);
        assert_eq!(v.to_string(), "W,w,0");
        assert!("W,q".parse::<F4Vector>().is_err());
        assert!("Ww".parse::<F4Vector>().is_err());
    }
}
