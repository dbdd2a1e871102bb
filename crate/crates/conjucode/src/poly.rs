//! Polynomials over GF(2) in ascending-coefficient form.
//!
//! Coefficients are packed into 64-bit limbs, bit `i` of the vector being the
//! coefficient of x^i. The zero polynomial is the empty limb vector, and the
//! representation is always normalized (no trailing zero limbs), so equality and
//! hashing are structural. Addition is XOR; every nonzero polynomial is monic,
//! so gcd and lcm are unique without tie-breaking.
//!
//! Two text forms are supported and round-trip exactly:
//! - coefficient strings, ascending: `"110101"` is 1+x+x^3+x^5;
//! - term expressions with products and powers: `"(1+x)^2*(1+x+x^3)"`.
//!
//! ```
//! use conjucode::poly::BinPoly;
//!
//! let g: BinPoly = "(1+x)^2*(1+x+x^3)".parse().unwrap();
//! assert_eq!(g.to_string(), "1+x+x^2+x^5");
//! assert_eq!(g.coeff_string(), "111001");
//! assert!(g.divides(&BinPoly::xn_plus_1(14)));
//! assert_eq!(g.reciprocal().unwrap().to_string(), "1+x^3+x^4+x^5");
//! ```

use crate::bits::BitVec;
use crate::{Error, Result};

/// A polynomial over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinPoly {
    limbs: Vec<u64>,
}

impl BinPoly {
    pub fn zero() -> Self {
        BinPoly { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        BinPoly { limbs: vec![1] }
    }

    /// The monomial x^d.
    pub fn monomial(d: usize) -> Self {
        let mut limbs = vec![0u64; d / 64 + 1];
        limbs[d / 64] = 1 << (d % 64);
        BinPoly { limbs }
    }

    /// x^n + 1.
    pub fn xn_plus_1(n: usize) -> Self {
        let mut p = BinPoly::monomial(n);
        p.flip(0);
        p
    }

    pub fn from_coeffs(bits: &[bool]) -> Self {
        let mut p = BinPoly::zero();
        for (i, &b) in bits.iter().enumerate() {
            if b {
                p.flip(i);
            }
        }
        p
    }

    /// Build from the exponents that carry coefficient 1.
    pub fn from_support(exponents: &[usize]) -> Self {
        let mut p = BinPoly::zero();
        for &e in exponents {
            p.flip(e);
        }
        p
    }

    pub fn from_bitvec(v: &BitVec) -> Self {
        let mut p = BinPoly {
            limbs: v.limbs().to_vec(),
        };
        p.normalize();
        p
    }

    /// Coefficient vector padded to `len`. Fails when the degree does not fit.
    pub fn to_bitvec(&self, len: usize) -> Result<BitVec> {
        if let Some(d) = self.degree() {
            if d >= len {
                return Err(Error::DegreeOverflow { deg: d, bound: len });
            }
        }
        let mut v = BitVec::zero(len);
        for i in 0..=self.degree().map_or(0, |d| d) {
            if self.coeff(i) {
                v.set(i, true);
            }
        }
        Ok(v)
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    fn flip(&mut self, i: usize) {
        if i / 64 >= self.limbs.len() {
            self.limbs.resize(i / 64 + 1, 0);
        }
        self.limbs[i / 64] ^= 1 << (i % 64);
        self.normalize();
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / 64)
            .is_some_and(|l| (l >> (i % 64)) & 1 == 1)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    /// Value at x = 1, i.e. the weight parity.
    pub fn eval_at_one(&self) -> bool {
        self.weight() % 2 == 1
    }

    fn shl(&self, s: usize) -> BinPoly {
        if self.is_zero() {
            return BinPoly::zero();
        }
        let (word, bit) = (s / 64, s % 64);
        let mut limbs = vec![0u64; self.limbs.len() + word + 1];
        for (i, &l) in self.limbs.iter().enumerate() {
            limbs[i + word] |= l << bit;
            if bit > 0 {
                limbs[i + word + 1] |= l >> (64 - bit);
            }
        }
        let mut p = BinPoly { limbs };
        p.normalize();
        p
    }

    /// Quotient and remainder with deg(rem) < deg(den).
    pub fn divmod(&self, den: &BinPoly) -> Result<(BinPoly, BinPoly)> {
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = BinPoly::zero();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let s = dr - dd;
            quot.flip(s);
            rem += &den.shl(s);
        }
        Ok((quot, rem))
    }

    pub fn rem(&self, den: &BinPoly) -> Result<BinPoly> {
        Ok(self.divmod(den)?.1)
    }

    /// True when `self` divides `other` exactly.
    pub fn divides(&self, other: &BinPoly) -> bool {
        match other.rem(self) {
            Ok(r) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Greatest common divisor; errors only when both inputs are zero.
    pub fn gcd(&self, other: &BinPoly) -> Result<BinPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial("gcd"));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Least common multiple of two nonzero polynomials.
    pub fn lcm(&self, other: &BinPoly) -> Result<BinPoly> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial("lcm"));
        }
        let g = self.gcd(other)?;
        Ok((self * other).divmod(&g)?.0)
    }

    /// Reciprocal polynomial x^deg * p(1/x); errors on zero.
    pub fn reciprocal(&self) -> Result<BinPoly> {
        let d = self.degree().ok_or(Error::ZeroPolynomial("reciprocal"))?;
        let mut p = BinPoly::zero();
        for i in 0..=d {
            if self.coeff(i) {
                p.flip(d - i);
            }
        }
        Ok(p)
    }

    pub fn is_self_reciprocal(&self) -> bool {
        !self.is_zero() && self.reciprocal().expect("nonzero") == *self
    }

    pub fn pow(&self, e: u32) -> BinPoly {
        let mut acc = BinPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal derivative: over GF(2) only odd-degree terms survive.
    pub fn derivative(&self) -> BinPoly {
        let mut p = BinPoly::zero();
        if let Some(d) = self.degree() {
            for i in (1..=d).step_by(2).filter(|&i| self.coeff(i)) {
                p.flip(i - 1);
            }
        }
        p
    }

    /// Inverse of squaring: requires all exponents even.
    pub fn sqrt(&self) -> Option<BinPoly> {
        let mut p = BinPoly::zero();
        if let Some(d) = self.degree() {
            for i in 0..=d {
                if self.coeff(i) {
                    if i % 2 != 0 {
                        return None;
                    }
                    p.flip(i / 2);
                }
            }
        }
        Some(p)
    }

    /// Ascending binary coefficient string; `"0"` for the zero polynomial.
    pub fn coeff_string(&self) -> String {
        match self.degree() {
            None => "0".to_string(),
            Some(d) => (0..=d)
                .map(|i| if self.coeff(i) { '1' } else { '0' })
                .collect(),
        }
    }
}

impl std::ops::AddAssign<&BinPoly> for BinPoly {
    fn add_assign(&mut self, rhs: &BinPoly) {
        if rhs.limbs.len() > self.limbs.len() {
            self.limbs.resize(rhs.limbs.len(), 0);
        }
        for (a, b) in self.limbs.iter_mut().zip(&rhs.limbs) {
            *a ^= b;
        }
        self.normalize();
    }
}

impl std::ops::Add for &BinPoly {
    type Output = BinPoly;
    fn add(self, rhs: &BinPoly) -> BinPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl std::ops::Mul for &BinPoly {
    type Output = BinPoly;
    fn mul(self, rhs: &BinPoly) -> BinPoly {
        let mut out = BinPoly::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        // shift-and-xor over the set bits of the shorter operand
        let (short, long) = if self.weight() <= rhs.weight() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for i in 0..=short.degree().unwrap() {
            if short.coeff(i) {
                out += &long.shl(i);
            }
        }
        out
    }
}

impl Ord for BinPoly {
    /// Degree first, then coefficient bits as an integer. Gives the canonical
    /// order used when printing factorizations and divisor sweeps.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for BinPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for BinPoly {
    /// Term form, ascending: `1+x+x^3`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.degree() {
            None => write!(f, "0"),
            Some(d) => {
                let mut first = true;
                for i in 0..=d {
                    if self.coeff(i) {
                        if !first {
                            write!(f, "+")?;
                        }
                        match i {
                            0 => write!(f, "1")?,
                            1 => write!(f, "x")?,
                            _ => write!(f, "x^{i}")?,
                        }
                        first = false;
                    }
                }
                Ok(())
            }
        }
    }
}

impl std::fmt::Debug for BinPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// Print a factorization as `(1+x)^2*(1+x+x^3)`.
pub fn format_factored(factors: &[(BinPoly, u32)]) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    factors
        .iter()
        .map(|(p, e)| {
            if *e == 1 {
                format!("({p})")
            } else {
                format!("({p})^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("number out of range"))
    }

    fn sum(&mut self) -> Result<BinPoly> {
        let mut acc = self.product()?;
        while self.peek() == Some(b'+') {
            self.bump();
            acc += &self.product()?;
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<BinPoly> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.bump();
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<BinPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.number()?;
            if e > u32::MAX as usize {
                return Err(self.err("exponent too large"));
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BinPoly> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.sum()?;
                if self.bump() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'x') => {
                self.bump();
                Ok(BinPoly::monomial(1))
            }
            Some(b'1') => {
                self.bump();
                Ok(BinPoly::one())
            }
            Some(b'0') => {
                self.bump();
                Ok(BinPoly::zero())
            }
            _ => Err(self.err("expected '(', 'x', '1' or '0'")),
        }
    }
}

impl std::str::FromStr for BinPoly {
    type Err = Error;

    /// Accepts either an ascending coefficient string (`"1110010"`) or a term
    /// expression (`"(1+x)^2*(1+x+x^3)"`). Both printers invert exactly.
    fn from_str(s: &str) -> Result<BinPoly> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty polynomial".to_string(),
            });
        }
        if t.bytes().all(|b| b == b'0' || b == b'1') {
            let bits: Vec<bool> = t.bytes().map(|b| b == b'1').collect();
            return Ok(BinPoly::from_coeffs(&bits));
        }
        let mut p = Parser::new(t);
        let poly = p.sum()?;
        p.skip_ws();
        if p.pos != t.len() {
            return Err(p.err("trailing input"));
        }
        Ok(poly)
    }
}
