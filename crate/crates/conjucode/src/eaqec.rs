//! Entanglement-assisted quantum code parameters from classical codes.
//!
//! The two-code construction turns `[n,k1,d1]` and `[n,k2,d2]` with parity checks
//! H1, H2 into an [[n, k1+k2-n+c, min(d1,d2); c]] EAQEC code, where
//! c = rank(H1 H2^T) counts the required maximally entangled pairs. Feeding
//! the same cyclic trace code twice collapses this to
//! [[n, k - hull, d; c]] with c = (n - k) - hull, because
//! rank(H H^T) = dim(C^perp) - dim(C meet C^perp).

use crate::matrix::BinMatrix;
use crate::tracecode::CyclicCode;
use crate::{Error, Result};

/// Parity check matrix of a cyclic code: the generator matrix of its dual,
/// rows the cyclic shifts of h_c* with h_c = (x^n+1)/r. The full space yields
/// an empty matrix; the zero code yields the identity.
pub fn parity_matrix(code: &CyclicCode) -> BinMatrix {
    code.dual().generator_matrix()
}

/// Number of ebits c = rank(H1 H2^T).
pub fn ebit_count(h1: &BinMatrix, h2: &BinMatrix) -> Result<usize> {
    if h1.n_cols() != h2.n_cols() {
        return Err(Error::DimensionMismatch {
            left: format!("{}x{}", h1.n_rows(), h1.n_cols()),
            right: format!("{}x{}", h2.n_rows(), h2.n_cols()),
        });
    }
    Ok(h1.mul(&h2.transpose())?.rank())
}

/// An exact rational, for rates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Ratio {
    num: i64,
    den: i64,
}

impl Ratio {
    pub fn new(num: i64, den: i64) -> Ratio {
        assert!(den > 0);
        let g = gcd_i64(num.unsigned_abs(), den as u64).max(1) as i64;
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }
}

fn gcd_i64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Parameters [[n, k, d; c]] of an EAQEC code. The distance may be unknown
/// when enumeration was skipped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EaqecParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub c: usize,
}

impl EaqecParams {
    pub fn rate(&self) -> Ratio {
        Ratio::new(self.k as i64, self.n as i64)
    }

    /// (k - c)/n; negative for codes that consume more entanglement than they
    /// encode.
    pub fn net_rate(&self) -> Ratio {
        Ratio::new(self.k as i64 - self.c as i64, self.n as i64)
    }

    /// Maximal entanglement: c = n - k.
    pub fn is_maximal_entanglement(&self) -> bool {
        self.c == self.n - self.k
    }
}

impl std::fmt::Display for EaqecParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.d {
            Some(d) => write!(f, "[[{},{},{};{}]]", self.n, self.k, d, self.c),
            None => write!(f, "[[{},{},?;{}]]", self.n, self.k, self.c),
        }
    }
}

/// Euclidean hull dimension of a cyclic code, n - deg lcm(r, h_c*).
pub fn hull_dim(code: &CyclicCode) -> usize {
    code.hull_dim()
}

/// Single-code construction: [[n, k - hull, d; c]] with c = rank(H H^T).
/// The rank identity c = (n - k) - hull is checked on every call.
///
/// ```
/// use conjucode::{eaqec, tracecode::CyclicCode};
///
/// // the even-weight [3,2,2] code yields a maximal-entanglement [[3,2,2;1]]
/// let code = CyclicCode::new(3, "1+x".parse().unwrap()).unwrap();
/// let params = eaqec::eaqec_from_trace(&code, Some(2));
/// assert_eq!(params.to_string(), "[[3,2,2;1]]");
/// assert!(params.is_maximal_entanglement());
/// ```
pub fn eaqec_from_trace(code: &CyclicCode, d: Option<usize>) -> EaqecParams {
    let n = code.n();
    let k = code.dim();
    let hull = code.hull_dim();
    let h = parity_matrix(code);
    let c = ebit_count(&h, &h).expect("same shape");
    assert_eq!(
        c,
        (n - k) - hull,
        "rank(HH^T) must equal dim(C^perp) - dim(hull)"
    );
    EaqecParams {
        n,
        k: k - hull,
        d,
        c,
    }
}

/// General two-code construction [[n, k1+k2-n+c, min(d1,d2); c]],
/// c = rank(H1 H2^T). With both codes equal it reduces to
/// [`eaqec_from_trace`].
pub fn eaqec_wilde_brun(
    c1: &CyclicCode,
    d1: Option<usize>,
    c2: &CyclicCode,
    d2: Option<usize>,
) -> Result<EaqecParams> {
    if c1.n() != c2.n() {
        return Err(Error::DimensionMismatch {
            left: c1.n().to_string(),
            right: c2.n().to_string(),
        });
    }
    let n = c1.n();
    let c = ebit_count(&parity_matrix(c1), &parity_matrix(c2))?;
    let k = (c1.dim() + c2.dim() + c)
        .checked_sub(n)
        .expect("k1 + k2 + c >= n for any code pair");
    let d = match (d1, d2) {
        (Some(a), Some(b)) => Some(a.min(b)),
        _ => None,
    };
    Ok(EaqecParams { n, k, d, c })
}
