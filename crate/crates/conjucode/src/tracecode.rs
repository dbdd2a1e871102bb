//! Binary cyclic trace codes of ACC codes.
//!
//! Applying the trace symbolwise maps an ACC code C of length n onto a binary
//! cyclic code Tr(C) of length n. Through the binary image the whole map is
//! the fold `Phi(u)_i = u_i + u_{n+i}`, and at the polynomial level the trace
//! code is generated by `r = gcd(Phi_p(g), x^n+1)`. The dual of the trace code
//! and the trace of the dual code are generated by `(x^n+1)/r*` and
//! `t = gcd(Phi_p(h*), x^n+1)` respectively; the former always divides the
//! latter, and equality of the two codes is exactly `t = (x^n+1)/r*`.

use crate::acc::{self, AccCode, MinDistance};
use crate::bits::BitVec;
use crate::f4::{F4Vector, ONE, ZERO};
use crate::matrix::BinMatrix;
use crate::poly::BinPoly;
use crate::weight;
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Fold a length-2n binary vector to length n: component i is u_i + u_{n+i}.
pub fn phi_vec(u: &BitVec) -> Result<BitVec> {
    if u.len() % 2 != 0 {
        return Err(Error::OddLength(u.len()));
    }
    let n = u.len() / 2;
    let mut out = BitVec::zero(n);
    for i in 0..n {
        out.set(i, u.get(i) ^ u.get(n + i));
    }
    Ok(out)
}

/// Polynomial form of the fold: coefficient i of the result is g_i + g_{n+i},
/// which is g reduced modulo x^n+1. Requires deg(g) < 2n.
pub fn phi_poly(g: &BinPoly, n: usize) -> Result<BinPoly> {
    match g.degree() {
        None => Ok(BinPoly::zero()),
        Some(d) if d >= 2 * n => Err(Error::DegreeOverflow { deg: d, bound: 2 * n }),
        Some(_) => {
            let mut bits = vec![false; n];
            for (i, b) in bits.iter_mut().enumerate() {
                *b = g.coeff(i) ^ g.coeff(i + n);
            }
            Ok(BinPoly::from_coeffs(&bits))
        }
    }
}

/// A binary cyclic code of length n, as a monic divisor of x^n+1.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    gen: BinPoly,
}

impl CyclicCode {
    pub fn new(n: usize, gen: BinPoly) -> Result<CyclicCode> {
        assert!(n >= 1, "code length must be positive");
        if gen.is_zero() || !gen.divides(&BinPoly::xn_plus_1(n)) {
            return Err(Error::NotADivisor { n });
        }
        Ok(CyclicCode { n, gen })
    }

    pub fn full_space(n: usize) -> CyclicCode {
        CyclicCode {
            n,
            gen: BinPoly::one(),
        }
    }

    pub fn zero_code(n: usize) -> CyclicCode {
        CyclicCode {
            n,
            gen: BinPoly::xn_plus_1(n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gen(&self) -> &BinPoly {
        &self.gen
    }

    pub fn dim(&self) -> usize {
        self.n - self.gen.degree().expect("nonzero divisor")
    }

    pub fn is_zero_code(&self) -> bool {
        self.dim() == 0
    }

    /// Parity check polynomial h = (x^n+1)/gen.
    pub fn parity_poly(&self) -> BinPoly {
        BinPoly::xn_plus_1(self.n)
            .divmod(&self.gen)
            .expect("nonzero")
            .0
    }

    /// Euclidean dual, the cyclic code generated by h*. The reciprocal covers
    /// the degenerate ends: the zero code (h = 1) dualizes to the full space
    /// and the full space (h = x^n+1, self-reciprocal) to the zero code.
    pub fn dual(&self) -> CyclicCode {
        let gen = self.parity_poly().reciprocal().expect("nonzero");
        CyclicCode { n: self.n, gen }
    }

    /// dim x n matrix whose rows are the cyclic shifts x^i * gen.
    pub fn generator_matrix(&self) -> BinMatrix {
        let rows = (0..self.dim())
            .map(|i| {
                (&BinPoly::monomial(i) * &self.gen)
                    .to_bitvec(self.n)
                    .expect("deg < n")
            })
            .collect();
        BinMatrix::from_rows(rows, self.n)
    }

    /// Membership: w(x) is a codeword iff gen divides it.
    pub fn contains(&self, w: &BitVec) -> bool {
        w.len() == self.n && self.gen.divides(&BinPoly::from_bitvec(w))
    }

    /// Generator of the Euclidean hull: lcm(gen, h*) with h the parity
    /// polynomial; the hull is C meet C^perp.
    pub fn hull_gen(&self) -> BinPoly {
        self.gen
            .lcm(self.dual().gen())
            .expect("nonzero")
    }

    pub fn hull_dim(&self) -> usize {
        self.n - self.hull_gen().degree().expect("nonzero")
    }

    /// Every codeword, in information-word order. Test-sized codes only.
    pub fn codewords(&self) -> Vec<BitVec> {
        let k = self.dim();
        assert!(k <= 20, "codeword listing is for small codes");
        let rows = self.generator_matrix();
        (0..1usize << k)
            .map(|mask| {
                let mut acc = BitVec::zero(self.n);
                for j in 0..k {
                    if (mask >> j) & 1 == 1 {
                        acc.xor_assign(rows.row(j));
                    }
                }
                acc
            })
            .collect()
    }
}

impl std::fmt::Debug for CyclicCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}] cyclic <{}>", self.n, self.dim(), self.gen)
    }
}

fn reduced_image_gen(c: &AccCode) -> Result<BinPoly> {
    let g = c.image_gen().ok_or(Error::UnknownGenerator)?;
    // g = x^{2n}+1 (zero code) reduces to 0 modulo x^{2n}+1
    if g.degree() == Some(2 * c.n()) {
        Ok(BinPoly::zero())
    } else {
        Ok(g.clone())
    }
}

/// The trace code Tr(C) = {Tr(c) : c in C}: cyclic of length n, generated by
/// r = gcd(Phi_p(g), x^n+1).
///
/// ```
/// use conjucode::{acc::AccCode, tracecode};
///
/// let g = "(1+x)^2*(1+x+x^3)".parse().unwrap();
/// let code = AccCode::from_gen_poly(&g, 7).unwrap();
/// let trace = tracecode::trace_code_of(&code).unwrap();
/// assert_eq!((trace.n(), trace.dim()), (7, 3));
/// assert_eq!(trace.gen().to_string(), "1+x^2+x^3+x^4");
/// ```
pub fn trace_code_of(c: &AccCode) -> Result<CyclicCode> {
    let n = c.n();
    let folded = phi_poly(&reduced_image_gen(c)?, n)?;
    let xn1 = BinPoly::xn_plus_1(n);
    let r = if folded.is_zero() {
        xn1.clone()
    } else {
        folded.gcd(&xn1).expect("nonzero")
    };
    CyclicCode::new(n, r)
}

/// Tr(C^perp_Tr), generated by t = gcd(Phi_p(h*), x^n+1), h = (x^{2n}+1)/g.
pub fn trace_of_dual(c: &AccCode) -> Result<CyclicCode> {
    let n = c.n();
    let g = c.image_gen().ok_or(Error::UnknownGenerator)?;
    let h = BinPoly::xn_plus_1(2 * n).divmod(g)?.0;
    let hstar = h.reciprocal()?;
    let reduced = if hstar.degree() == Some(2 * n) {
        BinPoly::zero()
    } else {
        hstar
    };
    let folded = phi_poly(&reduced, n)?;
    let xn1 = BinPoly::xn_plus_1(n);
    let t = if folded.is_zero() {
        xn1.clone()
    } else {
        folded.gcd(&xn1).expect("nonzero")
    };
    CyclicCode::new(n, t)
}

/// Relations between Tr(C^perp_Tr) and Tr(C)^perp at the generator level.
#[derive(Clone, Debug)]
pub struct TraceAnalysis {
    /// Generator of Tr(C).
    pub r: BinPoly,
    /// Generator of Tr(C^perp_Tr).
    pub t: BinPoly,
    /// Generator of Tr(C)^perp, (x^n+1)/r*. Divides t always.
    pub dual_gen: BinPoly,
    /// The containment Tr(C^perp_Tr) in Tr(C)^perp is proper.
    pub inclusion_strict: bool,
    /// t | (x^n+1)/r*, which forces t = dual_gen and equality of the codes.
    pub equality_condition: bool,
    /// Tr(C) meets its own dual trivially.
    pub lcd: bool,
}

pub fn duality_report(c: &AccCode) -> Result<TraceAnalysis> {
    let n = c.n();
    let trace = trace_code_of(c)?;
    let t_code = trace_of_dual(c)?;
    let r = trace.gen().clone();
    let t = t_code.gen().clone();
    let dual_gen = BinPoly::xn_plus_1(n)
        .divmod(&r.reciprocal()?)?
        .0;
    // the containment <t> in <dual_gen> is a theorem; a violation here would
    // be an arithmetic bug, not a data condition
    assert!(
        dual_gen.divides(&t),
        "dual generator must divide t (r = {r}, t = {t})"
    );
    let equality_condition = t.divides(&dual_gen);
    debug_assert_eq!(equality_condition, t == dual_gen);
    Ok(TraceAnalysis {
        lcd: is_lcd(&trace),
        inclusion_strict: t != dual_gen,
        equality_condition,
        r,
        t,
        dual_gen,
    })
}

/// Linear complementary dual test for a cyclic code: empty hull, i.e.
/// lcm(r, h_c*) = x^n+1. The zero code passes trivially.
pub fn is_lcd(code: &CyclicCode) -> bool {
    code.hull_dim() == 0
}

/// Checks Tr(C) inside C, embedding bits as {0,1} in GF(4). The map
/// c -> embed(Tr(c)) is F2-linear and membership is linear, so checking the
/// generator rows decides the full code.
pub fn tr_subset_check(c: &AccCode) -> bool {
    c.gen_rows().iter().all(|row| {
        let embedded = F4Vector::new(
            acc::trace_vec(row)
                .iter()
                .map(|b| if b { ONE } else { ZERO })
                .collect(),
        );
        c.contains(&embedded)
    })
}

/// Minimum Hamming weight by exhaustive enumeration of 2^dim - 1 codewords.
pub fn min_distance(code: &CyclicCode, max_dim: usize) -> MinDistance {
    let k = code.dim();
    if k == 0 {
        return MinDistance::ZeroCode;
    }
    if k > max_dim {
        return MinDistance::NotComputed { dim: k };
    }
    let rows: Vec<BitVec> = (0..k)
        .map(|i| {
            (&BinPoly::monomial(i) * code.gen())
                .to_bitvec(code.n())
                .expect("deg < n")
        })
        .collect();
    MinDistance::Value(weight::min_weight_exhaustive(&rows).expect("nonzero dim"))
}

/// Verifies Phi(a) . Phi(b) = 0 over sampled a in D, b in D^perp. Must hold
/// for every cyclic D of even length; exposed as a verification predicate.
pub fn phi_orthogonality_check(d: &CyclicCode, samples: usize, seed: u64) -> bool {
    assert!(d.n() % 2 == 0, "phi needs even length");
    let dual = d.dual();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d_rows = d.generator_matrix();
    let dual_rows = dual.generator_matrix();
    for _ in 0..samples {
        let a = random_combination(&d_rows, &mut rng);
        let b = random_combination(&dual_rows, &mut rng);
        let fa = phi_vec(&a).expect("even length");
        let fb = phi_vec(&b).expect("even length");
        if fa.dot(&fb) {
            return false;
        }
    }
    true
}

fn random_combination(rows: &BinMatrix, rng: &mut ChaCha8Rng) -> BitVec {
    let mut acc = BitVec::zero(rows.n_cols());
    for i in 0..rows.n_rows() {
        if rng.gen() {
            acc.xor_assign(rows.row(i));
        }
    }
    acc
}
