//! Additive conjucyclic codes over GF(4).
//!
//! The F2-linear bijection `psi : F2^{2n} -> GF(4)^n`,
//! `psi(u)_i = u_i + (u_i + u_{n+i}) w`, intertwines the plain cyclic shift on
//! F2^{2n} with the conjucyclic shift `T` on GF(4)^n. Every ACC code of length
//! n is `psi(D)` for a binary cyclic code `D` of length `2n`, so a generator
//! polynomial `g | x^{2n}+1` pins the whole structure: dimension `2n - deg g`,
//! trace dual `psi(<h*>)` with `h = (x^{2n}+1)/g`, and hull generated by
//! `lcm(g, h*)`. Trace-orthogonality over GF(4) is Euclidean orthogonality of
//! the binary images, which is what makes all of this exact linear algebra.

use crate::bits::BitVec;
use crate::f4::{F4, F4Vector};
use crate::matrix::BinMatrix;
use crate::poly::BinPoly;
use crate::weight;
use crate::{Error, Result};

/// The F2-linear bijection from binary 2n-vectors to GF(4)^n.
pub fn psi(u: &BitVec) -> Result<F4Vector> {
    if u.len() % 2 != 0 {
        return Err(Error::OddLength(u.len()));
    }
    let n = u.len() / 2;
    Ok(F4Vector::new(
        (0..n)
            .map(|i| F4::new(u.get(i), u.get(i) ^ u.get(n + i)))
            .collect(),
    ))
}

/// The inverse of [`psi`]: writing c_i = a_i + b_i w, returns
/// (a_0..a_{n-1}, a_0+b_0, ..., a_{n-1}+b_{n-1}).
pub fn phi_inv(c: &F4Vector) -> BitVec {
    let n = c.len();
    let mut u = BitVec::zero(2 * n);
    for (i, &e) in c.iter().enumerate() {
        u.set(i, e.a());
        u.set(n + i, e.a() ^ e.b());
    }
    u
}

/// Conjucyclic shift T(c) = (conj(c_{n-1}), c_0, ..., c_{n-2}).
pub fn conj_shift(c: &F4Vector) -> F4Vector {
    let n = c.len();
    if n == 0 {
        return c.clone();
    }
    let mut out = Vec::with_capacity(n);
    out.push(c.get(n - 1).conj());
    out.extend_from_slice(&c.entries()[..n - 1]);
    F4Vector::new(out)
}

/// Componentwise trace, landing in F2^n.
pub fn trace_vec(c: &F4Vector) -> BitVec {
    let mut t = BitVec::zero(c.len());
    for (i, &e) in c.iter().enumerate() {
        t.set(i, e.trace());
    }
    t
}

/// Trace inner product <a, b> = Tr(sum a_i b_i).
pub fn trace_inner(a: &F4Vector, b: &F4Vector) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len().to_string(),
            right: b.len().to_string(),
        });
    }
    let mut acc = crate::f4::ZERO;
    for (&x, &y) in a.iter().zip(b.iter()) {
        acc = acc + x * y;
    }
    Ok(acc.trace())
}

/// Gray weight: per symbol 0 -> 0, w -> 1, w^2 -> 1, 1 -> 2. Equal to the
/// Hamming weight of the binary image phi_inv(c).
pub fn gray_weight(c: &F4Vector) -> usize {
    c.iter().map(|e| e.gray_weight()).sum()
}

/// A matrix over GF(4), stored by rows.
#[derive(Clone, PartialEq, Eq)]
pub struct F4Matrix {
    rows: Vec<F4Vector>,
    cols: usize,
}

impl F4Matrix {
    pub fn from_rows(rows: Vec<F4Vector>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        F4Matrix { rows, cols }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &F4Vector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[F4Vector] {
        &self.rows
    }

    pub fn transpose(&self) -> F4Matrix {
        let mut out =
            vec![Vec::with_capacity(self.rows.len()); self.cols];
        for row in &self.rows {
            for (j, &e) in row.iter().enumerate() {
                out[j].push(e);
            }
        }
        F4Matrix::from_rows(
            out.into_iter().map(F4Vector::new).collect(),
            self.rows.len(),
        )
    }
}

/// Trace multiplication A (.)_Tr B = Tr(A * B): the GF(4) matrix product with
/// the trace applied entrywise, producing a binary matrix. Satisfies
/// a (.)_Tr b = Tr(a) * b for binary right factors, and
/// B (.)_Tr (A * E) = (B (.)_Tr A) * E for binary E.
pub fn trace_mat_mul(a: &F4Matrix, b: &F4Matrix) -> Result<BinMatrix> {
    if a.n_cols() != b.n_rows() {
        return Err(Error::DimensionMismatch {
            left: format!("{}x{}", a.n_rows(), a.n_cols()),
            right: format!("{}x{}", b.n_rows(), b.n_cols()),
        });
    }
    let mut out = BinMatrix::zero(a.n_rows(), b.n_cols());
    for i in 0..a.n_rows() {
        for j in 0..b.n_cols() {
            let mut acc = crate::f4::ZERO;
            for k in 0..a.n_cols() {
                acc = acc + a.row(i).get(k) * b.row(k).get(j);
            }
            if acc.trace() {
                out.set(i, j, true);
            }
        }
    }
    Ok(out)
}

/// Outcome of a minimum-distance request.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinDistance {
    Value(usize),
    /// Dimension exceeded the enumeration bound.
    NotComputed { dim: usize },
    /// The zero code has no nonzero codeword to take a minimum over.
    ZeroCode,
}

impl std::fmt::Display for MinDistance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MinDistance::Value(d) => write!(f, "{d}"),
            MinDistance::NotComputed { dim } => write!(f, "?(dim {dim})"),
            MinDistance::ZeroCode => write!(f, "?(zero code)"),
        }
    }
}

impl MinDistance {
    pub fn value(&self) -> Option<usize> {
        match self {
            MinDistance::Value(d) => Some(*d),
            _ => None,
        }
    }
}

/// Default enumeration bound for minimum distances (about 16.7M codewords).
pub const DEFAULT_MAX_DIM: usize = 24;

/// Duality relations of a code against its trace dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualityClass {
    /// C is contained in its trace dual (G (.)_Tr G^T = 0).
    pub self_orthogonal: bool,
    /// C contains its trace dual (H (.)_Tr H^T = 0).
    pub dual_containing: bool,
    pub self_dual: bool,
}

/// An additive conjucyclic code over GF(4), as rows of a generator matrix plus
/// the generator polynomial of its binary cyclic image when known.
///
/// ```
/// use conjucode::{acc::AccCode, f4::F4Vector};
///
/// // the span of the T-orbit of one vector, image generator recovered
/// let v: F4Vector = "W,w,0".parse().unwrap();
/// let code = AccCode::from_vector(&v);
/// assert_eq!((code.n(), code.dim()), (3, 4));
/// assert_eq!(code.image_gen().unwrap().to_string(), "1+x^2");
/// assert_eq!(code.trace_dual().dim(), 2);
/// assert!(code.is_acd());
/// ```
#[derive(Clone)]
pub struct AccCode {
    n: usize,
    gen_rows: Vec<F4Vector>,
    image_gen: Option<BinPoly>,
    dim: usize,
}

impl AccCode {
    /// Code whose binary image is the cyclic code `<g>` of length 2n. Rows are
    /// T^i(psi(xi_g)) for i = 0 .. 2n - deg(g) - 1. g = x^{2n}+1 yields the
    /// zero code, g = 1 the full space.
    pub fn from_gen_poly(g: &BinPoly, n: usize) -> Result<AccCode> {
        assert!(n >= 1, "code length must be positive");
        let big_n = 2 * n;
        let modulus = BinPoly::xn_plus_1(big_n);
        if g.is_zero() || !g.divides(&modulus) {
            return Err(Error::NotADivisor { n: big_n });
        }
        let deg = g.degree().expect("nonzero");
        let dim = big_n - deg;
        let mut gen_rows = Vec::with_capacity(dim);
        if dim > 0 {
            let mut row = psi(&g.to_bitvec(big_n)?)?;
            for _ in 0..dim {
                gen_rows.push(row.clone());
                row = conj_shift(&row);
            }
        }
        Ok(AccCode {
            n,
            gen_rows,
            image_gen: Some(g.clone()),
            dim,
        })
    }

    /// F2-span of the T-orbit of `v`. The image generator is recovered as
    /// gcd(u(x), x^{2n}+1) where u = phi_inv(v): the orbit polynomials are
    /// exactly the multiples of u modulo x^{2n}+1, so their ideal is principal
    /// with that gcd as generator.
    pub fn from_vector(v: &F4Vector) -> AccCode {
        let n = v.len();
        assert!(n >= 1, "code length must be positive");
        let u = BinPoly::from_bitvec(&phi_inv(v));
        let modulus = BinPoly::xn_plus_1(2 * n);
        let g = if u.is_zero() {
            modulus
        } else {
            u.gcd(&modulus).expect("nonzero")
        };
        AccCode::from_gen_poly(&g, n).expect("gcd divides x^2n+1")
    }

    /// General additive code from explicit generator rows, which must be
    /// F2-independent. No conjucyclic structure is assumed; the image
    /// generator stays unknown.
    pub fn from_rows(n: usize, rows: Vec<F4Vector>) -> Result<AccCode> {
        assert!(n >= 1, "code length must be positive");
        for r in &rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n.to_string(),
                    right: r.len().to_string(),
                });
            }
        }
        let dim = rows.len();
        let code = AccCode {
            n,
            gen_rows: rows,
            image_gen: None,
            dim,
        };
        if code.binary_image().rank() != dim {
            return Err(Error::DependentRows);
        }
        Ok(code)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// F2-dimension: dim(C) = 2n - deg(g).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn image_gen(&self) -> Option<&BinPoly> {
        self.image_gen.as_ref()
    }

    pub fn gen_rows(&self) -> &[F4Vector] {
        &self.gen_rows
    }

    pub fn generator_matrix(&self) -> F4Matrix {
        F4Matrix::from_rows(self.gen_rows.clone(), self.n)
    }

    /// The binary expansion of the generator rows: a dim x 2n matrix whose
    /// row space is the binary image D = phi(C).
    pub fn binary_image(&self) -> BinMatrix {
        BinMatrix::from_rows(
            self.gen_rows.iter().map(phi_inv).collect(),
            2 * self.n,
        )
    }

    /// Membership test by rank.
    pub fn contains(&self, v: &F4Vector) -> bool {
        if v.len() != self.n {
            return false;
        }
        if v.is_zero() {
            return true;
        }
        let stacked = self
            .binary_image()
            .stack(&BinMatrix::from_rows(vec![phi_inv(v)], 2 * self.n));
        stacked.rank() == self.dim
    }

    /// Same row space of the binary images.
    pub fn same_code(&self, other: &AccCode) -> bool {
        self.n == other.n && self.binary_image().same_row_space(&other.binary_image())
    }

    /// Trace dual psi(D^perp). With a known image generator the dual image is
    /// generated by h*(x), h = (x^{2n}+1)/g; otherwise the dual basis comes
    /// from the nullspace of the binary image.
    pub fn trace_dual(&self) -> AccCode {
        match &self.image_gen {
            Some(g) => {
                let h = BinPoly::xn_plus_1(2 * self.n)
                    .divmod(g)
                    .expect("g nonzero")
                    .0;
                let hstar = h.reciprocal().expect("h nonzero");
                AccCode::from_gen_poly(&hstar, self.n).expect("h* divides x^2n+1")
            }
            None => {
                let ns = self.binary_image().nullspace();
                let rows = ns
                    .rows()
                    .iter()
                    .map(|r| psi(r).expect("even length"))
                    .collect();
                AccCode {
                    n: self.n,
                    gen_rows: rows,
                    image_gen: None,
                    dim: 2 * self.n - self.dim,
                }
            }
        }
    }

    /// Hull C with its trace dual: generated by p = lcm(g, h*). Requires the
    /// image generator; rebuild the code with [`AccCode::from_vector`] first
    /// when it is unknown.
    pub fn hull(&self) -> Result<AccCode> {
        let g = self.image_gen.as_ref().ok_or(Error::UnknownGenerator)?;
        let h = BinPoly::xn_plus_1(2 * self.n).divmod(g)?.0;
        let p = g.lcm(&h.reciprocal()?)?;
        AccCode::from_gen_poly(&p, self.n)
    }

    /// Hull dimension by the rank identity: dim(C) - rank(G (.)_Tr G^T).
    /// Agrees with dim(hull()) whenever the generator is known.
    pub fn hull_dim_via_rank(&self) -> usize {
        let g = self.generator_matrix();
        let prod = trace_mat_mul(&g, &g.transpose()).expect("shapes agree");
        self.dim - prod.rank()
    }

    /// Additive complementary dual test: det(G (.)_Tr G^T) != 0, equivalently
    /// C meets its trace dual only in 0. True for the zero code (empty
    /// intersection holds vacuously; the 0x0 determinant is 1).
    pub fn is_acd(&self) -> bool {
        let g = self.generator_matrix();
        trace_mat_mul(&g, &g.transpose())
            .expect("shapes agree")
            .det()
            .expect("square")
    }

    /// Self-orthogonality and dual-containment from the zero tests on
    /// G (.)_Tr G^T and H (.)_Tr H^T.
    pub fn duality_class(&self) -> DualityClass {
        let g = self.generator_matrix();
        let gg = trace_mat_mul(&g, &g.transpose()).expect("shapes agree");
        let h = self.trace_dual().generator_matrix();
        let hh = trace_mat_mul(&h, &h.transpose()).expect("shapes agree");
        let self_orthogonal = gg.is_zero();
        let dual_containing = hh.is_zero();
        DualityClass {
            self_orthogonal,
            dual_containing,
            self_dual: self_orthogonal && dual_containing,
        }
    }

    /// Minimum Gray weight over nonzero codewords, which equals the minimum
    /// Hamming weight of the binary image. Exhaustive when dim <= max_dim.
    pub fn min_gray_distance(&self, max_dim: usize) -> MinDistance {
        if self.dim == 0 {
            return MinDistance::ZeroCode;
        }
        if self.dim > max_dim {
            return MinDistance::NotComputed { dim: self.dim };
        }
        let rows: Vec<BitVec> = self.gen_rows.iter().map(phi_inv).collect();
        MinDistance::Value(weight::min_weight_exhaustive(&rows).expect("nonzero dim"))
    }
}

/// Ranks appearing in the necessary condition for an additive complementary
/// pair (C_{g1}, C_{g2}) with g2 = (x^{2n}+1)/g1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AcpRankCheck {
    /// rank(G_{eta_{g1}} (.)_Tr G_{eta_{g1*}}^T); equals deg(g2) for an ACP.
    pub rank1: usize,
    /// rank(G_{eta_{g2}} (.)_Tr G_{eta_{g2*}}^T); equals 2n - deg(g2) for an ACP.
    pub rank2: usize,
    /// Both rank equalities hold. Necessary for an ACP, not sufficient.
    pub necessary_condition_met: bool,
}

pub fn acp_rank_check(g1: &BinPoly, n: usize) -> Result<AcpRankCheck> {
    let big_n = 2 * n;
    let modulus = BinPoly::xn_plus_1(big_n);
    if g1.is_zero() || !g1.divides(&modulus) {
        return Err(Error::NotADivisor { n: big_n });
    }
    let g2 = modulus.divmod(g1)?.0;
    let k = g2.degree().map_or(0, |d| d);

    let rank_of = |ga: &BinPoly, gb: &BinPoly| -> Result<usize> {
        let ca = AccCode::from_gen_poly(ga, n)?;
        let cb = AccCode::from_gen_poly(gb, n)?;
        let prod = trace_mat_mul(
            &ca.generator_matrix(),
            &cb.generator_matrix().transpose(),
        )?;
        Ok(prod.rank())
    };

    // reciprocals of divisors of x^{2n}+1 divide it as well
    let rank1 = rank_of(g1, &recip_or_self(g1))?;
    let rank2 = rank_of(&g2, &recip_or_self(&g2))?;
    Ok(AcpRankCheck {
        rank1,
        rank2,
        necessary_condition_met: rank1 == k && rank2 == big_n - k,
    })
}

fn recip_or_self(p: &BinPoly) -> BinPoly {
    p.reciprocal().expect("nonzero divisor")
}
