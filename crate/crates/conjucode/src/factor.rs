//! Factorization of x^n+1 over GF(2) and enumeration of its monic divisors.
//!
//! Writing n = m * 2^a with m odd gives x^n+1 = (x^m+1)^(2^a), and x^m+1 is
//! squarefree, so it suffices to factor the odd part. That is done with
//! Berlekamp's algorithm, which is deterministic over GF(2): the fixed points
//! of the Frobenius map modulo f form a subalgebra whose dimension equals the
//! number of irreducible factors, and gcds against its basis elements split f
//! completely. Trial division by sieved irreducibles would need 2^(d/2)
//! candidates to certify a degree-d factor and already fails around n = 59
//! (x^59+1 has an irreducible factor of degree 58), so the subalgebra route is
//! used instead; tests cross-check it against trial division at small degrees.

use crate::matrix::BinMatrix;
use crate::poly::BinPoly;

/// Complete factorization of x^n+1 into irreducibles with multiplicities,
/// sorted by degree then coefficient bits. For even n = 2m every multiplicity
/// is even, since x^(2m)+1 = (x^m+1)^2 in characteristic 2.
///
/// ```
/// use conjucode::{factor::factor_xn_plus_1, poly::format_factored};
///
/// let factors = factor_xn_plus_1(14);
/// assert_eq!(format_factored(&factors), "(1+x)^2*(1+x+x^3)^2*(1+x^2+x^3)^2");
/// ```
pub fn factor_xn_plus_1(n: usize) -> Vec<(BinPoly, u32)> {
    assert!(n >= 1, "x^n+1 requires n >= 1");
    let (mut m, mut mult) = (n, 1u32);
    while m % 2 == 0 {
        m /= 2;
        mult *= 2;
    }
    let mut factors = berlekamp_squarefree(&BinPoly::xn_plus_1(m))
        .into_iter()
        .map(|p| (p, mult))
        .collect::<Vec<_>>();
    factors.sort();
    factors
}

/// Berlekamp factorization of a squarefree polynomial over GF(2).
fn berlekamp_squarefree(f: &BinPoly) -> Vec<BinPoly> {
    let m = f.degree().expect("nonzero input");
    if m == 1 {
        return vec![f.clone()];
    }
    // Q[i] = x^(2i) mod f; the subalgebra is the left nullspace of Q + I.
    let mut q = BinMatrix::zero(m, m);
    let x2 = BinPoly::monomial(2).rem(f).expect("f nonzero");
    let mut power = BinPoly::one();
    for i in 0..m {
        for j in 0..m {
            if power.coeff(j) {
                q.set(i, j, true);
            }
        }
        power = (&power * &x2).rem(f).expect("f nonzero");
    }
    let mut b = q.transpose();
    for i in 0..m {
        let v = b.get(i, i);
        b.set(i, i, !v);
    }
    let basis = b.nullspace();
    let target = basis.n_rows(); // number of irreducible factors

    let mut factors = vec![f.clone()];
    for row in basis.rows() {
        if factors.len() == target {
            break;
        }
        let v = BinPoly::from_bitvec(row);
        let mut next = Vec::with_capacity(factors.len());
        for u in factors {
            let vu = v.rem(&u).expect("u nonzero");
            let g0 = u.gcd(&vu).expect("u nonzero");
            if g0.is_one() || g0 == u {
                next.push(u);
                continue;
            }
            let g1 = u.divmod(&g0).expect("g0 nonzero").0;
            next.push(g0);
            next.push(g1);
        }
        factors = next;
    }
    debug_assert_eq!(factors.len(), target);
    factors
}

/// Number of monic divisors of x^n+1.
pub fn divisor_count(n: usize) -> u64 {
    factor_xn_plus_1(n)
        .iter()
        .map(|(_, e)| *e as u64 + 1)
        .product()
}

/// Iterator over every monic divisor of x^n+1, exactly once, in a fixed
/// deterministic order (mixed-radix sweep over factor multiplicities).
pub fn divisors_of_xn_plus_1(n: usize) -> Divisors {
    Divisors {
        factors: factor_xn_plus_1(n),
        exps: None,
        done: false,
    }
}

pub struct Divisors {
    factors: Vec<(BinPoly, u32)>,
    exps: Option<Vec<u32>>,
    done: bool,
}

impl Iterator for Divisors {
    type Item = BinPoly;

    fn next(&mut self) -> Option<BinPoly> {
        if self.done {
            return None;
        }
        match &mut self.exps {
            None => self.exps = Some(vec![0; self.factors.len()]),
            Some(exps) => {
                let mut i = 0;
                loop {
                    if i == exps.len() {
                        self.done = true;
                        return None;
                    }
                    if exps[i] < self.factors[i].1 {
                        exps[i] += 1;
                        break;
                    }
                    exps[i] = 0;
                    i += 1;
                }
            }
        }
        let exps = self.exps.as_ref().unwrap();
        let mut d = BinPoly::one();
        for ((p, _), &e) in self.factors.iter().zip(exps) {
            d = &d * &p.pow(e);
        }
        Some(d)
    }
}
