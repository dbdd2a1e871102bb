//! Divisor sweep: enumerate all binary cyclic images of length 2n, derive the
//! trace code and EAQEC parameters of each, filter and rank.

use crate::acc::MinDistance;
use crate::eaqec::{self, EaqecParams};
use crate::factor;
use crate::poly::BinPoly;
use crate::tracecode::{self, CyclicCode};
use crate::{Error, Result};
use rayon::prelude::*;

/// Hard caps for one sweep.
pub const MAX_IMAGE_LENGTH: usize = 128;
pub const MAX_DIVISORS: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Keep only maximal-entanglement records (c = n - k).
    pub maximal_only: bool,
    /// Keep only records with a computed trace distance >= min_d.
    pub min_d: Option<usize>,
    /// Keep only records with EAQEC dimension >= min_k.
    pub min_k: Option<usize>,
    /// Exhaustive-enumeration bound for trace distances.
    pub max_dim: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            maximal_only: false,
            min_d: None,
            min_k: None,
            max_dim: crate::acc::DEFAULT_MAX_DIM,
        }
    }
}

#[derive(Clone)]
pub struct SearchRecord {
    pub g: BinPoly,
    pub acc_dim: usize,
    pub r: BinPoly,
    pub trace_dim: usize,
    pub trace_distance: MinDistance,
    pub eaqec: EaqecParams,
}

impl SearchRecord {
    /// Stable machine line with fixed field order.
    pub fn machine(&self) -> String {
        format!(
            "n={} g={} acc_dim={} r={} trace_dim={} trace_d={} eaqec={} c={} maximal={}",
            self.eaqec.n,
            self.g.coeff_string(),
            self.acc_dim,
            self.r.coeff_string(),
            self.trace_dim,
            self.trace_distance,
            self.eaqec,
            self.eaqec.c,
            self.eaqec.is_maximal_entanglement()
        )
    }

    pub fn human(&self) -> String {
        format!(
            "g={} acc=[{},{}] trace=[{},{},{}] eaqec={} maximal={}",
            self.g,
            self.eaqec.n,
            self.acc_dim,
            self.eaqec.n,
            self.trace_dim,
            self.trace_distance,
            self.eaqec,
            self.eaqec.is_maximal_entanglement()
        )
    }
}

/// Sweep every divisor of x^{2n}+1. Records are sorted by trace distance
/// (descending, unknown last), then EAQEC dimension (descending), then
/// generator polynomial; the order does not depend on the worker pool.
pub fn search(n: usize, opts: &SearchOptions) -> Result<Vec<SearchRecord>> {
    if 2 * n > MAX_IMAGE_LENGTH {
        return Err(Error::BoundExceeded(format!(
            "2n = {} exceeds the sweep cap {MAX_IMAGE_LENGTH}",
            2 * n
        )));
    }
    let count = factor::divisor_count(2 * n);
    if count > MAX_DIVISORS {
        return Err(Error::BoundExceeded(format!(
            "{count} divisors exceed the sweep cap {MAX_DIVISORS}"
        )));
    }
    let divisors: Vec<BinPoly> = factor::divisors_of_xn_plus_1(2 * n).collect();
    let mut records: Vec<SearchRecord> = divisors
        .into_par_iter()
        .map(|g| record_for(&g, n, opts.max_dim))
        .collect::<Result<_>>()?;

    records.retain(|rec| {
        if opts.maximal_only && !rec.eaqec.is_maximal_entanglement() {
            return false;
        }
        if let Some(min_k) = opts.min_k {
            if rec.eaqec.k < min_k {
                return false;
            }
        }
        if let Some(min_d) = opts.min_d {
            match rec.trace_distance.value() {
                Some(d) if d >= min_d => {}
                _ => return false,
            }
        }
        true
    });

    records.sort_by(|a, b| {
        let da = a.trace_distance.value();
        let db = b.trace_distance.value();
        match (da, db) {
            (Some(x), Some(y)) => y.cmp(&x),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (None, None) => std::cmp::Ordering::Equal,
        }
        .then_with(|| b.eaqec.k.cmp(&a.eaqec.k))
        .then_with(|| a.g.cmp(&b.g))
    });
    Ok(records)
}

fn record_for(g: &BinPoly, n: usize, max_dim: usize) -> Result<SearchRecord> {
    let folded = tracecode::phi_poly(
        &if g.degree() == Some(2 * n) {
            BinPoly::zero()
        } else {
            g.clone()
        },
        n,
    )?;
    let xn1 = BinPoly::xn_plus_1(n);
    let r = if folded.is_zero() {
        xn1.clone()
    } else {
        folded.gcd(&xn1)?
    };
    let trace_code = CyclicCode::new(n, r.clone())?;
    let trace_distance = tracecode::min_distance(&trace_code, max_dim);
    let eaqec = eaqec::eaqec_from_trace(&trace_code, trace_distance.value());
    Ok(SearchRecord {
        g: g.clone(),
        acc_dim: 2 * n - g.degree().expect("divisor is nonzero"),
        r,
        trace_dim: trace_code.dim(),
        trace_distance,
        eaqec,
    })
}
