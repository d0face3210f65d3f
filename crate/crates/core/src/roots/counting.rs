//! Degrees, Catalan and Narayana numbers read off a root poset.

use crate::error::{Error, Result};
use crate::poset::RankedPoset;

use super::RootPoset;

/// Degrees `d_1 ≤ … ≤ d_r` of the Weyl group, from the sizes of the ranks.
///
/// The exponent `k` occurs with multiplicity `a_k - a_{k+1}`, where `a_k` is
/// the number of roots of height `k` (the partition of heights is conjugate to
/// the partition of exponents).
pub fn degrees(rp: &RootPoset) -> Result<Vec<usize>> {
    let p = rp.poset();
    let h = rp.coxeter_number();
    let count = |height: usize| p.level(height - 1).len();
    let mut out = Vec::with_capacity(rp.rank());
    for k in 1..h {
        let (here, next) = (count(k), count(k + 1));
        if next > here {
            return Err(Error::Invariant(format!(
                "{}: rank sizes increase from height {k} to {}",
                rp.cartan_type(),
                k + 1
            )));
        }
        out.extend(std::iter::repeat_n(k + 1, here - next));
    }
    let exponent_sum: usize = out.iter().map(|d| d - 1).sum();
    if out.len() != rp.rank() || exponent_sum != rp.len() || out.last() != Some(&h) {
        return Err(Error::Invariant(format!(
            "{}: degrees {out:?} inconsistent with r = {}, #roots = {}, h = {h}",
            rp.cartan_type(),
            rp.rank(),
            rp.len()
        )));
    }
    Ok(out)
}

/// `∏ (d_i + h) / d_i`, in exact integer arithmetic.
pub fn catalan(rp: &RootPoset) -> Result<u128> {
    let h = rp.coxeter_number() as u128;
    let (mut num, mut den) = (1u128, 1u128);
    for d in degrees(rp)? {
        num *= d as u128 + h;
        den *= d as u128;
    }
    if num % den != 0 {
        return Err(Error::Invariant(format!(
            "{}: Catalan product {num}/{den} is not an integer",
            rp.cartan_type()
        )));
    }
    Ok(num / den)
}

/// Number of antichains of each cardinality, for any finite poset.
pub fn narayana_by_enumeration(poset: &RankedPoset) -> Vec<u64> {
    let mut out = vec![0u64; 1];
    poset.for_each_antichain(|a| {
        let k = a.len();
        if k >= out.len() {
            out.resize(k + 1, 0);
        }
        out[k] += 1;
    });
    out
}

/// `Nar(W, k)` for `k = 0..=r`, counted by enumerating antichains.
pub fn narayana(rp: &RootPoset) -> Result<Vec<u64>> {
    let mut nar = narayana_by_enumeration(rp.poset());
    if nar.len() > rp.rank() + 1 {
        return Err(Error::Invariant(format!(
            "{}: found an antichain larger than the rank",
            rp.cartan_type()
        )));
    }
    nar.resize(rp.rank() + 1, 0);
    Ok(nar)
}

/// Catalan number of a product of irreducible systems.
pub fn reducible_catalan(parts: &[u128]) -> u128 {
    parts.iter().product()
}

/// Narayana vector of a product of irreducible systems (a convolution).
pub fn reducible_narayana(parts: &[Vec<u64>]) -> Vec<u64> {
    parts.iter().fold(vec![1], |acc, part| {
        let mut out = vec![0; acc.len() + part.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in part.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        out
    })
}
