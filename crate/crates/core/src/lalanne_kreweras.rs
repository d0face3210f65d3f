//! Closed-form rowvacuation on type-A root posets.

use crate::error::{Error, Result};
use crate::poset::Antichain;
use crate::roots::RootPoset;

/// Rowvacuation of a type-A antichain by the interval-index formula.
///
/// For `A = {[i_1,j_1], …, [i_k,j_k]}` with increasing left endpoints, the
/// image pairs up, in increasing order, the left endpoints
/// `[n-1] ∖ {j_l - 1}` with the right endpoints `{2..n} ∖ {i_l + 1}`.
pub fn lalanne_kreweras(rp: &RootPoset, a: &Antichain) -> Result<Antichain> {
    let n = rp.ground_size()?;
    if a.poset_size() != rp.len() {
        return Err(Error::Argument(
            "antichain does not belong to this root poset".into(),
        ));
    }
    let mut lefts = vec![true; n + 1];
    let mut rights = vec![true; n + 1];
    for x in a.iter() {
        let (i, j) = rp.interval(x)?;
        lefts[j - 1] = false;
        rights[i + 1] = false;
    }
    let new_lefts = (1..n).filter(|&i| lefts[i]);
    let new_rights = (2..=n).filter(|&j| rights[j]);
    let intervals: Vec<(usize, usize)> = new_lefts.zip(new_rights).collect();
    rp.antichain_of_intervals(&intervals)
}
