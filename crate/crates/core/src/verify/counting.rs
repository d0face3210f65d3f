//! Antichain counts against the product formula and NC rank sizes.

use crate::error::{Error, Result};
use crate::roots::{catalan, narayana, CartanType, RootPoset};
use crate::weyl::{NoncrossingLattice, DEFAULT_CAPACITY};

use super::{timed, Checker, VerificationReport};

pub fn counting(t: CartanType) -> Result<VerificationReport> {
    timed(|| {
        let rp = RootPoset::new(t)?;
        let mut report = VerificationReport::new("counting", t);
        let count = rp.poset().count_antichains();
        report.checked_count = count as u64;
        let cat = catalan(&rp)?;
        let nar = narayana(&rp)?;
        let empty = crate::poset::Antichain::empty(rp.len());
        let mut c = Checker::new(&rp, &empty);
        c.check("catalan", count as u128 == cat, || cat, || count);
        let total: u64 = nar.iter().sum();
        c.check("narayana-total", total as u128 == cat, || cat, || total);
        let reversed: Vec<u64> = nar.iter().rev().copied().collect();
        c.check(
            "narayana-symmetry",
            reversed == nar,
            || format!("{reversed:?}"),
            || format!("{nar:?}"),
        );
        c.check(
            "narayana-ends",
            nar[0] == 1 && nar[rp.rank()] == 1,
            || "1 at both ends",
            || format!("{nar:?}"),
        );
        if t.is_classical() {
            match NoncrossingLattice::with_capacity(t, DEFAULT_CAPACITY) {
                Ok(nc) => {
                    let ranks = nc.rank_counts();
                    c.check(
                        "nc-ranks",
                        ranks == nar,
                        || format!("{nar:?}"),
                        || format!("{ranks:?}"),
                    );
                }
                Err(Error::Capacity { .. }) => {}
                Err(e) => c.fail("nc-ranks", &e),
            }
        }
        for (k, v) in &c.counts {
            report.counts.insert((*k).into(), *v);
        }
        report.failures = c.failures;
        Ok(report)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_types_agree() {
        for t in [
            CartanType::A(4),
            CartanType::D(4),
            CartanType::B(3),
            CartanType::F4,
        ] {
            let report = counting(t).unwrap();
            assert!(report.passed(), "{t}: {:?}", report.failures);
        }
        assert!(counting(CartanType::D(4))
            .unwrap()
            .counts
            .contains_key("nc-ranks"));
    }
}
