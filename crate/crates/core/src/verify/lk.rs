//! The interval-index rowvacuation formula against the toggle definition.

use crate::dynamics::rowvacuation;
use crate::error::Result;
use crate::lalanne_kreweras::lalanne_kreweras as formula;
use crate::roots::{CartanType, RootPoset};

use super::{check_each, timed, VerificationReport};

pub fn lalanne_kreweras(n: usize) -> Result<VerificationReport> {
    timed(|| {
        let rp = RootPoset::type_a(n)?;
        let antichains = rp.poset().antichains();
        let mut report = VerificationReport::new("lalanne-kreweras", CartanType::A(n));
        report.checked_count = antichains.len() as u64;
        check_each(&rp, &antichains, &mut report, |c| {
            match formula(&rp, c.input) {
                Ok(b) => c.same("formula", &rowvacuation(rp.poset(), c.input), &b),
                Err(e) => c.fail("formula", &e),
            }
        });
        Ok(report)
    })
}
