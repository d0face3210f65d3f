//! Order of rowmotion, `row^h = -w₀`, and the orbit-average homomesy.

use num_rational::Ratio;

use crate::dynamics::{all_orbits, ratio_string, rowmotion as row, Operator};
use crate::error::Result;
use crate::roots::{CartanType, RootPoset};

use super::{check_each, timed, Checker, VerificationReport};

pub fn rowmotion(t: CartanType) -> Result<VerificationReport> {
    timed(|| {
        let rp = RootPoset::new(t)?;
        let p = rp.poset();
        let h = rp.coxeter_number();
        let antichains = p.antichains();
        let mut report = VerificationReport::new("rowmotion", t);
        report.checked_count = antichains.len() as u64;

        check_each(&rp, &antichains, &mut report, |c| {
            let a = c.input;
            let mut b = a.clone();
            for _ in 0..h {
                b = row(p, &b);
            }
            c.same("row^h=-w0", &rp.neg_w0_antichain(a), &b);
            for _ in 0..h {
                b = row(p, &b);
            }
            c.same("row^2h=id", a, &b);
        });

        let half = Ratio::new(rp.rank() as u64, 2);
        let orbits = all_orbits(p, Operator::Rowmotion)?;
        report.tally("orbits", orbits.len() as u64);
        for o in &orbits {
            let mut c = Checker::new(&rp, &o.orbit[0]);
            c.check(
                "orbit-average",
                o.average_cardinality == half,
                || ratio_string(&half),
                || ratio_string(&o.average_cardinality),
            );
            c.check(
                "orbit-size",
                (2 * h) % o.len() == 0,
                || format!("divisor of {}", 2 * h),
                || o.len(),
            );
            report.failures.extend(c.failures);
        }
        report.tally("orbit-average", orbits.len() as u64);
        Ok(report)
    })
}
