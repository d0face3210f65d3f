//! Properties of rowmotion and rowvacuation that hold on every ranked poset.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dynamics::{
    row_inv_rvac, rowmotion, rowmotion_inverse, rowmotion_via_toggles, rowvacuation, support,
};
use crate::error::Result;
use crate::poset::{Antichain, RankedPoset};
use crate::roots::{CartanType, RootPoset};

use super::{
    check_each, maximal_parabolics, rvac_on, timed, with_element, without_element, Checker,
    VerificationReport,
};

/// Structural checks on the root poset of `t`, with `extensions` linear extensions.
pub fn structural(t: CartanType, extensions: usize, seed: u64) -> Result<VerificationReport> {
    let rp = RootPoset::new(t)?;
    structural_poset(&rp, extensions, seed)
}

/// Runs the checks on the poset of `rp`; only the report labels come from the root system.
pub fn structural_poset(
    rp: &RootPoset,
    extensions: usize,
    seed: u64,
) -> Result<VerificationReport> {
    timed(|| {
        let p = rp.poset();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut orders = vec![p.rank_linear_extension()];
        while orders.len() < extensions.max(1) {
            orders.push(p.random_linear_extension(&mut rng));
        }
        let parabolics = maximal_parabolics(p)?;
        let antichains = p.antichains();
        let mut report = VerificationReport::new("structural", rp.cartan_type());
        report.checked_count = antichains.len() as u64;

        check_each(rp, &antichains, &mut report, |c| {
            let a = c.input;
            let b = rowvacuation(p, a);
            c.same("rvac-involution", a, &rowvacuation(p, &b));
            c.same(
                "rvac-row",
                &rowmotion_inverse(p, &b),
                &rowvacuation(p, &rowmotion(p, a)),
            );
            c.same("row-inverse", a, &rowmotion_inverse(p, &rowmotion(p, a)));
            let row = rowmotion(p, a);
            for order in &orders {
                match rowmotion_via_toggles(p, a, order) {
                    Ok(x) => c.same("row-toggles", &row, &x),
                    Err(e) => c.fail("row-toggles", &e),
                }
            }
            for &(alpha, ref sub) in &parabolics {
                if a.contains(alpha) {
                    if let Some(expected) = rvac_on(sub, &without_element(a, alpha)) {
                        c.same("parabolic-remove", &expected, &b);
                    }
                } else if let Some(inner) = rvac_on(sub, a) {
                    c.same("parabolic-add", &with_element(&inner, alpha), &b);
                }
            }
            support_checks(p, a, c);
        });

        let top = p.num_ranks();
        let level = |j: usize| {
            if j == top {
                Antichain::empty(p.size())
            } else {
                Antichain::rank_level(p, j)
            }
        };
        for i in 0..=top {
            let mut c = Checker::new(rp, &antichains[0]);
            c.same(
                "rank-reversal",
                &level(top - i),
                &rowvacuation(p, &level(i)),
            );
            report.failures.extend(c.failures);
        }
        report.tally("rank-reversal", top as u64 + 1);
        report.tally("linear-extensions", orders.len() as u64);
        Ok(report)
    })
}

/// `row⁻¹·Rvac` keeps the support and can be computed on `P_{supp(A)}`.
fn support_checks(p: &RankedPoset, a: &Antichain, c: &mut Checker) {
    let image = row_inv_rvac(p, a);
    let supp = support(p, a);
    let image_supp = support(p, &image);
    c.check(
        "support-kept",
        supp == image_supp,
        || format!("{supp:?}"),
        || format!("{image_supp:?}"),
    );
    match p.restrict_to_support(&supp) {
        Ok(sub) => match sub.project(a) {
            Some(local) => c.same(
                "support-local",
                &sub.lift(&row_inv_rvac(&sub.poset, &local)),
                &image,
            ),
            None => c.check("support-local", false, || "inside P_supp", || "outside"),
        },
        Err(e) => c.fail("support-local", &e),
    }
}
