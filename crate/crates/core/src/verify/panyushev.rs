//! `#A + #Rvac(A) = r` together with the other duality properties of rowvacuation.

use crate::dynamics::rowvacuation;
use crate::error::Result;
use crate::poset::Antichain;
use crate::roots::{CartanType, RootPoset, TypeCFolding};

use super::{
    check_each, maximal_parabolics, rvac_on, timed, with_element, without_element,
    VerificationReport,
};

pub fn panyushev(t: CartanType) -> Result<VerificationReport> {
    timed(|| {
        let rp = RootPoset::new(t)?;
        let p = rp.poset();
        let r = rp.rank();
        let parabolics = maximal_parabolics(p)?;
        let antichains = p.antichains();
        let mut report = VerificationReport::new("panyushev", t);
        report.checked_count = antichains.len() as u64;
        let long_simple = (1..=r).filter(|&i| rp.is_long(rp.simple(i))).count();
        let laced = (0..rp.len()).all(|x| rp.is_long(x));

        check_each(&rp, &antichains, &mut report, |c| {
            let a = c.input;
            let b = rowvacuation(p, a);
            c.check(
                "cardinality",
                a.len() + b.len() == r,
                || r,
                || a.len() + b.len(),
            );
            if !laced {
                let long = a.iter().chain(b.iter()).filter(|&x| rp.is_long(x)).count();
                c.check("long-short", long == long_simple, || long_simple, || long);
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
        });

        let top = p.num_ranks();
        for i in 0..=top {
            let level = |j: usize| {
                if j == top {
                    Antichain::empty(rp.len())
                } else {
                    Antichain::rank_level(p, j)
                }
            };
            let source = level(i);
            let mut c = super::Checker::new(&rp, &source);
            c.same("rank-reversal", &level(top - i), &rowvacuation(p, &source));
            report.failures.extend(c.failures);
            report.tally("rank-reversal", 1);
        }

        if matches!(t.family(), 'B' | 'C') {
            type_a_distribution(t.rank(), &mut report)?;
        }
        Ok(report)
    })
}

/// For η-symmetric `B` in `Φ⁺(A_{2n-1})`, exactly one of `B` and `Rvac(B)`
/// meets `𝓛`, and exactly one meets `𝓢`.
fn type_a_distribution(n: usize, report: &mut VerificationReport) -> Result<()> {
    let fold = TypeCFolding::new(n)?;
    let ap = &fold.a;
    let l = ap.subset_l().unwrap_or_default();
    let s = ap.subset_s().unwrap_or_default();
    let symmetric: Result<Vec<Antichain>> = fold
        .c
        .poset()
        .antichains()
        .iter()
        .map(|a| fold.iota_antichain(a))
        .collect();
    check_each(ap, &symmetric?, report, |c| {
        let b = c.input;
        let image = rowvacuation(ap.poset(), b);
        for (name, subset) in [("distribution-long", l), ("distribution-short", s)] {
            let hits = usize::from(ap.contains_any(b, subset))
                + usize::from(ap.contains_any(&image, subset));
            c.check(name, hits == 1, || 1, || hits);
        }
    });
    Ok(())
}

/// The lexicographically first antichain with `#A + #Rvac(A) ≠ r`, if any.
pub fn find_counterexample(t: CartanType) -> Result<Option<Antichain>> {
    let rp = RootPoset::new(t)?;
    let p = rp.poset();
    let key = |a: &Antichain| {
        let mut coeffs: Vec<&[i32]> = a.iter().map(|x| rp.root(x).coeffs.as_slice()).collect();
        coeffs.sort();
        coeffs.into_iter().map(<[i32]>::to_vec).collect::<Vec<_>>()
    };
    let mut best: Option<(Vec<Vec<i32>>, Antichain)> = None;
    p.for_each_antichain(|a| {
        if a.len() + rowvacuation(p, a).len() != rp.rank() {
            let k = key(a);
            if best.as_ref().is_none_or(|(b, _)| k < *b) {
                best = Some((k, a.clone()));
            }
        }
    });
    Ok(best.map(|(_, a)| a))
}
