//! The three-way case analysis proving `#A + #Rvac(A) = n` in type D.

use crate::ast::hat;
use crate::dynamics::rowvacuation;
use crate::error::{Error, Result};
use crate::poset::Antichain;
use crate::roots::{CartanType, TypeDFolding};

use super::{check_each, rvac_on, timed, without_element, VerificationReport};

pub fn type_d_cases(n: usize) -> Result<VerificationReport> {
    timed(|| {
        if n < 4 {
            return Err(Error::Argument(format!(
                "type D needs rank at least 4, got {n}"
            )));
        }
        let fold = TypeDFolding::new(n)?;
        let d = &fold.d;
        let (c_poset, a_poset) = (fold.c(), &fold.unfold.a);
        let pd = d.poset();
        let antichains = pd.antichains();
        let mut report = VerificationReport::new("type-d-cases", CartanType::D(n));
        report.checked_count = antichains.len() as u64;
        let s_c = c_poset.subset_s().unwrap_or_default();
        let l_a = a_poset.subset_l().unwrap_or_default();
        let l_d = d.subset_l().unwrap_or_default();
        let (alpha_a, alpha_b) = (d.simple(n - 1), d.simple(n));
        let minimal = pd.minimal().to_vec();
        let parabolic = |drop: usize| {
            let keep: Vec<usize> = minimal.iter().copied().filter(|&p| p != drop).collect();
            pd.restrict_to_support(&keep)
        };
        let (without_a, without_b) = (parabolic(alpha_a)?, parabolic(alpha_b)?);

        check_each(d, &antichains, &mut report, |c| {
            let a = c.input;
            let b = rowvacuation(pd, a);
            c.check(
                "cardinality",
                a.len() + b.len() == n,
                || n,
                || a.len() + b.len(),
            );
            let symmetric = d.delta_antichain(a).ok().as_ref() == Some(a);
            if symmetric {
                c.check("case-symmetric", true, || "", || "");
                let (Ok(ga), Ok(gb)) = (fold.gamma_antichain(a), fold.gamma_antichain(&b)) else {
                    return c.check("gamma", false, || "antichains", || "not an antichain");
                };
                c.same(
                    "rvac-commutes-with-gamma",
                    &gb,
                    &rowvacuation(c_poset.poset(), &ga),
                );
                let eps = |x: &Antichain| usize::from(c_poset.contains_any(x, s_c));
                for (orig, image) in [(a, &ga), (&b, &gb)] {
                    let lifted = fold.preimage_set(image.iter()).len();
                    c.check(
                        "preimage-size",
                        lifted == image.len() + eps(image),
                        || image.len() + eps(image),
                        || lifted,
                    );
                    c.check(
                        "preimage-is-source",
                        lifted == orig.len(),
                        || orig.len(),
                        || lifted,
                    );
                }
                c.check(
                    "epsilon-sum",
                    eps(&ga) + eps(&gb) == 1,
                    || 1,
                    || eps(&ga) + eps(&gb),
                );
            } else if !a.contains(alpha_a) && !a.contains(alpha_b) {
                c.check("case-asymmetric", true, || "", || "");
                let (Ok(ha), Ok(hb)) = (hat(&fold, a), hat(&fold, &b)) else {
                    return c.check("hat", false, || "defined", || "undefined");
                };
                let (ha, hb) = (ha.result, hb.result);
                c.same("hat-rvac", &hb, &rowvacuation(a_poset.poset(), &ha));
                for (orig, h) in [(a, &ha), (&b, &hb)] {
                    let eps = usize::from(a_poset.contains_any(h, l_a));
                    c.check(
                        "hat-size",
                        h.len() + 2 == 2 * orig.len() + eps,
                        || 2 * orig.len() + eps - 2,
                        || h.len(),
                    );
                    c.check(
                        "hat-meets-l",
                        (eps == 1) != d.contains_any(orig, l_d),
                        || "",
                        || "",
                    );
                }
                let total = ha.len() + hb.len();
                c.check(
                    "hat-total",
                    total + 3 == 2 * (a.len() + b.len()),
                    || 2 * n - 3,
                    || total,
                );
            } else {
                c.check("case-simple-end", true, || "", || "");
                let (alpha, sub) = if a.contains(alpha_b) {
                    (alpha_b, &without_b)
                } else {
                    (alpha_a, &without_a)
                };
                match rvac_on(sub, &without_element(a, alpha)) {
                    Some(expected) => c.same("parabolic-rvac", &expected, &b),
                    None => c.check(
                        "parabolic-rvac",
                        false,
                        || "inside the parabolic",
                        || "outside",
                    ),
                }
            }
        });
        Ok(report)
    })
}
