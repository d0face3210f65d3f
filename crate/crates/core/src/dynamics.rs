//! Antichain toggles, rowmotion and rowvacuation on a ranked poset.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use num_rational::Ratio;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::poset::{Antichain, RankedPoset};

fn check_antichain(poset: &RankedPoset, a: &Antichain) -> Result<()> {
    if a.poset_size() != poset.size() {
        return Err(Error::Argument(format!(
            "antichain belongs to a poset of size {}, expected {}",
            a.poset_size(),
            poset.size()
        )));
    }
    Ok(())
}

#[inline]
fn toggle_unchecked(poset: &RankedPoset, p: usize, a: &mut Antichain) {
    let bits = a.bits_mut();
    if bits.contains(p) {
        bits.set(p, false);
    } else if bits.is_disjoint(poset.comparable_set(p)) {
        bits.insert(p);
    }
}

/// The toggle `τ_p`: remove `p` if present, add it if the result is still an antichain.
pub fn toggle(poset: &RankedPoset, p: usize, a: &Antichain) -> Result<Antichain> {
    poset.check_element(p)?;
    check_antichain(poset, a)?;
    let mut out = a.clone();
    toggle_unchecked(poset, p, &mut out);
    Ok(out)
}

fn rank_toggle_in_place(poset: &RankedPoset, i: usize, a: &mut Antichain) {
    for &p in poset.level(i) {
        toggle_unchecked(poset, p, a);
    }
}

/// Toggles every element of rank `i`, in increasing index order.
pub fn rank_toggle(poset: &RankedPoset, i: usize, a: &Antichain) -> Result<Antichain> {
    check_antichain(poset, a)?;
    if i >= poset.num_ranks() {
        return Err(Error::Argument(format!(
            "rank {i} out of range, poset has {} ranks",
            poset.num_ranks()
        )));
    }
    let mut out = a.clone();
    rank_toggle_in_place(poset, i, &mut out);
    Ok(out)
}

/// The order ideal generated by `a`.
fn ideal(poset: &RankedPoset, a: &Antichain) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(poset.size());
    for y in a.iter() {
        bits.union_with(poset.down_set(y));
    }
    bits
}

fn filter(poset: &RankedPoset, a: &Antichain) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(poset.size());
    for y in a.iter() {
        bits.union_with(poset.up_set(y));
    }
    bits
}

/// Minimal elements of the complement of the order ideal generated by `a`.
pub fn rowmotion(poset: &RankedPoset, a: &Antichain) -> Antichain {
    let below = ideal(poset, a);
    let mut out = FixedBitSet::with_capacity(poset.size());
    for x in 0..poset.size() {
        if !below.contains(x) && poset.lower_covers(x).iter().all(|&y| below.contains(y)) {
            out.insert(x);
        }
    }
    Antichain::from_bits(out)
}

/// Maximal elements of the complement of the order filter generated by `a`.
pub fn rowmotion_inverse(poset: &RankedPoset, a: &Antichain) -> Antichain {
    let above = filter(poset, a);
    let mut out = FixedBitSet::with_capacity(poset.size());
    for x in 0..poset.size() {
        if !above.contains(x) && poset.upper_covers(x).iter().all(|&y| above.contains(y)) {
            out.insert(x);
        }
    }
    Antichain::from_bits(out)
}

/// Rowmotion as the toggle product `τ_{p_n} ⋯ τ_{p_1}` along a linear extension.
pub fn rowmotion_via_toggles(
    poset: &RankedPoset,
    a: &Antichain,
    extension: &[usize],
) -> Result<Antichain> {
    check_antichain(poset, a)?;
    if !poset.is_linear_extension(extension) {
        return Err(Error::Argument(
            "toggle order is not a linear extension of the poset".into(),
        ));
    }
    let mut out = a.clone();
    for &p in extension {
        toggle_unchecked(poset, p, &mut out);
    }
    Ok(out)
}

/// Rowvacuation: `τ_rk (τ_rk τ_{rk-1}) ⋯ (τ_rk ⋯ τ_0)`, rightmost factor first.
pub fn rowvacuation(poset: &RankedPoset, a: &Antichain) -> Antichain {
    let top = poset.num_ranks();
    let mut out = a.clone();
    for start in 0..top {
        for i in start..top {
            rank_toggle_in_place(poset, i, &mut out);
        }
    }
    out
}

/// `row⁻¹ · Rvac`.
pub fn row_inv_rvac(poset: &RankedPoset, a: &Antichain) -> Antichain {
    rowmotion_inverse(poset, &rowvacuation(poset, a))
}

/// `row · Rvac`.
pub fn row_rvac(poset: &RankedPoset, a: &Antichain) -> Antichain {
    rowmotion(poset, &rowvacuation(poset, a))
}

/// Minimal elements lying weakly below some member of `a`.
pub fn support(poset: &RankedPoset, a: &Antichain) -> Vec<usize> {
    let below = ideal(poset, a);
    poset
        .minimal()
        .iter()
        .copied()
        .filter(|&p| below.contains(p))
        .collect()
}

/// The antichain operators that have orbit reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    Rowmotion,
    Rowvacuation,
    RowInverseRvac,
}

impl Operator {
    pub fn name(self) -> &'static str {
        match self {
            Operator::Rowmotion => "row",
            Operator::Rowvacuation => "rvac",
            Operator::RowInverseRvac => "row-inv-rvac",
        }
    }

    pub fn apply(self, poset: &RankedPoset, a: &Antichain) -> Antichain {
        match self {
            Operator::Rowmotion => rowmotion(poset, a),
            Operator::Rowvacuation => rowvacuation(poset, a),
            Operator::RowInverseRvac => row_inv_rvac(poset, a),
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "row" | "rowmotion" => Ok(Operator::Rowmotion),
            "rvac" | "rowvacuation" => Ok(Operator::Rowvacuation),
            "row-inv-rvac" => Ok(Operator::RowInverseRvac),
            _ => Err(Error::parse(s, "unknown operator")),
        }
    }
}

/// A forward orbit of an antichain operator with its exact average cardinality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub orbit: Vec<Antichain>,
    pub operator_name: String,
    pub average_cardinality: Ratio<u64>,
}

impl OrbitReport {
    pub fn len(&self) -> usize {
        self.orbit.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbit.is_empty()
    }
}

impl Serialize for OrbitReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let orbit: Vec<Vec<usize>> = self.orbit.iter().map(Antichain::to_vec).collect();
        let mut s = serializer.serialize_struct("OrbitReport", 3)?;
        s.serialize_field("orbit", &orbit)?;
        s.serialize_field("operator_name", &self.operator_name)?;
        s.serialize_field(
            "average_cardinality",
            &ratio_string(&self.average_cardinality),
        )?;
        s.end()
    }
}

/// Formats an exact rational as `p/q`, keeping the denominator even when it is 1.
pub fn ratio_string(r: &Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Iterates `op` from `a` until it returns to `a`.
pub fn orbit(poset: &RankedPoset, a: &Antichain, op: Operator) -> Result<OrbitReport> {
    check_antichain(poset, a)?;
    let mut orbit = vec![a.clone()];
    let mut seen: HashSet<Antichain> = HashSet::from([a.clone()]);
    loop {
        let next = op.apply(poset, orbit.last().unwrap());
        if next == *a {
            break;
        }
        if !seen.insert(next.clone()) {
            return Err(Error::Invariant(format!(
                "{op} is not a bijection: orbit of {a:?} enters a cycle avoiding it"
            )));
        }
        orbit.push(next);
    }
    let total: u64 = orbit.iter().map(|b| b.len() as u64).sum();
    Ok(OrbitReport {
        average_cardinality: Ratio::new(total, orbit.len() as u64),
        operator_name: op.name().to_string(),
        orbit,
    })
}

/// Partitions all antichains into orbits of `op`, ordered by their least element.
pub fn all_orbits(poset: &RankedPoset, op: Operator) -> Result<Vec<OrbitReport>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in poset.antichains() {
        if seen.contains(&a) {
            continue;
        }
        let report = orbit(poset, &a, op)?;
        seen.extend(report.orbit.iter().cloned());
        out.push(report);
    }
    Ok(out)
}
