//! The hat construction and the partial diagram description of Θ in type D.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::Antichain;
use crate::roots::{CartanType, TypeDFolding};
use crate::weyl::{WeylElement, WeylGroup};

use super::diagram::{Label, MatchingDiagram};
use super::type_a::phi_diagram_a;

/// The antichain `Â` of `Φ⁺(A_{2n-3})` built from a δ-asymmetric antichain of `Φ⁺(D_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatImage {
    pub source: Antichain,
    /// `ι(γ(A))`, sorted by index in `Φ⁺(A_{2n-3})`.
    pub unfolded: Vec<usize>,
    /// `ι(γ(A)) ∩ 𝒬` as intervals in lexicographic order.
    pub q_intersection: Vec<(usize, usize)>,
    pub result: Antichain,
}

/// `𝒬 = {[i, j] : i ≤ n-1, j ≥ n}`, the elements above the middle simple root.
fn in_q(n: usize, (i, j): (usize, usize)) -> bool {
    i < n && j >= n
}

/// `Â`: replace `ι(γ(A)) ∩ 𝒬 = {[i_1,j_1], …, [i_k,j_k]}` by
/// `[i_1,j_2], …, [i_{k-1},j_k]`.
pub fn hat(fold: &TypeDFolding, a: &Antichain) -> Result<HatImage> {
    let d = &fold.d;
    if a.poset_size() != d.len() {
        return Err(Error::Argument(
            "antichain does not belong to this root poset".into(),
        ));
    }
    if d.delta_antichain(a)? == *a {
        return Err(Error::Precondition(
            "the hat construction needs an antichain not fixed by delta".into(),
        ));
    }
    let n = d.rank();
    let ap = &fold.unfold.a;
    let unfolded = fold.unfold.iota(fold.gamma_set(a.iter()));
    let mut q_intersection = Vec::new();
    let mut kept = Vec::new();
    for &y in &unfolded {
        let iv = ap.interval(y)?;
        if in_q(n, iv) {
            q_intersection.push(iv);
        } else {
            kept.push(y);
        }
    }
    q_intersection.sort_unstable();
    if q_intersection.is_empty() {
        return Err(Error::Invariant(format!(
            "{a:?} unfolds to nothing above the middle root"
        )));
    }
    for w in q_intersection.windows(2) {
        kept.push(ap.index_of_interval(w[0].0, w[1].1)?);
    }
    let result = ap
        .antichain(kept)
        .map_err(|e| Error::Invariant(format!("hat of {a:?} is not an antichain: {e}")))?;
    Ok(HatImage {
        source: a.clone(),
        unfolded,
        q_intersection,
        result,
    })
}

/// `H` is the half of the circle on the side of `M⊥` containing the midpoint
/// of positions `a` and `b`; the test is done in doubled coordinates.
fn in_h(v: usize, a: usize, b: usize, k: usize) -> bool {
    let (x, c) = (2 * k, a + b);
    let d = (x + 2 * v - c) % (2 * v);
    d.min(2 * v - d) < v / 2
}

/// The two transverse chords of a φ-diagram closest to the centre.
///
/// A chord is transverse when it joins `H` to its complement; distance to the
/// centre decreases as the shorter arc between the endpoints grows.
pub fn transverse_removal(phi: &MatchingDiagram) -> Result<[(usize, usize); 2]> {
    let v = phi.len();
    let find = |sup| {
        phi.position_of(Label::new(2, sup))
            .ok_or_else(|| Error::Argument(format!("diagram has no vertex 2^({sup})")))
    };
    let (a, b) = (find(0)?, find(1)?);
    let mut transverse: Vec<(usize, usize)> = phi
        .chords()
        .iter()
        .copied()
        .filter(|&(x, y)| in_h(v, a, b, x) != in_h(v, a, b, y))
        .collect();
    if transverse.len() < 2 {
        return Err(Error::Invariant(format!(
            "only {} transverse chords in {phi}",
            transverse.len()
        )));
    }
    transverse.sort_by_key(|&(x, y)| (Reverse((y - x).min(v - (y - x))), (x, y)));
    Ok([transverse[0], transverse[1]])
}

/// Labels `q_1^(0), q_1^(1), q_2^(0), …` read clockwise from position 0.
fn q_labels(n: usize) -> Result<Vec<Label>> {
    let group = WeylGroup::new(CartanType::D(n))?;
    Ok(group
        .q_sequence()?
        .into_iter()
        .flat_map(|q| [Label::new(q, 0), Label::new(q, 1)])
        .collect())
}

/// `φ_{D_n}(A)`: the φ-diagram of `Â` without its two central transverse
/// chords, relabelled clockwise from `2^(0)` by the q-sequence.
pub fn xi_and_phi_d(fold: &TypeDFolding, a: &Antichain) -> Result<MatchingDiagram> {
    let image = hat(fold, a)?;
    let phi = phi_diagram_a(&fold.unfold.a, &image.result)?;
    let removed = transverse_removal(&phi)?;
    let start = phi
        .position_of(Label::new(2, 0))
        .ok_or_else(|| Error::Invariant("φ-diagram lost its vertex 2^(0)".into()))?;
    let xi = phi.without_chords(&removed);
    let v = xi.len();
    let xi = xi.map_chords(|k| (k + v - start) % v)?;
    xi.relabeled(q_labels(fold.d.rank())?)
}

/// What the type-D diagram determines about `Θ(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialTheta {
    pub n: usize,
    /// `i ↦ j` for each chord `i^(1)`–`j^(0)`.
    pub map: BTreeMap<i32, i32>,
    /// `Θ(A)({n, -n}) = {x, -x}`.
    pub x: i32,
    /// `Θ(A)({y, -y}) = {n, -n}`.
    pub y: i32,
}

impl PartialTheta {
    pub fn is_consistent_with(&self, w: &WeylElement) -> bool {
        let n = self.n as i32;
        self.map.iter().all(|(&i, &j)| w.apply(i) == j)
            && w.apply(n).abs() == self.x
            && w.apply(self.y).abs() == n
    }
}

/// Partial values of `Θ(A)` for δ-asymmetric `A`, read off `φ_{D_n}(A)`.
pub fn theta_d_partial(fold: &TypeDFolding, a: &Antichain) -> Result<PartialTheta> {
    let phi = xi_and_phi_d(fold, a)?;
    let mut map = BTreeMap::new();
    for (from, to) in phi.chord_labels() {
        if from.sup != 1 || to.sup != 0 {
            return Err(Error::Invariant(format!(
                "chord {from}-{to} does not join (1) to (0)"
            )));
        }
        map.insert(from.value, to.value);
    }
    let free: Vec<Label> = phi.unmatched().iter().map(|&k| phi.vertices()[k]).collect();
    let values = |sup: u8| -> Vec<i32> {
        free.iter()
            .filter(|l| l.sup == sup)
            .map(|l| l.value)
            .collect()
    };
    let (zeros, ones) = (values(0), values(1));
    let paired = |v: &[i32]| v.len() == 2 && v[0] == -v[1];
    if !(paired(&zeros) && paired(&ones)) {
        return Err(Error::Invariant(format!(
            "unexpected free vertices {free:?} in {phi}"
        )));
    }
    Ok(PartialTheta {
        n: fold.d.rank(),
        map,
        x: zeros[0].abs(),
        y: ones[0].abs(),
    })
}
