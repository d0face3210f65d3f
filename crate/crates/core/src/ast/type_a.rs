//! The matching-diagram description of Θ in type A.

use crate::error::{Error, Result};
use crate::poset::Antichain;
use crate::roots::RootPoset;
use crate::weyl::{GroupKind, WeylElement, WeylGroup};

use super::diagram::{Label, MatchingDiagram};

/// The ψ-diagram of an antichain of `Φ⁺(A_{n-1})`.
///
/// Vertices `1^(0), …, n^(0), n^(1), …, 1^(1)` sit clockwise at positions
/// `0..2n`. Each `[i, j] ∈ A` marks `j^(0)` with `i`; every other `i` marks
/// `i^(1)`. Then for `i = 1..n` the vertex marked `i` is joined to the nearest
/// free unmarked vertex, searching counterclockwise from a `(0)` vertex and
/// clockwise from a `(1)` vertex.
pub fn psi_diagram(rp: &RootPoset, a: &Antichain) -> Result<MatchingDiagram> {
    let n = rp.ground_size()?;
    if a.poset_size() != rp.len() {
        return Err(Error::Argument(
            "antichain does not belong to this root poset".into(),
        ));
    }
    let v = 2 * n;
    let vertices: Vec<Label> = (1..=n as i32)
        .map(|i| Label::new(i, 0))
        .chain((1..=n as i32).rev().map(|i| Label::new(i, 1)))
        .collect();
    let mut markings: Vec<Option<i32>> = vec![None; v];
    let mut marked_at = vec![usize::MAX; n + 1];
    for x in a.iter() {
        let (i, j) = rp.interval(x)?;
        markings[j - 1] = Some(i as i32);
        marked_at[i] = j - 1;
    }
    for i in 1..=n {
        if marked_at[i] == usize::MAX {
            markings[v - i] = Some(i as i32);
            marked_at[i] = v - i;
        }
    }
    let mut used = vec![false; v];
    let mut chords = Vec::with_capacity(n);
    for &from in &marked_at[1..] {
        let step = if vertices[from].sup == 0 { v - 1 } else { 1 };
        let mut to = (from + step) % v;
        while markings[to].is_some() || used[to] {
            to = (to + step) % v;
            if to == from {
                return Err(Error::Invariant("no free vertex left for a marking".into()));
            }
        }
        used[from] = true;
        used[to] = true;
        chords.push((from, to));
    }
    Ok(MatchingDiagram::new(vertices, chords)?.with_markings(markings))
}

/// Labels `p_1^(0), p_1^(1), p_2^(0), …` read clockwise from position 0.
fn p_labels(n: usize) -> Result<Vec<Label>> {
    let group = WeylGroup::new(crate::roots::CartanType::A(n - 1))?;
    Ok(group
        .p_sequence()?
        .into_iter()
        .flat_map(|p| [Label::new(p, 0), Label::new(p, 1)])
        .collect())
}

/// The ψ-diagram relabelled along the cycle of the bipartite Coxeter element.
pub fn phi_diagram_a(rp: &RootPoset, a: &Antichain) -> Result<MatchingDiagram> {
    let psi = psi_diagram(rp, a)?;
    psi.relabeled(p_labels(rp.ground_size()?)?)
}

/// Reads a permutation off a diagram whose chords send `i^(1)` to `j^(0)`.
pub(crate) fn read_permutation(
    d: &MatchingDiagram,
    kind: GroupKind,
    n: usize,
) -> Result<WeylElement> {
    let mut images = vec![0i32; n];
    for (from, to) in d.chord_labels() {
        if from.sup != 1 || to.sup != 0 {
            return Err(Error::Invariant(format!(
                "chord {from}-{to} does not join (1) to (0)"
            )));
        }
        images[from.value as usize - 1] = to.value;
    }
    WeylElement::from_images(kind, images)
}

/// `Θ(A)` in type A: `w(i) = j` whenever `i^(1)` and `j^(0)` share a chord of the φ-diagram.
pub fn theta_a(rp: &RootPoset, a: &Antichain) -> Result<WeylElement> {
    let phi = phi_diagram_a(rp, a)?;
    if !phi.is_noncrossing() || !phi.unmatched().is_empty() {
        return Err(Error::Invariant(format!(
            "φ-diagram {phi} is not a noncrossing perfect matching"
        )));
    }
    read_permutation(&phi, GroupKind::A, rp.ground_size()?)
}

/// Reflects the chords across the diameter `M` equidistant from the vertices
/// labelled `2^(0)` and `2^(1)`; the vertex labels stay put.
pub fn reflect_through_m(d: &MatchingDiagram) -> Result<MatchingDiagram> {
    let find = |sup| {
        d.position_of(Label::new(2, sup))
            .ok_or_else(|| Error::Argument(format!("diagram has no vertex 2^({sup})")))
    };
    Ok(d.reflected(find(0)?, find(1)?))
}
