//! Chord diagrams on a circle of labelled vertices.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A vertex label `value^(sup)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Label {
    pub value: i32,
    pub sup: u8,
}

impl Label {
    pub fn new(value: i32, sup: u8) -> Self {
        Label { value, sup }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^({})", self.value, self.sup)
    }
}

/// Whether chords `{a, b}` and `{c, d}` on evenly spaced points cross.
///
/// Chords sharing an endpoint do not cross.
pub fn chords_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let (lo, hi) = (a.min(b), a.max(b));
    let inside = |x: usize| lo < x && x < hi;
    if [a, b].contains(&c) || [a, b].contains(&d) {
        return false;
    }
    inside(c) != inside(d)
}

/// Vertices in clockwise order (vertex `k` sits at position `k`) and a
/// partial matching of them by straight chords.
///
/// Markings are a construction aid and do not take part in equality.
#[derive(Clone, Debug)]
pub struct MatchingDiagram {
    vertices: Vec<Label>,
    chords: Vec<(usize, usize)>,
    markings: Vec<Option<i32>>,
}

impl PartialEq for MatchingDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.chords == other.chords
    }
}

impl Eq for MatchingDiagram {}

impl MatchingDiagram {
    pub fn new(
        vertices: Vec<Label>,
        chords: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let v = vertices.len();
        let mut used = vec![false; v];
        let mut normalized = Vec::new();
        for (a, b) in chords {
            if a >= v || b >= v || a == b {
                return Err(Error::Argument(format!(
                    "chord ({a},{b}) is not between two of {v} vertices"
                )));
            }
            for x in [a, b] {
                if std::mem::replace(&mut used[x], true) {
                    return Err(Error::Argument(format!(
                        "vertex {} is on two chords",
                        vertices[x]
                    )));
                }
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        Ok(MatchingDiagram {
            vertices,
            chords: normalized,
            markings: vec![None; v],
        })
    }

    pub(crate) fn with_markings(mut self, markings: Vec<Option<i32>>) -> Self {
        debug_assert_eq!(markings.len(), self.vertices.len());
        self.markings = markings;
        self
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    /// Chords as position pairs `(a, b)` with `a < b`, sorted.
    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn markings(&self) -> &[Option<i32>] {
        &self.markings
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn position_of(&self, label: Label) -> Option<usize> {
        self.vertices.iter().position(|&l| l == label)
    }

    pub fn partner(&self, k: usize) -> Option<usize> {
        self.chords.iter().find_map(|&(a, b)| match k {
            _ if k == a => Some(b),
            _ if k == b => Some(a),
            _ => None,
        })
    }

    /// Positions not on any chord, increasing.
    pub fn unmatched(&self) -> Vec<usize> {
        let mut used = vec![false; self.len()];
        for &(a, b) in &self.chords {
            used[a] = true;
            used[b] = true;
        }
        (0..self.len()).filter(|&k| !used[k]).collect()
    }

    pub fn is_noncrossing(&self) -> bool {
        self.chords
            .iter()
            .enumerate()
            .all(|(i, &e)| self.chords[i + 1..].iter().all(|&f| !chords_cross(e, f)))
    }

    /// Every chord joins a superscript-1 vertex to a superscript-0 vertex.
    pub fn chords_alternate(&self) -> bool {
        self.chords
            .iter()
            .all(|&(a, b)| self.vertices[a].sup + self.vertices[b].sup == 1)
    }

    /// Chord endpoints as labels, superscript-1 end first when the superscripts differ.
    pub fn chord_labels(&self) -> Vec<(Label, Label)> {
        self.chords
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.vertices[a], self.vertices[b]);
                if y.sup > x.sup {
                    (y, x)
                } else {
                    (x, y)
                }
            })
            .collect()
    }

    /// Chords as `i^(1)-j^(0)` separated by spaces.
    pub fn chord_list(&self) -> String {
        self.chord_labels()
            .iter()
            .map(|(x, y)| format!("{x}-{y}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Same chords on new vertex labels.
    pub fn relabeled(&self, vertices: Vec<Label>) -> Result<Self> {
        if vertices.len() != self.len() {
            return Err(Error::Argument(format!(
                "{} labels given for {} vertices",
                vertices.len(),
                self.len()
            )));
        }
        Ok(MatchingDiagram {
            vertices,
            chords: self.chords.clone(),
            markings: self.markings.clone(),
        })
    }

    /// Moves every chord by a permutation of positions, keeping the labels.
    pub fn map_chords(&self, f: impl Fn(usize) -> usize) -> Result<Self> {
        MatchingDiagram::new(
            self.vertices.clone(),
            self.chords.iter().map(|&(a, b)| (f(a), f(b))),
        )
    }

    /// Reflection of the chords across the diameter through the midpoint of
    /// positions `a` and `b`.
    pub fn reflected(&self, a: usize, b: usize) -> Self {
        let v = self.len();
        self.map_chords(|k| (2 * v + a + b - k) % v)
            .expect("a reflection preserves a matching")
    }

    /// Rotation of the chords by half a turn.
    pub fn rotated_half(&self) -> Self {
        let v = self.len();
        self.map_chords(|k| (k + v / 2) % v)
            .expect("a rotation preserves a matching")
    }

    pub fn without_chords(&self, remove: &[(usize, usize)]) -> Self {
        let mut out = self.clone();
        out.chords.retain(|e| !remove.contains(e));
        out
    }

    /// Graphviz rendering with fixed positions on a circle.
    pub fn to_dot(&self, name: &str) -> String {
        let v = self.len().max(1) as f64;
        let mut out =
            format!("graph \"{name}\" {{\n  layout=neato;\n  node [shape=circle, fontsize=10];\n");
        for (k, label) in self.vertices.iter().enumerate() {
            let angle = std::f64::consts::FRAC_PI_2 - std::f64::consts::TAU * k as f64 / v;
            out.push_str(&format!(
                "  v{k} [label=\"{label}\", pos=\"{:.3},{:.3}!\"];\n",
                3.0 * angle.cos(),
                3.0 * angle.sin()
            ));
        }
        for &(a, b) in &self.chords {
            out.push_str(&format!("  v{a} -- v{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for MatchingDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.chord_list())
    }
}
