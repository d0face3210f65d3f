//! Classical Weyl groups as (signed) permutation groups.
//!
//! Type `A_{n-1}` acts on `[n]`; types `B_n`/`C_n` (one group) and `D_n` act
//! on `±[n]` by signed permutations. Products compose as functions:
//! `(uv)(i) = u(v(i))`.

mod cycles;
mod noncrossing;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::roots::CartanType;

pub use noncrossing::{Bipartite, NoncrossingLattice};

/// Default bound on the group order for anything that enumerates `W`.
pub const DEFAULT_CAPACITY: u128 = 1_000_000;

/// Which family of classical Weyl group an element belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    /// Symmetric group `S_n`.
    A,
    /// Hyperoctahedral group, shared by types B and C.
    B,
    /// Even-signed permutations.
    D,
}

impl GroupKind {
    pub fn is_signed(self) -> bool {
        self != GroupKind::A
    }
}

/// A (signed) permutation, stored as the images of `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    kind: GroupKind,
    images: Vec<i32>,
}

impl WeylElement {
    pub fn identity(kind: GroupKind, n: usize) -> Self {
        WeylElement {
            kind,
            images: (1..=n as i32).collect(),
        }
    }

    /// Builds an element from `w(1), …, w(n)`, checking group membership.
    pub fn from_images(kind: GroupKind, images: Vec<i32>) -> Result<Self> {
        let n = images.len() as i32;
        let mut seen = vec![false; images.len() + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if v == 0 || v.abs() > n || seen[a] {
                return Err(Error::Argument(format!(
                    "{images:?} is not a signed permutation of [{n}]"
                )));
            }
            if v < 0 && kind == GroupKind::A {
                return Err(Error::Argument(format!(
                    "{images:?} has sign changes, not allowed in type A"
                )));
            }
            seen[a] = true;
        }
        if kind == GroupKind::D && images.iter().filter(|&&v| v < 0).count() % 2 == 1 {
            return Err(Error::Argument(format!(
                "{images:?} has an odd number of sign changes"
            )));
        }
        Ok(WeylElement { kind, images })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// Number of points `n` acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `w(i)` for `i ∈ ±[n]` (only positive `i` in type A).
    #[inline]
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.images[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        debug_assert_eq!(self.images.len(), other.images.len());
        WeylElement {
            kind: self.kind,
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            let target = i as i32 + 1;
            images[v.unsigned_abs() as usize - 1] = if v < 0 { -target } else { target };
        }
        WeylElement {
            kind: self.kind,
            images,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i32 + 1)
    }

    /// Cycles of the action on `[n]` (type A) or `±[n]`, starting from the first
    /// point in the order `1, -1, 2, -2, …`; fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<i32>> {
        let n = self.images.len() as i32;
        let points: Vec<i32> = if self.kind.is_signed() {
            (1..=n).flat_map(|i| [i, -i]).collect()
        } else {
            (1..=n).collect()
        };
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &start in &points {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut x = self.apply(start);
            while x != start {
                seen.insert(x);
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Reflection length `ℓ_T`: the codimension of the fixed space.
    ///
    /// In type A that is `n - #cycles`. For signed permutations only the
    /// pairs of cycles `C ≠ -C` contribute a fixed vector, so it is
    /// `n - #{such pairs}`.
    pub fn absolute_length(&self) -> usize {
        let n = self.images.len();
        let cycles = self.cycles();
        if !self.kind.is_signed() {
            return n - cycles.len();
        }
        let paired = cycles.iter().filter(|c| !c.contains(&-c[0])).count();
        n - paired / 2
    }

    /// The absolute order `u ≤_T w`: `ℓ_T(w) = ℓ_T(u) + ℓ_T(u⁻¹w)`.
    pub fn absolute_leq(&self, w: &WeylElement) -> bool {
        w.absolute_length() == self.absolute_length() + self.inverse().compose(w).absolute_length()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&cycles::format_cycles(self, false))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self)
    }
}

impl WeylElement {
    /// Cycle notation including fixed points as singleton cycles (type A only
    /// differs from `Display`).
    pub fn to_cycle_string_with_fixed_points(&self) -> String {
        cycles::format_cycles(self, true)
    }

    /// Parses cycle notation such as `(1,10)(2,4,8)` or `(2,4,-5)(-2,-4,5)`.
    ///
    /// Fixed points may be written as singletons and omitted otherwise. For
    /// signed kinds the sign-symmetric partner of each cycle is implied.
    pub fn parse_cycles(kind: GroupKind, n: usize, text: &str) -> Result<Self> {
        cycles::parse_cycles(kind, n, text)
    }
}

/// A classical Weyl group in its permutation representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeylGroup {
    kind: GroupKind,
    n: usize,
    cartan_type: CartanType,
}

impl WeylGroup {
    pub fn new(t: CartanType) -> Result<Self> {
        let (kind, n) = match t {
            CartanType::A(r) => (GroupKind::A, r + 1),
            CartanType::B(r) | CartanType::C(r) => (GroupKind::B, r),
            CartanType::D(r) => (GroupKind::D, r),
            _ => {
                return Err(Error::Argument(format!(
                    "{t} has no signed-permutation model; only classical types are supported"
                )))
            }
        };
        Ok(WeylGroup {
            kind,
            n,
            cartan_type: t,
        })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn order(&self) -> u128 {
        let fact: u128 = (1..=self.n as u128).product();
        match self.kind {
            GroupKind::A => fact,
            GroupKind::B => fact << self.n,
            GroupKind::D => fact << (self.n - 1),
        }
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.kind, self.n)
    }

    /// The simple reflection `s_i`, `1 ≤ i ≤ rank`.
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        if !(1..=self.rank()).contains(&i) {
            return Err(Error::Argument(format!(
                "simple reflection index {i} out of range for {}",
                self.cartan_type
            )));
        }
        let mut images: Vec<i32> = (1..=self.n as i32).collect();
        let n = self.n;
        match (self.kind, i == n) {
            (GroupKind::B, true) => images[n - 1] = -(n as i32),
            (GroupKind::D, true) => {
                images[n - 2] = -(n as i32);
                images[n - 1] = -(n as i32 - 1);
            }
            _ => images.swap(i - 1, i),
        }
        Ok(WeylElement {
            kind: self.kind,
            images,
        })
    }

    pub fn simple_reflections(&self) -> Vec<WeylElement> {
        (1..=self.rank())
            .map(|i| self.simple_reflection(i).unwrap())
            .collect()
    }

    /// All reflections, as the conjugation closure of the simple reflections.
    pub fn reflections(&self) -> Vec<WeylElement> {
        let simple = self.simple_reflections();
        let mut seen: HashSet<WeylElement> = simple.iter().cloned().collect();
        let mut queue: VecDeque<WeylElement> = simple.iter().cloned().collect();
        while let Some(t) = queue.pop_front() {
            for s in &simple {
                let u = s.compose(&t).compose(s);
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
        let mut out: Vec<WeylElement> = seen.into_iter().collect();
        out.sort();
        out
    }

    fn check_capacity(&self, bound: u128) -> Result<()> {
        if self.order() > bound {
            return Err(Error::Capacity {
                what: format!("the Weyl group of {}", self.cartan_type),
                size: self.order(),
                bound,
            });
        }
        Ok(())
    }

    /// Every group element, generated from the simple reflections.
    pub fn elements(&self, bound: u128) -> Result<Vec<WeylElement>> {
        self.check_capacity(bound)?;
        let simple = self.simple_reflections();
        let mut seen: HashSet<WeylElement> = HashSet::from([self.identity()]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(w) = queue.pop_front() {
            for s in &simple {
                let u = w.compose(s);
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
        let mut out: Vec<WeylElement> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Reflection lengths of every element by breadth-first search over
    /// products of reflections; an oracle for [`WeylElement::absolute_length`].
    pub fn absolute_lengths_by_search(&self, bound: u128) -> Result<HashMap<WeylElement, usize>> {
        self.check_capacity(bound)?;
        let reflections = self.reflections();
        let mut dist = HashMap::from([(self.identity(), 0usize)]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            for t in &reflections {
                let u = w.compose(t);
                if !dist.contains_key(&u) {
                    dist.insert(u.clone(), d + 1);
                    queue.push_back(u);
                }
            }
        }
        Ok(dist)
    }

    /// The left part of the Dynkin bipartition, the colour class containing 1.
    pub fn left_nodes(&self) -> Vec<usize> {
        let r = self.rank();
        match self.kind {
            GroupKind::D => {
                let n = self.n;
                let mut left: Vec<usize> = (1..=n - 2).filter(|i| i % 2 == 1).collect();
                if n.is_multiple_of(2) {
                    left.extend([n - 1, n]);
                }
                left
            }
            _ => (1..=r).filter(|i| i % 2 == 1).collect(),
        }
    }

    pub fn right_nodes(&self) -> Vec<usize> {
        let left = self.left_nodes();
        (1..=self.rank()).filter(|i| !left.contains(i)).collect()
    }

    /// Product of the simple reflections indexed by `nodes` (in any order if
    /// they pairwise commute).
    pub fn product_of_simple(&self, nodes: &[usize]) -> Result<WeylElement> {
        nodes.iter().try_fold(self.identity(), |acc, &i| {
            Ok(acc.compose(&self.simple_reflection(i)?))
        })
    }

    pub fn bipartite(&self) -> Bipartite {
        let left = self.left_nodes();
        let right = self.right_nodes();
        let c_l = self.product_of_simple(&left).unwrap();
        let c_r = self.product_of_simple(&right).unwrap();
        Bipartite {
            c: c_l.compose(&c_r),
            c_l,
            c_r,
            left,
            right,
        }
    }

    /// The cyclic order of `c` on `[n]` in type A: evens increasing, then odds decreasing.
    pub fn p_sequence(&self) -> Result<Vec<i32>> {
        if self.kind != GroupKind::A {
            return Err(Error::Argument("the p-sequence is a type A notion".into()));
        }
        let n = self.n as i32;
        let evens = (1..=n).filter(|i| i % 2 == 0);
        let odds = (1..=n).rev().filter(|i| i % 2 == 1);
        Ok(evens.chain(odds).collect())
    }

    /// The long cycle of `c` in type D: evens of `[n-1]` increasing, odds of
    /// `-[n-1]` increasing, evens of `-[n-1]` decreasing, odds of `[n-1]` decreasing.
    pub fn q_sequence(&self) -> Result<Vec<i32>> {
        if self.kind != GroupKind::D {
            return Err(Error::Argument("the q-sequence is a type D notion".into()));
        }
        let m = self.n as i32 - 1;
        let mut q: Vec<i32> = (1..=m).filter(|i| i % 2 == 0).collect();
        q.extend((-m..=-1).filter(|i| i % 2 != 0));
        q.extend((-m..=-1).rev().filter(|i| i % 2 == 0));
        q.extend((1..=m).rev().filter(|i| i % 2 == 1));
        Ok(q)
    }
}
