//! The noncrossing partition lattice `NC(W, c)` for a bipartite Coxeter element.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::roots::CartanType;

use super::{WeylElement, WeylGroup, DEFAULT_CAPACITY};

/// A bipartite Coxeter element `c = c_L c_R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartite {
    pub c: WeylElement,
    pub c_l: WeylElement,
    pub c_r: WeylElement,
    /// Simple-root labels (1-based) of the colour class containing 1.
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// The interval `[e, c]` in absolute order.
#[derive(Clone, Debug)]
pub struct NoncrossingLattice {
    group: WeylGroup,
    coxeter: Bipartite,
    elements: Vec<WeylElement>,
    lengths: Vec<usize>,
    index: HashMap<WeylElement, usize>,
}

impl NoncrossingLattice {
    pub fn new(t: CartanType) -> Result<Self> {
        Self::with_capacity(t, DEFAULT_CAPACITY)
    }

    /// Builds the lattice, refusing groups whose order exceeds `bound`.
    pub fn with_capacity(t: CartanType, bound: u128) -> Result<Self> {
        let group = WeylGroup::new(t)?;
        if group.order() > bound {
            return Err(Error::Capacity {
                what: format!("the Weyl group of {t}"),
                size: group.order(),
                bound,
            });
        }
        let coxeter = group.bipartite();
        let reflections = group.reflections();
        let r = group.rank();

        // Walk down from c: every cover u ⋖ w has the form u = t·w.
        let mut seen: HashSet<WeylElement> = HashSet::from([coxeter.c.clone()]);
        let mut queue = VecDeque::from([coxeter.c.clone()]);
        while let Some(w) = queue.pop_front() {
            let lw = w.absolute_length();
            for t in &reflections {
                let u = t.compose(&w);
                if u.absolute_length() + 1 == lw && seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
        let mut elements: Vec<WeylElement> = seen.into_iter().collect();
        elements.sort_by_cached_key(|w| (w.absolute_length(), w.clone()));
        let lengths: Vec<usize> = elements.iter().map(WeylElement::absolute_length).collect();
        for (w, &l) in elements.iter().zip(&lengths) {
            if l + w.inverse().compose(&coxeter.c).absolute_length() != r {
                return Err(Error::Invariant(format!(
                    "{w} was reached from c but is not below it"
                )));
            }
        }
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        Ok(NoncrossingLattice {
            group,
            coxeter,
            elements,
            lengths,
            index,
        })
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn bipartite(&self) -> &Bipartite {
        &self.coxeter
    }

    pub fn c(&self) -> &WeylElement {
        &self.coxeter.c
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    /// Elements sorted by absolute length, then lexicographically by images.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.index.contains_key(w)
    }

    pub fn abs_length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    /// Absolute order between two lattice elements given by index.
    pub fn leq(&self, u: usize, w: usize) -> bool {
        let step = self.elements[u].inverse().compose(&self.elements[w]);
        self.lengths[w] == self.lengths[u] + step.absolute_length()
    }

    fn check(&self, w: &WeylElement) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::Argument(format!(
                "{w} is not a noncrossing partition for this c"
            )))
        }
    }

    /// `Krew(w) = c w⁻¹`.
    pub fn kreweras(&self, w: &WeylElement) -> Result<WeylElement> {
        self.check(w)?;
        Ok(self.coxeter.c.compose(&w.inverse()))
    }

    /// `Krew⁻¹(w) = w⁻¹ c`.
    pub fn kreweras_inverse(&self, w: &WeylElement) -> Result<WeylElement> {
        self.check(w)?;
        Ok(w.inverse().compose(&self.coxeter.c))
    }

    /// `Krew^k` for any integer `k`.
    pub fn kreweras_power(&self, w: &WeylElement, k: i64) -> Result<WeylElement> {
        let mut out = w.clone();
        for _ in 0..k.unsigned_abs() {
            out = if k > 0 {
                self.kreweras(&out)?
            } else {
                self.kreweras_inverse(&out)?
            };
        }
        Ok(out)
    }

    /// `Flip(w) = c_L w⁻¹ c_L`.
    pub fn flip(&self, w: &WeylElement) -> Result<WeylElement> {
        self.check(w)?;
        let c_l = &self.coxeter.c_l;
        Ok(c_l.compose(&w.inverse()).compose(c_l))
    }

    /// Number of elements of each absolute length `0..=r`.
    pub fn rank_counts(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.rank() + 1];
        for &l in &self.lengths {
            out[l] += 1;
        }
        out
    }

    /// Cover relations `(u, w)` by element index.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for w in 0..self.len() {
            for u in 0..self.len() {
                if self.lengths[u] + 1 == self.lengths[w] && self.leq(u, w) {
                    out.push((u, w));
                }
            }
        }
        out
    }

    /// Order of `Krew` as a permutation of the lattice.
    pub fn kreweras_order(&self) -> usize {
        let mut order = 1usize;
        let mut seen = vec![false; self.len()];
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            loop {
                seen[i] = true;
                len += 1;
                i = self.index[&self.kreweras(&self.elements[i]).unwrap()];
                if i == start {
                    break;
                }
            }
            order = lcm(order, len);
        }
        order
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::GroupKind;

    #[test]
    fn nc_s3() {
        let nc = NoncrossingLattice::new(CartanType::A(2)).unwrap();
        assert_eq!(nc.len(), 5);
        assert_eq!(nc.rank_counts(), vec![1, 3, 1]);
        let names: Vec<String> = nc.elements().iter().map(|w| w.to_string()).collect();
        assert_eq!(names, vec!["()", "(2,3)", "(1,2)", "(1,3)", "(1,2,3)"]);
    }

    #[test]
    fn kreweras_and_flip_basics() {
        for t in [CartanType::A(3), CartanType::D(4), CartanType::B(3)] {
            let nc = NoncrossingLattice::new(t).unwrap();
            let e = nc.group().identity();
            assert_eq!(nc.kreweras(&e).unwrap(), *nc.c());
            assert!(nc.kreweras(nc.c()).unwrap().is_identity());
            assert_eq!(nc.flip(&e).unwrap(), e);
            assert_eq!(nc.flip(nc.c()).unwrap(), *nc.c());
            let h = t.coxeter_number();
            let order = nc.kreweras_order();
            assert!(order == h || order == 2 * h, "{t}: order {order}");
            for w in nc.elements() {
                let f = nc.flip(w).unwrap();
                assert_eq!(nc.flip(&f).unwrap(), *w);
                assert_eq!(nc.kreweras_inverse(&nc.kreweras(w).unwrap()).unwrap(), *w);
                // Flip · Krew = Krew⁻¹ · Flip
                let lhs = nc.flip(&nc.kreweras(w).unwrap()).unwrap();
                let rhs = nc.kreweras_inverse(&f).unwrap();
                assert_eq!(lhs, rhs, "{t}: {w}");
            }
        }
    }

    #[test]
    fn kreweras_is_an_anti_automorphism() {
        let nc = NoncrossingLattice::new(CartanType::A(3)).unwrap();
        let krew: Vec<usize> = nc
            .elements()
            .iter()
            .map(|w| nc.index_of(&nc.kreweras(w).unwrap()).unwrap())
            .collect();
        let flip: Vec<usize> = nc
            .elements()
            .iter()
            .map(|w| nc.index_of(&nc.flip(w).unwrap()).unwrap())
            .collect();
        for u in 0..nc.len() {
            for w in 0..nc.len() {
                assert_eq!(nc.leq(u, w), nc.leq(krew[w], krew[u]));
                assert_eq!(nc.leq(u, w), nc.leq(flip[u], flip[w]));
            }
        }
        assert!(nc.kreweras_power(nc.c(), -1).unwrap().is_identity());
        assert_eq!(nc.kreweras_power(nc.c(), 2).unwrap(), *nc.c());
    }

    #[test]
    fn catalan_counts() {
        for (t, count) in [
            (CartanType::A(4), 42),
            (CartanType::D(4), 50),
            (CartanType::B(3), 20),
        ] {
            assert_eq!(NoncrossingLattice::new(t).unwrap().len(), count, "{t}");
        }
    }

    #[test]
    fn capacity_is_enforced() {
        let err = NoncrossingLattice::with_capacity(CartanType::D(5), 100).unwrap_err();
        assert!(matches!(err, Error::Capacity { bound: 100, .. }));
        assert!(NoncrossingLattice::new(CartanType::F4).is_err());
    }

    #[test]
    fn membership_is_checked() {
        let nc = NoncrossingLattice::new(CartanType::A(3)).unwrap();
        let w = WeylElement::parse_cycles(GroupKind::A, 4, "(1,4)(2,3)").unwrap();
        assert!(!nc.contains(&w));
        assert!(nc.kreweras(&w).is_err());
    }
}
