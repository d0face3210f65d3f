//! Θ for classical types, computed by induction on parabolic subsystems.

use crate::dynamics::rowmotion;
use crate::error::{Error, Result};
use crate::poset::{Antichain, Restriction};
use crate::roots::RootPoset;
use crate::weyl::{WeylElement, WeylGroup};

/// Largest rank for which every parabolic subposet is precomputed.
pub const MAX_RANK: usize = 16;

/// Precomputed data for evaluating `Θ_W` and its parabolic restrictions.
///
/// Label sets `J ⊆ [r]` are bitmasks with bit `i - 1` standing for `α_i`.
#[derive(Clone, Debug)]
pub struct Theta {
    group: WeylGroup,
    size: usize,
    simple: Vec<WeylElement>,
    left: u32,
    below: Vec<u32>,
    parabolics: Vec<Restriction>,
    coxeter: Vec<WeylElement>,
}

impl Theta {
    pub fn new(rp: &RootPoset) -> Result<Self> {
        let group = WeylGroup::new(rp.cartan_type())?;
        let r = rp.rank();
        if r > MAX_RANK {
            return Err(Error::Capacity {
                what: format!("parabolic subsystems of {}", rp.cartan_type()),
                size: 1u128 << r,
                bound: 1u128 << MAX_RANK,
            });
        }
        let simple = group.simple_reflections();
        let left = group
            .left_nodes()
            .iter()
            .fold(0u32, |m, &i| m | 1 << (i - 1));
        let below = (0..rp.len())
            .map(|x| {
                (1..=r)
                    .filter(|&i| rp.poset().leq(rp.simple(i), x))
                    .fold(0u32, |m, i| m | 1 << (i - 1))
            })
            .collect();
        let mut parabolics = Vec::with_capacity(1 << r);
        let mut coxeter = Vec::with_capacity(1 << r);
        for mask in 0u32..1 << r {
            let labels = labels_of(mask, r);
            let minimal: Vec<usize> = labels.iter().map(|&i| rp.simple(i)).collect();
            parabolics.push(rp.poset().restrict_to_support(&minimal)?);
            let (l, rt): (Vec<usize>, Vec<usize>) =
                labels.iter().partition(|&&i| left >> (i - 1) & 1 == 1);
            coxeter.push(
                group
                    .product_of_simple(&l)?
                    .compose(&group.product_of_simple(&rt)?),
            );
        }
        Ok(Theta {
            group,
            size: rp.len(),
            simple,
            left,
            below,
            parabolics,
            coxeter,
        })
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    fn full(&self) -> u32 {
        (1u32 << self.group.rank()) - 1
    }

    fn mask(&self, labels: &[usize]) -> Result<u32> {
        labels.iter().try_fold(0u32, |m, &i| {
            if i == 0 || i > self.group.rank() {
                Err(Error::Argument(format!("no simple root with label {i}")))
            } else {
                Ok(m | 1 << (i - 1))
            }
        })
    }

    fn check(&self, a: &Antichain) -> Result<()> {
        if a.poset_size() == self.size {
            Ok(())
        } else {
            Err(Error::Argument(
                "antichain does not belong to this root poset".into(),
            ))
        }
    }

    fn support_mask(&self, a: &Antichain) -> u32 {
        a.iter().fold(0, |m, x| m | self.below[x])
    }

    /// Labels `i` with `α_i` weakly below some element of `a`.
    pub fn support_labels(&self, a: &Antichain) -> Vec<usize> {
        labels_of(self.support_mask(a), self.group.rank())
    }

    /// The bipartite Coxeter element `c_J = c_{L∩J} c_{R∩J}` of a parabolic subgroup.
    pub fn parabolic_coxeter(&self, labels: &[usize]) -> Result<&WeylElement> {
        Ok(&self.coxeter[self.mask(labels)? as usize])
    }

    /// `∏_{i ∈ L ∖ supp(a)} s_i`, the prefix in the parabolic induction formula.
    pub fn induction_prefix(&self, a: &Antichain) -> Result<WeylElement> {
        self.check(a)?;
        Ok(self.left_product(self.left & !self.support_mask(a)))
    }

    fn left_product(&self, mask: u32) -> WeylElement {
        (0..self.group.rank())
            .filter(|i| mask >> i & 1 == 1)
            .fold(self.group.identity(), |acc, i| acc.compose(&self.simple[i]))
    }

    /// `Θ_W(a)`.
    pub fn apply(&self, a: &Antichain) -> Result<WeylElement> {
        self.check(a)?;
        self.recurse(self.full(), a)
    }

    /// `Θ_{W_J}(a)` for an antichain of the parabolic subposet on the labels `J`.
    pub fn apply_parabolic(&self, labels: &[usize], a: &Antichain) -> Result<WeylElement> {
        self.check(a)?;
        let mask = self.mask(labels)?;
        if self.support_mask(a) & !mask != 0 {
            return Err(Error::Argument(
                "antichain leaves the parabolic subsystem".into(),
            ));
        }
        self.recurse(mask, a)
    }

    fn recurse(&self, mask: u32, a: &Antichain) -> Result<WeylElement> {
        if mask == 0 {
            return Ok(self.group.identity());
        }
        let sub = &self.parabolics[mask as usize];
        let start = sub
            .project(a)
            .ok_or_else(|| Error::Invariant("antichain escaped its parabolic subposet".into()))?;
        let mut current = start.clone();
        let mut k = 0usize;
        while self.support_mask(&sub.lift(&current)) == mask {
            current = rowmotion(&sub.poset, &current);
            k += 1;
            if current == start {
                return Err(Error::Invariant(
                    "rowmotion orbit never leaves full support".into(),
                ));
            }
        }
        let lifted = sub.lift(&current);
        let smaller = self.support_mask(&lifted);
        let inner = self.recurse(smaller, &lifted)?;
        let mut w = self
            .left_product(self.left & mask & !smaller)
            .compose(&inner);
        let c = &self.coxeter[mask as usize];
        for _ in 0..k {
            w = w.inverse().compose(c);
        }
        Ok(w)
    }
}

fn labels_of(mask: u32, r: usize) -> Vec<usize> {
    (1..=r).filter(|i| mask >> (i - 1) & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{row_inv_rvac, rowvacuation};
    use crate::roots::CartanType;
    use crate::weyl::NoncrossingLattice;
    use std::collections::HashSet;

    fn setup(t: CartanType) -> (RootPoset, Theta, NoncrossingLattice) {
        let rp = RootPoset::new(t).unwrap();
        let theta = Theta::new(&rp).unwrap();
        (rp, theta, NoncrossingLattice::new(t).unwrap())
    }

    #[test]
    fn left_simple_roots_go_to_identity() {
        for t in [CartanType::A(4), CartanType::B(3), CartanType::D(5)] {
            let (rp, theta, _) = setup(t);
            let left = theta.group().left_nodes();
            let a = rp.antichain(left.iter().map(|&i| rp.simple(i))).unwrap();
            assert!(theta.apply(&a).unwrap().is_identity(), "{t}");
        }
    }

    #[test]
    fn bijective_and_equivariant() {
        for t in [
            CartanType::A(3),
            CartanType::B(3),
            CartanType::C(3),
            CartanType::D(4),
        ] {
            let (rp, theta, nc) = setup(t);
            let p = rp.poset();
            let mut image = HashSet::new();
            for a in p.antichains() {
                let w = theta.apply(&a).unwrap();
                assert!(nc.contains(&w), "{t}: {a:?} ↦ {w}");
                image.insert(w.clone());
                let next = theta.apply(&rowmotion(p, &a)).unwrap();
                assert_eq!(next, nc.kreweras(&w).unwrap(), "{t}: {a:?}");
                let flipped = theta.apply(&row_inv_rvac(p, &a)).unwrap();
                assert_eq!(flipped, nc.flip(&w).unwrap(), "{t}: {a:?}");
            }
            assert_eq!(image.len(), nc.len(), "{t}");
        }
    }

    #[test]
    fn parabolic_induction() {
        let (rp, theta, _) = setup(CartanType::D(4));
        for a in rp.poset().antichains() {
            let labels = theta.support_labels(&a);
            let expected = theta
                .induction_prefix(&a)
                .unwrap()
                .compose(&theta.apply_parabolic(&labels, &a).unwrap());
            assert_eq!(theta.apply(&a).unwrap(), expected);
        }
    }

    #[test]
    fn row_inverse_rvac_keeps_support() {
        let (rp, theta, _) = setup(CartanType::A(4));
        for a in rp.poset().antichains() {
            let b = row_inv_rvac(rp.poset(), &a);
            assert_eq!(theta.support_labels(&a), theta.support_labels(&b));
            assert_eq!(rowvacuation(rp.poset(), &rowvacuation(rp.poset(), &a)), a);
        }
    }

    #[test]
    fn rejects_foreign_input() {
        let (_, theta, _) = setup(CartanType::A(2));
        assert!(theta.apply(&Antichain::empty(6)).is_err());
        assert!(theta.parabolic_coxeter(&[3]).is_err());
        assert!(theta.parabolic_coxeter(&[]).unwrap().is_identity());
    }
}
