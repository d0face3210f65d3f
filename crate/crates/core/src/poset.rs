//! Finite ranked posets and their antichains.
//!
//! Elements are dense indices `0..size`. The order relation is stored as one
//! bitset row per element (the principal down-set and up-set), so that the
//! comparability test used by every toggle is a single word-level check.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;
use rand::seq::IndexedRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// A finite poset together with its (unique) rank function.
#[derive(Clone, Debug)]
pub struct RankedPoset {
    size: usize,
    below: Vec<FixedBitSet>,
    above: Vec<FixedBitSet>,
    comparable: Vec<FixedBitSet>,
    rank: Vec<usize>,
    levels: Vec<Vec<usize>>,
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
}

impl RankedPoset {
    /// Builds a poset from an order predicate `leq(x, y)` meaning `x <= y`.
    ///
    /// The relation is checked to be a partial order and the poset is checked
    /// to admit a rank function (minimal elements at rank 0, covers step by 1).
    pub fn from_relation(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut below = vec![FixedBitSet::with_capacity(size); size];
        let mut above = vec![FixedBitSet::with_capacity(size); size];
        for x in 0..size {
            if !leq(x, x) {
                return Err(Error::Argument(format!("relation is not reflexive at {x}")));
            }
            for y in 0..size {
                if leq(x, y) {
                    if x != y && leq(y, x) {
                        return Err(Error::Argument(format!(
                            "relation is not antisymmetric on ({x}, {y})"
                        )));
                    }
                    below[y].insert(x);
                    above[x].insert(y);
                }
            }
        }
        for y in 0..size {
            for x in below[y].ones() {
                if !below[x].is_subset(&below[y]) {
                    return Err(Error::Argument(format!(
                        "relation is not transitive through ({x}, {y})"
                    )));
                }
            }
        }
        Self::from_closed(size, below, above)
    }

    /// Builds a poset from its cover relations `(x, y)` meaning `x ⋖ y`.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut up = vec![Vec::new(); size];
        for &(x, y) in covers {
            if x >= size || y >= size {
                return Err(Error::Argument(format!("cover ({x}, {y}) out of range")));
            }
            up[x].push(y);
        }
        let mut above = vec![FixedBitSet::with_capacity(size); size];
        for start in 0..size {
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                if above[start].put(x) {
                    continue;
                }
                stack.extend(up[x].iter().copied());
            }
        }
        Self::from_relation(size, |x, y| above[x].contains(y))
    }

    fn from_closed(size: usize, below: Vec<FixedBitSet>, above: Vec<FixedBitSet>) -> Result<Self> {
        let comparable: Vec<FixedBitSet> = (0..size)
            .map(|x| {
                let mut c = below[x].clone();
                c.union_with(&above[x]);
                c.set(x, false);
                c
            })
            .collect();

        let mut covers = Vec::new();
        for y in 0..size {
            for x in below[y].ones() {
                if x == y {
                    continue;
                }
                // x ⋖ y iff the open interval (x, y) is empty.
                let mut between = above[x].clone();
                between.intersect_with(&below[y]);
                if between.count_ones(..) == 2 {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();

        // Process elements by the size of their down-set, which is a linear extension.
        let mut order: Vec<usize> = (0..size).collect();
        order.sort_by_key(|&x| (below[x].count_ones(..), x));
        let mut rank = vec![0usize; size];
        let mut lower_covers = vec![Vec::new(); size];
        let mut upper_covers = vec![Vec::new(); size];
        for &(x, y) in &covers {
            lower_covers[y].push(x);
            upper_covers[x].push(y);
        }
        for &y in &order {
            if let Some(&x) = lower_covers[y].first() {
                rank[y] = rank[x] + 1;
            }
        }
        for &(x, y) in &covers {
            if rank[y] != rank[x] + 1 {
                return Err(Error::Argument(format!(
                    "poset is not ranked: cover ({x}, {y}) has ranks {} and {}",
                    rank[x], rank[y]
                )));
            }
        }
        let max_rank = rank.iter().copied().max();
        let mut levels = vec![Vec::new(); max_rank.map_or(0, |m| m + 1)];
        for x in 0..size {
            levels[rank[x]].push(x);
        }
        Ok(RankedPoset {
            size,
            below,
            above,
            comparable,
            rank,
            levels,
            covers,
            lower_covers,
            upper_covers,
        })
    }

    /// The poset with no elements.
    pub fn empty() -> Self {
        Self::from_closed(0, Vec::new(), Vec::new()).expect("empty poset is ranked")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        x == y || self.comparable[x].contains(y)
    }

    pub fn rank_of(&self, x: usize) -> usize {
        self.rank[x]
    }

    /// The maximum of the rank function; `None` for the empty poset.
    pub fn max_rank(&self) -> Option<usize> {
        self.levels.len().checked_sub(1)
    }

    /// Number of nonempty ranks, i.e. `max_rank + 1` (0 when empty).
    pub fn num_ranks(&self) -> usize {
        self.levels.len()
    }

    /// The elements of rank `i`, in increasing index order. Empty past the top rank.
    pub fn level(&self, i: usize) -> &[usize] {
        self.levels.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, y: usize) -> &[usize] {
        &self.lower_covers[y]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    /// Minimal elements (rank 0), in increasing index order.
    pub fn minimal(&self) -> &[usize] {
        self.level(0)
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| self.above[x].count_ones(..) == 1)
            .collect()
    }

    pub(crate) fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.below[x]
    }

    pub(crate) fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.above[x]
    }

    pub(crate) fn comparable_set(&self, x: usize) -> &FixedBitSet {
        &self.comparable[x]
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.size {
            Ok(())
        } else {
            Err(Error::Argument(format!(
                "element {x} out of range for poset of size {}",
                self.size
            )))
        }
    }

    /// All antichains in lexicographic order of their sorted element lists.
    pub fn antichains(&self) -> Vec<Antichain> {
        let mut out = Vec::new();
        self.for_each_antichain(|a| out.push(a.clone()));
        out
    }

    /// Visits every antichain in lexicographic order without collecting them.
    pub fn for_each_antichain(&self, mut visit: impl FnMut(&Antichain)) {
        let mut current = Antichain::empty(self.size);
        let mut blocked = FixedBitSet::with_capacity(self.size);
        self.extend_antichains(0, &mut current, &mut blocked, &mut visit);
    }

    fn extend_antichains(
        &self,
        from: usize,
        current: &mut Antichain,
        blocked: &mut FixedBitSet,
        visit: &mut impl FnMut(&Antichain),
    ) {
        visit(current);
        for x in from..self.size {
            if blocked.contains(x) {
                continue;
            }
            let saved = blocked.clone();
            current.bits.insert(x);
            blocked.union_with(&self.comparable[x]);
            self.extend_antichains(x + 1, current, blocked, visit);
            current.bits.set(x, false);
            *blocked = saved;
        }
    }

    pub fn count_antichains(&self) -> usize {
        let mut n = 0;
        self.for_each_antichain(|_| n += 1);
        n
    }

    /// A linear extension listing elements by rank, then by index.
    pub fn rank_linear_extension(&self) -> Vec<usize> {
        self.levels.iter().flatten().copied().collect()
    }

    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        if order.len() != self.size {
            return false;
        }
        let mut position = vec![usize::MAX; self.size];
        for (i, &x) in order.iter().enumerate() {
            if x >= self.size || position[x] != usize::MAX {
                return false;
            }
            position[x] = i;
        }
        self.covers.iter().all(|&(x, y)| position[x] < position[y])
    }

    /// A random linear extension: repeatedly pick a uniformly random available element.
    pub fn random_linear_extension<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<usize> {
        let mut pending: Vec<usize> = (0..self.size)
            .map(|y| self.below[y].count_ones(..) - 1)
            .collect();
        let mut available: Vec<usize> = self.minimal().to_vec();
        let mut order = Vec::with_capacity(self.size);
        while let Some(&x) = available.choose(rng) {
            available.retain(|&a| a != x);
            order.push(x);
            for y in self.above[x].ones() {
                if y != x {
                    pending[y] -= 1;
                    if pending[y] == 0 {
                        available.push(y);
                    }
                }
            }
        }
        order
    }

    /// The subposet induced on `keep` (given in any order), with an index map back.
    pub fn induced(&self, keep: &[usize]) -> Result<Restriction> {
        let mut embed = keep.to_vec();
        embed.sort_unstable();
        embed.dedup();
        for &x in &embed {
            self.check_element(x)?;
        }
        let poset = RankedPoset::from_relation(embed.len(), |a, b| self.leq(embed[a], embed[b]))?;
        let mut position = vec![None; self.size];
        for (i, &x) in embed.iter().enumerate() {
            position[x] = Some(i);
        }
        Ok(Restriction {
            poset,
            embed,
            position,
        })
    }

    /// The subposet `P_X` of elements lying above no minimal element outside `X`.
    pub fn restrict_to_support(&self, support: &[usize]) -> Result<Restriction> {
        let mut excluded = FixedBitSet::with_capacity(self.size);
        for &p in self.minimal() {
            excluded.insert(p);
        }
        for &p in support {
            self.check_element(p)?;
            if self.rank[p] != 0 {
                return Err(Error::Argument(format!(
                    "element {p} is not minimal and cannot be part of a support"
                )));
            }
            excluded.set(p, false);
        }
        let keep: Vec<usize> = (0..self.size)
            .filter(|&q| self.below[q].is_disjoint(&excluded))
            .collect();
        self.induced(&keep)
    }

    /// Disjoint union; the elements of `other` are shifted by `self.size()`.
    pub fn disjoint_union(&self, other: &RankedPoset) -> RankedPoset {
        let n = self.size;
        RankedPoset::from_relation(n + other.size, |x, y| match (x < n, y < n) {
            (true, true) => self.leq(x, y),
            (false, false) => other.leq(x - n, y - n),
            _ => false,
        })
        .expect("disjoint union of ranked posets is ranked")
    }
}

/// An induced subposet together with its embedding into the ambient poset.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub poset: RankedPoset,
    /// `embed[i]` is the ambient index of subposet element `i` (increasing).
    pub embed: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl Restriction {
    pub fn lift(&self, a: &Antichain) -> Antichain {
        let mut bits = FixedBitSet::with_capacity(self.position.len());
        for x in a.iter() {
            bits.insert(self.embed[x]);
        }
        Antichain { bits }
    }

    /// Re-indexes an ambient antichain into the subposet; `None` if it leaves it.
    pub fn project(&self, a: &Antichain) -> Option<Antichain> {
        let mut bits = FixedBitSet::with_capacity(self.poset.size());
        for x in a.iter() {
            bits.insert(self.position.get(x).copied().flatten()?);
        }
        Some(Antichain { bits })
    }

    pub fn position_of(&self, ambient: usize) -> Option<usize> {
        self.position.get(ambient).copied().flatten()
    }
}

/// A set of pairwise incomparable elements of a specific poset.
///
/// Stored as a bitset over the poset's elements, so equality and hashing are
/// structural. Ordering is lexicographic on the sorted element lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Antichain {
    bits: FixedBitSet,
}

impl Antichain {
    pub fn empty(poset_size: usize) -> Self {
        Antichain {
            bits: FixedBitSet::with_capacity(poset_size),
        }
    }

    /// Validates that `elements` is an antichain of `poset`.
    pub fn new(poset: &RankedPoset, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut a = Antichain::empty(poset.size());
        for x in elements {
            poset.check_element(x)?;
            a.bits.insert(x);
        }
        for x in a.iter() {
            if !a.bits.is_disjoint(poset.comparable_set(x)) {
                let y = a
                    .iter()
                    .find(|&y| y != x && poset.comparable(x, y))
                    .unwrap();
                return Err(Error::Argument(format!(
                    "elements {x} and {y} are comparable, not an antichain"
                )));
            }
        }
        Ok(a)
    }

    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        Antichain { bits }
    }

    pub(crate) fn bits_mut(&mut self) -> &mut FixedBitSet {
        &mut self.bits
    }

    /// The full set of rank-`i` elements, which is always an antichain.
    pub fn rank_level(poset: &RankedPoset, i: usize) -> Self {
        let mut a = Antichain::empty(poset.size());
        for &x in poset.level(i) {
            a.bits.insert(x);
        }
        a
    }

    pub fn poset_size(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    /// Elements in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Applies an element relabeling (for instance a poset automorphism).
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Antichain {
        let mut bits = FixedBitSet::with_capacity(self.bits.len());
        for x in self.iter() {
            bits.insert(f(x));
        }
        Antichain { bits }
    }
}

impl Ord for Antichain {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Antichain {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// The boolean lattice on two atoms: 0 < a, b < 1.
    fn diamond() -> RankedPoset {
        RankedPoset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn diamond_structure() {
        let p = diamond();
        assert_eq!(p.max_rank(), Some(2));
        assert_eq!(p.level(1), &[1, 2]);
        assert!(p.leq(0, 3));
        assert!(!p.comparable(1, 2));
        assert_eq!(p.maximal(), vec![3]);
        assert_eq!(p.covers().len(), 4);
    }

    #[test]
    fn rejects_non_partial_orders() {
        assert!(RankedPoset::from_relation(2, |x, y| x != y || x == 0).is_err());
        assert!(RankedPoset::from_relation(2, |_, _| true).is_err());
        // 0<1<2 without 0<2
        assert!(RankedPoset::from_relation(3, |x, y| x == y
            || (x, y) == (0, 1)
            || (x, y) == (1, 2))
        .is_err());
    }

    #[test]
    fn rejects_unranked() {
        // 0 < 1 < 2 and 0 < 2 via a direct cover from a second minimal element 3.
        let err = RankedPoset::from_covers(4, &[(0, 1), (1, 2), (3, 2)]).unwrap_err();
        assert!(matches!(err, Error::Argument(_)));
    }

    #[test]
    fn antichains_are_lexicographic() {
        let p = diamond();
        let all: Vec<Vec<usize>> = p.antichains().iter().map(Antichain::to_vec).collect();
        assert_eq!(
            all,
            vec![vec![], vec![0], vec![1], vec![1, 2], vec![2], vec![3]]
        );
        let mut sorted = p.antichains();
        sorted.sort();
        assert_eq!(sorted, p.antichains());
    }

    #[test]
    fn antichain_validation() {
        let p = diamond();
        assert!(Antichain::new(&p, [1, 2]).is_ok());
        assert!(Antichain::new(&p, [0, 2]).is_err());
        assert!(Antichain::new(&p, [7]).is_err());
    }

    #[test]
    fn empty_poset() {
        let p = RankedPoset::empty();
        assert_eq!(p.max_rank(), None);
        assert_eq!(p.count_antichains(), 1);
    }

    #[test]
    fn random_extensions_are_valid() {
        let p = diamond().disjoint_union(&diamond());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let ext = p.random_linear_extension(&mut rng);
            assert!(p.is_linear_extension(&ext));
        }
        assert!(!p.is_linear_extension(&[3, 0, 1, 2, 4, 5, 6, 7]));
    }

    #[test]
    fn restriction_round_trip() {
        let p = diamond();
        let r = p.induced(&[1, 3]).unwrap();
        assert_eq!(r.poset.size(), 2);
        assert!(r.poset.leq(0, 1));
        let a = Antichain::new(&p, [3]).unwrap();
        let sub = r.project(&a).unwrap();
        assert_eq!(r.lift(&sub), a);
        assert!(r.project(&Antichain::new(&p, [2]).unwrap()).is_none());
    }

    #[test]
    fn restrict_to_support_rejects_non_minimal() {
        assert!(diamond().restrict_to_support(&[1]).is_err());
    }
}
