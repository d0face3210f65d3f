//! Positive-root posets of the finite crystallographic root systems.
//!
//! Roots are generated from the Gram matrix of the simple roots by closing
//! under root strings, so every type goes through the same code path. The
//! classical types additionally carry ambient coordinates in the standard
//! realization (`e_i - e_j`, `e_i + e_j`, `2e_i`, `e_i`).

mod counting;
mod folding;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{Antichain, RankedPoset};

pub use counting::{
    catalan, degrees, narayana, narayana_by_enumeration, reducible_catalan, reducible_narayana,
};
pub use folding::{b_to_c_isomorphism, TypeCFolding, TypeDFolding};

/// Cartan–Killing type of an irreducible root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    /// Validates a family letter and rank, e.g. `('D', 6)`.
    pub fn new(family: char, rank: usize) -> Result<Self> {
        let t = match family.to_ascii_uppercase() {
            'A' => CartanType::A(rank),
            'B' => CartanType::B(rank),
            'C' => CartanType::C(rank),
            'D' => CartanType::D(rank),
            'E' => CartanType::E(rank),
            'F' => CartanType::F4,
            'G' => CartanType::G2,
            other => {
                return Err(Error::Argument(format!(
                    "unknown root system family `{other}`"
                )))
            }
        };
        let ok = match t {
            CartanType::A(n) => n >= 1,
            CartanType::B(n) | CartanType::C(n) => n >= 2,
            CartanType::D(n) => n >= 4,
            CartanType::E(n) => (6..=8).contains(&n),
            CartanType::F4 => rank == 4,
            CartanType::G2 => rank == 2,
        };
        if ok {
            Ok(t)
        } else {
            Err(Error::Argument(format!(
                "rank {rank} is not valid for type {}",
                family.to_ascii_uppercase()
            )))
        }
    }

    pub fn family(self) -> char {
        match self {
            CartanType::A(_) => 'A',
            CartanType::B(_) => 'B',
            CartanType::C(_) => 'C',
            CartanType::D(_) => 'D',
            CartanType::E(_) => 'E',
            CartanType::F4 => 'F',
            CartanType::G2 => 'G',
        }
    }

    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n)
            | CartanType::B(n)
            | CartanType::C(n)
            | CartanType::D(n)
            | CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    /// Coxeter number from the classification table.
    pub fn coxeter_number(self) -> usize {
        match self {
            CartanType::A(n) => n + 1,
            CartanType::B(n) | CartanType::C(n) => 2 * n,
            CartanType::D(n) => 2 * n - 2,
            CartanType::E(6) => 12,
            CartanType::E(7) => 18,
            CartanType::E(_) => 30,
            CartanType::F4 => 12,
            CartanType::G2 => 6,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            CartanType::A(_) | CartanType::B(_) | CartanType::C(_) | CartanType::D(_)
        )
    }

    /// The exceptional types, smallest first.
    pub fn exceptional() -> [CartanType; 5] {
        [
            CartanType::G2,
            CartanType::F4,
            CartanType::E(6),
            CartanType::E(7),
            CartanType::E(8),
        ]
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family(), self.rank())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::parse(s, "empty type label"))?;
        let digits = chars.as_str().trim_start_matches('_');
        let rank = digits
            .parse::<usize>()
            .map_err(|_| Error::parse(s, "expected a family letter followed by a rank, e.g. D6"))?;
        CartanType::new(family, rank)
    }
}

/// A positive root in simple-root coordinates, with ambient coordinates for classical types.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub coeffs: Vec<i32>,
    #[serde(default)]
    pub ambient: Vec<i32>,
}

impl Root {
    pub fn height(&self) -> usize {
        self.coeffs.iter().sum::<i32>() as usize
    }
}

/// The positive-root poset of an irreducible root system.
#[derive(Clone, Debug)]
pub struct RootPoset {
    cartan_type: CartanType,
    poset: RankedPoset,
    roots: Vec<Root>,
    gram: Vec<Vec<i32>>,
    coxeter_number: usize,
    neg_w0: Vec<usize>,
    subset_l: Option<Vec<usize>>,
    subset_s: Option<Vec<usize>>,
    by_coeffs: HashMap<Vec<i32>, usize>,
    by_ambient: HashMap<Vec<i32>, usize>,
}

fn unit(dim: usize, i: usize, scale: i32) -> Vec<i32> {
    let mut v = vec![0; dim];
    v[i] = scale;
    v
}

/// Ambient coordinates of the simple roots of a classical type.
fn classical_simple_roots(t: CartanType) -> Vec<Vec<i32>> {
    let (dim, n) = match t {
        CartanType::A(n) => (n + 1, n),
        CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => (n, n),
        _ => unreachable!("exceptional types have no ambient realization here"),
    };
    let mut simple: Vec<Vec<i32>> = (0..n.min(dim - 1))
        .map(|i| {
            let mut v = unit(dim, i, 1);
            v[i + 1] = -1;
            v
        })
        .collect();
    match t {
        CartanType::A(_) => {}
        CartanType::B(_) => simple.push(unit(dim, n - 1, 1)),
        CartanType::C(_) => simple.push(unit(dim, n - 1, 2)),
        CartanType::D(_) => {
            let mut v = unit(dim, n - 1, 1);
            v[n - 2] = 1;
            simple.push(v);
        }
        _ => unreachable!(),
    }
    simple
}

fn dot(u: &[i32], v: &[i32]) -> i32 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Gram matrices of the exceptional simple roots (Bourbaki numbering).
fn exceptional_gram(t: CartanType) -> Vec<Vec<i32>> {
    match t {
        CartanType::G2 => vec![vec![2, -3], vec![-3, 6]],
        CartanType::F4 => vec![
            vec![4, -2, 0, 0],
            vec![-2, 4, -2, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ],
        CartanType::E(r) => {
            let mut g = vec![vec![0; r]; r];
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
            let mut edges = vec![(1, 3), (2, 4), (3, 4)];
            edges.extend((4..r).map(|k| (k, k + 1)));
            for (a, b) in edges {
                g[a - 1][b - 1] = -1;
                g[b - 1][a - 1] = -1;
            }
            g
        }
        _ => unreachable!("classical types use ambient simple roots"),
    }
}

/// `<β, α_i^∨> = 2(β, α_i)/(α_i, α_i)` for β in simple-root coordinates.
fn pairing(gram: &[Vec<i32>], beta: &[i32], i: usize) -> i32 {
    let num: i32 = beta
        .iter()
        .zip(gram)
        .map(|(b, row)| b * row[i])
        .sum::<i32>()
        * 2;
    debug_assert_eq!(num % gram[i][i], 0);
    num / gram[i][i]
}

fn reflect(gram: &[Vec<i32>], beta: &mut [i32], i: usize) {
    let k = pairing(gram, beta, i);
    beta[i] -= k;
}

/// Closes the simple roots under root strings, height by height.
fn positive_roots(gram: &[Vec<i32>]) -> Result<Vec<Vec<i32>>> {
    let r = gram.len();
    for i in 0..r {
        for j in 0..r {
            if (2 * gram[j][i]) % gram[i][i] != 0 {
                return Err(Error::Invariant(format!(
                    "Gram matrix is not crystallographic at ({j}, {i})"
                )));
            }
        }
    }
    let mut roots: Vec<Vec<i32>> = (0..r).map(|i| unit(r, i, 1)).collect();
    let mut known: std::collections::HashSet<Vec<i32>> = roots.iter().cloned().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..r {
                // p = length of the α_i-string below β.
                let mut p = 0;
                let mut v = beta.clone();
                loop {
                    v[i] -= 1;
                    if known.contains(&v) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing(gram, beta, i) > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(roots)
}

impl RootPoset {
    /// Builds the root poset of any supported type.
    pub fn new(t: CartanType) -> Result<Self> {
        let t = CartanType::new(t.family(), t.rank())?;
        let r = t.rank();
        let (gram, simple_ambient) = if t.is_classical() {
            let simple = classical_simple_roots(t);
            let gram = (0..r)
                .map(|i| (0..r).map(|j| dot(&simple[i], &simple[j])).collect())
                .collect();
            (gram, Some(simple))
        } else {
            (exceptional_gram(t), None)
        };
        let mut coeffs = positive_roots(&gram)?;
        coeffs.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let roots: Vec<Root> = coeffs
            .into_iter()
            .map(|c| {
                let ambient = match &simple_ambient {
                    Some(simple) => {
                        let mut v = vec![0; simple[0].len()];
                        for (k, s) in c.iter().zip(simple) {
                            for (x, y) in v.iter_mut().zip(s) {
                                *x += k * y;
                            }
                        }
                        v
                    }
                    None => Vec::new(),
                };
                Root { coeffs: c, ambient }
            })
            .collect();

        let poset = RankedPoset::from_relation(roots.len(), |x, y| {
            roots[x]
                .coeffs
                .iter()
                .zip(&roots[y].coeffs)
                .all(|(a, b)| a <= b)
        })?;

        let coxeter_number = poset.num_ranks() + 1;
        if coxeter_number != t.coxeter_number() || 2 * roots.len() != r * coxeter_number {
            return Err(Error::Invariant(format!(
                "{t}: generated {} roots with Coxeter number {coxeter_number}, expected h = {}",
                roots.len(),
                t.coxeter_number()
            )));
        }

        let by_coeffs = roots
            .iter()
            .enumerate()
            .map(|(i, x)| (x.coeffs.clone(), i))
            .collect();
        let by_ambient = if simple_ambient.is_some() {
            roots
                .iter()
                .enumerate()
                .map(|(i, x)| (x.ambient.clone(), i))
                .collect()
        } else {
            HashMap::new()
        };
        let mut rp = RootPoset {
            cartan_type: t,
            poset,
            roots,
            gram,
            coxeter_number,
            neg_w0: Vec::new(),
            subset_l: None,
            subset_s: None,
            by_coeffs,
            by_ambient,
        };
        rp.neg_w0 = rp.compute_neg_w0()?;
        rp.compute_subsets();
        Ok(rp)
    }

    pub fn type_a(n: usize) -> Result<Self> {
        Self::new(CartanType::new('A', n)?)
    }

    pub fn type_b(n: usize) -> Result<Self> {
        Self::new(CartanType::new('B', n)?)
    }

    pub fn type_c(n: usize) -> Result<Self> {
        Self::new(CartanType::new('C', n)?)
    }

    pub fn type_d(n: usize) -> Result<Self> {
        Self::new(CartanType::new('D', n)?)
    }

    /// The longest element as a reduced word, found by walking `2ρ` to `-2ρ`;
    /// then `-w₀` is applied to every root directly.
    fn compute_neg_w0(&self) -> Result<Vec<usize>> {
        let r = self.rank();
        let mut v = vec![0i32; r];
        for root in &self.roots {
            for (x, c) in v.iter_mut().zip(&root.coeffs) {
                *x += c;
            }
        }
        let mut word = Vec::new();
        while let Some(i) = (0..r).find(|&i| pairing(&self.gram, &v, i) > 0) {
            reflect(&self.gram, &mut v, i);
            word.push(i);
        }
        if word.len() != self.roots.len() {
            return Err(Error::Invariant(format!(
                "longest element has length {}, expected {}",
                word.len(),
                self.roots.len()
            )));
        }
        self.roots
            .iter()
            .map(|root| {
                let mut beta = root.coeffs.clone();
                for &i in &word {
                    reflect(&self.gram, &mut beta, i);
                }
                let neg: Vec<i32> = beta.iter().map(|x| -x).collect();
                self.by_coeffs
                    .get(&neg)
                    .copied()
                    .ok_or_else(|| Error::Invariant("-w0 does not preserve positive roots".into()))
            })
            .collect()
    }

    fn compute_subsets(&mut self) {
        let find = |rp: &RootPoset, pred: &dyn Fn(&[i32]) -> bool| -> Vec<usize> {
            (0..rp.roots.len())
                .filter(|&x| pred(&rp.roots[x].ambient))
                .collect()
        };
        // Nonzero ambient entries as (index, value) pairs.
        fn support(v: &[i32]) -> Vec<(usize, i32)> {
            v.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i, c))
                .collect()
        }
        match self.cartan_type {
            CartanType::A(n) => {
                let ground = n + 1;
                self.subset_l = Some(find(self, &|v| {
                    let s = support(v);
                    s[0].0 + s[1].0 == ground - 1
                }));
                if ground % 2 == 0 {
                    let k = ground / 2;
                    // [i, j] with i = k or j = k + 1 (1-based).
                    self.subset_s = Some(find(self, &|v| {
                        let s = support(v);
                        s[0].0 + 1 == k || s[1].0 + 1 == k + 1
                    }));
                }
            }
            CartanType::B(_) => {
                self.subset_l = Some(find(self, &|v| support(v).len() == 2));
                self.subset_s = Some(find(self, &|v| support(v).len() == 1));
            }
            CartanType::C(n) => {
                self.subset_l = Some(find(self, &|v| support(v).len() == 1));
                self.subset_s = Some(find(self, &|v| v[n - 1] > 0));
            }
            CartanType::D(n) => {
                // Preimages under folding to C_{n-1} of the long roots and of the
                // roots with two-element fibres; verified against the folding map in tests.
                self.subset_l = Some(find(self, &|v| {
                    let s = support(v);
                    (s[1].0 == s[0].0 + 1 && s[1].1 > 0 && s[1].0 < n - 1)
                        || (s[0].0 == n - 2 && s[1].0 == n - 1)
                }));
                self.subset_s = Some(find(self, &|v| v[n - 1] != 0));
            }
            _ => {}
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn poset(&self) -> &RankedPoset {
        &self.poset
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, x: usize) -> &Root {
        &self.roots[x]
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    /// Element index of the simple root `α_i`, with `i` 1-based.
    pub fn simple(&self, i: usize) -> usize {
        assert!(
            (1..=self.rank()).contains(&i),
            "simple root index {i} out of range"
        );
        i - 1
    }

    /// 1-based simple-root label of a minimal element.
    pub fn simple_label(&self, x: usize) -> Option<usize> {
        (x < self.rank()).then_some(x + 1)
    }

    /// Squared length `(α, α)` in the normalisation of the Gram matrix.
    pub fn norm(&self, x: usize) -> i32 {
        let c = &self.roots[x].coeffs;
        c.iter()
            .zip(&self.gram)
            .map(|(a, row)| a * c.iter().zip(row).map(|(b, g)| b * g).sum::<i32>())
            .sum()
    }

    /// Whether `x` is a long root; every root is long in simply laced types.
    pub fn is_long(&self, x: usize) -> bool {
        self.norm(x) == self.norm(self.highest_root())
    }

    pub fn highest_root(&self) -> usize {
        self.roots.len() - 1
    }

    /// Cartan matrix `A[i][j] = <α_i, α_j^∨>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let r = self.rank();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| pairing(&self.gram, &unit(r, i, 1), j))
                    .collect()
            })
            .collect()
    }

    pub fn index_of_coeffs(&self, coeffs: &[i32]) -> Option<usize> {
        self.by_coeffs.get(coeffs).copied()
    }

    pub fn index_of_ambient(&self, ambient: &[i32]) -> Option<usize> {
        self.by_ambient.get(ambient).copied()
    }

    /// The involutive automorphism `α ↦ -w₀(α)`.
    pub fn neg_w0(&self, x: usize) -> usize {
        self.neg_w0[x]
    }

    pub fn neg_w0_map(&self) -> &[usize] {
        &self.neg_w0
    }

    pub fn subset_l(&self) -> Option<&[usize]> {
        self.subset_l.as_deref()
    }

    pub fn subset_s(&self) -> Option<&[usize]> {
        self.subset_s.as_deref()
    }

    fn require(&self, family: char, what: &str) -> Result<usize> {
        if self.cartan_type.family() == family {
            Ok(self.rank())
        } else {
            Err(Error::Argument(format!(
                "{what} is only defined in type {family}, not {}",
                self.cartan_type
            )))
        }
    }

    /// Number of points `n` in type A, where roots are intervals `[i, j]` of `[n]`.
    pub fn ground_size(&self) -> Result<usize> {
        Ok(self.require('A', "interval notation")? + 1)
    }

    /// The interval `[i, j]` (1-based, `i < j`) of a type-A root `e_i - e_j`.
    pub fn interval(&self, x: usize) -> Result<(usize, usize)> {
        self.require('A', "interval notation")?;
        let c = &self.roots[x].coeffs;
        let first = c.iter().position(|&k| k != 0).unwrap();
        let last = c.iter().rposition(|&k| k != 0).unwrap();
        Ok((first + 1, last + 2))
    }

    pub fn index_of_interval(&self, i: usize, j: usize) -> Result<usize> {
        let ground = self.ground_size()?;
        if !(1 <= i && i < j && j <= ground) {
            return Err(Error::Argument(format!(
                "[{i},{j}] is not a root of A{}",
                ground - 1
            )));
        }
        let mut v = vec![0; ground];
        v[i - 1] = 1;
        v[j - 1] = -1;
        Ok(self.by_ambient[&v])
    }

    /// Reflection of the type-A poset about its vertical axis.
    pub fn eta(&self, x: usize) -> Result<usize> {
        let ground = self.ground_size()?;
        let (i, j) = self.interval(x)?;
        self.index_of_interval(ground + 1 - j, ground + 1 - i)
    }

    /// The type-D diagram automorphism: flips the sign of the `e_n` coordinate.
    pub fn delta(&self, x: usize) -> Result<usize> {
        let n = self.require('D', "delta")?;
        let mut v = self.roots[x].ambient.clone();
        v[n - 1] = -v[n - 1];
        Ok(self.by_ambient[&v])
    }

    pub fn eta_antichain(&self, a: &Antichain) -> Result<Antichain> {
        self.ground_size()?;
        Ok(a.map(|x| self.eta(x).unwrap()))
    }

    pub fn delta_antichain(&self, a: &Antichain) -> Result<Antichain> {
        self.require('D', "delta")?;
        Ok(a.map(|x| self.delta(x).unwrap()))
    }

    pub fn neg_w0_antichain(&self, a: &Antichain) -> Antichain {
        a.map(|x| self.neg_w0[x])
    }

    /// Validates and builds an antichain from element indices.
    pub fn antichain(&self, elements: impl IntoIterator<Item = usize>) -> Result<Antichain> {
        Antichain::new(&self.poset, elements)
    }

    /// Type-A convenience: an antichain from 1-based intervals.
    pub fn antichain_of_intervals(&self, intervals: &[(usize, usize)]) -> Result<Antichain> {
        let xs = intervals
            .iter()
            .map(|&(i, j)| self.index_of_interval(i, j))
            .collect::<Result<Vec<_>>>()?;
        self.antichain(xs)
    }

    /// Whether `a` meets `subset`.
    pub fn contains_any(&self, a: &Antichain, subset: &[usize]) -> bool {
        subset.iter().any(|&x| a.contains(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_types() {
        assert_eq!("D6".parse::<CartanType>().unwrap(), CartanType::D(6));
        assert_eq!("e8".parse::<CartanType>().unwrap(), CartanType::E(8));
        assert_eq!(CartanType::F4.to_string(), "F4");
        assert!("D3".parse::<CartanType>().is_err());
        assert!("E9".parse::<CartanType>().is_err());
        assert!("X2".parse::<CartanType>().is_err());
        assert!(CartanType::new('A', 0).is_err());
        assert!(CartanType::new('C', 1).is_err());
    }

    #[test]
    fn sizes_and_coxeter_numbers() {
        let cases = [
            (CartanType::A(2), 3, 3),
            (CartanType::A(3), 6, 4),
            (CartanType::C(2), 4, 4),
            (CartanType::B(3), 9, 6),
            (CartanType::D(4), 12, 6),
            (CartanType::G2, 6, 6),
            (CartanType::F4, 24, 12),
            (CartanType::E(6), 36, 12),
            (CartanType::E(7), 63, 18),
            (CartanType::E(8), 120, 30),
        ];
        for (t, size, h) in cases {
            let rp = RootPoset::new(t).unwrap();
            assert_eq!(rp.len(), size, "{t}");
            assert_eq!(rp.coxeter_number(), h, "{t}");
            assert_eq!(rp.poset().max_rank(), Some(h - 2), "{t}");
            assert_eq!(rp.poset().maximal(), vec![rp.highest_root()], "{t}");
            assert_eq!(rp.poset().minimal().len(), rp.rank(), "{t}");
        }
    }

    #[test]
    fn type_a3_ranks() {
        let rp = RootPoset::type_a(3).unwrap();
        let sizes: Vec<usize> = (0..3).map(|i| rp.poset().level(i).len()).collect();
        assert_eq!(sizes, vec![3, 2, 1]);
    }

    #[test]
    fn simple_roots_come_first() {
        let rp = RootPoset::type_d(5).unwrap();
        for i in 1..=5 {
            let mut c = vec![0; 5];
            c[i - 1] = 1;
            assert_eq!(rp.index_of_coeffs(&c), Some(rp.simple(i)));
        }
        assert_eq!(rp.root(rp.simple(5)).ambient, vec![0, 0, 0, 1, 1]);
    }

    #[test]
    fn cartan_matrices() {
        let g2 = RootPoset::new(CartanType::G2).unwrap();
        assert_eq!(g2.cartan_matrix(), vec![vec![2, -1], vec![-3, 2]]);
        let b2 = RootPoset::type_b(2).unwrap();
        let c2 = RootPoset::type_c(2).unwrap();
        let transpose = |m: Vec<Vec<i32>>| {
            (0..2)
                .map(|i| (0..2).map(|j| m[j][i]).collect())
                .collect::<Vec<Vec<i32>>>()
        };
        assert_eq!(b2.cartan_matrix(), transpose(c2.cartan_matrix()));
    }

    #[test]
    fn type_d_highest_root() {
        let rp = RootPoset::type_d(6).unwrap();
        assert_eq!(rp.root(rp.highest_root()).ambient, vec![1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn intervals_and_eta() {
        let rp = RootPoset::type_a(9).unwrap();
        let x = rp.index_of_interval(1, 3).unwrap();
        assert_eq!(rp.interval(rp.eta(x).unwrap()).unwrap(), (8, 10));
        for x in 0..rp.len() {
            assert_eq!(rp.eta(rp.eta(x).unwrap()).unwrap(), x);
            let fixed = rp.eta(x).unwrap() == x;
            assert_eq!(fixed, rp.subset_l().unwrap().contains(&x));
        }
        assert_eq!(rp.subset_l().unwrap().len(), 5);
        assert_eq!(rp.subset_s().unwrap().len(), 9);
        assert!(rp.eta(0).is_ok());
        assert!(RootPoset::type_d(4).unwrap().eta(0).is_err());
    }

    #[test]
    fn subset_sizes() {
        let c5 = RootPoset::type_c(5).unwrap();
        assert_eq!(c5.subset_l().unwrap().len(), 5);
        assert_eq!(c5.subset_s().unwrap().len(), 5);
        let d6 = RootPoset::type_d(6).unwrap();
        assert_eq!(d6.subset_l().unwrap().len(), 6);
        assert_eq!(d6.subset_s().unwrap().len(), 10);
        assert!(RootPoset::new(CartanType::F4).unwrap().subset_l().is_none());
    }

    #[test]
    fn delta_on_d6() {
        let rp = RootPoset::type_d(6).unwrap();
        let e1_minus_e6 = rp.index_of_ambient(&[1, 0, 0, 0, 0, -1]).unwrap();
        let e1_plus_e6 = rp.index_of_ambient(&[1, 0, 0, 0, 0, 1]).unwrap();
        let e1_minus_e2 = rp.index_of_ambient(&[1, -1, 0, 0, 0, 0]).unwrap();
        assert_eq!(rp.delta(e1_minus_e6).unwrap(), e1_plus_e6);
        assert_eq!(rp.delta(e1_minus_e2).unwrap(), e1_minus_e2);
        for x in 0..rp.len() {
            assert_eq!(rp.delta(rp.delta(x).unwrap()).unwrap(), x);
        }
    }

    fn is_automorphism(p: &RankedPoset, f: &dyn Fn(usize) -> usize) -> bool {
        (0..p.size()).all(|x| (0..p.size()).all(|y| p.leq(x, y) == p.leq(f(x), f(y))))
    }

    #[test]
    fn neg_w0_matches_diagram_automorphisms() {
        for n in 1..=7 {
            let rp = RootPoset::type_a(n).unwrap();
            for x in 0..rp.len() {
                assert_eq!(rp.neg_w0(x), rp.eta(x).unwrap());
            }
        }
        for n in 4..=7 {
            let rp = RootPoset::type_d(n).unwrap();
            for x in 0..rp.len() {
                let expected = if n % 2 == 1 { rp.delta(x).unwrap() } else { x };
                assert_eq!(rp.neg_w0(x), expected, "D{n}");
            }
        }
        for t in [
            CartanType::B(4),
            CartanType::C(3),
            CartanType::G2,
            CartanType::F4,
            CartanType::E(7),
            CartanType::E(8),
        ] {
            let rp = RootPoset::new(t).unwrap();
            assert!((0..rp.len()).all(|x| rp.neg_w0(x) == x), "{t}");
        }
        // E6 has a nontrivial -w0: the diagram flip.
        let e6 = RootPoset::new(CartanType::E(6)).unwrap();
        assert_eq!(e6.neg_w0(e6.simple(1)), e6.simple(6));
        assert_eq!(e6.neg_w0(e6.simple(2)), e6.simple(2));
        for t in [CartanType::E(6), CartanType::D(5), CartanType::A(4)] {
            let rp = RootPoset::new(t).unwrap();
            assert!(is_automorphism(rp.poset(), &|x| rp.neg_w0(x)));
            assert!((0..rp.len()).all(|x| rp.neg_w0(rp.neg_w0(x)) == x));
        }
    }

    #[test]
    fn antichain_of_intervals_validates() {
        let rp = RootPoset::type_a(3).unwrap();
        assert!(rp.antichain_of_intervals(&[(1, 3), (3, 4)]).is_ok());
        assert!(rp.antichain_of_intervals(&[(1, 3), (1, 2)]).is_err());
        assert!(rp.antichain_of_intervals(&[(1, 5)]).is_err());
    }

    #[test]
    fn long_roots() {
        let count = |t: CartanType| {
            let rp = RootPoset::new(t).unwrap();
            (0..rp.len()).filter(|&x| rp.is_long(x)).count()
        };
        assert_eq!(count(CartanType::B(3)), 6);
        assert_eq!(count(CartanType::C(3)), 3);
        assert_eq!(count(CartanType::G2), 3);
        assert_eq!(count(CartanType::F4), 12);
        assert_eq!(count(CartanType::D(4)), 12);
    }
}
