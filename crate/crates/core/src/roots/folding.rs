//! Folding maps between the classical root posets.
//!
//! `A_{2n-1} → C_n` is the quotient by the vertical-axis reflection, with
//! unfolding `ι` in the other direction; `D_n → C_{n-1}` is the quotient by the
//! diagram automorphism `δ`; and `B_n ≅ C_n` as posets.

use crate::error::{Error, Result};
use crate::poset::Antichain;

use super::RootPoset;

/// Nonzero ambient coordinates as 1-based `(index, value)` pairs.
fn ambient_support(v: &[i32]) -> Vec<(usize, i32)> {
    v.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i + 1, c))
        .collect()
}

/// `Φ⁺(A_{2n-1})` folded onto `Φ⁺(C_n)`.
#[derive(Clone, Debug)]
pub struct TypeCFolding {
    pub c: RootPoset,
    pub a: RootPoset,
    orbit: Vec<Vec<usize>>,
    quotient: Vec<usize>,
}

impl TypeCFolding {
    pub fn new(n: usize) -> Result<Self> {
        let c = RootPoset::type_c(n)?;
        let a = RootPoset::type_a(2 * n - 1)?;
        let m = 2 * n + 1;
        let mut orbit = Vec::with_capacity(c.len());
        let mut quotient = vec![usize::MAX; a.len()];
        for x in 0..c.len() {
            let intervals = match ambient_support(&c.root(x).ambient)[..] {
                [(i, 1), (j, -1)] => vec![(i, j), (m - j, m - i)],
                [(i, 1), (j, 1)] => vec![(i, m - j), (j, m - i)],
                [(i, 2)] => vec![(i, m - i)],
                _ => {
                    return Err(Error::Invariant(format!(
                        "unexpected C{n} root {:?}",
                        c.root(x)
                    )))
                }
            };
            let mut lifted = intervals
                .into_iter()
                .map(|(i, j)| a.index_of_interval(i, j))
                .collect::<Result<Vec<_>>>()?;
            lifted.sort_unstable();
            for &y in &lifted {
                quotient[y] = x;
            }
            orbit.push(lifted);
        }
        if quotient.contains(&usize::MAX) {
            return Err(Error::Invariant(
                "unfolding does not cover the type A poset".into(),
            ));
        }
        Ok(TypeCFolding {
            c,
            a,
            orbit,
            quotient,
        })
    }

    /// The η-orbit of type-A elements lying over a type-C element.
    pub fn orbit(&self, x: usize) -> &[usize] {
        &self.orbit[x]
    }

    pub fn quotient(&self, y: usize) -> usize {
        self.quotient[y]
    }

    /// Unfolding `ι` of an arbitrary subset, returned sorted.
    pub fn iota(&self, xs: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut out: Vec<usize> = xs
            .into_iter()
            .flat_map(|x| self.orbit[x].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn iota_antichain(&self, a: &Antichain) -> Result<Antichain> {
        self.a.antichain(self.iota(a.iter()))
    }

    /// Inverse of `ι` on η-symmetric antichains.
    pub fn fold_antichain(&self, b: &Antichain) -> Result<Antichain> {
        if self.a.eta_antichain(b)? != *b {
            return Err(Error::Precondition(
                "antichain is not symmetric under eta".into(),
            ));
        }
        let mut xs: Vec<usize> = b.iter().map(|y| self.quotient[y]).collect();
        xs.dedup();
        self.c.antichain(xs)
    }
}

/// `Φ⁺(D_n)` folded onto `Φ⁺(C_{n-1})`, together with the unfolding of the latter into `Φ⁺(A_{2n-3})`.
#[derive(Clone, Debug)]
pub struct TypeDFolding {
    pub d: RootPoset,
    pub unfold: TypeCFolding,
    gamma: Vec<usize>,
    preimage: Vec<Vec<usize>>,
}

impl TypeDFolding {
    pub fn new(n: usize) -> Result<Self> {
        let d = RootPoset::type_d(n)?;
        let unfold = TypeCFolding::new(n - 1)?;
        let c = &unfold.c;
        let target = |x: usize| -> Option<Vec<i32>> {
            let mut v = vec![0; n - 1];
            match ambient_support(&d.root(x).ambient)[..] {
                [(i, 1), (j, _)] if j == n => {
                    v[i - 1] += 1;
                    v[n - 2] += 1;
                }
                [(i, 1), (j, -1)] => {
                    v[i - 1] = 1;
                    v[j - 1] = -1;
                }
                [(i, 1), (j, 1)] => {
                    v[i - 1] += 1;
                    v[j - 2] += 1;
                }
                _ => return None,
            }
            Some(v)
        };
        let mut gamma = Vec::with_capacity(d.len());
        let mut preimage = vec![Vec::new(); c.len()];
        for x in 0..d.len() {
            let y = target(x)
                .and_then(|v| c.index_of_ambient(&v))
                .ok_or_else(|| {
                    Error::Invariant(format!("no folding image for D{n} root {:?}", d.root(x)))
                })?;
            gamma.push(y);
            preimage[y].push(x);
        }
        Ok(TypeDFolding {
            d,
            unfold,
            gamma,
            preimage,
        })
    }

    pub fn c(&self) -> &RootPoset {
        &self.unfold.c
    }

    pub fn gamma(&self, x: usize) -> usize {
        self.gamma[x]
    }

    pub fn preimage(&self, y: usize) -> &[usize] {
        &self.preimage[y]
    }

    /// Image of a subset of `Φ⁺(D_n)`, sorted and deduplicated.
    pub fn gamma_set(&self, xs: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut out: Vec<usize> = xs.into_iter().map(|x| self.gamma[x]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn gamma_antichain(&self, a: &Antichain) -> Result<Antichain> {
        self.c().antichain(self.gamma_set(a.iter()))
    }

    pub fn preimage_set(&self, ys: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut out: Vec<usize> = ys
            .into_iter()
            .flat_map(|y| self.preimage[y].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }
}

/// A poset isomorphism `Φ⁺(B_n) → Φ⁺(C_n)`, as an element map.
pub fn b_to_c_isomorphism(b: &RootPoset, c: &RootPoset) -> Result<Vec<usize>> {
    let n = b.rank();
    if b.cartan_type().family() != 'B' || c.cartan_type().family() != 'C' || c.rank() != n {
        return Err(Error::Argument(
            "expected root posets of types B_n and C_n".into(),
        ));
    }
    (0..b.len())
        .map(|x| {
            let mut v = vec![0; n];
            match ambient_support(&b.root(x).ambient)[..] {
                [(i, 1), (j, -1)] => {
                    v[i - 1] = 1;
                    v[j - 1] = -1;
                }
                [(i, 1)] => {
                    v[i - 1] += 1;
                    v[n - 1] += 1;
                }
                [(i, 1), (j, 1)] => {
                    v[i - 1] += 1;
                    v[j - 2] += 1;
                }
                _ => {
                    return Err(Error::Invariant(format!(
                        "unexpected B{n} root {:?}",
                        b.root(x)
                    )))
                }
            }
            c.index_of_ambient(&v)
                .ok_or_else(|| Error::Invariant(format!("B{n} root {:?} has no image", b.root(x))))
        })
        .collect()
}
