//! Exhaustive verification suites over all antichains of a root poset.
//!
//! Each suite fans out over antichains on the current rayon pool and merges
//! failures in enumeration order, so the report does not depend on the
//! number of workers.

mod ast;
mod counting;
mod lk;
mod panyushev;
mod rowmotion;
mod structural;
mod type_d_cases;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dynamics::rowvacuation;
use crate::error::{Error, Result};
use crate::export::format_antichain;
use crate::poset::{Antichain, RankedPoset, Restriction};
use crate::roots::{CartanType, RootPoset};

pub use ast::{ast, hat_lemmas};
pub use counting::counting;
pub use lk::lalanne_kreweras;
pub use panyushev::{find_counterexample, panyushev};
pub use rowmotion::rowmotion;
pub use structural::{structural, structural_poset};
pub use type_d_cases::type_d_cases;

/// One violated check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub check: String,
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite_name: String,
    pub type_label: String,
    pub rank: usize,
    /// Number of antichains examined.
    pub checked_count: u64,
    pub failures: Vec<Failure>,
    /// Per-check tallies and case sizes.
    pub counts: BTreeMap<String, u64>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(suite_name: &str, t: CartanType) -> Self {
        VerificationReport {
            suite_name: suite_name.into(),
            type_label: t.to_string(),
            rank: t.rank(),
            checked_count: 0,
            failures: Vec::new(),
            counts: BTreeMap::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Combines two reports on the same suite and type.
    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.checked_count += other.checked_count;
        self.failures.extend(other.failures);
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self.elapsed += other.elapsed;
        self
    }

    pub fn summary(&self) -> String {
        format!(
            "{} {}: {} antichains, {} failures",
            self.suite_name,
            self.type_label,
            self.checked_count,
            self.failures.len()
        )
    }

    fn tally(&mut self, check: &str, n: u64) {
        *self.counts.entry(check.into()).or_default() += n;
    }
}

/// Runs `f` on a dedicated pool of `jobs` workers (`0` picks the default).
pub fn run_with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Argument(format!("cannot start {jobs} workers: {e}")))?;
    Ok(pool.install(f))
}

/// Collects failures and per-check counts for one antichain.
pub(crate) struct Checker<'a> {
    rp: &'a RootPoset,
    input: &'a Antichain,
    failures: Vec<Failure>,
    counts: BTreeMap<&'static str, u64>,
}

impl<'a> Checker<'a> {
    fn new(rp: &'a RootPoset, input: &'a Antichain) -> Self {
        Checker {
            rp,
            input,
            failures: Vec::new(),
            counts: BTreeMap::new(),
        }
    }

    /// Records one check; `expected`/`actual` are only rendered on failure.
    pub(crate) fn check<E: ToString, F: ToString>(
        &mut self,
        name: &'static str,
        ok: bool,
        expected: impl FnOnce() -> E,
        actual: impl FnOnce() -> F,
    ) {
        *self.counts.entry(name).or_default() += 1;
        if !ok {
            self.failures.push(Failure {
                check: name.into(),
                input: format_antichain(self.rp, self.input),
                expected: expected().to_string(),
                actual: actual().to_string(),
            });
        }
    }

    pub(crate) fn same(&mut self, name: &'static str, expected: &Antichain, actual: &Antichain) {
        let rp = self.rp;
        self.check(
            name,
            expected == actual,
            || format_antichain(rp, expected),
            || format_antichain(rp, actual),
        );
    }

    pub(crate) fn fail(&mut self, name: &'static str, error: &Error) {
        self.check(name, false, || "no error", || error.to_string());
    }
}

/// Applies `check` to every antichain in parallel and folds the results into `report`.
pub(crate) fn check_each(
    rp: &RootPoset,
    antichains: &[Antichain],
    report: &mut VerificationReport,
    check: impl Fn(&mut Checker) + Sync,
) {
    let results: Vec<(Vec<Failure>, BTreeMap<&'static str, u64>)> = antichains
        .par_iter()
        .map(|a| {
            let mut c = Checker::new(rp, a);
            check(&mut c);
            (c.failures, c.counts)
        })
        .collect();
    for (failures, counts) in results {
        report.failures.extend(failures);
        for (k, v) in counts {
            report.tally(k, v);
        }
    }
}

pub(crate) fn timed(f: impl FnOnce() -> Result<VerificationReport>) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = f()?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Each minimal element `p` with the subposet `P' = {q : q ≱ p}`.
pub(crate) fn maximal_parabolics(poset: &RankedPoset) -> Result<Vec<(usize, Restriction)>> {
    let minimal = poset.minimal().to_vec();
    minimal
        .iter()
        .map(|&p| {
            let rest: Vec<usize> = minimal.iter().copied().filter(|&q| q != p).collect();
            Ok((p, poset.restrict_to_support(&rest)?))
        })
        .collect()
}

/// `Rvac_{P'}` computed on the subposet and lifted back.
pub(crate) fn rvac_on(sub: &Restriction, a: &Antichain) -> Option<Antichain> {
    sub.project(a)
        .map(|b| sub.lift(&rowvacuation(&sub.poset, &b)))
}

pub(crate) fn with_element(a: &Antichain, p: usize) -> Antichain {
    let mut out = a.clone();
    out.bits_mut().insert(p);
    out
}

pub(crate) fn without_element(a: &Antichain, p: usize) -> Antichain {
    let mut out = a.clone();
    out.bits_mut().set(p, false);
    out
}

/// Number of linear extensions the structural suite compares rowmotion against.
pub const DEFAULT_EXTENSIONS: usize = 5;

/// Largest poset the structural suite runs on by default.
pub const STRUCTURAL_MAX_ROOTS: usize = 30;

/// A verification suite selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Panyushev,
    Rowmotion,
    Ast,
    TypeDCases,
    Hat,
    LalanneKreweras,
    Structural,
    Counting,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Panyushev,
        Suite::Rowmotion,
        Suite::Ast,
        Suite::TypeDCases,
        Suite::Hat,
        Suite::LalanneKreweras,
        Suite::Structural,
        Suite::Counting,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Panyushev => "panyushev",
            Suite::Rowmotion => "rowmotion",
            Suite::Ast => "ast",
            Suite::TypeDCases => "type-d-cases",
            Suite::Hat => "hat",
            Suite::LalanneKreweras => "lalanne-kreweras",
            Suite::Structural => "structural",
            Suite::Counting => "counting",
        }
    }

    /// Short command-line spelling accepted besides the name.
    pub fn alias(self) -> Option<&'static str> {
        match self {
            Suite::TypeDCases => Some("section6"),
            Suite::LalanneKreweras => Some("lk"),
            _ => None,
        }
    }

    /// Types the suite runs on when none is given.
    pub fn default_types(self, large: bool) -> Vec<CartanType> {
        let classical = || build_matrix(false).into_iter().filter(|t| t.is_classical());
        match self {
            Suite::Panyushev => classical().chain([CartanType::G2]).collect(),
            Suite::Rowmotion | Suite::Counting => build_matrix(large),
            Suite::Ast => nc_matrix(),
            Suite::TypeDCases => (4..=7).map(CartanType::D).collect(),
            Suite::Hat => (4..=6).map(CartanType::D).collect(),
            Suite::LalanneKreweras => (1..=7).map(CartanType::A).collect(),
            Suite::Structural => build_matrix(false)
                .into_iter()
                .filter(|t| RootPoset::new(*t).is_ok_and(|rp| rp.len() <= STRUCTURAL_MAX_ROOTS))
                .collect(),
        }
    }

    /// Whether the suite is defined for `t`, ignoring size limits.
    pub fn applies_to(self, t: CartanType) -> bool {
        match self {
            Suite::Ast => t.is_classical(),
            Suite::TypeDCases | Suite::Hat => t.family() == 'D' && t.rank() >= 4,
            Suite::LalanneKreweras => t.family() == 'A',
            _ => true,
        }
    }

    pub fn run(self, t: CartanType, seed: u64) -> Result<VerificationReport> {
        let rank_of = |family: char| {
            if t.family() == family {
                Ok(t.rank())
            } else {
                Err(Error::Argument(format!(
                    "the {} suite needs type {family}, not {t}",
                    self.name()
                )))
            }
        };
        match self {
            Suite::Panyushev => panyushev(t),
            Suite::Rowmotion => rowmotion(t),
            Suite::Ast => ast(t),
            Suite::TypeDCases => type_d_cases(rank_of('D')?),
            Suite::Hat => hat_lemmas(rank_of('D')?),
            Suite::LalanneKreweras => lalanne_kreweras(rank_of('A')?),
            Suite::Structural => structural(t, DEFAULT_EXTENSIONS, seed),
            Suite::Counting => counting(t),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s || suite.alias() == Some(s))
            .ok_or_else(|| Error::parse(s, "unknown suite"))
    }
}

/// Types exercised by the full build matrix.
///
/// The duality suites use `A_1..A_7`, `B_2..B_7`, `C_2..C_7`, `D_4..D_7`
/// and the exceptional types; `E_7` and `E_8` only with `large`.
pub fn build_matrix(large: bool) -> Vec<CartanType> {
    let mut out: Vec<CartanType> = (1..=7).map(CartanType::A).collect();
    out.extend((2..=7).map(CartanType::B));
    out.extend((2..=7).map(CartanType::C));
    out.extend((4..=7).map(CartanType::D));
    out.extend([CartanType::G2, CartanType::F4, CartanType::E(6)]);
    if large {
        out.extend([CartanType::E(7), CartanType::E(8)]);
    }
    out
}

/// Types small enough for suites that build `NC(W, c)`.
pub fn nc_matrix() -> Vec<CartanType> {
    let mut out: Vec<CartanType> = (1..=5).map(CartanType::A).collect();
    out.extend([CartanType::D(4), CartanType::D(5)]);
    out
}
