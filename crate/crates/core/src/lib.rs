//! Antichain dynamics on root posets and the nonnesting to noncrossing bijection.

#![allow(clippy::needless_range_loop)]

pub mod ast;
pub mod dynamics;
pub mod error;
pub mod export;
pub mod lalanne_kreweras;
pub mod poset;
pub mod roots;
pub mod verify;
pub mod weyl;

pub use dynamics::{Operator, OrbitReport};
pub use error::{Error, Result};
pub use poset::{Antichain, RankedPoset, Restriction};
pub use roots::{CartanType, Root, RootPoset};
pub use weyl::{GroupKind, NoncrossingLattice, WeylElement, WeylGroup};
