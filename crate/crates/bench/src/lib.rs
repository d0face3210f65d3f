//! Shared fixtures for the benchmarks.

use rowvac::{Antichain, CartanType, RootPoset};

/// A root poset with all of its antichains.
pub struct Fixture {
    pub rp: RootPoset,
    pub antichains: Vec<Antichain>,
}

impl Fixture {
    pub fn new(t: CartanType) -> Self {
        let rp = RootPoset::new(t).expect("benchmark types are implemented");
        let antichains = rp.poset().antichains();
        Fixture { rp, antichains }
    }
}

/// Types the dynamics benchmarks sweep over.
pub fn dynamics_types() -> [CartanType; 4] {
    [
        CartanType::A(7),
        CartanType::C(6),
        CartanType::D(6),
        CartanType::E(6),
    ]
}
