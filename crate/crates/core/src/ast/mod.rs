//! The bijection `Θ_W` from antichains of `Φ⁺` to `NC(W, c)`.

pub mod diagram;
pub mod type_a;
pub mod type_d;
pub mod uniform;

pub use diagram::{Label, MatchingDiagram};
pub use type_a::{phi_diagram_a, psi_diagram, reflect_through_m, theta_a};
pub use type_d::{hat, theta_d_partial, xi_and_phi_d, HatImage, PartialTheta};
pub use uniform::Theta;
