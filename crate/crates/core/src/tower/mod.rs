//! The ultramatricial algebra S(Q) = lim Sₙ as a concrete tower of
//! block-diagonal matrix algebras.
//!
//! Level `n` is `Sₙ = ⊕ᵢ M_{p_{n,i}}`, where `p_{n,i}` counts the length-`n`
//! paths ending at `i`. The embedding θ sends block `i` to `c_{ji}`
//! diagonal copies of itself inside block `j`. Arithmetic happens at a
//! common level; equality in the limit is decided exactly.

mod bratteli;
mod element;
mod k0;
mod morita;

pub use bratteli::{bratteli, BratteliDiagram};
pub use element::{Tower, TowerElement};
pub use k0::{K0Class, K0Group, Positivity};
pub use morita::{morita_equivalent_stationary, MoritaVerdict, MORITA_VERTEX_LIMIT};
