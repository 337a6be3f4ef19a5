//! Exact computations around Whitehead's certain exact sequence
//!
//! `… → H_{n+1} --b--> Γ_n → π_n → H_n --b--> Γ_{n−1} → …`
//!
//! over the integers: Smith normal forms, finitely generated abelian groups
//! and their homs, Whitehead's quadratic functor Γ, `Ext¹` with explicit
//! extensions, and Γ-systems with their characteristic extensions, strong
//! morphisms and the classification of simply connected 4-dimensional
//! systems.
//!
//! ```
//! use whitehead::fgab::FgAbGroup;
//! use whitehead::gamma::gamma_group;
//!
//! let (g, _) = gamma_group(&FgAbGroup::of(0, &[2]));
//! assert_eq!(g, FgAbGroup::of(0, &[4]));
//! ```

pub mod error;
pub mod fgab;
pub mod fixtures;
pub mod gamma;
pub mod homalg;
pub mod intlinalg;
pub mod json;
pub mod wes;

pub use error::{Error, Result};
