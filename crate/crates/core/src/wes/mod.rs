//! Γ-systems, the exact sequence they determine, and maps between them.

mod complex;
mod design;
mod four;
mod sequence;
mod splitting;
mod strong;
mod system;

pub use complex::{homology, ChainComplex, Homology};
pub use design::Design;
pub use four::{classify4, Classification, FourDimSystem, Witness};
pub use sequence::{
    derive_wes, derive_wes_checked, derive_wes_with, pi_class, pi_sequence, pi_sequence_class, WesDegree,
    WhiteheadSequence, ROBUSTNESS_SEEDS,
};
pub use splitting::{
    beta_matrix_decomposition, characteristic_extension, choose_splitting, phi_on_boundary,
    Decomposition, SplittingChoice,
};
pub use strong::{
    check_ladder, check_strong, Ladder, LadderCondition, LadderReport, LadderViolation,
    StrongDegree, StrongReport,
};
pub use system::{validate_system, Axiom, GammaSystem, Level, ValidationReport, Violation};
