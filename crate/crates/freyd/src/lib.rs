//! Exact homological algebra over small commutative rings.
//!
//! The crate computes with chain complexes of finitely generated free
//! modules over the integers, the integers modulo n, prime fields, and
//! finite products of prime fields. On top of exact linear algebra (Smith
//! normal form and friends) it builds finitely presented modules, homology,
//! maps in the derived category up to chain homotopy, ghost maps (nonzero
//! maps invisible to homology), and the comparison machinery that decides
//! whether homology detects all maps out of a given complex.

pub mod complex;
pub mod homotopy;
pub mod linalg;
pub mod matrix;
pub mod module;
pub mod presheaf;
pub mod ring;

pub use complex::{
    cohomology_vs_r, homology, induced_homology_map, mapping_cone, random_complex, sub_seed,
    ChainComplex, ChainMap, ComplexError, Triangle,
};
pub use homotopy::{
    derived_hom, ghost_group, hom_postcompose, hom_precompose, is_ghost, is_nullhomotopic,
    GhostGroup, HomGroup,
};
pub use linalg::{det, kernel, snf, solve, solve_many, LinearSolver, SmithDecomposition};
pub use matrix::Matrix;
pub use module::{
    hom_module, maps_exact_at, subquotient, tensor_pair, tensor_product, FPModule, HomModule,
    ModuleError, ModuleInvariants, ModuleMap, Subquotient,
};
pub use presheaf::{
    counit, counit_with, flat_homology_probe, graded_homology_is_flat, homology_presheaf,
    identity_in_counit_image, ladder_check, prolong_coequalizer, prolong_coequalizer_swapped,
    prolong_tensor, prolonged_induced, prolonged_pushforward, CounitMap, FlatProbeReport,
    GradedModule, LadderReport, ProlongationRoute, ProlongedGenerator, ProlongedValue,
};
pub use ring::{RingElement, RingError, RingSpec};
