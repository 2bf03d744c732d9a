//! Exact symbolic kernel for the universal Askey-Wilson algebra, the
//! quantum algebra U_q(sl2) in its Chevalley and equitable presentations,
//! and the embedding of the former into U_q(sl2) ⊗ F[a^{±1}, b^{±1}, c^{±1}].
//!
//! All arithmetic is exact over the function field Q(q): integer
//! coefficients are arbitrary precision and there is no floating point
//! anywhere, so every verified identity holds with zero residual. The
//! kernel keeps one canonical normal form per algebra:
//!
//! - U_q(sl2): the PBW basis `e^r k^s f^t` ([`uqsl2::UElement`]),
//! - the tensor algebra: PBW monomials with Laurent coefficients in
//!   a, b, c ([`tensor::TensorElement`]),
//! - the Askey-Wilson algebra: the basis
//!   `A^i B^j C^k alpha^r beta^s gamma^t` ([`delta::DeltaElement`]).
//!
//! On top of the arithmetic sit the verification surfaces: the identity
//! registry ([`identities`]), the embedding checks and rank-based
//! injectivity evidence ([`hom`]), and the matrix-module numeric oracle
//! ([`repmod`]). Values are immutable and operations pure, so everything
//! here is safe to share across threads.

pub mod coeff;
pub mod delta;
pub mod hom;
pub mod identities;
pub mod linalg;
pub mod repmod;
pub mod report;
pub mod sample;
pub mod tensor;
pub mod uqsl2;

pub use coeff::{AbcMono, Bindings, CoeffError, IntPoly, LaurentABC, RatQ};
pub use delta::{
    from_omega_basis, psl2_act, rho, sigma, to_omega_basis, to_omega_basis_auto, DeltaElement,
    DeltaError, DeltaGen, DeltaMono, DeltaWord, OmegaMono, PslGen,
};
pub use hom::{
    check_rho_diagram, check_sigma_diagram, for_each_image, injectivity_rank_check, natural,
    natural_with, omega_image_residual, prop_motiv_residuals, relation_residuals, DiagramOutcome,
    NaturalImages, RankMode, RankReport,
};
pub use identities::{graded_table, registry, Identity};
pub use repmod::{build_module, ModuleRep, QMatrix};
pub use report::{Check, Report, Status};
pub use tensor::{TensorElement, TensorError, TensorName};
pub use uqsl2::{EquitableExpansion, EquitableMono, PbwMono, UElement, UGen, UWord};
