//! Exact computation of twisted Reidemeister torsion obstructions to
//! links being slice: boundary-link torsion, satellite eigenvalue
//! products, and norm-class tests in the cyclotomic ring of conductor 8.

pub mod cyclotomic;
pub mod error;
pub mod intmat;
pub mod laurent;
pub mod monomial;
pub mod normtest;
pub mod rat;
pub mod satellite;
pub mod torsion;
pub mod word;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic, RootOfUnity};
pub use error::{Error, Result};
pub use laurent::{dense_det, dense_mul, dense_rank, LaurentPoly, MatrixOverLaurent, RationalFunction};
pub use normtest::{rational_norm_class, represent_as_hermitian_square, HermitianWitness, NormVerdict};
pub use monomial::{DetGroup, MonomialMatrix, MonomialRep, PGroupCertificate, RealUnits};
pub use satellite::{
    alexander_from_seifert, bing_double_obstruction, builtin_knot, satellite_factor,
    AlexanderPoly, BingCertificate, BingVerdict, KnotSeifertMatrix, SatelliteFactor,
};
pub use torsion::{
    boundary_torsion, build_twisted_matrix, rank_of_link, slice_consequence_check,
    unlink_torsion, BoundarySeifertMatrix, PsiMap, SliceCheckVerdict, TorsionAmbiguity,
    TorsionClass,
};
pub use word::FreeWord;
