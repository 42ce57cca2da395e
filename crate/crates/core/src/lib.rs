//! Exact computations on modular data: fusion rules from the Verlinde
//! formula, generalized Frobenius-Schur indicators of the Drinfel'd center,
//! and eigenvalues with multiplicities of rotation operators and of
//! Jucys-Murphy braids.
//!
//! Everything is computed in cyclotomic fields with exact rational
//! coefficients; equality is never approximate.

pub mod center;
pub mod cyclo;
pub mod dataio;
mod error;
pub mod fusion_ring;
pub mod indicators;
pub mod matrix;
pub mod modular_data;
pub mod spectra;

pub use cyclo::{Cyclotomic, Rational, RootOfUnity};
pub use center::CenterData;
pub use error::{Error, ErrorClass, Result};
pub use fusion_ring::{FusionRing, ObjectMultiset};
pub use indicators::{gfs_matrix, nu2_direct, nu_general, sl2_word, IndicatorEngine, IndicatorTable, RootConvention, Sl2Token, Sl2Word};
pub use matrix::Matrix;
pub use modular_data::{DerivedInvariants, ModularData, ValidationReport};
pub use spectra::{
    braid_jm_spectrum, braid_jm_spectrum_with, rotation_report, rotation_spectrum, semisimple_k,
    sigma3_spectrum_n2, sigma_spectrum_n2, Crossing, MultiplicityPolynomial, OperatorKind,
    SpectrumContext, SpectrumEntry, SpectrumReport, SpectrumRow,
};
