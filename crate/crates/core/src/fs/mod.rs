//! Dimension sequences of FS^op modules with their height bounds and
//! rational generating functions.

mod expr;
mod gf;
mod sequence;

pub use expr::{Expr, HeightCertificate, HeightRule, TraceStep};
pub use gf::{
    fit_exponential_polynomial, fit_horizon, gf_projective, invariant_dimension,
    invariants_gf_projective, surjection_orbits_brute_force, ExpPolyFit, RationalGF,
};
pub use sequence::{
    dim_projective, seq_convolve, seq_shift, seq_sum, surjection_count, DimSequence,
};
