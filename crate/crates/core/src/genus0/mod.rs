//! Genus-0 bookkeeping around the moduli spaces of stable rational curves.

mod bar;
mod poincare;
mod rewrite;

pub use bar::{
    e1_upper_bound, enumerate_ge, enumerate_ge_within, fn_dimension, BarIndex, GeEntry, GE_CEILING,
};
pub use poincare::{
    b2_closed_form, euler_characteristic_from_strata, poincare_m0n, satisfies_duality,
};
pub use rewrite::{find_reduction, tree_pullback, RewriteStep, StableTreeClass};
