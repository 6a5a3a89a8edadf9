//! Foundational values: rationals, finite setoids, inequality relations,
//! function tables and the inequality axiom checker.

pub mod axioms;
pub mod canonical;
pub mod function;
pub mod ineq;
pub mod rat;
pub mod setoid;

pub use axioms::{check_ineq_axioms, check_relation_axioms, AxiomReport};
pub use canonical::{
    canonical_funspace_ineq, canonical_product_ineq, canonical_subset_ineq, enumerate_functions,
    FunctionSet, ProductSet,
};
pub use function::{
    is_strongly_extensional, real_fn_strongly_extensional, validate_function, validate_real_fn,
    FnFamily, RealFn, SetMap,
};
pub use ineq::{IneqSet, Relation};
pub use setoid::FinSetoid;

/// Limits on exhaustive evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest declared carrier accepted for exhaustive checking.
    pub max_atoms: usize,
    /// Largest enumerated carrier (function tables, dependent tables, products).
    pub max_enum: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_atoms: 12,
            max_enum: 10_000,
        }
    }
}

impl Bounds {
    pub fn check_enum(&self, size: u128) -> crate::Result<()> {
        if size > self.max_enum as u128 {
            Err(crate::Error::CarrierTooLarge {
                size,
                bound: self.max_enum,
            })
        } else {
            Ok(())
        }
    }
}

/// `base^exp`, saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
