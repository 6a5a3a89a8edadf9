//! Finite completely separated sets.
//!
//! Carriers are finite setoids whose equality is an explicit partition of
//! opaque atom names. Real-valued functions are tables over a [`Scalar`]
//! type; the exact rational [`Rat`] is the model used throughout, but every
//! construction is generic so `f64` tables work too (with exact `==`
//! semantics, so only use it when the values are exactly representable).
//!
//! The modules follow the dependency order of the constructions:
//!
//! * [`kernel`]: rationals, setoids, inequality relations, functions, and the
//!   axiom checker for inequalities.
//! * [`induced`]: equality and inequality induced by a family of real-valued
//!   functions.
//! * [`complsep`]: completely separated sets, affine arrows, products,
//!   function spaces and subsets.
//! * [`families`]: families of sets with inequality, families and global
//!   families of completely separated sets, Sigma- and Pi-sets.
//! * [`universal`]: the free completely separated set, the Stone-Čech
//!   reflector, duals and the Tychonoff embedding.
//! * [`generate`]: random instance generators used by the law sweeps.

pub mod complsep;
pub mod error;
pub mod families;
pub mod generate;
pub mod induced;
pub mod kernel;
pub mod scalar;
pub mod universal;
pub mod verdict;

pub use error::{Error, Result};
pub use kernel::rat::Rat;
pub use kernel::{Bounds, FinSetoid, FnFamily, IneqSet, RealFn, Relation, SetMap};
pub use scalar::Scalar;
pub use verdict::{ClauseReport, Verdict, Violation};

/// Real-valued table over exact rationals.
pub type RatFn = RealFn<Rat>;
/// Function family over exact rationals.
pub type RatFamily = FnFamily<Rat>;
/// Completely separated set with a rational-valued family.
pub type RatComplSep = complsep::ComplSep<Rat>;
/// Function space with a rational-valued family.
pub type RatFunctionSpace = universal::FunctionSpace<Rat>;
/// Family of completely separated sets over exact rationals.
pub type RatCsFamily = families::CsFamily<Rat>;
/// Global family of completely separated sets over exact rationals.
pub type RatGlobalFamily = families::GlobalFamily<Rat>;
/// Induced relations of a rational-valued family.
pub type RatInduced = induced::InducedRelations<Rat>;

/// Real-valued table over `f64`.
pub type F64Fn = RealFn<f64>;
/// Function family over `f64`.
pub type F64Family = FnFamily<f64>;
/// Completely separated set with an `f64`-valued family.
pub type F64ComplSep = complsep::ComplSep<f64>;
/// Function space with an `f64`-valued family.
pub type F64FunctionSpace = universal::FunctionSpace<f64>;
