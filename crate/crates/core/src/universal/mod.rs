//! Universal constructions: the free completely separated set on a set, the
//! Stone-Čech reflector from function spaces, duals, and the Tychonoff
//! embedding into a power of the reals.
//!
//! Hom-sets are enumerated exhaustively, so every check here is bounded by
//! [`Bounds::max_enum`] on the number of raw tables `|Y|^|X|`.

mod free;
mod stone_cech;
mod tychonoff;

use std::collections::BTreeSet;

pub use free::{free_adjunction_check, free_cs, free_universal_check};
pub use stone_cech::{
    rho, rho_adjunction_check, rho_arrow, rho_check, rho_product_check, rho_universal_check,
    Reflection, RhoAdjunctionReport,
};
pub use tychonoff::{
    bidual_check, dual_arrow, dual_cs, embed_eh, hom_family_m, r_power, tychonoff_check,
    tychonoff_given, Dual, Embedding, HomFamily, RPower, TychonoffReport,
};

use crate::complsep::ComplSep;
use crate::kernel::canonical::{enumerate_tables, table_name};
use crate::kernel::{validate_function, validate_real_fn, Bounds};
use crate::{ClauseReport, Error, FinSetoid, FnFamily, Result, Scalar, SetMap, Verdict};

/// A set with an extensional family of real-valued functions, not required
/// to separate or to induce any particular inequality.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionSpace<S> {
    carrier: FinSetoid,
    family: FnFamily<S>,
}

impl<S: Scalar> FunctionSpace<S> {
    pub fn new(carrier: FinSetoid, family: FnFamily<S>) -> Result<Self> {
        family.require_carrier(&carrier)?;
        for f in family.members() {
            if let Verdict::Fails(v) = validate_real_fn(&carrier, f)? {
                return Err(Error::PreconditionViolated(format!(
                    "`{}` does not respect the equality of `{}`: {v}",
                    f.label(),
                    carrier.name()
                )));
            }
        }
        Ok(FunctionSpace { carrier, family })
    }

    /// Forgets the inequality of a completely separated set.
    pub fn from_cs(cs: &ComplSep<S>) -> Self {
        FunctionSpace {
            carrier: cs.carrier().clone(),
            family: cs.family().clone(),
        }
    }

    pub fn carrier(&self) -> &FinSetoid {
        &self.carrier
    }

    pub fn family(&self) -> &FnFamily<S> {
        &self.family
    }

    pub fn name(&self) -> &str {
        self.carrier.name()
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArrowKind {
    Plain,
    StronglyExtensional,
    Affine,
}

/// Arrows between two finite objects, one table per pointwise-equality class
/// in the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSet {
    pub src: String,
    pub dst: String,
    pub kind: ArrowKind,
    pub arrows: Vec<SetMap>,
}

impl HomSet {
    /// Enumerates every raw table `src → dst` that is a function and passes
    /// `admit`, keeping the first table of each pointwise class.
    pub fn enumerate(
        src: &FinSetoid,
        dst: &FinSetoid,
        kind: ArrowKind,
        bounds: &Bounds,
        mut admit: impl FnMut(&SetMap) -> Result<bool>,
    ) -> Result<HomSet> {
        let mut seen = BTreeSet::new();
        let mut arrows = Vec::new();
        for t in enumerate_tables(src.len(), dst.len(), bounds)? {
            if !validate_function(src, dst, &t)?.holds() || !admit(&t)? {
                continue;
            }
            if seen.insert(t.signature(dst)) {
                let label = table_name(src, dst, &t);
                arrows.push(t.with_label(label));
            }
        }
        Ok(HomSet {
            src: src.name().to_string(),
            dst: dst.name().to_string(),
            kind,
            arrows,
        })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Block signatures of the arrows under `cod`.
    pub fn signatures(&self, cod: &FinSetoid) -> BTreeSet<Vec<usize>> {
        self.arrows.iter().map(|a| a.signature(cod)).collect()
    }

    /// Some arrow is pointwise equal to `t` under `cod`.
    pub fn contains(&self, t: &SetMap, cod: &FinSetoid) -> bool {
        self.arrows.iter().any(|a| a.pointwise_eq(t, cod))
    }
}

/// Mutual inclusion of two hom-sets, comparing tables pointwise under `cod`.
pub fn hom_equality(left: &HomSet, right: &HomSet, cod: &FinSetoid) -> Verdict {
    for (a, b, side) in [(left, right, "right"), (right, left, "left")] {
        if let Some(t) = a.arrows.iter().find(|t| !b.contains(t, cod)) {
            return Verdict::fail(
                [t.label()],
                format!(
                    "arrow of Hom({}, {}) missing from the {side} hom-set",
                    a.src, a.dst
                ),
            );
        }
    }
    Verdict::Holds
}

/// Hom-set equality for one pair of objects and the naturality squares for
/// every sampled arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub hom_equality: Verdict,
    pub left_size: usize,
    pub right_size: usize,
    /// Squares for the sampled arrows into the first variable.
    pub naturality_left: Vec<Verdict>,
    /// Squares for the sampled arrows out of the second variable.
    pub naturality_right: Vec<Verdict>,
}

impl AdjunctionReport {
    pub fn clauses(&self) -> ClauseReport {
        ClauseReport::new()
            .with("hom-equality", self.hom_equality.clone())
            .with(
                "naturality-left",
                Verdict::all(self.naturality_left.iter().cloned()),
            )
            .with(
                "naturality-right",
                Verdict::all(self.naturality_right.iter().cloned()),
            )
    }

    pub fn overall(&self) -> Verdict {
        self.clauses().overall()
    }
}

/// Checks one naturality square whose horizontal maps are identities on
/// tables: for each `h` in `start`, the top-then-down path `down(h)` must be
/// in `mid_left` and then in `end`, the other path needs `h ∈ mid_right`
/// and `across(h) ∈ end`, and the two results must agree.
#[allow(clippy::too_many_arguments)]
pub(crate) fn square(
    start: &HomSet,
    down: impl Fn(&SetMap) -> SetMap,
    mid_left: (&HomSet, &FinSetoid),
    mid_right: (&HomSet, &FinSetoid),
    across: impl Fn(&SetMap) -> SetMap,
    end: (&HomSet, &FinSetoid),
    arrow: &str,
) -> Verdict {
    for h in &start.arrows {
        let a = down(h);
        if !mid_left.0.contains(&a, mid_left.1) {
            return Verdict::fail(
                [arrow, h.label()],
                format!("image not in Hom({}, {})", mid_left.0.src, mid_left.0.dst),
            );
        }
        if !end.0.contains(&a, end.1) {
            return Verdict::fail(
                [arrow, h.label()],
                format!("image not in Hom({}, {})", end.0.src, end.0.dst),
            );
        }
        if !mid_right.0.contains(h, mid_right.1) {
            return Verdict::fail(
                [arrow, h.label()],
                format!("arrow not in Hom({}, {})", mid_right.0.src, mid_right.0.dst),
            );
        }
        let b = across(h);
        if !end.0.contains(&b, end.1) {
            return Verdict::fail(
                [arrow, h.label()],
                format!("image not in Hom({}, {})", end.0.src, end.0.dst),
            );
        }
        if !a.pointwise_eq(&b, end.1) {
            return Verdict::fail([arrow, h.label()], "the two paths around the square differ");
        }
    }
    Verdict::Holds
}

/// Every table in `candidates` that satisfies `agrees` is pointwise equal to
/// `expected` under `cod`.
pub(crate) fn unique_among(
    candidates: &[SetMap],
    expected: &SetMap,
    cod: &FinSetoid,
    agrees: impl Fn(&SetMap) -> bool,
) -> Verdict {
    match candidates
        .iter()
        .find(|t| agrees(t) && !t.pointwise_eq(expected, cod))
    {
        None => Verdict::Holds,
        Some(t) => Verdict::fail(
            [expected.label(), t.label()],
            "a second arrow makes the triangle commute",
        ),
    }
}
