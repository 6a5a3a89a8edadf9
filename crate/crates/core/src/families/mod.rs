//! Families of sets with an inequality indexed by a set with an inequality,
//! families and global families of completely separated sets, and their
//! Sigma- and Pi-sets.
//!
//! A local family carries transport maps on the diagonal
//! `D(I) = {(i, j) | i =_I j}` only; a global family carries them on every
//! pair of indices. Both use [`SetFamily`] as the underlying data.

mod cs;
mod global;
mod sigma;

use std::collections::BTreeMap;

pub(crate) use cs::family_as_set;
pub use cs::{
    fcl3_check, induced_function_family, member_atoms, pi_cs, validate_cs_family, CsFamily,
    Fcl3Report, PiCs,
};
pub use global::{
    dep_strongly_extensional, second_projection_check, sigma_global_check, sigma_global_cs,
    validate_global_family, GlobalFamily, SigmaGlobalReport,
};
pub use sigma::{
    is_in_pi, pi_set, sigma_apartness_report, sigma_set, sigma_set_global, DepTable, PiSet,
    SigmaSet,
};

use crate::kernel::{is_strongly_extensional, validate_function};
use crate::{ClauseReport, Error, FinSetoid, IneqSet, Result, SetMap, Verdict};

/// Fibers over an index with transport maps between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    pub index: IneqSet,
    /// `fibers[i]` is the fiber over index atom `i`.
    pub fibers: Vec<IneqSet>,
    /// `transports[&(i, j)]` maps `fibers[i]` to `fibers[j]`.
    pub transports: BTreeMap<(usize, usize), SetMap>,
}

impl SetFamily {
    pub fn new(
        index: IneqSet,
        fibers: Vec<IneqSet>,
        transports: BTreeMap<(usize, usize), SetMap>,
    ) -> Result<Self> {
        if fibers.len() != index.len() {
            return Err(Error::DomainMismatch(format!(
                "{} fibers for an index with {} atoms",
                fibers.len(),
                index.len()
            )));
        }
        for (&(i, j), t) in &transports {
            if i >= index.len() || j >= index.len() {
                return Err(Error::DomainMismatch(format!(
                    "transport `{}` keyed outside the index",
                    t.label()
                )));
            }
            t.check_shape(fibers[i].base(), fibers[j].base())?;
        }
        Ok(SetFamily {
            index,
            fibers,
            transports,
        })
    }

    /// The same fiber everywhere with identity transports on the diagonal.
    pub fn constant(index: IneqSet, fiber: IneqSet) -> Self {
        let pairs = diagonal(index.base());
        Self::constant_on(index, fiber, pairs)
    }

    /// The same fiber everywhere with identity transports on every pair.
    pub fn constant_global(index: IneqSet, fiber: IneqSet) -> Self {
        let n = index.len();
        let pairs = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        Self::constant_on(index, fiber, pairs)
    }

    fn constant_on(index: IneqSet, fiber: IneqSet, pairs: Vec<(usize, usize)>) -> Self {
        let transports = pairs
            .into_iter()
            .map(|(i, j)| ((i, j), transport_identity(&index, i, j, fiber.len())))
            .collect();
        SetFamily {
            fibers: vec![fiber; index.len()],
            index,
            transports,
        }
    }

    /// `X` over `0` and `Y` over `1`, with identity transports.
    pub fn two(x: IneqSet, y: IneqSet) -> Self {
        let index = two_index();
        let mut transports = BTreeMap::new();
        transports.insert((0, 0), SetMap::identity(x.len()).with_label("id_0"));
        transports.insert((1, 1), SetMap::identity(y.len()).with_label("id_1"));
        SetFamily {
            index,
            fibers: vec![x, y],
            transports,
        }
    }

    /// The global variant of [`SetFamily::two`] with the cross maps `l01`, `l10`.
    pub fn two_global(x: IneqSet, y: IneqSet, l01: SetMap, l10: SetMap) -> Result<Self> {
        let mut fam = Self::two(x, y);
        fam.transports.insert((0, 1), l01);
        fam.transports.insert((1, 0), l10);
        Self::new(fam.index, fam.fibers, fam.transports)
    }

    pub fn transport(&self, i: usize, j: usize) -> Result<&SetMap> {
        self.transports
            .get(&(i, j))
            .ok_or_else(|| Error::MissingTransport {
                from: self.index.atom(i).to_string(),
                to: self.index.atom(j).to_string(),
            })
    }

    pub fn fiber(&self, i: usize) -> &IneqSet {
        &self.fibers[i]
    }

    pub fn index_len(&self) -> usize {
        self.index.len()
    }
}

/// The discrete index `{0, 1}` with the full inequality.
pub fn two_index() -> IneqSet {
    IneqSet::cross_block(FinSetoid::discrete("2", ["0", "1"]).expect("distinct atoms"))
}

/// `D(I)`: pairs of equal index atoms, row-major.
pub fn diagonal(index: &FinSetoid) -> Vec<(usize, usize)> {
    let n = index.len();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| index.eq(i, j))
        .collect()
}

fn transport_identity(index: &IneqSet, i: usize, j: usize, len: usize) -> SetMap {
    SetMap::identity(len).with_label(format!("λ_{}{}", index.atom(i), index.atom(j)))
}

fn names(index: &IneqSet, ids: &[usize]) -> Vec<String> {
    ids.iter().map(|&i| index.atom(i).to_string()).collect()
}

/// Transport tables are functions, identities on `(i, i)`, strongly
/// extensional, and satisfy the triangle law on `pairs` (with any third index
/// `k` when `global`, otherwise `k` equal to both).
fn transport_laws(fam: &SetFamily, pairs: &[(usize, usize)], global: bool) -> Result<ClauseReport> {
    let index = &fam.index;
    let n = index.len();
    let mut report = ClauseReport::new();

    let mut functions = Verdict::Holds;
    let mut strong = Verdict::Holds;
    for &(i, j) in pairs {
        let t = fam.transport(i, j)?;
        let (a, b) = (&fam.fibers[i], &fam.fibers[j]);
        if functions.holds() {
            if let Verdict::Fails(v) = validate_function(a.base(), b.base(), t)? {
                functions = Verdict::fail(names(index, &[i, j]), format!("transport: {v}"));
            }
        }
        if strong.holds() {
            if let Verdict::Fails(v) = is_strongly_extensional(t, a, b)? {
                strong = Verdict::fail(names(index, &[i, j]), format!("transport: {v}"));
            }
        }
    }
    report.push("functions", functions);

    let mut identity = Verdict::Holds;
    for i in 0..n {
        let t = fam.transport(i, i)?;
        if !t.pointwise_eq(&SetMap::identity(fam.fibers[i].len()), fam.fibers[i].base()) {
            identity = Verdict::fail(names(index, &[i, i]), "transport is not the identity");
            break;
        }
    }
    report.push("identity", identity);

    let mut triangle = Verdict::Holds;
    'outer: for &(i, j) in pairs {
        if !index.eq(i, j) {
            continue;
        }
        for k in 0..n {
            if !global && !index.eq(j, k) {
                continue;
            }
            let (ij, jk, ik) = (
                fam.transport(i, j)?,
                fam.transport(j, k)?,
                fam.transport(i, k)?,
            );
            if !jk.compose(ij).pointwise_eq(ik, fam.fibers[k].base()) {
                triangle = Verdict::fail(names(index, &[i, j, k]), "λ_jk ∘ λ_ij differs from λ_ik");
                break 'outer;
            }
        }
    }
    report.push("triangle", triangle);
    report.push("strong-extensionality", strong);
    Ok(report)
}

/// Checks a family over the diagonal: identities, the triangle law and
/// strong extensionality of every transport.
pub fn validate_family(fam: &SetFamily) -> Result<ClauseReport> {
    let pairs = diagonal(fam.index.base());
    let mut report = transport_laws(fam, &pairs, false)?;
    let extra = fam.transports.keys().find(|(i, j)| !fam.index.eq(*i, *j));
    let verdict = match extra {
        None => Verdict::Holds,
        Some(&(i, j)) => Verdict::fail(
            names(&fam.index, &[i, j]),
            "transport given for a pair outside the diagonal",
        ),
    };
    report.clauses.insert(0, ("diagonal".to_string(), verdict));
    Ok(report)
}

/// Checks a global family: transports on every pair, identities, the
/// weakened triangle law (`i =_I j`, any `k`) and strong extensionality.
pub fn validate_global_set_family(fam: &SetFamily) -> Result<ClauseReport> {
    let n = fam.index.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    transport_laws(fam, &pairs, true)
}
