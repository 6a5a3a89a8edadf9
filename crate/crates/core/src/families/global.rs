use std::ops::Deref;

use super::cs::cs_laws;
use super::{
    is_in_pi, names, sigma_set_global, two_index, validate_global_set_family, CsFamily, DepTable,
    SetFamily, SigmaSet,
};
use crate::complsep::{check_complsep, validate_complsep, ComplSep};
use crate::induced::induce;
use crate::kernel::Bounds;
use crate::{ClauseReport, Error, FnFamily, RealFn, Result, Scalar, SetMap, Verdict};

/// A family of completely separated sets whose transports `λ*_ij` and
/// `φ*_ij` are given on every pair of indices.
#[derive(Debug, Clone, PartialEq)]
pub struct GlobalFamily<S>(CsFamily<S>);

impl<S: Scalar> Deref for GlobalFamily<S> {
    type Target = CsFamily<S>;

    fn deref(&self) -> &CsFamily<S> {
        &self.0
    }
}

impl<S: Scalar> GlobalFamily<S> {
    /// Wraps the data; every index pair must carry both transports.
    pub fn new(fam: CsFamily<S>) -> Result<Self> {
        let n = fam.sets.index.len();
        for i in 0..n {
            for j in 0..n {
                fam.sets.transport(i, j)?;
                fam.phi(i, j)?;
            }
        }
        Ok(GlobalFamily(fam))
    }

    pub fn from_transports(
        sets: SetFamily,
        index_family: FnFamily<S>,
        fiber_families: Vec<FnFamily<S>>,
    ) -> Result<Self> {
        Self::new(CsFamily::from_transports(
            sets,
            index_family,
            fiber_families,
        )?)
    }

    /// The same completely separated set everywhere with identity transports.
    pub fn constant(index: &ComplSep<S>, fiber: &ComplSep<S>) -> Self {
        let sets = SetFamily::constant_global(index.set().clone(), fiber.set().clone());
        GlobalFamily(CsFamily::constant_from(sets, index, fiber))
    }

    /// `X` over `0` and `Y` over `1` with cross maps `l01 : X → Y` and
    /// `l10 : Y → X`; the `φ*` are derived from them.
    pub fn two(x: &ComplSep<S>, y: &ComplSep<S>, l01: SetMap, l10: SetMap) -> Result<Self> {
        let sets = SetFamily::two_global(x.set().clone(), y.set().clone(), l01, l10)?;
        let index = super::cs::two_index_cs::<S>()?;
        debug_assert_eq!(index.set(), &two_index());
        Self::from_transports(
            sets,
            index.family().clone(),
            vec![x.family().clone(), y.family().clone()],
        )
    }

    pub fn family(&self) -> &CsFamily<S> {
        &self.0
    }

    pub fn into_inner(self) -> CsFamily<S> {
        self.0
    }
}

/// Checks totality, identities, the weakened triangle law, strong
/// extensionality of every `λ*_ij`, and conditions (a), (b), (c) on all pairs.
pub fn validate_global_family<S: Scalar>(fam: &GlobalFamily<S>) -> Result<ClauseReport> {
    let mut report = validate_global_set_family(&fam.sets)?;
    let n = fam.index().len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    report.clauses.extend(cs_laws(fam, &pairs)?.clauses);
    Ok(report)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SigmaGlobalReport<S> {
    pub sigma: SigmaSet,
    /// `K̂` followed by `Ĥ`.
    pub family: FnFamily<S>,
    /// Number of leading members that come from `K̂`.
    pub k_hat: usize,
    /// Each `Φ^h` has components in the fiber families and is compatible.
    pub extensions: Verdict,
    /// `≠_{K̂ ∪ Ĥ}` equals the Sigma inequality on every pair.
    pub equality: Verdict,
    pub complsep: Verdict,
}

impl<S: Scalar> SigmaGlobalReport<S> {
    pub fn clauses(&self) -> ClauseReport {
        ClauseReport::new()
            .with("extensions", self.extensions.clone())
            .with("inequalities-agree", self.equality.clone())
            .with("complsep", self.complsep.clone())
    }
}

/// Builds `K̂ ∪ Ĥ` on the Sigma-set of a global family, `Ĥ` from the
/// extensions `Φ^h_i := h ∘ λ*_ij`, and compares the induced inequality with
/// the Sigma inequality.
pub fn sigma_global_check<S: Scalar>(
    fam: &GlobalFamily<S>,
    bounds: &Bounds,
) -> Result<SigmaGlobalReport<S>> {
    let sigma = sigma_set_global(&fam.sets)?;
    bounds.check_enum(sigma.set.len() as u128)?;
    let index = fam.index();
    let n_index = index.len();
    let mut members = Vec::new();
    for k in fam.index_family.members() {
        let values = sigma
            .pairs
            .iter()
            .map(|&(i, _)| k.value(i).clone())
            .collect();
        members.push(RealFn::new(format!("^{}", k.label()), values));
    }
    let k_hat = members.len();

    let mut extensions = Verdict::Holds;
    for j in 0..n_index {
        for h in fam.fiber_families[j].members() {
            // Φ^h_i = h ∘ λ*_ij, one component per index.
            let comps: Vec<RealFn<S>> = (0..n_index)
                .map(|i| Ok(h.compose(fam.sets.transport(i, j)?, "")))
                .collect::<Result<_>>()?;
            if extensions.holds() {
                extensions = extension_verdict(fam, j, h, &comps)?;
            }
            let values = sigma
                .pairs
                .iter()
                .map(|&(i, x)| comps[i].value(x).clone())
                .collect();
            members.push(RealFn::new(
                format!("^Φ[{}@{}]", h.label(), index.atom(j)),
                values,
            ));
        }
    }
    let family = FnFamily::new(sigma.set.base().clone(), members)?;
    let induced = induce(sigma.set.base(), &family)?;
    let n = sigma.set.len();
    let equality = (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .find(|&(p, q)| induced.neq(p, q) != sigma.set.neq(p, q))
        .map_or(Verdict::Holds, |(p, q)| {
            Verdict::fail(
                [sigma.set.atom(p), sigma.set.atom(q)],
                if sigma.set.neq(p, q) {
                    "Sigma-apart but not separated by K̂ ∪ Ĥ"
                } else {
                    "separated by K̂ ∪ Ĥ but not Sigma-apart"
                },
            )
        });
    let complsep = check_complsep(&sigma.set, &family)?;
    Ok(SigmaGlobalReport {
        sigma,
        family,
        k_hat,
        extensions,
        equality,
        complsep,
    })
}

fn extension_verdict<S: Scalar>(
    fam: &GlobalFamily<S>,
    j: usize,
    h: &RealFn<S>,
    comps: &[RealFn<S>],
) -> Result<Verdict> {
    let index = fam.index();
    let mut positions = Vec::with_capacity(comps.len());
    for (i, c) in comps.iter().enumerate() {
        match fam.fiber_families[i].position(c) {
            Some(p) => positions.push(p),
            None => {
                return Ok(Verdict::fail(
                    [index.atom(j), index.atom(i)],
                    format!("{} ∘ λ*_ij is not in F_i", h.label()),
                ))
            }
        }
    }
    for (i, &pos) in positions.iter().enumerate().take(comps.len()) {
        for (k, comp) in comps.iter().enumerate() {
            if !index.eq(i, k) {
                continue;
            }
            let moved = fam.fiber_families[k].member(fam.phi(i, k)?[pos]);
            if !moved.pointwise_eq(comp) {
                return Ok(Verdict::fail(
                    names(index, &[i, k]),
                    format!("extension of {} is not compatible", h.label()),
                ));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// The Sigma-set of a global family as a completely separated set with the
/// family `K̂ ∪ Ĥ`.
pub fn sigma_global_cs<S: Scalar>(fam: &GlobalFamily<S>, bounds: &Bounds) -> Result<ComplSep<S>> {
    let report = sigma_global_check(fam, bounds)?;
    if let Some((id, v)) = report.clauses().first_failure() {
        return Err(Error::InvariantBroken(format!("Sigma-set: {id}: {v}")));
    }
    validate_complsep(report.sigma.set, report.family)
}

/// `λ*_ij(Θ_i) ≠ Θ_j ⇒ i ≠_I j` for all indices, for `Θ` in the Pi-set of a
/// global family.
pub fn dep_strongly_extensional(theta: &DepTable, fam: &SetFamily) -> Result<Verdict> {
    if let Verdict::Fails(v) = is_in_pi(fam, theta)? {
        return Err(Error::NotInPiSet(v.to_string()));
    }
    let n = fam.index.len();
    for i in 0..n {
        for j in 0..n {
            let moved = fam.transport(i, j)?.image(theta.at(i));
            if fam.fibers[j].neq(moved, theta.at(j)) && !fam.index.neq(i, j) {
                return Ok(Verdict::fail(
                    names(&fam.index, &[i, j]),
                    "transported value is apart but the indices are not",
                ));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Builds the global family `Σ*` over the Sigma-set (`σ₀(i,x) := λ₀(i)`,
/// `σ*_{(i,x),(j,y)} := λ*_ij`) and checks that the second projection is a
/// strongly extensional dependent function over it.
pub fn second_projection_check(fam: &SetFamily, bounds: &Bounds) -> Result<ClauseReport> {
    let sigma = sigma_set_global(fam)?;
    let n = sigma.set.len();
    bounds.check_enum((n as u128) * (n as u128))?;
    let fibers = sigma
        .pairs
        .iter()
        .map(|&(i, _)| fam.fibers[i].clone())
        .collect();
    let mut transports = std::collections::BTreeMap::new();
    for (p, &(i, _)) in sigma.pairs.iter().enumerate() {
        for (q, &(j, _)) in sigma.pairs.iter().enumerate() {
            transports.insert((p, q), fam.transport(i, j)?.clone());
        }
    }
    let star = SetFamily::new(sigma.set.clone(), fibers, transports)?;
    let family_ok = validate_global_set_family(&star)?.overall();
    let pr2 = DepTable(sigma.pairs.iter().map(|&(_, x)| x).collect());
    let membership = is_in_pi(&star, &pr2)?;
    let strong = if membership.fails() {
        Verdict::NotApplicable("pr2 is not in the Pi-set".into())
    } else {
        dep_strongly_extensional(&pr2, &star)?
    };
    Ok(ClauseReport::new()
        .with("sigma-star", family_ok)
        .with("pr2-in-pi", membership)
        .with("pr2-strongly-extensional", strong))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::canonical_product_ineq;
    use crate::{FinSetoid, IneqSet, Rat};

    fn r(n: i64) -> Rat {
        Rat::from_integer(n)
    }

    fn ex_cs() -> ComplSep<Rat> {
        let x = FinSetoid::discrete("EX", ["a", "b", "c"]).unwrap();
        let fam = FnFamily::new(
            x.clone(),
            vec![
                RealFn::new("f", vec![r(0), r(0), r(1)]),
                RealFn::new("g", vec![r(0), r(1), r(1)]),
            ],
        )
        .unwrap();
        ComplSep::induced_by(x, fam).unwrap()
    }

    fn bit_cs() -> ComplSep<Rat> {
        let x = FinSetoid::discrete("B", ["p", "q"]).unwrap();
        let fam = FnFamily::new(x.clone(), vec![RealFn::new("id", vec![r(0), r(1)])]).unwrap();
        ComplSep::induced_by(x, fam).unwrap()
    }

    fn global_two() -> GlobalFamily<Rat> {
        GlobalFamily::two(
            &ex_cs(),
            &bit_cs(),
            SetMap::new("l01", vec![0, 0, 1]),
            SetMap::new("l10", vec![0, 2]),
        )
        .unwrap()
    }

    #[test]
    fn constant_global_family() {
        let index = super::super::cs::two_index_cs::<Rat>().unwrap();
        let fam = GlobalFamily::constant(&index, &ex_cs());
        assert!(validate_global_family(&fam).unwrap().overall().holds());
        let rep = sigma_global_check(&fam, &Bounds::default()).unwrap();
        assert!(rep.clauses().overall().holds(), "{:?}", rep.clauses());
        let prod = canonical_product_ineq(index.set(), ex_cs().set()).unwrap();
        assert_eq!(rep.sigma.pairs, prod.pairs);
        assert_eq!(rep.sigma.set.neq_relation(), prod.set.neq_relation());
        let pr2 = second_projection_check(&fam.sets, &Bounds::default()).unwrap();
        assert!(pr2.overall().holds(), "{pr2:?}");
    }

    #[test]
    fn global_two_family_fixture() {
        let fam = global_two();
        let rep = validate_global_family(&fam).unwrap();
        assert!(rep.overall().holds(), "{rep:?}");
        let cs = sigma_global_cs(&fam, &Bounds::default()).unwrap();
        assert_eq!(cs.len(), 5);
        let pr2 = second_projection_check(&fam.sets, &Bounds::default()).unwrap();
        assert!(pr2.overall().holds(), "{pr2:?}");
    }

    #[test]
    fn broken_condition_c_on_a_cross_pair() {
        // with a second member in G, point φ*_01 at the wrong one
        let mut inner = global_two().into_inner();
        inner.fiber_families[1] = FnFamily::new(
            inner.sets.fibers[1].base().clone(),
            vec![
                RealFn::new("id", vec![r(0), r(1)]),
                RealFn::new("neg", vec![r(1), r(0)]),
            ],
        )
        .unwrap();
        inner.fn_transports.insert((0, 1), vec![1, 1]);
        inner.fn_transports.insert((1, 1), vec![0, 1]);
        inner.fn_transports.insert((1, 0), vec![0, 0]);
        let fam = GlobalFamily::new(inner).unwrap();
        let rep = validate_global_family(&fam).unwrap();
        assert!(rep.clause("(c)").unwrap().fails(), "{rep:?}");
    }

    #[test]
    fn missing_global_transport() {
        let mut inner = global_two().into_inner();
        inner.sets.transports.remove(&(1, 0));
        assert!(matches!(
            GlobalFamily::new(inner),
            Err(Error::MissingTransport { .. })
        ));
    }

    #[test]
    fn dependent_strong_extensionality() {
        let index = super::super::cs::two_index_cs::<Rat>().unwrap();
        let fam = GlobalFamily::constant(&index, &ex_cs());
        // an ordinary function 0 ↦ a, 1 ↦ c, strongly extensional since 2 is discrete
        assert!(dep_strongly_extensional(&DepTable(vec![0, 2]), &fam.sets)
            .unwrap()
            .holds());

        let point = FinSetoid::discrete("1", ["*"]).unwrap();
        let one = SetFamily::constant_global(IneqSet::cross_block(point), ex_cs().set().clone());
        assert!(dep_strongly_extensional(&DepTable(vec![1]), &one)
            .unwrap()
            .holds());

        let blind = IneqSet::from_fn(FinSetoid::discrete("I", ["0", "1"]).unwrap(), |_, _| false);
        let sets = SetFamily::constant_global(blind, ex_cs().set().clone());
        match dep_strongly_extensional(&DepTable(vec![0, 2]), &sets).unwrap() {
            Verdict::Fails(v) => assert_eq!(v.atoms, vec!["0", "1"]),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            dep_strongly_extensional(&DepTable(vec![0, 9]), &sets),
            Err(Error::NotInPiSet(_))
        ));
    }
}
