use std::collections::BTreeMap;

use super::{diagonal, names, pi_set, sigma_set, two_index, validate_family, PiSet, SetFamily};
use crate::complsep::{check_complsep, is_affine_between, validate_complsep, ComplSep};
use crate::induced::induce;
use crate::kernel::{check_ineq_axioms, Bounds};
use crate::{
    ClauseReport, Error, FinSetoid, FnFamily, IneqSet, RealFn, Relation, Result, Scalar, SetMap,
    Verdict,
};

/// A family of completely separated sets: a [`SetFamily`] whose index and
/// fibers carry separating function families, with maps `φ_ij : F_i → F_j`
/// between the fiber families.
///
/// `fn_transports[&(i, j)][k]` is the position in `F_j` of `φ_ij(f_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CsFamily<S> {
    pub sets: SetFamily,
    pub index_family: FnFamily<S>,
    pub fiber_families: Vec<FnFamily<S>>,
    pub fn_transports: BTreeMap<(usize, usize), Vec<usize>>,
}

impl<S: Scalar> CsFamily<S> {
    pub fn new(
        sets: SetFamily,
        index_family: FnFamily<S>,
        fiber_families: Vec<FnFamily<S>>,
        fn_transports: BTreeMap<(usize, usize), Vec<usize>>,
    ) -> Result<Self> {
        index_family.require_carrier(sets.index.base())?;
        if fiber_families.len() != sets.fibers.len() {
            return Err(Error::DomainMismatch(format!(
                "{} fiber families for {} fibers",
                fiber_families.len(),
                sets.fibers.len()
            )));
        }
        for (fam, fiber) in fiber_families.iter().zip(&sets.fibers) {
            fam.require_carrier(fiber.base())?;
        }
        for (&(i, j), phi) in &fn_transports {
            let n = sets.index.len();
            if i >= n || j >= n {
                return Err(Error::DomainMismatch("φ keyed outside the index".into()));
            }
            if phi.len() != fiber_families[i].len()
                || phi.iter().any(|&k| k >= fiber_families[j].len())
            {
                return Err(Error::DomainMismatch(format!(
                    "φ for ({}, {}) does not map F_i into F_j",
                    sets.index.atom(i),
                    sets.index.atom(j)
                )));
            }
        }
        Ok(CsFamily {
            sets,
            index_family,
            fiber_families,
            fn_transports,
        })
    }

    /// Derives `φ_ij(f) := f ∘ λ_ji` for every transport pair, failing when
    /// a composite is not in the target family.
    pub fn from_transports(
        sets: SetFamily,
        index_family: FnFamily<S>,
        fiber_families: Vec<FnFamily<S>>,
    ) -> Result<Self> {
        let mut fn_transports = BTreeMap::new();
        for &(i, j) in sets.transports.keys() {
            let back = sets.transport(j, i)?;
            let phi = fiber_families[i]
                .members()
                .iter()
                .map(|f| {
                    let composed = f.compose(back, "");
                    fiber_families[j]
                        .position(&composed)
                        .ok_or_else(|| Error::NotAffine {
                            member: f.label().to_string(),
                        })
                })
                .collect::<Result<Vec<usize>>>()?;
            fn_transports.insert((i, j), phi);
        }
        Self::new(sets, index_family, fiber_families, fn_transports)
    }

    /// The same completely separated set over every index, identities
    /// everywhere on the diagonal.
    pub fn constant(index: &ComplSep<S>, fiber: &ComplSep<S>) -> Self {
        let sets = SetFamily::constant(index.set().clone(), fiber.set().clone());
        Self::constant_from(sets, index, fiber)
    }

    pub(crate) fn constant_from(sets: SetFamily, index: &ComplSep<S>, fiber: &ComplSep<S>) -> Self {
        let ident: Vec<usize> = (0..fiber.family().len()).collect();
        let fn_transports = sets
            .transports
            .keys()
            .map(|&k| (k, ident.clone()))
            .collect();
        CsFamily {
            fiber_families: vec![fiber.family().clone(); sets.index.len()],
            index_family: index.family().clone(),
            sets,
            fn_transports,
        }
    }

    /// `X` over `0`, `Y` over `1`, indexed by the two-point set.
    pub fn two(x: &ComplSep<S>, y: &ComplSep<S>) -> Result<Self> {
        let sets = SetFamily::two(x.set().clone(), y.set().clone());
        let index = two_index_cs()?;
        Self::from_transports(
            sets,
            index.family().clone(),
            vec![x.family().clone(), y.family().clone()],
        )
    }

    pub fn index(&self) -> &IneqSet {
        &self.sets.index
    }

    pub fn index_cs(&self) -> Result<ComplSep<S>> {
        validate_complsep(self.sets.index.clone(), self.index_family.clone())
    }

    pub fn fiber_cs(&self, i: usize) -> Result<ComplSep<S>> {
        validate_complsep(self.sets.fibers[i].clone(), self.fiber_families[i].clone())
    }

    pub fn phi(&self, i: usize, j: usize) -> Result<&Vec<usize>> {
        self.fn_transports
            .get(&(i, j))
            .ok_or_else(|| Error::MissingTransport {
                from: format!("F_{}", self.sets.index.atom(i)),
                to: format!("F_{}", self.sets.index.atom(j)),
            })
    }
}

/// The two-point index `{0, 1}` separated by its two indicators.
pub fn two_index_cs<S: Scalar>() -> Result<ComplSep<S>> {
    let index = two_index();
    let (one, zero) = (S::one(), S::zero());
    let chi0 = RealFn::new("χ_0", vec![one.clone(), zero.clone()]);
    let chi1 = RealFn::new("χ_1", vec![zero, one]);
    let family = FnFamily::new(index.base().clone(), vec![chi0, chi1])?;
    validate_complsep(index, family)
}

/// Atom names for the members of a family, made unique by suffixing.
pub fn member_atoms<S: Scalar>(family: &FnFamily<S>) -> Vec<String> {
    let mut out: Vec<String> = Vec::with_capacity(family.len());
    for m in family.members() {
        let mut name = m.label().to_string();
        let mut k = 1;
        while out.contains(&name) {
            k += 1;
            name = format!("{}#{k}", m.label());
        }
        out.push(name);
    }
    out
}

/// A function family as a set: pointwise equality, and `f ≠ g` when some atom
/// separates them.
pub(crate) fn family_as_set<S: Scalar>(name: impl Into<String>, family: &FnFamily<S>) -> IneqSet {
    let members = family.members();
    let n = members.len();
    let carrier = FinSetoid::from_relation(name, member_atoms(family), |a, b| {
        members[a].pointwise_eq(&members[b])
    })
    .expect("pointwise equality is an equivalence");
    let neq = Relation::from_fn(n, |a, b| {
        members[a]
            .values()
            .iter()
            .zip(members[b].values())
            .any(|(u, v)| u.gap(v).is_some())
    });
    IneqSet::new_unchecked(carrier, neq)
}

/// Conditions shared by local and global families of completely separated
/// sets, evaluated on `pairs`.
pub(crate) fn cs_laws<S: Scalar>(
    fam: &CsFamily<S>,
    pairs: &[(usize, usize)],
) -> Result<ClauseReport> {
    let index = fam.index();
    let mut report = ClauseReport::new();

    report.push("index-complsep", check_complsep(index, &fam.index_family)?);

    let mut cond_a = Verdict::Holds;
    let mut cond_b = Verdict::Holds;
    for (i, (fiber, family)) in fam.sets.fibers.iter().zip(&fam.fiber_families).enumerate() {
        let induced = induce(fiber.base(), family)?;
        let tag = |v: Verdict| match v {
            Verdict::Fails(mut w) => {
                w.detail = format!("fiber {}: {}", index.atom(i), w.detail);
                Verdict::Fails(w)
            }
            other => other,
        };
        if cond_a.holds() {
            let n = fiber.len();
            let bad = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .find(|&(a, b)| fiber.neq(a, b) != induced.neq(a, b));
            if let Some((a, b)) = bad {
                cond_a = tag(Verdict::fail(
                    [fiber.atom(a), fiber.atom(b)],
                    "declared inequality differs from the induced one",
                ));
            }
        }
        if cond_b.holds() {
            if let Some((a, b)) = induced.separation_counterexample() {
                cond_b = tag(Verdict::fail(
                    [fiber.atom(a), fiber.atom(b)],
                    "fiber family does not separate",
                ));
            }
        }
    }
    report.push("(a)", cond_a);
    report.push("(b)", cond_b);

    let mut cond_c = Verdict::Holds;
    let mut phi_se = Verdict::Holds;
    let mut lambda_affine = Verdict::Holds;
    for &(i, j) in pairs {
        let phi = fam.phi(i, j)?;
        let back = fam.sets.transport(j, i)?;
        let (fi, fj) = (&fam.fiber_families[i], &fam.fiber_families[j]);
        if cond_c.holds() {
            for (k, f) in fi.members().iter().enumerate() {
                let expected = f.compose(back, "");
                if !fj.member(phi[k]).pointwise_eq(&expected) {
                    cond_c = Verdict::fail(
                        [
                            index.atom(i).to_string(),
                            index.atom(j).to_string(),
                            f.label().to_string(),
                        ],
                        "φ_ij(f) differs from f ∘ λ_ji",
                    );
                    break;
                }
            }
        }
        if phi_se.holds() {
            let (si, sj) = (family_as_set("F_i", fi), family_as_set("F_j", fj));
            let n = fi.len();
            let bad = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .find(|&(a, b)| sj.neq(phi[a], phi[b]) && !si.neq(a, b));
            if let Some((a, b)) = bad {
                phi_se = Verdict::fail(
                    [fi.member(a).label(), fi.member(b).label()],
                    format!(
                        "φ_{}{} is not strongly extensional",
                        index.atom(i),
                        index.atom(j)
                    ),
                );
            }
        }
        if lambda_affine.holds() {
            let t = fam.sets.transport(i, j)?;
            let (xi, xj) = (fam.sets.fibers[i].base(), fam.sets.fibers[j].base());
            if let Verdict::Fails(v) = is_affine_between(t, xi, fi, xj, fj)? {
                lambda_affine = Verdict::fail(
                    names(index, &[i, j]),
                    format!("transport is not affine: {v}"),
                );
            }
        }
    }
    report.push("(c)", cond_c);
    report.push("phi-strongly-extensional", phi_se);
    report.push("lambda-affine", lambda_affine);
    Ok(report)
}

/// Checks the underlying family, conditions (a), (b), (c), and that every
/// `φ_ij` is strongly extensional and every `λ_ij` affine.
pub fn validate_cs_family<S: Scalar>(fam: &CsFamily<S>) -> Result<ClauseReport> {
    let mut report = validate_family(&fam.sets)?;
    let pairs = diagonal(fam.index().base());
    report.clauses.extend(cs_laws(fam, &pairs)?.clauses);
    Ok(report)
}

/// The family whose fibers are the `F_i` (as sets with pointwise equality),
/// separated by the evaluations `x̂(f) := f(x)`, with set transports `φ_ij`
/// and function transports `θ_ij(x̂) := (λ_ij(x))^`.
pub fn induced_function_family<S: Scalar>(fam: &CsFamily<S>) -> Result<CsFamily<S>> {
    let index = fam.index().clone();
    let keys: Vec<(usize, usize)> = fam.sets.transports.keys().copied().collect();
    if keys != diagonal(index.base()) {
        return Err(Error::PreconditionViolated(
            "the induced function family needs transports on the diagonal only".into(),
        ));
    }
    let mut fibers = Vec::new();
    let mut hats = Vec::new();
    for (i, family) in fam.fiber_families.iter().enumerate() {
        let set = family_as_set(format!("F_{}", index.atom(i)), family);
        let x = &fam.sets.fibers[i];
        let members = (0..x.len())
            .map(|a| {
                RealFn::new(
                    format!("^{}", x.atom(a)),
                    family
                        .members()
                        .iter()
                        .map(|f| f.value(a).clone())
                        .collect(),
                )
            })
            .collect();
        hats.push(FnFamily::new(set.base().clone(), members)?);
        fibers.push(set);
    }
    let transports = fam
        .fn_transports
        .iter()
        .map(|(&(i, j), phi)| {
            let label = format!("φ_{}{}", index.atom(i), index.atom(j));
            ((i, j), SetMap::new(label, phi.clone()))
        })
        .collect();
    let sets = SetFamily::new(index, fibers, transports)?;
    let fn_transports = fam
        .sets
        .transports
        .iter()
        .map(|(&k, t)| (k, t.images().to_vec()))
        .collect();
    let hat = CsFamily::new(sets, fam.index_family.clone(), hats, fn_transports)?;
    let report = validate_cs_family(&hat)?;
    if let Some((id, v)) = report.first_failure() {
        return Err(Error::InvariantBroken(format!(
            "hat family fails {id}: {v}"
        )));
    }
    Ok(hat)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PiCs<S> {
    pub cs: ComplSep<S>,
    pub pi: PiSet,
    /// `(i, k)` for the member `f_k ∘ pr_i`.
    pub provenance: Vec<(usize, usize)>,
}

/// The Pi-set with the family `{f_i ∘ pr_i | f_i ∈ F_i, i ∈ I}`.
pub fn pi_cs<S: Scalar>(fam: &CsFamily<S>, bounds: &Bounds) -> Result<PiCs<S>> {
    let pi = pi_set(&fam.sets, bounds)?;
    let mut members = Vec::new();
    let mut provenance = Vec::new();
    for i in 0..fam.index().len() {
        let pr = pi.projection(&fam.sets, i);
        for (k, f) in fam.fiber_families[i].members().iter().enumerate() {
            members.push(f.compose(&pr, format!("{}∘{}", f.label(), pr.label())));
            provenance.push((i, k));
        }
    }
    let family = FnFamily::new(pi.set.base().clone(), members)?;
    let cs = validate_complsep(pi.set.clone(), family)
        .map_err(|e| Error::InvariantBroken(format!("Pi-set: {e}")))?;
    for i in 0..fam.index().len() {
        let pr = pi.projection(&fam.sets, i);
        let fiber = &fam.sets.fibers[i];
        if is_affine_between(
            &pr,
            cs.carrier(),
            cs.family(),
            fiber.base(),
            &fam.fiber_families[i],
        )?
        .fails()
        {
            return Err(Error::InvariantBroken(format!(
                "{} is not affine",
                pr.label()
            )));
        }
    }
    Ok(PiCs { cs, pi, provenance })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fcl3Report {
    /// Every `h ∈ F_j` extends to some `Φ ∈ Π F_i` with `Φ_j = h`.
    pub hypothesis: bool,
    /// The first `(j, h)` with no extension, when the hypothesis fails.
    pub unextended: Option<(String, String)>,
    /// `≠_{K̂ ∪ Ĥ} ⊆ ≠_Σ`
    pub inclusion_i: Verdict,
    /// `≠_Σ ⊆ ≠_{K̂ ∪ Ĥ}` under the hypothesis.
    pub inclusion_ii: Verdict,
    /// The reverse inclusion evaluated regardless of the hypothesis.
    pub reverse_unconditional: Verdict,
    pub dependent_functions: usize,
}

impl Fcl3Report {
    pub fn clauses(&self) -> ClauseReport {
        let hyp = if self.hypothesis {
            Verdict::Holds
        } else {
            let (j, h) = self.unextended.clone().unwrap_or_default();
            Verdict::NotApplicable(format!("`{h}` over `{j}` extends to no dependent function"))
        };
        ClauseReport::new()
            .with("hypothesis", hyp)
            .with("i", self.inclusion_i.clone())
            .with("ii", self.inclusion_ii.clone())
    }
}

/// Compares the Sigma inequality of a family over a discrete index with the
/// inequality induced by `K̂ ∪ Ĥ`, where `k̂(i,x) := k(i)` and
/// `Φ̂(i,x) := Φ_i(x)` for `Φ ∈ Π F_i`.
pub fn fcl3_check<S: Scalar>(fam: &CsFamily<S>, bounds: &Bounds) -> Result<Fcl3Report> {
    let index = fam.index();
    if let Verdict::Fails(v) = check_ineq_axioms(index).ineq6 {
        return Err(Error::IndexNotDiscrete {
            left: v.atoms[0].clone(),
            right: v.atoms[1].clone(),
        });
    }
    let hat = induced_function_family(fam)?;
    let pi = pi_set(&hat.sets, bounds)?;
    let sigma = sigma_set(&fam.sets)?;

    let mut members = Vec::new();
    for k in fam.index_family.members() {
        let values = sigma
            .pairs
            .iter()
            .map(|&(i, _)| k.value(i).clone())
            .collect();
        members.push(RealFn::new(format!("^{}", k.label()), values));
    }
    for phi in &pi.tables {
        let values = sigma
            .pairs
            .iter()
            .map(|&(i, x)| fam.fiber_families[i].member(phi.at(i)).value(x).clone())
            .collect();
        members.push(RealFn::new(format!("^{}", phi.name(&hat.sets)), values));
    }
    let family = FnFamily::new(sigma.set.base().clone(), members)?;
    let induced = induce(sigma.set.base(), &family)?;

    let mut unextended = None;
    'search: for j in 0..index.len() {
        for (k, h) in fam.fiber_families[j].members().iter().enumerate() {
            let target = &fam.fiber_families[j].member(k);
            let found = pi
                .tables
                .iter()
                .any(|phi| fam.fiber_families[j].member(phi.at(j)).pointwise_eq(target));
            if !found {
                unextended = Some((index.atom(j).to_string(), h.label().to_string()));
                break 'search;
            }
        }
    }
    let hypothesis = unextended.is_none();

    let n = sigma.set.len();
    let pairs = || (0..n).flat_map(move |p| (0..n).map(move |q| (p, q)));
    let name =
        |(p, q): (usize, usize)| [sigma.set.atom(p).to_string(), sigma.set.atom(q).to_string()];
    let inclusion_i = pairs()
        .find(|&(p, q)| induced.neq(p, q) && !sigma.set.neq(p, q))
        .map_or(Verdict::Holds, |p| {
            Verdict::fail(name(p), "separated by K̂ ∪ Ĥ but not Sigma-apart")
        });
    let reverse_unconditional = pairs()
        .find(|&(p, q)| sigma.set.neq(p, q) && !induced.neq(p, q))
        .map_or(Verdict::Holds, |p| {
            Verdict::fail(name(p), "Sigma-apart but not separated by K̂ ∪ Ĥ")
        });
    let inclusion_ii = Verdict::conditional(
        hypothesis,
        "some fiber member extends to no dependent function",
        || reverse_unconditional.clone(),
    );
    Ok(Fcl3Report {
        hypothesis,
        unextended,
        inclusion_i,
        inclusion_ii,
        reverse_unconditional,
        dependent_functions: pi.tables.len(),
    })
}
