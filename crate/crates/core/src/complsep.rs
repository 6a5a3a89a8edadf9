//! Completely separated sets and affine arrows, with the product, function
//! space and subset constructions.

use crate::induced::{induce, InducedRelations};
use crate::kernel::{
    canonical_product_ineq, canonical_subset_ineq, enumerate_functions, validate_function, Bounds,
};
use crate::{
    Error, FinSetoid, FnFamily, IneqSet, RealFn, Relation, Result, Scalar, SetMap, Verdict,
};

/// A set with an inequality whose inequality is induced by a separating
/// family of real-valued functions.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplSep<S> {
    set: IneqSet,
    family: FnFamily<S>,
}

impl<S: Scalar> ComplSep<S> {
    /// Equips `x` with the inequality induced by `family`, provided the
    /// family separates.
    pub fn induced_by(x: FinSetoid, family: FnFamily<S>) -> Result<Self> {
        let neq = induce(&x, &family)?.neq_relation();
        validate_complsep(IneqSet::new_unchecked(x, neq), family)
    }

    pub fn set(&self) -> &IneqSet {
        &self.set
    }

    pub fn carrier(&self) -> &FinSetoid {
        self.set.base()
    }

    pub fn family(&self) -> &FnFamily<S> {
        &self.family
    }

    pub fn name(&self) -> &str {
        self.set.name()
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn atom(&self, i: usize) -> &str {
        self.set.atom(i)
    }

    pub fn induced(&self) -> InducedRelations<S> {
        induce(self.carrier(), &self.family).expect("family lives on the carrier")
    }

    pub fn into_parts(self) -> (IneqSet, FnFamily<S>) {
        (self.set, self.family)
    }

    /// Same equality, same inequality; families may differ as long as both
    /// induce the same relations.
    pub fn same_structure(&self, other: &ComplSep<S>) -> bool {
        self.set.same_structure(&other.set)
    }
}

/// Checks both defining conditions; on failure names the first offending
/// pair and which condition broke.
pub fn check_complsep<S: Scalar>(x: &IneqSet, family: &FnFamily<S>) -> Result<Verdict> {
    let induced = induce(x.base(), family)?;
    let n = x.len();
    for a in 0..n {
        for b in 0..n {
            let (declared, by_family) = (x.neq(a, b), induced.neq(a, b));
            if declared != by_family {
                let why = if declared {
                    "neq mismatch: declared apart but no member separates"
                } else {
                    "neq mismatch: a member separates atoms not declared apart"
                };
                return Ok(Verdict::fail([x.atom(a), x.atom(b)], why));
            }
        }
    }
    Ok(match induced.separation_counterexample() {
        None => Verdict::Holds,
        Some((a, b)) => Verdict::fail(
            [x.atom(a), x.atom(b)],
            "separation failure: unequal atoms agree on every member",
        ),
    })
}

pub fn validate_complsep<S: Scalar>(x: IneqSet, family: FnFamily<S>) -> Result<ComplSep<S>> {
    match check_complsep(&x, &family)? {
        Verdict::Fails(v) => Err(Error::NotCompletelySeparated {
            left: v.atoms[0].clone(),
            right: v.atoms[1].clone(),
            reason: v.detail,
        }),
        _ => Ok(ComplSep { set: x, family }),
    }
}

/// `g ∘ h ∈ F` for every `g` in the target family, membership being
/// pointwise equality with a listed member.
pub fn is_affine<S: Scalar>(h: &SetMap, src: &ComplSep<S>, dst: &ComplSep<S>) -> Result<Verdict> {
    is_affine_between(h, src.carrier(), src.family(), dst.carrier(), dst.family())
}

/// Affinity for arbitrary function spaces `(X; F) → (Y; G)`.
pub fn is_affine_between<S: Scalar>(
    h: &SetMap,
    x: &FinSetoid,
    f: &FnFamily<S>,
    y: &FinSetoid,
    g: &FnFamily<S>,
) -> Result<Verdict> {
    h.check_shape(x, y)?;
    if g.carrier().len() != y.len() || f.carrier().len() != x.len() {
        return Err(Error::DomainMismatch(format!(
            "families do not live on `{}` and `{}`",
            x.name(),
            y.name()
        )));
    }
    if let Verdict::Fails(v) = validate_function(x, y, h)? {
        return Err(Error::PreconditionViolated(format!(
            "`{}` is not a function: {v}",
            h.label()
        )));
    }
    for member in g.members() {
        let composed = member.compose(h, format!("{}∘{}", member.label(), h.label()));
        if !f.contains(&composed) {
            return Ok(Verdict::fail(
                [member.label()],
                format!("{} is not in the source family", composed.label()),
            ));
        }
    }
    Ok(Verdict::Holds)
}

/// A discrete sample of the reals: one atom per distinct value, separated by
/// the identity.
pub fn real_sample<S: Scalar>(name: impl Into<String>, values: &[S]) -> Result<ComplSep<S>> {
    let mut distinct: Vec<S> = Vec::new();
    for v in values {
        if !distinct.contains(v) {
            distinct.push(v.clone());
        }
    }
    let atoms: Vec<String> = distinct.iter().map(|v| v.to_string()).collect();
    let carrier = FinSetoid::discrete(name, atoms)?;
    let id = RealFn::new("id", distinct);
    ComplSep::induced_by(carrier.clone(), FnFamily::new(carrier, vec![id])?)
}

/// A real-valued table as an arrow into a sample containing its values.
pub fn as_sample_arrow<S: Scalar>(f: &RealFn<S>, sample: &ComplSep<S>) -> Result<SetMap> {
    let id = sample
        .family()
        .members()
        .first()
        .ok_or_else(|| Error::PreconditionViolated("sample has no identity member".into()))?;
    let images = f
        .values()
        .iter()
        .map(|v| {
            id.values().iter().position(|w| w == v).ok_or_else(|| {
                Error::PreconditionViolated(format!("value {v} is not in the sample"))
            })
        })
        .collect::<Result<_>>()?;
    Ok(SetMap::new(f.label(), images))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Which factor, and which member of its family, a product member came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Provenance {
    pub side: Side,
    pub member: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CsProduct<S> {
    pub cs: ComplSep<S>,
    pub pairs: Vec<(usize, usize)>,
    pub pr1: SetMap,
    pub pr2: SetMap,
    /// `provenance[k]` describes member `k` of the product family.
    pub provenance: Vec<Provenance>,
}

/// `A × B` with the family `{f ∘ pr1} ∪ {g ∘ pr2}`.
pub fn cs_product<S: Scalar>(
    a: &ComplSep<S>,
    b: &ComplSep<S>,
    bounds: &Bounds,
) -> Result<CsProduct<S>> {
    bounds.check_enum(a.len() as u128 * b.len() as u128)?;
    let prod = canonical_product_ineq(a.set(), b.set())?;
    let mut members = Vec::new();
    let mut provenance = Vec::new();
    for (k, f) in a.family().members().iter().enumerate() {
        members.push(f.compose(&prod.pr1, format!("{}∘pr1", f.label())));
        provenance.push(Provenance {
            side: Side::Left,
            member: k,
        });
    }
    for (k, g) in b.family().members().iter().enumerate() {
        members.push(g.compose(&prod.pr2, format!("{}∘pr2", g.label())));
        provenance.push(Provenance {
            side: Side::Right,
            member: k,
        });
    }
    let family = FnFamily::new(prod.set.base().clone(), members)?;
    let cs = validate_complsep(prod.set.clone(), family)
        .map_err(|e| Error::InvariantBroken(format!("product: {e}")))?;
    for (pr, target) in [(&prod.pr1, a), (&prod.pr2, b)] {
        if is_affine(pr, &cs, target)?.fails() {
            return Err(Error::InvariantBroken(format!(
                "{} is not affine",
                pr.label()
            )));
        }
    }
    Ok(CsProduct {
        cs,
        pairs: prod.pairs,
        pr1: prod.pr1,
        pr2: prod.pr2,
        provenance,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CsFunSpace<S> {
    pub cs: ComplSep<S>,
    pub tables: Vec<SetMap>,
    /// `evals[k] = (x, g)` for the member `φ_{x,g}` at position `k`.
    pub evals: Vec<(usize, usize)>,
}

/// `𝔽(X, Y)` with the family `{φ_{x,g} | x ∈ X, g ∈ G}`, `φ_{x,g}(h) = g(h(x))`.
pub fn cs_funspace<S: Scalar>(
    a: &ComplSep<S>,
    b: &ComplSep<S>,
    bounds: &Bounds,
) -> Result<CsFunSpace<S>> {
    let tables = enumerate_functions(a.carrier(), b.carrier(), bounds)?;
    let names: Vec<String> = tables.iter().map(|t| t.label().to_string()).collect();
    let y = b.carrier();
    let carrier =
        FinSetoid::from_relation(format!("F({},{})", a.name(), b.name()), names, |s, t| {
            tables[s].pointwise_eq(&tables[t], y)
        })?;
    let mut members = Vec::new();
    let mut evals = Vec::new();
    for x in 0..a.len() {
        for (k, g) in b.family().members().iter().enumerate() {
            let values = tables.iter().map(|h| g.value(h.image(x)).clone()).collect();
            members.push(RealFn::new(
                format!("φ_{{{},{}}}", a.atom(x), g.label()),
                values,
            ));
            evals.push((x, k));
        }
    }
    let family = FnFamily::new(carrier.clone(), members)?;
    let induced_b = b.induced();
    let neq = Relation::from_fn(tables.len(), |s, t| {
        (0..a.len()).any(|x| induced_b.neq(tables[s].image(x), tables[t].image(x)))
    });
    let cs = validate_complsep(IneqSet::new_unchecked(carrier, neq), family)
        .map_err(|e| Error::InvariantBroken(format!("function space: {e}")))?;
    Ok(CsFunSpace { cs, tables, evals })
}

/// The subset along `incl : sub → A`, with the family `F ∘ incl`.
pub fn cs_subset<S: Scalar>(
    a: &ComplSep<S>,
    sub: &FinSetoid,
    incl: &SetMap,
) -> Result<ComplSep<S>> {
    let pulled = canonical_subset_ineq(a.set(), sub, incl)?;
    let members = a
        .family()
        .members()
        .iter()
        .map(|f| f.compose(incl, format!("{}∘{}", f.label(), incl.label())))
        .collect();
    let family = FnFamily::new(sub.clone(), members)?;
    let cs = validate_complsep(pulled, family)
        .map_err(|e| Error::InvariantBroken(format!("subset: {e}")))?;
    if is_affine(incl, &cs, a)?.fails() {
        return Err(Error::InvariantBroken(format!(
            "{} is not affine",
            incl.label()
        )));
    }
    Ok(cs)
}

/// Subset on the named atoms, with the restricted equality.
pub fn cs_subset_of<S: Scalar>(
    a: &ComplSep<S>,
    name: &str,
    atoms: &[&str],
) -> Result<(ComplSep<S>, SetMap)> {
    let (sub, incl) = a.carrier().subset(name, atoms)?;
    Ok((cs_subset(a, &sub, &incl)?, incl))
}
