use std::collections::BTreeMap;

use super::FunctionSpace;
use crate::complsep::{is_affine_between, real_sample, validate_complsep, ComplSep};
use crate::families::{
    family_as_set, is_in_pi, member_atoms, pi_set, validate_family, DepTable, PiSet, SetFamily,
};
use crate::induced::induce;
use crate::kernel::canonical::odometer;
use crate::kernel::{
    canonical_funspace_ineq, is_strongly_extensional, saturating_pow, validate_function, Bounds,
};
use crate::{ClauseReport, Error, FnFamily, IneqSet, RealFn, Result, Scalar, SetMap, Verdict};

/// The dual completely separated set `X* = (F, =_F, ≠_F; X̂)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Dual<S> {
    pub cs: ComplSep<S>,
    /// `members[k]` is the position in `F` of dual atom `k`.
    pub members: Vec<usize>,
}

/// `F` up to pointwise equality, separated by the evaluations
/// `x̂(f) := f(x)`.
pub fn dual_cs<S: Scalar>(fs: &FunctionSpace<S>) -> Result<Dual<S>> {
    let members = fs.family().distinct_members();
    let kept: Vec<RealFn<S>> = members
        .iter()
        .map(|&k| fs.family().member(k).clone())
        .collect();
    let listed = FnFamily::new(fs.carrier().clone(), kept)?;
    let set = family_as_set(format!("{}*", fs.name()), &listed);
    let x = fs.carrier();
    let hats = (0..x.len())
        .map(|a| {
            RealFn::new(
                format!("^{}", x.atom(a)),
                listed
                    .members()
                    .iter()
                    .map(|f| f.value(a).clone())
                    .collect(),
            )
        })
        .collect();
    let family = FnFamily::new(set.base().clone(), hats)?;
    let cs =
        validate_complsep(set, family).map_err(|e| Error::InvariantBroken(format!("dual: {e}")))?;
    Ok(Dual { cs, members })
}

/// `h* : Y* → X*`, `h*(g) := g ∘ h`, for an affine `h : (X; F) → (Y; G)`.
pub fn dual_arrow<S: Scalar>(
    h: &SetMap,
    x: &FunctionSpace<S>,
    y: &FunctionSpace<S>,
) -> Result<SetMap> {
    if let Verdict::Fails(v) =
        is_affine_between(h, x.carrier(), x.family(), y.carrier(), y.family())?
    {
        return Err(Error::NotAffine {
            member: v.atoms.first().cloned().unwrap_or_default(),
        });
    }
    let (dx, dy) = (dual_cs(x)?, dual_cs(y)?);
    let mut images = Vec::with_capacity(dy.members.len());
    for &k in &dy.members {
        let g = y.family().member(k);
        let composed = g.compose(h, "");
        let pos = dx
            .members
            .iter()
            .position(|&j| x.family().member(j).pointwise_eq(&composed))
            .ok_or_else(|| Error::NotAffine {
                member: g.label().to_string(),
            })?;
        images.push(pos);
    }
    let star = SetMap::new(format!("{}*", h.label()), images);
    if !is_affine_between(
        &star,
        dy.cs.carrier(),
        dy.cs.family(),
        dx.cs.carrier(),
        dx.cs.family(),
    )?
    .holds()
    {
        return Err(Error::InvariantBroken(format!(
            "{} is not affine",
            star.label()
        )));
    }
    Ok(star)
}

/// `f̂(x̂) = f(x)` for every `f ∈ F` and `x ∈ X`, reading `f̂` from the dual
/// of the dual.
pub fn bidual_check<S: Scalar>(fs: &FunctionSpace<S>) -> Result<Verdict> {
    let d = dual_cs(fs)?;
    let dd = dual_cs(&FunctionSpace::from_cs(&d.cs))?;
    let hats = d.cs.family();
    for a in 0..fs.len() {
        let slot = dd
            .members
            .iter()
            .position(|&j| hats.member(j).pointwise_eq(hats.member(a)))
            .ok_or_else(|| {
                Error::InvariantBroken(format!("^{} is not in the bidual", fs.carrier().atom(a)))
            })?;
        for (k, &fk) in d.members.iter().enumerate() {
            let f_hat = dd.cs.family().member(k);
            if f_hat.value(slot) != fs.family().member(fk).value(a) {
                return Ok(Verdict::fail(
                    [fs.family().member(fk).label(), fs.carrier().atom(a)],
                    "f̂(x̂) differs from f(x)",
                ));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// `M`: fibers `𝔽(X, λ₀(i))` with transports `μ_ij(φ) := λ_ij ∘ φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomFamily {
    pub family: SetFamily,
    /// `tables[i][k]` is fiber atom `k` of `M_i` as a map `X → λ₀(i)`.
    pub tables: Vec<Vec<SetMap>>,
}

pub fn hom_family_m(x: &IneqSet, lam: &SetFamily, bounds: &Bounds) -> Result<HomFamily> {
    let mut fibers = Vec::new();
    let mut tables = Vec::new();
    for fiber in &lam.fibers {
        let fs = canonical_funspace_ineq(x.base(), fiber, bounds)?;
        fibers.push(fs.set);
        tables.push(fs.tables);
    }
    let mut transports = BTreeMap::new();
    for (&(i, j), l) in &lam.transports {
        let cod = lam.fibers[j].base();
        let images = tables[i]
            .iter()
            .map(|phi| {
                let moved = l.compose(phi);
                tables[j]
                    .iter()
                    .position(|t| t.pointwise_eq(&moved, cod))
                    .ok_or_else(|| {
                        Error::PreconditionViolated(format!("`{}` is not a function", l.label()))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        let label = format!("μ_{}{}", lam.index.atom(i), lam.index.atom(j));
        transports.insert((i, j), SetMap::new(label, images));
    }
    let family = SetFamily::new(lam.index.clone(), fibers, transports)?;
    let report = validate_family(&family)?;
    if let Some((id, v)) = report.first_failure() {
        return Err(Error::InvariantBroken(format!("M fails {id}: {v}")));
    }
    Ok(HomFamily { family, tables })
}

/// `e^H : X → Π Λ` with the checks of the embedding lemma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub map: SetMap,
    pub pi: PiSet,
    /// `function`, `embedding` and `strongly-extensional`.
    pub report: ClauseReport,
}

/// `e^H(x)_i := H_i(x)` for a compatible `H ∈ Π M`.
pub fn embed_eh(
    x: &IneqSet,
    lam: &SetFamily,
    m: &HomFamily,
    h: &DepTable,
    bounds: &Bounds,
) -> Result<Embedding> {
    if let Verdict::Fails(v) = is_in_pi(&m.family, h)? {
        return Err(Error::NotCompatible {
            from: v.atoms[0].clone(),
            to: v.atoms[1].clone(),
        });
    }
    let pi = pi_set(lam, bounds)?;
    let n_index = lam.index_len();
    let coords = |a: usize| -> Vec<usize> {
        (0..n_index)
            .map(|i| m.tables[i][h.at(i)].image(a))
            .collect()
    };
    let mut images = Vec::with_capacity(x.len());
    for a in 0..x.len() {
        let want = coords(a);
        let pos = pi
            .tables
            .iter()
            .position(|t| (0..n_index).all(|i| lam.fibers[i].eq(t.at(i), want[i])))
            .ok_or_else(|| {
                Error::InvariantBroken(format!("e^H({}) is not in the Pi-set", x.atom(a)))
            })?;
        images.push(pos);
    }
    let map = SetMap::new("e^H", images);
    let mut report = ClauseReport::new();
    report.push(
        "function",
        validate_function(x.base(), pi.set.base(), &map)?,
    );

    let n = x.len();
    let pairs = || (0..n).flat_map(|a| (0..n).map(move |b| (a, b)));
    let tight = pairs().all(|(a, b)| pi.set.neq(map.image(a), map.image(b)) || x.eq(a, b));
    report.push(
        "embedding",
        Verdict::conditional(
            tight,
            "the inequality induced by e^H is not tight",
            || match pairs().find(|&(a, b)| pi.set.eq(map.image(a), map.image(b)) && !x.eq(a, b)) {
                None => Verdict::Holds,
                Some((a, b)) => {
                    Verdict::fail([x.atom(a), x.atom(b)], "equal images of unequal atoms")
                }
            },
        ),
    );

    let mut each = true;
    for i in 0..n_index {
        each &= is_strongly_extensional(&m.tables[i][h.at(i)], x, &lam.fibers[i])?.holds();
    }
    let strong = if each {
        is_strongly_extensional(&map, x, &pi.set)?
    } else {
        Verdict::NotApplicable("some H_i is not strongly extensional".into())
    };
    report.push("strongly-extensional", strong);
    Ok(Embedding { map, pi, report })
}

/// `ℝ^F` at desk scale: compatible tables `F → V` with the projections.
#[derive(Debug, Clone, PartialEq)]
pub struct RPower<S> {
    pub cs: ComplSep<S>,
    /// The constant global family `V` over `(F, =_F, ≠_F)`.
    pub sets: SetFamily,
    pub pi: PiSet,
    pub values: Vec<S>,
}

impl<S: Scalar> RPower<S> {
    /// The point whose coordinate at member `k` is `values[coords[k]]`.
    pub fn point(&self, coords: &[usize]) -> Option<usize> {
        self.pi.tables.iter().position(|t| t.0 == coords)
    }

    pub fn value_index(&self, v: &S) -> Option<usize> {
        self.values.iter().position(|w| w == v)
    }
}

/// Builds `ℝ^F` over the value universe `values`, or over the values the
/// members attain when `values` is `None`.
pub fn r_power<S: Scalar>(
    family: &FnFamily<S>,
    values: Option<&[S]>,
    bounds: &Bounds,
) -> Result<RPower<S>> {
    let mut universe: Vec<S> = Vec::new();
    let attained: Vec<S>;
    let source = match values {
        Some(v) => v,
        None => {
            attained = family
                .members()
                .iter()
                .flat_map(|f| f.values().iter().cloned())
                .collect();
            &attained
        }
    };
    for v in source {
        if !universe.contains(v) {
            universe.push(v.clone());
        }
    }
    if universe.is_empty() && !family.is_empty() {
        return Err(Error::EmptyValueUniverse);
    }
    let fiber = real_sample("V", &universe)?;
    let index = family_as_set("F", family);
    let sets = SetFamily::constant_global(index, fiber.set().clone());
    let pi = pi_set(&sets, bounds)?;
    let names = member_atoms(family);
    let members = names
        .iter()
        .enumerate()
        .map(|(k, name)| {
            RealFn::new(
                format!("pr_{name}"),
                pi.tables
                    .iter()
                    .map(|t| universe[t.at(k)].clone())
                    .collect(),
            )
        })
        .collect();
    let fam = FnFamily::new(pi.set.base().clone(), members)?;
    let cs = validate_complsep(pi.set.clone(), fam)
        .map_err(|e| Error::InvariantBroken(format!("ℝ^F: {e}")))?;
    Ok(RPower {
        cs,
        sets,
        pi,
        values: universe,
    })
}

/// Outcome of the Tychonoff embedding checks for one function space.
#[derive(Debug, Clone, PartialEq)]
pub struct TychonoffReport<S> {
    pub separating: bool,
    /// `e^{H(F)}` is injective up to the equalities.
    pub injective: bool,
    pub power: RPower<S>,
    pub embedding: SetMap,
    /// Function, injective, affine and strongly extensional, given
    /// separation.
    pub clause_i: Verdict,
    /// `pr_f ∘ e^{H(F)} = f` for every member.
    pub affine_identity: Verdict,
    /// Every `H(F)_f` strongly extensional implies `e^{H(F)}` is.
    pub strong_ext: Verdict,
    /// Every affine injective `e` found implies separation.
    pub clause_ii: Verdict,
    /// Affine candidates searched, and how many were injective.
    pub searched: usize,
    pub found: usize,
}

impl<S: Scalar> TychonoffReport<S> {
    pub fn clauses(&self) -> ClauseReport {
        let bicond = Verdict::from_check(self.separating == self.injective, || {
            crate::Violation::new(
                [self.embedding.label()],
                format!(
                    "separating is {} but injective is {}",
                    self.separating, self.injective
                ),
            )
        });
        ClauseReport::new()
            .with("i", self.clause_i.clone())
            .with("affine-identity", self.affine_identity.clone())
            .with("strongly-extensional", self.strong_ext.clone())
            .with("ii", self.clause_ii.clone())
            .with("biconditional", bicond)
    }
}

fn injective_on(
    e: &SetMap,
    fs: &FunctionSpace<impl Scalar>,
    target: &IneqSet,
) -> Option<(usize, usize)> {
    let x = fs.carrier();
    let n = x.len();
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| target.eq(e.image(a), e.image(b)) && !x.eq(a, b))
}

/// Clause (ii) for a supplied `e`: if `e` is an affine injection into
/// `ℝ^F`, the family separates.
pub fn tychonoff_given<S: Scalar>(
    fs: &FunctionSpace<S>,
    power: &RPower<S>,
    e: &SetMap,
) -> Result<Verdict> {
    let target = power.cs.set();
    let affine = validate_function(fs.carrier(), power.cs.carrier(), e)?.holds()
        && is_affine_between(
            e,
            fs.carrier(),
            fs.family(),
            power.cs.carrier(),
            power.cs.family(),
        )?
        .holds();
    let injective = injective_on(e, fs, target).is_none();
    if !(affine && injective) {
        return Ok(Verdict::NotApplicable(format!(
            "`{}` is not an affine injection into ℝ^F",
            e.label()
        )));
    }
    let induced = induce(fs.carrier(), fs.family())?;
    Ok(match induced.separation_counterexample() {
        None => Verdict::Holds,
        Some((a, b)) => Verdict::fail(
            [e.label(), fs.carrier().atom(a), fs.carrier().atom(b)],
            "affine injection exists but the family does not separate",
        ),
    })
}

/// Builds `H(F)_f := f` and `e^{H(F)}` into `ℝ^F`, checks clause (i), and
/// searches the affine maps into `ℝ^F` for clause (ii).
///
/// An affine `e` has `pr_f ∘ e ∈ F` for every `f`, so it is determined (up
/// to pointwise equality) by a choice of member per `=_F`-class of
/// coordinates; all such choices are tried when there are at most
/// `max_enum` of them.
pub fn tychonoff_check<S: Scalar>(
    fs: &FunctionSpace<S>,
    bounds: &Bounds,
) -> Result<TychonoffReport<S>> {
    let family = fs.family();
    let mut values: Vec<S> = family
        .members()
        .iter()
        .flat_map(|f| f.values().iter().cloned())
        .collect();
    if values.is_empty() && !family.is_empty() {
        values.push(S::zero());
    }
    let power = r_power(family, Some(&values), bounds)?;
    let x = fs.carrier();
    let on_declared = induce(x, family)?.on_declared();
    let separating = induce(x, family)?.is_separating();

    let coords_of = |choice: &dyn Fn(usize) -> usize, a: usize| -> Vec<usize> {
        (0..family.len())
            .map(|k| {
                power
                    .value_index(family.member(choice(k)).value(a))
                    .expect("value in universe")
            })
            .collect()
    };
    let build = |label: &str, choice: &dyn Fn(usize) -> usize| -> Result<SetMap> {
        let images = (0..x.len())
            .map(|a| {
                power.point(&coords_of(choice, a)).ok_or_else(|| {
                    Error::InvariantBroken(format!("{label}({}) is not in ℝ^F", x.atom(a)))
                })
            })
            .collect::<Result<_>>()?;
        Ok(SetMap::new(label, images))
    };
    let e = build("e^H(F)", &|k| k)?;
    let target = power.cs.set();
    let injective = injective_on(&e, fs, target).is_none();

    let mut affine_identity = Verdict::Holds;
    for (k, f) in family.members().iter().enumerate() {
        let pr = power.cs.family().member(k);
        if !pr.compose(&e, "").pointwise_eq(f) {
            affine_identity = Verdict::fail([f.label()], "pr_f ∘ e^H(F) differs from f");
            break;
        }
    }

    let clause_i = Verdict::conditional(separating, "the family does not separate", || {
        let function = validate_function(x, power.cs.carrier(), &e)
            .unwrap_or_else(|err| Verdict::fail([e.label()], err.to_string()));
        let inj = match injective_on(&e, fs, target) {
            None => Verdict::Holds,
            Some((a, b)) => Verdict::fail([x.atom(a), x.atom(b)], "equal images of unequal atoms"),
        };
        let affine = is_affine_between(&e, x, family, power.cs.carrier(), power.cs.family())
            .unwrap_or_else(|err| Verdict::fail([e.label()], err.to_string()));
        let strong = is_strongly_extensional(&e, &on_declared, target)
            .unwrap_or_else(|err| Verdict::fail([e.label()], err.to_string()));
        Verdict::all([function, inj, affine, strong])
    });

    let sample = power.sets.fibers.first().cloned();
    let mut each = true;
    if let Some(v) = &sample {
        for f in family.members() {
            let images = f
                .values()
                .iter()
                .map(|w| power.value_index(w).expect("value in universe"))
                .collect();
            let as_map = SetMap::new(f.label(), images);
            each &= is_strongly_extensional(&as_map, &on_declared, v)?.holds();
        }
    }
    let strong_ext = Verdict::conditional(each, "some H(F)_f is not strongly extensional", || {
        is_strongly_extensional(&e, &on_declared, target)
            .unwrap_or_else(|err| Verdict::fail([e.label()], err.to_string()))
    });

    // Clause (ii): one member per class of coordinates.
    let index = &power.sets.index;
    let classes: Vec<usize> = index.base().blocks().iter().map(|b| b[0]).collect();
    let distinct = family.distinct_members();
    let count = saturating_pow(distinct.len(), classes.len());
    let (clause_ii, searched, found) = if bounds.check_enum(count).is_err() {
        (
            Verdict::NotApplicable(format!(
                "search space of {count} affine maps exceeds the bound"
            )),
            0,
            0,
        )
    } else {
        let mut searched = 0;
        let mut found = 0;
        let mut verdict = Verdict::Holds;
        let radices = vec![distinct.len(); classes.len()];
        for digits in odometer(&radices) {
            let choice = |k: usize| distinct[digits[index.base().block_of(k)]];
            let label = format!("e{searched}");
            let cand = build(&label, &choice)?;
            searched += 1;
            let v = tychonoff_given(fs, &power, &cand)?;
            if v.is_not_applicable() {
                continue;
            }
            found += 1;
            if v.fails() {
                verdict = v;
                break;
            }
        }
        if found == 0 {
            verdict = Verdict::NotApplicable(format!(
                "no affine embedding found among {searched} candidates"
            ));
        }
        (verdict, searched, found)
    };

    Ok(TychonoffReport {
        separating,
        injective,
        power,
        embedding: e,
        clause_i,
        affine_identity,
        strong_ext,
        clause_ii,
        searched,
        found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::two_index;
    use crate::{FinSetoid, Rat};

    fn r(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&n| Rat::from_integer(n)).collect()
    }

    fn ex_space(members: &[(&str, &[i64])]) -> FunctionSpace<Rat> {
        let x = FinSetoid::discrete("X", ["a", "b", "c"]).unwrap();
        let fam = FnFamily::new(
            x.clone(),
            members.iter().map(|(l, v)| RealFn::new(*l, r(v))).collect(),
        )
        .unwrap();
        FunctionSpace::new(x, fam).unwrap()
    }

    fn full() -> FunctionSpace<Rat> {
        ex_space(&[("f", &[0, 0, 1]), ("g", &[0, 1, 1])])
    }

    #[test]
    fn dual_of_ex_has_two_points_apart_at_b() {
        let d = dual_cs(&full()).unwrap();
        assert_eq!(d.cs.len(), 2);
        let w = d.cs.induced();
        let sep = w.witness(0, 1).unwrap();
        assert_eq!(sep.label, "^b");
        assert_eq!(sep.gap, Rat::from_integer(1));
    }

    #[test]
    fn dual_deduplicates_and_handles_empty() {
        let fs = ex_space(&[("f", &[0, 0, 1]), ("f2", &[0, 0, 1])]);
        assert_eq!(dual_cs(&fs).unwrap().cs.len(), 1);
        assert!(dual_cs(&ex_space(&[])).unwrap().cs.is_empty());
    }

    #[test]
    fn bidual_round_trip() {
        assert!(bidual_check(&full()).unwrap().holds());
        assert!(
            bidual_check(&ex_space(&[("f", &[0, 2, 1]), ("f2", &[0, 2, 1])]))
                .unwrap()
                .holds()
        );
    }

    #[test]
    fn dual_of_identity_is_identity() {
        let fs = full();
        let star = dual_arrow(&SetMap::identity(3).with_label("id"), &fs, &fs).unwrap();
        assert_eq!(star.images(), &[0, 1]);
    }

    #[test]
    fn r_power_of_one_member() {
        let fs = ex_space(&[("f", &[0, 0, 1])]);
        let p = r_power(fs.family(), None, &Bounds::default()).unwrap();
        assert_eq!(p.cs.len(), 2);
        let w = p.cs.induced().witness(0, 1).cloned().unwrap();
        assert_eq!(w.label, "pr_f");
    }

    #[test]
    fn r_power_with_equal_members_and_singleton_universe() {
        let fs = ex_space(&[("f", &[0, 0, 1]), ("f2", &[0, 0, 1])]);
        let p = r_power(fs.family(), None, &Bounds::default()).unwrap();
        assert_eq!(p.cs.len(), 2);
        assert!(p.pi.tables.iter().all(|t| t.at(0) == t.at(1)));
        let one = r_power(fs.family(), Some(&r(&[3])), &Bounds::default()).unwrap();
        assert_eq!(one.cs.len(), 1);
        assert_eq!(
            r_power(fs.family(), Some(&[]), &Bounds::default()).unwrap_err(),
            Error::EmptyValueUniverse
        );
    }

    #[test]
    fn tychonoff_on_separating_ex() {
        let rep = tychonoff_check(&full(), &Bounds::default()).unwrap();
        assert!(rep.separating && rep.injective);
        assert!(rep.clauses().overall().holds(), "{:?}", rep.clauses());
        assert!(rep.clause_i.holds());
        assert!(rep.clause_ii.holds());
    }

    #[test]
    fn tychonoff_on_non_separating_ex() {
        let rep = tychonoff_check(&ex_space(&[("f", &[0, 0, 1])]), &Bounds::default()).unwrap();
        assert!(!rep.separating && !rep.injective);
        assert!(rep.clause_i.is_not_applicable());
        assert!(rep.clause_ii.is_not_applicable());
        assert_eq!(rep.found, 0);
        assert!(rep.clauses().first_failure().is_none());
    }

    #[test]
    fn tychonoff_on_singleton() {
        let x = FinSetoid::discrete("X", ["a"]).unwrap();
        let fs = FunctionSpace::new(
            x.clone(),
            FnFamily::new(x, vec![RealFn::new("f", r(&[5]))]).unwrap(),
        )
        .unwrap();
        let rep = tychonoff_check(&fs, &Bounds::default()).unwrap();
        assert!(rep.clauses().first_failure().is_none());
    }

    fn sample_family() -> (IneqSet, SetFamily) {
        let x = IneqSet::cross_block(FinSetoid::discrete("X", ["a", "b", "c"]).unwrap());
        let v = real_sample("V", &r(&[0, 1])).unwrap();
        let index = family_as_set("F", full().family());
        (x, SetFamily::constant(index, v.set().clone()))
    }

    #[test]
    fn embedding_of_ex_members() {
        let (x, lam) = sample_family();
        let m = hom_family_m(&x, &lam, &Bounds::default()).unwrap();
        // f = [0,0,1] and g = [0,1,1] as tables into V = {0, 1}.
        let pick = |want: &[usize]| m.tables[0].iter().position(|t| t.images() == want).unwrap();
        let h = DepTable(vec![pick(&[0, 0, 1]), pick(&[0, 1, 1])]);
        let emb = embed_eh(&x, &lam, &m, &h, &Bounds::default()).unwrap();
        assert!(emb.report.overall().holds(), "{:?}", emb.report);
        let at = |a: usize| emb.pi.tables[emb.map.image(a)].0.clone();
        assert_eq!(at(0), vec![0, 0]);
        assert_eq!(at(2), vec![1, 1]);
        assert_eq!(emb.report.clause("embedding"), Some(&Verdict::Holds));
    }

    #[test]
    fn constant_h_is_not_an_embedding() {
        let (x, lam) = sample_family();
        let m = hom_family_m(&x, &lam, &Bounds::default()).unwrap();
        let zero = m.tables[0]
            .iter()
            .position(|t| t.images() == [0, 0, 0])
            .unwrap();
        let emb = embed_eh(
            &x,
            &lam,
            &m,
            &DepTable(vec![zero, zero]),
            &Bounds::default(),
        )
        .unwrap();
        assert!(emb.report.clause("embedding").unwrap().is_not_applicable());
    }

    #[test]
    fn incompatible_h_is_rejected() {
        let x = IneqSet::cross_block(FinSetoid::discrete("X", ["a"]).unwrap());
        let v = real_sample("V", &r(&[0, 1])).unwrap();
        let index = IneqSet::new(
            FinSetoid::new("I", ["i", "j"], [vec!["i", "j"]]).unwrap(),
            crate::Relation::empty(2),
        )
        .unwrap();
        let lam = SetFamily::constant(index, v.set().clone());
        let m = hom_family_m(&x, &lam, &Bounds::default()).unwrap();
        let err = embed_eh(&x, &lam, &m, &DepTable(vec![0, 1]), &Bounds::default()).unwrap_err();
        assert!(matches!(err, Error::NotCompatible { .. }));
    }

    #[test]
    fn hom_family_over_a_singleton_copies_the_fibers() {
        let x = IneqSet::cross_block(FinSetoid::discrete("X", ["a"]).unwrap());
        let y = IneqSet::cross_block(FinSetoid::discrete("Y", ["p", "q", "r"]).unwrap());
        let z = IneqSet::cross_block(FinSetoid::discrete("Z", ["s"]).unwrap());
        let lam = SetFamily::two(y, z);
        assert_eq!(two_index().len(), 2);
        let m = hom_family_m(&x, &lam, &Bounds::default()).unwrap();
        assert_eq!(m.family.fibers[0].len(), 3);
        assert_eq!(m.family.fibers[1].len(), 1);
    }

    #[test]
    fn hom_family_with_a_swapping_transport() {
        let x = IneqSet::cross_block(FinSetoid::discrete("X", ["a", "b"]).unwrap());
        let y = IneqSet::cross_block(FinSetoid::discrete("Y", ["p", "q"]).unwrap());
        let z = IneqSet::cross_block(FinSetoid::discrete("Z", ["s", "t"]).unwrap());
        let index = IneqSet::new(
            FinSetoid::new("I", ["i", "j"], [vec!["i", "j"]]).unwrap(),
            crate::Relation::empty(2),
        )
        .unwrap();
        let mut transports = BTreeMap::new();
        transports.insert((0, 0), SetMap::identity(2));
        transports.insert((1, 1), SetMap::identity(2));
        transports.insert((0, 1), SetMap::new("λ_ij", vec![1, 0]));
        transports.insert((1, 0), SetMap::new("λ_ji", vec![1, 0]));
        let lam = SetFamily::new(index, vec![y, z], transports).unwrap();
        let m = hom_family_m(&x, &lam, &Bounds::default()).unwrap();
        assert_eq!(m.family.fibers[0].len(), 4);
        let mu = m.family.transport(0, 1).unwrap();
        for (k, phi) in m.tables[0].iter().enumerate() {
            let moved = &m.tables[1][mu.image(k)];
            for a in 0..2 {
                assert_eq!(moved.image(a), 1 - phi.image(a));
            }
        }
    }
}
