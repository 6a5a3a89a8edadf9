use super::{
    hom_equality, square, unique_among, AdjunctionReport, ArrowKind, FunctionSpace, HomSet,
};
use crate::complsep::{check_complsep, cs_product, is_affine_between, validate_complsep, ComplSep};
use crate::induced::induce;
use crate::kernel::canonical::{enumerate_tables, product_setoid};
use crate::kernel::{real_fn_strongly_extensional, validate_function, Bounds};
use crate::{
    ClauseReport, Error, FinSetoid, FnFamily, IneqSet, RealFn, Result, Scalar, SetMap, Verdict,
};

/// `ρ_F X` together with the unit `τ_X : X → |ρ_F X|`.
///
/// `ρF` is stored as the tables of `F` re-typed over the induced equality;
/// `τ*_X` and `ρ_X` are both the identity on tables.
#[derive(Debug, Clone, PartialEq)]
pub struct Reflection<S> {
    pub cs: ComplSep<S>,
    pub tau: SetMap,
    /// `(X, =_X)` before re-equipping.
    pub source: FinSetoid,
}

impl<S: Scalar> Reflection<S> {
    /// `τ*_X(g) := g ∘ τ_X`.
    pub fn tau_star(&self, g: &RealFn<S>) -> RealFn<S> {
        g.compose(&self.tau, format!("{}∘τ", g.label()))
    }

    /// `ρ_X(f) := f`.
    pub fn rho_x(&self, f: &RealFn<S>) -> RealFn<S> {
        f.clone()
    }
}

/// The Stone-Čech reflection of a function space: `X` with `=_(X,F)`,
/// `≠_(X,F)` and the family `ρF`.
pub fn rho<S: Scalar>(fs: &FunctionSpace<S>) -> Result<Reflection<S>> {
    let induced = induce(fs.carrier(), fs.family())?;
    let eq = induced
        .eq_setoid()
        .clone()
        .renamed(format!("ρ{}", fs.name()));
    let family = fs.family().retyped(eq.clone())?;
    let set = IneqSet::new_unchecked(eq, induced.neq_relation());
    let cs = validate_complsep(set, family)
        .map_err(|e| Error::InvariantBroken(format!("reflection: {e}")))?;
    Ok(Reflection {
        cs,
        tau: SetMap::identity(fs.len()).with_label("τ"),
        source: fs.carrier().clone(),
    })
}

/// The assertions of the reflection theorem for one function space.
pub fn rho_check<S: Scalar>(fs: &FunctionSpace<S>) -> Result<ClauseReport> {
    let r = rho(fs)?;
    let mut report = ClauseReport::new();
    report.push("complsep", check_complsep(r.cs.set(), r.cs.family())?);

    let mut strong = Verdict::Holds;
    for f in r.cs.family().members() {
        strong = real_fn_strongly_extensional(f, r.cs.set())?;
        if !strong.holds() {
            break;
        }
    }
    report.push("strongly-extensional", strong);
    report.push(
        "tau-function",
        validate_function(&r.source, r.cs.carrier(), &r.tau)?,
    );

    let (f, rf) = (fs.family(), r.cs.family());
    let mut round_trip = Verdict::Holds;
    for (k, m) in f.members().iter().enumerate() {
        let there = r.rho_x(m);
        let back = r.tau_star(&there);
        let ok = rf.contains(&there) && back.pointwise_eq(m);
        let g = rf.member(k);
        let again = r.rho_x(&r.tau_star(g));
        if !(ok && f.contains(&r.tau_star(g)) && again.pointwise_eq(g)) {
            round_trip = Verdict::fail([m.label()], "τ*_X and ρ_X are not mutually inverse");
            break;
        }
    }
    report.push("round-trip", round_trip);

    let over_f = induce(fs.carrier(), f)?;
    let over_rf = r.cs.induced();
    let n = fs.len();
    let chain = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| {
            over_f.eq(a, b) != over_rf.eq(a, b) || over_f.neq(a, b) != over_rf.neq(a, b)
        });
    report.push(
        "same-induced-relations",
        match chain {
            None => Verdict::Holds,
            Some((a, b)) => Verdict::fail(
                [fs.carrier().atom(a), fs.carrier().atom(b)],
                "ρF and F induce different relations",
            ),
        },
    );
    Ok(report)
}

/// `ρh := h` for an affine `h : (X; F) → (Y; G)` with `Y` completely
/// separated; fails with [`Error::NotAffine`] on the first `g` with
/// `g ∘ h ∉ F`.
pub fn rho_arrow<S: Scalar>(h: &SetMap, fs: &FunctionSpace<S>, y: &ComplSep<S>) -> Result<SetMap> {
    if let Verdict::Fails(v) =
        is_affine_between(h, fs.carrier(), fs.family(), y.carrier(), y.family())?
    {
        return Err(Error::NotAffine {
            member: v.atoms.first().cloned().unwrap_or_default(),
        });
    }
    let r = rho(fs)?;
    if let Verdict::Fails(v) = validate_function(r.cs.carrier(), y.carrier(), h)? {
        return Err(Error::InvariantBroken(format!(
            "ρh does not respect =_(X,F): {v}"
        )));
    }
    if let Verdict::Fails(v) =
        is_affine_between(h, r.cs.carrier(), r.cs.family(), y.carrier(), y.family())?
    {
        return Err(Error::InvariantBroken(format!("ρh is not affine: {v}")));
    }
    Ok(h.clone().with_label(format!("ρ{}", h.label())))
}

fn affine_hom<S: Scalar>(
    x: &FinSetoid,
    f: &FnFamily<S>,
    y: &FinSetoid,
    g: &FnFamily<S>,
    bounds: &Bounds,
) -> Result<HomSet> {
    HomSet::enumerate(x, y, ArrowKind::Affine, bounds, |t| {
        Ok(is_affine_between(t, x, f, y, g)?.holds())
    })
}

/// For every affine `h : (X; F) → Y`, `ρh` is a function from `ρ_F X`, is
/// affine, satisfies `ρh ∘ τ_X = h`, and is the only such table.
pub fn rho_universal_check<S: Scalar>(
    fs: &FunctionSpace<S>,
    y: &ComplSep<S>,
    bounds: &Bounds,
) -> Result<ClauseReport> {
    let r = rho(fs)?;
    let cod = y.carrier();
    let arrows = affine_hom(fs.carrier(), fs.family(), cod, y.family(), bounds)?;
    let candidates: Vec<SetMap> = enumerate_tables(fs.len(), y.len(), bounds)?
        .into_iter()
        .filter(|t| {
            validate_function(r.cs.carrier(), cod, t).is_ok_and(|v| v.holds())
                && is_affine_between(t, r.cs.carrier(), r.cs.family(), cod, y.family())
                    .is_ok_and(|v| v.holds())
        })
        .collect();
    let mut exists = Verdict::Holds;
    let mut triangle = Verdict::Holds;
    let mut unique = Verdict::Holds;
    for h in &arrows.arrows {
        let rh = match rho_arrow(h, fs, y) {
            Ok(rh) => rh,
            Err(e) => {
                exists = Verdict::fail([h.label()], e.to_string());
                break;
            }
        };
        if triangle.holds() && !rh.compose(&r.tau).pointwise_eq(h, cod) {
            triangle = Verdict::fail([h.label()], "ρh ∘ τ_X differs from h");
        }
        if unique.holds() {
            unique = unique_among(&candidates, &rh, cod, |t| {
                t.compose(&r.tau).pointwise_eq(h, cod)
            });
        }
    }
    Ok(ClauseReport::new()
        .with("affine-function", exists)
        .with("triangle", triangle)
        .with("unique", unique))
}

/// Both adjunctions `ρ ⊣ Emb` and `Emb ⊣ ρ` for one pair of function
/// spaces, plus the universal property of `ρh`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoAdjunctionReport {
    /// `ρ ⊣ Emb` with source `(X; F)` and target `ρ_G Y`.
    pub reflection: AdjunctionReport,
    /// `Emb ⊣ ρ` with source `ρ_F X` and target `(Y; G)`.
    pub coreflection: AdjunctionReport,
    pub universal: ClauseReport,
}

impl RhoAdjunctionReport {
    pub fn clauses(&self) -> ClauseReport {
        let mut out = ClauseReport::new();
        for (prefix, r) in [
            ("rho-emb", &self.reflection),
            ("emb-rho", &self.coreflection),
        ] {
            for (id, v) in r.clauses().clauses {
                out.push(format!("{prefix}/{id}"), v);
            }
        }
        for (id, v) in &self.universal.clauses {
            out.push(format!("universal/{id}"), v.clone());
        }
        out
    }

    pub fn overall(&self) -> Verdict {
        self.clauses().overall()
    }
}

fn require_affine<S: Scalar>(h: &SetMap, x: &FunctionSpace<S>, y: &FunctionSpace<S>) -> Result<()> {
    match is_affine_between(h, x.carrier(), x.family(), y.carrier(), y.family())? {
        Verdict::Fails(v) => Err(Error::NotAffine {
            member: v.atoms.first().cloned().unwrap_or_default(),
        }),
        _ => Ok(()),
    }
}

/// Checks `ρ ⊣ Emb` and `Emb ⊣ ρ` on `(a, b)`.
///
/// `phis` are affine arrows `(X′; F′) → a` and `thetas` affine arrows
/// `b → (Y′; G′)`; each is used in both adjunctions, passing through `ρ`
/// where the objects must be completely separated.
pub fn rho_adjunction_check<S: Scalar>(
    a: &FunctionSpace<S>,
    b: &FunctionSpace<S>,
    phis: &[(FunctionSpace<S>, SetMap)],
    thetas: &[(FunctionSpace<S>, SetMap)],
    bounds: &Bounds,
) -> Result<RhoAdjunctionReport> {
    for (src, phi) in phis {
        require_affine(phi, src, a)?;
    }
    for (dst, theta) in thetas {
        require_affine(theta, b, dst)?;
    }
    let ra = rho(a)?;
    let rb = rho(b)?;

    // ρ ⊣ Emb: Hom(ρ_F X, Y) = Hom((X; F), Emb Y) with Y := ρ_G b.
    let y = &rb.cs;
    let hom_rho = |r: &Reflection<S>, y: &ComplSep<S>| {
        affine_hom(
            r.cs.carrier(),
            r.cs.family(),
            y.carrier(),
            y.family(),
            bounds,
        )
    };
    let hom_emb = |x: &FunctionSpace<S>, y: &ComplSep<S>| {
        affine_hom(x.carrier(), x.family(), y.carrier(), y.family(), bounds)
    };
    let left = hom_rho(&ra, y)?;
    let right = hom_emb(a, y)?;
    let mut reflection = AdjunctionReport {
        hom_equality: hom_equality(&left, &right, y.carrier()),
        left_size: left.len(),
        right_size: right.len(),
        naturality_left: Vec::new(),
        naturality_right: Vec::new(),
    };
    for (src, phi) in phis {
        let rsrc = rho(src)?;
        let left2 = hom_rho(&rsrc, y)?;
        let right2 = hom_emb(src, y)?;
        reflection.naturality_left.push(square(
            &left,
            |h| h.compose(phi),
            (&left2, y.carrier()),
            (&right, y.carrier()),
            |h| h.compose(phi),
            (&right2, y.carrier()),
            phi.label(),
        ));
    }
    for (dst, theta) in thetas {
        let y2 = rho(dst)?.cs;
        let left2 = hom_rho(&ra, &y2)?;
        let right2 = hom_emb(a, &y2)?;
        reflection.naturality_right.push(square(
            &left,
            |h| theta.compose(h),
            (&left2, y2.carrier()),
            (&right, y.carrier()),
            |h| theta.compose(h),
            (&right2, y2.carrier()),
            theta.label(),
        ));
    }

    // Emb ⊣ ρ: Hom(Emb X, (Y; G)) = Hom(X, ρ_G Y) with X := ρ_F a. Arrows
    // into (Y; G) are compared up to the coarser equality =_(Y,G).
    let x = &ra.cs;
    let hom_fs = |x: &ComplSep<S>, y: &FunctionSpace<S>| {
        affine_hom(x.carrier(), x.family(), y.carrier(), y.family(), bounds)
    };
    let hom_cs = |x: &ComplSep<S>, r: &Reflection<S>| {
        affine_hom(
            x.carrier(),
            x.family(),
            r.cs.carrier(),
            r.cs.family(),
            bounds,
        )
    };
    let left = hom_fs(x, b)?;
    let right = hom_cs(x, &rb)?;
    let mut coreflection = AdjunctionReport {
        hom_equality: hom_equality(&left, &right, rb.cs.carrier()),
        left_size: left.len(),
        right_size: right.len(),
        naturality_left: Vec::new(),
        naturality_right: Vec::new(),
    };
    for (src, phi) in phis {
        let x2 = rho(src)?.cs;
        let left2 = hom_fs(&x2, b)?;
        let right2 = hom_cs(&x2, &rb)?;
        coreflection.naturality_left.push(square(
            &left,
            |h| h.compose(phi),
            (&left2, b.carrier()),
            (&right, rb.cs.carrier()),
            |h| h.compose(phi),
            (&right2, rb.cs.carrier()),
            phi.label(),
        ));
    }
    for (dst, theta) in thetas {
        let rdst = rho(dst)?;
        let left2 = hom_fs(x, dst)?;
        let right2 = hom_cs(x, &rdst)?;
        coreflection.naturality_right.push(square(
            &left,
            |h| theta.compose(h),
            (&left2, dst.carrier()),
            (&right, rb.cs.carrier()),
            |h| theta.compose(h),
            (&right2, rdst.cs.carrier()),
            theta.label(),
        ));
    }

    let universal = rho_universal_check(a, &rb.cs, bounds)?;
    Ok(RhoAdjunctionReport {
        reflection,
        coreflection,
        universal,
    })
}

/// `ρ_{F⊗G}(X × Y)` and `ρ_F X × ρ_G Y` have the same partition, the same
/// inequality, and families inducing the same relations.
pub fn rho_product_check<S: Scalar>(
    a: &FunctionSpace<S>,
    b: &FunctionSpace<S>,
    bounds: &Bounds,
) -> Result<Verdict> {
    bounds.check_enum(a.len() as u128 * b.len() as u128)?;
    let (carrier, pairs) = product_setoid(
        format!("{}×{}", a.name(), b.name()),
        a.carrier(),
        b.carrier(),
    )?;
    let pr1 = SetMap::new("pr1", pairs.iter().map(|p| p.0).collect());
    let pr2 = SetMap::new("pr2", pairs.iter().map(|p| p.1).collect());
    let mut members = Vec::new();
    for f in a.family().members() {
        members.push(f.compose(&pr1, format!("{}∘pr1", f.label())));
    }
    for g in b.family().members() {
        members.push(g.compose(&pr2, format!("{}∘pr2", g.label())));
    }
    let product = FunctionSpace::new(carrier.clone(), FnFamily::new(carrier, members)?)?;
    let left = rho(&product)?.cs;
    let right = cs_product(&rho(a)?.cs, &rho(b)?.cs, bounds)?.cs;
    if !left.carrier().same_structure(right.carrier()) {
        return Ok(Verdict::fail(
            [left.name(), right.name()],
            "the partitions differ",
        ));
    }
    if let Some((p, q)) = left
        .set()
        .neq_relation()
        .first_not_in(right.set().neq_relation())
    {
        return Ok(Verdict::fail(
            [left.atom(p), left.atom(q)],
            "apart only in ρ of the product",
        ));
    }
    if let Some((p, q)) = right
        .set()
        .neq_relation()
        .first_not_in(left.set().neq_relation())
    {
        return Ok(Verdict::fail(
            [left.atom(p), left.atom(q)],
            "apart only in the product of ρ",
        ));
    }
    let (li, ri) = (left.induced(), right.induced());
    let n = left.len();
    for p in 0..n {
        for q in 0..n {
            if li.eq(p, q) != ri.eq(p, q) || li.neq(p, q) != ri.neq(p, q) {
                return Ok(Verdict::fail(
                    [left.atom(p), left.atom(q)],
                    "the two families induce different relations",
                ));
            }
        }
    }
    Ok(Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complsep::real_sample;
    use crate::Rat;

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

    #[test]
    fn reflection_of_a_non_separating_space() {
        let fs = ex_space(&[("f", &[0, 0, 1])]);
        let refl = rho(&fs).unwrap();
        assert_eq!(refl.cs.carrier().block_count(), 2);
        assert!(refl.cs.carrier().eq(0, 1));
        assert!(rho_check(&fs).unwrap().overall().holds());
    }

    #[test]
    fn reflection_fixes_completely_separated_sets() {
        let fs = ex_space(&[("f", &[0, 0, 1]), ("g", &[0, 1, 1])]);
        let cs = ComplSep::induced_by(fs.carrier().clone(), fs.family().clone()).unwrap();
        assert!(rho(&fs).unwrap().cs.same_structure(&cs));
    }

    #[test]
    fn empty_family_gives_one_block() {
        let fs = ex_space(&[]);
        let refl = rho(&fs).unwrap();
        assert!(refl.cs.carrier().is_total());
        assert!(refl.cs.set().neq_relation().is_empty());
        assert!(rho_check(&fs).unwrap().overall().holds());
    }

    #[test]
    fn member_into_sample_is_its_own_reflection() {
        let fs = ex_space(&[("f", &[0, 0, 1]), ("g", &[0, 1, 1])]);
        let sample = real_sample("R", &r(&[0, 1])).unwrap();
        let h = SetMap::new("f", vec![0, 0, 1]);
        let rh = rho_arrow(&h, &fs, &sample).unwrap();
        assert_eq!(rh.images(), h.images());
        let report = rho_universal_check(&fs, &sample, &Bounds::default()).unwrap();
        assert!(report.overall().holds(), "{report:?}");
    }

    #[test]
    fn non_affine_arrow_names_the_member() {
        let fs = ex_space(&[("f", &[0, 0, 1])]);
        let sample = real_sample("R", &r(&[0, 1])).unwrap();
        let h = SetMap::new("h", vec![0, 1, 1]);
        let err = rho_arrow(&h, &fs, &sample).unwrap_err();
        assert_eq!(
            err,
            Error::NotAffine {
                member: "id".into()
            }
        );
    }

    #[test]
    fn adjunctions_on_ex_against_itself() {
        let fs = ex_space(&[("f", &[0, 0, 1])]);
        let id = SetMap::identity(3).with_label("id");
        let report = rho_adjunction_check(
            &fs,
            &fs,
            &[(fs.clone(), id.clone())],
            &[(fs.clone(), id)],
            &Bounds::default(),
        )
        .unwrap();
        assert!(report.overall().holds(), "{report:?}");
    }

    #[test]
    fn product_preservation_on_ex() {
        let a = ex_space(&[("f", &[0, 0, 1])]);
        let b = ex_space(&[("g", &[0, 1, 1]), ("k", &[2, 2, 2])]);
        assert!(rho_product_check(&a, &b, &Bounds::default())
            .unwrap()
            .holds());
    }
}
