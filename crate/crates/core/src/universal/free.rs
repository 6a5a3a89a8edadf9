use super::{hom_equality, square, unique_among, AdjunctionReport, ArrowKind, HomSet};
use crate::complsep::ComplSep;
use crate::kernel::canonical::enumerate_tables;
use crate::kernel::{enumerate_functions, is_strongly_extensional, validate_function, Bounds};
use crate::{
    ClauseReport, Error, FinSetoid, FnFamily, IneqSet, RealFn, Result, Scalar, SetMap, Verdict,
};

/// `εX`: the carrier of `X` separated by the indicators of its blocks.
///
/// The indicators induce exactly `=_X` and the full cross-block inequality,
/// which are the relations induced by all real-valued functions on `X`.
pub fn free_cs<S: Scalar>(x: &FinSetoid) -> Result<ComplSep<S>> {
    let members = x
        .blocks()
        .iter()
        .map(|block| {
            let names: Vec<&str> = block.iter().map(|&a| x.atom(a)).collect();
            let values = (0..x.len())
                .map(|a| {
                    if block.contains(&a) {
                        S::one()
                    } else {
                        S::zero()
                    }
                })
                .collect();
            RealFn::new(format!("χ_{{{}}}", names.join(",")), values)
        })
        .collect();
    let family = FnFamily::new(x.clone(), members)?;
    let eps = ComplSep::induced_by(x.clone(), family)
        .map_err(|e| Error::InvariantBroken(format!("free set: {e}")))?;
    if !eps.induced().eq_setoid().same_structure(x)
        || !eps.set().same_structure(&IneqSet::cross_block(x.clone()))
    {
        return Err(Error::InvariantBroken(
            "block indicators do not induce the cross-block inequality".into(),
        ));
    }
    Ok(eps)
}

/// For every function `h : X → Y`, `εh := h` is strongly extensional from
/// `εX`, makes the triangle with `i_X = id` commute, and is the only table
/// that does.
pub fn free_universal_check<S: Scalar>(
    x: &FinSetoid,
    y: &ComplSep<S>,
    bounds: &Bounds,
) -> Result<ClauseReport> {
    let eps = free_cs::<S>(x)?;
    let cod = y.carrier();
    let i_x = SetMap::identity(x.len()).with_label("i_X");
    let candidates: Vec<SetMap> = enumerate_tables(x.len(), y.len(), bounds)?
        .into_iter()
        .filter(|t| {
            validate_function(eps.carrier(), cod, t).is_ok_and(|v| v.holds())
                && is_strongly_extensional(t, eps.set(), y.set()).is_ok_and(|v| v.holds())
        })
        .collect();
    let mut function = Verdict::Holds;
    let mut strong = Verdict::Holds;
    let mut triangle = Verdict::Holds;
    let mut unique = Verdict::Holds;
    for h in enumerate_functions(x, cod, bounds)? {
        let eh = h.clone().with_label(format!("ε{}", h.label()));
        if function.holds() {
            function = validate_function(eps.carrier(), cod, &eh)?;
        }
        if strong.holds() {
            strong = is_strongly_extensional(&eh, eps.set(), y.set())?;
        }
        if triangle.holds() && !eh.compose(&i_x).pointwise_eq(&h, cod) {
            triangle = Verdict::fail([h.label()], "εh ∘ i_X differs from h");
        }
        if unique.holds() {
            unique = unique_among(&candidates, &eh, cod, |t| {
                t.compose(&i_x).pointwise_eq(&h, cod)
            });
        }
    }
    Ok(ClauseReport::new()
        .with("function", function)
        .with("strongly-extensional", strong)
        .with("triangle", triangle)
        .with("unique", unique))
}

fn hom_free<S: Scalar>(
    x: &FinSetoid,
    y: &ComplSep<S>,
    bounds: &Bounds,
) -> Result<(ComplSep<S>, HomSet)> {
    let eps = free_cs::<S>(x)?;
    let hom = HomSet::enumerate(
        eps.carrier(),
        y.carrier(),
        ArrowKind::StronglyExtensional,
        bounds,
        |t| Ok(is_strongly_extensional(t, eps.set(), y.set())?.holds()),
    )?;
    Ok((eps, hom))
}

fn hom_plain(x: &FinSetoid, y: &FinSetoid, bounds: &Bounds) -> Result<HomSet> {
    HomSet::enumerate(x, y, ArrowKind::Plain, bounds, |_| Ok(true))
}

/// `Hom(εX, Y) = Hom(X, Frg Y)` by enumeration, and the naturality squares
/// for each sampled `φ : X′ → X` (a function) and `θ : Y → Y′` (strongly
/// extensional).
pub fn free_adjunction_check<S: Scalar>(
    x: &FinSetoid,
    y: &ComplSep<S>,
    phis: &[(FinSetoid, SetMap)],
    thetas: &[(ComplSep<S>, SetMap)],
    bounds: &Bounds,
) -> Result<AdjunctionReport> {
    let (_, left) = hom_free(x, y, bounds)?;
    let right = hom_plain(x, y.carrier(), bounds)?;
    let hom_eq = hom_equality(&left, &right, y.carrier());

    let mut naturality_left = Vec::new();
    for (x2, phi) in phis {
        if !validate_function(x2, x, phi)?.holds() {
            return Err(Error::PreconditionViolated(format!(
                "`{}` is not a function from `{}`",
                phi.label(),
                x2.name()
            )));
        }
        let (_, left2) = hom_free(x2, y, bounds)?;
        let right2 = hom_plain(x2, y.carrier(), bounds)?;
        let cod = y.carrier();
        naturality_left.push(square(
            &left,
            |h| h.compose(phi),
            (&left2, cod),
            (&right, cod),
            |h| h.compose(phi),
            (&right2, cod),
            phi.label(),
        ));
    }

    let mut naturality_right = Vec::new();
    for (y2, theta) in thetas {
        if !validate_function(y.carrier(), y2.carrier(), theta)?.holds()
            || !is_strongly_extensional(theta, y.set(), y2.set())?.holds()
        {
            return Err(Error::PreconditionViolated(format!(
                "`{}` is not a strongly extensional function into `{}`",
                theta.label(),
                y2.name()
            )));
        }
        let (_, left2) = hom_free(x, y2, bounds)?;
        let right2 = hom_plain(x, y2.carrier(), bounds)?;
        naturality_right.push(square(
            &left,
            |h| theta.compose(h),
            (&left2, y2.carrier()),
            (&right, y.carrier()),
            |h| theta.compose(h),
            (&right2, y2.carrier()),
            theta.label(),
        ));
    }

    Ok(AdjunctionReport {
        hom_equality: hom_eq,
        left_size: left.len(),
        right_size: right.len(),
        naturality_left,
        naturality_right,
    })
}
