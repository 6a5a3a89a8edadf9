use crate::kernel::{is_strongly_extensional, saturating_pow, Bounds, FinSetoid, IneqSet, SetMap};
use crate::{Error, Result};

/// The product `X × Y` with its canonical inequality and projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSet {
    pub set: IneqSet,
    /// `pairs[p] = (x, y)` for the product atom `p`.
    pub pairs: Vec<(usize, usize)>,
    pub pr1: SetMap,
    pub pr2: SetMap,
}

/// A function set `𝔽(X, Y)` with its canonical inequality; `tables[t]` is the
/// table behind carrier atom `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionSet {
    pub set: IneqSet,
    pub tables: Vec<SetMap>,
}

/// Product atom name for a pair.
pub fn pair_name(x: &str, y: &str) -> String {
    format!("({x},{y})")
}

/// Carrier of `X × Y`: pairs in row-major order, equality componentwise.
pub fn product_setoid(
    name: impl Into<String>,
    x: &FinSetoid,
    y: &FinSetoid,
) -> Result<(FinSetoid, Vec<(usize, usize)>)> {
    let pairs: Vec<(usize, usize)> = (0..x.len())
        .flat_map(|i| (0..y.len()).map(move |j| (i, j)))
        .collect();
    let names: Vec<String> = pairs
        .iter()
        .map(|&(i, j)| pair_name(x.atom(i), y.atom(j)))
        .collect();
    let ids: Vec<usize> = pairs
        .iter()
        .map(|&(i, j)| x.block_of(i) * y.block_count().max(1) + y.block_of(j))
        .collect();
    let set = FinSetoid::from_block_ids(name, names, &ids)?;
    Ok((set, pairs))
}

/// `(x, y) ≠ (x', y') :⇔ x ≠_X x' ∨ y ≠_Y y'`
pub fn canonical_product_ineq(x: &IneqSet, y: &IneqSet) -> Result<ProductSet> {
    let (base, pairs) = product_setoid(format!("{}×{}", x.name(), y.name()), x.base(), y.base())?;
    let set = IneqSet::from_fn(base, |p, q| {
        let ((a, b), (c, d)) = (pairs[p], pairs[q]);
        x.neq(a, c) || y.neq(b, d)
    });
    let pr1 = SetMap::new("pr1", pairs.iter().map(|p| p.0).collect());
    let pr2 = SetMap::new("pr2", pairs.iter().map(|p| p.1).collect());
    for (pr, target) in [(&pr1, x), (&pr2, y)] {
        if is_strongly_extensional(pr, &set, target)?.fails() {
            return Err(Error::InvariantBroken(format!(
                "projection `{}` is not strongly extensional",
                pr.label()
            )));
        }
    }
    Ok(ProductSet {
        set,
        pairs,
        pr1,
        pr2,
    })
}

/// Atom name for a table, listing every atom of the domain.
pub fn table_name(dom: &FinSetoid, cod: &FinSetoid, h: &SetMap) -> String {
    let entries: Vec<String> = (0..dom.len())
        .map(|x| format!("{}:{}", dom.atom(x), cod.atom(h.image(x))))
        .collect();
    format!("[{}]", entries.join(","))
}

/// Mixed-radix counter over `radices`, last digit fastest.
pub(crate) fn odometer(radices: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let empty = radices.contains(&0);
    let mut next = if empty {
        None
    } else {
        Some(vec![0; radices.len()])
    };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut digits = current.clone();
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < radices[pos] {
                next = Some(digits);
                break;
            }
            digits[pos] = 0;
        }
        Some(current)
    })
}

/// One table per pointwise-equality class of functions `X → Y`.
///
/// Each `X`-block is sent to the first atom of a `Y`-block; the result has
/// `|Y-blocks|^|X-blocks|` entries, ordered lexicographically by the block
/// choices (earlier `X`-blocks most significant).
pub fn enumerate_functions(x: &FinSetoid, y: &FinSetoid, bounds: &Bounds) -> Result<Vec<SetMap>> {
    let count = saturating_pow(y.block_count(), x.block_count());
    bounds.check_enum(count)?;
    let radices = vec![y.block_count(); x.block_count()];
    Ok(odometer(&radices)
        .map(|choice| {
            let images: Vec<usize> = (0..x.len())
                .map(|a| y.blocks()[choice[x.block_of(a)]][0])
                .collect();
            let mut h = SetMap::new("", images);
            let label = table_name(x, y, &h);
            h = h.with_label(label);
            h
        })
        .collect())
}

/// Every raw table `0..n → 0..m`, without regard to any equality.
pub fn enumerate_tables(n: usize, m: usize, bounds: &Bounds) -> Result<Vec<SetMap>> {
    bounds.check_enum(saturating_pow(m, n))?;
    let radices = vec![m; n];
    Ok(odometer(&radices).map(|t| SetMap::new("t", t)).collect())
}

/// `f ≠ g :⇔ ∃x. f(x) ≠_Y g(x)` on the enumerated function tables.
pub fn canonical_funspace_ineq(x: &FinSetoid, y: &IneqSet, bounds: &Bounds) -> Result<FunctionSet> {
    let tables = enumerate_functions(x, y.base(), bounds)?;
    let names: Vec<String> = tables.iter().map(|t| t.label().to_string()).collect();
    let base = FinSetoid::from_relation(format!("F({},{})", x.name(), y.name()), names, |s, t| {
        tables[s].pointwise_eq(&tables[t], y.base())
    })?;
    let set = IneqSet::from_fn(base, |s, t| {
        (0..x.len()).any(|a| y.neq(tables[s].image(a), tables[t].image(a)))
    });
    Ok(FunctionSet { set, tables })
}

/// Pulls the equality and inequality of `x` back along `incl : a → x`.
///
/// The equality of `a` must coincide with the pulled-back equality: equal
/// atoms need equal images, and distinct atoms need distinct images.
pub fn canonical_subset_ineq(x: &IneqSet, a: &FinSetoid, incl: &SetMap) -> Result<IneqSet> {
    incl.check_shape(a, x.base())?;
    for s in 0..a.len() {
        for t in 0..a.len() {
            let same_image = x.eq(incl.image(s), incl.image(t));
            if !a.eq(s, t) && same_image {
                return Err(Error::NotInjective {
                    left: a.atom(s).to_string(),
                    right: a.atom(t).to_string(),
                });
            }
            if a.eq(s, t) && !same_image {
                return Err(Error::PreconditionViolated(format!(
                    "`{}` sends equal atoms `{}`, `{}` to unequal images",
                    incl.label(),
                    a.atom(s),
                    a.atom(t)
                )));
            }
        }
    }
    let set = IneqSet::from_fn(a.clone(), |s, t| x.neq(incl.image(s), incl.image(t)));
    if is_strongly_extensional(incl, &set, x)?.fails() {
        return Err(Error::InvariantBroken(format!(
            "embedding `{}` is not strongly extensional",
            incl.label()
        )));
    }
    Ok(set)
}
