use crate::kernel::{FinSetoid, IneqSet};
use crate::{Error, Result, Scalar, Verdict, Violation};

/// A real-valued table on a carrier, indexed by atom position.
#[derive(Debug, Clone, PartialEq)]
pub struct RealFn<S> {
    label: String,
    values: Vec<S>,
}

impl<S: Scalar> RealFn<S> {
    pub fn new(label: impl Into<String>, values: Vec<S>) -> Self {
        RealFn {
            label: label.into(),
            values,
        }
    }

    /// Builds a table from `(atom, value)` entries; every atom of `dom` needs
    /// exactly one entry.
    pub fn from_entries<'a>(
        dom: &FinSetoid,
        label: impl Into<String>,
        entries: impl IntoIterator<Item = (&'a str, S)>,
    ) -> Result<Self> {
        let label = label.into();
        let mut values: Vec<Option<S>> = vec![None; dom.len()];
        for (atom, v) in entries {
            let i = dom.require(atom)?;
            values[i] = Some(v);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::MissingEntry {
                    table: label.clone(),
                    atom: dom.atom(i).to_string(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(RealFn { label, values })
    }

    pub fn constant(label: impl Into<String>, len: usize, c: S) -> Self {
        RealFn::new(label, vec![c; len])
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn value(&self, x: usize) -> &S {
        &self.values[x]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Exact pointwise equality; labels are ignored.
    pub fn pointwise_eq(&self, other: &RealFn<S>) -> bool {
        self.values == other.values
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &SetMap, label: impl Into<String>) -> RealFn<S> {
        RealFn::new(
            label,
            inner
                .images()
                .iter()
                .map(|&y| self.values[y].clone())
                .collect(),
        )
    }
}

/// A table between finite carriers, `images[x]` being the atom index of the
/// image of atom `x` in the codomain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetMap {
    label: String,
    images: Vec<usize>,
}

impl SetMap {
    pub fn new(label: impl Into<String>, images: Vec<usize>) -> Self {
        SetMap {
            label: label.into(),
            images,
        }
    }

    pub fn identity(len: usize) -> Self {
        SetMap::new("id", (0..len).collect())
    }

    pub fn constant(label: impl Into<String>, len: usize, y: usize) -> Self {
        SetMap::new(label, vec![y; len])
    }

    pub fn from_entries<'a>(
        dom: &FinSetoid,
        cod: &FinSetoid,
        label: impl Into<String>,
        entries: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let label = label.into();
        let mut images: Vec<Option<usize>> = vec![None; dom.len()];
        for (x, y) in entries {
            images[dom.require(x)?] = Some(cod.require(y)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::MissingEntry {
                    table: label.clone(),
                    atom: dom.atom(i).to_string(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(SetMap { label, images })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &SetMap) -> SetMap {
        SetMap::new(
            format!("{}∘{}", self.label, inner.label),
            inner.images.iter().map(|&y| self.images[y]).collect(),
        )
    }

    /// Pointwise equality up to the codomain's equality.
    pub fn pointwise_eq(&self, other: &SetMap, cod: &FinSetoid) -> bool {
        self.images.len() == other.images.len()
            && self
                .images
                .iter()
                .zip(&other.images)
                .all(|(&a, &b)| cod.eq(a, b))
    }

    /// Codomain block of each image; two maps are pointwise equal iff their
    /// signatures coincide.
    pub fn signature(&self, cod: &FinSetoid) -> Vec<usize> {
        self.images.iter().map(|&y| cod.block_of(y)).collect()
    }

    pub(crate) fn check_shape(&self, dom: &FinSetoid, cod: &FinSetoid) -> Result<()> {
        if self.images.len() != dom.len() {
            return Err(Error::DomainMismatch(format!(
                "`{}` has {} entries but `{}` has {} atoms",
                self.label,
                self.images.len(),
                dom.name(),
                dom.len()
            )));
        }
        if let Some(&bad) = self.images.iter().find(|&&y| y >= cod.len()) {
            return Err(Error::DomainMismatch(format!(
                "`{}` maps into position {bad} outside `{}`",
                self.label,
                cod.name()
            )));
        }
        Ok(())
    }
}

/// A finite, extensional set of real-valued functions on one carrier.
///
/// Membership is pointwise: a table belongs iff it equals some listed
/// member at every atom. Duplicates are allowed and never change membership.
#[derive(Debug, Clone, PartialEq)]
pub struct FnFamily<S> {
    carrier: FinSetoid,
    members: Vec<RealFn<S>>,
}

impl<S: Scalar> FnFamily<S> {
    pub fn new(carrier: FinSetoid, members: Vec<RealFn<S>>) -> Result<Self> {
        if let Some(m) = members.iter().find(|m| m.len() != carrier.len()) {
            return Err(Error::CarrierMismatch(format!(
                "member `{}` has {} entries but `{}` has {} atoms",
                m.label(),
                m.len(),
                carrier.name(),
                carrier.len()
            )));
        }
        Ok(FnFamily { carrier, members })
    }

    pub fn empty(carrier: FinSetoid) -> Self {
        FnFamily {
            carrier,
            members: Vec::new(),
        }
    }

    pub fn carrier(&self) -> &FinSetoid {
        &self.carrier
    }

    pub fn members(&self) -> &[RealFn<S>] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &RealFn<S> {
        &self.members[i]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Index of the first member pointwise equal to `f`.
    pub fn position(&self, f: &RealFn<S>) -> Option<usize> {
        self.members.iter().position(|m| m.pointwise_eq(f))
    }

    pub fn contains(&self, f: &RealFn<S>) -> bool {
        self.position(f).is_some()
    }

    /// Same family on a carrier with the same atoms but another equality.
    pub fn retyped(&self, carrier: FinSetoid) -> Result<Self> {
        if !carrier.same_atoms(&self.carrier) {
            return Err(Error::CarrierMismatch(format!(
                "cannot retype a family on `{}` over `{}`",
                self.carrier.name(),
                carrier.name()
            )));
        }
        Ok(FnFamily {
            carrier,
            members: self.members.clone(),
        })
    }

    /// Index of the first member in each pointwise-equality class.
    pub fn distinct_members(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for (i, m) in self.members.iter().enumerate() {
            if !out.iter().any(|&j| self.members[j].pointwise_eq(m)) {
                out.push(i);
            }
        }
        out
    }

    /// First member of `self` with no pointwise match in `larger`.
    pub fn first_missing_from(&self, larger: &FnFamily<S>) -> Option<&RealFn<S>> {
        self.members.iter().find(|m| !larger.contains(m))
    }

    pub(crate) fn require_carrier(&self, x: &FinSetoid) -> Result<()> {
        if self.carrier.same_structure(x) {
            Ok(())
        } else {
            Err(Error::CarrierMismatch(format!(
                "family is on `{}`, expected `{}`",
                self.carrier.name(),
                x.name()
            )))
        }
    }
}

/// Checks that a real-valued table respects the domain's equality.
pub fn validate_real_fn<S: Scalar>(dom: &FinSetoid, f: &RealFn<S>) -> Result<Verdict> {
    if f.len() != dom.len() {
        let atom = dom.atoms().get(f.len()).cloned().unwrap_or_default();
        return Err(Error::MissingEntry {
            table: f.label().to_string(),
            atom,
        });
    }
    for block in dom.blocks() {
        let first = block[0];
        if let Some(&x) = block.iter().find(|&&x| f.value(x) != f.value(first)) {
            return Ok(Verdict::Fails(Violation::new(
                [dom.atom(first), dom.atom(x)],
                format!("`{}` separates equal atoms", f.label()),
            )));
        }
    }
    Ok(Verdict::Holds)
}

/// Checks that a table between setoids maps equal atoms to equal atoms.
pub fn validate_function(dom: &FinSetoid, cod: &FinSetoid, h: &SetMap) -> Result<Verdict> {
    if h.len() != dom.len() {
        let atom = dom.atoms().get(h.len()).cloned().unwrap_or_default();
        return Err(Error::MissingEntry {
            table: h.label().to_string(),
            atom,
        });
    }
    h.check_shape(dom, cod)?;
    for block in dom.blocks() {
        let first = block[0];
        if let Some(&x) = block.iter().find(|&&x| !cod.eq(h.image(x), h.image(first))) {
            return Ok(Verdict::Fails(Violation::new(
                [dom.atom(first), dom.atom(x)],
                format!("`{}` maps equal atoms to unequal images", h.label()),
            )));
        }
    }
    Ok(Verdict::Holds)
}

/// `h(x) ≠_Y h(y) ⇒ x ≠_X y` for every pair.
pub fn is_strongly_extensional(h: &SetMap, x: &IneqSet, y: &IneqSet) -> Result<Verdict> {
    h.check_shape(x.base(), y.base())?;
    for (a, b) in (0..x.len()).flat_map(|a| (0..x.len()).map(move |b| (a, b))) {
        if y.neq(h.image(a), h.image(b)) && !x.neq(a, b) {
            return Ok(Verdict::fail(
                [x.atom(a), x.atom(b)],
                format!(
                    "images under `{}` are apart but the atoms are not",
                    h.label()
                ),
            ));
        }
    }
    Ok(Verdict::Holds)
}

/// Strong extensionality of a real-valued table into `(ℝ, ≠_ℝ)`.
pub fn real_fn_strongly_extensional<S: Scalar>(f: &RealFn<S>, x: &IneqSet) -> Result<Verdict> {
    if f.len() != x.len() {
        return Err(Error::DomainMismatch(format!(
            "`{}` has {} entries but `{}` has {} atoms",
            f.label(),
            f.len(),
            x.name(),
            x.len()
        )));
    }
    for a in 0..x.len() {
        for b in 0..x.len() {
            if f.value(a).gap(f.value(b)).is_some() && !x.neq(a, b) {
                return Ok(Verdict::fail(
                    [x.atom(a), x.atom(b)],
                    format!("`{}` separates atoms that are not apart", f.label()),
                ));
            }
        }
    }
    Ok(Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n)
    }

    fn two_blocks() -> FinSetoid {
        FinSetoid::new("X", ["a", "b", "c"], [vec!["a", "b"], vec!["c"]]).unwrap()
    }

    #[test]
    fn validate_examples() {
        let x = two_blocks();
        let ok = RealFn::new("f", vec![r(0), r(0), r(1)]);
        assert!(validate_real_fn(&x, &ok).unwrap().holds());
        let bad = RealFn::new("g", vec![r(0), r(1), r(1)]);
        match validate_real_fn(&x, &bad).unwrap() {
            Verdict::Fails(v) => assert_eq!(v.atoms, vec!["a", "b"]),
            other => panic!("unexpected {other:?}"),
        }
        let discrete = FinSetoid::discrete("D", ["a", "b", "c"]).unwrap();
        assert!(validate_real_fn(&discrete, &bad).unwrap().holds());
        let short = RealFn::new("s", vec![r(0)]);
        assert!(matches!(
            validate_real_fn(&x, &short),
            Err(Error::MissingEntry { .. })
        ));
    }

    #[test]
    fn missing_entries_are_reported() {
        let x = two_blocks();
        let err = RealFn::from_entries(&x, "f", [("a", r(0)), ("b", r(0))]).unwrap_err();
        assert_eq!(
            err,
            Error::MissingEntry {
                table: "f".into(),
                atom: "c".into()
            }
        );
    }

    #[test]
    fn validate_setoid_map() {
        let x = two_blocks();
        let y = FinSetoid::discrete("Y", ["p", "q"]).unwrap();
        let good = SetMap::new("h", vec![0, 0, 1]);
        assert!(validate_function(&x, &y, &good).unwrap().holds());
        let bad = SetMap::new("h", vec![0, 1, 1]);
        assert!(validate_function(&x, &y, &bad).unwrap().fails());
        let out_of_range = SetMap::new("h", vec![0, 0, 7]);
        assert!(matches!(
            validate_function(&x, &y, &out_of_range),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn strong_extensionality_examples() {
        let atoms = ["a", "b", "c"];
        let full = IneqSet::cross_block(FinSetoid::discrete("Y", atoms).unwrap());
        let empty = IneqSet::from_fn(FinSetoid::discrete("X", atoms).unwrap(), |_, _| false);
        let id = SetMap::identity(3);
        assert!(is_strongly_extensional(&id, &full, &full).unwrap().holds());
        assert!(is_strongly_extensional(&id, &empty, &empty)
            .unwrap()
            .holds());
        // injective into a discrete target, from a set with no inequality
        assert!(is_strongly_extensional(&id, &empty, &full).unwrap().fails());
        let constant = SetMap::constant("k", 3, 1);
        assert!(is_strongly_extensional(&constant, &empty, &full)
            .unwrap()
            .holds());
    }

    #[test]
    fn family_membership_is_pointwise() {
        let x = two_blocks();
        let f = RealFn::new("f", vec![r(0), r(0), r(1)]);
        let fam = FnFamily::new(x, vec![f.clone(), f.clone().with_label("f2")]).unwrap();
        assert!(fam.contains(&RealFn::new("other", vec![r(0), r(0), r(1)])));
        assert!(!fam.contains(&RealFn::new("no", vec![r(1), r(1), r(1)])));
        assert_eq!(fam.distinct_members(), vec![0]);
    }
}
