use crate::kernel::FinSetoid;
use crate::{Error, Result};

/// A binary relation on `0..n`, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation {
            n,
            bits: vec![false; n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut bits = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                bits.push(f(i, j));
            }
        }
        Relation { n, bits }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    pub fn insert(&mut self, i: usize, j: usize) {
        self.bits[i * self.n + j] = true;
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| {
            (0..self.n)
                .filter(move |&j| self.contains(i, j))
                .map(move |j| (i, j))
        })
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|b| *b)
    }

    /// First pair in `self` but not in `other`.
    pub fn first_not_in(&self, other: &Relation) -> Option<(usize, usize)> {
        self.pairs().find(|&(i, j)| !other.contains(i, j))
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.first_not_in(other).is_none()
    }
}

/// A finite setoid with an explicit inequality relation.
///
/// No axiom is assumed on construction; see
/// [`check_ineq_axioms`](crate::kernel::check_ineq_axioms).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IneqSet {
    base: FinSetoid,
    neq: Relation,
}

impl IneqSet {
    pub fn new(base: FinSetoid, neq: Relation) -> Result<Self> {
        if neq.size() != base.len() {
            return Err(Error::DomainMismatch(format!(
                "relation on {} atoms for `{}` with {} atoms",
                neq.size(),
                base.name(),
                base.len()
            )));
        }
        Ok(IneqSet { base, neq })
    }

    pub(crate) fn new_unchecked(base: FinSetoid, neq: Relation) -> Self {
        debug_assert_eq!(neq.size(), base.len());
        IneqSet { base, neq }
    }

    /// Inequality listed by atom-name pairs.
    pub fn from_pairs<'a>(
        base: FinSetoid,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut neq = Relation::empty(base.len());
        for (x, y) in pairs {
            let (i, j) = (base.require(x)?, base.require(y)?);
            neq.insert(i, j);
        }
        Ok(IneqSet { base, neq })
    }

    pub fn from_fn(base: FinSetoid, f: impl FnMut(usize, usize) -> bool) -> Self {
        let neq = Relation::from_fn(base.len(), f);
        IneqSet { base, neq }
    }

    /// The inequality "in different blocks".
    pub fn cross_block(base: FinSetoid) -> Self {
        let neq = Relation::from_fn(base.len(), |i, j| !base.eq(i, j));
        IneqSet { base, neq }
    }

    pub fn base(&self) -> &FinSetoid {
        &self.base
    }

    pub fn neq_relation(&self) -> &Relation {
        &self.neq
    }

    pub fn name(&self) -> &str {
        self.base.name()
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn atom(&self, i: usize) -> &str {
        self.base.atom(i)
    }

    pub fn eq(&self, x: usize, y: usize) -> bool {
        self.base.eq(x, y)
    }

    /// `x ≠_X y`
    pub fn neq(&self, x: usize, y: usize) -> bool {
        self.neq.contains(x, y)
    }

    pub fn neq_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neq.pairs()
    }

    /// Same setoid structure and the same inequality.
    pub fn same_structure(&self, other: &IneqSet) -> bool {
        self.base.same_structure(&other.base) && self.neq == other.neq
    }
}
