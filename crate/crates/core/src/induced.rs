//! Equality and inequality induced by a family of real-valued functions.
//!
//! `x =_(X,F) y` holds when every member agrees on `x` and `y`, and
//! `x ≠_(X,F) y` when some member separates them by a positive gap. Each
//! induced inequality pair keeps the first separating member as a witness.

use std::fmt;

use crate::kernel::{check_relation_axioms, real_fn_strongly_extensional, AxiomReport};
use crate::{Error, FinSetoid, FnFamily, IneqSet, Relation, Result, Scalar, Verdict, Violation};

/// A member of the family splitting a pair, with its gap `|f(x) − f(y)|`.
#[derive(Debug, Clone, PartialEq)]
pub struct Separation<S> {
    pub member: usize,
    pub label: String,
    pub gap: S,
}

impl<S: Scalar> fmt::Display for Separation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (gap {})", self.label, self.gap)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InducedRelations<S> {
    carrier: FinSetoid,
    eq: FinSetoid,
    witnesses: Vec<Option<Separation<S>>>,
}

impl<S: Scalar> InducedRelations<S> {
    /// The declared carrier.
    pub fn carrier(&self) -> &FinSetoid {
        &self.carrier
    }

    /// The carrier's atoms re-equipped with the induced equality.
    pub fn eq_setoid(&self) -> &FinSetoid {
        &self.eq
    }

    pub fn eq(&self, x: usize, y: usize) -> bool {
        self.eq.eq(x, y)
    }

    pub fn neq(&self, x: usize, y: usize) -> bool {
        self.witness(x, y).is_some()
    }

    pub fn witness(&self, x: usize, y: usize) -> Option<&Separation<S>> {
        self.witnesses[x * self.carrier.len() + y].as_ref()
    }

    pub fn neq_relation(&self) -> Relation {
        Relation::from_fn(self.carrier.len(), |x, y| self.neq(x, y))
    }

    /// Induced equality together with the induced inequality.
    pub fn induced_set(&self) -> IneqSet {
        IneqSet::new_unchecked(self.eq.clone(), self.neq_relation())
    }

    /// Declared equality together with the induced inequality.
    pub fn on_declared(&self) -> IneqSet {
        IneqSet::new_unchecked(self.carrier.clone(), self.neq_relation())
    }

    /// First pair equal under the induced equality but not the declared one.
    pub fn separation_counterexample(&self) -> Option<(usize, usize)> {
        let n = self.carrier.len();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.eq(x, y) && !self.carrier.eq(x, y))
    }

    pub fn is_separating(&self) -> bool {
        self.separation_counterexample().is_none()
    }

    /// Axioms of the induced inequality, judged against the induced equality.
    pub fn axioms(&self) -> AxiomReport {
        check_relation_axioms(
            self.carrier.atoms(),
            |x, y| self.eq(x, y),
            |x, y| self.neq(x, y),
        )
    }
}

pub fn induce<S: Scalar>(x: &FinSetoid, family: &FnFamily<S>) -> Result<InducedRelations<S>> {
    family.require_carrier(x)?;
    let n = x.len();
    let members = family.members();
    let mut witnesses = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let w = members.iter().enumerate().find_map(|(i, f)| {
                f.value(a).gap(f.value(b)).map(|gap| Separation {
                    member: i,
                    label: f.label().to_string(),
                    gap,
                })
            });
            witnesses.push(w);
        }
    }
    // Atoms agree on every member exactly when no witness exists.
    let eq = FinSetoid::from_relation(
        format!("{}/F", x.name()),
        x.atoms().iter().cloned(),
        |a, b| witnesses[a * n + b].is_none(),
    )
    .map_err(|e| Error::InvariantBroken(e.to_string()))?;
    let induced = InducedRelations {
        carrier: x.clone(),
        eq,
        witnesses,
    };
    debug_assert!((0..n).all(|a| (0..n).all(|b| !(induced.eq(a, b) && induced.neq(a, b)))));
    Ok(induced)
}

/// `Holds` iff `x =_(X,F) y ⇒ x =_X y` for every pair; otherwise the first
/// counterexample pair.
pub fn is_separating<S: Scalar>(x: &FinSetoid, family: &FnFamily<S>) -> Result<Verdict> {
    let induced = induce(x, family)?;
    Ok(match induced.separation_counterexample() {
        None => Verdict::Holds,
        Some((a, b)) => Verdict::fail(
            [x.atom(a), x.atom(b)],
            "no member separates atoms that are unequal",
        ),
    })
}

/// `{x | x ≠_(X,F) x}`, always empty with exact values.
pub fn empty_subset<S: Scalar>(x: &FinSetoid, family: &FnFamily<S>) -> Result<Vec<usize>> {
    let induced = induce(x, family)?;
    let out: Vec<usize> = (0..x.len()).filter(|&a| induced.neq(a, a)).collect();
    if !out.is_empty() {
        return Err(Error::InvariantBroken(format!(
            "atom `{}` is apart from itself",
            x.atom(out[0])
        )));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityReport {
    /// `=_(X,F') ⊆ =_(X,F)`
    pub eq_reverse: Verdict,
    /// `≠_(X,F) ⊆ ≠_(X,F')`
    pub neq_forward: Verdict,
    /// `F` separating ⇒ `F'` separating.
    pub separating: Verdict,
    /// The empty subset of `F` is contained in that of `F'`.
    pub empty_subset: Verdict,
}

impl MonotonicityReport {
    pub fn clauses(&self) -> [(&'static str, &Verdict); 4] {
        [
            ("eq-reverse", &self.eq_reverse),
            ("neq-forward", &self.neq_forward),
            ("separating", &self.separating),
            ("empty-subset", &self.empty_subset),
        ]
    }

    pub fn overall(&self) -> Verdict {
        Verdict::all(self.clauses().into_iter().map(|(_, v)| v.clone()))
    }
}

/// Compares the relations induced by `small ⊆ large`.
pub fn monotonicity_check<S: Scalar>(
    x: &FinSetoid,
    small: &FnFamily<S>,
    large: &FnFamily<S>,
) -> Result<MonotonicityReport> {
    if let Some(m) = small.first_missing_from(large) {
        return Err(Error::NotASubfamily {
            member: m.label().to_string(),
        });
    }
    let a = induce(x, small)?;
    let b = induce(x, large)?;
    let n = x.len();
    let pairs = || (0..n).flat_map(move |s| (0..n).map(move |t| (s, t)));
    let name = |(s, t): (usize, usize)| [x.atom(s).to_string(), x.atom(t).to_string()];
    let eq_reverse = match pairs().find(|&(s, t)| b.eq(s, t) && !a.eq(s, t)) {
        None => Verdict::Holds,
        Some(p) => Verdict::fail(name(p), "equal for the larger family only"),
    };
    let neq_forward = match pairs().find(|&(s, t)| a.neq(s, t) && !b.neq(s, t)) {
        None => Verdict::Holds,
        Some(p) => Verdict::fail(name(p), "apart for the smaller family only"),
    };
    let separating = Verdict::conditional(
        a.is_separating(),
        "smaller family is not separating",
        || match b.separation_counterexample() {
            None => Verdict::Holds,
            Some(p) => Verdict::fail(name(p), "larger family does not separate"),
        },
    );
    let empty_subset = match (0..n).find(|&s| a.neq(s, s) && !b.neq(s, s)) {
        None => Verdict::Holds,
        Some(s) => Verdict::fail([x.atom(s)], "self-apart for the smaller family only"),
    };
    Ok(MonotonicityReport {
        eq_reverse,
        neq_forward,
        separating,
        empty_subset,
    })
}

/// The seven clauses about induced relations, evaluated on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F1Report {
    pub clauses: Vec<(&'static str, Verdict)>,
}

impl F1Report {
    pub fn clause(&self, id: &str) -> Option<&Verdict> {
        self.clauses.iter().find(|(c, _)| *c == id).map(|(_, v)| v)
    }

    pub fn overall(&self) -> Verdict {
        Verdict::all(self.clauses.iter().map(|(_, v)| v.clone()))
    }
}

pub fn f1_report<S: Scalar>(x: &IneqSet, family: &FnFamily<S>) -> Result<F1Report> {
    let base = x.base();
    let induced = induce(base, family)?;
    let n = x.len();
    let pairs = || (0..n).flat_map(move |s| (0..n).map(move |t| (s, t)));
    let fail = |(s, t): (usize, usize), why: &str| Verdict::fail([x.atom(s), x.atom(t)], why);

    let i = pairs()
        .find(|&(s, t)| base.eq(s, t) && !induced.eq(s, t))
        .map_or(Verdict::Holds, |p| {
            fail(p, "equal atoms are split by a member")
        });

    let separating = induced.is_separating();
    let ii = Verdict::conditional(separating, "family is not separating", || {
        pairs()
            .find(|&(s, t)| base.eq(s, t) != induced.eq(s, t))
            .map_or(Verdict::Holds, |p| {
                fail(p, "induced equality differs from the declared one")
            })
    });

    let iii = pairs()
        .find(|&(s, t)| !induced.neq(s, t) && !induced.eq(s, t))
        .map_or(Verdict::Holds, |p| {
            fail(p, "not apart yet not induced-equal")
        });

    let axioms = induced.axioms();
    let iv = Verdict::all([
        axioms.ineq1.clone(),
        axioms.ineq2.clone(),
        axioms.ineq4.clone(),
        axioms.ineq5.clone(),
    ]);

    let matches = *x.neq_relation() == induced.neq_relation();
    let v = Verdict::conditional(
        matches,
        "declared inequality is not the induced one",
        || {
            let declared = crate::kernel::check_ineq_axioms(x);
            Verdict::all([declared.ineq4, declared.ineq5])
        },
    );

    // Tightness against the declared equality, stated negatively and positively.
    let negative = pairs().all(|(s, t)| induced.neq(s, t) || base.eq(s, t));
    let vi = Verdict::from_check(negative == separating, || {
        Violation::new(
            Vec::<String>::new(),
            "the two tightness formulations disagree",
        )
    });

    let mut all_se = true;
    for f in family.members() {
        all_se &= real_fn_strongly_extensional(f, x)?.holds();
    }
    let vii = Verdict::conditional(all_se, "some member is not strongly extensional", || {
        pairs()
            .find(|&(s, t)| induced.neq(s, t) && !x.neq(s, t))
            .map_or(Verdict::Holds, |p| {
                fail(p, "induced-apart but not declared apart")
            })
    });

    Ok(F1Report {
        clauses: vec![
            ("i", i),
            ("ii", ii),
            ("iii", iii),
            ("iv", iv),
            ("v", v),
            ("vi", vi),
            ("vii", vii),
        ],
    })
}

/// The family `{d_z | z ∈ Z}` with `d_z(w) = d(z, w)`.
///
/// `d[z][w]` must vanish on the diagonal, be non-negative, symmetric and
/// respect the equality of `Z`. The triangle inequality is also required
/// unless `pseudometric` is set.
pub fn metric_family<S: Scalar>(
    z: &FinSetoid,
    d: &[Vec<S>],
    pseudometric: bool,
) -> Result<FnFamily<S>> {
    let n = z.len();
    if d.len() != n || d.iter().any(|row| row.len() != n) {
        return Err(Error::DomainMismatch(format!(
            "distance table is not {n}×{n} for `{}`",
            z.name()
        )));
    }
    let bad = |axiom: &str, atoms: &[usize]| Error::NotAMetric {
        axiom: axiom.to_string(),
        atoms: atoms.iter().map(|&i| z.atom(i).to_string()).collect(),
    };
    let zero = S::zero();
    for a in 0..n {
        if d[a][a] != zero {
            return Err(bad("d(z,z) = 0", &[a]));
        }
        for b in 0..n {
            if d[a][b] < zero {
                return Err(bad("non-negativity", &[a, b]));
            }
            if d[a][b] != d[b][a] {
                return Err(bad("symmetry", &[a, b]));
            }
            if z.eq(a, b) {
                if let Some(w) = (0..n).find(|&w| d[a][w] != d[b][w]) {
                    return Err(bad("respects equality", &[a, b, w]));
                }
            }
            if !pseudometric {
                if let Some(w) = (0..n).find(|&w| d[a][b] > d[a][w].clone() + d[w][b].clone()) {
                    return Err(bad("triangle inequality", &[a, w, b]));
                }
            }
        }
    }
    let members = (0..n)
        .map(|a| crate::RealFn::new(format!("d_{}", z.atom(a)), d[a].clone()))
        .collect();
    let family = FnFamily::new(z.clone(), members)?;
    if !pseudometric {
        let induced = induce(z, &family)?;
        for (a, row) in d.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                if induced.neq(a, b) != (*v > zero) {
                    return Err(Error::InvariantBroken(format!(
                        "induced inequality disagrees with d at ({}, {})",
                        z.atom(a),
                        z.atom(b)
                    )));
                }
            }
        }
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rat, RealFn};

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn ex() -> FinSetoid {
        FinSetoid::discrete("EX", ["a", "b", "c"]).unwrap()
    }

    fn f() -> RealFn<Rat> {
        RealFn::new("f", vec![r(0, 1), r(0, 1), r(1, 1)])
    }

    fn g() -> RealFn<Rat> {
        RealFn::new("g", vec![r(0, 1), r(1, 1), r(1, 1)])
    }

    #[test]
    fn induce_single_member() {
        let fam = FnFamily::new(ex(), vec![f()]).unwrap();
        let ind = induce(&ex(), &fam).unwrap();
        assert_eq!(ind.eq_setoid().block_count(), 2);
        assert!(ind.eq(0, 1) && !ind.eq(0, 2));
        let pairs: Vec<_> = ind.neq_relation().pairs().collect();
        assert_eq!(pairs, vec![(0, 2), (1, 2), (2, 0), (2, 1)]);
        for (a, b) in pairs {
            let w = ind.witness(a, b).unwrap();
            assert_eq!(w.label, "f");
            assert_eq!(w.gap, r(1, 1));
        }
    }

    #[test]
    fn empty_and_constant_families_induce_total_equality() {
        for fam in [
            FnFamily::empty(ex()),
            FnFamily::new(ex(), vec![RealFn::constant("k", 3, r(5, 2))]).unwrap(),
        ] {
            let ind = induce(&ex(), &fam).unwrap();
            assert!(ind.eq_setoid().is_total());
            assert!(ind.neq_relation().is_empty());
        }
    }

    #[test]
    fn separating_examples() {
        let one = FnFamily::new(ex(), vec![f()]).unwrap();
        match is_separating(&ex(), &one).unwrap() {
            Verdict::Fails(v) => assert_eq!(v.atoms, vec!["a", "b"]),
            other => panic!("unexpected {other:?}"),
        }
        let both = FnFamily::new(ex(), vec![f(), g()]).unwrap();
        assert!(is_separating(&ex(), &both).unwrap().holds());
        let point = FinSetoid::discrete("R", ["1/2"]).unwrap();
        let id = FnFamily::new(point.clone(), vec![RealFn::new("id", vec![r(1, 2)])]).unwrap();
        assert!(is_separating(&point, &id).unwrap().holds());
    }

    #[test]
    fn monotonicity_examples() {
        let small = FnFamily::new(ex(), vec![f()]).unwrap();
        let large = FnFamily::new(ex(), vec![f(), g()]).unwrap();
        let rep = monotonicity_check(&ex(), &small, &large).unwrap();
        assert!(rep.overall().holds());
        let rep = monotonicity_check(&ex(), &FnFamily::empty(ex()), &large).unwrap();
        assert!(rep.neq_forward.holds());
        assert!(matches!(
            monotonicity_check(&ex(), &large, &small),
            Err(Error::NotASubfamily { .. })
        ));
    }

    #[test]
    fn f1_on_completely_separated_fixture() {
        let fam = FnFamily::new(ex(), vec![f(), g()]).unwrap();
        let x = induce(&ex(), &fam).unwrap().on_declared();
        let rep = f1_report(&x, &fam).unwrap();
        for (id, v) in &rep.clauses {
            assert!(v.holds(), "clause {id}: {v}");
        }
    }

    #[test]
    fn f1_clause_vii_not_applicable_without_strong_extensionality() {
        let fam = FnFamily::new(ex(), vec![f()]).unwrap();
        let x = IneqSet::from_fn(ex(), |_, _| false);
        let rep = f1_report(&x, &fam).unwrap();
        assert!(rep.clause("vii").unwrap().is_not_applicable());
        assert!(!rep.overall().fails());
    }

    #[test]
    fn f1_with_empty_family() {
        let x = IneqSet::from_fn(ex(), |_, _| false);
        let rep = f1_report(&x, &FnFamily::<Rat>::empty(ex())).unwrap();
        for id in ["i", "iii", "iv"] {
            assert!(rep.clause(id).unwrap().holds());
        }
    }

    #[test]
    fn metric_examples() {
        let z = FinSetoid::discrete("Z", ["p", "q"]).unwrap();
        let d = vec![vec![r(0, 1), r(3, 2)], vec![r(3, 2), r(0, 1)]];
        let u = metric_family(&z, &d, false).unwrap();
        assert_eq!(u.len(), 2);
        let ind = induce(&z, &u).unwrap();
        let w = ind.witness(0, 1).unwrap();
        assert_eq!((w.label.as_str(), w.gap), ("d_p", r(3, 2)));

        let single = FinSetoid::discrete("Z", ["p"]).unwrap();
        let u = metric_family(&single, &[vec![r(0, 1)]], false).unwrap();
        assert!(induce(&single, &u).unwrap().neq_relation().is_empty());

        let glued = FinSetoid::new("Z", ["p", "q"], [vec!["p", "q"]]).unwrap();
        let zero = vec![vec![r(0, 1); 2]; 2];
        let u = metric_family(&glued, &zero, false).unwrap();
        assert!(induce(&glued, &u).unwrap().eq_setoid().is_total());
    }

    #[test]
    fn metric_rejections() {
        let z = FinSetoid::discrete("Z", ["p", "q", "s"]).unwrap();
        let o = r(0, 1);
        let asym = vec![
            vec![o, r(1, 1), r(1, 1)],
            vec![r(2, 1), o, r(1, 1)],
            vec![r(1, 1), r(1, 1), o],
        ];
        assert!(matches!(
            metric_family(&z, &asym, false),
            Err(Error::NotAMetric { ref axiom, .. }) if axiom == "symmetry"
        ));
        let no_triangle = vec![
            vec![o, r(5, 1), r(1, 1)],
            vec![r(5, 1), o, r(1, 1)],
            vec![r(1, 1), r(1, 1), o],
        ];
        assert!(matches!(
            metric_family(&z, &no_triangle, false),
            Err(Error::NotAMetric { ref axiom, .. }) if axiom == "triangle inequality"
        ));
        assert!(metric_family(&z, &no_triangle, true).is_ok());
    }
}
