use crate::kernel::IneqSet;
use crate::Verdict;

/// Verdicts for the six inequality axioms.
///
/// * Ineq1: `x = y ∧ x ≠ y` never holds.
/// * Ineq2: `x ≠ y ∧ x = x' ∧ y = y' ⇒ x' ≠ y'`.
/// * Ineq3: `¬(x ≠ y) ⇒ x = y` (decided classically on the finite model).
/// * Ineq4: `x ≠ y ⇒ y ≠ x`.
/// * Ineq5: `x ≠ y ⇒ z ≠ x ∨ z ≠ y` for every `z`.
/// * Ineq6: `x = y ∨ x ≠ y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub ineq1: Verdict,
    pub ineq2: Verdict,
    pub ineq3: Verdict,
    pub ineq4: Verdict,
    pub ineq5: Verdict,
    pub ineq6: Verdict,
}

impl AxiomReport {
    pub fn verdicts(&self) -> [(&'static str, &Verdict); 6] {
        [
            ("Ineq1", &self.ineq1),
            ("Ineq2", &self.ineq2),
            ("Ineq3", &self.ineq3),
            ("Ineq4", &self.ineq4),
            ("Ineq5", &self.ineq5),
            ("Ineq6", &self.ineq6),
        ]
    }

    pub fn is_inequality(&self) -> bool {
        self.ineq1.holds()
    }

    pub fn is_apartness(&self) -> bool {
        self.ineq4.holds() && self.ineq5.holds()
    }

    pub fn is_tight(&self) -> bool {
        self.ineq3.holds()
    }

    pub fn is_discrete(&self) -> bool {
        self.ineq6.holds()
    }

    pub fn is_extensional(&self) -> bool {
        self.ineq2.holds()
    }
}

pub fn check_ineq_axioms(s: &IneqSet) -> AxiomReport {
    check_relation_axioms(s.base().atoms(), |x, y| s.eq(x, y), |x, y| s.neq(x, y))
}

/// Evaluates the axioms for an arbitrary pair of relations on `atoms`.
///
/// `eq` must be an equivalence relation; `neq` is unrestricted.
pub fn check_relation_axioms(
    atoms: &[String],
    eq: impl Fn(usize, usize) -> bool,
    neq: impl Fn(usize, usize) -> bool,
) -> AxiomReport {
    let n = atoms.len();
    let name = |i: usize| atoms[i].as_str();
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));

    let ineq1 = first(pairs().find(|&(x, y)| eq(x, y) && neq(x, y)), |(x, y)| {
        Verdict::fail([name(x), name(y)], "equal atoms are declared unequal")
    });

    // Class representatives let extensionality be decided in quadratic time:
    // the axiom holds iff `neq` is constant on products of classes.
    let rep: Vec<usize> = (0..n)
        .map(|x| (0..=x).find(|&r| eq(r, x)).unwrap_or(x))
        .collect();
    let ineq2 = first(
        pairs().find(|&(x, y)| neq(x, y) != neq(rep[x], rep[y])),
        |(x, y)| {
            let (a, b, c, d) = if neq(x, y) {
                (x, y, rep[x], rep[y])
            } else {
                (rep[x], rep[y], x, y)
            };
            Verdict::fail(
                [name(a), name(b), name(c), name(d)],
                "inequality is not preserved by equality",
            )
        },
    );

    let ineq3 = first(pairs().find(|&(x, y)| !neq(x, y) && !eq(x, y)), |(x, y)| {
        Verdict::fail([name(x), name(y)], "neither unequal nor equal")
    });

    let ineq4 = first(pairs().find(|&(x, y)| neq(x, y) && !neq(y, x)), |(x, y)| {
        Verdict::fail([name(x), name(y)], "inequality is not symmetric")
    });

    let cotrans = pairs().filter(|&(x, y)| neq(x, y)).find_map(|(x, y)| {
        (0..n)
            .find(|&z| !neq(z, x) && !neq(z, y))
            .map(|z| (x, y, z))
    });
    let ineq5 = first(cotrans, |(x, y, z)| {
        Verdict::fail(
            [name(x), name(y), name(z)],
            "third atom is apart from neither",
        )
    });

    let ineq6 = first(pairs().find(|&(x, y)| !eq(x, y) && !neq(x, y)), |(x, y)| {
        Verdict::fail([name(x), name(y)], "neither equal nor unequal")
    });

    AxiomReport {
        ineq1,
        ineq2,
        ineq3,
        ineq4,
        ineq5,
        ineq6,
    }
}

fn first<T>(found: Option<T>, fail: impl FnOnce(T) -> Verdict) -> Verdict {
    found.map_or(Verdict::Holds, fail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{FinSetoid, Relation};

    #[test]
    fn discrete_pair_satisfies_everything() {
        let x = IneqSet::from_pairs(
            FinSetoid::discrete("X", ["a", "b"]).unwrap(),
            [("a", "b"), ("b", "a")],
        )
        .unwrap();
        let r = check_ineq_axioms(&x);
        for (id, v) in r.verdicts() {
            assert!(v.holds(), "{id}: {v}");
        }
        assert!(r.is_apartness() && r.is_tight() && r.is_discrete() && r.is_extensional());
    }

    #[test]
    fn equal_atoms_declared_unequal() {
        let base = FinSetoid::new("X", ["a", "b", "c"], [vec!["a", "b"], vec!["c"]]).unwrap();
        let x = IneqSet::from_pairs(base, [("a", "b"), ("b", "a")]).unwrap();
        let r = check_ineq_axioms(&x);
        match r.ineq1 {
            Verdict::Fails(v) => assert_eq!(v.atoms, vec!["a", "b"]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_inequality() {
        let one = FinSetoid::new("X", ["a", "b"], [vec!["a", "b"]]).unwrap();
        let two = FinSetoid::discrete("Y", ["a", "b"]).unwrap();
        for (base, tight) in [(one, true), (two, false)] {
            let s = IneqSet::new(base.clone(), Relation::empty(2)).unwrap();
            let r = check_ineq_axioms(&s);
            assert!(r.ineq1.holds() && r.ineq2.holds() && r.ineq4.holds() && r.ineq5.holds());
            assert_eq!(r.is_tight(), tight);
        }
    }

    #[test]
    fn extensionality_failure_names_four_atoms() {
        let base = FinSetoid::new("X", ["a", "b", "c"], [vec!["a", "b"], vec!["c"]]).unwrap();
        let s = IneqSet::from_pairs(base, [("b", "c")]).unwrap();
        match check_ineq_axioms(&s).ineq2 {
            Verdict::Fails(v) => assert_eq!(v.atoms, vec!["b", "c", "a", "c"]),
            other => panic!("unexpected {other:?}"),
        }
    }
}
