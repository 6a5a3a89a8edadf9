use super::{diagonal, names, SetFamily};
use crate::kernel::canonical::{odometer, pair_name};
use crate::kernel::{check_ineq_axioms, is_strongly_extensional, Bounds};
use crate::{ClauseReport, Error, FinSetoid, IneqSet, Result, SetMap, Verdict};

/// The dependent-pair set of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaSet {
    pub set: IneqSet,
    /// `pairs[p] = (i, x)` with `x` an atom of fiber `i`.
    pub pairs: Vec<(usize, usize)>,
    /// First projection onto the index.
    pub pr1: SetMap,
}

impl SigmaSet {
    pub fn position(&self, i: usize, x: usize) -> Option<usize> {
        self.pairs.iter().position(|&p| p == (i, x))
    }
}

fn sigma_with(fam: &SetFamily, global: bool) -> Result<SigmaSet> {
    let index = &fam.index;
    let pairs: Vec<(usize, usize)> = (0..index.len())
        .flat_map(|i| (0..fam.fibers[i].len()).map(move |x| (i, x)))
        .collect();
    let atom_names: Vec<String> = pairs
        .iter()
        .map(|&(i, x)| pair_name(index.atom(i), fam.fibers[i].atom(x)))
        .collect();
    // λ_ij(x) for every pair on which it is consulted.
    let moved =
        |i: usize, x: usize, j: usize| -> Result<usize> { Ok(fam.transport(i, j)?.image(x)) };
    let n = pairs.len();
    let mut eq = vec![false; n * n];
    let mut neq = vec![false; n * n];
    for (p, &(i, x)) in pairs.iter().enumerate() {
        for (q, &(j, y)) in pairs.iter().enumerate() {
            let same_index = index.eq(i, j);
            if same_index {
                let image = moved(i, x, j)?;
                eq[p * n + q] = fam.fibers[j].eq(image, y);
            }
            neq[p * n + q] = if global {
                index.neq(i, j) || fam.fibers[j].neq(moved(i, x, j)?, y)
            } else {
                index.neq(i, j) || (same_index && fam.fibers[j].neq(moved(i, x, j)?, y))
            };
        }
    }
    let name = format!("Σ{}", index.name());
    let base = FinSetoid::from_relation(name, atom_names, |p, q| eq[p * n + q]).map_err(|e| {
        Error::PreconditionViolated(format!("Sigma equality is not an equivalence: {e}"))
    })?;
    let set = IneqSet::from_fn(base, |p, q| neq[p * n + q]);
    let pr1 = SetMap::new("pr1", pairs.iter().map(|&(i, _)| i).collect());
    if is_strongly_extensional(&pr1, &set, index)?.fails() {
        return Err(Error::InvariantBroken(
            "first projection is not strongly extensional".into(),
        ));
    }
    Ok(SigmaSet { set, pairs, pr1 })
}

/// `(i,x) = (j,y) :⇔ i =_I j ∧ λ_ij(x) = y` and
/// `(i,x) ≠ (j,y) :⇔ i ≠_I j ∨ (i =_I j ∧ λ_ij(x) ≠ y)`.
pub fn sigma_set(fam: &SetFamily) -> Result<SigmaSet> {
    sigma_with(fam, false)
}

/// Sigma-set of a global family: `(i,x) ≠ (j,y) :⇔ i ≠_I j ∨ λ*_ij(x) ≠ y`.
pub fn sigma_set_global(fam: &SetFamily) -> Result<SigmaSet> {
    sigma_with(fam, true)
}

/// A dependent assignment: `0[i]` is an atom of fiber `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DepTable(pub Vec<usize>);

impl DepTable {
    pub fn at(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn name(&self, fam: &SetFamily) -> String {
        let entries: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &x)| format!("{}:{}", fam.index.atom(i), fam.fibers[i].atom(x)))
            .collect();
        format!("<{}>", entries.join(","))
    }
}

/// `Θ_j = λ_ij(Θ_i)` on the diagonal; fails with the first offending pair.
pub fn is_in_pi(fam: &SetFamily, theta: &DepTable) -> Result<Verdict> {
    if theta.0.len() != fam.index.len() {
        return Err(Error::NotInPiSet(format!(
            "{} entries for {} indices",
            theta.0.len(),
            fam.index.len()
        )));
    }
    for (i, &x) in theta.0.iter().enumerate() {
        if x >= fam.fibers[i].len() {
            return Err(Error::NotInPiSet(format!(
                "entry {x} is outside fiber `{}`",
                fam.index.atom(i)
            )));
        }
    }
    for (i, j) in diagonal(fam.index.base()) {
        let moved = fam.transport(i, j)?.image(theta.at(i));
        if !fam.fibers[j].eq(moved, theta.at(j)) {
            return Ok(Verdict::fail(
                names(&fam.index, &[i, j]),
                "dependent table is not compatible with the transport",
            ));
        }
    }
    Ok(Verdict::Holds)
}

/// The compatible dependent tables, one per pointwise-equality class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiSet {
    pub set: IneqSet,
    pub tables: Vec<DepTable>,
}

impl PiSet {
    /// Evaluation at index `i`, a map from the Pi-set to fiber `i`.
    pub fn projection(&self, fam: &SetFamily, i: usize) -> SetMap {
        SetMap::new(
            format!("pr_{}", fam.index.atom(i)),
            self.tables.iter().map(|t| t.at(i)).collect(),
        )
    }
}

/// Enumerates the Pi-set by choosing a fiber block at the first index of each
/// index block and transporting it to the rest of the block.
pub fn pi_set(fam: &SetFamily, bounds: &Bounds) -> Result<PiSet> {
    let index = fam.index.base();
    let reps: Vec<usize> = index.blocks().iter().map(|b| b[0]).collect();
    let radices: Vec<usize> = reps
        .iter()
        .map(|&r| fam.fibers[r].base().block_count())
        .collect();
    let count = radices
        .iter()
        .fold(1u128, |acc, &r| acc.saturating_mul(r as u128));
    bounds.check_enum(count)?;
    let mut tables = Vec::new();
    for choice in odometer(&radices) {
        let mut theta = vec![0; index.len()];
        for (b, block) in index.blocks().iter().enumerate() {
            let r = reps[b];
            let x = fam.fibers[r].base().blocks()[choice[b]][0];
            for &j in block {
                theta[j] = fam.transport(r, j)?.image(x);
            }
        }
        let theta = DepTable(theta);
        if is_in_pi(fam, &theta)?.holds() {
            tables.push(theta);
        }
    }
    let atom_names: Vec<String> = tables.iter().map(|t| t.name(fam)).collect();
    let eq_at = |s: usize, t: usize| {
        (0..index.len()).all(|i| fam.fibers[i].eq(tables[s].at(i), tables[t].at(i)))
    };
    let base = FinSetoid::from_relation(format!("Π{}", fam.index.name()), atom_names, eq_at)?;
    let set = IneqSet::from_fn(base, |s, t| {
        (0..index.len()).any(|i| fam.fibers[i].neq(tables[s].at(i), tables[t].at(i)))
    });
    Ok(PiSet { set, tables })
}

/// The three implications about Sigma-sets. A clause whose hypothesis fails
/// is reported not applicable.
pub fn sigma_apartness_report(fam: &SetFamily) -> Result<ClauseReport> {
    let sigma = sigma_set(fam)?;
    let idx = check_ineq_axioms(&fam.index);
    let fibers: Vec<_> = fam.fibers.iter().map(check_ineq_axioms).collect();
    let out = check_ineq_axioms(&sigma.set);
    let index_discrete = idx.ineq1.holds() && idx.ineq6.holds();

    let apart_hyp = index_discrete && fibers.iter().all(|r| r.ineq1.holds() && r.is_apartness());
    let apartness = Verdict::conditional(
        apart_hyp,
        "index is not discrete or some fiber is not an apartness",
        || Verdict::all([out.ineq1.clone(), out.ineq4.clone(), out.ineq5.clone()]),
    );

    let disc_hyp = idx.ineq6.holds() && fibers.iter().all(|r| r.ineq6.holds());
    let discrete = Verdict::conditional(disc_hyp, "index or some fiber is not discrete", || {
        out.ineq6.clone()
    });

    let tight_hyp = idx.ineq3.holds() && fibers.iter().all(|r| r.ineq3.holds());
    let tight = Verdict::conditional(tight_hyp, "index or some fiber is not tight", || {
        out.ineq3.clone()
    });

    Ok(ClauseReport::new()
        .with("apartness", apartness)
        .with("discrete", discrete)
        .with("tight", tight))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::validate_family;
    use std::collections::BTreeMap;

    fn full(name: &str, atoms: &[&str]) -> IneqSet {
        IneqSet::cross_block(FinSetoid::discrete(name, atoms.iter().copied()).unwrap())
    }

    #[test]
    fn two_family_sigma() {
        let fam = SetFamily::two(full("X", &["a", "b"]), full("Y", &["p", "q"]));
        let s = sigma_set(&fam).unwrap();
        assert_eq!(s.set.len(), 4);
        for (p, &(i, _)) in s.pairs.iter().enumerate() {
            for (q, &(j, _)) in s.pairs.iter().enumerate() {
                if i != j {
                    assert!(s.set.neq(p, q));
                }
            }
        }
        assert!(check_ineq_axioms(&s.set).is_discrete());
        let rep = sigma_apartness_report(&fam).unwrap();
        for (id, v) in &rep.clauses {
            assert!(v.holds(), "{id}: {v}");
        }
    }

    #[test]
    fn sigma_over_point_is_the_fiber() {
        let fiber = IneqSet::from_pairs(
            FinSetoid::new("X", ["a", "b", "c"], [vec!["a", "b"], vec!["c"]]).unwrap(),
            [("a", "c"), ("c", "a"), ("b", "c"), ("c", "b")],
        )
        .unwrap();
        let fam = SetFamily::constant(full("1", &["*"]), fiber.clone());
        let s = sigma_set(&fam).unwrap();
        for p in 0..3 {
            for q in 0..3 {
                assert_eq!(s.set.eq(p, q), fiber.eq(p, q));
                assert_eq!(s.set.neq(p, q), fiber.neq(p, q));
            }
        }
    }

    /// Applies the definition literally to three fibers over a two-block index.
    #[test]
    fn sigma_matches_literal_definition() {
        let index = IneqSet::cross_block(
            FinSetoid::new("I", ["i", "j", "k"], [vec!["i", "j"], vec!["k"]]).unwrap(),
        );
        let x = full("X", &["a", "b"]);
        let mut transports = BTreeMap::new();
        let swap = SetMap::new("swap", vec![1, 0]);
        transports.insert((0, 0), SetMap::identity(2));
        transports.insert((1, 1), SetMap::identity(2));
        transports.insert((2, 2), SetMap::identity(3));
        transports.insert((0, 1), swap.clone());
        transports.insert((1, 0), swap);
        let fam = SetFamily::new(
            index.clone(),
            vec![x.clone(), x, full("Z", &["u", "v", "w"])],
            transports,
        )
        .unwrap();
        assert!(validate_family(&fam).unwrap().overall().holds());
        let s = sigma_set(&fam).unwrap();
        assert_eq!(s.set.len(), 7);
        for (p, &(i, x)) in s.pairs.iter().enumerate() {
            for (q, &(j, y)) in s.pairs.iter().enumerate() {
                let (eq, neq) = if i == 2 || j == 2 {
                    (i == j && x == y, i != j || x != y)
                } else {
                    let moved = if i == j { x } else { 1 - x };
                    (moved == y, moved != y)
                };
                assert_eq!(s.set.eq(p, q), eq, "eq at {p},{q}");
                assert_eq!(s.set.neq(p, q), neq, "neq at {p},{q}");
            }
        }
        // compatibility pins Θ_j to the swap of Θ_i: 2 · 3 tables
        let pi = pi_set(&fam, &Bounds::default()).unwrap();
        assert_eq!(pi.tables.len(), 6);
        for t in &pi.tables {
            assert_eq!(t.at(1), 1 - t.at(0));
            let (p, q) = (
                s.position(0, t.at(0)).unwrap(),
                s.position(1, t.at(1)).unwrap(),
            );
            assert!(s.set.eq(p, q));
        }
    }

    #[test]
    fn pi_of_constant_family_is_the_function_set() {
        let index = full("I", &["i", "j"]);
        let x = full("X", &["a", "b", "c"]);
        let fam = SetFamily::constant(index.clone(), x.clone());
        let pi = pi_set(&fam, &Bounds::default()).unwrap();
        let funs =
            crate::kernel::enumerate_functions(index.base(), x.base(), &Bounds::default()).unwrap();
        assert_eq!(pi.tables.len(), funs.len());
        for (t, h) in pi.tables.iter().zip(&funs) {
            assert_eq!(t.0, h.images());
        }
        let point = SetFamily::constant(full("1", &["*"]), x);
        assert_eq!(pi_set(&point, &Bounds::default()).unwrap().tables.len(), 3);
    }

    #[test]
    fn empty_index_inequality_makes_tightness_not_applicable() {
        let index = IneqSet::from_fn(FinSetoid::discrete("I", ["i", "j"]).unwrap(), |_, _| false);
        let fam = SetFamily::constant(index, full("X", &["a"]));
        let rep = sigma_apartness_report(&fam).unwrap();
        assert!(rep.clause("tight").unwrap().is_not_applicable());
    }
}
