//! The acceptance sweep: one pass/fail line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sepset_cli::{fixtures, parse_spec, run_checks, Format, LawId, Status};
use sepset_core::complsep::{cs_funspace, cs_product, cs_subset, validate_complsep, ComplSep};
use sepset_core::families::{
    pi_cs, sigma_apartness_report, sigma_global_check, sigma_set, GlobalFamily, SetFamily,
};
use sepset_core::generate::*;
use sepset_core::induced::{induce, is_separating};
use sepset_core::universal::{
    free_adjunction_check, rho, rho_adjunction_check, rho_check, rho_product_check,
    tychonoff_check, FunctionSpace,
};
use sepset_core::{Bounds, FinSetoid, FnFamily, IneqSet, Rat, Verdict};

type Outcome = Result<String, String>;

/// Atoms of a Sigma-set with its equality and inequality tables.
type Criterion = fn() -> Outcome;

type SigmaTables = (Vec<(usize, usize)>, Vec<Vec<bool>>, Vec<Vec<bool>>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

fn oracle_eq(f: &FnFamily<Rat>, x: usize, y: usize) -> bool {
    f.members().iter().all(|m| m.value(x) == m.value(y))
}

fn oracle_neq(f: &FnFamily<Rat>, x: usize, y: usize) -> bool {
    f.members().iter().any(|m| m.value(x) != m.value(y))
}

/// `(Ineq1, Ineq4, Ineq5, Ineq6)` of a relation pair, straight from the
/// definitions.
fn axioms(
    n: usize,
    eq: impl Fn(usize, usize) -> bool,
    neq: impl Fn(usize, usize) -> bool,
) -> [bool; 4] {
    let i1 = pairs(n).all(|(a, b)| !(neq(a, b) && eq(a, b)));
    let i4 = pairs(n).all(|(a, b)| !neq(a, b) || neq(b, a));
    let i5 = pairs(n).all(|(a, b)| !neq(a, b) || (0..n).all(|z| neq(a, z) || neq(z, b)));
    let i6 = pairs(n).all(|(a, b)| eq(a, b) || neq(a, b));
    [i1, i4, i5, i6]
}

fn ineq_axioms(s: &IneqSet) -> [bool; 4] {
    axioms(s.len(), |a, b| s.eq(a, b), |a, b| s.neq(a, b))
}

fn declared_partition_matches(x: &FinSetoid, f: &FnFamily<Rat>) -> bool {
    pairs(x.len()).all(|(a, b)| x.eq(a, b) == oracle_eq(f, a, b))
}

fn criterion_1() -> Outcome {
    let mut r = rng(1);
    let cfg = GenConfig::default();
    let mut count = 0;
    for _ in 0..250 {
        let fs = random_function_space(&mut r, &cfg);
        let x = fs.carrier();
        ensure!(
            x.len() <= 8 && fs.family().len() <= 5,
            "generator exceeded its bounds"
        );
        let ind = induce(x, fs.family()).map_err(|e| e.to_string())?;
        let n = x.len();
        let [i1, i4, i5, _] = axioms(n, |a, b| ind.eq(a, b), |a, b| ind.neq(a, b));
        ensure!(
            i1 && i4 && i5,
            "induced relations of `{}` break an axiom",
            fs.name()
        );
        // Ineq2: x ≠ y and y = z give x ≠ z.
        let i2 =
            pairs(n).all(|(a, b)| !ind.neq(a, b) || (0..n).all(|z| !ind.eq(b, z) || ind.neq(a, z)));
        ensure!(
            i2,
            "induced inequality of `{}` is not extensional",
            fs.name()
        );
        for (a, b) in pairs(n) {
            ensure!(
                ind.neq(a, b) == oracle_neq(fs.family(), a, b),
                "≠ disagrees with its definition"
            );
            ensure!(
                ind.eq(a, b) == oracle_eq(fs.family(), a, b),
                "= disagrees with its definition"
            );
            ensure!(
                ind.eq(a, b) || ind.neq(a, b),
                "induced tightness fails at ({a}, {b})"
            );
        }
        let ax = ind.axioms();
        ensure!(
            ax.ineq1.holds() && ax.ineq2.holds() && ax.ineq4.holds() && ax.ineq5.holds(),
            "kernel audit disagrees with the oracle"
        );
        count += 1;
    }
    Ok(format!("{count} function spaces, zero failures"))
}

fn criterion_2() -> Outcome {
    let mut r = rng(1);
    let cfg = GenConfig::default();
    let (mut yes, mut no) = (0, 0);
    for _ in 0..250 {
        let fs = random_function_space(&mut r, &cfg);
        let (x, f) = (fs.carrier(), fs.family());
        let expected = declared_partition_matches(x, f);
        match is_separating(x, f).map_err(|e| e.to_string())? {
            Verdict::Holds => {
                ensure!(
                    expected,
                    "`{}` reported separating but partitions differ",
                    fs.name()
                );
                yes += 1;
            }
            Verdict::Fails(w) => {
                ensure!(
                    !expected,
                    "`{}` reported non-separating but partitions agree",
                    fs.name()
                );
                ensure!(w.atoms.len() == 2, "counterexample is not a pair: {w:?}");
                let a = x.index_of(&w.atoms[0]).ok_or("unknown witness atom")?;
                let b = x.index_of(&w.atoms[1]).ok_or("unknown witness atom")?;
                ensure!(
                    oracle_eq(f, a, b) && !x.eq(a, b),
                    "witness ({}, {}) does not separate the partitions",
                    w.atoms[0],
                    w.atoms[1]
                );
                no += 1;
            }
            Verdict::NotApplicable(why) => return Err(format!("unexpected not-applicable: {why}")),
        }
    }
    ensure!(yes > 0 && no > 0, "sweep hit only one side ({yes} / {no})");
    Ok(format!(
        "{yes} separating, {no} with a checked counterexample pair"
    ))
}

fn criterion_3() -> Outcome {
    let mut r = rng(3);
    let bounds = Bounds::default();
    let valid =
        |cs: &ComplSep<Rat>| validate_complsep(cs.set().clone(), cs.family().clone()).is_ok();
    let mut outputs = 0;
    for _ in 0..60 {
        let a = random_complsep(&mut r, "A", &GenConfig::small(4, 3));
        let b = random_complsep(&mut r, "B", &GenConfig::small(3, 2));
        let prod = cs_product(&a, &b, &bounds).map_err(|e| e.to_string())?;
        ensure!(valid(&prod.cs), "product is not completely separated");
        for (p, q) in pairs(prod.pairs.len()) {
            let ((x, y), (x2, y2)) = (prod.pairs[p], prod.pairs[q]);
            ensure!(
                prod.cs.set().neq(p, q) == (a.set().neq(x, x2) || b.set().neq(y, y2)),
                "product inequality chain fails"
            );
            ensure!(
                prod.cs.carrier().eq(p, q) == (a.carrier().eq(x, x2) && b.carrier().eq(y, y2)),
                "product equality fails"
            );
        }
        let fsp = cs_funspace(&b, &a, &bounds).map_err(|e| e.to_string())?;
        ensure!(valid(&fsp.cs), "function space is not completely separated");
        for (s, t) in pairs(fsp.tables.len()) {
            let (h, k) = (&fsp.tables[s], &fsp.tables[t]);
            let apart = (0..b.len()).any(|x| a.set().neq(h.image(x), k.image(x)));
            ensure!(
                fsp.cs.set().neq(s, t) == apart,
                "function-space inequality chain fails"
            );
        }
        let chosen: Vec<&str> = a
            .carrier()
            .blocks()
            .iter()
            .filter(|_| r.gen_bool(0.6))
            .map(|blk| a.carrier().atom(blk[0]))
            .collect();
        let (sub, incl) = a
            .carrier()
            .subset("S", &chosen)
            .map_err(|e| e.to_string())?;
        let s = cs_subset(&a, &sub, &incl).map_err(|e| e.to_string())?;
        ensure!(valid(&s), "subset is not completely separated");
        let fam = random_cs_family(&mut r, 3, &GenConfig::small(3, 2));
        let pi = pi_cs(&fam, &bounds).map_err(|e| e.to_string())?;
        ensure!(valid(&pi.cs), "Pi-set is not completely separated");
        outputs += 4;
    }
    Ok(format!(
        "{outputs} constructions validated, chains checked on every pair"
    ))
}

/// The Sigma relations of a local family, from the definitions.
fn sigma_oracle(fam: &SetFamily, global: bool) -> SigmaTables {
    let pairs: Vec<(usize, usize)> = (0..fam.index.len())
        .flat_map(|i| (0..fam.fibers[i].len()).map(move |x| (i, x)))
        .collect();
    let n = pairs.len();
    let mut eq = vec![vec![false; n]; n];
    let mut neq = vec![vec![false; n]; n];
    for (p, &(i, x)) in pairs.iter().enumerate() {
        for (q, &(j, y)) in pairs.iter().enumerate() {
            let same = fam.index.eq(i, j);
            let moved = |i: usize, j: usize| fam.transports.get(&(i, j)).map(|t| t.image(x));
            if same {
                eq[p][q] = fam.fibers[j].eq(moved(i, j).unwrap(), y);
            }
            let fiber_apart = (same || global) && fam.fibers[j].neq(moved(i, j).unwrap(), y);
            neq[p][q] = fam.index.neq(i, j) || fiber_apart;
        }
    }
    (pairs, eq, neq)
}

fn criterion_4() -> Outcome {
    let mut r = rng(4);
    let (mut applicable, mut skipped, mut total) = (0, 0, 0);
    for k in 0..200 {
        let mut fam = random_set_family(&mut r, 4, 5);
        if k % 2 == 1 {
            // the same transports between discrete apartness relations
            fam = SetFamily::new(
                IneqSet::cross_block(fam.index.base().clone()),
                fam.fibers
                    .iter()
                    .map(|f| IneqSet::cross_block(f.base().clone()))
                    .collect(),
                fam.transports.clone(),
            )
            .map_err(|e| e.to_string())?;
        }
        total += 1;
        let sigma = sigma_set(&fam).map_err(|e| e.to_string())?;
        let (ps, eq, neq) = sigma_oracle(&fam, false);
        ensure!(sigma.pairs == ps, "Sigma atoms out of order");
        for (p, q) in pairs(ps.len()) {
            ensure!(
                sigma.set.eq(p, q) == eq[p][q],
                "Sigma equality differs at ({p}, {q})"
            );
            ensure!(
                sigma.set.neq(p, q) == neq[p][q],
                "Sigma inequality differs at ({p}, {q})"
            );
        }
        let idx = ineq_axioms(&fam.index);
        let hyp = idx[0]
            && idx[3]
            && fam.fibers.iter().all(|f| {
                let [i1, i4, i5, _] = ineq_axioms(f);
                i1 && i4 && i5
            });
        let report = sigma_apartness_report(&fam).map_err(|e| e.to_string())?;
        let (_, apart) = report
            .clauses
            .iter()
            .find(|(id, _)| id == "apartness")
            .ok_or("no apartness clause")?;
        ensure!(!apart.fails(), "apartness clause fails: {apart}");
        if hyp {
            let [i1, i4, i5, _] = axioms(ps.len(), |p, q| eq[p][q], |p, q| neq[p][q]);
            ensure!(
                i1 && i4 && i5,
                "hypotheses hold but Sigma inequality is no apartness"
            );
            ensure!(apart.holds(), "hypotheses hold but the clause is {apart}");
            applicable += 1;
        } else {
            ensure!(
                apart.is_not_applicable(),
                "hypotheses fail but the clause is {apart}"
            );
            skipped += 1;
        }
    }
    ensure!(
        applicable >= 50,
        "only {applicable} instances satisfied the hypotheses"
    );
    Ok(format!(
        "{total} families: {applicable} concluded apartness, {skipped} reported not-applicable"
    ))
}

fn criterion_5() -> Outcome {
    let mut r = rng(5);
    let bounds = Bounds::default();
    let mut count = 0;
    for _ in 0..60 {
        let g = random_global_family(&mut r, 3, &GenConfig::small(4, 3));
        let rep = sigma_global_check(&g, &bounds).map_err(|e| e.to_string())?;
        ensure!(rep.clauses().overall().holds(), "{:?}", rep.clauses());
        let (ps, _, neq) = sigma_oracle(&g.sets, true);
        ensure!(rep.sigma.pairs == ps, "Sigma atoms out of order");
        for (p, q) in pairs(ps.len()) {
            ensure!(
                rep.sigma.set.neq(p, q) == neq[p][q],
                "Sigma inequality differs from its definition"
            );
            ensure!(
                oracle_neq(&rep.family, p, q) == neq[p][q],
                "the inequality induced by the hat family differs from the Sigma inequality at ({p}, {q})"
            );
        }
        validate_complsep(rep.sigma.set.clone(), rep.family.clone()).map_err(|e| e.to_string())?;
        count += 1;
    }
    let mut constant = 0;
    for _ in 0..20 {
        let index = random_complsep(&mut r, "I", &GenConfig::small(3, 2));
        let fiber = random_complsep(&mut r, "X", &GenConfig::small(3, 2));
        let g = GlobalFamily::constant(&index, &fiber);
        let rep = sigma_global_check(&g, &bounds).map_err(|e| e.to_string())?;
        ensure!(
            rep.clauses().overall().holds(),
            "constant family: {:?}",
            rep.clauses()
        );
        for (p, q) in pairs(rep.sigma.pairs.len()) {
            let ((i, x), (j, y)) = (rep.sigma.pairs[p], rep.sigma.pairs[q]);
            let product = index.set().neq(i, j) || fiber.set().neq(x, y);
            ensure!(
                rep.sigma.set.neq(p, q) == product,
                "constant family is not the product"
            );
        }
        constant += 1;
    }
    Ok(format!(
        "{count} global families and {constant} constant families, all pairs agree"
    ))
}

fn criterion_6() -> Outcome {
    let mut r = rng(6);
    let bounds = Bounds::default();
    let small = GenConfig::small(3, 2);
    let mut squares = 0;
    for _ in 0..20 {
        let n = r.gen_range(1..=4);
        let x = random_setoid(&mut r, "X", n);
        let y = random_complsep(&mut r, "Y", &small);
        let phis: Vec<_> = (0..10).map(|_| random_arrow_into(&mut r, &x, 3)).collect();
        let thetas: Vec<_> = (0..10)
            .map(|_| random_se_arrow_from(&mut r, &y, &small))
            .collect();
        let rep =
            free_adjunction_check(&x, &y, &phis, &thetas, &bounds).map_err(|e| e.to_string())?;
        ensure!(
            rep.overall().holds(),
            "free adjunction: {:?}",
            rep.clauses()
        );
        let expected = y.carrier().block_count().pow(x.block_count() as u32);
        ensure!(
            rep.left_size == expected && rep.right_size == expected,
            "hom-set sizes {} / {} where {expected} were expected",
            rep.left_size,
            rep.right_size
        );
        ensure!(
            rep.naturality_left.len() + rep.naturality_right.len() >= 20,
            "too few squares"
        );
        squares += rep.naturality_left.len() + rep.naturality_right.len();
    }
    let mut rho_squares = 0;
    for _ in 0..20 {
        let a = random_function_space(&mut r, &small);
        let b = random_function_space(&mut r, &small);
        let phis = (0..10)
            .map(|_| random_affine_into(&mut r, &a, &small))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let thetas = (0..10)
            .map(|_| random_affine_from(&mut r, &b))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let rep =
            rho_adjunction_check(&a, &b, &phis, &thetas, &bounds).map_err(|e| e.to_string())?;
        ensure!(
            rep.clauses().overall().holds(),
            "rho adjunction: {:?}",
            rep.clauses()
        );
        for half in [&rep.reflection, &rep.coreflection] {
            ensure!(
                half.naturality_left.len() + half.naturality_right.len() >= 20,
                "too few squares"
            );
            rho_squares += half.naturality_left.len() + half.naturality_right.len();
        }
    }
    let mut products = 0;
    for _ in 0..12 {
        let a = random_function_space(&mut r, &small);
        let b = random_function_space(&mut r, &small);
        let v = rho_product_check(&a, &b, &bounds).map_err(|e| e.to_string())?;
        ensure!(v.holds(), "product preservation: {v}");
        products += 1;
    }
    Ok(format!(
        "20 + 20 instance pairs ({squares} free and {rho_squares} ρ naturality squares), {products} product checks"
    ))
}

fn criterion_7() -> Outcome {
    let mut r = rng(7);
    let bounds = Bounds::default();
    let (mut sep, mut total) = (0, 0);
    for _ in 0..120 {
        let fs = random_function_space(&mut r, &GenConfig::small(6, 4));
        let rep = tychonoff_check(&fs, &bounds).map_err(|e| e.to_string())?;
        let expected = declared_partition_matches(fs.carrier(), fs.family());
        ensure!(
            rep.separating == expected,
            "separation flag is wrong for `{}`",
            fs.name()
        );
        // e(x) = e(y) exactly when every member agrees on x and y
        let injective = pairs(fs.len()).all(|(a, b)| {
            let same_point = rep
                .power
                .cs
                .carrier()
                .eq(rep.embedding.image(a), rep.embedding.image(b));
            !same_point || fs.carrier().eq(a, b)
        });
        ensure!(
            rep.injective == injective,
            "injectivity flag is wrong for `{}`",
            fs.name()
        );
        ensure!(
            injective == expected,
            "biconditional fails for `{}`",
            fs.name()
        );
        for x in 0..fs.len() {
            let table = &rep.power.pi.tables[rep.embedding.image(x)];
            for (k, f) in fs.family().members().iter().enumerate() {
                ensure!(
                    &rep.power.values[table.at(k)] == f.value(x),
                    "pr_f ∘ e ≠ f at {x}"
                );
            }
        }
        ensure!(rep.affine_identity.holds(), "{}", rep.affine_identity);
        ensure!(rep.strong_ext.holds(), "{}", rep.strong_ext);
        ensure!(!rep.clause_ii.fails(), "{}", rep.clause_ii);
        sep += usize::from(expected);
        total += 1;
    }
    Ok(format!(
        "{total} function spaces ({sep} separating), biconditional and projections hold"
    ))
}

fn criterion_8() -> Outcome {
    let mut r = rng(8);
    let mut count = 0;
    for _ in 0..150 {
        let fs = random_function_space(&mut r, &GenConfig::default());
        let rep = rho_check(&fs).map_err(|e| e.to_string())?;
        ensure!(rep.overall().holds(), "{rep:?}");
        let refl = rho(&fs).map_err(|e| e.to_string())?;
        validate_complsep(refl.cs.set().clone(), refl.cs.family().clone())
            .map_err(|e| e.to_string())?;
        for m in fs.family().members() {
            for (a, b) in pairs(fs.len()) {
                let (ta, tb) = (refl.tau.image(a), refl.tau.image(b));
                ensure!(
                    m.value(a) == m.value(b) || refl.cs.set().neq(ta, tb),
                    "`{}` is not strongly extensional over ρ",
                    m.label()
                );
            }
            let back = refl.tau_star(m);
            let forth = refl
                .cs
                .family()
                .members()
                .iter()
                .find(|g| g.label() == m.label());
            let g = forth.ok_or("member lost by ρ")?;
            ensure!(
                (0..fs.len()).all(
                    |x| back.value(x) == m.value(x) && g.value(refl.tau.image(x)) == m.value(x)
                ),
                "τ* and ρ do not compose to the identity on `{}`",
                m.label()
            );
        }
        count += 1;
    }
    let mut fixed = 0;
    for _ in 0..50 {
        let cs = random_complsep(&mut r, "C", &GenConfig::default());
        let fs = FunctionSpace::new(cs.carrier().clone(), cs.family().clone())
            .map_err(|e| e.to_string())?;
        let refl = rho(&fs).map_err(|e| e.to_string())?;
        ensure!(
            refl.cs.carrier().same_structure(cs.carrier()),
            "ρ changed the partition"
        );
        ensure!(
            refl.cs.set().same_structure(cs.set()),
            "ρ changed the inequality"
        );
        fixed += 1;
    }
    Ok(format!(
        "{count} function spaces reflected, {fixed} completely separated inputs unchanged"
    ))
}

fn criterion_9() -> Outcome {
    let mut r = rng(9);
    let mut round_trips = 0;
    for _ in 0..120 {
        let doc = common::random_document(&mut r, 5);
        let text = doc.to_string();
        let back = parse_spec(&text).map_err(|e| format!("{e}\n{text}"))?;
        ensure!(back == doc, "round trip changed the document:\n{text}");
        round_trips += 1;
    }
    let bounds = Bounds {
        max_atoms: 6,
        max_enum: 2000,
    };
    for _ in 0..20 {
        let doc = common::random_document(&mut r, 4);
        let a = run_checks(&doc, None, bounds).map_err(|e| e.to_string())?;
        let b = run_checks(&doc, None, bounds).map_err(|e| e.to_string())?;
        ensure!(
            a.emit(Format::Machine, false) == b.emit(Format::Machine, false),
            "machine report differs between runs"
        );
    }
    let mut laws: Vec<String> = Vec::new();
    for (name, text) in fixtures::all() {
        let doc = parse_spec(text).map_err(|e| format!("{name}: {e}"))?;
        let report = run_checks(&doc, None, Bounds::default()).map_err(|e| e.to_string())?;
        for c in &report.checks {
            ensure!(
                matches!(c.status, Status::Pass | Status::NotApplicable),
                "{name}: `{}` is {}",
                c.name,
                c.status.as_str()
            );
            laws.push(c.law.clone());
        }
    }
    for law in LawId::ALL {
        ensure!(
            laws.iter().any(|l| l == law.id()),
            "no fixture check uses `{law}`"
        );
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).map(|_| p.to_string_lossy().into_owned())
    };
    let ex = path("ex.sep", fixtures::EX).map_err(|e| e.to_string())?;
    let failing = path("fail.sep", "set X\n  atoms = a\n\nineq N\n  set = X\n  neq = a,a\n\ncheck c\n  law = ineq-axioms\n  set = N\n")
        .map_err(|e| e.to_string())?;
    let invalid = path(
        "bad.sep",
        "set X\n  atoms = a\n\nfn f\n  on = X\n  values = a:2/4\n",
    )
    .map_err(|e| e.to_string())?;
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_sepset"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())
    };
    let codes = [
        (vec!["audit", ex.as_str()], 0),
        (vec!["audit", ex.as_str(), "--check", "zz*"], 0),
        (vec!["audit", failing.as_str()], 1),
        (vec!["audit", invalid.as_str()], 2),
        (
            vec!["audit", ex.as_str(), "--max-atoms", "2", "--strict-bounds"],
            3,
        ),
    ];
    for (args, code) in &codes {
        let out = run(args)?;
        ensure!(
            out.status.code() == Some(*code),
            "`sepset {}` exited with {:?}",
            args.join(" "),
            out.status.code()
        );
    }
    let first = run(&["audit", &ex, "--format", "machine"])?.stdout;
    let second = run(&["audit", &ex, "--format", "machine"])?.stdout;
    ensure!(
        first == second,
        "machine output of the binary is not byte-stable"
    );
    Ok(format!(
        "{round_trips} documents round-tripped, {} fixture checks cover all {} laws, {} exit codes honored",
        laws.len(),
        LawId::ALL.len(),
        codes.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 9] = [
        ("axiom audit sweep", criterion_1),
        ("separation biconditional", criterion_2),
        ("closure constructions", criterion_3),
        ("Sigma apartness", criterion_4),
        ("global-family theorem", criterion_5),
        ("adjunction oracles", criterion_6),
        ("Tychonoff biconditional", criterion_7),
        ("Stone-Čech reflection", criterion_8),
        (
            "CLI round trip, stability, exit codes, fixtures",
            criterion_9,
        ),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {} ({title}): PASS [{ms} ms] {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({title}): FAIL [{ms} ms] {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass in {:.1} s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
