//! Evaluates the checks of a document.

use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use sepset_core::complsep::{check_complsep, is_affine_between, ComplSep};
use sepset_core::families::{
    dep_strongly_extensional, fcl3_check, pi_cs, pi_set, second_projection_check,
    sigma_apartness_report, sigma_global_check, validate_cs_family, validate_family,
    validate_global_family, validate_global_set_family, DepTable,
};
use sepset_core::induced::{f1_report, monotonicity_check};
use sepset_core::kernel::check_ineq_axioms;
use sepset_core::universal::{
    bidual_check, dual_cs, embed_eh, free_adjunction_check, free_universal_check, hom_family_m,
    r_power, rho_adjunction_check, rho_check, rho_product_check, tychonoff_check, FunctionSpace,
};
use sepset_core::{Bounds, ClauseReport, Error, FinSetoid, Rat, SetMap, Verdict};

use crate::document::{CheckDecl, FamilyKind, ParamValue, SpecDocument};
use crate::model::{Model, Object};
use crate::registry::{LawId, UnknownLawId, AXIOM_IDS};
use crate::report::{CheckResult, ClauseResult, Hypothesis, Report, Status, Timing, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error(transparent)]
    UnknownLawId(#[from] UnknownLawId),
    #[error("invalid filter `{pattern}`: {message}")]
    BadFilter { pattern: String, message: String },
    #[error("invalid document: {0}")]
    Model(String),
}

/// Bounds from the document, overridden by explicit values.
pub fn effective_bounds(
    doc: &SpecDocument,
    max_atoms: Option<usize>,
    max_enum: Option<usize>,
) -> Bounds {
    let d = Bounds::default();
    Bounds {
        max_atoms: max_atoms.or(doc.settings.max_atoms).unwrap_or(d.max_atoms),
        max_enum: max_enum.or(doc.settings.max_enum).unwrap_or(d.max_enum),
    }
}

fn law_filter(filter: Option<&str>) -> Result<Option<glob::Pattern>, RunError> {
    let Some(f) = filter else { return Ok(None) };
    if !f.contains(['*', '?', '[']) {
        f.parse::<LawId>()?;
    }
    glob::Pattern::new(f)
        .map(Some)
        .map_err(|e| RunError::BadFilter {
            pattern: f.to_string(),
            message: e.to_string(),
        })
}

/// Runs every check whose law id matches `filter`, in declaration order.
pub fn run_checks(
    doc: &SpecDocument,
    filter: Option<&str>,
    bounds: Bounds,
) -> Result<Report, RunError> {
    let pattern = law_filter(filter)?;
    let model = Model::build(doc).map_err(RunError::Model)?;
    let selected: Vec<&CheckDecl> = doc
        .checks()
        .filter(|c| pattern.as_ref().is_none_or(|p| p.matches(c.law.id())))
        .collect();
    let results: Vec<(CheckResult, Timing)> = selected
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let result = evaluate(&model, c, &bounds);
            let micros = start.elapsed().as_micros() as u64;
            (
                result,
                Timing {
                    check: c.name.clone(),
                    micros,
                },
            )
        })
        .collect();
    let (checks, timings) = results.into_iter().unzip();
    Ok(Report { checks, timings })
}

/// What a law evaluation produced.
struct Outcome {
    clauses: Vec<(String, Verdict)>,
    summary: String,
    hypotheses: Vec<Hypothesis>,
}

impl Outcome {
    fn new(clauses: Vec<(String, Verdict)>, summary: impl Into<String>) -> Self {
        Outcome {
            clauses,
            summary: summary.into(),
            hypotheses: Vec::new(),
        }
    }

    fn from_report(r: ClauseReport, summary: impl Into<String>) -> Self {
        Outcome::new(r.clauses, summary)
    }

    fn single(id: &str, v: Verdict, summary: impl Into<String>) -> Self {
        Outcome::new(vec![(id.to_string(), v)], summary)
    }

    fn hypothesis(mut self, clause: &str, holds: bool, note: impl Into<String>) -> Self {
        self.hypotheses.push(Hypothesis {
            clause: clause.to_string(),
            holds,
            note: note.into(),
        });
        self
    }
}

/// Failures of the law evaluation itself.
enum Stop {
    Bound(String),
    NotApplicable(String),
    Error(String),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        match e {
            Error::CarrierTooLarge { .. } => Stop::Bound(e.to_string()),
            Error::IndexNotDiscrete { .. }
            | Error::EmptyValueUniverse
            | Error::NotASubfamily { .. }
            | Error::NotCompletelySeparated { .. } => Stop::NotApplicable(e.to_string()),
            other => Stop::Error(other.to_string()),
        }
    }
}

impl From<String> for Stop {
    fn from(e: String) -> Self {
        Stop::Error(e)
    }
}

fn evaluate(model: &Model, check: &CheckDecl, bounds: &Bounds) -> CheckResult {
    let outcome = oversized(model, check, bounds).map_or_else(
        || dispatch(model, check, bounds),
        |why| Err(Stop::Bound(why)),
    );
    let (status, summary, clauses, hypotheses) = match outcome {
        Ok(o) => {
            let clauses: Vec<ClauseResult> =
                o.clauses.iter().map(|(id, v)| clause(id, v)).collect();
            let mut hypotheses = o.hypotheses;
            for (id, v) in &o.clauses {
                if let Verdict::NotApplicable(why) = v {
                    if let Some(h) = hypotheses.iter_mut().find(|h| &h.clause == id) {
                        h.note = format!("{}; {why}", h.note);
                        continue;
                    }
                    hypotheses.push(Hypothesis {
                        clause: id.clone(),
                        holds: false,
                        note: why.clone(),
                    });
                }
            }
            let status = if clauses.iter().any(|c| c.status == Status::Fail) {
                Status::Fail
            } else if !clauses.is_empty()
                && clauses.iter().all(|c| c.status == Status::NotApplicable)
            {
                Status::NotApplicable
            } else {
                Status::Pass
            };
            (status, o.summary, clauses, hypotheses)
        }
        Err(stop) => {
            let (status, note) = match stop {
                Stop::Bound(n) => (Status::SkippedBound, n),
                Stop::NotApplicable(n) => (Status::NotApplicable, n),
                Stop::Error(n) => (Status::Fail, n),
            };
            let c = ClauseResult {
                id: "precondition".into(),
                status,
                witness: None,
                note: Some(note.clone()),
            };
            let hyps = if status == Status::NotApplicable {
                vec![Hypothesis {
                    clause: "precondition".into(),
                    holds: false,
                    note: note.clone(),
                }]
            } else {
                Vec::new()
            };
            (status, note, vec![c], hyps)
        }
    };
    CheckResult {
        name: check.name.clone(),
        law: check.law.id().to_string(),
        status,
        summary,
        clauses,
        hypotheses,
    }
}

fn clause(id: &str, v: &Verdict) -> ClauseResult {
    let (status, witness, note) = match v {
        Verdict::Holds => (Status::Pass, None, None),
        Verdict::Fails(w) => (
            Status::Fail,
            Some(Witness {
                atoms: w.atoms.clone(),
                detail: w.detail.clone(),
            }),
            None,
        ),
        Verdict::NotApplicable(why) => (Status::NotApplicable, None, Some(why.clone())),
    };
    ClauseResult {
        id: id.to_string(),
        status,
        witness,
        note,
    }
}

/// Declared carriers the check touches, with their sizes.
fn carriers(model: &Model, name: &str) -> Vec<(String, usize)> {
    match model.get(name) {
        Some(Object::Set(s)) => vec![(s.name().to_string(), s.len())],
        Some(Object::Ineq(s)) => vec![(s.name().to_string(), s.len())],
        Some(Object::Functions(f)) => vec![(f.name().to_string(), f.len())],
        Some(Object::Map { from, to, .. }) => {
            [from, to].iter().flat_map(|n| carriers(model, n)).collect()
        }
        Some(Object::Indexed(i)) => std::iter::once(&i.sets.index)
            .chain(&i.sets.fibers)
            .map(|s| (s.name().to_string(), s.len()))
            .collect(),
        _ => Vec::new(),
    }
}

fn oversized(model: &Model, check: &CheckDecl, bounds: &Bounds) -> Option<String> {
    let names = check.params.iter().flat_map(|(_, v)| match v {
        ParamValue::Name(n) => vec![n.clone()],
        ParamValue::Names(ns) => ns.clone(),
        ParamValue::Pairs(ps) => ps
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect(),
        ParamValue::Rats(_) => Vec::new(),
    });
    names
        .flat_map(|n| carriers(model, &n))
        .find(|(_, len)| *len > bounds.max_atoms)
        .map(|(n, len)| {
            format!(
                "`{n}` has {len} atoms, above max-atoms {}",
                bounds.max_atoms
            )
        })
}

fn name<'a>(check: &'a CheckDecl, key: &str) -> Result<&'a str, Stop> {
    match check.param(key) {
        Some(ParamValue::Name(n)) => Ok(n),
        _ => Err(Stop::Error(format!("missing parameter `{key}`"))),
    }
}

fn pairs<'a>(check: &'a CheckDecl, key: &str) -> &'a [(String, String)] {
    match check.param(key) {
        Some(ParamValue::Pairs(ps)) => ps,
        _ => &[],
    }
}

/// The completely separated set `(X, ≠_(X,F); F)` of a separating family.
fn cs_of(fs: &FunctionSpace<Rat>) -> Result<ComplSep<Rat>, Stop> {
    ComplSep::induced_by(fs.carrier().clone(), fs.family().clone()).map_err(|e| {
        Stop::NotApplicable(format!(
            "`{}` is not completely separated by its family: {e}",
            fs.name()
        ))
    })
}

fn verdict_counts(clauses: &[(String, Verdict)]) -> String {
    let pass = clauses.iter().filter(|(_, v)| v.holds()).count();
    let na = clauses
        .iter()
        .filter(|(_, v)| v.is_not_applicable())
        .count();
    let fail = clauses.len() - pass - na;
    format!(
        "{} clauses: {pass} pass, {fail} fail, {na} not-applicable",
        clauses.len()
    )
}

fn with_counts(clauses: Vec<(String, Verdict)>) -> Outcome {
    let s = verdict_counts(&clauses);
    Outcome::new(clauses, s)
}

fn dispatch(model: &Model, check: &CheckDecl, bounds: &Bounds) -> Result<Outcome, Stop> {
    let set = |k: &str| -> Result<&FinSetoid, Stop> { Ok(model.set(name(check, k)?)?) };
    let ineq = |k: &str| Ok::<_, Stop>(model.ineq(name(check, k)?)?);
    let space = |k: &str| Ok::<_, Stop>(model.functions(name(check, k)?)?);
    let indexed = |k: &str| Ok::<_, Stop>(model.indexed(name(check, k)?)?);
    let cs_family = |k: &str| {
        indexed(k)?.cs.as_ref().ok_or_else(|| {
            Stop::Error(format!(
                "`{}` is not a cs family",
                name(check, k).unwrap_or(k)
            ))
        })
    };
    let global = |k: &str| {
        indexed(k)?.global.as_ref().ok_or_else(|| {
            Stop::Error(format!(
                "`{}` is not a global family",
                name(check, k).unwrap_or(k)
            ))
        })
    };

    Ok(match check.law {
        LawId::IneqAxioms => {
            let s = ineq("set")?;
            let required: Vec<String> = match check.param("require") {
                Some(ParamValue::Names(ns)) => ns.clone(),
                _ => vec!["Ineq1".to_string()],
            };
            let report = check_ineq_axioms(s);
            let clauses = report
                .verdicts()
                .into_iter()
                .map(|(id, v)| {
                    let v = match v {
                        Verdict::Fails(w) if !required.iter().any(|r| r == id) => {
                            Verdict::NotApplicable(format!(
                                "not required; fails at ({}): {}",
                                w.atoms.join(", "),
                                w.detail
                            ))
                        }
                        other => other.clone(),
                    };
                    (id.to_string(), v)
                })
                .collect();
            let holding: Vec<&str> = AXIOM_IDS
                .iter()
                .zip(report.verdicts())
                .filter(|(_, (_, v))| v.holds())
                .map(|(id, _)| *id)
                .collect();
            Outcome::new(
                clauses,
                format!(
                    "requires {}; holds: {}",
                    required.join(" "),
                    holding.join(" ")
                ),
            )
        }
        LawId::F1 => {
            let r = f1_report(ineq("set")?, space("family")?.family())?;
            let clauses: Vec<(String, Verdict)> = r
                .clauses
                .into_iter()
                .map(|(id, v)| (id.to_string(), v))
                .collect();
            with_counts(clauses)
        }
        LawId::Monotonicity => {
            let (small, large) = (space("small")?, space("large")?);
            if small.name() != large.name() {
                return Err(Stop::Error(format!(
                    "`{}` and `{}` live on different sets",
                    name(check, "small")?,
                    name(check, "large")?
                )));
            }
            let r = monotonicity_check(small.carrier(), small.family(), large.family())?;
            with_counts(
                r.clauses()
                    .into_iter()
                    .map(|(id, v)| (id.to_string(), v.clone()))
                    .collect(),
            )
        }
        LawId::Complsep => {
            let v = check_complsep(ineq("set")?, space("family")?.family())?;
            Outcome::single(
                "complsep",
                v,
                "inequality coincides with the induced one and the family separates",
            )
        }
        LawId::Affine => {
            let (h_name, (from, to)) = (name(check, "map")?, (space("from")?, space("to")?));
            let (dom, cod, h) = model.map(h_name)?;
            if dom != from.name() || cod != to.name() {
                return Err(Stop::Error(format!(
                    "`{h_name}` maps `{dom}` to `{cod}`, not `{}` to `{}`",
                    from.name(),
                    to.name()
                )));
            }
            let v = is_affine_between(h, from.carrier(), from.family(), to.carrier(), to.family())?;
            Outcome::single(
                "affine",
                v,
                format!("g ∘ {h_name} ∈ {} for every g", name(check, "from")?),
            )
        }
        LawId::Family => {
            let i = indexed("family")?;
            let r = if i.kind == FamilyKind::Global {
                validate_global_set_family(&i.sets)?
            } else {
                validate_family(&i.sets)?
            };
            Outcome::from_report(r, format!("{} fibers", i.sets.fibers.len()))
        }
        LawId::SigmaApartness => {
            with_counts(sigma_apartness_report(&indexed("family")?.sets)?.clauses)
        }
        LawId::CsFamily => with_counts(validate_cs_family(cs_family("family")?)?.clauses),
        LawId::PiCs => {
            let p = pi_cs(cs_family("family")?, bounds)?;
            Outcome::single(
                "complsep",
                Verdict::Holds,
                format!(
                    "Pi-set with {} tables and {} members",
                    p.cs.len(),
                    p.cs.family().len()
                ),
            )
        }
        LawId::Fcl3 => {
            let r = fcl3_check(cs_family("family")?, bounds)?;
            let note = match &r.unextended {
                None => "every fiber member extends to a dependent function".to_string(),
                Some((j, h)) => format!("`{h}` over `{j}` extends to no dependent function"),
            };
            let hyp = r.hypothesis;
            let summary = format!("{} dependent functions", r.dependent_functions);
            Outcome::from_report(r.clauses(), summary).hypothesis("ii", hyp, note)
        }
        LawId::GlobalFamily => with_counts(validate_global_family(global("family")?)?.clauses),
        LawId::SigmaGlobal => {
            let r = sigma_global_check(global("family")?, bounds)?;
            let summary = format!(
                "Sigma-set of {} pairs, {} members",
                r.sigma.set.len(),
                r.family.len()
            );
            Outcome::from_report(r.clauses(), summary)
        }
        LawId::DepSe => {
            let g = global("family")?;
            let pi = pi_set(&g.sets, bounds)?;
            let verdicts = pi
                .tables
                .iter()
                .map(|t| dep_strongly_extensional(t, &g.sets))
                .collect::<Result<Vec<_>, _>>()?;
            Outcome::single(
                "strongly-extensional",
                Verdict::all(verdicts),
                format!("{} dependent functions", pi.tables.len()),
            )
        }
        LawId::Pr2 => {
            with_counts(second_projection_check(&global("family")?.sets, bounds)?.clauses)
        }
        LawId::Free => {
            let x = set("set")?;
            let y = cs_of(space("target")?)?;
            with_counts(free_universal_check(x, &y, bounds)?.clauses)
        }
        LawId::FreeAdjunction => {
            let x = set("set")?;
            let y = cs_of(space("target")?)?;
            let mut phis = Vec::new();
            if let Some(ParamValue::Names(ns)) = check.param("phis") {
                for n in ns {
                    let (from, to, m) = model.map(n)?;
                    if to != x.name() {
                        return Err(Stop::Error(format!(
                            "`{n}` maps into `{to}`, not `{}`",
                            x.name()
                        )));
                    }
                    phis.push((model.set(from)?.clone(), m.clone()));
                }
            } else {
                phis.push((x.clone(), SetMap::identity(x.len()).with_label("id")));
            }
            let mut thetas = Vec::new();
            for (m, q) in pairs(check, "thetas") {
                let (from, _, t) = model.map(m)?;
                if from != y.name() {
                    return Err(Stop::Error(format!(
                        "`{m}` starts at `{from}`, not `{}`",
                        y.name()
                    )));
                }
                thetas.push((cs_of(model.functions(q)?)?, t.clone()));
            }
            if thetas.is_empty() {
                thetas.push((y.clone(), SetMap::identity(y.len()).with_label("id")));
            }
            let r = free_adjunction_check(x, &y, &phis, &thetas, bounds)?;
            let summary = format!(
                "|Hom(εX, Y)| = {} = |Hom(X, Frg Y)| = {}",
                r.left_size, r.right_size
            );
            Outcome::from_report(r.clauses(), summary)
        }
        LawId::Rho => with_counts(rho_check(space("space")?)?.clauses),
        LawId::RhoAdjunction => {
            let (a, b) = (space("space")?, space("target")?);
            let mut phis = Vec::new();
            for (m, p) in pairs(check, "phis") {
                let (_, to, h) = model.map(m)?;
                if to != a.name() {
                    return Err(Stop::Error(format!(
                        "`{m}` maps into `{to}`, not `{}`",
                        a.name()
                    )));
                }
                phis.push((model.functions(p)?.clone(), h.clone()));
            }
            if phis.is_empty() {
                phis.push((a.clone(), SetMap::identity(a.len()).with_label("id")));
            }
            let mut thetas = Vec::new();
            for (m, q) in pairs(check, "thetas") {
                let (from, _, h) = model.map(m)?;
                if from != b.name() {
                    return Err(Stop::Error(format!(
                        "`{m}` starts at `{from}`, not `{}`",
                        b.name()
                    )));
                }
                thetas.push((model.functions(q)?.clone(), h.clone()));
            }
            if thetas.is_empty() {
                thetas.push((b.clone(), SetMap::identity(b.len()).with_label("id")));
            }
            let r = rho_adjunction_check(a, b, &phis, &thetas, bounds)?;
            with_counts(r.clauses().clauses)
        }
        LawId::RhoProduct => {
            let v = rho_product_check(space("left")?, space("right")?, bounds)?;
            Outcome::single("product", v, "ρ(X × Y) against ρX × ρY")
        }
        LawId::Dual => {
            let fs = space("space")?;
            let d = dual_cs(fs)?;
            let v = bidual_check(fs)?;
            Outcome::new(
                vec![
                    ("dual-complsep".into(), Verdict::Holds),
                    ("bidual".into(), v),
                ],
                format!("dual has {} points", d.cs.len()),
            )
        }
        LawId::HomFamily => {
            let m = hom_family_m(ineq("set")?, &indexed("family")?.sets, bounds)?;
            let sizes: Vec<String> = m
                .family
                .fibers
                .iter()
                .map(|f| f.len().to_string())
                .collect();
            Outcome::from_report(
                validate_family(&m.family)?,
                format!("fiber sizes {}", sizes.join(" ")),
            )
        }
        LawId::Embed => {
            let x = ineq("set")?;
            let lam = &indexed("family")?.sets;
            let m = hom_family_m(x, lam, bounds)?;
            let given = pairs(check, "h");
            let mut table = Vec::new();
            for i in 0..lam.index.len() {
                let atom = lam.index.atom(i);
                let (_, map_name) = given.iter().find(|(a, _)| a == atom).ok_or_else(|| {
                    Stop::Error(format!("`h` has no map for index atom `{atom}`"))
                })?;
                let (from, to, h) = model.map(map_name)?;
                if from != x.name() || to != lam.fibers[i].name() {
                    return Err(Stop::Error(format!(
                        "`{map_name}` maps `{from}` to `{to}`, expected `{}` to `{}`",
                        x.name(),
                        lam.fibers[i].name()
                    )));
                }
                let k = m.tables[i]
                    .iter()
                    .position(|t| t.pointwise_eq(h, lam.fibers[i].base()))
                    .ok_or_else(|| Stop::Error(format!("`{map_name}` is not a function")))?;
                table.push(k);
            }
            if let Some((a, _)) = given
                .iter()
                .find(|(a, _)| lam.index.base().index_of(a).is_none())
            {
                return Err(Stop::Error(format!("`{a}` is not an index atom")));
            }
            let e = embed_eh(x, lam, &m, &DepTable(table), bounds)?;
            with_counts(e.report.clauses)
        }
        LawId::RPower => {
            let fs = space("space")?;
            let values = match check.param("values") {
                Some(ParamValue::Rats(v)) => Some(v.as_slice()),
                _ => None,
            };
            let p = r_power(fs.family(), values, bounds)?;
            let v = check_complsep(p.cs.set(), p.cs.family())?;
            let universe: Vec<String> = p.values.iter().map(|v| v.to_string()).collect();
            Outcome::single(
                "complsep",
                v,
                format!("{} points over V = {{{}}}", p.cs.len(), universe.join(", ")),
            )
        }
        LawId::Tychonoff => {
            let fs = space("space")?;
            let r = tychonoff_check(fs, bounds)?;
            let summary = format!(
                "separating {}, injective {}, {} affine candidates searched, {} injective",
                r.separating, r.injective, r.searched, r.found
            );
            let sep = r.separating;
            Outcome::from_report(r.clauses(), summary).hypothesis("i", sep, "F separates points")
        }
    })
}
