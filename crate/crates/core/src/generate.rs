//! Random instances for the law sweeps.
//!
//! Every generator takes the random source explicitly, so a seeded
//! generator reproduces the same instances. Function values are drawn from
//! a small palette of rationals per instance, which makes coincidences (and
//! hence non-separating families) common.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complsep::{is_affine_between, ComplSep};
use crate::families::{diagonal, CsFamily, GlobalFamily, SetFamily};
use crate::kernel::{is_strongly_extensional, validate_function};
use crate::universal::{rho, FunctionSpace};
use crate::{FinSetoid, FnFamily, IneqSet, Rat, RealFn, Relation, Result, SetMap};

/// Size limits for generated instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    pub max_atoms: usize,
    pub max_members: usize,
    /// Largest denominator of a generated rational.
    pub max_den: i64,
    /// Distinct values available to one instance.
    pub palette: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_atoms: 8,
            max_members: 5,
            max_den: 16,
            palette: 3,
        }
    }
}

impl GenConfig {
    pub fn small(max_atoms: usize, max_members: usize) -> Self {
        GenConfig {
            max_atoms,
            max_members,
            ..GenConfig::default()
        }
    }
}

/// A rational in `[-2, 2]` with denominator at most `max_den`.
pub fn random_rat(rng: &mut impl Rng, max_den: i64) -> Rat {
    let den = rng.gen_range(1..=max_den.max(1));
    let num = rng.gen_range(-2 * den..=2 * den);
    Rat::new(num, den)
}

pub fn random_palette(rng: &mut impl Rng, cfg: &GenConfig) -> Vec<Rat> {
    (0..cfg.palette.max(1))
        .map(|_| random_rat(rng, cfg.max_den))
        .collect()
}

fn atom_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// `n` atoms under a uniformly random block assignment.
pub fn random_setoid(rng: &mut impl Rng, name: &str, n: usize) -> FinSetoid {
    let blocks = if n == 0 { 1 } else { rng.gen_range(1..=n) };
    let ids: Vec<usize> = (0..n).map(|_| rng.gen_range(0..blocks)).collect();
    let prefix = name.to_lowercase();
    FinSetoid::from_block_ids(name, atom_names(&prefix, n), &ids).expect("fresh atom names")
}

/// Members constant on the blocks of `x`, valued in `palette`.
pub fn random_family(
    rng: &mut impl Rng,
    x: &FinSetoid,
    members: usize,
    palette: &[Rat],
) -> FnFamily<Rat> {
    let list = (0..members)
        .map(|k| {
            let per_block: Vec<Rat> = (0..x.block_count())
                .map(|_| *palette.choose(rng).expect("nonempty palette"))
                .collect();
            let values = (0..x.len()).map(|a| per_block[x.block_of(a)]).collect();
            RealFn::new(format!("f{k}"), values)
        })
        .collect();
    FnFamily::new(x.clone(), list).expect("members live on the carrier")
}

pub fn random_function_space(rng: &mut impl Rng, cfg: &GenConfig) -> FunctionSpace<Rat> {
    let n = rng.gen_range(1..=cfg.max_atoms.max(1));
    let x = random_setoid(rng, "X", n);
    let palette = random_palette(rng, cfg);
    let k = rng.gen_range(0..=cfg.max_members);
    let family = random_family(rng, &x, k, &palette);
    FunctionSpace::new(x, family).expect("block-constant members are functions")
}

/// A completely separated set: a random function space reflected.
pub fn random_complsep(rng: &mut impl Rng, name: &str, cfg: &GenConfig) -> ComplSep<Rat> {
    let fs = random_function_space(rng, cfg);
    let cs = rho(&fs).expect("reflection of a function space").cs;
    let (set, family) = cs.into_parts();
    let carrier = set.base().clone().renamed(name);
    let set = IneqSet::new(carrier.clone(), set.neq_relation().clone()).expect("same size");
    let family = family.retyped(carrier).expect("same atoms");
    crate::complsep::validate_complsep(set, family).expect("reflection is completely separated")
}

/// A set with an inequality of varied quality: cross-block, induced by a
/// random family, a random symmetric part of cross-block, or an arbitrary
/// relation.
pub fn random_ineq_set(rng: &mut impl Rng, name: &str, n: usize) -> IneqSet {
    let base = random_setoid(rng, name, n);
    match rng.gen_range(0..8) {
        0..=2 => IneqSet::cross_block(base),
        3..=4 => {
            let palette = random_palette(rng, &GenConfig::default());
            let k = rng.gen_range(0..=3);
            let fam = random_family(rng, &base, k, &palette);
            crate::induced::induce(&base, &fam)
                .expect("family on base")
                .on_declared()
        }
        5..=6 => {
            let mut neq = Relation::empty(n);
            for i in 0..n {
                for j in i + 1..n {
                    if !base.eq(i, j) && rng.gen_bool(0.6) {
                        neq.insert(i, j);
                        neq.insert(j, i);
                    }
                }
            }
            IneqSet::new(base, neq).expect("size matches")
        }
        _ => {
            let neq = Relation::from_fn(n, |_, _| rng.gen_bool(0.3));
            IneqSet::new(base, neq).expect("size matches")
        }
    }
}

/// A random function `x → y` (constant on the blocks of `x`).
pub fn random_function(rng: &mut impl Rng, label: &str, x: &FinSetoid, y: &FinSetoid) -> SetMap {
    let per_block: Vec<usize> = (0..x.block_count())
        .map(|_| rng.gen_range(0..y.len()))
        .collect();
    SetMap::new(
        label,
        (0..x.len()).map(|a| per_block[x.block_of(a)]).collect(),
    )
}

/// A copy of `set` with its atoms listed in the order `perm` and renamed
/// with `tag`, plus the maps `set → copy` and `copy → set`.
fn permuted_copy(
    set: &IneqSet,
    name: &str,
    tag: &str,
    perm: &[usize],
) -> (IneqSet, SetMap, SetMap) {
    let n = set.len();
    let atoms: Vec<String> = perm
        .iter()
        .map(|&p| format!("{}{tag}", set.atom(p)))
        .collect();
    let ids: Vec<usize> = perm.iter().map(|&p| set.base().block_of(p)).collect();
    let base = FinSetoid::from_block_ids(name, atoms, &ids).expect("renamed atoms are distinct");
    let copy = IneqSet::from_fn(base, |a, b| set.neq(perm[a], perm[b]));
    let mut to_copy = vec![0; n];
    for (k, &p) in perm.iter().enumerate() {
        to_copy[p] = k;
    }
    (
        copy,
        SetMap::new("in", to_copy),
        SetMap::new("out", perm.to_vec()),
    )
}

fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Copies of one base per index block, with `into[i] : base → fiber_i` and
/// `out[i] : fiber_i → base`.
struct Copies {
    fibers: Vec<IneqSet>,
    into: Vec<SetMap>,
    out: Vec<SetMap>,
    base_of: Vec<usize>,
}

fn copies(
    rng: &mut impl Rng,
    index: &IneqSet,
    bases: &[IneqSet],
    base_of_block: &[usize],
) -> Copies {
    let mut c = Copies {
        fibers: Vec::new(),
        into: Vec::new(),
        out: Vec::new(),
        base_of: Vec::new(),
    };
    for i in 0..index.len() {
        let b = base_of_block[index.base().block_of(i)];
        let perm = random_perm(rng, bases[b].len());
        let (fiber, into, out) = permuted_copy(
            &bases[b],
            &format!("L{}", index.atom(i)),
            &format!("_{i}"),
            &perm,
        );
        c.fibers.push(fiber);
        c.into.push(into);
        c.out.push(out);
        c.base_of.push(b);
    }
    c
}

/// A local family of sets with an inequality: one random base per index
/// block, copied (with shuffled atoms) to every index in the block.
pub fn random_set_family(rng: &mut impl Rng, max_index: usize, max_fiber: usize) -> SetFamily {
    let n = rng.gen_range(1..=max_index.max(1));
    let index = random_ineq_set(rng, "I", n);
    let blocks = index.base().block_count();
    let bases: Vec<IneqSet> = (0..blocks)
        .map(|b| {
            let m = rng.gen_range(1..=max_fiber.max(1));
            random_ineq_set(rng, &format!("B{b}"), m)
        })
        .collect();
    let ids: Vec<usize> = (0..blocks).collect();
    let c = copies(rng, &index, &bases, &ids);
    let transports = diagonal(index.base())
        .into_iter()
        .map(|(i, j)| {
            let t = c.into[j].compose(&c.out[i]).with_label(format!(
                "λ_{}{}",
                index.atom(i),
                index.atom(j)
            ));
            ((i, j), t)
        })
        .collect();
    SetFamily::new(index, c.fibers, transports).expect("copies fit their transports")
}

fn transported_family(base: &FnFamily<Rat>, out: &SetMap, carrier: &FinSetoid) -> FnFamily<Rat> {
    let members = base
        .members()
        .iter()
        .map(|f| f.compose(out, f.label()))
        .collect();
    FnFamily::new(carrier.clone(), members).expect("copy has the base's size")
}

/// A local family of completely separated sets over a random completely
/// separated index.
pub fn random_cs_family(rng: &mut impl Rng, max_index: usize, cfg: &GenConfig) -> CsFamily<Rat> {
    let index_cfg = GenConfig::small(max_index, cfg.max_members);
    let index = random_complsep(rng, "I", &index_cfg);
    let blocks = index.carrier().block_count();
    let bases: Vec<ComplSep<Rat>> = (0..blocks)
        .map(|b| random_complsep(rng, &format!("B{b}"), cfg))
        .collect();
    let base_sets: Vec<IneqSet> = bases.iter().map(|b| b.set().clone()).collect();
    let ids: Vec<usize> = (0..blocks).collect();
    let c = copies(rng, index.set(), &base_sets, &ids);
    let families = (0..index.len())
        .map(|i| transported_family(bases[c.base_of[i]].family(), &c.out[i], c.fibers[i].base()))
        .collect();
    let transports = diagonal(index.carrier())
        .into_iter()
        .map(|(i, j)| {
            let t = c.into[j].compose(&c.out[i]).with_label(format!(
                "λ_{}{}",
                index.atom(i),
                index.atom(j)
            ));
            ((i, j), t)
        })
        .collect();
    let sets = SetFamily::new(index.set().clone(), c.fibers, transports).expect("copies fit");
    CsFamily::from_transports(sets, index.family().clone(), families)
        .expect("isomorphic copies are affine")
}

/// A random affine map between two completely separated sets, if one turns
/// up within a few tries.
fn find_affine(
    rng: &mut impl Rng,
    a: &ComplSep<Rat>,
    b: &ComplSep<Rat>,
    tries: usize,
) -> Option<SetMap> {
    for _ in 0..tries {
        let t = random_function(rng, "e", a.carrier(), b.carrier());
        let ok = validate_function(a.carrier(), b.carrier(), &t).is_ok_and(|v| v.holds())
            && is_affine_between(&t, a.carrier(), a.family(), b.carrier(), b.family())
                .is_ok_and(|v| v.holds());
        if ok {
            return Some(t);
        }
    }
    None
}

/// A global family of completely separated sets. Each index block gets a
/// base; the transports between blocks are random affine maps of the bases
/// (the identity when a single base is shared and no other map turns up).
pub fn random_global_family(
    rng: &mut impl Rng,
    max_index: usize,
    cfg: &GenConfig,
) -> GlobalFamily<Rat> {
    let index_cfg = GenConfig::small(max_index, cfg.max_members);
    let index = random_complsep(rng, "I", &index_cfg);
    let blocks = index.carrier().block_count();
    let mut bases: Vec<ComplSep<Rat>> = vec![random_complsep(rng, "B0", cfg)];
    let mut base_of_block = vec![0; blocks];
    let mut cross: BTreeMap<(usize, usize), SetMap> = BTreeMap::new();
    if blocks > 1 && rng.gen_bool(0.5) {
        let candidates: Vec<ComplSep<Rat>> = (0..blocks)
            .map(|b| random_complsep(rng, &format!("B{b}"), cfg))
            .collect();
        let mut found = BTreeMap::new();
        'search: for b in 0..blocks {
            for c in 0..blocks {
                if b == c {
                    continue;
                }
                match find_affine(rng, &candidates[b], &candidates[c], 40) {
                    Some(e) => {
                        found.insert((b, c), e);
                    }
                    None => {
                        found.clear();
                        break 'search;
                    }
                }
            }
        }
        if !found.is_empty() {
            bases = candidates;
            base_of_block = (0..blocks).collect();
            cross = found;
        }
    }
    if cross.is_empty() {
        for b in 0..blocks {
            for c in 0..blocks {
                if b != c {
                    let e = find_affine(rng, &bases[0], &bases[0], 10)
                        .unwrap_or_else(|| SetMap::identity(bases[0].len()));
                    cross.insert((b, c), e);
                }
            }
        }
    }
    let base_sets: Vec<IneqSet> = bases.iter().map(|b| b.set().clone()).collect();
    let c = copies(rng, index.set(), &base_sets, &base_of_block);
    let families = (0..index.len())
        .map(|i| transported_family(bases[c.base_of[i]].family(), &c.out[i], c.fibers[i].base()))
        .collect();
    let n = index.len();
    let block = |i: usize| index.carrier().block_of(i);
    let mut transports = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let t = if block(i) == block(j) {
                c.into[j].compose(&c.out[i])
            } else {
                c.into[j]
                    .compose(&cross[&(block(i), block(j))])
                    .compose(&c.out[i])
            };
            transports.insert(
                (i, j),
                t.with_label(format!("λ_{}{}", index.atom(i), index.atom(j))),
            );
        }
    }
    let sets = SetFamily::new(index.set().clone(), c.fibers, transports).expect("copies fit");
    GlobalFamily::from_transports(sets, index.family().clone(), families)
        .expect("affine transports give function transports")
}

/// A function `φ : X′ → X` from a fresh small setoid.
pub fn random_arrow_into(
    rng: &mut impl Rng,
    x: &FinSetoid,
    max_atoms: usize,
) -> (FinSetoid, SetMap) {
    let n = rng.gen_range(1..=max_atoms.max(1));
    let src = random_setoid(rng, "P", n);
    let phi = random_function(rng, "φ", &src, x);
    (src, phi)
}

/// A strongly extensional `θ : Y → Y′` into a fresh completely separated
/// set, falling back to a constant map.
pub fn random_se_arrow_from(
    rng: &mut impl Rng,
    y: &ComplSep<Rat>,
    cfg: &GenConfig,
) -> (ComplSep<Rat>, SetMap) {
    let target = random_complsep(rng, "Q", cfg);
    for _ in 0..20 {
        let t = random_function(rng, "θ", y.carrier(), target.carrier());
        if is_strongly_extensional(&t, y.set(), target.set()).is_ok_and(|v| v.holds()) {
            return (target, t);
        }
    }
    let t = SetMap::constant("θ", y.len(), 0);
    (target, t)
}

/// An affine `φ : (X′; F′) → (X; F)`: a random function with `F′` the
/// pullback of `F` plus a random extra member.
pub fn random_affine_into(
    rng: &mut impl Rng,
    x: &FunctionSpace<Rat>,
    cfg: &GenConfig,
) -> Result<(FunctionSpace<Rat>, SetMap)> {
    let n = rng.gen_range(1..=cfg.max_atoms.max(1));
    let src = random_setoid(rng, "P", n);
    let phi = random_function(rng, "φ", &src, x.carrier());
    let mut members: Vec<RealFn<Rat>> = x
        .family()
        .members()
        .iter()
        .map(|f| f.compose(&phi, format!("{}∘φ", f.label())))
        .collect();
    if rng.gen_bool(0.5) {
        let palette = random_palette(rng, cfg);
        members.extend(
            random_family(rng, &src, 1, &palette)
                .members()
                .iter()
                .map(|m| m.clone().with_label("p")),
        );
    }
    let family = FnFamily::new(src.clone(), members)?;
    Ok((FunctionSpace::new(src, family)?, phi))
}

/// An affine `θ : (Y; G) → (Y′; G′)`: `Y′` is a shuffled copy of `Y` with
/// one extra atom, and `G′` pushes a random subset of `G` forward.
pub fn random_affine_from(
    rng: &mut impl Rng,
    y: &FunctionSpace<Rat>,
) -> Result<(FunctionSpace<Rat>, SetMap)> {
    let n = y.len();
    let perm = random_perm(rng, n);
    let mut atoms: Vec<String> = perm
        .iter()
        .map(|&p| format!("{}'", y.carrier().atom(p)))
        .collect();
    let mut ids: Vec<usize> = perm.iter().map(|&p| y.carrier().block_of(p)).collect();
    atoms.push("new".to_string());
    ids.push(y.carrier().block_count());
    let target = FinSetoid::from_block_ids("Q", atoms, &ids)?;
    let mut to_copy = vec![0; n];
    for (k, &p) in perm.iter().enumerate() {
        to_copy[p] = k;
    }
    let theta = SetMap::new("θ", to_copy);
    let mut members = Vec::new();
    for g in y.family().members() {
        if rng.gen_bool(0.6) {
            let mut values: Vec<Rat> = perm.iter().map(|&p| *g.value(p)).collect();
            values.push(random_rat(rng, 16));
            members.push(RealFn::new(format!("{}'", g.label()), values));
        }
    }
    let family = FnFamily::new(target.clone(), members)?;
    Ok((FunctionSpace::new(target, family)?, theta))
}
