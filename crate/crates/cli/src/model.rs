//! Core objects built from a document.

use std::collections::{BTreeMap, HashMap};

use sepset_core::families::{CsFamily, GlobalFamily, SetFamily};
use sepset_core::induced::induce;
use sepset_core::kernel::{validate_function, validate_real_fn};
use sepset_core::universal::FunctionSpace;
use sepset_core::{FinSetoid, FnFamily, IneqSet, Rat, RealFn, SetMap, Verdict};

use crate::document::{FamilyBody, FamilyKind, FnBody, Item, NeqSpec, SpecDocument};

#[derive(Debug, Clone)]
pub enum Object {
    Set(FinSetoid),
    Ineq(IneqSet),
    RealFn {
        on: String,
        f: RealFn<Rat>,
    },
    Map {
        from: String,
        to: String,
        map: SetMap,
    },
    Functions(FunctionSpace<Rat>),
    Indexed(Box<Indexed>),
    Check,
}

#[derive(Debug, Clone)]
pub struct Indexed {
    pub kind: FamilyKind,
    pub sets: SetFamily,
    pub cs: Option<CsFamily<Rat>>,
    pub global: Option<GlobalFamily<Rat>>,
}

impl Object {
    pub fn describe(&self) -> &'static str {
        match self {
            Object::Set(_) => "set",
            Object::Ineq(_) => "ineq",
            Object::RealFn { .. } => "real-valued fn",
            Object::Map { .. } => "map",
            Object::Functions(_) => "function family",
            Object::Indexed(i) => match i.kind {
                FamilyKind::Sets => "family of sets",
                FamilyKind::Cs => "cs family",
                FamilyKind::Global => "global family",
                FamilyKind::Functions => "function family",
            },
            Object::Check => "check",
        }
    }
}

/// Every declared object by name.
#[derive(Debug, Clone, Default)]
pub struct Model {
    objects: HashMap<String, Object>,
}

type Built<T> = Result<T, String>;

impl Model {
    pub fn build(doc: &SpecDocument) -> Built<Model> {
        let mut m = Model::default();
        for item in &doc.items {
            m.add(item).map_err(|e| format!("`{}`: {e}", item.name()))?;
        }
        Ok(m)
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.get(name)
    }

    fn object(&self, name: &str) -> Built<&Object> {
        self.objects
            .get(name)
            .ok_or_else(|| format!("undeclared name `{name}`"))
    }

    pub fn set(&self, name: &str) -> Built<&FinSetoid> {
        match self.object(name)? {
            Object::Set(s) => Ok(s),
            other => Err(format!("`{name}` is a {}, not a set", other.describe())),
        }
    }

    pub fn ineq(&self, name: &str) -> Built<&IneqSet> {
        match self.object(name)? {
            Object::Ineq(s) => Ok(s),
            other => Err(format!("`{name}` is a {}, not an ineq", other.describe())),
        }
    }

    pub fn real_fn(&self, name: &str) -> Built<(&str, &RealFn<Rat>)> {
        match self.object(name)? {
            Object::RealFn { on, f } => Ok((on, f)),
            other => Err(format!(
                "`{name}` is a {}, not a real-valued fn",
                other.describe()
            )),
        }
    }

    /// `(from, to, map)`
    pub fn map(&self, name: &str) -> Built<(&str, &str, &SetMap)> {
        match self.object(name)? {
            Object::Map { from, to, map } => Ok((from, to, map)),
            other => Err(format!("`{name}` is a {}, not a map", other.describe())),
        }
    }

    pub fn functions(&self, name: &str) -> Built<&FunctionSpace<Rat>> {
        match self.object(name)? {
            Object::Functions(f) => Ok(f),
            other => Err(format!(
                "`{name}` is a {}, not a function family",
                other.describe()
            )),
        }
    }

    pub fn indexed(&self, name: &str) -> Built<&Indexed> {
        match self.object(name)? {
            Object::Indexed(f) => Ok(f),
            other => Err(format!(
                "`{name}` is a {}, not an indexed family",
                other.describe()
            )),
        }
    }

    pub fn add(&mut self, item: &Item) -> Built<()> {
        if self.objects.contains_key(item.name()) {
            return Err("declared twice".into());
        }
        let obj = match item {
            Item::Set(d) => {
                let set = match &d.blocks {
                    None => FinSetoid::discrete(d.name.clone(), d.atoms.iter().cloned()),
                    Some(blocks) => {
                        FinSetoid::new(d.name.clone(), d.atoms.iter().cloned(), blocks.iter())
                    }
                };
                Object::Set(set.map_err(|e| e.to_string())?)
            }
            Item::Ineq(d) => {
                let base = self.set(&d.set)?.clone();
                let set = match &d.neq {
                    NeqSpec::Pairs(ps) => {
                        IneqSet::from_pairs(base, ps.iter().map(|(a, b)| (a.as_str(), b.as_str())))
                            .map_err(|e| e.to_string())?
                    }
                    NeqSpec::CrossBlock => IneqSet::cross_block(base),
                    NeqSpec::InducedBy(fam) => {
                        let fs = self.functions(fam)?;
                        if fs.name() != d.set {
                            return Err(format!(
                                "`{fam}` lives on `{}`, not on `{}`",
                                fs.name(),
                                d.set
                            ));
                        }
                        induce(&base, fs.family())
                            .map_err(|e| e.to_string())?
                            .on_declared()
                    }
                };
                Object::Ineq(set)
            }
            Item::Fn(d) => match &d.body {
                FnBody::Real { on, values } => {
                    let dom = self.set(on)?;
                    let f = RealFn::from_entries(
                        dom,
                        d.name.clone(),
                        values.iter().map(|(a, v)| (a.as_str(), *v)),
                    )
                    .map_err(|e| e.to_string())?;
                    if let Verdict::Fails(v) =
                        validate_real_fn(dom, &f).map_err(|e| e.to_string())?
                    {
                        return Err(format!("not a function on `{on}`: {v}"));
                    }
                    Object::RealFn { on: on.clone(), f }
                }
                FnBody::Map { from, to, images } => {
                    let (dom, cod) = (self.set(from)?, self.set(to)?);
                    let map = SetMap::from_entries(
                        dom,
                        cod,
                        d.name.clone(),
                        images.iter().map(|(a, b)| (a.as_str(), b.as_str())),
                    )
                    .map_err(|e| e.to_string())?;
                    if let Verdict::Fails(v) =
                        validate_function(dom, cod, &map).map_err(|e| e.to_string())?
                    {
                        return Err(format!("not a function from `{from}` to `{to}`: {v}"));
                    }
                    Object::Map {
                        from: from.clone(),
                        to: to.clone(),
                        map,
                    }
                }
            },
            Item::Family(d) => match &d.body {
                FamilyBody::Functions { on, members } => {
                    let carrier = self.set(on)?.clone();
                    let mut list = Vec::new();
                    for m in members {
                        let (dom, f) = self.real_fn(m)?;
                        if dom != on {
                            return Err(format!("member `{m}` lives on `{dom}`, not on `{on}`"));
                        }
                        list.push(f.clone());
                    }
                    let family = FnFamily::new(carrier.clone(), list).map_err(|e| e.to_string())?;
                    Object::Functions(
                        FunctionSpace::new(carrier, family).map_err(|e| e.to_string())?,
                    )
                }
                FamilyBody::Indexed {
                    kind,
                    index,
                    index_family,
                    fibers,
                    fiber_families,
                    transports,
                } => Object::Indexed(Box::new(self.indexed_family(
                    *kind,
                    index,
                    index_family.as_deref(),
                    fibers,
                    fiber_families,
                    transports,
                )?)),
            },
            Item::Check(_) => Object::Check,
        };
        self.objects.insert(item.name().to_string(), obj);
        Ok(())
    }

    /// Looks up `entries` by index atom, requiring each atom exactly once.
    fn per_index<'a>(
        &self,
        index: &IneqSet,
        entries: &'a [(String, String)],
        what: &str,
    ) -> Built<Vec<&'a str>> {
        let mut out: Vec<Option<&str>> = vec![None; index.len()];
        for (atom, name) in entries {
            let i = index.base().index_of(atom).ok_or_else(|| {
                format!("`{atom}` is not an atom of the index `{}`", index.name())
            })?;
            if out[i].replace(name).is_some() {
                return Err(format!("{what} for `{atom}` given twice"));
            }
        }
        out.into_iter()
            .enumerate()
            .map(|(i, n)| n.ok_or_else(|| format!("no {what} for index atom `{}`", index.atom(i))))
            .collect()
    }

    fn indexed_family(
        &self,
        kind: FamilyKind,
        index: &str,
        index_family: Option<&str>,
        fibers: &[(String, String)],
        fiber_families: &[(String, String)],
        transports: &[(String, String, String)],
    ) -> Built<Indexed> {
        let index_set = self.ineq(index)?.clone();
        let fiber_names = self.per_index(&index_set, fibers, "fiber")?;
        let fiber_sets: Vec<IneqSet> = fiber_names
            .iter()
            .map(|n| self.ineq(n).cloned())
            .collect::<Built<_>>()?;
        let mut table = BTreeMap::new();
        for (i, j, m) in transports {
            let pos = |a: &str| {
                index_set
                    .base()
                    .index_of(a)
                    .ok_or_else(|| format!("`{a}` is not an atom of the index `{index}`"))
            };
            let (i, j) = (pos(i)?, pos(j)?);
            let (from, to, map) = self.map(m)?;
            if from != fiber_sets[i].name() || to != fiber_sets[j].name() {
                return Err(format!(
                    "transport `{m}` maps `{from}` to `{to}`, expected `{}` to `{}`",
                    fiber_sets[i].name(),
                    fiber_sets[j].name()
                ));
            }
            if table.insert((i, j), map.clone()).is_some() {
                return Err(format!(
                    "two transports for ({}, {})",
                    index_set.atom(i),
                    index_set.atom(j)
                ));
            }
        }
        for (i, fiber) in fiber_sets.iter().enumerate() {
            table
                .entry((i, i))
                .or_insert_with(|| SetMap::identity(fiber.len()).with_label("id"));
        }
        let sets =
            SetFamily::new(index_set.clone(), fiber_sets, table).map_err(|e| e.to_string())?;
        if kind == FamilyKind::Sets {
            return Ok(Indexed {
                kind,
                sets,
                cs: None,
                global: None,
            });
        }
        let k = index_family.ok_or("a cs or global family needs `index-family`")?;
        let kf = self.functions(k)?;
        if kf.name() != index_set.name() {
            return Err(format!(
                "index family `{k}` lives on `{}`, not on `{}`",
                kf.name(),
                index_set.name()
            ));
        }
        let fam_names = self.per_index(&index_set, fiber_families, "fiber family")?;
        let mut families = Vec::new();
        for (i, n) in fam_names.iter().enumerate() {
            let f = self.functions(n)?;
            if f.name() != sets.fibers[i].name() {
                return Err(format!(
                    "fiber family `{n}` lives on `{}`, not on `{}`",
                    f.name(),
                    sets.fibers[i].name()
                ));
            }
            families.push(f.family().clone());
        }
        let index_fam = kf.family().clone();
        if kind == FamilyKind::Global {
            let g = GlobalFamily::from_transports(sets.clone(), index_fam, families)
                .map_err(|e| e.to_string())?;
            Ok(Indexed {
                kind,
                sets,
                cs: Some(g.family().clone()),
                global: Some(g),
            })
        } else {
            let c = CsFamily::from_transports(sets.clone(), index_fam, families)
                .map_err(|e| e.to_string())?;
            Ok(Indexed {
                kind,
                sets,
                cs: Some(c),
                global: None,
            })
        }
    }
}
