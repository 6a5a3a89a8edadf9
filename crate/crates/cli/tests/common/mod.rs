//! Random well-formed spec documents.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use sepset_cli::document::*;
use sepset_cli::LawId;
use sepset_core::generate::random_rat;
use sepset_core::Rat;

struct SetInfo {
    name: String,
    atoms: Vec<String>,
    blocks: Vec<Vec<String>>,
    ineqs: Vec<String>,
    families: Vec<String>,
    /// A family whose members tell every two blocks apart.
    separating: Option<String>,
}

struct Gen<'r, R: Rng> {
    rng: &'r mut R,
    doc: SpecDocument,
    sets: Vec<SetInfo>,
    maps: Vec<(String, usize, usize)>,
    indexed: Vec<(String, FamilyKind)>,
    counter: usize,
}

const ATOM_STYLES: [&str; 4] = ["a", "x_", "pt", "α"];

impl<R: Rng> Gen<'_, R> {
    fn fresh(&mut self, prefix: &str) -> String {
        self.counter += 1;
        format!("{prefix}{}", self.counter)
    }

    fn push(&mut self, item: Item) {
        self.doc.items.push(item);
    }

    fn add_set(&mut self, max_atoms: usize) -> usize {
        let name = self.fresh("S");
        let style = *ATOM_STYLES.choose(self.rng).unwrap();
        let n = self.rng.gen_range(1..=max_atoms);
        let atoms: Vec<String> = (0..n).map(|i| format!("{style}{i}")).collect();
        let (blocks, declared) = if self.rng.gen_bool(0.4) {
            (atoms.iter().map(|a| vec![a.clone()]).collect(), None)
        } else {
            let k = self.rng.gen_range(1..=n);
            let mut shuffled = atoms.clone();
            shuffled.shuffle(self.rng);
            let mut blocks: Vec<Vec<String>> = vec![Vec::new(); k];
            for (i, a) in shuffled.into_iter().enumerate() {
                let b = if i < k { i } else { self.rng.gen_range(0..k) };
                blocks[b].push(a);
            }
            (blocks.clone(), Some(blocks))
        };
        self.push(Item::Set(SetDecl {
            name: name.clone(),
            atoms: atoms.clone(),
            blocks: declared,
        }));
        self.sets.push(SetInfo {
            name,
            atoms,
            blocks,
            ineqs: Vec::new(),
            families: Vec::new(),
            separating: None,
        });
        self.sets.len() - 1
    }

    fn block_of(&self, s: usize, atom: &str) -> usize {
        self.sets[s]
            .blocks
            .iter()
            .position(|b| b.iter().any(|a| a == atom))
            .unwrap()
    }

    fn add_real_fn(&mut self, s: usize, per_block: Vec<Rat>) -> String {
        let name = self.fresh("f");
        let values = self.sets[s]
            .atoms
            .iter()
            .map(|a| (a.clone(), per_block[self.block_of(s, a)]))
            .collect();
        self.push(Item::Fn(FnDecl {
            name: name.clone(),
            body: FnBody::Real {
                on: self.sets[s].name.clone(),
                values,
            },
        }));
        name
    }

    fn add_functions(&mut self, s: usize) {
        let nb = self.sets[s].blocks.len();
        let count = self.rng.gen_range(1..=3);
        let mut members = Vec::new();
        for _ in 0..count {
            let per_block: Vec<Rat> = (0..nb).map(|_| random_rat(self.rng, 16)).collect();
            members.push(self.add_real_fn(s, per_block));
        }
        let name = self.fresh("F");
        self.push(Item::Family(FamilyDecl {
            name: name.clone(),
            body: FamilyBody::Functions {
                on: self.sets[s].name.clone(),
                members,
            },
        }));
        self.sets[s].families.push(name);
    }

    fn add_separating(&mut self, s: usize) -> String {
        if let Some(f) = &self.sets[s].separating {
            return f.clone();
        }
        let nb = self.sets[s].blocks.len();
        let id = self.add_real_fn(s, (0..nb as i64).map(Rat::from_integer).collect());
        let name = self.fresh("F");
        self.push(Item::Family(FamilyDecl {
            name: name.clone(),
            body: FamilyBody::Functions {
                on: self.sets[s].name.clone(),
                members: vec![id],
            },
        }));
        self.sets[s].families.push(name.clone());
        self.sets[s].separating = Some(name.clone());
        name
    }

    fn add_ineq(&mut self, s: usize, neq: NeqSpec) -> String {
        let name = self.fresh("N");
        self.push(Item::Ineq(IneqDecl {
            name: name.clone(),
            set: self.sets[s].name.clone(),
            neq,
        }));
        self.sets[s].ineqs.push(name.clone());
        name
    }

    fn add_random_ineq(&mut self, s: usize) {
        let neq = match self.rng.gen_range(0..3) {
            0 => NeqSpec::CrossBlock,
            1 if !self.sets[s].families.is_empty() => {
                NeqSpec::InducedBy(self.sets[s].families.choose(self.rng).unwrap().clone())
            }
            _ => {
                let atoms = &self.sets[s].atoms;
                let k = self.rng.gen_range(1..=4);
                let pairs = (0..k)
                    .map(|_| {
                        (
                            atoms.choose(self.rng).unwrap().clone(),
                            atoms.choose(self.rng).unwrap().clone(),
                        )
                    })
                    .collect();
                NeqSpec::Pairs(pairs)
            }
        };
        self.add_ineq(s, neq);
    }

    /// A map sending each block of `from` to one atom of `to`.
    fn add_map(&mut self, from: usize, to: usize) -> String {
        let name = self.fresh("h");
        let targets: Vec<String> = (0..self.sets[from].blocks.len())
            .map(|_| self.sets[to].atoms.choose(self.rng).unwrap().clone())
            .collect();
        let images = self.sets[from]
            .atoms
            .iter()
            .map(|a| (a.clone(), targets[self.block_of(from, a)].clone()))
            .collect();
        self.push(Item::Fn(FnDecl {
            name: name.clone(),
            body: FnBody::Map {
                from: self.sets[from].name.clone(),
                to: self.sets[to].name.clone(),
                images,
            },
        }));
        self.maps.push((name.clone(), from, to));
        name
    }

    /// A discrete index set, possibly with a separating family.
    fn add_indexed(&mut self, kind: FamilyKind) {
        let n = self.rng.gen_range(1..=3);
        let name = self.fresh("I");
        let atoms: Vec<String> = (0..n).map(|i| format!("i{i}")).collect();
        self.push(Item::Set(SetDecl {
            name: name.clone(),
            atoms: atoms.clone(),
            blocks: None,
        }));
        self.sets.push(SetInfo {
            name,
            atoms: atoms.clone(),
            blocks: atoms.iter().map(|a| vec![a.clone()]).collect(),
            ineqs: Vec::new(),
            families: Vec::new(),
            separating: None,
        });
        let idx = self.sets.len() - 1;
        let index_family = (kind == FamilyKind::Cs).then(|| self.add_separating(idx));
        let index = match &index_family {
            Some(k) => self.add_ineq(idx, NeqSpec::InducedBy(k.clone())),
            None => self.add_ineq(idx, NeqSpec::CrossBlock),
        };
        let mut fibers = Vec::new();
        let mut fiber_families = Vec::new();
        let mut transports = Vec::new();
        for a in &atoms {
            let s = self.rng.gen_range(0..idx);
            let fiber = if kind == FamilyKind::Cs {
                let f = self.add_separating(s);
                fiber_families.push((a.clone(), f.clone()));
                self.add_ineq(s, NeqSpec::InducedBy(f))
            } else if self.sets[s].ineqs.is_empty() || self.rng.gen_bool(0.3) {
                self.add_ineq(s, NeqSpec::CrossBlock)
            } else {
                self.sets[s].ineqs.choose(self.rng).unwrap().clone()
            };
            if self.rng.gen_bool(0.3) {
                let images = self.sets[s]
                    .atoms
                    .iter()
                    .map(|x| {
                        let b = self.block_of(s, x);
                        (x.clone(), self.sets[s].blocks[b][0].clone())
                    })
                    .collect();
                let m = self.fresh("t");
                self.push(Item::Fn(FnDecl {
                    name: m.clone(),
                    body: FnBody::Map {
                        from: self.sets[s].name.clone(),
                        to: self.sets[s].name.clone(),
                        images,
                    },
                }));
                transports.push((a.clone(), a.clone(), m));
            }
            fibers.push((a.clone(), fiber));
        }
        let name = self.fresh("L");
        self.push(Item::Family(FamilyDecl {
            name: name.clone(),
            body: FamilyBody::Indexed {
                kind,
                index,
                index_family,
                fibers,
                fiber_families,
                transports,
            },
        }));
        self.indexed.push((name, kind));
    }

    fn pick_set(&mut self) -> usize {
        self.rng.gen_range(0..self.sets.len())
    }

    fn pick_family(&mut self) -> Option<String> {
        let all: Vec<String> = self.sets.iter().flat_map(|s| s.families.clone()).collect();
        all.choose(self.rng).cloned()
    }

    fn pick_ineq(&mut self) -> Option<String> {
        let all: Vec<String> = self.sets.iter().flat_map(|s| s.ineqs.clone()).collect();
        all.choose(self.rng).cloned()
    }

    fn pick_map(&mut self) -> Option<String> {
        self.maps.choose(self.rng).map(|m| m.0.clone())
    }

    fn pick_indexed(&mut self, kinds: &[FamilyKind]) -> Option<String> {
        let all: Vec<&String> = self
            .indexed
            .iter()
            .filter(|(_, k)| kinds.contains(k))
            .map(|(n, _)| n)
            .collect();
        all.choose(self.rng).map(|s| (*s).clone())
    }

    /// Parameters for `law`, or `None` when the document lacks the objects.
    fn params(&mut self, law: LawId) -> Option<Vec<(String, ParamValue)>> {
        use ParamValue::*;
        let name = |s: String| Name(s);
        let mut p: Vec<(String, ParamValue)> = Vec::new();
        for spec in law.params() {
            use sepset_cli::registry::ParamKind as K;
            if !spec.required && self.rng.gen_bool(0.5) {
                continue;
            }
            let v = match spec.kind {
                K::Set => {
                    let s = self.pick_set();
                    name(self.sets[s].name.clone())
                }
                K::Ineq => name(self.pick_ineq()?),
                K::Functions => name(self.pick_family()?),
                K::Indexed => name(self.pick_indexed(&FamilyKind::ALL)?),
                K::Cs => name(self.pick_indexed(&[FamilyKind::Cs, FamilyKind::Global])?),
                K::Global => name(self.pick_indexed(&[FamilyKind::Global])?),
                K::Map => name(self.pick_map()?),
                K::Maps => {
                    let k = self.rng.gen_range(1..=2);
                    Names((0..k).map(|_| self.pick_map()).collect::<Option<_>>()?)
                }
                K::MapsWithSpaces => {
                    let k = self.rng.gen_range(1..=2);
                    Pairs(
                        (0..k)
                            .map(|_| Some((self.pick_map()?, self.pick_family()?)))
                            .collect::<Option<_>>()?,
                    )
                }
                K::IndexedMaps => {
                    let k = self.rng.gen_range(1..=3);
                    Pairs(
                        (0..k)
                            .map(|i| Some((format!("i{i}"), self.pick_map()?)))
                            .collect::<Option<_>>()?,
                    )
                }
                K::Axioms => {
                    let mut ids: Vec<String> = sepset_cli::registry::AXIOM_IDS
                        .iter()
                        .filter(|_| self.rng.gen_bool(0.5))
                        .map(|s| s.to_string())
                        .collect();
                    if ids.is_empty() {
                        ids.push("Ineq1".into());
                    }
                    Names(ids)
                }
                K::Rationals => {
                    let k = self.rng.gen_range(1..=4);
                    Rats((0..k).map(|_| random_rat(self.rng, 16)).collect())
                }
            };
            p.push((spec.key.to_string(), v));
        }
        Some(p)
    }
}

/// A random document in which every reference resolves and every
/// declaration builds.
pub fn random_document(rng: &mut impl Rng, max_atoms: usize) -> SpecDocument {
    let mut g = Gen {
        rng,
        doc: SpecDocument::default(),
        sets: Vec::new(),
        maps: Vec::new(),
        indexed: Vec::new(),
        counter: 0,
    };
    if g.rng.gen_bool(0.5) {
        g.doc.settings = Settings {
            max_atoms: g.rng.gen_bool(0.7).then(|| g.rng.gen_range(1..=12)),
            max_enum: g.rng.gen_bool(0.7).then(|| g.rng.gen_range(1..=10000)),
        };
    }
    let n_sets = g.rng.gen_range(1..=3);
    for _ in 0..n_sets {
        let s = g.add_set(max_atoms);
        if g.rng.gen_bool(0.7) {
            g.add_functions(s);
        }
        let k = g.rng.gen_range(0..=2);
        for _ in 0..k {
            g.add_random_ineq(s);
        }
    }
    let n_maps = g.rng.gen_range(0..=3);
    for _ in 0..n_maps {
        let (a, b) = (g.pick_set(), g.pick_set());
        g.add_map(a, b);
    }
    if g.rng.gen_bool(0.5) {
        g.add_indexed(FamilyKind::Sets);
    }
    if g.rng.gen_bool(0.4) {
        g.add_indexed(FamilyKind::Cs);
    }
    let n_checks = g.rng.gen_range(0..=6);
    for _ in 0..n_checks {
        let law = *LawId::ALL.choose(g.rng).unwrap();
        if let Some(params) = g.params(law) {
            let name = g.fresh("c");
            g.push(Item::Check(CheckDecl { name, law, params }));
        }
    }
    g.doc
}
