//! The spec-file document and its canonical printer.
//!
//! A document is a list of sections in declaration order. Every reference
//! points at an earlier section, so the printed form parses back to the same
//! document.

use std::fmt;

use sepset_core::Rat;

use crate::registry::LawId;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Settings {
    pub max_atoms: Option<usize>,
    pub max_enum: Option<usize>,
}

impl Settings {
    pub fn is_empty(&self) -> bool {
        self.max_atoms.is_none() && self.max_enum.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetDecl {
    pub name: String,
    pub atoms: Vec<String>,
    /// The partition; `None` means every atom is its own block.
    pub blocks: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NeqSpec {
    Pairs(Vec<(String, String)>),
    CrossBlock,
    InducedBy(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IneqDecl {
    pub name: String,
    pub set: String,
    pub neq: NeqSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FnBody {
    /// A rational-valued table.
    Real {
        on: String,
        values: Vec<(String, Rat)>,
    },
    /// A map between two declared sets.
    Map {
        from: String,
        to: String,
        images: Vec<(String, String)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FnDecl {
    pub name: String,
    pub body: FnBody,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Functions,
    Sets,
    Cs,
    Global,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::Functions,
        FamilyKind::Sets,
        FamilyKind::Cs,
        FamilyKind::Global,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            FamilyKind::Functions => "functions",
            FamilyKind::Sets => "sets",
            FamilyKind::Cs => "cs",
            FamilyKind::Global => "global",
        }
    }
}

/// `(from, to, map)` for the transport `λ_{from,to}`.
pub type Transport = (String, String, String);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyBody {
    Functions {
        on: String,
        members: Vec<String>,
    },
    /// Sets with inequality over an index; `kind` is `Sets`, `Cs` or
    /// `Global`, and the last two carry function families.
    Indexed {
        kind: FamilyKind,
        index: String,
        index_family: Option<String>,
        fibers: Vec<(String, String)>,
        fiber_families: Vec<(String, String)>,
        transports: Vec<Transport>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDecl {
    pub name: String,
    pub body: FamilyBody,
}

impl FamilyDecl {
    pub fn kind(&self) -> FamilyKind {
        match &self.body {
            FamilyBody::Functions { .. } => FamilyKind::Functions,
            FamilyBody::Indexed { kind, .. } => *kind,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Name(String),
    Names(Vec<String>),
    Pairs(Vec<(String, String)>),
    Rats(Vec<Rat>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckDecl {
    pub name: String,
    pub law: LawId,
    pub params: Vec<(String, ParamValue)>,
}

impl CheckDecl {
    pub fn param(&self, key: &str) -> Option<&ParamValue> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Set(SetDecl),
    Ineq(IneqDecl),
    Fn(FnDecl),
    Family(FamilyDecl),
    Check(CheckDecl),
}

impl Item {
    pub fn name(&self) -> &str {
        match self {
            Item::Set(d) => &d.name,
            Item::Ineq(d) => &d.name,
            Item::Fn(d) => &d.name,
            Item::Family(d) => &d.name,
            Item::Check(d) => &d.name,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpecDocument {
    pub settings: Settings,
    pub items: Vec<Item>,
}

impl SpecDocument {
    pub fn sets(&self) -> impl Iterator<Item = &SetDecl> {
        self.items.iter().filter_map(|i| match i {
            Item::Set(d) => Some(d),
            _ => None,
        })
    }

    pub fn ineqs(&self) -> impl Iterator<Item = &IneqDecl> {
        self.items.iter().filter_map(|i| match i {
            Item::Ineq(d) => Some(d),
            _ => None,
        })
    }

    pub fn functions(&self) -> impl Iterator<Item = &FnDecl> {
        self.items.iter().filter_map(|i| match i {
            Item::Fn(d) => Some(d),
            _ => None,
        })
    }

    pub fn families(&self) -> impl Iterator<Item = &FamilyDecl> {
        self.items.iter().filter_map(|i| match i {
            Item::Family(d) => Some(d),
            _ => None,
        })
    }

    pub fn checks(&self) -> impl Iterator<Item = &CheckDecl> {
        self.items.iter().filter_map(|i| match i {
            Item::Check(d) => Some(d),
            _ => None,
        })
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn join_pairs(items: &[(String, String)], sep: char) -> String {
    items
        .iter()
        .map(|(a, b)| format!("{a}{sep}{b}"))
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Name(n) => write!(f, "{n}"),
            ParamValue::Names(ns) => write!(f, "{}", join(ns)),
            ParamValue::Pairs(ps) => write!(f, "{}", join_pairs(ps, ':')),
            ParamValue::Rats(rs) => write!(f, "{}", join(rs)),
        }
    }
}

fn entry(f: &mut fmt::Formatter<'_>, key: &str, value: impl fmt::Display) -> fmt::Result {
    writeln!(f, "  {key} = {value}")
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Set(d) => {
                writeln!(f, "set {}", d.name)?;
                entry(f, "atoms", join(&d.atoms))?;
                if let Some(blocks) = &d.blocks {
                    let text: Vec<String> = blocks.iter().map(|b| join(b)).collect();
                    entry(f, "blocks", text.join(" | "))?;
                }
                Ok(())
            }
            Item::Ineq(d) => {
                writeln!(f, "ineq {}", d.name)?;
                entry(f, "set", &d.set)?;
                match &d.neq {
                    NeqSpec::Pairs(ps) => entry(f, "neq", join_pairs(ps, ',')),
                    NeqSpec::CrossBlock => entry(f, "neq", "cross-block"),
                    NeqSpec::InducedBy(fam) => entry(f, "induced-by", fam),
                }
            }
            Item::Fn(d) => {
                writeln!(f, "fn {}", d.name)?;
                match &d.body {
                    FnBody::Real { on, values } => {
                        entry(f, "on", on)?;
                        let text: Vec<String> =
                            values.iter().map(|(a, v)| format!("{a}:{v}")).collect();
                        entry(f, "values", text.join(" "))
                    }
                    FnBody::Map { from, to, images } => {
                        entry(f, "from", from)?;
                        entry(f, "to", to)?;
                        entry(f, "images", join_pairs(images, ':'))
                    }
                }
            }
            Item::Family(d) => {
                writeln!(f, "family {}", d.name)?;
                entry(f, "kind", d.kind().keyword())?;
                match &d.body {
                    FamilyBody::Functions { on, members } => {
                        entry(f, "on", on)?;
                        entry(f, "members", join(members))
                    }
                    FamilyBody::Indexed {
                        index,
                        index_family,
                        fibers,
                        fiber_families,
                        transports,
                        ..
                    } => {
                        entry(f, "index", index)?;
                        if let Some(k) = index_family {
                            entry(f, "index-family", k)?;
                        }
                        entry(f, "fibers", join_pairs(fibers, ':'))?;
                        if !fiber_families.is_empty() {
                            entry(f, "fiber-families", join_pairs(fiber_families, ':'))?;
                        }
                        if !transports.is_empty() {
                            let text: Vec<String> = transports
                                .iter()
                                .map(|(i, j, m)| format!("{i}>{j}:{m}"))
                                .collect();
                            entry(f, "transports", text.join(" "))?;
                        }
                        Ok(())
                    }
                }
            }
            Item::Check(d) => {
                writeln!(f, "check {}", d.name)?;
                entry(f, "law", d.law)?;
                for (k, v) in &d.params {
                    entry(f, k, v)?;
                }
                Ok(())
            }
        }
    }
}

/// The canonical text of a document.
impl fmt::Display for SpecDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.settings.is_empty() {
            writeln!(f, "settings")?;
            if let Some(n) = self.settings.max_atoms {
                entry(f, "max-atoms", n)?;
            }
            if let Some(n) = self.settings.max_enum {
                entry(f, "max-enum", n)?;
            }
            first = false;
        }
        for item in &self.items {
            if !first {
                writeln!(f)?;
            }
            write!(f, "{item}")?;
            first = false;
        }
        Ok(())
    }
}
