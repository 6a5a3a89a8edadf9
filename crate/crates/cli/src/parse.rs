//! Parser for the line-oriented spec format.
//!
//! ```text
//! # comments run to the end of the line
//! settings
//!   max-atoms = 12
//!
//! set X
//!   atoms = a b c
//!   blocks = a b | c
//!
//! fn f
//!   on = X
//!   values = a:0 b:0 c:1/2
//! ```
//!
//! A section header starts in the first column; its body lines are
//! indented `key = value` entries. Names are declared once and may only be
//! referenced after their declaration.

use std::collections::HashMap;

use sepset_core::kernel::rat::{parse_canonical_rat, RatParseError};
use sepset_core::Rat;

use crate::document::*;
use crate::error::SpecError;
use crate::model::Model;
use crate::registry::{LawId, ParamKind, AXIOM_IDS};

#[derive(Debug, Clone, Copy)]
struct Tok<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

#[derive(Debug)]
struct Entry<'a> {
    key: Tok<'a>,
    value: Vec<Tok<'a>>,
    /// Column just after `=`, for errors about an empty value.
    value_col: usize,
}

#[derive(Debug)]
struct Section<'a> {
    keyword: Tok<'a>,
    name: Option<Tok<'a>>,
    entries: Vec<Entry<'a>>,
}

fn parse_err(tok: Tok<'_>, expected: impl Into<String>) -> SpecError {
    SpecError::Parse {
        line: tok.line,
        col: tok.col,
        expected: expected.into(),
        found: format!("`{}`", tok.text),
    }
}

fn invalid(line: usize, col: usize, message: impl Into<String>) -> SpecError {
    SpecError::Invalid {
        line,
        col,
        message: message.into(),
    }
}

/// Splits on whitespace; `|` is a token of its own.
fn tokens(text: &str, line: usize, first_col: usize) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let tok = |s: usize, e: usize, c: usize| Tok {
        text: &text[s..e],
        line,
        col: c,
    };
    for (col, (i, ch)) in (first_col..).zip(text.char_indices()) {
        if ch.is_whitespace() || ch == '|' {
            if let Some((s, c)) = start.take() {
                out.push(tok(s, i, c));
            }
            if ch == '|' {
                out.push(tok(i, i + 1, col));
            }
        } else if start.is_none() {
            start = Some((i, col));
        }
    }
    if let Some((s, c)) = start {
        out.push(tok(s, text.len(), c));
    }
    out
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn sections(text: &str) -> Result<Vec<Section<'_>>, SpecError> {
    let mut out: Vec<Section<'_>> = Vec::new();
    for (n, raw) in text.split('\n').enumerate() {
        let line = n + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let content = strip_comment(raw);
        if content.trim().is_empty() {
            continue;
        }
        let indented = content.starts_with(|c: char| c.is_whitespace());
        if !indented {
            let toks = tokens(content, line, 1);
            let keyword = toks[0];
            let name = toks.get(1).copied();
            if let Some(extra) = toks.get(2) {
                return Err(parse_err(*extra, "end of line after the section name"));
            }
            out.push(Section {
                keyword,
                name,
                entries: Vec::new(),
            });
            continue;
        }
        let Some(section) = out.last_mut() else {
            let toks = tokens(content, line, 1);
            return Err(parse_err(toks[0], "a section header in the first column"));
        };
        let Some(eq) = content.find('=') else {
            let toks = tokens(content, line, 1);
            return Err(parse_err(toks[0], "`key = value`"));
        };
        let key_toks = tokens(&content[..eq], line, 1);
        let eq_col = content[..eq].chars().count() + 1;
        let key = match key_toks.as_slice() {
            [k] => *k,
            [] => {
                return Err(SpecError::Parse {
                    line,
                    col: eq_col,
                    expected: "a key before `=`".into(),
                    found: "`=`".into(),
                })
            }
            [_, extra, ..] => return Err(parse_err(*extra, "`=` after the key")),
        };
        let value = tokens(&content[eq + 1..], line, eq_col + 1);
        section.entries.push(Entry {
            key,
            value,
            value_col: eq_col + 1,
        });
    }
    Ok(out)
}

fn check_name(tok: Tok<'_>) -> Result<&str, SpecError> {
    if tok.text.is_empty() || tok.text.contains(['=', ':', ',', '>', '|']) {
        return Err(parse_err(tok, "a name (no `=`, `:`, `,`, `>` or `|`)"));
    }
    Ok(tok.text)
}

fn sub_tok<'a>(tok: Tok<'a>, text: &'a str, offset_chars: usize) -> Tok<'a> {
    Tok {
        text,
        line: tok.line,
        col: tok.col + offset_chars,
    }
}

/// Splits `a<sep>b` into two named parts.
fn split_pair<'a>(tok: Tok<'a>, sep: char, what: &str) -> Result<(Tok<'a>, Tok<'a>), SpecError> {
    let Some(i) = tok.text.find(sep) else {
        return Err(parse_err(tok, what.to_string()));
    };
    let left = sub_tok(tok, &tok.text[..i], 0);
    let right = sub_tok(
        tok,
        &tok.text[i + sep.len_utf8()..],
        tok.text[..i].chars().count() + 1,
    );
    if left.text.is_empty() || right.text.is_empty() {
        return Err(parse_err(tok, what.to_string()));
    }
    Ok((left, right))
}

fn rational(tok: Tok<'_>) -> Result<Rat, SpecError> {
    parse_canonical_rat(tok.text).map_err(|e| SpecError::MalformedRational {
        line: tok.line,
        col: tok.col,
        text: tok.text.to_string(),
        suggestion: match e {
            RatParseError::NonCanonical { canonical, .. } => Some(canonical),
            _ => None,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum DeclKind {
    Set,
    Ineq,
    RealFn,
    Map,
    Family(FamilyKind),
    Check,
}

impl DeclKind {
    fn label(self) -> &'static str {
        match self {
            DeclKind::Set => "set",
            DeclKind::Ineq => "ineq",
            DeclKind::RealFn => "real-valued fn",
            DeclKind::Map => "map",
            DeclKind::Family(FamilyKind::Functions) => "function family",
            DeclKind::Family(FamilyKind::Sets) => "family of sets",
            DeclKind::Family(FamilyKind::Cs) => "cs family",
            DeclKind::Family(FamilyKind::Global) => "global family",
            DeclKind::Check => "check",
        }
    }
}

const INDEXED: &[DeclKind] = &[
    DeclKind::Family(FamilyKind::Sets),
    DeclKind::Family(FamilyKind::Cs),
    DeclKind::Family(FamilyKind::Global),
];
const CS: &[DeclKind] = &[
    DeclKind::Family(FamilyKind::Cs),
    DeclKind::Family(FamilyKind::Global),
];
const FUNCTIONS: &[DeclKind] = &[DeclKind::Family(FamilyKind::Functions)];

struct Parser {
    declared: HashMap<String, (DeclKind, usize)>,
    model: Model,
}

/// The entries of one section, each key consumed at most once.
struct Body<'s, 'a> {
    section: &'s Section<'a>,
}

impl<'s, 'a> Body<'s, 'a> {
    fn new(section: &'s Section<'a>, allowed: &[&str]) -> Result<Self, SpecError> {
        let mut seen: Vec<&str> = Vec::new();
        for e in &section.entries {
            if !allowed.contains(&e.key.text) {
                let list: Vec<String> = allowed.iter().map(|k| format!("`{k}`")).collect();
                return Err(parse_err(e.key, format!("one of {}", list.join(", "))));
            }
            if seen.contains(&e.key.text) {
                return Err(invalid(
                    e.key.line,
                    e.key.col,
                    format!("key `{}` given twice", e.key.text),
                ));
            }
            seen.push(e.key.text);
        }
        Ok(Body { section })
    }

    fn get(&self, key: &str) -> Option<&'s Entry<'a>> {
        self.section.entries.iter().find(|e| e.key.text == key)
    }

    fn require(&self, key: &str) -> Result<&'s Entry<'a>, SpecError> {
        self.get(key).ok_or_else(|| {
            let k = self.section.name.unwrap_or(self.section.keyword);
            invalid(
                k.line,
                k.col,
                format!("{} `{}` needs `{key}`", self.section.keyword.text, k.text),
            )
        })
    }
}

fn single<'a>(e: &Entry<'a>) -> Result<Tok<'a>, SpecError> {
    match e.value.as_slice() {
        [t] => Ok(*t),
        [] => Err(SpecError::Parse {
            line: e.key.line,
            col: e.value_col,
            expected: "a single value".into(),
            found: "end of line".into(),
        }),
        [_, extra, ..] => Err(parse_err(*extra, "end of line after a single value")),
    }
}

fn number(e: &Entry<'_>) -> Result<usize, SpecError> {
    let t = single(e)?;
    t.text
        .parse()
        .map_err(|_| parse_err(t, "a non-negative integer"))
}

impl Parser {
    fn reference(&self, tok: Tok<'_>, allowed: &[DeclKind]) -> Result<String, SpecError> {
        let name = check_name(tok)?;
        let undeclared = || SpecError::UndeclaredName {
            line: tok.line,
            col: tok.col,
            kind: allowed
                .iter()
                .map(|k| k.label())
                .collect::<Vec<_>>()
                .join(" or "),
            name: name.to_string(),
        };
        let (kind, _) = self.declared.get(name).ok_or_else(undeclared)?;
        if !allowed.contains(kind) {
            return Err(invalid(
                tok.line,
                tok.col,
                format!(
                    "`{name}` is a {}, expected a {}",
                    kind.label(),
                    allowed
                        .iter()
                        .map(|k| k.label())
                        .collect::<Vec<_>>()
                        .join(" or ")
                ),
            ));
        }
        Ok(name.to_string())
    }

    fn ref_entry(&self, e: &Entry<'_>, allowed: &[DeclKind]) -> Result<String, SpecError> {
        self.reference(single(e)?, allowed)
    }

    fn ref_list(&self, e: &Entry<'_>, allowed: &[DeclKind]) -> Result<Vec<String>, SpecError> {
        e.value
            .iter()
            .map(|t| self.reference(*t, allowed))
            .collect()
    }

    /// `atom:name` pairs; the atom is only checked for shape.
    fn atom_ref_pairs(
        &self,
        e: &Entry<'_>,
        allowed: &[DeclKind],
    ) -> Result<Vec<(String, String)>, SpecError> {
        e.value
            .iter()
            .map(|t| {
                let (a, n) = split_pair(*t, ':', "`atom:name`")?;
                Ok((check_name(a)?.to_string(), self.reference(n, allowed)?))
            })
            .collect()
    }

    fn declare(&mut self, tok: Tok<'_>, kind: DeclKind) -> Result<(), SpecError> {
        let name = check_name(tok)?;
        if let Some((_, first)) = self.declared.get(name) {
            return Err(SpecError::DuplicateName {
                line: tok.line,
                col: tok.col,
                name: name.to_string(),
                first: *first,
            });
        }
        self.declared.insert(name.to_string(), (kind, tok.line));
        Ok(())
    }

    fn section(&mut self, s: &Section<'_>, doc: &mut SpecDocument) -> Result<(), SpecError> {
        let kw = s.keyword;
        if kw.text == "settings" {
            if let Some(n) = s.name {
                return Err(parse_err(n, "end of line after `settings`"));
            }
            let body = Body::new(s, &["max-atoms", "max-enum"])?;
            if let Some(e) = body.get("max-atoms") {
                doc.settings.max_atoms = Some(number(e)?);
            }
            if let Some(e) = body.get("max-enum") {
                doc.settings.max_enum = Some(number(e)?);
            }
            return Ok(());
        }
        let Some(name_tok) = s.name else {
            if matches!(kw.text, "set" | "ineq" | "fn" | "family" | "check") {
                return Err(SpecError::Parse {
                    line: kw.line,
                    col: kw.col + kw.text.chars().count(),
                    expected: format!("a name after `{}`", kw.text),
                    found: "end of line".into(),
                });
            }
            return Err(parse_err(
                kw,
                "a section keyword (`settings`, `set`, `ineq`, `fn`, `family`, `check`)",
            ));
        };
        let name = check_name(name_tok)?.to_string();
        let (item, kind) = match kw.text {
            "set" => (Item::Set(self.set_decl(s, name)?), DeclKind::Set),
            "ineq" => (Item::Ineq(self.ineq_decl(s, name)?), DeclKind::Ineq),
            "fn" => {
                let d = self.fn_decl(s, name)?;
                let k = match d.body {
                    FnBody::Real { .. } => DeclKind::RealFn,
                    FnBody::Map { .. } => DeclKind::Map,
                };
                (Item::Fn(d), k)
            }
            "family" => {
                let d = self.family_decl(s, name)?;
                let k = DeclKind::Family(d.kind());
                (Item::Family(d), k)
            }
            "check" => (Item::Check(self.check_decl(s, name)?), DeclKind::Check),
            _ => {
                return Err(parse_err(
                    kw,
                    "a section keyword (`settings`, `set`, `ineq`, `fn`, `family`, `check`)",
                ))
            }
        };
        self.declare(name_tok, kind)?;
        self.model.add(&item).map_err(|m| {
            invalid(
                name_tok.line,
                name_tok.col,
                format!("{} `{}`: {m}", kw.text, name_tok.text),
            )
        })?;
        doc.items.push(item);
        Ok(())
    }

    fn set_decl(&self, s: &Section<'_>, name: String) -> Result<SetDecl, SpecError> {
        let body = Body::new(s, &["atoms", "blocks"])?;
        let atoms_entry = body.require("atoms")?;
        let mut atoms: Vec<String> = Vec::new();
        for t in &atoms_entry.value {
            let a = check_name(*t)?;
            if atoms.iter().any(|b| b == a) {
                return Err(invalid(t.line, t.col, format!("atom `{a}` listed twice")));
            }
            atoms.push(a.to_string());
        }
        let blocks = match body.get("blocks") {
            None => None,
            Some(e) => {
                let mut blocks: Vec<Vec<String>> = vec![Vec::new()];
                let mut used: Vec<&str> = Vec::new();
                for t in &e.value {
                    if t.text == "|" {
                        if blocks.last().is_some_and(|b| b.is_empty()) {
                            return Err(parse_err(*t, "an atom before `|`"));
                        }
                        blocks.push(Vec::new());
                        continue;
                    }
                    let a = check_name(*t)?;
                    if !atoms.iter().any(|b| b == a) {
                        return Err(invalid(
                            t.line,
                            t.col,
                            format!("`{a}` is not an atom of `{name}`"),
                        ));
                    }
                    if used.contains(&a) {
                        return Err(invalid(
                            t.line,
                            t.col,
                            format!("atom `{a}` is in two blocks"),
                        ));
                    }
                    used.push(a);
                    blocks.last_mut().expect("nonempty").push(a.to_string());
                }
                if blocks.last().is_some_and(|b| b.is_empty()) {
                    if blocks.len() > 1 {
                        let last = e.value.last().copied().expect("a `|` was read");
                        return Err(parse_err(last, "an atom after `|`"));
                    }
                    blocks.clear();
                }
                if let Some(missing) = atoms.iter().find(|a| !used.contains(&a.as_str())) {
                    return Err(invalid(
                        e.key.line,
                        e.key.col,
                        format!("the blocks of `{name}` do not cover atom `{missing}`"),
                    ));
                }
                Some(blocks)
            }
        };
        Ok(SetDecl {
            name,
            atoms,
            blocks,
        })
    }

    fn ineq_decl(&self, s: &Section<'_>, name: String) -> Result<IneqDecl, SpecError> {
        let body = Body::new(s, &["set", "neq", "induced-by"])?;
        let set = self.ref_entry(body.require("set")?, &[DeclKind::Set])?;
        let neq = match (body.get("neq"), body.get("induced-by")) {
            (Some(e), None) => {
                if let [t] = e.value.as_slice() {
                    if t.text == "cross-block" {
                        return Ok(IneqDecl {
                            name,
                            set,
                            neq: NeqSpec::CrossBlock,
                        });
                    }
                }
                let pairs = e
                    .value
                    .iter()
                    .map(|t| {
                        let (a, b) = split_pair(*t, ',', "`atom,atom` or `cross-block`")?;
                        Ok((check_name(a)?.to_string(), check_name(b)?.to_string()))
                    })
                    .collect::<Result<_, SpecError>>()?;
                NeqSpec::Pairs(pairs)
            }
            (None, Some(e)) => NeqSpec::InducedBy(self.ref_entry(e, FUNCTIONS)?),
            (Some(_), Some(e)) => {
                return Err(invalid(
                    e.key.line,
                    e.key.col,
                    "give either `neq` or `induced-by`, not both",
                ))
            }
            (None, None) => {
                let k = s.name.expect("named section");
                return Err(invalid(
                    k.line,
                    k.col,
                    format!("ineq `{name}` needs `neq` or `induced-by`"),
                ));
            }
        };
        Ok(IneqDecl { name, set, neq })
    }

    fn fn_decl(&self, s: &Section<'_>, name: String) -> Result<FnDecl, SpecError> {
        let body = Body::new(s, &["on", "values", "from", "to", "images"])?;
        if let Some(on) = body.get("on") {
            for k in ["from", "to", "images"] {
                if let Some(e) = body.get(k) {
                    return Err(invalid(
                        e.key.line,
                        e.key.col,
                        format!("`{k}` belongs to maps; this fn has `on`"),
                    ));
                }
            }
            let on = self.ref_entry(on, &[DeclKind::Set])?;
            let values = body
                .require("values")?
                .value
                .iter()
                .map(|t| {
                    let (a, v) = split_pair(*t, ':', "`atom:rational`")?;
                    Ok((check_name(a)?.to_string(), rational(v)?))
                })
                .collect::<Result<_, SpecError>>()?;
            return Ok(FnDecl {
                name,
                body: FnBody::Real { on, values },
            });
        }
        if let Some(e) = body.get("values") {
            return Err(invalid(
                e.key.line,
                e.key.col,
                "`values` needs `on`; maps use `from`, `to` and `images`",
            ));
        }
        let from = self.ref_entry(body.require("from")?, &[DeclKind::Set])?;
        let to = self.ref_entry(body.require("to")?, &[DeclKind::Set])?;
        let images = body
            .require("images")?
            .value
            .iter()
            .map(|t| {
                let (a, b) = split_pair(*t, ':', "`atom:atom`")?;
                Ok((check_name(a)?.to_string(), check_name(b)?.to_string()))
            })
            .collect::<Result<_, SpecError>>()?;
        Ok(FnDecl {
            name,
            body: FnBody::Map { from, to, images },
        })
    }

    fn family_decl(&self, s: &Section<'_>, name: String) -> Result<FamilyDecl, SpecError> {
        let all = [
            "kind",
            "on",
            "members",
            "index",
            "index-family",
            "fibers",
            "fiber-families",
            "transports",
        ];
        let body = Body::new(s, &all)?;
        let kind_tok = single(body.require("kind")?)?;
        let kind = FamilyKind::ALL
            .into_iter()
            .find(|k| k.keyword() == kind_tok.text)
            .ok_or_else(|| parse_err(kind_tok, "`functions`, `sets`, `cs` or `global`"))?;
        let allowed: &[&str] = match kind {
            FamilyKind::Functions => &["kind", "on", "members"],
            FamilyKind::Sets => &["kind", "index", "fibers", "transports"],
            FamilyKind::Cs | FamilyKind::Global => &[
                "kind",
                "index",
                "index-family",
                "fibers",
                "fiber-families",
                "transports",
            ],
        };
        Body::new(s, allowed)?;
        if kind == FamilyKind::Functions {
            let on = self.ref_entry(body.require("on")?, &[DeclKind::Set])?;
            let members = self.ref_list(body.require("members")?, &[DeclKind::RealFn])?;
            return Ok(FamilyDecl {
                name,
                body: FamilyBody::Functions { on, members },
            });
        }
        let index = self.ref_entry(body.require("index")?, &[DeclKind::Ineq])?;
        let index_family = match kind {
            FamilyKind::Sets => None,
            _ => Some(self.ref_entry(body.require("index-family")?, FUNCTIONS)?),
        };
        let fibers = self.atom_ref_pairs(body.require("fibers")?, &[DeclKind::Ineq])?;
        let fiber_families = match body.get("fiber-families") {
            Some(e) => self.atom_ref_pairs(e, FUNCTIONS)?,
            None => Vec::new(),
        };
        let transports = match body.get("transports") {
            None => Vec::new(),
            Some(e) => e
                .value
                .iter()
                .map(|t| {
                    let (ij, m) = split_pair(*t, ':', "`i>j:map`")?;
                    let (i, j) = split_pair(ij, '>', "`i>j:map`")?;
                    Ok((
                        check_name(i)?.to_string(),
                        check_name(j)?.to_string(),
                        self.reference(m, &[DeclKind::Map])?,
                    ))
                })
                .collect::<Result<_, SpecError>>()?,
        };
        Ok(FamilyDecl {
            name,
            body: FamilyBody::Indexed {
                kind,
                index,
                index_family,
                fibers,
                fiber_families,
                transports,
            },
        })
    }

    fn check_decl(&self, s: &Section<'_>, name: String) -> Result<CheckDecl, SpecError> {
        let law_entry = s
            .entries
            .iter()
            .find(|e| e.key.text == "law")
            .ok_or_else(|| {
                let k = s.name.expect("named section");
                invalid(k.line, k.col, format!("check `{name}` needs `law`"))
            })?;
        let law_tok = single(law_entry)?;
        let law: LawId = law_tok
            .text
            .parse()
            .map_err(|source| SpecError::UnknownLaw {
                line: law_tok.line,
                col: law_tok.col,
                source,
            })?;
        let mut allowed = vec!["law"];
        allowed.extend(law.params().iter().map(|p| p.key));
        let body = Body::new(s, &allowed)?;
        let mut params = Vec::new();
        for e in &s.entries {
            if e.key.text == "law" {
                continue;
            }
            let spec = law.param(e.key.text).expect("key was validated");
            params.push((spec.key.to_string(), self.param_value(e, spec.kind)?));
        }
        for p in law.params().iter().filter(|p| p.required) {
            body.require(p.key)?;
        }
        Ok(CheckDecl { name, law, params })
    }

    fn param_value(&self, e: &Entry<'_>, kind: ParamKind) -> Result<ParamValue, SpecError> {
        use ParamKind as K;
        let one = |allowed: &[DeclKind]| Ok(ParamValue::Name(self.ref_entry(e, allowed)?));
        match kind {
            K::Set => one(&[DeclKind::Set]),
            K::Ineq => one(&[DeclKind::Ineq]),
            K::Functions => one(FUNCTIONS),
            K::Indexed => one(INDEXED),
            K::Cs => one(CS),
            K::Global => one(&[DeclKind::Family(FamilyKind::Global)]),
            K::Map => one(&[DeclKind::Map]),
            K::Maps => Ok(ParamValue::Names(self.ref_list(e, &[DeclKind::Map])?)),
            K::MapsWithSpaces => {
                let pairs = e
                    .value
                    .iter()
                    .map(|t| {
                        let (m, f) = split_pair(*t, ':', "`map:family`")?;
                        Ok((
                            self.reference(m, &[DeclKind::Map])?,
                            self.reference(f, FUNCTIONS)?,
                        ))
                    })
                    .collect::<Result<_, SpecError>>()?;
                Ok(ParamValue::Pairs(pairs))
            }
            K::IndexedMaps => {
                let pairs = e
                    .value
                    .iter()
                    .map(|t| {
                        let (a, m) = split_pair(*t, ':', "`atom:map`")?;
                        Ok((
                            check_name(a)?.to_string(),
                            self.reference(m, &[DeclKind::Map])?,
                        ))
                    })
                    .collect::<Result<_, SpecError>>()?;
                Ok(ParamValue::Pairs(pairs))
            }
            K::Axioms => {
                let names = e
                    .value
                    .iter()
                    .map(|t| {
                        if AXIOM_IDS.contains(&t.text) {
                            Ok(t.text.to_string())
                        } else {
                            Err(parse_err(*t, "an axiom id `Ineq1` to `Ineq6`"))
                        }
                    })
                    .collect::<Result<_, SpecError>>()?;
                Ok(ParamValue::Names(names))
            }
            K::Rationals => Ok(ParamValue::Rats(
                e.value
                    .iter()
                    .map(|t| rational(*t))
                    .collect::<Result<_, _>>()?,
            )),
        }
    }
}

/// Parses and resolves a document. Every reference is checked and every
/// declaration is built, so a returned document always yields a [`Model`].
pub fn parse_spec(text: &str) -> Result<SpecDocument, SpecError> {
    let mut parser = Parser {
        declared: HashMap::new(),
        model: Model::default(),
    };
    let mut doc = SpecDocument::default();
    let mut seen_settings: Option<usize> = None;
    for s in sections(text)? {
        if s.keyword.text == "settings" {
            if let Some(first) = seen_settings {
                return Err(invalid(
                    s.keyword.line,
                    s.keyword.col,
                    format!("`settings` already given on line {first}"),
                ));
            }
            seen_settings = Some(s.keyword.line);
        }
        parser.section(&s, &mut doc)?;
    }
    Ok(doc)
}

/// Reads and parses a file.
pub fn parse_file(path: &std::path::Path) -> Result<SpecDocument, SpecError> {
    let bytes = std::fs::read(path).map_err(|e| SpecError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let text = String::from_utf8(bytes).map_err(|e| SpecError::Io {
        path: path.display().to_string(),
        message: format!("not UTF-8: {e}"),
    })?;
    parse_spec(&text)
}
