use std::fmt;

/// An offending tuple of atoms, with a short description of what failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub atoms: Vec<String>,
    pub detail: String,
}

impl Violation {
    pub fn new<I, A>(atoms: I, detail: impl Into<String>) -> Self
    where
        I: IntoIterator<Item = A>,
        A: Into<String>,
    {
        Violation {
            atoms: atoms.into_iter().map(Into::into).collect(),
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({})", self.detail, self.atoms.join(", "))
    }
}

/// Outcome of checking one law instance by exhaustion.
///
/// `NotApplicable` is reserved for conditional statements whose hypothesis
/// does not hold; it never counts as a failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Violation),
    NotApplicable(String),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn is_not_applicable(&self) -> bool {
        matches!(self, Verdict::NotApplicable(_))
    }

    pub fn fail<I, A>(atoms: I, detail: impl Into<String>) -> Self
    where
        I: IntoIterator<Item = A>,
        A: Into<String>,
    {
        Verdict::Fails(Violation::new(atoms, detail))
    }

    /// `Holds` when `ok`, otherwise the given failure.
    pub fn from_check(ok: bool, on_fail: impl FnOnce() -> Violation) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Fails(on_fail())
        }
    }

    /// Evaluates a conditional: `NotApplicable` when the hypothesis fails,
    /// otherwise the conclusion's verdict.
    pub fn conditional(hypothesis: bool, why: &str, conclusion: impl FnOnce() -> Verdict) -> Self {
        if hypothesis {
            conclusion()
        } else {
            Verdict::NotApplicable(why.to_string())
        }
    }

    /// First failure wins, then `Holds`; all-not-applicable stays so.
    pub fn all(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut seen_holds = false;
        let mut na = None;
        for v in verdicts {
            match v {
                Verdict::Fails(_) => return v,
                Verdict::Holds => seen_holds = true,
                Verdict::NotApplicable(why) => {
                    na.get_or_insert(why);
                }
            }
        }
        match (seen_holds, na) {
            (false, Some(why)) => Verdict::NotApplicable(why),
            _ => Verdict::Holds,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails(v) => write!(f, "fails: {v}"),
            Verdict::NotApplicable(why) => write!(f, "not applicable: {why}"),
        }
    }
}

/// Named clauses of a composite check, in evaluation order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClauseReport {
    pub clauses: Vec<(String, Verdict)>,
}

impl ClauseReport {
    pub fn new() -> Self {
        ClauseReport::default()
    }

    pub fn push(&mut self, id: impl Into<String>, verdict: Verdict) {
        self.clauses.push((id.into(), verdict));
    }

    pub fn with(mut self, id: impl Into<String>, verdict: Verdict) -> Self {
        self.push(id, verdict);
        self
    }

    pub fn clause(&self, id: &str) -> Option<&Verdict> {
        self.clauses.iter().find(|(c, _)| c == id).map(|(_, v)| v)
    }

    pub fn overall(&self) -> Verdict {
        Verdict::all(self.clauses.iter().map(|(_, v)| v.clone()))
    }

    pub fn first_failure(&self) -> Option<(&str, &Violation)> {
        self.clauses.iter().find_map(|(id, v)| match v {
            Verdict::Fails(w) => Some((id.as_str(), w)),
            _ => None,
        })
    }
}
