//! The law registry: every law id, the core operation behind it, and the
//! parameters a `check` section must supply.

use std::fmt;
use std::str::FromStr;

macro_rules! laws {
    ($($variant:ident => $id:literal, $module:literal, $op:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum LawId {
            $($variant,)*
        }

        impl LawId {
            pub const ALL: &'static [LawId] = &[$(LawId::$variant,)*];

            pub fn id(self) -> &'static str {
                match self {
                    $(LawId::$variant => $id,)*
                }
            }

            /// The core module and operation that evaluate this law.
            pub fn operation(self) -> (&'static str, &'static str) {
                match self {
                    $(LawId::$variant => ($module, $op),)*
                }
            }
        }
    };
}

laws! {
    IneqAxioms => "ineq-axioms", "kernel", "check_ineq_axioms";
    F1 => "f1", "induced", "f1_report";
    Monotonicity => "monotonicity", "induced", "monotonicity_check";
    Complsep => "complsep", "complsep", "check_complsep";
    Affine => "affine", "complsep", "is_affine_between";
    Family => "family", "families", "validate_family";
    SigmaApartness => "sigma-apartness", "families", "sigma_apartness_report";
    CsFamily => "cs-family", "families", "validate_cs_family";
    PiCs => "pi-cs", "families", "pi_cs";
    Fcl3 => "fcl3", "families", "fcl3_check";
    GlobalFamily => "global-family", "families", "validate_global_family";
    SigmaGlobal => "sigma-global", "families", "sigma_global_check";
    DepSe => "dep-se", "families", "dep_strongly_extensional";
    Pr2 => "pr2", "families", "second_projection_check";
    Free => "free", "universal", "free_universal_check";
    FreeAdjunction => "free-adjunction", "universal", "free_adjunction_check";
    Rho => "rho", "universal", "rho_check";
    RhoAdjunction => "rho-adjunction", "universal", "rho_adjunction_check";
    RhoProduct => "rho-product", "universal", "rho_product_check";
    Dual => "dual", "universal", "bidual_check";
    HomFamily => "hom-family", "universal", "hom_family_m";
    Embed => "embed", "universal", "embed_eh";
    RPower => "r-power", "universal", "r_power";
    Tychonoff => "tychonoff", "universal", "tychonoff_check";
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown law id `{0}`")]
pub struct UnknownLawId(pub String);

impl FromStr for LawId {
    type Err = UnknownLawId;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LawId::ALL
            .iter()
            .copied()
            .find(|l| l.id() == s)
            .ok_or_else(|| UnknownLawId(s.to_string()))
    }
}

/// What a check parameter refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Set,
    Ineq,
    /// A function family, read as the function space on its carrier.
    Functions,
    /// Any indexed family of sets.
    Indexed,
    /// A family of completely separated sets, local or global.
    Cs,
    Global,
    Map,
    /// Whitespace-separated maps.
    Maps,
    /// `map:family` pairs.
    MapsWithSpaces,
    /// `index-atom:map` pairs.
    IndexedMaps,
    /// Axiom names `Ineq1` to `Ineq6`.
    Axioms,
    Rationals,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub key: &'static str,
    pub kind: ParamKind,
    pub required: bool,
}

const fn req(key: &'static str, kind: ParamKind) -> ParamSpec {
    ParamSpec {
        key,
        kind,
        required: true,
    }
}

const fn opt(key: &'static str, kind: ParamKind) -> ParamSpec {
    ParamSpec {
        key,
        kind,
        required: false,
    }
}

pub const AXIOM_IDS: [&str; 6] = ["Ineq1", "Ineq2", "Ineq3", "Ineq4", "Ineq5", "Ineq6"];

impl LawId {
    pub fn params(self) -> &'static [ParamSpec] {
        use ParamKind::*;
        match self {
            LawId::IneqAxioms => {
                const P: &[ParamSpec] = &[req("set", Ineq), opt("require", Axioms)];
                P
            }
            LawId::F1 | LawId::Complsep => {
                const P: &[ParamSpec] = &[req("set", Ineq), req("family", Functions)];
                P
            }
            LawId::Monotonicity => {
                const P: &[ParamSpec] = &[req("small", Functions), req("large", Functions)];
                P
            }
            LawId::Affine => {
                const P: &[ParamSpec] = &[
                    req("map", Map),
                    req("from", Functions),
                    req("to", Functions),
                ];
                P
            }
            LawId::Family | LawId::SigmaApartness => {
                const P: &[ParamSpec] = &[req("family", Indexed)];
                P
            }
            LawId::CsFamily | LawId::PiCs | LawId::Fcl3 => {
                const P: &[ParamSpec] = &[req("family", Cs)];
                P
            }
            LawId::GlobalFamily | LawId::SigmaGlobal | LawId::DepSe | LawId::Pr2 => {
                const P: &[ParamSpec] = &[req("family", Global)];
                P
            }
            LawId::Free => {
                const P: &[ParamSpec] = &[req("set", Set), req("target", Functions)];
                P
            }
            LawId::FreeAdjunction => {
                const P: &[ParamSpec] = &[
                    req("set", Set),
                    req("target", Functions),
                    opt("phis", Maps),
                    opt("thetas", MapsWithSpaces),
                ];
                P
            }
            LawId::Rho | LawId::Dual | LawId::Tychonoff => {
                const P: &[ParamSpec] = &[req("space", Functions)];
                P
            }
            LawId::RhoAdjunction => {
                const P: &[ParamSpec] = &[
                    req("space", Functions),
                    req("target", Functions),
                    opt("phis", MapsWithSpaces),
                    opt("thetas", MapsWithSpaces),
                ];
                P
            }
            LawId::RhoProduct => {
                const P: &[ParamSpec] = &[req("left", Functions), req("right", Functions)];
                P
            }
            LawId::HomFamily => {
                const P: &[ParamSpec] = &[req("set", Ineq), req("family", Indexed)];
                P
            }
            LawId::Embed => {
                const P: &[ParamSpec] = &[
                    req("set", Ineq),
                    req("family", Indexed),
                    req("h", IndexedMaps),
                ];
                P
            }
            LawId::RPower => {
                const P: &[ParamSpec] = &[req("space", Functions), opt("values", Rationals)];
                P
            }
        }
    }

    pub fn param(self, key: &str) -> Option<&'static ParamSpec> {
        self.params().iter().find(|p| p.key == key)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn registry_is_exhaustive_and_one_to_one() {
        let expected = [
            "ineq-axioms",
            "f1",
            "monotonicity",
            "complsep",
            "affine",
            "family",
            "sigma-apartness",
            "cs-family",
            "pi-cs",
            "fcl3",
            "global-family",
            "sigma-global",
            "dep-se",
            "pr2",
            "free",
            "free-adjunction",
            "rho",
            "rho-adjunction",
            "rho-product",
            "dual",
            "hom-family",
            "embed",
            "r-power",
            "tychonoff",
        ];
        let ids: Vec<&str> = LawId::ALL.iter().map(|l| l.id()).collect();
        assert_eq!(ids, expected);
        let ops: HashSet<_> = LawId::ALL.iter().map(|l| l.operation()).collect();
        assert_eq!(ops.len(), LawId::ALL.len());
        for l in LawId::ALL {
            assert_eq!(l.id().parse::<LawId>().unwrap(), *l);
            assert!(l.params().iter().any(|p| p.required));
        }
        assert!("tychonof".parse::<LawId>().is_err());
    }
}
