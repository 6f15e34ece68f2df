//! Input documents: small JSON objects, 0-based indices everywhere.

use std::fmt;

use freedim::algebras::{ChainCuts, Pseudotree};
use freedim::coverlab::Cover;
use freedim::setsys::SetFamily;
use freedim::PointSet;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    SetSystem,
    Pseudotree,
    ChainCuts,
    CoverFamily,
    InstanceParams,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::SetSystem => "setsystem",
            Kind::Pseudotree => "pseudotree",
            Kind::ChainCuts => "chaincuts",
            Kind::CoverFamily => "coverfamily",
            Kind::InstanceParams => "instanceparams",
        })
    }
}

/// Why a document was rejected. Syntax errors carry a 1-based line and
/// column; validation errors carry a path such as `sets[0][1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocError {
    Syntax {
        kind: Kind,
        line: usize,
        column: usize,
        message: String,
    },
    Invalid {
        kind: Kind,
        location: String,
        message: String,
    },
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocError::Syntax { kind, line, column, message } => {
                write!(f, "{kind}: line {line}, column {column}: {message}")
            }
            DocError::Invalid { kind, location, message } => write!(f, "{kind}: {location}: {message}"),
        }
    }
}

impl std::error::Error for DocError {}

fn syntax(kind: Kind, e: serde_json::Error) -> DocError {
    DocError::Syntax {
        kind,
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn invalid(kind: Kind, location: impl Into<String>, message: impl Into<String>) -> DocError {
    DocError::Invalid {
        kind,
        location: location.into(),
        message: message.into(),
    }
}

fn from_text<'a, T: Deserialize<'a>>(kind: Kind, text: &'a str) -> Result<T, DocError> {
    serde_json::from_str(text).map_err(|e| syntax(kind, e))
}

fn to_text<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("documents always serialize")
}

fn check_points(kind: Kind, at: &str, ground: usize, points: &[usize]) -> Result<PointSet, DocError> {
    PointSet::try_from_points(ground, points.iter().copied()).map_err(|p| {
        let k = points.iter().position(|&q| q == p).unwrap_or(0);
        invalid(kind, format!("{at}[{k}]"), format!("point {p} is outside ground_size {ground}"))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetSystemDoc {
    pub ground_size: usize,
    pub sets: Vec<Vec<usize>>,
}

/// A validated set system plus the duplicate-member warnings found while parsing.
#[derive(Debug, Clone)]
pub struct ParsedSetSystem {
    pub family: SetFamily,
    pub warnings: Vec<String>,
}

impl SetSystemDoc {
    pub fn parse(text: &str) -> Result<Self, DocError> {
        from_text(Kind::SetSystem, text)
    }

    pub fn to_json(&self) -> String {
        to_text(self)
    }

    pub fn from_family(family: &SetFamily) -> Self {
        SetSystemDoc {
            ground_size: family.ground(),
            sets: family.members().iter().map(PointSet::to_vec).collect(),
        }
    }

    pub fn validate(&self) -> Result<ParsedSetSystem, DocError> {
        let mut members = Vec::with_capacity(self.sets.len());
        for (i, set) in self.sets.iter().enumerate() {
            members.push(check_points(Kind::SetSystem, &format!("sets[{i}]"), self.ground_size, set)?);
        }
        let family = SetFamily::new(self.ground_size, members)
            .map_err(|e| invalid(Kind::SetSystem, "sets", e.to_string()))?;
        let warnings = family
            .duplicates()
            .into_iter()
            .map(|(i, j)| format!("warning: sets[{j}] duplicates sets[{i}]"))
            .collect();
        Ok(ParsedSetSystem { family, warnings })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PseudotreeDoc {
    pub nodes: usize,
    pub parent: Vec<Option<usize>>,
}

impl PseudotreeDoc {
    pub fn parse(text: &str) -> Result<Self, DocError> {
        from_text(Kind::Pseudotree, text)
    }

    pub fn to_json(&self) -> String {
        to_text(self)
    }

    pub fn validate(&self) -> Result<Pseudotree, DocError> {
        let kind = Kind::Pseudotree;
        if self.parent.len() != self.nodes {
            return Err(invalid(
                kind,
                "parent",
                format!("has {} entries but nodes is {}", self.parent.len(), self.nodes),
            ));
        }
        if let Some((i, p)) = self
            .parent
            .iter()
            .enumerate()
            .find_map(|(i, p)| p.filter(|&p| p >= self.nodes).map(|p| (i, p)))
        {
            return Err(invalid(kind, format!("parent[{i}]"), format!("node {p} is out of range for {} nodes", self.nodes)));
        }
        Pseudotree::new(self.parent.clone()).map_err(|e| invalid(kind, "parent", e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainCutsDoc {
    pub length: usize,
    pub cuts: Vec<usize>,
}

impl ChainCutsDoc {
    pub fn parse(text: &str) -> Result<Self, DocError> {
        from_text(Kind::ChainCuts, text)
    }

    pub fn to_json(&self) -> String {
        to_text(self)
    }

    pub fn validate(&self) -> Result<ChainCuts, DocError> {
        if let Some(k) = self.cuts.iter().position(|&c| c >= self.length) {
            return Err(invalid(
                Kind::ChainCuts,
                format!("cuts[{k}]"),
                format!("cut {} is out of range for length {}", self.cuts[k], self.length),
            ));
        }
        ChainCuts::new(self.length, self.cuts.clone()).map_err(|e| invalid(Kind::ChainCuts, "cuts", e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverFamilyDoc {
    pub ground_size: usize,
    pub covers: Vec<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interval: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct ParsedCoverFamily {
    pub ground: usize,
    pub covers: Vec<Cover>,
    pub chi: Option<Vec<u64>>,
    pub interval: bool,
}

impl CoverFamilyDoc {
    pub fn parse(text: &str) -> Result<Self, DocError> {
        from_text(Kind::CoverFamily, text)
    }

    pub fn to_json(&self) -> String {
        to_text(self)
    }

    pub fn validate(&self) -> Result<ParsedCoverFamily, DocError> {
        let kind = Kind::CoverFamily;
        let n = self.ground_size;
        let mut covers = Vec::with_capacity(self.covers.len());
        for (i, cells) in self.covers.iter().enumerate() {
            let mut sets = Vec::with_capacity(cells.len());
            for (j, cell) in cells.iter().enumerate() {
                let at = format!("covers[{i}][{j}]");
                let set = check_points(kind, &at, n, cell)?;
                if set.is_empty() {
                    return Err(invalid(kind, at, "cell is empty"));
                }
                if self.interval == Some(true) && Cover::interval_bounds(&set).is_none() {
                    return Err(invalid(kind, at, "cell is not a contiguous interval"));
                }
                sets.push(set);
            }
            covers.push(Cover::new(n, sets).map_err(|e| invalid(kind, format!("covers[{i}]"), e.to_string()))?);
        }
        if let Some(chi) = &self.chi {
            if chi.len() != covers.len() {
                return Err(invalid(
                    kind,
                    "chi",
                    format!("has {} entries for {} covers", chi.len(), covers.len()),
                ));
            }
            if let Some(k) = chi.iter().position(|&c| c == 0) {
                return Err(invalid(kind, format!("chi[{k}]"), "chi values must be positive"));
            }
        }
        Ok(ParsedCoverFamily {
            ground: n,
            covers,
            chi: self.chi.clone(),
            interval: self.interval.unwrap_or(false),
        })
    }
}

/// Numeric parameters for the grid and counting commands. Missing fields can
/// be supplied by flags.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceParamsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m1: Option<u64>,
}

impl InstanceParamsDoc {
    pub fn parse(text: &str) -> Result<Self, DocError> {
        from_text(Kind::InstanceParams, text)
    }

    pub fn to_json(&self) -> String {
        to_text(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn setsystem_examples() {
        let ok = SetSystemDoc::parse(r#"{"ground_size":3,"sets":[[0,1]]}"#).unwrap().validate().unwrap();
        assert_eq!((ok.family.ground(), ok.family.len()), (3, 1));
        assert!(ok.warnings.is_empty());

        let dup = SetSystemDoc::parse(r#"{"ground_size":2,"sets":[[0],[0]]}"#).unwrap().validate().unwrap();
        assert_eq!(dup.warnings, ["warning: sets[1] duplicates sets[0]"]);

        let bad = SetSystemDoc::parse(r#"{"ground_size":2,"sets":[[5]]}"#).unwrap().validate().unwrap_err();
        assert!(matches!(&bad, DocError::Invalid { location, .. } if location == "sets[0][0]"), "{bad}");
    }

    #[test]
    fn missing_ground_size_is_a_located_syntax_error() {
        let err = SetSystemDoc::parse("{\n  \"sets\": []\n}").unwrap_err();
        match err {
            DocError::Syntax { line, message, .. } => {
                assert_eq!(line, 3);
                assert!(message.contains("ground_size"));
            }
            other => panic!("{other}"),
        }
        let err = SetSystemDoc::parse("{\"ground_size\": 3,\n \"sets\": [[0,]]}").unwrap_err();
        assert!(matches!(err, DocError::Syntax { line: 2, .. }), "{err}");
    }

    #[test]
    fn pseudotree_examples() {
        let star = PseudotreeDoc::parse(r#"{"nodes":3,"parent":[null,0,0]}"#).unwrap().validate().unwrap();
        assert_eq!(star.roots(), [0]);
        let cyc = PseudotreeDoc::parse(r#"{"nodes":2,"parent":[1,0]}"#).unwrap().validate().unwrap_err();
        assert!(cyc.to_string().contains("cycle"), "{cyc}");
        let empty = PseudotreeDoc::parse(r#"{"nodes":0,"parent":[]}"#).unwrap().validate().unwrap();
        assert!(empty.is_empty());
        let range = PseudotreeDoc::parse(r#"{"nodes":2,"parent":[null,7]}"#).unwrap().validate().unwrap_err();
        assert!(matches!(&range, DocError::Invalid { location, .. } if location == "parent[1]"));
    }

    #[test]
    fn coverfamily_locations() {
        let uncovered = CoverFamilyDoc::parse(r#"{"ground_size":3,"covers":[[[0,1]]]}"#).unwrap().validate().unwrap_err();
        assert!(matches!(&uncovered, DocError::Invalid { location, .. } if location == "covers[0]"));
        let empty = CoverFamilyDoc::parse(r#"{"ground_size":1,"covers":[[[0],[]]]}"#).unwrap().validate().unwrap_err();
        assert!(matches!(&empty, DocError::Invalid { location, .. } if location == "covers[0][1]"));
        let gap = CoverFamilyDoc::parse(r#"{"ground_size":3,"covers":[[[0,2],[1]]],"interval":true}"#)
            .unwrap()
            .validate()
            .unwrap_err();
        assert!(matches!(&gap, DocError::Invalid { location, .. } if location == "covers[0][0]"));
        let chi = CoverFamilyDoc::parse(r#"{"ground_size":1,"covers":[[[0]]],"chi":[0]}"#).unwrap().validate().unwrap_err();
        assert!(matches!(&chi, DocError::Invalid { location, .. } if location == "chi[0]"));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        assert!(ChainCutsDoc::parse(r#"{"length":3,"cuts":[],"extra":1}"#).is_err());
    }
}
