//! JSON documents `{format_version, kind, payload}` and their typed payloads.
//! Rows, columns and ground set elements are 1-based in every payload.

use std::collections::BTreeMap;

use num_rational::Rational64;
use polymatch::core::{subset_label, GroundConfig, Matching, Sign, SignMap, SignedVector};
use polymatch::hyperfields::{builtin, HElem, HMatrix, Hyperfield};
use polymatch::oriented::SignMatrix;
use polymatch::triangulation::{MatchingField, Tree, TreeSet};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Treeset,
    MatchingField,
    SignMatrix,
    SignMap,
    SignedVector,
    Hmatrix,
    Report,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub format_version: String,
    pub kind: Kind,
    pub payload: Value,
}

impl Document {
    pub fn new<P: Serialize>(kind: Kind, payload: &P) -> Document {
        Document {
            format_version: FORMAT_VERSION.into(),
            kind,
            payload: serde_json::to_value(payload).expect("payloads serialize"),
        }
    }

    pub fn parse(text: &str) -> Result<Document, CliError> {
        let doc: Document = serde_json::from_str(text).map_err(|e| CliError::Input(format!("bad document: {e}")))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(CliError::Input(format!(
                "unsupported format_version {:?}",
                doc.format_version
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Typed payload, after checking the kind.
    pub fn payload<P: DeserializeOwned>(&self, kind: Kind) -> Result<P, CliError> {
        if self.kind != kind {
            return Err(CliError::Input(format!(
                "expected a {kind:?} document, got {:?}",
                self.kind
            )));
        }
        serde_json::from_value(self.payload.clone()).map_err(|e| CliError::Input(format!("bad {kind:?} payload: {e}")))
    }
}

fn input<T>(r: polymatch::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| CliError::Input(e.to_string()))
}

fn edge_from(e: [usize; 2], d: usize, n: usize) -> Result<(usize, usize), CliError> {
    let [r, c] = e;
    if r == 0 || r > d || c == 0 || c > n {
        return Err(CliError::Input(format!("edge [{r},{c}] outside 1..={d} × 1..={n}")));
    }
    Ok((r - 1, c - 1))
}

fn edges_to(edges: &[(usize, usize)]) -> Vec<[usize; 2]> {
    edges.iter().map(|&(r, c)| [r + 1, c + 1]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeSetPayload {
    pub d: usize,
    pub n: usize,
    pub trees: Vec<Vec<[usize; 2]>>,
}

impl TreeSetPayload {
    pub fn from_treeset(ts: &TreeSet) -> Self {
        let GroundConfig { d, n } = ts.config();
        TreeSetPayload {
            d,
            n,
            trees: ts.trees().iter().map(|t| edges_to(t.edges())).collect(),
        }
    }

    pub fn to_treeset(&self) -> Result<TreeSet, CliError> {
        let config = input(GroundConfig::new(self.d, self.n))?;
        let trees = self
            .trees
            .iter()
            .map(|t| {
                t.iter()
                    .map(|&e| edge_from(e, self.d, self.n))
                    .collect::<Result<Vec<_>, _>>()
                    .map(Tree::new)
            })
            .collect::<Result<Vec<_>, _>>()?;
        input(TreeSet::new(config, trees))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchingFieldPayload {
    pub d: usize,
    pub n: usize,
    /// One perfect matching per d-subset, as edge lists.
    pub matchings: Vec<Vec<[usize; 2]>>,
}

impl MatchingFieldPayload {
    pub fn from_field(mf: &MatchingField) -> Self {
        let GroundConfig { d, n } = mf.config();
        MatchingFieldPayload {
            d,
            n,
            matchings: mf.iter().map(|(_, m)| edges_to(&m.edges())).collect(),
        }
    }

    pub fn to_field(&self) -> Result<MatchingField, CliError> {
        let config = input(GroundConfig::new(self.d, self.n))?;
        let ms = self
            .matchings
            .iter()
            .map(|m| {
                let edges = m
                    .iter()
                    .map(|&e| edge_from(e, self.d, self.n))
                    .collect::<Result<Vec<_>, _>>()?;
                input(Matching::from_edges(self.d, &edges))
            })
            .collect::<Result<Vec<_>, _>>()?;
        input(MatchingField::new(config, ms))
    }
}

fn sign_str(s: Sign) -> String {
    s.symbol().to_string()
}

fn parse_sign(s: &str) -> Result<Sign, CliError> {
    let mut chars = s.chars();
    match (chars.next().and_then(Sign::parse), chars.next()) {
        (Some(sign), None) => Ok(sign),
        _ => Err(CliError::Input(format!("bad sign {s:?}"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignMatrixPayload {
    pub rows: Vec<Vec<String>>,
}

impl SignMatrixPayload {
    pub fn from_matrix(a: &SignMatrix) -> Self {
        SignMatrixPayload {
            rows: (0..a.d())
                .map(|r| (0..a.n()).map(|c| sign_str(a.get(r, c))).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<SignMatrix, CliError> {
        let d = self.rows.len();
        let n = self.rows.first().map_or(0, Vec::len);
        if self.rows.iter().any(|r| r.len() != n) {
            return Err(CliError::Input("ragged sign matrix".into()));
        }
        let entries = self
            .rows
            .iter()
            .flatten()
            .map(|s| parse_sign(s))
            .collect::<Result<Vec<_>, _>>()?;
        input(SignMatrix::new(d, n, entries))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignMapPayload {
    pub n: usize,
    pub d: usize,
    /// Sign of every d-subset, keyed by its label (`"12"`, or `"1,10"` when
    /// `n ≥ 10`).
    pub values: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chirotope: Option<bool>,
    /// Failing relation when `chirotope` is false.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

fn parse_subset(label: &str, n: usize, d: usize) -> Result<Vec<usize>, CliError> {
    let parts: Vec<&str> = if n < 10 {
        label.split("").filter(|s| !s.is_empty()).collect()
    } else {
        label.split(',').collect()
    };
    let mut out = Vec::with_capacity(parts.len());
    for p in parts {
        let e: usize = p
            .parse()
            .map_err(|_| CliError::Input(format!("bad subset label {label:?}")))?;
        if e == 0 || e > n {
            return Err(CliError::Input(format!("element {e} outside 1..={n}")));
        }
        out.push(e - 1);
    }
    if out.len() != d || out.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Input(format!("{label:?} is not an increasing {d}-subset")));
    }
    Ok(out)
}

impl SignMapPayload {
    pub fn from_map(chi: &SignMap) -> Self {
        SignMapPayload {
            n: chi.n(),
            d: chi.d(),
            values: chi
                .entries()
                .map(|(s, v)| (subset_label(&s, chi.n()), sign_str(v)))
                .collect(),
            chirotope: None,
            witness: None,
        }
    }

    /// Every d-subset must be listed exactly once.
    pub fn to_map(&self) -> Result<SignMap, CliError> {
        input(GroundConfig::new(self.d, self.n))?;
        let mut chi = SignMap::zeros(self.n, self.d);
        for (label, v) in &self.values {
            let s = parse_subset(label, self.n, self.d)?;
            chi.set_tuple(&s, parse_sign(v)?);
        }
        let expected = chi.entries().count();
        if self.values.len() != expected {
            return Err(CliError::Input(format!(
                "sign map lists {} subsets, expected {expected}",
                self.values.len()
            )));
        }
        Ok(chi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignedVectorPayload {
    pub signs: Vec<String>,
}

impl SignedVectorPayload {
    pub fn from_vector(v: &SignedVector) -> Self {
        SignedVectorPayload {
            signs: v.signs().iter().map(|&s| sign_str(s)).collect(),
        }
    }

    pub fn to_vector(&self) -> Result<SignedVector, CliError> {
        Ok(SignedVector::new(
            self.signs.iter().map(|s| parse_sign(s)).collect::<Result<_, _>>()?,
        ))
    }
}

/// A hyperfield element: `{"t":"zero"}`, `{"t":"finite","v":"g^2"}`,
/// `{"t":"real","v":"-3/2"}` or `{"t":"phase","v":"1/2"}` (multiple of π).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tagged {
    pub t: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<String>,
}

fn rational_str(q: Rational64) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_rational(s: &str) -> Result<Rational64, CliError> {
    s.trim()
        .parse::<Rational64>()
        .map_err(|_| CliError::Input(format!("bad rational {s:?}")))
}

impl Tagged {
    pub fn from_elem(x: &HElem, h: &Hyperfield) -> Tagged {
        let (t, v) = match x {
            HElem::Zero => ("zero", None),
            HElem::Finite(_) => ("finite", Some(h.label(x))),
            HElem::Real(q) => ("real", Some(rational_str(*q))),
            HElem::Phase(q) => ("phase", Some(rational_str(*q))),
        };
        Tagged { t: t.into(), v }
    }

    pub fn to_elem(&self, h: &Hyperfield) -> Result<HElem, CliError> {
        let value = || {
            self.v
                .as_deref()
                .ok_or_else(|| CliError::Input(format!("element of type {:?} needs a value", self.t)))
        };
        let x = match self.t.as_str() {
            "zero" => HElem::Zero,
            "finite" => {
                let label = value()?;
                h.parse_label(label)
                    .filter(|x| matches!(x, HElem::Finite(_)))
                    .ok_or_else(|| CliError::Input(format!("{label:?} is no element of {}", h.name())))?
            }
            "real" => HElem::Real(parse_rational(value()?)?),
            "phase" => {
                let q = parse_rational(value()?)?;
                HElem::phase(*q.numer(), *q.denom())
            }
            other => return Err(CliError::Input(format!("unknown element type {other:?}"))),
        };
        input(h.check_element(&x))?;
        Ok(x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HMatrixPayload {
    pub hyperfield: String,
    pub rows: Vec<Vec<Tagged>>,
}

impl HMatrixPayload {
    pub fn from_matrix(m: &HMatrix, h: &Hyperfield) -> Self {
        HMatrixPayload {
            hyperfield: h.name().to_string(),
            rows: (0..m.d())
                .map(|r| (0..m.n()).map(|c| Tagged::from_elem(&m.get(r, c), h)).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<(Hyperfield, HMatrix), CliError> {
        let h = input(builtin(&self.hyperfield))?;
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_elem(&h)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let m = input(HMatrix::new(rows))?;
        Ok((h, m))
    }
}
