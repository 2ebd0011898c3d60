//! JSON spec documents.
//!
//! ```json
//! {
//!   "dimension": 2,
//!   "name": "triangle",
//!   "outer": {"halfspaces": [{"label": "a", "normal": [0, 1], "offset": "0"}, …]},
//!   "holes": [{"vertices": [["1/4", "1/4"], …], "labels": ["h1", …]}],
//!   "characteristic": {"a": [0, 1], …},
//!   "nu": [1, 2]
//! }
//! ```
//!
//! Rationals are strings `"p/q"` (or plain integers); decimal literals,
//! duplicate keys, unknown fields and mismatched labels are rejected with a
//! location.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::de::{self, Deserialize, Deserializer, MapAccess, SeqAccess, Visitor};
use serde_json::Value;
use thiserror::Error;

use crate::charpair::{CharError, CharacteristicPair};
use crate::exactlin::{parse_rational, RatVector};
use crate::polytope::{build_polytope, polygon_from_vertices, Halfspace, PolytopeError, PolytopeWithHoles, SimplePolytope};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("at {path}: {message}")]
    Field { path: String, message: String },
}

fn field_err(path: &str, message: impl Into<String>) -> SpecError {
    SpecError::Field {
        path: path.to_string(),
        message: message.into(),
    }
}

/// Geometry or characteristic data rejected after parsing.
#[derive(Debug, Error)]
pub enum BuildError {
    #[error("{component}: {source}")]
    Polytope { component: String, source: PolytopeError },
    #[error(transparent)]
    Char(#[from] CharError),
}

/// JSON tree that keeps key order and refuses duplicate keys and non-integer
/// numbers while parsing, so serde_json can report line and column.
#[derive(Debug, Clone, PartialEq)]
enum Json {
    Null,
    Bool(bool),
    Int(BigInt),
    Str(String),
    Array(Vec<Json>),
    Object(Vec<(String, Json)>),
}

impl<'de> Deserialize<'de> for Json {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(JsonVisitor)
    }
}

struct JsonVisitor;

impl<'de> Visitor<'de> for JsonVisitor {
    type Value = Json;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a JSON value")
    }

    fn visit_unit<E>(self) -> Result<Json, E> {
        Ok(Json::Null)
    }

    fn visit_bool<E>(self, v: bool) -> Result<Json, E> {
        Ok(Json::Bool(v))
    }

    fn visit_i64<E>(self, v: i64) -> Result<Json, E> {
        Ok(Json::Int(v.into()))
    }

    fn visit_u64<E>(self, v: u64) -> Result<Json, E> {
        Ok(Json::Int(v.into()))
    }

    fn visit_f64<E: de::Error>(self, _: f64) -> Result<Json, E> {
        Err(E::custom(
            "non-integer number literal; write rationals as strings such as \"1/2\" (and large integers as strings)",
        ))
    }

    fn visit_str<E>(self, v: &str) -> Result<Json, E> {
        Ok(Json::Str(v.to_string()))
    }

    fn visit_string<E>(self, v: String) -> Result<Json, E> {
        Ok(Json::Str(v))
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Json, A::Error> {
        let mut out = Vec::new();
        while let Some(x) = seq.next_element::<Json>()? {
            out.push(x);
        }
        Ok(Json::Array(out))
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Json, A::Error> {
        let mut out: Vec<(String, Json)> = Vec::new();
        while let Some(k) = map.next_key::<String>()? {
            if out.iter().any(|(seen, _)| *seen == k) {
                return Err(de::Error::custom(format!("duplicate key \"{k}\"")));
            }
            let v = map.next_value::<Json>()?;
            out.push((k, v));
        }
        Ok(Json::Object(out))
    }
}

impl Json {
    fn kind(&self) -> &'static str {
        match self {
            Json::Null => "null",
            Json::Bool(_) => "a boolean",
            Json::Int(_) => "an integer",
            Json::Str(_) => "a string",
            Json::Array(_) => "an array",
            Json::Object(_) => "an object",
        }
    }

    fn object<'a>(&'a self, path: &str, allowed: &[&str]) -> Result<Fields<'a>, SpecError> {
        let Json::Object(entries) = self else {
            return Err(field_err(path, format!("expected an object, found {}", self.kind())));
        };
        if let Some((k, _)) = entries.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            return Err(field_err(path, format!("unknown field \"{k}\"")));
        }
        Ok(Fields { path: path.to_string(), entries })
    }

    fn array(&self, path: &str) -> Result<&[Json], SpecError> {
        match self {
            Json::Array(v) => Ok(v),
            other => Err(field_err(path, format!("expected an array, found {}", other.kind()))),
        }
    }

    fn string(&self, path: &str) -> Result<&str, SpecError> {
        match self {
            Json::Str(s) => Ok(s),
            other => Err(field_err(path, format!("expected a string, found {}", other.kind()))),
        }
    }

    fn integer(&self, path: &str) -> Result<BigInt, SpecError> {
        match self {
            Json::Int(i) => Ok(i.clone()),
            Json::Str(s) => s
                .trim()
                .parse()
                .map_err(|_| field_err(path, format!("expected an integer, found \"{s}\""))),
            other => Err(field_err(path, format!("expected an integer, found {}", other.kind()))),
        }
    }

    fn rational(&self, path: &str) -> Result<BigRational, SpecError> {
        match self {
            Json::Int(i) => Ok(BigRational::from_integer(i.clone())),
            Json::Str(s) => parse_rational(s)
                .ok_or_else(|| field_err(path, format!("expected a rational \"p/q\", found \"{s}\""))),
            other => Err(field_err(path, format!("expected a rational, found {}", other.kind()))),
        }
    }

    fn int_vector(&self, path: &str) -> Result<Vec<BigInt>, SpecError> {
        self.array(path)?
            .iter()
            .enumerate()
            .map(|(i, x)| x.integer(&format!("{path}[{i}]")))
            .collect()
    }
}

struct Fields<'a> {
    path: String,
    entries: &'a [(String, Json)],
}

impl<'a> Fields<'a> {
    fn get(&self, key: &str) -> Option<(&'a Json, String)> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| (v, format!("{}.{key}", self.path)))
    }

    fn require(&self, key: &str) -> Result<(&'a Json, String), SpecError> {
        self.get(key)
            .ok_or_else(|| field_err(&self.path, format!("missing field \"{key}\"")))
    }
}

/// One component (outer body or hole) as written in a spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentSpec {
    Halfspaces(Vec<Halfspace>),
    /// A counter-clockwise vertex cycle in the plane; facet `i` joins
    /// vertex `i` to vertex `i + 1`.
    Vertices { points: Vec<RatVector>, labels: Vec<String> },
}

impl ComponentSpec {
    pub fn labels(&self) -> Vec<String> {
        match self {
            ComponentSpec::Halfspaces(hs) => hs.iter().map(|h| h.label.clone()).collect(),
            ComponentSpec::Vertices { labels, .. } => labels.clone(),
        }
    }

    pub fn build(&self, dim: usize) -> Result<SimplePolytope, PolytopeError> {
        match self {
            ComponentSpec::Halfspaces(hs) => build_polytope(dim, hs.clone()),
            ComponentSpec::Vertices { points, labels } => {
                let poly = polygon_from_vertices(points)?;
                let hs = poly
                    .facets()
                    .iter()
                    .zip(labels)
                    .map(|(h, l)| h.clone().labeled(l.clone()))
                    .collect();
                build_polytope(dim, hs)
            }
        }
    }

    pub fn from_polytope(p: &SimplePolytope) -> Self {
        ComponentSpec::Halfspaces(p.facets().to_vec())
    }

    fn with_label_prefix(&self, prefix: &str) -> Self {
        match self {
            ComponentSpec::Halfspaces(hs) => ComponentSpec::Halfspaces(
                hs.iter()
                    .map(|h| h.clone().labeled(format!("{prefix}{}", h.label)))
                    .collect(),
            ),
            ComponentSpec::Vertices { points, labels } => ComponentSpec::Vertices {
                points: points.clone(),
                labels: labels.iter().map(|l| format!("{prefix}{l}")).collect(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecDocument {
    pub dimension: usize,
    pub name: Option<String>,
    pub description: Option<String>,
    pub outer: ComponentSpec,
    pub holes: Vec<ComponentSpec>,
    /// Characteristic vectors by facet label.
    pub characteristic: BTreeMap<String, Vec<BigInt>>,
    pub nu: Option<Vec<BigInt>>,
}

const TOP_FIELDS: [&str; 7] = ["dimension", "name", "description", "outer", "holes", "characteristic", "nu"];

impl SpecDocument {
    pub fn parse_file(path: &Path) -> Result<Self, SpecError> {
        let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse_str(&text)
    }

    pub fn parse_str(text: &str) -> Result<Self, SpecError> {
        let json: Json = serde_json::from_str(text)?;
        let top = json.object("$", &TOP_FIELDS)?;
        let (dim_json, dim_path) = top.require("dimension")?;
        let dimension = dim_json
            .integer(&dim_path)?
            .to_usize()
            .filter(|&d| d >= 2)
            .ok_or_else(|| field_err(&dim_path, "dimension must be an integer of at least 2"))?;
        let text_field = |key: &str| -> Result<Option<String>, SpecError> {
            top.get(key)
                .map(|(v, p)| v.string(&p).map(str::to_string))
                .transpose()
        };
        let name = text_field("name")?;
        let description = text_field("description")?;

        let (outer_json, outer_path) = top.require("outer")?;
        let outer = parse_component(outer_json, &outer_path, dimension, "F")?;
        let mut holes = Vec::new();
        if let Some((hs, path)) = top.get("holes") {
            for (k, h) in hs.array(&path)?.iter().enumerate() {
                holes.push(parse_component(h, &format!("{path}[{k}]"), dimension, &format!("H{}.F", k + 1))?);
            }
        }

        let mut seen = BTreeSet::new();
        for (c, comp) in std::iter::once(&outer).chain(&holes).enumerate() {
            for label in comp.labels() {
                if !seen.insert(label.clone()) {
                    let where_ = if c == 0 { "$.outer".to_string() } else { format!("$.holes[{}]", c - 1) };
                    return Err(field_err(&where_, format!("duplicate facet label \"{label}\"")));
                }
            }
        }

        let (char_json, char_path) = top.require("characteristic")?;
        let Json::Object(entries) = char_json else {
            return Err(field_err(&char_path, format!("expected an object, found {}", char_json.kind())));
        };
        let mut characteristic = BTreeMap::new();
        for (label, v) in entries {
            let path = format!("{char_path}.{label}");
            if !seen.contains(label) {
                return Err(field_err(&path, format!("no facet is labelled \"{label}\"")));
            }
            let vec = v.int_vector(&path)?;
            if vec.len() != dimension {
                return Err(field_err(&path, format!("expected {dimension} entries, found {}", vec.len())));
            }
            characteristic.insert(label.clone(), vec);
        }
        if let Some(missing) = seen.iter().find(|l| !characteristic.contains_key(*l)) {
            return Err(field_err(&char_path, format!("facet \"{missing}\" has no characteristic vector")));
        }

        let nu = match top.get("nu") {
            Some((v, p)) => {
                let nu = v.int_vector(&p)?;
                if nu.len() != dimension {
                    return Err(field_err(&p, format!("expected {dimension} entries, found {}", nu.len())));
                }
                Some(nu)
            }
            None => None,
        };

        Ok(Self {
            dimension,
            name,
            description,
            outer,
            holes,
            characteristic,
            nu,
        })
    }

    /// Facet labels in global order: outer first, then each hole.
    pub fn labels(&self) -> Vec<String> {
        std::iter::once(&self.outer)
            .chain(&self.holes)
            .flat_map(ComponentSpec::labels)
            .collect()
    }

    pub fn build_body(&self) -> Result<PolytopeWithHoles, BuildError> {
        let build = |c: &ComponentSpec, name: String| {
            c.build(self.dimension)
                .map_err(|source| BuildError::Polytope { component: name, source })
        };
        let outer = build(&self.outer, "outer".into())?;
        let holes = self
            .holes
            .iter()
            .enumerate()
            .map(|(k, h)| build(h, format!("hole {}", k + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        PolytopeWithHoles::build(outer, holes).map_err(|source| BuildError::Polytope {
            component: "body".into(),
            source,
        })
    }

    /// The (unvalidated) characteristic pair described by the document.
    pub fn to_pair(&self) -> Result<CharacteristicPair, BuildError> {
        let body = self.build_body()?;
        let lambda = self.labels().iter().map(|l| self.characteristic[l].clone()).collect();
        Ok(CharacteristicPair::new(body, lambda)?)
    }

    /// The same document with every facet label prefixed.
    pub fn with_label_prefix(&self, prefix: &str) -> Self {
        Self {
            outer: self.outer.with_label_prefix(prefix),
            holes: self.holes.iter().map(|h| h.with_label_prefix(prefix)).collect(),
            characteristic: self
                .characteristic
                .iter()
                .map(|(k, v)| (format!("{prefix}{k}"), v.clone()))
                .collect(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("dimension".into(), Value::from(self.dimension));
        if let Some(n) = &self.name {
            obj.insert("name".into(), Value::from(n.clone()));
        }
        if let Some(d) = &self.description {
            obj.insert("description".into(), Value::from(d.clone()));
        }
        obj.insert("outer".into(), component_json(&self.outer));
        obj.insert("holes".into(), Value::Array(self.holes.iter().map(component_json).collect()));
        let chars = self
            .characteristic
            .iter()
            .map(|(k, v)| (k.clone(), int_vec_json(v)))
            .collect();
        obj.insert("characteristic".into(), Value::Object(chars));
        if let Some(nu) = &self.nu {
            obj.insert("nu".into(), int_vec_json(nu));
        }
        Value::Object(obj)
    }
}

fn parse_component(json: &Json, path: &str, dim: usize, default_prefix: &str) -> Result<ComponentSpec, SpecError> {
    let fields = json.object(path, &["halfspaces", "vertices", "labels"])?;
    match (fields.get("halfspaces"), fields.get("vertices")) {
        (Some((hs, hp)), None) => {
            if fields.get("labels").is_some() {
                return Err(field_err(path, "\"labels\" is only allowed with \"vertices\""));
            }
            let mut out = Vec::new();
            for (i, h) in hs.array(&hp)?.iter().enumerate() {
                let p = format!("{hp}[{i}]");
                let f = h.object(&p, &["label", "normal", "offset"])?;
                let (l, lp) = f.require("label")?;
                let (n, np) = f.require("normal")?;
                let (o, op) = f.require("offset")?;
                let normal = n.int_vector(&np)?;
                if normal.len() != dim {
                    return Err(field_err(&np, format!("expected {dim} entries, found {}", normal.len())));
                }
                out.push(Halfspace::new(normal, o.rational(&op)?).labeled(l.string(&lp)?));
            }
            Ok(ComponentSpec::Halfspaces(out))
        }
        (None, Some((vs, vp))) => {
            if dim != 2 {
                return Err(field_err(&vp, "vertex cycles are only accepted in dimension 2"));
            }
            let mut points = Vec::new();
            for (i, v) in vs.array(&vp)?.iter().enumerate() {
                let p = format!("{vp}[{i}]");
                let coords = v
                    .array(&p)?
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c.rational(&format!("{p}[{j}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                if coords.len() != 2 {
                    return Err(field_err(&p, format!("expected 2 coordinates, found {}", coords.len())));
                }
                points.push(RatVector::new(coords));
            }
            let labels = match fields.get("labels") {
                Some((ls, lp)) => {
                    let ls = ls
                        .array(&lp)?
                        .iter()
                        .enumerate()
                        .map(|(i, l)| l.string(&format!("{lp}[{i}]")).map(str::to_string))
                        .collect::<Result<Vec<_>, _>>()?;
                    if ls.len() != points.len() {
                        return Err(field_err(&lp, format!("expected {} labels, found {}", points.len(), ls.len())));
                    }
                    ls
                }
                None => (1..=points.len()).map(|i| format!("{default_prefix}{i}")).collect(),
            };
            Ok(ComponentSpec::Vertices { points, labels })
        }
        (Some(_), Some(_)) => Err(field_err(path, "give either \"halfspaces\" or \"vertices\", not both")),
        (None, None) => Err(field_err(path, "missing field \"halfspaces\" or \"vertices\"")),
    }
}

/// Integers as JSON numbers when they fit in 64 bits, otherwise as strings.
pub fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(i) => Value::from(i),
        None => Value::from(x.to_string()),
    }
}

pub fn int_vec_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

pub fn rational_json(q: &BigRational) -> Value {
    Value::from(q.to_string())
}

fn component_json(c: &ComponentSpec) -> Value {
    match c {
        ComponentSpec::Halfspaces(hs) => {
            let list = hs
                .iter()
                .map(|h| {
                    serde_json::json!({
                        "label": h.label,
                        "normal": int_vec_json(&h.normal),
                        "offset": rational_json(&h.offset),
                    })
                })
                .collect();
            serde_json::json!({ "halfspaces": Value::Array(list) })
        }
        ComponentSpec::Vertices { points, labels } => {
            let pts: Vec<Value> = points
                .iter()
                .map(|p| Value::Array(p.coords().iter().map(rational_json).collect()))
                .collect();
            serde_json::json!({ "vertices": pts, "labels": labels })
        }
    }
}
