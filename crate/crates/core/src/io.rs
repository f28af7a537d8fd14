//! JSON documents for quivers, dimension vectors, representations and
//! family parameter points.
//!
//! Complex entries are `[re, im]` pairs and matrices are row-major; floats go
//! through `serde_json`'s shortest round-trip formatting, so a document
//! written and read back reproduces every entry bit for bit. Maps keyed by
//! vertex id are `BTreeMap`s so output is deterministic.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::catalog::{build_catalog_quiver, CatalogError, CatalogName, Parity, Quiver, RawQuiver};
use crate::families::ParameterPoint;
use crate::linalg::{c, CMatrix};
use crate::rep::{Character, RepError, Representation};
use crate::roots::GVector;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("{0}")]
    Schema(String),
}

fn schema(msg: impl Into<String>) -> IoError {
    IoError::Schema(msg.into())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: String,
    pub parity: Parity,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub tail: String,
    pub head: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuiverDoc {
    pub name: String,
    pub vertices: Vec<VertexDoc>,
    pub arrows: Vec<ArrowDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<i64>>,
}

impl QuiverDoc {
    pub fn from_quiver(q: &Quiver) -> QuiverDoc {
        let raw = q.to_raw();
        QuiverDoc {
            name: raw.name,
            vertices: raw.vertices.into_iter().map(|(id, parity)| VertexDoc { id, parity }).collect(),
            arrows: raw.arrows.into_iter().map(|(tail, head)| ArrowDoc { tail, head }).collect(),
            delta: q.delta().map(<[i64]>::to_vec),
        }
    }

    /// Catalog quivers are rebuilt from the catalog (recovering δ) when the
    /// document matches them exactly; anything else is validated as a raw
    /// quiver.
    pub fn to_quiver(&self) -> Result<Quiver, IoError> {
        let raw = RawQuiver {
            name: self.name.clone(),
            vertices: self.vertices.iter().map(|v| (v.id.clone(), v.parity)).collect(),
            arrows: self.arrows.iter().map(|a| (a.tail.clone(), a.head.clone())).collect(),
        };
        if let Ok(name) = self.name.parse::<CatalogName>() {
            if let Ok(entry) = build_catalog_quiver(name) {
                if entry.quiver.to_raw() == raw {
                    return Ok(entry.quiver);
                }
            }
        }
        Ok(Quiver::from_raw(raw)?)
    }
}

/// Either a catalog name or an inline quiver.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphRef {
    Name(String),
    Inline(QuiverDoc),
}

impl GraphRef {
    pub fn of(q: &Quiver) -> GraphRef {
        match q.catalog_name() {
            Some(name) => GraphRef::Name(name.to_string()),
            None => GraphRef::Inline(QuiverDoc::from_quiver(q)),
        }
    }

    pub fn resolve(&self) -> Result<Quiver, IoError> {
        match self {
            GraphRef::Name(name) => Ok(crate::catalog::catalog(name)?.quiver),
            GraphRef::Inline(doc) => doc.to_quiver(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GVectorDoc {
    pub graph: GraphRef,
    pub entries: BTreeMap<String, i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockDoc {
    pub tail: String,
    pub head: String,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepresentationDoc {
    pub graph: GraphRef,
    pub dims: BTreeMap<String, usize>,
    pub blocks: Vec<BlockDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<BTreeMap<String, f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParameterPointDoc {
    pub family: String,
    pub params: BTreeMap<String, f64>,
}

pub fn quiver_to_json(q: &Quiver) -> String {
    serde_json::to_string_pretty(&QuiverDoc::from_quiver(q)).expect("plain data")
}

pub fn quiver_from_json(text: &str) -> Result<Quiver, IoError> {
    serde_json::from_str::<QuiverDoc>(text)?.to_quiver()
}

pub fn gvector_to_doc(q: &Quiver, x: &GVector) -> GVectorDoc {
    GVectorDoc {
        graph: GraphRef::of(q),
        entries: q.ids().iter().cloned().zip(x.entries().iter().copied()).collect(),
    }
}

pub fn gvector_from_doc(doc: &GVectorDoc) -> Result<(Quiver, GVector), IoError> {
    let q = doc.graph.resolve()?;
    let mut out = vec![0; q.vertex_count()];
    for (id, &v) in &doc.entries {
        out[q.index_of(id)?] = v;
    }
    Ok((q, GVector(out)))
}

pub fn gvector_to_json(q: &Quiver, x: &GVector) -> String {
    serde_json::to_string_pretty(&gvector_to_doc(q, x)).expect("plain data")
}

pub fn gvector_from_json(text: &str) -> Result<(Quiver, GVector), IoError> {
    gvector_from_doc(&serde_json::from_str(text)?)
}

pub fn representation_to_doc(t: &Representation, character: Option<&Character>) -> RepresentationDoc {
    let q = t.quiver();
    let blocks = q
        .arrows()
        .iter()
        .zip(t.blocks())
        .map(|(a, m)| BlockDoc {
            tail: q.id(a.tail).to_string(),
            head: q.id(a.head).to_string(),
            matrix: (0..m.nrows())
                .map(|r| (0..m.ncols()).map(|s| [m[(r, s)].re, m[(r, s)].im]).collect())
                .collect(),
        })
        .collect();
    RepresentationDoc {
        graph: GraphRef::of(q),
        dims: q.ids().iter().cloned().zip(t.dims().iter().copied()).collect(),
        blocks,
        character: character.map(|ch| q.ids().iter().cloned().zip(ch.values.iter().copied()).collect()),
    }
}

/// Rebuilds the representation; blocks may be listed in any order but each
/// arrow must appear exactly once.
pub fn representation_from_doc(
    doc: &RepresentationDoc,
) -> Result<(Representation, Option<Character>), IoError> {
    let q = Arc::new(doc.graph.resolve()?);
    let mut dims = vec![0usize; q.vertex_count()];
    for (id, &d) in &doc.dims {
        dims[q.index_of(id)?] = d;
    }
    let mut blocks: Vec<Option<CMatrix>> = vec![None; q.arrows().len()];
    for b in &doc.blocks {
        let (t, h) = (q.index_of(&b.tail)?, q.index_of(&b.head)?);
        let k = q
            .arrows()
            .iter()
            .position(|a| a.tail == t && a.head == h)
            .ok_or_else(|| schema(format!("no arrow {} -> {}", b.tail, b.head)))?;
        if blocks[k].is_some() {
            return Err(schema(format!("arrow {} -> {} listed twice", b.tail, b.head)));
        }
        let (rows, cols) = (dims[h], dims[t]);
        let given_cols = b.matrix.first().map_or(cols, Vec::len);
        if b.matrix.len() != rows || given_cols != cols || b.matrix.iter().any(|r| r.len() != cols) {
            return Err(IoError::Rep(RepError::ShapeMismatch {
                arrow: k,
                expected: (rows, cols),
                actual: (b.matrix.len(), given_cols),
            }));
        }
        blocks[k] = Some(CMatrix::from_fn(rows, cols, |r, s| {
            let [re, im] = b.matrix[r][s];
            c(re, im)
        }));
    }
    let blocks: Vec<CMatrix> = blocks
        .into_iter()
        .enumerate()
        .map(|(k, b)| {
            b.ok_or_else(|| {
                let a = q.arrows()[k];
                schema(format!("missing block {} -> {}", q.id(a.tail), q.id(a.head)))
            })
        })
        .collect::<Result<_, _>>()?;
    let character = match &doc.character {
        Some(map) => {
            let mut values = vec![0.0; q.vertex_count()];
            for (id, &v) in map {
                values[q.index_of(id)?] = v;
            }
            Some(Character::new(values))
        }
        None => None,
    };
    Ok((Representation::new(q, dims, blocks)?, character))
}

pub fn representation_to_json(t: &Representation, character: Option<&Character>) -> String {
    serde_json::to_string_pretty(&representation_to_doc(t, character)).expect("plain data")
}

pub fn representation_from_json(text: &str) -> Result<(Representation, Option<Character>), IoError> {
    representation_from_doc(&serde_json::from_str(text)?)
}

pub fn parameter_point_to_json(p: &ParameterPoint) -> String {
    let doc = ParameterPointDoc { family: p.family.to_string(), params: p.params.clone() };
    serde_json::to_string_pretty(&doc).expect("plain data")
}

pub fn parameter_point_from_json(text: &str) -> Result<ParameterPoint, IoError> {
    let doc: ParameterPointDoc = serde_json::from_str(text)?;
    let family = doc.family.parse::<CatalogName>()?;
    Ok(ParameterPoint { family, params: doc.params })
}
