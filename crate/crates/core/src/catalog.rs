//! Separated single quivers and the built-in Dynkin / extended Dynkin catalog.
//!
//! Every stored arrow points from an even vertex to an odd one. Block layouts
//! use odd vertices as row bands and even vertices as column bands, each in
//! catalog vertex order.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Vertex parity. Even vertices carry column bands, odd vertices row bands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Parity {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "even" | "∘" => Ok(Parity::Even),
            "odd" | "•" => Ok(Parity::Odd),
            other => Err(CatalogError::UnknownParity(other.to_string())),
        }
    }
}

/// One arrow, stored by vertex index; `tail` is even and `head` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub tail: usize,
    pub head: usize,
}

/// Invariant violations reported by [`validate_quiver`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    DuplicateVertex(String),
    UnknownVertex(String),
    /// Arrow whose tail is not even or whose head is not odd.
    NotSeparated { tail: String, head: String },
    /// Two arrows joining the same pair of vertices.
    NotSingle { tail: String, head: String },
    Disconnected,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "quiver has no vertices"),
            Violation::DuplicateVertex(v) => write!(f, "duplicate vertex id {v}"),
            Violation::UnknownVertex(v) => write!(f, "arrow references unknown vertex {v}"),
            Violation::NotSeparated { tail, head } => {
                write!(f, "not separated: arrow {tail} -> {head} must go even -> odd")
            }
            Violation::NotSingle { tail, head } => {
                write!(f, "not single: repeated arrow between {tail} and {head}")
            }
            Violation::Disconnected => write!(f, "underlying graph is disconnected"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown graph {0:?}")]
    UnknownGraph(String),
    #[error("invalid size {n} for family {family}: {reason}")]
    InvalidSize { family: String, n: usize, reason: String },
    #[error("invalid quiver: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("unknown parity {0:?}")]
    UnknownParity(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// Names of the built-in graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogName {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    ATilde(usize),
    DTilde(usize),
    E6Tilde,
    E7Tilde,
    E8Tilde,
}

impl CatalogName {
    pub fn is_extended(self) -> bool {
        matches!(
            self,
            CatalogName::ATilde(_)
                | CatalogName::DTilde(_)
                | CatalogName::E6Tilde
                | CatalogName::E7Tilde
                | CatalogName::E8Tilde
        )
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogName::A(n) => write!(f, "A{n}"),
            CatalogName::D(n) => write!(f, "D{n}"),
            CatalogName::E6 => write!(f, "E6"),
            CatalogName::E7 => write!(f, "E7"),
            CatalogName::E8 => write!(f, "E8"),
            CatalogName::ATilde(n) => write!(f, "A~{n}"),
            CatalogName::DTilde(n) => write!(f, "D~{n}"),
            CatalogName::E6Tilde => write!(f, "E6~"),
            CatalogName::E7Tilde => write!(f, "E7~"),
            CatalogName::E8Tilde => write!(f, "E8~"),
        }
    }
}

impl FromStr for CatalogName {
    type Err = CatalogError;

    /// Accepts `A3`, `A(3)`, `D~4`, `D~(4)`, `E6~`, `E~6`, case-insensitively.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || CatalogError::UnknownGraph(s.to_string());
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')' && *c != '_')
            .collect::<String>()
            .to_ascii_uppercase();
        let tilde = cleaned.contains('~');
        let body: String = cleaned.chars().filter(|c| *c != '~').collect();
        let mut chars = body.chars();
        let letter = chars.next().ok_or_else(unknown)?;
        let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
        Ok(match (letter, tilde, n) {
            ('A', false, n) => CatalogName::A(n),
            ('D', false, n) => CatalogName::D(n),
            ('A', true, n) => CatalogName::ATilde(n),
            ('D', true, n) => CatalogName::DTilde(n),
            ('E', false, 6) => CatalogName::E6,
            ('E', false, 7) => CatalogName::E7,
            ('E', false, 8) => CatalogName::E8,
            ('E', true, 6) => CatalogName::E6Tilde,
            ('E', true, 7) => CatalogName::E7Tilde,
            ('E', true, 8) => CatalogName::E8Tilde,
            _ => return Err(unknown()),
        })
    }
}

/// Unchecked quiver description, as read from JSON or assembled by hand.
#[derive(Debug, Clone, PartialEq)]
pub struct RawQuiver {
    pub name: String,
    pub vertices: Vec<(String, Parity)>,
    pub arrows: Vec<(String, String)>,
}

/// A validated separated single quiver. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct Quiver {
    name: String,
    catalog: Option<CatalogName>,
    ids: Vec<String>,
    parities: Vec<Parity>,
    arrows: Vec<Arrow>,
    neighbors: Vec<Vec<usize>>,
    delta: Option<Vec<i64>>,
}

/// Returns every invariant the raw quiver violates; empty means valid.
pub fn validate_quiver(raw: &RawQuiver) -> Vec<Violation> {
    let mut out = Vec::new();
    if raw.vertices.is_empty() {
        out.push(Violation::Empty);
        return out;
    }
    let mut index = HashMap::new();
    for (i, (id, _)) in raw.vertices.iter().enumerate() {
        if index.insert(id.as_str(), i).is_some() {
            out.push(Violation::DuplicateVertex(id.clone()));
        }
    }
    let mut seen = BTreeSet::new();
    let mut adj = vec![Vec::new(); raw.vertices.len()];
    for (t, h) in &raw.arrows {
        let (ti, hi) = match (index.get(t.as_str()), index.get(h.as_str())) {
            (Some(&ti), Some(&hi)) => (ti, hi),
            (None, _) => {
                out.push(Violation::UnknownVertex(t.clone()));
                continue;
            }
            (_, None) => {
                out.push(Violation::UnknownVertex(h.clone()));
                continue;
            }
        };
        if raw.vertices[ti].1 != Parity::Even || raw.vertices[hi].1 != Parity::Odd {
            out.push(Violation::NotSeparated { tail: t.clone(), head: h.clone() });
        }
        let key = (ti.min(hi), ti.max(hi));
        if !seen.insert(key) {
            out.push(Violation::NotSingle { tail: t.clone(), head: h.clone() });
        }
        adj[ti].push(hi);
        adj[hi].push(ti);
    }
    let mut visited = vec![false; raw.vertices.len()];
    let mut queue = VecDeque::from([0usize]);
    visited[0] = true;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !visited[w] {
                visited[w] = true;
                queue.push_back(w);
            }
        }
    }
    if visited.iter().any(|v| !v) {
        out.push(Violation::Disconnected);
    }
    out
}

impl Quiver {
    /// Validates and builds a quiver that is not part of the catalog.
    pub fn from_raw(raw: RawQuiver) -> Result<Quiver, CatalogError> {
        let violations = validate_quiver(&raw);
        if !violations.is_empty() {
            return Err(CatalogError::Invalid(violations));
        }
        let index: HashMap<&str, usize> =
            raw.vertices.iter().enumerate().map(|(i, (id, _))| (id.as_str(), i)).collect();
        let arrows: Vec<Arrow> = raw
            .arrows
            .iter()
            .map(|(t, h)| Arrow { tail: index[t.as_str()], head: index[h.as_str()] })
            .collect();
        let mut neighbors = vec![Vec::new(); raw.vertices.len()];
        for a in &arrows {
            neighbors[a.tail].push(a.head);
            neighbors[a.head].push(a.tail);
        }
        for n in &mut neighbors {
            n.sort_unstable();
        }
        Ok(Quiver {
            name: raw.name,
            catalog: None,
            ids: raw.vertices.iter().map(|(id, _)| id.clone()).collect(),
            parities: raw.vertices.iter().map(|(_, p)| *p).collect(),
            arrows,
            neighbors,
            delta: None,
        })
    }

    pub fn to_raw(&self) -> RawQuiver {
        RawQuiver {
            name: self.name.clone(),
            vertices: self.ids.iter().cloned().zip(self.parities.iter().copied()).collect(),
            arrows: self
                .arrows
                .iter()
                .map(|a| (self.ids[a.tail].clone(), self.ids[a.head].clone()))
                .collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn catalog_name(&self) -> Option<CatalogName> {
        self.catalog
    }

    pub fn is_extended(&self) -> bool {
        self.catalog.is_some_and(|c| c.is_extended())
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn index_of(&self, id: &str) -> Result<usize, CatalogError> {
        self.ids
            .iter()
            .position(|x| x == id)
            .ok_or_else(|| CatalogError::UnknownVertex(id.to_string()))
    }

    pub fn parity(&self, v: usize) -> Parity {
        self.parities[v]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Vertices of one parity, ascending.
    pub fn vertices_of(&self, parity: Parity) -> Vec<usize> {
        (0..self.ids.len()).filter(|&v| self.parities[v] == parity).collect()
    }

    /// The minimal positive imaginary root, for extended catalog graphs.
    pub fn delta(&self) -> Option<&[i64]> {
        self.delta.as_deref()
    }

    /// Index of the arrow joining `u` and `v`, in either order.
    pub fn arrow_between(&self, u: usize, v: usize) -> Option<usize> {
        self.arrows
            .iter()
            .position(|a| (a.tail == u && a.head == v) || (a.tail == v && a.head == u))
    }

    /// Arrows incident to `v`, ascending by arrow index.
    pub fn incident_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&k| self.arrows[k].tail == v || self.arrows[k].head == v)
            .collect()
    }

    /// Full subquiver on a connected vertex subset (given as sorted indices).
    /// Returns the subquiver and the map from its indices back to `self`.
    pub fn induced(&self, keep: &[usize]) -> Result<(Quiver, Vec<usize>), CatalogError> {
        let set: BTreeSet<usize> = keep.iter().copied().collect();
        let raw = RawQuiver {
            name: format!("{}|sub", self.name),
            vertices: set.iter().map(|&v| (self.ids[v].clone(), self.parities[v])).collect(),
            arrows: self
                .arrows
                .iter()
                .filter(|a| set.contains(&a.tail) && set.contains(&a.head))
                .map(|a| (self.ids[a.tail].clone(), self.ids[a.head].clone()))
                .collect(),
        };
        Ok((Quiver::from_raw(raw)?, set.into_iter().collect()))
    }
}

/// A catalog graph together with its δ (absent for finite Dynkin types).
#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub quiver: Quiver,
    pub delta: Option<Vec<i64>>,
}

fn invalid(family: &str, n: usize, reason: &str) -> CatalogError {
    CatalogError::InvalidSize { family: family.into(), n, reason: reason.into() }
}

/// Builder collecting labelled vertices and undirected edges; orientation is
/// fixed at the end so that every arrow runs even -> odd.
struct Builder {
    vertices: Vec<(String, Parity)>,
    edges: Vec<(String, String)>,
}

impl Builder {
    fn new() -> Self {
        Builder { vertices: Vec::new(), edges: Vec::new() }
    }

    fn vertex(&mut self, id: impl Into<String>, parity: Parity) {
        self.vertices.push((id.into(), parity));
    }

    fn edge(&mut self, u: impl Into<String>, v: impl Into<String>) {
        self.edges.push((u.into(), v.into()));
    }

    fn finish(self, name: CatalogName, delta: Option<Vec<i64>>) -> CatalogEntry {
        let parity: HashMap<String, Parity> = self.vertices.iter().cloned().collect();
        let arrows = self
            .edges
            .into_iter()
            .map(|(u, v)| if parity[&u] == Parity::Even { (u, v) } else { (v, u) })
            .collect();
        let raw = RawQuiver { name: name.to_string(), vertices: self.vertices, arrows };
        let mut quiver = Quiver::from_raw(raw).expect("catalog quivers are valid");
        quiver.catalog = Some(name);
        quiver.delta = delta.clone();
        CatalogEntry { name, quiver, delta }
    }
}

/// Parity of a vertex at graph distance `dist` from an odd vertex.
fn parity_at(dist: usize) -> Parity {
    if dist % 2 == 0 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// Builds a catalog entry. The size parameter of `name` must lie in range:
/// `A(n)` n ≥ 1, `D(n)` n ≥ 4, `A~(n)` n even ≥ 4, `D~(n)` n ≥ 4.
pub fn build_catalog_quiver(name: CatalogName) -> Result<CatalogEntry, CatalogError> {
    let mut b = Builder::new();
    match name {
        CatalogName::A(n) => {
            if n == 0 {
                return Err(invalid("A", n, "needs n >= 1"));
            }
            for k in 1..=n {
                b.vertex(format!("v{k}"), parity_at(k - 1));
            }
            for k in 1..n {
                b.edge(format!("v{k}"), format!("v{}", k + 1));
            }
            Ok(b.finish(name, None))
        }
        CatalogName::D(n) => {
            if n < 4 {
                return Err(invalid("D", n, "needs n >= 4"));
            }
            b.vertex("a1", Parity::Even);
            b.vertex("a2", Parity::Even);
            for k in 1..=n - 2 {
                b.vertex(format!("c{k}"), parity_at(k - 1));
            }
            b.edge("a1", "c1");
            b.edge("a2", "c1");
            for k in 1..n - 2 {
                b.edge(format!("c{k}"), format!("c{}", k + 1));
            }
            Ok(b.finish(name, None))
        }
        CatalogName::E6 => Ok(exceptional(name, &["a", "b", "c"], &[2, 1, 2], None)),
        CatalogName::E7 => Ok(exceptional(name, &["a", "b", "c"], &[3, 2, 1], None)),
        CatalogName::E8 => Ok(exceptional(name, &["a", "b", "c"], &[4, 2, 1], None)),
        CatalogName::ATilde(n) => {
            if n < 4 || n % 2 == 1 {
                return Err(invalid("A~", n, "needs n even and n >= 4"));
            }
            for k in 1..=n {
                b.vertex(format!("v{k}"), parity_at(k - 1));
            }
            for k in 1..=n {
                b.edge(format!("v{k}"), format!("v{}", k % n + 1));
            }
            Ok(b.finish(name, Some(vec![1; n])))
        }
        CatalogName::DTilde(n) => {
            if n < 4 {
                return Err(invalid("D~", n, "needs n >= 4"));
            }
            let m = n - 3;
            let b_parity = parity_at(m);
            b.vertex("a1", Parity::Even);
            b.vertex("a2", Parity::Even);
            b.vertex("b1", b_parity);
            b.vertex("b2", b_parity);
            for k in 1..=m {
                b.vertex(format!("c{k}"), parity_at(k - 1));
            }
            b.edge("a1", "c1");
            b.edge("a2", "c1");
            for k in 1..m {
                b.edge(format!("c{k}"), format!("c{}", k + 1));
            }
            b.edge("b1", format!("c{m}"));
            b.edge("b2", format!("c{m}"));
            let mut delta = vec![1, 1, 1, 1];
            delta.extend(std::iter::repeat_n(2, m));
            Ok(b.finish(name, Some(delta)))
        }
        CatalogName::E6Tilde => {
            // a1 a2 z c2 c1 b2 b1
            Ok(exceptional_ordered(
                name,
                &[("a", 2), ("c", 2), ("b", 2)],
                &[&["a1", "a2", "z", "c2", "c1", "b2", "b1"]],
                Some(vec![1, 2, 3, 2, 1, 2, 1]),
            ))
        }
        CatalogName::E7Tilde => Ok(exceptional_ordered(
            name,
            &[("a", 3), ("b", 3), ("c", 1)],
            &[&["a1", "a2", "a3", "z", "b3", "b2", "b1", "c1"]],
            Some(vec![1, 2, 3, 4, 3, 2, 1, 2]),
        )),
        CatalogName::E8Tilde => Ok(exceptional_ordered(
            name,
            &[("a", 5), ("b", 2), ("c", 1)],
            &[&["a1", "a2", "a3", "a4", "a5", "z", "b2", "b1", "c1"]],
            Some(vec![1, 2, 3, 4, 5, 6, 4, 2, 3]),
        )),
    }
}

/// Star graph with odd center `z`; arm `label` of length `len` has vertices
/// `label1` (leaf) .. `label{len}` (adjacent to z). Vertex order: arms in
/// the given order, leaf first, then z last.
fn exceptional(
    name: CatalogName,
    labels: &[&str],
    lens: &[usize],
    delta: Option<Vec<i64>>,
) -> CatalogEntry {
    let arms: Vec<(&str, usize)> = labels.iter().copied().zip(lens.iter().copied()).collect();
    let mut order: Vec<String> = Vec::new();
    for &(label, len) in &arms[..1] {
        order.extend((1..=len).map(|k| format!("{label}{k}")));
    }
    order.push("z".into());
    for &(label, len) in &arms[1..] {
        order.extend((1..=len).rev().map(|k| format!("{label}{k}")));
    }
    let refs: Vec<&str> = order.iter().map(|s| s.as_str()).collect();
    exceptional_ordered(name, &arms, &[&refs], delta)
}

fn exceptional_ordered(
    name: CatalogName,
    arms: &[(&str, usize)],
    order: &[&[&str]],
    delta: Option<Vec<i64>>,
) -> CatalogEntry {
    let mut dist: HashMap<String, usize> = HashMap::new();
    dist.insert("z".into(), 0);
    for &(label, len) in arms {
        for k in 1..=len {
            dist.insert(format!("{label}{k}"), len + 1 - k);
        }
    }
    let mut b = Builder::new();
    for id in order[0] {
        b.vertex(*id, parity_at(dist[*id]));
    }
    for &(label, len) in arms {
        b.edge(format!("{label}{len}"), "z");
        for k in 1..len {
            b.edge(format!("{label}{k}"), format!("{label}{}", k + 1));
        }
    }
    b.finish(name, delta)
}

/// Shorthand: build a catalog graph from its textual name.
pub fn catalog(name: &str) -> Result<CatalogEntry, CatalogError> {
    build_catalog_quiver(name.parse()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(vertices: &[(&str, Parity)], arrows: &[(&str, &str)]) -> RawQuiver {
        RawQuiver {
            name: "t".into(),
            vertices: vertices.iter().map(|(a, p)| (a.to_string(), *p)).collect(),
            arrows: arrows.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        }
    }

    #[test]
    fn names_round_trip() {
        for s in ["A3", "D5", "E6", "E7", "E8", "A~4", "D~7", "E6~", "E7~", "E8~"] {
            let n: CatalogName = s.parse().unwrap();
            assert_eq!(n.to_string(), s);
        }
        assert_eq!("D~(4)".parse::<CatalogName>().unwrap(), CatalogName::DTilde(4));
        assert_eq!("E~6".parse::<CatalogName>().unwrap(), CatalogName::E6Tilde);
        assert!("X9".parse::<CatalogName>().is_err());
    }

    #[test]
    fn sizes_are_checked() {
        assert!(matches!(
            build_catalog_quiver(CatalogName::ATilde(5)),
            Err(CatalogError::InvalidSize { .. })
        ));
        assert!(build_catalog_quiver(CatalogName::ATilde(2)).is_err());
        assert!(build_catalog_quiver(CatalogName::DTilde(3)).is_err());
        assert!(build_catalog_quiver(CatalogName::D(3)).is_err());
    }

    #[test]
    fn a_tilde_four_is_a_cycle() {
        let e = catalog("A~4").unwrap();
        assert_eq!(e.quiver.vertex_count(), 4);
        assert_eq!(e.quiver.arrows().len(), 4);
        assert_eq!(e.delta, Some(vec![1, 1, 1, 1]));
        assert_eq!(e.quiver.parity(0), Parity::Odd);
    }

    #[test]
    fn exceptional_layouts() {
        let e8 = catalog("E8~").unwrap();
        assert_eq!(e8.quiver.ids(), ["a1", "a2", "a3", "a4", "a5", "z", "b2", "b1", "c1"]);
        let e6 = catalog("E6~").unwrap();
        let odd: Vec<&str> =
            e6.quiver.vertices_of(Parity::Odd).iter().map(|&v| e6.quiver.id(v)).collect();
        assert_eq!(odd, ["a1", "z", "c1", "b1"]);
        let e7 = catalog("E7~").unwrap();
        let odd: Vec<&str> =
            e7.quiver.vertices_of(Parity::Odd).iter().map(|&v| e7.quiver.id(v)).collect();
        assert_eq!(odd, ["a2", "z", "b2"]);
        let e6f = catalog("E6").unwrap();
        assert_eq!(e6f.quiver.vertex_count(), 6);
        assert_eq!(catalog("E7").unwrap().quiver.vertex_count(), 7);
        assert_eq!(catalog("E8").unwrap().quiver.vertex_count(), 8);
    }

    #[test]
    fn branch_vertex_is_odd() {
        for s in ["D5", "E6", "E7", "E8", "E6~", "E7~", "E8~", "D~4"] {
            let q = catalog(s).unwrap().quiver;
            for v in 0..q.vertex_count() {
                if q.neighbors(v).len() >= 3 {
                    assert_eq!(q.parity(v), Parity::Odd, "{s} vertex {}", q.id(v));
                }
            }
        }
    }

    #[test]
    fn validation_reports_each_violation() {
        let ok = raw(&[("j", Parity::Even), ("i", Parity::Odd)], &[("j", "i")]);
        assert!(validate_quiver(&ok).is_empty());
        let dup = raw(&[("j", Parity::Even), ("i", Parity::Odd)], &[("j", "i"), ("j", "i")]);
        assert!(matches!(validate_quiver(&dup)[..], [Violation::NotSingle { .. }]));
        let oo = raw(&[("i", Parity::Odd), ("k", Parity::Odd)], &[("i", "k")]);
        assert!(matches!(validate_quiver(&oo)[..], [Violation::NotSeparated { .. }]));
        let split = raw(&[("j", Parity::Even), ("i", Parity::Odd)], &[]);
        assert_eq!(validate_quiver(&split), vec![Violation::Disconnected]);
        assert!(Quiver::from_raw(dup).is_err());
    }

    #[test]
    fn every_catalog_graph_validates() {
        for s in [
            "A1", "A2", "A5", "D4", "D6", "E6", "E7", "E8", "A~4", "A~6", "D~4", "D~5", "D~9",
            "E6~", "E7~", "E8~",
        ] {
            let q = catalog(s).unwrap().quiver;
            assert!(validate_quiver(&q.to_raw()).is_empty(), "{s}");
        }
    }
}
