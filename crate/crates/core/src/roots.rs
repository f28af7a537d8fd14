//! Exact integer arithmetic on G-vectors: the Tits form, simple reflections,
//! parity sweeps, Coxeter transforms, the linear form L, root classification
//! and enumeration, and the reduction paths used to build representations.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::catalog::{Parity, Quiver};

/// Integer vector indexed by the vertices of a quiver (catalog order).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GVector(pub Vec<i64>);

impl GVector {
    pub fn zeros(n: usize) -> GVector {
        GVector(vec![0; n])
    }

    /// The simple root `e_k`.
    pub fn simple(n: usize, k: usize) -> GVector {
        let mut v = vec![0; n];
        v[k] = 1;
        GVector(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Nonzero with all entries nonnegative.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&v| v >= 0) && self.0.iter().any(|&v| v > 0)
    }

    /// All entries strictly positive.
    pub fn is_faithful(&self) -> bool {
        self.0.iter().all(|&v| v > 0)
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &GVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `Some(k)` when this is the simple root `e_k`.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (k, &v) in self.0.iter().enumerate() {
            match v {
                0 => {}
                1 if found.is_none() => found = Some(k),
                _ => return None,
            }
        }
        found
    }

    pub fn scaled(&self, m: i64) -> GVector {
        GVector(self.0.iter().map(|v| v * m).collect())
    }
}

impl fmt::Display for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("vector has {actual} entries, quiver has {expected} vertices")]
    IndexMismatch { expected: usize, actual: usize },
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("quiver {0} has no catalog delta")]
    NoDelta(String),
    #[error("vector {0} is not positive")]
    NotPositive(String),
    #[error("quiver {0} is not a catalog graph")]
    NotCatalog(String),
    #[error("invalid bound: {0}")]
    InvalidBound(String),
    #[error("search volume {volume} exceeds cap {cap}")]
    BoundTooLarge { volume: u128, cap: u128 },
    #[error("vector {0} is not a real singular root")]
    NotSingular(String),
    #[error("no reduction path found for {0}")]
    NoPathFound(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

/// Root classification tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootTag {
    NotRoot,
    RealSingular,
    RealRegular,
    Imaginary,
}

impl RootTag {
    pub fn as_str(self) -> &'static str {
        match self {
            RootTag::NotRoot => "NotRoot",
            RootTag::RealSingular => "RealSingular",
            RootTag::RealRegular => "RealRegular",
            RootTag::Imaginary => "Imaginary",
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, RootTag::RealSingular | RootTag::RealRegular)
    }
}

impl fmt::Display for RootTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootClass {
    pub tag: RootTag,
    /// Value of L; `None` on finite Dynkin graphs.
    pub l_value: Option<i64>,
    pub q_value: i64,
}

fn check(q: &Quiver, x: &GVector) -> Result<(), RootError> {
    if x.len() != q.vertex_count() {
        return Err(RootError::IndexMismatch { expected: q.vertex_count(), actual: x.len() });
    }
    Ok(())
}

fn delta_of(q: &Quiver) -> Result<&[i64], RootError> {
    q.delta().ok_or_else(|| RootError::NoDelta(q.name().to_string()))
}

/// Tits form: sum of squares minus the sum over arrows of tail·head.
pub fn tits_form(q: &Quiver, x: &GVector) -> Result<i64, RootError> {
    check(q, x)?;
    let squares: i64 = x.0.iter().map(|v| v * v).sum();
    let cross: i64 = q.arrows().iter().map(|a| x.0[a.tail] * x.0[a.head]).sum();
    Ok(squares - cross)
}

fn reflect_in_place(q: &Quiver, k: usize, x: &mut [i64]) {
    let s: i64 = q.neighbors(k).iter().map(|&l| x[l]).sum();
    x[k] = s - x[k];
}

/// σ_k: coordinate `k` becomes the neighbor sum minus itself.
pub fn simple_reflection(q: &Quiver, k: usize, x: &GVector) -> Result<GVector, RootError> {
    check(q, x)?;
    if k >= q.vertex_count() {
        return Err(RootError::VertexOutOfRange(k));
    }
    let mut y = x.0.clone();
    reflect_in_place(q, k, &mut y);
    Ok(GVector(y))
}

fn sweep_unchecked(q: &Quiver, parity: Parity, x: &[i64]) -> Vec<i64> {
    let mut y = x.to_vec();
    for k in 0..q.vertex_count() {
        if q.parity(k) == parity {
            reflect_in_place(q, k, &mut y);
        }
    }
    y
}

/// Product of all σ_k over vertices of one parity (ascending order; the
/// factors commute).
pub fn coxeter_sweep(q: &Quiver, parity: Parity, x: &GVector) -> Result<GVector, RootError> {
    check(q, x)?;
    Ok(GVector(sweep_unchecked(q, parity, &x.0)))
}

/// `c^t(x)` where `c` is the odd sweep followed by the even sweep.
pub fn coxeter_transform(q: &Quiver, x: &GVector, t: i64) -> Result<GVector, RootError> {
    check(q, x)?;
    let (first, second) = if t >= 0 { (Parity::Odd, Parity::Even) } else { (Parity::Even, Parity::Odd) };
    let mut y = x.0.clone();
    for _ in 0..t.unsigned_abs() {
        y = sweep_unchecked(q, first, &y);
        y = sweep_unchecked(q, second, &y);
    }
    Ok(GVector(y))
}

/// L(x) = Σ_odd δ_k x_k − Σ_even δ_k x_k on extended catalog graphs.
pub fn linear_form_l(q: &Quiver, x: &GVector) -> Result<i64, RootError> {
    check(q, x)?;
    let delta = delta_of(q)?;
    Ok((0..q.vertex_count())
        .map(|k| {
            let t = delta[k] * x.0[k];
            if q.parity(k) == Parity::Odd {
                t
            } else {
                -t
            }
        })
        .sum())
}

/// Classifies a positive vector on a Dynkin or extended Dynkin catalog graph.
pub fn classify_vector(q: &Quiver, x: &GVector) -> Result<RootClass, RootError> {
    check(q, x)?;
    if !x.is_positive() {
        return Err(RootError::NotPositive(x.to_string()));
    }
    let q_value = tits_form(q, x)?;
    let Some(name) = q.catalog_name() else {
        return Err(RootError::NoDelta(q.name().to_string()));
    };
    if !name.is_extended() {
        let tag = if q_value == 1 { RootTag::RealSingular } else { RootTag::NotRoot };
        return Ok(RootClass { tag, l_value: None, q_value });
    }
    let l = linear_form_l(q, x)?;
    let tag = match q_value {
        0 => RootTag::Imaginary,
        1 if l != 0 => RootTag::RealSingular,
        1 => RootTag::RealRegular,
        _ => RootTag::NotRoot,
    };
    Ok(RootClass { tag, l_value: Some(l), q_value })
}

/// Search caps for root enumeration.
#[derive(Debug, Clone, Copy)]
pub struct RootLimits {
    /// Largest box volume the exhaustive scan accepts.
    pub max_volume: u128,
    /// Largest number of real roots the reflection closure may produce.
    pub max_roots: usize,
}

impl Default for RootLimits {
    fn default() -> Self {
        RootLimits { max_volume: 50_000_000, max_roots: 2_000_000 }
    }
}

fn check_bound(q: &Quiver, bound: &GVector) -> Result<(), RootError> {
    check(q, bound)?;
    if bound.0.iter().any(|&b| b < 1) {
        return Err(RootError::InvalidBound(format!("every entry must be >= 1, got {bound}")));
    }
    Ok(())
}

/// Default enumeration bound: 3δ on extended graphs, 6 everywhere otherwise.
pub fn default_bound(q: &Quiver) -> GVector {
    match q.delta() {
        Some(d) => GVector(d.iter().map(|v| 3 * v).collect()),
        None => GVector(vec![6; q.vertex_count()]),
    }
}

/// Exhaustive scan of the box `0 <= x <= bound` for positive vectors with
/// Tits form 0 or 1. Works on any quiver; used as an oracle.
pub fn scan_box_roots(
    q: &Quiver,
    bound: &GVector,
    limits: RootLimits,
) -> Result<Vec<GVector>, RootError> {
    check_bound(q, bound)?;
    let volume: u128 = bound.0.iter().map(|&b| (b + 1) as u128).product();
    if volume > limits.max_volume {
        return Err(RootError::BoundTooLarge { volume, cap: limits.max_volume });
    }
    let n = q.vertex_count();
    let mut out = Vec::new();
    let mut x = GVector::zeros(n);
    loop {
        // odometer increment, last coordinate fastest
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if x.0[k] < bound.0[k] {
                x.0[k] += 1;
                for v in &mut x.0[k + 1..] {
                    *v = 0;
                }
                break;
            }
        }
        let t = tits_form(q, &x)?;
        if t == 0 || t == 1 {
            out.push(x.clone());
        }
    }
}

/// All positive roots `x <= bound` with their classification, in
/// lexicographic order. Real roots come from the reflection closure of the
/// simple roots; imaginary roots are the multiples of δ.
pub fn enumerate_positive_roots(
    q: &Quiver,
    bound: &GVector,
) -> Result<Vec<(GVector, RootClass)>, RootError> {
    enumerate_positive_roots_with(q, bound, RootLimits::default())
}

pub fn enumerate_positive_roots_with(
    q: &Quiver,
    bound: &GVector,
    limits: RootLimits,
) -> Result<Vec<(GVector, RootClass)>, RootError> {
    check_bound(q, bound)?;
    if q.catalog_name().is_none() {
        return Err(RootError::NotCatalog(q.name().to_string()));
    }
    let n = q.vertex_count();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for k in 0..n {
        let e = GVector::simple(n, k).0;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(r) = queue.pop_front() {
        for k in 0..n {
            let mut y = r.clone();
            reflect_in_place(q, k, &mut y);
            if y[k] > r[k] && y[k] <= bound.0[k] && !seen.contains(&y) {
                if seen.len() >= limits.max_roots {
                    return Err(RootError::BoundTooLarge {
                        volume: seen.len() as u128,
                        cap: limits.max_roots as u128,
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut roots: Vec<GVector> = seen.into_iter().map(GVector).collect();
    if let Some(delta) = q.delta() {
        let delta = GVector(delta.to_vec());
        let mut m = 1;
        while delta.scaled(m).le(bound) {
            roots.push(delta.scaled(m));
            m += 1;
        }
    }
    roots.sort();
    roots
        .into_iter()
        .map(|r| {
            let c = classify_vector(q, &r)?;
            Ok((r, c))
        })
        .collect()
}

/// One step of a reflection path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Sweep(Parity),
    Reflect(usize),
}

impl Step {
    fn apply(self, q: &Quiver, x: &[i64]) -> Vec<i64> {
        match self {
            Step::Sweep(p) => sweep_unchecked(q, p, x),
            Step::Reflect(k) => {
                let mut y = x.to_vec();
                reflect_in_place(q, k, &mut y);
                y
            }
        }
    }
}

/// `steps` are listed in the order they are applied to the input vector;
/// the input is recovered from `terminal` by applying them in reverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionPath {
    pub steps: Vec<Step>,
    pub terminal: GVector,
}

impl ReflectionPath {
    /// Rebuilds the original vector from the terminal.
    pub fn replay(&self, q: &Quiver) -> GVector {
        let mut x = self.terminal.0.clone();
        for s in self.steps.iter().rev() {
            x = s.apply(q, &x);
        }
        GVector(x)
    }

    /// Parities of the sweeps in the order they rebuild the input from the
    /// terminal (the order functors must be applied).
    pub fn build_order(&self) -> Vec<Parity> {
        self.steps
            .iter()
            .rev()
            .filter_map(|s| match s {
                Step::Sweep(p) => Some(*p),
                Step::Reflect(_) => None,
            })
            .collect()
    }
}

const GROWTH_LIMIT: i64 = 1 << 40;

fn step_cap(q: &Quiver, d: &GVector) -> usize {
    let n = q.vertex_count();
    let s: i64 = d.0.iter().map(|v| v.abs()).sum();
    4 * n * (s as usize + n) + 8
}

/// Alternating sweeps from `start` until the next sweep would leave the
/// positive orthant; succeeds when the vector reached is simple.
fn alternate_to_simple(q: &Quiver, d: &GVector, start: Parity, cap: usize) -> Option<ReflectionPath> {
    let mut x = d.0.clone();
    let mut steps = Vec::new();
    let mut p = start;
    for _ in 0..=cap {
        let y = sweep_unchecked(q, p, &x);
        if y.iter().any(|&v| v < 0) {
            let terminal = GVector(x);
            return terminal.simple_index().map(|_| ReflectionPath { steps, terminal });
        }
        if y.iter().any(|&v| v > GROWTH_LIMIT) {
            return None;
        }
        x = y;
        steps.push(Step::Sweep(p));
        p = p.flip();
    }
    None
}

/// Shortest alternating path from `d` down to a simple root, on any quiver.
/// Tie goes to the even-first alternation.
pub(crate) fn reduce_to_simple(q: &Quiver, d: &GVector) -> Option<ReflectionPath> {
    let cap = step_cap(q, d);
    let even = alternate_to_simple(q, d, Parity::Even, cap);
    let odd_cap = even.as_ref().map_or(cap, |p| p.steps.len().saturating_sub(1));
    let odd = if even.as_ref().is_some_and(|p| p.steps.is_empty()) {
        None
    } else {
        alternate_to_simple(q, d, Parity::Odd, odd_cap)
    };
    match (even, odd) {
        (Some(e), Some(o)) => Some(if o.steps.len() < e.steps.len() { o } else { e }),
        (e, o) => e.or(o),
    }
}

/// Alternating sweep path from a real singular root down to a simple root.
pub fn singular_reduction_path(q: &Quiver, d: &GVector) -> Result<ReflectionPath, RootError> {
    let class = classify_vector(q, d)?;
    if class.tag != RootTag::RealSingular {
        return Err(RootError::NotSingular(d.to_string()));
    }
    reduce_to_simple(q, d).ok_or_else(|| RootError::NoPathFound(d.to_string()))
}

fn alternate_to_zero(q: &Quiver, d: &GVector, start: Parity, cap: usize) -> Option<ReflectionPath> {
    let mut x = d.0.clone();
    let mut steps = Vec::new();
    let mut p = start;
    for _ in 0..=cap {
        if x.iter().any(|&v| v == 0) {
            return Some(ReflectionPath { steps, terminal: GVector(x) });
        }
        let y = sweep_unchecked(q, p, &x);
        if y.iter().any(|&v| v < 0) {
            return None;
        }
        x = y;
        steps.push(Step::Sweep(p));
        p = p.flip();
    }
    None
}

/// Alternating sweep path from a faithful real root `d < δ` to a root with
/// a zero coordinate. On `D~` the start parity follows the first chain
/// vertex carrying a 1; other graphs try both alternations.
pub fn faithful_reduction_path(q: &Quiver, d: &GVector) -> Result<ReflectionPath, RootError> {
    check(q, d)?;
    let na = |why: &str| RootError::NotApplicable(format!("{d}: {why}"));
    let delta = GVector(delta_of(q)?.to_vec());
    if !d.is_faithful() {
        return Err(na("not faithful"));
    }
    if !d.le(&delta) || *d == delta {
        return Err(na("not strictly below delta"));
    }
    if tits_form(q, d)? != 1 {
        return Err(na("not a real root"));
    }
    let cap = 8 * q.vertex_count() * (q.vertex_count() + 2);
    if let Some(crate::catalog::CatalogName::DTilde(n)) = q.catalog_name() {
        let chain: Vec<usize> = (1..=n - 3)
            .map(|k| q.index_of(&format!("c{k}")).expect("chain vertex"))
            .collect();
        if let Some(pos) = chain.iter().position(|&v| d.0[v] == 1) {
            let start = if pos == 0 {
                q.parity(q.index_of("a1").expect("leaf"))
            } else {
                q.parity(chain[pos - 1])
            };
            if let Some(p) = alternate_to_zero(q, d, start, cap) {
                return Ok(p);
            }
        }
    }
    let even = alternate_to_zero(q, d, Parity::Even, cap);
    let odd = alternate_to_zero(q, d, Parity::Odd, cap);
    match (even, odd) {
        (Some(e), Some(o)) => Ok(if o.steps.len() < e.steps.len() { o } else { e }),
        (e, o) => e.or(o).ok_or_else(|| RootError::NoPathFound(d.to_string())),
    }
}
