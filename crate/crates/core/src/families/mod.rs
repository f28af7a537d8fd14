//! Explicit families of indecomposable orthoscalar representations in
//! dimension δ for the extended Dynkin graphs.
//!
//! `A~` and `D~` representations are written down directly. For the `E~`
//! graphs the horizontal band at the branch vertex `z`, normalised so that
//! `χ_z = 1`, is the *basis* `D`: a matrix with orthonormal rows given by
//! angles and phases. The rest of the representation is recovered from `D`
//! by walking each arm outwards from `z` (see [`complete_basis`]): at every
//! vertex the known Gram block `G` fixes `χ = λ_max(G)`, and the next block
//! `N` must satisfy `N*N = χI − G` (or `NN* = χI − G`), which determines it
//! up to a unitary change of basis at the next vertex. A leaf requires
//! `χI − G = 0`.

mod chain;
mod cycle;
mod e6;
mod e7;
mod e8;

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{build_catalog_quiver, CatalogError, CatalogName, Parity, Quiver};
use crate::linalg::{self, cr, CMatrix};
use crate::rep::{orthoscalarity_report, RepError, Representation};

pub use chain::{construct_d_degenerate, construct_d_family, d_chain_squares, DParams};
pub use cycle::{construct_a_family, cycle_holonomy};
pub use e6::{complete_e6, construct_e6_basis, e6_quadratic, E6Quadratic};
pub use e7::{complete_e7, construct_e7_basis};
pub use e8::{complete_e8, construct_e8_basis};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FamilyError {
    #[error("{0} is not an extended Dynkin family")]
    NotExtended(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("missing parameter {0:?}")]
    MissingParameter(String),
    #[error("modulus {name} = {value} must be positive")]
    NonPositiveModulus { name: String, value: f64 },
    #[error("recurrence gives y_{index}^2 = {value} <= 0")]
    RecurrenceNegative { index: usize, value: f64 },
    #[error("x0^2 = y0^2 forces x_i = y_i; use the degenerate constructor")]
    Degenerate,
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("constraint violated (residual {residual:e})")]
    ConstraintViolated { residual: f64 },
    #[error("no solution for the dependent parameters ({what}; closest residual {residual:e})")]
    NoSolution { what: String, residual: f64 },
    #[error("completion infeasible: {0}")]
    CompletionInfeasible(String),
    #[error("sampling found no feasible point after {0} attempts")]
    SamplingFailed(usize),
}

/// Named real parameters of one family member. Angles and phases are in
/// radians; `scale` (E families) undoes the `χ_z = 1` normalisation.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterPoint {
    pub family: CatalogName,
    pub params: BTreeMap<String, f64>,
}

impl ParameterPoint {
    pub fn new(family: CatalogName) -> ParameterPoint {
        ParameterPoint { family, params: BTreeMap::new() }
    }

    pub fn with(mut self, name: &str, value: f64) -> ParameterPoint {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn set(&mut self, name: &str, value: f64) {
        self.params.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Result<f64, FamilyError> {
        self.params.get(name).copied().ok_or_else(|| FamilyError::MissingParameter(name.into()))
    }

    /// Value or a default when absent.
    pub fn get_or(&self, name: &str, default: f64) -> f64 {
        self.params.get(name).copied().unwrap_or(default)
    }
}

/// Horizontal band at `z` for `χ_z = 1`, with the neighbour each column
/// block belongs to.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisMatrix {
    pub family: CatalogName,
    pub d: CMatrix,
    /// (vertex id, column offset, width)
    pub bands: Vec<(String, usize, usize)>,
}

impl BasisMatrix {
    pub fn band(&self, vertex: &str) -> Option<CMatrix> {
        self.bands
            .iter()
            .find(|(v, _, _)| v == vertex)
            .map(|(_, off, w)| self.d.columns(*off, *w).into_owned())
    }

    /// `‖D D* − I‖` in operator norm.
    pub fn row_defect(&self) -> f64 {
        let n = self.d.nrows();
        linalg::op_norm(&(&self.d * self.d.adjoint() - CMatrix::identity(n, n)))
    }
}

/// Parameter bookkeeping of a family: `free = raw − constraints − gauge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParameterBudget {
    /// Real parameters of the parametrisation, including the overall scale.
    pub raw: usize,
    /// Independent real equations the parameters must satisfy.
    pub constraints: usize,
    /// Parameters acting by unitary equivalence only.
    pub gauge: usize,
    pub free: usize,
}

/// Parameter budget of an extended family.
pub fn parameter_budget(family: CatalogName) -> Result<ParameterBudget, FamilyError> {
    let (raw, constraints, gauge) = match family {
        // n − 1 positive moduli, one complex entry
        CatalogName::ATilde(n) => (n + 1, 0, 0),
        // x_0..x_{n−3}, y_0, φ1, φ2, θ
        CatalogName::DTilde(n) => (n + 2, 0, 0),
        // φ1–φ3, ψ1–ψ4, θ1–θ3, scale; one complex row relation; θ1 is a gauge
        CatalogName::E6Tilde => (11, 2, 1),
        // φ1–φ4, ψ1–ψ5, θ1, θ2, scale; one complex row relation and equal
        // column lengths at the c-leaf
        CatalogName::E7Tilde => (12, 3, 0),
        // φ1–φ6, ψ1–ψ6, ω, θ1, θ2, scale; one complex row relation, two
        // column length equalities at the c-leaf, equal spectra on the b-arm
        CatalogName::E8Tilde => (16, 6, 0),
        other => return Err(FamilyError::NotExtended(other.to_string())),
    };
    Ok(ParameterBudget { raw, constraints, gauge, free: raw - constraints - gauge })
}

/// Number of independent real parameters of the δ family (`|Q_v| + 1`).
pub fn count_free_parameters(family: CatalogName) -> Result<usize, FamilyError> {
    Ok(parameter_budget(family)?.free)
}

/// Names of the parameters a caller chooses freely, in a fixed order.
/// Gauge parameters are listed last and marked by [`gauge_parameters`].
pub fn free_parameter_names(family: CatalogName) -> Result<Vec<String>, FamilyError> {
    let names: Vec<String> = match family {
        CatalogName::ATilde(n) => {
            let mut v: Vec<String> = (1..=n).map(|k| format!("m{k}")).collect();
            v.push("phase".into());
            v
        }
        CatalogName::DTilde(n) => {
            let mut v: Vec<String> = (0..=n - 3).map(|k| format!("x{k}")).collect();
            v.extend(["y0", "phi1", "phi2", "theta"].map(String::from));
            v
        }
        CatalogName::E6Tilde => ["phi1", "phi2", "phi3", "psi1", "psi2", "psi3", "psi4", "scale", "theta1"]
            .map(String::from)
            .to_vec(),
        CatalogName::E7Tilde => ["phi1", "phi2", "phi3", "psi1", "psi2", "psi3", "psi4", "psi5", "scale"]
            .map(String::from)
            .to_vec(),
        CatalogName::E8Tilde => {
            ["phi1", "phi2", "phi5", "psi1", "psi2", "psi3", "psi4", "psi5", "omega", "scale"]
                .map(String::from)
                .to_vec()
        }
        other => return Err(FamilyError::NotExtended(other.to_string())),
    };
    Ok(names)
}

/// Free parameters that only change the representation up to unitary
/// equivalence.
pub fn gauge_parameters(family: CatalogName) -> Vec<&'static str> {
    match family {
        CatalogName::E6Tilde => vec!["theta1"],
        _ => Vec::new(),
    }
}

/// Parameters computed by [`solve_family_constraint`].
pub fn dependent_parameter_names(family: CatalogName) -> Vec<&'static str> {
    match family {
        CatalogName::E6Tilde => vec!["theta2", "theta3"],
        CatalogName::E7Tilde => vec!["phi4", "theta1", "theta2"],
        CatalogName::E8Tilde => vec!["phi4", "psi6", "phi3", "phi6", "theta1", "theta2"],
        _ => Vec::new(),
    }
}

/// Completes a point by solving for the dependent parameters.
pub fn solve_family_constraint(free: &ParameterPoint) -> Result<ParameterPoint, FamilyError> {
    match free.family {
        CatalogName::ATilde(_) | CatalogName::DTilde(_) => Ok(free.clone()),
        CatalogName::E6Tilde => e6::solve(free),
        CatalogName::E7Tilde => e7::solve(free),
        CatalogName::E8Tilde => e8::solve(free),
        other => Err(FamilyError::NotExtended(other.to_string())),
    }
}

/// Builds the representation of a (fully specified) parameter point.
pub fn construct_family(point: &ParameterPoint) -> Result<Representation, FamilyError> {
    match point.family {
        CatalogName::ATilde(n) => {
            let moduli: Vec<f64> =
                (1..n).map(|k| point.get(&format!("m{k}"))).collect::<Result<_, _>>()?;
            construct_a_family(n, &moduli, point.get(&format!("m{n}"))?, point.get("phase")?)
        }
        CatalogName::DTilde(n) => construct_d_family(n, &DParams::from_point(n, point)?),
        CatalogName::E6Tilde => complete_e6(&construct_e6_basis(point)?, point.get_or("scale", 1.0)),
        CatalogName::E7Tilde => complete_e7(&construct_e7_basis(point)?, point.get_or("scale", 1.0)),
        CatalogName::E8Tilde => complete_e8(&construct_e8_basis(point)?, point.get_or("scale", 1.0)),
        other => Err(FamilyError::NotExtended(other.to_string())),
    }
}

const SAMPLE_ATTEMPTS: usize = 20_000;

/// Uniform draw from `[lo, hi)`.
fn draw(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..hi)
}

/// Draws free parameters away from the degenerate loci and solves for the
/// dependent ones; retries until the point is feasible and constructible.
pub fn random_parameter_point(
    family: CatalogName,
    rng: &mut ChaCha8Rng,
) -> Result<ParameterPoint, FamilyError> {
    let names = free_parameter_names(family)?;
    let margin = 0.1;
    for _ in 0..SAMPLE_ATTEMPTS {
        let mut p = ParameterPoint::new(family);
        for name in &names {
            let modulus = name.starts_with('m') || name.starts_with('x') || name.starts_with('y');
            let v = if modulus || name == "scale" {
                draw(rng, 0.5, 2.0)
            } else if name.starts_with("theta") || name == "phase" {
                draw(rng, margin, 2.0 * PI - margin)
            } else {
                draw(rng, margin, PI / 2.0 - margin)
            };
            p.set(name, v);
        }
        if let CatalogName::DTilde(_) = family {
            let (x0, y0) = (p.get("x0")?, p.get("y0")?);
            if (x0 * x0 - y0 * y0).abs() < 0.1 {
                continue;
            }
        }
        let Ok(full) = solve_family_constraint(&p) else { continue };
        if construct_family(&full).is_ok() {
            return Ok(full);
        }
    }
    Err(FamilyError::SamplingFailed(SAMPLE_ATTEMPTS))
}

/// Vertex ids of the column blocks of the basis, in order.
pub fn basis_columns(family: CatalogName) -> Result<Vec<&'static str>, FamilyError> {
    match family {
        CatalogName::E6Tilde => Ok(vec!["a2", "b2", "c2"]),
        CatalogName::E7Tilde => Ok(vec!["a3", "c1", "b3"]),
        CatalogName::E8Tilde => Ok(vec!["a5", "c1", "b2"]),
        other => Err(FamilyError::NotExtended(other.to_string())),
    }
}

pub(crate) fn family_quiver(family: CatalogName) -> Result<Arc<Quiver>, FamilyError> {
    Ok(Arc::new(build_catalog_quiver(family)?.quiver))
}

pub(crate) fn basis_from_blocks(
    family: CatalogName,
    blocks: &[CMatrix],
) -> Result<BasisMatrix, FamilyError> {
    let cols = basis_columns(family)?;
    let rows = blocks[0].nrows();
    let width: usize = blocks.iter().map(|b| b.ncols()).sum();
    let mut d = CMatrix::zeros(rows, width);
    let mut bands = Vec::new();
    let mut off = 0;
    for (b, v) in blocks.iter().zip(cols) {
        d.view_mut((0, off), b.shape()).copy_from(b);
        bands.push((v.to_string(), off, b.ncols()));
        off += b.ncols();
    }
    Ok(BasisMatrix { family, d, bands })
}

/// Basis of a representation of an `E~` family: the `z` band divided by
/// `√χ_z`, returned with that scale.
pub fn extract_basis(t: &Representation) -> Result<(BasisMatrix, f64), FamilyError> {
    let q = t.quiver();
    let family = q.catalog_name().ok_or_else(|| FamilyError::NotExtended(q.name().into()))?;
    let cols = basis_columns(family)?;
    let z = q.index_of("z")?;
    let chi = orthoscalarity_report(t).character.values[z];
    let scale = chi.sqrt();
    let blocks: Vec<CMatrix> = cols
        .iter()
        .map(|v| {
            let k = q.arrow_between(z, q.index_of(v).expect("catalog vertex")).expect("arm arrow");
            t.block(k) * cr(1.0 / scale)
        })
        .collect();
    Ok((basis_from_blocks(family, &blocks)?, scale))
}

/// Collects blocks by vertex name (rows always at the odd vertex) and
/// produces the representation.
pub(crate) struct Assembler {
    q: Arc<Quiver>,
    dims: Vec<usize>,
    blocks: Vec<Option<CMatrix>>,
}

impl Assembler {
    pub(crate) fn new(q: Arc<Quiver>, dims: Vec<usize>) -> Assembler {
        let n = q.arrows().len();
        Assembler { q, dims, blocks: vec![None; n] }
    }

    pub(crate) fn dim(&self, v: &str) -> usize {
        self.dims[self.q.index_of(v).expect("catalog vertex")]
    }

    pub(crate) fn parity(&self, v: &str) -> Parity {
        self.q.parity(self.q.index_of(v).expect("catalog vertex"))
    }

    /// Stores `m` as the block between `u` and `v` (rows at the odd one).
    pub(crate) fn set(&mut self, u: &str, v: &str, m: CMatrix) {
        let (iu, iv) = (self.q.index_of(u).expect("vertex"), self.q.index_of(v).expect("vertex"));
        let k = self.q.arrow_between(iu, iv).expect("adjacent vertices");
        self.blocks[k] = Some(m);
    }

    pub(crate) fn finish(self) -> Result<Representation, FamilyError> {
        let blocks = self
            .q
            .arrows()
            .iter()
            .zip(self.blocks)
            .map(|(a, b)| b.unwrap_or_else(|| CMatrix::zeros(self.dims[a.head], self.dims[a.tail])))
            .collect();
        Ok(Representation::new(self.q, self.dims, blocks)?)
    }
}

/// Relative tolerance of the arm completion.
const PEEL_TOL: f64 = 1e-9;

/// Walks one arm `path = [z, v1, …, leaf]` outwards, given the block between
/// `z` and `v1` (rows at `z`).
pub(crate) fn peel_arm(asm: &mut Assembler, path: &[&str], first: CMatrix) -> Result<(), FamilyError> {
    let mut block = first;
    asm.set(path[0], path[1], block.clone());
    for idx in 1..path.len() {
        let v = path[idx];
        let gram = match asm.parity(v) {
            Parity::Even => block.adjoint() * &block,
            Parity::Odd => &block * block.adjoint(),
        };
        let (vals, vecs) = linalg::hermitian_eigen(&gram);
        let chi = *vals.last().unwrap_or(&0.0);
        let scale = chi.max(1.0);
        let d = vals.len();
        // eigenvalues of χI − G, descending, with eigenvectors
        let rest: Vec<f64> = vals.iter().map(|l| (chi - l).max(0.0)).collect();
        let Some(&next) = path.get(idx + 1) else {
            if rest.iter().any(|&r| r > PEEL_TOL * scale) {
                return Err(FamilyError::CompletionInfeasible(format!(
                    "leaf {v} Gram is not scalar (spread {:e})",
                    rest.iter().fold(0.0f64, |m, r| m.max(*r))
                )));
            }
            break;
        };
        let k = asm.dim(next);
        if k > d || (k < d && rest[k] > PEEL_TOL * scale) {
            return Err(FamilyError::CompletionInfeasible(format!(
                "at {v}: χI − G has rank above {k}"
            )));
        }
        // the k largest of χ − λ belong to the k smallest λ
        let mut n = CMatrix::zeros(d, k);
        for s in 0..k {
            let w = rest[s].sqrt();
            for r in 0..d {
                n[(r, s)] = vecs[(r, s)] * cr(w);
            }
        }
        linalg::fix_column_phases(&mut n);
        block = match asm.parity(v) {
            Parity::Even => n.adjoint(),
            Parity::Odd => n,
        };
        asm.set(v, next, block.clone());
    }
    Ok(())
}

/// Arms of an `E~` graph, as paths starting at `z`.
fn arms(family: CatalogName) -> Result<Vec<Vec<&'static str>>, FamilyError> {
    Ok(match family {
        CatalogName::E6Tilde => vec![vec!["z", "a2", "a1"], vec!["z", "b2", "b1"], vec!["z", "c2", "c1"]],
        CatalogName::E7Tilde => {
            vec![vec!["z", "a3", "a2", "a1"], vec!["z", "c1"], vec!["z", "b3", "b2", "b1"]]
        }
        CatalogName::E8Tilde => vec![
            vec!["z", "a5", "a4", "a3", "a2", "a1"],
            vec!["z", "c1"],
            vec!["z", "b2", "b1"],
        ],
        other => return Err(FamilyError::NotExtended(other.to_string())),
    })
}

/// Recovers the full representation from any basis (not necessarily in
/// normal form) by completing every arm; blocks are multiplied by `scale`.
pub fn complete_basis(basis: &BasisMatrix, scale: f64) -> Result<Representation, FamilyError> {
    let q = family_quiver(basis.family)?;
    let dims: Vec<usize> = q.delta().expect("extended").iter().map(|&d| d as usize).collect();
    if basis.d.nrows() != dims[q.index_of("z")?] {
        return Err(FamilyError::CompletionInfeasible("basis has the wrong number of rows".into()));
    }
    let mut asm = Assembler::new(q, dims);
    for path in arms(basis.family)? {
        let first = basis
            .band(path[1])
            .ok_or_else(|| FamilyError::CompletionInfeasible(format!("no band for {}", path[1])))?;
        peel_arm(&mut asm, &path, first)?;
    }
    Ok(asm.finish()?.scaled(scale))
}

/// Checks rows of `D` are orthonormal within `tol`.
pub(crate) fn check_rows(basis: &BasisMatrix, tol: f64) -> Result<(), FamilyError> {
    let residual = basis.row_defect();
    if residual > tol {
        return Err(FamilyError::ConstraintViolated { residual });
    }
    Ok(())
}

/// Solves `a e^{iα} + b e^{iβ} + p = 0` for `a, b ≥ 0`. Returns the branch
/// with the smallest `α ∈ [0, 2π)`.
pub fn solve_two_phases(a: f64, b: f64, p: num_complex::Complex64, what: &str) -> Result<(f64, f64), FamilyError> {
    let r = p.norm();
    let gap = (r - a - b).max((a - b).abs() - r).max(0.0);
    let tol = 1e-12 * (a + b + r).max(1.0);
    if gap > tol {
        return Err(FamilyError::NoSolution { what: what.into(), residual: gap });
    }
    let wrap = |x: f64| x.rem_euclid(2.0 * PI);
    let target = (-p).arg();
    if a <= tol && b <= tol {
        return Ok((0.0, 0.0));
    }
    if r <= tol {
        return Ok((0.0, PI));
    }
    if a <= tol {
        return Ok((0.0, wrap(target)));
    }
    if b <= tol {
        return Ok((wrap(target), 0.0));
    }
    let cos_g = ((a * a + r * r - b * b) / (2.0 * a * r)).clamp(-1.0, 1.0);
    let g = cos_g.acos();
    let mut best: Option<(f64, f64)> = None;
    for s in [1.0, -1.0] {
        let alpha = wrap(target + s * g);
        let u = num_complex::Complex64::from_polar(a, alpha);
        let v = -p - u;
        let beta = wrap(v.arg());
        if best.is_none_or(|(ba, _)| alpha < ba) {
            best = Some((alpha, beta));
        }
    }
    Ok(best.expect("two branches"))
}
