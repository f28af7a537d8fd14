//! Concrete representations: one complex matrix per arrow, block assembly,
//! characters and orthoscalarity.
//!
//! For an odd vertex `i` the row band `T_i→` stacks the blocks of all arrows
//! ending at `i` side by side; for an even vertex `j` the column band `T_j↓`
//! stacks the blocks of arrows leaving `j` on top of each other. The
//! representation is orthoscalar when every row Gram `T_i→ T_i→*` and every
//! column Gram `T_j↓* T_j↓` is a scalar matrix.

use std::sync::Arc;

use rand_chacha::ChaCha8Rng;

use crate::catalog::{Parity, Quiver};
use crate::linalg::{self, cr, CMatrix};
use crate::roots::GVector;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RepError {
    #[error("block for arrow {arrow} has shape {actual:?}, expected {expected:?}")]
    ShapeMismatch { arrow: usize, expected: (usize, usize), actual: (usize, usize) },
    #[error("expected {expected} entries, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("representations live on different quivers")]
    DifferentQuivers,
    #[error("character value {value} at vertex {vertex} must be positive")]
    NonPositiveCharacter { vertex: String, value: f64 },
    #[error("representation is zero")]
    ZeroRepresentation,
    #[error("representation is not orthoscalar (defect {defect:e})")]
    NotOrthoscalar { defect: f64 },
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
}

/// Matrices `T_α : T(tail) → T(head)` for every arrow, in arrow order.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    quiver: Arc<Quiver>,
    dims: Vec<usize>,
    blocks: Vec<CMatrix>,
}

impl Representation {
    pub fn new(
        quiver: Arc<Quiver>,
        dims: Vec<usize>,
        blocks: Vec<CMatrix>,
    ) -> Result<Representation, RepError> {
        if dims.len() != quiver.vertex_count() {
            return Err(RepError::LengthMismatch { expected: quiver.vertex_count(), actual: dims.len() });
        }
        if blocks.len() != quiver.arrows().len() {
            return Err(RepError::LengthMismatch {
                expected: quiver.arrows().len(),
                actual: blocks.len(),
            });
        }
        for (k, (a, b)) in quiver.arrows().iter().zip(&blocks).enumerate() {
            let expected = (dims[a.head], dims[a.tail]);
            if b.shape() != expected {
                return Err(RepError::ShapeMismatch { arrow: k, expected, actual: b.shape() });
            }
        }
        Ok(Representation { quiver, dims, blocks })
    }

    /// All blocks zero.
    pub fn zero(quiver: Arc<Quiver>, dims: Vec<usize>) -> Result<Representation, RepError> {
        let blocks = quiver
            .arrows()
            .iter()
            .map(|a| CMatrix::zeros(*dims.get(a.head).unwrap_or(&0), *dims.get(a.tail).unwrap_or(&0)))
            .collect();
        Representation::new(quiver, dims, blocks)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn quiver_arc(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> GVector {
        GVector(self.dims.iter().map(|&d| d as i64).collect())
    }

    pub fn blocks(&self) -> &[CMatrix] {
        &self.blocks
    }

    pub fn block(&self, arrow: usize) -> &CMatrix {
        &self.blocks[arrow]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Vertices with nonzero dimension.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    pub fn same_quiver(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.quiver, &other.quiver) || *self.quiver == *other.quiver
    }

    /// Largest entry modulus over all blocks.
    pub fn scale(&self) -> f64 {
        self.blocks.iter().map(linalg::max_abs).fold(0.0, f64::max)
    }

    /// Row band of odd vertex `i`, columns ordered by incident arrow index.
    pub fn row_band(&self, i: usize) -> CMatrix {
        let arrows = self.quiver.incident_arrows(i);
        let width: usize = arrows.iter().map(|&k| self.blocks[k].ncols()).sum();
        let mut m = CMatrix::zeros(self.dims[i], width);
        let mut off = 0;
        for k in arrows {
            let b = &self.blocks[k];
            m.view_mut((0, off), b.shape()).copy_from(b);
            off += b.ncols();
        }
        m
    }

    /// Column band of even vertex `j`, rows ordered by incident arrow index.
    pub fn column_band(&self, j: usize) -> CMatrix {
        let arrows = self.quiver.incident_arrows(j);
        let height: usize = arrows.iter().map(|&k| self.blocks[k].nrows()).sum();
        let mut m = CMatrix::zeros(height, self.dims[j]);
        let mut off = 0;
        for k in arrows {
            let b = &self.blocks[k];
            m.view_mut((off, 0), b.shape()).copy_from(b);
            off += b.nrows();
        }
        m
    }

    /// Gram matrix at a vertex: `T_i→ T_i→*` for odd, `T_j↓* T_j↓` for even.
    pub fn gram(&self, v: usize) -> CMatrix {
        match self.quiver.parity(v) {
            Parity::Odd => {
                let r = self.row_band(v);
                &r * r.adjoint()
            }
            Parity::Even => {
                let c = self.column_band(v);
                c.adjoint() * &c
            }
        }
    }

    /// `T'_α = U_head T_α U_tail*` for per-vertex matrices `U`.
    pub fn transformed(&self, maps: &[CMatrix]) -> Result<Representation, RepError> {
        if maps.len() != self.dims.len() {
            return Err(RepError::LengthMismatch { expected: self.dims.len(), actual: maps.len() });
        }
        let dims: Vec<usize> = maps.iter().map(|m| m.nrows()).collect();
        let blocks = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.blocks)
            .map(|(a, b)| &maps[a.head] * b * maps[a.tail].adjoint())
            .collect();
        Representation::new(self.quiver.clone(), dims, blocks)
    }

    /// Same representation in random orthonormal bases at every vertex.
    pub fn scrambled(&self, rng: &mut ChaCha8Rng) -> Representation {
        let maps: Vec<CMatrix> = self.dims.iter().map(|&d| linalg::random_unitary(d, rng)).collect();
        self.transformed(&maps).expect("unitaries preserve shapes")
    }

    /// Every block multiplied by a real factor.
    pub fn scaled(&self, s: f64) -> Representation {
        Representation {
            quiver: self.quiver.clone(),
            dims: self.dims.clone(),
            blocks: self.blocks.iter().map(|b| b * cr(s)).collect(),
        }
    }

    /// Replaces one block, keeping its shape.
    pub fn with_block(&self, arrow: usize, block: CMatrix) -> Result<Representation, RepError> {
        let mut blocks = self.blocks.clone();
        blocks[arrow] = block;
        Representation::new(self.quiver.clone(), self.dims.clone(), blocks)
    }
}

/// Nonnegative weights per vertex; `determined[v]` is false where the value
/// is a free positive parameter (outside the support).
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    pub values: Vec<f64>,
    pub determined: Vec<bool>,
}

impl Character {
    /// Character with every value marked determined.
    pub fn new(values: Vec<f64>) -> Character {
        let n = values.len();
        Character { values, determined: vec![true; n] }
    }

    pub fn get(&self, v: usize) -> f64 {
        self.values[v]
    }

    /// Max absolute difference over vertices determined in both.
    pub fn distance_on_support(&self, other: &Character) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .zip(self.determined.iter().zip(&other.determined))
            .filter(|(_, (a, b))| **a && **b)
            .map(|((x, y), _)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrthoReport {
    pub character: Character,
    /// Max over the support of `‖G_v − χ_v I‖` in operator norm.
    pub defect: f64,
    /// `trace(G_v) / dim(v)` on the support.
    pub scalar_targets: Vec<Option<f64>>,
}

/// Default value for character entries off the support.
pub const OFF_SUPPORT_CHARACTER: f64 = 1.0;

pub fn orthoscalarity_report(t: &Representation) -> OrthoReport {
    let n = t.dims.len();
    let mut targets = vec![None; n];
    let mut values = vec![OFF_SUPPORT_CHARACTER; n];
    let mut determined = vec![false; n];
    let mut defect: f64 = 0.0;
    for v in 0..n {
        let d = t.dims[v];
        if d == 0 {
            continue;
        }
        let g = t.gram(v);
        let chi = g.trace().re / d as f64;
        defect = defect.max(linalg::scalar_residual(&g, chi));
        targets[v] = Some(chi);
        values[v] = chi;
        determined[v] = true;
    }
    OrthoReport { character: Character { values, determined }, defect, scalar_targets: targets }
}

pub fn is_orthoscalar(t: &Representation, tol: f64) -> (bool, Character) {
    let r = orthoscalarity_report(t);
    (r.defect <= tol, r.character)
}

/// Block matrix with odd vertices as row bands and even vertices as column
/// bands, zero where no arrow exists.
pub fn assemble_block_matrix(t: &Representation) -> CMatrix {
    let q = &t.quiver;
    let odd = q.vertices_of(Parity::Odd);
    let even = q.vertices_of(Parity::Even);
    let offsets = |vs: &[usize]| {
        let mut out = vec![0; t.dims.len()];
        let mut acc = 0;
        for &v in vs {
            out[v] = acc;
            acc += t.dims[v];
        }
        (out, acc)
    };
    let (row_off, rows) = offsets(&odd);
    let (col_off, cols) = offsets(&even);
    let mut m = CMatrix::zeros(rows, cols);
    for (a, b) in q.arrows().iter().zip(&t.blocks) {
        m.view_mut((row_off[a.head], col_off[a.tail]), b.shape()).copy_from(b);
    }
    m
}

/// The simple representation at `g` with character 0 at `g` and the given
/// positive values elsewhere (the entry at `g` is ignored).
pub fn simple_rep(
    quiver: Arc<Quiver>,
    g: usize,
    off_support: &[f64],
) -> Result<(Representation, Character), RepError> {
    let n = quiver.vertex_count();
    if off_support.len() != n {
        return Err(RepError::LengthMismatch { expected: n, actual: off_support.len() });
    }
    for v in 0..n {
        if v != g && !(off_support[v] > 0.0) {
            return Err(RepError::NonPositiveCharacter {
                vertex: quiver.id(v).to_string(),
                value: off_support[v],
            });
        }
    }
    let mut dims = vec![0; n];
    dims[g] = 1;
    let mut values = off_support.to_vec();
    values[g] = 0.0;
    let rep = Representation::zero(quiver, dims)?;
    Ok((rep, Character::new(values)))
}

/// Block-diagonal direct sum of representations on the same quiver.
pub fn direct_sum(parts: &[Representation]) -> Result<Representation, RepError> {
    let first = parts.first().ok_or(RepError::ZeroRepresentation)?;
    if parts.iter().any(|p| !p.same_quiver(first)) {
        return Err(RepError::DifferentQuivers);
    }
    let q = first.quiver.clone();
    let n = q.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let blocks = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let mut m = CMatrix::zeros(dims[a.head], dims[a.tail]);
            let (mut r, mut c) = (0, 0);
            for p in parts {
                let b = &p.blocks[k];
                m.view_mut((r, c), b.shape()).copy_from(b);
                r += p.dims[a.head];
                c += p.dims[a.tail];
            }
            m
        })
        .collect();
    Representation::new(q, dims, blocks)
}

/// Row lengths (Euclidean norms) of a matrix.
pub fn row_lengths(m: &CMatrix) -> Vec<f64> {
    (0..m.nrows()).map(|i| m.row(i).norm()).collect()
}

/// Column lengths (Euclidean norms) of a matrix.
pub fn column_lengths(m: &CMatrix) -> Vec<f64> {
    (0..m.ncols()).map(|j| m.column(j).norm()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::linalg::{c, cis};

    fn q(name: &str) -> Arc<Quiver> {
        Arc::new(catalog(name).unwrap().quiver)
    }

    #[test]
    fn shapes_are_enforced() {
        let dt4 = q("D~4");
        let bad = vec![CMatrix::zeros(1, 1); 4];
        assert!(matches!(
            Representation::new(dt4.clone(), vec![1, 1, 1, 1, 2], bad),
            Err(RepError::ShapeMismatch { .. })
        ));
        let empty = Representation::zero(dt4, vec![0; 5]).unwrap();
        assert_eq!(assemble_block_matrix(&empty).shape(), (0, 0));
    }

    #[test]
    fn simple_rep_is_orthoscalar() {
        let dt4 = q("D~4");
        let (rep, chi) = simple_rep(dt4.clone(), 4, &[1.0; 5]).unwrap();
        assert_eq!(rep.dims(), &[0, 0, 0, 0, 1]);
        assert_eq!(chi.values, vec![1.0, 1.0, 1.0, 1.0, 0.0]);
        let r = orthoscalarity_report(&rep);
        assert_eq!(r.defect, 0.0);
        assert_eq!(r.scalar_targets[4], Some(0.0));
        assert!(matches!(
            simple_rep(dt4, 4, &[1.0, 0.0, 1.0, 1.0, 1.0]),
            Err(RepError::NonPositiveCharacter { .. })
        ));
    }

    #[test]
    fn a_tilde_unit_cycle_has_character_two() {
        let a4 = q("A~4");
        let one = CMatrix::from_element(1, 1, cr(1.0));
        let mut blocks = vec![one.clone(); 4];
        blocks[3] = CMatrix::from_element(1, 1, cis(0.7));
        let rep = Representation::new(a4, vec![1; 4], blocks).unwrap();
        let r = orthoscalarity_report(&rep);
        assert!(r.defect < 1e-15);
        assert!(r.character.values.iter().all(|v| (v - 2.0).abs() < 1e-15));
    }

    #[test]
    fn skewed_d_tilde_is_not_orthoscalar() {
        let dt4 = q("D~4");
        let col = |x: f64, y: f64| CMatrix::from_column_slice(2, 1, &[cr(x), cr(y)]);
        let blocks = vec![col(1.0, 0.0), col(1.0, 1.0), col(0.0, 1.0), col(0.0, 1.0)];
        let rep = Representation::new(dt4, vec![1, 1, 1, 1, 2], blocks).unwrap();
        let g = rep.gram(4);
        assert!((g[(0, 0)].re - 2.0).abs() < 1e-15 && (g[(1, 1)].re - 3.0).abs() < 1e-15);
        assert!((g[(0, 1)].re - 1.0).abs() < 1e-15);
        let (ok, _) = is_orthoscalar(&rep, 1e-9);
        assert!(!ok);
        assert_eq!(assemble_block_matrix(&rep).shape(), (2, 4));
    }

    #[test]
    fn direct_sum_is_block_diagonal() {
        let a4 = q("A~4");
        let blocks = vec![CMatrix::from_element(1, 1, c(1.0, 0.0)); 4];
        let rep = Representation::new(a4, vec![1; 4], blocks).unwrap();
        let s = direct_sum(&[rep.clone(), rep.scaled(2.0)]).unwrap();
        assert_eq!(s.dims(), &[2, 2, 2, 2]);
        assert_eq!(s.block(0)[(1, 1)], cr(2.0));
        assert_eq!(s.block(0)[(0, 1)], cr(0.0));
    }
}
