//! Complex dense linear-algebra helpers on top of `nalgebra`.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type CMatrix = DMatrix<Complex64>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn cr(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `e^{iθ}`.
pub fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// Singular value decomposition `m = U diag(σ) V*` with σ sorted descending.
/// `U` is `rows × k`, `V` is `cols × k`, `k = min(rows, cols)`.
pub struct Svd {
    pub u: CMatrix,
    pub sigma: Vec<f64>,
    pub v: CMatrix,
}

pub fn svd(m: &CMatrix) -> Svd {
    let (r, cdim) = m.shape();
    let k = r.min(cdim);
    if k == 0 {
        return Svd { u: CMatrix::zeros(r, 0), sigma: Vec::new(), v: CMatrix::zeros(cdim, 0) };
    }
    let s = m.clone().svd(true, true);
    let u = s.u.expect("u requested");
    let v = s.v_t.expect("v_t requested").adjoint();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| s.singular_values[b].total_cmp(&s.singular_values[a]));
    Svd {
        u: CMatrix::from_fn(r, k, |i, j| u[(i, order[j])]),
        sigma: order.iter().map(|&j| s.singular_values[j]).collect(),
        v: CMatrix::from_fn(cdim, k, |i, j| v[(i, order[j])]),
    }
}

/// Largest singular value (0 for empty matrices).
pub fn op_norm(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    svd(m).sigma.first().copied().unwrap_or(0.0)
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Orthonormal basis (as columns) of the kernel of `m`. Singular values
/// below `tol · σ_max · max(rows, cols)` count as zero.
pub fn nullspace(m: &CMatrix, tol: f64) -> CMatrix {
    let (r, cdim) = m.shape();
    if cdim == 0 {
        return CMatrix::zeros(0, 0);
    }
    if r == 0 {
        return CMatrix::identity(cdim, cdim);
    }
    let padded = if r < cdim {
        let mut p = CMatrix::zeros(cdim, cdim);
        p.view_mut((0, 0), (r, cdim)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let s = svd(&padded);
    let smax = s.sigma[0];
    let thr = tol * smax * r.max(cdim) as f64;
    let null: Vec<usize> = (0..cdim).filter(|&j| smax == 0.0 || s.sigma[j] <= thr).collect();
    CMatrix::from_fn(cdim, null.len(), |i, j| s.v[(i, null[j])])
}

/// Numerical rank with the same threshold convention as [`nullspace`].
pub fn rank(m: &CMatrix, tol: f64) -> usize {
    m.ncols() - nullspace(m, tol).ncols()
}

/// Orthonormal basis of the orthogonal complement of the column space.
pub fn image_complement(m: &CMatrix, tol: f64) -> CMatrix {
    if m.ncols() == 0 {
        return CMatrix::identity(m.nrows(), m.nrows());
    }
    nullspace(&m.adjoint(), tol)
}

/// Rescales each column by a unit phase so that its first entry of
/// non-negligible modulus is real and positive.
pub fn fix_column_phases(m: &mut CMatrix) {
    for j in 0..m.ncols() {
        let norm = m.column(j).norm();
        if norm == 0.0 {
            continue;
        }
        if let Some(z) = m.column(j).iter().find(|z| z.norm() > 1e-8 * norm).copied() {
            let phase = z.conj() / z.norm();
            for i in 0..m.nrows() {
                m[(i, j)] *= phase;
            }
        }
    }
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
pub fn hermitian_eigen(h: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = h.nrows();
    if n == 0 {
        return (Vec::new(), CMatrix::zeros(0, 0));
    }
    let sym = (h + h.adjoint()) * cr(0.5);
    let e = SymmetricEigen::new(sym);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| e.eigenvalues[a].total_cmp(&e.eigenvalues[b]));
    let vals = order.iter().map(|&k| e.eigenvalues[k]).collect();
    let vecs = CMatrix::from_fn(n, n, |i, j| e.eigenvectors[(i, order[j])]);
    (vals, vecs)
}

/// Unitary factor `P Q*` of the polar decomposition of a square matrix, or
/// `None` when the matrix is numerically singular.
pub fn polar_unitary(m: &CMatrix, rel_tol: f64) -> Option<CMatrix> {
    let n = m.nrows();
    if n != m.ncols() {
        return None;
    }
    if n == 0 {
        return Some(CMatrix::zeros(0, 0));
    }
    let s = svd(m);
    if s.sigma[n - 1] <= rel_tol * s.sigma[0] {
        return None;
    }
    Some(&s.u * s.v.adjoint())
}

pub fn random_complex(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

/// Random unitary from the QR factor of a random complex matrix.
pub fn random_unitary(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    if n == 0 {
        return CMatrix::zeros(0, 0);
    }
    let m = random_complex(n, n, rng);
    let s = svd(&m);
    &s.u * s.v.adjoint()
}

/// `‖m m* − χ I‖` in operator norm.
pub fn scalar_residual(gram: &CMatrix, chi: f64) -> f64 {
    let n = gram.nrows();
    let diff = gram - CMatrix::identity(n, n) * cr(chi);
    hermitian_eigen(&diff).0.iter().map(|v| v.abs()).fold(0.0, f64::max)
}
