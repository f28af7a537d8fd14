//! Morphism spaces between representations, Schur testing, unitary
//! equivalence and splitting into indecomposable summands.
//!
//! A morphism `C: T → T̃` is a family of matrices `C_v : T(v) → T̃(v)`. In
//! `Rep(Q)` it must satisfy `C_head T_α = T̃_α C_tail` for every arrow; in
//! the Hilbert category additionally `C_tail T_α* = T̃_α* C_head`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{self, c, cr, CMatrix};
use crate::rep::{direct_sum, orthoscalarity_report, RepError, Representation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    RepQ,
    RepQH,
}

/// One matrix per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct Morphism {
    pub maps: Vec<CMatrix>,
}

impl Morphism {
    /// Largest intertwining residual `‖C_head T_α − T̃_α C_tail‖`.
    pub fn forward_residual(&self, t: &Representation, tt: &Representation) -> f64 {
        t.quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                linalg::op_norm(&(&self.maps[a.head] * t.block(k) - tt.block(k) * &self.maps[a.tail]))
            })
            .fold(0.0, f64::max)
    }

    /// Largest adjoint residual `‖C_tail T_α* − T̃_α* C_head‖`.
    pub fn adjoint_residual(&self, t: &Representation, tt: &Representation) -> f64 {
        t.quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                linalg::op_norm(
                    &(&self.maps[a.tail] * t.block(k).adjoint()
                        - tt.block(k).adjoint() * &self.maps[a.head]),
                )
            })
            .fold(0.0, f64::max)
    }

    pub fn adjoint(&self) -> Morphism {
        Morphism { maps: self.maps.iter().map(|m| m.adjoint()).collect() }
    }
}

/// Basis of the morphism space `T → T̃`, from the nullspace of the flattened
/// homogeneous system (unknowns are the entries of every `C_v`, column-major).
pub fn morphism_space(
    t: &Representation,
    tt: &Representation,
    category: Category,
    tol: f64,
) -> Result<Vec<Morphism>, RepError> {
    if !t.same_quiver(tt) {
        return Err(RepError::DifferentQuivers);
    }
    let q = t.quiver();
    let n = q.vertex_count();
    let (d, e) = (t.dims(), tt.dims());
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + e[v] * d[v];
    }
    let unknowns = offset[n];
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    // index of unknown C_v[r, s]
    let idx = |v: usize, r: usize, s: usize| offset[v] + r + s * e[v];
    let mut rows: Vec<Vec<(usize, num_complex::Complex64)>> = Vec::new();
    for (k, a) in q.arrows().iter().enumerate() {
        let (i, j) = (a.head, a.tail);
        let (tb, ttb) = (t.block(k), tt.block(k));
        // C_i T − T̃ C_j = 0, shape e_i × d_j
        for r in 0..e[i] {
            for s in 0..d[j] {
                let mut row = Vec::new();
                for m in 0..d[i] {
                    row.push((idx(i, r, m), tb[(m, s)]));
                }
                for m in 0..e[j] {
                    row.push((idx(j, m, s), -ttb[(r, m)]));
                }
                rows.push(row);
            }
        }
        if category == Category::RepQH {
            // C_j T* − T̃* C_i = 0, shape e_j × d_i
            for r in 0..e[j] {
                for s in 0..d[i] {
                    let mut row = Vec::new();
                    for m in 0..d[j] {
                        row.push((idx(j, r, m), tb[(s, m)].conj()));
                    }
                    for m in 0..e[i] {
                        row.push((idx(i, m, s), -ttb[(m, r)].conj()));
                    }
                    rows.push(row);
                }
            }
        }
    }
    let mut system = CMatrix::zeros(rows.len(), unknowns);
    for (r, row) in rows.iter().enumerate() {
        for &(col, val) in row {
            system[(r, col)] += val;
        }
    }
    let null = linalg::nullspace(&system, tol);
    Ok((0..null.ncols())
        .map(|b| Morphism {
            maps: (0..n)
                .map(|v| CMatrix::from_fn(e[v], d[v], |r, s| null[(idx(v, r, s), b)]))
                .collect(),
        })
        .collect())
}

pub fn morphism_space_dim(
    t: &Representation,
    tt: &Representation,
    category: Category,
    tol: f64,
) -> Result<usize, RepError> {
    Ok(morphism_space(t, tt, category, tol)?.len())
}

/// True when the `Rep(Q)` endomorphism algebra is one-dimensional.
pub fn is_schur(t: &Representation, tol: f64) -> Result<bool, RepError> {
    if t.is_zero() {
        return Err(RepError::ZeroRepresentation);
    }
    Ok(morphism_space_dim(t, t, Category::RepQ, tol)? == 1)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceOutcome {
    pub equivalent: bool,
    /// Unitary intertwiner `U` with `U_head T_α = T̃_α U_tail`, when found.
    pub witness: Option<Morphism>,
    /// Set when the Hilbert morphism space is nonzero but no invertible
    /// element was found.
    pub diagnostic: Option<String>,
}

impl EquivalenceOutcome {
    fn no() -> Self {
        EquivalenceOutcome { equivalent: false, witness: None, diagnostic: None }
    }
}

const SEARCH_SEED: u64 = 0x000e_715c_a1a5;
const WITNESS_ATTEMPTS: usize = 6;

/// Decides unitary equivalence by searching the Hilbert morphism space for
/// an invertible element and taking its polar unitary factor.
pub fn unitary_equivalent(t: &Representation, tt: &Representation, tol: f64) -> EquivalenceOutcome {
    if !t.same_quiver(tt) || t.dims() != tt.dims() {
        return EquivalenceOutcome::no();
    }
    let scale = t.scale().max(tt.scale()).max(1.0);
    let (ra, rb) = (orthoscalarity_report(t), orthoscalarity_report(tt));
    let chi_scale = ra.character.values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    if ra.character.distance_on_support(&rb.character) > tol * chi_scale {
        return EquivalenceOutcome::no();
    }
    let basis = match morphism_space(t, tt, Category::RepQH, 1e-9) {
        Ok(b) => b,
        Err(_) => return EquivalenceOutcome::no(),
    };
    if basis.is_empty() {
        return EquivalenceOutcome::no();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEARCH_SEED);
    for _ in 0..WITNESS_ATTEMPTS {
        let coeffs: Vec<_> =
            basis.iter().map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let mut unitary = Vec::with_capacity(t.dims().len());
        let mut ok = true;
        for v in 0..t.dims().len() {
            let mut m = CMatrix::zeros(tt.dims()[v], t.dims()[v]);
            for (b, z) in basis.iter().zip(&coeffs) {
                m += &b.maps[v] * *z;
            }
            match linalg::polar_unitary(&m, 1e-8) {
                Some(u) => unitary.push(u),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let w = Morphism { maps: unitary };
        if w.forward_residual(t, tt) <= tol * scale {
            return EquivalenceOutcome { equivalent: true, witness: Some(w), diagnostic: None };
        }
    }
    EquivalenceOutcome {
        equivalent: false,
        witness: None,
        diagnostic: Some(format!(
            "Hilbert morphism space has dimension {} but no invertible unitary witness was found",
            basis.len()
        )),
    }
}

const SPLIT_ATTEMPTS: usize = 5;

/// Splits an orthoscalar representation into indecomposable summands using
/// spectral projections of self-adjoint endomorphisms.
pub fn split_decomposition(t: &Representation, tol: f64) -> Result<Vec<Representation>, RepError> {
    let report = orthoscalarity_report(t);
    let scale = t.scale().max(1.0);
    if report.defect > tol * scale * scale {
        return Err(RepError::NotOrthoscalar { defect: report.defect });
    }
    if t.is_zero() {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEARCH_SEED ^ t.total_dim() as u64);
    split_rec(t, tol, scale, &mut rng)
}

fn split_rec(
    t: &Representation,
    tol: f64,
    scale: f64,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Representation>, RepError> {
    let basis = morphism_space(t, t, Category::RepQH, 1e-9)?;
    if basis.len() <= 1 {
        return Ok(vec![t.clone()]);
    }
    let n = t.dims().len();
    for _ in 0..SPLIT_ATTEMPTS {
        // random self-adjoint element of the endomorphism *-algebra
        let mut h: Vec<CMatrix> = t.dims().iter().map(|&d| CMatrix::zeros(d, d)).collect();
        for b in &basis {
            let (x, y) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            for v in 0..n {
                let m = &b.maps[v];
                let herm = (m + m.adjoint()) * cr(0.5 * x);
                let skew = (m - m.adjoint()) * c(0.0, -0.5 * y);
                h[v] += herm + skew;
            }
        }
        let eig: Vec<(Vec<f64>, CMatrix)> = h.iter().map(linalg::hermitian_eigen).collect();
        let mut all: Vec<f64> = eig.iter().flat_map(|(vals, _)| vals.iter().copied()).collect();
        all.sort_by(f64::total_cmp);
        let spread = all.last().unwrap() - all.first().unwrap();
        let gap = 1e-6 * spread.max(1e-300);
        let mut cuts = Vec::new();
        for w in all.windows(2) {
            if w[1] - w[0] > gap.max(1e3 * tol) {
                cuts.push(0.5 * (w[0] + w[1]));
            }
        }
        if cuts.is_empty() {
            continue;
        }
        let cluster = |x: f64| cuts.iter().filter(|&&cut| x > cut).count();
        let count = cuts.len() + 1;
        // projections per cluster per vertex
        let mut frames: Vec<Vec<CMatrix>> = vec![Vec::with_capacity(n); count];
        for (vals, vecs) in &eig {
            for (k, frame) in frames.iter_mut().enumerate() {
                let cols: Vec<usize> = (0..vals.len()).filter(|&i| cluster(vals[i]) == k).collect();
                frame.push(CMatrix::from_fn(vecs.nrows(), cols.len(), |r, s| vecs[(r, cols[s])]));
            }
        }
        let mut cross: f64 = 0.0;
        for a in 0..count {
            for b in 0..count {
                if a == b {
                    continue;
                }
                for (k, arr) in t.quiver().arrows().iter().enumerate() {
                    let m = frames[a][arr.head].adjoint() * t.block(k) * &frames[b][arr.tail];
                    cross = cross.max(linalg::max_abs(&m));
                }
            }
        }
        if cross > 1e-6 * scale {
            return Err(RepError::NumericalFailure(format!(
                "spectral projection leaves off-diagonal blocks of size {cross:e}"
            )));
        }
        let mut out = Vec::new();
        for frame in &frames {
            let pieces: Vec<CMatrix> = frame.iter().map(|p| p.adjoint()).collect();
            let part = t.transformed(&pieces)?;
            if part.is_zero() {
                continue;
            }
            out.extend(split_rec(&part, tol, scale, rng)?);
        }
        return Ok(out);
    }
    Err(RepError::NumericalFailure(
        "no spectral gap found in a non-scalar endomorphism algebra".into(),
    ))
}

/// Reassembles summands; convenience for round-trip checks.
pub fn reassemble(parts: &[Representation]) -> Result<Representation, RepError> {
    direct_sum(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::linalg::cis;
    use crate::rep::simple_rep;
    use std::sync::Arc;

    fn a4(phase: f64) -> Representation {
        let q = Arc::new(catalog("A~4").unwrap().quiver);
        let mut blocks = vec![CMatrix::from_element(1, 1, cr(1.0)); 4];
        blocks[3] = CMatrix::from_element(1, 1, cis(phase));
        Representation::new(q, vec![1; 4], blocks).unwrap()
    }

    #[test]
    fn simple_morphisms() {
        let q = Arc::new(catalog("D~4").unwrap().quiver);
        let (pz, _) = simple_rep(q.clone(), 4, &[1.0; 5]).unwrap();
        let (pa, _) = simple_rep(q, 0, &[1.0; 5]).unwrap();
        assert_eq!(morphism_space_dim(&pz, &pz, Category::RepQ, 1e-9).unwrap(), 1);
        assert_eq!(morphism_space_dim(&pz, &pa, Category::RepQ, 1e-9).unwrap(), 0);
        assert!(is_schur(&pz, 1e-9).unwrap());
        let zero = Representation::zero(pz.quiver_arc().clone(), vec![0; 5]).unwrap();
        assert!(matches!(is_schur(&zero, 1e-9), Err(RepError::ZeroRepresentation)));
    }

    #[test]
    fn doubled_schur_has_four_endomorphisms() {
        let t = a4(0.4);
        assert!(is_schur(&t, 1e-9).unwrap());
        let tt = direct_sum(&[t.clone(), t.clone()]).unwrap();
        assert_eq!(morphism_space_dim(&tt, &tt, Category::RepQ, 1e-9).unwrap(), 4);
        assert!(!is_schur(&tt, 1e-9).unwrap());
    }

    #[test]
    fn equivalence_detects_phase_and_scale() {
        let t = a4(0.4);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let s = t.scrambled(&mut rng);
        let out = unitary_equivalent(&t, &s, 1e-8);
        assert!(out.equivalent);
        let w = out.witness.unwrap();
        assert!(w.forward_residual(&t, &s) < 1e-8);
        assert!(!unitary_equivalent(&t, &a4(0.9), 1e-8).equivalent);
        let bumped = t.with_block(0, CMatrix::from_element(1, 1, cr(2.0))).unwrap();
        assert!(!unitary_equivalent(&t, &bumped, 1e-8).equivalent);
    }

    #[test]
    fn split_separates_phases() {
        let (x, y) = (a4(0.4), a4(1.9));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let sum = direct_sum(&[x.clone(), y.clone()]).unwrap().scrambled(&mut rng);
        let parts = split_decomposition(&sum, 1e-9).unwrap();
        assert_eq!(parts.len(), 2);
        let hits_x = parts.iter().filter(|p| unitary_equivalent(p, &x, 1e-8).equivalent).count();
        let hits_y = parts.iter().filter(|p| unitary_equivalent(p, &y, 1e-8).equivalent).count();
        assert_eq!((hits_x, hits_y), (1, 1));
    }

    #[test]
    fn split_of_doubled_simple() {
        let q = Arc::new(catalog("D~4").unwrap().quiver);
        let (pz, _) = simple_rep(q, 4, &[1.0; 5]).unwrap();
        let parts = split_decomposition(&direct_sum(&[pz.clone(), pz.clone()]).unwrap(), 1e-9).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.dims() == pz.dims()));
    }
}
