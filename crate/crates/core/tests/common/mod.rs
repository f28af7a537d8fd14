//! Seeded sample generators shared by the integration tests.

#![allow(dead_code)]

use std::sync::Arc;

use orthoscalar::catalog::{catalog, CatalogName, Quiver};
use orthoscalar::families::{construct_family, random_parameter_point, ParameterPoint};
use orthoscalar::functors::construct_real_root_rep_retrying;
use nalgebra::DMatrix;
use orthoscalar::linalg::{c, cr, random_complex, CMatrix};
use orthoscalar::linalg::random_unitary;
use orthoscalar::morphism::{morphism_space_dim, unitary_equivalent, Category, Morphism};
use orthoscalar::rep::{direct_sum, orthoscalarity_report, Character, Representation};
use orthoscalar::roots::{enumerate_positive_roots, GVector, RootTag};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn quiver(name: &str) -> Arc<Quiver> {
    Arc::new(catalog(name).unwrap().quiver)
}

pub fn family(name: &str) -> CatalogName {
    name.parse().unwrap()
}

pub const FAMILIES: [&str; 8] = ["A~4", "A~6", "D~4", "D~5", "D~6", "E6~", "E7~", "E8~"];

/// A generic δ family member for `family`, drawn from `seed`.
pub fn family_sample(family_name: &str, seed: u64) -> (ParameterPoint, Representation) {
    let mut r = rng(seed);
    let p = random_parameter_point(family(family_name), &mut r).unwrap();
    let t = construct_family(&p).unwrap();
    (p, t)
}

/// Real singular roots `<= bound` on `q`.
pub fn singular_roots(q: &Quiver, bound: &GVector) -> Vec<GVector> {
    enumerate_positive_roots(q, bound)
        .unwrap()
        .into_iter()
        .filter(|(_, c)| c.tag == RootTag::RealSingular)
        .map(|(x, _)| x)
        .collect()
}

/// Orthoscalar Schur representation of a real singular root, seeds all 1
/// with seeded retries.
pub fn root_sample(q: &Arc<Quiver>, d: &GVector, seed: u64) -> (Representation, Character) {
    let seeds = vec![1.0; q.vertex_count()];
    construct_real_root_rep_retrying(q.clone(), d, &seeds, &mut rng(seed), 50).unwrap()
}

/// Mixed orthoscalar samples: family members and real-root representations
/// cycled by `seed`.
pub fn orthoscalar_sample(seed: u64) -> Representation {
    match seed % 4 {
        0 | 1 => {
            let names = ["A~4", "D~4", "D~5", "E6~"];
            family_sample(names[(seed / 4) as usize % names.len()], seed).1
        }
        _ => {
            let names = ["D~4", "E6~", "A~4"];
            let q = quiver(names[(seed / 4) as usize % names.len()]);
            let roots = singular_roots(&q, &GVector(q.delta().unwrap().to_vec()));
            let d = &roots[(seed as usize / 2) % roots.len()];
            root_sample(&q, d, seed).0
        }
    }
}

pub fn character_of(t: &Representation) -> Character {
    let mut ch = orthoscalarity_report(t).character;
    for v in 0..t.dims().len() {
        if t.dims()[v] == 0 {
            ch.values[v] = 1.0;
        }
    }
    ch
}

pub fn random_positive(r: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| r.gen_range(0.5..2.0)).collect()
}

pub fn max_entry_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// An orthoscalar Schur representation with its full character: δ family
/// members across all families and real-root representations.
pub fn functor_sample(seed: u64) -> (Representation, Character) {
    if seed % 2 == 0 {
        let (_, t) = family_sample(FAMILIES[(seed / 2) as usize % FAMILIES.len()], seed);
        let ch = orthoscalarity_report(&t).character;
        (t, ch)
    } else {
        let names = ["D~4", "D~6", "E6~", "E7~", "A~6"];
        let q = quiver(names[(seed / 2) as usize % names.len()]);
        let roots = singular_roots(&q, &GVector(q.delta().unwrap().to_vec()));
        let d = &roots[(seed as usize / 3) % roots.len()];
        root_sample(&q, d, seed)
    }
}

pub fn row_lengths(m: &CMatrix) -> Vec<f64> {
    m.row_iter().map(|r| r.norm()).collect()
}

pub fn col_lengths(m: &CMatrix) -> Vec<f64> {
    m.column_iter().map(|c| c.norm()).collect()
}

/// Block-diagonal `Z` with per-block positive scalars `A`; `B` solved from
/// the column lengths. Returns `(Z, W = A Z B^{-1})`.
pub fn diagonal_scaling_instance(r: &mut ChaCha8Rng) -> (CMatrix, CMatrix) {
    let k = r.gen_range(1..4);
    let sizes: Vec<(usize, usize)> = (0..k).map(|_| (r.gen_range(1..4), r.gen_range(1..4))).collect();
    let (m, n) = sizes.iter().fold((0, 0), |(a, b), (x, y)| (a + x, b + y));
    let mut z = CMatrix::zeros(m, n);
    let mut a = vec![0.0; m];
    let (mut r0, mut c0) = (0, 0);
    for &(x, y) in &sizes {
        let block = random_complex(x, y, r);
        z.view_mut((r0, c0), (x, y)).copy_from(&block);
        let lambda = r.gen_range(0.5..3.0);
        a[r0..r0 + x].iter_mut().for_each(|v| *v = lambda);
        r0 += x;
        c0 += y;
    }
    let az = DMatrix::from_fn(m, n, |i, j| z[(i, j)] * cr(a[i]));
    let b: Vec<f64> = (0..n).map(|j| az.column(j).norm() / z.column(j).norm()).collect();
    let w = DMatrix::from_fn(m, n, |i, j| az[(i, j)] / cr(b[j]));
    (z, w)
}

pub fn hermitian(n: usize, r: &mut ChaCha8Rng) -> CMatrix {
    let g = random_complex(n, n, r);
    (&g + g.adjoint()) * cr(0.5)
}

pub fn kron_identity(h: &CMatrix, d: usize) -> CMatrix {
    let n = h.nrows();
    DMatrix::from_fn(n * d, n * d, |i, j| if i % d == j % d { h[(i / d, j / d)] } else { c(0.0, 0.0) })
}

pub fn tol_for(t: &Representation) -> f64 {
    let s = t.scale().max(1.0);
    1e-12 * s * s * 10.0
}


/// Equal row and column lengths under a positive diagonal scaling force
/// `W = Z`.
pub fn lemma_scaling(seed: u64) -> bool {
    let (z, w) = diagonal_scaling_instance(&mut rng(seed));
    let rows = row_lengths(&z).iter().zip(row_lengths(&w)).all(|(a, b)| (a - b).abs() < 1e-10);
    let cols = col_lengths(&z).iter().zip(col_lengths(&w)).all(|(a, b)| (a - b).abs() < 1e-10);
    rows && cols && max_entry_diff(&z, &w) < 1e-10
}

/// A unitary intertwiner also intertwines the adjoints.
pub fn lemma_unitary_morphism(seed: u64) -> bool {
    let t = orthoscalar_sample(seed);
    let mut r = rng(seed ^ 0x55);
    let maps: Vec<CMatrix> = t.dims().iter().map(|&d| random_unitary(d, &mut r)).collect();
    let tt = t.transformed(&maps).unwrap();
    let m = Morphism { maps };
    if m.forward_residual(&t, &tt) >= tol_for(&t) || m.adjoint_residual(&t, &tt) >= tol_for(&t) {
        return false;
    }
    let found = unitary_equivalent(&t, &tt, 1e-8);
    found.equivalent && found.witness.is_some_and(|w| w.adjoint_residual(&t, &tt) < 1e-8)
}

/// A self-adjoint endomorphism of `T ⊕ T` (in scrambled bases) commutes with
/// the adjoint blocks.
pub fn lemma_self_adjoint(seed: u64) -> bool {
    let t1 = orthoscalar_sample(seed);
    let mut r = rng(seed ^ 0xaa);
    let doubled = direct_sum(&[t1.clone(), t1.clone()]).unwrap();
    let h = hermitian(2, &mut r);
    let endo: Vec<CMatrix> = t1.dims().iter().map(|&d| kron_identity(&h, d)).collect();
    let u: Vec<CMatrix> = doubled.dims().iter().map(|&d| random_unitary(d, &mut r)).collect();
    let t = doubled.transformed(&u).unwrap();
    let maps = endo.iter().zip(&u).map(|(e, w)| w * e * w.adjoint()).collect();
    let m = Morphism { maps };
    m.forward_residual(&t, &t) < tol_for(&t) && m.adjoint_residual(&t, &t) < tol_for(&t)
}

/// A scrambled copy is unitarily equivalent and has a nonzero morphism.
pub fn theorem_unitary_equivalence(seed: u64) -> bool {
    let t = orthoscalar_sample(seed);
    let tt = t.scrambled(&mut rng(seed ^ 0x33));
    unitary_equivalent(&t, &tt, 1e-8).equivalent
        && morphism_space_dim(&t, &tt, Category::RepQ, 1e-9).unwrap() >= 1
}
