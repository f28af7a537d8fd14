//! Coxeter reflection functors on orthoscalar representations and the
//! constructor of indecomposable orthoscalar representations for real roots.
//!
//! The even functor replaces every even space `T(j)` by the orthogonal
//! complement of the image of its column band `Γ_j = T_j↓`, embedded into
//! `⊕_{i~j} T(i)` by an isometry `K_j` and rescaled by `√χ_j`. Since
//! `K_j K_j* = I − Γ_j Γ_j* / χ_j`, the row Gram at an odd vertex becomes
//! `(Σ_{j~i} χ_j − χ_i) I`. The odd functor is the adjoint construction on
//! the kernels of the row bands.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{CatalogError, Parity, Quiver};
use crate::linalg::{self, cr, CMatrix};
use crate::rep::{orthoscalarity_report, simple_rep, Character, RepError, Representation};
use crate::roots::{self, GVector, RootError, RootTag};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FunctorError {
    #[error("character {value} at vertex {vertex} is not positive where the new dimension is {dim}")]
    CharacterNonpositive { vertex: String, value: f64, dim: i64 },
    #[error("reflected dimension at vertex {vertex} would be {value}")]
    NegativeDimension { vertex: String, value: i64 },
    #[error("character does not match the representation (distance {distance:e})")]
    CharacterMismatch { distance: f64 },
    #[error("representation is not orthoscalar (defect {defect:e})")]
    NotOrthoscalar { defect: f64 },
    #[error("{0} is not a real root")]
    NotRealRoot(String),
    #[error("reduction path: {0}")]
    PathFailure(#[from] RootError),
    #[error("functor step {step}: {source}")]
    AtStep { step: usize, source: Box<FunctorError> },
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

impl FunctorError {
    /// True when the failure is a nonpositive character, possibly nested.
    pub fn is_character_nonpositive(&self) -> bool {
        match self {
            FunctorError::CharacterNonpositive { .. } => true,
            FunctorError::AtStep { source, .. } => source.is_character_nonpositive(),
            _ => false,
        }
    }
}

/// Record of one functor application.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctorStep {
    pub parity: Parity,
    pub input_character: Character,
    pub output_character: Character,
}

/// Orthoscalarity tolerance, relative to the largest character value.
pub const FUNCTOR_TOL: f64 = 1e-9;

/// Dimension vector after reflecting every vertex of `parity`.
pub fn reflected_dims(q: &Quiver, dims: &[usize], parity: Parity) -> Result<Vec<usize>, FunctorError> {
    let mut out = dims.to_vec();
    for v in q.vertices_of(parity) {
        let s: i64 = q.neighbors(v).iter().map(|&w| dims[w] as i64).sum::<i64>() - dims[v] as i64;
        if s < 0 {
            return Err(FunctorError::NegativeDimension { vertex: q.id(v).to_string(), value: s });
        }
        out[v] = s as usize;
    }
    Ok(out)
}

/// Character after reflecting `parity`: the other parity's support values
/// become neighbour sums minus themselves; everything else is kept.
pub fn reflected_character(q: &Quiver, dims: &[usize], chi: &Character, parity: Parity) -> Character {
    let mut values = chi.values.clone();
    for v in q.vertices_of(parity.flip()) {
        if dims[v] > 0 {
            values[v] = q.neighbors(v).iter().map(|&w| chi.values[w]).sum::<f64>() - chi.values[v];
        }
    }
    let new_dims = reflected_dims(q, dims, parity).unwrap_or_else(|_| dims.to_vec());
    let determined = new_dims.iter().map(|&d| d > 0).collect();
    Character { values, determined }
}

fn check_input(t: &Representation, chi: &Character) -> Result<f64, FunctorError> {
    let n = t.dims().len();
    if chi.values.len() != n {
        return Err(RepError::LengthMismatch { expected: n, actual: chi.values.len() }.into());
    }
    let chi_scale = chi.values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let report = orthoscalarity_report(t);
    if report.defect > FUNCTOR_TOL * chi_scale {
        return Err(FunctorError::NotOrthoscalar { defect: report.defect });
    }
    let mut distance: f64 = 0.0;
    for v in t.support() {
        distance = distance.max((report.character.values[v] - chi.values[v]).abs());
    }
    if distance > 1e-7 * chi_scale {
        return Err(FunctorError::CharacterMismatch { distance });
    }
    Ok(chi_scale)
}

/// Applies the even (`Parity::Even`) or odd reflection functor.
pub fn apply_reflection_functor(
    t: &Representation,
    chi: &Character,
    parity: Parity,
) -> Result<(Representation, Character), FunctorError> {
    let chi_scale = check_input(t, chi)?;
    let q = t.quiver();
    let dims = t.dims();
    let new_dims = reflected_dims(q, dims, parity)?;
    let mut new_chi = reflected_character(q, dims, chi, parity);
    let eps = 1e-9 * chi_scale;
    let simple_output = new_dims.iter().sum::<usize>() == 1;
    for v in 0..dims.len() {
        let reflected = q.parity(v) == parity;
        let value = new_chi.values[v];
        // a simple representation legitimately carries χ = 0 at its vertex
        if simple_output && new_dims[v] == 1 && value.abs() <= eps {
            new_chi.values[v] = 0.0;
            continue;
        }
        if new_dims[v] > 0 && value <= eps {
            return Err(FunctorError::CharacterNonpositive {
                vertex: q.id(v).to_string(),
                value,
                dim: new_dims[v] as i64,
            });
        }
        if reflected && dims[v] > 0 && chi.values[v] <= eps {
            return Err(FunctorError::CharacterNonpositive {
                vertex: q.id(v).to_string(),
                value: chi.values[v],
                dim: dims[v] as i64,
            });
        }
    }
    let mut blocks: Vec<CMatrix> = t.blocks().to_vec();
    for v in q.vertices_of(parity) {
        let arrows = q.incident_arrows(v);
        let (gamma, seg): (CMatrix, Vec<usize>) = match parity {
            Parity::Even => {
                let g = t.column_band(v);
                (g, arrows.iter().map(|&k| dims[q.arrows()[k].head]).collect())
            }
            Parity::Odd => {
                let g = t.row_band(v).adjoint();
                (g, arrows.iter().map(|&k| dims[q.arrows()[k].tail]).collect())
            }
        };
        let mut k = linalg::image_complement(&gamma, 1e-9);
        if k.ncols() != new_dims[v] {
            return Err(RepError::NumericalFailure(format!(
                "complement at {} has dimension {}, expected {}",
                q.id(v),
                k.ncols(),
                new_dims[v]
            ))
            .into());
        }
        linalg::fix_column_phases(&mut k);
        let s = cr(chi.values[v].max(0.0).sqrt());
        let mut off = 0;
        for (&a, &len) in arrows.iter().zip(&seg) {
            let piece = k.rows(off, len).into_owned() * s;
            blocks[a] = match parity {
                Parity::Even => piece,
                Parity::Odd => piece.adjoint(),
            };
            off += len;
        }
    }
    let out = Representation::new(t.quiver_arc().clone(), new_dims, blocks)?;
    let report = orthoscalarity_report(&out);
    let out_scale = new_chi.values.iter().fold(chi_scale, |m, v| m.max(v.abs()));
    if report.defect > FUNCTOR_TOL * out_scale {
        return Err(FunctorError::NotOrthoscalar { defect: report.defect });
    }
    Ok((out, new_chi))
}

/// `k` alternating functor applications, the first one of `start` parity.
pub fn functor_chain(
    t: &Representation,
    chi: &Character,
    start: Parity,
    k: usize,
) -> Result<(Representation, Character), FunctorError> {
    let parities: Vec<Parity> =
        (0..k).map(|i| if i % 2 == 0 { start } else { start.flip() }).collect();
    let (rep, chi, _) = apply_sequence(t, chi, &parities)?;
    Ok((rep, chi))
}

/// Applies functors of the listed parities in order, recording each step.
pub fn apply_sequence(
    t: &Representation,
    chi: &Character,
    parities: &[Parity],
) -> Result<(Representation, Character, Vec<FunctorStep>), FunctorError> {
    let mut rep = t.clone();
    let mut ch = chi.clone();
    let mut steps = Vec::with_capacity(parities.len());
    for (i, &p) in parities.iter().enumerate() {
        let (r, c) = apply_reflection_functor(&rep, &ch, p)
            .map_err(|e| FunctorError::AtStep { step: i, source: Box::new(e) })?;
        steps.push(FunctorStep { parity: p, input_character: ch, output_character: c.clone() });
        rep = r;
        ch = c;
    }
    Ok((rep, ch, steps))
}

/// Builds an orthoscalar Schur representation of dimension `d` for a real
/// root `d`. `seeds` supplies the free positive character values: the
/// simple representation at the bottom of the reflection path gets these
/// values away from its vertex.
pub fn construct_real_root_rep(
    q: Arc<Quiver>,
    d: &GVector,
    seeds: &[f64],
) -> Result<(Representation, Character), FunctorError> {
    let class = roots::classify_vector(&q, d)?;
    match class.tag {
        RootTag::RealSingular => {
            let path = roots::singular_reduction_path(&q, d)?;
            build_from_simple(q, &path, seeds)
        }
        RootTag::RealRegular => {
            if d.is_faithful() {
                let path = roots::faithful_reduction_path(&q, d)?;
                let (base, chi) = construct_on_support(q.clone(), &path.terminal, seeds)?;
                let (rep, chi, _) = apply_sequence(&base, &chi, &path.build_order())?;
                Ok((rep, chi))
            } else {
                construct_on_support(q, d, seeds)
            }
        }
        _ => Err(FunctorError::NotRealRoot(d.to_string())),
    }
}

fn build_from_simple(
    q: Arc<Quiver>,
    path: &roots::ReflectionPath,
    seeds: &[f64],
) -> Result<(Representation, Character), FunctorError> {
    let g = path
        .terminal
        .simple_index()
        .ok_or_else(|| RootError::NoPathFound(path.terminal.to_string()))?;
    let (pi, chi) = simple_rep(q, g, seeds)?;
    let (rep, chi, _) = apply_sequence(&pi, &chi, &path.build_order())?;
    Ok((rep, chi))
}

/// Builds a non-faithful root on the full subquiver of its support, then
/// embeds it with zero spaces elsewhere.
fn construct_on_support(
    q: Arc<Quiver>,
    d: &GVector,
    seeds: &[f64],
) -> Result<(Representation, Character), FunctorError> {
    if seeds.len() != q.vertex_count() {
        return Err(RepError::LengthMismatch { expected: q.vertex_count(), actual: seeds.len() }.into());
    }
    let support: Vec<usize> = (0..d.len()).filter(|&v| d.0[v] > 0).collect();
    let (sub, map) = q.induced(&support)?;
    let sub = Arc::new(sub);
    let sub_d = GVector(map.iter().map(|&v| d.0[v]).collect());
    let sub_seeds: Vec<f64> = map.iter().map(|&v| seeds[v]).collect();
    let path = roots::reduce_to_simple(&sub, &sub_d).ok_or_else(|| RootError::NoPathFound(d.to_string()))?;
    let (rep, chi) = build_from_simple(sub.clone(), &path, &sub_seeds)?;
    let mut dims = vec![0; q.vertex_count()];
    let mut values = seeds.to_vec();
    let mut determined = vec![false; q.vertex_count()];
    for (s, &v) in map.iter().enumerate() {
        dims[v] = rep.dims()[s];
        values[v] = chi.values[s];
        determined[v] = chi.determined[s];
    }
    let mut blocks: Vec<CMatrix> = q
        .arrows()
        .iter()
        .map(|a| CMatrix::zeros(dims[a.head], dims[a.tail]))
        .collect();
    for (k, a) in sub.arrows().iter().enumerate() {
        let (t, h) = (map[a.tail], map[a.head]);
        let idx = q.arrow_between(t, h).expect("induced arrow exists");
        blocks[idx] = rep.block(k).clone();
    }
    let full = Representation::new(q, dims, blocks)?;
    Ok((full, Character { values, determined }))
}

/// [`construct_real_root_rep`] with the given seeds first, then up to
/// `attempts` random seed vectors in `[0.5, 2)` whenever a character along
/// the chain turns nonpositive.
pub fn construct_real_root_rep_retrying(
    q: Arc<Quiver>,
    d: &GVector,
    seeds: &[f64],
    rng: &mut ChaCha8Rng,
    attempts: usize,
) -> Result<(Representation, Character), FunctorError> {
    let mut last = match construct_real_root_rep(q.clone(), d, seeds) {
        Ok(x) => return Ok(x),
        Err(e) if e.is_character_nonpositive() => e,
        Err(e) => return Err(e),
    };
    for _ in 0..attempts {
        let s: Vec<f64> = (0..q.vertex_count()).map(|_| rng.gen_range(0.5..2.0)).collect();
        match construct_real_root_rep(q.clone(), d, &s) {
            Ok(x) => return Ok(x),
            Err(e) if e.is_character_nonpositive() => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::morphism::{is_schur, unitary_equivalent};

    fn dt4() -> Arc<Quiver> {
        Arc::new(catalog("D~4").unwrap().quiver)
    }

    #[test]
    fn even_functor_on_simple_center() {
        let q = dt4();
        let (pz, chi) = simple_rep(q, 4, &[1.0; 5]).unwrap();
        let (t, c) = apply_reflection_functor(&pz, &chi, Parity::Even).unwrap();
        assert_eq!(t.dims(), &[1, 1, 1, 1, 1]);
        assert_eq!(c.values, vec![1.0, 1.0, 1.0, 1.0, 4.0]);
        for b in t.blocks() {
            assert!((b[(0, 0)].norm() - 1.0).abs() < 1e-12);
        }
        let r = orthoscalarity_report(&t);
        assert!(r.defect < 1e-12);
        assert!((r.character.values[4] - 4.0).abs() < 1e-12);
        assert!(is_schur(&t, 1e-9).unwrap());
    }

    #[test]
    fn double_application_is_identity_up_to_unitaries() {
        let q = dt4();
        let (pz, chi) = simple_rep(q, 4, &[1.0, 2.0, 0.5, 1.5, 1.0]).unwrap();
        let (t, c) = functor_chain(&pz, &chi, Parity::Even, 3).unwrap();
        for p in [Parity::Even, Parity::Odd] {
            let (t1, c1) = apply_reflection_functor(&t, &c, p).unwrap();
            let (t2, c2) = apply_reflection_functor(&t1, &c1, p).unwrap();
            assert_eq!(t2.dims(), t.dims());
            assert!(c2.distance_on_support(&c) < 1e-9);
            assert!(unitary_equivalent(&t, &t2, 1e-8).equivalent);
        }
    }

    #[test]
    fn zero_character_is_rejected() {
        let q = dt4();
        let (pz, chi) = simple_rep(q.clone(), 4, &[1.0; 5]).unwrap();
        let mut bad = chi.clone();
        bad.values[3] = 0.0;
        assert!(matches!(
            apply_reflection_functor(&pz, &bad, Parity::Even),
            Err(FunctorError::CharacterNonpositive { .. })
        ));
        let (t, c) = apply_reflection_functor(&pz, &chi, Parity::Even).unwrap();
        let mut wrong = c.clone();
        wrong.values[4] = 3.0;
        assert!(matches!(
            apply_reflection_functor(&t, &wrong, Parity::Odd),
            Err(FunctorError::CharacterMismatch { .. })
        ));
        let (pa, chi_a) = simple_rep(q, 0, &[1.0; 5]).unwrap();
        assert!(matches!(
            apply_reflection_functor(&pa, &chi_a, Parity::Even),
            Err(FunctorError::NegativeDimension { .. })
        ));
    }

    #[test]
    fn reflecting_back_to_a_simple_is_allowed() {
        let q = dt4();
        let (pz, chi) = simple_rep(q, 4, &[1.0; 5]).unwrap();
        let (t, c) = apply_reflection_functor(&pz, &chi, Parity::Even).unwrap();
        let (back, cb) = apply_reflection_functor(&t, &c, Parity::Even).unwrap();
        assert_eq!(back.dims(), pz.dims());
        assert_eq!(cb.values[4], 0.0);
    }

    #[test]
    fn chain_dimensions_follow_sweeps() {
        let q = dt4();
        let (pz, chi) = simple_rep(q.clone(), 4, &[1.0; 5]).unwrap();
        let (t, _) = functor_chain(&pz, &chi, Parity::Even, 2).unwrap();
        let ez = GVector::simple(5, 4);
        let expected =
            roots::coxeter_sweep(&q, Parity::Odd, &roots::coxeter_sweep(&q, Parity::Even, &ez).unwrap()).unwrap();
        assert_eq!(t.dim_vector(), expected);
    }

    #[test]
    fn real_root_examples() {
        let q = dt4();
        let (t, _) = construct_real_root_rep(q.clone(), &GVector::simple(5, 4), &[1.0; 5]).unwrap();
        assert_eq!(t.dims(), &[0, 0, 0, 0, 1]);
        let (t, _) = construct_real_root_rep(q.clone(), &GVector(vec![1, 1, 1, 1, 1]), &[1.0; 5]).unwrap();
        assert_eq!(t.dims(), &[1, 1, 1, 1, 1]);
        assert!(is_schur(&t, 1e-9).unwrap());
        assert!(matches!(
            construct_real_root_rep(q.clone(), &GVector(vec![1, 1, 1, 1, 2]), &[1.0; 5]),
            Err(FunctorError::NotRealRoot(_))
        ));
        // regular, above δ: no orthoscalar Schur representation exists
        assert!(matches!(
            construct_real_root_rep(q.clone(), &GVector(vec![2, 2, 1, 1, 3]), &[1.0; 5]),
            Err(FunctorError::PathFailure(RootError::NotApplicable(_)))
        ));
        let d = GVector(vec![1, 1, 0, 0, 1]);
        let mut rng = <ChaCha8Rng as rand::SeedableRng>::seed_from_u64(0);
        let (t, _) = construct_real_root_rep_retrying(q, &d, &[1.0; 5], &mut rng, 20).unwrap();
        assert_eq!(t.dim_vector(), d);
        assert!(orthoscalarity_report(&t).defect < 1e-9);
        assert!(is_schur(&t, 1e-9).unwrap());
    }

    #[test]
    fn works_on_cycles() {
        let q = Arc::new(catalog("A~4").unwrap().quiver);
        let (p, chi) = simple_rep(q, 0, &[1.0, 1.0, 2.0, 3.0]).unwrap();
        let (t, c) = functor_chain(&p, &chi, Parity::Even, 2).unwrap();
        let (back, _) = functor_chain(&t, &c, Parity::Odd, 2).unwrap();
        assert!(unitary_equivalent(&p, &back, 1e-8).equivalent);
    }
}
