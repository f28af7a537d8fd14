//! `D~n`: a chain `c1 … cm` (m = n − 3) of 2-dimensional vertices with
//! diagonal links `X_k = diag(x_k, y_k)`, two leaves at each end.

use super::{family_quiver, Assembler, FamilyError, ParameterPoint};
use crate::catalog::{CatalogName, Parity};
use crate::linalg::{c, cis, cr, CMatrix};
use crate::rep::Representation;

#[derive(Debug, Clone, PartialEq)]
pub struct DParams {
    /// `x_0 … x_m`
    pub x: Vec<f64>,
    pub y0: f64,
    pub phi1: f64,
    pub phi2: f64,
    pub theta: f64,
}

impl DParams {
    pub fn from_point(n: usize, p: &ParameterPoint) -> Result<DParams, FamilyError> {
        let x = (0..=n.saturating_sub(3)).map(|k| p.get(&format!("x{k}"))).collect::<Result<_, _>>()?;
        Ok(DParams {
            x,
            y0: p.get("y0")?,
            phi1: p.get("phi1")?,
            phi2: p.get("phi2")?,
            theta: p.get("theta")?,
        })
    }

    pub fn to_point(&self, n: usize) -> ParameterPoint {
        let mut p = ParameterPoint::new(CatalogName::DTilde(n));
        for (k, x) in self.x.iter().enumerate() {
            p.set(&format!("x{k}"), *x);
        }
        p.set("y0", self.y0);
        p.set("phi1", self.phi1);
        p.set("phi2", self.phi2);
        p.set("theta", self.theta);
        p
    }
}

/// `y_i²` from `y_{i+1}² = x_{i+1}² + (−1)^i (x_0² − y_0²)`; fails at the
/// first nonpositive value.
pub fn d_chain_squares(x: &[f64], y0: f64) -> Result<Vec<f64>, FamilyError> {
    let gap = x[0] * x[0] - y0 * y0;
    let mut out = vec![y0 * y0];
    for i in 0..x.len() - 1 {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        let value = x[i + 1] * x[i + 1] + sign * gap;
        if value <= 0.0 {
            return Err(FamilyError::RecurrenceNegative { index: i + 1, value });
        }
        out.push(value);
    }
    Ok(out)
}

fn check_moduli(p: &DParams) -> Result<(), FamilyError> {
    for (k, &x) in p.x.iter().enumerate() {
        if !(x > 0.0) {
            return Err(FamilyError::NonPositiveModulus { name: format!("x{k}"), value: x });
        }
    }
    if !(p.y0 > 0.0) {
        return Err(FamilyError::NonPositiveModulus { name: "y0".into(), value: p.y0 });
    }
    Ok(())
}

/// δ representation of `D~n` for `x_0² ≠ y_0²`.
pub fn construct_d_family(n: usize, p: &DParams) -> Result<Representation, FamilyError> {
    let q = family_quiver(CatalogName::DTilde(n))?;
    if p.x.len() != n - 2 {
        return Err(FamilyError::MissingParameter(format!("x{}", p.x.len())));
    }
    check_moduli(p)?;
    let (x0s, y0s) = (p.x[0] * p.x[0], p.y0 * p.y0);
    if (x0s - y0s).abs() <= 1e-12 * x0s.max(y0s) {
        return Err(FamilyError::Degenerate);
    }
    let y: Vec<f64> = d_chain_squares(&p.x, p.y0)?.into_iter().map(f64::sqrt).collect();
    assemble(q, n, &p.x, &y, p)
}

/// The `x_i = y_i` regime: every link is scalar and `[A|B]` is a `D~4` core
/// with `AA* = x_0² I`, `BB* = x_m² I`. `y0` is ignored.
pub fn construct_d_degenerate(n: usize, p: &DParams) -> Result<Representation, FamilyError> {
    let q = family_quiver(CatalogName::DTilde(n))?;
    if p.x.len() != n - 2 {
        return Err(FamilyError::MissingParameter(format!("x{}", p.x.len())));
    }
    check_moduli(&DParams { y0: p.x[0], ..p.clone() })?;
    assemble(q, n, &p.x, &p.x, p)
}

fn assemble(
    q: std::sync::Arc<crate::catalog::Quiver>,
    n: usize,
    x: &[f64],
    y: &[f64],
    p: &DParams,
) -> Result<Representation, FamilyError> {
    let m = n - 3;
    let (c1, s1, c2, s2) = (p.phi1.cos(), p.phi1.sin(), p.phi2.cos(), p.phi2.sin());
    let e = cis(p.theta);
    let col = |a: num_complex::Complex64, b: num_complex::Complex64| CMatrix::from_column_slice(2, 1, &[a, b]);
    let a1 = col(cr(x[0] * c1), cr(y[0] * s1));
    let a2 = col(cr(x[0] * s1), cr(-y[0] * c1));
    let b1 = col(cr(x[m] * c2), e * (y[m] * s2));
    let b2 = col(cr(x[m] * s2), e * (-y[m] * c2));

    let dims = q.delta().expect("extended").iter().map(|&d| d as usize).collect();
    let mut asm = Assembler::new(q, dims);
    asm.set("a1", "c1", a1);
    asm.set("a2", "c1", a2);
    for k in 1..m {
        let link = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![c(x[k], 0.0), c(y[k], 0.0)]));
        asm.set(&format!("c{k}"), &format!("c{}", k + 1), link);
    }
    let cm = format!("c{m}");
    let odd_end = asm.parity(&cm) == Parity::Odd;
    for (leaf, b) in [("b1", b1), ("b2", b2)] {
        asm.set(leaf, &cm, if odd_end { b } else { b.adjoint() });
    }
    asm.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::is_schur;
    use crate::rep::{is_orthoscalar, orthoscalarity_report};
    use std::f64::consts::PI;

    fn params(x: Vec<f64>, y0: f64) -> DParams {
        DParams { x, y0, phi1: PI / 4.0, phi2: PI / 4.0, theta: PI / 3.0 }
    }

    #[test]
    fn d4_example_characters() {
        let t = construct_d_family(4, &params(vec![1.0, 2.0], 2.0)).unwrap();
        let r = orthoscalarity_report(&t);
        assert!(r.defect < 1e-10);
        let q = t.quiver();
        assert!((r.character.values[q.index_of("c1").unwrap()] - 5.0).abs() < 1e-12);
        for leaf in ["a1", "a2", "b1", "b2"] {
            assert!((r.character.values[q.index_of(leaf).unwrap()] - 2.5).abs() < 1e-12);
        }
        assert!(is_schur(&t, 1e-9).unwrap());
    }

    #[test]
    fn longer_chains_are_orthoscalar() {
        for n in 4..=9 {
            let x: Vec<f64> = (0..n - 2).map(|k| 1.0 + 0.25 * k as f64).collect();
            let t = construct_d_family(n, &params(x, 0.8)).unwrap();
            assert!(is_orthoscalar(&t, 1e-10).0, "n = {n}");
            assert!(is_schur(&t, 1e-9).unwrap(), "n = {n}");
            let dims: Vec<i64> = t.dims().iter().map(|&d| d as i64).collect();
            assert_eq!(dims, t.quiver().delta().unwrap());
        }
    }

    #[test]
    fn recurrence_failure_index() {
        let err = construct_d_family(5, &params(vec![3.0, 1.0, 1.0], 1.0)).unwrap_err();
        match err {
            FamilyError::RecurrenceNegative { index, value } => {
                assert_eq!(index, 2);
                assert!((value + 7.0).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn equal_moduli_route_to_degenerate() {
        let p = params(vec![1.0, 1.5, 0.7, 1.2], 1.0);
        assert_eq!(construct_d_family(6, &p).unwrap_err(), FamilyError::Degenerate);
        let t = construct_d_degenerate(6, &p).unwrap();
        assert!(is_orthoscalar(&t, 1e-10).0);
        assert!(is_schur(&t, 1e-9).unwrap());
    }
}
