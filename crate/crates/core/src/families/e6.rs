//! `E~6`: basis `D = [A2 | B2 | C2]` (3×6) in normal form and its closed-form
//! completion.

use num_complex::Complex64;

use super::{
    basis_from_blocks, check_rows, family_quiver, solve_two_phases, Assembler, BasisMatrix,
    FamilyError, ParameterPoint,
};
use crate::catalog::CatalogName;
use crate::linalg::{c, cis, cr, CMatrix};
use crate::rep::Representation;

const ROW_TOL: f64 = 1e-10;

struct Angles {
    phi: [f64; 3],
    psi: [f64; 4],
}

fn angles(p: &ParameterPoint) -> Result<Angles, FamilyError> {
    Ok(Angles {
        phi: [p.get("phi1")?, p.get("phi2")?, p.get("phi3")?],
        psi: [p.get("psi1")?, p.get("psi2")?, p.get("psi3")?, p.get("psi4")?],
    })
}

/// Coefficients of the row 2 / row 3 relation
/// `a e^{iθ2} + b e^{iθ3} + p = 0`.
fn relation(g: &Angles) -> (f64, f64, f64) {
    let [f1, f2, f3] = g.phi;
    let [_, p2, p3, p4] = g.psi;
    let _ = f1;
    let a = f2.cos() * f3.cos() * p2.cos() * p3.sin() * p4.cos();
    let b = f2.sin() * f3.sin() * p2.cos() * p3.sin() * p4.cos();
    let p = p2.sin() * p3.sin() * p4.sin();
    (a, b, p)
}

pub(super) fn solve(free: &ParameterPoint) -> Result<ParameterPoint, FamilyError> {
    let g = angles(free)?;
    let (a, b, p) = relation(&g);
    let (t2, t3) = solve_two_phases(a, b, c(p, 0.0), "E6~ rows 2 and 3")?;
    let mut out = free.clone();
    out.set("theta1", free.get_or("theta1", 0.0));
    out.set("theta2", t2);
    out.set("theta3", t3);
    Ok(out)
}

/// Builds the normal-form basis; rejects points violating the row relation.
pub fn construct_e6_basis(p: &ParameterPoint) -> Result<BasisMatrix, FamilyError> {
    let g = angles(p)?;
    let [f1, f2, f3] = g.phi;
    let [p1, p2, p3, p4] = g.psi;
    if f2.sin().abs() < 1e-12 || p2.sin().abs() < 1e-12 {
        return Err(FamilyError::DegenerateParameters("φ2·ψ2 = 0 splits the representation".into()));
    }
    let (t1, t2, t3) = (p.get("theta1")?, p.get("theta2")?, p.get("theta3")?);
    let z = Complex64::new(0.0, 0.0);
    let a2 = CMatrix::from_row_slice(
        3,
        2,
        &[
            cr(p1.sin()), z,
            z, cr(f2.cos() * p2.cos()),
            z, cis(t2) * (f3.cos() * p4.cos() * p3.sin()),
        ],
    );
    let b2 = CMatrix::from_row_slice(
        3,
        2,
        &[
            z, cr(f1.sin() * p1.cos()),
            cr(f2.sin() * p2.cos()), z,
            cis(t3) * (f3.sin() * p4.cos() * p3.sin()), cis(t1) * (-f1.cos() * p3.cos()),
        ],
    );
    let c2 = CMatrix::from_row_slice(
        3,
        2,
        &[
            z, cr(f1.cos() * p1.cos()),
            cr(p2.sin()), z,
            cr(p4.sin() * p3.sin()), cis(t1) * (f1.sin() * p3.cos()),
        ],
    );
    let basis = basis_from_blocks(CatalogName::E6Tilde, &[a2, b2, c2])?;
    check_rows(&basis, ROW_TOL)?;
    Ok(basis)
}

/// Roots of `w² − s·w − t = 0` for `t > 0`: returns (positive, negative).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct E6Quadratic {
    pub positive: f64,
    pub negative: f64,
}

pub fn e6_quadratic(s: f64, t: f64) -> Result<E6Quadratic, FamilyError> {
    if !(t > 0.0) {
        return Err(FamilyError::CompletionInfeasible(format!("t = {t:e} is not positive")));
    }
    let root = (s * s + 4.0 * t).sqrt();
    Ok(E6Quadratic { positive: (s + root) / 2.0, negative: (s - root) / 2.0 })
}

/// Leaf row `[w1, w2]` over a two-column band `M` making `[row; M]` have
/// orthogonal columns of equal length.
fn leaf_row(m: &CMatrix) -> Result<CMatrix, FamilyError> {
    let (c1, c2) = (m.column(0), m.column(1));
    let s = c2.norm_squared() - c1.norm_squared();
    let inner = c1.dotc(&c2);
    let t = inner.norm_sqr();
    if t <= 1e-24 {
        return Err(FamilyError::CompletionInfeasible("band columns are orthogonal (t = 0)".into()));
    }
    let roots = e6_quadratic(s, t)?;
    let w1 = roots.positive.sqrt();
    Ok(CMatrix::from_row_slice(1, 2, &[cr(w1), -inner / w1]))
}

/// Completes an `E~6` basis in normal form: `A1 = [0 x0]` and the two other
/// leaf rows from the quadratic; every block is then multiplied by `scale`.
pub fn complete_e6(basis: &BasisMatrix, scale: f64) -> Result<Representation, FamilyError> {
    let q = family_quiver(CatalogName::E6Tilde)?;
    let dims = q.delta().expect("extended").iter().map(|&d| d as usize).collect();
    let band = |v: &str| basis.band(v).ok_or_else(|| FamilyError::CompletionInfeasible(format!("no {v} band")));
    let (a2, b2, c2) = (band("a2")?, band("b2")?, band("c2")?);

    let x1sq = a2.column(0).norm_squared();
    let x0sq = x1sq - a2.column(1).norm_squared();
    if x0sq <= 0.0 || a2.column(0).dotc(&a2.column(1)).norm() > 1e-10 {
        return Err(FamilyError::CompletionInfeasible(format!("x0² = {x0sq:e}; A2 not in normal form")));
    }
    let a1 = CMatrix::from_row_slice(1, 2, &[cr(0.0), cr(x0sq.sqrt())]);

    let mut asm = Assembler::new(q, dims);
    asm.set("z", "a2", a2);
    asm.set("a1", "a2", a1);
    asm.set("b1", "b2", leaf_row(&b2)?);
    asm.set("z", "b2", b2);
    asm.set("c1", "c2", leaf_row(&c2)?);
    asm.set("z", "c2", c2);
    Ok(asm.finish()?.scaled(scale))
}
