//! `E~7`: basis `D = [A22 | A23 | A24]` (4×7) over the neighbours
//! `a3`, `c1`, `b3` of `z`.

use num_complex::Complex64;

use super::{
    basis_from_blocks, check_rows, complete_basis, solve_two_phases, BasisMatrix, FamilyError,
    ParameterPoint,
};
use crate::catalog::CatalogName;
use crate::linalg::{c, cis, cr, op_norm, CMatrix};
use crate::rep::Representation;

const TOL: f64 = 1e-10;

struct Angles {
    phi: [f64; 4],
    psi: [f64; 5],
}

fn angles(p: &ParameterPoint, with_phi4: bool) -> Result<Angles, FamilyError> {
    Ok(Angles {
        phi: [
            p.get("phi1")?,
            p.get("phi2")?,
            p.get("phi3")?,
            if with_phi4 { p.get("phi4")? } else { 0.0 },
        ],
        psi: [p.get("psi1")?, p.get("psi2")?, p.get("psi3")?, p.get("psi4")?, p.get("psi5")?],
    })
}

pub(super) fn solve(free: &ParameterPoint) -> Result<ParameterPoint, FamilyError> {
    let g = angles(free, false)?;
    let [f1, _, f3, _] = g.phi;
    let [p1, p2, p3, p4, p5] = g.psi;
    // equal column lengths at c1 fix cos²φ4
    let target = (f1.sin() * p1.cos()).powi(2) + (f1.cos() * p2.cos()).powi(2);
    let known = (f3.sin() * p3.cos() * p4.sin()).powi(2);
    let s5 = p5.sin().powi(2);
    let cos2 = if s5 > 0.0 { (target - known) / s5 } else { f64::NAN };
    if !(0.0..=1.0).contains(&cos2) {
        let residual = if cos2.is_nan() { target - known } else { (cos2 - cos2.clamp(0.0, 1.0)) * s5 };
        return Err(FamilyError::NoSolution { what: "E7~ c1 column lengths (φ4)".into(), residual: residual.abs() });
    }
    let f4 = cos2.sqrt().acos();
    // rows 3 and 4: p + a e^{iθ1} + b e^{iθ2} = 0
    let p = f3.cos() * f4.sin() * p3.cos() * p4.sin() * p5.sin();
    let a = f3.sin() * f4.cos() * p3.cos() * p4.sin() * p5.sin();
    let b = p3.sin() * p4.sin() * p5.cos();
    let (t1, t2) = solve_two_phases(a, b, c(p, 0.0), "E7~ rows 3 and 4")?;
    let mut out = free.clone();
    out.set("phi4", f4);
    out.set("theta1", t1);
    out.set("theta2", t2);
    Ok(out)
}

pub fn construct_e7_basis(p: &ParameterPoint) -> Result<BasisMatrix, FamilyError> {
    let g = angles(p, true)?;
    let [f1, f2, f3, f4] = g.phi;
    let [p1, p2, p3, p4, p5] = g.psi;
    let (e1, e2) = (cis(p.get("theta1")?), cis(p.get("theta2")?));
    let z = Complex64::new(0.0, 0.0);
    let a22 = CMatrix::from_row_slice(
        4,
        3,
        &[
            cr(f1.cos() * p1.cos()), z, z,
            cr(f1.sin() * p2.cos()), cr(f2.cos() * p2.sin()), z,
            z, cr(f2.sin() * p4.cos()), cr(f3.cos() * p3.cos() * p4.sin()),
            z, z, cr(f4.sin() * p5.sin()),
        ],
    );
    let a23 = CMatrix::from_row_slice(
        4,
        2,
        &[
            cr(f1.sin() * p1.cos()), z,
            cr(-f1.cos() * p2.cos()), z,
            z, cr(f3.sin() * p3.cos() * p4.sin()),
            z, e1 * (f4.cos() * p5.sin()),
        ],
    );
    let a24 = CMatrix::from_row_slice(
        4,
        3,
        &[
            z, z, cr(p1.sin()),
            cr(f2.sin() * p2.sin()), z, z,
            cr(-f2.cos() * p4.cos()), cr(p3.sin() * p4.sin()), z,
            z, e2 * p5.cos(), z,
        ],
    );
    let gram = a23.adjoint() * &a23;
    let spread = op_norm(&(&gram - CMatrix::identity(2, 2) * (gram.trace() * 0.5)));
    let basis = basis_from_blocks(CatalogName::E7Tilde, &[a22, a23, a24])?;
    check_rows(&basis, TOL)?;
    if spread > TOL {
        return Err(FamilyError::ConstraintViolated { residual: spread });
    }
    Ok(basis)
}

/// Completes the `a` and `b` arms outwards from `z`; `c1` is a leaf.
pub fn complete_e7(basis: &BasisMatrix, scale: f64) -> Result<Representation, FamilyError> {
    complete_basis(basis, scale)
}
