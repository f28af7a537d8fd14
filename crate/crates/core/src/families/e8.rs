//! `E~8`: basis `D = [A33 | A34 | A35]` (6×12) over the neighbours
//! `a5`, `c1`, `b2` of `z`.
//!
//! Orthogonality of rows 4 and 5 only fixes the ratio of the row 5 entries
//! in the columns shared with row 4, so row 5 carries its own angle `omega`
//! for their common modulus; `omega = psi4` is the narrower form in which
//! that modulus is tied to row 4.
//!
//! Completion from `D`: along the `a` arm every step only needs the top
//! eigenvalue of the current Gram block, so no condition arises. At `c1`
//! (a leaf) `A34* A34` must be scalar: its columns have disjoint supports,
//! so only the three column lengths must agree (solved for `phi3`, `phi6`).
//! At `b2` the Gram block splits into two 2×2 blocks `G1` (columns 1–2) and
//! `G2` (columns 3–4); since `b1` is a leaf of dimension 2, `χ I − G` must
//! have rank 2 with a scalar 2×2 image, i.e. `G1` and `G2` have the same
//! spectrum. Equal traces fix `sin²psi6` and equal determinants give a
//! quadratic in `sin²phi4`.

use num_complex::Complex64;

use super::{
    basis_from_blocks, check_rows, complete_basis, solve_two_phases, BasisMatrix, FamilyError,
    ParameterPoint,
};
use crate::catalog::CatalogName;
use crate::linalg::{c, cis, cr, hermitian_eigen, op_norm, CMatrix};
use crate::rep::Representation;

const TOL: f64 = 1e-10;

fn no_solution(what: &str, residual: f64) -> FamilyError {
    FamilyError::NoSolution { what: what.into(), residual: residual.abs() }
}

pub(super) fn solve(free: &ParameterPoint) -> Result<ParameterPoint, FamilyError> {
    let [f1, f2, f5] = [free.get("phi1")?, free.get("phi2")?, free.get("phi5")?];
    let [p1, p2, p3, p4, p5] =
        [free.get("psi1")?, free.get("psi2")?, free.get("psi3")?, free.get("psi4")?, free.get("psi5")?];
    let om = free.get("omega")?;
    let sq = |x: f64| x * x;

    // b-arm: the two 2×2 Gram blocks of the b2 band must have equal spectra
    // (top eigenvalue χ_{b2}, the other one χ_{b2} − χ_{b1}). With u = sin²φ4
    // the trace fixes sin²ψ6 and the determinant is a quadratic in u.
    let (t1, d1) = {
        let (a, b, d) = (
            sq(f1.sin() * p1.cos()) + sq(f1.cos() * p2.cos()),
            -f1.cos() * p2.cos() * f2.cos() * p2.sin(),
            sq(f2.cos() * p2.sin()) + sq(f2.sin() * p3.sin()),
        );
        (a + d, a * d - b * b)
    };
    let k = sq(p4.cos());
    let m = k - sq(om.cos() * p5.cos());
    let h = sq(om.sin() * p5.cos());
    let n = sq(om.cos() * om.sin()) * sq(sq(p5.cos()));
    // g11 = k − m u;  g11 (t1 − g11) − n u = d1
    let (qa, qb, qc) = (-m * m, m * (2.0 * k - t1) - n, k * (t1 - k) - d1);
    let candidates = if qa.abs() < 1e-300 {
        if qb == 0.0 {
            return Err(no_solution("E8~ b-arm spectrum (φ4, ψ6)", qc));
        }
        vec![-qc / qb]
    } else {
        let disc = qb * qb - 4.0 * qa * qc;
        if disc < 0.0 {
            return Err(no_solution("E8~ b-arm spectrum (φ4, ψ6)", disc));
        }
        let root = disc.sqrt();
        vec![(-qb - root) / (2.0 * qa), (-qb + root) / (2.0 * qa)]
    };
    let mut best: Option<(f64, f64)> = None;
    let mut miss = f64::INFINITY;
    for u in candidates {
        let w = t1 - (k - m * u) - h;
        let off = (u - u.clamp(0.0, 1.0)).abs() + (w - w.clamp(0.0, 1.0)).abs();
        if off == 0.0 && best.is_none_or(|(bu, _)| u < bu) {
            best = Some((u, w));
        }
        miss = miss.min(off);
    }
    let Some((u, w)) = best else {
        return Err(no_solution("E8~ b-arm spectrum (φ4, ψ6)", miss));
    };
    let f4 = u.sqrt().asin();
    let p6 = w.sqrt().asin();

    // c1 column lengths
    let target = sq(f1.cos() * p1.cos()) + sq(f1.sin() * p2.cos());
    let denom = sq(p4.sin()) - sq(p3.cos());
    let s3 = (target - sq(p3.cos())) / denom;
    if !denom.is_finite() || denom.abs() < 1e-14 || !(0.0..=1.0).contains(&s3) {
        return Err(no_solution("E8~ c1 column lengths (φ3)", s3 - s3.clamp(0.0, 1.0)));
    }
    let f3 = s3.sqrt().asin();
    let s6 = (target - sq(f5.sin() * p5.sin())) / (1.0 - w);
    if !(0.0..=1.0).contains(&s6) {
        return Err(no_solution("E8~ c1 column lengths (φ6)", s6 - s6.clamp(0.0, 1.0)));
    }
    let f6 = s6.sqrt().asin();

    // rows 5 and 6: p + a e^{iθ1} − b e^{iθ2} = 0
    let p = f5.cos() * f6.cos() * p5.sin() * p6.cos();
    let a = f5.sin() * f6.sin() * p5.sin() * p6.cos();
    let b = om.sin() * p5.cos() * p6.sin();
    let (t1, beta) = solve_two_phases(a, b, c(p, 0.0), "E8~ rows 5 and 6")?;
    let t2 = (beta - std::f64::consts::PI).rem_euclid(2.0 * std::f64::consts::PI);

    let mut out = free.clone();
    out.set("phi4", f4);
    out.set("psi6", p6);
    out.set("phi3", f3);
    out.set("phi6", f6);
    out.set("theta1", t1);
    out.set("theta2", t2);
    Ok(out)
}

pub fn construct_e8_basis(p: &ParameterPoint) -> Result<BasisMatrix, FamilyError> {
    let mut f = [0.0; 6];
    let mut s = [0.0; 6];
    for k in 0..6 {
        f[k] = p.get(&format!("phi{}", k + 1))?;
        s[k] = p.get(&format!("psi{}", k + 1))?;
    }
    let (e1, e2) = (cis(p.get("theta1")?), cis(p.get("theta2")?));
    let omega = p.get_or("omega", s[3]);
    let (co, so) = (omega.cos(), omega.sin());
    let (cf, sf) = (f.map(f64::cos), f.map(f64::sin));
    let (cs, ss) = (s.map(f64::cos), s.map(f64::sin));

    let mut a33 = CMatrix::zeros(6, 5);
    let mut a34 = CMatrix::zeros(6, 3);
    let mut a35 = CMatrix::zeros(6, 4);
    let entries: [(usize, usize, Complex64); 23] = [
        // (row, column in D, value); D columns 0–4 a5, 5–7 c1, 8–11 b2
        (0, 0, cr(ss[0])),
        (0, 5, cr(cf[0] * cs[0])),
        (0, 8, cr(sf[0] * cs[0])),
        (1, 1, cr(sf[1] * ss[1])),
        (1, 5, cr(sf[0] * cs[1])),
        (1, 8, cr(-cf[0] * cs[1])),
        (1, 9, cr(cf[1] * ss[1])),
        (2, 1, cr(cf[1] * ss[2])),
        (2, 2, cr(sf[2] * cs[2])),
        (2, 6, cr(cf[2] * cs[2])),
        (2, 9, cr(-sf[1] * ss[2])),
        (3, 2, cr(cf[2] * ss[3])),
        (3, 3, cr(sf[3] * cs[3])),
        (3, 6, cr(-sf[2] * ss[3])),
        (3, 10, cr(-cf[3] * cs[3])),
        (4, 3, cr(cf[3] * co * cs[4])),
        (4, 4, cr(cf[4] * ss[4])),
        (4, 7, cr(sf[4] * ss[4])),
        (4, 10, cr(sf[3] * co * cs[4])),
        (4, 11, cr(so * cs[4])),
        (5, 4, cr(cf[5] * cs[5])),
        (5, 7, e1 * (sf[5] * cs[5])),
        (5, 11, e2 * (-ss[5])),
    ];
    for (r, col, v) in entries {
        match col {
            0..=4 => a33[(r, col)] = v,
            5..=7 => a34[(r, col - 5)] = v,
            _ => a35[(r, col - 8)] = v,
        }
    }
    let c_gram = a34.adjoint() * &a34;
    let c_spread = op_norm(&(&c_gram - CMatrix::identity(3, 3) * (c_gram.trace() / cr(3.0))));
    let (vals, _) = hermitian_eigen(&(a35.adjoint() * &a35));
    let b_gap = (vals[3] - vals[2]).max(vals[1] - vals[0]);
    let basis = basis_from_blocks(CatalogName::E8Tilde, &[a33, a34, a35])?;
    check_rows(&basis, TOL)?;
    let residual = c_spread.max(b_gap);
    if residual > TOL {
        return Err(FamilyError::ConstraintViolated { residual });
    }
    Ok(basis)
}

/// Completes the `a` and `b` arms outwards from `z`; `c1` is a leaf.
pub fn complete_e8(basis: &BasisMatrix, scale: f64) -> Result<Representation, FamilyError> {
    complete_basis(basis, scale)
}
