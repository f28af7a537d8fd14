//! Cyclic graphs `A~n`: one complex invariant, the holonomy around the cycle.

use num_complex::Complex64;

use super::{family_quiver, Assembler, FamilyError};
use crate::catalog::{CatalogName, Parity};
use crate::linalg::{cis, CMatrix};
use crate::rep::Representation;

/// δ representation of `A~n`: edge `k` joins `v_k` and `v_{k+1}` and carries
/// `moduli[k−1]`; the closing edge `v_n - v_1` carries `modulus_n · e^{i·phase}`.
pub fn construct_a_family(
    n: usize,
    moduli: &[f64],
    modulus_n: f64,
    phase: f64,
) -> Result<Representation, FamilyError> {
    let q = family_quiver(CatalogName::ATilde(n))?;
    if moduli.len() != n - 1 {
        return Err(FamilyError::MissingParameter(format!("m{}", moduli.len() + 1)));
    }
    for (k, &m) in moduli.iter().chain([modulus_n].iter()).enumerate() {
        if !(m > 0.0) {
            return Err(FamilyError::NonPositiveModulus { name: format!("m{}", k + 1), value: m });
        }
    }
    let mut asm = Assembler::new(q, vec![1; n]);
    for k in 1..=n {
        let (u, v) = (format!("v{k}"), format!("v{}", k % n + 1));
        let value = if k == n { cis(phase) * modulus_n } else { Complex64::new(moduli[k - 1], 0.0) };
        asm.set(&u, &v, CMatrix::from_element(1, 1, value));
    }
    asm.finish()
}

/// Product of the edge values around `v1 → v2 → … → vn → v1`, conjugating an
/// edge traversed against its arrow. Invariant under unitary equivalence.
pub fn cycle_holonomy(t: &Representation) -> Result<Complex64, FamilyError> {
    let q = t.quiver();
    let n = q.vertex_count();
    if !matches!(q.catalog_name(), Some(CatalogName::ATilde(_))) || t.dims().iter().any(|&d| d != 1) {
        return Err(FamilyError::NotExtended(q.name().into()));
    }
    let mut h = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        let u = q.index_of(&format!("v{k}"))?;
        let v = q.index_of(&format!("v{}", k % n + 1))?;
        let a = q.arrow_between(u, v).expect("cycle edge");
        let x = t.block(a)[(0, 0)];
        h *= if q.parity(u) == Parity::Even { x } else { x.conj() };
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::{is_schur, unitary_equivalent};
    use crate::rep::is_orthoscalar;

    #[test]
    fn cycle_is_orthoscalar_schur() {
        let t = construct_a_family(4, &[1.0, 0.7, 1.3], 0.9, 0.4).unwrap();
        let (ok, chi) = is_orthoscalar(&t, 1e-12);
        assert!(ok);
        assert!((chi.values[1] - (1.0 + 0.49)).abs() < 1e-12);
        assert!(is_schur(&t, 1e-9).unwrap());
        let h = cycle_holonomy(&t).unwrap();
        assert!((h.norm() - 1.0 * 0.7 * 1.3 * 0.9).abs() < 1e-12);
    }

    #[test]
    fn holonomy_separates_phases() {
        let a = construct_a_family(4, &[1.0, 1.0, 1.0], 1.0, 0.3).unwrap();
        let b = construct_a_family(4, &[1.0, 1.0, 1.0], 1.0, 0.8).unwrap();
        assert!(!unitary_equivalent(&a, &b, 1e-8).equivalent);
        assert!((cycle_holonomy(&a).unwrap().arg() - cycle_holonomy(&b).unwrap().arg()).abs() > 0.4);
    }

    #[test]
    fn rejects_nonpositive_modulus() {
        let err = construct_a_family(4, &[1.0, 0.0, 1.0], 1.0, 0.0).unwrap_err();
        assert!(matches!(err, FamilyError::NonPositiveModulus { .. }));
    }
}
