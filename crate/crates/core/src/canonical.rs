//! The canonical model in `P^4` of the normalization of a 5-nodal plane
//! sextic: the cubics through the nodes map the plane to a quartic del
//! Pezzo surface, and the sextic goes to a complete intersection of three
//! quadrics.
//!
//! Everything except the certificate is generic over the coefficient
//! domain, so the same code computes first-order deformations over the
//! dual numbers.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{general_position_p2, plane_vars, ProjPoint};
use crate::ideal::{has_empty_projective_zero_set, hilbert_value, Ideal};
use crate::linalg::Matrix;
use crate::poly::{det3, monomials_of_degree, MultiPoly, Poly, VarSet, Vars};
use crate::report::CertReport;
use crate::scalar::{Fp, Scalar};

/// `y0, …, y4`.
pub fn canonical_vars() -> Vars {
    VarSet::indexed("y", 5)
}

/// Basis of the plane cubics through `nodes`, in reduced echelon form over
/// the cubic monomials. Points are given by homogeneous coordinates.
pub fn cubic_system<S: Scalar>(nodes: &[Vec<S>]) -> Result<Vec<MultiPoly<S>>> {
    let first = nodes.first().ok_or_else(|| Error::InvalidInput("no nodes".into()))?;
    let prime = first[0].prime();
    let vars = plane_vars();
    let monos = monomials_of_degree(3, 3);
    let rows = nodes
        .iter()
        .map(|q| monos.iter().map(|m| MultiPoly::monomial(&vars, *m, S::one(prime)).evaluate(q)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let conditions = Matrix::from_rows(prime, monos.len(), rows);
    let rank = conditions.rank()?;
    if rank != nodes.len() {
        return Err(Error::DegenerateNodes { rank });
    }
    let ker = conditions.kernel()?;
    (0..ker.nrows()).map(|i| MultiPoly::from_coeff_vector(&vars, prime, 3, ker.row(i))).collect()
}

/// [`cubic_system`] for five points of `P^2`, rejecting configurations
/// with three collinear points.
pub fn cubic_system_at(nodes: &[ProjPoint]) -> Result<Vec<Poly>> {
    if !general_position_p2(nodes) {
        return Err(Error::NotInGeneralPosition);
    }
    cubic_system(&nodes.iter().map(|q| q.coords().to_vec()).collect::<Vec<_>>())
}

/// Three quadrics in `y0..y4` together with the data they were computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalCurve<S: Scalar> {
    /// Reduced echelon basis over the quadric monomials of `y`.
    pub quadrics: Vec<MultiPoly<S>>,
    /// `λ_i` with `H_i(c_0, …, c_4) = λ_i·f`.
    pub multipliers: Vec<S>,
    pub cubics: Vec<MultiPoly<S>>,
    pub sextic: MultiPoly<S>,
}

/// The quadrics `Q` in `y` with `Q(c_0(x), …, c_4(x))` a multiple of `f`.
///
/// Unknowns are the 15 coefficients of `Q` followed by the multiplier `λ`;
/// the equations are the 28 sextic coefficients of `Q(c) − λ·f`. The
/// solution space must be 3-dimensional.
pub fn canonical_quadrics<S: Scalar>(f: &MultiPoly<S>, cubics: &[MultiPoly<S>]) -> Result<CanonicalCurve<S>> {
    if cubics.len() != 5 {
        return Err(Error::InvalidInput(format!("expected 5 cubics, got {}", cubics.len())));
    }
    let prime = f.prime();
    let y = canonical_vars();
    let quad_monos = monomials_of_degree(5, 2);
    let mut columns: Vec<Vec<S>> = Vec::with_capacity(quad_monos.len() + 1);
    for m in &quad_monos {
        let pulled = MultiPoly::monomial(&y, *m, S::one(prime)).substitute(cubics)?;
        columns.push(pulled.coeff_vector(6)?);
    }
    columns.push(f.coeff_vector(6)?.into_iter().map(|c| -c).collect());
    let system = Matrix::from_rows(prime, 28, columns).transpose();
    let ker = system.kernel()?;
    if ker.nrows() != 3 {
        return Err(Error::UnexpectedKernelDim { expected: 3, found: ker.nrows() });
    }
    let mut quadrics = Vec::with_capacity(3);
    let mut multipliers = Vec::with_capacity(3);
    for i in 0..3 {
        let row = ker.row(i);
        quadrics.push(MultiPoly::from_coeff_vector(&y, prime, 2, &row[..15])?);
        multipliers.push(row[15]);
    }
    if quadrics.iter().any(MultiPoly::is_zero) {
        // only possible when f = 0
        return Err(Error::InvalidInput("sextic is zero".into()));
    }
    Ok(CanonicalCurve { quadrics, multipliers, cubics: cubics.to_vec(), sextic: f.clone() })
}

/// Checks that three quadrics cut out a smooth canonical curve of genus 5.
pub fn certify_smooth_ci(quadrics: &[Poly]) -> CertReport {
    let mut r = CertReport::new();
    let Some(first) = quadrics.first() else {
        r.pass_if("canonical.independent", false, "no quadrics");
        return r;
    };
    let (y, p) = (first.vars().clone(), first.prime());
    r.record(
        "canonical.independent",
        (|| {
            let rows = quadrics.iter().map(|h| h.coeff_vector(2)).collect::<Result<Vec<_>>>()?;
            let rank = Matrix::from_rows(p, 15, rows).rank()?;
            Ok((rank == 3 && quadrics.len() == 3, format!("{} quadrics spanning a space of dimension {rank}", quadrics.len())))
        })(),
    );
    if quadrics.len() != 3 {
        return r;
    }
    let ideal = Ideal::new(&y, p, quadrics.iter().cloned());
    r.record(
        "canonical.jacobian_criterion",
        (|| {
            let grads: Vec<Vec<Poly>> = quadrics.iter().map(Poly::gradient).collect();
            let mut gens = quadrics.to_vec();
            for a in 0..5 {
                for b in a + 1..5 {
                    for c in b + 1..5 {
                        let m: [[Poly; 3]; 3] = core::array::from_fn(|i| [grads[i][a].clone(), grads[i][b].clone(), grads[i][c].clone()]);
                        gens.push(det3(&m));
                    }
                }
            }
            let empty = has_empty_projective_zero_set(&Ideal::new(&y, p, gens)?)?;
            Ok((empty, String::from(if empty { "the intersection is smooth" } else { "the intersection has a singular point" })))
        })(),
    );
    r.record(
        "canonical.hilbert",
        ideal.and_then(|i| {
            let values = (2..=4).map(|d| hilbert_value(&i, d)).collect::<Result<Vec<_>>>()?;
            let ok = values.iter().zip(2..).all(|(&h, d)| h == 8 * d - 4);
            Ok((ok, format!("Hilbert function in degrees 2..4: {values:?}; genus 5 canonical curves have 8d-4")))
        }),
    );
    r
}

/// The pullback identities `H_i(c) = λ_i·f`, followed by [`certify_smooth_ci`].
pub fn certify_canonical(curve: &CanonicalCurve<Fp>) -> CertReport {
    let mut r = CertReport::new();
    r.record(
        "canonical.pullback",
        (|| {
            for (h, &l) in curve.quadrics.iter().zip(&curve.multipliers) {
                if h.substitute(&curve.cubics)? != curve.sextic.scale(l) {
                    return Ok((false, String::from("a quadric does not pull back to a multiple of the sextic")));
                }
            }
            let lambdas: Vec<i64> = curve.multipliers.iter().map(|l| l.symmetric()).collect();
            Ok((true, format!("H_i(cubics) = λ_i·f with λ = {lambdas:?}")))
        })(),
    );
    r.extend(certify_smooth_ci(&curve.quadrics));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Dual, Prime};

    fn p() -> Prime {
        Prime::new(101).unwrap()
    }

    fn pts(rows: &[[i64; 3]]) -> Vec<ProjPoint> {
        rows.iter().map(|c| ProjPoint::from_ints(p(), c).unwrap()).collect()
    }

    #[test]
    fn cubics_through_five_points() {
        let nodes = pts(&[[0, 0, 1], [0, 1, 0], [1, 0, 0], [1, 1, 1], [1, 2, 3]]);
        let cubics = cubic_system_at(&nodes).unwrap();
        assert_eq!(cubics.len(), 5);
        for c in &cubics {
            assert_eq!(c.total_degree(), Some(3));
            for q in &nodes {
                assert!(c.evaluate(q.coords()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn collinear_points_rejected() {
        let nodes = pts(&[[0, 0, 1], [0, 1, 0], [1, 0, 0], [1, 1, 0], [1, 2, 3]]);
        assert_eq!(cubic_system_at(&nodes), Err(Error::NotInGeneralPosition));
        let doubled: Vec<Vec<Fp>> = pts(&[[0, 0, 1], [0, 0, 1]]).iter().map(|q| q.coords().to_vec()).collect();
        assert_eq!(cubic_system(&doubled), Err(Error::DegenerateNodes { rank: 1 }));
    }

    #[test]
    fn constant_dual_nodes_give_constant_cubics() {
        let nodes = pts(&[[0, 0, 1], [0, 1, 0], [1, 0, 0], [1, 1, 1], [1, 2, 3]]);
        let plain = cubic_system_at(&nodes).unwrap();
        let dual: Vec<Vec<Dual>> = nodes.iter().map(|q| q.coords().iter().map(|&c| Dual::from_fp(c)).collect()).collect();
        let lifted = cubic_system(&dual).unwrap();
        assert_eq!(lifted.iter().map(MultiPoly::constant_part).collect::<Vec<_>>(), plain);
        assert!(lifted.iter().all(|c| c.eps_part().is_zero()));
    }

    #[test]
    fn quadric_system_needs_five_cubics() {
        let v = plane_vars();
        let f = Poly::parse("x0^6", &v, p()).unwrap();
        assert!(matches!(canonical_quadrics(&f, core::slice::from_ref(&f)), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn smooth_ci_rejects_cones() {
        let y = canonical_vars();
        // all three quadrics avoid y4, so (0:0:0:0:1) is singular
        let qs: Vec<Poly> = ["y0^2+y1^2+y2^2+y3^2", "y0*y1+y2*y3", "y0*y2-y1*y3+y3^2"]
            .iter()
            .map(|s| Poly::parse(s, &y, p()).unwrap())
            .collect();
        let r = certify_smooth_ci(&qs);
        assert_eq!(r.get("canonical.jacobian_criterion").unwrap().status, crate::report::Status::Fail);
        let r = certify_smooth_ci(&qs[..2]);
        assert_eq!(r.get("canonical.independent").unwrap().status, crate::report::Status::Fail);
    }
}
