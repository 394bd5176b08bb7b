use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::point::{general_position_p2, general_position_p3, ProjPoint};
use super::quartic::{plane_vars, QuarticModel};
use crate::error::{Error, Result};
use crate::ideal::{has_empty_projective_zero_set, intersect, projective_degree, projective_is_reduced, saturate_irrelevant, Ideal};
use crate::poly::{det2, det3, Monomial, Poly, VarSet};
use crate::report::CertReport;
use crate::rng::SplitMix64;
use crate::scalar::{Fp, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Singularity {
    Smooth,
    OrdinaryNode,
    Worse,
}

/// Local type of the hypersurface `g = 0` at `q`: translate `q` to the
/// origin of its affine chart and inspect the linear and quadratic parts.
pub fn classify_singular_point(g: &Poly, q: &ProjPoint) -> Result<Singularity> {
    if q.len() != g.nvars() {
        return Err(Error::IncompatibleVariables);
    }
    if !g.evaluate(q.coords())?.is_zero() {
        return Err(Error::PointNotOnVariety);
    }
    let n = g.nvars();
    let k = q.chart();
    let local = VarSet::indexed("y", n - 1);
    let p = g.prime();
    let mut j = 0;
    let images: Vec<Poly> = (0..n)
        .map(|i| {
            if i == k {
                Poly::one(&local, p)
            } else {
                j += 1;
                &Poly::var(&local, p, j - 1) + &Poly::constant(&local, q.coords()[i])
            }
        })
        .collect();
    let h = g.substitute(&images)?;
    if !h.graded_part(1).is_zero() {
        return Ok(Singularity::Smooth);
    }
    let rank = h.graded_part(2).quadratic_form_matrix()?.rank()?;
    Ok(if rank == n - 1 { Singularity::OrdinaryNode } else { Singularity::Worse })
}

/// `(g, ∂g/∂x_0, …)`.
pub fn jacobian_ideal(g: &Poly) -> Result<Ideal> {
    let mut gens = alloc::vec![g.clone()];
    gens.extend(g.gradient());
    Ideal::new(g.vars(), g.prime(), gens)
}

/// The reduced ideal of a finite set of points.
pub fn points_ideal(points: &[ProjPoint]) -> Result<Ideal> {
    let first = points.first().ok_or_else(|| Error::InvalidInput("no points".into()))?;
    let vars = VarSet::indexed("x", first.len());
    let mut acc = Ideal::of_point(&vars, first.coords())?;
    for pt in &points[1..] {
        acc = intersect(&acc, &Ideal::of_point(&vars, pt.coords())?)?;
    }
    Ok(acc)
}

fn list(points: &[ProjPoint]) -> String {
    let parts: Vec<String> = points.iter().map(|p| format!("{p}")).collect();
    parts.join(", ")
}

/// Shared by the quartic and the sextic: the saturated Jacobian scheme has
/// the expected length, is reduced, coincides with the given points, and
/// each point is an ordinary node.
fn certify_nodes(report: &mut CertReport, prefix: &str, g: &Poly, nodes: &[ProjPoint], rng: &mut SplitMix64) {
    let sat = jacobian_ideal(g).and_then(|j| saturate_irrelevant(&j));
    let sat = match sat {
        Ok(s) => s,
        Err(e) => {
            report.push(&format!("{prefix}.degree"), crate::report::Status::Fail, format!("{e}"));
            return;
        }
    };
    report.record(
        &format!("{prefix}.degree"),
        projective_degree(&sat, rng).map(|d| (d == nodes.len(), format!("singular scheme has length {d}, expected {}", nodes.len()))),
    );
    report.record(
        &format!("{prefix}.reduced"),
        projective_is_reduced(&sat, rng).map(|r| (r, String::from(if r { "reduced" } else { "not reduced" }))),
    );
    report.record(
        &format!("{prefix}.support"),
        points_ideal(nodes).map(|pts| {
            let same = sat.same_ideal(&pts);
            let detail = if same { format!("singular locus is exactly {}", list(nodes)) } else { String::from("singular locus differs from the listed nodes") };
            (same, detail)
        }),
    );
    for (i, q) in nodes.iter().enumerate() {
        report.record(
            &format!("{prefix}.node_type[{i}]"),
            classify_singular_point(g, q).map(|s| (s == Singularity::OrdinaryNode, format!("{q} is {s:?}"))),
        );
    }
}

/// The quartic has exactly the given six singular points, all ordinary
/// nodes.
pub fn certify_singular_locus(quartic: &Poly, nodes: &[ProjPoint], rng: &mut SplitMix64) -> CertReport {
    let mut r = CertReport::new();
    certify_nodes(&mut r, "quartic_nodes", quartic, nodes, rng);
    r
}

/// `V(u2, u3, u4) = ∅`.
pub fn genericity_check(u2: &Poly, u3: &Poly, u4: &Poly) -> Result<bool> {
    has_empty_projective_zero_set(&Ideal::new(u2.vars(), u2.prime(), [u2.clone(), u3.clone(), u4.clone()])?)
}

/// The sextic has exactly the five expected nodes, and `u2, u3, u4` have no
/// common zero.
pub fn certify_sextic_nodes(f: &Poly, expected: &[ProjPoint], u: [&Poly; 3], rng: &mut SplitMix64) -> CertReport {
    let mut r = CertReport::new();
    certify_nodes(&mut r, "sextic_nodes", f, expected, rng);
    r.record(
        "sextic_nodes.genericity",
        genericity_check(u[0], u[1], u[2]).map(|e| (e, String::from(if e { "V(u2,u3,u4) is empty" } else { "u2, u3, u4 have a common zero" }))),
    );
    r
}

/// The conic `u2 = 0` touches the sextic in six distinct smooth points.
pub fn certify_contact_conic(u2: &Poly, u3: &Poly, f: &Poly, rng: &mut SplitMix64) -> CertReport {
    let mut r = CertReport::new();
    let (v, p) = (u2.vars(), u2.prime());
    r.record(
        "contact.ideal_identity",
        (|| {
            let a = Ideal::new(v, p, [u2.clone(), f.clone()])?;
            let b = Ideal::new(v, p, [u2.clone(), u3 * u3])?;
            let same = a.same_ideal(&b);
            Ok((same, String::from(if same { "(u2, f) = (u2, u3^2)" } else { "(u2, f) != (u2, u3^2)" })))
        })(),
    );
    let contact = Ideal::new(v, p, [u2.clone(), u3.clone()]);
    r.record(
        "contact.degree",
        contact.clone().and_then(|c| projective_degree(&c, rng)).map(|d| (d == 6, format!("u2 = u3 = 0 has length {d}"))),
    );
    r.record(
        "contact.reduced",
        contact.clone().and_then(|c| projective_is_reduced(&c, rng)).map(|b| (b, String::from(if b { "six distinct points" } else { "non-reduced contact" }))),
    );
    r.record(
        "contact.avoids_nodes",
        (|| {
            let both = contact?.sum(&jacobian_ideal(f)?)?;
            let empty = has_empty_projective_zero_set(&both)?;
            Ok((empty, String::from(if empty { "no contact point is singular on the sextic" } else { "a contact point is singular on the sextic" })))
        })(),
    );
    r
}

/// Matrix of `−z2² + u2·z1² + 2·u3·z0·z1 + u4·z0²` in `(z0, z1, z2)`.
pub fn fiber_matrix(u2: &Poly, u3: &Poly, u4: &Poly) -> [[Poly; 3]; 3] {
    let (v, p) = (u2.vars(), u2.prime());
    let z = Poly::zero(v, p);
    [
        [u4.clone(), u3.clone(), z.clone()],
        [u3.clone(), u2.clone(), z.clone()],
        [z.clone(), z, Poly::constant(v, Fp::new(p, -1))],
    ]
}

/// The scalar `c` with `a = c·b`, if any.
fn unit_multiple(a: &Poly, b: &Poly) -> Option<Fp> {
    let (m, cb) = b.terms().next().map(|(m, c)| (*m, *c))?;
    let c = a.coeff(&m) * cb.inv().ok()?;
    (!c.is_zero() && *a == b.scale(c)).then_some(c)
}

/// The fibre conic degenerates exactly over the sextic, and only to a pair
/// of distinct lines.
pub fn conic_bundle_fiber_check(u2: &Poly, u3: &Poly, u4: &Poly, f: &Poly) -> CertReport {
    let mut r = CertReport::new();
    let m = fiber_matrix(u2, u3, u4);
    let det = det3(&m);
    match unit_multiple(&det, f) {
        Some(c) => r.pass_if("conic_bundle.determinant", true, format!("det M = {}·f", c.symmetric())),
        None => r.pass_if("conic_bundle.determinant", false, "det M is not a unit multiple of f"),
    }
    let mut gens = alloc::vec![f.clone()];
    for (r0, r1) in [(0, 1), (0, 2), (1, 2)] {
        for (c0, c1) in [(0, 1), (0, 2), (1, 2)] {
            gens.push(det2(&m[r0][c0], &m[r0][c1], &m[r1][c0], &m[r1][c1]));
        }
    }
    r.record(
        "conic_bundle.rank_two",
        Ideal::new(u2.vars(), u2.prime(), gens).and_then(|i| has_empty_projective_zero_set(&i)).map(|e| {
            (e, String::from(if e { "fibres over the sextic are line pairs" } else { "some fibre is a double line" }))
        }),
    );
    r
}

/// Every geometric certificate of a model, in pipeline order.
pub fn certify_model(model: &QuarticModel, rng: &mut SplitMix64) -> CertReport {
    let mut r = CertReport::new();
    let (u2, u3, u4, f) = (model.u2(), model.u3(), model.u4(), model.sextic());
    r.pass_if(
        "model.general_position",
        general_position_p3(&model.nodes()[1..]) && general_position_p2(model.sextic_nodes()),
        format!("P1..P5 = {}; sextic nodes {}", list(&model.nodes()[1..]), list(model.sextic_nodes())),
    );
    r.record(
        "model.identity",
        (|| {
            let v = model.quartic().vars();
            let x3 = Poly::monomial(v, Monomial::var(3), Fp::one(model.prime()));
            let lhs = &u2.with_vars(v)? * model.quartic();
            let s = &(&u2.with_vars(v)? * &x3) + &u3.with_vars(v)?;
            let rhs = &(&s * &s) - &f.with_vars(v)?;
            Ok((lhs == rhs, String::from("u2·F = (u2·x3 + u3)^2 - f")))
        })(),
    );
    r.extend(certify_singular_locus(model.quartic(), model.nodes(), rng));
    r.extend(certify_sextic_nodes(f, model.sextic_nodes(), [u2, u3, u4], rng));
    r.extend(certify_contact_conic(u2, u3, f, rng));
    r.extend(conic_bundle_fiber_check(u2, u3, u4, f));
    debug_assert_eq!(u2.vars(), &plane_vars());
    r
}
