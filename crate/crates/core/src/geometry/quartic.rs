use alloc::vec::Vec;

use super::certify::certify_model;
use super::point::ProjPoint;
use crate::error::{Error, Result};
use crate::ideal::{graded_piece_basis, intersect, Ideal};
use crate::linalg::Matrix;
use crate::poly::{Homogeneity, Monomial, MultiPoly, Poly, VarSet, Vars};
use crate::rng::SplitMix64;
use crate::scalar::{Fp, Prime, Scalar};

/// `x0, x1, x2`: coordinates on the plane of lines through `P0`.
pub fn plane_vars() -> Vars {
    VarSet::indexed("x", 3)
}

/// `x0, …, x3`.
pub fn space_vars() -> Vars {
    VarSet::indexed("x", 4)
}

/// How a given cubic form relates to the `x3`-coefficient of the quartic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum U3Reading {
    /// `F = u2·x3² + 2·u3·x3 + u4`.
    Half,
    /// `F = u2·x3² + u3·x3 + u4`.
    Full,
}

impl U3Reading {
    pub fn as_str(self) -> &'static str {
        match self {
            U3Reading::Half => "half",
            U3Reading::Full => "full",
        }
    }

    pub fn parse(s: &str) -> Option<U3Reading> {
        match s {
            "half" => Some(U3Reading::Half),
            "full" => Some(U3Reading::Full),
            _ => None,
        }
    }
}

fn expect_degree<S: Scalar>(f: &MultiPoly<S>, d: u32) -> Result<()> {
    match f.homogeneity() {
        Homogeneity::Zero => Ok(()),
        Homogeneity::Degree(e) if e == d => Ok(()),
        Homogeneity::Degree(e) => Err(Error::IncompatibleDegrees { expected: d, found: e }),
        Homogeneity::Inhomogeneous => Err(Error::NotHomogeneous),
    }
}

/// `u2·x3² + 2·u3·x3 + u4` in `x0..x3`.
pub fn assemble_quartic<S: Scalar>(u2: &MultiPoly<S>, u3: &MultiPoly<S>, u4: &MultiPoly<S>) -> Result<MultiPoly<S>> {
    expect_degree(u2, 2)?;
    expect_degree(u3, 3)?;
    expect_degree(u4, 4)?;
    let v = space_vars();
    let p = u2.prime();
    let x3 = MultiPoly::<S>::var(&v, p, 3);
    let two = S::from_i64(p, 2);
    let a = &u2.with_vars(&v)? * &(&x3 * &x3);
    let b = &u3.with_vars(&v)?.scale(two) * &x3;
    Ok(&(&a + &b) + &u4.with_vars(&v)?)
}

/// `u3² − u2·u4`.
pub fn discriminant_sextic<S: Scalar>(u2: &MultiPoly<S>, u3: &MultiPoly<S>, u4: &MultiPoly<S>) -> Result<MultiPoly<S>> {
    expect_degree(u2, 2)?;
    expect_degree(u3, 3)?;
    expect_degree(u4, 4)?;
    Ok(&(u3 * u3) - &(u2 * u4))
}

/// The forms `(u2, u3, u4)` of a quartic in `x0..x3` singular at
/// `(0:0:0:1)`, with `u3` half the `x3`-coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split<S: Scalar> {
    pub u2: MultiPoly<S>,
    pub u3: MultiPoly<S>,
    pub u4: MultiPoly<S>,
}

/// Splits a quartic already normalized so that its distinguished node is
/// `(0:0:0:1)`.
pub fn split_forms<S: Scalar>(f: &MultiPoly<S>) -> Result<Split<S>> {
    expect_degree(f, 4)?;
    if f.nvars() != 4 {
        return Err(Error::IncompatibleVariables);
    }
    let p = f.prime();
    let plane = plane_vars();
    let mut parts: [MultiPoly<S>; 5] = core::array::from_fn(|_| MultiPoly::zero(&plane, p));
    for (m, c) in f.terms() {
        let k = m.exp(3) as usize;
        let mut rest = *m;
        rest.set_exp(3, 0);
        parts[k].add_term(rest, *c);
    }
    if !parts[3].is_zero() || !parts[4].is_zero() {
        return Err(Error::NotSingularAtP0);
    }
    let half = S::from_i64(p, 2).inv()?;
    let [u4, u3x2, u2, _, _] = parts;
    Ok(Split { u2, u3: u3x2.scale(half), u4 })
}

/// An invertible `A` with `A·e3 = p0`; the substitution `x = A·x'` moves
/// `p0` to `(0:0:0:1)`.
pub fn normalizing_transform(p0: &ProjPoint) -> Matrix<Fp> {
    let prime = p0.prime();
    let k = p0.chart();
    let mut a = Matrix::<Fp>::zeros(prime, 4, 4);
    let others = (0..4).filter(|&j| j != k);
    for (col, j) in others.enumerate() {
        a[(j, col)] = Fp::one(prime);
    }
    for i in 0..4 {
        a[(i, 3)] = p0.coords()[i];
    }
    a
}

/// `F(A·x)`.
pub fn transform_quartic<S: Scalar>(f: &MultiPoly<S>, a: &Matrix<S>) -> Result<MultiPoly<S>> {
    let v = f.vars().clone();
    let p = f.prime();
    let images: Vec<MultiPoly<S>> = (0..4)
        .map(|i| MultiPoly::from_terms(&v, p, (0..4).map(|j| (Monomial::var(j), a[(i, j)]))))
        .collect();
    f.substitute(&images)
}

/// Moves `p0` to `(0:0:0:1)` and splits. Also returns the transform used.
pub fn split_quartic(f: &Poly, p0: &ProjPoint) -> Result<(Split<Fp>, Matrix<Fp>)> {
    if f.nvars() != 4 || p0.len() != 4 {
        return Err(Error::IncompatibleVariables);
    }
    let a = normalizing_transform(p0);
    let g = transform_quartic(f, &a)?;
    let split = split_forms(&g)?;
    if split.u2.quadratic_form_matrix()?.rank()? < 3 {
        return Err(Error::NotOrdinaryNode);
    }
    Ok((split, a))
}

/// `⋂ p_i²` for the homogeneous maximal ideals `p_i` of `points`.
pub fn double_point_ideal(points: &[ProjPoint]) -> Result<Ideal> {
    let v = space_vars();
    let mut acc: Option<Ideal> = None;
    for pt in points {
        let m = Ideal::of_point(&v, pt.coords())?;
        let sq = m.product(&m)?;
        acc = Some(match acc {
            None => sq,
            Some(a) => intersect(&a, &sq)?,
        });
    }
    acc.ok_or_else(|| Error::InvalidInput("no points given".into()))
}

/// A basis of the quartics singular at every point of `points`.
pub fn quartics_with_nodes(points: &[ProjPoint]) -> Result<Vec<Poly>> {
    graded_piece_basis(&double_point_ideal(points)?, 4)
}

/// A 6-nodal quartic in normal form: `P0 = (0:0:0:1)` comes first among the
/// nodes and `F = u2·x3² + 2·u3·x3 + u4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticModel {
    prime: Prime,
    nodes: Vec<ProjPoint>,
    u2: Poly,
    u3: Poly,
    u4: Poly,
    quartic: Poly,
    sextic: Poly,
    sextic_nodes: Vec<ProjPoint>,
    reading: U3Reading,
}

impl QuarticModel {
    /// Builds a model from the three forms. `u3_given` is interpreted per
    /// `reading`; with `None`, both readings are tried and the first one
    /// under which the quartic is singular at all nodes and the sextic at
    /// all projected nodes is kept (falling back to `Half`).
    pub fn from_forms(
        nodes: Vec<ProjPoint>,
        u2: Poly,
        u3_given: Poly,
        u4: Poly,
        reading: Option<U3Reading>,
    ) -> Result<QuarticModel> {
        let prime = u2.prime();
        check_nodes(&nodes, prime)?;
        let plane = plane_vars();
        for u in [&u2, &u3_given, &u4] {
            if u.vars() != &plane || u.prime() != prime {
                return Err(Error::IncompatibleVariables);
            }
        }
        let build = |r: U3Reading| -> Result<QuarticModel> {
            let u3 = match r {
                U3Reading::Half => u3_given.clone(),
                U3Reading::Full => u3_given.scale(Fp::new(prime, 2).inv()?),
            };
            Self::assemble(nodes.clone(), u2.clone(), u3, u4.clone(), r)
        };
        match reading {
            Some(r) => build(r),
            None => {
                let half = build(U3Reading::Half)?;
                if half.nodes_are_singular()? {
                    return Ok(half);
                }
                let full = build(U3Reading::Full)?;
                Ok(if full.nodes_are_singular()? { full } else { half })
            }
        }
    }

    /// Builds a model from a quartic and its six nodes, `P0` first.
    pub fn from_quartic(quartic: &Poly, nodes: Vec<ProjPoint>) -> Result<QuarticModel> {
        if nodes.is_empty() {
            return Err(Error::InvalidInput("a model needs six nodes".into()));
        }
        let (split, a) = split_quartic(quartic, &nodes[0])?;
        let a_inv = a.inverse()?;
        let moved = nodes
            .iter()
            .map(|pt| {
                let c: Vec<Fp> = (0..4).map(|i| (0..4).fold(Fp::zero(pt.prime()), |s, j| s + a_inv[(i, j)] * pt.coords()[j])).collect();
                ProjPoint::new(c)
            })
            .collect::<Result<Vec<_>>>()?;
        check_nodes(&moved, quartic.prime())?;
        Self::assemble(moved, split.u2, split.u3, split.u4, U3Reading::Half)
    }

    fn assemble(nodes: Vec<ProjPoint>, u2: Poly, u3: Poly, u4: Poly, reading: U3Reading) -> Result<QuarticModel> {
        let quartic = assemble_quartic(&u2, &u3, &u4)?;
        let sextic = discriminant_sextic(&u2, &u3, &u4)?;
        let sextic_nodes = nodes[1..].iter().map(|p| p.project().expect("checked")).collect();
        Ok(QuarticModel { prime: u2.prime(), nodes, u2, u3, u4, quartic, sextic, sextic_nodes, reading })
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    /// `P0, …, P5` with `P0 = (0:0:0:1)`.
    pub fn nodes(&self) -> &[ProjPoint] {
        &self.nodes
    }

    pub fn u2(&self) -> &Poly {
        &self.u2
    }

    /// Half the `x3`-coefficient of the quartic.
    pub fn u3(&self) -> &Poly {
        &self.u3
    }

    pub fn u4(&self) -> &Poly {
        &self.u4
    }

    /// The cubic form as it would be written under `reading`.
    pub fn u3_as(&self, reading: U3Reading) -> Poly {
        match reading {
            U3Reading::Half => self.u3.clone(),
            U3Reading::Full => self.u3.scale(Fp::new(self.prime, 2)),
        }
    }

    pub fn quartic(&self) -> &Poly {
        &self.quartic
    }

    pub fn sextic(&self) -> &Poly {
        &self.sextic
    }

    /// Projections of `P1, …, P5` from `P0`.
    pub fn sextic_nodes(&self) -> &[ProjPoint] {
        &self.sextic_nodes
    }

    /// The reading under which the input cubic form was taken.
    pub fn reading(&self) -> U3Reading {
        self.reading
    }

    /// Quartic singular at every node and sextic singular at every
    /// projected node (evaluation only; no claim about other points).
    pub fn nodes_are_singular(&self) -> Result<bool> {
        Ok(vanishes_with_gradient(&self.quartic, &self.nodes)? && vanishes_with_gradient(&self.sextic, &self.sextic_nodes)?)
    }
}

fn vanishes_with_gradient(f: &Poly, points: &[ProjPoint]) -> Result<bool> {
    for pt in points {
        if !f.evaluate(pt.coords())?.is_zero() {
            return Ok(false);
        }
        for g in f.gradient() {
            if !g.evaluate(pt.coords())?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_nodes(nodes: &[ProjPoint], prime: Prime) -> Result<()> {
    if nodes.len() != 6 {
        return Err(Error::InvalidInput(alloc::format!("expected 6 nodes, got {}", nodes.len())));
    }
    if nodes.iter().any(|p| p.len() != 4 || p.prime() != prime) {
        return Err(Error::InvalidInput("nodes must be points of P^3 over the model's field".into()));
    }
    if nodes[0].symmetric_coords() != [0, 0, 0, 1] {
        return Err(Error::InvalidInput("the first node must be (0:0:0:1)".into()));
    }
    for (i, p) in nodes.iter().enumerate().skip(1) {
        if p.project().is_none() || nodes[..i].contains(p) {
            return Err(Error::InvalidInput(alloc::format!("node {i} repeats an earlier node")));
        }
    }
    Ok(())
}

/// A certified model drawn at random, with what is needed to replay it.
#[derive(Clone, Debug)]
pub struct RandomDraw {
    pub model: QuarticModel,
    pub seed: u64,
    pub tries: u32,
    /// Coordinates of the quartic in the reduced echelon basis of quartics
    /// singular at the six nodes.
    pub coefficients: Vec<Fp>,
}

/// Draws random members of the linear system of quartics singular at
/// `nodes` (which must start with `(0:0:0:1)`) until one passes every
/// geometric certification.
pub fn random_quartic(nodes: &[ProjPoint], seed: u64, max_tries: u32) -> Result<RandomDraw> {
    let prime = nodes.first().ok_or_else(|| Error::InvalidInput("no nodes".into()))?.prime();
    check_nodes(nodes, prime)?;
    let basis = quartics_with_nodes(nodes)?;
    let v = space_vars();
    let mut rng = SplitMix64::new(seed);
    for tries in 1..=max_tries {
        let coefficients: Vec<Fp> = basis.iter().map(|_| rng.fp(prime)).collect();
        let mut f = Poly::zero(&v, prime);
        for (b, &c) in basis.iter().zip(&coefficients) {
            f = &f + &b.scale(c);
        }
        let Ok(model) = QuarticModel::from_quartic(&f, nodes.to_vec()) else {
            continue;
        };
        if certify_model(&model, &mut rng).passed() {
            return Ok(RandomDraw { model, seed, tries, coefficients });
        }
    }
    Err(Error::NoGeneralMemberFound { tries: max_tries })
}
