//! Ideals of `F_p[x_0, …, x_{n-1}]` and the Gröbner-basis operations the
//! certificates are built from.

mod buchberger;
#[cfg(feature = "std")]
mod observe;
mod zero_dim;

use alloc::vec::Vec;

use buchberger::{buchberger, Ctx, GPoly};
#[cfg(feature = "std")]
pub use observe::observe_bases;
pub use zero_dim::{affine_chart, is_reduced_zero_dim, projective_degree, projective_is_reduced, zero_dim_degree};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{count_monomials, monomials_of_degree, Monomial, MonomialOrder, Poly, VarMask, Vars, MAX_VARS};
use crate::scalar::{Fp, Prime, Scalar};

/// A finitely generated ideal. Zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    vars: Vars,
    prime: Prime,
    generators: Vec<Poly>,
}

impl Ideal {
    pub fn new(vars: &Vars, prime: Prime, generators: impl IntoIterator<Item = Poly>) -> Result<Ideal> {
        let mut gens = Vec::new();
        for g in generators {
            if g.prime() != prime || g.vars() != vars {
                return Err(Error::IncompatibleVariables);
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal { vars: vars.clone(), prime, generators: gens })
    }

    /// The ideal generated by `gens`, which must be nonempty and share a ring.
    pub fn from_generators(gens: Vec<Poly>) -> Result<Ideal> {
        let first = gens.first().ok_or_else(|| Error::InvalidInput("empty generator list".into()))?;
        let (vars, prime) = (first.vars().clone(), first.prime());
        Self::new(&vars, prime, gens)
    }

    /// The homogeneous maximal ideal of a projective point.
    pub fn of_point(vars: &Vars, point: &[Fp]) -> Result<Ideal> {
        let n = vars.len();
        if point.len() != n {
            return Err(Error::IncompatibleVariables);
        }
        let prime = point[0].prime();
        let k = point.iter().rposition(|c| !c.is_zero()).ok_or_else(|| Error::InvalidInput("zero point".into()))?;
        // x_i·P_k − x_k·P_i for i ≠ k
        let gens = (0..n).filter(|&i| i != k).map(|i| {
            Poly::var(vars, prime, i).scale(point[k]) - Poly::var(vars, prime, k).scale(point[i])
        });
        Self::new(vars, prime, gens.collect::<Vec<_>>())
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Poly::is_homogeneous)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.prime != other.prime || self.vars != other.vars {
            return Err(Error::IncompatibleVariables);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ok(Ideal { generators: gens, ..self.clone() })
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Poly>) -> Result<Ideal> {
        let more = Ideal::new(&self.vars, self.prime, extra)?;
        self.sum(&more)
    }

    /// Product ideal `I·J`.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f.checked_mul(g)?);
            }
        }
        Ideal::new(&self.vars, self.prime, gens)
    }

    pub fn groebner(&self, order: MonomialOrder) -> GroebnerBasis {
        groebner(self, order)
    }

    /// Equality as ideals, by comparing reduced grevlex bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.prime == other.prime
            && self.vars == other.vars
            && self.groebner(MonomialOrder::Grevlex).elements == other.groebner(MonomialOrder::Grevlex).elements
    }

    fn with_vars(&self, vars: &Vars) -> Result<Ideal> {
        let gens = self.generators.iter().map(|g| g.with_vars(vars)).collect::<Result<Vec<_>>>()?;
        Ideal::new(vars, self.prime, gens)
    }
}

/// Reduced Gröbner basis together with its order and source ideal.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    vars: Vars,
    prime: Prime,
    elements: Vec<Poly>,
    flat: Vec<GPoly>,
    source: Ideal,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.vars == other.vars && self.elements == other.elements
    }
}

pub fn groebner(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    let ctx = Ctx::new(ideal.prime, order);
    let flat = buchberger(ideal, order);
    let elements = flat.iter().map(|g| ctx.export(g, &ideal.vars, ideal.prime)).collect();
    let gb = GroebnerBasis { order, vars: ideal.vars.clone(), prime: ideal.prime, elements, flat, source: ideal.clone() };
    #[cfg(feature = "std")]
    observe::notify(&gb);
    gb
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    /// Sorted by ascending leading monomial.
    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn source(&self) -> &Ideal {
        &self.source
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.flat.len() == 1 && self.flat[0].terms[0].0 == Monomial::ONE
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.flat.iter().map(|g| g.terms[0].0).collect()
    }

    fn ctx(&self) -> Ctx {
        Ctx::new(self.prime, self.order)
    }

    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        if f.prime() != self.prime || f.vars() != &self.vars {
            return Err(Error::IncompatibleVariables);
        }
        let ctx = self.ctx();
        let r = ctx.remainder(&ctx.import(f), &self.flat, None);
        Ok(ctx.export(&r, &self.vars, self.prime))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Buchberger's criterion, checked on every pair with no shortcuts.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let ctx = self.ctx();
        (0..self.flat.len()).all(|i| {
            (i + 1..self.flat.len()).all(|j| ctx.spoly_remainder(&self.flat[i], &self.flat[j], &self.flat).terms.is_empty())
        })
    }

    pub fn generators_reduce_to_zero(&self) -> bool {
        self.source.generators.iter().all(|g| self.contains(g).unwrap_or(false))
    }

    /// Monic, and no term of any element divisible by another leading term.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.flat.iter().enumerate().all(|(i, g)| {
            g.terms[0].1 == 1
                && g.terms.iter().all(|(m, _)| lms.iter().enumerate().all(|(j, l)| i == j || !l.divides(m)))
        })
    }

    fn is_standard(&self, m: &Monomial) -> bool {
        !self.flat.iter().any(|g| g.terms[0].0.divides(m))
    }

    pub fn standard_monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.vars.len(), d).into_iter().filter(|m| self.is_standard(m)).collect()
    }

    /// Krull dimension of the quotient ring; `None` for the unit ideal.
    /// Computed as the largest set of variables containing the support of
    /// no leading monomial.
    pub fn krull_dimension(&self) -> Option<usize> {
        if self.is_unit_ideal() {
            return None;
        }
        let n = self.vars.len();
        let supports: Vec<u16> = self
            .leading_monomials()
            .iter()
            .map(|m| (0..MAX_VARS).filter(|&i| m.exp(i) > 0).fold(0u16, |s, i| s | 1 << i))
            .collect();
        let best = (0u16..1 << n)
            .filter(|&s| supports.iter().all(|&sup| sup & !s != 0))
            .map(|s| s.count_ones() as usize)
            .max();
        best
    }
}

/// `I ∩ F_p[remaining variables]`, via an elimination order. The result
/// keeps the original variable set; its generators avoid `vars_to_remove`.
pub fn eliminate(ideal: &Ideal, vars_to_remove: VarMask) -> Ideal {
    if vars_to_remove.is_empty() {
        return Ideal { generators: groebner(ideal, MonomialOrder::Grevlex).elements, ..ideal.clone() };
    }
    let gb = groebner(ideal, MonomialOrder::elimination(vars_to_remove));
    let gens = gb.elements.into_iter().filter(|g| !g.involves(vars_to_remove)).collect();
    Ideal { generators: gens, ..ideal.clone() }
}

fn tag_ring(ideal: &Ideal) -> Result<(Vars, Poly)> {
    let ext = ideal.vars.with_tag()?;
    let t = Poly::var(&ext, ideal.prime, ext.len() - 1);
    Ok((ext, t))
}

/// `I ∩ J` as `(t·I + (1 − t)·J) ∩ F_p[x]`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.prime != b.prime || a.vars != b.vars {
        return Err(Error::IncompatibleVariables);
    }
    let (ext, t) = tag_ring(a)?;
    let one_minus_t = Poly::one(&ext, a.prime) - t.clone();
    let mut gens = Vec::new();
    for f in &a.generators {
        gens.push(&t * &f.with_vars(&ext)?);
    }
    for g in &b.generators {
        gens.push(&one_minus_t * &g.with_vars(&ext)?);
    }
    let lifted = Ideal::new(&ext, a.prime, gens)?;
    let elim = eliminate(&lifted, VarMask::single(ext.len() - 1));
    elim.with_vars(&a.vars)
}

/// `I : g^∞` as `(I + (1 − t·g)) ∩ F_p[x]`.
pub fn saturate(ideal: &Ideal, g: &Poly) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::InvalidInput("cannot saturate by zero".into()));
    }
    let (ext, t) = tag_ring(ideal)?;
    let mut gens: Vec<Poly> = ideal.generators.iter().map(|f| f.with_vars(&ext)).collect::<Result<_>>()?;
    gens.push(Poly::one(&ext, ideal.prime) - &t * &g.with_vars(&ext)?);
    let lifted = Ideal::new(&ext, ideal.prime, gens)?;
    let elim = eliminate(&lifted, VarMask::single(ext.len() - 1));
    elim.with_vars(&ideal.vars)
}

/// `I : m^∞` for the irrelevant ideal `m = (x_0, …, x_{n-1})`, as the
/// intersection of the saturations by each variable.
pub fn saturate_irrelevant(ideal: &Ideal) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for i in 0..ideal.vars.len() {
        let s = saturate(ideal, &Poly::var(&ideal.vars, ideal.prime, i))?;
        acc = Some(match acc {
            None => s,
            Some(a) => intersect(&a, &s)?,
        });
    }
    Ok(acc.unwrap_or_else(|| ideal.clone()))
}

/// `dim_K (K[x]/I)_d`.
pub fn hilbert_value(ideal: &Ideal, d: u32) -> Result<usize> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(groebner(ideal, MonomialOrder::Grevlex).standard_monomials_of_degree(d).len())
}

/// A basis of `I_d`, in reduced echelon form over the degree-`d` monomial
/// basis.
pub fn graded_piece_basis(ideal: &Ideal, d: u32) -> Result<Vec<Poly>> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let gb = groebner(ideal, MonomialOrder::Grevlex);
    let n = ideal.vars.len();
    let width = count_monomials(n, d);
    let mut m = Matrix::<Fp>::zeros(ideal.prime, 0, width);
    for g in gb.elements() {
        let Some(e) = g.total_degree() else { continue };
        if e > d {
            continue;
        }
        for mono in monomials_of_degree(n, d - e) {
            m.push_row(&g.mul_monomial(&mono, Fp::one(ideal.prime)).coeff_vector(d)?);
        }
    }
    let basis = m.echelon_basis()?;
    (0..basis.nrows()).map(|i| Poly::from_coeff_vector(&ideal.vars, ideal.prime, d, basis.row(i))).collect()
}

/// Whether a homogeneous ideal cuts out the empty set in projective space,
/// i.e. its saturation by the irrelevant ideal is the unit ideal. Holds
/// exactly when the affine cone is at most the origin.
pub fn has_empty_projective_zero_set(ideal: &Ideal) -> Result<bool> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(groebner(ideal, MonomialOrder::Grevlex).krull_dimension().unwrap_or(0) == 0)
}
