//! Multivariate polynomials over [`Fp`] or [`Dual`] with a fixed, named
//! variable set.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector and zero
//! coefficients are never stored, so equality is structural. Iteration in a
//! particular [`MonomialOrder`] goes through [`MultiPoly::sorted_terms`].

mod monomial;
mod parse;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub use monomial::{count_monomials, monomials_of_degree, BaseOrder, Monomial, MonomialOrder, VarMask, MAX_VARS};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Dual, Fp, Prime, Scalar};

/// Ordered, distinct variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
}

pub type Vars = Arc<VarSet>;

impl VarSet {
    pub fn new<I, T>(names: I) -> Result<Vars>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidInput(format!("duplicate variable {n}")));
            }
        }
        Ok(Arc::new(VarSet { names }))
    }

    /// `prefix0, …, prefix{n-1}`.
    pub fn indexed(prefix: &str, n: usize) -> Vars {
        Self::new((0..n).map(|i| format!("{prefix}{i}"))).expect("too many variables")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// This set with one fresh tag variable appended (at index `len()`).
    pub fn with_tag(&self) -> Result<Vars> {
        let mut name = String::from("t");
        let mut k = 0;
        while self.names.contains(&name) {
            name = format!("t{k}");
            k += 1;
        }
        let mut names = self.names.clone();
        names.push(name);
        Self::new(names)
    }
}

/// Result of a homogeneity query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(u32),
    Inhomogeneous,
}

#[derive(Clone)]
pub struct MultiPoly<S> {
    vars: Vars,
    prime: Prime,
    terms: BTreeMap<Monomial, S>,
}

pub type Poly = MultiPoly<Fp>;
pub type DualPoly = MultiPoly<Dual>;

impl<S: Scalar> PartialEq for MultiPoly<S> {
    fn eq(&self, other: &Self) -> bool {
        self.prime == other.prime && same_vars(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl<S: Scalar> Eq for MultiPoly<S> {}

fn same_vars(a: &Vars, b: &Vars) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<S: Scalar> MultiPoly<S> {
    pub fn zero(vars: &Vars, prime: Prime) -> Self {
        MultiPoly { vars: vars.clone(), prime, terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: S) -> Self {
        Self::monomial(vars, Monomial::ONE, c)
    }

    pub fn one(vars: &Vars, prime: Prime) -> Self {
        Self::constant(vars, S::one(prime))
    }

    pub fn var(vars: &Vars, prime: Prime, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        Self::monomial(vars, Monomial::var(i), S::one(prime))
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: S) -> Self {
        let mut p = Self::zero(vars, c.prime());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms(vars: &Vars, prime: Prime, terms: impl IntoIterator<Item = (Monomial, S)>) -> Self {
        let mut p = Self::zero(vars, prime);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let v = *e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).copied().unwrap_or_else(|| S::zero(self.prime))
    }

    /// Terms in descending `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, S)> {
        let mut v: Vec<(Monomial, S)> = self.terms.iter().map(|(m, c)| (*m, *c)).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(Monomial, S)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (*m, *c))
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degs.all(|e| e == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity() != Homogeneity::Inhomogeneous
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.prime != other.prime || !same_vars(&self.vars, &other.vars) {
            return Err(Error::IncompatibleVariables);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, *c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -*c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(&self.vars, self.prime);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), *ca * *cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: S) -> Self {
        let mut out = Self::zero(&self.vars, self.prime);
        for (m, a) in &self.terms {
            out.add_term(*m, *a * c);
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: S) -> Self {
        let mut out = Self::zero(&self.vars, self.prime);
        for (a, x) in &self.terms {
            out.add_term(a.mul(m), *x * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.vars, self.prime);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.vars, self.prime);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut d = *m;
            d.set_exp(var, e - 1);
            out.add_term(d, *c * S::from_i64(self.prime, e as i64));
        }
        out
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars()).map(|i| self.partial_derivative(i)).collect()
    }

    /// `self(images[0], …, images[n-1])`. The result lives in the images'
    /// variable set.
    pub fn substitute(&self, images: &[Self]) -> Result<Self> {
        if images.len() != self.nvars() || images.is_empty() && !self.vars.is_empty() {
            return Err(Error::IncompatibleVariables);
        }
        let Some(first) = images.first() else {
            return Ok(self.clone());
        };
        for img in images {
            first.check_compatible(img)?;
        }
        let target = first.vars.clone();
        // cache powers of each image
        let mut powers: Vec<Vec<Self>> = images.iter().map(|g| vec![Self::one(&target, self.prime), g.clone()]).collect();
        let mut out = Self::zero(&target, self.prime);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&target, *c);
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                while pw.len() <= e {
                    let next = &pw[pw.len() - 1] * &images[i];
                    pw.push(next);
                }
                if e > 0 {
                    t = &t * &pw[e];
                }
            }
            for (mm, cc) in t.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[S]) -> Result<S> {
        if point.len() != self.nvars() {
            return Err(Error::IncompatibleVariables);
        }
        let mut acc = S::zero(self.prime);
        for (m, c) in &self.terms {
            let mut t = *c;
            for (i, &x) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// The sum of the degree-`d` terms.
    pub fn graded_part(&self, d: u32) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            prime: self.prime,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (*m, *c)).collect(),
        }
    }

    /// Coordinates in the degree-`d` monomial basis of
    /// [`monomials_of_degree`].
    pub fn coeff_vector(&self, d: u32) -> Result<Vec<S>> {
        match self.homogeneity() {
            Homogeneity::Zero => {}
            Homogeneity::Degree(e) if e == d => {}
            Homogeneity::Degree(e) => return Err(Error::IncompatibleDegrees { expected: d, found: e }),
            Homogeneity::Inhomogeneous => return Err(Error::NotHomogeneous),
        }
        Ok(monomials_of_degree(self.nvars(), d).iter().map(|m| self.coeff(m)).collect())
    }

    pub fn from_coeff_vector(vars: &Vars, prime: Prime, d: u32, coeffs: &[S]) -> Result<Self> {
        let basis = monomials_of_degree(vars.len(), d);
        if basis.len() != coeffs.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} coefficients, got {}",
                basis.len(),
                coeffs.len()
            )));
        }
        Ok(Self::from_terms(vars, prime, basis.into_iter().zip(coeffs.iter().copied())))
    }

    /// Symmetric `Q` with `self = ᵗx Q x`; mixed coefficients are halved.
    pub fn quadratic_form_matrix(&self) -> Result<Matrix<S>> {
        match self.homogeneity() {
            Homogeneity::Zero | Homogeneity::Degree(2) => {}
            Homogeneity::Degree(e) => return Err(Error::IncompatibleDegrees { expected: 2, found: e }),
            Homogeneity::Inhomogeneous => return Err(Error::NotHomogeneous),
        }
        let n = self.nvars();
        let half = S::from_i64(self.prime, 2).inv()?;
        let mut q = Matrix::zeros(self.prime, n, n);
        for (m, c) in &self.terms {
            let idx: Vec<usize> = (0..n).filter(|&i| m.exp(i) > 0).collect();
            match idx.as_slice() {
                [i] => q[(*i, *i)] = *c,
                [i, j] => {
                    q[(*i, *j)] = *c * half;
                    q[(*j, *i)] = *c * half;
                }
                _ => unreachable!("degree-2 monomial"),
            }
        }
        Ok(q)
    }

    /// The quadric `ᵗx Q x` of a square matrix (not necessarily symmetric).
    pub fn from_quadratic_form(vars: &Vars, q: &Matrix<S>) -> Self {
        let n = vars.len();
        assert_eq!((q.nrows(), q.ncols()), (n, n));
        let mut out = Self::zero(vars, q.prime());
        for i in 0..n {
            for j in 0..n {
                out.add_term(Monomial::var(i).mul(&Monomial::var(j)), q[(i, j)]);
            }
        }
        out
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(S) -> T) -> MultiPoly<T> {
        let mut out = MultiPoly::zero(&self.vars, self.prime);
        for (m, c) in &self.terms {
            out.add_term(*m, f(*c));
        }
        out
    }

    /// Reinterprets the polynomial in `vars`, which must have at least as
    /// many variables as the polynomial uses.
    pub fn with_vars(&self, vars: &Vars) -> Result<Self> {
        for m in self.terms.keys() {
            if (vars.len()..MAX_VARS).any(|i| m.exp(i) > 0) {
                return Err(Error::IncompatibleVariables);
            }
        }
        Ok(MultiPoly { vars: vars.clone(), prime: self.prime, terms: self.terms.clone() })
    }

    pub fn involves(&self, mask: VarMask) -> bool {
        self.terms.keys().any(|m| m.involves_any(mask))
    }

    /// Sets variable `var` to 1 and drops it from the variable set.
    pub fn dehomogenize(&self, var: usize, target: &Vars) -> Result<Self> {
        if target.len() + 1 != self.nvars() {
            return Err(Error::IncompatibleVariables);
        }
        let mut out = Self::zero(target, self.prime);
        for (m, c) in &self.terms {
            let mut e = [0u16; MAX_VARS];
            let mut k = 0;
            for i in 0..self.nvars() {
                if i != var {
                    e[k] = m.exp(i);
                    k += 1;
                }
            }
            out.add_term(Monomial::new(&e[..target.len()]), *c);
        }
        Ok(out)
    }

    /// Homogenizes with respect to variable `var` of `target` (which has
    /// one more variable than `self`, inserted at index `var`).
    pub fn homogenize(&self, var: usize, target: &Vars) -> Result<Self> {
        if target.len() != self.nvars() + 1 {
            return Err(Error::IncompatibleVariables);
        }
        let Some(d) = self.total_degree() else {
            return Ok(Self::zero(target, self.prime));
        };
        let mut out = Self::zero(target, self.prime);
        for (m, c) in &self.terms {
            let mut e = [0u16; MAX_VARS];
            let mut k = 0;
            for (i, slot) in e.iter_mut().enumerate().take(target.len()) {
                if i == var {
                    *slot = (d - m.degree()) as u16;
                } else {
                    *slot = m.exp(k);
                    k += 1;
                }
            }
            out.add_term(Monomial::new(&e[..target.len()]), *c);
        }
        Ok(out)
    }

    pub fn make_monic(&self, order: MonomialOrder) -> Result<Self> {
        match self.leading_term(order) {
            None => Ok(self.clone()),
            Some((_, c)) => Ok(self.scale(c.inv()?)),
        }
    }
}

impl MultiPoly<Fp> {
    pub fn to_dual(&self) -> DualPoly {
        self.map_coeffs(Dual::from_fp)
    }
}

impl MultiPoly<Dual> {
    pub fn constant_part(&self) -> Poly {
        self.map_coeffs(|c| c.a)
    }

    pub fn eps_part(&self) -> Poly {
        self.map_coeffs(|c| c.b)
    }

    /// `base + ε·tangent`.
    pub fn from_parts(base: &Poly, tangent: &Poly) -> Result<DualPoly> {
        base.check_compatible(tangent)?;
        let mut out = base.to_dual();
        for (m, c) in tangent.terms() {
            out.add_term(*m, Dual::new(Fp::zero(base.prime), *c));
        }
        Ok(out)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, S: Scalar> $tr<&'a MultiPoly<S>> for &'a MultiPoly<S> {
            type Output = MultiPoly<S>;
            /// Panics on incompatible variable sets; see the `checked_*` variants.
            fn $method(self, rhs: &'a MultiPoly<S>) -> MultiPoly<S> {
                self.$checked(rhs).expect("incompatible polynomial rings")
            }
        }

        impl<S: Scalar> $tr for MultiPoly<S> {
            type Output = MultiPoly<S>;
            fn $method(self, rhs: MultiPoly<S>) -> MultiPoly<S> {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<S: Scalar> Neg for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn neg(self) -> MultiPoly<S> {
        self.scale(-S::one(self.prime))
    }
}

impl<S: Scalar> Neg for MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn neg(self) -> MultiPoly<S> {
        -&self
    }
}

impl<S: Scalar> fmt::Debug for MultiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms(MonomialOrder::Grevlex).iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, name) in self.vars.names().iter().enumerate() {
                match m.exp(i) {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    e => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// Compares two polynomials' leading monomials; zero is smallest.
pub fn cmp_leading<S: Scalar>(a: &MultiPoly<S>, b: &MultiPoly<S>, order: MonomialOrder) -> Ordering {
    match (a.leading_term(order), b.leading_term(order)) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
        (Some((x, _)), Some((y, _))) => order.cmp(&x, &y),
    }
}

/// Determinant of a 2×2 polynomial matrix.
pub fn det2<S: Scalar>(a: &MultiPoly<S>, b: &MultiPoly<S>, c: &MultiPoly<S>, d: &MultiPoly<S>) -> MultiPoly<S> {
    &(a * d) - &(b * c)
}

/// Determinant of a 3×3 polynomial matrix by cofactor expansion along the
/// first row.
pub fn det3<S: Scalar>(m: &[[MultiPoly<S>; 3]; 3]) -> MultiPoly<S> {
    let minor = |j: usize| {
        let (a, b) = match j {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        det2(&m[1][a], &m[1][b], &m[2][a], &m[2][b])
    };
    let mut out = &m[0][0] * &minor(0);
    out = &out - &(&m[0][1] * &minor(1));
    &out + &(&m[0][2] * &minor(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Prime {
        Prime::new(101).unwrap()
    }

    fn x(vars: &Vars, i: usize) -> Poly {
        Poly::var(vars, p(), i)
    }

    #[test]
    fn binomial_square() {
        let v = VarSet::indexed("x", 2);
        let s = &x(&v, 0) + &x(&v, 1);
        let sq = &s * &s;
        assert_eq!(sq, Poly::parse("x0^2+2*x0*x1+x1^2", &v, p()).unwrap());
        let z = Poly::zero(&v, p());
        assert!((&sq * &z).is_zero());
    }

    #[test]
    fn mismatched_vars_rejected() {
        let a = x(&VarSet::indexed("x", 2), 0);
        let b = x(&VarSet::indexed("y", 2), 0);
        assert_eq!(a.checked_add(&b), Err(Error::IncompatibleVariables));
    }

    #[test]
    fn derivative_examples() {
        let v = VarSet::indexed("x", 4);
        let f = Poly::parse("x0^2*x3", &v, p()).unwrap();
        assert_eq!(f.partial_derivative(3), Poly::parse("x0^2", &v, p()).unwrap());
        assert!(Poly::constant(&v, Fp::new(p(), 7)).partial_derivative(1).is_zero());
    }

    #[test]
    fn substitute_examples() {
        let y = VarSet::indexed("y", 2);
        let xv = VarSet::indexed("x", 2);
        let f = Poly::parse("y0*y1", &y, p()).unwrap();
        let imgs = [Poly::parse("x0^2", &xv, p()).unwrap(), Poly::parse("x1^3", &xv, p()).unwrap()];
        assert_eq!(f.substitute(&imgs).unwrap(), Poly::parse("x0^2*x1^3", &xv, p()).unwrap());
        assert_eq!(f.substitute(&imgs[..1]), Err(Error::IncompatibleVariables));
        let g = Poly::parse("y0^2+3*y0*y1", &y, p()).unwrap();
        let cubics = [Poly::parse("x0^3+x1^3", &xv, p()).unwrap(), Poly::parse("x0*x1^2", &xv, p()).unwrap()];
        assert_eq!(g.substitute(&cubics).unwrap().homogeneity(), Homogeneity::Degree(6));
    }

    #[test]
    fn graded_parts() {
        let v = VarSet::indexed("x", 2);
        let f = Poly::parse("x0^2+x0*x1+x1+3", &v, p()).unwrap();
        assert_eq!(f.graded_part(2), Poly::parse("x0^2+x0*x1", &v, p()).unwrap());
        assert!(f.graded_part(5).is_zero());
        let h = Poly::parse("x0^2+x0*x1", &v, p()).unwrap();
        assert_eq!(h.graded_part(2), h);
    }

    #[test]
    fn coeff_vectors() {
        let v = VarSet::indexed("y", 5);
        let q = Poly::parse("y0^2-y1*y4", &v, p()).unwrap();
        let c = q.coeff_vector(2).unwrap();
        assert_eq!(c.len(), 15);
        assert_eq!(Poly::from_coeff_vector(&v, p(), 2, &c).unwrap(), q);
        assert!(Poly::zero(&v, p()).coeff_vector(2).unwrap().iter().all(|c| c.is_zero()));
        let inh = Poly::parse("y0^2+y1", &v, p()).unwrap();
        assert_eq!(inh.coeff_vector(2), Err(Error::NotHomogeneous));
    }

    #[test]
    fn quadratic_form_examples() {
        let v = VarSet::indexed("x", 3);
        let q = Poly::parse("x0*x1", &v, p()).unwrap().quadratic_form_matrix().unwrap();
        assert_eq!(q[(0, 1)].value(), 51);
        assert_eq!(q[(1, 0)].value(), 51);
        let d = Poly::parse("x0^2", &v, p()).unwrap().quadratic_form_matrix().unwrap();
        assert_eq!(d[(0, 0)].value(), 1);
        assert_eq!(d.rank().unwrap(), 1);
        let u2 = Poly::parse("19*x0^2-33*x0*x1+50*x1^2-13*x0*x2+50*x1*x2-15*x2^2", &v, p()).unwrap();
        let m = u2.quadratic_form_matrix().unwrap();
        assert_eq!(m, m.transpose());
        assert_eq!(Poly::from_quadratic_form(&v, &m), u2);
    }

    #[test]
    fn dehomogenize_homogenize() {
        let v3 = VarSet::indexed("x", 3);
        let v2 = VarSet::indexed("x", 2);
        let f = Poly::parse("x0^2*x2+x1^3+x2^3", &v3, p()).unwrap();
        let a = f.dehomogenize(2, &v2).unwrap();
        assert_eq!(a, Poly::parse("x0^2+x1^3+1", &v2, p()).unwrap());
        assert_eq!(a.homogenize(2, &v3).unwrap(), f);
    }

    #[test]
    fn dual_parts() {
        let v = VarSet::indexed("x", 2);
        let a = Poly::parse("x0+x1", &v, p()).unwrap();
        let b = Poly::parse("x0*x1", &v, p()).unwrap();
        let d = DualPoly::from_parts(&a, &b).unwrap();
        assert_eq!(d.constant_part(), a);
        assert_eq!(d.eps_part(), b);
        let sq = &d * &d;
        assert_eq!(sq.constant_part(), &a * &a);
        assert_eq!(sq.eps_part(), (&a * &b).scale(Fp::new(p(), 2)));
    }
}
