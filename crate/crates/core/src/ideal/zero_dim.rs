//! Length and reducedness of zero-dimensional schemes.
//!
//! Affine ideals are handled directly through their standard monomials.
//! Projective ones are first moved to an affine chart whose hyperplane at
//! infinity provably misses the scheme, so no point is lost.

use alloc::vec::Vec;

use super::{groebner, has_empty_projective_zero_set, GroebnerBasis, Ideal};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{Monomial, MonomialOrder, Poly, VarSet, MAX_VARS};
use crate::rng::SplitMix64;
use crate::scalar::{Fp, Scalar};

/// Random linear forms tried when looking for a separating element or for a
/// hyperplane avoiding a projective scheme.
const RANDOM_TRIALS: usize = 20;

fn standard_monomials(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    if gb.is_unit_ideal() {
        return Ok(Vec::new());
    }
    let n = gb.vars().len();
    let lms = gb.leading_monomials();
    let mut bounds = [0u16; MAX_VARS];
    for (i, bound) in bounds.iter_mut().enumerate().take(n) {
        *bound = lms
            .iter()
            .filter(|m| m.pure_power_var() == Some(i))
            .map(|m| m.exp(i))
            .min()
            .ok_or(Error::PositiveDimensional)?;
    }
    let mut out = Vec::new();
    let mut cur = [0u16; MAX_VARS];
    loop {
        let m = Monomial::new(&cur[..n]);
        if !lms.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            cur[i] += 1;
            if cur[i] < bounds[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Vector-space dimension of `K[x]/I` for a zero-dimensional affine ideal
/// (0 for the unit ideal).
pub fn zero_dim_degree(ideal: &Ideal) -> Result<usize> {
    Ok(standard_monomials(&groebner(ideal, MonomialOrder::Grevlex))?.len())
}

/// Whether a zero-dimensional affine ideal is radical.
///
/// For a random linear form `ℓ`, the minimal polynomial of `ℓ` on `K[x]/I`
/// is computed. If it is not squarefree the quotient has a nilpotent and the
/// answer is `false`. If it is squarefree of full degree, `ℓ` generates a
/// reduced algebra and the answer is `true`. Otherwise `ℓ` failed to
/// separate points and a fresh one is drawn.
pub fn is_reduced_zero_dim(ideal: &Ideal, rng: &mut SplitMix64) -> Result<bool> {
    let gb = groebner(ideal, MonomialOrder::Grevlex);
    let basis = standard_monomials(&gb)?;
    let dim = basis.len();
    if dim == 0 {
        return Ok(true);
    }
    let (vars, prime) = (ideal.vars(), ideal.prime());
    let to_vec = |f: &Poly| -> Vec<Fp> { basis.iter().map(|m| f.coeff(m)).collect() };
    for _ in 0..RANDOM_TRIALS {
        let ell = Poly::from_terms(vars, prime, (0..vars.len()).map(|i| (Monomial::var(i), rng.fp(prime))));
        let mut powers: Vec<Vec<Fp>> = Vec::new();
        let mut cur = Poly::one(vars, prime);
        let minpoly = loop {
            powers.push(to_vec(&cur));
            let k = powers.len();
            let cols = Matrix::from_rows(prime, dim, powers.clone()).transpose();
            if cols.rank()? < k {
                let ker = cols.kernel()?;
                // the unique relation; its last coordinate is nonzero
                break ker.row(0).to_vec();
            }
            cur = gb.normal_form(&(&cur * &ell))?;
        };
        let m = trim(minpoly);
        if !is_squarefree(&m) {
            return Ok(false);
        }
        if m.len() - 1 == dim {
            return Ok(true);
        }
    }
    Err(Error::Inconclusive)
}

fn trim(mut v: Vec<Fp>) -> Vec<Fp> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn uni_rem(a: &[Fp], b: &[Fp]) -> Vec<Fp> {
    let mut r = a.to_vec();
    let lead_inv = b.last().expect("nonzero divisor").inv().expect("trimmed");
    while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - b.len();
        let f = *r.last().expect("nonempty") * lead_inv;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] -= f * c;
        }
        r.pop();
        r = trim(r);
        if r.len() < b.len() {
            break;
        }
    }
    trim(r)
}

fn is_zero_uni(a: &[Fp]) -> bool {
    a.iter().all(|c| c.is_zero())
}

/// `gcd(m, m') = 1`.
fn is_squarefree(m: &[Fp]) -> bool {
    if m.len() <= 2 {
        return true;
    }
    let prime = m[0].prime();
    let deriv: Vec<Fp> = trim(m.iter().enumerate().skip(1).map(|(i, &c)| c * Fp::new(prime, i as i64)).collect());
    if is_zero_uni(&deriv) {
        return false;
    }
    let (mut a, mut b) = (m.to_vec(), deriv);
    while !is_zero_uni(&b) {
        let r = uni_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len() == 1
}

/// An affine chart of a homogeneous ideal whose hyperplane at infinity
/// misses the projective zero set. Coordinate hyperplanes are tried first
/// (last variable first), then random ones.
pub fn affine_chart(ideal: &Ideal, rng: &mut SplitMix64) -> Result<Ideal> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let gb = groebner(ideal, MonomialOrder::Grevlex);
    let n = ideal.vars().len();
    if gb.krull_dimension().is_some_and(|d| d >= 2) {
        return Err(Error::PositiveDimensional);
    }
    let (vars, prime) = (ideal.vars(), ideal.prime());
    let names = vars.names();
    for k in (0..n).rev() {
        let h = Poly::var(vars, prime, k);
        if has_empty_projective_zero_set(&ideal.with_generators([h])?)? {
            let target = VarSet::new(names.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, s)| s.clone()))?;
            let gens = ideal.generators().iter().map(|g| g.dehomogenize(k, &target)).collect::<Result<Vec<_>>>()?;
            return Ideal::new(&target, prime, gens);
        }
    }
    let target = VarSet::new(names[..n - 1].iter().cloned())?;
    for _ in 0..RANDOM_TRIALS {
        // ℓ = x_{n-1} + Σ c_i x_i; the chart ℓ = 1 sends x_{n-1} to 1 − Σ c_i x_i
        let coeffs: Vec<Fp> = (0..n - 1).map(|_| rng.fp(prime)).collect();
        let mut ell = Poly::var(vars, prime, n - 1);
        for (i, &c) in coeffs.iter().enumerate() {
            ell = ell + Poly::var(vars, prime, i).scale(c);
        }
        if !has_empty_projective_zero_set(&ideal.with_generators([ell])?)? {
            continue;
        }
        let mut images: Vec<Poly> = (0..n - 1).map(|i| Poly::var(&target, prime, i)).collect();
        let mut last = Poly::one(&target, prime);
        for (i, &c) in coeffs.iter().enumerate() {
            last = last - Poly::var(&target, prime, i).scale(c);
        }
        images.push(last);
        let gens = ideal.generators().iter().map(|g| g.substitute(&images)).collect::<Result<Vec<_>>>()?;
        return Ideal::new(&target, prime, gens);
    }
    Err(Error::Inconclusive)
}

/// Length of the projective scheme cut out by a homogeneous ideal, which
/// must be at most zero-dimensional (0 when empty).
pub fn projective_degree(ideal: &Ideal, rng: &mut SplitMix64) -> Result<usize> {
    zero_dim_degree(&affine_chart(ideal, rng)?)
}

pub fn projective_is_reduced(ideal: &Ideal, rng: &mut SplitMix64) -> Result<bool> {
    is_reduced_zero_dim(&affine_chart(ideal, rng)?, rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Vars;
    use crate::scalar::Prime;

    fn p() -> Prime {
        Prime::new(101).unwrap()
    }

    fn ideal(vars: &Vars, gens: &[&str]) -> Ideal {
        Ideal::new(vars, p(), gens.iter().map(|s| Poly::parse(s, vars, p()).unwrap()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn degrees() {
        let v = VarSet::new(["x", "y"]).unwrap();
        assert_eq!(zero_dim_degree(&ideal(&v, &["x^2", "y"])).unwrap(), 2);
        assert_eq!(zero_dim_degree(&ideal(&v, &["x-3", "y+1"])).unwrap(), 1);
        assert_eq!(zero_dim_degree(&ideal(&v, &["x*y"])), Err(Error::PositiveDimensional));
        assert_eq!(zero_dim_degree(&ideal(&v, &["x", "x-1"])).unwrap(), 0);
    }

    #[test]
    fn reducedness() {
        let v = VarSet::new(["x", "y"]).unwrap();
        let mut rng = SplitMix64::new(1);
        assert!(!is_reduced_zero_dim(&ideal(&v, &["x^2", "y"]), &mut rng).unwrap());
        assert!(is_reduced_zero_dim(&ideal(&v, &["x^2-x", "y"]), &mut rng).unwrap());
        // x^2+1 is irreducible mod 103 (≡ 3 mod 4): two conjugate points
        let q = Prime::new(103).unwrap();
        let i = Ideal::new(&v, q, [Poly::parse("x^2+1", &v, q).unwrap(), Poly::parse("y", &v, q).unwrap()]).unwrap();
        assert!(is_reduced_zero_dim(&i, &mut rng).unwrap());
    }

    #[test]
    fn squarefree_helper() {
        let q = p();
        let f = |c: &[i64]| c.iter().map(|&v| Fp::new(q, v)).collect::<Vec<_>>();
        assert!(is_squarefree(&f(&[-1, 0, 1])));
        assert!(!is_squarefree(&f(&[1, -2, 1])));
        assert!(is_squarefree(&f(&[5, 1])));
    }

    #[test]
    fn projective_charts() {
        let v = VarSet::indexed("x", 3);
        let mut rng = SplitMix64::new(2);
        // two points, one of them on every coordinate line's complement
        let i = ideal(&v, &["x0*x1", "x2"]);
        assert_eq!(projective_degree(&i, &mut rng).unwrap(), 2);
        assert!(projective_is_reduced(&i, &mut rng).unwrap());
        let dbl = ideal(&v, &["x0^2", "x1"]);
        assert_eq!(projective_degree(&dbl, &mut rng).unwrap(), 2);
        assert!(!projective_is_reduced(&dbl, &mut rng).unwrap());
        assert_eq!(projective_degree(&ideal(&v, &["x0"]), &mut rng), Err(Error::PositiveDimensional));
        assert_eq!(projective_degree(&ideal(&v, &["x0", "x1", "x2"]), &mut rng).unwrap(), 0);
    }
}
