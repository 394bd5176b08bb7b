use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Fp, Prime, Scalar};

/// A point of `P^n(F_p)`, stored with its last nonzero coordinate equal to 1.
/// The representative it was built from is kept for display only.
#[derive(Clone)]
pub struct ProjPoint {
    coords: Vec<Fp>,
    given: Vec<Fp>,
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for ProjPoint {}

impl ProjPoint {
    pub fn new(coords: Vec<Fp>) -> Result<ProjPoint> {
        let k = coords.iter().rposition(|c| !c.is_zero()).ok_or_else(|| Error::InvalidInput("zero vector is not a point".into()))?;
        let inv = coords[k].inv()?;
        Ok(ProjPoint { coords: coords.iter().map(|&c| c * inv).collect(), given: coords })
    }

    pub fn from_ints(prime: Prime, coords: &[i64]) -> Result<ProjPoint> {
        Self::new(coords.iter().map(|&c| Fp::new(prime, c)).collect())
    }

    pub fn coords(&self) -> &[Fp] {
        &self.coords
    }

    /// Number of homogeneous coordinates.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn prime(&self) -> Prime {
        self.coords[0].prime()
    }

    /// Index of the coordinate normalized to 1, i.e. the affine chart the
    /// point is read in.
    pub fn chart(&self) -> usize {
        self.coords.iter().rposition(|c| !c.is_zero()).expect("nonzero point")
    }

    /// The point `(x_0 : … : x_{n-2})` obtained by dropping the last
    /// coordinate; `None` at the centre of projection.
    pub fn project(&self) -> Option<ProjPoint> {
        ProjPoint::new(self.given[..self.given.len() - 1].to_vec()).ok()
    }

    pub fn symmetric_coords(&self) -> Vec<i64> {
        self.coords.iter().map(|c| c.symmetric()).collect()
    }

    /// The representative the point was constructed from.
    pub fn given_coords(&self) -> Vec<i64> {
        self.given.iter().map(|c| c.symmetric()).collect()
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.given.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{}", c.symmetric())?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Whether every `k`-subset of `points` (each with `k` coordinates) has
/// nonzero determinant.
fn all_minors_nonzero(points: &[ProjPoint], k: usize) -> bool {
    if points.iter().any(|p| p.len() != k) || points.len() < k {
        return false;
    }
    let prime = points[0].prime();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let rows = idx.iter().map(|&i| points[i].coords.clone()).collect();
        let det = Matrix::from_rows(prime, k, rows).determinant().unwrap_or(Fp::zero(prime));
        if det.is_zero() {
            return false;
        }
        // next k-subset in lexicographic order
        let n = points.len();
        let Some(pos) = (0..k).rev().find(|&j| idx[j] < n - k + j) else {
            return true;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Five points of `P^3` with every four spanning the space.
pub fn general_position_p3(points: &[ProjPoint]) -> bool {
    points.len() == 5 && all_minors_nonzero(points, 4)
}

/// Five points of `P^2`, no three collinear.
pub fn general_position_p2(points: &[ProjPoint]) -> bool {
    points.len() == 5 && all_minors_nonzero(points, 3)
}
