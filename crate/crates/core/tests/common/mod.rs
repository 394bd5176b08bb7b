#![allow(dead_code)]

use prym_core::geometry::{plane_vars, ProjPoint, QuarticModel};
use prym_core::poly::Poly;
use prym_core::Prime;

pub const U2: &str = "19*x0^2-33*x0*x1+50*x1^2-13*x0*x2+50*x1*x2-15*x2^2";
pub const U3: &str = "-2*x0^2*x1-35*x0*x1^2-18*x0^2*x2-8*x0*x1*x2-36*x1^2*x2-4*x0*x2^2+45*x1*x2^2";
pub const U4: &str = "-38*x0^2*x1^2-32*x0^2*x1*x2-32*x0*x1^2*x2-6*x0^2*x2^2-38*x0*x1*x2^2+2*x1^2*x2^2";

pub const NODES: [[i64; 4]; 6] = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [1, 1, 1, 1], [1, 2, 3, 4]];
pub const SEXTIC_NODES: [[i64; 3]; 5] = [[0, 0, 1], [0, 1, 0], [1, 0, 0], [1, 1, 1], [1, 2, 3]];

pub fn p101() -> Prime {
    Prime::new(101).unwrap()
}

pub fn nodes() -> Vec<ProjPoint> {
    NODES.iter().map(|c| ProjPoint::from_ints(p101(), c).unwrap()).collect()
}

pub fn sextic_nodes() -> Vec<ProjPoint> {
    SEXTIC_NODES.iter().map(|c| ProjPoint::from_ints(p101(), c).unwrap()).collect()
}

pub fn plane(s: &str) -> Poly {
    Poly::parse(s, &plane_vars(), p101()).unwrap()
}

pub fn test_model() -> QuarticModel {
    QuarticModel::from_forms(nodes(), plane(U2), plane(U3), plane(U4), None).unwrap()
}
