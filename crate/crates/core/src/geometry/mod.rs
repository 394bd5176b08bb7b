//! Nodal quartic surfaces, their discriminant sextics, and the certificates
//! that a given quartic is a general member of the 6-nodal family.

mod certify;
mod point;
mod quartic;

pub use certify::{
    certify_contact_conic, certify_model, certify_sextic_nodes, certify_singular_locus, classify_singular_point,
    conic_bundle_fiber_check, fiber_matrix, genericity_check, jacobian_ideal, points_ideal, Singularity,
};
pub use point::{general_position_p2, general_position_p3, ProjPoint};
pub use quartic::{
    assemble_quartic, discriminant_sextic, double_point_ideal, normalizing_transform, plane_vars, quartics_with_nodes,
    random_quartic, space_vars, split_forms, split_quartic, transform_quartic, QuarticModel, RandomDraw, Split, U3Reading,
};
