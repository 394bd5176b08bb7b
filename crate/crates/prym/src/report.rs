//! JSON renderings of the certificates. Objects are `serde_json` maps,
//! which keep keys sorted, so equal reports serialize identically.

use prym_core::canonical::CanonicalCurve;
use prym_core::geometry::QuarticModel;
use prym_core::ks::KSCertificate;
use prym_core::report::CertReport;
use prym_core::Fp;
use serde_json::{json, Value};

use crate::input::ModelFile;

pub fn cert_json(r: &CertReport) -> Value {
    let checks: Vec<Value> =
        r.checks.iter().map(|c| json!({"name": c.name, "status": c.status.as_str(), "detail": c.detail})).collect();
    json!({"checks": checks, "verdict": r.verdict().as_str()})
}

pub fn model_json(model: &QuarticModel) -> Value {
    serde_json::to_value(ModelFile::describe(model)).expect("plain data")
}

pub fn curve_json(curve: &CanonicalCurve<Fp>) -> Value {
    json!({
        "quadrics": curve.quadrics.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "cubics": curve.cubics.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "multipliers": curve.multipliers.iter().map(|l| l.symmetric()).collect::<Vec<_>>(),
    })
}

/// How the input was read: the cubic-form reading and the first two nodes
/// after `P0`.
pub fn convention_json(model: &QuarticModel) -> Value {
    json!({
        "u3_reading": model.reading().as_str(),
        "P1P2": [model.nodes()[1].given_coords(), model.nodes()[2].given_coords()],
    })
}

pub fn ks_json(cert: &KSCertificate, model: Option<&QuarticModel>) -> Value {
    let mut v = json!({
        "n_family": cert.n_family,
        "rank": cert.rank,
        "rank_check": cert.rank_check,
        "max_rank": cert.max_rank(),
        "shape": [cert.matrix.rows.nrows(), cert.matrix.rows.ncols()],
        "verdict": cert.verdict.as_str(),
        "row_provenance": cert.matrix.provenance.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "sl5_basis": "E_ij for i != j, then E_00 - E_ii for i = 1..4 (24 elements)",
    });
    if let Some(m) = model {
        v["convention"] = convention_json(m);
    }
    v
}
