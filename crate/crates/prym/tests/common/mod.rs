#![allow(dead_code)]

use std::path::Path;
use std::process::Command;

use prym::input::{ModelFile, RankFile};
use prym_core::geometry::{quartics_with_nodes, split_forms};
use prym_core::ks::assemble_and_rank;
use prym_core::Fp;
use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub report: Value,
    pub stderr: String,
}

/// Runs the `prym` binary and parses whatever it printed on stdout.
pub fn prym(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_prym")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8_lossy(&out.stdout);
    Run {
        code: out.status.code().expect("exited normally"),
        report: serde_json::from_str(&stdout).unwrap_or(Value::Null),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

pub fn fixture_path() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/data/test_point.toml").to_owned()
}

pub fn write_json(dir: &Path, name: &str, value: &impl serde::Serialize) -> String {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string_pretty(value).unwrap()).unwrap();
    path.display().to_string()
}

/// The report without the parts that legitimately differ between runs.
pub fn stable(mut report: Value) -> Value {
    let obj = report.as_object_mut().unwrap();
    obj.remove("timings_ms");
    obj.remove("config");
    report
}

/// Status of the check called `name` anywhere in `stage`.
pub fn check_status<'a>(report: &'a Value, stage: &str, name: &str) -> Option<&'a str> {
    report["stages"][stage]["checks"].as_array()?.iter().find(|c| c["name"] == name)?["status"].as_str()
}

/// The test point moved along the pencil `F + t·G` (with `G` singular at
/// all six nodes) to a member whose tangent cone at `P0` has rank 2.
pub fn cusp_at_p0() -> ModelFile {
    let base = ModelFile::test_point().build(None).unwrap();
    let p = base.prime();
    for g in quartics_with_nodes(base.nodes()).unwrap() {
        for t in 1..p.get() as i64 {
            let h = base.quartic() + &g.scale(Fp::new(p, t));
            let split = split_forms(&h).unwrap();
            if split.u2.quadratic_form_matrix().unwrap().rank().unwrap() == 2 {
                return ModelFile {
                    prime: p.get() as u64,
                    nodes: base.nodes().iter().map(|q| q.given_coords()).collect(),
                    u2: split.u2.to_string(),
                    u3: split.u3.to_string(),
                    u4: split.u4.to_string(),
                };
            }
        }
    }
    panic!("no member of the pencils has a degenerate tangent cone at P0");
}

/// The test point's quadrics with every family row replaced by zero.
pub fn zero_family() -> RankFile {
    let run = assemble_and_rank(&ModelFile::test_point().build(None).unwrap()).unwrap();
    RankFile {
        prime: 101,
        quadrics: run.base.quadrics.iter().map(ToString::to_string).collect(),
        family: vec![vec!["0".to_owned(); 3]; run.family.len()],
    }
}
