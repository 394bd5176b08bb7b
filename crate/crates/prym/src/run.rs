//! The commands: each turns a [`Config`] into a JSON report and a verdict.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use prym_core::canonical::certify_canonical;
use prym_core::geometry::{
    certify_model, certify_sextic_nodes, general_position_p2, general_position_p3, quartics_with_nodes,
    random_quartic, ProjPoint, QuarticModel, U3Reading,
};
use prym_core::ks::{assemble_and_rank, assemble_matrix, base_curve, sl5_basis, KSCertificate};
use prym_core::report::{CertReport, Status};
use prym_core::rng::SplitMix64;
use prym_core::{Error, Prime};
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};
use crate::input::{load, ModelFile, RankInput};
use crate::report::{cert_json, convention_json, curve_json, ks_json, model_json};

/// The prime the bundled test point is defined over.
pub const TEST_POINT_PRIME: u64 = 101;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Discriminant,
    Canonical,
    KsRank,
}

impl Stage {
    pub fn as_str(self) -> &'static str {
        match self {
            Stage::Discriminant => "discriminant",
            Stage::Canonical => "canonical",
            Stage::KsRank => "ks-rank",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    VerifyPaper,
    Certify,
    Random,
    Stage(Stage),
}

impl Command {
    pub fn as_str(self) -> String {
        match self {
            Command::VerifyPaper => "verify-paper".into(),
            Command::Certify => "certify".into(),
            Command::Random => "random".into(),
            Command::Stage(s) => format!("stage {}", s.as_str()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    pub command: Command,
    pub prime: u64,
    pub seed: u64,
    pub max_tries: u32,
    pub input: Option<PathBuf>,
    pub convention: Option<U3Reading>,
}

impl Config {
    pub fn new(command: Command) -> Config {
        Config { command, prime: TEST_POINT_PRIME, seed: 0, max_tries: 50, input: None, convention: None }
    }

    fn echo(&self) -> Value {
        json!({
            "command": self.command.as_str(),
            "prime": self.prime,
            "seed": self.seed,
            "max_tries": self.max_tries,
            "input": self.input.as_ref().map(|p| p.display().to_string()),
            "convention": self.convention.map(|r| format!("u3={}", r.as_str())),
        })
    }
}

/// A finished run. `verdict` is `Pass` only if every check passed.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Value,
    pub verdict: Status,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.verdict == Status::Pass {
            0
        } else {
            1
        }
    }
}

#[derive(Default)]
struct Timings(BTreeMap<&'static str, f64>);

impl Timings {
    fn time<T>(&mut self, name: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.0.insert(name, (start.elapsed().as_secs_f64() * 1e6).round() / 1e3);
        out
    }

    fn json(&self) -> Value {
        json!(self.0)
    }
}

fn worst(a: Status, b: Status) -> Status {
    match (a, b) {
        (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
        (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
        _ => Status::Pass,
    }
}

pub fn execute(cfg: &Config) -> CliResult<Outcome> {
    let mut out = match cfg.command {
        Command::VerifyPaper => verify_paper(cfg)?,
        Command::Certify => full_run(&load_model(cfg)?, cfg.seed),
        Command::Random => random(cfg)?,
        Command::Stage(s) => stage(cfg, s)?,
    };
    let report = out.report.as_object_mut().expect("reports are objects");
    report.insert("config".into(), cfg.echo());
    report.insert("tool".into(), json!({"name": env!("CARGO_PKG_NAME"), "version": env!("CARGO_PKG_VERSION")}));
    report.insert("verdict".into(), json!(out.verdict.as_str()));
    Ok(out)
}

fn input_path(cfg: &Config) -> CliResult<&PathBuf> {
    cfg.input.as_ref().ok_or_else(|| CliError::Usage(format!("`{}` needs --input", cfg.command.as_str())))
}

fn load_model(cfg: &Config) -> CliResult<QuarticModel> {
    load::<ModelFile>(input_path(cfg)?)?.build(cfg.convention)
}

fn verify_paper(cfg: &Config) -> CliResult<Outcome> {
    if cfg.prime != TEST_POINT_PRIME {
        return Err(CliError::Usage(format!(
            "the test point is defined over F_{TEST_POINT_PRIME}; --prime {} is not supported",
            cfg.prime
        )));
    }
    let model = ModelFile::test_point().build(cfg.convention)?;
    Ok(full_run(&model, cfg.seed))
}

/// Certifies the geometry of `model` and, if that passes, builds the
/// canonical curve and ranks the Kodaira-Spencer matrix.
pub fn full_run(model: &QuarticModel, seed: u64) -> Outcome {
    let mut t = Timings::default();
    let mut stages = Map::new();
    let mut report = Map::new();
    report.insert("model".into(), model_json(model));
    report.insert("convention".into(), convention_json(model));

    let geometry = t.time("geometry", || certify_model(model, &mut SplitMix64::new(seed)));
    let mut verdict = geometry.verdict();
    stages.insert("geometry".into(), cert_json(&geometry));
    if verdict != Status::Pass {
        stages.insert("skipped".into(), json!(["dimensions", "canonical", "kodaira_spencer"]));
        report.insert("stages".into(), Value::Object(stages));
        report.insert("timings_ms".into(), t.json());
        return Outcome { report: Value::Object(report), verdict };
    }

    let mut canonical = CertReport::new();
    match t.time("canonical", || base_curve(model)) {
        Ok(curve) => {
            canonical.extend(t.time("canonical_certificate", || certify_canonical(&curve)));
            report.insert("canonical_curve".into(), curve_json(&curve));
        }
        Err(e) => canonical.push("canonical.construction", Status::Fail, e.to_string()),
    }
    verdict = worst(verdict, canonical.verdict());
    stages.insert("canonical".into(), cert_json(&canonical));

    let mut dims = CertReport::new();
    dims.record(
        "dimensions.nodal_at_all_six",
        t.time("dimensions", || quartics_with_nodes(model.nodes()))
            .map(|b| (b.len() == 11, format!("quartics singular at P0..P5: {}", b.len()))),
    );
    match t.time("kodaira_spencer", || assemble_and_rank(model)) {
        Ok(run) => {
            let n = run.quartic_space_dim;
            dims.pass_if("dimensions.nodal_at_p1_p5", n == 15, format!("quartics singular at P1..P5: {n}"));
            let (d, c) = (run.tangent.vectors.len(), run.tangent.condition_rank);
            dims.pass_if("dimensions.tangent", d == 13 && c == 4, format!("tangent space {d}, node conditions of rank {c}"));
            verdict = worst(verdict, run.certificate.verdict);
            report.insert("ks_certificate".into(), ks_json(&run.certificate, Some(model)));
        }
        Err(e) => {
            let mut ks = CertReport::new();
            ks.push("kodaira_spencer.construction", Status::Fail, e.to_string());
            verdict = Status::Fail;
            stages.insert("kodaira_spencer".into(), cert_json(&ks));
        }
    }
    verdict = worst(verdict, dims.verdict());
    stages.insert("dimensions".into(), cert_json(&dims));
    report.insert("stages".into(), Value::Object(stages));
    report.insert("timings_ms".into(), t.json());
    Outcome { report: Value::Object(report), verdict }
}

/// `P0 = (0:0:0:1)`, the other three coordinate points, `(1:1:1:1)`, and a
/// random sixth point; any five points in general position can be moved to
/// the first five.
fn random_nodes(prime: Prime, rng: &mut SplitMix64, max_tries: u32) -> Option<Vec<ProjPoint>> {
    let fixed = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [1, 1, 1, 1]];
    let mut nodes: Vec<ProjPoint> = fixed.iter().map(|c| ProjPoint::from_ints(prime, c).expect("nonzero")).collect();
    for _ in 0..max_tries {
        let c = [rng.fp(prime), rng.fp(prime), rng.fp(prime), prime_one(prime)];
        let Ok(last) = ProjPoint::new(c.to_vec()) else { continue };
        nodes.push(last);
        let projected: Option<Vec<ProjPoint>> = nodes[1..].iter().map(ProjPoint::project).collect();
        if general_position_p3(&nodes[1..]) && projected.is_some_and(|q| general_position_p2(&q)) {
            return Some(nodes);
        }
        nodes.pop();
    }
    None
}

fn prime_one(p: Prime) -> prym_core::Fp {
    prym_core::Fp::new(p, 1)
}

fn random(cfg: &Config) -> CliResult<Outcome> {
    let prime = Prime::new(cfg.prime)?;
    let mut rng = SplitMix64::new(cfg.seed);
    let failed = |msg: String| {
        let report = json!({"random": {"seed": cfg.seed, "max_tries": cfg.max_tries, "error": msg}});
        Ok(Outcome { report, verdict: Status::Fail })
    };
    let Some(nodes) = random_nodes(prime, &mut rng, cfg.max_tries) else {
        return failed(format!("no sixth node in general position after {} tries", cfg.max_tries));
    };
    let draw = match random_quartic(&nodes, rng.next_u64(), cfg.max_tries) {
        Ok(d) => d,
        Err(e @ Error::NoGeneralMemberFound { .. }) => return failed(e.to_string()),
        Err(e) => return Err(e.into()),
    };
    let mut out = full_run(&draw.model, cfg.seed);
    out.report["random"] = json!({
        "seed": cfg.seed,
        "tries": draw.tries,
        "coefficients": draw.coefficients.iter().map(|c| c.symmetric()).collect::<Vec<_>>(),
    });
    Ok(out)
}

fn stage(cfg: &Config, s: Stage) -> CliResult<Outcome> {
    let mut report = json!({"stage": s.as_str()});
    let verdict = match s {
        Stage::Discriminant => {
            let m = load_model(cfg)?;
            let r = certify_sextic_nodes(m.sextic(), m.sextic_nodes(), [m.u2(), m.u3(), m.u4()], &mut SplitMix64::new(cfg.seed));
            report["sextic"] = json!(m.sextic().to_string());
            report["sextic_nodes"] = json!(m.sextic_nodes().iter().map(ProjPoint::given_coords).collect::<Vec<_>>());
            report["convention"] = convention_json(&m);
            report["checks"] = cert_json(&r);
            r.verdict()
        }
        Stage::Canonical => {
            let m = load_model(cfg)?;
            let curve = base_curve(&m)?;
            let r = certify_canonical(&curve);
            report["canonical_curve"] = curve_json(&curve);
            report["checks"] = cert_json(&r);
            r.verdict()
        }
        Stage::KsRank => {
            let cert = match load::<RankInput>(input_path(cfg)?)? {
                RankInput::Model(file) => assemble_and_rank(&file.build(cfg.convention)?)?.certificate,
                RankInput::Matrix(file) => {
                    let (quadrics, family) = file.parse()?;
                    let prime = Prime::new(file.prime)?;
                    KSCertificate::from_matrix(assemble_matrix(&quadrics, &family, &sl5_basis(prime))?)?
                }
            };
            report["ks_certificate"] = ks_json(&cert, None);
            cert.verdict
        }
    };
    Ok(Outcome { report, verdict })
}
