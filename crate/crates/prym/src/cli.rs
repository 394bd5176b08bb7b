//! Command-line arguments.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use prym_core::geometry::U3Reading;

use crate::run::{Command, Config, Stage};

#[derive(Debug, Parser)]
#[command(name = "prym", version, about = "Certify 6-nodal quartics and the rank of their Kodaira-Spencer matrix")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,

    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// How the given cubic form enters the quartic: `u3=half` for
    /// F = u2*x3^2 + 2*u3*x3 + u4, `u3=full` for F = u2*x3^2 + u3*x3 + u4.
    /// Resolved from the nodes when omitted.
    #[arg(long, global = true, value_parser = parse_convention)]
    pub convention: Option<U3Reading>,

    /// Seed for the randomized checks and for `random`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Run every certificate on the bundled test point over F_101.
    VerifyPaper {
        #[arg(long, default_value_t = 101)]
        prime: u64,
    },
    /// Run every certificate on a model file (JSON, or TOML by extension).
    Certify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Draw a random member of the family and certify it.
    Random {
        #[arg(long, default_value_t = 101)]
        prime: u64,
        #[arg(long, default_value_t = 50)]
        max_tries: u32,
    },
    /// Run a single stage.
    Stage {
        name: StageName,
        /// Model file, or for `ks-rank` also a stored quadric and family-row file
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StageName {
    Discriminant,
    Canonical,
    KsRank,
}

fn parse_convention(s: &str) -> Result<U3Reading, String> {
    s.strip_prefix("u3=").and_then(U3Reading::parse).ok_or_else(|| format!("expected u3=half or u3=full, got `{s}`"))
}

impl Cli {
    pub fn config(&self) -> Config {
        let (command, prime, input, max_tries) = match &self.command {
            Sub::VerifyPaper { prime } => (Command::VerifyPaper, *prime, None, None),
            Sub::Certify { input } => (Command::Certify, 101, Some(input.clone()), None),
            Sub::Random { prime, max_tries } => (Command::Random, *prime, None, Some(*max_tries)),
            Sub::Stage { name, input } => {
                let s = match name {
                    StageName::Discriminant => Stage::Discriminant,
                    StageName::Canonical => Stage::Canonical,
                    StageName::KsRank => Stage::KsRank,
                };
                (Command::Stage(s), 101, Some(input.clone()), None)
            }
        };
        let mut cfg = Config::new(command);
        cfg.prime = prime;
        cfg.input = input;
        cfg.seed = self.seed;
        cfg.convention = self.convention;
        if let Some(n) = max_tries {
            cfg.max_tries = n;
        }
        cfg
    }
}
