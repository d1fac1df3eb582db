use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::majorana_rep::LatticeSpec;
use crate::rg_flow::Attachment;
use crate::{Error, Result};

/// Command-line surface of `anyonrg`.
#[derive(Debug, Parser)]
#[command(name = "anyonrg", version, about = "Braiding renormalization group for anyonic chains")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandKind,
    #[command(flatten)]
    pub args: CommonArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    /// Run the algebraic and numerical relation suites.
    Verify,
    /// Tabulate the flow omega_M against its closed form and scaling limit.
    Flow,
    /// Tabulate chiral correlators for both attachment sides and braid orientations.
    Chirality,
    /// Sweep braided correlators over separations and depths.
    Correlator,
    /// Dump the ground-state covariance of the chain at scale N.
    Gs,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Verify => "verify",
            Self::Flow => "flow",
            Self::Chirality => "chirality",
            Self::Correlator => "correlator",
            Self::Gs => "gs",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AttachmentArg {
    Left,
    Right,
}

impl From<AttachmentArg> for Attachment {
    fn from(a: AttachmentArg) -> Self {
        match a {
            AttachmentArg::Left => Attachment::Left,
            AttachmentArg::Right => Attachment::Right,
        }
    }
}

/// Flags shared by every subcommand.
#[derive(Clone, Debug, Args)]
pub struct CommonArgs {
    /// SU(2) level of the fusion-chain checks.
    #[arg(long, global = true, default_value_t = 2)]
    pub k: u32,
    /// Coarse scale N.
    #[arg(long = "scale-N", global = true, default_value_t = 0)]
    pub scale_n: u32,
    /// Refinement depth M.
    #[arg(long = "depth-M", global = true, default_value_t = 6)]
    pub depth_m: u32,
    /// Base half-length L0 in sites at scale 0; the physical half-length is L = eps0 * L0.
    #[arg(long = "half-length", global = true, default_value_t = 8)]
    pub half_length: usize,
    /// Base lattice spacing eps0.
    #[arg(long = "base-spacing", global = true, default_value_t = 0.125)]
    pub base_spacing: f64,
    /// Separations in coarse lattice steps (comma separated, may be negative).
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true, default_values_t = vec![1isize, 2, 4])]
    pub separations: Vec<isize>,
    /// Side on which refinement attaches new strands.
    #[arg(long, global = true, value_enum, default_value_t = AttachmentArg::Right)]
    pub attachment: AttachmentArg,
    /// Kauffman variable A = exp(i pi a), given as a (units of pi).
    #[arg(long = "kauffman-A", global = true, default_value_t = 0.375, allow_hyphen_values = true)]
    pub kauffman_a: f64,
    /// Replace the loop factor used when composing diagrams (negative control).
    #[arg(long = "delta-override", global = true)]
    pub delta_override: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized relation sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

/// Fully resolved configuration of one run; embedded in every output file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: CommandKind,
    pub k: u32,
    pub scale_n: u32,
    pub depth_m: u32,
    pub half_length: usize,
    pub base_spacing: f64,
    pub separations: Vec<isize>,
    pub attachment: Attachment,
    pub kauffman_a: f64,
    pub delta_override: Option<f64>,
    pub format: OutputFormat,
    /// Destination only; not part of the recorded configuration.
    #[serde(skip)]
    pub out: Option<PathBuf>,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        let a = &cli.args;
        let cfg = Self {
            command: cli.command,
            k: a.k,
            scale_n: a.scale_n,
            depth_m: a.depth_m,
            half_length: a.half_length,
            base_spacing: a.base_spacing,
            separations: a.separations.clone(),
            attachment: a.attachment.into(),
            kauffman_a: a.kauffman_a,
            delta_override: a.delta_override,
            format: a.format,
            out: a.out.clone(),
            seed: a.seed,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidLevel);
        }
        if self.depth_m > 16 {
            return Err(Error::Config(format!("depth {} exceeds the supported maximum of 16", self.depth_m)));
        }
        if !self.kauffman_a.is_finite() {
            return Err(Error::Config("Kauffman angle must be finite".into()));
        }
        self.lattice()?;
        Ok(())
    }

    /// Coarse lattice at scale N.
    pub fn lattice(&self) -> Result<LatticeSpec<f64>> {
        LatticeSpec::new(self.scale_n, self.base_spacing, self.half_length)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_round_trips_through_json() {
        let cli = Cli::parse_from(["anyonrg", "flow", "--depth-M", "3", "--separations", "-2,1", "--attachment", "left"]);
        let cfg = RunConfig::from_cli(&cli).unwrap();
        assert_eq!(cfg.separations, vec![-2, 1]);
        assert_eq!(cfg.attachment, Attachment::Left);
        let back: RunConfig = serde_json::from_str(&cfg.to_json()).unwrap();
        assert_eq!(back, cfg);
    }

    #[test]
    fn invalid_values_are_rejected() {
        let cli = Cli::parse_from(["anyonrg", "gs", "--half-length", "0"]);
        assert!(RunConfig::from_cli(&cli).is_err());
        assert!(Cli::try_parse_from(["anyonrg", "gs", "--format", "xml"]).is_err());
        assert!(Cli::try_parse_from(["anyonrg", "nope"]).is_err());
    }
}
