//! Flag definitions and their validation.

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopf_twist::{AlgebraSpace, TwistModel};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "adhm", version, about = "ADHM instantons on classical, Moyal and toric R^4")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Derive the twisted relations of an algebra.
    Relations(RelationsArgs),
    /// Run the twistor fibration checks.
    TwistorChecks(TwistorArgs),
    /// Solve the ADHM equations.
    Solve(SolveArgs),
    /// Symbolic monad residuals for a data file.
    VerifyMonad(DataArgs),
    /// Projector, curvature and anti-self-duality checks.
    Instanton(InstantonArgs),
    /// Topological charge by quadrature.
    Charge(ChargeArgs),
    /// Tangent-space dimension count at a solution.
    ModuliDim(DataArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    Classical,
    Moyal,
    Toric,
}

#[derive(Args, Debug, Clone)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub model: Option<ModelKind>,
    /// Moyal deformation parameter.
    #[arg(long)]
    pub hbar: Option<f64>,
    /// Moyal weight of t₁ (default 1).
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Moyal weight of t₂ (default 1).
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Toric parameter, μ = exp(iπθ).
    #[arg(long)]
    pub theta: Option<f64>,
}

impl ModelArgs {
    /// The model, or None when no --model was given.
    pub fn model(&self) -> Result<Option<TwistModel>, String> {
        let moyal_flags = self.hbar.is_some() || self.alpha.is_some() || self.beta.is_some();
        let m = match self.model {
            None => {
                if moyal_flags || self.theta.is_some() {
                    return Err("model parameters given without --model".into());
                }
                return Ok(None);
            }
            Some(ModelKind::Classical) => {
                if moyal_flags || self.theta.is_some() {
                    return Err("the classical model takes no parameters".into());
                }
                TwistModel::Classical
            }
            Some(ModelKind::Moyal) => {
                if self.theta.is_some() {
                    return Err("--theta belongs to the toric model".into());
                }
                let hbar = self.hbar.ok_or("--model moyal needs --hbar")?;
                TwistModel::moyal(hbar, self.alpha.unwrap_or(1.0), self.beta.unwrap_or(1.0))
            }
            Some(ModelKind::Toric) => {
                if moyal_flags {
                    return Err("--hbar, --alpha and --beta belong to the moyal model".into());
                }
                TwistModel::toric(self.theta.ok_or("--model toric needs --theta")?)
            }
        };
        m.validate().map_err(|e| e.to_string())?;
        Ok(Some(m))
    }

    pub fn model_or_classical(&self) -> Result<TwistModel, String> {
        Ok(self.model()?.unwrap_or(TwistModel::Classical))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
pub struct RelationsArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// C4, C4-calculus, R4, R4-calculus, monad or monad-C4.
    #[arg(long, default_value = "C4")]
    pub space: String,
    /// Size of the monad matrices for the monad spaces.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

impl RelationsArgs {
    pub fn space(&self) -> Result<AlgebraSpace, String> {
        if self.k == 0 {
            return Err("--k must be positive".into());
        }
        AlgebraSpace::parse(&self.space, self.k).ok_or_else(|| format!("unknown space {:?}", self.space))
    }
}

#[derive(Args, Debug)]
pub struct TwistorArgs {
    /// Model for the J-coaction check; both deformed samples when omitted.
    #[command(flatten)]
    pub model: ModelArgs,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[command(flatten)]
    pub model: ModelArgs,
    /// Level of the real equation; must equal the model's ζ.
    #[arg(long)]
    pub zeta: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 4)]
    pub multistarts: usize,
    #[arg(long, default_value_t = 200)]
    pub max_iterations: usize,
    #[arg(long, default_value_t = 1e-12)]
    pub tolerance: f64,
    /// Also write the JSON result here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct DataArgs {
    /// ADHM data as written by `solve --out` (or a bare data object).
    #[arg(long)]
    pub data: PathBuf,
}

#[derive(Args, Debug)]
pub struct InstantonArgs {
    #[arg(long)]
    pub data: PathBuf,
    #[arg(long, default_value_t = 20)]
    pub points: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Standard deviation of the sample points around the data's centre.
    #[arg(long, default_value_t = 1.5)]
    pub spread: f64,
    /// Also compute curvature, its anti-self-duality and the finite-difference cross-check.
    #[arg(long)]
    pub check_asd: bool,
}

#[derive(Args, Debug)]
pub struct ChargeArgs {
    #[arg(long)]
    pub data: PathBuf,
    #[arg(long, default_value_t = 6)]
    pub resolution: usize,
    #[arg(long, default_value_t = 5_000_000)]
    pub budget: usize,
    /// Allowed |Q − k|.
    #[arg(long, default_value_t = 0.01)]
    pub tolerance: f64,
}
