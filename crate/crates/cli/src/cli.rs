use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "holoweb",
    version,
    about = "Exact computations for holomorphic webs, foliations and Levi-flat hypersurfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
}

/// Main input: inline or from a file.
#[derive(Debug, Clone, Args)]
pub struct Input {
    /// Inline expression.
    #[arg(short = 'e', long = "expr", conflicts_with = "input", allow_hyphen_values = true)]
    pub expr: Option<String>,

    /// File holding the expression.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct WebArgs {
    #[command(flatten)]
    pub input: Input,

    /// Component of the factorization `F = F_1 ... F_k` (repeatable).
    #[arg(long = "factor", allow_hyphen_values = true)]
    pub factors: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct PlanarArgs {
    #[command(flatten)]
    pub input: Input,

    /// Chart variables `U,V` of the form `a dU + b dV`.
    #[arg(long, default_value = "x,y")]
    pub vars: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Remove common content and repeated factors from a web.
    Normalize(Input),
    /// Implicit surface F(x, y, p) of a web.
    Surface(WebArgs),
    /// Caustic, resultant and leading-coefficient curves.
    Discriminant(Input),
    /// Criminant {F = F_p = 0}, triangularized when possible.
    Criminant(Input),
    /// Singular points of a planar form.
    Singlocus(PlanarArgs),
    /// Dicriticality of each web component (chart-local).
    Dicritical(WebArgs),
    /// Invariance of the criminant under the foliation of each component.
    CriminantInvariance(WebArgs),
    /// Camacho-Sad index of {V = 0} at a point.
    CsIndex {
        #[command(flatten)]
        planar: PlanarArgs,
        /// U-coordinate of the point.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        point: String,
    },
    /// Sum of Camacho-Sad indices along the line {Y = 0}.
    CsSum(Input),
    /// Whether a rational function is a first integral of a planar form.
    CheckIntegral {
        #[command(flatten)]
        input: Input,
        /// The form `a dU + b dV`.
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long, default_value = "x,y")]
        vars: String,
    },
    /// Whether a family P(x, y, t) is a multivalued first integral of a web.
    CheckWebIntegral {
        #[command(flatten)]
        input: Input,
        /// The web, as a symmetric form or F(x, y, p).
        #[arg(long, allow_hyphen_values = true)]
        web: String,
        #[arg(long = "factor", allow_hyphen_values = true)]
        factors: Vec<String>,
    },
    /// Reality check and Segre variety of a Hermitian polynomial.
    Segre {
        #[command(flatten)]
        input: Input,
        /// Point `a, b` of the plane.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Whether a point is Segre degenerate.
    SegreDegenerate {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Web whose leaves are the members of a family P(x, y, t).
    Eliminate(Input),
    /// Tangency of a web to the Levi foliation of Re h = 0 or Im h = 0.
    Tangency {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        web: String,
        /// re or im.
        #[arg(long, default_value = "re")]
        kind: String,
    },
    /// Dual web of a plane curve G(q0, q1, q2).
    DualWeb(Input),
    /// Homogeneous family resultant of G(X, Y, Z, t).
    HomResultant(Input),
    /// Restrict a homogeneous form to an affine chart.
    Restrict {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "z")]
        chart: String,
    },
    /// Move an affine web from one chart to another.
    Transition {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "z")]
        from: String,
        /// Target chart.
        #[arg(long)]
        chart: String,
    },
    /// Euler contraction of a homogeneous form.
    DescendCheck(Input),
    /// Web degree by tangency counting on random lines.
    Degree {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = holoweb::projective::DEFAULT_SEED)]
        seed: u64,
    },
    /// Run the bundled golden fixtures.
    Fixtures {
        /// Fixture name, or `all`.
        #[arg(long, default_value = "all")]
        run: String,
        /// List fixtures instead of running them.
        #[arg(long)]
        list: bool,
        /// Alternative corpus file.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Normalize(_) => "normalize",
            Command::Surface(_) => "surface",
            Command::Discriminant(_) => "discriminant",
            Command::Criminant(_) => "criminant",
            Command::Singlocus(_) => "singlocus",
            Command::Dicritical(_) => "dicritical",
            Command::CriminantInvariance(_) => "criminant-invariance",
            Command::CsIndex { .. } => "cs-index",
            Command::CsSum(_) => "cs-sum",
            Command::CheckIntegral { .. } => "check-integral",
            Command::CheckWebIntegral { .. } => "check-web-integral",
            Command::Segre { .. } => "segre",
            Command::SegreDegenerate { .. } => "segre-degenerate",
            Command::Eliminate(_) => "eliminate",
            Command::Tangency { .. } => "tangency",
            Command::DualWeb(_) => "dual-web",
            Command::HomResultant(_) => "hom-resultant",
            Command::Restrict { .. } => "restrict",
            Command::Transition { .. } => "transition",
            Command::DescendCheck(_) => "descend-check",
            Command::Degree { .. } => "degree",
            Command::Fixtures { .. } => "fixtures",
        }
    }
}
