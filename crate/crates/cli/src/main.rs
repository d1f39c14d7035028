use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use toric_nash::engine::{Policy, TieBreak};
use toric_nash_cli::config::DEFAULT_DEPTH;
use toric_nash_cli::{execute, CliError, Command, FormSpec, Format, Input, RunConfig};

#[derive(Parser)]
#[command(
    name = "toric-nash",
    version,
    about = "Nash modification of affine toric surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Follow the L-guided charts until the semigroup is free.
    Run(Common),
    /// Enumerate every chart down to a depth cap.
    Explore(Common),
    /// Print u0, v0, u1, v1 and the step bound.
    Bound(Common),
    /// Print the minimal generators.
    Hilbert(Common),
    /// Validate an exponent set (and a form, if given).
    Check(Common),
    /// Walk the charts that keep a monomial valuation centered.
    Uniformize(Common),
    /// Write the chart tree as Graphviz DOT.
    ExportDot(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Raw,
    Hilbert,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct Common {
    /// Exponent file ("-" for stdin); one "x y" per line or [[x,y],...].
    input: Option<PathBuf>,
    /// Inline exponents, pairs separated by ";" or newlines.
    #[arg(long, conflicts_with = "input")]
    points: Option<String>,
    /// Guiding form coefficients A B, for L = A x + B y (default 0 1).
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
    form: Option<Vec<String>>,
    /// Square-free radicand d for components written with "sqrt".
    #[arg(long, requires = "form")]
    sqrt: Option<u64>,
    #[arg(long, value_enum, default_value = "hilbert")]
    policy: PolicyArg,
    /// 0-based position among tied L-choices.
    #[arg(long, default_value_t = 0)]
    tie: usize,
    #[arg(long)]
    max_steps: Option<usize>,
    /// Depth cap for explore and export-dot.
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    depth: usize,
    #[arg(long)]
    node_limit: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Apply the L-preserving shear and flip between steps (L = y only).
    #[arg(long)]
    renormalize: bool,
    /// Valuation of x1: "A" (rank 1) or "A,C" (rank 2).
    #[arg(long, allow_hyphen_values = true)]
    nu1: Option<String>,
    /// Valuation of x2: "B" (rank 1) or "B,D" (rank 2).
    #[arg(long, allow_hyphen_values = true)]
    nu2: Option<String>,
}

impl Common {
    fn into_config(self, command: Command) -> RunConfig {
        let input = match (self.points, self.input) {
            (Some(text), _) => Input::Inline(text),
            (None, Some(p)) if p.as_os_str() == "-" => Input::Stdin,
            (None, Some(p)) => Input::Path(p),
            (None, None) => Input::Stdin,
        };
        let mut cfg = RunConfig::new(command, input);
        cfg.form = self.form.map(|ab| FormSpec {
            a: ab[0].clone(),
            b: ab[1].clone(),
            sqrt: self.sqrt,
        });
        cfg.policy = match self.policy {
            PolicyArg::Raw => Policy::Raw,
            PolicyArg::Hilbert => Policy::Hilbert,
        };
        cfg.tie = if self.tie == 0 {
            TieBreak::First
        } else {
            TieBreak::Index(self.tie)
        };
        cfg.max_steps = self.max_steps;
        cfg.depth = self.depth;
        if let Some(n) = self.node_limit {
            cfg.node_limit = n;
        }
        cfg.format = self.format.map(|f| match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Dot => Format::Dot,
        });
        cfg.renormalize = self.renormalize;
        cfg.nu1 = self.nu1;
        cfg.nu2 = self.nu2;
        cfg
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let cfg = match cli.command {
        Sub::Run(c) => c.into_config(Command::Run),
        Sub::Explore(c) => c.into_config(Command::Explore),
        Sub::Bound(c) => c.into_config(Command::Bound),
        Sub::Hilbert(c) => c.into_config(Command::Hilbert),
        Sub::Check(c) => c.into_config(Command::Check),
        Sub::Uniformize(c) => c.into_config(Command::Uniformize),
        Sub::ExportDot(c) => c.into_config(Command::ExportDot),
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match execute(&cfg, &mut out) {
        Ok(outcome) => {
            let _ = out.flush();
            ExitCode::from(outcome.exit_code())
        }
        Err(CliError::Io(e)) if e.kind() == ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(1)
        }
    }
}
