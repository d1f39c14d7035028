use std::path::PathBuf;

use toric_nash::engine::{Policy, TieBreak};
use toric_nash::explorer::DEFAULT_NODE_LIMIT;

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Run,
    Explore,
    Bound,
    Hilbert,
    Check,
    Uniformize,
    ExportDot,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Run => "run",
            Command::Explore => "explore",
            Command::Bound => "bound",
            Command::Hilbert => "hilbert",
            Command::Check => "check",
            Command::Uniformize => "uniformize",
            Command::ExportDot => "export-dot",
        }
    }

    fn takes_form(self) -> bool {
        matches!(self, Command::Run | Command::Bound | Command::Check)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Path(PathBuf),
    Stdin,
    Inline(String),
}

/// `L = a·x + b·y` with components in `Q[√sqrt]`, as typed on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpec {
    pub a: String,
    pub b: String,
    pub sqrt: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input: Input,
    /// `None` means `L = y`.
    pub form: Option<FormSpec>,
    pub policy: Policy,
    pub tie: TieBreak,
    /// `None` means the bound when it is available, else 10⁴.
    pub max_steps: Option<usize>,
    pub depth: usize,
    pub node_limit: usize,
    /// `None` means text, or DOT for `export-dot`.
    pub format: Option<Format>,
    pub renormalize: bool,
    pub nu1: Option<String>,
    pub nu2: Option<String>,
}

pub const DEFAULT_DEPTH: usize = 6;
pub const FALLBACK_MAX_STEPS: usize = 10_000;

impl RunConfig {
    pub fn new(command: Command, input: Input) -> Self {
        RunConfig {
            command,
            input,
            form: None,
            policy: Policy::default(),
            tie: TieBreak::default(),
            max_steps: None,
            depth: DEFAULT_DEPTH,
            node_limit: DEFAULT_NODE_LIMIT,
            format: None,
            renormalize: false,
            nu1: None,
            nu2: None,
        }
    }

    pub fn format(&self) -> Format {
        self.format
            .unwrap_or(if self.command == Command::ExportDot {
                Format::Dot
            } else {
                Format::Text
            })
    }

    pub fn validate(&self) -> CliResult<()> {
        let name = self.command.name();
        if let Some(form) = &self.form {
            if !self.command.takes_form() {
                return Err(CliError::usage(format!("{name} does not take --form")));
            }
            if form.sqrt.is_some() && self.command == Command::Run && self.max_steps.is_none() {
                return Err(CliError::usage(
                    "an irrational form (--sqrt) requires --max-steps",
                ));
            }
        }
        let dot_ok = matches!(self.command, Command::Explore | Command::ExportDot);
        match self.format {
            Some(Format::Dot) if !dot_ok => {
                return Err(CliError::usage(format!("{name} has no DOT output")));
            }
            Some(f) if self.command == Command::ExportDot && f != Format::Dot => {
                return Err(CliError::usage("export-dot only writes DOT"));
            }
            _ => {}
        }
        let has_nu = self.nu1.is_some() || self.nu2.is_some();
        if self.command == Command::Uniformize {
            if self.nu1.is_none() || self.nu2.is_none() {
                return Err(CliError::usage("uniformize requires --nu1 and --nu2"));
            }
        } else if has_nu {
            return Err(CliError::usage(format!("{name} does not take --nu1/--nu2")));
        }
        if self.node_limit == 0 {
            return Err(CliError::usage("--node-limit must be positive"));
        }
        Ok(())
    }
}
