//! Job documents, settings and error reporting.

use clap::ValueEnum;
use serde::Deserialize;
use serde_json::{json, Value};
use symspace::wire::{CharacterDoc, PairDoc, RootSystemDoc};
use symspace::{Budget, CharacterOfT, ErrorKind, PairSpec, RootSystem};

use crate::commands;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Roots,
    Weyl,
    Orbits,
    Star,
    Distinction,
    Langlands,
    Oracle,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Roots => "roots",
            Command::Weyl => "weyl",
            Command::Orbits => "orbits",
            Command::Star => "star",
            Command::Distinction => "distinction",
            Command::Langlands => "langlands",
            Command::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub budget: Option<u64>,
    pub max_search_nodes: Option<u64>,
    pub max_degree: Option<u32>,
    pub k_max: Option<u32>,
    pub format: Option<Format>,
    pub seed: Option<u64>,
    pub workers: Option<usize>,
    pub samples: Option<usize>,
    #[serde(default)]
    pub list_elements: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Command,
    pub pair: Option<PairDoc>,
    pub root_system: Option<RootSystemDoc>,
    pub character: Option<CharacterDoc>,
    pub n: Option<usize>,
    pub w: Option<Vec<usize>>,
    #[serde(default)]
    pub options: Options,
}

/// Command-line flags, which take precedence over `options`.
#[derive(Debug, Default)]
pub struct Overrides {
    pub format: Option<Format>,
    pub seed: Option<u64>,
    pub budget: Option<u64>,
    pub workers: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct Settings {
    pub budget: Budget,
    pub format: Format,
    pub seed: u64,
    pub workers: usize,
    pub samples: usize,
    pub k_max: Option<u32>,
    pub list_elements: bool,
}

impl Settings {
    fn resolve(opts: &Options, over: &Overrides) -> Result<Self, CliError> {
        let mut budget = Budget::default();
        if let Some(b) = over.budget.or(opts.budget) {
            budget.max_weyl_order = b;
        }
        if let Some(n) = opts.max_search_nodes {
            budget.max_search_nodes = n;
        }
        if let Some(d) = opts.max_degree {
            budget.max_degree = d;
        }
        let workers = over.workers.or(opts.workers).unwrap_or(1);
        if workers == 0 {
            return Err(CliError::parse("workers must be at least 1".into()));
        }
        Ok(Settings {
            budget,
            format: over.format.or(opts.format).unwrap_or(Format::Json),
            seed: over.seed.or(opts.seed).unwrap_or(0),
            workers,
            samples: opts.samples.unwrap_or(100),
            k_max: opts.k_max,
            list_elements: opts.list_elements,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "budget": self.budget.max_weyl_order,
            "max_search_nodes": self.budget.max_search_nodes,
            "max_degree": self.budget.max_degree,
            "seed": self.seed,
            "workers": self.workers,
            "samples": self.samples,
            "k_max": self.k_max,
        })
    }

    /// Runs `f` on a pool of `workers` threads.
    pub fn in_pool<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| CliError::internal(format!("cannot start worker pool: {e}")))?;
        Ok(pool.install(f))
    }
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn parse(message: String) -> Self {
        CliError {
            code: 2,
            kind: "parse",
            message,
        }
    }

    pub fn internal(message: String) -> Self {
        CliError {
            code: 1,
            kind: "internal",
            message,
        }
    }

    pub fn document(&self) -> String {
        let doc = json!({
            "error": {"kind": self.kind, "code": self.code, "message": self.message}
        });
        serde_json::to_string_pretty(&doc).expect("plain JSON")
    }
}

impl From<symspace::Error> for CliError {
    fn from(e: symspace::Error) -> Self {
        let (code, kind) = match e.kind() {
            ErrorKind::Parse => (2, "parse"),
            ErrorKind::Budget => (3, "budget"),
            ErrorKind::Precondition => (4, "precondition"),
            ErrorKind::Internal => (1, "internal"),
        };
        let message = match e {
            symspace::Error::NotDominant { simple } => format!(
                "character is not dominant: ⟨Re λ, α_{}⟩ < 0; replace it by its dominant \
                 representative (the \"parameter\" reported by the langlands command)",
                simple + 1
            ),
            other => other.to_string(),
        };
        CliError {
            code,
            kind,
            message,
        }
    }
}

/// Everything a command needs.
pub struct Job {
    pub spec: JobSpec,
    pub settings: Settings,
}

impl Job {
    pub fn pair(&self) -> Result<PairSpec, CliError> {
        match &self.spec.pair {
            Some(doc) => Ok(doc.build()?),
            None => Err(CliError::parse(format!(
                "command {:?} needs a \"pair\"",
                self.spec.command.name()
            ))),
        }
    }

    pub fn root_system(&self) -> Result<RootSystem, CliError> {
        match (&self.spec.root_system, &self.spec.pair) {
            (Some(doc), None) => Ok(doc.build()?),
            (None, Some(pair)) => Ok(pair.root_system.build()?),
            (Some(_), Some(_)) => Err(CliError::parse(
                "give either \"root_system\" or \"pair\", not both".into(),
            )),
            (None, None) => Err(CliError::parse(format!(
                "command {:?} needs a \"root_system\" or a \"pair\"",
                self.spec.command.name()
            ))),
        }
    }

    pub fn character(&self) -> Result<Option<CharacterOfT>, CliError> {
        Ok(match &self.spec.character {
            Some(doc) => Some(doc.build()?),
            None => None,
        })
    }
}

/// A command's output in both formats.
pub struct Outcome {
    pub result: Value,
    pub table: String,
}

/// Parses and runs one job; returns the rendered report.
pub fn run(text: &str, over: &Overrides) -> Result<String, CliError> {
    let input: Value =
        serde_json::from_str(text).map_err(|e| CliError::parse(format!("invalid JSON: {e}")))?;
    let spec: JobSpec = serde_json::from_value(input.clone())
        .map_err(|e| CliError::parse(format!("invalid job document: {e}")))?;
    let settings = Settings::resolve(&spec.options, over)?;
    let command = spec.command;
    let job = Job { spec, settings };
    let outcome = match command {
        Command::Roots => commands::roots(&job)?,
        Command::Weyl => commands::weyl(&job)?,
        Command::Orbits => commands::orbits(&job)?,
        Command::Star => commands::star(&job)?,
        Command::Distinction => commands::distinction(&job)?,
        Command::Langlands => commands::langlands(&job)?,
        Command::Oracle => commands::oracle(&job)?,
    };
    Ok(match job.settings.format {
        Format::Json => {
            let doc = json!({
                "version": env!("CARGO_PKG_VERSION"),
                "command": command.name(),
                "indexing": "1-based",
                "input": input,
                "settings": job.settings.to_json(),
                "result": outcome.result,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("plain JSON");
            s.push('\n');
            s
        }
        Format::Table => outcome.table,
    })
}
