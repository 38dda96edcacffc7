//! `antiwork` — file-based pipeline driver. Every subcommand reads the same
//! TOML config, runs one stage against the configured output directory, and
//! prints the stage summary as JSON.
//!
//! Exit codes: 0 success, 1 stage failure (stderr names the stage),
//! 2 invalid config (stderr names the field).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use antiwork_core::config::PipelineConfig;
use antiwork_core::pipeline::{Pipeline, PipelineError};

#[derive(Parser)]
#[command(
    name = "antiwork",
    version,
    about = "Antiwork-propensity pipeline: ingest forum dumps, label users, \
             train classifiers, attribute and report",
    after_help = "Stages communicate through files in the configured \
                  output_dir; run them in order (synth/ingest, label, sample, \
                  split, train, evaluate, ...). Rerunning a stage with the \
                  same config reproduces byte-identical artifacts."
)]
struct Cli {
    /// Pipeline config file (TOML)
    #[arg(short, long, global = true, default_value = "antiwork.toml")]
    config: PathBuf,

    /// Override output_dir from the config
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Override every stage seed from the config
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the seeded synthetic corpus described by [synth]
    Synth,
    /// Parse raw dump files into per-user chronological histories
    Ingest,
    /// Apply the temporal subreddit-proxy labels to every user
    Label,
    /// Build the balanced cohort by Gaussian-weighted neutral sampling
    Sample,
    /// Split the cohort into stratified train/validation sets
    Split,
    /// Train the sequence model and the TF-IDF linear baseline
    Train,
    /// Evaluate all models on the validation split
    Evaluate,
    /// Compute integrated-gradients word attributions for validation users
    Attribute {
        /// Only attribute these users (repeatable)
        #[arg(long = "user", value_name = "AUTHOR")]
        users: Vec<String>,
        /// Attribute at most this many users; 0 means all
        #[arg(long, default_value_t = 0)]
        limit: usize,
    },
    /// Compare lexicon category rates between the cohort groups
    Analyze,
    /// Fit LDA topics over the antiwork documents
    Topics,
    /// Render the attribution report as a static HTML page
    Report {
        /// Embed this timestamp; omitted by default so reruns are
        /// byte-identical
        #[arg(long)]
        timestamp: Option<String>,
    },
    /// Write the anonymized antiwork-user dataset
    Export {
        /// Also copy the trained model checkpoint into the export directory
        #[arg(long)]
        include_checkpoint: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let mut config = match PipelineConfig::load(&cli.config) {
        Ok(config) => config,
        Err(e) => {
            eprintln!("invalid config: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(out) = cli.out {
        config.output_dir = out;
    }
    if let Some(seed) = cli.seed {
        config.override_seeds(seed);
    }
    if let Err(e) = config.validate() {
        eprintln!("invalid config: {e}");
        return ExitCode::from(2);
    }

    let pipeline = Pipeline::new(config);
    let result = match &cli.command {
        Command::Synth => pipeline.run_synth(),
        Command::Ingest => pipeline.run_ingest(),
        Command::Label => pipeline.run_label(),
        Command::Sample => pipeline.run_sample(),
        Command::Split => pipeline.run_split(),
        Command::Train => pipeline.run_train(),
        Command::Evaluate => pipeline.run_evaluate(),
        Command::Attribute { users, limit } => pipeline.run_attribute(users, *limit),
        Command::Analyze => pipeline.run_analyze(),
        Command::Topics => pipeline.run_topics(),
        Command::Report { timestamp } => pipeline.run_report(timestamp.clone()),
        Command::Export { include_checkpoint } => pipeline.run_export(*include_checkpoint),
    };

    match result {
        Ok(summary) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&summary).expect("summary serializes")
            );
            ExitCode::SUCCESS
        }
        Err(e @ PipelineError::Config(_)) => {
            eprintln!("invalid config: {e}");
            ExitCode::from(2)
        }
        Err(PipelineError::Stage { stage, message }) => {
            eprintln!("stage {stage} failed: {message}");
            ExitCode::from(1)
        }
    }
}
