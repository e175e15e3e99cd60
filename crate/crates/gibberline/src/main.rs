//! Command-line front end: scoring, model building, classification,
//! cross-validation and scatter export.
//!
//! Exit codes: `classify` exits 0 for human and 1 for generated so scripts
//! can branch on the outcome; every command exits 2 on operational errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gibberline::classifier::{self, Label, LabeledPoint, MinMaxScaler, Model, DEFAULT_K};
use gibberline::corpus::{self, Axis, CorpusEntry};
use gibberline::features::{extract_features, DEFAULT_TOP_N};
use gibberline::textprep::{prepare_with, RawDocument, Tagger};

/// Lexicon override, pointing at a `word<TAB>tag` file.
const LEXICON_ENV: &str = "GIBBERLINE_LEXICON";

#[derive(Parser)]
#[command(name = "gibberline", version, about = "Detects computer-generated academic papers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Score a plain-text paper: prints s1, s2, s3
    Score {
        /// Plain-text file to score
        file: PathBuf,
        /// Number of top-ranked stems for the repetition score
        #[arg(long = "n-top", default_value_t = DEFAULT_TOP_N)]
        n_top: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Score two labeled corpora and write a model file
    BuildModel {
        /// Directory of computer-generated papers
        generated_dir: PathBuf,
        /// Directory of human-written papers
        human_dir: PathBuf,
        /// Output model path
        #[arg(long, short)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_K)]
        k: usize,
        #[arg(long = "n-top", default_value_t = DEFAULT_TOP_N)]
        n_top: usize,
    },
    /// Classify a paper against a model (exit 0 = human, 1 = generated)
    Classify {
        file: PathBuf,
        #[arg(long, short)]
        model: PathBuf,
        /// Override the model's vote size
        #[arg(long)]
        k: Option<usize>,
        #[arg(long = "n-top", default_value_t = DEFAULT_TOP_N)]
        n_top: usize,
        /// Min-max scale features to the model's ranges before voting
        #[arg(long)]
        scale: bool,
    },
    /// Leave-one-out cross-validation over a model's points
    Crossval {
        #[arg(long, short)]
        model: PathBuf,
        /// Comma-separated k values, e.g. 1,3,5
        #[arg(long = "k-list", value_delimiter = ',', default_value = "3")]
        k_list: Vec<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        scale: bool,
    },
    /// Export a two-axis projection of a model's points as CSV
    ExportScatter {
        #[arg(long, short)]
        model: PathBuf,
        /// Two comma-separated axes, e.g. s1,s2
        #[arg(long, value_delimiter = ',', default_value = "s1,s2")]
        axes: Vec<String>,
        /// Output file; stdout when omitted
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Score { file, n_top, format } => cmd_score(&file, n_top, format),
        Command::BuildModel {
            generated_dir,
            human_dir,
            out,
            k,
            n_top,
        } => cmd_build_model(&generated_dir, &human_dir, &out, k, n_top),
        Command::Classify {
            file,
            model,
            k,
            n_top,
            scale,
        } => cmd_classify(&file, &model, k, n_top, scale),
        Command::Crossval {
            model,
            k_list,
            format,
            scale,
        } => cmd_crossval(&model, &k_list, format, scale),
        Command::ExportScatter { model, axes, out } => cmd_export_scatter(&model, &axes, out.as_deref()),
    }
}

fn tagger() -> Result<Tagger, String> {
    match std::env::var_os(LEXICON_ENV) {
        Some(path) => Tagger::with_lexicon_file(Path::new(&path))
            .map_err(|e| format!("{LEXICON_ENV}: {e}")),
        None => Ok(Tagger::bundled().clone()),
    }
}

fn score_file(file: &Path, n_top: usize) -> Result<gibberline::FeatureVector, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let doc = RawDocument::new(file.display().to_string(), text);
    let tagger = tagger()?;
    let sectioned = prepare_with(&doc, &tagger).map_err(|e| e.to_string())?;
    extract_features(&sectioned, n_top).map_err(|e| e.to_string())
}

fn cmd_score(file: &Path, n_top: usize, format: Format) -> Result<ExitCode, String> {
    let fv = score_file(file, n_top)?;
    match format {
        Format::Text => {
            println!("s1 = {:.6}", fv.s1);
            println!("s2 = {:.6}", fv.s2);
            println!("s3 = {:.6}", fv.s3);
        }
        Format::Csv => {
            println!("s1,s2,s3");
            println!("{},{},{}", fv.s1, fv.s2, fv.s3);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_labeled_entries(
    generated_dir: &Path,
    human_dir: &Path,
    n_top: usize,
) -> Result<Vec<CorpusEntry>, String> {
    let mut documents = Vec::new();
    for (dir, label) in [(generated_dir, Label::Generated), (human_dir, Label::Human)] {
        let loaded = corpus::load_corpus(dir, label).map_err(|e| e.to_string())?;
        for w in &loaded.warnings {
            eprintln!("warning: {w}");
        }
        documents.extend(loaded.documents);
    }
    let scored = corpus::score_corpus(&documents, n_top);
    for excl in &scored.exclusions {
        eprintln!("excluded {}: {}", excl.source_id, excl.reason);
    }
    let counts = |label| {
        scored
            .entries
            .iter()
            .filter(|e| e.label == label)
            .count()
    };
    eprintln!(
        "scored {} generated, {} human ({} excluded)",
        counts(Label::Generated),
        counts(Label::Human),
        scored.exclusions.len()
    );
    if counts(Label::Generated) == 0 || counts(Label::Human) == 0 {
        return Err("one of the classes has no scorable documents".into());
    }
    Ok(scored.entries)
}

fn cmd_build_model(
    generated_dir: &Path,
    human_dir: &Path,
    out: &Path,
    k: usize,
    n_top: usize,
) -> Result<ExitCode, String> {
    let entries = load_labeled_entries(generated_dir, human_dir, n_top)?;
    let model = corpus::model_from_entries(&entries, k);
    corpus::save_model(out, &model).map_err(|e| e.to_string())?;
    eprintln!("wrote {} points (k = {k}) to {}", model.points.len(), out.display());
    Ok(ExitCode::SUCCESS)
}

fn scaled_model_view(model: &Model, scale: bool) -> (Vec<LabeledPoint>, Option<MinMaxScaler>) {
    if !scale {
        return (model.points.clone(), None);
    }
    match MinMaxScaler::fit(&model.points) {
        Some(scaler) => (scaler.transform_points(&model.points), Some(scaler)),
        None => (model.points.clone(), None),
    }
}

fn cmd_classify(
    file: &Path,
    model_path: &Path,
    k_override: Option<usize>,
    n_top: usize,
    scale: bool,
) -> Result<ExitCode, String> {
    let model = corpus::load_model(model_path).map_err(|e| e.to_string())?;
    let k = k_override.unwrap_or(model.k);
    let fv = score_file(file, n_top)?;
    let (points, scaler) = scaled_model_view(&model, scale);
    let query = scaler.map_or(fv, |s| s.transform(&fv));
    let outcome = classifier::classify(&points, &query, k).map_err(|e| e.to_string())?;
    println!("{}", outcome.label);
    println!("votes: human {}, generated {}", outcome.human_votes, outcome.generated_votes);
    for (id, label, dist) in &outcome.neighbors {
        println!("  {id} ({label}) distance {dist:.6}");
    }
    Ok(match outcome.label {
        Label::Human => ExitCode::SUCCESS,
        Label::Generated => ExitCode::from(1),
    })
}

fn cmd_crossval(
    model_path: &Path,
    k_list: &[usize],
    format: Format,
    scale: bool,
) -> Result<ExitCode, String> {
    let model = corpus::load_model(model_path).map_err(|e| e.to_string())?;
    let (points, _) = scaled_model_view(&model, scale);
    let report = classifier::sweep_k(&points, k_list).map_err(|e| e.to_string())?;
    match format {
        Format::Text => {
            println!("{:>4} {:>10} {:>18} {:>18}", "k", "error", "human→generated", "generated→human");
            for e in &report.entries {
                println!(
                    "{:>4} {:>10.6} {:>18} {:>18}",
                    e.k, e.error_rate, e.human_as_generated, e.generated_as_human
                );
            }
        }
        Format::Csv => {
            println!("k,error_rate,human_as_generated,generated_as_human");
            for e in &report.entries {
                println!("{},{},{},{}", e.k, e.error_rate, e.human_as_generated, e.generated_as_human);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_export_scatter(
    model_path: &Path,
    axes: &[String],
    out: Option<&Path>,
) -> Result<ExitCode, String> {
    if axes.len() != 2 {
        return Err(format!("expected exactly two axes, got {}", axes.len()));
    }
    let x: Axis = axes[0].parse()?;
    let y: Axis = axes[1].parse()?;
    let model = corpus::load_model(model_path).map_err(|e| e.to_string())?;
    let entries: Vec<CorpusEntry> = model
        .points
        .iter()
        .map(|p| CorpusEntry {
            source_id: p.source_id.clone(),
            label: p.label,
            features: p.features,
        })
        .collect();
    let csv = corpus::export_scatter(&entries, (x, y)).to_csv();
    match out {
        Some(path) => std::fs::write(path, csv).map_err(|e| format!("{}: {e}", path.display()))?,
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}
