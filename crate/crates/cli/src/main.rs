//! `conmorse` command-line tool.
//!
//! Exit codes: 0 success, 1 validation or computation failure, 2 unreadable
//! or malformed input.

mod input;
mod output;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use conmorse::conley::{conley_morse_graph, minimal_morse_decomposition, MorseDecomposition};
use conmorse::pipeline::full_barcode;
use serde::Serialize;

use input::{load, read_bundle, Loaded};
use output::{BarcodeOut, FiltrationOut, GraphOut, MorseOut};

#[derive(Debug)]
pub enum Failure {
    Io(String),
    Domain(Vec<String>),
}

impl Failure {
    fn domain(msg: impl ToString) -> Self {
        Failure::Domain(vec![msg.to_string()])
    }
}

#[derive(Parser)]
#[command(name = "conmorse", version, about = "Conley-Morse barcodes for sequences of multivector fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Input bundle (JSON).
    path: PathBuf,
    /// Field characteristic; overrides "char" in the input.
    #[arg(long = "char")]
    characteristic: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the complex, fields and isolating sets.
    Validate {
        #[command(flatten)]
        common: Common,
    },
    /// Compute the combined barcode.
    Barcode {
        #[command(flatten)]
        common: Common,
        /// Thickening rounds for the index pairs; overrides "thicken".
        #[arg(long)]
        thicken: Option<usize>,
        /// Write the JSON result here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Also render the barcode as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Morse sets of one field.
    Morse {
        #[command(flatten)]
        common: Common,
        /// Field number, starting at 1.
        #[arg(long, default_value_t = 1)]
        field: usize,
    },
    /// Conley-Morse graph of one field.
    Cmgraph {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        field: usize,
    },
    /// Maximal sequences of index pairs with their slots.
    Filtrations {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        thicken: Option<usize>,
    },
}

fn loaded(common: &Common, thicken: Option<usize>) -> Result<Loaded, Failure> {
    let bundle = read_bundle(&common.path)?;
    let l = load(&bundle, common.characteristic, thicken).map_err(Failure::Domain)?;
    for w in &l.warnings {
        eprintln!("warning: {w}");
    }
    Ok(l)
}

fn field_index(l: &Loaded, field: usize) -> Result<usize, Failure> {
    if field == 0 || field > l.fields.len() {
        return Err(Failure::domain(format!("field {field} is out of range (1..={})", l.fields.len())));
    }
    Ok(field - 1)
}

fn decomposition(l: &Loaded, i: usize) -> Result<MorseDecomposition, Failure> {
    let n = l.isolating_set(i);
    match &l.decompositions {
        Some(ds) => MorseDecomposition::from_sets(&l.fields[i], n, ds[i].clone()),
        None => minimal_morse_decomposition(&l.fields[i], n),
    }
    .map_err(Failure::domain)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output is serializable");
    s.push('\n');
    s
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { common } => {
            let l = loaded(&common, None)?;
            for i in 0..l.fields.len() {
                decomposition(&l, i)?;
            }
            println!(
                "ok: {} simplices, {} field(s), characteristic {}",
                l.complex.len(),
                l.fields.len(),
                l.prime.get()
            );
        }
        Command::Barcode { common, thicken, json, svg } => {
            let l = loaded(&common, thicken)?;
            let out = full_barcode(&l.pipeline_input()).map_err(Failure::domain)?;
            let doc = BarcodeOut::new(&out);
            let text = to_json(&doc);
            match json {
                Some(p) => write_file(&p, &text)?,
                None => print!("{text}"),
            }
            if let Some(p) = svg {
                write_file(&p, &svg::render(&doc, l.fields.len()))?;
            }
        }
        Command::Morse { common, field } => {
            let l = loaded(&common, None)?;
            let i = field_index(&l, field)?;
            print!("{}", to_json(&MorseOut::new(field, &decomposition(&l, i)?)));
        }
        Command::Cmgraph { common, field } => {
            let l = loaded(&common, None)?;
            let i = field_index(&l, field)?;
            let g = conley_morse_graph(&l.fields[i], &decomposition(&l, i)?, l.prime).map_err(Failure::domain)?;
            print!("{}", to_json(&GraphOut::new(field, &g)));
        }
        Command::Filtrations { common, thicken } => {
            let l = loaded(&common, thicken)?;
            let out = full_barcode(&l.pipeline_input()).map_err(Failure::domain)?;
            let fs: Vec<FiltrationOut> =
                out.filtrations.iter().enumerate().map(|(i, f)| FiltrationOut::new(i, f)).collect();
            print!("{}", to_json(&fs));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msgs)) => {
            for m in msgs {
                eprintln!("error: {m}");
            }
            ExitCode::from(1)
        }
    }
}
