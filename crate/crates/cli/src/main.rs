use std::cmp::Ordering;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use delorder::artinian::artinian_all_orders;
use delorder::bruhat::bruhat_relation;
use delorder::cayley::{
    export, label_by_sorting, order_table, stream_in_deletion_order, successor_label, table_csv,
    table_json, table_text, CayleyGraph, ExportFormat,
};
use delorder::coxeter::{preset_matrix, Caps, CoxeterMatrix};
use delorder::duality::{duality_report, write_defects, LabelMethod};
use delorder::normal_forms::{nf_delta_oracle, nf_rlex};
use delorder::{Alphabet, CoxeterSystem, Error, GroupElement, Word};

#[derive(Parser)]
#[command(
    name = "delorder",
    version,
    about = "The deletion order on words and Coxeter groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two words under the deletion order.
    Compare {
        u: String,
        v: String,
        /// Alphabet size; defaults to the largest letter used.
        #[arg(short = 'n', long)]
        alphabet: Option<usize>,
    },
    /// Normal form of an element, checked against the exhaustive search.
    Nf {
        #[command(flatten)]
        system: SystemArgs,
        /// The element as a word; omit with --all.
        word: Option<String>,
        /// Check every element of the group.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Elements in deletion order with permutation images and normal forms.
    OrderTable {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the successor algorithm and verify it against sorting.
    Label {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the labelled Cayley graph as Graphviz.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// The first elements in deletion order; works for Artinian infinite groups.
    Stream {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(short = 'n', long = "count", default_value_t = 20)]
        count: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Bruhat relation between two elements.
    Bruhat {
        #[command(flatten)]
        system: SystemArgs,
        u: String,
        v: String,
    },
    /// Artinian verdict for each choice of top generator.
    Artinian {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check L(w) + L(w0 w) = |W| + 1 for every element.
    Duality {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        defects_only: bool,
        /// Label by sorting instead of running the graph algorithm.
        #[arg(long)]
        sort: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Labelled Cayley graph as DOT, JSON or CSV.
    Export {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SystemArgs {
    /// Preset name (A3, B3, D5, I2(7), Atilde2, ...) or a JSON matrix file.
    system: String,
    /// Generator order, least first, e.g. 3,1,2.
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<usize>>,
    #[arg(long)]
    cap_elements: Option<usize>,
    #[arg(long)]
    cap_wordlen: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    Dot,
}

enum Failure {
    Lib(Error),
    Io(io::Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

impl SystemArgs {
    fn load(&self) -> Result<CoxeterSystem, Failure> {
        let matrix = if Path::new(&self.system).is_file() {
            CoxeterMatrix::from_json(&fs::read_to_string(&self.system)?)?
        } else {
            preset_matrix(&self.system)?
        };
        let mut caps = Caps::default();
        for (flag, value, slot) in [
            ("--cap-elements", self.cap_elements, &mut caps.elements),
            ("--cap-wordlen", self.cap_wordlen, &mut caps.word_len),
        ] {
            match value {
                Some(0) => return Err(Failure::Usage(format!("{flag} must be positive"))),
                Some(v) => *slot = v,
                None => {}
            }
        }
        caps.reduced_words_len = caps.reduced_words_len.min(caps.word_len);
        let sys = CoxeterSystem::with_caps(matrix, caps);
        match &self.order {
            Some(order) => Ok(sys.reordered(order)?),
            None => Ok(sys),
        }
    }
}

fn parse_word(s: &str) -> Result<Word, Failure> {
    Ok(s.parse::<Word>()?)
}

fn ordering_str(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

fn emit(out: &mut dyn io::Write, path: Option<&Path>, body: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, body)?,
        None => out.write_all(body.as_bytes())?,
    }
    Ok(())
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialises") + "\n"
}

fn compare(out: &mut dyn io::Write, u: &str, v: &str, alphabet: Option<usize>) -> Outcome {
    let (u, v) = (parse_word(u)?, parse_word(v)?);
    let used = u.max_letter().max(v.max_letter()).unwrap_or(1) as usize;
    let alphabet = Alphabet::new(alphabet.unwrap_or(used))?;
    writeln!(out, "{}", ordering_str(alphabet.compare(&u, &v)?))?;
    Ok(())
}

// Normal form of one element, or an error if the two computations disagree.
fn checked_nf(sys: &CoxeterSystem, g: &GroupElement) -> Result<Word, Error> {
    let greedy = nf_rlex(sys, g)?;
    let oracle = nf_delta_oracle(sys, g)?;
    if greedy != oracle {
        return Err(Error::InvariantViolation(format!(
            "greedy normal form {} differs from the deletion-least reduced word {}",
            greedy.to_generator_string(),
            oracle.to_generator_string()
        )));
    }
    Ok(greedy)
}

fn nf(
    out: &mut dyn io::Write,
    sys: &CoxeterSystem,
    word: Option<&str>,
    all: bool,
    jobs: usize,
) -> Outcome {
    if all {
        let elements = sys.enumerate()?;
        let jobs = jobs.max(1);
        let chunk = elements.len().div_ceil(jobs).max(1);
        let results: Vec<Result<Vec<Word>, Error>> = std::thread::scope(|scope| {
            let handles: Vec<_> = elements
                .chunks(chunk)
                .map(|part| scope.spawn(move || part.iter().map(|g| checked_nf(sys, g)).collect()))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
        let mut count = 0;
        for r in results {
            count += r?.len();
        }
        writeln!(
            out,
            "{count} elements: greedy and exhaustive normal forms agree"
        )?;
        return Ok(());
    }
    let word = word.ok_or_else(|| Failure::Usage("give a word or --all".into()))?;
    let g = sys.element(&parse_word(word)?)?;
    writeln!(out, "{}", checked_nf(sys, &g)?.to_generator_string())?;
    Ok(())
}

fn render_table(
    sys: &CoxeterSystem,
    format: Format,
) -> Result<(String, CayleyGraph, delorder::cayley::Labeling), Failure> {
    let graph = CayleyGraph::build(sys)?;
    let labeling = successor_label(&graph);
    let rows = order_table(sys, &graph, &labeling)?;
    let body = match format {
        Format::Text => table_text(&rows),
        Format::Csv => table_csv(&rows),
        Format::Json => table_json(&rows),
        Format::Dot => return Err(Failure::Usage("tables are text, csv or json".into())),
    };
    Ok((body, graph, labeling))
}

fn label(
    out: &mut dyn io::Write,
    sys: &CoxeterSystem,
    format: Format,
    path: Option<&Path>,
    dot: Option<&Path>,
) -> Outcome {
    let (body, graph, labeling) = render_table(sys, format)?;
    if label_by_sorting(sys, &graph)?.labels != labeling.labels {
        return Err(Error::InvariantViolation(
            "successor labels differ from the deletion order".into(),
        )
        .into());
    }
    emit(out, path, &body)?;
    if let Some(dot) = dot {
        fs::write(dot, export(sys, &graph, &labeling, ExportFormat::Dot)?.0)?;
    }
    Ok(())
}

fn stream(out: &mut dyn io::Write, sys: &CoxeterSystem, count: usize, format: Format) -> Outcome {
    let items = stream_in_deletion_order(sys, count)?;
    let words: Vec<String> = items.iter().map(|(_, w)| w.to_generator_string()).collect();
    match format {
        Format::Json => out.write_all(json(&words).as_bytes())?,
        _ => {
            for (k, w) in words.iter().enumerate() {
                writeln!(out, "{} {w}", k + 1)?;
            }
        }
    }
    Ok(())
}

fn run(cli: Cli, out: &mut dyn io::Write, err: &mut dyn io::Write) -> Outcome {
    match cli.command {
        Command::Compare { u, v, alphabet } => compare(out, &u, &v, alphabet),
        Command::Nf {
            system,
            word,
            all,
            jobs,
        } => nf(out, &system.load()?, word.as_deref(), all, jobs),
        Command::OrderTable { system, format } => {
            let (body, _, _) = render_table(&system.load()?, format)?;
            emit(out, None, &body)
        }
        Command::Label {
            system,
            format,
            out: path,
            dot,
        } => label(
            out,
            &system.load()?,
            format,
            path.as_deref(),
            dot.as_deref(),
        ),
        Command::Stream {
            system,
            count,
            format,
        } => stream(out, &system.load()?, count, format),
        Command::Bruhat { system, u, v } => {
            let sys = system.load()?;
            let (u, v) = (
                sys.element(&parse_word(&u)?)?,
                sys.element(&parse_word(&v)?)?,
            );
            writeln!(out, "{}", bruhat_relation(&sys, &u, &v)?.as_str())?;
            Ok(())
        }
        Command::Artinian { system, format } => {
            let report = artinian_all_orders(&system.load()?);
            let body = match format {
                Format::Json => json(&report),
                _ => report.to_string(),
            };
            emit(out, None, &body)
        }
        Command::Duality {
            system,
            defects_only,
            sort,
            format,
        } => {
            let method = if sort {
                LabelMethod::Sort
            } else {
                LabelMethod::Graph
            };
            let report = duality_report(&system.load()?, &system.system, method)?;
            let body = match (format, defects_only) {
                (Format::Json, true) => json(&report.defects),
                (Format::Json, false) => json(&report),
                (_, true) => {
                    let mut s = String::new();
                    write_defects(&mut s, &report.defects, report.order)
                        .expect("writing to a string");
                    s
                }
                (_, false) => report.to_string(),
            };
            emit(out, None, &body)
        }
        Command::Export {
            system,
            format,
            out: path,
        } => {
            let sys = system.load()?;
            let format = match format {
                Format::Dot => ExportFormat::Dot,
                Format::Json => ExportFormat::Json,
                Format::Csv => ExportFormat::Csv,
                Format::Text => {
                    return Err(Failure::Usage(
                        "export formats are dot, json and csv".into(),
                    ))
                }
            };
            let graph = CayleyGraph::build(&sys)?;
            let labeling = successor_label(&graph);
            let (body, notice) = export(&sys, &graph, &labeling, format)?;
            if let Some(notice) = notice {
                writeln!(err, "note: {notice}")?;
            }
            emit(out, path.as_deref(), &body)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut err = io::stderr();
    let result = run(cli, &mut out, &mut err);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Lib(e) => {
                    let code = match e {
                        Error::ResourceCap { .. } => 3,
                        Error::InvariantViolation(_) => 4,
                        _ => 2,
                    };
                    (code, e.to_string())
                }
                Failure::Io(e) => (2, e.to_string()),
                Failure::Usage(m) => (2, m),
            };
            let _ = writeln!(err, "error: {message}");
            ExitCode::from(code)
        }
    }
}
