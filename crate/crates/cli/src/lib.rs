//! The `fpcup` command line: argument handling, text and JSON rendering.
//!
//! [`run`] does all the work and returns what `main` should print, so the
//! tests can drive it without spawning processes.

pub mod record;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use sha2::{Digest, Sha256};

use fpcup::cup::CupMatrix;
use fpcup::group_ring::fox_derivative_checked;
use fpcup::sunada::epi::{EpiSearchOptions, DEFAULT_BUDGET};
use fpcup::sunada::{
    are_conjugate_subgroups, find_epimorphisms, is_almost_conjugate, parse_group_file, sunada_pipeline, GroupFile,
    PipelineOptions, SunadaReport,
};
use fpcup::{cup_matrix, double_fox, echelon_presentation, h1_integral, Alphabet, Error, IntMatrix, Presentation};

pub use record::{CoverRecord, Results, RunRecord};

#[derive(Parser, Debug)]
#[command(name = "fpcup", version, about = "Cup products and homology of finitely presented groups")]
pub struct Cli {
    /// Emit a machine-readable JSON record instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Report wall time (JSON field, or a line on stderr).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fox derivative of a word, optionally augmented or doubled.
    Fox(FoxArgs),
    /// Recombine relators so the Fox Jacobian is in Hermite normal form.
    Echelon { presentation: PathBuf },
    /// Rational cup product H^1 x H^1 -> H^2 of the presentation complex.
    Cup { presentation: PathBuf },
    /// Integral first homology.
    Homology { presentation: PathBuf },
    /// Test whether the first two subgroups of a group file are almost conjugate.
    AlmostConjugate { group: PathBuf },
    /// Epimorphisms from a presented group onto a finite group.
    EpiSearch {
        presentation: PathBuf,
        group: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        max_results: Option<usize>,
    },
    /// Covers for two almost conjugate subgroups, with homology and cup data.
    Sunada {
        presentation: PathBuf,
        group: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        no_simplify: bool,
    },
}

#[derive(Args, Debug)]
pub struct FoxArgs {
    #[arg(long)]
    pub word: String,
    /// Generator to differentiate by: a letter or a 1-based number.
    #[arg(long)]
    pub index: String,
    /// Second generator: print ε(∂_index ∂_second w).
    #[arg(long)]
    pub second: Option<String>,
    /// Apply the augmentation.
    #[arg(long)]
    pub augmented: bool,
    /// Alphabet size.
    #[arg(long, default_value_t = 26)]
    pub gens: usize,
}

/// What `main` should do: text for each stream and the exit status.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_limit() {
            Failure::Limit(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, ..Default::default() }
                }
                _ => Outcome { code: 1, stderr: text, ..Default::default() },
            };
        }
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok((mut record, text)) => {
            let elapsed = start.elapsed().as_secs_f64() * 1000.0;
            let mut out = Outcome::default();
            if cli.json {
                if cli.timing {
                    record.wall_time_ms = Some(elapsed);
                }
                out.stdout = serde_json::to_string_pretty(&record).expect("records serialize") + "\n";
            } else {
                out.stdout = text;
                if cli.timing {
                    out.stderr = format!("wall time: {elapsed:.3} ms\n");
                }
            }
            out
        }
        Err(Failure::Domain(msg)) => Outcome { code: 1, stderr: format!("error: {msg}\n"), ..Default::default() },
        Err(Failure::Limit(msg)) => Outcome { code: 2, stderr: format!("error: {msg}\n"), ..Default::default() },
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn read_presentation(path: &Path) -> Result<(String, Presentation), Failure> {
    let text = read(path)?;
    let p = Presentation::parse(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    Ok((text, p))
}

fn read_group(path: &Path) -> Result<(String, GroupFile), Failure> {
    let text = read(path)?;
    let g = parse_group_file(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    Ok((text, g))
}

fn digest(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p.as_bytes());
        h.update([0u8]);
    }
    hex::encode(h.finalize())
}

fn record(command: &str, inputs: &[&str], results: Results) -> RunRecord {
    RunRecord { command: command.to_string(), input_digest: digest(inputs), results, wall_time_ms: None }
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    m.to_rows().into_iter().map(|r| r.into_iter().map(|x| x.to_string()).collect()).collect()
}

fn render_rows(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join(" ") + "\n").collect()
}

fn execute(cli: &Cli) -> Result<(RunRecord, String), Failure> {
    match &cli.command {
        Command::Fox(args) => fox(args),
        Command::Echelon { presentation } => {
            let (text, p) = read_presentation(presentation)?;
            let e = echelon_presentation(&p)?;
            let transform = matrix_rows(&e.transform);
            let pres = e.base.to_string();
            let out = format!("{pres}transform:\n{}", render_rows(&transform));
            let results = Results { presentation: Some(pres), transform: Some(transform), ..Default::default() };
            Ok((record("echelon", &[&text], results), out))
        }
        Command::Cup { presentation } => {
            let (text, p) = read_presentation(presentation)?;
            let c = cup_matrix(&p)?;
            let out = render_cup(&c);
            let results = Results {
                b: Some(c.b),
                dim_h2: Some(c.dim_h2),
                rank: Some(c.rank),
                nullity: Some(c.nullity),
                cup_matrix: Some(cup_rows(&c)),
                ..Default::default()
            };
            Ok((record("cup", &[&text], results), out))
        }
        Command::Homology { presentation } => {
            let (text, p) = read_presentation(presentation)?;
            let h = h1_integral(&p);
            let results = Results {
                homology: Some(h.to_string()),
                free_rank: Some(h.free_rank),
                torsion: Some(h.torsion.iter().map(ToString::to_string).collect()),
                ..Default::default()
            };
            Ok((record("homology", &[&text], results), format!("{h}\n")))
        }
        Command::AlmostConjugate { group } => {
            let (text, f) = read_group(group)?;
            let [h1, h2] = first_two(&f)?;
            let almost = is_almost_conjugate(&f.group, h1, h2);
            let conjugate = are_conjugate_subgroups(&f.group, h1, h2);
            let out = format!(
                "group order: {}\nsubgroup orders: {} {}\nalmost conjugate: {almost}\nconjugate: {conjugate}\n",
                f.group.order(),
                h1.order(),
                h2.order()
            );
            let results = Results {
                group_order: Some(f.group.order()),
                subgroup_orders: Some(vec![h1.order(), h2.order()]),
                almost_conjugate: Some(almost),
                conjugate: Some(conjugate),
                ..Default::default()
            };
            Ok((record("almost-conjugate", &[&text], results), out))
        }
        Command::EpiSearch { presentation, group, budget, max_results } => {
            let (ptext, p) = read_presentation(presentation)?;
            let (gtext, f) = read_group(group)?;
            let opts = EpiSearchOptions { budget: *budget, max_results: max_results.unwrap_or(usize::MAX) };
            let found = find_epimorphisms(&p, &f.group, opts)?;
            let images: Vec<Vec<String>> =
                found.iter().map(|h| h.images.iter().map(|&e| f.group.label(e)).collect()).collect();
            let mut out = String::new();
            for im in &images {
                out += &render_images(p.alphabet(), im);
                out.push('\n');
            }
            out += &format!("epimorphisms found: {}\n", images.len());
            let results = Results { epimorphisms: Some(images), ..Default::default() };
            Ok((record("epi-search", &[&ptext, &gtext], results), out))
        }
        Command::Sunada { presentation, group, budget, no_simplify } => {
            let (ptext, p) = read_presentation(presentation)?;
            let (gtext, f) = read_group(group)?;
            let [h1, h2] = first_two(&f)?;
            let opts = PipelineOptions { budget: *budget, epimorphism: None, simplify: !no_simplify };
            let r = sunada_pipeline(&p, &f.group, h1, h2, &opts)?;
            let out = render_sunada(&p, &f, &r);
            let results = sunada_results(&f, &r);
            Ok((record("sunada", &[&ptext, &gtext], results), out))
        }
    }
}

fn first_two(f: &GroupFile) -> Result<[&fpcup::sunada::Subgroup; 2], Failure> {
    match f.subgroups.as_slice() {
        [a, b, ..] => Ok([a, b]),
        _ => Err(Failure::Domain("group file needs two `sub:` lines".into())),
    }
}

fn generator(alphabet: &Alphabet, name: &str) -> Result<usize, Failure> {
    if let Ok(k) = name.parse::<usize>() {
        if k >= 1 && k <= alphabet.len() {
            return Ok(k - 1);
        }
        return Err(Failure::Domain(format!("generator index {k} out of range 1..={}", alphabet.len())));
    }
    alphabet.lookup(name).ok_or_else(|| Failure::Domain(format!("unknown generator {name:?}")))
}

fn fox(args: &FoxArgs) -> Result<(RunRecord, String), Failure> {
    let alphabet = Alphabet::default_for(args.gens);
    let w = alphabet.parse_word(&args.word).map_err(|e| Failure::Domain(e.to_string()))?;
    let s = generator(&alphabet, &args.index)?;
    let inputs = [args.word.as_str(), args.index.as_str(), args.second.as_deref().unwrap_or("")];
    let (value, results) = match &args.second {
        Some(t) => {
            let t = generator(&alphabet, t)?;
            let v = double_fox(&w, s, t).to_string();
            (v.clone(), Results { double_fox: Some(v), ..Default::default() })
        }
        None => {
            let d = fox_derivative_checked(&w, s, alphabet.len())?;
            if args.augmented {
                let v = d.augmentation().to_string();
                (v.clone(), Results { augmented: Some(v), ..Default::default() })
            } else {
                let v = d.render(&alphabet);
                (v.clone(), Results { fox: Some(v), ..Default::default() })
            }
        }
    };
    Ok((record("fox", &inputs, results), format!("{value}\n")))
}

fn cup_rows(c: &CupMatrix) -> Vec<Vec<String>> {
    (0..c.entries.rows()).map(|i| c.entries.row(i).iter().map(ToString::to_string).collect()).collect()
}

fn render_cup(c: &CupMatrix) -> String {
    let mut out = format!("b={}\ndimH2={}\n", c.b, c.dim_h2);
    let pairs: Vec<String> = c.pairs.iter().map(|(i, j)| format!("u{}u{}", i + 1, j + 1)).collect();
    out += &format!("cup matrix ({} x {}, columns {}):\n", c.dim_h2, c.pairs.len(), pairs.join(" "));
    out += &render_rows(&cup_rows(c));
    out += &format!("rank={}\nnullity={}\n", c.rank, c.nullity);
    out
}

fn render_images(alphabet: &Alphabet, images: &[String]) -> String {
    images
        .iter()
        .enumerate()
        .map(|(i, x)| format!("{} -> {x}", alphabet.generator_name(i)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn render_sunada(p: &Presentation, f: &GroupFile, r: &SunadaReport) -> String {
    let labels: Vec<String> = r.epimorphism.images.iter().map(|&e| f.group.label(e)).collect();
    let mut out = format!("epimorphism: {}\n", render_images(p.alphabet(), &labels));
    for (k, c) in r.covers.iter().enumerate() {
        out += &format!("cover {}: index {}\n", k + 1, c.index);
        for line in c.presentation.to_string().lines() {
            out += &format!("  {line}\n");
        }
        out += &format!("  homology: {}\n", c.homology);
        out += &format!("  b={} dimH2={} rank={} nullity={}\n", c.cup.b, c.cup.dim_h2, c.cup.rank, c.cup.nullity);
    }
    out += &format!("homology distinguishes: {}\n", r.homology_distinguishes);
    out += &format!("cup distinguishes: {}\n", r.cup_distinguishes);
    out += &format!("note: {}\n", r.caveat);
    out
}

fn sunada_results(f: &GroupFile, r: &SunadaReport) -> Results {
    let covers = r
        .covers
        .iter()
        .map(|c| CoverRecord {
            index: c.index,
            presentation: c.presentation.to_string(),
            homology: c.homology.to_string(),
            b: c.cup.b,
            dim_h2: c.cup.dim_h2,
            rank: c.cup.rank,
            nullity: c.cup.nullity,
        })
        .collect();
    Results {
        epimorphisms: Some(vec![r.epimorphism.images.iter().map(|&e| f.group.label(e)).collect()]),
        covers: Some(covers),
        homology_distinguishes: Some(r.homology_distinguishes),
        cup_distinguishes: Some(r.cup_distinguishes),
        caveat: Some(r.caveat.to_string()),
        ..Default::default()
    }
}
