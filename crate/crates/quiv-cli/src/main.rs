//! `quiv`: construct quivers, validate quiver maps, enumerate hom-sets,
//! factor assignments through the adjoint constructions, and run the
//! adjunction law suite.
//!
//! Exit codes: 0 success, 1 validation or law failure, 2 usage or parse
//! error, 3 enumeration cap exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quiv::adjunction::{check_all_adjunction_laws, factorize, AdjunctionError};
use quiv::constructions::Construction;
use quiv::format::{
    export_dot, parse_map, parse_morphism, parse_quiver, resolve_map, resolve_morphism_components,
    serialize_morphism_components, serialize_quiver, FormatError,
};
use quiv::oracle::{enumerate_homs, quiver_catalogue, set_catalogue, OracleError, SizeCaps};
use quiv::quiver::QuiverMorphism;
use quiv::set::{FiniteSet, Label, SetError};

#[derive(Parser)]
#[command(
    name = "quiv",
    version,
    about = "Finite quivers: construct, validate, enumerate, certify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a morphism file describes a valid quiver map.
    Validate {
        /// Morphism document; its dom/cod lines name quiver files relative
        /// to it.
        morphism_file: PathBuf,
    },
    /// Print one of the four standard quivers on the given elements.
    Construct {
        kind: ConstructKind,
        /// Element labels of the underlying set.
        elements: Vec<String>,
    },
    /// Enumerate (or count) all quiver maps between two quivers.
    Hom {
        g_file: PathBuf,
        h_file: PathBuf,
        /// Print only the number of maps.
        #[arg(long)]
        count: bool,
    },
    /// Factor a set-level assignment through the matching construction and
    /// certify that the mediating morphism is unique.
    Factorize {
        kind: FactorizeKind,
        quiver_file: PathBuf,
        /// Map document with dom/cod/map lines.
        map_file: PathBuf,
    },
    /// Run the adjunction law suite over generated catalogues.
    Laws {
        /// Largest set size in the catalogue.
        #[arg(long, default_value_t = 2)]
        max_set: usize,
        /// Largest vertex count in the quiver catalogue.
        #[arg(long, default_value_t = 2)]
        max_v: usize,
        /// Largest edge count in the quiver catalogue.
        #[arg(long, default_value_t = 2)]
        max_e: usize,
    },
    /// Render a quiver file as a DOT digraph.
    ExportDot { quiver_file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    /// Independent set of vertices: no edges.
    Empty,
    /// Independent set of edges: disjoint arrows.
    Matching,
    /// Complete digraph: one edge per ordered pair.
    Complete,
    /// One vertex, every element a loop.
    Bouquet,
}

impl From<ConstructKind> for Construction {
    fn from(kind: ConstructKind) -> Construction {
        match kind {
            ConstructKind::Empty => Construction::IndependentVertices,
            ConstructKind::Matching => Construction::IndependentEdges,
            ConstructKind::Complete => Construction::Complete,
            ConstructKind::Bouquet => Construction::Bouquet,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FactorizeKind {
    /// Factor phi: S -> V(G) through the empty quiver on S.
    ReflectV,
    /// Factor phi: S -> E(G) through the independent edges on S.
    ReflectE,
    /// Factor phi: V(G) -> S through the complete digraph on S.
    CoreflectV,
    /// Factor phi: E(G) -> S through the bouquet on S.
    CoreflectE,
}

impl From<FactorizeKind> for Construction {
    fn from(kind: FactorizeKind) -> Construction {
        match kind {
            FactorizeKind::ReflectV => Construction::IndependentVertices,
            FactorizeKind::ReflectE => Construction::IndependentEdges,
            FactorizeKind::CoreflectV => Construction::Complete,
            FactorizeKind::CoreflectE => Construction::Bouquet,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(err: FormatError) -> Failure {
        Failure::new(2, err.to_string())
    }
}

impl From<SetError> for Failure {
    fn from(err: SetError) -> Failure {
        Failure::new(2, err.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(err: OracleError) -> Failure {
        Failure::new(3, err.to_string())
    }
}

impl From<AdjunctionError> for Failure {
    fn from(err: AdjunctionError) -> Failure {
        let code = match err {
            AdjunctionError::Oracle(_) => 3,
            _ => 1,
        };
        Failure::new(code, err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Validate { morphism_file } => validate(&morphism_file),
        Command::Construct { kind, elements } => construct(kind, &elements),
        Command::Hom {
            g_file,
            h_file,
            count,
        } => hom(&g_file, &h_file, count),
        Command::Factorize {
            kind,
            quiver_file,
            map_file,
        } => run_factorize(kind, &quiver_file, &map_file),
        Command::Laws {
            max_set,
            max_v,
            max_e,
        } => laws(max_set, max_v, max_e),
        Command::ExportDot { quiver_file } => {
            let quiver = load_quiver(&quiver_file)?;
            print!("{}", export_dot(&quiver));
            Ok(())
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|err| Failure::new(2, format!("cannot read {}: {err}", path.display())))
}

fn load_quiver(path: &Path) -> Result<quiv::Quiver, Failure> {
    let text = read_file(path)?;
    let document =
        parse_quiver(&text).map_err(|err| Failure::new(2, format!("{}: {err}", path.display())))?;
    Ok(document.quiver)
}

fn validate(morphism_file: &Path) -> Result<(), Failure> {
    let text = read_file(morphism_file)?;
    let document = parse_morphism(&text)
        .map_err(|err| Failure::new(2, format!("{}: {err}", morphism_file.display())))?;
    let base = morphism_file.parent().unwrap_or_else(|| Path::new(""));
    let dom = load_quiver(&base.join(&document.dom_path))?;
    let cod = load_quiver(&base.join(&document.cod_path))?;
    let (vertex_map, edge_map) = resolve_morphism_components(&document, &dom, &cod)?;
    match QuiverMorphism::new(dom, cod, vertex_map, edge_map) {
        Ok(_) => {
            println!("valid");
            Ok(())
        }
        Err(err) => Err(Failure::new(1, err.to_string())),
    }
}

fn construct(kind: ConstructKind, elements: &[String]) -> Result<(), Failure> {
    let labels = elements
        .iter()
        .map(|name| Label::new(name.as_str()))
        .collect::<Result<Vec<_>, _>>()?;
    let set = FiniteSet::new(labels)?;
    let quiver = Construction::from(kind).on_set(&set);
    print!("{}", serialize_quiver(&quiver));
    Ok(())
}

fn hom(g_file: &Path, h_file: &Path, count: bool) -> Result<(), Failure> {
    let g = load_quiver(g_file)?;
    let h = load_quiver(h_file)?;
    let homs = enumerate_homs(&g, &h, &SizeCaps::default())?;
    if count {
        println!("{}", homs.len());
        return Ok(());
    }
    for (index, phi) in homs.iter().enumerate() {
        if index > 0 {
            println!();
        }
        println!("morphism {index}");
        print!(
            "{}",
            serialize_morphism_components(phi.vertex_map(), phi.edge_map())
        );
    }
    Ok(())
}

fn run_factorize(kind: FactorizeKind, quiver_file: &Path, map_file: &Path) -> Result<(), Failure> {
    let quiver = load_quiver(quiver_file)?;
    let map_text = read_file(map_file)?;
    let map_doc = parse_map(&map_text)
        .map_err(|err| Failure::new(2, format!("{}: {err}", map_file.display())))?;
    let assignment = resolve_map(&map_doc)?;
    let result = factorize(Construction::from(kind), &quiver, &assignment)?;
    let certified = result.certify_unique(&SizeCaps::default())?;
    let mediating = certified.mediating();
    print!(
        "{}",
        serialize_morphism_components(mediating.vertex_map(), mediating.edge_map())
    );
    println!(
        "satisfying morphisms: {}",
        certified
            .uniqueness_witness()
            .expect("certification populates the witness")
    );
    Ok(())
}

fn laws(max_set: usize, max_v: usize, max_e: usize) -> Result<(), Failure> {
    let sets = set_catalogue(max_set);
    let quivers = quiver_catalogue(max_v, max_e);
    let report = check_all_adjunction_laws(&sets, &quivers, &SizeCaps::default())?;
    println!("{report}");
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::new(1, "adjunction law check failed"))
    }
}
