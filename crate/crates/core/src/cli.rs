//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 on usage or input
//! errors. Files are written atomically.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::json;

use crate::algebra::DEFAULT_ORDER;
use crate::error::Error;
use crate::hodge::hodge_numbers;
use crate::io::{polytope_json, read_polytope, write_atomic};
use crate::lattice::{LatticePolytope, LatticeVector};
use crate::mirror_map::{boundary_ode_solutions, flat_coordinate_series, locate_transition_poles, GkzOperator};
use crate::reflexive::{check_reflexive, ReflexivePolytope};
use crate::transitions::{build_web, reflexive_polygons_in_box, TransitionWeb};
use crate::worked_example::{run_pipeline, PipelineConfig};

pub const ORDER_ENV: &str = "TORIC_MIRROR_ORDER";

#[derive(Debug, Parser)]
#[command(name = "toric-mirror", version, about = "Reflexive polytopes, Hodge numbers, transition webs and the octic mirror map")]
pub struct CommandConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reflexivity test and polar duality.
    #[command(subcommand)]
    Reflexive(ReflexiveCommand),
    /// Hodge numbers of the hypersurface family with the given Newton polytope.
    Hodge {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Transition webs.
    #[command(subcommand)]
    Web(WebCommand),
    /// Flat coordinate and poles on the boundary curve.
    #[command(subcommand)]
    Mirrormap(MirrormapCommand),
    /// The two-parameter octic model.
    #[command(subcommand)]
    Example(ExampleCommand),
    /// Corpus generation.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Debug, Subcommand)]
pub enum ReflexiveCommand {
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    Polar {
        file: PathBuf,
        /// Write the polar here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum WebCommand {
    Build {
        /// Directory of polytope files (`*.json`).
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct OrderArg {
    /// Series truncation order.
    #[arg(long, env = ORDER_ENV, default_value_t = DEFAULT_ORDER, value_parser = clap::value_parser!(u16).range(2..=64).map(|x| x as usize))]
    pub order: usize,
}

#[derive(Debug, Subcommand)]
pub enum MirrormapCommand {
    Series {
        #[command(flatten)]
        order: OrderArg,
    },
    Poles,
}

#[derive(Debug, Subcommand)]
pub enum ExampleCommand {
    Verify {
        #[command(flatten)]
        order: OrderArg,
        #[arg(long)]
        json: bool,
        /// Replace v6 by `a,b,c,d` (fault injection).
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        override_v6: Option<LatticeVector>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusCommand {
    /// Write every reflexive polygon with vertices in `[-B, B]^2`.
    Polygons {
        #[arg(long, default_value_t = 2)]
        bound: i64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_vector(s: &str) -> Result<LatticeVector, String> {
    let coords: Result<Vec<BigInt>, _> = s.split(',').map(|c| BigInt::from_str(c.trim())).collect();
    match coords {
        Ok(c) if c.len() == 4 => Ok(LatticeVector::new(c)),
        Ok(c) => Err(format!("expected 4 coordinates, got {}", c.len())),
        Err(e) => Err(e.to_string()),
    }
}

enum Failure {
    Check(String),
    Input(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
        }
    }
}

/// Input problems exit 2; everything else the library reports is a failed
/// check.
impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptyInput
            | Error::DegeneratePolytope { .. }
            | Error::DimensionMismatch { .. }
            | Error::UnsupportedDimension(_)
            | Error::WrongDimension { .. } => Failure::Input(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

impl From<crate::io::InputError> for Failure {
    fn from(e: crate::io::InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn write_out(path: &Path, contents: &str) -> Result<(), Failure> {
    write_atomic(path, contents.as_bytes()).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, s: &str) -> Result<(), Failure> {
    out.write_all(s.as_bytes()).map_err(|e| Failure::Input(format!("standard output: {e}")))
}

fn require_file(path: &Path) -> Result<(), Failure> {
    if path.is_file() {
        Ok(())
    } else {
        Err(Failure::Input(format!("{}: no such file", path.display())))
    }
}

fn to_json(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializes") + "\n"
}

/// Runs one command; diagnostics go to `err`. Returns the exit status.
pub fn dispatch(config: &CommandConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run(config, out) {
        Ok(()) => 0,
        Err(f) => {
            let (Failure::Check(m) | Failure::Input(m)) = &f;
            let _ = writeln!(err, "error: {m}");
            f.code()
        }
    }
}

fn run(config: &CommandConfig, out: &mut dyn Write) -> Result<(), Failure> {
    match &config.command {
        Command::Reflexive(ReflexiveCommand::Check { file, json }) => reflexive_check(file, *json, out),
        Command::Reflexive(ReflexiveCommand::Polar { file, out: target }) => {
            require_file(file)?;
            let p = ReflexivePolytope::new(&read_polytope(file)?)?;
            let text = polytope_json(p.polar().polytope());
            match target {
                Some(path) => write_out(path, &text),
                None => emit(out, &text),
            }
        }
        Command::Hodge { file, json } => {
            require_file(file)?;
            let p = ReflexivePolytope::new(&read_polytope(file)?)?;
            let h = hodge_numbers(&p)?;
            if *json {
                emit(out, &to_json(&serde_json::to_value(&h).expect("serializes")))
            } else {
                emit(
                    out,
                    &format!(
                        "h11: {}\nh21: {}\neuler: {}\nl(P): {}\nl(P*): {}\nfacet interior sum (P): {}\nfacet interior sum (P*): {}\ncodim-2 correction (P): {}\ncodim-2 correction (P*): {}\n",
                        h.h11,
                        h.h21,
                        h.euler,
                        h.l_p,
                        h.l_polar,
                        h.facet_interior_sum_p,
                        h.facet_interior_sum_polar,
                        h.codim2_correction_p,
                        h.codim2_correction_polar
                    ),
                )
            }
        }
        Command::Web(WebCommand::Build { corpus, out: target, dot }) => web_build(corpus, target, dot.as_deref(), out),
        Command::Mirrormap(MirrormapCommand::Series { order }) => mirrormap_series(order.order, out),
        Command::Mirrormap(MirrormapCommand::Poles) => {
            let rep = locate_transition_poles()?;
            emit(out, &to_json(&serde_json::to_value(&rep).expect("serializes")))
        }
        Command::Example(ExampleCommand::Verify { order, json, override_v6 }) => {
            let rep = run_pipeline(&PipelineConfig { order: order.order, v6_override: override_v6.clone() });
            if *json {
                emit(out, &rep.to_json_string())?;
            } else {
                for (name, c) in &rep.checks {
                    emit(out, &format!("{name}: {}\n", if c.pass { "PASS" } else { "FAIL" }))?;
                }
            }
            if rep.all_pass() {
                Ok(())
            } else {
                let failed: Vec<&str> = rep.checks.iter().filter(|(_, c)| !c.pass).map(|(n, _)| n.as_str()).collect();
                Err(Failure::Check(format!("failed checks: {}", failed.join(", "))))
            }
        }
        Command::Corpus(CorpusCommand::Polygons { bound, out: dir }) => {
            if !(1..=3).contains(bound) {
                return Err(Failure::Input(format!("bound {bound} must lie in 1..=3")));
            }
            fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
            let polys = reflexive_polygons_in_box(*bound);
            for (i, p) in polys.iter().enumerate() {
                write_out(&dir.join(format!("p{i:03}.json")), &polytope_json(p.polytope()))?;
            }
            emit(out, &format!("wrote {} polygons to {}\n", polys.len(), dir.display()))
        }
    }
}

fn reflexive_check(file: &Path, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    require_file(file)?;
    let p = read_polytope(file)?;
    let rep = check_reflexive(&p)?;
    let reflexive = rep.is_reflexive();
    if json {
        let interior: Vec<String> = rep.interior_points.iter().map(ToString::to_string).collect();
        let v = json!({
            "reflexive": reflexive,
            "conditions": {
                "hull_of_lattice_points": rep.hull_of_lattice_points,
                "unique_interior_point": rep.unique_interior_point(),
                "polar_vertices_integral": rep.polar_vertices_integral(),
            },
            "facet_criterion": rep.facet_offsets_all_one,
            "interior_points": interior,
            "failure": (!reflexive).then(|| rep.failure_reason()),
        });
        emit(out, &to_json(&v))?;
    } else {
        emit(out, &format!("reflexive: {reflexive}\n"))?;
        if !reflexive {
            emit(out, &format!("reason: {}\n", rep.failure_reason()))?;
        }
    }
    if reflexive {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} is not reflexive", file.display())))
    }
}

/// Polytope files of a corpus directory, ordered by file name; ids are file
/// stems.
pub fn read_corpus(dir: &Path) -> Result<Vec<(String, LatticePolytope)>, String> {
    let entries = fs::read_dir(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let id = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            read_polytope(p).map(|poly| (id, poly)).map_err(|e| e.to_string())
        })
        .collect()
}

pub fn export_dot(web: &TransitionWeb) -> String {
    web.to_dot()
}

fn web_build(corpus: &Path, target: &Path, dot: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    if !corpus.is_dir() {
        return Err(Failure::Input(format!("{}: not a directory", corpus.display())));
    }
    let members = read_corpus(corpus).map_err(Failure::Input)?;
    let web = build_web(&members);
    write_out(target, &to_json(&web.to_json()))?;
    if let Some(path) = dot {
        write_out(path, &export_dot(&web))?;
    }
    emit(
        out,
        &format!(
            "nodes: {}\nedges: {}\nconnected: {}\nrejected: {}\n",
            web.nodes.len(),
            web.edges.len(),
            web.is_connected(),
            web.rejected.len()
        ),
    )?;
    web.validate()?;
    if web.edges.iter().any(|e| !e.transition.mirror_verified) {
        return Err(Failure::Check("an edge failed the mirror inclusion".into()));
    }
    Ok(())
}

fn mirrormap_series(order: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let sol = boundary_ode_solutions(order)?;
    let (r0, r1) = sol.residuals(&GkzOperator::boundary())?;
    let z = flat_coordinate_series(order)?;
    let exp_g = sol.g.exp()?;
    let join = |s: &crate::algebra::Series| s.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    emit(out, &format!("order: {order}\n"))?;
    emit(out, &format!("z2 coefficients: [{}]\n", join(&z)))?;
    emit(out, &format!("exp(g) coefficients: [{}]\n", join(&exp_g)))?;
    emit(out, &format!("log-solution analytic part coefficients: [{}]\n", join(&sol.g)))?;
    let ok = r0.is_zero() && r1.is_zero();
    emit(out, &format!("residuals zero through order {order}: {ok}\n"))?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Check("ODE residual is nonzero".into()))
    }
}
