//! Command-line front end. JSON goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::length;
use crate::monoid::{proper_generators_criterion, proper_generators_slab, SlabRoute, DEFAULT_POINT_CAP};
use crate::polytope::{all_faces, enumerate_facets, face_roots, FacetJson};
use crate::rootcore::{CartanType, Family, RootSystem};
use crate::vector::{parse_rational, LatticeVec};
use crate::verify::{run_suite, VerifyOptions, SUITES};
use crate::weyl::DEFAULT_ORBIT_CAP;

#[derive(Parser, Debug)]
#[command(name = "rootlength", version, about = "Lengths of root-lattice vectors and faces of root polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct TypeArgs {
    /// Family letter (with --rank), a full name such as B3, or a product such as A2xB3
    #[arg(long = "type")]
    ty: String,
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct GammaArgs {
    /// Comma-separated integer coordinates, Bourbaki order
    #[arg(long, allow_hyphen_values = true)]
    gamma: String,
    /// Coordinates of --gamma: simple roots or fundamental weights
    #[arg(long, value_enum, default_value_t = Basis::Root)]
    basis: Basis,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Basis {
    Root,
    Weight,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    /// Exhaustive slab search (box scan, or stabilizer-dominant scan from rank 5)
    Slab,
    /// Box scan of root coordinates
    Box,
    /// Stabilizer-dominant scan with orbit expansion
    Dominant,
    /// Necessary conditions plus explicit certificates
    Criterion,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Length of a vector, with a minimal decomposition
    Length {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        gamma: GammaArgs,
    },
    /// Minimal decomposition into roots
    Decompose {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        gamma: GammaArgs,
    },
    /// Minimal number of positive roots
    PositiveLength {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        gamma: GammaArgs,
    },
    /// All facets with their functionals and vertices
    Facets {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// All proper faces as (A, τ) pairs
    Faces {
        #[command(flatten)]
        ty: TypeArgs,
        /// Only the standard faces (τ = 1)
        #[arg(long)]
        standard: bool,
    },
    /// Proper minimal elements of a standard facet
    Generators {
        #[command(flatten)]
        ty: TypeArgs,
        /// Maximal simple root, 1-based
        #[arg(long)]
        facet: usize,
        #[arg(long, default_value = "7")]
        level_bound: String,
        #[arg(long, value_enum, default_value_t = Method::Slab)]
        method: Method,
    },
    /// Run verification suites
    Verify {
        /// Suite name, or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long, default_value = "7")]
        level_bound: String,
    },
}

/// Parses `--type`/`--rank` into irreducible components.
fn parse_types(t: &TypeArgs) -> Result<Vec<CartanType>> {
    if let Some(rank) = t.rank {
        let mut chars = t.ty.chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            return Err(Error::InvalidType(format!("{} with --rank {rank}", t.ty)));
        };
        let family = Family::from_char(c.to_ascii_uppercase()).ok_or_else(|| Error::InvalidType(t.ty.clone()))?;
        return Ok(vec![CartanType::new(family, rank)?]);
    }
    t.ty.split(['x', 'X', '*']).map(|p| p.trim().parse()).collect()
}

fn irreducible(t: &TypeArgs) -> Result<RootSystem> {
    let types = parse_types(t)?;
    if types.len() != 1 {
        return Err(Error::InvalidType(format!("{}: this command needs an irreducible type", t.ty)));
    }
    RootSystem::new(types[0])
}

fn parse_coords(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad coordinate {x:?}"))))
        .collect()
}

/// Components with their slice of `γ` in root coordinates.
fn split_gamma(t: &TypeArgs, g: &GammaArgs) -> Result<Vec<(RootSystem, LatticeVec)>> {
    let systems: Vec<RootSystem> = parse_types(t)?.into_iter().map(RootSystem::new).collect::<Result<_>>()?;
    let coords = parse_coords(&g.gamma)?;
    let total: usize = systems.iter().map(|r| r.rank()).sum();
    if coords.len() != total {
        return Err(Error::DimensionMismatch { expected: total, got: coords.len() });
    }
    let mut out = Vec::new();
    let mut at = 0;
    for rs in systems {
        let part = &coords[at..at + rs.rank()];
        at += rs.rank();
        let v = match g.basis {
            Basis::Root => LatticeVec(part.to_vec()),
            Basis::Weight => rs.from_weight_coords(part)?,
        };
        out.push((rs, v));
    }
    Ok(out)
}

fn type_label(t: &TypeArgs) -> Result<String> {
    Ok(parse_types(t)?.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("x"))
}

fn concat(parts: &[(RootSystem, LatticeVec)]) -> Vec<i64> {
    parts.iter().flat_map(|(_, v)| v.0.clone()).collect()
}

/// Embeds a component vector into the full coordinate vector.
fn embed(parts: &[(RootSystem, LatticeVec)], k: usize, v: &LatticeVec) -> Vec<i64> {
    let mut out = Vec::new();
    for (j, (rs, _)) in parts.iter().enumerate() {
        if j == k {
            out.extend(&v.0);
        } else {
            out.extend(std::iter::repeat_n(0, rs.rank()));
        }
    }
    out
}

fn decomposition_of(parts: &[(RootSystem, LatticeVec)]) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for (k, (rs, v)) in parts.iter().enumerate() {
        for b in length::decompose(rs, v)? {
            out.push(embed(parts, k, &b));
        }
    }
    Ok(out)
}

fn positive_length_of(parts: &[(RootSystem, LatticeVec)]) -> Result<Option<i64>> {
    if !parts.iter().all(|(_, v)| v.is_nonnegative()) {
        return Ok(None);
    }
    let mut s = 0;
    for (rs, v) in parts {
        s += length::positive_length(rs, v, length::DEFAULT_DP_CAP)?;
    }
    Ok(Some(s))
}

fn execute(cmd: Command) -> Result<(Value, bool)> {
    match cmd {
        Command::Length { ty, gamma } => {
            let parts = split_gamma(&ty, &gamma)?;
            let mut total = 0;
            let mut comps = Vec::new();
            for (rs, v) in &parts {
                let r = length::length(rs, v)?;
                total += r.length;
                comps.push(json!({"type": rs.name(), "gamma": v, "length": r.length, "attaining_facets": r.attaining_facets}));
            }
            let mut out = json!({
                "type": type_label(&ty)?,
                "gamma": concat(&parts),
                "length": total,
                "decomposition": decomposition_of(&parts)?,
            });
            // positive length is reported when the recursion fits its cap
            match positive_length_of(&parts) {
                Ok(p) => out["positive_length"] = json!(p),
                Err(e @ Error::CapExceeded { .. }) => {
                    out["positive_length"] = Value::Null;
                    out["positive_length_error"] = json!(e.to_string());
                }
                Err(e) => return Err(e),
            }
            if parts.len() == 1 {
                out["attaining_facets"] = comps[0]["attaining_facets"].clone();
            } else {
                out["components"] = Value::Array(comps);
            }
            Ok((out, true))
        }
        Command::Decompose { ty, gamma } => {
            let parts = split_gamma(&ty, &gamma)?;
            let dec = decomposition_of(&parts)?;
            Ok((json!({"type": type_label(&ty)?, "gamma": concat(&parts), "length": dec.len(), "decomposition": dec}), true))
        }
        Command::PositiveLength { ty, gamma } => {
            let parts = split_gamma(&ty, &gamma)?;
            let p = positive_length_of(&parts)?.ok_or(Error::NotPositive)?;
            Ok((json!({"type": type_label(&ty)?, "gamma": concat(&parts), "positive_length": p}), true))
        }
        Command::Facets { ty } => {
            let rs = irreducible(&ty)?;
            let facets: Vec<FacetJson> = enumerate_facets(&rs)?.iter().map(|f| FacetJson::new(&rs, f)).collect();
            Ok((json!({"type": rs.name(), "count": facets.len(), "facets": facets}), true))
        }
        Command::Faces { ty, standard } => {
            let rs = irreducible(&ty)?;
            let mut faces = Vec::new();
            for f in all_faces(&rs, DEFAULT_ORBIT_CAP)? {
                if standard && !f.tau.is_empty() {
                    continue;
                }
                let roots = face_roots(&rs, &f)?;
                faces.push(json!({"a": f.a.to_bourbaki(), "tau": f.tau.to_bourbaki(), "roots": roots}));
            }
            Ok((json!({"type": rs.name(), "count": faces.len(), "faces": faces}), true))
        }
        Command::Generators { ty, facet, level_bound, method } => {
            let rs = irreducible(&ty)?;
            if facet == 0 || facet > rs.rank() {
                return Err(Error::IndexOutOfRange { index: facet, rank: rs.rank() });
            }
            let bound = parse_rational(&level_bound)?;
            let a = facet - 1;
            let report = match method {
                Method::Slab => proper_generators_slab(&rs, a, &bound, None, DEFAULT_POINT_CAP)?,
                Method::Box => proper_generators_slab(&rs, a, &bound, Some(SlabRoute::Box), DEFAULT_POINT_CAP)?,
                Method::Dominant => {
                    proper_generators_slab(&rs, a, &bound, Some(SlabRoute::Dominant), DEFAULT_POINT_CAP)?
                }
                Method::Criterion => proper_generators_criterion(&rs, a)?,
            };
            Ok((serde_json::to_value(report).map_err(|e| Error::Parse(e.to_string()))?, true))
        }
        Command::Verify { suite, max_rank, level_bound } => {
            let opts = VerifyOptions { max_rank, level_bound: parse_rational(&level_bound)?, ..VerifyOptions::default() };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut reports = Vec::new();
            let mut ok = true;
            for s in names {
                let r = run_suite(s, &opts)?;
                ok &= r.passed();
                reports.push(json!({"suite": r.suite, "passed": r.passed(), "checks": r.checks}));
            }
            Ok((json!({"passed": ok, "suites": reports}), ok))
        }
    }
}

/// Runs the CLI on `argv` (including the program name), writing to the given streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(cli.command) {
        Ok((v, ok)) => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
            if ok {
                0
            } else {
                let _ = writeln!(err, "verification failed");
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}
