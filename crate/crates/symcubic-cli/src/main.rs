//! Command-line surface for the symmetric cubic fourfold invariants.
//!
//! Exit codes: 0 on success, 1 when the dimension cross-check n = n'
//! fails, 2 on invalid input or any other error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use symcubic::boundary::{bb_verdict, chi_form, verify_veronese_singularity};
use symcubic::exact::{parse_rational, validate_modulus, Polynomial, PolynomialJson, Subspace};
use symcubic::jacobian::{
    hilbert_function, hodge_eigen, smoothness_certificate, RankConfig, SampleConfig,
};
use symcubic::lattice::{
    boundary_subspace_j, boundary_subspace_vsigma, cm_line_to_plane, cyclotomic_eigenlattice,
    eigenlattice, isotropic_vectors, verify_isometry, IntegralLattice, Isometry, LatticeJson,
    DEFAULT_ORDER_CAP,
};
use symcubic::moduli::{analyze, classify_all, ClassificationRow, ModuliReport};
use symcubic::symmetry::{SymmetryDescriptor, SymmetryType};
use symcubic::Error;

#[derive(Parser)]
#[command(
    name = "symcubic",
    version,
    about = "Invariants of cubic fourfolds with diagonal cyclic symmetry: \
             eigenspaces, smoothness certificates, Hodge characters, moduli \
             dimensions, period-domain types and boundary criteria"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Seed for all random sampling.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Prime modulus for modular ranks (must be below 2^31).
    #[arg(long, default_value_t = (1u64 << 31) - 1)]
    modulus: u64,
    /// Optional second prime for an independent recheck.
    #[arg(long)]
    second_prime: Option<u64>,
    /// Certify ranks exactly instead of accepting modular evidence.
    #[arg(long)]
    exact: bool,
    /// Emit the report as JSON instead of a table.
    #[arg(long)]
    json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct SymmetryOpts {
    /// Group order N.
    #[arg(long)]
    order: u64,
    /// Comma-separated weight vector m0,...,m5.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    weights: Vec<i64>,
    /// Character exponent w; omit to enumerate all residues.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of one symmetry type: eigenspace, moduli dimension,
    /// Hodge characters, domain type and boundary verdict.
    Analyze {
        #[command(flatten)]
        sym: SymmetryOpts,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Reproduce the classification table for a list of group orders.
    Classify {
        /// Comma-separated list of (prime) group orders.
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        /// Also emit the table as CSV.
        #[arg(long)]
        csv: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Smoothness certificate for a cubic form read from JSON.
    Smooth {
        /// Polynomial file: {"vars":6,"degree":3,"terms":[{"coef":"p/q","exps":[..]}]}
        #[arg(long)]
        poly: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Hodge eigenspace data of a smooth member of an eigenspace.
    Hodge {
        #[arg(long)]
        poly: PathBuf,
        #[command(flatten)]
        sym: SymmetryOpts,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Baily-Borel verdict for a prime-order symmetry type.
    Bb {
        #[command(flatten)]
        sym: SymmetryOpts,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// The determinantal family: expand a member or verify the singular
    /// locus identity.
    Chi {
        /// Parameter a as an exact fraction.
        #[arg(long)]
        a: Option<String>,
        /// Parameter b as an exact fraction.
        #[arg(long)]
        b: Option<String>,
        /// Check symbolically that the rank-one parametrization lies in the
        /// singular locus of the determinantal member.
        #[arg(long)]
        verify_veronese: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Lattice-level operations (eigenlattices, isotropic vectors,
    /// boundary subspaces).
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
}

#[derive(Args, Clone)]
struct LatticeCommon {
    /// Lattice file: {"gram": [[..]], "isometry": [[..]]?, "arrangement": [[..]..]?}
    #[arg(long)]
    lattice: PathBuf,
    /// Emit JSON instead of a table.
    #[arg(long)]
    json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Clone)]
enum LatticeOp {
    /// Verify the isometry in the file and report its order.
    Verify {
        #[command(flatten)]
        common: LatticeCommon,
        /// Cap on the order search.
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        cap: u64,
    },
    /// Fixed or anti-fixed sublattice of the isometry, with Gram and signature.
    Eigen {
        #[command(flatten)]
        common: LatticeCommon,
        /// +1 for the fixed part, -1 for the anti-fixed part.
        #[arg(long, allow_hyphen_values = true)]
        sign: i64,
    },
    /// Kernel of the p-th cyclotomic polynomial of the isometry, with the
    /// eigenspace isotropy check.
    Cyclotomic {
        #[command(flatten)]
        common: LatticeCommon,
        /// Odd prime p.
        #[arg(long)]
        prime: u64,
    },
    /// Primitive isotropic vectors up to the height bound, up to sign.
    Isotropic {
        #[command(flatten)]
        common: LatticeCommon,
        #[arg(long)]
        height: i64,
    },
    /// Boundary subspace attached to an isotropic line and the arrangement.
    BoundaryLine {
        #[command(flatten)]
        common: LatticeCommon,
        /// Comma-separated line generator.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        line: Vec<i64>,
    },
    /// Boundary subspace attached to an isotropic plane and the arrangement.
    BoundaryPlane {
        #[command(flatten)]
        common: LatticeCommon,
        /// Plane basis, two comma-separated vectors joined by ';'.
        #[arg(long)]
        plane: String,
    },
    /// Test whether e + sqrt(-D) f spans a rational isotropic plane.
    Cm {
        #[command(flatten)]
        common: LatticeCommon,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        e: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        f: Vec<i64>,
        #[arg(long)]
        d: u64,
    },
}

/// Envelope wrapping every report: schema and version pin the byte format,
/// the command and configuration are echoed for reproducibility.
#[derive(Serialize)]
struct Report<T: Serialize> {
    schema: &'static str,
    version: &'static str,
    command: String,
    config: ConfigEcho,
    result: T,
}

#[derive(Serialize, Default)]
struct ConfigEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    modulus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    second_prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<bool>,
}

fn envelope<T: Serialize>(command: &str, config: ConfigEcho, result: T) -> Report<T> {
    Report {
        schema: "1",
        version: env!("CARGO_PKG_VERSION"),
        command: command.to_string(),
        config,
        result,
    }
}

fn emit(json_text: String, table_text: String, json: bool, out: &Option<PathBuf>) -> Result<(), Error> {
    let text = if json { json_text } else { table_text };
    match out {
        Some(path) => {
            let mut fh = std::fs::File::create(path)
                .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?;
            writeln!(fh, "{text}")
                .map_err(|e| Error::InvalidInput(format!("write failed: {e}")))?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn rank_config(common: &CommonOpts) -> Result<RankConfig, Error> {
    let modulus = validate_modulus(common.modulus)?;
    let second_prime = match common.second_prime {
        Some(p) => Some(validate_modulus(p)?),
        None => None,
    };
    Ok(RankConfig {
        modulus,
        second_prime,
        exact: common.exact,
    })
}

fn config_echo(common: &CommonOpts) -> ConfigEcho {
    ConfigEcho {
        seed: Some(common.seed),
        modulus: Some(common.modulus),
        second_prime: common.second_prime,
        exact: Some(common.exact),
    }
}

fn symmetry_types(opts: &SymmetryOpts) -> Result<Vec<SymmetryType>, Error> {
    let descriptor = SymmetryDescriptor {
        order: opts.order,
        weights: opts.weights.clone(),
        lambda_exp: opts.lambda,
    };
    SymmetryType::from_descriptor(&descriptor)
}

fn load_polynomial(path: &PathBuf) -> Result<Polynomial, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let parsed: PolynomialJson = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("bad polynomial JSON: {e}")))?;
    Polynomial::from_json(&parsed)
}

fn load_lattice(path: &PathBuf) -> Result<(IntegralLattice, LatticeJson), Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let parsed: LatticeJson = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("bad lattice JSON: {e}")))?;
    let lattice = IntegralLattice::new(parsed.gram.clone())?;
    Ok((lattice, parsed))
}

fn subspace_json(s: &Subspace) -> Vec<Vec<String>> {
    (0..s.dim())
        .map(|i| {
            s.basis()
                .row(i)
                .iter()
                .map(symcubic::exact::format_rational)
                .collect()
        })
        .collect()
}

fn report_table(r: &ModuliReport) -> String {
    let mut out = String::new();
    let label = r.label.as_deref().unwrap_or("-");
    out.push_str(&format!(
        "type {}  order {}  weights {:?}  lambda {}\n",
        label,
        r.sym.order,
        r.sym.weights,
        r.sym.lambda_exp.unwrap_or(0)
    ));
    out.push_str(&format!(
        "dim V = {}   orbit rank = {}   n = {}   n' = {}\n",
        r.dim_eigenspace, r.orbit_rank, r.n, r.n_prime
    ));
    out.push_str(&format!(
        "zeta = {} ({})   signature = ({}, {})   domain = {}\n",
        r.zeta,
        if r.zeta_real { "real" } else { "non-real" },
        r.signature.0,
        r.signature.1,
        r.domain
    ));
    match r.bb {
        Some(b) => {
            out.push_str(&format!(
                "baily-borel = {}{}\n",
                b,
                if r.bb_flagged { "  [flagged]" } else { "" }
            ));
            if let Some(note) = &r.bb_note {
                out.push_str(&format!("note: {note}\n"));
            }
        }
        None => out.push_str("baily-borel = n/a (non-prime order)\n"),
    }
    out.push_str(&format!("seeds used: {:?}", r.seeds_used));
    out
}

fn classification_table(rows: &[ClassificationRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<7} {:>5} {:<16} {:>3} {:>6} {:>3} {:<9} {:<12} {:<5}\n",
        "label", "order", "weights", "w", "dim V", "n", "zeta", "domain", "bb"
    ));
    for r in rows {
        let weights = r
            .sym
            .weights
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let bb = match r.bb {
            Some(true) => "yes",
            Some(false) => "no",
            None => "n/a",
        };
        out.push_str(&format!(
            "{:<7} {:>5} {:<16} {:>3} {:>6} {:>3} {:<9} {:<12} {:<5}{}\n",
            r.label.as_deref().unwrap_or("-"),
            r.sym.order,
            weights,
            r.sym.lambda_exp.unwrap_or(0),
            r.dim_eigenspace,
            r.n,
            r.zeta,
            r.domain,
            bb,
            if r.bb_flagged { " [flagged]" } else { "" }
        ));
    }
    out.pop();
    out
}

fn classification_csv(rows: &[ClassificationRow]) -> String {
    let mut out = String::from("label,order,weights,lambda,dim_eigenspace,n,zeta,domain,bb,flagged\n");
    for r in rows {
        let weights = r
            .sym
            .weights
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.label.as_deref().unwrap_or(""),
            r.sym.order,
            weights,
            r.sym.lambda_exp.unwrap_or(0),
            r.dim_eigenspace,
            r.n,
            r.zeta,
            r.domain,
            r.bb.map(|b| b.to_string()).unwrap_or_default(),
            r.bb_flagged
        ));
    }
    out.pop();
    out
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Analyze { sym, common } => {
            let cfg = rank_config(&common)?;
            let sample = SampleConfig::default();
            let types = symmetry_types(&sym)?;
            let enumerate_all = sym.lambda.is_none();
            let mut reports = Vec::new();
            for t in types {
                match analyze(&t, common.seed, &cfg, &sample) {
                    Ok(r) => reports.push(r),
                    Err(Error::NoSmoothMember { .. }) if enumerate_all => continue,
                    Err(e) => return Err(e),
                }
            }
            if reports.is_empty() {
                return Err(Error::NoSmoothMember { attempts: 0 });
            }
            let table = reports
                .iter()
                .map(report_table)
                .collect::<Vec<_>>()
                .join("\n\n");
            let json = if enumerate_all {
                serde_json::to_string_pretty(&envelope("analyze", config_echo(&common), &reports))
            } else {
                serde_json::to_string_pretty(&envelope("analyze", config_echo(&common), &reports[0]))
            }
            .unwrap();
            emit(json, table, common.json, &common.out)
        }
        Command::Classify { primes, csv, common } => {
            let cfg = rank_config(&common)?;
            let rows = classify_all(&primes, common.seed, &cfg, &SampleConfig::default())?;
            let json =
                serde_json::to_string_pretty(&envelope("classify", config_echo(&common), &rows))
                    .unwrap();
            let table = if csv {
                classification_csv(&rows)
            } else {
                classification_table(&rows)
            };
            emit(json, table, common.json, &common.out)
        }
        Command::Smooth { poly, common } => {
            let cfg = rank_config(&common)?;
            let f = load_polynomial(&poly)?;
            let cert = smoothness_certificate(&f, None, &cfg)?;
            let table = format!(
                "verdict: {}\nprimes used: {:?}\nhilbert tail: {:?}",
                serde_json::to_string(&cert.verdict).unwrap().trim_matches('"'),
                cert.primes_used,
                cert.hilbert_tail
            );
            let json =
                serde_json::to_string_pretty(&envelope("smooth", config_echo(&common), &cert))
                    .unwrap();
            emit(json, table, common.json, &common.out)
        }
        Command::Hodge { poly, sym, common } => {
            let cfg = rank_config(&common)?;
            let f = load_polynomial(&poly)?;
            let types = symmetry_types(&sym)?;
            if types.len() != 1 {
                return Err(Error::InvalidInput(
                    "hodge requires an explicit --lambda".into(),
                ));
            }
            let hodge = hodge_eigen(&f, &types[0], &cfg)?;
            let profile = hilbert_function(&f, Some(&types[0]), &cfg)?;
            #[derive(Serialize)]
            struct HodgeResult<'a> {
                hodge: &'a symcubic::HodgeEigenData,
                hilbert: [usize; 8],
            }
            let result = HodgeResult {
                hodge: &hodge,
                hilbert: profile.hilbert,
            };
            let table = format!(
                "zeta = {} (exp {})\nh31 = {:?}\nh22 = {:?}\nh13 = {:?}\nhilbert = {:?}",
                hodge.zeta_display(),
                hodge.zeta_exp,
                hodge.h31,
                hodge.h22,
                hodge.h13,
                profile.hilbert
            );
            let json =
                serde_json::to_string_pretty(&envelope("hodge", config_echo(&common), &result))
                    .unwrap();
            emit(json, table, common.json, &common.out)
        }
        Command::Bb { sym, common } => {
            let types = symmetry_types(&sym)?;
            if types.len() != 1 {
                return Err(Error::InvalidInput("bb requires an explicit --lambda".into()));
            }
            let verdict = bb_verdict(&types[0])?;
            let table = format!(
                "is_bb: {}\nwitnesses: {}",
                verdict.is_bb,
                serde_json::to_string(&verdict.witnesses).unwrap()
            );
            let json = serde_json::to_string_pretty(&envelope(
                "bb",
                ConfigEcho::default(),
                &verdict,
            ))
            .unwrap();
            emit(json, table, common.json, &common.out)
        }
        Command::Chi {
            a,
            b,
            verify_veronese,
            common,
        } => {
            if verify_veronese {
                let ok = verify_veronese_singularity();
                #[derive(Serialize)]
                struct Veronese {
                    ok: bool,
                }
                let json = serde_json::to_string_pretty(&envelope(
                    "chi --verify-veronese",
                    ConfigEcho::default(),
                    &Veronese { ok },
                ))
                .unwrap();
                return emit(json, format!("ok: {ok}"), common.json, &common.out);
            }
            let a = parse_rational(&a.ok_or(Error::InvalidInput("--a required".into()))?)?;
            let b = parse_rational(&b.ok_or(Error::InvalidInput("--b required".into()))?)?;
            let f = chi_form(&a, &b)?;
            let json =
                serde_json::to_string_pretty(&envelope("chi", ConfigEcho::default(), f.to_json()))
                    .unwrap();
            emit(json, format!("{f}"), common.json, &common.out)
        }
        Command::Lattice { op } => run_lattice(op),
    }
}

fn run_lattice(op: LatticeOp) -> Result<(), Error> {
    match op {
        LatticeOp::Verify { common, cap } => {
            let (lattice, parsed) = load_lattice(&common.lattice)?;
            let g = parsed
                .isometry
                .ok_or(Error::InvalidInput("lattice file lacks an isometry".into()))?;
            let (ok, order) = verify_isometry(&lattice, &g, cap)?;
            #[derive(Serialize)]
            struct VerifyResult {
                ok: bool,
                order: u64,
            }
            let json = serde_json::to_string_pretty(&envelope(
                "lattice verify",
                ConfigEcho::default(),
                &VerifyResult { ok, order },
            ))
            .unwrap();
            emit(json, format!("ok: {ok}, order: {order}"), common.json, &common.out)
        }
        LatticeOp::Eigen { common, sign } => {
            let (lattice, parsed) = load_lattice(&common.lattice)?;
            let g = parsed
                .isometry
                .ok_or(Error::InvalidInput("lattice file lacks an isometry".into()))?;
            let iso = Isometry::new(&lattice, g, DEFAULT_ORDER_CAP)?;
            let sub = eigenlattice(&lattice, &iso, sign)?;
            let table = format!(
                "rank {}  signature ({}, {}, {})\ngram: {:?}\nbasis: {:?}",
                sub.rank, sub.signature.0, sub.signature.1, sub.signature.2, sub.gram, sub.basis
            );
            let json = serde_json::to_string_pretty(&envelope(
                "lattice eigen",
                ConfigEcho::default(),
                &sub,
            ))
            .unwrap();
            emit(json, table, common.json, &common.out)
        }
        LatticeOp::Cyclotomic { common, prime } => {
            let (lattice, parsed) = load_lattice(&common.lattice)?;
            let g = parsed
                .isometry
                .ok_or(Error::InvalidInput("lattice file lacks an isometry".into()))?;
            let iso = Isometry::new(&lattice, g, DEFAULT_ORDER_CAP)?;
            let ce = cyclotomic_eigenlattice(&lattice, &iso, prime)?;
            let table = format!(
                "rank {}  signature {:?}  eigenspaces isotropic: {}",
                ce.sublattice.rank, ce.sublattice.signature, ce.eigenspaces_isotropic
            );
            let json = serde_json::to_string_pretty(&envelope(
                "lattice cyclotomic",
                ConfigEcho::default(),
                &ce,
            ))
            .unwrap();
            emit(json, table, common.json, &common.out)
        }
        LatticeOp::Isotropic { common, height } => {
            let (lattice, _) = load_lattice(&common.lattice)?;
            let vectors = isotropic_vectors(&lattice, height)?;
            #[derive(Serialize)]
            struct IsotropicResult {
                count: usize,
                vectors: Vec<Vec<i64>>,
            }
            let table = vectors
                .iter()
                .map(|v| format!("{v:?}"))
                .collect::<Vec<_>>()
                .join("\n");
            let json = serde_json::to_string_pretty(&envelope(
                "lattice isotropic",
                ConfigEcho::default(),
                &IsotropicResult {
                    count: vectors.len(),
                    vectors,
                },
            ))
            .unwrap();
            emit(json, table, common.json, &common.out)
        }
        LatticeOp::BoundaryLine { common, line } => {
            let (lattice, parsed) = load_lattice(&common.lattice)?;
            let arrangement = parsed.arrangement.unwrap_or_default();
            let sub = boundary_subspace_j(&lattice, &line, &arrangement)?;
            emit_subspace("lattice boundary-line", &sub, &common)
        }
        LatticeOp::BoundaryPlane { common, plane } => {
            let (lattice, parsed) = load_lattice(&common.lattice)?;
            let arrangement = parsed.arrangement.unwrap_or_default();
            let vectors: Vec<Vec<i64>> = plane
                .split(';')
                .map(|part| {
                    part.split(',')
                        .map(|v| {
                            v.trim()
                                .parse()
                                .map_err(|_| Error::InvalidInput(format!("bad entry {v:?}")))
                        })
                        .collect()
                })
                .collect::<Result<_, _>>()?;
            let plane: [Vec<i64>; 2] = vectors
                .try_into()
                .map_err(|_| Error::InvalidInput("plane needs exactly two vectors".into()))?;
            let sub = boundary_subspace_vsigma(&lattice, &plane, &arrangement)?;
            emit_subspace("lattice boundary-plane", &sub, &common)
        }
        LatticeOp::Cm { common, e, f, d } => {
            let (lattice, _) = load_lattice(&common.lattice)?;
            let plane = cm_line_to_plane(&lattice, &e, &f, d)?;
            #[derive(Serialize)]
            struct CmResult {
                isotropic_plane: Option<Vec<Vec<String>>>,
            }
            let result = CmResult {
                isotropic_plane: plane.as_ref().map(subspace_json),
            };
            let table = match &result.isotropic_plane {
                Some(b) => format!("isotropic plane: {b:?}"),
                None => "no isotropic plane".to_string(),
            };
            let json = serde_json::to_string_pretty(&envelope(
                "lattice cm",
                ConfigEcho::default(),
                &result,
            ))
            .unwrap();
            emit(json, table, common.json, &common.out)
        }
    }
}

fn emit_subspace(command: &str, sub: &Subspace, common: &LatticeCommon) -> Result<(), Error> {
    #[derive(Serialize)]
    struct SubspaceResult {
        dim: usize,
        basis: Vec<Vec<String>>,
    }
    let result = SubspaceResult {
        dim: sub.dim(),
        basis: subspace_json(sub),
    };
    let table = format!("dim {}\nbasis: {:?}", result.dim, result.basis);
    let json =
        serde_json::to_string_pretty(&envelope(command, ConfigEcho::default(), &result)).unwrap();
    emit(json, table, common.json, &common.out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::VerificationFailure { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
