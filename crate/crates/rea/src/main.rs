//! Command-line interface: validate R-matrices, decompose tensor powers,
//! build and verify representations, compare closed-form characters against
//! brute-force spectra, and run the interrelation / indecomposable analyses.

use clap::{Parser, Subcommand, ValueEnum};
use rea::hecke::{partitions_of, standard_tableaux, Partition};
use rea::oracle::{central_spectrum, check_relations, commutant_dimension};
use rea::rep::{b, r, Flavor, RepFamily, ShapeClass};
use rea::rmatrix::{
    catalog_standard_hecke, catalog_uq_sl2, validate, RMatrixProfile, DEFAULT_K_MAX,
};
use rea::scalar::LaurentRational;
use rea::tensor::{rank_exact, QMatrix};
use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "rea",
    about = "Exact representation theory of the reflection equation algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TypeFlag {
    #[value(alias = "B")]
    B,
    #[value(alias = "R")]
    R,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an R-matrix file and print the profile report.
    Validate {
        #[arg(long)]
        rmatrix: PathBuf,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        kmax: usize,
    },
    /// Decompose the k-th tensor power: per-tableau projector ranks and the
    /// dimension bookkeeping table.
    Decompose {
        #[arg(long)]
        rmatrix: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Build a representation family and emit it as JSON with a
    /// verification summary.
    Build {
        #[arg(long)]
        rmatrix: PathBuf,
        #[arg(long = "type", value_enum)]
        rep_type: TypeFlag,
        #[arg(long)]
        k: usize,
        /// Partition such as "(2,1)"; omit for the unprojected power.
        #[arg(long)]
        shape: Option<String>,
        /// Index into the deterministic tableau enumeration of the shape.
        #[arg(long, default_value_t = 0)]
        tableau: usize,
        /// Apply the sl-reduction.
        #[arg(long)]
        sl: bool,
        /// Apply the renormalization automorphism with this scalar.
        #[arg(long, allow_hyphen_values = true)]
        renorm: Option<String>,
        /// Write the JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the B <-> R fundamental module interrelation pipeline.
    Equivalence {
        #[arg(long)]
        rmatrix: PathBuf,
    },
    /// Analyze the two-dimensional reducible indecomposable module built
    /// from the one-dimensional representation (0, x, y, z).
    Indecomposable {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Re-verify a representation file produced by `build`.
    Verify {
        #[arg(long)]
        rep: PathBuf,
    },
    /// Closed-form characters against brute-force spectra:
    /// shape x m -> (closed form, oracle, match).
    Characters {
        #[arg(long)]
        rmatrix: PathBuf,
        #[arg(long = "type", value_enum)]
        rep_type: TypeFlag,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        sl: bool,
        /// Write the table as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the table as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Write a catalog R-matrix to a file in the interchange format.
    Catalog {
        /// "uq-sl2" or "standard-hecke".
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Serialize, Deserialize)]
struct RMatrixFile {
    n: usize,
    entries: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct RepBundle {
    rmatrix: RMatrixFile,
    rep: rea::rep::RepFamilyJson,
    verification: Vec<VerificationLine>,
}

#[derive(Serialize, Deserialize)]
struct VerificationLine {
    name: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

#[derive(Serialize)]
struct CharacterRow {
    shape: String,
    m: usize,
    closed_form: Option<String>,
    oracle: String,
    matches: Option<bool>,
}

fn read_rmatrix(path: &PathBuf) -> Result<QMatrix, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path:?}: {e}"))?;
    let file: RMatrixFile =
        serde_json::from_str(&text).map_err(|e| format!("bad R-matrix JSON: {e}"))?;
    rmatrix_from_file(&file)
}

fn rmatrix_from_file(file: &RMatrixFile) -> Result<QMatrix, String> {
    let n = file.n;
    if file.entries.len() != n * n || file.entries.iter().any(|row| row.len() != n * n) {
        return Err(format!(
            "entries must form an {0}x{0} table for n = {n}",
            n * n
        ));
    }
    let mut m = QMatrix::zeros(vec![n, n], vec![n, n]);
    for (i, row) in file.entries.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            let v = LaurentRational::parse(s).map_err(|e| format!("entry ({i}, {j}): {e}"))?;
            m.set(i, j, v);
        }
    }
    Ok(m)
}

fn rmatrix_to_file(m: &QMatrix) -> RMatrixFile {
    let n = m.row_shape()[0];
    let entries = (0..n * n)
        .map(|i| (0..n * n).map(|j| m.at(i, j).to_string()).collect())
        .collect();
    RMatrixFile { n, entries }
}

fn load_profile(path: &PathBuf, kmax: usize) -> Result<RMatrixProfile, String> {
    let m = read_rmatrix(path)?;
    match validate(&m, kmax) {
        Ok(p) => Ok(p),
        Err(e) => {
            for c in &e.checks {
                eprintln!("  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name);
            }
            Err(format!("{e}"))
        }
    }
}

fn parse_scalar(s: &str) -> Result<LaurentRational, String> {
    LaurentRational::parse(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    // die quietly when the pipe closes under us (e.g. `rea validate | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Validate { rmatrix, kmax } => {
            let m = read_rmatrix(&rmatrix)?;
            match validate(&m, kmax) {
                Ok(prof) => {
                    println!(
                        "R-matrix profile: n = {}, symmetry rank p = {}",
                        prof.n(),
                        prof.p()
                    );
                    for c in prof.checks() {
                        println!("  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name);
                    }
                    println!("B = {}", matrix_line(prof.b()));
                    println!("C = {}", matrix_line(prof.c()));
                    println!("Tr B = Tr C = {}", prof.trace_c());
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    println!("INVALID: failed at '{}'", e.failed);
                    for c in &e.checks {
                        println!("  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name);
                    }
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Decompose { rmatrix, k } => {
            let prof = load_profile(&rmatrix, DEFAULT_K_MAX)?;
            let jm = rea::hecke::jm_family(prof.r(), k);
            println!(
                "decomposition of the {k}-th tensor power (n = {})",
                prof.n()
            );
            let mut total = 0usize;
            for nu in partitions_of(k) {
                let ts = standard_tableaux(&nu);
                let mut first_rank = 0;
                for (a, t) in ts.iter().enumerate() {
                    let y = rea::hecke::young_projector_with_jm(&jm, t, prof.n());
                    let rank = rank_exact(&y);
                    if a == 0 {
                        first_rank = rank;
                    }
                    println!("  shape {nu} tableau {a} {t}: rank {rank}");
                }
                total += ts.len() * first_rank;
            }
            let expect = prof.n().pow(k as u32);
            println!("dimension bookkeeping: sum dim[nu] * rank(Y_nu) = {total} (n^k = {expect})");
            if total == expect {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Build {
            rmatrix,
            rep_type,
            k,
            shape,
            tableau,
            sl,
            renorm,
            out,
        } => {
            let prof = load_profile(&rmatrix, DEFAULT_K_MAX)?;
            let mut rep = match rep_type {
                TypeFlag::B => b::tensor_power_b(&prof, k),
                TypeFlag::R => {
                    r::r_type_rep(&prof, k, &LaurentRational::one()).map_err(|e| e.to_string())?
                }
            };
            if let Some(shape_s) = shape {
                let nu = Partition::parse(&shape_s).ok_or("bad shape")?;
                let ts = standard_tableaux(&nu);
                let t = ts.get(tableau).ok_or("tableau index out of range")?;
                rep = match rep_type {
                    TypeFlag::B => b::project_b(&prof, &rep, t).map_err(|e| e.to_string())?,
                    TypeFlag::R => r::project_r(&prof, &rep, t).map_err(|e| e.to_string())?,
                };
            }
            if let Some(z) = renorm {
                let z = parse_scalar(&z)?;
                if rep.flavor == Flavor::Rea {
                    rep = r::to_mrea(&rep);
                }
                rep = rea::rep::renormalize(&rep, &z).map_err(|e| e.to_string())?;
            }
            if sl {
                rep = match rep.flavor {
                    Flavor::Rea => r::sl_reduce_r(&rep, &prof).map_err(|e| e.to_string())?,
                    _ => rea::rep::sl_reduce(&rep, &prof).map_err(|e| e.to_string())?,
                };
            }
            let report = check_relations(&rep, &prof);
            let mut verification: Vec<VerificationLine> = report
                .entries
                .iter()
                .map(|e| VerificationLine {
                    name: e.name.clone(),
                    passed: e.passed,
                    witness: e.witness.clone(),
                })
                .collect();
            verification.push(VerificationLine {
                name: "commutant dimension (1 = irreducibility evidence)".into(),
                passed: true,
                witness: Some(commutant_dimension(&rep).to_string()),
            });
            let bundle = RepBundle {
                rmatrix: rmatrix_to_file(prof.r()),
                rep: rep.to_json(),
                verification,
            };
            let text = serde_json::to_string_pretty(&bundle).map_err(|e| e.to_string())?;
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| e.to_string())?;
                    println!("wrote {}", path.display());
                }
                None => println!("{text}"),
            }
            eprintln!("{report}");
            eprintln!(
                "module dimension {} (effective {})",
                rep.module_dim,
                rep.effective_dim()
            );
            if report.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Equivalence { rmatrix } => {
            let prof = load_profile(&rmatrix, DEFAULT_K_MAX)?;
            let report = r::check_b_r_equivalence(&prof).map_err(|e| e.to_string())?;
            println!("B <-> R interrelation at symmetry rank p = {}", report.p);
            for c in &report.checks {
                println!("  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name);
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Indecomposable { x, y, z } => {
            let prof = rea::rmatrix::validate_default(&catalog_uq_sl2()).expect("catalog is valid");
            let (x, y, z) = (parse_scalar(&x)?, parse_scalar(&y)?, parse_scalar(&z)?);
            let a = r::indecomposable_example(&prof, &x, &y, &z).map_err(|e| e.to_string())?;
            let names = ["a", "b", "c", "d"];
            for (m, name) in a.matrices.iter().zip(names) {
                println!("rho2({name}) = {}", matrix_line(m));
            }
            println!(
                "matrices match closed forms: {}",
                a.matrices_match_closed_form
            );
            println!("span(e1) is a submodule:     {}", a.submodule_confirmed);
            println!("restriction is the q-twist:  {}", a.eta_twist_verified);
            println!("coaction matrix obeys RTT:   {}", a.rtt_verified);
            let relation_ok = check_relations(&a.rep, &prof).all_passed();
            println!("quadratic relation holds:    {relation_ok}");
            match &a.complement {
                Some(w) => println!(
                    "decomposable: invariant complement spanned by ({}, {})",
                    w[0], w[1]
                ),
                None => println!("indecomposable: no invariant complement exists"),
            }
            let ok = a.matrices_match_closed_form
                && a.submodule_confirmed
                && a.eta_twist_verified
                && a.rtt_verified
                && relation_ok;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Verify { rep } => {
            let text = std::fs::read_to_string(&rep).map_err(|e| e.to_string())?;
            let bundle: RepBundle = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let m = rmatrix_from_file(&bundle.rmatrix)?;
            let prof = validate(&m, DEFAULT_K_MAX).map_err(|e| e.to_string())?;
            let family = RepFamily::from_json(&bundle.rep)?;
            let report = check_relations(&family, &prof);
            print!("{report}");
            if let Some(s) = central_spectrum(&family, 1, &prof) {
                println!("first central element acts as {s}");
            } else {
                println!("first central element is not scalar (reducible module)");
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Characters {
            rmatrix,
            rep_type,
            k,
            m,
            sl,
            json,
            csv,
        } => {
            let prof = load_profile(&rmatrix, DEFAULT_K_MAX)?;
            let rows = character_table(&prof, rep_type, k, m, sl)?;
            let mut all_match = true;
            println!("shape, m, closed form, oracle, match");
            for row in &rows {
                let closed = row.closed_form.as_deref().unwrap_or("-");
                let flag = match row.matches {
                    Some(true) => "yes",
                    Some(false) => {
                        all_match = false;
                        "NO"
                    }
                    None => "-",
                };
                println!(
                    "{}, {}, {}, {}, {}",
                    row.shape, row.m, closed, row.oracle, flag
                );
            }
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&rows).map_err(|e| e.to_string())?;
                std::fs::write(&path, text).map_err(|e| e.to_string())?;
            }
            if let Some(path) = csv {
                let mut text = String::from("shape,m,closed_form,oracle,match\n");
                for row in &rows {
                    text.push_str(&format!(
                        "\"{}\",{},\"{}\",\"{}\",{}\n",
                        row.shape,
                        row.m,
                        row.closed_form.as_deref().unwrap_or(""),
                        row.oracle,
                        row.matches.map_or(String::new(), |b| b.to_string())
                    ));
                }
                std::fs::write(&path, text).map_err(|e| e.to_string())?;
            }
            Ok(if all_match {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Catalog { family, n, out } => {
            let m = match family.as_str() {
                "uq-sl2" => catalog_uq_sl2(),
                "standard-hecke" => catalog_standard_hecke(n),
                other => return Err(format!("unknown family '{other}'")),
            };
            let text =
                serde_json::to_string_pretty(&rmatrix_to_file(&m)).map_err(|e| e.to_string())?;
            std::fs::write(&out, text).map_err(|e| e.to_string())?;
            println!("wrote {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn matrix_line(m: &QMatrix) -> String {
    let rows: Vec<String> = (0..m.nrows())
        .map(|i| {
            let cells: Vec<String> = (0..m.ncols()).map(|j| m.at(i, j).to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn character_table(
    prof: &RMatrixProfile,
    rep_type: TypeFlag,
    k: usize,
    m_max: usize,
    sl: bool,
) -> Result<Vec<CharacterRow>, String> {
    let p = prof.p();
    let mut rows = Vec::new();
    let base = match rep_type {
        TypeFlag::B => b::tensor_power_b(prof, k),
        TypeFlag::R => {
            r::r_type_rep(prof, k, &LaurentRational::one()).map_err(|e| e.to_string())?
        }
    };
    for nu in partitions_of(k) {
        let t = &standard_tableaux(&nu)[0];
        let projected = match rep_type {
            TypeFlag::B => b::project_b(prof, &base, t).map_err(|e| e.to_string())?,
            TypeFlag::R => r::project_r(prof, &base, t).map_err(|e| e.to_string())?,
        };
        if projected.effective_dim() == 0 {
            continue;
        }
        let rep = if sl {
            match rep_type {
                TypeFlag::B => rea::rep::sl_reduce(&projected, prof).map_err(|e| e.to_string())?,
                TypeFlag::R => r::sl_reduce_r(&projected, prof).map_err(|e| e.to_string())?,
            }
        } else {
            projected
        };
        for m in 1..=m_max {
            let oracle = central_spectrum(&rep, m, prof)
                .ok_or_else(|| format!("non-scalar central element on {nu}"))?;
            let closed = closed_form(rep_type, sl, &nu, k, m, p);
            let matches = closed.as_ref().map(|c| c == &oracle);
            rows.push(CharacterRow {
                shape: nu.to_string(),
                m,
                closed_form: closed.map(|c| c.to_string()),
                oracle: oracle.to_string(),
                matches,
            });
        }
    }
    Ok(rows)
}

fn closed_form(
    rep_type: TypeFlag,
    sl: bool,
    nu: &Partition,
    k: usize,
    m: usize,
    p: usize,
) -> Option<LaurentRational> {
    let row = nu.is_single_row();
    let col = nu.is_single_column();
    match (rep_type, sl) {
        (TypeFlag::B, false) => {
            if m == 1 {
                Some(b::char_b_s1(nu, p))
            } else if row {
                Some(b::char_b_row(k, m, p))
            } else if col {
                b::char_b_col(k, m, p).ok()
            } else {
                None
            }
        }
        (TypeFlag::B, true) => {
            if row {
                b::sl_char_b(k, m, p, ShapeClass::Row).ok()
            } else if col {
                b::sl_char_b(k, m, p, ShapeClass::Col).ok()
            } else if m == 1 {
                Some(LaurentRational::zero())
            } else {
                None
            }
        }
        (TypeFlag::R, false) => {
            if m == 1 {
                Some(r::zeta_r_s1(nu, p))
            } else if row {
                r::char_r(k, m, p, ShapeClass::Row).ok()
            } else if col {
                r::char_r(k, m, p, ShapeClass::Col).ok()
            } else {
                None
            }
        }
        (TypeFlag::R, true) => {
            if row {
                r::sl_zeta_r(k, m, p, ShapeClass::Row).ok()
            } else if col {
                r::sl_zeta_r(k, m, p, ShapeClass::Col).ok()
            } else if m == 1 {
                Some(LaurentRational::zero())
            } else {
                None
            }
        }
    }
}
