//! Command-line front end.
//!
//! Exit codes: 0 when every check passes or the verdict is true, 1 when a
//! check fails or the verdict is false, 2 for malformed input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::affine::{
    check_words, enumerate_words, fixed_point_check, wolf_check, GroupSpec, WolfReport,
    DEFAULT_WORD_CAP,
};
use crate::centralizer::{centralizer_algebra, orbit_dimension};
use crate::certify::{
    translational_isotropy_certificate_with, verify_certificate, IsotropyCertificate,
};
use crate::error::{Error, Result};
use crate::holonomy::{abelian_report_with, block_form, index_witness, u_zero};
use crate::io::{load_group_spec, matrix_to_q, vector_to_q, GroupSpecFile, SCHEMA_VERSION};
use crate::linalg::{format_scalar, parse_scalar, zero_vector, Vector};
use crate::search::search_nonabelian;

#[derive(Parser, Debug)]
#[command(
    name = "flathol",
    version,
    about = "Exact checks on affine holonomy of flat pseudo-Riemannian spaces"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Longest word examined when enumerating group elements.
    #[arg(long, global = true, default_value_t = 4)]
    max_word_length: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Wolf conditions on every generator and every word.
    Check { file: PathBuf },
    /// Holonomy subspaces and the abelianness criteria.
    Report { file: PathBuf },
    /// Witt-adapted basis for U_0.
    Witt { file: PathBuf },
    /// Block decomposition of each generator in the adapted basis.
    Blockform { file: PathBuf },
    /// Orbit dimension of the centralizer at a point.
    Orbit {
        file: PathBuf,
        /// Comma-separated rational coordinates; defaults to the origin.
        #[arg(long)]
        point: Option<String>,
    },
    /// Fixed points of non-identity words.
    Free { file: PathBuf },
    /// Writes `<stem>.cert.json` next to the input.
    Certify { file: PathBuf },
    /// Re-checks a certificate from scratch.
    Verify { cert: PathBuf },
    /// Random search for non-abelian holonomy in one signature.
    Scan {
        #[arg(long, value_parser = parse_signature)]
        signature: (usize, usize),
        #[arg(long)]
        budget: usize,
        #[arg(long)]
        seed: u64,
        /// Directory receiving one group-spec file per survivor.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_signature(text: &str) -> std::result::Result<(usize, usize), String> {
    let (p, s) = text.split_once(',').ok_or("expected P,S")?;
    let p = p.trim().parse().map_err(|_| format!("bad P in {text:?}"))?;
    let s = s.trim().parse().map_err(|_| format!("bad S in {text:?}"))?;
    if p + s == 0 {
        return Err("signature (0,0) is empty".into());
    }
    Ok((p, s))
}

fn parse_point(text: &str, n: usize) -> Result<Vector> {
    let point = text
        .split(',')
        .map(|t| parse_scalar(t.trim()))
        .collect::<Result<Vector>>()?;
    if point.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: point.len(),
        });
    }
    Ok(point)
}

fn show(v: &[crate::linalg::Scalar]) -> String {
    format!(
        "({})",
        v.iter().map(format_scalar).collect::<Vec<_>>().join(",")
    )
}

/// Exit status for an error surfaced by a command.
fn error_code(e: &Error) -> i32 {
    match e {
        Error::Precondition(_)
        | Error::CriteriaDisagree { .. }
        | Error::Witness(_)
        | Error::Infeasible(_)
        | Error::NotTotallyIsotropic
        | Error::WordBudgetExceeded(_) => 1,
        _ => 2,
    }
}

/// Parses `args` (program name first) and runs the command on the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
    }
}

fn emit(out: &mut dyn Write, value: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let l = cli.max_word_length;
    match &cli.command {
        Command::Check { file } => check(&load_group_spec(file)?, l, cli.json, out),
        Command::Report { file } => report(&load_group_spec(file)?, l, cli.json, out),
        Command::Witt { file } => witt(&load_group_spec(file)?, cli.json, out),
        Command::Blockform { file } => blockform(&load_group_spec(file)?, cli.json, out),
        Command::Orbit { file, point } => {
            orbit(&load_group_spec(file)?, point.as_deref(), cli.json, out)
        }
        Command::Free { file } => free(&load_group_spec(file)?, l, cli.json, out),
        Command::Certify { file } => certify(file, l, cli.json, out),
        Command::Verify { cert } => verify(cert, cli.json, out),
        Command::Scan {
            signature,
            budget,
            seed,
            out: dir,
        } => scan(*signature, *budget, *seed, dir.as_deref(), cli.json, out),
    }
}

fn wolf_json(report: &WolfReport) -> Value {
    Value::Array(
        report
            .outcomes
            .iter()
            .map(|o| {
                json!({
                    "condition": o.condition.label(),
                    "passed": o.passed,
                    "witness": o.witness.as_ref().map(ToString::to_string),
                })
            })
            .collect(),
    )
}

fn write_wolf_table(out: &mut dyn Write, report: &WolfReport) -> Result<()> {
    for o in &report.outcomes {
        let mark = if o.passed { "ok  " } else { "FAIL" };
        match &o.witness {
            Some(w) => writeln!(out, "  {mark} {:<28} {w}", o.condition.label())?,
            None => writeln!(out, "  {mark} {}", o.condition.label())?,
        }
    }
    Ok(())
}

fn check(spec: &GroupSpec, l: usize, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let generators: Vec<WolfReport> = spec.generators().iter().map(wolf_check).collect();
    let words = check_words(spec, l)?;
    let failed_words: Vec<&(String, WolfReport)> =
        words.iter().filter(|(_, r)| !r.passed()).collect();
    let passed = generators.iter().all(WolfReport::passed) && failed_words.is_empty();
    if as_json {
        emit(
            out,
            &json!({
                "schema": SCHEMA_VERSION,
                "name": spec.name(),
                "generators": generators.iter().map(wolf_json).collect::<Vec<_>>(),
                "max_word_length": l,
                "words_checked": words.len(),
                "failed_words": failed_words.iter().map(|(w, r)| json!({"word": w, "conditions": wolf_json(r)})).collect::<Vec<_>>(),
                "passed": passed,
            }),
        )?;
    } else {
        writeln!(
            out,
            "{}: {} generator(s), signature {:?}",
            spec.name(),
            generators.len(),
            spec.form().signature()
        )?;
        for (i, r) in generators.iter().enumerate() {
            writeln!(out, "g{}:", i + 1)?;
            write_wolf_table(out, r)?;
        }
        writeln!(
            out,
            "words up to length {l}: {} checked, {} failed",
            words.len(),
            failed_words.len()
        )?;
        for (w, r) in failed_words.iter().take(5) {
            writeln!(out, "{w}:")?;
            write_wolf_table(out, r)?;
        }
        writeln!(out, "{}", if passed { "PASS" } else { "FAIL" })?;
    }
    Ok(if passed { 0 } else { 1 })
}

fn report(spec: &GroupSpec, l: usize, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let r = abelian_report_with(spec, l)?;
    if as_json {
        let mut value = r.to_json(spec);
        if let Some(w) = index_witness(spec, &r)? {
            value["isotropic_witness"] = w.to_json();
        }
        emit(out, &value)?;
    } else {
        writeln!(
            out,
            "{} (signature {:?})",
            spec.name(),
            spec.form().signature()
        )?;
        writeln!(out, "U_Gamma      = {}", r.u_gamma)?;
        writeln!(out, "U_Gamma^perp = {}", r.u_gamma_perp)?;
        writeln!(out, "U_0          = {}", r.u_zero)?;
        let c = r.criteria;
        writeln!(
            out,
            "linear parts of words (length <= {l}) commute: {}",
            c.commuting_linear_parts
        )?;
        writeln!(out, "A_i A_j = 0 for all pairs: {}", c.products_vanish)?;
        writeln!(out, "U_Gamma totally isotropic: {}", c.u_gamma_isotropic)?;
        writeln!(out, "U_0 = U_Gamma: {}", c.u_zero_is_u_gamma)?;
        writeln!(
            out,
            "linear holonomy: {}",
            if r.abelian { "abelian" } else { "non-abelian" }
        )?;
        if let Some((i, j)) = r.product_witness {
            writeln!(out, "nonzero product: A_{} A_{}", i + 1, j + 1)?;
        }
        if let Some(w) = index_witness(spec, &r)? {
            writeln!(
                out,
                "totally isotropic subspace of dim {}: {}",
                w.dim, w.subspace
            )?;
        }
    }
    Ok(0)
}

fn witt(spec: &GroupSpec, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let u0 = u_zero(spec);
    let basis = spec.form().witt_extend(&u0)?;
    if as_json {
        emit(
            out,
            &json!({
                "schema": SCHEMA_VERSION,
                "name": spec.name(),
                "k": basis.k(),
                "w_dim": basis.w_dim(),
                "change_of_basis": matrix_to_q(basis.change_of_basis()),
                "i_tilde": matrix_to_q(basis.i_tilde()),
                "adapted_gram": matrix_to_q(&basis.adapted_gram()),
            }),
        )?;
    } else {
        writeln!(out, "U_0 = {u0}")?;
        writeln!(out, "k = {}, dim W_0 = {}", basis.k(), basis.w_dim())?;
        writeln!(
            out,
            "basis (columns U_0 | W_0 | U_0*):\n{}",
            basis.change_of_basis()
        )?;
        writeln!(out, "I~ =\n{}", basis.i_tilde())?;
        writeln!(out, "adapted Gram =\n{}", basis.adapted_gram())?;
    }
    Ok(0)
}

fn blockform(spec: &GroupSpec, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let blocks = spec
        .generators()
        .iter()
        .map(|g| block_form(spec, g))
        .collect::<Result<Vec<_>>>()?;
    let ok = blocks.iter().all(|b| b.all_ok());
    if as_json {
        emit(
            out,
            &json!({
                "schema": SCHEMA_VERSION,
                "name": spec.name(),
                "generators": blocks.iter().map(|b| b.to_json()).collect::<Vec<_>>(),
                "passed": ok,
            }),
        )?;
    } else {
        for (i, b) in blocks.iter().enumerate() {
            writeln!(
                out,
                "g{}: k = {}, dim W_0 = {}",
                i + 1,
                b.witt.k(),
                b.witt.w_dim()
            )?;
            writeln!(out, "C =\n{}B =\n{}", b.c_block, b.b_block)?;
            writeln!(
                out,
                "zero pattern {}, coupling {}, C skew {}, B columns isotropic {}",
                b.zero_pattern_ok, b.coupling_ok, b.c_skew_ok, b.b_columns_ok
            )?;
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn orbit(spec: &GroupSpec, point: Option<&str>, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let n = spec.dim();
    let p = match point {
        Some(text) => parse_point(text, n)?,
        None => zero_vector(n),
    };
    let algebra = centralizer_algebra(spec);
    let dim = orbit_dimension(&algebra, &p);
    let open = dim == n;
    if as_json {
        emit(
            out,
            &json!({
                "schema": SCHEMA_VERSION,
                "name": spec.name(),
                "point": vector_to_q(&p),
                "algebra_dim": algebra.dim(),
                "orbit_dim": dim,
                "open": open,
            }),
        )?;
    } else {
        writeln!(
            out,
            "centralizer algebra dim {}, orbit dim at {} = {dim} of {n}",
            algebra.dim(),
            show(&p)
        )?;
        if !open {
            writeln!(out, "identity component orbit not open at p")?;
        }
    }
    Ok(if open { 0 } else { 1 })
}

fn free(spec: &GroupSpec, l: usize, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let words = enumerate_words(spec, l, DEFAULT_WORD_CAP)?;
    let fixed: Vec<(String, Vector)> = words
        .iter()
        .filter(|w| !w.element.is_identity())
        .filter_map(|w| fixed_point_check(&w.element).map(|x| (w.label(), x)))
        .collect();
    let checked = words.iter().filter(|w| !w.element.is_identity()).count();
    if as_json {
        emit(
            out,
            &json!({
                "schema": SCHEMA_VERSION,
                "name": spec.name(),
                "max_word_length": l,
                "words_checked": checked,
                "fixed_points": fixed.iter().map(|(w, x)| json!({"word": w, "point": vector_to_q(x)})).collect::<Vec<_>>(),
                "free": fixed.is_empty(),
            }),
        )?;
    } else {
        writeln!(out, "{checked} non-identity words up to length {l}")?;
        for (w, x) in fixed.iter().take(5) {
            writeln!(out, "{w} fixes {}", show(x))?;
        }
        if fixed.is_empty() {
            writeln!(
                out,
                "no fixed points; freeness verified up to word length {l}"
            )?;
        } else {
            writeln!(out, "action not free")?;
        }
    }
    Ok(if fixed.is_empty() { 0 } else { 1 })
}

/// `dir/stem.json` becomes `dir/stem.cert.json`.
pub fn certificate_path(input: &Path) -> PathBuf {
    let stem = input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    input.with_file_name(format!("{stem}.cert.json"))
}

fn certify(file: &Path, l: usize, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let spec = load_group_spec(file)?;
    let cert = translational_isotropy_certificate_with(&spec, l)?;
    let text = cert.to_json();
    let path = certificate_path(file);
    std::fs::write(&path, &text)?;
    if as_json {
        write!(out, "{text}")?;
    } else {
        writeln!(out, "{}: {}", spec.name(), cert.status)?;
        for step in &cert.chain {
            writeln!(
                out,
                "  ({}) {} [{}]",
                step.id,
                step.claim,
                if step.verified {
                    "verified"
                } else {
                    "not verified"
                }
            )?;
        }
        if let Some(c) = &cert.failing_criterion {
            writeln!(out, "failing criterion: {c}")?;
        }
        writeln!(out, "written to {}", path.display())?;
    }
    Ok(if cert.verdict { 0 } else { 1 })
}

fn verify(path: &Path, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let cert = IsotropyCertificate::load(path).map_err(|e| match e {
        Error::Io(_) | Error::MalformedCertificate(_) => e,
        other => Error::MalformedCertificate(other.to_string()),
    })?;
    let valid = verify_certificate(&cert)?;
    if as_json {
        emit(
            out,
            &json!({"schema": SCHEMA_VERSION, "valid": valid, "verdict": cert.verdict, "status": cert.status}),
        )?;
    } else {
        writeln!(
            out,
            "certificate {}; verdict {} ({})",
            if valid { "valid" } else { "INVALID" },
            cert.verdict,
            cert.status
        )?;
    }
    Ok(if valid && cert.verdict { 0 } else { 1 })
}

fn scan(
    signature: (usize, usize),
    budget: usize,
    seed: u64,
    dir: Option<&Path>,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let r = search_nonabelian(signature, budget, seed)?;
    if let Some(dir) = dir {
        std::fs::create_dir_all(dir)?;
        for spec in &r.found {
            std::fs::write(
                dir.join(format!("{}.json", spec.name())),
                GroupSpecFile::from_group_spec(spec).to_json(),
            )?;
        }
    }
    if as_json {
        emit(out, &r.to_json())?;
    } else {
        let st = r.stats;
        writeln!(
            out,
            "signature ({}, {}), budget {budget}, seed {seed}",
            signature.0, signature.1
        )?;
        writeln!(
            out,
            "abelian {}, generator failed {}, word failed {}, orbit not open {}, survivors {}",
            st.abelian,
            st.generator_wolf_failed,
            st.word_wolf_failed,
            st.orbit_not_open,
            st.survivors
        )?;
        for (spec, t) in r.found.iter().zip(&r.found_trials) {
            writeln!(out, "survivor at trial {t}: {}", spec.name())?;
        }
    }
    let violation = signature.1 <= 3 && !r.found.is_empty();
    Ok(if violation { 1 } else { 0 })
}
