//! `okd`: command-line front-end for the oriented Kauffman diagram engine.
//!
//! Words are written `"x,x*"` or `"x x*"` (case-insensitive, blank for the
//! unit). Output is canonical JSON on stdout (keys sorted, lists in
//! canonical order); diagnostics go to stderr. Exit codes: 0 for success or
//! a true verdict, 1 for a false verdict, 2 for usage or input errors.

use clap::{Parser, Subcommand, ValueEnum};
use okd::fiber::{
    evaluate, faithfulness_rank, fiber_equivalent, gauge_normalize, unitary_from_eigenvalues,
};
use okd::hopf::{classical_point_check, emit_relations, emit_unitary_relations};
use okd::json;
use okd::morphisms::{hom_dimension, jones_wenzl, simple_projector, Morphism};
use okd::scalars::{Field, FieldContext, Poly, Rat, RatFn, C64};
use okd::star::{cstar_params, gram_matrix, star, star_equivalent, star_params_valid, StarParams};
use okd::words::{homset_nonempty, Letter, Word};
use okd::{Error, OrientedDiagram};
use serde_json::{json, Value};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "okd",
    version,
    about = "Exact diagram calculus for oriented Kauffman categories",
    after_help = "WORD GRAMMAR:\n    comma- or space-separated letters `x` and `x*`, case-insensitive;\n    an empty string is the unit object. Example: \"x,x*,x\".\n\nSCALARS:\n    rational backend: \"p/q\" strings (e.g. --d 5/2);\n    complex backend: \"re\" or \"re,im\" (e.g. --d \"1.5,0\");\n    generic backend: rational constants or the symbol `d`."
)]
struct Cli {
    /// Coefficient field backend.
    #[arg(long, global = true, value_enum, default_value_t = FieldKind::Generic)]
    field: FieldKind,
    /// Loop parameter d (numeric backends; one-parameter mode).
    #[arg(long, global = true)]
    d: Option<String>,
    /// Left loop parameter d_L (numeric backends; with --dr).
    #[arg(long, global = true, requires = "dr", conflicts_with = "d")]
    dl: Option<String>,
    /// Right loop parameter d_R (numeric backends; with --dl).
    #[arg(long, global = true, requires = "dl", conflicts_with = "d")]
    dr: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldKind {
    /// Rational functions in d over the rationals (exact, symbolic).
    Generic,
    /// Exact rationals at a fixed numeric d.
    Rational,
    /// Complex doubles with 1e-9 tolerance.
    Complex,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all diagrams of type (W, W').
    Enum { w: String, w_prime: String },
    /// Dimension of the raw hom space: |K_{W,W'}|.
    Dim { w: String, w_prime: String },
    /// Compose two morphisms read from JSON files: F after G.
    Compose { f: PathBuf, g: PathBuf },
    /// Tensor two morphisms read from JSON files.
    Tensor { f: PathBuf, g: PathBuf },
    /// The N-th Jones-Wenzl idempotent.
    Jw {
        n: usize,
        /// Starting letter of the alternating word.
        #[arg(long, default_value = "x")]
        start: String,
    },
    /// The simple-object projector P_W.
    Project { w: String },
    /// Fusion product of the simples labeled W and W'.
    Fuse { w: String, w_prime: String },
    /// Multiplicities of the simples inside the tensor word X^W.
    Decompose { w: String },
    /// Exhaustive fusion-dimension consistency check up to a word length.
    OracleCheck { max_len: usize },
    /// Gram matrix of the cup basis of Hom(I, X^W) with a PSD verdict.
    Gram { w: String },
    /// Apply the *-operation with parameter c to a morphism file.
    StarApply {
        f: PathBuf,
        #[arg(long)]
        c: String,
    },
    /// Validate a *-structure parameter; with --c2, decide equivalence.
    StarCheck {
        #[arg(long)]
        c: String,
        #[arg(long)]
        c2: Option<String>,
    },
    /// Fiber functor operations.
    #[command(subcommand)]
    Fiber(FiberCommand),
    /// Hopf presentation emission and classical-point checks.
    #[command(subcommand)]
    Hopf(HopfCommand),
    /// Run the full acceptance suite; one line per criterion.
    Accept,
}

#[derive(Subcommand)]
enum FiberCommand {
    /// Validate a fiber bundle file {"a": [[..]], "b": [[..]]}.
    Validate { data: PathBuf },
    /// Evaluate a morphism file under a fiber bundle.
    Eval { data: PathBuf, f: PathBuf },
    /// Decide natural equivalence of two fiber bundles.
    Equiv { first: PathBuf, second: PathBuf },
    /// Build the unitary representative from a positive eigenvalue list.
    Unitary {
        /// Comma-separated positive rationals, e.g. "2,1/2".
        #[arg(long)]
        mu: String,
    },
    /// Faithfulness rank test at a word: rank vs |K_{W,I}|.
    Faithful { data: PathBuf, w: String },
}

#[derive(Subcommand)]
enum HopfCommand {
    /// Emit the general presentation of a fiber bundle.
    Emit { data: PathBuf },
    /// Emit the universal-unitary presentation of a unitary bundle.
    EmitUnitary { data: PathBuf },
    /// Check a classical point S against the emitted presentation.
    Check {
        data: PathBuf,
        #[arg(long)]
        point: PathBuf,
    },
}

/// Backend-specific scalar parsing for CLI arguments.
trait CliField: Field {
    fn parse_cli(s: &str) -> Result<Self, Error>;
}

impl CliField for Rat {
    fn parse_cli(s: &str) -> Result<Self, Error> {
        Rat::parse(s)
    }
}

impl CliField for RatFn {
    fn parse_cli(s: &str) -> Result<Self, Error> {
        if s.trim() == "d" {
            return Ok(RatFn::var());
        }
        Ok(RatFn::from_poly(Poly::constant(Rat::parse(s)?)))
    }
}

impl CliField for C64 {
    fn parse_cli(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let parse = |t: &str| -> Result<f64, Error> {
            t.parse::<f64>()
                .map_err(|_| Error::Parse(format!("invalid float `{t}`")))
        };
        match parts.as_slice() {
            [re] => Ok(C64::real(parse(re)?)),
            [re, im] => Ok(C64::new(parse(re)?, parse(im)?)),
            _ => Err(Error::Parse(format!("invalid complex scalar `{s}`"))),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn read_json(path: &Path) -> Result<Value, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("invalid JSON in {}: {e}", path.display())))
}

fn emit(v: &Value) -> u8 {
    println!("{}", serde_json::to_string(v).expect("serializable"));
    0
}

fn parse_word(s: &str) -> Result<Word, Error> {
    Word::parse(s)
}

fn run(cli: Cli) -> Result<u8, Error> {
    // field-independent commands first
    match &cli.command {
        Command::Enum { w, w_prime } => {
            let diagrams = OrientedDiagram::enumerate(&parse_word(w)?, &parse_word(w_prime)?);
            let out = Value::Array(diagrams.iter().map(json::diagram_to_json).collect());
            return Ok(emit(&out));
        }
        Command::Dim { w, w_prime } => {
            let dim = hom_dimension(&parse_word(w)?, &parse_word(w_prime)?);
            return Ok(emit(&json!(dim)));
        }
        Command::Fuse { w, w_prime } => {
            let (w, w2) = (parse_word(w)?, parse_word(w_prime)?);
            ensure_fusion_generic(&cli, w.len() + w2.len())?;
            return Ok(emit(&json::fusion_to_json(&okd::fusion::fuse(&w, &w2))));
        }
        Command::Decompose { w } => {
            let w = parse_word(w)?;
            ensure_fusion_generic(&cli, w.len())?;
            return Ok(emit(&json::fusion_to_json(&okd::fusion::decompose_word(&w))));
        }
        Command::OracleCheck { max_len } => {
            ensure_fusion_generic(&cli, 2 * max_len)?;
            let mut checked = 0usize;
            let mut ok = true;
            let words: Vec<Word> = (0..=*max_len)
                .flat_map(|len| {
                    (0..(1u32 << len)).map(move |bits| {
                        Word::from_letters(
                            (0..len)
                                .map(|i| {
                                    if bits >> i & 1 == 0 {
                                        Letter::X
                                    } else {
                                        Letter::Xstar
                                    }
                                })
                                .collect(),
                        )
                    })
                })
                .collect();
            'outer: for a in &words {
                for b in &words {
                    checked += 1;
                    if !okd::fusion::dimension_oracle_check(a, b) {
                        ok = false;
                        eprintln!("oracle failed at ({a}, {b})");
                        break 'outer;
                    }
                }
            }
            emit(&json!({"checked": checked, "ok": ok}));
            return Ok(u8::from(!ok));
        }
        Command::Accept => {
            let outcomes = okd::acceptance::run_all();
            let mut all_ok = true;
            for o in &outcomes {
                match &o.result {
                    Ok(()) => println!("criterion {:2} ({}): PASS", o.index, o.name),
                    Err(msg) => {
                        all_ok = false;
                        println!("criterion {:2} ({}): FAIL - {msg}", o.index, o.name);
                    }
                }
            }
            println!(
                "{}/{} criteria passed",
                outcomes.iter().filter(|o| o.passed()).count(),
                outcomes.len()
            );
            return Ok(u8::from(!all_ok));
        }
        _ => {}
    }

    // everything else is generic over the field backend
    match cli.field {
        FieldKind::Generic => {
            if cli.d.is_some() || cli.dl.is_some() {
                return Err(Error::Parse(
                    "--d/--dl/--dr apply to numeric backends only".into(),
                ));
            }
            dispatch::<RatFn>(FieldContext::generic(), cli.command)
        }
        FieldKind::Rational => dispatch::<Rat>(numeric_context::<Rat>(&cli)?, cli.command),
        FieldKind::Complex => dispatch::<C64>(numeric_context::<C64>(&cli)?, cli.command),
    }
}

fn numeric_context<K: CliField>(cli: &Cli) -> Result<FieldContext<K>, Error> {
    match (&cli.d, &cli.dl, &cli.dr) {
        (Some(d), None, None) => FieldContext::one_param(K::parse_cli(d)?),
        (None, Some(dl), Some(dr)) => {
            FieldContext::two_param(K::parse_cli(dl)?, K::parse_cli(dr)?)
        }
        (None, None, None) => Err(Error::Parse(
            "numeric backends require --d or --dl/--dr".into(),
        )),
        _ => Err(Error::Parse("give either --d or both --dl and --dr".into())),
    }
}

/// Fusion commands assume genericity; numeric backends are checked up to
/// the relevant level before running.
fn ensure_fusion_generic(cli: &Cli, level: usize) -> Result<(), Error> {
    let level = level.max(2) as u32;
    match cli.field {
        FieldKind::Generic => Ok(()),
        FieldKind::Rational => {
            let ctx = numeric_context::<Rat>(cli)?;
            okd::scalars::ensure_generic(&ctx, level)
        }
        FieldKind::Complex => {
            let ctx = numeric_context::<C64>(cli)?;
            okd::scalars::ensure_generic(&ctx, level)
        }
    }
}

fn parse_start(s: &str) -> Result<Letter, Error> {
    Letter::parse(s)
}

fn dispatch<K: CliField>(ctx: FieldContext<K>, cmd: Command) -> Result<u8, Error> {
    match cmd {
        Command::Compose { f, g } => {
            let fm = json::morphism_from_json::<K>(&read_json(&f)?)?;
            let gm = json::morphism_from_json::<K>(&read_json(&g)?)?;
            let out = fm.compose(&gm, &ctx)?;
            Ok(emit(&json::morphism_to_json(&out)))
        }
        Command::Tensor { f, g } => {
            let fm = json::morphism_from_json::<K>(&read_json(&f)?)?;
            let gm = json::morphism_from_json::<K>(&read_json(&g)?)?;
            Ok(emit(&json::morphism_to_json(&fm.tensor(&gm))))
        }
        Command::Jw { n, start } => {
            let f = jones_wenzl::<K>(n, parse_start(&start)?, &ctx)?;
            Ok(emit(&json::morphism_to_json(&f)))
        }
        Command::Project { w } => {
            let p = simple_projector::<K>(&parse_word(&w)?, &ctx)?;
            Ok(emit(&json::morphism_to_json(&p)))
        }
        Command::Gram { w } => {
            let word = parse_word(&w)?;
            let g = gram_matrix::<K>(&word, &ctx)?;
            let verdict = okd::linalg::psd_verdict(&g)?;
            let out = json!({
                "matrix": json::matrix_to_json(&g),
                "psd": verdict.is_psd(),
                "verdict": format!("{verdict:?}"),
            });
            emit(&out);
            Ok(u8::from(!verdict.is_psd()))
        }
        Command::StarApply { f, c } => {
            let fm = json::morphism_from_json::<K>(&read_json(&f)?)?;
            let params = StarParams::new(K::parse_cli(&c)?, ctx)?;
            Ok(emit(&json::morphism_to_json(&star(&fm, &params)?)))
        }
        Command::StarCheck { c, c2 } => {
            let c = K::parse_cli(&c)?;
            let valid = star_params_valid(&c, &ctx);
            match c2 {
                None => {
                    emit(&json!({"valid": valid}));
                    Ok(u8::from(!valid))
                }
                Some(c2) => {
                    let c2 = K::parse_cli(&c2)?;
                    let valid2 = star_params_valid(&c2, &ctx);
                    let equivalent = valid && valid2 && star_equivalent(&c, &c2)?;
                    emit(&json!({
                        "valid": valid,
                        "valid2": valid2,
                        "equivalent": equivalent,
                    }));
                    Ok(u8::from(!equivalent))
                }
            }
        }
        Command::Fiber(sub) => dispatch_fiber::<K>(ctx, sub),
        Command::Hopf(sub) => dispatch_hopf::<K>(ctx, sub),
        _ => unreachable!("field-independent commands handled earlier"),
    }
}

fn dispatch_fiber<K: CliField>(ctx: FieldContext<K>, cmd: FiberCommand) -> Result<u8, Error> {
    match cmd {
        FiberCommand::Validate { data } => {
            let fd = json::fiber_from_json::<K>(&read_json(&data)?, &ctx)?;
            let normalized = gauge_normalize(&fd);
            Ok(emit(&json!({
                "valid": true,
                "n": fd.n(),
                "normalized_b": json::matrix_to_json(normalized.b()),
            })))
        }
        FiberCommand::Eval { data, f } => {
            let fd = json::fiber_from_json::<K>(&read_json(&data)?, &ctx)?;
            let fm = json::morphism_from_json::<K>(&read_json(&f)?)?;
            Ok(emit(&json::tensor_to_json(&evaluate(&fm, &fd))))
        }
        FiberCommand::Equiv { first, second } => {
            let f1 = json::fiber_from_json::<K>(&read_json(&first)?, &ctx)?;
            let f2 = json::fiber_from_json::<K>(&read_json(&second)?, &ctx)?;
            let eq = fiber_equivalent(&f1, &f2)?;
            emit(&json!({"equivalent": eq}));
            Ok(u8::from(!eq))
        }
        FiberCommand::Unitary { mu } => {
            let eigs = mu
                .split(',')
                .map(|t| K::parse_cli(t.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            let fd = unitary_from_eigenvalues(&eigs, &ctx)?;
            Ok(emit(&json::fiber_to_json(&fd)))
        }
        FiberCommand::Faithful { data, w } => {
            let fd = json::fiber_from_json::<K>(&read_json(&data)?, &ctx)?;
            let word = parse_word(&w)?;
            let (rank, expected) = faithfulness_rank(&word, &fd);
            emit(&json!({"rank": rank, "expected": expected, "faithful": rank == expected}));
            Ok(u8::from(rank != expected))
        }
    }
}

fn dispatch_hopf<K: CliField>(ctx: FieldContext<K>, cmd: HopfCommand) -> Result<u8, Error> {
    match cmd {
        HopfCommand::Emit { data } => {
            let fd = json::fiber_from_json::<K>(&read_json(&data)?, &ctx)?;
            Ok(emit(&json::relation_set_to_json(&emit_relations(&fd))))
        }
        HopfCommand::EmitUnitary { data } => {
            let fd = json::fiber_from_json::<K>(&read_json(&data)?, &ctx)?;
            Ok(emit(&json::relation_set_to_json(&emit_unitary_relations(
                &fd,
            )?)))
        }
        HopfCommand::Check { data, point } => {
            let fd = json::fiber_from_json::<K>(&read_json(&data)?, &ctx)?;
            let s = json::matrix_from_json::<K>(&read_json(&point)?)?;
            let rs = emit_relations(&fd);
            let holds = classical_point_check(&rs, &s)?;
            emit(&json!({"holds": holds}));
            Ok(u8::from(!holds))
        }
    }
}
