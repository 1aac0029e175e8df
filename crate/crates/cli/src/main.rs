//! Command-line frontend: every library operation behind a subcommand,
//! JSON in and out, plus the named-case verification runner.
//!
//! Exit codes: 0 success, 1 invalid input, 2 infeasible or absent result,
//! 3 internal assertion failure (including failed verification cases).

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde_json::{json, Value};

use seifcalc_core::arith::{int, rat_int, Integer, Rational};
use seifcalc_core::cuspidal::{
    blowup_pair, classify_mpqm, compare_bounds, cusp_invariants, dual_pair, family_catalog,
    fillability_verdict, m_bound, verify_catalog_entry, BoundComparison, CuspContact,
    Fillability, Manifold, SurgeryCase,
};
use seifcalc_core::handles::{
    area_ratio_interval, canonical_pairing_page, canonical_pairing_seifert, cobordism_report,
    page_class_self_intersection, AttachmentPlan, CobordismReport,
};
use seifcalc_core::openbook::{
    dagger_enumerate, dagger_solve, open_book_multi, open_book_single, ContactType, Orientation,
    RationalOpenBook,
};
use seifcalc_core::plumbing::{
    cusp_resolution_graph, figure_one, form_class, graph_determinant, intersection_matrix,
    limak_solve, seifert_to_star, star_to_seifert, Definiteness, LimakOutcome, PlumbingGraph,
};
use seifcalc_core::scenarios;
use seifcalc_core::seifert::{LensSpace, SeifertData, Verdict};
use seifcalc_core::wire::{
    int_to_i64, rational_from_str, rational_to_string, seifert_from_arg, AbelianGroupDto,
    NormalFormDto, OpenBookSpecDto, PlumbingGraphDto, SeifertDataDto,
};
use seifcalc_core::{Error, ErrorClass};

#[derive(Parser)]
#[command(
    name = "seifcalc",
    version,
    about = "Exact Seifert, open-book, and cuspidal-curve calculus",
    allow_negative_numbers = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Read the JSON payload from stdin instead of an argument (`--input -`).
    #[arg(long, global = true)]
    input: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Seifert-invariant operations.
    #[command(subcommand)]
    Seifert(SeifertCmd),
    /// Rational open books with periodic monodromy.
    #[command(subcommand)]
    Openbook(OpenbookCmd),
    /// Symplectic 2-handle attachment bookkeeping.
    #[command(subcommand)]
    Cobordism(CobordismCmd),
    /// Unicuspidal-curve arithmetic.
    #[command(subcommand)]
    Cusp(CuspCmd),
    /// Plumbing-graph calculus.
    #[command(subcommand)]
    Plumbing(PlumbingCmd),
    /// Run the named verification cases.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum SeifertCmd {
    /// Euler number of the fibration.
    Euler {
        #[arg(allow_hyphen_values = true)]
        data: Option<String>,
    },
    /// Background integer `sum floor(-beta/alpha)`.
    E0 {
        #[arg(allow_hyphen_values = true)]
        data: Option<String>,
    },
    /// Normal form with `(1, b)` split off.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        data: Option<String>,
    },
    /// First homology.
    H1 {
        #[arg(allow_hyphen_values = true)]
        data: Option<String>,
    },
    /// Orientation-preserving comparison of two data sets.
    Equal {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Lens-space recognition from at most two exceptional fibers.
    Lens {
        #[arg(allow_hyphen_values = true)]
        data: Option<String>,
    },
    /// Order of a fiber class (or the regular class) in first homology.
    FiberOrder {
        #[arg(allow_hyphen_values = true)]
        data: Option<String>,
        /// Index of the fiber; omit for the regular class.
        #[arg(long)]
        fiber: Option<usize>,
    },
    /// Tightness verdict for an invariant contact structure with the
    /// dividing circle around the given fiber.
    Verdict {
        #[arg(allow_hyphen_values = true)]
        data: Option<String>,
        #[arg(long, default_value_t = 0)]
        dividing: usize,
        #[arg(long)]
        fixed_points: bool,
    },
    /// Slope in the basis of a fiber pair: `(b' s - a')/(b s + a)`.
    Slope {
        #[arg(allow_negative_numbers = true)]
        alpha: i64,
        #[arg(allow_negative_numbers = true)]
        beta: i64,
        #[arg(allow_negative_numbers = true)]
        alpha_dual: i64,
        #[arg(allow_negative_numbers = true)]
        beta_dual: i64,
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Admissibility comparison of a surgery coefficient against the
    /// dividing slope.
    Admissible {
        #[arg(allow_negative_numbers = true)]
        alpha1: i64,
        #[arg(allow_negative_numbers = true)]
        beta1: i64,
        #[arg(allow_negative_numbers = true)]
        alpha1_dual: i64,
        #[arg(allow_negative_numbers = true)]
        beta1_dual: i64,
        #[arg(allow_negative_numbers = true)]
        alpha2: i64,
        #[arg(allow_negative_numbers = true)]
        beta2: i64,
    },
}

#[derive(Subcommand)]
enum OpenbookCmd {
    /// Isotropy weights with integral sum for the given orders.
    SolveDagger {
        /// Comma-separated orders, e.g. `2,3,6`.
        orders: String,
        /// Enumerate all solutions instead of the first.
        #[arg(long)]
        all: bool,
    },
    /// Build an open book from a full specification (JSON).
    Build { spec: Option<String> },
    /// Connected-binding feasibility for one distinguished fiber.
    Single { spec: Option<String> },
    /// Reconstruct the Seifert manifold from monodromy data (JSON).
    FromMonodromy { spec: Option<String> },
}

#[derive(Subcommand)]
enum CobordismCmd {
    /// Attach one 2-handle per binding: full report (JSON payload
    /// `{"openbook": ..., "targets": [...], "slopes": [...]}`).
    Attach { plan: Option<String> },
    /// Framing and companion coefficient for one target multiplicity.
    Framing {
        #[arg(long, allow_negative_numbers = true)]
        alpha: i64,
        #[arg(long, allow_negative_numbers = true)]
        beta: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        target: i64,
    },
    /// Canonical pairing, from page data (`--chi`, `--bindings p,F;...`)
    /// or boundary data (`--n`, `--bindings a,abar,p;...`, `--interior`).
    Pairing {
        #[arg(long, allow_negative_numbers = true)]
        chi: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        bindings: String,
        #[arg(long, default_value = "")]
        interior: String,
    },
    /// Self-intersection of the closed-up page class.
    SelfInt {
        #[arg(long)]
        n: i64,
        /// Triples `alpha,abar,p` separated by `;`.
        #[arg(long, allow_hyphen_values = true)]
        bindings: String,
    },
    /// Achievable area-ratio interval for a two-binding plan.
    AreaRatio {
        #[arg(long, allow_negative_numbers = true)]
        alpha1: i64,
        #[arg(long, allow_negative_numbers = true)]
        abar1: i64,
        #[arg(long, allow_negative_numbers = true)]
        alpha2: i64,
        #[arg(long, allow_negative_numbers = true)]
        abar2: i64,
        #[arg(long)]
        total: String,
    },
}

#[derive(Subcommand)]
enum CuspCmd {
    /// Self-intersection bound for the pair.
    Bound { p: i64, q: i64 },
    /// Dual pair and blow-up transform.
    Dual { p: i64, q: i64 },
    /// Multiplicity sequence, sum of squares, and the competing bound.
    Invariants { p: i64, q: i64 },
    /// Classify the surgered boundary manifold.
    Classify { p: i64, q: i64, m: i64 },
    /// Fillability regime of the invariant structure.
    Fillable { p: i64, q: i64, m: i64 },
    /// Materialize and verify the curve-family catalog.
    Catalog {
        #[arg(long, default_value_t = 16)]
        max_d: i64,
        #[arg(long, default_value_t = 11)]
        max_j: i64,
    },
}

#[derive(Subcommand)]
enum PlumbingCmd {
    /// Intersection matrix of a graph.
    Matrix {
        #[arg(long)]
        graph: Option<String>,
    },
    /// Determinant and definiteness of the intersection form.
    Form {
        #[arg(long)]
        graph: Option<String>,
    },
    /// Positive-solution test `Q z = a`.
    Limak {
        #[arg(long)]
        graph: Option<String>,
        /// Comma-separated right-hand side.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Reversed boundary of a star plumbing as Seifert data.
    Star {
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, default_value_t = 0)]
        center: usize,
    },
    /// Star graph of normalized Seifert data.
    FromSeifert {
        #[arg(allow_hyphen_values = true)]
        data: Option<String>,
    },
    /// Minimal resolution graph of a one-Puiseux-pair cusp curve.
    Resolve { p: i64, q: i64, m: i64 },
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single named case.
    #[arg(long, conflicts_with = "all")]
    case: Option<String>,
    /// Run every case.
    #[arg(long)]
    all: bool,
    /// Run cases concurrently.
    #[arg(long)]
    parallel: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdin_payload = match read_stdin(&cli) {
        Ok(v) => v,
        Err(code) => return code,
    };
    match dispatch(&cli.command, stdin_payload) {
        Ok(Output { value, code }) => {
            let rendered = match cli.format {
                Format::Json => value.to_string(),
                Format::Pretty => serde_json::to_string_pretty(&value).expect("serializable"),
            };
            println!("{rendered}");
            code
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err.class() {
                ErrorClass::InvalidInput => ExitCode::from(1),
                ErrorClass::Infeasible => ExitCode::from(2),
                ErrorClass::Internal => ExitCode::from(3),
            }
        }
    }
}

fn read_stdin(cli: &Cli) -> Result<Option<String>, ExitCode> {
    match cli.input.as_deref() {
        None => Ok(None),
        Some("-") => {
            let mut buf = String::new();
            if std::io::stdin().read_to_string(&mut buf).is_err() {
                eprintln!("error: cannot read stdin");
                return Err(ExitCode::from(1));
            }
            Ok(Some(buf))
        }
        Some(path) => match std::fs::read_to_string(path) {
            Ok(buf) => Ok(Some(buf)),
            Err(e) => {
                eprintln!("error: cannot read {path}: {e}");
                Err(ExitCode::from(1))
            }
        },
    }
}

struct Output {
    value: Value,
    code: ExitCode,
}

impl Output {
    fn ok(value: Value) -> Result<Output, Error> {
        Ok(Output { value, code: ExitCode::SUCCESS })
    }

    fn with_code(value: Value, code: u8) -> Result<Output, Error> {
        Ok(Output { value, code: ExitCode::from(code) })
    }
}

fn payload(arg: &Option<String>, stdin: Option<String>) -> Result<String, Error> {
    match (arg, stdin) {
        (Some(_), Some(_)) => {
            Err(Error::Precondition("give the payload either inline or via --input".into()))
        }
        (Some(v), None) => Ok(v.clone()),
        (None, Some(v)) => Ok(v),
        (None, None) => Err(Error::Precondition("missing input payload".into())),
    }
}

fn dispatch(command: &Command, stdin: Option<String>) -> Result<Output, Error> {
    match command {
        Command::Seifert(cmd) => run_seifert(cmd, stdin),
        Command::Openbook(cmd) => run_openbook(cmd, stdin),
        Command::Cobordism(cmd) => run_cobordism(cmd, stdin),
        Command::Cusp(cmd) => run_cusp(cmd),
        Command::Plumbing(cmd) => run_plumbing(cmd, stdin),
        Command::Verify(args) => run_verify(args),
    }
}

fn seifert_arg(data: &Option<String>, stdin: Option<String>) -> Result<SeifertData, Error> {
    seifert_from_arg(&payload(data, stdin)?)
}

fn lens_json(lens: &LensSpace) -> Result<Value, Error> {
    Ok(match lens {
        LensSpace::Lens(a, b) => json!({"a": int_to_i64(a)?, "b": int_to_i64(b)?}),
        LensSpace::S2xS1 => json!({"s2xs1": true}),
    })
}

fn run_seifert(cmd: &SeifertCmd, stdin: Option<String>) -> Result<Output, Error> {
    match cmd {
        SeifertCmd::Euler { data } => {
            let e = seifert_arg(data, stdin)?.euler_number()?;
            Output::ok(json!(rational_to_string(&e)))
        }
        SeifertCmd::E0 { data } => {
            let v = seifert_arg(data, stdin)?.e0()?;
            Output::ok(json!(int_to_i64(&v)?))
        }
        SeifertCmd::Normalize { data } => {
            let n = seifert_arg(data, stdin)?.normalize()?;
            Output::ok(serde_json::to_value(NormalFormDto::from_core(&n)?).expect("dto"))
        }
        SeifertCmd::H1 { data } => {
            let g = seifert_arg(data, stdin)?.h1()?;
            Output::ok(serde_json::to_value(AbelianGroupDto::from_core(&g)?).expect("dto"))
        }
        SeifertCmd::Equal { first, second } => {
            let a = seifert_from_arg(first)?;
            let b = seifert_from_arg(second)?;
            Output::ok(json!({"equal": a.same_seifert(&b)?}))
        }
        SeifertCmd::Lens { data } => {
            let lens = seifert_arg(data, stdin)?.lens_from_two_fibers()?;
            Output::ok(lens_json(&lens)?)
        }
        SeifertCmd::FiberOrder { data, fiber } => {
            let class = match fiber {
                Some(i) => seifcalc_core::seifert::FiberClass::Exceptional(*i),
                None => seifcalc_core::seifert::FiberClass::Regular,
            };
            let order = seifert_arg(data, stdin)?.fiber_class_order(class)?;
            Output::ok(json!(int_to_i64(&order)?))
        }
        SeifertCmd::Verdict { data, dividing, fixed_points } => {
            let verdict = seifert_arg(data, stdin)?.tightness_verdict(*dividing, *fixed_points)?;
            let name = match verdict.verdict {
                Verdict::UniversallyTight => "universally-tight",
                Verdict::TightFillable => "tight-fillable",
                Verdict::Overtwisted => "overtwisted",
                Verdict::Unknown => "unknown",
            };
            let rule = verdict.rule.map(|r| match r {
                seifcalc_core::seifert::Rule::OvertwistObstruction => "overtwist-obstruction",
                seifcalc_core::seifert::Rule::TwoFiberPositiveEuler => "two-fiber-positive-euler",
                seifcalc_core::seifert::Rule::SeparatedPairSum => "separated-pair-sum",
            });
            Output::ok(json!({"verdict": name, "rule": rule}))
        }
        SeifertCmd::Slope { alpha, beta, alpha_dual, beta_dual, slope } => {
            let s = rational_from_str(slope)?;
            let out = seifcalc_core::seifert::slope_change_of_basis(
                &int(*alpha),
                &int(*beta),
                &int(*alpha_dual),
                &int(*beta_dual),
                &s,
            )?;
            Output::ok(json!(rational_to_string(&out)))
        }
        SeifertCmd::Admissible { alpha1, beta1, alpha1_dual, beta1_dual, alpha2, beta2 } => {
            let r = seifcalc_core::seifert::surgery_admissibility(
                &int(*alpha1),
                &int(*beta1),
                &int(*alpha1_dual),
                &int(*beta1_dual),
                &int(*alpha2),
                &int(*beta2),
            )?;
            Output::ok(json!({
                "coefficient": rational_to_string(&r.coefficient),
                "slope": rational_to_string(&r.slope),
                "admissible": r.admissible,
            }))
        }
    }
}

fn parse_i64_list(text: &str) -> Result<Vec<i64>, Error> {
    text.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::Precondition(format!("bad integer {p:?}")))
        })
        .collect()
}

fn book_json(book: &RationalOpenBook) -> Result<Value, Error> {
    let bindings: Vec<Value> = book
        .bindings
        .iter()
        .map(|b| {
            Ok(json!({
                "pair": [int_to_i64(&b.pair.0)?, int_to_i64(&b.pair.1)?],
                "oriented": [int_to_i64(&b.oriented.0)?, int_to_i64(&b.oriented.1)?],
                "multiplicity": int_to_i64(&b.multiplicity)?,
                "orientation": b.orientation.map(|o| match o {
                    Orientation::WithFiber => "+",
                    Orientation::AgainstFiber => "-",
                }),
            }))
        })
        .collect::<Result<_, Error>>()?;
    let contact = contact_json(&book.contact_type()?);
    Ok(json!({
        "n": int_to_i64(&book.spec.n)?,
        "chi": int_to_i64(&book.chi)?,
        "bindings": bindings,
        "contact": contact,
    }))
}

fn contact_json(contact: &ContactType) -> Value {
    match contact {
        ContactType::Transverse => json!({"type": "transverse"}),
        ContactType::NonTransverse { dividing } => {
            json!({"type": "non-transverse", "dividing": dividing})
        }
    }
}

fn run_openbook(cmd: &OpenbookCmd, stdin: Option<String>) -> Result<Output, Error> {
    match cmd {
        OpenbookCmd::SolveDagger { orders, all } => {
            let orders: Vec<Integer> = parse_i64_list(orders)?.into_iter().map(int).collect();
            if *all {
                let solutions = dagger_enumerate(&orders)?;
                let rows: Vec<Vec<i64>> = solutions
                    .iter()
                    .map(|s| s.iter().map(int_to_i64).collect::<Result<_, _>>())
                    .collect::<Result<_, _>>()?;
                if rows.is_empty() {
                    return Output::with_code(json!({"solutions": rows}), 2);
                }
                Output::ok(json!({"solutions": rows}))
            } else {
                match dagger_solve(&orders)? {
                    Some(s) => {
                        let row: Vec<i64> =
                            s.iter().map(int_to_i64).collect::<Result<_, _>>()?;
                        Output::ok(json!({"solution": row}))
                    }
                    None => Output::with_code(json!({"solution": Value::Null}), 2),
                }
            }
        }
        OpenbookCmd::Build { spec } => {
            let dto: OpenBookSpecDto = serde_json::from_str(&payload(spec, stdin)?)
                .map_err(|e| Error::InvalidOpenBook(format!("bad JSON: {e}")))?;
            let book = open_book_multi(dto.to_core())?;
            Output::ok(book_json(&book)?)
        }
        OpenbookCmd::Single { spec } => {
            #[derive(serde::Deserialize)]
            struct SingleDto {
                #[serde(default)]
                genus: u32,
                pair: [i64; 2],
                #[serde(default)]
                interior: Vec<[i64; 2]>,
            }
            let dto: SingleDto = serde_json::from_str(&payload(spec, stdin)?)
                .map_err(|e| Error::InvalidOpenBook(format!("bad JSON: {e}")))?;
            let interior: Vec<(Integer, Integer)> =
                dto.interior.iter().map(|f| (int(f[0]), int(f[1]))).collect();
            let result =
                open_book_single(dto.genus, (int(dto.pair[0]), int(dto.pair[1])), &interior)?;
            let base = json!({
                "n": int_to_i64(&result.n)?,
                "m": int_to_i64(&result.m)?,
                "feasible": result.book.is_some(),
            });
            match result.book {
                Some(book) => {
                    let mut out = base;
                    out["book"] = book_json(&book)?;
                    Output::ok(out)
                }
                None => Output::with_code(base, 2),
            }
        }
        OpenbookCmd::FromMonodromy { spec } => {
            #[derive(serde::Deserialize)]
            struct MonodromyDto {
                #[serde(default)]
                genus: u32,
                n: i64,
                #[serde(default)]
                interior: Vec<[i64; 2]>,
                bindings: Vec<[i64; 3]>,
            }
            let dto: MonodromyDto = serde_json::from_str(&payload(spec, stdin)?)
                .map_err(|e| Error::InvalidOpenBook(format!("bad JSON: {e}")))?;
            let interior: Vec<(Integer, Integer)> =
                dto.interior.iter().map(|f| (int(f[0]), int(f[1]))).collect();
            let bindings: Vec<seifcalc_core::openbook::MonodromyBinding> = dto
                .bindings
                .iter()
                .map(|b| seifcalc_core::openbook::MonodromyBinding {
                    c: int(b[0]),
                    p: int(b[1]),
                    p_prime: int(b[2]),
                })
                .collect();
            let data = seifcalc_core::openbook::monodromy_to_seifert(
                dto.genus,
                &int(dto.n),
                &interior,
                &bindings,
            )?;
            Output::ok(serde_json::to_value(SeifertDataDto::from_core(&data)?).expect("dto"))
        }
    }
}

fn report_json(report: &CobordismReport) -> Result<Value, Error> {
    let framings: Vec<String> = report.framings_page.iter().map(rational_to_string).collect();
    let slopes: Option<Vec<String>> = report
        .framings_slope
        .as_ref()
        .map(|v| v.iter().map(rational_to_string).collect());
    let weights: Vec<i64> =
        report.omega_class_weights.iter().map(int_to_i64).collect::<Result<_, _>>()?;
    let targets: Vec<Vec<i64>> = report
        .targets
        .iter()
        .zip(&report.target_betas)
        .map(|(a, b)| Ok(vec![int_to_i64(a)?, int_to_i64(b)?]))
        .collect::<Result<_, Error>>()?;
    Ok(json!({
        "m_in": serde_json::to_value(SeifertDataDto::from_core(&report.m_in)?).expect("dto"),
        "m_out": serde_json::to_value(SeifertDataDto::from_core(&report.m_out)?).expect("dto"),
        "n": int_to_i64(&report.order)?,
        "targets": targets,
        "framings_page": framings,
        "framings_slope": slopes,
        "chi": int_to_i64(&report.chi)?,
        "omega_class_weights": weights,
        "canonical_pairing": rational_to_string(&report.canonical_pairing),
        "sign": report.sign,
        "contact": contact_json(&report.contact),
    }))
}

fn parse_triples(text: &str) -> Result<Vec<(Integer, Integer, Integer)>, Error> {
    text.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let parts = parse_i64_list(p)?;
            if parts.len() != 3 {
                return Err(Error::Precondition(format!("expected `a,abar,p`, got {p:?}")));
            }
            Ok((int(parts[0]), int(parts[1]), int(parts[2])))
        })
        .collect()
}

fn run_cobordism(cmd: &CobordismCmd, stdin: Option<String>) -> Result<Output, Error> {
    match cmd {
        CobordismCmd::Attach { plan } => {
            #[derive(serde::Deserialize)]
            struct PlanDto {
                openbook: OpenBookSpecDto,
                targets: Vec<i64>,
                #[serde(default)]
                slopes: Option<Vec<String>>,
            }
            let dto: PlanDto = serde_json::from_str(&payload(plan, stdin)?)
                .map_err(|e| Error::InvalidOpenBook(format!("bad JSON: {e}")))?;
            let book = open_book_multi(dto.openbook.to_core())?;
            let plan = AttachmentPlan::new(book, dto.targets.into_iter().map(int).collect())?;
            let slopes = dto
                .slopes
                .map(|s| s.iter().map(|v| rational_from_str(v)).collect::<Result<Vec<_>, _>>())
                .transpose()?;
            let report = cobordism_report(&plan, slopes.as_deref())?;
            Output::ok(report_json(&report)?)
        }
        CobordismCmd::Framing { alpha, beta, n, p, target } => {
            let (framing, bbar) = seifcalc_core::handles::framing_for_target(
                &int(*alpha),
                &int(*beta),
                &int(*n),
                &int(*p),
                &int(*target),
            )?;
            Output::ok(json!({
                "framing": rational_to_string(&framing),
                "target_beta": int_to_i64(&bbar)?,
            }))
        }
        CobordismCmd::Pairing { chi, n, bindings, interior } => match (chi, n) {
            (Some(chi), None) => {
                let pairs: Vec<(Integer, Rational)> = bindings
                    .split(';')
                    .filter(|p| !p.trim().is_empty())
                    .map(|p| {
                        let (a, b) = p.split_once(',').ok_or_else(|| {
                            Error::Precondition(format!("expected `p,F`, got {p:?}"))
                        })?;
                        Ok((
                            int(a.trim().parse::<i64>().map_err(|_| {
                                Error::Precondition(format!("bad integer {a:?}"))
                            })?),
                            rational_from_str(b)?,
                        ))
                    })
                    .collect::<Result<_, Error>>()?;
                let v = canonical_pairing_page(&int(*chi), &pairs);
                Output::ok(json!(rational_to_string(&v)))
            }
            (None, Some(n)) => {
                let triples = parse_triples(bindings)?;
                let interior: Vec<Integer> =
                    parse_i64_list(interior)?.into_iter().map(int).collect();
                let v = canonical_pairing_seifert(&int(*n), &triples, &interior)?;
                Output::ok(json!(rational_to_string(&v)))
            }
            _ => Err(Error::Precondition(
                "give exactly one of --chi (page route) or --n (boundary route)".into(),
            )),
        },
        CobordismCmd::SelfInt { n, bindings } => {
            let triples = parse_triples(bindings)?;
            let v = page_class_self_intersection(&int(*n), &triples)?;
            Output::ok(json!(rational_to_string(&v)))
        }
        CobordismCmd::AreaRatio { alpha1, abar1, alpha2, abar2, total } => {
            let total = rational_from_str(total)?;
            let interval = area_ratio_interval(
                &int(*alpha1),
                &int(*abar1),
                &int(*alpha2),
                &int(*abar2),
                &total,
            )?;
            Output::ok(json!({
                "lo": rational_to_string(&interval.lo),
                "hi": interval.hi.as_ref().map(rational_to_string),
            }))
        }
    }
}

fn manifold_json(manifold: &Manifold) -> Result<Value, Error> {
    Ok(match manifold {
        Manifold::Seifert(s) => json!({
            "type": "seifert",
            "data": serde_json::to_value(SeifertDataDto::from_core(s)?).expect("dto"),
        }),
        Manifold::ConnectedSum(l1, l2) => json!({
            "type": "connected-sum",
            "summands": [lens_json(l1)?, lens_json(l2)?],
        }),
    })
}

fn run_cusp(cmd: &CuspCmd) -> Result<Output, Error> {
    match cmd {
        CuspCmd::Bound { p, q } => {
            let b = m_bound(&int(*p), &int(*q))?;
            Output::ok(json!(int_to_i64(&b)?))
        }
        CuspCmd::Dual { p, q } => {
            let (pd, qd) = dual_pair(&int(*p), &int(*q))?;
            let blowup = blowup_pair(&int(*p), &int(*q))?.map(|t| {
                json!({
                    "p": int_to_i64(&t.p).unwrap_or_default(),
                    "q": int_to_i64(&t.q).unwrap_or_default(),
                })
            });
            Output::ok(json!({
                "p_dual": int_to_i64(&pd)?,
                "q_dual": int_to_i64(&qd)?,
                "blowup": blowup,
            }))
        }
        CuspCmd::Invariants { p, q } => {
            let inv = cusp_invariants(&int(*p), &int(*q))?;
            let seq: Vec<i64> =
                inv.multiplicity_sequence.iter().map(int_to_i64).collect::<Result<_, _>>()?;
            let comparison = match compare_bounds(&int(*p), &int(*q))? {
                BoundComparison::Less => "less",
                BoundComparison::Equal => "equal",
            };
            Output::ok(json!({
                "multiplicity_sequence": seq,
                "sum_of_squares": int_to_i64(&inv.sum_of_squares)?,
                "last_entry": int_to_i64(&inv.last_entry)?,
                "gs_bound": int_to_i64(&inv.gs_bound())?,
                "bound": int_to_i64(&m_bound(&int(*p), &int(*q))?)?,
                "comparison": comparison,
            }))
        }
        CuspCmd::Classify { p, q, m } => {
            let class = classify_mpqm(&int(*p), &int(*q), &int(*m))?;
            let case = match class.case {
                SurgeryCase::Below => "below-product",
                SurgeryCase::AtProduct => "at-product",
                SurgeryCase::Above => "above-product",
            };
            let contact = match &class.contact {
                CuspContact::Transverse => json!({"type": "transverse"}),
                CuspContact::NonTransverse { isolated_multiplicity } => json!({
                    "type": "non-transverse",
                    "isolated_multiplicity": int_to_i64(isolated_multiplicity)?,
                }),
                CuspContact::FixedComponent => json!({"type": "fixed-component"}),
            };
            Output::ok(json!({
                "case": case,
                "manifold": manifold_json(&class.manifold)?,
                "contact": contact,
            }))
        }
        CuspCmd::Fillable { p, q, m } => {
            let v = match fillability_verdict(&int(*p), &int(*q), &int(*m))? {
                Fillability::Transverse => "transverse",
                Fillability::WithinBound => "within-bound",
                Fillability::BeyondBound => "beyond-bound",
            };
            Output::ok(json!(v))
        }
        CuspCmd::Catalog { max_d, max_j } => {
            let rows: Vec<Value> = family_catalog(*max_d, *max_j)?
                .iter()
                .map(|entry| {
                    let m = &entry.d * &entry.d;
                    let class = classify_mpqm(&entry.p, &entry.q, &m)?;
                    Ok(json!({
                        "family": entry.family,
                        "label": entry.label,
                        "p": int_to_i64(&entry.p)?,
                        "q": int_to_i64(&entry.q)?,
                        "d": int_to_i64(&entry.d)?,
                        "m": int_to_i64(&m)?,
                        "manifold": manifold_json(&class.manifold)?,
                        "matches": verify_catalog_entry(entry)?,
                    }))
                })
                .collect::<Result<_, Error>>()?;
            Output::ok(json!(rows))
        }
    }
}

fn graph_arg(graph: &Option<String>, stdin: Option<String>) -> Result<PlumbingGraph, Error> {
    let text = payload(graph, stdin)?;
    if text.trim() == "figure1" {
        return Ok(figure_one());
    }
    let dto: PlumbingGraphDto = serde_json::from_str(&text)
        .map_err(|e| Error::Precondition(format!("bad graph JSON: {e}")))?;
    dto.to_core()
}

fn run_plumbing(cmd: &PlumbingCmd, stdin: Option<String>) -> Result<Output, Error> {
    match cmd {
        PlumbingCmd::Matrix { graph } => {
            let g = graph_arg(graph, stdin)?;
            let q = intersection_matrix(&g);
            let rows: Vec<Vec<i64>> = (0..q.rows())
                .map(|r| (0..q.cols()).map(|c| int_to_i64(q.get(r, c))).collect())
                .collect::<Result<_, _>>()?;
            Output::ok(json!({"rows": rows}))
        }
        PlumbingCmd::Form { graph } => {
            let g = graph_arg(graph, stdin)?;
            let f = form_class(&intersection_matrix(&g))?;
            Output::ok(json!({
                "determinant": int_to_i64(&f.determinant)?,
                "negative_definite": f.definiteness == Definiteness::NegativeDefinite,
                "singular": f.singular,
            }))
        }
        PlumbingCmd::Limak { graph, a } => {
            let g = graph_arg(graph, stdin)?;
            let q = intersection_matrix(&g);
            let rhs: Vec<Rational> =
                parse_i64_list(a)?.into_iter().map(|v| rat_int(&int(v))).collect();
            match limak_solve(&q, &rhs)? {
                LimakOutcome::Positive(z) => {
                    let values: Vec<String> = z.iter().map(rational_to_string).collect();
                    Output::ok(json!({"feasible": true, "z": values}))
                }
                LimakOutcome::NotPositive { index, value } => Output::with_code(
                    json!({
                        "feasible": false,
                        "index": index,
                        "value": rational_to_string(&value),
                    }),
                    2,
                ),
            }
        }
        PlumbingCmd::Star { graph, center } => {
            let g = graph_arg(graph, stdin)?;
            let s = star_to_seifert(&g, *center)?;
            Output::ok(serde_json::to_value(SeifertDataDto::from_core(&s)?).expect("dto"))
        }
        PlumbingCmd::FromSeifert { data } => {
            let s = seifert_arg(data, stdin)?;
            let g = seifert_to_star(&s.normalize()?)?;
            Output::ok(serde_json::to_value(PlumbingGraphDto::from_core(&g)?).expect("dto"))
        }
        PlumbingCmd::Resolve { p, q, m } => {
            let g = cusp_resolution_graph(&int(*p), &int(*q), &int(*m))?;
            let det = graph_determinant(&g);
            Output::ok(json!({
                "graph": serde_json::to_value(PlumbingGraphDto::from_core(&g)?).expect("dto"),
                "determinant": int_to_i64(&det)?,
                "det_abs": int_to_i64(&det.abs())?,
            }))
        }
    }
}

fn run_verify(args: &VerifyArgs) -> Result<Output, Error> {
    if let Some(name) = &args.case {
        let report = scenarios::run_case(name)?;
        let failed = report.failed();
        let value = serde_json::to_value(&report).expect("report");
        if failed == 0 {
            return Output::ok(value);
        }
        return Output::with_code(value, 3);
    }
    if !args.all {
        let names = scenarios::list_cases()?;
        return Output::ok(json!({"cases": names}));
    }
    let summary = scenarios::run_all(args.parallel)?;
    let failed = summary.failed;
    let value = serde_json::to_value(&summary).expect("summary");
    if failed == 0 {
        Output::ok(value)
    } else {
        Output::with_code(value, 3)
    }
}
