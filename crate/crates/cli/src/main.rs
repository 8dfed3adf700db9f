//! `basel`: command-line access to the basel-core library.

mod output;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use basel_core::identities::{
    self, bernoulli_polynomial, genocchi_polynomial, Certificate, HalvingVariant,
};
use basel_core::quadrature::{self, DilogMode, IntegralKind, ProductKind};
use basel_core::series::{self, Proposition};
use basel_core::verify::{self, Selection, Summary, Tolerances};
use basel_core::{sequences, Error, Rational, RationalPolynomial, DEFAULT_TOL};
use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{Cell, Format, Rendered, Table};

#[derive(Parser, Debug)]
#[command(name = "basel", version, about = "Bernoulli and Genocchi numbers, zeta(2) integrals and series")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,

    /// Absolute tolerance for numerical routines.
    #[arg(long, global = true, env = "BASEL_TOL", default_value_t = DEFAULT_TOL)]
    tol: f64,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct IndexRange {
    /// Index.
    #[arg(long)]
    n: usize,
    /// List every index from `--n` up to this one.
    #[arg(long)]
    to: Option<usize>,
}

impl IndexRange {
    fn indices(&self) -> std::ops::RangeInclusive<usize> {
        self.n..=self.to.unwrap_or(self.n).max(self.n)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bernoulli numbers B_n (B_1 = -1/2).
    Bernoulli(IndexRange),
    /// Genocchi numbers G_n (G_1 = 1/2).
    Genocchi(IndexRange),
    /// Exact zeta(2n) as a rational multiple of a power of pi.
    Zeta {
        #[arg(long)]
        even: usize,
    },
    /// Bernoulli and Genocchi polynomials and their identity certificates.
    Poly {
        #[arg(long, value_enum, default_value_t = Family::Genocchi)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Evaluate exactly at this rational point, e.g. 1/2.
        #[arg(long)]
        at: Option<Rational>,
        /// Run every identity certificate at index n instead.
        #[arg(long)]
        certify: bool,
    },
    /// Quadrature of the four log-singular integrals.
    Integrate {
        /// One kind (tag or slug); all four when omitted.
        #[arg(long)]
        kind: Option<IntegralKind>,
        /// Report |I(LOG_OVER_1MT) - 2 I(LOG_OVER_1PT)| instead.
        #[arg(long, conflicts_with = "kind")]
        two_integral: bool,
    },
    /// Interior Riemann sum (1/n) sum_{k=1}^{n-1} f(k/n).
    Riemann {
        #[arg(long)]
        kind: IntegralKind,
        #[arg(long)]
        n: u64,
    },
    /// Logarithm of prod_{k=1}^{n-1} (1 +- k/n)^{1/k}.
    Product {
        #[arg(long)]
        kind: ProductKind,
        #[arg(long)]
        n: u64,
    },
    /// The series S(x), its ODE, the functional equations and the Lesko pair.
    Dilog {
        #[command(subcommand)]
        op: DilogOp,
    },
    /// Partial sums and divergent-series reports.
    Series {
        #[command(subcommand)]
        op: SeriesOp,
    },
    /// Bisection identity for 1/sin^2 x.
    Mei {
        #[arg(long)]
        x: f64,
        #[arg(long, default_value_t = 10)]
        level: u32,
        /// Partial-fraction truncation K.
        #[arg(long, default_value_t = series::PARTIAL_FRACTION_TERMS)]
        terms: u64,
    },
    /// Run the verification suite.
    Verify {
        /// `all` or a comma-separated list of check ids.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Include wall-clock timings (makes reports non-reproducible).
        #[arg(long)]
        timings: bool,
        /// Print the sorted check ids and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Bernoulli,
    Genocchi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Series,
    Integral,
}

#[derive(Subcommand, Debug)]
enum DilogOp {
    /// S(x) = sum (2x)^n / n^2 for |x| <= 1/2.
    S {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, value_enum, default_value_t = Mode::Series)]
        mode: Mode,
    },
    /// S'(x) = -ln(1 - 2x)/x.
    SPrime {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Residual of S' + x S'' = 2/(1 - 2x) for the truncated series.
    Ode {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = 60)]
        terms: u32,
    },
    /// Residual of h(x) + h(-x) = h(x^2)/2.
    Feq {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Residual of g(x) + g(1/x) = (ln x)^2 / 2.
    FeqInverse {
        #[arg(long)]
        x: f64,
    },
    /// sum r^n/(an + b) against its integral form.
    Lesko {
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 0.0)]
        b: f64,
    },
}

#[derive(Subcommand, Debug)]
enum SeriesOp {
    /// sum_{n<=N} 1/n^2.
    Zeta2 {
        #[arg(long)]
        n: u64,
    },
    /// sum_{n<=N} (-1)^{n-1}/n^2.
    Eta2 {
        #[arg(long)]
        n: u64,
    },
    /// Optimal-truncation report for a divergent series.
    Report {
        #[arg(long)]
        which: Proposition,
        #[arg(long, default_value_t = series::MAX_ASYMPTOTIC_TERMS)]
        m_max: usize,
    },
    /// Value assigned to a divergent series by its defining integral.
    Target {
        #[arg(long)]
        which: Proposition,
    },
}

enum Outcome {
    Success(String),
    /// Output is still printed, then the process exits with 1.
    ChecksFailed(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Success(text)) => emit(&cli, &text),
        Ok(Outcome::ChecksFailed(text)) => match emit(&cli, &text) {
            c if c == ExitCode::SUCCESS => ExitCode::from(1),
            c => c,
        },
        Err(err) => {
            let (code, msg) = classify(err);
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

/// Accuracy failures exit with 1; everything else is a usage error.
fn classify(err: Error) -> (u8, String) {
    match err {
        e @ Error::Accuracy { .. } => (1, e.to_string()),
        Error::UnknownCheck { id, valid } => (
            2,
            format!("unknown check id `{id}`; valid ids:\n  {}", valid.join("\n  ")),
        ),
        e => (2, e.to_string()),
    }
}

fn emit(cli: &Cli, text: &str) -> ExitCode {
    let result = match &cli.out {
        Some(path) => write_atomic(path, text.as_bytes()),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: writing output: {e}");
            ExitCode::from(1)
        }
    }
}

/// Temp file in the target directory, then rename.
fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let tol = cli.tol;
    let rendered: Rendered = match &cli.command {
        Command::Bernoulli(range) => {
            let mut t = Table::new(vec!["n", "value"]);
            for n in range.indices() {
                t.push(vec![n.into(), Cell::text(sequences::bernoulli(n)?)]);
            }
            t.into()
        }
        Command::Genocchi(range) => {
            let mut t = Table::new(vec!["n", "value"]);
            for n in range.indices() {
                t.push(vec![n.into(), Cell::text(sequences::genocchi(n)?)]);
            }
            t.into()
        }
        Command::Zeta { even } => {
            let z = sequences::zeta_even_exact(*even)?;
            Table::record(vec![
                ("n", (*even).into()),
                ("coefficient", Cell::text(z.coefficient())),
                ("pi_exponent", z.exponent().into()),
                ("exact", Cell::text(&z)),
                ("value", z.to_f64().into()),
            ])
            .into()
        }
        Command::Poly {
            family,
            n,
            at,
            certify,
        } => {
            if *certify {
                return certify_index(*n, cli.format);
            }
            poly(*family, *n, at.as_ref())?
        }
        Command::Integrate { kind, two_integral } => {
            if *two_integral {
                let r = quadrature::two_integral_residual(tol)?;
                Table::record(vec![("residual", r.into())]).into()
            } else {
                let kinds = match kind {
                    Some(k) => vec![*k],
                    None => IntegralKind::ALL.to_vec(),
                };
                let mut t = Table::new(vec![
                    "kind",
                    "value",
                    "err_estimate",
                    "evaluations",
                    "closed_form",
                ]);
                for k in kinds {
                    let q = quadrature::integrate(k, tol)?;
                    t.push(vec![
                        Cell::text(k),
                        q.value.into(),
                        q.err_estimate.into(),
                        q.evaluations.into(),
                        k.closed_form().into(),
                    ]);
                }
                t.into()
            }
        }
        Command::Riemann { kind, n } => {
            let v = quadrature::riemann_sum(*kind, *n)?;
            Table::record(vec![
                ("kind", Cell::text(kind)),
                ("n", (*n).into()),
                ("value", v.into()),
                ("limit", kind.closed_form().into()),
            ])
            .into()
        }
        Command::Product { kind, n } => {
            let v = quadrature::product_form(*kind, *n)?;
            Table::record(vec![
                ("kind", Cell::text(kind)),
                ("n", (*n).into()),
                ("log_value", v.into()),
                ("limit", kind.limit().into()),
            ])
            .into()
        }
        Command::Dilog { op } => dilog(op, tol)?,
        Command::Series { op } => series_op(op, tol)?,
        Command::Mei { x, level, terms } => {
            let r = series::mei_bisection_with_terms(*x, *level, *terms)?;
            Table::record(vec![
                ("x", r.x.into()),
                ("level", r.level.into()),
                ("bisection_value", r.bisection_value.into()),
                ("exact_value", r.exact_value.into()),
                ("remainder", r.remainder.into()),
                ("e_n_bound", r.e_n_bound.into()),
                ("partial_fraction_value", r.partial_fraction_value.into()),
                ("truncation", r.truncation.into()),
                ("tail_estimate", r.tail_estimate.into()),
            ])
            .into()
        }
        Command::Verify {
            suite,
            timings,
            list,
        } => return verify_cmd(suite, *timings, *list, tol, cli.format),
    };
    Ok(Outcome::Success(rendered.render(cli.format)))
}

fn coefficient_cells(p: &RationalPolynomial) -> Cell {
    if p.is_zero() {
        Cell::List(vec!["0".into()])
    } else {
        Cell::List(p.coefficients().iter().map(ToString::to_string).collect())
    }
}

fn poly(family: Family, n: usize, at: Option<&Rational>) -> Result<Rendered, Error> {
    let (name, p) = match family {
        Family::Bernoulli => ("bernoulli", bernoulli_polynomial(n)?),
        Family::Genocchi => ("genocchi", genocchi_polynomial(n)?),
    };
    let mut fields = vec![
        ("family", Cell::text(name)),
        ("n", n.into()),
        ("polynomial", Cell::text(&p)),
        ("coefficients", coefficient_cells(&p)),
    ];
    if let Some(x) = at {
        fields.push(("at", Cell::text(x)));
        fields.push(("value", Cell::text(p.eval(x))));
    }
    Ok(Table::record(fields).into())
}

fn certify_index(n: usize, format: Format) -> Result<Outcome, Error> {
    let mut certs: Vec<Certificate> = vec![
        identities::check_reflection(n)?,
        identities::check_genocchi_orderings(n)?,
    ];
    for v in HalvingVariant::ALL {
        certs.push(identities::check_halving(n, v)?);
    }
    if n >= 1 {
        certs.extend(identities::check_special_values(n)?.certificates);
        certs.extend(identities::check_calculus(n)?.certificates);
    }
    if n >= 2 {
        certs.push(identities::check_addition_recurrence(n)?);
        certs.push(identities::check_genocchi_at_one(n)?);
    }
    let mut t = Table::new(vec![
        "identity",
        "index",
        "passed",
        "first_difference",
        "max_abs_deviation",
    ]);
    for c in &certs {
        t.push(vec![
            Cell::text(&c.identity),
            c.index.into(),
            c.passed.into(),
            Cell::text(c.first_difference.map_or(String::new(), |d| d.to_string())),
            Cell::text(&c.max_abs_deviation),
        ]);
    }
    let text = Rendered::from(t).render(format);
    Ok(if certs.iter().all(|c| c.passed) {
        Outcome::Success(text)
    } else {
        Outcome::ChecksFailed(text)
    })
}

fn dilog(op: &DilogOp, tol: f64) -> Result<Rendered, Error> {
    let t = match op {
        DilogOp::S { x, mode } => {
            let m = match mode {
                Mode::Series => DilogMode::Series(tol),
                Mode::Integral => DilogMode::Integral(tol),
            };
            let v = quadrature::dilog_s(*x, m)?;
            Table::record(vec![
                ("x", (*x).into()),
                ("mode", Cell::text(m)),
                ("value", v.into()),
            ])
        }
        DilogOp::SPrime { x } => Table::record(vec![
            ("x", (*x).into()),
            ("value", quadrature::s_prime(*x)?.into()),
        ]),
        DilogOp::Ode { x, terms } => Table::record(vec![
            ("x", (*x).into()),
            ("terms", (*terms).into()),
            ("residual", quadrature::ode_residual(*x, *terms)?.into()),
        ]),
        DilogOp::Feq { x } => Table::record(vec![
            ("x", (*x).into()),
            ("residual", quadrature::functional_eq_dilog(*x, tol)?.into()),
        ]),
        DilogOp::FeqInverse { x } => Table::record(vec![
            ("x", (*x).into()),
            ("residual", quadrature::functional_eq_inverse(*x, tol)?.into()),
        ]),
        DilogOp::Lesko { r, a, b } => {
            let p = quadrature::lesko_pair(*r, *a, *b, tol)?;
            Table::record(vec![
                ("r", (*r).into()),
                ("a", (*a).into()),
                ("b", (*b).into()),
                ("series_value", p.series_value.into()),
                ("integral_value", p.integral_value.into()),
                ("terms", p.terms.into()),
            ])
        }
    };
    Ok(t.into())
}

fn partial_sum_record(n: u64, exact: Option<Rational>, value: f64, limit: f64) -> Rendered {
    let mut fields = vec![("n", Cell::from(n))];
    fields.push(("exact", Cell::text(exact.map_or(String::new(), |r| r.to_string()))));
    fields.push(("value", value.into()));
    fields.push(("limit", limit.into()));
    fields.push(("gap", (limit - value).into()));
    Table::record(fields).into()
}

fn series_op(op: &SeriesOp, tol: f64) -> Result<Rendered, Error> {
    use std::f64::consts::PI;
    Ok(match op {
        SeriesOp::Zeta2 { n } => {
            let exact = (*n <= series::EXACT_PARTIAL_LIMIT)
                .then(|| series::zeta2_partial(*n))
                .transpose()?;
            partial_sum_record(*n, exact, series::zeta2_partial_f64(*n)?, PI * PI / 6.0)
        }
        SeriesOp::Eta2 { n } => {
            let exact = (*n <= series::EXACT_PARTIAL_LIMIT)
                .then(|| series::eta2_partial(*n))
                .transpose()?;
            partial_sum_record(*n, exact, series::eta2_partial_f64(*n)?, PI * PI / 12.0)
        }
        SeriesOp::Report { which, m_max } => {
            let r = series::asymptotic_report_with_tol(*which, *m_max, tol)?;
            let mut t = Table::new(vec![
                "n",
                "term",
                "term_value",
                "partial_sum",
                "partial_sum_value",
            ]);
            for i in 0..r.terms.len() {
                t.push(vec![
                    (i + 1).into(),
                    Cell::text(&r.terms[i]),
                    r.term_values[i].into(),
                    Cell::text(&r.partial_sums[i]),
                    r.partial_sum_values[i].into(),
                ]);
            }
            let f = output::fmt_g15;
            Rendered {
                json: Some(serde_json::to_value(&r).expect("report serializes")),
                header: vec![
                    ("which", r.which.to_string()),
                    ("smallest_term_index", r.smallest_term_index.to_string()),
                    ("smallest_term", r.smallest_term.to_string()),
                    ("optimal_estimate", f(r.optimal_estimate)),
                    ("bracketing_average", f(r.bracketing_average)),
                    ("best_truncation_error", f(r.best_truncation_error)),
                    ("next_term", r.next_term.to_string()),
                    ("regularized_target", f(r.regularized_target)),
                    ("classically_convergent", r.classically_convergent.to_string()),
                ],
                table: t,
            }
        }
        SeriesOp::Target { which } => {
            let v = series::regularized_target_with_tol(*which, tol)?;
            Table::record(vec![
                ("which", Cell::text(which)),
                ("value", v.into()),
                ("closed_form", which.closed_form().into()),
            ])
            .into()
        }
    })
}

fn verify_cmd(
    suite: &str,
    timings: bool,
    list: bool,
    tol: f64,
    format: Format,
) -> Result<Outcome, Error> {
    if list {
        let mut out = verify::check_ids().join("\n");
        out.push('\n');
        return Ok(Outcome::Success(out));
    }
    let selection = if suite == "all" {
        Selection::All
    } else {
        Selection::Ids(
            suite
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(String::from)
                .collect(),
        )
    };
    if !(quadrature::MIN_TOL..=quadrature::MAX_TOL).contains(&tol) {
        return Err(Error::Domain(format!(
            "tolerance {tol:e} outside [{:e}, {:e}]",
            quadrature::MIN_TOL,
            quadrature::MAX_TOL
        )));
    }
    let results = verify::run_suite(&selection, &Tolerances::with_quadrature(tol))?;
    let summary = Summary::of(&results);
    let text = match format {
        Format::Json => verify::to_jsonl(&results, timings),
        Format::Pretty => verify::summary_table(&results, timings),
        Format::Csv => {
            let mut t = Table::new(vec![
                "check_id",
                "status",
                "lhs",
                "rhs",
                "abs_err",
                "tol",
                "runtime_ms",
            ]);
            for r in &results {
                t.push(vec![
                    Cell::text(&r.check_id),
                    Cell::text(r.status.as_str()),
                    Cell::text(&r.lhs),
                    Cell::text(&r.rhs),
                    measure(r.abs_err),
                    measure(r.tol),
                    if timings { r.runtime_ms.into() } else { Cell::Int(0) },
                ]);
            }
            t.to_csv()
        }
    };
    if format != Format::Pretty {
        eprintln!(
            "{} checks: {} pass, {} fail, {} erratum_documented",
            results.len(),
            summary.pass,
            summary.fail,
            summary.erratum_documented
        );
    }
    Ok(if summary.all_passed() {
        Outcome::Success(text)
    } else {
        Outcome::ChecksFailed(text)
    })
}

fn measure(m: verify::Measure) -> Cell {
    match m {
        verify::Measure::Exact => Cell::text("exact"),
        verify::Measure::Value(v) => v.into(),
    }
}
