//! Library side of the `wzeta` command: argument types, evaluation
//! dispatch, check suites and output rendering.

pub mod args;
pub mod record;
pub mod suites;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use wzeta::direct::{self, TruncationBox};
use wzeta::fourier::{self, branch_context, branch_t, INTEGER_TOLERANCE};
use wzeta::{ComplexValue, SeriesControl, Tau};

use args::{CheckArgs, Cli, Command, Engine, EngineArgs, EvalArgs, Function, GridArgs};
use record::{real, Field, Record};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] wzeta::Error),
    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

/// What a command printed and whether it counts as success.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

/// A function value plus the engine's bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub value: ComplexValue,
    pub est_error: f64,
    pub extra: Record,
}

/// The validated request shared by `eval` and `grid`.
#[derive(Debug, Clone, Copy)]
struct Request {
    function: Function,
    k: u32,
    tau: Tau,
    engine: Engine,
    ctrl: SeriesControl,
    bx: TruncationBox,
}

impl Request {
    fn new(
        function: Function,
        k: Option<u32>,
        tau: ComplexValue,
        e: &EngineArgs,
    ) -> Result<Self, CliError> {
        let k = match (function, k) {
            (Function::Wpk, Some(k)) => k,
            (Function::Wpk, None) => return Err(CliError::Usage("--fn wpk needs --k".into())),
            (_, Some(_)) => return Err(CliError::Usage("--k only applies to --fn wpk".into())),
            (_, None) => 2,
        };
        let ctrl = SeriesControl::new(e.tol, e.max_terms)
            .map_err(|err| CliError::Usage(err.to_string()))?;
        let tau = Tau::new(tau).map_err(|err| CliError::Usage(format!("--tau: {err}")))?;
        Ok(Request {
            function,
            k,
            tau,
            engine: e.engine,
            ctrl,
            bx: TruncationBox::new(e.cmax, e.dmax)?,
        })
    }

    fn direct_value(&self, z: ComplexValue, bx: TruncationBox) -> wzeta::Result<ComplexValue> {
        match self.function {
            Function::Wp => direct::wp_direct(z, self.tau, bx),
            Function::Wpk => direct::wp_deriv_direct(z, self.tau, self.k, bx),
            Function::Zeta => direct::zeta_direct(z, self.tau, bx),
            Function::G2 => Ok(direct::g2_direct(self.tau, bx)),
        }
    }

    fn evaluate(&self, z: ComplexValue) -> wzeta::Result<Evaluation> {
        let mut extra = Record::new();
        match self.engine {
            Engine::Fourier => {
                let r = match self.function {
                    Function::Wp => fourier::wp_fourier(z, self.tau, &self.ctrl)?,
                    Function::Wpk => fourier::wp_deriv_fourier(z, self.tau, self.k, &self.ctrl)?,
                    Function::Zeta => fourier::zeta_fourier(z, self.tau, &self.ctrl)?,
                    Function::G2 => fourier::g2_fourier(self.tau, &self.ctrl)?,
                };
                extra.push("terms_used", Field::Int(r.terms_used as i64));
                if self.function == Function::Zeta {
                    let ctx = branch_context(z, self.tau, INTEGER_TOLERANCE)?;
                    extra.push("delta", Field::Int(ctx.delta().into()));
                    if let Some(row) = ctx.critical {
                        extra.push("a", Field::Real(row.a));
                    }
                    extra.push("t", Field::Int(branch_t(&ctx)));
                }
                Ok(Evaluation {
                    value: r.value,
                    est_error: r.est_error,
                    extra,
                })
            }
            Engine::Direct => {
                let value = self.direct_value(z, self.bx)?;
                // error estimate: change against the box of half the size
                let half =
                    TruncationBox::new((self.bx.c_max() / 2).max(1), (self.bx.d_max() / 2).max(1))?;
                let coarse = self.direct_value(z, half)?;
                extra
                    .push("c_max", Field::Int(self.bx.c_max().into()))
                    .push("d_max", Field::Int(self.bx.d_max().into()));
                Ok(Evaluation {
                    value,
                    est_error: (value - coarse).norm(),
                    extra,
                })
            }
        }
    }
}

fn eval(a: &EvalArgs) -> Result<Output, CliError> {
    let req = Request::new(a.function, a.k, a.tau, &a.engine)?;
    let z = match (a.function, a.z) {
        (Function::G2, Some(_)) => return Err(CliError::Usage("--fn g2 takes no --z".into())),
        (Function::G2, None) => ComplexValue::new(0.0, 0.0),
        (_, Some(z)) => z,
        (f, None) => return Err(CliError::Usage(format!("--fn {} needs --z", f.name()))),
    };
    let ev = req.evaluate(z)?;
    let mut r = Record::new();
    r.push("function", Field::Text(a.function.name().into()))
        .push("engine", Field::Text(req.engine.name().into()))
        .push("tau", Field::Complex(req.tau.get()));
    if a.function != Function::G2 {
        r.push("z", Field::Complex(z));
    }
    if a.function == Function::Wpk {
        r.push("k", Field::Int(req.k.into()));
    }
    r.push("value", Field::Complex(ev.value))
        .push("est_error", Field::Real(ev.est_error));
    for (k, v) in ev.extra.0 {
        r.push(k, v);
    }
    Ok(Output {
        text: r.render(a.json),
        success: true,
    })
}

fn check(a: &CheckArgs) -> Result<Output, CliError> {
    let report = suites::run_suite(a.suite, a.count, a.seed)?;
    Ok(Output {
        text: report.to_record().render(a.json),
        success: report.pass,
    })
}

/// `n` evenly spaced values from `lo` to `hi`, both included.
fn axis(lo: f64, hi: f64, n: u32) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * f64::from(i) / f64::from(n - 1))
        .collect()
}

pub const CSV_HEADER: &str = "re_z,im_z,re_f,im_f,est_error";

fn grid(a: &GridArgs) -> Result<Output, CliError> {
    if a.function == Function::G2 {
        return Err(CliError::Usage(
            "grid needs a function of z; g2 depends on tau only".into(),
        ));
    }
    let req = Request::new(a.function, a.k, a.tau, &a.engine)?;
    let io = |source| CliError::Io {
        path: a.out.clone(),
        source,
    };
    let mut out = BufWriter::new(File::create(&a.out).map_err(io)?);
    writeln!(out, "{CSV_HEADER}").map_err(io)?;
    let (mut rows, mut poles) = (0i64, 0i64);
    for im in axis(a.lower.im, a.upper.im, a.ny) {
        for re in axis(a.lower.re, a.upper.re, a.nx) {
            let z = ComplexValue::new(re, im);
            let line = match req.evaluate(z) {
                Ok(ev) => format!(
                    "{},{},{},{},{}",
                    real(re),
                    real(im),
                    real(ev.value.re),
                    real(ev.value.im),
                    real(ev.est_error)
                ),
                Err(wzeta::Error::Pole { .. }) => {
                    poles += 1;
                    format!("{},{},,,", real(re), real(im))
                }
                Err(e) => return Err(e.into()),
            };
            writeln!(out, "{line}").map_err(io)?;
            rows += 1;
        }
    }
    out.flush().map_err(io)?;
    let mut r = Record::new();
    r.push("function", Field::Text(a.function.name().into()))
        .push("engine", Field::Text(req.engine.name().into()))
        .push("out", Field::Text(a.out.display().to_string()))
        .push("rows", Field::Int(rows))
        .push("poles", Field::Int(poles));
    Ok(Output {
        text: r.render(a.json),
        success: true,
    })
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Eval(a) => eval(a),
        Command::Check(a) => check(a),
        Command::Grid(a) => grid(a),
    }
}
