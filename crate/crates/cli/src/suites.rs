//! Seeded invariant suites behind `wzeta check`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wzeta::direct::{wp_deriv_direct, wp_direct, zeta_direct, TruncationBox};
use wzeta::fourier::{
    g2_fourier, t_by_counting, t_closed_form, wp_deriv_fourier, wp_fourier, zeta_fourier,
};
use wzeta::periods::{eta_empirical, g2_transform, legendre_residual, QuasiPeriodMap};
use wzeta::{ComplexValue, Lattice, Result, SeriesControl, Tau, UnimodularMatrix};

use crate::args::Suite;
use crate::record::{Field, Record};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub cases: u64,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub seed: u64,
    pub params: BTreeMap<String, String>,
}

impl CheckReport {
    fn new(suite: Suite, cases: u64, max_residual: f64, tolerance: f64, seed: u64) -> Self {
        CheckReport {
            name: suite.name().to_string(),
            cases,
            max_residual,
            tolerance,
            // NaN residuals fail
            pass: max_residual <= tolerance,
            seed,
            params: BTreeMap::new(),
        }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn to_record(&self) -> Record {
        let mut r = Record::new();
        r.push("name", Field::Text(self.name.clone()))
            .push("cases", Field::Int(self.cases as i64))
            .push("max_residual", Field::Real(self.max_residual))
            .push("tolerance", Field::Real(self.tolerance))
            .push("pass", Field::Bool(self.pass))
            .push("seed", Field::Int(self.seed as i64))
            .push("params", Field::Map(self.params.clone()));
        r
    }
}

fn ctrl() -> SeriesControl {
    SeriesControl::with_tol(1e-14).expect("valid tolerance")
}

fn random_tau(rng: &mut impl Rng, im_lo: f64, im_hi: f64) -> Tau {
    Tau::new(ComplexValue::new(
        rng.gen_range(-0.5..0.5),
        rng.gen_range(im_lo..im_hi),
    ))
    .expect("upper half-plane")
}

/// A point of the fundamental parallelogram away from the corners and from
/// the rows where `Im z / Im τ` is an integer.
fn random_z(rng: &mut impl Rng, tau: Tau, margin: f64) -> ComplexValue {
    loop {
        let z = tau.get() * rng.gen_range(0.0..1.0) + rng.gen_range(0.0..1.0);
        let x = z.im / tau.im();
        let corners = [
            ComplexValue::new(0.0, 0.0),
            ComplexValue::new(1.0, 0.0),
            tau.get(),
            tau.get() + 1.0,
        ];
        if (x - x.round()).abs() >= margin && corners.iter().all(|p| (z - p).norm() > margin) {
            return z;
        }
    }
}

/// Generators drawn from the unit box and scaled by a factor in [0.5, 4].
fn random_lattice(rng: &mut impl Rng) -> Lattice {
    loop {
        let scale = rng.gen_range(0.5..4.0);
        let mut gen =
            || ComplexValue::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * scale;
        let l = Lattice::new(gen(), gen());
        if let Ok(nb) = l.normalize() {
            if nb.tau.im() > 0.05 * nb.tau.get().norm().max(1.0)
                && l.omega1.norm() > 0.1
                && l.omega2.norm() > 0.1
            {
                return l;
            }
        }
    }
}

fn legendre(count: u32, seed: u64) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..count {
        worst = worst.max(legendre_residual(&random_lattice(&mut rng))?.norm());
    }
    Ok(
        CheckReport::new(Suite::Legendre, count.into(), worst, 1e-9, seed)
            .param("scale", "[0.5,4]"),
    )
}

const Z_PER_CASE: u32 = 10;

fn eta(count: u32, seed: u64) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut worst, mut spread) = (0.0f64, 0.0f64);
    for _ in 0..count {
        let tau = random_tau(&mut rng, 0.5, 3.0);
        let map = QuasiPeriodMap::new(tau)?;
        let (c, d) = (rng.gen_range(-5..=5), rng.gen_range(-5..=5));
        let mut first = None;
        for _ in 0..Z_PER_CASE {
            let diff = eta_empirical(random_z(&mut rng, tau, 0.05), tau, c, d, &ctrl())?;
            worst = worst.max((diff - map.eta(c, d)).norm());
            let first = *first.get_or_insert(diff);
            spread = spread.max((diff - first).norm());
        }
    }
    Ok(
        CheckReport::new(Suite::Eta, count.into(), worst, 1e-9, seed)
            .param("z_per_case", Z_PER_CASE)
            .param("max_z_spread", crate::record::real(spread))
            .param("im_tau", "[0.5,3]"),
    )
}

const TAUS_PER_MATRIX: usize = 5;

fn quasimod(count: u32, seed: u64) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let taus: Vec<Tau> = (0..TAUS_PER_MATRIX)
        .map(|_| random_tau(&mut rng, 0.8, 1.5))
        .collect();
    let g2s = taus
        .iter()
        .map(|&t| Ok(g2_fourier(t, &ctrl())?.value))
        .collect::<Result<Vec<_>>>()?;
    let mut worst = 0.0f64;
    for _ in 0..count {
        let m = UnimodularMatrix::random_word(&mut rng, 12, 10);
        for (&tau, &g2) in taus.iter().zip(&g2s) {
            let image = g2_fourier(m.mobius(tau), &ctrl())?.value;
            worst = worst.max((g2_transform(m, tau, g2) - image).norm());
        }
    }
    Ok(CheckReport::new(
        Suite::Quasimod,
        u64::from(count) * TAUS_PER_MATRIX as u64,
        worst,
        1e-8,
        seed,
    )
    .param("matrices", count)
    .param("taus", TAUS_PER_MATRIX)
    .param("max_entry", 10)
    .param("max_word_length", 12))
}

fn cross(count: u32, seed: u64) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bx = TruncationBox::default();
    let (mut worst, mut k4) = (0.0f64, 0.0f64);
    for _ in 0..count {
        let tau = random_tau(&mut rng, 0.8, 1.5);
        let z = random_z(&mut rng, tau, 0.05);
        worst = worst
            .max((wp_direct(z, tau, bx)? - wp_fourier(z, tau, &ctrl())?.value).norm())
            .max((zeta_direct(z, tau, bx)? - zeta_fourier(z, tau, &ctrl())?.value).norm());
        k4 = k4.max(
            (wp_deriv_direct(z, tau, 4, bx)? - wp_deriv_fourier(z, tau, 4, &ctrl())?.value).norm(),
        );
    }
    Ok(
        CheckReport::new(Suite::Cross, count.into(), worst, 1e-3, seed)
            .param("box", format!("{}x{}", bx.c_max(), bx.d_max()))
            .param("functions", "wp,zeta")
            .param("wp_k4_max_residual", crate::record::real(k4)),
    )
}

fn tform_t(seed: u64) -> CheckReport {
    let worst = (-50..=50)
        .map(|i| {
            let x = f64::from(i) / 10.0;
            (t_closed_form(x) - t_by_counting(x)).abs()
        })
        .max()
        .unwrap_or(0);
    CheckReport::new(Suite::TformT, 101, worst as f64, 0.0, seed).param("grid", "-5.0:0.1:5.0")
}

pub fn run_suite(suite: Suite, count: Option<u32>, seed: u64) -> Result<CheckReport> {
    match suite {
        Suite::Legendre => legendre(count.unwrap_or(20), seed),
        Suite::Eta => eta(count.unwrap_or(20), seed),
        Suite::Quasimod => quasimod(count.unwrap_or(50), seed),
        Suite::Cross => cross(count.unwrap_or(10), seed),
        Suite::TformT => Ok(tform_t(seed)),
    }
}
