//! Identity-verification suites.
//!
//! Each suite expands to a grid of independent cells. A cell recomputes the
//! two (or three) sides of one identity at one index tuple and compares them
//! exactly. Cells run in parallel but the report keeps grid order.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::deg_stirling::{self, deg_stirling2, deg_stirling2_via_s1};
use crate::degenerate::{
    build_deg_power, build_deg_power_log, chu_vandermonde_lambda, sample_points,
};
use crate::error::{Error, Result};
use crate::euler_bernoulli::{deg_euler_closed, euler_number_from_s2, PolyFamily, PolySequence};
use crate::gf_oracle::{self, SeriesFamily, MAX_ORDER};
use crate::poly::MultiPoly;
use crate::rational::{int, ratio};
use crate::stirling::{stirling1, stirling2, stirling2_poly};
use crate::whitney::{self, WhitneyParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// Alternating λ-binomial closed form vs generating function.
    Thm1,
    /// First-kind Stirling form vs closed form and generating function.
    Thm2,
    /// Degenerate Stirling three-term recurrence.
    Thm3,
    /// Higher-order degenerate Euler expansion in degenerate Stirling polynomials.
    Thm4,
    /// r-Whitney numbers: binomial sum vs difference form vs generating function.
    Thm5,
    /// Degenerate Whitney closed form (with `1/m^k`) vs generating function.
    Thm6,
    /// Degenerate Whitney first-kind Stirling form vs generating function.
    Thm7,
    /// Degenerate Whitney three-term recurrence.
    Thm8,
    /// Stirling polynomial recurrence and the `l = 0` collapse.
    Eq31,
    /// Classical r-Whitney recurrence.
    Eq40,
    /// Euler numbers from second-kind Stirling numbers.
    Eq13,
    /// `(mx + r)^n` in the falling-factorial basis.
    Eq34,
    /// λ-Vandermonde convolution.
    Vandermonde,
    /// Falling-factorial vs logarithmic construction of `(1 + lt)^(a/l)`,
    /// and multiplicativity in `a`.
    DegExp,
    /// Every generating-function family against its module.
    GfMaster,
    /// The degenerate Whitney closed form without `1/m^k`; fails whenever
    /// `m > 1` and `k > 0`.
    Thm6AsPrinted,
}

impl Identity {
    pub const ALL: [Identity; 16] = [
        Identity::Thm1,
        Identity::Thm2,
        Identity::Thm3,
        Identity::Thm4,
        Identity::Thm5,
        Identity::Thm6,
        Identity::Thm7,
        Identity::Thm8,
        Identity::Eq31,
        Identity::Eq40,
        Identity::Eq13,
        Identity::Eq34,
        Identity::Vandermonde,
        Identity::DegExp,
        Identity::GfMaster,
        Identity::Thm6AsPrinted,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Identity::Thm1 => "thm1",
            Identity::Thm2 => "thm2",
            Identity::Thm3 => "thm3",
            Identity::Thm4 => "thm4",
            Identity::Thm5 => "thm5",
            Identity::Thm6 => "thm6",
            Identity::Thm7 => "thm7",
            Identity::Thm8 => "thm8",
            Identity::Eq31 => "eq31",
            Identity::Eq40 => "eq40",
            Identity::Eq13 => "eq13",
            Identity::Eq34 => "eq34",
            Identity::Vandermonde => "vandermonde",
            Identity::DegExp => "deg-exp",
            Identity::GfMaster => "gf-master",
            Identity::Thm6AsPrinted => "thm6-as-printed",
        }
    }

    /// Grid size used when `--n-max` is not given.
    pub fn default_n_max(&self) -> u32 {
        match self {
            Identity::Thm1 | Identity::Thm2 | Identity::Thm3 | Identity::Eq31 | Identity::Eq13 => {
                12
            }
            Identity::Eq34 => 8,
            Identity::DegExp => 16,
            Identity::GfMaster => 12,
            _ => 10,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .iter()
            .copied()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown identity {s:?}")))
    }
}

/// Grid configuration. `None` means the default grid for that axis:
/// `m in {1, 2, 3}`, `r in {0, 1, 2}`, `order_r in 1..=4`.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub n_max: Option<u32>,
    pub m: Option<u32>,
    pub r: Option<u32>,
    pub order_r: Option<u32>,
}

impl SuiteConfig {
    fn whitney_grid(&self) -> Result<Vec<WhitneyParams>> {
        let ms = self.m.map_or_else(|| vec![1, 2, 3], |m| vec![m]);
        let rs = self.r.map_or_else(|| vec![0, 1, 2], |r| vec![r]);
        let mut out = Vec::new();
        for &m in &ms {
            for &r in &rs {
                out.push(WhitneyParams::new(m, r)?);
            }
        }
        Ok(out)
    }

    fn orders(&self) -> Result<Vec<u32>> {
        match self.order_r {
            Some(0) => Err(Error::Parameter("order r must be at least 1".into())),
            Some(r) => Ok(vec![r]),
            None => Ok((1..=4).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Names and values of the first pair of routes that disagree.
    Fail {
        detail: String,
    },
}

type Check = Box<dyn Fn() -> Outcome + Send + Sync>;

pub struct Cell {
    pub label: String,
    check: Check,
}

impl Cell {
    fn new(label: String, check: impl Fn() -> Outcome + Send + Sync + 'static) -> Self {
        Self {
            label,
            check: Box::new(check),
        }
    }

    pub fn run(&self) -> Outcome {
        (self.check)()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellResult {
    pub label: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub identity: Identity,
    pub results: Vec<CellResult>,
}

impl Report {
    pub fn total(&self) -> usize {
        self.results.len()
    }

    pub fn failures(&self) -> usize {
        self.results
            .iter()
            .filter(|c| c.outcome != Outcome::Pass)
            .count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn first_failure(&self) -> Option<&CellResult> {
        self.results.iter().find(|c| c.outcome != Outcome::Pass)
    }

    pub fn summary(&self) -> String {
        match self.first_failure() {
            None => format!("PASS {} cells", self.total()),
            Some(c) => {
                let Outcome::Fail { detail } = &c.outcome else {
                    unreachable!()
                };
                format!(
                    "FAIL {} of {} cells; first counterexample: {} {}: {}",
                    self.failures(),
                    self.total(),
                    self.identity,
                    c.label,
                    detail
                )
            }
        }
    }

    /// One line per cell followed by the summary line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.results {
            match &c.outcome {
                Outcome::Pass => out.push_str(&format!("ok   {} {}\n", self.identity, c.label)),
                Outcome::Fail { detail } => {
                    out.push_str(&format!("FAIL {} {}: {}\n", self.identity, c.label, detail))
                }
            }
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }
}

/// Compares named routes pairwise against the first; reports the first mismatch.
fn agree(routes: &[(&str, &MultiPoly)]) -> Outcome {
    let (name0, v0) = routes[0];
    for &(name, v) in &routes[1..] {
        if v != v0 {
            return Outcome::Fail {
                detail: format!("{name0} = {v0}, {name} = {v}"),
            };
        }
    }
    Outcome::Pass
}

fn all_pass(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    outcomes
        .into_iter()
        .find(|o| *o != Outcome::Pass)
        .unwrap_or(Outcome::Pass)
}

/// A lazily computed value shared by every cell that needs it.
struct Shared<T>(Arc<OnceLock<T>>, Arc<dyn Fn() -> T + Send + Sync>);

impl<T> Clone for Shared<T> {
    fn clone(&self) -> Self {
        Self(self.0.clone(), self.1.clone())
    }
}

impl<T: Send + Sync> Shared<T> {
    fn new(f: impl Fn() -> T + Send + Sync + 'static) -> Self {
        Self(Arc::new(OnceLock::new()), Arc::new(f))
    }

    fn get(&self) -> &T {
        self.0.get_or_init(|| (self.1)())
    }
}

fn gf_column(family: SeriesFamily, order: u32) -> Shared<Vec<MultiPoly>> {
    Shared::new(move || gf_oracle::coefficients(family, order as usize).expect("validated family"))
}

fn triangle(lo_k: u32, n_max: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=n_max).flat_map(move |n| (lo_k..=n).map(move |k| (n, k)))
}

fn lambda_zero(p: &MultiPoly) -> MultiPoly {
    p.specialize(None, Some(&int(0)))
}

/// Expands an identity into its cell grid.
pub fn cells(identity: Identity, cfg: &SuiteConfig) -> Result<Vec<Cell>> {
    let n_max = cfg.n_max.unwrap_or_else(|| identity.default_n_max());
    let mut out = Vec::new();
    match identity {
        Identity::Thm1 | Identity::Thm2 => {
            let cols: Vec<_> = (0..=n_max)
                .map(|k| gf_column(SeriesFamily::DegStirling2 { k }, n_max))
                .collect();
            for (n, k) in triangle(0, n_max) {
                let col = cols[k as usize].clone();
                out.push(Cell::new(format!("n={n} k={k}"), move || {
                    let gf = &col.get()[n as usize];
                    if identity == Identity::Thm1 {
                        agree(&[("closed", &deg_stirling2(n, k)), ("gf", gf)])
                    } else {
                        agree(&[
                            ("via_s1", &deg_stirling2_via_s1(n, k)),
                            ("gf", gf),
                            ("closed", &deg_stirling2(n, k)),
                        ])
                    }
                }));
            }
        }
        Identity::Thm3 => {
            for (n, k) in triangle(1, n_max) {
                out.push(Cell::new(format!("n={n} k={k}"), move || {
                    agree(&[
                        ("lhs", &deg_stirling2(n + 1, k)),
                        ("rhs", &deg_stirling::recurrence_rhs(n, k, deg_stirling2)),
                    ])
                }));
            }
        }
        Identity::Eq31 => {
            for (n, k) in triangle(1, n_max) {
                out.push(Cell::new(format!("n={n} k={k}"), move || {
                    let lhs = stirling2_poly(n + 1, k);
                    let factor = &MultiPoly::x() + &MultiPoly::from_int(k as i64);
                    let rhs = &(&factor * &stirling2_poly(n, k)) + &stirling2_poly(n, k - 1);
                    let collapsed = lambda_zero(&deg_stirling2(n + 1, k));
                    let rec_collapsed =
                        lambda_zero(&deg_stirling::recurrence_rhs(n, k, deg_stirling2));
                    agree(&[
                        ("lhs", &lhs),
                        ("rhs", &rhs),
                        ("deg_at_l0", &collapsed),
                        ("deg_rhs_at_l0", &rec_collapsed),
                    ])
                }));
            }
        }
        Identity::Thm4 => {
            let euler = Shared::new(move || PolySequence::build(PolyFamily::Euler, n_max));
            for r in cfg.orders()? {
                let seq =
                    Shared::new(move || PolySequence::build(PolyFamily::DegEuler { r }, n_max));
                for n in 0..=n_max {
                    let seq = seq.clone();
                    let euler = euler.clone();
                    out.push(Cell::new(format!("n={n} r={r}"), move || {
                        let higher = &seq.get().values()[n as usize];
                        let closed = deg_euler_closed(n, r);
                        let mut res = vec![agree(&[("closed", &closed), ("gf", higher)])];
                        if r == 1 {
                            res.push(agree(&[
                                ("gf_at_l0", &lambda_zero(higher)),
                                ("euler_poly", &euler.get().values()[n as usize]),
                            ]));
                        }
                        all_pass(res)
                    }));
                }
            }
        }
        Identity::Eq13 => {
            let euler = Shared::new(move || PolySequence::build(PolyFamily::Euler, n_max));
            for n in 0..=n_max {
                let euler = euler.clone();
                out.push(Cell::new(format!("n={n}"), move || {
                    let from_s2 = MultiPoly::constant(euler_number_from_s2(n));
                    let at0 = euler.get().values()[n as usize].specialize(Some(&int(0)), None);
                    agree(&[("from_s2", &from_s2), ("euler_poly_at_0", &at0)])
                }));
            }
        }
        Identity::Thm5 | Identity::Thm6 | Identity::Thm7 | Identity::Thm6AsPrinted => {
            for p in cfg.whitney_grid()? {
                let cols: Vec<_> = (0..=n_max)
                    .map(|k| {
                        let (m, r) = (p.m(), p.r());
                        if identity == Identity::Thm5 {
                            gf_column(SeriesFamily::Whitney { k, m, r }, n_max)
                        } else {
                            gf_column(SeriesFamily::DegWhitney { k, m, r }, n_max)
                        }
                    })
                    .collect();
                for (n, k) in triangle(0, n_max) {
                    let col = cols[k as usize].clone();
                    out.push(Cell::new(format!("n={n} k={k} {p}"), move || {
                        let gf = &col.get()[n as usize];
                        match identity {
                            Identity::Thm5 => agree(&[
                                (
                                    "binomial_sum",
                                    &MultiPoly::constant(whitney::whitney(n, k, p)),
                                ),
                                (
                                    "delta_form",
                                    &MultiPoly::constant(whitney::whitney_via_delta(n, k, p)),
                                ),
                                ("gf", gf),
                            ]),
                            Identity::Thm6 => {
                                let closed = whitney::deg_whitney(n, k, p);
                                all_pass([
                                    agree(&[("closed", &closed), ("gf", gf)]),
                                    agree(&[
                                        ("closed_at_l0", &lambda_zero(&closed)),
                                        (
                                            "whitney",
                                            &MultiPoly::constant(whitney::whitney(n, k, p)),
                                        ),
                                    ]),
                                ])
                            }
                            Identity::Thm7 => agree(&[
                                ("via_s1", &whitney::deg_whitney_via_s1(n, k, p)),
                                ("gf", gf),
                            ]),
                            _ => agree(&[
                                ("printed", &whitney::deg_whitney_unnormalized(n, k, p)),
                                ("gf", gf),
                            ]),
                        }
                    }));
                }
            }
        }
        Identity::Eq40 | Identity::Thm8 => {
            let degenerate = identity == Identity::Thm8;
            for p in cfg.whitney_grid()? {
                for (n, k) in triangle(1, n_max) {
                    out.push(Cell::new(format!("n={n} k={k} {p}"), move || {
                        let at = |n, k| {
                            if degenerate {
                                whitney::deg_whitney(n, k, p)
                            } else {
                                MultiPoly::constant(whitney::whitney(n, k, p))
                            }
                        };
                        agree(&[
                            ("lhs", &at(n + 1, k)),
                            ("rhs", &whitney::recurrence_rhs(n, k, p, degenerate, at)),
                        ])
                    }));
                }
            }
        }
        Identity::Eq34 => {
            for p in cfg.whitney_grid()? {
                for n in 0..=n_max {
                    out.push(Cell::new(format!("n={n} {p}"), move || {
                        let (lhs, rhs) = whitney::whitney_basis_identity(n, p);
                        agree(&[("power", &lhs), ("basis_sum", &rhs)])
                    }));
                }
            }
        }
        Identity::Vandermonde => {
            for n in 0..=n_max {
                out.push(Cell::new(format!("n={n}"), move || {
                    let x = MultiPoly::x();
                    // Both sides have degree n in y, so agreement at more than n
                    // points of every slice y = c is a polynomial identity.
                    let mut ys: Vec<MultiPoly> = sample_points(20.max(n as usize + 1))
                        .into_iter()
                        .map(MultiPoly::constant)
                        .collect();
                    ys.push(&x + &MultiPoly::constant(ratio(1, 3)));
                    ys.push(x.scale(&int(-2)));
                    all_pass(ys.iter().map(|y| {
                        let (lhs, rhs) = chu_vandermonde_lambda(&x, y, n);
                        agree(&[("convolution", &lhs), ("binomial", &rhs)])
                    }))
                }));
            }
        }
        Identity::DegExp => {
            let order = n_max as usize;
            let x = MultiPoly::x();
            let bases = [
                ("x", x.clone()),
                ("1", MultiPoly::one()),
                ("2x+3", &x.scale(&int(2)) + &MultiPoly::from_int(3)),
            ];
            for (name, a) in bases.clone() {
                out.push(Cell::new(
                    format!("log-route a={name} N={order}"),
                    move || {
                        let direct = build_deg_power(&a, order);
                        match build_deg_power_log(&a, order) {
                            Ok(log) => all_pass(
                                direct
                                    .coeffs()
                                    .iter()
                                    .zip(log.coeffs())
                                    .map(|(d, l)| agree(&[("falling", d), ("log", l)])),
                            ),
                            Err(e) => Outcome::Fail {
                                detail: e.to_string(),
                            },
                        }
                    },
                ));
            }
            let pairs = [
                ("x", x.clone(), "1", MultiPoly::one()),
                ("x", x.clone(), "x", x.clone()),
                (
                    "2x+3",
                    bases[2].1.clone(),
                    "-1/2",
                    MultiPoly::constant(ratio(-1, 2)),
                ),
            ];
            for (an, a, bn, b) in pairs {
                out.push(Cell::new(
                    format!("product a={an} b={bn} N={order}"),
                    move || {
                        let prod = build_deg_power(&a, order)
                            .mul(&build_deg_power(&b, order))
                            .expect("same order");
                        let sum = build_deg_power(&(&a + &b), order);
                        all_pass(
                            prod.coeffs()
                                .iter()
                                .zip(sum.coeffs())
                                .map(|(p, s)| agree(&[("product", p), ("sum", s)])),
                        )
                    },
                ));
            }
        }
        Identity::GfMaster => {
            if n_max as usize > MAX_ORDER {
                return Err(Error::Parameter(format!(
                    "truncation order {n_max} exceeds {MAX_ORDER}"
                )));
            }
            gf_master_cells(n_max, cfg, &mut out)?;
        }
    }
    Ok(out)
}

fn column_cell(
    family: SeriesFamily,
    order: u32,
    expected: impl Fn(u32) -> MultiPoly + Send + Sync + 'static,
) -> Cell {
    Cell::new(family.to_string(), move || {
        let gf = match gf_oracle::coefficients(family, order as usize) {
            Ok(c) => c,
            Err(e) => {
                return Outcome::Fail {
                    detail: e.to_string(),
                }
            }
        };
        for (n, g) in gf.iter().enumerate() {
            let want = expected(n as u32);
            if *g != want {
                return Outcome::Fail {
                    detail: format!("n={n}: gf = {g}, module = {want}"),
                };
            }
        }
        Outcome::Pass
    })
}

fn gf_master_cells(order: u32, cfg: &SuiteConfig, out: &mut Vec<Cell>) -> Result<()> {
    for k in 0..=order {
        out.push(column_cell(
            SeriesFamily::Stirling1 { k },
            order,
            move |n| MultiPoly::constant(stirling1(n, k)),
        ));
    }
    for k in 0..=order {
        out.push(column_cell(
            SeriesFamily::Stirling2 { k },
            order,
            move |n| MultiPoly::constant(stirling2(n, k)),
        ));
    }
    for k in 0..=order {
        out.push(column_cell(
            SeriesFamily::Stirling2Poly { k },
            order,
            move |n| stirling2_poly(n, k),
        ));
    }
    for k in 0..=order {
        out.push(column_cell(
            SeriesFamily::DegStirling2 { k },
            order,
            move |n| deg_stirling2(n, k),
        ));
    }
    let seq = |fam| {
        let s = Arc::new(PolySequence::build(fam, order));
        move |n: u32| s.values()[n as usize].clone()
    };
    out.push(column_cell(
        SeriesFamily::Bernoulli,
        order,
        seq(PolyFamily::Bernoulli),
    ));
    let euler = seq(PolyFamily::Euler);
    out.push(column_cell(SeriesFamily::Euler, order, euler));
    out.push(column_cell(
        SeriesFamily::DegBernoulli,
        order,
        seq(PolyFamily::DegBernoulli),
    ));
    for r in cfg.orders()? {
        out.push(column_cell(SeriesFamily::DegEuler { r }, order, move |n| {
            deg_euler_closed(n, r)
        }));
    }
    for p in cfg.whitney_grid()? {
        let (m, r) = (p.m(), p.r());
        for k in 0..=order {
            out.push(column_cell(
                SeriesFamily::Whitney { k, m, r },
                order,
                move |n| MultiPoly::constant(whitney::whitney(n, k, p)),
            ));
        }
        for k in 0..=order {
            out.push(column_cell(
                SeriesFamily::DegWhitney { k, m, r },
                order,
                move |n| whitney::deg_whitney(n, k, p),
            ));
        }
    }
    Ok(())
}

/// Runs every cell of a suite on `jobs` worker threads (0 = one per core).
pub fn run(identity: Identity, cfg: &SuiteConfig, jobs: usize) -> Result<Report> {
    let grid = cells(identity, cfg)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Parameter(format!("cannot start worker pool: {e}")))?;
    let results = pool.install(|| {
        grid.par_iter()
            .map(|c| CellResult {
                label: c.label.clone(),
                outcome: c.run(),
            })
            .collect()
    });
    Ok(Report { identity, results })
}
