use clap::ValueEnum;

use degenstir::deg_stirling::deg_stirling2;
use degenstir::degenerate::deg_falling;
use degenstir::difference::delta_power;
use degenstir::euler_bernoulli::{euler_number_from_s2, PolyFamily, PolySequence};
use degenstir::stirling::{stirling1, stirling2, stirling2_poly};
use degenstir::whitney::{deg_whitney, whitney, WhitneyParams};
use degenstir::{MultiPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Signed Stirling numbers of the first kind S1(n, k)
    S1,
    /// Stirling numbers of the second kind S2(n, k)
    S2,
    /// Stirling polynomials S2(n, k | x)
    S2poly,
    /// Degenerate Stirling polynomials S2_l(n, k | x)
    S2lambda,
    /// Forward differences Δ^k x^n
    Delta,
    /// λ-falling factorials (x)_{n,l}
    DegFalling,
    /// Bernoulli polynomials B_n(x)
    Bernoulli,
    /// Euler polynomials E_n(x)
    Euler,
    /// Euler numbers E_n from second-kind Stirling numbers
    EulerNumber,
    /// Degenerate Bernoulli polynomials beta_{n,l}(x)
    DegBernoulli,
    /// Higher-order degenerate Euler polynomials (order from --order-r)
    DegEuler,
    /// r-Whitney numbers W_{m,r}(n, k)
    Whitney,
    /// Degenerate r-Whitney numbers W_{m,r}(n, k | l)
    WhitneyDeg,
}

impl Family {
    pub fn name(&self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }

    /// Whether the family is indexed by `(n, k)` rather than `n` alone.
    pub fn two_index(&self) -> bool {
        matches!(
            self,
            Family::S1
                | Family::S2
                | Family::S2poly
                | Family::S2lambda
                | Family::Delta
                | Family::Whitney
                | Family::WhitneyDeg
        )
    }

    fn sequence(&self, order_r: u32) -> Option<PolyFamily> {
        match self {
            Family::Bernoulli => Some(PolyFamily::Bernoulli),
            Family::Euler => Some(PolyFamily::Euler),
            Family::DegBernoulli => Some(PolyFamily::DegBernoulli),
            Family::DegEuler => Some(PolyFamily::DegEuler { r: order_r }),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Params {
    pub whitney: WhitneyParams,
    pub order_r: u32,
}

fn constant(v: Rational) -> MultiPoly {
    MultiPoly::constant(v)
}

/// Value at `(n, k)` of a two-index family.
pub fn two_index_value(family: Family, n: u32, k: u32, p: &Params) -> MultiPoly {
    match family {
        Family::S1 => constant(stirling1(n, k)),
        Family::S2 => constant(stirling2(n, k)),
        Family::S2poly => stirling2_poly(n, k),
        Family::S2lambda => deg_stirling2(n, k),
        Family::Delta => delta_power(k, n),
        Family::Whitney => constant(whitney(n, k, p.whitney)),
        Family::WhitneyDeg => deg_whitney(n, k, p.whitney),
        _ => unreachable!("{family:?} is a sequence family"),
    }
}

/// Values `0..=n_max` of a one-index family.
pub fn sequence_values(family: Family, n_max: u32, p: &Params) -> Vec<MultiPoly> {
    if let Some(fam) = family.sequence(p.order_r) {
        return PolySequence::build(fam, n_max).values().to_vec();
    }
    (0..=n_max)
        .map(|n| match family {
            Family::DegFalling => deg_falling(&MultiPoly::x(), n),
            Family::EulerNumber => constant(euler_number_from_s2(n)),
            _ => unreachable!("{family:?} is a two-index family"),
        })
        .collect()
}
