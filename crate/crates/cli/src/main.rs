//! `degenstir`: tables, single values and identity verification for
//! degenerate Stirling, Whitney, Bernoulli and Euler families.
//!
//! Exit codes: 0 on success, 1 when a verification suite finds a
//! counterexample, 2 on usage errors.

mod family;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use degenstir::rational::parse_rational;
use degenstir::verify::{self, Identity, SuiteConfig};
use degenstir::{MultiPoly, Rational, WhitneyParams};

use family::{Family, Params};
use output::{Row, Table};

const ORDER_ENV: &str = "DEGENSTIR_ORDER";

#[derive(Parser)]
#[command(
    name = "degenstir",
    version,
    about = "Exact degenerate Stirling and Whitney computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate a family over 0 <= k <= n <= n-max
    Table(TableArgs),
    /// Print a single value
    Eval(EvalArgs),
    /// Run an identity-verification suite
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long = "order-r")]
    order_r: Option<u32>,
    /// Substitute a rational value p/q for x
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    x: Option<Rational>,
    /// Substitute a rational value p/q for lambda
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    lambda: Option<Rational>,
    /// Render lambda as "λ" instead of "l"
    #[arg(long)]
    unicode: bool,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long = "n-max")]
    n_max: u32,
    #[arg(long = "k-max")]
    k_max: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = identity_arg)]
    identity: Identity,
    #[arg(long = "n-max")]
    n_max: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long = "order-r")]
    order_r: Option<u32>,
    /// Worker threads; 0 uses one per core
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn identity_arg(s: &str) -> Result<Identity, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Identity::ALL.iter().map(|i| i.name()).collect();
        format!("expected one of: {}", names.join(", "))
    })
}

struct Usage(String);

impl CommonArgs {
    fn params(&self) -> Result<Params, Usage> {
        let whitney = WhitneyParams::new(self.m.unwrap_or(1), self.r.unwrap_or(0))
            .map_err(|e| Usage(e.to_string()))?;
        let order_r = self.order_r.unwrap_or(1);
        if order_r == 0 {
            return Err(Usage("--order-r must be at least 1".into()));
        }
        Ok(Params { whitney, order_r })
    }

    fn finish(&self, p: &MultiPoly) -> String {
        p.specialize(self.x.as_ref(), self.lambda.as_ref())
            .render(self.unicode)
    }

    fn table_params(&self, family: Family) -> output::TableParams {
        let uses_whitney = matches!(family, Family::Whitney | Family::WhitneyDeg);
        output::TableParams {
            m: uses_whitney.then(|| self.m.unwrap_or(1)),
            r: uses_whitney.then(|| self.r.unwrap_or(0)),
            order_r: (family == Family::DegEuler).then(|| self.order_r.unwrap_or(1)),
            x: self.x.as_ref().map(ToString::to_string),
            lambda: self.lambda.as_ref().map(ToString::to_string),
        }
    }
}

fn cmd_table(args: &TableArgs) -> Result<String, Usage> {
    let c = &args.common;
    let params = c.params()?;
    let mut rows = Vec::new();
    if c.family.two_index() {
        let k_max = args.k_max.unwrap_or(args.n_max);
        for n in 0..=args.n_max {
            for k in 0..=n.min(k_max) {
                let v = family::two_index_value(c.family, n, k, &params);
                rows.push(Row {
                    n,
                    k: Some(k),
                    value: c.finish(&v),
                });
            }
        }
    } else {
        for (n, v) in family::sequence_values(c.family, args.n_max, &params)
            .iter()
            .enumerate()
        {
            rows.push(Row {
                n: n as u32,
                k: None,
                value: c.finish(v),
            });
        }
    }
    let table = Table {
        family: c.family.name(),
        params: c.table_params(c.family),
        rows,
    };
    Ok(match args.format {
        Format::Text => table.to_text(),
        Format::Json => table.to_json(),
        Format::Csv => table.to_csv(),
    })
}

fn cmd_eval(args: &EvalArgs) -> Result<String, Usage> {
    let c = &args.common;
    let params = c.params()?;
    let value = if c.family.two_index() {
        let k = args
            .k
            .ok_or_else(|| Usage(format!("family {} needs --k", c.family.name())))?;
        family::two_index_value(c.family, args.n, k, &params)
    } else {
        family::sequence_values(c.family, args.n, &params)
            .pop()
            .expect("sequence covers n")
    };
    Ok(format!("{}\n", c.finish(&value)))
}

fn cmd_verify(args: &VerifyArgs) -> Result<(String, bool), Usage> {
    let mut n_max = args.n_max;
    if n_max.is_none() && args.identity == Identity::GfMaster {
        if let Ok(v) = std::env::var(ORDER_ENV) {
            let order = v.trim().parse::<u32>().map_err(|_| {
                Usage(format!(
                    "{ORDER_ENV} must be a nonnegative integer, got {v:?}"
                ))
            })?;
            n_max = Some(order);
        }
    }
    let cfg = SuiteConfig {
        n_max,
        m: args.m,
        r: args.r,
        order_r: args.order_r,
    };
    let report = verify::run(args.identity, &cfg, args.jobs).map_err(|e| Usage(e.to_string()))?;
    let text = match args.format {
        Format::Json => output::report_json(&report),
        Format::Text | Format::Csv => report.render_text(),
    };
    Ok((text, report.passed()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Table(a) => cmd_table(a).map(|s| (s, true)),
        Command::Eval(a) => cmd_eval(a).map(|s| (s, true)),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok((text, ok)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            let _ = out.flush();
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
