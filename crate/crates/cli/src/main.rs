use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dsgenus::cli_io::{
    bounds_section, covers_section, invariants_section, knot_input, resolve_knot, Report,
};
use dsgenus::exactalg::{rational, CertifiedValue, LaurentPoly, Rational};
use dsgenus::families::{
    cheeger_gromov_bound, satellite_descriptor, thm_c_family, thm_d_family, thm_g_family,
};
use dsgenus::lt_signature::{SignatureConfig, DEFAULT_CYCLOTOMIC_BOUND};
use dsgenus::obstruct::{
    certify_no_h1_embedding, dsn_lower_bound, dsn_x_lower_bound, gds_x_lower_bound,
    signature_gds_bound, superslice_lower_bound, Certificate, Outcome,
};
use dsgenus::Error;

#[derive(Parser)]
#[command(
    name = "dsgenus",
    version,
    about = "Exact knot invariants and double slice genus certificates"
)]
struct Cli {
    /// Maximal width of angle enclosures, as a rational such as 1/1000000.
    #[arg(long, global = true, value_parser = parse_rational)]
    enclosure_width: Option<Rational>,
    /// Largest cyclotomic index tried when classifying signature jumps.
    #[arg(long, global = true, default_value_t = DEFAULT_CYCLOTOMIC_BOUND)]
    cyclotomic_bound: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander data, signature profile, rho0 and Arf invariant.
    Invariants { knot: String },
    /// Upper and lower genus bounds.
    Bounds {
        knot: String,
        #[arg(long, default_value_t = 0)]
        b2: u64,
    },
    /// Homology orders of branched cyclic covers.
    Covers {
        knot: String,
        #[arg(long, default_value_t = 32)]
        max_n: u64,
    },
    /// Build and verify a certificate.
    Certify {
        #[command(subcommand)]
        which: CertifyCommand,
    },
    /// Build a family descriptor.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        g: u64,
        #[arg(long, default_value_t = 0)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        b2: u64,
        #[command(flatten)]
        slack: Slack,
        /// Pattern knot for `satellite`.
        #[arg(long)]
        pattern: Option<String>,
        /// Axis class for `satellite`, integer coefficients from t^0 up, e.g. -1,2.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        axis: Option<Vec<i64>>,
        /// Companion knot for `satellite`.
        #[arg(long)]
        companion: Option<String>,
    },
}

#[derive(Subcommand)]
enum CertifyCommand {
    /// g_ds^X lower bound for the trefoil-infected family with parameters g, n.
    ThmC {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        n: u64,
    },
    /// No H1-embedding certificate for the family built from a pattern with bounded rho.
    ThmD {
        #[arg(long)]
        g: u64,
        #[command(flatten)]
        slack: Slack,
    },
    /// Doubly slice number lower bound, optionally in X with given b2.
    Dsn {
        #[arg(long)]
        m: u64,
        /// Certify the variant in a closed X with this b2.
        #[arg(long)]
        b2: Option<u64>,
    },
    /// Superslice genus lower bound for the ribbon sum family.
    ThmG {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        b2: u64,
    },
    /// Superslice genus lower bound for one knot from its module.
    Superslice {
        knot: String,
        #[arg(long, default_value_t = 0)]
        b2: u64,
    },
    /// Doubly slice genus lower bound from the maximal signature.
    Signature { knot: String },
}

#[derive(clap::Args)]
struct Slack {
    /// Upper bound D on the pattern's Cheeger-Gromov invariants.
    #[arg(long, value_parser = parse_rational, conflicts_with = "crossings")]
    d: Option<Rational>,
    /// Crossing number used for the bound 69713280 * c.
    #[arg(long)]
    crossings: Option<u64>,
}

impl Slack {
    fn value(&self) -> Result<Rational, Error> {
        match (&self.d, self.crossings) {
            (Some(d), _) => Ok(d.clone()),
            (None, Some(c)) => Ok(cheeger_gromov_bound(c)),
            (None, None) => Err(Error::Schema(
                "one of --d or --crossings is required".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    ThmC,
    ThmD,
    ThmG,
    Satellite,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

fn config(cli: &Cli) -> SignatureConfig {
    let mut cfg = SignatureConfig::default();
    if let Some(w) = &cli.enclosure_width {
        cfg.enclosure_width = w.clone();
    }
    cfg.cyclotomic_bound = cli.cyclotomic_bound;
    cfg
}

/// Reports hash their input together with the numeric configuration.
fn new_report(cfg: &SignatureConfig, mut input: Value) -> Report {
    input["config"] = json!({
        "enclosure_width": rational::to_string(&cfg.enclosure_width),
        "cyclotomic_bound": cfg.cyclotomic_bound,
    });
    Report::new(&input)
}

fn certificate_report(
    cfg: &SignatureConfig,
    command: &str,
    params: Value,
    cert: Certificate,
) -> (Report, Outcome) {
    let status = cert.status;
    let report = new_report(cfg, json!({ "command": command, "params": params }))
        .section("certificate", cert);
    (report, status)
}

fn certify(which: &CertifyCommand, cfg: &SignatureConfig) -> Result<(Report, Outcome), Error> {
    Ok(match which {
        CertifyCommand::ThmC { g, n } => {
            let f = thm_c_family(*g, *n)?;
            certificate_report(
                cfg,
                "certify thm-c",
                json!({"g": g, "n": n}),
                gds_x_lower_bound(&f, *n, *g)?,
            )
        }
        CertifyCommand::ThmD { g, slack } => {
            let d = slack.value()?;
            let f = thm_d_family(*g, &CertifiedValue::exact(d.clone()))?;
            certificate_report(
                cfg,
                "certify thm-d",
                json!({"g": g, "d": rational::to_string(&d)}),
                certify_no_h1_embedding(&f, 2 * g)?,
            )
        }
        CertifyCommand::Dsn { m, b2 } => {
            let f = thm_c_family(0, 2 * m)?;
            let cert = match b2 {
                Some(b2) => dsn_x_lower_bound(&f, *m, *b2)?,
                None => dsn_lower_bound(&f, *m)?,
            };
            certificate_report(cfg, "certify dsn", json!({"m": m, "b2": b2}), cert)
        }
        CertifyCommand::ThmG { g, b2 } => {
            let k = thm_g_family(*g, *b2)?;
            certificate_report(
                cfg,
                "certify thm-g",
                json!({"g": g, "b2": b2}),
                superslice_lower_bound(&k, *b2)?,
            )
        }
        CertifyCommand::Superslice { knot, b2 } => {
            let k = resolve_knot(knot)?;
            let cert = superslice_lower_bound(&k, *b2)?;
            let status = cert.status;
            let r = new_report(cfg, knot_input("certify superslice", &k, json!({"b2": b2})))
                .section("certificate", cert);
            (r, status)
        }
        CertifyCommand::Signature { knot } => {
            let k = resolve_knot(knot)?;
            let cert = signature_gds_bound(&k, cfg)?;
            let status = cert.status;
            let r = new_report(cfg, knot_input("certify signature", &k, json!({})))
                .section("certificate", cert);
            (r, status)
        }
    })
}

fn run(cli: &Cli) -> Result<(Report, Outcome), Error> {
    let cfg = &config(cli);
    Ok(match &cli.command {
        Command::Invariants { knot } => {
            let k = resolve_knot(knot)?;
            let r = new_report(cfg, knot_input("invariants", &k, json!({})))
                .section("invariants", invariants_section(&k, cfg)?);
            (r, Outcome::Pass)
        }
        Command::Bounds { knot, b2 } => {
            let k = resolve_knot(knot)?;
            let r = new_report(cfg, knot_input("bounds", &k, json!({"b2": b2})))
                .section("bounds", bounds_section(&k, *b2, cfg)?);
            (r, Outcome::Pass)
        }
        Command::Covers { knot, max_n } => {
            let k = resolve_knot(knot)?;
            let r = new_report(cfg, knot_input("covers", &k, json!({"max_n": max_n})))
                .section("covers", covers_section(&k, *max_n)?);
            (r, Outcome::Pass)
        }
        Command::Certify { which } => certify(which, cfg)?,
        Command::Construct {
            family,
            g,
            n,
            b2,
            slack,
            pattern,
            axis,
            companion,
        } => {
            let params = json!({"g": g, "n": n, "b2": b2});
            let value = match family {
                Family::ThmC => serde_json::to_value(thm_c_family(*g, *n)?),
                Family::ThmD => {
                    let d = CertifiedValue::exact(slack.value()?);
                    serde_json::to_value(thm_d_family(*g, &d)?)
                }
                Family::ThmG => serde_json::to_value(thm_g_family(*g, *b2)?),
                Family::Satellite => {
                    let missing = |what: &str| Error::Schema(format!("satellite needs --{what}"));
                    let p = resolve_knot(pattern.as_deref().ok_or_else(|| missing("pattern"))?)?;
                    let c =
                        resolve_knot(companion.as_deref().ok_or_else(|| missing("companion"))?)?;
                    let a = LaurentPoly::from_ints(axis.as_deref().ok_or_else(|| missing("axis"))?);
                    serde_json::to_value(satellite_descriptor(&p, &a, &c)?)
                }
            }
            .map_err(|e| Error::Schema(e.to_string()))?;
            let r = new_report(cfg, json!({"command": "construct", "params": params}))
                .section("family", value);
            (r, Outcome::Pass)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((report, outcome)) => {
            let _ = writeln!(std::io::stdout().lock(), "{}", report.to_json());
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
