use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use braidknot::braid::{self, BraidWord};
use braidknot::concordance::{self, DistinctnessReport};
use braidknot::goeritz;
use braidknot::verify::{self, VerifyConfig};
use braidknot::{burau, parse_braid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "braidknot", version, about = "Exact braid and knot invariant computations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Largest q swept by `report` and `verify`.
    #[arg(long, global = true)]
    q_max: Option<usize>,
    /// Largest Goeritz index k swept by `verify`.
    #[arg(long, global = true)]
    k_max: Option<usize>,
    /// Largest twist parameter m swept by `verify`.
    #[arg(long, global = true)]
    m_max: Option<usize>,
    /// Largest Baker–Kegel index checked by `verify`.
    #[arg(long, global = true)]
    n_max: Option<usize>,
    /// Stop `verify` at the first failing check.
    #[arg(long, global = true)]
    fail_fast: bool,
    /// TOML file with default settings.
    #[arg(long, global = true, env = "BRAIDKNOT_CONFIG")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Alexander polynomial of a braid closure, e.g. `alex "2: 1 1 1"`.
    Alex { braid: String },
    /// Reduced Burau matrix of a braid word.
    Burau { braid: String },
    /// Garside left normal form and twist positivity.
    Nf { braid: String },
    /// Signature of T(3, 3k+1; 2m), closed form and Goeritz computation.
    Signature { k: usize, m: usize },
    /// Goeritz matrices G'(K), G(K) and μ for T(3, 3k+1; 2m).
    Goeritz { k: usize, m: usize },
    /// Same-τ family of T(3, q) with its signature ledger.
    Family { q: usize },
    /// Concordance distinctness report for one q, or for every q up to --q-max.
    Report { q: Option<usize> },
    /// Bridge index certificate for a twist positive braid whose closure is
    /// known to be an L-space knot.
    Cert {
        braid: String,
        /// Confirms the closure is an L-space knot; the certificate needs it.
        #[arg(long)]
        lspace: bool,
    },
    /// Certificate for the Baker–Kegel knot K_n.
    BakerKegel { n: usize },
    /// Run every check; exit status 0 iff all pass.
    Verify,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    format: Option<Format>,
    q_max: Option<usize>,
    k_max: Option<usize>,
    m_max: Option<usize>,
    n_max: Option<usize>,
    fail_fast: Option<bool>,
}

fn load_config(path: &Path) -> Result<FileConfig> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

struct Settings {
    format: Format,
    verify: VerifyConfig,
}

fn settings(cli: &Cli) -> Result<Settings> {
    let file = match &cli.config {
        Some(p) => load_config(p)?,
        None => FileConfig::default(),
    };
    let d = VerifyConfig::default();
    let verify = VerifyConfig {
        q_max: cli.q_max.or(file.q_max).unwrap_or(d.q_max),
        k_max: cli.k_max.or(file.k_max).unwrap_or(d.k_max),
        m_max: cli.m_max.or(file.m_max).unwrap_or(d.m_max),
        n_max: cli.n_max.or(file.n_max).unwrap_or(d.n_max),
        fail_fast: cli.fail_fast || file.fail_fast.unwrap_or(false),
    };
    if verify.q_max < 4 || verify.k_max == 0 || verify.n_max == 0 {
        bail!("sweep bounds need q_max >= 4, k_max >= 1 and n_max >= 1");
    }
    Ok(Settings {
        format: cli.format.or(file.format).unwrap_or(Format::Text),
        verify,
    })
}

fn braid_arg(text: &str) -> Result<BraidWord> {
    parse_braid(text).with_context(|| format!("parsing braid {text:?}"))
}

fn print_json(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json values serialize") + "\n"
}

fn csv_line(fields: &[String]) -> String {
    let quoted: Vec<String> = fields
        .iter()
        .map(|f| {
            if f.contains([',', '"', '\n']) {
                format!("\"{}\"", f.replace('"', "\"\""))
            } else {
                f.clone()
            }
        })
        .collect();
    quoted.join(",") + "\n"
}

fn run(cli: &Cli, out: &mut String) -> Result<bool> {
    let s = settings(cli)?;
    let fmt = s.format;
    match &cli.command {
        Command::Alex { braid: text } => {
            let b = braid_arg(text)?;
            let a = burau::alexander(&b)?;
            out.push_str(&match fmt {
                Format::Text => format!("{a}\n"),
                Format::Json => print_json(&json!({
                    "braid": b,
                    "alexander": a,
                    "exponents": a.exponents(),
                })),
                Format::Csv => {
                    csv_line(&["braid".into(), "alexander".into()])
                        + &csv_line(&[b.format(), a.render()])
                }
            });
        }
        Command::Burau { braid: text } => {
            let b = braid_arg(text)?;
            let m = burau::reduced_burau(&b);
            let rows: Vec<Vec<String>> = m
                .rows()
                .iter()
                .map(|r| r.iter().map(|p| p.render()).collect())
                .collect();
            out.push_str(&match fmt {
                Format::Text => m.render() + "\n",
                Format::Json => print_json(&json!({ "braid": b, "matrix": rows })),
                Format::Csv => rows.iter().map(|r| csv_line(r)).collect(),
            });
        }
        Command::Nf { braid: text } => {
            let b = braid_arg(text)?;
            let nf = braid::garside_normal_form(&b);
            let tp = braid::is_twist_positive(&b);
            out.push_str(&match fmt {
                Format::Text => format!("{}\ntwist_positive={tp}\n", nf.render()),
                Format::Json => {
                    let factors: Vec<Vec<usize>> = nf.factors().iter().map(|f| f.word()).collect();
                    print_json(&json!({
                        "braid": b,
                        "infimum": nf.infimum(),
                        "supremum": nf.supremum(),
                        "factors": factors,
                        "twist_positive": tp,
                    }))
                }
                Format::Csv => {
                    csv_line(&["braid".into(), "normal_form".into(), "twist_positive".into()])
                        + &csv_line(&[b.format(), nf.render(), tp.to_string()])
                }
            });
        }
        Command::Signature { k, m } => {
            let closed = goeritz::signature_closed_form(*k, *m);
            let gl = goeritz::signature_gordon_litherland(*k, *m)?;
            out.push_str(&match fmt {
                Format::Text => format!("closed_form={closed} gordon_litherland={gl}\n"),
                Format::Json => print_json(&json!({
                    "k": k, "m": m, "closed_form": closed, "gordon_litherland": gl,
                })),
                Format::Csv => {
                    csv_line(&["k".into(), "m".into(), "closed_form".into(), "gordon_litherland".into()])
                        + &csv_line(&[k.to_string(), m.to_string(), closed.to_string(), gl.to_string()])
                }
            });
            return Ok(closed == gl);
        }
        Command::Goeritz { k, m } => {
            let fam = goeritz::goeritz_family_matrix(*k, *m)?;
            out.push_str(&match fmt {
                Format::Text | Format::Csv => {
                    format!("G'(K):\n{}G(K):\n{}mu={}\n", fam.full.dump(), fam.reduced.dump(), fam.mu)
                }
                Format::Json => print_json(&json!({
                    "k": k, "m": m,
                    "g_full": fam.full.dump().lines().collect::<Vec<_>>(),
                    "g": fam.reduced.dump().lines().collect::<Vec<_>>(),
                    "mu": fam.mu,
                })),
            });
        }
        Command::Family { q } => {
            let ledger = concordance::signature_ledger(*q)?;
            let rows: Vec<(String, i64, i64)> = ledger
                .iter()
                .map(|(f, sig)| (f.to_string(), f.word().writhe(), *sig))
                .collect();
            out.push_str(&match fmt {
                Format::Text => rows
                    .iter()
                    .enumerate()
                    .map(|(i, (l, w, sig))| format!("K{i} {l} writhe={w} signature={sig}\n"))
                    .collect(),
                Format::Json => print_json(&json!({
                    "q": q,
                    "members": rows.iter().map(|(l, w, sig)| json!({
                        "label": l, "writhe": w, "signature": sig,
                    })).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let mut s = csv_line(&["label".into(), "writhe".into(), "signature".into()]);
                    for (l, w, sig) in &rows {
                        s += &csv_line(&[l.clone(), w.to_string(), sig.to_string()]);
                    }
                    s
                }
            });
        }
        Command::Report { q } => {
            let qs: Vec<usize> = match q {
                Some(q) => vec![*q],
                None => (4..=s.verify.q_max).filter(|q| q % 3 != 0).collect(),
            };
            let reports = qs
                .iter()
                .map(|&q| concordance::distinctness_report(q))
                .collect::<Result<Vec<_>, _>>()?;
            out.push_str(&match fmt {
                Format::Text => reports.iter().map(|r| r.render()).collect::<Vec<_>>().join("\n"),
                Format::Json if reports.len() == 1 => reports[0].to_json() + "\n",
                Format::Json => serde_json::to_string_pretty(&reports)? + "\n",
                Format::Csv => {
                    let mut buf = Vec::new();
                    DistinctnessReport::write_csv(&reports, &mut buf)?;
                    String::from_utf8(buf)?
                }
            });
            return Ok(reports.iter().all(|r| r.pairwise_distinct()));
        }
        Command::Cert { braid: text, lspace } => {
            let b = braid_arg(text)?;
            let cert = burau::bridge_braid_certificate(&b, *lspace)?;
            out.push_str(&(cert.to_json() + "\n"));
            return Ok(cert.all_pass());
        }
        Command::BakerKegel { n } => {
            let cert = burau::baker_kegel_certificate(*n)?;
            out.push_str(&(cert.to_json() + "\n"));
            return Ok(cert.all_pass());
        }
        Command::Verify => {
            let results = verify::run_all(&s.verify);
            let ok = results.iter().all(|r| r.passed);
            out.push_str(&match fmt {
                Format::Json => print_json(&json!({ "passed": ok, "checks": results })),
                Format::Text | Format::Csv => {
                    let mut s: String = results.iter().map(|r| r.line() + "\n").collect();
                    let failed = results.iter().filter(|r| !r.passed).count();
                    s += &format!("{} checks, {failed} failed\n", results.len());
                    s
                }
            });
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    let _ = io::stdout().write_all(out.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
