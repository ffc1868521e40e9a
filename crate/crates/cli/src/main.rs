use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use zlkb_core::braid::{apply_word, BraidWord};
use zlkb_core::expr::parse_object;
use zlkb_core::homotopy::reduce;
use zlkb_core::reps::{burau_matrix, dim, lkb_word, m_tau0, m_tau_k, perm_word, ptau_matrix};
use zlkb_core::ring::{Laurent2, Matrix, Vars};
use zlkb_core::stability::{roots, ChargeParams, Condition, StableBasis};
use zlkb_core::suites::{run_suite, SuiteConfig, SUITES};
use zlkb_core::Error;

#[derive(Parser)]
#[command(name = "zlkb", version, about = "Zigzag braid action, thin K0 and the LKB representation")]
struct Cli {
    /// Number of vertices of the zigzag algebra (braids on n+1 strands).
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// JSON charge parameters: {"n": .., "vectors": [[x, y], ..]}.
    #[arg(long, global = true, env = "ZLKB_CHARGE_FILE")]
    charge_file: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Rep {
    Lkb,
    Ptau,
    Perm,
    Burau,
    M0,
    Mk,
}

#[derive(Subcommand)]
enum Cmd {
    /// Apply a braid word to an object and print the reduced complex.
    Act {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        object: String,
    },
    /// Print a representation matrix.
    Matrix {
        #[arg(long, value_enum)]
        rep: Rep,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
        /// Index of the tau_k stables (source basis for ptau, target for mk).
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 50)]
        random: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Harder-Narasimhan filtration of an object.
    Hn {
        #[arg(long)]
        object: String,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Vertex { .. } | Error::Rank(..) | Error::Invalid(_) | Error::Charge(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Verification(other.to_string()),
        }
    }
}

fn word_arg(text: &str, n: usize) -> Result<BraidWord, Failure> {
    BraidWord::parse(text, n).map_err(|e| Failure::Usage(format!("--word: {e}")))
}

fn object_arg(text: &str, n: usize) -> Result<zlkb_core::complex::ProjComplex, Failure> {
    parse_object(text, n).map_err(|e| Failure::Usage(format!("--object: {e}")))
}

fn charges(cli: &Cli) -> Result<ChargeParams, Failure> {
    match &cli.charge_file {
        Some(p) => {
            let c = ChargeParams::load(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            if c.n() != cli.n {
                return Err(Failure::Usage(format!("charge file is for n = {}, not {}", c.n(), cli.n)));
            }
            Ok(c)
        }
        None => Ok(ChargeParams::default_for(cli.n)),
    }
}

fn no_csv(cli: &Cli) -> Result<(), Failure> {
    if cli.format == Format::Csv {
        return Err(Failure::Usage("csv output is only available for matrices".into()));
    }
    Ok(())
}

fn index_labels(n: usize, size: usize) -> Vec<String> {
    if size == dim(n) {
        roots(n).iter().map(|(i, j)| format!("({i},{j})")).collect()
    } else {
        (1..=size).map(|i| i.to_string()).collect()
    }
}

fn render_matrix<V: Vars>(cli: &Cli, rep: &str, word: &BraidWord, m: &Matrix<Laurent2<V>>, extra: Value) -> String {
    let rows = m.to_text_rows();
    let labels = index_labels(cli.n, m.rows());
    match cli.format {
        Format::Json => {
            let mut v = json!({"rep": rep, "n": cli.n, "word": word.to_string(), "index": labels, "rows": rows});
            if let (Value::Object(o), Value::Object(e)) = (&mut v, extra) {
                o.extend(e);
            }
            serde_json::to_string_pretty(&v).expect("json")
        }
        Format::Csv => {
            let mut out = format!("row,{}\n", labels.join(","));
            for (l, r) in labels.iter().zip(&rows) {
                out.push_str(&format!("{l},{}\n", r.join(",")));
            }
            out.trim_end().to_string()
        }
        Format::Text => {
            let width = rows.iter().flatten().chain(&labels).map(|s| s.len()).max().unwrap_or(1);
            let mut out = format!("{rep} n={} word={word}\n", cli.n);
            out.push_str(&format!("{:width$} ", ""));
            out.push_str(&labels.iter().map(|l| format!("{l:>width$}")).collect::<Vec<_>>().join(" "));
            for (l, r) in labels.iter().zip(&rows) {
                out.push_str(&format!("\n{l:>width$} "));
                out.push_str(&r.iter().map(|e| format!("{e:>width$}")).collect::<Vec<_>>().join(" "));
            }
            out
        }
    }
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let n = cli.n;
    if n < 2 {
        return Err(Failure::Usage(format!("--n must be at least 2, got {n}")));
    }
    match &cli.cmd {
        Cmd::Act { word, object } => {
            no_csv(cli)?;
            let w = word_arg(word, n)?;
            let x = reduce(&apply_word(&w, &object_arg(object, n)?)?);
            let out = match cli.format {
                Format::Text => x.to_string(),
                _ => serde_json::to_string_pretty(&json!({
                    "n": n, "word": w.to_string(), "display": x.to_string(), "complex": x.to_json()
                }))
                .expect("json"),
            };
            Ok((out, true))
        }
        Cmd::Matrix { rep, word, k } => {
            let w = word_arg(word, n)?;
            if *k > n {
                return Err(Failure::Usage(format!("--k must be at most n = {n}, got {k}")));
            }
            let out = match rep {
                Rep::Lkb => render_matrix(cli, "lkb", &w, &lkb_word(&w)?, json!({})),
                Rep::Ptau => {
                    let (p, target) = ptau_matrix(&w, &StableBasis::tau_k(n, *k)?)?;
                    render_matrix(cli, "ptau", &w, &p, json!({"source_tau": k, "target_tau": target.tau_class()}))
                }
                Rep::Perm => render_matrix(cli, "perm", &w, &perm_word(&w)?, json!({})),
                Rep::Burau => render_matrix(cli, "burau", &w, &burau_matrix(&w)?, json!({})),
                Rep::M0 => render_matrix(cli, "m0", &w, &m_tau0(n).0, json!({})),
                Rep::Mk => render_matrix(cli, "mk", &w, &m_tau_k(n, *k)?, json!({"k": k})),
            };
            Ok((out, true))
        }
        Cmd::Verify { suite, samples, random, seed } => {
            no_csv(cli)?;
            let cfg = SuiteConfig { n, samples: *samples, random: *random, seed: *seed, charges: charges(cli)? };
            let r = run_suite(suite, &cfg)?;
            let out = match cli.format {
                Format::Text => r.to_text().trim_end().to_string(),
                _ => serde_json::to_string_pretty(&r.to_json()).expect("json"),
            };
            Ok((out, r.passed()))
        }
        Cmd::Hn { object } => {
            no_csv(cli)?;
            let x = object_arg(object, n)?;
            let cond = Condition::new(StableBasis::tau0(n)?, charges(cli)?)?;
            let h = cond.hn(&x)?;
            let out = match cli.format {
                Format::Text => {
                    let mut lines = vec![format!("object {}", reduce(&x))];
                    for p in &h.pieces {
                        lines.push(format!(
                            "stable P({},{}){{{}}}<{}> phase ({},{}) shift {}",
                            p.label.0, p.label.1, p.k, p.l, p.phase.root.0, p.phase.root.1, p.phase.shift
                        ));
                    }
                    for (r, c) in &h.k0 {
                        lines.push(format!("k0 ({},{}): {}", r.0, r.1, c.to_text()));
                    }
                    lines.join("\n")
                }
                _ => {
                    let mut v = h.to_json();
                    v["n"] = json!(n);
                    v["object"] = json!(reduce(&x).to_string());
                    serde_json::to_string_pretty(&v).expect("json")
                }
            };
            Ok((out, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((out, passed)) => {
            println!("{out}");
            ExitCode::from(if passed { 0 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
