//! The `gcs` command line.
//!
//! `--algebra` takes a JSON file or a catalog name. With a catalog name, omitted witness
//! files fall back to the entry's stored witnesses. Exit codes: 0 verified, 1 refuted or
//! inconclusive, 2 input error.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{self, CatalogEntry};
use crate::certificate::{Certificate, Verdict};
use crate::error::{Error, Result};
use crate::io;
use crate::lie::{ExtendedAlgebra, LieAlgebra};
use crate::linalg::Subspace;
use crate::omni::{classify_certificate, OmniSubspace, Twist};
use crate::spectral::{
    build_from_witness, obstruction_certificate, page_table, Method, SpectralContext,
};
use crate::structures::{
    complex_check, contact_check, jacobi_check, transversal_check, transversal_pair,
    ComplexStructure, JacobiTensor, TransversalPair,
};

#[derive(Parser, Debug)]
#[command(
    name = "gcs",
    version,
    about = "Exact checks for generalized contact structures on Lie algebras"
)]
pub struct Cli {
    /// Algebra JSON file or catalog name (L5_1 … L5_9).
    #[arg(long, global = true)]
    pub algebra: Option<String>,
    /// Print certificates as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the witness payload to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Direct,
    Spectral,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Direct => Method::Direct,
            MethodArg::Spectral => Method::Spectral,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Is the bivector a Jacobi tensor on the extended algebra?
    CheckJacobi {
        #[arg(long)]
        tensor: Option<PathBuf>,
    },
    /// Is the 1-form a contact form?
    CheckContact {
        #[arg(long)]
        form: Option<PathBuf>,
    },
    /// Is the endomorphism an integrable complex structure on the extended algebra?
    CheckComplex {
        #[arg(long)]
        phi: Option<PathBuf>,
    },
    /// Classify an omni subspace against the generalized contact axioms.
    CheckGcs {
        #[arg(long)]
        subspace: Option<PathBuf>,
        #[arg(long)]
        twist: Option<PathBuf>,
    },
    /// Is (J, K) a transversally complex Jacobi pair?
    Transversal {
        #[arg(long)]
        tensor: Option<PathBuf>,
        #[arg(long = "K")]
        k: Option<PathBuf>,
    },
    /// Decide whether (J, K) is induced by a generalized contact structure.
    Obstruction {
        #[arg(long)]
        tensor: Option<PathBuf>,
        #[arg(long = "K")]
        k: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Construct a generalized contact structure inducing (J, K).
    Build {
        #[arg(long)]
        tensor: Option<PathBuf>,
        #[arg(long = "K")]
        k: Option<PathBuf>,
    },
    /// Dimensions of the page-0 and page-1 components.
    Pages {
        #[arg(long)]
        tensor: Option<PathBuf>,
        #[arg(long = "K")]
        k: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// The summary table of the nine catalog algebras.
    Table,
}

/// What a command produced: a verdict, text for humans, JSON, and an optional payload.
pub struct Outcome {
    pub verdict: Verdict,
    pub text: String,
    pub json: Value,
    pub payload: Option<Value>,
}

impl Outcome {
    fn from_certificate(c: Certificate, payload: Option<Value>) -> Self {
        let text = format!(
            "{}: {}\n{}",
            c.check,
            verdict_word(c.verdict),
            serde_json::to_string_pretty(&c.witness).expect("json")
        );
        Outcome {
            verdict: c.verdict,
            json: c.to_json(),
            text,
            payload,
        }
    }
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Verified => "verified",
        Verdict::Refuted => "refuted",
        Verdict::Inconclusive => "inconclusive",
    }
}

struct Input {
    algebra: LieAlgebra,
    ext: ExtendedAlgebra,
    entry: Option<CatalogEntry>,
}

impl Input {
    fn load(arg: Option<&str>) -> Result<Self> {
        let arg = arg.ok_or_else(|| Error::input("--algebra is required"))?;
        if catalog::NAMES.contains(&arg) {
            let entry = catalog::catalog_get(arg)?;
            return Ok(Input {
                algebra: entry.algebra.clone(),
                ext: entry.ext.clone(),
                entry: Some(entry),
            });
        }
        let path = Path::new(arg);
        if !path.exists() {
            return Err(Error::input(format!(
                "{arg} is neither a file nor a catalog name ({})",
                catalog::NAMES.join(", ")
            )));
        }
        let algebra = io::algebra_from_json(&io::read_json(path)?).map_err(|e| e.at(arg))?;
        let ext = algebra.extend()?;
        Ok(Input {
            algebra,
            ext,
            entry: None,
        })
    }

    fn file_or<T>(
        &self,
        path: Option<&Path>,
        what: &str,
        parse: impl Fn(&Value) -> Result<T>,
        stored: impl Fn(&CatalogEntry) -> Option<T>,
    ) -> Result<T> {
        match path {
            Some(p) => parse(&io::read_json(p)?).map_err(|e| e.at(&p.display().to_string())),
            None => self
                .entry
                .as_ref()
                .and_then(stored)
                .ok_or_else(|| Error::input(format!("--{what} is required for this algebra"))),
        }
    }

    fn tensor(&self, path: Option<&Path>) -> Result<JacobiTensor> {
        let j = self.file_or(
            path,
            "tensor",
            |v| io::multivector_from_json(self.ext.space(), v),
            |e| e.spectral_witness.as_ref().map(|w| w.j.clone()),
        )?;
        JacobiTensor::new(&self.ext, j)
    }

    fn k(&self, path: Option<&Path>) -> Result<Subspace> {
        self.file_or(
            path,
            "K",
            |v| io::subspace_from_json(self.ext.space(), v),
            |e| e.spectral_witness.as_ref().map(|w| w.k.clone()),
        )
    }

    fn pair(&self, tensor: Option<&Path>, k: Option<&Path>) -> Result<TransversalPair> {
        let j = self.tensor(tensor)?;
        transversal_pair(&self.ext, &j, &self.k(k)?)
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    if let Command::Table = cli.command {
        let table = catalog::run_table()?;
        let mut text = table.to_string();
        for m in table.mismatches() {
            text.push_str(&format!("mismatch: {m}\n"));
        }
        return Ok(Outcome {
            verdict: Verdict::from_bool(table.matches()),
            text,
            json: table.to_json(),
            payload: None,
        });
    }
    let input = Input::load(cli.algebra.as_deref())?;
    let ext = &input.ext;
    let space = ext.space();
    let outcome = match &cli.command {
        Command::CheckJacobi { tensor } => {
            Outcome::from_certificate(jacobi_check(ext, &input.tensor(tensor.as_deref())?)?, None)
        }
        Command::CheckContact { form } => {
            let theta = input.file_or(
                form.as_deref(),
                "form",
                |v| io::form_from_json(input.algebra.space(), v),
                |e| e.contact_witness.clone(),
            )?;
            Outcome::from_certificate(contact_check(&input.algebra, &theta)?, None)
        }
        Command::CheckComplex { phi } => {
            let phi = input.file_or(
                phi.as_deref(),
                "phi",
                |v| ComplexStructure::new(ext, io::matrix_from_json(v, ext.dim())?),
                |e| e.complex_witness.clone(),
            )?;
            Outcome::from_certificate(complex_check(ext, &phi)?, None)
        }
        Command::CheckGcs { subspace, twist } => {
            let l: OmniSubspace = match subspace {
                Some(p) => io::omni_subspace_from_json(space, &io::read_json(p)?)
                    .map_err(|e| e.at(&p.display().to_string()))?,
                None => {
                    let entry = input
                        .entry
                        .as_ref()
                        .ok_or_else(|| Error::input("--subspace is required for this algebra"))?;
                    catalog::witness_gcs(entry)?.1
                }
            };
            let twist = match twist {
                Some(p) => Twist::new(
                    ext,
                    io::form_from_json(space, &io::read_json(p)?)
                        .map_err(|e| e.at(&p.display().to_string()))?,
                )?,
                None => Twist::zero(ext),
            };
            Outcome::from_certificate(classify_certificate(ext, &l, &twist)?, None)
        }
        Command::Transversal { tensor, k } => {
            let j = input.tensor(tensor.as_deref())?;
            let (cert, _) = transversal_check(ext, &j, &input.k(k.as_deref())?)?;
            Outcome::from_certificate(cert, None)
        }
        Command::Obstruction { tensor, k, method } => {
            let ctx = SpectralContext::new(input.pair(tensor.as_deref(), k.as_deref())?)?;
            Outcome::from_certificate(obstruction_certificate(&ctx, (*method).into())?, None)
        }
        Command::Build { tensor, k } => {
            let ctx = SpectralContext::new(input.pair(tensor.as_deref(), k.as_deref())?)?;
            match build_from_witness(&ctx)? {
                Some((w, l)) => {
                    let cert = classify_certificate(ext, &l, &Twist::zero(ext))?;
                    let payload = json!({
                        "omega": io::element_to_json(space, &w.omega),
                        "b": io::element_to_json(space, &w.b),
                        "subspace": io::omni_subspace_to_json(space, &l),
                    });
                    let mut out = Outcome::from_certificate(cert, Some(payload.clone()));
                    out.text.push_str(&format!(
                        "\nomega = {}\nB = {}",
                        space.render(&w.omega),
                        space.render(&w.b)
                    ));
                    out
                }
                None => {
                    Outcome::from_certificate(obstruction_certificate(&ctx, Method::Direct)?, None)
                }
            }
        }
        Command::Pages {
            tensor,
            k,
            max_degree,
        } => {
            let ctx = SpectralContext::new(input.pair(tensor.as_deref(), k.as_deref())?)?;
            let table = page_table(&ctx, *max_degree)?;
            let mut text = String::from("r  p  q  dim  split (i,j):dim\n");
            for row in table["pages"].as_array().expect("rows") {
                let split: Vec<String> = row["split"]
                    .as_array()
                    .expect("split")
                    .iter()
                    .map(|s| format!("({},{}):{}", s["i"], s["j"], s["dim"]))
                    .collect();
                text.push_str(&format!(
                    "{}  {}  {}  {:>3}  {}\n",
                    row["r"],
                    row["p"],
                    row["q"],
                    row["dim"],
                    split.join(" ")
                ));
            }
            Outcome {
                verdict: Verdict::Verified,
                text,
                json: table,
                payload: None,
            }
        }
        Command::Table => unreachable!("handled above"),
    };
    Ok(outcome)
}

/// Runs the CLI on `args`, returning the exit code and what would be printed to stdout.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match execute(&cli) {
        Ok(out) => {
            if let (Some(path), Some(payload)) = (&cli.out, &out.payload) {
                let text = serde_json::to_string_pretty(payload).expect("json");
                if let Err(e) = std::fs::write(path, text + "\n") {
                    return (2, format!("error: cannot write {}: {e}", path.display()));
                }
            }
            let shown = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("json")
            } else {
                out.text
            };
            (out.verdict.exit_code(), shown)
        }
        Err(e) => (2, format!("error: {e}")),
    }
}
