//! Command-line front end for schur-kit.
//!
//! Every subcommand prints one result to standard output in JSON (default),
//! CSV or plain text. Exit codes: 0 success, 2 parse or validation error,
//! 3 resource limit exceeded, 4 internal consistency failure.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};

use schur_kit::characters::{
    character_table_with_limit, dim_gl, dim_sym_det, dim_sym_hook, kronecker, mn_character,
    ClassPartition, DEFAULT_MAX_TABLE_N,
};
use schur_kit::lr::{enumerate_lr_tableaux, lr_coefficient, pieri, restrict_branch, single_box_restriction};
use schur_kit::partitions::{graded_order, Orientation, Partition};
use schur_kit::plethysm::{compose_with, ComposeOptions};
use schur_kit::resolutions::{
    efw_plan, exactness_report, koszul_complex, plan_betti_table, plan_from_degree_sequence,
    DegreeSequence, PureResolutionPlan,
};
use schur_kit::tca::{
    free_module_hilbert, hilbert_csv, tca_decompose, tca_decompose_generic, FreeModuleSpec,
    PolynomialTcaSpec,
};
use schur_kit::vcat::{
    coaddition, compose_transpose, comultiplication, enhanced_hilbert, higher_derivative,
    hilbert_series, matchings, pointwise_tensor, schur_derivative, tensor, transpose_object,
    BiVObject, VObject,
};
use schur_kit::Error;

/// Environment variable naming the config file.
pub const CONFIG_ENV: &str = "SCHUR_KIT_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Settings read from the flat `key = value` config file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub cache_size: usize,
    pub max_table_n: usize,
    pub max_degree_default: usize,
    pub output_format: Format,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            cache_size: schur_kit::cache::DEFAULT_CAPACITY,
            max_table_n: DEFAULT_MAX_TABLE_N,
            max_degree_default: 12,
            output_format: Format::Json,
        }
    }
}

impl CliConfig {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut cfg = CliConfig::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::Parse(format!("config line {}: expected key=value", lineno + 1)));
            };
            let (key, value) = (key.trim(), value.trim());
            let count = || -> Result<usize, Error> {
                match value.parse::<usize>() {
                    Ok(v) if v > 0 => Ok(v),
                    _ => Err(Error::Parse(format!("config {key}: expected a positive integer, got {value:?}"))),
                }
            };
            match key {
                "cache_size" => cfg.cache_size = count()?,
                "max_table_n" => cfg.max_table_n = count()?,
                "max_degree_default" => cfg.max_degree_default = count()?,
                "output_format" => {
                    cfg.output_format = Format::from_str(value, true)
                        .map_err(|_| Error::Parse(format!("config output_format: unknown format {value:?}")))?
                }
                other => return Err(Error::Parse(format!("config: unknown key {other:?}"))),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "schur-kit",
    version,
    about = "Exact computations with partitions, Schur functors and twisted commutative algebras",
    long_about = "Exact computations with partitions, Schur functors and twisted commutative algebras.\n\n\
Partitions are written [5,3,2] (or [] for the empty partition). Objects are sums such as \
\"S[2] + 2·S[1,1]\", \"2*[1] + [2]\", \"C<3>\" for the regular representation, or the JSON schema \
printed by the object-valued subcommands.\n\n\
The config file named by SCHUR_KIT_CONFIG holds key=value lines: cache_size, max_table_n, \
max_degree_default, output_format."
)]
pub struct Cli {
    /// Output format (default from config, else json).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Littlewood–Richardson coefficient c^ν_{λμ}: the number of LR tableaux of shape ν/λ and
    /// content μ, equal to the multiplicity of S_ν in S_λ ⊗ S_μ.
    Lr(LrArgs),
    /// Tensor product S_λ ⊗ S_μ (or of two objects) decomposed by the LR rule.
    Tensor(TensorArgs),
    /// Kronecker coefficient g_{λμν}, the multiplicity of M_ν in M_λ ⊗ M_μ for S_n. Without
    /// --nu, the full decomposition of M_λ ⊗ M_μ.
    Kron(KronArgs),
    /// Pieri rule: shapes obtained from λ by adding a horizontal (or vertical) strip of the given size.
    Pieri(PieriArgs),
    /// Restriction of M_ν. By default to S_{n-1} (remove one corner); with --split n,m to
    /// S_n × S_m with coefficients c^ν_{λμ}; with --all over every split.
    Branch(BranchArgs),
    /// Dimensions: --sym λ gives dim M_λ (hook-length or determinantal formula); --gl λ --rank n
    /// gives dim V_λ(Cⁿ) by the hook-content formula.
    Dim(DimArgs),
    /// Character value χ_λ(ρ) by the Murnaghan–Nakayama rule.
    Char(CharArgs),
    /// Character table of S_n; rows and columns in lexicographically decreasing order.
    Table(TableArgs),
    /// Composition (plethysm) W ∘ V up to a maximum degree.
    Plethysm(PlethysmArgs),
    /// Schur derivative D (remove one box), iterated --times, or the skewing operator D_ν.
    Derive(DeriveArgs),
    /// Co-addition S_λ ↦ Σ c^λ_{μν} S_μ ⊠ S_ν.
    Coadd(ObjectArgs),
    /// Co-multiplication S_λ ↦ Σ g_{λμν} S_μ ⊠ S_ν.
    Comult(ObjectArgs),
    /// Transpose S_λ ↦ S_{λ†}.
    Transpose(ObjectArgs),
    /// Hilbert series coefficients dim(V_n)/n!, or with --tca the graded dimensions of a free
    /// module A ⊗ G evaluated at a finite rank.
    Hilbert(HilbertArgs),
    /// Enhanced Hilbert series coefficients trace(c_λ | V)/λ!, keyed by cycle type λ.
    Ehilbert(EhilbertArgs),
    /// Truncated decomposition of a polynomial tca Sym(F).
    TcaDecompose(TcaArgs),
    /// Eisenbud–Fløystad–Weyman pure-resolution plan from (α, β, n_rows) or a degree sequence.
    Efw(PlanArgs),
    /// Betti table of an EFW plan specialized to Cʳ.
    Betti(BettiArgs),
    /// Builds the Koszul complex over Sym(Cʳ) and reports its homology degree by degree.
    KoszulCheck(KoszulArgs),
    /// The matchings object Σ_{λ⊢n} S_{2λ} = Sym^n(Sym²).
    Matchings(MatchingsArgs),
}

#[derive(Args, Debug)]
struct BatchArgs {
    /// File with one query per line (three partitions separated by whitespace).
    #[arg(long)]
    batch: Option<PathBuf>,
    /// Worker threads for batch queries.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
struct LrArgs {
    #[arg(long)]
    nu: Option<Partition>,
    #[arg(long)]
    lambda: Option<Partition>,
    #[arg(long)]
    mu: Option<Partition>,
    /// List the LR tableaux with their reading words.
    #[arg(long)]
    tableaux: bool,
    /// Batch lines read `nu lambda mu`.
    #[command(flatten)]
    batch: BatchArgs,
}

#[derive(Args, Debug)]
struct TensorArgs {
    /// Partition or object.
    #[arg(long)]
    lambda: VObject,
    /// Partition or object.
    #[arg(long)]
    mu: VObject,
}

#[derive(Args, Debug)]
struct KronArgs {
    #[arg(long)]
    lambda: Option<Partition>,
    #[arg(long)]
    mu: Option<Partition>,
    #[arg(long)]
    nu: Option<Partition>,
    /// Batch lines read `lambda mu nu`.
    #[command(flatten)]
    batch: BatchArgs,
}

#[derive(Args, Debug)]
struct PieriArgs {
    #[arg(long)]
    lambda: Partition,
    #[arg(long)]
    size: usize,
    /// Add vertical strips (induction with the sign representation).
    #[arg(long)]
    vertical: bool,
}

#[derive(Args, Debug)]
struct BranchArgs {
    #[arg(long)]
    nu: Partition,
    /// Restrict to S_n × S_m, written n,m.
    #[arg(long, conflicts_with = "all")]
    split: Option<String>,
    /// Every split n + m = |ν|.
    #[arg(long)]
    all: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DimMethod {
    Hook,
    Det,
}

#[derive(Args, Debug)]
struct DimArgs {
    #[arg(long, conflicts_with = "gl")]
    sym: Option<Partition>,
    #[arg(long, requires = "rank")]
    gl: Option<Partition>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long, value_enum, default_value = "hook")]
    method: DimMethod,
}

#[derive(Args, Debug)]
struct CharArgs {
    #[arg(long)]
    lambda: Partition,
    /// Cycle type of the conjugacy class.
    #[arg(long)]
    class: Partition,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct PlethysmArgs {
    #[arg(long)]
    outer: VObject,
    #[arg(long)]
    inner: VObject,
    #[arg(long)]
    max_degree: Option<usize>,
    /// Permit an S_∅ term in the inner object (outer must be finite).
    #[arg(long)]
    allow_constant: bool,
    /// Output (W ∘ V)† via the parity rule.
    #[arg(long)]
    transpose: bool,
}

#[derive(Args, Debug)]
struct ObjectArgs {
    #[arg(long)]
    object: VObject,
}

#[derive(Args, Debug)]
struct DeriveArgs {
    #[arg(long)]
    object: VObject,
    /// Apply the skewing operator D_ν instead of D.
    #[arg(long, conflicts_with = "times")]
    nu: Option<Partition>,
    #[arg(long, default_value_t = 1)]
    times: usize,
}

#[derive(Args, Debug)]
struct HilbertArgs {
    #[arg(long, conflicts_with = "tca")]
    object: Option<VObject>,
    #[arg(long)]
    order: usize,
    /// tca: c1, u1:<dim U>, ck:<k>, or an object of generators.
    #[arg(long, requires = "rank")]
    tca: Option<String>,
    /// Generator object of the free module (default S[]).
    #[arg(long)]
    generators: Option<VObject>,
    /// Internal-degree shift; the generators sit in degree -twist.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    twist: i64,
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Args, Debug)]
struct EhilbertArgs {
    #[arg(long)]
    object: VObject,
    #[arg(long)]
    order: usize,
}

#[derive(Args, Debug)]
struct TcaArgs {
    /// c1, u1:<dim U>, ck:<k>, or an object of generators.
    #[arg(long)]
    tca: String,
    #[arg(long)]
    max_degree: Option<usize>,
    /// Use plethysm even when the Cauchy formula applies.
    #[arg(long)]
    generic: bool,
}

#[derive(Args, Debug)]
struct PlanArgs {
    #[arg(long, requires_all = ["beta", "n_rows"])]
    alpha: Option<Partition>,
    #[arg(long)]
    beta: Option<Partition>,
    #[arg(long)]
    n_rows: Option<usize>,
    /// Degree sequence d_0,d_1,…,d_n.
    #[arg(long, conflicts_with_all = ["alpha", "random"])]
    degrees: Option<String>,
    /// Sample random plans instead (see --seed, --count, --max-rows).
    #[arg(long, conflicts_with = "alpha")]
    random: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 5)]
    max_rows: usize,
}

#[derive(Args, Debug)]
struct BettiArgs {
    #[command(flatten)]
    plan: PlanArgs,
    #[arg(long)]
    rank: usize,
}

#[derive(Args, Debug)]
struct KoszulArgs {
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    max_degree: usize,
}

#[derive(Args, Debug)]
struct MatchingsArgs {
    #[arg(long)]
    n: usize,
}

/// One result in all three formats.
struct Output {
    json: Value,
    text: String,
    csv: String,
}

impl Output {
    fn scalar(name: &str, value: impl ToString) -> Output {
        let v = value.to_string();
        Output {
            json: serde_json::from_str(&v).unwrap_or(Value::String(v.clone())),
            text: v.clone(),
            csv: format!("{name}\n{v}\n"),
        }
    }

    fn render(&self, format: Format) -> String {
        let mut s = match format {
            Format::Json => self.json.to_string(),
            Format::Text => self.text.clone(),
            Format::Csv => self.csv.clone(),
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Validation(_) => 2,
        Error::ResourceLimit { .. } => 3,
        Error::Integrity(_) => 4,
    }
}

/// Parses `args` (including the program name), runs one command and writes its output.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let config = match std::env::var_os(CONFIG_ENV) {
        Some(path) => match CliConfig::load(Path::new(&path)) {
            Ok(c) => c,
            Err(e) => {
                let _ = writeln!(err, "{e}");
                return exit_code(&e);
            }
        },
        None => CliConfig::default(),
    };
    schur_kit::cache::set_capacity(config.cache_size);
    let format = cli.format.unwrap_or(config.output_format);
    match execute(cli.command, &config) {
        Ok(output) => {
            let _ = write!(out, "{}", output.render(format));
            0
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            exit_code(&e)
        }
    }
}

fn execute(command: Command, config: &CliConfig) -> Result<Output, Error> {
    match command {
        Command::Lr(a) => lr(a),
        Command::Tensor(a) => Ok(object_output(&tensor(&a.lambda, &a.mu))),
        Command::Kron(a) => kron(a),
        Command::Pieri(a) => {
            let orientation = if a.vertical { Orientation::Vertical } else { Orientation::Horizontal };
            Ok(partition_list(&pieri(&a.lambda, a.size, orientation)))
        }
        Command::Branch(a) => branch(a),
        Command::Dim(a) => dim(a),
        Command::Char(a) => {
            let v = mn_character(&a.lambda, &ClassPartition::new(a.class))?;
            Ok(Output::scalar("character", v))
        }
        Command::Table(a) => {
            let t = character_table_with_limit(a.n, config.max_table_n)?;
            let json = json!({
                "n": t.n(),
                "irreps": t.irreps().iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
                "classes": t.classes().iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
                "values": (0..t.irreps().len()).map(|i| t.row(i).to_vec()).collect::<Vec<_>>(),
            });
            let mut text = String::new();
            for (i, l) in t.irreps().iter().enumerate() {
                let row: Vec<String> = t.row(i).iter().map(|v| format!("{v:>4}")).collect();
                let _ = writeln!(text, "{:<16}{}", l.to_string(), row.join(""));
            }
            Ok(Output { json, text, csv: t.to_csv() })
        }
        Command::Plethysm(a) => {
            let d = a.max_degree.unwrap_or(config.max_degree_default);
            let options = ComposeOptions { allow_constant: a.allow_constant };
            let r = if a.transpose {
                if a.allow_constant {
                    return Err(Error::Validation("--transpose does not take --allow-constant".into()));
                }
                compose_transpose(&a.outer, &a.inner, d)?
            } else {
                compose_with(&a.outer, &a.inner, d, options)?
            };
            Ok(object_output(&r))
        }
        Command::Derive(a) => {
            let r = match &a.nu {
                Some(nu) => higher_derivative(nu, &a.object),
                None => (0..a.times).fold(a.object.clone(), |v, _| schur_derivative(&v)),
            };
            Ok(object_output(&r))
        }
        Command::Coadd(a) => Ok(bi_output(&coaddition(&a.object))),
        Command::Comult(a) => Ok(bi_output(&comultiplication(&a.object))),
        Command::Transpose(a) => Ok(object_output(&transpose_object(&a.object))),
        Command::Hilbert(a) => hilbert(a),
        Command::Ehilbert(a) => {
            let h = enhanced_hilbert(&a.object, a.order);
            let mut keys: Vec<&Partition> = h.keys().collect();
            keys.sort_by(|x, y| graded_order(x, y));
            let json = Value::Array(
                keys.iter()
                    .map(|k| json!({"class": k.parts(), "coefficient": h[*k].to_string()}))
                    .collect(),
            );
            let mut text = String::new();
            let mut csv = String::from("class,coefficient\n");
            for k in keys {
                let _ = writeln!(text, "t^{k}: {}", h[k]);
                let _ = writeln!(csv, "\"{k}\",{}", h[k]);
            }
            Ok(Output { json, text, csv })
        }
        Command::TcaDecompose(a) => {
            let spec = parse_tca(&a.tca)?;
            let d = a.max_degree.unwrap_or(config.max_degree_default);
            let r = if a.generic { tca_decompose_generic(&spec, d)? } else { tca_decompose(&spec, d)? };
            Ok(object_output(&r))
        }
        Command::Efw(a) => {
            let plans = plans(&a)?;
            let json = if plans.len() == 1 && !a.random {
                serde_json::to_value(&plans[0]).expect("serializable")
            } else {
                serde_json::to_value(&plans).expect("serializable")
            };
            let mut text = String::new();
            let mut csv = String::from("alpha,beta,n_rows,degrees,shapes,valid\n");
            for p in &plans {
                let shapes: Vec<String> = p.shapes.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    text,
                    "α={} β={} n={} d={} shapes={} valid={}",
                    p.alpha, p.beta, p.n_rows, p.d, shapes.join(" "), p.report.is_valid()
                );
                let _ = writeln!(
                    csv,
                    "\"{}\",\"{}\",{},\"{}\",\"{}\",{}",
                    p.alpha, p.beta, p.n_rows, p.d, shapes.join(" "), p.report.is_valid()
                );
            }
            Ok(Output { json, text, csv })
        }
        Command::Betti(a) => {
            let plans = plans(&a.plan)?;
            let [plan] = plans.as_slice() else {
                return Err(Error::Validation("betti needs exactly one plan".into()));
            };
            let t = plan_betti_table(plan, a.rank);
            Ok(Output {
                json: serde_json::to_value(&t).expect("serializable"),
                text: t.to_text(),
                csv: t.to_csv(),
            })
        }
        Command::KoszulCheck(a) => {
            let c = koszul_complex(a.rank, a.max_degree)?;
            let report = exactness_report(&c)?;
            let summary = report.to_string();
            let mut json = serde_json::to_value(&report).expect("serializable");
            json["summary"] = Value::String(summary.clone());
            let mut csv = String::from("spot,degree,dimension\n");
            for e in &report.nonzero {
                let _ = writeln!(csv, "{},{},{}", e.spot, e.degree, e.dimension);
            }
            Ok(Output { json, text: summary, csv })
        }
        Command::Matchings(a) => Ok(object_output(&matchings(a.n))),
    }
}

fn object_output(v: &VObject) -> Output {
    let mut csv = String::from("partition,multiplicity\n");
    for (p, m) in v.terms() {
        let _ = writeln!(csv, "\"{p}\",{m}");
    }
    Output {
        json: v.to_json_value(),
        text: v.to_string(),
        csv,
    }
}

fn bi_output(b: &BiVObject) -> Output {
    let mut terms: Vec<(&(Partition, Partition), &BigUint)> = b.iter().collect();
    terms.sort_by(|x, y| graded_order(&x.0 .0, &y.0 .0).then_with(|| graded_order(&x.0 .1, &y.0 .1)));
    let json = json!({
        "terms": terms.iter().map(|((l, r), m)| json!({
            "left": l.parts(), "right": r.parts(), "multiplicity": m.to_string()
        })).collect::<Vec<_>>()
    });
    let text = if terms.is_empty() {
        "0".to_string()
    } else {
        terms
            .iter()
            .map(|((l, r), m)| {
                if **m == BigUint::from(1u32) {
                    format!("S{l}⊠S{r}")
                } else {
                    format!("{m}·S{l}⊠S{r}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    let mut csv = String::from("left,right,multiplicity\n");
    for ((l, r), m) in &terms {
        let _ = writeln!(csv, "\"{l}\",\"{r}\",{m}");
    }
    Output { json, text, csv }
}

fn partition_list(ps: &[Partition]) -> Output {
    Output {
        json: Value::Array(ps.iter().map(|p| json!(p.parts())).collect()),
        text: ps.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
        csv: std::iter::once("partition".to_string())
            .chain(ps.iter().map(|p| format!("\"{p}\"")))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn read_batch(path: &Path) -> Result<Vec<[Partition; 3]>, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read batch file {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(Error::Parse(format!("batch line {}: expected three partitions", i + 1)));
        };
        out.push([a.parse()?, b.parse()?, c.parse()?]);
    }
    Ok(out)
}

/// Evaluates batch queries, in parallel when `jobs` is given; results keep input order.
fn run_batch<F>(batch: &BatchArgs, names: [&str; 3], value: &str, f: F) -> Result<Option<Output>, Error>
where
    F: Fn(&[Partition; 3]) -> String + Sync,
{
    let Some(path) = &batch.batch else {
        return Ok(None);
    };
    let queries = read_batch(path)?;
    let results: Vec<String> = match batch.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::Validation(format!("cannot start {jobs} workers: {e}")))?
            .install(|| queries.par_iter().map(&f).collect()),
        None => queries.iter().map(&f).collect(),
    };
    let json = Value::Array(
        queries
            .iter()
            .zip(&results)
            .map(|(q, r)| {
                let mut obj = serde_json::Map::new();
                for (name, p) in names.iter().zip(q) {
                    obj.insert(name.to_string(), json!(p.parts()));
                }
                obj.insert(value.to_string(), serde_json::from_str(r).unwrap_or(json!(r)));
                Value::Object(obj)
            })
            .collect(),
    );
    let text = results.join("\n");
    let mut csv = format!("{},{},{},{value}\n", names[0], names[1], names[2]);
    for (q, r) in queries.iter().zip(&results) {
        let _ = writeln!(csv, "\"{}\",\"{}\",\"{}\",{r}", q[0], q[1], q[2]);
    }
    Ok(Some(Output { json, text, csv }))
}

fn require<T: Clone>(v: &Option<T>, name: &str) -> Result<T, Error> {
    v.clone().ok_or_else(|| Error::Validation(format!("missing --{name}")))
}

fn lr(a: LrArgs) -> Result<Output, Error> {
    if let Some(out) = run_batch(&a.batch, ["nu", "lambda", "mu"], "coefficient", |q| {
        lr_coefficient(&q[0], &q[1], &q[2]).to_string()
    })? {
        return Ok(out);
    }
    let (nu, lambda, mu) = (require(&a.nu, "nu")?, require(&a.lambda, "lambda")?, require(&a.mu, "mu")?);
    if !a.tableaux {
        return Ok(Output::scalar("coefficient", lr_coefficient(&nu, &lambda, &mu)));
    }
    let tableaux = enumerate_lr_tableaux(&nu, &lambda, &mu);
    let json = json!({
        "coefficient": tableaux.len(),
        "tableaux": tableaux.iter().map(|t| json!({
            "rows": t.rows, "reading_word": t.reading_word_string()
        })).collect::<Vec<_>>(),
    });
    let mut text = format!("{}\n", tableaux.len());
    let mut csv = String::from("reading_word\n");
    for t in &tableaux {
        let _ = writeln!(text, "{}", t.reading_word_string());
        let _ = writeln!(csv, "{}", t.reading_word_string());
    }
    Ok(Output { json, text, csv })
}

fn kron(a: KronArgs) -> Result<Output, Error> {
    if let Some(out) = run_batch(&a.batch, ["lambda", "mu", "nu"], "coefficient", |q| {
        if q[0].size() == q[1].size() && q[1].size() == q[2].size() {
            kronecker(&q[0], &q[1], &q[2]).to_string()
        } else {
            "0".to_string()
        }
    })? {
        return Ok(out);
    }
    let (lambda, mu) = (require(&a.lambda, "lambda")?, require(&a.mu, "mu")?);
    check_degree(&lambda)?;
    if lambda.size() != mu.size() {
        return Err(Error::Validation(format!("{lambda} and {mu} have different sizes")));
    }
    match &a.nu {
        Some(nu) if nu.size() != lambda.size() => {
            Err(Error::Validation(format!("{nu} has size {}, expected {}", nu.size(), lambda.size())))
        }
        Some(nu) => Ok(Output::scalar("coefficient", kronecker(&lambda, &mu, nu))),
        None => Ok(object_output(&pointwise_tensor(&VObject::simple(lambda), &VObject::simple(mu)))),
    }
}

fn check_degree(p: &Partition) -> Result<(), Error> {
    let limit = schur_kit::characters::MAX_CHARACTER_DEGREE;
    if p.size() > limit {
        return Err(Error::ResourceLimit { what: "degree", requested: p.size(), limit });
    }
    Ok(())
}

fn branch(a: BranchArgs) -> Result<Output, Error> {
    let split = match &a.split {
        Some(s) => {
            let nums: Vec<usize> = s
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad split {s:?}"))))
                .collect::<Result<_, _>>()?;
            let [n, m] = nums.as_slice() else {
                return Err(Error::Parse(format!("split must be n,m, got {s:?}")));
            };
            Some((*n, *m))
        }
        None if a.all => None,
        None => return Ok(partition_list(&single_box_restriction(&a.nu))),
    };
    let table = restrict_branch(&a.nu, split)?;
    let mut rows: Vec<(&(Partition, Partition), &u64)> = table.iter().collect();
    rows.sort_by(|x, y| graded_order(&x.0 .0, &y.0 .0).then_with(|| graded_order(&x.0 .1, &y.0 .1)));
    let json = Value::Array(
        rows.iter()
            .map(|((l, m), c)| json!({"lambda": l.parts(), "mu": m.parts(), "multiplicity": c}))
            .collect(),
    );
    let text = rows
        .iter()
        .map(|((l, m), c)| format!("{c}·M{l}⊠M{m}"))
        .collect::<Vec<_>>()
        .join(" + ");
    let mut csv = String::from("lambda,mu,multiplicity\n");
    for ((l, m), c) in rows {
        let _ = writeln!(csv, "\"{l}\",\"{m}\",{c}");
    }
    Ok(Output { json, text, csv })
}

fn dim(a: DimArgs) -> Result<Output, Error> {
    match (&a.sym, &a.gl) {
        (Some(l), None) => {
            let d = match a.method {
                DimMethod::Hook => dim_sym_hook(l),
                DimMethod::Det => dim_sym_det(l),
            };
            Ok(Output::scalar("dimension", d))
        }
        (None, Some(l)) => Ok(Output::scalar("dimension", dim_gl(l, require(&a.rank, "rank")?))),
        _ => Err(Error::Validation("give exactly one of --sym or --gl".into())),
    }
}

fn parse_tca(s: &str) -> Result<PolynomialTcaSpec, Error> {
    let s = s.trim();
    let number = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad tca spec {s:?}")))
    };
    if s == "c1" {
        Ok(PolynomialTcaSpec::sym_c1())
    } else if let Some(u) = s.strip_prefix("u1:") {
        Ok(PolynomialTcaSpec::sym_u1(number(u)?))
    } else if let Some(k) = s.strip_prefix("ck:") {
        PolynomialTcaSpec::sym_ck(number(k)?)
    } else {
        PolynomialTcaSpec::sym_of(s.parse()?)
    }
}

fn hilbert(a: HilbertArgs) -> Result<Output, Error> {
    if let Some(t) = &a.tca {
        let spec = FreeModuleSpec::new(
            parse_tca(t)?,
            a.generators.clone().unwrap_or_else(|| VObject::simple(Partition::empty())),
            a.twist,
        )?;
        let seq = free_module_hilbert(&spec, require(&a.rank, "rank")?, a.order);
        return Ok(Output {
            json: Value::Array(seq.iter().map(|x| Value::String(x.to_string())).collect()),
            text: seq.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
            csv: hilbert_csv(&seq),
        });
    }
    let v = require(&a.object, "object")?;
    let h = hilbert_series(&v, a.order);
    let mut csv = String::from("degree,coefficient\n");
    for (n, c) in h.iter().enumerate() {
        let _ = writeln!(csv, "{n},{c}");
    }
    Ok(Output {
        json: Value::Array(h.iter().map(|x| Value::String(x.to_string())).collect()),
        text: h.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
        csv,
    })
}

fn parse_degrees(s: &str) -> Result<DegreeSequence, Error> {
    let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    let degrees = inner
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad degree sequence {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    DegreeSequence::new(degrees)
}

/// A random valid `(α, β, n_rows)` with `n_rows ≤ max_rows`.
pub fn random_plan(rng: &mut impl Rng, max_rows: usize) -> Result<PureResolutionPlan, Error> {
    let n_rows = rng.gen_range(1..=max_rows.max(1));
    let mut parts: Vec<usize> = (0..n_rows).map(|_| rng.gen_range(0..=4)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let alpha = Partition::new(parts)?;
    let mut beta = alpha.parts().to_vec();
    if beta.is_empty() {
        beta.push(0);
    }
    beta[0] = alpha.first() + rng.gen_range(1..=3);
    efw_plan(&alpha, &Partition::new(beta)?, n_rows)
}

fn plans(a: &PlanArgs) -> Result<Vec<PureResolutionPlan>, Error> {
    if a.random {
        let mut rng = StdRng::seed_from_u64(a.seed);
        return (0..a.count).map(|_| random_plan(&mut rng, a.max_rows)).collect();
    }
    if let Some(d) = &a.degrees {
        return Ok(vec![plan_from_degree_sequence(&parse_degrees(d)?)?]);
    }
    let alpha = require(&a.alpha, "alpha")?;
    let beta = require(&a.beta, "beta")?;
    let n = require(&a.n_rows, "n-rows")?;
    Ok(vec![efw_plan(&alpha, &beta, n)?])
}
