//! Command-line front end.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pivotal::extensions::{mobius, LovaszPivotal};
use pivotal::io::{
    parse_lat, parse_lft, parse_pbf, parse_pvf, parse_tt, write_dd, write_lft, write_lvf, write_mlf, write_pbf,
    write_pvf, write_tt, PvfFile, TextValue,
};
use pivotal::pivotal::{conflict_classes, Conflict, Occurrence};
use pivotal::scalar::parse_rational;
use pivotal::{
    check_componentwise, check_decomposition, minimal_um_class, synthesize_componentwise, synthesize_pivotal,
    um_algebra, um_membership, AlgebraOp, ClassId, DecompositionReport, Diagram, Elem, FiniteLattice, FunctionTable,
    Ite, LovaszForm, Median, MleAffine, MultilinearForm, PhiMedian, Pivotal, Rational, Rule, Sort, TNorm,
    TotalOrder, VSet,
};
use serde_json::{json, Value as Json};
use thiserror::Error;

use crate::expr::{parse_expression, Domain, Expr, ExprError, Table};

pub const DEFAULT_MAX_ARITY: usize = 12;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        source: pivotal::Error,
    },
    #[error("expression: {0}")]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Lib(#[from] pivotal::Error),
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

#[derive(Debug, Parser)]
#[command(name = "pivotal", version, about = "Pivotal decompositions of finite-domain functions")]
pub struct Cli {
    /// Machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// A function given as a file or as an expression.
#[derive(Debug, Clone, Args)]
pub struct Input {
    /// Table file (.tt, .pbf or .lft).
    #[arg(short = 'f', long = "file", conflicts_with = "expr")]
    pub file: Option<PathBuf>,
    /// Expression such as `x1 & !x2`.
    #[arg(value_name = "EXPR")]
    pub expr: Option<String>,
    /// Sort of an expression: bool, rat or lat:<file.lat>.
    #[arg(long, default_value = "bool")]
    pub sort: String,
    /// Arity of an expression; defaults to its largest variable index.
    #[arg(long)]
    pub arity: Option<usize>,
    /// Use the grid {0, 1/d, ..., 1} as the domain of rational functions.
    #[arg(long, value_name = "d")]
    pub grid: Option<usize>,
    /// Extension used to sample a .pbf table on a grid.
    #[arg(long, value_enum, default_value = "lovasz")]
    pub extension: Extension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Extension {
    Lovasz,
    Mle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UmcOp {
    Meet,
    Join,
    Complement,
    Show,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse an expression and print it with its table.
    Parse(Input),
    /// Evaluate at a point.
    Eval {
        #[command(flatten)]
        input: Input,
        /// Point, e.g. `1,0,1`.
        #[arg(short = 'x', long = "point")]
        point: String,
    },
    /// Cofactor f(x_k = a).
    Cofactor {
        #[command(flatten)]
        input: Input,
        /// Argument (1-based).
        #[arg(short = 'k')]
        k: usize,
        /// Value substituted.
        #[arg(short = 'a')]
        a: String,
    },
    /// Section f_S^a keeping the arguments in S.
    Section {
        #[command(flatten)]
        input: Input,
        /// Kept arguments (1-based), e.g. `1,3`.
        #[arg(long = "args")]
        args: String,
        /// Point supplying the fixed coordinates.
        #[arg(short = 'x', long = "point")]
        point: String,
    },
    /// List essential arguments.
    Essential(Input),
    /// Decide equivalence up to renaming and identification of arguments.
    Equiv {
        #[command(flatten)]
        input: Input,
        /// Second function as a file.
        #[arg(short = 'g', long = "other", conflicts_with = "other_expr")]
        other: Option<PathBuf>,
        /// Second function as an expression in the same sort.
        #[arg(long = "other-expr")]
        other_expr: Option<String>,
    },
    /// Synthesize a single pivotal function or report a conflict.
    SynthPi(Input),
    /// Synthesize one pivotal function per argument or report conflicts.
    #[command(visible_alias = "cpivot")]
    SynthCpi {
        #[command(flatten)]
        input: Input,
        /// Explain the conflicts of this point instead of the first ones.
        #[arg(long = "at")]
        at: Option<String>,
    },
    /// Check a decomposition against a named or file-given pivotal function.
    CheckPi {
        #[command(flatten)]
        input: Input,
        /// ite, median, mle, tnorm-min, tnorm-lukasiewicz, lovasz or a .pvf file.
        #[arg(long = "pi")]
        pi: String,
    },
    /// Membership of a Boolean function in the sixteen unary-section classes.
    Classify(Input),
    /// Operations on classes given by name, number or set, e.g. `{id,neg}`.
    Umc {
        #[arg(value_enum)]
        op: UmcOp,
        a: String,
        b: Option<String>,
    },
    /// Multilinear extension of a pseudo-Boolean function.
    Mle {
        #[command(flatten)]
        input: Input,
        /// Rational point in [0,1]^n to evaluate at.
        #[arg(short = 'x', long = "point")]
        point: Option<String>,
    },
    /// Möbius coefficients of a pseudo-Boolean function.
    Mobius(Input),
    /// Lovász extension of a pseudo-Boolean function.
    Lovasz {
        #[command(flatten)]
        input: Input,
        /// Rational point in [0,1]^n to evaluate at.
        #[arg(short = 'x', long = "point")]
        point: Option<String>,
    },
    /// Reduced ordered decision diagram.
    Dd {
        #[command(flatten)]
        input: Input,
        /// shannon, median or mle.
        #[arg(long, default_value = "shannon")]
        rule: String,
        /// Variable order (1-based), e.g. `3,1,2`.
        #[arg(long)]
        order: Option<String>,
    },
    /// Validate a .lat file.
    LatticeValidate {
        #[arg(short = 'f', long = "file")]
        file: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    False,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::False => 1,
        }
    }
}

/// Outcome of a command: exit status, text report and JSON report.
#[derive(Clone, Debug)]
pub struct Report {
    pub status: Status,
    pub text: String,
    pub json: Json,
}

impl Report {
    fn new(status: Status, text: String, json: Json) -> Self {
        Report { status, text, json }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut j = self.json.clone();
            if let Json::Object(map) = &mut j {
                map.insert("status".into(), json!(self.status.code()));
            }
            format!("{}\n", serde_json::to_string_pretty(&j).expect("serializable"))
        } else {
            self.text.clone()
        }
    }
}

/// Limits taken from the environment.
#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub max_arity: usize,
}

impl Config {
    pub fn from_env() -> Result<Self> {
        let max_arity = match std::env::var("PIVOTAL_MAX_ARITY") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| usage(format!("PIVOTAL_MAX_ARITY must be a number, got `{v}`")))?,
            Err(_) => DEFAULT_MAX_ARITY,
        };
        Ok(Config { max_arity })
    }
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_arity: DEFAULT_MAX_ARITY,
        }
    }
}

struct Loaded {
    table: Table,
    /// Lattice file named by the input, for `.lft` output.
    lattice_path: Option<String>,
    /// Vertex table of a `.pbf` sampled on a grid.
    vertices: Option<FunctionTable<Rational>>,
    expr: Option<Expr>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn in_file<T>(path: &Path, r: pivotal::Result<T>) -> Result<T> {
    r.map_err(|source| CliError::File {
        path: path.to_path_buf(),
        source,
    })
}

fn load_lattice(path: &Path) -> Result<FiniteLattice> {
    let text = read(path)?;
    in_file(path, parse_lat(&text))
}

fn grid_sort(input: &Input) -> Result<Option<Sort>> {
    match input.grid {
        Some(0) => Err(usage("--grid needs d >= 1")),
        Some(d) => Ok(Some(Sort::unit_grid(d))),
        None => Ok(None),
    }
}

fn domain_of(input: &Input) -> Result<(Domain, Option<String>)> {
    let grid = grid_sort(input)?;
    match input.sort.as_str() {
        "bool" => {
            if grid.is_some() {
                return Err(usage("--grid applies to rational functions"));
            }
            Ok((Domain::Boolean, None))
        }
        "rat" => Ok((Domain::Rational(grid.unwrap_or(Sort::Boolean)), None)),
        other => match other.strip_prefix("lat:") {
            Some(path) => {
                let l = load_lattice(Path::new(path))?;
                Ok((Domain::Lattice(Sort::lattice(l)), Some(path.to_string())))
            }
            None => Err(usage(format!("unknown sort `{other}`; use bool, rat or lat:<file>"))),
        },
    }
}

fn sample(vertices: &FunctionTable<Rational>, grid: &Sort, extension: Extension) -> Result<FunctionTable<Rational>> {
    Ok(match extension {
        Extension::Lovasz => LovaszForm::from_table(vertices)?.sample(grid)?,
        Extension::Mle => {
            let m = MultilinearForm::from_table(vertices)?;
            let coords: Vec<Rational> = (0..grid.size()).map(|e| grid.coordinate(e).expect("grid")).collect();
            FunctionTable::from_fn(grid.clone(), vertices.arity(), |x| {
                let q: Vec<Rational> = x.iter().map(|&e| coords[e].clone()).collect();
                m.evaluate(&q).expect("grid points lie in the unit cube")
            })?
        }
    })
}

fn load(input: &Input, cfg: &Config) -> Result<Loaded> {
    if let Some(n) = input.arity {
        check_arity(n, cfg)?;
    }
    let loaded = match (&input.file, &input.expr) {
        (Some(path), None) => {
            let text = read(path)?;
            let tag = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with('#'))
                .and_then(|l| l.split_whitespace().next())
                .unwrap_or("");
            match tag {
                "bool" => Loaded {
                    table: Table::Bool(in_file(path, parse_tt(&text))?),
                    lattice_path: None,
                    vertices: None,
                    expr: None,
                },
                "pbf" => {
                    let f = in_file(path, parse_pbf(&text))?;
                    check_arity(f.arity(), cfg)?;
                    match grid_sort(input)? {
                        Some(grid) => Loaded {
                            table: Table::Rat(sample(&f, &grid, input.extension)?),
                            lattice_path: None,
                            vertices: Some(f),
                            expr: None,
                        },
                        None => Loaded {
                            table: Table::Rat(f),
                            lattice_path: None,
                            vertices: None,
                            expr: None,
                        },
                    }
                }
                "lft" => {
                    let dir = path.parent().unwrap_or(Path::new(".")).to_path_buf();
                    let mut named = None;
                    let f = in_file(
                        path,
                        parse_lft(&text, |p| {
                            named = Some(p.to_string());
                            let resolved = dir.join(p);
                            let text = fs::read_to_string(&resolved).map_err(|e| pivotal::Error::Parse {
                                line: 1,
                                message: format!("cannot read lattice file {}: {e}", resolved.display()),
                            })?;
                            parse_lat(&text)
                        }),
                    )?;
                    Loaded {
                        table: Table::Lat(f),
                        lattice_path: named,
                        vertices: None,
                        expr: None,
                    }
                }
                other => {
                    return Err(usage(format!(
                        "{}: unrecognized table header `{other}`; expected bool, pbf or lft",
                        path.display()
                    )))
                }
            }
        }
        (None, Some(text)) => {
            let (domain, lattice_path) = domain_of(input)?;
            let (expr, table) = parse_expression(text, &domain, input.arity)?;
            Loaded {
                table,
                lattice_path,
                vertices: None,
                expr: Some(expr),
            }
        }
        _ => return Err(usage("give a function with -f <file> or as an expression")),
    };
    check_arity(loaded.table.arity(), cfg)?;
    Ok(loaded)
}

fn check_arity(n: usize, cfg: &Config) -> Result<()> {
    if n > cfg.max_arity {
        Err(usage(format!("arity {n} exceeds PIVOTAL_MAX_ARITY = {}", cfg.max_arity)))
    } else {
        Ok(())
    }
}

fn split_list(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn parse_point(text: &str, sort: &Sort, arity: usize) -> Result<Vec<Elem>> {
    let parts = split_list(text);
    if parts.len() != arity {
        return Err(usage(format!("point has {} coordinates, the function has arity {arity}", parts.len())));
    }
    parts
        .iter()
        .map(|p| sort.parse_elem(p).ok_or_else(|| usage(format!("`{p}` is not an element of the domain"))))
        .collect()
}

fn parse_rational_point(text: &str, arity: usize) -> Result<Vec<Rational>> {
    let parts = split_list(text);
    if parts.len() != arity {
        return Err(usage(format!("point has {} coordinates, the function has arity {arity}", parts.len())));
    }
    parts
        .iter()
        .map(|p| parse_rational(p).ok_or_else(|| usage(format!("`{p}` is not a rational number"))))
        .collect()
}

fn parse_indices(text: &str, arity: usize) -> Result<Vec<usize>> {
    split_list(text)
        .iter()
        .map(|p| match p.parse::<usize>() {
            Ok(i) if (1..=arity).contains(&i) => Ok(i - 1),
            _ => Err(usage(format!("`{p}` is not an argument index in 1..={arity}"))),
        })
        .collect()
}

fn table_text(table: &Table, lattice_path: Option<&str>) -> String {
    match table {
        Table::Bool(f) => write_tt(f),
        Table::Rat(f) if f.sort().is_boolean() => write_pbf(f),
        Table::Rat(f) => listing(f),
        Table::Lat(f) => write_lft(f, lattice_path.unwrap_or("<lattice>")),
    }
}

fn listing<Y: TextValue>(f: &FunctionTable<Y>) -> String {
    let mut out = format!("# {} points\n", f.len());
    for x in f.points() {
        out += &format!("{} {}\n", x.display(f.sort()), f.evaluate(&x).expect("point").format_token(f.sort()));
    }
    out
}

fn values_json<Y: TextValue>(f: &FunctionTable<Y>) -> Json {
    let values: Vec<String> = f.values().iter().map(|v| v.format_token(f.sort())).collect();
    json!({ "arity": f.arity(), "domain_size": f.sort().size(), "values": values })
}

fn table_json(table: &Table) -> Json {
    match table {
        Table::Bool(f) => values_json(f),
        Table::Rat(f) => values_json(f),
        Table::Lat(f) => values_json(f),
    }
}

macro_rules! with_table {
    ($table:expr, $f:ident => $body:expr) => {
        match $table {
            Table::Bool($f) => $body,
            Table::Rat($f) => $body,
            Table::Lat($f) => $body,
        }
    };
}

pub fn run(cli: &Cli, cfg: &Config) -> Result<Report> {
    match &cli.command {
        Command::Parse(input) => cmd_parse(input, cfg),
        Command::Eval { input, point } => cmd_eval(input, point, cfg),
        Command::Cofactor { input, k, a } => cmd_cofactor(input, *k, a, cfg),
        Command::Section { input, args, point } => cmd_section(input, args, point, cfg),
        Command::Essential(input) => cmd_essential(input, cfg),
        Command::Equiv {
            input,
            other,
            other_expr,
        } => cmd_equiv(input, other.as_deref(), other_expr.as_deref(), cfg),
        Command::SynthPi(input) => cmd_synth_pi(input, cfg),
        Command::SynthCpi { input, at } => cmd_synth_cpi(input, at.as_deref(), cfg),
        Command::CheckPi { input, pi } => cmd_check_pi(input, pi, cfg),
        Command::Classify(input) => cmd_classify(input, cfg),
        Command::Umc { op, a, b } => cmd_umc(*op, a, b.as_deref()),
        Command::Mle { input, point } => cmd_mle(input, point.as_deref(), cfg),
        Command::Mobius(input) => cmd_mobius(input, cfg),
        Command::Lovasz { input, point } => cmd_lovasz(input, point.as_deref(), cfg),
        Command::Dd { input, rule, order } => cmd_dd(input, rule, order.as_deref(), cfg),
        Command::LatticeValidate { file } => cmd_lattice_validate(file),
    }
}

fn cmd_parse(input: &Input, cfg: &Config) -> Result<Report> {
    let l = load(input, cfg)?;
    let mut text = String::new();
    let mut j = table_json(&l.table);
    if let Some(e) = &l.expr {
        let printed = e.display(l.table.sort()).to_string();
        text += &format!("expr: {printed}\narity: {}\n", l.table.arity());
        j["expr"] = json!(printed);
    }
    text += &table_text(&l.table, l.lattice_path.as_deref());
    Ok(Report::new(Status::Ok, text, j))
}

fn cmd_eval(input: &Input, point: &str, cfg: &Config) -> Result<Report> {
    let l = load(input, cfg)?;
    let x = parse_point(point, l.table.sort(), l.table.arity())?;
    let value = with_table!(&l.table, f => f.evaluate(&x)?.format_token(f.sort()));
    Ok(Report::new(Status::Ok, format!("{value}\n"), json!({ "value": value })))
}

fn cmd_cofactor(input: &Input, k: usize, a: &str, cfg: &Config) -> Result<Report> {
    let l = load(input, cfg)?;
    let k = parse_indices(&k.to_string(), l.table.arity())?[0];
    let a = l
        .table
        .sort()
        .parse_elem(a)
        .ok_or_else(|| usage(format!("`{a}` is not an element of the domain")))?;
    let t = match &l.table {
        Table::Bool(f) => Table::Bool(f.cofactor(k, a)?),
        Table::Rat(f) => Table::Rat(f.cofactor(k, a)?),
        Table::Lat(f) => Table::Lat(f.cofactor(k, a)?),
    };
    Ok(Report::new(Status::Ok, table_text(&t, l.lattice_path.as_deref()), table_json(&t)))
}

fn cmd_section(input: &Input, args: &str, point: &str, cfg: &Config) -> Result<Report> {
    let l = load(input, cfg)?;
    let s = parse_indices(args, l.table.arity())?;
    let a = parse_point(point, l.table.sort(), l.table.arity())?;
    let t = match &l.table {
        Table::Bool(f) => Table::Bool(f.section(&s, &a)?),
        Table::Rat(f) => Table::Rat(f.section(&s, &a)?),
        Table::Lat(f) => Table::Lat(f.section(&s, &a)?),
    };
    Ok(Report::new(Status::Ok, table_text(&t, l.lattice_path.as_deref()), table_json(&t)))
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn join_nums(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_essential(input: &Input, cfg: &Config) -> Result<Report> {
    let l = load(input, cfg)?;
    let ess = one_based(&with_table!(&l.table, f => f.essential_arguments()));
    let names: Vec<String> = ess.iter().map(|i| format!("x{i}")).collect();
    let listed = if names.is_empty() { "none".to_string() } else { names.join(" ") };
    let text = format!("essential: {listed}\ncount: {}\n", ess.len());
    Ok(Report::new(Status::Ok, text, json!({ "essential": ess })))
}

fn cmd_equiv(input: &Input, other: Option<&Path>, other_expr: Option<&str>, cfg: &Config) -> Result<Report> {
    let l = load(input, cfg)?;
    let second = Input {
        file: other.map(Path::to_path_buf),
        expr: other_expr.map(String::from),
        ..input.clone()
    };
    let g = load(&second, cfg)?;
    let witness = match (&l.table, &g.table) {
        (Table::Bool(f), Table::Bool(g)) => f.is_equivalent(g)?,
        (Table::Rat(f), Table::Rat(g)) => f.is_equivalent(g)?,
        (Table::Lat(f), Table::Lat(g)) => f.is_equivalent(g)?,
        _ => return Err(usage("the two functions have different codomains")),
    };
    Ok(match witness {
        Some(w) => {
            let (sigma, mu) = (one_based(&w.sigma), one_based(&w.mu));
            Report::new(
                Status::Ok,
                format!("equivalent\nsigma: {}\nmu: {}\n", join_nums(&sigma), join_nums(&mu)),
                json!({ "equivalent": true, "sigma": sigma, "mu": mu }),
            )
        }
        None => Report::new(Status::False, "not equivalent\n".into(), json!({ "equivalent": false })),
    })
}

fn occurrence_text<Y: TextValue>(o: &Occurrence<Y>, sort: &Sort) -> String {
    format!("{} k={} f={}", o.point.display(sort), o.pivot + 1, o.value.format_token(sort))
}

fn key_text<Y: TextValue>(key: &(Elem, Y, Y), sort: &Sort) -> String {
    format!("({},{},{})", sort.label(key.0), key.1.format_token(sort), key.2.format_token(sort))
}

fn conflict_json<Y: TextValue>(c: &Conflict<Y>, sort: &Sort) -> Json {
    let occ = |o: &Occurrence<Y>| {
        json!({ "point": o.point.display(sort), "k": o.pivot + 1, "value": o.value.format_token(sort) })
    };
    json!({ "key": key_text(&c.key, sort), "first": occ(&c.first), "second": occ(&c.second) })
}

fn synth_pi<Y: TextValue>(f: &FunctionTable<Y>) -> Report {
    let sort = f.sort();
    match synthesize_pivotal(f) {
        Ok(pi) => Report::new(
            Status::Ok,
            format!("decomposable\n{}", write_pvf(&pi, sort)),
            json!({ "decomposable": true, "pvf": write_pvf(&pi, sort) }),
        ),
        Err(c) => Report::new(
            Status::False,
            format!(
                "not decomposable\nkey {}: {} vs {}\n",
                key_text(&c.key, sort),
                occurrence_text(&c.first, sort),
                occurrence_text(&c.second, sort)
            ),
            json!({ "decomposable": false, "conflict": conflict_json(&c, sort) }),
        ),
    }
}

fn cmd_synth_pi(input: &Input, cfg: &Config) -> Result<Report> {
    let l = load(input, cfg)?;
    Ok(with_table!(&l.table, f => synth_pi(f)))
}

fn rational_distance(a: &[Elem], b: &[Elem], sort: &Sort) -> Rational {
    a.iter()
        .zip(b)
        .map(|(&p, &q)| match (sort.coordinate(p), sort.coordinate(q)) {
            (Some(p), Some(q)) if p >= q => p - q,
            (Some(p), Some(q)) => q - p,
            _ => Rational::from_integer(usize::from(p != q).into()),
        })
        .sum()
}

/// Conflicts of `a` at argument `k`: the nearest point with the same key and
/// a different value, ties broken by index order.
fn partner<Y: TextValue>(f: &FunctionTable<Y>, k: usize, a: &[Elem]) -> Result<Option<Vec<Elem>>> {
    let fa = f.evaluate(a)?;
    let classes = conflict_classes(f, k)?;
    let Some(class) = classes.iter().find(|c| c.groups.values().flatten().any(|p| &p[..] == a)) else {
        return Ok(None);
    };
    Ok(class
        .groups
        .iter()
        .filter(|(v, _)| *v != fa)
        .flat_map(|(_, pts)| pts)
        .min_by(|p, q| {
            let (dp, dq) = (rational_distance(p, a, f.sort()), rational_distance(q, a, f.sort()));
            dp.cmp(&dq).then_with(|| f.index_of(p).ok().cmp(&f.index_of(q).ok()))
        })
        .map(|p| p.to_vec()))
}

fn synth_cpi<Y: TextValue>(f: &FunctionTable<Y>, at: Option<&str>) -> Result<Report> {
    let sort = f.sort();
    let err = match synthesize_componentwise(f) {
        Ok(pis) => {
            let mut text = "componentwise decomposable\n".to_string();
            let mut files = Vec::new();
            for (k, pi) in pis.iter().enumerate() {
                text += &format!("# k={}\n{}", k + 1, write_pvf(pi, sort));
                files.push(write_pvf(pi, sort));
            }
            return Ok(Report::new(Status::Ok, text, json!({ "decomposable": true, "pvf": files })));
        }
        Err(e) => e,
    };
    let failing = one_based(&err.failing_arguments());
    let mut text = format!("not componentwise decomposable\nfailing arguments: {}\n", join_nums(&failing));
    let mut witnesses = Vec::new();
    match at {
        None => {
            for c in &err.conflicts {
                let k = c.first.pivot + 1;
                let (a, b) = (c.first.point.display(sort), c.second.point.display(sort));
                let (fa, fb) = (c.first.value.format_token(sort), c.second.value.format_token(sort));
                text += &format!("k={k} a={a} b={b} key={} f(a)={fa} f(b)={fb}\n", key_text(&c.key, sort));
                witnesses.push(json!({ "k": k, "a": a, "b": b, "key": key_text(&c.key, sort), "fa": fa, "fb": fb }));
            }
        }
        Some(point) => {
            let a = parse_point(point, sort, f.arity())?;
            for k in err.failing_arguments() {
                if let Some(b) = partner(f, k, &a)? {
                    let (da, db) = (pivotal::table::Point::new(a.clone()), pivotal::table::Point::new(b.clone()));
                    let (fa, fb) = (f.evaluate(&a)?.format_token(sort), f.evaluate(&b)?.format_token(sort));
                    let (sa, sb) = (da.display(sort), db.display(sort));
                    text += &format!("k={} a={sa} b={sb} f(a)={fa} f(b)={fb}\n", k + 1);
                    witnesses.push(json!({ "k": k + 1, "a": sa, "b": sb, "fa": fa, "fb": fb }));
                }
            }
            if witnesses.is_empty() {
                text += "the given point takes part in no conflict\n";
            }
        }
    }
    Ok(Report::new(
        Status::False,
        text,
        json!({ "decomposable": false, "failing": failing, "witnesses": witnesses }),
    ))
}

fn cmd_synth_cpi(input: &Input, at: Option<&str>, cfg: &Config) -> Result<Report> {
    let l = load(input, cfg)?;
    with_table!(&l.table, f => synth_cpi(f, at))
}

fn check_report<Y: TextValue>(f: &FunctionTable<Y>, r: &DecompositionReport, name: &str) -> Report {
    let label = if r.grid_verified { " (grid-verified)" } else { "" };
    if r.holds {
        return Report::new(
            Status::Ok,
            format!("holds{label}: {name}\n"),
            json!({ "holds": true, "pi": name, "grid_verified": r.grid_verified }),
        );
    }
    let mut text = format!("fails: {name}, {} violations\n", r.violations.len());
    for (x, k) in r.violations.iter().take(5) {
        text += &format!("x={} k={}\n", x.display(f.sort()), k + 1);
    }
    let first: Vec<Json> = r
        .violations
        .iter()
        .take(5)
        .map(|(x, k)| json!({ "point": x.display(f.sort()), "k": k + 1 }))
        .collect();
    Report::new(
        Status::False,
        text,
        json!({ "holds": false, "pi": name, "violations": r.violations.len(), "first": first }),
    )
}

fn phi_values<Y: TextValue>(params: &[String], sort: &Sort) -> Result<Vec<Y>> {
    let phi: Vec<Y> = params
        .iter()
        .map(|p| Y::parse_token(sort, p).ok_or_else(|| usage(format!("bad phi value `{p}`"))))
        .collect::<Result<_>>()?;
    if phi.len() != sort.size() {
        return Err(usage(format!("phi-median needs {} values, got {}", sort.size(), phi.len())));
    }
    Ok(phi)
}

fn tnorm(family: &str, sort: &Sort) -> Result<Option<TNorm>> {
    Ok(match family {
        "tnorm-min" => Some(TNorm::minimum(sort.size())?),
        "tnorm-lukasiewicz" => Some(TNorm::lukasiewicz(sort.size())?),
        _ => None,
    })
}

fn unknown_family(family: &str, codomain: &str) -> CliError {
    usage(format!("pivotal function `{family}` is not available for {codomain} functions"))
}

fn bool_builtin(family: &str, params: &[String], sort: &Sort) -> Result<Box<dyn Pivotal<bool>>> {
    Ok(match family {
        "ite" => Box::new(Ite),
        "median" => Box::new(Median::new(TotalOrder)),
        "phi-median" => Box::new(PhiMedian::new(phi_values::<bool>(params, sort)?, TotalOrder)),
        _ => return Err(unknown_family(family, "Boolean")),
    })
}

fn rat_builtin(family: &str, params: &[String], sort: &Sort) -> Result<Box<dyn Pivotal<Rational>>> {
    Ok(match family {
        "ite" => Box::new(Ite),
        "median" => Box::new(Median::new(TotalOrder)),
        "mle" => Box::new(MleAffine),
        "phi-median" => Box::new(PhiMedian::new(phi_values::<Rational>(params, sort)?, TotalOrder)),
        _ => return Err(unknown_family(family, "rational")),
    })
}

fn lat_builtin(family: &str, params: &[String], sort: &Sort) -> Result<Box<dyn Pivotal<Elem>>> {
    let lattice: Arc<FiniteLattice> = sort
        .as_lattice()
        .ok_or_else(|| usage("lattice pivotal functions need a lattice sort"))?;
    if let Some(t) = tnorm(family, sort)? {
        if !lattice.is_chain() {
            return Err(usage("t-norms are defined on chains"));
        }
        return Ok(Box::new(t));
    }
    Ok(match family {
        "ite" => Box::new(Ite),
        "median" => Box::new(Median::new(lattice)),
        "phi-median" => Box::new(PhiMedian::new(phi_values::<Elem>(params, sort)?, lattice)),
        _ => return Err(unknown_family(family, "lattice")),
    })
}

type Builtin<Y> = fn(&str, &[String], &Sort) -> Result<Box<dyn Pivotal<Y>>>;

fn resolve_pi<Y: TextValue>(
    spec: &str,
    sort: &Sort,
    builtin: Builtin<Y>,
) -> Result<(Box<dyn Pivotal<Y>>, String)> {
    if spec.ends_with(".pvf") {
        let path = Path::new(spec);
        let text = read(path)?;
        return match in_file(path, parse_pvf::<Y>(&text, sort))? {
            PvfFile::Extensional(e) => Ok((Box::new(e), spec.to_string())),
            PvfFile::Builtin { family, params } => Ok((builtin(&family, &params, sort)?, family)),
        };
    }
    Ok((builtin(spec, &[], sort)?, spec.to_string()))
}

fn lovasz_pair(l: &Loaded) -> Result<(LovaszPivotal<Rational>, LovaszPivotal<Rational>)> {
    let vertices = match (&l.vertices, &l.table) {
        (Some(v), _) => v.clone(),
        (None, Table::Rat(f)) if f.sort().is_boolean() => f.clone(),
        _ => return Err(usage("--pi lovasz needs a .pbf table")),
    };
    Ok(LovaszForm::from_table(&vertices)?.binary_pivotals()?)
}

fn cmd_check_pi(input: &Input, pi: &str, cfg: &Config) -> Result<Report> {
    let l = load(input, cfg)?;
    if pi == "lovasz" {
        let (p1, p2) = lovasz_pair(&l)?;
        let Table::Rat(f) = &l.table else {
            return Err(usage("--pi lovasz needs a rational table"));
        };
        let r = check_componentwise(f, &[p1, p2])?;
        return Ok(check_report(f, &r, "lovasz"));
    }
    Ok(match &l.table {
        Table::Bool(f) => {
            let (p, name) = resolve_pi(pi, f.sort(), bool_builtin)?;
            check_report(f, &check_decomposition(f, &p)?, &name)
        }
        Table::Rat(f) => {
            let (p, name) = resolve_pi(pi, f.sort(), rat_builtin)?;
            check_report(f, &check_decomposition(f, &p)?, &name)
        }
        Table::Lat(f) => {
            let (p, name) = resolve_pi(pi, f.sort(), lat_builtin)?;
            check_report(f, &check_decomposition(f, &p)?, &name)
        }
    })
}

fn bool_input(l: &Loaded) -> Result<&FunctionTable<bool>> {
    match &l.table {
        Table::Bool(f) => Ok(f),
        _ => Err(usage("this command needs a Boolean function")),
    }
}

fn cmd_classify(input: &Input, cfg: &Config) -> Result<Report> {
    let l = load(input, cfg)?;
    let f = bool_input(&l)?;
    let minimal = minimal_um_class(f)?;
    let mut text = format!("minimal: {minimal}\n");
    let mut classes = Vec::new();
    for c in ClassId::all() {
        let member = um_membership(f, c.vset())?;
        text += &format!("{:>2} {:<14} {} {}\n", c.id(), c.name(), c.vset(), u8::from(member));
        classes.push(json!({ "id": c.id(), "name": c.name(), "set": c.vset().to_string(), "member": member }));
    }
    Ok(Report::new(
        Status::Ok,
        text,
        json!({ "minimal": minimal.to_string(), "classes": classes }),
    ))
}

fn parse_class(text: &str) -> Result<VSet> {
    ClassId::from_name(text)
        .map(ClassId::vset)
        .or_else(|| VSet::parse(text))
        .ok_or_else(|| usage(format!("`{text}` is not a class name, number or set")))
}

fn cmd_umc(op: UmcOp, a: &str, b: Option<&str>) -> Result<Report> {
    let a = parse_class(a)?;
    let b = b.map(parse_class).transpose()?;
    let result = match op {
        UmcOp::Show => a,
        UmcOp::Meet | UmcOp::Join if b.is_none() => return Err(usage("meet and join need two classes")),
        UmcOp::Meet => um_algebra(AlgebraOp::Meet, a, b)?,
        UmcOp::Join => um_algebra(AlgebraOp::Join, a, b)?,
        UmcOp::Complement => um_algebra(AlgebraOp::Complement, a, None)?,
    };
    let c = ClassId::from_vset(result);
    Ok(Report::new(
        Status::Ok,
        format!("{result} class {} {}\n", c.id(), c.name()),
        json!({ "set": result.to_string(), "id": c.id(), "name": c.name() }),
    ))
}

fn vertex_table(l: &Loaded) -> Result<FunctionTable<Rational>> {
    match (&l.vertices, &l.table) {
        (Some(v), _) => Ok(v.clone()),
        (None, Table::Rat(f)) if f.sort().is_boolean() => Ok(f.clone()),
        (None, Table::Bool(f)) => Ok(f.map_values(|&b| Rational::from_integer(i64::from(b).into()))),
        _ => Err(usage("this command needs a pseudo-Boolean function (.tt, .pbf or a rat expression without --grid)")),
    }
}

fn holds_word(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn cmd_mle(input: &Input, point: Option<&str>, cfg: &Config) -> Result<Report> {
    let l = load(input, cfg)?;
    let m = MultilinearForm::from_table(&vertex_table(&l)?)?;
    let pivot = m.check_mle_identity().holds();
    let monotone = m.check_monotone_identity().holds();
    let mut text = write_mlf(&m);
    text += &format!("pivot identity: {}\nmonotone identity: {}\n", holds_word(pivot), holds_word(monotone));
    let mut j = json!({ "mlf": write_mlf(&m), "pivot_identity": pivot, "monotone_identity": monotone });
    if let Some(p) = point {
        let v = m.evaluate(&parse_rational_point(p, m.arity())?)?;
        text += &format!("value: {v}\n");
        j["value"] = json!(v.to_string());
    }
    Ok(Report::new(Status::Ok, text, j))
}

fn cmd_mobius(input: &Input, cfg: &Config) -> Result<Report> {
    let l = load(input, cfg)?;
    let form = mobius(&vertex_table(&l)?)?;
    let text = write_lvf(&form);
    Ok(Report::new(Status::Ok, text.clone(), json!({ "lvf": text })))
}

fn cmd_lovasz(input: &Input, point: Option<&str>, cfg: &Config) -> Result<Report> {
    let l = load(input, cfg)?;
    let form = LovaszForm::from_table(&vertex_table(&l)?)?;
    let mut text = write_lvf(&form);
    let mut j = json!({ "lvf": write_lvf(&form) });
    if let Some(p) = point {
        let v = form.evaluate(&parse_rational_point(p, form.arity())?)?;
        text += &format!("value: {v}\n");
        j["value"] = json!(v.to_string());
    }
    Ok(Report::new(Status::Ok, text, j))
}

fn diagram_report<Y: TextValue>(d: &Diagram<Y>, sort: &Sort) -> Report {
    let (internal, terminals) = d.node_count();
    let dump = write_dd(d, sort);
    Report::new(
        Status::Ok,
        dump.clone(),
        json!({ "internal": internal, "terminals": terminals, "dump": dump }),
    )
}

fn cmd_dd(input: &Input, rule: &str, order: Option<&str>, cfg: &Config) -> Result<Report> {
    let l = load(input, cfg)?;
    let rule = Rule::parse(rule).ok_or_else(|| usage(format!("unknown rule `{rule}`; use shannon, median or mle")))?;
    let n = l.table.arity();
    let order = match order {
        Some(o) => parse_indices(o, n)?,
        None => (0..n).collect(),
    };
    Ok(match &l.table {
        Table::Bool(f) => diagram_report(&Diagram::build(f, rule, &order, &TotalOrder)?, f.sort()),
        Table::Rat(f) => diagram_report(&Diagram::build(f, rule, &order, &TotalOrder)?, f.sort()),
        Table::Lat(f) => {
            let lattice = f.sort().as_lattice().ok_or_else(|| usage("lattice table without a lattice"))?;
            diagram_report(&Diagram::build(f, rule, &order, &lattice)?, f.sort())
        }
    })
}

fn cmd_lattice_validate(file: &Path) -> Result<Report> {
    let text = read(file)?;
    match parse_lat(&text) {
        Ok(l) => {
            let text = format!(
                "valid distributive lattice: {} elements, bottom {}, top {}, {}\n",
                l.size(),
                l.name(l.bottom()),
                l.name(l.top()),
                if l.is_chain() { "chain" } else { "not a chain" }
            );
            Ok(Report::new(
                Status::Ok,
                text,
                json!({ "valid": true, "size": l.size(), "chain": l.is_chain() }),
            ))
        }
        Err(pivotal::Error::Lattice(e)) => Ok(Report::new(
            Status::False,
            format!("invalid: {e}\n"),
            json!({ "valid": false, "reason": e.to_string() }),
        )),
        Err(e) => Err(CliError::File {
            path: file.to_path_buf(),
            source: e,
        }),
    }
}
