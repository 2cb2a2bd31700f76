//! Command-line front end. Exit status: 0 on success with no inconsistency,
//! 1 when any check contradicts its statement, 2 on usage or input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::equations::{
    count_convolution, count_naive, enumerate_solutions, parse_equation_json, CountReport, ElemLiteral,
    EquationFile, RestrictionSet, DEFAULT_BUDGET,
};
use crate::error::Error;
use crate::gf::{parse_notation, Elem, Field};
use crate::polys::{dickson_table, parse_multi};
use crate::theorems::{
    reproduce_counterexample5, run_example4, summarize, sweep_verify, SweepConfig, SweepStatement, Verdict,
};
use crate::valueset::{dickson_value_count, floor_image_lower_bound, power_value_count, value_set};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONSISTENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ffdiag", version, about = "Value sets, Dickson equations and solvability checks over finite fields")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Point budget for exhaustive counts, verdict budget for sweeps
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    /// Seed for randomized instances
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads (defaults to the number of cores)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Naive,
    Convolution,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Power,
    Dickson,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StatementArg {
    T1,
    T2,
    T3,
    Mj,
}

impl From<StatementArg> for SweepStatement {
    fn from(s: StatementArg) -> Self {
        match s {
            StatementArg::T1 => SweepStatement::T1,
            StatementArg::T2 => SweepStatement::T2,
            StatementArg::T3 => SweepStatement::T3,
            StatementArg::Mj => SweepStatement::MJ,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Describe a field: modulus, generator, generator count
    Field {
        #[arg(long)]
        field: String,
    },
    /// Compare closed-form value-set sizes against enumeration
    Valueset(ValuesetArgs),
    /// Count solutions of an equation read from a JSON file
    Count(CountArgs),
    /// Sweep a statement over parameter ranges and check every instance
    Verify(VerifyArgs),
    /// Build and check an instance of the Dickson-equation example family
    Example4(Example4Args),
    /// Reproduce the X1^3 + g X2^3 = 0 counterexample over F_25 for every generator
    Counterexample5,
}

#[derive(Debug, Args)]
pub struct ValuesetArgs {
    /// Field(s), comma-separated, as p^s or q
    #[arg(long)]
    pub field: String,
    #[arg(long, value_enum, default_value_t = Family::All)]
    pub family: Family,
    /// Largest degree to sweep (default 2(q-1) for powers, 2(q+1) for Dickson)
    #[arg(long)]
    pub m_max: Option<u64>,
    /// Report the value set of one polynomial in X instead of sweeping
    #[arg(long)]
    pub poly: Option<String>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Equation file
    #[arg(long = "eq")]
    pub eq: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    pub method: Method,
    /// Restrict every variable to the subfield F_{p^l}
    #[arg(long)]
    pub restrict_subfield: Option<u32>,
    /// Number of witness solutions to print
    #[arg(long, default_value_t = 10)]
    pub limit: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub statement: StatementArg,
    /// Field orders, comma-separated (q or p^s)
    #[arg(long, value_delimiter = ',', required = true)]
    pub q: Vec<String>,
    /// Numbers of variables, comma-separated
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    /// Random draws per exponent tuple (T1/MJ) or per cell (T2/T3); omit for an exhaustive sweep
    #[arg(long)]
    pub draws: Option<usize>,
}

#[derive(Debug, Args)]
pub struct Example4Args {
    #[arg(long)]
    pub q: String,
    #[arg(long)]
    pub n: usize,
    /// Divisors e_j of q-1, comma-separated
    #[arg(long, value_delimiter = ',', required = true)]
    pub e: Vec<u64>,
}

/// Failure of a subcommand: bad input, or a check that came out inconsistent.
enum Failure {
    Usage(String),
    Inconsistent,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            code
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };
    let (result, buffer) = pool.install(|| {
        let mut buffer = Vec::new();
        let result = dispatch(cli, &mut buffer);
        (result, buffer)
    });
    if let Err(e) = out.write_all(&buffer).and_then(|_| out.flush()) {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Inconsistent) => EXIT_INCONSISTENT,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Field { field } => cmd_field(cli, field, out),
        Command::Valueset(args) => cmd_valueset(cli, args, out),
        Command::Count(args) => cmd_count(cli, args, out),
        Command::Verify(args) => cmd_verify(cli, args, out),
        Command::Example4(args) => cmd_example4(cli, args, out),
        Command::Counterexample5 => cmd_counterexample5(cli, out),
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> CmdResult {
    let line = serde_json::to_string(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{line}")?;
    Ok(())
}

fn json_pretty<T: Serialize>(out: &mut dyn Write, value: &T) -> CmdResult {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn modulus_string(field: &Field) -> String {
    field
        .modulus()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_field(cli: &Cli, notation: &str, out: &mut dyn Write) -> CmdResult {
    let field = Field::parse(notation)?;
    let g = field.find_generator();
    let generators = field.all_generators().len();
    match cli.format {
        Format::Json => json_pretty(
            out,
            &json!({
                "field": field.notation(),
                "p": field.p(),
                "s": field.s(),
                "q": field.q(),
                "modulus": modulus_string(&field),
                "generator": ElemLiteral::of(&field, g),
                "generators": generators,
            }),
        ),
        Format::Csv => {
            writeln!(out, "field,p,s,q,modulus,generator,generators")?;
            writeln!(
                out,
                "{},{},{},{},\"{}\",\"{}\",{}",
                field.notation(),
                field.p(),
                field.s(),
                field.q(),
                modulus_string(&field),
                field.format(g),
                generators
            )?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "field      F_{} = {}", field.q(), field.notation())?;
            writeln!(out, "modulus    {}  (constant term first)", modulus_string(&field))?;
            writeln!(out, "generator  {}", field.format(g))?;
            writeln!(out, "generators {generators}")?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct ValuesetRow {
    q: u32,
    m: u64,
    a: ElemLiteral,
    formula: u64,
    enumerated: u64,
    delta: String,
    #[serde(rename = "match")]
    matched: bool,
}

fn field_list(text: &str) -> Result<Vec<Field>, Failure> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| Field::parse(t).map_err(Failure::from))
        .collect()
}

fn valueset_rows(field: &Field, family: Family, m_max: Option<u64>) -> Result<Vec<ValuesetRow>, Failure> {
    let q = field.q() as u64;
    let points = field.enumerate();
    let mut rows = Vec::new();
    if matches!(family, Family::Power | Family::All) {
        let top = m_max.unwrap_or(2 * (q - 1));
        let table = dickson_table(field, Elem::ZERO, top, &points);
        for m in 1..=top {
            let enumerated = value_set(field, |x| table[m as usize][x.index()], None)?.cardinality;
            let formula = power_value_count(q, m);
            rows.push(ValuesetRow {
                q: field.q(),
                m,
                a: ElemLiteral::of(field, Elem::ZERO),
                formula,
                enumerated,
                delta: String::new(),
                matched: formula == enumerated,
            });
        }
    }
    if matches!(family, Family::Dickson | Family::All) {
        let top = m_max.unwrap_or(2 * (q + 1));
        for a in field.units() {
            let table = dickson_table(field, a, top, &points);
            for m in 1..=top {
                let enumerated = value_set(field, |x| table[m as usize][x.index()], None)?.cardinality;
                let report = dickson_value_count(field, m, a)?;
                let formula = report.cardinality;
                rows.push(ValuesetRow {
                    q: field.q(),
                    m,
                    a: ElemLiteral::of(field, a),
                    formula,
                    enumerated,
                    delta: report.delta.map(|d| d.to_string()).unwrap_or_default(),
                    matched: formula == enumerated,
                });
            }
        }
    }
    Ok(rows)
}

fn literal_text(lit: &ElemLiteral) -> String {
    match lit {
        ElemLiteral::Int(n) => n.to_string(),
        ElemLiteral::Coeffs(cs) => format!("[{}]", cs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")),
    }
}

fn cmd_valueset(cli: &Cli, args: &ValuesetArgs, out: &mut dyn Write) -> CmdResult {
    let fields = field_list(&args.field)?;
    if let Some(text) = &args.poly {
        let [field] = fields.as_slice() else {
            return Err(Failure::Usage("--poly takes a single field".into()));
        };
        let h = parse_multi(field, text, Some(1))?;
        let degree = h.total_degree();
        let report = value_set(field, |x| h.eval(&[x]).expect("one variable"), None)?;
        let bound = (degree >= 1)
            .then(|| floor_image_lower_bound(field.q() as u64, degree as u64))
            .transpose()?;
        let values: Vec<ElemLiteral> = report
            .values
            .iter()
            .flatten()
            .map(|&v| ElemLiteral::of(field, v))
            .collect();
        let ok = bound.is_none_or(|b| report.cardinality >= b);
        match cli.format {
            Format::Text => {
                writeln!(out, "f = {h} over F_{}", field.q())?;
                writeln!(out, "|V_f| = {}", report.cardinality)?;
                if let Some(b) = bound {
                    writeln!(out, "degree bound floor((q-1)/deg)+1 = {b}")?;
                }
            }
            _ => json_line(
                out,
                &json!({
                    "field": field.notation(),
                    "poly": h.to_string(),
                    "degree": degree,
                    "cardinality": report.cardinality,
                    "lower_bound": bound,
                    "values": values,
                }),
            )?,
        }
        return if ok { Ok(()) } else { Err(Failure::Inconsistent) };
    }

    let mut mismatches = 0usize;
    if cli.format == Format::Csv {
        writeln!(out, "q,m,a,formula,enumerated,delta,match")?;
    } else if cli.format == Format::Text {
        writeln!(out, "{:>5} {:>5} {:>10} {:>8} {:>10} {:>6}  match", "q", "m", "a", "formula", "enumerated", "delta")?;
    }
    for field in &fields {
        for row in valueset_rows(field, args.family, args.m_max)? {
            mismatches += (!row.matched) as usize;
            match cli.format {
                Format::Json => json_line(out, &row)?,
                Format::Csv => writeln!(
                    out,
                    "{},{},\"{}\",{},{},{},{}",
                    row.q,
                    row.m,
                    literal_text(&row.a),
                    row.formula,
                    row.enumerated,
                    row.delta,
                    row.matched
                )?,
                Format::Text => writeln!(
                    out,
                    "{:>5} {:>5} {:>10} {:>8} {:>10} {:>6}  {}",
                    row.q,
                    row.m,
                    literal_text(&row.a),
                    row.formula,
                    row.enumerated,
                    row.delta,
                    if row.matched { "yes" } else { "NO" }
                )?,
            }
        }
    }
    if mismatches > 0 {
        Err(Failure::Inconsistent)
    } else {
        Ok(())
    }
}

fn cmd_count(cli: &Cli, args: &CountArgs, out: &mut dyn Write) -> CmdResult {
    let text = std::fs::read_to_string(&args.eq)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", args.eq.display())))?;
    let eq = parse_equation_json(&text)?;
    let field = eq.field().clone();
    let restrict = args
        .restrict_subfield
        .map(|l| RestrictionSet::subfield(&field, eq.n(), l))
        .transpose()?;
    let naive = matches!(args.method, Method::Naive | Method::Both)
        .then(|| count_naive(&eq, restrict.as_ref(), cli.budget))
        .transpose()?;
    let conv = matches!(args.method, Method::Convolution | Method::Both)
        .then(|| count_convolution(&eq, restrict.as_ref()))
        .transpose()?;
    let agree = match (&naive, &conv) {
        (Some(a), Some(b)) => a.count == b.count,
        _ => true,
    };
    let witnesses = if args.limit > 0 {
        enumerate_solutions(&eq, restrict.as_ref(), args.limit, cli.budget)?
    } else {
        Vec::new()
    };
    for w in &witnesses {
        if !eq.is_solution(w)? {
            return Err(Failure::Usage("witness failed re-validation".into()));
        }
    }
    let witness_lits: Vec<Vec<ElemLiteral>> = witnesses
        .iter()
        .map(|w| w.iter().map(|&x| ElemLiteral::of(&field, x)).collect())
        .collect();

    #[derive(Serialize)]
    struct CountOutput<'a> {
        equation: EquationFile,
        #[serde(skip_serializing_if = "Option::is_none")]
        restrict_subfield: Option<u32>,
        #[serde(skip_serializing_if = "Option::is_none")]
        naive: Option<&'a CountReport>,
        #[serde(skip_serializing_if = "Option::is_none")]
        convolution: Option<&'a CountReport>,
        methods_agree: bool,
        witnesses: &'a [Vec<ElemLiteral>],
    }
    let output = CountOutput {
        equation: EquationFile::from_spec(&eq),
        restrict_subfield: args.restrict_subfield,
        naive: naive.as_ref(),
        convolution: conv.as_ref(),
        methods_agree: agree,
        witnesses: &witness_lits,
    };
    match cli.format {
        Format::Json => json_pretty(out, &output)?,
        Format::Csv => {
            writeln!(out, "method,N,q,n,divisible_by_p,has_nontrivial")?;
            for r in naive.iter().chain(conv.iter()) {
                let nontrivial = r.has_nontrivial.map(|b| b.to_string()).unwrap_or_default();
                writeln!(out, "{},{},{},{},{},{}", r.method, r.count, r.q, r.n, r.divisible_by_p, nontrivial)?;
            }
        }
        Format::Text => {
            writeln!(out, "{eq}")?;
            if let Some(l) = args.restrict_subfield {
                writeln!(out, "variables restricted to F_{}^{}", field.p(), l)?;
            }
            for r in naive.iter().chain(conv.iter()) {
                writeln!(out, "N ({:<11}) = {}   divisible by p: {}", r.method.to_string(), r.count, r.divisible_by_p)?;
            }
            for w in &witness_lits {
                let parts: Vec<String> = w.iter().map(literal_text).collect();
                writeln!(out, "solution ({})", parts.join(", "))?;
            }
        }
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Inconsistent)
    }
}

fn parse_orders(list: &[String]) -> Result<Vec<(u64, u32)>, Failure> {
    list.iter()
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_notation(t).map_err(Failure::from))
        .collect()
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let fields = parse_orders(&args.q)?;
    let mut config = SweepConfig::new(args.statement.into(), fields, args.n.clone());
    config.seed = cli.seed;
    config.budget = cli.budget;
    match args.draws {
        Some(d) => config.draws = d,
        None => config.exhaustive = true,
    }
    let verdicts = sweep_verify(&config)?;
    let summary = summarize(&verdicts);
    match cli.format {
        Format::Json => {
            for v in &verdicts {
                json_line(out, v)?;
            }
            json_line(out, &json!({ "statement": config.statement, "summary": summary }))?;
        }
        Format::Csv => {
            writeln!(out, "statement,q,n,equation,lhs,rhs,holds,N,consistent")?;
            for v in &verdicts {
                let eq = v
                    .equation
                    .as_ref()
                    .map(|e| serde_json::to_string(e).unwrap_or_default().replace('"', "\"\""))
                    .unwrap_or_default();
                writeln!(
                    out,
                    "{},{},{},\"{}\",{},{},{},{},{}",
                    v.condition.name, v.count.q, v.count.n, eq, v.condition.lhs, v.condition.rhs, v.condition.holds,
                    v.count.count, v.consistent
                )?;
            }
        }
        Format::Text => write_verify_table(out, config.statement, &verdicts)?,
    }
    if summary.inconsistencies > 0 {
        Err(Failure::Inconsistent)
    } else {
        Ok(())
    }
}

fn write_verify_table(out: &mut dyn Write, statement: SweepStatement, verdicts: &[Verdict]) -> CmdResult {
    let mut cells: BTreeMap<(u32, usize), Vec<Verdict>> = BTreeMap::new();
    for v in verdicts {
        cells.entry((v.count.q, v.count.n)).or_default().push(v.clone());
    }
    writeln!(
        out,
        "{:<4} {:>5} {:>3} {:>10} {:>10} {:>10} {:>13}",
        "stmt", "q", "n", "instances", "held", "tested", "inconsistent"
    )?;
    for ((q, n), vs) in &cells {
        let s = summarize(vs);
        writeln!(
            out,
            "{:<4} {:>5} {:>3} {:>10} {:>10} {:>10} {:>13}",
            statement.to_string(),
            q,
            n,
            s.instances,
            s.hypothesis_held,
            s.conclusion_tested,
            s.inconsistencies
        )?;
    }
    let total = summarize(verdicts);
    writeln!(
        out,
        "{:<4} {:>5} {:>3} {:>10} {:>10} {:>10} {:>13}",
        "all", "", "", total.instances, total.hypothesis_held, total.conclusion_tested, total.inconsistencies
    )?;
    Ok(())
}

fn cmd_example4(cli: &Cli, args: &Example4Args, out: &mut dyn Write) -> CmdResult {
    let field = Field::parse(&args.q)?;
    let report = run_example4(&field, args.n, &args.e, cli.seed, cli.budget)?;
    match cli.format {
        Format::Json => json_pretty(out, &report)?,
        Format::Csv => {
            writeln!(out, "q,n,cmw_sign,t2_lhs,t2_rhs,t2_holds,N,nontrivial,consistent")?;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                field.q(),
                args.n,
                report.cmw.sign,
                report.theorem2.lhs,
                report.theorem2.rhs,
                report.theorem2.holds,
                report.count.count,
                report.nontrivial_witness.is_some(),
                report.consistent
            )?;
        }
        Format::Text => {
            let eq = report.equation.to_spec()?;
            writeln!(out, "{eq}")?;
            let bound = match &report.cmw.value {
                Some(v) => v.to_string(),
                None => format!("sign {}", report.cmw.sign),
            };
            writeln!(out, "CMW bound B      {bound}  (uninformative: {})", report.cmw.is_uninformative())?;
            writeln!(
                out,
                "dickson condition {} > {}  holds: {}",
                report.theorem2.lhs, report.theorem2.rhs, report.theorem2.holds
            )?;
            writeln!(out, "N                {}", report.count.count)?;
            if let Some(w) = &report.nontrivial_witness {
                let parts: Vec<String> = w.iter().map(literal_text).collect();
                writeln!(out, "nontrivial       ({})", parts.join(", "))?;
            }
            writeln!(out, "consistent       {}", report.consistent)?;
        }
    }
    if report.consistent {
        Ok(())
    } else {
        Err(Failure::Inconsistent)
    }
}

fn cmd_counterexample5(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let rows = reproduce_counterexample5()?;
    match cli.format {
        Format::Json => {
            for row in &rows {
                json_line(out, row)?;
            }
        }
        Format::Csv => {
            writeln!(out, "generator,N_F25,N_F5,eq4_lhs,eq4_holds,t3_lhs,t3_rhs,t3_holds,reproduces")?;
            for r in &rows {
                writeln!(
                    out,
                    "\"{}\",{},{},{},{},{},{},{},{}",
                    literal_text(&r.generator),
                    r.count_full,
                    r.count_subfield,
                    r.eq4.lhs,
                    r.eq4.holds,
                    r.theorem3.lhs,
                    r.theorem3.rhs,
                    r.theorem3.holds,
                    r.reproduces
                )?;
            }
        }
        Format::Text => {
            writeln!(out, "X1^3 + g*X2^3 = 0 over F_25 = F_5[t]/(t^2+2)")?;
            writeln!(
                out,
                "{:>8} {:>6} {:>5} {:>14} {:>14}  reproduces",
                "g", "N_F25", "N_F5", "weak ineq", "subfield cond"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:>8} {:>6} {:>5} {:>14} {:>14}  {}",
                    literal_text(&r.generator),
                    r.count_full,
                    r.count_subfield,
                    format!("{} > {}", r.eq4.lhs, r.eq4.rhs),
                    format!("{} > {}: {}", r.theorem3.lhs, r.theorem3.rhs, r.theorem3.holds),
                    r.reproduces
                )?;
            }
        }
    }
    if rows.iter().all(|r| r.reproduces) {
        Ok(())
    } else {
        Err(Failure::Inconsistent)
    }
}
