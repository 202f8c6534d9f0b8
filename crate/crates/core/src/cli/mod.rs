//! The `concordance` command line.
//!
//! Exit codes: 0 when the computation finished without an obstruction or
//! failed check, 1 when an obstruction was found or a check failed, 2 for
//! usage, input and computation errors.

pub mod catalog;
pub mod report;

use std::fs;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::cover::{self, homology, order_fox, SmallGroup, DEFAULT_ENUMERATION_BOUND};
use crate::dinv::{align, d_lens, d_twist, dbar_table, lens_table, CorrectionTable};
use crate::error::{Error, Result};
use crate::exactalg::{snf, IntMatrix};
use crate::obstruct::{
    d_obstruction, lemma3_det, metabolizer_search, spk_enumerate, split_metabolizer,
    theorem1_verdict, twist_report, Metabolizer, Outcome,
};
use crate::rational;
use crate::seifert::{alexander_coprime, SeifertMatrix};

pub use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "concordance", version, about = "Exact knot concordance obstructions from Seifert matrices")]
pub struct Cli {
    /// Emit compact JSON instead of text tables
    #[arg(long, global = true)]
    pub json: bool,
    /// Entry bound for metabolizer searches [default: 2*max|entry|+2]
    #[arg(long, global = true, value_name = "B")]
    pub bound: Option<u64>,
    /// Largest group whose elements may be enumerated
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_ENUMERATION_BOUND)]
    pub max_group: u64,
    #[command(subcommand)]
    pub command: Command,
}

/// A catalog name (unknot, trefoil, figure8, stevedore, twist:K), a Seifert
/// matrix file, or `--twist K`.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct KnotArg {
    /// Catalog name or path to a Seifert matrix file
    #[arg(value_name = "KNOT")]
    pub knot: Option<String>,
    /// The twist knot T_K
    #[arg(long, value_name = "K", allow_hyphen_values = true)]
    pub twist: Option<i64>,
}

impl KnotArg {
    fn resolve(&self) -> Result<(String, SeifertMatrix)> {
        match (&self.knot, self.twist) {
            (_, Some(k)) => Ok((format!("twist:{k}"), SeifertMatrix::twist(k))),
            (Some(name), None) => Ok((name.clone(), catalog::resolve(name)?)),
            (None, None) => Err(Error::InvalidArgument("no knot given".into())),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Alexander polynomial det(A - tA^T)
    Alexander(KnotArg),
    /// Homology of the n-fold branched cover, three ways
    Cover {
        #[command(flatten)]
        knot: KnotArg,
        /// Cover degree, a prime power
        #[arg(long)]
        n: u64,
    },
    /// Metabolizers within the search bound, optionally with their images in a cover
    Metabolizers {
        #[command(flatten)]
        knot: KnotArg,
        /// Also report the image order in the n-fold cover
        #[arg(long)]
        n: Option<u64>,
    },
    /// Correction terms of L(4K+1, 2) or of a lens space L(P, Q)
    Dinv {
        #[arg(long, value_name = "K", allow_hyphen_values = true, conflicts_with = "lens", required_unless_present = "lens")]
        twist: Option<i64>,
        #[arg(long, num_args = 2, value_names = ["P", "Q"], allow_hyphen_values = true)]
        lens: Option<Vec<i64>>,
        /// Print the table in the importable JSON table format instead
        #[arg(long)]
        export: bool,
    },
    /// Subgroup-of-square-root-order test, and optionally the D-bar value at p
    Obstruction {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: Option<u64>,
        /// Correction table JSON for H_1 of the cover
        #[arg(long, value_name = "FILE")]
        table: Option<String>,
    },
    /// D-bar_p^2 of T_k for 1 <= k <= KMAX and every prime p | 4k+1
    TwistScan {
        #[arg(long)]
        kmax: i64,
    },
    /// Split every metabolizer of a connected sum along its summands
    SplittingCheck {
        #[arg(value_name = "KNOT1")]
        first: String,
        #[arg(value_name = "KNOT2")]
        second: String,
    },
    /// det A(m, n) for 2 <= m < n <= MAX
    VerifyLemma3 {
        #[arg(long)]
        max: usize,
    },
    /// Primes q <= QMAX with p dividing |H_1| of some q^r-fold cover, r <= RMAX
    Spk {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        qmax: u64,
        #[arg(long)]
        rmax: u32,
    },
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                RunOutput {
                    stdout: String::new(),
                    stderr: text,
                    code: 2,
                }
            } else {
                RunOutput {
                    stdout: text,
                    stderr: String::new(),
                    code: 0,
                }
            };
        }
    };
    let format = if cli.json { Format::Json } else { Format::Text };
    match execute(&cli) {
        Ok(Emitted::Report(report, flagged)) => RunOutput {
            stdout: report.emit(format),
            stderr: String::new(),
            code: i32::from(flagged),
        },
        Ok(Emitted::Raw(text)) => RunOutput {
            stdout: text,
            stderr: String::new(),
            code: 0,
        },
        Err(e) => RunOutput {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 2,
        },
    }
}

pub enum Emitted {
    /// A report, and whether it found an obstruction or a failed check.
    Report(Report, bool),
    Raw(String),
}

pub fn execute(cli: &Cli) -> Result<Emitted> {
    match &cli.command {
        Command::Alexander(k) => alexander_cmd(k),
        Command::Cover { knot, n } => cover_cmd(knot, *n),
        Command::Metabolizers { knot, n } => metabolizers_cmd(cli, knot, *n),
        Command::Dinv {
            twist,
            lens,
            export,
        } => dinv_cmd(*twist, lens.as_deref(), *export),
        Command::Obstruction { knot, n, p, table } => {
            obstruction_cmd(cli, knot, *n, *p, table.as_deref())
        }
        Command::TwistScan { kmax } => twist_scan_cmd(*kmax),
        Command::SplittingCheck { first, second } => splitting_cmd(cli, first, second),
        Command::VerifyLemma3 { max } => lemma3_cmd(*max),
        Command::Spk {
            knot,
            p,
            qmax,
            rmax,
        } => spk_cmd(knot, *p, *qmax, *rmax),
    }
}

fn big(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

fn rat(q: &BigRational) -> Value {
    Value::String(rational::format(q))
}

fn basis_json(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(big).collect()))
            .collect(),
    )
}

/// Bare residue for cyclic groups, coordinate array otherwise.
fn element_label(g: &SmallGroup, i: usize) -> Value {
    if g.factors().len() <= 1 {
        json!(i)
    } else {
        json!(g.coords(i))
    }
}

fn default_bound(cli: &Cli, knots: &[&SeifertMatrix]) -> u64 {
    cli.bound.unwrap_or_else(|| {
        let max = knots
            .iter()
            .map(|s| s.matrix().max_abs_entry())
            .max()
            .unwrap_or_default();
        2 * max.to_u64().unwrap_or(u64::MAX / 4) + 2
    })
}

fn alexander_cmd(k: &KnotArg) -> Result<Emitted> {
    let (name, s) = k.resolve()?;
    let delta = s.alexander();
    let mut r = Report::new("alexander");
    r.param("knot", name);
    r.row([
        ("genus", json!(s.genus())),
        ("alexander", json!(delta.to_string())),
        ("symmetric", json!(delta.is_symmetric(s.genus()))),
    ]);
    Ok(Emitted::Report(r, false))
}

fn cover_cmd(k: &KnotArg, n: u64) -> Result<Emitted> {
    let (name, s) = k.resolve()?;
    let p = cover::CoverPresentation::new(&s, n)?;
    let fox = order_fox(&s, n)?;
    let det_small = p.small.det()?.abs();
    let block = snf(&p.block).cokernel_order().ok_or(Error::InfiniteHomology)?;
    let group = homology(&s, n)?.group;
    let agree = fox == det_small && fox == block && group.order() == fox;
    let mut r = Report::new("cover");
    r.param("knot", name).param("n", n);
    r.row([
        ("homology", json!(group.to_string())),
        ("order_fox", big(&fox)),
        ("det_small", big(&det_small)),
        ("order_block", big(&block)),
        ("agree", json!(agree)),
    ]);
    Ok(Emitted::Report(r, !agree))
}

fn metabolizers_cmd(cli: &Cli, k: &KnotArg, n: Option<u64>) -> Result<Emitted> {
    let (name, s) = k.resolve()?;
    let bound = default_bound(cli, &[&s]);
    let found = metabolizer_search(&s, bound)?;
    let mut r = Report::new("metabolizers");
    r.param("knot", name).param("bound", bound);
    if let Some(n) = n {
        r.param("n", n);
    }
    let mut flagged = false;
    for z in &found {
        let mut row = vec![("metabolizer", basis_json(z.basis()))];
        if let Some(n) = n {
            let image = cover::submodule_image(&s, z, n)?;
            let total = image.group.order();
            let ok = &image.order * &image.order == total;
            flagged |= !ok;
            row.push(("image_order", big(&image.order)));
            row.push(("homology_order", big(&total)));
            row.push(("square_root", json!(ok)));
        }
        r.row(row);
    }
    r.verdict = Some(format!("{} found", found.len()));
    Ok(Emitted::Report(r, flagged))
}

fn dinv_cmd(twist: Option<i64>, lens: Option<&[i64]>, export: bool) -> Result<Emitted> {
    let mut r = Report::new("dinv");
    let table = match (twist, lens) {
        (Some(k), _) => {
            let table = dbar_table(k)?;
            if export {
                return Ok(Emitted::Raw(table.to_json().to_string() + "\n"));
            }
            let a = align(k)?;
            let n = 4 * k + 1;
            r.param("twist", k);
            r.row([
                ("sign", json!(a.sign)),
                ("scale", json!(a.scale)),
                ("shift", json!(a.shift)),
            ]);
            for j in 0..n {
                let i = a.apply(j, n);
                let lens_value = d_lens(n, 2, i)? * BigRational::from_integer(a.sign.into());
                r.row([
                    ("j", json!(j)),
                    ("d", rat(&d_twist(k, j)?)),
                    ("lens_index", json!(i)),
                    ("d_lens", rat(&lens_value)),
                ]);
            }
            return Ok(Emitted::Report(r, false));
        }
        (None, Some([p, q])) => lens_table(*p, *q)?,
        _ => return Err(Error::InvalidArgument("give --twist K or --lens P Q".into())),
    };
    if export {
        return Ok(Emitted::Raw(table.to_json().to_string() + "\n"));
    }
    let (p, q) = (lens.unwrap()[0], lens.unwrap()[1]);
    r.param("p", p).param("q", q);
    for (i, v) in table.values().iter().enumerate() {
        r.row([("i", json!(i)), ("d", rat(v))]);
    }
    Ok(Emitted::Report(r, false))
}

fn obstruction_cmd(
    cli: &Cli,
    k: &KnotArg,
    n: u64,
    p: Option<u64>,
    table_path: Option<&str>,
) -> Result<Emitted> {
    let (name, s) = k.resolve()?;
    let user_table = table_path
        .map(|path| {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?;
            CorrectionTable::from_json(&text)
        })
        .transpose()?;
    let verdict = theorem1_verdict(&s, n, user_table.as_ref(), cli.max_group)?;
    let mut r = Report::new("obstruction");
    r.param("knot", name).param("n", n);
    if let Some(p) = p {
        r.param("p", p);
    }
    r.row([
        ("homology", json!(verdict.group.to_string())),
        ("order", big(&verdict.group.order())),
    ]);
    let small = || verdict.group.small(cli.max_group);
    match &verdict.outcome {
        Outcome::Passes { witness } => {
            let g = small()?;
            r.row([
                ("subgroup", Value::Array(witness.iter().map(|&i| element_label(&g, i)).collect())),
                ("dbar_vanishes", json!(true)),
            ]);
        }
        Outcome::NoSquareOrderSubgroup { .. } => {}
        Outcome::NoVanishingSubgroup { evidence } => {
            let g = small()?;
            for (sub, values) in evidence {
                r.row([
                    ("subgroup", Value::Array(sub.iter().map(|&i| element_label(&g, i)).collect())),
                    ("dbar", Value::Array(values.iter().map(rat).collect())),
                ]);
            }
        }
    }
    let mut flagged = verdict.is_obstructed();
    if let Some(p) = p {
        let table = match (&user_table, s.as_twist(), n) {
            (Some(t), _, _) => t.bar(),
            (None, Some(k), 2) => dbar_table(k)?,
            _ if verdict.group.order().is_one() => {
                CorrectionTable::new(verdict.group.clone(), vec![BigRational::zero()])?
            }
            _ => return Err(Error::MissingTable),
        };
        let value = d_obstruction(&table, p)?;
        flagged |= value.value.is_positive();
        r.row([
            ("p", json!(p)),
            ("dbar_obstruction", rat(&value.value)),
            ("coefficients", Value::Array(value.coefficients.iter().map(big).collect())),
        ]);
    }
    r.verdict = Some(verdict.name().to_string());
    Ok(Emitted::Report(r, flagged))
}

fn twist_scan_cmd(kmax: i64) -> Result<Emitted> {
    let rows = twist_report(kmax)?;
    let mut r = Report::new("twist-scan");
    r.param("kmax", kmax);
    let mut all = true;
    for row in &rows {
        all &= row.consistent;
        r.row([
            ("k", json!(row.k)),
            ("p", json!(row.p)),
            ("dbar", rat(&row.value)),
            ("class", json!(row.class.as_str())),
            ("consistent", json!(row.consistent)),
        ]);
    }
    r.verdict = Some(if all { "Consistent" } else { "Inconsistent" }.into());
    Ok(Emitted::Report(r, !all))
}

fn splitting_cmd(cli: &Cli, first: &str, second: &str) -> Result<Emitted> {
    let s1 = catalog::resolve(first)?;
    let s2 = catalog::resolve(second)?;
    let mut r = Report::new("splitting-check");
    r.param("first", first).param("second", second);
    if !alexander_coprime(&s1, &s2) || (!s1.is_nonsingular() && !s2.is_nonsingular()) {
        r.verdict = Some("HypothesisViolation".into());
        return Ok(Emitted::Report(r, false));
    }
    let bound = default_bound(cli, &[&s1, &s2]);
    r.param("bound", bound);
    let sum = SeifertMatrix::block_sum(&[(&s1, 1), (&s2, 1)])?;
    let found: Vec<Metabolizer> = metabolizer_search(&sum, bound)?;
    let mut failed = false;
    for z in &found {
        match split_metabolizer(&s1, &s2, z) {
            Ok((z1, z2)) => r.row([
                ("metabolizer", basis_json(z.basis())),
                ("first", basis_json(z1.basis())),
                ("second", basis_json(z2.basis())),
                ("valid", json!(true)),
            ]),
            Err(Error::NotMetabolizer(msg)) => {
                failed = true;
                r.row([
                    ("metabolizer", basis_json(z.basis())),
                    ("first", Value::Null),
                    ("second", Value::Null),
                    ("valid", json!(false)),
                    ("reason", json!(msg)),
                ]);
            }
            Err(e) => return Err(e),
        }
    }
    r.verdict = Some(
        match (found.is_empty(), failed) {
            (true, _) => "NoMetabolizerWithinBound",
            (false, false) => "AllSplit",
            (false, true) => "SplitFailed",
        }
        .into(),
    );
    Ok(Emitted::Report(r, failed))
}

fn lemma3_cmd(max: usize) -> Result<Emitted> {
    if max < 3 {
        return Err(Error::InvalidArgument("--max must be at least 3".into()));
    }
    let mut r = Report::new("verify-lemma3");
    r.param("max", max);
    let mut ok = true;
    for m in 2..max {
        for n in m + 1..=max {
            let det = lemma3_det(m, n)?;
            let g = m.gcd(&n);
            let expected = if g == 1 { det.abs().is_one() } else { det.is_zero() };
            ok &= expected;
            r.row([
                ("m", json!(m)),
                ("n", json!(n)),
                ("gcd", json!(g)),
                ("det", big(&det)),
            ]);
        }
    }
    r.verdict = Some(
        if ok {
            "all coprime pairs ±1, all others 0"
        } else {
            "violation"
        }
        .into(),
    );
    Ok(Emitted::Report(r, !ok))
}

fn spk_cmd(k: &KnotArg, p: u64, qmax: u64, rmax: u32) -> Result<Emitted> {
    let (name, s) = k.resolve()?;
    let set = spk_enumerate(&s, p, qmax, rmax)?;
    let mut r = Report::new("spk");
    r.param("knot", name)
        .param("p", p)
        .param("qmax", qmax)
        .param("rmax", rmax);
    for q in &set.members {
        r.row([("q", json!(q))]);
    }
    r.verdict = Some(format!("{} primes within bounds", set.members.len()));
    Ok(Emitted::Report(r, false))
}
