//! Command-line front end of the `nikulin` binary.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 failed verification.

use std::ffi::OsString;
use std::io::Write;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::catalog::{self, NamedLattice};
use crate::discform::{discriminant_form, genus_equal};
use crate::embeddings::{self, EmbeddingVariant, Kind};
use crate::error::{Error, Result};
use crate::lattice::{overlattice, Lattice, Sublattice};
use crate::linalg::{IntMatrix, RatMatrix};
use crate::mukai::{self, Model};
use crate::quotient::{self, Family};
use crate::riemann_roch;

pub const JSON_VERSION: u32 = 1;
pub const DEFAULT_MAX_D: i64 = 12;
pub const MAX_D_VAR: &str = "NIKULIN_MAX_D";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "nikulin", version, about = "Lattices of fourfolds of K3^[2]-type with a symplectic involution and of their Nikulin orbifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reproduce one of the tables.
    Table(TableArgs),
    /// Lattice utilities.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Euler characteristics of divisors on Nikulin orbifolds.
    Chi(ChiArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum TableName {
    /// Picard and transcendental lattices of X.
    Picx,
    /// Models of X as Hilbert squares or moduli spaces of sheaves.
    Modelsx,
    /// NS and T of the orbifold Y.
    Nsy,
    /// Projective models of Y.
    Projy,
}

impl TableName {
    fn as_str(&self) -> &'static str {
        match self {
            TableName::Picx => "picx",
            TableName::Modelsx => "modelsx",
            TableName::Nsy => "nsy",
            TableName::Projy => "projy",
        }
    }
}

#[derive(Args, Debug)]
pub struct TableArgs {
    pub name: TableName,
    /// A single value `d` or an inclusive range `a..b`.
    #[arg(long = "d", default_value = "1..4")]
    pub d: String,
    /// Restrict to one embedding: j1, j2, j3 or jtilde.
    #[arg(long)]
    pub variant: Option<Kind>,
    /// Emit a versioned JSON document instead of a text table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["name", "gram", "json"])))]
pub struct LatticeSource {
    /// Catalog name, or a sum such as `U(2)+E8(-1)+<-4>`.
    #[arg(long)]
    pub name: Option<String>,
    /// Gram matrix as a JSON array of rows.
    #[arg(long)]
    pub gram: Option<String>,
    /// Lattice document `{"rank","gram","labels"}`, inline or `@path`.
    #[arg(long)]
    pub json: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum LatticeCommand {
    /// Discriminant form.
    Disc(LatticeSource),
    /// Signature `(n+, n0, n-)`.
    Sig(LatticeSource),
    /// Orthogonal complement of the span of `--gens`.
    Complement {
        #[command(flatten)]
        source: LatticeSource,
        /// Generators as a JSON array of integer rows.
        #[arg(long)]
        gens: String,
    },
    /// Overlattice generated by glue vectors.
    Overlattice {
        #[command(flatten)]
        source: LatticeSource,
        /// Glue vectors as a JSON array of rows of integers or "p/q" strings.
        #[arg(long)]
        glue: String,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("formula").required(true).args(["cartier", "weil", "orbifold"])))]
pub struct ChiArgs {
    /// `(q^2 + 6q + 12)/4`, needs `--q`.
    #[arg(long)]
    pub cartier: bool,
    /// Weil divisor `D = (m/2) L`, needs `--qL`, `--m`, `--N`.
    #[arg(long)]
    pub weil: bool,
    /// General formula at `q(H) = 2d`, needs `--d`, `--k`, `--N`.
    #[arg(long)]
    pub orbifold: bool,
    /// BBF square of a Cartier divisor.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<i64>,
    /// BBF square of `L` with `D = (m/2) L`.
    #[arg(long = "qL", allow_hyphen_values = true)]
    pub q_l: Option<i64>,
    /// Odd multiple `m`.
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    /// Number of singular points where the divisor is not Cartier.
    #[arg(long = "N")]
    pub n: Option<i64>,
    /// Coefficient of the exceptional divisor, 0 or -1.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    /// Half the BBF square of `H`.
    #[arg(long)]
    pub d: Option<i64>,
    /// Exit with status 2 when the value is not an integer.
    #[arg(long)]
    pub require_integer: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub message: String,
}

impl Check {
    fn new(name: &str, pass: bool, message: impl Into<String>) -> Self {
        Check { name: name.into(), pass, message: message.into() }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TableRow {
    pub variant: Kind,
    pub d: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ns_x: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_x_genus_name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k3: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vector: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ns_y_gram: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_y_genus_name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<[i64; 2]>,
    pub checks: Vec<Check>,
}

impl TableRow {
    fn empty(v: EmbeddingVariant) -> Self {
        TableRow {
            variant: v.kind,
            d: v.d,
            ns_x: None,
            t_x_genus_name: None,
            k3: None,
            model: None,
            vector: None,
            ns_y_gram: None,
            t_y_genus_name: None,
            pairs: None,
            dims: None,
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TableDocument {
    pub version: u32,
    pub table: String,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LatticeJson {
    pub rank: usize,
    pub gram: Vec<Vec<i64>>,
    pub labels: Vec<String>,
}

impl LatticeJson {
    pub fn from_lattice(l: &Lattice) -> Result<Self> {
        Ok(LatticeJson { rank: l.rank(), gram: matrix_to_i64(l.gram())?, labels: l.labels().to_vec() })
    }

    pub fn to_lattice(&self) -> Result<Lattice> {
        if self.gram.len() != self.rank || self.gram.iter().any(|r| r.len() != self.rank) {
            return Err(Error::Parse("gram does not match rank".into()));
        }
        let g = Lattice::from_i64(&self.gram)?;
        if self.labels.is_empty() {
            Ok(g)
        } else {
            g.with_labels(self.labels.clone())
        }
    }
}

fn matrix_to_i64(m: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    m.rows()
        .map(|r| r.iter().map(|x| x.to_i64().ok_or_else(|| Error::Parse(format!("entry {x} does not fit in 64 bits")))).collect())
        .collect()
}

/// Inclusive range `a..b` or a single value.
pub fn parse_range(s: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse(format!("bad range '{s}', expected 'a..b' or 'a'"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim_start_matches('=').trim().parse().map_err(|_| bad())?),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if a < 1 || b < a {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn max_d() -> Result<i64> {
    match std::env::var(MAX_D_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("{MAX_D_VAR} must be an integer, got '{v}'"))),
        Err(_) => Ok(DEFAULT_MAX_D),
    }
}

/// Parses `A+B+...` where each summand is a catalog name.
pub fn parse_named_sum(s: &str) -> Result<Lattice> {
    let parts: Vec<NamedLattice> = s.split('+').map(|p| p.parse()).collect::<Result<_>>()?;
    catalog::make_sum(&parts)
}

fn read_inline_or_file(s: &str) -> Result<String> {
    match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}"))),
        None => Ok(s.to_string()),
    }
}

fn parse_int_rows(s: &str) -> Result<Vec<Vec<i64>>> {
    serde_json::from_str(s).map_err(|e| Error::Parse(format!("expected a JSON array of integer rows: {e}")))
}

fn parse_rational(v: &serde_json::Value) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational entry {v}"));
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(|x| BigRational::from_integer(x.into())).ok_or_else(bad),
        serde_json::Value::String(s) => {
            let (p, q) = s.split_once('/').unwrap_or((s, "1"));
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        _ => Err(bad()),
    }
}

pub fn load_lattice(src: &LatticeSource) -> Result<Lattice> {
    if let Some(n) = &src.name {
        return parse_named_sum(n);
    }
    if let Some(g) = &src.gram {
        return Lattice::from_i64(&parse_int_rows(g)?);
    }
    if let Some(j) = &src.json {
        let doc: LatticeJson = serde_json::from_str(&read_inline_or_file(j)?).map_err(|e| Error::Parse(e.to_string()))?;
        return doc.to_lattice();
    }
    Err(Error::Parse("no lattice given".into()))
}

fn variants(range: (i64, i64), only: Option<Kind>) -> Vec<EmbeddingVariant> {
    (range.0..=range.1)
        .flat_map(EmbeddingVariant::all_for)
        .filter(|v| only.is_none_or(|k| v.kind == k))
        .collect()
}

fn check_result(name: &str, r: Result<bool>, fail_message: impl Into<String>) -> Check {
    match r {
        Ok(true) => Check::new(name, true, ""),
        Ok(false) => Check::new(name, false, fail_message),
        Err(e) => Check::new(name, false, e.to_string()),
    }
}

pub fn picx_row(v: EmbeddingVariant) -> Result<TableRow> {
    let mut row = TableRow::empty(v);
    let r = embeddings::realize(v)?;
    let expected = r.expected_lattice()?;
    row.ns_x = Some(if v.kind == Kind::JTilde { NamedLattice::LambdaTilde(v.d) } else { NamedLattice::Lambda(v.d) }.to_string());
    row.t_x_genus_name = Some(embeddings::table1_target_name(v));
    let l = catalog::l();
    row.checks.push(Check::new("h^2 = 2d", l.norm(&r.h_image) == BigInt::from(2 * v.d), ""));
    row.checks.push(Check::new("image Gram", r.image.gram() == *expected.gram(), ""));
    row.checks.push(Check::new("image primitive", r.image.is_primitive(), ""));
    let t = embeddings::transcendental_of_x(v)?;
    row.checks.push(Check::new("T_X signature (2,0,12)", t.signature() == crate::linalg::Signature::new(2, 0, 12), ""));
    row.checks.push(check_result("T_X genus", genus_equal(&t, &embeddings::table1_target(v)?), "computed T_X is not in the listed genus"));
    Ok(row)
}

/// Renders `(r, l, s)` with `l` written in `t, n1..n7`, also for `NS(Z_d)`.
fn vector_name(m: Model, v: &mukai::MukaiVector) -> String {
    let mut coeffs: Vec<BigRational> = v.ell.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    if matches!(m, Model::TwistedZ(_)) {
        let half = &coeffs[0] / BigRational::from_integer(2.into());
        for c in coeffs.iter_mut().skip(1) {
            *c += &half;
        }
        coeffs[0] = half;
    }
    let labels = ["t", "n1", "n2", "n3", "n4", "n5", "n6", "n7"];
    let mut ell = String::new();
    for (c, l) in coeffs.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let neg = *c < BigRational::zero();
        let a = if neg { -c.clone() } else { c.clone() };
        let sign = if neg { "-" } else if ell.is_empty() { "" } else { "+" };
        let mag = if a == BigRational::from_integer(1.into()) {
            String::new()
        } else if a.is_integer() {
            a.to_string()
        } else {
            format!("({a})")
        };
        ell.push_str(&format!("{sign}{mag}{l}"));
    }
    if ell.is_empty() {
        ell.push('0');
    }
    format!("({}, {}, {})", v.r, ell, v.s)
}

pub fn modelsx_row(v: EmbeddingVariant) -> Result<TableRow> {
    let mut row = TableRow::empty(v);
    let target = embeddings::table1_target(v)?;
    match mukai::model_for(v) {
        None => {
            row.k3 = Some(format!("S_{}", v.d));
            row.model = Some(format!("S_{}^[2]", v.d));
            row.checks.push(check_result(
                "T(S_d) genus",
                mukai::hilbert_square_matches_j2(v.d),
                "T(S_d) is not in the genus of T_X",
            ));
        }
        Some(m) => {
            let k3 = if matches!(m, Model::TwistedZ(_)) { "Z" } else { "S" };
            row.k3 = Some(format!("{k3}_{}", v.d));
            row.model = Some(if matches!(m, Model::UntwistedS(_)) { format!("M_v({k3}_{})", v.d) } else { format!("M_v({k3}_{},beta)", v.d) });
            let rep = mukai::model_report(m)?;
            row.vector = Some(vector_name(m, &rep.vector));
            row.checks.push(Check::new("v^2 = 2", rep.square == BigInt::from(2), format!("v^2 = {}", rep.square)));
            row.checks.push(Check::new("v^perp genus", rep.genus_matches, format!("v^perp is not in the genus of {}", if matches!(m, Model::UntwistedS(_)) { "LambdaTilde" } else { "Lambda" })));
            row.checks.push(Check::new("complementarity", rep.complementary, "discriminant forms are not opposite"));
            row.checks.push(check_result("T_M genus", genus_equal(&m.moduli_transcendental()?, &target), "transcendental lattice of the model is not in the genus of T_X"));
        }
    }
    Ok(row)
}

pub fn nsy_row(v: EmbeddingVariant) -> Result<TableRow> {
    let mut row = TableRow::empty(v);
    let f = Family::Projective(v);
    let pic = quotient::orbifold_picard(&quotient::QuotientInput::for_family(f)?)?;
    let witness = Sublattice::new(catalog::h2y(), quotient::ns_witness_basis(f)?)?;
    let gram = witness.gram();
    row.ns_y_gram = Some(matrix_to_i64(&gram)?);
    row.t_y_genus_name = Some(quotient::expected_t_name(f));
    row.checks.push(Check::new("witness basis spans NS(Y)", witness.same_span(&pic.ns), ""));
    row.checks.push(Check::new("NS(Y) Gram", gram == quotient::expected_ns_gram(f), ""));
    let computed: Vec<String> = quotient::computed_t_parts(f).iter().map(|p| p.to_string()).collect();
    row.checks.push(check_result(
        "T_Y genus",
        pic.t_genus_equal(&quotient::expected_t(f)?),
        format!("computed T_Y is in the genus of {}", computed.join("+")),
    ));
    Ok(row)
}

pub fn projy_row(v: EmbeddingVariant) -> Result<TableRow> {
    let mut row = TableRow::empty(v);
    let rep = riemann_roch::projection_report(v)?;
    let to = |x: &BigInt| x.to_i64().ok_or_else(|| Error::Parse(format!("{x} does not fit in 64 bits")));
    row.pairs = Some([rep.pairs.0.n, rep.pairs.1.n]);
    row.dims = Some([to(&rep.dims.0)?, to(&rep.dims.1)?]);
    let (l1, l2) = riemann_roch::listed_dims(v);
    let ok = BigRational::from_integer(rep.dims.0.clone()) == l1 && BigRational::from_integer(rep.dims.1.clone()) == l2;
    row.checks.push(Check::new("row formulas", ok, format!("listed ({l1}, {l2})")));
    row.checks.push(Check::new("h0 sum", rep.h0_sum() == riemann_roch::eigenspace_total(v.d), ""));
    Ok(row)
}

pub fn table(name: TableName, range: (i64, i64), only: Option<Kind>) -> Result<TableDocument> {
    let f = match name {
        TableName::Picx => picx_row,
        TableName::Modelsx => modelsx_row,
        TableName::Nsy => nsy_row,
        TableName::Projy => projy_row,
    };
    let rows = variants(range, only).into_iter().map(f).collect::<Result<_>>()?;
    Ok(TableDocument { version: JSON_VERSION, table: name.as_str().into(), rows })
}

fn show_gram(g: &[Vec<i64>]) -> String {
    let rows: Vec<String> = g.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
    format!("[{}]", rows.join(";"))
}

pub fn render_text(doc: &TableDocument) -> String {
    let header: Vec<&str> = match doc.table.as_str() {
        "picx" => vec!["variant", "d", "NS(X)", "T(X)", "checks"],
        "modelsx" => vec!["variant", "d", "K3", "model", "v", "checks"],
        "nsy" => vec!["variant", "d", "NS(Y)", "T(Y)", "checks"],
        _ => vec!["variant", "d", "(N1,N2)", "m1", "m2", "checks"],
    };
    let mut lines: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for r in &doc.rows {
        let checks = if r.passed() {
            "ok".to_string()
        } else {
            let failed: Vec<String> = r
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| if c.message.is_empty() { format!("FAIL {}", c.name) } else { format!("FAIL {}: {}", c.name, c.message) })
                .collect();
            failed.join("; ")
        };
        let o = |x: &Option<String>| x.clone().unwrap_or_else(|| "-".into());
        let mut cells = vec![r.variant.to_string(), r.d.to_string()];
        match doc.table.as_str() {
            "picx" => cells.extend([o(&r.ns_x), o(&r.t_x_genus_name)]),
            "modelsx" => cells.extend([o(&r.k3), o(&r.model), o(&r.vector)]),
            "nsy" => cells.extend([r.ns_y_gram.as_ref().map(|g| show_gram(g)).unwrap_or_default(), o(&r.t_y_genus_name)]),
            _ => {
                let p = r.pairs.unwrap_or_default();
                let m = r.dims.unwrap_or_default();
                cells.extend([format!("({},{})", p[0], p[1]), m[0].to_string(), m[1].to_string()]);
            }
        }
        cells.push(checks);
        lines.push(cells);
    }
    let n = lines[0].len();
    let widths: Vec<usize> = (0..n).map(|i| lines.iter().map(|l| l[i].len()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for (li, l) in lines.iter().enumerate() {
        let cells: Vec<String> = l.iter().enumerate().map(|(i, c)| if i + 1 == n { c.clone() } else { format!("{c:<w$}", w = widths[i]) }).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
        if li == 0 {
            out.push_str(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  "));
            out.push('\n');
        }
    }
    out
}

fn signature_string(l: &Lattice) -> String {
    let s = l.signature();
    format!("({},{},{})", s.positive, s.zero, s.negative)
}

enum Outcome {
    Ok(String),
    Failed(String),
}

fn run_lattice(cmd: &LatticeCommand) -> Result<Outcome> {
    Ok(match cmd {
        LatticeCommand::Disc(src) => Outcome::Ok(discriminant_form(&load_lattice(src)?)?.describe()),
        LatticeCommand::Sig(src) => Outcome::Ok(signature_string(&load_lattice(src)?)),
        LatticeCommand::Complement { source, gens } => {
            let a = load_lattice(source)?;
            let rows = parse_int_rows(gens)?;
            let s = a.sublattice_i64(&rows)?;
            let c = s.orthogonal_complement()?;
            let json = serde_json::json!({
                "generators": matrix_to_i64(c.gens())?,
                "lattice": LatticeJson::from_lattice(&c.to_lattice())?,
            });
            Outcome::Ok(serde_json::to_string(&json).expect("serializable"))
        }
        LatticeCommand::Overlattice { source, glue } => {
            let a = load_lattice(source)?;
            let raw: Vec<Vec<serde_json::Value>> = serde_json::from_str(glue).map_err(|e| Error::Parse(e.to_string()))?;
            let rows: Vec<Vec<BigRational>> = raw.iter().map(|r| r.iter().map(parse_rational).collect()).collect::<Result<_>>()?;
            let m = RatMatrix::from_rows(rows, a.rank())?;
            let o = overlattice(&a, &m)?;
            let json = serde_json::json!({
                "index": o.index.to_string(),
                "lattice": LatticeJson::from_lattice(&o.lattice)?,
            });
            Outcome::Ok(serde_json::to_string(&json).expect("serializable"))
        }
    })
}

fn run_chi(a: &ChiArgs) -> Result<Outcome> {
    let need = |x: Option<i64>, flag: &str| x.ok_or_else(|| Error::Parse(format!("missing --{flag}")));
    let forbid = |present: bool, flag: &str| -> Result<()> {
        if present {
            Err(Error::Parse(format!("--{flag} does not apply to this formula")))
        } else {
            Ok(())
        }
    };
    let value = if a.cartier {
        forbid(a.q_l.is_some(), "qL")?;
        forbid(a.m.is_some(), "m")?;
        forbid(a.n.is_some(), "N")?;
        forbid(a.k.is_some(), "k")?;
        forbid(a.d.is_some(), "d")?;
        BigRational::from_integer(riemann_roch::chi_cartier(need(a.q, "q")?)?)
    } else if a.weil {
        forbid(a.q.is_some(), "q")?;
        forbid(a.k.is_some(), "k")?;
        forbid(a.d.is_some(), "d")?;
        riemann_roch::chi_weil(need(a.q_l, "qL")?, a.m.unwrap_or(1), a.n.unwrap_or(0))?
    } else {
        forbid(a.q_l.is_some(), "qL")?;
        forbid(a.m.is_some(), "m")?;
        let q_h = match (a.d, a.q) {
            (Some(d), None) => 2 * d,
            (None, Some(q)) => q,
            (Some(_), Some(_)) => return Err(Error::Parse("give either --d or --q".into())),
            (None, None) => return Err(Error::Parse("missing --d".into())),
        };
        riemann_roch::chi_orbifold(q_h, a.k.unwrap_or(0), a.n.unwrap_or(0))?
    };
    let text = value.to_string();
    if a.require_integer && !value.is_integer() {
        return Ok(Outcome::Failed(format!("{text} is not an integer")));
    }
    Ok(Outcome::Ok(text))
}

fn run_table(a: &TableArgs) -> Result<(String, bool)> {
    let range = parse_range(&a.d)?;
    let cap = max_d()?;
    if range.1 > cap {
        return Err(Error::Parse(format!("d = {} exceeds the cap {cap} set by {MAX_D_VAR}", range.1)));
    }
    let doc = table(a.name, range, a.variant)?;
    let ok = doc.rows.iter().all(TableRow::passed);
    let text = if a.json { serde_json::to_string_pretty(&doc).expect("serializable") + "\n" } else { render_text(&doc) };
    Ok((text, ok))
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Table(a) => run_table(a).map(|(t, ok)| if ok { Outcome::Ok(t) } else { Outcome::Failed(t) }),
        Command::Lattice(c) => run_lattice(c),
        Command::Chi(a) => run_chi(a),
    };
    match result {
        Ok(Outcome::Ok(t)) => {
            let _ = write!(out, "{}", with_newline(t));
            EXIT_OK
        }
        Ok(Outcome::Failed(t)) => {
            let _ = write!(out, "{}", with_newline(t));
            EXIT_FAILED
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}
