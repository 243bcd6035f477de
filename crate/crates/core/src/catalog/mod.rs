//! Complex Jordan algebras of dimension at most 4 in soliton form, their
//! strata, invariant fingerprints and the table-reproduction harness.

mod data;

use std::fmt;
use std::sync::OnceLock;

use num_rational::Rational64;
use rayon::prelude::*;

use crate::algebra::{derivation_algebra, find_unit, flags, is_associative, is_jordan, is_semisimple, power_dims, product_rank, Flags, StructureTensor};
use crate::error::{Error, Result};
use crate::flow::{run_flow, FlowOptions};
use crate::linalg::{eigvalsh, re, HermitianMatrix};
use crate::moment::{moment_map, soliton_check, soliton_type_with, SolitonType, SOLITON_TOL};
use crate::rational::{fmt_rational, parse_rational, to_f64};
use crate::stratify::{beta_mu, StratumLabel};

/// A table constant together with the expression it was written as.
#[derive(Clone, Copy, Debug)]
pub struct Coef {
    pub value: f64,
    pub tag: &'static str,
}

enum Table {
    Products(Vec<(&'static str, Coef, &'static str)>),
    /// The one-parameter family containing the fourth-dimension entries
    /// 16, 17 and 25, at printed precision.
    Family { k: f64, t: f64, wide: bool, ell: Option<f64> },
    Alpha53,
}

struct Raw {
    name: &'static str,
    dim: usize,
    table: Table,
    flags: &'static str,
    decomposition: &'static str,
    stratum: &'static str,
}

/// Table flags that disagree with the algebra they annotate.
const FLAG_ERRATA: &[(&str, &str)] = &[("A_4_40", "A"), ("A_4_71", "D"), ("A_4_72", "D")];

/// A row of a stratification table.
#[derive(Clone, Debug)]
pub struct Stratum {
    pub key: &'static str,
    pub soliton_type: SolitonType,
    pub label: StratumLabel,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub dim: usize,
    pub tensor: StructureTensor,
    /// Flags as printed, closed under S => SS => U.
    pub flags: Flags,
    /// Factor names; "T" is the one-dimensional trivial algebra.
    pub decomposition: Option<Vec<String>>,
    /// None for the single algebra without a soliton in its orbit.
    pub expected_type: Option<SolitonType>,
    pub expected_beta: Vec<Rational64>,
    pub expected_energy: Rational64,
    /// Coefficients stored at printed precision only.
    pub approximate: bool,
    /// Products as written, e.g. "e2e2 = s(5.0) / 2.0 e1".
    pub provenance: Vec<String>,
}

impl CatalogEntry {
    pub fn is_distinguished(&self) -> bool {
        self.expected_type.is_some()
    }

    pub fn expected_label(&self) -> StratumLabel {
        StratumLabel::new(self.expected_beta.clone())
    }

    /// Table flag letters known to be misprinted for this entry.
    pub fn flag_errata(&self) -> Vec<&'static str> {
        FLAG_ERRATA.iter().filter(|(n, _)| *n == self.name).map(|(_, f)| *f).collect()
    }

    /// The tensor itself, or for approximate entries the soliton reached by
    /// flowing from it.
    pub fn soliton_tensor(&self) -> Result<StructureTensor> {
        if !self.approximate {
            return Ok(self.tensor.clone());
        }
        let opts = FlowOptions { extract_limit: false, ..FlowOptions::default() };
        Ok(run_flow(&self.tensor, &opts)?.terminal)
    }
}

fn basis_index(token: &str, e_count: usize) -> usize {
    let (kind, idx) = token.split_at(1);
    let idx: usize = idx.parse().expect("catalog index");
    match kind {
        "e" => idx - 1,
        _ => e_count + idx - 1,
    }
}

fn e_count(products: &[(&str, Coef, &str)]) -> usize {
    let mut p = 0;
    for (xy, _, z) in products {
        for tok in [&xy[..2], &xy[2..], z] {
            if let Some(i) = tok.strip_prefix('e') {
                p = p.max(i.parse::<usize>().expect("catalog index"));
            }
        }
    }
    p
}

fn family(k: f64, t: f64, wide: bool, ell: Option<f64>) -> StructureTensor {
    let (c, s) = (t.cos(), t.sin());
    let mut p = vec![
        (0, 0, 0, k * (c.powi(3) - s.powi(3))),
        (0, 0, 1, k * k * c * s * (c + s)),
        (1, 1, 0, c * s * (s - c) / k),
        (1, 1, 1, c.powi(3) + s.powi(3)),
        (0, 1, 0, c * s * (c + s)),
        (0, 1, 1, k * c * s * (s - c)),
        (0, 2, 2, k / 2.0 * (c - s)),
        (1, 2, 2, 0.5 * (c + s)),
    ];
    if wide {
        p.extend([(0, 3, 3, k * c), (1, 3, 3, s)]);
    } else {
        p.extend([(0, 3, 3, k / 2.0 * c), (1, 3, 3, 0.5 * s)]);
    }
    if let Some(l) = ell {
        p.push((2, 2, 3, l));
    }
    let p: Vec<_> = p.into_iter().map(|(i, j, k, v)| (i, j, k, re(v))).collect();
    StructureTensor::from_products(4, &p)
}

fn alpha53() -> StructureTensor {
    let r = 345f64.sqrt();
    let a = ((r - 5.0) / 20.0).sqrt();
    let b = ((r + 45.0) / 80.0).sqrt();
    let p = [
        (0, 0, 0, 1.0),
        (0, 1, 1, 0.5),
        (0, 2, 2, 0.5),
        (0, 2, 3, a / 2.0),
        (0, 3, 2, 1.0 / (2.0 * a)),
        (0, 3, 3, 0.5),
        (1, 1, 3, b),
    ];
    let p: Vec<_> = p.iter().map(|&(i, j, k, v)| (i, j, k, re(v))).collect();
    StructureTensor::from_products(4, &p)
}

fn build(raw: Raw) -> CatalogEntry {
    let (tensor, provenance, approximate) = match &raw.table {
        Table::Products(products) => {
            let p = e_count(products);
            let mut t = StructureTensor::zeros(raw.dim);
            let mut prov = Vec::new();
            for (xy, c, z) in products {
                let i = basis_index(&xy[..2], p);
                let j = basis_index(&xy[2..], p);
                t.add(i.min(j), i.max(j), basis_index(z, p), re(c.value));
                prov.push(format!("{xy} = {} {z}", c.tag));
            }
            (t, prov, false)
        }
        Table::Family { k, t, wide, ell } => {
            let mut prov = vec![format!("k = {k}"), format!("t = {t}")];
            if let Some(l) = ell {
                prov.push(format!("n1n1 = {l} n2"));
            }
            (family(*k, *t, *wide, *ell), prov, true)
        }
        Table::Alpha53 => (
            alpha53(),
            vec!["a = sqrt((sqrt(345) - 5) / 20)".into(), "b = sqrt((sqrt(345) + 45) / 80)".into()],
            false,
        ),
    };
    let stratum = stratum(raw.stratum).expect("catalog stratum key");
    let decomposition = (!raw.decomposition.is_empty()).then(|| raw.decomposition.split_whitespace().map(String::from).collect());
    CatalogEntry {
        name: raw.name.to_string(),
        dim: raw.dim,
        tensor,
        flags: Flags::parse(raw.flags).expect("catalog flags"),
        decomposition,
        expected_type: (raw.name != "A_4_63").then(|| stratum.soliton_type.clone()),
        expected_beta: stratum.label.beta.clone(),
        expected_energy: stratum.label.norm_sq,
        approximate,
        provenance,
    }
}

fn entries() -> &'static [CatalogEntry] {
    static CELL: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CELL.get_or_init(|| data::raw().into_iter().map(build).collect())
}

fn strata_rows() -> &'static [Stratum] {
    static CELL: OnceLock<Vec<Stratum>> = OnceLock::new();
    CELL.get_or_init(|| {
        data::STRATA
            .iter()
            .map(|(key, _, beta, _)| {
                let beta: Vec<Rational64> = beta.split_whitespace().map(|b| parse_rational(b).expect("stratum beta")).collect();
                let label = StratumLabel::new(beta);
                Stratum { key, soliton_type: SolitonType::from_beta(label.beta.clone()), label }
            })
            .collect()
    })
}

fn stratum(key: &str) -> Option<&'static Stratum> {
    strata_rows().iter().find(|s| s.key == key)
}

/// Rows of the stratification table of the given dimension.
pub fn strata(dim: usize) -> Vec<&'static Stratum> {
    strata_rows().iter().filter(|s| s.soliton_type.dim() == dim).collect()
}

pub fn builtin(name: &str) -> Result<CatalogEntry> {
    entries().iter().find(|e| e.name == name).cloned().ok_or_else(|| Error::UnknownName(name.to_string()))
}

pub fn all() -> &'static [CatalogEntry] {
    entries()
}

pub fn by_dim(dim: usize) -> Vec<&'static CatalogEntry> {
    entries().iter().filter(|e| e.dim == dim).collect()
}

/// e1 e1 = e2 on C^n.
pub fn heisenberg(n: usize) -> Result<StructureTensor> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    Ok(StructureTensor::from_products(n, &[(0, 0, 1, re(1.0))]))
}

/// e1 e1 = e1, e1 e_i = e_i / 2 for i > 1.
pub fn hyperbolic(n: usize) -> Result<StructureTensor> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let mut p = vec![(0, 0, 0, re(1.0))];
    p.extend((1..n).map(|i| (0, i, i, re(0.5))));
    Ok(StructureTensor::from_products(n, &p))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Fingerprint {
    pub dim: usize,
    pub dim_der: usize,
    pub power_dims: Vec<usize>,
    pub product_rank: usize,
    pub is_nilpotent: bool,
    pub is_semisimple: bool,
    pub is_associative: bool,
    pub has_unit: bool,
    /// Energy at the end of the flow.
    pub energy: f64,
}

impl Fingerprint {
    pub fn matches(&self, other: &Fingerprint) -> bool {
        self.dim == other.dim
            && self.dim_der == other.dim_der
            && self.power_dims == other.power_dims
            && self.product_rank == other.product_rank
            && self.is_nilpotent == other.is_nilpotent
            && self.is_semisimple == other.is_semisimple
            && self.is_associative == other.is_associative
            && self.has_unit == other.has_unit
            && (self.energy - other.energy).abs() <= 1e-6
    }
}

pub fn fingerprint(mu: &StructureTensor) -> Result<Fingerprint> {
    fingerprint_with(mu, &FlowOptions::default())
}

pub fn fingerprint_with(mu: &StructureTensor, opts: &FlowOptions) -> Result<Fingerprint> {
    let pd = power_dims(mu);
    let trace = run_flow(mu, opts)?;
    Ok(Fingerprint {
        dim: mu.dim(),
        dim_der: derivation_algebra(mu).dim,
        product_rank: product_rank(mu),
        is_nilpotent: pd.is_nilpotent,
        power_dims: pd.dims,
        is_semisimple: is_semisimple(mu),
        is_associative: is_associative(mu, 1e-9),
        has_unit: find_unit(mu).is_some(),
        energy: trace.terminal_energy(),
    })
}

fn catalog_fingerprints() -> &'static [(String, Result<Fingerprint>)] {
    static CELL: OnceLock<Vec<(String, Result<Fingerprint>)>> = OnceLock::new();
    CELL.get_or_init(|| entries().par_iter().map(|e| (e.name.clone(), fingerprint(&e.tensor))).collect())
}

/// Fingerprint of a catalog entry, computed once per process.
pub fn entry_fingerprint(name: &str) -> Result<Fingerprint> {
    match catalog_fingerprints().iter().find(|(n, _)| n == name) {
        Some((_, Ok(f))) => Ok(f.clone()),
        Some((_, Err(e))) => Err(Error::Format(format!("fingerprint of {name}: {e}"))),
        None => Err(Error::UnknownName(name.to_string())),
    }
}

/// Catalog entries of the same dimension whose fingerprints agree with mu's.
pub fn match_fingerprint(fp: &Fingerprint) -> Vec<String> {
    catalog_fingerprints()
        .iter()
        .filter(|(_, f)| matches!(f, Ok(f) if f.matches(fp)))
        .map(|(n, _)| n.clone())
        .collect()
}

pub fn match_tensor(mu: &StructureTensor) -> Result<Vec<String>> {
    Ok(match_fingerprint(&fingerprint(mu)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ReproduceRow {
    pub name: String,
    pub expected_type: String,
    pub expected_beta: Vec<Rational64>,
    pub expected_energy: Rational64,
    pub soliton: bool,
    pub residual: f64,
    /// Sorted spectrum of m at the checked tensor (or at the flow terminal).
    pub beta: Vec<f64>,
    pub energy: f64,
    pub label: Option<StratumLabel>,
    pub beta_mu: Option<StratumLabel>,
    pub flags_expected: Flags,
    pub flags_computed: Flags,
    pub status: Status,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct ReproduceReport {
    pub dims: Vec<usize>,
    pub seed: u64,
    pub rows: Vec<ReproduceRow>,
}

impl ReproduceReport {
    pub fn failures(&self) -> Vec<&ReproduceRow> {
        self.rows.iter().filter(|r| r.status == Status::Fail).collect()
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    /// Number of distinct strata hit by the rows.
    pub fn distinct_strata(&self) -> usize {
        let mut seen: Vec<&Vec<Rational64>> = Vec::new();
        for r in &self.rows {
            if !seen.contains(&&r.expected_beta) {
                seen.push(&r.expected_beta);
            }
        }
        seen.len()
    }

    fn cells(r: &ReproduceRow) -> [String; 9] {
        let label = r.label.as_ref().map_or("-".to_string(), |l| l.beta_text().join(" "));
        [
            r.name.clone(),
            r.status.to_string(),
            r.expected_type.clone(),
            r.expected_beta.iter().map(fmt_rational).collect::<Vec<_>>().join(" "),
            fmt_rational(&r.expected_energy),
            label,
            format!("{:.12e}", r.residual),
            format!("{}", r.flags_computed),
            r.notes.join("; "),
        ]
    }

    const HEADER: [&'static str; 9] = ["name", "status", "type", "beta", "energy", "computed_beta", "residual", "flags", "notes"];

    pub fn to_csv(&self) -> String {
        let quote = |s: &str| if s.contains([',', '"', ';']) { format!("\"{}\"", s.replace('"', "\"\"")) } else { s.to_string() };
        let mut out = format!("# seed {}\n{}\n", self.seed, Self::HEADER.join(","));
        for r in &self.rows {
            out += &Self::cells(r).iter().map(|c| quote(c)).collect::<Vec<_>>().join(",");
            out.push('\n');
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("seed {}\n\n| {} |\n|{}\n", self.seed, Self::HEADER.join(" | "), "---|".repeat(Self::HEADER.len()));
        for r in &self.rows {
            out += &format!("| {} |\n", Self::cells(r).join(" | "));
        }
        out += &format!("\n{} rows, {} failures, {} strata\n", self.rows.len(), self.failures().len(), self.distinct_strata());
        out
    }
}

fn off_diagonal(m: &HermitianMatrix) -> f64 {
    let n = m.nrows();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).map(|(i, j)| m[(i, j)].norm()).fold(0.0, f64::max)
}

fn sorted_spectrum(mu: &StructureTensor) -> Result<Vec<f64>> {
    let mut w = eigvalsh(&moment_map(mu)?);
    w.sort_by(f64::total_cmp);
    Ok(w)
}

fn check_entry(entry: &CatalogEntry, opts: &FlowOptions) -> Result<ReproduceRow> {
    let mut notes = Vec::new();
    let mut ok = true;
    let expected_label = entry.expected_label();
    if !is_jordan(&entry.tensor, 1e-9) {
        ok = false;
        notes.push("not Jordan".into());
    }
    let computed_flags = flags(&entry.tensor);
    let errata = entry.flag_errata();
    for f in entry.flags.diff(&computed_flags) {
        if errata.contains(&f) {
            notes.push(format!("table flag {f} misprinted"));
        } else {
            ok = false;
            notes.push(format!("flag {f} differs"));
        }
    }
    let raw_report = soliton_check(&entry.tensor, SOLITON_TOL)?;
    let (soliton, residual, beta, energy, label);
    if entry.is_distinguished() {
        let t = if entry.approximate {
            if raw_report.soliton_residual >= 1e-3 {
                ok = false;
                notes.push(format!("printed parameters off by {:.3e}", raw_report.soliton_residual));
            }
            notes.push(format!("refined from residual {:.3e}", raw_report.soliton_residual));
            entry.soliton_tensor()?
        } else {
            entry.tensor.clone()
        };
        let report = soliton_check(&t, SOLITON_TOL)?;
        soliton = report.is_soliton;
        residual = report.soliton_residual;
        energy = report.energy;
        beta = sorted_spectrum(&t)?;
        match soliton_type_with(&t, SOLITON_TOL) {
            Ok(ty) => {
                if Some(&ty) != entry.expected_type.as_ref() {
                    ok = false;
                    notes.push(format!("type {ty}"));
                }
                label = Some(StratumLabel::new(ty.beta.clone()));
            }
            Err(e) => {
                ok = false;
                notes.push(e.to_string());
                label = None;
            }
        }
        if !soliton {
            ok = false;
        }
    } else {
        soliton = raw_report.is_soliton;
        if soliton {
            ok = false;
            notes.push("unexpected soliton".into());
        }
        let trace = run_flow(&entry.tensor, opts)?;
        residual = trace.terminal_report.soliton_residual;
        energy = trace.terminal_energy();
        beta = sorted_spectrum(&trace.terminal)?;
        label = trace.terminal_type.as_ref().map(|t| StratumLabel::new(t.beta.clone()));
        if (energy - to_f64(&entry.expected_energy)).abs() > 1e-6 {
            ok = false;
            notes.push(format!("flow energy {energy:.12}"));
        }
        notes.push(format!("flow limit after {} steps", trace.steps_taken));
        if let Ok(fp) = fingerprint_with(&trace.terminal, opts) {
            let own = entry_fingerprint(&entry.name)?;
            if fp.matches(&own) {
                ok = false;
                notes.push("limit fingerprint equals the algebra's".into());
            } else {
                notes.push("limit not in orbit".into());
            }
        }
    }
    if label.as_ref() != Some(&expected_label) {
        ok = false;
    }
    // beta_mu is the spectrum of m only when m is diagonal in the table basis.
    let bm = beta_mu(&entry.tensor).ok().and_then(|b| b.label);
    if entry.is_distinguished() && off_diagonal(&moment_map(&entry.tensor)?) < 1e-9 && bm.as_ref() != Some(&expected_label) {
        ok = false;
        notes.push("beta_mu differs".into());
    }
    Ok(ReproduceRow {
        name: entry.name.clone(),
        expected_type: entry.expected_type.as_ref().map_or("none".into(), |t| t.to_string()),
        expected_beta: entry.expected_beta.clone(),
        expected_energy: entry.expected_energy,
        soliton,
        residual,
        beta,
        energy,
        label,
        beta_mu: bm,
        flags_expected: entry.flags,
        flags_computed: computed_flags,
        status: if ok { Status::Pass } else { Status::Fail },
        notes,
    })
}

/// Recomputes every entry of the given dimensions against the tables.
/// `jobs = 0` uses one worker per core.
pub fn reproduce_tables(dims: &[usize], jobs: usize, opts: &FlowOptions) -> Result<ReproduceReport> {
    let selected: Vec<&CatalogEntry> = entries().iter().filter(|e| dims.contains(&e.dim)).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| Error::Format(e.to_string()))?;
    let rows = pool.install(|| selected.par_iter().map(|e| check_entry(e, opts)).collect::<Result<Vec<_>>>())?;
    Ok(ReproduceReport { dims: dims.to_vec(), seed: opts.seed, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moment::energy;

    #[test]
    fn counts() {
        assert_eq!(all().len(), 97);
        assert_eq!(by_dim(1).len(), 1);
        assert_eq!(by_dim(2).len(), 5);
        assert_eq!(by_dim(3).len(), 19);
        assert_eq!(by_dim(4).len(), 72);
        assert_eq!((1..=4).map(|d| strata(d).len()).collect::<Vec<_>>(), vec![1, 3, 7, 19]);
    }

    #[test]
    fn stratum_types_match_table_text() {
        for (key, ty, _, e) in data::STRATA {
            let s = stratum(key).unwrap();
            assert_eq!(s.soliton_type.to_string(), *ty, "{key}");
            assert_eq!(s.label.norm_sq, parse_rational(e).unwrap(), "{key}");
        }
    }

    #[test]
    fn builtin_examples() {
        let a23 = builtin("A_2_3").unwrap();
        assert_eq!(a23.tensor, heisenberg(2).unwrap());
        assert_eq!(builtin("A_2_2").unwrap().tensor, hyperbolic(2).unwrap());
        let a463 = builtin("A_4_63").unwrap();
        assert!(!a463.is_distinguished());
        assert_eq!(a463.tensor.get(1, 1, 3), re(1.0));
        assert_eq!(a463.tensor.get(0, 2, 3), re(1.0));
        assert_eq!(builtin("A_1_1").unwrap().tensor.get(0, 0, 0), re(1.0));
        assert!(matches!(builtin("A_5_1"), Err(Error::UnknownName(_))));
        assert!(heisenberg(1).is_err() && hyperbolic(0).is_err());
        assert!((energy(&heisenberg(7).unwrap()).unwrap() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn irrational_constants_keep_their_tags() {
        let a32 = builtin("A_3_2").unwrap();
        assert!(a32.provenance.iter().any(|p| p == "e2e2 = s(5.0) / 2.0 e1"));
        assert!((a32.tensor.get(1, 1, 0).re - 5f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn all_entries_are_jordan() {
        for e in all() {
            assert!(is_jordan(&e.tensor, 1e-9), "{}", e.name);
        }
    }

    #[test]
    fn mixed_basis_indexing() {
        // e's come first, then n's.
        let e = builtin("A_3_15").unwrap();
        assert!((e.tensor.get(0, 0, 0).re - 5f64.sqrt()).abs() < 1e-14);
        assert_eq!(e.tensor.get(1, 1, 2), re(1.0));
    }
}
