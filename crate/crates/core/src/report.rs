//! Serializable reports for the command-line front end, plus aligned text
//! rendering. The JSON shape is frozen under [`SCHEMA_VERSION`] and carries
//! no timing, so identical invocations print identical bytes.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;

use crate::bott::{bott_classify, CohomologyResult};
use crate::bundles::GradedDims;
use crate::csa::CsaLabel;
use crate::endo::{summarize, EndoSummary, TriangularDirection};
use crate::error::Result;
use crate::ktheory::{k0_decomposition, KDecomposition};
use crate::rootdata::{Parabolic, RootDatum, RootFamily, Weight};
use crate::tilting::{
    verify_with_jobs, CollectionFamily, ExtReport, Failure, InvolutionAudit, TiltingCollection,
    Verdict, WeightAudit,
};
use crate::util::ser_biguint;

pub const SCHEMA_VERSION: &str = "1.0.0";

const CLIFFORD_NOTE: &str = "the half-spin block is labelled C₀(A,σ); the sheaf 𝒥 is built \
from the full Clifford algebra C(A,σ), whose endomorphism ring is reported here as its even part";
const GLDIM_NOTE: &str =
    "gldim_bound is an upper bound (summands − 1), not the exact global dimension";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BottInputs {
    #[serde(rename = "type")]
    pub family: RootFamily,
    pub rank: usize,
    pub parabolic: Vec<usize>,
    pub weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BottReport {
    pub schema_version: &'static str,
    pub command: String,
    pub inputs: BottInputs,
    pub result: CohomologyResult,
    pub p_dominant: bool,
    pub warnings: Vec<String>,
}

pub fn bott_report(
    datum: &RootDatum,
    parabolic: &Parabolic,
    weight: &Weight,
) -> Result<BottReport> {
    let result = bott_classify(datum, weight)?;
    let p_dominant = datum.is_dominant_for(parabolic, weight);
    let mut warnings = Vec::new();
    if !p_dominant {
        warnings.push(format!(
            "{weight} is not dominant for the parabolic with marked nodes {:?}",
            parabolic.marked().iter().collect::<Vec<_>>()
        ));
    }
    let coords: Vec<String> = weight.coords().iter().map(i64::to_string).collect();
    let mut command = format!("bott {} {}", datum.family(), datum.rank());
    if parabolic.marked().len() != datum.rank() {
        let marked: Vec<String> = parabolic.marked().iter().map(usize::to_string).collect();
        let _ = write!(command, " --parabolic {}", marked.join(","));
    }
    let _ = write!(command, " -- {}", coords.join(" "));
    Ok(BottReport {
        schema_version: SCHEMA_VERSION,
        command,
        inputs: BottInputs {
            family: datum.family(),
            rank: datum.rank(),
            parabolic: parabolic.marked().iter().copied().collect(),
            weight: weight.clone(),
        },
        result,
        p_dominant,
        warnings,
    })
}

pub fn render_bott_text(r: &BottReport) -> String {
    let mut out = String::new();
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    match &r.result {
        CohomologyResult::Singular => out.push_str("Singular\n"),
        CohomologyResult::NonSingular {
            degree,
            dominant,
            dim,
        } => {
            let _ = writeln!(out, "H^{degree}, dim {dim}");
            let _ = writeln!(out, "dominant weight: {dominant}");
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightEntry {
    pub weight: Weight,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummandReport {
    pub index: usize,
    pub label: String,
    pub weights: Vec<WeightEntry>,
    #[serde(serialize_with = "ser_biguint")]
    pub scalar_mult: BigUint,
    #[serde(serialize_with = "ser_biguint")]
    pub rank: BigUint,
    pub tits: CsaLabel,
    pub block: usize,
}

fn summand_reports(c: &TiltingCollection) -> Vec<SummandReport> {
    c.summands
        .iter()
        .map(|s| SummandReport {
            index: s.order_index,
            label: s.label.clone(),
            weights: s
                .bundle
                .pieces()
                .iter()
                .map(|(w, &m)| WeightEntry {
                    weight: w.clone(),
                    multiplicity: m,
                })
                .collect(),
            scalar_mult: s.bundle.scalar_mult().clone(),
            rank: s.bundle.rank(),
            tits: s.tits,
            block: s.block,
        })
        .collect()
}

fn family_command(f: &CollectionFamily) -> String {
    match *f {
        CollectionFamily::SeveriBrauer { n } => format!("sb {n}"),
        CollectionFamily::GeneralizedSeveriBrauer { n, r } => format!("gsb {n} {r}"),
        CollectionFamily::Involution { n } => format!("inv {n}"),
    }
}

/// Everything `verify`, `endo` and `ktheory` print. The subcommands differ
/// only in which sections they render.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollectionReport {
    pub schema_version: &'static str,
    pub command: String,
    pub inputs: CollectionFamily,
    pub family: String,
    pub summands: Vec<SummandReport>,
    pub ext_table: Vec<Vec<GradedDims>>,
    pub verdict: Verdict,
    pub failures: Vec<Failure>,
    pub triangular_direction: Option<TriangularDirection>,
    pub weight_audit: WeightAudit,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub involution: Option<InvolutionAudit>,
    /// Present only when the verdict is `Tilting`.
    pub endo: Option<EndoSummary>,
    pub gldim_bound: Option<usize>,
    pub k0: KDecomposition,
    pub k0_display: String,
    pub notes: Vec<String>,
}

impl CollectionReport {
    pub fn is_tilting(&self) -> bool {
        self.verdict.is_tilting()
    }
}

pub fn collection_report(
    subcommand: &str,
    c: &TiltingCollection,
    jobs: Option<usize>,
) -> Result<CollectionReport> {
    let ext: ExtReport = verify_with_jobs(c, jobs)?;
    collection_report_from(subcommand, c, ext)
}

pub fn collection_report_from(
    subcommand: &str,
    c: &TiltingCollection,
    ext: ExtReport,
) -> Result<CollectionReport> {
    let endo = if ext.verdict.is_tilting() {
        Some(summarize(c, &ext)?)
    } else {
        None
    };
    let k0 = k0_decomposition(c);
    let mut notes = vec![GLDIM_NOTE.to_string()];
    if matches!(c.family, CollectionFamily::Involution { .. }) {
        notes.push(CLIFFORD_NOTE.to_string());
    }
    Ok(CollectionReport {
        schema_version: SCHEMA_VERSION,
        command: format!("{subcommand} {}", family_command(&c.family)),
        inputs: c.family,
        family: c.family.to_string(),
        summands: summand_reports(c),
        ext_table: ext.pairwise,
        verdict: ext.verdict,
        failures: ext.failures,
        triangular_direction: ext.triangular_direction,
        weight_audit: ext.weights,
        involution: ext.involution,
        gldim_bound: endo.as_ref().map(|e| e.gldim_bound),
        endo,
        k0_display: k0.to_string(),
        k0,
        notes,
    })
}

fn ext_cell(g: &GradedDims) -> String {
    if g.is_zero() {
        return "0".to_string();
    }
    if g.first_higher().is_none() {
        return g.hom().to_string();
    }
    g.iter()
        .map(|(k, d)| format!("{d}[{k}]"))
        .collect::<Vec<_>>()
        .join("+")
}

/// Right-aligned table with a header row and a header column.
fn aligned_table(row_labels: &[String], col_labels: &[String], cells: &[Vec<String>]) -> String {
    let first = row_labels
        .iter()
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(0);
    let widths: Vec<usize> = (0..col_labels.len())
        .map(|j| {
            cells
                .iter()
                .map(|r| r[j].chars().count())
                .chain([col_labels[j].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    let _ = write!(out, "{:first$}", "");
    for (j, l) in col_labels.iter().enumerate() {
        let _ = write!(out, "  {l:>w$}", w = widths[j]);
    }
    out.push('\n');
    for (i, row) in cells.iter().enumerate() {
        let _ = write!(out, "{:<first$}", row_labels[i]);
        for (j, cell) in row.iter().enumerate() {
            let _ = write!(out, "  {cell:>w$}", w = widths[j]);
        }
        out.push('\n');
    }
    out
}

fn render_summands(r: &CollectionReport, out: &mut String) {
    let _ = writeln!(out, "summands ({}):", r.summands.len());
    let label_w = r
        .summands
        .iter()
        .map(|s| s.label.chars().count())
        .max()
        .unwrap_or(0);
    for s in &r.summands {
        let weights: Vec<String> = s
            .weights
            .iter()
            .map(|w| {
                if w.multiplicity == 1 {
                    w.weight.to_string()
                } else {
                    format!("{}×{}", w.multiplicity, w.weight)
                }
            })
            .collect();
        let _ = writeln!(
            out,
            "  T{:<3} {:<label_w$}  rank {:>6}  block {:>2}  {:<10} {}",
            s.index,
            s.label,
            s.rank.to_string(),
            s.block,
            s.tits.to_string(),
            weights.join(" ⊕ ")
        );
    }
}

fn render_ext(r: &CollectionReport, out: &mut String) {
    let labels: Vec<String> = (0..r.summands.len()).map(|i| format!("T{i}")).collect();
    let cells: Vec<Vec<String>> = r
        .ext_table
        .iter()
        .map(|row| row.iter().map(ext_cell).collect())
        .collect();
    let _ = writeln!(out, "Ext(T_i, T_j)  (d[k] = dimension d in degree k):");
    out.push_str(&aligned_table(&labels, &labels, &cells));
}

fn render_verdict(r: &CollectionReport, out: &mut String) {
    match &r.verdict {
        Verdict::Tilting => {
            let dir = match r.triangular_direction {
                Some(TriangularDirection::Lower) => "lower",
                Some(TriangularDirection::Upper) => "upper",
                None => "none",
            };
            let _ = writeln!(out, "verdict: tilting (Hom matrix {dir} triangular)");
        }
        Verdict::Failure { witness } => {
            let _ = writeln!(out, "verdict: FAILURE: {witness}");
            for f in r.failures.iter().skip(1).take(9) {
                let _ = writeln!(out, "  also: {f}");
            }
            if r.failures.len() > 10 {
                let _ = writeln!(out, "  … {} more", r.failures.len() - 10);
            }
        }
    }
    let w = &r.weight_audit;
    let _ = writeln!(
        out,
        "BWB weights: {} total, {} singular, {} dominant, {} other",
        w.total, w.singular, w.dominant, w.other
    );
    if let Some(inv) = &r.involution {
        for f in &inv.families {
            let _ = writeln!(
                out,
                "  {:?}: {} pairs, {}",
                f.family,
                f.pairs,
                if f.holds {
                    "vanishing holds"
                } else {
                    "VIOLATED"
                }
            );
        }
        let _ = writeln!(
            out,
            "  named weights: {} checked, singular or dominant: {}",
            inv.named_weights_checked, inv.named_weights_singular_or_dominant
        );
        let _ = writeln!(out, "  half-spin ranks: {:?}", inv.spin_ranks);
    }
}

fn render_endo(r: &CollectionReport, out: &mut String) {
    let Some(e) = &r.endo else {
        out.push_str("End(T): not available, collection is not tilting\n");
        return;
    };
    let blocks: Vec<String> = e.structure.blocks.iter().map(|b| b.to_string()).collect();
    let _ = writeln!(out, "diagonal blocks: {}", blocks.join(", "));
    let labels: Vec<String> = (0..e.structure.hom_dims.len())
        .map(|i| format!("T{i}"))
        .collect();
    let cells: Vec<Vec<String>> = e
        .structure
        .hom_dims
        .iter()
        .map(|row| row.iter().map(|x| x.to_string()).collect())
        .collect();
    let _ = writeln!(out, "dim Hom(T_i, T_j):");
    out.push_str(&aligned_table(&labels, &labels, &cells));
    let _ = writeln!(out, "gldim End(T) ≤ {}", e.gldim_bound);
    match e.nilpotency_index {
        Some(k) => {
            let _ = writeln!(out, "off-diagonal part nilpotent of index {k}");
        }
        None => out.push_str("off-diagonal part NOT nilpotent\n"),
    }
    let _ = writeln!(out, "det χ(T_i, T_j) = {}", e.euler_determinant);
}

fn render_k0(r: &CollectionReport, out: &mut String) {
    let _ = writeln!(out, "K_*(X) ≅ {}", r.k0_display);
    let _ = writeln!(out, "K_0 rank after splitting: {}", r.k0.k0_rank_split);
}

pub fn render_verify_text(r: &CollectionReport) -> String {
    let mut out = format!("{}\n", r.family);
    render_summands(r, &mut out);
    render_ext(r, &mut out);
    render_verdict(r, &mut out);
    render_endo(r, &mut out);
    render_k0(r, &mut out);
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

pub fn render_endo_text(r: &CollectionReport) -> String {
    let mut out = format!("{}\n", r.family);
    render_summands(r, &mut out);
    render_endo(r, &mut out);
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

pub fn render_ktheory_text(r: &CollectionReport) -> String {
    let mut out = format!("{}\n", r.family);
    render_k0(r, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tilting::{build_inv, build_sb};

    #[test]
    fn bott_text() {
        let d = RootDatum::type_a(1).unwrap();
        let p = Parabolic::borel(1);
        let r = bott_report(&d, &p, &Weight::new(vec![-2])).unwrap();
        assert_eq!(render_bott_text(&r), "H^1, dim 1\ndominant weight: 0\n");
        let r = bott_report(&d, &p, &Weight::new(vec![-1])).unwrap();
        assert_eq!(render_bott_text(&r), "Singular\n");
        assert_eq!(r.command, "bott A 1 -- -1");
    }

    #[test]
    fn bott_warns_off_parabolic() {
        let d = RootDatum::type_a(2).unwrap();
        let p = Parabolic::new(2, [1]).unwrap();
        let r = bott_report(&d, &p, &Weight::new(vec![0, -1])).unwrap();
        assert!(!r.p_dominant);
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn report_shape() {
        let c = build_sb(3).unwrap();
        let r = collection_report("verify", &c, None).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for key in [
            "schema_version",
            "family",
            "summands",
            "ext_table",
            "gldim_bound",
            "k0",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["gldim_bound"], 2);
        assert_eq!(v["summands"][2]["scalar_mult"], 9);
        assert_eq!(v["ext_table"][1][0]["0"], 9);
        assert_eq!(v["command"], "verify sb 3");
    }

    #[test]
    fn inv_report_notes() {
        let c = build_inv(3).unwrap();
        let r = collection_report("verify", &c, Some(2)).unwrap();
        assert!(r.is_tilting());
        assert_eq!(r.notes.len(), 2);
        let text = render_verify_text(&r);
        assert!(text.contains("C₀(A,σ)"));
    }
}
