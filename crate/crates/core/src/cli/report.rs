//! Report sections shared by the text and JSON outputs.

use std::fmt::Write as _;

use serde::Serialize;

use crate::field::Field;
use crate::gorenstein::{CohomologyEntry, GorensteinReport, GorensteinVerdict};
use crate::koszul::{GlobalDimension, KoszulVerdict, KoszulityReport, PoincareCheck, TwistIsoReport};
use crate::presentation::{Presentation, RegularityReport, Side};

use super::{gldim_status, koszul_verdict_name};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PresentationSummary {
    pub field: String,
    pub gens: Vec<String>,
    pub dim_e: usize,
    pub n: usize,
    pub dim_r: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HomologyRow {
    pub degree: usize,
    /// `dim H_q` for `q = 1, 2, …`.
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct KoszulWitness {
    pub degree: usize,
    pub hom_degree: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct KoszulSection {
    pub verdict: String,
    pub cutoff: usize,
    pub witness: Option<KoszulWitness>,
    pub homology_table: Vec<HomologyRow>,
}

impl From<&KoszulityReport> for KoszulSection {
    fn from(k: &KoszulityReport) -> Self {
        let witness = match k.verdict {
            KoszulVerdict::NotKoszul {
                degree,
                hom_degree,
                dim,
            } => Some(KoszulWitness {
                degree,
                hom_degree,
                dim,
            }),
            KoszulVerdict::KoszulUpToCutoff => None,
        };
        KoszulSection {
            verdict: koszul_verdict_name(&k.verdict, k.cutoff),
            cutoff: k.cutoff,
            witness,
            homology_table: k
                .table
                .iter()
                .enumerate()
                .map(|(degree, dims)| HomologyRow {
                    degree,
                    dims: dims.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GldimSection {
    pub status: String,
    pub value: Option<usize>,
    /// First `i` with `A^{!*}_i = 0`.
    pub vanishing_degree: Option<usize>,
    pub checked_through: Option<usize>,
}

impl From<GlobalDimension> for GldimSection {
    fn from(g: GlobalDimension) -> Self {
        let (value, vanishing_degree, checked_through) = match g {
            GlobalDimension::Finite { value, vanishing } => (Some(value), Some(vanishing), None),
            GlobalDimension::Infinite => (None, None, None),
            GlobalDimension::ExceedsCap { checked_through } => (None, None, Some(checked_through)),
        };
        GldimSection {
            status: gldim_status(&g).into(),
            value,
            vanishing_degree,
            checked_through,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PoincareSection {
    pub cutoff: usize,
    pub dual_poly: Vec<i64>,
    pub residual: Vec<i64>,
    pub passes: bool,
}

impl From<&PoincareCheck> for PoincareSection {
    fn from(c: &PoincareCheck) -> Self {
        PoincareSection {
            cutoff: c.cutoff,
            dual_poly: c.dual_poly.clone(),
            residual: c.residual.clone(),
            passes: c.passes(),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct HEntry {
    pub q: usize,
    pub weight: i64,
    /// `null` when inconclusive at this cutoff.
    pub dim: Option<usize>,
}

impl From<&CohomologyEntry> for HEntry {
    fn from(e: &CohomologyEntry) -> Self {
        HEntry {
            q: e.hom_degree,
            weight: e.weight,
            dim: e.dim,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GorensteinSection {
    pub verdict: String,
    pub cutoff: usize,
    pub reason: Option<String>,
    /// Lowest-weight witness.
    pub witness: Option<HEntry>,
    pub witnesses: Vec<HEntry>,
    pub fundamental: Option<HEntry>,
    pub top_total: usize,
    pub h_table: Vec<HEntry>,
    pub warnings: Vec<String>,
}

impl From<&GorensteinReport> for GorensteinSection {
    fn from(g: &GorensteinReport) -> Self {
        let (verdict, reason) = match &g.verdict {
            GorensteinVerdict::GorensteinUpToCutoff => (format!("gorenstein-consistent-up-to-{}", g.cutoff), None),
            GorensteinVerdict::NotGorenstein => ("not-gorenstein".to_string(), None),
            GorensteinVerdict::Inconclusive(why) => ("inconclusive".to_string(), Some(why.clone())),
        };
        let witnesses: Vec<HEntry> = g.witnesses.iter().map(HEntry::from).collect();
        GorensteinSection {
            verdict,
            cutoff: g.cutoff,
            reason,
            witness: witnesses.first().copied(),
            witnesses,
            fundamental: g.fundamental.as_ref().map(HEntry::from),
            top_total: g.top_total,
            h_table: g.table.iter().map(HEntry::from).collect(),
            warnings: g.warnings.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IsoSection {
    pub passed: bool,
    pub cutoff: usize,
    pub bidegrees_checked: usize,
    pub dual_mismatches: Vec<usize>,
    pub singular: Vec<(usize, usize)>,
    pub chain_failures: Vec<(usize, usize)>,
    pub homology_agrees: bool,
}

impl From<&TwistIsoReport> for IsoSection {
    fn from(r: &TwistIsoReport) -> Self {
        IsoSection {
            passed: r.passed(),
            cutoff: r.cutoff,
            bidegrees_checked: r.bidegrees_checked,
            dual_mismatches: r.dual_mismatches.clone(),
            singular: r.singular.clone(),
            chain_failures: r.chain_failures.clone(),
            homology_agrees: r.homology_agrees,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TwistSection {
    pub relations_out: Vec<String>,
    pub iso_check: Option<IsoSection>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct KernelEntry {
    pub degree: usize,
    pub kernel_dim: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RegularSection {
    pub element: String,
    pub side: String,
    pub cutoff: usize,
    pub verdict: String,
    pub first_failure: Option<usize>,
    pub kernel_dims: Vec<KernelEntry>,
}

impl RegularSection {
    pub fn new(element: &str, r: &RegularityReport) -> Self {
        RegularSection {
            element: element.to_string(),
            side: match r.side {
                Side::Left => "left",
                Side::Right => "right",
            }
            .into(),
            cutoff: r.cutoff,
            verdict: if r.is_regular() {
                format!("regular-up-to-{}", r.cutoff)
            } else {
                "not-regular".into()
            },
            first_failure: r.first_failure(),
            kernel_dims: r
                .kernel_dims
                .iter()
                .map(|&(degree, kernel_dim)| KernelEntry { degree, kernel_dim })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ErrorSection {
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub koszul: Option<KoszulSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gldim: Option<GldimSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poincare: Option<PoincareSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<GorensteinSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twist: Option<TwistSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regular: Option<RegularSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorSection>,
    pub exit_code: i32,
}

impl Report {
    pub fn new<F: Field>(command: &str, p: &Presentation<F>) -> Self {
        let mut r = Report::bare(command);
        r.presentation = Some(PresentationSummary {
            field: p.field().spec().to_string(),
            gens: p.gen_names().to_vec(),
            dim_e: p.dim_e(),
            n: p.degree(),
            dim_r: p.relations().dim(),
        });
        r
    }

    pub fn bare(command: &str) -> Self {
        Report {
            command: command.to_string(),
            presentation: None,
            koszul: None,
            gldim: None,
            hilbert: None,
            poincare: None,
            gorenstein: None,
            twist: None,
            regular: None,
            error: None,
            exit_code: 0,
        }
    }

    pub fn failure(command: &str, err: &crate::Error) -> Self {
        let mut r = Report::bare(command);
        r.error = Some(ErrorSection {
            code: err.code().to_string(),
            message: err.to_string(),
        });
        r.exit_code = super::EXIT_ERROR;
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(out, "{k:<14}{v}");
        };
        kv("command", self.command.clone());
        if let Some(p) = &self.presentation {
            kv("field", p.field.clone());
            kv("generators", format!("{} (dim E = {})", p.gens.join(" "), p.dim_e));
            kv("degree N", p.n.to_string());
            kv("dim R", p.dim_r.to_string());
        }
        if let Some(e) = &self.error {
            kv("error", format!("[{}] {}", e.code, e.message));
        }
        if let Some(k) = &self.koszul {
            kv("koszul", k.verdict.clone());
            if let Some(w) = &k.witness {
                kv(
                    "witness",
                    format!("H_{} = {} at internal degree {}", w.hom_degree, w.dim, w.degree),
                );
            }
        }
        if let Some(g) = &self.gldim {
            let v = match (g.value, g.vanishing_degree, g.checked_through) {
                (Some(v), Some(i), _) => format!("{v} (dual component {i} vanishes)"),
                (_, _, Some(c)) => format!("exceeds cap (dual components nonzero through {c})"),
                _ => "infinite".into(),
            };
            kv("gldim", v);
        }
        if let Some(h) = &self.hilbert {
            kv("hilbert", join(h));
        }
        if let Some(p) = &self.poincare {
            kv("dual poly", render_poly(&p.dual_poly));
            kv("residual", join(&p.residual));
            kv("identity", if p.passes { "holds" } else { "fails" }.into());
        }
        if let Some(t) = &self.twist {
            for (k, rel) in t.relations_out.iter().enumerate() {
                kv(if k == 0 { "relations out" } else { "" }, rel.clone());
            }
            if let Some(i) = &t.iso_check {
                kv("twist-iso", if i.passed { "passed" } else { "failed" }.into());
                kv("bidegrees", i.bidegrees_checked.to_string());
                if !i.dual_mismatches.is_empty() {
                    kv("dual mismatch", join(&i.dual_mismatches));
                }
                if !i.singular.is_empty() {
                    kv("singular", format!("{:?}", i.singular));
                }
                if !i.chain_failures.is_empty() {
                    kv("chain fails", format!("{:?}", i.chain_failures));
                }
                kv("homology", if i.homology_agrees { "agrees" } else { "differs" }.into());
            }
        }
        if let Some(g) = &self.gorenstein {
            kv("gorenstein", g.verdict.clone());
            if let Some(r) = &g.reason {
                kv("reason", r.clone());
            }
            for (k, w) in g.witnesses.iter().enumerate() {
                kv(
                    if k == 0 { "witness" } else { "" },
                    format!("H^{} = {} at weight {}", w.q, w.dim.unwrap_or(0), w.weight),
                );
            }
            if let Some(f) = &g.fundamental {
                kv("top class", format!("H^{} = 1 at weight {}", f.q, f.weight));
            }
            kv("top total", g.top_total.to_string());
            for w in &g.warnings {
                kv("warning", w.clone());
            }
        }
        if let Some(r) = &self.regular {
            kv("regular", r.verdict.clone());
            kv("element", format!("{} ({} multiplication)", r.element, r.side));
            if let Some(n) = r.first_failure {
                kv("fails at", format!("degree {n}"));
            }
            let dims: Vec<usize> = r.kernel_dims.iter().map(|e| e.kernel_dim).collect();
            kv("kernel dims", join(&dims));
        }
        kv("exit code", self.exit_code.to_string());
        if let Some(k) = &self.koszul {
            out.push_str("\nhomology of the contracted Koszul complex (rows n, columns q >= 1)\n");
            let width = k.homology_table.iter().map(|r| r.dims.len()).max().unwrap_or(0);
            let _ = write!(out, "{:>4}", "n");
            for q in 1..=width {
                let _ = write!(out, "{:>6}", format!("H_{q}"));
            }
            out.push('\n');
            for row in &k.homology_table {
                let _ = write!(out, "{:>4}", row.degree);
                for d in &row.dims {
                    let _ = write!(out, "{d:>6}");
                }
                out.push('\n');
            }
        }
        if let Some(g) = &self.gorenstein {
            if !g.h_table.is_empty() {
                out.push_str("\ncohomology of Hom(C, A) (rows q, columns weight; ? = beyond cutoff)\n");
                let mut weights: Vec<i64> = g.h_table.iter().map(|e| e.weight).collect();
                weights.dedup();
                let top = g.h_table.iter().map(|e| e.q).max().unwrap_or(0);
                let _ = write!(out, "{:>4}", "q");
                for w in &weights {
                    let _ = write!(out, "{w:>5}");
                }
                out.push('\n');
                for q in 0..=top {
                    let _ = write!(out, "{:>4}", format!("H^{q}"));
                    for w in &weights {
                        let cell = g
                            .h_table
                            .iter()
                            .find(|e| e.q == q && e.weight == *w)
                            .and_then(|e| e.dim)
                            .map_or("?".to_string(), |d| d.to_string());
                        let _ = write!(out, "{cell:>5}");
                    }
                    out.push('\n');
                }
            }
        }
        out
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// `1 - 2t + t^3` from coefficients in increasing degree.
pub fn render_poly(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{k}"),
        };
        let abs = c.unsigned_abs();
        let body = if abs == 1 && k > 0 {
            mono
        } else {
            format!("{abs}{mono}")
        };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
