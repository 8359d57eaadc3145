//! Command front end: one function per command, each producing a [`Report`]
//! with an exit code that agrees with its verdict.

pub mod format;
pub mod report;

use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::gorenstein::{check_gorenstein, GorensteinVerdict};
use crate::koszul::{
    check_koszul, global_dimension, poincare_identity_check, verify_twist_iso, GlobalDimension, KoszulVerdict,
};
use crate::presentation::{GradedAutomorphism, Presentation, Side};
use crate::twist::semi_cross;

pub use report::Report;
use report::*;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_NOT: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    Koszul,
    Gldim,
    Hilbert,
    Poincare,
    Semicross { out: Option<PathBuf> },
    TwistIso,
    Gorenstein,
    Regular { element: String, side: Side },
}

impl Action {
    pub fn name(&self) -> &'static str {
        match self {
            Action::Koszul => "koszul",
            Action::Gldim => "gldim",
            Action::Hilbert => "hilbert",
            Action::Poincare => "poincare",
            Action::Semicross { .. } => "semicross",
            Action::TwistIso => "twist-iso",
            Action::Gorenstein => "gorenstein",
            Action::Regular { .. } => "regular",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub max_degree: usize,
    pub cap: usize,
    /// Overrides the `field` line of the file.
    pub field: Option<FieldSpec>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_degree: 8,
            cap: crate::tensorspace::DEFAULT_CAP,
            field: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub exit_code: i32,
    /// Rendered presentation file produced by `semicross`.
    pub presentation_out: Option<String>,
}

/// Parses `--field` values: `Q`, `F p`, or `Fp`.
pub fn parse_field_flag(values: &[String]) -> Result<FieldSpec> {
    let spec = match values {
        [q] if q == "Q" => FieldSpec::Rationals,
        [f, p] if f == "F" => FieldSpec::Prime(
            p.parse()
                .map_err(|_| Error::InvalidField(format!("bad modulus `{p}`")))?,
        ),
        [fp] if fp.starts_with('F') && fp.len() > 1 => FieldSpec::Prime(
            fp[1..]
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad field `{fp}`")))?,
        ),
        _ => {
            return Err(Error::InvalidField(format!(
                "expected `Q` or `F <p>`, got `{}`",
                values.join(" ")
            )))
        }
    };
    spec.validate()
}

/// Runs one command on the text of a presentation file.
pub fn run(action: &Action, command_line: &str, source: &str, opts: &Options) -> Result<Outcome> {
    let parsed = format::parse_file(source)?;
    let spec = opts.field.unwrap_or(parsed.field).validate()?;
    match spec {
        FieldSpec::Rationals => {
            let (p, aut) = format::build(&parsed, Rationals, opts.cap)?;
            run_with(action, command_line, &p, aut.as_ref(), opts)
        }
        FieldSpec::Prime(q) => {
            let (p, aut) = format::build(&parsed, PrimeField::new(q)?, opts.cap)?;
            run_with(action, command_line, &p, aut.as_ref(), opts)
        }
    }
}

fn require_aut<'a, F: Field>(
    aut: Option<&'a GradedAutomorphism<F>>,
    action: &Action,
) -> Result<&'a GradedAutomorphism<F>> {
    aut.ok_or_else(|| {
        Error::InvalidArgument(format!(
            "`{}` needs an `aut` line in the presentation file",
            action.name()
        ))
    })
}

pub fn run_with<F: Field>(
    action: &Action,
    command_line: &str,
    p: &Presentation<F>,
    aut: Option<&GradedAutomorphism<F>>,
    opts: &Options,
) -> Result<Outcome> {
    let cutoff = opts.max_degree;
    let mut report = Report::new(command_line, p);
    let mut exit_code = EXIT_PASS;
    let mut presentation_out = None;
    match action {
        Action::Koszul => {
            let k = check_koszul(p, cutoff)?;
            if !k.is_koszul() {
                exit_code = EXIT_NOT;
            }
            report.koszul = Some(KoszulSection::from(&k));
        }
        Action::Gldim => {
            let g = global_dimension(p)?;
            report.gldim = Some(GldimSection::from(g));
        }
        Action::Hilbert => {
            report.hilbert = Some(p.hilbert_series(cutoff)?);
        }
        Action::Poincare => {
            let c = poincare_identity_check(p, cutoff)?;
            if !c.passes() {
                exit_code = EXIT_NOT;
            }
            report.hilbert = Some(c.hilbert.clone());
            report.poincare = Some(PoincareSection::from(&c));
        }
        Action::Semicross { .. } => {
            let alpha = require_aut(aut, action)?;
            let out = semi_cross(p, alpha)?;
            presentation_out = Some(format::render_file(&out, Some(alpha)));
            report.twist = Some(TwistSection {
                relations_out: format::render_relations(&out),
                iso_check: None,
            });
        }
        Action::TwistIso => {
            let alpha = require_aut(aut, action)?;
            let out = semi_cross(p, alpha)?;
            let iso = verify_twist_iso(p, alpha, cutoff)?;
            if !iso.passed() {
                exit_code = EXIT_NOT;
            }
            report.twist = Some(TwistSection {
                relations_out: format::render_relations(&out),
                iso_check: Some(IsoSection::from(&iso)),
            });
        }
        Action::Gorenstein => {
            let g = check_gorenstein(p, cutoff)?;
            if g.verdict == GorensteinVerdict::NotGorenstein {
                exit_code = EXIT_NOT;
            }
            report.gldim = Some(GldimSection::from(g.global_dim));
            report.gorenstein = Some(GorensteinSection::from(&g));
        }
        Action::Regular { element, side } => {
            let coords = format::parse_linear(p, element)?;
            let e = p.element(1, coords)?;
            if e.is_zero(p.field()) {
                return Err(Error::InvalidArgument("the zero element is never regular".into()));
            }
            let r = p.regularity(&e, cutoff, *side)?;
            if !r.is_regular() {
                exit_code = EXIT_NOT;
            }
            report.regular = Some(RegularSection::new(element, &r));
        }
    }
    report.exit_code = exit_code;
    Ok(Outcome {
        report,
        exit_code,
        presentation_out,
    })
}

/// Verdict string of a Koszulity report.
pub fn koszul_verdict_name(v: &KoszulVerdict, cutoff: usize) -> String {
    match v {
        KoszulVerdict::KoszulUpToCutoff => format!("koszul-up-to-{cutoff}"),
        KoszulVerdict::NotKoszul { .. } => "not-koszul".into(),
    }
}

pub fn gldim_status(g: &GlobalDimension) -> &'static str {
    match g {
        GlobalDimension::Finite { .. } => "finite",
        GlobalDimension::Infinite => "infinite",
        GlobalDimension::ExceedsCap { .. } => "exceeds-cap",
    }
}
