//! Command implementations behind the `composita` binary. Each returns the
//! text the binary prints, so they can be exercised without a process.

use std::path::Path;

use serde_json::json;

use crate::bfile::{compare, read_bfile, CompareReport};
use crate::builtins::{Kind, CATALOG};
use crate::central::{
    central_forward, central_inverse_with, solve_functional_equation, InverseOptions,
};
use crate::composita::Composita;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::render::{
    render_sequence, render_triangle, sequence_json, triangle_json, triangle_plain, Format,
};
use crate::spec::SeriesSpec;

/// The triangle of a spec: composita of `x·H` for `H`-type series, of the
/// series itself otherwise.
pub fn triangle_of(spec: &SeriesSpec, order: usize) -> Result<Composita> {
    Composita::of(&spec.generator(order))
}

pub fn cmd_composita(spec: &SeriesSpec, order: usize, format: Format) -> Result<String> {
    render_triangle(&triangle_of(spec, order)?, format)
}

/// `a(1..=order)` of the solution of `A = x·H(A)`.
pub fn solve_fe_terms(spec: &SeriesSpec, order: usize) -> Result<Vec<Rational>> {
    let h = spec.series(order.saturating_sub(1));
    let a = solve_functional_equation(&h, order)?;
    Ok(a.coeffs()[1..].to_vec())
}

pub fn cmd_solve_fe(spec: &SeriesSpec, order: usize, format: Format) -> Result<String> {
    render_sequence(&solve_fe_terms(spec, order)?, 1, format)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ForwardExtras {
    pub a_series: bool,
    pub triangle: bool,
}

pub fn cmd_central_forward(
    spec: &SeriesSpec,
    n: usize,
    format: Format,
    extras: ForwardExtras,
) -> Result<String> {
    let r = central_forward(&spec.series(n.saturating_sub(1)), n)?;
    let f = r.central_gf.coeffs();
    if !extras.a_series && !extras.triangle {
        return render_sequence(f, 0, format);
    }
    match format {
        Format::Plain => {
            let mut out = format!("F: {}", render_sequence(f, 0, Format::Plain)?);
            if extras.a_series {
                out.push_str(&format!(
                    "A: {}",
                    render_sequence(r.a_series.coeffs(), 0, Format::Plain)?
                ));
            }
            if extras.triangle {
                out.push_str("triangle:\n");
                out.push_str(&triangle_plain(&r.triangle));
            }
            Ok(out)
        }
        Format::Json => {
            let mut obj = json!({ "central_gf": sequence_json(f) });
            if extras.a_series {
                obj["a_series"] = sequence_json(r.a_series.coeffs());
            }
            if extras.triangle {
                obj["triangle"] = triangle_json(&r.triangle);
            }
            Ok(format!("{obj}\n"))
        }
        other => Err(Error::UnsupportedFormat {
            format: other.to_string(),
            what: "forward output with A or the triangle",
        }),
    }
}

pub fn cmd_central_invert(
    spec: &SeriesSpec,
    n: usize,
    format: Format,
    check: bool,
) -> Result<String> {
    let f = spec.series(n.saturating_sub(1));
    let r = central_inverse_with(
        &f,
        n,
        InverseOptions {
            check,
            ..Default::default()
        },
    )?;
    let h = r.h_series.coeffs();
    match format {
        Format::Plain => {
            let terms: Vec<String> = h.iter().map(ToString::to_string).collect();
            Ok(format!(
                "H: {}\n{}",
                terms.join(", "),
                triangle_plain(&r.triangle)
            ))
        }
        Format::Json => Ok(format!(
            "{}\n",
            json!({ "h_series": sequence_json(h), "triangle": triangle_json(&r.triangle) })
        )),
        Format::Csv => render_triangle(&r.triangle, Format::Csv),
        Format::Bfile => render_sequence(h, 0, Format::Bfile),
    }
}

/// What to compute before comparing against a reference file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Computed {
    /// Coefficients of the series itself.
    Series,
    /// Central-coefficient series.
    Forward,
    /// `a(1), a(2), …` of the functional-equation solution.
    SolveFe,
    /// Coefficients of the reconstructed `H`.
    Invert,
    /// The triangle read by rows.
    Triangle,
}

impl std::str::FromStr for Computed {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "series" => Computed::Series,
            "forward" => Computed::Forward,
            "solve-fe" => Computed::SolveFe,
            "invert" => Computed::Invert,
            "triangle" | "composita" => Computed::Triangle,
            other => {
                return Err(Error::UnsupportedFormat {
                    format: other.to_string(),
                    what: "comparison source",
                })
            }
        })
    }
}

pub fn computed_terms(what: Computed, spec: &SeriesSpec, count: usize) -> Result<Vec<Rational>> {
    let count = count.max(1);
    Ok(match what {
        Computed::Series => spec.series(count - 1).into_coeffs(),
        Computed::Forward => central_forward(&spec.series(count - 1), count)?
            .central_gf
            .into_coeffs(),
        Computed::SolveFe => solve_fe_terms(spec, count)?,
        Computed::Invert => {
            central_inverse_with(&spec.series(count - 1), count, InverseOptions::default())?
                .h_series
                .into_coeffs()
        }
        Computed::Triangle => {
            let mut rows = 1;
            while rows * (rows + 1) / 2 < count {
                rows += 1;
            }
            let t = triangle_of(spec, rows)?;
            t.rows().iter().flatten().take(count).cloned().collect()
        }
    })
}

pub fn cmd_compare(
    what: Computed,
    spec: &SeriesSpec,
    path: &Path,
    count: usize,
) -> Result<CompareReport> {
    let reference = read_bfile(path)?;
    let computed = computed_terms(what, spec, count)?;
    Ok(compare(&computed, &reference, count))
}

pub fn cmd_builtins_list() -> String {
    let mut out = String::new();
    for e in CATALOG {
        let sig = if e.params.is_empty() {
            e.name.to_string()
        } else {
            format!("{}({})", e.name, e.params.join(","))
        };
        let kind = match e.kind {
            Kind::H => "H",
            Kind::G => "G",
        };
        out.push_str(&format!("{sig:<20} {kind}  {}\n", e.description));
    }
    out
}
