//! Central coefficients of the triangle `[x H(x)]^k = Σ T(n,k) x^n`.
//!
//! Forward: from `H`, the central coefficients `T(2n-1, n)` are the
//! coefficients of `A'(x)` where `A = x H(A)`. Inverse: from the central
//! coefficient series `F`, reconstruct the unique `H` whose triangle has
//! them.
//!
//! To produce `N` output terms every triangle here is built to `2N - 1`
//! rows, because the central entry of row `n` sits at `(2n-1, n)`.

use num::Zero;

use crate::composita::{
    inverse_composita_with, reciprocal_composita, reciprocal_composita_series, Composita,
    ReciprocalRoute,
};
use crate::error::{Error, Result};
use crate::rational::int;
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForwardResult {
    /// Composita of `x·H`, `2N - 1` rows.
    pub triangle: Composita,
    /// Solution of `A = x H(A)`, order `N`.
    pub a_series: Series,
    /// `A'(x)`, order `N - 1`.
    pub central_gf: Series,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseResult {
    /// Reconstructed `H`, order `N - 1`.
    pub h_series: Series,
    /// Composita of `x·H`, `N` rows.
    pub triangle: Composita,
    /// `∫F`, order `N`.
    pub a_series: Series,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InverseOptions {
    /// How reciprocal compositae are formed inside the pipeline.
    pub route: ReciprocalRoute,
    /// Re-run the forward transform on the result and fail unless it
    /// reproduces the input.
    pub check: bool,
}

fn require_terms(s: &Series, n_target: usize) -> Result<()> {
    if n_target == 0 {
        return Err(Error::EmptyTarget);
    }
    if s.order() + 1 < n_target {
        return Err(Error::InsufficientOrder {
            required: n_target,
            available: s.order() + 1,
        });
    }
    Ok(())
}

/// Composita of `x·h` to `2N - 1` rows. Coefficients of `h` past `x^(N-1)`
/// never reach an entry `(n, k)` with `n - k < N`, so `h` is padded with
/// zeros as needed.
fn wide_triangle(h: &Series, n_target: usize) -> Result<Composita> {
    let rows = 2 * n_target - 1;
    Composita::of(&h.with_order(rows - 1).shift_up())
}

fn solution_from_triangle(g: &Composita, n_target: usize) -> Series {
    let mut coeffs = vec![num::BigRational::zero()];
    coeffs.extend((1..=n_target).map(|n| g.entry(2 * n - 1, n) / int(n as i64)));
    Series::new(coeffs, n_target)
}

/// Solves `A(x) = x·h(A(x))` to order `n_target` using
/// `a(n) = G(2n-1, n) / n` with `G` the composita of `x·h`.
pub fn solve_functional_equation(h: &Series, n_target: usize) -> Result<Series> {
    if h.constant().is_zero() {
        return Err(Error::LagrangeConstantTerm);
    }
    require_terms(h, n_target)?;
    Ok(solution_from_triangle(
        &wide_triangle(h, n_target)?,
        n_target,
    ))
}

/// Central-coefficient generating function of the triangle of `h`, with
/// `n_target` coefficients.
pub fn central_forward(h: &Series, n_target: usize) -> Result<ForwardResult> {
    if h.constant().is_zero() {
        return Err(Error::LagrangeConstantTerm);
    }
    require_terms(h, n_target)?;
    let triangle = wide_triangle(h, n_target)?;
    let a_series = solution_from_triangle(&triangle, n_target);
    let central_gf = a_series.derivative();
    Ok(ForwardResult {
        triangle,
        a_series,
        central_gf,
    })
}

pub fn central_inverse(f: &Series, n_target: usize) -> Result<InverseResult> {
    central_inverse_with(f, n_target, InverseOptions::default())
}

/// Reconstructs `H` and its triangle from the first `n_target`
/// coefficients of `f`:
///
/// 1. `A = ∫F`, composita of `A` to `2N - 1` rows;
/// 2. reciprocal composita of that (the composita of `x²/A`);
/// 3. composita of `A⁻¹` by `(k/n)·R(2n-k, n)`;
/// 4. reciprocal composita of step 3 is the triangle of `H = t / A⁻¹(t)`.
pub fn central_inverse_with(
    f: &Series,
    n_target: usize,
    options: InverseOptions,
) -> Result<InverseResult> {
    if f.constant().is_zero() {
        return Err(Error::CentralConstantTerm);
    }
    require_terms(f, n_target)?;
    let a_series = f.with_order(n_target - 1).integrate0();
    let a_triangle = Composita::of(&a_series.with_order(2 * n_target - 1))?;
    let inverse = inverse_composita_with(&a_triangle, n_target, options.route)?;
    let triangle = match options.route {
        ReciprocalRoute::Series => reciprocal_composita_series(&inverse.first_column())?,
        ReciprocalRoute::Lemma => reciprocal_composita(&inverse)?,
    };
    let h_series = triangle.first_column();

    if options.check {
        let expected = f.with_order(n_target - 1);
        let back = central_forward(&h_series, n_target)?.central_gf;
        if back != expected {
            return Err(Error::RoundTrip(format!(
                "forward transform of the result gives {back}, expected {expected}"
            )));
        }
    }

    Ok(InverseResult {
        h_series,
        triangle,
        a_series,
    })
}

/// Residual `a - x·h(a)` and whether it vanishes to the working order
/// (the smaller of `a`'s order and `h`'s order plus one).
pub fn verify_functional_equation(a: &Series, h: &Series) -> Result<(bool, Series)> {
    let inner = h.compose(&a.with_order(a.order().min(h.order())))?;
    let rhs = inner.shift_up();
    let residual = a - &rhs;
    Ok((residual.is_zero(), residual))
}
