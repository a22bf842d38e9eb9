//! Composita triangles.
//!
//! The composita of a series `g` with `g(0) = 0` is the triangle
//! `G(n, k) = [x^n] g(x)^k` for `1 ≤ k ≤ n ≤ N`. It is built here by the
//! convolution recurrence `G(n, k) = Σ_i g(i) G(n-i, k-1)` instead of a sum
//! over integer compositions.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, int, pow, Rational};
use crate::series::Series;

/// Lower-triangular array; `rows[n-1][k-1]` holds entry `(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composita {
    rows: Vec<Vec<Rational>>,
}

/// Which construction of the reciprocal composita to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReciprocalRoute {
    /// Invert the first-column series, then take its composita.
    #[default]
    Series,
    /// Alternating double sum over entries of the given triangle.
    Lemma,
}

impl Composita {
    /// Composita of `g`, of the same order as `g`.
    pub fn of(g: &Series) -> Result<Self> {
        if g.order() == 0 || !g.constant().is_zero() || g.is_zero() {
            return Err(Error::CompositaConstantTerm);
        }
        let order = g.order();
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(order);
        for n in 1..=order {
            let mut row = Vec::with_capacity(n);
            row.push(g.coeff(n));
            for k in 2..=n {
                let mut acc = Rational::zero();
                for i in 1..=n - k + 1 {
                    let gi = &g.coeffs()[i];
                    if gi.is_zero() {
                        continue;
                    }
                    let prev = &rows[n - i - 1][k - 2];
                    if !prev.is_zero() {
                        acc += gi * prev;
                    }
                }
                row.push(acc);
            }
            rows.push(row);
        }
        Ok(Composita { rows })
    }

    /// Composita of `x`: ones on the diagonal, zeros elsewhere.
    pub fn identity(order: usize) -> Self {
        Composita {
            rows: (1..=order)
                .map(|n| {
                    let mut row = vec![Rational::zero(); n];
                    row[n - 1] = Rational::one();
                    row
                })
                .collect(),
        }
    }

    /// Wraps explicit rows; row `n` (1-based) must have exactly `n` entries.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Option<Self> {
        rows.iter()
            .enumerate()
            .all(|(i, r)| r.len() == i + 1)
            .then_some(Composita { rows })
    }

    /// Builds a triangle entry by entry from `f(n, k)`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        Composita {
            rows: (1..=order)
                .map(|n| (1..=n).map(|k| f(n, k)).collect())
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&Rational> {
        if k == 0 {
            return None;
        }
        self.rows.get(n.checked_sub(1)?)?.get(k - 1)
    }

    /// Entry `(n, k)`, zero above the diagonal or for `k = 0`.
    ///
    /// Panics if `n` exceeds the order: that is always an indexing bug.
    pub fn entry(&self, n: usize, k: usize) -> Rational {
        assert!(
            n <= self.order(),
            "row {n} requested from a composita of order {}",
            self.order()
        );
        self.get(n, k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Composita {
            rows: self.rows.iter().take(order).cloned().collect(),
        }
    }

    /// `H(x) = Σ G(n,1) x^(n-1)`: the first column read as a series of
    /// order `N - 1`.
    pub fn first_column(&self) -> Series {
        let coeffs: Vec<Rational> = self.rows.iter().map(|r| r[0].clone()).collect();
        let order = coeffs.len().saturating_sub(1);
        Series::new(coeffs, order)
    }

    /// The series whose composita this is (first column shifted up by `x`).
    pub fn source(&self) -> Series {
        self.first_column().shift_up().with_order(self.order())
    }

    /// `G(2n-1, n)` for `1 ≤ n ≤ ⌈N/2⌉`.
    pub fn central_diagonal(&self) -> Vec<Rational> {
        (1..=self.order().div_ceil(2))
            .map(|n| self.entry(2 * n - 1, n))
            .collect()
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        self.rows.iter().map(|r| r[r.len() - 1].clone()).collect()
    }

    /// `(c·g)^Δ(n, k) = c^k g^Δ(n, k)`.
    pub fn scale(&self, c: &Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroScale);
        }
        let powers: Vec<Rational> = (1..=self.order() as i64).map(|k| pow(c, k)).collect();
        Ok(Composita {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().zip(&powers).map(|(e, p)| e * p).collect())
                .collect(),
        })
    }

    /// Composita of `outer ∘ inner` from the two triangles:
    /// `Σ_{m=k..n} outer(m, k) inner(n, m)`.
    pub fn compose(&self, inner: &Composita) -> Result<Self> {
        if self.order() != inner.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: inner.order(),
            });
        }
        Ok(Self::from_fn(self.order(), |n, k| {
            let mut acc = Rational::zero();
            for m in k..=n {
                let o = &self.rows[m - 1][k - 1];
                let i = &inner.rows[n - 1][m - 1];
                if !o.is_zero() && !i.is_zero() {
                    acc += o * i;
                }
            }
            acc
        }))
    }

    /// Rebuilds the triangle to more rows from its own first column. Only
    /// entries with `n - k < self.order()` are exact.
    fn extended(&self, order: usize) -> Result<Self> {
        if order <= self.order() {
            return Ok(self.clone());
        }
        let mut ext = Composita::of(&self.source().with_order(order))?;
        ext.rows[..self.order()].clone_from_slice(&self.rows);
        Ok(ext)
    }
}

/// Composita of `g`; see [`Composita::of`].
pub fn composita_of(g: &Series) -> Result<Composita> {
    Composita::of(g)
}

/// Composita of `x / h(x)` computed by series reciprocal. The result has
/// order `h.order() + 1`.
pub fn reciprocal_composita_series(h: &Series) -> Result<Composita> {
    Composita::of(&h.reciprocal()?.shift_up())
}

/// Given the composita of `x·B(x)` with `b(0) = 1`, returns the composita
/// of `x·H(x)` for `H = 1/B`, using
///
/// `H(n,k) = Σ_{m=1..n-k} C(k+m-1, k-1) Σ_{j=1..m} (-1)^j C(m,j) B(n-k+j, j)`
///
/// and `H(n,n) = 1`. The output has the same order as the input.
pub fn reciprocal_composita_lemma(bx: &Composita) -> Result<Composita> {
    let order = bx.order();
    if bx.diagonal().iter().any(|d| !d.is_one()) {
        return Err(Error::NonUnitDiagonal);
    }
    if order == 0 {
        return Ok(bx.clone());
    }
    // B(d+j, j) reaches row 2(N-1).
    let ext = bx.extended(2 * order - 2)?;
    // inner[d][m] = Σ_{j=1..m} (-1)^j C(m,j) B(d+j, j); independent of k.
    let mut inner = vec![Vec::new(); order];
    for (d, row) in inner.iter_mut().enumerate().skip(1) {
        row.push(Rational::zero());
        for m in 1..=d {
            let mut acc = Rational::zero();
            for j in 1..=m {
                let e = ext.entry(d + j, j);
                if e.is_zero() {
                    continue;
                }
                let c = Rational::from_integer(binomial(m as i64, j as i64));
                if j % 2 == 0 {
                    acc += c * e;
                } else {
                    acc -= c * e;
                }
            }
            row.push(acc);
        }
    }
    Ok(Composita::from_fn(order, |n, k| {
        if n == k {
            return Rational::one();
        }
        let d = n - k;
        let mut acc = Rational::zero();
        for (m, s) in inner[d].iter().enumerate().skip(1) {
            if !s.is_zero() {
                acc += s * Rational::from_integer(binomial((k + m - 1) as i64, (k - 1) as i64));
            }
        }
        acc
    }))
}

/// Reciprocal composita for any nonzero diagonal: factors out
/// `c = bx(1,1)` with the `c^k` scaling law, applies
/// [`reciprocal_composita_lemma`], and scales back by `1/c`.
pub fn reciprocal_composita(bx: &Composita) -> Result<Composita> {
    let c = bx.get(1, 1).cloned().ok_or(Error::NotInvertible)?;
    if c.is_zero() {
        return Err(Error::NotInvertible);
    }
    let inv = c.recip();
    reciprocal_composita_lemma(&bx.scale(&inv)?)?.scale(&inv)
}

/// Composita of the compositional inverse of `a`'s source series, to
/// `order` rows. Needs `a` to have at least `2·order - 1` rows.
pub fn inverse_composita(a: &Composita, order: usize) -> Result<Composita> {
    inverse_composita_with(a, order, ReciprocalRoute::Series)
}

pub fn inverse_composita_with(
    a: &Composita,
    order: usize,
    route: ReciprocalRoute,
) -> Result<Composita> {
    let required = (2 * order).saturating_sub(1);
    if a.order() < required {
        return Err(Error::InsufficientOrder {
            required,
            available: a.order(),
        });
    }
    if order == 0 {
        return Ok(Composita::identity(0));
    }
    if a.get(1, 1).is_none_or(Zero::is_zero) {
        return Err(Error::NoCompositionalInverse);
    }
    let a = a.truncate(required);
    // Composita of x·(x/A(x)).
    let reciprocal = match route {
        ReciprocalRoute::Series => reciprocal_composita_series(&a.first_column())?,
        ReciprocalRoute::Lemma => reciprocal_composita(&a)?,
    };
    Ok(Composita::from_fn(order, |n, k| {
        reciprocal.entry(2 * n - k, n) * int(k as i64) / int(n as i64)
    }))
}
