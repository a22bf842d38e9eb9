//! Truncated formal power series with exact rational coefficients.
//!
//! A [`Series`] carries its truncation order `N` explicitly and holds the
//! coefficients of `x^0..=x^N`. Binary operations on series of different
//! orders truncate to the smaller order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Builds a series of the given order from leading coefficients,
    /// zero-padding (or truncating) to `order + 1` terms.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Series { coeffs }
    }

    /// Checked constructor accepting a signed order.
    pub fn make(coeffs: Vec<Rational>, order: i64) -> Result<Self> {
        if order < 0 {
            return Err(Error::NegativeOrder(order));
        }
        Ok(Self::new(coeffs, order as usize))
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    /// The series `x`; at order 0 this truncates to zero.
    pub fn x(order: usize) -> Self {
        Self::new(vec![Rational::zero(), Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^n`; zero past the truncation order.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Re-truncates or zero-pads to a new order.
    pub fn with_order(&self, order: usize) -> Self {
        let n = self.coeffs.len().min(order + 1);
        Self::new(self.coeffs[..n].to_vec(), order)
    }

    /// Multiplies by `x`, raising the order by one so no term is lost.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Divides by `x`, dropping the constant term; the order drops by one
    /// (an order-0 series becomes the order-0 zero series).
    pub fn shift_down(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero(0);
        }
        Series {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `self^k` modulo `x^(N+1)` by repeated squaring; `k = 0` gives 1.
    pub fn pow(&self, k: usize) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Term-wise derivative. The order drops by one (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c * int(n as i64))
                .collect(),
        }
    }

    /// Antiderivative with zero constant term. The order rises by one.
    pub fn integrate0(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c / int(n as i64 + 1)),
        );
        Series { coeffs }
    }

    /// Multiplicative inverse via `b(0) = 1/a(0)`,
    /// `b(n) = -(1/a(0)) Σ_{i=1..n} a(i) b(n-i)`.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = self.constant();
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let mut b: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        b.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &b[n - i];
                }
            }
            b.push(-(acc * &inv0));
        }
        Ok(Series { coeffs: b })
    }

    /// `self / other`, which needs `other(0) ≠ 0`.
    pub fn div(&self, other: &Series) -> Result<Self> {
        Ok(self * &other.reciprocal()?)
    }

    /// `self(inner(x))` by Horner accumulation. The result has the smaller
    /// of the two orders.
    pub fn compose(&self, inner: &Series) -> Result<Self> {
        if !inner.constant().is_zero() {
            return Err(Error::InnerConstantTerm);
        }
        let order = self.order().min(inner.order());
        let inner = inner.with_order(order);
        let mut acc = Self::new(vec![self.coeff(order)], order);
        for n in (0..order).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &self.coeffs[n];
        }
        Ok(acc)
    }

    /// Compositional inverse `W` with `self(W(x)) = x`, solved one
    /// coefficient at a time: `w(1) = 1/a(1)` and each later `w(n)` is the
    /// unique value cancelling the `x^n` coefficient of `self(W)`.
    pub fn revert(&self) -> Result<Self> {
        let order = self.order();
        if order == 0 {
            return Err(Error::NoCompositionalInverse);
        }
        let a1 = self.coeff(1);
        if !self.constant().is_zero() || a1.is_zero() {
            return Err(Error::NoCompositionalInverse);
        }
        let inv1 = a1.recip();
        let mut w = Self::zero(order);
        w.coeffs[1] = inv1.clone();
        for n in 2..=order {
            // Coefficients past x^n cannot influence the x^n term.
            let partial = self.with_order(n).compose(&w.with_order(n))?;
            w.coeffs[n] = -(partial.coeffs[n].clone() * &inv1);
        }
        Ok(w)
    }

    fn zip_with(&self, other: &Series, f: impl Fn(&Rational, &Rational) -> Rational) -> Series {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|n| f(&self.coeffs[n], &other.coeffs[n]))
                .collect(),
        }
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;

    /// Cauchy product modulo `x^(N+1)`.
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { coeffs }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match n {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse_rational, ratio};

    fn s(c: &[i64], order: usize) -> Series {
        Series::from_ints(c, order)
    }

    fn geometric(order: usize) -> Series {
        Series::new(vec![int(1); order + 1], order)
    }

    #[test]
    fn make_pads_and_canonicalizes() {
        let a = Series::make(vec![int(1), int(1)], 4).unwrap();
        assert_eq!(a.coeffs().len(), 5);
        assert_eq!(a, s(&[1, 1, 0, 0, 0], 4));
        let b = Series::make(
            vec![
                parse_rational("1/2").unwrap(),
                parse_rational("-2/4").unwrap(),
            ],
            2,
        )
        .unwrap();
        assert_eq!(b.coeffs(), &[ratio(1, 2), ratio(-1, 2), int(0)]);
        assert!(matches!(
            Series::make(vec![], -1),
            Err(Error::NegativeOrder(-1))
        ));
    }

    #[test]
    fn products() {
        assert_eq!(&geometric(3) * &s(&[1, -1], 3), Series::one(3));
        let p = s(&[0, 1, 1], 4);
        assert_eq!(&p * &p, s(&[0, 0, 1, 2, 1], 4));
        assert!((&p + &p.scale(&int(-1))).is_zero());
        // mixed orders truncate to the smaller one
        assert_eq!((&s(&[1, 1], 5) * &s(&[1, 1], 2)).order(), 2);
    }

    #[test]
    fn powers() {
        let g = s(&[0, 1, 1, 1, 1, 1], 5);
        assert_eq!(g.pow(3), s(&[0, 0, 0, 1, 3, 6], 5));
        assert_eq!(g.pow(0), Series::one(5));
        assert_eq!(s(&[0, 1, 1], 4).pow(2), s(&[0, 0, 1, 2, 1], 4));
    }

    #[test]
    fn derivative_and_integral() {
        assert_eq!(s(&[0, 1, 1, 2, 5], 4).derivative(), s(&[1, 2, 6, 20], 3));
        assert!(s(&[7], 3).derivative().is_zero());
        let arctan = Series::new(
            vec![int(0), int(1), int(0), ratio(-1, 3), int(0), ratio(1, 5)],
            5,
        );
        assert_eq!(arctan.derivative(), s(&[1, 0, -1, 0, 1], 4));

        assert_eq!(s(&[1, 2, 6], 2).integrate0(), s(&[0, 1, 1, 2], 3));
        assert!(Series::zero(3).integrate0().is_zero());
        let catalan = s(&[1, 1, 2, 5, 14], 4).integrate0();
        assert_eq!(
            catalan.coeffs(),
            &[
                int(0),
                int(1),
                ratio(1, 2),
                ratio(2, 3),
                ratio(5, 4),
                ratio(14, 5)
            ]
        );
    }

    #[test]
    fn reciprocals() {
        assert_eq!(s(&[1, -1], 4).reciprocal().unwrap(), geometric(4));
        assert_eq!(Series::one(3).reciprocal().unwrap(), Series::one(3));
        // (1-2x)/(1-x) = 1 - x - x^2 - x^3 ...
        let h = s(&[1, -1, -1, -1], 3);
        let b = h.reciprocal().unwrap();
        assert_eq!(b, s(&[1, 1, 2, 4], 3));
        assert_eq!(&h * &b, Series::one(3));
        assert!(matches!(
            s(&[0, 1], 3).reciprocal(),
            Err(Error::NotInvertible)
        ));
    }

    #[test]
    fn composition() {
        let a = s(&[3, 1, 4, 1, 5], 4);
        assert_eq!(a.compose(&Series::x(4)).unwrap(), a);

        // log(1-x) + 2x composed with C(x)
        let outer = Series::new(
            (0..=5)
                .map(|n| match n {
                    0 => int(0),
                    1 => int(1),
                    _ => ratio(-1, n as i64),
                })
                .collect(),
            5,
        );
        let c = s(&[0, 1, 1, 2, 5, 14], 5);
        assert_eq!(
            outer.compose(&c).unwrap().coeffs(),
            &[
                int(0),
                int(1),
                ratio(1, 2),
                ratio(2, 3),
                ratio(5, 4),
                ratio(14, 5)
            ]
        );

        // 1/(1-x) ∘ x/(1+x) = 1 + x
        let inner = s(&[0, 1, -1, 1, -1, 1], 5);
        assert_eq!(geometric(5).compose(&inner).unwrap(), s(&[1, 1], 5));

        assert!(matches!(a.compose(&a), Err(Error::InnerConstantTerm)));
    }

    #[test]
    fn reversion() {
        assert_eq!(Series::x(5).revert().unwrap(), Series::x(5));
        let g = s(&[0, 1, 1, 1, 1, 1], 5);
        assert_eq!(g.revert().unwrap(), s(&[0, 1, -1, 1, -1, 1], 5));
        let c = s(&[0, 1, 1, 2, 5], 4);
        assert_eq!(c.revert().unwrap(), s(&[0, 1, -1], 4));
        assert!(matches!(
            s(&[1, 1], 3).revert(),
            Err(Error::NoCompositionalInverse)
        ));
        assert!(matches!(
            s(&[0, 0, 1], 3).revert(),
            Err(Error::NoCompositionalInverse)
        ));
    }

    #[test]
    fn display() {
        let a = Series::new(vec![int(1), int(-1), ratio(1, 3)], 2);
        assert_eq!(a.to_string(), "1 - x + 1/3*x^2 + O(x^3)");
        assert_eq!(Series::zero(1).to_string(), "0 + O(x^2)");
    }
}
