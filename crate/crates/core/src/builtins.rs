//! Named generating functions with known closed-form compositae.
//!
//! Each builtin is either an `H`-type series (nonzero constant term; its
//! triangle is the composita of `x·H`) or a `G`-type series (zero constant
//! term; its triangle is its own composita). The closed forms are
//! evaluated directly and never go through the composita engine, so they
//! serve as an independent check on it.

use std::fmt;

use num::{BigInt, One, Zero};

use crate::composita::Composita;
use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, int, pow, sign, Rational};
use crate::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// Triangle is the composita of `x·H(x)`.
    H,
    /// Triangle is the composita of `G(x)` itself.
    G,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// `b / (1 - a x)`
    GeometricH { a: Rational, b: Rational },
    /// `1 / (1 - x)`
    PascalH,
    /// `a x + b x²`
    Linquad { a: Rational, b: Rational },
    /// `ln(1 + x)`
    Log1p,
    /// `eˣ - 1`
    Expm1,
    /// `(1 - √(1 - 4x)) / 2`
    CatalanC,
    /// `C(x) / x = 1 + x + 2x² + 5x³ + …`
    CatalanGf,
    /// `x cot x`
    Xcotx,
    /// `(1 - x) / (1 - 2x)`
    A105306H,
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub kind: Kind,
    pub description: &'static str,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "geometric_h",
        params: &["a", "b"],
        kind: Kind::H,
        description: "b/(1-ax)",
    },
    CatalogEntry {
        name: "pascal_h",
        params: &[],
        kind: Kind::H,
        description: "1/(1-x), alias for geometric_h(1,1)",
    },
    CatalogEntry {
        name: "linquad",
        params: &["a", "b"],
        kind: Kind::G,
        description: "ax+bx^2",
    },
    CatalogEntry {
        name: "log1p",
        params: &[],
        kind: Kind::G,
        description: "ln(1+x)",
    },
    CatalogEntry {
        name: "expm1",
        params: &[],
        kind: Kind::G,
        description: "e^x-1",
    },
    CatalogEntry {
        name: "catalan_c",
        params: &[],
        kind: Kind::G,
        description: "(1-sqrt(1-4x))/2",
    },
    CatalogEntry {
        name: "catalan_gf",
        params: &[],
        kind: Kind::H,
        description: "Catalan numbers 1,1,2,5,14,...",
    },
    CatalogEntry {
        name: "xcotx",
        params: &[],
        kind: Kind::H,
        description: "x*cot(x)",
    },
    CatalogEntry {
        name: "a105306_h",
        params: &[],
        kind: Kind::H,
        description: "(1-x)/(1-2x)",
    },
];

impl Builtin {
    pub fn from_spec(name: &str, params: &[Rational]) -> Result<Self> {
        let entry = CATALOG
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownBuiltin(name.to_string()))?;
        if entry.params.len() != params.len() {
            return Err(Error::BuiltinArity {
                name: name.to_string(),
                expected: entry.params.len(),
                got: params.len(),
            });
        }
        let p = |i: usize| params[i].clone();
        Ok(match name {
            "geometric_h" => Builtin::GeometricH { a: p(0), b: p(1) },
            "pascal_h" => Builtin::PascalH,
            "linquad" => Builtin::Linquad { a: p(0), b: p(1) },
            "log1p" => Builtin::Log1p,
            "expm1" => Builtin::Expm1,
            "catalan_c" => Builtin::CatalanC,
            "catalan_gf" => Builtin::CatalanGf,
            "xcotx" => Builtin::Xcotx,
            "a105306_h" => Builtin::A105306H,
            _ => unreachable!("catalog and constructor disagree on {name}"),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Builtin::GeometricH { .. } => "geometric_h",
            Builtin::PascalH => "pascal_h",
            Builtin::Linquad { .. } => "linquad",
            Builtin::Log1p => "log1p",
            Builtin::Expm1 => "expm1",
            Builtin::CatalanC => "catalan_c",
            Builtin::CatalanGf => "catalan_gf",
            Builtin::Xcotx => "xcotx",
            Builtin::A105306H => "a105306_h",
        }
    }

    pub fn params(&self) -> Vec<Rational> {
        match self {
            Builtin::GeometricH { a, b } | Builtin::Linquad { a, b } => vec![a.clone(), b.clone()],
            _ => Vec::new(),
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Builtin::Linquad { .. } | Builtin::Log1p | Builtin::Expm1 | Builtin::CatalanC => {
                Kind::G
            }
            _ => Kind::H,
        }
    }

    /// Exact expansion to `order`.
    pub fn series(&self, order: usize) -> Series {
        let coeffs =
            |f: &dyn Fn(usize) -> Rational| Series::new((0..=order).map(f).collect(), order);
        match self {
            Builtin::GeometricH { a, b } => coeffs(&|n| b * pow(a, n as i64)),
            Builtin::PascalH => coeffs(&|_| Rational::one()),
            Builtin::Linquad { a, b } => {
                Series::new(vec![Rational::zero(), a.clone(), b.clone()], order)
            }
            Builtin::Log1p => coeffs(&|n| match n {
                0 => Rational::zero(),
                _ => Rational::new(sign(n as i64 + 1), BigInt::from(n)),
            }),
            Builtin::Expm1 => coeffs(&|n| match n {
                0 => Rational::zero(),
                _ => Rational::new(BigInt::one(), factorial(n as u64)),
            }),
            Builtin::CatalanC => coeffs(&|n| match n {
                0 => Rational::zero(),
                _ => catalan_c_composita(n, 1),
            }),
            Builtin::CatalanGf => Builtin::CatalanC.series(order + 1).shift_down(),
            Builtin::Xcotx => {
                // cos(x) / (sin(x)/x)
                let cos = coeffs(&|n| even_taylor(n, 0));
                let sinc = coeffs(&|n| even_taylor(n, 1));
                cos.div(&sinc).expect("sin(x)/x has constant term 1")
            }
            Builtin::A105306H => {
                let num = Series::from_ints(&[1, -1], order);
                let den = Series::from_ints(&[1, -2], order);
                num.div(&den).expect("1-2x is invertible")
            }
        }
    }

    /// The series whose composita is this builtin's triangle, to `order`:
    /// `x·H` for `H`-type builtins, the series itself otherwise.
    pub fn generator(&self, order: usize) -> Series {
        match self.kind() {
            Kind::H => self.series(order.saturating_sub(1)).shift_up(),
            Kind::G => self.series(order),
        }
    }

    /// Triangle filled from the closed form.
    pub fn closed_form_composita(&self, order: usize) -> Composita {
        match self {
            Builtin::GeometricH { a, b } => {
                Composita::from_fn(order, |n, k| geometric_composita(a, b, n, k))
            }
            Builtin::PascalH => {
                Composita::from_fn(order, |n, k| geometric_composita(&int(1), &int(1), n, k))
            }
            Builtin::Linquad { a, b } => {
                Composita::from_fn(order, |n, k| linquad_composita(a, b, n, k))
            }
            Builtin::Log1p => {
                let s1 = stirling1_table(order);
                Composita::from_fn(order, |n, k| {
                    factorial_ratio(k, n) * Rational::from_integer(s1[n][k].clone())
                })
            }
            Builtin::Expm1 => {
                Composita::from_fn(order, |n, k| factorial_ratio(k, n) * stirling2(n, k))
            }
            Builtin::CatalanC | Builtin::CatalanGf => {
                Composita::from_fn(order, catalan_c_composita)
            }
            Builtin::Xcotx => {
                let s1 = stirling1_table(2 * order);
                let s2 = stirling2_table(order);
                Composita::from_fn(order, |n, k| x2cotx_composita(&s1, &s2, n, k))
            }
            Builtin::A105306H => Composita::from_fn(order, a105306_composita),
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        let params = self.params();
        if !params.is_empty() {
            let parts: Vec<String> = params.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// `(-1)^j / (2j + shift)!` at `n = 2j`, zero at odd `n`; `shift = 0` gives
/// cosine, `shift = 1` gives `sin(x)/x`.
fn even_taylor(n: usize, shift: u64) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    Rational::new(sign(n as i64 / 2), factorial(n as u64 + shift))
}

fn factorial_ratio(k: usize, n: usize) -> Rational {
    Rational::new(factorial(k as u64), factorial(n as u64))
}

fn rbinom(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n as i64, k as i64))
}

/// `C(n-1, k-1) a^(n-k) b^k`
fn geometric_composita(a: &Rational, b: &Rational, n: usize, k: usize) -> Rational {
    rbinom(n - 1, k - 1) * pow(a, (n - k) as i64) * pow(b, k as i64)
}

/// `C(k, n-k) a^(2k-n) b^(n-k)`
fn linquad_composita(a: &Rational, b: &Rational, n: usize, k: usize) -> Rational {
    if n - k > k {
        return Rational::zero();
    }
    rbinom(k, n - k) * pow(a, (2 * k - n) as i64) * pow(b, (n - k) as i64)
}

/// `(k/n) C(2n-k-1, n-1)`
fn catalan_c_composita(n: usize, k: usize) -> Rational {
    rbinom(2 * n - k - 1, n - 1) * int(k as i64) / int(n as i64)
}

/// `Σ_{i=0..n-k} 2^i C(k, n-k-i) C(k+i-1, k-1) (-1)^(n-k-i)`
fn a105306_composita(n: usize, k: usize) -> Rational {
    let d = n - k;
    let total: BigInt = (0..=d)
        .map(|i| {
            (BigInt::one() << i)
                * binomial(k as i64, (d - i) as i64)
                * binomial((k + i) as i64 - 1, k as i64 - 1)
                * sign((d - i) as i64)
        })
        .sum();
    Rational::from_integer(total)
}

/// Composita of `x² cot x`:
///
/// `2^(n-2k) (-1)^((n-k)/2) Σ_l 2^l l! C(k,l) Σ_m m! s(l+m,l) S(r,m) / ((l+m)! r!)`
///
/// with `r = n-2k+l`, signed Stirling numbers `s` of the first kind and
/// `S` of the second kind; zero when `n - k` is odd.
fn x2cotx_composita(s1: &[Vec<BigInt>], s2: &[Vec<BigInt>], n: usize, k: usize) -> Rational {
    if (n - k) % 2 == 1 {
        return Rational::zero();
    }
    let mut outer = Rational::zero();
    for l in 0..=k {
        let r = n as i64 - 2 * k as i64 + l as i64;
        if r < 0 {
            continue;
        }
        let r = r as usize;
        let mut inner = Rational::zero();
        for m in 0..=r {
            let term = BigInt::from(1) * factorial(m as u64) * &s1[l + m][l] * &s2[r][m];
            if term.is_zero() {
                continue;
            }
            inner += Rational::new(term, factorial((l + m) as u64) * factorial(r as u64));
        }
        outer += inner
            * Rational::from_integer(
                (BigInt::one() << l) * factorial(l as u64) * binomial(k as i64, l as i64),
            );
    }
    outer * pow(&int(2), n as i64 - 2 * k as i64) * Rational::from_integer(sign((n - k) as i64 / 2))
}

/// Signed Stirling numbers of the first kind `s(n,k)` for `n ≤ max`, from
/// `s(n+1,k) = s(n,k-1) - n s(n,k)`.
fn stirling1_table(max: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); max + 1]; max + 1];
    t[0][0] = BigInt::one();
    for n in 0..max {
        for k in 1..=n + 1 {
            t[n + 1][k] = &t[n][k - 1] - &t[n][k] * BigInt::from(n);
        }
    }
    t
}

fn stirling2_table(max: usize) -> Vec<Vec<BigInt>> {
    (0..=max)
        .map(|n| (0..=max).map(|k| stirling2(n, k).to_integer()).collect())
        .collect()
}

/// Signed Stirling number of the first kind: `ln(1+x)^k / k! = Σ s(n,k) xⁿ/n!`.
pub fn stirling1_signed(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(stirling1_table(n)[n][k].clone())
}

/// Unsigned Stirling number of the first kind (permutations of `n` with
/// `k` cycles).
pub fn stirling1_unsigned(n: usize, k: usize) -> Rational {
    let s = stirling1_signed(n, k);
    if (n - k.min(n)) % 2 == 1 {
        -s
    } else {
        s
    }
}

/// Stirling number of the second kind by the alternating sum
/// `(1/k!) Σ_j (-1)^(k-j) C(k,j) j^n`.
pub fn stirling2(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let total: BigInt = (0..=k)
        .map(|j| sign((k - j) as i64) * binomial(k as i64, j as i64) * num::pow(BigInt::from(j), n))
        .sum();
    Rational::new(total, factorial(k as u64))
}

pub fn binom(n: usize, k: usize) -> Rational {
    rbinom(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn catalog_lookup() {
        assert_eq!(
            Builtin::from_spec("pascal_h", &[]).unwrap(),
            Builtin::PascalH
        );
        assert!(matches!(
            Builtin::from_spec("nope", &[]),
            Err(Error::UnknownBuiltin(_))
        ));
        assert!(matches!(
            Builtin::from_spec("linquad", &[int(1)]),
            Err(Error::BuiltinArity {
                expected: 2,
                got: 1,
                ..
            })
        ));
        let g = Builtin::from_spec("geometric_h", &[int(2), ratio(1, 3)]).unwrap();
        assert_eq!(g.to_string(), "geometric_h(2,1/3)");
    }

    #[test]
    fn expansions() {
        assert_eq!(
            Builtin::Xcotx.series(4).coeffs(),
            &[int(1), int(0), ratio(-1, 3), int(0), ratio(-1, 45)]
        );
        assert_eq!(
            Builtin::CatalanGf.series(5),
            Series::from_ints(&[1, 1, 2, 5, 14, 42], 5)
        );
        assert_eq!(
            Builtin::CatalanC.series(4),
            Series::from_ints(&[0, 1, 1, 2, 5], 4)
        );
        let lq = Builtin::Linquad {
            a: int(1),
            b: int(1),
        };
        assert_eq!(lq.series(3), Series::from_ints(&[0, 1, 1], 3));
        assert_eq!(
            Builtin::A105306H.series(4),
            Series::from_ints(&[1, 1, 2, 4, 8], 4)
        );
        assert_eq!(
            Builtin::Log1p.series(3).coeffs(),
            &[int(0), int(1), ratio(-1, 2), ratio(1, 3)]
        );
        assert_eq!(Builtin::Expm1.series(3).coeff(3), ratio(1, 6));
    }

    #[test]
    fn closed_form_entries() {
        let (a, b) = (ratio(3, 2), int(-5));
        let lq = Builtin::Linquad {
            a: a.clone(),
            b: b.clone(),
        }
        .closed_form_composita(4);
        assert_eq!(lq.entry(3, 2), int(2) * &a * &b);
        assert_eq!(
            Builtin::CatalanC.closed_form_composita(5).entry(5, 3),
            int(9)
        );
        assert_eq!(
            Builtin::PascalH.closed_form_composita(4).entry(4, 2),
            int(3)
        );
    }

    #[test]
    fn stirling() {
        assert_eq!(stirling2(4, 2), int(7));
        assert_eq!(stirling2(6, 6), int(1));
        assert_eq!(stirling2(3, 5), int(0));
        assert_eq!(stirling1_unsigned(4, 2), int(11));
        assert_eq!(stirling1_signed(4, 2), int(11));
        assert_eq!(stirling1_signed(4, 3), int(-6));
        assert_eq!(stirling1_unsigned(4, 3), int(6));
        assert_eq!(stirling1_signed(2, 5), int(0));
        assert_eq!(binom(5, 2), int(10));
    }

    #[test]
    fn stirling1_matches_log_powers() {
        // k! / n! · s(n,k) = [x^n] ln(1+x)^k
        let log = Builtin::Log1p.series(8);
        for k in 1..=8 {
            let p = log.pow(k);
            for n in k..=8 {
                assert_eq!(
                    p.coeff(n),
                    factorial_ratio(k, n) * stirling1_signed(n, k),
                    "({n},{k})"
                );
            }
        }
    }
}
