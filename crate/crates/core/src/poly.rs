//! Dense univariate polynomials over the rationals, the coordinate ring `Q[t]`
//! of the current algebra.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use crate::error::Error;
use crate::rat::Rat;

/// Coefficients are stored lowest degree first with no trailing zeros; the
/// zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// The monomial `t^m`.
    pub fn monomial(m: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); m + 1];
        coeffs[m] = Rat::one();
        Poly { coeffs }
    }

    /// `t - a`
    pub fn linear_root(a: &Rat) -> Self {
        Poly::new(vec![-a, Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Nonzero monomials as `(degree, coefficient)`.
    pub fn monomials(&self) -> impl Iterator<Item = (usize, &Rat)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        // Horner
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Lagrange interpolant of degree below `points.len()` through
    /// `(points[i], values[i])`.
    pub fn interpolate(points: &[Rat], values: &[Rat]) -> Result<Self, Error> {
        if points.len() != values.len() {
            return Err(Error::Arity {
                expected: points.len(),
                found: values.len(),
            });
        }
        ensure_distinct(points)?;
        let mut acc = Poly::zero();
        for (r, (pr, vr)) in points.iter().zip(values).enumerate() {
            if vr.is_zero() {
                continue;
            }
            acc = &acc + &lagrange_basis(points, r, pr).scale(vr);
        }
        Ok(acc)
    }
}

/// `prod_{d != r} (t - p_d) / (p_r - p_d)`
fn lagrange_basis(points: &[Rat], r: usize, pr: &Rat) -> Poly {
    let mut basis = Poly::one();
    for (d, pd) in points.iter().enumerate() {
        if d != r {
            let denom = (pr - pd).recip().expect("points are distinct");
            basis = &basis * &Poly::linear_root(pd).scale(&denom);
        }
    }
    basis
}

pub(crate) fn ensure_distinct(points: &[Rat]) -> Result<(), Error> {
    for (i, a) in points.iter().enumerate() {
        if points[..i].contains(a) {
            return Err(Error::RepeatedPoints);
        }
    }
    Ok(())
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rat::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &rhs.scale(&Rat::int(-1))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.monomials() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match m {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Comma-separated coefficients, constant term first: `"1,0,-1/2"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs = s.split(',').map(str::parse::<Rat>).collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_trimmed() {
        let p = Poly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Poly::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn eval_and_mul() {
        let p = Poly::from_ints(&[1, 1]); // t + 1
        let q = Poly::from_ints(&[-1, 1]); // t - 1
        let pq = &p * &q;
        assert_eq!(pq, Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(pq.eval(&Rat::int(3)), Rat::int(8));
        assert_eq!((&p - &p), Poly::zero());
    }

    #[test]
    fn interpolation_hits_values() {
        let pts = [Rat::int(0), Rat::new(1, 2), Rat::new(7, 3)];
        let vals = [Rat::int(4), Rat::int(-1), Rat::new(2, 5)];
        let p = Poly::interpolate(&pts, &vals).unwrap();
        assert!(p.degree().unwrap() <= 2);
        for (x, v) in pts.iter().zip(&vals) {
            assert_eq!(&p.eval(x), v);
        }
    }

    #[test]
    fn interpolation_rejects_repeats() {
        let pts = [Rat::int(1), Rat::int(1)];
        let vals = [Rat::int(0), Rat::int(1)];
        assert!(matches!(Poly::interpolate(&pts, &vals), Err(Error::RepeatedPoints)));
    }

    #[test]
    fn parse_and_display() {
        let p: Poly = "1,0,-1/2".parse().unwrap();
        assert_eq!(p.to_string(), "1 + -1/2*t^2");
    }
}
