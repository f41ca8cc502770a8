use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Matrix, Rational};

/// Univariate polynomial over the rationals, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Polynomial {
    coefficients: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(|c| c.is_zero()) {
            coefficients.pop();
        }
        Polynomial { coefficients }
    }

    pub fn zero() -> Self {
        Polynomial {
            coefficients: Vec::new(),
        }
    }

    /// `x - r`
    pub fn linear(r: &Rational) -> Self {
        Polynomial::new(vec![-r, Rational::one()])
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coefficients.last().cloned().unwrap_or_default()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coefficients.get(i).cloned().unwrap_or_default()
    }

    pub fn monic(&self) -> Self {
        match self.coefficients.last() {
            None => Polynomial::zero(),
            Some(lead) => {
                let inv = lead.recip().expect("nonzero leading coefficient");
                Polynomial::new(self.coefficients.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, t: &Matrix) -> Matrix {
        let n = t.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coefficients.iter().rev() {
            acc = &acc * t;
            acc = acc.add_scaled_identity(c);
        }
        acc
    }

    /// Discriminant of a quadratic `ax^2 + bx + c`.
    pub fn discriminant(&self) -> Option<Rational> {
        if self.degree() != Some(2) {
            return None;
        }
        let (c, b, a) = (&self.coefficients[0], &self.coefficients[1], &self.coefficients[2]);
        Some(b * b - Rational::from(4) * a * c)
    }

    /// Quotient and remainder of division by `x - r`.
    pub fn divide_linear(&self, r: &Rational) -> (Polynomial, Rational) {
        if self.is_zero() {
            return (Polynomial::zero(), Rational::zero());
        }
        let n = self.coefficients.len();
        let mut quot = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (0..n).rev() {
            let v = &self.coefficients[i] + &(carry * r);
            if i == 0 {
                return (Polynomial::new(quot), v);
            }
            quot[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut p = self.clone();
        if p.coefficients[0].is_zero() {
            roots.push(Rational::zero());
            while p.coefficients[0].is_zero() {
                p = Polynomial::new(p.coefficients[1..].to_vec());
            }
        }
        let ints = p.integer_coefficients();
        let lead = ints.last().expect("nonzero").abs();
        let constant = ints[0].abs();
        let num_divs = divisors(&constant);
        let den_divs = divisors(&lead);
        for n in &num_divs {
            for d in &den_divs {
                if n.gcd(d) != BigInt::one() {
                    continue;
                }
                for sign in [1, -1] {
                    let cand = Rational::new(n * sign, d.clone()).expect("nonzero");
                    if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Primitive integer multiple of the coefficient list.
    fn integer_coefficients(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for c in &self.coefficients {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coefficients
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        ints.into_iter().map(|x| x / &g).collect()
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // Trial division; callers only see small minimal polynomials.
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{q, qi};

    #[test]
    fn display() {
        let p = Polynomial::new(vec![qi(1), qi(0), qi(1)]);
        assert_eq!(p.to_string(), "x^2 + 1");
        let p = Polynomial::new(vec![q(-1, 2), qi(-3), qi(0)]);
        assert_eq!(p.to_string(), "-3x - 1/2");
    }

    #[test]
    fn roots_and_division() {
        // (x - 1/2)(x + 3)(x^2 + 1)
        let p = Polynomial::linear(&q(1, 2))
            .mul(&Polynomial::linear(&qi(-3)))
            .mul(&Polynomial::new(vec![qi(1), qi(0), qi(1)]));
        assert_eq!(p.rational_roots(), vec![qi(-3), q(1, 2)]);
        let (quot, rem) = p.divide_linear(&qi(-3));
        assert!(rem.is_zero());
        assert_eq!(quot.degree(), Some(3));
        assert_eq!(Polynomial::new(vec![qi(1), qi(0), qi(1)]).discriminant(), Some(qi(-4)));
    }
}
