//! Exact integer polynomials in the formal variable `q`.
//!
//! Coefficients are arbitrary-precision integers, so q-factorials of any
//! supported size never overflow. Polynomials are kept in canonical form: the
//! highest stored coefficient is nonzero, and the zero polynomial has no
//! coefficients at all.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numtheory::{binomial, gcd};
use crate::{Error, Exec, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::monomial(0)
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients; trailing zeros are
    /// trimmed.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = QPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients in canonical form.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn scale(&self, factor: impl Into<BigInt>) -> Self {
        let factor = factor.into();
        QPoly::from_coeffs(self.coeffs.iter().map(|c| c * &factor))
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Horner evaluation at a complex point in double precision.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| {
                acc * z + c.to_f64().unwrap_or(f64::NAN)
            })
    }

    /// Polynomial long division. Fails if some step needs a non-integer
    /// quotient coefficient.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::InexactDivision("division by the zero polynomial"));
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Ok((QPoly::zero(), self.clone()));
        };
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return Err(Error::InexactDivision("polynomial long division"));
            }
            let factor = top / lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &factor * c;
            }
            quot[k] = factor;
        }
        Ok((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }

    /// Quotient of a division that must leave no remainder.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision("exact polynomial quotient"));
        }
        Ok(q)
    }

    /// Residue modulo `q^n - 1`.
    pub fn reduce_mod(&self, n: usize) -> Result<ResiduePoly> {
        if n == 0 {
            return Err(Error::Zero { what: "modulus" });
        }
        let mut coeffs = vec![BigInt::zero(); n];
        for (e, c) in self.coeffs.iter().enumerate() {
            coeffs[e % n] += c;
        }
        Ok(ResiduePoly { modulus: n, coeffs })
    }

    /// Coefficients rendered as decimal strings, ascending by degree.
    pub fn to_coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// Ascending-degree rendering: `2 + q + 2q^2 + q^3`.
fn write_terms(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt]) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let mag = c.abs();
        if k == 0 {
            write!(f, "{mag}")?;
            continue;
        }
        if !mag.is_one() {
            write!(f, "{mag}")?;
        }
        if k == 1 {
            f.write_str("q")?;
        } else {
            write!(f, "q^{k}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)))
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)))
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| &acc + &p)
    }
}

/// A polynomial reduced modulo `q^n - 1`, stored as exactly `n` coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResiduePoly {
    modulus: usize,
    coeffs: Vec<BigInt>,
}

impl ResiduePoly {
    /// Builds a residue from coefficients of any length, folding exponents
    /// modulo `modulus`.
    pub fn from_coeffs<T: Into<BigInt>>(
        modulus: usize,
        coeffs: impl IntoIterator<Item = T>,
    ) -> Result<Self> {
        QPoly::from_coeffs(coeffs).reduce_mod(modulus)
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// Exactly `modulus` coefficients, ascending.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Canonical representative of degree below the modulus.
    pub fn to_poly(&self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().cloned())
    }

    pub fn to_coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for ResiduePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

impl fmt::Debug for ResiduePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ResiduePoly({self} mod q^{} - 1)", self.modulus)
    }
}

/// q-integer `[i] = 1 + q + ... + q^(i-1)`.
pub fn q_integer(i: usize) -> Result<QPoly> {
    if i == 0 {
        return Err(Error::Zero {
            what: "q-integer index",
        });
    }
    Ok(QPoly::from_coeffs(vec![1; i]))
}

/// q-factorial `[i]! = [i][i-1]...[1]`, with `[0]! = 1`.
pub fn q_factorial(i: usize) -> QPoly {
    q_integer_product(1..=i)
}

fn q_integer_product(range: impl Iterator<Item = usize>) -> QPoly {
    range.fold(QPoly::one(), |acc, k| {
        // k >= 1 here, so q_integer cannot fail
        &acc * &q_integer(k).expect("positive index")
    })
}

/// Gaussian binomial coefficient `[i over j]`; zero unless `i >= j >= 0`.
///
/// Computed as the exact quotient `[i][i-1]...[i-j+1] / [j]!`; a nonzero
/// remainder is an arithmetic fault and panics.
pub fn q_binomial(i: i64, j: i64) -> QPoly {
    if i < 0 || j < 0 || j > i {
        return QPoly::zero();
    }
    let (i, j) = (i as usize, j as usize);
    let j = j.min(i - j);
    let numerator = q_integer_product(i - j + 1..=i);
    let denominator = q_factorial(j);
    numerator
        .exact_div(&denominator)
        .expect("q-binomial quotient must be exact")
}

/// Value of `p` at `exp(2πi·k/d)`.
pub fn eval_at_root_of_unity(p: &QPoly, d: u64, k: i64) -> Result<Complex64> {
    if d == 0 {
        return Err(Error::Zero { what: "root order" });
    }
    let k = k.rem_euclid(d as i64) as f64;
    let z = Complex64::from_polar(1.0, std::f64::consts::TAU * k / d as f64);
    Ok(p.eval_complex(z))
}

/// Value of `[α+β over β]` at a primitive `d`-th root of unity, where `d`
/// divides `α+β`: `binom((α+β)/d, β/d)` if `d | gcd(α, β)`, else zero.
pub fn q_binomial_limit_at_primitive_root(alpha: u64, beta: u64, d: u64) -> Result<u128> {
    if alpha == 0 {
        return Err(Error::Zero { what: "alpha" });
    }
    if beta == 0 {
        return Err(Error::Zero { what: "beta" });
    }
    if d == 0 {
        return Err(Error::Zero { what: "root order" });
    }
    let n = alpha + beta;
    if !n.is_multiple_of(d) {
        return Err(Error::NotADivisor { d, n });
    }
    if gcd(alpha, beta).is_multiple_of(d) {
        binomial(n / d, beta / d)
    } else {
        Ok(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    East,
    North,
}

/// A monotone lattice path starting at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// End point `(east, north)`.
    pub fn end(&self) -> (usize, usize) {
        let east = self.steps.iter().filter(|&&s| s == Step::East).count();
        (east, self.steps.len() - east)
    }

    /// Number of unit squares of the bounding rectangle lying north-west of
    /// the path: each East step taken at height `y` leaves `height - y`
    /// squares above it.
    pub fn weight(&self) -> usize {
        let height = self.end().1;
        let mut y = 0;
        let mut area = 0;
        for step in &self.steps {
            match step {
                Step::North => y += 1,
                Step::East => area += height - y,
            }
        }
        area
    }
}

/// All lattice paths from `(0, 0)` to `(j, i - j)`.
pub fn lattice_paths(i: usize, j: usize) -> Result<Vec<LatticePath>> {
    if j > i {
        return Err(Error::InvalidCodeSpec(format!(
            "lattice path needs j <= i, got i = {i}, j = {j}"
        )));
    }
    fn walk(east: usize, north: usize, prefix: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        if east == 0 && north == 0 {
            out.push(LatticePath::new(prefix.clone()));
            return;
        }
        for (step, left) in [(Step::East, east), (Step::North, north)] {
            if left > 0 {
                prefix.push(step);
                match step {
                    Step::East => walk(east - 1, north, prefix, out),
                    Step::North => walk(east, north - 1, prefix, out),
                }
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(j, i - j, &mut Vec::with_capacity(i), &mut out);
    Ok(out)
}

/// `Σ q^{weight(p)}` over all paths from `(0, 0)` to `(j, i - j)`.
pub fn lattice_path_weight_distribution(i: usize, j: usize) -> Result<QPoly> {
    lattice_path_weight_distribution_with(i, j, Exec::default())
}

pub fn lattice_path_weight_distribution_with(i: usize, j: usize, exec: Exec) -> Result<QPoly> {
    let paths = lattice_paths(i, j)?;
    let weights = exec.map(paths, |p| p.weight());
    let mut counts = vec![0u64; j * (i - j) + 1];
    for w in weights {
        counts[w] += 1;
    }
    Ok(QPoly::from_coeffs(counts))
}
