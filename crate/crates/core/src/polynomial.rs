//! Univariate polynomials over the rationals, plus the minimal and
//! characteristic polynomials of a square [`Matrix`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::matrix::{Matrix, Rational};

/// Dense polynomial with coefficients in ascending degree order.
///
/// The representation is canonical: no trailing zero coefficients, and the
/// zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · λ^degree`.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `λ^degree`.
    pub fn x_pow(degree: usize) -> Self {
        Self::monomial(Rational::one(), degree)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| crate::matrix::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `λ^power`, zero beyond the degree.
    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs
            .get(power)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Scales to a monic polynomial; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let inv = lead.recip();
                Polynomial {
                    coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Euclidean division; `None` when dividing by the zero polynomial.
    pub fn div_rem(&self, divisor: &Polynomial) -> Option<(Polynomial, Polynomial)> {
        let d_deg = divisor.degree()?;
        let d_lead = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        let Some(deg) = self.degree().filter(|&d| d >= d_deg) else {
            return Some((Self::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); deg - d_deg + 1];
        for shift in (0..=deg - d_deg).rev() {
            let c = &rem[shift + d_deg] / &d_lead;
            if c.is_zero() {
                continue;
            }
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &c * dc;
            }
            quot[shift] = c;
        }
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// True when `self` divides `other` exactly. Zero divides only zero.
    pub fn divides(&self, other: &Polynomial) -> bool {
        match other.div_rem(self) {
            Some((_, r)) => r.is_zero(),
            None => other.is_zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Polynomial) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let (q, _) = self.div_rem(&g).expect("gcd is nonzero");
        (&q * other).monic()
    }

    /// Multiplicity of `0` as a root, i.e. the number of leading zero coefficients.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Splits `p(λ) = λ^s · h(λ)` with `h(0) ≠ 0`, returning `(s, h)`.
    pub fn split_zero_root(&self) -> (usize, Polynomial) {
        let s = self.zero_root_multiplicity();
        (
            s,
            Self::from_coeffs(self.coeffs[s.min(self.coeffs.len())..].to_vec()),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_matrix(&self, a: &Matrix) -> Result<Matrix> {
        a.require_square("polynomial evaluation")?;
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a)?.add(&Matrix::identity(n).scale(c))?;
        }
        Ok(acc)
    }

    pub fn annihilates(&self, a: &Matrix) -> Result<bool> {
        Ok(self.eval_matrix(a)?.is_zero())
    }

    /// Coefficients as strings, lowest degree first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_coeff = power == 0 || !magnitude.is_one();
            if show_coeff {
                if magnitude.is_integer() {
                    write!(f, "{magnitude}")?;
                } else {
                    write!(f, "({magnitude})")?;
                }
            }
            match power {
                0 => {}
                1 => write!(f, "λ")?,
                p => write!(f, "λ^{p}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Minimal polynomial of a square matrix.
///
/// For each standard basis vector `e_i` the Krylov sequence `e_i, A e_i, A² e_i, …`
/// is reduced incrementally until the first linear dependence, which yields the
/// monic local annihilator of `e_i`. The minimal polynomial is the lcm of the
/// local annihilators. Basis vectors already killed by the running lcm are skipped.
pub fn minimal_polynomial(a: &Matrix) -> Result<Polynomial> {
    a.require_square("minimal_polynomial")?;
    let n = a.rows();
    let mut psi = Polynomial::one();
    for i in 0..n {
        let e = unit_vector(n, i);
        if psi.degree() > Some(0) && eval_on_vector(&psi, a, &e).iter().all(Zero::is_zero) {
            continue;
        }
        psi = psi.lcm(&local_annihilator(a, e));
    }
    Ok(psi)
}

/// Monic polynomial `p` of least degree with `p(A) v = 0`.
fn local_annihilator(a: &Matrix, start: Vec<Rational>) -> Polynomial {
    // Echelon rows: (vector, pivot position, combination of Krylov powers it equals).
    let mut basis: Vec<(Vec<Rational>, usize, Polynomial)> = Vec::new();
    let mut krylov = start;
    for degree in 0.. {
        let mut v = krylov.clone();
        let mut combo = Polynomial::x_pow(degree);
        for (row, pivot, row_combo) in &basis {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = &v[*pivot] / &row[*pivot];
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
            combo = &combo - &row_combo.scale(&f);
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => return combo,
            Some(pivot) => basis.push((v, pivot, combo)),
        }
        krylov = mat_vec(a, &krylov);
    }
    unreachable!("Krylov sequence of length n+1 is always dependent")
}

/// Characteristic polynomial `det(λI − A)` by the Faddeev–LeVerrier recursion.
pub fn char_polynomial(a: &Matrix) -> Result<Polynomial> {
    a.require_square("char_polynomial")?;
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let identity = Matrix::identity(n);
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m)?.add(&identity.scale(&coeffs[n - k + 1]))?;
        let trace = a.mul(&m)?.trace()?;
        coeffs[n - k] = -trace / Rational::from_integer(k.into());
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn mat_vec(a: &Matrix, v: &[Rational]) -> Vec<Rational> {
    (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .map(|(x, y)| x * y)
                .sum()
        })
        .collect()
}

fn eval_on_vector(p: &Polynomial, a: &Matrix, v: &[Rational]) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); v.len()];
    for c in p.coeffs().iter().rev() {
        acc = mat_vec(a, &acc);
        for (x, y) in acc.iter_mut().zip(v) {
            *x += c * y;
        }
    }
    acc
}
