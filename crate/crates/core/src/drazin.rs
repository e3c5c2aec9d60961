//! Drazin inverses and indices.
//!
//! [`drazin_general`] works for any square rational matrix: it splits the
//! minimal polynomial as `ψ(λ) = λ^s h(λ)` with `h(0) ≠ 0`, forms
//! `X = −(1/h₀)(h₁I + h₂A + ⋯ + h_ℓA^{ℓ−1})` so that `A^s = A^{s+1} X`, and
//! returns `A^D = A^s X^{s+1}`. [`drazin_windmill_closed`] writes down the
//! inverse of a windmill adjacency matrix directly: `1/m` on the support of
//! the length-`(n−1)` walks and zero elsewhere.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_windmill, WindmillParams};
use crate::matrix::{Matrix, MatrixJson, Rational};
use crate::polynomial::{minimal_polynomial, Polynomial};
use crate::walks::{windmill_support_cases, SupportEntry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    General,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::General => "general",
            Method::ClosedForm => "closed_form",
        }
    }
}

/// Outcome of checking the three defining equations of the Drazin inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrazinCheck {
    /// `A^{k+1} X = A^k`
    pub eq1: bool,
    /// `X A X = X`
    pub eq2: bool,
    /// `A X = X A`
    pub eq3: bool,
}

impl DrazinCheck {
    pub fn all_pass(&self) -> bool {
        self.eq1 && self.eq2 && self.eq3
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DrazinResult {
    pub inverse: Matrix,
    pub index: usize,
    /// Annihilating polynomial `λ^index · h(λ)` the inverse was derived from.
    pub annihilator: Polynomial,
    pub method: Method,
    pub verified: DrazinCheck,
}

impl DrazinResult {
    pub fn to_json(&self) -> DrazinJson {
        DrazinJson {
            index: self.index,
            method: self.method.as_str().to_owned(),
            inverse: self.inverse.to_json(),
            annihilator: self.annihilator.to_strings(),
            verified: self.verified,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("result JSON is always serializable")
    }
}

/// Serialized [`DrazinResult`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrazinJson {
    pub index: usize,
    pub method: String,
    pub inverse: MatrixJson,
    pub annihilator: Vec<String>,
    pub verified: DrazinCheck,
}

/// Smallest `k` with `A^{k+1} X = A^k, XAX = X, AX = XA`, computed from rank
/// stabilisation of the powers and cross-checked against the multiplicity of
/// `0` as a root of the minimal polynomial.
pub fn drazin_index(a: &Matrix) -> Result<usize> {
    a.require_square("drazin_index")?;
    let by_rank = index_by_rank(a)?;
    let by_polynomial = minimal_polynomial(a)?.zero_root_multiplicity();
    if by_rank != by_polynomial {
        return Err(Error::IndexMismatch {
            by_rank,
            by_polynomial,
        });
    }
    Ok(by_rank)
}

/// Smallest `k ≥ 0` with `rank(A^k) = rank(A^{k+1})`.
pub fn index_by_rank(a: &Matrix) -> Result<usize> {
    a.require_square("index_by_rank")?;
    let mut power = Matrix::identity(a.rows());
    let mut rank = power.rank();
    for k in 0..=a.rows() {
        let next = power.mul(a)?;
        let next_rank = next.rank();
        if next_rank == rank {
            return Ok(k);
        }
        power = next;
        rank = next_rank;
    }
    unreachable!("ranks of powers stabilise within the matrix order")
}

/// Drazin inverse of an arbitrary square matrix via its minimal polynomial.
pub fn drazin_general(a: &Matrix) -> Result<DrazinResult> {
    a.require_square("drazin_general")?;
    let psi = minimal_polynomial(a)?;
    let (s, h) = psi.split_zero_root();
    let n = a.rows();

    let inverse = if s == 0 {
        a.inverse()?
    } else if h.degree() == Some(0) {
        // ψ = λ^s: A is nilpotent, X = 0 and so is A^D.
        Matrix::zeros(n, n)
    } else {
        let x = polynomial_solution(a, &h)?;
        a.pow(s as u64)?.mul(&x.pow(s as u64 + 1)?)?
    };

    let verified = verify_drazin(a, &inverse, s)?;
    Ok(DrazinResult {
        inverse,
        index: s,
        annihilator: psi,
        method: Method::General,
        verified,
    })
}

/// `X = −(1/h₀)(h₁I + h₂A + ⋯ + h_ℓA^{ℓ−1})` for `h(0) ≠ 0`.
fn polynomial_solution(a: &Matrix, h: &Polynomial) -> Result<Matrix> {
    let h0 = h.coeff(0);
    debug_assert!(!h0.is_zero());
    let tail = Polynomial::from_coeffs(h.coeffs()[1..].to_vec());
    Ok(tail.eval_matrix(a)?.scale(&(-h0.recip())))
}

/// Positions where the windmill Drazin inverse is nonzero, tagged by case.
pub fn windmill_support_pattern(p: WindmillParams) -> Vec<SupportEntry> {
    windmill_support_cases(p)
}

/// Closed-form Drazin inverse of the adjacency matrix of `D^m_n` for `m ≥ 2`.
///
/// `m = 1` is rejected: that adjacency matrix is a permutation matrix and its
/// ordinary inverse is the transpose; use [`drazin_general`] for it.
pub fn drazin_windmill_closed(p: WindmillParams) -> Result<DrazinResult> {
    let (m, n) = (p.m(), p.n());
    if m < 2 {
        return Err(Error::ClosedFormNeedsMultipleCycles { m });
    }
    let size = p.vertex_count();
    let value = Rational::new(1.into(), m.into());
    let mut rows = vec![vec![Rational::zero(); size]; size];
    for entry in windmill_support_pattern(p) {
        rows[entry.row - 1][entry.col - 1] = value.clone();
    }
    let inverse = Matrix::from_rows(rows)?;

    let annihilator = windmill_annihilator(p);
    let index = n - 1;
    let adjacency = build_windmill(p).adjacency_matrix();
    let verified = verify_drazin(&adjacency, &inverse, index)?;
    Ok(DrazinResult {
        inverse,
        index,
        annihilator,
        method: Method::ClosedForm,
        verified,
    })
}

/// `φ(λ) = λ^{n−1}(λ^n − m)`, which annihilates the adjacency matrix of `D^m_n`.
pub fn windmill_annihilator(p: WindmillParams) -> Polynomial {
    let shifted =
        &Polynomial::x_pow(p.n()) - &Polynomial::constant(Rational::from_integer(p.m().into()));
    &Polynomial::x_pow(p.n() - 1) * &shifted
}

/// Checks `A^{k+1}X = A^k`, `XAX = X` and `AX = XA` exactly.
pub fn verify_drazin(a: &Matrix, x: &Matrix, k: usize) -> Result<DrazinCheck> {
    a.require_square("verify_drazin")?;
    if a.shape() != x.shape() {
        return Err(Error::DimensionMismatch {
            op: "verify_drazin",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: x.rows(),
            right_cols: x.cols(),
        });
    }
    let ak = a.pow(k as u64)?;
    let ax = a.mul(x)?;
    let xa = x.mul(a)?;
    Ok(DrazinCheck {
        eq1: ak.mul(&ax)? == ak,
        eq2: x.mul(&ax)? == *x,
        eq3: ax == xa,
    })
}

/// Evaluation of the five power statements for `D^m_n`, plus invertibility.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerIdentityReport {
    pub m: usize,
    pub n: usize,
    /// `M^{2n−1} = m M^{n−1}`
    pub odd_power_scaling: bool,
    /// `M^{n−1} ≠ 0`
    pub power_n_minus_1_nonzero: bool,
    /// `M^{2n−2} ≠ m M^{n−2}`
    pub even_power_not_scaled: bool,
    /// `M^n ≠ m I`
    pub power_n_not_scalar: bool,
    /// `M^{n²−1} = m^{n−1} M^{n−1}`
    pub high_power_scaling: bool,
    pub invertible: bool,
    /// `M^{-1} = Mᵀ`; only evaluated for invertible `M`.
    pub inverse_is_transpose: Option<bool>,
}

impl PowerIdentityReport {
    /// Statements 3 and 4 only hold for `m ≥ 2` (for `m = 1`, `M^n = I`); for
    /// `m = 1` the invertibility statements take their place.
    pub fn all_hold(&self) -> bool {
        let common =
            self.odd_power_scaling && self.power_n_minus_1_nonzero && self.high_power_scaling;
        if self.m >= 2 {
            common && self.even_power_not_scaled && self.power_n_not_scalar && !self.invertible
        } else {
            common && self.invertible && self.inverse_is_transpose == Some(true)
        }
    }
}

pub fn verify_power_identities(p: WindmillParams) -> Result<PowerIdentityReport> {
    let (m, n) = (p.m(), p.n());
    let adjacency = build_windmill(p).adjacency_matrix();
    let m_scalar = Rational::from_integer(m.into());
    let power = |e: usize| adjacency.pow(e as u64);

    let p_n2 = power(n - 2)?;
    let p_n1 = p_n2.mul(&adjacency)?;
    let p_n = p_n1.mul(&adjacency)?;
    let p_2n2 = p_n.mul(&p_n2)?;
    let p_2n1 = p_2n2.mul(&adjacency)?;
    let p_high = power(n * n - 1)?;
    let m_pow = Rational::from_integer(num_bigint::BigInt::from(m).pow((n - 1) as u32));

    let invertible = adjacency.rank() == adjacency.rows();
    let inverse_is_transpose = if invertible {
        Some(adjacency.inverse()? == adjacency.transpose())
    } else {
        None
    };

    Ok(PowerIdentityReport {
        m,
        n,
        odd_power_scaling: p_2n1 == p_n1.scale(&m_scalar),
        power_n_minus_1_nonzero: !p_n1.is_zero(),
        even_power_not_scaled: p_2n2 != p_n2.scale(&m_scalar),
        power_n_not_scalar: p_n != Matrix::identity(adjacency.rows()).scale(&m_scalar),
        high_power_scaling: p_high == p_n1.scale(&m_pow),
        invertible,
        inverse_is_transpose,
    })
}

/// `(1/m) M^{n−1}` for the windmill `D^m_n`.
pub fn scaled_power(p: WindmillParams) -> Result<Matrix> {
    let adjacency = build_windmill(p).adjacency_matrix();
    Ok(adjacency
        .pow(p.n() as u64 - 1)?
        .scale(&Rational::new(One::one(), p.m().into())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{int, ratio};

    fn w(m: usize, n: usize) -> WindmillParams {
        WindmillParams::new(m, n).unwrap()
    }

    fn adjacency(m: usize, n: usize) -> Matrix {
        build_windmill(w(m, n)).adjacency_matrix()
    }

    #[test]
    fn index_examples() {
        assert_eq!(drazin_index(&Matrix::identity(3)).unwrap(), 0);
        let jordan = Matrix::from_integers(&[[0, 1], [0, 0]]).unwrap();
        assert_eq!(drazin_index(&jordan).unwrap(), 2);
        assert_eq!(drazin_index(&adjacency(2, 3)).unwrap(), 2);
        assert_eq!(drazin_index(&Matrix::zeros(3, 3)).unwrap(), 1);
        assert!(matches!(
            drazin_index(&Matrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn general_trivial_cases() {
        let zero = drazin_general(&Matrix::zeros(3, 3)).unwrap();
        assert_eq!(zero.inverse, Matrix::zeros(3, 3));
        assert_eq!(zero.index, 1);
        assert!(zero.verified.all_pass());

        let id = drazin_general(&Matrix::identity(3)).unwrap();
        assert_eq!(id.inverse, Matrix::identity(3));
        assert_eq!(id.index, 0);
        assert!(id.verified.all_pass());
    }

    #[test]
    fn general_on_small_windmill() {
        let m = adjacency(2, 3);
        let result = drazin_general(&m).unwrap();
        assert_eq!(result.index, 2);
        assert_eq!(result.inverse, m.pow(2).unwrap().scale(&ratio(1, 2)));
        assert!(result.verified.all_pass());
        assert_eq!(
            result.annihilator,
            Polynomial::from_integers(&[0, 0, -2, 0, 0, 1])
        );
    }

    #[test]
    fn general_on_invertible_and_mixed_matrices() {
        let a = Matrix::from_integers(&[[2, 1], [1, 1]]).unwrap();
        let r = drazin_general(&a).unwrap();
        assert_eq!(r.inverse, a.inverse().unwrap());
        // diag(3, J₂(0)) has index 2 and A^D = diag(1/3, 0, 0)
        let b = Matrix::from_integers(&[[3, 0, 0], [0, 0, 1], [0, 0, 0]]).unwrap();
        let r = drazin_general(&b).unwrap();
        assert_eq!(r.index, 2);
        assert_eq!(
            r.inverse,
            Matrix::from_fn(3, 3, |i, j| if i == 0 && j == 0 {
                ratio(1, 3)
            } else {
                int(0)
            })
        );
    }

    #[test]
    fn closed_form_examples() {
        let r = drazin_windmill_closed(w(2, 3)).unwrap();
        assert_eq!(r.index, 2);
        assert_eq!(r.inverse.support().len(), 8);
        assert!(r
            .inverse
            .entries()
            .iter()
            .all(|e| e.is_zero() || *e == ratio(1, 2)));
        assert!(r.verified.all_pass());
        assert_eq!(r.inverse, drazin_general(&adjacency(2, 3)).unwrap().inverse);

        let r = drazin_windmill_closed(w(4, 3)).unwrap();
        assert_eq!(r.inverse.support().len(), 24);
        assert_eq!(r.inverse, scaled_power(w(4, 3)).unwrap());

        let r = drazin_windmill_closed(w(2, 4)).unwrap();
        assert_eq!(r.inverse.support().len(), 12);
        assert!(r
            .inverse
            .entries()
            .iter()
            .all(|e| e.is_zero() || *e == ratio(1, 2)));
    }

    #[test]
    fn closed_form_refuses_single_cycle() {
        let err = drazin_windmill_closed(w(1, 3)).unwrap_err();
        assert!(matches!(err, Error::ClosedFormNeedsMultipleCycles { m: 1 }));
        assert!(err.to_string().contains("general"));
    }

    #[test]
    fn verify_examples() {
        let id = Matrix::identity(4);
        assert!(verify_drazin(&id, &id, 0).unwrap().all_pass());
        let z = Matrix::zeros(3, 3);
        assert!(verify_drazin(&z, &z, 1).unwrap().all_pass());
        let m = adjacency(2, 3);
        let x = m.pow(2).unwrap().scale(&ratio(1, 2));
        assert!(verify_drazin(&m, &x, 2).unwrap().all_pass());
        assert!(!verify_drazin(&m, &m.transpose(), 2).unwrap().all_pass());
        assert!(verify_drazin(&m, &Matrix::zeros(4, 4), 2).is_err());
    }

    #[test]
    fn power_identities() {
        let r = verify_power_identities(w(2, 3)).unwrap();
        assert!(r.odd_power_scaling && r.power_n_minus_1_nonzero && r.high_power_scaling);
        assert!(r.even_power_not_scaled && r.power_n_not_scalar);
        assert!(!r.invertible);
        assert!(r.all_hold());

        let r = verify_power_identities(w(1, 3)).unwrap();
        assert!(r.invertible);
        assert_eq!(r.inverse_is_transpose, Some(true));
        assert!(r.all_hold());

        let m = adjacency(3, 4);
        let m3 = m.pow(3).unwrap();
        assert_eq!(m.pow(7).unwrap(), m3.scale(&int(3)));
        assert_eq!(m.pow(15).unwrap(), m3.scale(&int(27)));
        assert!(verify_power_identities(w(3, 4)).unwrap().all_hold());
    }

    #[test]
    fn result_json_layout() {
        let r = drazin_windmill_closed(w(2, 3)).unwrap();
        let value: serde_json::Value = serde_json::from_str(&r.to_json_string()).unwrap();
        assert_eq!(value["index"], 2);
        assert_eq!(value["method"], "closed_form");
        assert_eq!(value["inverse"]["entries"][0][2], "1/2");
        assert_eq!(
            value["annihilator"],
            serde_json::json!(["0", "0", "-2", "0", "0", "1"])
        );
        assert_eq!(
            value["verified"],
            serde_json::json!({"eq1": true, "eq2": true, "eq3": true})
        );
    }
}
