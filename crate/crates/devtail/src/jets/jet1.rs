use crate::error::{Error, Result};
use crate::tolerances;
use std::ops::{Add, Mul, Neg, Sub};

/// Truncated Taylor series of a scalar in one variable: coefficients
/// `a_0..a_K` of the expansion at the base parameter.
///
/// The k-th derivative at the base is `k! * a_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet1 {
    coeffs: Vec<f64>,
}

impl Jet1 {
    pub fn new(coeffs: Vec<f64>) -> Jet1 {
        assert!(!coeffs.is_empty(), "a jet needs at least a constant term");
        Jet1 { coeffs }
    }

    pub fn constant(value: f64, degree: usize) -> Jet1 {
        let mut coeffs = vec![0.0; degree + 1];
        coeffs[0] = value;
        Jet1 { coeffs }
    }

    /// The identity-like seed: value plus unit first-order coefficient.
    pub fn variable(value: f64, degree: usize) -> Jet1 {
        let mut coeffs = vec![0.0; degree + 1];
        coeffs[0] = value;
        if degree >= 1 {
            coeffs[1] = 1.0;
        }
        Jet1 { coeffs }
    }

    pub fn zero(degree: usize) -> Jet1 {
        Jet1 {
            coeffs: vec![0.0; degree + 1],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient `a_k`; zero past the truncation order.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// k-th derivative at the base parameter, `k! * a_k`.
    pub fn derivative(&self, k: usize) -> f64 {
        let mut fact = 1.0;
        for i in 1..=k {
            fact *= i as f64;
        }
        fact * self.coeff(k)
    }

    pub fn truncated(&self, degree: usize) -> Jet1 {
        let n = degree.min(self.degree());
        Jet1 {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn scale(&self, s: f64) -> Jet1 {
        Jet1 {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    /// d/dt as a jet of degree one less.
    pub fn derivative_jet(&self) -> Jet1 {
        if self.degree() == 0 {
            return Jet1::zero(0);
        }
        let coeffs = (1..self.coeffs.len())
            .map(|k| k as f64 * self.coeffs[k])
            .collect();
        Jet1 { coeffs }
    }

    /// Cauchy product truncated at the smaller degree.
    pub fn mul(&self, other: &Jet1) -> Jet1 {
        let n = self.degree().min(other.degree());
        let mut out = vec![0.0; n + 1];
        for i in 0..=n {
            let a = self.coeffs[i];
            if a == 0.0 {
                continue;
            }
            for j in 0..=n - i {
                out[i + j] += a * other.coeffs[j];
            }
        }
        Jet1 { coeffs: out }
    }

    /// Product requiring equal degrees.
    pub fn checked_mul(&self, other: &Jet1) -> Result<Jet1> {
        self.check_degree(other)?;
        Ok(self.mul(other))
    }

    /// Quotient; the divisor's constant term must not vanish.
    pub fn div(&self, other: &Jet1) -> Result<Jet1> {
        let b0 = other.value();
        if b0.abs() <= tolerances::DIV_MIN_ABS {
            return Err(Error::Domain("division by vanishing jet".into()));
        }
        let n = self.degree().min(other.degree());
        let mut out = vec![0.0; n + 1];
        for k in 0..=n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= other.coeff(j) * out[k - j];
            }
            out[k] = acc / b0;
        }
        Ok(Jet1 { coeffs: out })
    }

    pub fn checked_div(&self, other: &Jet1) -> Result<Jet1> {
        self.check_degree(other)?;
        self.div(other)
    }

    fn check_degree(&self, other: &Jet1) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::Usage(format!(
                "jet degree mismatch: {} vs {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(())
    }

    /// Hadamard quotient by the parameter: shifts coefficients down by one.
    /// The constant term must vanish up to rounding.
    pub fn divide_by_parameter(&self) -> Result<Jet1> {
        if self.degree() == 0 {
            return Err(Error::Usage(
                "cannot divide a degree-0 jet by the parameter".into(),
            ));
        }
        let tol = tolerances::DIV_PARAM_REL * self.max_abs_coeff();
        if self.coeffs[0].abs() > tol {
            return Err(Error::Domain(format!(
                "nonvanishing constant term {:e} in parameter division",
                self.coeffs[0]
            )));
        }
        Ok(Jet1 {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    pub fn exp(&self) -> Jet1 {
        let n = self.degree();
        let mut out = vec![0.0; n + 1];
        out[0] = self.coeffs[0].exp();
        for k in 1..=n {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += j as f64 * self.coeffs[j] * out[k - j];
            }
            out[k] = acc / k as f64;
        }
        Jet1 { coeffs: out }
    }

    pub fn ln(&self) -> Result<Jet1> {
        let a0 = self.coeffs[0];
        if a0 <= 0.0 {
            return Err(Error::Domain("log of non-positive jet".into()));
        }
        let n = self.degree();
        let mut out = vec![0.0; n + 1];
        out[0] = a0.ln();
        for k in 1..=n {
            let mut acc = k as f64 * self.coeffs[k];
            for j in 1..k {
                acc -= j as f64 * out[j] * self.coeffs[k - j];
            }
            out[k] = acc / (k as f64 * a0);
        }
        Ok(Jet1 { coeffs: out })
    }

    pub fn sqrt(&self) -> Result<Jet1> {
        let a0 = self.coeffs[0];
        if a0 <= 0.0 {
            return Err(Error::Domain("sqrt of non-positive jet".into()));
        }
        let n = self.degree();
        let mut out = vec![0.0; n + 1];
        out[0] = a0.sqrt();
        for k in 1..=n {
            let mut acc = self.coeffs[k];
            for j in 1..k {
                acc -= out[j] * out[k - j];
            }
            out[k] = acc / (2.0 * out[0]);
        }
        Ok(Jet1 { coeffs: out })
    }

    pub fn sin_cos(&self) -> (Jet1, Jet1) {
        let n = self.degree();
        let mut s = vec![0.0; n + 1];
        let mut c = vec![0.0; n + 1];
        s[0] = self.coeffs[0].sin();
        c[0] = self.coeffs[0].cos();
        for k in 1..=n {
            let mut sa = 0.0;
            let mut ca = 0.0;
            for j in 1..=k {
                let ja = j as f64 * self.coeffs[j];
                sa += ja * c[k - j];
                ca -= ja * s[k - j];
            }
            s[k] = sa / k as f64;
            c[k] = ca / k as f64;
        }
        (Jet1 { coeffs: s }, Jet1 { coeffs: c })
    }

    pub fn sin(&self) -> Jet1 {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Jet1 {
        self.sin_cos().1
    }

    pub fn tan(&self) -> Result<Jet1> {
        let (s, c) = self.sin_cos();
        s.div(&c)
    }

    /// Integer power; negative exponents go through division.
    pub fn powi(&self, n: i32) -> Result<Jet1> {
        if n < 0 {
            let pos = self.powi(-n)?;
            return Jet1::constant(1.0, self.degree()).div(&pos);
        }
        let mut acc = Jet1::constant(1.0, self.degree());
        let mut base = self.clone();
        let mut e = n as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Horner evaluation of the truncated polynomial at offset `t` from the
    /// base parameter.
    pub fn eval(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }
}

impl Add for &Jet1 {
    type Output = Jet1;
    fn add(self, rhs: &Jet1) -> Jet1 {
        let n = self.degree().min(rhs.degree());
        Jet1::new((0..=n).map(|k| self.coeffs[k] + rhs.coeffs[k]).collect())
    }
}

impl Sub for &Jet1 {
    type Output = Jet1;
    fn sub(self, rhs: &Jet1) -> Jet1 {
        let n = self.degree().min(rhs.degree());
        Jet1::new((0..=n).map(|k| self.coeffs[k] - rhs.coeffs[k]).collect())
    }
}

impl Mul for &Jet1 {
    type Output = Jet1;
    fn mul(self, rhs: &Jet1) -> Jet1 {
        Jet1::mul(self, rhs)
    }
}

impl Neg for &Jet1 {
    type Output = Jet1;
    fn neg(self) -> Jet1 {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: &Jet1, b: &[f64], tol: f64) {
        for (k, want) in b.iter().enumerate() {
            assert!(
                (a.coeff(k) - want).abs() <= tol,
                "coefficient {k}: got {}, want {want}",
                a.coeff(k)
            );
        }
    }

    #[test]
    fn product_of_one_plus_and_minus_t() {
        let p = Jet1::new(vec![1.0, 1.0, 0.0, 0.0]);
        let q = Jet1::new(vec![1.0, -1.0, 0.0, 0.0]);
        assert_close(&p.mul(&q), &[1.0, 0.0, -1.0, 0.0], 0.0);
    }

    #[test]
    fn one_is_the_multiplicative_identity() {
        let a = Jet1::new(vec![2.0, -3.0, 0.5, 7.0]);
        let one = Jet1::constant(1.0, 3);
        assert_eq!(a.mul(&one), a);
    }

    #[test]
    fn degree_four_product_is_a_convolution() {
        // fixed degree-4 polynomials, expected coefficient by hand convolution
        let a = Jet1::new(vec![1.0, 2.0, -1.0, 0.5, 3.0]);
        let b = Jet1::new(vec![-2.0, 1.0, 4.0, 0.0, -1.0]);
        let prod = a.mul(&b);
        let mut want = 0.0;
        for i in 0..=4usize {
            want += a.coeff(i) * b.coeff(4 - i);
        }
        assert!((prod.coeff(4) - want).abs() < 1e-15);
    }

    #[test]
    fn division_recovers_quotient() {
        let a = Jet1::new(vec![2.0, -1.0, 3.0, 0.25, -5.0, 1.0]);
        assert_close(&a.div(&a).unwrap(), &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0], 1e-15);
        let one = Jet1::constant(1.0, 5);
        let geom = one.div(&Jet1::new(vec![1.0, -1.0, 0.0, 0.0, 0.0, 0.0])).unwrap();
        assert_close(&geom, &[1.0; 6], 1e-15);
    }

    #[test]
    fn division_by_vanishing_constant_term_fails() {
        let a = Jet1::constant(1.0, 3);
        let b = Jet1::new(vec![0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(a.div(&b), Err(Error::Domain(_))));
    }

    #[test]
    fn tangent_matches_sin_over_cos() {
        let t = Jet1::variable(0.0, 7);
        let tan = t.tan().unwrap();
        assert_close(
            &tan,
            &[0.0, 1.0, 0.0, 1.0 / 3.0, 0.0, 2.0 / 15.0, 0.0, 17.0 / 315.0],
            1e-14,
        );
    }

    #[test]
    fn maclaurin_sine() {
        let t = Jet1::variable(0.0, 5);
        assert_close(
            &t.sin(),
            &[0.0, 1.0, 0.0, -1.0 / 6.0, 0.0, 1.0 / 120.0],
            1e-16,
        );
    }

    #[test]
    fn sqrt_binomial_series() {
        // sqrt(1 + 2t) = 1 + t - t^2/2 + t^3/2 - ...
        let a = Jet1::new(vec![1.0, 2.0, 0.0, 0.0]);
        assert_close(&a.sqrt().unwrap(), &[1.0, 1.0, -0.5, 0.5], 1e-15);
    }

    #[test]
    fn pythagorean_identity() {
        let a = Jet1::new(vec![0.3, 1.7, -0.4, 0.09, 1.1, -2.0]);
        let (s, c) = a.sin_cos();
        let sum = &s.mul(&s) + &c.mul(&c);
        assert!((sum.coeff(0) - 1.0).abs() < 1e-13);
        for k in 1..=5 {
            assert!(sum.coeff(k).abs() < 1e-13, "coefficient {k}");
        }
    }

    #[test]
    fn parameter_division_shifts() {
        let a = Jet1::new(vec![0.0, 1.0, 2.0, 3.0]);
        assert_close(&a.divide_by_parameter().unwrap(), &[1.0, 2.0, 3.0], 0.0);
        let sub = Jet1::new(vec![1e-30, 5.0]);
        assert_close(&sub.divide_by_parameter().unwrap(), &[5.0], 0.0);
        let bad = Jet1::new(vec![1.0, 5.0]);
        assert!(bad.divide_by_parameter().is_err());
    }

    #[test]
    fn checked_ops_reject_degree_mismatch() {
        let a = Jet1::constant(1.0, 3);
        let b = Jet1::constant(1.0, 4);
        assert!(matches!(a.checked_mul(&b), Err(Error::Usage(_))));
        assert!(matches!(a.checked_div(&b), Err(Error::Usage(_))));
    }

    #[test]
    fn log_of_shifted_geometric() {
        let a = Jet1::new(vec![1.0, 1.0, 0.0, 0.0, 0.0]);
        let l = a.ln().unwrap();
        assert_close(&l, &[0.0, 1.0, -0.5, 1.0 / 3.0, -0.25], 1e-15);
        assert!(Jet1::constant(-1.0, 2).ln().is_err());
        assert!(Jet1::constant(0.0, 2).sqrt().is_err());
    }

    #[test]
    fn powi_including_negative() {
        let a = Jet1::new(vec![1.0, 1.0, 0.0]);
        assert_close(&a.powi(3).unwrap(), &[1.0, 3.0, 3.0], 1e-15);
        assert_close(&a.powi(-1).unwrap(), &[1.0, -1.0, 1.0], 1e-15);
        assert_close(&a.powi(0).unwrap(), &[1.0, 0.0, 0.0], 0.0);
    }
}
