use crate::error::{Error, Result};
use crate::jets::Jet1;
use crate::tolerances;

/// Truncated Taylor series of a scalar in two variables at a base point:
/// coefficients `a_ij` for `i + j <= degree` of the expansion in
/// `(u - u0, v - v0)`.
///
/// The partial derivative of order `(i, j)` at the base is `i! j! * a_ij`.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet2 {
    degree: usize,
    base: (f64, f64),
    coeffs: Vec<f64>,
}

fn idx(i: usize, j: usize) -> usize {
    let d = i + j;
    d * (d + 1) / 2 + j
}

fn len_for(degree: usize) -> usize {
    (degree + 1) * (degree + 2) / 2
}

impl Jet2 {
    pub fn zero(base: (f64, f64), degree: usize) -> Jet2 {
        Jet2 {
            degree,
            base,
            coeffs: vec![0.0; len_for(degree)],
        }
    }

    pub fn constant(value: f64, base: (f64, f64), degree: usize) -> Jet2 {
        let mut j = Jet2::zero(base, degree);
        j.coeffs[0] = value;
        j
    }

    /// The coordinate function `u` as a jet at `base`.
    pub fn variable_u(base: (f64, f64), degree: usize) -> Jet2 {
        let mut j = Jet2::constant(base.0, base, degree);
        if degree >= 1 {
            j.coeffs[idx(1, 0)] = 1.0;
        }
        j
    }

    /// The coordinate function `v` as a jet at `base`.
    pub fn variable_v(base: (f64, f64), degree: usize) -> Jet2 {
        let mut j = Jet2::constant(base.1, base, degree);
        if degree >= 1 {
            j.coeffs[idx(0, 1)] = 1.0;
        }
        j
    }

    /// Embeds a one-variable jet in `u` as a two-variable jet constant in `v`.
    pub fn from_u_jet(jet: &Jet1, base: (f64, f64), degree: usize) -> Jet2 {
        let mut out = Jet2::zero(base, degree);
        for i in 0..=degree.min(jet.degree()) {
            out.coeffs[idx(i, 0)] = jet.coeff(i);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> (f64, f64) {
        self.base
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn coeff(&self, i: usize, j: usize) -> f64 {
        if i + j > self.degree {
            0.0
        } else {
            self.coeffs[idx(i, j)]
        }
    }

    /// Partial derivative of order `(i, j)` at the base point.
    pub fn partial(&self, i: usize, j: usize) -> f64 {
        let mut fact = 1.0;
        for k in 1..=i {
            fact *= k as f64;
        }
        for k in 1..=j {
            fact *= k as f64;
        }
        fact * self.coeff(i, j)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    pub fn truncated(&self, degree: usize) -> Jet2 {
        let n = degree.min(self.degree);
        let mut out = Jet2::zero(self.base, n);
        for i in 0..=n {
            for j in 0..=n - i {
                out.coeffs[idx(i, j)] = self.coeff(i, j);
            }
        }
        out
    }

    pub fn scale(&self, s: f64) -> Jet2 {
        Jet2 {
            degree: self.degree,
            base: self.base,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn neg(&self) -> Jet2 {
        self.scale(-1.0)
    }

    fn common(&self, other: &Jet2) -> usize {
        debug_assert_eq!(self.base, other.base, "jet base points differ");
        self.degree.min(other.degree)
    }

    pub fn add(&self, other: &Jet2) -> Jet2 {
        let n = self.common(other);
        let mut out = Jet2::zero(self.base, n);
        for i in 0..=n {
            for j in 0..=n - i {
                out.coeffs[idx(i, j)] = self.coeff(i, j) + other.coeff(i, j);
            }
        }
        out
    }

    pub fn sub(&self, other: &Jet2) -> Jet2 {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Jet2) -> Jet2 {
        let n = self.common(other);
        let mut out = Jet2::zero(self.base, n);
        for i1 in 0..=n {
            for j1 in 0..=n - i1 {
                let a = self.coeff(i1, j1);
                if a == 0.0 {
                    continue;
                }
                for i2 in 0..=n - i1 - j1 {
                    for j2 in 0..=n - i1 - j1 - i2 {
                        let b = other.coeff(i2, j2);
                        if b != 0.0 {
                            out.coeffs[idx(i1 + i2, j1 + j2)] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Composes an analytic function with this jet. `series` holds
    /// `f^(m)(a_00) / m!` for `m = 0..=degree`; the nilpotent part is folded
    /// in by Horner.
    fn apply_analytic(&self, series: &[f64]) -> Jet2 {
        let n = self.degree;
        let mut x = self.clone();
        x.coeffs[0] = 0.0;
        let mut acc = Jet2::constant(series[n], self.base, n);
        for m in (0..n).rev() {
            acc = acc.mul(&x);
            acc.coeffs[0] += series[m];
        }
        acc
    }

    pub fn exp(&self) -> Jet2 {
        let e = self.value().exp();
        let mut series = vec![0.0; self.degree + 1];
        let mut fact = 1.0;
        for (m, s) in series.iter_mut().enumerate() {
            if m > 0 {
                fact *= m as f64;
            }
            *s = e / fact;
        }
        self.apply_analytic(&series)
    }

    pub fn ln(&self) -> Result<Jet2> {
        let c = self.value();
        if c <= 0.0 {
            return Err(Error::Domain("log of non-positive jet".into()));
        }
        let mut series = vec![0.0; self.degree + 1];
        series[0] = c.ln();
        for (m, s) in series.iter_mut().enumerate().skip(1) {
            // f^(m)/m! = (-1)^(m-1) / (m c^m)
            *s = if m % 2 == 1 { 1.0 } else { -1.0 } / (m as f64 * c.powi(m as i32));
        }
        Ok(self.apply_analytic(&series))
    }

    pub fn sqrt(&self) -> Result<Jet2> {
        let c = self.value();
        if c <= 0.0 {
            return Err(Error::Domain("sqrt of non-positive jet".into()));
        }
        let mut series = vec![0.0; self.degree + 1];
        series[0] = c.sqrt();
        for m in 1..series.len() {
            let half_minus = 0.5 - (m as f64 - 1.0);
            series[m] = series[m - 1] * half_minus / (m as f64 * c);
        }
        Ok(self.apply_analytic(&series))
    }

    pub fn sin_cos(&self) -> (Jet2, Jet2) {
        let (s0, c0) = self.value().sin_cos();
        let cycle = [s0, c0, -s0, -c0];
        let n = self.degree;
        let mut sin_series = vec![0.0; n + 1];
        let mut cos_series = vec![0.0; n + 1];
        let mut fact = 1.0;
        for m in 0..=n {
            if m > 0 {
                fact *= m as f64;
            }
            sin_series[m] = cycle[m % 4] / fact;
            cos_series[m] = cycle[(m + 1) % 4] / fact;
        }
        (
            self.apply_analytic(&sin_series),
            self.apply_analytic(&cos_series),
        )
    }

    pub fn sin(&self) -> Jet2 {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Jet2 {
        self.sin_cos().1
    }

    pub fn tan(&self) -> Result<Jet2> {
        let (s, c) = self.sin_cos();
        s.div(&c)
    }

    pub fn recip(&self) -> Result<Jet2> {
        let c = self.value();
        if c.abs() <= tolerances::DIV_MIN_ABS {
            return Err(Error::Domain("division by vanishing jet".into()));
        }
        let mut series = vec![0.0; self.degree + 1];
        for (m, s) in series.iter_mut().enumerate() {
            // f^(m)/m! = (-1)^m / c^(m+1)
            *s = if m % 2 == 0 { 1.0 } else { -1.0 } / c.powi(m as i32 + 1);
        }
        Ok(self.apply_analytic(&series))
    }

    pub fn div(&self, other: &Jet2) -> Result<Jet2> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn powi(&self, n: i32) -> Result<Jet2> {
        if n < 0 {
            return self.powi(-n)?.recip();
        }
        let mut acc = Jet2::constant(1.0, self.base, self.degree);
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

    /// d/du as a jet of degree one less.
    pub fn partial_u(&self) -> Jet2 {
        let n = self.degree.saturating_sub(1);
        let mut out = Jet2::zero(self.base, n);
        for i in 0..=n {
            for j in 0..=n - i {
                out.coeffs[idx(i, j)] = (i as f64 + 1.0) * self.coeff(i + 1, j);
            }
        }
        out
    }

    /// d/dv as a jet of degree one less.
    pub fn partial_v(&self) -> Jet2 {
        let n = self.degree.saturating_sub(1);
        let mut out = Jet2::zero(self.base, n);
        for i in 0..=n {
            for j in 0..=n - i {
                out.coeffs[idx(i, j)] = (j as f64 + 1.0) * self.coeff(i, j + 1);
            }
        }
        out
    }

    /// The jet in `u` of `d^j0/dv^j0 f(u, v0)` along the axis `v = v0`.
    pub fn v_derivative_on_axis(&self, j0: usize) -> Jet1 {
        let mut fact = 1.0;
        for k in 1..=j0 {
            fact *= k as f64;
        }
        let n = self.degree.saturating_sub(j0);
        Jet1::new((0..=n).map(|i| fact * self.coeff(i, j0)).collect())
    }

    /// Hadamard quotient by `(v - v0)`: requires every `a_i0` to vanish up to
    /// rounding, shifts the `j`-index down by one.
    pub fn divide_by_v(&self) -> Result<Jet2> {
        if self.degree == 0 {
            return Err(Error::Usage("cannot v-divide a degree-0 jet".into()));
        }
        let tol = tolerances::DIV_PARAM_REL * self.max_abs_coeff();
        for i in 0..=self.degree {
            if self.coeff(i, 0).abs() > tol {
                return Err(Error::Domain(format!(
                    "nonvanishing v^0 row (coefficient u^{i}) in v-division"
                )));
            }
        }
        let n = self.degree - 1;
        let mut out = Jet2::zero(self.base, n);
        for i in 0..=n {
            for j in 0..=n - i {
                out.coeffs[idx(i, j)] = self.coeff(i, j + 1);
            }
        }
        Ok(out)
    }

    /// Substitutes a curve `(g1(t), g2(t))` whose values match the base point.
    /// The result is trusted to `min(curve degree, surface degree)`.
    pub fn compose_with_curve(&self, g1: &Jet1, g2: &Jet1) -> Result<Jet1> {
        let scale = 1.0 + self.base.0.abs().max(self.base.1.abs());
        if (g1.value() - self.base.0).abs() > tolerances::BASE_MATCH_TOL * scale
            || (g2.value() - self.base.1).abs() > tolerances::BASE_MATCH_TOL * scale
        {
            return Err(Error::Usage(format!(
                "curve value ({}, {}) does not match surface base ({}, {})",
                g1.value(),
                g2.value(),
                self.base.0,
                self.base.1
            )));
        }
        let out_deg = g1.degree().min(g2.degree()).min(self.degree);
        let mut x = g1.truncated(out_deg);
        let mut y = g2.truncated(out_deg);
        x = &x - &Jet1::constant(self.base.0, out_deg);
        y = &y - &Jet1::constant(self.base.1, out_deg);

        let mut x_pows = Vec::with_capacity(self.degree + 1);
        let mut y_pows = Vec::with_capacity(self.degree + 1);
        x_pows.push(Jet1::constant(1.0, out_deg));
        y_pows.push(Jet1::constant(1.0, out_deg));
        for k in 1..=self.degree {
            x_pows.push(x_pows[k - 1].mul(&x));
            y_pows.push(y_pows[k - 1].mul(&y));
        }

        let mut acc = Jet1::zero(out_deg);
        for i in 0..=self.degree {
            for j in 0..=self.degree - i {
                let c = self.coeff(i, j);
                if c != 0.0 {
                    acc = &acc + &x_pows[i].mul(&y_pows[j]).scale(c);
                }
            }
        }
        Ok(acc)
    }

    /// Evaluates the truncated polynomial at absolute coordinates `(u, v)`.
    pub fn eval(&self, u: f64, v: f64) -> f64 {
        let du = u - self.base.0;
        let dv = v - self.base.1;
        let mut du_pow = vec![1.0; self.degree + 1];
        let mut dv_pow = vec![1.0; self.degree + 1];
        for k in 1..=self.degree {
            du_pow[k] = du_pow[k - 1] * du;
            dv_pow[k] = dv_pow[k - 1] * dv;
        }
        let mut acc = 0.0;
        for i in 0..=self.degree {
            for j in 0..=self.degree - i {
                let c = self.coeff(i, j);
                if c != 0.0 {
                    acc += c * du_pow[i] * dv_pow[j];
                }
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_layout_counts() {
        let j = Jet2::zero((0.0, 0.0), 6);
        assert_eq!(j.coeffs.len(), 28);
        assert_eq!(idx(0, 0), 0);
        assert_eq!(idx(1, 0), 1);
        assert_eq!(idx(0, 1), 2);
        assert_eq!(idx(2, 0), 3);
    }

    #[test]
    fn product_and_partials() {
        let u = Jet2::variable_u((0.0, 0.0), 4);
        let v = Jet2::variable_v((0.0, 0.0), 4);
        let p = u.mul(&u).mul(&v); // u^2 v
        assert_eq!(p.coeff(2, 1), 1.0);
        assert_eq!(p.partial(2, 1), 2.0);
        let pu = p.partial_u(); // 2uv
        assert_eq!(pu.coeff(1, 1), 2.0);
        let pv = p.partial_v(); // u^2
        assert_eq!(pv.coeff(2, 0), 1.0);
    }

    #[test]
    fn analytic_composition_matches_values() {
        let base = (0.3, -0.2);
        let u = Jet2::variable_u(base, 5);
        let v = Jet2::variable_v(base, 5);
        let arg = u.mul(&v).add(&Jet2::constant(1.5, base, 5));
        let e = arg.exp();
        assert!((e.value() - (1.5 + 0.3 * -0.2f64).exp()).abs() < 1e-14);
        // d/du exp(1.5 + uv) = v exp(...)
        assert!((e.partial(1, 0) - (-0.2) * e.value()).abs() < 1e-13);
    }

    #[test]
    fn reciprocal_and_division() {
        let base = (0.0, 0.0);
        let u = Jet2::variable_u(base, 4);
        let denom = Jet2::constant(1.0, base, 4).add(&u); // 1 + u
        let r = denom.recip().unwrap();
        for i in 0..=4 {
            let want = if i % 2 == 0 { 1.0 } else { -1.0 };
            assert!((r.coeff(i, 0) - want).abs() < 1e-14);
        }
        assert!(Jet2::zero(base, 3).recip().is_err());
    }

    #[test]
    fn axis_restriction_extracts_rows() {
        let base = (0.0, 0.0);
        let u = Jet2::variable_u(base, 4);
        let v = Jet2::variable_v(base, 4);
        // f = u^2 + 3 u v + v^2
        let f = u
            .powi(2)
            .unwrap()
            .add(&u.mul(&v).scale(3.0))
            .add(&v.powi(2).unwrap());
        let f_on_axis = f.v_derivative_on_axis(0);
        assert_eq!(f_on_axis.coeff(2), 1.0);
        let fv_on_axis = f.v_derivative_on_axis(1); // 3u
        assert_eq!(fv_on_axis.coeff(1), 3.0);
        let fvv_on_axis = f.v_derivative_on_axis(2); // 2
        assert_eq!(fvv_on_axis.coeff(0), 2.0);
    }

    #[test]
    fn hadamard_v_quotient() {
        let base = (0.0, 0.0);
        let u = Jet2::variable_u(base, 4);
        let v = Jet2::variable_v(base, 4);
        let f = v.mul(&u.add(&v).add(&Jet2::constant(2.0, base, 4))); // v (2 + u + v)
        let g = f.divide_by_v().unwrap();
        assert_eq!(g.coeff(0, 0), 2.0);
        assert_eq!(g.coeff(1, 0), 1.0);
        assert_eq!(g.coeff(0, 1), 1.0);
        assert!(u.divide_by_v().is_err());
    }

    #[test]
    fn eval_matches_polynomial() {
        let base = (1.0, 2.0);
        let u = Jet2::variable_u(base, 3);
        let v = Jet2::variable_v(base, 3);
        let f = u.mul(&v); // exact for uv
        assert!((f.eval(1.5, -0.5) - (1.5 * -0.5)).abs() < 1e-14);
    }
}
