use crate::error::{Error, Result};
use crate::jets::{Jet1, Jet2};

/// Three jet components of matching degree: a curve (or field) in 3-space.
#[derive(Debug, Clone, PartialEq)]
pub struct Vec3Jet1(pub [Jet1; 3]);

/// Three two-variable jet components: a surface map into 3-space.
#[derive(Debug, Clone, PartialEq)]
pub struct Vec3Jet2(pub [Jet2; 3]);

pub fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm3(a: [f64; 3]) -> f64 {
    dot3(a, a).sqrt()
}

pub fn sub3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Scalar triple product of plain vectors.
pub fn det3_values(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    dot3(a, cross3(b, c))
}

impl Vec3Jet1 {
    pub fn new(x: Jet1, y: Jet1, z: Jet1) -> Vec3Jet1 {
        Vec3Jet1([x, y, z])
    }

    pub fn constant(v: [f64; 3], degree: usize) -> Vec3Jet1 {
        Vec3Jet1([
            Jet1::constant(v[0], degree),
            Jet1::constant(v[1], degree),
            Jet1::constant(v[2], degree),
        ])
    }

    pub fn x(&self) -> &Jet1 {
        &self.0[0]
    }
    pub fn y(&self) -> &Jet1 {
        &self.0[1]
    }
    pub fn z(&self) -> &Jet1 {
        &self.0[2]
    }

    pub fn degree(&self) -> usize {
        self.0[0]
            .degree()
            .min(self.0[1].degree())
            .min(self.0[2].degree())
    }

    pub fn map<F: Fn(&Jet1) -> Jet1>(&self, f: F) -> Vec3Jet1 {
        Vec3Jet1([f(&self.0[0]), f(&self.0[1]), f(&self.0[2])])
    }

    pub fn add(&self, o: &Vec3Jet1) -> Vec3Jet1 {
        Vec3Jet1([
            &self.0[0] + &o.0[0],
            &self.0[1] + &o.0[1],
            &self.0[2] + &o.0[2],
        ])
    }

    pub fn sub(&self, o: &Vec3Jet1) -> Vec3Jet1 {
        Vec3Jet1([
            &self.0[0] - &o.0[0],
            &self.0[1] - &o.0[1],
            &self.0[2] - &o.0[2],
        ])
    }

    pub fn neg(&self) -> Vec3Jet1 {
        self.map(|c| c.scale(-1.0))
    }

    pub fn scale_jet(&self, s: &Jet1) -> Vec3Jet1 {
        self.map(|c| c.mul(s))
    }

    pub fn scale(&self, s: f64) -> Vec3Jet1 {
        self.map(|c| c.scale(s))
    }

    pub fn dot(&self, o: &Vec3Jet1) -> Jet1 {
        let mut acc = self.0[0].mul(&o.0[0]);
        acc = &acc + &self.0[1].mul(&o.0[1]);
        &acc + &self.0[2].mul(&o.0[2])
    }

    pub fn cross(&self, o: &Vec3Jet1) -> Vec3Jet1 {
        Vec3Jet1([
            &self.0[1].mul(&o.0[2]) - &self.0[2].mul(&o.0[1]),
            &self.0[2].mul(&o.0[0]) - &self.0[0].mul(&o.0[2]),
            &self.0[0].mul(&o.0[1]) - &self.0[1].mul(&o.0[0]),
        ])
    }

    pub fn norm_sq(&self) -> Jet1 {
        self.dot(self)
    }

    pub fn norm(&self) -> Result<Jet1> {
        self.norm_sq()
            .sqrt()
            .map_err(|_| Error::Degenerate("norm of a vanishing vector jet".into()))
    }

    pub fn unit(&self) -> Result<Vec3Jet1> {
        let n = self.norm()?;
        Ok(Vec3Jet1([
            self.0[0].div(&n)?,
            self.0[1].div(&n)?,
            self.0[2].div(&n)?,
        ]))
    }

    pub fn derivative_jet(&self) -> Vec3Jet1 {
        self.map(|c| c.derivative_jet())
    }

    pub fn divide_by_parameter(&self) -> Result<Vec3Jet1> {
        Ok(Vec3Jet1([
            self.0[0].divide_by_parameter()?,
            self.0[1].divide_by_parameter()?,
            self.0[2].divide_by_parameter()?,
        ]))
    }

    pub fn div(&self, d: &Jet1) -> Result<Vec3Jet1> {
        Ok(Vec3Jet1([
            self.0[0].div(d)?,
            self.0[1].div(d)?,
            self.0[2].div(d)?,
        ]))
    }

    pub fn truncated(&self, degree: usize) -> Vec3Jet1 {
        self.map(|c| c.truncated(degree))
    }

    /// Component values at the base parameter.
    pub fn values(&self) -> [f64; 3] {
        [self.0[0].value(), self.0[1].value(), self.0[2].value()]
    }

    /// k-th derivative vector at the base parameter.
    pub fn derivative(&self, k: usize) -> [f64; 3] {
        [
            self.0[0].derivative(k),
            self.0[1].derivative(k),
            self.0[2].derivative(k),
        ]
    }

    pub fn eval(&self, t: f64) -> [f64; 3] {
        [self.0[0].eval(t), self.0[1].eval(t), self.0[2].eval(t)]
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.0
            .iter()
            .map(|c| c.max_abs_coeff())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }
}

/// Scalar triple product `det(a, b, c)` as a jet.
pub fn det3(a: &Vec3Jet1, b: &Vec3Jet1, c: &Vec3Jet1) -> Jet1 {
    a.dot(&b.cross(c))
}

impl Vec3Jet2 {
    pub fn new(x: Jet2, y: Jet2, z: Jet2) -> Vec3Jet2 {
        Vec3Jet2([x, y, z])
    }

    pub fn degree(&self) -> usize {
        self.0[0]
            .degree()
            .min(self.0[1].degree())
            .min(self.0[2].degree())
    }

    pub fn map<F: Fn(&Jet2) -> Jet2>(&self, f: F) -> Vec3Jet2 {
        Vec3Jet2([f(&self.0[0]), f(&self.0[1]), f(&self.0[2])])
    }

    pub fn add(&self, o: &Vec3Jet2) -> Vec3Jet2 {
        Vec3Jet2([
            self.0[0].add(&o.0[0]),
            self.0[1].add(&o.0[1]),
            self.0[2].add(&o.0[2]),
        ])
    }

    pub fn scale_jet(&self, s: &Jet2) -> Vec3Jet2 {
        self.map(|c| c.mul(s))
    }

    pub fn dot(&self, o: &Vec3Jet2) -> Jet2 {
        self.0[0]
            .mul(&o.0[0])
            .add(&self.0[1].mul(&o.0[1]))
            .add(&self.0[2].mul(&o.0[2]))
    }

    pub fn cross(&self, o: &Vec3Jet2) -> Vec3Jet2 {
        Vec3Jet2([
            self.0[1].mul(&o.0[2]).sub(&self.0[2].mul(&o.0[1])),
            self.0[2].mul(&o.0[0]).sub(&self.0[0].mul(&o.0[2])),
            self.0[0].mul(&o.0[1]).sub(&self.0[1].mul(&o.0[0])),
        ])
    }

    pub fn unit(&self) -> Result<Vec3Jet2> {
        let n = self
            .dot(self)
            .sqrt()
            .map_err(|_| Error::Degenerate("norm of a vanishing vector jet".into()))?;
        Ok(Vec3Jet2([
            self.0[0].div(&n)?,
            self.0[1].div(&n)?,
            self.0[2].div(&n)?,
        ]))
    }

    pub fn partial_u(&self) -> Vec3Jet2 {
        self.map(|c| c.partial_u())
    }

    pub fn partial_v(&self) -> Vec3Jet2 {
        self.map(|c| c.partial_v())
    }

    pub fn v_derivative_on_axis(&self, j0: usize) -> Vec3Jet1 {
        Vec3Jet1([
            self.0[0].v_derivative_on_axis(j0),
            self.0[1].v_derivative_on_axis(j0),
            self.0[2].v_derivative_on_axis(j0),
        ])
    }

    pub fn divide_by_v(&self) -> Result<Vec3Jet2> {
        Ok(Vec3Jet2([
            self.0[0].divide_by_v()?,
            self.0[1].divide_by_v()?,
            self.0[2].divide_by_v()?,
        ]))
    }

    pub fn compose_with_curve(&self, g1: &Jet1, g2: &Jet1) -> Result<Vec3Jet1> {
        Ok(Vec3Jet1([
            self.0[0].compose_with_curve(g1, g2)?,
            self.0[1].compose_with_curve(g1, g2)?,
            self.0[2].compose_with_curve(g1, g2)?,
        ]))
    }

    /// Component values at the base point.
    pub fn values(&self) -> [f64; 3] {
        [self.0[0].value(), self.0[1].value(), self.0[2].value()]
    }

    pub fn eval(&self, u: f64, v: f64) -> [f64; 3] {
        [
            self.0[0].eval(u, v),
            self.0[1].eval(u, v),
            self.0[2].eval(u, v),
        ]
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_projection_surface() {
        // F = (u, v, 0) with curve (t, t^2) gives (t, t^2, 0)
        let base = (0.0, 0.0);
        let f = Vec3Jet2::new(
            Jet2::variable_u(base, 5),
            Jet2::variable_v(base, 5),
            Jet2::zero(base, 5),
        );
        let g1 = Jet1::variable(0.0, 5);
        let mut g2 = Jet1::zero(5);
        g2 = &g2 + &Jet1::new(vec![0.0, 0.0, 1.0, 0.0, 0.0, 0.0]);
        let composed = f.compose_with_curve(&g1, &g2).unwrap();
        assert_eq!(composed.x().coeff(1), 1.0);
        assert_eq!(composed.y().coeff(2), 1.0);
        assert_eq!(composed.z().max_abs_coeff(), 0.0);
    }

    #[test]
    fn compose_constant_curve() {
        let base = (0.25, -1.0);
        let f = Vec3Jet2::new(
            Jet2::variable_u(base, 4),
            Jet2::variable_v(base, 4),
            Jet2::variable_u(base, 4).mul(&Jet2::variable_v(base, 4)),
        );
        let g1 = Jet1::constant(0.25, 6);
        let g2 = Jet1::constant(-1.0, 6);
        let composed = f.compose_with_curve(&g1, &g2).unwrap();
        assert_eq!(composed.values(), [0.25, -1.0, -0.25]);
        assert!(composed.derivative_jet().max_abs_coeff() < 1e-15);
    }

    #[test]
    fn compose_rejects_base_mismatch() {
        let base = (0.0, 0.0);
        let f = Vec3Jet2::new(
            Jet2::variable_u(base, 3),
            Jet2::variable_v(base, 3),
            Jet2::zero(base, 3),
        );
        let g1 = Jet1::constant(0.5, 3);
        let g2 = Jet1::constant(0.0, 3);
        assert!(f.compose_with_curve(&g1, &g2).is_err());
    }

    #[test]
    fn cross_and_triple_product() {
        let e1 = Vec3Jet1::constant([1.0, 0.0, 0.0], 2);
        let e2 = Vec3Jet1::constant([0.0, 1.0, 0.0], 2);
        let e3 = Vec3Jet1::constant([0.0, 0.0, 1.0], 2);
        assert_eq!(e1.cross(&e2).values(), [0.0, 0.0, 1.0]);
        assert_eq!(det3(&e1, &e2, &e3).value(), 1.0);
    }
}
