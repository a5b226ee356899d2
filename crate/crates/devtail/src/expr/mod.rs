//! A small analytic expression language for surface, normal and curve data.
//!
//! Grammar (left associative, `^` binds tightest, integer exponents only):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | base ('^' integer)?
//! base   := number | variable | function '(' expr ')' | '(' expr ')'
//! ```
//!
//! Variables are `u`, `v`, `t`; functions are `sin cos tan exp log sqrt`.

mod parse;
mod spec_file;

pub use parse::parse_expr;
pub use spec_file::{parse_spec, NormalSpec, SurfaceSpec};

use crate::error::{Error, Result};
use crate::jets::{Jet1, Jet2};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    U,
    V,
    T,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::U => "u",
            Var::V => "v",
            Var::T => "t",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "exp" => Func::Exp,
            "log" => Func::Log,
            "sqrt" => Func::Sqrt,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Expression tree produced by [`parse_expr`].
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var(Var),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Call(Func, Box<Expr>),
}

/// Values an expression can be evaluated over.
pub trait JetValue: Sized + Clone {
    fn constant_like(template: &Self, c: f64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn powi(&self, n: i32) -> Result<Self>;
    fn call(&self, f: Func) -> Result<Self>;
}

impl JetValue for Jet1 {
    fn constant_like(template: &Self, c: f64) -> Self {
        Jet1::constant(c, template.degree())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        Jet1::mul(self, o)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        Jet1::div(self, o)
    }
    fn neg(&self) -> Self {
        self.scale(-1.0)
    }
    fn powi(&self, n: i32) -> Result<Self> {
        Jet1::powi(self, n)
    }
    fn call(&self, f: Func) -> Result<Self> {
        match f {
            Func::Sin => Ok(self.sin()),
            Func::Cos => Ok(self.cos()),
            Func::Tan => self.tan(),
            Func::Exp => Ok(self.exp()),
            Func::Log => self.ln(),
            Func::Sqrt => self.sqrt(),
        }
    }
}

impl JetValue for Jet2 {
    fn constant_like(template: &Self, c: f64) -> Self {
        Jet2::constant(c, template.base(), template.degree())
    }
    fn add(&self, o: &Self) -> Self {
        Jet2::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Jet2::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Jet2::mul(self, o)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        Jet2::div(self, o)
    }
    fn neg(&self) -> Self {
        Jet2::neg(self)
    }
    fn powi(&self, n: i32) -> Result<Self> {
        Jet2::powi(self, n)
    }
    fn call(&self, f: Func) -> Result<Self> {
        match f {
            Func::Sin => Ok(self.sin()),
            Func::Cos => Ok(self.cos()),
            Func::Tan => self.tan(),
            Func::Exp => Ok(self.exp()),
            Func::Log => self.ln(),
            Func::Sqrt => self.sqrt(),
        }
    }
}

impl JetValue for f64 {
    fn constant_like(_template: &Self, c: f64) -> Self {
        c
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Result<Self> {
        if o.abs() <= crate::tolerances::DIV_MIN_ABS {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(self / o)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn powi(&self, n: i32) -> Result<Self> {
        Ok(f64::powi(*self, n))
    }
    fn call(&self, f: Func) -> Result<Self> {
        let out = match f {
            Func::Sin => self.sin(),
            Func::Cos => self.cos(),
            Func::Tan => self.tan(),
            Func::Exp => self.exp(),
            Func::Log => {
                if *self <= 0.0 {
                    return Err(Error::Domain("log of non-positive value".into()));
                }
                self.ln()
            }
            Func::Sqrt => {
                if *self <= 0.0 {
                    return Err(Error::Domain("sqrt of non-positive value".into()));
                }
                self.sqrt()
            }
        };
        Ok(out)
    }
}

/// Variable bindings for evaluation; unbound variables are an error.
#[derive(Debug, Clone, Default)]
pub struct Bindings<T> {
    pub u: Option<T>,
    pub v: Option<T>,
    pub t: Option<T>,
}

impl<T: Clone> Bindings<T> {
    pub fn uv(u: T, v: T) -> Bindings<T> {
        Bindings {
            u: Some(u),
            v: Some(v),
            t: None,
        }
    }

    pub fn t(t: T) -> Bindings<T> {
        Bindings {
            u: None,
            v: None,
            t: Some(t),
        }
    }

    fn get(&self, var: Var) -> Result<&T> {
        let slot = match var {
            Var::U => &self.u,
            Var::V => &self.v,
            Var::T => &self.t,
        };
        slot.as_ref()
            .ok_or_else(|| Error::Usage(format!("unbound variable '{}'", var.name())))
    }

    fn any(&self) -> Result<&T> {
        self.u
            .as_ref()
            .or(self.v.as_ref())
            .or(self.t.as_ref())
            .ok_or_else(|| Error::Usage("no variables bound".into()))
    }
}

/// Recursive jet evaluation of an expression tree.
pub fn eval_ast<T: JetValue>(ast: &Expr, bindings: &Bindings<T>) -> Result<T> {
    match ast {
        Expr::Num(c) => Ok(T::constant_like(bindings.any()?, *c)),
        Expr::Var(var) => Ok(bindings.get(*var)?.clone()),
        Expr::Neg(inner) => Ok(eval_ast(inner, bindings)?.neg()),
        Expr::Bin(op, lhs, rhs) => {
            let a = eval_ast(lhs, bindings)?;
            let b = eval_ast(rhs, bindings)?;
            match op {
                BinOp::Add => Ok(a.add(&b)),
                BinOp::Sub => Ok(a.sub(&b)),
                BinOp::Mul => Ok(a.mul(&b)),
                BinOp::Div => a.div(&b),
            }
        }
        Expr::Pow(inner, n) => eval_ast(inner, bindings)?.powi(*n),
        Expr::Call(f, inner) => eval_ast(inner, bindings)?.call(*f),
    }
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
            Expr::Bin(BinOp::Mul | BinOp::Div, ..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, parent: u8) -> fmt::Result {
            if e.precedence() < parent {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        }
        match self {
            Expr::Num(c) => write!(f, "{c}"),
            Expr::Var(v) => write!(f, "{}", v.name()),
            Expr::Neg(inner) => {
                write!(f, "-")?;
                wrap(f, inner, 3)
            }
            Expr::Bin(op, lhs, rhs) => {
                let (sym, prec) = match op {
                    BinOp::Add => ("+", 1),
                    BinOp::Sub => ("-", 1),
                    BinOp::Mul => ("*", 2),
                    BinOp::Div => ("/", 2),
                };
                wrap(f, lhs, prec)?;
                write!(f, " {sym} ")?;
                // right operand of - and / needs strictly higher precedence
                wrap(f, rhs, prec + u8::from(matches!(op, BinOp::Sub | BinOp::Div)))
            }
            Expr::Pow(inner, n) => {
                wrap(f, inner, 5)?;
                write!(f, "^{n}")
            }
            Expr::Call(func, inner) => write!(f, "{}({})", func.name(), inner),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_degree_zero_matches_f64() {
        let ast = parse_expr("sin(t)^2 + cos(t)^2").unwrap();
        for t0 in [-0.7, 0.0, 1.3] {
            let j = eval_ast(&ast, &Bindings::t(Jet1::variable(t0, 6))).unwrap();
            assert!((j.value() - 1.0).abs() < 1e-13);
            for k in 1..=6 {
                assert!(j.coeff(k).abs() < 1e-13);
            }
            let x: f64 = eval_ast(&ast, &Bindings::t(t0)).unwrap();
            assert!((x - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn linear_sum_over_jet2() {
        let ast = parse_expr("u + v").unwrap();
        let base = (0.4, -0.8);
        let b = Bindings::uv(Jet2::variable_u(base, 3), Jet2::variable_v(base, 3));
        let j = eval_ast(&ast, &b).unwrap();
        assert!((j.value() - (0.4 - 0.8)).abs() < 1e-15);
        assert_eq!(j.coeff(1, 0), 1.0);
        assert_eq!(j.coeff(0, 1), 1.0);
    }

    #[test]
    fn swallowtail_first_component_coefficients() {
        let ast = parse_expr("v + u^2/2 - u^2*v/2 - u^4/8").unwrap();
        let base = (0.0, 0.0);
        let b = Bindings::uv(Jet2::variable_u(base, 6), Jet2::variable_v(base, 6));
        let j = eval_ast(&ast, &b).unwrap();
        assert_eq!(j.coeff(0, 1), 1.0);
        assert_eq!(j.coeff(2, 0), 0.5);
        assert_eq!(j.coeff(2, 1), -0.5);
        assert_eq!(j.coeff(4, 0), -0.125);
        let mut nonzero = 0;
        for i in 0..=6 {
            for k in 0..=6 - i {
                if j.coeff(i, k) != 0.0 {
                    nonzero += 1;
                }
            }
        }
        assert_eq!(nonzero, 4);
    }

    #[test]
    fn unbound_variable_is_an_error() {
        let ast = parse_expr("u + t").unwrap();
        let b = Bindings::t(Jet1::variable(0.0, 3));
        assert!(matches!(eval_ast(&ast, &b), Err(Error::Usage(_))));
    }

    #[test]
    fn display_parse_roundtrip_is_idempotent() {
        for src in [
            "u^2/2 - v",
            "4*v^3 + 2*u*v",
            "-(u + v)^3",
            "sin(u)*cos(v) - tan(u/(1 + v^2))",
            "-u^2",
            "1 - 2 - 3",
            "2/3/4",
        ] {
            let once = parse_expr(src).unwrap();
            let printed = once.to_string();
            let twice = parse_expr(&printed).unwrap();
            assert_eq!(once, twice, "{src} -> {printed}");
            assert_eq!(printed, twice.to_string());
        }
    }
}
