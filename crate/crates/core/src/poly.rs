//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::Q;

/// Polynomial in a fixed number of variables; terms map exponent vectors to
/// nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultivariatePolynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl MultivariatePolynomial {
    pub fn zero(vars: usize) -> Self {
        MultivariatePolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Q) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Q::one())
    }

    /// The monomial x_i.
    pub fn variable(vars: usize, i: usize) -> Self {
        assert!(i < vars);
        let mut exp = vec![0; vars];
        exp[i] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(exp, Q::one());
        p
    }

    /// Linear form c . x from rational coefficients.
    pub fn linear_form(coeffs: &[Q]) -> Self {
        let vars = coeffs.len();
        let mut p = Self::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut exp = vec![0; vars];
                exp[i] = 1;
                p.terms.insert(exp, c.clone());
            }
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn coefficient(&self, exp: &[u32]) -> Q {
        self.terms.get(exp).cloned().unwrap_or_else(Q::zero)
    }

    fn insert_term(&mut self, exp: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.vars, other.vars);
        for (exp, c) in &other.terms {
            self.insert_term(exp.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        MultivariatePolynomial {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x * c))
                .collect(),
        }
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_term(exp, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.vars);
        for _ in 0..e {
            acc = acc.mul_poly(self);
        }
        acc
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        assert_eq!(x.len(), self.vars);
        let mut acc = Q::zero();
        for (exp, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &e) in x.iter().zip(exp) {
                for _ in 0..e {
                    t *= xi;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `x_j = consts[j] + sum_i mat[j][i] * y_i`, returning a
    /// polynomial in `out_vars` variables y.
    pub fn substitute_affine(&self, consts: &[Q], mat: &[Vec<Q>], out_vars: usize) -> Self {
        assert_eq!(consts.len(), self.vars);
        assert_eq!(mat.len(), self.vars);
        // Power cache per input variable, built lazily.
        let mut powers: Vec<Vec<MultivariatePolynomial>> = (0..self.vars)
            .map(|_| vec![Self::one(out_vars)])
            .collect();
        let affine: Vec<MultivariatePolynomial> = (0..self.vars)
            .map(|j| {
                let mut p = Self::constant(out_vars, consts[j].clone());
                p.add_assign(&Self::linear_form(&mat[j]));
                debug_assert_eq!(mat[j].len(), out_vars);
                p
            })
            .collect();
        let mut out = Self::zero(out_vars);
        for (exp, c) in &self.terms {
            let mut term = Self::constant(out_vars, c.clone());
            for (j, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[j].len() <= e as usize {
                    let next = powers[j].last().unwrap().mul_poly(&affine[j]);
                    powers[j].push(next);
                }
                term = term.mul_poly(&powers[j][e as usize]);
            }
            out.add_assign(&term);
        }
        out
    }
}

impl Add for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;
    fn add(self, rhs: &MultivariatePolynomial) -> MultivariatePolynomial {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;
    fn sub(self, rhs: &MultivariatePolynomial) -> MultivariatePolynomial {
        let mut out = self.clone();
        out.add_assign(&-rhs);
        out
    }
}

impl Mul for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;
    fn mul(self, rhs: &MultivariatePolynomial) -> MultivariatePolynomial {
        self.mul_poly(rhs)
    }
}

impl Neg for &MultivariatePolynomial {
    type Output = MultivariatePolynomial;
    fn neg(self) -> MultivariatePolynomial {
        self.scale(&-Q::one())
    }
}
