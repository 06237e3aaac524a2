//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are stored sorted in descending order under the ring's monomial order,
//! with no zero coefficients, so two polynomials over the same ring are equal
//! exactly when their term vectors are equal.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::ring::{Ring, RingContext};

#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Exact `a op b`; fails when the operands live in different rings.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    if !same_ring(&a.ring, &b.ring) {
        return Err(Error::RingMismatch);
    }
    Ok(match op {
        ArithOp::Add => a.add_impl(b, false),
        ArithOp::Sub => a.add_impl(b, true),
        ArithOp::Mul => a.mul_impl(b),
    })
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Polynomial {
        Polynomial::from_terms(ring, vec![(ring.one_monomial(), c)])
    }

    pub fn from_i64(ring: &Ring, n: i64) -> Polynomial {
        Polynomial::constant(ring, ring.field().from_i64(n))
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::from_i64(ring, 1)
    }

    pub fn var(ring: &Ring, i: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), i), ring.field().one())],
        }
    }

    pub fn var_named(ring: &Ring, name: &str) -> Option<Polynomial> {
        ring.var_index(name).map(|i| Polynomial::var(ring, i))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Coeff) -> Polynomial {
        Polynomial::from_terms(ring, vec![(m, c)])
    }

    /// Normalizes arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        let order = ring.order();
        let field = ring.field();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if field.is_zero(lc) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if field.is_zero(lc) {
                out.pop();
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Terms must already be strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn leading_term(&self) -> Option<Polynomial> {
        self.terms.first().map(|t| Polynomial { ring: self.ring.clone(), terms: vec![t.clone()] })
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn constant_term(&self) -> Coeff {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.ring.field().zero(),
        }
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        let order = self.ring.order();
        match self.terms.binary_search_by(|(t, _)| order.cmp(m, t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.field().zero(),
        }
    }

    /// Whether `x_i` occurs in some term.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponents()[i] > 0)
    }

    fn add_impl(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let conv = |c: &Coeff| if subtract { field.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), conv(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { field.sub(&a[i].1, &b[j].1) } else { field.add(&a[i].1, &b[j].1) };
                    if !field.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), conv(c))));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let field = self.ring.field();
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                prods.push((m1.mul(m2), field.mul(c1, c2)));
            }
        }
        Polynomial::from_terms(&self.ring, prods)
    }

    /// `self * c * m`. Multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, d)| (t.mul(m), field.mul(d, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&self.ring.one_monomial(), c)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divide by the leading coefficient (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.ring.field().inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Move to a compatible ring (same variables and field), re-sorting terms.
    pub fn in_ring(&self, ring: &Ring) -> Polynomial {
        assert!(self.ring.compatible(ring), "incompatible rings");
        if self.ring.order() == ring.order() {
            return Polynomial { ring: ring.clone(), terms: self.terms.clone() };
        }
        Polynomial::from_terms(ring, self.terms.clone())
    }

    /// Rename variables into `target`: variable `i` of this ring becomes
    /// variable `map[i]` of the target (same field).
    pub(crate) fn map_vars(&self, target: &Ring, map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = Monomial::one(n);
                for (i, &x) in m.exponents().iter().enumerate() {
                    e.exponents_mut()[map[i]] += x;
                }
                (e, c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    pub fn evaluate(&self, point: &[Coeff]) -> Coeff {
        let field = self.ring.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, x) in m.exponents().iter().zip(point) {
                if *e > 0 {
                    t = field.mul(&t, &field.pow(x, *e));
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Replace variable `i` by `images[i]`; all images must share one ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::MissingAssignment(
                self.ring.vars().get(images.len()).cloned().unwrap_or_default(),
            ));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Err(Error::EmptyInput("substitution")),
        };
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(Error::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(&target)]; images.len()];
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Name-keyed substitution; every variable of the ring must be assigned.
    pub fn substitute_named(&self, assignment: &HashMap<String, Polynomial>) -> Result<Polynomial> {
        let images = self
            .ring
            .vars()
            .iter()
            .map(|v| assignment.get(v).cloned().ok_or_else(|| Error::MissingAssignment(v.clone())))
            .collect::<Result<Vec<_>>>()?;
        self.substitute(&images)
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponents()[i] > 0)
            .map(|(m, c)| {
                let e = m.exponents()[i];
                let mut d = m.clone();
                d.exponents_mut()[i] -= 1;
                (d, field.mul(c, &field.from_i64(e as i64)))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// `self / f` when `f` divides `self` exactly.
    pub fn div_exact(&self, f: &Polynomial) -> Option<Polynomial> {
        let field = self.ring.field();
        let (lm, lc) = f.terms.first()?;
        let lc_inv = field.inv(lc)?;
        let mut rest = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rest.terms.first() {
            let q = m.div(lm)?;
            let qc = field.mul(c, &lc_inv);
            rest = rest.add_impl(&f.mul_term(&q, &qc), true);
            quot.push((q, qc));
        }
        Some(Polynomial::from_sorted(&self.ring, quot))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        poly_arith(self, rhs, ArithOp::Add).expect("polynomials from different rings")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        poly_arith(self, rhs, ArithOp::Sub).expect("polynomials from different rings")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        poly_arith(self, rhs, ArithOp::Mul).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let field = self.ring.field();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

pub(crate) fn fmt_monomial(ring: &RingContext, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.vars()[i].clone()),
            _ => parts.push(format!("{}^{}", ring.vars()[i], e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = field.is_negative(c);
            let abs = if negative { field.neg(c) } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if field.is_one(&abs) {
                write!(f, "{}", fmt_monomial(&self.ring, m))?;
            } else {
                write!(f, "{}*{}", abs, fmt_monomial(&self.ring, m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use crate::ring::make_ring;

    fn qring() -> Ring {
        make_ring(&["x", "y", "z", "u"], Field::Rationals, MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = qring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p, &(&x * &x) - &(&y * &y));
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn cancellation() {
        let r = qring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let a = &(&x * &x) + &(&x * &y);
        let b = -&(&x * &x);
        assert_eq!((&a + &b).to_string(), "x*y");
    }

    #[test]
    fn frobenius_mod_three() {
        let r = make_ring(&["x"], Field::Prime(3), MonomialOrder::Lex).unwrap();
        let x = Polynomial::var(&r, 0);
        let p = (&x + &Polynomial::one(&r)).pow(3);
        assert_eq!(p, &x.pow(3) + &Polynomial::one(&r));
    }

    #[test]
    fn mixed_rings_rejected() {
        let r1 = qring();
        let r2 = make_ring(&["x", "y"], Field::Rationals, MonomialOrder::GrevLex).unwrap();
        let e = poly_arith(&Polynomial::var(&r1, 0), &Polynomial::var(&r2, 0), ArithOp::Add);
        assert_eq!(e, Err(Error::RingMismatch));
    }

    #[test]
    fn dehomogenize_and_shift() {
        let r = qring();
        let v: Vec<Polynomial> = (0..4).map(|i| Polynomial::var(&r, i)).collect();
        let f = &(&v[2] * &v[0]) + &(&v[3] * &v[1]);
        let mut images = v.clone();
        images[3] = Polynomial::one(&r);
        assert_eq!(f.substitute(&images).unwrap(), &(&v[2] * &v[0]) + &v[1]);

        let g = &v[0] * &v[0];
        let mut images = v.clone();
        images[0] = &v[0] + &v[1];
        let two = Polynomial::from_i64(&r, 2);
        let expected = &(&(&v[0] * &v[0]) + &(&two * &(&v[0] * &v[1]))) + &(&v[1] * &v[1]);
        assert_eq!(g.substitute(&images).unwrap(), expected);

        let mut named = HashMap::new();
        named.insert("x".to_string(), v[0].clone());
        assert_eq!(f.substitute_named(&named), Err(Error::MissingAssignment("y".into())));
    }

    #[test]
    fn exact_division_and_derivative() {
        let r = qring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = &x + &y;
        let g = &(&f * &f) * &x;
        assert_eq!(g.div_exact(&f).unwrap(), &f * &x);
        assert!(x.div_exact(&f).is_none());
        assert_eq!(g.derivative(1), &(&f * &x) + &(&f * &x));
    }
}
