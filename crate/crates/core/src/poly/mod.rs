//! Exact multivariate polynomials with rational coefficients.
//!
//! A [`Polynomial`] is a sparse list of terms kept strictly descending in its
//! [`MonomialOrder`], with no zero coefficients and no repeated monomials.
//! Every constructor and arithmetic operation re-establishes that canonical
//! form, so structural equality is mathematical equality.

mod order;
mod parse;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;
pub use order::MonomialOrder;
pub use parse::parse_poly;

/// Errors raised by ring construction, parsing and polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidName(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
}

/// Builds a rational from an integer numerator and denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Builds an integral rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub(crate) fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An ordered list of distinct variable names.
#[derive(Clone)]
pub struct Ring(Arc<[String]>);

impl Ring {
    pub fn new<I, S>(names: I) -> Result<Ring, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(PolyError::InvalidName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(PolyError::DuplicateVariable(name.clone()));
            }
        }
        Ok(Ring(names.into()))
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    /// A variable name not already used by the ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}_{i}"))
            .find(|n| self.index_of(n).is_none())
            .expect("unbounded search")
    }

    /// The ring with `names` placed before the existing variables.
    pub fn prepend(&self, names: &[String]) -> Result<Ring, PolyError> {
        Ring::new(names.iter().cloned().chain(self.0.iter().cloned()))
    }

    /// The ring with `names` placed after the existing variables.
    pub fn append(&self, names: &[String]) -> Result<Ring, PolyError> {
        Ring::new(self.0.iter().cloned().chain(names.iter().cloned()))
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", &self.0[..])
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.0.join(", "))
    }
}

/// Exponent vector; its length is the arity of the owning ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(arity: usize) -> Monomial {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, index: usize) -> Monomial {
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Monomial {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of monomials.
    ///
    /// Panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`; the caller guarantees `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables occurring in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    fn pow(&self, n: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|e| e.checked_mul(n).expect("exponent overflow"))
                .collect(),
        )
    }
}

/// A monomial with its coefficient.
pub type Term = (Monomial, Rational);

/// A polynomial in canonical form: terms strictly descending in `order`,
/// nonzero coefficients, no duplicate monomials.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            order: MonomialOrder::default(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ring.arity()), c));
        }
        p
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Polynomial, PolyError> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::var_index(ring, i))
    }

    pub fn var_index(ring: &Ring, index: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            order: MonomialOrder::default(),
            terms: vec![(Monomial::var(ring.arity(), index), Rational::one())],
        }
    }

    /// Canonicalizes an arbitrary term list: merges duplicates, drops zeros,
    /// sorts descending.
    pub fn from_terms(ring: &Ring, order: MonomialOrder, terms: Vec<Term>) -> Polynomial {
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.0.len(), ring.arity(), "monomial arity mismatch");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Polynomial::from_map(ring, order, acc)
    }

    fn from_map(ring: &Ring, order: MonomialOrder, acc: HashMap<Monomial, Rational>) -> Polynomial {
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            order,
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Indices of variables occurring in some term.
    pub fn variables_used(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.arity()];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        (0..used.len()).filter(|&i| used[i]).collect()
    }

    /// The same polynomial sorted in another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: self.ring.clone(),
            order,
            terms,
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring).with_order(self.order));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Ok(Polynomial::from_map(&self.ring, self.order, acc))
    }

    /// Merge of two sorted term lists; `other` is re-sorted if its order differs.
    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let other = other.with_order(self.order);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (m, c) = b.next().unwrap();
                    out.push((m.clone(), if negate { -c } else { c.clone() }));
                }
                (Some((ma, _)), Some((mb, _))) => match self.order.cmp(ma, mb) {
                    std::cmp::Ordering::Greater => out.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Less => {
                        let (m, c) = b.next().unwrap();
                        out.push((m.clone(), if negate { -c } else { c.clone() }));
                    }
                    std::cmp::Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = if negate { ca - cb } else { ca + cb };
                        if !c.is_zero() {
                            out.push((m.clone(), c));
                        }
                    }
                },
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: out,
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        if n == 0 {
            return Polynomial::one(&self.ring).with_order(self.order);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Polynomial {
                ring: self.ring.clone(),
                order: self.order,
                terms: vec![(m.pow(n), num_traits::pow(c.clone(), n as usize))],
            };
        }
        let mut result: Option<Polynomial> = None;
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => &r * &base,
                });
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result.expect("n > 0")
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring).with_order(self.order);
        }
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Product with a single term; the order is preserved because monomial
    /// orders are multiplicative.
    pub fn mul_term(&self, mono: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring).with_order(self.order);
        }
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// `self -= c * mono * g`, in place. `g` must share ring and order.
    pub(crate) fn sub_mul_term(&mut self, c: &Rational, mono: &Monomial, g: &Polynomial) {
        debug_assert_eq!(self.order, g.order);
        let order = self.order;
        let old = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(old.len() + g.terms.len());
        let mut a = old.into_iter().peekable();
        let mut b = g.terms.iter().map(|(m, x)| (m.mul(mono), x * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => std::cmp::Ordering::Greater,
                (None, Some(_)) => std::cmp::Ordering::Less,
                (Some((ma, _)), Some((mb, _))) => order.cmp(ma, mb),
            };
            match ord {
                std::cmp::Ordering::Greater => out.push(a.next().unwrap()),
                std::cmp::Ordering::Less => {
                    let (m, x) = b.next().unwrap();
                    out.push((m, -x));
                }
                std::cmp::Ordering::Equal => {
                    let (m, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let d = x - y;
                    if !d.is_zero() {
                        out.push((m, d));
                    }
                }
            }
        }
        self.terms = out;
    }

    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub(crate) fn from_sorted_terms(ring: &Ring, order: MonomialOrder, terms: Vec<Term>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            order,
            terms,
        }
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial, PolyError> {
        let i = self
            .ring
            .index_of(var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        Ok(self.derivative_index(i))
    }

    pub fn derivative_index(&self, i: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[i] > 0)
            .map(|(m, c)| {
                let mut e = m.0.clone();
                let k = e[i];
                e[i] -= 1;
                (Monomial(e), c * Rational::from_integer(k.into()))
            })
            .collect();
        // Monomial orders are cancellative, so dividing every surviving term
        // by the same variable keeps them sorted.
        Polynomial::from_sorted_terms(&self.ring, self.order, terms)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.ring.arity() {
            return Err(PolyError::ArityMismatch {
                expected: self.ring.arity(),
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                    if v.is_zero() {
                        break;
                    }
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Substitutes `subs[i]` for the i-th variable; all substitutes share a
    /// target ring.
    pub fn compose(&self, subs: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if subs.len() != self.ring.arity() {
            return Err(PolyError::ArityMismatch {
                expected: self.ring.arity(),
                got: subs.len(),
            });
        }
        let target = match subs.first() {
            Some(s) => s.ring.clone(),
            None => {
                return Ok(Polynomial::constant(
                    &Ring::new(Vec::<String>::new())?,
                    self.constant_term(),
                ))
            }
        };
        if subs.iter().any(|s| s.ring != target) {
            return Err(PolyError::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); subs.len()];
        let mut total = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() < e as usize {
                    let next = match cache.last() {
                        None => subs[i].clone(),
                        Some(last) => last * &subs[i],
                    };
                    cache.push(next);
                }
                t = &t * &cache[e as usize - 1];
            }
            total = &total + &t;
        }
        Ok(total)
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `index_map[i]` of the target ring.
    pub fn map_into(&self, target: &Ring, index_map: &[usize]) -> Polynomial {
        assert_eq!(index_map.len(), self.ring.arity());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; target.arity()];
                for (i, &x) in m.0.iter().enumerate() {
                    e[index_map[i]] += x;
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, self.order, terms)
    }

    /// Inverse of [`Polynomial::map_into`]: `index_map[j]` is the position in
    /// `target` of variable `j` of `self`, or `None` if the variable must not
    /// occur. Returns `None` when a dropped variable occurs.
    pub fn restrict_to(&self, target: &Ring, index_map: &[Option<usize>]) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.arity()];
            for (j, &x) in m.0.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                e[index_map[j]?] += x;
            }
            terms.push((Monomial(e), c.clone()));
        }
        Some(Polynomial::from_terms(target, self.order, terms))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let divisor = divisor.with_order(self.order);
        let (lm, lc) = divisor.leading_term().cloned().expect("nonzero");
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.leading_term().cloned() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = m.div(&lm);
            let qc = &c / &lc;
            rem.sub_mul_term(&qc, &qm, &divisor);
            quotient.push((qm, qc));
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: quotient,
        })
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Polynomial) -> bool {
        if self.ring != other.ring || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Canonical text form; [`parse_poly`] reads it back to an equal polynomial.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(a.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.0[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.0[i], e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl<'a> $trait<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;

            /// Panics if the operands live in different rings.
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                self.$inner(rhs).expect("polynomials belong to different rings")
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}
