//! Exact univariate Laurent polynomials over the rationals and their
//! fraction field.
//!
//! Every invariant value in the crate lives here: bracket and Jones values
//! are polynomials in `A`, Alexander values are polynomials in `t`, and
//! tangle-set coefficients are rational functions in whichever variable the
//! base invariant uses.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Coeff = BigRational;

/// The indeterminate a value is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Bracket / Jones variable.
    A,
    /// Alexander variable.
    T,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::A => 'A',
            Var::T => 't',
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("cannot combine a polynomial in {0} with a polynomial in {1}")]
    VariableMismatch(char, char),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expected a Laurent polynomial, found the rational function {0}")]
    NotPolynomial(String),
}

/// Sparse Laurent polynomial with exact rational coefficients.
///
/// No stored coefficient is zero. Constants compare equal regardless of the
/// variable they were created with, and may be combined with either variable.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i32, Coeff>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.var == other.var || self.is_constant())
    }
}

impl Eq for LaurentPoly {}

impl Hash for LaurentPoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

fn unify(a: &LaurentPoly, b: &LaurentPoly) -> Result<Var, AlgebraError> {
    if a.var == b.var || b.is_constant() {
        Ok(a.var)
    } else if a.is_constant() {
        Ok(b.var)
    } else {
        Err(AlgebraError::VariableMismatch(a.var.symbol(), b.var.symbol()))
    }
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        Self { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Coeff::one())
    }

    pub fn constant(var: Var, c: Coeff) -> Self {
        Self::monomial(var, c, 0)
    }

    pub fn from_int(var: Var, c: i64) -> Self {
        Self::constant(var, Coeff::from_integer(BigInt::from(c)))
    }

    pub fn monomial(var: Var, c: Coeff, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { var, terms }
    }

    /// The indeterminate itself, `A` or `t`.
    pub fn indeterminate(var: Var) -> Self {
        Self::monomial(var, Coeff::one(), 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(var: Var, terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, Coeff)>,
    {
        let mut out = Self::zero(var);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// Integer-coefficient shorthand used heavily in tests and the catalog.
    pub fn from_ints(var: Var, terms: &[(i32, i64)]) -> Self {
        Self::from_terms(var, terms.iter().map(|&(e, c)| (e, Coeff::from_integer(c.into()))))
    }

    fn add_term(&mut self, exp: i32, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Coeff::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Coeff)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i32) -> Coeff {
        self.terms.get(&exp).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the lowest-degree term (zero for the zero polynomial).
    pub fn lowest_coeff(&self) -> Coeff {
        self.terms.values().next().cloned().unwrap_or_else(Coeff::zero)
    }

    /// Re-tags a polynomial with another variable. Only constants may change
    /// variable.
    pub fn with_var(mut self, var: Var) -> Result<Self, AlgebraError> {
        if self.var != var && !self.is_constant() {
            return Err(AlgebraError::VariableMismatch(self.var.symbol(), var.symbol()));
        }
        self.var = var;
        Ok(self)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        let mut out = Self { var: unify(self, other)?, terms: self.terms.clone() };
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(unify(self, other)?);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    fn neg_ref(&self) -> Self {
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.var);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `var -> var^-1`.
    pub fn reflect(&self) -> Self {
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Sum of the coefficients, i.e. the value at `var = 1`.
    pub fn eval_at_one(&self) -> Coeff {
        self.terms.values().fold(Coeff::zero(), |acc, c| acc + c)
    }

    /// Dense coefficient vector of `self * var^(-min_exp)`, lowest degree first.
    fn to_dense(&self) -> (i32, Vec<Coeff>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![Coeff::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_dense(var: Var, shift: i32, v: &[Coeff]) -> Self {
        Self::from_terms(var, v.iter().enumerate().map(|(i, c)| (i as i32 + shift, c.clone())))
    }

    /// Exact quotient in the Laurent ring, or `None` if `divisor` does not
    /// divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let var = unify(self, divisor).ok()?;
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(var));
        }
        let (sa, a) = self.to_dense();
        let (sb, b) = divisor.to_dense();
        let (q, r) = dense_divrem(&a, &b);
        if !r.is_empty() {
            return None;
        }
        Some(Self::from_dense(var, sa - sb, &q))
    }

    /// Greatest common divisor, normalised to minimum exponent 0 and lowest
    /// coefficient 1. `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self, AlgebraError> {
        let var = unify(a, b)?;
        let (_, da) = a.to_dense();
        let (_, db) = b.to_dense();
        let g = dense_gcd(da, db);
        let g = Self::from_dense(var, 0, &g);
        if g.is_zero() {
            return Ok(g);
        }
        let g = g.shift(-g.min_exp().unwrap());
        let lead = g.lowest_coeff();
        Ok(g.scale(&lead.recip()))
    }
}

fn trim(v: &mut Vec<Coeff>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_divrem(a: &[Coeff], b: &[Coeff]) -> (Vec<Coeff>, Vec<Coeff>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![Coeff::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let f = r.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            r[k + i] -= &f * c;
        }
        q[k] = f;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn dense_gcd(mut a: Vec<Coeff>, mut b: Vec<Coeff>) -> Vec<Coeff> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = dense_divrem(&a, &b);
        a = b;
        b = r;
    }
    a
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("mixed polynomial variables")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("mixed polynomial variables")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("mixed polynomial variables")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.neg_ref()
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.neg_ref()
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Coeff) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let x = self.var.symbol();
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write_coeff(f, &mag)?;
                continue;
            }
            if !mag.is_one() {
                write_coeff(f, &mag)?;
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{x}")?;
            } else {
                write!(f, "{x}^{e}")?;
            }
        }
        Ok(())
    }
}

/// An element of the fraction field, kept in canonical form: numerator and
/// denominator share no non-unit factor, the denominator has minimum exponent
/// 0, integer coefficients with content 1, and a positive lowest coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgebraError> {
        let var = unify(&num, &den)?;
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let num = num.with_var(var)?;
        let den = den.with_var(var)?;
        Ok(Self::canonical(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let var = p.var;
        Self { num: p, den: LaurentPoly::one(var) }
    }

    pub fn zero(var: Var) -> Self {
        Self::from_poly(LaurentPoly::zero(var))
    }

    pub fn one(var: Var) -> Self {
        Self::from_poly(LaurentPoly::one(var))
    }

    pub fn constant(var: Var, c: Coeff) -> Self {
        Self::from_poly(LaurentPoly::constant(var, c))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        let var = num.var;
        if num.is_zero() {
            return Self::zero(var);
        }
        let g = LaurentPoly::gcd(&num, &den).expect("variables already unified");
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let k = -den.min_exp().unwrap();
        let (num, den) = (num.shift(k), den.shift(k));

        let lcm = den.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let content = den
            .terms()
            .fold(BigInt::zero(), |acc, (_, c)| acc.gcd(&(c * Coeff::from_integer(lcm.clone())).to_integer()));
        let mut factor = Coeff::new(lcm, content);
        if den.lowest_coeff().is_negative() {
            factor = -factor;
        }
        Self { num: num.scale(&factor), den: den.scale(&factor) }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn var(&self) -> Var {
        if self.num.is_constant() {
            self.den.var
        } else {
            self.num.var
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The polynomial this value equals, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn into_poly(self) -> Result<LaurentPoly, AlgebraError> {
        if self.den.is_one() {
            Ok(self.num)
        } else {
            Err(AlgebraError::NotPolynomial(self.to_string()))
        }
    }

    pub fn with_var(self, var: Var) -> Result<Self, AlgebraError> {
        Ok(Self { num: self.num.with_var(var)?, den: self.den.with_var(var)? })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.den == other.den {
            let num = self.num.checked_add(&other.num)?;
            return Self::new(num, self.den.clone());
        }
        let num = self.num.checked_mul(&other.den)?.checked_add(&other.num.checked_mul(&self.den)?)?;
        Self::new(num, self.den.checked_mul(&other.den)?)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        Self::new(self.num.checked_mul(&other.num)?, self.den.checked_mul(&other.den)?)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Self::new(self.num.checked_mul(&other.den)?, self.den.checked_mul(&other.num)?)
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        Self::one(self.var()).checked_div(self)
    }

    pub fn pow(&self, n: i32) -> Result<Self, AlgebraError> {
        let p = Self::new(self.num.pow(n.unsigned_abs()), self.den.pow(n.unsigned_abs()))?;
        if n < 0 {
            p.recip()
        } else {
            Ok(p)
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<Self, AlgebraError> {
        Self::new(self.num.checked_mul(p)?, self.den.clone())
    }

    pub fn reflect(&self) -> Self {
        Self::new(self.num.reflect(), self.den.reflect()).expect("reflection keeps a nonzero denominator")
    }

    /// Parses the text grammar written by `Display`, plus parentheses and
    /// general `*`, `/`, `^` combinations.
    pub fn parse(text: &str, var: Var) -> Result<Self, AlgebraError> {
        let mut p = Parser { src: text.as_bytes(), pos: 0, var };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(v)
    }
}

impl LaurentPoly {
    pub fn parse(text: &str, var: Var) -> Result<Self, AlgebraError> {
        RationalFunction::parse(text, var)?.into_poly()
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_add(rhs).expect("mixed rational function variables")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_sub(rhs).expect("mixed rational function variables")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_mul(rhs).expect("mixed rational function variables")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    var: Var,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RationalFunction, AlgebraError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc.checked_add(&rhs)? } else { acc.checked_sub(&rhs)? };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction, AlgebraError> {
        let mut acc = self.factor()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.factor()?;
            acc = if op == b'*' {
                acc.checked_mul(&rhs)?
            } else {
                acc.checked_div(&rhs).map_err(|e| match e {
                    AlgebraError::DivisionByZero => AlgebraError::Parse { pos: at, msg: "division by zero".into() },
                    other => other,
                })?
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RationalFunction, AlgebraError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction, AlgebraError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let parens = self.peek() == Some(b'(');
        if parens {
            self.pos += 1;
        }
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let at = self.pos;
        let n = self.integer()?;
        let n: i32 = n.try_into().map_err(|_| AlgebraError::Parse { pos: at, msg: "exponent out of range".into() })?;
        if parens {
            if self.peek() != Some(b')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
        }
        base.pow(if neg { -n } else { n })
            .map_err(|_| AlgebraError::Parse { pos: at, msg: "zero raised to a negative power".into() })
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn atom(&mut self) -> Result<RationalFunction, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalFunction::constant(self.var, Coeff::from_integer(n)))
            }
            Some(c) if c == self.var.symbol() as u8 => {
                self.pos += 1;
                Ok(RationalFunction::from_poly(LaurentPoly::indeterminate(self.var)))
            }
            Some(c) if c.is_ascii_alphabetic() => Err(self.err(&format!(
                "unexpected variable '{}', expected '{}'",
                c as char,
                self.var.symbol()
            ))),
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// `δ = -A^2 - A^-2`, the value of an extra unknotted component.
pub fn delta() -> LaurentPoly {
    LaurentPoly::from_ints(Var::A, &[(2, -1), (-2, -1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_ints(Var::A, terms)
    }

    #[test]
    fn additive_inverse_and_identity() {
        assert!((&a(&[(2, 1)]) + &a(&[(2, -1)])).is_zero());
        assert_eq!(&delta() + &LaurentPoly::zero(Var::A), delta());
        assert_eq!(&a(&[(-2, -1)]) + &a(&[(-10, -1)]), a(&[(-2, -1), (-10, -1)]));
    }

    #[test]
    fn products() {
        assert_eq!(&delta() * &delta(), a(&[(4, 1), (0, 2), (-4, 1)]));
        assert_eq!(&delta() * &LaurentPoly::one(Var::A), delta());
        // (-A^4 - A^-4) * (-A^3)^-2
        let minus_a3_inv_sq = a(&[(-6, 1)]);
        assert_eq!(&a(&[(4, -1), (-4, -1)]) * &minus_a3_inv_sq, a(&[(-2, -1), (-10, -1)]));
    }

    #[test]
    fn normalize_examples() {
        let d = delta();
        assert!(RationalFunction::new(d.clone(), d.clone()).unwrap().is_one());
        let r = RationalFunction::new(a(&[(4, 1), (-4, -1)]), d).unwrap();
        assert_eq!(r.as_poly().unwrap(), &a(&[(2, -1), (-2, 1)]));
        let p = a(&[(3, 2), (-1, 5)]);
        assert_eq!(RationalFunction::new(p.clone(), LaurentPoly::one(Var::A)).unwrap().as_poly(), Some(&p));
        assert_eq!(
            RationalFunction::new(p, LaurentPoly::zero(Var::A)),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn canonical_denominator_shape() {
        let r = RationalFunction::new(a(&[(-2, -1), (-10, -1)]), delta()).unwrap();
        assert_eq!(r.den(), &a(&[(4, 1), (0, 1)]));
        assert_eq!(r.num(), &a(&[(0, 1), (-8, 1)]));
        assert_eq!(r.to_string(), "(1 + A^-8)/(A^4 + 1)");
        let half = RationalFunction::new(a(&[(0, 1)]), a(&[(0, 2)])).unwrap();
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn text_forms() {
        assert_eq!(delta().to_string(), "-A^2 - A^-2");
        assert_eq!(LaurentPoly::zero(Var::A).to_string(), "0");
        let p = LaurentPoly::from_terms(
            Var::T,
            [(1, Coeff::new(1.into(), 2.into())), (0, Coeff::from_integer((-3).into())), (-1, Coeff::from_integer(2.into()))],
        );
        assert_eq!(p.to_string(), "1/2*t - 3 + 2*t^-1");
        assert_eq!(LaurentPoly::parse(&p.to_string(), Var::T).unwrap(), p);
        let c = RationalFunction::parse("1/(-A^2 - A^-2)", Var::A).unwrap();
        assert_eq!(c, RationalFunction::new(LaurentPoly::one(Var::A), delta()).unwrap());
        assert_eq!(c.den(), &a(&[(4, 1), (0, 1)]));
        assert_eq!(c.num(), &a(&[(2, -1)]));
    }

    #[test]
    fn parse_errors_carry_position() {
        match RationalFunction::parse("A^2 + + ", Var::A) {
            Err(AlgebraError::Parse { pos, .. }) => assert_eq!(pos, 8),
            other => panic!("{other:?}"),
        }
        assert!(matches!(RationalFunction::parse("t + 1", Var::A), Err(AlgebraError::Parse { pos: 0, .. })));
        assert!(matches!(RationalFunction::parse("1/(A - A)", Var::A), Err(AlgebraError::Parse { pos: 1, .. })));
        assert!(matches!(LaurentPoly::parse("1/(A+1)", Var::A), Err(AlgebraError::NotPolynomial(_))));
    }

    #[test]
    fn variables_do_not_mix() {
        let t = LaurentPoly::indeterminate(Var::T);
        let x = LaurentPoly::indeterminate(Var::A);
        assert!(matches!(t.checked_add(&x), Err(AlgebraError::VariableMismatch('t', 'A'))));
        // constants adopt the other side's variable
        let s = t.checked_add(&LaurentPoly::one(Var::A)).unwrap();
        assert_eq!(s.var(), Var::T);
        assert_eq!(LaurentPoly::one(Var::A), LaurentPoly::one(Var::T));
    }

    #[test]
    fn exact_division_and_gcd() {
        let p = a(&[(3, 1), (0, -1)]); // A^3 - 1
        let q = a(&[(1, 1), (0, -1)]); // A - 1
        assert_eq!(p.div_exact(&q).unwrap(), a(&[(2, 1), (1, 1), (0, 1)]));
        assert!(p.div_exact(&a(&[(1, 1), (0, 1)])).is_none());
        let g = LaurentPoly::gcd(&p.shift(-5), &a(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(g, a(&[(1, -1), (0, 1)]));
    }
}
