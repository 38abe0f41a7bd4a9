//! Exact univariate polynomials with darga-aware semantics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::par::{self, Exec};

/// Exact rational scalar. Always in lowest terms with a positive denominator.
pub type Coefficient = BigRational;

/// Convenience constructor for small integer coefficients.
pub fn int(value: i64) -> Coefficient {
    Coefficient::from_integer(BigInt::from(value))
}

/// Below this many coefficient products a convolution stays on one thread.
const PAR_MUL_THRESHOLD: usize = 1 << 14;

/// A polynomial `a_r q^r + ... + a_s q^s` stored densely from its lowest
/// nonzero power.
///
/// Nonzero values are trimmed so that the first and last stored coefficients
/// are nonzero. The zero polynomial has no coefficients and `ord == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    ord: usize,
    coeffs: Vec<Coefficient>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Coefficient::one())
    }

    pub fn constant(c: Coefficient) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    /// `c * q^power`.
    pub fn monomial(c: Coefficient, power: usize) -> Self {
        Self::from_coeffs(power, vec![c])
    }

    /// Builds `sum_k coeffs[k] q^(ord + k)`, trimming zeros at both ends.
    pub fn from_coeffs(ord: usize, mut coeffs: Vec<Coefficient>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self {
            ord: ord + lead,
            coeffs,
        }
    }

    pub fn from_ints(ord: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(ord, coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn from_bigints(ord: usize, coeffs: Vec<BigInt>) -> Self {
        Self::from_coeffs(
            ord,
            coeffs.into_iter().map(Coefficient::from_integer).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest power with a nonzero coefficient (0 for the zero polynomial).
    pub fn ord(&self) -> usize {
        self.ord
    }

    /// Highest power with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.ord + self.coeffs.len() - 1)
    }

    /// Coefficients `a_r, ..., a_s` over the support.
    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    /// Coefficient of `q^power`.
    pub fn coeff(&self, power: usize) -> Coefficient {
        power
            .checked_sub(self.ord)
            .and_then(|k| self.coeffs.get(k))
            .cloned()
            .unwrap_or_else(Coefficient::zero)
    }

    /// Coefficients of `q^0 ..= q^degree`, including the leading zeros.
    pub fn dense(&self) -> Vec<Coefficient> {
        let mut out = vec![Coefficient::zero(); self.ord];
        out.extend(self.coeffs.iter().cloned());
        out
    }

    /// Sum of the lowest and highest powers.
    pub fn darga(&self) -> Result<usize> {
        self.degree().map(|s| self.ord + s).ok_or(Error::ZeroDarga)
    }

    /// `q^n f(1/q)` with `n` the darga: the coefficient sequence reversed over
    /// the same support. Zero maps to zero.
    pub fn reciprocal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            ord: self.ord,
            coeffs,
        }
    }

    /// With `darga == None`, whether `f* = f`. With `Some(n)`, whether `f` lies
    /// in `P_n`: zero, or palindromic of darga exactly `n`.
    pub fn is_palindromic(&self, darga: Option<usize>) -> bool {
        if self.is_zero() {
            return true;
        }
        let symmetric = self
            .coeffs
            .iter()
            .zip(self.coeffs.iter().rev())
            .take(self.coeffs.len() / 2 + 1)
            .all(|(a, b)| a == b);
        match darga {
            None => symmetric,
            Some(n) => symmetric && self.darga().ok() == Some(n),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// First negative coefficient, reported as an error.
    pub fn check_nonnegative(&self) -> Result<()> {
        match self.coeffs.iter().position(Signed::is_negative) {
            None => Ok(()),
            Some(k) => Err(Error::NegativeCoefficient {
                power: self.ord + k,
                value: self.coeffs[k].clone(),
            }),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            ord: self.ord + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            ord: self.ord,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact product. Uses the default execution strategy.
    pub fn multiply(&self, other: &Self) -> Self {
        self.multiply_with(other, Exec::default())
    }

    /// Exact product computed one output coefficient at a time, fanning the
    /// output indices out when `exec` is parallel and the product is large.
    /// Integer inputs take a `BigInt` path that skips rational normalisation.
    pub fn multiply_with(&self, other: &Self, exec: Exec) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let exec = if self.coeffs.len() * other.coeffs.len() < PAR_MUL_THRESHOLD {
            Exec::Sequential
        } else {
            exec
        };
        let ord = self.ord + other.ord;
        if self.is_integral() && other.is_integral() {
            let a: Vec<BigInt> = self.coeffs.iter().map(|c| c.to_integer()).collect();
            let b: Vec<BigInt> = other.coeffs.iter().map(|c| c.to_integer()).collect();
            if let Some(c) = convolve_small(&a, &b, exec) {
                return Self::from_bigints(ord, c);
            }
            Self::from_bigints(ord, convolve(&a, &b, exec))
        } else {
            Self::from_coeffs(ord, convolve(&self.coeffs, &other.coeffs, exec))
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.multiply(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.multiply(&base);
            }
        }
        acc
    }

    /// Returns `h` with `self = divisor * h`.
    ///
    /// The quotient is built by ascending-power long division. If the
    /// division does not terminate cleanly the error carries `self mod
    /// divisor` (the ordinary Euclidean remainder).
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let fail = || Error::InexactDivision {
            remainder: self.div_rem(divisor).map(|(_, r)| r).unwrap_or_default(),
        };
        let (Some(ord), Some(len)) = (
            self.ord.checked_sub(divisor.ord),
            (self.coeffs.len() + 1).checked_sub(divisor.coeffs.len()),
        ) else {
            return Err(fail());
        };
        let g = &divisor.coeffs;
        let mut rem = self.coeffs.clone();
        let mut quot = Vec::with_capacity(len);
        for k in 0..len {
            let h = &rem[k] / &g[0];
            if !h.is_zero() {
                for (i, gi) in g.iter().enumerate() {
                    rem[k + i] -= &h * gi;
                }
            }
            quot.push(h);
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(fail());
        }
        Ok(Self::from_coeffs(ord, quot))
    }

    /// Euclidean division by descending powers: `self = divisor * q + r` with
    /// `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dg) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let Some(df) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if df < dg {
            return Ok((Self::zero(), self.clone()));
        }
        let g = divisor.dense();
        let lead = &g[dg];
        let mut rem = self.dense();
        let mut quot = vec![Coefficient::zero(); df - dg + 1];
        for k in (0..=df - dg).rev() {
            let h = &rem[k + dg] / lead;
            if h.is_zero() {
                continue;
            }
            for (i, gi) in g.iter().enumerate() {
                rem[k + i] -= &h * gi;
            }
            quot[k] = h;
        }
        rem.truncate(dg);
        Ok((Self::from_coeffs(0, quot), Self::from_coeffs(0, rem)))
    }

    /// Exact value at `x`.
    pub fn evaluate(&self, x: &Coefficient) -> Coefficient {
        let mut acc = Coefficient::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        if self.ord > 0 && !acc.is_zero() {
            acc *= num_traits::pow(x.clone(), self.ord);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let dense = self.dense();
        let coeffs = dense
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * int(k as i64))
            .collect();
        Self::from_coeffs(0, coeffs)
    }

    /// Leading coefficient.
    pub fn lead(&self) -> Option<&Coefficient> {
        self.coeffs.last()
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let ord = self.ord.min(other.ord);
        let top = self.degree().max(other.degree()).unwrap_or(0);
        let mut out = vec![Coefficient::zero(); top - ord + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[self.ord - ord + k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            if negate {
                out[other.ord - ord + k] -= c;
            } else {
                out[other.ord - ord + k] += c;
            }
        }
        Self::from_coeffs(ord, out)
    }
}

/// Dense convolution; entry `k` of the output is computed independently.
/// `i128` convolution when every partial sum provably fits.
fn convolve_small(a: &[BigInt], b: &[BigInt], exec: Exec) -> Option<Vec<BigInt>> {
    let bits = |v: &[BigInt]| v.iter().map(|x| x.bits()).max().unwrap_or(0);
    let terms = a.len().min(b.len()) as u64;
    if bits(a) + bits(b) + (u64::BITS - terms.leading_zeros()) as u64 > 126 {
        return None;
    }
    let small = |v: &[BigInt]| v.iter().map(|x| x.to_i128().unwrap()).collect::<Vec<_>>();
    let c = convolve(&small(a), &small(b), exec);
    Some(c.into_iter().map(BigInt::from).collect())
}

fn convolve<T>(a: &[T], b: &[T], exec: Exec) -> Vec<T>
where
    T: Clone + Zero + Send + Sync + for<'x> std::ops::AddAssign<&'x T>,
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    let (n, m) = (a.len(), b.len());
    par::map_range(exec, n + m - 1, |k| {
        let lo = k.saturating_sub(m - 1);
        let hi = k.min(n - 1);
        let mut acc = T::zero();
        for i in lo..=hi {
            if !a[i].is_zero() {
                acc += &(&a[i] * &b[k - i]);
            }
        }
        acc
    })
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_impl(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_impl(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.multiply(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ord: self.ord,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Text form

fn fmt_term(out: &mut String, c: &Coefficient, power: usize, first: bool) {
    let negative = c.is_negative();
    let abs = c.abs();
    if negative {
        out.push('-');
    } else if !first {
        out.push('+');
    }
    let var = match power {
        0 => String::new(),
        1 => "q".to_owned(),
        k => format!("q^{k}"),
    };
    if power == 0 {
        out.push_str(&abs.to_string());
    } else if abs.is_one() {
        out.push_str(&var);
    } else if abs.is_integer() {
        out.push_str(&format!("{abs}{var}"));
    } else {
        out.push_str(&format!("{abs} {var}"));
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let first = out.is_empty();
                fmt_term(&mut out, c, self.ord + k, first);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn uint(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            std::str::from_utf8(&self.src[start..self.pos])
                .expect("ascii digits")
                .parse()
                .expect("digits parse")
        })
    }

    fn rational(&mut self) -> Result<Option<Coefficient>> {
        let Some(numer) = self.uint() else {
            return Ok(None);
        };
        if self.peek() != Some(b'/') {
            return Ok(Some(Coefficient::from_integer(numer)));
        }
        self.pos += 1;
        let at = {
            self.skip_ws();
            self.pos
        };
        let denom = self
            .uint()
            .ok_or_else(|| self.error("expected denominator"))?;
        if denom.is_zero() {
            return Err(Error::ZeroDenominator { position: at });
        }
        Ok(Some(Coefficient::new(numer, denom)))
    }

    fn term(&mut self) -> Result<(Coefficient, usize)> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let coeff = self.rational()?;
        let mut power = None;
        if self.peek() == Some(b'q') {
            self.pos += 1;
            power = Some(1);
            if self.peek() == Some(b'^') {
                self.pos += 1;
                let exp = self.uint().ok_or_else(|| self.error("expected exponent"))?;
                let exp = usize::try_from(exp).map_err(|_| self.error("exponent too large"))?;
                power = Some(exp);
            }
        }
        if coeff.is_none() && power.is_none() {
            self.pos = start;
            return Err(self.error("expected a term"));
        }
        Ok((coeff.unwrap_or_else(Coefficient::one), power.unwrap_or(0)))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut terms: Vec<(Coefficient, usize)> = Vec::new();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (c, k) = self.term()?;
            terms.push((if sign < 0 { -c } else { c }, k));
            match self.peek() {
                None => break,
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return Err(self.error("expected '+', '-' or end of input")),
            }
            self.pos += 1;
        }
        let top = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let mut dense = vec![Coefficient::zero(); top + 1];
        for (c, k) in terms {
            dense[k] += c;
        }
        Ok(Polynomial::from_coeffs(0, dense))
    }
}

/// Parses a signed rational literal such as `"3"` or `"-1/2"`.
pub fn parse_coefficient(text: &str) -> Result<Coefficient> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let negative = match p.peek() {
        Some(b'-') => {
            p.pos += 1;
            true
        }
        Some(b'+') => {
            p.pos += 1;
            false
        }
        _ => false,
    };
    let value = p
        .rational()?
        .ok_or_else(|| p.error("expected a rational"))?;
    if p.peek().is_some() {
        return Err(p.error("trailing input after rational"));
    }
    Ok(if negative { -value } else { value })
}

/// Parses either the term grammar (`1+4q+q^2`, `1/2 + q - 1/2 q^2`) or the
/// JSON coefficient-list form `{"ord": r, "coeffs": ["a0", ...]}`.
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).map_err(|e| Error::Syntax {
            position: e.column().saturating_sub(1),
            message: e.to_string(),
        });
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    p.poly()
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialRepr {
    ord: usize,
    coeffs: Vec<String>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialRepr {
            ord: self.ord,
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolynomialRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| parse_coefficient(c))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Polynomial::from_coeffs(repr.ord, coeffs))
    }
}

// ---------------------------------------------------------------------------
// Palindromic factor specifications

/// `(1 + root q)(root + q)` raised to `mult`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearPair {
    pub root: Coefficient,
    pub mult: u32,
}

/// `(1 + b q + c q^2)(c + b q + q^2)` raised to `mult`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticPair {
    pub b: Coefficient,
    pub c: Coefficient,
    pub mult: u32,
}

/// A palindromic polynomial with nonnegative coefficients written as
/// `a q^r (1+q)^e prod[(1+r_i q)(r_i+q)]^{e_i} prod[(1+b_j q+c_j q^2)(c_j+b_j q+q^2)]^{d_j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSpec {
    pub a: Coefficient,
    pub r: usize,
    pub e: u32,
    pub linear_pairs: Vec<LinearPair>,
    pub quadratic_pairs: Vec<QuadraticPair>,
}

impl FactorSpec {
    pub fn new(a: Coefficient) -> Self {
        Self {
            a,
            r: 0,
            e: 0,
            linear_pairs: Vec::new(),
            quadratic_pairs: Vec::new(),
        }
    }

    pub fn with_q_power(mut self, r: usize) -> Self {
        self.r = r;
        self
    }

    pub fn with_one_plus_q(mut self, e: u32) -> Self {
        self.e = e;
        self
    }

    pub fn with_linear(mut self, root: Coefficient, mult: u32) -> Self {
        self.linear_pairs.push(LinearPair { root, mult });
        self
    }

    pub fn with_quadratic(mut self, b: Coefficient, c: Coefficient, mult: u32) -> Self {
        self.quadratic_pairs.push(QuadraticPair { b, c, mult });
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFactorSpec(msg));
        if !self.a.is_positive() {
            return bad(format!("leading constant {} must be positive", self.a));
        }
        for p in &self.linear_pairs {
            if !p.root.is_positive() || p.root.is_one() {
                return bad(format!("linear root {} must be positive and != 1", p.root));
            }
            if p.mult == 0 {
                return bad("linear multiplicity must be positive".into());
            }
        }
        for p in &self.quadratic_pairs {
            if p.b.is_negative() || !p.c.is_positive() {
                return bad(format!("quadratic ({}, {}) needs b >= 0, c > 0", p.b, p.c));
            }
            if &p.b * &p.b >= int(4) * &p.c {
                return bad(format!("quadratic ({}, {}) needs b^2 < 4c", p.b, p.c));
            }
            if p.mult == 0 {
                return bad("quadratic multiplicity must be positive".into());
            }
        }
        Ok(())
    }

    /// Darga of the constructed polynomial.
    pub fn darga(&self) -> usize {
        2 * self.r
            + self.e as usize
            + self
                .linear_pairs
                .iter()
                .map(|p| 2 * p.mult as usize)
                .sum::<usize>()
            + self
                .quadratic_pairs
                .iter()
                .map(|p| 4 * p.mult as usize)
                .sum::<usize>()
    }

    /// Whether every factor has only real zeros.
    pub fn is_real_rooted(&self) -> bool {
        self.quadratic_pairs.is_empty()
    }
}

/// Expands a [`FactorSpec`].
pub fn construct_from_factors(spec: &FactorSpec) -> Result<Polynomial> {
    spec.validate()?;
    let one = Coefficient::one();
    let mut f = Polynomial::monomial(spec.a.clone(), spec.r);
    if spec.e > 0 {
        f = f.multiply(&Polynomial::from_coeffs(0, vec![one.clone(), one.clone()]).pow(spec.e));
    }
    for p in &spec.linear_pairs {
        let pair = Polynomial::from_coeffs(0, vec![one.clone(), p.root.clone()]).multiply(
            &Polynomial::from_coeffs(0, vec![p.root.clone(), one.clone()]),
        );
        f = f.multiply(&pair.pow(p.mult));
    }
    for p in &spec.quadratic_pairs {
        let pair =
            Polynomial::from_coeffs(0, vec![one.clone(), p.b.clone(), p.c.clone()]).multiply(
                &Polynomial::from_coeffs(0, vec![p.c.clone(), p.b.clone(), one.clone()]),
            );
        f = f.multiply(&pair.pow(p.mult));
    }
    Ok(f)
}
