//! Exact real-root counting with Sturm chains.
//!
//! Chains are built over the integers: inputs are cleared of denominators and
//! content, and each step takes a sign-preserving pseudo-remainder, negates
//! it and divides out its content. Only signs are ever inspected, so the
//! positive rescalings do not affect the counts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Coefficient, Polynomial};

/// Dense integer coefficients, lowest power first, no trailing zeros.
type IntPoly = Vec<BigInt>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(p: IntPoly) -> IntPoly {
    let g = content(&p);
    if g.is_zero() || g.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// Primitive integer multiple of `f` with the same sign pattern (the scale
/// factor is positive).
fn to_int_poly(f: &Polynomial) -> IntPoly {
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let dense = f
        .dense()
        .into_iter()
        .map(|c| (c * Coefficient::from_integer(lcm.clone())).to_integer())
        .collect();
    primitive(trim(dense))
}

fn from_int_poly(p: IntPoly) -> Polynomial {
    Polynomial::from_bigints(0, p)
}

fn derivative(p: &[BigInt]) -> IntPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect(),
    )
}

/// Positive multiple of the Euclidean remainder of `a` by `b`.
fn sign_preserving_prem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let d = b.len() - 1;
    let lead = &b[d];
    let scale = lead.abs();
    let sign = lead.signum();
    let mut r: IntPoly = a.to_vec();
    while r.len() > d {
        let top = r.len() - 1;
        let t = &r[top] * &sign;
        let shift = top - d;
        for c in r.iter_mut() {
            *c *= &scale;
        }
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &t * bi;
        }
        r = trim(r);
    }
    r
}

/// Greatest common divisor up to a constant, primitive with positive lead.
fn int_gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let (mut a, mut b) = (primitive(trim(a.to_vec())), primitive(trim(b.to_vec())));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive(sign_preserving_prem(&a, &b));
        a = b;
        b = r;
    }
    if a.last().is_some_and(Signed::is_negative) {
        a = a.into_iter().map(|c| -c).collect();
    }
    a
}

/// Polynomial gcd over the rationals, normalised to a primitive integer
/// polynomial with positive leading coefficient.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    from_int_poly(int_gcd(&to_int_poly(f), &to_int_poly(g)))
}

/// Yun's square-free decomposition: `f = c * prod_i factors[i].0 ^ factors[i].1`
/// with pairwise coprime square-free factors of positive degree.
pub fn square_free_decomposition(f: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = from_int_poly(to_int_poly(f));
    let df = f.derivative();
    let mut out = Vec::new();
    if df.is_zero() {
        return Ok(out);
    }
    let a0 = gcd(&f, &df);
    let mut b = f.divide_exact(&a0)?;
    let mut d = &df.divide_exact(&a0)? - &b.derivative();
    let mut mult = 1;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = gcd(&b, &d);
        let c = d.divide_exact(&a)?;
        b = b.divide_exact(&a)?;
        d = &c - &b.derivative();
        if a.degree().is_some_and(|deg| deg > 0) {
            out.push((a, mult));
        }
        mult += 1;
    }
    Ok(out)
}

/// A Sturm chain `p_0 = f, p_1 = f', p_{k+1} = -rem(p_{k-1}, p_k)` up to
/// positive scaling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(f: &Polynomial) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p0 = to_int_poly(f);
        let p1 = primitive(derivative(&p0));
        let mut chain = vec![p0];
        if !p1.is_empty() {
            chain.push(p1);
        }
        while chain.len() >= 2 {
            let k = chain.len();
            let r = sign_preserving_prem(&chain[k - 2], &chain[k - 1]);
            if r.is_empty() {
                break;
            }
            chain.push(primitive(r.into_iter().map(|c| -c).collect()));
        }
        Ok(Self { chain })
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.chain.iter().cloned().map(from_int_poly).collect()
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn sign_variations_at(&self, x: &Coefficient) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let v = from_int_poly(p.clone()).evaluate(x);
            if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            }
        }))
    }

    fn sign_at_infinity(p: &[BigInt], negative: bool) -> i8 {
        let lead = p.last().map_or(0, |c| c.signum().try_into().unwrap_or(0));
        if negative && p.len().is_multiple_of(2) {
            -lead
        } else {
            lead
        }
    }

    pub fn sign_variations_at_pos_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| Self::sign_at_infinity(p, false)))
    }

    pub fn sign_variations_at_neg_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| Self::sign_at_infinity(p, true)))
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        self.sign_variations_at_neg_infinity() - self.sign_variations_at_pos_infinity()
    }

    /// Number of distinct roots in `(a, b]`, for `a < b`.
    pub fn count_roots_between(&self, a: &Coefficient, b: &Coefficient) -> usize {
        self.sign_variations_at(a)
            .saturating_sub(self.sign_variations_at(b))
    }
}
