//! Unimodality, log-concavity, A/B-positivity and real-rootedness.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::basis::{chebyshev_c, coords, space_dim, BasisId, CoordinateVector};
use crate::error::{Error, Result};
use crate::poly::{int, Coefficient, FactorSpec, Polynomial};
use crate::sturm::{square_free_decomposition, SturmChain};

/// Whether the coefficients over `[ord, degree]` weakly rise to a peak and
/// then weakly fall. The zero polynomial counts as unimodal.
pub fn is_unimodal(f: &Polynomial) -> bool {
    let a = f.coeffs();
    let mut i = 0;
    while i + 1 < a.len() && a[i] <= a[i + 1] {
        i += 1;
    }
    while i + 1 < a.len() && a[i] >= a[i + 1] {
        i += 1;
    }
    i + 1 >= a.len()
}

/// First power `j` whose coefficient is strictly below some earlier and some
/// later coefficient, i.e. the bottom of the first dip. `None` iff unimodal.
pub fn first_unimodality_violation(f: &Polynomial) -> Option<usize> {
    let a = f.coeffs();
    if a.len() < 3 {
        return None;
    }
    let mut suffix_max = a.to_vec();
    for k in (0..a.len() - 1).rev() {
        if suffix_max[k + 1] > suffix_max[k] {
            suffix_max[k] = suffix_max[k + 1].clone();
        }
    }
    let mut prefix_max = &a[0];
    for k in 1..a.len() - 1 {
        if a[k] < *prefix_max && a[k] < suffix_max[k + 1] {
            return Some(f.ord() + k);
        }
        if a[k] > *prefix_max {
            prefix_max = &a[k];
        }
    }
    None
}

/// Log-concavity with no internal zeros, for nonnegative coefficients.
pub fn is_log_concave(f: &Polynomial) -> Result<bool> {
    f.check_nonnegative()?;
    let a = f.coeffs();
    if a.iter().any(Zero::is_zero) {
        // Any zero inside the trimmed support is internal.
        return Ok(false);
    }
    Ok(a.windows(3).all(|w| &w[0] * &w[2] <= &w[1] * &w[1]))
}

/// A-coordinates together with the Λ verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaVerdict {
    pub lambda: bool,
    pub a_coords: CoordinateVector,
}

fn require_member(f: &Polynomial, n: usize) -> Result<()> {
    if f.is_palindromic(Some(n)) {
        Ok(())
    } else {
        Err(Error::NotPalindromic {
            poly: f.clone(),
            darga: n,
        })
    }
}

/// A-coordinates from the bidiagonal `M(A, S)`: `c_0 = a_0`, `c_j = a_j - a_{j-1}`.
fn a_coords_closed_form(f: &Polynomial, n: usize) -> CoordinateVector {
    let entries = (0..space_dim(n))
        .map(|j| match j {
            0 => f.coeff(0),
            _ => f.coeff(j) - f.coeff(j - 1),
        })
        .collect();
    CoordinateVector::new(n, BasisId::A, entries).expect("length matches")
}

/// Λ-test for a nonnegative member of `P_n`.
///
/// The verdict is A-positivity; unimodality is computed separately and the
/// two must agree.
pub fn lambda_test(f: &Polynomial, n: usize) -> Result<LambdaVerdict> {
    require_member(f, n)?;
    f.check_nonnegative()?;
    let a_coords = a_coords_closed_form(f, n);
    let lambda = a_coords.is_nonnegative();
    assert_eq!(
        lambda,
        is_unimodal(f),
        "A-positivity and unimodality disagree for {f}"
    );
    Ok(LambdaVerdict { lambda, a_coords })
}

/// The gamma-vector `b_i = sum_{j<=i} C(n-2j, i-j) a_j`.
pub fn gamma_vector(f: &Polynomial, n: usize) -> Result<CoordinateVector> {
    require_member(f, n)?;
    let a: Vec<Coefficient> = (0..space_dim(n)).map(|j| f.coeff(j)).collect();
    let entries = (0..space_dim(n))
        .map(|i| {
            (0..=i)
                .filter(|&j| !a[j].is_zero())
                .fold(Coefficient::zero(), |acc, j| {
                    let c = chebyshev_c(n - 2 * j, i - j).expect("i - j <= (n - 2j)/2");
                    acc + Coefficient::from_integer(c) * &a[j]
                })
        })
        .collect();
    let gamma = CoordinateVector::new(n, BasisId::B, entries)?;
    debug_assert_eq!(Ok(&gamma), coords(f, n, BasisId::B).as_ref());
    Ok(gamma)
}

/// Interior indices where Newton's inequality
/// `a_i^2 >= a_{i-1} a_{i+1} (1 + 1/i)(1 + 1/(n-i))` fails, after shifting
/// the support to start at `q^0` (`n` is the shifted degree).
pub fn newton_violations(f: &Polynomial) -> Vec<usize> {
    let a = f.coeffs();
    let n = a.len().saturating_sub(1);
    (1..n)
        .filter(|&i| {
            let factor = (Coefficient::one() + Coefficient::new(1.into(), i.into()))
                * (Coefficient::one() + Coefficient::new(1.into(), (n - i).into()));
            &a[i] * &a[i] < &a[i - 1] * &a[i + 1] * factor
        })
        .collect()
}

/// Real roots counted with multiplicity, including `ord` roots at zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootCount {
    pub count: usize,
    pub real_rooted: bool,
}

pub fn real_root_count(f: &Polynomial) -> Result<RootCount> {
    let degree = f.degree().ok_or(Error::ZeroPolynomial)?;
    let core = Polynomial::from_coeffs(0, f.coeffs().to_vec());
    let mut count = f.ord();
    for (factor, mult) in square_free_decomposition(&core)? {
        count += mult * SturmChain::new(&factor)?.count_real_roots();
    }
    Ok(RootCount {
        count,
        real_rooted: count == degree,
    })
}

/// Outcome of checking that a real-rooted palindromic polynomial has a
/// real-rooted, nonnegative gamma-polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaTransfer {
    pub holds: bool,
    pub gamma: CoordinateVector,
    pub gamma_poly: Polynomial,
    pub gamma_roots: RootCount,
}

pub fn verify_gamma_real_rooted(f: &Polynomial, n: usize) -> Result<GammaTransfer> {
    require_member(f, n)?;
    f.check_nonnegative()?;
    if !real_root_count(f)?.real_rooted {
        return Err(Error::NotRealRooted);
    }
    let gamma = gamma_vector(f, n)?;
    let gamma_poly = gamma.as_polynomial();
    let gamma_roots = real_root_count(&gamma_poly)?;
    Ok(GammaTransfer {
        holds: gamma.is_nonnegative() && gamma_roots.real_rooted,
        gamma,
        gamma_poly,
        gamma_roots,
    })
}

/// Gamma-polynomial of a real-rooted factor specification, read off the
/// factors: each `(1 + r q)(r + q) = r [(1+q)^2 + s q]` with
/// `s = r + 1/r - 2` contributes `r (1 + s q)`, `(1+q)^e` contributes nothing
/// and `q^r` shifts.
pub fn gamma_from_real_factorization(spec: &FactorSpec) -> Result<Polynomial> {
    spec.validate()?;
    if !spec.quadratic_pairs.is_empty() {
        return Err(Error::InvalidFactorSpec(
            "gamma from factors needs a spec without quadratic pairs".into(),
        ));
    }
    let mut g = Polynomial::monomial(spec.a.clone(), spec.r);
    for pair in &spec.linear_pairs {
        let r = &pair.root;
        let s = r + r.recip() - int(2);
        let factor = Polynomial::from_coeffs(0, vec![r.clone(), r * s]);
        g = g.multiply(&factor.pow(pair.mult));
    }
    Ok(g)
}

/// Gamma-vector of a product: the convolution of the factors' gamma-vectors.
pub fn b_product_convolution(
    u: &CoordinateVector,
    v: &CoordinateVector,
) -> Result<CoordinateVector> {
    for w in [u, v] {
        if w.basis() != BasisId::B {
            return Err(Error::WrongBasis {
                expected: 'B',
                found: w.basis().as_char(),
            });
        }
    }
    let n = u.darga() + v.darga();
    let mut entries = vec![Coefficient::zero(); space_dim(n)];
    for (i, x) in u.entries().iter().enumerate() {
        for (j, y) in v.entries().iter().enumerate() {
            entries[i + j] += x * y;
        }
    }
    CoordinateVector::new(n, BasisId::B, entries)
}

/// Everything the analyses say about one polynomial viewed in `P_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub darga: usize,
    pub palindromic: bool,
    pub unimodal: bool,
    /// `None` when a coefficient is negative.
    pub log_concave: Option<bool>,
    pub a_positive: Option<bool>,
    pub b_positive: Option<bool>,
    pub b_strictly_positive: Option<bool>,
    pub a_coords: Option<CoordinateVector>,
    pub gamma: Option<CoordinateVector>,
    pub newton_violations: Vec<usize>,
    pub real_root_count: Option<usize>,
    pub real_rooted: Option<bool>,
}

/// Runs every analysis on `f`. The darga defaults to `darga(f)`.
pub fn analyze(f: &Polynomial, darga: Option<usize>) -> Result<AnalysisReport> {
    let n = match darga {
        Some(n) => n,
        None => f.darga()?,
    };
    let palindromic = f.is_palindromic(Some(n));
    let (a_coords, gamma) = if palindromic {
        (Some(a_coords_closed_form(f, n)), Some(gamma_vector(f, n)?))
    } else {
        (None, None)
    };
    let roots = if f.is_zero() {
        None
    } else {
        Some(real_root_count(f)?)
    };
    Ok(AnalysisReport {
        darga: n,
        palindromic,
        unimodal: is_unimodal(f),
        log_concave: is_log_concave(f).ok(),
        a_positive: a_coords.as_ref().map(CoordinateVector::is_nonnegative),
        b_positive: gamma.as_ref().map(CoordinateVector::is_nonnegative),
        b_strictly_positive: gamma.as_ref().map(CoordinateVector::is_strictly_positive),
        a_coords,
        gamma,
        newton_violations: newton_violations(f),
        real_root_count: roots.map(|r| r.count),
        real_rooted: roots.map(|r| r.real_rooted),
    })
}

/// Whether every coefficient is an integer (used for integrality checks on
/// gamma-vectors).
pub fn is_integral(v: &CoordinateVector) -> bool {
    v.entries().iter().all(|c| c.is_integer())
}

/// Nonnegative, palindromic of darga `n`, and unimodal.
pub fn is_lambda_polynomial(f: &Polynomial, n: usize) -> bool {
    f.is_palindromic(Some(n)) && !f.coeffs().iter().any(Signed::is_negative) && is_unimodal(f)
}
