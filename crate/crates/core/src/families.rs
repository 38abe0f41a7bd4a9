//! Generators for classical palindromic families and the Almkvist grid scan.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::basis::binom;
use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::poly::Polynomial;
use crate::positivity::{first_unimodality_violation, is_unimodal, lambda_test};

/// Multiplies dense integer coefficients in place by
/// `1 + q^step + ... + q^{(r-1) step}`.
fn mul_geometric_block(a: &mut Vec<BigInt>, step: usize, r: usize) {
    if r <= 1 {
        return;
    }
    let old = std::mem::take(a);
    let len = old.len() + (r - 1) * step;
    let mut out = vec![BigInt::zero(); len];
    // out[k] = out[k - step] + old[k] - old[k - r*step]
    for k in 0..len {
        let mut v = old.get(k).cloned().unwrap_or_default();
        if k >= step {
            v += &out[k - step];
        }
        if k >= r * step {
            if let Some(x) = old.get(k - r * step) {
                v -= x;
            }
        }
        out[k] = v;
    }
    *a = out;
}

/// `F(C_n; q) = 1 + q + ... + q^n`.
pub fn chain_poly(n: usize) -> Polynomial {
    Polynomial::from_bigints(0, vec![BigInt::one(); n + 1])
}

/// `F(B_n; q) = (1 + q)^n`.
pub fn boolean_poly(n: usize) -> Polynomial {
    Polynomial::from_bigints(0, (0..=n as i64).map(|k| binom(n as i64, k)).collect())
}

/// The Gaussian coefficient `[m+n choose n]_q` via the q-Pascal rule
/// `[N, k] = [N-1, k-1] + q^k [N-1, k]`.
pub fn gaussian(m: usize, n: usize) -> Polynomial {
    let k = m.min(n);
    // row[j] holds [N choose j]_q for the current N, j <= k.
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for big_n in 1..=m + n {
        let top = k.min(big_n);
        let mut next = Vec::with_capacity(top + 1);
        for j in 0..=top {
            if j == 0 || j == big_n {
                next.push(vec![BigInt::one()]);
                continue;
            }
            let left = &row[j - 1];
            let right = row.get(j);
            let mut c = left.clone();
            if let Some(right) = right {
                let need = right.len() + j;
                if c.len() < need {
                    c.resize(need, BigInt::zero());
                }
                for (t, x) in right.iter().enumerate() {
                    c[t + j] += x;
                }
            }
            next.push(c);
        }
        row = next;
    }
    Polynomial::from_bigints(0, row.swap_remove(k))
}

/// `F(M(n); q) = (1 + q)(1 + q^2)...(1 + q^n)`.
pub fn partition_poly(n: usize) -> Polynomial {
    almkvist_dense(n, 2)
}

fn almkvist_dense(n: usize, r: usize) -> Polynomial {
    let mut a = vec![BigInt::one()];
    for i in 1..=n {
        mul_geometric_block(&mut a, i, r);
    }
    Polynomial::from_bigints(0, a)
}

/// `f_{n,r}(q) = prod_{i=1}^n (1 - q^{ri}) / (1 - q^i)`, each factor expanded
/// as `1 + q^i + ... + q^{(r-1)i}`.
pub fn almkvist(n: usize, r: usize) -> Result<Polynomial> {
    if r == 0 {
        return Err(Error::InvalidParameter("almkvist needs r >= 1".into()));
    }
    Ok(almkvist_dense(n, r))
}

/// Eulerian numbers `<n, k>` for `k = 0..n`, from the descent recurrence.
fn eulerian_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); m];
        for k in 0..m {
            let mut v = BigInt::zero();
            if k < row.len() {
                v += BigInt::from(k + 1) * &row[k];
            }
            if k >= 1 && k - 1 < row.len() {
                v += BigInt::from(m - k) * &row[k - 1];
            }
            next[k] = v;
        }
        row = next;
    }
    row
}

/// Eulerian polynomial `sum_{sigma in S_n} q^{des(sigma)}`, darga `n - 1`.
pub fn eulerian(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidParameter("eulerian needs n >= 1".into()));
    }
    Ok(Polynomial::from_bigints(0, eulerian_row(n)))
}

/// Narayana polynomial with `(1/n) binom(n,k) binom(n,k-1)` at `q^{k-1}`.
pub fn narayana(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidParameter("narayana needs n >= 1".into()));
    }
    let n_i = n as i64;
    let coeffs = (1..=n_i)
        .map(|k| binom(n_i, k) * binom(n_i, k - 1) / BigInt::from(n_i))
        .collect();
    Ok(Polynomial::from_bigints(0, coeffs))
}

/// Derangement polynomial by excedances,
/// `d_n(q) = sum_{k=0}^n (-1)^{n-k} binom(n,k) A_k(q)` with `A_0 = 1`.
/// `d_1` is the zero polynomial.
pub fn derangement(n: usize) -> Polynomial {
    let mut acc = vec![BigInt::zero(); n.max(1)];
    for k in 0..=n {
        let row = if k == 0 {
            vec![BigInt::one()]
        } else {
            eulerian_row(k)
        };
        let mut w = binom(n as i64, k as i64);
        if (n - k) % 2 == 1 {
            w = -w;
        }
        for (t, x) in row.iter().enumerate() {
            acc[t] += &w * x;
        }
    }
    Polynomial::from_bigints(0, acc)
}

/// A named family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    Chain(usize),
    Boolean(usize),
    Gaussian(usize, usize),
    Partition(usize),
    Almkvist(usize, usize),
    Eulerian(usize),
    Narayana(usize),
    Derangement(usize),
}

impl FamilyId {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::Chain(_) => "chain",
            FamilyId::Boolean(_) => "boolean",
            FamilyId::Gaussian(..) => "gaussian",
            FamilyId::Partition(_) => "partition",
            FamilyId::Almkvist(..) => "almkvist",
            FamilyId::Eulerian(_) => "eulerian",
            FamilyId::Narayana(_) => "narayana",
            FamilyId::Derangement(_) => "derangement",
        }
    }

    /// Builds a family from its name and integer parameters.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Self> {
        let want = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "family {name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let id = match name {
            "chain" => want(1).map(|_| FamilyId::Chain(params[0])),
            "boolean" => want(1).map(|_| FamilyId::Boolean(params[0])),
            "gaussian" => want(2).map(|_| FamilyId::Gaussian(params[0], params[1])),
            "partition" => want(1).map(|_| FamilyId::Partition(params[0])),
            "almkvist" => want(2).map(|_| FamilyId::Almkvist(params[0], params[1])),
            "eulerian" => want(1).map(|_| FamilyId::Eulerian(params[0])),
            "narayana" => want(1).map(|_| FamilyId::Narayana(params[0])),
            "derangement" => want(1).map(|_| FamilyId::Derangement(params[0])),
            other => Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        }?;
        id.validate()?;
        Ok(id)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilyId::Almkvist(_, 0) => {
                Err(Error::InvalidParameter("almkvist needs r >= 1".into()))
            }
            FamilyId::Eulerian(0) | FamilyId::Narayana(0) => Err(Error::InvalidParameter(format!(
                "{} needs n >= 1",
                self.name()
            ))),
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Polynomial> {
        match *self {
            FamilyId::Chain(n) => Ok(chain_poly(n)),
            FamilyId::Boolean(n) => Ok(boolean_poly(n)),
            FamilyId::Gaussian(m, n) => Ok(gaussian(m, n)),
            FamilyId::Partition(n) => Ok(partition_poly(n)),
            FamilyId::Almkvist(n, r) => almkvist(n, r),
            FamilyId::Eulerian(n) => eulerian(n),
            FamilyId::Narayana(n) => narayana(n),
            FamilyId::Derangement(n) => Ok(derangement(n)),
        }
    }

    /// Darga of the generated polynomial (for the zero `d_1`, 0).
    pub fn darga(&self) -> usize {
        match *self {
            FamilyId::Chain(n) | FamilyId::Boolean(n) => n,
            FamilyId::Gaussian(m, n) => m * n,
            FamilyId::Partition(n) => n * (n + 1) / 2,
            FamilyId::Almkvist(n, r) => (r - 1) * n * (n + 1) / 2,
            FamilyId::Eulerian(n) | FamilyId::Narayana(n) => n - 1,
            FamilyId::Derangement(1) => 0,
            FamilyId::Derangement(n) => n,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyId::Gaussian(a, b) | FamilyId::Almkvist(a, b) => {
                write!(f, "{}({a},{b})", self.name())
            }
            FamilyId::Chain(n)
            | FamilyId::Boolean(n)
            | FamilyId::Partition(n)
            | FamilyId::Eulerian(n)
            | FamilyId::Narayana(n)
            | FamilyId::Derangement(n) => write!(f, "{}({n})", self.name()),
        }
    }
}

/// One cell of an Almkvist grid scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub r: usize,
    pub n: usize,
    pub darga: usize,
    pub palindromic: bool,
    pub unimodal: bool,
    pub lambda: bool,
    pub first_violation_index: Option<usize>,
}

pub const SCAN_CSV_HEADER: &str = "r,n,darga,palindromic,unimodal,lambda,first_violation_index";

impl ScanRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.r,
            self.n,
            self.darga,
            self.palindromic,
            self.unimodal,
            self.lambda,
            self.first_violation_index
                .map(|i| i.to_string())
                .unwrap_or_default()
        )
    }
}

/// Evaluates a single `(n, r)` cell.
pub fn scan_cell(n: usize, r: usize) -> Result<ScanRow> {
    let f = almkvist(n, r)?;
    let darga = (r - 1) * n * (n + 1) / 2;
    let palindromic = f.is_palindromic(Some(darga));
    let unimodal = is_unimodal(&f);
    let lambda = palindromic && lambda_test(&f, darga)?.lambda;
    Ok(ScanRow {
        r,
        n,
        darga,
        palindromic,
        unimodal,
        lambda,
        first_violation_index: first_unimodality_violation(&f),
    })
}

/// Scans `f_{n,r}` over the grid, rows ordered by `(r, n)`.
pub fn scan_almkvist(
    n_range: RangeInclusive<usize>,
    r_range: RangeInclusive<usize>,
) -> Result<Vec<ScanRow>> {
    scan_almkvist_with(n_range, r_range, Exec::default())
}

pub fn scan_almkvist_with(
    n_range: RangeInclusive<usize>,
    r_range: RangeInclusive<usize>,
    exec: Exec,
) -> Result<Vec<ScanRow>> {
    if n_range.is_empty() || r_range.is_empty() {
        return Err(Error::InvalidParameter(
            "scan ranges must be nonempty".into(),
        ));
    }
    if *r_range.start() == 0 {
        return Err(Error::InvalidParameter("almkvist needs r >= 1".into()));
    }
    let mut cells: Vec<(usize, usize)> = r_range
        .flat_map(|r| n_range.clone().map(move |n| (r, n)))
        .collect();
    // Largest cells first so the parallel pool stays balanced.
    cells.sort_by_key(|&(r, n)| std::cmp::Reverse((r - 1) * n * (n + 1)));
    let mut rows = par::map_slice(exec, &cells, |&(r, n)| scan_cell(n, r))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|row| (row.r, row.n));
    Ok(rows)
}
