//! The space `P_n` of palindromic polynomials of darga `n` and its S/A/B bases.
//!
//! A basic sequence `f_0, f_1, ...` (each `f_j` palindromic of darga `j` with
//! nonzero constant term) induces the basis `q^j f_{n-2j}`, `0 <= j <= n/2`.
//! Coordinates are computed by peeling off the lowest term repeatedly; the
//! closed-form transition matrices give a second, independent route.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{int, parse_coefficient, Coefficient, Polynomial};

/// Dimension of `P_n`.
pub fn space_dim(n: usize) -> usize {
    n / 2 + 1
}

/// Binomial coefficient, zero unless `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// The Chebyshev inversion coefficient `C(n, i) = (-1)^i n/(n-i) binom(n-i, i)`,
/// evaluated in the division-free form `(-1)^i [binom(n-i, i) + binom(n-i-1, i-1)]`
/// so that `C(0, 0) = 1`.
pub fn chebyshev_c(n: usize, i: usize) -> Result<BigInt> {
    if i > n / 2 {
        return Err(Error::OutOfRange {
            index: i,
            max: n / 2,
        });
    }
    let (n, i) = (n as i64, i as i64);
    let magnitude = binom(n - i, i) + binom(n - i - 1, i - 1);
    Ok(if i % 2 == 0 { magnitude } else { -magnitude })
}

/// One of the three basic palindromic sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisId {
    /// `S_0 = 1`, `S_j = 1 + q^j`.
    S,
    /// `A_j = 1 + q + ... + q^j`.
    A,
    /// `B_j = (1 + q)^j`.
    B,
}

impl BasisId {
    pub const ALL: [BasisId; 3] = [BasisId::S, BasisId::A, BasisId::B];

    pub fn as_char(self) -> char {
        match self {
            BasisId::S => 'S',
            BasisId::A => 'A',
            BasisId::B => 'B',
        }
    }

    /// The `j`-th member of the basic sequence.
    pub fn member(self, j: usize) -> Polynomial {
        match self {
            BasisId::S if j == 0 => Polynomial::one(),
            BasisId::S => {
                let mut c = vec![Coefficient::zero(); j + 1];
                c[0] = Coefficient::one();
                c[j] = Coefficient::one();
                Polynomial::from_coeffs(0, c)
            }
            BasisId::A => Polynomial::from_coeffs(0, vec![Coefficient::one(); j + 1]),
            BasisId::B => {
                Polynomial::from_bigints(0, (0..=j as i64).map(|k| binom(j as i64, k)).collect())
            }
        }
    }

    /// Basis element `q^j f_{n-2j}` of `P_n`.
    pub fn element(self, n: usize, j: usize) -> Polynomial {
        self.member(n - 2 * j).shift(j)
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for BasisId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "S" | "s" => Ok(BasisId::S),
            "A" | "a" => Ok(BasisId::A),
            "B" | "b" => Ok(BasisId::B),
            other => Err(Error::InvalidParameter(format!(
                "unknown basis {other:?}, expected S, A or B"
            ))),
        }
    }
}

impl Serialize for BasisId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BasisId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Coordinates of an element of `P_n`: entry `j` multiplies `q^j f_{n-2j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateVector {
    darga: usize,
    basis: BasisId,
    entries: Vec<Coefficient>,
}

impl CoordinateVector {
    pub fn new(darga: usize, basis: BasisId, entries: Vec<Coefficient>) -> Result<Self> {
        if entries.len() != space_dim(darga) {
            return Err(Error::InvalidParameter(format!(
                "darga {darga} needs {} coordinates, got {}",
                space_dim(darga),
                entries.len()
            )));
        }
        Ok(Self {
            darga,
            basis,
            entries,
        })
    }

    pub fn from_ints(darga: usize, basis: BasisId, entries: &[i64]) -> Result<Self> {
        Self::new(darga, basis, entries.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(darga: usize, basis: BasisId) -> Self {
        Self {
            darga,
            basis,
            entries: vec![Coefficient::zero(); space_dim(darga)],
        }
    }

    pub fn darga(&self) -> usize {
        self.darga
    }

    pub fn basis(&self) -> BasisId {
        self.basis
    }

    pub fn entries(&self) -> &[Coefficient] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Coefficient> {
        self.entries
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|c| *c >= Coefficient::zero())
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.entries.iter().all(|c| *c > Coefficient::zero())
    }

    /// `sum_j v_j q^j`.
    pub fn as_polynomial(&self) -> Polynomial {
        Polynomial::from_coeffs(0, self.entries.clone())
    }
}

impl fmt::Display for CoordinateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct CoordinateRepr {
    darga: usize,
    basis: BasisId,
    entries: Vec<String>,
}

impl Serialize for CoordinateVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CoordinateRepr {
            darga: self.darga,
            basis: self.basis,
            entries: self.entries.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoordinateVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CoordinateRepr::deserialize(d)?;
        let entries = repr
            .entries
            .iter()
            .map(|c| parse_coefficient(c))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        CoordinateVector::new(repr.darga, repr.basis, entries).map_err(serde::de::Error::custom)
    }
}

/// Peel-off expansion of `f` in the basis induced by `member`.
///
/// Subtracts `c q^j f_{n-2j}` for `j = 0, 1, ...`, where `c` clears the
/// coefficient of `q^j`. Works for any basic sequence whose members have a
/// nonzero constant term.
pub(crate) fn peel_off<F>(f: &Polynomial, n: usize, member: F) -> Result<Vec<Coefficient>>
where
    F: Fn(usize) -> Polynomial,
{
    if !f.is_palindromic(Some(n)) {
        return Err(Error::NotPalindromic {
            poly: f.clone(),
            darga: n,
        });
    }
    let mut rem = f.dense();
    rem.resize(n + 1, Coefficient::zero());
    let mut out = Vec::with_capacity(space_dim(n));
    for j in 0..space_dim(n) {
        let m = member(n - 2 * j);
        let c = &rem[j] / &m.coeff(0);
        if !c.is_zero() {
            for (k, mk) in m.dense().iter().enumerate() {
                rem[j + k] -= &c * mk;
            }
        }
        out.push(c);
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    Ok(out)
}

/// Coordinates of `f` in `basis`, viewing `f` as a member of `P_n`.
pub fn coords(f: &Polynomial, n: usize, basis: BasisId) -> Result<CoordinateVector> {
    let entries = peel_off(f, n, |j| basis.member(j))?;
    CoordinateVector::new(n, basis, entries)
}

/// `sum_j v_j q^j f_{n-2j}` in the vector's basis.
pub fn expand(v: &CoordinateVector) -> Polynomial {
    let n = v.darga;
    let mut dense = vec![Coefficient::zero(); n + 1];
    for (j, c) in v.entries.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let m = v.basis.member(n - 2 * j);
        for (k, mk) in m.coeffs().iter().enumerate() {
            dense[j + k] += c * mk;
        }
    }
    Polynomial::from_coeffs(0, dense)
}

/// Coordinates via the closed-form matrices: the S-coordinates of `f` are its
/// lower-half coefficients `a_0, ..., a_{n/2}`, mapped by `M(basis, S)`.
pub fn coords_via_matrix(f: &Polynomial, n: usize, basis: BasisId) -> Result<CoordinateVector> {
    if !f.is_palindromic(Some(n)) {
        return Err(Error::NotPalindromic {
            poly: f.clone(),
            darga: n,
        });
    }
    let s = CoordinateVector::new(
        n,
        BasisId::S,
        (0..space_dim(n)).map(|j| f.coeff(j)).collect(),
    )?;
    transition_matrix(n, basis, BasisId::S).apply(&s)
}

/// A lower-triangular change-of-basis matrix on `P_n`.
///
/// Column `j` holds the `from`-coordinates of the `to`-basis element
/// `q^j g_{n-2j}`, so `coords_from = M(from, to) * coords_to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    darga: usize,
    from: BasisId,
    to: BasisId,
    rows: Vec<Vec<Coefficient>>,
}

impl TransitionMatrix {
    fn from_fn<F>(darga: usize, from: BasisId, to: BasisId, entry: F) -> Self
    where
        F: Fn(usize, usize) -> Coefficient,
    {
        let d = space_dim(darga);
        let rows = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        if j > i {
                            Coefficient::zero()
                        } else {
                            entry(i, j)
                        }
                    })
                    .collect()
            })
            .collect();
        Self {
            darga,
            from,
            to,
            rows,
        }
    }

    pub fn identity(darga: usize, basis: BasisId) -> Self {
        Self::from_fn(darga, basis, basis, |i, j| {
            if i == j {
                Coefficient::one()
            } else {
                Coefficient::zero()
            }
        })
    }

    pub fn darga(&self) -> usize {
        self.darga
    }

    pub fn from_basis(&self) -> BasisId {
        self.from
    }

    pub fn to_basis(&self) -> BasisId {
        self.to
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Coefficient {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Coefficient>] {
        &self.rows
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() })
        })
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, row)| row[i + 1..].iter().all(Zero::is_zero))
    }

    /// `M(a, b) * M(b, c) = M(a, c)`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.to != other.from || self.darga != other.darga {
            return Err(Error::WrongBasis {
                expected: self.to.as_char(),
                found: other.from.as_char(),
            });
        }
        Ok(Self::from_fn(self.darga, self.from, other.to, |i, j| {
            (j..=i).fold(Coefficient::zero(), |acc, k| {
                acc + &self.rows[i][k] * &other.rows[k][j]
            })
        }))
    }

    /// Maps `to`-coordinates to `from`-coordinates.
    pub fn apply(&self, v: &CoordinateVector) -> Result<CoordinateVector> {
        if v.basis != self.to {
            return Err(Error::WrongBasis {
                expected: self.to.as_char(),
                found: v.basis.as_char(),
            });
        }
        if v.darga != self.darga {
            return Err(Error::InvalidParameter(format!(
                "matrix acts on darga {}, vector has darga {}",
                self.darga, v.darga
            )));
        }
        let entries = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                (0..=i).fold(Coefficient::zero(), |acc, k| acc + &row[k] * &v.entries[k])
            })
            .collect();
        CoordinateVector::new(self.darga, self.from, entries)
    }

    /// Row-major CSV with every entry, zeros included.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Lower triangle with right-aligned columns.
    pub fn to_text(&self) -> String {
        let width = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row[..=i].iter())
            .map(|c| c.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = format!("M({},{}) darga {}\n", self.from, self.to, self.darga);
        for (i, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row[..=i]
                .iter()
                .map(|c| format!("{:>width$}", c.to_string()))
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

fn big(v: BigInt) -> Coefficient {
    Coefficient::from_integer(v)
}

/// Closed-form transition matrix `M(from, to)` on `P_n`.
pub fn transition_matrix(n: usize, from: BasisId, to: BasisId) -> TransitionMatrix {
    use BasisId::*;
    let col = |j: usize| (n - 2 * j) as i64;
    match (from, to) {
        _ if from == to => TransitionMatrix::identity(n, from),
        (S, A) => TransitionMatrix::from_fn(n, S, A, |_, _| Coefficient::one()),
        (S, B) => TransitionMatrix::from_fn(n, S, B, |i, j| big(binom(col(j), (i - j) as i64))),
        (A, S) => TransitionMatrix::from_fn(n, A, S, |i, j| match i - j {
            0 => int(1),
            1 => int(-1),
            _ => Coefficient::zero(),
        }),
        (A, B) => TransitionMatrix::from_fn(n, A, B, |i, j| {
            let k = (i - j) as i64;
            big(binom(col(j), k) - binom(col(j), k - 1))
        }),
        (B, S) => TransitionMatrix::from_fn(n, B, S, |i, j| {
            big(chebyshev_c(n - 2 * j, i - j).expect("i - j <= (n - 2j)/2 on the lower triangle"))
        }),
        (B, A) => transition_matrix(n, B, S)
            .compose(&transition_matrix(n, S, A))
            .expect("bases chain"),
        _ => unreachable!("all pairs covered"),
    }
}

/// `M(from, to)` built column by column from peel-off coordinates of the
/// `to`-basis elements. Independent of the closed forms.
pub fn transition_matrix_by_peel_off(n: usize, from: BasisId, to: BasisId) -> TransitionMatrix {
    let columns: Vec<Vec<Coefficient>> = (0..space_dim(n))
        .map(|j| {
            coords(&to.element(n, j), n, from)
                .expect("basis elements lie in P_n")
                .into_entries()
        })
        .collect();
    TransitionMatrix::from_fn(n, from, to, |i, j| columns[j][i].clone())
}
