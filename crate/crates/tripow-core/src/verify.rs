//! Independent oracles and the equivalence suite.
//!
//! Everything here recomputes matrix powers or coefficients by a route
//! that shares nothing with the closed-form path: plain squaring,
//! back-substituted inverses, and an exact confluent Vandermonde solve.
//! Arithmetic is exact, so every comparison is equality, no tolerances.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::closed_form::{gen_binom, ClosedFormTable};
use crate::diagonal::group_diagonal;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::TriMatrix;
use crate::rational::Rational;

/// M^n for n >= 0 by exponentiation by squaring. M^0 is the identity.
pub fn direct_power<F: Field>(m: &TriMatrix<F>, n: u64) -> TriMatrix<F> {
    let mut result = TriMatrix::identity(m.dim());
    let mut base = m.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base);
        }
    }
    result
}

/// Exact inverse of an upper-triangular matrix by back-substitution.
///
/// Errors if a diagonal entry is zero.
pub fn tri_inverse<F: Field>(m: &TriMatrix<F>) -> Result<TriMatrix<F>> {
    if let Some(position) = m.first_zero_diagonal() {
        return Err(Error::SingularMatrix { position });
    }
    let k = m.dim();
    let mut rows = vec![vec![F::zero(); k]; k];
    for i in (1..=k).rev() {
        rows[i - 1][i - 1] = F::one() / m.entry(i, i).clone();
        for j in (i + 1)..=k {
            // Solve sum_{t=i..j} m[i,t] * inv[t,j] = 0 for inv[i,j].
            let mut acc = F::zero();
            for t in (i + 1)..=j {
                acc = acc + m.entry(i, t).clone() * rows[t - 1][j - 1].clone();
            }
            rows[i - 1][j - 1] = -(acc / m.entry(i, i).clone());
        }
    }
    TriMatrix::from_rows(rows)
}

/// Exact solve of a square linear system by Gaussian elimination with
/// nonzero-pivot selection. Errors if the matrix is singular.
fn solve_linear_system(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = b.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::ConfluentSystemSingular)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &a[col][col];
            for c in col..n {
                a[r][c] = &a[r][c] - &(&factor * &a[col][c]);
            }
            b[r] = &b[r] - &(&factor * &b[col]);
        }
    }
    let mut x = vec![Rational::zero(); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for c in (row + 1)..n {
            acc = acc - &a[row][c] * &x[c];
        }
        x[row] = acc / a[row][row].clone();
    }
    Ok(x)
}

/// Derives the closed-form coefficients of one cell from first powers
/// alone: computes the (i,j) entry of M^1..M^D by direct multiplication
/// (D = j - i + 1) and solves the exact confluent Vandermonde system in
/// the basis `binom(n-1, s-1) * lambda_r^(n-s)`.
///
/// Returns one coefficient list per diagonal group, in the grouping's
/// first-occurrence order, shaped exactly like
/// [`CellClosedForm::coefficients`](crate::CellClosedForm::coefficients).
pub fn confluent_coefficients(
    m: &TriMatrix<Rational>,
    i: usize,
    j: usize,
) -> Result<Vec<Vec<Rational>>> {
    m.check_cell(i, j)?;
    let grouping = group_diagonal(m, i, j)?;
    let shape: Vec<usize> = grouping
        .groups()
        .iter()
        .map(|g| g.multiplicity())
        .collect();
    let d = j - i + 1;
    debug_assert_eq!(shape.iter().sum::<usize>(), d);

    let mut rhs = Vec::with_capacity(d);
    let mut power = m.clone();
    for _ in 0..d {
        rhs.push(power.entry(i, j).clone());
        power = power.mul(m);
    }

    let mut rows = Vec::with_capacity(d);
    for n in 1..=(d as i64) {
        let mut row = Vec::with_capacity(d);
        for (g, group) in grouping.groups().iter().enumerate() {
            for s in 1..=shape[g] {
                let b = gen_binom(n - 1, s - 1);
                let entry = if b.is_zero() {
                    Rational::zero()
                } else {
                    Rational::from(b) * group.value().pow(n - s as i64)?
                };
                row.push(entry);
            }
        }
        rows.push(row);
    }

    let flat = solve_linear_system(rows, rhs)?;
    let mut out = Vec::with_capacity(shape.len());
    let mut it = flat.into_iter();
    for len in shape {
        out.push(it.by_ref().take(len).collect());
    }
    Ok(out)
}

/// What a single disagreement looked like.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub i: usize,
    pub j: usize,
    /// The power at which entries disagreed, or `None` for a coefficient
    /// cross-check.
    pub n: Option<i64>,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n {
            Some(n) => write!(
                f,
                "cell ({}, {}) at n = {}: expected {}, got {}",
                self.i, self.j, n, self.expected, self.got
            ),
            None => write!(
                f,
                "cell ({}, {}) coefficients: expected {}, got {}",
                self.i, self.j, self.expected, self.got
            ),
        }
    }
}

/// Outcome of [`equivalence_suite`]: exact comparisons only, so passing
/// means every cell/power pair and every coefficient block matched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub fixture: String,
    pub n_min: i64,
    pub n_max: i64,
    pub comparisons: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn first_mismatch(&self) -> Option<&Mismatch> {
        self.mismatches.first()
    }

    /// Cells (1-based, upper triangle) that had at least one mismatch.
    pub fn failing_cells(&self) -> Vec<(usize, usize)> {
        let mut cells: Vec<(usize, usize)> = self.mismatches.iter().map(|m| (m.i, m.j)).collect();
        cells.sort_unstable();
        cells.dedup();
        cells
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fixture: {}", self.fixture)?;
        writeln!(f, "powers: {}..={}", self.n_min, self.n_max)?;
        writeln!(f, "comparisons: {}", self.comparisons)?;
        match self.first_mismatch() {
            None => write!(f, "result: PASS"),
            Some(first) => {
                writeln!(f, "mismatches: {}", self.mismatches.len())?;
                writeln!(f, "first mismatch: {first}")?;
                write!(f, "result: FAIL")
            }
        }
    }
}

/// Cross-checks the closed-form path against the independent oracles:
/// direct powers for n >= 0, powers of the exact inverse for n < 0, and
/// the confluent solve for every cell's coefficients.
///
/// Mismatches are collected in the report, not raised. Preconditions
/// (valid range, nonsingular when the range dips below 1) are errors.
pub fn equivalence_suite(
    fixture: impl Into<String>,
    m: &TriMatrix<Rational>,
    n_min: i64,
    n_max: i64,
) -> Result<VerificationReport> {
    if n_min > n_max {
        return Err(Error::InvalidRange { n_min, n_max });
    }
    if n_min <= 0 && m.is_singular() {
        return Err(Error::NonPositivePowerOfSingular { n: n_min });
    }
    let table = ClosedFormTable::build(m)?;
    let inverse = if n_min < 0 { Some(tri_inverse(m)?) } else { None };

    let mut comparisons = 0;
    let mut mismatches = Vec::new();
    for n in n_min..=n_max {
        let expected = if n >= 0 {
            direct_power(m, n as u64)
        } else {
            direct_power(inverse.as_ref().expect("inverse built"), n.unsigned_abs())
        };
        let got = table.power(n)?;
        for i in 1..=m.dim() {
            for j in i..=m.dim() {
                comparisons += 1;
                if expected.entry(i, j) != got.entry(i, j) {
                    mismatches.push(Mismatch {
                        i,
                        j,
                        n: Some(n),
                        expected: alloc::format!("{}", expected.entry(i, j)),
                        got: alloc::format!("{}", got.entry(i, j)),
                    });
                }
            }
        }
    }

    for i in 1..=m.dim() {
        for j in i..=m.dim() {
            comparisons += 1;
            let oracle = confluent_coefficients(m, i, j)?;
            let extracted = table.cell(i, j)?.coefficients();
            if oracle != extracted {
                mismatches.push(Mismatch {
                    i,
                    j,
                    n: None,
                    expected: alloc::format!("{oracle:?}"),
                    got: alloc::format!("{extracted:?}"),
                });
            }
        }
    }

    Ok(VerificationReport {
        fixture: fixture.into(),
        n_min,
        n_max,
        comparisons,
        mismatches,
    })
}
