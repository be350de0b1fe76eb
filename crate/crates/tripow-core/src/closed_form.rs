//! Closed-form coefficients for matrices with repeated diagonal values.
//!
//! The (i,j) entry of M^n is written as
//!
//! ```text
//! sum_{r=1..num(i,j)} sum_{s=1..mpy(r)} c[i,j,r,s] * binom(n-1, s-1) * lambda_r^(n-s)
//! ```
//!
//! where lambda_1, lambda_2, ... are the distinct diagonal values on rows
//! i..=j and mpy(r) their multiplicities. The coefficients do not depend
//! on n, so one extraction serves every integer power.
//!
//! Extraction works by perturbing the diagonal symbolically (making it
//! distinct), running the power-factor recursion over rational functions,
//! and taking exact limits at zero: for the group with positions Q,
//!
//! ```text
//! c[i,j,r,s] = limit at 0 of  sum_{q in Q} (-delta(q))^(s-1) * p~[i,j,q]
//! ```
//!
//! with `(-delta(q))^0 = 1`. The same sum taken past s = mpy(r) vanishes
//! identically, which is what caps the inner sum.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagonal::{group_diagonal, DiagonalGrouping, PerturbationPlan};
use crate::error::{Error, Result};
use crate::factors::PowerFactorTable;
use crate::matrix::TriMatrix;
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use crate::rational_function::RationalFunction;

/// Generalized binomial coefficient by falling factorial:
/// `n (n-1) ... (n-t+1) / t!`. Defined for negative `n`; the value is
/// always an exact integer. `gen_binom(n, 0) = 1`.
pub fn gen_binom(n: i64, t: usize) -> BigInt {
    let mut numer = BigInt::one();
    let mut t_fact = BigInt::one();
    for u in 0..t {
        numer *= BigInt::from(n) - BigInt::from(u as i64);
        t_fact *= BigInt::from(u as i64 + 1);
    }
    debug_assert!((&numer % &t_fact).is_zero());
    numer / t_fact
}

/// One term `c * binom(n-1, s-1) * lambda^(n-s)`, skipping the power when
/// the binomial factor vanishes (so a zero eigenvalue never raises an
/// error on a term that contributes nothing).
fn basis_term(lambda: &Rational, c: &Rational, n: i64, s: usize) -> Result<Rational> {
    let b = gen_binom(n - 1, s - 1);
    if b.is_zero() {
        return Ok(Rational::zero());
    }
    let power = lambda.pow(n - s as i64).map_err(|e| match e {
        Error::ZeroToNegativePower => Error::NonPositivePowerOfSingular { n },
        other => other,
    })?;
    Ok(c * &Rational::from(b) * power)
}

/// The closed form of one matrix entry: the diagonal grouping of rows
/// i..=j plus the coefficient block `c[r][s-1]` (mpy(r) coefficients per
/// group, in the grouping's first-occurrence order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellClosedForm {
    i: usize,
    j: usize,
    grouping: DiagonalGrouping,
    coefficients: Vec<Vec<Rational>>,
}

impl CellClosedForm {
    pub fn cell(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn grouping(&self) -> &DiagonalGrouping {
        &self.grouping
    }

    /// `coefficients()[r][s-1]` is the coefficient for the r-th group
    /// (0-based here) and power index s.
    pub fn coefficients(&self) -> &[Vec<Rational>] {
        &self.coefficients
    }

    /// Evaluates the closed form at an integer power.
    ///
    /// If some eigenvalue on the range is zero, only n >= 1 is defined.
    pub fn eval(&self, n: i64) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (group, coeffs) in self.grouping.groups().iter().zip(&self.coefficients) {
            for (s_minus_1, c) in coeffs.iter().enumerate() {
                acc = acc + basis_term(group.value(), c, n, s_minus_1 + 1)?;
            }
        }
        Ok(acc)
    }
}

/// The limit at zero of `sum_{q in Q} (-delta(q))^(s-1) * p~[i,j,q]`,
/// where `p~` is the power-factor table of the perturbed matrix.
///
/// For s <= mpy of the group this is the closed-form coefficient; past
/// the multiplicity it is identically zero. A pole here means the plan
/// and table do not belong together.
pub fn group_limit_coefficient(
    table: &PowerFactorTable<RationalFunction>,
    plan: &PerturbationPlan,
    i: usize,
    j: usize,
    positions: &[usize],
    s: usize,
) -> Result<Rational> {
    debug_assert!(s >= 1);
    let mut acc = RationalFunction::zero();
    for &q in positions {
        let weight = RationalFunction::from((-plan.delta(q).clone()).pow(s - 1));
        acc = acc + weight * table.get(i, j, q);
    }
    acc.eval_at_zero().map_err(|e| match e {
        Error::PoleAtZero => Error::UnexpectedPole { i, j },
        other => other,
    })
}

fn extract_with_table(
    m: &TriMatrix<Rational>,
    plan: &PerturbationPlan,
    table: &PowerFactorTable<RationalFunction>,
    i: usize,
    j: usize,
) -> Result<CellClosedForm> {
    let grouping = group_diagonal(m, i, j)?;
    let mut coefficients = Vec::with_capacity(grouping.num());
    for group in grouping.groups() {
        let mut cs = Vec::with_capacity(group.multiplicity());
        for s in 1..=group.multiplicity() {
            cs.push(group_limit_coefficient(
                table,
                plan,
                i,
                j,
                group.positions(),
                s,
            )?);
        }
        coefficients.push(cs);
    }
    Ok(CellClosedForm {
        i,
        j,
        grouping,
        coefficients,
    })
}

/// Extracts the closed form of a single cell.
///
/// The factor recursion is bounded at column j, so a single-entry query
/// does not pay for the whole matrix.
pub fn extract_cell(m: &TriMatrix<Rational>, i: usize, j: usize) -> Result<CellClosedForm> {
    m.check_cell(i, j)?;
    let plan = PerturbationPlan::build(m);
    let perturbed = plan.apply(m)?;
    let table = PowerFactorTable::build_columns(&perturbed, j)?;
    extract_with_table(m, &plan, &table, i, j)
}

/// Closed forms for every cell of the upper triangle, sharing one
/// perturbed factor table. Immutable once built, and the coefficients
/// serve every integer power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormTable {
    k: usize,
    cells: Vec<CellClosedForm>,
}

impl ClosedFormTable {
    pub fn build(m: &TriMatrix<Rational>) -> Result<Self> {
        Self::build_with_plan(m, &PerturbationPlan::build(m))
    }

    /// Builds with a caller-supplied perturbation plan. Any valid plan
    /// yields the same table; the limit does not see the exponent
    /// assignment.
    pub fn build_with_plan(m: &TriMatrix<Rational>, plan: &PerturbationPlan) -> Result<Self> {
        let perturbed = plan.apply(m)?;
        let table = PowerFactorTable::build(&perturbed)?;
        let k = m.dim();
        let mut cells = Vec::with_capacity(k * (k + 1) / 2);
        for i in 1..=k {
            for j in i..=k {
                cells.push(extract_with_table(m, plan, &table, i, j)?);
            }
        }
        Ok(ClosedFormTable { k, cells })
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn cell(&self, i: usize, j: usize) -> Result<&CellClosedForm> {
        if i < 1 || i > j || j > self.k {
            return Err(Error::CellOutOfRange { i, j, k: self.k });
        }
        let at = (i - 1) * self.k - (i - 1) * (i - 2) / 2 + (j - i);
        Ok(&self.cells[at])
    }

    pub fn cells(&self) -> &[CellClosedForm] {
        &self.cells
    }

    /// 1-based position of the first zero diagonal value, if any.
    pub fn first_zero_diagonal(&self) -> Option<usize> {
        (1..=self.k).find(|&i| {
            self.cell(i, i)
                .expect("diagonal cell exists")
                .grouping()
                .groups()[0]
                .value()
                .is_zero()
        })
    }

    /// The (i,j) entry of M^n; zero below the diagonal.
    pub fn entry_power(&self, i: usize, j: usize, n: i64) -> Result<Rational> {
        if i > j {
            if j < 1 || i > self.k {
                return Err(Error::CellOutOfRange { i, j, k: self.k });
            }
            return Ok(Rational::zero());
        }
        self.cell(i, j)?.eval(n)
    }

    /// The whole matrix M^n. For n <= 0 the matrix must be nonsingular.
    pub fn power(&self, n: i64) -> Result<TriMatrix<Rational>> {
        if n <= 0 && self.first_zero_diagonal().is_some() {
            return Err(Error::NonPositivePowerOfSingular { n });
        }
        let rows = (1..=self.k)
            .map(|i| {
                (1..=self.k)
                    .map(|j| {
                        if i > j {
                            Ok(Rational::zero())
                        } else {
                            self.cell(i, j)?.eval(n)
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        TriMatrix::from_rows(rows)
    }
}

/// M^n through a freshly built closed-form table. Build a
/// [`ClosedFormTable`] once instead when asking for several powers.
pub fn matrix_power(m: &TriMatrix<Rational>, n: i64) -> Result<TriMatrix<Rational>> {
    if n <= 0 && m.is_singular() {
        return Err(Error::NonPositivePowerOfSingular { n });
    }
    ClosedFormTable::build(m)?.power(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn mat(rows: &[&[i64]]) -> TriMatrix<Rational> {
        TriMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn mixed_6x6() -> TriMatrix<Rational> {
        mat(&[
            &[3, 2, 3, 5, 4, 2],
            &[0, 5, 2, 4, 3, 1],
            &[0, 0, 3, 2, 6, 4],
            &[0, 0, 0, 5, 5, 1],
            &[0, 0, 0, 0, 7, 2],
            &[0, 0, 0, 0, 0, 3],
        ])
    }

    fn constant_4x4() -> TriMatrix<Rational> {
        mat(&[&[5, 2, 1, 3], &[0, 5, 4, 2], &[0, 0, 5, 1], &[0, 0, 0, 5]])
    }

    fn coeffs_of(m: &TriMatrix<Rational>, i: usize, j: usize) -> Vec<(Rational, Vec<Rational>)> {
        let cell = extract_cell(m, i, j).unwrap();
        cell.grouping()
            .groups()
            .iter()
            .zip(cell.coefficients())
            .map(|(g, cs)| (g.value().clone(), cs.clone()))
            .collect()
    }

    #[test]
    fn gen_binom_values() {
        assert_eq!(gen_binom(5, 0), BigInt::from(1));
        assert_eq!(gen_binom(3, 5), BigInt::from(0));
        assert_eq!(gen_binom(-3, 2), BigInt::from(6));
        assert_eq!(gen_binom(-1, 3), BigInt::from(-1));
        assert_eq!(gen_binom(0, 2), BigInt::from(0));
        assert_eq!(gen_binom(999, 2), BigInt::from(999 * 998 / 2));
    }

    #[test]
    fn mixed_6x6_cell_1_6_coefficients() {
        let got = coeffs_of(&mixed_6x6(), 1, 6);
        let want = vec![
            (
                Rational::from_int(3),
                vec![rat(-203, 32), rat(5, 8), rat(15, 2)],
            ),
            (Rational::from_int(5), vec![rat(-59, 2), rat(-60, 1)]),
            (Rational::from_int(7), vec![rat(1211, 32)]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn mixed_6x6_cell_2_4_coefficients() {
        let got = coeffs_of(&mixed_6x6(), 2, 4);
        let want = vec![
            (Rational::from_int(5), vec![rat(1, 1), rat(30, 1)]),
            (Rational::from_int(3), vec![rat(3, 1)]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn constant_4x4_cell_1_4_coefficients() {
        let got = coeffs_of(&constant_4x4(), 1, 4);
        let want = vec![(
            Rational::from_int(5),
            vec![rat(3, 1), rat(20, 1), rat(33, 1), rat(40, 1)],
        )];
        assert_eq!(got, want);
    }

    #[test]
    fn eval_reproduces_first_power() {
        let table = ClosedFormTable::build(&mixed_6x6()).unwrap();
        assert_eq!(
            table.entry_power(1, 6, 1).unwrap(),
            Rational::from_int(2)
        );
        let m = mixed_6x6();
        for i in 1..=6 {
            for j in i..=6 {
                assert_eq!(&table.entry_power(i, j, 1).unwrap(), m.entry(i, j));
            }
        }
    }

    #[test]
    fn eval_hand_checked_squares() {
        let table = ClosedFormTable::build(&mixed_6x6()).unwrap();
        assert_eq!(table.entry_power(2, 4, 2).unwrap(), Rational::from_int(44));
        let t4 = ClosedFormTable::build(&constant_4x4()).unwrap();
        assert_eq!(t4.entry_power(1, 4, 2).unwrap(), Rational::from_int(35));
    }

    #[test]
    fn power_identity_and_first() {
        let m = mixed_6x6();
        let table = ClosedFormTable::build(&m).unwrap();
        assert_eq!(table.power(0).unwrap(), TriMatrix::identity(6));
        assert_eq!(table.power(1).unwrap(), m);
        assert_eq!(matrix_power(&m, 1).unwrap(), m);
    }

    #[test]
    fn diagonal_cells_carry_their_entry_as_coefficient() {
        let m = mixed_6x6();
        let table = ClosedFormTable::build(&m).unwrap();
        for i in 1..=6 {
            let cell = table.cell(i, i).unwrap();
            assert_eq!(cell.coefficients(), &[vec![m.entry(i, i).clone()]]);
        }
    }

    #[test]
    fn distinct_diagonal_degenerates_to_power_factors() {
        let m = mat(&[&[1, 1, 1], &[0, 2, 1], &[0, 0, 3]]);
        let factors = PowerFactorTable::build(&m).unwrap();
        let table = ClosedFormTable::build(&m).unwrap();
        for i in 1..=3 {
            for j in i..=3 {
                let cell = table.cell(i, j).unwrap();
                for (group, cs) in cell.grouping().groups().iter().zip(cell.coefficients()) {
                    assert_eq!(group.multiplicity(), 1);
                    assert_eq!(cs.len(), 1);
                    assert_eq!(cs[0], factors.get(i, j, group.positions()[0]));
                }
            }
        }
    }

    #[test]
    fn plan_choice_does_not_change_the_table() {
        let m = mixed_6x6();
        let canonical = ClosedFormTable::build(&m).unwrap();
        let reversed = PerturbationPlan::from_exponents(&m, &[0, 0, 3, 2, 0, 1]).unwrap();
        let alt = ClosedFormTable::build_with_plan(&m, &reversed).unwrap();
        assert_eq!(canonical, alt);
        let spread = PerturbationPlan::from_exponents(&m, &[0, 0, 5, 2, 0, 9]).unwrap();
        assert_eq!(ClosedFormTable::build_with_plan(&m, &spread).unwrap(), canonical);
    }

    #[test]
    fn limit_past_multiplicity_vanishes() {
        for (m, i, j) in [(mixed_6x6(), 1, 6), (constant_4x4(), 1, 4)] {
            let plan = PerturbationPlan::build(&m);
            let perturbed = plan.apply(&m).unwrap();
            let table = PowerFactorTable::build(&perturbed).unwrap();
            for group in group_diagonal(&m, i, j).unwrap().groups() {
                let s = group.multiplicity() + 1;
                let c =
                    group_limit_coefficient(&table, &plan, i, j, group.positions(), s).unwrap();
                assert_eq!(c, Rational::zero());
            }
        }
    }

    #[test]
    fn zero_eigenvalue_rejects_nonpositive_powers() {
        let m = mat(&[&[0, 1, 2], &[0, 2, 1], &[0, 0, 0]]);
        let table = ClosedFormTable::build(&m).unwrap();
        assert_eq!(
            table.power(0),
            Err(Error::NonPositivePowerOfSingular { n: 0 })
        );
        assert_eq!(
            table.entry_power(1, 3, -1),
            Err(Error::NonPositivePowerOfSingular { n: -1 })
        );
        assert_eq!(
            matrix_power(&m, -2),
            Err(Error::NonPositivePowerOfSingular { n: -2 })
        );
        // Positive powers are fine.
        assert_eq!(table.entry_power(1, 1, 3).unwrap(), Rational::zero());
    }

    #[test]
    fn negative_powers_on_nonsingular_fixture() {
        let m = mat(&[&[1, 1, 1], &[0, 2, 1], &[0, 0, 3]]);
        let table = ClosedFormTable::build(&m).unwrap();
        assert_eq!(table.entry_power(1, 3, -1).unwrap(), rat(-1, 6));
    }
}
