//! Diagonal grouping and symbolic perturbation.
//!
//! Repeated diagonal values are what make the plain power-factor
//! recursion break down (its denominators are diagonal differences). The
//! types here describe the repetition structure of a diagonal range and
//! build the symbolic perturbation that makes all diagonal entries
//! distinct: each duplicate position q gets a monomial delta(q) = x^t
//! with a globally unique exponent, subtracted from its diagonal entry.
//! Setting the variable to zero recovers the original matrix.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use crate::rational_function::RationalFunction;

/// One distinct diagonal value on a range, with the 1-based diagonal
/// positions that carry it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalGroup {
    value: Rational,
    positions: Vec<usize>,
}

impl DiagonalGroup {
    pub fn value(&self) -> &Rational {
        &self.value
    }

    /// Positions in increasing order; all lie in the grouping's range.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn multiplicity(&self) -> usize {
        self.positions.len()
    }
}

/// The distinct diagonal values of rows i..=j, each with its multiplicity
/// and positions, ordered by first occurrence along the diagonal.
///
/// Multiplicities sum to `j - i + 1` and every index in the range appears
/// in exactly one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalGrouping {
    i: usize,
    j: usize,
    groups: Vec<DiagonalGroup>,
}

impl DiagonalGrouping {
    pub fn range(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    /// Number of distinct diagonal values on the range.
    pub fn num(&self) -> usize {
        self.groups.len()
    }

    pub fn groups(&self) -> &[DiagonalGroup] {
        &self.groups
    }
}

/// Groups the diagonal entries of rows i..=j (1-based, inclusive) by
/// value, in first-occurrence order.
pub fn group_diagonal(m: &TriMatrix<Rational>, i: usize, j: usize) -> Result<DiagonalGrouping> {
    m.check_cell(i, j)?;
    let mut groups: Vec<DiagonalGroup> = Vec::new();
    for q in i..=j {
        let v = m.entry(q, q);
        match groups.iter_mut().find(|g| &g.value == v) {
            Some(g) => g.positions.push(q),
            None => groups.push(DiagonalGroup {
                value: v.clone(),
                positions: alloc::vec![q],
            }),
        }
    }
    debug_assert_eq!(
        groups.iter().map(DiagonalGroup::multiplicity).sum::<usize>(),
        j - i + 1
    );
    Ok(DiagonalGrouping { i, j, groups })
}

/// Assignment of a perturbation monomial to each diagonal position.
///
/// delta(q) is the zero polynomial for unperturbed positions (the first
/// occurrence of every value) and a pure monomial `x^t` otherwise, with
/// all exponents pairwise distinct, so the perturbed diagonal entries
/// `m[q,q] - delta(q)` are pairwise distinct as polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerturbationPlan {
    deltas: Vec<Polynomial>,
}

impl PerturbationPlan {
    /// Builds the canonical plan for the full diagonal: walking positions
    /// in increasing order, every repeat of an already-seen value gets the
    /// next exponent t = 1, 2, 3, ...
    pub fn build(m: &TriMatrix<Rational>) -> Self {
        let grouping = group_diagonal(m, 1, m.dim()).expect("full range is valid");
        let mut exponents = alloc::vec![0usize; m.dim()];
        let mut next = 1;
        for q in 1..=m.dim() {
            let first = grouping
                .groups()
                .iter()
                .find(|g| g.positions().contains(&q))
                .expect("every position is grouped")
                .positions()[0];
            if q != first {
                exponents[q - 1] = next;
                next += 1;
            }
        }
        Self::from_exponents(m, &exponents).expect("canonical plan is valid")
    }

    /// Builds a plan from explicit exponents (0 = unperturbed), validating
    /// the construction rules against the matrix.
    pub fn from_exponents(m: &TriMatrix<Rational>, exponents: &[usize]) -> Result<Self> {
        let invalid = |why: String| Err(Error::InvalidPlan(why));
        if exponents.len() != m.dim() {
            return Err(Error::PlanDimensionMismatch {
                plan: exponents.len(),
                matrix: m.dim(),
            });
        }
        let grouping = group_diagonal(m, 1, m.dim())?;
        for g in grouping.groups() {
            let (first, rest) = g.positions().split_first().expect("groups are nonempty");
            if exponents[first - 1] != 0 {
                return invalid(format!("position {first} is a first occurrence, must be unperturbed"));
            }
            if let Some(&q) = rest.iter().find(|&&q| exponents[q - 1] == 0) {
                return invalid(format!("duplicate position {q} must be perturbed"));
            }
        }
        let mut seen: Vec<usize> = exponents.iter().copied().filter(|&t| t != 0).collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return invalid("perturbation exponents must be pairwise distinct".into());
        }
        let deltas = exponents
            .iter()
            .map(|&t| {
                if t == 0 {
                    Polynomial::zero()
                } else {
                    Polynomial::monomial(Rational::one(), t)
                }
            })
            .collect();
        let plan = PerturbationPlan { deltas };
        for a in 1..=m.dim() {
            for b in (a + 1)..=m.dim() {
                let da = Polynomial::from(m.entry(a, a).clone()) - plan.delta(a).clone();
                let db = Polynomial::from(m.entry(b, b).clone()) - plan.delta(b).clone();
                if da == db {
                    return invalid(format!(
                        "perturbed diagonal entries {a} and {b} are not distinct"
                    ));
                }
            }
        }
        Ok(plan)
    }

    pub fn dim(&self) -> usize {
        self.deltas.len()
    }

    /// The monomial subtracted at diagonal position q (1-based); zero for
    /// unperturbed positions.
    pub fn delta(&self, q: usize) -> &Polynomial {
        &self.deltas[q - 1]
    }

    /// True when no position is perturbed (already-distinct diagonal).
    pub fn is_empty(&self) -> bool {
        self.deltas.iter().all(Polynomial::is_zero)
    }

    /// Lifts the matrix into the rational-function field and subtracts
    /// delta(q) from each diagonal entry. The result has pairwise
    /// distinct diagonal entries; setting the variable to zero entry-wise
    /// recovers the input.
    pub fn apply(&self, m: &TriMatrix<Rational>) -> Result<TriMatrix<RationalFunction>> {
        if self.dim() != m.dim() {
            return Err(Error::PlanDimensionMismatch {
                plan: self.dim(),
                matrix: m.dim(),
            });
        }
        let rows = (1..=m.dim())
            .map(|i| {
                (1..=m.dim())
                    .map(|j| {
                        if i == j {
                            let p = Polynomial::from(m.entry(i, i).clone()) - self.delta(i).clone();
                            RationalFunction::from(p)
                        } else {
                            RationalFunction::constant(m.entry(i, j).clone())
                        }
                    })
                    .collect()
            })
            .collect();
        TriMatrix::from_rows(rows)
    }
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

    #[test]
    fn groups_full_range_by_first_occurrence() {
        let g = group_diagonal(&mixed_6x6(), 1, 6).unwrap();
        assert_eq!(g.num(), 3);
        let expect = [
            (Rational::from_int(3), vec![1, 3, 6]),
            (Rational::from_int(5), vec![2, 4]),
            (Rational::from_int(7), vec![5]),
        ];
        for (group, (value, positions)) in g.groups().iter().zip(&expect) {
            assert_eq!(group.value(), value);
            assert_eq!(group.positions(), positions.as_slice());
        }
    }

    #[test]
    fn groups_subrange() {
        let g = group_diagonal(&mixed_6x6(), 2, 4).unwrap();
        assert_eq!(g.num(), 2);
        assert_eq!(g.groups()[0].value(), &Rational::from_int(5));
        assert_eq!(g.groups()[0].positions(), &[2, 4]);
        assert_eq!(g.groups()[1].value(), &Rational::from_int(3));
        assert_eq!(g.groups()[1].positions(), &[3]);
    }

    #[test]
    fn singleton_range_is_one_group() {
        let g = group_diagonal(&mixed_6x6(), 4, 4).unwrap();
        assert_eq!(g.num(), 1);
        assert_eq!(g.groups()[0].multiplicity(), 1);
        assert_eq!(g.groups()[0].value(), &Rational::from_int(5));
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(group_diagonal(&mixed_6x6(), 0, 3).is_err());
        assert!(group_diagonal(&mixed_6x6(), 3, 7).is_err());
        assert!(group_diagonal(&mixed_6x6(), 4, 2).is_err());
    }

    #[test]
    fn canonical_plan_for_mixed_6x6() {
        let plan = PerturbationPlan::build(&mixed_6x6());
        for q in [1, 2, 5] {
            assert!(plan.delta(q).is_zero());
        }
        assert_eq!(plan.delta(3), &Polynomial::monomial(Rational::one(), 1));
        assert_eq!(plan.delta(4), &Polynomial::monomial(Rational::one(), 2));
        assert_eq!(plan.delta(6), &Polynomial::monomial(Rational::one(), 3));
    }

    #[test]
    fn canonical_plan_for_constant_diagonal() {
        let m = mat(&[&[5, 2, 1, 3], &[0, 5, 4, 2], &[0, 0, 5, 1], &[0, 0, 0, 5]]);
        let plan = PerturbationPlan::build(&m);
        assert!(plan.delta(1).is_zero());
        for (q, t) in [(2, 1), (3, 2), (4, 3)] {
            assert_eq!(plan.delta(q), &Polynomial::monomial(Rational::one(), t));
        }
    }

    #[test]
    fn distinct_diagonal_needs_no_perturbation() {
        let m = mat(&[&[1, 1, 1], &[0, 2, 1], &[0, 0, 3]]);
        let plan = PerturbationPlan::build(&m);
        assert!(plan.is_empty());
        let lifted = plan.apply(&m).unwrap();
        assert_eq!(
            lifted.entry(1, 2),
            &RationalFunction::constant(Rational::one())
        );
    }

    #[test]
    fn apply_perturbs_the_right_diagonal_entries() {
        let m = mixed_6x6();
        let plan = PerturbationPlan::build(&m);
        let p = plan.apply(&m).unwrap();
        let x = |t| Polynomial::monomial(Rational::one(), t);
        let c = |v: i64| Polynomial::constant(Rational::from_int(v));
        let expect = [
            c(3),
            c(5),
            c(3) - x(1),
            c(5) - x(2),
            c(7),
            c(3) - x(3),
        ];
        for (q, want) in (1..=6).zip(&expect) {
            assert_eq!(p.entry(q, q), &RationalFunction::from(want.clone()));
        }
        // Pairwise distinct after perturbation.
        for a in 1..=6 {
            for b in (a + 1)..=6 {
                assert_ne!(p.entry(a, a), p.entry(b, b));
            }
        }
    }

    #[test]
    fn identity_2x2_perturbation() {
        let m = mat(&[&[1, 0], &[0, 1]]);
        let plan = PerturbationPlan::build(&m);
        let p = plan.apply(&m).unwrap();
        assert_eq!(p.entry(1, 1), &RationalFunction::constant(Rational::one()));
        let want = Polynomial::constant(Rational::one()) - Polynomial::monomial(Rational::one(), 1);
        assert_eq!(p.entry(2, 2), &RationalFunction::from(want));
    }

    #[test]
    fn setting_variable_to_zero_recovers_input() {
        let m = mixed_6x6();
        let p = PerturbationPlan::build(&m).apply(&m).unwrap();
        let back = p.map(|f| f.eval_at_zero().unwrap());
        assert_eq!(back, m);
    }

    #[test]
    fn from_exponents_validates() {
        let m = mixed_6x6();
        // Reversed assignment is a valid alternative plan.
        assert!(PerturbationPlan::from_exponents(&m, &[0, 0, 3, 2, 0, 1]).is_ok());
        // First occurrence must stay unperturbed.
        assert!(PerturbationPlan::from_exponents(&m, &[1, 0, 2, 3, 0, 4]).is_err());
        // Duplicates must be perturbed.
        assert!(PerturbationPlan::from_exponents(&m, &[0, 0, 1, 2, 0, 0]).is_err());
        // Exponents must be distinct.
        assert!(PerturbationPlan::from_exponents(&m, &[0, 0, 1, 1, 0, 2]).is_err());
        // Wrong length.
        assert!(matches!(
            PerturbationPlan::from_exponents(&m, &[0, 0, 1]),
            Err(Error::PlanDimensionMismatch { .. })
        ));
    }
}
