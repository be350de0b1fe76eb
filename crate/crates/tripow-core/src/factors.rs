//! Power factors: the per-entry coefficients that turn triangular matrix
//! powers into closed forms.
//!
//! For a matrix with pairwise-distinct diagonal entries, the (i,j) entry
//! of M^n equals `sum_{s=i..j} p[i,j,s] * m[s,s]^(n-1)` for every integer
//! n. The factors satisfy a recursion on the column index:
//!
//! ```text
//! p[i,j,s] = (sum_{t=s..j-1} p[i,t,s] * m[t,j]) / (m[s,s] - m[j,j])   for i <= s < j
//! p[i,j,j] = m[i,j] - sum_{t=i..j-1} p[i,j,t]
//! p[j,j,j] = m[j,j]
//! ```
//!
//! with `p[i,j,s] = 0` outside `i <= s <= j`. An equivalent description:
//! `p[i,j,s]` is the sum of all adjusted chains from i to j passing
//! through s, which [`adjusted_chain_sum`] enumerates directly as an
//! independent (exponential-time) oracle.

use alloc::vec;
use alloc::vec::Vec;


use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::TriMatrix;
use crate::rational::Rational;

/// The table of power factors `p[i,j,s]` for `1 <= i <= s <= j <= k`.
/// Lookups outside that range return zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerFactorTable<F> {
    k: usize,
    /// Highest column index the recursion has filled; columns are
    /// complete for all j <= cols.
    cols: usize,
    entries: Vec<F>,
}

impl<F: Field> PowerFactorTable<F> {
    /// Runs the recursion over the whole matrix.
    ///
    /// Errors if any two diagonal entries are equal (the recursion would
    /// divide by their difference); perturb first in that case.
    pub fn build(m: &TriMatrix<F>) -> Result<Self> {
        Self::build_columns(m, m.dim())
    }

    /// Runs the recursion only through column `jmax`. Factors `p[i,j,s]`
    /// with `j <= jmax` never reference anything beyond column j, so the
    /// truncated table is exact for those cells.
    pub(crate) fn build_columns(m: &TriMatrix<F>, jmax: usize) -> Result<Self> {
        m.require_distinct_diagonal()?;
        let k = m.dim();
        assert!(jmax <= k);
        let mut table = PowerFactorTable {
            k,
            cols: jmax,
            entries: vec![F::zero(); k * k * k],
        };
        for j in 1..=jmax {
            table.set(j, j, j, m.entry(j, j).clone());
            for i in 1..j {
                let mut row_sum = F::zero();
                for s in i..j {
                    let mut acc = F::zero();
                    for t in s..j {
                        acc = acc + table.get(i, t, s) * m.entry(t, j).clone();
                    }
                    let p = acc / (m.entry(s, s).clone() - m.entry(j, j).clone());
                    row_sum = row_sum + p.clone();
                    table.set(i, j, s, p);
                }
                table.set(i, j, j, m.entry(i, j).clone() - row_sum);
            }
        }
        Ok(table)
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    fn idx(&self, i: usize, j: usize, s: usize) -> usize {
        ((i - 1) * self.k + (j - 1)) * self.k + (s - 1)
    }

    fn set(&mut self, i: usize, j: usize, s: usize, v: F) {
        let at = self.idx(i, j, s);
        self.entries[at] = v;
    }

    /// `p[i,j,s]`, with zero for any index combination outside
    /// `1 <= i <= s <= j <= k`.
    pub fn get(&self, i: usize, j: usize, s: usize) -> F {
        if i < 1 || j < i || j > self.k || s < i || s > j {
            return F::zero();
        }
        debug_assert!(j <= self.cols, "column {j} was not built");
        self.entries[self.idx(i, j, s)].clone()
    }
}

impl PowerFactorTable<Rational> {
    /// The (i,j) entry of M^n as `sum_{s=i..j} p[i,j,s] * m[s,s]^(n-1)`,
    /// using the convention 0^0 = 1.
    ///
    /// For n <= 0 the matrix must be nonsingular.
    pub fn power_entry(
        &self,
        m: &TriMatrix<Rational>,
        i: usize,
        j: usize,
        n: i64,
    ) -> Result<Rational> {
        m.check_cell(i, j)?;
        if n <= 0 && m.is_singular() {
            return Err(Error::NonPositivePowerOfSingular { n });
        }
        let mut acc = Rational::zero();
        for s in i..=j {
            let p = self.get(i, j, s);
            if p.is_zero() {
                continue;
            }
            acc = acc + p * m.entry(s, s).pow(n - 1)?;
        }
        Ok(acc)
    }
}

/// Number of increasing index paths from i to j (subsets of the strictly
/// intermediate indices): `2^(j-i-1)` for i < j, and 1 for i = j.
pub fn chain_count(i: usize, j: usize) -> u64 {
    assert!(i <= j);
    if i == j {
        1
    } else {
        1 << (j - i - 1)
    }
}

/// Sum of all adjusted chains from i to j passing through s, enumerated
/// directly.
///
/// A chain is a product of entries along a path `i -> v1 -> ... -> vr = j`
/// whose nodes strictly increase, except that the first step may revisit
/// i (contributing the diagonal factor `m[i,i]`). The chain passes
/// through s when s is one of v1..vr. Its adjusted form divides by
/// `prod_t (m[s,s] - m[vt,vt])` over the path nodes, with the self
/// difference taken as 1. Exponential in j - i; intended as a test
/// oracle for the recursion, not a production path.
pub fn adjusted_chain_sum<F: Field>(
    m: &TriMatrix<F>,
    i: usize,
    j: usize,
    s: usize,
) -> Result<F> {
    m.check_cell(i, j)?;
    m.require_distinct_diagonal()?;
    if s < i || s > j {
        return Ok(F::zero());
    }
    if i == j {
        // The only path is the single diagonal step i -> i.
        return Ok(m.entry(i, i).clone());
    }
    let intermediates: Vec<usize> = (i + 1..j).collect();
    let mut total = F::zero();
    for mask in 0u32..(1 << intermediates.len()) {
        let mut nodes: Vec<usize> = intermediates
            .iter()
            .enumerate()
            .filter(|(b, _)| mask & (1 << b) != 0)
            .map(|(_, &q)| q)
            .collect();
        nodes.push(j);
        for prefixed in [false, true] {
            // Path node sequence after the start: [i]? ++ nodes.
            let mut path = Vec::with_capacity(nodes.len() + 1);
            if prefixed {
                path.push(i);
            }
            path.extend_from_slice(&nodes);
            if !path.contains(&s) {
                continue;
            }
            let mut numer = F::one();
            let mut prev = i;
            for &v in &path {
                numer = numer * m.entry(prev, v).clone();
                prev = v;
            }
            let mut denom = F::one();
            for &v in &path {
                if v != s {
                    denom = denom * (m.entry(s, s).clone() - m.entry(v, v).clone());
                }
            }
            total = total + numer / denom;
        }
    }
    Ok(total)
}
