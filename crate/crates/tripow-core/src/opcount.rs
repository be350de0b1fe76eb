//! Global counter of exact field operations.
//!
//! Every [`Rational`](crate::Rational) add/sub/mul/div/neg/pow bumps a
//! relaxed atomic. Polynomial and rational-function arithmetic decompose
//! into rational operations, so the counter covers symbolic work too.
//! Big-integer growth dominates cost at this scale, making op counts a
//! steadier signal than wall time; benchmarks report both.

use core::sync::atomic::{AtomicU64, Ordering};

static RATIONAL_OPS: AtomicU64 = AtomicU64::new(0);

#[inline]
pub(crate) fn bump() {
    RATIONAL_OPS.fetch_add(1, Ordering::Relaxed);
}

/// Monotone count of rational field operations since program start.
///
/// Take a snapshot before and after a computation and subtract. Counts
/// from concurrent threads are interleaved, so deltas are only meaningful
/// around single-threaded sections.
pub fn snapshot() -> u64 {
    RATIONAL_OPS.load(Ordering::Relaxed)
}

/// Runs `f` and returns its result together with the number of rational
/// operations it performed.
pub fn measure<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let before = snapshot();
    let out = f();
    (out, snapshot() - before)
}
