//! A thread-local counter of abstract algorithm steps.
//!
//! The counter exists so that scaling claims can be checked against the
//! algorithms themselves rather than against wall-clock noise. Core loops in
//! the permutation and commutator routines call [`bump`]; benchmarks and
//! tests call [`reset`] before a run and [`total`] after it, then fit a
//! log–log slope to the recorded counts.
//!
//! Counts are per-thread, so parallel test runners do not interfere with
//! each other.

use std::cell::Cell;

thread_local! {
    static OPS: Cell<u64> = const { Cell::new(0) };
}

/// Reset the current thread's operation counter to zero.
pub fn reset() {
    OPS.with(|c| c.set(0));
}

/// Add `k` to the current thread's operation counter.
#[inline]
pub fn bump(k: u64) {
    OPS.with(|c| c.set(c.get().wrapping_add(k)));
}

/// Read the current thread's operation counter.
pub fn total() -> u64 {
    OPS.with(|c| c.get())
}
