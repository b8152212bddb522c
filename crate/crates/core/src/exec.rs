//! Grid evaluation and cooperative cancellation.
//!
//! Every routine in this crate is a pure function, so grids can be evaluated
//! in any order. [`map_ordered`] always returns results in input order, and
//! reductions that need bit-reproducibility go through [`sum_blocks`], which
//! fixes the summation tree independently of the thread count.

use std::sync::atomic::{AtomicBool, Ordering};

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    #[default]
    Parallel,
}

impl Strategy {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map_ordered<T, R, F>(items: &[T], strategy: Strategy, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = strategy;
    items.iter().map(f).collect()
}

/// Block size used by [`sum_blocks`]; part of the determinism contract.
pub const BLOCK_LEN: usize = 4096;

/// Sums `term(i)` for `i` in `1..=n` into `K` accumulators.
///
/// Terms are grouped into fixed blocks of [`BLOCK_LEN`]; block partials are
/// computed (possibly in parallel) and then added left to right, so the
/// result is bit-identical for every strategy and thread count. The monitor
/// is polled once per block.
pub fn sum_blocks<const K: usize, F>(
    n: usize,
    strategy: Strategy,
    monitor: &dyn Monitor,
    term: F,
) -> crate::Result<[Complex64; K]>
where
    F: Fn(usize) -> [Complex64; K] + Sync + Send,
{
    let blocks: Vec<(usize, usize)> =
        (0..n.div_ceil(BLOCK_LEN)).map(|b| (b * BLOCK_LEN + 1, ((b + 1) * BLOCK_LEN).min(n))).collect();
    let total = blocks.len();
    let done = std::sync::atomic::AtomicUsize::new(0);
    let partials = map_ordered(&blocks, strategy, |&(lo, hi)| {
        if monitor.is_cancelled() {
            return None;
        }
        let mut acc = [Complex64::new(0.0, 0.0); K];
        for i in lo..=hi {
            let t = term(i);
            for k in 0..K {
                acc[k] += t[k];
            }
        }
        let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
        monitor.progress(finished, total);
        Some(acc)
    });
    let mut acc = [Complex64::new(0.0, 0.0); K];
    for p in partials {
        let p = p.ok_or(crate::Error::Cancelled)?;
        for k in 0..K {
            acc[k] += p[k];
        }
    }
    Ok(acc)
}

/// Progress and cancellation hook for long-running oracles.
///
/// Implementations must be cheap; they are polled at block or panel
/// boundaries, possibly from several threads at once.
pub trait Monitor: Sync {
    fn is_cancelled(&self) -> bool {
        false
    }
    fn progress(&self, _done: usize, _total: usize) {}
}

/// A monitor that never cancels and ignores progress.
#[derive(Debug, Default, Clone, Copy)]
pub struct Unmonitored;

impl Monitor for Unmonitored {}

/// A shareable cancellation flag.
#[derive(Debug, Default)]
pub struct CancelFlag(AtomicBool);

impl CancelFlag {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }
}

impl Monitor for CancelFlag {
    fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}
