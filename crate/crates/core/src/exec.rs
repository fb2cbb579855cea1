//! Ordered map over independent work items, on rayon or sequentially.
//!
//! Results always come back in input order, so any fold performed by the
//! caller is independent of scheduling.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::{Result, Settings};

pub(crate) fn map_ordered<I, T, F>(settings: &Settings, stage: &str, items: Vec<I>, f: F) -> Result<Vec<T>>
where
    I: Send,
    T: Send,
    F: Fn(I) -> Result<T> + Sync + Send,
{
    let total = items.len() as u64;
    let done = AtomicU64::new(0);
    let step = |item: I| {
        let out = f(item);
        let d = done.fetch_add(1, Ordering::Relaxed) + 1;
        settings.report(stage, d, total);
        out
    };

    #[cfg(feature = "parallel")]
    {
        if settings.parallel && items.len() > 1 {
            use rayon::prelude::*;
            return items.into_par_iter().map(step).collect();
        }
    }
    items.into_iter().map(step).collect()
}

/// Size the global worker pool. Must run before any parallel work; without
/// the `parallel` feature it only validates `threads`.
pub fn set_thread_count(threads: usize) -> Result<()> {
    if threads == 0 {
        return Err(crate::Error::Argument("thread count must be positive".into()));
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| crate::Error::Argument(format!("cannot size the thread pool: {e}")))?;
    Ok(())
}

/// Split `[lo, hi]` into consecutive closed blocks of at most `len` integers.
pub(crate) fn blocks(lo: u64, hi: u64, len: usize) -> Vec<(u64, u64)> {
    let len = len.max(1) as u64;
    let mut out = Vec::new();
    let mut start = lo;
    while start <= hi {
        let end = start.saturating_add(len - 1).min(hi);
        out.push((start, end));
        if end == u64::MAX {
            break;
        }
        start = end + 1;
    }
    out
}
