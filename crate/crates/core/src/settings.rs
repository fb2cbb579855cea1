use std::sync::Arc;

use crate::progress::Progress;

/// Resource limits and execution policy shared by every heavy operation.
#[derive(Clone, Debug)]
pub struct Settings {
    /// Length of one sieve segment when streaming or sieving above
    /// `segment_threshold`.
    pub segment_len: usize,
    /// In-memory tables up to this many entries are built from a
    /// smallest-prime-factor table in one pass; larger ones are segmented.
    pub segment_threshold: usize,
    /// Maximum number of entries of any table held in memory at once.
    pub table_budget: usize,
    /// Largest `x` accepted by the streamed summatory functions.
    pub summatory_limit: u64,
    /// Largest prime cutoff accepted by the Euler-product evaluators.
    pub prime_cutoff_limit: u64,
    /// Run data-parallel loops on rayon (ignored without the `parallel` feature).
    pub parallel: bool,
    pub progress: Option<Arc<Progress>>,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            segment_len: 1 << 20,
            segment_threshold: 1 << 26,
            table_budget: 1 << 27,
            summatory_limit: 100_000_000,
            prime_cutoff_limit: 10_000_000_000,
            parallel: cfg!(feature = "parallel"),
            progress: None,
        }
    }
}

impl Settings {
    pub fn sequential() -> Self {
        Settings {
            parallel: false,
            ..Settings::default()
        }
    }

    pub fn with_progress(mut self, progress: Arc<Progress>) -> Self {
        self.progress = Some(progress);
        self
    }

    pub(crate) fn report(&self, stage: &str, done: u64, total: u64) {
        if let Some(p) = &self.progress {
            p.update(stage, done, total);
        }
    }

    pub(crate) fn check_table(&self, what: &'static str, entries: u64) -> crate::Result<()> {
        if entries > self.table_budget as u64 {
            return Err(crate::Error::Resource {
                what,
                requested: entries,
                budget: self.table_budget as u64,
            });
        }
        Ok(())
    }
}
