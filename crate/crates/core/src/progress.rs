use std::fmt;
use std::sync::Mutex;
use std::time::{Duration, Instant};

type Sink = Box<dyn Fn(&str) + Send + Sync>;

/// Throttled progress reporter.
///
/// Heavy loops call [`Progress::update`] as often as they like; the sink sees
/// at most one line per interval (one second by default). Lines are
/// machine-readable `key=value` pairs.
pub struct Progress {
    sink: Sink,
    interval: Duration,
    last: Mutex<Option<Instant>>,
}

impl Progress {
    pub fn new(sink: impl Fn(&str) + Send + Sync + 'static) -> Self {
        Self::with_interval(sink, Duration::from_secs(1))
    }

    pub fn with_interval(sink: impl Fn(&str) + Send + Sync + 'static, interval: Duration) -> Self {
        Progress {
            sink: Box::new(sink),
            interval,
            last: Mutex::new(None),
        }
    }

    /// Progress sink writing to standard error.
    pub fn stderr() -> Self {
        Self::new(|line| eprintln!("{line}"))
    }

    pub fn update(&self, stage: &str, done: u64, total: u64) {
        let now = Instant::now();
        let mut last = self.last.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(prev) = *last {
            if now.duration_since(prev) < self.interval {
                return;
            }
        }
        *last = Some(now);
        drop(last);
        (self.sink)(&format!("progress stage={stage} done={done} total={total}"));
    }
}

impl fmt::Debug for Progress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Progress").field("interval", &self.interval).finish()
    }
}
