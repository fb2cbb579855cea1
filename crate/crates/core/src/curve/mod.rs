//! Counting integers near the curve `sqrt(x / n^5)` and the short-interval
//! machinery for `q = 5` built on it.

mod near;
mod scan;
mod shapes;
mod short;

pub use near::{count_near_curve, near_integer_sqrt, CurveConfig};
pub use scan::{range_scan, RangeMaximum, RangeScanReport};
pub use shapes::{bound_shapes, BoundShapes, Range};
pub use short::{
    short_interval_sum, window_decomposition, ShortIntervalInstance, WindowDecomposition, WindowRow, DEFAULT_C3,
    MAX_EXACT_X,
};
