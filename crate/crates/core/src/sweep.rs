//! Exhaustive sweeps over case lists.
//!
//! With the `parallel` feature (on by default) cases are spread over the
//! rayon pool; without it they run in order on the calling thread. Results
//! come back in case order either way, so reports are identical.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Outcome of checking one property over a list of cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub checked: usize,
    /// Failure messages in case order.
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Applies `f` to every case, preserving order.
pub fn map<T, R, F>(cases: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        cases.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        cases.iter().map(f).collect()
    }
}

/// Runs `check` on every case; `Some(msg)` marks a failure.
pub fn check_all<T, F>(cases: &[T], check: F) -> Outcome
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    let failures: Vec<String> = cases.par_iter().filter_map(check).collect();
    #[cfg(not(feature = "parallel"))]
    let failures: Vec<String> = cases.iter().filter_map(check).collect();
    Outcome {
        checked: cases.len(),
        failures,
    }
}

/// Every `(a, b)` with both coordinates in `lo..=hi`, row-major.
pub fn square(lo: i64, hi: i64) -> Vec<(i64, i64)> {
    (lo..=hi)
        .flat_map(|a| (lo..=hi).map(move |b| (a, b)))
        .collect()
}

/// Every `(a, b, c)` with all coordinates in `lo..=hi`.
pub fn cube(lo: i64, hi: i64) -> Vec<(i64, i64, i64)> {
    (lo..=hi)
        .flat_map(|a| (lo..=hi).flat_map(move |b| (lo..=hi).map(move |c| (a, b, c))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(square(0, 1), vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(cube(-1, 1).len(), 27);
    }

    #[test]
    fn failures_keep_case_order() {
        let cases: Vec<i64> = (0..1000).collect();
        let out = check_all(&cases, |&x| (x % 300 == 7).then(|| x.to_string()));
        assert_eq!(out.checked, 1000);
        assert_eq!(out.failures, vec!["7", "307", "607", "907"]);
        assert!(!out.passed());
        assert_eq!(map(&cases, |x| x * 2)[999], 1998);
    }
}
