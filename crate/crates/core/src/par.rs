//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] runs on the
//! rayon pool; without it every call runs sequentially. Results are always
//! returned in input order, so output never depends on the thread count.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// True when work will actually be spread over the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

pub fn map_range<R, F>(exec: Exec, range: Range<u64>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        return range.into_par_iter().map(f).collect();
    }
    let _ = exec;
    range.map(f).collect()
}

/// Sums `f(i)` over `range`. Integer addition is associative, so the result
/// is independent of how the range is split.
pub fn sum_range_i128<F>(exec: Exec, range: Range<u64>, f: F) -> i128
where
    F: Fn(u64) -> i128 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        return range.into_par_iter().map(f).sum();
    }
    let _ = exec;
    range.map(f).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map(Exec::Sequential, &xs, |x| x * x);
        let b = map(Exec::Parallel, &xs, |x| x * x);
        assert_eq!(a, b);
        let s = sum_range_i128(Exec::Sequential, 0..1000, |i| i as i128 - 300);
        let p = sum_range_i128(Exec::Parallel, 0..1000, |i| i as i128 - 300);
        assert_eq!(s, p);
        assert_eq!(map_range(Exec::Parallel, 3..6, |i| i), vec![3, 4, 5]);
    }
}
