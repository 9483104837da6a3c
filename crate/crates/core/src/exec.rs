//! Execution strategy for the data-parallel loops.
//!
//! Every exhaustive loop in the crate goes through [`Exec`], so the same
//! code path runs either on the rayon pool or on the calling thread. Results
//! are always returned in input order, which keeps every report independent
//! of the worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled, otherwise falls
    /// back to [`Exec::Sequential`].
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
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Maps `f` over `start..end`, preserving order.
    pub fn map_range<R, F>(self, start: u64, end: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return (start..end).into_par_iter().map(f).collect();
        }
        (start..end).map(f).collect()
    }

    /// Smallest `i` in `start..end` with `f(i)` returning `Some`, together
    /// with its payload.
    pub fn find_first<R, F>(self, start: u64, end: u64, f: F) -> Option<(u64, R)>
    where
        R: Send,
        F: Fn(u64) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return (start..end)
                .into_par_iter()
                .filter_map(|i| f(i).map(|r| (i, r)))
                .min_by_key(|(i, _)| *i);
        }
        (start..end).find_map(|i| f(i).map(|r| (i, r)))
    }

    /// Returns true when `f` holds for every item.
    pub fn all<T, F>(self, items: &[T], f: F) -> bool
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return items.par_iter().all(f);
        }
        items.iter().all(f)
    }
}
