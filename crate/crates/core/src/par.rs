//! Execution strategy for the exhaustive sweeps.
//!
//! Every sweep in the crate is written against the two helpers here so that the
//! parallel and sequential paths produce identical, order-stable results. With
//! the `parallel` feature disabled, [`Exec::Parallel`] silently runs sequentially.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a sweep distributes its independent work items.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when work will actually be spread across the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Maps `f` over `range`, returning results in index order.
pub fn map_range<R, F>(exec: Exec, range: Range<usize>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range.into_par_iter().map(f).collect();
    }
    let _ = exec;
    range.map(f).collect()
}

/// Maps `f` over a slice, returning results in slice order.
pub fn map_slice<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Returns the hit with the smallest index, exactly as a sequential scan would.
pub fn find_first<R, F>(exec: Exec, range: Range<usize>, f: F) -> Option<R>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range.into_par_iter().find_map_first(f);
    }
    let _ = exec;
    range.into_iter().find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_agree() {
        let seq = map_range(Exec::Sequential, 0..500, |i| i * i % 17);
        let par = map_range(Exec::Parallel, 0..500, |i| i * i % 17);
        assert_eq!(seq, par);

        let pick = |i: usize| (i % 37 == 36).then_some(i);
        assert_eq!(find_first(Exec::Sequential, 0..1000, pick), Some(36));
        assert_eq!(find_first(Exec::Parallel, 0..1000, pick), Some(36));
        assert_eq!(find_first(Exec::Parallel, 0..10, pick), None);
    }
}
