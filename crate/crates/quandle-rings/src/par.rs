//! Deterministic fan-out over an index range.
//!
//! Each partition produces its own vector; partitions are concatenated in
//! index order, so the result is identical whether the work ran on one
//! thread or many.

#[cfg(feature = "parallel")]
pub(crate) fn flat_map_ordered<T, F>(parts: usize, parallel: bool, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Vec<T> + Sync,
{
    if parallel {
        use rayon::prelude::*;
        let chunks: Vec<Vec<T>> = (0..parts).into_par_iter().map(&f).collect();
        chunks.into_iter().flatten().collect()
    } else {
        (0..parts).flat_map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn flat_map_ordered<T, F>(parts: usize, _parallel: bool, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Vec<T> + Sync,
{
    (0..parts).flat_map(f).collect()
}
