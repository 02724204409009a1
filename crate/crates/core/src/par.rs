//! Thin switch between rayon and sequential execution.
//!
//! Every parallel loop in this crate reduces with exact integer addition or
//! collects in input order, so the `parallel` feature changes wall time only,
//! never output bytes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving input order in the output.
pub(crate) fn map_ordered<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Splits `0..len` into contiguous chunks, maps each chunk to an accumulator,
/// and folds the accumulators left to right (chunk order is preserved, so any
/// associative combine gives a deterministic result).
pub(crate) fn fold_ranges<A, F, C>(len: u64, chunk: u64, init: A, map: F, combine: C) -> A
where
    A: Send,
    F: Fn(std::ops::Range<u64>) -> A + Sync + Send,
    C: Fn(A, A) -> A,
{
    debug_assert!(chunk > 0);
    let ranges: Vec<std::ops::Range<u64>> = (0..len)
        .step_by(chunk.max(1) as usize)
        .map(|lo| lo..(lo + chunk).min(len))
        .collect();
    #[cfg(feature = "parallel")]
    {
        let parts: Vec<A> = ranges.into_par_iter().map(map).collect();
        parts.into_iter().fold(init, combine)
    }
    #[cfg(not(feature = "parallel"))]
    {
        ranges.into_iter().map(map).fold(init, combine)
    }
}
