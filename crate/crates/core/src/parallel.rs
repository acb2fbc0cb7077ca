//! Data-parallel helpers.
//!
//! With the `parallel` feature (default) these dispatch to rayon; without it they
//! are plain sequential loops with identical results. Every caller produces output
//! in input order, so reports stay byte-identical across thread counts.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many scalar updates an elimination step stays on the calling thread.
pub const ELIMINATION_GRAIN: usize = 1 << 14;

pub fn enabled() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(feature = "parallel")]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.iter().map(f).collect()
}

/// `f(i)` for `i in 0..n`, collected in order.
#[cfg(feature = "parallel")]
pub fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Runs `f(row_index, row)` over the rows of a row-major buffer.
#[cfg(feature = "parallel")]
pub fn for_each_row<T, F>(data: &mut [T], cols: usize, work: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    if cols == 0 {
        return;
    }
    if work < ELIMINATION_GRAIN {
        data.chunks_mut(cols).enumerate().for_each(|(i, r)| f(i, r));
    } else {
        data.par_chunks_mut(cols)
            .enumerate()
            .for_each(|(i, r)| f(i, r));
    }
}

#[cfg(not(feature = "parallel"))]
pub fn for_each_row<T, F>(data: &mut [T], cols: usize, _work: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    if cols == 0 {
        return;
    }
    data.chunks_mut(cols).enumerate().for_each(|(i, r)| f(i, r));
}
