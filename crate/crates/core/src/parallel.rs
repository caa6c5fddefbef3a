//! Work distribution for the embarrassingly parallel sweeps (bipartition
//! enumeration, modulator colorings, connector guesses).
//!
//! With the `parallel` feature the items run on the rayon pool; without it
//! the same code folds sequentially. Every merge operation used with these
//! helpers is associative and commutative with a total-order tie-break, so
//! results do not depend on worker count or scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `items` and reduces with `merge`. Runs on the rayon pool when both
/// the `parallel` feature and the `parallel` argument are on.
pub fn map_reduce<T, R, M, F>(parallel: bool, items: &[T], map: M, merge: F) -> Option<R>
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync,
    F: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().map(&map).reduce_with(&merge);
    }
    let _ = parallel;
    items.iter().map(&map).reduce(merge)
}

/// True when the crate was built with rayon support.
pub fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}
