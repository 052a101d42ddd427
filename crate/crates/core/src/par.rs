//! Thin indirection over rayon so the data-parallel core can be compiled
//! with a purely sequential fallback (`--no-default-features`).

/// Maps `items` through `f`, in parallel when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(|t| f(t)).collect()
}

/// Sequential version, always available (used by the benchmarks to compare
/// against the parallel path, and as the fallback implementation).
pub fn map_collect_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}
