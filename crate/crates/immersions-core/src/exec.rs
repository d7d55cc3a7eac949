//! Parallelism controls for the heavy operations.
//!
//! With the `parallel` feature (default) work is distributed over a rayon
//! thread pool; without it the same shard decomposition runs on the calling
//! thread, producing byte-identical results.

/// How a sweep or scan distributes its shards.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
#[derive(Default)]
pub enum Parallelism {
    /// Single-threaded, even when the `parallel` feature is enabled.
    Sequential,
    /// Use the default rayon pool (or fall back to sequential without the
    /// `parallel` feature).
    #[default]
    Auto,
    /// Use a dedicated pool with this many threads (0 behaves like `Auto`).
    Threads(usize),
}


/// Maps `f` over `0..count` shard indices and collects the results in shard
/// order, regardless of execution order.
pub(crate) fn map_shards<R, F>(par: Parallelism, count: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match par {
        Parallelism::Sequential => (0..count).map(f).collect(),
        #[cfg(feature = "parallel")]
        Parallelism::Auto => {
            use rayon::prelude::*;
            (0..count).into_par_iter().map(f).collect()
        }
        #[cfg(feature = "parallel")]
        Parallelism::Threads(t) => {
            if t == 0 {
                return map_shards(Parallelism::Auto, count, f);
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .expect("build rayon pool");
            pool.install(|| {
                use rayon::prelude::*;
                (0..count).into_par_iter().map(f).collect()
            })
        }
        #[cfg(not(feature = "parallel"))]
        _ => (0..count).map(f).collect(),
    }
}
