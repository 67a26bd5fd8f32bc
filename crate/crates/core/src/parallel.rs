//! Order-preserving map over independent work items.
//!
//! With the `parallel` feature the map runs on rayon's pool; otherwise it is a
//! plain iterator. Either way the output order equals the input order.

use crate::error::{Error, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, in parallel when the `parallel` feature is on.
pub fn map_ordered<T, U, F>(items: &[T], f: F) -> Vec<U>
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

/// Always-sequential counterpart of [`map_ordered`].
pub fn map_sequential<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

/// Runs `job` with at most `jobs` worker threads.
///
/// Sequential builds accept any positive `jobs` and run on the calling thread.
pub fn with_jobs<R, F>(jobs: usize, job: F) -> Result<R>
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    if jobs == 0 {
        return Err(Error::Validation("jobs must be at least 1".into()));
    }
    #[cfg(feature = "parallel")]
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Validation(format!("cannot start {jobs} workers: {e}")))?;
        Ok(pool.install(job))
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok(job())
    }
}
