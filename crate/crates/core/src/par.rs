//! Execution strategy for the data-parallel oracles.

/// How an enumeration or sweep is executed.
///
/// `Parallel` uses rayon when the crate is built with the `parallel` feature
/// and silently degrades to `Sequential` otherwise. Both strategies produce
/// identical results: work is split into index-ordered chunks and combined in
/// order.
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
    /// True when this strategy actually fans out across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps `f` over `items`, preserving order.
    pub fn map<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }

    /// Maps `f` over `0..n`, preserving order.
    pub fn map_range<U, F>(self, n: usize, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(usize) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// Splits `0..total` into contiguous chunks, folds each with `f` and
    /// returns the per-chunk results in index order.
    pub(crate) fn chunked<U, F>(self, total: u64, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(u64, u64) -> U + Sync + Send,
    {
        let pieces = if self.is_parallel() {
            chunk_count(total)
        } else {
            1
        };
        let step = total.div_ceil(pieces.max(1));
        let bounds: Vec<(u64, u64)> = (0..pieces)
            .map(|i| (i * step, ((i + 1) * step).min(total)))
            .filter(|(lo, hi)| lo < hi)
            .collect();
        self.map(bounds, |(lo, hi)| f(lo, hi))
    }
}

#[cfg(feature = "parallel")]
fn chunk_count(total: u64) -> u64 {
    // small jobs are not worth the scheduling overhead
    const MIN_CHUNK: u64 = 4096;
    let threads = rayon::current_num_threads() as u64 * 4;
    (total / MIN_CHUNK).clamp(1, threads.max(1))
}

#[cfg(not(feature = "parallel"))]
fn chunk_count(_total: u64) -> u64 {
    1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunked_covers_range_in_order() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            for total in [0u64, 1, 7, 4096, 100_000] {
                let spans = exec.chunked(total, |lo, hi| (lo, hi));
                let mut next = 0;
                for (lo, hi) in spans {
                    assert_eq!(lo, next);
                    assert!(hi > lo);
                    next = hi;
                }
                assert_eq!(next, total);
            }
        }
    }

    #[test]
    fn map_preserves_order() {
        let out = Exec::Parallel.map((0..1000).collect(), |x: i32| x * 2);
        assert_eq!(out, (0..1000).map(|x| x * 2).collect::<Vec<_>>());
    }
}
