/// Execution schedule for the data-parallel loops.
///
/// Results never depend on the schedule: every parallel accumulation is a sum
/// in a commutative ring and is merged before being observed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Runs on the rayon global pool. Without the `parallel` feature this
    /// behaves exactly like [`Exec::Sequential`].
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

    /// Maps `f` over `0..len` and folds the results with `combine`, in
    /// parallel when enabled. `combine` must be associative and commutative.
    pub(crate) fn map_reduce<T, F, C>(self, len: usize, identity: impl Fn() -> T + Sync + Send, f: F, combine: C) -> T
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
        C: Fn(T, T) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return (0..len).into_par_iter().map(&f).reduce(&identity, &combine);
        }
        (0..len).map(f).fold(identity(), combine)
    }

    /// Maps `f` over `0..len`, preserving index order in the output.
    pub(crate) fn map_collect<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return (0..len).into_par_iter().map(f).collect();
        }
        (0..len).map(f).collect()
    }
}
