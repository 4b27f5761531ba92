//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) work runs on rayon; without it
//! every call is sequential. Results are always returned in index order.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Parallelism {
    Sequential,
    /// Worker count; 0 uses rayon's global pool.
    #[default]
    Auto,
    Workers(usize),
}

impl Parallelism {
    /// `Sequential` for 1, `Auto` for 0, otherwise a fixed worker count.
    pub fn from_workers(n: usize) -> Self {
        match n {
            0 => Parallelism::Auto,
            1 => Parallelism::Sequential,
            n => Parallelism::Workers(n),
        }
    }

    /// True when this build can run work on more than one thread.
    pub fn available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// `(0..n).map(f)` collected in order, possibly in parallel.
pub fn map_range<T, F>(n: usize, par: Parallelism, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        match par {
            Parallelism::Sequential => {}
            Parallelism::Auto => return (0..n).into_par_iter().map(f).collect(),
            Parallelism::Workers(k) => {
                if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(k).build() {
                    return pool.install(|| (0..n).into_par_iter().map(&f).collect());
                }
            }
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = par;
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        for par in [
            Parallelism::Sequential,
            Parallelism::Auto,
            Parallelism::Workers(3),
        ] {
            assert_eq!(
                map_range(100, par, |i| i * i),
                (0..100).map(|i| i * i).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn from_workers() {
        assert_eq!(Parallelism::from_workers(0), Parallelism::Auto);
        assert_eq!(Parallelism::from_workers(1), Parallelism::Sequential);
        assert_eq!(Parallelism::from_workers(4), Parallelism::Workers(4));
    }
}
