//! Execution strategy for the data-parallel loops (enumeration shards,
//! verification checks).
//!
//! With the `parallel` feature (on by default) work is spread over the rayon
//! pool; without it every call site falls back to a plain iterator.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Strategy {
    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Strategy::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Strategy::Sequential.map(&items, |x| x * x);
        let def = Strategy::default().map(&items, |x| x * x);
        assert_eq!(seq, def);
        assert_eq!(seq[999], 998001);
    }
}
