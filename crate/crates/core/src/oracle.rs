//! Cached exact sequence oracles.

use std::fmt;
use std::sync::RwLock;

use crate::exactpoly::Rational;

type EvalFn = dyn Fn(usize) -> Rational + Send + Sync;

/// A named exact sequence `n -> a(n)` with an append-only cache.
///
/// Values are computed in index order and cached; concurrent readers share the
/// cache, and extension takes the write lock.
pub struct SequenceOracle {
    name: String,
    eval: Box<EvalFn>,
    cache: RwLock<Vec<Rational>>,
}

impl SequenceOracle {
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(usize) -> Rational + Send + Sync + 'static,
    ) -> Self {
        SequenceOracle {
            name: name.into(),
            eval: Box::new(eval),
            cache: RwLock::new(Vec::new()),
        }
    }

    /// Oracle over a fixed table; indices past the end evaluate to zero.
    pub fn from_values(name: impl Into<String>, values: Vec<Rational>) -> Self {
        let cache = values.clone();
        let oracle = Self::new(name, move |n| values.get(n).cloned().unwrap_or_default());
        *oracle.cache.write().unwrap() = cache;
        oracle
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn get(&self, n: usize) -> Rational {
        if let Some(v) = self.cache.read().unwrap().get(n) {
            return v.clone();
        }
        self.precompute(n);
        self.cache.read().unwrap()[n].clone()
    }

    /// Fills the cache through index `n`.
    pub fn precompute(&self, n: usize) {
        let mut cache = self.cache.write().unwrap();
        while cache.len() <= n {
            let k = cache.len();
            cache.push((self.eval)(k));
        }
    }

    /// Largest cached index, if any.
    pub fn max_cached_n(&self) -> Option<usize> {
        self.cache.read().unwrap().len().checked_sub(1)
    }

    /// `a(0..=n)`.
    pub fn values(&self, n: usize) -> Vec<Rational> {
        self.precompute(n);
        self.cache.read().unwrap()[..=n].to_vec()
    }

    /// Same values except `a(index) = value`.
    pub fn perturbed(self: &std::sync::Arc<Self>, index: usize, value: Rational) -> SequenceOracle {
        let base = std::sync::Arc::clone(self);
        SequenceOracle::new(
            format!("{} with a({index}) = {value}", self.name),
            move |n| {
                if n == index {
                    value.clone()
                } else {
                    base.get(n)
                }
            },
        )
    }
}

impl fmt::Debug for SequenceOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SequenceOracle")
            .field("name", &self.name)
            .field("max_cached_n", &self.max_cached_n())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;
    use std::sync::atomic::{AtomicUsize, Ordering};
    use std::sync::Arc;

    #[test]
    fn caches_each_value_once() {
        let calls = Arc::new(AtomicUsize::new(0));
        let c = Arc::clone(&calls);
        let o = SequenceOracle::new("squares", move |n| {
            c.fetch_add(1, Ordering::SeqCst);
            rat((n * n) as i64)
        });
        assert_eq!(o.max_cached_n(), None);
        assert_eq!(o.get(4), rat(16));
        assert_eq!(o.get(2), rat(4));
        assert_eq!(o.get(4), rat(16));
        assert_eq!(calls.load(Ordering::SeqCst), 5);
        assert_eq!(o.max_cached_n(), Some(4));
    }

    #[test]
    fn perturbation_changes_one_index() {
        let o = Arc::new(SequenceOracle::new("id", |n| rat(n as i64)));
        let p = o.perturbed(3, rat(100));
        assert_eq!(p.values(4), vec![rat(0), rat(1), rat(2), rat(100), rat(4)]);
    }
}
