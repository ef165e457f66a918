use std::collections::BTreeMap;

/// Formal linear combination with exact `i64` coefficients, keyed by an
/// ordered term type. Zero coefficients are never stored, so `==` is a
/// faithful equality of combinations and iteration order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, i64>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord> LinComb<K> {
    pub fn new() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn singleton(key: K) -> Self {
        Self::term(key, 1)
    }

    pub fn term(key: K, coeff: i64) -> Self {
        let mut c = Self::new();
        c.add_term(key, coeff);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    /// Adds `coeff * key`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, key: K, coeff: i64) {
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Occupied(mut e) => {
                let v = e.get().checked_add(coeff).expect("coefficient overflow");
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self)
    where
        K: Clone,
    {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c);
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Self, scale: i64)
    where
        K: Clone,
    {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.checked_mul(scale).expect("coefficient overflow"));
        }
    }

    pub fn scaled(mut self, scale: i64) -> Self {
        if scale == 0 {
            return Self::new();
        }
        for v in self.terms.values_mut() {
            *v = v.checked_mul(scale).expect("coefficient overflow");
        }
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, v)| (k, *v))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Applies `f` to every term, merging images that collide.
    pub fn map_terms<K2: Ord>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::new();
        for (k, c) in self.iter() {
            out.add_term(f(k), c);
        }
        out
    }

    /// Keeps only terms passing the predicate.
    pub fn filtered(&self, mut pred: impl FnMut(&K) -> bool) -> Self
    where
        K: Clone,
    {
        let mut out = Self::new();
        for (k, c) in self.iter() {
            if pred(k) {
                out.add_term(k.clone(), c);
            }
        }
        out
    }
}

impl<K: Ord> FromIterator<(K, i64)> for LinComb<K> {
    fn from_iter<T: IntoIterator<Item = (K, i64)>>(iter: T) -> Self {
        let mut c = Self::new();
        for (k, v) in iter {
            c.add_term(k, v);
        }
        c
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, i64);
    type IntoIter = std::collections::btree_map::IntoIter<K, i64>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}
