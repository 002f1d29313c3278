/// Subspace of GF(2)^n with vectors stored as bitmasks.
///
/// The basis is kept fully reduced: each vector owns a distinct highest
/// bit that no other basis vector has set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct F2Space {
    basis: Vec<u32>,
}

impl F2Space {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn span<I: IntoIterator<Item = u32>>(vectors: I) -> Self {
        let mut s = Self::new();
        for v in vectors {
            s.insert(v);
        }
        s
    }

    fn reduce(&self, mut v: u32) -> u32 {
        for &b in &self.basis {
            let lead = 31 - b.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= b;
            }
        }
        v
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: u32) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        let lead = 31 - r.leading_zeros();
        for b in &mut self.basis {
            if *b >> lead & 1 == 1 {
                *b ^= r;
            }
        }
        self.basis.push(r);
        self.basis.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    pub fn contains(&self, v: u32) -> bool {
        self.reduce(v) == 0
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    /// All `2^dim` vectors of the space, sorted.
    pub fn elements(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(1 << self.basis.len());
        for sel in 0u32..(1 << self.basis.len()) {
            let mut v = 0;
            for (i, b) in self.basis.iter().enumerate() {
                if sel >> i & 1 == 1 {
                    v ^= b;
                }
            }
            out.push(v);
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn span_is_closed_and_sized(vs in prop::collection::vec(0u32..256, 0..6)) {
            let s = F2Space::span(vs.iter().copied());
            let els = s.elements();
            prop_assert_eq!(els.len(), 1 << s.dim());
            for &a in &vs {
                prop_assert!(s.contains(a));
            }
            for &a in &els {
                for &b in &els {
                    prop_assert!(s.contains(a ^ b));
                }
            }
            // Brute-force closure of the generators has the same size.
            let mut closure = std::collections::BTreeSet::from([0u32]);
            for &v in &vs {
                let more: Vec<u32> = closure.iter().map(|c| c ^ v).collect();
                closure.extend(more);
            }
            prop_assert_eq!(closure.into_iter().collect::<Vec<_>>(), els);
        }
    }
}
