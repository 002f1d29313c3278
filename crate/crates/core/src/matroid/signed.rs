use std::fmt;

/// Bitmask over a ground set of at most 32 elements.
pub type Mask = u32;

pub fn mask_of(elems: &[usize]) -> Mask {
    elems.iter().fold(0, |m, &e| m | 1 << e)
}

pub fn elements(mask: Mask) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| mask >> i & 1 == 1)
}

pub fn full(n: usize) -> Mask {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Removes the bits of `removed` and shifts the remaining bits down, so a
/// mask over the old ground set becomes a mask over the minor.
pub fn compress(mask: Mask, removed: Mask, n: usize) -> Mask {
    let mut out = 0;
    let mut k = 0;
    for i in 0..n {
        if removed >> i & 1 == 1 {
            continue;
        }
        if mask >> i & 1 == 1 {
            out |= 1 << k;
        }
        k += 1;
    }
    out
}

/// Signed subset `(pos, neg)` with disjoint parts.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSubset {
    pub pos: Mask,
    pub neg: Mask,
}

impl SignedSubset {
    pub fn new(pos: Mask, neg: Mask) -> Self {
        debug_assert_eq!(pos & neg, 0);
        Self { pos, neg }
    }

    pub fn support(&self) -> Mask {
        self.pos | self.neg
    }

    pub fn negate(&self) -> Self {
        Self { pos: self.neg, neg: self.pos }
    }

    /// Representative of `{C, -C}` whose lowest support element is positive.
    pub fn canonical(&self) -> Self {
        let low = self.support() & self.support().wrapping_neg();
        if self.pos & low != 0 {
            *self
        } else {
            self.negate()
        }
    }

    /// Sign flip on the elements of `s`.
    pub fn reorient(&self, s: Mask) -> Self {
        Self { pos: (self.pos & !s) | (self.neg & s), neg: (self.neg & !s) | (self.pos & s) }
    }

    /// All elements carry the same sign.
    pub fn is_positive(&self) -> bool {
        self.pos == 0 || self.neg == 0
    }

    pub fn sign(&self, e: usize) -> i64 {
        if self.pos >> e & 1 == 1 {
            1
        } else if self.neg >> e & 1 == 1 {
            -1
        } else {
            0
        }
    }

    /// Signed pairing `sum_e C(e) * x(e)`.
    pub fn pairing(&self, x: &[i64]) -> i64 {
        elements(self.pos).map(|e| x[e]).sum::<i64>() - elements(self.neg).map(|e| x[e]).sum::<i64>()
    }

    /// Relabels element `i` as `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let map = |m: Mask| elements(m).fold(0, |acc, e| acc | 1 << perm[e]);
        Self { pos: map(self.pos), neg: map(self.neg) }
    }

    pub fn restrict(&self, keep: Mask, n: usize) -> Self {
        let removed = full(n) & !keep;
        Self { pos: compress(self.pos & keep, removed, n), neg: compress(self.neg & keep, removed, n) }
    }
}

impl fmt::Debug for SignedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<usize> = elements(self.pos).collect();
        let n: Vec<usize> = elements(self.neg).collect();
        write!(f, "(+{p:?}, -{n:?})")
    }
}

/// Signs of two signed sets agree on the common support wherever they are both nonzero,
/// counted as (agreements, disagreements).
pub fn sign_overlap(a: &SignedSubset, b: &SignedSubset) -> (u32, u32) {
    let agree = (a.pos & b.pos) | (a.neg & b.neg);
    let disagree = (a.pos & b.neg) | (a.neg & b.pos);
    (agree.count_ones(), disagree.count_ones())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_and_reorient() {
        let c = SignedSubset::new(0b100, 0b011);
        assert_eq!(c.canonical(), SignedSubset::new(0b011, 0b100));
        assert!(c.reorient(0b100).is_positive());
        assert_eq!(c.reorient(0b111).reorient(0b111), c);
    }

    #[test]
    fn compression_drops_removed_bits() {
        assert_eq!(compress(0b1011, 0b0010, 4), 0b101);
        assert_eq!(SignedSubset::new(0b1001, 0b0100).restrict(0b1101, 4), SignedSubset::new(0b101, 0b010));
    }
}
