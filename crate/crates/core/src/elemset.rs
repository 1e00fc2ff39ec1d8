//! Dense bitsets over the elements of one fixed lattice.

/// Element id inside a lattice. Dense, assigned in declaration order.
pub type Elem = usize;

/// Set of element ids, backed by 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    n: usize,
    bits: Vec<u64>,
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        ElementSet {
            n,
            bits: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = Elem>>(n: usize, iter: I) -> Self {
        let mut s = Self::empty(n);
        for e in iter {
            s.insert(e);
        }
        s
    }

    pub fn universe_len(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, e: Elem) {
        debug_assert!(e < self.n);
        self.bits[e / 64] |= 1 << (e % 64);
    }

    pub fn remove(&mut self, e: Elem) {
        debug_assert!(e < self.n);
        self.bits[e / 64] &= !(1 << (e % 64));
    }

    pub fn contains(&self, e: Elem) -> bool {
        e < self.n && self.bits[e / 64] >> (e % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        ElementSet {
            n: self.n,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        ElementSet {
            n: self.n,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect(),
        }
    }

    /// Complement relative to the fixed universe of the lattice.
    pub fn complement(&self) -> Self {
        let mut s = ElementSet {
            n: self.n,
            bits: self.bits.iter().map(|w| !w).collect(),
        };
        // mask tail bits beyond n
        let tail = self.n % 64;
        if tail != 0 {
            if let Some(last) = s.bits.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Ascending iterator over member ids.
    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.n).filter(move |&e| self.contains(e))
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }
}
