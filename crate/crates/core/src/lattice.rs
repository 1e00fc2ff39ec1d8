//! Finite bounded lattices with precomputed order, meet and join tables.
//!
//! Elements are dense integer ids in declaration order; the order relation is
//! a row-major boolean matrix and meet/join are n x n lookup tables computed
//! once at build time. Everything downstream (morphism enumeration, monoid
//! closure, property scans) reduces to lookups into these tables.
//!
//! A [`Lattice`] is immutable after construction and is shared behind an
//! [`Arc`], so concurrent readers need no synchronization.

use std::sync::Arc;

use crate::elemset::{Elem, ElementSet};
use crate::error::LatticeError;

#[derive(Debug, Clone)]
pub struct Lattice {
    name: String,
    element_names: Vec<String>,
    covers: Vec<(Elem, Elem)>,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    up_covers: Vec<Vec<Elem>>,
    down_covers: Vec<Vec<Elem>>,
    height: Vec<usize>,
    depth: Vec<usize>,
    bottom: Elem,
    top: Elem,
}

impl Lattice {
    /// Validates and builds a lattice from element names and cover pairs
    /// (given as element ids). The input pairs may contain transitive edges;
    /// the stored cover relation is recomputed from the closure.
    pub fn build(
        name: &str,
        element_names: Vec<String>,
        cover_pairs: &[(Elem, Elem)],
    ) -> Result<Lattice, LatticeError> {
        let n = element_names.len();
        if n == 0 {
            return Err(LatticeError::NoElements);
        }
        for (i, en) in element_names.iter().enumerate() {
            if element_names[..i].contains(en) {
                return Err(LatticeError::DuplicateElement { name: en.clone() });
            }
        }
        for &(x, y) in cover_pairs {
            if x >= n || y >= n {
                return Err(LatticeError::UnknownElement {
                    name: format!("#{}", x.max(y)),
                });
            }
        }

        // Reflexive-transitive closure of the declared pairs.
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(x, y) in cover_pairs {
            leq[x * n + y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(LatticeError::CycleDetected {
                        element: element_names[i].clone(),
                    });
                }
            }
        }

        let minimal: Vec<Elem> = (0..n)
            .filter(|&x| (0..n).all(|y| y == x || !leq[y * n + x]))
            .collect();
        if minimal.len() != 1 {
            return Err(LatticeError::NoUniqueBound {
                which: "bottom",
                candidates: minimal.iter().map(|&x| element_names[x].clone()).collect(),
            });
        }
        let maximal: Vec<Elem> = (0..n)
            .filter(|&x| (0..n).all(|y| y == x || !leq[x * n + y]))
            .collect();
        if maximal.len() != 1 {
            return Err(LatticeError::NoUniqueBound {
                which: "top",
                candidates: maximal.iter().map(|&x| element_names[x].clone()).collect(),
            });
        }
        let bottom = minimal[0];
        let top = maximal[0];

        // Meet and join per pair: the candidate bound set is down/up closed,
        // so a unique maximal (minimal) member is the greatest (least) bound.
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                let lower: Vec<Elem> =
                    (0..n).filter(|&z| leq[z * n + x] && leq[z * n + y]).collect();
                let max_lower: Vec<Elem> = lower
                    .iter()
                    .copied()
                    .filter(|&z| lower.iter().all(|&w| w == z || !leq[z * n + w]))
                    .collect();
                if max_lower.len() != 1 {
                    return Err(LatticeError::NotALattice {
                        x: element_names[x].clone(),
                        y: element_names[y].clone(),
                        op: "meet",
                    });
                }
                meet[x * n + y] = max_lower[0];

                let upper: Vec<Elem> =
                    (0..n).filter(|&z| leq[x * n + z] && leq[y * n + z]).collect();
                let min_upper: Vec<Elem> = upper
                    .iter()
                    .copied()
                    .filter(|&z| upper.iter().all(|&w| w == z || !leq[w * n + z]))
                    .collect();
                if min_upper.len() != 1 {
                    return Err(LatticeError::NotALattice {
                        x: element_names[x].clone(),
                        y: element_names[y].clone(),
                        op: "join",
                    });
                }
                join[x * n + y] = min_upper[0];
            }
        }

        // True cover relation from the closure.
        let mut covers = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y
                    && leq[x * n + y]
                    && !(0..n).any(|z| z != x && z != y && leq[x * n + z] && leq[z * n + y])
                {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();

        let mut up_covers = vec![Vec::new(); n];
        let mut down_covers = vec![Vec::new(); n];
        for &(x, y) in &covers {
            up_covers[x].push(y);
            down_covers[y].push(x);
        }

        // Longest-chain height/depth via DP in order of downset size.
        let mut by_downset: Vec<Elem> = (0..n).collect();
        by_downset.sort_by_key(|&x| (0..n).filter(|&z| leq[z * n + x]).count());
        let mut height = vec![0usize; n];
        for &x in &by_downset {
            for &d in &down_covers[x] {
                height[x] = height[x].max(height[d] + 1);
            }
        }
        let mut depth = vec![0usize; n];
        for &x in by_downset.iter().rev() {
            for &u in &up_covers[x] {
                depth[x] = depth[x].max(depth[u] + 1);
            }
        }

        Ok(Lattice {
            name: name.to_string(),
            element_names,
            covers,
            leq,
            meet,
            join,
            up_covers,
            down_covers,
            height,
            depth,
            bottom,
            top,
        })
    }

    /// Convenience builder with covers given by element name.
    pub fn build_from_names(
        name: &str,
        elements: &[&str],
        covers: &[(&str, &str)],
    ) -> Result<Lattice, LatticeError> {
        let names: Vec<String> = elements.iter().map(|s| s.to_string()).collect();
        let id = |s: &str| -> Result<Elem, LatticeError> {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| LatticeError::UnknownElement { name: s.to_string() })
        };
        let mut pairs = Vec::with_capacity(covers.len());
        for &(x, y) in covers {
            pairs.push((id(x)?, id(y)?));
        }
        Lattice::build(name, names, &pairs)
    }

    pub fn n(&self) -> usize {
        self.element_names.len()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn element_name(&self, e: Elem) -> &str {
        &self.element_names[e]
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    pub fn element_by_name(&self, name: &str) -> Option<Elem> {
        self.element_names.iter().position(|n| n == name)
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    /// One-element lattice (bottom = top). Accepted by the builder but
    /// flagged: property checkers treat it as a documented edge case.
    pub fn is_degenerate(&self) -> bool {
        self.n() == 1
    }

    pub fn covers(&self) -> &[(Elem, Elem)] {
        &self.covers
    }

    pub fn up_covers_of(&self, x: Elem) -> &[Elem] {
        &self.up_covers[x]
    }

    pub fn down_covers_of(&self, x: Elem) -> &[Elem] {
        &self.down_covers[x]
    }

    /// Longest chain length from bottom to `x`.
    pub fn height(&self, x: Elem) -> usize {
        self.height[x]
    }

    /// Longest chain length from `x` to top.
    pub fn depth(&self, x: Elem) -> usize {
        self.depth[x]
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.n() + y]
    }

    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.n() + y]
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.n() + y]
    }

    /// Meet of a family; empty family gives top.
    pub fn big_meet<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of a family; empty family gives bottom.
    pub fn big_join<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn downset(&self, x: Elem) -> ElementSet {
        ElementSet::from_iter(self.n(), (0..self.n()).filter(|&z| self.leq(z, x)))
    }

    pub fn upset(&self, x: Elem) -> ElementSet {
        ElementSet::from_iter(self.n(), (0..self.n()).filter(|&z| self.leq(x, z)))
    }

    /// First violation of the modular law `a <= b  =>  a v (x ^ b) = (a v x) ^ b`,
    /// scanning triples in id order.
    pub fn modularity_witness(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                if !self.leq(a, b) {
                    continue;
                }
                for x in 0..n {
                    if self.join(a, self.meet(x, b)) != self.meet(self.join(a, x), b) {
                        return Some((a, b, x));
                    }
                }
            }
        }
        None
    }

    pub fn is_modular(&self) -> bool {
        self.modularity_witness().is_none()
    }

    pub fn distributivity_witness(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.n();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.meet(x, self.join(y, z))
                        != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Distributive and every element complemented.
    pub fn is_boolean(&self) -> bool {
        self.is_distributive() && self.complemented_elements().len() == self.n()
    }

    pub fn is_complement_pair(&self, x: Elem, y: Elem) -> bool {
        self.meet(x, y) == self.bottom && self.join(x, y) == self.top
    }

    pub fn complements_of(&self, x: Elem) -> ElementSet {
        ElementSet::from_iter(
            self.n(),
            (0..self.n()).filter(|&y| self.is_complement_pair(x, y)),
        )
    }

    /// C(L): elements having at least one complement.
    pub fn complemented_elements(&self) -> ElementSet {
        ElementSet::from_iter(
            self.n(),
            (0..self.n()).filter(|&x| !self.complements_of(x).is_empty()),
        )
    }

    /// All ordered pairs (x, x') of mutual complements, sorted.
    pub fn complement_pairs(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for x in 0..self.n() {
            for y in 0..self.n() {
                if self.is_complement_pair(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// C(L) = {bottom, top}.
    pub fn is_indecomposable(&self) -> bool {
        let c = self.complemented_elements();
        if self.is_degenerate() {
            return c.len() == 1;
        }
        c.len() == 2 && c.contains(self.bottom) && c.contains(self.top)
    }

    /// `x` meets every element of the interval nontrivially.
    pub fn is_essential_in(&self, x: Elem, iv: &IntervalView) -> bool {
        debug_assert!(iv.contains(x));
        iv.elements()
            .iter()
            .all(|&y| y == iv.lo() || self.meet(x, y) != iv.lo())
    }

    /// Joining `x` with anything proper in the interval stays proper.
    pub fn is_superfluous_in(&self, x: Elem, iv: &IntervalView) -> bool {
        debug_assert!(iv.contains(x));
        iv.elements()
            .iter()
            .all(|&y| self.join(x, y) != iv.hi() || y == iv.hi())
    }

    pub fn is_essential(&self, x: Elem) -> bool {
        (0..self.n()).all(|y| y == self.bottom || self.meet(x, y) != self.bottom)
    }

    pub fn is_superfluous(&self, x: Elem) -> bool {
        (0..self.n()).all(|y| self.join(x, y) != self.top || y == self.top)
    }

    pub fn essential_elements(&self) -> ElementSet {
        ElementSet::from_iter(self.n(), (0..self.n()).filter(|&x| self.is_essential(x)))
    }

    pub fn superfluous_elements(&self) -> ElementSet {
        ElementSet::from_iter(self.n(), (0..self.n()).filter(|&x| self.is_superfluous(x)))
    }

    /// Meet of all essential elements. The essentials of a finite lattice are
    /// closed under meet, so the result is itself essential; this is verified
    /// before returning.
    pub fn min_essential(&self) -> Result<Elem, LatticeError> {
        let e = self.big_meet(self.essential_elements().iter());
        if self.is_essential(e) {
            Ok(e)
        } else {
            Err(LatticeError::InternalInvariantViolation(format!(
                "meet of essentials `{}` is not essential",
                self.element_name(e)
            )))
        }
    }

    /// Join of all superfluous elements, verified superfluous.
    pub fn max_superfluous(&self) -> Result<Elem, LatticeError> {
        let s = self.big_join(self.superfluous_elements().iter());
        if self.is_superfluous(s) {
            Ok(s)
        } else {
            Err(LatticeError::InternalInvariantViolation(format!(
                "join of superfluous elements `{}` is not superfluous",
                self.element_name(s)
            )))
        }
    }

    pub fn atoms(&self) -> ElementSet {
        ElementSet::from_iter(self.n(), self.up_covers[self.bottom].iter().copied())
    }

    pub fn coatoms(&self) -> ElementSet {
        ElementSet::from_iter(self.n(), self.down_covers[self.top].iter().copied())
    }

    pub fn radical(&self) -> Elem {
        self.big_meet(self.coatoms().iter())
    }

    pub fn socle(&self) -> Elem {
        self.big_join(self.atoms().iter())
    }

    /// Every member of a nonbottom family meets the join of any subset of the
    /// others at bottom.
    pub fn is_independent(&self, family: &[Elem]) -> Result<bool, LatticeError> {
        if family.contains(&self.bottom) {
            return Err(LatticeError::BottomInFamily);
        }
        let k = family.len();
        for (i, &x) in family.iter().enumerate() {
            let rest: Vec<Elem> = family
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &y)| y)
                .collect();
            for mask in 0u32..(1 << rest.len()) {
                let j = self.big_join(
                    rest.iter()
                        .enumerate()
                        .filter(|&(b, _)| mask >> b & 1 == 1)
                        .map(|(_, &y)| y),
                );
                if self.meet(x, j) != self.bottom {
                    return Ok(false);
                }
            }
        }
        let _ = k;
        Ok(true)
    }

    /// Order dual: covers reversed, bounds swapped.
    pub fn dual(&self) -> Lattice {
        let reversed: Vec<(Elem, Elem)> = self.covers.iter().map(|&(x, y)| (y, x)).collect();
        Lattice::build(
            &format!("{}^op", self.name),
            self.element_names.clone(),
            &reversed,
        )
        .expect("dual of a lattice is a lattice")
    }

    /// True iff some order-reversing bijection L -> L exists.
    pub fn is_self_dual(self: &Arc<Self>) -> bool {
        let dual = Arc::new(self.dual());
        let a = IntervalView::whole(self);
        let b = IntervalView::whole(&dual);
        !crate::iso::interval_isomorphisms(&a, &b).is_empty()
    }

    /// Compact elements. Every join cover in a finite lattice is itself
    /// finite, so the defining condition is vacuous and all elements qualify;
    /// finite lattices are compactly generated.
    pub fn compact_elements(&self) -> ElementSet {
        ElementSet::full(self.n())
    }

    /// The sublattice induced on `subset`, as a standalone lattice, if the
    /// subset is closed under ambient meet and join and has bounds.
    pub fn induced_lattice(&self, subset: &ElementSet, name: &str) -> Option<Lattice> {
        let elems = subset.to_vec();
        if elems.is_empty() {
            return None;
        }
        for &x in &elems {
            for &y in &elems {
                if !subset.contains(self.meet(x, y)) || !subset.contains(self.join(x, y)) {
                    return None;
                }
            }
        }
        let names: Vec<String> = elems.iter().map(|&e| self.element_names[e].clone()).collect();
        let mut pairs = Vec::new();
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                if i != j && self.lt(x, y) {
                    pairs.push((i, j));
                }
            }
        }
        Lattice::build(name, names, &pairs).ok()
    }
}

/// The interval `[lo, hi]` of a lattice, exposing its own bounded-lattice
/// interface. Immutable; shares the parent by `Arc`.
#[derive(Debug, Clone)]
pub struct IntervalView {
    lattice: Arc<Lattice>,
    lo: Elem,
    hi: Elem,
    elems: Vec<Elem>,
    pos: Vec<usize>,
}

const NOT_MEMBER: usize = usize::MAX;

impl IntervalView {
    pub fn new(lattice: &Arc<Lattice>, lo: Elem, hi: Elem) -> Result<Self, LatticeError> {
        if !lattice.leq(lo, hi) {
            return Err(LatticeError::NotComparable {
                lo: lattice.element_name(lo).to_string(),
                hi: lattice.element_name(hi).to_string(),
            });
        }
        let elems: Vec<Elem> = (0..lattice.n())
            .filter(|&x| lattice.leq(lo, x) && lattice.leq(x, hi))
            .collect();
        let mut pos = vec![NOT_MEMBER; lattice.n()];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i;
        }
        Ok(IntervalView {
            lattice: Arc::clone(lattice),
            lo,
            hi,
            elems,
            pos,
        })
    }

    pub fn whole(lattice: &Arc<Lattice>) -> Self {
        Self::new(lattice, lattice.bottom(), lattice.top()).expect("bottom <= top")
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn lo(&self) -> Elem {
        self.lo
    }

    pub fn hi(&self) -> Elem {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false // lo <= hi always holds, so lo is a member
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }

    pub fn contains(&self, x: Elem) -> bool {
        x < self.pos.len() && self.pos[x] != NOT_MEMBER
    }

    pub fn index_of(&self, x: Elem) -> Option<usize> {
        if self.contains(x) {
            Some(self.pos[x])
        } else {
            None
        }
    }

    pub fn is_whole(&self) -> bool {
        self.lo == self.lattice.bottom() && self.hi == self.lattice.top()
    }

    pub fn same_interval(&self, other: &IntervalView) -> bool {
        Arc::ptr_eq(&self.lattice, &other.lattice) && self.lo == other.lo && self.hi == other.hi
    }

    /// Extract the interval as a standalone lattice (element names kept).
    pub fn as_lattice(&self, name: &str) -> Lattice {
        let subset = ElementSet::from_iter(self.lattice.n(), self.elems.iter().copied());
        self.lattice
            .induced_lattice(&subset, name)
            .expect("intervals are closed under meet and join")
    }

    /// Interval-local invariants used for isomorphism pruning: height from
    /// lo, depth to hi, down-cover degree and up-cover degree inside the
    /// interval.
    pub(crate) fn local_profile(&self, x: Elem) -> (usize, usize, usize, usize) {
        (
            self.local_height(x),
            self.local_depth(x),
            self.local_covers_below(x),
            self.local_covers_above(x),
        )
    }

    fn local_covers_below(&self, x: Elem) -> usize {
        let l = &self.lattice;
        self.elems
            .iter()
            .filter(|&&z| l.lt(z, x) && !self.elems.iter().any(|&w| l.lt(z, w) && l.lt(w, x)))
            .count()
    }

    fn local_covers_above(&self, x: Elem) -> usize {
        let l = &self.lattice;
        self.elems
            .iter()
            .filter(|&&z| l.lt(x, z) && !self.elems.iter().any(|&w| l.lt(x, w) && l.lt(w, z)))
            .count()
    }

    fn local_height(&self, x: Elem) -> usize {
        // longest chain from lo to x inside the interval
        let l = &self.lattice;
        let mut below: Vec<Elem> = self.elems.iter().copied().filter(|&z| l.leq(z, x)).collect();
        below.sort_by_key(|&z| self.elems.iter().filter(|&&w| l.leq(w, z)).count());
        let mut h = vec![0usize; below.len()];
        for i in 0..below.len() {
            for j in 0..i {
                if l.lt(below[j], below[i]) {
                    h[i] = h[i].max(h[j] + 1);
                }
            }
        }
        h.last().copied().unwrap_or(0)
    }

    fn local_depth(&self, x: Elem) -> usize {
        let l = &self.lattice;
        let mut above: Vec<Elem> = self.elems.iter().copied().filter(|&z| l.leq(x, z)).collect();
        above.sort_by_key(|&z| self.elems.iter().filter(|&&w| l.leq(z, w)).count());
        let mut d = vec![0usize; above.len()];
        for i in 0..above.len() {
            for j in 0..i {
                if l.lt(above[j], above[i]) {
                    d[i] = d[i].max(d[j] + 1);
                }
            }
        }
        d.last().copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn m2() -> Arc<Lattice> {
        Arc::new(
            Lattice::build_from_names(
                "m2",
                &["0", "a", "b", "1"],
                &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
            )
            .unwrap(),
        )
    }

    fn pentagon() -> Arc<Lattice> {
        Arc::new(
            Lattice::build_from_names(
                "n5",
                &["0", "x", "y", "z", "1"],
                &[("0", "x"), ("x", "y"), ("y", "1"), ("0", "z"), ("z", "1")],
            )
            .unwrap(),
        )
    }

    #[test]
    fn two_chain_is_trivial() {
        let l = Lattice::build_from_names("2", &["0", "1"], &[("0", "1")]).unwrap();
        assert_eq!(l.n(), 2);
        assert_eq!(l.meet(0, 1), 0);
        assert_eq!(l.join(0, 1), 1);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 1);
        assert!(l.is_boolean());
    }

    #[test]
    fn diamond_meets_and_joins() {
        let l = m2();
        let (a, b) = (1, 2);
        assert_eq!(l.join(a, b), l.top());
        assert_eq!(l.meet(a, b), l.bottom());
        assert_eq!(l.join(a, l.bottom()), a);
        assert!(l.is_modular());
        assert!(l.is_boolean());
        assert_eq!(l.complemented_elements().len(), 4);
    }

    #[test]
    fn rejects_two_maximal_elements() {
        let err = Lattice::build_from_names(
            "bad",
            &["0", "a", "b", "c", "d"],
            &[("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("b", "d")],
        )
        .unwrap_err();
        assert!(matches!(err, LatticeError::NoUniqueBound { which: "top", .. }));
    }

    #[test]
    fn rejects_cycles() {
        let err =
            Lattice::build_from_names("cyc", &["0", "a", "b"], &[("0", "a"), ("a", "b"), ("b", "a")])
                .unwrap_err();
        assert!(matches!(err, LatticeError::CycleDetected { .. }));
    }

    #[test]
    fn rejects_missing_join() {
        // two incomparable maximal-ish elements below two tops: hexagon poset
        // 0 < a,b ; a,b < c ; a,b < d gives c,d with no join once a top is missing
        let err = Lattice::build_from_names(
            "nolat",
            &["0", "a", "b", "c", "d", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("a", "c"),
                ("b", "c"),
                ("a", "d"),
                ("b", "d"),
                ("c", "1"),
                ("d", "1"),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, LatticeError::NotALattice { .. }));
    }

    #[test]
    fn pentagon_is_not_modular() {
        let l = pentagon();
        assert!(!l.is_modular());
        let (a, b, x) = l.modularity_witness().unwrap();
        assert!(l.leq(a, b));
        assert_ne!(l.join(a, l.meet(x, b)), l.meet(l.join(a, x), b));
        // lexicographically first violation: a=x id order scan
        assert_eq!(
            (a, b, x),
            l.modularity_witness().unwrap(),
            "witness selection is deterministic"
        );
    }

    #[test]
    fn degenerate_lattice_is_flagged() {
        let l = Lattice::build_from_names("pt", &["*"], &[]).unwrap();
        assert!(l.is_degenerate());
        assert_eq!(l.bottom(), l.top());
    }

    #[test]
    fn essential_and_superfluous_duality() {
        let l = m2();
        assert!(l.is_essential(l.top()));
        assert!(l.is_superfluous(l.bottom()));
        // a ^ b = 0 kills all proper essentials
        assert_eq!(l.min_essential().unwrap(), l.top());
        assert_eq!(l.max_superfluous().unwrap(), l.bottom());
    }

    #[test]
    fn radical_socle_atoms() {
        let l = m2();
        assert_eq!(l.atoms().to_vec(), vec![1, 2]);
        assert_eq!(l.socle(), l.top());
        let two = Lattice::build_from_names("2", &["0", "1"], &[("0", "1")]).unwrap();
        assert_eq!(two.radical(), 0);
        assert_eq!(two.socle(), 1);
        assert_eq!(two.min_essential().unwrap(), 1);
        assert_eq!(two.max_superfluous().unwrap(), 0);
    }

    #[test]
    fn intervals_are_bounded_sublattices() {
        let l = m2();
        let iv = IntervalView::new(&l, 1, 3).unwrap();
        assert_eq!(iv.elements(), &[1, 3]);
        let whole = IntervalView::whole(&l);
        assert_eq!(whole.len(), 4);
        assert!(IntervalView::new(&l, 1, 2).is_err());
        let sub = iv.as_lattice("i");
        assert_eq!(sub.n(), 2);
    }

    #[test]
    fn independence() {
        let l = m2();
        assert!(l.is_independent(&[1, 2]).unwrap());
        assert!(matches!(
            l.is_independent(&[0, 1]),
            Err(LatticeError::BottomInFamily)
        ));
        // {a, b, 1} fails: 1 ^ (a v b) = 1
        assert!(!l.is_independent(&[1, 2, 3]).unwrap());
    }

    #[test]
    fn dual_round_trip() {
        let l = pentagon();
        let dd = Arc::new(l.dual()).dual();
        assert!(corpus::are_isomorphic(&l, &dd));
        assert!(Arc::new(Lattice::build_from_names("2", &["0", "1"], &[("0", "1")]).unwrap())
            .is_self_dual());
    }

    #[test]
    fn complements_are_symmetric() {
        for l in [m2(), pentagon()] {
            for x in 0..l.n() {
                for y in 0..l.n() {
                    assert_eq!(
                        l.complements_of(x).contains(y),
                        l.complements_of(y).contains(x)
                    );
                }
            }
        }
    }

    #[test]
    fn min_essential_is_least_essential() {
        for l in [m2(), pentagon()] {
            let e = l.min_essential().unwrap();
            for x in l.essential_elements().iter() {
                assert!(l.leq(e, x));
            }
            let s = l.max_superfluous().unwrap();
            for x in l.superfluous_elements().iter() {
                assert!(l.leq(x, s));
            }
        }
    }

    #[test]
    fn compact_elements_are_all_elements() {
        let l = m2();
        assert_eq!(l.compact_elements().len(), l.n());
    }
}
