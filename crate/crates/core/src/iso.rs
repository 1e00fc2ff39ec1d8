//! Order-isomorphism search between lattice intervals.
//!
//! Backtracking over the two carrier sets, pruned by the local invariants
//! (height, depth, cover degrees) of each element within its interval.
//! Candidates are tried in element-id order so the result list is
//! deterministic.

use crate::elemset::Elem;
use crate::lattice::IntervalView;

/// An order isomorphism between two intervals, stored as sorted
/// `(source, target)` pairs over parent element ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalIso {
    pairs: Vec<(Elem, Elem)>,
}

impl IntervalIso {
    pub fn pairs(&self) -> &[(Elem, Elem)] {
        &self.pairs
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.pairs
            .iter()
            .find(|&&(s, _)| s == x)
            .map(|&(_, t)| t)
            .expect("element in the isomorphism's domain")
    }

    pub fn inverse(&self) -> IntervalIso {
        let mut pairs: Vec<(Elem, Elem)> = self.pairs.iter().map(|&(s, t)| (t, s)).collect();
        pairs.sort_unstable();
        IntervalIso { pairs }
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.iter().all(|&(s, t)| s == t)
    }
}

/// All order isomorphisms from `a` onto `b` (bijections preserving and
/// reflecting the order; for lattice intervals these are exactly the lattice
/// isomorphisms). Empty if the intervals cannot match.
pub fn interval_isomorphisms(a: &IntervalView, b: &IntervalView) -> Vec<IntervalIso> {
    if a.len() != b.len() {
        return Vec::new();
    }
    let n = a.len();
    let src: Vec<Elem> = a.elements().to_vec();
    let tgt: Vec<Elem> = b.elements().to_vec();
    let pa: Vec<_> = src.iter().map(|&x| a.local_profile(x)).collect();
    let pb: Vec<_> = tgt.iter().map(|&x| b.local_profile(x)).collect();
    {
        let mut sa = pa.clone();
        let mut sb = pb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Vec::new();
        }
    }

    let la = a.lattice();
    let lb = b.lattice();
    let mut image = vec![usize::MAX; n]; // position in tgt assigned to src position
    let mut used = vec![false; n];
    let mut found = Vec::new();

    fn rec(
        k: usize,
        n: usize,
        src: &[Elem],
        tgt: &[Elem],
        pa: &[(usize, usize, usize, usize)],
        pb: &[(usize, usize, usize, usize)],
        la: &crate::lattice::Lattice,
        lb: &crate::lattice::Lattice,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<IntervalIso>,
    ) {
        if k == n {
            let mut pairs: Vec<(Elem, Elem)> =
                (0..n).map(|i| (src[i], tgt[image[i]])).collect();
            pairs.sort_unstable();
            found.push(IntervalIso { pairs });
            return;
        }
        'cand: for j in 0..n {
            if used[j] || pa[k] != pb[j] {
                continue;
            }
            for i in 0..k {
                let ord_src = (la.leq(src[i], src[k]), la.leq(src[k], src[i]));
                let ord_tgt = (lb.leq(tgt[image[i]], tgt[j]), lb.leq(tgt[j], tgt[image[i]]));
                if ord_src != ord_tgt {
                    continue 'cand;
                }
            }
            image[k] = j;
            used[j] = true;
            rec(k + 1, n, src, tgt, pa, pb, la, lb, image, used, found);
            used[j] = false;
            image[k] = usize::MAX;
        }
    }

    rec(
        0, n, &src, &tgt, &pa, &pb, la, lb, &mut image, &mut used, &mut found,
    );
    found.sort_by(|x, y| x.pairs.cmp(&y.pairs));
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Lattice;
    use std::sync::Arc;

    #[test]
    fn diamond_has_two_automorphisms() {
        let l = Arc::new(
            Lattice::build_from_names(
                "m2",
                &["0", "a", "b", "1"],
                &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
            )
            .unwrap(),
        );
        let w = IntervalView::whole(&l);
        let autos = interval_isomorphisms(&w, &w);
        assert_eq!(autos.len(), 2);
        assert!(autos[0].is_identity());
        assert_eq!(autos[1].apply(1), 2);
        assert_eq!(autos[1].apply(2), 1);
        // composing two automorphisms stays order-preserving
        let composed: Vec<Elem> = (0..4).map(|x| autos[1].apply(autos[1].apply(x))).collect();
        assert_eq!(composed, vec![0, 1, 2, 3]);
    }

    #[test]
    fn size_mismatch_gives_empty() {
        let l = Arc::new(
            Lattice::build_from_names(
                "m2",
                &["0", "a", "b", "1"],
                &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
            )
            .unwrap(),
        );
        let w = IntervalView::whole(&l);
        let i = IntervalView::new(&l, 0, 1).unwrap();
        assert!(interval_isomorphisms(&w, &i).is_empty());
        assert_eq!(interval_isomorphisms(&i, &i).len(), 1);
    }

    #[test]
    fn chain_vs_antichain_shape() {
        let c3 = Arc::new(
            Lattice::build_from_names("c3", &["0", "m", "1"], &[("0", "m"), ("m", "1")]).unwrap(),
        );
        let l = Arc::new(
            Lattice::build_from_names(
                "m2",
                &["0", "a", "b", "1"],
                &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
            )
            .unwrap(),
        );
        // [0,1] in c3 is a 3-chain, no 3-element interval of m2 exists at all;
        // compare the 2-chains instead
        let i1 = IntervalView::new(&c3, 0, 1).unwrap();
        let i2 = IntervalView::new(&l, 1, 3).unwrap();
        let isos = interval_isomorphisms(&i1, &i2);
        assert_eq!(isos.len(), 1);
        assert_eq!(isos[0].apply(0), 1);
        assert_eq!(isos[0].apply(1), 3);
        assert_eq!(isos[0].inverse().apply(1), 0);
    }
}
