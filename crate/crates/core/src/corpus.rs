//! Sources of test lattices: the named examples, exhaustive generation of
//! all small lattices up to isomorphism, a brute-force oracle generator,
//! subgroup lattices of finite abelian groups, and canonical forms.
//!
//! The main generator grows meet-semilattices one new maximal element at a
//! time (a lattice on `n` elements minus its top is exactly a meet-semilattice
//! on `n-1` elements, and conversely adding a fresh top to a finite
//! meet-semilattice always yields a lattice), deduplicating levels by
//! canonical form. The oracle generator instead enumerates naturally labeled
//! posets, filters the lattice axioms, and deduplicates by minimizing over
//! all label permutations; the two agree on every count they can both reach,
//! and neither count is ever hardcoded as truth.

use std::collections::HashSet;
use std::path::PathBuf;
use std::sync::Arc;

use crate::elemset::Elem;
use crate::error::{Error, LatticeError};
use crate::lattice::{IntervalView, Lattice};

/// Named example lattices used throughout the test corpus.
pub mod named {
    use super::*;

    /// Two-element chain.
    pub fn chain2() -> Arc<Lattice> {
        Arc::new(Lattice::build_from_names("chain2", &["0", "1"], &[("0", "1")]).unwrap())
    }

    /// The four-element diamond 0 < {a,b} < 1 (a Boolean algebra).
    pub fn m2() -> Arc<Lattice> {
        Arc::new(
            Lattice::build_from_names(
                "m2",
                &["0", "a", "b", "1"],
                &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
            )
            .unwrap(),
        )
    }

    /// Five elements, 0 < {a,b} < c < 1: two atoms under a single coatom.
    pub fn n_c1() -> Arc<Lattice> {
        Arc::new(
            Lattice::build_from_names(
                "n_c1",
                &["0", "a", "b", "c", "1"],
                &[("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("c", "1")],
            )
            .unwrap(),
        )
    }

    /// Six elements, self-dual, with exactly four complemented elements.
    pub fn qc6() -> Arc<Lattice> {
        Arc::new(
            Lattice::build_from_names(
                "qc6",
                &["0", "a", "b", "c", "d", "1"],
                &[
                    ("0", "a"),
                    ("0", "b"),
                    ("a", "c"),
                    ("b", "c"),
                    ("b", "d"),
                    ("c", "1"),
                    ("d", "1"),
                ],
            )
            .unwrap(),
        )
    }

    /// Finite truncation of the descending-chain example:
    /// 1 > {b,c} > a0 > a1 > ... > ak > 0. Capped at k = 3.
    pub fn chain_k(k: usize) -> Arc<Lattice> {
        assert!(k <= 3, "chain_k truncations are capped at k = 3");
        let mut names: Vec<String> = vec!["0".into()];
        for i in (0..=k).rev() {
            names.push(format!("a{i}"));
        }
        names.push("b".into());
        names.push("c".into());
        names.push("1".into());
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let mut covers: Vec<(&str, &str)> = Vec::new();
        for w in refs[..=k + 1].windows(2) {
            covers.push((w[0], w[1]));
        }
        covers.push(("a0", "b"));
        covers.push(("a0", "c"));
        covers.push(("b", "1"));
        covers.push(("c", "1"));
        Arc::new(
            Lattice::build(
                &format!("chain_k{k}"),
                names.clone(),
                &covers
                    .iter()
                    .map(|&(x, y)| {
                        (
                            names.iter().position(|n| n == x).unwrap(),
                            names.iter().position(|n| n == y).unwrap(),
                        )
                    })
                    .collect::<Vec<_>>(),
            )
            .unwrap(),
        )
    }

    pub fn all() -> Vec<Arc<Lattice>> {
        let mut v = vec![m2(), n_c1(), qc6(), chain2()];
        for k in 0..=3 {
            v.push(chain_k(k));
        }
        v
    }

    pub fn by_name(name: &str) -> Option<Arc<Lattice>> {
        all().into_iter().find(|l| l.name() == name)
    }
}

/// Canonical cover-set encoding of a lattice, stable under relabeling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }
}

fn encode_under(l: &Lattice, perm: &[usize]) -> Vec<u8> {
    // perm[i] = new label of element i; encoding packs leq bits of the
    // relabeled matrix row-major
    let n = l.n();
    let mut inv = vec![0usize; n];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    let mut bytes = vec![n as u8];
    let mut acc = 0u8;
    let mut nbits = 0;
    for i in 0..n {
        for j in 0..n {
            acc = (acc << 1) | u8::from(l.leq(inv[i], inv[j]));
            nbits += 1;
            if nbits == 8 {
                bytes.push(acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(acc << (8 - nbits));
    }
    bytes
}

/// Refinement-based canonical labeling: iterated partitioning by local
/// invariants and neighbor-class multisets, then brute-force minimization
/// within the surviving classes.
pub fn canonical_form(l: &Lattice) -> CanonicalForm {
    let n = l.n();
    // initial classes from order-invariant keys
    let mut key: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            vec![
                l.height(x),
                l.depth(x),
                l.down_covers_of(x).len(),
                l.up_covers_of(x).len(),
                l.downset(x).len(),
                l.upset(x).len(),
            ]
        })
        .collect();
    let mut color = assign_colors(&key);
    loop {
        for x in 0..n {
            let mut down: Vec<usize> = l.down_covers_of(x).iter().map(|&z| color[z]).collect();
            let mut up: Vec<usize> = l.up_covers_of(x).iter().map(|&z| color[z]).collect();
            down.sort_unstable();
            up.sort_unstable();
            key[x] = std::iter::once(color[x]).chain(down).chain(up).collect();
        }
        let next = assign_colors(&key);
        if next == color {
            break;
        }
        color = next;
    }

    // group elements by color; labels are handed out class by class
    let mut classes: Vec<Vec<Elem>> = Vec::new();
    let ncolors = color.iter().max().copied().unwrap_or(0) + 1;
    for c in 0..ncolors {
        let members: Vec<Elem> = (0..n).filter(|&x| color[x] == c).collect();
        if !members.is_empty() {
            classes.push(members);
        }
    }

    let mut best: Option<Vec<u8>> = None;
    let mut perm = vec![0usize; n];
    minimize(l, &classes, 0, 0, &mut perm, &mut best);
    CanonicalForm(best.expect("at least one labeling"))
}

fn assign_colors(keys: &[Vec<usize>]) -> Vec<usize> {
    let mut sorted: Vec<&Vec<usize>> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(&k).expect("key present") )
        .collect()
}

fn minimize(
    l: &Lattice,
    classes: &[Vec<Elem>],
    ci: usize,
    base: usize,
    perm: &mut Vec<usize>,
    best: &mut Option<Vec<u8>>,
) {
    if ci == classes.len() {
        let enc = encode_under(l, perm);
        if best.as_ref().map(|b| enc < *b).unwrap_or(true) {
            *best = Some(enc);
        }
        return;
    }
    let members = &classes[ci];
    let k = members.len();
    let mut order: Vec<Elem> = members.clone();
    permute_all(&mut order, 0, &mut |arrangement| {
        for (offset, &x) in arrangement.iter().enumerate() {
            perm[x] = base + offset;
        }
        minimize(l, classes, ci + 1, base + k, perm, best);
    });
}

fn permute_all(xs: &mut Vec<Elem>, k: usize, f: &mut impl FnMut(&[Elem])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute_all(xs, k + 1, f);
        xs.swap(k, i);
    }
}

pub fn are_isomorphic(a: &Lattice, b: &Lattice) -> bool {
    a.n() == b.n() && canonical_form(a) == canonical_form(b)
}

/// Largest `n` accepted by [`enumerate_lattices`].
pub const MAX_ENUM_N: usize = 10;

/// All lattices on `n` elements, one per isomorphism class, in canonical
/// order.
pub fn enumerate_lattices(n: usize) -> Vec<Lattice> {
    assert!(
        (1..=MAX_ENUM_N).contains(&n),
        "enumeration supports 1..={MAX_ENUM_N} elements"
    );
    if n == 1 {
        return vec![Lattice::build("L1_0", vec!["e0".into()], &[]).unwrap()];
    }
    // grow meet-semilattices on n-1 elements, one new maximal element at a
    // time; `down[i]` is the bitmask of elements <= i, including i
    let mut level: Vec<Vec<u32>> = vec![vec![1]];
    for size in 2..n {
        let mut seen_labeled: HashSet<Vec<u32>> = HashSet::new();
        let mut seen_canon: HashSet<CanonicalForm> = HashSet::new();
        let mut next = Vec::new();
        for semi in &level {
            let k = semi.len();
            for d in 1u32..(1 << k) {
                if !extension_is_valid(semi, d) {
                    continue;
                }
                let mut grown = semi.clone();
                grown.push(d | (1 << k));
                grown.sort_unstable();
                if !seen_labeled.insert(grown.clone()) {
                    continue;
                }
                let lat = complete_with_top(&grown, &format!("L{}_tmp", size + 1));
                if seen_canon.insert(canonical_form(&lat)) {
                    next.push(grown);
                }
            }
        }
        let _ = size;
        level = next;
    }
    let mut out: Vec<(CanonicalForm, Vec<u32>)> = level
        .into_iter()
        .map(|semi| {
            let lat = complete_with_top(&semi, "tmp");
            (canonical_form(&lat), semi)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.iter()
        .enumerate()
        .map(|(i, (_, semi))| complete_with_top(semi, &format!("L{n}_{i}")))
        .collect()
}

/// The new element's down-set must be down-closed and must give every
/// existing element a meet with the newcomer (a unique maximal common lower
/// bound).
fn extension_is_valid(down: &[u32], d: u32) -> bool {
    let k = down.len();
    for i in 0..k {
        if d >> i & 1 == 1 && down[i] & !d != 0 {
            return false;
        }
    }
    for u in 0..k {
        let t = d & down[u];
        if t == 0 {
            return false; // meet with u would not exist
        }
        let has_max = (0..k).any(|m| t >> m & 1 == 1 && t & !down[m] == 0);
        if !has_max {
            return false;
        }
    }
    true
}

fn complete_with_top(down: &[u32], name: &str) -> Lattice {
    let k = down.len();
    let names: Vec<String> = (0..=k).map(|i| format!("e{i}")).collect();
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i != j && down[j] >> i & 1 == 1 {
                pairs.push((i, j));
            }
        }
        pairs.push((i, k)); // the builder recomputes true covers
    }
    Lattice::build(name, names, &pairs).expect("semilattice plus top is a lattice")
}

/// Brute-force oracle: enumerate naturally labeled posets, keep those with
/// all meets and joins, deduplicate by minimizing over every permutation.
/// Practical up to 6 elements.
pub fn oracle_lattices(n: usize) -> Vec<Lattice> {
    assert!((1..=6).contains(&n), "the oracle is bounded to 1..=6 elements");
    let mut level: Vec<Vec<u32>> = vec![vec![1]];
    for size in 2..=n {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut next = Vec::new();
        for poset in &level {
            let k = poset.len();
            for d in 0u32..(1 << k) {
                // any down-closed strict down-set works for a poset
                if (0..k).any(|i| d >> i & 1 == 1 && poset[i] & !d != 0) {
                    continue;
                }
                let mut grown = poset.clone();
                grown.push(d | (1 << k));
                if seen.insert(grown.clone()) {
                    next.push(grown);
                }
            }
        }
        let _ = size;
        level = next;
    }

    let mut classes: HashSet<Vec<u8>> = HashSet::new();
    let mut reps = Vec::new();
    for poset in &level {
        if !poset_is_lattice(poset) {
            continue;
        }
        let lat = poset_to_lattice(poset, "tmp");
        let form = min_form_all_perms(&lat);
        if classes.insert(form) {
            reps.push(poset.clone());
        }
    }
    let mut out: Vec<(Vec<u8>, Vec<u32>)> = reps
        .into_iter()
        .map(|p| (min_form_all_perms(&poset_to_lattice(&p, "tmp")), p))
        .collect();
    out.sort();
    out.iter()
        .enumerate()
        .map(|(i, (_, p))| poset_to_lattice(p, &format!("O{n}_{i}")))
        .collect()
}

fn poset_is_lattice(down: &[u32]) -> bool {
    let n = down.len();
    let up = |i: usize| -> u32 {
        let mut m = 0;
        for (j, dj) in down.iter().enumerate() {
            if dj >> i & 1 == 1 {
                m |= 1 << j;
            }
        }
        m
    };
    let ups: Vec<u32> = (0..n).map(up).collect();
    for x in 0..n {
        for y in 0..n {
            let lower = down[x] & down[y];
            if !(0..n).any(|m| lower >> m & 1 == 1 && lower & !down[m] == 0) {
                return false;
            }
            let upper = ups[x] & ups[y];
            if !(0..n).any(|m| upper >> m & 1 == 1 && upper & !ups[m] == 0) {
                return false;
            }
        }
    }
    true
}

fn poset_to_lattice(down: &[u32], name: &str) -> Lattice {
    let n = down.len();
    let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && down[j] >> i & 1 == 1 {
                pairs.push((i, j));
            }
        }
    }
    Lattice::build(name, names, &pairs).expect("filtered poset is a lattice")
}

/// Minimum encoding over all n! relabelings; independent of the refinement
/// canonicalizer on purpose.
fn min_form_all_perms(l: &Lattice) -> Vec<u8> {
    let n = l.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u8>> = None;
    permute_all(&mut perm, 0, &mut |p| {
        // p maps position -> element; invert to element -> label
        let mut lab = vec![0usize; n];
        for (pos, &x) in p.iter().enumerate() {
            lab[x] = pos;
        }
        let enc = encode_under(l, &lab);
        if best.as_ref().map(|b| enc < *b).unwrap_or(true) {
            best = Some(enc);
        }
    });
    best.expect("some labeling")
}

const GROUP_ORDER_BOUND: u64 = 32;

/// The subgroup lattice of a finite abelian group given as a product of
/// cyclic prime-power factors, ordered by inclusion. Always modular; this is
/// asserted before returning.
pub fn subgroup_lattice(factors: &[u64]) -> Result<Lattice, LatticeError> {
    if factors.is_empty() {
        return Err(LatticeError::NoElements);
    }
    for &f in factors {
        if !is_prime_power(f) {
            return Err(LatticeError::NotPrimePower { factor: f });
        }
    }
    let order: u64 = factors.iter().product();
    if order > GROUP_ORDER_BOUND {
        return Err(LatticeError::OrderBound {
            order,
            bound: GROUP_ORDER_BOUND,
        });
    }
    let order = order as usize;
    let k = factors.len();

    // element index <-> mixed-radix coordinates
    let coords = |mut e: usize| -> Vec<u64> {
        let mut v = Vec::with_capacity(k);
        for &f in factors {
            v.push((e as u64) % f);
            e /= f as usize;
        }
        v
    };
    let index = |v: &[u64]| -> usize {
        let mut e = 0usize;
        for i in (0..k).rev() {
            e = e * factors[i] as usize + v[i] as usize;
        }
        e
    };
    let add = |a: usize, b: usize| -> usize {
        let (ca, cb) = (coords(a), coords(b));
        let sum: Vec<u64> = (0..k).map(|i| (ca[i] + cb[i]) % factors[i]).collect();
        index(&sum)
    };

    let closure = |seed: u64| -> u64 {
        let mut set = seed | 1; // identity element has index 0
        loop {
            let mut grew = false;
            for a in 0..order {
                if set >> a & 1 == 0 {
                    continue;
                }
                for b in 0..order {
                    if set >> b & 1 == 1 {
                        let c = add(a, b);
                        if set >> c & 1 == 0 {
                            set |= 1 << c;
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                return set;
            }
        }
    };

    let mut subgroups: Vec<u64> = vec![1];
    let mut seen: HashSet<u64> = subgroups.iter().copied().collect();
    let mut frontier = subgroups.clone();
    while let Some(h) = frontier.pop() {
        for g in 1..order {
            if h >> g & 1 == 1 {
                continue;
            }
            let bigger = closure(h | (1 << g));
            if seen.insert(bigger) {
                subgroups.push(bigger);
                frontier.push(bigger);
            }
        }
    }
    subgroups.sort_by_key(|&h| (h.count_ones(), h));

    let names: Vec<String> = (0..subgroups.len()).map(|i| format!("s{i}")).collect();
    let mut pairs = Vec::new();
    for (i, &hi) in subgroups.iter().enumerate() {
        for (j, &hj) in subgroups.iter().enumerate() {
            if i != j && hi & !hj == 0 {
                pairs.push((i, j));
            }
        }
    }
    let spec_name = factors
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join("x");
    let l = Lattice::build(&format!("sub_{spec_name}"), names, &pairs)?;
    if !l.is_modular() {
        return Err(LatticeError::InternalInvariantViolation(
            "subgroup lattice of an abelian group must be modular".into(),
        ));
    }
    Ok(l)
}

fn is_prime_power(mut f: u64) -> bool {
    if f < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= f {
        if f % p == 0 {
            while f % p == 0 {
                f /= p;
            }
            return f == 1;
        }
        p += 1;
    }
    true // f itself is prime
}

/// What a corpus is built from.
#[derive(Debug, Clone, Default)]
pub struct CorpusSpec {
    /// Upper bound on element count for generated lattices (0 disables
    /// generation).
    pub max_elements: usize,
    pub modular_only: bool,
    /// Allow the degenerate one-element lattice into generated output.
    pub include_one_element: bool,
    /// Names from [`named::all`] to include.
    pub include_named: Vec<String>,
    /// Abelian group factor lists for subgroup lattices.
    pub subgroup_specs: Vec<Vec<u64>>,
    /// Lattice files to ingest.
    pub files: Vec<PathBuf>,
}

/// Builds the corpus: generated sizes ascending, then named examples, then
/// subgroup lattices, then files; isomorphic duplicates dropped (first
/// occurrence wins).
pub fn build_corpus(spec: &CorpusSpec) -> Result<Vec<Arc<Lattice>>, Error> {
    let mut out: Vec<Arc<Lattice>> = Vec::new();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut push = |l: Lattice, out: &mut Vec<Arc<Lattice>>| {
        if seen.insert(canonical_form(&l)) {
            out.push(Arc::new(l));
        }
    };

    if spec.max_elements > 0 {
        let lo = if spec.include_one_element { 1 } else { 2 };
        for n in lo..=spec.max_elements {
            for l in enumerate_lattices(n) {
                if spec.modular_only && !l.is_modular() {
                    continue;
                }
                push(l, &mut out);
            }
        }
    }
    for name in &spec.include_named {
        let l = named::by_name(name).ok_or_else(|| {
            Error::Lattice(LatticeError::UnknownElement {
                name: format!("named example `{name}`"),
            })
        })?;
        if spec.modular_only && !l.is_modular() {
            continue;
        }
        push((*l).clone(), &mut out);
    }
    for factors in &spec.subgroup_specs {
        push(subgroup_lattice(factors)?, &mut out);
    }
    for path in &spec.files {
        let text = std::fs::read_to_string(path)?;
        let (ls, _) = crate::format::parse_lattices(&text)?;
        for l in ls {
            if spec.modular_only && !l.is_modular() {
                continue;
            }
            push(l, &mut out);
        }
    }
    Ok(out)
}

/// Convenience: every modular lattice with `2..=max_n` elements.
pub fn modular_corpus(max_n: usize) -> Vec<Arc<Lattice>> {
    build_corpus(&CorpusSpec {
        max_elements: max_n,
        modular_only: true,
        ..CorpusSpec::default()
    })
    .expect("generation cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_examples_validate() {
        for l in named::all() {
            assert!(l.n() >= 2);
            assert!(l.is_modular(), "{} must be modular", l.name());
        }
        assert_eq!(named::m2().complemented_elements().len(), 4);
        assert_eq!(named::qc6().n(), 6);
        assert_eq!(named::chain_k(0).n(), 5);
        assert_eq!(named::chain_k(3).n(), 8);
    }

    #[test]
    fn qc6_has_the_stated_complements() {
        let l = named::qc6();
        let c: Vec<&str> = l
            .complemented_elements()
            .iter()
            .map(|e| l.element_name(e))
            .collect();
        assert_eq!(c, vec!["0", "a", "d", "1"]);
        let (cc, dd) = (
            l.element_by_name("c").unwrap(),
            l.element_by_name("d").unwrap(),
        );
        assert_eq!(l.element_name(l.meet(cc, dd)), "b");
        assert_eq!(l.element_name(l.radical()), "b");
    }

    #[test]
    fn canonical_forms_are_relabeling_invariant() {
        let a = named::m2();
        let b = Lattice::build_from_names(
            "m2_relabeled",
            &["x", "top", "bot", "y"],
            &[("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")],
        )
        .unwrap();
        assert!(are_isomorphic(&a, &b));
        let chain4 =
            Lattice::build_from_names("c4", &["0", "x", "y", "1"], &[("0", "x"), ("x", "y"), ("y", "1")])
                .unwrap();
        assert!(!are_isomorphic(&a, &chain4));
    }

    #[test]
    fn qc6_is_self_dual() {
        let l = named::qc6();
        assert!(are_isomorphic(&l, &l.dual()));
        assert!(l.is_self_dual());
        assert!(!named::n_c1().is_self_dual());
        assert!(named::chain2().is_self_dual());
    }

    #[test]
    fn small_counts_match_between_generators() {
        let expected = [1usize, 1, 1, 2, 5, 15];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let fast = enumerate_lattices(n);
            assert_eq!(fast.len(), want, "orderly count at n={n}");
            let slow = oracle_lattices(n);
            assert_eq!(slow.len(), want, "oracle count at n={n}");
            // same isomorphism classes, not just the same count
            let fast_forms: HashSet<Vec<u8>> =
                fast.iter().map(min_form_all_perms).collect();
            let slow_forms: HashSet<Vec<u8>> =
                slow.iter().map(min_form_all_perms).collect();
            assert_eq!(fast_forms, slow_forms, "class sets at n={n}");
        }
    }

    #[test]
    fn four_element_lattices_are_chain_and_diamond() {
        let ls = enumerate_lattices(4);
        assert_eq!(ls.len(), 2);
        let forms: HashSet<CanonicalForm> = ls.iter().map(canonical_form).collect();
        assert!(forms.contains(&canonical_form(&named::m2())));
        let c4 = Lattice::build_from_names(
            "c4",
            &["0", "x", "y", "1"],
            &[("0", "x"), ("x", "y"), ("y", "1")],
        )
        .unwrap();
        assert!(forms.contains(&canonical_form(&c4)));
    }

    #[test]
    fn modular_filter_drops_the_pentagon() {
        let all5 = enumerate_lattices(5);
        assert_eq!(all5.len(), 5);
        let modular: Vec<_> = all5.iter().filter(|l| l.is_modular()).collect();
        assert_eq!(modular.len(), 4);
        let pentagon = Lattice::build_from_names(
            "n5",
            &["0", "x", "y", "z", "1"],
            &[("0", "x"), ("x", "y"), ("y", "1"), ("0", "z"), ("z", "1")],
        )
        .unwrap();
        assert!(all5.iter().any(|l| are_isomorphic(l, &pentagon)));
        assert!(!modular.iter().any(|l| are_isomorphic(l, &pentagon)));
    }

    #[test]
    fn subgroup_lattices_of_small_groups() {
        let m3 = subgroup_lattice(&[2, 2]).unwrap();
        assert_eq!(m3.n(), 5);
        assert_eq!(m3.atoms().len(), 3);
        let z4 = subgroup_lattice(&[4]).unwrap();
        assert_eq!(z4.n(), 3);
        assert_eq!(z4.atoms().len(), 1);
        let z2z4 = subgroup_lattice(&[2, 4]).unwrap();
        assert_eq!(z2z4.n(), 8);
        assert!(z2z4.is_modular());
        assert!(matches!(
            subgroup_lattice(&[6]),
            Err(LatticeError::NotPrimePower { factor: 6 })
        ));
        assert!(matches!(
            subgroup_lattice(&[64]),
            Err(LatticeError::OrderBound { .. })
        ));
    }

    #[test]
    fn corpus_dedups_across_sources() {
        let spec = CorpusSpec {
            max_elements: 4,
            include_named: vec!["m2".into()],
            ..CorpusSpec::default()
        };
        let corpus = build_corpus(&spec).unwrap();
        // m2 is already among the generated 4-element lattices
        assert_eq!(corpus.len(), 1 + 1 + 2);
    }

    #[test]
    fn isomorphism_agrees_with_interval_search() {
        for a in enumerate_lattices(5) {
            let a = Arc::new(a);
            for b in enumerate_lattices(5) {
                let b = Arc::new(b);
                let via_form = are_isomorphic(&a, &b);
                let via_search = !crate::iso::interval_isomorphisms(
                    &IntervalView::whole(&a),
                    &IntervalView::whole(&b),
                )
                .is_empty();
                assert_eq!(via_form, via_search);
            }
        }
    }
}
