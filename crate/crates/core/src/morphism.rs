//! Linear morphisms between (intervals of) finite bounded lattices.
//!
//! A map `f : [lo,hi] -> [lo',hi']` is linear when it has a kernel `k` (the
//! largest domain element sent to the codomain's bottom) such that
//! `f(x) = f(x v k)` for every `x`, and `f` restricted to `[k, hi]` is an
//! order isomorphism onto `[lo', f(hi)]`. Validation infers the kernel and
//! checks both clauses; every constructor funnels through it.
//!
//! The value vector is the source of truth for a morphism; the defining
//! triple (kernel, image, restriction fingerprint) is recoverable as its
//! [`MorphismKey`] and identifies endomorphisms uniquely.

use std::fmt;
use std::sync::Arc;

use crate::elemset::Elem;
use crate::error::MorphismError;
use crate::iso::{interval_isomorphisms, IntervalIso};
use crate::lattice::{IntervalView, Lattice};

#[derive(Debug, Clone)]
pub struct LinearMorphism {
    domain: IntervalView,
    codomain: IntervalView,
    values: Vec<Elem>,
    kernel: Elem,
    image: Elem,
}

/// Canonical identity of an endomorphism: kernel, image and the values taken
/// on `[kernel, top]`. Two endomorphisms of one lattice are equal as maps iff
/// their keys are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorphismKey {
    pub kernel: Elem,
    pub image: Elem,
    pub fingerprint: Vec<(Elem, Elem)>,
}

impl PartialEq for LinearMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.domain.same_interval(&other.domain)
            && self.codomain.same_interval(&other.codomain)
            && self.values == other.values
    }
}

impl Eq for LinearMorphism {}

impl LinearMorphism {
    /// Validates a total map as a linear morphism, inferring its kernel.
    /// `values[i]` is the image of `domain.elements()[i]`.
    pub fn validate(
        domain: IntervalView,
        codomain: IntervalView,
        values: Vec<Elem>,
    ) -> Result<LinearMorphism, MorphismError> {
        let dl = Arc::clone(domain.lattice());
        let cl = Arc::clone(codomain.lattice());
        if values.len() != domain.len() {
            return Err(MorphismError::WrongArity {
                got: values.len(),
                need: domain.len(),
            });
        }
        for &v in &values {
            if !codomain.contains(v) {
                return Err(MorphismError::ValueOutsideCodomain {
                    value: cl.element_name(v).to_string(),
                });
            }
        }
        let at = |x: Elem| values[domain.index_of(x).expect("domain element")];

        // kernel = maximum of the zero fiber
        let fiber: Vec<Elem> = domain
            .elements()
            .iter()
            .copied()
            .filter(|&x| at(x) == codomain.lo())
            .collect();
        let kernel = fiber
            .iter()
            .copied()
            .find(|&k| fiber.iter().all(|&z| dl.leq(z, k)))
            .ok_or_else(|| MorphismError::NoKernel {
                fiber: fiber.iter().map(|&x| dl.element_name(x).to_string()).collect(),
            })?;

        // clause 1: constant on kernel cosets
        for &x in domain.elements() {
            if at(x) != at(dl.join(x, kernel)) {
                return Err(MorphismError::NotConstantOnKernelCosets {
                    x: dl.element_name(x).to_string(),
                    kernel: dl.element_name(kernel).to_string(),
                });
            }
        }

        // monotonicity holds for every linear morphism; checked on its own so
        // a violation is reported before the full isomorphism test
        for &x in domain.elements() {
            for &y in domain.elements() {
                if dl.leq(x, y) && !cl.leq(at(x), at(y)) {
                    return Err(MorphismError::NotIntervalIso {
                        reason: format!(
                            "not monotone: {} <= {} but f-images are not",
                            dl.element_name(x),
                            dl.element_name(y)
                        ),
                    });
                }
            }
        }

        // clause 2: bijective order iso [kernel, hi] -> [lo', image]
        let image = at(domain.hi());
        let above: Vec<Elem> = domain
            .elements()
            .iter()
            .copied()
            .filter(|&x| dl.leq(kernel, x))
            .collect();
        let target: Vec<Elem> = codomain
            .elements()
            .iter()
            .copied()
            .filter(|&y| cl.leq(y, image))
            .collect();
        if above.len() != target.len() {
            return Err(MorphismError::NotIntervalIso {
                reason: format!(
                    "[{},{}] has {} elements but [{},{}] has {}",
                    dl.element_name(kernel),
                    dl.element_name(domain.hi()),
                    above.len(),
                    cl.element_name(codomain.lo()),
                    cl.element_name(image),
                    target.len()
                ),
            });
        }
        let mut hit: Vec<Elem> = above.iter().map(|&x| at(x)).collect();
        hit.sort_unstable();
        let mut want = target.clone();
        want.sort_unstable();
        if hit != want {
            return Err(MorphismError::NotIntervalIso {
                reason: "restriction above the kernel is not onto the image interval".into(),
            });
        }
        for &x in &above {
            for &y in &above {
                if dl.leq(x, y) != cl.leq(at(x), at(y)) {
                    return Err(MorphismError::NotIntervalIso {
                        reason: format!(
                            "order not reflected at ({}, {})",
                            dl.element_name(x),
                            dl.element_name(y)
                        ),
                    });
                }
            }
        }

        Ok(LinearMorphism {
            domain,
            codomain,
            values,
            kernel,
            image,
        })
    }

    pub fn zero(domain: IntervalView, codomain: IntervalView) -> LinearMorphism {
        let values = vec![codomain.lo(); domain.len()];
        LinearMorphism::validate(domain, codomain, values).expect("constant-bottom map is linear")
    }

    pub fn identity(lattice: &Arc<Lattice>) -> LinearMorphism {
        let w = IntervalView::whole(lattice);
        let values = w.elements().to_vec();
        LinearMorphism::validate(w.clone(), w, values).expect("identity is linear")
    }

    /// The projection on `x` along the chosen complement `x'`:
    /// `a |-> (a v x') ^ x`. Requires a modular ambient lattice to be linear;
    /// on non-modular input validation fails and the error is surfaced.
    pub fn projection(
        lattice: &Arc<Lattice>,
        x: Elem,
        x_prime: Elem,
    ) -> Result<LinearMorphism, MorphismError> {
        if !lattice.is_complement_pair(x, x_prime) {
            return Err(MorphismError::NotComplementPair {
                x: lattice.element_name(x).to_string(),
                x_prime: lattice.element_name(x_prime).to_string(),
            });
        }
        let w = IntervalView::whole(lattice);
        let values: Vec<Elem> = (0..lattice.n())
            .map(|a| lattice.meet(lattice.join(a, x_prime), x))
            .collect();
        LinearMorphism::validate(w.clone(), w, values)
    }

    /// Inclusion of `[0, x]` into the whole lattice.
    pub fn inclusion(lattice: &Arc<Lattice>, x: Elem) -> LinearMorphism {
        let dom = IntervalView::new(lattice, lattice.bottom(), x).expect("bottom <= x");
        let cod = IntervalView::whole(lattice);
        let values = dom.elements().to_vec();
        LinearMorphism::validate(dom, cod, values).expect("inclusion is linear")
    }

    /// The quotient map `L -> [a, 1]`, `y |-> a v y`.
    pub fn quotient_map(lattice: &Arc<Lattice>, a: Elem) -> LinearMorphism {
        let dom = IntervalView::whole(lattice);
        let cod = IntervalView::new(lattice, a, lattice.top()).expect("a <= top");
        let values: Vec<Elem> = (0..lattice.n()).map(|y| lattice.join(a, y)).collect();
        LinearMorphism::validate(dom, cod, values).expect("join-with-a is linear")
    }

    pub fn domain(&self) -> &IntervalView {
        &self.domain
    }

    pub fn codomain(&self) -> &IntervalView {
        &self.codomain
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.values[self.domain.index_of(x).expect("element of the domain")]
    }

    pub fn kernel(&self) -> Elem {
        self.kernel
    }

    /// `f(top of domain)`.
    pub fn image(&self) -> Elem {
        self.image
    }

    pub fn is_endomorphism(&self) -> bool {
        self.domain.same_interval(&self.codomain) && self.domain.is_whole()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel == self.domain.lo()
    }

    pub fn is_surjective(&self) -> bool {
        self.image == self.codomain.hi()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn is_idempotent(&self) -> bool {
        self.domain.same_interval(&self.codomain)
            && self
                .domain
                .elements()
                .iter()
                .all(|&x| self.apply(self.apply(x)) == self.apply(x))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == self.codomain.lo())
    }

    pub fn is_identity_map(&self) -> bool {
        self.domain.same_interval(&self.codomain)
            && self.domain.elements().iter().all(|&x| self.apply(x) == x)
    }

    /// Defining-triple view of the morphism.
    pub fn key(&self) -> MorphismKey {
        let dl = self.domain.lattice();
        let fingerprint: Vec<(Elem, Elem)> = self
            .domain
            .elements()
            .iter()
            .copied()
            .filter(|&x| dl.leq(self.kernel, x))
            .map(|x| (x, self.apply(x)))
            .collect();
        MorphismKey {
            kernel: self.kernel,
            image: self.image,
            fingerprint,
        }
    }

    /// Pointwise composition `g . f` (apply `f` first). Every value of `f`
    /// must land inside `g`'s domain interval.
    pub fn compose(g: &LinearMorphism, f: &LinearMorphism) -> Result<LinearMorphism, MorphismError> {
        if !Arc::ptr_eq(f.codomain.lattice(), g.domain.lattice()) {
            return Err(MorphismError::DomainMismatch(
                "inner codomain and outer domain live in different lattices".into(),
            ));
        }
        for &v in &f.values {
            if !g.domain.contains(v) {
                return Err(MorphismError::DomainMismatch(format!(
                    "value `{}` of the inner map is outside the outer domain",
                    f.codomain.lattice().element_name(v)
                )));
            }
        }
        let values: Vec<Elem> = f.values.iter().map(|&v| g.apply(v)).collect();
        LinearMorphism::validate(f.domain.clone(), g.codomain.clone(), values)
    }

    /// Extension of `phi : [0,x] -> [0,y]` to an endomorphism of the whole
    /// lattice via the projection on `x` along `x_prime` followed by `phi`
    /// and the inclusion of `[0,y]`.
    pub fn extend_hat(
        phi: &LinearMorphism,
        x: Elem,
        x_prime: Elem,
        y: Elem,
    ) -> Result<LinearMorphism, MorphismError> {
        let l = Arc::clone(phi.domain.lattice());
        if phi.domain.lo() != l.bottom() || phi.domain.hi() != x {
            return Err(MorphismError::DomainMismatch(format!(
                "expected domain [{}, {}]",
                l.element_name(l.bottom()),
                l.element_name(x)
            )));
        }
        if !Arc::ptr_eq(phi.codomain.lattice(), &l)
            || phi.codomain.lo() != l.bottom()
            || phi.codomain.hi() != y
        {
            return Err(MorphismError::DomainMismatch(format!(
                "expected codomain [{}, {}]",
                l.element_name(l.bottom()),
                l.element_name(y)
            )));
        }
        if !l.is_complement_pair(x, x_prime) {
            return Err(MorphismError::NotComplementPair {
                x: l.element_name(x).to_string(),
                x_prime: l.element_name(x_prime).to_string(),
            });
        }
        let w = IntervalView::whole(&l);
        let values: Vec<Elem> = (0..l.n())
            .map(|a| phi.apply(l.meet(l.join(a, x_prime), x)))
            .collect();
        LinearMorphism::validate(w.clone(), w, values)
    }

    /// Restriction of `f` to the interval `dom`, landing in `cod`.
    pub fn restrict(
        f: &LinearMorphism,
        dom: &IntervalView,
        cod: &IntervalView,
    ) -> Result<LinearMorphism, MorphismError> {
        let dl = f.domain.lattice();
        for &x in dom.elements() {
            if !f.domain.contains(x) {
                return Err(MorphismError::DomainMismatch(format!(
                    "`{}` is outside the morphism's domain",
                    dl.element_name(x)
                )));
            }
        }
        for &x in dom.elements() {
            if !cod.contains(f.apply(x)) {
                return Err(MorphismError::NotInvariant {
                    lo: dl.element_name(dom.lo()).to_string(),
                    hi: dl.element_name(dom.hi()).to_string(),
                });
            }
        }
        let values: Vec<Elem> = dom.elements().iter().map(|&x| f.apply(x)).collect();
        LinearMorphism::validate(dom.clone(), cod.clone(), values)
    }

    /// Realize the triple `(kernel, image, theta)` as the endomorphism
    /// `x |-> theta(x v kernel)`.
    fn from_triple(l: &Arc<Lattice>, kernel: Elem, theta: &IntervalIso) -> LinearMorphism {
        let w = IntervalView::whole(l);
        let values: Vec<Elem> = (0..l.n()).map(|x| theta.apply(l.join(x, kernel))).collect();
        LinearMorphism::validate(w.clone(), w, values)
            .expect("triple realization is a linear endomorphism")
    }
}

impl fmt::Display for LinearMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dl = self.domain.lattice();
        let cl = self.codomain.lattice();
        write!(f, "{{")?;
        for (i, &x) in self.domain.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "{}->{}",
                dl.element_name(x),
                cl.element_name(self.values[i])
            )?;
        }
        write!(f, "}}")
    }
}

/// Exactly all linear endomorphisms of `l`, produced from the bijective
/// parameterization by triples (kernel, image, interval isomorphism) and
/// sorted canonically (lexicographic on the value vector).
pub fn enumerate_endomorphisms(l: &Arc<Lattice>) -> Vec<LinearMorphism> {
    let mut out = Vec::new();
    for kernel in 0..l.n() {
        let above = IntervalView::new(l, kernel, l.top()).expect("kernel <= top");
        for a_prime in 0..l.n() {
            let below = IntervalView::new(l, l.bottom(), a_prime).expect("bottom <= a'");
            for theta in interval_isomorphisms(&above, &below) {
                out.push(LinearMorphism::from_triple(l, kernel, &theta));
            }
        }
    }
    out.sort_by(|f, g| f.values.cmp(&g.values));
    for w in out.windows(2) {
        assert_ne!(
            w[0].values, w[1].values,
            "triple parameterization must be bijective"
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named;

    fn m2() -> Arc<Lattice> {
        named::m2()
    }

    fn by_values(l: &Arc<Lattice>, vals: &[&str]) -> LinearMorphism {
        let w = IntervalView::whole(l);
        let values: Vec<Elem> = vals.iter().map(|s| l.element_by_name(s).unwrap()).collect();
        LinearMorphism::validate(w.clone(), w, values).unwrap()
    }

    #[test]
    fn validates_the_diamond_phi() {
        let l = m2();
        let phi = by_values(&l, &["0", "a", "0", "a"]);
        assert_eq!(l.element_name(phi.kernel()), "b");
        assert_eq!(l.element_name(phi.image()), "a");
        assert!(phi.is_idempotent());
    }

    #[test]
    fn identity_and_zero() {
        let l = m2();
        let id = LinearMorphism::identity(&l);
        assert_eq!(id.kernel(), l.bottom());
        assert_eq!(id.image(), l.top());
        let w = IntervalView::whole(&l);
        let z = LinearMorphism::zero(w.clone(), w);
        assert_eq!(z.kernel(), l.top());
        assert_eq!(z.image(), l.bottom());
        // zero equals the projection onto bottom along top
        let p = LinearMorphism::projection(&l, l.bottom(), l.top()).unwrap();
        assert_eq!(p, z);
    }

    #[test]
    fn rejects_non_iso_above_kernel() {
        let l = m2();
        let w = IntervalView::whole(&l);
        let vals: Vec<Elem> = ["0", "a", "b", "a"]
            .iter()
            .map(|s| l.element_by_name(s).unwrap())
            .collect();
        let err = LinearMorphism::validate(w.clone(), w, vals).unwrap_err();
        assert!(matches!(err, MorphismError::NotIntervalIso { .. }));
    }

    #[test]
    fn rejects_fiber_without_maximum() {
        let l = m2();
        let w = IntervalView::whole(&l);
        let vals: Vec<Elem> = ["0", "0", "0", "1"]
            .iter()
            .map(|s| l.element_by_name(s).unwrap())
            .collect();
        let err = LinearMorphism::validate(w.clone(), w, vals).unwrap_err();
        assert!(matches!(err, MorphismError::NoKernel { .. }));
    }

    #[test]
    fn projection_is_the_papers_phi() {
        let l = m2();
        let a = l.element_by_name("a").unwrap();
        let b = l.element_by_name("b").unwrap();
        let p = LinearMorphism::projection(&l, a, b).unwrap();
        assert_eq!(p, by_values(&l, &["0", "a", "0", "a"]));
        assert!(p.is_idempotent());
        assert_eq!(p.kernel(), b);
        assert_eq!(p.image(), a);
        // projection on top along bottom is the identity
        let id = LinearMorphism::projection(&l, l.top(), l.bottom()).unwrap();
        assert!(id.is_identity_map());
        // not a complement pair
        assert!(matches!(
            LinearMorphism::projection(&l, a, a),
            Err(MorphismError::NotComplementPair { .. })
        ));
    }

    #[test]
    fn inclusion_and_quotient() {
        let l = m2();
        let a = l.element_by_name("a").unwrap();
        let inc = LinearMorphism::inclusion(&l, a);
        assert_eq!(inc.kernel(), l.bottom());
        assert_eq!(inc.image(), a);
        let n_c1 = named::n_c1();
        let c = n_c1.element_by_name("c").unwrap();
        let rho = LinearMorphism::quotient_map(&n_c1, c);
        assert_eq!(rho.kernel(), c);
        for x in 0..n_c1.n() {
            assert_eq!(rho.apply(x), n_c1.join(c, x));
        }
        // quotient by bottom behaves as the identity into [0,1]
        let rho0 = LinearMorphism::quotient_map(&l, l.bottom());
        assert!(rho0.is_identity_map());
    }

    #[test]
    fn composition_matches_the_example_products() {
        let l = m2();
        let tau = by_values(&l, &["0", "b", "a", "1"]);
        let phi = by_values(&l, &["0", "a", "0", "a"]);
        let tau_phi = LinearMorphism::compose(&tau, &phi).unwrap();
        assert_eq!(tau_phi, by_values(&l, &["0", "b", "0", "b"]));
        let id = LinearMorphism::identity(&l);
        assert_eq!(LinearMorphism::compose(&phi, &id).unwrap(), phi);
        let twice = LinearMorphism::compose(&tau_phi, &tau_phi).unwrap();
        assert!(twice.is_zero());
    }

    #[test]
    fn extend_hat_examples() {
        let l = m2();
        let a = l.element_by_name("a").unwrap();
        let b = l.element_by_name("b").unwrap();
        let dom = IntervalView::new(&l, l.bottom(), a).unwrap();
        let idnt =
            LinearMorphism::validate(dom.clone(), dom.clone(), dom.elements().to_vec()).unwrap();
        let hat = LinearMorphism::extend_hat(&idnt, a, b, a).unwrap();
        assert_eq!(hat, LinearMorphism::projection(&l, a, b).unwrap());

        let qc6 = named::qc6();
        let (a, b, d) = (
            qc6.element_by_name("a").unwrap(),
            qc6.element_by_name("b").unwrap(),
            qc6.element_by_name("d").unwrap(),
        );
        let ia = IntervalView::new(&qc6, qc6.bottom(), a).unwrap();
        let ib = IntervalView::new(&qc6, qc6.bottom(), b).unwrap();
        let isos = interval_isomorphisms(&ia, &ib);
        assert_eq!(isos.len(), 1);
        let theta = LinearMorphism::validate(
            ia.clone(),
            ib.clone(),
            ia.elements().iter().map(|&x| isos[0].apply(x)).collect(),
        )
        .unwrap();
        let hat = LinearMorphism::extend_hat(&theta, a, d, b).unwrap();
        let expect: Vec<&str> = vec!["0", "b", "0", "b", "0", "b"];
        for (x, want) in expect.iter().enumerate() {
            assert_eq!(qc6.element_name(hat.apply(x)), *want);
        }

        // a zero inner morphism extends to the zero endomorphism
        let zin = LinearMorphism::zero(ia.clone(), ib);
        assert!(LinearMorphism::extend_hat(&zin, a, d, b).unwrap().is_zero());
    }

    #[test]
    fn restriction() {
        let l = m2();
        let a = l.element_by_name("a").unwrap();
        let phi = by_values(&l, &["0", "a", "0", "a"]);
        let i = IntervalView::new(&l, l.bottom(), a).unwrap();
        let r = LinearMorphism::restrict(&phi, &i, &i).unwrap();
        assert!(r.is_identity_map());
        let tau = by_values(&l, &["0", "b", "a", "1"]);
        assert!(matches!(
            LinearMorphism::restrict(&tau, &i, &i),
            Err(MorphismError::NotInvariant { .. })
        ));
        let pt = IntervalView::new(&l, l.bottom(), l.bottom()).unwrap();
        let rz = LinearMorphism::restrict(&phi, &pt, &pt).unwrap();
        assert!(rz.is_zero());
    }

    #[test]
    fn enumerates_the_example_monoids() {
        let l = m2();
        let endos = enumerate_endomorphisms(&l);
        assert_eq!(endos.len(), 7);
        let tables: Vec<Vec<&str>> = endos
            .iter()
            .map(|f| (0..4).map(|x| l.element_name(f.apply(x))).collect())
            .collect();
        for want in [
            vec!["0", "0", "0", "0"],
            vec!["0", "a", "b", "1"],
            vec!["0", "b", "a", "1"],
            vec!["0", "a", "0", "a"],
            vec!["0", "0", "b", "b"],
            vec!["0", "b", "0", "b"],
            vec!["0", "0", "a", "a"],
        ] {
            assert!(tables.contains(&want), "missing {:?}", want);
        }

        let two = named::chain2();
        assert_eq!(enumerate_endomorphisms(&two).len(), 2);

        let n_c1 = named::n_c1();
        let endos = enumerate_endomorphisms(&n_c1);
        assert_eq!(endos.len(), 5);
    }

    #[test]
    fn enumerated_morphisms_commute_with_joins() {
        for l in [named::m2(), named::n_c1(), named::qc6()] {
            for f in enumerate_endomorphisms(&l) {
                for x in 0..l.n() {
                    for y in 0..l.n() {
                        assert_eq!(f.apply(l.join(x, y)), l.join(f.apply(x), f.apply(y)));
                    }
                }
                // kernel/image round-trip
                assert_eq!(f.apply(l.top()), f.image());
                assert!(f.apply(f.kernel()) == l.bottom());
            }
        }
    }

    #[test]
    fn idempotents_of_the_diamond() {
        let l = m2();
        let idem: Vec<LinearMorphism> = enumerate_endomorphisms(&l)
            .into_iter()
            .filter(|f| f.is_idempotent())
            .collect();
        assert_eq!(idem.len(), 4);
        for e in &idem {
            // an idempotent is the projection on its image along its kernel
            let p = LinearMorphism::projection(&l, e.image(), e.kernel()).unwrap();
            assert_eq!(&p, e);
            assert_eq!(l.meet(e.kernel(), e.image()), l.bottom());
            assert_eq!(l.join(e.kernel(), e.image()), l.top());
        }
    }

    #[test]
    fn keys_identify_maps() {
        let l = m2();
        let endos = enumerate_endomorphisms(&l);
        for f in &endos {
            for g in &endos {
                assert_eq!(f == g, f.key() == g.key());
            }
        }
    }
}
