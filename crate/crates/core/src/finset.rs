//! Finite sets `(n] = {1,…,n}`, total functions between them, sums,
//! pullbacks and fibers. Everything downstream (operad-labelled arrows,
//! spans, 2-spans) is built over this substrate.

use crate::error::{Error, Result};

/// The object `(n] = {1,…,n}` of the skeleton of finite sets. `(0]` is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinSetObj {
    pub n: usize,
}

impl FinSetObj {
    pub fn new(n: usize) -> Self {
        FinSetObj { n }
    }

    /// Elements in their natural order, 1-based.
    pub fn elements(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }
}

/// A total function `(n] -> (m]` stored as its full table; `images[i-1] = f(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinFunction {
    pub dom: FinSetObj,
    pub cod: FinSetObj,
    pub images: Vec<usize>,
}

impl FinFunction {
    pub fn new(dom: FinSetObj, cod: FinSetObj, images: Vec<usize>) -> Result<Self> {
        if images.len() != dom.n {
            return Err(Error::Malformed(format!(
                "function table has {} entries, domain is ({}]",
                images.len(),
                dom.n
            )));
        }
        if let Some(&bad) = images.iter().find(|&&y| y == 0 || y > cod.n) {
            return Err(Error::Malformed(format!(
                "image {} outside codomain ({}]",
                bad, cod.n
            )));
        }
        Ok(FinFunction { dom, cod, images })
    }

    pub fn identity(obj: FinSetObj) -> Self {
        FinFunction {
            dom: obj,
            cod: obj,
            images: obj.elements().collect(),
        }
    }

    pub fn constant(dom: FinSetObj, cod: FinSetObj, value: usize) -> Result<Self> {
        FinFunction::new(dom, cod, vec![value; dom.n])
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn is_bijection(&self) -> bool {
        if self.dom.n != self.cod.n {
            return false;
        }
        let mut seen = vec![false; self.cod.n];
        for &y in &self.images {
            if seen[y - 1] {
                return false;
            }
            seen[y - 1] = true;
        }
        true
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Result<FinFunction> {
        if !self.is_bijection() {
            return Err(Error::NotBijective);
        }
        let mut images = vec![0; self.dom.n];
        for x in self.dom.elements() {
            images[self.apply(x) - 1] = x;
        }
        FinFunction::new(self.cod, self.dom, images)
    }
}

/// A finite subset of the naturals, strictly increasing. Carriers of operad
/// operations are such subsets (fibers of functions).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiberedSubset {
    elements: Vec<usize>,
}

impl FiberedSubset {
    pub fn new(mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        let distinct = elements.windows(2).all(|w| w[0] < w[1]);
        if !distinct {
            return Err(Error::Malformed("subset has repeated elements".into()));
        }
        Ok(FiberedSubset { elements })
    }

    pub fn empty() -> Self {
        FiberedSubset { elements: vec![] }
    }

    pub fn singleton(x: usize) -> Self {
        FiberedSubset { elements: vec![x] }
    }

    /// The initial segment {1,…,n}.
    pub fn segment(n: usize) -> Self {
        FiberedSubset {
            elements: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Position of `x` in the increasing enumeration, 0-based.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.elements
    }

    pub fn is_disjoint(&self, other: &FiberedSubset) -> bool {
        self.iter().all(|x| !other.contains(x))
    }

    pub fn union(&self, other: &FiberedSubset) -> Result<FiberedSubset> {
        if !self.is_disjoint(other) {
            return Err(Error::Malformed("carriers overlap".into()));
        }
        let mut elements: Vec<usize> = self.iter().chain(other.iter()).collect();
        elements.sort_unstable();
        Ok(FiberedSubset { elements })
    }
}

/// Pointwise composite `g∘f`.
pub fn compose(f: &FinFunction, g: &FinFunction) -> Result<FinFunction> {
    if f.cod != g.dom {
        return Err(Error::ObjectMismatch {
            expected: format!("({}]", f.cod.n),
            found: format!("({}]", g.dom.n),
        });
    }
    let images = f.images.iter().map(|&x| g.apply(x)).collect();
    FinFunction::new(f.dom, g.cod, images)
}

/// Pullback of a cospan `f : (n] -> (m] <- (k] : g`. The apex enumerates the
/// pairs (x, y) with f(x) = g(y) in lexicographic order of (x, y); p1 and p2
/// are the coordinate projections. The fixed numbering keeps span composition
/// deterministic.
pub fn pullback(f: &FinFunction, g: &FinFunction) -> Result<(FinSetObj, FinFunction, FinFunction)> {
    if f.cod != g.cod {
        return Err(Error::ObjectMismatch {
            expected: format!("({}]", f.cod.n),
            found: format!("({}]", g.cod.n),
        });
    }
    let mut p1 = Vec::new();
    let mut p2 = Vec::new();
    for x in f.dom.elements() {
        for y in g.dom.elements() {
            if f.apply(x) == g.apply(y) {
                p1.push(x);
                p2.push(y);
            }
        }
    }
    let apex = FinSetObj::new(p1.len());
    Ok((
        apex,
        FinFunction::new(apex, f.dom, p1)?,
        FinFunction::new(apex, g.dom, p2)?,
    ))
}

/// `(n] + (m] = (n+m]` with the two block injections.
pub fn sum(a: FinSetObj, b: FinSetObj) -> (FinSetObj, FinFunction, FinFunction) {
    let total = FinSetObj::new(a.n + b.n);
    let inj1 = FinFunction {
        dom: a,
        cod: total,
        images: (1..=a.n).collect(),
    };
    let inj2 = FinFunction {
        dom: b,
        cod: total,
        images: (a.n + 1..=a.n + b.n).collect(),
    };
    (total, inj1, inj2)
}

/// The fiber f^{-1}(y), as a sorted subset of the domain.
pub fn fiber(f: &FinFunction, y: usize) -> Result<FiberedSubset> {
    if y == 0 || y > f.cod.n {
        return Err(Error::OutOfRange { value: y, bound: f.cod.n });
    }
    let elements = f
        .dom
        .elements()
        .filter(|&x| f.apply(x) == y)
        .collect();
    // already increasing
    Ok(FiberedSubset { elements })
}

/// All functions (n] -> (m], in lexicographic table order.
pub fn all_functions(dom: FinSetObj, cod: FinSetObj) -> Vec<FinFunction> {
    if dom.n == 0 {
        return vec![FinFunction {
            dom,
            cod,
            images: vec![],
        }];
    }
    if cod.n == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    let mut table = vec![1usize; dom.n];
    loop {
        out.push(FinFunction {
            dom,
            cod,
            images: table.clone(),
        });
        let mut i = dom.n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if table[i] < cod.n {
                table[i] += 1;
                for t in table.iter_mut().skip(i + 1) {
                    *t = 1;
                }
                break;
            }
        }
    }
}

/// All bijections (n] -> (n].
pub fn all_bijections(obj: FinSetObj) -> Vec<FinFunction> {
    fn perms(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            perms(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut tables = Vec::new();
    let mut items: Vec<usize> = obj.elements().collect();
    perms(&mut items, 0, &mut tables);
    tables.sort();
    tables
        .into_iter()
        .map(|images| FinFunction {
            dom: obj,
            cod: obj,
            images,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(dom: usize, cod: usize, images: Vec<usize>) -> FinFunction {
        FinFunction::new(FinSetObj::new(dom), FinSetObj::new(cod), images).unwrap()
    }

    #[test]
    fn compose_identity() {
        let id3 = FinFunction::identity(FinSetObj::new(3));
        assert_eq!(compose(&id3, &id3).unwrap(), id3);
    }

    #[test]
    fn compose_pointwise() {
        let a = f(2, 1, vec![1, 1]);
        let b = f(1, 2, vec![2]);
        assert_eq!(compose(&a, &b).unwrap(), f(2, 2, vec![2, 2]));

        let c = f(3, 2, vec![1, 1, 2]);
        let d = f(2, 2, vec![2, 1]);
        assert_eq!(compose(&c, &d).unwrap(), f(3, 2, vec![2, 2, 1]));
    }

    #[test]
    fn compose_mismatch_rejected() {
        let a = f(2, 1, vec![1, 1]);
        let b = f(2, 2, vec![1, 2]);
        assert!(compose(&a, &b).is_err());
    }

    #[test]
    fn pullback_of_identities() {
        let id2 = FinFunction::identity(FinSetObj::new(2));
        let (apex, p1, p2) = pullback(&id2, &id2).unwrap();
        assert_eq!(apex.n, 2);
        assert_eq!(p1, FinFunction::identity(apex));
        assert_eq!(p2, FinFunction::identity(apex));
    }

    #[test]
    fn pullback_of_constants() {
        // Oracle: enumerate all pairs (x, y) and keep those with f(x) = g(y).
        let c = f(2, 1, vec![1, 1]);
        let mut pairs = Vec::new();
        for x in 1..=2usize {
            for y in 1..=2usize {
                if c.apply(x) == c.apply(y) {
                    pairs.push((x, y));
                }
            }
        }
        assert_eq!(pairs.len(), 4);
        let (apex, p1, p2) = pullback(&c, &c).unwrap();
        assert_eq!(apex.n, 4);
        assert_eq!(p1.images, vec![1, 1, 2, 2]);
        assert_eq!(p2.images, vec![1, 2, 1, 2]);
    }

    #[test]
    fn pullback_empty_domain() {
        let e = f(0, 1, vec![]);
        let id1 = FinFunction::identity(FinSetObj::new(1));
        let (apex, _, _) = pullback(&e, &id1).unwrap();
        assert_eq!(apex.n, 0);
    }

    #[test]
    fn pullback_mediating_function_unique() {
        // For every commuting test square over the cospan, the mediating map
        // into the apex exists and is unique (dom sizes <= 3, exhaustive).
        for n in 0..=3usize {
            for m in 0..=2usize {
                for k in 0..=2usize {
                    let fs = all_functions(FinSetObj::new(n), FinSetObj::new(m));
                    let gs = all_functions(FinSetObj::new(k), FinSetObj::new(m));
                    for ff in &fs {
                        for gg in &gs {
                            let (apex, p1, p2) = pullback(ff, gg).unwrap();
                            for t in 0..=3usize {
                                let tobj = FinSetObj::new(t);
                                for a in all_functions(tobj, ff.dom) {
                                    for b in all_functions(tobj, gg.dom) {
                                        let left = compose(&a, ff).unwrap();
                                        let right = compose(&b, gg).unwrap();
                                        if left != right {
                                            continue;
                                        }
                                        let mediators: Vec<_> = all_functions(tobj, apex)
                                            .into_iter()
                                            .filter(|u| {
                                                compose(u, &p1).unwrap() == a
                                                    && compose(u, &p2).unwrap() == b
                                            })
                                            .collect();
                                        assert_eq!(mediators.len(), 1);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sum_objects_and_injections() {
        let (t, i1, i2) = sum(FinSetObj::new(2), FinSetObj::new(3));
        assert_eq!(t.n, 5);
        assert_eq!(i1.images, vec![1, 2]);
        assert_eq!(i2.images, vec![3, 4, 5]);
        let (t0, _, i) = sum(FinSetObj::new(0), FinSetObj::new(4));
        assert_eq!(t0.n, 4);
        assert_eq!(i.images, vec![1, 2, 3, 4]);
        let (t1, a, b) = sum(FinSetObj::new(1), FinSetObj::new(1));
        assert_eq!(t1.n, 2);
        assert_eq!((a.images[0], b.images[0]), (1, 2));
    }

    #[test]
    fn fibers() {
        let g = f(3, 2, vec![1, 1, 2]);
        assert_eq!(fiber(&g, 1).unwrap().as_slice(), &[1, 2]);
        assert_eq!(fiber(&g, 2).unwrap().as_slice(), &[3]);
        let h = f(2, 2, vec![2, 2]);
        assert!(fiber(&h, 1).unwrap().is_empty());
        assert!(fiber(&h, 3).is_err());
    }

    #[test]
    fn fibers_partition_domain() {
        for n in 0..=4usize {
            for m in 1..=3usize {
                for g in all_functions(FinSetObj::new(n), FinSetObj::new(m)) {
                    let mut seen: Vec<usize> = Vec::new();
                    for y in 1..=m {
                        seen.extend(fiber(&g, y).unwrap().iter());
                    }
                    seen.sort_unstable();
                    assert_eq!(seen, (1..=n).collect::<Vec<_>>());
                }
            }
        }
    }

    fn arb_function() -> impl Strategy<Value = FinFunction> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(n, m)| {
            proptest::collection::vec(1usize..=m, n)
                .prop_map(move |images| f(n, m, images))
        })
    }

    proptest! {
        #[test]
        fn composition_associative(a in arb_function(), bi in proptest::collection::vec(1usize..=4, 4), ci in proptest::collection::vec(1usize..=4, 4)) {
            let b = f(a.cod.n, 4, bi[..a.cod.n].to_vec());
            let c = f(4, 4, ci);
            let left = compose(&compose(&a, &b).unwrap(), &c).unwrap();
            let right = compose(&a, &compose(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn composition_unital(a in arb_function()) {
            let l = compose(&FinFunction::identity(a.dom), &a).unwrap();
            let r = compose(&a, &FinFunction::identity(a.cod)).unwrap();
            prop_assert_eq!(&l, &a);
            prop_assert_eq!(&r, &a);
        }
    }
}
