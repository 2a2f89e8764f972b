//! The category 𝔽_A for a symmetric operad A: arrows are functions labelled
//! fiberwise by operations, composition multiplies the labels. The 2-colored
//! version 𝔽²_A keeps a coproduct decomposition of each object (color-0
//! block first) and stores carrier colors inside the labels.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::finset::{self, FiberedSubset, FinFunction, FinSetObj};
use crate::operad::{self, Color, OperadId, OperadOp};

/// An object of 𝔽_A ((n]) or of 𝔽²_A (a pair of blocks, color 0 first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FAObject {
    Plain(usize),
    Colored(usize, usize),
}

impl FAObject {
    pub fn total(&self) -> usize {
        match self {
            FAObject::Plain(n) => *n,
            FAObject::Colored(n0, n1) => n0 + n1,
        }
    }

    pub fn color_of(&self, k: usize) -> Color {
        match self {
            FAObject::Plain(_) => 0,
            FAObject::Colored(n0, _) => {
                if k <= *n0 {
                    0
                } else {
                    1
                }
            }
        }
    }

    pub fn is_colored(&self) -> bool {
        matches!(self, FAObject::Colored(..))
    }

    pub fn matches_operad(&self, operad: OperadId) -> bool {
        self.is_colored() == operad.is_colored()
    }

    /// Blockwise sum; colored blocks are concatenated per color.
    pub fn tensor(&self, other: &FAObject) -> Result<FAObject> {
        match (self, other) {
            (FAObject::Plain(n), FAObject::Plain(m)) => Ok(FAObject::Plain(n + m)),
            (FAObject::Colored(a0, a1), FAObject::Colored(b0, b1)) => {
                Ok(FAObject::Colored(a0 + b0, a1 + b1))
            }
            _ => Err(Error::ObjectMismatch {
                expected: "objects of the same kind".into(),
                found: "mixed plain/colored tensor".into(),
            }),
        }
    }

    pub fn unit_object(colored: bool) -> FAObject {
        if colored {
            FAObject::Colored(0, 0)
        } else {
            FAObject::Plain(0)
        }
    }

    /// Where the k-th element of this object lands inside `self ⊗ other`
    /// when this object is the left factor.
    fn embed_left(&self, other: &FAObject, k: usize) -> usize {
        match (self, other) {
            (FAObject::Plain(_), _) => k,
            (FAObject::Colored(n0, _), FAObject::Colored(b0, _)) => {
                if k <= *n0 {
                    k
                } else {
                    k + b0
                }
            }
            _ => unreachable!(),
        }
    }

    /// Where the k-th element of `other` lands inside `self ⊗ other`.
    fn embed_right(&self, other: &FAObject, k: usize) -> usize {
        match (self, other) {
            (FAObject::Plain(n), _) => n + k,
            (FAObject::Colored(n0, n1), FAObject::Colored(b0, _)) => {
                if k <= *b0 {
                    n0 + k
                } else {
                    n0 + n1 + k
                }
            }
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for FAObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FAObject::Plain(n) => write!(f, "({}]", n),
            FAObject::Colored(n0, n1) => write!(f, "({},{}]", n0, n1),
        }
    }
}

/// A morphism of 𝔽_A: a function together with an operation on each fiber.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FAMorphism {
    pub operad: OperadId,
    pub dom: FAObject,
    pub cod: FAObject,
    /// Total function table, 1-based values; entry k is the image of k.
    pub f: Vec<usize>,
    /// One operation per codomain element, carried by the fiber over it.
    pub labels: Vec<OperadOp>,
}

impl FAMorphism {
    pub fn new(
        operad: OperadId,
        dom: FAObject,
        cod: FAObject,
        f: Vec<usize>,
        labels: Vec<OperadOp>,
    ) -> Result<Self> {
        if !dom.matches_operad(operad) || !cod.matches_operad(operad) {
            return Err(Error::OperadMismatch {
                expected: format!("{} objects", if operad.is_colored() { "colored" } else { "plain" }),
                found: format!("{} -> {}", dom, cod),
            });
        }
        if f.len() != dom.total() {
            return Err(Error::Malformed("function table length mismatch".into()));
        }
        if f.iter().any(|&y| y == 0 || y > cod.total()) {
            return Err(Error::Malformed("function image out of range".into()));
        }
        if labels.len() != cod.total() {
            return Err(Error::Malformed("need one label per codomain element".into()));
        }
        let m = FAMorphism {
            operad,
            dom,
            cod,
            f,
            labels,
        };
        for j in 1..=m.cod.total() {
            let label = &m.labels[j - 1];
            if label.operad != operad {
                return Err(Error::OperadMismatch {
                    expected: operad.to_string(),
                    found: label.operad.to_string(),
                });
            }
            let fib = m.fiber(j);
            if label.carrier != fib {
                return Err(Error::Malformed(format!(
                    "label over {} has carrier {:?}, fiber is {:?}",
                    j,
                    label.carrier.as_slice(),
                    fib.as_slice()
                )));
            }
            let expected_colors: Vec<Color> = fib.iter().map(|x| m.dom.color_of(x)).collect();
            if label.colors != expected_colors {
                return Err(Error::ColorMismatch(format!(
                    "label over {} has colors {:?}, fiber colors are {:?}",
                    j, label.colors, expected_colors
                )));
            }
            if label.output != m.cod.color_of(j) {
                return Err(Error::ColorMismatch(format!(
                    "label over {} has output color {}, element color is {}",
                    j,
                    label.output,
                    m.cod.color_of(j)
                )));
            }
        }
        Ok(m)
    }

    pub fn fiber(&self, j: usize) -> FiberedSubset {
        FiberedSubset::new(
            (1..=self.dom.total())
                .filter(|&x| self.f[x - 1] == j)
                .collect(),
        )
        .expect("fibers are strictly increasing")
    }

    pub fn apply(&self, x: usize) -> usize {
        self.f[x - 1]
    }

    /// Stable text form for canonical-form comparison.
    pub fn encoding(&self) -> String {
        let labels: Vec<String> = self.labels.iter().map(|l| l.render()).collect();
        format!("{:?}|{}", self.f, labels.join(";"))
    }
}

impl fmt::Display for FAMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(|l| l.render()).collect();
        write!(
            f,
            "{}->{} f={:?} [{}]",
            self.dom,
            self.cod,
            self.f,
            labels.join(", ")
        )
    }
}

/// Identity of 𝔽_A: the identity function with unit labels on the
/// singleton fibers.
pub fn identity_fa(operad: OperadId, obj: FAObject) -> FAMorphism {
    let f: Vec<usize> = (1..=obj.total()).collect();
    let labels: Vec<OperadOp> = (1..=obj.total())
        .map(|i| operad::unit(operad, i, obj.color_of(i)))
        .collect();
    FAMorphism::new(operad, obj, obj, f, labels).expect("identities are well formed")
}

/// Composite in 𝔽_A: the underlying functions compose and the label over j
/// is the operadic product of `second`'s label with `first`'s labels over
/// the fiber of `second` at j.
pub fn compose_fa(first: &FAMorphism, second: &FAMorphism) -> Result<FAMorphism> {
    if first.operad != second.operad {
        return Err(Error::OperadMismatch {
            expected: first.operad.to_string(),
            found: second.operad.to_string(),
        });
    }
    if first.cod != second.dom {
        return Err(Error::ObjectMismatch {
            expected: first.cod.to_string(),
            found: second.dom.to_string(),
        });
    }
    let f: Vec<usize> = first.f.iter().map(|&x| second.f[x - 1]).collect();
    let mut labels = Vec::with_capacity(second.cod.total());
    for j in 1..=second.cod.total() {
        let outer = &second.labels[j - 1];
        let inner: Vec<OperadOp> = outer
            .carrier
            .iter()
            .map(|i| first.labels[i - 1].clone())
            .collect();
        labels.push(operad::multiply(outer, &inner)?);
    }
    FAMorphism::new(first.operad, first.dom, second.cod, f, labels)
}

/// Composite in 𝔽²_A; the fiber decomposition against the color blocks is
/// carried inside the labels, so this delegates to the single-sorted rule.
pub fn compose_colored_fa(first: &FAMorphism, second: &FAMorphism) -> Result<FAMorphism> {
    if !first.operad.is_colored() {
        return Err(Error::OperadMismatch {
            expected: "a colored operad".into(),
            found: first.operad.to_string(),
        });
    }
    compose_fa(first, second)
}

/// Block sum: domains and codomains add, `y`'s function and labels are
/// shifted past `x`'s blocks.
pub fn tensor_fa(x: &FAMorphism, y: &FAMorphism) -> Result<FAMorphism> {
    if x.operad != y.operad {
        return Err(Error::OperadMismatch {
            expected: x.operad.to_string(),
            found: y.operad.to_string(),
        });
    }
    let dom = x.dom.tensor(&y.dom)?;
    let cod = x.cod.tensor(&y.cod)?;
    let mut f = vec![0usize; dom.total()];
    for k in 1..=x.dom.total() {
        f[x.dom.embed_left(&y.dom, k) - 1] = x.cod.embed_left(&y.cod, x.apply(k));
    }
    for k in 1..=y.dom.total() {
        f[x.dom.embed_right(&y.dom, k) - 1] = x.cod.embed_right(&y.cod, y.apply(k));
    }
    let mut labels = vec![None; cod.total()];
    for j in 1..=x.cod.total() {
        let sigma: BTreeMap<usize, usize> = x.labels[j - 1]
            .carrier
            .iter()
            .map(|k| (k, x.dom.embed_left(&y.dom, k)))
            .collect();
        labels[x.cod.embed_left(&y.cod, j) - 1] =
            Some(operad::act_bijection(&x.labels[j - 1], &sigma)?);
    }
    for j in 1..=y.cod.total() {
        let sigma: BTreeMap<usize, usize> = y.labels[j - 1]
            .carrier
            .iter()
            .map(|k| (k, x.dom.embed_right(&y.dom, k)))
            .collect();
        labels[x.cod.embed_right(&y.cod, j) - 1] =
            Some(operad::act_bijection(&y.labels[j - 1], &sigma)?);
    }
    let labels: Vec<OperadOp> = labels.into_iter().map(|l| l.expect("filled")).collect();
    FAMorphism::new(x.operad, dom, cod, f, labels)
}

/// The forgetful functor π_A: drop the labels.
pub fn pi_a(x: &FAMorphism) -> FinFunction {
    FinFunction::new(
        FinSetObj::new(x.dom.total()),
        FinSetObj::new(x.cod.total()),
        x.f.clone(),
    )
    .expect("tables are valid")
}

/// All morphisms dom -> cod in 𝔽_A, with label unit-budget `budget`.
pub fn enumerate_fa(
    operad: OperadId,
    dom: FAObject,
    cod: FAObject,
    budget: usize,
) -> Result<Vec<FAMorphism>> {
    let functions = finset::all_functions(
        FinSetObj::new(dom.total()),
        FinSetObj::new(cod.total()),
    );
    let mut out = Vec::new();
    for func in functions {
        let mut per_fiber: Vec<Vec<OperadOp>> = Vec::new();
        let mut possible = true;
        for j in 1..=cod.total() {
            let fib = finset::fiber(&pi_from(&func), j)?;
            let colors: Vec<Color> = fib.iter().map(|x| dom.color_of(x)).collect();
            let ops = operad::enumerate_ops(operad, &fib, budget, &colors, cod.color_of(j))?;
            if ops.is_empty() {
                possible = false;
                break;
            }
            per_fiber.push(ops);
        }
        if !possible {
            continue;
        }
        let mut choice = vec![0usize; per_fiber.len()];
        loop {
            let labels: Vec<OperadOp> = per_fiber
                .iter()
                .zip(&choice)
                .map(|(ops, &i)| ops[i].clone())
                .collect();
            out.push(FAMorphism::new(operad, dom, cod, func.images.clone(), labels)?);
            let mut i = per_fiber.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if choice[i] + 1 < per_fiber[i].len() {
                    choice[i] += 1;
                    for c in choice.iter_mut().skip(i + 1) {
                        *c = 0;
                    }
                    break;
                }
            }
            if choice.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    Ok(out)
}

fn pi_from(func: &FinFunction) -> FinFunction {
    func.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::Payload;
    use crate::words::BinWord;

    fn lo_mor(dom: usize, cod: usize, f: Vec<usize>, words: Vec<Vec<usize>>) -> FAMorphism {
        let labels: Vec<OperadOp> = words
            .into_iter()
            .map(|w| {
                let carrier = FiberedSubset::new(w.clone()).unwrap();
                let len = carrier.len();
                OperadOp::new(OperadId::Lo, carrier, vec![0; len], 0, Payload::Word(w)).unwrap()
            })
            .collect();
        FAMorphism::new(OperadId::Lo, FAObject::Plain(dom), FAObject::Plain(cod), f, labels)
            .unwrap()
    }

    #[test]
    fn identities() {
        let id = identity_fa(OperadId::Lo, FAObject::Plain(2));
        assert_eq!(id.labels[0].payload, Payload::Word(vec![1]));
        assert_eq!(id.labels[1].payload, Payload::Word(vec![2]));
        let empty = identity_fa(OperadId::Top, FAObject::Plain(0));
        assert_eq!(empty.f.len(), 0);
        let b = identity_fa(OperadId::BTr, FAObject::Plain(1));
        assert_eq!(b.labels[0].payload, Payload::Term(BinWord::Leaf(1)));
    }

    #[test]
    fn compose_identity_laws() {
        for x in enumerate_fa(OperadId::Lo, FAObject::Plain(2), FAObject::Plain(2), 0).unwrap() {
            let l = compose_fa(&identity_fa(OperadId::Lo, x.dom), &x).unwrap();
            let r = compose_fa(&x, &identity_fa(OperadId::Lo, x.cod)).unwrap();
            assert_eq!(l, x);
            assert_eq!(r, x);
        }
    }

    #[test]
    fn compose_lo_example() {
        // f = [1,1]: (2]→(1] labelled "21", then g = [1]: (1]→(1] labelled "1"
        let f = lo_mor(2, 1, vec![1, 1], vec![vec![2, 1]]);
        let g = lo_mor(1, 1, vec![1], vec![vec![1]]);
        let composite = compose_fa(&f, &g).unwrap();
        assert_eq!(composite.labels[0].payload, Payload::Word(vec![2, 1]));
    }

    #[test]
    fn top_composition_is_function_composition() {
        // in 𝔽_⊤ the labels are forced and composition is function composition
        let all = enumerate_fa(OperadId::Top, FAObject::Plain(2), FAObject::Plain(2), 0).unwrap();
        assert_eq!(all.len(), 4);
        for a in &all {
            for b in &all {
                let c = compose_fa(a, b).unwrap();
                let expected: Vec<usize> = a.f.iter().map(|&x| b.f[x - 1]).collect();
                assert_eq!(c.f, expected);
            }
        }
    }

    #[test]
    fn associativity_randomized() {
        let homs1 = enumerate_fa(OperadId::Lo, FAObject::Plain(3), FAObject::Plain(2), 0).unwrap();
        let homs2 = enumerate_fa(OperadId::Lo, FAObject::Plain(2), FAObject::Plain(2), 0).unwrap();
        for (i, a) in homs1.iter().enumerate().step_by(7) {
            for (j, b) in homs2.iter().enumerate().step_by(5) {
                for c in homs2.iter().skip((i + j) % 3).step_by(11) {
                    let left = compose_fa(&compose_fa(a, b).unwrap(), c).unwrap();
                    let right = compose_fa(a, &compose_fa(b, c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn tensor_block_sum() {
        let id1 = identity_fa(OperadId::Lo, FAObject::Plain(1));
        let t = tensor_fa(&id1, &id1).unwrap();
        assert_eq!(t, identity_fa(OperadId::Lo, FAObject::Plain(2)));
        let empty = identity_fa(OperadId::Lo, FAObject::Plain(0));
        let x = lo_mor(2, 1, vec![1, 1], vec![vec![2, 1]]);
        assert_eq!(tensor_fa(&x, &empty).unwrap(), x);
        assert_eq!(tensor_fa(&empty, &x).unwrap(), x);

        let a = lo_mor(1, 1, vec![1], vec![vec![1]]);
        let both = tensor_fa(&a, &a).unwrap();
        assert_eq!(both.labels[0].payload, Payload::Word(vec![1]));
        assert_eq!(both.labels[1].payload, Payload::Word(vec![2]));
    }

    #[test]
    fn pi_is_strict_monoidal() {
        let x = lo_mor(2, 1, vec![1, 1], vec![vec![2, 1]]);
        let y = lo_mor(1, 2, vec![2], vec![vec![], vec![1]]);
        assert_eq!(pi_a(&x).images, vec![1, 1]);
        let t = tensor_fa(&x, &y).unwrap();
        let mut expected = pi_a(&x).images.clone();
        expected.extend(pi_a(&y).images.iter().map(|v| v + x.cod.total()));
        assert_eq!(pi_a(&t).images, expected);
        let xy = compose_fa(&y, &x).unwrap();
        assert_eq!(
            pi_a(&xy).images,
            finset::compose(&pi_a(&y), &pi_a(&x)).unwrap().images
        );
    }

    #[test]
    fn top_iso_to_finset() {
        // 𝔽_⊤ ≅ 𝔽: hom-sets biject with plain function sets (exhaustive ≤ 3)
        for n in 0..=3usize {
            for m in 0..=3usize {
                let homs =
                    enumerate_fa(OperadId::Top, FAObject::Plain(n), FAObject::Plain(m), 0).unwrap();
                let functions =
                    finset::all_functions(FinSetObj::new(n), FinSetObj::new(m));
                assert_eq!(homs.len(), functions.len());
            }
        }
    }

    #[test]
    fn colored_identity_and_composition() {
        let obj = FAObject::Colored(1, 1);
        let id = identity_fa(OperadId::Top2, obj);
        assert_eq!(compose_colored_fa(&id, &id).unwrap(), id);

        // 𝔽²_⊤₂: composition is function composition on the sum carriers
        let homs = enumerate_fa(OperadId::Top2, obj, obj, 0).unwrap();
        assert_eq!(homs.len(), 4);
        for a in &homs {
            for b in &homs {
                let c = compose_colored_fa(a, b).unwrap();
                let expected: Vec<usize> = a.f.iter().map(|&x| b.f[x - 1]).collect();
                assert_eq!(c.f, expected);
            }
        }
    }

    #[test]
    fn act_labelled_composite() {
        use crate::operad::ActTerm;
        // the action generator a: (1,1) -> (0,1), fiber label (1@2)
        let dom = FAObject::Colored(1, 1);
        let cod = FAObject::Colored(0, 1);
        let label = OperadOp::new(
            OperadId::Act,
            FiberedSubset::new(vec![1, 2]).unwrap(),
            vec![0, 1],
            1,
            crate::operad::Payload::Act(ActTerm::parse("(1@2)").unwrap()),
        )
        .unwrap();
        let a = FAMorphism::new(OperadId::Act, dom, cod, vec![1, 1], vec![label]).unwrap();
        let id = identity_fa(OperadId::Act, cod);
        let c = compose_colored_fa(&a, &id).unwrap();
        assert_eq!(c, a);

        // grafting two a-generators: (1_M ⊗ a); a hand-check
        // m ⊙ (m' ⊙ x): dom (2,1) -> (1,1) -> (0,1)
        let dom2 = FAObject::Colored(2, 1);
        let mid = FAObject::Colored(1, 1);
        let lift = {
            // first arrow: identity on the first 0-block element, a on the rest
            let unit0 = operad::unit(OperadId::Act, 1, 0);
            let inner = OperadOp::new(
                OperadId::Act,
                FiberedSubset::new(vec![2, 3]).unwrap(),
                vec![0, 1],
                1,
                crate::operad::Payload::Act(ActTerm::parse("(2@3)").unwrap()),
            )
            .unwrap();
            FAMorphism::new(OperadId::Act, dom2, mid, vec![1, 2, 2], vec![unit0, inner]).unwrap()
        };
        let composite = compose_colored_fa(&lift, &a).unwrap();
        assert_eq!(composite.f, vec![1, 1, 1]);
        assert_eq!(
            composite.labels[0].payload,
            crate::operad::Payload::Act(ActTerm::parse("(1@(2@3))").unwrap())
        );
    }
}
