//! The symmetric operads ⊥ → BTr → Lo → ⊤ and their 2-colored analogues
//! ⊥₂ → Act → Lo₂ → ⊤₂, with substitution multiplication, the bijection
//! action, morphisms along the chains, and bounded enumeration.
//!
//! BTr and Act have infinitely many operations per arity (arbitrary unit
//! insertions), so operations are term values with decidable equality and
//! enumeration is budget-limited by the number of unit symbols.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::finset::FiberedSubset;
use crate::words::{BinWord, TypeWord};

pub type Color = u8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperadId {
    Bot,
    BTr,
    Lo,
    Top,
    Bot2,
    Act,
    Lo2,
    Top2,
}

impl OperadId {
    pub fn is_colored(self) -> bool {
        matches!(self, OperadId::Bot2 | OperadId::Act | OperadId::Lo2 | OperadId::Top2)
    }

    pub fn color_count(self) -> usize {
        if self.is_colored() {
            2
        } else {
            1
        }
    }

    /// Position along the chain ⊥ → BTr → Lo → ⊤ (resp. its colored copy).
    pub fn chain_rank(self) -> u8 {
        match self {
            OperadId::Bot | OperadId::Bot2 => 0,
            OperadId::BTr | OperadId::Act => 1,
            OperadId::Lo | OperadId::Lo2 => 2,
            OperadId::Top | OperadId::Top2 => 3,
        }
    }

    /// Whether operations of every colored type exist (⊤-like and Lo₂):
    /// such operads admit arbitrary recoloring during transport.
    pub fn has_all_colored_types(self) -> bool {
        matches!(self, OperadId::Top | OperadId::Lo | OperadId::BTr | OperadId::Lo2 | OperadId::Top2)
    }

    pub fn parse(name: &str) -> Result<OperadId> {
        match name.to_ascii_lowercase().as_str() {
            "bot" => Ok(OperadId::Bot),
            "btr" => Ok(OperadId::BTr),
            "lo" => Ok(OperadId::Lo),
            "top" => Ok(OperadId::Top),
            "bot2" => Ok(OperadId::Bot2),
            "act" => Ok(OperadId::Act),
            "lo2" => Ok(OperadId::Lo2),
            "top2" => Ok(OperadId::Top2),
            other => Err(Error::Parse(format!("unknown operad {:?}", other))),
        }
    }
}

impl fmt::Display for OperadId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OperadId::Bot => "bot",
            OperadId::BTr => "btr",
            OperadId::Lo => "lo",
            OperadId::Top => "top",
            OperadId::Bot2 => "bot2",
            OperadId::Act => "act",
            OperadId::Lo2 => "lo2",
            OperadId::Top2 => "top2",
        };
        write!(f, "{}", name)
    }
}

/// An arrow along one of the two operad chains (identities included).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OperadMorphismId {
    pub source: OperadId,
    pub target: OperadId,
}

impl OperadMorphismId {
    pub fn new(source: OperadId, target: OperadId) -> Result<Self> {
        if source.is_colored() != target.is_colored() || source.chain_rank() > target.chain_rank() {
            return Err(Error::OperadMismatch {
                expected: format!("target above {} in its chain", source),
                found: target.to_string(),
            });
        }
        Ok(OperadMorphismId { source, target })
    }
}

/// A term of the free 2-colored operad on e (constant, color 0),
/// m (binary, all color 0) and a (binary, left argument color 0, right
/// argument color 1, output color 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ActTerm {
    Unit,
    Leaf(usize),
    Mul(Box<ActTerm>, Box<ActTerm>),
    Action(Box<ActTerm>, Box<ActTerm>),
}

impl ActTerm {
    pub fn mul(l: ActTerm, r: ActTerm) -> ActTerm {
        ActTerm::Mul(Box::new(l), Box::new(r))
    }

    pub fn action(l: ActTerm, r: ActTerm) -> ActTerm {
        ActTerm::Action(Box::new(l), Box::new(r))
    }

    /// Leaves in left-to-right order.
    pub fn type_of(&self) -> TypeWord {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            ActTerm::Unit => {}
            ActTerm::Leaf(x) => out.push(*x),
            ActTerm::Mul(l, r) | ActTerm::Action(l, r) => {
                l.collect(out);
                r.collect(out);
            }
        }
    }

    /// Output color given leaf colors, or an error if the term is ill-typed.
    pub fn check_colors(&self, leaf_color: &impl Fn(usize) -> Option<Color>) -> Result<Color> {
        match self {
            ActTerm::Unit => Ok(0),
            ActTerm::Leaf(x) => {
                leaf_color(*x).ok_or_else(|| Error::Malformed(format!("leaf {} not in carrier", x)))
            }
            ActTerm::Mul(l, r) => {
                if l.check_colors(leaf_color)? != 0 || r.check_colors(leaf_color)? != 0 {
                    return Err(Error::ColorMismatch("m takes two color-0 arguments".into()));
                }
                Ok(0)
            }
            ActTerm::Action(l, r) => {
                if l.check_colors(leaf_color)? != 0 {
                    return Err(Error::ColorMismatch("a takes a color-0 left argument".into()));
                }
                if r.check_colors(leaf_color)? != 1 {
                    return Err(Error::ColorMismatch("a takes a color-1 right argument".into()));
                }
                Ok(1)
            }
        }
    }

    pub fn relabel(&self, map: impl Fn(usize) -> usize + Copy) -> ActTerm {
        match self {
            ActTerm::Unit => ActTerm::Unit,
            ActTerm::Leaf(x) => ActTerm::Leaf(map(*x)),
            ActTerm::Mul(l, r) => ActTerm::mul(l.relabel(map), r.relabel(map)),
            ActTerm::Action(l, r) => ActTerm::action(l.relabel(map), r.relabel(map)),
        }
    }

    /// Replace each leaf by a term.
    pub fn graft(&self, assignment: &BTreeMap<usize, ActTerm>) -> Result<ActTerm> {
        match self {
            ActTerm::Unit => Ok(ActTerm::Unit),
            ActTerm::Leaf(x) => assignment
                .get(x)
                .cloned()
                .ok_or_else(|| Error::Malformed(format!("no term grafted onto leaf {}", x))),
            ActTerm::Mul(l, r) => Ok(ActTerm::mul(l.graft(assignment)?, r.graft(assignment)?)),
            ActTerm::Action(l, r) => Ok(ActTerm::action(l.graft(assignment)?, r.graft(assignment)?)),
        }
    }

    pub fn render(&self) -> String {
        format!("{}", self)
    }

    pub fn parse(input: &str) -> Result<ActTerm> {
        let bytes = input.trim().as_bytes();
        let mut pos = 0;
        let term = parse_act(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!("trailing input at byte {}", pos)));
        }
        Ok(term)
    }
}

impl fmt::Display for ActTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActTerm::Unit => write!(f, "e"),
            ActTerm::Leaf(x) => write!(f, "{}", x),
            ActTerm::Mul(l, r) => write!(f, "({}*{})", l, r),
            ActTerm::Action(l, r) => write!(f, "({}@{})", l, r),
        }
    }
}

fn parse_act(bytes: &[u8], pos: &mut usize) -> Result<ActTerm> {
    match bytes.get(*pos) {
        Some(b'e') => {
            *pos += 1;
            Ok(ActTerm::Unit)
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let text = std::str::from_utf8(&bytes[start..*pos]).unwrap();
            Ok(ActTerm::Leaf(text.parse().map_err(|_| {
                Error::Parse(format!("bad numeral {:?}", text))
            })?))
        }
        Some(b'(') => {
            *pos += 1;
            let left = parse_act(bytes, pos)?;
            let op = match bytes.get(*pos) {
                Some(b'*') => b'*',
                Some(b'@') => b'@',
                _ => return Err(Error::Parse(format!("expected '*' or '@' at byte {}", *pos))),
            };
            *pos += 1;
            let right = parse_act(bytes, pos)?;
            if bytes.get(*pos) != Some(&b')') {
                return Err(Error::Parse(format!("expected ')' at byte {}", *pos)));
            }
            *pos += 1;
            Ok(if op == b'*' {
                ActTerm::mul(left, right)
            } else {
                ActTerm::action(left, right)
            })
        }
        other => Err(Error::Parse(format!(
            "unexpected {:?} at byte {}",
            other.map(|b| *b as char),
            *pos
        ))),
    }
}

/// Tag-dependent payload of an operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Payload {
    /// ⊤, ⊥ and their colored versions: the operation is determined by its type.
    Unit,
    /// Lo / Lo₂: a linear order on the carrier.
    Word(TypeWord),
    /// BTr: a linear binary word over the carrier.
    Term(BinWord),
    /// Act: a linear 2-colored term over the carrier.
    Act(ActTerm),
}

/// One operation of a (colored) symmetric operad, carried by a finite subset
/// of the naturals. `colors[i]` is the color of the i-th carrier element in
/// increasing order; uncolored operads use all-zero colors and output 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OperadOp {
    pub operad: OperadId,
    pub carrier: FiberedSubset,
    pub colors: Vec<Color>,
    pub output: Color,
    pub payload: Payload,
}

impl OperadOp {
    pub fn new(
        operad: OperadId,
        carrier: FiberedSubset,
        colors: Vec<Color>,
        output: Color,
        payload: Payload,
    ) -> Result<Self> {
        if colors.len() != carrier.len() {
            return Err(Error::Malformed("color table does not match carrier".into()));
        }
        if !operad.is_colored() && (output != 0 || colors.iter().any(|&c| c != 0)) {
            return Err(Error::ColorMismatch(format!("{} is uncolored", operad)));
        }
        if operad.is_colored() && (output > 1 || colors.iter().any(|&c| c > 1)) {
            return Err(Error::ColorMismatch("colors must be 0 or 1".into()));
        }
        let op = OperadOp {
            operad,
            carrier,
            colors,
            output,
            payload,
        };
        op.validate()?;
        Ok(op)
    }

    fn validate(&self) -> Result<()> {
        let carrier: Vec<usize> = self.carrier.iter().collect();
        match (self.operad, &self.payload) {
            (OperadId::Bot | OperadId::Bot2, Payload::Unit) => {
                if carrier.len() != 1 {
                    return Err(Error::Malformed("the initial operad is unary".into()));
                }
                if self.operad == OperadId::Bot2 && self.colors[0] != self.output {
                    return Err(Error::ColorMismatch("⊥₂ units preserve color".into()));
                }
                Ok(())
            }
            (OperadId::Top | OperadId::Top2, Payload::Unit) => Ok(()),
            (OperadId::Lo | OperadId::Lo2, Payload::Word(word)) => {
                let mut sorted = word.clone();
                sorted.sort_unstable();
                if sorted != carrier {
                    return Err(Error::Malformed(
                        "Lo payload must list each carrier element exactly once".into(),
                    ));
                }
                Ok(())
            }
            (OperadId::BTr, Payload::Term(term)) => {
                if !term.is_linear(&carrier) {
                    return Err(Error::Malformed(
                        "BTr payload must use each carrier element exactly once".into(),
                    ));
                }
                Ok(())
            }
            (OperadId::Act, Payload::Act(term)) => {
                let mut ty = term.type_of();
                ty.sort_unstable();
                if ty != carrier {
                    return Err(Error::Malformed(
                        "Act payload must use each carrier element exactly once".into(),
                    ));
                }
                let out = term.check_colors(&|x| {
                    self.carrier.position(x).map(|p| self.colors[p])
                })?;
                if out != self.output {
                    return Err(Error::ColorMismatch(format!(
                        "Act term has output color {}, expected {}",
                        out, self.output
                    )));
                }
                Ok(())
            }
            _ => Err(Error::Malformed(format!(
                "payload does not match operad {}",
                self.operad
            ))),
        }
    }

    pub fn color_of(&self, element: usize) -> Option<Color> {
        self.carrier.position(element).map(|p| self.colors[p])
    }

    /// Rendered payload, used for ordering canonical representatives.
    pub fn render(&self) -> String {
        match &self.payload {
            Payload::Unit => "!".to_string(),
            Payload::Word(word) => {
                let parts: Vec<String> = word.iter().map(|x| x.to_string()).collect();
                format!("<{}>", parts.join(","))
            }
            Payload::Term(term) => term.render(),
            Payload::Act(term) => term.render(),
        }
    }
}

impl fmt::Display for OperadOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.operad, self.render())
    }
}

/// The unary identity operation on carrier {element}.
pub fn unit(operad: OperadId, element: usize, color: Color) -> OperadOp {
    let carrier = FiberedSubset::singleton(element);
    let color = if operad.is_colored() { color } else { 0 };
    let payload = match operad {
        OperadId::Bot | OperadId::Top | OperadId::Bot2 | OperadId::Top2 => Payload::Unit,
        OperadId::Lo | OperadId::Lo2 => Payload::Word(vec![element]),
        OperadId::BTr => Payload::Term(BinWord::Leaf(element)),
        OperadId::Act => Payload::Act(ActTerm::Leaf(element)),
    };
    OperadOp::new(operad, carrier, vec![color], color, payload).expect("units are well formed")
}

/// Operadic multiplication: `inner` is indexed by the carrier of `outer` in
/// increasing order; carriers of the inner operations must be pairwise
/// disjoint, and in the colored case the inner output colors must match the
/// outer input colors. The result is carried by the union of the inner
/// carriers.
pub fn multiply(outer: &OperadOp, inner: &[OperadOp]) -> Result<OperadOp> {
    if inner.len() != outer.carrier.len() {
        return Err(Error::Malformed(format!(
            "expected {} inner operations, got {}",
            outer.carrier.len(),
            inner.len()
        )));
    }
    let mut union = FiberedSubset::empty();
    for (pos, op) in inner.iter().enumerate() {
        if op.operad != outer.operad {
            return Err(Error::OperadMismatch {
                expected: outer.operad.to_string(),
                found: op.operad.to_string(),
            });
        }
        if op.output != outer.colors[pos] {
            return Err(Error::ColorMismatch(format!(
                "inner operation {} has output color {}, outer expects {}",
                pos, op.output, outer.colors[pos]
            )));
        }
        union = union.union(&op.carrier)?;
    }
    let colors: Vec<Color> = union
        .iter()
        .map(|x| {
            inner
                .iter()
                .find_map(|op| op.color_of(x))
                .expect("element came from some inner carrier")
        })
        .collect();

    let inner_for = |x: usize| -> &OperadOp {
        let pos = outer.carrier.position(x).expect("letter in outer carrier");
        &inner[pos]
    };

    let payload = match (&outer.payload, outer.operad) {
        (Payload::Unit, _) => Payload::Unit,
        (Payload::Word(word), _) => {
            let mut result = Vec::new();
            for &x in word {
                match &inner_for(x).payload {
                    Payload::Word(w) => result.extend_from_slice(w),
                    _ => unreachable!("inner payload matches operad"),
                }
            }
            Payload::Word(result)
        }
        (Payload::Term(term), _) => {
            let substituted = graft_binword(term, &|x| match &inner_for(x).payload {
                Payload::Term(t) => t.clone(),
                _ => unreachable!(),
            });
            Payload::Term(substituted)
        }
        (Payload::Act(term), _) => {
            let mut assignment = BTreeMap::new();
            for x in outer.carrier.iter() {
                match &inner_for(x).payload {
                    Payload::Act(t) => {
                        assignment.insert(x, t.clone());
                    }
                    _ => unreachable!(),
                }
            }
            Payload::Act(term.graft(&assignment)?)
        }
    };
    OperadOp::new(outer.operad, union, colors, outer.output, payload)
}

fn graft_binword(term: &BinWord, subst: &impl Fn(usize) -> BinWord) -> BinWord {
    match term {
        BinWord::Unit => BinWord::Unit,
        BinWord::Leaf(x) => subst(*x),
        BinWord::Pair(l, r) => BinWord::pair(graft_binword(l, subst), graft_binword(r, subst)),
    }
}

/// The symmetric-group (carrier bijection) action: relabels the payload along
/// σ; colors follow their elements, ⊤/⊥ payloads are unchanged.
pub fn act_bijection(op: &OperadOp, sigma: &BTreeMap<usize, usize>) -> Result<OperadOp> {
    if sigma.len() != op.carrier.len() || op.carrier.iter().any(|x| !sigma.contains_key(&x)) {
        return Err(Error::NotBijective);
    }
    let mut targets: Vec<usize> = sigma.values().copied().collect();
    targets.sort_unstable();
    if targets.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NotBijective);
    }
    let carrier = FiberedSubset::new(targets)?;
    let colors: Vec<Color> = carrier
        .iter()
        .map(|y| {
            let (&x, _) = sigma.iter().find(|&(_, &v)| v == y).expect("surjective");
            op.color_of(x).expect("carrier element")
        })
        .collect();
    let map = |x: usize| sigma[&x];
    let payload = match &op.payload {
        Payload::Unit => Payload::Unit,
        Payload::Word(word) => Payload::Word(word.iter().map(|&x| map(x)).collect()),
        Payload::Term(term) => Payload::Term(term.relabel(map)),
        Payload::Act(term) => Payload::Act(term.relabel(map)),
    };
    OperadOp::new(op.operad, carrier, colors, op.output, payload)
}

/// Transport an operation onto a relabelled carrier with prescribed colors.
/// Operads admitting all colored types are recolored freely; for the rigid
/// ones the prescribed colors must agree with the transported ones.
pub fn transport(
    op: &OperadOp,
    sigma: &BTreeMap<usize, usize>,
    new_colors: &[Color],
    new_output: Color,
) -> Result<OperadOp> {
    let moved = act_bijection(op, sigma)?;
    if moved.colors == new_colors && moved.output == new_output {
        return Ok(moved);
    }
    if !op.operad.has_all_colored_types() {
        return Err(Error::ColorMismatch(format!(
            "cannot recolor a {} operation",
            op.operad
        )));
    }
    OperadOp::new(
        moved.operad,
        moved.carrier,
        new_colors.to_vec(),
        new_output,
        moved.payload,
    )
}

/// Image of `op` under a chain morphism: BTr → Lo takes the type of the term
/// (erasing units and tree structure), anything → ⊤ collapses to the unique
/// operation, ⊥ → BTr sends units to leaves; the colored chain is analogous.
pub fn apply_morphism(m: OperadMorphismId, op: &OperadOp) -> Result<OperadOp> {
    if op.operad != m.source {
        return Err(Error::OperadMismatch {
            expected: m.source.to_string(),
            found: op.operad.to_string(),
        });
    }
    if m.source == m.target {
        return Ok(op.clone());
    }
    let payload = match (m.target, &op.payload) {
        (OperadId::Top | OperadId::Top2, _) => Payload::Unit,
        (OperadId::Lo, Payload::Term(term)) => Payload::Word(term.type_of()),
        (OperadId::Lo | OperadId::Lo2, Payload::Unit) => {
            // ⊥ → Lo: the singleton order
            Payload::Word(op.carrier.iter().collect())
        }
        (OperadId::Lo2, Payload::Act(term)) => Payload::Word(term.type_of()),
        (OperadId::BTr, Payload::Unit) => {
            Payload::Term(BinWord::Leaf(op.carrier.iter().next().expect("unary")))
        }
        (OperadId::Act, Payload::Unit) => {
            Payload::Act(ActTerm::Leaf(op.carrier.iter().next().expect("unary")))
        }
        _ => {
            return Err(Error::OperadMismatch {
                expected: format!("morphism from {}", m.source),
                found: m.target.to_string(),
            })
        }
    };
    OperadOp::new(
        m.target,
        op.carrier.clone(),
        op.colors.clone(),
        op.output,
        payload,
    )
}

/// All binary words with leaf set exactly `elements` and exactly `units`
/// occurrences of e.
fn binwords_exact(elements: &[usize], units: usize) -> Vec<BinWord> {
    if elements.is_empty() && units == 0 {
        return vec![];
    }
    if elements.len() == 1 && units == 0 {
        return vec![BinWord::Leaf(elements[0])];
    }
    if elements.is_empty() && units == 1 {
        return vec![BinWord::Unit];
    }
    let mut out = Vec::new();
    let n = elements.len();
    for mask in 0..(1usize << n) {
        let left: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| elements[i]).collect();
        let right: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).map(|i| elements[i]).collect();
        for kl in 0..=units {
            let kr = units - kl;
            if left.len() + kl == 0 || right.len() + kr == 0 {
                continue;
            }
            for wl in binwords_exact(&left, kl) {
                for wr in binwords_exact(&right, kr) {
                    out.push(BinWord::pair(wl.clone(), wr));
                }
            }
        }
    }
    out
}

/// All linear binary words over `elements` with at most `budget` units.
pub fn linear_binwords(elements: &[usize], budget: usize) -> Vec<BinWord> {
    let mut out = Vec::new();
    for k in 0..=budget {
        out.extend(binwords_exact(elements, k));
    }
    out
}

fn act_terms_exact0(elements: &[usize], units: usize) -> Vec<ActTerm> {
    if elements.is_empty() && units == 0 {
        return vec![];
    }
    if elements.len() == 1 && units == 0 {
        return vec![ActTerm::Leaf(elements[0])];
    }
    if elements.is_empty() && units == 1 {
        return vec![ActTerm::Unit];
    }
    let mut out = Vec::new();
    let n = elements.len();
    for mask in 0..(1usize << n) {
        let left: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| elements[i]).collect();
        let right: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).map(|i| elements[i]).collect();
        for kl in 0..=units {
            let kr = units - kl;
            if left.len() + kl == 0 || right.len() + kr == 0 {
                continue;
            }
            for tl in act_terms_exact0(&left, kl) {
                for tr in act_terms_exact0(&right, kr) {
                    out.push(ActTerm::mul(tl.clone(), tr));
                }
            }
        }
    }
    out
}

/// Color-1 linear terms: a(u, ξ) spines ending in the unique color-1 leaf.
fn act_terms_exact1(zeros: &[usize], one: usize, units: usize) -> Vec<ActTerm> {
    let mut out = Vec::new();
    if zeros.is_empty() && units == 0 {
        out.push(ActTerm::Leaf(one));
    }
    let n = zeros.len();
    for mask in 0..(1usize << n) {
        let left: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| zeros[i]).collect();
        let rest: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).map(|i| zeros[i]).collect();
        for kl in 0..=units {
            let kr = units - kl;
            if left.len() + kl == 0 {
                continue;
            }
            for tl in act_terms_exact0(&left, kl) {
                for tr in act_terms_exact1(&rest, one, kr) {
                    out.push(ActTerm::action(tl.clone(), tr));
                }
            }
        }
    }
    out
}

/// Complete, duplicate-free enumeration of the operations on a carrier,
/// within the unit budget (Lo, ⊤ and ⊥ ignore the budget). For colored
/// operads `colors` assigns carrier colors and `output` fixes the output.
pub fn enumerate_ops(
    operad: OperadId,
    carrier: &FiberedSubset,
    size_bound: usize,
    colors: &[Color],
    output: Color,
) -> Result<Vec<OperadOp>> {
    if colors.len() != carrier.len() {
        return Err(Error::Malformed("color table does not match carrier".into()));
    }
    let elements: Vec<usize> = carrier.iter().collect();
    let mk = |payload: Payload| {
        OperadOp::new(operad, carrier.clone(), colors.to_vec(), output, payload)
    };
    let ops = match operad {
        OperadId::Bot | OperadId::Bot2 => {
            if elements.len() == 1 && (operad == OperadId::Bot || colors[0] == output) {
                vec![mk(Payload::Unit)?]
            } else {
                vec![]
            }
        }
        OperadId::Top | OperadId::Top2 => vec![mk(Payload::Unit)?],
        OperadId::Lo | OperadId::Lo2 => {
            let mut perms = Vec::new();
            permutations(&elements, &mut vec![], &mut perms);
            perms
                .into_iter()
                .map(|word| mk(Payload::Word(word)))
                .collect::<Result<Vec<_>>>()?
        }
        OperadId::BTr => {
            if colors.iter().any(|&c| c != 0) || output != 0 {
                return Err(Error::ColorMismatch("BTr is uncolored".into()));
            }
            linear_binwords(&elements, size_bound)
                .into_iter()
                .map(|term| mk(Payload::Term(term)))
                .collect::<Result<Vec<_>>>()?
        }
        OperadId::Act => {
            let zeros: Vec<usize> = elements
                .iter()
                .zip(colors)
                .filter(|(_, &c)| c == 0)
                .map(|(&x, _)| x)
                .collect();
            let ones: Vec<usize> = elements
                .iter()
                .zip(colors)
                .filter(|(_, &c)| c == 1)
                .map(|(&x, _)| x)
                .collect();
            let mut terms = Vec::new();
            match (output, ones.len()) {
                (0, 0) => {
                    for k in 0..=size_bound {
                        terms.extend(act_terms_exact0(&zeros, k));
                    }
                }
                (1, 1) => {
                    for k in 0..=size_bound {
                        terms.extend(act_terms_exact1(&zeros, ones[0], k));
                    }
                }
                _ => {}
            }
            terms
                .into_iter()
                .map(|term| mk(Payload::Act(term)))
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(ops)
}

fn permutations(rest: &[usize], acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest.is_empty() {
        out.push(acc.clone());
        return;
    }
    for (i, &x) in rest.iter().enumerate() {
        let mut remaining = rest.to_vec();
        remaining.remove(i);
        acc.push(x);
        permutations(&remaining, acc, out);
        acc.pop();
    }
}
