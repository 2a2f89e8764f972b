//! Binary words `Bin(X)` over a natural-number alphabet, the type map `t`,
//! substitution and linearity. These tree terms are the raw material of the
//! monoidal-category theory and its weight.
//!
//! Text form: `e` for the unit symbol, a decimal numeral for a leaf, and
//! `(w*u)` for a pair. The parser round-trips the renderer bit-exactly.

use std::fmt;

use crate::error::{Error, Result};

/// A binary word: the unit symbol `e`, a leaf, or a pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinWord {
    Unit,
    Leaf(usize),
    Pair(Box<BinWord>, Box<BinWord>),
}

/// A finite sequence of letters — the type of a binary word.
pub type TypeWord = Vec<usize>;

impl BinWord {
    pub fn pair(left: BinWord, right: BinWord) -> BinWord {
        BinWord::Pair(Box::new(left), Box::new(right))
    }

    /// The type `t(w)`: `t(e)` is empty, `t(x) = x`, and `t(w⋄u)` is the
    /// concatenation `t(w)t(u)`.
    pub fn type_of(&self) -> TypeWord {
        let mut out = Vec::new();
        self.collect_type(&mut out);
        out
    }

    fn collect_type(&self, out: &mut Vec<usize>) {
        match self {
            BinWord::Unit => {}
            BinWord::Leaf(x) => out.push(*x),
            BinWord::Pair(w, u) => {
                w.collect_type(out);
                u.collect_type(out);
            }
        }
    }

    /// Number of leaves; for words over {1} this is the number of
    /// occurrences of 1.
    pub fn occurrences(&self) -> usize {
        match self {
            BinWord::Unit => 0,
            BinWord::Leaf(_) => 1,
            BinWord::Pair(w, u) => w.occurrences() + u.occurrences(),
        }
    }

    pub fn max_leaf(&self) -> usize {
        match self {
            BinWord::Unit => 0,
            BinWord::Leaf(x) => *x,
            BinWord::Pair(w, u) => w.max_leaf().max(u.max_leaf()),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            BinWord::Unit | BinWord::Leaf(_) => 0,
            BinWord::Pair(w, u) => 1 + w.depth().max(u.depth()),
        }
    }

    /// Replace each leaf `i` by `args[i-1]`; `e` and the pair structure are
    /// preserved. Leaves must lie in `(args.len()]`.
    pub fn substitute(&self, args: &[BinWord]) -> Result<BinWord> {
        match self {
            BinWord::Unit => Ok(BinWord::Unit),
            BinWord::Leaf(x) => {
                if *x == 0 || *x > args.len() {
                    Err(Error::OutOfRange {
                        value: *x,
                        bound: args.len(),
                    })
                } else {
                    Ok(args[*x - 1].clone())
                }
            }
            BinWord::Pair(w, u) => Ok(BinWord::pair(w.substitute(args)?, u.substitute(args)?)),
        }
    }

    /// True iff every letter of `alphabet` occurs exactly once in the word
    /// and every leaf lies in `alphabet`; `e` may occur any number of times.
    /// A linear word over X is an element of BTr(X).
    pub fn is_linear(&self, alphabet: &[usize]) -> bool {
        let ty = self.type_of();
        if ty.len() != alphabet.len() {
            return false;
        }
        let mut sorted = ty;
        sorted.sort_unstable();
        let mut expected: Vec<usize> = alphabet.to_vec();
        expected.sort_unstable();
        sorted == expected && expected.windows(2).all(|w| w[0] < w[1])
    }

    /// Relabel leaves along a map; used for the symmetric-group action.
    pub fn relabel(&self, map: impl Fn(usize) -> usize + Copy) -> BinWord {
        match self {
            BinWord::Unit => BinWord::Unit,
            BinWord::Leaf(x) => BinWord::Leaf(map(*x)),
            BinWord::Pair(w, u) => BinWord::pair(w.relabel(map), u.relabel(map)),
        }
    }

    pub fn render(&self) -> String {
        format!("{}", self)
    }

    pub fn parse(input: &str) -> Result<BinWord> {
        let bytes = input.trim().as_bytes();
        let mut pos = 0;
        let word = parse_word(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!(
                "trailing input at byte {} in {:?}",
                pos, input
            )));
        }
        Ok(word)
    }
}

impl fmt::Display for BinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinWord::Unit => write!(f, "e"),
            BinWord::Leaf(x) => write!(f, "{}", x),
            BinWord::Pair(w, u) => write!(f, "({}*{})", w, u),
        }
    }
}

fn parse_word(bytes: &[u8], pos: &mut usize) -> Result<BinWord> {
    match bytes.get(*pos) {
        Some(b'e') => {
            *pos += 1;
            Ok(BinWord::Unit)
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let text = std::str::from_utf8(&bytes[start..*pos]).unwrap();
            let value: usize = text
                .parse()
                .map_err(|_| Error::Parse(format!("bad numeral {:?}", text)))?;
            if value == 0 {
                return Err(Error::Parse("leaf 0 is not a letter".into()));
            }
            Ok(BinWord::Leaf(value))
        }
        Some(b'(') => {
            *pos += 1;
            let left = parse_word(bytes, pos)?;
            if bytes.get(*pos) != Some(&b'*') {
                return Err(Error::Parse(format!("expected '*' at byte {}", *pos)));
            }
            *pos += 1;
            let right = parse_word(bytes, pos)?;
            if bytes.get(*pos) != Some(&b')') {
                return Err(Error::Parse(format!("expected ')' at byte {}", *pos)));
            }
            *pos += 1;
            Ok(BinWord::pair(left, right))
        }
        other => Err(Error::Parse(format!(
            "unexpected {:?} at byte {}",
            other.map(|b| *b as char),
            *pos
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> BinWord {
        BinWord::parse(s).unwrap()
    }

    #[test]
    fn type_map() {
        assert_eq!(BinWord::Unit.type_of(), Vec::<usize>::new());
        assert_eq!(w("(1*2)").type_of(), vec![1, 2]);
        assert_eq!(w("((1*e)*1)").type_of(), vec![1, 1]);
    }

    #[test]
    fn substitution() {
        let u = w("(1*2)");
        assert_eq!(
            u.substitute(&[BinWord::Leaf(1), BinWord::Unit]).unwrap(),
            w("(1*e)")
        );
        assert_eq!(
            BinWord::Leaf(1).substitute(&[w("(1*1)")]).unwrap(),
            w("(1*1)")
        );
        assert_eq!(
            w("(1*1)").substitute(&[w("(1*2)")]).unwrap(),
            w("((1*2)*(1*2))")
        );
        assert!(w("(1*3)").substitute(&[BinWord::Unit]).is_err());
    }

    #[test]
    fn linearity() {
        assert!(w("(2*1)").is_linear(&[1, 2]));
        assert!(!w("(1*1)").is_linear(&[1]));
        assert!(w("(e*1)").is_linear(&[1]));
        assert!(!w("(e*1)").is_linear(&[1, 2]));
    }

    #[test]
    fn occurrence_counts() {
        assert_eq!(BinWord::Unit.occurrences(), 0);
        assert_eq!(w("(1*(1*e))").occurrences(), 2);
        assert_eq!(w("((1*1)*1)").occurrences(), 3);
    }

    fn arb_word(max_letter: usize, depth: u32) -> impl Strategy<Value = BinWord> {
        let leaf = prop_oneof![
            Just(BinWord::Unit),
            (1..=max_letter).prop_map(BinWord::Leaf)
        ];
        leaf.prop_recursive(depth, 32, 2, |inner| {
            (inner.clone(), inner).prop_map(|(a, b)| BinWord::pair(a, b))
        })
    }

    proptest! {
        #[test]
        fn parse_roundtrip(word in arb_word(9, 4)) {
            let rendered = word.render();
            prop_assert_eq!(BinWord::parse(&rendered).unwrap(), word);
        }

        #[test]
        fn type_commutes_with_substitution(
            u in arb_word(3, 3),
            args in proptest::collection::vec(arb_word(2, 3), 3),
        ) {
            let sub = u.substitute(&args).unwrap();
            let expected: Vec<usize> = u
                .type_of()
                .into_iter()
                .flat_map(|i| args[i - 1].type_of())
                .collect();
            prop_assert_eq!(sub.type_of(), expected);
        }

        #[test]
        fn substitution_associative(
            u in arb_word(2, 3),
            mid in proptest::collection::vec(arb_word(2, 3), 2),
            last in proptest::collection::vec(arb_word(2, 3), 2),
        ) {
            // substituting into a substitute equals the combined substitution
            let one = u.substitute(&mid).unwrap().substitute(&last).unwrap();
            let combined: Vec<BinWord> = mid
                .iter()
                .map(|m| m.substitute(&last).unwrap())
                .collect();
            let two = u.substitute(&combined).unwrap();
            prop_assert_eq!(one, two);
        }

        #[test]
        fn linear_words_have_permutation_types(word in arb_word(4, 3)) {
            let alphabet: Vec<usize> = (1..=4).collect();
            if word.is_linear(&alphabet) {
                let mut ty = word.type_of();
                ty.sort_unstable();
                prop_assert_eq!(ty, alphabet);
            }
        }
    }
}
