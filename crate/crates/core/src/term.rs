//! Elementary translations.
//!
//! A polynomial is either the variable `x` or `a[b_1 … t … b_n]` where exactly
//! one argument is again a polynomial and the others are constants. The syntax
//! tree is therefore a single chain from the root to `x`; [`TranslationTerm`]
//! stores that chain as a list of layers, innermost first.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{ArgVector, Element, MengerAlgebra};
use crate::error::{Error, Result};

/// Default limit on the number of distinct translation tables.
pub const DEFAULT_TRANSLATION_CAP: usize = 100_000;

/// One bracket level `head[c_1 … hole … c_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Layer {
    pub head: Element,
    /// Position (0-based) of the argument holding the inner polynomial.
    pub slot: usize,
    /// The `n - 1` constant arguments, in order, skipping `slot`.
    pub constants: Vec<Element>,
}

impl Layer {
    /// The argument at position `i`, or `None` for the hole.
    pub fn arg(&self, i: usize) -> Option<Element> {
        match i.cmp(&self.slot) {
            std::cmp::Ordering::Less => Some(self.constants[i]),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(self.constants[i - 1]),
        }
    }

    fn eval(&self, alg: &MengerAlgebra, value: Element) -> Element {
        let m = alg.size();
        let n = alg.rank();
        let mut code = 0;
        for i in 0..n {
            code = code * m + self.arg(i).unwrap_or(value);
        }
        alg.apply_code(self.head, code)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TranslationTerm {
    layers: Vec<Layer>,
}

impl TranslationTerm {
    /// The polynomial `x`.
    pub fn variable() -> Self {
        TranslationTerm::default()
    }

    pub fn is_variable(&self) -> bool {
        self.layers.is_empty()
    }

    /// `head[c_1 … self … c_n]` with `self` at `slot`.
    pub fn wrap(&self, head: Element, slot: usize, constants: Vec<Element>) -> Self {
        let mut layers = self.layers.clone();
        layers.push(Layer {
            head,
            slot,
            constants,
        });
        TranslationTerm { layers }
    }

    /// Layers from the innermost (closest to `x`) outwards.
    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn validate(&self, alg: &MengerAlgebra) -> Result<()> {
        for layer in &self.layers {
            alg.check_element(layer.head)?;
            if layer.slot >= alg.rank() {
                return Err(Error::SlotOutOfRange {
                    slot: layer.slot,
                    rank: alg.rank(),
                });
            }
            if layer.constants.len() + 1 != alg.rank() {
                return Err(Error::ArityMismatch {
                    head: alg.name(layer.head).to_string(),
                    expected: alg.rank(),
                    found: layer.constants.len() + 1,
                });
            }
            layer
                .constants
                .iter()
                .try_for_each(|&c| alg.check_element(c))?;
        }
        Ok(())
    }

    pub fn eval_at(&self, alg: &MengerAlgebra, g: Element) -> Element {
        self.layers.iter().fold(g, |v, layer| layer.eval(alg, v))
    }

    pub fn eval(&self, alg: &MengerAlgebra) -> TranslationTable {
        TranslationTable(alg.elements().map(|g| self.eval_at(alg, g)).collect())
    }

    pub fn display<'a>(&'a self, alg: &'a MengerAlgebra) -> TermDisplay<'a> {
        TermDisplay { term: self, alg }
    }
}

pub struct TermDisplay<'a> {
    term: &'a TranslationTerm,
    alg: &'a MengerAlgebra,
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_term(self.alg, self.term))
    }
}

/// Canonical text form, e.g. `a[b x]`.
pub fn format_term(alg: &MengerAlgebra, term: &TranslationTerm) -> String {
    let mut out = String::from("x");
    for layer in &term.layers {
        let mut s = String::with_capacity(out.len() + 4 * alg.rank());
        s.push_str(alg.name(layer.head));
        s.push('[');
        for i in 0..alg.rank() {
            if i > 0 {
                s.push(' ');
            }
            match layer.arg(i) {
                Some(c) => s.push_str(alg.name(c)),
                None => s.push_str(&out),
            }
        }
        s.push(']');
        out = s;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Word(&'a str),
    Open,
    Close,
}

fn tokenize(text: &str) -> Vec<(usize, Token<'_>)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in text.char_indices() {
        let delim = c.is_whitespace() || c == '[' || c == ']';
        if delim {
            if let Some(s) = start.take() {
                out.push((s, Token::Word(&text[s..i])));
            }
            match c {
                '[' => out.push((i, Token::Open)),
                ']' => out.push((i, Token::Close)),
                _ => {}
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, Token::Word(&text[s..])));
    }
    out
}

enum Parsed {
    Constant(Element),
    Term(TranslationTerm),
}

struct Parser<'a> {
    alg: &'a MengerAlgebra,
    tokens: Vec<(usize, Token<'a>)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn syntax(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.here(),
            message: message.to_string(),
        }
    }

    fn parse_arg(&mut self) -> Result<Parsed> {
        let word = match self.tokens.get(self.pos) {
            Some((_, Token::Word(w))) => *w,
            Some(_) => return Err(self.syntax("expected a name or x")),
            None => return Err(self.syntax("unexpected end of input")),
        };
        self.pos += 1;
        if word == "x" {
            if matches!(self.tokens.get(self.pos), Some((_, Token::Open))) {
                return Err(self.syntax("the variable x cannot be applied"));
            }
            return Ok(Parsed::Term(TranslationTerm::variable()));
        }
        let elem = self
            .alg
            .element(word)
            .ok_or_else(|| Error::UnknownElement(word.to_string()))?;
        if !matches!(self.tokens.get(self.pos), Some((_, Token::Open))) {
            return Ok(Parsed::Constant(elem));
        }
        self.pos += 1;
        let mut args = Vec::new();
        loop {
            match self.tokens.get(self.pos) {
                Some((_, Token::Close)) => {
                    self.pos += 1;
                    break;
                }
                None => return Err(self.syntax("unclosed bracket")),
                _ => args.push(self.parse_arg()?),
            }
        }
        if args.len() != self.alg.rank() {
            return Err(Error::ArityMismatch {
                head: word.to_string(),
                expected: self.alg.rank(),
                found: args.len(),
            });
        }
        let mut inner = None;
        let mut constants = Vec::with_capacity(args.len().saturating_sub(1));
        for (i, arg) in args.into_iter().enumerate() {
            match arg {
                Parsed::Constant(c) => constants.push(c),
                Parsed::Term(t) => {
                    if inner.is_some() {
                        return Err(Error::MultipleVariables);
                    }
                    inner = Some((i, t));
                }
            }
        }
        let (slot, inner) = inner.ok_or(Error::NoVariable)?;
        Ok(Parsed::Term(inner.wrap(elem, slot, constants)))
    }
}

/// Parses `term := "x" | name "[" arg{n} "]"`.
pub fn parse_term(alg: &MengerAlgebra, text: &str) -> Result<TranslationTerm> {
    let mut parser = Parser {
        alg,
        tokens: tokenize(text),
        pos: 0,
        end: text.len(),
    };
    let parsed = parser.parse_arg()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.syntax("trailing input"));
    }
    match parsed {
        Parsed::Term(t) => Ok(t),
        Parsed::Constant(_) => Err(Error::NoVariable),
    }
}

/// The extensional form of a translation: `images[g] = t(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TranslationTable(pub Vec<Element>);

impl TranslationTable {
    pub fn identity(m: usize) -> Self {
        TranslationTable((0..m).collect())
    }

    #[inline]
    pub fn at(&self, g: Element) -> Element {
        self.0[g]
    }

    /// `self ∘ inner`, i.e. `g ↦ self(inner(g))`.
    pub fn compose(&self, inner: &TranslationTable) -> TranslationTable {
        TranslationTable(inner.0.iter().map(|&g| self.0[g]).collect())
    }

    pub fn images(&self) -> &[Element] {
        &self.0
    }
}

/// Pointwise `t1(t2(·))`.
pub fn compose(t1: &TranslationTable, t2: &TranslationTable) -> TranslationTable {
    t1.compose(t2)
}

/// All elementary translations of an algebra, deduplicated by table.
#[derive(Clone, Debug)]
pub struct TranslationClosure {
    tables: Vec<TranslationTable>,
    witnesses: Vec<TranslationTerm>,
    generation: Vec<usize>,
    index: HashMap<TranslationTable, usize>,
}

impl TranslationClosure {
    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    pub fn table(&self, i: usize) -> &TranslationTable {
        &self.tables[i]
    }

    pub fn tables(&self) -> &[TranslationTable] {
        &self.tables
    }

    pub fn witness(&self, i: usize) -> &TranslationTerm {
        &self.witnesses[i]
    }

    pub fn witnesses(&self) -> &[TranslationTerm] {
        &self.witnesses
    }

    /// Breadth-first generation in which table `i` was first reached.
    pub fn generation(&self, i: usize) -> usize {
        self.generation[i]
    }

    pub fn index_of(&self, table: &TranslationTable) -> Option<usize> {
        self.index.get(table).copied()
    }

    /// Index of the identity translation (always 0).
    pub fn identity(&self) -> usize {
        0
    }

    /// `t(g)` for the table with index `t`.
    #[inline]
    pub fn eval(&self, t: usize, g: Element) -> Element {
        self.tables[t].0[g]
    }
}

/// Least set of tables containing the identity and closed under
/// `t ↦ a[b_1 … t … b_n]`.
///
/// Generations are explored breadth first; inside a generation parents, heads,
/// slots and constant tuples are scanned in lexicographic order. A new table
/// takes its position from the first candidate that produced it. Its witness
/// is the shortest rendered candidate of that generation, ties going to the
/// lexicographically smaller text.
pub fn translation_closure(alg: &MengerAlgebra, cap: usize) -> Result<TranslationClosure> {
    let m = alg.size();
    let n = alg.rank();
    let identity = TranslationTable::identity(m);
    let mut closure = TranslationClosure {
        tables: vec![identity.clone()],
        witnesses: vec![TranslationTerm::variable()],
        generation: vec![0],
        index: HashMap::from([(identity, 0)]),
    };
    if cap == 0 {
        return Err(Error::capacity("translation tables", 1, 0));
    }
    let const_tuples = m.pow(n as u32 - 1);
    let mut frontier: Vec<usize> = vec![0];
    let mut gen = 0;
    let mut constants = vec![0; n - 1];
    while !frontier.is_empty() {
        gen += 1;
        // table -> (candidate term, rendered)
        let mut fresh: Vec<(TranslationTable, TranslationTerm, String)> = Vec::new();
        let mut fresh_index: HashMap<TranslationTable, usize> = HashMap::new();
        for &parent in &frontier {
            for head in 0..m {
                for slot in 0..n {
                    for c in 0..const_tuples {
                        crate::algebra::decode_into(c, m, &mut constants);
                        let layer = Layer {
                            head,
                            slot,
                            constants: constants.clone(),
                        };
                        let images: Vec<Element> = closure.tables[parent]
                            .0
                            .iter()
                            .map(|&v| layer.eval(alg, v))
                            .collect();
                        let table = TranslationTable(images);
                        if closure.index.contains_key(&table) {
                            continue;
                        }
                        let term = closure.witnesses[parent].wrap(head, slot, constants.clone());
                        let text = format_term(alg, &term);
                        match fresh_index.get(&table) {
                            Some(&k) => {
                                let best = &fresh[k].2;
                                if (text.len(), &text) < (best.len(), best) {
                                    fresh[k].1 = term;
                                    fresh[k].2 = text;
                                }
                            }
                            None => {
                                if closure.tables.len() + fresh.len() >= cap {
                                    return Err(Error::capacity(
                                        "translation tables",
                                        (closure.tables.len() + fresh.len() + 1) as u128,
                                        cap as u128,
                                    ));
                                }
                                fresh_index.insert(table.clone(), fresh.len());
                                fresh.push((table, term, text));
                            }
                        }
                    }
                }
            }
        }
        frontier.clear();
        for (table, term, _) in fresh {
            let i = closure.tables.len();
            closure.index.insert(table.clone(), i);
            closure.tables.push(table);
            closure.witnesses.push(term);
            closure.generation.push(gen);
            frontier.push(i);
        }
    }
    Ok(closure)
}

/// Replaces every constant `c` of the term by `c[ā]`; heads and `x` stay.
pub fn associate_polynomial(
    alg: &MengerAlgebra,
    term: &TranslationTerm,
    a: &ArgVector,
) -> TranslationTerm {
    let idx = alg.arg_index(a);
    TranslationTerm {
        layers: term
            .layers
            .iter()
            .map(|layer| Layer {
                head: layer.head,
                slot: layer.slot,
                constants: layer
                    .constants
                    .iter()
                    .map(|&c| alg.apply_index(c, idx))
                    .collect(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Validation;

    fn lz2() -> MengerAlgebra {
        MengerAlgebra::from_fn(1, &["a", "b"], |g, _| g, Validation::Check).unwrap()
    }

    fn rz2() -> MengerAlgebra {
        MengerAlgebra::from_fn(1, &["a", "b"], |_, xs| xs[0], Validation::Check).unwrap()
    }

    fn left_zero_rank2() -> MengerAlgebra {
        MengerAlgebra::from_fn(2, &["a", "b"], |g, _| g, Validation::Check).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert!(parse_term(&lz2(), "x").unwrap().is_variable());
        let alg = left_zero_rank2();
        let t = parse_term(&alg, "a[b x]").unwrap();
        assert_eq!(
            t.layers(),
            &[Layer {
                head: 0,
                slot: 1,
                constants: vec![1]
            }]
        );
        assert_eq!(parse_term(&alg, "a[x x]"), Err(Error::MultipleVariables));
        assert_eq!(parse_term(&alg, "a[b b]"), Err(Error::NoVariable));
        assert!(matches!(
            parse_term(&alg, "a[x]"),
            Err(Error::ArityMismatch { found: 1, .. })
        ));
        assert_eq!(
            parse_term(&alg, "c[x a]"),
            Err(Error::UnknownElement("c".into()))
        );
        assert!(matches!(
            parse_term(&alg, "a[b x"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_term(&alg, "a[b x] b"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(parse_term(&alg, ""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn format_examples() {
        let alg = left_zero_rank2();
        assert_eq!(format_term(&alg, &TranslationTerm::variable()), "x");
        let t = TranslationTerm::variable().wrap(0, 1, vec![1]);
        assert_eq!(format_term(&alg, &t), "a[b x]");
        let nested = t.wrap(1, 0, vec![0]);
        assert_eq!(format_term(&alg, &nested), "b[a[b x] a]");
        assert_eq!(parse_term(&alg, "b[ a[b x]   a ]").unwrap(), nested);
    }

    #[test]
    fn eval_examples() {
        let lz = lz2();
        let t = parse_term(&lz, "a[x]").unwrap();
        assert_eq!(t.eval(&lz), TranslationTable(vec![0, 0]));
        let one = MengerAlgebra::from_fn(2, &["f"], |_, _| 0, Validation::Check).unwrap();
        let t = parse_term(&one, "f[f x]").unwrap();
        assert_eq!(t.eval(&one), TranslationTable::identity(1));
    }

    #[test]
    fn compose_examples() {
        let id = TranslationTable::identity(2);
        let const_a = TranslationTable(vec![0, 0]);
        let swap = TranslationTable(vec![1, 0]);
        assert_eq!(compose(&id, &swap), swap);
        assert_eq!(compose(&const_a, &swap), const_a);
        assert_eq!(
            compose(&compose(&swap, &const_a), &swap),
            compose(&swap, &compose(&const_a, &swap))
        );
    }

    #[test]
    fn closure_examples() {
        let lz = lz2();
        let c = translation_closure(&lz, DEFAULT_TRANSLATION_CAP).unwrap();
        assert_eq!(c.len(), 3);
        let texts: Vec<String> = c.witnesses().iter().map(|t| format_term(&lz, t)).collect();
        assert_eq!(texts, vec!["x", "a[x]", "b[x]"]);
        assert_eq!(c.table(1), &TranslationTable(vec![0, 0]));
        assert_eq!(translation_closure(&rz2(), 10).unwrap().len(), 1);
        let one = MengerAlgebra::from_fn(2, &["f"], |_, _| 0, Validation::Check).unwrap();
        assert_eq!(translation_closure(&one, 10).unwrap().len(), 1);
        assert!(matches!(
            translation_closure(&lz, 2),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn associate_examples() {
        let alg = MengerAlgebra::from_fn(
            2,
            &["a", "b"],
            |g, xs| if g == 0 { xs[0] } else { xs[1] },
            Validation::Check,
        )
        .unwrap();
        let t = parse_term(&alg, "a[b x]").unwrap();
        let abar = ArgVector::Concrete(vec![1, 0]);
        let ta = associate_polynomial(&alg, &t, &abar);
        // b[(b,a)] = a, head untouched
        assert_eq!(format_term(&alg, &ta), "a[a x]");
        assert_eq!(associate_polynomial(&alg, &t, &ArgVector::Selector), t);
    }
}
