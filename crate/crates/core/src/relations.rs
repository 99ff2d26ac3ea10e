//! Equivalence relations on the carrier and the relation / subset properties
//! they can have.
//!
//! Every check returns a [`Verdict`]. A failing verdict carries the
//! lexicographically first violating assignment, scanning elements by index,
//! tuples by code and slots ascending.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{ArgVector, Element, MengerAlgebra};
use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::term::{format_term, TranslationClosure};

/// An equivalence relation, stored as one label per element. The label of a
/// block is its smallest member.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    block_of: Vec<Element>,
}

impl Partition {
    /// Canonicalises arbitrary labels: elements with equal labels share a block.
    pub fn from_labels<L: Eq + std::hash::Hash>(labels: &[L]) -> Self {
        let mut first: HashMap<&L, Element> = HashMap::new();
        let block_of = labels
            .iter()
            .enumerate()
            .map(|(e, l)| *first.entry(l).or_insert(e))
            .collect();
        Partition { block_of }
    }

    /// Builds the partition of an equivalence relation given as a predicate.
    ///
    /// Each element joins the block of the first earlier representative it is
    /// related to.
    pub fn from_equivalence(
        size: usize,
        mut related: impl FnMut(Element, Element) -> bool,
    ) -> Self {
        let mut reps: Vec<Element> = Vec::new();
        let mut block_of = vec![0; size];
        for (e, block) in block_of.iter_mut().enumerate() {
            match reps.iter().find(|&&r| related(r, e)) {
                Some(&r) => *block = r,
                None => {
                    reps.push(e);
                    *block = e;
                }
            }
        }
        Partition { block_of }
    }

    pub fn from_blocks(size: usize, blocks: &[Subset]) -> Result<Self> {
        let mut block_of: Vec<Option<Element>> = vec![None; size];
        for b in blocks {
            if b.universe() != size {
                return Err(Error::SizeMismatch(b.universe(), size));
            }
            let Some(label) = b.first() else { continue };
            for e in b.iter() {
                if block_of[e].is_some() {
                    return Err(Error::NotABlock);
                }
                block_of[e] = Some(label);
            }
        }
        block_of
            .into_iter()
            .map(|l| l.ok_or(Error::NotABlock))
            .collect::<Result<Vec<_>>>()
            .map(|block_of| Partition { block_of })
    }

    pub fn identity(size: usize) -> Self {
        Partition {
            block_of: (0..size).collect(),
        }
    }

    pub fn universal(size: usize) -> Self {
        Partition {
            block_of: vec![0; size],
        }
    }

    pub fn size(&self) -> usize {
        self.block_of.len()
    }

    pub fn labels(&self) -> &[Element] {
        &self.block_of
    }

    #[inline]
    pub fn label(&self, e: Element) -> Element {
        self.block_of[e]
    }

    #[inline]
    pub fn related(&self, a: Element, b: Element) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    pub fn block_count(&self) -> usize {
        self.block_of
            .iter()
            .enumerate()
            .filter(|&(e, &l)| e == l)
            .count()
    }

    pub fn block_containing(&self, e: Element) -> Subset {
        let l = self.block_of[e];
        Subset::from_predicate(self.size(), |x| self.block_of[x] == l)
    }

    /// Blocks ordered by their smallest member.
    pub fn blocks(&self) -> Vec<Subset> {
        (0..self.size())
            .filter(|&e| self.block_of[e] == e)
            .map(|e| self.block_containing(e))
            .collect()
    }

    pub fn is_block(&self, s: &Subset) -> bool {
        match s.first() {
            Some(e) => &self.block_containing(e) == s,
            None => false,
        }
    }

    /// Members of the block of `e`, ascending.
    pub fn members(&self, e: Element) -> Vec<Element> {
        let l = self.block_of[e];
        (0..self.size())
            .filter(|&x| self.block_of[x] == l)
            .collect()
    }

    /// `self ⊆ other` as sets of pairs.
    pub fn is_finer_than(&self, other: &Partition) -> bool {
        (0..self.size()).all(|e| other.related(e, self.block_of[e]))
    }

    /// Whether both relations contain the same pairs inside `domain × domain`.
    pub fn agrees_on(&self, other: &Partition, domain: &Subset) -> bool {
        let d: Vec<Element> = domain.iter().collect();
        d.iter()
            .all(|&a| d.iter().all(|&b| self.related(a, b) == other.related(a, b)))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.blocks()).finish()
    }
}

/// A symmetric, transitive relation whose domain may omit some elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialPartition {
    domain: Subset,
    block_of: Vec<Option<Element>>,
}

impl PartialPartition {
    /// Restricts `partition` to `domain`; labels become the smallest member
    /// inside the domain.
    pub fn restrict(partition: &Partition, domain: &Subset) -> Self {
        let mut label_of_block: HashMap<Element, Element> = HashMap::new();
        let block_of = (0..partition.size())
            .map(|e| {
                domain
                    .contains(e)
                    .then(|| *label_of_block.entry(partition.label(e)).or_insert(e))
            })
            .collect();
        PartialPartition {
            domain: domain.clone(),
            block_of,
        }
    }

    pub fn domain(&self) -> &Subset {
        &self.domain
    }

    pub fn excluded(&self) -> Subset {
        self.domain.complement()
    }

    pub fn label(&self, e: Element) -> Option<Element> {
        self.block_of[e]
    }

    pub fn related(&self, a: Element, b: Element) -> bool {
        match (self.block_of[a], self.block_of[b]) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }

    pub fn blocks(&self) -> Vec<Subset> {
        let m = self.block_of.len();
        (0..m)
            .filter(|&e| self.block_of[e] == Some(e))
            .map(|e| Subset::from_predicate(m, |x| self.block_of[x] == Some(e)))
            .collect()
    }
}

/// `(a, b)` related iff related in every input.
pub fn meet_partitions(parts: &[Partition]) -> Result<Partition> {
    let first = parts.first().ok_or(Error::EmptyPartitionList)?;
    let m = first.size();
    if let Some(p) = parts.iter().find(|p| p.size() != m) {
        return Err(Error::SizeMismatch(p.size(), m));
    }
    let labels: Vec<Vec<Element>> = (0..m)
        .map(|e| parts.iter().map(|p| p.label(e)).collect())
        .collect();
    Ok(Partition::from_labels(&labels))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessValue {
    Element(Element),
    Tuple(Vec<Element>),
    Arg(ArgVector),
    /// Index into a translation closure.
    Translation(usize),
    /// 0-based; rendered 1-based.
    Slot(usize),
}

/// A named assignment of the quantified variables that breaks a property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub fields: Vec<(&'static str, WitnessValue)>,
}

impl Witness {
    pub fn new(fields: Vec<(&'static str, WitnessValue)>) -> Self {
        Witness { fields }
    }

    pub fn get(&self, name: &str) -> Option<&WitnessValue> {
        self.fields.iter().find(|f| f.0 == name).map(|f| &f.1)
    }

    pub fn describe(&self, alg: &MengerAlgebra, closure: Option<&TranslationClosure>) -> String {
        let tuple = |xs: &[Element]| {
            let parts: Vec<&str> = xs.iter().map(|&x| alg.name(x)).collect();
            format!("({})", parts.join(","))
        };
        self.fields
            .iter()
            .map(|(name, v)| {
                let rendered = match v {
                    WitnessValue::Element(e) => alg.name(*e).to_string(),
                    WitnessValue::Tuple(xs) => tuple(xs),
                    WitnessValue::Arg(a) => alg.format_arg(a),
                    WitnessValue::Translation(t) => match closure {
                        Some(c) => format_term(alg, c.witness(*t)),
                        None => format!("#{t}"),
                    },
                    WitnessValue::Slot(i) => (i + 1).to_string(),
                };
                format!("{name}={rendered}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Outcome of a property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub witness: Option<Witness>,
    /// Set when the property holds only because its quantifier range is empty.
    pub vacuous: bool,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            witness: None,
            vacuous: false,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        Verdict {
            witness: Some(witness),
            vacuous: false,
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    fn from_search(found: Option<Witness>) -> Self {
        match found {
            Some(w) => Verdict::fail(w),
            None => Verdict::pass(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationProperty {
    Stable,
    LRegular,
    VRegular,
    /// 0-based slot.
    IRegular(usize),
    LCancellative,
    VCancellative,
    LvCancellative,
    VCongruence,
    LCongruence,
    Congruence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubsetProperty {
    NormalVComplex,
    NormalLComplex,
    NormalBicomplex,
    LIdeal,
    /// 0-based slot.
    IIdeal(usize),
    SIdeal,
    SlIdeal,
    LConsistent,
}

/// Parses `name(k)` with a 1-based `k`.
fn indexed(s: &str, prefix: &str) -> Option<std::result::Result<usize, ()>> {
    let rest = s
        .strip_prefix(prefix)?
        .strip_prefix('(')?
        .strip_suffix(')')?;
    Some(match rest.parse::<usize>() {
        Ok(k) if k >= 1 => Ok(k - 1),
        _ => Err(()),
    })
}

impl FromStr for RelationProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use RelationProperty::*;
        Ok(match s {
            "stable" => Stable,
            "l-regular" => LRegular,
            "v-regular" => VRegular,
            "l-cancellative" => LCancellative,
            "v-cancellative" => VCancellative,
            "lv-cancellative" => LvCancellative,
            "v-congruence" => VCongruence,
            "l-congruence" => LCongruence,
            "congruence" => Congruence,
            _ => match indexed(s, "i-regular") {
                Some(Ok(i)) => IRegular(i),
                _ => return Err(Error::UnknownProperty(s.to_string())),
            },
        })
    }
}

impl fmt::Display for RelationProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use RelationProperty::*;
        match self {
            Stable => f.write_str("stable"),
            LRegular => f.write_str("l-regular"),
            VRegular => f.write_str("v-regular"),
            IRegular(i) => write!(f, "i-regular({})", i + 1),
            LCancellative => f.write_str("l-cancellative"),
            VCancellative => f.write_str("v-cancellative"),
            LvCancellative => f.write_str("lv-cancellative"),
            VCongruence => f.write_str("v-congruence"),
            LCongruence => f.write_str("l-congruence"),
            Congruence => f.write_str("congruence"),
        }
    }
}

impl FromStr for SubsetProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use SubsetProperty::*;
        Ok(match s {
            "normal-v-complex" => NormalVComplex,
            "normal-l-complex" => NormalLComplex,
            "normal-bicomplex" => NormalBicomplex,
            "l-ideal" => LIdeal,
            "s-ideal" => SIdeal,
            "sl-ideal" => SlIdeal,
            "l-consistent" => LConsistent,
            _ => match indexed(s, "i-ideal") {
                Some(Ok(i)) => IIdeal(i),
                _ => return Err(Error::UnknownProperty(s.to_string())),
            },
        })
    }
}

impl fmt::Display for SubsetProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SubsetProperty::*;
        match self {
            NormalVComplex => f.write_str("normal-v-complex"),
            NormalLComplex => f.write_str("normal-l-complex"),
            NormalBicomplex => f.write_str("normal-bicomplex"),
            LIdeal => f.write_str("l-ideal"),
            IIdeal(i) => write!(f, "i-ideal({})", i + 1),
            SIdeal => f.write_str("s-ideal"),
            SlIdeal => f.write_str("sl-ideal"),
            LConsistent => f.write_str("l-consistent"),
        }
    }
}

use WitnessValue as V;

/// Calls `f` on every tuple componentwise related to `xs`, in lexicographic
/// order, until it returns `Some`.
fn find_related_tuple<T>(
    rel: &Partition,
    xs: &[Element],
    mut f: impl FnMut(&[Element]) -> Option<T>,
) -> Option<T> {
    let choices: Vec<Vec<Element>> = xs.iter().map(|&x| rel.members(x)).collect();
    let mut pos = vec![0usize; xs.len()];
    let mut ys: Vec<Element> = choices.iter().map(|c| c[0]).collect();
    loop {
        if let Some(r) = f(&ys) {
            return Some(r);
        }
        let mut k = xs.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            pos[k] += 1;
            if pos[k] < choices[k].len() {
                ys[k] = choices[k][pos[k]];
                break;
            }
            pos[k] = 0;
            ys[k] = choices[k][0];
        }
    }
}

fn slot_weight(alg: &MengerAlgebra, slot: usize) -> usize {
    alg.size().pow((alg.rank() - 1 - slot) as u32)
}

/// Code of `w̄|_slot h`.
#[inline]
fn substitute(alg: &MengerAlgebra, code: usize, slot: usize, h: Element) -> usize {
    let weight = slot_weight(alg, slot);
    let current = code / weight % alg.size();
    code - current * weight + h * weight
}

fn check_slot(alg: &MengerAlgebra, slot: usize) -> Result<()> {
    if slot < alg.rank() {
        Ok(())
    } else {
        Err(Error::SlotOutOfRange {
            slot,
            rank: alg.rank(),
        })
    }
}

fn stable_violation(alg: &MengerAlgebra, rel: &Partition) -> Option<Witness> {
    let m = alg.size();
    for x in 0..m {
        for y in rel.members(x) {
            for xcode in 0..alg.tuple_count() {
                let xs = alg.decode_tuple(xcode);
                let lhs = alg.apply_code(x, xcode);
                let found = find_related_tuple(rel, &xs, |ys| {
                    let rhs = alg.apply_tuple(y, ys);
                    (!rel.related(lhs, rhs)).then(|| ys.to_vec())
                });
                if let Some(ys) = found {
                    return Some(Witness::new(vec![
                        ("x", V::Element(x)),
                        ("y", V::Element(y)),
                        ("xs", V::Tuple(xs)),
                        ("ys", V::Tuple(ys)),
                    ]));
                }
            }
        }
    }
    None
}

fn l_regular_violation(alg: &MengerAlgebra, rel: &Partition) -> Option<Witness> {
    for x in alg.elements() {
        for y in rel.members(x) {
            for z in 0..alg.tuple_count() {
                if !rel.related(alg.apply_code(x, z), alg.apply_code(y, z)) {
                    return Some(Witness::new(vec![
                        ("x", V::Element(x)),
                        ("y", V::Element(y)),
                        ("zs", V::Tuple(alg.decode_tuple(z))),
                    ]));
                }
            }
        }
    }
    None
}

fn v_regular_violation(alg: &MengerAlgebra, rel: &Partition) -> Option<Witness> {
    for z in alg.elements() {
        for xcode in 0..alg.tuple_count() {
            let xs = alg.decode_tuple(xcode);
            let lhs = alg.apply_code(z, xcode);
            let found = find_related_tuple(rel, &xs, |ys| {
                (!rel.related(lhs, alg.apply_tuple(z, ys))).then(|| ys.to_vec())
            });
            if let Some(ys) = found {
                return Some(Witness::new(vec![
                    ("z", V::Element(z)),
                    ("xs", V::Tuple(xs)),
                    ("ys", V::Tuple(ys)),
                ]));
            }
        }
    }
    None
}

fn i_regular_violation(alg: &MengerAlgebra, rel: &Partition, slot: usize) -> Option<Witness> {
    for x in alg.elements() {
        for y in rel.members(x) {
            for u in alg.elements() {
                for w in 0..alg.tuple_count() {
                    let a = alg.apply_code(u, substitute(alg, w, slot, x));
                    let b = alg.apply_code(u, substitute(alg, w, slot, y));
                    if !rel.related(a, b) {
                        return Some(Witness::new(vec![
                            ("x", V::Element(x)),
                            ("y", V::Element(y)),
                            ("u", V::Element(u)),
                            ("w", V::Tuple(alg.decode_tuple(w))),
                            ("i", V::Slot(slot)),
                        ]));
                    }
                }
            }
        }
    }
    None
}

fn l_cancellative_violation(alg: &MengerAlgebra, rel: &Partition) -> Option<Witness> {
    for x in alg.elements() {
        for y in alg.elements() {
            if rel.related(x, y) {
                continue;
            }
            for z in 0..alg.tuple_count() {
                if rel.related(alg.apply_code(x, z), alg.apply_code(y, z)) {
                    return Some(Witness::new(vec![
                        ("x", V::Element(x)),
                        ("y", V::Element(y)),
                        ("zs", V::Tuple(alg.decode_tuple(z))),
                    ]));
                }
            }
        }
    }
    None
}

/// Slot form of v-cancellation restricted to premises outside `residue`.
fn slot_cancellation_violation(
    alg: &MengerAlgebra,
    rel: &Partition,
    residue: Option<&Subset>,
) -> Option<Witness> {
    for x in alg.elements() {
        for y in alg.elements() {
            if rel.related(x, y) {
                continue;
            }
            for u in alg.elements() {
                for w in 0..alg.tuple_count() {
                    for slot in 0..alg.rank() {
                        let a = alg.apply_code(u, substitute(alg, w, slot, x));
                        let b = alg.apply_code(u, substitute(alg, w, slot, y));
                        let outside = residue.is_none_or(|r| !r.contains(a));
                        if outside && rel.related(a, b) {
                            return Some(Witness::new(vec![
                                ("x", V::Element(x)),
                                ("y", V::Element(y)),
                                ("u", V::Element(u)),
                                ("w", V::Tuple(alg.decode_tuple(w))),
                                ("i", V::Slot(slot)),
                            ]));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Translation form `(t(x), t(y)) ∈ ρ ∧ t(x) ∉ residue → (x, y) ∈ ρ`.
fn translation_cancellation_violation(
    closure: &TranslationClosure,
    rel: &Partition,
    residue: Option<&Subset>,
) -> Option<Witness> {
    let m = rel.size();
    for x in 0..m {
        for y in 0..m {
            if rel.related(x, y) {
                continue;
            }
            for t in 0..closure.len() {
                let a = closure.eval(t, x);
                let outside = residue.is_none_or(|r| !r.contains(a));
                if outside && rel.related(a, closure.eval(t, y)) {
                    return Some(Witness::new(vec![
                        ("x", V::Element(x)),
                        ("y", V::Element(y)),
                        ("t", V::Translation(t)),
                    ]));
                }
            }
        }
    }
    None
}

fn check_rel_size(alg: &MengerAlgebra, size: usize) -> Result<()> {
    if size == alg.size() {
        Ok(())
    } else {
        Err(Error::SizeMismatch(size, alg.size()))
    }
}

/// Decides a relation property from its defining quantifier form.
pub fn check_relation_property(
    alg: &MengerAlgebra,
    rel: &Partition,
    prop: RelationProperty,
) -> Result<Verdict> {
    use RelationProperty::*;
    check_rel_size(alg, rel.size())?;
    let found = match prop {
        Stable | Congruence => stable_violation(alg, rel),
        LRegular | LCongruence => l_regular_violation(alg, rel),
        VRegular | VCongruence => v_regular_violation(alg, rel),
        IRegular(slot) => {
            check_slot(alg, slot)?;
            i_regular_violation(alg, rel, slot)
        }
        LCancellative => l_cancellative_violation(alg, rel),
        VCancellative => slot_cancellation_violation(alg, rel, None),
        LvCancellative => l_cancellative_violation(alg, rel)
            .or_else(|| slot_cancellation_violation(alg, rel, None)),
    };
    Ok(Verdict::from_search(found))
}

/// v-cancellation in the translation form `(t(x), t(y)) ∈ ρ → (x, y) ∈ ρ`,
/// quantified over the whole translation closure.
pub fn check_v_cancellative_translations(closure: &TranslationClosure, rel: &Partition) -> Verdict {
    Verdict::from_search(translation_cancellation_violation(closure, rel, None))
}

/// Slot-form partial v-cancellation: premises whose left side lies in
/// `residue` are exempt. `residue` must be a block of `rel` or empty.
pub fn check_partially_v_cancellative(
    alg: &MengerAlgebra,
    rel: &Partition,
    residue: &Subset,
) -> Result<Verdict> {
    check_rel_size(alg, rel.size())?;
    if !residue.is_empty() && !rel.is_block(residue) {
        return Err(Error::NotABlock);
    }
    Ok(Verdict::from_search(slot_cancellation_violation(
        alg,
        rel,
        Some(residue),
    )))
}

/// Translation-form partial v-cancellation over the closure.
pub fn check_partially_v_cancellative_translations(
    closure: &TranslationClosure,
    rel: &Partition,
    residue: &Subset,
) -> Verdict {
    Verdict::from_search(translation_cancellation_violation(
        closure,
        rel,
        Some(residue),
    ))
}

fn members(h: &Subset) -> Vec<Element> {
    h.iter().collect()
}

fn normal_v_violation(closure: &TranslationClosure, h: &Subset) -> Option<Witness> {
    let hs = members(h);
    for &g1 in &hs {
        for &g2 in &hs {
            for t in 0..closure.len() {
                if h.contains(closure.eval(t, g1)) && !h.contains(closure.eval(t, g2)) {
                    return Some(Witness::new(vec![
                        ("g1", V::Element(g1)),
                        ("g2", V::Element(g2)),
                        ("t", V::Translation(t)),
                    ]));
                }
            }
        }
    }
    None
}

fn normal_l_violation(alg: &MengerAlgebra, h: &Subset) -> Option<Witness> {
    let hs = members(h);
    for &g1 in &hs {
        for &g2 in &hs {
            for x in 0..alg.arg_count() {
                if h.contains(alg.apply_index(g1, x)) && !h.contains(alg.apply_index(g2, x)) {
                    return Some(Witness::new(vec![
                        ("g1", V::Element(g1)),
                        ("g2", V::Element(g2)),
                        ("x", V::Arg(alg.arg_vector(x))),
                    ]));
                }
            }
        }
    }
    None
}

fn normal_bi_violation(
    alg: &MengerAlgebra,
    closure: &TranslationClosure,
    h: &Subset,
) -> Option<Witness> {
    let hs = members(h);
    for &g1 in &hs {
        for &g2 in &hs {
            for x in 0..alg.arg_count() {
                let (a, b) = (alg.apply_index(g1, x), alg.apply_index(g2, x));
                for t in 0..closure.len() {
                    if h.contains(closure.eval(t, a)) && !h.contains(closure.eval(t, b)) {
                        return Some(Witness::new(vec![
                            ("g1", V::Element(g1)),
                            ("g2", V::Element(g2)),
                            ("x", V::Arg(alg.arg_vector(x))),
                            ("t", V::Translation(t)),
                        ]));
                    }
                }
            }
        }
    }
    None
}

fn l_ideal_violation(alg: &MengerAlgebra, h: &Subset) -> Option<Witness> {
    for x in alg.elements() {
        for code in 0..alg.tuple_count() {
            let hs = alg.decode_tuple(code);
            if hs.iter().any(|&c| h.contains(c)) && !h.contains(alg.apply_code(x, code)) {
                return Some(Witness::new(vec![
                    ("x", V::Element(x)),
                    ("hs", V::Tuple(hs)),
                ]));
            }
        }
    }
    None
}

fn i_ideal_violation(alg: &MengerAlgebra, h: &Subset, slot: usize) -> Option<Witness> {
    for e in h.iter() {
        for u in alg.elements() {
            for w in 0..alg.tuple_count() {
                if !h.contains(alg.apply_code(u, substitute(alg, w, slot, e))) {
                    return Some(Witness::new(vec![
                        ("h", V::Element(e)),
                        ("u", V::Element(u)),
                        ("w", V::Tuple(alg.decode_tuple(w))),
                        ("i", V::Slot(slot)),
                    ]));
                }
            }
        }
    }
    None
}

fn s_ideal_violation(alg: &MengerAlgebra, h: &Subset) -> Option<Witness> {
    for e in h.iter() {
        for code in 0..alg.tuple_count() {
            if !h.contains(alg.apply_code(e, code)) {
                return Some(Witness::new(vec![
                    ("h", V::Element(e)),
                    ("xs", V::Tuple(alg.decode_tuple(code))),
                ]));
            }
        }
    }
    None
}

fn l_consistent_violation(closure: &TranslationClosure, x: &Subset) -> Option<Witness> {
    for g in 0..x.universe() {
        if x.contains(g) {
            continue;
        }
        for t in 0..closure.len() {
            if x.contains(closure.eval(t, g)) {
                return Some(Witness::new(vec![
                    ("g", V::Element(g)),
                    ("t", V::Translation(t)),
                ]));
            }
        }
    }
    None
}

/// Decides a subset property. An empty subset satisfies every property
/// vacuously and the verdict is flagged as such.
pub fn check_subset_property(
    alg: &MengerAlgebra,
    closure: &TranslationClosure,
    h: &Subset,
    prop: SubsetProperty,
) -> Result<Verdict> {
    use SubsetProperty::*;
    check_rel_size(alg, h.universe())?;
    let found = match prop {
        NormalVComplex => normal_v_violation(closure, h),
        NormalLComplex => normal_l_violation(alg, h),
        NormalBicomplex => normal_bi_violation(alg, closure, h),
        LIdeal => l_ideal_violation(alg, h),
        IIdeal(slot) => {
            check_slot(alg, slot)?;
            i_ideal_violation(alg, h, slot)
        }
        SIdeal => s_ideal_violation(alg, h),
        SlIdeal => s_ideal_violation(alg, h).or_else(|| l_ideal_violation(alg, h)),
        LConsistent => l_consistent_violation(closure, h),
    };
    let mut verdict = Verdict::from_search(found);
    verdict.vacuous = h.is_empty();
    Ok(verdict)
}
