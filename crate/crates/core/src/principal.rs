//! Principal congruences induced by a subset `H`.
//!
//! Each kind assigns every element a signature: the set of coordinates under
//! which it lands in `H`.
//!
//! | kind   | coordinates            | membership of `g` at `c`  |
//! |--------|------------------------|---------------------------|
//! | `V`    | translations `t`       | `t(g) ∈ H`                |
//! | `L`    | vectors `x̄ ∈ B`        | `g[x̄] ∈ H`                |
//! | `Full` | pairs `(x̄, t)`         | `t(g[x̄]) ∈ H`             |
//!
//! Full coordinates are numbered `x̄ · |T| + t`, so they run through `B`
//! first and the closure second.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::algebra::{ArgVector, Element, MengerAlgebra};
use crate::error::{Error, Result};
use crate::relations::{PartialPartition, Partition, Verdict, Witness, WitnessValue};
use crate::subset::Subset;
use crate::term::TranslationClosure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CongruenceKind {
    V,
    L,
    Full,
}

impl CongruenceKind {
    pub const ALL: [CongruenceKind; 3] =
        [CongruenceKind::V, CongruenceKind::L, CongruenceKind::Full];

    /// Name of the matching strongness notion.
    pub fn strong_name(self) -> &'static str {
        match self {
            CongruenceKind::V => "strong",
            CongruenceKind::L => "l-strong",
            CongruenceKind::Full => "bistrong",
        }
    }
}

impl FromStr for CongruenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "v" => Ok(CongruenceKind::V),
            "l" => Ok(CongruenceKind::L),
            "full" => Ok(CongruenceKind::Full),
            _ => Err(Error::UnknownProperty(s.to_string())),
        }
    }
}

impl fmt::Display for CongruenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CongruenceKind::V => "v",
            CongruenceKind::L => "l",
            CongruenceKind::Full => "full",
        })
    }
}

/// Which characterisation of strongness to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrongMethod {
    /// Intersecting signatures must be equal.
    Signatures,
    /// The four-membership implication over elements and coordinates.
    Implication,
    /// Intersecting fibers must be equal.
    Fibers,
}

impl StrongMethod {
    pub const ALL: [StrongMethod; 3] = [
        StrongMethod::Signatures,
        StrongMethod::Implication,
        StrongMethod::Fibers,
    ];
}

/// The coordinate that defines a family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyTag {
    Translation(usize),
    Argument(ArgVector),
    Pair(ArgVector, usize),
    Residue,
}

impl FamilyTag {
    pub fn describe(&self, alg: &MengerAlgebra, closure: Option<&TranslationClosure>) -> String {
        let term = |t: usize| match closure {
            Some(c) => crate::term::format_term(alg, c.witness(t)),
            None => format!("#{t}"),
        };
        match self {
            FamilyTag::Translation(t) => format!("t={}", term(*t)),
            FamilyTag::Argument(x) => format!("x={}", alg.format_arg(x)),
            FamilyTag::Pair(x, t) => format!("x={} t={}", alg.format_arg(x), term(*t)),
            FamilyTag::Residue => "residue".to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub members: Subset,
    pub tag: FamilyTag,
}

/// Membership oracle for one kind and one subset.
struct Space<'a> {
    alg: &'a MengerAlgebra,
    closure: Option<&'a TranslationClosure>,
    h: &'a Subset,
    kind: CongruenceKind,
    translations: usize,
}

/// Field names used for the first and second coordinate in witnesses.
const V_NAMES: [&str; 2] = ["t1", "t2"];
const L_NAMES: [&str; 2] = ["x", "y"];
const FULL_NAMES: [(&str, &str); 2] = [("x", "t1"), ("y", "t2")];

impl<'a> Space<'a> {
    fn new(
        alg: &'a MengerAlgebra,
        closure: Option<&'a TranslationClosure>,
        h: &'a Subset,
        kind: CongruenceKind,
    ) -> Result<Self> {
        if h.universe() != alg.size() {
            return Err(Error::SizeMismatch(h.universe(), alg.size()));
        }
        let translations = match kind {
            CongruenceKind::L => 1,
            _ => closure.expect("translation closure required").len(),
        };
        Ok(Space {
            alg,
            closure,
            h,
            kind,
            translations,
        })
    }

    fn width(&self) -> usize {
        match self.kind {
            CongruenceKind::V => self.translations,
            CongruenceKind::L => self.alg.arg_count(),
            CongruenceKind::Full => self.alg.arg_count() * self.translations,
        }
    }

    fn closure(&self) -> &TranslationClosure {
        self.closure.expect("translation closure required")
    }

    #[inline]
    fn member(&self, g: Element, c: usize) -> bool {
        let value = match self.kind {
            CongruenceKind::V => self.closure().eval(c, g),
            CongruenceKind::L => self.alg.apply_index(g, c),
            CongruenceKind::Full => {
                let (x, t) = (c / self.translations, c % self.translations);
                self.closure().eval(t, self.alg.apply_index(g, x))
            }
        };
        self.h.contains(value)
    }

    fn tag(&self, c: usize) -> FamilyTag {
        match self.kind {
            CongruenceKind::V => FamilyTag::Translation(c),
            CongruenceKind::L => FamilyTag::Argument(self.alg.arg_vector(c)),
            CongruenceKind::Full => FamilyTag::Pair(
                self.alg.arg_vector(c / self.translations),
                c % self.translations,
            ),
        }
    }

    fn coord_fields(&self, c: usize, which: usize) -> Vec<(&'static str, WitnessValue)> {
        match self.kind {
            CongruenceKind::V => vec![(V_NAMES[which], WitnessValue::Translation(c))],
            CongruenceKind::L => vec![(L_NAMES[which], WitnessValue::Arg(self.alg.arg_vector(c)))],
            CongruenceKind::Full => {
                let (xn, tn) = FULL_NAMES[which];
                vec![
                    (
                        xn,
                        WitnessValue::Arg(self.alg.arg_vector(c / self.translations)),
                    ),
                    (tn, WitnessValue::Translation(c % self.translations)),
                ]
            }
        }
    }

    fn element_names(&self) -> [&'static str; 2] {
        match self.kind {
            CongruenceKind::V => ["x", "y"],
            _ => ["g1", "g2"],
        }
    }

    fn signature(&self, g: Element) -> FixedBitSet {
        let mut row = FixedBitSet::with_capacity(self.width());
        for c in 0..self.width() {
            if self.member(g, c) {
                row.insert(c);
            }
        }
        row
    }

    fn fiber(&self, c: usize) -> Subset {
        Subset::from_predicate(self.alg.size(), |g| self.member(g, c))
    }
}

/// Signatures of every element for one kind and one subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signatures {
    kind: CongruenceKind,
    width: usize,
    translations: usize,
    rows: Vec<FixedBitSet>,
}

impl Signatures {
    fn build(space: &Space<'_>) -> Self {
        Signatures {
            kind: space.kind,
            width: space.width(),
            translations: space.translations,
            rows: space.alg.elements().map(|g| space.signature(g)).collect(),
        }
    }

    pub fn v(alg: &MengerAlgebra, closure: &TranslationClosure, h: &Subset) -> Result<Self> {
        Ok(Signatures::build(&Space::new(
            alg,
            Some(closure),
            h,
            CongruenceKind::V,
        )?))
    }

    pub fn l(alg: &MengerAlgebra, h: &Subset) -> Result<Self> {
        Ok(Signatures::build(&Space::new(
            alg,
            None,
            h,
            CongruenceKind::L,
        )?))
    }

    pub fn full(alg: &MengerAlgebra, closure: &TranslationClosure, h: &Subset) -> Result<Self> {
        Ok(Signatures::build(&Space::new(
            alg,
            Some(closure),
            h,
            CongruenceKind::Full,
        )?))
    }

    pub fn kind(&self) -> CongruenceKind {
        self.kind
    }

    /// Number of coordinates.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn row(&self, g: Element) -> &FixedBitSet {
        &self.rows[g]
    }

    pub fn contains(&self, g: Element, c: usize) -> bool {
        self.rows[g].contains(c)
    }

    /// Splits a full coordinate into its vector index and translation index.
    pub fn split(&self, c: usize) -> (usize, usize) {
        (c / self.translations, c % self.translations)
    }

    /// Elements whose signature contains `c`.
    pub fn fiber(&self, c: usize) -> Subset {
        Subset::from_predicate(self.rows.len(), |g| self.rows[g].contains(c))
    }
}

/// A principal congruence together with its residue and class family.
#[derive(Clone, Debug)]
pub struct PrincipalAnalysis {
    pub kind: CongruenceKind,
    pub subset: Subset,
    pub signatures: Signatures,
    pub partition: Partition,
    /// Elements with empty signature.
    pub residue: Subset,
    /// The partition restricted to elements outside the residue (kind `V` only).
    pub partial: Option<PartialPartition>,
    /// Distinct nonempty fibers with their first defining coordinate, then
    /// the residue when nonempty.
    pub family: Vec<FamilyMember>,
}

impl PrincipalAnalysis {
    /// True when `H` is empty and the analysis degenerates to the universal
    /// relation with the whole carrier as residue.
    pub fn subset_empty(&self) -> bool {
        self.subset.is_empty()
    }

    pub fn family_sets(&self) -> Vec<Subset> {
        self.family.iter().map(|f| f.members.clone()).collect()
    }
}

fn analyse(space: &Space<'_>) -> PrincipalAnalysis {
    let signatures = Signatures::build(space);
    let m = space.alg.size();
    let partition = Partition::from_labels(&signatures.rows);
    let residue = Subset::from_predicate(m, |g| signatures.rows[g].is_clear());
    let partial = (space.kind == CongruenceKind::V)
        .then(|| PartialPartition::restrict(&partition, &residue.complement()));

    let mut seen: HashMap<Subset, ()> = HashMap::new();
    let mut family = Vec::new();
    for c in 0..signatures.width {
        let fiber = signatures.fiber(c);
        if fiber.is_empty() || seen.insert(fiber.clone(), ()).is_some() {
            continue;
        }
        family.push(FamilyMember {
            members: fiber,
            tag: space.tag(c),
        });
    }
    if !residue.is_empty() {
        family.push(FamilyMember {
            members: residue.clone(),
            tag: FamilyTag::Residue,
        });
    }
    PrincipalAnalysis {
        kind: space.kind,
        subset: space.h.clone(),
        signatures,
        partition,
        residue,
        partial,
        family,
    }
}

/// Principal v-congruence: elements with the same translations into `H`.
pub fn v_analysis(
    alg: &MengerAlgebra,
    closure: &TranslationClosure,
    h: &Subset,
) -> Result<PrincipalAnalysis> {
    Ok(analyse(&Space::new(
        alg,
        Some(closure),
        h,
        CongruenceKind::V,
    )?))
}

/// Principal l-congruence: elements with the same right arguments into `H`.
pub fn l_analysis(alg: &MengerAlgebra, h: &Subset) -> Result<PrincipalAnalysis> {
    Ok(analyse(&Space::new(alg, None, h, CongruenceKind::L)?))
}

/// Principal congruence: elements with the same (vector, translation) pairs
/// into `H`.
pub fn full_analysis(
    alg: &MengerAlgebra,
    closure: &TranslationClosure,
    h: &Subset,
) -> Result<PrincipalAnalysis> {
    Ok(analyse(&Space::new(
        alg,
        Some(closure),
        h,
        CongruenceKind::Full,
    )?))
}

pub fn analysis(
    alg: &MengerAlgebra,
    closure: &TranslationClosure,
    h: &Subset,
    kind: CongruenceKind,
) -> Result<PrincipalAnalysis> {
    Ok(analyse(&Space::new(alg, Some(closure), h, kind)?))
}

fn first_common(a: &FixedBitSet, b: &FixedBitSet) -> Option<usize> {
    a.intersection(b).next()
}

fn first_difference(a: &FixedBitSet, b: &FixedBitSet) -> Option<usize> {
    a.symmetric_difference(b).min()
}

/// Intersecting signatures must coincide.
fn by_signatures(space: &Space<'_>) -> Option<Witness> {
    let sig = Signatures::build(space);
    let m = space.alg.size();
    for a in 0..m {
        for b in 0..m {
            let (ra, rb) = (&sig.rows[a], &sig.rows[b]);
            let Some(shared) = first_common(ra, rb) else {
                continue;
            };
            if let Some(split) = first_difference(ra, rb) {
                let mut fields = vec![
                    ("a", WitnessValue::Element(a)),
                    ("b", WitnessValue::Element(b)),
                ];
                fields.extend(space.coord_fields(shared, 0));
                fields.extend(space.coord_fields(split, 1));
                return Some(Witness::new(fields));
            }
        }
    }
    None
}

/// `c1` holds at both elements and `c2` at the second must force `c2` at the
/// first. Premise and conclusion share no variables beyond the elements, so
/// the first violation pairs the first shared `c1` with the first failing `c2`.
fn by_implication(space: &Space<'_>) -> Option<Witness> {
    let m = space.alg.size();
    let width = space.width();
    for g1 in 0..m {
        for g2 in 0..m {
            let Some(c1) = (0..width).find(|&c| space.member(g1, c) && space.member(g2, c)) else {
                continue;
            };
            if let Some(c2) = (0..width).find(|&c| space.member(g2, c) && !space.member(g1, c)) {
                let [n1, n2] = space.element_names();
                let mut fields = vec![
                    (n1, WitnessValue::Element(g1)),
                    (n2, WitnessValue::Element(g2)),
                ];
                fields.extend(space.coord_fields(c1, 0));
                fields.extend(space.coord_fields(c2, 1));
                return Some(Witness::new(fields));
            }
        }
    }
    None
}

/// Intersecting fibers must coincide.
fn by_fibers(space: &Space<'_>) -> Option<Witness> {
    let mut distinct: Vec<(usize, Subset)> = Vec::new();
    let mut seen: HashMap<Subset, ()> = HashMap::new();
    for c in 0..space.width() {
        let f = space.fiber(c);
        if seen.insert(f.clone(), ()).is_none() {
            distinct.push((c, f));
        }
    }
    for (c1, f1) in &distinct {
        for (c2, f2) in &distinct {
            let Some(common) = f1.intersection(f2).first() else {
                continue;
            };
            if f1 != f2 {
                let only = f1.union(f2).intersection(&f1.intersection(f2).complement());
                let mut fields = space.coord_fields(*c1, 0);
                fields.extend(space.coord_fields(*c2, 1));
                fields.push(("common", WitnessValue::Element(common)));
                fields.push((
                    "only",
                    WitnessValue::Element(only.first().expect("fibers differ")),
                ));
                return Some(Witness::new(fields));
            }
        }
    }
    None
}

fn strongness(space: &Space<'_>, method: StrongMethod) -> Verdict {
    let found = match method {
        StrongMethod::Signatures => by_signatures(space),
        StrongMethod::Implication => by_implication(space),
        StrongMethod::Fibers => by_fibers(space),
    };
    let mut verdict = match found {
        Some(w) => Verdict::fail(w),
        None => Verdict::pass(),
    };
    verdict.vacuous = space.h.is_empty();
    verdict
}

pub fn is_strong(
    alg: &MengerAlgebra,
    closure: &TranslationClosure,
    h: &Subset,
    method: StrongMethod,
) -> Result<Verdict> {
    Ok(strongness(
        &Space::new(alg, Some(closure), h, CongruenceKind::V)?,
        method,
    ))
}

pub fn is_l_strong(alg: &MengerAlgebra, h: &Subset, method: StrongMethod) -> Result<Verdict> {
    Ok(strongness(
        &Space::new(alg, None, h, CongruenceKind::L)?,
        method,
    ))
}

pub fn is_bistrong(
    alg: &MengerAlgebra,
    closure: &TranslationClosure,
    h: &Subset,
    method: StrongMethod,
) -> Result<Verdict> {
    Ok(strongness(
        &Space::new(alg, Some(closure), h, CongruenceKind::Full)?,
        method,
    ))
}

/// Strongness of the notion matching `kind`.
pub fn is_kind_strong(
    alg: &MengerAlgebra,
    closure: &TranslationClosure,
    h: &Subset,
    kind: CongruenceKind,
    method: StrongMethod,
) -> Result<Verdict> {
    Ok(strongness(
        &Space::new(alg, Some(closure), h, kind)?,
        method,
    ))
}

/// Outcome of the four clauses for one class `X` of the principal congruence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCheck {
    pub class: Subset,
    pub strong: bool,
    pub residue_included: bool,
    pub relation_included: bool,
    pub agrees_off_residue: bool,
}

impl ClassCheck {
    pub fn passed(&self) -> bool {
        self.strong && self.residue_included && self.relation_included && self.agrees_off_residue
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTheoremReport {
    pub kind: CongruenceKind,
    /// Set when `H` is empty or not strong for `kind`; no classes are checked.
    pub precondition_violation: Option<String>,
    pub classes: Vec<ClassCheck>,
}

impl ClassTheoremReport {
    pub fn passed(&self) -> bool {
        self.precondition_violation.is_none() && self.classes.iter().all(ClassCheck::passed)
    }
}

/// For strong `H`, checks every class `X` other than the residue: `X` is
/// strong, the residue of `H` lies in that of `X`, the relation of `H` is
/// contained in that of `X`, and both relations agree outside the residue
/// of `X`.
pub fn check_strong_class_theorems(
    alg: &MengerAlgebra,
    closure: &TranslationClosure,
    h: &Subset,
    kind: CongruenceKind,
) -> Result<ClassTheoremReport> {
    let mut report = ClassTheoremReport {
        kind,
        precondition_violation: None,
        classes: Vec::new(),
    };
    if h.is_empty() {
        report.precondition_violation = Some("subset is empty".to_string());
        return Ok(report);
    }
    if !is_kind_strong(alg, closure, h, kind, StrongMethod::Signatures)?.holds() {
        report.precondition_violation = Some(format!("subset is not {}", kind.strong_name()));
        return Ok(report);
    }
    let base = analysis(alg, closure, h, kind)?;
    for class in base.partition.blocks() {
        if class == base.residue {
            continue;
        }
        let other = analysis(alg, closure, &class, kind)?;
        report.classes.push(ClassCheck {
            strong: is_kind_strong(alg, closure, &class, kind, StrongMethod::Signatures)?.holds(),
            residue_included: base.residue.is_subset(&other.residue),
            relation_included: base.partition.is_finer_than(&other.partition),
            agrees_off_residue: base
                .partition
                .agrees_on(&other.partition, &other.residue.complement()),
            class,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Validation;
    use crate::term::translation_closure;

    fn lz2() -> MengerAlgebra {
        MengerAlgebra::from_fn(1, &["a", "b"], |g, _| g, Validation::Check).unwrap()
    }

    fn rz2() -> MengerAlgebra {
        MengerAlgebra::from_fn(1, &["a", "b"], |_, xs| xs[0], Validation::Check).unwrap()
    }

    fn set(m: usize, xs: &[usize]) -> Subset {
        Subset::from_elements(m, xs.iter().copied()).unwrap()
    }

    #[test]
    fn right_zero_analyses() {
        let alg = rz2();
        let cl = translation_closure(&alg, 100).unwrap();
        let a = set(2, &[0]);
        let v = v_analysis(&alg, &cl, &a).unwrap();
        assert_eq!(v.partition, Partition::identity(2));
        assert_eq!(v.residue, set(2, &[1]));
        assert_eq!(v.partial.as_ref().unwrap().blocks(), vec![set(2, &[0])]);
        let l = l_analysis(&alg, &a).unwrap();
        assert_eq!(l.partition, Partition::identity(2));
        assert!(l.residue.is_empty());
        // ē ∈ η⟨a⟩ only; (a) ∈ both.
        assert!(l.signatures.contains(0, 0) && !l.signatures.contains(1, 0));
        assert!(l.signatures.contains(0, 1) && l.signatures.contains(1, 1));
        let full = full_analysis(&alg, &cl, &a).unwrap();
        assert_eq!(full.partition, Partition::identity(2));
        assert!(full.residue.is_empty());
        assert_eq!(full.signatures.width(), 3);
    }

    #[test]
    fn left_zero_analyses() {
        let alg = lz2();
        let cl = translation_closure(&alg, 100).unwrap();
        let a = set(2, &[0]);
        let v = v_analysis(&alg, &cl, &a).unwrap();
        assert_eq!(v.partition, Partition::identity(2));
        assert!(v.residue.is_empty());
        let l = l_analysis(&alg, &a).unwrap();
        assert_eq!(l.partition, Partition::identity(2));
        assert_eq!(l.residue, set(2, &[1]));
        let full = full_analysis(&alg, &cl, &a).unwrap();
        assert_eq!(full.partition, Partition::identity(2));
        assert!(full.residue.is_empty());
    }

    #[test]
    fn whole_and_empty_subsets() {
        for alg in [lz2(), rz2()] {
            let cl = translation_closure(&alg, 100).unwrap();
            for kind in CongruenceKind::ALL {
                let g = analysis(&alg, &cl, &Subset::full(2), kind).unwrap();
                assert_eq!(g.partition, Partition::universal(2));
                assert!(g.residue.is_empty());
                let e = analysis(&alg, &cl, &Subset::empty(2), kind).unwrap();
                assert!(e.subset_empty());
                assert_eq!(e.partition, Partition::universal(2));
                assert!(e.residue.is_full());
                assert_eq!(e.family.len(), 1);
                for method in StrongMethod::ALL {
                    let v = is_kind_strong(&alg, &cl, &Subset::empty(2), kind, method).unwrap();
                    assert!(v.holds() && v.vacuous);
                    assert!(is_kind_strong(&alg, &cl, &Subset::full(2), kind, method)
                        .unwrap()
                        .holds());
                }
            }
        }
    }

    #[test]
    fn strongness_examples() {
        let rz = rz2();
        let cr = translation_closure(&rz, 100).unwrap();
        let lz = lz2();
        let cl = translation_closure(&lz, 100).unwrap();
        let a = set(2, &[0]);
        for method in StrongMethod::ALL {
            assert!(is_strong(&rz, &cr, &a, method).unwrap().holds());
            assert!(!is_l_strong(&rz, &a, method).unwrap().holds());
            assert!(!is_bistrong(&rz, &cr, &a, method).unwrap().holds());
            assert!(!is_strong(&lz, &cl, &a, method).unwrap().holds());
        }
        let w = is_strong(&lz, &cl, &a, StrongMethod::Signatures)
            .unwrap()
            .witness
            .unwrap();
        // const_a is shared, the identity separates.
        assert_eq!(w.get("t1"), Some(&WitnessValue::Translation(1)));
        assert_eq!(w.get("t2"), Some(&WitnessValue::Translation(0)));
        let w = is_l_strong(&rz, &a, StrongMethod::Signatures)
            .unwrap()
            .witness
            .unwrap();
        assert_eq!(
            w.get("x"),
            Some(&WitnessValue::Arg(ArgVector::Concrete(vec![0])))
        );
        assert_eq!(w.get("y"), Some(&WitnessValue::Arg(ArgVector::Selector)));
    }

    #[test]
    fn family_tags_are_first_coordinates() {
        let alg = lz2();
        let cl = translation_closure(&alg, 100).unwrap();
        let v = v_analysis(&alg, &cl, &set(2, &[0])).unwrap();
        let tags: Vec<_> = v.family.iter().map(|f| f.tag.clone()).collect();
        assert_eq!(
            tags,
            vec![FamilyTag::Translation(0), FamilyTag::Translation(1)]
        );
        assert_eq!(v.family[1].members, Subset::full(2));
    }

    #[test]
    fn class_theorems_on_right_zero() {
        let alg = rz2();
        let cl = translation_closure(&alg, 100).unwrap();
        let r = check_strong_class_theorems(&alg, &cl, &set(2, &[0]), CongruenceKind::V).unwrap();
        assert!(r.passed());
        assert_eq!(r.classes.len(), 1);
        assert_eq!(r.classes[0].class, set(2, &[0]));
        let r = check_strong_class_theorems(&alg, &cl, &set(2, &[0]), CongruenceKind::L).unwrap();
        assert_eq!(
            r.precondition_violation.as_deref(),
            Some("subset is not l-strong")
        );
        let r =
            check_strong_class_theorems(&alg, &cl, &Subset::full(2), CongruenceKind::Full).unwrap();
        assert!(r.passed());
        assert_eq!(r.classes.len(), 1);
    }
}
