//! Executable statements about principal congruences, checked exhaustively
//! over every subset and every enumerated congruence of one algebra.
//!
//! Items with ids `P2.*`, `P3.*` and `P4.*` concern the v-, l- and full
//! congruence respectively; `I*` items are supporting identities
//! (definitional oracles, equivalent forms of properties).

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::algebra::MengerAlgebra;
use crate::enumeration::{
    all_subsets, enumerate_congruences_with_cap, enumerate_partitions, DEFAULT_PARTITION_CAP,
    DEFAULT_SUBSET_CAP,
};
use crate::error::Result;
use crate::principal::{
    analysis, check_strong_class_theorems, is_kind_strong, CongruenceKind, PrincipalAnalysis,
    StrongMethod,
};
use crate::relations::{
    check_partially_v_cancellative, check_partially_v_cancellative_translations,
    check_relation_property, check_subset_property, check_v_cancellative_translations,
    meet_partitions, Partition, RelationProperty, SubsetProperty,
};
use crate::subset::Subset;
use crate::term::{associate_polynomial, TranslationClosure};

use CongruenceKind::{Full, L, V};

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub subset_cap: u128,
    pub partition_cap: u128,
    /// Replaces every v-partition with the identity partition before the
    /// items run. Used to exercise failure reporting.
    pub inject_fault: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            subset_cap: DEFAULT_SUBSET_CAP,
            partition_cap: DEFAULT_PARTITION_CAP,
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteItem {
    pub id: &'static str,
    pub statement: &'static str,
    /// Number of instances where the premise applied and the claim was tested.
    pub cases: usize,
    /// First counterexample.
    pub failure: Option<String>,
}

impl SuiteItem {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub items: Vec<SuiteItem>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(SuiteItem::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteItem> {
        self.items.iter().filter(|i| !i.passed())
    }

    pub fn item(&self, id: &str) -> Option<&SuiteItem> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            let cases = match item.cases {
                0 => "vacuous".to_string(),
                1 => "1 case".to_string(),
                n => format!("{n} cases"),
            };
            match &item.failure {
                None => writeln!(out, "PASS {:<14} {} ({cases})", item.id, item.statement),
                Some(f) => writeln!(out, "FAIL {:<14} {}: {f}", item.id, item.statement),
            }
            .unwrap();
        }
        let failed = self.failures().count();
        writeln!(out, "{} passed, {failed} failed", self.items.len() - failed).unwrap();
        out
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(message());
        }
    }
}

struct Entry {
    analyses: [PrincipalAnalysis; 3],
    strong: [bool; 3],
}

struct Ctx<'a> {
    alg: &'a MengerAlgebra,
    closure: &'a TranslationClosure,
    subsets: Vec<Subset>,
    /// Indexed by subset mask.
    atlas: Vec<Entry>,
    partitions: Vec<Partition>,
    congruences: [Vec<Partition>; 3],
}

fn slot(kind: CongruenceKind) -> usize {
    match kind {
        V => 0,
        L => 1,
        Full => 2,
    }
}

impl Ctx<'_> {
    fn an(&self, h: &Subset, kind: CongruenceKind) -> &PrincipalAnalysis {
        &self.atlas[h.mask() as usize].analyses[slot(kind)]
    }

    fn strong(&self, h: &Subset, kind: CongruenceKind) -> bool {
        self.atlas[h.mask() as usize].strong[slot(kind)]
    }

    fn show(&self, h: &Subset) -> String {
        self.alg.format_subset(h)
    }

    fn show_partition(&self, p: &Partition) -> String {
        p.blocks()
            .iter()
            .map(|b| self.show(b))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn subset_prop(&self, h: &Subset, prop: SubsetProperty) -> Result<bool> {
        Ok(check_subset_property(self.alg, self.closure, h, prop)?.holds())
    }

    fn rel_prop(&self, p: &Partition, prop: RelationProperty) -> Result<bool> {
        Ok(check_relation_property(self.alg, p, prop)?.holds())
    }

    /// Pairwise definitional partition, independent of signature grouping.
    fn definitional(&self, h: &Subset, kind: CongruenceKind) -> (Partition, Subset) {
        let alg = self.alg;
        let cl = self.closure;
        let images = |g: usize| -> Vec<usize> {
            match kind {
                V => (0..cl.len()).map(|t| cl.eval(t, g)).collect(),
                L => (0..alg.arg_count())
                    .map(|x| alg.apply_index(g, x))
                    .collect(),
                Full => (0..alg.arg_count())
                    .flat_map(|x| (0..cl.len()).map(move |t| cl.eval(t, alg.apply_index(g, x))))
                    .collect(),
            }
        };
        let p = Partition::from_equivalence(alg.size(), |a, b| {
            images(a)
                .into_iter()
                .zip(images(b))
                .all(|(x, y)| h.contains(x) == h.contains(y))
        });
        let residue = Subset::from_predicate(alg.size(), |g| {
            images(g).into_iter().all(|x| !h.contains(x))
        });
        (p, residue)
    }
}

type Check = Box<dyn Fn(&Ctx<'_>) -> Result<Tally> + Send + Sync>;

fn congruence_prop(kind: CongruenceKind) -> RelationProperty {
    match kind {
        V => RelationProperty::VCongruence,
        L => RelationProperty::LCongruence,
        Full => RelationProperty::Congruence,
    }
}

fn star_monoid(cx: &Ctx<'_>) -> Result<Tally> {
    let alg = cx.alg;
    let b = alg.arg_count();
    let mut tally = Tally::default();
    for x in 0..b {
        tally.check(
            alg.star_index(0, x) == x && alg.star_index(x, 0) == x,
            || {
                format!(
                    "ē is not an identity for {}",
                    alg.format_arg(&alg.arg_vector(x))
                )
            },
        );
        for y in 0..b {
            let xy = alg.star_index(x, y);
            for g in alg.elements() {
                let ok = alg.apply_index(g, xy) == alg.apply_index(alg.apply_index(g, x), y);
                tally.check(ok, || {
                    format!(
                        "g={} x={} y={}: g[x*y] ≠ g[x][y]",
                        alg.name(g),
                        alg.format_arg(&alg.arg_vector(x)),
                        alg.format_arg(&alg.arg_vector(y))
                    )
                });
            }
            for z in 0..b {
                let ok = alg.star_index(xy, z) == alg.star_index(x, alg.star_index(y, z));
                tally.check(ok, || {
                    format!(
                        "star not associative at x={} y={} z={}",
                        alg.format_arg(&alg.arg_vector(x)),
                        alg.format_arg(&alg.arg_vector(y)),
                        alg.format_arg(&alg.arg_vector(z))
                    )
                });
            }
        }
    }
    Ok(tally)
}

fn v_regular_iff_slots(cx: &Ctx<'_>) -> Result<Tally> {
    let mut tally = Tally::default();
    for p in &cx.partitions {
        let v = cx.rel_prop(p, RelationProperty::VRegular)?;
        let mut all = true;
        for i in 0..cx.alg.rank() {
            all &= cx.rel_prop(p, RelationProperty::IRegular(i))?;
        }
        tally.check(v == all, || {
            format!(
                "partition {}: v-regular={v}, every slot regular={all}",
                cx.show_partition(p)
            )
        });
    }
    Ok(tally)
}

fn stable_iff_regular(cx: &Ctx<'_>) -> Result<Tally> {
    let mut tally = Tally::default();
    for p in &cx.partitions {
        let s = cx.rel_prop(p, RelationProperty::Stable)?;
        let l = cx.rel_prop(p, RelationProperty::LRegular)?;
        let v = cx.rel_prop(p, RelationProperty::VRegular)?;
        tally.check(s == (l && v), || {
            format!(
                "partition {}: stable={s}, l-regular={l}, v-regular={v}",
                cx.show_partition(p)
            )
        });
    }
    Ok(tally)
}

fn v_cancellative_forms(cx: &Ctx<'_>) -> Result<Tally> {
    let mut tally = Tally::default();
    let empty = Subset::empty(cx.alg.size());
    for p in &cx.partitions {
        let slot_form = cx.rel_prop(p, RelationProperty::VCancellative)?;
        let translation_form = check_v_cancellative_translations(cx.closure, p).holds();
        let partial = check_partially_v_cancellative(cx.alg, p, &empty)?.holds();
        tally.check(
            slot_form == translation_form && slot_form == partial,
            || {
                format!(
                    "partition {}: slot form={slot_form}, translation form={translation_form}, \
                 partial with empty residue={partial}",
                    cx.show_partition(p)
                )
            },
        );
    }
    Ok(tally)
}

fn l_ideal_iff_slots(cx: &Ctx<'_>) -> Result<Tally> {
    let mut tally = Tally::default();
    for h in &cx.subsets {
        let l = cx.subset_prop(h, SubsetProperty::LIdeal)?;
        let mut all = true;
        for i in 0..cx.alg.rank() {
            all &= cx.subset_prop(h, SubsetProperty::IIdeal(i))?;
        }
        tally.check(l == all, || {
            format!("H={}: l-ideal={l}, every slot ideal={all}", cx.show(h))
        });
    }
    Ok(tally)
}

fn disjoint(kind: CongruenceKind) -> Check {
    Box::new(move |cx| {
        let mut tally = Tally::default();
        for h in &cx.subsets {
            let r = &cx.an(h, kind).residue;
            tally.check(h.is_disjoint(r), || {
                format!("H={} meets residue {}", cx.show(h), cx.show(r))
            });
        }
        Ok(tally)
    })
}

fn oracle(kind: CongruenceKind) -> Check {
    Box::new(move |cx| {
        let mut tally = Tally::default();
        for h in &cx.subsets {
            let a = cx.an(h, kind);
            let (p, r) = cx.definitional(h, kind);
            tally.check(a.partition == p && a.residue == r, || {
                format!(
                    "H={}: computed {} residue {}, definitional {} residue {}",
                    cx.show(h),
                    cx.show_partition(&a.partition),
                    cx.show(&a.residue),
                    cx.show_partition(&p),
                    cx.show(&r)
                )
            });
        }
        Ok(tally)
    })
}

fn associate_identity(cx: &Ctx<'_>) -> Result<Tally> {
    let alg = cx.alg;
    let mut tally = Tally::default();
    for (i, term) in cx.closure.witnesses().iter().enumerate() {
        for x in 0..alg.arg_count() {
            let a = alg.arg_vector(x);
            let assoc = associate_polynomial(alg, term, &a);
            for g in alg.elements() {
                let lhs = assoc.eval_at(alg, alg.apply_index(g, x));
                let rhs = alg.apply_index(cx.closure.eval(i, g), x);
                tally.check(lhs == rhs, || {
                    format!(
                        "t={} a={} g={}",
                        crate::term::format_term(alg, term),
                        alg.format_arg(&a),
                        alg.name(g)
                    )
                });
            }
        }
    }
    Ok(tally)
}

fn principal_is_congruence(kind: CongruenceKind, residue_prop: SubsetProperty) -> Check {
    Box::new(move |cx| {
        let mut tally = Tally::default();
        for h in &cx.subsets {
            let a = cx.an(h, kind);
            let ok = cx.rel_prop(&a.partition, congruence_prop(kind))?;
            tally.check(ok, || {
                format!(
                    "H={}: relation {} fails",
                    cx.show(h),
                    cx.show_partition(&a.partition)
                )
            });
            if !a.residue.is_empty() {
                let ok = cx.subset_prop(&a.residue, residue_prop)?;
                tally.check(ok, || {
                    format!(
                        "H={}: residue {} is not {residue_prop}",
                        cx.show(h),
                        cx.show(&a.residue)
                    )
                });
            }
        }
        Ok(tally)
    })
}

fn residue_ideal(kind: CongruenceKind, prop: SubsetProperty) -> Check {
    Box::new(move |cx| {
        let mut tally = Tally::default();
        for h in &cx.subsets {
            let r = &cx.an(h, kind).residue;
            if !r.is_empty() {
                let ok = cx.subset_prop(r, prop)?;
                tally.check(ok, || {
                    format!("H={}: residue {} is not {prop}", cx.show(h), cx.show(r))
                });
            }
        }
        Ok(tally)
    })
}

/// Nonempty `H` with the property is a class other than the residue.
fn class_not_residue(kind: CongruenceKind, premise: Option<SubsetProperty>) -> Check {
    Box::new(move |cx| {
        let mut tally = Tally::default();
        for h in cx.subsets.iter().filter(|h| !h.is_empty()) {
            let applies = match premise {
                Some(p) => cx.subset_prop(h, p)?,
                None => cx.strong(h, kind),
            };
            if applies {
                let a = cx.an(h, kind);
                tally.check(a.partition.is_block(h) && *h != a.residue, || {
                    format!(
                        "H={}: classes {} residue {}",
                        cx.show(h),
                        cx.show_partition(&a.partition),
                        cx.show(&a.residue)
                    )
                });
            }
        }
        Ok(tally)
    })
}

fn meet_of_classes(kind: CongruenceKind) -> Check {
    Box::new(move |cx| {
        let mut tally = Tally::default();
        for eps in &cx.congruences[slot(kind)] {
            let parts: Vec<Partition> = eps
                .blocks()
                .iter()
                .map(|b| cx.an(b, kind).partition.clone())
                .collect();
            let meet = meet_partitions(&parts)?;
            tally.check(&meet == eps, || {
                format!(
                    "congruence {}: meet is {}",
                    cx.show_partition(eps),
                    cx.show_partition(&meet)
                )
            });
        }
        Ok(tally)
    })
}

fn admissible_classes(cx: &Ctx<'_>) -> Result<Tally> {
    let mut tally = Tally::default();
    for eps in &cx.congruences[0] {
        for h in eps.blocks() {
            let a = cx.an(&h, V);
            let first = h.first().expect("blocks are nonempty");
            let inside = h.iter().all(|g| a.partition.related(first, g));
            tally.check(inside, || {
                format!("class {} is split by its principal relation", cx.show(&h))
            });
            if h.iter().any(|g| !a.residue.contains(g)) {
                let class = a.partition.block_containing(first);
                tally.check(class != a.residue, || {
                    format!(
                        "class {} lies in the residue {}",
                        cx.show(&h),
                        cx.show(&a.residue)
                    )
                });
            }
        }
    }
    Ok(tally)
}

fn methods_agree(kind: CongruenceKind) -> Check {
    Box::new(move |cx| {
        let mut tally = Tally::default();
        for h in &cx.subsets {
            let mut verdicts = [false; 3];
            for (i, method) in StrongMethod::ALL.into_iter().enumerate() {
                verdicts[i] = is_kind_strong(cx.alg, cx.closure, h, kind, method)?.holds();
            }
            tally.check(
                verdicts[0] == verdicts[1] && verdicts[1] == verdicts[2],
                || {
                    format!(
                        "H={}: signatures={} implication={} fibers={}",
                        cx.show(h),
                        verdicts[0],
                        verdicts[1],
                        verdicts[2]
                    )
                },
            );
        }
        Ok(tally)
    })
}

fn sorted_masks(sets: &[Subset]) -> Vec<u64> {
    let mut v: Vec<u64> = sets.iter().map(Subset::mask).collect();
    v.sort_unstable();
    v
}

fn classes_are_family(kind: CongruenceKind) -> Check {
    Box::new(move |cx| {
        let mut tally = Tally::default();
        for h in cx.subsets.iter().filter(|h| cx.strong(h, kind)) {
            let a = cx.an(h, kind);
            let blocks = a.partition.blocks();
            let family = a.family_sets();
            tally.check(sorted_masks(&blocks) == sorted_masks(&family), || {
                let fam: Vec<String> = family.iter().map(|s| cx.show(s)).collect();
                format!(
                    "H={}: classes {} family {}",
                    cx.show(h),
                    cx.show_partition(&a.partition),
                    fam.join(" ")
                )
            });
        }
        Ok(tally)
    })
}

fn class_theorems(kind: CongruenceKind) -> Check {
    Box::new(move |cx| {
        let mut tally = Tally::default();
        for h in cx
            .subsets
            .iter()
            .filter(|h| !h.is_empty() && cx.strong(h, kind))
        {
            let report = check_strong_class_theorems(cx.alg, cx.closure, h, kind)?;
            if let Some(v) = &report.precondition_violation {
                tally.check(false, || format!("H={}: {v}", cx.show(h)));
            }
            for c in &report.classes {
                tally.check(c.passed(), || {
                    format!(
                        "H={} X={}: strong={} residue included={} relation included={} agrees off residue={}",
                        cx.show(h),
                        cx.show(&c.class),
                        c.strong,
                        c.residue_included,
                        c.relation_included,
                        c.agrees_off_residue
                    )
                });
            }
        }
        Ok(tally)
    })
}

fn fibers_strong(kind: CongruenceKind) -> Check {
    Box::new(move |cx| {
        let mut tally = Tally::default();
        for h in cx.subsets.iter().filter(|h| cx.strong(h, kind)) {
            let sig = &cx.an(h, kind).signatures;
            for c in 0..sig.width() {
                let fiber = sig.fiber(c);
                tally.check(cx.strong(&fiber, kind), || {
                    format!(
                        "H={}: fiber {} is not {}",
                        cx.show(h),
                        cx.show(&fiber),
                        kind.strong_name()
                    )
                });
            }
        }
        Ok(tally)
    })
}

fn l_ideal_classes_share_relation(cx: &Ctx<'_>) -> Result<Tally> {
    let mut tally = Tally::default();
    for h in &cx.subsets {
        if !cx.strong(h, V) || !cx.subset_prop(h, SubsetProperty::LIdeal)? {
            continue;
        }
        let a = cx.an(h, V);
        for x in a.partition.blocks() {
            if x == a.residue {
                continue;
            }
            let b = cx.an(&x, V);
            tally.check(b.partition == a.partition, || {
                format!(
                    "H={} X={}: {} vs {}",
                    cx.show(h),
                    cx.show(&x),
                    cx.show_partition(&a.partition),
                    cx.show_partition(&b.partition)
                )
            });
        }
    }
    Ok(tally)
}

fn partial_cancellation_forms(cx: &Ctx<'_>) -> Result<Tally> {
    let mut tally = Tally::default();
    for h in &cx.subsets {
        let a = cx.an(h, V);
        let slot_form = check_partially_v_cancellative(cx.alg, &a.partition, &a.residue)?.holds();
        let translation_form =
            check_partially_v_cancellative_translations(cx.closure, &a.partition, &a.residue)
                .holds();
        tally.check(slot_form == translation_form, || {
            format!(
                "H={}: slot form={slot_form}, translation form={translation_form}",
                cx.show(h)
            )
        });
    }
    Ok(tally)
}

fn strong_characterisation(cx: &Ctx<'_>) -> Result<Tally> {
    let mut tally = Tally::default();
    for h in cx.subsets.iter().filter(|h| !h.is_empty()) {
        let a = cx.an(h, V);
        let meets = h.iter().all(|h1| {
            h.iter().all(|h2| {
                a.signatures
                    .row(h1)
                    .intersection(a.signatures.row(h2))
                    .next()
                    .is_some()
            })
        });
        let partial = check_partially_v_cancellative(cx.alg, &a.partition, &a.residue)?.holds();
        let strong = cx.strong(h, V);
        tally.check(strong == (meets && partial), || {
            format!(
                "H={}: strong={strong}, signatures meet={meets}, partially cancellative={partial}",
                cx.show(h)
            )
        });
    }
    Ok(tally)
}

fn strong_implies_characterisation(cx: &Ctx<'_>) -> Result<Tally> {
    let mut tally = Tally::default();
    for h in cx
        .subsets
        .iter()
        .filter(|h| !h.is_empty() && cx.strong(h, V))
    {
        let a = cx.an(h, V);
        let meets = h.iter().all(|h1| {
            h.iter().all(|h2| {
                a.signatures
                    .row(h1)
                    .intersection(a.signatures.row(h2))
                    .next()
                    .is_some()
            })
        });
        let partial = check_partially_v_cancellative(cx.alg, &a.partition, &a.residue)?.holds();
        tally.check(meets && partial, || {
            format!(
                "H={}: signatures meet={meets}, partially cancellative={partial}",
                cx.show(h)
            )
        });
    }
    Ok(tally)
}

fn cancellative_iff_consistent(cx: &Ctx<'_>) -> Result<Tally> {
    let mut tally = Tally::default();
    for h in cx.subsets.iter().filter(|h| cx.strong(h, V)) {
        let a = cx.an(h, V);
        let cancellative = cx.rel_prop(&a.partition, RelationProperty::VCancellative)?;
        let consistent = cx.subset_prop(&a.residue, SubsetProperty::LConsistent)?;
        tally.check(cancellative == consistent, || {
            format!(
                "H={}: v-cancellative={cancellative}, residue {} l-consistent={consistent}",
                cx.show(h),
                cx.show(&a.residue)
            )
        });
    }
    Ok(tally)
}

/// Every class `X` of a cancellative congruence is strong for `kind`, the
/// congruence lies in the principal relation of `X` and agrees with it
/// outside the residue of `X`.
fn cancellative_congruence_classes(kind: CongruenceKind, prop: RelationProperty) -> Check {
    Box::new(move |cx| {
        let mut tally = Tally::default();
        for eps in &cx.congruences[slot(kind)] {
            if !cx.rel_prop(eps, prop)? {
                continue;
            }
            for x in eps.blocks() {
                let a = cx.an(&x, kind);
                let ok = cx.strong(&x, kind)
                    && eps.is_finer_than(&a.partition)
                    && eps.agrees_on(&a.partition, &a.residue.complement());
                tally.check(ok, || {
                    format!(
                        "congruence {} class {}: principal relation {} residue {}",
                        cx.show_partition(eps),
                        cx.show(&x),
                        cx.show_partition(&a.partition),
                        cx.show(&a.residue)
                    )
                });
            }
        }
        Ok(tally)
    })
}

fn items() -> Vec<(&'static str, &'static str, Check)> {
    use SubsetProperty as S;
    vec![
        (
            "I1.star-monoid",
            "star is associative with identity ē and g[x*y] = g[x][y]",
            Box::new(star_monoid),
        ),
        (
            "I1.v-regular",
            "v-regular iff i-regular for every slot",
            Box::new(v_regular_iff_slots),
        ),
        (
            "I1.stable",
            "stable iff l-regular and v-regular",
            Box::new(stable_iff_regular),
        ),
        (
            "I1.l-ideal",
            "l-ideal iff i-ideal for every slot",
            Box::new(l_ideal_iff_slots),
        ),
        (
            "I1.v-cancel",
            "slot and translation forms of v-cancellation agree",
            Box::new(v_cancellative_forms),
        ),
        (
            "I2.disjoint",
            "H and its v-residue are disjoint",
            disjoint(V),
        ),
        (
            "I2.oracle",
            "signature grouping matches the pairwise v-definition",
            oracle(V),
        ),
        (
            "I3.disjoint",
            "H and its l-residue are disjoint",
            disjoint(L),
        ),
        (
            "I3.oracle",
            "signature grouping matches the pairwise l-definition",
            oracle(L),
        ),
        (
            "I4.disjoint",
            "H and its biresidue are disjoint",
            disjoint(Full),
        ),
        (
            "I4.oracle",
            "signature grouping matches the pairwise full definition",
            oracle(Full),
        ),
        (
            "I2.strong-necessary",
            "strong H has meeting signatures and partially v-cancellative R_H",
            Box::new(strong_implies_characterisation),
        ),
        (
            "I4.associate",
            "t^a(g[a]) = t(g)[a]",
            Box::new(associate_identity),
        ),
        (
            "P2.1",
            "R_H is a v-congruence",
            principal_is_congruence(V, S::LIdeal),
        ),
        (
            "P2.2",
            "nonempty W_H is an l-ideal",
            residue_ideal(V, S::LIdeal),
        ),
        (
            "P2.3",
            "nonempty normal v-complex H is an R_H-class other than W_H",
            class_not_residue(V, Some(S::NormalVComplex)),
        ),
        (
            "P2.4",
            "every v-congruence is the meet of R_H over its classes",
            meet_of_classes(V),
        ),
        (
            "P2.6",
            "classes of v-congruences lie in one R_H-class",
            Box::new(admissible_classes),
        ),
        (
            "P2.8",
            "three characterisations of strong agree",
            methods_agree(V),
        ),
        (
            "P2.9",
            "nonempty strong H is an R_H-class other than W_H",
            class_not_residue(V, None),
        ),
        (
            "P2.10",
            "for strong H the R_H-classes are the nonempty members of K",
            classes_are_family(V),
        ),
        (
            "P2.11",
            "classes of a strong H are strong with larger residue and relation",
            class_theorems(V),
        ),
        (
            "P2.12",
            "for strong H every fiber is strong",
            fibers_strong(V),
        ),
        (
            "P2.13",
            "strong l-ideal H has R_H = R_X for its classes X other than W_H",
            Box::new(l_ideal_classes_share_relation),
        ),
        (
            "P2.14",
            "translation and slot forms of partial v-cancellation agree",
            Box::new(partial_cancellation_forms),
        ),
        (
            "P2.15",
            "nonempty H is strong iff signatures meet and R_H is partially v-cancellative",
            Box::new(strong_characterisation),
        ),
        (
            "P2.16",
            "for strong H, R_H is v-cancellative iff W_H is l-consistent",
            Box::new(cancellative_iff_consistent),
        ),
        (
            "P3.1",
            "L_H is an l-congruence and nonempty _HW is an s-ideal",
            principal_is_congruence(L, S::SIdeal),
        ),
        (
            "P3.2",
            "every l-congruence is the meet of L_H over its classes",
            meet_of_classes(L),
        ),
        (
            "P3.4",
            "three characterisations of l-strong agree",
            methods_agree(L),
        ),
        (
            "P3.5",
            "nonempty normal l-complex H is an L_H-class other than _HW",
            class_not_residue(L, Some(S::NormalLComplex)),
        ),
        (
            "P3.6",
            "nonempty l-strong H is an L_H-class other than _HW",
            class_not_residue(L, None),
        ),
        (
            "P3.7",
            "for l-strong H the L_H-classes are the nonempty members of E",
            classes_are_family(L),
        ),
        (
            "P3.8",
            "classes of an l-strong H are l-strong with larger residue and relation",
            class_theorems(L),
        ),
        (
            "P3.9",
            "for l-strong H every fiber is l-strong",
            fibers_strong(L),
        ),
        (
            "P3.10",
            "classes of l-cancellative l-congruences are l-strong",
            cancellative_congruence_classes(L, RelationProperty::LCancellative),
        ),
        (
            "P4.1",
            "P_H is a congruence and nonempty W^H is an sl-ideal",
            principal_is_congruence(Full, S::SlIdeal),
        ),
        (
            "P4.2",
            "every congruence is the meet of P_H over its classes",
            meet_of_classes(Full),
        ),
        (
            "P4.4",
            "three characterisations of bistrong agree",
            methods_agree(Full),
        ),
        (
            "P4.5",
            "nonempty normal bicomplex H is a P_H-class other than W^H",
            class_not_residue(Full, Some(S::NormalBicomplex)),
        ),
        (
            "P4.6",
            "nonempty bistrong H is a P_H-class other than W^H",
            class_not_residue(Full, None),
        ),
        (
            "P4.7",
            "for bistrong H the P_H-classes are the nonempty members of D",
            classes_are_family(Full),
        ),
        (
            "P4.8",
            "classes of a bistrong H are bistrong with larger residue and relation",
            class_theorems(Full),
        ),
        (
            "P4.9",
            "for bistrong H every fiber is bistrong",
            fibers_strong(Full),
        ),
        (
            "P4.10",
            "classes of lv-cancellative congruences are bistrong",
            cancellative_congruence_classes(Full, RelationProperty::LvCancellative),
        ),
    ]
}

/// Identifiers of all suite items, in report order.
pub fn item_ids() -> Vec<&'static str> {
    items().into_iter().map(|(id, _, _)| id).collect()
}

/// Runs every item on `alg`. Items are independent and run in parallel;
/// the report order is fixed.
pub fn run_paper_suite(
    alg: &MengerAlgebra,
    closure: &TranslationClosure,
    options: &SuiteOptions,
) -> Result<SuiteReport> {
    let subsets = all_subsets(alg.size(), options.subset_cap)?;
    let partitions: Vec<Partition> =
        enumerate_partitions(alg.size(), options.partition_cap)?.collect();
    let atlas = subsets
        .par_iter()
        .map(|h| -> Result<Entry> {
            let mut analyses = [
                analysis(alg, closure, h, V)?,
                analysis(alg, closure, h, L)?,
                analysis(alg, closure, h, Full)?,
            ];
            if options.inject_fault {
                analyses[0].partition = Partition::identity(alg.size());
            }
            let mut strong = [false; 3];
            for kind in CongruenceKind::ALL {
                strong[slot(kind)] =
                    is_kind_strong(alg, closure, h, kind, StrongMethod::Signatures)?.holds();
            }
            Ok(Entry { analyses, strong })
        })
        .collect::<Result<Vec<_>>>()?;
    let congruences = [
        enumerate_congruences_with_cap(alg, V, options.partition_cap)?,
        enumerate_congruences_with_cap(alg, L, options.partition_cap)?,
        enumerate_congruences_with_cap(alg, Full, options.partition_cap)?,
    ];
    let cx = Ctx {
        alg,
        closure,
        subsets,
        atlas,
        partitions,
        congruences,
    };
    let items = items()
        .into_par_iter()
        .map(|(id, statement, check)| {
            // An inconsistent intermediate result (e.g. a residue that is not a
            // class) counts as a failure of the item, not of the run.
            let tally = check(&cx).unwrap_or_else(|e| Tally {
                cases: 0,
                failure: Some(format!("could not evaluate: {e}")),
            });
            SuiteItem {
                id,
                statement,
                cases: tally.cases,
                failure: tally.failure,
            }
        })
        .collect();
    Ok(SuiteReport { items })
}
