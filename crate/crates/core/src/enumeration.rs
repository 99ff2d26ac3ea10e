//! Exhaustive sweeps: set partitions, congruences, subset classification and
//! algebras of functions closed under superposition.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{Element, MengerAlgebra, Validation, MAX_TABLE_ENTRIES};
use crate::error::{Error, Result};
use crate::principal::{analysis, is_kind_strong, CongruenceKind, StrongMethod};
use crate::relations::{
    check_relation_property, check_subset_property, Partition, RelationProperty, SubsetProperty,
};
use crate::subset::Subset;
use crate::term::TranslationClosure;

pub const DEFAULT_PARTITION_CAP: u128 = 1_000_000;
pub const DEFAULT_SUBSET_CAP: u128 = 1 << 16;
pub const DEFAULT_CARRIER_CAP: usize = 1_000;

/// Number of set partitions of an `m`-element set.
pub fn bell_number(m: usize) -> u128 {
    // Bell triangle.
    let mut row = vec![1u128];
    for _ in 0..m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let prev = *next.last().unwrap();
            next.push(prev.saturating_add(x));
        }
        row = next;
    }
    row[0]
}

/// Set partitions of `{0, …, m-1}` as restricted growth strings, in
/// lexicographic order of the strings.
pub struct PartitionIter {
    rgs: Vec<usize>,
    /// `max[i]` is the largest value among `rgs[..=i]`.
    max: Vec<usize>,
    done: bool,
}

impl PartitionIter {
    fn new(m: usize) -> Self {
        PartitionIter {
            rgs: vec![0; m],
            max: vec![0; m],
            done: m == 0,
        }
    }

    fn advance(&mut self) {
        let m = self.rgs.len();
        for i in (1..m).rev() {
            if self.rgs[i] <= self.max[i - 1] {
                self.rgs[i] += 1;
                self.max[i] = self.max[i - 1].max(self.rgs[i]);
                for j in i + 1..m {
                    self.rgs[j] = 0;
                    self.max[j] = self.max[i];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let p = Partition::from_labels(&self.rgs);
        self.advance();
        Some(p)
    }
}

/// All partitions of an `m`-element set; fails when there are more than `cap`.
pub fn enumerate_partitions(m: usize, cap: u128) -> Result<PartitionIter> {
    let needed = bell_number(m);
    if needed > cap {
        return Err(Error::capacity("partitions", needed, cap));
    }
    Ok(PartitionIter::new(m))
}

fn congruence_property(kind: CongruenceKind) -> RelationProperty {
    match kind {
        CongruenceKind::V => RelationProperty::VCongruence,
        CongruenceKind::L => RelationProperty::LCongruence,
        CongruenceKind::Full => RelationProperty::Congruence,
    }
}

/// Every v-, l- or full congruence of `alg`, in partition enumeration order.
pub fn enumerate_congruences(alg: &MengerAlgebra, kind: CongruenceKind) -> Result<Vec<Partition>> {
    enumerate_congruences_with_cap(alg, kind, DEFAULT_PARTITION_CAP)
}

pub fn enumerate_congruences_with_cap(
    alg: &MengerAlgebra,
    kind: CongruenceKind,
    cap: u128,
) -> Result<Vec<Partition>> {
    let prop = congruence_property(kind);
    let parts: Vec<Partition> = enumerate_partitions(alg.size(), cap)?.collect();
    let keep = parts
        .par_iter()
        .map(|p| check_relation_property(alg, p, prop).map(|v| v.holds()))
        .collect::<Result<Vec<bool>>>()?;
    Ok(parts
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(p, _)| p)
        .collect())
}

/// Flags and sizes for one subset `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRow {
    pub subset: Subset,
    pub strong: bool,
    pub l_strong: bool,
    pub bistrong: bool,
    pub normal_v_complex: bool,
    pub normal_l_complex: bool,
    pub normal_bicomplex: bool,
    pub l_ideal: bool,
    pub s_ideal: bool,
    pub sl_ideal: bool,
    pub l_consistent: bool,
    /// Residue sizes for the v-, l- and full congruence.
    pub residue_sizes: [usize; 3],
    /// Block counts of the v-, l- and full congruence.
    pub class_counts: [usize; 3],
}

pub fn classify_subset(
    alg: &MengerAlgebra,
    closure: &TranslationClosure,
    h: &Subset,
) -> Result<ClassificationRow> {
    let strong = |kind| -> Result<bool> {
        Ok(is_kind_strong(alg, closure, h, kind, StrongMethod::Signatures)?.holds())
    };
    let prop = |p| -> Result<bool> { Ok(check_subset_property(alg, closure, h, p)?.holds()) };
    let mut residue_sizes = [0; 3];
    let mut class_counts = [0; 3];
    for (i, kind) in CongruenceKind::ALL.into_iter().enumerate() {
        let a = analysis(alg, closure, h, kind)?;
        residue_sizes[i] = a.residue.len();
        class_counts[i] = a.partition.block_count();
    }
    Ok(ClassificationRow {
        subset: h.clone(),
        strong: strong(CongruenceKind::V)?,
        l_strong: strong(CongruenceKind::L)?,
        bistrong: strong(CongruenceKind::Full)?,
        normal_v_complex: prop(SubsetProperty::NormalVComplex)?,
        normal_l_complex: prop(SubsetProperty::NormalLComplex)?,
        normal_bicomplex: prop(SubsetProperty::NormalBicomplex)?,
        l_ideal: prop(SubsetProperty::LIdeal)?,
        s_ideal: prop(SubsetProperty::SIdeal)?,
        sl_ideal: prop(SubsetProperty::SlIdeal)?,
        l_consistent: prop(SubsetProperty::LConsistent)?,
        residue_sizes,
        class_counts,
    })
}

/// One row per subset of the carrier, ordered by membership mask.
pub fn classify_subsets(
    alg: &MengerAlgebra,
    closure: &TranslationClosure,
) -> Result<Vec<ClassificationRow>> {
    classify_subsets_with_cap(alg, closure, DEFAULT_SUBSET_CAP)
}

pub fn classify_subsets_with_cap(
    alg: &MengerAlgebra,
    closure: &TranslationClosure,
    cap: u128,
) -> Result<Vec<ClassificationRow>> {
    let subsets = all_subsets(alg.size(), cap)?;
    subsets
        .par_iter()
        .map(|h| classify_subset(alg, closure, h))
        .collect()
}

/// Every subset of an `m`-element carrier ordered by mask, within `cap`.
pub fn all_subsets(m: usize, cap: u128) -> Result<Vec<Subset>> {
    let needed = if m >= 127 { u128::MAX } else { 1u128 << m };
    if needed > cap || m >= 64 {
        return Err(Error::capacity("subsets", needed, cap));
    }
    Ok(Subset::all(m).collect())
}

/// A family of `arity`-place functions on `{0, …, base_size-1}`, each given
/// by its values on argument tuples in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionFamily {
    pub base_size: usize,
    pub arity: usize,
    pub functions: Vec<Vec<usize>>,
}

impl FunctionFamily {
    pub fn new(base_size: usize, arity: usize, functions: Vec<Vec<usize>>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::InvalidRank);
        }
        if base_size == 0 {
            return Err(Error::EmptyCarrier);
        }
        let points = points(base_size, arity)?;
        for f in &functions {
            if f.len() != points {
                return Err(Error::TableLength {
                    expected: points,
                    found: f.len(),
                });
            }
            if let Some(&v) = f.iter().find(|&&v| v >= base_size) {
                return Err(Error::ElementOutOfRange {
                    index: v,
                    size: base_size,
                });
            }
        }
        Ok(FunctionFamily {
            base_size,
            arity,
            functions,
        })
    }

    /// Builds a function table from a closure over argument tuples.
    pub fn tabulate(base_size: usize, arity: usize, f: impl Fn(&[usize]) -> usize) -> Vec<usize> {
        let count = base_size.pow(arity as u32);
        let mut args = vec![0; arity];
        (0..count)
            .map(|code| {
                crate::algebra::decode_into(code, base_size, &mut args);
                f(&args)
            })
            .collect()
    }

    /// The `i`-th projection (0-based).
    pub fn projection(base_size: usize, arity: usize, i: usize) -> Vec<usize> {
        FunctionFamily::tabulate(base_size, arity, |a| a[i])
    }
}

fn points(base_size: usize, arity: usize) -> Result<usize> {
    let needed = (base_size as u128)
        .checked_pow(arity as u32)
        .unwrap_or(u128::MAX);
    if needed > MAX_TABLE_ENTRIES {
        return Err(Error::capacity(
            "function table entries",
            needed,
            MAX_TABLE_ENTRIES,
        ));
    }
    Ok(needed as usize)
}

/// `f[g_1 … g_n]` computed pointwise.
fn superpose(f: &[usize], gs: &[&[usize]], base: usize) -> Vec<usize> {
    (0..f.len())
        .map(|p| {
            let mut code = 0;
            for g in gs {
                code = code * base + g[p];
            }
            f[code]
        })
        .collect()
}

/// Closes `generators` under superposition. The carrier lists the
/// generators first (duplicates dropped), then new functions in discovery
/// order; generators are named by `names` and derived functions `f<index>`.
/// Projections are only present when generated.
pub fn generate_function_algebra<S: AsRef<str>>(
    generators: &FunctionFamily,
    names: &[S],
    cap: usize,
) -> Result<MengerAlgebra> {
    if generators.functions.is_empty() {
        return Err(Error::NoGenerators);
    }
    let n = generators.arity;
    let base = generators.base_size;
    let mut carrier: Vec<Vec<usize>> = Vec::new();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut carrier_names: Vec<String> = Vec::new();
    for (i, f) in generators.functions.iter().enumerate() {
        if !index.contains_key(f) {
            index.insert(f.clone(), carrier.len());
            carrier.push(f.clone());
            carrier_names.push(match names.get(i) {
                Some(s) => s.as_ref().to_string(),
                None => format!("f{}", carrier.len() - 1),
            });
        }
    }

    let mut choice = vec![0usize; n + 1];
    // Rounds over the current carrier until nothing new appears; each round
    // only visits tuples that involve at least one element from the last one.
    let mut fresh_from = 0;
    loop {
        let size = carrier.len();
        let tuples = (size as u128)
            .checked_pow(n as u32 + 1)
            .unwrap_or(u128::MAX);
        if tuples > MAX_TABLE_ENTRIES {
            return Err(Error::capacity(
                "superposition table entries",
                tuples,
                MAX_TABLE_ENTRIES,
            ));
        }
        let mut found = Vec::new();
        for code in 0..tuples as usize {
            crate::algebra::decode_into(code, size, &mut choice);
            if choice.iter().all(|&c| c < fresh_from) {
                continue;
            }
            let gs: Vec<&[usize]> = choice[1..].iter().map(|&c| carrier[c].as_slice()).collect();
            let h = superpose(&carrier[choice[0]], &gs, base);
            if !index.contains_key(&h) {
                index.insert(h.clone(), carrier.len() + found.len());
                found.push(h);
                if carrier.len() + found.len() > cap {
                    return Err(Error::capacity(
                        "generated carrier",
                        (carrier.len() + found.len()) as u128,
                        cap as u128,
                    ));
                }
            }
        }
        if found.is_empty() {
            break;
        }
        fresh_from = size;
        for h in found {
            carrier_names.push(format!("f{}", carrier.len()));
            carrier.push(h);
        }
    }

    let gs_buf = carrier.clone();
    MengerAlgebra::from_fn(
        n,
        &carrier_names,
        |f, xs| {
            let gs: Vec<&[usize]> = xs.iter().map(|&x| gs_buf[x].as_slice()).collect();
            index[&superpose(&gs_buf[f], &gs, base)]
        },
        Validation::Check,
    )
}

/// The rank-1 algebra of a multiplication table `mult[x][y] = x·y`.
pub fn semigroup_as_menger<S: AsRef<str>>(
    names: &[S],
    mult: &[Vec<Element>],
) -> Result<MengerAlgebra> {
    let m = names.len();
    if mult.len() != m {
        return Err(Error::TableLength {
            expected: m,
            found: mult.len(),
        });
    }
    let mut table = Vec::with_capacity(m * m);
    for row in mult {
        if row.len() != m {
            return Err(Error::TableLength {
                expected: m,
                found: row.len(),
            });
        }
        table.extend_from_slice(row);
    }
    MengerAlgebra::from_table(1, names, table, Validation::Check)
}

/// Every superassociative rank-1 table on `m` labelled elements, in
/// lexicographic order of the tables.
pub fn rank1_algebras(m: usize) -> Result<Vec<MengerAlgebra>> {
    let cells = m * m;
    let count = (m as u128).checked_pow(cells as u32).unwrap_or(u128::MAX);
    if count > MAX_TABLE_ENTRIES {
        return Err(Error::capacity("rank-1 tables", count, MAX_TABLE_ENTRIES));
    }
    let names: Vec<String> = (0..m).map(|i| format!("s{i}")).collect();
    let mut table = vec![0; cells];
    let mut out = Vec::new();
    for code in 0..count as usize {
        crate::algebra::decode_into(code, m, &mut table);
        let alg = MengerAlgebra::from_table(1, &names, table.clone(), Validation::Defer)?;
        if alg.verify_superassociativity().is_ok() {
            out.push(alg);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::translation_closure;

    #[test]
    fn bell_numbers() {
        let expected = [1u128, 1, 2, 5, 15, 52, 203, 877];
        for (m, &b) in expected.iter().enumerate() {
            assert_eq!(bell_number(m), b);
        }
    }

    #[test]
    fn partition_counts_match_bell() {
        for m in 1..=6 {
            let parts: Vec<_> = enumerate_partitions(m, DEFAULT_PARTITION_CAP)
                .unwrap()
                .collect();
            assert_eq!(parts.len() as u128, bell_number(m));
            let distinct: std::collections::HashSet<_> = parts.iter().cloned().collect();
            assert_eq!(distinct.len(), parts.len());
        }
        let first: Vec<_> = enumerate_partitions(3, 10).unwrap().collect();
        assert_eq!(first[0], Partition::universal(3));
        assert_eq!(first[4], Partition::identity(3));
        assert!(matches!(
            enumerate_partitions(5, 51),
            Err(Error::CapacityExceeded { needed: 52, .. })
        ));
    }

    #[test]
    fn congruences_of_small_algebras() {
        let rz = semigroup_as_menger(&["a", "b"], &[vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(
            enumerate_congruences(&rz, CongruenceKind::Full)
                .unwrap()
                .len(),
            2
        );
        let one = semigroup_as_menger(&["e"], &[vec![0]]).unwrap();
        assert_eq!(
            enumerate_congruences(&one, CongruenceKind::Full)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn nand_closure() {
        let nand = FunctionFamily::tabulate(2, 2, |a| 1 - (a[0] & a[1]));
        let fam = FunctionFamily::new(2, 2, vec![nand]).unwrap();
        let alg = generate_function_algebra(&fam, &["nand"], DEFAULT_CARRIER_CAP).unwrap();
        assert_eq!(alg.size(), 4);
        assert_eq!(alg.name(0), "nand");
    }

    #[test]
    fn and_and_identity_closures() {
        let and = FunctionFamily::tabulate(2, 2, |a| a[0] & a[1]);
        let alg =
            generate_function_algebra(&FunctionFamily::new(2, 2, vec![and]).unwrap(), &["and"], 10)
                .unwrap();
        assert_eq!(alg.size(), 1);
        let id = FunctionFamily::projection(2, 1, 0);
        let alg =
            generate_function_algebra(&FunctionFamily::new(2, 1, vec![id]).unwrap(), &["id"], 10)
                .unwrap();
        assert_eq!(alg.size(), 1);
        let empty = FunctionFamily::new(2, 1, vec![]).unwrap();
        assert_eq!(
            generate_function_algebra::<&str>(&empty, &[], 10),
            Err(Error::NoGenerators)
        );
    }

    #[test]
    fn carrier_cap_is_enforced() {
        let nand = FunctionFamily::tabulate(2, 2, |a| 1 - (a[0] & a[1]));
        let fam = FunctionFamily::new(2, 2, vec![nand]).unwrap();
        assert!(matches!(
            generate_function_algebra(&fam, &["nand"], 3),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn semigroup_checks() {
        assert!(semigroup_as_menger(&["a", "b"], &[vec![0, 0], vec![1, 1]]).is_ok());
        assert!(matches!(
            semigroup_as_menger(&["0", "1"], &[vec![1, 0], vec![1, 0]]),
            Err(Error::NotSuperassociative { .. })
        ));
    }

    #[test]
    fn classification_of_right_zero() {
        let rz = semigroup_as_menger(&["a", "b"], &[vec![0, 1], vec![0, 1]]).unwrap();
        let cl = translation_closure(&rz, 100).unwrap();
        let rows = classify_subsets(&rz, &cl).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows[0].strong && rows[0].l_strong && rows[0].bistrong);
        let a = &rows[1];
        assert!(a.strong && !a.l_strong && !a.bistrong);
        assert_eq!(a.residue_sizes, [1, 0, 0]);
        let g = &rows[3];
        assert_eq!(g.residue_sizes, [0, 0, 0]);
        assert_eq!(g.class_counts, [1, 1, 1]);
    }
}
