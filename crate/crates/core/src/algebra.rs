//! Finite Menger algebras of rank `n`.
//!
//! Elements are indices `0..m` in declaration order. The operation table stores
//! `g[x_1 … x_n]` for every `(g, x_1, …, x_n)` in lexicographic order, so the
//! argument tuple `(x_1, …, x_n)` has the base-`m` code `Σ x_i·m^(n-i)`.
//!
//! The formal selector tuple `ē = (e_1, …, e_n)` is not an element of the
//! carrier. It only appears as the [`ArgVector::Selector`] variant, where
//! `g[ē] = g`. The set `B = G^n ∪ {ē}` is indexed with `ē` at position 0 and the
//! concrete tuple with code `c` at position `c + 1`.

use std::fmt;

use crate::error::{Error, Result};

pub type Element = usize;

/// Largest operation table accepted, counted in entries (`m^(n+1)`).
pub const MAX_TABLE_ENTRIES: u128 = 10_000_000;

/// An element of `B = G^n ∪ {ē}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArgVector {
    Selector,
    Concrete(Vec<Element>),
}

/// Whether construction checks the superassociative law.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validation {
    Check,
    /// Skip the law check, so that a broken table can still be inspected with
    /// [`MengerAlgebra::verify_superassociativity`].
    Defer,
}

/// A violation `f[ḡ][h̄] ≠ f[g_1[h̄] … g_n[h̄]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub f: Element,
    pub g: Vec<Element>,
    pub h: Vec<Element>,
    /// `f[ḡ][h̄]`
    pub lhs: Element,
    /// `f[g_1[h̄] … g_n[h̄]]`
    pub rhs: Element,
}

impl Counterexample {
    /// Renders `f=… g=… h=…` using element names; tuples are comma separated.
    pub fn describe(&self, names: &[String]) -> String {
        let tuple = |xs: &[Element]| {
            xs.iter()
                .map(|&x| names[x].as_str())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "f={} g={} h={}",
            names[self.f],
            tuple(&self.g),
            tuple(&self.h)
        )
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MengerAlgebra {
    rank: usize,
    names: Vec<String>,
    /// `m^n`, the number of concrete argument tuples.
    tuples: usize,
    table: Vec<u32>,
}

pub(crate) fn check_name(name: &str) -> Result<()> {
    let bad = name.is_empty()
        || name == "x"
        || name == "->"
        || name
            .chars()
            .any(|c| c.is_whitespace() || "[](){},#".contains(c));
    if bad {
        Err(Error::InvalidName(name.to_string()))
    } else {
        Ok(())
    }
}

fn table_shape(rank: usize, size: usize) -> Result<usize> {
    if rank == 0 {
        return Err(Error::InvalidRank);
    }
    if size == 0 {
        return Err(Error::EmptyCarrier);
    }
    let entries = (size as u128).checked_pow(rank as u32 + 1);
    match entries {
        Some(e) if e <= MAX_TABLE_ENTRIES => Ok(size.pow(rank as u32)),
        _ => Err(Error::capacity(
            "operation table",
            entries.unwrap_or(u128::MAX),
            MAX_TABLE_ENTRIES,
        )),
    }
}

fn check_names<S: AsRef<str>>(names: &[S]) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::with_capacity(names.len());
    for n in names {
        let n = n.as_ref();
        check_name(n)?;
        if out.iter().any(|o| o == n) {
            return Err(Error::DuplicateName(n.to_string()));
        }
        out.push(n.to_string());
    }
    Ok(out)
}

impl MengerAlgebra {
    /// Builds an algebra from a flat table in lexicographic `(g, x_1, …, x_n)` order.
    pub fn from_table<S: AsRef<str>>(
        rank: usize,
        names: &[S],
        table: Vec<Element>,
        validation: Validation,
    ) -> Result<Self> {
        let tuples = table_shape(rank, names.len())?;
        let names = check_names(names)?;
        let m = names.len();
        if table.len() != m * tuples {
            return Err(Error::TableLength {
                expected: m * tuples,
                found: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&r| r >= m) {
            return Err(Error::ElementOutOfRange {
                index: bad,
                size: m,
            });
        }
        let alg = MengerAlgebra {
            rank,
            names,
            tuples,
            table: table.into_iter().map(|r| r as u32).collect(),
        };
        alg.finish(validation)
    }

    /// Builds an algebra by evaluating `op(g, x̄)` on every argument tuple.
    pub fn from_fn<S: AsRef<str>>(
        rank: usize,
        names: &[S],
        mut op: impl FnMut(Element, &[Element]) -> Element,
        validation: Validation,
    ) -> Result<Self> {
        let tuples = table_shape(rank, names.len())?;
        let m = names.len();
        let mut table = Vec::with_capacity(m * tuples);
        let mut xs = vec![0; rank];
        for g in 0..m {
            for code in 0..tuples {
                decode_into(code, m, &mut xs);
                table.push(op(g, &xs));
            }
        }
        Self::from_table(rank, names, table, validation)
    }

    /// Builds an algebra from named entries `([g, x_1, …, x_n], result)`.
    ///
    /// Every argument tuple must appear exactly once. The first missing tuple in
    /// lexicographic order is reported.
    pub fn from_entries<S, I>(
        rank: usize,
        names: &[S],
        entries: I,
        validation: Validation,
    ) -> Result<Self>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Vec<S>, S)>,
    {
        let tuples = table_shape(rank, names.len())?;
        let checked = check_names(names)?;
        let m = checked.len();
        let lookup = |s: &str| {
            checked
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let mut cells: Vec<Option<u32>> = vec![None; m * tuples];
        for (args, result) in entries {
            if args.len() != rank + 1 {
                return Err(Error::EntryArity {
                    expected: rank + 1,
                    found: args.len(),
                });
            }
            let mut cell = 0usize;
            for a in &args {
                cell = cell * m + lookup(a.as_ref())?;
            }
            let r = lookup(result.as_ref())?;
            if cells[cell].is_some() {
                let joined: Vec<&str> = args.iter().map(|a| a.as_ref()).collect();
                return Err(Error::DuplicateEntry(joined.join(" ")));
            }
            cells[cell] = Some(r as u32);
        }
        let mut table = Vec::with_capacity(cells.len());
        for (cell, value) in cells.iter().enumerate() {
            match value {
                Some(v) => table.push(*v as Element),
                None => {
                    let mut digits = vec![0; rank + 1];
                    decode_into(cell, m, &mut digits);
                    let joined: Vec<&str> = digits.iter().map(|&d| checked[d].as_str()).collect();
                    return Err(Error::MissingEntry(joined.join(" ")));
                }
            }
        }
        Self::from_table(rank, names, table, validation)
    }

    fn finish(self, validation: Validation) -> Result<Self> {
        if validation == Validation::Check {
            if let Err(cx) = self.verify_superassociativity() {
                let description = cx.describe(&self.names);
                return Err(Error::NotSuperassociative {
                    counterexample: Box::new(cx),
                    description,
                });
            }
        }
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of elements `m`.
    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: Element) -> &str {
        &self.names[e]
    }

    pub fn element(&self, name: &str) -> Option<Element> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.size()
    }

    /// Number of concrete argument tuples, `m^n`.
    pub fn tuple_count(&self) -> usize {
        self.tuples
    }

    /// `|B| = m^n + 1`.
    pub fn arg_count(&self) -> usize {
        self.tuples + 1
    }

    /// The raw table in lexicographic `(g, x_1, …, x_n)` order.
    pub fn table(&self) -> impl Iterator<Item = Element> + '_ {
        self.table.iter().map(|&r| r as Element)
    }

    /// `g[x̄]` where `x̄` is the concrete tuple with the given code.
    #[inline]
    pub fn apply_code(&self, g: Element, code: usize) -> Element {
        self.table[g * self.tuples + code] as Element
    }

    /// `g[x̄]` where `x̄` is the element of `B` with the given index.
    #[inline]
    pub fn apply_index(&self, g: Element, arg: usize) -> Element {
        if arg == 0 {
            g
        } else {
            self.apply_code(g, arg - 1)
        }
    }

    pub fn apply_tuple(&self, g: Element, xs: &[Element]) -> Element {
        self.apply_code(g, self.tuple_code(xs))
    }

    pub fn apply(&self, g: Element, x: &ArgVector) -> Element {
        match x {
            ArgVector::Selector => g,
            ArgVector::Concrete(xs) => self.apply_tuple(g, xs),
        }
    }

    /// `u[w̄|_slot h]`: `w̄` with its component at `slot` (0-based) replaced by `h`.
    pub fn apply_slot(
        &self,
        u: Element,
        w: &[Element],
        slot: usize,
        h: Element,
    ) -> Result<Element> {
        if slot >= self.rank {
            return Err(Error::SlotOutOfRange {
                slot,
                rank: self.rank,
            });
        }
        self.check_tuple(w)?;
        self.check_element(u)?;
        self.check_element(h)?;
        let m = self.size();
        let weight = m.pow((self.rank - 1 - slot) as u32);
        let code = self.tuple_code(w) - w[slot] * weight + h * weight;
        Ok(self.apply_code(u, code))
    }

    pub(crate) fn check_element(&self, e: Element) -> Result<()> {
        if e < self.size() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                index: e,
                size: self.size(),
            })
        }
    }

    pub(crate) fn check_tuple(&self, xs: &[Element]) -> Result<()> {
        if xs.len() != self.rank {
            return Err(Error::ArgLength {
                expected: self.rank,
                found: xs.len(),
            });
        }
        xs.iter().try_for_each(|&x| self.check_element(x))
    }

    pub fn check_arg(&self, x: &ArgVector) -> Result<()> {
        match x {
            ArgVector::Selector => Ok(()),
            ArgVector::Concrete(xs) => self.check_tuple(xs),
        }
    }

    pub fn tuple_code(&self, xs: &[Element]) -> usize {
        let m = self.size();
        xs.iter().fold(0, |acc, &x| acc * m + x)
    }

    pub fn decode_tuple(&self, code: usize) -> Vec<Element> {
        let mut xs = vec![0; self.rank];
        decode_into(code, self.size(), &mut xs);
        xs
    }

    /// Position of `x` in the canonical enumeration of `B`.
    pub fn arg_index(&self, x: &ArgVector) -> usize {
        match x {
            ArgVector::Selector => 0,
            ArgVector::Concrete(xs) => self.tuple_code(xs) + 1,
        }
    }

    pub fn arg_vector(&self, index: usize) -> ArgVector {
        if index == 0 {
            ArgVector::Selector
        } else {
            ArgVector::Concrete(self.decode_tuple(index - 1))
        }
    }

    /// The product `x̄ * ȳ = (x_1[ȳ], …, x_n[ȳ])` on `B`, with `ē` as identity.
    pub fn star(&self, x: &ArgVector, y: &ArgVector) -> ArgVector {
        self.arg_vector(self.star_index(self.arg_index(x), self.arg_index(y)))
    }

    /// [`MengerAlgebra::star`] on `B`-indices.
    pub fn star_index(&self, x: usize, y: usize) -> usize {
        if x == 0 {
            return y;
        }
        if y == 0 {
            return x;
        }
        let m = self.size();
        let (mut code, mut rest, mut weight) = (0, x - 1, self.tuples);
        for _ in 0..self.rank {
            weight /= m;
            let xi = rest / weight;
            rest %= weight;
            code = code * m + self.apply_code(xi, y - 1);
        }
        code + 1
    }

    /// Checks `f[ḡ][h̄] = f[g_1[h̄] … g_n[h̄]]` for every `f, ḡ, h̄`.
    ///
    /// The scan runs over `f`, then `ḡ`, then `h̄` in lexicographic order and
    /// stops at the first violation.
    pub fn verify_superassociativity(&self) -> std::result::Result<(), Counterexample> {
        let m = self.size();
        let n = self.rank;
        let p = self.tuples;
        let mut g = vec![0; n];
        for f in 0..m {
            for gcode in 0..p {
                decode_into(gcode, m, &mut g);
                let fg = self.apply_code(f, gcode);
                for hcode in 0..p {
                    let lhs = self.apply_code(fg, hcode);
                    let inner = g
                        .iter()
                        .fold(0, |acc, &gi| acc * m + self.apply_code(gi, hcode));
                    let rhs = self.apply_code(f, inner);
                    if lhs != rhs {
                        return Err(Counterexample {
                            f,
                            g: g.clone(),
                            h: self.decode_tuple(hcode),
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Relabels the carrier: old element `e` becomes `perm[e]`.
    pub fn permuted(&self, perm: &[Element]) -> Result<Self> {
        let m = self.size();
        let mut seen = vec![false; m];
        if perm.len() != m {
            return Err(Error::SizeMismatch(perm.len(), m));
        }
        for &p in perm {
            if p >= m || seen[p] {
                return Err(Error::ElementOutOfRange { index: p, size: m });
            }
            seen[p] = true;
        }
        let mut inverse = vec![0; m];
        for (old, &new) in perm.iter().enumerate() {
            inverse[new] = old;
        }
        let names: Vec<&str> = inverse
            .iter()
            .map(|&old| self.names[old].as_str())
            .collect();
        let mut old_xs = vec![0; self.rank];
        MengerAlgebra::from_fn(
            self.rank,
            &names,
            |g, xs| {
                for (o, &x) in old_xs.iter_mut().zip(xs) {
                    *o = inverse[x];
                }
                perm[self.apply_tuple(inverse[g], &old_xs)]
            },
            Validation::Defer,
        )
    }

    pub fn format_arg(&self, x: &ArgVector) -> String {
        match x {
            ArgVector::Selector => "ē".to_string(),
            ArgVector::Concrete(xs) => {
                let parts: Vec<&str> = xs.iter().map(|&e| self.name(e)).collect();
                format!("({})", parts.join(","))
            }
        }
    }

    /// Renders a subset as `{a b}`; the empty subset is `{}`.
    pub fn format_subset(&self, s: &crate::Subset) -> String {
        let parts: Vec<&str> = s.iter().map(|e| self.name(e)).collect();
        format!("{{{}}}", parts.join(" "))
    }
}

impl fmt::Debug for MengerAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MengerAlgebra")
            .field("rank", &self.rank)
            .field("names", &self.names)
            .finish_non_exhaustive()
    }
}

pub(crate) fn decode_into(mut code: usize, m: usize, out: &mut [Element]) {
    for slot in out.iter_mut().rev() {
        *slot = code % m;
        code /= m;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lz2() -> MengerAlgebra {
        MengerAlgebra::from_fn(1, &["a", "b"], |g, _| g, Validation::Check).unwrap()
    }

    fn rz2() -> MengerAlgebra {
        MengerAlgebra::from_fn(1, &["a", "b"], |_, xs| xs[0], Validation::Check).unwrap()
    }

    #[test]
    fn negation_table_reports_first_counterexample() {
        let err = MengerAlgebra::from_fn(1, &["0", "1"], |_, xs| 1 - xs[0], Validation::Check)
            .unwrap_err();
        match err {
            Error::NotSuperassociative {
                counterexample,
                description,
            } => {
                assert_eq!(counterexample.f, 0);
                assert_eq!(counterexample.g, vec![0]);
                assert_eq!(counterexample.h, vec![0]);
                assert_eq!((counterexample.lhs, counterexample.rhs), (1, 0));
                assert_eq!(description, "f=0 g=0 h=0");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn deferred_validation_keeps_broken_tables() {
        let alg =
            MengerAlgebra::from_fn(1, &["0", "1"], |_, xs| 1 - xs[0], Validation::Defer).unwrap();
        assert!(alg.verify_superassociativity().is_err());
    }

    #[test]
    fn one_element_rank_two() {
        let alg = MengerAlgebra::from_fn(2, &["f"], |_, _| 0, Validation::Check).unwrap();
        assert_eq!(alg.apply(0, &ArgVector::Concrete(vec![0, 0])), 0);
        assert_eq!(alg.apply_slot(0, &[0, 0], 1, 0).unwrap(), 0);
        assert_eq!(alg.arg_count(), 2);
    }

    #[test]
    fn apply_and_slots() {
        let lz = lz2();
        assert_eq!(lz.apply(0, &ArgVector::Selector), 0);
        assert_eq!(lz.apply(1, &ArgVector::Selector), 1);
        assert_eq!(lz.apply(0, &ArgVector::Concrete(vec![1])), 0);
        assert_eq!(lz.apply_slot(0, &[1], 0, 0).unwrap(), 0);
        assert!(matches!(
            lz.apply_slot(0, &[1], 1, 0),
            Err(Error::SlotOutOfRange { .. })
        ));
        let rz = rz2();
        for u in 0..2 {
            for w in 0..2 {
                for h in 0..2 {
                    assert_eq!(
                        rz.apply_slot(u, &[w], 0, h).unwrap(),
                        rz.apply_tuple(u, &[h])
                    );
                }
            }
        }
    }

    #[test]
    fn star_examples() {
        let rz = rz2();
        let a = ArgVector::Concrete(vec![0]);
        let b = ArgVector::Concrete(vec![1]);
        assert_eq!(rz.star(&a, &b), b);
        assert_eq!(lz2().star(&a, &b), a);
        assert_eq!(rz.star(&ArgVector::Selector, &b), b);
        assert_eq!(rz.star(&a, &ArgVector::Selector), a);
    }

    #[test]
    fn entries_errors() {
        let names = ["a", "b"];
        let missing = MengerAlgebra::from_entries(
            1,
            &names,
            vec![
                (vec!["a", "a"], "a"),
                (vec!["a", "b"], "a"),
                (vec!["b", "a"], "b"),
            ],
            Validation::Check,
        )
        .unwrap_err();
        assert_eq!(missing, Error::MissingEntry("b b".into()));
        let dup = MengerAlgebra::from_entries(
            1,
            &names,
            vec![(vec!["a", "a"], "a"), (vec!["a", "a"], "b")],
            Validation::Check,
        )
        .unwrap_err();
        assert_eq!(dup, Error::DuplicateEntry("a a".into()));
        let unknown =
            MengerAlgebra::from_entries(1, &names, vec![(vec!["a", "c"], "a")], Validation::Check)
                .unwrap_err();
        assert_eq!(unknown, Error::UnknownElement("c".into()));
    }

    #[test]
    fn names_and_capacity() {
        assert_eq!(
            MengerAlgebra::from_fn(1, &["a", "a"], |g, _| g, Validation::Check).unwrap_err(),
            Error::DuplicateName("a".into())
        );
        assert!(matches!(
            MengerAlgebra::from_fn(1, &["x"], |g, _| g, Validation::Check),
            Err(Error::InvalidName(_))
        ));
        let names: Vec<String> = (0..40).map(|i| format!("e{i}")).collect();
        assert!(matches!(
            MengerAlgebra::from_fn(4, &names, |g, _| g, Validation::Defer),
            Err(Error::CapacityExceeded { .. })
        ));
        assert_eq!(
            MengerAlgebra::from_fn(0, &["a"], |g, _| g, Validation::Check).unwrap_err(),
            Error::InvalidRank
        );
    }

    #[test]
    fn arg_indexing_round_trips() {
        let alg = MengerAlgebra::from_fn(2, &["a", "b", "c"], |g, _| g, Validation::Check).unwrap();
        for i in 0..alg.arg_count() {
            assert_eq!(alg.arg_index(&alg.arg_vector(i)), i);
        }
        assert_eq!(alg.arg_vector(0), ArgVector::Selector);
        assert_eq!(alg.arg_vector(1), ArgVector::Concrete(vec![0, 0]));
        assert_eq!(alg.arg_vector(4), ArgVector::Concrete(vec![1, 0]));
    }

    #[test]
    fn permutation_preserves_law() {
        let alg =
            MengerAlgebra::from_fn(1, &["a", "b", "c"], |g, xs| g.max(xs[0]), Validation::Check)
                .unwrap();
        let p = alg.permuted(&[2, 0, 1]).unwrap();
        assert!(p.verify_superassociativity().is_ok());
        assert_eq!(p.names(), &["b", "c", "a"]);
        // max(a, b) = b maps to max'(2, 0) = 0
        assert_eq!(p.apply_tuple(2, &[0]), 0);
    }
}
