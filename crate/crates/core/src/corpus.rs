//! Named algebras used by the test suites and shipped as files under
//! `corpus/`.

use crate::algebra::{MengerAlgebra, Validation};
use crate::enumeration::{
    generate_function_algebra, rank1_algebras, FunctionFamily, DEFAULT_CARRIER_CAP,
};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub algebra: MengerAlgebra,
}

/// Left zero semigroup on `{a, b}`: `x[y] = x`.
pub fn lz2() -> MengerAlgebra {
    MengerAlgebra::from_fn(1, &["a", "b"], |g, _| g, Validation::Check).expect("left zero band")
}

/// Right zero semigroup on `{a, b}`: `x[y] = y`.
pub fn rz2() -> MengerAlgebra {
    MengerAlgebra::from_fn(1, &["a", "b"], |_, xs| xs[0], Validation::Check)
        .expect("right zero band")
}

/// The one-element algebra of rank 2.
pub fn bool_and() -> MengerAlgebra {
    MengerAlgebra::from_fn(2, &["f"], |_, _| 0, Validation::Check).expect("one element")
}

type BooleanFn<'a> = &'a dyn Fn(&[usize]) -> usize;

fn generated(arity: usize, names: &[&str], fs: &[BooleanFn<'_>]) -> MengerAlgebra {
    let tables = fs
        .iter()
        .map(|f| FunctionFamily::tabulate(2, arity, f))
        .collect();
    let family = FunctionFamily::new(2, arity, tables).expect("boolean tables");
    generate_function_algebra(&family, names, DEFAULT_CARRIER_CAP).expect("small closure")
}

/// Binary boolean functions generated by NAND: NAND, AND and both constants.
pub fn nand_closure() -> MengerAlgebra {
    generated(2, &["nand"], &[&|a| 1 - (a[0] & a[1])])
}

/// Ternary boolean functions generated by three-input NAND (4 elements).
pub fn nand3_closure() -> MengerAlgebra {
    generated(3, &["nand3"], &[&|a| 1 - (a[0] & a[1] & a[2])])
}

/// Ternary boolean functions generated by majority and `¬x1 ∧ x3`
/// (6 elements).
pub fn majority_closure() -> MengerAlgebra {
    generated(
        3,
        &["maj", "nx1x3"],
        &[&|a| (a[0] & a[1]) | (a[1] & a[2]) | (a[0] & a[2]), &|a| {
            (1 - a[0]) & a[2]
        }],
    )
}

/// Ternary functions generated by `¬x1`; the closure contains the first
/// projection.
pub fn negation_closure() -> MengerAlgebra {
    generated(3, &["not1"], &[&|a| 1 - a[0]])
}

/// The named algebras that are shipped as files, with their file stems.
pub fn named() -> Vec<CorpusEntry> {
    [
        ("lz2", lz2()),
        ("rz2", rz2()),
        ("bool-and", bool_and()),
        ("nand", nand_closure()),
        ("nand3", nand3_closure()),
        ("majority", majority_closure()),
        ("not1", negation_closure()),
    ]
    .into_iter()
    .map(|(name, algebra)| CorpusEntry {
        name: name.to_string(),
        algebra,
    })
    .collect()
}

/// Every superassociative rank-1 table on 1, 2 and 3 labelled elements.
pub fn rank1_up_to_3() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for m in 1..=3 {
        for (i, algebra) in rank1_algebras(m)?.into_iter().enumerate() {
            out.push(CorpusEntry {
                name: format!("rank1-m{m}-{i:03}"),
                algebra,
            });
        }
    }
    Ok(out)
}

/// The named algebras followed by all small rank-1 algebras.
pub fn corpus() -> Result<Vec<CorpusEntry>> {
    let mut out = named();
    out.extend(rank1_up_to_3()?);
    Ok(out)
}
