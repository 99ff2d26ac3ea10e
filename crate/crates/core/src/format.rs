//! Line-oriented text format for algebras.
//!
//! ```text
//! menger v1
//! rank 1
//! elements a b
//! table
//! a a -> a
//! a b -> a
//! b a -> b
//! b b -> b
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Every argument
//! tuple `g x1 … xn` must appear exactly once.

use crate::algebra::{check_name, MengerAlgebra, Validation, MAX_TABLE_ENTRIES};
use crate::error::{Error, Result};

pub const HEADER: &str = "menger v1";

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses an algebra file. With [`Validation::Defer`] the table is accepted
/// even when it is not superassociative.
pub fn parse_algebra(text: &str, validation: Validation) -> Result<MengerAlgebra> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| parse_error(text.lines().count() + 1, format!("expected {what}")))
    };

    let (no, line) = next("header")?;
    if line != HEADER {
        return Err(parse_error(no, format!("expected {HEADER:?}")));
    }

    let (no, line) = next("rank line")?;
    let rank = match line.split_whitespace().collect::<Vec<_>>()[..] {
        ["rank", n] => n
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| parse_error(no, format!("invalid rank {n:?}")))?,
        _ => return Err(parse_error(no, "expected \"rank <n>\"")),
    };

    let (no, line) = next("elements line")?;
    let mut words = line.split_whitespace();
    if words.next() != Some("elements") {
        return Err(parse_error(no, "expected \"elements <name>+\""));
    }
    let names: Vec<&str> = words.collect();
    if names.is_empty() {
        return Err(parse_error(no, "no elements declared"));
    }
    for (i, name) in names.iter().enumerate() {
        check_name(name).map_err(|e| parse_error(no, e.to_string()))?;
        if names[..i].contains(name) {
            return Err(parse_error(no, format!("duplicate element name {name:?}")));
        }
    }
    let m = names.len();
    let needed = (m as u128)
        .checked_pow(rank as u32 + 1)
        .unwrap_or(u128::MAX);
    if needed > MAX_TABLE_ENTRIES {
        return Err(Error::capacity("table entries", needed, MAX_TABLE_ENTRIES));
    }

    let (no, line) = next("\"table\"")?;
    if line != "table" {
        return Err(parse_error(no, "expected \"table\""));
    }

    let lookup = |no: usize, name: &str| {
        names
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| parse_error(no, format!("unknown element {name:?}")))
    };
    let mut table: Vec<Option<usize>> = vec![None; needed as usize];
    for (no, line) in lines {
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| parse_error(no, "expected \"<g> <x1> … <xn> -> <r>\""))?;
        let args: Vec<&str> = lhs.split_whitespace().collect();
        if args.len() != rank + 1 {
            return Err(parse_error(
                no,
                format!("entry has {} arguments, expected {}", args.len(), rank + 1),
            ));
        }
        let result = match rhs.split_whitespace().collect::<Vec<_>>()[..] {
            [r] => lookup(no, r)?,
            _ => return Err(parse_error(no, "expected one result after \"->\"")),
        };
        let mut code = 0;
        for a in &args {
            code = code * m + lookup(no, a)?;
        }
        if table[code].replace(result).is_some() {
            return Err(parse_error(
                no,
                format!("duplicate entry for ({})", args.join(" ")),
            ));
        }
    }

    let mut full = Vec::with_capacity(table.len());
    let mut tuple = vec![0; rank + 1];
    for (code, entry) in table.into_iter().enumerate() {
        match entry {
            Some(r) => full.push(r),
            None => {
                crate::algebra::decode_into(code, m, &mut tuple);
                let text: Vec<&str> = tuple.iter().map(|&e| names[e]).collect();
                return Err(Error::MissingEntry(text.join(" ")));
            }
        }
    }
    MengerAlgebra::from_table(rank, &names, full, validation)
}

/// Serialises an algebra with its table in lexicographic order.
pub fn write_algebra(alg: &MengerAlgebra) -> String {
    let mut out = format!(
        "{HEADER}\nrank {}\nelements {}\ntable\n",
        alg.rank(),
        alg.names().join(" ")
    );
    for g in alg.elements() {
        for code in 0..alg.tuple_count() {
            let args: Vec<&str> = alg
                .decode_tuple(code)
                .into_iter()
                .map(|x| alg.name(x))
                .collect();
            out.push_str(&format!(
                "{} {} -> {}\n",
                alg.name(g),
                args.join(" "),
                alg.name(alg.apply_code(g, code))
            ));
        }
    }
    out
}
