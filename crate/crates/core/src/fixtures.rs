//! Algebra presentations shipped with the crate.

use std::sync::Arc;

use crate::algebra::format::AlgebraFile;
use crate::algebra::{Algebra, DEFAULT_MAX_DEGREE};

pub const NAMES: &[&str] = &[
    "ex321_n5",
    "ex321_n6",
    "beilinson_n2",
    "beilinson_n3",
    "a2",
    "a3",
    "semisimple3",
    "dualnumbers",
];

/// Source text of a bundled fixture.
pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "ex321_n5" => include_str!("../fixtures/ex321_n5.alg"),
        "ex321_n6" => include_str!("../fixtures/ex321_n6.alg"),
        "beilinson_n2" => include_str!("../fixtures/beilinson_n2.alg"),
        "beilinson_n3" => include_str!("../fixtures/beilinson_n3.alg"),
        "a2" => include_str!("../fixtures/a2.alg"),
        "a3" => include_str!("../fixtures/a3.alg"),
        "semisimple3" => include_str!("../fixtures/semisimple3.alg"),
        "dualnumbers" => include_str!("../fixtures/dualnumbers.alg"),
        _ => return None,
    })
}

/// Parses and builds a bundled fixture. Panics on unknown names.
pub fn load(name: &str) -> Arc<Algebra> {
    let text = source(name).unwrap_or_else(|| panic!("unknown fixture `{name}`"));
    let file = AlgebraFile::parse(text).expect("bundled fixtures parse");
    Arc::new(file.build(DEFAULT_MAX_DEGREE).expect("bundled fixtures are admissible"))
}

/// Same presentation as a bundled fixture, over a different prime.
pub fn load_over(name: &str, p: u32) -> Arc<Algebra> {
    let text = source(name).unwrap_or_else(|| panic!("unknown fixture `{name}`"));
    let replaced: String = text
        .lines()
        .map(|l| {
            if l.trim_start().starts_with("field ") {
                format!("field {p}")
            } else {
                l.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    let file = AlgebraFile::parse(&replaced).expect("bundled fixtures parse");
    Arc::new(file.build(DEFAULT_MAX_DEGREE).expect("bundled fixtures are admissible"))
}
