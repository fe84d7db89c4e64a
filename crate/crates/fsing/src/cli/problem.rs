//! Line-oriented problem files.
//!
//! ```text
//! # comment
//! [ring]
//! p = 2
//! variables = x1, x2, x3, x4, x5
//! order = grevlex            # optional: grevlex (default) or lex
//!
//! [ideal I]
//! x1*x4 + x2*x4
//! x1^2 + x4*x5
//!
//! [canonical]                # generators of the canonical pre-image;
//! x1                         # the defining ideal is added automatically
//! x4
//! x5
//!
//! [element u]                # optional named elements (u, c, ...)
//! x1^3*x2*x3
//!
//! [task]
//! test-ideal
//! ```

use std::collections::BTreeMap;

use crate::arith::monomial::MonomialOrder;
use crate::arith::poly::Polynomial;
use crate::arith::ring::{Ring, RingSpec};
use crate::cli::parse::parse_polynomial;
use crate::error::{Error, Result};
use crate::groebner::Ideal;

#[derive(Debug)]
pub struct ProblemFile {
    pub ring: Ring,
    pub ideals: BTreeMap<String, Ideal>,
    /// Raw generators of the canonical pre-image (without the defining
    /// ideal, which callers add).
    pub canonical: Option<Vec<Polynomial>>,
    pub elements: BTreeMap<String, Polynomial>,
    pub task: Option<String>,
}

pub const TASKS: [&str; 8] = [
    "root",
    "star",
    "nilpotency",
    "fedder",
    "ext",
    "test-ideal",
    "dim",
    "gb",
];

enum Block {
    None,
    Ring,
    Ideal(String),
    Canonical,
    Element(String),
    Task,
}

fn fail(line: usize, message: impl Into<String>) -> Error {
    Error::ProblemFile {
        message: message.into(),
        line,
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let mut block = Block::None;
    let mut p: Option<u32> = None;
    let mut variables: Option<Vec<String>> = None;
    let mut order = MonomialOrder::Grevlex;
    let mut ring: Option<Ring> = None;
    let mut ideal_gens: BTreeMap<String, Vec<Polynomial>> = BTreeMap::new();
    let mut canonical: Option<Vec<Polynomial>> = None;
    let mut elements: BTreeMap<String, Polynomial> = BTreeMap::new();
    let mut task: Option<String> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }

        if let Some(header) = line.strip_prefix('[') {
            let header = header
                .strip_suffix(']')
                .ok_or_else(|| fail(lineno, "unterminated block header"))?
                .trim();
            // entering an expression block requires a complete ring
            let needs_ring = !matches!(header, "ring");
            if needs_ring && ring.is_none() {
                if let (Some(p), Some(vars)) = (p, variables.clone()) {
                    ring = Some(RingSpec::new(p, vars, order)?);
                } else {
                    return Err(fail(lineno, "the [ring] block must come first"));
                }
            }
            block = match header {
                "ring" => {
                    if ring.is_some() {
                        return Err(fail(lineno, "[ring] must precede all other blocks"));
                    }
                    Block::Ring
                }
                "canonical" => Block::Canonical,
                "task" => Block::Task,
                other => {
                    if let Some(name) = other.strip_prefix("ideal ") {
                        let name = name.trim();
                        if name.is_empty() {
                            return Err(fail(lineno, "empty ideal name"));
                        }
                        ideal_gens.entry(name.to_string()).or_default();
                        Block::Ideal(name.to_string())
                    } else if let Some(name) = other.strip_prefix("element ") {
                        let name = name.trim();
                        if name.is_empty() {
                            return Err(fail(lineno, "empty element name"));
                        }
                        Block::Element(name.to_string())
                    } else {
                        return Err(fail(lineno, format!("unknown block `[{other}]`")));
                    }
                }
            };
            continue;
        }

        match &block {
            Block::None => return Err(fail(lineno, "content before the first block header")),
            Block::Ring => {
                let (key, value) = line
                    .split_once('=')
                    .ok_or_else(|| fail(lineno, "expected `key = value` in [ring]"))?;
                match key.trim() {
                    "p" => {
                        let v: u32 = value
                            .trim()
                            .parse()
                            .map_err(|_| fail(lineno, "p must be an integer"))?;
                        p = Some(v);
                    }
                    "variables" => {
                        let names: Vec<String> = value
                            .split(',')
                            .map(|s| s.trim().to_string())
                            .filter(|s| !s.is_empty())
                            .collect();
                        variables = Some(names);
                    }
                    "order" => {
                        order = match value.trim() {
                            "grevlex" => MonomialOrder::Grevlex,
                            "lex" => MonomialOrder::Lex,
                            other => {
                                return Err(fail(
                                    lineno,
                                    format!("unknown order `{other}` (grevlex or lex)"),
                                ))
                            }
                        };
                    }
                    other => return Err(fail(lineno, format!("unknown ring key `{other}`"))),
                }
            }
            Block::Ideal(name) => {
                let ring = ring.as_ref().expect("ring set before ideal blocks");
                let f = parse_polynomial(line, ring)
                    .map_err(|e| fail(lineno, format!("in generator: {e}")))?;
                ideal_gens.get_mut(name).unwrap().push(f);
            }
            Block::Canonical => {
                let ring = ring.as_ref().expect("ring set before canonical block");
                let f = parse_polynomial(line, ring)
                    .map_err(|e| fail(lineno, format!("in canonical generator: {e}")))?;
                canonical.get_or_insert_with(Vec::new).push(f);
            }
            Block::Element(name) => {
                let ring = ring.as_ref().expect("ring set before element blocks");
                let f = parse_polynomial(line, ring)
                    .map_err(|e| fail(lineno, format!("in element `{name}`: {e}")))?;
                if elements.insert(name.clone(), f).is_some() {
                    return Err(fail(lineno, format!("element `{name}` defined twice")));
                }
            }
            Block::Task => {
                if task.is_some() {
                    return Err(fail(lineno, "multiple task lines"));
                }
                if !TASKS.contains(&line) {
                    return Err(fail(lineno, format!("unknown task `{line}`")));
                }
                task = Some(line.to_string());
            }
        }
    }

    let ring = match ring {
        Some(r) => r,
        None => match (p, variables) {
            (Some(p), Some(vars)) => RingSpec::new(p, vars, order)?,
            _ => return Err(fail(0, "missing [ring] block with `p` and `variables`")),
        },
    };
    let mut ideals = BTreeMap::new();
    for (name, gens) in ideal_gens {
        ideals.insert(name, Ideal::new(ring.clone(), gens)?);
    }
    Ok(ProblemFile {
        ring,
        ideals,
        canonical,
        elements,
        task,
    })
}
