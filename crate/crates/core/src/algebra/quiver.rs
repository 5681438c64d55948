use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    /// 0-based source vertex.
    pub source: usize,
    /// 0-based target vertex.
    pub target: usize,
}

/// A finite quiver. Vertices are `0..vertex_count` internally and printed 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self, AlgebraError> {
        if vertex_count == 0 {
            return Err(AlgebraError::InvalidQuiver("a quiver needs at least one vertex".into()));
        }
        let mut seen = HashSet::new();
        for a in &arrows {
            if !seen.insert(a.name.as_str()) {
                return Err(AlgebraError::InvalidQuiver(format!("duplicate arrow name `{}`", a.name)));
            }
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(AlgebraError::InvalidQuiver(format!(
                    "arrow `{}` has an endpoint outside 1..{}",
                    a.name, vertex_count
                )));
            }
        }
        Ok(Quiver { vertex_count, arrows })
    }

    /// Convenience constructor from 1-based `(name, source, target)` triples.
    pub fn from_labels(vertex_count: usize, arrows: &[(&str, usize, usize)]) -> Result<Self, AlgebraError> {
        let arrows = arrows
            .iter()
            .map(|&(name, s, t)| {
                if s == 0 || t == 0 {
                    return Err(AlgebraError::InvalidQuiver(format!("arrow `{name}`: vertices are 1-based")));
                }
                Ok(Arrow {
                    name: name.to_string(),
                    source: s - 1,
                    target: t - 1,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Quiver::new(vertex_count, arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: usize) -> &Arrow {
        &self.arrows[id]
    }

    pub fn arrow_id(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same vertices, every arrow reversed (names and order kept).
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertex_count: self.vertex_count,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A path in the quiver, composed left to right: `a*b` means `a` first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            arrows: Vec::new(),
        }
    }

    #[allow(clippy::len_without_is_empty)] // `is_trivial` plays that role
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.source, |&a| q.arrow(a).target)
    }

    /// `self` followed by `other`; `None` when not composable.
    pub fn concat(&self, other: &Path, q: &Quiver) -> Option<Path> {
        if self.target(q) != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            arrows,
        })
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver: q }
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            write!(f, "e{}", self.source + 1)
        } else {
            write!(f, "{:?}", self.arrows)
        }
    }
}

/// Length first, then arrow sequence, then source vertex.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.arrows.is_empty() {
            return write!(f, "e{}", self.path.source + 1);
        }
        for (i, &a) in self.path.arrows.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(&self.quiver.arrow(a).name)?;
        }
        Ok(())
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    /// Nonzero reduced coefficients paired with arrow-id sequences.
    pub terms: Vec<(u32, Vec<usize>)>,
}

impl Relation {
    /// Validates composability and parallelism and merges repeated paths.
    /// Coefficients are reduced mod `p`; zero terms are dropped.
    pub fn new(terms: Vec<(i64, Vec<usize>)>, quiver: &Quiver, p: u32) -> Result<Self, AlgebraError> {
        let mut merged: Vec<(u32, Vec<usize>)> = Vec::new();
        let mut ends: Option<(usize, usize)> = None;
        for (c, arrows) in terms {
            if arrows.len() < 2 {
                return Err(AlgebraError::InvalidRelation(
                    "relation paths must have length at least 2".into(),
                ));
            }
            if let Some(&bad) = arrows.iter().find(|&&a| a >= quiver.arrows().len()) {
                return Err(AlgebraError::InvalidRelation(format!("unknown arrow id {bad}")));
            }
            for w in arrows.windows(2) {
                if quiver.arrow(w[0]).target != quiver.arrow(w[1]).source {
                    return Err(AlgebraError::InvalidRelation(format!(
                        "`{}` then `{}` is not composable",
                        quiver.arrow(w[0]).name,
                        quiver.arrow(w[1]).name
                    )));
                }
            }
            let st = (
                quiver.arrow(arrows[0]).source,
                quiver.arrow(*arrows.last().unwrap()).target,
            );
            match ends {
                None => ends = Some(st),
                Some(e) if e != st => {
                    return Err(AlgebraError::InvalidRelation(
                        "relation paths are not parallel".into(),
                    ))
                }
                _ => {}
            }
            let c = crate::linalg::reduce_i64(c, p);
            if let Some(slot) = merged.iter_mut().find(|(_, a)| *a == arrows) {
                slot.0 = crate::linalg::add_mod(slot.0, c, p);
            } else {
                merged.push((c, arrows));
            }
        }
        merged.retain(|(c, _)| *c != 0);
        if merged.is_empty() {
            return Err(AlgebraError::InvalidRelation("relation is zero".into()));
        }
        Ok(Relation { terms: merged })
    }

    pub fn source(&self, q: &Quiver) -> usize {
        q.arrow(self.terms[0].1[0]).source
    }

    pub fn target(&self, q: &Quiver) -> usize {
        q.arrow(*self.terms[0].1.last().unwrap()).target
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, a)| a.len()).min().unwrap_or(0)
    }

    /// Every path read backwards, for the opposite algebra.
    pub fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, a)| (*c, a.iter().rev().copied().collect()))
                .collect(),
        }
    }
}
