//! Matrix-free walk counting and enumeration.
//!
//! Everything here works on the edge set directly, so it can serve as an
//! independent check of statements about powers of the adjacency matrix.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, WindmillParams};
use crate::matrix::{Matrix, Rational};

/// Default number of walks [`enumerate_walks`] lists before reporting truncation.
pub const DEFAULT_WALK_CAP: usize = 10_000;

/// A vertex sequence `⟨v₁, …, v_r⟩` of length `r − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Walk {
    vertices: Vec<usize>,
}

// A walk always has at least one vertex; `is_trivial` plays the role of `is_empty`.
#[allow(clippy::len_without_is_empty)]
impl Walk {
    /// Checks that every consecutive pair is an edge of `g`.
    pub fn new(g: &Digraph, vertices: Vec<usize>) -> Result<Self> {
        let Some(&first) = vertices.first() else {
            return Err(Error::Malformed("a walk has at least one vertex".into()));
        };
        g.check_vertex(first)?;
        if let Some(w) = vertices.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(Error::Malformed(format!(
                "({}, {}) is not an edge",
                w[0], w[1]
            )));
        }
        Ok(Walk { vertices })
    }

    pub fn trivial(v: usize) -> Self {
        Walk { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("walks are nonempty")
    }

    /// Number of edges traversed.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_trivial(&self) -> bool {
        self.vertices.len() == 1
    }

    /// The concatenation that traverses `self` and then `next`; `None` unless
    /// `next` starts where `self` ends.
    pub fn then(&self, next: &Walk) -> Option<Walk> {
        (self.end() == next.start()).then(|| {
            let mut vertices = self.vertices.clone();
            vertices.extend_from_slice(&next.vertices[1..]);
            Walk { vertices }
        })
    }
}

/// Number of walks with exactly `len` edges from `i` to `j`.
pub fn count_walks(g: &Digraph, i: usize, j: usize, len: usize) -> Result<BigUint> {
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    Ok(walks_to(g, j, len).pop().expect("len + 1 layers")[i - 1].clone())
}

/// Matrix of walk counts; entry `(i, j)` counts walks of length `len` from `i` to `j`.
pub fn count_walks_matrix(g: &Digraph, len: usize) -> Matrix {
    count_walks_matrices(g, len)
        .pop()
        .expect("len + 1 matrices")
}

/// Walk-count matrices for every length `0..=max_len`, extending each walk
/// by one edge at a time.
pub fn count_walks_matrices(g: &Digraph, max_len: usize) -> Vec<Matrix> {
    let n = g.vertex_count();
    let mut counts: Vec<Vec<BigUint>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigUint::one()
                    } else {
                        BigUint::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut out = Vec::with_capacity(max_len + 1);
    out.push(to_matrix(&counts));
    for _ in 0..max_len {
        let mut next = vec![vec![BigUint::zero(); n]; n];
        for (row, next_row) in counts.iter().zip(&mut next) {
            for (a, b) in g.edges() {
                if !row[a - 1].is_zero() {
                    next_row[b - 1] += &row[a - 1];
                }
            }
        }
        counts = next;
        out.push(to_matrix(&counts));
    }
    out
}

fn to_matrix(counts: &[Vec<BigUint>]) -> Matrix {
    Matrix::from_rows(
        counts
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| Rational::from_integer(c.clone().into()))
                    .collect()
            })
            .collect(),
    )
    .expect("rows are uniform")
}

/// `layers[r][v − 1]` = number of walks of length `r` from `v` to `target`.
fn walks_to(g: &Digraph, target: usize, len: usize) -> Vec<Vec<BigUint>> {
    let n = g.vertex_count();
    let mut layer = vec![BigUint::zero(); n];
    layer[target - 1] = BigUint::one();
    let mut layers = vec![layer];
    for r in 1..=len {
        let prev = &layers[r - 1];
        let mut next = vec![BigUint::zero(); n];
        for (a, b) in g.edges() {
            if !prev[b - 1].is_zero() {
                next[a - 1] += &prev[b - 1];
            }
        }
        layers.push(next);
    }
    layers
}

/// Walks listed by [`enumerate_walks`], in the walk-list JSON layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkList {
    pub from: usize,
    pub to: usize,
    pub length: usize,
    pub walks: Vec<Walk>,
    pub truncated: bool,
}

/// All walks of length `len` from `i` to `j` in lexicographic order, stopping
/// after `cap` walks. `truncated` is set when more walks exist than were listed.
pub fn enumerate_walks(
    g: &Digraph,
    i: usize,
    j: usize,
    len: usize,
    cap: usize,
) -> Result<WalkList> {
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    if cap == 0 {
        return Err(Error::ZeroCap);
    }
    // Only descend into vertices that can still reach j in the remaining steps.
    let reach = walks_to(g, j, len);
    let mut walks = Vec::new();
    let mut truncated = false;
    if !reach[len][i - 1].is_zero() {
        let mut path = vec![i];
        extend_walks(g, &reach, &mut path, len, cap, &mut walks, &mut truncated);
    }
    Ok(WalkList {
        from: i,
        to: j,
        length: len,
        walks,
        truncated,
    })
}

fn extend_walks(
    g: &Digraph,
    reach: &[Vec<BigUint>],
    path: &mut Vec<usize>,
    remaining: usize,
    cap: usize,
    out: &mut Vec<Walk>,
    truncated: &mut bool,
) {
    if remaining == 0 {
        if out.len() == cap {
            *truncated = true;
        } else {
            out.push(Walk {
                vertices: path.clone(),
            });
        }
        return;
    }
    let here = *path.last().expect("path is nonempty");
    for next in g.successors(here) {
        if *truncated {
            return;
        }
        if reach[remaining - 1][next - 1].is_zero() {
            continue;
        }
        path.push(next);
        extend_walks(g, reach, path, remaining - 1, cap, out, truncated);
        path.pop();
    }
}

/// A shortest walk from `i` to `j` (BFS, ties broken by smallest label), or
/// `None` when `j` is unreachable.
pub fn shortest_walk(g: &Digraph, i: usize, j: usize) -> Result<Option<Walk>> {
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    let mut parent: Vec<Option<usize>> = vec![None; g.vertex_count() + 1];
    parent[i] = Some(i);
    let mut queue = VecDeque::from([i]);
    while let Some(v) = queue.pop_front() {
        if v == j {
            let mut vertices = vec![j];
            let mut cur = j;
            while cur != i {
                cur = parent[cur].expect("visited");
                vertices.push(cur);
            }
            vertices.reverse();
            return Ok(Some(Walk { vertices }));
        }
        for s in g.successors(v) {
            if parent[s].is_none() {
                parent[s] = Some(v);
                queue.push_back(s);
            }
        }
    }
    Ok(None)
}

pub fn shortest_walk_length(g: &Digraph, i: usize, j: usize) -> Result<Option<usize>> {
    Ok(shortest_walk(g, i, j)?.map(|w| w.len()))
}

/// Which family a position of the length-`(n−1)` walk pattern belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SupportCase {
    /// `i = 1`, `j` the last vertex of some cycle.
    HubToCycleEnd,
    /// `i` the first vertex of some cycle, `j = 1`.
    CycleStartToHub,
    /// `i` at position `ℓ ≥ 3` of a cycle, `j = i − 1` in the same cycle.
    StepBackSameCycle,
    /// `i` at position `ℓ ≥ 3` of cycle `k`, `j` at position `ℓ − 1` of cycle `r ≠ k`.
    StepBackOtherCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SupportEntry {
    pub row: usize,
    pub col: usize,
    pub case: SupportCase,
}

/// Predicted endpoints of walks of length `n − 1` in `D^m_n`, tagged with the
/// case that produces each, sorted by `(row, col)`.
pub fn windmill_support_cases(p: WindmillParams) -> Vec<SupportEntry> {
    let (m, n) = (p.m(), p.n());
    let mut out = Vec::with_capacity(2 * m + m * m * (n - 2));
    for k in 1..=m {
        out.push(SupportEntry {
            row: 1,
            col: p.label(k, n),
            case: SupportCase::HubToCycleEnd,
        });
        out.push(SupportEntry {
            row: p.label(k, 2),
            col: 1,
            case: SupportCase::CycleStartToHub,
        });
        for l in 3..=n {
            let i = p.label(k, l);
            out.push(SupportEntry {
                row: i,
                col: i - 1,
                case: SupportCase::StepBackSameCycle,
            });
            for r in (1..=m).filter(|&r| r != k) {
                out.push(SupportEntry {
                    row: i,
                    col: p.label(r, l - 1),
                    case: SupportCase::StepBackOtherCycle,
                });
            }
        }
    }
    out.sort();
    out
}

/// The `(i, j)` pairs of [`windmill_support_cases`].
pub fn windmill_length_n_minus_1_support(p: WindmillParams) -> Vec<(usize, usize)> {
    windmill_support_cases(p)
        .into_iter()
        .map(|e| (e.row, e.col))
        .collect()
}
