//! Oriented Dutch windmill digraphs and their serializations.
//!
//! `D^m_n` is `m` directed `n`-cycles glued at a common hub. Vertex labels
//! are 1-based and the hub is vertex 1. Cycle `k` (1-based) visits
//! `1, (k−1)(n−1)+2, …, (k−1)(n−1)+n` and returns to the hub.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WindmillParams {
    m: usize,
    n: usize,
}

impl WindmillParams {
    /// `m` cycle copies of length `n`; requires `m ≥ 1` and `n ≥ 3`.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams {
                m,
                n,
                reason: "cycle length n must be at least 3",
            });
        }
        if m < 1 {
            return Err(Error::InvalidParams {
                m,
                n,
                reason: "at least one cycle (m >= 1) is required",
            });
        }
        Ok(WindmillParams { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.m * (self.n - 1) + 1
    }

    pub fn edge_count(&self) -> usize {
        self.m * self.n
    }

    /// Label of the `position`-th vertex of cycle `k`, for `position ∈ {2, …, n}`.
    pub(crate) fn label(&self, k: usize, position: usize) -> usize {
        (k - 1) * (self.n - 1) + position
    }
}

/// A directed graph on vertices `1..=vertex_count` with an explicit edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let edges: BTreeSet<_> = edges.into_iter().collect();
        for &(a, b) in &edges {
            for label in [a, b] {
                if label == 0 || label > vertex_count {
                    return Err(Error::InvalidVertex {
                        label,
                        vertex_count,
                    });
                }
            }
        }
        Ok(Digraph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges in lexicographic `(from, to)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.contains(&(from, to))
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.range((v, 0)..(v + 1, 0)).map(|&(_, b)| b)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.successors(v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(_, b)| b == v).count()
    }

    pub fn check_vertex(&self, label: usize) -> Result<()> {
        if (1..=self.vertex_count).contains(&label) {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                label,
                vertex_count: self.vertex_count,
            })
        }
    }

    /// Renames vertex `v` to `relabel[v - 1]`. `relabel` must be a permutation
    /// of `1..=vertex_count`.
    pub fn relabel(&self, relabel: &[usize]) -> Result<Self> {
        let zero_based: Vec<usize> = relabel.iter().map(|&v| v.wrapping_sub(1)).collect();
        if relabel.len() != self.vertex_count || Matrix::permutation(&zero_based).is_err() {
            return Err(Error::Malformed(format!(
                "{relabel:?} is not a permutation of 1..={}",
                self.vertex_count
            )));
        }
        Digraph::new(
            self.vertex_count,
            self.edges
                .iter()
                .map(|&(a, b)| (relabel[a - 1], relabel[b - 1])),
        )
    }

    /// 0/1 adjacency matrix; row and column `i − 1` belong to vertex `i`.
    pub fn adjacency_matrix(&self) -> Matrix {
        let n = self.vertex_count;
        let mut rows = vec![vec![Rational::from_integer(0.into()); n]; n];
        for &(a, b) in &self.edges {
            rows[a - 1][b - 1] = Rational::one();
        }
        Matrix::from_rows(rows).expect("rows are uniform")
    }

    /// Graphviz DOT text with nodes and edges in sorted order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {name} {{").unwrap();
        for v in 1..=self.vertex_count {
            writeln!(out, "    {v};").unwrap();
        }
        for (a, b) in self.edges() {
            writeln!(out, "    {a} -> {b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Builds `D^m_n` from the three edge families: hub to the first vertex of
/// each cycle, the chain inside each cycle, and the last vertex back to the hub.
pub fn build_windmill(p: WindmillParams) -> Digraph {
    let mut edges = BTreeSet::new();
    for k in 1..=p.m {
        edges.insert((1, p.label(k, 2)));
        for i in 2..p.n {
            edges.insert((p.label(k, i), p.label(k, i + 1)));
        }
        edges.insert((p.label(k, p.n), 1));
    }
    Digraph {
        vertex_count: p.vertex_count(),
        edges,
    }
}

/// Cycle `C^k` of a windmill.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    /// Closed vertex sequence starting and ending at the hub.
    pub walk: Vec<usize>,
    /// The vertex set `V^k`.
    pub vertices: BTreeSet<usize>,
}

pub fn cycle_vertices(p: WindmillParams, k: usize) -> Result<Cycle> {
    if !(1..=p.m).contains(&k) {
        return Err(Error::CycleOutOfRange { k, m: p.m });
    }
    let mut walk = vec![1];
    walk.extend((2..=p.n).map(|i| p.label(k, i)));
    walk.push(1);
    let vertices = walk.iter().copied().collect();
    Ok(Cycle { walk, vertices })
}

pub fn export_dot(g: &Digraph) -> String {
    g.to_dot("G")
}

/// Graph JSON: `{"m", "n", "vertices", "edges"}` with edges sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub m: usize,
    pub n: usize,
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn windmill(p: WindmillParams) -> Self {
        let g = build_windmill(p);
        GraphJson {
            m: p.m,
            n: p.n,
            vertices: g.vertex_count(),
            edges: g.edges().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_digraph(&self) -> Result<Digraph> {
        Digraph::new(self.vertices, self.edges.iter().map(|&[a, b]| (a, b)))
    }
}
