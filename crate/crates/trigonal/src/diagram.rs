//! The two intersection diagrams on 2g+2 vertices and their mod-2 forms.
//!
//! * [`chain_diagram`] — vertices 1..2g+2 in a row, an edge whenever the
//!   labels differ by 1 or 2 (a chain with second-neighbour chords). Only
//!   defined for g ≡ 1 (mod 3).
//! * [`ladder_graph`] — two rows of g+1 vertices (bottom 1..g+1, top
//!   g+2..2g+2) with both row paths, all verticals {i, g+1+i}, and the
//!   diagonals {i, g+2+i}.
//!
//! Vertices are 1-based to match the generator labels built on them; vertex
//! i corresponds to GF(2) coordinate i−1. Every vertex is a vanishing cycle,
//! so the associated quadratic space has q ≡ 1 on the vertex basis and the
//! adjacency matrix as its Gram pairing.

use std::collections::BTreeSet;

use crate::f2::{F2Mat, F2Vec, QuadSpace};
use crate::{Error, Result};

/// Finite simple graph on vertices 1..=n with a 1-based edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Diagram {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            assert!(a != b, "loop at vertex {a}");
            assert!(
                (1..=n).contains(&a) && (1..=n).contains(&b),
                "edge ({a},{b}) out of range for {n} vertices"
            );
            set.insert((a.min(b), a.max(b)));
        }
        Diagram { n, edges: set }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        assert!(
            (1..=self.n).contains(&a) && (1..=self.n).contains(&b),
            "vertex pair ({a},{b}) out of range for {} vertices",
            self.n
        );
        a != b && self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Adjacency matrix over GF(2); vertex i sits at row/column i−1.
    pub fn gram_mod2(&self) -> F2Mat {
        let mut m = F2Mat::zeros(self.n, self.n);
        for &(a, b) in &self.edges {
            m.set(a - 1, b - 1, true);
            m.set(b - 1, a - 1, true);
        }
        m
    }

    /// The vanishing-cycle quadratic space: adjacency pairing, q ≡ 1 on the
    /// vertex basis.
    pub fn quad_space(&self) -> QuadSpace {
        let qdiag = F2Vec::from_support(self.n, &(0..self.n).collect::<Vec<_>>());
        QuadSpace::new(self.gram_mod2(), qdiag).expect("adjacency matrix is symmetric with zero diagonal")
    }

    /// Parity of |S| + #edges inside S — the mod-2 Euler number of the full
    /// subgraph on S (1-based vertex set). Equals q of the indicator vector.
    pub fn subgraph_euler(&self, support: &[usize]) -> bool {
        let set: BTreeSet<usize> = support.iter().copied().collect();
        assert_eq!(set.len(), support.len(), "subgraph support has repeated vertices");
        assert!(
            set.iter().all(|v| (1..=self.n).contains(v)),
            "subgraph support out of range for {} vertices",
            self.n
        );
        let inner = self
            .edges
            .iter()
            .filter(|(a, b)| set.contains(a) && set.contains(b))
            .count();
        (set.len() + inner) % 2 == 1
    }

    /// All triangles {i < j < k}, lexicographically sorted.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if !self.has_edge(i, j) {
                    continue;
                }
                for k in j + 1..=self.n {
                    if self.has_edge(i, k) && self.has_edge(j, k) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }
}

/// Which of the two diagrams (and hence generator families) to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramStyle {
    /// Chain-with-chords diagram; generators written t1..t(2g+2).
    Trigonal,
    /// Two-row ladder graph; generators written T1..T(2g+2).
    Weierstrass,
}

impl DiagramStyle {
    pub fn build(self, g: u64) -> Result<Diagram> {
        match self {
            DiagramStyle::Trigonal => chain_diagram(g),
            DiagramStyle::Weierstrass => ladder_graph(g),
        }
    }

    /// Prefix for generator names in rendered output.
    pub fn prefix(self) -> char {
        match self {
            DiagramStyle::Trigonal => 't',
            DiagramStyle::Weierstrass => 'T',
        }
    }
}

fn require_chain_genus(g: u64) -> Result<usize> {
    if g < 1 || g % 3 != 1 {
        return Err(Error::InvalidGenus {
            g,
            reason: "chain diagram needs g ≡ 1 (mod 3), g ≥ 1",
        });
    }
    Ok(2 * g as usize + 2)
}

/// Chain with chords: vertices 1..2g+2, edges {i,j} for |i−j| ∈ {1,2}.
pub fn chain_diagram(g: u64) -> Result<Diagram> {
    let n = require_chain_genus(g)?;
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=(i + 2).min(n) {
            edges.push((i, j));
        }
    }
    Ok(Diagram::new(n, edges))
}

/// Two-row ladder with diagonals: bottom path 1..g+1, top path g+2..2g+2,
/// verticals {i, g+1+i}, diagonals {i, g+2+i}.
pub fn ladder_graph(g: u64) -> Result<Diagram> {
    if g < 1 {
        return Err(Error::InvalidGenus {
            g,
            reason: "ladder graph needs g ≥ 1",
        });
    }
    let g = g as usize;
    let n = 2 * g + 2;
    let mut edges = Vec::new();
    for i in 1..=g {
        edges.push((i, i + 1)); // bottom path
        edges.push((g + 1 + i, g + 2 + i)); // top path
        edges.push((i, g + 2 + i)); // diagonal
    }
    for i in 1..=g + 1 {
        edges.push((i, g + 1 + i)); // vertical
    }
    Ok(Diagram::new(n, edges))
}

/// The two canonical generators of the mod-2 radical of either diagram's
/// pairing, as indicator vectors (coordinate i−1 for vertex i):
/// r1 on {i ≤ 2g+2 : i ≡ 1 mod 3}, r2 on {i ≤ 2g+1 : i mod 6 ∈ {1,2,3}}.
pub fn radical_generators(g: u64) -> Result<(F2Vec, F2Vec)> {
    let n = require_chain_genus(g)?;
    let s1: Vec<usize> = (1..=n).filter(|i| i % 3 == 1).map(|i| i - 1).collect();
    let s2: Vec<usize> = (1..=n - 1).filter(|i| matches!(i % 6, 1..=3)).map(|i| i - 1).collect();
    Ok((F2Vec::from_support(n, &s1), F2Vec::from_support(n, &s2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn chain_diagram_small() {
        let d = chain_diagram(1).unwrap();
        assert_eq!(d.n(), 4);
        let edges: Vec<_> = d.edges().collect();
        assert_eq!(edges, vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(chain_diagram(4).unwrap().edge_count(), 17);
        for g in [0, 2, 3, 5, 6] {
            assert!(chain_diagram(g).is_err(), "g={g} must be rejected");
        }
    }

    #[test]
    fn ladder_graph_small() {
        let d = ladder_graph(1).unwrap();
        assert_eq!(d.n(), 4);
        let edges: Vec<_> = d.edges().collect();
        assert_eq!(edges, vec![(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]);
        assert!(ladder_graph(0).is_err());
    }

    #[test]
    fn both_diagrams_have_4g_plus_1_edges_and_rank_2g() {
        for g in [1u64, 4, 7] {
            let c = chain_diagram(g).unwrap();
            let l = ladder_graph(g).unwrap();
            assert_eq!(c.edge_count() as u64, 4 * g + 1);
            assert_eq!(l.edge_count() as u64, 4 * g + 1);
            assert_eq!(c.gram_mod2().rank() as u64, 2 * g);
            assert_eq!(l.gram_mod2().rank() as u64, 2 * g);
        }
    }

    #[test]
    fn radical_generator_supports() {
        let (r1, r2) = radical_generators(1).unwrap();
        assert_eq!(r1.support(), vec![0, 3]);
        assert_eq!(r2.support(), vec![0, 1, 2]);
        let (r1, r2) = radical_generators(4).unwrap();
        assert_eq!(r1.support(), vec![0, 3, 6, 9]);
        assert_eq!(r2.support(), vec![0, 1, 2, 6, 7, 8]);
        let (r1, r2) = radical_generators(7).unwrap();
        assert_eq!(r1.support(), vec![0, 3, 6, 9, 12, 15]);
        assert_eq!(r2.support(), vec![0, 1, 2, 6, 7, 8, 12, 13, 14]);
    }

    #[test]
    fn radical_generators_span_chain_radical() {
        for g in [1u64, 4] {
            let (r1, r2) = radical_generators(g).unwrap();
            let qs = chain_diagram(g).unwrap().quad_space();
            let quot = qs.quotient_by_radical(&[r1, r2]).unwrap();
            assert_eq!(quot.space.dim() as u64, 2 * g);
            // the two highest vertices are the eliminated coordinates
            assert_eq!(quot.dropped, vec![2 * g as usize, 2 * g as usize + 1]);
        }
    }

    #[test]
    fn ladder_radical_is_two_dimensional_and_isotropic() {
        for g in [1u64, 4] {
            let qs = ladder_graph(g).unwrap().quad_space();
            let rad = qs.radical();
            assert_eq!(rad.len(), 2);
            for v in &rad {
                assert!(!qs.q(v), "q must vanish on the ladder radical at g={g}");
            }
            let quot = qs.quotient_by_radical(&rad).unwrap();
            assert_eq!(quot.space.dim() as u64, 2 * g);
        }
    }

    #[test]
    fn triangle_enumeration() {
        let chain = chain_diagram(4).unwrap();
        let expect: Vec<_> = (1..=8).map(|i| (i, i + 1, i + 2)).collect();
        assert_eq!(chain.triangles(), expect);
        let ladder = ladder_graph(1).unwrap();
        assert_eq!(ladder.triangles(), vec![(1, 2, 4), (1, 3, 4)]);
        assert_eq!(ladder_graph(4).unwrap().triangles().len(), 8);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn subgraph_support_out_of_range_panics() {
        chain_diagram(1).unwrap().subgraph_euler(&[5]);
    }

    proptest! {
        #[test]
        fn subgraph_euler_equals_q_of_indicator(bits in proptest::collection::vec(any::<bool>(), 10)) {
            let d = chain_diagram(4).unwrap();
            let qs = d.quad_space();
            let support: Vec<usize> = (1..=10).filter(|&i| bits[i - 1]).collect();
            let indicator: Vec<usize> = support.iter().map(|&i| i - 1).collect();
            let v = crate::f2::F2Vec::from_support(10, &indicator);
            prop_assert_eq!(d.subgraph_euler(&support), qs.q(&v));
        }
    }
}
