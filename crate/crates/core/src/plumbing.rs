//! The star-shaped plumbing graph of a Seifert link, its intersection
//! matrix, and DOT export.
//!
//! For normalized invariants with `s` orbits the central vertex has weight
//! `e0 + sum(b_i / a_i) - s`, and arm `i` is the chain `-e_{i,1}, ...,
//! -e_{i,k}` where `a_i / (a_i - b_i) = [e_{i,1}, ..., e_{i,k}]`.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{ncf_evaluate, ncf_expand, symmetric_pivots, ExactError, Rational};
use crate::seifert::SeifertData;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlumbingError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("central weight {0} is not an integer")]
    NonIntegralCentralWeight(Rational),
    #[error("e0 reconstructed from the graph is {from_graph}, Seifert data says {expected}")]
    ReconstructionMismatch {
        from_graph: Box<Rational>,
        expected: Box<Rational>,
    },
    #[error("graph is not a star built from these Seifert invariants")]
    NotAStar,
    #[error("edge ({0}, {1}) is invalid")]
    InvalidEdge(usize, usize),
    #[error("graph is not a tree")]
    NotATree,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlumbingVertex {
    pub id: usize,
    pub weight: BigInt,
    pub genus: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arm {
    /// Index of the Seifert orbit this arm encodes.
    pub orbit: usize,
    /// Vertex ids from the centre outward.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StarLayout {
    pub central: usize,
    pub arms: Vec<Arm>,
}

/// A weighted tree with per-vertex genus. Graphs built by [`star_plumbing`]
/// also carry their [`StarLayout`]; vertex ids are dense, centre first,
/// then the arms in orbit order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlumbingGraph {
    vertices: Vec<PlumbingVertex>,
    edges: Vec<(usize, usize)>,
    star: Option<StarLayout>,
}

impl PlumbingGraph {
    /// A general weighted tree given as `(weight, genus)` per vertex.
    pub fn from_parts(
        vertices: Vec<(BigInt, BigInt)>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self, PlumbingError> {
        let vertices: Vec<PlumbingVertex> = vertices
            .into_iter()
            .enumerate()
            .map(|(id, (weight, genus))| PlumbingVertex { id, weight, genus })
            .collect();
        let graph = PlumbingGraph {
            vertices,
            edges,
            star: None,
        };
        graph.check_tree()?;
        Ok(graph)
    }

    fn check_tree(&self) -> Result<(), PlumbingError> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for &(a, b) in &self.edges {
            if a >= n || b >= n || a == b {
                return Err(PlumbingError::InvalidEdge(a, b));
            }
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            if ra == rb {
                return Err(PlumbingError::NotATree);
            }
            parent[ra] = rb;
        }
        if n > 0 && self.edges.len() != n - 1 {
            return Err(PlumbingError::NotATree);
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[PlumbingVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn star(&self) -> Option<&StarLayout> {
        self.star.as_ref()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn degree(&self, id: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == id || b == id)
            .count()
    }

    pub fn neighbours(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| {
            if a == id {
                Some(b)
            } else if b == id {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Central weight, when this is a star graph.
    pub fn central_weight(&self) -> Option<&BigInt> {
        self.star
            .as_ref()
            .map(|s| &self.vertices[s.central].weight)
    }

    /// Arm weights from the centre outward.
    pub fn arm_weights(&self, arm: &Arm) -> Vec<BigInt> {
        arm.vertices
            .iter()
            .map(|&v| self.vertices[v].weight.clone())
            .collect()
    }

    /// Blow-up at a smooth point of component `id`: a new genus-0 leaf of
    /// weight -1, and the weight of `id` drops by one.
    pub fn blow_up_vertex(&self, id: usize) -> PlumbingGraph {
        let mut g = self.without_layout();
        g.vertices[id].weight -= BigInt::one();
        let new = g.vertices.len();
        g.vertices.push(PlumbingVertex {
            id: new,
            weight: -BigInt::one(),
            genus: BigInt::zero(),
        });
        g.edges.push((id, new));
        g
    }

    /// Blow-up at the intersection point of two adjacent components: a new
    /// weight -1 vertex subdivides the edge and both endpoints drop by one.
    pub fn blow_up_edge(&self, a: usize, b: usize) -> Result<PlumbingGraph, PlumbingError> {
        let mut g = self.without_layout();
        let pos = g
            .edges
            .iter()
            .position(|&e| e == (a, b) || e == (b, a))
            .ok_or(PlumbingError::InvalidEdge(a, b))?;
        g.edges.remove(pos);
        g.vertices[a].weight -= BigInt::one();
        g.vertices[b].weight -= BigInt::one();
        let new = g.vertices.len();
        g.vertices.push(PlumbingVertex {
            id: new,
            weight: -BigInt::one(),
            genus: BigInt::zero(),
        });
        g.edges.push((a, new));
        g.edges.push((new, b));
        Ok(g)
    }

    fn without_layout(&self) -> PlumbingGraph {
        PlumbingGraph {
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
            star: None,
        }
    }
}

pub fn star_plumbing(data: &SeifertData) -> Result<PlumbingGraph, PlumbingError> {
    let s = data.orbits.len();
    let central = data
        .orbits
        .iter()
        .map(|o| Rational::new(o.beta.clone(), o.alpha.clone()))
        .fold(data.e0.clone(), |acc, x| acc + x)
        - Rational::from_integer(s as i64);
    let central = central
        .to_integer()
        .ok_or(PlumbingError::NonIntegralCentralWeight(central.clone()))?;

    let mut vertices = vec![PlumbingVertex {
        id: 0,
        weight: central,
        genus: data.genus.clone(),
    }];
    let mut edges = Vec::new();
    let mut arms = Vec::with_capacity(s);
    for orbit in &data.orbits {
        let expansion = ncf_expand(&orbit.alpha, &(&orbit.alpha - &orbit.beta))?;
        let mut chain = Vec::with_capacity(expansion.len());
        let mut previous = 0;
        for term in expansion.terms() {
            let id = vertices.len();
            vertices.push(PlumbingVertex {
                id,
                weight: -term.clone(),
                genus: BigInt::zero(),
            });
            edges.push((previous, id));
            chain.push(id);
            previous = id;
        }
        arms.push(Arm {
            orbit: orbit.index,
            vertices: chain,
        });
    }
    Ok(PlumbingGraph {
        vertices,
        edges,
        star: Some(StarLayout { central: 0, arms }),
    })
}

/// Symmetric intersection matrix: weights on the diagonal, 1 for each edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionMatrix {
    entries: Vec<Vec<BigInt>>,
}

impl IntersectionMatrix {
    pub fn from_entries(entries: Vec<Vec<BigInt>>) -> Self {
        IntersectionMatrix { entries }
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// `(x^T A y)` for rational vectors.
    pub fn bilinear(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        for (xi, row) in x.iter().zip(&self.entries) {
            if xi.is_zero() {
                continue;
            }
            let row_total: Rational = row
                .iter()
                .zip(y)
                .filter(|(a, _)| !a.is_zero())
                .map(|(a, yj)| Rational::from_integer(a.clone()) * yj)
                .sum();
            total = total + xi * row_total;
        }
        total
    }
}

pub fn intersection_matrix(graph: &PlumbingGraph) -> IntersectionMatrix {
    let n = graph.len();
    let mut entries = vec![vec![BigInt::zero(); n]; n];
    for v in &graph.vertices {
        entries[v.id][v.id] = v.weight.clone();
    }
    for &(a, b) in &graph.edges {
        entries[a][b] += BigInt::one();
        entries[b][a] += BigInt::one();
    }
    IntersectionMatrix { entries }
}

/// Exact test: every leading principal minor of `-A` is positive. Minors are
/// taken in minimum-degree elimination order; definiteness does not depend
/// on the ordering.
pub fn is_negative_definite(matrix: &IntersectionMatrix) -> bool {
    match symmetric_pivots(&matrix.entries) {
        Ok(pivots) => pivots.len() == matrix.size() && pivots.iter().all(Rational::is_negative),
        Err(_) => false,
    }
}

/// `e0 = c + sum((a_i - b_i) / a_i)` with each `(a_i - b_i)/a_i` read back
/// from the arm weights as the inverse of their continued fraction.
pub fn e0_from_graph(graph: &PlumbingGraph, data: &SeifertData) -> Result<Rational, PlumbingError> {
    let star = graph.star.as_ref().ok_or(PlumbingError::NotAStar)?;
    if star.arms.len() != data.orbits.len() {
        return Err(PlumbingError::NotAStar);
    }
    let mut e0 = Rational::from_integer(graph.vertices[star.central].weight.clone());
    for arm in &star.arms {
        let terms = graph.arm_weights(arm).into_iter().map(|w| -w).collect();
        let expansion = crate::exact::NcfExpansion::new(terms)?;
        e0 = e0 + ncf_evaluate(&expansion).recip();
    }
    if e0 != data.e0 {
        return Err(PlumbingError::ReconstructionMismatch {
            from_graph: Box::new(e0),
            expected: Box::new(data.e0.clone()),
        });
    }
    Ok(e0)
}

fn vertex_label(v: &PlumbingVertex) -> String {
    if v.genus.is_zero() {
        format!("{}", v.weight)
    } else {
        format!("{} [g={}]", v.weight, v.genus)
    }
}

/// Graphviz rendering; vertices in id order, so the centre comes first and
/// arms follow in orbit order.
pub fn to_dot(graph: &PlumbingGraph) -> String {
    let mut out = String::from("graph plumbing {\n  node [shape=circle];\n");
    for v in &graph.vertices {
        let _ = writeln!(out, "  v{} [label=\"{}\"];", v.id, vertex_label(v));
    }
    for &(a, b) in &graph.edges {
        let _ = writeln!(out, "  v{a} -- v{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::germ::validate;
    use crate::seifert::seifert_invariants;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn graph(p: u32, q: u32, r: u32) -> (PlumbingGraph, SeifertData) {
        let data = seifert_invariants(&validate(p, q, r).unwrap()).unwrap();
        (star_plumbing(&data).unwrap(), data)
    }

    fn arms(g: &PlumbingGraph) -> Vec<Vec<i64>> {
        g.star()
            .unwrap()
            .arms
            .iter()
            .map(|a| {
                g.arm_weights(a)
                    .iter()
                    .map(|w| i64::try_from(w).unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn cusp_family_graph() {
        for r in 3..8i64 {
            let (g, _) = graph(2, 3, r as u32);
            assert_eq!(g.central_weight(), Some(&big(-1)));
            assert_eq!(
                arms(&g),
                [vec![-3 * r], vec![-2 * r], vec![-2; (r - 1) as usize]]
            );
            assert_eq!(g.len(), 1 + 2 + (r as usize - 1));
        }
    }

    #[test]
    fn r_equals_2_graphs() {
        let (g, _) = graph(2, 5, 2);
        assert_eq!(g.central_weight(), Some(&big(-2)));
        assert_eq!(arms(&g), [vec![-2, -2, -4], vec![-2, -2, -2], vec![-2]]);
        let (g, _) = graph(2, 3, 2);
        assert_eq!(g.central_weight(), Some(&big(-1)));
        assert_eq!(arms(&g), [vec![-6], vec![-4], vec![-2]]);
    }

    #[test]
    fn delta_three_graph() {
        let (g, data) = graph(2, 5, 3);
        assert_eq!(g.central_weight(), Some(&big(-1)));
        assert_eq!(g.vertices()[0].genus, big(1));
        assert_eq!(arms(&g), [vec![-5], vec![-2]]);
        assert_eq!(e0_from_graph(&g, &data).unwrap(), Rational::new(-3, 10));
    }

    #[test]
    fn matrices() {
        let single = PlumbingGraph::from_parts(vec![(big(-1), big(0))], vec![]).unwrap();
        let m = intersection_matrix(&single);
        assert_eq!(m.entries(), &[vec![big(-1)]]);
        assert!(is_negative_definite(&m));

        let (g, _) = graph(2, 3, 2);
        let m = intersection_matrix(&g);
        assert_eq!(m.size(), 4);
        assert_eq!(m.entries()[0], [-1, 1, 1, 1].map(big));
        assert_eq!(
            (1..4).map(|i| m.entries()[i][i].clone()).collect::<Vec<_>>(),
            [-6, -4, -2].map(big)
        );
        assert!(is_negative_definite(&m));

        let (g, _) = graph(2, 3, 3);
        let m = intersection_matrix(&g);
        assert_eq!(m.size(), 5);
        assert!(is_negative_definite(&m));
    }

    #[test]
    fn definiteness_negatives() {
        let plus = IntersectionMatrix::from_entries(vec![vec![big(1)]]);
        assert!(!is_negative_definite(&plus));
        let singular =
            IntersectionMatrix::from_entries(vec![vec![big(-1), big(1)], vec![big(1), big(-1)]]);
        assert!(!is_negative_definite(&singular));
    }

    #[test]
    fn e0_reconstruction() {
        for (p, q, r, e0) in [(2, 3, 7, Rational::new(-1, 42)), (2, 5, 2, Rational::new(-1, 20))] {
            let (g, data) = graph(p, q, r);
            assert_eq!(e0_from_graph(&g, &data).unwrap(), e0);
        }
        let (g, mut data) = graph(2, 3, 5);
        data.e0 = -data.e0;
        assert!(matches!(
            e0_from_graph(&g, &data),
            Err(PlumbingError::ReconstructionMismatch { .. })
        ));
    }

    #[test]
    fn non_integral_centre_is_rejected() {
        let (_, mut data) = graph(2, 3, 5);
        data.e0 = Rational::new(-1, 29);
        assert!(matches!(
            star_plumbing(&data),
            Err(PlumbingError::NonIntegralCentralWeight(_))
        ));
    }

    #[test]
    fn dot_output() {
        let single = PlumbingGraph::from_parts(vec![(big(-1), big(0))], vec![]).unwrap();
        let dot = to_dot(&single);
        assert!(dot.contains("v0 [label=\"-1\"];"));
        let (g, _) = graph(2, 3, 2);
        let dot = to_dot(&g);
        assert_eq!(dot.matches("[label=").count(), 4);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(dot, to_dot(&g));
        let (g, _) = graph(2, 5, 3);
        assert!(to_dot(&g).contains("[label=\"-1 [g=1]\"]"));
    }

    #[test]
    fn tree_validation() {
        let v = || vec![(big(-2), big(0)); 3];
        assert!(PlumbingGraph::from_parts(v(), vec![(0, 1), (1, 2)]).is_ok());
        assert_eq!(
            PlumbingGraph::from_parts(v(), vec![(0, 1), (1, 0)]),
            Err(PlumbingError::NotATree)
        );
        assert_eq!(
            PlumbingGraph::from_parts(v(), vec![(0, 1)]),
            Err(PlumbingError::NotATree)
        );
        assert_eq!(
            PlumbingGraph::from_parts(v(), vec![(0, 1), (1, 5)]),
            Err(PlumbingError::InvalidEdge(1, 5))
        );
    }

    #[test]
    fn blow_ups() {
        let (g, _) = graph(2, 3, 2);
        let b = g.blow_up_vertex(2);
        assert_eq!(b.len(), 5);
        assert_eq!(b.vertices()[2].weight, big(-5));
        assert_eq!(b.vertices()[4].weight, big(-1));
        let e = g.blow_up_edge(0, 1).unwrap();
        assert_eq!(e.vertices()[0].weight, big(-2));
        assert_eq!(e.vertices()[1].weight, big(-7));
        assert_eq!(e.edges().len(), 4);
        assert!(g.blow_up_edge(1, 2).is_err());
    }
}
