//! Plumbing-graph calculus on weighted trees: intersection matrices,
//! determinants and definiteness, the positive-solution test for
//! concavity, conversions between star-shaped graphs and Seifert data,
//! and minimal resolution graphs of one-Puiseux-pair cusps.

use num_traits::{One, Signed, Zero};

use crate::arith::{continuant_pair, int, neg_cf, solve_rational, IntMatrix, Integer, Rational};
use crate::cuspidal::dual_pair;
use crate::seifert::{NormalForm, SeifertData};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub weight: Integer,
    pub label: Option<String>,
}

/// A weighted tree. Vertices are indexed in insertion order; edges are
/// unordered pairs of distinct indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

impl PlumbingGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = vertices.len();
        if n == 0 {
            return Err(Error::MatrixShape("graph needs at least one vertex"));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree);
        }
        let mut seen = std::collections::BTreeSet::new();
        for &(a, b) in &edges {
            if a == b || a >= n || b >= n {
                return Err(Error::NotATree);
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(Error::NotATree);
            }
        }
        let g = PlumbingGraph { vertices, edges };
        // connectivity: n-1 distinct edges and all vertices reachable
        let mut visited = vec![false; n];
        let mut stack = vec![0usize];
        visited[0] = true;
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    stack.push(w);
                }
            }
        }
        if visited.iter().any(|v| !v) {
            return Err(Error::NotATree);
        }
        Ok(g)
    }

    pub fn from_weights(weights: &[i64], edges: &[(usize, usize)]) -> Result<Self> {
        PlumbingGraph::new(
            weights.iter().map(|&w| Vertex { weight: int(w), label: None }).collect(),
            edges.to_vec(),
        )
    }

    /// A linear chain with the given weights.
    pub fn chain(weights: &[i64]) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (1..weights.len()).map(|i| (i - 1, i)).collect();
        PlumbingGraph::from_weights(weights, &edges)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// The arms hanging off `center`, each listed center-outward; errors
    /// if some arm branches.
    pub fn arms(&self, center: usize) -> Result<Vec<Vec<usize>>> {
        if center >= self.len() {
            return Err(Error::IndexOutOfRange);
        }
        let mut arms = Vec::new();
        for start in self.neighbors(center) {
            let mut arm = vec![start];
            let mut prev = center;
            let mut cur = start;
            loop {
                let next: Vec<usize> =
                    self.neighbors(cur).into_iter().filter(|&w| w != prev).collect();
                match next.len() {
                    0 => break,
                    1 => {
                        arm.push(next[0]);
                        prev = cur;
                        cur = next[0];
                    }
                    _ => {
                        return Err(Error::NotAStar(format!(
                            "arm through vertex {start} branches at vertex {cur}"
                        )))
                    }
                }
            }
            arms.push(arm);
        }
        Ok(arms)
    }

    /// Arm weight sequences center-outward, sorted; shape fingerprint used
    /// to compare star graphs up to relabeling.
    pub fn arm_weights(&self, center: usize) -> Result<Vec<Vec<Integer>>> {
        let mut out: Vec<Vec<Integer>> = self
            .arms(center)?
            .into_iter()
            .map(|arm| arm.into_iter().map(|v| self.vertices[v].weight.clone()).collect())
            .collect();
        out.sort();
        Ok(out)
    }
}

/// Intersection matrix: weights on the diagonal, a 1 for each edge.
pub fn intersection_matrix(graph: &PlumbingGraph) -> IntMatrix {
    let n = graph.len();
    let mut m = IntMatrix::zeros(n, n).expect("graph is nonempty");
    for (i, v) in graph.vertices().iter().enumerate() {
        m.set(i, i, v.weight.clone());
    }
    for &(a, b) in graph.edges() {
        m.set(a, b, Integer::one());
        m.set(b, a, Integer::one());
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definiteness {
    NegativeDefinite,
    NotNegativeDefinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormClass {
    pub determinant: Integer,
    pub definiteness: Definiteness,
    pub singular: bool,
}

/// Exact determinant and negative-definiteness of a symmetric form.
pub fn form_class(q: &IntMatrix) -> Result<FormClass> {
    if !q.is_symmetric() {
        return Err(Error::NonSymmetric);
    }
    let determinant = q.determinant()?;
    let definiteness = if q.is_negative_definite()? {
        Definiteness::NegativeDefinite
    } else {
        Definiteness::NotNegativeDefinite
    };
    Ok(FormClass { singular: determinant.is_zero(), determinant, definiteness })
}

/// Outcome of the positive-solution test for `Q z = a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimakOutcome {
    /// The unique solution, all entries strictly positive.
    Positive(Vec<Rational>),
    /// The solution exists but entry `index` is not positive.
    NotPositive { index: usize, value: Rational },
}

/// Solves `Q z = a` exactly and reports whether the unique solution is
/// entrywise positive. Errors on singular `Q`.
pub fn limak_solve(q: &IntMatrix, a: &[Rational]) -> Result<LimakOutcome> {
    let z = solve_rational(q, a)?;
    for (index, value) in z.iter().enumerate() {
        if !value.is_positive() {
            return Ok(LimakOutcome::NotPositive { index, value: value.clone() });
        }
    }
    Ok(LimakOutcome::Positive(z))
}

/// Determinant of the intersection form of a tree, by the star recursion
/// on rooted subtrees; agrees with the matrix determinant and runs in
/// linear time.
pub fn graph_determinant(graph: &PlumbingGraph) -> Integer {
    fn rec(graph: &PlumbingGraph, v: usize, parent: Option<usize>) -> (Integer, Integer) {
        let children: Vec<usize> = graph
            .neighbors(v)
            .into_iter()
            .filter(|&w| Some(w) != parent)
            .collect();
        let sub: Vec<(Integer, Integer)> =
            children.iter().map(|&c| rec(graph, c, Some(v))).collect();
        let prod: Integer = sub.iter().map(|(d, _)| d.clone()).product();
        let mut full = &graph.vertices()[v].weight * &prod;
        for (i, (_, minus)) in sub.iter().enumerate() {
            let mut others = Integer::one();
            for (j, (d, _)) in sub.iter().enumerate() {
                if j != i {
                    others *= d;
                }
            }
            full -= minus * others;
        }
        (full, prod)
    }
    rec(graph, 0, None).0
}

/// Seifert data of the reversed boundary of a star plumbing: the center of
/// weight `w` contributes `(1, w)`, and each arm read center-outward with
/// weights `-[a_1, ..., a_k]` contributes the continuant pair of
/// `[a_1, ..., a_k]`.
///
/// Arms of length at least two must have all weights at most -2; a leaf
/// arm may carry any weight (it contributes `(-w, 1)`), which is what the
/// strict-transform vertex of a resolution graph needs.
pub fn star_to_seifert(graph: &PlumbingGraph, center: usize) -> Result<SeifertData> {
    let arms = graph.arms(center)?;
    let mut fibers = vec![(Integer::one(), graph.vertices()[center].weight.clone())];
    for arm in arms {
        let weights: Vec<Integer> =
            arm.iter().map(|&v| graph.vertices()[v].weight.clone()).collect();
        if weights.len() > 1 && weights.iter().any(|w| w > &int(-2)) {
            return Err(Error::BadArmWeight);
        }
        let seq: Vec<Integer> = weights.iter().map(|w| -w.clone()).collect();
        let (alpha, beta) = continuant_pair(&seq);
        if alpha.is_zero() && beta.is_negative() {
            fibers.push((alpha, -beta));
        } else {
            fibers.push((alpha, beta));
        }
    }
    SeifertData::new(0, fibers)
}

/// Star graph of a normal form: center weight `b`, one arm per fiber with
/// weights from the negative continued fraction of `alpha/beta`.
pub fn seifert_to_star(normal: &NormalForm) -> Result<PlumbingGraph> {
    if normal.genus != 0 {
        return Err(Error::GenusUnsupported);
    }
    let mut vertices = vec![Vertex { weight: normal.b.clone(), label: None }];
    let mut edges = Vec::new();
    for (alpha, beta) in &normal.fibers {
        let mut prev = 0usize;
        for a in neg_cf(alpha, beta)? {
            vertices.push(Vertex { weight: -a, label: None });
            edges.push((prev, vertices.len() - 1));
            prev = vertices.len() - 1;
        }
    }
    PlumbingGraph::new(vertices, edges)
}

/// The ten-vertex resolution graph of the curve pair used throughout the
/// worked examples: a chain with weights
/// `-2, -2, -3, -1, -2, -2 (x5)` read from one labeled end, plus the
/// labeled `-2` vertex hanging off the `-1` vertex.
pub fn figure_one() -> PlumbingGraph {
    let weights = [-2i64, -2, -2, -1, -3, -2, -2, -2, -2, -2];
    let labels = [Some("C1"), Some("C2"), None, None, None, None, None, None, None, None];
    let vertices = weights
        .iter()
        .zip(labels)
        .map(|(&w, l)| Vertex { weight: int(w), label: l.map(str::to_owned) })
        .collect();
    let edges = vec![(0, 3), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9)];
    PlumbingGraph::new(vertices, edges).expect("static graph is a tree")
}

/// Minimal resolution graph of a unicuspidal curve with one Puiseux pair
/// `(p, q)` and self-intersection `m`: a star with center weight -1, arms
/// given by the negative continued fractions of `p/(p - p')` and
/// `q/(q - q')`, and the strict-transform leaf of weight `m - pq` adjacent
/// to the center.
///
/// Contracts (exercised by the test suites): the intersection form has
/// `|det| = m`, and the reversed star boundary matches the classification
/// of `M_{p,q,m}` up to orientation.
pub fn cusp_resolution_graph(p: &Integer, q: &Integer, m: &Integer) -> Result<PlumbingGraph> {
    if !m.is_positive() {
        return Err(Error::Precondition("self-intersection must be positive".into()));
    }
    let (p_dual, q_dual) = dual_pair(p, q)?;
    let mut vertices = vec![
        Vertex { weight: int(-1), label: None },
        Vertex { weight: m - p * q, label: Some("C".into()) },
    ];
    let mut edges = vec![(0, 1)];
    for (num, den) in [(p.clone(), p - p_dual), (q.clone(), q - q_dual)] {
        let mut prev = 0usize;
        for a in neg_cf(&num, &den)? {
            vertices.push(Vertex { weight: -a, label: None });
            edges.push((prev, vertices.len() - 1));
            prev = vertices.len() - 1;
        }
    }
    PlumbingGraph::new(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::cuspidal::{classify_mpqm, Manifold};
    use crate::seifert::LensSpace;

    #[test]
    fn matrix_pinned() {
        let g = PlumbingGraph::from_weights(&[5], &[]).unwrap();
        let m = intersection_matrix(&g);
        assert_eq!(m.get(0, 0), &int(5));

        let g = PlumbingGraph::chain(&[-2, -2]).unwrap();
        let m = intersection_matrix(&g);
        assert_eq!(m, IntMatrix::from_rows(&[vec![-2, 1], vec![1, -2]]).unwrap());
        assert_eq!(m.determinant().unwrap(), int(3));

        let q = intersection_matrix(&figure_one());
        for (i, w) in [-2i64, -2, -2, -1, -3, -2, -2, -2, -2, -2].iter().enumerate() {
            assert_eq!(q.get(i, i), &int(*w));
        }
    }

    #[test]
    fn form_class_pinned() {
        let d = IntMatrix::from_rows(&[vec![-2, 0], vec![0, -2]]).unwrap();
        let f = form_class(&d).unwrap();
        assert_eq!(f.definiteness, Definiteness::NegativeDefinite);
        assert_eq!(f.determinant, int(4));
        assert!(!f.singular);

        let f = form_class(&intersection_matrix(&figure_one())).unwrap();
        assert_eq!(f.definiteness, Definiteness::NotNegativeDefinite);
        assert_eq!(f.determinant.abs(), int(49));

        let f = form_class(&IntMatrix::from_rows(&[vec![-1, 0], vec![0, 1]]).unwrap()).unwrap();
        assert_eq!(f.definiteness, Definiteness::NotNegativeDefinite);
    }

    #[test]
    fn limak_pinned() {
        let q = intersection_matrix(&figure_one());
        let mut a = vec![rat(0, 1); 10];
        a[0] = rat(50, 1);
        a[1] = rat(23, 1);
        match limak_solve(&q, &a).unwrap() {
            LimakOutcome::Positive(z) => {
                let expect: Vec<Rational> =
                    [1, 2, 27, 52, 24, 20, 16, 12, 8, 4].iter().map(|&v| rat(v, 1)).collect();
                assert_eq!(z, expect);
            }
            other => panic!("expected a positive solution, got {other:?}"),
        }

        a[0] = rat(24, 1);
        a[1] = rat(13, 1);
        match limak_solve(&q, &a).unwrap() {
            LimakOutcome::NotPositive { value, .. } => assert!(value.is_zero()),
            other => panic!("expected a boundary failure, got {other:?}"),
        }

        let one = IntMatrix::from_rows(&[vec![1]]).unwrap();
        match limak_solve(&one, &[rat(5, 1)]).unwrap() {
            LimakOutcome::Positive(z) => assert_eq!(z, vec![rat(5, 1)]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn star_to_seifert_pinned() {
        let s = star_to_seifert(&figure_one(), 3).unwrap();
        let direct = SeifertData::from_pairs(0, &[(1, -1), (2, 1), (3, 2), (13, 6)]).unwrap();
        assert_eq!(s, direct);
        let m1 = SeifertData::from_pairs(0, &[(13, 6), (3, 2), (2, -1)]).unwrap();
        assert!(s.same_seifert(&m1).unwrap());

        // chain graphs present lens spaces; the boundary convention gives
        // the orientation reverse of the continued-fraction pair
        let s = star_to_seifert(&PlumbingGraph::chain(&[-2, -2, -2, -7]).unwrap(), 0).unwrap();
        let lens = s.lens_from_two_fibers().unwrap();
        assert!(lens
            .lens_equal(&LensSpace::from_ints(25, 19).reverse())
            .unwrap());
        assert_eq!(s.h1().unwrap().order().unwrap(), int(25));

        let s = star_to_seifert(&PlumbingGraph::from_weights(&[-2], &[]).unwrap(), 0).unwrap();
        assert!(s
            .lens_from_two_fibers()
            .unwrap()
            .lens_equal(&LensSpace::from_ints(2, 1))
            .unwrap());
    }

    #[test]
    fn seifert_to_star_round_trip() {
        let m1 = SeifertData::from_pairs(0, &[(13, 6), (3, 2), (2, -1)]).unwrap();
        let g = seifert_to_star(&m1.normalize().unwrap()).unwrap();
        assert_eq!(
            g.arm_weights(0).unwrap(),
            figure_one().arm_weights(3).unwrap()
        );
        let back = star_to_seifert(&g, 0).unwrap();
        assert!(back.same_seifert(&m1).unwrap());

        let lens = SeifertData::from_pairs(0, &[(1, -2), (19, 13)]).unwrap();
        let g = seifert_to_star(&lens.normalize().unwrap()).unwrap();
        assert_eq!(g, PlumbingGraph::chain(&[-2, -2, -2, -7]).unwrap());

        let m0 = SeifertData::from_pairs(0, &[(2, 1), (2, -1), (2, -1)]).unwrap();
        let g = seifert_to_star(&m0.normalize().unwrap()).unwrap();
        assert_eq!(g.vertices()[0].weight, int(-2));
        assert_eq!(g.arm_weights(0).unwrap(), vec![vec![int(-2)]; 3]);
        assert!(star_to_seifert(&g, 0).unwrap().same_seifert(&m0).unwrap());
    }

    #[test]
    fn resolution_graph_pinned() {
        let g = cusp_resolution_graph(&int(2), &int(13), &int(24)).unwrap();
        // reproduces the single-cusp subgraph of the ten-vertex graph:
        // drop the second labeled vertex (index 1) and its edge
        let fig = figure_one();
        let single_cusp = PlumbingGraph::new(
            fig.vertices()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != 1)
                .map(|(_, v)| Vertex { weight: v.weight.clone(), label: None })
                .collect(),
            fig.edges()
                .iter()
                .filter(|&&(a, b)| a != 1 && b != 1)
                .map(|&(a, b)| (a - usize::from(a > 1), b - usize::from(b > 1)))
                .collect(),
        )
        .unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(g.vertices()[0].weight, int(-1));
        assert_eq!(g.arm_weights(0).unwrap(), single_cusp.arm_weights(2).unwrap());
        assert_eq!(graph_determinant(&g).abs(), int(24));
        assert_eq!(graph_determinant(&g), graph_determinant(&single_cusp));

        let g = cusp_resolution_graph(&int(2), &int(3), &int(9)).unwrap();
        assert_eq!(
            g.arm_weights(0).unwrap(),
            vec![vec![int(-3)], vec![int(-2)], vec![int(3)]]
        );
        assert_eq!(graph_determinant(&g).abs(), int(9));

        let g = cusp_resolution_graph(&int(3), &int(5), &int(16)).unwrap();
        assert_eq!(
            g.arm_weights(0).unwrap(),
            vec![vec![int(-3)], vec![int(-2), int(-3)], vec![int(1)]]
        );
    }

    #[test]
    fn resolution_boundary_matches_classification() {
        for (p, q, m) in [(2i64, 13i64, 24i64), (2, 3, 9), (3, 5, 16), (3, 5, 14), (2, 3, 5)] {
            let g = cusp_resolution_graph(&int(p), &int(q), &int(m)).unwrap();
            assert_eq!(graph_determinant(&g).abs(), int(m));
            let boundary = star_to_seifert(&g, 0).unwrap();
            let class = classify_mpqm(&int(p), &int(q), &int(m)).unwrap();
            match class.manifold {
                Manifold::Seifert(s) => {
                    let direct = boundary.same_seifert(&s).unwrap();
                    let reversed =
                        boundary.same_seifert(&s.reverse_orientation()).unwrap();
                    assert!(direct || reversed, "({p}, {q}, {m})");
                }
                Manifold::ConnectedSum(..) => unreachable!("m != pq in these cases"),
            }
        }
    }

    #[test]
    fn graph_determinant_matches_matrix() {
        for g in [
            figure_one(),
            PlumbingGraph::chain(&[-2, -2, -2, -7]).unwrap(),
            cusp_resolution_graph(&int(3), &int(5), &int(16)).unwrap(),
            PlumbingGraph::from_weights(&[0], &[]).unwrap(),
        ] {
            assert_eq!(graph_determinant(&g), intersection_matrix(&g).determinant().unwrap());
        }
    }

    #[test]
    fn determinant_equals_h1_order_on_stars() {
        // |det Q| = |H1(boundary)| on star graphs with definite-side arms
        let arm_sets: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![-2], vec![-3, -2], vec![-5]],
            vec![vec![-4, -2, -3]],
            vec![vec![-2, -2], vec![-2, -2], vec![-3]],
        ];
        for arms in arm_sets {
            for center_w in [-3i64, -1, 2] {
                let mut vertices = vec![Vertex { weight: int(center_w), label: None }];
                let mut edges = Vec::new();
                for arm in &arms {
                    let mut prev = 0usize;
                    for &w in arm {
                        vertices.push(Vertex { weight: int(w), label: None });
                        edges.push((prev, vertices.len() - 1));
                        prev = vertices.len() - 1;
                    }
                }
                let g = PlumbingGraph::new(vertices, edges).unwrap();
                let det = graph_determinant(&g).abs();
                let boundary = star_to_seifert(&g, 0).unwrap();
                match boundary.h1().unwrap().order() {
                    Some(order) => assert_eq!(det, order),
                    None => assert!(det.is_zero()),
                }
            }
        }
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(PlumbingGraph::from_weights(&[-2, -2], &[(0, 0)]).is_err());
        assert!(PlumbingGraph::from_weights(&[-2, -2, -2], &[(0, 1)]).is_err());
        assert!(PlumbingGraph::from_weights(&[-2, -2], &[(0, 1), (1, 0)]).is_err());
        // branching arm
        let g = PlumbingGraph::from_weights(&[-1, -2, -2, -2], &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(star_to_seifert(&g, 0).is_err());
        // arm weight above -2 in a long arm
        let g = PlumbingGraph::chain(&[-1, -1, -2]).unwrap();
        assert!(matches!(star_to_seifert(&g, 0), Err(Error::BadArmWeight)));
    }
}
