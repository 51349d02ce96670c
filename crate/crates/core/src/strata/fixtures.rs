//! The two genus-11 dual graphs used as reference examples of Z.

use super::graph::StableGraph;

/// Triangle of rational vertices carrying trees of genera 1, 2, 3, 4; the
/// genus-2 tree is a chain of two genus-1 vertices.
pub fn figure_one_left() -> StableGraph {
    // a=0, b=1, c=2; chain root 7 on c, chain end 3; genus 1 at 5 on b;
    // genera 3 and 4 at 4 and 6 on a
    StableGraph::new(
        vec![0, 0, 0, 1, 3, 1, 4, 1],
        vec![
            (0, 1),
            (2, 7),
            (7, 3),
            (5, 1),
            (0, 4),
            (0, 6),
            (1, 2),
            (2, 0),
        ],
        vec![],
    )
    .expect("reference graph is stable")
}

/// Rational vertex with a loop, joined to a genus-10 vertex.
pub fn figure_one_right() -> StableGraph {
    StableGraph::new(vec![0, 10], vec![(0, 0), (1, 0)], vec![]).expect("reference graph is stable")
}
