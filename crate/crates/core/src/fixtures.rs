//! Small named graphs and θ-tables with known properties.
//!
//! Edge order inside each graph follows the edge labels `e1, e2, ...` where a
//! graph carries labels, so edge index `i` is label `e{i+1}`.

use crate::graph::Graph;
use crate::partition::Partition;
use crate::treedata::ThetaTable;

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).expect("fixture graphs are simple")
}

/// A 7-vertex tree (two adjacent vertices of degree 3 carrying two leaves
/// each) whose chromatic polynomial is `k (k - 1)^6`.
pub fn seven_vertex_tree() -> Graph {
    graph(7, &[(0, 2), (1, 3), (2, 3), (2, 5), (3, 4), (3, 6)])
}

/// 17-vertex tree with a single centroid of weight 8.
pub fn one_centroid_tree() -> Graph {
    graph(
        17,
        &[
            (0, 3),
            (1, 3),
            (2, 7),
            (3, 8),
            (4, 10),
            (5, 4),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 10),
            (10, 11),
            (8, 13),
            (10, 14),
            (12, 15),
            (14, 15),
            (15, 16),
        ],
    )
}

/// 16-vertex tree with two adjacent centroids of weight 8 (vertices 8 and 9).
pub fn two_centroid_tree() -> Graph {
    graph(
        16,
        &[
            (0, 3),
            (1, 3),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 4),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 10),
            (8, 12),
            (9, 13),
            (11, 14),
            (13, 14),
            (14, 15),
        ],
    )
}

/// Unicyclic graph with degree sequence (4,2,2,2,1,1): triangle 0-2-3, a
/// pendant path 3-1-4, and a leaf 5 on vertex 3.
pub fn unicyclic_left() -> Graph {
    graph(6, &[(0, 2), (1, 3), (2, 3), (0, 3), (1, 4), (3, 5)])
}

/// Unicyclic graph with degree sequence (3,3,3,1,1,1) and the same chromatic
/// symmetric function as [`unicyclic_left`].
pub fn unicyclic_right() -> Graph {
    graph(6, &[(0, 2), (1, 2), (1, 3), (2, 3), (1, 4), (3, 5)])
}

/// [`unicyclic_right`] drawn with a labelled triangle, returned with the
/// edge indices of `(e1, e2, e3)`.
pub fn labelled_triangle_top() -> (Graph, [usize; 3]) {
    (
        graph(6, &[(0, 1), (1, 2), (1, 4), (0, 4), (0, 3), (4, 5)]),
        [3, 0, 2],
    )
}

/// [`unicyclic_left`] drawn with a labelled triangle, returned with the edge
/// indices of `(e1, e2, e3)`.
pub fn labelled_triangle_bottom() -> (Graph, [usize; 3]) {
    (
        graph(6, &[(0, 1), (1, 2), (1, 4), (1, 3), (0, 3), (4, 5)]),
        [3, 0, 4],
    )
}

/// The 5-cycle with two adjacent labelled edges `(e1, e2)` meeting at vertex 4.
pub fn labelled_five_cycle() -> (Graph, [usize; 2]) {
    (graph(5, &[(0, 1), (2, 1), (4, 2), (3, 4), (3, 0)]), [3, 2])
}

/// Tree used to illustrate attraction: vertex 8 is the centroid and the
/// distinguished edge is index 10. Returns `(tree, e, attracting, repelling)`.
pub fn attraction_tree() -> (Graph, usize, Vec<usize>, Vec<usize>) {
    (
        graph(
            17,
            &[
                (0, 3),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 11),
                (4, 5),
                (6, 7),
                (7, 8),
                (8, 9),
                (9, 10),
                (10, 11),
                (6, 12),
                (7, 13),
                (9, 14),
                (10, 15),
                (11, 16),
            ],
        ),
        10,
        vec![4, 5, 8, 9, 15],
        vec![0, 1, 2, 3, 6, 7, 11, 12, 13, 14],
    )
}

/// Two non-isomorphic 7-vertex trees whose single-edge θ-images agree.
pub fn same_singletons_pair() -> (Graph, Graph) {
    (
        graph(7, &[(0, 3), (1, 4), (1, 2), (3, 4), (3, 5), (4, 6)]),
        graph(7, &[(0, 4), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6)]),
    )
}

/// The single-centroid 13-vertex tree described by [`theta_example_pairs`],
/// with edge `i` carrying label `e{i+1}`.
pub fn theta_example_tree() -> Graph {
    graph(
        13,
        &[
            (1, 7),
            (4, 5),
            (0, 1),
            (2, 6),
            (3, 8),
            (6, 9),
            (5, 10),
            (3, 11),
            (2, 3),
            (1, 4),
            (1, 12),
            (0, 2),
        ],
    )
}

type Rows = &'static [&'static [[usize; 3]]];

/// Pair images of the 13-vertex example; row `r` holds `θ(e_c, e_{r+2})` for
/// `c = 1..=r+1`.
const THETA_EXAMPLE_ROWS: Rows = &[
    &[[10, 2, 1]],
    &[[7, 5, 1], [7, 4, 2]],
    &[[10, 2, 1], [9, 2, 2], [6, 5, 2]],
    &[[11, 1, 1], [10, 2, 1], [6, 6, 1], [10, 2, 1]],
    &[[11, 1, 1], [10, 2, 1], [6, 6, 1], [11, 1, 1], [11, 1, 1]],
    &[[11, 1, 1], [11, 1, 1], [7, 5, 1], [10, 2, 1], [11, 1, 1], [11, 1, 1]],
    &[[11, 1, 1], [10, 2, 1], [6, 6, 1], [10, 2, 1], [11, 1, 1], [11, 1, 1], [11, 1, 1]],
    &[[9, 3, 1], [8, 3, 2], [6, 4, 3], [8, 3, 2], [10, 2, 1], [9, 3, 1], [9, 3, 1], [10, 2, 1]],
    &[
        [9, 3, 1], [10, 2, 1], [7, 3, 3], [8, 3, 2], [9, 3, 1], [9, 3, 1], [10, 2, 1], [9, 3, 1],
        [7, 3, 3],
    ],
    &[
        [11, 1, 1], [10, 2, 1], [7, 5, 1], [10, 2, 1], [11, 1, 1], [11, 1, 1], [11, 1, 1],
        [11, 1, 1], [9, 3, 1], [9, 3, 1],
    ],
    &[
        [6, 6, 1], [6, 5, 2], [6, 6, 1], [7, 4, 2], [7, 5, 1], [7, 5, 1], [6, 6, 1], [7, 5, 1],
        [7, 3, 3], [6, 4, 3], [6, 6, 1],
    ],
];

/// Singleton images of the 13-vertex example, `e1..e12`.
pub const THETA_EXAMPLE_SINGLETONS: [[usize; 2]; 12] = [
    [12, 1],
    [11, 2],
    [7, 6],
    [11, 2],
    [12, 1],
    [12, 1],
    [12, 1],
    [12, 1],
    [10, 3],
    [10, 3],
    [12, 1],
    [7, 6],
];

/// Pairs-only θ-table of the 13-vertex example, labels `e1..e12`.
pub fn theta_example_pairs() -> ThetaTable {
    table_from_rows(13, THETA_EXAMPLE_ROWS, None)
}

/// Full θ-table (singletons and pairs) of the 13-vertex example.
pub fn theta_example_full() -> ThetaTable {
    table_from_rows(13, THETA_EXAMPLE_ROWS, Some(&THETA_EXAMPLE_SINGLETONS))
}

/// Two labelled 14-vertex trees with two centroids and identical pair
/// images under their labellings.
pub fn two_centroid_pair() -> (Graph, Graph) {
    (
        graph(
            14,
            &[
                (0, 1),
                (0, 2),
                (2, 6),
                (6, 12),
                (0, 3),
                (3, 7),
                (7, 13),
                (1, 4),
                (4, 8),
                (4, 9),
                (1, 5),
                (5, 10),
                (5, 11),
            ],
        ),
        graph(
            14,
            &[
                (0, 1),
                (0, 2),
                (2, 6),
                (6, 12),
                (1, 5),
                (5, 11),
                (11, 13),
                (1, 4),
                (4, 9),
                (4, 10),
                (0, 3),
                (3, 7),
                (3, 8),
            ],
        ),
    )
}

const TWO_CENTROID_ROWS: Rows = &[
    &[[7, 4, 3]],
    &[[7, 5, 2], [11, 2, 1]],
    &[[7, 6, 1], [11, 2, 1], [12, 1, 1]],
    &[[7, 4, 3], [8, 3, 3], [9, 3, 2], [10, 3, 1]],
    &[[7, 5, 2], [9, 3, 2], [10, 2, 2], [11, 2, 1], [11, 2, 1]],
    &[[7, 6, 1], [10, 3, 1], [11, 2, 1], [12, 1, 1], [11, 2, 1], [12, 1, 1]],
    &[[7, 4, 3], [8, 3, 3], [9, 3, 2], [10, 3, 1], [8, 3, 3], [9, 3, 2], [10, 3, 1]],
    &[
        [7, 6, 1], [10, 3, 1], [11, 2, 1], [12, 1, 1], [10, 3, 1], [11, 2, 1], [12, 1, 1],
        [11, 2, 1],
    ],
    &[
        [7, 6, 1], [10, 3, 1], [11, 2, 1], [12, 1, 1], [10, 3, 1], [11, 2, 1], [12, 1, 1],
        [11, 2, 1], [12, 1, 1],
    ],
    &[
        [7, 4, 3], [8, 3, 3], [9, 3, 2], [10, 3, 1], [8, 3, 3], [9, 3, 2], [10, 3, 1], [8, 3, 3],
        [10, 3, 1], [10, 3, 1],
    ],
    &[
        [7, 6, 1], [10, 3, 1], [11, 2, 1], [12, 1, 1], [10, 3, 1], [11, 2, 1], [12, 1, 1],
        [10, 3, 1], [12, 1, 1], [12, 1, 1], [11, 2, 1],
    ],
    &[
        [7, 6, 1], [10, 3, 1], [11, 2, 1], [12, 1, 1], [10, 3, 1], [11, 2, 1], [12, 1, 1],
        [10, 3, 1], [12, 1, 1], [12, 1, 1], [11, 2, 1], [12, 1, 1],
    ],
];

/// Published pair table shared by both trees of [`two_centroid_pair`].
pub fn two_centroid_pairs() -> ThetaTable {
    table_from_rows(14, TWO_CENTROID_ROWS, None)
}

/// Two single-centroid 15-vertex trees whose pair images agree as multisets
/// but not label by label. Their chromatic symmetric functions differ at
/// `p_(8,5,1,1)`.
pub fn near_miss_pair() -> (Graph, Graph) {
    (
        graph(
            15,
            &[
                (0, 1),
                (0, 2),
                (1, 3),
                (3, 7),
                (7, 13),
                (1, 4),
                (4, 8),
                (8, 14),
                (2, 5),
                (5, 9),
                (5, 10),
                (2, 6),
                (6, 11),
                (6, 12),
            ],
        ),
        graph(
            15,
            &[
                (0, 1),
                (0, 2),
                (1, 3),
                (3, 7),
                (7, 13),
                (2, 6),
                (6, 12),
                (12, 14),
                (2, 5),
                (5, 10),
                (5, 11),
                (1, 4),
                (4, 8),
                (4, 9),
            ],
        ),
    )
}

const NEAR_MISS_LEFT_ROWS: Rows = &[
    &[[7, 7, 1]],
    &[[8, 4, 3], [7, 5, 3]],
    &[[8, 5, 2], [7, 6, 2], [12, 2, 1]],
    &[[8, 6, 1], [7, 7, 1], [12, 2, 1], [13, 1, 1]],
    &[[8, 4, 3], [7, 5, 3], [9, 3, 3], [10, 3, 2], [11, 3, 1]],
    &[[8, 5, 2], [7, 6, 2], [10, 3, 2], [11, 2, 2], [12, 2, 1], [12, 2, 1]],
    &[[8, 6, 1], [7, 7, 1], [11, 3, 1], [12, 2, 1], [13, 1, 1], [12, 2, 1], [13, 1, 1]],
    &[
        [7, 5, 3], [8, 4, 3], [9, 3, 3], [10, 3, 2], [11, 3, 1], [9, 3, 3], [10, 3, 2],
        [11, 3, 1],
    ],
    &[
        [7, 7, 1], [8, 6, 1], [11, 3, 1], [12, 2, 1], [13, 1, 1], [11, 3, 1], [12, 2, 1],
        [13, 1, 1], [12, 2, 1],
    ],
    &[
        [7, 7, 1], [8, 6, 1], [11, 3, 1], [12, 2, 1], [13, 1, 1], [11, 3, 1], [12, 2, 1],
        [13, 1, 1], [12, 2, 1], [13, 1, 1],
    ],
    &[
        [7, 5, 3], [8, 4, 3], [9, 3, 3], [10, 3, 2], [11, 3, 1], [9, 3, 3], [10, 3, 2],
        [11, 3, 1], [9, 3, 3], [11, 3, 1], [11, 3, 1],
    ],
    &[
        [7, 7, 1], [8, 6, 1], [11, 3, 1], [12, 2, 1], [13, 1, 1], [11, 3, 1], [12, 2, 1],
        [13, 1, 1], [11, 3, 1], [13, 1, 1], [13, 1, 1], [12, 2, 1],
    ],
    &[
        [7, 7, 1], [8, 6, 1], [11, 3, 1], [12, 2, 1], [13, 1, 1], [11, 3, 1], [12, 2, 1],
        [13, 1, 1], [11, 3, 1], [13, 1, 1], [13, 1, 1], [12, 2, 1], [13, 1, 1],
    ],
];

const NEAR_MISS_RIGHT_ROWS: Rows = &[
    &[[7, 7, 1]],
    &[[8, 4, 3], [7, 5, 3]],
    &[[8, 5, 2], [7, 6, 2], [12, 2, 1]],
    &[[8, 6, 1], [7, 7, 1], [12, 2, 1], [13, 1, 1]],
    &[[7, 5, 3], [8, 4, 3], [9, 3, 3], [10, 3, 2], [11, 3, 1]],
    &[[7, 6, 2], [8, 5, 2], [10, 3, 2], [11, 2, 2], [12, 2, 1], [12, 2, 1]],
    &[[7, 7, 1], [8, 6, 1], [11, 3, 1], [12, 2, 1], [13, 1, 1], [12, 2, 1], [13, 1, 1]],
    &[
        [7, 5, 3], [8, 4, 3], [9, 3, 3], [10, 3, 2], [11, 3, 1], [9, 3, 3], [10, 3, 2],
        [11, 3, 1],
    ],
    &[
        [7, 7, 1], [8, 6, 1], [11, 3, 1], [12, 2, 1], [13, 1, 1], [11, 3, 1], [12, 2, 1],
        [13, 1, 1], [12, 2, 1],
    ],
    &[
        [7, 7, 1], [8, 6, 1], [11, 3, 1], [12, 2, 1], [13, 1, 1], [11, 3, 1], [12, 2, 1],
        [13, 1, 1], [12, 2, 1], [13, 1, 1],
    ],
    &[
        [8, 4, 3], [7, 5, 3], [9, 3, 3], [10, 3, 2], [11, 3, 1], [9, 3, 3], [10, 3, 2],
        [11, 3, 1], [9, 3, 3], [11, 3, 1], [11, 3, 1],
    ],
    &[
        [8, 6, 1], [7, 7, 1], [11, 3, 1], [12, 2, 1], [13, 1, 1], [11, 3, 1], [12, 2, 1],
        [13, 1, 1], [11, 3, 1], [13, 1, 1], [13, 1, 1], [12, 2, 1],
    ],
    &[
        [8, 6, 1], [7, 7, 1], [11, 3, 1], [12, 2, 1], [13, 1, 1], [11, 3, 1], [12, 2, 1],
        [13, 1, 1], [11, 3, 1], [13, 1, 1], [13, 1, 1], [12, 2, 1], [13, 1, 1],
    ],
];

/// Published pair tables of [`near_miss_pair`], left then right.
pub fn near_miss_pairs() -> (ThetaTable, ThetaTable) {
    (
        table_from_rows(15, NEAR_MISS_LEFT_ROWS, None),
        table_from_rows(15, NEAR_MISS_RIGHT_ROWS, None),
    )
}

fn table_from_rows(n: usize, rows: Rows, singletons: Option<&[[usize; 2]]>) -> ThetaTable {
    let m = rows.len() + 1;
    let labels: Vec<String> = (1..=m).map(|i| format!("e{i}")).collect();
    let singles = singletons.map(|s| {
        s.iter()
            .map(|p| Partition::new(p.to_vec()).expect("fixture partition"))
            .collect()
    });
    let mut table = ThetaTable::new(n, labels, singles).expect("fixture table shape");
    for (r, row) in rows.iter().enumerate() {
        for (c, p) in row.iter().enumerate() {
            table
                .set_pair(c, r + 1, Partition::new(p.to_vec()).expect("fixture partition"))
                .expect("fixture pair");
        }
    }
    table
}
