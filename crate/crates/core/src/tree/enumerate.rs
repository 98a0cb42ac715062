//! Exhaustive generation of planar trees by leaf count.
//!
//! Only trees with no undistinguished leaves and every valence at least one
//! are generated; without both restrictions the family is infinite (stumps
//! and unary chains can be inserted anywhere). A node budget caps the
//! remaining source of growth, chains of low-valence nodes.

use super::{Child, Node, PlanarTree};

/// All trees with exactly `n` distinguished leaves, no undistinguished
/// leaves, every node of valence at least one, and at most `max_nodes`
/// nodes. For `n = 0` the only such tree is the empty tree.
pub fn enumerate_trees(n: usize, max_nodes: usize) -> Vec<PlanarTree> {
    if n == 0 {
        return vec![PlanarTree::empty()];
    }
    enumerate_min_valence(n, max_nodes, 1)
}

/// As [`enumerate_trees`], but requiring every node to have valence at
/// least `min_valence` (and `n >= 1`).
pub fn enumerate_min_valence(n: usize, max_nodes: usize, min_valence: usize) -> Vec<PlanarTree> {
    gen(n, max_nodes, min_valence)
        .into_iter()
        .map(PlanarTree::from_root)
        .collect()
}

/// The distinct results of contracting a single edge.
pub fn covers(tree: &PlanarTree) -> Vec<PlanarTree> {
    let mut out: Vec<PlanarTree> = Vec::new();
    for edge in tree.contractible_edges() {
        let contracted = tree.contract(&edge).expect("edge listed as contractible");
        if !out.contains(&contracted) {
            out.push(contracted);
        }
    }
    out
}

/// Subtrees with `leaves` distinguished leaves and at most `budget` nodes.
fn gen(leaves: usize, budget: usize, min_valence: usize) -> Vec<Node> {
    if budget == 0 {
        return Vec::new();
    }
    child_sequences(leaves, budget - 1, min_valence)
        .into_iter()
        .filter(|(children, _)| children.len() >= min_valence)
        .map(|(children, _)| Node::new(children))
        .collect()
}

/// Child lists holding `leaves` distinguished leaves in total, each paired
/// with the number of nodes it uses (at most `budget`).
fn child_sequences(
    leaves: usize,
    budget: usize,
    min_valence: usize,
) -> Vec<(Vec<Child>, usize)> {
    if leaves == 0 {
        return vec![(Vec::new(), 0)];
    }
    let mut out = Vec::new();
    for (mut rest, used) in child_sequences(leaves - 1, budget, min_valence) {
        rest.insert(
            0,
            Child::Leaf {
                distinguished: true,
            },
        );
        out.push((rest, used));
    }
    for first_leaves in 1..=leaves {
        for sub in gen(first_leaves, budget, min_valence) {
            let sub_nodes = sub.node_count();
            for (mut rest, used) in
                child_sequences(leaves - first_leaves, budget - sub_nodes, min_valence)
            {
                rest.insert(0, Child::Node(sub.clone()));
                out.push((rest, sub_nodes + used));
            }
        }
    }
    out
}
