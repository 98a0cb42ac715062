//! Checks tying the tree calculus to configuration composition: evaluation
//! must not see contractions, and grafting must evaluate to slot
//! substitution.

use crate::operad::IntervalConfig;
use crate::rational::Rational;

use super::{TreeError, TreePoint};

/// Every single-edge contraction leaves the evaluation unchanged.
pub fn contraction_invariant(point: &TreePoint) -> bool {
    let value = point.eval();
    point.tree().contractible_edges().iter().all(|edge| {
        point
            .contract(edge)
            .map(|contracted| contracted.eval() == value)
            .unwrap_or(false)
    })
}

/// Contracting everything yields a one-node tree (or the empty tree)
/// labelled by the evaluation.
pub fn full_contraction_is_flat(point: &TreePoint) -> bool {
    let flat = point.contract_all();
    flat.tree().node_count() <= 1
        && flat.tree().contractible_edges().is_empty()
        && flat.eval() == point.eval()
        && if point.tree().is_empty() {
            flat.labels().is_empty()
        } else {
            flat.labels() == [point.eval()]
        }
}

/// Grafting then evaluating agrees with evaluating then substituting into
/// the slot.
pub fn graft_compatible(
    stock: &TreePoint,
    index: usize,
    scion: &TreePoint,
) -> Result<bool, TreeError> {
    let grafted = stock.graft(index, scion)?;
    let direct = stock.eval().compose_at(index, &scion.eval())?;
    Ok(grafted.eval() == direct)
}

/// A fixed decoration for a node of valence `v`: the `v` intervals
/// `[i/v, (2i + 1)/(2v)]`, pairwise disjoint and ordered.
pub fn standard_config(valence: usize) -> IntervalConfig {
    let v = valence as i64;
    let pairs: Vec<(Rational, Rational)> = (0..v)
        .map(|i| (Rational::new(i, v), Rational::new(2 * i + 1, 2 * v)))
        .collect();
    IntervalConfig::from_pairs(&pairs).expect("evenly spaced intervals are ordered")
}

/// Decorates every node of the tree with [`standard_config`] of its
/// valence.
pub fn standard_point(tree: &super::PlanarTree) -> TreePoint {
    let labels = tree.valences().iter().map(|&v| standard_config(v)).collect();
    TreePoint::new(tree.clone(), labels).expect("standard decorations match valences")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::tree::enumerate::enumerate_trees;
    use crate::tree::PlanarTree;

    #[test]
    fn standard_config_shapes() {
        assert_eq!(standard_config(0), IntervalConfig::empty());
        assert_eq!(
            standard_config(2),
            IntervalConfig::from_pairs(&[
                (rat(0, 1), rat(1, 4)),
                (rat(1, 2), rat(3, 4)),
            ])
            .unwrap()
        );
    }

    #[test]
    fn invariance_holds_exhaustively_on_small_trees() {
        for n in 0..=3 {
            for tree in enumerate_trees(n, 4) {
                let point = standard_point(&tree);
                assert!(contraction_invariant(&point), "tree {tree:?}");
                assert!(full_contraction_is_flat(&point), "tree {tree:?}");
            }
        }
    }

    #[test]
    fn grafting_matches_slot_substitution() {
        for stock_tree in enumerate_trees(2, 3) {
            let stock = standard_point(&stock_tree);
            for scion_tree in enumerate_trees(2, 2) {
                let scion = standard_point(&scion_tree);
                for index in 1..=2 {
                    assert!(graft_compatible(&stock, index, &scion).unwrap());
                }
            }
            // Grafting the empty tree closes the slot.
            assert!(graft_compatible(&stock, 1, &TreePoint::empty()).unwrap());
        }
    }

    #[test]
    fn unit_decorations_act_as_identities() {
        let identity = TreePoint::corolla(IntervalConfig::whole());
        assert_eq!(identity.eval(), IntervalConfig::whole());
        let mu = TreePoint::corolla(IntervalConfig::half_split());
        let grafted = mu.graft(1, &identity).unwrap();
        assert_eq!(grafted.eval(), mu.eval());
        let other_way = identity.graft(1, &mu).unwrap();
        assert_eq!(other_way.eval(), mu.eval());
    }

    #[test]
    fn capped_slots_contract_away() {
        let tree = PlanarTree::corolla(3).graft(2, &PlanarTree::empty()).unwrap();
        let point = standard_point(&tree);
        assert_eq!(point.arity(), 2);
        assert!(contraction_invariant(&point));
        let flat = point.contract_all();
        assert_eq!(flat.tree().undistinguished_leaves(), 0);
        assert_eq!(flat.arity(), 2);
    }
}
