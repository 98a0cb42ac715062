//! Planar rooted trees with distinguished leaves, their edge contractions
//! and grafting, and decorations by interval configurations.
//!
//! A tree is empty or has a root node; each node owns an ordered list of
//! children, and a child is a node or a leaf. Leaves are distinguished
//! (open inputs, counted left to right) or undistinguished (capped off).
//! An edge is addressed by the child-index path from the root to its lower
//! endpoint; edges to nodes and to undistinguished leaves are contractible.
//! Decorating every node with a configuration whose arity matches its
//! valence gives a point whose evaluation is invariant under contraction
//! and compatible with grafting.

pub mod associahedron;
pub mod coherence;
pub mod enumerate;

use std::fmt::Write as _;

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::operad::{IntervalConfig, OperadError};

/// Errors raised by tree edits and decorations.
#[derive(Debug, thiserror::Error, PartialEq)]
pub enum TreeError {
    #[error("no edge at path {path:?}")]
    EdgeNotFound { path: Vec<usize> },
    #[error("the edge at path {path:?} ends in a distinguished leaf and cannot be contracted")]
    NotContractible { path: Vec<usize> },
    #[error("leaf index {index} is out of range 1..={arity}")]
    LeafOutOfRange { index: usize, arity: usize },
    #[error("{found} labels given for {expected} nodes")]
    LabelCount { expected: usize, found: usize },
    #[error("label {index} has arity {found}, but the node has valence {expected}")]
    LabelArity {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Operad(#[from] OperadError),
}

/// A child of a node: a leaf or a further node.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Child {
    Leaf { distinguished: bool },
    Node(Node),
}

/// An interior vertex with an ordered list of children; the valence is the
/// number of children and may be zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Node {
    children: Vec<Child>,
}

impl Node {
    pub fn new(children: Vec<Child>) -> Self {
        Node { children }
    }

    pub fn children(&self) -> &[Child] {
        &self.children
    }

    pub fn valence(&self) -> usize {
        self.children.len()
    }

    fn node_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(|c| match c {
                Child::Leaf { .. } => 0,
                Child::Node(n) => n.node_count(),
            })
            .sum::<usize>()
    }

    fn leaf_count(&self, distinguished: bool) -> usize {
        self.children
            .iter()
            .map(|c| match c {
                Child::Leaf { distinguished: d } => usize::from(*d == distinguished),
                Child::Node(n) => n.leaf_count(distinguished),
            })
            .sum()
    }
}

/// A planar rooted tree; `None` is the empty tree with no inputs.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PlanarTree {
    root: Option<Node>,
}

impl PlanarTree {
    pub fn empty() -> Self {
        PlanarTree { root: None }
    }

    pub fn from_root(root: Node) -> Self {
        PlanarTree { root: Some(root) }
    }

    /// The corolla: one node whose children are `n` distinguished leaves.
    pub fn corolla(n: usize) -> Self {
        PlanarTree {
            root: Some(Node::new(
                (0..n)
                    .map(|_| Child::Leaf {
                        distinguished: true,
                    })
                    .collect(),
            )),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    pub fn root(&self) -> Option<&Node> {
        self.root.as_ref()
    }

    pub fn node_count(&self) -> usize {
        self.root.as_ref().map_or(0, Node::node_count)
    }

    /// The number of distinguished leaves, i.e. the tree's open inputs.
    pub fn arity(&self) -> usize {
        self.root.as_ref().map_or(0, |n| n.leaf_count(true))
    }

    pub fn undistinguished_leaves(&self) -> usize {
        self.root.as_ref().map_or(0, |n| n.leaf_count(false))
    }

    /// Valences of all nodes in preorder, the order decorations are listed.
    pub fn valences(&self) -> Vec<usize> {
        let mut out = Vec::new();
        if let Some(root) = &self.root {
            collect_valences(root, &mut out);
        }
        out
    }

    /// Paths to the lower endpoints of all contractible edges, in preorder.
    /// Edges to nodes and to undistinguished leaves qualify; edges to
    /// distinguished leaves do not (they are the inputs).
    pub fn contractible_edges(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if let Some(root) = &self.root {
            collect_contractible(root, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Contracts the edge at `path`: a node child is merged into its parent
    /// (its children splice into the parent's list in place), and an
    /// undistinguished leaf is absorbed outright.
    pub fn contract(&self, path: &[usize]) -> Result<PlanarTree, TreeError> {
        let root = self.root.as_ref().ok_or_else(|| TreeError::EdgeNotFound {
            path: path.to_vec(),
        })?;
        if path.is_empty() {
            return Err(TreeError::EdgeNotFound { path: Vec::new() });
        }
        Ok(PlanarTree {
            root: Some(contract_in(root, path)?),
        })
    }

    /// Replaces the `index`-th distinguished leaf (1-based, left to right)
    /// by `scion`; grafting the empty tree turns the leaf undistinguished.
    pub fn graft(&self, index: usize, scion: &PlanarTree) -> Result<PlanarTree, TreeError> {
        let arity = self.arity();
        if index == 0 || index > arity {
            return Err(TreeError::LeafOutOfRange { index, arity });
        }
        let root = self.root.as_ref().expect("positive arity implies a root");
        let mut counter = 0;
        Ok(PlanarTree {
            root: Some(graft_in(root, index, &mut counter, scion)),
        })
    }

    /// GraphViz rendering; distinguished leaves are starred.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph tree {\n  node [shape=point];\n");
        if let Some(root) = &self.root {
            let mut next = 0usize;
            dot_node(root, &mut next, &mut out);
        }
        out.push_str("}\n");
        out
    }
}

fn collect_valences(node: &Node, out: &mut Vec<usize>) {
    out.push(node.valence());
    for child in &node.children {
        if let Child::Node(n) = child {
            collect_valences(n, out);
        }
    }
}

fn collect_contractible(node: &Node, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    for (i, child) in node.children.iter().enumerate() {
        prefix.push(i);
        match child {
            Child::Leaf {
                distinguished: false,
            } => out.push(prefix.clone()),
            Child::Leaf {
                distinguished: true,
            } => {}
            Child::Node(n) => {
                out.push(prefix.clone());
                collect_contractible(n, prefix, out);
            }
        }
        prefix.pop();
    }
}

fn contract_in(node: &Node, path: &[usize]) -> Result<Node, TreeError> {
    let index = path[0];
    if index >= node.children.len() {
        return Err(TreeError::EdgeNotFound {
            path: path.to_vec(),
        });
    }
    let mut children = node.children.clone();
    if path.len() > 1 {
        match &node.children[index] {
            Child::Node(n) => {
                children[index] = Child::Node(contract_in(n, &path[1..])?);
            }
            Child::Leaf { .. } => {
                return Err(TreeError::EdgeNotFound {
                    path: path.to_vec(),
                })
            }
        }
        return Ok(Node::new(children));
    }
    match children.remove(index) {
        Child::Node(n) => {
            for (offset, grandchild) in n.children.into_iter().enumerate() {
                children.insert(index + offset, grandchild);
            }
            Ok(Node::new(children))
        }
        Child::Leaf {
            distinguished: false,
        } => Ok(Node::new(children)),
        Child::Leaf {
            distinguished: true,
        } => Err(TreeError::NotContractible {
            path: path.to_vec(),
        }),
    }
}

fn graft_in(node: &Node, index: usize, counter: &mut usize, scion: &PlanarTree) -> Node {
    let children = node
        .children
        .iter()
        .map(|child| match child {
            Child::Leaf {
                distinguished: true,
            } => {
                *counter += 1;
                if *counter == index {
                    match &scion.root {
                        None => Child::Leaf {
                            distinguished: false,
                        },
                        Some(root) => Child::Node(root.clone()),
                    }
                } else {
                    child.clone()
                }
            }
            Child::Leaf {
                distinguished: false,
            } => child.clone(),
            Child::Node(n) => Child::Node(graft_in(n, index, counter, scion)),
        })
        .collect();
    Node::new(children)
}

fn dot_node(node: &Node, next: &mut usize, out: &mut String) -> usize {
    let id = *next;
    *next += 1;
    let _ = writeln!(out, "  n{id} [shape=circle, label=\"\", width=0.12];");
    for child in &node.children {
        match child {
            Child::Leaf { distinguished } => {
                let leaf_id = *next;
                *next += 1;
                let mark = if *distinguished { "*" } else { "o" };
                let _ = writeln!(
                    out,
                    "  n{leaf_id} [shape=plaintext, label=\"{mark}\"];\n  n{id} -> n{leaf_id};"
                );
            }
            Child::Node(n) => {
                let child_id = dot_node(n, next, out);
                let _ = writeln!(out, "  n{id} -> n{child_id};");
            }
        }
    }
    id
}

// JSON form: null for the empty tree; a node is the array of its children;
// a leaf is "*" (distinguished) or "o" (undistinguished).

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum TreeJson {
    Leaf(String),
    Node(Vec<TreeJson>),
}

fn node_to_json(node: &Node) -> TreeJson {
    TreeJson::Node(
        node.children
            .iter()
            .map(|child| match child {
                Child::Leaf { distinguished } => {
                    TreeJson::Leaf(if *distinguished { "*" } else { "o" }.to_string())
                }
                Child::Node(n) => node_to_json(n),
            })
            .collect(),
    )
}

fn node_from_json(json: &TreeJson) -> Result<Node, String> {
    match json {
        TreeJson::Leaf(s) => Err(format!("expected a node (array), found leaf {s:?}")),
        TreeJson::Node(children) => {
            let children = children
                .iter()
                .map(|c| match c {
                    TreeJson::Leaf(s) => match s.as_str() {
                        "*" => Ok(Child::Leaf {
                            distinguished: true,
                        }),
                        "o" => Ok(Child::Leaf {
                            distinguished: false,
                        }),
                        other => Err(format!("unknown leaf marker {other:?}")),
                    },
                    node => node_from_json(node).map(Child::Node),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Node::new(children))
        }
    }
}

impl Serialize for PlanarTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match &self.root {
            None => serializer.serialize_none(),
            Some(root) => node_to_json(root).serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for PlanarTree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Option::<TreeJson>::deserialize(deserializer)?;
        match raw {
            None => Ok(PlanarTree::empty()),
            Some(json) => node_from_json(&json)
                .map(|root| PlanarTree { root: Some(root) })
                .map_err(D::Error::custom),
        }
    }
}

/// Internal decorated mirror of the tree structure.
#[derive(Clone)]
enum DecChild {
    Leaf { distinguished: bool },
    Node(DecNode),
}

#[derive(Clone)]
struct DecNode {
    config: IntervalConfig,
    children: Vec<DecChild>,
}

/// A tree with every node decorated by a configuration whose arity equals
/// the node's valence; labels are listed in preorder.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TreePoint {
    tree: PlanarTree,
    labels: Vec<IntervalConfig>,
}

impl TreePoint {
    pub fn new(tree: PlanarTree, labels: Vec<IntervalConfig>) -> Result<Self, TreeError> {
        let expected = tree.node_count();
        if labels.len() != expected {
            return Err(TreeError::LabelCount {
                expected,
                found: labels.len(),
            });
        }
        let point = TreePoint { tree, labels };
        point.to_dec()?; // validates arities against valences
        Ok(point)
    }

    /// The decorated empty tree.
    pub fn empty() -> Self {
        TreePoint {
            tree: PlanarTree::empty(),
            labels: Vec::new(),
        }
    }

    /// A corolla decorated with one configuration.
    pub fn corolla(config: IntervalConfig) -> Self {
        TreePoint {
            tree: PlanarTree::corolla(config.arity()),
            labels: vec![config],
        }
    }

    pub fn tree(&self) -> &PlanarTree {
        &self.tree
    }

    pub fn labels(&self) -> &[IntervalConfig] {
        &self.labels
    }

    pub fn arity(&self) -> usize {
        self.tree.arity()
    }

    fn to_dec(&self) -> Result<Option<DecNode>, TreeError> {
        match &self.tree.root {
            None => Ok(None),
            Some(root) => {
                let mut iter = self.labels.iter().enumerate();
                let dec = decorate(root, &mut iter)?;
                Ok(Some(dec))
            }
        }
    }

    fn from_dec(dec: Option<DecNode>) -> TreePoint {
        match dec {
            None => TreePoint::empty(),
            Some(node) => {
                let mut labels = Vec::new();
                let root = strip(&node, &mut labels);
                TreePoint {
                    tree: PlanarTree { root: Some(root) },
                    labels,
                }
            }
        }
    }

    /// Evaluates by substituting children into node configurations from the
    /// leaves up; distinguished leaves stay open as identity slots and
    /// undistinguished leaves close their slot with the empty configuration.
    pub fn eval(&self) -> IntervalConfig {
        match self.to_dec().expect("validated at construction") {
            None => IntervalConfig::empty(),
            Some(dec) => eval_dec(&dec),
        }
    }

    /// Contracts one edge, merging the child's configuration into the
    /// parent's by slot substitution. Evaluation is unchanged.
    pub fn contract(&self, path: &[usize]) -> Result<TreePoint, TreeError> {
        let dec = self.to_dec().expect("validated at construction");
        let root = dec.ok_or_else(|| TreeError::EdgeNotFound {
            path: path.to_vec(),
        })?;
        if path.is_empty() {
            return Err(TreeError::EdgeNotFound { path: Vec::new() });
        }
        let contracted = contract_dec(&root, path)?;
        Ok(TreePoint::from_dec(Some(contracted)))
    }

    /// Contracts every contractible edge, ending in a single corolla (for a
    /// nonempty tree) whose configuration is the evaluation.
    pub fn contract_all(&self) -> TreePoint {
        let mut point = self.clone();
        loop {
            let edges = point.tree.contractible_edges();
            match edges.last() {
                None => return point,
                Some(edge) => {
                    point = point
                        .contract(edge)
                        .expect("edge listed as contractible");
                }
            }
        }
    }

    /// Grafts a decorated tree onto the `index`-th distinguished leaf.
    pub fn graft(&self, index: usize, scion: &TreePoint) -> Result<TreePoint, TreeError> {
        let arity = self.arity();
        if index == 0 || index > arity {
            return Err(TreeError::LeafOutOfRange { index, arity });
        }
        let dec = self
            .to_dec()
            .expect("validated at construction")
            .expect("positive arity implies a root");
        let scion_dec = scion.to_dec().expect("validated at construction");
        let mut counter = 0;
        let grafted = graft_dec(&dec, index, &mut counter, &scion_dec);
        Ok(TreePoint::from_dec(Some(grafted)))
    }
}

fn decorate<'a>(
    node: &Node,
    labels: &mut impl Iterator<Item = (usize, &'a IntervalConfig)>,
) -> Result<DecNode, TreeError> {
    let (index, config) = labels.next().expect("label count checked");
    if config.arity() != node.valence() {
        return Err(TreeError::LabelArity {
            index,
            expected: node.valence(),
            found: config.arity(),
        });
    }
    let children = node
        .children
        .iter()
        .map(|child| match child {
            Child::Leaf { distinguished } => Ok(DecChild::Leaf {
                distinguished: *distinguished,
            }),
            Child::Node(n) => decorate(n, labels).map(DecChild::Node),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DecNode {
        config: config.clone(),
        children,
    })
}

fn strip(dec: &DecNode, labels: &mut Vec<IntervalConfig>) -> Node {
    labels.push(dec.config.clone());
    let children = dec
        .children
        .iter()
        .map(|child| match child {
            DecChild::Leaf { distinguished } => Child::Leaf {
                distinguished: *distinguished,
            },
            DecChild::Node(n) => Child::Node(strip(n, labels)),
        })
        .collect();
    Node::new(children)
}

fn eval_dec(dec: &DecNode) -> IntervalConfig {
    let parts: Vec<IntervalConfig> = dec
        .children
        .iter()
        .map(|child| match child {
            DecChild::Leaf {
                distinguished: true,
            } => IntervalConfig::whole(),
            DecChild::Leaf {
                distinguished: false,
            } => IntervalConfig::empty(),
            DecChild::Node(n) => eval_dec(n),
        })
        .collect();
    dec.config
        .compose(&parts)
        .expect("decorations match valences")
}

fn contract_dec(node: &DecNode, path: &[usize]) -> Result<DecNode, TreeError> {
    let index = path[0];
    if index >= node.children.len() {
        return Err(TreeError::EdgeNotFound {
            path: path.to_vec(),
        });
    }
    let mut children = node.children.clone();
    if path.len() > 1 {
        match &node.children[index] {
            DecChild::Node(n) => {
                children[index] = DecChild::Node(contract_dec(n, &path[1..])?);
                return Ok(DecNode {
                    config: node.config.clone(),
                    children,
                });
            }
            DecChild::Leaf { .. } => {
                return Err(TreeError::EdgeNotFound {
                    path: path.to_vec(),
                })
            }
        }
    }
    match children.remove(index) {
        DecChild::Node(n) => {
            let config = node.config.compose_at(index + 1, &n.config)?;
            for (offset, grandchild) in n.children.into_iter().enumerate() {
                children.insert(index + offset, grandchild);
            }
            Ok(DecNode { config, children })
        }
        DecChild::Leaf {
            distinguished: false,
        } => {
            let config = node
                .config
                .compose_at(index + 1, &IntervalConfig::empty())?;
            Ok(DecNode { config, children })
        }
        DecChild::Leaf {
            distinguished: true,
        } => Err(TreeError::NotContractible {
            path: path.to_vec(),
        }),
    }
}

fn graft_dec(
    node: &DecNode,
    index: usize,
    counter: &mut usize,
    scion: &Option<DecNode>,
) -> DecNode {
    let children = node
        .children
        .iter()
        .map(|child| match child {
            DecChild::Leaf {
                distinguished: true,
            } => {
                *counter += 1;
                if *counter == index {
                    match scion {
                        None => DecChild::Leaf {
                            distinguished: false,
                        },
                        Some(root) => DecChild::Node(root.clone()),
                    }
                } else {
                    child.clone()
                }
            }
            DecChild::Leaf {
                distinguished: false,
            } => child.clone(),
            DecChild::Node(n) => DecChild::Node(graft_dec(n, index, counter, scion)),
        })
        .collect();
    DecNode {
        config: node.config.clone(),
        children,
    }
}

// JSON form: {"tree": ..., "labels": [...]}.

#[derive(Serialize, Deserialize)]
struct TreePointJson {
    tree: PlanarTree,
    labels: Vec<IntervalConfig>,
}

impl Serialize for TreePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TreePointJson {
            tree: self.tree.clone(),
            labels: self.labels.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TreePoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = TreePointJson::deserialize(deserializer)?;
        TreePoint::new(raw.tree, raw.labels).map_err(D::Error::custom)
    }
}
