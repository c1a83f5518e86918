//! Enumeration of Bott diagrams up to isomorphism.
//!
//! Every forest on `n` vertices arises from one on `n - 1` vertices by adding
//! a leaf or an isolated root, so we grow one vertex at a time and keep one
//! representative per canonical code at every size.

use std::collections::BTreeMap;

use crate::forest::{BottDiagram, CanonicalCode, Label};

fn extend(d: &BottDiagram, parent: Option<usize>, label: Option<Label>) -> BottDiagram {
    let mut parents = d.parents().to_vec();
    let mut labels = d.labels().to_vec();
    parents.push(parent);
    labels.push(label);
    BottDiagram::new(parents, labels).expect("adding a leaf keeps the forest valid")
}

/// All isomorphism classes of `n`-vertex forests with labels in
/// `1..=qmax`, in ascending canonical-code order.
pub fn enumerate_labelled(n: usize, qmax: Label) -> Vec<BottDiagram> {
    let mut classes: BTreeMap<CanonicalCode, BottDiagram> = BTreeMap::new();
    let empty = BottDiagram::empty();
    classes.insert(empty.canonical_code(), empty);
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for d in classes.values() {
            let grown = extend(d, None, None);
            next.entry(grown.canonical_code()).or_insert(grown);
            for p in 0..d.n() {
                for q in 1..=qmax {
                    let grown = extend(d, Some(p), Some(q));
                    next.entry(grown.canonical_code()).or_insert(grown);
                }
            }
        }
        classes = next;
    }
    classes.into_values().collect()
}

/// All unlabelled rooted forests on `n` vertices (every label is 1).
pub fn enumerate_shapes(n: usize) -> Vec<BottDiagram> {
    enumerate_labelled(n, 1)
}
