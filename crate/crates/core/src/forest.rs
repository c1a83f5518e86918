//! Bott diagrams: rooted forests with positive integer edge labels.
//!
//! Vertices are numbered `0..n`. A non-root vertex `v` carries the label of
//! the edge from `v` down to its parent.

use std::fmt;

use crate::error::{Error, Result};

/// Edge label, always at least 1.
pub type Label = u64;

const CLOSE: u64 = 0;

/// A complete isomorphism invariant of labelled rooted forests.
///
/// A vertex encodes as the concatenation of `[label, child...]` over its
/// children sorted lexicographically, followed by a `0` token. A forest is the
/// sorted concatenation of its tree codes. Labels are at least 1, so the
/// encoding is self-delimiting and injective.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u64>);

impl CanonicalCode {
    pub fn tokens(&self) -> &[u64] {
        &self.0
    }

    fn concat<'a, I: IntoIterator<Item = &'a CanonicalCode>>(parts: I) -> Self {
        CanonicalCode(
            parts
                .into_iter()
                .flat_map(|c| c.0.iter().copied())
                .collect(),
        )
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.0 {
            if !first {
                f.write_str(".")?;
            }
            first = false;
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BottDiagram {
    parent: Vec<Option<usize>>,
    label: Vec<Option<Label>>,
}

impl BottDiagram {
    /// Validates that the parent map is acyclic, in range, and that labels
    /// are present (and positive) exactly on non-roots.
    pub fn new(parent: Vec<Option<usize>>, label: Vec<Option<Label>>) -> Result<Self> {
        let n = parent.len();
        if label.len() != n {
            return Err(Error::InvalidDiagram(format!(
                "{} parents but {} labels",
                n,
                label.len()
            )));
        }
        for v in 0..n {
            match (parent[v], label[v]) {
                (None, None) => {}
                (None, Some(_)) => {
                    return Err(Error::InvalidDiagram(format!(
                        "root {} carries a label",
                        v + 1
                    )))
                }
                (Some(_), None) | (Some(_), Some(0)) => {
                    return Err(Error::InvalidDiagram(format!(
                        "vertex {} needs a positive label",
                        v + 1
                    )))
                }
                (Some(p), Some(_)) => {
                    if p >= n {
                        return Err(Error::InvalidDiagram(format!(
                            "vertex {} has parent {} out of range",
                            v + 1,
                            p + 1
                        )));
                    }
                }
            }
        }
        // 0 = unvisited, 1 = on current path, 2 = reaches a root
        let mut state = vec![0u8; n];
        for start in 0..n {
            let mut path = Vec::new();
            let mut v = start;
            loop {
                match state[v] {
                    2 => break,
                    1 => {
                        return Err(Error::InvalidDiagram(format!(
                            "cycle through vertex {}",
                            v + 1
                        )))
                    }
                    _ => {}
                }
                state[v] = 1;
                path.push(v);
                match parent[v] {
                    Some(p) => v = p,
                    None => break,
                }
            }
            for u in path {
                state[u] = 2;
            }
        }
        Ok(BottDiagram { parent, label })
    }

    pub fn empty() -> Self {
        BottDiagram::default()
    }

    /// `n` roots and no edges.
    pub fn edgeless(n: usize) -> Self {
        BottDiagram {
            parent: vec![None; n],
            label: vec![None; n],
        }
    }

    /// A path `0 - 1 - ... - k` rooted at 0; `labels[i]` marks the edge
    /// between `i` and `i + 1`.
    pub fn chain(labels: &[Label]) -> Result<Self> {
        let mut parent = vec![None];
        let mut label = vec![None];
        for (i, &q) in labels.iter().enumerate() {
            parent.push(Some(i));
            label.push(Some(q));
        }
        BottDiagram::new(parent, label)
    }

    /// A root `0` with one leaf child per label.
    pub fn star(labels: &[Label]) -> Result<Self> {
        let mut parent = vec![None];
        let mut label = vec![None];
        for &q in labels {
            parent.push(Some(0));
            label.push(Some(q));
        }
        BottDiagram::new(parent, label)
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn label(&self, v: usize) -> Option<Label> {
        self.label[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn labels(&self) -> &[Option<Label>] {
        &self.label
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&v| self.parent[v].is_none())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.roots().len() == 1
    }

    /// Children of every vertex, in increasing vertex order.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.n()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                ch[*p].push(v);
            }
        }
        ch
    }

    /// Distance of every vertex to its root.
    pub fn depths(&self) -> Vec<usize> {
        let n = self.n();
        let mut depth: Vec<Option<usize>> = vec![None; n];
        for start in 0..n {
            let mut path = Vec::new();
            let mut v = start;
            let base = loop {
                if let Some(d) = depth[v] {
                    break d;
                }
                match self.parent[v] {
                    Some(p) => {
                        path.push(v);
                        v = p;
                    }
                    None => {
                        depth[v] = Some(0);
                        break 0;
                    }
                }
            };
            for (i, u) in path.iter().rev().enumerate() {
                depth[*u] = Some(base + i + 1);
            }
        }
        depth.into_iter().map(|d| d.unwrap_or(0)).collect()
    }

    /// The level partition `A_0, ..., A_r`; `A_k` lists depth-`k` vertices in
    /// increasing order. Empty for the empty forest.
    pub fn levels(&self) -> Vec<Vec<usize>> {
        let depth = self.depths();
        let height = depth.iter().copied().max().map_or(0, |d| d + 1);
        let mut levels = vec![Vec::new(); height];
        for (v, d) in depth.into_iter().enumerate() {
            levels[d].push(v);
        }
        levels
    }

    /// Codes of the subtrees hanging from every vertex.
    pub fn subtree_codes(&self) -> Vec<CanonicalCode> {
        let children = self.children();
        let depth = self.depths();
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(depth[v]));
        let mut codes: Vec<Option<CanonicalCode>> = vec![None; self.n()];
        for v in order {
            let mut entries: Vec<Vec<u64>> = children[v]
                .iter()
                .map(|&c| {
                    let mut e = vec![self.label[c].expect("non-root has a label")];
                    e.extend_from_slice(&codes[c].as_ref().expect("child coded first").0);
                    e
                })
                .collect();
            entries.sort();
            let mut code: Vec<u64> = entries.concat();
            code.push(CLOSE);
            codes[v] = Some(CanonicalCode(code));
        }
        codes.into_iter().map(|c| c.expect("all coded")).collect()
    }

    /// Code of each tree, listed in root order.
    pub fn tree_codes(&self) -> Vec<CanonicalCode> {
        let codes = self.subtree_codes();
        self.roots().into_iter().map(|r| codes[r].clone()).collect()
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        let mut trees = self.tree_codes();
        trees.sort();
        CanonicalCode::concat(&trees)
    }

    pub fn is_isomorphic(&self, other: &BottDiagram) -> bool {
        self.n() == other.n() && self.canonical_code() == other.canonical_code()
    }

    /// The same shape with every label replaced by 1.
    pub fn erase_labels(&self) -> BottDiagram {
        BottDiagram {
            parent: self.parent.clone(),
            label: self.label.iter().map(|l| l.map(|_| 1)).collect(),
        }
    }

    /// Renumber vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn renumber(&self, perm: &[usize]) -> BottDiagram {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut parent = vec![None; n];
        let mut label = vec![None; n];
        for v in 0..n {
            parent[perm[v]] = self.parent[v].map(|p| perm[p]);
            label[perm[v]] = self.label[v];
        }
        BottDiagram { parent, label }
    }

    /// Induced sub-forest on `keep` (listed in the order of the new
    /// numbering). Vertices whose parent is dropped become roots and lose
    /// their label.
    pub fn induced(&self, keep: &[usize]) -> BottDiagram {
        let mut index = vec![None; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = Some(i);
        }
        let mut parent = Vec::with_capacity(keep.len());
        let mut label = Vec::with_capacity(keep.len());
        for &v in keep {
            match self.parent[v].and_then(|p| index[p]) {
                Some(p) => {
                    parent.push(Some(p));
                    label.push(self.label[v]);
                }
                None => {
                    parent.push(None);
                    label.push(None);
                }
            }
        }
        BottDiagram { parent, label }
    }

    /// Vertices of the tree containing root `r`, in increasing order.
    fn tree_vertices(&self, r: usize, children: &[Vec<usize>]) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![r];
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(children[v].iter().copied());
        }
        out.sort_unstable();
        out
    }

    /// The connected components, one tree per root in root order.
    pub fn components(&self) -> Vec<BottDiagram> {
        let children = self.children();
        self.roots()
            .into_iter()
            .map(|r| self.induced(&self.tree_vertices(r, &children)))
            .collect()
    }

    /// Disjoint union; vertices of `parts[i]` follow those of `parts[i-1]`.
    pub fn disjoint_union<'a, I>(parts: I) -> BottDiagram
    where
        I: IntoIterator<Item = &'a BottDiagram>,
    {
        let mut parent = Vec::new();
        let mut label = Vec::new();
        for d in parts {
            let offset = parent.len();
            parent.extend(d.parent.iter().map(|p| p.map(|p| p + offset)));
            label.extend_from_slice(&d.label);
        }
        BottDiagram { parent, label }
    }

    /// Delete root `r` and promote its children to roots, dropping their
    /// labels. Remaining vertices keep their relative order.
    pub fn delete_root(&self, r: usize) -> Result<BottDiagram> {
        if r >= self.n() || self.parent[r].is_some() {
            return Err(Error::InvalidDiagram(format!(
                "vertex {} is not a root",
                r + 1
            )));
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| v != r).collect();
        Ok(self.induced(&keep))
    }

    /// A new root (vertex 0) with every current root attached to it by an
    /// edge labelled `label`.
    pub fn attach_to_new_root(&self, label: Label) -> Result<BottDiagram> {
        let mut parent = vec![None];
        let mut labels = vec![None];
        for v in 0..self.n() {
            match self.parent[v] {
                Some(p) => {
                    parent.push(Some(p + 1));
                    labels.push(self.label[v]);
                }
                None => {
                    parent.push(Some(0));
                    labels.push(Some(label));
                }
            }
        }
        BottDiagram::new(parent, labels)
    }
}
