//! Cards and decks of rooted forests, and reconstruction of a forest from
//! its deck.
//!
//! The card at a root is the forest with that root deleted and its children
//! promoted to roots; the labels of the deleted edges are lost. With at
//! least two cards the forest is determined, labels included. A single card
//! determines the shape only: the labels on the edges at the root are
//! unrecoverable.

use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::forest::{BottDiagram, CanonicalCode};

pub type Card = BottDiagram;

/// One card per root of the source forest.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Deck {
    pub cards: Vec<Card>,
}

impl Deck {
    pub fn new(cards: Vec<Card>) -> Self {
        Deck { cards }
    }

    pub fn len(&self) -> usize {
        self.cards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }

    /// Sorted card codes; equal for two decks iff there is a bijection
    /// between their cards matching isomorphic cards.
    pub fn canonical_codes(&self) -> Vec<CanonicalCode> {
        let mut codes: Vec<CanonicalCode> =
            self.cards.iter().map(BottDiagram::canonical_code).collect();
        codes.sort();
        codes
    }
}

pub fn make_deck(d: &BottDiagram) -> Result<Deck> {
    let roots = d.roots();
    if roots.is_empty() {
        return Err(Error::EmptyForest);
    }
    let cards = roots
        .into_iter()
        .map(|r| d.delete_root(r))
        .collect::<Result<Vec<_>>>()?;
    Ok(Deck { cards })
}

/// Outcome of [`reconstruct`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reconstruction {
    Forest(BottDiagram),
    /// Labelled reconstruction from a single card. `shape` is the tree with
    /// every unknown label set to 1; `unknown` lists the vertices whose edge
    /// to the root has an unknown label.
    Ambiguous {
        shape: BottDiagram,
        unknown: Vec<usize>,
    },
}

impl Reconstruction {
    pub fn forest(&self) -> Option<&BottDiagram> {
        match self {
            Reconstruction::Forest(f) => Some(f),
            Reconstruction::Ambiguous { .. } => None,
        }
    }
}

/// Number of components of `f` isomorphic to the tree `t`.
pub fn count_copies(f: &BottDiagram, t: &BottDiagram, labelled: bool) -> Result<usize> {
    if !t.is_connected() {
        return Err(Error::NotConnected);
    }
    let (f, t) = if labelled {
        (f.clone(), t.clone())
    } else {
        (f.erase_labels(), t.erase_labels())
    };
    let code = t.canonical_code();
    Ok(f.tree_codes().iter().filter(|c| **c == code).count())
}

/// Components sorted by code, renumbered consecutively.
fn canonical_arrangement(trees: &[(CanonicalCode, BottDiagram)]) -> BottDiagram {
    let mut sorted: Vec<&(CanonicalCode, BottDiagram)> = trees.iter().collect();
    sorted.sort_by(|a, b| a.0.cmp(&b.0));
    BottDiagram::disjoint_union(sorted.into_iter().map(|(_, t)| t))
}

fn coded_trees(d: &BottDiagram) -> Vec<(CanonicalCode, BottDiagram)> {
    d.tree_codes().into_iter().zip(d.components()).collect()
}

/// Rebuild a forest from its deck. In unlabelled mode all labels are
/// ignored and the result carries label 1 everywhere.
pub fn reconstruct(deck: &Deck, labelled: bool) -> Result<Reconstruction> {
    let cards: Vec<BottDiagram> = if labelled {
        deck.cards.clone()
    } else {
        deck.cards.iter().map(BottDiagram::erase_labels).collect()
    };
    let Some(first) = cards.first() else {
        return Err(Error::InvalidDeck("no cards".into()));
    };
    let size = first.n();
    if let Some(i) = cards.iter().position(|c| c.n() != size) {
        return Err(Error::InvalidDeck(format!(
            "card {} has {} vertices, card 1 has {}",
            i + 1,
            cards[i].n(),
            size
        )));
    }

    if cards.len() == 1 {
        let arranged = canonical_arrangement(&coded_trees(first));
        let shape = arranged.attach_to_new_root(1)?;
        if !labelled {
            return Ok(Reconstruction::Forest(shape));
        }
        let unknown = (1..shape.n())
            .filter(|&v| shape.parent(v) == Some(0))
            .collect();
        return Ok(Reconstruction::Ambiguous { shape, unknown });
    }

    let k = cards.len();
    let trees: Vec<Vec<(CanonicalCode, BottDiagram)>> = cards.iter().map(coded_trees).collect();

    // A largest tree on any card is an original component, never a child.
    let (t_code, t) = trees
        .iter()
        .flatten()
        .min_by_key(|(code, tree)| (Reverse(tree.n()), code.clone()))
        .cloned()
        .ok_or_else(|| Error::InvalidDeck("all cards are empty".into()))?;

    let counts: Vec<usize> = trees
        .iter()
        .map(|card| card.iter().filter(|(c, _)| *c == t_code).count())
        .collect();
    let lo = *counts.iter().min().expect("k >= 2");
    let hi = *counts.iter().max().expect("k >= 2");
    let r = if lo == hi {
        if hi + 1 != k {
            return Err(Error::InvalidDeck(format!(
                "largest tree occurs {hi} times on every one of {k} cards"
            )));
        }
        k
    } else {
        if hi != lo + 1 {
            return Err(Error::InvalidDeck(format!(
                "largest tree multiplicities range from {lo} to {hi}"
            )));
        }
        hi
    };
    let short = counts.iter().filter(|&&c| c + 1 == r).count();
    if short != r {
        return Err(Error::InvalidDeck(format!(
            "{short} cards lack a copy of the largest tree, expected {r}"
        )));
    }

    // A card from deleting a copy of T holds the rest of the forest intact,
    // r - 1 copies of T, and the children of the deleted copy. Swapping those
    // children back for T yields the forest.
    let source = (0..k)
        .filter(|&i| counts[i] + 1 == r)
        .min_by_key(|&i| cards[i].canonical_code())
        .expect("r >= 1 short cards");
    let mut remaining = trees[source].clone();
    let t_root = t.roots()[0];
    for child in t.delete_root(t_root)?.tree_codes() {
        let pos = remaining
            .iter()
            .position(|(c, _)| *c == child)
            .ok_or_else(|| {
                Error::InvalidDeck("a card is missing the children of the largest tree".into())
            })?;
        remaining.swap_remove(pos);
    }
    remaining.push((t_code, t));
    let forest = canonical_arrangement(&remaining);

    let expected = Deck::new(cards).canonical_codes();
    if make_deck(&forest)?.canonical_codes() != expected {
        return Err(Error::InvalidDeck(
            "cards are not the deck of any forest".into(),
        ));
    }
    Ok(Reconstruction::Forest(forest))
}
