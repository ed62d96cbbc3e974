//! Decorated planar rooted forests.
//!
//! Letters decorate leaves only; every internal vertex carries the reserved
//! decoration `sigma`. A bracket `[u]` corresponds to grafting the forest of
//! `u` onto a new `sigma` root, and concatenation of words to concatenation of
//! forests. Under this correspondence the forbidden pattern of Reynolds words
//! becomes a *super crown*: a `sigma` vertex whose two or more children are all
//! `sigma` vertices.

use std::fmt::Write as _;

use thiserror::Error;

use crate::words::{Atom, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("internal vertex decorated by letter `{0}`")]
    DecoratedInternalVertex(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Decoration {
    Letter(Letter),
    Sigma,
}

impl Decoration {
    pub fn label(&self) -> &str {
        match self {
            Decoration::Letter(l) => l.name(),
            Decoration::Sigma => "sigma",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecoratedTree {
    pub decoration: Decoration,
    pub children: Vec<DecoratedTree>,
}

impl DecoratedTree {
    pub fn leaf(letter: Letter) -> Self {
        Self {
            decoration: Decoration::Letter(letter),
            children: Vec::new(),
        }
    }

    /// New `sigma` root over the trees of `forest`.
    pub fn graft(forest: DecoratedForest) -> Self {
        Self {
            decoration: Decoration::Sigma,
            children: forest.trees,
        }
    }

    pub fn is_sigma(&self) -> bool {
        self.decoration == Decoration::Sigma
    }

    pub fn vertex_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(DecoratedTree::vertex_count)
            .sum::<usize>()
    }

    fn to_atom(&self) -> Result<Atom, ForestError> {
        match &self.decoration {
            Decoration::Letter(l) if self.children.is_empty() => Ok(Atom::Letter(l.clone())),
            Decoration::Letter(l) => {
                Err(ForestError::DecoratedInternalVertex(l.name().to_string()))
            }
            Decoration::Sigma => {
                let inner = self
                    .children
                    .iter()
                    .map(DecoratedTree::to_atom)
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Atom::Bracket(Word::from_atoms(inner)))
            }
        }
    }

    fn has_super_crown(&self) -> bool {
        let crown = self.is_sigma()
            && self.children.len() >= 2
            && self.children.iter().all(DecoratedTree::is_sigma);
        crown || self.children.iter().any(DecoratedTree::has_super_crown)
    }
}

/// Ordered sequence of trees; the empty forest is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DecoratedForest {
    pub trees: Vec<DecoratedTree>,
}

impl DecoratedForest {
    pub fn new(trees: Vec<DecoratedTree>) -> Self {
        Self { trees }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn concat(&self, other: &DecoratedForest) -> DecoratedForest {
        let mut trees = self.trees.clone();
        trees.extend_from_slice(&other.trees);
        DecoratedForest { trees }
    }

    /// The one-tree forest obtained by grafting `self` onto a `sigma` root.
    pub fn graft(&self) -> DecoratedForest {
        DecoratedForest {
            trees: vec![DecoratedTree::graft(self.clone())],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.trees.iter().map(DecoratedTree::vertex_count).sum()
    }
}

pub fn word_to_forest(word: &Word) -> DecoratedForest {
    DecoratedForest {
        trees: word
            .atoms()
            .iter()
            .map(|atom| match atom {
                Atom::Letter(l) => DecoratedTree::leaf(l.clone()),
                Atom::Bracket(inner) => DecoratedTree::graft(word_to_forest(inner)),
            })
            .collect(),
    }
}

pub fn forest_to_word(forest: &DecoratedForest) -> Result<Word, ForestError> {
    let atoms = forest
        .trees
        .iter()
        .map(DecoratedTree::to_atom)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Word::from_atoms(atoms))
}

pub fn has_super_crown(forest: &DecoratedForest) -> bool {
    forest.trees.iter().any(DecoratedTree::has_super_crown)
}

/// Graphviz digraph. Vertices are numbered in preorder across the forest and
/// each edge is labelled with the child's 1-based position under its parent.
pub fn to_dot(forest: &DecoratedForest) -> String {
    let mut nodes = String::new();
    let mut edges = String::new();
    let mut next = 0usize;
    for tree in &forest.trees {
        emit(tree, &mut next, &mut nodes, &mut edges);
    }
    format!("digraph forest {{\n{nodes}{edges}}}\n")
}

fn emit(tree: &DecoratedTree, next: &mut usize, nodes: &mut String, edges: &mut String) -> usize {
    let id = *next;
    *next += 1;
    let _ = writeln!(nodes, "  n{id} [label=\"{}\"];", tree.decoration.label());
    for (ordinal, child) in tree.children.iter().enumerate() {
        let child_id = emit(child, next, nodes, edges);
        let _ = writeln!(edges, "  n{id} -> n{child_id} [label=\"{}\"];", ordinal + 1);
    }
    id
}
