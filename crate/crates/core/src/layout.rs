//! Constituents, layouts, and linear orders.
//!
//! A layout is one root constituent plus `n >= 1` dependent constituents.
//! Every constituent spans one or more words and designates one of them as
//! its head word.  A linearization arranges the constituents left to right;
//! word positions are 1-based and follow by concatenating the constituents
//! in that order.

use crate::error::{Error, Result};

/// One constituent: a contiguous block of words with a designated head word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Constituent {
    size_words: usize,
    head_word_offset: usize,
}

impl Constituent {
    /// A single-word constituent.
    pub fn atomic() -> Self {
        Constituent { size_words: 1, head_word_offset: 0 }
    }

    /// A constituent of `size_words` words whose head word sits at
    /// `head_word_offset` (0-based) within the block.
    pub fn new(size_words: usize, head_word_offset: usize) -> Result<Self> {
        if size_words == 0 {
            return Err(Error::domain("constituent size must be at least 1 word"));
        }
        if head_word_offset >= size_words {
            return Err(Error::domain(format!(
                "head word offset {head_word_offset} out of range for a {size_words}-word constituent"
            )));
        }
        Ok(Constituent { size_words, head_word_offset })
    }

    /// A constituent of `size_words` words with the head word first.
    pub fn with_size(size_words: usize) -> Result<Self> {
        Constituent::new(size_words, 0)
    }

    pub fn size_words(&self) -> usize {
        self.size_words
    }

    pub fn head_word_offset(&self) -> usize {
        self.head_word_offset
    }
}

/// A root constituent together with its dependents.
///
/// Constituent indices are 0-based; `root_index` picks the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstituentLayout {
    constituents: Vec<Constituent>,
    root_index: usize,
}

impl ConstituentLayout {
    pub fn new(constituents: Vec<Constituent>, root_index: usize) -> Result<Self> {
        if constituents.len() < 2 {
            return Err(Error::domain("a layout needs a root and at least one dependent"));
        }
        if root_index >= constituents.len() {
            return Err(Error::domain(format!(
                "root index {root_index} out of range for {} constituents",
                constituents.len()
            )));
        }
        Ok(ConstituentLayout { constituents, root_index })
    }

    /// `dependent_count + 1` single-word constituents with the root at
    /// `root_index`.
    pub fn atomic(dependent_count: usize, root_index: usize) -> Result<Self> {
        ConstituentLayout::new(vec![Constituent::atomic(); dependent_count + 1], root_index)
    }

    pub fn constituents(&self) -> &[Constituent] {
        &self.constituents
    }

    pub fn root_index(&self) -> usize {
        self.root_index
    }

    pub fn len(&self) -> usize {
        self.constituents.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of dependents (`n`).
    pub fn dependent_count(&self) -> usize {
        self.constituents.len() - 1
    }

    pub fn total_words(&self) -> usize {
        self.constituents.iter().map(|c| c.size_words()).sum()
    }

    /// True when every constituent spans exactly one word.
    pub fn is_atomic(&self) -> bool {
        self.constituents.iter().all(|c| c.size_words() == 1)
    }

    /// The same layout with every constituent shrunk to a single word.
    pub fn atomized(&self) -> ConstituentLayout {
        ConstituentLayout {
            constituents: vec![Constituent::atomic(); self.constituents.len()],
            root_index: self.root_index,
        }
    }
}

/// A left-to-right arrangement of a layout's constituents.
///
/// `order[k]` is the constituent index placed at rank `k + 1`; ranks are
/// 1-based like word positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linearization {
    order: Vec<usize>,
}

impl Linearization {
    /// Builds a linearization from constituent indices, rejecting anything
    /// that is not a permutation of `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; order.len()];
        for &index in &order {
            if index >= order.len() || seen[index] {
                return Err(Error::domain(format!(
                    "linearization {order:?} is not a permutation of constituent indices"
                )));
            }
            seen[index] = true;
        }
        if order.is_empty() {
            return Err(Error::domain("linearization must place at least one constituent"));
        }
        Ok(Linearization { order })
    }

    /// The identity arrangement of `len` constituents.
    pub fn identity(len: usize) -> Result<Self> {
        Linearization::new((0..len).collect())
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// 1-based rank of a constituent in this arrangement.
    pub fn rank(&self, constituent_index: usize) -> Result<usize> {
        self.order
            .iter()
            .position(|&i| i == constituent_index)
            .map(|pos| pos + 1)
            .ok_or_else(|| {
                Error::domain(format!("constituent {constituent_index} not in linearization"))
            })
    }

    /// 1-based rank of the layout's root constituent.
    pub fn head_position(&self, layout: &ConstituentLayout) -> Result<usize> {
        self.check_matches(layout)?;
        self.rank(layout.root_index())
    }

    /// 1-based word position of every constituent's head word, indexed by
    /// constituent index.
    pub fn head_word_positions(&self, layout: &ConstituentLayout) -> Result<Vec<usize>> {
        self.check_matches(layout)?;
        let mut positions = vec![0usize; layout.len()];
        let mut next_word = 1usize;
        for &index in &self.order {
            let constituent = layout.constituents()[index];
            positions[index] = next_word + constituent.head_word_offset();
            next_word += constituent.size_words();
        }
        Ok(positions)
    }

    fn check_matches(&self, layout: &ConstituentLayout) -> Result<()> {
        if self.order.len() != layout.len() {
            return Err(Error::domain(format!(
                "linearization places {} constituents but the layout has {}",
                self.order.len(),
                layout.len()
            )));
        }
        Ok(())
    }
}
