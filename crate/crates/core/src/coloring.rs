use std::collections::BTreeSet;

use crate::graph::EdgeId;

pub type Color = u32;

/// Edge index to positive color. Entries may be unset while a construction
/// is still running.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeColoring {
    // 0 marks an uncolored edge
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn uncolored(edge_count: usize) -> Self {
        EdgeColoring {
            colors: vec![0; edge_count],
        }
    }

    /// Total coloring from a list of positive colors.
    ///
    /// # Panics
    /// If any color is 0.
    pub fn from_colors(colors: Vec<Color>) -> Self {
        assert!(colors.iter().all(|&c| c > 0), "colors must be positive");
        EdgeColoring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        match self.colors[e] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn set(&mut self, e: EdgeId, color: Color) {
        assert!(color > 0, "colors must be positive");
        self.colors[e] = color;
    }

    pub fn set_uncolored(&mut self, e: EdgeId) {
        self.colors[e] = 0;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c > 0)
    }

    pub fn first_uncolored(&self) -> Option<EdgeId> {
        self.colors.iter().position(|&c| c == 0)
    }

    /// Raw colors, 0 for unset entries.
    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    pub fn distinct_colors(&self) -> BTreeSet<Color> {
        self.colors.iter().copied().filter(|&c| c > 0).collect()
    }

    pub fn colors_used(&self) -> usize {
        self.distinct_colors().len()
    }

    /// Copy the colors of `sub` onto `self`, where edge `i` of `sub` is edge
    /// `edge_map[i]` here. `offset` is added to every copied color.
    pub fn absorb(&mut self, sub: &EdgeColoring, edge_map: &[EdgeId], offset: Color) {
        for (i, &e) in edge_map.iter().enumerate() {
            if let Some(c) = sub.get(i) {
                self.set(e, c + offset);
            }
        }
    }
}
