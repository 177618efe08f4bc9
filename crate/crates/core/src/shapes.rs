//! Partitions, shifted diagrams and their box geometry.
//!
//! Boxes are addressed as `(row, col)`, both 1-based, with `row <= col`.
//! Row `r` of the shifted diagram `D_λ` occupies columns `r..=n + λ_r`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition with at most `n` parts, stored zero-padded to length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Pads `parts` with zeros to length `n`.
    pub fn new(parts: Vec<u32>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if parts.len() > n {
            return Err(Error::TooManyParts { got: parts.len(), n });
        }
        for (position, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::NotDecreasing {
                    position: position + 1,
                    before: w[0],
                    after: w[1],
                });
            }
        }
        let mut parts = parts;
        parts.resize(n, 0);
        Ok(Partition { parts })
    }

    /// The empty partition with `n` zero parts.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(Vec::new(), n)
    }

    /// Parses a comma-separated list such as `"4,2,1,0"`, padding to `n`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let trimmed = text.trim();
        let mut parts = Vec::new();
        if !trimmed.is_empty() {
            for piece in trimmed.split(',') {
                let piece = piece.trim();
                if piece.starts_with('-') {
                    return Err(Error::BadPart {
                        text: piece.to_string(),
                        reason: "parts must be non-negative".to_string(),
                    });
                }
                let value = u32::from_str(piece).map_err(|e| Error::BadPart {
                    text: piece.to_string(),
                    reason: e.to_string(),
                })?;
                parts.push(value);
            }
        }
        Self::new(parts, n)
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `λ_r` for a 1-based row index.
    pub fn part(&self, row: usize) -> u32 {
        self.parts[row - 1]
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of strictly positive parts (the `k` of the building set `B_k`).
    pub fn positive_part_count(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// Every partition of length `n` whose largest part is at most `max_part`,
    /// in lexicographic order of the parts.
    pub fn all_bounded(n: usize, max_part: u32) -> Vec<Partition> {
        fn extend(prefix: &mut Vec<u32>, n: usize, cap: u32, out: &mut Vec<Partition>) {
            if prefix.len() == n {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in 0..=cap {
                prefix.push(p);
                extend(prefix, n, p, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            extend(&mut Vec::with_capacity(n), n, max_part, &mut out);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// positive_part_count as a free function, for symmetry with the other operations.
pub fn positive_part_count(lambda: &Partition) -> usize {
    lambda.positive_part_count()
}

/// A box of a shifted diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The shifted diagram `D_λ` with its boxes in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedDiagram {
    lambda: Partition,
    boxes: Vec<Cell>,
    row_offsets: Vec<usize>,
}

impl ShiftedDiagram {
    /// Builds `D_λ` for the partition's ambient `n`.
    pub fn new(lambda: Partition) -> Self {
        let n = lambda.n();
        let mut boxes = Vec::new();
        let mut row_offsets = Vec::with_capacity(n + 1);
        for row in 1..=n {
            row_offsets.push(boxes.len());
            let end = n + lambda.part(row) as usize;
            boxes.extend((row..=end).map(|col| Cell::new(row, col)));
        }
        row_offsets.push(boxes.len());
        ShiftedDiagram {
            lambda,
            boxes,
            row_offsets,
        }
    }

    /// The triangular staircase `D_∅`.
    pub fn staircase(n: usize) -> Result<Self> {
        Ok(Self::new(Partition::empty(n)?))
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn boxes(&self) -> &[Cell] {
        &self.boxes
    }

    /// Number of boxes, `binom(n+1, 2) + |λ|`.
    pub fn size(&self) -> usize {
        self.boxes.len()
    }

    /// Last column of a 1-based row.
    pub fn row_end(&self, row: usize) -> usize {
        self.n() + self.lambda.part(row) as usize
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.row_offsets[row] - self.row_offsets[row - 1]
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.row <= self.n() && cell.col >= cell.row && cell.col <= self.row_end(cell.row)
    }

    /// Row-major position of a box, if it belongs to the diagram.
    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        self.contains(cell)
            .then(|| self.row_offsets[cell.row - 1] + (cell.col - cell.row))
    }

    /// Row-major position of the diagonal box `(i, i)`.
    pub fn diagonal_index(&self, i: usize) -> usize {
        self.row_offsets[i - 1]
    }

    /// Position of the box to the left, if any.
    pub fn left_of(&self, idx: usize) -> Option<usize> {
        let cell = self.boxes[idx];
        (cell.col > cell.row).then(|| idx - 1)
    }

    /// Position of the box above, if any.
    pub fn above(&self, idx: usize) -> Option<usize> {
        let cell = self.boxes[idx];
        if cell.row == 1 {
            None
        } else {
            self.index_of(Cell::new(cell.row - 1, cell.col))
        }
    }
}

/// Builds `D_λ`; `lambda` already carries `n` and has been validated.
pub fn build_diagram(lambda: &Partition) -> ShiftedDiagram {
    ShiftedDiagram::new(lambda.clone())
}

pub fn diagram_size(d: &ShiftedDiagram) -> usize {
    d.size()
}

/// `binom(n+1, 2) + |λ|` without enumerating boxes.
pub fn expected_size(lambda: &Partition) -> usize {
    let n = lambda.n();
    n * (n + 1) / 2 + lambda.sum() as usize
}
