//! Standard shifted tableaux, diagonal vectors and the counts `N_λ(a)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, ShiftedDiagram};

/// The entries on the main diagonal, `(T(1,1), …, T(n,n))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagonalVector(pub Vec<u32>);

/// `a_i = d_{i+1} - d_i - 1` with the sentinel `d_{n+1} = |D_λ| + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GapVector(pub Vec<u32>);

impl DiagonalVector {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Gap vector for a diagram with `size` boxes.
    pub fn gaps(&self, size: usize) -> GapVector {
        let sentinel = size as u32 + 1;
        let gaps = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let next = self.0.get(i + 1).copied().unwrap_or(sentinel);
                next - d - 1
            })
            .collect();
        GapVector(gaps)
    }
}

impl GapVector {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Inverse of [`DiagonalVector::gaps`]: `d_i = i + Σ_{j<i} a_j`.
    pub fn to_diagonal(&self) -> DiagonalVector {
        let mut acc = 1;
        let mut diag = Vec::with_capacity(self.0.len());
        for &a in &self.0 {
            diag.push(acc);
            acc += a + 1;
        }
        DiagonalVector(diag)
    }
}

pub fn gap_vector(diag: &DiagonalVector, size: usize) -> GapVector {
    diag.gaps(size)
}

pub fn diag_from_gaps(gaps: &GapVector) -> DiagonalVector {
    gaps.to_diagonal()
}

impl fmt::Display for DiagonalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for GapVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[u32]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// A filling of a shifted diagram, entries stored in row-major box order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedTableau {
    diagram: Arc<ShiftedDiagram>,
    entries: Vec<u32>,
}

impl ShiftedTableau {
    /// Wraps a row-major entry list. Only the box count is checked here;
    /// use [`ShiftedTableau::is_standard`] for the ordering conditions.
    pub fn new(diagram: Arc<ShiftedDiagram>, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != diagram.size() {
            return Err(Error::ShapeMismatch {
                expected: diagram.size(),
                got: entries.len(),
            });
        }
        Ok(ShiftedTableau { diagram, entries })
    }

    /// Builds a tableau from rows; row `r` must have exactly the diagram's row length.
    pub fn from_rows(diagram: Arc<ShiftedDiagram>, rows: &[Vec<u32>]) -> Result<Self> {
        let shape_ok = rows.len() == diagram.n()
            && rows
                .iter()
                .enumerate()
                .all(|(r, row)| row.len() == diagram.row_len(r + 1));
        if !shape_ok {
            return Err(Error::ShapeMismatch {
                expected: diagram.size(),
                got: rows.iter().map(Vec::len).sum(),
            });
        }
        let entries = rows.concat();
        Self::new(diagram, entries)
    }

    pub fn diagram(&self) -> &ShiftedDiagram {
        &self.diagram
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.diagram.index_of(cell).map(|i| self.entries[i])
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        let mut start = 0;
        (1..=self.diagram.n())
            .map(|r| {
                let len = self.diagram.row_len(r);
                let row = self.entries[start..start + len].to_vec();
                start += len;
                row
            })
            .collect()
    }

    /// Bijective onto `1..=|D_λ|` and strictly increasing along rows and columns.
    pub fn is_standard(&self) -> bool {
        entries_are_standard(&self.diagram, &self.entries)
    }

    pub fn diagonal(&self) -> DiagonalVector {
        DiagonalVector(
            (1..=self.diagram.n())
                .map(|i| self.entries[self.diagram.diagonal_index(i)])
                .collect(),
        )
    }

    pub fn gaps(&self) -> GapVector {
        self.diagonal().gaps(self.diagram.size())
    }
}

/// [`ShiftedTableau::is_standard`] on a bare row-major entry slice.
pub fn entries_are_standard(d: &ShiftedDiagram, entries: &[u32]) -> bool {
    let size = d.size();
    if entries.len() != size {
        return false;
    }
    let mut seen = vec![false; size + 1];
    for &e in entries {
        let e = e as usize;
        if e == 0 || e > size || seen[e] {
            return false;
        }
        seen[e] = true;
    }
    (0..size).all(|idx| {
        let v = entries[idx];
        let left_ok = d.left_of(idx).is_none_or(|l| entries[l] < v);
        let above_ok = d.above(idx).is_none_or(|a| entries[a] < v);
        left_ok && above_ok
    })
}

pub fn validate_tableau(t: &ShiftedTableau) -> bool {
    t.is_standard()
}

pub fn diagonal_vector(t: &ShiftedTableau) -> DiagonalVector {
    t.diagonal()
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.len().to_string().len();
        for (r, row) in self.rows().iter().enumerate() {
            write!(f, "{:indent$}", "", indent = r * (width + 1))?;
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Lazily enumerates every standard tableau of a diagram in lexicographic
/// order of the row-major entry sequence.
///
/// Boxes are filled in row-major order, trying values in increasing order.
/// A candidate is kept only if the unfilled boxes can still be completed,
/// which is decided by scheduling the unused values greedily (smallest value
/// to the first box whose predecessors are already smaller). The search
/// therefore never enters a dead branch.
pub struct Tableaux {
    diagram: Arc<ShiftedDiagram>,
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    entries: Vec<u32>,
    used: Vec<bool>,
    scratch: Vec<u32>,
    state: SearchState,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SearchState {
    Fresh,
    Emitted,
    Exhausted,
}

impl Tableaux {
    pub fn new(diagram: Arc<ShiftedDiagram>) -> Self {
        let size = diagram.size();
        let left = (0..size).map(|i| diagram.left_of(i)).collect();
        let above = (0..size).map(|i| diagram.above(i)).collect();
        Tableaux {
            diagram,
            left,
            above,
            entries: vec![0; size],
            used: vec![false; size + 1],
            scratch: vec![0; size],
            state: SearchState::Fresh,
        }
    }

    fn lower_bound(&self, pos: usize) -> u32 {
        let l = self.left[pos].map_or(0, |i| self.entries[i]);
        let a = self.above[pos].map_or(0, |i| self.entries[i]);
        l.max(a)
    }

    /// Can positions after `pos` be completed with the unused values?
    fn completable(&mut self, pos: usize) -> bool {
        let size = self.entries.len();
        self.scratch.copy_from_slice(&self.entries);
        let mut next_free = pos + 1;
        for v in 1..=size as u32 {
            if self.used[v as usize] {
                continue;
            }
            while next_free < size && self.scratch[next_free] != 0 {
                next_free += 1;
            }
            let ready = |q: usize, scratch: &[u32]| {
                let ok = |p: Option<usize>| p.is_none_or(|p| scratch[p] != 0 && scratch[p] < v);
                scratch[q] == 0 && ok(self.left[q]) && ok(self.above[q])
            };
            match (next_free..size).find(|&q| ready(q, &self.scratch)) {
                Some(q) => self.scratch[q] = v,
                None => return false,
            }
        }
        true
    }

    /// Moves to the next complete filling. With `resume`, the current
    /// complete filling is abandoned first.
    fn advance(&mut self, resume: bool) -> bool {
        let size = self.entries.len();
        let mut pos = if resume { size - 1 } else { 0 };
        loop {
            let current = self.entries[pos];
            if current != 0 {
                self.used[current as usize] = false;
            }
            let start = current.max(self.lower_bound(pos)) + 1;
            let mut found = false;
            for v in start..=size as u32 {
                if self.used[v as usize] {
                    continue;
                }
                self.entries[pos] = v;
                self.used[v as usize] = true;
                if self.completable(pos) {
                    found = true;
                    break;
                }
                self.used[v as usize] = false;
            }
            if found {
                if pos + 1 == size {
                    return true;
                }
                pos += 1;
                self.entries[pos] = 0;
            } else {
                self.entries[pos] = 0;
                if pos == 0 {
                    return false;
                }
                pos -= 1;
            }
        }
    }
}

impl Iterator for Tableaux {
    type Item = ShiftedTableau;

    fn next(&mut self) -> Option<ShiftedTableau> {
        let found = match self.state {
            SearchState::Exhausted => return None,
            SearchState::Fresh => self.advance(false),
            SearchState::Emitted => self.advance(true),
        };
        if found {
            self.state = SearchState::Emitted;
            Some(ShiftedTableau {
                diagram: Arc::clone(&self.diagram),
                entries: self.entries.clone(),
            })
        } else {
            self.state = SearchState::Exhausted;
            None
        }
    }
}

/// Every standard tableau of `d`, in canonical order.
pub fn enumerate_tableaux(d: &ShiftedDiagram) -> Tableaux {
    Tableaux::new(Arc::new(d.clone()))
}

/// Visits every standard tableau of `d` as a row-major entry slice.
///
/// Values are placed in increasing order into the addable boxes of the
/// current filled region (linear-extension backtracking). The visiting order
/// is deterministic but not the canonical one; use [`enumerate_tableaux`]
/// when order matters.
pub fn for_each_tableau<F: FnMut(&[u32])>(d: &ShiftedDiagram, mut visit: F) {
    let n = d.n();
    let row_len: Vec<usize> = (1..=n).map(|r| d.row_len(r)).collect();
    let row_offset: Vec<usize> = (1..=n).map(|r| d.diagonal_index(r)).collect();
    let mut filled = vec![0usize; n];
    let mut entries = vec![0u32; d.size()];

    #[allow(clippy::too_many_arguments)]
    fn place<F: FnMut(&[u32])>(
        value: u32,
        size: u32,
        row_len: &[usize],
        row_offset: &[usize],
        filled: &mut [usize],
        entries: &mut [u32],
        visit: &mut F,
    ) {
        if value > size {
            visit(entries);
            return;
        }
        for r in 0..filled.len() {
            let l = filled[r];
            if l == row_len[r] {
                continue;
            }
            // 0-based: row r occupies columns r.., so the next box sits in column r + l,
            // and the box above it is filled iff row r-1 reaches that column.
            if r > 0 && (r - 1) + filled[r - 1] <= r + l {
                continue;
            }
            entries[row_offset[r] + l] = value;
            filled[r] += 1;
            place(value + 1, size, row_len, row_offset, filled, entries, visit);
            filled[r] -= 1;
        }
    }

    place(
        1,
        d.size() as u32,
        &row_len,
        &row_offset,
        &mut filled,
        &mut entries,
        &mut visit,
    );
}

/// Some standard tableau with the given diagonal, found by placing values in
/// increasing order and forcing `d_i` into box `(i, i)`.
pub fn tableau_with_diagonal(d: &ShiftedDiagram, diag: &DiagonalVector) -> Option<ShiftedTableau> {
    let n = d.n();
    let size = d.size();
    if diag.0.len() != n {
        return None;
    }
    // diagonal_of[v] = i when value v must sit at (i, i)
    let mut diagonal_of = vec![0usize; size + 2];
    for (i, &v) in diag.0.iter().enumerate() {
        if v == 0 || v as usize > size {
            return None;
        }
        diagonal_of[v as usize] = i + 1;
    }
    let row_len: Vec<usize> = (1..=n).map(|r| d.row_len(r)).collect();
    let mut filled = vec![0usize; n];
    let mut entries = vec![0u32; size];

    fn place(
        value: usize,
        d: &ShiftedDiagram,
        diagonal_of: &[usize],
        row_len: &[usize],
        filled: &mut [usize],
        entries: &mut [u32],
    ) -> bool {
        if value > d.size() {
            return true;
        }
        let forced = diagonal_of[value];
        for r in 0..filled.len() {
            let l = filled[r];
            if l == row_len[r] || (r > 0 && (r - 1) + filled[r - 1] <= r + l) {
                continue;
            }
            // l == 0 means the next box of row r is its diagonal box
            let on_diagonal = l == 0;
            if on_diagonal != (forced == r + 1) {
                continue;
            }
            entries[d.diagonal_index(r + 1) + l] = value as u32;
            filled[r] += 1;
            if place(value + 1, d, diagonal_of, row_len, filled, entries) {
                return true;
            }
            filled[r] -= 1;
        }
        false
    }

    place(1, d, &diagonal_of, &row_len, &mut filled, &mut entries)
        .then(|| ShiftedTableau::new(Arc::new(d.clone()), entries).expect("sized to the diagram"))
}

/// Number of standard tableaux of `d`.
pub fn count_tableaux(d: &ShiftedDiagram) -> u64 {
    let mut count = 0u64;
    for_each_tableau(d, |_| count += 1);
    count
}

/// The table `a ↦ N_λ(a)` over every gap vector that occurs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GapTable {
    pub counts: BTreeMap<GapVector, BigUint>,
}

impl GapTable {
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn get(&self, gaps: &GapVector) -> Option<&BigUint> {
        self.counts.get(gaps)
    }

    /// Achieved gap vectors as plain coordinate vectors.
    pub fn support(&self) -> BTreeSet<Vec<u32>> {
        self.counts.keys().map(|g| g.0.clone()).collect()
    }
}

pub fn count_by_gaps(d: &ShiftedDiagram) -> GapTable {
    let n = d.n();
    let size = d.size();
    let diag_idx: Vec<usize> = (1..=n).map(|i| d.diagonal_index(i)).collect();
    let mut raw: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    let mut diag = vec![0u32; n];
    for_each_tableau(d, |entries| {
        for (slot, &idx) in diag.iter_mut().zip(&diag_idx) {
            *slot = entries[idx];
        }
        match raw.get_mut(diag.as_slice()) {
            Some(c) => *c += 1,
            None => {
                raw.insert(diag.clone(), 1);
            }
        }
    });
    let counts = raw
        .into_iter()
        .map(|(diag, c)| (DiagonalVector(diag).gaps(size), BigUint::from(c)))
        .collect();
    GapTable { counts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

    fn diagram(parts: &[u32], n: usize) -> ShiftedDiagram {
        ShiftedDiagram::new(Partition::new(parts.to_vec(), n).unwrap())
    }

    #[test]
    fn single_row_has_one_tableau() {
        let all: Vec<_> = enumerate_tableaux(&diagram(&[2], 1)).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].rows(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn staircase_two() {
        let all: Vec<_> = enumerate_tableaux(&diagram(&[], 2)).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].rows(), vec![vec![1, 2], vec![3]]);
        assert_eq!(all[0].diagonal(), DiagonalVector(vec![1, 3]));
    }

    #[test]
    fn lambda_one_zero() {
        let d = diagram(&[1, 0], 2);
        let diags: Vec<_> = enumerate_tableaux(&d).map(|t| t.diagonal()).collect();
        // canonical order: rows [1,2,3],[4] then [1,2,4],[3]
        assert_eq!(diags, vec![DiagonalVector(vec![1, 4]), DiagonalVector(vec![1, 3])]);
    }

    #[test]
    fn validation() {
        let d = Arc::new(diagram(&[], 2));
        let good = ShiftedTableau::from_rows(Arc::clone(&d), &[vec![1, 2], vec![3]]).unwrap();
        assert!(validate_tableau(&good));
        let bad = ShiftedTableau::from_rows(Arc::clone(&d), &[vec![1, 3], vec![2]]).unwrap();
        assert!(!validate_tableau(&bad));
        let repeated = ShiftedTableau::new(Arc::clone(&d), vec![1, 2, 2]).unwrap();
        assert!(!repeated.is_standard());
        assert!(matches!(
            ShiftedTableau::new(d, vec![1, 2]),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn trivial_diagonal() {
        let t = enumerate_tableaux(&diagram(&[0], 1)).next().unwrap();
        assert_eq!(diagonal_vector(&t), DiagonalVector(vec![1]));
    }

    #[test]
    fn gap_arithmetic() {
        assert_eq!(gap_vector(&DiagonalVector(vec![1, 3]), 3), GapVector(vec![1, 0]));
        assert_eq!(
            gap_vector(&DiagonalVector(vec![1, 4, 7, 17]), 17),
            GapVector(vec![2, 2, 9, 0])
        );
        assert_eq!(
            gap_vector(&DiagonalVector(vec![1, 3, 14, 16]), 17),
            GapVector(vec![1, 10, 1, 1])
        );
        assert_eq!(diag_from_gaps(&GapVector(vec![1, 0])), DiagonalVector(vec![1, 3]));
        assert_eq!(diag_from_gaps(&GapVector(vec![0; 4])), DiagonalVector(vec![1, 2, 3, 4]));
        assert_eq!(
            diag_from_gaps(&GapVector(vec![1, 10, 1, 1])),
            DiagonalVector(vec![1, 3, 14, 16])
        );
    }

    #[test]
    fn gap_tables() {
        let t = count_by_gaps(&diagram(&[], 2));
        assert_eq!(t.counts.len(), 1);
        assert_eq!(t.get(&GapVector(vec![1, 0])), Some(&BigUint::from(1u32)));

        let t = count_by_gaps(&diagram(&[1, 0], 2));
        assert_eq!(t.len(), 2);
        assert_eq!(t.get(&GapVector(vec![2, 0])), Some(&BigUint::from(1u32)));
        assert_eq!(t.get(&GapVector(vec![1, 1])), Some(&BigUint::from(1u32)));

        for m in 0..5 {
            let t = count_by_gaps(&diagram(&[m], 1));
            assert_eq!(t.len(), 1);
            assert_eq!(t.get(&GapVector(vec![m])), Some(&BigUint::from(1u32)));
        }
    }

    #[test]
    fn canonical_and_visitor_agree() {
        for n in 1..=3 {
            for lambda in Partition::all_bounded(n, 2) {
                let d = ShiftedDiagram::new(lambda);
                let canonical: Vec<Vec<u32>> =
                    enumerate_tableaux(&d).map(|t| t.entries().to_vec()).collect();
                assert!(canonical.windows(2).all(|w| w[0] < w[1]), "not strictly sorted");
                let mut visited = Vec::new();
                for_each_tableau(&d, |e| visited.push(e.to_vec()));
                visited.sort();
                assert_eq!(canonical, visited);
            }
        }
    }

    #[test]
    fn prescribed_diagonals() {
        let d = diagram(&[4, 2, 1, 0], 4);
        let target = DiagonalVector(vec![1, 4, 7, 17]);
        let t = tableau_with_diagonal(&d, &target).unwrap();
        assert!(t.is_standard());
        assert_eq!(t.diagonal(), target);
        // (1,2) forces T(2,2) = 2 before T(1,2)
        assert!(tableau_with_diagonal(&d, &DiagonalVector(vec![1, 2, 7, 17])).is_none());
        let small = diagram(&[1, 0], 2);
        for diag in [vec![1, 3], vec![1, 4]] {
            let t = tableau_with_diagonal(&small, &DiagonalVector(diag.clone())).unwrap();
            assert_eq!(t.diagonal().0, diag);
        }
    }

    #[test]
    fn staircase_last_gap_is_zero() {
        for n in 1..=5 {
            let table = count_by_gaps(&ShiftedDiagram::staircase(n).unwrap());
            assert!(table.counts.keys().all(|g| g.0[n - 1] == 0));
        }
    }
}
