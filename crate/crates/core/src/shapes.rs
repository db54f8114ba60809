//! Compositions, partitions, staircase shapes and the poset of staircase
//! corners.
//!
//! A staircase shape is given by weakly increasing column heights
//! `n_1 ≤ … ≤ n_m`; its cells are the pairs `(i, j)` with `1 ≤ i ≤ n_j`
//! (row `i`, column `j`, both 1-based).  The staircase corners form a rook
//! placement inside the shape, defined recursively: the bottom cell of the
//! first nonempty column is a corner, and the remaining corners are the
//! corners of the shape obtained by erasing that cell's row and column.
//!
//! Corners are ordered by "down-left is bigger":
//! `(i, j) ⪰ (i', j')` iff `i ≥ i'` and `j ≤ j'`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poset::{FinitePoset, PosetError};

/// Errors raised while constructing or transforming shapes and weights.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("column heights must be weakly increasing, got {0:?}")]
    NotWeaklyIncreasing(Vec<usize>),
    #[error("the first column of a staircase shape must be nonempty, got {0:?}")]
    EmptyFirstColumn(Vec<usize>),
    #[error("cell ({row},{col}) lies outside the shape with heights {heights:?}")]
    CellOutside {
        row: usize,
        col: usize,
        heights: Vec<usize>,
    },
    #[error("parts of a partition must be weakly decreasing, got {0:?}")]
    NotPartition(Vec<u32>),
    #[error("cannot parse {input:?} as a comma-separated list of nonnegative integers")]
    Parse { input: String },
}

/// A finite sequence of nonnegative integers of fixed length.
///
/// Indexing through [`std::ops::Deref`] is 0-based; APIs that speak about
/// positions (transpositions, anti-linearizations) use 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(entries: Vec<u32>) -> Self {
        Self(entries)
    }

    pub fn zeros(m: usize) -> Self {
        Self(vec![0; m])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Sum of the entries.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&a| u64::from(a)).sum()
    }

    /// The weakly decreasing rearrangement of the entries (zeros dropped).
    pub fn sorted_partition(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(parts)
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// Exchange the entries at 1-based positions `i` and `j`.
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut out = self.clone();
        out.0.swap(i - 1, j - 1);
        out
    }

    /// Entry at the 1-based position `l`.
    pub fn at(&self, l: usize) -> u32 {
        self.0[l - 1]
    }

    /// `true` when the entries are a rearrangement of `other`'s entries.
    pub fn same_multiset(&self, other: &Self) -> bool {
        self.len() == other.len() && self.sorted_partition() == other.sorted_partition()
    }
}

impl std::ops::Deref for Composition {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = ShapeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_list(s).map(Self)
    }
}

/// A weakly decreasing sequence of positive integers (trailing zeros are
/// stripped on construction so that equal partitions compare equal).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, ShapeError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotPartition(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    fn from_sorted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of strictly positive parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&a| u64::from(a)).sum()
    }

    /// `true` when all parts, padded with zeros to length `n`, are distinct.
    pub fn is_regular_in(&self, n: usize) -> bool {
        let padded = self.padded(n.max(self.length()));
        padded.windows(2).all(|w| w[0] != w[1])
    }

    /// The dominant arrangement `λ_+` padded with zeros to length `m`.
    ///
    /// Panics if `m < self.length()`.
    pub fn padded(&self, m: usize) -> Composition {
        assert!(m >= self.length(), "cannot pad {self} to length {m}");
        let mut v = self.0.clone();
        v.resize(m, 0);
        Composition(v)
    }

    /// The antidominant arrangement `λ_−` of length `m`.
    pub fn antidominant(&self, m: usize) -> Composition {
        self.padded(m).reversed()
    }

    /// All partitions of `n` with at most `max_len` parts, in reverse
    /// lexicographic order.
    pub fn all_of(n: u32, max_len: usize) -> Vec<Partition> {
        fn rec(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of weight at most `max_weight` with at most `max_len`
    /// parts, by increasing weight (the empty partition first).
    pub fn all_up_to(max_weight: u32, max_len: usize) -> Vec<Partition> {
        (0..=max_weight)
            .flat_map(|n| Self::all_of(n, max_len))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = ShapeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_list(s)?)
    }
}

/// A cell `(row, col)` of a Young diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// The corner order: `self ⪰ other` iff `self` lies weakly down-left.
    pub fn corner_geq(&self, other: &Cell) -> bool {
        self.row >= other.row && self.col <= other.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Column heights `n_1 ≤ … ≤ n_m` of a staircase Young diagram.
///
/// Shapes built with [`StaircaseShape::new`] have a nonempty first column.
/// Erasing rows and columns may produce leading empty columns; those are
/// kept so that column indices stay aligned, and they carry no cells.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct StaircaseShape {
    heights: Vec<usize>,
}

impl StaircaseShape {
    pub fn new(heights: Vec<usize>) -> Result<Self, ShapeError> {
        if heights.windows(2).any(|w| w[0] > w[1]) {
            return Err(ShapeError::NotWeaklyIncreasing(heights));
        }
        if heights.first() == Some(&0) {
            return Err(ShapeError::EmptyFirstColumn(heights));
        }
        Ok(Self { heights })
    }

    /// The shape with no columns.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// Number of columns `m`.
    pub fn columns(&self) -> usize {
        self.heights.len()
    }

    /// Number of rows `n_m` (zero for the empty shape).
    pub fn rows(&self) -> usize {
        self.heights.last().copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.col >= 1
            && cell.col <= self.columns()
            && cell.row >= 1
            && cell.row <= self.heights[cell.col - 1]
    }

    /// All cells, column by column.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.heights
            .iter()
            .enumerate()
            .flat_map(|(j, &h)| (1..=h).map(move |i| Cell::new(i, j + 1)))
    }

    /// Erase the row and the column of `cell`; the result has one column
    /// fewer.  Surviving cells are re-indexed by [`erased_cell_preimage`].
    pub fn erase_row_col(&self, cell: Cell) -> Result<StaircaseShape, ShapeError> {
        if !self.contains(cell) {
            return Err(ShapeError::CellOutside {
                row: cell.row,
                col: cell.col,
                heights: self.heights.clone(),
            });
        }
        let (i, j) = (cell.row, cell.col);
        let n = &self.heights;
        let heights = (1..self.columns())
            .map(|k| {
                if k < j {
                    if n[k - 1] < i {
                        n[k - 1]
                    } else {
                        n[k - 1] - 1
                    }
                } else {
                    n[k] - 1
                }
            })
            .collect();
        Ok(StaircaseShape { heights })
    }

    /// Staircase corners and their order.
    pub fn corners(&self) -> CornerPoset {
        staircase_corners(self)
    }

    /// Remove every row and column that carries no staircase corner.
    pub fn drop_empty_rows_cols(&self) -> StaircaseShape {
        drop_empty_rows_cols(self)
    }
}

impl fmt::Display for StaircaseShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.heights)
    }
}

impl FromStr for StaircaseShape {
    type Err = ShapeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let heights = parse_list(s)?.into_iter().map(|h| h as usize).collect();
        StaircaseShape::new(heights)
    }
}

/// Map a cell of the erased shape back to the original shape, where the
/// erased row and column were those of `erased`.
pub fn erased_cell_preimage(erased: Cell, cell: Cell) -> Cell {
    let row = if cell.row < erased.row { cell.row } else { cell.row + 1 };
    let col = if cell.col < erased.col { cell.col } else { cell.col + 1 };
    Cell::new(row, col)
}

/// The staircase corners of a shape, sorted by column, together with their
/// partial order (element `k` of `poset` is `corners[k]`).
#[derive(Debug, Clone)]
pub struct CornerPoset {
    shape: StaircaseShape,
    corners: Vec<Cell>,
    poset: FinitePoset,
}

impl CornerPoset {
    pub fn shape(&self) -> &StaircaseShape {
        &self.shape
    }

    pub fn corners(&self) -> &[Cell] {
        &self.corners
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        self.corners.iter().position(|&c| c == cell)
    }

    /// Hasse edges `(smaller, larger)`, sorted.
    pub fn hasse_edges(&self) -> Vec<(Cell, Cell)> {
        let mut edges: Vec<_> = self
            .poset
            .covers()
            .into_iter()
            .map(|(a, b)| (self.corners[a], self.corners[b]))
            .collect();
        edges.sort();
        edges
    }

    /// The horizontal map `corner ↦ row`.
    pub fn hor(&self) -> Vec<usize> {
        self.corners.iter().map(|c| c.row).collect()
    }

    /// The vertical map `corner ↦ column`.
    pub fn vrt(&self) -> Vec<usize> {
        self.corners.iter().map(|c| c.col).collect()
    }

    /// JSON form `{"corners":[[i,j],...],"hasse":[[[i,j],[i',j']],...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut corners = self.corners.clone();
        corners.sort();
        serde_json::json!({
            "corners": corners.iter().map(|c| [c.row, c.col]).collect::<Vec<_>>(),
            "hasse": self
                .hasse_edges()
                .iter()
                .map(|(a, b)| [[a.row, a.col], [b.row, b.col]])
                .collect::<Vec<_>>(),
        })
    }

    /// Plain text listing of corners and Hasse edges.
    pub fn to_text(&self) -> String {
        let mut corners = self.corners.clone();
        corners.sort();
        let mut out = format!("shape {}\ncorners", self.shape);
        for c in &corners {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
        for (a, b) in self.hasse_edges() {
            out.push_str(&format!("{a} < {b}\n"));
        }
        out
    }

    /// Graphviz rendering of the Hasse diagram.
    pub fn to_dot(&self) -> String {
        let names: Vec<String> = self.corners.iter().map(|c| c.to_string()).collect();
        self.poset.to_dot(&names, &crate::poset::DotOptions::default())
    }
}

/// Compute the staircase corners of `shape` by peeling off the bottom cell of
/// the first nonempty column and recursing on the erased shape.
pub fn staircase_corners(shape: &StaircaseShape) -> CornerPoset {
    let mut corners = peel_corners(shape.heights());
    corners.sort_by_key(|c| c.col);
    let poset = FinitePoset::from_order(corners.len(), |a, b| corners[b].corner_geq(&corners[a]))
        .expect("the corner order is a partial order");
    CornerPoset {
        shape: shape.clone(),
        corners,
        poset,
    }
}

fn peel_corners(heights: &[usize]) -> Vec<Cell> {
    let Some(first) = heights.iter().position(|&h| h > 0) else {
        return Vec::new();
    };
    let corner = Cell::new(heights[first], first + 1);
    let erased = StaircaseShape {
        heights: heights.to_vec(),
    }
    .erase_row_col(corner)
    .expect("the peeled corner lies in the shape");
    let mut out = vec![corner];
    out.extend(
        peel_corners(erased.heights())
            .into_iter()
            .map(|c| erased_cell_preimage(corner, c)),
    );
    out
}

/// Delete all rows and columns without a staircase corner.
pub fn drop_empty_rows_cols(shape: &StaircaseShape) -> StaircaseShape {
    let cp = staircase_corners(shape);
    let used_cols: BTreeSet<usize> = cp.corners.iter().map(|c| c.col).collect();
    let used_rows: BTreeSet<usize> = cp.corners.iter().map(|c| c.row).collect();
    let heights = shape
        .heights()
        .iter()
        .enumerate()
        .filter(|(j, _)| used_cols.contains(&(j + 1)))
        .map(|(_, &h)| used_rows.range(..=h).count())
        .collect();
    StaircaseShape { heights }
}

/// Result of realizing an anti-linearized arborescent poset as corners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizedShape {
    /// The staircase shape.
    pub shape: StaircaseShape,
    /// Number of leading positions of `[1, m]` outside the image of `v`;
    /// they are dropped because a staircase shape starts with a nonempty
    /// column, so `vrt(iso[s]) + column_offset = v(s)`.
    pub column_offset: usize,
    /// `iso[s]` is the corner corresponding to element `s`.
    pub iso: Vec<Cell>,
}

/// Build a staircase shape whose corner poset, with its vertical map, is
/// isomorphic to the given anti-linearized arborescent poset.
///
/// For a position `k`, `n_k` counts the elements placed before `k`, plus the
/// size of the down-set of the element placed at `k` (if any).
pub fn shape_from_antilinearized_poset(
    base: &crate::dominant::AntilinearizedPoset,
) -> Result<RealizedShape, PosetError> {
    let poset = base.poset();
    let m = base.m();
    let column_offset = (1..=m).take_while(|&k| base.element_at(k).is_none()).count();
    let mut heights = Vec::with_capacity(m - column_offset);
    for k in column_offset + 1..=m {
        let before = base.count_before(k);
        let own = match base.element_at(k) {
            Some(s) => (0..poset.len()).filter(|&t| poset.leq(t, s)).count(),
            None => 0,
        };
        heights.push(before + own);
    }
    let shape = StaircaseShape { heights };
    let cp = staircase_corners(&shape);
    let mut iso = Vec::with_capacity(poset.len());
    for s in 0..poset.len() {
        let col = base.position(s) - column_offset;
        let corner = cp
            .corners
            .iter()
            .find(|c| c.col == col)
            .copied()
            .ok_or(PosetError::NotRealizable { element: s })?;
        iso.push(corner);
    }
    for a in 0..poset.len() {
        for b in 0..poset.len() {
            if poset.leq(a, b) != iso[b].corner_geq(&iso[a]) {
                return Err(PosetError::NotRealizable { element: a });
            }
        }
    }
    Ok(RealizedShape {
        shape,
        column_offset,
        iso,
    })
}

/// All distinct rearrangements of `values`, in lexicographic order.
pub fn distinct_permutations(values: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = values.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // Classical next-permutation step.
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>, ShapeError> {
    let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| ShapeError::Parse {
            input: s.to_string(),
        })
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (k, x) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(h: &[usize]) -> StaircaseShape {
        StaircaseShape::new(h.to_vec()).unwrap()
    }

    fn cells(v: &[(usize, usize)]) -> Vec<Cell> {
        let mut out: Vec<Cell> = v.iter().map(|&(i, j)| Cell::new(i, j)).collect();
        out.sort();
        out
    }

    fn sorted_corners(s: &StaircaseShape) -> Vec<Cell> {
        let mut c = s.corners().corners().to_vec();
        c.sort();
        c
    }

    #[test]
    fn erase_examples() {
        assert_eq!(shape(&[2, 3, 3]).erase_row_col(Cell::new(2, 1)).unwrap(), shape(&[2, 2]));
        assert_eq!(shape(&[1]).erase_row_col(Cell::new(1, 1)).unwrap(), StaircaseShape::empty());
        assert_eq!(
            shape(&[2, 3, 3, 3, 5, 5]).erase_row_col(Cell::new(1, 3)).unwrap(),
            shape(&[1, 2, 2, 4, 4])
        );
        assert!(matches!(
            shape(&[1, 2]).erase_row_col(Cell::new(2, 1)),
            Err(ShapeError::CellOutside { .. })
        ));
    }

    #[test]
    fn erase_preimage_is_a_bijection_onto_surviving_cells() {
        let s = shape(&[2, 3, 3, 3, 5, 5]);
        for cell in s.cells().collect::<Vec<_>>() {
            let e = s.erase_row_col(cell).unwrap();
            let image: BTreeSet<Cell> = e.cells().map(|c| erased_cell_preimage(cell, c)).collect();
            let expected: BTreeSet<Cell> = s
                .cells()
                .filter(|c| c.row != cell.row && c.col != cell.col)
                .collect();
            assert_eq!(image, expected, "erasing {cell}");
        }
    }

    #[test]
    fn six_column_corners() {
        let cp = shape(&[2, 3, 3, 3, 5, 5]).corners();
        let mut got = cp.corners().to_vec();
        got.sort();
        assert_eq!(got, cells(&[(2, 1), (3, 2), (1, 3), (5, 5), (4, 6)]));
        assert_eq!(
            cp.hasse_edges(),
            vec![
                (Cell::new(1, 3), Cell::new(2, 1)),
                (Cell::new(1, 3), Cell::new(3, 2)),
                (Cell::new(4, 6), Cell::new(5, 5)),
            ]
        );
    }

    #[test]
    fn rectangle_is_a_chain_and_triangle_an_antichain() {
        let rect = shape(&[3; 7]).corners();
        assert_eq!(sorted_corners(rect.shape()), cells(&[(3, 1), (2, 2), (1, 3)]));
        assert_eq!(
            rect.hasse_edges(),
            vec![
                (Cell::new(1, 3), Cell::new(2, 2)),
                (Cell::new(2, 2), Cell::new(3, 1))
            ]
        );
        let tri = shape(&[1, 2, 3, 4, 4, 4, 4]).corners();
        assert_eq!(sorted_corners(tri.shape()), cells(&[(1, 1), (2, 2), (3, 3), (4, 4)]));
        assert!(tri.hasse_edges().is_empty());
    }

    #[test]
    fn mixed_shape_corners() {
        let s = shape(&[6, 7, 8, 9, 9, 9, 9]);
        assert_eq!(
            sorted_corners(&s),
            cells(&[(6, 1), (7, 2), (8, 3), (9, 4), (5, 5), (4, 6), (3, 7)])
        );
    }

    #[test]
    fn drop_empty_examples() {
        assert_eq!(shape(&[2, 3, 3, 3, 5, 5]).drop_empty_rows_cols(), shape(&[2, 3, 3, 5, 5]));
        assert_eq!(shape(&[3, 3, 3]).drop_empty_rows_cols(), shape(&[3, 3, 3]));
        assert_eq!(shape(&[1, 1]).drop_empty_rows_cols(), shape(&[1]));
        assert_eq!(shape(&[1]).drop_empty_rows_cols(), shape(&[1]));
    }

    #[test]
    fn corners_form_rook_placements_with_interval_up_sets() {
        for s in all_shapes(7, 7) {
            let cp = s.corners();
            let rows: BTreeSet<_> = cp.corners().iter().map(|c| c.row).collect();
            let cols: BTreeSet<_> = cp.corners().iter().map(|c| c.col).collect();
            assert_eq!(rows.len(), cp.len(), "{s}");
            assert_eq!(cols.len(), cp.len(), "{s}");
            for c in cp.corners() {
                assert!(s.contains(*c));
            }
            let p = cp.poset();
            for x in 0..p.len() {
                assert!(p.lower_covers(x).len() <= 1, "{s}: not arborescent");
                let up: Vec<usize> = (0..p.len()).filter(|&y| p.leq(x, y)).collect();
                // Every corner whose column (resp. row) lies within the range
                // spanned by the up-set belongs to the up-set.
                let up_cols: BTreeSet<usize> = up.iter().map(|&y| cp.corners()[y].col).collect();
                let lo = *up_cols.first().unwrap();
                let hi = *up_cols.last().unwrap();
                for (y, c) in cp.corners().iter().enumerate() {
                    if c.col >= lo && c.col <= hi {
                        assert!(p.leq(x, y), "{s}: vrt up-set not an interval");
                    }
                }
                let up_rows: BTreeSet<usize> = up.iter().map(|&y| cp.corners()[y].row).collect();
                let lo = *up_rows.first().unwrap();
                let hi = *up_rows.last().unwrap();
                for (y, c) in cp.corners().iter().enumerate() {
                    if c.row >= lo && c.row <= hi {
                        assert!(p.leq(x, y), "{s}: hor up-set not an interval");
                    }
                }
            }
            for a in 0..p.len() {
                for b in 0..p.len() {
                    if a != b && !p.leq(a, b) && !p.leq(b, a) {
                        let (ca, cb) = (cp.corners()[a], cp.corners()[b]);
                        assert_eq!(ca.col < cb.col, ca.row < cb.row, "{s}");
                    }
                }
            }
        }
    }

    #[test]
    fn partitions_enumeration() {
        assert_eq!(Partition::all_of(4, 4).len(), 5);
        assert_eq!(Partition::all_of(4, 2).len(), 3);
        assert_eq!(Partition::all_up_to(3, 3).len(), 1 + 1 + 2 + 3);
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap().length(), 2);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn permutations_of_multisets() {
        assert_eq!(distinct_permutations(&[2, 2, 1, 1]).len(), 6);
        assert_eq!(distinct_permutations(&[3, 2, 1]).len(), 6);
        assert_eq!(distinct_permutations(&[]), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn parsing() {
        assert_eq!("2,3,3,4".parse::<StaircaseShape>().unwrap(), shape(&[2, 3, 3, 4]));
        assert!("3,2".parse::<StaircaseShape>().is_err());
        assert!("a,b".parse::<Composition>().is_err());
        assert_eq!("(1,0,3)".parse::<Composition>().unwrap().as_slice(), &[1, 0, 3]);
    }

    /// All weakly increasing height vectors with at most `max_cols` columns and
    /// at most `max_rows` rows.
    pub(crate) fn all_shapes(max_cols: usize, max_rows: usize) -> Vec<StaircaseShape> {
        fn rec(cur: &mut Vec<usize>, max_cols: usize, max_rows: usize, out: &mut Vec<StaircaseShape>) {
            if !cur.is_empty() {
                out.push(StaircaseShape::new(cur.clone()).unwrap());
            }
            if cur.len() == max_cols {
                return;
            }
            let lo = cur.last().copied().unwrap_or(1);
            for h in lo..=max_rows {
                cur.push(h);
                rec(cur, max_cols, max_rows, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), max_cols, max_rows, &mut out);
        out
    }
}
