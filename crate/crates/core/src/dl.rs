//! DL-dense arrays on staircase shapes: nonnegative values on the staircase
//! corners that weakly increase along the corner order.  Their column sums
//! (`vrt`) and row sums (`hor`) are dominant compositions for the corner
//! poset placed by columns (order-reversing) and by rows (order-preserving),
//! which gives two embeddings of `DL_n̄(λ)` into Bruhat orders.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::bruhat::{bruhat_leq_criterion, Transposition};
use crate::dominant::{AntilinearizedPoset, DominantError, DominantSet, LinearizedPoset, PropertyReport};
use crate::poset::FinitePoset;
use crate::shapes::{Cell, Composition, CornerPoset, Partition, ShapeError, StaircaseShape};

/// Errors raised by DL-dense arrays.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DlError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Dominant(#[from] DominantError),
    #[error("expected {expected} corner values, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("cell {0} is not a staircase corner")]
    NotCorner(Cell),
    #[error("values decrease from corner {lower} to the larger corner {upper}")]
    NotDense { lower: Cell, upper: Cell },
    #[error("composition {0} is not dominant for the corner poset")]
    NotDominant(Composition),
}

/// The corner poset placed by columns: `v(i, j) = j` in `[1, m]`.
pub fn vrt_base(corners: &CornerPoset) -> AntilinearizedPoset {
    AntilinearizedPoset::new(corners.poset().clone(), corners.vrt(), corners.shape().columns())
        .expect("columns give a consistent anti-linearization")
}

/// The corner poset placed by rows: `h(i, j) = i` in `[1, n_m]`.
pub fn hor_base(corners: &CornerPoset) -> LinearizedPoset {
    LinearizedPoset::new(corners.poset().clone(), corners.hor(), corners.shape().rows())
        .expect("rows give a consistent linearization")
}

/// A DL-dense array: one value per staircase corner (corners listed by
/// column), weakly increasing along the corner order.
#[derive(Debug, Clone)]
pub struct DlArray {
    corners: Arc<CornerPoset>,
    values: Vec<u32>,
}

impl PartialEq for DlArray {
    fn eq(&self, other: &Self) -> bool {
        self.shape() == other.shape() && self.values == other.values
    }
}

impl Eq for DlArray {}

impl DlArray {
    /// Validate density.  `values[k]` sits on `corners.corners()[k]`.
    pub fn new(corners: Arc<CornerPoset>, values: Vec<u32>) -> Result<Self, DlError> {
        if values.len() != corners.len() {
            return Err(DlError::WrongLength {
                expected: corners.len(),
                got: values.len(),
            });
        }
        for (a, b) in corners.poset().covers() {
            if values[a] > values[b] {
                return Err(DlError::NotDense {
                    lower: corners.corners()[a],
                    upper: corners.corners()[b],
                });
            }
        }
        Ok(Self { corners, values })
    }

    /// Build from `(row, column, value)` triples; unlisted corners are 0.
    pub fn from_cells(corners: Arc<CornerPoset>, cells: &[(usize, usize, u32)]) -> Result<Self, DlError> {
        let mut values = vec![0; corners.len()];
        for &(i, j, a) in cells {
            let cell = Cell::new(i, j);
            let k = corners.index_of(cell).ok_or(DlError::NotCorner(cell))?;
            values[k] = a;
        }
        Self::new(corners, values)
    }

    pub fn corner_poset(&self) -> &CornerPoset {
        &self.corners
    }

    pub fn shape(&self) -> &StaircaseShape {
        self.corners.shape()
    }

    /// Values in the column order of the corners.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value_at(&self, cell: Cell) -> u32 {
        self.corners.index_of(cell).map_or(0, |k| self.values[k])
    }

    /// `|A|`, the sum of all values.
    pub fn size(&self) -> u64 {
        self.values.iter().map(|&a| u64::from(a)).sum()
    }

    /// Row sums, of length `n_m`.
    pub fn hor(&self) -> Composition {
        let mut out = vec![0; self.shape().rows()];
        for (c, &a) in self.corners.corners().iter().zip(&self.values) {
            out[c.row - 1] += a;
        }
        Composition::new(out)
    }

    /// Column sums, of length `m`.
    pub fn vrt(&self) -> Composition {
        let mut out = vec![0; self.shape().columns()];
        for (c, &a) in self.corners.corners().iter().zip(&self.values) {
            out[c.col - 1] += a;
        }
        Composition::new(out)
    }

    /// Pairs of corners `(i, j)`, `(i', j')` with `i < i'`, `j < j'`,
    /// `A_{ij} > A_{i'j'}` such that every corner `(k, l)` satisfies:
    /// `A_{kl} ≥ A_{ij}` if it lies strictly down-left of either corner;
    /// `A_{kl} ≤ A_{i'j'}` if it lies strictly up-right of either corner;
    /// `A_{kl} ∉ [A_{i'j'}, A_{ij}]` if it lies strictly inside the
    /// rectangle they span.
    pub fn minimal_dl_disorders(&self) -> Vec<(Cell, Cell)> {
        let cs = self.corners.corners();
        let mut out = Vec::new();
        for (p, &c) in cs.iter().enumerate() {
            for (q, &d) in cs.iter().enumerate() {
                if !(c.row < d.row && c.col < d.col) {
                    continue;
                }
                let (hi, lo) = (self.values[p], self.values[q]);
                if hi <= lo {
                    continue;
                }
                let minimal = cs.iter().zip(&self.values).all(|(&e, &a)| {
                    let down_left = |x: Cell| e.row > x.row && e.col < x.col;
                    let up_right = |x: Cell| e.row < x.row && e.col > x.col;
                    let inside = c.row < e.row && e.row < d.row && c.col < e.col && e.col < d.col;
                    (!(down_left(c) || down_left(d)) || a >= hi)
                        && (!(up_right(c) || up_right(d)) || a <= lo)
                        && (!inside || a < lo || a > hi)
                });
                if minimal {
                    out.push((c, d));
                }
            }
        }
        out.sort();
        out
    }

    /// JSON form `{"shape":[...],"values":[[i,j,a],...],"hor":[...],"vrt":[...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let values: Vec<[u64; 3]> = self
            .corners
            .corners()
            .iter()
            .zip(&self.values)
            .map(|(c, &a)| [c.row as u64, c.col as u64, u64::from(a)])
            .collect();
        serde_json::json!({
            "shape": self.shape().heights(),
            "values": values,
            "hor": self.hor(),
            "vrt": self.vrt(),
        })
    }
}

impl fmt::Display for DlArray {
    /// `A21=2 A32=3 ...` in the column order of the corners.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .corners
            .corners()
            .iter()
            .zip(&self.values)
            .map(|(c, a)| format!("A{}{}={}", c.row, c.col, a))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// The array with column sums `d` (one corner per column).
pub fn dl_from_vrt(corners: Arc<CornerPoset>, d: &Composition) -> Result<DlArray, DlError> {
    if !vrt_base(&corners).is_dominant(d)? {
        return Err(DlError::NotDominant(d.clone()));
    }
    let values = corners.corners().iter().map(|c| d.at(c.col)).collect();
    DlArray::new(corners, values)
}

/// The array with row sums `e` (one corner per row).
pub fn dl_from_hor(corners: Arc<CornerPoset>, e: &Composition) -> Result<DlArray, DlError> {
    if !hor_base(&corners).is_dominant(e)? {
        return Err(DlError::NotDominant(e.clone()));
    }
    let values = corners.corners().iter().map(|c| e.at(c.row)).collect();
    DlArray::new(corners, values)
}

/// `DL_n̄(λ)`: the DL-dense arrays with value multiset `λ` (padded with
/// zeros), ordered by the Bruhat order of their column sums.
#[derive(Debug, Clone)]
pub struct DlPoset {
    corners: Arc<CornerPoset>,
    arrays: Vec<DlArray>,
    set: DominantSet,
}

impl DlPoset {
    pub fn corner_poset(&self) -> &CornerPoset {
        &self.corners
    }

    /// Arrays in increasing lexicographic order of `vrt`.
    pub fn arrays(&self) -> &[DlArray] {
        &self.arrays
    }

    pub fn len(&self) -> usize {
        self.arrays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrays.is_empty()
    }

    pub fn lambda(&self) -> &Partition {
        self.set.lambda()
    }

    pub fn poset(&self) -> &FinitePoset {
        self.set.poset()
    }

    /// The underlying dominant set of column sums.
    pub fn dominant_set(&self) -> &DominantSet {
        &self.set
    }

    pub fn index_of(&self, a: &DlArray) -> Option<usize> {
        self.set.index_of(&a.vrt())
    }

    /// Hasse edges with the corner pairs whose values are exchanged.
    pub fn hasse_edges(&self) -> Vec<((usize, usize), (Cell, Cell))> {
        let column_corner = |j: usize| {
            *self
                .corners
                .corners()
                .iter()
                .find(|c| c.col == j)
                .expect("moves act on occupied columns")
        };
        self.poset()
            .covers()
            .into_iter()
            .map(|e| {
                let t: Transposition = self.set.moves()[&e];
                (e, (column_corner(t.i), column_corner(t.j)))
            })
            .collect()
    }

    pub fn property_report(&self) -> PropertyReport {
        self.set.property_report()
    }

    /// The first pair `(a, b)` on which the Bruhat comparisons of `hor`
    /// and of `vrt` disagree.
    pub fn order_agreement_failure(&self) -> Option<(usize, usize)> {
        let hor: Vec<Composition> = self.arrays.iter().map(DlArray::hor).collect();
        let vrt: Vec<Composition> = self.arrays.iter().map(DlArray::vrt).collect();
        (0..self.len())
            .flat_map(|a| (0..self.len()).map(move |b| (a, b)))
            .find(|&(a, b)| bruhat_leq_criterion(&hor[a], &hor[b]) != bruhat_leq_criterion(&vrt[a], &vrt[b]))
    }

    /// Graphviz rendering with arrays as node labels; `highlight` lists
    /// array indices to fill.
    pub fn to_dot(&self, highlight: &[usize]) -> String {
        let names: Vec<String> = self.arrays.iter().map(|a| a.to_string()).collect();
        self.set.to_dot_named(&names, highlight)
    }

    /// One line per array (`k: A21=.. hor=.. vrt=..`), then the Hasse
    /// edges `lower < upper` by index.
    pub fn to_text(&self) -> String {
        let mut out = format!("shape {} lambda {}\n", self.corners.shape(), self.lambda());
        for (k, a) in self.arrays.iter().enumerate() {
            out.push_str(&format!("{k}: {a} hor={} vrt={}\n", a.hor(), a.vrt()));
        }
        for (a, b) in self.poset().covers() {
            out.push_str(&format!("{a} < {b}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let arrays: Vec<serde_json::Value> = self.arrays.iter().map(DlArray::to_json).collect();
        let hasse: Vec<[usize; 2]> = self.poset().covers().into_iter().map(|(a, b)| [a, b]).collect();
        serde_json::json!({"lambda": self.lambda(), "arrays": arrays, "hasse": hasse})
    }
}

/// Enumerate `DL_n̄(λ)` (empty when `λ` has more parts than corners).
pub fn enumerate_dl(shape: &StaircaseShape, lambda: &Partition) -> DlPoset {
    enumerate_dl_on(Arc::new(shape.corners()), lambda)
}

/// [`enumerate_dl`] on a precomputed corner poset.
pub fn enumerate_dl_on(corners: Arc<CornerPoset>, lambda: &Partition) -> DlPoset {
    let set = vrt_base(&corners).dominant_set(lambda);
    let arrays = set
        .elements()
        .iter()
        .map(|d| dl_from_vrt(corners.clone(), d).expect("dominant compositions give dense arrays"))
        .collect();
    DlPoset { corners, arrays, set }
}

/// `hor(A) ⪯ hor(B)` iff `vrt(A) ⪯ vrt(B)` for all pairs.
pub fn dl_order_agreement(poset: &DlPoset) -> bool {
    poset.order_agreement_failure().is_none()
}

/// Shapes with `k` columns, `k` rows and `k` corners (every row and
/// column holds a corner), in lexicographic order of heights.
pub fn canonical_shapes(k: usize) -> Vec<StaircaseShape> {
    fn go(k: usize, prefix: &mut Vec<usize>, out: &mut Vec<StaircaseShape>) {
        if prefix.len() == k {
            let s = StaircaseShape::new(prefix.clone()).expect("weakly increasing");
            if s.corners().len() == k {
                out.push(s);
            }
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1);
        let lo = if prefix.len() + 1 == k { k } else { lo };
        for h in lo..=k {
            prefix.push(h);
            go(k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        go(k, &mut Vec::new(), &mut out);
    }
    out
}

/// Corner pairs of the vrt-side minimal disorders of `A`.
pub fn vrt_side_disorders(a: &DlArray) -> Vec<(Cell, Cell)> {
    let by_col = |j: usize| *a.corner_poset().corners().iter().find(|c| c.col == j).unwrap();
    let mut out: Vec<(Cell, Cell)> = vrt_base(a.corner_poset())
        .minimal_disorders(&a.vrt())
        .expect("the column sums of a dense array are dominant")
        .into_iter()
        .map(|t| (by_col(t.i), by_col(t.j)))
        .collect();
    out.sort();
    out
}

/// Corner pairs of the hor-side covering moves of `A`.
pub fn hor_side_disorders(a: &DlArray) -> Vec<(Cell, Cell)> {
    let by_row = |i: usize| *a.corner_poset().corners().iter().find(|c| c.row == i).unwrap();
    let mut out: Vec<(Cell, Cell)> = hor_base(a.corner_poset())
        .minimal_disorders(&a.hor())
        .expect("the row sums of a dense array are dominant")
        .into_iter()
        .map(|t| (by_row(t.i), by_row(t.j)))
        .collect();
    out.sort();
    out
}

/// All cells of `shape` that are staircase corners.
pub fn corner_set(shape: &StaircaseShape) -> BTreeSet<Cell> {
    shape.corners().corners().iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(h: &[usize]) -> StaircaseShape {
        StaircaseShape::new(h.to_vec()).unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    fn corners(h: &[usize]) -> Arc<CornerPoset> {
        Arc::new(shape(h).corners())
    }

    #[test]
    fn six_column_enumeration() {
        let dl = enumerate_dl(&shape(&[2, 3, 3, 3, 5, 5]), &part(&[2, 2, 2, 1, 1]));
        let order = [(2, 1), (3, 2), (1, 3), (5, 5), (4, 6)];
        let mut got: Vec<Vec<u32>> = dl
            .arrays()
            .iter()
            .map(|a| order.iter().map(|&(i, j)| a.value_at(Cell::new(i, j))).collect())
            .collect();
        got.sort();
        assert_eq!(
            got,
            vec![vec![1, 2, 1, 2, 2], vec![2, 1, 1, 2, 2], vec![2, 2, 1, 2, 1], vec![2, 2, 2, 1, 1]]
        );
    }

    #[test]
    fn six_column_array_weights_and_round_trips() {
        let cp = corners(&[2, 3, 3, 3, 5, 5]);
        let a = DlArray::from_cells(cp.clone(), &[(2, 1, 2), (3, 2, 3), (1, 3, 1), (5, 5, 4), (4, 6, 1)]).unwrap();
        assert_eq!(a.hor(), comp(&[1, 2, 3, 1, 4]));
        assert_eq!(a.vrt(), comp(&[2, 3, 1, 0, 4, 1]));
        assert_eq!(a.size(), 11);
        assert_eq!(dl_from_vrt(cp.clone(), &comp(&[2, 3, 1, 0, 4, 1])).unwrap(), a);
        assert_eq!(dl_from_hor(cp.clone(), &comp(&[1, 2, 3, 1, 4])).unwrap(), a);
        assert_eq!(
            a.to_json(),
            serde_json::json!({
                "shape": [2, 3, 3, 3, 5, 5],
                "values": [[2, 1, 2], [3, 2, 3], [1, 3, 1], [5, 5, 4], [4, 6, 1]],
                "hor": [1, 2, 3, 1, 4],
                "vrt": [2, 3, 1, 0, 4, 1]
            })
        );
        let zero = DlArray::new(cp.clone(), vec![0; 5]).unwrap();
        assert_eq!(zero.hor(), Composition::zeros(5));
        assert_eq!(zero.vrt(), Composition::zeros(6));
        // (1,3) lies below (2,1): values must not decrease upwards.
        assert!(matches!(
            DlArray::from_cells(cp.clone(), &[(1, 3, 2)]),
            Err(DlError::NotDense { .. })
        ));
        assert!(matches!(
            dl_from_vrt(cp.clone(), &comp(&[1, 0, 2, 0, 0, 0])),
            Err(DlError::NotDominant(_))
        ));
        assert!(matches!(DlArray::from_cells(cp, &[(1, 1, 1)]), Err(DlError::NotCorner(_))));
    }

    #[test]
    fn shape_2334_examples() {
        let s = shape(&[2, 3, 3, 4]);
        let dl = enumerate_dl(&s, &part(&[2, 2, 1, 1]));
        let vrts: Vec<Composition> = dl.arrays().iter().map(DlArray::vrt).collect();
        assert_eq!(vrts, vec![comp(&[1, 2, 1, 2]), comp(&[2, 1, 1, 2]), comp(&[2, 2, 1, 1])]);
        let p = dl.poset();
        assert_eq!(p.covers(), vec![(1, 0), (2, 1)]);
        assert!(dl_order_agreement(&dl));
        let regular = enumerate_dl(&s, &part(&[4, 3, 2, 1]));
        assert_eq!(regular.len(), 8);
        assert!(dl_order_agreement(&regular));
        assert!(regular.property_report().all_structure_flags());
    }

    #[test]
    fn minimal_dl_disorder_examples() {
        let cp = corners(&[2, 3, 3, 4]);
        let found: Vec<Cell> = cp.corners().to_vec();
        assert_eq!(found, vec![Cell::new(2, 1), Cell::new(3, 2), Cell::new(1, 3), Cell::new(4, 4)]);
        let a = DlArray::from_cells(cp, &[(2, 1, 2), (3, 2, 2), (1, 3, 1), (4, 4, 1)]).unwrap();
        let dis = a.minimal_dl_disorders();
        assert!(dis.contains(&(Cell::new(3, 2), Cell::new(4, 4))));
        assert!(!dis.contains(&(Cell::new(2, 1), Cell::new(4, 4))));
        assert!(a.value_at(Cell::new(2, 1)) > a.value_at(Cell::new(4, 4)));
        assert_eq!(dis, vrt_side_disorders(&a));
        assert_eq!(dis, hor_side_disorders(&a));
        // Increasing values along incomparable pairs: no disorders.
        let b = DlArray::from_cells(corners(&[2, 3, 3, 4]), &[(2, 1, 1), (3, 2, 2), (1, 3, 1), (4, 4, 3)]).unwrap();
        assert!(b.minimal_dl_disorders().is_empty());
    }

    #[test]
    fn rectangles_have_one_array_per_partition() {
        for n in 1..=4 {
            let s = shape(&vec![n; n]);
            for lambda in Partition::all_up_to(5, n) {
                assert_eq!(enumerate_dl(&s, &lambda).len(), 1, "{s} {lambda}");
            }
        }
        assert!(enumerate_dl(&shape(&[2, 2]), &part(&[1, 1, 1])).is_empty());
    }

    #[test]
    fn single_corner_is_vacuous() {
        let dl = enumerate_dl(&shape(&[1]), &part(&[3]));
        assert_eq!(dl.len(), 1);
        assert!(dl_order_agreement(&dl));
    }

    #[test]
    fn canonical_shape_counts() {
        assert_eq!(canonical_shapes(1), vec![shape(&[1])]);
        for k in 1..=5 {
            for s in canonical_shapes(k) {
                assert_eq!(s.drop_empty_rows_cols(), s);
                assert_eq!((s.columns(), s.rows(), s.corners().len()), (k, k, k));
            }
        }
        // Canonical shapes are in bijection with plane forests.
        let counts: Vec<usize> = (1..=5).map(|k| canonical_shapes(k).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42]);
    }

    #[test]
    fn disorders_agree_on_all_sides_and_generate_the_order() {
        for k in 1..=4 {
            for s in canonical_shapes(k) {
                let cp = Arc::new(s.corners());
                for lambda in Partition::all_up_to(5, k) {
                    let dl = enumerate_dl_on(cp.clone(), &lambda);
                    assert!(dl_order_agreement(&dl));
                    let mut from_hasse: Vec<Vec<(Cell, Cell)>> = vec![Vec::new(); dl.len()];
                    for ((a, _), pair) in dl.hasse_edges() {
                        from_hasse[a].push(pair);
                    }
                    for (a, arr) in dl.arrays().iter().enumerate() {
                        let dis = arr.minimal_dl_disorders();
                        assert_eq!(dis, vrt_side_disorders(arr), "{s} {arr}");
                        assert_eq!(dis, hor_side_disorders(arr), "{s} {arr}");
                        from_hasse[a].sort();
                        assert_eq!(dis, from_hasse[a]);
                    }
                }
            }
        }
    }

    #[test]
    fn dot_and_json() {
        let dl = enumerate_dl(&shape(&[2, 3, 3, 4]), &part(&[2, 2, 1, 1]));
        let dot = dl.to_dot(&[0]);
        assert!(dot.starts_with("digraph hasse {"));
        assert!(dot.contains("A21=1 A32=2 A13=1 A44=2"));
        let j = dl.to_json();
        assert_eq!(j["arrays"].as_array().unwrap().len(), 3);
        assert_eq!(j["hasse"], serde_json::json!([[1, 0], [2, 1]]));
    }
}
