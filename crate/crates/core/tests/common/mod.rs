//! Independent brute-force oracles shared by the integration tests.  None of
//! them call into the library's algorithms.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Staircase corners by repeated deletion on a labelled grid: take the
/// lowest remaining cell of the first nonempty column, delete its row and
/// column, repeat.  Cells keep their original coordinates throughout.
pub fn corners_by_deletion(heights: &[usize]) -> Vec<(usize, usize)> {
    let mut cells: BTreeSet<(usize, usize)> = heights
        .iter()
        .enumerate()
        .flat_map(|(j, &h)| (1..=h).map(move |i| (i, j + 1)))
        .collect();
    let mut out = Vec::new();
    while let Some(&(_, col)) = cells.iter().min_by_key(|&&(_, c)| c) {
        let row = cells.iter().filter(|&&(_, c)| c == col).map(|&(r, _)| r).max().unwrap();
        out.push((row, col));
        cells.retain(|&(r, c)| r != row && c != col);
    }
    out.sort_by_key(|&(_, c)| c);
    out
}

/// Covering pairs `(smaller, larger)` of the corner order
/// `(i,j) ⪰ (i',j') ⟺ i ≥ i' ∧ j ≤ j'`.
pub fn corner_covers(corners: &[(usize, usize)]) -> BTreeSet<((usize, usize), (usize, usize))> {
    let ge = |a: (usize, usize), b: (usize, usize)| a.0 >= b.0 && a.1 <= b.1;
    let lt = |a: (usize, usize), b: (usize, usize)| a != b && ge(b, a);
    let mut out = BTreeSet::new();
    for &a in corners {
        for &b in corners {
            if lt(a, b) && !corners.iter().any(|&c| lt(a, c) && lt(c, b)) {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Distinct permutations of a multiset, in lexicographic order.
pub fn permutations(values: &[u32]) -> Vec<Vec<u32>> {
    let mut v = values.to_vec();
    v.sort();
    let mut out = vec![v.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return out;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
}

/// The Bruhat order on the rearrangements of `values`, as the reflexive
/// transitive closure of `d < t_{ij} d` for `i < j`, `d_i > d_j`.
pub struct BruhatOracle {
    pub elements: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, usize>,
    above: Vec<Vec<bool>>,
}

impl BruhatOracle {
    pub fn new(values: &[u32]) -> Self {
        let elements = permutations(values);
        let index: BTreeMap<Vec<u32>, usize> = elements.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
        let n = elements.len();
        let mut above = vec![vec![false; n]; n];
        for (s, reach) in above.iter_mut().enumerate() {
            let mut queue = VecDeque::from([s]);
            reach[s] = true;
            while let Some(x) = queue.pop_front() {
                let d = &elements[x];
                for i in 0..d.len() {
                    for j in i + 1..d.len() {
                        if d[i] > d[j] {
                            let mut e = d.clone();
                            e.swap(i, j);
                            let y = index[&e];
                            if !reach[y] {
                                reach[y] = true;
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        Self { elements, index, above }
    }

    pub fn leq(&self, a: &[u32], b: &[u32]) -> bool {
        self.above[self.index[a]][self.index[b]]
    }
}

/// Number of linear extensions of the order `lt` on `0..n`, by trying all
/// permutations.
pub fn linear_extensions(n: usize, lt: impl Fn(usize, usize) -> bool) -> usize {
    let ids: Vec<u32> = (0..n as u32).collect();
    permutations(&ids)
        .into_iter()
        .filter(|p| {
            (0..n).all(|a| (a + 1..n).all(|b| !lt(p[b] as usize, p[a] as usize)))
        })
        .count()
}

/// Schur polynomial `s_λ(x_1..x_n)` as a map exponent → coefficient, from
/// semistandard tableaux.
pub fn schur(lambda: &[u32], n: usize) -> BTreeMap<Vec<u32>, u64> {
    fn fill(
        cells: &[(usize, usize)],
        n: usize,
        k: usize,
        t: &mut BTreeMap<(usize, usize), usize>,
        out: &mut BTreeMap<Vec<u32>, u64>,
    ) {
        if k == cells.len() {
            let mut e = vec![0u32; n];
            for &v in t.values() {
                e[v - 1] += 1;
            }
            *out.entry(e).or_default() += 1;
            return;
        }
        let (r, c) = cells[k];
        let left = if c > 0 { t[&(r, c - 1)] } else { 1 };
        let above = if r > 0 { t[&(r - 1, c)] + 1 } else { 1 };
        for v in left.max(above)..=n {
            t.insert((r, c), v);
            fill(cells, n, k + 1, t, out);
        }
        t.remove(&(r, c));
    }
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut out = BTreeMap::new();
    fill(&cells, n, 0, &mut BTreeMap::new(), &mut out);
    out
}

/// Nonnegative integer arrays on the cells of the shape with total at most
/// `n`, tallied by (row sums, column sums).
pub fn array_counts(heights: &[usize], n: u32) -> BTreeMap<(Vec<u32>, Vec<u32>), u64> {
    let rows = heights.iter().copied().max().unwrap_or(0);
    let cells: Vec<(usize, usize)> = heights
        .iter()
        .enumerate()
        .flat_map(|(j, &h)| (0..h).map(move |i| (i, j)))
        .collect();
    let mut out = BTreeMap::new();
    fn go(
        cells: &[(usize, usize)],
        k: usize,
        left: u32,
        hor: &mut Vec<u32>,
        vrt: &mut Vec<u32>,
        out: &mut BTreeMap<(Vec<u32>, Vec<u32>), u64>,
    ) {
        if k == cells.len() {
            *out.entry((hor.clone(), vrt.clone())).or_default() += 1;
            return;
        }
        let (i, j) = cells[k];
        for a in 0..=left {
            hor[i] += a;
            vrt[j] += a;
            go(cells, k + 1, left - a, hor, vrt, out);
            hor[i] -= a;
            vrt[j] -= a;
        }
    }
    go(&cells, 0, n, &mut vec![0; rows], &mut vec![0; heights.len()], &mut out);
    out
}

/// All weakly increasing height sequences with `1 ≤ columns ≤ max_cols`
/// and heights in `1..=max_rows`.
pub fn all_shapes(max_cols: usize, max_rows: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, max_rows: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1);
        for h in lo..=max_rows {
            prefix.push(h);
            go(len, max_rows, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for len in 1..=max_cols {
        go(len, max_rows, &mut Vec::new(), &mut out);
    }
    out
}

/// Partitions of weight `1..=max_weight` with at most `max_len` parts.
pub fn partitions(max_weight: u32, max_len: usize) -> Vec<Vec<u32>> {
    fn go(left: u32, cap: u32, max_len: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        if prefix.len() == max_len {
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            prefix.push(p);
            go(left - p, p, max_len, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for w in 1..=max_weight {
        go(w, w, max_len, &mut Vec::new(), &mut out);
    }
    out
}
