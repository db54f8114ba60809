//! Exact sparse polynomials in two alphabets `x_1..x_n`, `y_1..y_m` with
//! arbitrary-precision coefficients, Demazure operators, key polynomials,
//! Demazure atoms and the truncated staircase Cauchy kernel.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::shapes::{Composition, StaircaseShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(Alphabet, Alphabet),
    #[error("variable index {index} out of range for {count} variables")]
    VariableOutOfRange { index: usize, count: usize },
    #[error("composition of length {len} needs at least as many variables, got {vars}")]
    TooFewVariables { len: usize, vars: usize },
}

/// Variable counts of the two alphabets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    pub x: usize,
    pub y: usize,
}

impl Alphabet {
    pub const fn new(x: usize, y: usize) -> Self {
        Self { x, y }
    }

    pub const fn x_only(n: usize) -> Self {
        Self { x: n, y: 0 }
    }

    pub const fn y_only(m: usize) -> Self {
        Self { x: 0, y: m }
    }

    fn width(self) -> usize {
        self.x + self.y
    }

    /// The alphabet of a product: each side either agrees or is empty.
    fn join(self, other: Self) -> Option<Self> {
        let pick = |a: usize, b: usize| match (a, b) {
            (0, b) => Some(b),
            (a, 0) => Some(a),
            (a, b) if a == b => Some(a),
            _ => None,
        };
        Some(Self::new(pick(self.x, other.x)?, pick(self.y, other.y)?))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x1..x{} y1..y{}", self.x, self.y)
    }
}

/// Exponent vector: the `x` exponents followed by the `y` exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn new(x: &[u16], y: &[u16]) -> Self {
        Self([x, y].concat())
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    fn degrees(&self, nx: usize) -> (u32, u32) {
        let (x, y) = self.0.split_at(nx);
        let sum = |s: &[u16]| s.iter().map(|&e| u32::from(e)).sum();
        (sum(x), sum(y))
    }

    /// Reinterpret the exponents of `from` in the wider alphabet `to`.
    fn widen(&self, from: Alphabet, to: Alphabet) -> Self {
        let mut v = vec![0; to.width()];
        v[..from.x].copy_from_slice(&self.0[..from.x]);
        v[to.x..to.x + from.y].copy_from_slice(&self.0[from.x..]);
        Self(v)
    }
}

/// A sparse polynomial with integer coefficients.  When a degree bound `N`
/// is set, every stored term has `max(deg_x, deg_y) ≤ N` and arithmetic
/// drops higher terms as soon as they appear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    alphabet: Alphabet,
    bound: Option<u32>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            bound: None,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::term(alphabet, Monomial(vec![0; alphabet.width()]), BigInt::one())
    }

    fn term(alphabet: Alphabet, m: Monomial, c: BigInt) -> Self {
        let mut p = Self::zero(alphabet);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// `c · x^a y^b`.
    pub fn monomial(alphabet: Alphabet, x: &[u16], y: &[u16], c: impl Into<BigInt>) -> Result<Self, PolyError> {
        if x.len() != alphabet.x || y.len() != alphabet.y {
            return Err(PolyError::AlphabetMismatch(alphabet, Alphabet::new(x.len(), y.len())));
        }
        Ok(Self::term(alphabet, Monomial::new(x, y), c.into()))
    }

    /// `x^ν` in `n ≥ ℓ(ν)` variables.
    pub fn x_power(nu: &[u32], n: usize) -> Result<Self, PolyError> {
        if nu.len() > n {
            return Err(PolyError::TooFewVariables { len: nu.len(), vars: n });
        }
        let mut e = vec![0u16; n];
        for (slot, &a) in e.iter_mut().zip(nu) {
            *slot = exponent(a);
        }
        Ok(Self::term(Alphabet::x_only(n), Monomial(e), BigInt::one()))
    }

    /// The variable `x_i` (1-based).
    pub fn x_var(n: usize, i: usize) -> Result<Self, PolyError> {
        check_index(i, n)?;
        let mut e = vec![0u16; n];
        e[i - 1] = 1;
        Ok(Self::term(Alphabet::x_only(n), Monomial(e), BigInt::one()))
    }

    /// The variable `y_j` (1-based).
    pub fn y_var(m: usize, j: usize) -> Result<Self, PolyError> {
        check_index(j, m)?;
        let mut e = vec![0u16; m];
        e[j - 1] = 1;
        Ok(Self::term(Alphabet::y_only(m), Monomial(e), BigInt::one()))
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn bound(&self) -> Option<u32> {
        self.bound
    }

    /// Set (or tighten) the degree bound, dropping terms above it.
    pub fn truncated(mut self, n: u32) -> Self {
        let n = self.bound.map_or(n, |b| b.min(n));
        self.bound = Some(n);
        let nx = self.alphabet.x;
        self.terms.retain(|m, _| {
            let (dx, dy) = m.degrees(nx);
            dx.max(dy) <= n
        });
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.sign() != num_bigint::Sign::Minus)
    }

    /// Pad with unused variables so that the alphabet becomes `to`.
    pub fn widen(&self, to: Alphabet) -> Result<Self, PolyError> {
        if to.x < self.alphabet.x || to.y < self.alphabet.y {
            return Err(PolyError::AlphabetMismatch(self.alphabet, to));
        }
        Ok(Self {
            alphabet: to,
            bound: self.bound,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.widen(self.alphabet, to), c.clone()))
                .collect(),
        })
    }

    fn joined_bound(&self, other: &Self) -> Option<u32> {
        match (self.bound, other.bound) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    fn within(&self, bound: Option<u32>, m: &Monomial) -> bool {
        bound.is_none_or(|n| {
            let (dx, dy) = m.degrees(self.alphabet.x);
            dx.max(dy) <= n
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.alphabet != other.alphabet {
            return Err(PolyError::AlphabetMismatch(self.alphabet, other.alphabet));
        }
        let bound = self.joined_bound(other);
        let mut out = Self {
            alphabet: self.alphabet,
            bound,
            terms: BTreeMap::new(),
        };
        for (m, c) in self.terms.iter().chain(&other.terms) {
            if out.within(bound, m) {
                out.accumulate(m.clone(), c.clone());
            }
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let alphabet = self
            .alphabet
            .join(other.alphabet)
            .ok_or(PolyError::AlphabetMismatch(self.alphabet, other.alphabet))?;
        let (a, b) = (self.widen(alphabet)?, other.widen(alphabet)?);
        let bound = self.joined_bound(other);
        let nx = alphabet.x;
        // Products of independent factors are merged in a hash map and
        // sorted once at the end.
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        let (ta, tb) = (with_degrees(&a, nx), with_degrees(&b, nx));
        for &(ma, ca, (ax, ay)) in &ta {
            for &(mb, cb, (bx, by)) in &tb {
                if bound.is_some_and(|n| (ax + bx).max(ay + by) > n) {
                    continue;
                }
                let m = Monomial(ma.0.iter().zip(&mb.0).map(|(p, q)| p + q).collect());
                let c = ca * cb;
                match acc.entry(m) {
                    Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                    }
                    Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Ok(Self {
            alphabet,
            bound,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self {
                terms: BTreeMap::new(),
                ..self.clone()
            };
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
            ..self.clone()
        }
    }

    fn accumulate(&mut self, m: Monomial, c: BigInt) {
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
        }
    }

    fn map_exponents(&self, f: impl Fn(&mut [u16])) -> Self {
        let mut out = Self {
            terms: BTreeMap::new(),
            ..self.clone()
        };
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            f(&mut e);
            out.accumulate(Monomial(e), c.clone());
        }
        out
    }

    /// Exchange `x_i` and `x_{i+1}`.
    pub fn swap_x(&self, i: usize) -> Result<Self, PolyError> {
        check_index(i + 1, self.alphabet.x)?;
        check_index(i, self.alphabet.x)?;
        Ok(self.map_exponents(|e| e.swap(i - 1, i)))
    }

    /// Exchange `y_j` and `y_{j+1}`.
    pub fn swap_y(&self, j: usize) -> Result<Self, PolyError> {
        check_index(j + 1, self.alphabet.y)?;
        check_index(j, self.alphabet.y)?;
        let off = self.alphabet.x;
        Ok(self.map_exponents(|e| e.swap(off + j - 1, off + j)))
    }

    /// Substitute `x_i ↦ x_{n+1-i}`.
    pub fn reverse_x(&self) -> Self {
        let n = self.alphabet.x;
        self.map_exponents(|e| e[..n].reverse())
    }

    /// Substitute `y_j ↦ y_{m+1-j}`.
    pub fn reverse_y(&self) -> Self {
        let n = self.alphabet.x;
        self.map_exponents(|e| e[n..].reverse())
    }

    /// Rename the `x` alphabet to `y` (requires an empty `y` alphabet).
    pub fn x_to_y(&self) -> Result<Self, PolyError> {
        if self.alphabet.y != 0 {
            return Err(PolyError::AlphabetMismatch(self.alphabet, Alphabet::x_only(self.alphabet.x)));
        }
        Ok(Self {
            alphabet: Alphabet::y_only(self.alphabet.x),
            ..self.clone()
        })
    }

    /// Canonical text: terms in decreasing lexicographic order of
    /// exponents, e.g. `3*x1^2*y2 - x2 + 1`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let abs = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let vars = self.monomial_text(m);
            match (vars.is_empty(), abs.is_one()) {
                (true, _) => out.push_str(&abs.to_string()),
                (false, true) => out.push_str(&vars),
                (false, false) => {
                    out.push_str(&abs.to_string());
                    out.push('*');
                    out.push_str(&vars);
                }
            }
        }
        out
    }

    fn monomial_text(&self, m: &Monomial) -> String {
        let nx = self.alphabet.x;
        m.0.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                let (name, idx) = if k < nx { ('x', k + 1) } else { ('y', k - nx + 1) };
                if e == 1 {
                    format!("{name}{idx}")
                } else {
                    format!("{name}{idx}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// First monomial (in increasing order) where `self` and `other`
    /// differ, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(Monomial, BigInt, BigInt)> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|m| {
            let (a, b) = (self.coefficient(m), other.coefficient(m));
            (a != b).then(|| (m.clone(), a, b))
        })
    }

    /// Render a monomial of this alphabet.
    pub fn describe(&self, m: &Monomial) -> String {
        let s = self.monomial_text(m);
        if s.is_empty() {
            "1".to_string()
        } else {
            s
        }
    }
}

fn with_degrees(p: &MultiPoly, nx: usize) -> Vec<(&Monomial, &BigInt, (u32, u32))> {
    p.terms.iter().map(|(m, c)| (m, c, m.degrees(nx))).collect()
}

fn exponent(a: u32) -> u16 {
    u16::try_from(a).expect("exponent fits in 16 bits")
}

fn check_index(i: usize, count: usize) -> Result<(), PolyError> {
    if i == 0 || i > count {
        Err(PolyError::VariableOutOfRange { index: i, count })
    } else {
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Operator forms panic on alphabet mismatch; use the `checked_*` methods
/// to handle it.
impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("compatible alphabets")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("compatible alphabets")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("compatible alphabets")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
            ..self.clone()
        }
    }
}

/// Demazure operator `π_i f = (x_i f − x_{i+1} s_i f)/(x_i − x_{i+1})` on
/// the `x` alphabet, evaluated monomial by monomial.
pub fn demazure_pi(i: usize, f: &MultiPoly) -> Result<MultiPoly, PolyError> {
    check_index(i, f.alphabet.x)?;
    check_index(i + 1, f.alphabet.x)?;
    let (a, b) = (i - 1, i);
    let mut out = MultiPoly {
        terms: BTreeMap::new(),
        ..f.clone()
    };
    for (m, c) in &f.terms {
        let (p, q) = (m.0[a], m.0[b]);
        let with = |s: u16, t: u16| {
            let mut e = m.0.clone();
            e[a] = s;
            e[b] = t;
            Monomial(e)
        };
        if p >= q {
            // x_i^p x_{i+1}^q ↦ Σ_{k=0}^{p−q} x_i^{p−k} x_{i+1}^{q+k}
            for k in 0..=(p - q) {
                out.accumulate(with(p - k, q + k), c.clone());
            }
        } else {
            // x_i^p x_{i+1}^q ↦ −Σ_{k=1}^{q−p−1} x_i^{p+k} x_{i+1}^{q−k}
            for k in 1..(q - p) {
                out.accumulate(with(p + k, q - k), -c);
            }
        }
    }
    Ok(out)
}

/// `π̄_i f = π_i f − f`.
pub fn demazure_pibar(i: usize, f: &MultiPoly) -> Result<MultiPoly, PolyError> {
    Ok(&demazure_pi(i, f)? - f)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Kind {
    Key,
    Atom,
}

/// Memoized key polynomials and atoms in a fixed number of `x` variables.
#[derive(Debug, Default)]
pub struct KeyCache {
    n: usize,
    memo: HashMap<(Kind, Vec<u32>), MultiPoly>,
}

impl KeyCache {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            memo: HashMap::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    /// `κ_ν(x_1..x_n)`.
    pub fn key(&mut self, nu: &[u32]) -> Result<MultiPoly, PolyError> {
        self.get(Kind::Key, nu)
    }

    /// `a_ν(x_1..x_n)`.
    pub fn atom(&mut self, nu: &[u32]) -> Result<MultiPoly, PolyError> {
        self.get(Kind::Atom, nu)
    }

    fn get(&mut self, kind: Kind, nu: &[u32]) -> Result<MultiPoly, PolyError> {
        if nu.len() > self.n {
            return Err(PolyError::TooFewVariables {
                len: nu.len(),
                vars: self.n,
            });
        }
        let mut padded = nu.to_vec();
        padded.resize(self.n, 0);
        self.compute(kind, padded)
    }

    fn compute(&mut self, kind: Kind, nu: Vec<u32>) -> Result<MultiPoly, PolyError> {
        if let Some(p) = self.memo.get(&(kind, nu.clone())) {
            return Ok(p.clone());
        }
        let p = match nu.windows(2).position(|w| w[0] < w[1]) {
            None => MultiPoly::x_power(&nu, self.n)?,
            Some(k) => {
                let mut sorted = nu.clone();
                sorted.swap(k, k + 1);
                let prev = self.compute(kind, sorted)?;
                match kind {
                    Kind::Key => demazure_pi(k + 1, &prev)?,
                    Kind::Atom => demazure_pibar(k + 1, &prev)?,
                }
            }
        };
        self.memo.insert((kind, nu), p.clone());
        Ok(p)
    }

    /// `κ^ν(y_1..y_m) = κ_{w_0 ν}(y_m..y_1)` with `m = n`.
    pub fn opposite_key(&mut self, nu: &[u32]) -> Result<MultiPoly, PolyError> {
        self.opposite(Kind::Key, nu)
    }

    /// `a^ν(y_1..y_m) = a_{w_0 ν}(y_m..y_1)` with `m = n`.
    pub fn opposite_atom(&mut self, nu: &[u32]) -> Result<MultiPoly, PolyError> {
        self.opposite(Kind::Atom, nu)
    }

    fn opposite(&mut self, kind: Kind, nu: &[u32]) -> Result<MultiPoly, PolyError> {
        if nu.len() != self.n {
            return Err(PolyError::TooFewVariables {
                len: nu.len(),
                vars: self.n,
            });
        }
        let rev: Vec<u32> = nu.iter().rev().copied().collect();
        self.get(kind, &rev)?.reverse_x().x_to_y()
    }
}

/// `κ_ν(x_1..x_n)`.
pub fn key_polynomial(nu: &Composition, n: usize) -> Result<MultiPoly, PolyError> {
    KeyCache::new(n).key(nu)
}

/// `a_ν(x_1..x_n)`.
pub fn atom(nu: &Composition, n: usize) -> Result<MultiPoly, PolyError> {
    KeyCache::new(n).atom(nu)
}

/// `κ^ν(y_1..y_m)`, `m = ℓ(ν)`.
pub fn opposite_key(nu: &Composition) -> Result<MultiPoly, PolyError> {
    KeyCache::new(nu.len()).opposite_key(nu)
}

/// `a^ν(y_1..y_m)`, `m = ℓ(ν)`.
pub fn opposite_atom(nu: &Composition) -> Result<MultiPoly, PolyError> {
    KeyCache::new(nu.len()).opposite_atom(nu)
}

/// `∏_{(i,j) ∈ Y} 1/(1 − x_i y_j)` truncated at degree `n`, in `x_1..x_{rows}`
/// and `y_1..y_{columns}`.
pub fn cauchy_lhs(shape: &StaircaseShape, n: u32) -> MultiPoly {
    let alphabet = Alphabet::new(shape.rows(), shape.columns());
    let mut acc = MultiPoly::one(alphabet).truncated(n);
    for cell in shape.cells() {
        let mut series = MultiPoly::zero(alphabet).truncated(n);
        for k in 0..=n {
            let mut e = vec![0u16; alphabet.width()];
            e[cell.row - 1] = exponent(k);
            e[alphabet.x + cell.col - 1] = exponent(k);
            series.accumulate(Monomial(e), BigInt::one());
        }
        acc = &acc * &series;
    }
    acc
}
