//! Executable checks of the staircase character identities: van der Kallen
//! characters of minimal subquotients, the two Cauchy expansions of the
//! staircase kernel, and sweeps over the open conjectures on `DL_n̄(λ)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::dl::{canonical_shapes, enumerate_dl_on, hor_base, vrt_base, DlPoset};
use crate::poly::{cauchy_lhs, Alphabet, KeyCache, MultiPoly};
use crate::shapes::{Composition, CornerPoset, Partition, StaircaseShape};

/// Outcome of a verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// What the identity was checked at.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    Lambda(Partition),
    Degree(u32),
}

/// First monomial where the two sides differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    /// Which instance inside the identity failed (e.g. the array), if any.
    pub context: Option<String>,
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub shape: Vec<usize>,
    pub parameter: Parameter,
    pub status: Status,
    pub discrepancy: Option<Discrepancy>,
    pub wall_time_ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One line: `PASS cauchy-moebius 2,3,3,4 N=6 (12.3 ms)`.
    pub fn summary(&self) -> String {
        let shape: Vec<String> = self.shape.iter().map(ToString::to_string).collect();
        let param = match &self.parameter {
            Parameter::Lambda(l) => format!("lambda={l}"),
            Parameter::Degree(n) => format!("N={n}"),
        };
        let mut line = format!("{} {} {} {}", self.status, self.identity, shape.join(","), param);
        if let Some(d) = &self.discrepancy {
            if let Some(ctx) = &d.context {
                line.push_str(&format!(" at {ctx}:"));
            }
            line.push_str(&format!(" coefficient of {} is {} vs {}", d.monomial, d.lhs, d.rhs));
        }
        line
    }

    fn finish(identity: &str, shape: &StaircaseShape, parameter: Parameter, discrepancy: Option<Discrepancy>, start: Instant) -> Self {
        Self {
            identity: identity.to_string(),
            shape: shape.heights().to_vec(),
            parameter,
            status: if discrepancy.is_some() { Status::Fail } else { Status::Pass },
            discrepancy,
            wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }
}

fn compare(lhs: &MultiPoly, rhs: &MultiPoly, context: Option<String>) -> Option<Discrepancy> {
    lhs.first_difference(rhs).map(|(m, a, b)| Discrepancy {
        context,
        monomial: lhs.describe(&m),
        lhs: a.to_string(),
        rhs: b.to_string(),
    })
}

/// Truncation degree used when none is given: 6 up to five columns, 4 beyond.
pub fn default_degree(shape: &StaircaseShape) -> u32 {
    if shape.columns() <= 5 {
        6
    } else {
        4
    }
}

/// Key polynomials in `x_1..x_{rows}` and opposite ones in `y_1..y_{columns}`.
struct Characters {
    x: KeyCache,
    y: KeyCache,
}

impl Characters {
    fn new(shape: &StaircaseShape) -> Self {
        Self {
            x: KeyCache::new(shape.rows()),
            y: KeyCache::new(shape.columns()),
        }
    }

    fn key_x(&mut self, nu: &Composition) -> MultiPoly {
        self.x.key(nu).expect("hor has one entry per row")
    }

    fn atom_x(&mut self, nu: &Composition) -> MultiPoly {
        self.x.atom(nu).expect("hor has one entry per row")
    }

    fn key_y(&mut self, nu: &Composition) -> MultiPoly {
        self.y.opposite_key(nu).expect("vrt has one entry per column")
    }

    fn atom_y(&mut self, nu: &Composition) -> MultiPoly {
        self.y.opposite_atom(nu).expect("vrt has one entry per column")
    }
}

fn sum(alphabet: Alphabet, terms: impl IntoIterator<Item = MultiPoly>) -> MultiPoly {
    terms.into_iter().fold(MultiPoly::zero(alphabet), |acc, t| &acc + &t)
}

/// The four sides of the van der Kallen character identities for one
/// array `A`: atoms over bubble-sort fibers and Möbius-weighted keys.
#[derive(Debug, Clone)]
pub struct VdkSides {
    pub vrt_atoms: MultiPoly,
    pub vrt_keys: MultiPoly,
    pub hor_atoms: MultiPoly,
    pub hor_keys: MultiPoly,
}

/// For every array of `DL_n̄(λ)`, in order:
/// `Σ_{bbs(d̄) = vrt A} a^{d̄}(y)` and `Σ_{B ⪰ A} μ(A,B) κ^{vrt B}(y)`;
/// `Σ_{bbs^op(b̄) = hor A} a_{b̄}(x)` and `Σ_{C ⪯ A} μ(C,A) κ_{hor C}(x)`.
pub fn vdk_sides(dl: &DlPoset) -> Vec<VdkSides> {
    let cp = dl.corner_poset();
    let shape = cp.shape();
    let lambda = dl.lambda();
    let mut ch = Characters::new(shape);
    let vrt_fibers = vrt_base(cp).bbs_fibers(lambda).expect("λ fits the columns");
    let hor_fibers = hor_base(cp).op_fibers(lambda).expect("λ fits the rows");
    let mu = dl.poset().mobius_table();
    let (ax, ay) = (Alphabet::x_only(shape.rows()), Alphabet::y_only(shape.columns()));
    let empty = Vec::new();
    dl.arrays()
        .iter()
        .enumerate()
        .map(|(a, arr)| {
            let (hor, vrt) = (arr.hor(), arr.vrt());
            let vrt_atoms = sum(ay, vrt_fibers.get(&vrt).unwrap_or(&empty).iter().map(|d| ch.atom_y(d)));
            let hor_atoms = sum(ax, hor_fibers.get(&hor).unwrap_or(&empty).iter().map(|b| ch.atom_x(b)));
            let vrt_keys = sum(
                ay,
                (0..dl.len())
                    .filter(|&b| dl.poset().leq(a, b))
                    .map(|b| ch.key_y(&dl.arrays()[b].vrt()).scale(&mu[a][b].into())),
            );
            let hor_keys = sum(
                ax,
                (0..dl.len())
                    .filter(|&c| dl.poset().leq(c, a))
                    .map(|c| ch.key_x(&dl.arrays()[c].hor()).scale(&mu[c][a].into())),
            );
            VdkSides {
                vrt_atoms,
                vrt_keys,
                hor_atoms,
                hor_keys,
            }
        })
        .collect()
}

/// Both van der Kallen character identities for every array of `DL_n̄(λ)`.
pub fn verify_vdk(shape: &StaircaseShape, lambda: &Partition) -> VerificationReport {
    let start = Instant::now();
    let dl = enumerate_dl_on(Arc::new(shape.corners()), lambda);
    let sides = vdk_sides(&dl);
    let discrepancy = dl.arrays().iter().zip(&sides).find_map(|(arr, s)| {
        compare(&s.vrt_atoms, &s.vrt_keys, Some(format!("vrt side of {arr}")))
            .or_else(|| compare(&s.hor_atoms, &s.hor_keys, Some(format!("hor side of {arr}"))))
    });
    VerificationReport::finish("vdk", shape, Parameter::Lambda(lambda.clone()), discrepancy, start)
}

/// Partitions of weight `≤ n` with at most `k` parts, by weight.
fn partitions_up_to(n: u32, k: usize) -> Vec<Partition> {
    (0..=n).flat_map(|w| Partition::all_of(w, k)).collect()
}

/// Which factor of a comparable pair carries the `x` (row) key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pairing {
    /// `Σ_{A ⪯ B} μ(A,B) κ_{hor A}(x) κ^{vrt B}(y)`: this is the expansion
    /// of `Σ_A κ_{hor A}(x) · ch K^op_{vrt A}`.
    LowerHor,
    /// `Σ_{B ⪯ A} μ(B,A) κ_{hor A}(x) κ^{vrt B}(y)`.
    UpperHor,
}

/// The dense-array posets of every `λ` of weight `≤ n` fitting the corners.
fn dl_posets(shape: &StaircaseShape, n: u32) -> Vec<DlPoset> {
    let cp: Arc<CornerPoset> = Arc::new(shape.corners());
    partitions_up_to(n, cp.len())
        .into_par_iter()
        .map(|lambda| enumerate_dl_on(cp.clone(), &lambda))
        .collect()
}

fn alphabet_of(shape: &StaircaseShape) -> Alphabet {
    Alphabet::new(shape.rows(), shape.columns())
}

/// Right side of the bubble-sort Cauchy expansion, per `λ`, truncated at `n`.
pub fn cauchy_bs_rhs(shape: &StaircaseShape, n: u32) -> BTreeMap<Partition, MultiPoly> {
    let alphabet = alphabet_of(shape);
    dl_posets(shape, n)
        .into_par_iter()
        .map(|dl| {
            let mut ch = Characters::new(shape);
            let fibers = vrt_base(dl.corner_poset()).bbs_fibers(dl.lambda()).expect("λ fits");
            let mut total = MultiPoly::zero(alphabet).truncated(n);
            for arr in dl.arrays() {
                let atoms = sum(
                    Alphabet::y_only(shape.columns()),
                    fibers[&arr.vrt()].iter().map(|d| ch.atom_y(d)),
                );
                total = &total + &(&ch.key_x(&arr.hor()) * &atoms);
            }
            (dl.lambda().clone(), total)
        })
        .collect()
}

/// Right side of the Möbius Cauchy expansion, per `λ`, truncated at `n`.
pub fn cauchy_moebius_rhs(shape: &StaircaseShape, n: u32, pairing: Pairing) -> BTreeMap<Partition, MultiPoly> {
    let alphabet = alphabet_of(shape);
    dl_posets(shape, n)
        .into_par_iter()
        .map(|dl| {
            let mut ch = Characters::new(shape);
            let mu = dl.poset().mobius_table();
            let mut total = MultiPoly::zero(alphabet).truncated(n);
            for (lo, row) in mu.iter().enumerate() {
                for hi in (0..dl.len()).filter(|&hi| dl.poset().leq(lo, hi)) {
                    if row[hi] == 0 {
                        continue;
                    }
                    let (h, v) = match pairing {
                        Pairing::LowerHor => (lo, hi),
                        Pairing::UpperHor => (hi, lo),
                    };
                    let term = &ch.key_x(&dl.arrays()[h].hor()) * &ch.key_y(&dl.arrays()[v].vrt());
                    total = &total + &term.scale(&row[hi].into());
                }
            }
            (dl.lambda().clone(), total)
        })
        .collect()
}

fn verify_against_kernel(name: &str, shape: &StaircaseShape, n: u32, parts: BTreeMap<Partition, MultiPoly>) -> VerificationReport {
    let start = Instant::now();
    let lhs = cauchy_lhs(shape, n);
    let rhs = parts
        .values()
        .fold(MultiPoly::zero(alphabet_of(shape)).truncated(n), |acc, p| &acc + p);
    VerificationReport::finish(name, shape, Parameter::Degree(n), compare(&lhs, &rhs, None), start)
}

/// `∏ 1/(1 − x_i y_j) = Σ_λ Σ_A κ_{hor A}(x) Σ_{bbs(d̄) = vrt A} a^{d̄}(y)`
/// up to degree `n`.
pub fn verify_cauchy_bs(shape: &StaircaseShape, n: u32) -> VerificationReport {
    let start = Instant::now();
    let mut r = verify_against_kernel("cauchy-bs", shape, n, cauchy_bs_rhs(shape, n));
    r.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    r
}

/// `∏ 1/(1 − x_i y_j) = Σ_λ Σ_{A ⪯ B} μ(A,B) κ_{hor A}(x) κ^{vrt B}(y)` up
/// to degree `n`.
pub fn verify_cauchy_moebius(shape: &StaircaseShape, n: u32) -> VerificationReport {
    verify_cauchy_moebius_with(shape, n, Pairing::LowerHor)
}

/// [`verify_cauchy_moebius`] with an explicit pairing of the keys.
pub fn verify_cauchy_moebius_with(shape: &StaircaseShape, n: u32, pairing: Pairing) -> VerificationReport {
    let start = Instant::now();
    let name = match pairing {
        Pairing::LowerHor => "cauchy-moebius",
        Pairing::UpperHor => "cauchy-moebius-upper-hor",
    };
    let mut r = verify_against_kernel(name, shape, n, cauchy_moebius_rhs(shape, n, pairing));
    r.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    r
}

/// The shapes checked by default: small staircases, a rectangle and the
/// six-column example.
pub fn canonical_test_shapes() -> Vec<StaircaseShape> {
    [
        vec![1],
        vec![1, 2],
        vec![2, 2],
        vec![2, 2, 2],
        vec![1, 3, 3, 4],
        vec![2, 3, 3, 4],
        vec![2, 3, 3, 3, 5, 5],
    ]
    .into_iter()
    .map(|h| StaircaseShape::new(h).expect("weakly increasing"))
    .collect()
}

/// Verdict of the EL search on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ShellVerdict {
    /// A reflection order induces an EL-labelling: shellable.
    Certified,
    /// No reflection order works or the search was capped: inconclusive.
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepEntry {
    pub shape: Vec<usize>,
    pub lambda: Partition,
    pub size: usize,
    pub regular: bool,
    pub mobius_min: Option<i64>,
    pub mobius_max: Option<i64>,
    pub shell: ShellVerdict,
    /// `None` unless `λ` is regular.
    pub mobius_formula: Option<bool>,
}

/// A counterexample to one of the conjectures.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureViolation {
    pub conjecture: String,
    pub shape: Vec<usize>,
    pub lambda: Partition,
    pub detail: String,
}

impl fmt::Display for ConjectureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape: Vec<String> = self.shape.iter().map(ToString::to_string).collect();
        write!(
            f,
            "CONJECTURE-VIOLATION {} shape={} lambda={} {}",
            self.conjecture,
            shape.join(","),
            self.lambda,
            self.detail
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub max_corners: usize,
    pub max_weight: u32,
    pub entries: Vec<SweepEntry>,
    pub violations: Vec<ConjectureViolation>,
    /// Instances where shellability was not certified.
    pub inconclusive: usize,
    pub wall_time_ms: f64,
}

impl SweepSummary {
    /// Möbius values seen across all instances.
    pub fn mobius_range(&self) -> Option<(i64, i64)> {
        let lo = self.entries.iter().filter_map(|e| e.mobius_min).min()?;
        let hi = self.entries.iter().filter_map(|e| e.mobius_max).max()?;
        Some((lo, hi))
    }

    /// Whether every regular instance reproduced the Möbius formula.
    pub fn regular_formula_holds(&self) -> bool {
        self.entries.iter().all(|e| e.mobius_formula != Some(false))
    }
}

/// Every canonical shape with at most `max_corners` corners and every
/// nonempty `λ` with `|λ| ≤ max_weight` fitting the corners: Möbius range,
/// EL certification and, for regular `λ`, the Möbius formula.  Results are
/// ordered by shape, then by `λ`.
pub fn conjecture_sweep(max_corners: usize, max_weight: u32) -> SweepSummary {
    let start = Instant::now();
    let jobs: Vec<(Arc<CornerPoset>, Partition)> = (1..=max_corners)
        .flat_map(canonical_shapes)
        .flat_map(|s| {
            let cp = Arc::new(s.corners());
            let k = cp.len();
            (1..=max_weight)
                .flat_map(move |w| Partition::all_of(w, k))
                .map(move |l| (cp.clone(), l))
        })
        .collect();
    let entries: Vec<SweepEntry> = jobs
        .into_par_iter()
        .map(|(cp, lambda)| {
            let regular = lambda.is_regular_in(cp.len());
            let shape = cp.shape().heights().to_vec();
            let report = enumerate_dl_on(cp, &lambda).property_report();
            SweepEntry {
                shape,
                lambda,
                size: report.size,
                regular,
                mobius_min: report.mobius_min,
                mobius_max: report.mobius_max,
                shell: if report.el_shellable == Some(true) {
                    ShellVerdict::Certified
                } else {
                    ShellVerdict::Inconclusive
                },
                mobius_formula: report.mobius_formula,
            }
        })
        .collect();
    let mut violations = Vec::new();
    for e in &entries {
        if e.mobius_min.is_some_and(|v| v < -1) || e.mobius_max.is_some_and(|v| v > 1) {
            violations.push(ConjectureViolation {
                conjecture: "moebius".to_string(),
                shape: e.shape.clone(),
                lambda: e.lambda.clone(),
                detail: format!("mobius range [{:?}, {:?}]", e.mobius_min, e.mobius_max),
            });
        }
    }
    let inconclusive = entries.iter().filter(|e| e.shell == ShellVerdict::Inconclusive).count();
    SweepSummary {
        max_corners,
        max_weight,
        entries,
        violations,
        inconclusive,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}
