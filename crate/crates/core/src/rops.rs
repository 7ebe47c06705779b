//! R-operators, orbit dimensions, cover relations, and braid relations.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::afweyl::AffineWeylElement;
use crate::error::{Error, Result};
use crate::rootsys::{Coweight, Root, RootSystem};

/// `R_α(λ) = s_α(λ)` if `⟨λ,α⟩ ≥ 0`, else `s_α(λ) − α̌`.
pub fn r_op(rs: &RootSystem, lambda: &Coweight, alpha: &Root) -> Result<Coweight> {
    rs.check_rank(lambda.rank())?;
    let idx = rs.check_positive_root(alpha)?;
    Ok(r_op_by_index(rs, lambda, idx))
}

pub fn r_op_by_index(rs: &RootSystem, lambda: &Coweight, idx: usize) -> Coweight {
    let p = lambda.dot(&rs.positive_roots()[idx]);
    let co = rs.coroot_by_index(idx);
    let k = if p >= 0 { -p } else { -p - 1 };
    lambda.add_scaled(co, k)
}

/// Closure of `{λ}` under all `R_α`.
pub fn r_closure(rs: &RootSystem, lambda: &Coweight) -> Result<BTreeSet<Coweight>> {
    rs.check_rank(lambda.rank())?;
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        for idx in 0..rs.num_positive_roots() {
            let nu = r_op_by_index(rs, &mu, idx);
            if seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    Ok(seen)
}

/// `dim 𝕏_λ`, computed as `2⟨λ⁺,ρ⟩ − ℓ(w^λ)` and checked against
/// `ℓ(τ_{−λ} w^λ)`.
pub fn dim_orbit(rs: &RootSystem, lambda: &Coweight) -> Result<usize> {
    rs.check_rank(lambda.rank())?;
    let (plus, w) = rs.dominant_translate(lambda);
    let by_rho = rs.rho_pair(&plus) - rs.weyl_length(&w) as i64;
    let by_length = AffineWeylElement::new(rs, lambda.neg(), w)?.length(rs);
    if by_rho != by_length as i64 {
        return Err(Error::Consistency(format!(
            "dimension of {lambda}: 2⟨λ⁺,ρ⟩ − ℓ(w^λ) = {by_rho} but ℓ(τ_{{−λ}} w^λ) = {by_length}"
        )));
    }
    Ok(by_length)
}

/// `λ` is α-regular when `⟨λ,α⟩ > 0`, or `⟨λ,α⟩ < 0` and `λ + α̌ ∈ 𝔠_{w^λ}`.
pub fn is_alpha_regular(rs: &RootSystem, lambda: &Coweight, alpha: &Root) -> Result<bool> {
    rs.check_rank(lambda.rank())?;
    let idx = rs.check_positive_root(alpha)?;
    Ok(alpha_regular_by_index(rs, lambda, idx))
}

pub(crate) fn alpha_regular_by_index(rs: &RootSystem, lambda: &Coweight, idx: usize) -> bool {
    let p = lambda.dot(&rs.positive_roots()[idx]);
    if p > 0 {
        return true;
    }
    if p == 0 {
        return false;
    }
    let (_, w) = rs.dominant_translate(lambda);
    rs.in_chamber(&lambda.add(rs.coroot_by_index(idx)), &w)
}

/// `⟨λ, w^λ(α_i)⟩ ≥ n` for every simple root, i.e. `λ⁺` has all coordinates `≥ n`.
pub fn is_n_regular(rs: &RootSystem, lambda: &Coweight, n: i64) -> Result<bool> {
    rs.check_rank(lambda.rank())?;
    let (plus, _) = rs.dominant_translate(lambda);
    Ok(plus.0.iter().all(|&c| c >= n))
}

/// Pairs `(R_α(λ), α)` with `dim 𝕏_{R_α(λ)} = dim 𝕏_λ − 1`, sorted.
pub fn covers(rs: &RootSystem, lambda: &Coweight) -> Result<Vec<(Coweight, Root)>> {
    let d = dim_orbit(rs, lambda)?;
    let mut out = Vec::new();
    for (idx, alpha) in rs.positive_roots().iter().enumerate() {
        let mu = r_op_by_index(rs, lambda, idx);
        if dim_orbit(rs, &mu)? + 1 == d {
            out.push((mu, alpha.clone()));
        }
    }
    out.sort();
    Ok(out)
}

/// `Ψ(λ)_∂`, the first components of [`covers`].
pub fn boundary(rs: &RootSystem, lambda: &Coweight) -> Result<BTreeSet<Coweight>> {
    Ok(covers(rs, lambda)?.into_iter().map(|(mu, _)| mu).collect())
}

/// `ℓ(w^λ) − ℓ(w^μ) = 2⟨λ⁺ − μ⁺, ρ⟩ − 1`
pub fn satisfies_cover_formula(rs: &RootSystem, lambda: &Coweight, mu: &Coweight) -> bool {
    let (lp, lw) = rs.dominant_translate(lambda);
    let (mp, mw) = rs.dominant_translate(mu);
    rs.weyl_length(&lw) as i64 - rs.weyl_length(&mw) as i64 == rs.rho_pair(&lp.sub(&mp)) - 1
}

/// Compares the simplified cover criteria with the direct dimension test for
/// `μ = R_α(λ)`. `None` when neither criterion applies: `⟨λ,α⟩ = 0`, or
/// `⟨λ,α⟩ < 0` with `λ` not α-regular.
///
/// For `⟨λ,α⟩ > 0` the criterion is `ℓ(s_α w^λ) = ℓ(w^λ) + 1`. For `⟨λ,α⟩ < 0`
/// it is `ℓ(w^λ) − ℓ(w^μ) = −2⟨α̌, w^λ(ρ)⟩ − 1`.
pub fn cover_characterization_check(
    rs: &RootSystem,
    lambda: &Coweight,
    alpha: &Root,
) -> Result<Option<bool>> {
    rs.check_rank(lambda.rank())?;
    let idx = rs.check_positive_root(alpha)?;
    let p = lambda.dot(alpha);
    if p == 0 || (p < 0 && !alpha_regular_by_index(rs, lambda, idx)) {
        return Ok(None);
    }
    let mu = r_op_by_index(rs, lambda, idx);
    let direct = dim_orbit(rs, &mu)? + 1 == dim_orbit(rs, lambda)?;
    let (_, w) = rs.dominant_translate(lambda);
    let lw = rs.weyl_length(&w) as i64;
    let predicted = if p > 0 {
        let sw = rs.reflection_by_index(idx).compose(&w);
        rs.weyl_length(&sw) as i64 == lw + 1
    } else {
        let (_, wmu) = rs.dominant_translate(&mu);
        let pulled = w.apply_inverse(rs.coroot_by_index(idx));
        lw - rs.weyl_length(&wmu) as i64 == -rs.rho_pair(&pulled) - 1
    };
    Ok(Some(predicted == direct))
}

/// For `⟨λ,α⟩ < 0`, `λ` `(r+1)`-regular and `R_α(λ)` covered by `λ`: whether
/// `s_α w^λ → w^λ` holds exactly when `−(w^λ)⁻¹(α)` is simple. `None` when the
/// hypotheses fail.
pub fn simple_cover_check(
    rs: &RootSystem,
    lambda: &Coweight,
    alpha: &Root,
) -> Result<Option<bool>> {
    rs.check_rank(lambda.rank())?;
    let idx = rs.check_positive_root(alpha)?;
    if lambda.dot(alpha) >= 0 || !is_n_regular(rs, lambda, rs.lacing() + 1)? {
        return Ok(None);
    }
    let mu = r_op_by_index(rs, lambda, idx);
    if dim_orbit(rs, &mu)? + 1 != dim_orbit(rs, lambda)? {
        return Ok(None);
    }
    let (_, w) = rs.dominant_translate(lambda);
    let sw = rs.reflection_by_index(idx).compose(&w);
    let weyl_cover = rs.weyl_length(&sw) + 1 == rs.weyl_length(&w);
    let pulled = w.act_root_inverse(alpha).neg();
    let simple = pulled.height() == 1 && pulled.is_positive();
    Ok(Some(weyl_cover == simple))
}

/// Rank-two pattern of a pair of positive roots, after naming the short root `α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BraidPattern {
    Orthogonal,
    A2,
    B2,
    G2,
}

impl BraidPattern {
    /// Number of operators on each side of the relation.
    pub fn word_length(self) -> usize {
        match self {
            BraidPattern::Orthogonal => 2,
            BraidPattern::A2 => 3,
            BraidPattern::B2 => 4,
            BraidPattern::G2 => 6,
        }
    }

    /// Hyperplanes `⟨λ, aα + bβ⟩ = k` off which the relation is expected to
    /// hold, as `((a, b), k)`. None are known for G2.
    pub fn critical_lines(self) -> &'static [((i64, i64), i64)] {
        match self {
            BraidPattern::Orthogonal => &[],
            BraidPattern::A2 => &[((1, 1), -1)],
            BraidPattern::B2 => &[((1, 1), -1), ((2, 1), -1), ((2, 1), -2)],
            BraidPattern::G2 => &[],
        }
    }
}

impl fmt::Display for BraidPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BraidPattern::Orthogonal => "orthogonal",
            BraidPattern::A2 => "A2",
            BraidPattern::B2 => "B2",
            BraidPattern::G2 => "G2",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidReport {
    pub pattern: BraidPattern,
    /// `(α, β)` with `α` the short root when lengths differ.
    pub root_pair: (Root, Root),
    /// `(⟨α, β̌⟩, ⟨β, α̌⟩)`
    pub pairings: (i64, i64),
    /// True when the caller's `(α, β)` were exchanged to put the short root first.
    pub swapped: bool,
    pub lambda: Coweight,
    /// `R_α R_β R_α ⋯ (λ)`, the word starting with `R_α` on the left.
    pub lhs: Coweight,
    /// `R_β R_α R_β ⋯ (λ)`
    pub rhs: Coweight,
    pub equal: bool,
    /// The alternating reflection word `s_α s_β ⋯` applied to `λ`.
    pub w_lambda: Coweight,
    pub critical_lines_hit: Vec<(Root, i64)>,
    /// `⟨λ,α⟩ ≤ 0` and `⟨λ,β⟩ ≤ 0`.
    pub in_antidominant_chamber: bool,
}

/// Classifies `(α, β)` and names the short root `α`.
pub fn classify_pair(
    rs: &RootSystem,
    alpha: &Root,
    beta: &Root,
) -> Result<(BraidPattern, usize, usize, bool)> {
    let ia = rs.check_positive_root(alpha)?;
    let ib = rs.check_positive_root(beta)?;
    if ia == ib {
        return Err(Error::arg("braid relation needs two distinct roots"));
    }
    let a = rs.coroot_by_index(ib).dot(alpha);
    let b = rs.coroot_by_index(ia).dot(beta);
    let (pattern, swapped) = match (a, b) {
        (0, 0) => (BraidPattern::Orthogonal, false),
        (-1, -1) => (BraidPattern::A2, false),
        (-1, -2) => (BraidPattern::B2, false),
        (-2, -1) => (BraidPattern::B2, true),
        (-1, -3) => (BraidPattern::G2, false),
        (-3, -1) => (BraidPattern::G2, true),
        _ => {
            return Err(Error::arg(format!(
                "{alpha} and {beta} are not simple roots of a rank-two subsystem \
                 (pairings {a}, {b})"
            )))
        }
    };
    Ok(if swapped {
        (pattern, ib, ia, true)
    } else {
        (pattern, ia, ib, false)
    })
}

/// Evaluates both sides of the braid relation for `R_α` and `R_β` at `λ`.
pub fn braid_check(
    rs: &RootSystem,
    lambda: &Coweight,
    alpha: &Root,
    beta: &Root,
) -> Result<BraidReport> {
    rs.check_rank(lambda.rank())?;
    let (pattern, ia, ib, swapped) = classify_pair(rs, alpha, beta)?;
    let n = pattern.word_length();
    // the operator written rightmost acts first
    let word = |first: usize, second: usize| -> Vec<usize> {
        (0..n)
            .map(|k| if k % 2 == 0 { first } else { second })
            .collect()
    };
    let eval = |ops: &[usize]| {
        ops.iter()
            .rev()
            .fold(lambda.clone(), |mu, &i| r_op_by_index(rs, &mu, i))
    };
    let lhs = eval(&word(ia, ib));
    let rhs = eval(&word(ib, ia));
    let w_lambda = word(ia, ib)
        .iter()
        .rev()
        .fold(lambda.clone(), |mu, &i| rs.reflect_by_index(&mu, i));
    let ra = &rs.positive_roots()[ia];
    let rb = &rs.positive_roots()[ib];
    let critical_lines_hit = pattern
        .critical_lines()
        .iter()
        .filter_map(|&((a, b), k)| {
            let gamma = ra.scale(a).add(&rb.scale(b));
            (lambda.dot(&gamma) == k).then_some((gamma, k))
        })
        .collect();
    let pa = lambda.dot(ra);
    let pb = lambda.dot(rb);
    Ok(BraidReport {
        pattern,
        root_pair: (ra.clone(), rb.clone()),
        pairings: (
            rs.coroot_by_index(ib).dot(ra),
            rs.coroot_by_index(ia).dot(rb),
        ),
        swapped,
        lambda: lambda.clone(),
        equal: lhs == rhs,
        lhs,
        rhs,
        w_lambda,
        critical_lines_hit,
        in_antidominant_chamber: pa <= 0 && pb <= 0,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BraidBucket {
    Equal,
    UnequalOnCriticalLine,
    UnequalElsewhere,
}

impl BraidReport {
    pub fn bucket(&self) -> BraidBucket {
        if self.equal {
            BraidBucket::Equal
        } else if self.critical_lines_hit.is_empty() {
            BraidBucket::UnequalElsewhere
        } else {
            BraidBucket::UnequalOnCriticalLine
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BraidScan {
    pub radius: i64,
    pub pattern: Option<BraidPattern>,
    pub total: usize,
    pub equal: usize,
    pub unequal_on_critical_line: usize,
    pub unequal_elsewhere: Vec<Coweight>,
    /// Failures at points inside the antidominant chamber of the pair.
    pub unequal_in_antidominant_chamber: Vec<Coweight>,
    /// Points on a critical line, outside the antidominant chamber, where the
    /// relation nevertheless holds.
    pub equal_on_critical_line_outside_antidominant: Vec<Coweight>,
    /// Failures tallied by the set of critical lines they lie on.
    pub failures_by_lines: BTreeMap<String, usize>,
}

/// Every coweight in `[−r, r]^ℓ`, in lexicographic order.
pub fn coweight_box(rank: usize, r: i64) -> Vec<Coweight> {
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-r..=r).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Coweight).collect()
}

/// The two simple roots of a rank-two system, short root first.
pub fn simple_pair(rs: &RootSystem) -> Result<(Root, Root)> {
    if rs.rank() != 2 {
        return Err(Error::arg(format!(
            "braid scans need a rank-two type, got {}",
            rs.cartan_type()
        )));
    }
    let (_, ia, ib, _) = classify_pair(rs, &rs.simple_root(0), &rs.simple_root(1))?;
    Ok((
        rs.positive_roots()[ia].clone(),
        rs.positive_roots()[ib].clone(),
    ))
}

/// Classifies every `λ ∈ [−r, r]²` by the outcome of the braid relation for the
/// simple roots of a rank-two type.
pub fn braid_scan(rs: &RootSystem, radius: i64) -> Result<BraidScan> {
    let (alpha, beta) = simple_pair(rs)?;
    let mut scan = BraidScan {
        radius,
        ..Default::default()
    };
    for lambda in coweight_box(2, radius) {
        let rep = braid_check(rs, &lambda, &alpha, &beta)?;
        scan.pattern = Some(rep.pattern);
        scan.total += 1;
        match rep.bucket() {
            BraidBucket::Equal => {
                scan.equal += 1;
                if !rep.critical_lines_hit.is_empty() && !rep.in_antidominant_chamber {
                    scan.equal_on_critical_line_outside_antidominant
                        .push(lambda.clone());
                }
            }
            BraidBucket::UnequalOnCriticalLine => scan.unequal_on_critical_line += 1,
            BraidBucket::UnequalElsewhere => scan.unequal_elsewhere.push(lambda.clone()),
        }
        if !rep.equal {
            if rep.in_antidominant_chamber {
                scan.unequal_in_antidominant_chamber.push(lambda.clone());
            }
            let key = if rep.critical_lines_hit.is_empty() {
                "none".to_string()
            } else {
                rep.critical_lines_hit
                    .iter()
                    .map(|(g, k)| format!("<λ,{g}>={k}"))
                    .collect::<Vec<_>>()
                    .join(" & ")
            };
            *scan.failures_by_lines.entry(key).or_default() += 1;
        }
    }
    Ok(scan)
}

/// Comparison used in a braid-table condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Le(i64),
    Lt(i64),
    Eq(i64),
    Ge(i64),
    Gt(i64),
    OneOf(i64, i64),
}

impl Cmp {
    pub fn holds(self, x: i64) -> bool {
        match self {
            Cmp::Le(v) => x <= v,
            Cmp::Lt(v) => x < v,
            Cmp::Eq(v) => x == v,
            Cmp::Ge(v) => x >= v,
            Cmp::Gt(v) => x > v,
            Cmp::OneOf(a, b) => x == a || x == b,
        }
    }
}

/// `⟨λ, aα + bβ⟩` compared against a constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Condition {
    pub root: (i64, i64),
    pub cmp: Cmp,
}

/// `w(λ) − aα̌ − bβ̌`
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shift(pub i64, pub i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub conditions: [Condition; 2],
    pub lhs: Shift,
    /// `None` when both sides agree.
    pub rhs: Option<Shift>,
}

const fn cond(a: i64, b: i64, cmp: Cmp) -> Condition {
    Condition { root: (a, b), cmp }
}

const fn row(c1: Condition, c2: Condition, lhs: Shift, rhs: Option<Shift>) -> TableRow {
    TableRow {
        conditions: [c1, c2],
        lhs,
        rhs,
    }
}

use Cmp::*;

pub const A2_TABLE: [TableRow; 10] = [
    row(cond(1, 0, Le(-1)), cond(0, 1, Le(-1)), Shift(2, 2), None),
    row(cond(1, 0, Eq(-1)), cond(0, 1, Eq(0)), Shift(1, 1), None),
    row(cond(1, 0, Eq(0)), cond(0, 1, Eq(-1)), Shift(1, 1), None),
    row(cond(1, 0, Ge(0)), cond(1, 1, Lt(-1)), Shift(2, 1), None),
    row(
        cond(1, 0, Ge(1)),
        cond(1, 1, Eq(-1)),
        Shift(2, 1),
        Some(Shift(1, 0)),
    ),
    row(cond(1, 1, Ge(0)), cond(0, 1, Le(-1)), Shift(1, 0), None),
    row(cond(1, 0, Ge(0)), cond(0, 1, Ge(0)), Shift(0, 0), None),
    row(cond(0, 1, Ge(0)), cond(1, 1, Lt(-1)), Shift(1, 2), None),
    row(
        cond(1, 1, Eq(-1)),
        cond(0, 1, Ge(1)),
        Shift(0, 1),
        Some(Shift(1, 2)),
    ),
    row(cond(1, 1, Ge(0)), cond(1, 0, Le(-1)), Shift(0, 1), None),
];

pub const B2_TABLE: [TableRow; 18] = [
    row(cond(1, 0, Le(-1)), cond(0, 1, Lt(0)), Shift(3, 4), None),
    row(cond(1, 0, Eq(0)), cond(0, 1, Eq(-2)), Shift(2, 3), None),
    row(cond(0, 1, Eq(0)), cond(1, 0, Eq(-1)), Shift(2, 2), None),
    row(cond(0, 1, Eq(-1)), cond(1, 0, Eq(0)), Shift(1, 2), None),
    row(cond(1, 1, Lt(-1)), cond(0, 1, Ge(0)), Shift(3, 3), None),
    row(
        cond(1, 1, Eq(-1)),
        cond(0, 1, Gt(0)),
        Shift(3, 3),
        Some(Shift(2, 1)),
    ),
    row(
        cond(0, 1, Eq(1)),
        cond(1, 0, Eq(-2)),
        Shift(3, 3),
        Some(Shift(2, 2)),
    ),
    row(cond(1, 1, Ge(0)), cond(2, 1, Lt(-2)), Shift(2, 2), None),
    row(
        cond(1, 0, Le(-2)),
        cond(2, 1, OneOf(-2, -1)),
        Shift(2, 1),
        Some(Shift(1, 0)),
    ),
    row(
        cond(0, 1, Eq(1)),
        cond(1, 0, Eq(-1)),
        Shift(1, 1),
        Some(Shift(1, 1)),
    ),
    row(cond(2, 1, Ge(0)), cond(1, 0, Le(-1)), Shift(1, 0), None),
    row(cond(1, 0, Ge(0)), cond(0, 1, Ge(0)), Shift(0, 0), None),
    row(cond(1, 0, Ge(0)), cond(2, 1, Lt(-2)), Shift(2, 4), None),
    row(
        cond(1, 0, Gt(0)),
        cond(2, 1, OneOf(-2, -1)),
        Shift(1, 3),
        Some(Shift(2, 4)),
    ),
    row(cond(2, 1, Ge(0)), cond(1, 1, Lt(-1)), Shift(1, 3), None),
    row(
        cond(1, 1, Eq(-1)),
        cond(2, 1, Ge(2)),
        Shift(0, 1),
        Some(Shift(1, 3)),
    ),
    row(
        cond(1, 1, Eq(-1)),
        cond(2, 1, Eq(0)),
        Shift(0, 1),
        Some(Shift(1, 2)),
    ),
    row(cond(1, 1, Ge(0)), cond(0, 1, Lt(0)), Shift(0, 1), None),
];

pub fn table_for(pattern: BraidPattern) -> Option<&'static [TableRow]> {
    match pattern {
        BraidPattern::A2 => Some(&A2_TABLE),
        BraidPattern::B2 => Some(&B2_TABLE),
        _ => None,
    }
}

impl TableRow {
    pub fn applies(&self, lambda: &Coweight, alpha: &Root, beta: &Root) -> bool {
        self.conditions.iter().all(|c| {
            let gamma = alpha.scale(c.root.0).add(&beta.scale(c.root.1));
            c.cmp.holds(lambda.dot(&gamma))
        })
    }

    fn shifted(rs: &RootSystem, w_lambda: &Coweight, s: Shift, a: &Root, b: &Root) -> Coweight {
        let ca = rs.coroot(a).expect("root");
        let cb = rs.coroot(b).expect("root");
        w_lambda.add_scaled(&ca, -s.0).add_scaled(&cb, -s.1)
    }

    /// Predicted `(lhs, rhs)` for a report whose `λ` satisfies this row.
    pub fn predict(&self, rs: &RootSystem, rep: &BraidReport) -> (Coweight, Coweight) {
        let (a, b) = &rep.root_pair;
        let lhs = Self::shifted(rs, &rep.w_lambda, self.lhs, a, b);
        let rhs = Self::shifted(rs, &rep.w_lambda, self.rhs.unwrap_or(self.lhs), a, b);
        (lhs, rhs)
    }
}

impl fmt::Display for Cmp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cmp::Le(v) => write!(f, "<= {v}"),
            Cmp::Lt(v) => write!(f, "< {v}"),
            Cmp::Eq(v) => write!(f, "= {v}"),
            Cmp::Ge(v) => write!(f, ">= {v}"),
            Cmp::Gt(v) => write!(f, "> {v}"),
            Cmp::OneOf(a, b) => write!(f, "in {{{a}, {b}}}"),
        }
    }
}

fn combo(a: i64, b: i64, sa: &str, sb: &str) -> String {
    let term = |k: i64, s: &str| match k {
        0 => String::new(),
        1 => s.to_string(),
        _ => format!("{k}{s}"),
    };
    match (a, b) {
        (0, _) => term(b, sb),
        (_, 0) => term(a, sa),
        _ => format!("{}+{}", term(a, sa), term(b, sb)),
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<λ,{}> {}",
            combo(self.root.0, self.root.1, "α", "β"),
            self.cmp
        )
    }
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 && self.1 == 0 {
            write!(f, "w(λ)")
        } else {
            let mut s = String::from("w(λ)");
            for (k, name) in [(self.0, "α̌"), (self.1, "β̌")] {
                match k {
                    0 => {}
                    1 => s.push_str(&format!("-{name}")),
                    _ => s.push_str(&format!("-{k}{name}")),
                }
            }
            f.write_str(&s)
        }
    }
}

/// Result of checking one table row over a box.
#[derive(Clone, Debug, Serialize)]
pub struct RowCheck {
    pub row: usize,
    pub conditions: String,
    pub lhs: String,
    pub rhs: String,
    pub points: usize,
    pub mismatches: Vec<Coweight>,
}

/// Checks every row of the braid table for a rank-two type over `[−r, r]²`.
pub fn check_table(rs: &RootSystem, radius: i64) -> Result<Vec<RowCheck>> {
    let (alpha, beta) = simple_pair(rs)?;
    let (pattern, ..) = classify_pair(rs, &alpha, &beta)?;
    let table = table_for(pattern)
        .ok_or_else(|| Error::arg(format!("no braid table for {pattern} pattern")))?;
    let lambdas = coweight_box(2, radius);
    let mut out = Vec::new();
    for (i, row) in table.iter().enumerate() {
        let mut check = RowCheck {
            row: i + 1,
            conditions: format!("{}, {}", row.conditions[0], row.conditions[1]),
            lhs: row.lhs.to_string(),
            rhs: row.rhs.map_or_else(String::new, |s| s.to_string()),
            points: 0,
            mismatches: Vec::new(),
        };
        for lambda in lambdas.iter().filter(|l| row.applies(l, &alpha, &beta)) {
            let rep = braid_check(rs, lambda, &alpha, &beta)?;
            check.points += 1;
            if row.predict(rs, &rep) != (rep.lhs.clone(), rep.rhs.clone()) {
                check.mismatches.push(lambda.clone());
            }
        }
        out.push(check);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psi::psi_infinity;

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_type_str(t).unwrap()
    }

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    #[test]
    fn r_op_examples() {
        let a2 = rs("A2");
        let lambda = a2.simple_coroot(0).scale(-3);
        assert_eq!(r_op(&a2, &cw(&[2, -4]), &Root(vec![1, 2])).is_err(), true);
        assert_eq!(
            r_op(&a2, &cw(&[1, -1]), &Root(vec![1, 1])).unwrap(),
            cw(&[1, -1])
        );
        assert_eq!(
            r_op(&a2, &lambda, &Root(vec![1, 0])).unwrap(),
            a2.simple_coroot(0).scale(2)
        );
        let expected = a2.simple_coroot(1).scale(2).sub(&a2.simple_coroot(0));
        assert_eq!(r_op(&a2, &lambda, &Root(vec![1, 1])).unwrap(), expected);
    }

    #[test]
    fn r_closure_examples() {
        let a1 = rs("A1");
        assert_eq!(
            r_closure(&a1, &cw(&[0])).unwrap(),
            BTreeSet::from([cw(&[0])])
        );
        assert_eq!(
            r_closure(&a1, &cw(&[-4])).unwrap(),
            BTreeSet::from([cw(&[-4]), cw(&[-2]), cw(&[0]), cw(&[2])])
        );
        let a2 = rs("A2");
        let lambda = cw(&[-6, 3]);
        assert_eq!(
            r_closure(&a2, &lambda).unwrap(),
            psi_infinity(&a2, &lambda).unwrap().members
        );
    }

    #[test]
    fn dim_examples() {
        let a2 = rs("A2");
        assert_eq!(dim_orbit(&a2, &cw(&[0, 0])).unwrap(), 0);
        assert_eq!(dim_orbit(&a2, &cw(&[-6, 3])).unwrap(), 10);
        assert_eq!(dim_orbit(&a2, &cw(&[4, -2])).unwrap(), 7);
        let a1 = rs("A1");
        let dims: Vec<usize> = [-4, -2, 0, 2]
            .iter()
            .map(|&c| dim_orbit(&a1, &cw(&[c])).unwrap())
            .collect();
        assert_eq!(dims, vec![3, 1, 0, 2]);
    }

    #[test]
    fn regularity_examples() {
        let a1 = rs("A1");
        let alpha = Root(vec![1]);
        assert!(is_alpha_regular(&a1, &cw(&[2]), &alpha).unwrap());
        assert!(!is_alpha_regular(&a1, &cw(&[0]), &alpha).unwrap());
        assert!(is_alpha_regular(&a1, &cw(&[-4]), &alpha).unwrap());
        // −α̌ + α̌ = 0 lies in every chamber
        assert!(is_alpha_regular(&a1, &cw(&[-2]), &alpha).unwrap());
        let a2 = rs("A2");
        // λ = −α̌_1: ⟨λ,α_1⟩ = −2 but λ + α̌_1 = 0 and w^λ = s_1; λ = (−1, 1) fails
        assert!(!is_alpha_regular(&a2, &cw(&[-1, 1]), &Root(vec![1, 0])).unwrap());

        assert!(is_n_regular(&a2, &cw(&[3, 5]), 3).unwrap());
        assert!(!is_n_regular(&a2, &cw(&[3, 5]), 4).unwrap());
        assert!(!is_n_regular(&a2, &cw(&[0, 5]), 1).unwrap());
        assert_eq!(a2.lacing(), 1);
    }

    #[test]
    fn boundary_examples() {
        let a2 = rs("A2");
        let a1c = a2.simple_coroot(0);
        let a2c = a2.simple_coroot(1);
        let s = a1c.add(&a2c);
        assert_eq!(
            boundary(&a2, &s).unwrap(),
            BTreeSet::from([a1c.clone(), a2c.clone()])
        );
        assert_eq!(
            boundary(&a2, &s.neg()).unwrap(),
            BTreeSet::from([cw(&[0, 0])])
        );
        assert_eq!(
            boundary(&a2, &s.scale(-2)).unwrap(),
            BTreeSet::from([
                a1c.scale(-2).sub(&a2c),
                a1c.neg().sub(&a2c.scale(2)),
                s.clone()
            ])
        );
        let lambda = a1c.scale(-3);
        let b = boundary(&a2, &lambda).unwrap();
        assert_eq!(b, BTreeSet::from([a2c.scale(2).sub(&a1c), s.scale(-3)]));
        for mu in &b {
            assert_eq!(dim_orbit(&a2, mu).unwrap(), 9);
            assert!(satisfies_cover_formula(&a2, &lambda, mu));
        }
    }

    #[test]
    fn braid_examples() {
        let a3 = rs("A3");
        // α_1 and α_3 are orthogonal
        let rep = braid_check(
            &a3,
            &cw(&[-3, 1, -2]),
            &Root(vec![1, 0, 0]),
            &Root(vec![0, 0, 1]),
        )
        .unwrap();
        assert_eq!(rep.pattern, BraidPattern::Orthogonal);
        assert!(rep.equal);

        let a2 = rs("A2");
        let (alpha, beta) = (Root(vec![1, 0]), Root(vec![0, 1]));
        // ⟨λ,α⟩ = 2, ⟨λ,α+β⟩ = −1
        let lambda = cw(&[2, -3]);
        let rep = braid_check(&a2, &lambda, &alpha, &beta).unwrap();
        let ca = a2.simple_coroot(0);
        let cb = a2.simple_coroot(1);
        assert_eq!(rep.lhs, rep.w_lambda.sub(&ca.scale(2)).sub(&cb));
        assert_eq!(rep.rhs, rep.w_lambda.sub(&ca));
        assert!(!rep.equal);
        assert_eq!(rep.critical_lines_hit, vec![(Root(vec![1, 1]), -1)]);

        let b2 = rs("B2");
        // α short is α_2, β long is α_1; ⟨λ,α+β⟩ ≥ 0, ⟨λ,β⟩ < 0
        let rep = braid_check(&b2, &cw(&[-1, 3]), &Root(vec![1, 0]), &Root(vec![0, 1])).unwrap();
        assert!(rep.swapped);
        assert_eq!(rep.root_pair, (Root(vec![0, 1]), Root(vec![1, 0])));
        assert!(rep.equal);
        assert_eq!(rep.lhs, rep.w_lambda.sub(&b2.simple_coroot(0)));

        assert!(braid_check(&a2, &lambda, &alpha, &Root(vec![1, 1])).is_err());
        assert!(braid_check(&a2, &lambda, &alpha, &alpha).is_err());
    }

    #[test]
    fn table_rows_cover_the_plane() {
        for t in ["A2", "B2"] {
            let r = rs(t);
            let (alpha, beta) = simple_pair(&r).unwrap();
            let (pattern, ..) = classify_pair(&r, &alpha, &beta).unwrap();
            let table = table_for(pattern).unwrap();
            for lambda in coweight_box(2, 8) {
                let covered = table.iter().any(|row| row.applies(&lambda, &alpha, &beta));
                // the printed B2 table has no row for ⟨λ,α+β⟩ = −1, ⟨λ,2α+β⟩ = 1
                let gap = t == "B2"
                    && lambda.dot(&alpha.add(&beta)) == -1
                    && lambda.dot(&alpha.scale(2).add(&beta)) == 1;
                assert_eq!(covered, !gap, "{t}: {lambda}");
            }
        }
    }

    #[test]
    fn corrected_b2_table_holds_on_box() {
        // Rows 6, 8 and 16 of the printed table, amended:
        // row 6 needs ⟨λ,β⟩ ≥ 2 (⟨λ,β⟩ = 1 is row 7), row 8 reads w(λ)−2α̌−β̌
        // (e.g. ⟨λ,α⟩ = −3, ⟨λ,β⟩ = 3 gives λ = (3,−3) ↦ (−1,0) by hand),
        // row 16 starts at ⟨λ,2α+β⟩ ≥ 1.
        let mut table = B2_TABLE;
        table[5].conditions[1] = cond(0, 1, Ge(2));
        table[7].lhs = Shift(2, 1);
        table[15].conditions[1] = cond(2, 1, Ge(1));
        let b2 = rs("B2");
        let (alpha, beta) = simple_pair(&b2).unwrap();
        for lambda in coweight_box(2, 10) {
            let rep = braid_check(&b2, &lambda, &alpha, &beta).unwrap();
            let rows: Vec<&TableRow> = table
                .iter()
                .filter(|row| row.applies(&lambda, &alpha, &beta))
                .collect();
            assert!(!rows.is_empty(), "{lambda}");
            for row in rows {
                assert_eq!(
                    row.predict(&b2, &rep),
                    (rep.lhs.clone(), rep.rhs.clone()),
                    "{lambda}"
                );
            }
        }
    }
}
