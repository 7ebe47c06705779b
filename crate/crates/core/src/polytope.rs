//! Moment polytopes `MP(λ) = conv Ψ(λ)` in fundamental-coweight coordinates.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;
use serde_json::json;

use crate::components::component_of;
use crate::error::{Error, Result};
use crate::psi::{psi_infinity, PsiSet};
use crate::rootsys::{Coweight, RootSystem, WeylElement};

pub const MAX_FACET_RANK: usize = 3;

/// `normal · x ≤ rhs`, with `normal` primitive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub rhs: i64,
}

impl Facet {
    pub fn contains(&self, p: &[i64]) -> bool {
        dot(&self.normal, p) <= self.rhs
    }

    pub fn is_tight(&self, p: &[i64]) -> bool {
        dot(&self.normal, p) == self.rhs
    }
}

#[derive(Clone, Debug)]
pub struct MomentPolytope {
    pub base: Coweight,
    pub points: BTreeSet<Coweight>,
    pub vertices: BTreeSet<Coweight>,
    /// Affine dimension of the hull.
    pub dim: usize,
    /// Facet inequalities, with each equation of the affine hull listed as a
    /// pair of opposite inequalities. `None` above rank 3.
    pub hull: Option<Vec<Facet>>,
}

impl MomentPolytope {
    pub fn facets(&self) -> Result<&[Facet]> {
        self.hull
            .as_deref()
            .ok_or(Error::UnsupportedRank(self.base.rank()))
    }

    /// Closed membership: boundary points count as inside.
    pub fn contains(&self, mu: &Coweight) -> Result<bool> {
        Ok(self.facets()?.iter().all(|f| f.contains(&mu.0)))
    }

    pub fn to_json(&self, gaps: Option<&[Coweight]>) -> serde_json::Value {
        let facets: Option<Vec<_>> = self.hull.as_ref().map(|h| {
            h.iter()
                .map(|f| {
                    json!({
                        "normal": f.normal,
                        "rhs": Rational64::from_integer(f.rhs).to_string(),
                    })
                })
                .collect()
        });
        let mut v = json!({
            "lambda": self.base.0,
            "dim": self.dim,
            "vertices": self.vertices.iter().map(|m| m.0.clone()).collect::<Vec<_>>(),
            "facets": facets,
        });
        if let Some(g) = gaps {
            v["gaps"] = json!(g.iter().map(|m| m.0.clone()).collect::<Vec<_>>());
        }
        v
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn primitive(v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        v
    } else {
        v.into_iter().map(|x| x / g).collect()
    }
}

/// Row-reduces `rows` over ℚ; returns the rank and a primitive integer basis
/// of the vectors orthogonal to every row.
fn nullspace(rows: &[Vec<i64>], d: usize) -> (usize, Vec<Vec<i64>>) {
    let mut m: Vec<Vec<Rational64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..d {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col];
                for j in 0..d {
                    let t = m[row][j] * f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let basis = (0..d)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational64::zero(); d];
            v[free] = Rational64::from_integer(1);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][free];
            }
            let l = v.iter().fold(1i64, |l, x| l.lcm(x.denom()));
            primitive(v.iter().map(|x| (x * l).to_integer()).collect())
        })
        .collect();
    (pivots.len(), basis)
}

fn rank_of(rows: &[Vec<i64>], d: usize) -> usize {
    nullspace(rows, d).0
}

/// Exact hull of a finite point set: affine dimension, facet inequalities
/// and vertices.
pub fn hull(points: &[Vec<i64>], d: usize) -> (usize, Vec<Facet>, Vec<usize>) {
    if points.is_empty() {
        return (0, vec![], vec![]);
    }
    // Brute force runs on the sampled vertices plus whatever lies outside
    // their hull; the hull of that set is the hull of all points.
    let sample = extreme_sample(points, d);
    let candidates: Vec<usize> = if sample.len() < points.len() {
        let sampled: Vec<Vec<i64>> = sample.iter().map(|&i| points[i].clone()).collect();
        let (_, inner) = hull_brute(&sampled, d);
        let outside = (0..points.len())
            .filter(|&i| !sample.contains(&i) && !inner.iter().all(|f| f.contains(&points[i])));
        sample.iter().copied().chain(outside).collect()
    } else {
        sample
    };
    let reduced: Vec<Vec<i64>> = candidates.iter().map(|&i| points[i].clone()).collect();
    let (k, facets) = hull_brute(&reduced, d);
    let vertices = (0..points.len())
        .filter(|&i| {
            let tight: Vec<Vec<i64>> = facets
                .iter()
                .filter(|f| f.is_tight(&points[i]))
                .map(|f| f.normal.clone())
                .collect();
            rank_of(&tight, d) == d
        })
        .collect();
    (k, facets, vertices)
}

/// Lexicographically least and greatest maximizers of `c·x` for every
/// nonzero `c ∈ [−2, 2]^d`. Each one is a vertex.
fn extreme_sample(points: &[Vec<i64>], d: usize) -> Vec<usize> {
    if points.len() <= 8 || d > MAX_FACET_RANK {
        return (0..points.len()).collect();
    }
    let mut dirs: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..d {
        dirs = dirs
            .into_iter()
            .flat_map(|v| {
                (-2..=2).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    let mut out = BTreeSet::new();
    for c in dirs.iter().filter(|c| c.iter().any(|&x| x != 0)) {
        let best = points.iter().map(|p| dot(c, p)).max().expect("nonempty");
        let top = (0..points.len()).filter(|&i| dot(c, &points[i]) == best);
        let lo = top
            .clone()
            .min_by(|&i, &j| points[i].cmp(&points[j]))
            .expect("nonempty");
        let hi = top
            .max_by(|&i, &j| points[i].cmp(&points[j]))
            .expect("nonempty");
        out.insert(lo);
        out.insert(hi);
    }
    out.into_iter().collect()
}

fn hull_brute(points: &[Vec<i64>], d: usize) -> (usize, Vec<Facet>) {
    let p0 = &points[0];
    let dirs: Vec<Vec<i64>> = points[1..].iter().map(|p| sub(p, p0)).collect();
    let (k, equations) = nullspace(&dirs, d);

    let mut facets: BTreeSet<Facet> = BTreeSet::new();
    for e in &equations {
        let b = dot(e, p0);
        facets.insert(Facet {
            normal: e.clone(),
            rhs: b,
        });
        facets.insert(Facet {
            normal: e.iter().map(|x| -x).collect(),
            rhs: -b,
        });
    }

    if k > 0 {
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            if let Some(f) = facet_through(points, &subset, &equations, d) {
                facets.insert(f);
            }
            if !next_subset(&mut subset, points.len()) {
                break;
            }
        }
    }
    (k, facets.into_iter().collect())
}

fn next_subset(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if s[i] < n - k + i {
            s[i] += 1;
            for j in i + 1..k {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The supporting hyperplane spanned by `subset` inside the affine hull, if
/// it bounds every point.
fn facet_through(
    points: &[Vec<i64>],
    subset: &[usize],
    equations: &[Vec<i64>],
    d: usize,
) -> Option<Facet> {
    let q0 = &points[subset[0]];
    let mut rows: Vec<Vec<i64>> = subset[1..].iter().map(|&i| sub(&points[i], q0)).collect();
    rows.extend(equations.iter().cloned());
    let (_, ns) = nullspace(&rows, d);
    let [n] = ns.as_slice() else {
        return None;
    };
    let b = dot(n, q0);
    let (mut above, mut below) = (false, false);
    for p in points {
        match dot(n, p).cmp(&b) {
            std::cmp::Ordering::Greater => above = true,
            std::cmp::Ordering::Less => below = true,
            std::cmp::Ordering::Equal => {}
        }
        if above && below {
            return None;
        }
    }
    Some(if above {
        Facet {
            normal: n.iter().map(|x| -x).collect(),
            rhs: -b,
        }
    } else {
        Facet {
            normal: n.clone(),
            rhs: b,
        }
    })
}

pub fn polytope_of(psi: &PsiSet) -> MomentPolytope {
    let pts: Vec<Vec<i64>> = psi.members.iter().map(|m| m.0.clone()).collect();
    let d = psi.base.rank();
    let (dim, facets, vs) = hull(&pts, d);
    MomentPolytope {
        base: psi.base.clone(),
        points: psi.members.clone(),
        vertices: vs.into_iter().map(|i| Coweight(pts[i].clone())).collect(),
        dim,
        hull: (d <= MAX_FACET_RANK).then_some(facets),
    }
}

pub fn moment_polytope(rs: &RootSystem, lambda: &Coweight) -> Result<MomentPolytope> {
    Ok(polytope_of(&psi_infinity(rs, lambda)?))
}

/// `M_y(λ)`: the members of `Ψ(λ) ∩ 𝔠_y` maximal for the same-chamber order.
pub fn chamber_maxima_of(rs: &RootSystem, psi: &PsiSet, y: &WeylElement) -> BTreeSet<Coweight> {
    let inside: Vec<&Coweight> = psi.members.iter().filter(|m| rs.in_chamber(m, y)).collect();
    inside
        .iter()
        .filter(|&&mu| {
            !inside
                .iter()
                .any(|&nu| nu != mu && rs.positive_sum_in_chamber(&nu.sub(mu), y))
        })
        .map(|&m| m.clone())
        .collect()
}

pub fn chamber_maxima(
    rs: &RootSystem,
    lambda: &Coweight,
    y: &WeylElement,
) -> Result<BTreeSet<Coweight>> {
    rs.check_rank(y.rank())?;
    Ok(chamber_maxima_of(rs, &psi_infinity(rs, lambda)?, y))
}

/// Integral points of `MP(λ)` in the component of `λ` that are not in `Ψ(λ)`.
pub fn integral_gap_scan(rs: &RootSystem, lambda: &Coweight) -> Result<Vec<Coweight>> {
    let mp = moment_polytope(rs, lambda)?;
    gaps_of(rs, &mp)
}

pub fn gaps_of(rs: &RootSystem, mp: &MomentPolytope) -> Result<Vec<Coweight>> {
    let facets = mp.facets()?;
    let kappa = component_of(rs, &mp.base)?.kappa;
    let d = mp.base.rank();
    let lo: Vec<i64> = (0..d)
        .map(|i| mp.points.iter().map(|p| p.0[i]).min().unwrap_or(0))
        .collect();
    let hi: Vec<i64> = (0..d)
        .map(|i| mp.points.iter().map(|p| p.0[i]).max().unwrap_or(0))
        .collect();
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        if facets.iter().all(|f| f.contains(&cur)) {
            let mu = Coweight(cur.clone());
            if !mp.points.contains(&mu) && component_of(rs, &mu)?.kappa == kappa {
                out.push(mu);
            }
        }
        let mut i = 0;
        loop {
            if i == d {
                out.sort();
                return Ok(out);
            }
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
            i += 1;
        }
    }
}

/// `|M_y(λ)|` for every `y ∈ W`, keyed by the reduced word of `y`.
pub fn maxima_census(rs: &RootSystem, lambda: &Coweight) -> Result<Vec<(Vec<usize>, usize)>> {
    let psi = psi_infinity(rs, lambda)?;
    let ws = rs
        .weyl_elements()
        .ok_or_else(|| Error::arg("Weyl group too large to enumerate"))?;
    Ok(ws
        .iter()
        .map(|y| (rs.reduced_word(y), chamber_maxima_of(rs, &psi, y).len()))
        .collect())
}
