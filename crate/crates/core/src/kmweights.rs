//! Weights `aΛ̌_0 + λ + mδ̌` of the dual affine algebra and the level-one
//! weights `ϖ(λ)`.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde_json::json;

use crate::afweyl::{AffineRoot, AffineWeylElement};
use crate::components::{all_components, component_of, ComponentIndex};
use crate::error::{Error, Result};
use crate::psi::psi_infinity;
use crate::rootsys::{Coweight, Root, RootSystem};

pub type Q = Rational64;

fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn to_rational(lambda: &Coweight) -> Vec<Q> {
    lambda.0.iter().map(|&c| q(c)).collect()
}

/// `Some(μ)` when every coordinate is an integer.
pub fn to_coweight(v: &[Q]) -> Option<Coweight> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect::<Option<Vec<_>>>()
        .map(Coweight)
}

fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `level·Λ̌_0 + classical + delta·δ̌`, with `classical` in
/// fundamental-coweight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    pub level: Q,
    pub classical: Vec<Q>,
    pub delta: Q,
}

impl AffineWeight {
    /// `Λ̌_0`
    pub fn lambda0(rank: usize) -> Self {
        AffineWeight {
            level: Q::one(),
            classical: vec![Q::zero(); rank],
            delta: Q::zero(),
        }
    }

    /// `δ̌`
    pub fn delta(rank: usize) -> Self {
        AffineWeight {
            level: Q::zero(),
            classical: vec![Q::zero(); rank],
            delta: Q::one(),
        }
    }

    /// `Λ̌_κ = Λ̌_0 + ω̌_κ`
    pub fn fundamental(comp: &ComponentIndex) -> Self {
        AffineWeight {
            level: Q::one(),
            classical: to_rational(&comp.omega),
            delta: Q::zero(),
        }
    }

    /// `Λ̌_0 + λ + mδ̌`
    pub fn level_one(lambda: &Coweight, m: Q) -> Self {
        AffineWeight {
            level: Q::one(),
            classical: to_rational(lambda),
            delta: m,
        }
    }

    pub fn add(&self, other: &AffineWeight) -> AffineWeight {
        AffineWeight {
            level: self.level + other.level,
            classical: self
                .classical
                .iter()
                .zip(&other.classical)
                .map(|(a, b)| a + b)
                .collect(),
            delta: self.delta + other.delta,
        }
    }

    pub fn scale(&self, k: Q) -> AffineWeight {
        AffineWeight {
            level: self.level * k,
            classical: self.classical.iter().map(|a| a * k).collect(),
            delta: self.delta * k,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "level": fmt_q(&self.level),
            "classical": self.classical.iter().map(fmt_q).collect::<Vec<_>>(),
            "delta": fmt_q(&self.delta),
        })
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.classical.iter().map(fmt_q).collect();
        let lead = if self.level.is_one() {
            "L0".to_string()
        } else {
            format!("{}·L0", fmt_q(&self.level))
        };
        let (sign, m) = if self.delta < Q::zero() {
            ('-', -self.delta)
        } else {
            ('+', self.delta)
        };
        write!(
            f,
            "{lead} + [{}]·X {sign} {}·delta",
            c.join(", "),
            fmt_q(&m)
        )
    }
}

/// A real root `α̌ + mδ̌` of the dual affine algebra; `coroot` is in
/// fundamental-coweight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualAffineRoot {
    pub coroot: Coweight,
    pub k_delta: Q,
}

impl DualAffineRoot {
    /// The same root as a level-zero weight.
    pub fn as_weight(&self) -> AffineWeight {
        AffineWeight {
            level: Q::zero(),
            classical: to_rational(&self.coroot),
            delta: self.k_delta,
        }
    }

    fn from_weight(h: &AffineWeight) -> Option<DualAffineRoot> {
        if !h.level.is_zero() {
            return None;
        }
        Some(DualAffineRoot {
            coroot: to_coweight(&h.classical)?,
            k_delta: h.delta,
        })
    }
}

/// `(λ | μ)`, normalized so that `(θ̌ | θ̌) = 2`; on simple coroots
/// `(α̌_i | α̌_j) = C[i][j]·r_{α_j}`.
pub fn bilinear(rs: &RootSystem, lambda: &[Q], mu: &[Q]) -> Result<Q> {
    rs.check_rank(lambda.len())?;
    rs.check_rank(mu.len())?;
    Ok(bilinear_unchecked(rs, lambda, mu))
}

fn coroot_coords_q(rs: &RootSystem, mu: &[Q]) -> Vec<Q> {
    // (Cᵀ)⁻¹ applied to rational input, by linearity over the integer version
    let n = rs.rank();
    let mut out = vec![Q::zero(); n];
    for (j, &c) in mu.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let col = rs.coroot_coords(&rs.fundamental_coweight(j));
        for i in 0..n {
            out[i] += col[i] * c;
        }
    }
    out
}

fn bilinear_unchecked(rs: &RootSystem, lambda: &[Q], mu: &[Q]) -> Q {
    let y = coroot_coords_q(rs, mu);
    y.iter()
        .zip(lambda)
        .zip(rs.root_lengths())
        .fold(Q::zero(), |acc, ((yk, ck), &rk)| acc + *yk * *ck * q(rk))
}

/// `τ_λ w(h) = h' + ⟨h,č⟩λ − ((h'|λ) + ½(λ|λ)⟨h,č⟩)δ̌` with `h' = w(h)`.
pub fn affine_act(rs: &RootSystem, x: &AffineWeylElement, h: &AffineWeight) -> AffineWeight {
    let lam = to_rational(x.trans());
    let hp = x.fin().apply_rational(&h.classical);
    let shift =
        bilinear_unchecked(rs, &hp, &lam) + bilinear_unchecked(rs, &lam, &lam) / q(2) * h.level;
    AffineWeight {
        level: h.level,
        classical: hp
            .iter()
            .zip(&lam)
            .map(|(a, l)| *a + *l * h.level)
            .collect(),
        delta: h.delta - shift,
    }
}

/// `ϖ(λ) = Λ̌_0 − λ − ½((λ|λ) − (ω̌_κ|ω̌_κ))δ̌` for `κ` the component of `λ`.
pub fn varpi(rs: &RootSystem, lambda: &Coweight) -> Result<AffineWeight> {
    let comp = component_of(rs, lambda)?;
    let l = to_rational(lambda);
    let o = to_rational(&comp.omega);
    let m = (bilinear_unchecked(rs, &l, &l) - bilinear_unchecked(rs, &o, &o)) / q(2);
    Ok(AffineWeight::level_one(&lambda.neg(), -m))
}

/// `ϖ(λ)` by its definition `τ_{−λ−ω̌_κ}(Λ̌_κ)`.
pub fn varpi_by_action(rs: &RootSystem, lambda: &Coweight) -> Result<AffineWeight> {
    let comp = component_of(rs, lambda)?;
    let t = AffineWeylElement::translation(rs, &lambda.add(&comp.omega).neg())?;
    Ok(affine_act(rs, &t, &AffineWeight::fundamental(&comp)))
}

/// `𝚙(Λ̌_0 − λ + mδ̌) = λ`
pub fn project(h: &AffineWeight) -> Result<Vec<Q>> {
    if !h.level.is_one() {
        return Err(Error::arg(format!(
            "projection needs a level-one weight, got level {}",
            fmt_q(&h.level)
        )));
    }
    Ok(h.classical.iter().map(|c| -c).collect())
}

/// `η(α + kδ) = α̌ + k·r_α·δ̌`
pub fn eta(rs: &RootSystem, r: &AffineRoot) -> Result<DualAffineRoot> {
    rs.check_rank(r.classical.0.len())?;
    if r.classical.0.iter().all(|&c| c == 0) {
        return Err(Error::arg("η is defined on real roots only"));
    }
    let coroot = rs.coroot(&r.classical)?;
    let ra = rs.r_of(&r.classical)?;
    Ok(DualAffineRoot {
        coroot,
        k_delta: q(r.k * ra),
    })
}

/// Action of `W_aff` on dual real roots, as level-zero weights.
pub fn dual_act(rs: &RootSystem, x: &AffineWeylElement, d: &DualAffineRoot) -> DualAffineRoot {
    DualAffineRoot::from_weight(&affine_act(rs, x, &d.as_weight()))
        .expect("the action preserves level zero and integrality of the coroot")
}

/// `⟨h, α_i⟩` for the dual affine simple coroots, `i = 0..=ℓ`, with
/// `α_0 = č − θ`.
pub fn simple_pairings(rs: &RootSystem, h: &AffineWeight) -> Vec<Q> {
    let theta = rs.highest_root();
    let theta_pair = h
        .classical
        .iter()
        .zip(&theta.0)
        .fold(Q::zero(), |acc, (c, &t)| acc + *c * q(t));
    std::iter::once(h.level - theta_pair)
        .chain(h.classical.iter().copied())
        .collect()
}

pub fn is_dominant(rs: &RootSystem, h: &AffineWeight) -> bool {
    simple_pairings(rs, h).iter().all(|p| *p >= Q::zero())
}

/// Indices `i ∈ Î` with `s_i(Λ̌_κ) = Λ̌_κ`.
pub fn stabilizer_generators(rs: &RootSystem, comp: &ComponentIndex) -> Vec<usize> {
    let l = AffineWeight::fundamental(comp);
    (0..=rs.rank())
        .filter(|&i| {
            let s = AffineWeylElement::simple(rs, i).expect("index in range");
            affine_act(rs, &s, &l) == l
        })
        .collect()
}

/// Whether the shifted weight `ϖ(λ) + k·η(α)` (for `⟨λ,α⟩ > 0`, `k ≤ ⟨λ,α⟩`)
/// or `ϖ(λ) + k·η(−α+δ)` (for `⟨λ,α⟩ < −1`, `k < −⟨λ,α⟩`) projects into
/// `Ψ(λ)`. `None` outside these cases.
pub fn demazure_shift_check(
    rs: &RootSystem,
    lambda: &Coweight,
    alpha: &Root,
    k: i64,
) -> Result<Option<bool>> {
    rs.check_rank(lambda.rank())?;
    rs.check_positive_root(alpha)?;
    let p = lambda.dot(alpha);
    let root = if p > 0 && (1..=p).contains(&k) {
        AffineRoot::new(alpha.clone(), 0)
    } else if p < -1 && (1..-p).contains(&k) {
        AffineRoot::new(alpha.neg(), 1)
    } else {
        return Ok(None);
    };
    let shifted = varpi(rs, lambda)?.add(&eta(rs, &root)?.as_weight().scale(q(k)));
    let mu = to_coweight(&project(&shifted)?)
        .ok_or_else(|| Error::Consistency("shifted weight has a fractional projection".into()))?;
    let co = rs.coroot(alpha)?;
    let expected = if p > 0 {
        lambda.add_scaled(&co, -k)
    } else {
        lambda.add_scaled(&co, k)
    };
    if mu != expected {
        return Err(Error::Consistency(format!(
            "shifted weight projects to {mu}, expected {expected}"
        )));
    }
    Ok(Some(psi_infinity(rs, lambda)?.contains(&mu)))
}

/// The level-one dominant weights `Λ̌_0 + λ` with `λ` in `[−r, r]^ℓ`.
pub fn level_one_dominant_in_box(rs: &RootSystem, r: i64) -> Vec<Coweight> {
    crate::rops::coweight_box(rs.rank(), r)
        .into_iter()
        .filter(|l| is_dominant(rs, &AffineWeight::level_one(l, Q::zero())))
        .collect()
}

/// `{ω̌_κ : κ ∈ M̂}`
pub fn minuscule_weights(rs: &RootSystem) -> Vec<Coweight> {
    let mut v: Vec<Coweight> = all_components(rs).into_iter().map(|c| c.omega).collect();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_type_str(t).unwrap()
    }

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    #[test]
    fn bilinear_examples() {
        let a1 = rs("A1");
        let a = to_rational(&a1.simple_coroot(0));
        assert_eq!(bilinear(&a1, &a, &a).unwrap(), q(2));
        let m2 = to_rational(&a1.simple_coroot(0).scale(-2));
        assert_eq!(bilinear(&a1, &m2, &m2).unwrap(), q(8));
        let b2 = rs("B2");
        let short = to_rational(&b2.simple_coroot(1));
        assert_eq!(bilinear(&b2, &short, &short).unwrap(), q(4));
        for t in ["A1", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"] {
            let r = rs(t);
            let th = to_rational(r.highest_coroot());
            assert_eq!(bilinear(&r, &th, &th).unwrap(), q(2), "{t}");
            for i in 0..r.rank() {
                for j in 0..r.rank() {
                    let ci = to_rational(&r.simple_coroot(i));
                    let cj = to_rational(&r.simple_coroot(j));
                    let v = bilinear(&r, &ci, &cj).unwrap();
                    assert_eq!(v, bilinear(&r, &cj, &ci).unwrap(), "{t}");
                    assert_eq!(v, q(r.cartan()[i][j] * r.root_lengths()[j]), "{t}");
                }
            }
        }
    }

    #[test]
    fn affine_act_examples() {
        let a1 = rs("A1");
        let l0 = AffineWeight::lambda0(1);
        assert_eq!(affine_act(&a1, &AffineWeylElement::identity(&a1), &l0), l0);
        let t = AffineWeylElement::translation(&a1, &a1.simple_coroot(0).scale(-2)).unwrap();
        // τ_{−2α̌}(Λ̌_0) = Λ̌_0 − 2α̌ − 4δ̌, and τ_{2α̌}(Λ̌_0) = Λ̌_0 + 2α̌ − 4δ̌
        assert_eq!(
            affine_act(&a1, &t, &l0),
            AffineWeight::level_one(&cw(&[-4]), q(-4))
        );
        assert_eq!(
            affine_act(&a1, &t.inverse(), &l0),
            AffineWeight::level_one(&cw(&[4]), q(-4))
        );
        for tp in ["A1", "A2", "B2", "G2"] {
            let r = rs(tp);
            let s0 = AffineWeylElement::simple(&r, 0).unwrap();
            let l0 = AffineWeight::lambda0(r.rank());
            assert_eq!(
                affine_act(&r, &s0, &l0),
                AffineWeight::level_one(r.highest_coroot(), q(-1)),
                "{tp}"
            );
        }
    }

    #[test]
    fn varpi_examples() {
        let a1 = rs("A1");
        assert_eq!(varpi(&a1, &cw(&[0])).unwrap(), AffineWeight::lambda0(1));
        let v = varpi(&a1, &cw(&[-4])).unwrap();
        assert_eq!(v, AffineWeight::level_one(&cw(&[4]), q(-4)));
        assert_eq!(v.to_string(), "L0 + [4]·X - 4·delta");
        for t in ["A2", "B2", "A3", "D4"] {
            let r = rs(t);
            for c in all_components(&r) {
                assert_eq!(
                    varpi(&r, &c.omega.neg()).unwrap(),
                    AffineWeight::fundamental(&c),
                    "{t}"
                );
            }
            for l in crate::rops::coweight_box(r.rank(), 2) {
                assert_eq!(
                    varpi(&r, &l).unwrap(),
                    varpi_by_action(&r, &l).unwrap(),
                    "{t} {l}"
                );
            }
        }
    }

    #[test]
    fn project_examples() {
        let a1 = rs("A1");
        assert_eq!(project(&AffineWeight::lambda0(1)).unwrap(), vec![q(0)]);
        let h = AffineWeight::level_one(&cw(&[4]), q(-4));
        assert_eq!(project(&h).unwrap(), vec![q(-4)]);
        assert!(project(&AffineWeight::delta(1)).is_err());
        for l in crate::rops::coweight_box(1, 5) {
            assert_eq!(project(&varpi(&a1, &l).unwrap()).unwrap(), to_rational(&l));
        }
    }

    #[test]
    fn eta_examples() {
        let a2 = rs("A2");
        let d = eta(&a2, &AffineRoot::new(Root(vec![1, 1]), 1)).unwrap();
        assert_eq!(d.k_delta, q(1));
        assert_eq!(d.coroot, a2.coroot(&Root(vec![1, 1])).unwrap());
        let b2 = rs("B2");
        assert_eq!(
            eta(&b2, &AffineRoot::new(Root(vec![0, 1]), 1))
                .unwrap()
                .k_delta,
            q(2)
        );
        assert_eq!(
            eta(&b2, &AffineRoot::new(Root(vec![1, 0]), 1))
                .unwrap()
                .k_delta,
            q(1)
        );
        let g2 = rs("G2");
        assert_eq!(
            eta(&g2, &AffineRoot::new(Root(vec![1, 0]), 1))
                .unwrap()
                .k_delta,
            q(3)
        );
        assert!(eta(&g2, &AffineRoot::new(Root(vec![0, 0]), 1)).is_err());
    }

    #[test]
    fn level_one_dominant_weights_are_minuscule() {
        for t in ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"] {
            let r = rs(t);
            assert_eq!(
                level_one_dominant_in_box(&r, 3),
                minuscule_weights(&r),
                "{t}"
            );
        }
    }

    #[test]
    fn stabilizer_is_parabolic() {
        for t in ["A1", "A2", "A3", "B2", "C3", "D4", "G2", "E6"] {
            let r = rs(t);
            for c in all_components(&r) {
                assert_eq!(
                    stabilizer_generators(&r, &c),
                    c.parabolic_generators(&r),
                    "{t}"
                );
            }
        }
    }

    #[test]
    fn eta_is_equivariant() {
        for t in ["A2", "B2", "G2", "C3"] {
            let r = rs(t);
            let words: [&[usize]; 4] = [&[0], &[0, 1], &[1, 0, 2, 1], &[2, 0, 1, 0, 2]];
            for w in words {
                let word: Vec<usize> = w.iter().map(|&i| i % (r.rank() + 1)).collect();
                let x = AffineWeylElement::from_word(&r, &word).unwrap();
                for b in r.positive_roots() {
                    for k in -2..=2 {
                        for root in [AffineRoot::new(b.clone(), k), AffineRoot::new(b.neg(), k)] {
                            let lhs = eta(&r, &x.act_on_affine_root(&root)).unwrap();
                            let rhs = dual_act(&r, &x, &eta(&r, &root).unwrap());
                            assert_eq!(lhs, rhs, "{t} {word:?} {root}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn demazure_shift_examples() {
        let a1 = rs("A1");
        let alpha = Root(vec![1]);
        assert_eq!(
            demazure_shift_check(&a1, &cw(&[4]), &alpha, 1).unwrap(),
            Some(true)
        );
        assert_eq!(
            demazure_shift_check(&a1, &cw(&[-4]), &alpha, 1).unwrap(),
            Some(true)
        );
        assert_eq!(
            demazure_shift_check(&a1, &cw(&[-1]), &alpha, 1).unwrap(),
            None
        );
        let a2 = rs("A2");
        assert_eq!(
            demazure_shift_check(&a2, &cw(&[-6, 3]), &Root(vec![1, 1]), 2).unwrap(),
            Some(true)
        );
    }
}
