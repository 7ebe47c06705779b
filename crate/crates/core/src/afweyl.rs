//! The affine Weyl group `Q̌ ⋊ W` and its extension by `P̌`.
//!
//! An element `τ_λ w` acts on coweights by `μ ↦ w(μ) + λ`. Affine simple
//! reflections are indexed `0..=ℓ`, where `0` is `s_0 = τ_θ̌ s_θ` and `i ≥ 1` is
//! the finite simple reflection `s_i`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Coweight, Root, RootSystem, WeylElement};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    trans: Coweight,
    fin: WeylElement,
}

/// A real affine root `α + kδ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub classical: Root,
    pub k: i64,
}

impl AffineRoot {
    pub fn new(classical: Root, k: i64) -> Self {
        AffineRoot { classical, k }
    }

    pub fn is_positive(&self) -> bool {
        self.k > 0 || (self.k == 0 && self.classical.is_positive())
    }

    pub fn neg(&self) -> AffineRoot {
        AffineRoot::new(self.classical.neg(), -self.k)
    }

    /// The affine simple root `α_i`; `α_0 = −θ + δ`.
    pub fn simple(rs: &RootSystem, i: usize) -> AffineRoot {
        if i == 0 {
            AffineRoot::new(rs.highest_root().neg(), 1)
        } else {
            AffineRoot::new(rs.simple_root(i - 1), 0)
        }
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}δ", self.classical, self.k)
    }
}

#[derive(Serialize)]
struct AffineJson {
    trans: Vec<i64>,
    word: Vec<usize>,
}

impl AffineWeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        AffineWeylElement {
            trans: Coweight::zero(rs.rank()),
            fin: rs.identity(),
        }
    }

    /// `τ_λ w` for any coweight `λ`; see [`Self::is_extended`].
    pub fn new(rs: &RootSystem, trans: Coweight, fin: WeylElement) -> Result<Self> {
        rs.check_rank(trans.rank())?;
        rs.check_rank(fin.rank())?;
        Ok(AffineWeylElement { trans, fin })
    }

    /// `τ_λ w`, rejecting translations outside the coroot lattice.
    pub fn new_affine(rs: &RootSystem, trans: Coweight, fin: WeylElement) -> Result<Self> {
        let x = Self::new(rs, trans, fin)?;
        if x.is_extended(rs) {
            return Err(Error::arg(format!(
                "translation {} is not in the coroot lattice",
                x.trans
            )));
        }
        Ok(x)
    }

    pub fn translation(rs: &RootSystem, lambda: &Coweight) -> Result<Self> {
        Self::new(rs, lambda.clone(), rs.identity())
    }

    pub fn finite(rs: &RootSystem, w: &WeylElement) -> Self {
        AffineWeylElement {
            trans: Coweight::zero(rs.rank()),
            fin: w.clone(),
        }
    }

    /// Affine simple reflection `s_i`, `i ∈ 0..=ℓ`.
    pub fn simple(rs: &RootSystem, i: usize) -> Result<Self> {
        if i > rs.rank() {
            return Err(Error::arg(format!("affine simple index {i} out of range")));
        }
        Ok(if i == 0 {
            AffineWeylElement {
                trans: rs.highest_coroot().clone(),
                fin: rs.reflection_by_index(rs.num_positive_roots() - 1),
            }
        } else {
            Self::finite(rs, rs.simple_reflection(i - 1))
        })
    }

    /// `s_{α,k} = τ_{−kα̌} s_α` for a positive root `α`.
    pub fn reflection(rs: &RootSystem, alpha: &Root, k: i64) -> Result<Self> {
        let idx = rs.check_positive_root(alpha)?;
        Ok(AffineWeylElement {
            trans: rs.coroot_by_index(idx).scale(-k),
            fin: rs.reflection_by_index(idx),
        })
    }

    /// Reflection in an arbitrary real affine root; `s_r = s_{−r}`.
    pub fn reflection_of_root(rs: &RootSystem, r: &AffineRoot) -> Result<Self> {
        if r.classical.is_positive() {
            Self::reflection(rs, &r.classical, r.k)
        } else {
            Self::reflection(rs, &r.classical.neg(), -r.k)
        }
    }

    /// Element with reduced word `s_{i_1} ⋯ s_{i_k}` (affine indices).
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut x = Self::identity(rs);
        for &i in word {
            x = x.multiply(&Self::simple(rs, i)?);
        }
        Ok(x)
    }

    pub fn trans(&self) -> &Coweight {
        &self.trans
    }

    pub fn fin(&self) -> &WeylElement {
        &self.fin
    }

    /// True when the translation part lies outside `Q̌`, i.e. the element
    /// belongs to the extended affine Weyl group only.
    pub fn is_extended(&self, rs: &RootSystem) -> bool {
        !rs.in_coroot_lattice(&self.trans)
    }

    pub fn is_identity(&self) -> bool {
        self.trans.is_zero() && self.fin.is_identity()
    }

    /// `τ_{λ₁} w₁ · τ_{λ₂} w₂ = τ_{λ₁ + w₁(λ₂)} w₁ w₂`
    pub fn multiply(&self, other: &AffineWeylElement) -> AffineWeylElement {
        AffineWeylElement {
            trans: self.trans.add(&self.fin.apply(&other.trans)),
            fin: self.fin.compose(&other.fin),
        }
    }

    /// `(τ_λ w)⁻¹ = τ_{−w⁻¹(λ)} w⁻¹`
    pub fn inverse(&self) -> AffineWeylElement {
        AffineWeylElement {
            trans: self.fin.apply_inverse(&self.trans).neg(),
            fin: self.fin.inverse(),
        }
    }

    /// Action on coweights: `μ ↦ w(μ) + λ`.
    pub fn apply(&self, mu: &Coweight) -> Coweight {
        self.fin.apply(mu).add(&self.trans)
    }

    /// `ℓ(τ_λ w) = Σ_{w⁻¹α>0} |⟨λ,α⟩| + Σ_{w⁻¹α<0} |⟨λ,α⟩ − 1|`
    pub fn length(&self, rs: &RootSystem) -> usize {
        let rho = self.fin.rho_image();
        rs.positive_roots()
            .iter()
            .map(|alpha| {
                let p = self.trans.dot(alpha);
                if RootSystem::inverse_keeps_positive(&rho, alpha) {
                    p.unsigned_abs()
                } else {
                    (p - 1).unsigned_abs()
                }
            })
            .sum::<u64>() as usize
    }

    /// `τ_λ w(α + kδ) = w(α) + (k − ⟨λ, w(α)⟩)δ`
    pub fn act_on_affine_root(&self, r: &AffineRoot) -> AffineRoot {
        let wa = self.fin.act_root(&r.classical);
        let k = r.k - self.trans.dot(&wa);
        AffineRoot::new(wa, k)
    }

    /// Left descents: affine simple `i` with `ℓ(s_i x) < ℓ(x)`.
    pub fn descent_set(&self, rs: &RootSystem) -> BTreeSet<usize> {
        let l = self.length(rs);
        (0..=rs.rank())
            .filter(|&i| {
                let s = Self::simple(rs, i).expect("index in range");
                s.multiply(self).length(rs) < l
            })
            .collect()
    }

    /// Right descents: affine simple `i` with `ℓ(x s_i) < ℓ(x)`.
    pub fn right_descent_set(&self, rs: &RootSystem) -> BTreeSet<usize> {
        let l = self.length(rs);
        (0..=rs.rank())
            .filter(|&i| {
                let s = Self::simple(rs, i).expect("index in range");
                self.multiply(&s).length(rs) < l
            })
            .collect()
    }

    /// A reduced word `[i_1,…,i_k]` with `x = s_{i_1} ⋯ s_{i_k} · γ`, `ℓ(γ) = 0`,
    /// together with the length-zero remainder `γ`.
    pub fn reduced_word(&self, rs: &RootSystem) -> (Vec<usize>, AffineWeylElement) {
        let mut x = self.clone();
        let mut len = x.length(rs);
        let mut word = Vec::with_capacity(len);
        while len > 0 {
            let (i, y) = (0..=rs.rank())
                .find_map(|i| {
                    let y = Self::simple(rs, i).expect("index in range").multiply(&x);
                    (y.length(rs) < len).then_some((i, y))
                })
                .expect("an element of positive length has a left descent");
            word.push(i);
            x = y;
            len -= 1;
        }
        (word, x)
    }

    /// Minimal-length representative of the coset `x · W_J`, where `W_J` is
    /// generated by the affine simple reflections in `gens`.
    pub fn min_coset_rep_gens(&self, rs: &RootSystem, gens: &[usize]) -> Result<AffineWeylElement> {
        let simples: Vec<AffineWeylElement> = gens
            .iter()
            .map(|&i| Self::simple(rs, i))
            .collect::<Result<_>>()?;
        let mut x = self.clone();
        let mut len = x.length(rs);
        loop {
            let next = simples.iter().find_map(|s| {
                let y = x.multiply(s);
                let l = y.length(rs);
                (l < len).then_some((y, l))
            });
            match next {
                Some((y, l)) => {
                    x = y;
                    len = l;
                }
                None => return Ok(x),
            }
        }
    }

    /// Minimal representative of `x · W_κ` with `W_κ = ⟨s_i : i ≠ κ⟩`.
    pub fn min_coset_rep(&self, rs: &RootSystem, kappa: usize) -> Result<AffineWeylElement> {
        let comp = crate::components::ComponentIndex::new(rs, kappa)?;
        self.min_coset_rep_gens(rs, &comp.parabolic_generators(rs))
    }

    /// Whether `self` and `other` lie in the same coset of `W_aff` in the
    /// extended group.
    pub fn same_coset(&self, rs: &RootSystem, other: &AffineWeylElement) -> bool {
        rs.in_coroot_lattice(&self.trans.sub(&other.trans))
    }

    /// JSON shape `{"trans": [...], "word": [...]}` where `word` is a reduced
    /// word (1-based) of the finite part.
    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        serde_json::to_value(AffineJson {
            trans: self.trans.0.clone(),
            word: rs.reduced_word(&self.fin),
        })
        .expect("plain data serializes")
    }
}

type Key = (Vec<i64>, WeylElement);

fn key(x: &AffineWeylElement) -> Key {
    (x.trans.0.clone(), x.fin.clone())
}

/// Bruhat order on the (extended) affine Weyl group via the lifting property.
pub struct BruhatOracle<'a> {
    rs: &'a RootSystem,
    simples: Vec<AffineWeylElement>,
    cache: HashMap<(Key, Key), bool>,
}

impl<'a> BruhatOracle<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        let simples = (0..=rs.rank())
            .map(|i| AffineWeylElement::simple(rs, i).expect("index in range"))
            .collect();
        BruhatOracle {
            rs,
            simples,
            cache: HashMap::new(),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    /// `u ≤ v` in Bruhat order. Elements from different cosets of `W_aff` are
    /// incomparable and produce an error.
    pub fn bruhat_leq(&mut self, u: &AffineWeylElement, v: &AffineWeylElement) -> Result<bool> {
        if !u.same_coset(self.rs, v) {
            return Err(Error::CosetMismatch);
        }
        let rs = self.rs;
        let mut u = u.clone();
        let mut v = v.clone();
        let mut lu = u.length(rs);
        let mut lv = v.length(rs);
        let mut visited: Vec<(Key, Key)> = Vec::new();
        let result = loop {
            let k = (key(&u), key(&v));
            if let Some(&hit) = self.cache.get(&k) {
                break hit;
            }
            visited.push(k);
            if lu > lv {
                break false;
            }
            if lv == 0 {
                break u == v;
            }
            let (sv, su) = self
                .simples
                .iter()
                .find_map(|s| {
                    let sv = s.multiply(&v);
                    (sv.length(rs) < lv).then(|| (sv, s.multiply(&u)))
                })
                .expect("an element of positive length has a left descent");
            let lsu = su.length(rs);
            if lsu < lu {
                u = su;
                lu = lsu;
            }
            v = sv;
            lv -= 1;
        };
        for k in visited {
            self.cache.insert(k, result);
        }
        Ok(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_type_str(t).unwrap()
    }

    fn word(rs: &RootSystem, w: &[usize]) -> AffineWeylElement {
        AffineWeylElement::from_word(rs, w).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let a1 = rs("A1");
        let e = AffineWeylElement::identity(&a1);
        assert_eq!(e.multiply(&e), e);
        let s0 = AffineWeylElement::simple(&a1, 0).unwrap();
        assert!(s0.multiply(&s0).is_identity());
        let t = AffineWeylElement::translation(&a1, &a1.simple_coroot(0)).unwrap();
        let t2 = AffineWeylElement::translation(&a1, &a1.simple_coroot(0).scale(2)).unwrap();
        assert_eq!(t.multiply(&t), t2);
    }

    #[test]
    fn length_examples() {
        let a1 = rs("A1");
        assert_eq!(AffineWeylElement::identity(&a1).length(&a1), 0);
        assert_eq!(AffineWeylElement::simple(&a1, 0).unwrap().length(&a1), 1);
        let t2 = AffineWeylElement::translation(&a1, &Coweight(vec![4])).unwrap();
        assert_eq!(t2.length(&a1), 4);
        for t in ["A2", "B2", "G2", "C3"] {
            let r = rs(t);
            for i in 0..=r.rank() {
                assert_eq!(AffineWeylElement::simple(&r, i).unwrap().length(&r), 1);
            }
        }
    }

    #[test]
    fn affine_root_action_examples() {
        let a1 = rs("A1");
        let alpha = AffineRoot::new(Root(vec![1]), 0);
        assert_eq!(
            AffineWeylElement::identity(&a1).act_on_affine_root(&alpha),
            alpha
        );
        let t = AffineWeylElement::translation(&a1, &a1.simple_coroot(0)).unwrap();
        assert_eq!(
            t.act_on_affine_root(&alpha),
            AffineRoot::new(Root(vec![1]), -2)
        );
        for tp in ["A1", "A2", "B2", "G2"] {
            let r = rs(tp);
            let s0 = AffineWeylElement::simple(&r, 0).unwrap();
            let a0 = AffineRoot::simple(&r, 0);
            assert_eq!(s0.act_on_affine_root(&a0), a0.neg());
        }
    }

    #[test]
    fn reflection_examples() {
        let r = rs("B2");
        let theta = r.highest_root().clone();
        assert_eq!(
            AffineWeylElement::reflection(&r, &theta, -1).unwrap(),
            AffineWeylElement::simple(&r, 0).unwrap()
        );
        let alpha = Root(vec![0, 1]);
        assert_eq!(
            AffineWeylElement::reflection(&r, &alpha, 0).unwrap(),
            AffineWeylElement::finite(&r, r.simple_reflection(1))
        );
        for beta in r.positive_roots() {
            for k in -3..=3 {
                let s = AffineWeylElement::reflection(&r, beta, k).unwrap();
                assert!(s.multiply(&s).is_identity());
                // fixes the zero set ⟨μ, β⟩ + k = 0 pointwise
                for mu in [
                    Coweight(vec![-k * 2, 0]),
                    Coweight(vec![0, -k]),
                    Coweight(vec![-k, 0]),
                ] {
                    if mu.dot(beta) == -k {
                        assert_eq!(s.apply(&mu), mu);
                    }
                }
            }
        }
        assert!(AffineWeylElement::reflection(&r, &Root(vec![1, -1]), 0).is_err());
    }

    #[test]
    fn bruhat_examples() {
        let a1 = rs("A1");
        let mut o = BruhatOracle::new(&a1);
        let e = AffineWeylElement::identity(&a1);
        let s0 = word(&a1, &[0]);
        let s1s0 = word(&a1, &[1, 0]);
        assert!(o.bruhat_leq(&e, &s1s0).unwrap());
        assert!(o.bruhat_leq(&s1s0, &s1s0).unwrap());
        assert!(o.bruhat_leq(&s0, &s1s0).unwrap());
        assert!(!o.bruhat_leq(&s1s0, &s0).unwrap());
        assert!(!o.bruhat_leq(&word(&a1, &[1]), &word(&a1, &[0])).unwrap());
    }

    #[test]
    fn bruhat_rejects_mixed_cosets() {
        let a2 = rs("A2");
        let mut o = BruhatOracle::new(&a2);
        let g = AffineWeylElement::translation(&a2, &Coweight(vec![1, 0])).unwrap();
        assert!(g.is_extended(&a2));
        let e = AffineWeylElement::identity(&a2);
        assert_eq!(o.bruhat_leq(&e, &g), Err(Error::CosetMismatch));
    }

    #[test]
    fn min_coset_rep_examples() {
        let a2 = rs("A2");
        let e = AffineWeylElement::identity(&a2);
        assert_eq!(e.min_coset_rep(&a2, 1).unwrap(), e);
        assert_eq!(e.min_coset_rep(&a2, 0).unwrap(), e);
        // τ_{−λ} for λ dominant regular is already minimal in τ_{−λ}W
        for lambda in [
            Coweight(vec![3, 3]),
            Coweight(vec![1, 1]),
            Coweight(vec![4, 1]),
        ] {
            let x = AffineWeylElement::translation(&a2, &lambda.neg()).unwrap();
            assert_eq!(x.min_coset_rep(&a2, 0).unwrap(), x);
            for i in 1..=2 {
                let y = x.multiply(&AffineWeylElement::simple(&a2, i).unwrap());
                assert_eq!(y.length(&a2), x.length(&a2) + 1);
            }
        }
        assert!(e.min_coset_rep(&rs("G2"), 1).is_err());
    }

    #[test]
    fn descent_examples() {
        let a1 = rs("A1");
        assert!(AffineWeylElement::identity(&a1).descent_set(&a1).is_empty());
        assert_eq!(
            AffineWeylElement::simple(&a1, 0).unwrap().descent_set(&a1),
            BTreeSet::from([0])
        );
        let t = AffineWeylElement::translation(&a1, &Coweight(vec![-4])).unwrap();
        let l = t.length(&a1);
        assert_eq!(l, 4);
        for i in 0..=1 {
            let s = AffineWeylElement::simple(&a1, i).unwrap();
            let d = s.multiply(&t).length(&a1);
            assert_eq!(t.descent_set(&a1).contains(&i), d < l);
            assert_eq!(d.abs_diff(l), 1);
        }
    }

    #[test]
    fn reduced_word_round_trip() {
        for t in ["A2", "B2", "G2"] {
            let r = rs(t);
            let x = word(&r, &[0, 1, 2, 0, 1, 0, 2]);
            let (w, rest) = x.reduced_word(&r);
            assert!(rest.is_identity());
            assert_eq!(w.len(), x.length(&r));
            assert_eq!(word(&r, &w), x);
        }
    }

    #[test]
    fn json_shape() {
        let a2 = rs("A2");
        let s0 = AffineWeylElement::simple(&a2, 0).unwrap();
        let v = s0.to_json(&a2);
        assert_eq!(v["trans"], serde_json::json!([1, 1]));
        assert_eq!(v["word"].as_array().unwrap().len(), 3);
    }
}
