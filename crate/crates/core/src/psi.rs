//! The closure set `Ψ(λ)` and the order `≺_I`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde_json::json;

use crate::afweyl::{AffineWeylElement, BruhatOracle};
use crate::components::component_of;
use crate::error::Result;
use crate::rootsys::{Coweight, Root, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiSet {
    pub base: Coweight,
    pub members: BTreeSet<Coweight>,
    /// First filtration step at which each member appears. Only the base is
    /// recorded for sets produced by the Bruhat oracle.
    pub generation: BTreeMap<Coweight, usize>,
}

impl PsiSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mu: &Coweight) -> bool {
        self.members.contains(mu)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let gens: serde_json::Map<String, serde_json::Value> = self
            .generation
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        json!({
            "lambda": self.base.0,
            "members": self.members.iter().map(|m| m.0.clone()).collect::<Vec<_>>(),
            "generations": gens,
        })
    }
}

/// `S(μ, α)`: `{μ − kα̌ : 0 ≤ k ≤ ⟨μ,α⟩}` when `⟨μ,α⟩ ≥ 0`, and
/// `{μ + kα̌ : 0 ≤ k < −⟨μ,α⟩}` otherwise.
pub fn step_set(rs: &RootSystem, mu: &Coweight, alpha: &Root) -> Result<BTreeSet<Coweight>> {
    rs.check_rank(mu.rank())?;
    let idx = rs.check_positive_root(alpha)?;
    Ok(step_set_by_index(rs, mu, idx).collect())
}

pub(crate) fn step_set_by_index<'a>(
    rs: &'a RootSystem,
    mu: &'a Coweight,
    idx: usize,
) -> impl Iterator<Item = Coweight> + 'a {
    let p = mu.dot(&rs.positive_roots()[idx]);
    let co = rs.coroot_by_index(idx);
    let (sign, count) = if p >= 0 { (-1, p + 1) } else { (1, -p) };
    (0..count).map(move |k| mu.add_scaled(co, sign * k))
}

/// `Ψ_∞(λ)`, the stable value of the filtration `Ψ_0 = {λ}`,
/// `Ψ_i = ⋃_{μ ∈ Ψ_{i−1}, α > 0} S(μ, α)`.
pub fn psi_infinity(rs: &RootSystem, lambda: &Coweight) -> Result<PsiSet> {
    rs.check_rank(lambda.rank())?;
    let mut generation = BTreeMap::new();
    let mut queue = VecDeque::new();
    generation.insert(lambda.clone(), 0usize);
    queue.push_back((lambda.clone(), 0usize));
    while let Some((mu, g)) = queue.pop_front() {
        for idx in 0..rs.num_positive_roots() {
            for nu in step_set_by_index(rs, &mu, idx) {
                if !generation.contains_key(&nu) {
                    generation.insert(nu.clone(), g + 1);
                    queue.push_back((nu, g + 1));
                }
            }
        }
    }
    Ok(PsiSet {
        base: lambda.clone(),
        members: generation.keys().cloned().collect(),
        generation,
    })
}

/// Decides `μ ≺_I λ` by comparing minimal coset representatives in the
/// affine Weyl group. Keeps its Bruhat cache between queries.
pub struct IwahoriOracle<'a> {
    rs: &'a RootSystem,
    bruhat: BruhatOracle<'a>,
    reps: HashMap<Coweight, (usize, AffineWeylElement)>,
}

impl<'a> IwahoriOracle<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        IwahoriOracle {
            rs,
            bruhat: BruhatOracle::new(rs),
            reps: HashMap::new(),
        }
    }

    /// Component index of `λ` and the minimal representative of
    /// `τ_{−λ−ω̌_κ} W_κ`.
    pub fn representative(&mut self, lambda: &Coweight) -> Result<(usize, AffineWeylElement)> {
        if let Some(hit) = self.reps.get(lambda) {
            return Ok(hit.clone());
        }
        let rs = self.rs;
        let comp = component_of(rs, lambda)?;
        let t = AffineWeylElement::new_affine(rs, lambda.add(&comp.omega).neg(), rs.identity())?;
        let rep = t.min_coset_rep_gens(rs, &comp.parabolic_generators(rs))?;
        let out = (comp.kappa, rep);
        self.reps.insert(lambda.clone(), out.clone());
        Ok(out)
    }

    /// `μ ≺_I λ` (reflexive). Coweights in different components are unrelated.
    pub fn leq(&mut self, mu: &Coweight, lambda: &Coweight) -> Result<bool> {
        self.rs.check_rank(mu.rank())?;
        self.rs.check_rank(lambda.rank())?;
        let (km, xm) = self.representative(mu)?;
        let (kl, xl) = self.representative(lambda)?;
        if km != kl {
            return Ok(false);
        }
        self.bruhat.bruhat_leq(&xm, &xl)
    }
}

/// `μ ≺_I λ` with a fresh oracle.
pub fn iwahori_leq(rs: &RootSystem, mu: &Coweight, lambda: &Coweight) -> Result<bool> {
    IwahoriOracle::new(rs).leq(mu, lambda)
}

/// All coweights in the component of `λ` whose dominant translate is below
/// `λ⁺` in dominance order.
pub fn dominance_candidates(rs: &RootSystem, lambda: &Coweight) -> Result<BTreeSet<Coweight>> {
    rs.check_rank(lambda.rank())?;
    let (plus, _) = rs.dominant_translate(lambda);
    let bounds: Vec<i64> = rs
        .coroot_coords(&plus)
        .iter()
        .map(|x| x.floor().to_integer())
        .collect();
    let mut out = BTreeSet::new();
    let mut n = vec![0i64; rs.rank()];
    loop {
        let mut mu = plus.clone();
        for (i, &k) in n.iter().enumerate() {
            mu = mu.add_scaled(&rs.simple_coroot(i), -k);
        }
        if mu.is_dominant() && !out.contains(&mu) {
            out.extend(rs.orbit(&mu));
        }
        // odometer over 0 ≤ n_i ≤ bounds[i]
        let mut i = 0;
        loop {
            if i == n.len() {
                return Ok(out);
            }
            if n[i] < bounds[i] {
                n[i] += 1;
                break;
            }
            n[i] = 0;
            i += 1;
        }
    }
}

/// `Ψ(λ)` computed by testing every dominance candidate against the oracle.
pub fn psi_by_oracle(rs: &RootSystem, lambda: &Coweight) -> Result<PsiSet> {
    let mut oracle = IwahoriOracle::new(rs);
    psi_by_oracle_with(&mut oracle, lambda)
}

pub fn psi_by_oracle_with(oracle: &mut IwahoriOracle<'_>, lambda: &Coweight) -> Result<PsiSet> {
    let candidates = dominance_candidates(oracle.rs, lambda)?;
    let mut members = BTreeSet::new();
    for mu in candidates {
        if oracle.leq(&mu, lambda)? {
            members.insert(mu);
        }
    }
    Ok(PsiSet {
        base: lambda.clone(),
        members,
        generation: BTreeMap::from([(lambda.clone(), 0)]),
    })
}

/// A chamber `𝔠_w` containing both coweights, if any.
pub fn common_chamber(
    rs: &RootSystem,
    mu: &Coweight,
    lambda: &Coweight,
) -> Option<crate::rootsys::WeylElement> {
    let (_, w) = rs.dominant_translate(&mu.add(lambda));
    (rs.in_chamber(mu, &w) && rs.in_chamber(lambda, &w)).then_some(w)
}

/// For `μ, λ` in a common chamber `𝔠_w`: whether `λ − μ` is a non-negative
/// sum of coroots in `w(Φ̌⁺)`. `None` when no chamber contains both.
pub fn same_chamber_leq(rs: &RootSystem, mu: &Coweight, lambda: &Coweight) -> Option<bool> {
    let w = common_chamber(rs, mu, lambda)?;
    Some(rs.positive_sum_in_chamber(&lambda.sub(mu), &w))
}
