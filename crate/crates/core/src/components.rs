//! Connected components of the affine Grassmannian, indexed by
//! `M̂ = {0} ∪ {i : a_i = 1}`.

use serde::Serialize;

use crate::afweyl::AffineWeylElement;
use crate::error::{Error, Result};
use crate::rootsys::{Coweight, RootSystem, WeylElement};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ComponentIndex {
    pub kappa: usize,
    /// `ω̌_κ`, with `ω̌_0 = 0`.
    pub omega: Coweight,
}

impl ComponentIndex {
    /// `κ` is an affine vertex index: 0, or a 1-based vertex with Kac label 1.
    pub fn new(rs: &RootSystem, kappa: usize) -> Result<Self> {
        if kappa == 0 {
            return Ok(ComponentIndex {
                kappa,
                omega: Coweight::zero(rs.rank()),
            });
        }
        if kappa > rs.rank() || rs.kac_labels()[kappa - 1] != 1 {
            return Err(Error::InvalidComponent(kappa));
        }
        Ok(ComponentIndex {
            kappa,
            omega: rs.fundamental_coweight(kappa - 1),
        })
    }

    /// `I_κ = Î ∖ {κ}`
    pub fn parabolic_generators(&self, rs: &RootSystem) -> Vec<usize> {
        (0..=rs.rank()).filter(|&i| i != self.kappa).collect()
    }

    /// Longest element `w_κ` of the finite parabolic fixing `ω̌_κ`.
    pub fn w_lower(&self, rs: &RootSystem) -> WeylElement {
        let gens: Vec<usize> = (0..rs.rank()).filter(|&j| j + 1 != self.kappa).collect();
        rs.longest_in_parabolic(&gens)
    }

    /// `w^κ = w_κ w_0`
    pub fn w_upper(&self, rs: &RootSystem) -> WeylElement {
        self.w_lower(rs).compose(&rs.longest_element())
    }

    /// The length-zero element `γ_κ = τ_{ω̌_κ} w^κ`.
    pub fn gamma(&self, rs: &RootSystem) -> AffineWeylElement {
        AffineWeylElement::new(rs, self.omega.clone(), self.w_upper(rs))
            .expect("rank is consistent")
    }

    /// `ρ̄_κ(λ) = w^κ(λ) − ω̌_κ`, mapping `Q̌` onto `Q̌ − ω̌_κ`.
    pub fn translate(&self, rs: &RootSystem, lambda: &Coweight) -> Result<Coweight> {
        rs.check_rank(lambda.rank())?;
        if !rs.in_coroot_lattice(lambda) {
            return Err(Error::arg(format!("{lambda} is not in the coroot lattice")));
        }
        Ok(self.w_upper(rs).apply(lambda).sub(&self.omega))
    }

    /// `Ad_{ω̌_κ}(s_θ) = s_0`, and conjugation by `τ_{ω̌_κ}` fixes every finite
    /// `s_i` with `i ≠ κ`.
    pub fn conjugation_check(&self, rs: &RootSystem) -> bool {
        let t = AffineWeylElement::translation(rs, &self.omega).expect("rank is consistent");
        let ad = |x: &AffineWeylElement| t.multiply(x).multiply(&t.inverse());
        let theta = rs.highest_root().clone();
        let s_theta = AffineWeylElement::reflection(rs, &theta, 0).expect("θ is a positive root");
        let s0 = AffineWeylElement::simple(rs, 0).expect("index in range");
        let theta_ok = self.kappa == 0 || ad(&s_theta) == s0;
        let fixed_ok = (1..=rs.rank()).filter(|&i| i != self.kappa).all(|i| {
            let s = AffineWeylElement::simple(rs, i).expect("index in range");
            ad(&s) == s
        });
        theta_ok && fixed_ok
    }
}

/// Every element of `M̂`, in increasing order.
pub fn all_components(rs: &RootSystem) -> Vec<ComponentIndex> {
    std::iter::once(0)
        .chain((1..=rs.rank()).filter(|&i| rs.kac_labels()[i - 1] == 1))
        .map(|k| ComponentIndex::new(rs, k).expect("label checked"))
        .collect()
}

/// The unique `κ ∈ M̂` with `λ + ω̌_κ ∈ Q̌`.
pub fn component_of(rs: &RootSystem, lambda: &Coweight) -> Result<ComponentIndex> {
    rs.check_rank(lambda.rank())?;
    all_components(rs)
        .into_iter()
        .find(|c| rs.in_coroot_lattice(&lambda.add(&c.omega)))
        .ok_or_else(|| Error::Consistency(format!("{lambda} lies in no component")))
}

pub fn is_minuscule(rs: &RootSystem, omega: &Coweight) -> bool {
    rs.positive_roots()
        .iter()
        .all(|b| matches!(omega.dot(b), 0 | 1))
}
