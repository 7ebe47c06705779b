//! Root data for the simple types A through G.
//!
//! Coweights are stored in the fundamental-coweight basis, so coordinate `i`
//! of a coweight is its pairing with the simple root `α_i`. Roots are stored
//! in simple-root coordinates. With these conventions the pairing of a coweight
//! with a root is a plain dot product, and the Cartan matrix entry
//! `C[i][j] = ⟨α̌_i, α_j⟩` is the `j`-th coordinate of the simple coroot `α̌_i`.
//!
//! Simple reflections are numbered from 1 in words and on the command line;
//! vectors are indexed from 0.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weyl groups larger than this are never materialized as a table.
pub const WEYL_TABLE_LIMIT: usize = 1152;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n)
            | CartanType::B(n)
            | CartanType::C(n)
            | CartanType::D(n)
            | CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, CartanType::A(_) | CartanType::D(_) | CartanType::E(_))
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            CartanType::A(n) => fact(n + 1),
            CartanType::B(n) | CartanType::C(n) => (1u128 << n) * fact(n),
            CartanType::D(n) => (1u128 << (n - 1)) * fact(n),
            CartanType::E(6) => 51_840,
            CartanType::E(7) => 2_903_040,
            CartanType::E(_) => 696_729_600,
            CartanType::F4 => 1152,
            CartanType::G2 => 12,
        }
    }

    /// Cartan matrix in Bourbaki numbering, `C[i][j] = ⟨α̌_i, α_j⟩`.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self {
            CartanType::A(_) | CartanType::B(_) | CartanType::C(_) | CartanType::F4 => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1);
                }
            }
            CartanType::G2 => link(0, 1),
            CartanType::D(_) => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            CartanType::E(_) => {
                for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)] {
                    if i < n && j < n {
                        link(i, j);
                    }
                }
            }
        }
        match self {
            // α_n short
            CartanType::B(_) => c[n - 1][n - 2] = -2,
            // α_n long
            CartanType::C(_) => c[n - 2][n - 1] = -2,
            // α_3, α_4 short
            CartanType::F4 => c[2][1] = -2,
            // α_1 short
            CartanType::G2 => c[0][1] = -3,
            _ => {}
        }
        c
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (letter, n) = match *self {
            CartanType::A(n) => ('A', n),
            CartanType::B(n) => ('B', n),
            CartanType::C(n) => ('C', n),
            CartanType::D(n) => ('D', n),
            CartanType::E(n) => ('E', n),
            CartanType::F4 => ('F', 4),
            CartanType::G2 => ('G', 2),
        };
        write!(f, "{letter}{n}")
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::arg("empty Cartan type"))?
            .to_ascii_uppercase();
        let n: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::arg(format!("bad Cartan type {s:?}")))?;
        let t = match (letter, n) {
            ('A', n) if n >= 1 => CartanType::A(n),
            ('B', n) if n >= 2 => CartanType::B(n),
            ('C', n) if n >= 2 => CartanType::C(n),
            ('D', n) if n >= 4 => CartanType::D(n),
            ('E', n) if (6..=8).contains(&n) => CartanType::E(n),
            ('F', 4) => CartanType::F4,
            ('G', 2) => CartanType::G2,
            _ => return Err(Error::arg(format!("unsupported Cartan type {s:?}"))),
        };
        Ok(t)
    }
}

/// A coweight in the fundamental-coweight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// `⟨self, β⟩` without a rank check.
    pub fn dot(&self, root: &Root) -> i64 {
        debug_assert_eq!(self.0.len(), root.0.len());
        self.0.iter().zip(&root.0).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Coweight {
        Coweight(self.0.iter().map(|a| a * k).collect())
    }

    /// `self + k·other`
    pub fn add_scaled(&self, other: &Coweight, k: i64) -> Coweight {
        Coweight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Coweight {
        self.scale(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Coweight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_int_list(s).map(Coweight)
    }
}

/// Bound on accepted input coordinates; keeps every downstream product far from
/// `i64` overflow.
pub const MAX_INPUT_COORD: i64 = 1 << 20;

pub(crate) fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::arg("empty coordinate list"));
    }
    s.split(',')
        .map(|part| {
            let v: i64 = part
                .trim()
                .parse()
                .map_err(|_| Error::arg(format!("bad integer {part:?} in {s:?}")))?;
            if v.abs() > MAX_INPUT_COORD {
                return Err(Error::arg(format!("coordinate {v} out of range")));
            }
            Ok(v)
        })
        .collect()
}

/// A root (or any element of the root lattice) in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Root {
        Root(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Root {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_int_list(s).map(Root)
    }
}

/// An element of the finite Weyl group, stored as its integer matrix on
/// fundamental-coweight coordinates together with the inverse matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    mat: Vec<i64>,
    inv: Vec<i64>,
}

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

fn identity_mat(n: usize) -> Vec<i64> {
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let m = identity_mat(rank);
        WeylElement {
            rank,
            mat: m.clone(),
            inv: m,
        }
    }

    pub(crate) fn involution(rank: usize, mat: Vec<i64>) -> Self {
        WeylElement {
            rank,
            inv: mat.clone(),
            mat,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &[i64] {
        &self.mat
    }

    pub fn is_identity(&self) -> bool {
        self.mat == identity_mat(self.rank)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank;
        WeylElement {
            rank: n,
            mat: mat_mul(n, &self.mat, &other.mat),
            inv: mat_mul(n, &other.inv, &self.inv),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            rank: self.rank,
            mat: self.inv.clone(),
            inv: self.mat.clone(),
        }
    }

    fn apply_mat(n: usize, m: &[i64], v: &[i64]) -> Vec<i64> {
        (0..n)
            .map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum())
            .collect()
    }

    fn apply_mat_transposed(n: usize, m: &[i64], v: &[i64]) -> Vec<i64> {
        (0..n)
            .map(|j| (0..n).map(|i| m[i * n + j] * v[i]).sum())
            .collect()
    }

    pub fn apply(&self, lambda: &Coweight) -> Coweight {
        Coweight(Self::apply_mat(self.rank, &self.mat, &lambda.0))
    }

    pub fn apply_inverse(&self, lambda: &Coweight) -> Coweight {
        Coweight(Self::apply_mat(self.rank, &self.inv, &lambda.0))
    }

    pub fn apply_rational(&self, v: &[Rational64]) -> Vec<Rational64> {
        let n = self.rank;
        (0..n)
            .map(|i| {
                (0..n).fold(Rational64::zero(), |acc, j| {
                    acc + Rational64::from_integer(self.mat[i * n + j]) * v[j]
                })
            })
            .collect()
    }

    /// `w(β)` for `β` in simple-root coordinates.
    pub fn act_root(&self, root: &Root) -> Root {
        Root(Self::apply_mat_transposed(self.rank, &self.inv, &root.0))
    }

    /// `w⁻¹(β)` for `β` in simple-root coordinates.
    pub fn act_root_inverse(&self, root: &Root) -> Root {
        Root(Self::apply_mat_transposed(self.rank, &self.mat, &root.0))
    }

    /// Image of the regular dominant coweight `ρ̌ = (1,…,1)`; determines `w`.
    pub fn rho_image(&self) -> Coweight {
        let n = self.rank;
        Coweight(
            (0..n)
                .map(|i| self.mat[i * n..(i + 1) * n].iter().sum())
                .collect(),
        )
    }
}

/// Immutable root datum for one Cartan type.
#[derive(Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// `(α_i | α_i)` normalized so long roots have squared length 2.
    simple_norms: Vec<Rational64>,
    root_lengths: Vec<i64>,
    positive_roots: Vec<Root>,
    root_index: HashMap<Root, usize>,
    /// Coroot of each positive root in simple-coroot coordinates.
    coroots: Vec<Vec<i64>>,
    /// Coroot of each positive root as a coweight.
    coroot_coweights: Vec<Coweight>,
    /// `r_β = 2/(β|β)` for each positive root.
    root_r: Vec<i64>,
    highest_root: usize,
    kac_labels: Vec<i64>,
    two_rho: Root,
    /// `(Cᵀ)⁻¹`, converting fundamental-coweight coordinates to coroot coordinates.
    to_coroot: Vec<Vec<Rational64>>,
    simple_reflections: Vec<WeylElement>,
    weyl_table: OnceLock<Option<Vec<WeylElement>>>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let cartan = cartan_type.cartan_matrix();
        let rank = cartan.len();

        let simple_norms = simple_root_norms(&cartan);
        let root_lengths: Vec<i64> = simple_norms
            .iter()
            .map(|n| (Rational64::from_integer(2) / n).to_integer())
            .collect();

        let positive_roots = enumerate_positive_roots(&cartan);
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        let norm_of = |beta: &Root| -> Rational64 {
            let mut acc = Rational64::zero();
            for i in 0..rank {
                for j in 0..rank {
                    let ij = Rational64::from_integer(cartan[i][j]) * simple_norms[i]
                        / Rational64::from_integer(2);
                    acc += ij * Rational64::from_integer(beta.0[i] * beta.0[j]);
                }
            }
            acc
        };

        let mut coroots = Vec::with_capacity(positive_roots.len());
        let mut coroot_coweights = Vec::with_capacity(positive_roots.len());
        let mut root_r = Vec::with_capacity(positive_roots.len());
        for beta in &positive_roots {
            let nb = norm_of(beta);
            let co: Vec<i64> = (0..rank)
                .map(|j| {
                    let x = Rational64::from_integer(beta.0[j]) * simple_norms[j] / nb;
                    debug_assert!(x.is_integer());
                    x.to_integer()
                })
                .collect();
            let cw: Vec<i64> = (0..rank)
                .map(|i| (0..rank).map(|j| co[j] * cartan[j][i]).sum())
                .collect();
            root_r.push((Rational64::from_integer(2) / nb).to_integer());
            coroots.push(co);
            coroot_coweights.push(Coweight(cw));
        }

        let highest_root = positive_roots.len() - 1;
        let kac_labels = positive_roots[highest_root].0.clone();
        let two_rho = positive_roots
            .iter()
            .fold(Root(vec![0; rank]), |acc, r| acc.add(r));

        let to_coroot = rational_inverse_transpose(&cartan);

        let simple_reflections = (0..rank)
            .map(|i| {
                let mut m = identity_mat(rank);
                for j in 0..rank {
                    m[j * rank + i] -= cartan[i][j];
                }
                WeylElement::involution(rank, m)
            })
            .collect();

        RootSystem {
            cartan_type,
            rank,
            cartan,
            simple_norms,
            root_lengths,
            positive_roots,
            root_index,
            coroots,
            coroot_coweights,
            root_r,
            highest_root,
            kac_labels,
            two_rho,
            to_coroot,
            simple_reflections,
            weyl_table: OnceLock::new(),
        }
    }

    pub fn from_type_str(s: &str) -> Result<Self> {
        Ok(Self::new(s.parse()?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// `d_i = r_{α_i} ∈ {1,2,3}` for each simple root.
    pub fn root_lengths(&self) -> &[i64] {
        &self.root_lengths
    }

    pub fn simple_norms(&self) -> &[Rational64] {
        &self.simple_norms
    }

    /// Kac labels `a_1..a_ℓ` (the implicit `a_0` is 1).
    pub fn kac_labels(&self) -> &[i64] {
        &self.kac_labels
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive_roots[self.highest_root]
    }

    pub fn highest_coroot(&self) -> &Coweight {
        &self.coroot_coweights[self.highest_root]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        Root(v)
    }

    /// Fundamental coweight `ω̌_i` for a 0-based index.
    pub fn fundamental_coweight(&self, i: usize) -> Coweight {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        Coweight(v)
    }

    /// Simple coroot `α̌_i` (0-based) as a coweight: row `i` of the Cartan matrix.
    pub fn simple_coroot(&self, i: usize) -> Coweight {
        Coweight(self.cartan[i].clone())
    }

    pub fn root_position(&self, root: &Root) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    pub fn is_root(&self, root: &Root) -> bool {
        self.root_index.contains_key(root) || self.root_index.contains_key(&root.neg())
    }

    pub fn check_positive_root(&self, root: &Root) -> Result<usize> {
        self.check_rank(root.0.len())?;
        self.root_position(root)
            .ok_or_else(|| Error::NotPositiveRoot(root.0.clone()))
    }

    pub fn check_rank(&self, got: usize) -> Result<()> {
        if got == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank,
                got,
            })
        }
    }

    /// Coroot of a positive root, as a coweight.
    pub fn coroot_by_index(&self, idx: usize) -> &Coweight {
        &self.coroot_coweights[idx]
    }

    /// Coroot of any root, as a coweight.
    pub fn coroot(&self, root: &Root) -> Result<Coweight> {
        self.check_rank(root.0.len())?;
        if let Some(i) = self.root_position(root) {
            Ok(self.coroot_coweights[i].clone())
        } else if let Some(i) = self.root_position(&root.neg()) {
            Ok(self.coroot_coweights[i].neg())
        } else {
            Err(Error::arg(format!("{root} is not a root")))
        }
    }

    /// Coroot of a positive root in simple-coroot coordinates.
    pub fn coroot_coords_by_index(&self, idx: usize) -> &[i64] {
        &self.coroots[idx]
    }

    /// `r_β = 2/(β|β)` for a positive root index.
    pub fn r_of_index(&self, idx: usize) -> i64 {
        self.root_r[idx]
    }

    /// `r_β` for any root.
    pub fn r_of(&self, root: &Root) -> Result<i64> {
        self.root_position(root)
            .or_else(|| self.root_position(&root.neg()))
            .map(|i| self.root_r[i])
            .ok_or_else(|| Error::arg(format!("{root} is not a root")))
    }

    /// `r` = 1 for simply-laced types, 2 for B/C/F, 3 for G2.
    pub fn lacing(&self) -> i64 {
        *self.root_r.iter().max().unwrap_or(&1)
    }

    pub fn two_rho(&self) -> &Root {
        &self.two_rho
    }

    /// `⟨λ, β⟩`
    pub fn pair(&self, lambda: &Coweight, beta: &Root) -> Result<i64> {
        self.check_rank(lambda.rank())?;
        self.check_rank(beta.0.len())?;
        Ok(lambda.dot(beta))
    }

    /// `s_β(λ) = λ − ⟨λ,β⟩β̌`
    pub fn reflect(&self, lambda: &Coweight, beta: &Root) -> Result<Coweight> {
        self.check_rank(lambda.rank())?;
        let idx = self.check_positive_root(beta)?;
        Ok(self.reflect_by_index(lambda, idx))
    }

    pub fn reflect_by_index(&self, lambda: &Coweight, idx: usize) -> Coweight {
        let k = lambda.dot(&self.positive_roots[idx]);
        lambda.add_scaled(&self.coroot_coweights[idx], -k)
    }

    /// `2⟨λ, ρ⟩ = Σ_{β>0} ⟨λ, β⟩`
    pub fn rho_pair(&self, lambda: &Coweight) -> i64 {
        lambda.dot(&self.two_rho)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank)
    }

    /// Simple reflection `s_i` for a 0-based index.
    pub fn simple_reflection(&self, i: usize) -> &WeylElement {
        &self.simple_reflections[i]
    }

    /// Reflection `s_β` for a positive root index.
    pub fn reflection_by_index(&self, idx: usize) -> WeylElement {
        let n = self.rank;
        let beta = &self.positive_roots[idx];
        let co = &self.coroot_coweights[idx];
        let mut m = identity_mat(n);
        for j in 0..n {
            for k in 0..n {
                m[j * n + k] -= co.0[j] * beta.0[k];
            }
        }
        WeylElement::involution(n, m)
    }

    /// Product of simple reflections for a word of 1-based indices.
    pub fn weyl_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = self.identity();
        for &i in word {
            if i == 0 || i > self.rank {
                return Err(Error::arg(format!(
                    "simple reflection index {i} out of range"
                )));
            }
            w = w.compose(&self.simple_reflections[i - 1]);
        }
        Ok(w)
    }

    /// `ℓ(w)`: number of positive roots sent to negative roots.
    pub fn weyl_length(&self, w: &WeylElement) -> usize {
        let r = w.rho_image();
        self.positive_roots.iter().filter(|b| r.dot(b) < 0).count()
    }

    /// Whether `w⁻¹(β)` is a positive root, for a positive root `β`.
    pub(crate) fn inverse_keeps_positive(rho_image: &Coweight, beta: &Root) -> bool {
        rho_image.dot(beta) > 0
    }

    /// A reduced word (1-based indices) for `w`.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let (_, word) = self.dominant_walk(&w.rho_image());
        word
    }

    fn dominant_walk(&self, lambda: &Coweight) -> (Coweight, Vec<usize>) {
        let mut mu = lambda.clone();
        let mut word = Vec::new();
        while let Some(i) = mu.0.iter().position(|&c| c < 0) {
            let k = mu.0[i];
            for j in 0..self.rank {
                mu.0[j] -= k * self.cartan[i][j];
            }
            word.push(i + 1);
        }
        (mu, word)
    }

    /// `(λ⁺, w^λ)` with `λ⁺` dominant, `w^λ(λ⁺) = λ` and `w^λ` of minimal length.
    pub fn dominant_translate(&self, lambda: &Coweight) -> (Coweight, WeylElement) {
        let (plus, word) = self.dominant_walk(lambda);
        let w = word.iter().fold(self.identity(), |w, &i| {
            w.compose(&self.simple_reflections[i - 1])
        });
        (plus, w)
    }

    /// Whether `λ` lies in the chamber `𝔠_w = w(𝔠)`.
    pub fn in_chamber(&self, lambda: &Coweight, w: &WeylElement) -> bool {
        w.apply_inverse(lambda).is_dominant()
    }

    /// Coordinates of `λ` in the simple-coroot basis.
    pub fn coroot_coords(&self, lambda: &Coweight) -> Vec<Rational64> {
        self.to_coroot
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&lambda.0)
                    .fold(Rational64::zero(), |acc, (a, &c)| {
                        acc + *a * Rational64::from_integer(c)
                    })
            })
            .collect()
    }

    /// Coroot coordinates when `λ ∈ Q̌`.
    pub fn coroot_coords_integral(&self, lambda: &Coweight) -> Option<Vec<i64>> {
        self.coroot_coords(lambda)
            .into_iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    pub fn in_coroot_lattice(&self, lambda: &Coweight) -> bool {
        self.coroot_coords(lambda).iter().all(|x| x.is_integer())
    }

    /// Coweight with the given simple-coroot coordinates.
    pub fn from_coroot_coords(&self, x: &[i64]) -> Result<Coweight> {
        self.check_rank(x.len())?;
        Ok(Coweight(
            (0..self.rank)
                .map(|i| (0..self.rank).map(|j| x[j] * self.cartan[j][i]).sum())
                .collect(),
        ))
    }

    /// Coweight with rational simple-coroot coordinates, such as `"1/3,2/3"`.
    /// Fails unless the result lies in the coweight lattice.
    pub fn parse_coroot_coords(&self, s: &str) -> Result<Coweight> {
        let x = s
            .trim()
            .split(',')
            .map(|part| {
                let v: Rational64 = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::arg(format!("bad rational {part:?} in {s:?}")))?;
                if v.numer().abs() > MAX_INPUT_COORD || *v.denom() > MAX_INPUT_COORD {
                    return Err(Error::arg(format!("coordinate {v} out of range")));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        self.check_rank(x.len())?;
        let coords: Vec<Rational64> = (0..self.rank)
            .map(|i| {
                (0..self.rank).fold(Rational64::zero(), |acc, j| {
                    acc + x[j] * Rational64::from_integer(self.cartan[j][i])
                })
            })
            .collect();
        if let Some(bad) = coords.iter().find(|c| !c.is_integer()) {
            return Err(Error::arg(format!(
                "{s:?} is not a coweight: fundamental coordinate {bad} is not an integer"
            )));
        }
        Ok(Coweight(coords.iter().map(|c| c.to_integer()).collect()))
    }

    /// True iff `w⁻¹(ν)` is a non-negative integer combination of simple coroots.
    pub fn positive_sum_in_chamber(&self, nu: &Coweight, w: &WeylElement) -> bool {
        self.coroot_coords(&w.apply_inverse(nu))
            .iter()
            .all(|x| x.is_integer() && *x >= Rational64::zero())
    }

    /// Every Weyl group element, when the group has at most [`WEYL_TABLE_LIMIT`] elements.
    pub fn weyl_elements(&self) -> Option<&[WeylElement]> {
        self.weyl_table
            .get_or_init(|| {
                if self.cartan_type.weyl_order() > WEYL_TABLE_LIMIT as u128 {
                    return None;
                }
                let mut seen: HashSet<WeylElement> = HashSet::new();
                let mut order = Vec::new();
                let mut queue = VecDeque::new();
                let e = self.identity();
                seen.insert(e.clone());
                queue.push_back(e);
                while let Some(w) = queue.pop_front() {
                    for s in &self.simple_reflections {
                        let ws = w.compose(s);
                        if seen.insert(ws.clone()) {
                            queue.push_back(ws);
                        }
                    }
                    order.push(w);
                }
                Some(order)
            })
            .as_deref()
    }

    /// Longest element `w_0`.
    pub fn longest_element(&self) -> WeylElement {
        self.longest_in_parabolic(&(0..self.rank).collect::<Vec<_>>())
    }

    /// Longest element of the standard parabolic subgroup on the given 0-based
    /// generators.
    pub fn longest_in_parabolic(&self, gens: &[usize]) -> WeylElement {
        let mut w = self.identity();
        let mut len = 0;
        loop {
            let next = gens.iter().find_map(|&j| {
                let ws = w.compose(&self.simple_reflections[j]);
                let l = self.weyl_length(&ws);
                (l > len).then_some((ws, l))
            });
            match next {
                Some((ws, l)) => {
                    w = ws;
                    len = l;
                }
                None => return w,
            }
        }
    }

    /// Weyl orbit of a coweight, sorted.
    pub fn orbit(&self, lambda: &Coweight) -> Vec<Coweight> {
        let mut seen: HashSet<Coweight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
        while let Some(mu) = queue.pop_front() {
            for i in 0..self.rank {
                let c = mu.0[i];
                if c == 0 {
                    continue;
                }
                let nu = mu.add_scaled(&self.simple_coroot(i), -c);
                if seen.insert(nu.clone()) {
                    queue.push_back(nu);
                }
            }
        }
        let mut out: Vec<Coweight> = seen.into_iter().collect();
        out.sort();
        out
    }
}

fn simple_root_norms(cartan: &[Vec<i64>]) -> Vec<Rational64> {
    let n = cartan.len();
    let mut norms: Vec<Option<Rational64>> = vec![None; n];
    norms[0] = Some(Rational64::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let ni = norms[i].unwrap();
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && norms[j].is_none() {
                // C[i][j]·(α_i|α_i) = C[j][i]·(α_j|α_j)
                norms[j] = Some(ni * Rational64::new(cartan[i][j], cartan[j][i]));
                queue.push_back(j);
            }
        }
    }
    let norms: Vec<Rational64> = norms.into_iter().map(|x| x.unwrap()).collect();
    let max = *norms.iter().max().unwrap();
    norms
        .into_iter()
        .map(|x| x * Rational64::from_integer(2) / max)
        .collect()
}

fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut seen: HashSet<Root> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut v = vec![0; n];
        v[i] = 1;
        let r = Root(v);
        seen.insert(r.clone());
        queue.push_back(r);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let p: i64 = (0..n).map(|j| cartan[i][j] * beta.0[j]).sum();
            if p == 0 {
                continue;
            }
            let mut v = beta.0.clone();
            v[i] -= p;
            let r = Root(v);
            if r.is_positive() && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    roots
}

fn rational_inverse_transpose(cartan: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = cartan.len();
    // augmented [Cᵀ | I]
    let mut a: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational64> = (0..n)
                .map(|j| Rational64::from_integer(cartan[j][i]))
                .collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    Rational64::one()
                } else {
                    Rational64::zero()
                }
            }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        let p = a[col][col];
        for v in a[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Determinant of the Cartan matrix, which equals `|P̌/Q̌|`.
pub fn cartan_determinant(cartan: &[Vec<i64>]) -> i64 {
    let n = cartan.len();
    let mut a: Vec<Vec<Rational64>> = cartan
        .iter()
        .map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    let mut det = Rational64::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return 0;
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let f = a[r][col] / p;
            if f.is_zero() {
                continue;
            }
            let pivot_row = a[col].clone();
            for (x, y) in a[r].iter_mut().zip(pivot_row) {
                *x -= f * y;
            }
        }
    }
    det.to_integer()
}
