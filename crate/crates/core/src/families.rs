//! Concrete skew braces: the order-12 brace on `F₂² × F₃`, the order-`p³`
//! brace on `F_p³`, their automorphism groups in closed form, and the rigid
//! products of order 24 and `2p³` built from them with `C = Z/2`.
//!
//! Element indices:
//! - `F₂² × F₃`: `(x₁, x₂, z)` at `3·(2x₁ + x₂) + z`;
//! - `F_p³`: `(x₁, x₂, x₃)` at `x₁p² + x₂p + x₃`;
//! - products: `(b, c)` at `2b + c`.

use std::fmt;

use crate::brace::{SkewBrace, Validation};
use crate::construction::{product_brace_capped, ConstructionData};
use crate::error::{Error, Result};
use crate::group::{check_cap, Group};
use crate::groups;
use crate::perm::{PermSet, Permutation};
use crate::search::DEFAULT_SEARCH_CAP;

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn modp(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// Inverse of `a` modulo the prime `p`.
fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// A square matrix over `F_p`, acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeFieldMatrix {
    p: u64,
    d: usize,
    entries: Vec<u64>,
}

impl fmt::Debug for PrimeFieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u64]> = self.entries.chunks(self.d).collect();
        write!(f, "{rows:?} mod {}", self.p)
    }
}

impl PrimeFieldMatrix {
    /// Entries may be any integers; they are reduced mod `p`.
    pub fn new(p: u64, rows: &[&[i64]]) -> Self {
        let d = rows.len();
        assert!(rows.iter().all(|r| r.len() == d), "matrix must be square");
        let entries = rows.iter().flat_map(|r| r.iter().map(|&x| modp(x, p))).collect();
        PrimeFieldMatrix { p, d, entries }
    }

    pub fn identity(p: u64, d: usize) -> Self {
        let entries = (0..d * d).map(|i| u64::from(i / d == i % d)).collect();
        PrimeFieldMatrix { p, d, entries }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.d + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.d + j] = modp(value, self.p);
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.d;
        let entries = (0..d * d)
            .map(|k| (0..d).map(|t| self.get(k / d, t) * other.get(t, k % d)).sum::<u64>() % self.p)
            .collect();
        PrimeFieldMatrix { p: self.p, d, entries }
    }

    pub fn pow(&self, e: u64) -> Self {
        (0..e).fold(Self::identity(self.p, self.d), |acc, _| acc.mul(self))
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        (0..self.d)
            .map(|i| (0..self.d).map(|j| self.get(i, j) * v[j]).sum::<u64>() % self.p)
            .collect()
    }

    /// Gauss-Jordan inverse, `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        let (p, d) = (self.p, self.d);
        let mut a = self.clone();
        let mut inv = Self::identity(p, d);
        for col in 0..d {
            let pivot = (col..d).find(|&r| a.get(r, col) != 0)?;
            for m in [&mut a, &mut inv] {
                for j in 0..d {
                    m.entries.swap(col * d + j, pivot * d + j);
                }
            }
            let s = inv_mod(a.get(col, col), p);
            for m in [&mut a, &mut inv] {
                for j in 0..d {
                    m.entries[col * d + j] = m.entries[col * d + j] * s % p;
                }
            }
            for r in (0..d).filter(|&r| r != col) {
                let f = a.get(r, col);
                for m in [&mut a, &mut inv] {
                    for j in 0..d {
                        let sub = f * m.entries[col * d + j] % p;
                        m.entries[r * d + j] = (m.entries[r * d + j] + p - sub) % p;
                    }
                }
            }
        }
        Some(inv)
    }

    /// The induced permutation of `F_p^d`, vectors indexed by base-`p`
    /// digits with the first coordinate most significant.
    pub fn to_permutation(&self) -> Permutation {
        let n = (self.p as usize).pow(self.d as u32);
        let image = (0..n)
            .map(|x| vec_index(&self.apply(&index_vec(x, self.p, self.d)), self.p))
            .collect();
        Permutation::from_images(image).expect("invertible matrix")
    }
}

fn index_vec(mut x: usize, p: u64, d: usize) -> Vec<u64> {
    let mut v = vec![0; d];
    for slot in v.iter_mut().rev() {
        *slot = (x % p as usize) as u64;
        x /= p as usize;
    }
    v
}

fn vec_index(v: &[u64], p: u64) -> usize {
    v.iter().fold(0, |acc, &c| acc * p as usize + c as usize)
}

/// Parameters `(p, ε, δ₁, δ₂, δ₃, δ₄)` of the order-`2p³` family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub p: u64,
    pub eps: i64,
    pub d1: u64,
    pub d2: u64,
    pub d3: u64,
    pub d4: u64,
}

impl FamilyParams {
    /// Requires `p` an odd prime, `ε = ±1`, `δ₂ ≢ 0` and
    /// `4(δ₃ − εδ₄) + δ₁δ₂(1 − ε) ≢ 0 (mod p)`.
    pub fn new(p: u64, eps: i64, d1: i64, d2: i64, d3: i64, d4: i64) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::PrimeRequired(p));
        }
        if eps != 1 && eps != -1 {
            return Err(Error::InvalidParameter(format!("eps must be 1 or -1, got {eps}")));
        }
        let params = FamilyParams {
            p,
            eps,
            d1: modp(d1, p),
            d2: modp(d2, p),
            d3: modp(d3, p),
            d4: modp(d4, p),
        };
        if params.d2 == 0 {
            return Err(Error::InvalidParameter(format!("d2 must be nonzero mod {p}")));
        }
        if params.constraint_value() == 0 {
            return Err(Error::ConstraintViolated { p });
        }
        Ok(params)
    }

    /// `ε = 1`, `δ = (0, 1, 1, 0)`: the constraint value is 4 for every `p`.
    pub fn default_for(p: u64) -> Result<Self> {
        Self::new(p, 1, 0, 1, 1, 0)
    }

    /// `4(δ₃ − εδ₄) + δ₁δ₂(1 − ε) mod p`.
    pub fn constraint_value(&self) -> u64 {
        let (d1, d2, d3, d4) = (self.d1 as i64, self.d2 as i64, self.d3 as i64, self.d4 as i64);
        modp(4 * (d3 - self.eps * d4) + d1 * d2 * (1 - self.eps), self.p)
    }

    fn half(&self) -> i64 {
        inv_mod(2, self.p) as i64
    }
}

const M_F2: [[u8; 2]; 2] = [[1, 1], [1, 0]];

fn mat2_mul(a: [[u8; 2]; 2], b: [[u8; 2]; 2]) -> [[u8; 2]; 2] {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % 2;
        }
    }
    c
}

fn mat2_pow(a: [[u8; 2]; 2], e: usize) -> [[u8; 2]; 2] {
    (0..e).fold([[1, 0], [0, 1]], |acc, _| mat2_mul(acc, a))
}

fn mat2_apply(a: [[u8; 2]; 2], x: [u8; 2]) -> [u8; 2] {
    [
        (a[0][0] * x[0] + a[0][1] * x[1]) % 2,
        (a[1][0] * x[0] + a[1][1] * x[1]) % 2,
    ]
}

fn f2f3_split(i: usize) -> ([u8; 2], usize) {
    let v = i / 3;
    ([(v >> 1) as u8, (v & 1) as u8], i % 3)
}

fn f2f3_index(x: [u8; 2], z: usize) -> usize {
    3 * (2 * x[0] as usize + x[1] as usize) + z % 3
}

/// The map `(x⃗, z) ↦ (Mx⃗, uz)` on `F₂² × F₃`, with `u ∈ {1, -1}`.
pub fn f2f3_map(m: [[u8; 2]; 2], u: i64) -> Permutation {
    let image = (0..12)
        .map(|i| {
            let (x, z) = f2f3_split(i);
            f2f3_index(mat2_apply(m, x), modp(u * z as i64, 3) as usize)
        })
        .collect();
    Permutation::from_images(image).expect("invertible matrix")
}

/// `F₂² × F₃` with `(x⃗, z) ∘ (y⃗, z') = (x⃗ + Mᶻy⃗, z + z')`,
/// `M = [[1,1],[1,0]]`.
pub fn f2f3_brace() -> SkewBrace {
    let dot = groups::direct_product(&groups::klein(), &groups::cyclic(3));
    let circ = (0..144)
        .map(|k| {
            let ((x, z), (y, w)) = (f2f3_split(k / 12), f2f3_split(k % 12));
            let my = mat2_apply(mat2_pow(M_F2, z), y);
            f2f3_index([(x[0] + my[0]) % 2, (x[1] + my[1]) % 2], z + w)
        })
        .collect();
    let circ = Group::from_flat(12, circ).expect("semidirect product");
    SkewBrace::from_groups_with(dot, circ, Validation::Exhaustive).expect("known brace")
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::PrimeRequired(p));
    }
    Ok(())
}

/// `F_p³` with `x⃗ ∘ y⃗ = (x₁ + y₁ + x₃y₂, x₂ + y₂, x₃ + y₃)`.
pub fn heisenberg_brace(p: u64) -> Result<SkewBrace> {
    heisenberg_brace_capped(p, DEFAULT_SEARCH_CAP)
}

pub fn heisenberg_brace_capped(p: u64, cap: usize) -> Result<SkewBrace> {
    check_odd_prime(p)?;
    let n = (p as usize).pow(3);
    check_cap(n, cap)?;
    let dot = groups::elementary_abelian(p as usize, 3);
    let circ = (0..n * n)
        .map(|k| {
            let (x, y) = (index_vec(k / n, p, 3), index_vec(k % n, p, 3));
            vec_index(
                &[(x[0] + y[0] + x[2] * y[1]) % p, (x[1] + y[1]) % p, (x[2] + y[2]) % p],
                p,
            )
        })
        .collect();
    let circ = Group::from_flat(n, circ)?;
    SkewBrace::from_groups_with(dot, circ, Validation::Exhaustive)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    F2F3,
    Heisenberg,
}

/// The automorphism group of the family's base brace, from its closed form:
/// - `F2F3`: `(M, 1)` for `M ∈ ⟨[[1,1],[1,0]]⟩` and `(M, -1)` for the other
///   `M ∈ GL₂(F₂)`;
/// - `Heisenberg`: `[[uv, s, t], [0, u, 0], [0, 0, v]]` with `u, v ≠ 0`.
///
/// `p` is ignored for `F2F3`.
pub fn closed_form_aut(which: Family, p: u64) -> Result<PermSet> {
    match which {
        Family::F2F3 => {
            let cyclic: Vec<[[u8; 2]; 2]> = (0..3).map(|e| mat2_pow(M_F2, e)).collect();
            let gl2 = (0..16u8)
                .map(|b| [[b >> 3 & 1, b >> 2 & 1], [b >> 1 & 1, b & 1]])
                .filter(|m| (m[0][0] * m[1][1] + m[0][1] * m[1][0]) % 2 == 1);
            let maps = gl2
                .map(|m| f2f3_map(m, if cyclic.contains(&m) { 1 } else { -1 }))
                .collect();
            Ok(PermSet::from_elements(maps))
        }
        Family::Heisenberg => {
            check_odd_prime(p)?;
            let q = p as i64;
            let mut maps = Vec::new();
            for u in 1..q {
                for v in 1..q {
                    for s in 0..q {
                        for t in 0..q {
                            let m = PrimeFieldMatrix::new(p, &[&[u * v, s, t], &[0, u, 0], &[0, 0, v]]);
                            maps.push(m.to_permutation());
                        }
                    }
                }
            }
            Ok(PermSet::from_elements(maps))
        }
    }
}

/// Data for `C = Z/2` acting through the order-two maps `φ₁, γ₁, ψ₁`.
pub fn z2_construction(
    b: SkewBrace,
    phi1: Permutation,
    gamma1: Permutation,
    psi1: Permutation,
) -> Result<ConstructionData> {
    let id = Permutation::identity(b.order());
    ConstructionData::new(
        b,
        groups::cyclic(2),
        vec![id.clone(), phi1],
        vec![id.clone(), gamma1],
        vec![id, psi1],
    )
}

/// `(φ₁, γ₁, ψ₁) = (id, ([[0,1],[1,0]], -1), ([[1,1],[0,1]], -1))` on
/// `F₂² × F₃`.
pub fn order24_maps() -> [Permutation; 3] {
    [
        Permutation::identity(12),
        f2f3_map([[0, 1], [1, 0]], -1),
        f2f3_map([[1, 1], [0, 1]], -1),
    ]
}

pub fn order24_construction() -> ConstructionData {
    let [phi, gamma, psi] = order24_maps();
    z2_construction(f2f3_brace(), phi, gamma, psi).expect("order-24 data satisfies the conditions")
}

/// The rigid skew brace of order 24; its `∘`-group is `S₄`.
pub fn order24_rigid_brace() -> SkewBrace {
    product_brace_capped(&order24_construction(), 24).expect("order-24 product is a brace")
}

/// The matrices `(φ₁, γ₁, ψ₁)` over `F_p` for the order-`2p³` family.
pub fn rigid_2p3_matrices(params: &FamilyParams) -> [PrimeFieldMatrix; 3] {
    let p = params.p;
    let h = params.half();
    let e = params.eps;
    let (d1, d2, d3, d4) = (params.d1 as i64, params.d2 as i64, params.d3 as i64, params.d4 as i64);
    let phi = PrimeFieldMatrix::new(p, &[&[-1, h * d1 * d2, d1], &[0, -1, 0], &[0, d2, 1]]);
    let gamma = PrimeFieldMatrix::new(
        p,
        &[&[e, d3, -h * (e + 1) * d1], &[0, -e, 0], &[0, h * (e - 1) * d2, -1]],
    );
    let psi = PrimeFieldMatrix::new(p, &[&[1, d4, -h * d1], &[0, -1, 0], &[0, 0, -1]]);
    [phi, gamma, psi]
}

pub fn rigid_2p3_construction(params: &FamilyParams) -> Result<ConstructionData> {
    rigid_2p3_construction_capped(params, DEFAULT_SEARCH_CAP)
}

pub fn rigid_2p3_construction_capped(params: &FamilyParams, cap: usize) -> Result<ConstructionData> {
    let b = heisenberg_brace_capped(params.p, cap)?;
    let [phi, gamma, psi] = rigid_2p3_matrices(params).map(|m| m.to_permutation());
    z2_construction(b, phi, gamma, psi)
}

/// The rigid skew brace of order `2p³`.
pub fn rigid_2p3_brace(params: &FamilyParams) -> Result<SkewBrace> {
    rigid_2p3_brace_capped(params, DEFAULT_SEARCH_CAP)
}

pub fn rigid_2p3_brace_capped(params: &FamilyParams, cap: usize) -> Result<SkewBrace> {
    check_cap(2 * (params.p as usize).pow(3), cap)?;
    product_brace_capped(&rigid_2p3_construction_capped(params, cap)?, cap)
}

/// Indices of `y⃗ ∈ F_p³` with `δ₂y₂ + 2y₃ = 0` and
/// `2y₁ + δ₄y₂ − ½δ₁y₃ − y₃y₂ = 0`.
pub fn order_two_set(params: &FamilyParams) -> Vec<usize> {
    let p = params.p;
    let h = params.half();
    let (d1, d2, d4) = (params.d1 as i64, params.d2 as i64, params.d4 as i64);
    (0..(p as usize).pow(3))
        .filter(|&i| {
            let y: Vec<i64> = index_vec(i, p, 3).into_iter().map(|c| c as i64).collect();
            modp(d2 * y[1] + 2 * y[2], p) == 0 && modp(2 * y[0] + d4 * y[1] - h * d1 * y[2] - y[2] * y[1], p) == 0
        })
        .collect()
}
