//! Automorphism groups of skew braces, rigidity, and explicit non-trivial
//! automorphisms for the classes of braces known to have them.

use std::fmt;

use crate::brace::SkewBrace;
use crate::construction::{b_factor, product_tables, ConstructionData};
use crate::error::{Error, Result};
use crate::group::{check_cap, Group};
use crate::perm::{PermSet, Permutation};
use crate::search::{MapSearch, DEFAULT_SEARCH_CAP};

/// `λ_{f(a)} = f λ_a f⁻¹` for every `a`. For `f ∈ Aut(A,·)` this holds
/// exactly when `f` also preserves `∘`.
pub fn conjugates_lambda(a: &SkewBrace, f: &Permutation) -> bool {
    let n = a.order();
    (0..n).all(|x| {
        let lx = a.lambda(x);
        let lfx = a.lambda(f.apply(x));
        (0..n).all(|y| lfx.apply(f.apply(y)) == f.apply(lx.apply(y)))
    })
}

/// All permutations preserving both operations.
pub fn brace_automorphisms(a: &SkewBrace) -> Result<PermSet> {
    brace_automorphisms_capped(a, DEFAULT_SEARCH_CAP)
}

pub fn brace_automorphisms_capped(a: &SkewBrace, cap: usize) -> Result<PermSet> {
    check_cap(a.order(), cap)?;
    let sig = a.signatures();
    let search = MapSearch {
        src: vec![a.dot(), a.circ()],
        dst: vec![a.dot(), a.circ()],
        src_sig: sig.clone(),
        dst_sig: sig,
    };
    Ok(PermSet::from_elements(
        search.run(false, &mut |f| conjugates_lambda(a, f)),
    ))
}

pub fn is_rigid(a: &SkewBrace) -> Result<bool> {
    Ok(brace_automorphisms(a)?.is_trivial())
}

pub fn is_rigid_capped(a: &SkewBrace, cap: usize) -> Result<bool> {
    Ok(brace_automorphisms_capped(a, cap)?.is_trivial())
}

/// Which argument produced a non-trivial automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// `λ` is trivial, so any non-trivial automorphism of `(A,·)` works.
    DotAutomorphism,
    /// Two-sided with non-abelian `(A,∘)`: `ι_a(b) = ā∘b∘a`.
    InnerIota,
    /// Bi-skew: `λ_a` for any `a` with `λ_a ≠ id`.
    LambdaBiskew,
    /// Both groups nilpotent: `λ_a` for `a` in a fixed coset of `ker λ`.
    LambdaNilpotent,
    NoneApplicable,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessKind::DotAutomorphism => "dot_automorphism",
            WitnessKind::InnerIota => "inner_iota",
            WitnessKind::LambdaBiskew => "lambda_biskew",
            WitnessKind::LambdaNilpotent => "lambda_nilpotent",
            WitnessKind::NoneApplicable => "none_applicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub kind: WitnessKind,
    /// The element inducing the map, when there is one.
    pub element: Option<usize>,
    pub map: Option<Permutation>,
}

/// Produces a verified non-identity automorphism of `a` when one of the
/// sufficient conditions applies. Cases are tried in a fixed order and ties
/// go to the smallest element index.
pub fn nontrivial_witness(a: &SkewBrace) -> Result<WitnessReport> {
    let n = a.order();
    if n <= 2 {
        return Err(Error::OrderTooSmall(n));
    }
    let (kind, element, map) = if a.is_trivial() {
        let (e, m) = dot_automorphism_witness(a.dot());
        (WitnessKind::DotAutomorphism, e, m)
    } else if a.is_two_sided() && !a.circ().is_abelian() {
        let center = a.circ().center();
        let x = (0..n).find(|x| center.binary_search(x).is_err()).expect("non-abelian");
        let xbar = a.circ_inv(x);
        let iota = (0..n).map(|b| a.circ_mul(a.circ_mul(xbar, b), x)).collect();
        (
            WitnessKind::InnerIota,
            Some(x),
            Permutation::from_images_unchecked(iota),
        )
    } else if a.is_bi_skew() {
        let x = (0..n).find(|&x| !a.lambda(x).is_identity()).expect("λ non-trivial");
        (WitnessKind::LambdaBiskew, Some(x), a.lambda(x).clone())
    } else if a.dot().is_nilpotent() && a.circ().is_nilpotent() {
        let x = nilpotent_witness_element(a)?;
        (WitnessKind::LambdaNilpotent, Some(x), a.lambda(x).clone())
    } else {
        return Ok(WitnessReport {
            kind: WitnessKind::NoneApplicable,
            element: None,
            map: None,
        });
    };
    if map.is_identity() || !a.is_automorphism(&map) {
        return Err(Error::WitnessVerificationFailed(format!(
            "{kind} map induced by {element:?} is not a non-trivial automorphism"
        )));
    }
    Ok(WitnessReport {
        kind,
        element,
        map: Some(map),
    })
}

/// A non-trivial automorphism of a group of order at least 3: conjugation
/// when non-abelian, inversion when the exponent is at least 3, otherwise a
/// swap of two basis vectors of the elementary abelian 2-group.
fn dot_automorphism_witness(g: &Group) -> (Option<usize>, Permutation) {
    let n = g.order();
    let center = g.center();
    if let Some(x) = (0..n).find(|x| center.binary_search(x).is_err()) {
        let conj = (0..n).map(|b| g.conjugate(b, x)).collect();
        return (Some(x), Permutation::from_images_unchecked(conj));
    }
    if (0..n).any(|x| g.inv(x) != x) {
        return (
            None,
            Permutation::from_images_unchecked((0..n).map(|x| g.inv(x)).collect()),
        );
    }
    // Elementary abelian 2-group: pick a basis greedily, swap its first two vectors.
    let mut basis = Vec::new();
    let mut span = vec![0];
    for x in 1..n {
        if span.binary_search(&x).is_err() {
            basis.push(x);
            span = g.generate(&basis);
        }
    }
    let (u, v) = (basis[0], basis[1]);
    let swap = |x: usize| {
        if x == u {
            v
        } else if x == v {
            u
        } else {
            x
        }
    };
    // Extend the basis swap linearly: write every element over the basis.
    let mut image = vec![0; n];
    for mask in 0u64..(1 << basis.len()) {
        let mut x = 0;
        let mut y = 0;
        for (i, &e) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                x = g.mul(x, e);
                y = g.mul(y, swap(e));
            }
        }
        image[x] = y;
    }
    (None, Permutation::from_images_unchecked(image))
}

/// An element outside `ker λ` of a Sylow component whose right `ker λ`-coset
/// is fixed by the `ρ`-action of that component.
fn nilpotent_witness_element(a: &SkewBrace) -> Result<usize> {
    let n = a.order();
    for comp in a.dot().primary_components()? {
        let mut in_comp = vec![false; n];
        comp.iter().for_each(|&x| in_comp[x] = true);
        let kernel: Vec<usize> = comp.iter().copied().filter(|&x| a.lambda(x).is_identity()).collect();
        if kernel.len() == comp.len() {
            continue;
        }
        // coset_of[x] = smallest element of ker·x
        let mut coset_of = vec![usize::MAX; n];
        for &x in &comp {
            if coset_of[x] == usize::MAX {
                let coset: Vec<usize> = kernel.iter().map(|&k| a.mul(k, x)).collect();
                let rep = *coset.iter().min().expect("nonempty");
                coset.iter().for_each(|&y| coset_of[y] = rep);
            }
        }
        let fixed = comp.iter().copied().find(|&x| {
            coset_of[x] == x && !a.lambda(x).is_identity() && comp.iter().all(|&c| coset_of[a.rho(c).apply(x)] == x)
        });
        return fixed.ok_or_else(|| Error::WitnessVerificationFailed("no non-trivial fixed coset of ker λ".into()));
    }
    Err(Error::WitnessVerificationFailed(
        "λ is trivial on every Sylow component".into(),
    ))
}

/// Why `B × {1}` is preserved by every automorphism of the product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharacteristicReason {
    /// Normal subgroup of `(A,·)` of order coprime to its index.
    DotNormalHall,
    CircNormalHall,
    /// Equals the derived subgroup of `(A,·)`.
    DotDerived,
    CircDerived,
    /// Every automorphism of `(A,·)` was enumerated and preserves it.
    DotAutomorphismsPreserve,
    CircAutomorphismsPreserve,
}

/// Result of the structured automorphism search on a product brace.
#[derive(Clone, Debug)]
pub struct StructuredAut {
    pub automorphisms: PermSet,
    pub characteristic: CharacteristicReason,
    /// `(β, [(b₀, c₀) per generator of C])` combinations that passed the
    /// necessary equalities and went on to full verification.
    pub survivors: Vec<(Permutation, Vec<(usize, usize)>)>,
}

/// Why `B × {1}` is characteristic in one of the product's groups, if it is.
pub fn characteristic_reason(data: &ConstructionData, a: &SkewBrace, cap: usize) -> Option<CharacteristicReason> {
    let bset = b_factor(data);
    let (nb, nc) = (data.b().order(), data.c().order());
    let coprime = crate::perm::gcd(nb, nc) == 1;
    if coprime && a.dot().subset_status(&bset).normal {
        return Some(CharacteristicReason::DotNormalHall);
    }
    if coprime && a.circ().subset_status(&bset).normal {
        return Some(CharacteristicReason::CircNormalHall);
    }
    if a.dot().derived_subgroup() == bset {
        return Some(CharacteristicReason::DotDerived);
    }
    if a.circ().derived_subgroup() == bset {
        return Some(CharacteristicReason::CircDerived);
    }
    let mut inside = vec![false; a.order()];
    bset.iter().for_each(|&x| inside[x] = true);
    let preserves = |auts: &PermSet| auts.iter().all(|f| bset.iter().all(|&x| inside[f.apply(x)]));
    if a.dot().automorphisms_capped(cap).is_ok_and(|s| preserves(&s)) {
        return Some(CharacteristicReason::DotAutomorphismsPreserve);
    }
    if a.circ().automorphisms_capped(cap).is_ok_and(|s| preserves(&s)) {
        return Some(CharacteristicReason::CircAutomorphismsPreserve);
    }
    None
}

/// `Aut(A)` for `A = product_brace(data)`, using that every automorphism
/// restricts to some `β ∈ Aut(B)` on `B × {1}` and is then fixed by the
/// images `f(0,c) = ((φ_c₀γ_c₀)(b₀), c₀)` of generators `c` of `C`.
///
/// Candidates are filtered by the necessary conditions
/// `βφ_c = φ_c₀β`, `βγ_c = γ_c₀λ_b₀β` and
/// `(λ_b₀β − ψ_c₀⁻¹βψ_c)(b) = (λ_w − id)(b₀)` with `w = (ψ_c₀⁻¹βψ_c)(b)`,
/// and by matching element orders; survivors are verified on both tables.
pub fn structured_aut_of_product(data: &ConstructionData, a: &SkewBrace) -> Result<StructuredAut> {
    structured_aut_of_product_capped(data, a, DEFAULT_SEARCH_CAP)
}

pub fn structured_aut_of_product_capped(data: &ConstructionData, a: &SkewBrace, cap: usize) -> Result<StructuredAut> {
    let b = data.b();
    let cg = data.c();
    let (nb, nc) = (b.order(), cg.order());
    let n = nb * nc;
    if a.order() != n {
        return Err(Error::SizeMismatch {
            what: "product order",
            expected: n,
            got: a.order(),
        });
    }
    let (dot, circ) = product_tables(b, cg, data.phi_all(), data.gamma_all(), data.psi_all());
    if a.dot().flat_table() != dot.as_slice() || a.circ().flat_table() != circ.as_slice() {
        return Err(Error::InvalidParameter(
            "brace does not match the construction data".into(),
        ));
    }
    let characteristic = characteristic_reason(data, a, cap).ok_or(Error::NotCharacteristic)?;

    let betas = crate::automorphism::brace_automorphisms_capped(b, cap)?;
    let psi_inv: Vec<Permutation> = data.psi_all().iter().map(Permutation::inverse).collect();
    let phi_gamma: Vec<Permutation> = (0..nc).map(|c| data.phi_gamma(c)).collect();
    let sub = |x: usize, y: usize| b.mul(x, b.inv(y));

    let mut c_gens = Vec::new();
    let mut span = vec![0];
    for c in 1..nc {
        if span.binary_search(&c).is_err() {
            c_gens.push(c);
            span = cg.generate(&c_gens);
        }
    }

    // Images f(0,c) must match (0,c) in both element orders.
    let pools: Vec<Vec<(usize, usize)>> = c_gens
        .iter()
        .map(|&c| {
            let src = data.pair(0, c);
            let (od, oc) = (a.dot().element_order(src), a.circ().element_order(src));
            (0..nc)
                .filter(|&c0| cg.element_order(c0) == cg.element_order(c))
                .flat_map(|c0| (0..nb).map(move |b0| (b0, c0)))
                .filter(|&(b0, c0)| {
                    let x = data.pair(phi_gamma[c0].apply(b0), c0);
                    a.dot().element_order(x) == od && a.circ().element_order(x) == oc
                })
                .collect()
        })
        .collect();

    let passes = |beta: &Permutation, c: usize, b0: usize, c0: usize| -> bool {
        let lam_b0 = b.lambda(b0);
        (0..nb).all(|x| beta.apply(data.phi(c).apply(x)) == data.phi(c0).apply(beta.apply(x)))
            && (0..nb).all(|x| beta.apply(data.gamma(c).apply(x)) == data.gamma(c0).apply(lam_b0.apply(beta.apply(x))))
            && (0..nb).all(|x| {
                let w = psi_inv[c0].apply(beta.apply(data.psi(c).apply(x)));
                sub(lam_b0.apply(beta.apply(x)), w) == sub(b.lambda(w).apply(b0), b0)
            })
    };

    let mut survivors = Vec::new();
    let mut found = Vec::new();
    for beta in betas.iter() {
        let per_gen: Vec<Vec<(usize, usize)>> = c_gens
            .iter()
            .zip(&pools)
            .map(|(&c, pool)| {
                pool.iter()
                    .copied()
                    .filter(|&(b0, c0)| passes(beta, c, b0, c0))
                    .collect()
            })
            .collect();
        for choice in itertools::Itertools::multi_cartesian_product(per_gen.into_iter().map(Vec::into_iter)) {
            survivors.push((beta.clone(), choice.clone()));
            if let Some(f) = assemble_product_map(data, a, beta, &c_gens, &choice, &phi_gamma) {
                if a.is_automorphism(&f) {
                    found.push(f);
                }
            }
        }
        if c_gens.is_empty() {
            survivors.push((beta.clone(), Vec::new()));
            if let Some(f) = assemble_product_map(data, a, beta, &c_gens, &[], &phi_gamma) {
                if a.is_automorphism(&f) {
                    found.push(f);
                }
            }
        }
    }
    Ok(StructuredAut {
        automorphisms: PermSet::from_elements(found),
        characteristic,
        survivors,
    })
}

/// `f(b,c) = (β(b),1)·F(c)` where `F : C → (A,·)` extends the chosen
/// generator images multiplicatively. `None` if `F` is inconsistent or
/// `f` is not a bijection.
fn assemble_product_map(
    data: &ConstructionData,
    a: &SkewBrace,
    beta: &Permutation,
    c_gens: &[usize],
    choice: &[(usize, usize)],
    phi_gamma: &[Permutation],
) -> Option<Permutation> {
    let (nb, nc) = (data.b().order(), data.c().order());
    let cg = data.c();
    let gen_img: Vec<usize> = choice
        .iter()
        .map(|&(b0, c0)| data.pair(phi_gamma[c0].apply(b0), c0))
        .collect();
    let mut img_c = vec![usize::MAX; nc];
    img_c[0] = 0;
    let mut queue = vec![0];
    let mut q = 0;
    while q < queue.len() {
        let x = queue[q];
        for (&g, &gi) in c_gens.iter().zip(&gen_img) {
            let y = cg.mul(x, g);
            let fy = a.mul(img_c[x], gi);
            if img_c[y] == usize::MAX {
                img_c[y] = fy;
                queue.push(y);
            } else if img_c[y] != fy {
                return None;
            }
        }
        q += 1;
    }
    let image: Vec<usize> = (0..nb * nc)
        .map(|x| {
            let (bb, c) = data.split(x);
            a.mul(data.pair(beta.apply(bb), 0), img_c[c])
        })
        .collect();
    Permutation::from_images(image).ok()
}
