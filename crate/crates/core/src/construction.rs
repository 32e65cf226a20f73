//! Skew braces on `B × C` built from a brace `B` with abelian additive
//! group, a group `C`, and three actions `φ, γ : C → Aut(B,+)`,
//! `ψ : C → Aut(B,∘)`:
//!
//! ```text
//! (b,c)·(b',c') = (b + φ_c(b'), cc')
//! ((φ_cγ_c)(b), c) ∘ ((φ_c'γ_c')(b'), c') = ((φ_cc'γ_cc')(ψ_c'⁻¹(b) ∘ b'), cc')
//! ```
//!
//! The pair `(b, c)` is stored at flat index `b·|C| + c`.

use crate::brace::{SkewBrace, Validation};
use crate::error::{CompatibilityPart, Error, MapName, Result};
use crate::group::{check_cap, Group};
use crate::perm::Permutation;
use crate::search::DEFAULT_SEARCH_CAP;

/// Validated input for [`product_brace`].
#[derive(Clone, Debug)]
pub struct ConstructionData {
    b: SkewBrace,
    c: Group,
    phi: Vec<Permutation>,
    gamma: Vec<Permutation>,
    psi: Vec<Permutation>,
}

impl ConstructionData {
    /// Checks every compatibility requirement exhaustively and reports the
    /// first failure found.
    pub fn new(
        b: SkewBrace,
        c: Group,
        phi: Vec<Permutation>,
        gamma: Vec<Permutation>,
        psi: Vec<Permutation>,
    ) -> Result<Self> {
        let (nb, nc) = (b.order(), c.order());
        if let Some((x, y)) = (0..nb)
            .flat_map(|x| (0..nb).map(move |y| (x, y)))
            .find(|&(x, y)| !b.dot().commutes(x, y))
        {
            return Err(Error::AdditiveGroupNotAbelian { a: x, b: y });
        }
        for (what, maps) in [("phi", &phi), ("gamma", &gamma), ("psi", &psi)] {
            if maps.len() != nc {
                return Err(Error::SizeMismatch {
                    what,
                    expected: nc,
                    got: maps.len(),
                });
            }
            if let Some(m) = maps.iter().find(|m| m.len() != nb) {
                return Err(Error::SizeMismatch {
                    what,
                    expected: nb,
                    got: m.len(),
                });
            }
        }
        let data = ConstructionData { b, c, phi, gamma, psi };
        data.check_automorphisms()?;
        data.check_homomorphisms()?;
        data.check_lambda_compatibility()?;
        data.check_cocycle_condition()?;
        Ok(data)
    }

    fn maps(&self, which: MapName) -> &[Permutation] {
        match which {
            MapName::Phi => &self.phi,
            MapName::Gamma => &self.gamma,
            MapName::Psi => &self.psi,
        }
    }

    fn check_automorphisms(&self) -> Result<()> {
        for which in [MapName::Phi, MapName::Gamma, MapName::Psi] {
            let (group, table) = match which {
                MapName::Psi => (self.b.circ(), "circ"),
                _ => (self.b.dot(), "additive"),
            };
            if let Some(c) = self.maps(which).iter().position(|m| !group.is_automorphism(m)) {
                return Err(Error::MapNotAutomorphism { map: which, c, table });
            }
        }
        Ok(())
    }

    fn check_homomorphisms(&self) -> Result<()> {
        let nc = self.c.order();
        for which in [MapName::Phi, MapName::Gamma, MapName::Psi] {
            let maps = self.maps(which);
            for c in 0..nc {
                for c2 in 0..nc {
                    if maps[self.c.mul(c, c2)] != maps[c].compose(&maps[c2]) {
                        return Err(Error::NotHomomorphism { map: which, c, c2 });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_lambda_compatibility(&self) -> Result<()> {
        let (nb, nc) = (self.b.order(), self.c.order());
        let lambda = |x: usize| self.b.lambda(x);
        for c in 0..nc {
            let psi_inv = self.psi[c].inverse();
            for b in 0..nb {
                let lam_b = lambda(b);
                let lam_shift = lambda(psi_inv.apply(b));
                if (0..nb).any(|x| self.gamma[c].apply(lam_shift.apply(x)) != lam_b.apply(self.gamma[c].apply(x))) {
                    return Err(Error::LambdaCompatibilityViolated {
                        part: CompatibilityPart::GammaLambda,
                        b,
                        c,
                        c2: 0,
                    });
                }
            }
        }
        for c in 0..nc {
            for b in 0..nb {
                let lam_b = lambda(b);
                if (0..nb).any(|x| self.phi[c].apply(lam_b.apply(x)) != lam_b.apply(self.phi[c].apply(x))) {
                    return Err(Error::LambdaCompatibilityViolated {
                        part: CompatibilityPart::PhiLambda,
                        b,
                        c,
                        c2: 0,
                    });
                }
            }
        }
        for c in 0..nc {
            for c2 in 0..nc {
                if self.phi[c].compose(&self.gamma[c2]) != self.gamma[c2].compose(&self.phi[c]) {
                    return Err(Error::LambdaCompatibilityViolated {
                        part: CompatibilityPart::PhiGamma,
                        b: 0,
                        c,
                        c2,
                    });
                }
            }
        }
        Ok(())
    }

    /// `φ_c'(γ_cc'ψ_cc'⁻¹ − γ_c'ψ_c'⁻¹) = γ_cψ_c⁻¹ − id`, with map
    /// differences taken pointwise in `(B, +)`.
    fn check_cocycle_condition(&self) -> Result<()> {
        let (nb, nc) = (self.b.order(), self.c.order());
        let add = self.b.dot();
        let psi_inv: Vec<Permutation> = self.psi.iter().map(Permutation::inverse).collect();
        let twist = |c: usize, b: usize| self.gamma[c].apply(psi_inv[c].apply(b));
        let sub = |x: usize, y: usize| add.mul(x, add.inv(y));
        for c in 0..nc {
            for c2 in 0..nc {
                let cc2 = self.c.mul(c, c2);
                for b in 0..nb {
                    let lhs = self.phi[c2].apply(sub(twist(cc2, b), twist(c2, b)));
                    let rhs = sub(twist(c, b), b);
                    if lhs != rhs {
                        return Err(Error::CocycleConditionViolated { c, c2, b });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn b(&self) -> &SkewBrace {
        &self.b
    }

    pub fn c(&self) -> &Group {
        &self.c
    }

    pub fn phi(&self, c: usize) -> &Permutation {
        &self.phi[c]
    }

    pub fn gamma(&self, c: usize) -> &Permutation {
        &self.gamma[c]
    }

    pub fn psi(&self, c: usize) -> &Permutation {
        &self.psi[c]
    }

    pub fn phi_all(&self) -> &[Permutation] {
        &self.phi
    }

    pub fn gamma_all(&self) -> &[Permutation] {
        &self.gamma
    }

    pub fn psi_all(&self) -> &[Permutation] {
        &self.psi
    }

    /// `φ_c ∘ γ_c`.
    pub fn phi_gamma(&self, c: usize) -> Permutation {
        self.phi[c].compose(&self.gamma[c])
    }

    pub fn product_order(&self) -> usize {
        self.b.order() * self.c.order()
    }

    /// Flat index of the pair `(b, c)`.
    pub fn pair(&self, b: usize, c: usize) -> usize {
        b * self.c.order() + c
    }

    /// Inverse of [`ConstructionData::pair`].
    pub fn split(&self, x: usize) -> (usize, usize) {
        (x / self.c.order(), x % self.c.order())
    }
}

/// Row-major `·` and `∘` tables of the product, without any validation.
pub fn product_tables(
    b: &SkewBrace,
    c: &Group,
    phi: &[Permutation],
    gamma: &[Permutation],
    psi: &[Permutation],
) -> (Vec<usize>, Vec<usize>) {
    let (nb, nc) = (b.order(), c.order());
    let n = nb * nc;
    let phi_gamma: Vec<Permutation> = (0..nc).map(|k| phi[k].compose(&gamma[k])).collect();
    let phi_gamma_inv: Vec<Permutation> = phi_gamma.iter().map(Permutation::inverse).collect();
    let psi_inv: Vec<Permutation> = psi.iter().map(Permutation::inverse).collect();
    let mut dot = vec![0; n * n];
    let mut circ = vec![0; n * n];
    for x in 0..n {
        let (xb, xc) = (x / nc, x % nc);
        let xb_raw = phi_gamma_inv[xc].apply(xb);
        let shifted: Vec<usize> = (0..nc).map(|k| psi_inv[k].apply(xb_raw)).collect();
        for y in 0..n {
            let (yb, yc) = (y / nc, y % nc);
            let cc = c.mul(xc, yc);
            dot[x * n + y] = b.mul(xb, phi[xc].apply(yb)) * nc + cc;
            let yb_raw = phi_gamma_inv[yc].apply(yb);
            let prod = b.circ_mul(shifted[yc], yb_raw);
            circ[x * n + y] = phi_gamma[cc].apply(prod) * nc + cc;
        }
    }
    (dot, circ)
}

/// Builds the product from raw maps, skipping the compatibility checks but
/// validating the result over every triple. Data violating the conditions
/// typically fails here with `BraceAxiomViolated`.
pub fn product_brace_from_maps(
    b: &SkewBrace,
    c: &Group,
    phi: &[Permutation],
    gamma: &[Permutation],
    psi: &[Permutation],
) -> Result<SkewBrace> {
    let n = b.order() * c.order();
    let (dot, circ) = product_tables(b, c, phi, gamma, psi);
    SkewBrace::from_groups_with(
        Group::from_flat(n, dot)?,
        Group::from_flat(n, circ)?,
        Validation::Exhaustive,
    )
}

pub fn product_brace(data: &ConstructionData) -> Result<SkewBrace> {
    product_brace_capped(data, DEFAULT_SEARCH_CAP)
}

pub fn product_brace_capped(data: &ConstructionData, cap: usize) -> Result<SkewBrace> {
    check_cap(data.product_order(), cap)?;
    product_brace_from_maps(&data.b, &data.c, &data.phi, &data.gamma, &data.psi)
}

/// Outcome of [`check_product_structure`]; counterexamples are `(b, c)`
/// pairs or pairs of flat indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductReport {
    pub b_is_ideal: bool,
    pub c_is_sub_skew_brace: bool,
    /// First `(x, y)` where a restriction law on `B×{1}` or `{0}×C` fails.
    pub restriction: Option<(usize, usize)>,
    /// `(0,c)·(γ_c(b),1) = ((φ_cγ_c)(b),c) = ((φ_cγ_c)(b),1)·(0,c)`.
    pub dot_identity: Option<(usize, usize)>,
    /// `(0,c)∘(b,1) = ((φ_cγ_c)(b),c) = (ψ_c(b),1)∘(0,c)`.
    pub circ_identity: Option<(usize, usize)>,
    pub dot_semidirect: bool,
    pub circ_semidirect: bool,
}

impl ProductReport {
    pub fn all_pass(&self) -> bool {
        self.b_is_ideal
            && self.c_is_sub_skew_brace
            && self.restriction.is_none()
            && self.dot_identity.is_none()
            && self.circ_identity.is_none()
            && self.dot_semidirect
            && self.circ_semidirect
    }
}

/// Index set of `B × {1}` inside the product.
pub fn b_factor(data: &ConstructionData) -> Vec<usize> {
    (0..data.b.order()).map(|b| data.pair(b, 0)).collect()
}

/// Index set of `{0} × C` inside the product.
pub fn c_factor(data: &ConstructionData) -> Vec<usize> {
    (0..data.c.order()).map(|c| data.pair(0, c)).collect()
}

pub fn check_product_structure(data: &ConstructionData, a: &SkewBrace) -> ProductReport {
    let (nb, nc) = (data.b.order(), data.c.order());
    let p = |b, c| data.pair(b, c);

    let mut restriction = None;
    'outer: for x in 0..nb {
        for y in 0..nb {
            if a.mul(p(x, 0), p(y, 0)) != p(data.b.mul(x, y), 0)
                || a.circ_mul(p(x, 0), p(y, 0)) != p(data.b.circ_mul(x, y), 0)
            {
                restriction = Some((p(x, 0), p(y, 0)));
                break 'outer;
            }
        }
    }
    if restriction.is_none() {
        'outer2: for x in 0..nc {
            for y in 0..nc {
                let want = p(0, data.c.mul(x, y));
                if a.mul(p(0, x), p(0, y)) != want || a.circ_mul(p(0, x), p(0, y)) != want {
                    restriction = Some((p(0, x), p(0, y)));
                    break 'outer2;
                }
            }
        }
    }

    let mut dot_identity = None;
    let mut circ_identity = None;
    for c in 0..nc {
        let pg = data.phi_gamma(c);
        for b in 0..nb {
            let target = p(pg.apply(b), c);
            if dot_identity.is_none()
                && (a.mul(p(0, c), p(data.gamma[c].apply(b), 0)) != target
                    || a.mul(p(pg.apply(b), 0), p(0, c)) != target)
            {
                dot_identity = Some((b, c));
            }
            if circ_identity.is_none()
                && (a.circ_mul(p(0, c), p(b, 0)) != target || a.circ_mul(p(data.psi[c].apply(b), 0), p(0, c)) != target)
            {
                circ_identity = Some((b, c));
            }
        }
    }

    let decomposes = |op: &dyn Fn(usize, usize) -> usize| {
        let mut hit = vec![false; nb * nc];
        for b in 0..nb {
            for c in 0..nc {
                let x = op(p(b, 0), p(0, c));
                if std::mem::replace(&mut hit[x], true) {
                    return false;
                }
            }
        }
        true
    };
    let b_class = a.classify_subset(&b_factor(data));
    let c_class = a.classify_subset(&c_factor(data));
    ProductReport {
        b_is_ideal: b_class.ideal,
        c_is_sub_skew_brace: c_class.sub_skew_brace,
        restriction,
        dot_identity,
        circ_identity,
        dot_semidirect: b_class.ideal && decomposes(&|x, y| a.mul(x, y)),
        circ_semidirect: b_class.ideal && decomposes(&|x, y| a.circ_mul(x, y)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    fn identity_maps(nb: usize, nc: usize) -> Vec<Permutation> {
        vec![Permutation::identity(nb); nc]
    }

    #[test]
    fn identity_maps_give_direct_product() {
        let b = SkewBrace::trivial(&groups::cyclic(3));
        let c = groups::cyclic(2);
        let data = ConstructionData::new(
            b.clone(),
            c.clone(),
            identity_maps(3, 2),
            identity_maps(3, 2),
            identity_maps(3, 2),
        )
        .unwrap();
        let a = product_brace(&data).unwrap();
        assert_eq!(a.order(), 6);
        assert!(a.is_trivial());
        let z6 = SkewBrace::trivial(&groups::cyclic(6));
        assert!(a.brace_isomorphic(&z6).unwrap().is_some());
        assert!(check_product_structure(&data, &a).all_pass());
    }

    #[test]
    fn non_abelian_additive_group_rejected() {
        let b = SkewBrace::trivial(&groups::symmetric(3));
        let err = ConstructionData::new(
            b,
            groups::cyclic(1),
            identity_maps(6, 1),
            identity_maps(6, 1),
            identity_maps(6, 1),
        )
        .unwrap_err();
        assert!(matches!(err, Error::AdditiveGroupNotAbelian { .. }));
    }

    #[test]
    fn non_homomorphism_rejected() {
        // φ: Z/3 → Aut(Z/3) sending the generator to inversion is not a homomorphism.
        let b = SkewBrace::trivial(&groups::cyclic(3));
        let inv = Permutation::from_images(vec![0, 2, 1]).unwrap();
        let phi = vec![Permutation::identity(3), inv.clone(), inv];
        let err =
            ConstructionData::new(b, groups::cyclic(3), phi, identity_maps(3, 3), identity_maps(3, 3)).unwrap_err();
        assert_eq!(
            err,
            Error::NotHomomorphism {
                map: MapName::Phi,
                c: 1,
                c2: 1
            }
        );
    }

    #[test]
    fn inversion_twists_give_brace_on_z3_by_z2() {
        // φ = inversion, γ = ψ = id: additive group S3, multiplicative group cyclic.
        let b = SkewBrace::trivial(&groups::cyclic(3));
        let inv = Permutation::from_images(vec![0, 2, 1]).unwrap();
        let phi = vec![Permutation::identity(3), inv];
        let data = ConstructionData::new(b, groups::cyclic(2), phi, identity_maps(3, 2), identity_maps(3, 2));
        // the cocycle condition with γ = ψ = id reduces to 0 = 0.
        let data = data.unwrap();
        let a = product_brace(&data).unwrap();
        assert!(!a.dot().is_abelian());
        assert!(a.circ().isomorphic(&groups::cyclic(6)).unwrap().is_some());
        assert!(check_product_structure(&data, &a).all_pass());
    }
}
