//! Skew braces on Cayley tables: axioms, the λ/ρ maps, kernels, subset
//! classification and structural predicates.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::group::{check_cap, Group};
use crate::perm::Permutation;
use crate::search::{MapSearch, DEFAULT_SEARCH_CAP};

/// Orders up to this size are validated over every triple at construction.
pub const EXHAUSTIVE_VALIDATION_LIMIT: usize = 64;

/// Number of random triples checked above [`EXHAUSTIVE_VALIDATION_LIMIT`].
pub const SAMPLED_TRIPLES: usize = 100_000;

/// How much of the brace relation to check when building a brace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validation {
    /// Exhaustive up to [`EXHAUSTIVE_VALIDATION_LIMIT`], sampled above.
    Gated,
    /// Every triple, regardless of size.
    Exhaustive,
}

/// A finite skew brace `(A, ·, ∘)` on the index set `0..n`.
///
/// Both groups share the identity 0. The maps
/// `λ_a(b) = a⁻¹·(a∘b)` and `ρ_a(b) = (a∘b)·a⁻¹` are computed once and cached.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewBrace {
    dot: Group,
    circ: Group,
    lambda: Vec<Permutation>,
    rho: Vec<Permutation>,
}

impl std::fmt::Debug for SkewBrace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SkewBrace(order {})", self.order())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetClass {
    pub sub_skew_brace: bool,
    pub left_ideal: bool,
    pub ideal: bool,
    /// For left ideals: whether `a·S = a∘S` held for every `a`.
    pub cosets_agree: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BracePredicates {
    pub two_sided: bool,
    pub bi_skew: bool,
    pub dot_nilpotent: bool,
    pub circ_nilpotent: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelInvarianceReport {
    /// `λ_a(ker ρ) = ker ρ` for all `a`.
    pub ker_rho_lambda_invariant: bool,
    /// `ρ_a(ker λ) = ker λ` for all `a`.
    pub ker_lambda_rho_invariant: bool,
    /// `ρ_a(x) = a∘x∘ā` for all `x ∈ ker λ` and all `a`.
    pub conj_formula: bool,
}

impl KernelInvarianceReport {
    pub fn all(&self) -> bool {
        self.ker_rho_lambda_invariant && self.ker_lambda_rho_invariant && self.conj_formula
    }
}

/// First counterexample, if any, to each structural identity of a brace.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvariantReport {
    pub brace_relation: Option<(usize, usize, usize)>,
    pub lambda_automorphism: Option<usize>,
    pub rho_automorphism: Option<usize>,
    /// `λ_{a∘b} = λ_a λ_b` fails at `(a, b)`.
    pub lambda_hom: Option<(usize, usize)>,
    pub rho_hom: Option<(usize, usize)>,
    /// Linking identity number (1..=6) and the pair where it fails.
    pub linking: Option<(u8, usize, usize)>,
}

impl InvariantReport {
    pub fn is_clean(&self) -> bool {
        *self == InvariantReport::default()
    }
}

impl SkewBrace {
    pub fn from_tables(dot: &[Vec<usize>], circ: &[Vec<usize>]) -> Result<Self> {
        Self::from_groups(Group::from_table(dot)?, Group::from_table(circ)?)
    }

    pub fn from_groups(dot: Group, circ: Group) -> Result<Self> {
        Self::from_groups_with(dot, circ, Validation::Gated)
    }

    pub fn from_groups_with(dot: Group, circ: Group, validation: Validation) -> Result<Self> {
        if dot.order() != circ.order() {
            return Err(Error::SizeMismatch {
                what: "circ group order",
                expected: dot.order(),
                got: circ.order(),
            });
        }
        let n = dot.order();
        let exhaustive = validation == Validation::Exhaustive || n <= EXHAUSTIVE_VALIDATION_LIMIT;
        if exhaustive {
            if let Some((a, b, c)) = first_brace_violation(&dot, &circ) {
                return Err(Error::BraceAxiomViolated { a, b, c });
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed_b4ac_e000 ^ n as u64);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !brace_relation_holds(&dot, &circ, a, b, c) {
                    return Err(Error::BraceAxiomViolated { a, b, c });
                }
            }
        }
        let brace = Self::assemble(dot, circ);
        if !exhaustive && brace.first_linking_violation().is_some() {
            brace.verify_exhaustive()?;
        }
        Ok(brace)
    }

    fn assemble(dot: Group, circ: Group) -> Self {
        let n = dot.order();
        let lambda = (0..n)
            .map(|a| {
                let ai = dot.inv(a);
                Permutation::from_images_unchecked((0..n).map(|b| dot.mul(ai, circ.mul(a, b))).collect())
            })
            .collect();
        let rho = (0..n)
            .map(|a| {
                let ai = dot.inv(a);
                Permutation::from_images_unchecked((0..n).map(|b| dot.mul(circ.mul(a, b), ai)).collect())
            })
            .collect();
        SkewBrace { dot, circ, lambda, rho }
    }

    /// The trivial brace `(G, ·, ·)`.
    pub fn trivial(g: &Group) -> Self {
        Self::assemble(g.clone(), g.clone())
    }

    pub fn order(&self) -> usize {
        self.dot.order()
    }

    pub fn dot(&self) -> &Group {
        &self.dot
    }

    pub fn circ(&self) -> &Group {
        &self.circ
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.dot.mul(a, b)
    }

    #[inline]
    pub fn circ_mul(&self, a: usize, b: usize) -> usize {
        self.circ.mul(a, b)
    }

    /// `a⁻¹`, the inverse in `(A, ·)`.
    pub fn inv(&self, a: usize) -> usize {
        self.dot.inv(a)
    }

    /// `ā`, the inverse in `(A, ∘)`.
    pub fn circ_inv(&self, a: usize) -> usize {
        self.circ.inv(a)
    }

    pub fn lambda(&self, a: usize) -> &Permutation {
        &self.lambda[a]
    }

    pub fn rho(&self, a: usize) -> &Permutation {
        &self.rho[a]
    }

    /// Whether every `λ_a` is the identity, i.e. `·` and `∘` coincide.
    pub fn is_trivial(&self) -> bool {
        self.lambda.iter().all(Permutation::is_identity)
    }

    /// Re-checks every triple of the brace relation.
    pub fn verify_exhaustive(&self) -> Result<()> {
        match first_brace_violation(&self.dot, &self.circ) {
            Some((a, b, c)) => Err(Error::BraceAxiomViolated { a, b, c }),
            None => Ok(()),
        }
    }

    /// Exhaustive check of the brace relation, the automorphism property of
    /// each `λ_a`, `ρ_a`, the homomorphism laws of `λ` and `ρ`, and the six
    /// linking identities between the two operations.
    pub fn invariant_report(&self) -> InvariantReport {
        let n = self.order();
        let aut_fail = |maps: &[Permutation]| (0..n).find(|&a| !self.dot.is_automorphism(&maps[a]));
        let hom_fail = |maps: &[Permutation]| {
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|&(a, b)| {
                let ab = self.circ_mul(a, b);
                (0..n).any(|x| maps[ab].apply(x) != maps[a].apply(maps[b].apply(x)))
            })
        };
        InvariantReport {
            brace_relation: first_brace_violation(&self.dot, &self.circ),
            lambda_automorphism: aut_fail(&self.lambda),
            rho_automorphism: aut_fail(&self.rho),
            lambda_hom: hom_fail(&self.lambda),
            rho_hom: hom_fail(&self.rho),
            linking: self.first_linking_violation(),
        }
    }

    fn first_linking_violation(&self) -> Option<(u8, usize, usize)> {
        let n = self.order();
        for a in 0..n {
            let abar = self.circ_inv(a);
            let ainv = self.inv(a);
            if abar != self.lambda[abar].apply(ainv) {
                return Some((3, a, 0));
            }
            if abar != self.rho[abar].apply(ainv) {
                return Some((6, a, 0));
            }
            for b in 0..n {
                let ab = self.circ_mul(a, b);
                if ab != self.mul(a, self.lambda[a].apply(b)) {
                    return Some((1, a, b));
                }
                if self.mul(a, b) != self.circ_mul(a, self.lambda[abar].apply(b)) {
                    return Some((2, a, b));
                }
                if ab != self.mul(self.rho[a].apply(b), a) {
                    return Some((4, a, b));
                }
                if self.mul(b, a) != self.circ_mul(a, self.rho[abar].apply(b)) {
                    return Some((5, a, b));
                }
            }
        }
        None
    }

    pub fn kernel_lambda(&self) -> Vec<usize> {
        (0..self.order()).filter(|&a| self.lambda[a].is_identity()).collect()
    }

    pub fn kernel_rho(&self) -> Vec<usize> {
        (0..self.order()).filter(|&a| self.rho[a].is_identity()).collect()
    }

    /// Classifies a subset as sub-skew brace / left ideal / ideal.
    /// The subset is canonicalised (sorted, deduplicated) first.
    pub fn classify_subset(&self, subset: &[usize]) -> SubsetClass {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        let n = self.order();
        let dot = self.dot.subset_status(&s);
        let circ = self.circ.subset_status(&s);
        let mut inside = vec![false; n];
        for &x in &s {
            inside[x] = true;
        }
        let sub_skew_brace = dot.subgroup && circ.subgroup;
        let left_ideal = dot.subgroup && (0..n).all(|a| s.iter().all(|&x| inside[self.lambda[a].apply(x)]));
        let ideal = left_ideal && dot.normal && circ.normal;
        let cosets_agree = left_ideal.then(|| {
            (0..n).all(|a| {
                let mut l: Vec<usize> = s.iter().map(|&x| self.mul(a, x)).collect();
                let mut r: Vec<usize> = s.iter().map(|&x| self.circ_mul(a, x)).collect();
                l.sort_unstable();
                r.sort_unstable();
                l == r
            })
        });
        SubsetClass {
            sub_skew_brace,
            left_ideal,
            ideal,
            cosets_agree,
        }
    }

    /// `(b·c)∘a = (b∘a)·a⁻¹·(c∘a)` for all `b, c`.
    pub fn is_u_distributive(&self, a: usize) -> bool {
        let n = self.order();
        let ainv = self.inv(a);
        (0..n).all(|b| {
            let ba = self.circ_mul(b, a);
            let left = self.mul(ba, ainv);
            (0..n).all(|c| self.circ_mul(self.mul(b, c), a) == self.mul(left, self.circ_mul(c, a)))
        })
    }

    pub fn u_distributive_elements(&self) -> Vec<usize> {
        (0..self.order()).filter(|&a| self.is_u_distributive(a)).collect()
    }

    pub fn is_two_sided(&self) -> bool {
        (0..self.order()).all(|a| self.is_u_distributive(a))
    }

    /// `a·(b∘c) = (a·b)∘ā∘(a·c)` for all `a, b, c`.
    pub fn is_bi_skew(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| {
            let abar = self.circ_inv(a);
            (0..n).all(|b| {
                let left = self.circ_mul(self.mul(a, b), abar);
                (0..n).all(|c| self.mul(a, self.circ_mul(b, c)) == self.circ_mul(left, self.mul(a, c)))
            })
        })
    }

    pub fn predicates(&self) -> BracePredicates {
        BracePredicates {
            two_sided: self.is_two_sided(),
            bi_skew: self.is_bi_skew(),
            dot_nilpotent: self.dot.is_nilpotent(),
            circ_nilpotent: self.circ.is_nilpotent(),
        }
    }

    /// `b ↦ ā∘(a·b)`, the λ-map with the roles of the operations exchanged.
    pub fn lambda_prime(&self, a: usize) -> Permutation {
        let abar = self.circ_inv(a);
        Permutation::from_images_unchecked((0..self.order()).map(|b| self.circ_mul(abar, self.mul(a, b))).collect())
    }

    pub fn kernel_invariance_checks(&self) -> KernelInvarianceReport {
        let n = self.order();
        let ker_l = self.kernel_lambda();
        let ker_r = self.kernel_rho();
        let mut in_l = vec![false; n];
        let mut in_r = vec![false; n];
        ker_l.iter().for_each(|&x| in_l[x] = true);
        ker_r.iter().for_each(|&x| in_r[x] = true);
        let ker_rho_lambda_invariant = (0..n).all(|a| ker_r.iter().all(|&x| in_r[self.lambda[a].apply(x)]));
        let ker_lambda_rho_invariant = (0..n).all(|a| ker_l.iter().all(|&x| in_l[self.rho[a].apply(x)]));
        let conj_formula = (0..n).all(|a| {
            let abar = self.circ_inv(a);
            ker_l
                .iter()
                .all(|&x| self.rho[a].apply(x) == self.circ_mul(self.circ_mul(a, x), abar))
        });
        KernelInvarianceReport {
            ker_rho_lambda_invariant,
            ker_lambda_rho_invariant,
            conj_formula,
        }
    }

    /// Whether `f` preserves both tables.
    pub fn is_automorphism(&self, f: &Permutation) -> bool {
        self.dot.is_automorphism(f) && self.circ.is_automorphism(f)
    }

    pub(crate) fn signatures(&self) -> Vec<Vec<usize>> {
        (0..self.order())
            .map(|a| {
                vec![
                    self.dot.element_order(a),
                    self.circ.element_order(a),
                    self.lambda[a].order(),
                    self.rho[a].order(),
                    self.lambda[a].fixed_points(),
                    self.rho[a].fixed_points(),
                    self.dot.centralizer_size(a),
                    self.circ.centralizer_size(a),
                ]
            })
            .collect()
    }

    /// A bijection preserving both tables, first in canonical search order.
    pub fn brace_isomorphic(&self, other: &SkewBrace) -> Result<Option<Permutation>> {
        self.brace_isomorphic_capped(other, DEFAULT_SEARCH_CAP)
    }

    pub fn brace_isomorphic_capped(&self, other: &SkewBrace, cap: usize) -> Result<Option<Permutation>> {
        check_cap(self.order(), cap)?;
        if self.order() != other.order() {
            return Ok(None);
        }
        let search = MapSearch {
            src: vec![&self.dot, &self.circ],
            dst: vec![&other.dot, &other.circ],
            src_sig: self.signatures(),
            dst_sig: other.signatures(),
        };
        let found = search.run(true, &mut |f| self.circ.is_isomorphism_to(&other.circ, f));
        Ok(found.into_iter().next())
    }

    /// Transports both tables along `f` (which must fix 0).
    pub fn relabel(&self, f: &Permutation) -> SkewBrace {
        Self::assemble(self.dot.relabel(f), self.circ.relabel(f))
    }
}

#[inline]
fn brace_relation_holds(dot: &Group, circ: &Group, a: usize, b: usize, c: usize) -> bool {
    let lhs = circ.mul(a, dot.mul(b, c));
    let rhs = dot.mul(dot.mul(circ.mul(a, b), dot.inv(a)), circ.mul(a, c));
    lhs == rhs
}

/// Lexicographically first `(a, b, c)` violating
/// `a∘(b·c) = (a∘b)·a⁻¹·(a∘c)`.
fn first_brace_violation(dot: &Group, circ: &Group) -> Option<(usize, usize, usize)> {
    let n = dot.order();
    for a in 0..n {
        let ainv = dot.inv(a);
        for b in 0..n {
            let left = dot.mul(circ.mul(a, b), ainv);
            for c in 0..n {
                if circ.mul(a, dot.mul(b, c)) != dot.mul(left, circ.mul(a, c)) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    #[test]
    fn trivial_brace_of_order_two() {
        let z2 = groups::cyclic(2);
        let b = SkewBrace::from_tables(&z2.rows(), &z2.rows()).unwrap();
        assert_eq!(b.order(), 2);
        assert!(b.is_trivial());
        assert!(b.invariant_report().is_clean());
    }

    #[test]
    fn mismatched_orders_rejected() {
        let e = SkewBrace::from_groups(groups::cyclic(2), groups::cyclic(3)).unwrap_err();
        assert!(matches!(e, Error::SizeMismatch { .. }));
    }

    #[test]
    fn kernels_of_trivial_brace() {
        let b = SkewBrace::trivial(&groups::symmetric(3));
        assert_eq!(b.kernel_lambda(), (0..6).collect::<Vec<_>>());
        // ρ_a is conjugation by a⁻¹; its kernel is the centre.
        assert_eq!(b.kernel_rho(), vec![0]);
        assert!(b.kernel_invariance_checks().all());
    }

    #[test]
    fn trivial_subset_is_ideal() {
        let b = SkewBrace::trivial(&groups::cyclic(4));
        let c = b.classify_subset(&[0]);
        assert!(c.ideal && c.left_ideal && c.sub_skew_brace);
        assert_eq!(c.cosets_agree, Some(true));
    }

    #[test]
    fn trivial_brace_predicates() {
        for g in [groups::cyclic(5), groups::symmetric(3), groups::quaternion8()] {
            let b = SkewBrace::trivial(&g);
            let p = b.predicates();
            assert!(p.two_sided && p.bi_skew);
            assert!(b.is_u_distributive(0));
        }
    }

    #[test]
    fn lambda_prime_inverts_lambda_when_bi_skew() {
        let b = SkewBrace::trivial(&groups::dihedral(3));
        for a in 0..b.order() {
            assert_eq!(b.lambda_prime(a), b.lambda(a).inverse());
        }
    }

    #[test]
    fn isomorphism_of_trivial_braces() {
        let z4 = SkewBrace::trivial(&groups::cyclic(4));
        let v4 = SkewBrace::trivial(&groups::klein());
        assert!(z4.brace_isomorphic(&v4).unwrap().is_none());
        assert!(z4.brace_isomorphic(&z4).unwrap().unwrap().is_identity());
    }
}
