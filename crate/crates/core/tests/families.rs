use skewbrace::automorphism::{brace_automorphisms, brace_automorphisms_capped, structured_aut_of_product_capped};
use skewbrace::construction::product_brace_capped;
use skewbrace::families::*;
use skewbrace::groups;
use skewbrace::{Error, Permutation};

// Coordinates recomputed here so the tests do not share the library's helpers.
fn f2f3_coords(i: usize) -> (u8, u8, usize) {
    ((i / 6) as u8, ((i / 3) % 2) as u8, i % 3)
}

fn heis_coords(i: usize, p: usize) -> [usize; 3] {
    [i / (p * p), (i / p) % p, i % p]
}

#[test]
fn f2f3_circ_matches_formula_and_is_a4() {
    let b = f2f3_brace();
    // M^z for z = 0, 1, 2 with M = [[1,1],[1,0]] over F2.
    let pow = [[[1, 0], [0, 1]], [[1, 1], [1, 0]], [[0, 1], [1, 1]]];
    for i in 0..12 {
        for j in 0..12 {
            let (x1, x2, z) = f2f3_coords(i);
            let (y1, y2, w) = f2f3_coords(j);
            let m: [[u8; 2]; 2] = pow[z];
            let r1 = (x1 + m[0][0] * y1 + m[0][1] * y2) % 2;
            let r2 = (x2 + m[1][0] * y1 + m[1][1] * y2) % 2;
            let want = 3 * (2 * r1 as usize + r2 as usize) + (z + w) % 3;
            assert_eq!(b.circ_mul(i, j), want, "({i},{j})");
        }
    }
    assert_eq!(b.circ_mul(0, 0), 0);
    assert!(b.circ().isomorphic(&groups::alternating(4)).unwrap().is_some());
    // λ depends only on z.
    let kernel: Vec<usize> = (0..12).filter(|&i| i % 3 == 0).collect();
    assert_eq!(b.kernel_lambda(), kernel);
}

#[test]
fn heisenberg_properties() {
    let p = 3;
    let b = heisenberg_brace(p as u64).unwrap();
    assert_eq!(b.order(), 27);
    assert!(b.dot().is_abelian());
    assert!(!b.circ().is_abelian());
    assert!(b.circ().element_orders().iter().all(|&o| o == 1 || o == 3));
    assert!(b.is_bi_skew());
    let kernel: Vec<usize> = (0..27).filter(|&i| heis_coords(i, p)[2] == 0).collect();
    assert_eq!(b.kernel_lambda(), kernel);
    // λ_x is unitriangular with x₃ at (1,2): λ_x(y) = (y₁ + x₃y₂, y₂, y₃).
    for x in 0..27 {
        let x3 = heis_coords(x, p)[2];
        for y in 0..27 {
            let [y1, y2, y3] = heis_coords(y, p);
            let want = ((y1 + x3 * y2) % p) * p * p + y2 * p + y3;
            assert_eq!(b.lambda(x).apply(y), want);
        }
    }
}

#[test]
fn heisenberg_rejects_non_primes() {
    assert_eq!(heisenberg_brace(9).unwrap_err(), Error::PrimeRequired(9));
    assert_eq!(heisenberg_brace(2).unwrap_err(), Error::PrimeRequired(2));
    assert!(matches!(
        heisenberg_brace(11),
        Err(Error::SearchCapExceeded { n: 1331, .. })
    ));
}

#[test]
fn closed_forms_match_search() {
    let f = closed_form_aut(Family::F2F3, 0).unwrap();
    assert_eq!(f.len(), 6);
    assert!(f.iter().all(|m| m.apply(0) == 0));
    assert_eq!(f, brace_automorphisms(&f2f3_brace()).unwrap());
    for p in [3u64, 5] {
        let h = closed_form_aut(Family::Heisenberg, p).unwrap();
        let q = p as usize;
        assert_eq!(h.len(), (q - 1) * (q - 1) * q * q);
        assert!(h.is_group());
        let computed = brace_automorphisms_capped(&heisenberg_brace(p).unwrap(), 200).unwrap();
        assert_eq!(h, computed, "p={p}");
    }
}

#[test]
fn maps_have_order_two_and_psi_in_aut() {
    let [_, gamma, psi] = order24_maps();
    assert!(gamma.compose(&gamma).is_identity() && !gamma.is_identity());
    assert!(psi.compose(&psi).is_identity());
    assert!(closed_form_aut(Family::F2F3, 0).unwrap().contains(&psi));
    for p in [3u64, 5, 7] {
        let params = FamilyParams::default_for(p).unwrap();
        let perms = rigid_2p3_matrices(&params).map(|m| m.to_permutation());
        for m in &perms {
            assert!(m.compose(m).is_identity());
        }
        if p <= 5 {
            assert!(closed_form_aut(Family::Heisenberg, p).unwrap().contains(&perms[2]));
        }
    }
}

#[test]
fn rigid_examples_avoid_every_sufficient_condition() {
    let a24 = order24_rigid_brace();
    let params = FamilyParams::default_for(3).unwrap();
    let a54 = rigid_2p3_brace(&params).unwrap();
    for a in [&a24, &a54] {
        assert!(!a.is_two_sided());
        assert!(!a.is_bi_skew());
        assert!(!a.circ().is_nilpotent());
    }
    assert_eq!(a54.order(), 54);
    assert!(brace_automorphisms(&a54).unwrap().is_trivial());
}

#[test]
fn constraint_examples() {
    assert_eq!(FamilyParams::default_for(3).unwrap().constraint_value(), 1);
    let alt = FamilyParams::new(3, 1, 0, 1, 0, 1).unwrap();
    assert_eq!(alt.constraint_value(), 2);
    assert!(rigid_2p3_brace(&alt).is_ok());
    for p in [3u64, 5, 7, 11] {
        assert_eq!(FamilyParams::default_for(p).unwrap().constraint_value(), 4 % p);
    }
    // ε = -1: 4(δ₃ + δ₄) + 2δ₁δ₂ = 4 + 2·1·1 = 6 ≡ 0 mod 3.
    assert_eq!(
        FamilyParams::new(3, -1, 1, 1, 1, 0),
        Err(Error::ConstraintViolated { p: 3 })
    );
}

#[test]
fn order_two_set_matches_squares() {
    for p in [3u64, 5] {
        let params = FamilyParams::default_for(p).unwrap();
        let set = order_two_set(&params);
        assert_eq!(set[0], 0);
        assert_eq!(set.len(), p as usize);

        let cap = 2 * (p as usize).pow(3);
        let data = rigid_2p3_construction_capped(&params, cap).unwrap();
        let a = product_brace_capped(&data, cap).unwrap();
        let pg = data.phi_gamma(1);
        let squares: Vec<usize> = (0..(p as usize).pow(3))
            .filter(|&y| {
                let x = data.pair(pg.apply(y), 1);
                a.mul(x, x) == 0 && a.circ_mul(x, x) == 0
            })
            .collect();
        assert_eq!(set, squares, "p={p}");
    }
    // A non-default parameter set, scanning all p³ candidates.
    let params = FamilyParams::new(5, -1, 2, 3, 1, 4).unwrap();
    assert!(order_two_set(&params).len() <= 5);
}

#[test]
fn structured_search_on_the_families() {
    let d = order24_construction();
    let a = order24_rigid_brace();
    let s = structured_aut_of_product_capped(&d, &a, 24).unwrap();
    assert!(s.automorphisms.is_trivial());
    assert_eq!(s.survivors.len(), 1);
    let params = FamilyParams::default_for(3).unwrap();
    let d = rigid_2p3_construction_capped(&params, 54).unwrap();
    let a = product_brace_capped(&d, 54).unwrap();
    let s = structured_aut_of_product_capped(&d, &a, 54).unwrap();
    assert!(s.automorphisms.is_trivial());
    assert_eq!(s.automorphisms.elements(), &[Permutation::identity(54)]);
}

#[test]
fn altered_psi_is_still_valid_data() {
    // Row 1 of ψ₁ is invisible to the cocycle condition because φ₁ + id has a zero first column.
    let params = FamilyParams::new(3, 1, 1, 1, 1, 0).unwrap();
    let [phi, gamma, mut psi] = rigid_2p3_matrices(&params);
    psi.set(0, 2, 0);
    let b = heisenberg_brace(3).unwrap();
    let data = z2_construction(b, phi.to_permutation(), gamma.to_permutation(), psi.to_permutation()).unwrap();
    let a = product_brace_capped(&data, 54).unwrap();
    a.verify_exhaustive().unwrap();
}

#[test]
fn inversion_on_z3_violates_the_cocycle_condition() {
    // φ = γ = id reduces the cocycle condition at c = c' = 1 to 2(ψ₁⁻¹ − id) = 0, and
    // inversion on Z/3 gives 2(−2·id) ≠ 0.
    let b = skewbrace::SkewBrace::trivial(&groups::cyclic(3));
    let inversion = Permutation::from_images(vec![0, 2, 1]).unwrap();
    let id = Permutation::identity(3);
    let r = z2_construction(b.clone(), id.clone(), id.clone(), inversion.clone());
    assert!(
        matches!(r, Err(Error::CocycleConditionViolated { c: 1, c2: 1, .. })),
        "{r:?}"
    );
    let raw = skewbrace::construction::product_brace_from_maps(
        &b,
        &groups::cyclic(2),
        &[id.clone(), id.clone()],
        &[id.clone(), id.clone()],
        &[id, inversion],
    );
    assert!(matches!(raw, Err(Error::BraceAxiomViolated { .. })), "{raw:?}");
}
