//! Every construction datum over small `B` and `C` that passes the checks
//! must give a brace with the expected product structure, and the
//! structured automorphism search must agree with the generic one.

use skewbrace::automorphism::{brace_automorphisms, structured_aut_of_product};
use skewbrace::construction::{check_product_structure, product_brace, product_brace_from_maps, ConstructionData};
use skewbrace::families::f2f3_brace;
use skewbrace::groups::{self, small_groups};
use skewbrace::oracle::enumerate_braces_on;
use skewbrace::{Error, Group, PermSet, Permutation, SkewBrace};

fn power(f: &Permutation, k: usize) -> Permutation {
    (0..k).fold(Permutation::identity(f.len()), |acc, _| acc.compose(f))
}

/// Homomorphisms from `c` (cyclic or Klein) into `auts`, as image lists.
fn homs(c: &Group, auts: &PermSet) -> Vec<Vec<Permutation>> {
    let m = c.order();
    let is_klein = m == 4 && !c.element_orders().contains(&4);
    if is_klein {
        let invs: Vec<&Permutation> = auts.iter().filter(|f| f.compose(f).is_identity()).collect();
        let mut out = Vec::new();
        for f in &invs {
            for g in &invs {
                if f.compose(g) == g.compose(f) {
                    out.push((0..4).map(|x| power(f, x / 2).compose(&power(g, x % 2))).collect());
                }
            }
        }
        out
    } else {
        auts.iter()
            .filter(|f| power(f, m).is_identity())
            .map(|f| (0..m).map(|k| power(f, k)).collect())
            .collect()
    }
}

fn bases() -> Vec<(String, SkewBrace)> {
    let mut out = Vec::new();
    for n in 2..=6 {
        for (name, g) in small_groups(n) {
            if !g.is_abelian() {
                continue;
            }
            for (i, b) in enumerate_braces_on(&g).unwrap().braces.into_iter().enumerate() {
                out.push((format!("{name}#{i}"), b));
            }
        }
    }
    out.push(("F2F3".into(), f2f3_brace()));
    out
}

#[test]
fn accepted_data_always_yields_braces() {
    let cs = [
        ("Z2", groups::cyclic(2)),
        ("Z3", groups::cyclic(3)),
        ("Z4", groups::cyclic(4)),
        ("V4", groups::klein()),
    ];
    let mut accepted = 0;
    let mut structured_compared = 0;
    let mut rejected = 0;
    for (bname, b) in bases() {
        let dot_auts = b.dot().automorphisms().unwrap();
        let circ_auts = b.circ().automorphisms().unwrap();
        for (cname, c) in &cs {
            if b.order() * c.order() > 24 {
                continue;
            }
            let dot_homs = homs(c, &dot_auts);
            let circ_homs = homs(c, &circ_auts);
            for phi in &dot_homs {
                for gamma in &dot_homs {
                    for psi in &circ_homs {
                        let data = match ConstructionData::new(
                            b.clone(),
                            c.clone(),
                            phi.clone(),
                            gamma.clone(),
                            psi.clone(),
                        ) {
                            Ok(d) => d,
                            Err(Error::LambdaCompatibilityViolated { .. } | Error::CocycleConditionViolated { .. }) => {
                                rejected += 1;
                                continue;
                            }
                            Err(e) => panic!("{bname} x {cname}: unexpected {e}"),
                        };
                        accepted += 1;
                        let a = product_brace(&data).unwrap_or_else(|e| panic!("{bname} x {cname}: {e}"));
                        let report = check_product_structure(&data, &a);
                        assert!(report.all_pass(), "{bname} x {cname}: {report:?}");
                        match structured_aut_of_product(&data, &a) {
                            Ok(s) => {
                                structured_compared += 1;
                                assert_eq!(s.automorphisms, brace_automorphisms(&a).unwrap(), "{bname} x {cname}");
                            }
                            Err(Error::NotCharacteristic) => {}
                            Err(e) => panic!("{bname} x {cname}: {e}"),
                        }
                    }
                }
            }
        }
    }
    assert!(accepted > 100, "only {accepted} accepted");
    assert!(structured_compared > 50, "only {structured_compared} compared");
    assert!(rejected > 0);
}

#[test]
fn rejected_cocycle_data_breaks_the_brace_relation() {
    // Whenever the λ-compatibility condition holds but the cocycle condition fails, the raw product is not a brace.
    let b = SkewBrace::trivial(&groups::cyclic(5));
    let c = groups::cyclic(2);
    let auts = b.dot().automorphisms().unwrap();
    let mut seen = 0;
    for psi in homs(&c, &auts) {
        let id = vec![Permutation::identity(5); 2];
        if let Err(Error::CocycleConditionViolated { .. }) =
            ConstructionData::new(b.clone(), c.clone(), id.clone(), id.clone(), psi.clone())
        {
            seen += 1;
            let raw = product_brace_from_maps(&b, &c, &id, &id, &psi);
            assert!(matches!(raw, Err(Error::BraceAxiomViolated { .. })), "{raw:?}");
        }
    }
    assert_eq!(seen, 1);
}
