//! Brute-force ground truth for small orders: every skew brace on a given
//! additive group, a raw circ-table enumeration to cross-check it, and
//! automorphisms by filtering all permutations.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::brace::{BracePredicates, SkewBrace, Validation};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::{PermSet, Permutation};

/// Largest order accepted by the enumerators in this module.
pub const ORACLE_MAX_ORDER: usize = 8;
/// Largest order accepted by [`raw_circ_enumeration`].
pub const RAW_MAX_ORDER: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceLabel {
    pub predicates: BracePredicates,
    pub lambda_trivial: bool,
    pub circ_abelian: bool,
    /// Number of automorphisms of the additive group that fix the circ table.
    pub aut_order: usize,
}

/// All skew braces with a fixed additive group, one per isomorphism class.
#[derive(Clone, Debug)]
pub struct BraceCorpus {
    pub base_group: Group,
    pub braces: Vec<SkewBrace>,
    pub labels: Vec<BraceLabel>,
    /// Number of circ operations on the labelled set before deduplication.
    pub labelled_count: usize,
}

impl BraceCorpus {
    pub fn len(&self) -> usize {
        self.braces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.braces.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SkewBrace, &BraceLabel)> {
        self.braces.iter().zip(&self.labels)
    }
}

fn check_order(n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::SearchCapExceeded { n, cap: max });
    }
    Ok(())
}

/// Enumerates `λ : G → Aut(G)` with `λ₀ = id` and
/// `λ_{a·λ_a(b)} = λ_a λ_b`; each solution gives the brace
/// `a ∘ b = a·λ_a(b)`. Braces are deduplicated by the lexicographically
/// smallest circ table over relabellings by `Aut(G)`, which is also the
/// representative kept.
pub fn enumerate_braces_on(g: &Group) -> Result<BraceCorpus> {
    let n = g.order();
    check_order(n, ORACLE_MAX_ORDER)?;
    let auts: Vec<Permutation> = g.automorphisms_capped(ORACLE_MAX_ORDER)?.elements().to_vec();
    let index: BTreeMap<&Permutation, usize> = auts.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let compose: Vec<Vec<usize>> = auts
        .iter()
        .map(|f| auts.iter().map(|h| index[&f.compose(h)]).collect())
        .collect();
    let id = index[&Permutation::identity(n)];

    let mut solutions = Vec::new();
    let mut assign = vec![usize::MAX; n];
    assign[0] = id;
    let ctx = LambdaSearch {
        g,
        auts: &auts,
        compose: &compose,
    };
    ctx.extend(&mut assign, &mut solutions);

    let mut classes: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for lam in &solutions {
        let circ: Vec<usize> = (0..n * n)
            .map(|k| g.mul(k / n, auts[lam[k / n]].apply(k % n)))
            .collect();
        let (canon, stabilizer) = canonical_form(&circ, n, &auts);
        classes.entry(canon).or_insert(stabilizer);
    }

    let mut braces = Vec::new();
    let mut labels = Vec::new();
    for (circ, aut_order) in classes {
        let brace = SkewBrace::from_groups_with(g.clone(), Group::from_flat(n, circ)?, Validation::Exhaustive)?;
        labels.push(BraceLabel {
            predicates: brace.predicates(),
            lambda_trivial: brace.is_trivial(),
            circ_abelian: brace.circ().is_abelian(),
            aut_order,
        });
        braces.push(brace);
    }
    Ok(BraceCorpus {
        base_group: g.clone(),
        braces,
        labels,
        labelled_count: solutions.len(),
    })
}

/// Smallest relabelled table `f(a)∘'f(b) = f(a∘b)` over `f` in `auts`,
/// and the number of `f` achieving the original table.
fn canonical_form(circ: &[usize], n: usize, auts: &[Permutation]) -> (Vec<usize>, usize) {
    let mut best: Option<Vec<usize>> = None;
    let mut stabilizer = 0;
    let mut t = vec![0; n * n];
    for f in auts {
        for a in 0..n {
            for b in 0..n {
                t[f.apply(a) * n + f.apply(b)] = f.apply(circ[a * n + b]);
            }
        }
        if t == circ {
            stabilizer += 1;
        }
        if best.as_ref().is_none_or(|cur| t < *cur) {
            best = Some(t.clone());
        }
    }
    (best.expect("identity automorphism"), stabilizer)
}

struct LambdaSearch<'a> {
    g: &'a Group,
    auts: &'a [Permutation],
    compose: &'a [Vec<usize>],
}

impl LambdaSearch<'_> {
    /// Forces `λ_{a·λ_a(b)} = λ_a λ_b` over assigned pairs until stable.
    /// Returns `false` on contradiction.
    fn propagate(&self, assign: &mut [usize]) -> bool {
        let n = assign.len();
        loop {
            let mut changed = false;
            for a in 0..n {
                if assign[a] == usize::MAX {
                    continue;
                }
                for b in 0..n {
                    if assign[b] == usize::MAX {
                        continue;
                    }
                    let x = self.g.mul(a, self.auts[assign[a]].apply(b));
                    let want = self.compose[assign[a]][assign[b]];
                    if assign[x] == usize::MAX {
                        assign[x] = want;
                        changed = true;
                    } else if assign[x] != want {
                        return false;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn extend(&self, assign: &mut [usize], out: &mut Vec<Vec<usize>>) {
        let Some(a) = assign.iter().position(|&x| x == usize::MAX) else {
            out.push(assign.to_vec());
            return;
        };
        for f in 0..self.auts.len() {
            let mut next = assign.to_vec();
            next[a] = f;
            if self.propagate(&mut next) {
                self.extend(&mut next, out);
            }
        }
    }
}

/// Every circ table on `0..n` with identity 0 that forms a group and
/// satisfies the brace relation with `g`, found by filling Latin squares
/// cell by cell. Independent of the `λ` parameterisation.
pub fn raw_circ_enumeration(g: &Group) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    check_order(n, RAW_MAX_ORDER)?;
    let mut table = vec![usize::MAX; n * n];
    for x in 0..n {
        table[x] = x;
        table[x * n] = x;
    }
    let mut out = Vec::new();
    fill_cell(g, n, n + 1, &mut table, &mut out);
    Ok(out)
}

fn fill_cell(g: &Group, n: usize, k: usize, table: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k >= n * n {
        if is_group_table(table, n) && is_brace_with(g, table, n) {
            out.push(table.clone());
        }
        return;
    }
    if k.is_multiple_of(n) {
        return fill_cell(g, n, k + 1, table, out);
    }
    let (r, c) = (k / n, k % n);
    for v in 0..n {
        let in_row = (0..c).any(|j| table[r * n + j] == v);
        let in_col = (0..r).any(|i| table[i * n + c] == v);
        if !in_row && !in_col {
            table[k] = v;
            fill_cell(g, n, k + 1, table, out);
        }
    }
    table[k] = usize::MAX;
}

fn is_group_table(t: &[usize], n: usize) -> bool {
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]])))
}

fn is_brace_with(g: &Group, t: &[usize], n: usize) -> bool {
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                let lhs = t[a * n + g.mul(b, c)];
                let rhs = g.mul(g.mul(t[a * n + b], g.inv(a)), t[a * n + c]);
                lhs == rhs
            })
        })
    })
}

/// Automorphisms of `a` by testing all `(n-1)!` permutations fixing 0.
pub fn naive_brace_automorphisms(a: &SkewBrace) -> Result<PermSet> {
    let n = a.order();
    check_order(n, ORACLE_MAX_ORDER)?;
    let found = (1..n)
        .permutations(n.saturating_sub(1))
        .map(|rest| Permutation::from_images_unchecked(std::iter::once(0).chain(rest).collect()))
        .filter(|f| {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    f.apply(a.mul(x, y)) == a.mul(f.apply(x), f.apply(y))
                        && f.apply(a.circ_mul(x, y)) == a.circ_mul(f.apply(x), f.apply(y))
                })
            })
        })
        .collect();
    Ok(PermSet::from_elements(found))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    #[test]
    fn small_cyclic_corpora() {
        assert_eq!(enumerate_braces_on(&groups::cyclic(2)).unwrap().len(), 1);
        assert_eq!(enumerate_braces_on(&groups::cyclic(3)).unwrap().len(), 1);
    }

    #[test]
    fn raw_matches_lambda_on_order_four() {
        for g in [groups::cyclic(4), groups::klein()] {
            let corpus = enumerate_braces_on(&g).unwrap();
            assert_eq!(raw_circ_enumeration(&g).unwrap().len(), corpus.labelled_count);
        }
    }

    #[test]
    fn raw_handles_trivial_orders() {
        assert_eq!(raw_circ_enumeration(&groups::cyclic(1)).unwrap().len(), 1);
        assert_eq!(raw_circ_enumeration(&groups::cyclic(2)).unwrap().len(), 1);
    }

    #[test]
    fn naive_on_klein() {
        let a = SkewBrace::trivial(&groups::klein());
        assert_eq!(naive_brace_automorphisms(&a).unwrap().len(), 6);
        let z2 = SkewBrace::trivial(&groups::cyclic(2));
        assert!(naive_brace_automorphisms(&z2).unwrap().is_trivial());
    }

    #[test]
    fn order_limits() {
        let g = groups::cyclic(9);
        assert!(matches!(
            enumerate_braces_on(&g),
            Err(Error::SearchCapExceeded { n: 9, .. })
        ));
        assert!(matches!(
            raw_circ_enumeration(&groups::cyclic(5)),
            Err(Error::SearchCapExceeded { .. })
        ));
    }
}
