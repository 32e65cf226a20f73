//! Finite groups given by Cayley tables with the identity at index 0.

use crate::error::{Error, GroupDefect, Result};
use crate::perm::{lcm, PermSet, Permutation};
use crate::search::{MapSearch, DEFAULT_SEARCH_CAP};

/// A finite group stored as its full multiplication table.
///
/// Elements are the indices `0..n`; index 0 is always the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Group {
    n: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Group(order {})", self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupProps {
    pub abelian: bool,
    pub exponent: usize,
    pub center: Vec<usize>,
    pub element_orders: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetStatus {
    pub subgroup: bool,
    pub normal: bool,
}

impl Group {
    /// Validates a table given as rows. The identity must sit at index 0;
    /// tables with the identity elsewhere are rejected, not relabelled.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup(GroupDefect::Empty));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(GroupDefect::NotSquare { row: r, len: row.len() }));
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(n, flat)
    }

    /// Validates a row-major table of length `n*n`.
    pub fn from_flat(n: usize, table: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAGroup(GroupDefect::Empty));
        }
        if table.len() != n * n {
            return Err(Error::SizeMismatch {
                what: "table entries",
                expected: n * n,
                got: table.len(),
            });
        }
        if let Some(pos) = table.iter().position(|&v| v >= n) {
            return Err(Error::NotAGroup(GroupDefect::EntryOutOfRange {
                row: pos / n,
                col: pos % n,
                value: table[pos],
            }));
        }
        if (0..n).any(|a| table[a] != a || table[a * n] != a) {
            return Err(Error::NotAGroup(GroupDefect::IdentityNotAtZero));
        }
        let mut seen = vec![usize::MAX; n];
        for r in 0..n {
            for c in 0..n {
                let v = table[r * n + c];
                if seen[v] == r {
                    return Err(Error::NotAGroup(GroupDefect::NotLatin { row: r, col: c }));
                }
                seen[v] = r;
            }
        }
        let mut seen = vec![usize::MAX; n];
        for c in 0..n {
            for r in 0..n {
                let v = table[r * n + c];
                if seen[v] == c {
                    return Err(Error::NotAGroup(GroupDefect::NotLatin { row: r, col: c }));
                }
                seen[v] = c;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(Error::NotAGroup(GroupDefect::NotAssociative { a, b, c }));
                    }
                }
            }
        }
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| table[a * n + b] == 0).expect("Latin row contains 0");
        }
        Ok(Group { n, table, inv })
    }

    pub(crate) fn from_flat_unchecked(n: usize, table: Vec<usize>) -> Self {
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| table[a * n + b] == 0).expect("Latin row contains 0");
        }
        Group { n, table, inv }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.n).map(|a| self.element_order(a)).collect()
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.commutes(a, b)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| (0..self.n).all(|b| self.commutes(a, b)))
            .collect()
    }

    pub fn centralizer_size(&self, a: usize) -> usize {
        (0..self.n).filter(|&b| self.commutes(a, b)).count()
    }

    pub fn props(&self) -> GroupProps {
        let element_orders = self.element_orders();
        GroupProps {
            abelian: self.is_abelian(),
            exponent: element_orders.iter().fold(1, |e, &o| lcm(e, o)),
            center: self.center(),
            element_orders,
        }
    }

    /// Subgroup generated by `gens`, as a sorted index list.
    pub fn generate(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        inside[0] = true;
        let mut elems = vec![0];
        let mut q = 0;
        while q < elems.len() {
            let x = elems[q];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    elems.push(y);
                }
            }
            q += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// `g⁻¹ x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn subset_status(&self, subset: &[usize]) -> SubsetStatus {
        let mut inside = vec![false; self.n];
        for &s in subset {
            inside[s] = true;
        }
        let subgroup = inside[0]
            && subset
                .iter()
                .all(|&a| inside[self.inv(a)] && subset.iter().all(|&b| inside[self.mul(a, b)]));
        let normal = subgroup
            && subset
                .iter()
                .all(|&x| (0..self.n).all(|g| inside[self.conjugate(x, g)]));
        SubsetStatus { subgroup, normal }
    }

    /// `[H, G]` for a subgroup `H`, as the subgroup generated by commutators.
    fn commutator_with_whole(&self, h: &[usize]) -> Vec<usize> {
        let mut gens: Vec<usize> = h
            .iter()
            .flat_map(|&x| (0..self.n).map(move |g| (x, g)))
            .map(|(x, g)| self.commutator(x, g))
            .collect();
        gens.sort_unstable();
        gens.dedup();
        self.generate(&gens)
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let all: Vec<usize> = (0..self.n).collect();
        self.commutator_with_whole(&all)
    }

    /// Terms of the lower central series until it stabilises.
    pub fn lower_central_series(&self) -> Vec<Vec<usize>> {
        let mut series = vec![(0..self.n).collect::<Vec<_>>()];
        loop {
            let next = self.commutator_with_whole(series.last().expect("nonempty"));
            if next.len() == series.last().expect("nonempty").len() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(|t| t.len() == 1)
    }

    /// For a nilpotent group, the Sylow subgroups: one per prime divisor of
    /// the order, each the set of elements of that prime-power order.
    pub fn primary_components(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_nilpotent() {
            return Err(Error::NotNilpotent);
        }
        let orders = self.element_orders();
        Ok(prime_divisors(self.n)
            .into_iter()
            .map(|p| (0..self.n).filter(|&a| is_power_of(orders[a], p)).collect())
            .collect())
    }

    pub fn is_automorphism(&self, f: &Permutation) -> bool {
        f.len() == self.n
            && (0..self.n).all(|a| (0..self.n).all(|b| f.apply(self.mul(a, b)) == self.mul(f.apply(a), f.apply(b))))
    }

    /// Whether `f` maps this group's table onto `other`'s.
    pub fn is_isomorphism_to(&self, other: &Group, f: &Permutation) -> bool {
        f.len() == self.n
            && other.n == self.n
            && (0..self.n).all(|a| (0..self.n).all(|b| f.apply(self.mul(a, b)) == other.mul(f.apply(a), f.apply(b))))
    }

    pub(crate) fn signatures(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| vec![self.element_order(a), self.centralizer_size(a)])
            .collect()
    }

    pub fn automorphisms(&self) -> Result<PermSet> {
        self.automorphisms_capped(DEFAULT_SEARCH_CAP)
    }

    pub fn automorphisms_capped(&self, cap: usize) -> Result<PermSet> {
        check_cap(self.n, cap)?;
        let sig = self.signatures();
        let search = MapSearch {
            src: vec![self],
            dst: vec![self],
            src_sig: sig.clone(),
            dst_sig: sig,
        };
        Ok(PermSet::from_elements(search.run(false, &mut |_| true)))
    }

    /// The first isomorphism onto `other` in canonical search order.
    pub fn isomorphic(&self, other: &Group) -> Result<Option<Permutation>> {
        self.isomorphic_capped(other, DEFAULT_SEARCH_CAP)
    }

    pub fn isomorphic_capped(&self, other: &Group, cap: usize) -> Result<Option<Permutation>> {
        check_cap(self.n, cap)?;
        if self.n != other.n {
            return Ok(None);
        }
        let search = MapSearch {
            src: vec![self],
            dst: vec![other],
            src_sig: self.signatures(),
            dst_sig: other.signatures(),
        };
        Ok(search.run(true, &mut |_| true).into_iter().next())
    }

    /// The table transported along `f` (which must fix 0): `f(a)·'f(b) = f(a·b)`.
    pub fn relabel(&self, f: &Permutation) -> Group {
        assert_eq!(f.apply(0), 0, "relabelling must fix the identity");
        let n = self.n;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[f.apply(a) * n + f.apply(b)] = f.apply(self.mul(a, b));
            }
        }
        Group::from_flat_unchecked(n, table)
    }
}

pub(crate) fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::SearchCapExceeded { n, cap })
    } else {
        Ok(())
    }
}

pub(crate) fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut ps = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            ps.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        ps.push(n);
    }
    ps
}

fn is_power_of(mut k: usize, p: usize) -> bool {
    while k.is_multiple_of(p) {
        k /= p;
    }
    k == 1
}
