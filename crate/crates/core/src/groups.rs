//! Constructors for standard small groups.

use std::collections::HashMap;

use crate::group::Group;
use crate::perm::Permutation;

pub fn cyclic(n: usize) -> Group {
    assert!(n > 0);
    let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    Group::from_flat_unchecked(n, table)
}

/// `G × H` with `(g, h)` at index `g·|H| + h`.
pub fn direct_product(g: &Group, h: &Group) -> Group {
    let (n, m) = (g.order(), h.order());
    let size = n * m;
    let mut table = vec![0; size * size];
    for x in 0..size {
        for y in 0..size {
            let (a, b) = (x / m, x % m);
            let (c, d) = (y / m, y % m);
            table[x * size + y] = g.mul(a, c) * m + h.mul(b, d);
        }
    }
    Group::from_flat_unchecked(size, table)
}

pub fn klein() -> Group {
    direct_product(&cyclic(2), &cyclic(2))
}

/// Elementary abelian group of order `p^d`; coordinates are base-`p` digits
/// of the index, most significant first.
pub fn elementary_abelian(p: usize, d: u32) -> Group {
    (0..d).fold(cyclic(1), |acc, _| direct_product(&acc, &cyclic(p)))
}

/// Dihedral group of order `2m`; `r^i s^j` sits at index `i + m·j`.
pub fn dihedral(m: usize) -> Group {
    assert!(m > 0);
    let n = 2 * m;
    let mut table = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let (i, j) = (x % m, x / m);
            let (k, l) = (y % m, y / m);
            let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
            table[x * n + y] = rot + m * ((j + l) % 2);
        }
    }
    Group::from_flat_unchecked(n, table)
}

/// Quaternion group; `±u` for `u ∈ {1, i, j, k}` sits at index `2u + sign`.
pub fn quaternion8() -> Group {
    // unit products: (sign, unit)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut table = vec![0; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (s, u) = UNIT[x / 2][y / 2];
            let sign = (s + x % 2 + y % 2) % 2;
            table[x * 8 + y] = 2 * u + sign;
        }
    }
    Group::from_flat_unchecked(8, table)
}

/// The group generated by the given permutations, with elements indexed
/// in lexicographic order of their image lists (the identity comes first)
/// and `a·b = a ∘ b`.
pub fn from_permutations(degree: usize, gens: &[Permutation]) -> Group {
    let id = Permutation::identity(degree);
    let mut elems = vec![id.clone()];
    let mut seen: HashMap<Permutation, ()> = HashMap::from([(id, ())]);
    let mut q = 0;
    while q < elems.len() {
        for g in gens {
            let y = elems[q].compose(g);
            if seen.insert(y.clone(), ()).is_none() {
                elems.push(y);
            }
        }
        q += 1;
    }
    elems.sort();
    let index: HashMap<&Permutation, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = elems.len();
    let mut table = vec![0; n * n];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            table[i * n + j] = index[&a.compose(b)];
        }
    }
    Group::from_flat_unchecked(n, table)
}

pub fn symmetric(k: usize) -> Group {
    if k < 2 {
        return cyclic(1);
    }
    let cycle = Permutation::from_images((1..k).chain([0]).collect()).expect("cycle");
    from_permutations(k, &[Permutation::transposition(k, 0, 1), cycle])
}

pub fn alternating(k: usize) -> Group {
    if k < 3 {
        return cyclic(1);
    }
    let gens: Vec<Permutation> = (2..k)
        .map(|i| {
            let mut img: Vec<usize> = (0..k).collect();
            img[0] = 1;
            img[1] = i;
            img[i] = 0;
            Permutation::from_images(img).expect("3-cycle")
        })
        .collect();
    from_permutations(k, &gens)
}

/// One representative of every isomorphism type of group of order `n`,
/// for `1 ≤ n ≤ 8`.
pub fn small_groups(n: usize) -> Vec<(&'static str, Group)> {
    match n {
        1 => vec![("C1", cyclic(1))],
        2 => vec![("C2", cyclic(2))],
        3 => vec![("C3", cyclic(3))],
        4 => vec![("C4", cyclic(4)), ("C2xC2", klein())],
        5 => vec![("C5", cyclic(5))],
        6 => vec![("C6", cyclic(6)), ("S3", symmetric(3))],
        7 => vec![("C7", cyclic(7))],
        8 => vec![
            ("C8", cyclic(8)),
            ("C4xC2", direct_product(&cyclic(4), &cyclic(2))),
            ("C2xC2xC2", elementary_abelian(2, 3)),
            ("D8", dihedral(4)),
            ("Q8", quaternion8()),
        ],
        _ => Vec::new(),
    }
}
