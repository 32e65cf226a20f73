//! Backtracking search for structure-preserving bijections between
//! Cayley-table structures.
//!
//! A structure is a list of tables on the same index set (one table for a
//! group, two for a skew brace). A map is fixed by the images of a
//! generating sequence of the first table; every other image is forced by
//! right multiplication with already-placed generators in *all* tables, and
//! each forced value is checked for consistency and injectivity as soon as
//! it is produced. Candidates for a generator are the target elements with
//! the same invariant signature, tried in increasing index order, so the
//! output order is deterministic.

use std::collections::HashMap;

use crate::group::Group;
use crate::perm::Permutation;

/// Default upper bound on the order of structures handed to the searches.
pub const DEFAULT_SEARCH_CAP: usize = 512;

const NONE: usize = usize::MAX;

pub(crate) struct MapSearch<'a> {
    pub src: Vec<&'a Group>,
    pub dst: Vec<&'a Group>,
    /// Per-element invariant signatures; only equal signatures may correspond.
    pub src_sig: Vec<Vec<usize>>,
    pub dst_sig: Vec<Vec<usize>>,
}

impl<'a> MapSearch<'a> {
    /// All maps passing `accept` (or the first one, if `first_only`).
    pub fn run(&self, first_only: bool, accept: &mut dyn FnMut(&Permutation) -> bool) -> Vec<Permutation> {
        let n = self.src[0].order();
        assert!(self.src.len() == self.dst.len() && self.dst.iter().all(|g| g.order() == n));

        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut class_of = |sig: &[usize]| -> usize {
            let next = ids.len();
            *ids.entry(sig.to_vec()).or_insert(next)
        };
        let src_class: Vec<usize> = self.src_sig.iter().map(|s| class_of(s)).collect();
        let dst_class: Vec<usize> = self.dst_sig.iter().map(|s| class_of(s)).collect();
        let classes = ids.len();

        let mut src_count = vec![0usize; classes];
        let mut dst_count = vec![0usize; classes];
        for &c in &src_class {
            src_count[c] += 1;
        }
        for &c in &dst_class {
            dst_count[c] += 1;
        }
        if src_count != dst_count {
            return Vec::new();
        }

        let gens = choose_generators(self.src[0], &src_class, &dst_count);
        let cands = gens
            .iter()
            .map(|&g| (0..n).filter(|&y| dst_class[y] == src_class[g]).collect())
            .collect();

        let mut map = vec![NONE; n];
        let mut used = vec![false; n];
        map[0] = 0;
        used[0] = true;
        let mut engine = Engine {
            src: &self.src,
            dst: &self.dst,
            gens,
            cands,
            map,
            used,
            domain: vec![0],
            active: Vec::new(),
            first_only,
            found: Vec::new(),
            accept,
        };
        engine.descend(0);
        engine.found
    }
}

/// Greedy generating sequence for `g`: repeatedly add the element outside
/// the current subgroup with the fewest candidate images, preferring the
/// largest resulting subgroup, then the smallest index.
fn choose_generators(g: &Group, class: &[usize], class_count: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut gens: Vec<usize> = Vec::new();
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut size = 1;
    while size < n {
        let min = (0..n)
            .filter(|&x| !inside[x])
            .map(|x| class_count[class[x]])
            .min()
            .expect("subgroup is proper");
        let mut best: Option<(usize, Vec<usize>)> = None;
        for x in (0..n).filter(|&x| !inside[x] && class_count[class[x]] == min) {
            gens.push(x);
            let sub = g.generate(&gens);
            gens.pop();
            if best.as_ref().is_none_or(|(_, b)| sub.len() > b.len()) {
                best = Some((x, sub));
            }
        }
        let (x, sub) = best.expect("candidate exists");
        gens.push(x);
        for &y in &sub {
            inside[y] = true;
        }
        size = sub.len();
    }
    gens
}

struct Engine<'s, 'g, 'f> {
    src: &'s [&'g Group],
    dst: &'s [&'g Group],
    gens: Vec<usize>,
    cands: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
    domain: Vec<usize>,
    active: Vec<usize>,
    first_only: bool,
    found: Vec<Permutation>,
    accept: &'f mut dyn FnMut(&Permutation) -> bool,
}

impl Engine<'_, '_, '_> {
    /// Returns true when the search should stop.
    fn descend(&mut self, level: usize) -> bool {
        if level == self.gens.len() {
            debug_assert_eq!(self.domain.len(), self.map.len());
            let p = Permutation::from_images_unchecked(self.map.clone());
            if (self.accept)(&p) {
                self.found.push(p);
                return self.first_only;
            }
            return false;
        }
        let g = self.gens[level];
        let saved = (self.domain.len(), self.active.len());
        if self.map[g] != NONE {
            let stop = self.activate(g, saved.0) && self.descend(level + 1);
            self.undo(saved);
            return stop;
        }
        for i in 0..self.cands[level].len() {
            let h = self.cands[level][i];
            if self.used[h] {
                continue;
            }
            self.map[g] = h;
            self.used[h] = true;
            self.domain.push(g);
            let stop = self.activate(g, saved.0) && self.descend(level + 1);
            self.undo(saved);
            if stop {
                return true;
            }
        }
        false
    }

    /// Makes `g` an active generator and propagates all forced images.
    /// `old_len` is the domain size before `g` was (possibly) added.
    fn activate(&mut self, g: usize, old_len: usize) -> bool {
        self.active.push(g);
        for i in 0..old_len {
            let x = self.domain[i];
            if !self.edge(x, g) {
                return false;
            }
        }
        let mut q = old_len;
        while q < self.domain.len() {
            let x = self.domain[q];
            for k in 0..self.active.len() {
                let h = self.active[k];
                if !self.edge(x, h) {
                    return false;
                }
            }
            q += 1;
        }
        true
    }

    #[inline]
    fn edge(&mut self, x: usize, g: usize) -> bool {
        for t in 0..self.src.len() {
            let y = self.src[t].mul(x, g);
            let fy = self.dst[t].mul(self.map[x], self.map[g]);
            let cur = self.map[y];
            if cur == NONE {
                if self.used[fy] {
                    return false;
                }
                self.map[y] = fy;
                self.used[fy] = true;
                self.domain.push(y);
            } else if cur != fy {
                return false;
            }
        }
        true
    }

    fn undo(&mut self, (dom, act): (usize, usize)) {
        for &y in &self.domain[dom..] {
            self.used[self.map[y]] = false;
            self.map[y] = NONE;
        }
        self.domain.truncate(dom);
        self.active.truncate(act);
    }
}
