//! Maximum-cardinality disjoint subfamily by branch and bound.
//!
//! The family is first split into connected components (sets linked by a
//! shared element); components are solved independently. Within a component
//! the search branches over sets in input order, include-first, and only
//! records strictly larger packings. So the first maximum reached is the
//! lexicographically smallest index selection, and the union over
//! components is lexicographically smallest overall. A greedy packing (sets
//! by ascending size) gives the initial lower bound. The upper bound at a
//! node is the smaller of the number of remaining sets still disjoint from
//! the chosen ones and the largest `k` whose `k` smallest such sets fit in
//! the elements they cover.

use std::collections::HashMap;

use crate::pattern::Block;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    pub count: usize,
    /// Ascending indices into the input family.
    pub selection: Vec<usize>,
}

pub fn max_disjoint_packing(sets: &[Block]) -> Packing {
    let mut selection = Vec::new();
    for component in components(sets) {
        selection.extend(Component::new(sets, &component).solve());
    }
    selection.sort_unstable();
    Packing { count: selection.len(), selection }
}

/// Greedy disjoint family over sets in ascending size order (ties by index).
pub fn greedy_packing(sets: &[Block]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| (sets[i].len(), i));
    let mut used = std::collections::HashSet::new();
    let mut picked = Vec::new();
    for i in order {
        if sets[i].indices().iter().all(|e| !used.contains(e)) {
            used.extend(sets[i].indices().iter().copied());
            picked.push(i);
        }
    }
    picked.sort_unstable();
    picked
}

fn components(sets: &[Block]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..sets.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (k, s) in sets.iter().enumerate() {
        for &e in s.indices() {
            match owner.get(&e) {
                Some(&o) => {
                    let (a, b) = (find(&mut parent, o), find(&mut parent, k));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
                None => {
                    owner.insert(e, k);
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for k in 0..sets.len() {
        let r = find(&mut parent, k);
        groups.entry(r).or_default().push(k);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort_unstable_by_key(|g| g[0]);
    out
}

/// One connected component with its sets encoded as bitsets over local element ids.
struct Component {
    ids: Vec<usize>,
    masks: Vec<Vec<u64>>,
    sizes: Vec<usize>,
    max_size: usize,
    words: usize,
}

impl Component {
    fn new(sets: &[Block], ids: &[usize]) -> Self {
        let mut local: HashMap<usize, usize> = HashMap::new();
        for &k in ids {
            for &e in sets[k].indices() {
                let next = local.len();
                local.entry(e).or_insert(next);
            }
        }
        let words = local.len().div_ceil(64).max(1);
        let masks = ids
            .iter()
            .map(|&k| {
                let mut m = vec![0u64; words];
                for e in sets[k].indices() {
                    let l = local[e];
                    m[l / 64] |= 1 << (l % 64);
                }
                m
            })
            .collect();
        let sizes: Vec<usize> = ids.iter().map(|&k| sets[k].len()).collect();
        let max_size = sizes.iter().copied().max().unwrap_or(0);
        Component { ids: ids.to_vec(), masks, sizes, max_size, words }
    }

    fn solve(&self) -> Vec<usize> {
        if self.ids.len() == 1 {
            return self.ids.clone();
        }
        let local_sets: Vec<usize> = (0..self.ids.len()).collect();
        let greedy = self.greedy_count(&local_sets);
        let mut search = Search {
            comp: self,
            lower: greedy,
            best: None,
            chosen: Vec::new(),
            used: vec![0; self.words],
        };
        search.dfs(0);
        let best = search.best.expect("a packing of at least the greedy size exists");
        best.into_iter().map(|l| self.ids[l]).collect()
    }

    fn greedy_count(&self, order: &[usize]) -> usize {
        let mut by_size = order.to_vec();
        by_size.sort_by_key(|&l| (popcount(&self.masks[l]), l));
        let mut used = vec![0u64; self.words];
        let mut count = 0;
        for l in by_size {
            if disjoint(&used, &self.masks[l]) {
                or_into(&mut used, &self.masks[l]);
                count += 1;
            }
        }
        count
    }
}

struct Search<'a> {
    comp: &'a Component,
    lower: usize,
    best: Option<Vec<usize>>,
    chosen: Vec<usize>,
    used: Vec<u64>,
}

impl Search<'_> {
    fn dfs(&mut self, pos: usize) {
        let m = self.comp.masks.len();
        let mut compatible = 0;
        let mut union = vec![0u64; self.comp.words];
        let mut by_size = vec![0usize; self.comp.max_size + 1];
        for l in pos..m {
            if disjoint(&self.used, &self.comp.masks[l]) {
                compatible += 1;
                or_into(&mut union, &self.comp.masks[l]);
                by_size[self.comp.sizes[l]] += 1;
            }
        }
        let upper = self.chosen.len() + fitting(&by_size, popcount(&union) as usize);
        let best_len = self.best.as_ref().map(Vec::len);
        if upper < self.lower || best_len.is_some_and(|b| upper <= b) {
            return;
        }
        if compatible == 0 {
            // leaf; upper == chosen.len() beats best and reaches the greedy bound
            self.best = Some(self.chosen.clone());
            return;
        }
        let Some(next) = (pos..m).find(|&l| disjoint(&self.used, &self.comp.masks[l])) else {
            unreachable!("compatible > 0");
        };
        let saved = self.used.clone();
        or_into(&mut self.used, &self.comp.masks[next]);
        self.chosen.push(next);
        self.dfs(next + 1);
        self.chosen.pop();
        self.used = saved;
        self.dfs(next + 1);
    }
}

/// Largest `k` such that the `k` smallest sets (counted by size) use at
/// most `room` elements.
fn fitting(by_size: &[usize], room: usize) -> usize {
    let (mut k, mut room) = (0, room);
    for (size, &count) in by_size.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let take = room.checked_div(size).map_or(count, |fit| count.min(fit));
        k += take;
        room -= take * size;
        if take < count {
            break;
        }
    }
    k
}

fn popcount(m: &[u64]) -> u32 {
    m.iter().map(|w| w.count_ones()).sum()
}

fn disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

fn or_into(a: &mut [u64], b: &[u64]) {
    a.iter_mut().zip(b).for_each(|(x, y)| *x |= y);
}
