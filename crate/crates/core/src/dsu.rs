//! Disjoint-set forest with cheap whole-structure reset, used by the state
//! enumerator (one pass per state mask).

use alloc::vec::Vec;

pub(crate) struct DisjointSet {
    parent: Vec<u32>,
    size: Vec<u32>,
    components: usize,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            size: alloc::vec![1; n],
            components: n,
        }
    }

    /// Restores every element to its own singleton set.
    pub fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
        self.size.fill(1);
        self.components = self.parent.len();
    }

    pub fn find(&mut self, u: usize) -> usize {
        let mut root = u;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        // Path compression.
        let mut cur = u;
        while cur != root {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    /// Unites the sets of `u` and `v`; self-unions are no-ops.
    pub fn union(&mut self, u: usize, v: usize) {
        let mut a = self.find(u);
        let mut b = self.find(v);
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a as u32;
        self.size[a] += self.size[b];
        self.components -= 1;
    }

    pub fn components(&self) -> usize {
        self.components
    }
}
