/// Disjoint-set forest whose representative is always the minimum element of
/// its set, so component labels are canonical.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        // path compression
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns true if the sets were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        // min-root linking keeps the representative canonical
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// `labels()[v]` is the minimum vertex in `v`'s set.
    pub fn labels(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|v| self.find(v)).collect()
    }

    pub fn count(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&v| self.find(v) == v)
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representative_is_minimum() {
        let mut uf = UnionFind::new(6);
        uf.union(5, 3);
        uf.union(3, 4);
        uf.union(2, 0);
        assert_eq!(uf.labels(), vec![0, 1, 0, 3, 3, 3]);
        assert_eq!(uf.count(), 3);
        assert!(!uf.union(4, 5));
        assert!(uf.same(0, 2));
    }
}
