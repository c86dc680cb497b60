//! Small independent reference implementations used only by tests. They are
//! deliberately naive: exponential or quadratic, no shared code with the
//! library.

#![allow(dead_code)]

/// Determinant by permutation expansion.
pub fn permutation_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total: i128 = 0;
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &[Vec<i64>], total: &mut i128) {
    let n = perm.len();
    if k == n {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let prod: i128 = (0..n).map(|i| m[i][perm[i]] as i128).product();
        *total += if inversions % 2 == 0 { prod } else { -prod };
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

/// Maximum matching size by trying every edge subset in order.
pub fn brute_max_matching(n: usize, edges: &[(usize, usize)]) -> usize {
    fn go(i: usize, edges: &[(usize, usize)], used: &mut Vec<bool>) -> usize {
        if i == edges.len() {
            return 0;
        }
        let skip = go(i + 1, edges, used);
        let (u, v) = edges[i];
        if used[u] || used[v] {
            return skip;
        }
        used[u] = true;
        used[v] = true;
        let take = 1 + go(i + 1, edges, used);
        used[u] = false;
        used[v] = false;
        skip.max(take)
    }
    go(0, edges, &mut vec![false; n])
}

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Component id of every vertex by iterative DFS.
pub fn component_ids(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let adj = adjacency(n, edges);
    let mut id = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if id[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        id[s] = next;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if id[w] == usize::MAX {
                    id[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    id
}

pub fn component_count(n: usize, edges: &[(usize, usize)]) -> usize {
    component_ids(n, edges)
        .into_iter()
        .max()
        .map_or(0, |m| m + 1)
}

pub fn brute_triangle(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut m = vec![vec![false; n]; n];
    for &(u, v) in edges {
        m[u][v] = true;
        m[v][u] = true;
    }
    (0..n).any(|a| (a + 1..n).any(|b| m[a][b] && (b + 1..n).any(|c| m[a][c] && m[b][c])))
}

/// Odd cycle test by trying to 2-color each component from its first vertex.
pub fn brute_bipartite(n: usize, edges: &[(usize, usize)]) -> bool {
    let adj = adjacency(n, edges);
    let mut color: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                match color[w] {
                    None => {
                        color[w] = Some(!color[v].unwrap());
                        stack.push(w);
                    }
                    Some(c) if c == color[v].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// At least one edge, all degrees even, and all edges in one component.
pub fn brute_eulerian(n: usize, edges: &[(usize, usize)]) -> bool {
    if edges.is_empty() {
        return false;
    }
    let mut deg = vec![0; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    if deg.iter().any(|d| d % 2 == 1) {
        return false;
    }
    let ids = component_ids(n, edges);
    let c = ids[edges[0].0];
    edges.iter().all(|&(u, _)| ids[u] == c)
}
