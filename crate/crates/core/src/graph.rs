//! Small simple graphs and the alternating independent-set sum
//! `f(G) = sum over independent sets C of (-1)^|C|`.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

/// Simple undirected graph on `0..n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { adj: vec![BTreeSet::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Ignores loops; parallel edges collapse.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, a) in self.adj.iter().enumerate() {
            out.extend(a.iter().filter(|v| **v > u).map(|v| (u, *v)));
        }
        out
    }

    /// Subgraph induced on `keep`, relabeled in the order given.
    pub fn induced(&self, keep: &[usize]) -> SimpleGraph {
        let index: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut g = SimpleGraph::new(keep.len());
        for (i, v) in keep.iter().enumerate() {
            for w in &self.adj[*v] {
                if let Some(j) = index.get(w) {
                    g.add_edge(i, *j);
                }
            }
        }
        g
    }

    pub fn without_vertex(&self, v: usize) -> SimpleGraph {
        let keep: Vec<usize> = (0..self.adj.len()).filter(|u| *u != v).collect();
        self.induced(&keep)
    }

    /// Removes `v` together with its neighbors.
    pub fn without_closed_neighborhood(&self, v: usize) -> SimpleGraph {
        let keep: Vec<usize> = (0..self.adj.len()).filter(|u| *u != v && !self.adj[v].contains(u)).collect();
        self.induced(&keep)
    }

    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let n = self.adj.len();
        let mut g = self.clone();
        g.adj.extend(other.adj.iter().map(|a| a.iter().map(|v| v + n).collect()));
        g
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in &self.adj[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.adj.len();
        let mut color = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap_or(false);
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> SimpleGraph {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, *p));
        }
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn to_dot(&self, name: &str, labels: &[String]) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in 0..self.adj.len() {
            let label = labels.get(v).cloned().unwrap_or_else(|| v.to_string());
            let _ = writeln!(s, "  v{v} [label=\"{label}\"];");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  v{u} -- v{v};");
        }
        s.push_str("}\n");
        s
    }
}

/// Adjacency bitmasks, at most 128 vertices.
type Masks = Vec<u128>;

fn to_masks(g: &SimpleGraph) -> Masks {
    assert!(g.vertex_count() <= 128, "f is evaluated on at most 128 vertices");
    g.adj.iter().map(|a| a.iter().fold(0u128, |m, v| m | 1 << v)).collect()
}

/// Relabels a connected vertex set by (degree, sorted neighbor degrees,
/// original index) and encodes the relabeled adjacency. Equal keys mean
/// identical relabeled graphs, hence isomorphic ones.
fn component_key(masks: &Masks, verts: &[usize]) -> Vec<u128> {
    let set: u128 = verts.iter().fold(0, |m, v| m | 1 << v);
    let deg = |v: usize| (masks[v] & set).count_ones();
    let mut order: Vec<(u32, Vec<u32>, usize)> = verts
        .iter()
        .map(|&v| {
            let mut nd: Vec<u32> = verts.iter().filter(|w| masks[v] >> **w & 1 == 1).map(|w| deg(*w)).collect();
            nd.sort_unstable();
            (deg(v), nd, v)
        })
        .collect();
    order.sort();
    let pos: HashMap<usize, usize> = order.iter().enumerate().map(|(i, o)| (o.2, i)).collect();
    let mut key = Vec::with_capacity(verts.len() + 1);
    key.push(verts.len() as u128);
    for (_, _, v) in &order {
        let mut row = 0u128;
        for w in verts {
            if masks[*v] >> w & 1 == 1 {
                row |= 1 << pos[w];
            }
        }
        key.push(row);
    }
    key
}

struct FEval<'a> {
    masks: &'a Masks,
    memo: HashMap<Vec<u128>, i128>,
}

impl FEval<'_> {
    fn components(&self, set: u128) -> Vec<Vec<usize>> {
        let mut rest = set;
        let mut out = Vec::new();
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            let mut comp = 1u128 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.masks[v] & set & !comp;
                comp |= new;
                frontier |= new;
            }
            rest &= !comp;
            out.push((0..128).filter(|i| comp >> i & 1 == 1).collect());
        }
        out
    }

    fn eval(&mut self, set: u128) -> i128 {
        let mut total = 1i128;
        for comp in self.components(set) {
            let v = self.eval_connected(&comp);
            if v == 0 {
                return 0;
            }
            total *= v;
        }
        total
    }

    fn eval_connected(&mut self, verts: &[usize]) -> i128 {
        match verts.len() {
            1 => return 0,
            2 => return -1,
            _ => {}
        }
        let key = component_key(self.masks, verts);
        if let Some(v) = self.memo.get(&key) {
            return *v;
        }
        let set: u128 = verts.iter().fold(0, |m, v| m | 1 << v);
        let v = *verts
            .iter()
            .max_by_key(|v| ((self.masks[**v] & set).count_ones(), std::cmp::Reverse(**v)))
            .unwrap_or(&verts[0]);
        let without_v = set & !(1 << v);
        let without_nv = without_v & !self.masks[v];
        let value = self.eval(without_v) - self.eval(without_nv);
        self.memo.insert(key, value);
        value
    }
}

/// `f` by the deletion recursion `f(G) = f(G - v) - f(G - N[v])`, where
/// `N[v]` is `v` with its neighbors, multiplied over components.
pub fn f_value(g: &SimpleGraph) -> i128 {
    if g.is_empty() {
        return 1;
    }
    let masks = to_masks(g);
    let all = if g.vertex_count() == 128 { u128::MAX } else { (1u128 << g.vertex_count()) - 1 };
    FEval { masks: &masks, memo: HashMap::new() }.eval(all)
}

/// `f` by enumerating all vertex subsets.
pub fn f_bruteforce(g: &SimpleGraph) -> i128 {
    let n = g.vertex_count();
    assert!(n <= 24, "enumeration is limited to 24 vertices");
    let masks: Vec<u32> = to_masks(g).into_iter().map(|m| m as u32).collect();
    let mut total = 0i128;
    for s in 0u32..(1u32 << n) {
        let independent = (0..n).all(|v| s >> v & 1 == 0 || masks[v] & s == 0);
        if independent {
            total += if s.count_ones() % 2 == 0 { 1 } else { -1 };
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(f_value(&SimpleGraph::new(0)), 1);
        assert_eq!(f_value(&SimpleGraph::new(1)), 0);
        assert_eq!(f_value(&SimpleGraph::from_edges(2, &[(0, 1)])), -1);
        let k22 = SimpleGraph::complete_multipartite(&[2, 2]);
        assert_eq!(k22.edge_count(), 4);
        assert_eq!(f_value(&k22), -1);
        assert_eq!(f_bruteforce(&k22), -1);
    }

    #[test]
    fn paths_and_cycles() {
        // f of a path repeats with period 6: 1, 0, -1, -1, 0, 1, ...
        let expected = [1, 0, -1, -1, 0, 1, 1, 0, -1];
        for (n, want) in expected.iter().enumerate() {
            let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
            let p = SimpleGraph::from_edges(n, &edges);
            assert_eq!(f_value(&p), *want, "path {n}");
            assert_eq!(f_bruteforce(&p), *want);
        }
        let c6 = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(f_value(&c6), f_bruteforce(&c6));
    }

    #[test]
    fn structure_helpers() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]);
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(g.is_bipartite());
        let tri = SimpleGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(!tri.is_bipartite());
        assert_eq!(tri.without_closed_neighborhood(0).vertex_count(), 0);
        assert!(tri.to_dot("t", &[]).contains("v0 -- v1"));
    }
}
