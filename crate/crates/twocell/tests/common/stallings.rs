//! A deliberately naive Stallings-graph implementation used as an oracle for free groups.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use twocell::Word;

/// Labelled directed edges `(from, label, to)`, labels `1..=k`; vertex 0 is the basepoint.
#[derive(Clone, Debug)]
pub struct Graph {
    pub vertices: usize,
    pub edges: BTreeSet<(usize, i64, usize)>,
}

fn signed(w: &Word) -> Vec<i64> {
    w.letters().iter().map(|l| if l.inv { -(l.gen as i64 + 1) } else { l.gen as i64 + 1 }).collect()
}

impl Graph {
    pub fn bouquet(words: &[Word]) -> Self {
        let mut g = Graph { vertices: 1, edges: BTreeSet::new() };
        for w in words {
            let s = signed(w);
            if s.is_empty() {
                continue;
            }
            let mut at = 0;
            for (i, &l) in s.iter().enumerate() {
                let to = if i + 1 == s.len() {
                    0
                } else {
                    g.vertices += 1;
                    g.vertices - 1
                };
                if l > 0 {
                    g.edges.insert((at, l, to));
                } else {
                    g.edges.insert((to, -l, at));
                }
                at = to;
            }
        }
        g.fold();
        g
    }

    fn step(&self, v: usize, l: i64) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, lab, b)| {
                if l > 0 && a == v && lab == l {
                    Some(b)
                } else if l < 0 && b == v && lab == -l {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    fn merge(&mut self, keep: usize, gone: usize) {
        let ren = |v: usize| if v == gone { keep } else { v };
        self.edges = self.edges.iter().map(|&(a, l, b)| (ren(a), l, ren(b))).collect();
    }

    fn fold(&mut self) {
        'outer: loop {
            for v in 0..self.vertices {
                for l in self.edges.iter().map(|e| e.1).collect::<BTreeSet<_>>() {
                    for l in [l, -l] {
                        let t = self.step(v, l);
                        if let [x, y, ..] = t[..] {
                            let (keep, gone) = if x < y { (x, y) } else { (y, x) };
                            if keep != gone {
                                self.merge(keep, gone);
                                continue 'outer;
                            }
                        }
                    }
                }
            }
            break;
        }
        let live: BTreeSet<usize> =
            std::iter::once(0).chain(self.edges.iter().flat_map(|&(a, _, b)| [a, b])).collect();
        let index: BTreeMap<usize, usize> = live.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        self.vertices = live.len();
        self.edges = self.edges.iter().map(|&(a, l, b)| (index[&a], l, index[&b])).collect();
    }

    pub fn rank(&self) -> usize {
        self.edges.len() + 1 - self.vertices
    }

    pub fn accepts(&self, w: &Word) -> bool {
        let mut v = 0;
        for l in signed(w) {
            match self.step(v, l).first() {
                Some(&u) => v = u,
                None => return false,
            }
        }
        v == 0
    }

    /// Rank of the basepoint component of the product graph.
    pub fn intersection_rank(&self, other: &Graph) -> usize {
        let mut seen = BTreeSet::from([(0, 0)]);
        let mut queue = VecDeque::from([(0, 0)]);
        let mut edges = 0;
        while let Some((u, v)) = queue.pop_front() {
            for &(a, l, b) in self.edges.iter().filter(|e| e.0 == u) {
                debug_assert_eq!(a, u);
                for &(_, _, d) in other.edges.iter().filter(|e| e.0 == v && e.1 == l) {
                    edges += 1;
                    if seen.insert((b, d)) {
                        queue.push_back((b, d));
                    }
                }
            }
            for &(a, l, _) in self.edges.iter().filter(|e| e.2 == u) {
                for &(c, _, _) in other.edges.iter().filter(|e| e.2 == v && e.1 == l) {
                    if seen.insert((a, c)) {
                        queue.push_back((a, c));
                    }
                }
            }
        }
        edges + 1 - seen.len()
    }
}
