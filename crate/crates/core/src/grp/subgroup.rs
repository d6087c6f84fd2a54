use std::collections::VecDeque;

use super::{FiniteGroup, GroupError, Provenance};

/// A subgroup stored as a sorted list of parent indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Subgroup {
    parent_order: usize,
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn trivial(g: &FiniteGroup) -> Self {
        Subgroup { parent_order: g.order(), elements: vec![0] }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup { parent_order: g.order(), elements: (0..g.order()).collect() }
    }

    /// Checks closure before accepting the subset.
    pub fn from_elements(g: &FiniteGroup, elements: &[usize]) -> Result<Self, GroupError> {
        let mut els = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        if els.first() != Some(&0) || els.iter().any(|&x| x >= g.order()) {
            return Err(GroupError::Construction("subset misses the identity or is out of range".into()));
        }
        let mut member = vec![false; g.order()];
        for &x in &els {
            member[x] = true;
        }
        for &x in &els {
            if !member[g.inv(x)] || els.iter().any(|&y| !member[g.mul(x, y)]) {
                return Err(GroupError::Construction("subset is not closed".into()));
            }
        }
        Ok(Subgroup { parent_order: g.order(), elements: els })
    }

    /// Subgroup generated by a list of elements.
    pub fn generated(g: &FiniteGroup, gens: &[usize]) -> Self {
        let mut member = vec![false; g.order()];
        member[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = g.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        Subgroup { parent_order: g.order(), elements: out }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent_order
    }

    pub fn membership(&self) -> Vec<bool> {
        let mut m = vec![false; self.parent_order];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elements = self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup { parent_order: self.parent_order, elements }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// Subgroup generated by both.
    pub fn join(&self, g: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let mut gens = generating_set(g, self);
        gens.extend(generating_set(g, other));
        Subgroup::generated(g, &gens)
    }

    /// Exhaustive normality test against every element of `g`.
    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        self.normalized_by(g, g.generators())
    }

    /// True when conjugation by each of `by` maps the subgroup into itself.
    pub fn normalized_by(&self, g: &FiniteGroup, by: &[usize]) -> bool {
        let member = self.membership();
        by.iter().all(|&t| self.elements.iter().all(|&x| member[g.conj(x, t)]))
    }
}

/// Greedy generating set: scans elements by decreasing order and keeps those
/// not already generated.
pub fn generating_set(g: &FiniteGroup, s: &Subgroup) -> Vec<usize> {
    let mut candidates: Vec<usize> = s.elements().iter().copied().filter(|&x| x != 0).collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut current = Subgroup::trivial(g);
    for x in candidates {
        if current.order() == s.order() {
            break;
        }
        if !current.contains(x) {
            gens.push(x);
            current = Subgroup::generated(g, &gens);
        }
    }
    gens
}

/// `{x ∈ G : xs = sx for all s}`.
pub fn centralizer(g: &FiniteGroup, subset: &[usize]) -> Subgroup {
    let elements = (0..g.order()).filter(|&x| subset.iter().all(|&s| g.mul(x, s) == g.mul(s, x))).collect();
    Subgroup { parent_order: g.order(), elements }
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    centralizer(g, g.generators())
}

/// Smallest normal subgroup containing `subset`.
pub fn normal_closure(g: &FiniteGroup, subset: &[usize]) -> Subgroup {
    let mut gens: Vec<usize> = subset.to_vec();
    loop {
        let s = Subgroup::generated(g, &gens);
        let member = s.membership();
        let mut grew = false;
        for &x in s.elements() {
            for &t in g.generators() {
                let y = g.conj(x, t);
                if !member[y] && !gens.contains(&y) {
                    gens.push(y);
                    grew = true;
                }
            }
        }
        if !grew {
            return s;
        }
    }
}

/// `[H, K]`: generated by commutators of generators, then closed under
/// conjugation by `H` and `K`.
pub fn commutator_subgroup(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Subgroup {
    let hg = generating_set(g, h);
    let kg = generating_set(g, k);
    let mut comms = Vec::new();
    for &x in &hg {
        for &y in &kg {
            let c = g.commutator(x, y);
            if c != 0 && !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    let s = Subgroup::generated(g, &comms);
    normalize_closure(g, s, &hg, &kg)
}

fn normalize_closure(g: &FiniteGroup, mut s: Subgroup, a: &[usize], b: &[usize]) -> Subgroup {
    loop {
        let member = s.membership();
        let mut extra = Vec::new();
        for &x in s.elements() {
            for &t in a.iter().chain(b) {
                let y = g.conj(x, t);
                if !member[y] && !extra.contains(&y) {
                    extra.push(y);
                }
            }
        }
        if extra.is_empty() {
            return s;
        }
        let mut gens = generating_set(g, &s);
        gens.extend(extra);
        s = Subgroup::generated(g, &gens);
    }
}

/// Turns a subgroup into a standalone group. The returned vector maps each
/// new index to its parent index; index order follows the parent.
pub fn subgroup_as_group(g: &FiniteGroup, s: &Subgroup) -> (FiniteGroup, Vec<usize>) {
    let els = s.elements().to_vec();
    let n = els.len();
    let mut local = vec![usize::MAX; g.order()];
    for (i, &x) in els.iter().enumerate() {
        local[x] = i;
    }
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = local[g.mul(els[i], els[j])] as u16;
        }
    }
    let gens = generating_set(g, s).into_iter().map(|x| local[x]).collect();
    let group = FiniteGroup::from_table(n, table, gens, Provenance::Embedded(els.clone()))
        .expect("a subgroup table is a group table");
    (group, els)
}
