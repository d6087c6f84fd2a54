use std::collections::{HashSet, VecDeque};

use crate::ffla::prime_factors;

use super::{commutator_subgroup, generating_set, FiniteGroup, GroupError, Subgroup};

/// Conjugacy classes with power maps. Classes are ordered by their least
/// element, so class 0 is the identity class.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    /// Least element of each class.
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub class_of: Vec<usize>,
    /// `power_maps[c][m]` is the class of `rep^m`, for `0 ≤ m < exponent`.
    pub power_maps: Vec<Vec<usize>>,
    /// Order of each element.
    pub element_orders: Vec<usize>,
    pub exponent: usize,
    /// Class of the inverses.
    pub inverse_class: Vec<usize>,
}

impl ConjugacyData {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn class_order(&self, c: usize) -> usize {
        self.element_orders[self.reps[c]]
    }

    /// Elements of class `c`, ascending.
    pub fn members(&self, c: usize) -> Vec<usize> {
        (0..self.class_of.len()).filter(|&x| self.class_of[x] == c).collect()
    }

    pub fn centralizer_order(&self, c: usize) -> usize {
        self.class_of.len() / self.sizes[c]
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ConjugacyData {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        class_of[x] = c;
        let mut size = 1;
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for &t in g.generators() {
                let z = g.conj(y, t);
                if class_of[z] == usize::MAX {
                    class_of[z] = c;
                    size += 1;
                    queue.push_back(z);
                }
            }
        }
        sizes.push(size);
    }
    let element_orders: Vec<usize> = (0..n).map(|x| g.element_order(x)).collect();
    let exponent = element_orders.iter().copied().fold(1, super::lcm);
    let power_maps = reps
        .iter()
        .map(|&x| {
            let mut out = Vec::with_capacity(exponent);
            let mut y = 0;
            for _ in 0..exponent {
                out.push(class_of[y]);
                y = g.mul(y, x);
            }
            out
        })
        .collect();
    let inverse_class = reps.iter().map(|&x| class_of[g.inv(x)]).collect();
    ConjugacyData { reps, sizes, class_of, power_maps, element_orders, exponent, inverse_class }
}

/// Structural invariants used by the hypothesis checks.
#[derive(Clone, Debug)]
pub struct GroupInvariants {
    pub order: usize,
    pub center: Subgroup,
    pub derived: Subgroup,
    /// `G = γ_1 ≥ γ_2 ≥ …` down to the point where it stabilizes.
    pub lower_central_series: Vec<Subgroup>,
    /// `Some(c)` when `γ_{c+1} = 1`; `None` when the series stalls above 1.
    pub nilpotency_class: Option<usize>,
    pub exponent: usize,
    /// Present for prime-power orders and for orders up to 200.
    pub frattini: Option<Subgroup>,
}

pub fn group_invariants(g: &FiniteGroup) -> GroupInvariants {
    let whole = Subgroup::whole(g);
    let mut series = vec![whole.clone()];
    loop {
        let next = commutator_subgroup(g, series.last().unwrap(), &whole);
        if next.order() == series.last().unwrap().order() {
            break;
        }
        let done = next.is_trivial();
        series.push(next);
        if done {
            break;
        }
    }
    let nilpotency_class = if series.last().unwrap().is_trivial() { Some(series.len() - 1) } else { None };
    let derived = series.get(1).cloned().unwrap_or_else(|| series[0].clone());
    GroupInvariants {
        order: g.order(),
        center: super::center(g),
        derived,
        lower_central_series: series,
        nilpotency_class,
        exponent: g.exponent(),
        frattini: frattini_subgroup(g).ok(),
    }
}

/// `Some(q)` when `n` is a positive power of the prime `q`.
pub fn prime_power(n: usize) -> Option<usize> {
    let f = prime_factors(n as u64);
    if f.len() == 1 {
        Some(f[0] as usize)
    } else {
        None
    }
}

/// Φ(G). Uses `G′·G^q` for `q`-groups; otherwise falls back to intersecting
/// maximal subgroups, for orders up to 200.
pub fn frattini_subgroup(g: &FiniteGroup) -> Result<Subgroup, GroupError> {
    if g.order() == 1 {
        return Ok(Subgroup::trivial(g));
    }
    if let Some(q) = prime_power(g.order()) {
        let whole = Subgroup::whole(g);
        let derived = commutator_subgroup(g, &whole, &whole);
        let mut gens = generating_set(g, &derived);
        for x in 0..g.order() {
            let y = g.pow(x, q);
            if y != 0 {
                gens.push(y);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        return Ok(Subgroup::generated(g, &gens));
    }
    if g.order() <= 200 {
        return Ok(brute_force_frattini(g));
    }
    Err(GroupError::Unsupported(format!(
        "Frattini subgroup of a group of order {} that is not a prime power",
        g.order()
    )))
}

/// Intersection of all maximal subgroups, found by enumerating the subgroup
/// lattice. Exponential in general; only for small groups.
pub fn brute_force_frattini(g: &FiniteGroup) -> Subgroup {
    let n = g.order();
    let whole = Subgroup::whole(g);
    if n == 1 {
        return whole;
    }
    let cyclics: Vec<Subgroup> = {
        let mut seen = HashSet::new();
        (0..n).map(|x| Subgroup::generated(g, &[x])).filter(|s| seen.insert(s.elements().to_vec())).collect()
    };
    let mut all: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier: Vec<Subgroup> = cyclics.clone();
    for s in &frontier {
        all.insert(s.elements().to_vec());
    }
    while let Some(s) = frontier.pop() {
        for c in &cyclics {
            if c.is_subgroup_of(&s) {
                continue;
            }
            let mut gens = generating_set(g, &s);
            gens.extend(generating_set(g, c));
            let t = Subgroup::generated(g, &gens);
            if all.insert(t.elements().to_vec()) {
                frontier.push(t);
            }
        }
    }
    let proper: Vec<Vec<usize>> = all.into_iter().filter(|e| e.len() < n).collect();
    let maximal = proper
        .iter()
        .filter(|m| !proper.iter().any(|o| o.len() > m.len() && m.iter().all(|x| o.binary_search(x).is_ok())));
    let mut inter = vec![true; n];
    for m in maximal {
        let mut member = vec![false; n];
        for &x in m {
            member[x] = true;
        }
        for x in 0..n {
            inter[x] &= member[x];
        }
    }
    let els: Vec<usize> = (0..n).filter(|&x| inter[x]).collect();
    Subgroup::from_elements(g, &els).expect("intersection of subgroups")
}
