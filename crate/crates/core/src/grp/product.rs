use super::{FiniteGroup, GroupError, Provenance, Subgroup, ORDER_CAP};

/// A map between group tables, stored as an image list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    pub source_order: usize,
    pub target_order: usize,
    pub images: Vec<usize>,
}

impl Homomorphism {
    /// Checks `φ(xy) = φ(x)φ(y)` on all pairs.
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, images: Vec<usize>) -> Result<Self, GroupError> {
        if images.len() != source.order() || images.iter().any(|&y| y >= target.order()) {
            return Err(GroupError::NotHomomorphism("image list has the wrong shape".into()));
        }
        if images[0] != 0 {
            return Err(GroupError::NotHomomorphism("identity is not sent to the identity".into()));
        }
        for x in 0..source.order() {
            for y in 0..source.order() {
                if images[source.mul(x, y)] != target.mul(images[x], images[y]) {
                    return Err(GroupError::NotHomomorphism(format!("fails on the pair ({x}, {y})")));
                }
            }
        }
        Ok(Homomorphism { source_order: source.order(), target_order: target.order(), images })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn kernel(&self, source: &FiniteGroup) -> Subgroup {
        let els: Vec<usize> = (0..self.source_order).filter(|&x| self.images[x] == 0).collect();
        Subgroup::from_elements(source, &els).expect("kernels are subgroups")
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_order];
        for &y in &self.images {
            hit[y] = true;
        }
        hit.into_iter().all(|b| b)
    }
}

/// `G/N` together with the projection. Coset `i` is represented by the least
/// element in it, and cosets are numbered in order of those representatives.
pub fn quotient_group(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, Homomorphism), GroupError> {
    if !n.is_normal_in(g) {
        return Err(GroupError::NotNormal("quotient by a non-normal subgroup".into()));
    }
    let mut coset = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset[x] == usize::MAX {
            let c = reps.len();
            reps.push(x);
            for &k in n.elements() {
                coset[g.mul(x, k)] = c;
            }
        }
    }
    let m = reps.len();
    let mut table = vec![0u16; m * m];
    for i in 0..m {
        for j in 0..m {
            table[i * m + j] = coset[g.mul(reps[i], reps[j])] as u16;
        }
    }
    let mut gens: Vec<usize> = g.generators().iter().map(|&x| coset[x]).filter(|&c| c != 0).collect();
    gens.dedup();
    let mut uniq = Vec::new();
    for c in gens {
        if !uniq.contains(&c) {
            uniq.push(c);
        }
    }
    let q = FiniteGroup::from_table(m, table, uniq, Provenance::Cosets(reps))?;
    let proj = Homomorphism::new(g, &q, coset)?;
    Ok((q, proj))
}

/// Right action of `H` on `N` by automorphisms: `n ↦ n^h`.
#[derive(Clone, Debug)]
pub enum Action {
    Trivial,
    /// One automorphism of `N` per generator of `H`, in generator order,
    /// as an image list.
    Automorphisms(Vec<Vec<usize>>),
}

/// Index of the complement element `h` inside a product built by
/// [`product_group`] with normal factor of order `n_order`.
pub fn complement_element(h: usize, n_order: usize) -> usize {
    h * n_order
}

fn is_automorphism(n: &FiniteGroup, map: &[usize]) -> bool {
    if map.len() != n.order() {
        return false;
    }
    let mut hit = vec![false; n.order()];
    for &y in map {
        if y >= n.order() || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    (0..n.order()).all(|x| (0..n.order()).all(|y| map[n.mul(x, y)] == n.mul(map[x], map[y])))
}

/// Semidirect product `N ⋊ H`. The element with index `h·|N| + n` stands for
/// the product `n·h`, so `N` keeps its indices and `h` sits at
/// [`complement_element`]. Multiplication: `(n₁h₁)(n₂h₂) = n₁·n₂^{h₁⁻¹}·h₁h₂`.
pub fn product_group(n: &FiniteGroup, h: &FiniteGroup, action: &Action) -> Result<FiniteGroup, GroupError> {
    let total = n.order() * h.order();
    if total > ORDER_CAP {
        return Err(GroupError::OrderCap { cap: ORDER_CAP, reached: total });
    }
    let maps = extend_action(n, h, action)?;
    let no = n.order();
    let mut table = vec![0u16; total * total];
    for x in 0..total {
        let (h1, n1) = (x / no, x % no);
        let twist = &maps[h.inv(h1)];
        for y in 0..total {
            let (h2, n2) = (y / no, y % no);
            let nn = n.mul(n1, twist[n2]);
            let hh = h.mul(h1, h2);
            table[x * total + y] = (hh * no + nn) as u16;
        }
    }
    let mut gens: Vec<usize> = n.generators().to_vec();
    gens.extend(h.generators().iter().map(|&g| g * no));
    let pairs = (0..total).map(|x| (x % no, x / no)).collect();
    FiniteGroup::from_table(total, table, gens, Provenance::Pairs(pairs))
}

pub fn direct_product(n: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    product_group(n, h, &Action::Trivial)
}

/// Extends per-generator automorphisms to every element of `H` along
/// generator words, then checks that the result is a well-defined right
/// action: `σ_{hg} = σ_h` followed by `σ_g` for every `h` and generator `g`.
fn extend_action(n: &FiniteGroup, h: &FiniteGroup, action: &Action) -> Result<Vec<Vec<usize>>, GroupError> {
    let id: Vec<usize> = (0..n.order()).collect();
    let gen_maps = match action {
        Action::Trivial => return Ok(vec![id; h.order()]),
        Action::Automorphisms(maps) => maps,
    };
    if gen_maps.len() != h.generators().len() {
        return Err(GroupError::Construction(format!(
            "{} action maps for {} generators",
            gen_maps.len(),
            h.generators().len()
        )));
    }
    for (i, m) in gen_maps.iter().enumerate() {
        if !is_automorphism(n, m) {
            return Err(GroupError::NotAutomorphism(format!("action of generator {i}")));
        }
    }
    let mut maps: Vec<Option<Vec<usize>>> = vec![None; h.order()];
    maps[0] = Some(id);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (gi, &g) in h.generators().iter().enumerate() {
            let y = h.mul(x, g);
            if maps[y].is_none() {
                let prev = maps[x].as_ref().unwrap();
                maps[y] = Some(prev.iter().map(|&e| gen_maps[gi][e]).collect());
                queue.push_back(y);
            }
        }
    }
    let maps: Vec<Vec<usize>> = maps.into_iter().map(|m| m.expect("generators generate")).collect();
    for x in 0..h.order() {
        for (gi, &g) in h.generators().iter().enumerate() {
            let y = h.mul(x, g);
            if (0..n.order()).any(|e| maps[y][e] != gen_maps[gi][maps[x][e]]) {
                return Err(GroupError::Construction(
                    "action does not respect the relations of the acting group".into(),
                ));
            }
        }
    }
    Ok(maps)
}
