use super::{group_invariants, FiniteGroup, GroupError, Subgroup};

/// `A = A_p × A_r × A_{p,r}'` as an internal direct product.
#[derive(Clone, Debug)]
pub struct PrDecomposition {
    pub p: usize,
    pub r: usize,
    pub a_p: Subgroup,
    pub a_r: Subgroup,
    pub a_rest: Subgroup,
    pub a_p_cyclic: bool,
    pub a_r_cyclic: bool,
}

fn is_power_of(mut n: usize, q: usize) -> bool {
    while n.is_multiple_of(q) {
        n /= q;
    }
    n == 1
}

/// Elements whose order satisfies `pred`, if they form a subgroup.
fn element_set(g: &FiniteGroup, pred: impl Fn(usize) -> bool) -> Option<Subgroup> {
    let els: Vec<usize> = (0..g.order()).filter(|&x| pred(g.element_order(x))).collect();
    Subgroup::from_elements(g, &els).ok()
}

pub fn elements_of_order_dividing(g: &FiniteGroup, m: usize) -> Vec<usize> {
    (0..g.order()).filter(|&x| m.is_multiple_of(g.element_order(x))).collect()
}

/// A subgroup is cyclic iff it contains an element of its own order.
pub fn is_cyclic(g: &FiniteGroup, s: &Subgroup) -> bool {
    s.elements().iter().any(|&x| g.element_order(x) == s.order())
}

/// Splits `A` into its `p`-elements, `r`-elements and `{p,r}′`-elements when
/// these three sets are subgroups forming an internal direct product.
/// Returns `Err` with the first failure otherwise; nilpotency is not required.
pub fn pr_decomposition(a: &FiniteGroup, p: usize, r: usize) -> Result<PrDecomposition, String> {
    let a_p = element_set(a, |o| is_power_of(o, p)).ok_or_else(|| format!("{p}-elements do not form a subgroup"))?;
    let a_r = element_set(a, |o| is_power_of(o, r)).ok_or_else(|| format!("{r}-elements do not form a subgroup"))?;
    let a_rest = element_set(a, |o| o % p != 0 && o % r != 0)
        .ok_or_else(|| format!("{{{p},{r}}}'-elements do not form a subgroup"))?;
    let parts = [&a_p, &a_r, &a_rest];
    for i in 0..3 {
        for j in i + 1..3 {
            for &x in parts[i].elements() {
                for &y in parts[j].elements() {
                    if a.mul(x, y) != a.mul(y, x) {
                        return Err(format!("elements {x} and {y} of different parts do not commute"));
                    }
                }
            }
        }
    }
    if a_p.order() * a_r.order() * a_rest.order() != a.order() {
        return Err("the three parts do not fill the group".into());
    }
    Ok(PrDecomposition { p, r, a_p_cyclic: is_cyclic(a, &a_p), a_r_cyclic: is_cyclic(a, &a_r), a_p, a_r, a_rest })
}

/// Sylow decomposition of a nilpotent group.
pub fn nilpotent_sylow_decomposition(a: &FiniteGroup, p: usize, r: usize) -> Result<PrDecomposition, GroupError> {
    if group_invariants(a).nilpotency_class.is_none() {
        return Err(GroupError::NotNilpotent);
    }
    pr_decomposition(a, p, r).map_err(GroupError::Construction)
}
