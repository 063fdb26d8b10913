//! Double cosets, decomposition data and splitting types as fibre multisets.

use std::collections::BTreeSet;
use std::fmt;

use super::group::{PermGroup, SubgroupHandle};
use super::GroupError;

/// Multiset of residue degrees, stored sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplittingType(Vec<usize>);

impl SplittingType {
    pub fn new(mut entries: Vec<usize>) -> Result<Self, GroupError> {
        if entries.is_empty() || entries.contains(&0) {
            return Err(GroupError::InvalidSplittingType(format!("{entries:?}")));
        }
        entries.sort_unstable();
        Ok(SplittingType(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn count_of(&self, f: usize) -> usize {
        self.0.iter().filter(|&&x| x == f).count()
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Partition of `G` into double cosets `HgK`, ordered by least element.
pub fn double_cosets(
    h: &SubgroupHandle,
    k: &SubgroupHandle,
) -> Result<Vec<Vec<usize>>, GroupError> {
    h.check_parent(k)?;
    let g = h.parent();
    let mut assigned = vec![false; g.order()];
    let mut blocks = Vec::new();
    for x in 0..g.order() {
        if assigned[x] {
            continue;
        }
        let mut block = Vec::new();
        for &a in h.elements() {
            let ax = g.mul(a, x);
            for &b in k.elements() {
                let y = g.mul(ax, b);
                if !assigned[y] {
                    assigned[y] = true;
                    block.push(y);
                }
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    Ok(blocks)
}

/// Decomposition subgroup `D`, inertia subgroup `I` normal in `D`, and `c`
/// with `D = <c> I`.
#[derive(Clone, Debug)]
pub struct DecompositionData {
    d: SubgroupHandle,
    i: SubgroupHandle,
    c: usize,
}

impl DecompositionData {
    pub fn new(d: SubgroupHandle, i: SubgroupHandle, c: usize) -> Result<Self, GroupError> {
        d.check_parent(&i)?;
        let g = d.parent().clone();
        if c >= g.order() || !d.contains(c) {
            return Err(GroupError::InvalidDecomposition("c does not lie in D".into()));
        }
        if !i.is_normal_in(&d) {
            return Err(GroupError::InvalidDecomposition("I is not a normal subgroup of D".into()));
        }
        if g.cyclic(c).product_set(&i).len() != d.order() {
            return Err(GroupError::InvalidDecomposition("<c>I is not all of D".into()));
        }
        Ok(DecompositionData { d, i, c })
    }

    /// Unramified data: `D = <c>`, `I = 1`.
    pub fn unramified(group: &PermGroup, c: usize) -> Self {
        DecompositionData { d: group.cyclic(c), i: group.trivial(), c }
    }

    pub fn decomposition(&self) -> &SubgroupHandle {
        &self.d
    }

    pub fn inertia(&self) -> &SubgroupHandle {
        &self.i
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn group(&self) -> &PermGroup {
        self.d.parent()
    }

    /// `|D/I|`, the order of the image of `c` in `D/I`.
    pub fn residue_order(&self) -> usize {
        self.d.order() / self.i.order()
    }

    /// `<c^e> I`, a subgroup of `D` since `I` is normal in `D`.
    pub fn power_subgroup(&self, e: usize) -> SubgroupHandle {
        let g = self.group();
        let ce = g.pow(self.c, e);
        let mut gens = self.i.generators_hint();
        gens.push(ce);
        g.generated_by(&gens)
    }
}

/// Every `c` in `D` with `<c> I = D`.
pub fn valid_generators(d: &SubgroupHandle, i: &SubgroupHandle) -> Vec<usize> {
    let g = d.parent();
    d.elements()
        .iter()
        .copied()
        .filter(|&c| g.cyclic(c).product_set(i).len() == d.order())
        .collect()
}

/// All valid decomposition data of `G`: every pair `I` normal in `D` with
/// `D/I` cyclic, and one `c` for each distinct cyclic subgroup `<c>` with
/// `<c> I = D`.
pub fn enumerate_decompositions(subgroups: &[SubgroupHandle]) -> Vec<DecompositionData> {
    let mut out = Vec::new();
    for d in subgroups {
        for i in subgroups {
            if i.order() > d.order() || d.order() % i.order() != 0 || !i.is_normal_in(d) {
                continue;
            }
            let g = d.parent();
            let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
            for c in valid_generators(d, i) {
                if seen.insert(g.cyclic(c).elements().to_vec()) {
                    out.push(DecompositionData { d: d.clone(), i: i.clone(), c });
                }
            }
        }
    }
    out
}

fn check_inputs(g_e: &SubgroupHandle, dec: &DecompositionData) -> Result<(), GroupError> {
    g_e.check_parent(&dec.d).map_err(|_| GroupError::ParentMismatch)
}

/// Fibre sizes of `I\G/G_E -> D\G/G_E`, counted in upstairs double cosets.
pub fn splitting_type_from_fibers(
    g_e: &SubgroupHandle,
    dec: &DecompositionData,
) -> Result<SplittingType, GroupError> {
    check_inputs(g_e, dec)?;
    let upstairs = double_cosets(&dec.i, g_e)?;
    let downstairs = double_cosets(&dec.d, g_e)?;
    let g = g_e.parent();
    let mut block_of = vec![usize::MAX; g.order()];
    for (b, block) in downstairs.iter().enumerate() {
        for &x in block {
            block_of[x] = b;
        }
    }
    let mut sizes = vec![0usize; downstairs.len()];
    for block in &upstairs {
        sizes[block_of[block[0]]] += 1;
    }
    SplittingType::new(sizes)
}

/// Orbit-stabilizer count: for a representative `g` of each `D`-`G_E` double
/// coset, `f = |C^g| / |C^g ∩ I^g (D^g ∩ G_E)|` with `C = <c>` and
/// `X^g = g^-1 X g`.
pub fn splitting_type_from_formula(
    g_e: &SubgroupHandle,
    dec: &DecompositionData,
) -> Result<SplittingType, GroupError> {
    check_inputs(g_e, dec)?;
    let g = g_e.parent();
    let c_group = g.cyclic(dec.c);
    let mut degrees = Vec::new();
    for block in double_cosets(&dec.d, g_e)? {
        let rep = block[0];
        let cg = c_group.conjugate(rep);
        let dg = dec.d.conjugate(rep);
        let ig = dec.i.conjugate(rep);
        let kernel = ig.product_set(&dg.intersection(g_e));
        let stab = cg.elements().iter().filter(|&&x| kernel.binary_search(&x).is_ok()).count();
        if stab == 0 || cg.order() % stab != 0 {
            return Err(GroupError::InvalidDecomposition(format!(
                "stabilizer of order {stab} does not divide |C| = {}",
                cg.order()
            )));
        }
        degrees.push(cg.order() / stab);
    }
    SplittingType::new(degrees)
}

#[cfg(test)]
mod tests {
    use super::super::perm::Perm;
    use super::*;

    fn s3() -> PermGroup {
        PermGroup::from_generators(
            3,
            &[Perm::parse(3, "(1 2)").unwrap(), Perm::parse(3, "(1 2 3)").unwrap()],
        )
        .unwrap()
    }

    fn el(g: &PermGroup, s: &str) -> usize {
        g.index_of(&Perm::parse(g.degree(), s).unwrap()).unwrap()
    }

    #[test]
    fn double_coset_examples() {
        let g = s3();
        let a3 = g.cyclic(el(&g, "(1 2 3)"));
        let t = g.cyclic(el(&g, "(1 2)"));
        let blocks = double_cosets(&a3, &t).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].len(), 6);
        let blocks = double_cosets(&g.trivial(), &g.trivial()).unwrap();
        assert_eq!(blocks.len(), 6);
        let sizes: Vec<usize> = double_cosets(&t, &t).unwrap().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![2, 4]);
    }

    #[test]
    fn fibre_and_formula_examples() {
        let g = s3();
        let t = el(&g, "(1 2)");
        let c3 = el(&g, "(1 2 3)");
        let g_e = g.cyclic(t);
        let a3 = g.cyclic(c3);

        let ramified = DecompositionData::new(g.whole(), a3.clone(), t).unwrap();
        let expect = SplittingType::new(vec![1]).unwrap();
        assert_eq!(splitting_type_from_fibers(&g_e, &ramified).unwrap(), expect);
        assert_eq!(splitting_type_from_formula(&g_e, &ramified).unwrap(), expect);

        let split = DecompositionData::new(g.trivial(), g.trivial(), 0).unwrap();
        let ones = SplittingType::new(vec![1, 1, 1]).unwrap();
        assert_eq!(splitting_type_from_fibers(&g_e, &split).unwrap(), ones);
        assert_eq!(splitting_type_from_formula(&g_e, &split).unwrap(), ones);

        // a 3-cycle permutes the three cosets of <(1 2)> transitively
        let inert = DecompositionData::new(a3, g.trivial(), c3).unwrap();
        let three = SplittingType::new(vec![3]).unwrap();
        assert_eq!(splitting_type_from_fibers(&g_e, &inert).unwrap(), three);
        assert_eq!(splitting_type_from_formula(&g_e, &inert).unwrap(), three);
    }

    #[test]
    fn whole_group_as_g_e_gives_one() {
        let g = s3();
        let subs = g.all_subgroups();
        for dec in enumerate_decompositions(&subs) {
            let one = SplittingType::new(vec![1]).unwrap();
            assert_eq!(splitting_type_from_formula(&g.whole(), &dec).unwrap(), one);
        }
    }

    #[test]
    fn invalid_decomposition_is_rejected() {
        let g = s3();
        let t = el(&g, "(1 2)");
        let c3 = el(&g, "(1 2 3)");
        // <(1 2)> is not normal in S3
        assert!(matches!(
            DecompositionData::new(g.whole(), g.cyclic(t), c3),
            Err(GroupError::InvalidDecomposition(_))
        ));
        // <c> I must fill D
        assert!(matches!(
            DecompositionData::new(g.whole(), g.trivial(), c3),
            Err(GroupError::InvalidDecomposition(_))
        ));
        assert!(matches!(
            DecompositionData::new(g.cyclic(c3), g.trivial(), t),
            Err(GroupError::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn splitting_type_rejects_empty() {
        assert!(SplittingType::new(vec![]).is_err());
        assert!(SplittingType::new(vec![0, 1]).is_err());
        assert_eq!(SplittingType::new(vec![2, 1]).unwrap().to_string(), "[1,2]");
    }
}
