//! Finite permutation groups stored by exhaustive enumeration.
//!
//! Elements are referred to by their index in the canonically sorted element
//! list; index 0 is the identity.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use super::perm::{cycle_type_of, Perm};
use super::GroupError;

pub const DEFAULT_ORDER_BOUND: usize = 10080;

/// Groups up to this order cache a full multiplication table.
const TABLE_BOUND: usize = 1024;

#[derive(Debug)]
struct GroupData {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverse: Vec<usize>,
    table: Option<Vec<u16>>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct PermGroup(Arc<GroupData>);

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.degree == other.0.degree && self.0.elements == other.0.elements)
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    pub fn from_generators(degree: usize, gens: &[Perm]) -> Result<Self, GroupError> {
        Self::with_bound(degree, gens, DEFAULT_ORDER_BOUND)
    }

    pub fn with_bound(degree: usize, gens: &[Perm], bound: usize) -> Result<Self, GroupError> {
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::InvalidPermutation(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let id = Perm::identity(degree);
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        let mut elements = Vec::new();
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = g.compose(&x);
                if !seen.contains_key(&y) {
                    if seen.len() >= bound {
                        return Err(GroupError::GroupTooLarge(bound));
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
            elements.push(x);
        }
        elements.sort();
        let index: HashMap<Perm, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let n = elements.len();
        let table = (n <= TABLE_BOUND).then(|| {
            let mut t = vec![0u16; n * n];
            for (i, a) in elements.iter().enumerate() {
                for (j, b) in elements.iter().enumerate() {
                    t[i * n + j] = index[&a.compose(b)] as u16;
                }
            }
            t
        });
        let mut data = GroupData {
            degree,
            generators: gens.to_vec(),
            elements,
            index,
            inverse,
            table,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        let (classes, class_of) = conjugacy_classes(&data);
        data.classes = classes;
        data.class_of = class_of;
        Ok(PermGroup(Arc::new(data)))
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn order(&self) -> usize {
        self.0.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.0.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.0.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.0.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.0.index.get(p).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.0.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.0.index[&self.0.elements[a].compose(&self.0.elements[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.0.inverse[a]
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.inv(g), self.mul(x, g))
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(self.identity(), |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Conjugacy classes, ordered by least element; each class sorted.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.0.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.0.class_of[a]
    }

    pub fn whole(&self) -> SubgroupHandle {
        SubgroupHandle::from_sorted_unchecked(self.clone(), (0..self.order()).collect())
    }

    pub fn trivial(&self) -> SubgroupHandle {
        SubgroupHandle::from_sorted_unchecked(self.clone(), vec![0])
    }

    /// Subgroup generated by the given element indices.
    pub fn generated_by(&self, gens: &[usize]) -> SubgroupHandle {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut elems = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                    queue.push_back(y);
                }
            }
        }
        elems.sort_unstable();
        SubgroupHandle { parent: self.clone(), elements: elems, member }
    }

    pub fn subgroup(&self, gens: &[Perm]) -> Result<SubgroupHandle, GroupError> {
        let idx = gens
            .iter()
            .map(|g| {
                self.index_of(g)
                    .ok_or_else(|| GroupError::NotASubgroup(format!("{g} is not in the group")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.generated_by(&idx))
    }

    pub fn cyclic(&self, c: usize) -> SubgroupHandle {
        self.generated_by(&[c])
    }

    /// Every subgroup, sorted by (order, element list).
    pub fn all_subgroups(&self) -> Vec<SubgroupHandle> {
        let cyclic: BTreeSet<Vec<usize>> =
            (0..self.order()).map(|g| self.cyclic(g).elements).collect();
        let gen_of: Vec<usize> = cyclic
            .iter()
            .map(|c| {
                *c.iter()
                    .find(|&&g| self.element_order(g) == c.len())
                    .expect("cyclic group has a generator")
            })
            .collect();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: VecDeque<SubgroupHandle> = VecDeque::new();
        let triv = self.trivial();
        found.insert(triv.elements.clone());
        queue.push_back(triv);
        while let Some(h) = queue.pop_front() {
            for &g in &gen_of {
                if h.contains(g) {
                    continue;
                }
                let mut gens: Vec<usize> = h.generators_hint();
                gens.push(g);
                let k = self.generated_by(&gens);
                if found.insert(k.elements.clone()) {
                    queue.push_back(k);
                }
            }
        }
        let mut out: Vec<SubgroupHandle> = found
            .into_iter()
            .map(|e| SubgroupHandle::from_sorted_unchecked(self.clone(), e))
            .collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
        out
    }

    /// Left cosets `xK`: returns the coset id of every element and the number
    /// of cosets. Ids are assigned in order of least element.
    pub fn left_coset_ids(&self, k: &SubgroupHandle) -> (Vec<usize>, usize) {
        let mut id = vec![usize::MAX; self.order()];
        let mut count = 0;
        for x in 0..self.order() {
            if id[x] != usize::MAX {
                continue;
            }
            for &y in k.elements() {
                id[self.mul(x, y)] = count;
            }
            count += 1;
        }
        (id, count)
    }

    /// Cycle type of left multiplication by `g` on `G/K`.
    pub fn cycle_type_on_cosets(&self, g: usize, k: &SubgroupHandle) -> Vec<usize> {
        let (ids, n) = self.left_coset_ids(k);
        let mut reps = vec![usize::MAX; n];
        for x in 0..self.order() {
            if reps[ids[x]] == usize::MAX {
                reps[ids[x]] = x;
            }
        }
        let images: Vec<usize> = reps.iter().map(|&x| ids[self.mul(g, x)]).collect();
        cycle_type_of(&images)
    }
}

fn conjugacy_classes(data: &GroupData) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = data.elements.len();
    let gens: Vec<usize> = data.generators.iter().map(|g| data.index[g]).collect();
    let mul = |a: usize, b: usize| -> usize {
        match &data.table {
            Some(t) => t[a * n + b] as usize,
            None => data.index[&data.elements[a].compose(&data.elements[b])],
        }
    };
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let cid = classes.len();
        class_of[start] = cid;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = mul(data.inverse[g], mul(x, g));
                if class_of[y] == usize::MAX {
                    class_of[y] = cid;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    (classes, class_of)
}

/// A subgroup of a [`PermGroup`], as a sorted list of element indices.
#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    parent: PermGroup,
    elements: Vec<usize>,
    member: Vec<bool>,
}

impl PartialEq for SubgroupHandle {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.elements == other.elements
    }
}

impl Eq for SubgroupHandle {}

impl SubgroupHandle {
    fn from_sorted_unchecked(parent: PermGroup, elements: Vec<usize>) -> Self {
        let mut member = vec![false; parent.order()];
        for &e in &elements {
            member[e] = true;
        }
        SubgroupHandle { parent, elements, member }
    }

    /// Validates closure and identity.
    pub fn from_elements(parent: &PermGroup, elements: &[usize]) -> Result<Self, GroupError> {
        let mut e = elements.to_vec();
        e.sort_unstable();
        e.dedup();
        if e.iter().any(|&x| x >= parent.order()) {
            return Err(GroupError::NotASubgroup("index out of range".into()));
        }
        let h = Self::from_sorted_unchecked(parent.clone(), e);
        if !h.contains(0) {
            return Err(GroupError::NotASubgroup("identity missing".into()));
        }
        for &a in &h.elements {
            if !h.contains(parent.inv(a)) {
                return Err(GroupError::NotASubgroup("not closed under inverse".into()));
            }
            for &b in &h.elements {
                if !h.contains(parent.mul(a, b)) {
                    return Err(GroupError::NotASubgroup("not closed under product".into()));
                }
            }
        }
        Ok(h)
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.member[g]
    }

    pub fn check_parent(&self, other: &SubgroupHandle) -> Result<(), GroupError> {
        if self.parent == other.parent {
            Ok(())
        } else {
            Err(GroupError::ParentMismatch)
        }
    }

    pub fn is_subgroup_of(&self, other: &SubgroupHandle) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    pub fn is_normal_in(&self, other: &SubgroupHandle) -> bool {
        self.is_subgroup_of(other)
            && other
                .generators_hint()
                .iter()
                .all(|&g| self.elements.iter().all(|&x| self.contains(self.parent.conj(x, g))))
    }

    /// `g^-1 H g`.
    pub fn conjugate(&self, g: usize) -> SubgroupHandle {
        let mut e: Vec<usize> = self.elements.iter().map(|&x| self.parent.conj(x, g)).collect();
        e.sort_unstable();
        Self::from_sorted_unchecked(self.parent.clone(), e)
    }

    pub fn intersection(&self, other: &SubgroupHandle) -> SubgroupHandle {
        let e = self.elements.iter().copied().filter(|&g| other.contains(g)).collect();
        Self::from_sorted_unchecked(self.parent.clone(), e)
    }

    /// The set `HK`, sorted; a subgroup only when `HK = KH`.
    pub fn product_set(&self, other: &SubgroupHandle) -> Vec<usize> {
        let mut mark = vec![false; self.parent.order()];
        let mut out = Vec::new();
        for &h in &self.elements {
            for &k in &other.elements {
                let x = self.parent.mul(h, k);
                if !mark[x] {
                    mark[x] = true;
                    out.push(x);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Product `HK` when it is a subgroup (e.g. `H` normalizes `K`).
    pub fn join_product(&self, other: &SubgroupHandle) -> Result<SubgroupHandle, GroupError> {
        let set = self.product_set(other);
        SubgroupHandle::from_elements(&self.parent, &set)
    }

    /// A generating set; small, not minimal.
    pub fn generators_hint(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.parent.trivial();
        for &g in &self.elements {
            if !current.contains(g) {
                gens.push(g);
                current = self.parent.generated_by(&gens);
                if current.order() == self.order() {
                    break;
                }
            }
        }
        gens
    }

    /// Number of elements of each conjugacy class of the parent lying in `H`.
    pub fn class_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.parent.classes().len()];
        for &g in &self.elements {
            counts[self.parent.class_of(g)] += 1;
        }
        counts
    }

    pub fn index_in_parent(&self) -> usize {
        self.parent.order() / self.order()
    }
}

impl fmt::Display for SubgroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators_hint()
            .iter()
            .map(|&g| self.parent.element(g).to_string())
            .collect();
        write!(f, "<{}> (order {})", gens.join(", "), self.order())
    }
}
