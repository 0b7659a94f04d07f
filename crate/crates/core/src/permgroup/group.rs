use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

use super::{Partition, Permutation};

/// Default bound on the number of elements any exhaustive routine will enumerate.
pub const DEFAULT_ENUMERATION_CAP: usize = 2_000_000;

#[derive(Debug)]
struct Enumeration {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl Enumeration {
    fn from_elements(elements: Vec<Permutation>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Self { elements, index }
    }
}

/// A permutation group given by generators. The full element list is computed
/// on first use and cached; enumeration past the cap fails with
/// [`Error::CapExceeded`].
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    cap: usize,
    cache: OnceLock<Result<Arc<Enumeration>>>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
        }
        Ok(Self { degree, generators, cap: DEFAULT_ENUMERATION_CAP, cache: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("no generators")
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        if matches!(self.cache.get(), Some(Err(_))) {
            self.cache = OnceLock::new();
        }
        self
    }

    /// Wraps an element list already known to be a group. A small generating
    /// set is extracted greedily.
    pub(crate) fn from_group_elements(degree: usize, elements: Vec<Permutation>, cap: usize) -> Self {
        let mut generators: Vec<Permutation> = Vec::new();
        let mut closure: HashSet<Permutation> = HashSet::new();
        closure.insert(Permutation::identity(degree));
        for e in &elements {
            if closure.contains(e) {
                continue;
            }
            generators.push(e.clone());
            let mut queue: VecDeque<Permutation> = closure.iter().cloned().collect();
            while let Some(x) = queue.pop_front() {
                for g in &generators {
                    let y = x.then(g);
                    if closure.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        let cache = OnceLock::new();
        let _ = cache.set(Ok(Arc::new(Enumeration::from_elements(elements))));
        Self { degree, generators, cap, cache }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn enumeration(&self) -> Result<&Enumeration> {
        self.cache.get_or_init(|| self.close().map(Arc::new)).as_ref().map(|e| e.as_ref()).map_err(Clone::clone)
    }

    fn close(&self) -> Result<Enumeration> {
        let id = Permutation::identity(self.degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in &self.generators {
                let y = x.then(g);
                if !index.contains_key(&y) {
                    if elements.len() >= self.cap {
                        return Err(Error::CapExceeded { cap: self.cap });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        Ok(Enumeration { elements, index })
    }

    /// All elements, identity first, in breadth-first order over the generators.
    pub fn elements(&self) -> Result<&[Permutation]> {
        Ok(&self.enumeration()?.elements)
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.enumeration()?.elements.len())
    }

    pub fn index_of(&self, g: &Permutation) -> Result<Option<usize>> {
        Ok(self.enumeration()?.index.get(g).copied())
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        Ok(g.degree() == self.degree && self.index_of(g)?.is_some())
    }

    fn require_member(&self, g: &Permutation) -> Result<()> {
        if self.contains(g)? {
            Ok(())
        } else {
            Err(Error::NotInGroup)
        }
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut out = vec![point];
        seen[point] = true;
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn orbits(&self) -> Partition {
        let mut seen = vec![false; self.degree];
        let mut blocks = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let orbit = self.orbit(x);
                for &y in &orbit {
                    seen[y] = true;
                }
                blocks.push(orbit);
            }
        }
        Partition::new(self.degree, blocks).expect("orbits partition the points")
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// True when no non-identity element fixes a point.
    pub fn is_semiregular(&self) -> Result<bool> {
        Ok(self.elements()?.iter().all(|g| g.is_identity() || g.fixed_point_count() == 0))
    }

    /// `{h^-1 g h : h in G}`, listed in the order first reached.
    pub fn conjugacy_class(&self, g: &Permutation) -> Result<Vec<Permutation>> {
        self.require_member(g)?;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for h in self.elements()? {
            let c = g.conjugate_by(h);
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// Conjugacy classes as lists of element indices; classes are ordered by
    /// their least index and each list is ascending.
    pub fn conjugacy_classes(&self) -> Result<Vec<Vec<usize>>> {
        let en = self.enumeration()?;
        let mut class_of = vec![usize::MAX; en.elements.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..en.elements.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            class_of[i] = classes.len();
            let mut members = vec![i];
            let mut head = 0;
            while head < members.len() {
                let x = &en.elements[members[head]];
                head += 1;
                for h in &self.generators {
                    let j = en.index[&x.conjugate_by(h)];
                    if class_of[j] == usize::MAX {
                        class_of[j] = classes.len();
                        members.push(j);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        Ok(classes)
    }

    pub fn subgroup_where(&self, pred: impl Fn(&Permutation) -> bool) -> Result<PermutationGroup> {
        let elements: Vec<Permutation> = self.elements()?.iter().filter(|g| pred(g)).cloned().collect();
        Ok(Self::from_group_elements(self.degree, elements, self.cap))
    }

    pub fn centralizer(&self, g: &Permutation) -> Result<PermutationGroup> {
        self.require_member(g)?;
        self.subgroup_where(|h| h.then(g) == g.then(h))
    }

    pub fn point_stabilizer(&self, point: usize) -> Result<PermutationGroup> {
        self.subgroup_where(|h| h.apply(point) == point)
    }

    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermutationGroup> {
        self.subgroup_where(|h| points.iter().all(|&x| h.apply(x) == x))
    }

    pub fn setwise_stabilizer(&self, points: &[usize]) -> Result<PermutationGroup> {
        let mut set = points.to_vec();
        set.sort_unstable();
        set.dedup();
        self.subgroup_where(|h| h.image_of_set(&set) == set)
    }

    /// Smallest normal subgroup containing `x`.
    pub fn normal_closure(&self, x: &Permutation) -> Result<PermutationGroup> {
        self.require_member(x)?;
        let conjugates = self.conjugacy_class(x)?;
        let closure = PermutationGroup::new(self.degree, conjugates)?.with_cap(self.cap);
        let elements = closure.elements()?.to_vec();
        Ok(Self::from_group_elements(self.degree, elements, self.cap))
    }

    /// Every element of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermutationGroup) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The action of `self` by right multiplication on the right cosets `Hx`
    /// of `subgroup`. Cosets are numbered in order of first appearance in the
    /// element list, so the trivial coset is 0.
    pub fn coset_action(&self, subgroup: &PermutationGroup) -> Result<PermutationGroup> {
        if !self.contains_group(subgroup)? {
            return Err(Error::Precondition("subgroup is not contained in the group".into()));
        }
        let en = self.enumeration()?;
        let h_elems = subgroup.elements()?;
        let mut coset_of = vec![usize::MAX; en.elements.len()];
        let mut cosets = 0;
        for (i, x) in en.elements.iter().enumerate() {
            if coset_of[i] != usize::MAX {
                continue;
            }
            for h in h_elems {
                coset_of[en.index[&h.then(x)]] = cosets;
            }
            cosets += 1;
        }
        let mut rep = vec![usize::MAX; cosets];
        for (i, &c) in coset_of.iter().enumerate() {
            if rep[c] == usize::MAX {
                rep[c] = i;
            }
        }
        let generators = self
            .generators
            .iter()
            .map(|g| {
                let images = rep.iter().map(|&r| coset_of[en.index[&en.elements[r].then(g)]]).collect();
                Permutation::from_images(images)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PermutationGroup::new(cosets, generators)?.with_cap(self.cap))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn sym(n: usize) -> PermutationGroup {
        let cyc: Vec<usize> = (0..n).collect();
        PermutationGroup::new(n, vec![p(n, &[&cyc]), p(n, &[&[0, 1]])]).unwrap()
    }

    #[test]
    fn cyclic_of_order_two() {
        let g = PermutationGroup::new(2, vec![p(2, &[&[0, 1]])]).unwrap();
        assert_eq!(g.order().unwrap(), 2);
        assert!(g.elements().unwrap()[0].is_identity());
    }

    #[test]
    fn cap_is_loud() {
        let g = sym(5).with_cap(100);
        assert_eq!(g.order(), Err(Error::CapExceeded { cap: 100 }));
        let g = g.with_cap(120);
        assert_eq!(g.order(), Ok(120));
    }

    #[test]
    fn orbits_of_small_groups() {
        let triv = PermutationGroup::trivial(5);
        assert_eq!(triv.orbit(3), vec![3]);
        let c4 = PermutationGroup::new(4, vec![p(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(c4.orbit(0), vec![0, 1, 2, 3]);
        assert!(c4.is_transitive());
        assert!(c4.is_semiregular().unwrap());
    }

    #[test]
    fn symmetric_three() {
        let s3 = sym(3);
        let t = p(3, &[&[0, 1]]);
        assert_eq!(s3.conjugacy_class(&t).unwrap().len(), 3);
        assert_eq!(s3.centralizer(&t).unwrap().order().unwrap(), 2);
        assert!(s3.is_transitive());
        assert!(!s3.is_semiregular().unwrap());
        assert_eq!(s3.point_stabilizer(0).unwrap().order().unwrap(), 2);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = PermutationGroup::new(4, vec![p(4, &[&[0, 1]]), p(4, &[&[2, 3]])]).unwrap();
        for x in g.elements().unwrap() {
            assert_eq!(g.conjugacy_class(x).unwrap(), vec![x.clone()]);
        }
    }

    #[test]
    fn transpositions_in_s5() {
        let s5 = sym(5);
        assert_eq!(s5.conjugacy_class(&p(5, &[&[2, 4]])).unwrap().len(), 10);
        assert_eq!(s5.setwise_stabilizer(&[0, 1]).unwrap().order().unwrap(), 12);
        assert_eq!(s5.pointwise_stabilizer(&[0, 1]).unwrap().order().unwrap(), 6);
        assert_eq!(s5.conjugacy_classes().unwrap().len(), 7);
    }

    #[test]
    fn non_member_rejected() {
        let c3 = PermutationGroup::new(3, vec![p(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(c3.conjugacy_class(&p(3, &[&[0, 1]])), Err(Error::NotInGroup));
    }

    #[test]
    fn regular_group_has_trivial_stabilizers() {
        let c5 = PermutationGroup::new(5, vec![p(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        for v in 0..5 {
            assert_eq!(c5.point_stabilizer(v).unwrap().order().unwrap(), 1);
        }
    }

    #[test]
    fn coset_action_of_s3_on_stabilizer_cosets() {
        let s3 = sym(3);
        let stab = s3.point_stabilizer(0).unwrap();
        let action = s3.coset_action(&stab).unwrap();
        assert_eq!(action.degree(), 3);
        assert_eq!(action.order().unwrap(), 6);
        assert!(action.is_transitive());
    }

    #[test]
    fn normal_closure_of_three_cycle_is_a4() {
        let s4 = sym(4);
        let n = s4.normal_closure(&p(4, &[&[0, 1, 2]])).unwrap();
        assert_eq!(n.order().unwrap(), 12);
    }

    #[test]
    fn subgroup_generating_set_regenerates() {
        let s4 = sym(4);
        let stab = s4.point_stabilizer(3).unwrap();
        let regenerated = PermutationGroup::new(4, stab.generators().to_vec()).unwrap();
        assert_eq!(regenerated.order().unwrap(), 6);
    }
}
