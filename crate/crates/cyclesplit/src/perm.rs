//! Finite permutations, enumerated permutation groups, subgroups and
//! finite actions.
//!
//! Groups are stored by full element enumeration: breadth-first closure
//! from the identity, multiplying on the right by the generators in input
//! order. Element indices, coset labels and conjugacy classes are all
//! derived from that enumeration, so every downstream table is
//! deterministic and byte-stable across runs.
//!
//! The product convention is "left-to-right": `a.compose(&b)` applies `a`
//! first, then `b`, and cosets of a subgroup `H` are the right cosets
//! `H·t`, moved by `g` to `H·t·g`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default bound on the number of elements [`PermutationGroup::generate`]
/// will enumerate before giving up.
pub const DEFAULT_ORDER_CAP: usize = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("images are not a bijection on 0..{degree}")]
    InvalidPermutation { degree: usize },
    #[error("degree must be at least 1")]
    InvalidDegree,
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group enumeration exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("permutation is not a member of the group")]
    NotAMember,
    #[error("member set is not closed under composition inside the group")]
    NotASubgroup,
    #[error("cannot parse permutation from {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("action tables do not define a homomorphism")]
    NotAHomomorphism,
}

/// A permutation of `{0, …, n−1}` in image form: point `i` maps to
/// `images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its image sequence, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        if n == 0 {
            return Err(GroupError::InvalidDegree);
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(GroupError::InvalidPermutation { degree: n });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Cycles of length ≥ 2, each rotated so its least point comes first,
    /// sorted by least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Multiplicative order: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut acc: u64 = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 1;
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                len += 1;
                j = self.images[j];
            }
            acc = num::integer::lcm(acc, len);
        }
        acc
    }

    /// Parses cycle notation such as `"(0 1)(2 3)"` or `"(0,1,2)"`.
    ///
    /// `"()"` and the empty string denote the identity. Cycles are
    /// composed left to right, so overlapping cycles are permitted;
    /// repeating a point inside one cycle is not.
    pub fn parse_cycles(degree: usize, input: &str) -> Result<Self, GroupError> {
        let err = |reason: &str| GroupError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if degree == 0 {
            return Err(GroupError::InvalidDegree);
        }
        let mut result = Permutation::identity(degree);
        let mut rest = input.trim();
        if rest.is_empty() {
            return Ok(result);
        }
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(err("expected '('"));
            };
            let Some(close) = stripped.find(')') else {
                return Err(err("missing ')'"));
            };
            let body = &stripped[..close];
            rest = stripped[close + 1..].trim_start();
            let points: Vec<usize> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| err("not a point index")))
                .collect::<Result<_, _>>()?;
            if points.is_empty() {
                continue; // "()" term
            }
            let mut sorted = points.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != points.len() {
                return Err(err("point repeated within a cycle"));
            }
            if *sorted.last().unwrap() >= degree {
                return Err(err("point exceeds degree"));
            }
            let mut cycle_images: Vec<usize> = (0..degree).collect();
            for (pos, &p) in points.iter().enumerate() {
                cycle_images[p] = points[(pos + 1) % points.len()];
            }
            let cycle = Permutation::new(cycle_images).expect("distinct points give a bijection");
            result = result.compose(&cycle);
        }
        Ok(result)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A conjugacy class, stored as sorted element indices. The
/// representative is the enumeration-least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite permutation group with its elements fully enumerated.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_indices: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    /// For each non-identity element: (parent index, generator index) with
    /// `elements[e] = elements[parent] · generators[k]` along the BFS tree.
    provenance: Vec<Option<(usize, usize)>>,
    inverses: Vec<usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl PermutationGroup {
    /// Enumerates the group generated by `generators` on `degree` points.
    ///
    /// Elements are ordered breadth-first from the identity, multiplying
    /// on the right by the generators in input order. Fails with
    /// [`GroupError::CapExceeded`] once more than `cap` elements appear.
    pub fn generate(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::InvalidDegree);
        }
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        let mut provenance: Vec<Option<(usize, usize)>> = vec![None];
        let mut cursor = 0;
        while cursor < elements.len() {
            for (k, gen) in generators.iter().enumerate() {
                let candidate = elements[cursor].compose(gen);
                if !index.contains_key(&candidate) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    index.insert(candidate.clone(), elements.len());
                    elements.push(candidate);
                    provenance.push(Some((cursor, k)));
                }
            }
            cursor += 1;
        }

        let inverses: Vec<usize> = elements.iter().map(|e| index[&e.inverse()]).collect();
        let generator_indices: Vec<usize> = generators.iter().map(|g| index[g]).collect();

        // Conjugacy classes as orbits of conjugation by the generators.
        let n = elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        let gen_inverses: Vec<Permutation> = generators.iter().map(|g| g.inverse()).collect();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            class_of[start] = cid;
            let mut members = vec![start];
            let mut qi = 0;
            while qi < members.len() {
                let e = members[qi];
                qi += 1;
                for (k, gen) in generators.iter().enumerate() {
                    let conj = gen_inverses[k].compose(&elements[e]).compose(gen);
                    let j = index[&conj];
                    if class_of[j] == usize::MAX {
                        class_of[j] = cid;
                        members.push(j);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                representative: members[0],
                members,
            });
        }

        Ok(PermutationGroup {
            degree,
            generators: generators.to_vec(),
            generator_indices,
            elements,
            index,
            provenance,
            inverses,
            classes,
            class_of,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &Permutation {
        &self.elements[idx]
    }

    pub fn element_index(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_member(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Index of `elements[a] · elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inverse_of(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.elements[a].order()
    }

    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, elem: usize) -> usize {
        self.class_of[elem]
    }

    /// Subgroup generated by permutations that must already lie in the
    /// group.
    pub fn subgroup(&self, generators: &[Permutation]) -> Result<SubgroupHandle, GroupError> {
        let idxs: Vec<usize> = generators
            .iter()
            .map(|g| self.element_index(g).ok_or(GroupError::NotAMember))
            .collect::<Result<_, _>>()?;
        Ok(self.subgroup_from_indices(&idxs))
    }

    /// Subgroup generated by element indices of this group.
    pub fn subgroup_from_indices(&self, generator_indices: &[usize]) -> SubgroupHandle {
        let mut members = vec![0usize];
        let mut in_set = vec![false; self.order()];
        in_set[0] = true;
        let mut qi = 0;
        while qi < members.len() {
            let e = members[qi];
            qi += 1;
            for &k in generator_indices {
                let m = self.mul(e, k);
                if !in_set[m] {
                    in_set[m] = true;
                    members.push(m);
                }
            }
        }
        members.sort_unstable();
        SubgroupHandle {
            generator_indices: generator_indices.to_vec(),
            members,
        }
    }

    /// Wraps an explicit member set, checking it really is a subgroup.
    pub fn subgroup_from_members(&self, members: &[usize]) -> Result<SubgroupHandle, GroupError> {
        let mut sorted: Vec<usize> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.iter().any(|&m| m >= self.order()) || !sorted.contains(&0) {
            return Err(GroupError::NotASubgroup);
        }
        for &a in &sorted {
            for &b in &sorted {
                if sorted.binary_search(&self.mul(a, b)).is_err() {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        Ok(SubgroupHandle {
            generator_indices: sorted.clone(),
            members: sorted,
        })
    }

    pub fn trivial_subgroup(&self) -> SubgroupHandle {
        SubgroupHandle {
            generator_indices: Vec::new(),
            members: vec![0],
        }
    }

    pub fn full_subgroup(&self) -> SubgroupHandle {
        self.subgroup_from_indices(&self.generator_indices.clone())
    }

    /// The action of the group on the right cosets `H·t` of `h`, with `g`
    /// sending `H·t` to `H·t·g`.
    ///
    /// Coset labels are assigned in order of the least element index each
    /// coset contains, so label 0 is always `H` itself. The action is
    /// transitive by construction.
    pub fn coset_action(&self, h: &SubgroupHandle) -> Result<FiniteAction, GroupError> {
        // Cheap revalidation; catches handles built against another group.
        if h.members.is_empty()
            || h.members[0] != 0
            || *h.members.last().unwrap() >= self.order()
        {
            return Err(GroupError::NotASubgroup);
        }
        for &g in &h.generator_indices {
            if h.contains(g) {
                for &m in &h.members {
                    if !h.contains(self.mul(m, g)) {
                        return Err(GroupError::NotASubgroup);
                    }
                }
            } else {
                return Err(GroupError::NotASubgroup);
            }
        }
        let order = self.order();
        let mut coset_of = vec![usize::MAX; order];
        let mut reps = Vec::new();
        for t in 0..order {
            if coset_of[t] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(t);
            for &m in &h.members {
                let e = self.mul(m, t);
                if coset_of[e] != usize::MAX && coset_of[e] != c {
                    return Err(GroupError::NotASubgroup);
                }
                coset_of[e] = c;
            }
        }
        let points = reps.len();
        debug_assert_eq!(points * h.order(), order);
        let tables: Vec<Permutation> = (0..order)
            .map(|g| {
                let images = reps.iter().map(|&t| coset_of[self.mul(t, g)]).collect();
                Permutation::new(images).expect("coset action must be a permutation")
            })
            .collect();
        Ok(FiniteAction { points, tables })
    }

    /// Extends an action given on the generators to the whole group and
    /// verifies the homomorphism property on every element.
    pub fn action_from_generator_tables(
        &self,
        points: usize,
        generator_tables: &[Permutation],
    ) -> Result<FiniteAction, GroupError> {
        if points == 0 {
            return Err(GroupError::InvalidDegree);
        }
        if generator_tables.len() != self.generators.len() {
            return Err(GroupError::NotAHomomorphism);
        }
        for t in generator_tables {
            if t.degree() != points {
                return Err(GroupError::DegreeMismatch {
                    expected: points,
                    found: t.degree(),
                });
            }
        }
        let mut tables = vec![Permutation::identity(points)];
        for e in 1..self.order() {
            let (parent, k) = self.provenance[e].expect("non-identity element has provenance");
            tables.push(tables[parent].compose(&generator_tables[k]));
        }
        let action = FiniteAction { points, tables };
        if !action.is_homomorphism(self) {
            return Err(GroupError::NotAHomomorphism);
        }
        Ok(action)
    }
}

/// A subgroup of a [`PermutationGroup`], stored as element indices into
/// the parent's enumeration. Handles are only meaningful for the group
/// that created them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupHandle {
    generator_indices: Vec<usize>,
    members: Vec<usize>,
}

impl SubgroupHandle {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn contains(&self, elem: usize) -> bool {
        self.members.binary_search(&elem).is_ok()
    }
}

/// A finite action of an enumerated group: one permutation of
/// `{0, …, points−1}` per group element, aligned with the element
/// enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAction {
    points: usize,
    tables: Vec<Permutation>,
}

impl FiniteAction {
    pub fn point_count(&self) -> usize {
        self.points
    }

    pub fn permutation_of(&self, elem: usize) -> &Permutation {
        &self.tables[elem]
    }

    /// Orbit sizes of `⟨g⟩` on the points, as an ascending multiset.
    pub fn cycle_type(&self, elem: usize) -> Vec<usize> {
        let table = &self.tables[elem];
        let mut seen = vec![false; self.points];
        let mut sizes = Vec::new();
        for start in 0..self.points {
            if seen[start] {
                continue;
            }
            let mut len = 1;
            seen[start] = true;
            let mut j = table.apply(start);
            while j != start {
                seen[j] = true;
                len += 1;
                j = table.apply(j);
            }
            sizes.push(len);
        }
        sizes.sort_unstable();
        sizes
    }

    pub fn is_transitive(&self, group: &PermutationGroup) -> bool {
        let mut seen = vec![false; self.points];
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(p) = stack.pop() {
            for &k in group.generator_indices() {
                let q = self.tables[k].apply(p);
                if !seen[q] {
                    seen[q] = true;
                    count += 1;
                    stack.push(q);
                }
            }
        }
        count == self.points
    }

    pub fn is_homomorphism(&self, group: &PermutationGroup) -> bool {
        if self.tables.len() != group.order() || !self.tables[0].is_identity() {
            return false;
        }
        for e in 0..group.order() {
            for &gi in group.generator_indices() {
                let product = group.mul(e, gi);
                if self.tables[product] != self.tables[e].compose(&self.tables[gi]) {
                    return false;
                }
            }
        }
        true
    }
}
