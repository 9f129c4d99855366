//! Group-theoretic models of étale algebras and multiplicity-weighted
//! fibres, with the combinatorial index, cycle-splitness verdicts, and
//! exact Chebotarev densities.
//!
//! An algebra `⊕ K_i` split by a Galois group `G` is modelled by one
//! transitive action of `G` per field factor (the coset spaces `G/H_i`).
//! The combinatorial index of a fibre at `g` is
//!
//! ```text
//! I(g) = gcd over multiplicities m of ( m · gcd of all orbit sizes of g
//!         on the factors of the multiplicity-m component )
//! ```
//!
//! and the fibre is combinatorially r-cycle-split when `I(g) | r` for
//! every `g`. The index is a class function, so verdicts and densities
//! only ever need one representative per conjugacy class; this module
//! still verifies class-constancy on every member when producing a
//! report.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{FiniteAction, PermutationGroup, SubgroupHandle};
use crate::rational::{rational_to_string, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("an algebra model needs at least one factor")]
    EmptyAlgebra,
    #[error("a fibre model needs at least one component")]
    EmptyFibre,
    #[error("factor action is not transitive")]
    NotTransitive,
    #[error("factor action is not aligned with the group enumeration")]
    ActionMismatch,
    #[error("component multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("duplicate component multiplicity {0}")]
    DuplicateMultiplicity(u64),
    #[error("all components must share the fibre's ambient group")]
    GroupMismatch,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element index {0} is out of range")]
    NoSuchElement(usize),
}

/// A product of field factors split by one ambient group: one transitive
/// action per factor.
#[derive(Clone, Debug)]
pub struct EtaleAlgebraModel {
    group: Arc<PermutationGroup>,
    factors: Vec<FiniteAction>,
}

impl EtaleAlgebraModel {
    pub fn new(
        group: Arc<PermutationGroup>,
        factors: Vec<FiniteAction>,
    ) -> Result<Self, ModelError> {
        if factors.is_empty() {
            return Err(ModelError::EmptyAlgebra);
        }
        for f in &factors {
            if f.permutation_of(0).degree() != f.point_count() {
                return Err(ModelError::ActionMismatch);
            }
            if !f.is_homomorphism(&group) {
                return Err(ModelError::ActionMismatch);
            }
            if !f.is_transitive(&group) {
                return Err(ModelError::NotTransitive);
            }
        }
        Ok(EtaleAlgebraModel { group, factors })
    }

    pub fn group(&self) -> &Arc<PermutationGroup> {
        &self.group
    }

    pub fn factors(&self) -> &[FiniteAction] {
        &self.factors
    }

    /// Factor degrees `[K_i : K]`, in factor order.
    pub fn factor_degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.point_count()).collect()
    }
}

/// gcd of the factor degrees. The algebra has a global zero-cycle of
/// degree `r` exactly when this divides `r`.
pub fn global_degree_gcd(algebra: &EtaleAlgebraModel) -> u64 {
    algebra
        .factors
        .iter()
        .map(|f| f.point_count() as u64)
        .fold(0, num::integer::gcd)
}

/// A multiplicity-weighted family of algebra models over one ambient
/// group: the components of a fibre, keyed by geometric multiplicity.
///
/// Multiplicities that do not occur are simply absent; a present
/// component always has at least one factor.
#[derive(Clone, Debug)]
pub struct FibreModel {
    group: Arc<PermutationGroup>,
    components: BTreeMap<u64, EtaleAlgebraModel>,
}

impl FibreModel {
    pub fn new(
        group: Arc<PermutationGroup>,
        components: Vec<(u64, EtaleAlgebraModel)>,
    ) -> Result<Self, ModelError> {
        if components.is_empty() {
            return Err(ModelError::EmptyFibre);
        }
        let mut map = BTreeMap::new();
        for (m, algebra) in components {
            if m == 0 {
                return Err(ModelError::ZeroMultiplicity);
            }
            if !Arc::ptr_eq(&group, &algebra.group)
                && group.elements() != algebra.group.elements()
            {
                return Err(ModelError::GroupMismatch);
            }
            if map.insert(m, algebra).is_some() {
                return Err(ModelError::DuplicateMultiplicity(m));
            }
        }
        Ok(FibreModel {
            group,
            components: map,
        })
    }

    /// Single multiplicity-1 component.
    pub fn from_algebra(algebra: EtaleAlgebraModel) -> Self {
        FibreModel {
            group: algebra.group.clone(),
            components: BTreeMap::from([(1u64, algebra)]),
        }
    }

    pub fn group(&self) -> &Arc<PermutationGroup> {
        &self.group
    }

    /// Components in ascending multiplicity order.
    pub fn components(&self) -> impl Iterator<Item = (u64, &EtaleAlgebraModel)> {
        self.components.iter().map(|(&m, a)| (m, a))
    }

    pub fn multiplicities(&self) -> Vec<u64> {
        self.components.keys().copied().collect()
    }
}

/// The combinatorial index of the fibre at element `elem`.
pub fn combinatorial_index(fibre: &FibreModel, elem: usize) -> u64 {
    assert!(elem < fibre.group.order(), "element index out of range");
    let mut acc: u64 = 0;
    for (m, algebra) in fibre.components() {
        let mut inner: u64 = 0;
        for factor in algebra.factors() {
            for orbit in factor.cycle_type(elem) {
                inner = num::integer::gcd(inner, orbit as u64);
            }
        }
        acc = num::integer::gcd(acc, m * inner);
    }
    acc
}

/// One row of an [`IndexReport`]: a conjugacy class with its index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassIndexRow {
    pub class: usize,
    pub representative: String,
    pub size: usize,
    pub index: u64,
    pub divides_r: bool,
}

/// Per-class indices and the overall cycle-splitness verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub r: u64,
    pub verdict: bool,
    /// Enumeration-least class whose index does not divide `r`, when the
    /// verdict fails.
    pub witness_class: Option<usize>,
    pub classes: Vec<ClassIndexRow>,
}

/// Evaluates the index on every conjugacy class and reports whether each
/// one divides `r`.
///
/// The index is computed on every member of every class and checked for
/// class-constancy; a violation would indicate a corrupted model and
/// panics.
pub fn is_combinatorially_cycle_split(fibre: &FibreModel, r: u64) -> IndexReport {
    assert!(r >= 1, "r must be positive");
    let group = fibre.group();
    let mut rows = Vec::new();
    let mut witness = None;
    for (cid, class) in group.conjugacy_classes().iter().enumerate() {
        let index = combinatorial_index(fibre, class.representative);
        for &member in &class.members {
            let other = combinatorial_index(fibre, member);
            assert_eq!(
                index, other,
                "combinatorial index must be constant on conjugacy classes"
            );
        }
        let divides = r % index == 0;
        if !divides && witness.is_none() {
            witness = Some(cid);
        }
        rows.push(ClassIndexRow {
            class: cid,
            representative: group.element(class.representative).to_string(),
            size: class.size(),
            index,
            divides_r: divides,
        });
    }
    IndexReport {
        r,
        verdict: witness.is_none(),
        witness_class: witness,
        classes: rows,
    }
}

/// Fraction of the coset `N·cosetRep` whose index divides `r`, for a
/// normal subgroup `N`.
///
/// This is the single-coset inner term of the splitness density over a
/// non-closed base point: the count of `g ≡ cosetRep (mod N)` with
/// `I(g) | r`, divided by `#N`. Aggregating the terms over residue-field
/// places, and the ramified/degree-1 trigger that forces the value 1,
/// belong to the caller; they depend on field arithmetic this crate does
/// not model.
pub fn coset_split_fraction(
    fibre: &FibreModel,
    n: &SubgroupHandle,
    coset_rep: usize,
    r: u64,
) -> Result<Rational, ModelError> {
    let group = fibre.group();
    if coset_rep >= group.order() {
        return Err(ModelError::NoSuchElement(coset_rep));
    }
    // Normality: conjugating members by every generator must stay inside.
    for &g in group.generator_indices() {
        let ginv = group.inverse_of(g);
        for &m in n.members() {
            if !n.contains(group.mul(group.mul(ginv, m), g)) {
                return Err(ModelError::NotNormal);
            }
        }
    }
    let hits = n
        .members()
        .iter()
        .filter(|&&m| {
            let g = group.mul(m, coset_rep);
            r % combinatorial_index(fibre, g) == 0
        })
        .count();
    Ok(Rational::new(hits as i64, n.order() as i64))
}

/// The Chebotarev density of r-cycle-split places: the proportion of the
/// group (summed over whole conjugacy classes) whose index divides `r`.
/// Equals 1 exactly when the fibre is combinatorially r-cycle-split.
pub fn cycle_split_density(fibre: &FibreModel, r: u64) -> Rational {
    assert!(r >= 1, "r must be positive");
    let group = fibre.group();
    let qualifying: usize = group
        .conjugacy_classes()
        .iter()
        .filter(|c| r % combinatorial_index(fibre, c.representative) == 0)
        .map(|c| c.size())
        .sum();
    Rational::new(qualifying as i64, group.order() as i64)
}

/// Cycle types per factor for one component of a fibre.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComponentCycleTypes {
    pub multiplicity: u64,
    /// Ascending orbit-size multisets, one per factor action.
    pub factors: Vec<Vec<usize>>,
}

/// One row of the class pattern table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassPatternRow {
    pub class: usize,
    pub representative: String,
    pub size: usize,
    pub patterns: Vec<ComponentCycleTypes>,
    pub index: u64,
}

/// Per-class cycle types on every factor of every component, in class
/// enumeration order. This is what Frobenius scans are validated
/// against.
pub fn class_pattern_table(fibre: &FibreModel) -> Vec<ClassPatternRow> {
    let group = fibre.group();
    group
        .conjugacy_classes()
        .iter()
        .enumerate()
        .map(|(cid, class)| {
            let rep = class.representative;
            let patterns = fibre
                .components()
                .map(|(m, algebra)| ComponentCycleTypes {
                    multiplicity: m,
                    factors: algebra
                        .factors()
                        .iter()
                        .map(|f| f.cycle_type(rep))
                        .collect(),
                })
                .collect();
            ClassPatternRow {
                class: cid,
                representative: group.element(rep).to_string(),
                size: class.size(),
                patterns,
                index: combinatorial_index(fibre, rep),
            }
        })
        .collect()
}

/// Renders a density for reports.
pub fn density_string(r: &Rational) -> String {
    rational_to_string(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{Permutation, DEFAULT_ORDER_CAP};

    fn cycles(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    fn a4() -> Arc<PermutationGroup> {
        Arc::new(
            PermutationGroup::generate(
                4,
                &[cycles(4, "(0 1 2)"), cycles(4, "(0 1)(2 3)")],
                DEFAULT_ORDER_CAP,
            )
            .unwrap(),
        )
    }

    fn a4_mod_c2_fibre() -> FibreModel {
        let g = a4();
        let h = g.subgroup(&[cycles(4, "(0 1)(2 3)")]).unwrap();
        let act = g.coset_action(&h).unwrap();
        FibreModel::from_algebra(EtaleAlgebraModel::new(g, vec![act]).unwrap())
    }

    fn trivial_group_fibre(multiplicity: u64) -> FibreModel {
        let g = Arc::new(PermutationGroup::generate(1, &[], 10).unwrap());
        let act = g.coset_action(&g.full_subgroup()).unwrap();
        let algebra = EtaleAlgebraModel::new(g.clone(), vec![act]).unwrap();
        FibreModel::new(g, vec![(multiplicity, algebra)]).unwrap()
    }

    #[test]
    fn index_at_identity_is_one() {
        let fibre = a4_mod_c2_fibre();
        assert_eq!(combinatorial_index(&fibre, 0), 1);
    }

    #[test]
    fn multiplicity_two_singleton_has_index_two() {
        let fibre = trivial_group_fibre(2);
        assert_eq!(combinatorial_index(&fibre, 0), 2);
        let report = is_combinatorially_cycle_split(&fibre, 2);
        assert!(report.verdict);
        let report = is_combinatorially_cycle_split(&fibre, 1);
        assert!(!report.verdict);
        assert_eq!(report.witness_class, Some(0));
    }

    #[test]
    fn a4_three_cycle_has_index_three() {
        let fibre = a4_mod_c2_fibre();
        let g = fibre.group().clone();
        let three = g.element_index(&cycles(4, "(0 1 2)")).unwrap();
        assert_eq!(combinatorial_index(&fibre, three), 3);
        let report = is_combinatorially_cycle_split(&fibre, 1);
        assert!(!report.verdict);
        let witness = report.witness_class.unwrap();
        assert_eq!(report.classes[witness].index, 3);
        // the witness class is a 3-cycle class
        assert_eq!(report.classes[witness].size, 4);
        // splits at r = 3 and r = 12
        assert!(is_combinatorially_cycle_split(&fibre, 3).verdict);
        assert!(is_combinatorially_cycle_split(&fibre, 12).verdict);
    }

    fn c2_x_a4_fibre() -> FibreModel {
        let g = Arc::new(
            PermutationGroup::generate(
                6,
                &[
                    cycles(6, "(0 1)"),
                    cycles(6, "(2 3 4)"),
                    cycles(6, "(2 3)(4 5)"),
                ],
                DEFAULT_ORDER_CAP,
            )
            .unwrap(),
        );
        assert_eq!(g.order(), 24);
        let h1 = g
            .subgroup(&[cycles(6, "(2 3 4)"), cycles(6, "(2 3)(4 5)")])
            .unwrap();
        let h2 = g.subgroup(&[cycles(6, "(0 1)"), cycles(6, "(2 3)(4 5)")]).unwrap();
        let f1 = g.coset_action(&h1).unwrap();
        let f2 = g.coset_action(&h2).unwrap();
        assert_eq!(f1.point_count(), 2);
        assert_eq!(f2.point_count(), 6);
        FibreModel::from_algebra(EtaleAlgebraModel::new(g, vec![f1, f2]).unwrap())
    }

    #[test]
    fn c2_x_a4_two_factor_fibre_splits() {
        let fibre = c2_x_a4_fibre();
        assert!(is_combinatorially_cycle_split(&fibre, 1).verdict);
        assert_eq!(cycle_split_density(&fibre, 1), Rational::from_integer(1));
    }

    #[test]
    fn global_degree_gcds() {
        let fibre = c2_x_a4_fibre();
        let (_, algebra) = fibre.components().next().unwrap();
        assert_eq!(global_degree_gcd(algebra), 2, "factor sizes 2 and 6");

        // factor sizes {2, 2, 6} via C6
        let g = Arc::new(
            PermutationGroup::generate(6, &[cycles(6, "(0 1 2 3 4 5)")], DEFAULT_ORDER_CAP)
                .unwrap(),
        );
        let c3 = g.subgroup(&[cycles(6, "(0 2 4)(1 3 5)")]).unwrap();
        let e = g.trivial_subgroup();
        let algebra = EtaleAlgebraModel::new(
            g.clone(),
            vec![
                g.coset_action(&c3).unwrap(),
                g.coset_action(&c3).unwrap(),
                g.coset_action(&e).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(algebra.factor_degrees(), vec![2, 2, 6]);
        assert_eq!(global_degree_gcd(&algebra), 2);

        // single rational point
        let t = Arc::new(PermutationGroup::generate(1, &[], 10).unwrap());
        let one = EtaleAlgebraModel::new(t.clone(), vec![t.coset_action(&t.full_subgroup()).unwrap()])
            .unwrap();
        assert_eq!(global_degree_gcd(&one), 1);
    }

    #[test]
    fn density_of_a4_mod_c2_is_one_third() {
        let fibre = a4_mod_c2_fibre();
        assert_eq!(cycle_split_density(&fibre, 1), Rational::new(1, 3));
        assert_eq!(density_string(&cycle_split_density(&fibre, 1)), "1/3");
        assert_eq!(cycle_split_density(&fibre, 3), Rational::from_integer(1));
    }

    #[test]
    fn coset_fraction_with_full_and_trivial_subgroups() {
        let fibre = a4_mod_c2_fibre();
        let g = fibre.group().clone();
        // N = G: the mean splitness fraction = 4/12.
        let full = g.full_subgroup();
        assert_eq!(
            coset_split_fraction(&fibre, &full, 0, 1).unwrap(),
            Rational::new(1, 3)
        );
        // N trivial: a 0/1 indicator.
        let trivial = g.trivial_subgroup();
        let double = g.element_index(&cycles(4, "(0 1)(2 3)")).unwrap();
        assert_eq!(
            coset_split_fraction(&fibre, &trivial, double, 1).unwrap(),
            Rational::from_integer(1)
        );
        let three = g.element_index(&cycles(4, "(0 1 2)")).unwrap();
        assert_eq!(
            coset_split_fraction(&fibre, &trivial, three, 1).unwrap(),
            Rational::from_integer(0)
        );
    }

    #[test]
    fn coset_fraction_requires_normality() {
        let fibre = a4_mod_c2_fibre();
        let g = fibre.group().clone();
        let c2 = g.subgroup(&[cycles(4, "(0 1)(2 3)")]).unwrap();
        assert_eq!(
            coset_split_fraction(&fibre, &c2, 0, 1),
            Err(ModelError::NotNormal)
        );
        // V4 is normal in A4.
        let v4 = g
            .subgroup(&[cycles(4, "(0 1)(2 3)"), cycles(4, "(0 2)(1 3)")])
            .unwrap();
        assert!(coset_split_fraction(&fibre, &v4, 0, 1).is_ok());
    }

    #[test]
    fn trivial_coset_fractions_average_to_density() {
        let fibre = a4_mod_c2_fibre();
        let g = fibre.group().clone();
        let trivial = g.trivial_subgroup();
        let mut acc = Rational::from_integer(0);
        for e in 0..g.order() {
            acc += coset_split_fraction(&fibre, &trivial, e, 1).unwrap();
        }
        assert_eq!(acc / Rational::from_integer(g.order() as i64), cycle_split_density(&fibre, 1));
    }

    #[test]
    fn pattern_table_rows() {
        // trivial group, single point
        let fibre = trivial_group_fibre(1);
        let rows = class_pattern_table(&fibre);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].patterns[0].factors, vec![vec![1]]);
        assert_eq!(rows[0].index, 1);

        // A4 on 6 cosets, in class enumeration order
        let fibre = a4_mod_c2_fibre();
        let rows = class_pattern_table(&fibre);
        let summary: Vec<(usize, Vec<usize>)> = rows
            .iter()
            .map(|r| (r.size, r.patterns[0].factors[0].clone()))
            .collect();
        assert_eq!(
            summary,
            vec![
                (1, vec![1, 1, 1, 1, 1, 1]),
                (4, vec![3, 3]),
                (3, vec![1, 1, 2, 2]),
                (4, vec![3, 3]),
            ]
        );

        // C2 regular action
        let g = Arc::new(PermutationGroup::generate(2, &[cycles(2, "(0 1)")], 10).unwrap());
        let fibre = FibreModel::from_algebra(
            EtaleAlgebraModel::new(g.clone(), vec![g.coset_action(&g.trivial_subgroup()).unwrap()])
                .unwrap(),
        );
        let rows = class_pattern_table(&fibre);
        let summary: Vec<(usize, Vec<usize>)> = rows
            .iter()
            .map(|r| (r.size, r.patterns[0].factors[0].clone()))
            .collect();
        assert_eq!(summary, vec![(1, vec![1, 1]), (1, vec![2])]);
    }

    #[test]
    fn construction_errors() {
        let g = a4();
        assert!(matches!(
            EtaleAlgebraModel::new(g.clone(), vec![]),
            Err(ModelError::EmptyAlgebra)
        ));
        assert!(matches!(
            FibreModel::new(g.clone(), vec![]),
            Err(ModelError::EmptyFibre)
        ));
        let h = g.subgroup(&[cycles(4, "(0 1)(2 3)")]).unwrap();
        let act = g.coset_action(&h).unwrap();
        let algebra = EtaleAlgebraModel::new(g.clone(), vec![act]).unwrap();
        assert!(matches!(
            FibreModel::new(g.clone(), vec![(0, algebra.clone())]),
            Err(ModelError::ZeroMultiplicity)
        ));
        assert!(matches!(
            FibreModel::new(g.clone(), vec![(2, algebra.clone()), (2, algebra.clone())]),
            Err(ModelError::DuplicateMultiplicity(2))
        ));
        let other = Arc::new(PermutationGroup::generate(2, &[cycles(2, "(0 1)")], 10).unwrap());
        assert!(matches!(
            FibreModel::new(other, vec![(1, algebra)]),
            Err(ModelError::GroupMismatch)
        ));
    }

    #[test]
    fn index_divides_order_times_multiplicity_gcd() {
        let fibre = a4_mod_c2_fibre();
        let g = fibre.group().clone();
        for e in 0..g.order() {
            let idx = combinatorial_index(&fibre, e);
            assert_eq!(g.element_order(e) % idx, 0);
        }
    }

    #[test]
    fn monotone_in_r() {
        let fibre = a4_mod_c2_fibre();
        for r in 1..=6u64 {
            for mult in 1..=4u64 {
                let rr = r * mult;
                if is_combinatorially_cycle_split(&fibre, r).verdict {
                    assert!(is_combinatorially_cycle_split(&fibre, rr).verdict);
                }
            }
        }
    }
}
