//! A bundled list of small permutation groups used by the verification
//! sweeps: cyclic and dihedral families, the quaternion group, the small
//! alternating and symmetric groups, direct products, a Frobenius group,
//! and PSL(2,7).

use crate::perm::{PermutationGroup, Permutation, DEFAULT_ORDER_CAP};

/// One named generator list.
#[derive(Clone, Copy, Debug)]
pub struct CorpusGroup {
    pub name: &'static str,
    pub degree: usize,
    pub generators: &'static [&'static str],
    /// The group order (verified by the test suite).
    pub order: usize,
}

/// Groups of order up to 200.
pub fn corpus() -> Vec<CorpusGroup> {
    vec![
        CorpusGroup { name: "c2", degree: 2, generators: &["(0 1)"], order: 2 },
        CorpusGroup { name: "c3", degree: 3, generators: &["(0 1 2)"], order: 3 },
        CorpusGroup { name: "c4", degree: 4, generators: &["(0 1 2 3)"], order: 4 },
        CorpusGroup { name: "v4", degree: 4, generators: &["(0 1)(2 3)", "(0 2)(1 3)"], order: 4 },
        CorpusGroup { name: "c5", degree: 5, generators: &["(0 1 2 3 4)"], order: 5 },
        CorpusGroup { name: "c6", degree: 6, generators: &["(0 1 2 3 4 5)"], order: 6 },
        CorpusGroup { name: "s3", degree: 3, generators: &["(0 1 2)", "(0 1)"], order: 6 },
        CorpusGroup { name: "c7", degree: 7, generators: &["(0 1 2 3 4 5 6)"], order: 7 },
        CorpusGroup { name: "c8", degree: 8, generators: &["(0 1 2 3 4 5 6 7)"], order: 8 },
        CorpusGroup { name: "c2xc2xc2", degree: 6, generators: &["(0 1)", "(2 3)", "(4 5)"], order: 8 },
        CorpusGroup { name: "d4", degree: 4, generators: &["(0 1 2 3)", "(0 2)"], order: 8 },
        CorpusGroup { name: "q8", degree: 8, generators: &["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"], order: 8 },
        CorpusGroup { name: "c9", degree: 9, generators: &["(0 1 2 3 4 5 6 7 8)"], order: 9 },
        CorpusGroup { name: "d5", degree: 5, generators: &["(0 1 2 3 4)", "(1 4)(2 3)"], order: 10 },
        CorpusGroup { name: "a4", degree: 4, generators: &["(0 1 2)", "(0 1)(2 3)"], order: 12 },
        CorpusGroup { name: "d6", degree: 6, generators: &["(0 1 2 3 4 5)", "(1 5)(2 4)"], order: 12 },
        CorpusGroup { name: "c12", degree: 7, generators: &["(0 1 2)(3 4 5 6)"], order: 12 },
        CorpusGroup { name: "c15", degree: 8, generators: &["(0 1 2)(3 4 5 6 7)"], order: 15 },
        CorpusGroup { name: "f20", degree: 5, generators: &["(0 1 2 3 4)", "(1 2 4 3)"], order: 20 },
        CorpusGroup { name: "s4", degree: 4, generators: &["(0 1 2 3)", "(0 1)"], order: 24 },
        CorpusGroup { name: "c2xa4", degree: 6, generators: &["(0 1)", "(2 3 4)", "(2 3)(4 5)"], order: 24 },
        CorpusGroup { name: "a5", degree: 5, generators: &["(0 1 2 3 4)", "(0 1 2)"], order: 60 },
        CorpusGroup { name: "s5", degree: 5, generators: &["(0 1 2 3 4)", "(0 1)"], order: 120 },
        CorpusGroup { name: "c2xa5", degree: 7, generators: &["(0 1)", "(2 3 4 5 6)", "(2 3 4)"], order: 120 },
        CorpusGroup { name: "psl27", degree: 8, generators: &["(0 1 2 3 4 5 6)", "(0 7)(1 6)(2 3)(4 5)"], order: 168 },
    ]
}

/// The subset of the corpus with order at most 60, for the exhaustive
/// Hasse-principle sweep.
pub fn hasse_corpus() -> Vec<CorpusGroup> {
    corpus().into_iter().filter(|g| g.order <= 60).collect()
}

/// Enumerates one corpus entry.
pub fn build(entry: &CorpusGroup) -> PermutationGroup {
    let gens: Vec<Permutation> = entry
        .generators
        .iter()
        .map(|s| Permutation::parse_cycles(entry.degree, s).expect("corpus notation is valid"))
        .collect();
    let g = PermutationGroup::generate(entry.degree, &gens, DEFAULT_ORDER_CAP)
        .expect("corpus groups are small");
    assert_eq!(g.order(), entry.order, "{} has unexpected order", entry.name);
    g
}
