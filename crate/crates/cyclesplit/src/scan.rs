//! Prime-by-prime verification of local cycle-splitness for an algebra
//! given by monic integer polynomials, with witness zero-cycles and
//! cross-validation of the observed Frobenius statistics against a group
//! model.
//!
//! A prime is *ramified* (and skipped) when it divides the discriminant
//! of the product of all defining polynomials; that single divisibility
//! test catches both repeated factors modulo p within one polynomial and
//! collisions between different polynomials. Everything else is scanned:
//! factor-degree patterns per polynomial, the multiplicity-weighted local
//! index, the divisibility verdict, and — when the verdict holds — an
//! explicit witness combination of factor degrees summing to `r`.
//!
//! The prime range is partitioned across rayon workers; records are
//! collected back in prime order, so output is byte-identical regardless
//! of the worker count.

use num::bigint::BigInt;
use num::traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

use crate::etale::{
    class_pattern_table, cycle_split_density, ComponentCycleTypes, FibreModel,
};
use crate::poly::{factor_degree_pattern, prime_stream, DegreePattern, IntPolynomial, PolyError};
use crate::rational::{rational_to_string, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScanError {
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("a component has no factor degrees")]
    EmptyComponent,
    #[error("no witness: the degree gcd does not divide r")]
    NoWitness,
    #[error("no unramified records to validate against")]
    NoRecords,
    #[error("invalid scan parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// One multiplicity-weighted component: the polynomials defining its
/// field factors.
#[derive(Clone, Debug)]
pub struct ScanComponent {
    pub multiplicity: u64,
    pub polynomials: Vec<IntPolynomial>,
}

/// Everything a scan needs. The optional model enables Chebotarev
/// cross-validation of the observed patterns.
#[derive(Clone, Debug)]
pub struct ScanSpec {
    pub components: Vec<ScanComponent>,
    pub r: u64,
    pub prime_bound: u64,
    pub tolerance: Rational,
    pub model: Option<FibreModel>,
}

impl ScanSpec {
    pub fn validate(&self) -> Result<(), ScanError> {
        if self.r < 1 {
            return Err(ScanError::InvalidParams("r must be at least 1".into()));
        }
        if self.prime_bound < 2 {
            return Err(ScanError::InvalidParams(
                "prime bound must be at least 2".into(),
            ));
        }
        if self.tolerance <= Rational::from_integer(0)
            || self.tolerance >= Rational::from_integer(1)
        {
            return Err(ScanError::InvalidParams(
                "tolerance must lie strictly between 0 and 1".into(),
            ));
        }
        if self.components.is_empty() {
            return Err(ScanError::InvalidParams("no components".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for c in &self.components {
            if c.multiplicity == 0 {
                return Err(ScanError::InvalidParams(
                    "multiplicities must be positive".into(),
                ));
            }
            if !seen.insert(c.multiplicity) {
                return Err(ScanError::InvalidParams(format!(
                    "duplicate multiplicity {}",
                    c.multiplicity
                )));
            }
            if c.polynomials.is_empty() {
                return Err(ScanError::EmptyComponent);
            }
            for f in &c.polynomials {
                if !f.is_squarefree() {
                    return Err(ScanError::InvalidPolynomial(format!(
                        "{f} has a repeated rational root"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Product of every defining polynomial, across all components.
    fn full_product(&self) -> IntPolynomial {
        let mut iter = self
            .components
            .iter()
            .flat_map(|c| c.polynomials.iter());
        let first = iter.next().expect("validated spec has polynomials").clone();
        iter.fold(first, |acc, f| acc.product(f))
    }
}

/// Factor-degree patterns of one component at one prime.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComponentPatterns {
    pub multiplicity: u64,
    /// One degree multiset per polynomial, in input order.
    pub patterns: Vec<DegreePattern>,
}

/// One term of a witness zero-cycle: `coefficient` points of degree
/// `degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessTerm {
    pub degree: u64,
    pub coefficient: i64,
}

/// Everything recorded about a single prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeScanRecord {
    pub prime: u64,
    pub ramified: bool,
    pub components: Vec<ComponentPatterns>,
    pub index: Option<u64>,
    pub split: Option<bool>,
    /// Present exactly when the prime is unramified and split.
    pub witness: Vec<WitnessTerm>,
    pub witness_maxdeg: Option<u64>,
}

/// Weighted local index and verdict from per-component degree patterns:
/// `index = gcd over components of (m · gcd of that component's
/// entries)`, split when the index divides `r`.
pub fn local_verdict(components: &[ComponentPatterns], r: u64) -> Result<(u64, bool), ScanError> {
    if components.is_empty() {
        return Err(ScanError::EmptyComponent);
    }
    let mut acc: u64 = 0;
    for comp in components {
        let mut inner: u64 = 0;
        for pattern in &comp.patterns {
            for &d in &pattern.0 {
                inner = num::integer::gcd(inner, d as u64);
            }
        }
        if inner == 0 {
            return Err(ScanError::EmptyComponent);
        }
        acc = num::integer::gcd(acc, comp.multiplicity * inner);
    }
    Ok((acc, r % acc == 0))
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// A zero-cycle of total degree `r` supported on the given point
/// degrees, minimizing the maximum degree used.
///
/// The chosen support is the sub-multiset `S` with `gcd(S) | r` whose
/// maximum is least, tie-broken by the lexicographically least sorted
/// `S`; integer coefficients come from iterated extended Euclid, scaled
/// so the terms sum to exactly `r`. Terms are reported once per distinct
/// degree.
pub fn witness_cycle(degrees: &[u64], r: u64) -> Result<Vec<WitnessTerm>, ScanError> {
    if degrees.is_empty() || r == 0 {
        return Err(ScanError::NoWitness);
    }
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    // Walk ascending until the running gcd divides r. All entries up to
    // that point (every entry below the final degree, plus one copy of
    // it) form the lexicographically least sorted support with minimal
    // maximum; adding further entries could only grow the sequence, and
    // stopping earlier cannot reach a gcd dividing r.
    let mut acc: u64 = 0;
    let mut cut = None;
    for (i, &d) in sorted.iter().enumerate() {
        acc = num::integer::gcd(acc, d);
        if r % acc == 0 {
            cut = Some(i);
            break;
        }
    }
    let Some(cut) = cut else {
        return Err(ScanError::NoWitness);
    };
    let support = &sorted[..=cut];
    let mut distinct: Vec<u64> = support.to_vec();
    distinct.dedup();
    let mut g = distinct[0] as i64;
    let mut coeffs: Vec<i64> = vec![1];
    for &d in &distinct[1..] {
        let (g2, x, y) = ext_gcd(g, d as i64);
        for c in coeffs.iter_mut() {
            *c *= x;
        }
        coeffs.push(y);
        g = g2;
    }
    let scale = (r / g as u64) as i64;
    let terms: Vec<WitnessTerm> = distinct
        .iter()
        .zip(coeffs)
        .map(|(&degree, c)| WitnessTerm {
            degree,
            coefficient: c * scale,
        })
        .collect();
    debug_assert_eq!(
        terms
            .iter()
            .map(|t| t.coefficient * t.degree as i64)
            .sum::<i64>(),
        r as i64
    );
    Ok(terms)
}

/// Echo of one component of the input, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEcho {
    pub multiplicity: u64,
    pub polynomials: Vec<PolynomialEcho>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialEcho {
    pub display: String,
    /// Constant term first, as decimal strings.
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecEcho {
    pub components: Vec<ComponentEcho>,
    pub r: u64,
    pub prime_bound: u64,
    pub tolerance: String,
}

/// One per-pattern frequency row of a scan summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternFrequencyRow {
    pub pattern: Vec<ComponentCycleTypes>,
    pub count: u64,
    pub frequency: String,
}

/// One row of a cross-validation report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidationRow {
    pub pattern: Vec<ComponentCycleTypes>,
    /// Conjugacy classes of the model realizing this pattern.
    pub classes: Vec<usize>,
    pub predicted: String,
    pub observed_count: u64,
    pub empirical: String,
    pub within_tolerance: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidationReport {
    pub tolerance: String,
    pub records_used: usize,
    pub rows: Vec<CrossValidationRow>,
    /// Every observed pattern is realized by at least one class.
    pub membership_pass: bool,
    /// Every row's |empirical − predicted| is within tolerance.
    pub frequency_pass: bool,
    pub pass: bool,
}

/// Aggregated scan statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub spec: SpecEcho,
    pub primes_scanned: usize,
    pub ramified_primes: Vec<u64>,
    pub unramified_count: usize,
    pub split_count: usize,
    /// Exact fraction of unramified primes that are split; absent when
    /// every scanned prime was ramified.
    pub split_density: Option<String>,
    pub max_witness_maxdeg: Option<u64>,
    pub patterns: Vec<PatternFrequencyRow>,
    /// Model-predicted split density, when a model was supplied.
    pub predicted_split_density: Option<String>,
    pub density_within_tolerance: Option<bool>,
    pub cross_validation: Option<CrossValidationReport>,
}

fn divisible(n: &BigInt, p: u64) -> bool {
    (n % BigInt::from(p)).is_zero()
}

fn scan_prime(spec: &ScanSpec, disc: &BigInt, p: u64) -> PrimeScanRecord {
    if divisible(disc, p) {
        return PrimeScanRecord {
            prime: p,
            ramified: true,
            components: Vec::new(),
            index: None,
            split: None,
            witness: Vec::new(),
            witness_maxdeg: None,
        };
    }
    let components: Vec<ComponentPatterns> = spec
        .components
        .iter()
        .map(|c| ComponentPatterns {
            multiplicity: c.multiplicity,
            patterns: c
                .polynomials
                .iter()
                .map(|f| {
                    let reduced = f.reduce_mod(p).expect("p is prime and below the bound");
                    factor_degree_pattern(&reduced)
                        .expect("unramified primes give squarefree reductions")
                })
                .collect(),
        })
        .collect();
    let (index, split) =
        local_verdict(&components, spec.r).expect("validated spec has nonempty components");
    let (witness, witness_maxdeg) = if split {
        let degrees: Vec<u64> = components
            .iter()
            .flat_map(|c| {
                c.patterns
                    .iter()
                    .flat_map(move |pat| pat.0.iter().map(move |&d| c.multiplicity * d as u64))
            })
            .collect();
        let terms = witness_cycle(&degrees, spec.r).expect("split index divides r");
        let maxdeg = terms.iter().map(|t| t.degree).max();
        (terms, maxdeg)
    } else {
        (Vec::new(), None)
    };
    PrimeScanRecord {
        prime: p,
        ramified: false,
        components,
        index: Some(index),
        split: Some(split),
        witness,
        witness_maxdeg,
    }
}

fn canonical_pattern(components: &[ComponentPatterns]) -> Vec<ComponentCycleTypes> {
    let mut canon: Vec<ComponentCycleTypes> = components
        .iter()
        .map(|c| ComponentCycleTypes {
            multiplicity: c.multiplicity,
            factors: c.patterns.iter().map(|p| p.0.clone()).collect(),
        })
        .collect();
    canon.sort_by_key(|c| c.multiplicity);
    canon
}

/// Runs the scan over every prime up to the bound.
///
/// Returns the per-prime records in prime order together with the
/// aggregated summary. The record sequence does not depend on how many
/// rayon workers are active.
pub fn scan(spec: &ScanSpec) -> Result<(Vec<PrimeScanRecord>, ScanSummary), ScanError> {
    spec.validate()?;
    let product = spec.full_product();
    let disc = product.discriminant();
    if disc.is_zero() {
        return Err(ScanError::InvalidPolynomial(
            "defining polynomials share a rational root; every prime would be ramified".into(),
        ));
    }
    let primes = prime_stream(spec.prime_bound);
    let records: Vec<PrimeScanRecord> = primes
        .par_iter()
        .map(|&p| scan_prime(spec, &disc, p))
        .collect();

    let ramified_primes: Vec<u64> = records
        .iter()
        .filter(|r| r.ramified)
        .map(|r| r.prime)
        .collect();
    let unramified_count = records.len() - ramified_primes.len();
    let split_count = records.iter().filter(|r| r.split == Some(true)).count();
    let split_density = if unramified_count > 0 {
        Some(Rational::new(split_count as i64, unramified_count as i64))
    } else {
        None
    };
    let max_witness_maxdeg = records.iter().filter_map(|r| r.witness_maxdeg).max();

    let mut pattern_counts: BTreeMap<Vec<ComponentCycleTypes>, u64> = BTreeMap::new();
    for rec in records.iter().filter(|r| !r.ramified) {
        *pattern_counts
            .entry(canonical_pattern(&rec.components))
            .or_insert(0) += 1;
    }
    let patterns: Vec<PatternFrequencyRow> = pattern_counts
        .iter()
        .map(|(pattern, &count)| PatternFrequencyRow {
            pattern: pattern.clone(),
            count,
            frequency: rational_to_string(&Rational::new(
                count as i64,
                unramified_count as i64,
            )),
        })
        .collect();

    let (predicted_split_density, density_within_tolerance, cross_validation) =
        if let Some(model) = &spec.model {
            let predicted = cycle_split_density(model, spec.r);
            let within = split_density
                .map(|emp| (emp - predicted).abs() <= spec.tolerance);
            let report = cross_validate(&records, model, spec.tolerance)?;
            (
                Some(rational_to_string(&predicted)),
                within,
                Some(report),
            )
        } else {
            (None, None, None)
        };

    let summary = ScanSummary {
        spec: SpecEcho {
            components: spec
                .components
                .iter()
                .map(|c| ComponentEcho {
                    multiplicity: c.multiplicity,
                    polynomials: c
                        .polynomials
                        .iter()
                        .map(|f| PolynomialEcho {
                            display: f.to_string(),
                            coefficients: f
                                .coefficients()
                                .iter()
                                .map(|c| c.to_string())
                                .collect(),
                        })
                        .collect(),
                })
                .collect(),
            r: spec.r,
            prime_bound: spec.prime_bound,
            tolerance: rational_to_string(&spec.tolerance),
        },
        primes_scanned: records.len(),
        ramified_primes,
        unramified_count,
        split_count,
        split_density: split_density.map(|d| rational_to_string(&d)),
        max_witness_maxdeg,
        patterns,
        predicted_split_density,
        density_within_tolerance,
        cross_validation,
    };
    Ok((records, summary))
}

/// Compares observed pattern frequencies with the Chebotarev predictions
/// of a group model.
///
/// Scan components are matched to model components by multiplicity and
/// polynomials to factors by position. Two checks are made: every
/// observed pattern tuple must be realized by at least one conjugacy
/// class, and for every pattern tuple (observed or predicted) the
/// empirical frequency must lie within `tolerance` of the summed class
/// densities.
pub fn cross_validate(
    records: &[PrimeScanRecord],
    model: &FibreModel,
    tolerance: Rational,
) -> Result<CrossValidationReport, ScanError> {
    let unramified: Vec<&PrimeScanRecord> = records.iter().filter(|r| !r.ramified).collect();
    if unramified.is_empty() {
        return Err(ScanError::NoRecords);
    }
    let total = unramified.len() as i64;
    let order = model.group().order() as i64;

    let mut predicted: BTreeMap<Vec<ComponentCycleTypes>, (Vec<usize>, Rational)> =
        BTreeMap::new();
    for row in class_pattern_table(model) {
        let entry = predicted
            .entry(row.patterns.clone())
            .or_insert_with(|| (Vec::new(), Rational::from_integer(0)));
        entry.0.push(row.class);
        entry.1 += Rational::new(row.size as i64, order);
    }

    let mut observed: BTreeMap<Vec<ComponentCycleTypes>, u64> = BTreeMap::new();
    for rec in &unramified {
        *observed
            .entry(canonical_pattern(&rec.components))
            .or_insert(0) += 1;
    }

    let mut keys: Vec<Vec<ComponentCycleTypes>> = predicted
        .keys()
        .chain(observed.keys())
        .cloned()
        .collect();
    keys.sort();
    keys.dedup();

    let mut rows = Vec::new();
    let mut membership_pass = true;
    let mut frequency_pass = true;
    for key in keys {
        let (classes, pred) = predicted
            .get(&key)
            .cloned()
            .unwrap_or_else(|| (Vec::new(), Rational::from_integer(0)));
        let count = observed.get(&key).copied().unwrap_or(0);
        let empirical = Rational::new(count as i64, total);
        if count > 0 && classes.is_empty() {
            membership_pass = false;
        }
        let within = (empirical - pred).abs() <= tolerance;
        if !within {
            frequency_pass = false;
        }
        rows.push(CrossValidationRow {
            pattern: key,
            classes,
            predicted: rational_to_string(&pred),
            observed_count: count,
            empirical: rational_to_string(&empirical),
            within_tolerance: within,
        });
    }
    Ok(CrossValidationReport {
        tolerance: rational_to_string(&tolerance),
        records_used: unramified.len(),
        rows,
        membership_pass,
        frequency_pass,
        pass: membership_pass && frequency_pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::etale::EtaleAlgebraModel;
    use crate::perm::{Permutation, PermutationGroup, DEFAULT_ORDER_CAP};
    use std::sync::Arc;

    fn poly(s: &str) -> IntPolynomial {
        IntPolynomial::parse(s).unwrap()
    }

    fn pattern(entries: &[usize]) -> DegreePattern {
        DegreePattern(entries.to_vec())
    }

    fn spec(components: Vec<(u64, Vec<&str>)>, r: u64, bound: u64) -> ScanSpec {
        ScanSpec {
            components: components
                .into_iter()
                .map(|(m, polys)| ScanComponent {
                    multiplicity: m,
                    polynomials: polys.into_iter().map(poly).collect(),
                })
                .collect(),
            r,
            prime_bound: bound,
            tolerance: Rational::new(1, 50),
            model: None,
        }
    }

    #[test]
    fn local_verdicts() {
        let comps = vec![ComponentPatterns {
            multiplicity: 1,
            patterns: vec![pattern(&[2, 3])],
        }];
        assert_eq!(local_verdict(&comps, 1).unwrap(), (1, true));

        let comps = vec![ComponentPatterns {
            multiplicity: 1,
            patterns: vec![pattern(&[2, 2, 6])],
        }];
        assert_eq!(local_verdict(&comps, 1).unwrap(), (2, false));

        let comps = vec![
            ComponentPatterns {
                multiplicity: 2,
                patterns: vec![pattern(&[1])],
            },
            ComponentPatterns {
                multiplicity: 3,
                patterns: vec![pattern(&[1])],
            },
        ];
        assert_eq!(local_verdict(&comps, 1).unwrap(), (1, true));

        assert_eq!(local_verdict(&[], 1), Err(ScanError::EmptyComponent));
    }

    #[test]
    fn witness_cycles() {
        let w = witness_cycle(&[2, 3], 1).unwrap();
        assert_eq!(
            w,
            vec![
                WitnessTerm { degree: 2, coefficient: -1 },
                WitnessTerm { degree: 3, coefficient: 1 }
            ]
        );
        let w = witness_cycle(&[1, 4, 6], 1).unwrap();
        assert_eq!(w, vec![WitnessTerm { degree: 1, coefficient: 1 }]);
        let w = witness_cycle(&[4, 6], 2).unwrap();
        assert_eq!(
            w,
            vec![
                WitnessTerm { degree: 4, coefficient: -1 },
                WitnessTerm { degree: 6, coefficient: 1 }
            ]
        );
        assert_eq!(witness_cycle(&[2, 4], 3), Err(ScanError::NoWitness));
        assert_eq!(witness_cycle(&[], 1), Err(ScanError::NoWitness));
    }

    #[test]
    fn witness_sum_is_exact() {
        for degrees in [[2u64, 3, 7].as_slice(), &[4, 6, 9], &[5, 5, 3], &[8, 8]] {
            for r in 1..=8u64 {
                match witness_cycle(degrees, r) {
                    Ok(terms) => {
                        let sum: i64 =
                            terms.iter().map(|t| t.coefficient * t.degree as i64).sum();
                        assert_eq!(sum, r as i64);
                    }
                    Err(ScanError::NoWitness) => {
                        let g = degrees.iter().copied().fold(0, num::integer::gcd);
                        assert_ne!(r % g, 0);
                    }
                    Err(e) => panic!("unexpected {e:?}"),
                }
            }
        }
    }

    #[test]
    fn scan_rejects_bad_input() {
        let s = spec(vec![(1, vec!["t^2-2t+1"])], 1, 100);
        assert!(matches!(scan(&s), Err(ScanError::InvalidPolynomial(_))));
        let s = spec(vec![(1, vec!["t^2-2"]), (1, vec!["t^2-3"])], 1, 100);
        assert!(matches!(scan(&s), Err(ScanError::InvalidParams(_))));
        // duplicate factor across components makes every prime ramified
        let s = spec(vec![(1, vec!["t^2-2"]), (2, vec!["t^2-2"])], 1, 100);
        assert!(matches!(scan(&s), Err(ScanError::InvalidPolynomial(_))));
        let mut s = spec(vec![(1, vec!["t^2-2"])], 1, 100);
        s.prime_bound = 1;
        assert!(matches!(scan(&s), Err(ScanError::InvalidParams(_))));
    }

    #[test]
    fn quadratic_scan_statistics() {
        // t^2+1: ramified at 2, split exactly at p ≡ 1 mod 4.
        let s = spec(vec![(1, vec!["t^2+1"])], 1, 100);
        let (records, summary) = scan(&s).unwrap();
        assert_eq!(summary.ramified_primes, vec![2]);
        assert_eq!(summary.primes_scanned, 25);
        for rec in records.iter().filter(|r| !r.ramified) {
            let split = rec.prime % 4 == 1;
            assert_eq!(rec.split, Some(split), "p = {}", rec.prime);
            if split {
                assert_eq!(rec.witness, vec![WitnessTerm { degree: 1, coefficient: 1 }]);
                assert_eq!(rec.witness_maxdeg, Some(1));
            } else {
                assert!(rec.witness.is_empty());
            }
            let total: usize = rec.components[0].patterns[0].0.iter().sum();
            assert_eq!(total, 2);
        }
    }

    #[test]
    fn example_scan_is_split_everywhere() {
        let s = spec(vec![(1, vec!["t^2+1", "t^6-3t^2-1"])], 1, 2000);
        let (records, summary) = scan(&s).unwrap();
        assert_eq!(summary.ramified_primes, vec![2, 3]);
        assert_eq!(summary.split_count, summary.unramified_count);
        assert_eq!(summary.split_density.as_deref(), Some("1"));
        // the sextic never stays irreducible
        for rec in records.iter().filter(|r| !r.ramified) {
            assert_ne!(rec.components[0].patterns[1], pattern(&[6]));
        }
    }

    fn a4_model() -> FibreModel {
        let g = Arc::new(
            PermutationGroup::generate(
                4,
                &[
                    Permutation::parse_cycles(4, "(0 1 2)").unwrap(),
                    Permutation::parse_cycles(4, "(0 1)(2 3)").unwrap(),
                ],
                DEFAULT_ORDER_CAP,
            )
            .unwrap(),
        );
        let h = g
            .subgroup(&[Permutation::parse_cycles(4, "(0 1)(2 3)").unwrap()])
            .unwrap();
        let act = g.coset_action(&h).unwrap();
        FibreModel::from_algebra(EtaleAlgebraModel::new(g, vec![act]).unwrap())
    }

    #[test]
    fn cross_validation_against_a4() {
        let mut s = spec(vec![(1, vec!["t^6-3t^2-1"])], 1, 10_000);
        s.tolerance = Rational::new(1, 20); // generous at this bound
        s.model = Some(a4_model());
        let (_, summary) = scan(&s).unwrap();
        let report = summary.cross_validation.unwrap();
        assert!(report.membership_pass);
        assert!(report.frequency_pass, "{:#?}", report.rows);
        assert!(report.pass);
        // predictions are 1/12, 3/12 = 1/4, 8/12 = 2/3
        let preds: Vec<&str> = report.rows.iter().map(|r| r.predicted.as_str()).collect();
        assert_eq!(preds.len(), 3);
        assert!(preds.contains(&"1/12"));
        assert!(preds.contains(&"1/4"));
        assert!(preds.contains(&"2/3"));
    }

    #[test]
    fn wrong_model_fails_membership() {
        // C3 cannot produce the pattern {2} of an inert quadratic prime.
        let g = Arc::new(
            PermutationGroup::generate(
                3,
                &[Permutation::parse_cycles(3, "(0 1 2)").unwrap()],
                DEFAULT_ORDER_CAP,
            )
            .unwrap(),
        );
        let act = g.coset_action(&g.trivial_subgroup()).unwrap();
        let model =
            FibreModel::from_algebra(EtaleAlgebraModel::new(g, vec![act]).unwrap());
        let s = spec(vec![(1, vec!["t^2+1"])], 1, 200);
        let (records, _) = scan(&s).unwrap();
        let report = cross_validate(&records, &model, Rational::new(1, 50)).unwrap();
        assert!(!report.membership_pass);
        assert!(!report.pass);
    }

    #[test]
    fn no_records_is_an_error() {
        let model = a4_model();
        assert_eq!(
            cross_validate(&[], &model, Rational::new(1, 50)),
            Err(ScanError::NoRecords)
        );
    }

    #[test]
    fn records_are_deterministic_across_worker_counts() {
        let s = spec(vec![(1, vec!["t^2+1", "t^6-3t^2-1"])], 1, 3000);
        let pool1 = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let pool4 = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let (r1, s1) = pool1.install(|| scan(&s)).unwrap();
        let (r4, s4) = pool4.install(|| scan(&s)).unwrap();
        assert_eq!(r1, r4);
        assert_eq!(
            serde_json::to_string(&s1).unwrap(),
            serde_json::to_string(&s4).unwrap()
        );
    }

    #[test]
    fn verdict_recomputable_from_patterns() {
        let s = spec(vec![(2, vec!["t^2+1"]), (3, vec!["t^3-2"])], 1, 500);
        let (records, _) = scan(&s).unwrap();
        for rec in records.iter().filter(|r| !r.ramified) {
            let (index, split) = local_verdict(&rec.components, 1).unwrap();
            assert_eq!(Some(index), rec.index);
            assert_eq!(Some(split), rec.split);
            for comp in &rec.components {
                let deg: usize = comp.patterns.iter().map(|p| p.total()).sum();
                let expect: usize = match comp.multiplicity {
                    2 => 2,
                    3 => 3,
                    _ => unreachable!(),
                };
                assert_eq!(deg, expect);
            }
        }
    }
}
