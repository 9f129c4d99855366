//! JSON input formats: group files, fibre specifications and scan
//! specifications.
//!
//! Permutations may be written either as image arrays (`[1, 0, 3, 2]`)
//! or as cycle-notation strings (`"(0 1)(2 3)"`); polynomials either as
//! constant-first coefficient arrays (`[-1, 0, -3, 0, 0, 0, 1]`) or as
//! strings (`"t^6-3t^2-1"`). Nested files are referenced by path,
//! resolved relative to the referencing file.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num::bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::etale::{EtaleAlgebraModel, FibreModel, ModelError};
use crate::perm::{GroupError, Permutation, PermutationGroup, SubgroupHandle, DEFAULT_ORDER_CAP};
use crate::poly::{IntPolynomial, PolyError};
use crate::rational::Rational;
use crate::scan::{ScanComponent, ScanSpec};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("unknown subgroup {0:?}")]
    UnknownSubgroup(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A permutation literal: image array or cycle string.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PermLiteral {
    Images(Vec<usize>),
    Cycles(String),
}

impl PermLiteral {
    pub fn build(&self, degree: usize) -> Result<Permutation, GroupError> {
        match self {
            PermLiteral::Images(images) => {
                let p = Permutation::new(images.clone())?;
                if p.degree() != degree {
                    return Err(GroupError::DegreeMismatch {
                        expected: degree,
                        found: p.degree(),
                    });
                }
                Ok(p)
            }
            PermLiteral::Cycles(s) => Permutation::parse_cycles(degree, s),
        }
    }
}

/// On-disk group description.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<PermLiteral>,
    #[serde(default)]
    pub subgroups: BTreeMap<String, Vec<PermLiteral>>,
    /// Optional enumeration cap; defaults to 100 000 elements.
    #[serde(default)]
    pub cap: Option<usize>,
}

/// A group together with its named subgroups.
#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub group: Arc<PermutationGroup>,
    pub subgroups: BTreeMap<String, SubgroupHandle>,
}

impl GroupFile {
    pub fn build(&self) -> Result<LoadedGroup, InputError> {
        let generators: Vec<Permutation> = self
            .generators
            .iter()
            .map(|l| l.build(self.degree))
            .collect::<Result<_, _>>()?;
        let cap = self.cap.unwrap_or(DEFAULT_ORDER_CAP);
        let group = Arc::new(PermutationGroup::generate(self.degree, &generators, cap)?);
        let mut subgroups = BTreeMap::new();
        for (name, literals) in &self.subgroups {
            let gens: Vec<Permutation> = literals
                .iter()
                .map(|l| l.build(self.degree))
                .collect::<Result<_, _>>()?;
            subgroups.insert(name.clone(), group.subgroup(&gens)?);
        }
        Ok(LoadedGroup { group, subgroups })
    }
}

/// Inline value or path to another file.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Reference<T> {
    Path(String),
    Inline(T),
}

/// One factor of a fibre component.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "action", rename_all = "lowercase")]
pub enum FactorSpec {
    /// Coset action on a named subgroup of the group file.
    Coset { subgroup: String },
    /// Action given by the images of each group generator on
    /// `{0, …, points−1}`.
    Explicit {
        points: usize,
        table: Vec<PermLiteral>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComponentSpecFile {
    pub multiplicity: u64,
    pub factors: Vec<FactorSpec>,
}

/// On-disk fibre description: an ambient group plus one entry per
/// multiplicity.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FibreFile {
    pub group: Reference<GroupFile>,
    pub components: Vec<ComponentSpecFile>,
}

/// A polynomial literal: constant-first coefficients or a string.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyLiteral {
    Coefficients(Vec<i64>),
    Text(String),
}

impl PolyLiteral {
    pub fn build(&self) -> Result<IntPolynomial, PolyError> {
        match self {
            PolyLiteral::Coefficients(c) => {
                IntPolynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
            }
            PolyLiteral::Text(s) => IntPolynomial::parse(s),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanComponentFile {
    pub multiplicity: u64,
    pub polynomials: Vec<PolyLiteral>,
}

/// On-disk scan description. `r`, the prime bound and the tolerance come
/// from the command line.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanFile {
    pub components: Vec<ScanComponentFile>,
    #[serde(default)]
    pub model: Option<Reference<FibreFile>>,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| InputError::Json {
        path: path.to_path_buf(),
        source,
    })
}

fn resolve(base: &Path, relative: &str) -> PathBuf {
    let p = Path::new(relative);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

/// Loads a group file from disk.
pub fn load_group(path: &Path) -> Result<LoadedGroup, InputError> {
    read_json::<GroupFile>(path)?.build()
}

/// Builds a fibre model from a parsed description; `base` resolves any
/// nested group path.
pub fn build_fibre(file: &FibreFile, base: &Path) -> Result<FibreModel, InputError> {
    let loaded = match &file.group {
        Reference::Path(p) => load_group(&resolve(base, p))?,
        Reference::Inline(g) => g.build()?,
    };
    let mut components = Vec::new();
    for comp in &file.components {
        let mut factors = Vec::new();
        for factor in &comp.factors {
            let action = match factor {
                FactorSpec::Coset { subgroup } => {
                    let handle = loaded
                        .subgroups
                        .get(subgroup)
                        .ok_or_else(|| InputError::UnknownSubgroup(subgroup.clone()))?;
                    loaded.group.coset_action(handle)?
                }
                FactorSpec::Explicit { points, table } => {
                    let tables: Vec<Permutation> = table
                        .iter()
                        .map(|l| l.build(*points))
                        .collect::<Result<_, _>>()?;
                    loaded.group.action_from_generator_tables(*points, &tables)?
                }
            };
            factors.push(action);
        }
        let algebra = EtaleAlgebraModel::new(loaded.group.clone(), factors)?;
        components.push((comp.multiplicity, algebra));
    }
    Ok(FibreModel::new(loaded.group.clone(), components)?)
}

/// Loads a fibre file from disk.
pub fn load_fibre(path: &Path) -> Result<FibreModel, InputError> {
    let file: FibreFile = read_json(path)?;
    let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    build_fibre(&file, &base)
}

/// Loads a scan file and combines it with command-line parameters.
pub fn load_scan(
    path: &Path,
    r: u64,
    prime_bound: u64,
    tolerance: Rational,
) -> Result<ScanSpec, InputError> {
    let file: ScanFile = read_json(path)?;
    let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    let components: Vec<ScanComponent> = file
        .components
        .iter()
        .map(|c| {
            Ok(ScanComponent {
                multiplicity: c.multiplicity,
                polynomials: c
                    .polynomials
                    .iter()
                    .map(|l| l.build())
                    .collect::<Result<_, PolyError>>()?,
            })
        })
        .collect::<Result<_, InputError>>()?;
    let model = match &file.model {
        Some(Reference::Path(p)) => Some(load_fibre(&resolve(&base, p))?),
        Some(Reference::Inline(f)) => Some(build_fibre(f, &base)?),
        None => None,
    };
    Ok(ScanSpec {
        components,
        r,
        prime_bound,
        tolerance,
        model,
    })
}
