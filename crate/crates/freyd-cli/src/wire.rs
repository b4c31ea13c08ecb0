//! Scenario wire format. Matrices are row-major; differentials and chain-map
//! components are keyed by source degree. Entries are plain integers, with
//! two extensions: decimal strings for values outside i64, and arrays of
//! residues for product-ring tuples (the diagonal embedding of an integer
//! cannot reach every tuple).

use std::collections::BTreeMap;
use std::str::FromStr;

use freyd::{ChainComplex, ChainMap, Matrix, RingElement, RingSpec};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryRecord {
    Int(i64),
    Big(String),
    Tuple(Vec<i64>),
}

pub type MatrixRecord = Vec<Vec<EntryRecord>>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexRecord {
    pub min_degree: i64,
    pub ranks: Vec<usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub differentials: BTreeMap<String, MatrixRecord>,
}

fn shift_is_zero(n: &i64) -> bool {
    *n == 0
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapRecord {
    pub source: String,
    pub target: String,
    #[serde(default, skip_serializing_if = "shift_is_zero")]
    pub degree_shift: i64,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub components: BTreeMap<String, MatrixRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Task {
    Homology {
        complex: String,
        degree: i64,
    },
    Cohomology {
        complex: String,
        degree: i64,
    },
    DerivedHom {
        source: String,
        target: String,
        #[serde(default, skip_serializing_if = "shift_is_zero")]
        degree: i64,
    },
    IsNullhomotopic {
        map: String,
    },
    IsGhost {
        map: String,
    },
    GhostGroup {
        source: String,
        target: String,
    },
    PfTensor {
        x: String,
        k: String,
    },
    PfCoequalizer {
        x: String,
        k: String,
    },
    Counit {
        x: String,
        k: String,
    },
    IdentityInCounitImage {
        complex: String,
    },
    LadderCheck {
        cone_of: String,
        x: String,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScenarioFile {
    pub ring: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub complexes: BTreeMap<String, ComplexRecord>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, MapRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tasks: Vec<Task>,
}

/// A scenario with every name resolved and every object validated. The
/// ring itself lives on the complexes.
pub struct Scenario {
    pub complexes: BTreeMap<String, ChainComplex>,
    pub maps: BTreeMap<String, ChainMap>,
    pub tasks: Vec<Task>,
}

pub fn parse_scenario(text: &str) -> Result<Scenario, CliError> {
    let file: ScenarioFile = serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("bad scenario JSON: {e}")))?;
    build_scenario(&file)
}

pub fn build_scenario(file: &ScenarioFile) -> Result<Scenario, CliError> {
    let ring = RingSpec::from_str(&file.ring).map_err(|e| CliError::Parse(e.to_string()))?;

    let mut complexes = BTreeMap::new();
    for (name, rec) in &file.complexes {
        complexes.insert(name.clone(), complex_from_record(&ring, name, rec)?);
    }

    let mut maps = BTreeMap::new();
    for (name, rec) in &file.maps {
        let source = complexes.get(&rec.source).ok_or_else(|| {
            CliError::Validation(format!(
                "map `{name}` references undefined complex `{}`",
                rec.source
            ))
        })?;
        let target = complexes.get(&rec.target).ok_or_else(|| {
            CliError::Validation(format!(
                "map `{name}` references undefined complex `{}`",
                rec.target
            ))
        })?;
        let mut components = BTreeMap::new();
        for (key, mat) in &rec.components {
            let i = parse_degree_key(key)?;
            let expected = (target.rank(i + rec.degree_shift), source.rank(i));
            components.insert(i, matrix_from_record(&ring, mat, expected)?);
        }
        let map =
            ChainMap::new_checked(source.clone(), target.clone(), rec.degree_shift, components)
                .map_err(|e| CliError::Validation(format!("map `{name}`: {e}")))?;
        maps.insert(name.clone(), map);
    }

    for (idx, task) in file.tasks.iter().enumerate() {
        for name in task_complex_refs(task) {
            if !complexes.contains_key(name) {
                return Err(CliError::Validation(format!(
                    "task {idx} references undefined complex `{name}`"
                )));
            }
        }
        for name in task_map_refs(task) {
            if !maps.contains_key(name) {
                return Err(CliError::Validation(format!(
                    "task {idx} references undefined map `{name}`"
                )));
            }
        }
    }

    Ok(Scenario { complexes, maps, tasks: file.tasks.clone() })
}

fn task_complex_refs(t: &Task) -> Vec<&str> {
    match t {
        Task::Homology { complex, .. }
        | Task::Cohomology { complex, .. }
        | Task::IdentityInCounitImage { complex } => vec![complex],
        Task::DerivedHom { source, target, .. } | Task::GhostGroup { source, target } => {
            vec![source, target]
        }
        Task::PfTensor { x, k } | Task::PfCoequalizer { x, k } | Task::Counit { x, k } => {
            vec![x, k]
        }
        Task::LadderCheck { x, .. } => vec![x],
        Task::IsNullhomotopic { .. } | Task::IsGhost { .. } => vec![],
    }
}

fn task_map_refs(t: &Task) -> Vec<&str> {
    match t {
        Task::IsNullhomotopic { map } | Task::IsGhost { map } => vec![map],
        Task::LadderCheck { cone_of, .. } => vec![cone_of],
        _ => vec![],
    }
}

fn parse_degree_key(key: &str) -> Result<i64, CliError> {
    key.parse()
        .map_err(|_| CliError::Parse(format!("degree key `{key}` is not an integer")))
}

fn complex_from_record(
    ring: &RingSpec,
    name: &str,
    rec: &ComplexRecord,
) -> Result<ChainComplex, CliError> {
    let n = rec.ranks.len();
    for key in rec.differentials.keys() {
        let i = parse_degree_key(key)?;
        if i <= rec.min_degree || i > rec.min_degree + n as i64 - 1 {
            return Err(CliError::Validation(format!(
                "complex `{name}`: differential keyed at degree {i} lies outside the declared degrees"
            )));
        }
    }
    let mut diffs = Vec::new();
    for k in 0..n.saturating_sub(1) {
        let i = rec.min_degree + k as i64 + 1;
        let expected = (rec.ranks[k], rec.ranks[k + 1]);
        let mat = match rec.differentials.get(&i.to_string()) {
            Some(m) => matrix_from_record(ring, m, expected)?,
            None => Matrix::zero(ring, expected.0, expected.1),
        };
        diffs.push(mat);
    }
    ChainComplex::new(ring, rec.min_degree, rec.ranks.clone(), diffs)
        .map_err(|e| CliError::Validation(format!("complex `{name}`: {e}")))
}

/// An empty record stands for the zero matrix of the expected shape (a
/// matrix with no rows or no columns has no entry to carry it).
fn matrix_from_record(
    ring: &RingSpec,
    rec: &MatrixRecord,
    expected: (usize, usize),
) -> Result<Matrix, CliError> {
    if rec.is_empty() || rec.iter().all(Vec::is_empty) {
        return Ok(Matrix::zero(ring, expected.0, expected.1));
    }
    let cols = rec[0].len();
    if rec.iter().any(|row| row.len() != cols) {
        return Err(CliError::Parse("matrix rows have unequal lengths".into()));
    }
    let mut entries = Vec::with_capacity(rec.len() * cols);
    for row in rec {
        for e in row {
            entries.push(entry_to_ring(ring, e)?);
        }
    }
    Ok(Matrix::from_fn(ring, rec.len(), cols, |i, j| entries[i * cols + j].clone()))
}

fn entry_to_ring(ring: &RingSpec, e: &EntryRecord) -> Result<RingElement, CliError> {
    match e {
        EntryRecord::Int(v) => Ok(ring.from_i64(*v)),
        EntryRecord::Big(s) => {
            let v = BigInt::from_str(s)
                .map_err(|_| CliError::Parse(format!("bad integer literal `{s}`")))?;
            Ok(ring.from_bigint(&v))
        }
        EntryRecord::Tuple(vs) => match ring {
            RingSpec::PrimeProduct(ps) if ps.len() == vs.len() => Ok(RingElement::Tuple(
                vs.iter().zip(ps).map(|(&v, &p)| v.rem_euclid(p as i64) as u64).collect(),
            )),
            _ => Err(CliError::Parse(format!(
                "tuple entry {vs:?} does not fit the ring {ring}"
            ))),
        },
    }
}

fn entry_from_ring(e: &RingElement) -> EntryRecord {
    match e {
        RingElement::Int(v) => match v.to_i64() {
            Some(x) => EntryRecord::Int(x),
            None => EntryRecord::Big(v.to_string()),
        },
        RingElement::Residue(r) => EntryRecord::Int(*r as i64),
        RingElement::Tuple(vs) => EntryRecord::Tuple(vs.iter().map(|&x| x as i64).collect()),
    }
}

fn matrix_to_record(m: &Matrix) -> MatrixRecord {
    (0..m.rows)
        .map(|i| (0..m.cols).map(|j| entry_from_ring(m.get(i, j))).collect())
        .collect()
}

pub fn complex_to_record(x: &ChainComplex) -> ComplexRecord {
    let mut differentials = BTreeMap::new();
    for i in x.min_degree + 1..=x.max_degree() {
        let d = x.d(i);
        if d.rows * d.cols > 0 && !d.is_zero() {
            differentials.insert(i.to_string(), matrix_to_record(&d));
        }
    }
    ComplexRecord { min_degree: x.min_degree, ranks: x.ranks.clone(), differentials }
}

pub fn map_to_record(f: &ChainMap, source: &str, target: &str) -> MapRecord {
    let mut components = BTreeMap::new();
    for i in f.source.min_degree..=f.source.max_degree() {
        let m = f.component(i);
        if m.rows * m.cols > 0 && !m.is_zero() {
            components.insert(i.to_string(), matrix_to_record(&m));
        }
    }
    MapRecord {
        source: source.to_string(),
        target: target.to_string(),
        degree_shift: f.degree_shift,
        components,
    }
}
