//! JSON file formats. Coefficients are always strings.
//!
//! Structure constants are sparse on disk and dense in memory.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::actions::BimoduleData;
use crate::algebra::{solve_antipode, AlgebraData, CoalgebraData, HopfData};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl FieldSpec {
    pub fn of(field: Field) -> Self {
        match field {
            Field::Rational => FieldSpec::Named("Q".into()),
            Field::Prime(p) => FieldSpec::Prime { fp: p },
        }
    }

    pub fn field(&self) -> Result<Field> {
        match self {
            FieldSpec::Named(s) if s == "Q" => Ok(Field::Rational),
            FieldSpec::Named(s) => Err(Error::Field(format!("unknown field descriptor {s:?}"))),
            FieldSpec::Prime { fp } => Field::prime(*fp),
        }
    }
}

/// `--field` syntax: `q` or `fp:<p>`.
pub fn parse_field_flag(s: &str) -> Result<Field> {
    let lower = s.trim().to_ascii_lowercase();
    if lower == "q" {
        return Ok(Field::Rational);
    }
    match lower.strip_prefix("fp:").map(str::parse::<u64>) {
        Some(Ok(p)) => Field::prime(p),
        _ => Err(Error::Field(format!("expected q or fp:<p>, got {s:?}"))),
    }
}

/// Sparse table: `t[i][j]` lists `[k, coeff]` with nonzero coefficients.
pub type SparseTable = Vec<Vec<Vec<(usize, String)>>>;
pub type DenseMatrix = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub mult: SparseTable,
    #[serde(default)]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Vec<(usize, usize, String)>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<DenseMatrix>,
}

/// A referenced object: a path (relative to the referring file) or inline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Source {
    Path(String),
    Inline(Box<AlgebraFile>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub hopf: Source,
    pub algebra: Source,
    pub left: SparseTable,
    pub right: SparseTable,
}

/// The output of `build`: named algebras, matrices, actions and tables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuildOutput {
    pub kind: String,
    pub field: Option<FieldSpec>,
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraFile>,
    #[serde(default)]
    pub maps: BTreeMap<String, DenseMatrix>,
    #[serde(default)]
    pub vectors: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub actions: BTreeMap<String, ActionFile>,
    #[serde(default)]
    pub tables: BTreeMap<String, SparseTable>,
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

pub fn sparse_table(t: &Tensor3) -> SparseTable {
    let [n0, n1, _] = t.dims();
    (0..n0)
        .map(|i| {
            (0..n1)
                .map(|j| {
                    t.fiber(i, j)
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (k, c.to_string()))
                        .collect()
                })
                .collect()
        })
        .collect()
}

pub fn dense_matrix(m: &Matrix) -> DenseMatrix {
    (0..m.rows()).map(|i| strings(m.row(i))).collect()
}

pub fn algebra_file(a: &AlgebraData) -> AlgebraFile {
    AlgebraFile {
        field: FieldSpec::of(a.field()),
        dim: a.dim(),
        basis_names: a.names.clone(),
        mult: sparse_table(&a.mult),
        unit: a.unit.as_deref().map(strings),
        comult: None,
        counit: None,
        antipode: None,
    }
}

pub fn hopf_file(h: &HopfData) -> AlgebraFile {
    let mut file = algebra_file(&h.algebra);
    let n = h.dim();
    let mut comult = vec![Vec::new(); n];
    for (i, terms) in comult.iter_mut().enumerate() {
        for (j, k, c) in h.coalgebra.coproduct(i) {
            terms.push((*j, *k, c.to_string()));
        }
    }
    file.comult = Some(comult);
    file.counit = Some(strings(h.counit()));
    file.antipode = Some(dense_matrix(&h.antipode));
    file
}

/// An action file with both objects inline.
pub fn action_file(d: &BimoduleData) -> ActionFile {
    ActionFile {
        hopf: Source::Inline(Box::new(hopf_file(&d.hopf))),
        algebra: Source::Inline(Box::new(algebra_file(&d.algebra))),
        left: sparse_table(&d.left),
        right: sparse_table(&d.right),
    }
}

/// Parses JSON, reporting the failing path inside the document.
pub fn parse_json<T: DeserializeOwned>(text: &str, label: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| Error::Parse {
        path: format!("{label}: {}", e.path()),
        message: e.inner().to_string(),
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("file formats serialize")
}

fn parse_err(label: &str, path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        path: format!("{label}: {}", path.into()),
        message: message.into(),
    }
}

fn scalar(field: Field, s: &str, label: &str, path: impl Fn() -> String) -> Result<Scalar> {
    field.parse(s).map_err(|e| parse_err(label, path(), e.to_string()))
}

fn vector(field: Field, v: &[String], len: usize, label: &str, what: &str) -> Result<Vector> {
    if v.len() != len {
        return Err(parse_err(label, what, format!("expected {len} entries, found {}", v.len())));
    }
    v.iter()
        .enumerate()
        .map(|(i, s)| scalar(field, s, label, || format!("{what}[{i}]")))
        .collect()
}

/// Dense tensor of shape `dims` from a sparse table.
pub fn table_from_file(field: Field, t: &SparseTable, dims: [usize; 3], label: &str, what: &str) -> Result<Tensor3> {
    if t.len() != dims[0] {
        return Err(parse_err(label, what, format!("expected {} rows, found {}", dims[0], t.len())));
    }
    let mut out = Tensor3::zeros(field, dims);
    for (i, row) in t.iter().enumerate() {
        if row.len() != dims[1] {
            return Err(parse_err(label, format!("{what}[{i}]"), format!("expected {} entries, found {}", dims[1], row.len())));
        }
        for (j, terms) in row.iter().enumerate() {
            for (n, (k, c)) in terms.iter().enumerate() {
                let path = || format!("{what}[{i}][{j}][{n}]");
                if *k >= dims[2] {
                    return Err(parse_err(label, path(), format!("index {k} out of range 0..{}", dims[2])));
                }
                let c = scalar(field, c, label, path)?;
                let acc = out.get(i, j, *k) + &c;
                out.set(i, j, *k, acc);
            }
        }
    }
    Ok(out)
}

pub fn matrix_from_file(field: Field, m: &DenseMatrix, rows: usize, cols: usize, label: &str, what: &str) -> Result<Matrix> {
    if m.len() != rows {
        return Err(parse_err(label, what, format!("expected {rows} rows, found {}", m.len())));
    }
    let rows_v = m
        .iter()
        .enumerate()
        .map(|(i, r)| vector(field, r, cols, label, &format!("{what}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, cols, &rows_v)
}

fn file_field(file: &AlgebraFile, expected: Option<Field>, label: &str) -> Result<Field> {
    let field = file.field.field().map_err(|e| parse_err(label, "field", e.to_string()))?;
    match expected {
        Some(f) if f != field => Err(parse_err(label, "field", format!("file is over {field} but {f} was requested"))),
        _ => Ok(field),
    }
}

pub fn algebra_from_file(file: &AlgebraFile, expected: Option<Field>, label: &str) -> Result<AlgebraData> {
    let field = file_field(file, expected, label)?;
    let n = file.dim;
    if file.basis_names.len() != n {
        return Err(parse_err(label, "basis_names", format!("expected {n} names, found {}", file.basis_names.len())));
    }
    let mult = table_from_file(field, &file.mult, [n, n, n], label, "mult")?;
    let unit = file.unit.as_deref().map(|u| vector(field, u, n, label, "unit")).transpose()?;
    AlgebraData::new(file.basis_names.clone(), mult, unit)
}

/// A Hopf algebra file. A missing antipode is solved from the other data.
pub fn hopf_from_file(file: &AlgebraFile, expected: Option<Field>, label: &str) -> Result<HopfData> {
    let algebra = algebra_from_file(file, expected, label)?;
    let field = algebra.field();
    let n = file.dim;
    let comult = file.comult.as_ref().ok_or_else(|| parse_err(label, "comult", "missing"))?;
    if comult.len() != n {
        return Err(parse_err(label, "comult", format!("expected {n} entries, found {}", comult.len())));
    }
    let mut delta = Tensor3::zeros(field, [n, n, n]);
    for (i, terms) in comult.iter().enumerate() {
        for (m, (j, k, c)) in terms.iter().enumerate() {
            let path = || format!("comult[{i}][{m}]");
            if *j >= n || *k >= n {
                return Err(parse_err(label, path(), format!("index out of range 0..{n}")));
            }
            let c = scalar(field, c, label, path)?;
            let acc = delta.get(i, *j, *k) + &c;
            delta.set(i, *j, *k, acc);
        }
    }
    let counit = file.counit.as_deref().ok_or_else(|| parse_err(label, "counit", "missing"))?;
    let counit = vector(field, counit, n, label, "counit")?;
    let coalgebra = CoalgebraData::new(delta, counit)?;
    let antipode = match &file.antipode {
        Some(s) => matrix_from_file(field, s, n, n, label, "antipode")?,
        None => solve_antipode(&algebra, &coalgebra)?,
    };
    HopfData::new(algebra, coalgebra, antipode)
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn resolve(source: &Source, base: &Path, what: &str) -> Result<(AlgebraFile, String)> {
    match source {
        Source::Inline(f) => Ok(((**f).clone(), what.to_string())),
        Source::Path(p) => {
            let path: PathBuf = base.join(p);
            let label = path.display().to_string();
            Ok((parse_json(&read_file(&path)?, &label)?, label))
        }
    }
}

/// Loads an action file; relative paths are resolved against `base`.
pub fn bimodule_from_file(file: &ActionFile, base: &Path, expected: Option<Field>, label: &str) -> Result<BimoduleData> {
    let (hf, hl) = resolve(&file.hopf, base, &format!("{label}: hopf"))?;
    let (af, al) = resolve(&file.algebra, base, &format!("{label}: algebra"))?;
    let hopf = hopf_from_file(&hf, expected, &hl)?;
    let algebra = algebra_from_file(&af, Some(hopf.field()), &al)?;
    let (nh, na) = (hopf.dim(), algebra.dim());
    let left = table_from_file(hopf.field(), &file.left, [nh, na, na], label, "left")?;
    let right = table_from_file(hopf.field(), &file.right, [nh, na, na], label, "right")?;
    BimoduleData::new(hopf, algebra, left, right)
}

pub fn load_hopf(path: &Path, expected: Option<Field>) -> Result<HopfData> {
    let label = path.display().to_string();
    hopf_from_file(&parse_json(&read_file(path)?, &label)?, expected, &label)
}

pub fn load_bimodule(path: &Path, expected: Option<Field>) -> Result<BimoduleData> {
    let label = path.display().to_string();
    let file: ActionFile = parse_json(&read_file(path)?, &label)?;
    let base = path.parent().unwrap_or(Path::new("."));
    bimodule_from_file(&file, base, expected, &label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn field_specs() {
        assert_eq!(parse_field_flag("q").unwrap(), Field::Rational);
        assert_eq!(parse_field_flag("fp:7").unwrap(), Field::prime(7).unwrap());
        assert!(parse_field_flag("fp:8").is_err());
        assert!(parse_field_flag("r").is_err());
        let s: FieldSpec = serde_json::from_str(r#"{"Fp": 5}"#).unwrap();
        assert_eq!(s.field().unwrap(), Field::prime(5).unwrap());
        let s: FieldSpec = serde_json::from_str(r#""Q""#).unwrap();
        assert_eq!(s.field().unwrap(), Field::Rational);
    }

    #[test]
    fn hopf_round_trip() {
        let h = catalog::sweedler_h4(q()).unwrap();
        let text = to_json(&hopf_file(&h));
        let back = hopf_from_file(&parse_json(&text, "h4").unwrap(), None, "h4").unwrap();
        assert_eq!(back.algebra.mult, h.algebra.mult);
        assert_eq!(back.coalgebra.comult, h.coalgebra.comult);
        assert_eq!(back.antipode, h.antipode);
        assert_eq!(to_json(&hopf_file(&back)), text);
    }

    #[test]
    fn coefficients_are_strings() {
        let d = catalog::kx_in_h4(q()).unwrap();
        let text = to_json(&action_file(&d));
        assert!(text.contains("\"1/2\"") || text.contains("\"-1/2\""));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let first = &v["hopf"]["mult"][0][0][0];
        assert!(first[0].is_u64() && first[1].is_string());
    }

    #[test]
    fn missing_antipode_is_solved() {
        let h = catalog::sweedler_h4(q()).unwrap();
        let mut f = hopf_file(&h);
        f.antipode = None;
        assert_eq!(hopf_from_file(&f, None, "h").unwrap().antipode, h.antipode);
    }

    #[test]
    fn parse_errors_name_the_path() {
        let h = catalog::group_algebra(q(), 2).unwrap();
        let mut f = hopf_file(&h);
        f.mult[1][1][0].1 = "one".into();
        let err = hopf_from_file(&f, None, "kz2.json").unwrap_err();
        assert!(err.to_string().contains("kz2.json: mult[1][1][0]"), "{err}");

        f = hopf_file(&h);
        f.mult[0][1][0].0 = 9;
        assert!(hopf_from_file(&f, None, "x").unwrap_err().to_string().contains("out of range"));

        let err = parse_json::<AlgebraFile>(r#"{"field": "Q", "dim": "two"}"#, "a.json").unwrap_err();
        assert!(err.to_string().starts_with("a.json: dim"), "{err}");
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let h = catalog::group_algebra(q(), 2).unwrap();
        let f = hopf_file(&h);
        assert!(hopf_from_file(&f, Some(Field::prime(5).unwrap()), "x").is_err());
    }

    #[test]
    fn bimodule_round_trip_through_paths() {
        let d = catalog::kx_in_h4(q()).unwrap();
        let dir = std::env::temp_dir().join(format!("smashcheck-format-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("h.json"), to_json(&hopf_file(&d.hopf))).unwrap();
        std::fs::write(dir.join("a.json"), to_json(&algebra_file(&d.algebra))).unwrap();
        let mut af = action_file(&d);
        af.hopf = Source::Path("h.json".into());
        af.algebra = Source::Path("a.json".into());
        std::fs::write(dir.join("act.json"), to_json(&af)).unwrap();
        let back = load_bimodule(&dir.join("act.json"), None).unwrap();
        assert_eq!(back.left, d.left);
        assert_eq!(back.right, d.right);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
