//! JSON input format for algebras and bimodules.
//!
//! ```json
//! { "field": {"kind": "Q"} | {"kind": "Fp", "p": 5},
//!   "dimension": 2, "basis": ["e", "x"], "unit": ["1", "0"],
//!   "structure": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]],
//!   "bimodules": { "simple": {"dimension": 1, "left": [[["1"]], [["0"]]], "right": [[["1"]], [["0"]]]} } }
//! ```
//!
//! Omitted structure entries are zero. Action matrices are row-major, one per
//! algebra basis element. Coefficients are strings (`"3"`, `"-1/2"`, `"0.25"`)
//! or integers.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::{is_prime, Field, FieldSpec, PrimeField, Rationals};
use crate::linalg::SparseMat;

/// A coefficient as written in a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeff(pub String);

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Coeff;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a coefficient string or integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Coeff, E> {
                let t = v.trim();
                if t.is_empty() {
                    return Err(E::custom("empty coefficient"));
                }
                crate::field::Rat::parse(t).map_err(|_| E::custom(format!("malformed coefficient {v:?}")))?;
                Ok(Coeff(t.to_string()))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Coeff, E> {
                Ok(Coeff(v.to_string()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Coeff, E> {
                Ok(Coeff(v.to_string()))
            }
        }
        d.deserialize_any(V)
    }
}

/// Field descriptor that rejects non-prime moduli while parsing, so the error
/// carries a source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct CheckedField(FieldSpec);

impl Serialize for CheckedField {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CheckedField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let spec = FieldSpec::deserialize(d)?;
        if let FieldSpec::PrimeField { p } = spec {
            if !is_prime(p) {
                return Err(de::Error::custom(format!("p must be prime (got {p})")));
            }
            if p > crate::field::MAX_PRIME {
                return Err(de::Error::custom(format!("p = {p} exceeds the supported maximum {}", crate::field::MAX_PRIME)));
            }
        }
        Ok(CheckedField(spec))
    }
}

type RawMatrix = Vec<Vec<Coeff>>;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBimodule {
    dimension: usize,
    left: Vec<RawMatrix>,
    right: Vec<RawMatrix>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    field: CheckedField,
    dimension: usize,
    basis: Vec<String>,
    unit: Vec<Coeff>,
    #[serde(default)]
    structure: Vec<(usize, usize, usize, Coeff)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    bimodules: BTreeMap<String, RawBimodule>,
}

/// A parsed algebra with its named bimodules.
#[derive(Clone, Debug)]
pub struct AlgebraFile<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub bimodules: BTreeMap<String, Bimodule<F>>,
}

impl<F: Field> AlgebraFile<F> {
    pub fn new(algebra: Algebra<F>) -> Self {
        AlgebraFile { algebra: Arc::new(algebra), bimodules: BTreeMap::new() }
    }

    /// Looks up a bimodule by name; `"regular"` is always available.
    pub fn module(&self, name: &str) -> Result<Bimodule<F>> {
        if name == "regular" {
            return Ok(Bimodule::regular(&self.algebra));
        }
        self.bimodules
            .get(name)
            .cloned()
            .ok_or_else(|| Error::Validation(format!("unknown bimodule {name:?}")))
    }

    /// Rebuilds the file over a copy of the algebra with a different coordinate cap.
    pub fn with_coord_cap(self, cap: usize) -> Self {
        let algebra = Arc::new((*self.algebra).clone().with_coord_cap(cap));
        let d = algebra.dim();
        let bimodules = self
            .bimodules
            .into_iter()
            .map(|(name, m)| {
                let left = (0..d).map(|i| m.left(i).clone()).collect();
                let right = (0..d).map(|i| m.right(i).clone()).collect();
                let m = Bimodule::new_unchecked(&algebra, left, right).expect("shapes already checked").named(m.name());
                (name, m)
            })
            .collect();
        AlgebraFile { algebra, bimodules }
    }

    pub fn module_names(&self) -> Vec<String> {
        std::iter::once("regular".to_string()).chain(self.bimodules.keys().cloned()).collect()
    }

    pub fn to_json(&self) -> String {
        let f = self.algebra.field();
        let fmt = |x: &F::Elem| Coeff(f.format_elem(x));
        let matrix = |m: &SparseMat<F>| -> RawMatrix {
            (0..m.rows()).map(|i| (0..m.cols()).map(|j| fmt(&m.get(i, j))).collect()).collect()
        };
        let a = &self.algebra;
        let raw = RawFile {
            field: CheckedField(f.spec()),
            dimension: a.dim(),
            basis: a.labels().to_vec(),
            unit: a.unit().iter().map(fmt).collect(),
            structure: a.structure().into_iter().map(|(i, j, l, c)| (i, j, l, fmt(&c))).collect(),
            bimodules: self
                .bimodules
                .iter()
                .map(|(name, m)| {
                    let d = a.dim();
                    let raw = RawBimodule {
                        dimension: m.dim(),
                        left: (0..d).map(|i| matrix(m.left(i))).collect(),
                        right: (0..d).map(|i| matrix(m.right(i))).collect(),
                    };
                    (name.clone(), raw)
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }
}

/// An algebra over one of the supported fields.
#[derive(Clone, Debug)]
pub enum AnyAlgebra {
    Rational(AlgebraFile<Rationals>),
    Prime(AlgebraFile<PrimeField>),
}

/// Runs `$body` with `$file` bound to the concrete [`AlgebraFile`].
#[macro_export]
macro_rules! with_algebra {
    ($any:expr, $file:ident => $body:expr) => {
        match $any {
            $crate::io::AnyAlgebra::Rational($file) => $body,
            $crate::io::AnyAlgebra::Prime($file) => $body,
        }
    };
}

impl AnyAlgebra {
    pub fn field_spec(&self) -> FieldSpec {
        with_algebra!(self, f => f.algebra.field().spec())
    }

    pub fn to_json(&self) -> String {
        with_algebra!(self, f => f.to_json())
    }
}

fn position_of(text: &str, needle: &str) -> (usize, usize) {
    match text.find(needle) {
        Some(off) => {
            let before = &text[..off];
            let line = before.matches('\n').count() + 1;
            let column = off - before.rfind('\n').map_or(0, |i| i + 1) + 1;
            (line, column)
        }
        None => (0, 0),
    }
}

fn convert_file<F: Field>(field: &F, raw: &RawFile, text: &str) -> Result<AlgebraFile<F>> {
    let coeff = |c: &Coeff, what: &str| -> Result<F::Elem> {
        field.parse_elem(&c.0).map_err(|msg| {
            let (line, column) = position_of(text, &format!("\"{}\"", c.0));
            Error::Parse { line, column, message: format!("{what}: {msg}") }
        })
    };
    let d = raw.dimension;
    if raw.basis.len() != d {
        return Err(Error::Validation(format!("basis has {} labels, dimension is {d}", raw.basis.len())));
    }
    if raw.unit.len() != d {
        return Err(Error::Validation(format!("unit has {} coordinates, dimension is {d}", raw.unit.len())));
    }
    let unit = raw.unit.iter().enumerate().map(|(i, c)| coeff(c, &format!("unit[{i}]"))).collect::<Result<Vec<_>>>()?;
    let mut structure = Vec::with_capacity(raw.structure.len());
    for (n, (i, j, l, c)) in raw.structure.iter().enumerate() {
        structure.push((*i, *j, *l, coeff(c, &format!("structure[{n}]"))?));
    }
    let algebra = Arc::new(Algebra::new(field, raw.basis.clone(), unit, structure)?);
    let mut bimodules = BTreeMap::new();
    for (name, b) in &raw.bimodules {
        let r = b.dimension;
        let matrices = |side: &str, ms: &[RawMatrix]| -> Result<Vec<SparseMat<F>>> {
            if ms.len() != d {
                return Err(Error::Validation(format!("bimodule {name:?}: {} {side} matrices, expected {d}", ms.len())));
            }
            ms.iter()
                .enumerate()
                .map(|(i, m)| {
                    if m.len() != r || m.iter().any(|row| row.len() != r) {
                        return Err(Error::Validation(format!("bimodule {name:?}: {side}[{i}] is not {r}x{r}")));
                    }
                    let rows = m
                        .iter()
                        .map(|row| row.iter().map(|c| coeff(c, &format!("bimodules.{name}.{side}[{i}]"))).collect())
                        .collect::<Result<Vec<Vec<_>>>>()?;
                    Ok(if r == 0 { SparseMat::zeros(field, 0, 0) } else { SparseMat::from_rows(field, &rows) })
                })
                .collect()
        };
        let left = matrices("left", &b.left)?;
        let right = matrices("right", &b.right)?;
        let m = Bimodule::new(&algebra, left, right)
            .map_err(|e| Error::Validation(format!("bimodule {name:?}: {e}")))?
            .named(name.clone());
        bimodules.insert(name.clone(), m);
    }
    Ok(AlgebraFile { algebra, bimodules })
}

/// Parses and validates an algebra file.
pub fn parse_algebra(text: &str) -> Result<AnyAlgebra> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    match raw.field.0 {
        FieldSpec::Rationals => Ok(AnyAlgebra::Rational(convert_file(&Rationals, &raw, text)?)),
        FieldSpec::PrimeField { p } => {
            let f = PrimeField::new(p).map_err(|message| Error::Parse { line: 0, column: 0, message })?;
            Ok(AnyAlgebra::Prime(convert_file(&f, &raw, text)?))
        }
    }
}

pub fn parse_algebra_file(path: &std::path::Path) -> Result<AnyAlgebra> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_algebra(&text)
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}
