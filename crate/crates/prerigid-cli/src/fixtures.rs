//! JSON fixture schemas and their conversion into core values.
//!
//! Every schema carries a `schema_version` field (currently `"1"`). Parse
//! and validation failures report the file and the offending location and
//! map to exit code 2.

use prerigid_core::diagram::{DiagramFunctor, FiniteIndexCategory};
use prerigid_core::finvect::{FinVect, VecMor};
use prerigid_core::graded::graded_obj;
use prerigid_core::graded::GradedObj;
use prerigid_core::lift::BialgebraObject;
use prerigid_core::matrix::Mat;
use prerigid_core::pomonoid::Pomonoid;
use prerigid_core::pregroup::{Lexicon, PregroupType, SimpleTerm};
use prerigid_core::rational::Rat;
use serde::Deserialize;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug)]
pub struct FixtureError {
    pub path: PathBuf,
    pub location: String,
    pub message: String,
}

impl std::fmt::Display for FixtureError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: {}: {}",
            self.path.display(),
            self.location,
            self.message
        )
    }
}

impl std::error::Error for FixtureError {}

fn err(path: &Path, location: &str, message: impl Into<String>) -> FixtureError {
    FixtureError {
        path: path.to_owned(),
        location: location.to_owned(),
        message: message.into(),
    }
}

/// Resolve a fixture path against `PRERIGID_FIXTURES` when relative.
pub fn resolve(path: &str) -> PathBuf {
    let p = Path::new(path);
    if p.is_absolute() || p.exists() {
        return p.to_owned();
    }
    match std::env::var_os("PRERIGID_FIXTURES") {
        Some(root) => Path::new(&root).join(p),
        None => p.to_owned(),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, FixtureError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| err(path, "file", format!("cannot read: {e}")))?;
    serde_json::from_str(&text).map_err(|e| err(path, &format!("line {}", e.line()), e.to_string()))
}

fn check_version(path: &Path, version: &str) -> Result<(), FixtureError> {
    if version == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(err(
            path,
            "schema_version",
            format!("expected \"{SCHEMA_VERSION}\", found \"{version}\""),
        ))
    }
}

/// Rational entries accept plain integers or `"p/q"` strings.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RatJson {
    Int(i64),
    Text(String),
}

impl RatJson {
    fn to_rat(&self, path: &Path, location: &str) -> Result<Rat, FixtureError> {
        match self {
            RatJson::Int(n) => Ok(prerigid_core::rational::rat(*n)),
            RatJson::Text(s) => {
                let parts: Vec<&str> = s.split('/').collect();
                let parse = |t: &str| -> Result<i64, FixtureError> {
                    t.trim()
                        .parse()
                        .map_err(|_| err(path, location, format!("bad rational \"{s}\"")))
                };
                match parts.as_slice() {
                    [n] => Ok(prerigid_core::rational::rat(parse(n)?)),
                    [n, d] => {
                        let d = parse(d)?;
                        if d == 0 {
                            return Err(err(path, location, "zero denominator"));
                        }
                        Ok(prerigid_core::rational::frac(parse(n)?, d))
                    }
                    _ => Err(err(path, location, format!("bad rational \"{s}\""))),
                }
            }
        }
    }
}

fn matrix_from_json(
    path: &Path,
    location: &str,
    rows: &[Vec<RatJson>],
    expect: Option<(usize, usize)>,
) -> Result<Mat, FixtureError> {
    let r = rows.len();
    let c = rows.first().map(|row| row.len()).unwrap_or(0);
    if rows.iter().any(|row| row.len() != c) {
        return Err(err(path, location, "ragged matrix"));
    }
    if let Some((er, ec)) = expect {
        if (r, c) != (er, ec) {
            return Err(err(
                path,
                location,
                format!("expected {er}x{ec}, found {r}x{c}"),
            ));
        }
    }
    let mut data = Vec::with_capacity(r * c);
    for row in rows {
        for v in row {
            data.push(v.to_rat(path, location)?);
        }
    }
    Ok(Mat::from_data(r, c, data))
}

#[derive(Debug, Deserialize)]
pub struct PomonoidFile {
    pub schema_version: String,
    pub elements: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub mult: Vec<Vec<usize>>,
    pub unit: usize,
}

pub fn load_pomonoid(path: &Path) -> Result<Pomonoid, FixtureError> {
    let f: PomonoidFile = read_json(path)?;
    check_version(path, &f.schema_version)?;
    let n = f.elements.len();
    if f.leq.len() != n || f.leq.iter().any(|r| r.len() != n) {
        return Err(err(path, "leq", format!("expected {n}x{n} boolean matrix")));
    }
    if f.mult.len() != n || f.mult.iter().any(|r| r.len() != n) {
        return Err(err(path, "mult", format!("expected {n}x{n} index table")));
    }
    if f.mult.iter().flatten().any(|&v| v >= n) {
        return Err(err(path, "mult", "entry out of range"));
    }
    if f.unit >= n {
        return Err(err(path, "unit", "index out of range"));
    }
    Ok(Pomonoid {
        elements: f.elements,
        leq: f.leq,
        mult: f.mult,
        unit: f.unit,
    })
}

#[derive(Debug, Deserialize)]
pub struct LexiconFile {
    pub schema_version: String,
    pub atoms: Vec<String>,
    /// Word → list of `[atom, exponent]` simple terms.
    pub words: BTreeMap<String, Vec<(String, i32)>>,
    pub sentence: (String, i32),
    #[serde(default)]
    pub exponent_window: Option<(i32, i32)>,
}

pub fn load_lexicon(path: &Path) -> Result<Lexicon, FixtureError> {
    let f: LexiconFile = read_json(path)?;
    check_version(path, &f.schema_version)?;
    let atom_index = |name: &str, location: &str| -> Result<usize, FixtureError> {
        f.atoms
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| err(path, location, format!("unknown atom \"{name}\"")))
    };
    let mut words = BTreeMap::new();
    for (word, terms) in &f.words {
        let t: PregroupType = terms
            .iter()
            .map(|(a, e)| {
                Ok(SimpleTerm {
                    atom: atom_index(a, &format!("words.{word}"))?,
                    exponent: *e,
                })
            })
            .collect::<Result<_, FixtureError>>()?;
        words.insert(word.clone(), t);
    }
    let sentence = SimpleTerm {
        atom: atom_index(&f.sentence.0, "sentence")?,
        exponent: f.sentence.1,
    };
    let lex = Lexicon {
        atoms: f.atoms,
        words,
        sentence,
        exponent_window: f.exponent_window.unwrap_or((-2, 2)),
    };
    lex.validate()
        .map_err(|e| err(path, "words", format!("{e:?}")))?;
    Ok(lex)
}

#[derive(Debug, Deserialize)]
pub struct FamilyFile {
    pub schema_version: String,
    pub index: Vec<String>,
    /// Fiber dimension per index label.
    pub fibers: BTreeMap<String, usize>,
}

pub fn load_family(path: &Path) -> Result<Vec<usize>, FixtureError> {
    let f: FamilyFile = read_json(path)?;
    check_version(path, &f.schema_version)?;
    f.index
        .iter()
        .map(|label| {
            f.fibers.get(label).copied().ok_or_else(|| {
                err(
                    path,
                    "fibers",
                    format!("missing fiber for index \"{label}\""),
                )
            })
        })
        .collect()
}

#[derive(Debug, Deserialize)]
pub struct GradedFile {
    pub schema_version: String,
    /// `[degree, dimension]` pairs.
    pub support: Vec<(usize, usize)>,
}

pub fn load_graded(path: &Path) -> Result<GradedObj, FixtureError> {
    let f: GradedFile = read_json(path)?;
    check_version(path, &f.schema_version)?;
    Ok(graded_obj(&f.support))
}

#[derive(Debug, Deserialize)]
pub struct DiagramFile {
    pub schema_version: String,
    pub objects: Vec<String>,
    /// Non-identity morphisms `{name, src, tgt}`; identities are implicit.
    pub homs: Vec<DiagramMorphism>,
    /// Composition entries `[g, f, h]` meaning `g ∘ f = h`.
    #[serde(default)]
    pub compose: Vec<(String, String, String)>,
    pub functor: DiagramAssignment,
}

#[derive(Debug, Deserialize)]
pub struct DiagramMorphism {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Deserialize)]
pub struct DiagramAssignment {
    pub objects: BTreeMap<String, usize>,
    pub morphisms: BTreeMap<String, Vec<Vec<RatJson>>>,
}

pub fn load_diagram(path: &Path) -> Result<(FiniteIndexCategory, DiagramFunctor), FixtureError> {
    let f: DiagramFile = read_json(path)?;
    check_version(path, &f.schema_version)?;
    let obj_index = |name: &str, location: &str| -> Result<usize, FixtureError> {
        f.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| err(path, location, format!("unknown object \"{name}\"")))
    };
    let mut morphisms: Vec<(String, usize, usize)> = Vec::new();
    let mut identities = Vec::new();
    for (i, o) in f.objects.iter().enumerate() {
        identities.push(morphisms.len());
        morphisms.push((format!("id_{o}"), i, i));
    }
    for m in &f.homs {
        if morphisms.iter().any(|(n, _, _)| n == &m.name) {
            return Err(err(
                path,
                "morphisms",
                format!("duplicate name \"{}\"", m.name),
            ));
        }
        morphisms.push((
            m.name.clone(),
            obj_index(&m.src, &format!("morphisms.{}", m.name))?,
            obj_index(&m.tgt, &format!("morphisms.{}", m.name))?,
        ));
    }
    let mor_index = |name: &str, location: &str| -> Result<usize, FixtureError> {
        morphisms
            .iter()
            .position(|(n, _, _)| n == name)
            .ok_or_else(|| err(path, location, format!("unknown morphism \"{name}\"")))
    };
    let n = morphisms.len();
    let mut compose = vec![vec![None; n]; n];
    for g in 0..n {
        for fm in 0..n {
            if morphisms[fm].2 != morphisms[g].1 {
                continue;
            }
            // Identity absorptions are always known.
            if identities.contains(&fm) {
                compose[g][fm] = Some(g);
            } else if identities.contains(&g) {
                compose[g][fm] = Some(fm);
            }
        }
    }
    for (g_name, f_name, h_name) in &f.compose {
        let g = mor_index(g_name, "compose")?;
        let fm = mor_index(f_name, "compose")?;
        let h = mor_index(h_name, "compose")?;
        if morphisms[fm].2 != morphisms[g].1 {
            return Err(err(
                path,
                "compose",
                format!("\"{g_name}\" and \"{f_name}\" are not composable"),
            ));
        }
        compose[g][fm] = Some(h);
    }
    let index = FiniteIndexCategory {
        objects: f.objects.clone(),
        morphisms: morphisms.clone(),
        compose,
        identities,
    };
    let validation = index.validate();
    if !validation.all_passed() {
        return Err(err(
            path,
            "compose",
            format!(
                "index category laws fail: {}",
                validation
                    .first_failure()
                    .map(|c| c.claim.clone())
                    .unwrap_or_default()
            ),
        ));
    }

    let mut dims = Vec::with_capacity(f.objects.len());
    for o in &f.objects {
        dims.push(*f.functor.objects.get(o).ok_or_else(|| {
            err(
                path,
                "functor.objects",
                format!("missing dimension for \"{o}\""),
            )
        })?);
    }
    let mut mats = Vec::with_capacity(n);
    for (name, s, t) in &morphisms {
        if name.starts_with("id_") && s == t && !f.functor.morphisms.contains_key(name) {
            mats.push(Mat::identity(dims[*s]));
            continue;
        }
        let rows = f.functor.morphisms.get(name).ok_or_else(|| {
            err(
                path,
                "functor.morphisms",
                format!("missing matrix for \"{name}\""),
            )
        })?;
        mats.push(matrix_from_json(
            path,
            &format!("functor.morphisms.{name}"),
            rows,
            Some((dims[*t], dims[*s])),
        )?);
    }
    let functor = DiagramFunctor { dims, mats };
    let validation = functor.validate(&index);
    if !validation.all_passed() {
        return Err(err(
            path,
            "functor",
            format!(
                "functor laws fail: {}",
                validation
                    .first_failure()
                    .map(|c| c.claim.clone())
                    .unwrap_or_default()
            ),
        ));
    }
    Ok((index, functor))
}

#[derive(Debug, Deserialize)]
pub struct BialgebraFile {
    pub schema_version: String,
    pub dim: usize,
    pub m: Vec<Vec<RatJson>>,
    pub u: Vec<RatJson>,
    pub delta: Vec<Vec<RatJson>>,
    pub epsilon: Vec<RatJson>,
}

pub fn load_bialgebra(path: &Path) -> Result<BialgebraObject<FinVect>, FixtureError> {
    let f: BialgebraFile = read_json(path)?;
    check_version(path, &f.schema_version)?;
    let d = f.dim;
    let m = matrix_from_json(path, "m", &f.m, Some((d, d * d)))?;
    let delta = matrix_from_json(path, "delta", &f.delta, Some((d * d, d)))?;
    let u_rows: Vec<Vec<RatJson>> = f.u.iter().map(|v| vec![v.clone()]).collect();
    let u = matrix_from_json(path, "u", &u_rows, Some((d, 1)))?;
    let eps_rows: Vec<Vec<RatJson>> = vec![f.epsilon.clone()];
    let epsilon = matrix_from_json(path, "epsilon", &eps_rows, Some((1, d)))?;
    Ok(BialgebraObject {
        carrier: d,
        mult: VecMor::new(m),
        unit: VecMor::new(u),
        comult: VecMor::new(delta),
        counit: VecMor::new(epsilon),
    })
}
