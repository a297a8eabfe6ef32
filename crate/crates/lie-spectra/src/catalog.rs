//! Catalog ingestion, family expansion, and instantiation.
//!
//! Catalogs are line-oriented structured text: one `[entry]` block per space
//! or family, keys are documented field names, rationals are serialized as
//! "p/q", weights as comma-separated Bourbaki coefficients. Family entries
//! carry parameter constraints and closed-form expected values; the
//! structural recipe that turns parameters into a concrete space lives in
//! the builders below, keyed by family id.

use crate::einstein::{ImportedVerdicts, SpaceSpec};
use crate::embedding::{EmbeddingSpec, ReductiveSubalgebra, Summand};
use crate::error::{Error, Result};
use crate::expr::{eval, eval_predicate, Params};
use crate::lattice::GroupForm;
use crate::rat::{parse_rat, rint, Rat};
use crate::root_system::{Family, SimpleLieType};
use std::fmt;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Family,
    Isolated,
}

/// How an entry specifies its embedding, as read from the file.
#[derive(Debug, Clone)]
pub enum EmbeddingSource {
    Defining(Vec<Summand>),
    Matrix { rows: Vec<Vec<Rat>>, charges: usize },
    MaxTorus,
    /// Exceptional embedding whose curated matrix has not been shipped;
    /// the entry is listed but cannot be instantiated.
    Pending,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub kind: Kind,
    pub name: String,
    pub params: Vec<String>,
    pub constraints: Vec<String>,
    pub grid: Vec<(String, i64, i64)>,
    pub g: Option<(SimpleLieType, GroupForm)>,
    pub h: Option<(Vec<SimpleLieType>, usize)>,
    pub embedding: Option<EmbeddingSource>,
    pub expected_two_e: Option<String>,
    pub expected_lambda1: Option<String>,
    pub h_stability: Option<String>,
    pub nu_stability: Option<String>,
    pub round_sphere: bool,
    /// λ₁ results are for the simply connected presentation and bound the
    /// listed realization from below.
    pub cover: bool,
}

impl CatalogEntry {
    fn empty() -> Self {
        CatalogEntry {
            id: String::new(),
            kind: Kind::Isolated,
            name: String::new(),
            params: Vec::new(),
            constraints: Vec::new(),
            grid: Vec::new(),
            g: None,
            h: None,
            embedding: None,
            expected_two_e: None,
            expected_lambda1: None,
            h_stability: None,
            nu_stability: None,
            round_sphere: false,
            cover: false,
        }
    }

    /// Family key: id up to the first '.', trailing lowercase variant
    /// letters stripped (XIa and XIb are the same family XI).
    pub fn family_key(&self) -> String {
        let base = self.id.split('.').next().unwrap_or(&self.id);
        base.trim_end_matches(|c: char| c.is_ascii_lowercase())
            .to_string()
    }

    pub fn is_pending(&self) -> bool {
        matches!(self.embedding, Some(EmbeddingSource::Pending))
    }

    /// All default parameter assignments: the grid box filtered by the
    /// entry's constraints. Concrete entries yield one empty assignment.
    pub fn default_instances(&self) -> Result<Vec<Params>> {
        if self.grid.is_empty() {
            return Ok(vec![Params::new()]);
        }
        let mut out = vec![Params::new()];
        for (name, lo, hi) in &self.grid {
            let mut next = Vec::new();
            for base in &out {
                for v in *lo..=*hi {
                    let mut p = base.clone();
                    p.insert(name.clone(), v);
                    next.push(p);
                }
            }
            out = next;
        }
        let mut kept = Vec::new();
        for p in out {
            if self.satisfies_constraints(&p)? {
                kept.push(p);
            }
        }
        Ok(kept)
    }

    pub fn satisfies_constraints(&self, params: &Params) -> Result<bool> {
        for c in &self.constraints {
            if !eval_predicate(c, params)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn expected_two_e(&self, params: &Params) -> Result<Option<Rat>> {
        match &self.expected_two_e {
            Some(e) => Ok(Some(eval(e, params)?)),
            None => Ok(None),
        }
    }

    pub fn expected_lambda1(&self, params: &Params) -> Result<Option<Rat>> {
        match &self.expected_lambda1 {
            Some(e) => Ok(Some(eval(e, params)?)),
            None => Ok(None),
        }
    }

    /// Fully instantiate and validate the space for given parameters.
    pub fn instantiate(&self, params: &Params) -> Result<SpaceSpec> {
        if !self.satisfies_constraints(params)? {
            return Err(Error::ConstraintViolation {
                entry: self.id.clone(),
                constraint: self.constraints.join("; "),
            });
        }
        let label = self.label(params);
        let mut space = match (&self.g, &self.h, &self.embedding) {
            (Some((g, form)), h, Some(src)) => {
                let spec = match src {
                    EmbeddingSource::Defining(s) => EmbeddingSpec::DefiningRep(s.clone()),
                    EmbeddingSource::Matrix { rows, charges } => EmbeddingSpec::ExplicitMatrix {
                        rows: rows.clone(),
                        charges: *charges,
                    },
                    EmbeddingSource::MaxTorus => EmbeddingSpec::MaxTorus,
                    EmbeddingSource::Pending => {
                        return Err(Error::PendingEmbedding(self.id.clone()))
                    }
                };
                let h = match (&spec, h) {
                    (EmbeddingSpec::MaxTorus, _) => ReductiveSubalgebra::torus(g.rank),
                    (_, Some((ideals, ab))) => ReductiveSubalgebra::new(ideals.clone(), *ab),
                    _ => {
                        return Err(Error::CatalogEntry {
                            entry: self.id.clone(),
                            msg: "missing h field".into(),
                        })
                    }
                };
                SpaceSpec::build(&label, *g, *form, h, &spec)?
            }
            (None, _, None) => expand_family(&self.id, &label, params)?,
            _ => {
                return Err(Error::CatalogEntry {
                    entry: self.id.clone(),
                    msg: "entry must either carry g/embedding data or be a known family".into(),
                })
            }
        };
        space.round_sphere = self.round_sphere;
        space.cover_semantics = self.cover;
        space.imported = ImportedVerdicts {
            h_stability: self.h_stability.clone(),
            nu_stability: self.nu_stability.clone(),
        };
        Ok(space)
    }

    pub fn label(&self, params: &Params) -> String {
        if params.is_empty() {
            self.id.clone()
        } else {
            let parts: Vec<String> = self
                .params
                .iter()
                .filter_map(|k| params.get(k).map(|v| format!("{k}={v}")))
                .collect();
            format!("{}[{}]", self.id, parts.join(","))
        }
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn family_count(&self) -> usize {
        let mut keys: Vec<String> = self
            .entries
            .iter()
            .filter(|e| e.kind == Kind::Family)
            .map(|e| e.family_key())
            .collect();
        keys.sort();
        keys.dedup();
        keys.len()
    }

    pub fn isolated_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.kind == Kind::Isolated)
            .count()
    }

    pub fn find(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

impl fmt::Display for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} families + {} isolated entries",
            self.family_count(),
            self.isolated_count()
        )
    }
}

// ---- parsing ----

fn parse_weight_coeff_list(s: &str, line: usize) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim().parse::<i64>().map_err(|_| Error::CatalogParse {
                line,
                msg: format!("bad integer '{t}'"),
            })
        })
        .collect()
}

/// Summand syntax: per-ideal Bourbaki lists separated by '|', optional
/// rational charges after '@'. Example: "1|2,0@1,-1".
fn parse_summand(s: &str, line: usize) -> Result<Summand> {
    let (body, charges) = match s.split_once('@') {
        Some((b, c)) => {
            let charges: Option<Vec<Rat>> = c.split(',').map(|t| parse_rat(t.trim())).collect();
            (
                b,
                charges.ok_or(Error::CatalogParse {
                    line,
                    msg: format!("bad charges in '{s}'"),
                })?,
            )
        }
        None => (s, Vec::new()),
    };
    let per_ideal_coeffs: Result<Vec<Vec<i64>>> = body
        .split('|')
        .map(|blk| parse_weight_coeff_list(blk, line))
        .collect();
    Ok(Summand {
        per_ideal_coeffs: per_ideal_coeffs?,
        charges,
    })
}

fn parse_embedding(s: &str, line: usize) -> Result<EmbeddingSource> {
    let s = s.trim();
    if s == "maxtorus" {
        return Ok(EmbeddingSource::MaxTorus);
    }
    if s == "pending" {
        return Ok(EmbeddingSource::Pending);
    }
    if let Some(rest) = s.strip_prefix("defining:") {
        let summands: Result<Vec<Summand>> = rest
            .split(';')
            .map(|t| parse_summand(t.trim(), line))
            .collect();
        return Ok(EmbeddingSource::Defining(summands?));
    }
    if let Some(rest) = s.strip_prefix("matrix") {
        let (head, body) = rest.split_once(':').ok_or(Error::CatalogParse {
            line,
            msg: "matrix needs ':'".into(),
        })?;
        let mut charges = 0usize;
        for tok in head.split_whitespace() {
            if let Some(c) = tok.strip_prefix("c=") {
                charges = c.parse().map_err(|_| Error::CatalogParse {
                    line,
                    msg: format!("bad charge count '{c}'"),
                })?;
            }
        }
        let rows: Result<Vec<Vec<Rat>>> = body
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|t| {
                        parse_rat(t.trim()).ok_or(Error::CatalogParse {
                            line,
                            msg: format!("bad rational '{t}'"),
                        })
                    })
                    .collect()
            })
            .collect();
        return Ok(EmbeddingSource::Matrix {
            rows: rows?,
            charges,
        });
    }
    Err(Error::CatalogParse {
        line,
        msg: format!("unknown embedding spec '{s}'"),
    })
}

fn parse_h(s: &str, line: usize) -> Result<(Vec<SimpleLieType>, usize)> {
    let mut ideals = Vec::new();
    let mut abelian = 0usize;
    for tok in s.split(',') {
        let tok = tok.trim();
        if let Some(k) = tok.strip_prefix('u') {
            if let Ok(k) = k.parse::<usize>() {
                abelian += k;
                continue;
            }
        }
        ideals.push(SimpleLieType::parse(tok).map_err(|e| Error::CatalogParse {
            line,
            msg: e.to_string(),
        })?);
    }
    Ok((ideals, abelian))
}

fn parse_grid(s: &str, line: usize) -> Result<Vec<(String, i64, i64)>> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        let (name, range) = part.split_once('=').ok_or(Error::CatalogParse {
            line,
            msg: format!("bad grid item '{part}'"),
        })?;
        let (lo, hi) = range.split_once("..").ok_or(Error::CatalogParse {
            line,
            msg: format!("grid range needs 'lo..hi' in '{part}'"),
        })?;
        let lo: i64 = lo.trim().parse().map_err(|_| Error::CatalogParse {
            line,
            msg: format!("bad grid bound in '{part}'"),
        })?;
        let hi: i64 = hi.trim().parse().map_err(|_| Error::CatalogParse {
            line,
            msg: format!("bad grid bound in '{part}'"),
        })?;
        out.push((name.trim().to_string(), lo, hi));
    }
    Ok(out)
}

pub fn parse_catalog(text: &str) -> Result<Catalog> {
    let mut entries = Vec::new();
    let mut current: Option<CatalogEntry> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "[entry]" {
            if current.is_some() {
                return Err(Error::CatalogParse {
                    line: line_no,
                    msg: "nested [entry]".into(),
                });
            }
            current = Some(CatalogEntry::empty());
            continue;
        }
        if line == "[end]" {
            let e = current.take().ok_or(Error::CatalogParse {
                line: line_no,
                msg: "[end] without [entry]".into(),
            })?;
            if e.id.is_empty() {
                return Err(Error::CatalogParse {
                    line: line_no,
                    msg: "entry is missing an id".into(),
                });
            }
            entries.push(e);
            continue;
        }
        let e = current.as_mut().ok_or(Error::CatalogParse {
            line: line_no,
            msg: "field outside [entry] block".into(),
        })?;
        let (key, value) = line.split_once('=').ok_or(Error::CatalogParse {
            line: line_no,
            msg: format!("expected 'key = value', got '{line}'"),
        })?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "id" => e.id = value.to_string(),
            "kind" => {
                e.kind = match value {
                    "family" => Kind::Family,
                    "isolated" => Kind::Isolated,
                    _ => {
                        return Err(Error::CatalogParse {
                            line: line_no,
                            msg: format!("unknown kind '{value}'"),
                        })
                    }
                }
            }
            "name" => e.name = value.to_string(),
            "params" => {
                e.params = value.split(',').map(|t| t.trim().to_string()).collect();
            }
            "constraints" => {
                e.constraints = value
                    .split(';')
                    .map(|t| t.trim().to_string())
                    .filter(|t| !t.is_empty())
                    .collect();
            }
            "grid" => e.grid = parse_grid(value, line_no)?,
            "g" => {
                let (t, form) = value.split_once(' ').ok_or(Error::CatalogParse {
                    line: line_no,
                    msg: "g needs '<type> <form>'".into(),
                })?;
                let t = SimpleLieType::parse(t).map_err(|err| Error::CatalogParse {
                    line: line_no,
                    msg: err.to_string(),
                })?;
                let form = GroupForm::parse(form).map_err(|err| Error::CatalogParse {
                    line: line_no,
                    msg: err.to_string(),
                })?;
                e.g = Some((t, form));
            }
            "h" => e.h = Some(parse_h(value, line_no)?),
            "embedding" => e.embedding = Some(parse_embedding(value, line_no)?),
            "expected_two_e" => e.expected_two_e = Some(value.to_string()),
            "expected_lambda1" => e.expected_lambda1 = Some(value.to_string()),
            "h_stability" => e.h_stability = Some(value.to_string()),
            "nu_stability" => e.nu_stability = Some(value.to_string()),
            "flags" => {
                for f in value.split(',') {
                    match f.trim() {
                        "round-sphere" => e.round_sphere = true,
                        "cover" => e.cover = true,
                        other => {
                            return Err(Error::CatalogParse {
                                line: line_no,
                                msg: format!("unknown flag '{other}'"),
                            })
                        }
                    }
                }
            }
            _ => {
                return Err(Error::CatalogParse {
                    line: line_no,
                    msg: format!("unknown key '{key}'"),
                })
            }
        }
    }
    if current.is_some() {
        return Err(Error::CatalogParse {
            line: text.lines().count(),
            msg: "unterminated [entry]".into(),
        });
    }
    Ok(Catalog { entries })
}

pub fn load_catalog(path: &Path) -> Result<Catalog> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_catalog(&text)
}

// ---- family builders ----

fn get(params: &Params, name: &str) -> Result<i64> {
    params
        .get(name)
        .copied()
        .ok_or_else(|| Error::Input(format!("missing parameter '{name}'")))
}

/// Simple ideals of so(n) together with the Bourbaki coefficient lists of
/// its standard (vector) representation on those ideals.
fn so_ideals_and_st(n: i64) -> Result<(Vec<SimpleLieType>, Vec<Vec<i64>>)> {
    Ok(match n {
        3 => (vec![SimpleLieType::a(1)], vec![vec![2]]),
        4 => (
            vec![SimpleLieType::a(1), SimpleLieType::a(1)],
            vec![vec![1], vec![1]],
        ),
        5 => (vec![SimpleLieType::b(2)], vec![vec![1, 0]]),
        6 => (vec![SimpleLieType::d(3)], vec![vec![1, 0, 0]]),
        n if n >= 7 => {
            let m = (n / 2) as usize;
            let ty = if n % 2 == 1 {
                SimpleLieType::b(m)
            } else {
                SimpleLieType::d(m)
            };
            let mut st = vec![0i64; m];
            st[0] = 1;
            (vec![ty], vec![st])
        }
        _ => return Err(Error::Input(format!("so({n}) needs n >= 3"))),
    })
}

/// The simple type of so(N) as ambient algebra.
fn so_type(n_big: i64) -> Result<SimpleLieType> {
    if n_big % 2 == 1 {
        SimpleLieType::new(Family::B, (n_big as usize - 1) / 2)
    } else {
        SimpleLieType::new(Family::D, n_big as usize / 2)
    }
}

/// sp(n) ideal with the coefficients of its standard representation.
fn sp_ideal_and_st(n: i64) -> Result<(SimpleLieType, Vec<i64>)> {
    Ok(if n == 1 {
        (SimpleLieType::a(1), vec![1])
    } else {
        let mut st = vec![0i64; n as usize];
        st[0] = 1;
        (SimpleLieType::new(Family::C, n as usize)?, st)
    })
}

fn first_fundamental(rank: usize) -> Vec<i64> {
    let mut v = vec![0i64; rank];
    v[0] = 1;
    v
}

fn last_fundamental(rank: usize) -> Vec<i64> {
    let mut v = vec![0i64; rank];
    v[rank - 1] = 1;
    v
}

fn su_adjoint(rank: usize) -> Vec<i64> {
    if rank == 1 {
        vec![2]
    } else {
        let mut v = vec![0i64; rank];
        v[0] = 1;
        v[rank - 1] = 1;
        v
    }
}

/// Block-diagonal defining rep of k equal blocks: the i-th summand is the
/// given per-block rep on block i and trivial elsewhere.
fn block_summands(k: usize, per_block: &[Vec<i64>], charges_len: usize) -> Vec<Summand> {
    (0..k)
        .map(|i| {
            let mut per = Vec::new();
            for b in 0..k {
                for piece in per_block {
                    if b == i {
                        per.push(piece.clone());
                    } else {
                        per.push(vec![0; piece.len()]);
                    }
                }
            }
            Summand {
                per_ideal_coeffs: per,
                charges: vec![rint(0); charges_len],
            }
        })
        .collect()
}

/// Charges of the i-th block of S(U(n)^k): the center has rank k−1.
fn su_block_charges(k: usize, i: usize) -> Vec<Rat> {
    let mut c = vec![rint(0); k - 1];
    if i + 1 < k {
        c[i] = rint(1);
    } else {
        for x in c.iter_mut() {
            *x = rint(-1);
        }
    }
    c
}

/// Build one member of a named family. The recipes mirror the catalog's
/// family descriptions; everything still passes `validate_embedding`.
pub fn expand_family(id: &str, label: &str, params: &Params) -> Result<SpaceSpec> {
    let base = id.split('.').next().unwrap_or(id);
    match base {
        // --- strongly isotropy irreducible families ---
        "I" | "II" => {
            let n = get(params, "n")?;
            let big_n = if base == "I" {
                n * (n - 1) / 2
            } else {
                n * (n + 1) / 2
            };
            let d = if n % 2 == 0 { n / 2 } else { n };
            let g = SimpleLieType::a(big_n as usize - 1);
            let h = ReductiveSubalgebra::new(vec![SimpleLieType::a(n as usize - 1)], 0);
            let mut coeffs = vec![0i64; n as usize - 1];
            if base == "I" {
                coeffs[1] = 1;
            } else {
                coeffs[0] = 2;
            }
            let spec = EmbeddingSpec::DefiningRep(vec![Summand {
                per_ideal_coeffs: vec![coeffs],
                charges: vec![],
            }]);
            SpaceSpec::build(label, g, GroupForm::SuQuotient(d as u64), h, &spec)
        }
        "III" => {
            let p = get(params, "p")?;
            let q = get(params, "q")?;
            let d = num_integer::lcm(p, q);
            let g = SimpleLieType::a((p * q) as usize - 1);
            let h = ReductiveSubalgebra::new(
                vec![
                    SimpleLieType::a(p as usize - 1),
                    SimpleLieType::a(q as usize - 1),
                ],
                0,
            );
            let spec = EmbeddingSpec::DefiningRep(vec![Summand {
                per_ideal_coeffs: vec![
                    first_fundamental(p as usize - 1),
                    first_fundamental(q as usize - 1),
                ],
                charges: vec![],
            }]);
            SpaceSpec::build(label, g, GroupForm::SuQuotient(d as u64), h, &spec)
        }
        "IV" => {
            let n = get(params, "n")?;
            let (so_ideals, so_st) = so_ideals_and_st(n)?;
            let mut ideals = vec![SimpleLieType::a(1)];
            ideals.extend(so_ideals);
            let h = ReductiveSubalgebra::new(ideals, 0);
            let mut per = vec![vec![1i64]];
            per.extend(so_st);
            let spec = EmbeddingSpec::DefiningRep(vec![Summand {
                per_ideal_coeffs: per,
                charges: vec![],
            }]);
            SpaceSpec::build(
                label,
                SimpleLieType::new(Family::C, n as usize)?,
                GroupForm::SpZ2,
                h,
                &spec,
            )
        }
        "V" => {
            let n = get(params, "n")?;
            let g = so_type(n * n - 1)?;
            let form = if n % 2 == 1 {
                GroupForm::SimplyConnected
            } else {
                GroupForm::So
            };
            let h = ReductiveSubalgebra::new(vec![SimpleLieType::a(n as usize - 1)], 0);
            let spec = EmbeddingSpec::DefiningRep(vec![Summand {
                per_ideal_coeffs: vec![su_adjoint(n as usize - 1)],
                charges: vec![],
            }]);
            SpaceSpec::build(label, g, form, h, &spec)
        }
        "VI" | "VII" => {
            let n = get(params, "n")?;
            let big_n = if base == "VI" {
                2 * n * n - n - 1
            } else {
                2 * n * n + n
            };
            let spin = if base == "VI" {
                n % 4 == 0 || n % 4 == 1
            } else {
                n % 4 == 0 || n % 4 == 3
            };
            let form = if spin {
                GroupForm::SimplyConnected
            } else {
                GroupForm::So
            };
            let h = ReductiveSubalgebra::new(vec![SimpleLieType::new(Family::C, n as usize)?], 0);
            let mut coeffs = vec![0i64; n as usize];
            if base == "VI" {
                coeffs[1] = 1;
            } else {
                coeffs[0] = 2;
            }
            let spec = EmbeddingSpec::DefiningRep(vec![Summand {
                per_ideal_coeffs: vec![coeffs],
                charges: vec![],
            }]);
            SpaceSpec::build(label, so_type(big_n)?, form, h, &spec)
        }
        "VIII" => {
            let n = get(params, "n")?;
            let (sp, sp_st) = sp_ideal_and_st(n)?;
            let h = ReductiveSubalgebra::new(vec![SimpleLieType::a(1), sp], 0);
            let spec = EmbeddingSpec::DefiningRep(vec![Summand {
                per_ideal_coeffs: vec![vec![1], sp_st],
                charges: vec![],
            }]);
            SpaceSpec::build(
                label,
                SimpleLieType::d(2 * n as usize),
                GroupForm::SoZ2,
                h,
                &spec,
            )
        }
        "IX" | "X" => {
            let n = get(params, "n")?;
            let big_n = if base == "IX" {
                n * (n - 1) / 2
            } else {
                (n - 1) * (n + 2) / 2
            };
            let form = if n % 2 == 1 {
                GroupForm::So
            } else if n % 4 == 0 {
                GroupForm::SimplyConnected
            } else {
                GroupForm::So
            };
            let (ideals, _) = so_ideals_and_st(n)?;
            let h = ReductiveSubalgebra::new(ideals, 0);
            let coeffs = if base == "IX" {
                // Λ²(st) = adjoint of so(n)
                match n {
                    5 => vec![vec![0i64, 2]],
                    _ => {
                        let m = (n / 2) as usize;
                        let mut v = vec![0i64; m];
                        v[1] = 1;
                        vec![v]
                    }
                }
            } else {
                // Sym²₀(st)
                match n {
                    5 => vec![vec![2i64, 0]],
                    6 => vec![vec![2i64, 0, 0]],
                    _ => {
                        let m = (n / 2) as usize;
                        let mut v = vec![0i64; m];
                        v[0] = 2;
                        vec![v]
                    }
                }
            };
            let spec = EmbeddingSpec::DefiningRep(vec![Summand {
                per_ideal_coeffs: coeffs,
                charges: vec![],
            }]);
            SpaceSpec::build(label, so_type(big_n)?, form, h, &spec)
        }

        // --- isotropy reducible families ---
        "XIa" => {
            let n = get(params, "n")? as usize;
            SpaceSpec::build(
                label,
                SimpleLieType::a(n - 1),
                GroupForm::SimplyConnected,
                ReductiveSubalgebra::torus(n - 1),
                &EmbeddingSpec::MaxTorus,
            )
        }
        "XIb" => {
            let k = get(params, "k")? as usize;
            let n = get(params, "n")? as usize;
            let ideals = vec![SimpleLieType::a(n - 1); k];
            let h = ReductiveSubalgebra::new(ideals, k - 1);
            let summands: Vec<Summand> = (0..k)
                .map(|i| {
                    let mut per = vec![vec![0i64; n - 1]; k];
                    per[i] = first_fundamental(n - 1);
                    Summand {
                        per_ideal_coeffs: per,
                        charges: su_block_charges(k, i),
                    }
                })
                .collect();
            SpaceSpec::build(
                label,
                SimpleLieType::a(k * n - 1),
                GroupForm::SimplyConnected,
                h,
                &EmbeddingSpec::DefiningRep(summands),
            )
        }
        "XII" => {
            let p = get(params, "p")? as usize;
            let q = get(params, "q")? as usize;
            let l = get(params, "l")? as usize;
            let h = ReductiveSubalgebra::new(
                vec![
                    SimpleLieType::a(p - 1),
                    SimpleLieType::a(q - 1),
                    SimpleLieType::a(l - 1),
                ],
                1,
            );
            let tensor = Summand {
                per_ideal_coeffs: vec![
                    first_fundamental(p - 1),
                    first_fundamental(q - 1),
                    vec![0; l - 1],
                ],
                charges: vec![rint(l as i64)],
            };
            let plain = Summand {
                per_ideal_coeffs: vec![
                    vec![0; p - 1],
                    vec![0; q - 1],
                    first_fundamental(l - 1),
                ],
                charges: vec![rint(-((p * q) as i64))],
            };
            SpaceSpec::build(
                label,
                SimpleLieType::a(p * q + l - 1),
                GroupForm::SimplyConnected,
                h,
                &EmbeddingSpec::DefiningRep(vec![tensor, plain]),
            )
        }
        "XIII" => {
            let k = get(params, "k")? as usize;
            let n = get(params, "n")?;
            let (sp, sp_st) = sp_ideal_and_st(n)?;
            let h = ReductiveSubalgebra::new(vec![sp; k], 0);
            let summands = block_summands(k, std::slice::from_ref(&sp_st), 0);
            SpaceSpec::build(
                label,
                SimpleLieType::new(Family::C, (k as i64 * n) as usize)?,
                GroupForm::SimplyConnected,
                h,
                &EmbeddingSpec::DefiningRep(summands),
            )
        }
        "XIV" => {
            let n = get(params, "n")?;
            let (sp, sp_st) = sp_ideal_and_st(n)?;
            let m = (2 * n - 1) as usize; // u(2n−1) factor
            let mut ideals = vec![sp];
            if m >= 2 {
                ideals.push(SimpleLieType::a(m - 1));
            }
            let h = ReductiveSubalgebra::new(ideals, 1);
            let sp_zero = vec![0i64; sp_st.len()];
            let with_su = |sp_part: Vec<i64>, su_part: Option<Vec<i64>>| -> Vec<Vec<i64>> {
                match su_part {
                    Some(su) => vec![sp_part, su],
                    None => vec![sp_part],
                }
            };
            let su_zero = if m >= 2 { Some(vec![0i64; m - 1]) } else { None };
            let mut summands = vec![Summand {
                per_ideal_coeffs: with_su(sp_st.clone(), su_zero),
                charges: vec![rint(0)],
            }];
            let su_first = if m >= 2 {
                Some(first_fundamental(m - 1))
            } else {
                None
            };
            let su_last = if m >= 2 {
                Some(last_fundamental(m - 1))
            } else {
                None
            };
            summands.push(Summand {
                per_ideal_coeffs: with_su(sp_zero.clone(), su_first),
                charges: vec![rint(1)],
            });
            summands.push(Summand {
                per_ideal_coeffs: with_su(sp_zero, su_last),
                charges: vec![rint(-1)],
            });
            SpaceSpec::build(
                label,
                SimpleLieType::new(Family::C, (3 * n - 1) as usize)?,
                GroupForm::SimplyConnected,
                h,
                &EmbeddingSpec::DefiningRep(summands),
            )
        }
        "XV" => {
            let n = get(params, "n")?;
            let (sp, sp_st) = sp_ideal_and_st(n)?;
            let h = ReductiveSubalgebra::new(vec![sp, sp], 0);
            let spec = EmbeddingSpec::DefiningRep(vec![Summand {
                per_ideal_coeffs: vec![sp_st.clone(), sp_st],
                charges: vec![],
            }]);
            SpaceSpec::build(
                label,
                SimpleLieType::d(2 * (n * n) as usize),
                GroupForm::SimplyConnected,
                h,
                &spec,
            )
        }
        "XVI" => {
            let n = get(params, "n")?;
            let (ideals, st) = so_ideals_and_st(n)?;
            let mut both = ideals.clone();
            both.extend(ideals);
            let h = ReductiveSubalgebra::new(both, 0);
            let mut per = st.clone();
            per.extend(st);
            let spec = EmbeddingSpec::DefiningRep(vec![Summand {
                per_ideal_coeffs: per,
                charges: vec![],
            }]);
            SpaceSpec::build(label, so_type(n * n)?, GroupForm::SimplyConnected, h, &spec)
        }
        "XVIIa" => {
            let n = get(params, "n")? as usize;
            SpaceSpec::build(
                label,
                SimpleLieType::d(n),
                GroupForm::SimplyConnected,
                ReductiveSubalgebra::torus(n),
                &EmbeddingSpec::MaxTorus,
            )
        }
        "XVIIb" => {
            let k = get(params, "k")? as usize;
            let n = get(params, "n")?;
            let (ideals_one, st_one) = so_ideals_and_st(n)?;
            let mut ideals = Vec::new();
            for _ in 0..k {
                ideals.extend(ideals_one.clone());
            }
            let h = ReductiveSubalgebra::new(ideals, 0);
            let summands = block_summands(k, &st_one, 0);
            SpaceSpec::build(
                label,
                so_type(k as i64 * n)?,
                GroupForm::SimplyConnected,
                h,
                &EmbeddingSpec::DefiningRep(summands),
            )
        }
        "XVIII" => {
            let n = get(params, "n")?;
            let (so_ideals, so_st) = so_ideals_and_st(n)?;
            let m = (n + 1) as usize; // u(n+1) factor
            let mut ideals = so_ideals;
            ideals.push(SimpleLieType::a(m - 1));
            let h = ReductiveSubalgebra::new(ideals, 1);
            let so_zero: Vec<Vec<i64>> = so_st.iter().map(|v| vec![0; v.len()]).collect();
            let mut per0 = so_st.clone();
            per0.push(vec![0; m - 1]);
            let mut per1 = so_zero.clone();
            per1.push(first_fundamental(m - 1));
            let mut per2 = so_zero;
            per2.push(last_fundamental(m - 1));
            let summands = vec![
                Summand {
                    per_ideal_coeffs: per0,
                    charges: vec![rint(0)],
                },
                Summand {
                    per_ideal_coeffs: per1,
                    charges: vec![rint(1)],
                },
                Summand {
                    per_ideal_coeffs: per2,
                    charges: vec![rint(-1)],
                },
            ];
            SpaceSpec::build(
                label,
                so_type(3 * n + 2)?,
                GroupForm::SimplyConnected,
                h,
                &EmbeddingSpec::DefiningRep(summands),
            )
        }
        _ => Err(Error::CatalogEntry {
            entry: id.to_string(),
            msg: "no builder for this family (concrete entries carry their own data)".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn params(pairs: &[(&str, i64)]) -> Params {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn xiii_instances() {
        let space = expand_family("XIII", "XIII[n=1,k=3]", &params(&[("n", 1), ("k", 3)])).unwrap();
        assert_eq!(space.two_e, rat(7, 8));
        assert_eq!(space.dim_p, 12);
        let space = expand_family("XIII", "XIII[n=2,k=3]", &params(&[("n", 2), ("k", 3)])).unwrap();
        assert_eq!(space.two_e, rat(6, 7));
    }

    #[test]
    fn xiv_smallest() {
        let space = expand_family("XIV", "XIV[n=1]", &params(&[("n", 1)])).unwrap();
        assert_eq!(space.two_e, rat(5, 6));
        let space = expand_family("XIV", "XIV[n=2]", &params(&[("n", 2)])).unwrap();
        assert_eq!(space.two_e, rat(5, 6));
    }

    #[test]
    fn flag_families() {
        let space = expand_family("XIa", "XIa[n=3]", &params(&[("n", 3)])).unwrap();
        assert_eq!(space.two_e, rat(5, 6));
        let space = expand_family("XVIIa", "XVIIa[n=4]", &params(&[("n", 4)])).unwrap();
        assert_eq!(space.two_e, rat(1, 2) + rat(1, 6));
    }

    #[test]
    fn family_iv_two_e() {
        // 2E = 3/4 + (8−n)/(4n(n+1))
        for n in [3i64, 4, 5] {
            let space = expand_family("IV", "IV", &params(&[("n", n)])).unwrap();
            let expect = rat(3, 4) + rat(8 - n, 4 * n * (n + 1));
            assert_eq!(space.two_e, expect, "n={n}");
        }
    }

    #[test]
    fn family_xv_corrected_two_e() {
        for n in [2i64, 3] {
            let space = expand_family("XV", "XV", &params(&[("n", n)])).unwrap();
            let expect = rat(1, 2) + rat(2 * n + 1, 2 * n * (2 * n * n - 1));
            assert_eq!(space.two_e, expect, "n={n}");
        }
    }

    #[test]
    fn xii_smallest_solution() {
        let space = expand_family(
            "XII",
            "XII[p=2,q=5,l=3]",
            &params(&[("p", 2), ("q", 5), ("l", 3)]),
        )
        .unwrap();
        // 2E = 1/2 + (p²+q²)/((p²+1)(q²+1))
        assert_eq!(space.two_e, rat(1, 2) + rat(29, 130));
    }

    #[test]
    fn catalog_parse_roundtrip() {
        let text = r#"
# sample
[entry]
id = XIII
kind = family
name = Sp(kn)/Sp(n)^k
params = n, k
constraints = n >= 1; k >= 3
grid = n=1..2, k=3..3
expected_two_e = 1/2 + (2*n+1)/(2*(k*n+1))
expected_lambda1 = (n*k)/(n*k+1)
h_stability = G-unstable
nu_stability = nu-unstable
[end]

[entry]
id = iso-36
kind = isolated
name = F4/Spin(8)
g = F4 sc
h = D4
embedding = matrix : 1,0,0,0 ; 0,1,0,0 ; 0,0,1,0 ; 0,0,0,1
expected_two_e = 8/9
expected_lambda1 = 2/3
[end]
"#;
        let cat = parse_catalog(text).unwrap();
        assert_eq!(cat.entries.len(), 2);
        assert_eq!(cat.family_count(), 1);
        assert_eq!(cat.isolated_count(), 1);
        let xiii = cat.find("XIII").unwrap();
        let grid = xiii.default_instances().unwrap();
        assert_eq!(grid.len(), 2);
        let p = params(&[("n", 1), ("k", 3)]);
        assert_eq!(xiii.expected_two_e(&p).unwrap().unwrap(), rat(7, 8));
        let space = xiii.instantiate(&p).unwrap();
        assert_eq!(space.two_e, rat(7, 8));
        // empty catalog parses to empty list
        assert_eq!(parse_catalog("").unwrap().entries.len(), 0);
    }

    #[test]
    fn f4_identity_matrix_entry() {
        let text = r#"
[entry]
id = iso-36
kind = isolated
name = F4/Spin(8)
g = F4 sc
h = D4
embedding = matrix : 1,0,0,0 ; 0,1,0,0 ; 0,0,1,0 ; 0,0,0,1
expected_two_e = 8/9
[end]
"#;
        let cat = parse_catalog(text).unwrap();
        let e = cat.find("iso-36").unwrap();
        let space = e.instantiate(&Params::new()).unwrap();
        assert_eq!(space.two_e, rat(8, 9));
        assert_eq!(space.dim_p, 24);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "[entry]\nid = x\nbogus-line\n[end]\n";
        match parse_catalog(bad) {
            Err(Error::CatalogParse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
