//! JSON input documents.
//!
//! Every parser takes untrusted text and either returns validated values or
//! an [`Error`]: syntax and schema problems are [`Error::Parse`], shape
//! problems are [`Error::DimensionMismatch`], and so on. Dimensions are
//! capped at [`MAX_DIM`] since the polyhedral conversions are exponential.

use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact::{QMatrix, QVector};
use crate::order::TranslatedWedge;
use crate::riesz::{LinearOperator, RdpInstance};
use crate::wedge::Wedge;

pub const MAX_DIM: usize = 16;

/// Upper limit on the number of xs, ys or wedges in a search.
pub const MAX_ARITY: usize = 16;

fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn check_dim(dim: usize) -> Result<()> {
    if dim > MAX_DIM {
        return Err(Error::Parse(format!("dimension {dim} exceeds the limit {MAX_DIM}")));
    }
    Ok(())
}

fn check_arity(what: &str, k: usize) -> Result<()> {
    if k > MAX_ARITY {
        return Err(Error::Parse(format!("{what} = {k} exceeds the limit {MAX_ARITY}")));
    }
    Ok(())
}

fn check_vectors(dim: usize, vs: &[QVector]) -> Result<()> {
    match vs.iter().find(|v| v.dim() != dim) {
        Some(v) => Err(Error::DimensionMismatch { expected: dim, found: v.dim() }),
        None => Ok(()),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WedgeDoc {
    dim: usize,
    #[serde(default)]
    generators: Option<Vec<QVector>>,
    #[serde(default)]
    halfspaces: Option<Vec<QVector>>,
}

impl WedgeDoc {
    fn build(self) -> Result<Wedge> {
        check_dim(self.dim)?;
        match (self.generators, self.halfspaces) {
            (Some(g), Some(h)) => Wedge::from_both(self.dim, g, h),
            (Some(g), None) => Wedge::from_generators(self.dim, g),
            (None, Some(h)) => Wedge::from_halfspaces(self.dim, h),
            (None, None) => Err(Error::Parse("wedge needs \"generators\" or \"halfspaces\"".into())),
        }
    }
}

fn build_all(docs: Vec<WedgeDoc>) -> Result<Vec<Wedge>> {
    check_arity("number of wedges", docs.len())?;
    docs.into_iter().map(WedgeDoc::build).collect()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WedgeListDoc {
    Bare(Vec<WedgeDoc>),
    Wrapped { wedges: Vec<WedgeDoc> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairDoc {
    apex: QVector,
    wedge: WedgeDoc,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FamilyDoc {
    Bare(Vec<PairDoc>),
    Wrapped { family: Vec<PairDoc> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OperatorDoc {
    rows: usize,
    cols: usize,
    entries: Vec<QVector>,
}

impl OperatorDoc {
    fn build(self) -> Result<LinearOperator> {
        check_dim(self.rows)?;
        check_dim(self.cols)?;
        if self.entries.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.entries.len(),
            });
        }
        Ok(LinearOperator::new(QMatrix::from_rows(self.cols, &self.entries)?))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RdpInstanceDoc {
    wedges: Vec<WedgeDoc>,
    xs: Vec<QVector>,
    ys: Vec<QVector>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RdpSearchDoc {
    wedges: Vec<WedgeDoc>,
    m: usize,
    n: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FsDoc {
    size: usize,
    wedge_indices: Vec<usize>,
    xs: Vec<QVector>,
    ys: Vec<QVector>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RkDoc {
    operators: Vec<OperatorDoc>,
    wedges: Vec<WedgeDoc>,
    codomain: WedgeDoc,
    #[serde(default)]
    x: Option<QVector>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctionalDoc {
    functionals: Vec<QVector>,
    wedges: Vec<WedgeDoc>,
}

/// `{ "dim": n, "generators": [[...]], "halfspaces": [[...]] }`, at least
/// one of the two arrays present.
pub fn parse_wedge(text: &str) -> Result<Wedge> {
    from_json::<WedgeDoc>(text)?.build()
}

/// An array of wedges, bare or as `{ "wedges": [...] }`.
pub fn parse_wedges(text: &str) -> Result<Vec<Wedge>> {
    let docs = match from_json::<WedgeListDoc>(text)? {
        WedgeListDoc::Bare(d) | WedgeListDoc::Wrapped { wedges: d } => d,
    };
    build_all(docs)
}

/// `[{ "apex": [...], "wedge": {...} }]`, bare or as `{ "family": [...] }`.
pub fn parse_family(text: &str) -> Result<Vec<TranslatedWedge>> {
    let docs = match from_json::<FamilyDoc>(text)? {
        FamilyDoc::Bare(d) | FamilyDoc::Wrapped { family: d } => d,
    };
    check_arity("family size", docs.len())?;
    docs.into_iter()
        .map(|p| TranslatedWedge::new(p.apex, p.wedge.build()?))
        .collect()
}

/// `{ "rows": m, "cols": n, "entries": [[...]] }`
pub fn parse_operator(text: &str) -> Result<LinearOperator> {
    from_json::<OperatorDoc>(text)?.build()
}

/// `{ "wedges": [...], "xs": [...], "ys": [...] }`. Only shapes are checked
/// here; the sum and membership conditions belong to the RDP routines.
pub fn parse_rdp_instance(text: &str) -> Result<RdpInstance> {
    let doc = from_json::<RdpInstanceDoc>(text)?;
    check_arity("number of xs", doc.xs.len())?;
    let wedges = build_all(doc.wedges)?;
    let dim = wedges.first().ok_or(Error::EmptyFamily)?.dim();
    for w in &wedges {
        if w.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: w.dim() });
        }
    }
    check_vectors(dim, &doc.xs)?;
    check_vectors(dim, &doc.ys)?;
    Ok(RdpInstance {
        wedges,
        xs: doc.xs,
        ys: doc.ys,
    })
}

#[derive(Clone, Debug)]
pub struct RdpSearchInput {
    pub wedges: Vec<Wedge>,
    pub m: usize,
    pub n: usize,
}

/// `{ "wedges": [...], "m": 2, "n": 2 }`
pub fn parse_rdp_search(text: &str) -> Result<RdpSearchInput> {
    let doc = from_json::<RdpSearchDoc>(text)?;
    check_arity("m", doc.m)?;
    check_arity("n", doc.n)?;
    Ok(RdpSearchInput {
        wedges: build_all(doc.wedges)?,
        m: doc.m,
        n: doc.n,
    })
}

/// An instance over the coordinate wedges {f : f(s) ≥ 0} of ℚ^size.
#[derive(Clone, Debug)]
pub struct FsInput {
    pub size: usize,
    pub wedge_indices: Vec<usize>,
    pub xs: Vec<QVector>,
    pub ys: Vec<QVector>,
}

/// `{ "size": k, "wedge_indices": [...], "xs": [...], "ys": [...] }`
pub fn parse_fs_instance(text: &str) -> Result<FsInput> {
    let doc = from_json::<FsDoc>(text)?;
    check_dim(doc.size)?;
    check_arity("number of xs", doc.xs.len())?;
    check_arity("number of ys", doc.ys.len())?;
    check_vectors(doc.size, &doc.xs)?;
    check_vectors(doc.size, &doc.ys)?;
    Ok(FsInput {
        size: doc.size,
        wedge_indices: doc.wedge_indices,
        xs: doc.xs,
        ys: doc.ys,
    })
}

/// Operators Tᵢ with domain wedges Wᵢ and a codomain wedge V.
#[derive(Clone, Debug)]
pub struct RkInput {
    pub operators: Vec<LinearOperator>,
    pub wedges: Vec<Wedge>,
    pub codomain: Wedge,
    pub x: Option<QVector>,
}

/// `{ "operators": [...], "wedges": [...], "codomain": {...}, "x": [...] }`
/// with `x` optional.
pub fn parse_rk_input(text: &str) -> Result<RkInput> {
    let doc = from_json::<RkDoc>(text)?;
    check_arity("number of operators", doc.operators.len())?;
    Ok(RkInput {
        operators: doc.operators.into_iter().map(OperatorDoc::build).collect::<Result<_>>()?,
        wedges: build_all(doc.wedges)?,
        codomain: doc.codomain.build()?,
        x: doc.x,
    })
}

#[derive(Clone, Debug)]
pub struct FunctionalInput {
    pub functionals: Vec<QVector>,
    pub wedges: Vec<Wedge>,
}

/// `{ "functionals": [[...]], "wedges": [...] }`
pub fn parse_functional_input(text: &str) -> Result<FunctionalInput> {
    let doc = from_json::<FunctionalDoc>(text)?;
    check_arity("number of functionals", doc.functionals.len())?;
    let wedges = build_all(doc.wedges)?;
    if let Some(w) = wedges.first() {
        check_vectors(w.dim(), &doc.functionals)?;
    }
    Ok(FunctionalInput {
        functionals: doc.functionals,
        wedges,
    })
}
