//! JSON input documents.
//!
//! Rationals are written as JSON integers or as strings `"p/q"`; floats are
//! rejected. All indices in these documents are 0-based, like the rest of
//! the library; the CLI converts to 1-based numbering on output.
//!
//! ```
//! use symspace::wire::{parse_doc, PairDoc};
//!
//! let doc: PairDoc = parse_doc(
//!     r#"{"root_system": {"realization": "gl_n", "n": 3}, "involution": "galois-split"}"#,
//! )
//! .unwrap();
//! let pair = doc.build().unwrap();
//! assert_eq!(pair.root_system().num_roots(), 6);
//! ```

use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::chars::CharacterOfT;
use crate::linalg::{QMatrix, Weight};
use crate::pairs::{FixedRootMode, InvolutionSpec, PairSpec};
use crate::rational::{serde_int_vec, serde_q_matrix, Q};
use crate::rootsys::{CartanSpec, Family, Realization, RootSystem};
use crate::{Error, Result};

/// Parses any input document, mapping failures to [`Error::Parse`].
pub fn parse_doc<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn from_value<T: DeserializeOwned>(value: serde_json::Value) -> Result<T> {
    serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))
}

/// `{"family": "B", "rank": 3}`, `{"cartan_matrix": [[2, -1], [-1, 2]]}`
/// or `{"realization": "gl_n", "n": 4}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootSystemDoc {
    pub family: Option<String>,
    pub rank: Option<usize>,
    #[serde(default, deserialize_with = "opt_matrix")]
    pub cartan_matrix: Option<Vec<Vec<Q>>>,
    pub realization: Option<String>,
    pub n: Option<usize>,
}

fn opt_matrix<'de, D: serde::Deserializer<'de>>(
    d: D,
) -> std::result::Result<Option<Vec<Vec<Q>>>, D::Error> {
    serde_q_matrix::deserialize(d).map(Some)
}

impl RootSystemDoc {
    pub fn build(&self) -> Result<RootSystem> {
        let spec = match (&self.family, self.rank, &self.cartan_matrix) {
            (Some(f), Some(rank), None) => Some(CartanSpec::Label {
                family: Family::parse(f)?,
                rank,
            }),
            (None, None, Some(m)) => Some(CartanSpec::Matrix(m.clone())),
            (None, None, None) => None,
            (Some(_), None, None) => return Err(Error::Parse("\"family\" needs \"rank\"".into())),
            (None, Some(_), None) => return Err(Error::Parse("\"rank\" needs \"family\"".into())),
            _ => {
                return Err(Error::Parse(
                    "give either \"family\"/\"rank\" or \"cartan_matrix\", not both".into(),
                ))
            }
        };
        match self.realization.as_deref().unwrap_or("standard") {
            "standard" => {
                if self.n.is_some() {
                    return Err(Error::Parse("\"n\" only applies to the gl_n realization".into()));
                }
                let spec = spec.ok_or_else(|| {
                    Error::Parse("root system needs \"family\"/\"rank\" or \"cartan_matrix\"".into())
                })?;
                RootSystem::build(&spec, Realization::Standard)
            }
            "gl_n" => {
                let n = self
                    .n
                    .ok_or_else(|| Error::Parse("the gl_n realization needs \"n\"".into()))?;
                match spec {
                    Some(spec) => RootSystem::build(&spec, Realization::GlN { n }),
                    None => RootSystem::gl(n),
                }
            }
            other => Err(Error::Parse(format!(
                "unknown realization {other:?}; expected \"standard\" or \"gl_n\""
            ))),
        }
    }
}

/// `"galois-split"`, `"identity"`, or an explicit
/// `{"matrix": [[..]], "epsilon": -1, "mode": "semilinear"}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum InvolutionDoc {
    Named(String),
    Explicit(ExplicitInvolution),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitInvolution {
    #[serde(with = "serde_q_matrix")]
    pub matrix: Vec<Vec<Q>>,
    pub epsilon: i8,
    pub mode: String,
}

impl InvolutionDoc {
    pub fn build(&self, dim: usize) -> Result<InvolutionSpec> {
        match self {
            InvolutionDoc::Named(name) => match name.as_str() {
                "galois-split" => Ok(InvolutionSpec::galois_split(dim)),
                "identity" => Ok(InvolutionSpec::identity(dim)),
                other => Err(Error::Parse(format!(
                    "unknown involution {other:?}; expected \"galois-split\", \"identity\" or an object"
                ))),
            },
            InvolutionDoc::Explicit(e) => InvolutionSpec::new(
                QMatrix::from_rows(e.matrix.clone())?,
                e.epsilon,
                FixedRootMode::parse(&e.mode)?,
            ),
        }
    }

    fn default_label(&self) -> String {
        match self {
            InvolutionDoc::Named(name) => name.clone(),
            InvolutionDoc::Explicit(_) => "custom".into(),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDoc {
    pub root_system: RootSystemDoc,
    pub involution: InvolutionDoc,
    pub label: Option<String>,
}

impl PairDoc {
    pub fn build(&self) -> Result<PairSpec> {
        let rs = self.root_system.build()?;
        let theta = self.involution.build(rs.ambient_dim())?;
        let label = self
            .label
            .clone()
            .unwrap_or_else(|| self.involution.default_label());
        PairSpec::new(rs, theta, label)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(transparent)]
pub struct IntVec(#[serde(with = "serde_int_vec")] pub Vec<BigInt>);

/// `{"lambda_re": ["1/2", 0], "lambda_im": [0, 0], "m": [1, -1]}`; the
/// last two default to zero.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterDoc {
    pub lambda_re: Weight,
    pub lambda_im: Option<Weight>,
    pub m: Option<IntVec>,
}

impl CharacterDoc {
    pub fn build(&self) -> Result<CharacterOfT> {
        let dim = self.lambda_re.dim();
        CharacterOfT::new(
            self.lambda_re.clone(),
            self.lambda_im.clone().unwrap_or_else(|| Weight::zeros(dim)),
            self.m
                .clone()
                .map(|v| v.0)
                .unwrap_or_else(|| vec![BigInt::from(0); dim]),
        )
    }
}
