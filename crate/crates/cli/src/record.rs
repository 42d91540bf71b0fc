use serde::{Deserialize, Serialize};

/// What `--json` prints. Integers that may exceed 64 bits and rationals are
/// carried as strings so nothing is rounded.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub command: String,
    /// SHA-256 of the inputs (file contents or arguments), hex.
    pub input_digest: String,
    pub results: Results,
    /// Only present with `--timing`, so that plain output is reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Results {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fox: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub augmented: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub double_fox: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transform: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(rename = "dimH2", skip_serializing_if = "Option::is_none")]
    pub dim_h2: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nullity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cup_matrix: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup_orders: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub almost_conjugate: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjugate: Option<bool>,
    /// Generator images as element labels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epimorphisms: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<CoverRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology_distinguishes: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cup_distinguishes: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverRecord {
    pub index: usize,
    /// In the standard text format.
    pub presentation: String,
    pub homology: String,
    pub b: usize,
    #[serde(rename = "dimH2")]
    pub dim_h2: usize,
    pub rank: usize,
    pub nullity: usize,
}
