use crate::cup::{cup_nullity, CupSummary};
use crate::error::Error;
use crate::homology::{h1_integral, HomologyReport};
use crate::sunada::coset::{preimage_coset_table, reidemeister_schreier};
use crate::sunada::epi::{find_epimorphisms, EpiSearchOptions, Homomorphism, DEFAULT_BUDGET};
use crate::sunada::group::{is_almost_conjugate, FiniteGroup, Subgroup};
use crate::sunada::tietze::tietze_simplify;
use crate::word::Presentation;

/// Attached to every report: the group-level construction cannot see
/// whether the subgroups act freely on the cover.
pub const FREENESS_CAVEAT: &str =
    "freeness of the H1/H2 actions on the cover is not checked; isospectrality additionally requires it";

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    pub budget: u64,
    /// Use this epimorphism instead of searching for one.
    pub epimorphism: Option<Homomorphism>,
    pub simplify: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { budget: DEFAULT_BUDGET, epimorphism: None, simplify: true }
    }
}

/// Per-subgroup results.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub index: usize,
    pub presentation: Presentation,
    pub homology: HomologyReport,
    pub cup: CupSummary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SunadaReport {
    pub epimorphism: Homomorphism,
    pub covers: [CoverReport; 2],
    pub homology_distinguishes: bool,
    pub cup_distinguishes: bool,
    pub caveat: &'static str,
}

/// Presentations of `φ^{-1}(H_1)` and `φ^{-1}(H_2)` for an epimorphism
/// `φ: P -> G`, with their first homology and cup-product nullity.
pub fn sunada_pipeline(
    p: &Presentation,
    g: &FiniteGroup,
    h1: &Subgroup,
    h2: &Subgroup,
    opts: &PipelineOptions,
) -> Result<SunadaReport, Error> {
    if !is_almost_conjugate(g, h1, h2) {
        return Err(Error::Precondition("subgroups are not almost conjugate".into()));
    }
    let phi = match &opts.epimorphism {
        Some(phi) => {
            phi.validate(p, g)?;
            phi.clone()
        }
        None => find_epimorphisms(p, g, EpiSearchOptions { budget: opts.budget, max_results: 1 })?
            .into_iter()
            .next()
            .ok_or(Error::NoEpimorphism)?,
    };
    let cover = |h: &Subgroup| -> Result<CoverReport, Error> {
        let table = preimage_coset_table(&phi, g, h)?;
        let mut q = reidemeister_schreier(p, &table)?;
        if opts.simplify {
            q = tietze_simplify(&q);
        }
        Ok(CoverReport { index: table.index(), homology: h1_integral(&q), cup: cup_nullity(&q)?, presentation: q })
    };
    let c1 = cover(h1)?;
    let c2 = cover(h2)?;
    Ok(SunadaReport {
        homology_distinguishes: !c1.homology.is_isomorphic(&c2.homology),
        cup_distinguishes: c1.cup.nullity != c2.cup.nullity,
        epimorphism: phi,
        covers: [c1, c2],
        caveat: FREENESS_CAVEAT,
    })
}
