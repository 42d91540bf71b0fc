//! Finite quotients and the Sunada construction: almost conjugate
//! subgroups, epimorphisms onto a finite group, and presentations of the
//! preimages of subgroups.

pub mod coset;
pub mod epi;
pub mod format;
pub mod group;
pub mod pipeline;
pub mod tietze;

pub use coset::{preimage_coset_table, reidemeister_schreier, CosetTable};
pub use epi::{find_epimorphisms, EpiSearchOptions, Homomorphism};
pub use format::{parse_group_file, GroupFile};
pub use group::{
    are_conjugate_subgroups, conjugacy_classes, group_from_permutations, is_almost_conjugate, semidirect_zn,
    FiniteGroup, Subgroup,
};
pub use pipeline::{sunada_pipeline, CoverReport, PipelineOptions, SunadaReport};
pub use tietze::{tietze_simplify, TietzeMove};
