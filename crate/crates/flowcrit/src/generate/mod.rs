//! Generation of the classes of tall canvases and easels.

mod brute;
mod closure;
mod corpus;
mod expand;
mod ops;

pub use brute::{
    brute_force_easels, brute_force_enumerate, brute_force_enumerate_capped, tame_canvases, DEFAULT_BRUTE_CAP,
};
pub use closure::{
    generate_gk, generate_gk_with, generate_gkr, generate_gkr_with, one_step_codes, EaselCorpus, GenOptions,
};
pub use corpus::{read_jsonl, replay_op, write_jsonl, CorpusEntry, GenOp, PreOp, Provenance, Tag};
pub use expand::{apply_substitutions, expansions, substitute, Expansion, ExpansionSpec, Library, Piece, Substitution};
pub use ops::{one_alteration, tip_alteration, tip_reduction, two_alteration, x_alteration, AltItem};
