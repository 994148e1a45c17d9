//! Coxeter systems and the group models that realise them.

pub mod classify;
pub mod matrix;
pub mod models;
pub mod presets;
pub mod system;

pub use classify::FiniteType;
pub use matrix::{Bond, CoxeterMatrix};
pub use models::{GroupElement, GroupModel, ModelKind};
pub use presets::{preset, preset_matrix, preset_with_caps, PRESET_NAMES};
pub use system::{Caps, CoxeterSystem};
