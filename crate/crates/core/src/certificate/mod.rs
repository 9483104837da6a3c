//! The certificate: transcribed data, reconstruction of the index
//! ordering, and exact verification.

mod mapping;
mod tables;
mod verify;

pub use mapping::{
    class_infos, mapping, reconstruct_mapping, ClassInfo, IndexMapping, MappingReconstruction, SquareSearch,
    SquareShape, SquareWitness, SHAPES,
};
pub use tables::{reference_tables, ReferenceTables, K3_REMOVED, K5_INDEX, NUM_CLASSES, TIGHT_INDICES};
pub use verify::{
    finite_soundness, k3_coefficients, main_coefficients, tight_set_characterization, verify_k3, verify_main,
};
