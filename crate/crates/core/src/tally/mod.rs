//! Computation over concrete tokens: counting, moving, comparing and
//! repeated addition, with every primitive operation metered.

mod machine;
mod procedures;

pub use machine::{Instruction, PileId, TallyMachine, TallyProgram, TallyResult};
pub use procedures::{
    enumerate_splits, equal_split, gavamayana_schedule, repeated_addition_product,
    sadaha_partition, tax_in_kind, ProductResult, RitualEvent, RitualKind, SessionPlan,
    SplitResult, TaxResult, SADAHA_DAYS,
};
