//! A point counter that spreads the outermost variable over a rayon pool.

use potts_core::pointcount::{CompiledSystem, DEFAULT_BUDGET};
use potts_core::PointCounter;
use rayon::prelude::*;

/// Environment variable overriding the enumeration budget.
pub const BUDGET_VAR: &str = "POTTS_BUDGET";

#[derive(Clone, Copy, Debug)]
pub struct ParallelCounter {
    pub budget: u64,
}

impl Default for ParallelCounter {
    fn default() -> Self {
        ParallelCounter { budget: DEFAULT_BUDGET }
    }
}

impl ParallelCounter {
    /// Budget from `POTTS_BUDGET`, else the default. An unparsable value is
    /// an error rather than a silent fallback.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(BUDGET_VAR) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|budget| ParallelCounter { budget })
                .map_err(|_| format!("{BUDGET_VAR}={v:?} is not a non-negative integer")),
            Err(_) => Ok(ParallelCounter::default()),
        }
    }
}

impl PointCounter for ParallelCounter {
    fn budget(&self) -> u64 {
        self.budget
    }

    fn zeros(&self, system: &CompiledSystem) -> u64 {
        if system.dim() == 0 {
            return system.zeros();
        }
        (0..system.prime()).into_par_iter().map(|x| system.zeros_with_outer(x)).sum()
    }
}
