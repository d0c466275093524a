//! The explicit step budget that makes the otherwise-partial kernel routines
//! total. One unit is consumed per machine transition of the weak-head
//! reducer (frame push, redex firing, or spine rebuilding step); the typing,
//! conversion and normalization routines thread a single shared budget
//! through all of their mutual calls.

use crate::error::{CheckResult, Error};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fuel {
    remaining: u64,
}

impl Fuel {
    pub fn new(budget: u64) -> Fuel {
        Fuel { remaining: budget }
    }

    /// Consumes one step, or fails with [`Error::OutOfFuel`].
    pub fn tick(&mut self) -> CheckResult<()> {
        if self.remaining == 0 {
            Err(Error::OutOfFuel)
        } else {
            self.remaining -= 1;
            Ok(())
        }
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }
}
