//! Concrete LCM-monoid instances and runtime instance selection.

pub mod automaton;
pub mod free;
pub mod grid;
pub mod odometer;
pub mod selfsim;

pub use automaton::{AutomatonAction, AutomatonMonoid};
pub use free::FreeMonoid;
pub use grid::{GridElem, GridMonoid};
pub use odometer::{odometer_monoid, Odometer, OdometerMonoid};
pub use selfsim::{act_restrict, SelfSimilarGroup, ZsElem, ZsMonoid};

use crate::error::{Error, Result};

/// A monoid chosen at runtime from a selection string: `free:<k>`,
/// `grid:<k>`, `odometer`, or `automaton:<path>`.
pub enum Instance {
    Free(FreeMonoid),
    Grid(GridMonoid),
    Odometer(OdometerMonoid),
    Automaton(AutomatonMonoid),
}

impl Instance {
    pub fn parse(spec: &str, group_bound: u32) -> Result<Instance> {
        let bad = |msg: String| Error::Parse { pos: 0, msg };
        if let Some(k) = spec.strip_prefix("free:") {
            let k: u8 = k
                .parse()
                .map_err(|e| bad(format!("free:<k>: {e}")))?;
            if k < 2 {
                return Err(bad("free:<k> needs k >= 2".into()));
            }
            Ok(Instance::Free(FreeMonoid::new(k)))
        } else if let Some(k) = spec.strip_prefix("grid:") {
            let k: usize = k
                .parse()
                .map_err(|e| bad(format!("grid:<k>: {e}")))?;
            if k < 1 {
                return Err(bad("grid:<k> needs k >= 1".into()));
            }
            Ok(Instance::Grid(GridMonoid::new(k)))
        } else if spec == "odometer" {
            Ok(Instance::Odometer(
                odometer_monoid().with_group_bound(group_bound),
            ))
        } else if let Some(path) = spec.strip_prefix("automaton:") {
            let action = AutomatonAction::load(std::path::Path::new(path))?;
            Ok(Instance::Automaton(
                ZsMonoid::new(action).with_group_bound(group_bound),
            ))
        } else {
            Err(bad(format!(
                "unknown monoid {spec:?}; expected free:<k>, grid:<k>, odometer, automaton:<path>"
            )))
        }
    }

    pub fn label(&self) -> String {
        match self {
            Instance::Free(m) => format!("free:{}", m.alphabet()),
            Instance::Grid(m) => format!("grid:{}", m.rank()),
            Instance::Odometer(_) => "odometer".to_string(),
            Instance::Automaton(_) => "automaton".to_string(),
        }
    }

    /// Whether every answer computed through this instance is exact.
    pub fn certified(&self) -> bool {
        !matches!(self, Instance::Automaton(_))
    }
}
