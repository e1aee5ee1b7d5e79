//! Search budgets. Exceeding a budget is a hard error, never a wrong answer.

use serde::Serialize;

use crate::error::{Error, Result};

/// Default branch-node budget for the domination branch-and-bound.
pub const DEFAULT_BRANCH_NODES: u64 = 100_000_000;
/// Default edge-subset evaluation budget for bondage searches.
pub const DEFAULT_SUBSET_EVALS: u64 = 100_000_000;

/// Limits for a single top-level search call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub branch_nodes: u64,
    pub subset_evals: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            branch_nodes: DEFAULT_BRANCH_NODES,
            subset_evals: DEFAULT_SUBSET_EVALS,
        }
    }
}

impl Budget {
    /// A budget with both limits set to `limit`.
    pub fn uniform(limit: u64) -> Self {
        Budget {
            branch_nodes: limit,
            subset_evals: limit,
        }
    }
}

/// Consumed budget, reported alongside search results.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BudgetUsage {
    pub branch_nodes: u64,
    pub subset_evals: u64,
}

/// Mutable counter threaded through the exact searches.
#[derive(Debug, Clone)]
pub struct Meter {
    budget: Budget,
    nodes: u64,
    subsets: u64,
}

impl Meter {
    pub fn new(budget: Budget) -> Self {
        Meter {
            budget,
            nodes: 0,
            subsets: 0,
        }
    }

    pub fn with_defaults() -> Self {
        Meter::new(Budget::default())
    }

    pub fn usage(&self) -> BudgetUsage {
        BudgetUsage {
            branch_nodes: self.nodes,
            subset_evals: self.subsets,
        }
    }

    #[inline]
    pub(crate) fn tick_node(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.branch_nodes {
            return Err(Error::SearchBudgetExceeded {
                counter: "branch_nodes",
                limit: self.budget.branch_nodes,
            });
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn tick_subset(&mut self) -> Result<()> {
        self.subsets += 1;
        if self.subsets > self.budget.subset_evals {
            return Err(Error::SearchBudgetExceeded {
                counter: "subset_evals",
                limit: self.budget.subset_evals,
            });
        }
        Ok(())
    }
}

impl Default for Meter {
    fn default() -> Self {
        Meter::with_defaults()
    }
}
