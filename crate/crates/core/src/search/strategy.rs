//! Human-readable strategy records, one per Gale diagram, describing the
//! proof plan each driver executes: seed, attachment order, solve steps,
//! label bounds and their provenance. Rendered to `strategies/gNN.txt`
//! so the plans can be audited and diffed.

use std::fmt;

#[derive(Clone, Debug)]
pub struct StrategyDoc {
    pub gale_id: usize,
    pub labels: Vec<u32>,
    pub dim: usize,
    pub outcome: &'static str,
    pub steps: Vec<String>,
}

impl fmt::Display for StrategyDoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(|x| x.to_string()).collect();
        writeln!(f, "strategy G{}", self.gale_id)?;
        writeln!(f, "gale ({}) dimension {}", labels.join(","), self.dim)?;
        writeln!(f, "expected {}", self.outcome)?;
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(f, "step {}: {}", i + 1, s)?;
        }
        Ok(())
    }
}
