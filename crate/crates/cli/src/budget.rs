use std::path::Path;

use clap::Args;
use serde::Deserialize;
use tmarkov::SearchBudget;

/// Budget file keys mirror the `SearchBudget` fields; all are optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct BudgetFile {
    max_strands: Option<usize>,
    max_moves: Option<usize>,
    max_nodes: Option<usize>,
    max_class_sweep: Option<usize>,
}

#[derive(Debug, Args, Clone, Default)]
pub struct BudgetArgs {
    /// TOML file with any of max_strands, max_moves, max_nodes, max_class_sweep.
    #[arg(long, value_name = "FILE")]
    pub config: Option<std::path::PathBuf>,
    #[arg(long = "budget-max-strands", value_name = "N")]
    pub max_strands: Option<usize>,
    #[arg(long = "budget-max-moves", value_name = "N")]
    pub max_moves: Option<usize>,
    #[arg(long = "budget-max-nodes", value_name = "N")]
    pub max_nodes: Option<usize>,
    #[arg(long = "budget-max-class-sweep", value_name = "N")]
    pub max_class_sweep: Option<usize>,
}

fn load(path: &Path) -> Result<BudgetFile, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    toml::from_str(&text).map_err(|e| format!("{}: {}", path.display(), e.message()))
}

impl BudgetArgs {
    /// Defaults, overridden by the config file, overridden by flags.
    pub fn resolve(&self) -> Result<SearchBudget, String> {
        let mut b = SearchBudget::default();
        if let Some(path) = &self.config {
            let f = load(path)?;
            b.max_strands = f.max_strands.unwrap_or(b.max_strands);
            b.max_moves = f.max_moves.unwrap_or(b.max_moves);
            b.max_nodes = f.max_nodes.unwrap_or(b.max_nodes);
            b.max_class_sweep = f.max_class_sweep.unwrap_or(b.max_class_sweep);
        }
        b.max_strands = self.max_strands.unwrap_or(b.max_strands);
        b.max_moves = self.max_moves.unwrap_or(b.max_moves);
        b.max_nodes = self.max_nodes.unwrap_or(b.max_nodes);
        b.max_class_sweep = self.max_class_sweep.unwrap_or(b.max_class_sweep);
        Ok(b)
    }
}
