use ballean_core::finset::FinSet;
use ballean_core::ideal::{GroundSet, Ideal, IdealDescription};
use serde::de::DeserializeOwned;

use crate::Failure;

/// Where a command reads its ideal from: either a full `--model` object or
/// an `--ideal` description plus `--ground n` / `--horizon h`.
#[derive(clap::Args, Debug, Clone, Default)]
pub struct ModelArgs {
    /// Full model JSON: {"ground": {...}, "ideal": {...}}.
    #[arg(long)]
    pub model: Option<String>,
    /// Ideal description JSON, e.g. {"principal": [0, 1]}.
    #[arg(long)]
    pub ideal: Option<String>,
    /// Finite ground size, used with --ideal.
    #[arg(long)]
    pub ground: Option<u32>,
}

pub fn parse_json<T: DeserializeOwned>(what: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::input(format!("cannot parse {what}: {e}")))
}

pub fn parse_set(what: &str, text: &str) -> Result<FinSet, Failure> {
    parse_json(what, text)
}

impl ModelArgs {
    /// `horizon` doubles as the naturals window when no finite ground is given.
    pub fn resolve(&self, horizon: Option<u32>) -> Result<Ideal, Failure> {
        let ideal: Ideal = match (&self.model, &self.ideal) {
            (Some(_), Some(_)) => return Err(Failure::input("give either --model or --ideal, not both")),
            (Some(model), None) => parse_json("--model", model)?,
            (None, Some(desc)) => {
                let description: IdealDescription = parse_json("--ideal", desc)?;
                let ground = match (self.ground, horizon) {
                    (Some(n), _) => GroundSet::Finite(n),
                    (None, Some(h)) => GroundSet::Naturals { horizon: h },
                    (None, None) => return Err(Failure::input("--ideal needs --ground or --horizon")),
                };
                Ideal { ground, description }
            }
            (None, None) => return Err(Failure::input("a model is required: --model or --ideal")),
        };
        // Re-run the constructor checks on deserialized input.
        Ok(Ideal::new(ideal.ground, ideal.description)?)
    }
}
