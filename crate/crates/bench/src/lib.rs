//! Shared fixtures for the benchmarks.

use regmod::scen::{assemble_scenario, Scenario, ScenarioSpec};

pub fn scenario(name: &str) -> Scenario {
    let path = format!("{}/../../data/scenarios/{name}.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(path).expect("scenario file");
    assemble_scenario(&ScenarioSpec::from_json(&text).expect("valid scenario")).expect("assembles")
}
