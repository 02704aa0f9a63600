//! Named scan presets, one per figure dataset. The files live in
//! `crates/cli/presets/` and are compiled into the binary.

use crate::error::CliError;
use crate::spec::RawSpec;

pub const PRESETS: [(&str, &str); 9] = [
    ("fig1", include_str!("../presets/fig1.toml")),
    ("fig2", include_str!("../presets/fig2.toml")),
    ("fig3", include_str!("../presets/fig3.toml")),
    ("fig3_slices", include_str!("../presets/fig3_slices.toml")),
    ("fig4", include_str!("../presets/fig4.toml")),
    ("fig5", include_str!("../presets/fig5.toml")),
    ("fig6", include_str!("../presets/fig6.toml")),
    ("fig7", include_str!("../presets/fig7.toml")),
    ("bh_mode", include_str!("../presets/bh_mode.toml")),
];

pub fn names() -> Vec<&'static str> {
    PRESETS.iter().map(|(n, _)| *n).collect()
}

pub fn load(name: &str) -> Result<RawSpec, CliError> {
    let text = PRESETS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| CliError::invalid(format!("unknown preset '{name}'; available: {}", names().join(", "))))?;
    RawSpec::from_toml(text)
}
