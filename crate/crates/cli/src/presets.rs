//! Figure-reproduction presets, compiled into the binary.

use anyhow::bail;

pub const NAMES: [&str; 14] = [
    "fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11", "fig12", "fig13", "fig14",
];

const TEXTS: [&str; 14] = [
    include_str!("../presets/fig1.toml"),
    include_str!("../presets/fig2.toml"),
    include_str!("../presets/fig3.toml"),
    include_str!("../presets/fig4.toml"),
    include_str!("../presets/fig5.toml"),
    include_str!("../presets/fig6.toml"),
    include_str!("../presets/fig7.toml"),
    include_str!("../presets/fig8.toml"),
    include_str!("../presets/fig9.toml"),
    include_str!("../presets/fig10.toml"),
    include_str!("../presets/fig11.toml"),
    include_str!("../presets/fig12.toml"),
    include_str!("../presets/fig13.toml"),
    include_str!("../presets/fig14.toml"),
];

/// TOML text of a preset.
pub fn get(name: &str) -> anyhow::Result<&'static str> {
    match NAMES.iter().position(|n| *n == name) {
        Some(i) => Ok(TEXTS[i]),
        None => bail!("unknown preset '{name}'; available: {}", NAMES.join(", ")),
    }
}
