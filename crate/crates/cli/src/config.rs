//! Simulation settings: a simple key=value config file, flag overrides, and
//! the translation into a library `CallConfig`.
//!
//! Precedence is fixed: command-line flags win over config-file values, which
//! win over defaults. Relative paths inside a config file resolve against the
//! file's own directory, so bundled fixture configs work from any working
//! directory; paths given as flags resolve against the working directory as
//! usual.

use std::path::{Path, PathBuf};

use transteg_core::audio;
use transteg_core::codec::Law;
use transteg_core::sim::CallConfig;
use transteg_core::steg::{mask, MaskMode, Scenario, TapPoint};

use crate::{CliError, CliResult};

/// Merged simulation settings; every field optional until `build`.
#[derive(Debug, Clone, Default)]
pub struct Settings {
    pub scenario: Option<Scenario>,
    pub law: Option<Law>,
    pub packets: Option<u64>,
    pub seed: Option<u64>,
    pub message_text: Option<String>,
    pub message_file: Option<PathBuf>,
    pub compress: Option<bool>,
    pub mask_mode: Option<MaskMode>,
    pub mask_key: Option<[u8; mask::MASK_KEY_LEN]>,
    pub filler_seed: Option<u64>,
    pub taps: Option<Vec<TapPoint>>,
    pub input_wav: Option<PathBuf>,
    pub overt_pt: Option<u8>,
    pub out_dir: Option<PathBuf>,
}

impl Settings {
    /// Overlay `over` (stronger) on `self` (weaker); either side may be
    /// partial.
    pub fn merged_with(mut self, over: Settings) -> Settings {
        macro_rules! take {
            ($($field:ident),*) => {
                $(if over.$field.is_some() { self.$field = over.$field; })*
            };
        }
        take!(
            scenario, law, packets, seed, message_text, message_file, compress, mask_mode,
            mask_key, filler_seed, taps, input_wav, overt_pt, out_dir
        );
        self
    }
}

fn parse_bool(value: &str, key: &str) -> CliResult<bool> {
    match value.to_ascii_lowercase().as_str() {
        "true" | "yes" | "on" | "1" => Ok(true),
        "false" | "no" | "off" | "0" => Ok(false),
        other => Err(CliError::usage(format!("config key {key}: not a boolean: {other:?}"))),
    }
}

fn parse_u64(value: &str, key: &str) -> CliResult<u64> {
    value
        .parse()
        .map_err(|_| CliError::usage(format!("config key {key}: not an integer: {value:?}")))
}

pub fn parse_scenario(name: &str) -> CliResult<Scenario> {
    Scenario::from_name(name)
        .ok_or_else(|| CliError::usage(format!("unknown scenario {name:?} (expected s1..s4)")))
}

pub fn parse_law(name: &str) -> CliResult<Law> {
    Law::from_name(name)
        .ok_or_else(|| CliError::usage(format!("unknown companding law {name:?} (expected mu or a)")))
}

pub fn parse_mask_mode(name: &str) -> CliResult<MaskMode> {
    MaskMode::from_name(name).ok_or_else(|| {
        CliError::usage(format!(
            "unknown mask mode {name:?} (expected off, pre-shared, or bootstrap)"
        ))
    })
}

pub fn parse_mask_key(hex_key: &str) -> CliResult<[u8; mask::MASK_KEY_LEN]> {
    mask::key_from_hex(hex_key.trim()).ok_or_else(|| {
        CliError::usage(format!(
            "mask key must be {} hex digits, got {:?}",
            mask::MASK_KEY_LEN * 2,
            hex_key
        ))
    })
}

pub fn parse_tap(name: &str) -> CliResult<TapPoint> {
    TapPoint::from_name(name).ok_or_else(|| {
        CliError::usage(format!(
            "unknown tap {name:?} (expected before_ss, after_ss, or after_sr)"
        ))
    })
}

fn parse_taps(value: &str) -> CliResult<Vec<TapPoint>> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty()).map(parse_tap).collect()
}

fn parse_overt_pt(value: &str) -> CliResult<u8> {
    let pt: u8 = value
        .parse()
        .map_err(|_| CliError::usage(format!("overt_pt: not a payload type: {value:?}")))?;
    if pt > 127 {
        return Err(CliError::usage(format!("overt_pt {pt} out of range (payload types are 7-bit)")));
    }
    Ok(pt)
}

/// Parse a config file's text. `base` is the directory relative paths in the
/// file resolve against.
pub fn parse_config_text(text: &str, base: &Path) -> CliResult<Settings> {
    let mut settings = Settings::default();
    let resolve = |raw: &str| -> PathBuf {
        let p = Path::new(raw);
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            base.join(p)
        }
    };
    for (lineno, raw_line) in text.lines().enumerate() {
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::usage(format!("config line {}: expected key=value, got {line:?}", lineno + 1))
        })?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "scenario" => settings.scenario = Some(parse_scenario(value)?),
            "law" => settings.law = Some(parse_law(value)?),
            "packets" => settings.packets = Some(parse_u64(value, key)?),
            "seed" => settings.seed = Some(parse_u64(value, key)?),
            "message" => settings.message_text = Some(value.to_string()),
            "message_file" => settings.message_file = Some(resolve(value)),
            "compress" => settings.compress = Some(parse_bool(value, key)?),
            "mask_mode" => settings.mask_mode = Some(parse_mask_mode(value)?),
            "mask_key" => settings.mask_key = Some(parse_mask_key(value)?),
            "filler_seed" => settings.filler_seed = Some(parse_u64(value, key)?),
            "taps" => settings.taps = Some(parse_taps(value)?),
            "input_wav" => settings.input_wav = Some(resolve(value)),
            "overt_pt" => settings.overt_pt = Some(parse_overt_pt(value)?),
            "out_dir" => settings.out_dir = Some(resolve(value)),
            other => {
                return Err(CliError::usage(format!(
                    "config line {}: unknown key {other:?}",
                    lineno + 1
                )))
            }
        }
    }
    Ok(settings)
}

/// Load and parse a config file.
pub fn load_config_file(path: &Path) -> CliResult<Settings> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read config {}: {e}", path.display())))?;
    let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    parse_config_text(&text, &base)
}

/// Resolved inputs for one simulated call.
#[derive(Debug)]
pub struct ResolvedCall {
    pub call: CallConfig,
    pub out_dir: PathBuf,
}

/// Turn merged settings into a library call description. Reads the message
/// file and input WAV here so missing inputs fail before any output exists.
pub fn build_call(settings: &Settings) -> CliResult<ResolvedCall> {
    let scenario = settings.scenario.unwrap_or(Scenario::S1);
    let mut call = CallConfig::new(scenario);

    if let Some(law) = settings.law {
        call.law = law;
    }
    if let Some(packets) = settings.packets {
        call.packets = packets;
    }
    if let Some(seed) = settings.seed {
        call.seed = seed;
    }
    if settings.message_text.is_some() && settings.message_file.is_some() {
        return Err(CliError::usage("give either message or message_file, not both"));
    }
    if let Some(text) = &settings.message_text {
        call.message = text.clone().into_bytes();
    }
    if let Some(path) = &settings.message_file {
        call.message = std::fs::read(path)
            .map_err(|e| CliError::input(format!("cannot read message {}: {e}", path.display())))?;
    }
    if let Some(compress) = settings.compress {
        call.compress = compress;
    }
    if let Some(mode) = settings.mask_mode {
        call.mask_mode = mode;
    }
    call.mask_key = settings.mask_key;
    call.filler_seed = settings.filler_seed;
    call.taps = match &settings.taps {
        Some(taps) => taps.clone(),
        None => scenario.valid_taps().to_vec(),
    };
    if let Some(path) = &settings.input_wav {
        let pcm = audio::read_wav(path)
            .map_err(|e| CliError::input(format!("cannot read WAV {}: {e}", path.display())))?;
        call.audio = Some(pcm.samples().to_vec());
    }
    call.claimed_pt = settings.overt_pt;

    let out_dir = settings.out_dir.clone().unwrap_or_else(|| PathBuf::from("."));
    Ok(ResolvedCall { call, out_dir })
}
