//! `transteg`: covert-channel laboratory for RTP voice transcoding.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use transteg_cli::commands::{analyze, bandwidth, embed, extract, simulate};
use transteg_cli::config::{self, Settings};
use transteg_cli::{capture_io, finish, CliResult};

#[derive(Parser)]
#[command(
    name = "transteg",
    version,
    about = "Hide data in VoIP streams by transcoding the voice and reclaiming the payload tail",
    after_help = "Exit codes: 0 success, 2 usage error, 3 input error, 4 invariant violation."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the hidden bandwidth a codec substitution yields
    Bandwidth(BandwidthCli),
    /// Simulate a full call and write report, captures, audio, and recovered data
    Simulate(SimulateCli),
    /// Hide a file inside a captured G.711 stream, preserving every header
    Embed(EmbedCli),
    /// Recover a hidden file from a captured stream
    Extract(ExtractCli),
    /// Compare captures from different network localizations for covert activity
    Analyze(AnalyzeCli),
}

#[derive(Args)]
struct BandwidthCli {
    /// Overt codec name (g711u, g711a)
    #[arg(long)]
    overt: String,
    /// Covert codec name (g726-32)
    #[arg(long)]
    covert: String,
    /// Packets per second
    #[arg(long, default_value_t = 50)]
    pps: u32,
    /// Also report total covert bytes for a call of this many seconds
    #[arg(long)]
    duration: Option<u64>,
    /// Emit JSON instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SimulateCli {
    /// Config file (key=value lines); flags override its values
    config: Option<PathBuf>,
    /// Placement scenario: s1, s2, s3, or s4
    #[arg(long)]
    scenario: Option<String>,
    /// Companding law of the overt G.711 stream: mu or a
    #[arg(long)]
    law: Option<String>,
    /// Call length in packets (50/s)
    #[arg(long)]
    packets: Option<u64>,
    /// Seed for all randomized call parameters
    #[arg(long)]
    seed: Option<u64>,
    /// Steganogram given inline
    #[arg(long, conflicts_with = "message_file")]
    message: Option<String>,
    /// Steganogram read from a file
    #[arg(long)]
    message_file: Option<PathBuf>,
    /// Deflate the steganogram before embedding
    #[arg(long, conflicts_with = "no_compress")]
    compress: bool,
    /// Force the steganogram to travel uncompressed
    #[arg(long)]
    no_compress: bool,
    /// Payload masking: off, pre-shared, or bootstrap
    #[arg(long)]
    mask: Option<String>,
    /// Masking key, 32 hex digits
    #[arg(long)]
    key: Option<String>,
    /// Seed for the tail filler stream
    #[arg(long)]
    filler_seed: Option<u64>,
    /// Capture the stream at this tap (repeatable); default: every valid tap
    #[arg(long = "tap")]
    taps: Vec<String>,
    /// Use this WAV as the caller's voice instead of synthesized speech
    #[arg(long)]
    input_wav: Option<PathBuf>,
    /// Advertise this RTP payload type instead of the codec's registered one
    #[arg(long)]
    overt_pt: Option<u8>,
    /// Directory for report.json, tap captures, received.wav, recovered.bin
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Do not print the report to stdout
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct EmbedCli {
    /// Input capture (native or pcap)
    #[arg(long)]
    input: PathBuf,
    /// Output capture path (native format)
    #[arg(long)]
    output: PathBuf,
    /// File to hide
    #[arg(long)]
    stego: PathBuf,
    /// Masking key, 32 hex digits
    #[arg(long)]
    key: Option<String>,
    /// Deflate the steganogram before embedding
    #[arg(long)]
    compress: bool,
    /// Seed for the tail filler stream
    #[arg(long, default_value_t = 0)]
    filler_seed: u64,
    /// Extra payload-type mapping, e.g. 96=g711u (repeatable)
    #[arg(long = "pt-map")]
    pt_map: Vec<String>,
}

#[derive(Args)]
struct ExtractCli {
    /// Input capture (native or pcap)
    #[arg(long)]
    input: PathBuf,
    /// Where to write the recovered steganogram
    #[arg(long)]
    output: PathBuf,
    /// Masking key, 32 hex digits
    #[arg(long)]
    key: Option<String>,
    /// Extra payload-type mapping, e.g. 96=g711u (repeatable)
    #[arg(long = "pt-map")]
    pt_map: Vec<String>,
}

#[derive(Args)]
struct AnalyzeCli {
    /// Captures to compare: tap=path or bare paths taking taps in path order
    #[arg(required = true)]
    captures: Vec<String>,
    /// Detection thresholds as JSON; defaults to the calibrated policy
    #[arg(long)]
    policy: Option<PathBuf>,
    /// Also write the verdict JSON here
    #[arg(long)]
    out: Option<PathBuf>,
    /// Directory for per-tap histogram CSVs
    #[arg(long, default_value = ".")]
    csv_dir: PathBuf,
}

fn simulate_settings(cli: &SimulateCli) -> CliResult<Settings> {
    let mut flags = Settings::default();
    if let Some(name) = &cli.scenario {
        flags.scenario = Some(config::parse_scenario(name)?);
    }
    if let Some(name) = &cli.law {
        flags.law = Some(config::parse_law(name)?);
    }
    flags.packets = cli.packets;
    flags.seed = cli.seed;
    flags.message_text = cli.message.clone();
    flags.message_file = cli.message_file.clone();
    if cli.compress {
        flags.compress = Some(true);
    }
    if cli.no_compress {
        flags.compress = Some(false);
    }
    if let Some(name) = &cli.mask {
        flags.mask_mode = Some(config::parse_mask_mode(name)?);
    }
    if let Some(hex_key) = &cli.key {
        flags.mask_key = Some(config::parse_mask_key(hex_key)?);
    }
    flags.filler_seed = cli.filler_seed;
    if !cli.taps.is_empty() {
        let taps: CliResult<Vec<_>> = cli.taps.iter().map(|t| config::parse_tap(t)).collect();
        flags.taps = Some(taps?);
    }
    flags.input_wav = cli.input_wav.clone();
    flags.overt_pt = cli.overt_pt;
    flags.out_dir = cli.out_dir.clone();
    Ok(flags)
}

fn parse_key(key: &Option<String>) -> CliResult<Option<[u8; 16]>> {
    key.as_deref().map(config::parse_mask_key).transpose()
}

fn parse_pt_maps(args: &[String]) -> CliResult<Vec<(u8, transteg_core::codec::CodecKind)>> {
    args.iter().map(|a| capture_io::parse_pt_mapping(a)).collect()
}

fn dispatch(cli: Cli) -> CliResult {
    match cli.command {
        Command::Bandwidth(args) => bandwidth::run(&bandwidth::BandwidthArgs {
            overt: args.overt,
            covert: args.covert,
            pps: args.pps,
            duration: args.duration,
            json: args.json,
        }),
        Command::Simulate(args) => {
            let flags = simulate_settings(&args)?;
            simulate::run(args.config.as_deref(), flags, args.quiet)
        }
        Command::Embed(args) => embed::run(&embed::EmbedArgs {
            input: args.input,
            output: args.output,
            stego_file: args.stego,
            key: parse_key(&args.key)?,
            compress: args.compress,
            filler_seed: args.filler_seed,
            pt_map: parse_pt_maps(&args.pt_map)?,
        }),
        Command::Extract(args) => extract::run(&extract::ExtractArgs {
            input: args.input,
            output: args.output,
            key: parse_key(&args.key)?,
            pt_map: parse_pt_maps(&args.pt_map)?,
        }),
        Command::Analyze(args) => analyze::run(&analyze::AnalyzeArgs {
            captures: args.captures,
            policy: args.policy,
            out: args.out,
            csv_dir: args.csv_dir,
        }),
    }
}

fn main() -> ExitCode {
    finish(dispatch(Cli::parse()))
}
