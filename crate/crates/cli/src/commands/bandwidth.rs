//! Hidden-bandwidth arithmetic for a codec substitution.

use serde_json::json;
use transteg_core::codec::{self, CodecKind};

use crate::commands::REPORT_SCHEMA;
use crate::{CliError, CliResult};

pub struct BandwidthArgs {
    pub overt: String,
    pub covert: String,
    pub pps: u32,
    pub duration: Option<u64>,
    pub json: bool,
}

fn codec_by_name(name: &str) -> CliResult<CodecKind> {
    CodecKind::from_name(name)
        .ok_or_else(|| CliError::usage(format!("unknown codec name: {name:?}")))
}

pub fn run(args: &BandwidthArgs) -> CliResult {
    let overt = codec_by_name(&args.overt)?.spec();
    let covert = codec_by_name(&args.covert)?.spec();
    if args.pps == 0 {
        return Err(CliError::usage("--pps must be positive"));
    }

    let bandwidth_bps = codec::steg_bandwidth(&overt, &covert, args.pps);
    if bandwidth_bps == 0 {
        return Err(CliError::usage(format!(
            "covert codec {} does not fit inside {} with room to spare: capacity 0, no usable mapping",
            covert.name, overt.name
        )));
    }
    let total_bytes = args.duration.map(|secs| bandwidth_bps / 8 * secs);

    if args.json {
        let doc = json!({
            "schema": REPORT_SCHEMA,
            "overt": overt.name,
            "covert": covert.name,
            "pps": args.pps,
            "overt_payload_bytes": overt.payload_bytes,
            "covert_payload_bytes": covert.payload_bytes,
            "steg_bandwidth_bps": bandwidth_bps,
            "duration_s": args.duration,
            "total_covert_bytes": total_bytes,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("bandwidth json"));
    } else {
        println!(
            "overt codec:    {} ({} bytes/frame, {} bit/s)",
            overt.name, overt.payload_bytes, overt.bitrate_bps
        );
        println!(
            "covert codec:   {} ({} bytes/frame, {} bit/s)",
            covert.name, covert.payload_bytes, covert.bitrate_bps
        );
        println!("packet rate:    {} packets/s", args.pps);
        println!("steg bandwidth: {bandwidth_bps} bit/s");
        if let (Some(secs), Some(bytes)) = (args.duration, total_bytes) {
            println!("call duration:  {secs} s");
            println!("covert payload: {bytes} bytes");
        }
    }
    Ok(())
}
