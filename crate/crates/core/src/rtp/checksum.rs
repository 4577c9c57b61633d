//! UDP checksum over the IPv4 pseudo-header (RFC 768).

fn ones_complement_add(sum: u32, word: u16) -> u32 {
    sum + word as u32
}

fn fold(mut sum: u32) -> u16 {
    while sum > 0xFFFF {
        sum = (sum & 0xFFFF) + (sum >> 16);
    }
    sum as u16
}

fn sum_words(mut sum: u32, bytes: &[u8]) -> u32 {
    let mut chunks = bytes.chunks_exact(2);
    for w in &mut chunks {
        sum = ones_complement_add(sum, u16::from_be_bytes([w[0], w[1]]));
    }
    if let [last] = chunks.remainder() {
        sum = ones_complement_add(sum, u16::from_be_bytes([*last, 0]));
    }
    sum
}

fn pseudo_header_sum(src: [u8; 4], dst: [u8; 4], udp_len: u16) -> u32 {
    let mut sum = 0u32;
    sum = sum_words(sum, &src);
    sum = sum_words(sum, &dst);
    sum = ones_complement_add(sum, 17); // protocol UDP
    sum = ones_complement_add(sum, udp_len);
    sum
}

/// Compute the UDP checksum for a datagram carrying `payload`, as the sender
/// writes it: one's-complement sum over pseudo-header and segment with the
/// checksum field zero, complemented, with an all-zero result sent as 0xFFFF.
pub fn udp_checksum(
    src: [u8; 4],
    dst: [u8; 4],
    src_port: u16,
    dst_port: u16,
    payload: &[u8],
) -> u16 {
    let udp_len = (8 + payload.len()) as u16;
    let mut sum = pseudo_header_sum(src, dst, udp_len);
    sum = ones_complement_add(sum, src_port);
    sum = ones_complement_add(sum, dst_port);
    sum = ones_complement_add(sum, udp_len);
    // checksum field itself counts as zero
    sum = sum_words(sum, payload);
    let folded = !fold(sum);
    if folded == 0 {
        0xFFFF
    } else {
        folded
    }
}

/// Receiver-side validation: the sum over pseudo-header and segment,
/// including the stored checksum, must fold to 0xFFFF. A stored checksum of
/// zero means "not computed" and is accepted.
pub fn udp_checksum_valid(
    src: [u8; 4],
    dst: [u8; 4],
    src_port: u16,
    dst_port: u16,
    stored: u16,
    payload: &[u8],
) -> bool {
    if stored == 0 {
        return true;
    }
    let udp_len = (8 + payload.len()) as u16;
    let mut sum = pseudo_header_sum(src, dst, udp_len);
    sum = ones_complement_add(sum, src_port);
    sum = ones_complement_add(sum, dst_port);
    sum = ones_complement_add(sum, udp_len);
    sum = ones_complement_add(sum, stored);
    sum = sum_words(sum, payload);
    fold(sum) == 0xFFFF
}
