//! Bit-array helpers shared by the wire codec, the key files, and the pad.
//!
//! Bits are packed most-significant-bit first within each byte: bit 0 of a
//! message occupies bit 7 of byte 0. Every packed list in this crate (wire
//! payloads, key files, ciphertexts) uses this one convention.

/// Pack a bit slice MSB-first. The last byte is zero-padded.
pub fn pack(bits: &[bool]) -> Vec<u8> {
    let mut bytes = vec![0u8; bits.len().div_ceil(8)];
    for (i, &bit) in bits.iter().enumerate() {
        if bit {
            bytes[i / 8] |= 0x80 >> (i % 8);
        }
    }
    bytes
}

/// Unpack `bit_len` bits from an MSB-first byte slice.
///
/// Returns `None` if the byte slice is not exactly `ceil(bit_len / 8)` bytes
/// long or a padding bit is set, so a truncated or oversized wire payload is
/// rejected rather than silently reinterpreted.
pub fn unpack(bytes: &[u8], bit_len: usize) -> Option<Vec<bool>> {
    if bytes.len() != bit_len.div_ceil(8) {
        return None;
    }
    let bits: Vec<bool> = (0..bit_len)
        .map(|i| bytes[i / 8] & (0x80 >> (i % 8)) != 0)
        .collect();
    // trailing pad bits must be zero
    if bit_len % 8 != 0 {
        let last = bytes[bytes.len() - 1];
        let mask = 0xffu8 >> (bit_len % 8);
        if last & mask != 0 {
            return None;
        }
    }
    Some(bits)
}

/// Parity of a bit slice: `true` for an odd number of ones.
pub fn parity(bits: &[bool]) -> bool {
    bits.iter().fold(false, |acc, &b| acc ^ b)
}

/// Element-wise XOR. Panics if the lengths differ; callers validate first.
pub fn xor(a: &[bool], b: &[bool]) -> Vec<bool> {
    assert_eq!(a.len(), b.len(), "xor operands must have equal length");
    a.iter().zip(b).map(|(&x, &y)| x ^ y).collect()
}

/// Fraction of positions where the two slices agree.
pub fn agreement(a: &[bool], b: &[bool]) -> f64 {
    assert_eq!(a.len(), b.len(), "agreement operands must have equal length");
    if a.is_empty() {
        return 1.0;
    }
    let same = a.iter().zip(b).filter(|(x, y)| x == y).count();
    same as f64 / a.len() as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn msb_first_order() {
        // bit 0 lands in the high bit of byte 0
        assert_eq!(pack(&[true]), vec![0x80]);
        assert_eq!(pack(&[false, true]), vec![0x40]);
        assert_eq!(
            pack(&[true, false, false, false, false, false, false, false, true]),
            vec![0x80, 0x80]
        );
    }

    #[test]
    fn unpack_rejects_bad_lengths_and_dirty_padding() {
        assert_eq!(unpack(&[0x80], 9), None);
        assert_eq!(unpack(&[0x80, 0x00], 3), None);
        // bit 3 set but only 3 bits claimed
        assert_eq!(unpack(&[0b0001_0000], 3), None);
        assert_eq!(unpack(&[0b0001_0000], 4), Some(vec![false, false, false, true]));
    }

    #[test]
    fn empty_roundtrip() {
        assert_eq!(pack(&[]), Vec::<u8>::new());
        assert_eq!(unpack(&[], 0), Some(vec![]));
    }

    proptest! {
        #[test]
        fn pack_unpack_roundtrip(bits in proptest::collection::vec(any::<bool>(), 0..200)) {
            let bytes = pack(&bits);
            prop_assert_eq!(unpack(&bytes, bits.len()), Some(bits));
        }

        #[test]
        fn xor_is_involutive(a in proptest::collection::vec(any::<bool>(), 0..100)) {
            let b: Vec<bool> = a.iter().map(|&x| !x).collect();
            let x = xor(&a, &b);
            prop_assert_eq!(xor(&x, &b), a);
        }
    }
}
