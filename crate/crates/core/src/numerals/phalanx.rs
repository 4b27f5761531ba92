use serde::Serialize;

use super::{from_mixed_radix, to_mixed_radix, MixedRadixDigits, NumeralError};

/// Fingers whose phalanxes are counted by the thumb, in order.
pub const FINGERS: [&str; 4] = ["index", "middle", "ring", "little"];

/// Five fingers on the other hand, each worth one dozen.
pub const MAX_GESTURE: u64 = 60;

// dozens, finger, phalanx
const BASES: [u64; 3] = [5, 4, 3];

/// Thumb on a phalanx of one hand, completed dozens held on the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PhalanxGesture {
    pub dozens_complete: u8,
    /// 1 (index) to 4 (little).
    pub finger: u8,
    /// 1 to 3.
    pub phalanx: u8,
}

impl PhalanxGesture {
    pub fn new(dozens_complete: u8, finger: u8, phalanx: u8) -> Result<Self, NumeralError> {
        if dozens_complete > 4 || !(1..=4).contains(&finger) || !(1..=3).contains(&phalanx) {
            return Err(NumeralError::InvalidDigits(format!(
                "no gesture with {dozens_complete} dozens, finger {finger}, phalanx {phalanx}"
            )));
        }
        Ok(PhalanxGesture {
            dozens_complete,
            finger,
            phalanx,
        })
    }

    /// The number this gesture shows.
    pub fn value(&self) -> u64 {
        let d = MixedRadixDigits {
            digits: vec![
                self.dozens_complete as u64,
                self.finger as u64 - 1,
                self.phalanx as u64 - 1,
            ],
            bases: BASES.to_vec(),
        };
        from_mixed_radix(&d).expect("gesture fields are validated") + 1
    }

    pub fn finger_name(&self) -> &'static str {
        FINGERS[self.finger as usize - 1]
    }
}

/// Counting 1..=60: n - 1 in bases (5, 4, 3).
pub fn phalanx_gesture(n: u64) -> Result<PhalanxGesture, NumeralError> {
    if !(1..=MAX_GESTURE).contains(&n) {
        return Err(NumeralError::GestureOutOfRange(n));
    }
    let d = to_mixed_radix(n - 1, &BASES)?.digits;
    Ok(PhalanxGesture {
        dozens_complete: d[0] as u8,
        finger: d[1] as u8 + 1,
        phalanx: d[2] as u8 + 1,
    })
}
