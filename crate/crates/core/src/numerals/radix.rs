use serde::Serialize;

use super::NumeralError;

/// Digits most-significant first, one per base. Every value below the
/// product of the bases has exactly one digit vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MixedRadixDigits {
    pub digits: Vec<u64>,
    pub bases: Vec<u64>,
}

/// Product of the bases: the number of representable values.
pub fn capacity(bases: &[u64]) -> u128 {
    bases
        .iter()
        .try_fold(1u128, |acc, &b| acc.checked_mul(b as u128))
        .unwrap_or(u128::MAX)
}

fn check_bases(bases: &[u64]) -> Result<(), NumeralError> {
    if bases.contains(&0) {
        return Err(NumeralError::InvalidDigits("bases must be positive".into()));
    }
    Ok(())
}

pub fn to_mixed_radix(n: u64, bases: &[u64]) -> Result<MixedRadixDigits, NumeralError> {
    check_bases(bases)?;
    let cap = capacity(bases);
    if n as u128 >= cap {
        return Err(NumeralError::Overflow {
            n,
            bases: bases.to_vec(),
            capacity: cap,
        });
    }
    let mut digits = vec![0; bases.len()];
    let mut rest = n;
    for (d, &b) in digits.iter_mut().zip(bases).rev() {
        *d = rest % b;
        rest /= b;
    }
    Ok(MixedRadixDigits {
        digits,
        bases: bases.to_vec(),
    })
}

pub fn from_mixed_radix(d: &MixedRadixDigits) -> Result<u64, NumeralError> {
    check_bases(&d.bases)?;
    if d.digits.len() != d.bases.len() {
        return Err(NumeralError::InvalidDigits(format!(
            "{} digits for {} bases",
            d.digits.len(),
            d.bases.len()
        )));
    }
    let mut n: u64 = 0;
    for (&digit, &base) in d.digits.iter().zip(&d.bases) {
        if digit >= base {
            return Err(NumeralError::InvalidDigits(format!(
                "digit {digit} is not below its base {base}"
            )));
        }
        n = n
            .checked_mul(base)
            .and_then(|x| x.checked_add(digit))
            .ok_or_else(|| NumeralError::InvalidDigits("value exceeds 64 bits".into()))?;
    }
    Ok(n)
}
