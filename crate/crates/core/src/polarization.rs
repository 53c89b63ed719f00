//! Types of polarizations on abelian varieties under isogenies.
//!
//! A type `(d1, …, dg)` with `d1 | d2 | … | dg` has `χ = d1 ⋯ dg`. Pulling a
//! polarization back along an isogeny of degree `n` multiplies `χ` by `n`;
//! the new type is taken to be the elementary divisors of
//! `diag(d1, …, dg-1, n·dg)`.

use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};

pub fn is_divisor_chain(t: &[u64]) -> bool {
    !t.is_empty() && t.iter().all(|&d| d > 0) && t.windows(2).all(|w| w[1] % w[0] == 0)
}

/// `χ = d1 ⋯ dg`.
pub fn euler_characteristic(t: &[u64]) -> u64 {
    t.iter().product()
}

/// Elementary divisors of a diagonal matrix.
pub fn elementary_divisors(diag: &[u64]) -> Vec<u64> {
    let mut d = diag.to_vec();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let (g, l) = (d[i].gcd(&d[j]), d[i].lcm(&d[j]));
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

pub fn isogeny_polarization_type(t: &[u64], degree: u64) -> Result<Vec<u64>> {
    if !is_divisor_chain(t) {
        return Err(Error::InvalidArgument(format!(
            "{t:?} is not a chain of positive divisors"
        )));
    }
    if degree == 0 {
        return Err(Error::InvalidArgument(
            "isogeny degree must be positive".into(),
        ));
    }
    let mut scaled = t.to_vec();
    *scaled.last_mut().expect("non-empty") *= degree;
    Ok(elementary_divisors(&scaled))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn principal_to_one_two() {
        assert_eq!(isogeny_polarization_type(&[1, 1], 2).unwrap(), vec![1, 2]);
        assert_eq!(isogeny_polarization_type(&[1, 1], 1).unwrap(), vec![1, 1]);
        assert_eq!(isogeny_polarization_type(&[1, 2], 2).unwrap(), vec![1, 4]);
    }

    #[test]
    fn chi_is_multiplied_by_degree() {
        for t in [vec![1, 1], vec![1, 3], vec![2, 4], vec![1, 2, 6]] {
            for n in 1..6 {
                let out = isogeny_polarization_type(&t, n).unwrap();
                assert!(is_divisor_chain(&out));
                assert_eq!(euler_characteristic(&out), n * euler_characteristic(&t));
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(isogeny_polarization_type(&[2, 3], 2).is_err());
        assert!(isogeny_polarization_type(&[], 2).is_err());
        assert!(isogeny_polarization_type(&[0, 1], 2).is_err());
        assert!(isogeny_polarization_type(&[1, 1], 0).is_err());
    }

    #[test]
    fn elementary_divisors_normalize() {
        assert_eq!(elementary_divisors(&[4, 6]), vec![2, 12]);
        assert_eq!(elementary_divisors(&[3, 1, 2]), vec![1, 1, 6]);
    }
}
