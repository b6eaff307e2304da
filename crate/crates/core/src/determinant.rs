use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact determinant by fraction-free (Bareiss) elimination. Every division
/// is exact, so entries stay integers throughout.
pub(crate) fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Laplace expansion along the first row.
    fn cofactor_det(a: &[Vec<i64>]) -> i64 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * a[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn small_cases() {
        assert_eq!(bareiss(vec![]), BigInt::one());
        assert_eq!(bareiss(m(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(bareiss(m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(bareiss(m(&[&[0, 0], &[1, 0]])), BigInt::zero());
        assert_eq!(
            bareiss(m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])),
            BigInt::from(4)
        );
    }

    #[test]
    fn agrees_with_cofactor_expansion() {
        let mut state: u64 = 7;
        for _ in 0..200 {
            let n = (state % 5) as usize + 1;
            let a: Vec<Vec<i64>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                            ((state >> 33) % 7) as i64 - 3
                        })
                        .collect()
                })
                .collect();
            let big = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            assert_eq!(bareiss(big), BigInt::from(cofactor_det(&a)), "{a:?}");
        }
    }
}
