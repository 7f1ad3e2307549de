use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
///
/// Every intermediate division is exact, so the computation stays in the integers.
/// Row swaps are used when a pivot vanishes.
pub fn bareiss_determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");

    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = false;
    let mut prev = BigInt::one();

    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
        for row in a.iter_mut().skip(k + 1) {
            row[k] = BigInt::zero();
        }
    }

    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    // cofactor expansion, independent of the elimination path
    fn laplace(a: &[Vec<BigInt>]) -> BigInt {
        let n = a.len();
        if n == 0 {
            return BigInt::one();
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &a[0][j] * laplace(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    #[test]
    fn small_cases() {
        assert_eq!(bareiss_determinant(&m(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(bareiss_determinant(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(bareiss_determinant(&m(&[&[0, 0], &[1, 0]])), BigInt::zero());
        assert_eq!(bareiss_determinant(&m(&[&[7]])), BigInt::from(7));
        assert_eq!(bareiss_determinant(&[]), BigInt::one());
    }

    #[test]
    fn agrees_with_cofactor_expansion() {
        let cases = [
            m(&[&[0, 2, -1, 3], &[1, 0, 4, -2], &[5, -3, 0, 0], &[2, 2, 2, 1]]),
            m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]),
            m(&[&[2, 4, 6], &[1, 2, 3], &[0, 1, 5]]),
            m(&[&[1, 1, 0, 0, 0], &[0, 1, 1, 0, 0], &[0, 0, 1, 1, 0], &[0, 0, 0, 1, 1], &[1, 0, 0, 0, 1]]),
        ];
        for c in &cases {
            assert_eq!(bareiss_determinant(c), laplace(c));
        }
    }
}
